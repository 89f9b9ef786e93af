//! Reference algorithms: scalar list scheduling and exhaustive search.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::vs::{PartitionLoad, VsAssignment, VsInstance};

/// Default cap on the number of assignments [`brute_force_opt`] may enumerate.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Online list scheduling on the scalar sum of each vector: every vector goes to
/// the partition with the smallest current scalar load, ties to the lowest index.
///
/// On heterogeneous instances the comparison uses the load after adding the
/// vector's partition-specific sum.
pub fn list_schedule(inst: &VsInstance, order: &[usize]) -> Result<VsAssignment> {
    let n = inst.n();
    if order.len() != n {
        return Err(Error::InvalidOrder(format!(
            "order lists {} items, expected {n}",
            order.len()
        )));
    }
    let mut placed = vec![false; n];
    let mut load = vec![0.0f64; inst.m()];
    let mut target = vec![0usize; n];
    for &i in order {
        if i >= n || std::mem::replace(&mut placed[i], true) {
            return Err(Error::InvalidOrder(format!(
                "item {i} is out of range or repeated"
            )));
        }
        let key = |j: usize| {
            if inst.is_heterogeneous() {
                load[j] + inst.cost_row(i, j).iter().sum::<f64>()
            } else {
                load[j]
            }
        };
        let mut best = 0;
        for j in 1..inst.m() {
            if key(j) < key(best) {
                best = j;
            }
        }
        load[best] += inst.cost_row(i, best).iter().sum::<f64>();
        target[i] = best;
    }
    Ok(VsAssignment::new(target))
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub optimum: f64,
    /// Lexicographically first assignment attaining `optimum`.
    pub witness: VsAssignment,
    /// Number of complete assignments evaluated (`m^n`).
    pub explored: u64,
}

/// Exact minimum makespan by enumerating all `m^n` assignments, refusing when
/// that exceeds [`DEFAULT_BUDGET`].
pub fn brute_force_opt(inst: &VsInstance) -> Result<OracleResult> {
    brute_force_opt_with_budget(inst, DEFAULT_BUDGET)
}

pub fn brute_force_opt_with_budget(inst: &VsInstance, budget: u64) -> Result<OracleResult> {
    let required = u32::try_from(inst.n())
        .ok()
        .and_then(|n| (inst.m() as u128).checked_pow(n))
        .unwrap_or(u128::MAX);
    if required > u128::from(budget) {
        return Err(Error::BudgetExceeded { required, budget });
    }
    // The first vector's partition splits the space into independent subtrees.
    let best = (0..inst.m())
        .into_par_iter()
        .map(|first| {
            let mut search = Search::new(inst);
            search.descend(0, first, 0.0);
            search
        })
        .reduce_with(|a, b| {
            // Subtrees arrive in index order, so `a` is lexicographically earlier.
            let explored = a.explored + b.explored;
            let mut winner = if b.best_value < a.best_value { b } else { a };
            winner.explored = explored;
            winner
        })
        .expect("m ≥ 1");
    Ok(OracleResult {
        optimum: best.best_value,
        witness: VsAssignment::new(best.best),
        explored: best.explored,
    })
}

/// Depth-first enumeration in lexicographic order with incremental loads.
struct Search<'a> {
    inst: &'a VsInstance,
    loads: PartitionLoad,
    current: Vec<usize>,
    saved: Vec<f64>,
    best: Vec<usize>,
    best_value: f64,
    explored: u64,
}

impl<'a> Search<'a> {
    fn new(inst: &'a VsInstance) -> Self {
        Self {
            inst,
            loads: PartitionLoad::zeros(inst.m(), inst.d()),
            current: vec![0; inst.n()],
            saved: vec![0.0; inst.n() * inst.d()],
            best: Vec::new(),
            best_value: f64::INFINITY,
            explored: 0,
        }
    }

    /// Places vector `i` on partition `j` and explores everything below.
    fn descend(&mut self, i: usize, j: usize, running_max: f64) {
        let d = self.inst.d();
        self.saved[i * d..(i + 1) * d].copy_from_slice(self.loads.row(j));
        self.loads.add(j, self.inst.cost_row(i, j));
        let max = self
            .loads
            .row(j)
            .iter()
            .copied()
            .fold(running_max, f64::max);
        self.current[i] = j;
        if i + 1 == self.inst.n() {
            self.explored += 1;
            if max < self.best_value {
                self.best_value = max;
                self.best.clone_from(&self.current);
            }
        } else {
            for next in 0..self.inst.m() {
                self.descend(i + 1, next, max);
            }
        }
        let (saved, loads) = (&self.saved[i * d..(i + 1) * d], &mut self.loads);
        loads.set_row(j, saved);
    }
}
