//! Online greedy scheduling by L_τ norm.
//!
//! Each arriving job goes to the machine that minimizes the L_τ norm of all
//! machine loads after the placement. The outer `1/τ` root never changes a
//! comparison, so every routine here works with the τ-th power of the norm,
//! `Σ_k load_k^τ`.
//!
//! Three entry points share that rule:
//!
//! * [`glb_online`] runs it on an arbitrary GLB instance.
//! * [`vs_online_alg1`] runs it on a vector instance directly. A vector first
//!   fills any empty partition; otherwise it evaluates the full norm of every
//!   candidate placement.
//! * [`SpedUpScheduler`] (and [`vs_online_alg2`]) keeps every partition's load
//!   vector and its cached norm, and compares only the increase in a
//!   partition's norm. It selects the same partition as alg1 at integer
//!   τ with `O(m·d)` work per vector instead of `O(m²·d)`.
//!
//! Ties go to the lowest index. Two candidates tie when their objectives differ
//! by at most [`TIE_TOLERANCE`] relative to the resulting total norm, so that
//! rounding noise in mathematically equal objectives cannot pick the winner.

use crate::error::{Error, Result};
use crate::glb::{GlbAssignment, GlbCost, GlbInstance};
use crate::vs::{PartitionLoad, VsAssignment, VsInstance};

/// Relative gap below which two candidate objectives count as tied.
pub const TIE_TOLERANCE: f64 = 1e-12;

/// How the norm exponent is chosen from the machine count `l`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tau {
    /// `τ = ln l`, evaluated in floating point. Needs `l ≥ 2`.
    RealLn,
    /// `τ = ⌈ln l⌉`, at least 1.
    IntCeil,
    /// A fixed exponent. Integral values use exact square-and-multiply.
    Explicit(f64),
}

/// A resolved norm exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Integer(u32),
    Real(f64),
}

impl Exponent {
    pub fn value(self) -> f64 {
        match self {
            Exponent::Integer(t) => f64::from(t),
            Exponent::Real(t) => t,
        }
    }
}

impl Tau {
    /// Resolves the exponent for `machines` machines (`m·d` for vector
    /// instances).
    pub fn exponent(self, machines: usize) -> Result<Exponent> {
        match self {
            Tau::RealLn => {
                if machines < 2 {
                    return Err(Error::InvalidTau(format!(
                        "τ = ln l needs at least 2 machines, got {machines}"
                    )));
                }
                Ok(Exponent::Real((machines as f64).ln()))
            }
            Tau::IntCeil => Ok(Exponent::Integer(ceil_ln(machines))),
            Tau::Explicit(t) => {
                if !(t.is_finite() && t > 0.0) {
                    return Err(Error::InvalidTau(format!("τ must be positive, got {t}")));
                }
                if t.fract() == 0.0 && t <= f64::from(u32::MAX) {
                    Ok(Exponent::Integer(t as u32))
                } else {
                    Ok(Exponent::Real(t))
                }
            }
        }
    }
}

/// `max(1, ⌈ln l⌉)`.
pub fn ceil_ln(machines: usize) -> u32 {
    ((machines.max(1) as f64).ln().ceil() as u32).max(1)
}

/// Operation counters for the scheduling loops.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    /// Element-wise additions of an incoming vector into a load vector.
    pub additions: u64,
    /// Multiplications spent on integer powers.
    pub multiplications: u64,
    /// Number of `x^τ` evaluations.
    pub powers: u64,
    /// Norm-difference subtractions.
    pub subtractions: u64,
    /// Candidate comparisons.
    pub comparisons: u64,
}

/// `a^t` by left-to-right square-and-multiply, returning the value and the
/// number of multiplications, which is `⌊log₂ t⌋ + popcount(t) − 1`.
pub fn fast_pow(a: f64, t: u32) -> Result<(f64, u32)> {
    if t == 0 {
        return Err(Error::InvalidTau("integer power needs t ≥ 1".into()));
    }
    let mut mults = 0u64;
    let value = pow_counted(a, t, &mut mults);
    Ok((value, mults as u32))
}

#[inline]
fn pow_counted(a: f64, t: u32, mults: &mut u64) -> f64 {
    debug_assert!(t >= 1);
    let top = 31 - t.leading_zeros();
    let mut acc = a;
    for bit in (0..top).rev() {
        acc *= acc;
        *mults += 1;
        if (t >> bit) & 1 == 1 {
            acc *= a;
            *mults += 1;
        }
    }
    acc
}

#[inline]
fn power(x: f64, exp: Exponent, counts: &mut OpCounts) -> f64 {
    counts.powers += 1;
    match exp {
        Exponent::Integer(t) => pow_counted(x, t, &mut counts.multiplications),
        Exponent::Real(t) => x.powf(t),
    }
}

fn power_sum(v: &[f64], exp: Exponent, counts: &mut OpCounts) -> f64 {
    v.iter().map(|&x| power(x, exp, counts)).sum()
}

/// `Σ_k v[k]^τ`, the τ-th power of the L_τ norm.
pub fn lnorm_tau(v: &[f64], exp: Exponent) -> f64 {
    power_sum(v, exp, &mut OpCounts::default())
}

/// Lowest-index minimizer with tolerance-based ties.
#[derive(Debug, Clone, Copy)]
struct Best {
    index: usize,
    value: f64,
}

#[inline]
fn improves(candidate: f64, best: f64, scale: f64) -> bool {
    candidate < best - TIE_TOLERANCE * scale.abs()
}

fn check_order(order: &[usize], n: usize) -> Result<()> {
    if order.len() != n {
        return Err(Error::InvalidOrder(format!(
            "order lists {} items, expected {n}",
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &i in order {
        if i >= n {
            return Err(Error::InvalidOrder(format!(
                "item {i} out of range (n = {n})"
            )));
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidOrder(format!("item {i} appears twice")));
        }
    }
    Ok(())
}

/// The identity arrival order `0, 1, …, n−1`.
pub fn given_order(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Greedy L_τ scheduling of a GLB instance, jobs taken in `order`, `τ` resolved
/// against the machine count.
///
/// Machines on which the job would impose an infinite cost are skipped.
pub fn glb_online(inst: &GlbInstance, tau: Tau, order: &[usize]) -> Result<GlbAssignment> {
    let exp = tau.exponent(inst.machines())?;
    glb_online_with(inst, exp, order, &mut OpCounts::default())
}

pub fn glb_online_with(
    inst: &GlbInstance,
    exp: Exponent,
    order: &[usize],
    counts: &mut OpCounts,
) -> Result<GlbAssignment> {
    check_order(order, inst.jobs())?;
    let machines = inst.machines();
    let mut load = vec![0.0f64; machines];
    let mut target = vec![0usize; inst.jobs()];
    for &i in order {
        let mut best: Option<Best> = None;
        'candidates: for j in 0..machines {
            let row = inst.row(i, j);
            let mut total = 0.0;
            for (l, c) in load.iter().zip(row) {
                match c {
                    GlbCost::Finite(c) => total += power(l + c, exp, counts),
                    GlbCost::Infinite => continue 'candidates,
                }
            }
            if !total.is_finite() {
                return Err(Error::Overflow { item: i });
            }
            counts.comparisons += 1;
            match best {
                Some(b) if !improves(total, b.value, b.value) => {}
                _ => {
                    best = Some(Best {
                        index: j,
                        value: total,
                    })
                }
            }
        }
        let Best { index: j, .. } = best.ok_or(Error::NoFiniteChoice { job: i })?;
        for (l, c) in load.iter_mut().zip(inst.row(i, j)) {
            *l += c.to_f64();
        }
        target[i] = j;
    }
    Ok(GlbAssignment::new(target))
}

/// alg1: vectors in `order` fill the lowest-indexed empty partition if
/// one exists, otherwise join the partition minimizing the L_τ norm of all
/// partition loads. `τ` is resolved against `m·d` machines.
pub fn vs_online_alg1(inst: &VsInstance, tau: Tau, order: &[usize]) -> Result<VsAssignment> {
    vs_online_alg1_with(inst, tau, order, &mut OpCounts::default())
}

pub fn vs_online_alg1_with(
    inst: &VsInstance,
    tau: Tau,
    order: &[usize],
    counts: &mut OpCounts,
) -> Result<VsAssignment> {
    check_order(order, inst.n())?;
    let (m, d) = (inst.m(), inst.d());
    let exp = tau.exponent(m * d)?;
    let mut loads = PartitionLoad::zeros(m, d);
    let mut members = vec![0usize; m];
    let mut target = vec![0usize; inst.n()];
    for &i in order {
        let chosen = match members.iter().position(|&c| c == 0) {
            Some(j) => j,
            None => {
                let mut best: Option<Best> = None;
                for j in 0..m {
                    // Norm of every partition's load with vector i added to j.
                    let mut total = 0.0;
                    for (jj, row) in loads.rows().enumerate() {
                        if jj == j {
                            for (&l, &p) in row.iter().zip(inst.cost_row(i, j)) {
                                counts.additions += 1;
                                total += power(l + p, exp, counts);
                            }
                        } else {
                            for &l in row {
                                total += power(l, exp, counts);
                            }
                        }
                    }
                    if !total.is_finite() {
                        return Err(Error::Overflow { item: i });
                    }
                    counts.comparisons += 1;
                    match best {
                        Some(b) if !improves(total, b.value, b.value) => {}
                        _ => {
                            best = Some(Best {
                                index: j,
                                value: total,
                            })
                        }
                    }
                }
                best.expect("m ≥ 1").index
            }
        };
        loads.add(chosen, inst.cost_row(i, chosen));
        members[chosen] += 1;
        target[i] = chosen;
    }
    Ok(VsAssignment::new(target))
}

/// alg2 with `τ = ⌈ln(m·d)⌉`.
pub fn vs_online_alg2(inst: &VsInstance, order: &[usize]) -> Result<VsAssignment> {
    let mut sched = SpedUpScheduler::new(inst);
    sched.run(order)?;
    sched.into_assignment()
}

/// Incremental state of alg2: per-partition load vectors `μ_j` and their
/// cached norms `δ_j = Σ_k μ_j[k]^τ`.
#[derive(Debug, Clone)]
pub struct SpedUpScheduler<'a> {
    inst: &'a VsInstance,
    tau: u32,
    mu: PartitionLoad,
    delta: Vec<f64>,
    members: Vec<usize>,
    target: Vec<Option<usize>>,
    counts: OpCounts,
    scratch: Vec<f64>,
    best: Vec<f64>,
}

impl<'a> SpedUpScheduler<'a> {
    pub fn new(inst: &'a VsInstance) -> Self {
        Self::with_tau(inst, ceil_ln(inst.m() * inst.d())).expect("ceil_ln is at least 1")
    }

    /// Uses an explicit integer exponent instead of `⌈ln(m·d)⌉`.
    pub fn with_tau(inst: &'a VsInstance, tau: u32) -> Result<Self> {
        if tau == 0 {
            return Err(Error::InvalidTau("integer τ must be at least 1".into()));
        }
        let (m, d) = (inst.m(), inst.d());
        Ok(Self {
            inst,
            tau,
            mu: PartitionLoad::zeros(m, d),
            delta: vec![0.0; m],
            members: vec![0; m],
            target: vec![None; inst.n()],
            counts: OpCounts::default(),
            scratch: vec![0.0; d],
            best: vec![0.0; d],
        })
    }

    pub fn tau(&self) -> u32 {
        self.tau
    }

    /// Places vector `i` and returns its partition.
    pub fn place(&mut self, i: usize) -> Result<usize> {
        let n = self.inst.n();
        if i >= n {
            return Err(Error::InvalidOrder(format!(
                "item {i} out of range (n = {n})"
            )));
        }
        if self.target[i].is_some() {
            return Err(Error::InvalidOrder(format!("item {i} was already placed")));
        }
        let exp = Exponent::Integer(self.tau);
        let m = self.inst.m();
        let d = self.inst.d();
        let chosen = if let Some(j) = self.members.iter().position(|&c| c == 0) {
            let p = self.inst.cost_row(i, j);
            let norm = power_sum(p, exp, &mut self.counts);
            if !norm.is_finite() {
                return Err(Error::Overflow { item: i });
            }
            self.mu.add(j, p);
            self.delta[j] = norm;
            j
        } else {
            // Total norm of the current loads, only used to scale the tie test.
            let base: f64 = self.delta.iter().sum();
            let mut best = Best {
                index: 0,
                value: f64::INFINITY,
            };
            let mut best_norm = 0.0;
            for j in 0..m {
                for ((s, &l), &p) in self
                    .scratch
                    .iter_mut()
                    .zip(self.mu.row(j))
                    .zip(self.inst.cost_row(i, j))
                {
                    *s = l + p;
                }
                self.counts.additions += d as u64;
                let norm = power_sum(&self.scratch, exp, &mut self.counts);
                if !norm.is_finite() {
                    return Err(Error::Overflow { item: i });
                }
                let increase = norm - self.delta[j];
                self.counts.subtractions += 1;
                let take = if j == 0 {
                    true
                } else {
                    self.counts.comparisons += 1;
                    improves(increase, best.value, base + best.value)
                };
                if take {
                    best = Best {
                        index: j,
                        value: increase,
                    };
                    std::mem::swap(&mut self.scratch, &mut self.best);
                    best_norm = norm;
                }
            }
            let j = best.index;
            self.mu.set_row(j, &self.best);
            self.delta[j] = best_norm;
            j
        };
        self.members[chosen] += 1;
        self.target[i] = Some(chosen);
        Ok(chosen)
    }

    /// Places every vector of `order` in turn.
    pub fn run(&mut self, order: &[usize]) -> Result<()> {
        check_order(order, self.inst.n())?;
        for &i in order {
            self.place(i)?;
        }
        Ok(())
    }

    pub fn loads(&self) -> &PartitionLoad {
        &self.mu
    }

    /// Cached `Σ_k μ_j[k]^τ`.
    pub fn cached_norm(&self, j: usize) -> f64 {
        self.delta[j]
    }

    pub fn counts(&self) -> OpCounts {
        self.counts
    }

    pub fn partition_of(&self, i: usize) -> Option<usize> {
        self.target[i]
    }

    /// Completed assignment; fails if some vector was never placed.
    pub fn into_assignment(self) -> Result<VsAssignment> {
        self.target
            .iter()
            .enumerate()
            .map(|(i, t)| {
                t.ok_or_else(|| Error::InvalidOrder(format!("item {i} was never placed")))
            })
            .collect::<Result<Vec<_>>>()
            .map(VsAssignment::new)
    }
}

/// Worst-case approximation ratio of greedy L_τ scheduling on `machines`
/// machines.
///
/// * `RealLn`: `e·log₂ l`.
/// * `IntCeil`: `e·log₂ l + e·log₂ e / (ln l + 1)`, which covers the rounding
///   loss of `⌈ln l⌉` over `ln l`.
/// * `Explicit(τ)`: `(τ / ln 2)·l^{1/τ}`.
pub fn ratio_bound(machines: usize, tau: Tau) -> Result<f64> {
    if machines < 2 {
        return Err(Error::TooFewMachines(machines));
    }
    let l = machines as f64;
    let e = std::f64::consts::E;
    Ok(match tau {
        Tau::RealLn => e * l.log2(),
        Tau::IntCeil => e * l.log2() + e * e.log2() / (l.ln() + 1.0),
        Tau::Explicit(t) => {
            if !(t.is_finite() && t > 0.0) {
                return Err(Error::InvalidTau(format!("τ must be positive, got {t}")));
            }
            norm_ratio(l, t)
        }
    })
}

/// `(τ / ln 2)·l^{1/τ}`.
pub fn norm_ratio(machines: f64, tau: f64) -> f64 {
    tau / std::f64::consts::LN_2 * machines.powf(1.0 / tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glb::GlbCost::Finite;

    fn naive_pow(a: f64, t: u32) -> (f64, u32) {
        let mut acc = a;
        for _ in 1..t {
            acc *= a;
        }
        (acc, t - 1)
    }

    #[test]
    fn fast_pow_matches_known_counts() {
        assert_eq!(fast_pow(2.0, 8).unwrap(), (256.0, 3));
        assert_eq!(fast_pow(1.7, 1).unwrap(), (1.7, 0));
        let (v, c) = fast_pow(1.1, 13).unwrap();
        assert_eq!(c, 5);
        let (naive, naive_count) = naive_pow(1.1, 13);
        assert_eq!(naive_count, 12);
        assert!((v - naive).abs() <= 1e-12 * naive);
        assert!(fast_pow(3.0, 0).is_err());
    }

    #[test]
    fn fast_pow_count_formula() {
        for t in 1u32..=64 {
            let (_, c) = fast_pow(1.0001, t).unwrap();
            assert_eq!(c, (31 - t.leading_zeros()) + t.count_ones() - 1, "t = {t}");
        }
    }

    #[test]
    fn lnorm_examples() {
        assert_eq!(lnorm_tau(&[3.0, 4.0], Exponent::Integer(2)), 25.0);
        assert_eq!(lnorm_tau(&[0.0; 5], Exponent::Integer(3)), 0.0);
        assert_eq!(lnorm_tau(&[0.0; 5], Exponent::Real(2.5)), 0.0);
        let naive: f64 = [1.0f64, 2.0, 3.0].iter().map(|x| x * x * x).sum();
        assert_eq!(naive, 36.0);
        assert_eq!(lnorm_tau(&[1.0, 2.0, 3.0], Exponent::Integer(3)), naive);
    }

    #[test]
    fn tau_resolution() {
        assert_eq!(Tau::IntCeil.exponent(60).unwrap(), Exponent::Integer(5));
        assert_eq!(Tau::IntCeil.exponent(1).unwrap(), Exponent::Integer(1));
        assert_eq!(Tau::IntCeil.exponent(2).unwrap(), Exponent::Integer(1));
        assert_eq!(Tau::IntCeil.exponent(3).unwrap(), Exponent::Integer(2));
        assert!(Tau::RealLn.exponent(1).is_err());
        match Tau::RealLn.exponent(60).unwrap() {
            Exponent::Real(t) => assert!((t - 60f64.ln()).abs() < 1e-15),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            Tau::Explicit(3.0).exponent(9).unwrap(),
            Exponent::Integer(3)
        );
        assert_eq!(Tau::Explicit(2.5).exponent(9).unwrap(), Exponent::Real(2.5));
        assert!(Tau::Explicit(0.0).exponent(9).is_err());
        assert!(Tau::Explicit(f64::NAN).exponent(9).is_err());
    }

    fn classic(costs: &[f64], machines: usize) -> GlbInstance {
        let mut flat = Vec::new();
        for &c in costs {
            for j in 0..machines {
                for k in 0..machines {
                    flat.push(Finite(if j == k { c } else { 0.0 }));
                }
            }
        }
        GlbInstance::new(costs.len(), machines, flat).unwrap()
    }

    #[test]
    fn glb_online_two_jobs_by_hand() {
        let inst = classic(&[10.0, 1.0], 2);
        // Job 0 ties (100 vs 100) and takes machine 0; job 1 compares
        // 11² = 121 against 10² + 1² = 101.
        let asg = glb_online(&inst, Tau::Explicit(2.0), &[0, 1]).unwrap();
        assert_eq!(asg.targets(), &[0, 1]);
    }

    #[test]
    fn glb_online_single_job_picks_smallest_row_norm() {
        let inst = GlbInstance::from_nested(&[vec![
            vec![Finite(3.0), Finite(3.0)],
            vec![Finite(4.0), Finite(0.0)],
        ]])
        .unwrap();
        // 9 + 9 = 18 against 16.
        let asg = glb_online(&inst, Tau::Explicit(2.0), &[0]).unwrap();
        assert_eq!(asg.targets(), &[1]);
    }

    #[test]
    fn glb_online_skips_infinite_and_reports_dead_ends() {
        use crate::glb::GlbCost::Infinite;
        let inst = GlbInstance::from_nested(&[vec![
            vec![Infinite, Finite(0.0)],
            vec![Finite(50.0), Finite(50.0)],
        ]])
        .unwrap();
        assert_eq!(
            glb_online(&inst, Tau::IntCeil, &[0]).unwrap().targets(),
            &[1]
        );
        let dead = GlbInstance::from_nested(&[vec![
            vec![Infinite, Finite(0.0)],
            vec![Finite(0.0), Infinite],
        ]])
        .unwrap();
        assert_eq!(
            glb_online(&dead, Tau::IntCeil, &[0]).unwrap_err(),
            Error::NoFiniteChoice { job: 0 }
        );
    }

    #[test]
    fn alg1_scalar_example() {
        let inst = VsInstance::new(2, &[vec![3.0], vec![3.0], vec![2.0]]).unwrap();
        // Third vector: (3+2)² + 3² = 34 = 3² + (3+2)², so the tie goes to P0.
        let asg = vs_online_alg1(&inst, Tau::Explicit(2.0), &[0, 1, 2]).unwrap();
        assert_eq!(asg.targets(), &[0, 1, 0]);
        assert_eq!(crate::vs::vs_makespan(&inst, &asg).unwrap(), 5.0);
    }

    #[test]
    fn alg1_fills_empty_partitions_first() {
        let inst = VsInstance::new(4, &[vec![1.0], vec![9.0], vec![0.0], vec![5.0]]).unwrap();
        let asg = vs_online_alg1(&inst, Tau::IntCeil, &[3, 1, 0, 2]).unwrap();
        assert_eq!(asg.targets(), &[2, 1, 3, 0]);
    }

    #[test]
    fn alg2_matches_alg1_on_scalar_example() {
        let inst = VsInstance::new(2, &[vec![3.0], vec![3.0], vec![2.0]]).unwrap();
        let mut s = SpedUpScheduler::with_tau(&inst, 2).unwrap();
        s.run(&[0, 1, 2]).unwrap();
        assert_eq!(s.into_assignment().unwrap().targets(), &[0, 1, 0]);
    }

    #[test]
    fn alg2_counts_per_vector() {
        let rows: Vec<Vec<f64>> = (0..5)
            .map(|i| (0..4).map(|k| 0.1 + (i * 4 + k) as f64 * 0.01).collect())
            .collect();
        let inst = VsInstance::new(2, &rows).unwrap();
        let mut s = SpedUpScheduler::new(&inst);
        assert_eq!(s.tau(), 3);
        s.run(&given_order(5)).unwrap();
        // Two vectors fill empty partitions; the other three scan m·d entries.
        let c = s.counts();
        assert_eq!(c.additions, 3 * 2 * 4);
        // Empty-rule vectors take d powers, scanning vectors m·d; τ = 3 costs two
        // multiplications per power.
        assert_eq!(c.powers, 2 * 4 + 3 * 2 * 4);
        assert_eq!(c.multiplications, 2 * c.powers);
        assert_eq!(c.comparisons, 3);
    }

    #[test]
    fn scheduler_rejects_bad_orders() {
        let inst = VsInstance::new(2, &[vec![1.0], vec![2.0]]).unwrap();
        assert!(vs_online_alg2(&inst, &[0]).is_err());
        assert!(vs_online_alg2(&inst, &[0, 0]).is_err());
        assert!(vs_online_alg1(&inst, Tau::IntCeil, &[0, 5]).is_err());
        let mut s = SpedUpScheduler::new(&inst);
        s.place(1).unwrap();
        assert!(s.place(1).is_err());
        assert!(s.clone().into_assignment().is_err());
        s.place(0).unwrap();
        assert_eq!(s.into_assignment().unwrap().targets(), &[1, 0]);
    }

    #[test]
    fn overflow_is_reported() {
        let inst = VsInstance::new(1, &[vec![1e200], vec![1e200]]).unwrap();
        let mut s = SpedUpScheduler::with_tau(&inst, 4).unwrap();
        assert_eq!(s.place(0).unwrap_err(), Error::Overflow { item: 0 });
    }

    #[test]
    fn ratio_bounds_for_sixty_machines() {
        let real = ratio_bound(60, Tau::RealLn).unwrap();
        let int = ratio_bound(60, Tau::IntCeil).unwrap();
        assert_eq!(format!("{real:.4}"), "16.0566");
        assert_eq!(format!("{int:.4}"), "16.8264");
        let explicit = ratio_bound(60, Tau::Explicit(60f64.ln())).unwrap();
        assert!((explicit - real).abs() < 1e-9);
        assert!(ratio_bound(1, Tau::RealLn).is_err());
        assert!(ratio_bound(10, Tau::Explicit(-1.0)).is_err());
    }
}
