//! Vector scheduling instances, assignments and makespan evaluation.
//!
//! An instance holds `n` nonnegative `d`-dimensional cost vectors that are split
//! among `m` partitions. The load of a partition is the component-wise sum of its
//! vectors and the makespan is the largest component over all partition loads.
//!
//! In the heterogeneous generalization every vector carries one cost vector per
//! partition, so the load it adds depends on where it is placed.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct VsInstance {
    n: usize,
    m: usize,
    d: usize,
    /// Row-major costs: `n * d` entries when homogeneous, `n * m * d` when
    /// heterogeneous (vector-major, then partition).
    costs: Vec<f64>,
    heterogeneous: bool,
}

fn check_entries(costs: &[f64]) -> Result<()> {
    if let Some(pos) = costs.iter().position(|c| !c.is_finite() || *c < 0.0) {
        return Err(Error::InvalidInstance(format!(
            "cost entry {} at flat position {pos} is not a finite nonnegative number",
            costs[pos]
        )));
    }
    Ok(())
}

fn check_counts(n: usize, m: usize, d: usize) -> Result<()> {
    if n == 0 || m == 0 || d == 0 {
        return Err(Error::InvalidInstance(format!(
            "n, m and d must all be at least 1 (got n={n}, m={m}, d={d})"
        )));
    }
    Ok(())
}

impl VsInstance {
    /// Builds a homogeneous instance from `n` vectors of equal length.
    pub fn new(m: usize, vectors: &[Vec<f64>]) -> Result<Self> {
        let n = vectors.len();
        let d = vectors.first().map_or(0, Vec::len);
        check_counts(n, m, d)?;
        if let Some(i) = vectors.iter().position(|v| v.len() != d) {
            return Err(Error::InvalidInstance(format!(
                "vector {i} has {} entries, expected {d}",
                vectors[i].len()
            )));
        }
        Self::from_flat(n, m, d, vectors.concat())
    }

    /// Builds a homogeneous instance from `n * d` row-major costs.
    pub fn from_flat(n: usize, m: usize, d: usize, costs: Vec<f64>) -> Result<Self> {
        check_counts(n, m, d)?;
        if costs.len() != n * d {
            return Err(Error::InvalidInstance(format!(
                "expected {} cost entries, got {}",
                n * d,
                costs.len()
            )));
        }
        check_entries(&costs)?;
        Ok(Self {
            n,
            m,
            d,
            costs,
            heterogeneous: false,
        })
    }

    /// Builds a heterogeneous instance: `costs[i][j]` is the vector that item `i`
    /// adds to partition `j`.
    pub fn heterogeneous(costs: &[Vec<Vec<f64>>]) -> Result<Self> {
        let n = costs.len();
        let m = costs.first().map_or(0, Vec::len);
        let d = costs
            .first()
            .and_then(|row| row.first())
            .map_or(0, Vec::len);
        check_counts(n, m, d)?;
        let mut flat = Vec::with_capacity(n * m * d);
        for (i, per_partition) in costs.iter().enumerate() {
            if per_partition.len() != m {
                return Err(Error::InvalidInstance(format!(
                    "vector {i} has costs for {} partitions, expected {m}",
                    per_partition.len()
                )));
            }
            for (j, v) in per_partition.iter().enumerate() {
                if v.len() != d {
                    return Err(Error::InvalidInstance(format!(
                        "cost of vector {i} on partition {j} has {} entries, expected {d}",
                        v.len()
                    )));
                }
                flat.extend_from_slice(v);
            }
        }
        Self::heterogeneous_from_flat(n, m, d, flat)
    }

    /// Heterogeneous counterpart of [`VsInstance::from_flat`] with `n * m * d` entries.
    pub fn heterogeneous_from_flat(n: usize, m: usize, d: usize, costs: Vec<f64>) -> Result<Self> {
        check_counts(n, m, d)?;
        if costs.len() != n * m * d {
            return Err(Error::InvalidInstance(format!(
                "expected {} heterogeneous cost entries, got {}",
                n * m * d,
                costs.len()
            )));
        }
        check_entries(&costs)?;
        Ok(Self {
            n,
            m,
            d,
            costs,
            heterogeneous: true,
        })
    }

    /// Expands a homogeneous instance into the equivalent heterogeneous one.
    pub fn to_heterogeneous(&self) -> Self {
        if self.heterogeneous {
            return self.clone();
        }
        let mut flat = Vec::with_capacity(self.n * self.m * self.d);
        for i in 0..self.n {
            for _ in 0..self.m {
                flat.extend_from_slice(self.vector(i));
            }
        }
        Self {
            costs: flat,
            heterogeneous: true,
            ..*self
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn is_heterogeneous(&self) -> bool {
        self.heterogeneous
    }

    /// Cost vector item `i` adds when placed on partition `j`.
    #[inline]
    pub fn cost_row(&self, i: usize, j: usize) -> &[f64] {
        let start = if self.heterogeneous {
            (i * self.m + j) * self.d
        } else {
            i * self.d
        };
        &self.costs[start..start + self.d]
    }

    #[inline]
    pub fn cost(&self, i: usize, j: usize, k: usize) -> f64 {
        self.cost_row(i, j)[k]
    }

    /// The homogeneous vector `p_i`. For heterogeneous instances this is the cost
    /// on partition 0.
    pub fn vector(&self, i: usize) -> &[f64] {
        self.cost_row(i, 0)
    }

    /// Raw row-major cost storage.
    pub fn raw_costs(&self) -> &[f64] {
        &self.costs
    }

    /// Largest single cost entry. A lower bound on every makespan.
    pub fn max_entry(&self) -> f64 {
        self.costs.iter().copied().fold(0.0, f64::max)
    }
}

/// Total map from vector index to partition index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VsAssignment {
    target: Vec<usize>,
}

impl VsAssignment {
    pub fn new(target: Vec<usize>) -> Self {
        Self { target }
    }

    pub fn targets(&self) -> &[usize] {
        &self.target
    }

    pub fn into_targets(self) -> Vec<usize> {
        self.target
    }

    pub fn len(&self) -> usize {
        self.target.len()
    }

    pub fn is_empty(&self) -> bool {
        self.target.is_empty()
    }

    pub fn partition_of(&self, i: usize) -> usize {
        self.target[i]
    }

    pub fn validate(&self, inst: &VsInstance) -> Result<()> {
        if self.target.len() != inst.n() {
            return Err(Error::Incompatible(format!(
                "assignment covers {} vectors, instance has {}",
                self.target.len(),
                inst.n()
            )));
        }
        if let Some(i) = self.target.iter().position(|&j| j >= inst.m()) {
            return Err(Error::Incompatible(format!(
                "vector {i} assigned to partition {} but only {} partitions exist",
                self.target[i],
                inst.m()
            )));
        }
        Ok(())
    }
}

impl From<Vec<usize>> for VsAssignment {
    fn from(target: Vec<usize>) -> Self {
        Self::new(target)
    }
}

/// Per-partition load vectors, `m` rows of `d` entries.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionLoad {
    m: usize,
    d: usize,
    load: Vec<f64>,
}

impl PartitionLoad {
    pub fn zeros(m: usize, d: usize) -> Self {
        Self {
            m,
            d,
            load: vec![0.0; m * d],
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn row(&self, j: usize) -> &[f64] {
        &self.load[j * self.d..(j + 1) * self.d]
    }

    pub fn get(&self, j: usize, k: usize) -> f64 {
        self.load[j * self.d + k]
    }

    /// Adds `cost` component-wise into partition `j`.
    pub fn add(&mut self, j: usize, cost: &[f64]) {
        for (l, c) in self.load[j * self.d..(j + 1) * self.d].iter_mut().zip(cost) {
            *l += c;
        }
    }

    pub fn set_row(&mut self, j: usize, values: &[f64]) {
        self.load[j * self.d..(j + 1) * self.d].copy_from_slice(values);
    }

    pub fn max(&self) -> f64 {
        self.load.iter().copied().fold(0.0, f64::max)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.load.chunks(self.d)
    }
}

/// Materializes the load vector of every partition. Vectors are summed in index
/// order.
pub fn partition_loads(inst: &VsInstance, asg: &VsAssignment) -> Result<PartitionLoad> {
    asg.validate(inst)?;
    let mut loads = PartitionLoad::zeros(inst.m(), inst.d());
    for (i, &j) in asg.targets().iter().enumerate() {
        loads.add(j, inst.cost_row(i, j));
    }
    Ok(loads)
}

/// Maximum over partitions and dimensions of the summed load.
pub fn vs_makespan(inst: &VsInstance, asg: &VsAssignment) -> Result<f64> {
    Ok(partition_loads(inst, asg)?.max())
}
