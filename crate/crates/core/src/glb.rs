//! Generalized load balancing: every job adds a cost to every machine, and the
//! amount depends on which machine the job is assigned to.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};

/// A nonnegative cost that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GlbCost {
    Finite(f64),
    Infinite,
}

impl GlbCost {
    pub const ZERO: GlbCost = GlbCost::Finite(0.0);

    /// Builds a finite cost. Negative or NaN values are rejected; `+inf` maps to
    /// [`GlbCost::Infinite`].
    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || value < 0.0 {
            return Err(Error::InvalidInstance(format!(
                "cost {value} is not a nonnegative number"
            )));
        }
        Ok(if value.is_infinite() {
            GlbCost::Infinite
        } else {
            GlbCost::Finite(value)
        })
    }

    pub fn is_finite(self) -> bool {
        matches!(self, GlbCost::Finite(_))
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, GlbCost::Infinite)
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            GlbCost::Finite(v) => Some(v),
            GlbCost::Infinite => None,
        }
    }

    /// `f64` view, with `Infinite` mapped to `f64::INFINITY`.
    pub fn to_f64(self) -> f64 {
        self.finite().unwrap_or(f64::INFINITY)
    }
}

impl Add for GlbCost {
    type Output = GlbCost;

    fn add(self, rhs: GlbCost) -> GlbCost {
        match (self, rhs) {
            (GlbCost::Finite(a), GlbCost::Finite(b)) => GlbCost::Finite(a + b),
            _ => GlbCost::Infinite,
        }
    }
}

impl PartialOrd for GlbCost {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (GlbCost::Finite(a), GlbCost::Finite(b)) => a.partial_cmp(b),
            (GlbCost::Finite(_), GlbCost::Infinite) => Some(Ordering::Less),
            (GlbCost::Infinite, GlbCost::Finite(_)) => Some(Ordering::Greater),
            (GlbCost::Infinite, GlbCost::Infinite) => Some(Ordering::Equal),
        }
    }
}

impl From<f64> for GlbCost {
    /// Lossy conversion for trusted values: `+inf` becomes `Infinite`.
    fn from(value: f64) -> Self {
        if value.is_infinite() {
            GlbCost::Infinite
        } else {
            GlbCost::Finite(value)
        }
    }
}

impl fmt::Display for GlbCost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlbCost::Finite(v) => write!(f, "{v}"),
            GlbCost::Infinite => f.write_str("inf"),
        }
    }
}

/// Dense `jobs × machines × machines` cost tensor. Entry `(i, j, k)` is the cost
/// job `i` adds to machine `k` when it is assigned to machine `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct GlbInstance {
    jobs: usize,
    machines: usize,
    cost: Vec<GlbCost>,
}

impl GlbInstance {
    pub fn new(jobs: usize, machines: usize, cost: Vec<GlbCost>) -> Result<Self> {
        if jobs == 0 || machines == 0 {
            return Err(Error::InvalidInstance(format!(
                "jobs and machines must be at least 1 (got {jobs} and {machines})"
            )));
        }
        if cost.len() != jobs * machines * machines {
            return Err(Error::InvalidInstance(format!(
                "cost tensor has {} entries, expected {jobs}·{machines}·{machines} = {}",
                cost.len(),
                jobs * machines * machines
            )));
        }
        if let Some(pos) = cost
            .iter()
            .position(|c| matches!(c, GlbCost::Finite(v) if !v.is_finite() || *v < 0.0))
        {
            return Err(Error::InvalidInstance(format!(
                "cost entry {} at flat position {pos} is not a nonnegative number",
                cost[pos]
            )));
        }
        Ok(Self {
            jobs,
            machines,
            cost,
        })
    }

    /// Builds an instance from nested `[job][chosen machine][affected machine]`
    /// values.
    pub fn from_nested(cost: &[Vec<Vec<GlbCost>>]) -> Result<Self> {
        let jobs = cost.len();
        let machines = cost.first().map_or(0, Vec::len);
        let mut flat = Vec::with_capacity(jobs * machines * machines);
        for (i, rows) in cost.iter().enumerate() {
            if rows.len() != machines || rows.iter().any(|r| r.len() != machines) {
                return Err(Error::InvalidInstance(format!(
                    "job {i} does not have a {machines}×{machines} cost block"
                )));
            }
            for r in rows {
                flat.extend_from_slice(r);
            }
        }
        Self::new(jobs, machines, flat)
    }

    pub fn jobs(&self) -> usize {
        self.jobs
    }

    pub fn machines(&self) -> usize {
        self.machines
    }

    /// Costs job `i` adds to every machine when assigned to machine `j`.
    #[inline]
    pub fn row(&self, i: usize, j: usize) -> &[GlbCost] {
        let start = (i * self.machines + j) * self.machines;
        &self.cost[start..start + self.machines]
    }

    #[inline]
    pub fn cost(&self, i: usize, j: usize, k: usize) -> GlbCost {
        self.row(i, j)[k]
    }

    /// Total number of tensor entries.
    pub fn tensor_len(&self) -> usize {
        self.cost.len()
    }

    pub fn raw_costs(&self) -> &[GlbCost] {
        &self.cost
    }
}

/// Total map from job index to machine index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GlbAssignment {
    target: Vec<usize>,
}

impl GlbAssignment {
    pub fn new(target: Vec<usize>) -> Self {
        Self { target }
    }

    pub fn targets(&self) -> &[usize] {
        &self.target
    }

    pub fn into_targets(self) -> Vec<usize> {
        self.target
    }

    pub fn machine_of(&self, job: usize) -> usize {
        self.target[job]
    }

    pub fn validate(&self, inst: &GlbInstance) -> Result<()> {
        if self.target.len() != inst.jobs() {
            return Err(Error::Incompatible(format!(
                "assignment covers {} jobs, instance has {}",
                self.target.len(),
                inst.jobs()
            )));
        }
        if let Some(i) = self.target.iter().position(|&j| j >= inst.machines()) {
            return Err(Error::Incompatible(format!(
                "job {i} assigned to machine {} but only {} machines exist",
                self.target[i],
                inst.machines()
            )));
        }
        Ok(())
    }
}

impl From<Vec<usize>> for GlbAssignment {
    fn from(target: Vec<usize>) -> Self {
        Self::new(target)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MachineLoads {
    load: Vec<GlbCost>,
}

impl MachineLoads {
    pub fn as_slice(&self) -> &[GlbCost] {
        &self.load
    }

    pub fn get(&self, k: usize) -> GlbCost {
        self.load[k]
    }

    pub fn max(&self) -> GlbCost {
        self.load
            .iter()
            .copied()
            .fold(GlbCost::ZERO, |acc, l| if l > acc { l } else { acc })
    }
}

/// Load of every machine: the sum over all jobs, in job order, of the cost each
/// job's chosen machine imposes on it.
pub fn glb_loads(inst: &GlbInstance, asg: &GlbAssignment) -> Result<MachineLoads> {
    asg.validate(inst)?;
    let mut load = vec![GlbCost::ZERO; inst.machines()];
    for (i, &j) in asg.targets().iter().enumerate() {
        for (l, &c) in load.iter_mut().zip(inst.row(i, j)) {
            *l = *l + c;
        }
    }
    Ok(MachineLoads { load })
}

/// Maximum machine load. `Infinite` when any job sits where it imposes an
/// infinite cost.
pub fn glb_makespan(inst: &GlbInstance, asg: &GlbAssignment) -> Result<GlbCost> {
    Ok(glb_loads(inst, asg)?.max())
}
