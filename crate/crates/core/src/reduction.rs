//! Encoding of vector scheduling as generalized load balancing.
//!
//! Every (partition, dimension) pair of the vector instance becomes one machine,
//! laid out at flat index `partition * d + dimension`. The machine with dimension
//! 0 is the partition's anchor. A job assigned to the anchor of partition `j`
//! adds `p_{i,k}` to machine `(j, k)`; assigning it to any other machine of the
//! same partition costs `Infinite` on that partition's machines, and machines of
//! other partitions never see the job.
//!
//! Under that encoding a vector assignment and the anchor-only job assignment it
//! induces have exactly the same objective value.

use std::fmt;

use crate::error::{Error, Result};
use crate::glb::{GlbAssignment, GlbCost, GlbInstance};
use crate::vs::{VsAssignment, VsInstance};

/// A machine of a reduced instance, identified by its partition and dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MachinePair {
    pub partition: usize,
    pub dimension: usize,
}

impl MachinePair {
    pub fn new(partition: usize, dimension: usize) -> Self {
        Self {
            partition,
            dimension,
        }
    }

    pub fn from_flat(index: usize, d: usize) -> Self {
        Self::new(index / d, index % d)
    }

    pub fn flat(self, d: usize) -> usize {
        self.partition * d + self.dimension
    }

    /// Anchor machine of this machine's partition.
    pub fn anchor(self) -> Self {
        Self::new(self.partition, 0)
    }

    pub fn is_anchor(self) -> bool {
        self.dimension == 0
    }

    /// Whether both machines belong to the same partition.
    pub fn same_bracket(self, other: Self) -> bool {
        self.partition == other.partition
    }
}

impl fmt::Display for MachinePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.partition, self.dimension)
    }
}

/// A GLB instance produced by [`encode`], together with the vector instance it
/// came from.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedInstance {
    glb: GlbInstance,
    origin: VsInstance,
}

impl ReducedInstance {
    pub fn glb(&self) -> &GlbInstance {
        &self.glb
    }

    pub fn origin(&self) -> &VsInstance {
        &self.origin
    }

    pub fn m(&self) -> usize {
        self.origin.m()
    }

    pub fn d(&self) -> usize {
        self.origin.d()
    }

    pub fn machine(&self, flat: usize) -> MachinePair {
        MachinePair::from_flat(flat, self.d())
    }

    pub fn flat(&self, machine: MachinePair) -> usize {
        machine.flat(self.d())
    }

    /// Flat indices of the `m` anchor machines.
    pub fn anchors(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.m()).map(move |j| j * self.d())
    }
}

/// Builds the reduced GLB instance: `n` jobs, `m·d` machines, `n·(m·d)²` costs.
pub fn encode(inst: &VsInstance) -> ReducedInstance {
    let (n, m, d) = (inst.n(), inst.m(), inst.d());
    let machines = m * d;
    let mut cost = vec![GlbCost::ZERO; n * machines * machines];
    for i in 0..n {
        for s in 0..machines {
            let chosen = MachinePair::from_flat(s, d);
            let block = &mut cost[(i * machines + s) * machines..][..machines];
            // Only the chosen machine's own partition is affected.
            let bracket = &mut block[chosen.partition * d..(chosen.partition + 1) * d];
            if chosen.is_anchor() {
                for (c, &p) in bracket.iter_mut().zip(inst.cost_row(i, chosen.partition)) {
                    *c = GlbCost::Finite(p);
                }
            } else {
                bracket.fill(GlbCost::Infinite);
            }
        }
    }
    let glb = GlbInstance::new(n, machines, cost).expect("reduced tensor shape is consistent");
    ReducedInstance {
        glb,
        origin: inst.clone(),
    }
}

/// Places every job on the anchor machine of its vector's partition.
pub fn vs_to_glb(asg: &VsAssignment, red: &ReducedInstance) -> Result<GlbAssignment> {
    asg.validate(red.origin())?;
    let d = red.d();
    Ok(GlbAssignment::new(
        asg.targets()
            .iter()
            .map(|&j| MachinePair::new(j, 0).flat(d))
            .collect(),
    ))
}

/// Reads back the vector assignment from an anchor-only job assignment.
///
/// A job on a non-anchor machine has infinite load, so the assignment is
/// rejected with the first offending job rather than repaired.
pub fn glb_to_vs(asg: &GlbAssignment, red: &ReducedInstance) -> Result<VsAssignment> {
    asg.validate(red.glb())?;
    let d = red.d();
    let mut target = Vec::with_capacity(asg.targets().len());
    for (job, &flat) in asg.targets().iter().enumerate() {
        let machine = MachinePair::from_flat(flat, d);
        if !machine.is_anchor() {
            return Err(Error::NonAnchor { job, machine, flat });
        }
        target.push(machine.partition);
    }
    Ok(VsAssignment::new(target))
}
