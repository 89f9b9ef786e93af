//! Online vector scheduling through generalized load balancing.
//!
//! * [`vs`]: vector scheduling instances, assignments and makespan.
//! * [`glb`]: generalized load balancing instances with infinite costs.
//! * [`reduction`]: the encoding of a vector instance as a GLB instance and the
//!   solution maps between the two.
//! * [`online`]: the greedy L_τ-norm schedulers and their ratio bounds.
//! * [`baselines`]: list scheduling and the exhaustive optimum.
//! * [`bench`]: seeded generation and the simulation scenarios.
//! * [`io`]: text formats for instances and assignments.

pub mod baselines;
pub mod bench;
pub mod error;
pub mod glb;
pub mod io;
pub mod online;
pub mod reduction;
pub mod vs;

pub use baselines::{brute_force_opt, brute_force_opt_with_budget, list_schedule, OracleResult};
pub use error::{Error, Result};
pub use glb::{glb_loads, glb_makespan, GlbAssignment, GlbCost, GlbInstance, MachineLoads};
pub use online::{
    fast_pow, glb_online, lnorm_tau, ratio_bound, vs_online_alg1, vs_online_alg2, Exponent,
    OpCounts, SpedUpScheduler, Tau,
};
pub use reduction::{encode, glb_to_vs, vs_to_glb, MachinePair, ReducedInstance};
pub use vs::{partition_loads, vs_makespan, PartitionLoad, VsAssignment, VsInstance};
