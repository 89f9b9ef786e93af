//! Python bindings for the vector scheduling core.
//!
//! Instances are immutable wrapper classes; assignments cross the boundary as
//! plain lists of indices. Library errors surface as `ValueError`.

// pyo3 0.22 macro expansion trips this lint on every `PyResult` method.
#![allow(clippy::useless_conversion)]

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use vsglb_core::bench::{generate_one, shuffled_order as core_shuffled_order, GenSpec};
use vsglb_core::io;
use vsglb_core::online::{ceil_ln, given_order, SpedUpScheduler};
use vsglb_core::{
    brute_force_opt_with_budget, encode, glb_online, glb_to_vs, list_schedule, vs_online_alg1,
    vs_to_glb, GlbAssignment, GlbCost, Tau, VsAssignment,
};

fn py_err(e: vsglb_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A vector scheduling instance: `n` cost vectors of dimension `d` to be split
/// among `m` partitions.
#[pyclass(name = "VsInstance", module = "vsglb", frozen)]
#[derive(Clone)]
struct PyVsInstance {
    inner: vsglb_core::VsInstance,
}

#[pymethods]
impl PyVsInstance {
    /// `vectors` is a list of `n` lists of `d` nonnegative numbers.
    #[new]
    fn new(m: usize, vectors: Vec<Vec<f64>>) -> PyResult<Self> {
        let inner = vsglb_core::VsInstance::new(m, &vectors).map_err(py_err)?;
        Ok(Self { inner })
    }

    /// Partition-dependent costs: `costs[i][j]` is vector `i` on partition `j`.
    #[staticmethod]
    fn heterogeneous(costs: Vec<Vec<Vec<f64>>>) -> PyResult<Self> {
        let inner = vsglb_core::VsInstance::heterogeneous(&costs).map_err(py_err)?;
        Ok(Self { inner })
    }

    /// Parses the plain-text instance format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = io::parse_vs_instance(text).map_err(py_err)?;
        Ok(Self { inner })
    }

    fn to_text(&self) -> String {
        io::write_vs_instance(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn d(&self) -> usize {
        self.inner.d()
    }

    #[getter]
    fn is_heterogeneous(&self) -> bool {
        self.inner.is_heterogeneous()
    }

    /// Cost vector of job `i` on partition `j`.
    #[pyo3(signature = (i, j = 0))]
    fn cost_row(&self, i: usize, j: usize) -> PyResult<Vec<f64>> {
        if i >= self.inner.n() || j >= self.inner.m() {
            return Err(PyValueError::new_err(format!(
                "index ({i}, {j}) out of range for n = {}, m = {}",
                self.inner.n(),
                self.inner.m()
            )));
        }
        Ok(self.inner.cost_row(i, j).to_vec())
    }

    /// Per-partition load vectors of `assignment`.
    fn loads(&self, assignment: Vec<usize>) -> PyResult<Vec<Vec<f64>>> {
        let loads = vsglb_core::partition_loads(&self.inner, &VsAssignment::new(assignment))
            .map_err(py_err)?;
        Ok(loads.rows().map(<[f64]>::to_vec).collect())
    }

    /// Largest coordinate over all partition loads.
    fn makespan(&self, assignment: Vec<usize>) -> PyResult<f64> {
        vsglb_core::vs_makespan(&self.inner, &VsAssignment::new(assignment)).map_err(py_err)
    }

    /// Encodes the instance as generalized load balancing.
    fn encode(&self) -> PyReducedInstance {
        PyReducedInstance {
            inner: encode(&self.inner),
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "VsInstance(n={}, m={}, d={}{})",
            self.inner.n(),
            self.inner.m(),
            self.inner.d(),
            if self.inner.is_heterogeneous() {
                ", heterogeneous"
            } else {
                ""
            }
        )
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// The generalized load balancing instance with `m·d` machines obtained from a
/// vector instance. Machine `j·d + k` stands for dimension `k` of partition `j`.
#[pyclass(name = "ReducedInstance", module = "vsglb", frozen)]
struct PyReducedInstance {
    inner: vsglb_core::ReducedInstance,
}

#[pymethods]
impl PyReducedInstance {
    #[getter]
    fn jobs(&self) -> usize {
        self.inner.glb().jobs()
    }

    #[getter]
    fn machines(&self) -> usize {
        self.inner.glb().machines()
    }

    /// Flat indices of the machines that represent whole partitions.
    fn anchors(&self) -> Vec<usize> {
        self.inner.anchors().collect()
    }

    /// `(partition, dimension)` of a flat machine index.
    fn machine(&self, flat: usize) -> PyResult<(usize, usize)> {
        if flat >= self.inner.glb().machines() {
            return Err(PyValueError::new_err(format!(
                "machine {flat} out of range"
            )));
        }
        let pair = self.inner.machine(flat);
        Ok((pair.partition, pair.dimension))
    }

    /// Cost row of job `i` on `machine`; infinite entries become `math.inf`.
    fn cost_row(&self, i: usize, machine: usize) -> PyResult<Vec<f64>> {
        let glb = self.inner.glb();
        if i >= glb.jobs() || machine >= glb.machines() {
            return Err(PyValueError::new_err(format!(
                "index ({i}, {machine}) out of range"
            )));
        }
        Ok(glb.row(i, machine).iter().map(|c| c.to_f64()).collect())
    }

    /// Makespan of a job-to-machine assignment; `math.inf` when some job is on
    /// a forbidden machine.
    fn makespan(&self, assignment: Vec<usize>) -> PyResult<f64> {
        let cost = vsglb_core::glb_makespan(self.inner.glb(), &GlbAssignment::new(assignment))
            .map_err(py_err)?;
        Ok(cost.to_f64())
    }

    /// Writes the plain-text GLB format, with `inf` for forbidden entries.
    fn to_text(&self) -> String {
        io::write_glb_instance(self.inner.glb())
    }

    /// Maps a partition assignment to the anchor machines.
    fn to_glb(&self, assignment: Vec<usize>) -> PyResult<Vec<usize>> {
        vs_to_glb(&VsAssignment::new(assignment), &self.inner)
            .map(GlbAssignment::into_targets)
            .map_err(py_err)
    }

    /// Maps a machine assignment back to partitions. Fails when a job sits on
    /// a non-anchor machine.
    fn to_vs(&self, assignment: Vec<usize>) -> PyResult<Vec<usize>> {
        glb_to_vs(&GlbAssignment::new(assignment), &self.inner)
            .map(VsAssignment::into_targets)
            .map_err(py_err)
    }

    /// Greedy online GLB on the reduced instance.
    #[pyo3(signature = (tau = TauArg::Name("int".into()), order = None))]
    fn solve_online(&self, tau: TauArg, order: Option<Vec<usize>>) -> PyResult<Vec<usize>> {
        let order = order.unwrap_or_else(|| given_order(self.jobs()));
        glb_online(self.inner.glb(), tau.resolve()?, &order)
            .map(GlbAssignment::into_targets)
            .map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "ReducedInstance(jobs={}, machines={})",
            self.jobs(),
            self.machines()
        )
    }
}

/// `"real"` (ln l), `"int"` (⌈ln l⌉) or an explicit positive number.
#[derive(FromPyObject)]
enum TauArg {
    Value(f64),
    Name(String),
}

impl TauArg {
    fn resolve(&self) -> PyResult<Tau> {
        match self {
            TauArg::Value(t) => Ok(Tau::Explicit(*t)),
            TauArg::Name(s) if s == "real" => Ok(Tau::RealLn),
            TauArg::Name(s) if s == "int" => Ok(Tau::IntCeil),
            TauArg::Name(s) => Err(PyValueError::new_err(format!(
                "tau must be \"real\", \"int\" or a number, got {s:?}"
            ))),
        }
    }
}

fn order_or_given(inst: &PyVsInstance, order: Option<Vec<usize>>) -> Vec<usize> {
    order.unwrap_or_else(|| given_order(inst.inner.n()))
}

/// Online greedy over all `m·d` machines of the reduction.
#[pyfunction]
#[pyo3(signature = (inst, tau = TauArg::Name("int".into()), order = None))]
fn alg1(inst: &PyVsInstance, tau: TauArg, order: Option<Vec<usize>>) -> PyResult<Vec<usize>> {
    let order = order_or_given(inst, order);
    vs_online_alg1(&inst.inner, tau.resolve()?, &order)
        .map(VsAssignment::into_targets)
        .map_err(py_err)
}

/// Online greedy comparing norm increases per partition; integer `tau`,
/// defaulting to `⌈ln(m·d)⌉`.
#[pyfunction]
#[pyo3(signature = (inst, tau = None, order = None))]
fn alg2(inst: &PyVsInstance, tau: Option<u32>, order: Option<Vec<usize>>) -> PyResult<Vec<usize>> {
    let machines = inst.inner.m() * inst.inner.d();
    let order = order_or_given(inst, order);
    let mut sched =
        SpedUpScheduler::with_tau(&inst.inner, tau.unwrap_or(ceil_ln(machines))).map_err(py_err)?;
    sched.run(&order).map_err(py_err)?;
    sched
        .into_assignment()
        .map(VsAssignment::into_targets)
        .map_err(py_err)
}

/// Places each vector on the partition with the smallest scalar load.
#[pyfunction]
#[pyo3(signature = (inst, order = None))]
fn list_scheduling(inst: &PyVsInstance, order: Option<Vec<usize>>) -> PyResult<Vec<usize>> {
    let order = order_or_given(inst, order);
    list_schedule(&inst.inner, &order)
        .map(VsAssignment::into_targets)
        .map_err(py_err)
}

/// Exact optimum by exhaustive search. Returns `(makespan, assignment)`.
#[pyfunction]
#[pyo3(signature = (inst, budget = vsglb_core::baselines::DEFAULT_BUDGET))]
fn optimal(inst: &PyVsInstance, budget: u64) -> PyResult<(f64, Vec<usize>)> {
    let res = brute_force_opt_with_budget(&inst.inner, budget).map_err(py_err)?;
    Ok((res.optimum, res.witness.into_targets()))
}

/// Competitive-ratio bound of the greedy for `machines` machines.
#[pyfunction]
#[pyo3(signature = (machines, tau = TauArg::Name("int".into())))]
fn ratio_bound(machines: usize, tau: TauArg) -> PyResult<f64> {
    vsglb_core::ratio_bound(machines, tau.resolve()?).map_err(py_err)
}

/// `a^t` by square-and-multiply. Returns `(value, multiplications)`.
#[pyfunction]
fn fast_pow(a: f64, t: u32) -> PyResult<(f64, u32)> {
    vsglb_core::fast_pow(a, t).map_err(py_err)
}

/// Instance `trial` of the seeded uniform generator.
#[pyfunction]
#[pyo3(signature = (n, m, d, seed, trial = 0))]
fn generate(n: usize, m: usize, d: usize, seed: u64, trial: usize) -> PyResult<PyVsInstance> {
    let spec = GenSpec {
        n,
        m,
        d,
        seed,
        trials: trial + 1,
    };
    let inner = generate_one(&spec, trial).map_err(py_err)?;
    Ok(PyVsInstance { inner })
}

/// Seeded permutation of `0..n`.
#[pyfunction]
fn shuffled_order(n: usize, seed: u64) -> Vec<usize> {
    core_shuffled_order(n, seed)
}

/// Parses the plain-text GLB format and returns its makespan for
/// `assignment`; infinite when a forbidden entry is used.
#[pyfunction]
fn glb_text_makespan(text: &str, assignment: Vec<usize>) -> PyResult<f64> {
    let inst = io::parse_glb_instance(text).map_err(py_err)?;
    vsglb_core::glb_makespan(&inst, &GlbAssignment::new(assignment))
        .map(GlbCost::to_f64)
        .map_err(py_err)
}

#[pymodule]
fn vsglb(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyVsInstance>()?;
    m.add_class::<PyReducedInstance>()?;
    m.add_function(wrap_pyfunction!(alg1, m)?)?;
    m.add_function(wrap_pyfunction!(alg2, m)?)?;
    m.add_function(wrap_pyfunction!(list_scheduling, m)?)?;
    m.add_function(wrap_pyfunction!(optimal, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_bound, m)?)?;
    m.add_function(wrap_pyfunction!(fast_pow, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(shuffled_order, m)?)?;
    m.add_function(wrap_pyfunction!(glb_text_makespan, m)?)?;
    Ok(())
}
