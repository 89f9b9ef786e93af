//! Acceptance suite. Runs every exit criterion, prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vsglb_core::bench::{
    scenario_makespan, scenario_ratio, spearman, Algo, MAKESPAN_DIMS, RATIO_SHAPE,
};
use vsglb_core::online::{ceil_ln, given_order, norm_ratio, SpedUpScheduler};
use vsglb_core::reduction::MachinePair;
use vsglb_core::{
    brute_force_opt, encode, fast_pow, glb_loads, glb_makespan, glb_online, glb_to_vs,
    list_schedule, ratio_bound, vs_makespan, vs_online_alg1, vs_online_alg2, vs_to_glb,
    GlbAssignment, GlbCost, ReducedInstance, Tau, VsAssignment, VsInstance,
};

const SEED: u64 = 20_160_915;
const RANDOM_INSTANCES: usize = 1000;
const REL_TOL: f64 = 1e-9;

/// Worst-case ratios reported for m = 3, d = 20.
const ALG1_REAL_WORST: f64 = 16.0566;
const ALG2_WORST: f64 = 16.8264;
const LIST_WORST: f64 = 21.0;

struct Outcome {
    name: &'static str,
    passed: bool,
    detail: String,
    elapsed: Duration,
}

fn rel_close(a: f64, b: f64) -> bool {
    (a - b).abs() <= REL_TOL * a.abs().max(b.abs())
}

/// Random instance with n ≤ 10, m ≤ 3, d ≤ 20 and uniform [0, 1) entries.
fn random_instance(rng: &mut ChaCha8Rng) -> VsInstance {
    let n = rng.gen_range(1..=10);
    let m = rng.gen_range(1..=3);
    let d = rng.gen_range(1..=20);
    let costs = (0..n * d).map(|_| rng.gen::<f64>()).collect();
    VsInstance::from_flat(n, m, d, costs).unwrap()
}

fn random_assignment(rng: &mut ChaCha8Rng, inst: &VsInstance) -> VsAssignment {
    VsAssignment::new((0..inst.n()).map(|_| rng.gen_range(0..inst.m())).collect())
}

fn shuffled(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut order = given_order(n);
    order.shuffle(rng);
    order
}

/// Closed-form load of every machine for an anchor-only assignment.
fn load_identity_holds(red: &ReducedInstance, asg: &GlbAssignment) -> Result<(), String> {
    let loads = glb_loads(red.glb(), asg).map_err(|e| e.to_string())?;
    let inst = red.origin();
    let d = red.d();
    for t in 0..red.glb().machines() {
        let machine = MachinePair::from_flat(t, d);
        let anchor = machine.anchor().flat(d);
        let expected: f64 = (0..inst.n())
            .filter(|&i| asg.machine_of(i) == anchor)
            .map(|i| inst.cost(i, machine.partition, machine.dimension))
            .sum();
        let got = loads.get(t).finite().ok_or("infinite load")?;
        // Written so that NaN counts as a mismatch.
        let close = (got - expected).abs() <= REL_TOL * got.abs().max(expected.abs());
        if !close {
            return Err(format!(
                "machine {machine}: load {got}, closed form {expected}"
            ));
        }
    }
    Ok(())
}

fn equivalence() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for trial in 0..RANDOM_INSTANCES {
        let inst = random_instance(&mut rng);
        let red = encode(&inst);
        let asg = random_assignment(&mut rng, &inst);
        let vs = vs_makespan(&inst, &asg).map_err(|e| e.to_string())?;
        let lifted = vs_to_glb(&asg, &red).map_err(|e| e.to_string())?;
        let glb = match glb_makespan(red.glb(), &lifted).map_err(|e| e.to_string())? {
            GlbCost::Finite(v) => v,
            GlbCost::Infinite => return Err(format!("trial {trial}: infinite makespan")),
        };
        if !rel_close(vs, glb) {
            return Err(format!("trial {trial}: vs {vs} vs glb {glb}"));
        }
        let back = glb_to_vs(&lifted, &red).map_err(|e| e.to_string())?;
        if back != asg || vs_to_glb(&back, &red).map_err(|e| e.to_string())? != lifted {
            return Err(format!("trial {trial}: round trip is not the identity"));
        }
    }
    Ok(format!(
        "{RANDOM_INSTANCES} instances, objective and round trips exact"
    ))
}

fn anchor_invariant() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut placements = 0usize;
    for trial in 0..RANDOM_INSTANCES {
        let inst = random_instance(&mut rng);
        let red = encode(&inst);
        let order = shuffled(&mut rng, inst.n());
        let asg = glb_online(red.glb(), Tau::IntCeil, &order).map_err(|e| e.to_string())?;
        for (job, &s) in asg.targets().iter().enumerate() {
            if !MachinePair::from_flat(s, red.d()).is_anchor() {
                return Err(format!(
                    "trial {trial}: job {job} on non-anchor machine {s}"
                ));
            }
        }
        placements += inst.n();
    }
    Ok(format!(
        "{RANDOM_INSTANCES} instances, {placements} placements, all on anchors"
    ))
}

fn load_identity() -> Result<String, String> {
    // Replays the runs of the two criteria above with their seeds.
    let mut machines = 0usize;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for trial in 0..RANDOM_INSTANCES {
        let inst = random_instance(&mut rng);
        let red = encode(&inst);
        let asg = random_assignment(&mut rng, &inst);
        let lifted = vs_to_glb(&asg, &red).map_err(|e| e.to_string())?;
        load_identity_holds(&red, &lifted).map_err(|e| format!("random trial {trial}: {e}"))?;
        machines += red.glb().machines();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    for trial in 0..RANDOM_INSTANCES {
        let inst = random_instance(&mut rng);
        let red = encode(&inst);
        let order = shuffled(&mut rng, inst.n());
        let asg = glb_online(red.glb(), Tau::IntCeil, &order).map_err(|e| e.to_string())?;
        load_identity_holds(&red, &asg).map_err(|e| format!("online trial {trial}: {e}"))?;
        machines += red.glb().machines();
    }
    Ok(format!("{machines} machine loads match the closed form"))
}

fn alg1_alg2_identical() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    for trial in 0..RANDOM_INSTANCES {
        let inst = random_instance(&mut rng);
        let order = shuffled(&mut rng, inst.n());
        let a1 = vs_online_alg1(&inst, Tau::IntCeil, &order).map_err(|e| e.to_string())?;
        let a2 = vs_online_alg2(&inst, &order).map_err(|e| e.to_string())?;
        if a1 != a2 {
            return Err(format!(
                "trial {trial}: alg1 {:?} vs alg2 {:?}",
                a1.targets(),
                a2.targets()
            ));
        }
    }
    Ok(format!(
        "{RANDOM_INSTANCES} instances, identical assignments"
    ))
}

fn bound_satisfaction() -> Result<String, String> {
    let report = scenario_ratio(SEED, 100).map_err(|e| e.to_string())?;
    let (_, m, d) = RATIO_SHAPE;
    let computed_real = ratio_bound(m * d, Tau::RealLn).unwrap();
    let computed_int = ratio_bound(m * d, Tau::IntCeil).unwrap();
    if format!("{computed_real:.4}") != "16.0566" || format!("{computed_int:.4}") != "16.8264" {
        return Err(format!(
            "bound formulas give {computed_real} and {computed_int}"
        ));
    }
    let mut worst = Vec::new();
    for (algo, bound) in [
        (Algo::Alg1Real, ALG1_REAL_WORST),
        (Algo::Alg2, ALG2_WORST),
        (Algo::List, LIST_WORST),
    ] {
        let ratios = report.ratios(algo);
        if ratios.len() != 100 {
            return Err(format!("{algo}: {} ratios", ratios.len()));
        }
        let max = ratios.iter().copied().fold(0.0, f64::max);
        let min = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        if max > bound || min < 1.0 - REL_TOL {
            return Err(format!("{algo}: ratios in [{min}, {max}], bound {bound}"));
        }
        worst.push(format!("{algo} max {max:.4} ≤ {bound}"));
    }
    Ok(worst.join(", "))
}

fn rounding_sweep() -> Result<String, String> {
    let e = std::f64::consts::E;
    let mut tightest = f64::INFINITY;
    for l in 2u64..=1_000_000 {
        let lf = l as f64;
        let tau = ceil_ln(l as usize);
        let lhs = norm_ratio(lf, f64::from(tau));
        let rhs = e * lf.log2() + e * e.log2() / (lf.ln() + 1.0);
        if lhs > rhs + 1e-12 {
            return Err(format!("l = {l}: {lhs} > {rhs}"));
        }
        tightest = tightest.min(rhs - lhs);
    }
    Ok(format!("l ∈ [2, 10⁶], smallest margin {tightest:.3e}"))
}

fn fast_pow_counts() -> Result<String, String> {
    for t in 1u32..=64 {
        let (value, mults) = fast_pow(1.01, t).map_err(|e| e.to_string())?;
        let expected = (31 - t.leading_zeros()) + t.count_ones() - 1;
        if mults != expected {
            return Err(format!(
                "t = {t}: {mults} multiplications, expected {expected}"
            ));
        }
        let naive = (1..t).fold(1.01f64, |acc, _| acc * 1.01);
        if !rel_close(value, naive) {
            return Err(format!("t = {t}: value {value} vs {naive}"));
        }
    }
    Ok("t ∈ [1, 64]".into())
}

fn scenario_reproduction() -> Result<String, String> {
    let ratio = scenario_ratio(SEED, 100).map_err(|e| e.to_string())?;
    let r1 = ratio.mean_ratio(Algo::Alg1Real).unwrap();
    let r2 = ratio.mean_ratio(Algo::Alg2).unwrap();
    let rl = ratio.mean_ratio(Algo::List).unwrap();
    // alg1 ≲ alg2: at most 2% above.
    if !(r1 <= 1.02 * r2 && r2 < rl) {
        return Err(format!(
            "mean ratios alg1 {r1:.4}, alg2 {r2:.4}, list {rl:.4}"
        ));
    }

    let started = Instant::now();
    let report = scenario_makespan(SEED, 100).map_err(|e| e.to_string())?;
    let took = started.elapsed();
    if took > Duration::from_secs(300) {
        return Err(format!("makespan scenario took {took:?}"));
    }
    let mut lines = Vec::new();
    for algo in [Algo::Alg1Real, Algo::Alg2, Algo::List] {
        let means: Vec<f64> = MAKESPAN_DIMS
            .iter()
            .map(|&d| report.mean(d, algo).unwrap())
            .collect();
        if means.windows(2).any(|w| w[1] < w[0]) {
            return Err(format!("{algo}: means not non-decreasing in d: {means:?}"));
        }
        let dims: Vec<f64> = MAKESPAN_DIMS.iter().map(|&d| d as f64).collect();
        let rho = spearman(&dims, &means);
        if rho <= 0.0 {
            return Err(format!("{algo}: Spearman {rho}"));
        }
    }
    for &d in &MAKESPAN_DIMS {
        let a1 = report.mean(d, Algo::Alg1Real).unwrap();
        let a2 = report.mean(d, Algo::Alg2).unwrap();
        let list = report.mean(d, Algo::List).unwrap();
        if (a1 - a2).abs() > 0.05 * a1.min(a2) {
            return Err(format!(
                "d = {d}: alg1 {a1:.4} vs alg2 {a2:.4} differ by more than 5%"
            ));
        }
        if !(a1 < list && a2 < list) {
            return Err(format!(
                "d = {d}: alg1 {a1:.4}, alg2 {a2:.4}, list {list:.4}"
            ));
        }
        lines.push(format!("d={d}: {a1:.3}/{a2:.3}/{list:.3}"));
    }
    Ok(format!(
        "ratio means {r1:.4}/{r2:.4}/{rl:.4}; makespan means {} ({took:.1?})",
        lines.join(" ")
    ))
}

fn oracle_soundness() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let mut checked = 0usize;
    for trial in 0..300 {
        let n = rng.gen_range(1..=8);
        let m = rng.gen_range(1..=3);
        let d = rng.gen_range(1..=6);
        let costs = (0..n * d).map(|_| rng.gen::<f64>()).collect();
        let inst = VsInstance::from_flat(n, m, d, costs).unwrap();
        let opt = brute_force_opt(&inst).map_err(|e| e.to_string())?;
        for _ in 0..50 {
            let asg = random_assignment(&mut rng, &inst);
            let v = vs_makespan(&inst, &asg).unwrap();
            if opt.optimum > v {
                return Err(format!("trial {trial}: optimum {} > {v}", opt.optimum));
            }
            checked += 1;
        }
        let order = shuffled(&mut rng, n);
        let list = vs_makespan(&inst, &list_schedule(&inst, &order).unwrap()).unwrap();
        if list > (d as f64 + 1.0) * opt.optimum * (1.0 + REL_TOL) {
            return Err(format!(
                "trial {trial}: list {list} > (d+1)·{}",
                opt.optimum
            ));
        }
    }
    Ok(format!("300 instances, {checked} fuzzed assignments"))
}

fn alg2_total_ops(n: usize, m: usize, d: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    let costs = (0..n * d).map(|_| rng.gen::<f64>()).collect();
    let inst = VsInstance::from_flat(n, m, d, costs).unwrap();
    let mut s = SpedUpScheduler::new(&inst);
    s.run(&given_order(n)).unwrap();
    let c = s.counts();
    c.additions + c.multiplications + c.subtractions + c.comparisons
}

fn complexity_scaling() -> Result<String, String> {
    let (n, m, d) = (1000, 10, 20);
    let base = alg2_total_ops(n, m, d) as f64;
    let mut parts = Vec::new();
    for (label, (nn, mm, dd)) in [
        ("n", (2 * n, m, d)),
        ("m", (n, 2 * m, d)),
        ("d", (n, m, 2 * d)),
    ] {
        let ratio = alg2_total_ops(nn, mm, dd) as f64 / base;
        if !(1.8..=2.2).contains(&ratio) {
            return Err(format!("doubling {label}: operation ratio {ratio:.3}"));
        }
        parts.push(format!("2{label}: {ratio:.3}"));
    }
    // Per scanning vector: m·d additions, at most 2·m·d·log₂τ multiplications.
    let inst = VsInstance::from_flat(50, 4, 6, vec![0.5; 300]).unwrap();
    let mut s = SpedUpScheduler::new(&inst);
    for i in 0..inst.n() {
        let before = s.counts();
        s.place(i).unwrap();
        if i >= inst.m() {
            let after = s.counts();
            let adds = after.additions - before.additions;
            let mults = after.multiplications - before.multiplications;
            let md = (inst.m() * inst.d()) as f64;
            if adds as f64 != md || mults as f64 > 2.0 * md * f64::from(s.tau()).log2() {
                return Err(format!(
                    "vector {i}: {adds} additions, {mults} multiplications"
                ));
            }
        }
    }
    Ok(parts.join(", "))
}

fn run(name: &'static str, limit: Option<Duration>, f: fn() -> Result<String, String>) -> Outcome {
    let started = Instant::now();
    let result = f();
    let elapsed = started.elapsed();
    let (passed, detail) = match (result, limit) {
        (Ok(detail), Some(limit)) if elapsed > limit => (
            false,
            format!("{detail}; took {elapsed:?}, limit {limit:?}"),
        ),
        (Ok(detail), _) => (true, detail),
        (Err(e), _) => (false, e),
    };
    Outcome {
        name,
        passed,
        detail,
        elapsed,
    }
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let outcomes = [
        run(
            "equivalence of objectives and round trips",
            Some(secs(10)),
            equivalence,
        ),
        run(
            "online greedy picks only anchor machines",
            Some(secs(10)),
            anchor_invariant,
        ),
        run("machine loads match the closed form", None, load_identity),
        run(
            "alg1 (⌈ln⌉) and alg2 assignments identical",
            Some(secs(30)),
            alg1_alg2_identical,
        ),
        run(
            "ratios within worst-case bounds (m=3, n=10, d=20)",
            Some(secs(120)),
            bound_satisfaction,
        ),
        run(
            "rounded-exponent bound sweep",
            Some(secs(5)),
            rounding_sweep,
        ),
        run("fast_pow multiplication count", None, fast_pow_counts),
        run(
            "scenario reproduction (seeded, statistical)",
            None,
            scenario_reproduction,
        ),
        run("oracle soundness and list bound", None, oracle_soundness),
        run(
            "alg2 operation counts scale linearly",
            None,
            complexity_scaling,
        ),
    ];
    let mut failed = 0;
    for o in &outcomes {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {} ({:.2?}): {}", o.name, o.elapsed, o.detail);
        if !o.passed {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        outcomes.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
