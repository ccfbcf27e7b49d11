//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Built with `harness = false`, so `cargo test --test acceptance` prints the
//! table even when everything passes and exits nonzero on any failure.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use qcat::verify::{self, ccc_matrix, universal_sweep};
use qcat::{
    approx_property, ccc_identity_check, ccc_witness, q, ApproxCase, Interval, IntervalSet, Report, SuitableSet,
    TNorm, UnitRational, WorkspaceConfig,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn passed(report: &Report) -> Result<(), String> {
    match report.cases.iter().find(|c| c.status != qcat::Status::Pass) {
        None => Ok(()),
        Some(c) => Err(format!("{} / {} failed: {}", report.suite, c.name, serde_json::to_string(c).unwrap())),
    }
}

fn count(report: &Report, name: &str) -> usize {
    report.cases.iter().filter(|c| c.name == name).count()
}

fn interval(lo: UnitRational, hi: UnitRational) -> Interval {
    Interval::new(lo, hi).expect("ordered")
}

fn m_set_closed_forms() -> Outcome {
    let expected = [
        (TNorm::godel(), IntervalSet::unit()),
        (TNorm::product(), IntervalSet::points([q(0, 1), q(1, 1)])),
        (
            TNorm::lukasiewicz(),
            IntervalSet::new([interval(q(0, 1), q(1, 2)), Interval::point(q(1, 1))]),
        ),
        (
            TNorm::remark4(),
            IntervalSet::new([Interval::point(q(0, 1)), interval(q(1, 2), q(3, 4)), Interval::point(q(1, 1))]),
        ),
    ];
    for (t, m) in &expected {
        let got = t.m_set();
        if &got != m {
            return Err(format!("{t}: M = {got}, expected {m}"));
        }
    }
    Ok("4 norms, exact equality".into())
}

fn ccc_equivalence() -> Outcome {
    let cfg = WorkspaceConfig::default();
    let matrix = ccc_matrix(&cfg);
    let l3 = IntervalSet::points([q(0, 1), q(1, 2), q(1, 1)]);
    let crisp = IntervalSet::points([q(0, 1), q(1, 1)]);
    let has = |k: &IntervalSet| matrix.iter().any(|(_, kk, _)| kk == k);
    if matrix.len() < 6 || !has(&l3) || !has(&crisp) {
        return Err(format!("test matrix too thin: {} pairs", matrix.len()));
    }
    let grids = matrix.iter().filter(|(_, k, _)| k.finite_points().is_some_and(|p| p.len() > 3)).count();
    if grids == 0 {
        return Err("no full grid K in the matrix".into());
    }
    let report = verify::ccc_equivalence(&cfg);
    passed(&report)?;
    let triples: usize = matrix.iter().map(|(_, _, g)| g.len().pow(3)).sum();
    Ok(format!("{} (t-norm, K) pairs, {grids} grid sets, {triples} triples", matrix.len()))
}

fn witness_construction() -> Outcome {
    let t = TNorm::lukasiewicz();
    let k = IntervalSet::points([q(0, 1), q(1, 4), q(1, 2), q(3, 4), q(1, 1)]);
    let grid = k.finite_points().expect("finite");
    let f = ccc_identity_check(&t, &k, &grid)
        .map_err(|e| e.to_string())?
        .failure
        .ok_or("identity unexpectedly holds")?;
    if (&f.u, &f.v, &f.r) != (&q(3, 4), &q(3, 4), &q(1, 2)) {
        return Err(format!("first failing triple is ({}, {}, {})", f.u, f.v, f.r));
    }
    let w = ccc_witness(Arc::new(t.clone()), f.u, f.v, f.r).map_err(|e| e.to_string())?;
    // ((u∧r)&v) ∨ ((v∧r)&u), evaluated directly
    let direct = t.eval(&w.u.meet(&w.r), &w.v).join(&t.eval(&w.v.meet(&w.r), &w.u));
    if w.lhs != q(1, 2) || w.rhs != q(1, 4) || w.d_fin != direct || w.d_fin != w.rhs || !w.is_consistent() {
        return Err(format!("lhs {} rhs {} d_fin {} direct {direct}", w.lhs, w.rhs, w.d_fin));
    }
    if let Some(v) = w.lifted.validate() {
        return Err(format!("lifted structure is not a category: {v:?}"));
    }
    Ok("(3/4,3/4,1/2): lhs 1/2, rhs 1/4, d_fin 1/4".into())
}

fn power_object_laws() -> Outcome {
    let report = verify::power_existence(&WorkspaceConfig::default());
    passed(&report)?;
    let pairs = count(&report, "power_object_laws");
    if pairs < 20 {
        return Err(format!("only {pairs} random pairs"));
    }
    Ok(format!("{pairs} random pairs"))
}

fn exponential_law() -> Outcome {
    let cfg = WorkspaceConfig {
        max_maps: 10_000,
        ..WorkspaceConfig::default()
    };
    let report = verify::exponential_law(&cfg);
    passed(&report)?;
    let triples = count(&report, "curry_uncurry");
    if triples < 10 {
        return Err(format!("only {triples} triples"));
    }
    Ok(format!("{triples} triples, function spaces capped at 10^4 maps"))
}

fn quarters() -> Vec<UnitRational> {
    (0..=4).map(|k| q(k, 4)).collect()
}

fn universal_properties() -> Outcome {
    let t = Arc::new(TNorm::lukasiewicz());
    let l3 = IntervalSet::points([q(0, 1), q(1, 2), q(1, 1)]);
    let shapes = [
        ("k_square", SuitableSet::k_square(l3.clone(), t.clone())),
        ("k_diagonal", SuitableSet::k_diagonal(l3, t.clone())),
        ("sqrt_band", SuitableSet::sqrt_band(t)),
    ];
    let (mut cats, mut candidates) = (0, 0);
    for (label, s) in &shapes {
        for n in [2, 3] {
            let sweep = universal_sweep(s, n, &quarters(), qcat::DEFAULT_MAX_ROUNDS);
            if let Some(f) = sweep.failure {
                return Err(format!("{label} on {n} points: {f}"));
            }
            if sweep.categories == 0 || sweep.candidates == 0 {
                return Err(format!("{label} on {n} points: empty sweep"));
            }
            cats += sweep.categories;
            candidates += sweep.candidates;
        }
    }
    Ok(format!("{cats} categories against {candidates} Cat_S matrices"))
}

fn suitability_closure() -> Outcome {
    let report = verify::suitable(&WorkspaceConfig::default());
    passed(&report)?;
    let adversarial = report.cases.iter().filter(|c| c.name.starts_with("adversarial_")).count();
    if adversarial < 5 {
        return Err(format!("only {adversarial} adversarial sets"));
    }
    for name in ["k_square_l3", "k_diagonal_l3", "k_square_crisp", "k_diagonal_crisp", "sqrt_band"] {
        if count(&report, name) != 1 {
            return Err(format!("missing case {name}"));
        }
    }
    Ok(format!("5 suitable sets, {adversarial} adversarial sets with the right axiom"))
}

fn yoneda_suite() -> Outcome {
    let report = verify::yoneda(&WorkspaceConfig::default());
    passed(&report)?;
    let checked = |name: &str| {
        report
            .cases
            .iter()
            .find(|c| c.name == name)
            .and_then(|c| c.inputs["checked"].as_u64())
            .unwrap_or(0)
    };
    for name in ["limits_nonempty", "functors_preserve_limits", "function_space_limit_law"] {
        if checked(name) == 0 {
            return Err(format!("{name} checked nothing"));
        }
    }
    Ok(format!(
        "{} Cauchy sequences, {} functor checks, {} function-space sequences",
        checked("limits_nonempty"),
        checked("functors_preserve_limits"),
        checked("function_space_limit_law")
    ))
}

fn approximation() -> Outcome {
    let expected = [
        (TNorm::godel(), ApproxCase::TopApproximated),
        (TNorm::lukasiewicz(), ApproxCase::TopIsolated),
        (TNorm::product(), ApproxCase::TopIsolated),
        (TNorm::remark4(), ApproxCase::TopIsolated),
    ];
    for (t, case) in &expected {
        let out = approx_property(t);
        if out.case != *case || !out.sup.is_one() {
            return Err(format!("{t}: case {:?}, sup {}", out.case, out.sup));
        }
    }
    passed(&verify::approx(&WorkspaceConfig::default()))?;
    Ok("sup 1 and expected case for 4 norms".into())
}

fn kernel_laws() -> Outcome {
    let cfg = WorkspaceConfig::default();
    let laws = verify::tnorm_laws(&cfg);
    passed(&laws)?;
    passed(&verify::resd_prop(&cfg))?;
    Ok(format!(
        "{} random triples and {} idempotent samples per norm, residuals on denominator {}",
        qcat::verify::RANDOM_TRIPLES,
        qcat::verify::IDEMPOTENT_SAMPLES,
        qcat::verify::RESIDUAL_GRID
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("M-set exactness", m_set_closed_forms),
        ("CCC equivalence", ccc_equivalence),
        ("witness construction", witness_construction),
        ("power-object laws", power_object_laws),
        ("exponential law", exponential_law),
        ("reflector/coreflector universal properties", universal_properties),
        ("suitability closure", suitability_closure),
        ("Yoneda suite", yoneda_suite),
        ("approximation property", approximation),
        ("t-norm kernel laws", kernel_laws),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
