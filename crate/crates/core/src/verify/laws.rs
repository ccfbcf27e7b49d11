//! Laws of the t-norm kernel: algebra, residuation, roots, `Idm` and `M`.

use rand::seq::SliceRandom;
use rand::Rng;
use serde_json::{json, Value};

use super::{random_between, random_unit, rng};
use crate::config::WorkspaceConfig;
use crate::error::Error;
use crate::grid::Grid;
use crate::qcat::QCat;
use crate::rational::UnitRational;
use crate::report::{Case, Report};
use crate::tnorm::{meet_residual, TNorm};
use crate::yoneda::{approx_property, ApproxCase};

pub const RANDOM_TRIPLES: usize = 10_000;
pub const IDEMPOTENT_SAMPLES: usize = 1_000;
pub const RESIDUAL_GRID: u64 = 64;
const MAX_DEN: u64 = 1000;

type Residual<'a> = Box<dyn Fn(&UnitRational, &UnitRational) -> UnitRational + 'a>;

fn triple(x: &UnitRational, y: &UnitRational, z: &UnitRational) -> Value {
    json!([x, y, z])
}

pub fn tnorm_laws(cfg: &WorkspaceConfig) -> Report {
    let mut report = Report::new("tnorm_laws");
    for (i, t) in cfg.norms().iter().enumerate() {
        let mut r = rng(cfg, 100 + i as u64);
        let name = t.to_string();
        let inputs = json!({ "tnorm": name, "samples": RANDOM_TRIPLES });
        let (mut comm, mut assoc, mut mono, mut unit) = (None, None, None, None);
        for _ in 0..RANDOM_TRIPLES {
            let (x, y, z) = (random_unit(&mut r, MAX_DEN), random_unit(&mut r, MAX_DEN), random_unit(&mut r, MAX_DEN));
            if comm.is_none() && t.eval(&x, &y) != t.eval(&y, &x) {
                comm = Some(triple(&x, &y, &z));
            }
            if assoc.is_none() && t.eval(&t.eval(&x, &y), &z) != t.eval(&x, &t.eval(&y, &z)) {
                assoc = Some(triple(&x, &y, &z));
            }
            let (lo, hi) = (x.meet(&z), x.join(&z));
            if mono.is_none() && t.eval(&lo, &y) > t.eval(&hi, &y) {
                mono = Some(triple(&x, &y, &z));
            }
            if unit.is_none() && t.eval(&x, &UnitRational::one()) != x {
                unit = Some(triple(&x, &y, &z));
            }
        }
        report.push(Case::law("commutativity", inputs.clone(), comm));
        report.push(Case::law("associativity", inputs.clone(), assoc));
        report.push(Case::law("monotonicity", inputs.clone(), mono));
        report.push(Case::law("unit", inputs, unit));

        let idm = t.idempotent_set();
        let mut bad = None;
        for _ in 0..IDEMPOTENT_SAMPLES {
            let c = idm.components().choose(&mut r).expect("0 and 1 are idempotent");
            let p = random_between(&mut r, &c.lo, &c.hi, MAX_DEN);
            let x = random_between(&mut r, &UnitRational::zero(), &p, MAX_DEN);
            let y = random_between(&mut r, &p, &UnitRational::one(), MAX_DEN);
            if !t.is_idempotent(&p) || t.eval(&x, &y) != x.meet(&y) {
                bad = Some(triple(&x, &p, &y));
                break;
            }
        }
        report.push(Case::law(
            "idempotent_splits_min",
            json!({ "tnorm": name, "samples": IDEMPOTENT_SAMPLES }),
            bad,
        ));

        let den = cfg.denominator_or(RESIDUAL_GRID);
        let grid = Grid::uniform(den).with_block_endpoints(t).into_values();
        report.push(Case::law(
            "residual_adjunction",
            json!({ "tnorm": name, "grid": grid.len() }),
            residual_adjunction(t, &grid),
        ));
        report.push(Case::law(
            "sqrt_galois",
            json!({ "tnorm": name, "grid": grid.len() }),
            sqrt_galois(t, &grid),
        ));
        let oracle = Grid::uniform(cfg.denominator_or(MAX_DEN)).with_block_endpoints(t).into_values();
        report.push(Case::law(
            "m_set_oracle",
            json!({ "tnorm": name, "grid": oracle.len() }),
            m_set_oracle(t, &oracle),
        ));
    }
    report
}

/// `x & z <= y ⇔ z <= x ⇒ y` on `grid³`.
pub fn residual_adjunction(t: &TNorm, grid: &[UnitRational]) -> Option<Value> {
    let n = grid.len();
    let product: Vec<UnitRational> = grid.iter().flat_map(|x| grid.iter().map(move |z| t.eval(x, z))).collect();
    let residual: Vec<UnitRational> = grid.iter().flat_map(|x| grid.iter().map(move |y| t.residual(x, y))).collect();
    for xi in 0..n {
        for yi in 0..n {
            let res = &residual[xi * n + yi];
            for zi in 0..n {
                let left = product[xi * n + zi] <= grid[yi];
                let right = &grid[zi] <= res;
                if left != right {
                    return Some(triple(&grid[xi], &grid[yi], &grid[zi]));
                }
            }
        }
    }
    None
}

/// `z & z <= x ⇔ z <= √x` on `grid²`, skipping irrational roots.
pub fn sqrt_galois(t: &TNorm, grid: &[UnitRational]) -> Option<Value> {
    let squares: Vec<UnitRational> = grid.iter().map(|z| t.eval(z, z)).collect();
    for x in grid {
        let root = match t.sqrt(x) {
            Ok(root) => root,
            Err(Error::ProductIrrational { .. }) => continue,
            Err(_) => return Some(json!([x])),
        };
        for (z, zz) in grid.iter().zip(&squares) {
            if (zz <= x) != (z <= &root) {
                return Some(json!([x, z]));
            }
        }
    }
    None
}

/// `M ∩ grid = {a | (a & a) & (a & a) = a & a}`.
pub fn m_set_oracle(t: &TNorm, grid: &[UnitRational]) -> Option<Value> {
    let m = t.m_set();
    grid.iter()
        .find(|a| {
            let aa = t.eval(a, a);
            m.contains(a) != (t.eval(&aa, &aa) == aa)
        })
        .map(|a| json!([a]))
}

pub fn resd_prop(cfg: &WorkspaceConfig) -> Report {
    let mut report = Report::new("resd_prop");
    let samples = 1_000;
    for (i, t) in cfg.norms().iter().enumerate() {
        let mut r = rng(cfg, 200 + i as u64);
        let name = t.to_string();
        let inputs = json!({ "tnorm": name, "samples": samples });
        let residuals: [(&str, Residual<'_>); 2] = [
            ("meet", Box::new(meet_residual)),
            ("tnorm", Box::new(|x, y| t.residual(x, y))),
        ];
        for (which, res) in &residuals {
            let (mut meets, mut joins) = (None, None);
            for _ in 0..samples {
                let k = r.gen_range(1..=4);
                let x = random_unit(&mut r, MAX_DEN);
                let ys: Vec<UnitRational> = (0..k).map(|_| random_unit(&mut r, MAX_DEN)).collect();
                let meet_y = ys.iter().min().expect("nonempty");
                let join_y = ys.iter().max().expect("nonempty");
                let along: UnitRational = ys.iter().map(|y| res(&x, y)).min().expect("nonempty");
                if meets.is_none() && res(&x, meet_y) != along {
                    meets = Some(json!({ "x": x, "family": ys }));
                }
                let against: UnitRational = ys.iter().map(|y| res(y, &x)).min().expect("nonempty");
                if joins.is_none() && res(join_y, &x) != against {
                    joins = Some(json!({ "y": x, "family": ys }));
                }
            }
            report.push(Case::law(format!("{which}_residual_preserves_meets"), inputs.clone(), meets));
            report.push(Case::law(format!("{which}_residual_reverses_joins"), inputs.clone(), joins));
        }

        let grid = Grid::uniform(cfg.denominator_or(RESIDUAL_GRID)).into_values();
        let mut bad = None;
        'outer: for x in &grid {
            for z in &grid {
                let res = meet_residual(x, z);
                for y in &grid {
                    if (&x.meet(y) <= z) != (y <= &res) {
                        bad = Some(triple(x, y, z));
                        break 'outer;
                    }
                }
            }
        }
        report.push(Case::law("meet_residual_adjunction", json!({ "tnorm": name, "grid": grid.len() }), bad));

        // ([0,1], ⇒) is a category; so is every finite restriction of it.
        let points = Grid::uniform(8).with_block_endpoints(t).into_values();
        let n = points.len();
        let matrix = points.iter().flat_map(|x| points.iter().map(move |y| t.residual(x, y))).collect();
        let c = QCat::from_flat(
            std::sync::Arc::new(t.clone()),
            points.iter().map(ToString::to_string).collect(),
            matrix,
        )
        .expect("square");
        let violation = c.validate().map(|v| json!(v));
        report.push(Case::law("residual_category_valid", json!({ "tnorm": name, "points": n }), violation));
    }
    report
}

pub fn approx(cfg: &WorkspaceConfig) -> Report {
    let mut report = Report::new("approx");
    for t in cfg.norms() {
        let name = t.to_string();
        let out = approx_property(&t);
        let one = UnitRational::one();
        let expected_case = if t.blocks().iter().any(|b| b.hi == one) {
            ApproxCase::TopIsolated
        } else {
            ApproxCase::TopApproximated
        };
        report.push(Case::check("proof_case", json!({ "tnorm": name }), expected_case, out.case));
        report.push(Case::check("sup", json!({ "tnorm": name }), &one, &out.sup));
        // every idempotent below 1 is way below 1
        let grid = Grid::uniform(cfg.denominator_or(100)).restrict(&out.closure);
        let stray = grid
            .values()
            .iter()
            .filter(|a| !a.is_one())
            .find(|a| !t.way_below_in_m(a, &one).unwrap_or(false))
            .map(|a| json!([a]));
        report.push(Case::law("below_top_is_way_below", json!({ "tnorm": name }), stray));
        report.push(Case::check(
            "top_membership",
            json!({ "tnorm": name }),
            expected_case == ApproxCase::TopIsolated,
            out.top_included,
        ));
    }
    report
}
