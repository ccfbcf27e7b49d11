//! Suitable sets, (co)reflections, cartesian closedness, powers and the
//! monoidal structure.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use super::{all_categories, finite_m_values, random_category, rng};
use crate::ccc::{ccc_criterion, ccc_identity_check, ccc_witness, power_existence_check};
use crate::config::WorkspaceConfig;
use crate::error::Result;
use crate::functor::{d_tensor, enumerate_functors, hom_power, hom_tensor, HomObject};
use crate::grid::Grid;
use crate::interval::IntervalSet;
use crate::qcat::QCat;
use crate::rational::{q, UnitRational};
use crate::report::{Case, Report};
use crate::suitable::{coreflect, reflect, Axiom, SuitableSet};
use crate::tnorm::TNorm;

fn l3() -> IntervalSet {
    IntervalSet::points([q(0, 1), q(1, 2), q(1, 1)])
}

fn crisp() -> IntervalSet {
    IntervalSet::points([q(0, 1), q(1, 1)])
}

fn quarters() -> Vec<UnitRational> {
    Grid::uniform(4).into_values()
}

/// The explicitly broken sets, each with the axiom it violates first.
pub fn adversarial_sets() -> Vec<(&'static str, SuitableSet, Axiom)> {
    let luk = Arc::new(TNorm::lukasiewicz());
    let pairs = |ps: &[(u64, u64, u64, u64)]| -> Vec<(UnitRational, UnitRational)> {
        ps.iter().map(|&(a, b, c, d)| (q(a, b), q(c, d))).collect()
    };
    let ex = |ps: &[(u64, u64, u64, u64)]| SuitableSet::explicit(pairs(ps), luk.clone());
    vec![
        ("swap_missing", ex(&[(0, 1, 0, 1), (1, 1, 1, 1), (1, 2, 1, 1)]), Axiom::S2),
        ("join_missing", ex(&[(0, 1, 0, 1), (1, 1, 1, 1), (1, 2, 0, 1), (0, 1, 1, 2)]), Axiom::S1),
        ("meet_missing", ex(&[(0, 1, 0, 1), (1, 1, 1, 1), (1, 4, 1, 2), (1, 2, 1, 4)]), Axiom::S1),
        ("top_missing", ex(&[(0, 1, 0, 1), (1, 2, 1, 2)]), Axiom::S1),
        ("square_missing", ex(&[(0, 1, 0, 1), (1, 1, 1, 1), (3, 4, 3, 4)]), Axiom::S3),
        ("product_missing", ex(&[(0, 1, 0, 1), (1, 1, 1, 1), (1, 2, 1, 2), (3, 4, 3, 4)]), Axiom::S3),
        (
            "k_not_closed",
            SuitableSet::k_square(IntervalSet::points([q(0, 1), q(3, 4), q(1, 1)]), luk.clone()),
            Axiom::S3,
        ),
        (
            "k_without_bottom",
            SuitableSet::k_diagonal(IntervalSet::points([q(1, 2), q(1, 1)]), luk),
            Axiom::S1,
        ),
    ]
}

pub fn suitable(cfg: &WorkspaceConfig) -> Report {
    let mut report = Report::new("suitable");
    let t = Arc::new(cfg.tnorm.clone().unwrap_or_else(TNorm::lukasiewicz));
    let name = t.to_string();
    let band_grid = Grid::uniform(cfg.denominator_or(100)).into_values();
    for (label, k) in [("l3", l3()), ("crisp", crisp())] {
        let expected = t.subquantale_check(&k).passed();
        for s in [SuitableSet::k_square(k.clone(), t.clone()), SuitableSet::k_diagonal(k.clone(), t.clone())] {
            let shape = match s.shape {
                crate::suitable::SuitableShape::KSquare(_) => "k_square",
                _ => "k_diagonal",
            };
            let r = s.check(&[]);
            report.push(
                Case::check(format!("{shape}_{label}"), json!({ "tnorm": name, "k": k }), expected, r.passed())
                    .with_witness(r.violation.map(|v| json!(v))),
            );
        }
    }
    let r = SuitableSet::sqrt_band(t.clone()).check(&band_grid);
    report.push(
        Case::check(
            "sqrt_band",
            json!({ "tnorm": name, "grid": band_grid.len(), "members": r.members_checked }),
            true,
            r.passed(),
        )
        .with_witness(r.violation.map(|v| json!(v))),
    );

    for (label, s, axiom) in adversarial_sets() {
        let r = s.check(&[]);
        let actual = r.violation.as_ref().map(|v| v.axiom);
        report.push(
            Case::check(format!("adversarial_{label}"), json!({ "tnorm": "lukasiewicz" }), Some(axiom), actual)
                .with_witness(r.violation.map(|v| json!(v.witness))),
        );
    }

    let luk = Arc::new(TNorm::lukasiewicz());
    let shapes = [
        ("k_square", SuitableSet::k_square(l3(), luk.clone())),
        ("k_diagonal", SuitableSet::k_diagonal(l3(), luk.clone())),
        ("sqrt_band", SuitableSet::sqrt_band(luk.clone())),
    ];
    for (label, s) in &shapes {
        for n in [2, 3] {
            let inputs = json!({ "tnorm": "lukasiewicz", "set": label, "points": n, "values": quarters() });
            let sweep = universal_sweep(s, n, &quarters(), cfg.max_rounds);
            report.push(
                Case::law(format!("universal_{label}_{n}"), inputs, sweep.failure.clone())
                    .with_witness(Some(json!({ "categories": sweep.categories, "candidates": sweep.candidates }))),
            );
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UniversalSummary {
    pub categories: usize,
    pub candidates: usize,
    pub failure: Option<Value>,
}

/// Checks that `C(r)` is the greatest and `R(r)` the least `Cat_S`
/// structure around `r`, for every valid category on `n` points with
/// values in `values`, against every `Cat_S` matrix over the value closure
/// (`values` plus everything `C` and `R` produce on them).
pub fn universal_sweep(s: &SuitableSet, n: usize, values: &[UnitRational], max_rounds: usize) -> UniversalSummary {
    let t = s.tnorm.clone();
    let tests = all_categories(&t, n, values);
    let mut outcomes = Vec::with_capacity(tests.len());
    let mut closure: BTreeSet<UnitRational> = values.iter().cloned().collect();
    closure.insert(UnitRational::zero());
    closure.insert(UnitRational::one());
    for c in &tests {
        let out = coreflect(s, c).and_then(|low| Ok((low, reflect(s, c, max_rounds)?)));
        if let Ok((low, high)) = &out {
            closure.extend(low.matrix().iter().cloned());
            closure.extend(high.matrix().iter().cloned());
        }
        outcomes.push(out);
    }
    let w: Vec<UnitRational> = closure.into_iter().collect();
    let fail = |c: &QCat, what: &str| UniversalSummary {
        categories: tests.len(),
        candidates: 0,
        failure: Some(json!({ "category": c.rows(), "problem": what })),
    };

    let tables = IndexTables::new(s, &w, n);
    let candidates = tables.candidates();
    let idx = |c: &QCat| -> Vec<usize> {
        tables
            .slots
            .iter()
            .map(|&(x, y)| w.binary_search(c.r(x, y)).expect("value closure"))
            .collect()
    };
    for (c, out) in tests.iter().zip(outcomes) {
        let (low, high) = match out {
            Ok(pair) => pair,
            Err(e) => return fail(c, &e.to_string()),
        };
        let (ci, li, hi) = (idx(c), idx(&low), idx(&high));
        if !tables.admissible(&li) || !tables.admissible(&hi) {
            return fail(c, "result outside Cat_S or not transitive");
        }
        if !leq(&li, &ci) || !leq(&ci, &hi) {
            return fail(c, "C(r) <= r <= R(r) fails");
        }
        for cand in &candidates {
            if leq(cand, &ci) && !leq(cand, &li) {
                return fail(c, "a Cat_S structure below r is not below C(r)");
            }
            if leq(&ci, cand) && !leq(&hi, cand) {
                return fail(c, "a Cat_S structure above r is not above R(r)");
            }
        }
        let again = coreflect(s, &low).map(|x| x == low).unwrap_or(false)
            && reflect(s, &high, max_rounds).map(|x| x == high).unwrap_or(false);
        if !again {
            return fail(c, "not idempotent");
        }
    }
    UniversalSummary {
        categories: tests.len(),
        candidates: candidates.len(),
        failure: None,
    }
}

fn leq(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Integer tables over a sorted value list: `&`-bounds and `S`-membership.
struct IndexTables {
    n: usize,
    w: usize,
    one: usize,
    slots: Vec<(usize, usize)>,
    /// `prod_le[(i * w + j) * w + k]`: `W_i & W_j <= W_k`
    prod_le: Vec<bool>,
    member: Vec<bool>,
}

impl IndexTables {
    fn new(s: &SuitableSet, values: &[UnitRational], n: usize) -> Self {
        let w = values.len();
        let t = &s.tnorm;
        let mut prod_le = Vec::with_capacity(w * w * w);
        for a in values {
            for b in values {
                let ab = t.eval(a, b);
                prod_le.extend(values.iter().map(|c| &ab <= c));
            }
        }
        let member = values.iter().flat_map(|a| values.iter().map(move |b| s.contains(a, b))).collect();
        IndexTables {
            n,
            w,
            one: w - 1,
            slots: (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y))).collect(),
            prod_le,
            member,
        }
    }

    fn full(&self, entries: &[usize]) -> Vec<usize> {
        let mut m = vec![self.one; self.n * self.n];
        for (&(x, y), &v) in self.slots.iter().zip(entries) {
            m[x * self.n + y] = v;
        }
        m
    }

    /// Transitive and in `Cat_S`.
    fn admissible(&self, entries: &[usize]) -> bool {
        let (n, w) = (self.n, self.w);
        let m = self.full(entries);
        let in_s = (0..n).all(|x| (0..n).all(|y| self.member[m[x * n + y] * w + m[y * n + x]]));
        in_s && (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| self.prod_le[(m[y * n + z] * w + m[x * n + y]) * w + m[x * n + z]]))
        })
    }

    fn candidates(&self) -> Vec<Vec<usize>> {
        let k = self.slots.len();
        let mut out = Vec::new();
        let mut idx = vec![0; k];
        loop {
            if self.admissible(&idx) {
                out.push(idx.clone());
            }
            let mut pos = k;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < self.w {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
}

/// The `(t, K, grid)` instances of the cartesian-closedness comparison.
pub fn ccc_matrix(cfg: &WorkspaceConfig) -> Vec<(TNorm, IntervalSet, Vec<UnitRational>)> {
    let den = cfg.denominator_or(8);
    let mut out = Vec::new();
    for t in cfg.norms() {
        let mut ks: Vec<IntervalSet> = vec![crisp(), l3()];
        ks.extend((3..=den).map(|d| IntervalSet::points(Grid::uniform(d).into_values())));
        ks.extend([t.idempotent_set(), t.m_set(), IntervalSet::unit()]);
        let mut seen = Vec::new();
        for k in ks {
            if seen.contains(&k) || !t.subquantale_check(&k).passed() {
                continue;
            }
            let grid = match k.finite_points() {
                Some(points) => points,
                None => k.sample(Grid::farey(den).values()),
            };
            seen.push(k.clone());
            out.push((t.clone(), k, grid));
        }
    }
    out
}

pub fn ccc_equivalence(cfg: &WorkspaceConfig) -> Report {
    let mut report = Report::new("ccc_equivalence");
    for (t, k, grid) in ccc_matrix(cfg) {
        let inputs = json!({ "tnorm": t.to_string(), "k": k, "grid": grid.len() });
        let result = (|| -> Result<Case> {
            let criterion = ccc_criterion(&t, &k)?;
            let identity = ccc_identity_check(&t, &k, &grid)?;
            let witness = identity.failure.as_ref().map(|f| json!(f));
            Ok(Case::check("identity_iff_criterion", inputs.clone(), criterion, identity.passed()).with_witness(witness))
        })();
        report.push_result("identity_iff_criterion", inputs.clone(), result);

        if let Ok(Some(f)) = ccc_identity_check(&t, &k, &grid).map(|r| r.failure) {
            let result = ccc_witness(Arc::new(t.clone()), f.u.clone(), f.v.clone(), f.r.clone()).map(|w| {
                Case::check("witness_lift", inputs.clone(), &w.rhs, &w.d_fin)
                    .with_witness(Some(json!({ "u": w.u, "v": w.v, "r": w.r, "lhs": w.lhs, "consistent": w.is_consistent() })))
            });
            report.push_result("witness_lift", inputs, result);
        }
    }
    report
}

/// A finite `&`-closed value set for random `K`-categories, alternating
/// between a set outside `M` (when available) and one inside.
fn k_values(t: &TNorm, inside_m: bool) -> Vec<UnitRational> {
    let quarter = IntervalSet::points(quarters());
    if !inside_m && t.subquantale_check(&quarter).passed() {
        quarters()
    } else {
        finite_m_values(t)
    }
}

pub const POWER_PAIRS: usize = 24;

pub fn power_existence(cfg: &WorkspaceConfig) -> Report {
    let mut report = Report::new("power_existence");
    let norms = cfg.norms();
    let mut r = rng(cfg, 300);
    for i in 0..POWER_PAIRS {
        let t = Arc::new(norms[i % norms.len()].clone());
        let values = k_values(&t, i % 2 == 1);
        let k = IntervalSet::points(values.clone());
        let (na, nb) = (r.gen_range(1..=3), r.gen_range(1..=3));
        let a = random_category(&mut r, &t, na, &values);
        let b = random_category(&mut r, &t, nb, &values);
        let inputs = json!({ "tnorm": t.to_string(), "k": k, "dom": a.rows(), "cod": b.rows() });
        let result = hom_power(&a, &b, cfg.max_maps).and_then(|power| {
            let tensor = hom_tensor(&a, &b, cfg.max_maps)?;
            let mut problem = None;
            if let Some(v) = power.category.validate() {
                problem = Some(json!({ "invalid": v }));
            } else if !power.category.le(&tensor.category) {
                problem = Some(json!("d_power exceeds d_tensor"));
            } else if let Some(v) = power.category.matrix().iter().find(|v| !k.contains(v)) {
                problem = Some(json!({ "outside_k": v }));
            }
            Ok(Case::law("power_object_laws", inputs.clone(), problem))
        });
        report.push_result("power_object_laws", inputs, result);
    }

    for (i, t) in norms.iter().enumerate() {
        let t = Arc::new(t.clone());
        let values = finite_m_values(&t);
        let k = IntervalSet::points(values.clone());
        for _ in 0..3 {
            let n = r.gen_range(1..=3);
            let c = random_category(&mut r, &t, n, &values);
            let inputs = json!({ "tnorm": t.to_string(), "k": k, "category": c.rows(), "salt": i });
            let result = power_existence_check(&c, &k, &values).map(|p| {
                Case::check("powers_exist_in_m", inputs.clone(), true, p.passed()).with_witness(p.failure.map(|f| json!(f)))
            });
            report.push_result("powers_exist_in_m", inputs, result);
        }
    }

    let luk = Arc::new(TNorm::lukasiewicz());
    let c = QCat::two_point(luk, q(1, 2), q(1, 2));
    let k = IntervalSet::points(quarters());
    let inputs = json!({ "tnorm": "lukasiewicz", "k": k, "category": c.rows() });
    let result = power_existence_check(&c, &k, &quarters()).map(|p| {
        let at = p.failure.as_ref().map(|f| json!([f.u, f.v, f.x, f.y]));
        Case::check("power_missing_outside_m", inputs.clone(), Some(json!(["3/4", "3/4", 0, 1])), at)
            .with_witness(p.failure.map(|f| json!(f)))
    });
    report.push_result("power_missing_outside_m", inputs, result);
    report
}

/// `f ↦ (a ↦ f(a, −))` for `f: A ⊗ B → C`.
fn curry_first(nb: usize, f: &[usize], hom: &HomObject) -> Option<Vec<usize>> {
    f.chunks(nb.max(1)).map(|row| hom.index_of(row)).collect()
}

fn uncurry_first(nb: usize, g: &[usize], hom: &HomObject) -> Vec<usize> {
    g.iter().flat_map(|&i| hom.functors[i][..nb].to_vec()).collect()
}

pub fn monoidal(cfg: &WorkspaceConfig) -> Report {
    let mut report = Report::new("monoidal");
    let norms = cfg.norms();
    let mut r = rng(cfg, 400);
    for i in 0..12 {
        let t = Arc::new(norms[i % norms.len()].clone());
        let values = k_values(&t, i % 2 == 1);
        let sizes: Vec<usize> = (0..3).map(|_| r.gen_range(1..=2)).collect();
        let a = random_category(&mut r, &t, sizes[0], &values);
        let b = random_category(&mut r, &t, sizes[1], &values);
        let c = random_category(&mut r, &t, sizes[2], &values);
        let inputs = json!({ "tnorm": t.to_string(), "a": a.rows(), "b": b.rows(), "c": c.rows() });
        let result = (|| -> Result<Case> {
            let hom = hom_tensor(&b, &c, cfg.max_maps)?;
            let ab = QCat::tensor(&a, &b)?;
            let left = enumerate_functors(&ab, &c, cfg.max_maps)?;
            let right = enumerate_functors(&a, &hom.category, cfg.max_maps)?;
            let nb = b.len();
            let forward = left.iter().all(|f| {
                curry_first(nb, f, &hom)
                    .is_some_and(|g| right.binary_search(&g).is_ok() && uncurry_first(nb, &g, &hom) == *f)
            });
            let backward = right.iter().all(|g| {
                let f = uncurry_first(nb, g, &hom);
                left.binary_search(&f).is_ok() && curry_first(nb, &f, &hom).as_ref() == Some(g)
            });
            let valid = hom.category.is_valid() && ab.is_valid();
            Ok(Case::check(
                "tensor_hom_adjunction",
                inputs.clone(),
                json!({ "counts_equal": true, "bijection": true, "valid": true }),
                json!({ "counts_equal": left.len() == right.len(), "bijection": forward && backward, "valid": valid }),
            )
            .with_witness(Some(json!({ "left": left.len(), "right": right.len() }))))
        })();
        report.push_result("tensor_hom_adjunction", inputs, result);
    }

    let luk = Arc::new(TNorm::lukasiewicz());
    let shapes = [
        ("k_square", SuitableSet::k_square(l3(), luk.clone())),
        ("k_diagonal", SuitableSet::k_diagonal(l3(), luk.clone())),
        ("sqrt_band", SuitableSet::sqrt_band(luk.clone())),
    ];
    for (label, s) in &shapes {
        let mut problem = None;
        for _ in 0..10 {
            let (n1, n2) = (r.gen_range(1..=2), r.gen_range(1..=2));
            let result = (|| -> Result<Option<Value>> {
                let c1 = coreflect(s, &random_category(&mut r, &luk, n1, &quarters()))?;
                let c2 = coreflect(s, &random_category(&mut r, &luk, n2, &quarters()))?;
                let tensor = QCat::tensor(&c1, &c2)?;
                let hom = hom_tensor(&c1, &c2, cfg.max_maps)?;
                let stays = s.is_in_cat_s(&tensor) && s.is_in_cat_s(&hom.category);
                Ok((!stays).then(|| json!({ "a": c1.rows(), "b": c2.rows() })))
            })();
            match result {
                Ok(None) => {}
                Ok(Some(w)) => problem = Some(w),
                Err(e) => problem = Some(json!(e.to_string())),
            }
            if problem.is_some() {
                break;
            }
        }
        report.push(Case::law(format!("stable_under_tensor_{label}"), json!({ "tnorm": "lukasiewicz", "set": label }), problem));
    }
    // d_⊗ on the diagonal is 1
    let c = QCat::two_point(luk.clone(), q(1, 4), q(3, 4));
    let ok = [[0usize, 1], [1, 0]].iter().all(|f| d_tensor(&c, f, f).is_one());
    report.push(Case::check("d_tensor_reflexive", json!({}), true, ok));
    report
}
