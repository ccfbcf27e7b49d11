//! Exponential law and Yoneda limits.

use std::sync::Arc;

use serde_json::json;

use super::{all_categories, finite_m_values, random_category, rng};
use crate::config::WorkspaceConfig;
use crate::error::{Error, Result};
use crate::functor::{enumerate_functors, hom_power, QFunctor};
use crate::qcat::QCat;
use crate::rational::{q, UnitRational};
use crate::report::{Case, Report};
use crate::tnorm::TNorm;
use crate::yoneda::{
    check_alpha_monotone_lemma, exponential_law as exp_law, function_space_limit, is_alpha_monotone,
    is_forward_cauchy, preserves_limits, require_m_valued, yoneda_limits, FCSequence,
};

/// Shapes `(|A|, |B|, |C|)` whose function spaces stay small.
const SHAPES: [(usize, usize, usize); 4] = [(2, 2, 1), (2, 3, 2), (3, 2, 2), (1, 3, 3)];

pub fn exponential_law(cfg: &WorkspaceConfig) -> Report {
    let mut report = Report::new("exponential_law");
    let mut r = rng(cfg, 500);
    for t in cfg.norms() {
        let t = Arc::new(t);
        let values = finite_m_values(&t);
        for &(na, nb, nc) in &SHAPES {
            let a = random_category(&mut r, &t, na, &values);
            let b = random_category(&mut r, &t, nb, &values);
            let c = random_category(&mut r, &t, nc, &values);
            let inputs = json!({ "tnorm": t.to_string(), "a": a.rows(), "b": b.rows(), "c": c.rows() });
            let result = exp_law(&a, &b, &c, cfg.max_maps).map(|e| {
                Case::check(
                    "curry_uncurry",
                    inputs.clone(),
                    json!({ "counts_equal": true, "bijection": true, "ev_is_functor": true }),
                    json!({ "counts_equal": e.uncurried == e.curried, "bijection": e.bijection, "ev_is_functor": e.ev_is_functor }),
                )
                .with_witness(Some(json!({ "uncurried": e.uncurried, "curried": e.curried })))
            });
            report.push_result("curry_uncurry", inputs, result);
        }
        // symmetric inputs give a symmetric power
        let symmetric = |r: &mut _| {
            let c = random_category(r, &t, 2, &values);
            let v = c.r(0, 1).meet(c.r(1, 0));
            QCat::two_point(t.clone(), v.clone(), v)
        };
        let (a, b) = (symmetric(&mut r), symmetric(&mut r));
        let inputs = json!({ "tnorm": t.to_string(), "a": a.rows(), "b": b.rows() });
        let result = hom_power(&a, &b, cfg.max_maps)
            .map(|h| Case::check("symmetric_power", inputs.clone(), true, h.category.is_symmetric()));
        report.push_result("symmetric_power", inputs, result);
    }
    report
}

/// `⋁_λ ⋀_{μ >= λ} r(x_μ, x)` evaluated on the explicit terms of the
/// sequence; one period past the prefix covers every tail.
pub fn direct_tail_value(s: &FCSequence, x: usize) -> UnitRational {
    let period = s.prefix.len() + s.cycle.len();
    (0..=period)
        .map(|lambda| {
            (lambda..lambda + period)
                .map(|mu| s.ambient.r(s.term(mu), x).clone())
                .min()
                .expect("nonempty window")
        })
        .max()
        .expect("nonempty")
}

/// `⋁_λ ⋀_{λ <= μ <= γ} r(x_μ, x_γ)` on the explicit terms.
fn direct_cauchy_value(s: &FCSequence) -> UnitRational {
    let period = s.prefix.len() + s.cycle.len();
    (0..=period)
        .map(|lambda| {
            let window = lambda..lambda + 2 * period;
            window
                .clone()
                .flat_map(|mu| window.clone().filter(move |&g| g >= mu).map(move |g| (mu, g)))
                .map(|(mu, g)| s.ambient.r(s.term(mu), s.term(g)).clone())
                .min()
                .expect("nonempty window")
        })
        .max()
        .expect("nonempty")
}

/// Every cycle of length `1..=max_len` over `n` points, with an empty and
/// a one-point prefix.
fn sequences(c: &Arc<QCat>, max_len: usize) -> Vec<FCSequence> {
    let n = c.len();
    let mut out = Vec::new();
    for len in 1..=max_len {
        let total = n.pow(len as u32);
        for code in 0..total {
            let mut cycle = Vec::with_capacity(len);
            let mut rest = code;
            for _ in 0..len {
                cycle.push(rest % n);
                rest /= n;
            }
            out.push(FCSequence::new(c.clone(), vec![], cycle.clone()).expect("in range"));
            out.push(FCSequence::new(c.clone(), vec![n - 1], cycle).expect("in range"));
        }
    }
    out
}

#[derive(Default)]
struct Tally {
    checked: usize,
    problem: Option<serde_json::Value>,
}

impl Tally {
    fn note(&mut self, ok: bool, witness: impl FnOnce() -> serde_json::Value) {
        self.checked += 1;
        if !ok && self.problem.is_none() {
            self.problem = Some(witness());
        }
    }

    fn case(self, name: &str, inputs: serde_json::Value) -> Case {
        let mut inputs = inputs;
        inputs["checked"] = json!(self.checked);
        Case::law(name, inputs, self.problem)
    }
}

pub fn yoneda(cfg: &WorkspaceConfig) -> Report {
    let mut report = Report::new("yoneda");
    let t = Arc::new(cfg.tnorm.clone().unwrap_or_else(TNorm::lukasiewicz));
    let values = [q(0, 1), q(1, 2), q(1, 1)];
    let cats: Vec<Arc<QCat>> = (1..=3).flat_map(|n| all_categories(&t, n, &values)).map(Arc::new).collect();
    let small: Vec<Arc<QCat>> = cats.iter().filter(|c| c.len() <= 2).cloned().collect();
    let inputs = json!({ "tnorm": t.to_string(), "values": values, "categories": cats.len() });
    let idempotents: Vec<UnitRational> = values.iter().filter(|v| t.is_idempotent(v)).cloned().collect();
    let one = UnitRational::one();

    let mut cauchy = Tally::default();
    let mut nonempty = Tally::default();
    let mut mutual = Tally::default();
    let mut defining = Tally::default();
    let mut monotone = Tally::default();
    let mut lemma = Tally::default();
    let mut preserve = Tally::default();
    let mut rejected = Tally::default();
    for c in &cats {
        let targets: Vec<(Arc<QCat>, Vec<Vec<usize>>)> = small
            .iter()
            .map(|b| (b.clone(), enumerate_functors(c, b, cfg.max_maps).unwrap_or_default()))
            .collect();
        for s in sequences(c, 3) {
            let fc = is_forward_cauchy(&s);
            let seq_json = || json!({ "category": c.rows(), "prefix": s.prefix, "cycle": s.cycle });
            cauchy.note(fc == direct_cauchy_value(&s).is_one(), seq_json);
            for alpha in &idempotents {
                if is_alpha_monotone(&s, alpha) {
                    let ok = matches!(check_alpha_monotone_lemma(&s, alpha), Ok(None));
                    lemma.note(ok, || json!({ "sequence": seq_json(), "alpha": alpha }));
                }
            }
            if !fc {
                rejected.note(yoneda_limits(&s) == Err(Error::NotCauchy), seq_json);
                continue;
            }
            // forward Cauchy ⇒ eventually α-monotone for every α ≪ 1 in M
            for alpha in &values {
                if t.m_set().contains(alpha) && t.way_below_in_m(alpha, &one).unwrap_or(false) {
                    monotone.note(is_alpha_monotone(&s, alpha), || json!({ "sequence": seq_json(), "alpha": alpha }));
                }
            }
            let limits = match yoneda_limits(&s) {
                Ok(l) => l,
                Err(e) => {
                    nonempty.note(false, || json!({ "sequence": seq_json(), "error": e.to_string() }));
                    continue;
                }
            };
            nonempty.note(!limits.points.is_empty(), seq_json);
            let pairwise = limits
                .points
                .iter()
                .all(|&p| limits.points.iter().all(|&q| c.r(p, q).is_one()));
            mutual.note(pairwise, seq_json);
            // members are exactly the points meeting the defining equation
            let direct: Vec<usize> = (0..c.len())
                .filter(|&a| (0..c.len()).all(|x| c.r(a, x) == &direct_tail_value(&s, x)))
                .collect();
            defining.note(direct == limits.points, seq_json);
            for (b, maps) in &targets {
                for map in maps {
                    let f = QFunctor::new(c.clone(), b.clone(), map.clone()).expect("enumerated");
                    let ok = preserves_limits(&f, &s).unwrap_or(false);
                    preserve.note(ok, || json!({ "sequence": seq_json(), "cod": b.rows(), "map": map }));
                }
            }
        }
    }
    report.push(cauchy.case("cauchy_matches_sup_inf", inputs.clone()));
    report.push(rejected.case("non_cauchy_rejected", inputs.clone()));
    report.push(nonempty.case("limits_nonempty", inputs.clone()));
    report.push(mutual.case("limits_mutually_one", inputs.clone()));
    report.push(defining.case("limits_satisfy_definition", inputs.clone()));
    report.push(monotone.case("cauchy_is_alpha_monotone", inputs.clone()));
    report.push(lemma.case("alpha_monotone_lemma", inputs.clone()));
    report.push(preserve.case("functors_preserve_limits", inputs.clone()));

    let result = function_space_sweep(&small, cfg.max_maps).map(|tally| tally.case("function_space_limit_law", inputs.clone()));
    report.push_result("function_space_limit_law", inputs, result);
    report
}

/// Every forward Cauchy sequence (cycle length <= 3) in `hom_power(A, B)`
/// for `M`-valued `A, B` among `cats`.
fn function_space_sweep(cats: &[Arc<QCat>], max_maps: u64) -> Result<Tally> {
    let mut tally = Tally::default();
    let m_valued: Vec<&Arc<QCat>> = cats.iter().filter(|c| require_m_valued(c).is_ok()).collect();
    for a in &m_valued {
        for b in &m_valued {
            let hom = hom_power(a, b, max_maps)?;
            let space = Arc::new(hom.category.clone());
            for s in sequences(&space, 3) {
                if !is_forward_cauchy(&s) {
                    continue;
                }
                let witness = || json!({ "a": a.rows(), "b": b.rows(), "cycle": s.cycle });
                match function_space_limit(a, b, &hom, &s) {
                    Ok(lim) => tally.note(lim.law_failure.is_none(), witness),
                    Err(_) => tally.note(false, witness),
                }
            }
        }
    }
    Ok(tally)
}
