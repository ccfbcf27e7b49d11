//! Forward Cauchy sequences and Yoneda limits in finite categories.
//!
//! Sequences are eventually cyclic: a prefix followed by a cycle repeated
//! forever. In a finite category every tail infimum stabilises on the cycle,
//! so only the set of cycle points matters for anything asymptotic.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::functor::{d_power, enumerate_functors, hom_power, is_functor, HomObject, QFunctor};
use crate::interval::IntervalSet;
use crate::qcat::QCat;
use crate::rational::UnitRational;
use crate::tnorm::TNorm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FCSequence {
    pub ambient: Arc<QCat>,
    pub prefix: Vec<usize>,
    pub cycle: Vec<usize>,
}

impl FCSequence {
    pub fn new(ambient: Arc<QCat>, prefix: Vec<usize>, cycle: Vec<usize>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::Shape("cycle must be nonempty".into()));
        }
        if let Some(&p) = prefix.iter().chain(&cycle).find(|&&p| p >= ambient.len()) {
            return Err(Error::UnknownPoint(p.to_string()));
        }
        Ok(FCSequence { ambient, prefix, cycle })
    }

    pub fn constant(ambient: Arc<QCat>, p: usize) -> Result<Self> {
        FCSequence::new(ambient, vec![], vec![p])
    }

    /// The `i`-th term.
    pub fn term(&self, i: usize) -> usize {
        match self.prefix.get(i) {
            Some(&p) => p,
            None => self.cycle[(i - self.prefix.len()) % self.cycle.len()],
        }
    }

    /// Points visited infinitely often, sorted.
    pub fn cycle_set(&self) -> Vec<usize> {
        let mut s = self.cycle.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// The image sequence under a point map.
    pub fn map(&self, target: Arc<QCat>, f: &[usize]) -> Result<FCSequence> {
        FCSequence::new(
            target,
            self.prefix.iter().map(|&p| f[p]).collect(),
            self.cycle.iter().map(|&p| f[p]).collect(),
        )
    }

    /// `⋀_{p ∈ cycle} r(p, x)`, the eventual value of `⋀_{μ >= λ} r(x_μ, x)`.
    pub fn tail_meet(&self, x: usize) -> UnitRational {
        self.cycle
            .iter()
            .map(|&p| self.ambient.r(p, x))
            .min()
            .cloned()
            .expect("nonempty cycle")
    }
}

/// The sup-inf is `1` iff every ordered pair of cycle points has `r = 1`.
pub fn is_forward_cauchy(s: &FCSequence) -> bool {
    is_alpha_monotone(s, &UnitRational::one())
}

/// `α <= r(p, q)` for all cycle points `p, q`.
pub fn is_alpha_monotone(s: &FCSequence, alpha: &UnitRational) -> bool {
    let set = s.cycle_set();
    set.iter().all(|&p| set.iter().all(|&q| alpha <= s.ambient.r(p, q)))
}

/// The Yoneda limits of a sequence, by ascending point index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitSet {
    pub points: Vec<usize>,
}

impl LimitSet {
    /// The least index; every member is isomorphic to it.
    pub fn representative(&self) -> usize {
        self.points[0]
    }

    pub fn contains(&self, p: usize) -> bool {
        self.points.binary_search(&p).is_ok()
    }
}

/// Points `a` with `r(a, x) = ⋀_{p ∈ cycle} r(p, x)` for every `x`.
pub fn yoneda_limits(s: &FCSequence) -> Result<LimitSet> {
    if !is_forward_cauchy(s) {
        return Err(Error::NotCauchy);
    }
    let c = &s.ambient;
    let n = c.len();
    let tail: Vec<UnitRational> = (0..n).map(|x| s.tail_meet(x)).collect();
    let points: Vec<usize> = (0..n).filter(|&a| (0..n).all(|x| c.r(a, x) == &tail[x])).collect();
    debug_assert!(!points.is_empty(), "cycle points are limits");
    Ok(LimitSet { points })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaFailure {
    pub lambda: usize,
    pub mu: usize,
    pub x: usize,
}

/// `α ∧ r(x_μ, x) <= α ∧ r(x_λ, x)` for all tail indices `μ >= λ` and all
/// `x`. Holds for idempotent `α` and eventually α-monotone sequences, so a
/// failure means a bug.
pub fn check_alpha_monotone_lemma(s: &FCSequence, alpha: &UnitRational) -> Result<Option<LemmaFailure>> {
    let t = s.ambient.tnorm();
    if !t.is_idempotent(alpha) {
        return Err(Error::Precondition(format!("{alpha} is not idempotent")));
    }
    if !is_alpha_monotone(s, alpha) {
        return Err(Error::Precondition(format!("sequence is not eventually {alpha}-monotone")));
    }
    let c = &s.ambient;
    let set = s.cycle_set();
    for &lambda in &set {
        for &mu in &set {
            for x in 0..c.len() {
                if alpha.meet(c.r(mu, x)) > alpha.meet(c.r(lambda, x)) {
                    return Ok(Some(LemmaFailure { lambda, mu, x }));
                }
            }
        }
    }
    Ok(None)
}

/// Whether `f` sends a limit of `s` to a limit of `f(s)`.
pub fn preserves_limits(f: &QFunctor, s: &FCSequence) -> Result<bool> {
    let limits = yoneda_limits(s)?;
    let image = s.map(f.cod.clone(), &f.map)?;
    let target = yoneda_limits(&image)?;
    Ok(limits.points.iter().all(|&a| target.contains(f.map[a])))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ApproxCase {
    /// `1` is isolated in `M`: some block ends at `1`.
    TopIsolated,
    /// `1` is a limit of idempotents below it.
    TopApproximated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApproxReport {
    pub case: ApproxCase,
    /// Closure of `{α ∈ Idm | α ≪ 1 in M}`.
    pub closure: IntervalSet,
    /// Whether `1` itself belongs to the set (not just its closure).
    pub top_included: bool,
    pub sup: UnitRational,
}

impl ApproxReport {
    pub fn sup_is_one(&self) -> bool {
        self.sup.is_one()
    }
}

/// `1 = ⋁{α ∈ Idm | α ≪ 1 in M}`.
///
/// When `1` is isolated in `M` the set is all of `Idm`; otherwise it is
/// `Idm ∩ [0,1)`, whose closure is `Idm` again since the idempotents
/// accumulate at `1`.
pub fn approx_property(t: &TNorm) -> ApproxReport {
    let one = UnitRational::one();
    let idm = t.idempotent_set();
    let isolated = t.way_below_in_m(&one, &one).expect("1 is in M");
    let case = if isolated {
        ApproxCase::TopIsolated
    } else {
        ApproxCase::TopApproximated
    };
    let sup = idm.max().cloned().unwrap_or_else(UnitRational::zero);
    ApproxReport {
        case,
        closure: idm,
        top_included: isolated,
        sup,
    }
}

/// Fails with `NotMValued` on the first structure value outside `M`.
pub fn require_m_valued(c: &QCat) -> Result<()> {
    let m = c.tnorm().m_set();
    match c.matrix().iter().find(|v| !m.contains(v)) {
        Some(v) => Err(Error::NotMValued { value: v.clone() }),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionSpaceLimit {
    /// Index of the limit functor in the function space.
    pub limit: usize,
    pub map: Vec<usize>,
    /// `g` for which `d_Π(f, g) ≠ ⋀_{μ ∈ cycle} d_Π(f_μ, g)`, if any.
    pub law_failure: Option<usize>,
}

/// The pointwise limit of a forward Cauchy sequence in `hom_power(A, B)`,
/// together with a check of the limit law against every functor `g`.
pub fn function_space_limit(a: &QCat, b: &QCat, hom: &HomObject, seq: &FCSequence) -> Result<FunctionSpaceLimit> {
    require_m_valued(a)?;
    require_m_valued(b)?;
    if !is_forward_cauchy(seq) {
        return Err(Error::NotCauchy);
    }
    if seq.ambient.as_ref() != &hom.category {
        return Err(Error::Precondition("sequence does not live in the given function space".into()));
    }
    let b_arc = Arc::new(b.clone());
    let mut map = Vec::with_capacity(a.len());
    for x in 0..a.len() {
        let at_x = seq.map(b_arc.clone(), &hom.functors.iter().map(|f| f[x]).collect::<Vec<_>>())?;
        map.push(yoneda_limits(&at_x)?.representative());
    }
    let limit = hom
        .index_of(&map)
        .ok_or_else(|| Error::Precondition("pointwise limit is not a functor".into()))?;
    let cycle = seq.cycle_set();
    let law_failure = (0..hom.len()).find(|&g| {
        let direct = d_power(a, b, &map, &hom.functors[g]);
        let tail = cycle
            .iter()
            .map(|&mu| d_power(a, b, &hom.functors[mu], &hom.functors[g]))
            .min()
            .expect("nonempty cycle");
        direct != tail
    });
    Ok(FunctionSpaceLimit {
        limit,
        map,
        law_failure,
    })
}

/// Whether `ev: A × [A, B] → B`, `(x, f) ↦ f(x)`, is a functor.
pub fn check_ev(a: &QCat, b: &QCat, max_maps: u64) -> Result<bool> {
    let hom = hom_power(a, b, max_maps)?;
    Ok(ev_is_functor(a, b, &hom))
}

fn ev_is_functor(a: &QCat, b: &QCat, hom: &HomObject) -> bool {
    let Ok(prod) = QCat::product(a, &hom.category) else {
        return false;
    };
    let m = hom.len();
    let ev: Vec<usize> = (0..a.len() * m).map(|i| hom.functors[i % m][i / m]).collect();
    is_functor(&prod, b, &ev)
}

/// `f̂(z) = f(−, z)` for `f: A × C → B` (row-major over `A × C`), as
/// indices into `hom`. `None` if some `f(−, z)` is not a functor.
pub fn curry(a_len: usize, c_len: usize, f: &[usize], hom: &HomObject) -> Option<Vec<usize>> {
    (0..c_len)
        .map(|z| {
            let column: Vec<usize> = (0..a_len).map(|x| f[x * c_len + z]).collect();
            hom.index_of(&column)
        })
        .collect()
}

/// Inverse of [`curry`]: `(x, z) ↦ g(z)(x)`.
pub fn uncurry(a_len: usize, g: &[usize], hom: &HomObject) -> Vec<usize> {
    let c_len = g.len();
    (0..a_len * c_len).map(|i| hom.functors[g[i % c_len]][i / c_len]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentialReport {
    /// `|functors(A × C → B)|`
    pub uncurried: usize,
    /// `|functors(C → [A, B])|`
    pub curried: usize,
    /// Both transposes land in functors and undo each other.
    pub bijection: bool,
    pub ev_is_functor: bool,
}

impl ExponentialReport {
    pub fn passed(&self) -> bool {
        self.uncurried == self.curried && self.bijection && self.ev_is_functor
    }
}

/// `functors(A × C → B) ≅ functors(C → [A, B])` via curry/uncurry, plus
/// the evaluation functor.
pub fn exponential_law(a: &QCat, b: &QCat, c: &QCat, max_maps: u64) -> Result<ExponentialReport> {
    let hom = hom_power(a, b, max_maps)?;
    let ac = QCat::product(a, c)?;
    let left = enumerate_functors(&ac, b, max_maps)?;
    let right = enumerate_functors(c, &hom.category, max_maps)?;
    let mut bijection = true;
    for f in &left {
        match curry(a.len(), c.len(), f, &hom) {
            Some(g) => bijection &= right.binary_search(&g).is_ok() && &uncurry(a.len(), &g, &hom) == f,
            None => bijection = false,
        }
    }
    for g in &right {
        let f = uncurry(a.len(), g, &hom);
        bijection &= left.binary_search(&f).is_ok() && curry(a.len(), c.len(), &f, &hom).as_ref() == Some(g);
    }
    Ok(ExponentialReport {
        uncurried: left.len(),
        curried: right.len(),
        bijection,
        ev_is_functor: ev_is_functor(a, b, &hom),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::DEFAULT_MAX_MAPS;
    use crate::rational::q;

    fn luk() -> Arc<TNorm> {
        Arc::new(TNorm::lukasiewicz())
    }

    fn three() -> Arc<QCat> {
        // p ≅ q, w apart
        let one = UnitRational::one();
        let h = q(1, 2);
        Arc::new(
            QCat::indexed(
                luk(),
                vec![one.clone(), one.clone(), h.clone(), one.clone(), one.clone(), h.clone(), h.clone(), h, one],
            )
            .unwrap(),
        )
    }

    #[test]
    fn cauchy_examples() {
        let c = three();
        assert!(is_forward_cauchy(&FCSequence::constant(c.clone(), 2).unwrap()));
        let pq = FCSequence::new(c.clone(), vec![2], vec![0, 1]).unwrap();
        assert!(is_forward_cauchy(&pq));
        let pw = FCSequence::new(c.clone(), vec![], vec![0, 2]).unwrap();
        assert!(!is_forward_cauchy(&pw));
        assert_eq!(yoneda_limits(&pw), Err(Error::NotCauchy));
        assert_eq!(pq.term(0), 2);
        assert_eq!(pq.term(4), 1);
    }

    #[test]
    fn limits() {
        let c = three();
        let lim = yoneda_limits(&FCSequence::constant(c.clone(), 0).unwrap()).unwrap();
        assert_eq!(lim.points, vec![0, 1]);
        let lim = yoneda_limits(&FCSequence::new(c.clone(), vec![0], vec![2]).unwrap()).unwrap();
        assert_eq!(lim.points, vec![2]);
    }

    #[test]
    fn alpha_monotone() {
        let c = three();
        let pw = FCSequence::new(c.clone(), vec![], vec![0, 2]).unwrap();
        assert!(is_alpha_monotone(&pw, &UnitRational::zero()));
        assert!(is_alpha_monotone(&pw, &q(1, 2)));
        assert!(!is_alpha_monotone(&pw, &q(3, 4)));
        assert_eq!(check_alpha_monotone_lemma(&pw, &UnitRational::zero()), Ok(None));
        assert!(check_alpha_monotone_lemma(&pw, &q(1, 2)).is_err());
        let pq = FCSequence::new(c, vec![2], vec![0, 1]).unwrap();
        assert_eq!(check_alpha_monotone_lemma(&pq, &UnitRational::one()), Ok(None));
    }

    #[test]
    fn approx_cases() {
        let r = approx_property(&TNorm::lukasiewicz());
        assert_eq!(r.case, ApproxCase::TopIsolated);
        assert!(r.top_included && r.sup_is_one());
        let r = approx_property(&TNorm::godel());
        assert_eq!(r.case, ApproxCase::TopApproximated);
        assert_eq!(r.closure, IntervalSet::unit());
        assert!(!r.top_included && r.sup_is_one());
        assert_eq!(approx_property(&TNorm::product()).case, ApproxCase::TopIsolated);
        assert_eq!(approx_property(&TNorm::remark4()).case, ApproxCase::TopIsolated);
    }

    #[test]
    fn function_space_limits() {
        let a = QCat::two_point(luk(), q(1, 2), q(1, 2));
        let hom = hom_power(&a, &a, DEFAULT_MAX_MAPS).unwrap();
        let space = Arc::new(hom.category.clone());
        let id = hom.index_of(&[0, 1]).unwrap();
        let seq = FCSequence::new(space.clone(), vec![0, 3], vec![id, id]).unwrap();
        let lim = function_space_limit(&a, &a, &hom, &seq).unwrap();
        assert_eq!(lim.limit, id);
        assert_eq!(lim.law_failure, None);

        let swap = hom.index_of(&[1, 0]).unwrap();
        let bad = FCSequence::new(space, vec![], vec![id, swap]).unwrap();
        assert_eq!(function_space_limit(&a, &a, &hom, &bad), Err(Error::NotCauchy));

        let outside = QCat::two_point(luk(), q(3, 4), q(1, 1));
        let hom2 = hom_power(&outside, &outside, DEFAULT_MAX_MAPS).unwrap();
        let seq = FCSequence::constant(Arc::new(hom2.category.clone()), 0).unwrap();
        assert_eq!(
            function_space_limit(&outside, &outside, &hom2, &seq),
            Err(Error::NotMValued { value: q(3, 4) })
        );
    }

    #[test]
    fn mutual_one_cycle_of_functors() {
        // Crisp indiscrete codomain: any two functors are at distance 1.
        let one = UnitRational::one();
        let a = QCat::two_point(luk(), q(1, 2), q(1, 2));
        let b = QCat::two_point(luk(), one.clone(), one);
        let hom = hom_power(&a, &b, DEFAULT_MAX_MAPS).unwrap();
        let seq = FCSequence::new(Arc::new(hom.category.clone()), vec![], vec![3, 0]).unwrap();
        let lim = function_space_limit(&a, &b, &hom, &seq).unwrap();
        assert!(lim.limit == 0 || lim.limit == 3);
        assert_eq!(lim.law_failure, None);
    }

    #[test]
    fn exponential_examples() {
        let t = luk();
        let unit = QCat::terminal(t.clone());
        let r = exponential_law(&unit, &unit, &unit, DEFAULT_MAX_MAPS).unwrap();
        assert_eq!((r.uncurried, r.curried), (1, 1));
        assert!(r.passed());
        let a = QCat::two_point(t, q(1, 2), q(1, 2));
        let r = exponential_law(&a, &a, &unit, DEFAULT_MAX_MAPS).unwrap();
        assert_eq!((r.uncurried, r.curried), (4, 4));
        assert!(r.passed());
        assert!(check_ev(&a, &a, DEFAULT_MAX_MAPS).unwrap());
    }

    #[test]
    fn functors_preserve_limits() {
        let c = three();
        let a = Arc::new(QCat::two_point(luk(), q(1, 2), q(1, 2)));
        let f = QFunctor::new(c.clone(), a, vec![0, 0, 1]).unwrap();
        assert!(f.is_functor());
        let s = FCSequence::new(c, vec![2], vec![1, 0]).unwrap();
        assert!(preserves_limits(&f, &s).unwrap());
    }
}
