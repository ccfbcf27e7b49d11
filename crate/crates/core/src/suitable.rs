//! Suitable subsets `S ⊆ [0,1]²` and the stable subconstructs they cut out.
//!
//! A suitable set is closed under joins and meets of pairs (S1), under
//! swapping coordinates (S2) and under the componentwise t-norm (S3).
//! `Cat_S` is the full subcategory of categories whose every pair
//! `(r(x,y), r(y,x))` lies in `S`; it is reflective and coreflective, with
//! [`coreflect`] and [`reflect`] computing the two adjoints on objects.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::IntervalSet;
use crate::lift::close_transitively;
use crate::qcat::QCat;
use crate::rational::UnitRational;
use crate::tnorm::{SubquantaleFailure, TNorm};

pub type Pair = (UnitRational, UnitRational);

/// Default round cap for [`reflect`].
pub const DEFAULT_MAX_ROUNDS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuitableShape {
    /// `K × K` for a complete subquantale `K`.
    KSquare(IntervalSet),
    /// `{(p, p) | p ∈ K}`.
    KDiagonal(IntervalSet),
    /// `{(x, y) | x & x <= y <= √x}`.
    SqrtBand,
    Explicit(BTreeSet<Pair>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuitableSet {
    pub shape: SuitableShape,
    pub tnorm: Arc<TNorm>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axiom {
    S1,
    S2,
    S3,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A violated axiom with the pairs that exhibit it: the inputs followed by
/// the offending output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuitabilityViolation {
    pub axiom: Axiom,
    pub witness: Vec<Pair>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuitabilityReport {
    /// Number of member pairs examined (0 for the analytic checks).
    pub members_checked: usize,
    pub violation: Option<SuitabilityViolation>,
}

impl SuitabilityReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

fn violation(axiom: Axiom, witness: Vec<Pair>, detail: impl Into<String>) -> SuitabilityReport {
    SuitabilityReport {
        members_checked: 0,
        violation: Some(SuitabilityViolation {
            axiom,
            witness,
            detail: detail.into(),
        }),
    }
}

fn join_pair(p: &Pair, q: &Pair) -> Pair {
    (p.0.join(&q.0), p.1.join(&q.1))
}

fn meet_pair(p: &Pair, q: &Pair) -> Pair {
    (p.0.meet(&q.0), p.1.meet(&q.1))
}

impl SuitableSet {
    pub fn new(shape: SuitableShape, tnorm: Arc<TNorm>) -> Self {
        SuitableSet { shape, tnorm }
    }

    pub fn k_square(k: IntervalSet, tnorm: Arc<TNorm>) -> Self {
        SuitableSet::new(SuitableShape::KSquare(k), tnorm)
    }

    pub fn k_diagonal(k: IntervalSet, tnorm: Arc<TNorm>) -> Self {
        SuitableSet::new(SuitableShape::KDiagonal(k), tnorm)
    }

    pub fn sqrt_band(tnorm: Arc<TNorm>) -> Self {
        SuitableSet::new(SuitableShape::SqrtBand, tnorm)
    }

    pub fn explicit(pairs: impl IntoIterator<Item = Pair>, tnorm: Arc<TNorm>) -> Self {
        SuitableSet::new(SuitableShape::Explicit(pairs.into_iter().collect()), tnorm)
    }

    /// Exact membership. The band is decided through `y <= √x ⇔ y & y <= x`,
    /// so no root is ever taken.
    pub fn contains(&self, x: &UnitRational, y: &UnitRational) -> bool {
        match &self.shape {
            SuitableShape::KSquare(k) => k.contains(x) && k.contains(y),
            SuitableShape::KDiagonal(k) => x == y && k.contains(x),
            SuitableShape::SqrtBand => &self.tnorm.eval(x, x) <= y && &self.tnorm.eval(y, y) <= x,
            SuitableShape::Explicit(pairs) => pairs.contains(&(x.clone(), y.clone())),
        }
    }

    /// S1–S3. The `K` variants reduce to the subquantale check on `K`; the
    /// band is checked exhaustively on `grid` plus block endpoints; explicit
    /// sets are checked exhaustively.
    pub fn check(&self, grid: &[UnitRational]) -> SuitabilityReport {
        match &self.shape {
            SuitableShape::KSquare(k) | SuitableShape::KDiagonal(k) => self.check_k(k),
            SuitableShape::SqrtBand => {
                let mut values = grid.to_vec();
                for b in self.tnorm.blocks() {
                    values.push(b.lo.clone());
                    values.push(b.hi.clone());
                }
                self.check_on_values(values)
            }
            SuitableShape::Explicit(pairs) => self.check_explicit(pairs),
        }
    }

    fn check_k(&self, k: &IntervalSet) -> SuitabilityReport {
        let one = UnitRational::one();
        let zero = UnitRational::zero();
        let report = self.tnorm.subquantale_check(k);
        match report.failure {
            None => SuitabilityReport {
                members_checked: 0,
                violation: None,
            },
            Some(SubquantaleFailure::MissingTop) => {
                violation(Axiom::S1, vec![(one.clone(), one)], "empty meet (1,1) is not a member")
            }
            Some(SubquantaleFailure::MissingBottom) => {
                violation(Axiom::S1, vec![(zero.clone(), zero)], "empty join (0,0) is not a member")
            }
            Some(SubquantaleFailure::NotClosed { x, y, product }) => violation(
                Axiom::S3,
                vec![(x.clone(), x.clone()), (y.clone(), y.clone()), (product.clone(), product.clone())],
                format!("{x} & {y} = {product} leaves K"),
            ),
        }
    }

    fn check_explicit(&self, pairs: &BTreeSet<Pair>) -> SuitabilityReport {
        let (zero, one) = (UnitRational::zero(), UnitRational::one());
        let has = |p: &Pair| pairs.contains(p);
        if !has(&(zero.clone(), zero.clone())) {
            return violation(Axiom::S1, vec![(zero.clone(), zero)], "empty join (0,0) is not a member");
        }
        if !has(&(one.clone(), one.clone())) {
            return violation(Axiom::S1, vec![(one.clone(), one)], "empty meet (1,1) is not a member");
        }
        let members: Vec<&Pair> = pairs.iter().collect();
        for (i, p) in members.iter().enumerate() {
            for q in &members[i + 1..] {
                for (out, what) in [(join_pair(p, q), "join"), (meet_pair(p, q), "meet")] {
                    if !has(&out) {
                        return violation(
                            Axiom::S1,
                            vec![(*p).clone(), (*q).clone(), out],
                            format!("{what} is not a member"),
                        );
                    }
                }
            }
        }
        for p in &members {
            let swapped = (p.1.clone(), p.0.clone());
            if !has(&swapped) {
                return violation(Axiom::S2, vec![(*p).clone(), swapped], "swap is not a member");
            }
        }
        for (i, p) in members.iter().enumerate() {
            for q in &members[i..] {
                let out = (self.tnorm.eval(&p.0, &q.0), self.tnorm.eval(&p.1, &q.1));
                if !has(&out) {
                    return violation(
                        Axiom::S3,
                        vec![(*p).clone(), (*q).clone(), out],
                        "componentwise & is not a member",
                    );
                }
            }
        }
        SuitabilityReport {
            members_checked: members.len(),
            violation: None,
        }
    }

    /// Exhaustive S1–S3 over the members of `S ∩ V²` for a finite value set
    /// `V` (0 and 1 are always added). Joins and meets of grid pairs stay on
    /// the grid, so S1 and S2 run on index tables; S3 falls back to exact
    /// membership when a product leaves the grid.
    pub fn check_on_values(&self, mut values: Vec<UnitRational>) -> SuitabilityReport {
        values.push(UnitRational::zero());
        values.push(UnitRational::one());
        values.sort();
        values.dedup();
        let n = values.len();
        let t = &self.tnorm;
        let mut member = vec![false; n * n];
        let mut members = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.contains(&values[i], &values[j]) {
                    member[i * n + j] = true;
                    members.push((i, j));
                }
            }
        }
        let pair = |(i, j): (usize, usize)| (values[i].clone(), values[j].clone());
        let (top, bottom) = (n - 1, 0);
        if !member[bottom] {
            return violation(Axiom::S1, vec![pair((0, 0))], "empty join (0,0) is not a member");
        }
        if !member[top * n + top] {
            return violation(Axiom::S1, vec![pair((top, top))], "empty meet (1,1) is not a member");
        }
        for (a, &p) in members.iter().enumerate() {
            for &q in &members[a + 1..] {
                let join = (p.0.max(q.0), p.1.max(q.1));
                let meet = (p.0.min(q.0), p.1.min(q.1));
                for (out, what) in [(join, "join"), (meet, "meet")] {
                    if !member[out.0 * n + out.1] {
                        return violation(Axiom::S1, vec![pair(p), pair(q), pair(out)], format!("{what} is not a member"));
                    }
                }
            }
        }
        for &(i, j) in &members {
            if !member[j * n + i] {
                return violation(Axiom::S2, vec![pair((i, j)), pair((j, i))], "swap is not a member");
            }
        }
        // & table: grid index when the product is on the grid.
        let mut products: Vec<(UnitRational, Option<usize>)> = Vec::with_capacity(n * n);
        for i in 0..n {
            for k in 0..n {
                let v = t.eval(&values[i], &values[k]);
                let idx = values.binary_search(&v).ok();
                products.push((v, idx));
            }
        }
        for (a, &p) in members.iter().enumerate() {
            for &q in &members[a..] {
                let (u, ui) = &products[p.0 * n + q.0];
                let (w, wi) = &products[p.1 * n + q.1];
                let inside = match (ui, wi) {
                    (Some(ui), Some(wi)) => member[ui * n + wi],
                    _ => self.contains(u, w),
                };
                if !inside {
                    return violation(
                        Axiom::S3,
                        vec![pair(p), pair(q), (u.clone(), w.clone())],
                        "componentwise & is not a member",
                    );
                }
            }
        }
        SuitabilityReport {
            members_checked: members.len(),
            violation: None,
        }
    }

    /// Largest member `<= (a, b)` componentwise.
    pub fn largest_below(&self, a: &UnitRational, b: &UnitRational) -> Result<Pair> {
        let t = &self.tnorm;
        let missing = || Error::Precondition(format!("no member below ({a}, {b}); S is not suitable"));
        match &self.shape {
            SuitableShape::KSquare(k) => Ok((k.floor(a).ok_or_else(missing)?, k.floor(b).ok_or_else(missing)?)),
            SuitableShape::KDiagonal(k) => {
                let p = k.floor(&a.meet(b)).ok_or_else(missing)?;
                Ok((p.clone(), p))
            }
            SuitableShape::SqrtBand => {
                // min(a, √b), min(b, √a); the root is needed only when it binds.
                let bound = |x: &UnitRational, y: &UnitRational| -> Result<UnitRational> {
                    if &t.eval(x, x) <= y {
                        Ok(x.clone())
                    } else {
                        t.sqrt(y)
                    }
                };
                Ok((bound(a, b)?, bound(b, a)?))
            }
            SuitableShape::Explicit(pairs) => {
                let below: Vec<&Pair> = pairs.iter().filter(|p| &p.0 <= a && &p.1 <= b).collect();
                let first = below.first().ok_or_else(missing)?;
                let best = below.iter().fold((*first).clone(), |acc, p| join_pair(&acc, p));
                if !pairs.contains(&best) {
                    return Err(Error::Precondition("explicit set is not closed under joins".into()));
                }
                Ok(best)
            }
        }
    }

    /// Least member `>= (a, b)` componentwise.
    pub fn least_above(&self, a: &UnitRational, b: &UnitRational) -> Result<Pair> {
        let t = &self.tnorm;
        let missing = || Error::Precondition(format!("no member above ({a}, {b}); S is not suitable"));
        match &self.shape {
            SuitableShape::KSquare(k) => Ok((k.ceil(a).ok_or_else(missing)?, k.ceil(b).ok_or_else(missing)?)),
            SuitableShape::KDiagonal(k) => {
                let p = k.ceil(&a.join(b)).ok_or_else(missing)?;
                Ok((p.clone(), p))
            }
            SuitableShape::SqrtBand => Ok((a.join(&t.eval(b, b)), b.join(&t.eval(a, a)))),
            SuitableShape::Explicit(pairs) => {
                let above: Vec<&Pair> = pairs.iter().filter(|p| &p.0 >= a && &p.1 >= b).collect();
                let first = above.first().ok_or_else(missing)?;
                let best = above.iter().fold((*first).clone(), |acc, p| meet_pair(&acc, p));
                if !pairs.contains(&best) {
                    return Err(Error::Precondition("explicit set is not closed under meets".into()));
                }
                Ok(best)
            }
        }
    }

    /// Every pair `(r(x,y), r(y,x))` is a member.
    pub fn is_in_cat_s(&self, c: &QCat) -> bool {
        let n = c.len();
        (0..n).all(|x| (x..n).all(|y| self.contains(c.r(x, y), c.r(y, x))))
    }
}

/// The coreflection `C(r)`: each pair lowered to the largest member below
/// it. The result is already transitive.
pub fn coreflect(s: &SuitableSet, c: &QCat) -> Result<QCat> {
    let n = c.len();
    let mut matrix = c.matrix().to_vec();
    for x in 0..n {
        for y in x..n {
            let (p, q) = s.largest_below(c.r(x, y), c.r(y, x))?;
            matrix[x * n + y] = p;
            matrix[y * n + x] = q;
        }
    }
    c.with_matrix(matrix)
}

/// The reflection `R(r)`: alternately raise every pair to the least member
/// above it and close transitively, until nothing moves.
///
/// Terminates whenever the generated values form a finite set (all blocks
/// Łukasiewicz, or crisp inputs); otherwise gives up after `max_rounds`.
pub fn reflect(s: &SuitableSet, c: &QCat, max_rounds: usize) -> Result<QCat> {
    let n = c.len();
    let mut current = c.matrix().to_vec();
    for _ in 0..max_rounds {
        let mut next = current.clone();
        for x in 0..n {
            for y in x..n {
                let (p, q) = s.least_above(&current[x * n + y], &current[y * n + x])?;
                next[x * n + y] = p;
                next[y * n + x] = q;
            }
        }
        close_transitively(&s.tnorm, n, &mut next);
        if next == current {
            return c.with_matrix(current);
        }
        current = next;
    }
    Err(Error::Nontermination { rounds: max_rounds })
}

/// File form: `{ "variant": ..., "k": ..., "pairs": ... }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuitableDoc {
    pub variant: String,
    #[serde(default)]
    pub k: Option<IntervalSet>,
    #[serde(default)]
    pub pairs: Option<Vec<Pair>>,
}

impl SuitableShape {
    pub fn to_doc(&self) -> SuitableDoc {
        let (variant, k, pairs) = match self {
            SuitableShape::KSquare(k) => ("k_square", Some(k.clone()), None),
            SuitableShape::KDiagonal(k) => ("k_diagonal", Some(k.clone()), None),
            SuitableShape::SqrtBand => ("sqrt_band", None, None),
            SuitableShape::Explicit(p) => ("explicit", None, Some(p.iter().cloned().collect())),
        };
        SuitableDoc {
            variant: variant.into(),
            k,
            pairs,
        }
    }

    pub fn from_doc(doc: SuitableDoc) -> Result<Self> {
        let need_k = |k: Option<IntervalSet>| k.ok_or_else(|| Error::Parse(format!("variant {} needs \"k\"", doc.variant)));
        match doc.variant.as_str() {
            "k_square" => Ok(SuitableShape::KSquare(need_k(doc.k)?)),
            "k_diagonal" => Ok(SuitableShape::KDiagonal(need_k(doc.k)?)),
            "sqrt_band" => Ok(SuitableShape::SqrtBand),
            "explicit" => Ok(SuitableShape::Explicit(
                doc.pairs
                    .ok_or_else(|| Error::Parse("variant explicit needs \"pairs\"".into()))?
                    .into_iter()
                    .collect(),
            )),
            other => Err(Error::Parse(format!("unknown suitable-set variant {other:?}"))),
        }
    }
}
