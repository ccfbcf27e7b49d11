//! Continuous t-norms presented as finite ordinal sums.
//!
//! Every block `[a, b]` carries a copy of the Łukasiewicz or the product
//! t-norm transported along the linear map `s ↦ a + (b - a)s`. Outside the
//! squares of the blocks the t-norm is the minimum.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalSet};
use crate::rational::UnitRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    Lukasiewicz,
    Product,
}

/// An Archimedean block `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub lo: UnitRational,
    pub hi: UnitRational,
    pub kind: BlockKind,
}

impl Block {
    pub fn new(lo: UnitRational, hi: UnitRational, kind: BlockKind) -> Result<Self> {
        if lo >= hi {
            return Err(Error::InvalidTNorm(format!("block [{lo}, {hi}] is degenerate")));
        }
        Ok(Block { lo, hi, kind })
    }

    fn contains_square(&self, x: &UnitRational, y: &UnitRational) -> bool {
        &self.lo <= x && x <= &self.hi && &self.lo <= y && y <= &self.hi
    }

    fn width(&self) -> BigRational {
        self.hi.as_rational() - self.lo.as_rational()
    }

    /// The block operation on `x, y ∈ [lo, hi]`.
    fn apply(&self, x: &UnitRational, y: &UnitRational) -> UnitRational {
        let (a, b) = (self.lo.as_rational(), self.hi.as_rational());
        let (x, y) = (x.as_rational(), y.as_rational());
        let value = match self.kind {
            BlockKind::Lukasiewicz => {
                let v = x + y - b;
                if &v < a {
                    a.clone()
                } else {
                    v
                }
            }
            BlockKind::Product => a + (x - a) * (y - a) / self.width(),
        };
        UnitRational::from_rational_unchecked(value)
    }

    /// Image of the midpoint of `[0, 1]` under the block parameterization.
    pub fn midpoint(&self) -> UnitRational {
        self.lo.midpoint(&self.hi)
    }
}

/// A certified bracket `lo <= value <= hi` for a possibly irrational value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: UnitRational,
    pub hi: UnitRational,
}

impl Enclosure {
    pub fn exact(value: UnitRational) -> Self {
        Enclosure {
            lo: value.clone(),
            hi: value,
        }
    }

    pub fn width(&self) -> BigRational {
        self.hi.as_rational() - self.lo.as_rational()
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

/// Why a candidate set fails to be a complete subquantale.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum SubquantaleFailure {
    MissingTop,
    MissingBottom,
    NotClosed {
        x: UnitRational,
        y: UnitRational,
        product: UnitRational,
    },
}

impl fmt::Display for SubquantaleFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubquantaleFailure::MissingTop => write!(f, "1 is not a member"),
            SubquantaleFailure::MissingBottom => write!(f, "0 (the empty join) is not a member"),
            SubquantaleFailure::NotClosed { x, y, product } => {
                write!(f, "{x} & {y} = {product} is not a member")
            }
        }
    }
}

/// Outcome of [`TNorm::subquantale_check`]. Closure under arbitrary joins
/// and meets needs no check: a finite union of closed intervals is closed
/// under both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubquantaleReport {
    pub lattice_closed: bool,
    pub failure: Option<SubquantaleFailure>,
}

impl SubquantaleReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// A continuous t-norm given by finitely many Archimedean blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TNorm {
    blocks: Vec<Block>,
}

pub const BUILTIN_NAMES: [&str; 4] = ["godel", "lukasiewicz", "product", "remark4"];

impl TNorm {
    /// Sorts the blocks by lower end and rejects overlapping interiors.
    pub fn new(mut blocks: Vec<Block>) -> Result<Self> {
        blocks.sort_by(|a, b| a.lo.cmp(&b.lo));
        for b in &blocks {
            if b.lo >= b.hi {
                return Err(Error::InvalidTNorm(format!("block [{}, {}] is degenerate", b.lo, b.hi)));
            }
        }
        for pair in blocks.windows(2) {
            if pair[0].hi > pair[1].lo {
                return Err(Error::InvalidTNorm(format!(
                    "blocks [{}, {}] and [{}, {}] overlap",
                    pair[0].lo, pair[0].hi, pair[1].lo, pair[1].hi
                )));
            }
        }
        Ok(TNorm { blocks })
    }

    /// The minimum t-norm: no blocks.
    pub fn godel() -> Self {
        TNorm { blocks: Vec::new() }
    }

    pub fn lukasiewicz() -> Self {
        TNorm::single(BlockKind::Lukasiewicz)
    }

    pub fn product() -> Self {
        TNorm::single(BlockKind::Product)
    }

    fn single(kind: BlockKind) -> Self {
        TNorm {
            blocks: vec![Block {
                lo: UnitRational::zero(),
                hi: UnitRational::one(),
                kind,
            }],
        }
    }

    /// `2xy` on `[0, 1/2]`, `max(x + y - 1, 1/2)` on `[1/2, 1]`, minimum
    /// elsewhere.
    pub fn remark4() -> Self {
        TNorm {
            blocks: vec![
                Block {
                    lo: UnitRational::zero(),
                    hi: UnitRational::half(),
                    kind: BlockKind::Product,
                },
                Block {
                    lo: UnitRational::half(),
                    hi: UnitRational::one(),
                    kind: BlockKind::Lukasiewicz,
                },
            ],
        }
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "godel" | "minimum" => Ok(TNorm::godel()),
            "lukasiewicz" => Ok(TNorm::lukasiewicz()),
            "product" => Ok(TNorm::product()),
            "remark4" => Ok(TNorm::remark4()),
            other => Err(Error::InvalidTNorm(format!("unknown t-norm name {other:?}"))),
        }
    }

    pub fn builtin_name(&self) -> Option<&'static str> {
        BUILTIN_NAMES
            .into_iter()
            .find(|name| TNorm::by_name(name).as_ref() == Ok(self))
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn eval(&self, x: &UnitRational, y: &UnitRational) -> UnitRational {
        match self.blocks.iter().find(|b| b.contains_square(x, y)) {
            Some(block) => block.apply(x, y),
            None => x.meet(y),
        }
    }

    pub fn is_idempotent(&self, x: &UnitRational) -> bool {
        &self.eval(x, x) == x
    }

    /// The block with `lo < x <= hi`.
    fn block_above_lo(&self, x: &UnitRational) -> Option<&Block> {
        self.blocks.iter().find(|b| &b.lo < x && x <= &b.hi)
    }

    /// The block with `lo <= x < hi`.
    fn block_below_hi(&self, x: &UnitRational) -> Option<&Block> {
        self.blocks.iter().find(|b| &b.lo <= x && x < &b.hi)
    }

    /// `sup { z | x & z <= y }`.
    ///
    /// Always rational for linearly parameterized blocks: inside a product
    /// block the bound solves a linear equation in `z`.
    pub fn residual(&self, x: &UnitRational, y: &UnitRational) -> UnitRational {
        if x <= y {
            return UnitRational::one();
        }
        let Some(block) = self.block_above_lo(x) else {
            return y.clone();
        };
        if y < &block.lo {
            return y.clone();
        }
        let (a, b) = (block.lo.as_rational(), block.hi.as_rational());
        let (xr, yr) = (x.as_rational(), y.as_rational());
        let value = match block.kind {
            BlockKind::Lukasiewicz => yr - xr + b,
            BlockKind::Product => a + (yr - a) * block.width() / (xr - a),
        };
        UnitRational::from_rational_unchecked(value)
    }

    /// `max { z | z & z <= x }`, or `ProductIrrational` when that maximum is
    /// an irrational point of a product block.
    pub fn sqrt(&self, x: &UnitRational) -> Result<UnitRational> {
        let Some(block) = self.block_below_hi(x) else {
            return Ok(x.clone());
        };
        match block.kind {
            BlockKind::Lukasiewicz => Ok(x.midpoint(&block.hi)),
            BlockKind::Product => {
                let radicand = (x.as_rational() - block.lo.as_rational()) * block.width();
                match rational_sqrt(&radicand) {
                    Some(root) => Ok(UnitRational::from_rational_unchecked(block.lo.as_rational() + root)),
                    None => Err(Error::ProductIrrational {
                        what: format!("square root of {x}"),
                    }),
                }
            }
        }
    }

    /// Bracket for [`TNorm::sqrt`] of width at most `width`. Exact when the
    /// root is rational.
    pub fn sqrt_enclosure(&self, x: &UnitRational, width: &UnitRational) -> Result<Enclosure> {
        if width.is_zero() {
            return Err(Error::Precondition("enclosure width must be positive".into()));
        }
        match self.sqrt(x) {
            Ok(v) => Ok(Enclosure::exact(v)),
            Err(Error::ProductIrrational { .. }) => {
                let block = self.block_below_hi(x).expect("irrational root lies in a block");
                // invariant: lo & lo <= x < hi & hi
                let mut lo = x.clone();
                let mut hi = block.hi.clone();
                while hi.as_rational() - lo.as_rational() > *width.as_rational() {
                    let mid = lo.midpoint(&hi);
                    if &self.eval(&mid, &mid) <= x {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                Ok(Enclosure { lo, hi })
            }
            Err(e) => Err(e),
        }
    }

    /// Complement of the union of the open block interiors.
    pub fn idempotent_set(&self) -> IntervalSet {
        let mut parts = Vec::with_capacity(self.blocks.len() + 1);
        let mut cursor = UnitRational::zero();
        for block in &self.blocks {
            parts.push(Interval {
                lo: cursor,
                hi: block.lo.clone(),
            });
            cursor = block.hi.clone();
        }
        parts.push(Interval {
            lo: cursor,
            hi: UnitRational::one(),
        });
        IntervalSet::new(parts)
    }

    /// `{ a | a & a is idempotent }`: the idempotents together with the lower
    /// half of every Łukasiewicz block.
    pub fn m_set(&self) -> IntervalSet {
        let halves = IntervalSet::new(
            self.blocks
                .iter()
                .filter(|b| b.kind == BlockKind::Lukasiewicz)
                .map(|b| Interval {
                    lo: b.lo.clone(),
                    hi: b.midpoint(),
                }),
        );
        self.idempotent_set().union(&halves)
    }

    /// Decides whether `k` is a complete subquantale.
    ///
    /// For components `[p1, q1]` and `[p2, q2]` the image under `&` is the
    /// interval `[p1 & p2, q1 & q2]` (continuity and monotonicity), so closure
    /// reduces to finitely many interval containments.
    pub fn subquantale_check(&self, k: &IntervalSet) -> SubquantaleReport {
        let fail = |failure| SubquantaleReport {
            lattice_closed: true,
            failure: Some(failure),
        };
        if !k.contains(&UnitRational::one()) {
            return fail(SubquantaleFailure::MissingTop);
        }
        if !k.contains(&UnitRational::zero()) {
            return fail(SubquantaleFailure::MissingBottom);
        }
        let parts = k.components();
        for (i, c1) in parts.iter().enumerate() {
            for c2 in &parts[i..] {
                if let Some((x, y)) = self.closure_witness(k, c1, c2) {
                    let product = self.eval(&x, &y);
                    return fail(SubquantaleFailure::NotClosed { x, y, product });
                }
            }
        }
        SubquantaleReport {
            lattice_closed: true,
            failure: None,
        }
    }

    /// Some `(x, y) ∈ c1 × c2` with `x & y ∉ k`, if one exists.
    fn closure_witness(
        &self,
        k: &IntervalSet,
        c1: &Interval,
        c2: &Interval,
    ) -> Option<(UnitRational, UnitRational)> {
        let low = self.eval(&c1.lo, &c2.lo);
        if !k.contains(&low) {
            return Some((c1.lo.clone(), c2.lo.clone()));
        }
        let high = self.eval(&c1.hi, &c2.hi);
        if !k.contains(&high) {
            return Some((c1.hi.clone(), c2.hi.clone()));
        }
        if IntervalSet::interval(low.clone(), high.clone()).is_subset(k) {
            return None;
        }
        // Both ends are members, so a gap of k sits strictly inside the image.
        let parts = k.components();
        let gap_lo = &parts.iter().find(|c| c.contains(&low))?.hi;
        let gap_hi = &parts.iter().find(|c| &c.lo > gap_lo)?.lo;
        let target = gap_lo.midpoint(gap_hi);
        // Walk (c1.lo, c2.lo) -> (c1.hi, c2.lo) -> (c1.hi, c2.hi).
        let corner = self.eval(&c1.hi, &c2.lo);
        let (x, y) = if target <= corner {
            (self.residual(&c2.lo, &target).meet(&c1.hi), c2.lo.clone())
        } else {
            (c1.hi.clone(), self.residual(&c1.hi, &target).meet(&c2.hi))
        };
        debug_assert_eq!(self.eval(&x, &y), target);
        Some((x, y))
    }

    pub fn k_subset_of_m(&self, k: &IntervalSet) -> bool {
        k.is_subset(&self.m_set())
    }

    /// Way-below relation in the complete chain `M`.
    pub fn way_below_in_m(&self, x: &UnitRational, y: &UnitRational) -> Result<bool> {
        let m = self.m_set();
        for v in [x, y] {
            if !m.contains(v) {
                return Err(Error::Domain {
                    value: v.clone(),
                    reason: "not in M".into(),
                });
            }
        }
        Ok(x.is_zero() || x < y || (x == y && m.is_isolated_from_below(x)))
    }
}

impl Default for TNorm {
    fn default() -> Self {
        TNorm::godel()
    }
}

impl fmt::Display for TNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = self.builtin_name() {
            return write!(f, "{name}");
        }
        write!(f, "ordinal sum[")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let kind = match b.kind {
                BlockKind::Lukasiewicz => "Ł",
                BlockKind::Product => "Π",
            };
            write!(f, "{kind}[{}, {}]", b.lo, b.hi)?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TNormDoc {
    blocks: Vec<Block>,
}

impl Serialize for TNorm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TNormDoc {
            blocks: self.blocks.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TNorm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = TNormDoc::deserialize(deserializer)?;
        TNorm::new(doc.blocks).map_err(serde::de::Error::custom)
    }
}

/// The residual of `∧` on the chain: `x → y` is `1` when `x <= y` and `y`
/// otherwise.
pub fn meet_residual(x: &UnitRational, y: &UnitRational) -> UnitRational {
    if x <= y {
        UnitRational::one()
    } else {
        y.clone()
    }
}

/// Exact square root of a non-negative rational, if it is rational.
fn rational_sqrt(value: &BigRational) -> Option<BigRational> {
    if value.is_negative() {
        return None;
    }
    if value.is_zero() {
        return Some(BigRational::zero());
    }
    let root = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(BigRational::new(root(value.numer())?, root(value.denom())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn grid(n: u64) -> Vec<UnitRational> {
        (0..=n).map(|k| q(k, n)).collect()
    }

    #[test]
    fn eval_examples() {
        let l = TNorm::lukasiewicz();
        assert_eq!(l.eval(&q(7, 10), &q(6, 10)), q(3, 10));
        let r4 = TNorm::remark4();
        assert_eq!(r4.eval(&q(1, 4), &q(1, 2)), q(1, 4));
        // 2xy on the lower block
        assert_eq!(r4.eval(&q(1, 4), &q(1, 4)), q(1, 8));
        assert_eq!(r4.eval(&q(7, 8), &q(7, 8)), q(3, 4));
        assert_eq!(r4.eval(&q(3, 5), &q(3, 5)), q(1, 2));
        for t in [TNorm::godel(), l, TNorm::product(), r4] {
            for x in grid(12) {
                assert_eq!(t.eval(&x, &UnitRational::one()), x);
            }
        }
    }

    #[test]
    fn rejects_overlapping_blocks() {
        let blocks = vec![
            Block::new(q(0, 1), q(1, 2), BlockKind::Product).unwrap(),
            Block::new(q(1, 3), q(1, 1), BlockKind::Lukasiewicz).unwrap(),
        ];
        assert!(TNorm::new(blocks).is_err());
        assert!(Block::new(q(1, 2), q(1, 2), BlockKind::Product).is_err());
    }

    #[test]
    fn residual_examples() {
        let l = TNorm::lukasiewicz();
        assert_eq!(l.residual(&q(7, 10), &q(3, 10)), q(3, 5));
        assert_eq!(l.residual(&q(3, 10), &UnitRational::one()), UnitRational::one());
        assert_eq!(l.residual(&UnitRational::one(), &q(2, 7)), q(2, 7));
        let p = TNorm::product();
        assert_eq!(p.residual(&q(1, 2), &q(1, 4)), q(1, 2));
        assert_eq!(TNorm::godel().residual(&q(7, 10), &q(3, 10)), q(3, 10));
    }

    #[test]
    fn residual_is_grid_maximum() {
        // brute force: largest grid z with x & z <= y
        for t in [TNorm::lukasiewicz(), TNorm::product(), TNorm::remark4(), TNorm::godel()] {
            let g = grid(24);
            for x in &g {
                for y in &g {
                    let best = g.iter().filter(|z| &t.eval(x, z) <= y).max().unwrap();
                    let exact = t.residual(x, y);
                    assert!(&t.eval(x, &exact) <= y, "{t} {x} {y}");
                    assert!(best <= &exact);
                    // nothing on the grid above the exact value qualifies
                    assert!(g.iter().filter(|z| *z > &exact).all(|z| &t.eval(x, z) > y));
                }
            }
        }
    }

    #[test]
    fn meet_residual_examples() {
        assert_eq!(meet_residual(&q(3, 10), &q(7, 10)), UnitRational::one());
        assert_eq!(meet_residual(&q(7, 10), &q(3, 10)), q(3, 10));
        assert_eq!(meet_residual(&q(2, 9), &q(2, 9)), UnitRational::one());
    }

    #[test]
    fn sqrt_examples() {
        let l = TNorm::lukasiewicz();
        assert_eq!(l.sqrt(&UnitRational::zero()).unwrap(), q(1, 2));
        assert_eq!(l.sqrt(&UnitRational::one()).unwrap(), UnitRational::one());
        assert_eq!(l.sqrt(&q(3, 5)).unwrap(), q(4, 5));
        let p = TNorm::product();
        assert_eq!(p.sqrt(&q(1, 4)).unwrap(), q(1, 2));
        assert!(matches!(p.sqrt(&q(1, 2)), Err(Error::ProductIrrational { .. })));
        assert_eq!(TNorm::godel().sqrt(&q(1, 3)).unwrap(), q(1, 3));
    }

    #[test]
    fn sqrt_matches_grid_oracle() {
        // max z on {k/1000} with z & z <= x, for x on a coarser grid
        let l = TNorm::lukasiewicz();
        let fine = grid(1000);
        for x in grid(20) {
            let best = fine.iter().filter(|z| l.eval(z, z) <= x).max().unwrap();
            assert_eq!(best, &l.sqrt(&x).unwrap());
        }
    }

    #[test]
    fn sqrt_enclosure_brackets_irrational_root() {
        let p = TNorm::product();
        let w = q(1, 1_000_000);
        let e = p.sqrt_enclosure(&q(1, 2), &w).unwrap();
        assert!(e.width() <= *w.as_rational());
        assert!(p.eval(&e.lo, &e.lo) <= q(1, 2));
        assert!(p.eval(&e.hi, &e.hi) > q(1, 2));
        let exact = TNorm::lukasiewicz().sqrt_enclosure(&q(3, 5), &w).unwrap();
        assert!(exact.is_exact());
    }

    #[test]
    fn idempotent_sets() {
        assert_eq!(TNorm::godel().idempotent_set(), IntervalSet::unit());
        assert_eq!(
            TNorm::lukasiewicz().idempotent_set(),
            IntervalSet::points([q(0, 1), q(1, 1)])
        );
        assert_eq!(
            TNorm::remark4().idempotent_set(),
            IntervalSet::points([q(0, 1), q(1, 2), q(1, 1)])
        );
    }

    #[test]
    fn subquantale_examples() {
        let l = TNorm::lukasiewicz();
        assert!(l.subquantale_check(&IntervalSet::points([q(0, 1), q(1, 2), q(1, 1)])).passed());
        for t in [TNorm::godel(), TNorm::product(), TNorm::remark4(), l.clone()] {
            assert!(t.subquantale_check(&IntervalSet::points([q(0, 1), q(1, 1)])).passed());
        }
        let r = l.subquantale_check(&IntervalSet::points([q(0, 1), q(3, 4), q(1, 1)]));
        assert_eq!(
            r.failure,
            Some(SubquantaleFailure::NotClosed {
                x: q(3, 4),
                y: q(3, 4),
                product: q(1, 2)
            })
        );
        assert_eq!(
            l.subquantale_check(&IntervalSet::points([q(0, 1), q(1, 2)])).failure,
            Some(SubquantaleFailure::MissingTop)
        );
        assert_eq!(
            l.subquantale_check(&IntervalSet::points([q(1, 2), q(1, 1)])).failure,
            Some(SubquantaleFailure::MissingBottom)
        );
    }

    #[test]
    fn subquantale_interior_gap_witness() {
        // [0,1/2] ∪ [3/4,1] under Łukasiewicz: 3/4 & 3/4 = 1/2 is fine, but
        // 7/8 & 3/4 = 5/8 falls in the gap.
        let k = IntervalSet::new([
            Interval::new(q(0, 1), q(1, 2)).unwrap(),
            Interval::new(q(3, 4), q(1, 1)).unwrap(),
        ]);
        let r = TNorm::lukasiewicz().subquantale_check(&k);
        match r.failure {
            Some(SubquantaleFailure::NotClosed { x, y, product }) => {
                assert_eq!(TNorm::lukasiewicz().eval(&x, &y), product);
                assert!(!k.contains(&product));
            }
            other => panic!("expected closure failure, got {other:?}"),
        }
        // M itself is always a subquantale
        for t in [TNorm::godel(), TNorm::lukasiewicz(), TNorm::product(), TNorm::remark4()] {
            assert!(t.subquantale_check(&t.m_set()).passed(), "{t}");
        }
    }

    #[test]
    fn k_subset_examples() {
        let l = TNorm::lukasiewicz();
        assert!(l.k_subset_of_m(&IntervalSet::points([q(0, 1), q(1, 2), q(1, 1)])));
        assert!(!l.k_subset_of_m(&IntervalSet::points((0..=4).map(|k| q(k, 4)))));
        assert!(TNorm::product().k_subset_of_m(&IntervalSet::points([q(0, 1), q(1, 1)])));
    }

    #[test]
    fn way_below_examples() {
        let one = UnitRational::one();
        assert!(TNorm::lukasiewicz().way_below_in_m(&one, &one).unwrap());
        assert!(!TNorm::godel().way_below_in_m(&one, &one).unwrap());
        assert!(TNorm::godel().way_below_in_m(&q(1, 2), &one).unwrap());
        assert!(TNorm::godel().way_below_in_m(&UnitRational::zero(), &UnitRational::zero()).unwrap());
        assert!(!TNorm::godel().way_below_in_m(&q(1, 2), &q(1, 2)).unwrap());
        assert!(matches!(
            TNorm::lukasiewicz().way_below_in_m(&q(3, 4), &one),
            Err(Error::Domain { .. })
        ));
        // remark4: M = {0} ∪ [1/2,3/4] ∪ {1}; 1/2 is compact
        assert!(TNorm::remark4().way_below_in_m(&q(1, 2), &q(1, 2)).unwrap());
    }

    #[test]
    fn serde_round_trip() {
        let text = r#"{"blocks":[{"lo":"0/1","hi":"1/2","kind":"product"},{"lo":"1/2","hi":"1/1","kind":"lukasiewicz"}]}"#;
        let t: TNorm = serde_json::from_str(text).unwrap();
        assert_eq!(t, TNorm::remark4());
        assert_eq!(serde_json::to_string(&t).unwrap(), text);
        assert_eq!(t.builtin_name(), Some("remark4"));
        let bad = r#"{"blocks":[{"lo":"0/1","hi":"3/4","kind":"product"},{"lo":"1/2","hi":"1/1","kind":"lukasiewicz"}]}"#;
        assert!(serde_json::from_str::<TNorm>(bad).is_err());
    }
}
