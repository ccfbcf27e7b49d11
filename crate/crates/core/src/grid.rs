//! Finite rational grids for exhaustive sweeps.

use std::collections::BTreeSet;

use crate::interval::IntervalSet;
use crate::rational::{q, UnitRational};
use crate::tnorm::TNorm;

/// Rounds of `&`-closure added by [`Grid::with_block_images`]. Product
/// blocks generate infinite descending chains, so closure is cut off here.
pub const CLOSURE_ROUNDS: usize = 3;

/// A sorted, duplicate-free set of grid values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid(Vec<UnitRational>);

impl Grid {
    pub fn new(values: impl IntoIterator<Item = UnitRational>) -> Self {
        let set: BTreeSet<UnitRational> = values.into_iter().collect();
        Grid(set.into_iter().collect())
    }

    /// `{k/n | 0 <= k <= n}`.
    pub fn uniform(n: u64) -> Self {
        assert!(n >= 1, "grid denominator must be positive");
        Grid((0..=n).map(|k| q(k, n)).collect())
    }

    /// Every rational in `[0,1]` with denominator at most `n`.
    pub fn farey(n: u64) -> Self {
        assert!(n >= 1, "grid denominator must be positive");
        Grid::new((1..=n).flat_map(|d| (0..=d).map(move |k| q(k, d))))
    }

    /// Adds every block endpoint.
    pub fn with_block_endpoints(&self, t: &TNorm) -> Self {
        let ends = t.blocks().iter().flat_map(|b| [b.lo.clone(), b.hi.clone()]);
        Grid::new(self.0.iter().cloned().chain(ends))
    }

    /// Adds every block endpoint, then up to [`CLOSURE_ROUNDS`] rounds of
    /// pairwise `&`-images.
    pub fn with_block_images(&self, t: &TNorm) -> Self {
        let mut set: BTreeSet<UnitRational> = self.0.iter().cloned().collect();
        for b in t.blocks() {
            set.insert(b.lo.clone());
            set.insert(b.hi.clone());
        }
        for _ in 0..CLOSURE_ROUNDS {
            let current: Vec<UnitRational> = set.iter().cloned().collect();
            let before = set.len();
            for (i, x) in current.iter().enumerate() {
                for y in &current[i..] {
                    set.insert(t.eval(x, y));
                }
            }
            if set.len() == before {
                break;
            }
        }
        Grid(set.into_iter().collect())
    }

    /// The members lying in `k`.
    pub fn restrict(&self, k: &IntervalSet) -> Self {
        Grid(self.0.iter().filter(|x| k.contains(x)).cloned().collect())
    }

    pub fn values(&self) -> &[UnitRational] {
        &self.0
    }

    pub fn into_values(self) -> Vec<UnitRational> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Closed under `&`?
    pub fn is_closed(&self, t: &TNorm) -> bool {
        self.0
            .iter()
            .all(|x| self.0.iter().all(|y| self.0.binary_search(&t.eval(x, y)).is_ok()))
    }
}
