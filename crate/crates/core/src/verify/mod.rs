//! Verification suites: each sweeps one family of laws over generated
//! instances and returns a [`Report`].

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::WorkspaceConfig;
use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::lift::close_transitively;
use crate::qcat::QCat;
use crate::rational::{q, UnitRational};
use crate::report::Report;
use crate::tnorm::TNorm;

mod categorical;
mod laws;
mod limits;

pub use categorical::{
    ccc_equivalence, ccc_matrix, monoidal, power_existence, suitable, universal_sweep, UniversalSummary,
};
pub use laws::{approx, resd_prop, tnorm_laws, IDEMPOTENT_SAMPLES, RANDOM_TRIPLES, RESIDUAL_GRID};
pub use limits::{direct_tail_value, exponential_law, yoneda};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    TNormLaws,
    ResdProp,
    Suitable,
    CccEquivalence,
    PowerExistence,
    Monoidal,
    ExponentialLaw,
    Yoneda,
    Approx,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::TNormLaws,
        Suite::ResdProp,
        Suite::Suitable,
        Suite::CccEquivalence,
        Suite::PowerExistence,
        Suite::Monoidal,
        Suite::ExponentialLaw,
        Suite::Yoneda,
        Suite::Approx,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TNormLaws => "tnorm_laws",
            Suite::ResdProp => "resd_prop",
            Suite::Suitable => "suitable",
            Suite::CccEquivalence => "ccc_equivalence",
            Suite::PowerExistence => "power_existence",
            Suite::Monoidal => "monoidal",
            Suite::ExponentialLaw => "exponential_law",
            Suite::Yoneda => "yoneda",
            Suite::Approx => "approx",
        }
    }

    pub fn run(self, cfg: &WorkspaceConfig) -> Report {
        match self {
            Suite::TNormLaws => tnorm_laws(cfg),
            Suite::ResdProp => resd_prop(cfg),
            Suite::Suitable => suitable(cfg),
            Suite::CccEquivalence => ccc_equivalence(cfg),
            Suite::PowerExistence => power_existence(cfg),
            Suite::Monoidal => monoidal(cfg),
            Suite::ExponentialLaw => exponential_law(cfg),
            Suite::Yoneda => yoneda(cfg),
            Suite::Approx => approx(cfg),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

pub(crate) fn rng(cfg: &WorkspaceConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// A random rational in `[0,1]` with denominator at most `max_den`.
pub fn random_unit(rng: &mut impl Rng, max_den: u64) -> UnitRational {
    let d = rng.gen_range(1..=max_den);
    q(rng.gen_range(0..=d), d)
}

/// A random rational in `[lo, hi]`.
pub fn random_between(rng: &mut impl Rng, lo: &UnitRational, hi: &UnitRational, max_den: u64) -> UnitRational {
    let s = random_unit(rng, max_den);
    let v = lo.as_rational() + (hi.as_rational() - lo.as_rational()) * s.as_rational();
    UnitRational::new(v).expect("convex combination stays in [0,1]")
}

/// A random category on `n` points with values in the finite, `&`-closed
/// set `values` (which must contain 0 and 1): random entries, then closed.
pub fn random_category(rng: &mut impl Rng, t: &Arc<TNorm>, n: usize, values: &[UnitRational]) -> QCat {
    let mut m: Vec<UnitRational> = (0..n * n).map(|_| values[rng.gen_range(0..values.len())].clone()).collect();
    for x in 0..n {
        m[x * n + x] = UnitRational::one();
    }
    close_transitively(t, n, &mut m);
    QCat::indexed(t.clone(), m).expect("square")
}

/// Every valid category on `n` points with off-diagonal values in `values`,
/// in lexicographic order of the row-major off-diagonal entries.
pub fn all_categories(t: &Arc<TNorm>, n: usize, values: &[UnitRational]) -> Vec<QCat> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; slots.len()];
    loop {
        let mut m = vec![UnitRational::one(); n * n];
        for (s, &(x, y)) in slots.iter().enumerate() {
            m[x * n + y] = values[idx[s]].clone();
        }
        let c = QCat::indexed(t.clone(), m).expect("square");
        if c.is_valid() {
            out.push(c);
        }
        // odometer, last slot fastest
        let mut pos = slots.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// A finite subquantale of `M`: the quarter grid inside `M`, closed under
/// `&`, falling back to `{0, 1}` plus block endpoints.
pub fn finite_m_values(t: &TNorm) -> Vec<UnitRational> {
    let m = t.m_set();
    let candidate = Grid::uniform(4).restrict(&m).with_block_images(t).restrict(&m);
    if candidate.is_closed(t) {
        return candidate.into_values();
    }
    Grid::new([UnitRational::zero(), UnitRational::one()])
        .with_block_images(t)
        .restrict(&t.idempotent_set())
        .into_values()
}
