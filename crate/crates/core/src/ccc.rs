//! Cartesian closedness of `K-Cat`: the decidable criterion `K ⊆ M`, the
//! equivalent lattice identity, and the finite counterexample built from a
//! failure of that identity.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::IntervalSet;
use crate::lift::{final_lift, Leg};
use crate::qcat::QCat;
use crate::rational::UnitRational;
use crate::tnorm::TNorm;

/// `K-Cat` is cartesian closed iff `a & a` is idempotent for every `a ∈ K`.
///
/// Errors with `Precondition` when `K` is not a complete subquantale.
pub fn ccc_criterion(t: &TNorm, k: &IntervalSet) -> Result<bool> {
    let report = t.subquantale_check(k);
    if let Some(failure) = report.failure {
        return Err(Error::Precondition(format!("K is not a subquantale: {failure}")));
    }
    Ok(t.k_subset_of_m(k))
}

/// The two sides of `(u & v) ∧ r = ((u ∧ r) & v) ∨ ((v ∧ r) & u)`.
pub fn identity_sides(t: &TNorm, u: &UnitRational, v: &UnitRational, r: &UnitRational) -> (UnitRational, UnitRational) {
    let lhs = t.eval(u, v).meet(r);
    let rhs = t.eval(&u.meet(r), v).join(&t.eval(&v.meet(r), u));
    (lhs, rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityFailure {
    pub u: UnitRational,
    pub v: UnitRational,
    pub r: UnitRational,
    pub lhs: UnitRational,
    pub rhs: UnitRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub triples_checked: usize,
    pub failure: Option<IdentityFailure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn descending(grid: &[UnitRational]) -> Vec<UnitRational> {
    let mut g = grid.to_vec();
    g.sort();
    g.dedup();
    g.reverse();
    g
}

fn require_subset(grid: &[UnitRational], k: &IntervalSet) -> Result<()> {
    match grid.iter().find(|x| !k.contains(x)) {
        Some(x) => Err(Error::Precondition(format!("grid value {x} is not in K"))),
        None => Ok(()),
    }
}

/// Tests the identity on every triple of `grid³`.
///
/// Triples are visited in descending lexicographic order, so the reported
/// failure has the largest `u`, then `v`, then `r`.
pub fn ccc_identity_check(t: &TNorm, k: &IntervalSet, grid: &[UnitRational]) -> Result<IdentityReport> {
    require_subset(grid, k)?;
    let g = descending(grid);
    let mut checked = 0;
    for u in &g {
        for v in &g {
            for r in &g {
                checked += 1;
                let (lhs, rhs) = identity_sides(t, u, v, r);
                if lhs != rhs {
                    return Ok(IdentityReport {
                        triples_checked: checked,
                        failure: Some(IdentityFailure {
                            u: u.clone(),
                            v: v.clone(),
                            r: r.clone(),
                            lhs,
                            rhs,
                        }),
                    });
                }
            }
        }
    }
    Ok(IdentityReport {
        triples_checked: checked,
        failure: None,
    })
}

/// A final sink that `A × −` fails to preserve.
///
/// `B = ({x,z}, u)`, `C = ({z,y}, v)` and `D = ({x,z,y}, …)` with
/// `d(x,y) = u & v`; the sink `{B → D, C → D}` is final, yet the final
/// structure on `A × D` induced by `{A×B, A×C}` gives
/// `d_fin((0,x),(1,y)) = rhs` while the product gives `lhs`.
#[derive(Clone, Debug)]
pub struct CCCWitness {
    pub u: UnitRational,
    pub v: UnitRational,
    pub r: UnitRational,
    pub lhs: UnitRational,
    pub rhs: UnitRational,
    pub a: QCat,
    pub b: QCat,
    pub c: QCat,
    pub d: QCat,
    /// Final structure on the carrier of `A × D`.
    pub lifted: QCat,
    /// `d_fin((0,x),(1,y))` read off `lifted`.
    pub d_fin: UnitRational,
}

fn symmetric(t: &Arc<TNorm>, names: &[&str], upper: &[UnitRational]) -> Result<QCat> {
    let n = names.len();
    let mut matrix = vec![UnitRational::one(); n * n];
    let mut it = upper.iter();
    for x in 0..n {
        for y in x + 1..n {
            let v = it.next().expect("upper triangle").clone();
            matrix[x * n + y] = v.clone();
            matrix[y * n + x] = v;
        }
    }
    QCat::from_flat(t.clone(), names.iter().map(|s| s.to_string()).collect(), matrix)
}

pub fn ccc_witness(t: Arc<TNorm>, u: UnitRational, v: UnitRational, r: UnitRational) -> Result<CCCWitness> {
    let (lhs, rhs) = identity_sides(&t, &u, &v, &r);
    if lhs == rhs {
        return Err(Error::InvalidWitness { at: Box::new([u, v, r]) });
    }
    let a = symmetric(&t, &["0", "1"], std::slice::from_ref(&r))?;
    let b = symmetric(&t, &["x", "z"], std::slice::from_ref(&u))?;
    let c = symmetric(&t, &["z", "y"], std::slice::from_ref(&v))?;
    let d = symmetric(&t, &["x", "z", "y"], &[u.clone(), t.eval(&u, &v), v.clone()])?;
    let ab = QCat::product(&a, &b)?;
    let ac = QCat::product(&a, &c)?;
    let ad = QCat::product(&a, &d)?;
    // (i, p) ↦ (i, f(p)) with B, C included into D = {x, z, y}
    let into_ad = |embed: &[usize]| -> Vec<usize> {
        (0..2).flat_map(|i| embed.iter().map(move |&p| i * 3 + p)).collect()
    };
    let (mb, mc) = (into_ad(&[0, 1]), into_ad(&[1, 2]));
    let lifted = final_lift(
        t.clone(),
        ad.points().to_vec(),
        &[Leg::new(&ab, &mb), Leg::new(&ac, &mc)],
    )?;
    let d_fin = lifted.r(0, 3 + 2).clone();
    Ok(CCCWitness {
        u,
        v,
        r,
        lhs,
        rhs,
        a,
        b,
        c,
        d,
        lifted,
        d_fin,
    })
}

impl CCCWitness {
    /// `d_fin` matches the closed form and differs from the product value.
    pub fn is_consistent(&self) -> bool {
        let product_value = self.a.r(0, 1).meet(self.d.r(0, 2));
        self.d_fin == self.rhs && product_value == self.lhs && self.lhs != self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerFailure {
    pub u: UnitRational,
    pub v: UnitRational,
    pub x: usize,
    pub y: usize,
    pub lhs: UnitRational,
    pub rhs: UnitRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerReport {
    pub cases_checked: usize,
    pub failure: Option<PowerFailure>,
}

impl PowerReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// `(u & v) ∧ r(x,y) <= ⋁_z (u ∧ r(x,z)) & (v ∧ r(z,y))` for grid `u, v`
/// and every pair of points; the condition for `(𝟚, u, v)`-powers of `c`
/// to exist. `u, v` run in descending order, pairs in ascending order.
pub fn power_existence_check(c: &QCat, k: &IntervalSet, grid: &[UnitRational]) -> Result<PowerReport> {
    require_subset(grid, k)?;
    if let Some(v) = c.matrix().iter().find(|v| !k.contains(v)) {
        return Err(Error::Precondition(format!("structure value {v} is not in K")));
    }
    let t = c.tnorm();
    let n = c.len();
    let g = descending(grid);
    let mut checked = 0;
    for u in &g {
        for v in &g {
            let uv = t.eval(u, v);
            for x in 0..n {
                for y in 0..n {
                    checked += 1;
                    let lhs = uv.meet(c.r(x, y));
                    let rhs = (0..n)
                        .map(|z| t.eval(&u.meet(c.r(x, z)), &v.meet(c.r(z, y))))
                        .max()
                        .unwrap_or_else(UnitRational::zero);
                    if lhs > rhs {
                        return Ok(PowerReport {
                            cases_checked: checked,
                            failure: Some(PowerFailure {
                                u: u.clone(),
                                v: v.clone(),
                                x,
                                y,
                                lhs,
                                rhs,
                            }),
                        });
                    }
                }
            }
        }
    }
    Ok(PowerReport {
        cases_checked: checked,
        failure: None,
    })
}
