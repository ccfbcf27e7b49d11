//! Initial and final lifts of structured sources and sinks.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::qcat::QCat;
use crate::rational::UnitRational;
use crate::tnorm::TNorm;

/// One leg of a source or sink: a category and a map table.
///
/// For a source the map goes carrier → category; for a sink it goes
/// category → carrier.
#[derive(Clone, Copy, Debug)]
pub struct Leg<'a> {
    pub category: &'a QCat,
    pub map: &'a [usize],
}

impl<'a> Leg<'a> {
    pub fn new(category: &'a QCat, map: &'a [usize]) -> Self {
        Leg { category, map }
    }
}

fn check_tnorm(tnorm: &TNorm, legs: &[Leg<'_>]) -> Result<()> {
    if legs.iter().any(|leg| leg.category.tnorm() != tnorm) {
        return Err(Error::TNormMismatch);
    }
    Ok(())
}

/// `d_in(x,y) = ⋀_i r_i(f_i x, f_i y)`; the empty source gives the
/// indiscrete structure.
pub fn initial_lift(tnorm: Arc<TNorm>, carrier: Vec<String>, sources: &[Leg<'_>]) -> Result<QCat> {
    check_tnorm(&tnorm, sources)?;
    let n = carrier.len();
    for leg in sources {
        if leg.map.len() != n || leg.map.iter().any(|&v| v >= leg.category.len()) {
            return Err(Error::Shape("source map does not fit carrier and codomain".into()));
        }
    }
    let mut matrix = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let v = sources
                .iter()
                .map(|leg| leg.category.r(leg.map[x], leg.map[y]))
                .min()
                .cloned()
                .unwrap_or_else(UnitRational::one);
            matrix.push(v);
        }
    }
    QCat::from_flat(tnorm, carrier, matrix)
}

/// The least transitive, reflexive structure on `carrier` making every sink
/// map a functor.
///
/// Seeds `m(x,y)` with the join of the pushed-forward values (and `1` on the
/// diagonal), then closes under `m(x,z) ∨= m(y,z) & m(x,y)`.
pub fn final_lift(tnorm: Arc<TNorm>, carrier: Vec<String>, sinks: &[Leg<'_>]) -> Result<QCat> {
    check_tnorm(&tnorm, sinks)?;
    let n = carrier.len();
    let mut matrix = vec![UnitRational::zero(); n * n];
    for x in 0..n {
        matrix[x * n + x] = UnitRational::one();
    }
    for leg in sinks {
        let c = leg.category;
        if leg.map.len() != c.len() || leg.map.iter().any(|&v| v >= n) {
            return Err(Error::Shape("sink map does not fit domain and carrier".into()));
        }
        for i in 0..c.len() {
            for j in 0..c.len() {
                let slot = &mut matrix[leg.map[i] * n + leg.map[j]];
                if c.r(i, j) > slot {
                    *slot = c.r(i, j).clone();
                }
            }
        }
    }
    close_transitively(&tnorm, n, &mut matrix);
    QCat::from_flat(tnorm, carrier, matrix)
}

/// Path closure over the quantale semiring `(∨, &)`, in place.
///
/// One Floyd–Warshall sweep is exact: `&` never exceeds either argument, so
/// a path that repeats a point is dominated by the path without the cycle
/// and simple paths suffice. Diagonal entries must already be `1`.
pub fn close_transitively(tnorm: &TNorm, n: usize, matrix: &mut [UnitRational]) {
    for k in 0..n {
        for i in 0..n {
            if i == k || matrix[i * n + k].is_zero() {
                continue;
            }
            for j in 0..n {
                if j == k {
                    continue;
                }
                let via = tnorm.eval(&matrix[k * n + j], &matrix[i * n + k]);
                if via > matrix[i * n + j] {
                    matrix[i * n + j] = via;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn luk() -> Arc<TNorm> {
        Arc::new(TNorm::lukasiewicz())
    }

    fn names(n: usize) -> Vec<String> {
        ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn final_lift_composes_two_arrows() {
        let t = luk();
        let (a1, b1, a2, b2) = (q(4, 5), q(3, 5), q(7, 10), q(9, 10));
        let c1 = QCat::two_point(t.clone(), a1.clone(), b1.clone());
        let c2 = QCat::two_point(t.clone(), a2.clone(), b2.clone());
        let fin = final_lift(
            t.clone(),
            names(3),
            &[Leg::new(&c1, &[0, 1]), Leg::new(&c2, &[1, 2])],
        )
        .unwrap();
        assert_eq!(fin.r(0, 2), &t.eval(&a1, &a2));
        assert_eq!(fin.r(2, 0), &t.eval(&b1, &b2));
        assert!(fin.is_valid());
    }

    #[test]
    fn identity_sink_is_identity() {
        let t = luk();
        let c = QCat::two_point(t.clone(), q(1, 2), q(1, 3));
        let fin = final_lift(t.clone(), names(2), &[Leg::new(&c, &[0, 1])]).unwrap();
        assert_eq!(fin.matrix(), c.matrix());
        let init = initial_lift(t, names(2), &[Leg::new(&c, &[0, 1])]).unwrap();
        assert_eq!(init.matrix(), c.matrix());
    }

    #[test]
    fn initial_lift_takes_meets() {
        let t = luk();
        let c1 = QCat::two_point(t.clone(), q(1, 2), q(1, 1));
        let c2 = QCat::two_point(t.clone(), q(3, 4), q(1, 4));
        let d = initial_lift(t.clone(), names(2), &[Leg::new(&c1, &[0, 1]), Leg::new(&c2, &[0, 1])]).unwrap();
        assert_eq!(d.r(0, 1), &q(1, 2));
        assert_eq!(d.r(1, 0), &q(1, 4));
        let indiscrete = initial_lift(t, names(2), &[]).unwrap();
        assert!(indiscrete.matrix().iter().all(UnitRational::is_one));
    }

    #[test]
    fn rejects_bad_maps() {
        let t = luk();
        let c = QCat::two_point(t.clone(), q(1, 2), q(1, 3));
        assert!(final_lift(t.clone(), names(2), &[Leg::new(&c, &[0, 5])]).is_err());
        assert!(initial_lift(t.clone(), names(2), &[Leg::new(&c, &[0])]).is_err());
        let g = QCat::two_point(Arc::new(TNorm::godel()), q(1, 2), q(1, 3));
        assert_eq!(
            final_lift(t, names(2), &[Leg::new(&g, &[0, 1])]).unwrap_err(),
            Error::TNormMismatch
        );
    }
}
