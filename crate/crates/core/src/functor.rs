//! Functors between finite categories and the two function-space structures.

use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::qcat::QCat;
use crate::rational::UnitRational;
use crate::tnorm::meet_residual;

/// Default cap on `|cod|^|dom|` candidate maps.
pub const DEFAULT_MAX_MAPS: u64 = 1_000_000;

/// A map between carriers, as a table of codomain indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFunctor {
    pub dom: Arc<QCat>,
    pub cod: Arc<QCat>,
    pub map: Vec<usize>,
}

impl QFunctor {
    pub fn new(dom: Arc<QCat>, cod: Arc<QCat>, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.len() || map.iter().any(|&v| v >= cod.len()) {
            return Err(Error::Shape("map table does not fit domain and codomain".into()));
        }
        Ok(QFunctor { dom, cod, map })
    }

    pub fn is_functor(&self) -> bool {
        is_functor(&self.dom, &self.cod, &self.map)
    }
}

/// `r(x1,x2) <= s(f x1, f x2)` for all `x1, x2`.
pub fn is_functor(dom: &QCat, cod: &QCat, map: &[usize]) -> bool {
    let n = dom.len();
    (0..n).all(|x| (0..n).all(|y| dom.r(x, y) <= cod.r(map[x], map[y])))
}

fn check_size(dom: &QCat, cod: &QCat, max_maps: u64) -> Result<()> {
    let candidates = BigUint::from(cod.len()).pow(dom.len() as u32);
    if candidates > BigUint::from(max_maps) {
        return Err(Error::SizeLimit {
            candidates: candidates.to_string(),
            cap: max_maps,
        });
    }
    Ok(())
}

/// Every functor `dom → cod`, in lexicographic order of the map table.
pub fn enumerate_functors(dom: &QCat, cod: &QCat, max_maps: u64) -> Result<Vec<Vec<usize>>> {
    if !dom.same_tnorm(cod) {
        return Err(Error::TNormMismatch);
    }
    check_size(dom, cod, max_maps)?;
    let mut out = Vec::new();
    let mut table = Vec::with_capacity(dom.len());
    extend(dom, cod, &mut table, &mut out);
    Ok(out)
}

fn extend(dom: &QCat, cod: &QCat, table: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let i = table.len();
    if i == dom.len() {
        out.push(table.clone());
        return;
    }
    for v in 0..cod.len() {
        let fits = dom.r(i, i) <= cod.r(v, v)
            && table
                .iter()
                .enumerate()
                .all(|(j, &w)| dom.r(i, j) <= cod.r(v, w) && dom.r(j, i) <= cod.r(w, v));
        if fits {
            table.push(v);
            extend(dom, cod, table, out);
            table.pop();
        }
    }
}

/// A function space: the category on the functor set together with the map
/// tables, so point `i` of `category` is the functor `functors[i]`.
#[derive(Clone, Debug)]
pub struct HomObject {
    pub category: QCat,
    pub functors: Vec<Vec<usize>>,
}

impl HomObject {
    /// Point index of a functor; tables are sorted, so this is a binary search.
    pub fn index_of(&self, map: &[usize]) -> Option<usize> {
        self.functors.binary_search_by(|f| f.as_slice().cmp(map)).ok()
    }

    pub fn len(&self) -> usize {
        self.functors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functors.is_empty()
    }
}

fn function_space(
    dom: &QCat,
    cod: &QCat,
    max_maps: u64,
    distance: impl Fn(&[usize], &[usize]) -> UnitRational,
) -> Result<HomObject> {
    let functors = enumerate_functors(dom, cod, max_maps)?;
    let names = functors
        .iter()
        .map(|f| {
            let images: Vec<&str> = f.iter().map(|&v| cod.points()[v].as_str()).collect();
            format!("[{}]", images.join(","))
        })
        .collect();
    let mut matrix = Vec::with_capacity(functors.len() * functors.len());
    for f in &functors {
        for g in &functors {
            matrix.push(distance(f, g));
        }
    }
    let category = QCat::from_flat(dom.tnorm_arc().clone(), names, matrix)?;
    Ok(HomObject { category, functors })
}

/// `d_⊗(f,g) = ⋀_x s(f x, g x)`.
pub fn d_tensor(cod: &QCat, f: &[usize], g: &[usize]) -> UnitRational {
    f.iter()
        .zip(g)
        .map(|(&fx, &gx)| cod.r(fx, gx))
        .min()
        .cloned()
        .unwrap_or_else(UnitRational::one)
}

/// `d_Π(f,g) = ⋀_{x,y} r(x,y) → s(f x, g y)`.
pub fn d_power(dom: &QCat, cod: &QCat, f: &[usize], g: &[usize]) -> UnitRational {
    let n = dom.len();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| meet_residual(dom.r(x, y), cod.r(f[x], g[y]))))
        .min()
        .unwrap_or_else(UnitRational::one)
}

/// The monoidal function space `([A,B], d_⊗)`.
pub fn hom_tensor(dom: &QCat, cod: &QCat, max_maps: u64) -> Result<HomObject> {
    function_space(dom, cod, max_maps, |f, g| d_tensor(cod, f, g))
}

/// The cartesian power object `([A,B], d_Π)`.
pub fn hom_power(dom: &QCat, cod: &QCat, max_maps: u64) -> Result<HomObject> {
    function_space(dom, cod, max_maps, |f, g| d_power(dom, cod, f, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::tnorm::TNorm;

    fn luk() -> Arc<TNorm> {
        Arc::new(TNorm::lukasiewicz())
    }

    /// All `m^n` maps, filtered; independent of the pruning search.
    fn brute_force(dom: &QCat, cod: &QCat) -> Vec<Vec<usize>> {
        let (n, m) = (dom.len(), cod.len());
        let total = m.pow(n as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut map = vec![0; n];
            let mut c = code;
            for slot in map.iter_mut().rev() {
                *slot = c % m;
                c /= m;
            }
            if is_functor(dom, cod, &map) {
                out.push(map);
            }
        }
        out
    }

    #[test]
    fn enumeration_examples() {
        let c = QCat::two_point(luk(), q(1, 2), q(1, 2));
        let fs = enumerate_functors(&c, &c, DEFAULT_MAX_MAPS).unwrap();
        assert_eq!(fs, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let term = QCat::terminal(luk());
        assert_eq!(enumerate_functors(&c, &term, DEFAULT_MAX_MAPS).unwrap().len(), 1);
        let crisp = QCat::two_point(luk(), q(1, 1), q(0, 1));
        let discrete = QCat::two_point(luk(), q(0, 1), q(0, 1));
        assert_eq!(
            enumerate_functors(&crisp, &discrete, DEFAULT_MAX_MAPS).unwrap(),
            vec![vec![0, 0], vec![1, 1]]
        );
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let one = UnitRational::one();
        let a = QCat::indexed(
            luk(),
            vec![one.clone(), q(1, 2), q(1, 2), q(0, 1), one.clone(), q(1, 2), q(0, 1), q(1, 4), one.clone()],
        )
        .unwrap();
        assert!(a.is_valid());
        let b = QCat::two_point(luk(), q(3, 4), q(1, 4));
        for (x, y) in [(&a, &b), (&b, &a), (&a, &a)] {
            assert_eq!(enumerate_functors(x, y, DEFAULT_MAX_MAPS).unwrap(), brute_force(x, y));
        }
    }

    #[test]
    fn size_limit() {
        let c = QCat::two_point(luk(), q(1, 2), q(1, 2));
        let err = enumerate_functors(&c, &c, 3).unwrap_err();
        assert_eq!(
            err,
            Error::SizeLimit {
                candidates: "4".into(),
                cap: 3
            }
        );
    }

    #[test]
    fn hom_examples() {
        let c = QCat::two_point(luk(), q(1, 2), q(1, 2));
        let power = hom_power(&c, &c, DEFAULT_MAX_MAPS).unwrap();
        let tensor = hom_tensor(&c, &c, DEFAULT_MAX_MAPS).unwrap();
        let id = power.index_of(&[0, 1]).unwrap();
        let swap = power.index_of(&[1, 0]).unwrap();
        assert_eq!(power.category.r(id, swap), &q(1, 2));
        assert_eq!(tensor.category.r(id, swap), &q(1, 2));
        for i in 0..power.len() {
            assert!(power.category.r(i, i).is_one());
        }
        assert!(power.category.is_valid() && tensor.category.is_valid());
        assert!(power.category.le(&tensor.category));
        assert_eq!(power.category.points()[id], "[0,1]");
    }

    #[test]
    fn empty_domain_has_one_functor() {
        let empty = QCat::from_flat(luk(), vec![], vec![]).unwrap();
        let c = QCat::two_point(luk(), q(1, 2), q(1, 2));
        let h = hom_power(&empty, &c, DEFAULT_MAX_MAPS).unwrap();
        assert_eq!(h.functors, vec![Vec::<usize>::new()]);
        assert!(h.category.r(0, 0).is_one());
    }
}
