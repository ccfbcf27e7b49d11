//! Finite real-enriched categories.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::UnitRational;
use crate::tnorm::TNorm;

/// A finite `[0,1]`-category: points plus a structure matrix `r` with
/// `r(x,x) = 1` and `r(y,z) & r(x,y) <= r(x,z)`.
///
/// Construction only checks shape; [`QCat::validate`] checks the axioms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QCat {
    tnorm: Arc<TNorm>,
    points: Vec<String>,
    matrix: Vec<UnitRational>,
}

/// First violated axiom found by [`QCat::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum Violation {
    Reflexivity { x: usize, value: UnitRational },
    Transitivity {
        x: usize,
        y: usize,
        z: usize,
        /// `r(y,z) & r(x,y)`
        composite: UnitRational,
        /// `r(x,z)`
        direct: UnitRational,
    },
}

impl QCat {
    pub fn new(tnorm: Arc<TNorm>, points: Vec<String>, rows: Vec<Vec<UnitRational>>) -> Result<Self> {
        let n = points.len();
        if rows.len() != n || rows.iter().any(|row| row.len() != n) {
            return Err(Error::Shape(format!("structure matrix must be {n}×{n}")));
        }
        QCat::from_flat(tnorm, points, rows.into_iter().flatten().collect())
    }

    /// `matrix` is row-major: `matrix[x * n + y] = r(x, y)`.
    pub fn from_flat(tnorm: Arc<TNorm>, points: Vec<String>, matrix: Vec<UnitRational>) -> Result<Self> {
        let n = points.len();
        if matrix.len() != n * n {
            return Err(Error::Shape(format!(
                "{} matrix entries for {n} points",
                matrix.len()
            )));
        }
        let mut seen = HashSet::with_capacity(n);
        for p in &points {
            if !seen.insert(p.as_str()) {
                return Err(Error::Shape(format!("duplicate point {p:?}")));
            }
        }
        Ok(QCat { tnorm, points, matrix })
    }

    /// Points named `"0"`, `"1"`, … .
    pub fn indexed(tnorm: Arc<TNorm>, matrix: Vec<UnitRational>) -> Result<Self> {
        let n = (matrix.len() as f64).sqrt().round() as usize;
        QCat::from_flat(tnorm, (0..n).map(|i| i.to_string()).collect(), matrix)
    }

    /// `(𝟚, a, b)`: `r(0,1) = a`, `r(1,0) = b`.
    pub fn two_point(tnorm: Arc<TNorm>, a: UnitRational, b: UnitRational) -> Self {
        let one = UnitRational::one();
        QCat::indexed(tnorm, vec![one.clone(), a, b, one]).expect("2×2")
    }

    /// The terminal category `({⋆}, 1)`.
    pub fn terminal(tnorm: Arc<TNorm>) -> Self {
        QCat::from_flat(tnorm, vec!["*".into()], vec![UnitRational::one()]).expect("1×1")
    }

    pub fn tnorm(&self) -> &TNorm {
        &self.tnorm
    }

    pub fn tnorm_arc(&self) -> &Arc<TNorm> {
        &self.tnorm
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn matrix(&self) -> &[UnitRational] {
        &self.matrix
    }

    pub fn rows(&self) -> Vec<Vec<UnitRational>> {
        let n = self.len().max(1);
        self.matrix.chunks(n).map(<[_]>::to_vec).collect()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::UnknownPoint(name.to_string()))
    }

    #[inline]
    pub fn r(&self, x: usize, y: usize) -> &UnitRational {
        &self.matrix[x * self.points.len() + y]
    }

    /// Same carrier and t-norm, new structure.
    pub fn with_matrix(&self, matrix: Vec<UnitRational>) -> Result<Self> {
        QCat::from_flat(self.tnorm.clone(), self.points.clone(), matrix)
    }

    pub fn same_tnorm(&self, other: &QCat) -> bool {
        Arc::ptr_eq(&self.tnorm, &other.tnorm) || self.tnorm == other.tnorm
    }

    pub fn validate(&self) -> Option<Violation> {
        let n = self.len();
        for x in 0..n {
            if !self.r(x, x).is_one() {
                return Some(Violation::Reflexivity {
                    x,
                    value: self.r(x, x).clone(),
                });
            }
        }
        for x in 0..n {
            for y in 0..n {
                let rxy = self.r(x, y);
                for z in 0..n {
                    let composite = self.tnorm.eval(self.r(y, z), rxy);
                    if &composite > self.r(x, z) {
                        return Some(Violation::Transitivity {
                            x,
                            y,
                            z,
                            composite,
                            direct: self.r(x, z).clone(),
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_none()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (0..x).all(|y| self.r(x, y) == self.r(y, x)))
    }

    /// Entrywise `self <= other` on the same carrier.
    pub fn le(&self, other: &QCat) -> bool {
        self.matrix.len() == other.matrix.len()
            && self.matrix.iter().zip(&other.matrix).all(|(a, b)| a <= b)
    }

    fn pair_structure(
        a: &QCat,
        b: &QCat,
        combine: impl Fn(&UnitRational, &UnitRational) -> UnitRational,
    ) -> Result<QCat> {
        if !a.same_tnorm(b) {
            return Err(Error::TNormMismatch);
        }
        let (n, m) = (a.len(), b.len());
        let points = a
            .points
            .iter()
            .flat_map(|x| b.points.iter().map(move |y| format!("({x},{y})")))
            .collect();
        let mut matrix = Vec::with_capacity(n * m * n * m);
        for x in 0..n {
            for y in 0..m {
                for x2 in 0..n {
                    for y2 in 0..m {
                        matrix.push(combine(a.r(x, x2), b.r(y, y2)));
                    }
                }
            }
        }
        QCat::from_flat(a.tnorm.clone(), points, matrix)
    }

    /// Cartesian product: `r(x,x') ∧ s(y,y')`, pairs in row-major order.
    pub fn product(a: &QCat, b: &QCat) -> Result<QCat> {
        QCat::pair_structure(a, b, UnitRational::meet)
    }

    /// Tensor product: `r(x,x') & s(y,y')`.
    pub fn tensor(a: &QCat, b: &QCat) -> Result<QCat> {
        let t = a.tnorm.clone();
        QCat::pair_structure(a, b, |u, v| t.eval(u, v))
    }

    /// ρ: `x <= y` iff `r(x,y) = 1`.
    pub fn por_coreflection(&self) -> Preord {
        Preord {
            points: self.points.clone(),
            leq: self.matrix.iter().map(UnitRational::is_one).collect(),
        }
    }

    /// σ: reflexive-transitive closure of `r(x,y) ≠ 0`.
    pub fn por_reflection(&self) -> Preord {
        let n = self.len();
        let mut leq: Vec<bool> = self.matrix.iter().map(|v| !v.is_zero()).collect();
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Preord {
            points: self.points.clone(),
            leq,
        }
    }

    /// All distinct structure values, sorted.
    pub fn values(&self) -> Vec<UnitRational> {
        let mut v = self.matrix.clone();
        v.sort();
        v.dedup();
        v
    }
}

impl fmt::Debug for QCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QCat[{}]{{", self.tnorm)?;
        for (x, name) in self.points.iter().enumerate() {
            write!(f, "{name}: [")?;
            for y in 0..self.len() {
                if y > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.r(x, y))?;
            }
            write!(f, "]; ")?;
        }
        write!(f, "}}")
    }
}

/// A preordered set as a boolean relation matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preord {
    pub points: Vec<String>,
    pub leq: Vec<bool>,
}

impl Preord {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len() + y]
    }

    pub fn is_preorder(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| self.leq(x, x))
            && (0..n).all(|x| {
                (0..n).all(|y| !self.leq(x, y) || (0..n).all(|z| !self.leq(y, z) || self.leq(x, z)))
            })
    }

    /// Relation containment.
    pub fn is_subrelation(&self, other: &Preord) -> bool {
        self.leq.len() == other.leq.len() && self.leq.iter().zip(&other.leq).all(|(a, b)| !a || *b)
    }

    /// The embedding into `[0,1]`-categories: values in `{0, 1}`.
    pub fn to_qcat(&self, tnorm: Arc<TNorm>) -> QCat {
        let matrix = self
            .leq
            .iter()
            .map(|&b| if b { UnitRational::one() } else { UnitRational::zero() })
            .collect();
        QCat::from_flat(tnorm, self.points.clone(), matrix).expect("square relation")
    }
}

/// A two-point category `(𝟚, a, b)`; every pair is valid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoPoint {
    pub a: UnitRational,
    pub b: UnitRational,
}

impl TwoPoint {
    pub fn to_qcat(&self, tnorm: Arc<TNorm>) -> QCat {
        QCat::two_point(tnorm, self.a.clone(), self.b.clone())
    }
}
