//! File documents for categories, functors, sequences, lifts and witnesses,
//! plus the compact argument forms used on the command line.
//!
//! Rationals are always `"p/q"` strings. A t-norm is either a built-in name
//! or an inline `{"blocks": [...]}` object. Wherever a category is expected
//! a document may give it inline or as a path relative to itself.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::ccc::CCCWitness;
use crate::error::{Error, Result};
use crate::functor::QFunctor;
use crate::interval::{Interval, IntervalSet};
use crate::qcat::QCat;
use crate::rational::UnitRational;
use crate::suitable::{SuitableDoc, SuitableSet, SuitableShape};
use crate::tnorm::TNorm;
use crate::yoneda::FCSequence;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TNormSpec {
    Name(String),
    Inline(TNorm),
}

impl TNormSpec {
    pub fn of(t: &TNorm) -> Self {
        match t.builtin_name() {
            Some(name) => TNormSpec::Name(name.into()),
            None => TNormSpec::Inline(t.clone()),
        }
    }

    pub fn resolve(self) -> Result<TNorm> {
        match self {
            TNormSpec::Name(name) => TNorm::by_name(&name),
            TNormSpec::Inline(t) => Ok(t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QCatDoc {
    pub tnorm: TNormSpec,
    pub points: Vec<String>,
    pub matrix: Vec<Vec<UnitRational>>,
}

impl QCatDoc {
    pub fn of(c: &QCat) -> Self {
        QCatDoc {
            tnorm: TNormSpec::of(c.tnorm()),
            points: c.points().to_vec(),
            matrix: c.rows(),
        }
    }

    pub fn into_qcat(self) -> Result<QCat> {
        QCat::new(Arc::new(self.tnorm.resolve()?), self.points, self.matrix)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CategoryRef {
    Inline(QCatDoc),
    Path(String),
}

impl CategoryRef {
    pub fn load(self, base: &Path) -> Result<QCat> {
        match self {
            CategoryRef::Inline(doc) => doc.into_qcat(),
            CategoryRef::Path(p) => load_qcat(&base.join(p)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub dom: CategoryRef,
    pub cod: CategoryRef,
    pub map: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceDoc {
    pub category: CategoryRef,
    #[serde(default)]
    pub prefix: Vec<String>,
    pub cycle: Vec<String>,
}

/// One leg of a lift. For `initial_lift` the map sends carrier points to
/// category points; for `final_lift`, category points to carrier points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LegDoc {
    pub category: CategoryRef,
    pub map: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LiftDoc {
    pub tnorm: TNormSpec,
    pub carrier: Vec<String>,
    pub legs: Vec<LegDoc>,
}

/// A loaded lift: categories plus index tables.
#[derive(Clone, Debug)]
pub struct LiftSpec {
    pub tnorm: Arc<TNorm>,
    pub carrier: Vec<String>,
    pub legs: Vec<(QCat, Vec<usize>)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftDirection {
    Initial,
    Final,
}

fn index_in(names: &[String], name: &str) -> Result<usize> {
    names
        .iter()
        .position(|p| p == name)
        .ok_or_else(|| Error::UnknownPoint(name.into()))
}

/// A name-keyed map as an index table over `from`.
fn map_table(map: &BTreeMap<String, String>, from: &[String], to: &[String]) -> Result<Vec<usize>> {
    for key in map.keys() {
        index_in(from, key)?;
    }
    from.iter()
        .map(|p| {
            let image = map
                .get(p)
                .ok_or_else(|| Error::Parse(format!("map has no image for point {p:?}")))?;
            index_in(to, image)
        })
        .collect()
}

fn map_doc(table: &[usize], from: &[String], to: &[String]) -> BTreeMap<String, String> {
    from.iter().zip(table).map(|(p, &v)| (p.clone(), to[v].clone())).collect()
}

impl LiftDoc {
    pub fn load(self, base: &Path, direction: LiftDirection) -> Result<LiftSpec> {
        let tnorm = Arc::new(self.tnorm.resolve()?);
        let mut legs = Vec::with_capacity(self.legs.len());
        for leg in self.legs {
            let c = leg.category.load(base)?;
            let table = match direction {
                LiftDirection::Initial => map_table(&leg.map, &self.carrier, c.points())?,
                LiftDirection::Final => map_table(&leg.map, c.points(), &self.carrier)?,
            };
            legs.push((c, table));
        }
        Ok(LiftSpec {
            tnorm,
            carrier: self.carrier,
            legs,
        })
    }
}

impl FunctorDoc {
    pub fn of(f: &QFunctor) -> Self {
        FunctorDoc {
            dom: CategoryRef::Inline(QCatDoc::of(&f.dom)),
            cod: CategoryRef::Inline(QCatDoc::of(&f.cod)),
            map: map_doc(&f.map, f.dom.points(), f.cod.points()),
        }
    }

    pub fn load(self, base: &Path) -> Result<QFunctor> {
        let dom = self.dom.load(base)?;
        let cod = self.cod.load(base)?;
        let table = map_table(&self.map, dom.points(), cod.points())?;
        QFunctor::new(Arc::new(dom), Arc::new(cod), table)
    }
}

impl SequenceDoc {
    pub fn of(s: &FCSequence) -> Self {
        let name = |&p: &usize| s.ambient.points()[p].clone();
        SequenceDoc {
            category: CategoryRef::Inline(QCatDoc::of(&s.ambient)),
            prefix: s.prefix.iter().map(name).collect(),
            cycle: s.cycle.iter().map(name).collect(),
        }
    }

    pub fn load(self, base: &Path) -> Result<FCSequence> {
        let c = self.category.load(base)?;
        let idx = |names: &[String]| -> Result<Vec<usize>> { names.iter().map(|n| c.index_of(n)).collect() };
        let (prefix, cycle) = (idx(&self.prefix)?, idx(&self.cycle)?);
        FCSequence::new(Arc::new(c), prefix, cycle)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub u: UnitRational,
    pub v: UnitRational,
    pub r: UnitRational,
    pub lhs: UnitRational,
    pub rhs: UnitRational,
    pub d_fin: UnitRational,
    pub a: QCatDoc,
    pub b: QCatDoc,
    pub c: QCatDoc,
    pub d: QCatDoc,
    pub lifted: QCatDoc,
}

impl WitnessDoc {
    pub fn of(w: &CCCWitness) -> Self {
        WitnessDoc {
            u: w.u.clone(),
            v: w.v.clone(),
            r: w.r.clone(),
            lhs: w.lhs.clone(),
            rhs: w.rhs.clone(),
            d_fin: w.d_fin.clone(),
            a: QCatDoc::of(&w.a),
            b: QCatDoc::of(&w.b),
            c: QCatDoc::of(&w.c),
            d: QCatDoc::of(&w.d),
            lifted: QCatDoc::of(&w.lifted),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn from_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn load_doc<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    from_json(&read(path)?, &path.display().to_string())
}

/// Directory against which relative references in `path` are resolved.
pub fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

pub fn load_qcat(path: &Path) -> Result<QCat> {
    load_doc::<QCatDoc>(path)?.into_qcat()
}

pub fn load_functor(path: &Path) -> Result<QFunctor> {
    load_doc::<FunctorDoc>(path)?.load(&base_dir(path))
}

pub fn load_sequence(path: &Path) -> Result<FCSequence> {
    load_doc::<SequenceDoc>(path)?.load(&base_dir(path))
}

pub fn load_lift(path: &Path, direction: LiftDirection) -> Result<LiftSpec> {
    load_doc::<LiftDoc>(path)?.load(&base_dir(path), direction)
}

pub fn load_suitable(path: &Path, tnorm: Arc<TNorm>) -> Result<SuitableSet> {
    let doc: SuitableDoc = load_doc(path)?;
    Ok(SuitableSet::new(SuitableShape::from_doc(doc)?, tnorm))
}

pub fn qcat_json(c: &QCat) -> String {
    serde_json::to_string_pretty(&QCatDoc::of(c)).expect("serializable")
}

/// A t-norm argument: a built-in name, inline JSON, or a file holding either.
pub fn parse_tnorm_arg(arg: &str) -> Result<TNorm> {
    if let Ok(t) = TNorm::by_name(arg) {
        return Ok(t);
    }
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        read(Path::new(arg))?
    };
    from_json::<TNormSpec>(&text, "t-norm")?.resolve()
}

/// A `K` argument: `m` (the set M), `idm` (the idempotents), `unit`, a file
/// holding an interval-set document, or compact text such as
/// `0,1/4,1/2..3/4,1`.
pub fn parse_k_arg(arg: &str, t: &TNorm) -> Result<IntervalSet> {
    match arg.trim() {
        "m" | "M" => return Ok(t.m_set()),
        "idm" => return Ok(t.idempotent_set()),
        "unit" => return Ok(IntervalSet::unit()),
        _ => {}
    }
    let path = Path::new(arg);
    if path.is_file() {
        return load_doc(path);
    }
    parse_k_text(arg)
}

pub fn parse_k_text(text: &str) -> Result<IntervalSet> {
    let mut components = Vec::new();
    for item in text.split(',').map(str::trim) {
        if item.is_empty() {
            return Err(Error::Parse(format!("empty item in {text:?}")));
        }
        let component = match item.split_once("..") {
            Some((lo, hi)) => Interval::new(lo.trim().parse()?, hi.trim().parse()?)?,
            None => Interval::point(item.parse()?),
        };
        components.push(component);
    }
    Ok(IntervalSet::new(components))
}
