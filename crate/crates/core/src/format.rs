//! The structure-definition file format.
//!
//! A file is a JSON object `{version, field, objects}`. Objects are keyed by name
//! and refer to each other by name. Spaces are written as lists of names of
//! simple spaces (their tensor product); matrices are row-major arrays of
//! fraction strings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::entwine::{Carrier, EntwiningData, Kind};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::structures::{Algebra, Bialgebra, Coalgebra, ComoduleCoaction, ModuleAction, Side};
use crate::tambara::{CotambaraAction, GeneratorAction};
use crate::tensorlin::{LinearMap, Space};
use crate::yangbaxter::{TypeIISystem, WxzSystem, YbCandidate};

pub const VERSION: u32 = 1;

pub type Matrix = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub version: u32,
    pub field: String,
    pub objects: BTreeMap<String, ObjectDef>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CarrierDef {
    pub space: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coalgebra: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ObjectDef {
    Space {
        labels: Vec<String>,
    },
    Algebra {
        space: Vec<String>,
        mult: Matrix,
        unit: Matrix,
    },
    Coalgebra {
        space: Vec<String>,
        comult: Matrix,
        counit: Matrix,
    },
    Bialgebra {
        algebra: String,
        coalgebra: String,
    },
    Map {
        domain: Vec<String>,
        codomain: Vec<String>,
        matrix: Matrix,
    },
    Module {
        algebra: String,
        space: Vec<String>,
        action: Matrix,
    },
    Comodule {
        coalgebra: String,
        space: Vec<String>,
        side: String,
        coaction: Matrix,
    },
    Entwining {
        declared: String,
        left: CarrierDef,
        right: CarrierDef,
        psi: Matrix,
    },
    Operator {
        space: Vec<String>,
        map: Matrix,
    },
    Type1 {
        v: Vec<String>,
        v1: Vec<String>,
        w: Matrix,
        x: Matrix,
        z: Matrix,
    },
    Type2 {
        space: Vec<String>,
        a: Matrix,
        b: Matrix,
        c: Matrix,
        d: Matrix,
    },
    Tambara {
        base: String,
        carrier: CarrierDef,
        generators: Vec<Matrix>,
    },
    Cotambara {
        base: String,
        carrier: CarrierDef,
        generators: Vec<Matrix>,
    },
}

impl ObjectDef {
    fn refs(&self) -> Vec<&str> {
        fn carrier(c: &CarrierDef) -> Vec<&str> {
            let mut v = names(&c.space);
            v.extend(c.algebra.as_deref());
            v.extend(c.coalgebra.as_deref());
            v
        }
        fn names(v: &[String]) -> Vec<&str> {
            v.iter().map(String::as_str).collect()
        }
        match self {
            ObjectDef::Space { .. } => vec![],
            ObjectDef::Algebra { space, .. } | ObjectDef::Coalgebra { space, .. } => names(space),
            ObjectDef::Bialgebra { algebra, coalgebra } => vec![algebra, coalgebra],
            ObjectDef::Map { domain, codomain, .. } => [names(domain), names(codomain)].concat(),
            ObjectDef::Module { algebra, space, .. } => [vec![algebra.as_str()], names(space)].concat(),
            ObjectDef::Comodule { coalgebra, space, .. } => [vec![coalgebra.as_str()], names(space)].concat(),
            ObjectDef::Entwining { left, right, .. } => [carrier(left), carrier(right)].concat(),
            ObjectDef::Operator { space, .. } | ObjectDef::Type2 { space, .. } => names(space),
            ObjectDef::Type1 { v, v1, .. } => [names(v), names(v1)].concat(),
            ObjectDef::Tambara { base, carrier: c, .. } | ObjectDef::Cotambara { base, carrier: c, .. } => {
                [vec![base.as_str()], carrier(c)].concat()
            }
        }
    }
}

/// A resolved object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Space(Space),
    Algebra(Algebra),
    Coalgebra(Coalgebra),
    Bialgebra(Bialgebra),
    Map(LinearMap),
    Module(ModuleAction),
    Comodule(ComoduleCoaction),
    Entwining(EntwiningData),
    Operator(YbCandidate),
    Type1(WxzSystem),
    Type2(TypeIISystem),
    Tambara(GeneratorAction),
    Cotambara(CotambaraAction),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Space(_) => "space",
            Object::Algebra(_) => "algebra",
            Object::Coalgebra(_) => "coalgebra",
            Object::Bialgebra(_) => "bialgebra",
            Object::Map(_) => "map",
            Object::Module(_) => "module",
            Object::Comodule(_) => "comodule",
            Object::Entwining(_) => "entwining",
            Object::Operator(_) => "operator",
            Object::Type1(_) => "type1",
            Object::Type2(_) => "type2",
            Object::Tambara(_) => "tambara",
            Object::Cotambara(_) => "cotambara",
        }
    }
}

impl StructureFile {
    pub fn new(field: Field) -> StructureFile {
        StructureFile {
            version: VERSION,
            field: field.to_string(),
            objects: BTreeMap::new(),
        }
    }

    pub fn parse(text: &str) -> Result<StructureFile> {
        let file: StructureFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if file.version != VERSION {
            return Err(Error::Parse(format!("unsupported format version {}", file.version)));
        }
        Ok(file)
    }

    /// Canonical text: sorted keys, two-space indent, matrix rows and label lists
    /// on one line, trailing newline.
    pub fn emit(&self) -> String {
        let value = serde_json::to_value(self).expect("structure file serializes");
        let mut out = String::new();
        write_value(&mut out, &value, 0);
        out.push('\n');
        out
    }

    /// Merges the objects of `other`; names must not collide.
    pub fn merge(&mut self, other: StructureFile) -> Result<()> {
        for (name, def) in other.objects {
            if self.objects.contains_key(&name) {
                return Err(Error::InvalidArgument(format!("duplicate object name {name:?}")));
            }
            self.objects.insert(name, def);
        }
        Ok(())
    }

    /// Adds `space` under existing simple-space names where labels match, creating
    /// `hint`, `hint.1`, ... otherwise. Returns the factor names.
    pub fn intern_space(&mut self, hint: &str, space: &Space) -> Vec<String> {
        let mut names = Vec::new();
        for (k, factor) in space.factors().iter().enumerate() {
            let labels = factor.labels();
            let existing = self.objects.iter().find_map(|(n, d)| match d {
                ObjectDef::Space { labels: l } if *l == labels => Some(n.clone()),
                _ => None,
            });
            let name = existing.unwrap_or_else(|| {
                let base = if k == 0 { hint.to_string() } else { format!("{hint}.{k}") };
                let name = self.fresh(&base);
                self.objects.insert(name.clone(), ObjectDef::Space { labels });
                name
            });
            names.push(name);
        }
        names
    }

    fn fresh(&self, base: &str) -> String {
        if !self.objects.contains_key(base) {
            return base.to_string();
        }
        (2..).map(|i| format!("{base}~{i}")).find(|n| !self.objects.contains_key(n)).unwrap()
    }

    fn find(&self, def: &ObjectDef) -> Option<String> {
        self.objects.iter().find(|(_, d)| *d == def).map(|(n, _)| n.clone())
    }

    fn add_def(&mut self, name: &str, def: ObjectDef) -> String {
        if let Some(n) = self.find(&def) {
            return n;
        }
        let name = self.fresh(name);
        self.objects.insert(name.clone(), def);
        name
    }

    pub fn add_algebra(&mut self, name: &str, a: &Algebra) -> String {
        let space = self.intern_space(&format!("{name}.space"), a.space());
        let def = ObjectDef::Algebra {
            space,
            mult: matrix(a.mult()),
            unit: matrix(a.unit()),
        };
        self.add_def(name, def)
    }

    pub fn add_coalgebra(&mut self, name: &str, c: &Coalgebra) -> String {
        let space = self.intern_space(&format!("{name}.space"), c.space());
        let def = ObjectDef::Coalgebra {
            space,
            comult: matrix(c.comult()),
            counit: matrix(c.counit()),
        };
        self.add_def(name, def)
    }

    fn add_carrier(&mut self, name: &str, c: &Carrier) -> CarrierDef {
        CarrierDef {
            space: self.intern_space(&format!("{name}.space"), c.space()),
            algebra: c.algebra_structure().map(|a| self.add_algebra(&format!("{name}.alg"), a)),
            coalgebra: c.coalgebra_structure().map(|k| self.add_coalgebra(&format!("{name}.coalg"), k)),
        }
    }

    /// Adds `object` and everything it refers to. Returns the name used.
    pub fn add(&mut self, name: &str, object: &Object) -> String {
        match object {
            Object::Space(s) => self.intern_space(name, s).join(","),
            Object::Algebra(a) => self.add_algebra(name, a),
            Object::Coalgebra(c) => self.add_coalgebra(name, c),
            Object::Bialgebra(h) => {
                let def = ObjectDef::Bialgebra {
                    algebra: self.add_algebra(&format!("{name}.alg"), h.algebra()),
                    coalgebra: self.add_coalgebra(&format!("{name}.coalg"), h.coalgebra()),
                };
                self.add_def(name, def)
            }
            Object::Map(m) => {
                let def = ObjectDef::Map {
                    domain: self.intern_space(&format!("{name}.domain"), m.domain()),
                    codomain: self.intern_space(&format!("{name}.codomain"), m.codomain()),
                    matrix: matrix(m),
                };
                self.add_def(name, def)
            }
            Object::Module(m) => {
                let def = ObjectDef::Module {
                    algebra: self.add_algebra(&format!("{name}.alg"), m.algebra()),
                    space: self.intern_space(&format!("{name}.space"), m.module()),
                    action: matrix(m.action()),
                };
                self.add_def(name, def)
            }
            Object::Comodule(m) => {
                let def = ObjectDef::Comodule {
                    coalgebra: self.add_coalgebra(&format!("{name}.coalg"), m.coalgebra()),
                    space: self.intern_space(&format!("{name}.space"), m.comodule()),
                    side: side_name(m.side()).into(),
                    coaction: matrix(m.coaction()),
                };
                self.add_def(name, def)
            }
            Object::Entwining(e) => {
                let def = ObjectDef::Entwining {
                    declared: e.kind().to_string(),
                    left: self.add_carrier(&format!("{name}.left"), e.left()),
                    right: self.add_carrier(&format!("{name}.right"), e.right()),
                    psi: matrix(e.psi()),
                };
                self.add_def(name, def)
            }
            Object::Operator(y) => {
                let def = ObjectDef::Operator {
                    space: self.intern_space(&format!("{name}.space"), y.space()),
                    map: matrix(y.map()),
                };
                self.add_def(name, def)
            }
            Object::Type1(s) => {
                let [v, v1] = s.spaces();
                let def = ObjectDef::Type1 {
                    v: self.intern_space(&format!("{name}.v"), v),
                    v1: self.intern_space(&format!("{name}.v1"), v1),
                    w: matrix(s.w()),
                    x: matrix(s.x()),
                    z: matrix(s.z()),
                };
                self.add_def(name, def)
            }
            Object::Type2(s) => {
                let [a, b, c, d] = s.maps();
                let def = ObjectDef::Type2 {
                    space: self.intern_space(&format!("{name}.space"), s.space()),
                    a: matrix(a),
                    b: matrix(b),
                    c: matrix(c),
                    d: matrix(d),
                };
                self.add_def(name, def)
            }
            Object::Tambara(g) => {
                let def = ObjectDef::Tambara {
                    base: self.add_algebra(&format!("{name}.base"), g.base()),
                    carrier: self.add_carrier(&format!("{name}.carrier"), g.carrier()),
                    generators: g.generators().iter().map(matrix).collect(),
                };
                self.add_def(name, def)
            }
            Object::Cotambara(g) => {
                let def = ObjectDef::Cotambara {
                    base: self.add_coalgebra(&format!("{name}.base"), g.base()),
                    carrier: self.add_carrier(&format!("{name}.carrier"), g.carrier()),
                    generators: g.generators().iter().map(matrix).collect(),
                };
                self.add_def(name, def)
            }
        }
    }
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Right => "right",
        Side::Left => "left",
    }
}

pub fn matrix(m: &LinearMap) -> Matrix {
    m.to_rows()
        .into_iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            out.push('[');
            for (k, i) in items.iter().enumerate() {
                if k > 0 {
                    out.push_str(", ");
                }
                out.push_str(&i.to_string());
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, i) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, i, indent + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, val)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(indent + 1), Value::String(key.clone()));
                write_value(out, val, indent + 1);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}

/// A structure file with every object resolved over a fixed field.
#[derive(Clone, Debug)]
pub struct Document {
    field: Field,
    file: StructureFile,
    objects: BTreeMap<String, Object>,
}

impl Document {
    /// Resolves all objects. `field` overrides the file's own field.
    pub fn resolve(file: StructureFile, field: Option<Field>) -> Result<Document> {
        let field = match field {
            Some(f) => f,
            None => file.field.parse()?,
        };
        let mut r = Resolver {
            field,
            file: &file,
            done: BTreeMap::new(),
            active: Vec::new(),
        };
        for name in file.objects.keys() {
            r.get(name)?;
        }
        let objects = r.done;
        Ok(Document { field, file, objects })
    }

    pub fn parse(text: &str, field: Option<Field>) -> Result<Document> {
        Document::resolve(StructureFile::parse(text)?, field)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn file(&self) -> &StructureFile {
        &self.file
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.objects.keys().map(String::as_str)
    }

    pub fn objects(&self) -> impl Iterator<Item = (&str, &Object)> {
        self.objects.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn get(&self, name: &str) -> Result<&Object> {
        self.objects.get(name).ok_or_else(|| Error::Unknown {
            kind: "object",
            name: name.to_string(),
        })
    }

    pub fn algebra(&self, name: &str) -> Result<Algebra> {
        match self.get(name)? {
            Object::Algebra(a) => Ok(a.clone()),
            Object::Bialgebra(h) => Ok(h.algebra().clone()),
            other => Err(wrong_kind(name, "algebra", other)),
        }
    }

    pub fn coalgebra(&self, name: &str) -> Result<Coalgebra> {
        match self.get(name)? {
            Object::Coalgebra(c) => Ok(c.clone()),
            Object::Bialgebra(h) => Ok(h.coalgebra().clone()),
            other => Err(wrong_kind(name, "coalgebra", other)),
        }
    }

    pub fn bialgebra(&self, name: &str) -> Result<Bialgebra> {
        match self.get(name)? {
            Object::Bialgebra(h) => Ok(h.clone()),
            other => Err(wrong_kind(name, "bialgebra", other)),
        }
    }

    pub fn module(&self, name: &str) -> Result<ModuleAction> {
        match self.get(name)? {
            Object::Module(m) => Ok(m.clone()),
            other => Err(wrong_kind(name, "module", other)),
        }
    }

    pub fn comodule(&self, name: &str) -> Result<ComoduleCoaction> {
        match self.get(name)? {
            Object::Comodule(m) => Ok(m.clone()),
            other => Err(wrong_kind(name, "comodule", other)),
        }
    }

    pub fn entwining(&self, name: &str) -> Result<EntwiningData> {
        match self.get(name)? {
            Object::Entwining(e) => Ok(e.clone()),
            other => Err(wrong_kind(name, "entwining", other)),
        }
    }

    /// Algebra objects in name order (bialgebra components are listed under their own names).
    pub fn algebras(&self) -> Vec<(String, Algebra)> {
        self.objects
            .iter()
            .filter_map(|(n, o)| match o {
                Object::Algebra(a) => Some((n.clone(), a.clone())),
                _ => None,
            })
            .collect()
    }

    pub fn coalgebras(&self) -> Vec<(String, Coalgebra)> {
        self.objects
            .iter()
            .filter_map(|(n, o)| match o {
                Object::Coalgebra(c) => Some((n.clone(), c.clone())),
                _ => None,
            })
            .collect()
    }
}

pub(crate) fn wrong_kind(name: &str, want: &str, got: &Object) -> Error {
    Error::InvalidArgument(format!("{name:?} is a {}, expected a {want}", got.kind()))
}

struct Resolver<'a> {
    field: Field,
    file: &'a StructureFile,
    done: BTreeMap<String, Object>,
    active: Vec<String>,
}

impl Resolver<'_> {
    fn get(&mut self, name: &str) -> Result<Object> {
        if let Some(o) = self.done.get(name) {
            return Ok(o.clone());
        }
        let def = self.file.objects.get(name).ok_or_else(|| Error::Unknown {
            kind: "object",
            name: name.to_string(),
        })?;
        if self.active.iter().any(|n| n == name) {
            return Err(Error::InvalidArgument(format!("circular reference through {name:?}")));
        }
        self.active.push(name.to_string());
        for r in def.refs() {
            self.get(r)?;
        }
        let obj = self.build(def).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{name}: {m}")),
            Error::ShapeMismatch { context, expected, found } => Error::ShapeMismatch {
                context: format!("{name}: {context}"),
                expected,
                found,
            },
            Error::InvalidArgument(m) => Error::InvalidArgument(format!("{name}: {m}")),
            other => other,
        })?;
        self.active.pop();
        self.done.insert(name.to_string(), obj.clone());
        Ok(obj)
    }

    fn space(&self, names: &[String]) -> Result<Space> {
        if names.is_empty() {
            return Ok(Space::ground());
        }
        let mut factors = Vec::new();
        for n in names {
            match &self.done[n] {
                Object::Space(s) => factors.push(s.clone()),
                other => return Err(wrong_kind(n, "space", other)),
            }
        }
        Ok(Space::tensor_all(&factors))
    }

    fn algebra(&self, name: &str) -> Result<Algebra> {
        match &self.done[name] {
            Object::Algebra(a) => Ok(a.clone()),
            Object::Bialgebra(h) => Ok(h.algebra().clone()),
            other => Err(wrong_kind(name, "algebra", other)),
        }
    }

    fn coalgebra(&self, name: &str) -> Result<Coalgebra> {
        match &self.done[name] {
            Object::Coalgebra(c) => Ok(c.clone()),
            Object::Bialgebra(h) => Ok(h.coalgebra().clone()),
            other => Err(wrong_kind(name, "coalgebra", other)),
        }
    }

    fn map(&self, domain: &Space, codomain: &Space, m: &Matrix) -> Result<LinearMap> {
        let rows = m
            .iter()
            .map(|r| r.iter().map(|s| self.field.parse(s)).collect::<Result<Vec<Scalar>>>())
            .collect::<Result<Vec<_>>>()?;
        LinearMap::from_rows(self.field, domain.clone(), codomain.clone(), rows)
    }

    fn carrier(&self, c: &CarrierDef) -> Result<Carrier> {
        let mut carrier = Carrier::plain(&self.space(&c.space)?);
        if let Some(a) = &c.algebra {
            carrier = carrier.with_algebra(&self.algebra(a)?)?;
        }
        if let Some(k) = &c.coalgebra {
            carrier = carrier.with_coalgebra(&self.coalgebra(k)?)?;
        }
        Ok(carrier)
    }

    fn build(&self, def: &ObjectDef) -> Result<Object> {
        let ground = Space::ground();
        Ok(match def {
            ObjectDef::Space { labels } => Object::Space(Space::new(labels.iter().cloned())?),
            ObjectDef::Algebra { space, mult, unit } => {
                let s = self.space(space)?;
                Object::Algebra(Algebra::new(
                    self.map(&s.tensor(&s), &s, mult)?,
                    self.map(&ground, &s, unit)?,
                )?)
            }
            ObjectDef::Coalgebra { space, comult, counit } => {
                let s = self.space(space)?;
                Object::Coalgebra(Coalgebra::new(
                    self.map(&s, &s.tensor(&s), comult)?,
                    self.map(&s, &ground, counit)?,
                )?)
            }
            ObjectDef::Bialgebra { algebra, coalgebra } => {
                Object::Bialgebra(Bialgebra::new(self.algebra(algebra)?, self.coalgebra(coalgebra)?)?)
            }
            ObjectDef::Map { domain, codomain, matrix } => {
                Object::Map(self.map(&self.space(domain)?, &self.space(codomain)?, matrix)?)
            }
            ObjectDef::Module { algebra, space, action } => {
                let a = self.algebra(algebra)?;
                let m = self.space(space)?;
                let act = self.map(&a.space().tensor(&m), &m, action)?;
                Object::Module(ModuleAction::new(a, act)?)
            }
            ObjectDef::Comodule { coalgebra, space, side, coaction } => {
                let c = self.coalgebra(coalgebra)?;
                let m = self.space(space)?;
                let (side, target) = match side.as_str() {
                    "right" => (Side::Right, m.tensor(c.space())),
                    "left" => (Side::Left, c.space().tensor(&m)),
                    other => {
                        return Err(Error::Unknown {
                            kind: "comodule side",
                            name: other.to_string(),
                        })
                    }
                };
                let co = self.map(&m, &target, coaction)?;
                Object::Comodule(ComoduleCoaction::new(c, co, side)?)
            }
            ObjectDef::Entwining { declared, left, right, psi } => {
                let kind: Kind = declared.parse()?;
                let (l, r) = (self.carrier(left)?, self.carrier(right)?);
                let psi = self.map(&l.space().tensor(r.space()), &r.space().tensor(l.space()), psi)?;
                Object::Entwining(EntwiningData::new(l, r, psi, kind)?)
            }
            ObjectDef::Operator { space, map } => {
                let s = self.space(space)?;
                let ss = s.tensor(&s);
                Object::Operator(YbCandidate::new(&s, &self.map(&ss, &ss, map)?)?)
            }
            ObjectDef::Type1 { v, v1, w, x, z } => {
                let (v, v1) = (self.space(v)?, self.space(v1)?);
                let vv = v.tensor(&v);
                let vv1 = v1.tensor(&v1);
                let vx = v.tensor(&v1);
                Object::Type1(WxzSystem::new(
                    &v,
                    &v1,
                    &self.map(&vv, &vv, w)?,
                    &self.map(&vx, &vx, x)?,
                    &self.map(&vv1, &vv1, z)?,
                )?)
            }
            ObjectDef::Type2 { space, a, b, c, d } => {
                let s = self.space(space)?;
                let ss = s.tensor(&s);
                Object::Type2(TypeIISystem::new(
                    &s,
                    &self.map(&ss, &ss, a)?,
                    &self.map(&ss, &ss, b)?,
                    &self.map(&ss, &ss, c)?,
                    &self.map(&ss, &ss, d)?,
                )?)
            }
            ObjectDef::Tambara { base, carrier, generators } => {
                let a = self.algebra(base)?;
                let c = self.carrier(carrier)?;
                let s = c.space().clone();
                let rho = generators.iter().map(|g| self.map(&s, &s, g)).collect::<Result<Vec<_>>>()?;
                Object::Tambara(GeneratorAction::new(&a, c, rho)?)
            }
            ObjectDef::Cotambara { base, carrier, generators } => {
                let k = self.coalgebra(base)?;
                let c = self.carrier(carrier)?;
                let s = c.space().clone();
                let rho = generators.iter().map(|g| self.map(&s, &s, g)).collect::<Result<Vec<_>>>()?;
                Object::Cotambara(CotambaraAction::new(&k, c, rho)?)
            }
        })
    }
}

#[cfg(test)]
mod tests;
