//! Parameterized object names such as `gamma_q@Kx2-1,q=1`.
//!
//! An invocation is `name@arg,arg,key=value,...`. Positional arguments are object
//! names or nested invocations in brackets: `dualize_semi@[gamma_q@Kx2-1,q=2]`.

use std::collections::BTreeMap;

use crate::entwine::{
    alt_doi_koppinen, biproduct, cofactorization_coproduct, doi_koppinen, dualize_both, dualize_cosemi, dualize_semi,
    eta_q, factorization_product, gamma_q, induced_module, module_semi, require, Carrier, EntwiningData, Kind,
};
use crate::error::{Error, Result};
use crate::format::{wrong_kind, Document, Object};
use crate::scalar::Scalar;
use crate::structures::{convolution_algebra, dualize_algebra, Algebra, Coalgebra, ModuleAction};
use crate::tambara::{action_from_semi, cosemi_from_action, cotambara_action, semi_from_action};
use crate::tensorlin::LinearMap;
use crate::yangbaxter::{commutative_type2, make_r_rs, psi_a, quadratic_factorization, twisted_type2};

/// Construction names with their argument shapes.
pub const CONSTRUCTIONS: &[(&str, &str)] = &[
    ("gamma_q", "ALGEBRA,q=S"),
    ("eta_q", "ALGEBRA,q=S"),
    ("module_map", "MODULE"),
    ("regular", "ALGEBRA"),
    ("twist", "LEFT,RIGHT[,kind=K]"),
    ("declare", "ENTWINING,kind=K"),
    ("corrupt", "OBJECT,row=N,col=N,value=S"),
    ("R_rs", "ALGEBRA,r=S,s=S"),
    ("psi_A", "ALGEBRA"),
    ("type2_np2", "ALGEBRA,lambda=S,lambda2=S[,noncommutative=true]"),
    ("type1_np2", "ALGEBRA,lambda=S,lambda2=S[,noncommutative=true]"),
    ("twisted_type2", "ENTWINING,r=S,s=S,p=S,q=S"),
    ("quadratic_factorization", "p=S,q=S"),
    ("doi_koppinen", "BIALGEBRA,ALGEBRA,COMODULE,MODULE[,algebra=A][,coalgebra=C]"),
    ("alt_doi_koppinen", "BIALGEBRA,COALGEBRA,COMODULE,MODULE[,coalgebra=C][,algebra=A]"),
    ("biproduct", "ENTWINING,BIALGEBRA[,integral=LABEL]"),
    ("factorization_product", "ENTWINING"),
    ("cofactorization_coproduct", "ENTWINING"),
    ("dualize_semi", "ENTWINING"),
    ("dualize_cosemi", "ENTWINING"),
    ("dualize_both", "ENTWINING"),
    ("induced_module", "ENTWINING"),
    ("action_from_semi", "ENTWINING"),
    ("semi_from_action", "TAMBARA"),
    ("cotambara_action", "ENTWINING"),
    ("cosemi_from_action", "COTAMBARA"),
    ("opposite", "ALGEBRA"),
    ("dual", "ALGEBRA"),
    ("convolution", "COALGEBRA"),
    ("square_zero", "ALGEBRA"),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invocation {
    pub name: String,
    pub args: Vec<String>,
    pub params: BTreeMap<String, String>,
}

fn split_top(text: &str) -> Result<Vec<String>> {
    let mut parts = vec![String::new()];
    let mut depth = 0usize;
    for ch in text.chars() {
        match ch {
            '[' => {
                depth += 1;
                if depth > 1 {
                    parts.last_mut().unwrap().push(ch);
                }
            }
            ']' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse(format!("unbalanced brackets in {text:?}")))?;
                if depth > 0 {
                    parts.last_mut().unwrap().push(ch);
                }
            }
            ',' if depth == 0 => parts.push(String::new()),
            _ => parts.last_mut().unwrap().push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in {text:?}")));
    }
    Ok(parts)
}

impl Invocation {
    pub fn parse(text: &str) -> Result<Invocation> {
        let (name, rest) = text.split_once('@').unwrap_or((text, ""));
        let mut inv = Invocation {
            name: name.to_string(),
            args: Vec::new(),
            params: BTreeMap::new(),
        };
        if rest.is_empty() {
            return Ok(inv);
        }
        for part in split_top(rest)? {
            if part.is_empty() {
                return Err(Error::Parse(format!("empty argument in {text:?}")));
            }
            match part.split_once('=') {
                Some((k, v)) if !part.contains('@') => {
                    if inv.params.insert(k.to_string(), v.to_string()).is_some() {
                        return Err(Error::Parse(format!("repeated parameter {k:?}")));
                    }
                }
                _ => inv.args.push(part),
            }
        }
        Ok(inv)
    }
}

/// The named object, or the result of the invocation it spells.
pub fn lookup(doc: &Document, text: &str) -> Result<Object> {
    if let Ok(o) = doc.get(text) {
        return Ok(o.clone());
    }
    if !text.contains('@') {
        return Err(Error::Unknown {
            kind: "object",
            name: text.to_string(),
        });
    }
    Ok(construct(doc, text)?.remove(0).1)
}

/// Runs a construction. The first output is the constructed object; later ones
/// are companions (such as the coaction of a biproduct) named by suffix.
pub fn construct(doc: &Document, text: &str) -> Result<Vec<(String, Object)>> {
    let inv = Invocation::parse(text)?;
    let mut cx = Cx {
        doc,
        inv: &inv,
        used: Vec::new(),
    };
    let out = cx.run()?;
    if let Some(k) = inv.params.keys().find(|k| !cx.used.contains(k)) {
        return Err(Error::InvalidArgument(format!("unused parameter {k:?} for {}", inv.name)));
    }
    Ok(out)
}

struct Cx<'a> {
    doc: &'a Document,
    inv: &'a Invocation,
    used: Vec<&'a String>,
}

impl<'a> Cx<'a> {
    fn arg(&self, i: usize) -> Result<Object> {
        let text = self.inv.args.get(i).ok_or_else(|| {
            Error::InvalidArgument(format!("{} needs at least {} object argument(s)", self.inv.name, i + 1))
        })?;
        lookup(self.doc, text)
    }

    fn arity(&self, n: usize) -> Result<()> {
        if self.inv.args.len() != n {
            return Err(Error::InvalidArgument(format!(
                "{} takes {n} object argument(s), got {}",
                self.inv.name,
                self.inv.args.len()
            )));
        }
        Ok(())
    }

    fn name(&self, i: usize) -> &str {
        &self.inv.args[i]
    }

    fn algebra(&self, i: usize) -> Result<Algebra> {
        match self.arg(i)? {
            Object::Algebra(a) => Ok(a),
            Object::Bialgebra(h) => Ok(h.algebra().clone()),
            o => Err(wrong_kind(self.name(i), "algebra", &o)),
        }
    }

    fn coalgebra(&self, i: usize) -> Result<Coalgebra> {
        match self.arg(i)? {
            Object::Coalgebra(c) => Ok(c),
            Object::Bialgebra(h) => Ok(h.coalgebra().clone()),
            o => Err(wrong_kind(self.name(i), "coalgebra", &o)),
        }
    }

    fn entwining(&self, i: usize) -> Result<EntwiningData> {
        match self.arg(i)? {
            Object::Entwining(e) => Ok(e),
            o => Err(wrong_kind(self.name(i), "entwining", &o)),
        }
    }

    fn module(&self, i: usize) -> Result<ModuleAction> {
        match self.arg(i)? {
            Object::Module(m) => Ok(m),
            o => Err(wrong_kind(self.name(i), "module", &o)),
        }
    }

    fn carrier(&self, i: usize) -> Result<Carrier> {
        Ok(match self.arg(i)? {
            Object::Space(s) => Carrier::plain(&s),
            Object::Algebra(a) => Carrier::algebra(&a),
            Object::Coalgebra(c) => Carrier::coalgebra(&c),
            Object::Bialgebra(h) => Carrier::bialgebra(&h),
            o => return Err(wrong_kind(self.name(i), "space, algebra, coalgebra or bialgebra", &o)),
        })
    }

    fn param(&mut self, key: &str) -> Option<&'a str> {
        let (k, v) = self.inv.params.get_key_value(key)?;
        self.used.push(k);
        Some(v.as_str())
    }

    fn need(&mut self, key: &str) -> Result<&'a str> {
        self.param(key)
            .ok_or_else(|| Error::InvalidArgument(format!("{} needs parameter {key}=", self.inv.name)))
    }

    fn scalar(&mut self, key: &str) -> Result<Scalar> {
        let text = self.need(key)?;
        self.doc.field().parse(text)
    }

    fn index(&mut self, key: &str) -> Result<usize> {
        let text = self.need(key)?;
        text.parse()
            .map_err(|_| Error::Parse(format!("{key}={text} is not a nonnegative integer")))
    }

    fn flag(&mut self, key: &str) -> Result<bool> {
        match self.param(key) {
            None | Some("false") => Ok(false),
            Some("true") => Ok(true),
            Some(other) => Err(Error::Parse(format!("{key}={other} is not true or false"))),
        }
    }

    fn kind(&mut self) -> Result<Option<Kind>> {
        self.param("kind").map(str::parse).transpose()
    }

    fn named_algebra(&mut self, key: &str) -> Result<Option<Algebra>> {
        self.param(key).map(|n| self.doc.algebra(n)).transpose()
    }

    fn named_coalgebra(&mut self, key: &str) -> Result<Option<Coalgebra>> {
        self.param(key).map(|n| self.doc.coalgebra(n)).transpose()
    }

    fn run(&mut self) -> Result<Vec<(String, Object)>> {
        let one = |o: Object| Ok(vec![(String::new(), o)]);
        let name = self.inv.name.as_str();
        let expected_args = match name {
            "quadratic_factorization" => 0,
            "twist" | "biproduct" => 2,
            "doi_koppinen" | "alt_doi_koppinen" => 4,
            n if CONSTRUCTIONS.iter().any(|(c, _)| *c == n) => 1,
            _ => {
                return Err(Error::Unknown {
                    kind: "construction",
                    name: name.to_string(),
                })
            }
        };
        self.arity(expected_args)?;
        match name {
            "gamma_q" => {
                let q = self.scalar("q")?;
                one(Object::Entwining(gamma_q(&self.algebra(0)?, &q)))
            }
            "eta_q" => {
                let q = self.scalar("q")?;
                one(Object::Entwining(eta_q(&self.algebra(0)?, &q)))
            }
            "module_map" => one(Object::Entwining(module_semi(&self.module(0)?))),
            "regular" => one(Object::Module(ModuleAction::regular(&self.algebra(0)?))),
            "twist" => {
                let (b, a) = (self.carrier(0)?, self.carrier(1)?);
                let kind = match self.kind()? {
                    Some(k) => k,
                    None => match (b.algebra_structure(), a.algebra_structure(), a.coalgebra_structure()) {
                        (Some(_), Some(_), _) => Kind::Factorization,
                        (_, Some(_), _) => Kind::Semi,
                        (_, None, Some(_)) => Kind::Cosemi,
                        _ => return Err(Error::MissingStructure("twist: right leg needs a structure".into())),
                    },
                };
                one(Object::Entwining(EntwiningData::twist(self.doc.field(), b, a, kind)))
            }
            "declare" => {
                let e = self.entwining(0)?;
                let kind = self.kind()?.ok_or_else(|| Error::InvalidArgument("declare needs kind=".into()))?;
                one(Object::Entwining(EntwiningData::new(e.left().clone(), e.right().clone(), e.psi().clone(), kind)?))
            }
            "corrupt" => {
                let (row, col, value) = (self.index("row")?, self.index("col")?, self.scalar("value")?);
                let check = |m: &LinearMap| {
                    if row >= m.rows() || col >= m.cols() {
                        Err(Error::InvalidArgument(format!("entry ({row},{col}) outside {}x{}", m.rows(), m.cols())))
                    } else {
                        Ok(m.with_entry(row, col, value.clone()))
                    }
                };
                match self.arg(0)? {
                    Object::Entwining(e) => {
                        check(e.psi())?;
                        one(Object::Entwining(e.with_entry(row, col, value.clone())))
                    }
                    Object::Operator(y) => {
                        let m = check(y.map())?;
                        one(Object::Operator(crate::yangbaxter::YbCandidate::new(y.space(), &m)?))
                    }
                    Object::Map(m) => one(Object::Map(check(&m)?)),
                    o => Err(wrong_kind(self.name(0), "entwining, operator or map", &o)),
                }
            }
            "R_rs" => {
                let (r, s) = (self.scalar("r")?, self.scalar("s")?);
                one(Object::Operator(make_r_rs(&self.algebra(0)?, &r, &s)))
            }
            "psi_A" => one(Object::Operator(psi_a(&self.algebra(0)?))),
            "type2_np2" | "type1_np2" => {
                let (l, l2) = (self.scalar("lambda")?, self.scalar("lambda2")?);
                let nc = self.flag("noncommutative")?;
                let s = commutative_type2(&self.algebra(0)?, &l, &l2, nc)?;
                if name == "type2_np2" {
                    one(Object::Type2(s))
                } else {
                    one(Object::Type1(s.as_wxz()))
                }
            }
            "twisted_type2" => {
                let (r, s, p, q) = (self.scalar("r")?, self.scalar("s")?, self.scalar("p")?, self.scalar("q")?);
                one(Object::Type2(twisted_type2(&self.entwining(0)?, &r, &s, &p, &q)?))
            }
            "quadratic_factorization" => {
                let (p, q) = (self.scalar("p")?, self.scalar("q")?);
                one(Object::Entwining(quadratic_factorization(self.doc.field(), &p, &q)))
            }
            "doi_koppinen" | "alt_doi_koppinen" => {
                let h = match self.arg(0)? {
                    Object::Bialgebra(h) => h,
                    o => return Err(wrong_kind(self.name(0), "bialgebra", &o)),
                };
                let coaction = match self.arg(2)? {
                    Object::Comodule(c) => c,
                    o => return Err(wrong_kind(self.name(2), "comodule", &o)),
                };
                let m = self.module(3)?;
                let (alg, coalg) = (self.named_algebra("algebra")?, self.named_coalgebra("coalgebra")?);
                let e = if name == "doi_koppinen" {
                    doi_koppinen(&h, &self.algebra(1)?, &coaction, &m, alg.as_ref(), coalg.as_ref())?
                } else {
                    alt_doi_koppinen(&h, &self.coalgebra(1)?, &coaction, &m, coalg.as_ref(), alg.as_ref())?
                };
                one(Object::Entwining(e))
            }
            "biproduct" => {
                let e = self.entwining(0)?;
                let h = match self.arg(1)? {
                    Object::Bialgebra(h) => h,
                    o => return Err(wrong_kind(self.name(1), "bialgebra", &o)),
                };
                let integral = match self.param("integral") {
                    None => None,
                    Some(label) => {
                        let i = h.space().index_of(label).ok_or_else(|| Error::Unknown {
                            kind: "basis label",
                            name: label.to_string(),
                        })?;
                        let f = self.doc.field();
                        Some((0..h.space().dim()).map(|k| if k == i { f.one() } else { f.zero() }).collect::<Vec<_>>())
                    }
                };
                let b = biproduct(&e, &h, integral.as_deref())?;
                require("biproduct axioms", b.report)?;
                Ok(vec![
                    (String::new(), Object::Algebra(b.algebra)),
                    ("coaction".into(), Object::Comodule(b.coaction)),
                ])
            }
            "factorization_product" => {
                let (a, agreement) = factorization_product(&self.entwining(0)?)?;
                require("the product is associative and unital", agreement.construction)?;
                one(Object::Algebra(a))
            }
            "cofactorization_coproduct" => {
                let (c, agreement) = cofactorization_coproduct(&self.entwining(0)?)?;
                require("the coproduct is coassociative and counital", agreement.construction)?;
                one(Object::Coalgebra(c))
            }
            "dualize_semi" => one(Object::Entwining(dualize_semi(&self.entwining(0)?)?)),
            "dualize_cosemi" => one(Object::Entwining(dualize_cosemi(&self.entwining(0)?)?)),
            "dualize_both" => one(Object::Entwining(dualize_both(&self.entwining(0)?)?)),
            "induced_module" => one(Object::Module(induced_module(&self.entwining(0)?)?)),
            "action_from_semi" => one(Object::Tambara(action_from_semi(&self.entwining(0)?)?)),
            "cotambara_action" => one(Object::Cotambara(cotambara_action(&self.entwining(0)?)?)),
            "semi_from_action" => match self.arg(0)? {
                Object::Tambara(g) => one(Object::Entwining(semi_from_action(&g)?)),
                o => Err(wrong_kind(self.name(0), "tambara", &o)),
            },
            "cosemi_from_action" => match self.arg(0)? {
                Object::Cotambara(g) => one(Object::Entwining(cosemi_from_action(&g)?)),
                o => Err(wrong_kind(self.name(0), "cotambara", &o)),
            },
            "opposite" => one(Object::Algebra(self.algebra(0)?.opposite())),
            "dual" => one(Object::Coalgebra(dualize_algebra(&self.algebra(0)?))),
            "convolution" => one(Object::Algebra(convolution_algebra(&self.coalgebra(0)?))),
            "square_zero" => one(Object::Algebra(self.algebra(0)?.square_zero_extension())),
            _ => unreachable!("construction list and dispatch agree"),
        }
    }
}
