//! Semi-entwining, cosemi-entwining, entwining and factorization maps, with the
//! constructions they induce.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalar::{Field, Scalar};
use crate::structures::{
    check_algebra, check_bialgebra, check_coalgebra, check_comodule, check_comodule_algebra,
    check_comodule_coalgebra, check_module, check_module_algebra, check_module_coalgebra, convolution_algebra,
    dualize_algebra, is_grouplike_bilateral_integral, Algebra, Bialgebra, Coalgebra, ComoduleCoaction, ModuleAction,
    Side,
};
use crate::tensorlin::{LinearMap, Space};

fn id(f: Field, s: &Space) -> LinearMap {
    LinearMap::identity(f, s)
}

/// Returns `Err(Precondition)` unless the report passed.
pub(crate) fn require(what: &str, report: Report) -> Result<()> {
    if report.passed {
        Ok(())
    } else {
        Err(Error::precondition(what, report))
    }
}

/// A space optionally carrying an algebra and/or a coalgebra structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    space: Space,
    algebra: Option<Algebra>,
    coalgebra: Option<Coalgebra>,
}

impl Carrier {
    pub fn plain(space: &Space) -> Carrier {
        Carrier {
            space: space.clone(),
            algebra: None,
            coalgebra: None,
        }
    }

    pub fn algebra(a: &Algebra) -> Carrier {
        Carrier {
            space: a.space().clone(),
            algebra: Some(a.clone()),
            coalgebra: None,
        }
    }

    pub fn coalgebra(c: &Coalgebra) -> Carrier {
        Carrier {
            space: c.space().clone(),
            algebra: None,
            coalgebra: Some(c.clone()),
        }
    }

    pub fn bialgebra(h: &Bialgebra) -> Carrier {
        Carrier {
            space: h.space().clone(),
            algebra: Some(h.algebra().clone()),
            coalgebra: Some(h.coalgebra().clone()),
        }
    }

    pub fn with_algebra(mut self, a: &Algebra) -> Result<Carrier> {
        if a.dim() != self.space.dim() {
            return Err(Error::shape("carrier algebra", self.space.dim(), a.dim()));
        }
        self.algebra = Some(a.relabel(&self.space)?);
        Ok(self)
    }

    pub fn with_coalgebra(mut self, c: &Coalgebra) -> Result<Carrier> {
        if c.dim() != self.space.dim() {
            return Err(Error::shape("carrier coalgebra", self.space.dim(), c.dim()));
        }
        let s = &self.space;
        self.coalgebra = Some(Coalgebra::new(
            c.comult().reshape(s, &s.tensor(s))?,
            c.counit().reshape(s, &Space::ground())?,
        )?);
        Ok(self)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn algebra_structure(&self) -> Option<&Algebra> {
        self.algebra.as_ref()
    }

    pub fn coalgebra_structure(&self) -> Option<&Coalgebra> {
        self.coalgebra.as_ref()
    }

    pub fn need_algebra(&self, role: &str) -> Result<&Algebra> {
        self.algebra
            .as_ref()
            .ok_or_else(|| Error::MissingStructure(format!("{role} carries no algebra")))
    }

    pub fn need_coalgebra(&self, role: &str) -> Result<&Coalgebra> {
        self.coalgebra
            .as_ref()
            .ok_or_else(|| Error::MissingStructure(format!("{role} carries no coalgebra")))
    }

    /// The dual carrier with reversed structures: an algebra `A` becomes the coalgebra
    /// `(A^op)*` and a coalgebra `C` the algebra `(C*)^op`.
    fn dual(&self) -> Carrier {
        let dual = self.space.dual();
        Carrier {
            algebra: self.coalgebra.as_ref().map(|c| convolution_algebra(c).opposite()),
            coalgebra: self.algebra.as_ref().map(|a| dualize_algebra(&a.opposite())),
            space: dual,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Semi,
    Cosemi,
    Factorization,
    Cofactorization,
    EntwiningLL,
    EntwiningRR,
}

impl Kind {
    pub const ALL: [Kind; 6] = [
        Kind::Semi,
        Kind::Cosemi,
        Kind::Factorization,
        Kind::Cofactorization,
        Kind::EntwiningLL,
        Kind::EntwiningRR,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Semi => "semi",
            Kind::Cosemi => "cosemi",
            Kind::Factorization => "factorization",
            Kind::Cofactorization => "cofactorization",
            Kind::EntwiningLL => "entwining-ll",
            Kind::EntwiningRR => "entwining-rr",
        }
    }

    /// Whether the right-hand structure is an algebra (as opposed to a coalgebra).
    pub fn over_algebra(self) -> bool {
        matches!(self, Kind::Semi | Kind::Factorization | Kind::EntwiningLL)
    }

    /// The kind of the map obtained by dualizing both legs.
    pub fn dual(self) -> Kind {
        match self {
            Kind::Semi => Kind::Cosemi,
            Kind::Cosemi => Kind::Semi,
            Kind::Factorization => Kind::Cofactorization,
            Kind::Cofactorization => Kind::Factorization,
            Kind::EntwiningLL => Kind::EntwiningRR,
            Kind::EntwiningRR => Kind::EntwiningLL,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        Kind::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| Error::Unknown {
            kind: "entwining kind",
            name: s.to_string(),
        })
    }
}

/// A map `ψ: left ⊗ right → right ⊗ left` with its declared kind.
///
/// The left carrier is `B` (or `D`), the right one the algebra `A` (or coalgebra `C`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntwiningData {
    left: Carrier,
    right: Carrier,
    psi: LinearMap,
    kind: Kind,
}

impl EntwiningData {
    pub fn new(left: Carrier, right: Carrier, psi: LinearMap, kind: Kind) -> Result<EntwiningData> {
        let dom = left.space.tensor(&right.space);
        let cod = right.space.tensor(&left.space);
        if psi.cols() != dom.dim() || psi.rows() != cod.dim() {
            return Err(Error::shape(
                "entwining map",
                format!("{}x{}", cod.dim(), dom.dim()),
                format!("{}x{}", psi.rows(), psi.cols()),
            ));
        }
        let psi = psi.reshape(&dom, &cod)?;
        Ok(EntwiningData { left, right, psi, kind })
    }

    /// The twist `τ: left ⊗ right → right ⊗ left`.
    pub fn twist(field: Field, left: Carrier, right: Carrier, kind: Kind) -> EntwiningData {
        let psi = LinearMap::twist(field, &left.space, &right.space);
        EntwiningData { left, right, psi, kind }
    }

    pub fn left(&self) -> &Carrier {
        &self.left
    }

    pub fn right(&self) -> &Carrier {
        &self.right
    }

    pub fn psi(&self) -> &LinearMap {
        &self.psi
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn field(&self) -> Field {
        self.psi.field()
    }

    pub fn with_kind(&self, kind: Kind) -> EntwiningData {
        EntwiningData { kind, ..self.clone() }
    }

    pub fn with_psi(&self, psi: LinearMap) -> Result<EntwiningData> {
        EntwiningData::new(self.left.clone(), self.right.clone(), psi, self.kind)
    }

    /// A copy with one matrix entry of `ψ` replaced.
    pub fn with_entry(&self, row: usize, col: usize, value: Scalar) -> EntwiningData {
        EntwiningData {
            psi: self.psi.with_entry(row, col, value),
            ..self.clone()
        }
    }

    /// Runs the check matching the declared kind.
    pub fn check(&self) -> Result<Report> {
        check_kind(self, self.kind)
    }
}

pub fn check_kind(e: &EntwiningData, kind: Kind) -> Result<Report> {
    match kind {
        Kind::Semi => check_semi_entwining(e),
        Kind::Cosemi => check_cosemi_entwining(e),
        Kind::Factorization => check_algebra_factorization(e),
        Kind::Cofactorization => check_coalgebra_factorization(e),
        Kind::EntwiningLL => check_entwining_ll(e),
        Kind::EntwiningRR => check_entwining_rr(e),
    }
}

/// `ψ(b ⊗ 1) = 1 ⊗ b` and `ψ ∘ (id ⊗ m) = (m ⊗ id)(id ⊗ ψ)(ψ ⊗ id)`.
fn right_algebra_identities(r: &mut Report, e: &EntwiningData, a: &Algebra) -> Result<()> {
    let f = e.field();
    let (ib, ia) = (id(f, e.left.space()), id(f, a.space()));
    let psi = &e.psi;
    r.identity("unit", &psi.compose(&ib.kron(a.unit()))?, &a.unit().kron(&ib))?;
    let rhs = LinearMap::compose_all(&[&a.mult().kron(&ib), &ia.kron(psi), &psi.kron(&ia)])?;
    r.identity("multiplicative", &psi.compose(&ib.kron(a.mult()))?, &rhs)?;
    Ok(())
}

/// `ψ(1 ⊗ a) = a ⊗ 1` and `ψ ∘ (m ⊗ id) = (id ⊗ m)(ψ ⊗ id)(id ⊗ ψ)`.
fn left_algebra_identities(r: &mut Report, e: &EntwiningData, b: &Algebra) -> Result<()> {
    let f = e.field();
    let (ib, ia) = (id(f, b.space()), id(f, e.right.space()));
    let psi = &e.psi;
    r.identity("left-unit", &psi.compose(&b.unit().kron(&ia))?, &ia.kron(b.unit()))?;
    let rhs = LinearMap::compose_all(&[&ia.kron(b.mult()), &psi.kron(&ib), &ib.kron(psi)])?;
    r.identity("left-multiplicative", &psi.compose(&b.mult().kron(&ia))?, &rhs)?;
    Ok(())
}

/// `(ε ⊗ id)ψ = id ⊗ ε` and `(Δ ⊗ id)ψ = (id ⊗ ψ)(ψ ⊗ id)(id ⊗ Δ)`.
fn right_coalgebra_identities(r: &mut Report, e: &EntwiningData, c: &Coalgebra) -> Result<()> {
    let f = e.field();
    let (id_d, ic) = (id(f, e.left.space()), id(f, c.space()));
    let psi = &e.psi;
    r.identity("counit", &c.counit().kron(&id_d).compose(psi)?, &id_d.kron(c.counit()))?;
    let rhs = LinearMap::compose_all(&[&ic.kron(psi), &psi.kron(&ic), &id_d.kron(c.comult())])?;
    r.identity("comultiplicative", &c.comult().kron(&id_d).compose(psi)?, &rhs)?;
    Ok(())
}

/// `(id ⊗ ε)ψ = ε ⊗ id` and `(id ⊗ Δ)ψ = (ψ ⊗ id)(id ⊗ ψ)(Δ ⊗ id)`.
fn left_coalgebra_identities(r: &mut Report, e: &EntwiningData, d: &Coalgebra) -> Result<()> {
    let f = e.field();
    let (id_d, ic) = (id(f, d.space()), id(f, e.right.space()));
    let psi = &e.psi;
    r.identity("left-counit", &ic.kron(d.counit()).compose(psi)?, &d.counit().kron(&ic))?;
    let rhs = LinearMap::compose_all(&[&psi.kron(&id_d), &id_d.kron(psi), &d.comult().kron(&ic)])?;
    r.identity("left-comultiplicative", &ic.kron(d.comult()).compose(psi)?, &rhs)?;
    Ok(())
}

pub fn check_semi_entwining(e: &EntwiningData) -> Result<Report> {
    let a = e.right.need_algebra("right")?;
    let mut r = Report::new("semi-entwining");
    right_algebra_identities(&mut r, e, a)?;
    Ok(r)
}

pub fn check_algebra_factorization(e: &EntwiningData) -> Result<Report> {
    let a = e.right.need_algebra("right")?;
    let b = e.left.need_algebra("left")?;
    let mut r = Report::new("algebra-factorization");
    right_algebra_identities(&mut r, e, a)?;
    left_algebra_identities(&mut r, e, b)?;
    Ok(r)
}

pub fn check_entwining_ll(e: &EntwiningData) -> Result<Report> {
    let a = e.right.need_algebra("right")?;
    let b = e.left.need_coalgebra("left")?;
    let mut r = Report::new("entwining-ll");
    right_algebra_identities(&mut r, e, a)?;
    left_coalgebra_identities(&mut r, e, b)?;
    Ok(r)
}

pub fn check_cosemi_entwining(e: &EntwiningData) -> Result<Report> {
    let c = e.right.need_coalgebra("right")?;
    let mut r = Report::new("cosemi-entwining");
    right_coalgebra_identities(&mut r, e, c)?;
    Ok(r)
}

pub fn check_coalgebra_factorization(e: &EntwiningData) -> Result<Report> {
    let c = e.right.need_coalgebra("right")?;
    let d = e.left.need_coalgebra("left")?;
    let mut r = Report::new("coalgebra-factorization");
    right_coalgebra_identities(&mut r, e, c)?;
    left_coalgebra_identities(&mut r, e, d)?;
    Ok(r)
}

pub fn check_entwining_rr(e: &EntwiningData) -> Result<Report> {
    let c = e.right.need_coalgebra("right")?;
    let d = e.left.need_algebra("left")?;
    let mut r = Report::new("entwining-rr");
    right_coalgebra_identities(&mut r, e, c)?;
    left_algebra_identities(&mut r, e, d)?;
    Ok(r)
}

/// `γ_q(b ⊗ a) = 1 ⊗ ba + q ba ⊗ 1 - q b ⊗ a` on `A ⊗ A`.
pub fn gamma_q(a: &Algebra, q: &Scalar) -> EntwiningData {
    let f = a.field();
    let ia = id(f, a.space());
    let m = a.mult();
    let psi = a
        .unit()
        .kron(&ia)
        .compose(m)
        .and_then(|t| t.add(&ia.kron(a.unit()).compose(m)?.scale(q)))
        .and_then(|t| t.sub(&id(f, &a.space().tensor(a.space())).scale(q)))
        .expect("square shapes");
    EntwiningData::new(Carrier::algebra(a), Carrier::algebra(a), psi, Kind::Semi).expect("shapes")
}

/// `η_q(b ⊗ a) = q (ba - ab) ⊗ 1 + a ⊗ b` on `A ⊗ A`.
pub fn eta_q(a: &Algebra, q: &Scalar) -> EntwiningData {
    let f = a.field();
    let s = a.space();
    let tw = LinearMap::twist(f, s, s);
    let commutator = a.mult().sub(&a.mult().compose(&tw).expect("square")).expect("same shape");
    let psi = id(f, s)
        .kron(a.unit())
        .compose(&commutator)
        .expect("shapes")
        .scale(q)
        .add(&tw)
        .expect("shapes");
    EntwiningData::new(Carrier::algebra(a), Carrier::algebra(a), psi, Kind::Semi).expect("shapes")
}

/// `φ(m ⊗ a) = 1 ⊗ ma` for a right module `M`.
pub fn module_semi(module: &ModuleAction) -> EntwiningData {
    let f = module.field();
    let a = module.algebra();
    let psi = a
        .unit()
        .kron(&id(f, module.module()))
        .compose(module.action())
        .expect("shapes");
    EntwiningData::new(Carrier::plain(module.module()), Carrier::algebra(a), psi, Kind::Semi).expect("shapes")
}

/// `b ⊗ a ↦ a₀ ⊗ b·a₁` for a right `H`-comodule algebra `A` and a right `H`-module `B`.
///
/// With `b_algebra` the map is declared a factorization (needs `B` an `H`-module algebra);
/// with only `b_coalgebra` it is declared an entwining (needs `B` an `H`-module coalgebra).
pub fn doi_koppinen(
    h: &Bialgebra,
    a: &Algebra,
    coaction: &ComoduleCoaction,
    b: &ModuleAction,
    b_algebra: Option<&Algebra>,
    b_coalgebra: Option<&Coalgebra>,
) -> Result<EntwiningData> {
    require("A is a comodule algebra", check_comodule_algebra(a, coaction, h)?)?;
    require("B is a module", check_module(b)?)?;
    let mut left = Carrier::plain(b.module());
    let mut kind = Kind::Semi;
    if let Some(bc) = b_coalgebra {
        require("B is a module coalgebra", check_module_coalgebra(bc, b, h)?)?;
        left = left.with_coalgebra(bc)?;
        kind = Kind::EntwiningLL;
    }
    if let Some(ba) = b_algebra {
        require("B is a module algebra", check_module_algebra(ba, b, h)?)?;
        left = left.with_algebra(ba)?;
        kind = Kind::Factorization;
    }
    let f = h.field();
    let (sa, sb, sh) = (a.space(), b.module(), h.space());
    let rho = coaction.coaction().reshape(sa, &sa.tensor(sh))?;
    let act = b.action().reshape(&sb.tensor(sh), sb)?;
    let psi = LinearMap::compose_all(&[
        &id(f, sa).kron(&act),
        &LinearMap::twist(f, sb, sa).kron(&id(f, sh)),
        &id(f, sb).kron(&rho),
    ])?;
    EntwiningData::new(left, Carrier::algebra(a), psi, kind)
}

/// `d ⊗ c ↦ c₀ ⊗ d·c₁` for a right `H`-comodule coalgebra `C` and a right `H`-module `D`.
///
/// With `d_coalgebra` the map is declared a coalgebra factorization (needs `D` an
/// `H`-module coalgebra); with only `d_algebra` it is declared a right-right entwining.
pub fn alt_doi_koppinen(
    h: &Bialgebra,
    c: &Coalgebra,
    coaction: &ComoduleCoaction,
    d: &ModuleAction,
    d_coalgebra: Option<&Coalgebra>,
    d_algebra: Option<&Algebra>,
) -> Result<EntwiningData> {
    require("C is a comodule coalgebra", check_comodule_coalgebra(c, coaction, h)?)?;
    require("D is a module", check_module(d)?)?;
    let mut left = Carrier::plain(d.module());
    let mut kind = Kind::Cosemi;
    if let Some(da) = d_algebra {
        require("D is a module algebra", check_module_algebra(da, d, h)?)?;
        left = left.with_algebra(da)?;
        kind = Kind::EntwiningRR;
    }
    if let Some(dc) = d_coalgebra {
        require("D is a module coalgebra", check_module_coalgebra(dc, d, h)?)?;
        left = left.with_coalgebra(dc)?;
        kind = Kind::Cofactorization;
    }
    let f = h.field();
    let (sc, sd, sh) = (c.space(), d.module(), h.space());
    let rho = coaction.coaction().reshape(sc, &sc.tensor(sh))?;
    let act = d.action().reshape(&sd.tensor(sh), sd)?;
    let psi = LinearMap::compose_all(&[
        &id(f, sc).kron(&act),
        &LinearMap::twist(f, sd, sc).kron(&id(f, sh)),
        &id(f, sd).kron(&rho),
    ])?;
    EntwiningData::new(left, Carrier::coalgebra(c), psi, kind)
}

fn induced_action_unchecked(e: &EntwiningData, a: &Algebra) -> Result<LinearMap> {
    let f = e.field();
    a.mult().kron(&id(f, e.left.space())).compose(&id(f, a.space()).kron(&e.psi))
}

/// The right `A`-module `A ⊗ B`, `(a ⊗ b) * a' = a a'_α ⊗ b^α`.
pub fn induced_module(e: &EntwiningData) -> Result<ModuleAction> {
    require("semi-entwining", check_semi_entwining(e)?)?;
    let a = e.right.need_algebra("right")?;
    ModuleAction::new(a.clone(), induced_action_unchecked(e, a)?)
}

/// The verdicts of a construction and of the axioms it is claimed to be equivalent to.
#[derive(Clone, Debug)]
pub struct Agreement {
    pub construction: Report,
    pub axioms: Report,
}

impl Agreement {
    pub fn agrees(&self) -> bool {
        self.construction.passed == self.axioms.passed
    }

    /// A report that passes iff the two verdicts agree.
    pub fn report(&self, suite: &str) -> Report {
        let verdict = |p: bool| if p { "PASS" } else { "FAIL" };
        let mut r = Report::new(suite);
        r.flag(
            "verdicts-agree",
            self.agrees(),
            Some(format!(
                "{} {}, {} {}",
                self.construction.suite,
                verdict(self.construction.passed),
                self.axioms.suite,
                verdict(self.axioms.passed)
            )),
        );
        r
    }
}

/// The product `(a ⊗ b)(a' ⊗ b') = a a'_α ⊗ b^α b'` with unit `1 ⊗ 1`, together with the
/// agreement between its algebra check and the factorization check.
pub fn factorization_product(e: &EntwiningData) -> Result<(Algebra, Agreement)> {
    let a = e.right.need_algebra("right")?;
    let b = e.left.need_algebra("left")?;
    let f = e.field();
    let (sa, sb) = (a.space(), b.space());
    let mult = a
        .mult()
        .kron(b.mult())
        .compose(&LinearMap::kron_all(&[&id(f, sa), &e.psi, &id(f, sb)])?)?;
    let space = sa.tensor(sb);
    let product = Algebra::new(
        mult.reshape(&Space::tensor_all([&space, &space]), &space)?,
        a.unit().kron(b.unit()).reshape(&Space::ground(), &space)?,
    )?;
    let agreement = Agreement {
        construction: check_algebra(&product)?,
        axioms: check_algebra_factorization(e)?,
    };
    Ok((product, agreement))
}

/// The coproduct `d ⊗ c ↦ (d₁ ⊗ c₁^α) ⊗ (d₂_α ⊗ c₂)` with counit `ε ⊗ ε`, together with
/// the agreement between its coalgebra check and the coalgebra factorization check.
pub fn cofactorization_coproduct(e: &EntwiningData) -> Result<(Coalgebra, Agreement)> {
    let c = e.right.need_coalgebra("right")?;
    let d = e.left.need_coalgebra("left")?;
    let f = e.field();
    let (sc, sd) = (c.space(), d.space());
    let comult = LinearMap::kron_all(&[&id(f, sd), &e.psi, &id(f, sc)])?.compose(&d.comult().kron(c.comult()))?;
    let space = sd.tensor(sc);
    let coproduct = Coalgebra::new(
        comult.reshape(&space, &Space::tensor_all([&space, &space]))?,
        d.counit().kron(c.counit()).reshape(&space, &Space::ground())?,
    )?;
    let agreement = Agreement {
        construction: check_coalgebra(&coproduct)?,
        axioms: check_coalgebra_factorization(e)?,
    };
    Ok((coproduct, agreement))
}

/// Replaces the right leg by its dual: entry `((i, n), (m, j))` of the result is entry
/// `((j, n), (m, i))` of `ψ`.
fn transpose_right_leg(psi: &LinearMap, left: &Space, right: &Space, new_right: &Space) -> LinearMap {
    let (nl, nr) = (left.dim(), right.dim());
    let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nl * nr];
    for m in 0..nl {
        for i in 0..nr {
            for (row, v) in psi.sparse_column(m * nr + i) {
                let (j, n) = (row / nl, row % nl);
                cols[m * nr + j].push((i * nl + n, v.clone()));
            }
        }
    }
    LinearMap::from_sparse_fn(psi.field(), left.tensor(new_right), new_right.tensor(left), |c| {
        std::mem::take(&mut cols[c])
    })
}

/// `ψ^{*C}(d ⊗ c*) = Σ_i c_i* ⊗ c*(c_i^α) d_α`, a semi-entwining over the convolution algebra.
pub fn dualize_cosemi(e: &EntwiningData) -> Result<EntwiningData> {
    require("cosemi-entwining", check_cosemi_entwining(e)?)?;
    let c = e.right.need_coalgebra("right")?;
    let dual = convolution_algebra(c);
    let psi = transpose_right_leg(&e.psi, e.left.space(), c.space(), dual.space());
    EntwiningData::new(e.left.clone(), Carrier::algebra(&dual), psi, Kind::Semi)
}

/// The same dual-basis formula applied to a semi-entwining over `A`, giving a cosemi-entwining
/// over the dual coalgebra `A*`.
pub fn dualize_semi(e: &EntwiningData) -> Result<EntwiningData> {
    require("semi-entwining", check_semi_entwining(e)?)?;
    let a = e.right.need_algebra("right")?;
    let dual = dualize_algebra(a);
    let psi = transpose_right_leg(&e.psi, e.left.space(), a.space(), dual.space());
    EntwiningData::new(e.left.clone(), Carrier::coalgebra(&dual), psi, Kind::Cosemi)
}

/// Dualizes both legs: `τ ∘ ψᵀ ∘ τ: B* ⊗ A* → A* ⊗ B*`. Reading the legs in reverse
/// order reverses products and coproducts, so each structure is replaced by the dual of its
/// opposite. Semi-entwinings become cosemi-entwinings, factorizations become coalgebra
/// factorizations, and so on.
pub fn dualize_both(e: &EntwiningData) -> Result<EntwiningData> {
    let f = e.field();
    let (left, right) = (e.left.dual(), e.right.dual());
    let (sl, sr) = (left.space(), right.space());
    let transposed = e.psi.transpose().reshape(&sr.tensor(sl), &sl.tensor(sr))?;
    let psi = LinearMap::compose_all(&[
        &LinearMap::twist(f, sl, sr),
        &transposed,
        &LinearMap::twist(f, sl, sr),
    ])?;
    EntwiningData::new(left, right, psi, e.kind.dual())
}

/// `ψ` as an intertwining operator from `B ⊗ A` (acting on the right leg) to the induced
/// module `A ⊗ B`: `ψ ∘ ρ = ρ' ∘ (ψ ⊗ id)`.
pub fn check_intertwining(e: &EntwiningData) -> Result<Report> {
    let a = e.right.need_algebra("right")?;
    let f = e.field();
    let (sb, sa) = (e.left.space(), a.space());
    let rho = id(f, sb).kron(a.mult());
    let rho_prime = induced_action_unchecked(e, a)?;
    let mut r = Report::new("intertwining");
    r.absorb("trivial-module", check_module(&ModuleAction::new(a.clone(), rho.clone())?)?);
    r.absorb("induced-module", check_module(&ModuleAction::new(a.clone(), rho_prime.clone())?)?);
    r.identity(
        "intertwining",
        &e.psi.compose(&rho)?,
        &rho_prime.compose(&e.psi.kron(&id(f, sa)))?,
    )?;
    Ok(r)
}

/// The algebra and comodule structure on `B ⊕ A` induced by a semi-entwining over a bialgebra.
#[derive(Clone, Debug)]
pub struct Biproduct {
    pub algebra: Algebra,
    pub coaction: ComoduleCoaction,
    pub report: Report,
}

/// Builds `B ⊕ A` with `(b, a)(b', a') = (b * a' + a ∘ b', aa')`, `a ∘ b = ε(a) b`,
/// `b * a = ε(a_α) b^α`, unit `(0, 1)`, and the coaction `b ⊕ a ↦ b ⊗ x + a₁ ⊗ a₂`
/// where `x = 1` unless an integral is supplied.
pub fn biproduct(e: &EntwiningData, h: &Bialgebra, integral: Option<&[Scalar]>) -> Result<Biproduct> {
    let a = e.right.need_algebra("right")?;
    if a.dim() != h.space().dim() || a.mult().to_rows() != h.algebra().mult().to_rows() {
        return Err(Error::InvalidArgument("the entwined algebra must be the bialgebra's algebra".into()));
    }
    require("semi-entwining", check_semi_entwining(e)?)?;
    require("bialgebra", check_bialgebra(h)?)?;
    if let Some(x) = integral {
        require("group-like bilateral integral", is_grouplike_bilateral_integral(h, x)?)?;
    }
    let f = e.field();
    let (sb, sa) = (e.left.space().clone(), h.space().clone());
    let (nb, na) = (sb.dim(), sa.dim());
    let eps = h.coalgebra().counit();
    let left_act = eps.kron(&id(f, &sb)).reshape(&sa.tensor(&sb), &sb)?;
    let psi = e.psi.reshape(&sb.tensor(&sa), &sa.tensor(&sb))?;
    let right_act = eps.kron(&id(f, &sb)).compose(&psi)?.reshape(&sb.tensor(&sa), &sb)?;
    let alg = h.algebra();

    let mut report = Report::new("biproduct");
    let (ia, ib) = (id(f, &sa), id(f, &sb));
    report.identity(
        "bimodule/left-associativity",
        &left_act.compose(&alg.mult().kron(&ib))?,
        &left_act.compose(&ia.kron(&left_act))?,
    )?;
    report.identity("bimodule/left-unit", &left_act.compose(&alg.unit().kron(&ib))?, &ib)?;
    report.identity(
        "bimodule/right-associativity",
        &right_act.compose(&ib.kron(alg.mult()))?,
        &right_act.compose(&right_act.kron(&ia))?,
    )?;
    report.identity("bimodule/right-unit", &right_act.compose(&ib.kron(alg.unit()))?, &ib)?;
    report.identity(
        "bimodule/compatibility",
        &right_act.compose(&left_act.kron(&ia))?,
        &left_act.compose(&ia.kron(&right_act))?,
    )?;

    let space = sb.direct_sum(&sa);
    let n = nb + na;
    let shift = |col: Vec<(usize, Scalar)>, offset: usize| -> Vec<(usize, Scalar)> {
        col.into_iter().map(|(r, v)| (r + offset, v)).collect()
    };
    let counit = h.coalgebra().counit_values();
    let mult = LinearMap::from_sparse_fn(f, space.tensor(&space), space.clone(), |c| {
        let (i, j) = (c / n, c % n);
        match (i < nb, j < nb) {
            (true, true) => Vec::new(),
            (true, false) => right_act.sparse_column(i * na + (j - nb)).to_vec(),
            (false, true) => vec![(j, counit[i - nb].clone())],
            (false, false) => shift(alg.mult().sparse_column((i - nb) * na + (j - nb)).to_vec(), nb),
        }
    });
    let mut unit = vec![f.zero(); nb];
    unit.extend(alg.unit_vector());
    let algebra = Algebra::new(mult, LinearMap::from_vector(f, &space, &unit)?)?;

    let x: Vec<Scalar> = match integral {
        Some(x) => x.to_vec(),
        None => alg.unit_vector(),
    };
    let comult = h.coalgebra().comult();
    let coaction_map = LinearMap::from_sparse_fn(f, space.clone(), space.tensor(&sa), |i| {
        if i < nb {
            x.iter()
                .enumerate()
                .map(|(k, v)| (i * na + k, v.clone()))
                .collect()
        } else {
            comult
                .sparse_column(i - nb)
                .iter()
                .map(|(r, v)| (((r / na) + nb) * na + r % na, v.clone()))
                .collect()
        }
    });
    let coaction = ComoduleCoaction::new(h.coalgebra().clone(), coaction_map, Side::Right)?;
    report.absorb("algebra", check_algebra(&algebra)?);
    report.absorb("comodule", check_comodule(&coaction)?);
    if integral.is_some() {
        report.absorb("comodule-algebra", check_comodule_algebra(&algebra, &coaction, h)?);
    }
    Ok(Biproduct {
        algebra,
        coaction,
        report,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `◁: M ⊗ V → M` with `m a_α ◁ v^α = (m ◁ v) a`.
    SemiModule,
    /// `ρ: M → M ⊗ V` with `ρ(ma) = m₀ ψ(m₁ ⊗ a)`.
    SemiComodule,
    /// `▷: V ⊗ M → M` with `ρ_C(v ▷ m) = m₋₁_α ⊗ v^α ▷ m₀`.
    CosemiModule,
    /// `ρ_V: M → V ⊗ M` with `(id ⊗ ρ_V) ρ_C = (ψ ⊗ id)(id ⊗ ρ_C) ρ_V`.
    CosemiComodule,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::SemiModule => "semi-entwined-module",
            Variant::SemiComodule => "semi-entwined-comodule",
            Variant::CosemiModule => "cosemi-entwined-module",
            Variant::CosemiComodule => "cosemi-entwined-comodule",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MeasuredCarrier {
    Module(ModuleAction),
    Comodule(ComoduleCoaction),
}

/// A module (or left comodule) `M` with a measuring or comeasuring by a space `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasuredModule {
    carrier: MeasuredCarrier,
    vee: Space,
    measuring: LinearMap,
    variant: Variant,
}

impl MeasuredModule {
    pub fn semi_module(module: &ModuleAction, vee: &Space, measuring: &LinearMap) -> Result<MeasuredModule> {
        let m = module.module();
        let measuring = measuring.reshape(&m.tensor(vee), m)?;
        Ok(MeasuredModule {
            carrier: MeasuredCarrier::Module(module.clone()),
            vee: vee.clone(),
            measuring,
            variant: Variant::SemiModule,
        })
    }

    pub fn semi_comodule(module: &ModuleAction, vee: &Space, comeasuring: &LinearMap) -> Result<MeasuredModule> {
        let m = module.module();
        let measuring = comeasuring.reshape(m, &m.tensor(vee))?;
        Ok(MeasuredModule {
            carrier: MeasuredCarrier::Module(module.clone()),
            vee: vee.clone(),
            measuring,
            variant: Variant::SemiComodule,
        })
    }

    pub fn cosemi_module(comodule: &ComoduleCoaction, vee: &Space, measuring: &LinearMap) -> Result<MeasuredModule> {
        Self::require_left(comodule)?;
        let m = comodule.comodule();
        let measuring = measuring.reshape(&vee.tensor(m), m)?;
        Ok(MeasuredModule {
            carrier: MeasuredCarrier::Comodule(comodule.clone()),
            vee: vee.clone(),
            measuring,
            variant: Variant::CosemiModule,
        })
    }

    pub fn cosemi_comodule(comodule: &ComoduleCoaction, vee: &Space, comeasuring: &LinearMap) -> Result<MeasuredModule> {
        Self::require_left(comodule)?;
        let m = comodule.comodule();
        let measuring = comeasuring.reshape(m, &vee.tensor(m))?;
        Ok(MeasuredModule {
            carrier: MeasuredCarrier::Comodule(comodule.clone()),
            vee: vee.clone(),
            measuring,
            variant: Variant::CosemiComodule,
        })
    }

    fn require_left(c: &ComoduleCoaction) -> Result<()> {
        if c.side() != Side::Left {
            return Err(Error::InvalidArgument("cosemi-entwined variants need a left coaction".into()));
        }
        Ok(())
    }

    pub fn carrier(&self) -> &MeasuredCarrier {
        &self.carrier
    }

    pub fn vee(&self) -> &Space {
        &self.vee
    }

    pub fn measuring(&self) -> &LinearMap {
        &self.measuring
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }
}

pub fn check_entwined_variant(mm: &MeasuredModule, e: &EntwiningData) -> Result<Report> {
    let f = e.field();
    let v = &mm.vee;
    if v.dim() != e.left.space().dim() {
        return Err(Error::shape("measuring space", e.left.space().dim(), v.dim()));
    }
    let mut r = Report::new(mm.variant.as_str());
    match (&mm.carrier, mm.variant) {
        (MeasuredCarrier::Module(module), Variant::SemiModule | Variant::SemiComodule) => {
            if !e.kind.over_algebra() {
                return Err(Error::InvalidArgument(format!("{} needs a semi-entwining, got {}", mm.variant.as_str(), e.kind)));
            }
            let a = module.algebra();
            if e.right.need_algebra("right")?.dim() != a.dim() {
                return Err(Error::shape("module algebra", e.right.space().dim(), a.dim()));
            }
            let sa = a.space();
            let sm = module.module();
            let psi = e.psi.reshape(&v.tensor(sa), &sa.tensor(v))?;
            let act = module.action();
            let (im, iv, ia) = (id(f, sm), id(f, v), id(f, sa));
            if mm.variant == Variant::SemiModule {
                let lhs = LinearMap::compose_all(&[&mm.measuring, &act.kron(&iv), &im.kron(&psi)])?;
                let rhs = act.compose(&mm.measuring.kron(&ia))?;
                r.identity("measuring-compatibility", &lhs, &rhs)?;
            } else {
                let lhs = mm.measuring.compose(act)?;
                let rhs = LinearMap::compose_all(&[&act.kron(&iv), &im.kron(&psi), &mm.measuring.kron(&ia)])?;
                r.identity("comeasuring-compatibility", &lhs, &rhs)?;
            }
        }
        (MeasuredCarrier::Comodule(comodule), Variant::CosemiModule | Variant::CosemiComodule) => {
            if e.kind.over_algebra() {
                return Err(Error::InvalidArgument(format!("{} needs a cosemi-entwining, got {}", mm.variant.as_str(), e.kind)));
            }
            let c = comodule.coalgebra();
            if e.right.need_coalgebra("right")?.dim() != c.dim() {
                return Err(Error::shape("comodule coalgebra", e.right.space().dim(), c.dim()));
            }
            let sc = c.space();
            let sm = comodule.comodule();
            let psi = e.psi.reshape(&v.tensor(sc), &sc.tensor(v))?;
            let rho = comodule.coaction();
            let (im, iv, ic) = (id(f, sm), id(f, v), id(f, sc));
            if mm.variant == Variant::CosemiModule {
                let lhs = rho.compose(&mm.measuring)?;
                let rhs = LinearMap::compose_all(&[&ic.kron(&mm.measuring), &psi.kron(&im), &iv.kron(rho)])?;
                r.identity("measuring-compatibility", &lhs, &rhs)?;
            } else {
                let lhs = ic.kron(&mm.measuring).compose(rho)?;
                let rhs = LinearMap::compose_all(&[&psi.kron(&im), &iv.kron(rho), &mm.measuring])?;
                r.identity("comeasuring-compatibility", &lhs, &rhs)?;
            }
        }
        _ => return Err(Error::InvalidArgument("carrier does not match the variant".into())),
    }
    Ok(r)
}

/// Splits a right `A ⊗ B`-module into `ma = m(a ⊗ 1)` and `m ◁ b = m(1 ⊗ b)`.
pub fn split_module(e: &EntwiningData, ab_module: &ModuleAction) -> Result<(ModuleAction, ModuleAction)> {
    let a = e.right.need_algebra("right")?;
    let b = e.left.need_algebra("left")?;
    let f = e.field();
    let sm = ab_module.module();
    let act = ab_module.action().reshape(&Space::tensor_all([sm, a.space(), b.space()]), sm)?;
    let im = id(f, sm);
    let a_act = act.compose(&LinearMap::kron_all(&[&im, &id(f, a.space()), b.unit()])?)?;
    let b_act = act.compose(&LinearMap::kron_all(&[&im, a.unit(), &id(f, b.space())])?)?;
    Ok((
        ModuleAction::new(a.clone(), a_act.reshape(&sm.tensor(a.space()), sm)?)?,
        ModuleAction::new(b.clone(), b_act.reshape(&sm.tensor(b.space()), sm)?)?,
    ))
}

/// Assembles `m(a ⊗ b) = (ma) ◁ b` over the factorization product, checks it is a module,
/// then splits it back and checks the restricted actions reproduce the originals and
/// satisfy the semi-entwined module identity.
pub fn entwined_roundtrip(e: &EntwiningData, module: &ModuleAction, measuring: &ModuleAction) -> Result<Report> {
    require("algebra factorization", check_algebra_factorization(e)?)?;
    require("B-measuring is an action", check_module(measuring)?)?;
    let f = e.field();
    let b = e.left.need_algebra("left")?;
    let sm = module.module();
    let mut r = Report::new("entwined-roundtrip");
    let forward = MeasuredModule::semi_module(module, b.space(), measuring.action())?;
    r.absorb("semi-entwined", check_entwined_variant(&forward, e)?);

    let (product, _) = factorization_product(e)?;
    let assembled = measuring.action().compose(&module.action().kron(&id(f, b.space())))?;
    let ab_module = ModuleAction::new(product, assembled.reshape(&sm.tensor(&e.right.space().tensor(b.space())), sm)?)?;
    r.absorb("assembled", check_module(&ab_module)?);

    let (a_part, b_part) = split_module(e, &ab_module)?;
    r.identity("restricted-A-action", a_part.action(), module.action())?;
    r.identity("restricted-B-action", b_part.action(), measuring.action())?;
    let reassembled = b_part.action().compose(&a_part.action().kron(&id(f, b.space())))?;
    r.identity("reassembled", &reassembled, &assembled)?;
    let back = MeasuredModule::semi_module(&a_part, b.space(), b_part.action())?;
    r.absorb("restricted-semi-entwined", check_entwined_variant(&back, e)?);
    Ok(r)
}

#[cfg(test)]
mod tests;
