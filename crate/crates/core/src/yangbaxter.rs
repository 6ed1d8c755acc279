//! Yang–Baxter operators, the constant Yang–Baxter commutator and the systems built from it.

use crate::entwine::{
    check_algebra_factorization, check_entwined_variant, check_semi_entwining, require, Agreement, Carrier,
    EntwiningData, Kind, MeasuredCarrier, MeasuredModule, Variant,
};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalar::{Field, Scalar};
use crate::structures::{check_derivation, Algebra};
use crate::tensorlin::{LinearMap, Space};

fn id(f: Field, s: &Space) -> LinearMap {
    LinearMap::identity(f, s)
}

fn square(v: &Space) -> Space {
    v.tensor(v)
}

/// A candidate Yang–Baxter operator `φ: V ⊗ V → V ⊗ V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbCandidate {
    space: Space,
    map: LinearMap,
}

impl YbCandidate {
    pub fn new(space: &Space, map: &LinearMap) -> Result<YbCandidate> {
        let vv = square(space);
        Ok(YbCandidate {
            space: space.clone(),
            map: map.reshape(&vv, &vv)?,
        })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    pub fn field(&self) -> Field {
        self.map.field()
    }
}

/// `R` on `V ⊗ V′`, `S` on `V ⊗ V″` and `T` on `V′ ⊗ V″`.
#[derive(Clone, Debug)]
pub struct TripleSystem {
    spaces: [Space; 3],
    r: LinearMap,
    s: LinearMap,
    t: LinearMap,
}

impl TripleSystem {
    pub fn new(
        v: &Space,
        v1: &Space,
        v2: &Space,
        r: &LinearMap,
        s: &LinearMap,
        t: &LinearMap,
    ) -> Result<TripleSystem> {
        let endo = |m: &LinearMap, x: &Space, y: &Space| {
            let xy = x.tensor(y);
            m.reshape(&xy, &xy)
        };
        Ok(TripleSystem {
            r: endo(r, v, v1)?,
            s: endo(s, v, v2)?,
            t: endo(t, v1, v2)?,
            spaces: [v.clone(), v1.clone(), v2.clone()],
        })
    }

    /// All three maps equal to one endomorphism of `V ⊗ V`.
    pub fn homogeneous(v: &Space, map: &LinearMap) -> Result<TripleSystem> {
        TripleSystem::new(v, v, v, map, map, map)
    }

    pub fn spaces(&self) -> &[Space; 3] {
        &self.spaces
    }
}

/// `[R, S, T] = R₁₂ S₁₃ T₂₃ - T₂₃ S₁₃ R₁₂` on `V ⊗ V′ ⊗ V″`.
pub fn yb_commutator(t: &TripleSystem) -> Result<LinearMap> {
    let [v, v1, v2] = &t.spaces;
    let f = t.r.field();
    let r12 = t.r.kron(&id(f, v2));
    let s13 = t.s.embed13_split(v, v2, v1)?;
    let t23 = id(f, v).kron(&t.t);
    let lhs = LinearMap::compose_all(&[&r12, &s13, &t23])?;
    let rhs = LinearMap::compose_all(&[&t23, &s13, &r12])?;
    let space = Space::tensor_all([v, v1, v2]);
    lhs.sub(&rhs)?.reshape(&space, &space)
}

fn commutator_of(v: &Space, map: &LinearMap) -> Result<LinearMap> {
    yb_commutator(&TripleSystem::homogeneous(v, map)?)
}

fn braid_identity(r: &mut Report, y: &YbCandidate) -> Result<bool> {
    let f = y.field();
    let iv = id(f, &y.space);
    let p12 = y.map.kron(&iv);
    let p23 = iv.kron(&y.map);
    r.identity(
        "braid",
        &LinearMap::compose_all(&[&p12, &p23, &p12])?,
        &LinearMap::compose_all(&[&p23, &p12, &p23])?,
    )
}

/// `φ₁₂φ₂₃φ₁₂ = φ₂₃φ₁₂φ₂₃` alone.
pub fn check_braid(y: &YbCandidate) -> Result<Report> {
    let mut r = Report::new("braid");
    braid_identity(&mut r, y)?;
    Ok(r)
}

/// Braid relation, invertibility, and the quantum Yang–Baxter equation for `φ∘τ` and `τ∘φ`.
///
/// The last verdict records whether the three equations agree, as they must.
pub fn check_yb_operator(y: &YbCandidate) -> Result<Report> {
    let f = y.field();
    let v = &y.space;
    let tw = LinearMap::twist(f, v, v);
    let mut r = Report::new("yang-baxter-operator");
    let braid = braid_identity(&mut r, y)?;
    r.flag("invertible", y.map.is_invertible()?, None);
    let right = r.vanishes("qybe(phi∘tau)", &commutator_of(v, &y.map.compose(&tw)?)?)?;
    let left = r.vanishes("qybe(tau∘phi)", &commutator_of(v, &tw.compose(&y.map)?)?)?;
    r.flag("braid-qybe-agreement", braid == right && right == left, None);
    Ok(r)
}

/// `[φ, φ, φ] = 0`.
pub fn check_qybe(y: &YbCandidate) -> Result<Report> {
    let mut r = Report::new("qybe");
    r.vanishes("[R,R,R]", &commutator_of(&y.space, &y.map)?)?;
    Ok(r)
}

/// `W` on `V ⊗ V`, `X` on `V ⊗ V′`, `Z` on `V′ ⊗ V′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WxzSystem {
    v: Space,
    v1: Space,
    w: LinearMap,
    x: LinearMap,
    z: LinearMap,
}

impl WxzSystem {
    pub fn new(v: &Space, v1: &Space, w: &LinearMap, x: &LinearMap, z: &LinearMap) -> Result<WxzSystem> {
        let (vv, vv1, v1v1) = (square(v), v.tensor(v1), square(v1));
        Ok(WxzSystem {
            v: v.clone(),
            v1: v1.clone(),
            w: w.reshape(&vv, &vv)?,
            x: x.reshape(&vv1, &vv1)?,
            z: z.reshape(&v1v1, &v1v1)?,
        })
    }

    /// Completes a pair `W, X` with `Z = id ⊗ id`.
    pub fn semi(v: &Space, v1: &Space, w: &LinearMap, x: &LinearMap) -> Result<WxzSystem> {
        let z = id(w.field(), &square(v1));
        WxzSystem::new(v, v1, w, x, &z)
    }

    pub fn spaces(&self) -> [&Space; 2] {
        [&self.v, &self.v1]
    }

    pub fn w(&self) -> &LinearMap {
        &self.w
    }

    pub fn x(&self) -> &LinearMap {
        &self.x
    }

    pub fn z(&self) -> &LinearMap {
        &self.z
    }

    fn semi_identities(&self, r: &mut Report) -> Result<()> {
        let (v, v1) = (&self.v, &self.v1);
        r.vanishes("[W,W,W]", &commutator_of(v, &self.w)?)?;
        let wxx = TripleSystem::new(v, v, v1, &self.w, &self.x, &self.x)?;
        r.vanishes("[W,X,X]", &yb_commutator(&wxx)?)?;
        Ok(())
    }
}

/// `[W,W,W] = 0` and `[W,X,X] = 0`.
pub fn check_semi_system(s: &WxzSystem) -> Result<Report> {
    let mut r = Report::new("semi-yang-baxter-system");
    s.semi_identities(&mut r)?;
    Ok(r)
}

/// The four equations of a WXZ system.
pub fn check_wxz(s: &WxzSystem) -> Result<Report> {
    let mut r = Report::new("wxz-system");
    s.semi_identities(&mut r)?;
    let (v, v1) = (&s.v, &s.v1);
    r.vanishes("[Z,Z,Z]", &commutator_of(v1, &s.z)?)?;
    let xxz = TripleSystem::new(v, v1, v1, &s.x, &s.x, &s.z)?;
    r.vanishes("[X,X,Z]", &yb_commutator(&xxz)?)?;
    Ok(r)
}

/// Four endomorphisms of `V ⊗ V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeIISystem {
    space: Space,
    a: LinearMap,
    b: LinearMap,
    c: LinearMap,
    d: LinearMap,
}

impl TypeIISystem {
    pub fn new(space: &Space, a: &LinearMap, b: &LinearMap, c: &LinearMap, d: &LinearMap) -> Result<TypeIISystem> {
        let vv = square(space);
        let fit = |m: &LinearMap| m.reshape(&vv, &vv);
        Ok(TypeIISystem {
            space: space.clone(),
            a: fit(a)?,
            b: fit(b)?,
            c: fit(c)?,
            d: fit(d)?,
        })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn maps(&self) -> [&LinearMap; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// The WXZ system `W = 𝔸`, `X = 𝔹`, `Z = 𝔻`.
    pub fn as_wxz(&self) -> WxzSystem {
        WxzSystem::new(&self.space, &self.space, &self.a, &self.b, &self.d).expect("same square space")
    }
}

/// The eight equations of a type II system, with `X⁺ = τXτ`.
pub fn check_type2(s: &TypeIISystem) -> Result<Report> {
    let v = &s.space;
    let tw = LinearMap::twist(s.a.field(), v, v);
    let plus = |m: &LinearMap| LinearMap::compose_all(&[&tw, m, &tw]);
    let (bp, cp) = (plus(&s.b)?, plus(&s.c)?);
    let (a, b, c, d) = (&s.a, &s.b, &s.c, &s.d);
    let equations: [(&str, &LinearMap, &LinearMap, &LinearMap); 8] = [
        ("[A,A,A]", a, a, a),
        ("[D,D,D]", d, d, d),
        ("[A,C,C]", a, c, c),
        ("[D,B,B]", d, b, b),
        ("[A,B+,B+]", a, &bp, &bp),
        ("[D,C+,C+]", d, &cp, &cp),
        ("[A,C,B+]", a, c, &bp),
        ("[D,B,C+]", d, b, &cp),
    ];
    let mut r = Report::new("type-ii-system");
    for (name, x, y, z) in equations {
        r.vanishes(name, &yb_commutator(&TripleSystem::new(v, v, v, x, y, z)?)?)?;
    }
    Ok(r)
}

/// `a ⊗ b ↦ c·1 ⊗ m(a ⊗ b) + m(a ⊗ b) ⊗ 1 - b ⊗ a`, with `m` either `A`'s product or its
/// opposite.
fn unit_spread(a: &Algebra, product: &LinearMap, left: &Scalar, right: &Scalar, swap: &Scalar) -> LinearMap {
    let f = a.field();
    let s = a.space();
    let ia = id(f, s);
    let lead = a.unit().kron(&ia).compose(product).expect("shapes").scale(left);
    let trail = ia.kron(a.unit()).compose(product).expect("shapes").scale(right);
    let tw = LinearMap::twist(f, s, s).scale(swap);
    lead.add(&trail).and_then(|t| t.sub(&tw)).expect("same shape")
}

/// `R_{r,s}(a ⊗ b) = s ba ⊗ 1 + r 1 ⊗ ba - s b ⊗ a`.
pub fn make_r_rs(a: &Algebra, r: &Scalar, s: &Scalar) -> YbCandidate {
    let f = a.field();
    let tw = LinearMap::twist(f, a.space(), a.space());
    let opposite = a.mult().compose(&tw).expect("square");
    YbCandidate::new(a.space(), &unit_spread(a, &opposite, r, s, s)).expect("square")
}

/// `ψ^A(a ⊗ b) = 1 ⊗ ab + ab ⊗ 1 - a ⊗ b`.
pub fn psi_a(a: &Algebra) -> YbCandidate {
    let f = a.field();
    let ia = id(f, a.space());
    let m = a.mult();
    let map = a
        .unit()
        .kron(&ia)
        .compose(m)
        .and_then(|t| t.add(&ia.kron(a.unit()).compose(m)?))
        .and_then(|t| t.sub(&id(f, &square(a.space()))))
        .expect("square shapes");
    YbCandidate::new(a.space(), &map).expect("square")
}

/// `𝔸 = λ 1⊗ab + ab⊗1 - b⊗a`, `𝔹 = ℂ` the same with coefficient 1, `𝔻` with `λ′`.
///
/// `A` must be commutative unless `allow_noncommutative` is set.
pub fn commutative_type2(
    a: &Algebra,
    lambda: &Scalar,
    lambda_prime: &Scalar,
    allow_noncommutative: bool,
) -> Result<TypeIISystem> {
    if !allow_noncommutative && !a.is_commutative() {
        return Err(Error::InvalidArgument("the type II system needs a commutative algebra".into()));
    }
    let one = a.field().one();
    let spread = |c: &Scalar| unit_spread(a, a.mult(), c, &one, &one);
    let bc = spread(&one);
    TypeIISystem::new(a.space(), &spread(lambda), &bc, &bc, &spread(lambda_prime))
}

fn square_algebra_of(e: &EntwiningData) -> Result<&Algebra> {
    let a = e.right().need_algebra("right")?;
    if e.left().space().dim() != a.dim() {
        return Err(Error::shape("left leg", a.dim(), e.left().space().dim()));
    }
    Ok(a)
}

/// `𝔸 = R_{r,s}`, `𝔹 = ψ∘τ`, `ℂ = ψ′∘τ` with `ψ′ = τψτ`, `𝔻 = R_{p,q}`, for a
/// semi-entwining `ψ: A ⊗ A → A ⊗ A`.
pub fn twisted_type2(e: &EntwiningData, r: &Scalar, s: &Scalar, p: &Scalar, q: &Scalar) -> Result<TypeIISystem> {
    let a = square_algebra_of(e)?;
    require("semi-entwining", check_semi_entwining(e)?)?;
    let sa = a.space();
    let tw = LinearMap::twist(a.field(), sa, sa);
    let psi = e.psi().reshape(&square(sa), &square(sa))?;
    let b = psi.compose(&tw)?;
    let c = tw.compose(&psi)?;
    TypeIISystem::new(sa, make_r_rs(a, r, s).map(), &b, &c, make_r_rs(a, p, q).map())
}

/// The factorization `ψ: A^op ⊗ A → A ⊗ A^op` on `A = K[x]/(x² - p)` with
/// `ψ(1⊗1) = 1⊗1`, `ψ(1⊗x) = x⊗1`, `ψ(x⊗1) = 1⊗x`, `ψ(x⊗x) = q 1⊗1 - x⊗x`.
pub fn quadratic_factorization(field: Field, p: &Scalar, q: &Scalar) -> EntwiningData {
    let a = Algebra::quadratic(field, p);
    let sq = square(a.space());
    let psi = LinearMap::from_sparse_fn(field, sq.clone(), sq, |c| match c {
        0 => vec![(0, field.one())],
        1 => vec![(2, field.one())],
        2 => vec![(1, field.one())],
        _ => vec![(0, q.clone()), (3, -field.one())],
    });
    let left = Carrier::algebra(&a.opposite());
    EntwiningData::new(left, Carrier::algebra(&a), psi, Kind::Factorization).expect("shapes")
}

/// `X = ψ ∘ τ_{A,B}` on `A ⊗ B`.
fn system_map(e: &EntwiningData, a: &Algebra) -> Result<LinearMap> {
    let tw = LinearMap::twist(e.field(), a.space(), e.left().space());
    e.psi().compose(&tw)
}

fn fixes_unit_left(e: &EntwiningData, a: &Algebra, x: &LinearMap) -> Result<Report> {
    let ib = id(e.field(), e.left().space());
    let mut r = Report::new("system-map");
    r.identity("X(1⊗b)=1⊗b", &x.compose(&a.unit().kron(&ib))?, &a.unit().kron(&ib))?;
    Ok(r)
}

/// `W = R_{r,s}` and `X = ψ ∘ τ_{A,B}` form a semi Yang–Baxter system iff `ψ` is a
/// semi-entwining. Needs `X(1 ⊗ b) = 1 ⊗ b`.
pub fn check_semi_system_equivalence(e: &EntwiningData, r: &Scalar, s: &Scalar) -> Result<Agreement> {
    let a = e.right().need_algebra("right")?;
    let x = system_map(e, a)?;
    require("X fixes 1 ⊗ b", fixes_unit_left(e, a, &x)?)?;
    let sys = WxzSystem::semi(a.space(), e.left().space(), make_r_rs(a, r, s).map(), &x)?;
    Ok(Agreement {
        construction: check_semi_system(&sys)?,
        axioms: check_semi_entwining(e)?,
    })
}

/// `W = R^A_{r,s}`, `X = ψ ∘ τ_{A,B}` and `Z = R^B_{p,q}` form a WXZ system iff `ψ` is an
/// algebra factorization. Needs `X(1 ⊗ b) = 1 ⊗ b` and `X(a ⊗ 1) = a ⊗ 1`.
pub fn check_factorization_system_equivalence(
    e: &EntwiningData,
    r: &Scalar,
    s: &Scalar,
    p: &Scalar,
    q: &Scalar,
) -> Result<Agreement> {
    let a = e.right().need_algebra("right")?;
    let b = e.left().need_algebra("left")?;
    let x = system_map(e, a)?;
    let mut pre = fixes_unit_left(e, a, &x)?;
    let ia = id(e.field(), a.space());
    pre.identity("X(a⊗1)=a⊗1", &x.compose(&ia.kron(b.unit()))?, &ia.kron(b.unit()))?;
    require("X fixes the units", pre)?;
    let sys = WxzSystem::new(a.space(), b.space(), make_r_rs(a, r, s).map(), &x, make_r_rs(b, p, q).map())?;
    Ok(Agreement {
        construction: check_wxz(&sys)?,
        axioms: check_algebra_factorization(e)?,
    })
}

/// For a semi-entwining `ψ` on `A ⊗ A`: `τψτ` is a semi-entwining iff `ψ` is a factorization
/// `A^op ⊗ A → A ⊗ A^op`.
pub fn check_opposite_factorization(e: &EntwiningData) -> Result<Agreement> {
    let a = square_algebra_of(e)?;
    require("semi-entwining", check_semi_entwining(e)?)?;
    let sa = a.space();
    let tw = LinearMap::twist(a.field(), sa, sa);
    let psi = e.psi().reshape(&square(sa), &square(sa))?;
    let twisted = EntwiningData::new(
        Carrier::algebra(a),
        Carrier::algebra(a),
        LinearMap::compose_all(&[&tw, &psi, &tw])?,
        Kind::Semi,
    )?;
    let opposite = EntwiningData::new(Carrier::algebra(&a.opposite()), Carrier::algebra(a), psi, Kind::Factorization)?;
    Ok(Agreement {
        construction: check_semi_entwining(&twisted)?,
        axioms: check_algebra_factorization(&opposite)?,
    })
}

/// `[ζ, η, X] = 0` on `M ⊗ B ⊗ A` for a semi-entwined module `M` with measuring `φ`, where
/// `ζ(m ⊗ b) = φ(m ⊗ b) ⊗ z`, `η(m ⊗ a) = ma ⊗ 1` and `X = τ_{A,B} ∘ ψ` on `B ⊗ A`.
pub fn check_measured_commutator(e: &EntwiningData, mm: &MeasuredModule, z: &[Scalar]) -> Result<Report> {
    if z.iter().all(Scalar::is_zero) {
        return Err(Error::InvalidArgument("z must be nonzero".into()));
    }
    let module = match (mm.carrier(), mm.variant()) {
        (MeasuredCarrier::Module(module), Variant::SemiModule) => module,
        _ => return Err(Error::InvalidArgument("needs a semi-entwined module".into())),
    };
    require("semi-entwined module", check_entwined_variant(mm, e)?)?;
    let f = e.field();
    let a = module.algebra();
    let (sm, sa, sb) = (module.module(), a.space(), e.left().space());
    let im = id(f, sm);
    let phi = mm.measuring().reshape(&sm.tensor(sb), sm)?;
    let zeta = im.kron(&LinearMap::from_vector(f, sb, z)?).compose(&phi)?;
    let eta = im.kron(a.unit()).compose(module.action())?;
    let x = LinearMap::twist(f, sa, sb).compose(e.psi())?;
    let mut r = Report::new("measured-commutator");
    r.vanishes("[zeta,eta,X]", &yb_commutator(&TripleSystem::new(sm, sb, sa, &zeta, &eta, &x)?)?)?;
    Ok(r)
}

fn same_space(a: &Algebra, y: &YbCandidate) -> Result<()> {
    if a.dim() != y.space.dim() {
        return Err(Error::shape("braiding space", a.dim(), y.space.dim()));
    }
    Ok(())
}

/// A Yang–Baxter operator compatible with the unit and with the product in each leg.
pub fn check_braided_algebra(a: &Algebra, y: &YbCandidate) -> Result<Report> {
    same_space(a, y)?;
    let f = a.field();
    let ia = id(f, a.space());
    let (m, u) = (a.mult(), a.unit());
    let psi = y.map.reshape(&square(a.space()), &square(a.space()))?;
    let mut r = Report::new("braided-algebra");
    let yb = check_yb_operator(y)?;
    let failed: Vec<_> = yb.failures().map(|v| v.name.clone()).collect();
    r.flag("yb-operator", yb.passed, (!failed.is_empty()).then(|| failed.join(", ")));
    r.identity("unit-left", &psi.compose(&ia.kron(u))?, &u.kron(&ia))?;
    r.identity("unit-right", &psi.compose(&u.kron(&ia))?, &ia.kron(u))?;
    let rhs = LinearMap::compose_all(&[&m.kron(&ia), &ia.kron(&psi), &psi.kron(&ia)])?;
    r.identity("product-left-leg", &psi.compose(&ia.kron(m))?, &rhs)?;
    let rhs = LinearMap::compose_all(&[&ia.kron(m), &psi.kron(&ia), &ia.kron(&psi)])?;
    r.identity("product-right-leg", &psi.compose(&m.kron(&ia))?, &rhs)?;
    Ok(r)
}

/// `M ∘ ψ = M`.
pub fn check_r_commutative(a: &Algebra, y: &YbCandidate) -> Result<Report> {
    same_space(a, y)?;
    let mut r = Report::new("r-commutative");
    r.identity("r-commutative", &a.mult().compose(&y.map)?, a.mult())?;
    Ok(r)
}

/// An algebra morphism `f` with `(f ⊗ f) ∘ ψ = ψ′ ∘ (f ⊗ f)`.
pub fn check_braided_morphism(
    f: &LinearMap,
    (a, ya): (&Algebra, &YbCandidate),
    (b, yb): (&Algebra, &YbCandidate),
) -> Result<Report> {
    same_space(a, ya)?;
    same_space(b, yb)?;
    let f = f.reshape(a.space(), b.space())?;
    let ff = f.kron(&f);
    let mut r = Report::new("braided-morphism");
    r.identity("multiplicative", &f.compose(a.mult())?, &b.mult().compose(&ff)?)?;
    r.identity("unital", &f.compose(a.unit())?, b.unit())?;
    r.identity("braiding", &ff.compose(&ya.map)?, &yb.map.compose(&ff)?)?;
    Ok(r)
}

/// `a ↦ a ⊕ δ(a)` as a morphism `(A, ψ^A) → (A ⊕ A, ψ^{A⊕A})` into the square-zero
/// extension. Needs `δ` to be a derivation.
pub fn check_derivation_morphism(a: &Algebra, delta: &LinearMap) -> Result<Report> {
    require("derivation", check_derivation(a, delta)?)?;
    let f = a.field();
    let n = a.dim();
    let delta = delta.reshape(a.space(), a.space())?;
    let target = a.square_zero_extension();
    let map = LinearMap::from_sparse_fn(f, a.space().clone(), target.space().clone(), |j| {
        let mut col = vec![(j, f.one())];
        col.extend(delta.sparse_column(j).iter().map(|(i, x)| (i + n, x.clone())));
        col
    });
    let (ya, yt) = (psi_a(a), psi_a(&target));
    let mut r = Report::new("derivation-morphism");
    r.absorb("target", check_braided_algebra(&target, &yt)?);
    r.absorb("morphism", check_braided_morphism(&map, (a, &ya), (&target, &yt))?);
    Ok(r)
}
