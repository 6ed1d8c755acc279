//! Algebras, coalgebras, bialgebras, modules and comodules given by structure
//! constants, with their axiom checks.

use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalar::{Field, Scalar};
use crate::tensorlin::{LinearMap, Space};

fn id(f: Field, s: &Space) -> LinearMap {
    LinearMap::identity(f, s)
}

/// A unital associative algebra: `mult: A ⊗ A → A` and `unit: K → A`.
///
/// The axioms are not assumed; see [`check_algebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    mult: LinearMap,
    unit: LinearMap,
}

impl Algebra {
    pub fn new(mult: LinearMap, unit: LinearMap) -> Result<Algebra> {
        let space = mult.codomain().clone();
        let square = space.tensor(&space);
        if mult.cols() != square.dim() {
            return Err(Error::shape("algebra multiplication domain", square.dim(), mult.cols()));
        }
        if unit.cols() != 1 || unit.rows() != space.dim() {
            return Err(Error::shape("algebra unit", format!("{}x1", space.dim()), format!("{}x{}", unit.rows(), unit.cols())));
        }
        let mult = mult.reshape(&square, &space)?;
        let unit = unit.reshape(&Space::ground(), &space)?;
        Ok(Algebra { mult, unit })
    }

    /// Builds an algebra from the products of basis elements (sparse columns).
    pub fn from_table(
        field: Field,
        space: &Space,
        mut product: impl FnMut(usize, usize) -> Vec<(usize, Scalar)>,
        unit: &[Scalar],
    ) -> Result<Algebra> {
        let n = space.dim();
        let mult = LinearMap::from_sparse_fn(field, space.tensor(space), space.clone(), |c| product(c / n, c % n));
        Algebra::new(mult, LinearMap::from_vector(field, space, unit)?)
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Algebra {
        let k = Space::ground();
        Algebra::from_table(field, &k, |_, _| vec![(0, field.one())], &[field.one()]).expect("1-dim algebra")
    }

    /// `K[x]/(x² - p)` on the basis `1, x`.
    pub fn quadratic(field: Field, p: &Scalar) -> Algebra {
        let s = Space::new(["1", "x"]).expect("labels");
        Algebra::from_table(
            field,
            &s,
            |i, j| match i + j {
                2 => vec![(0, p.clone())],
                k => vec![(k, field.one())],
            },
            &[field.one(), field.zero()],
        )
        .expect("2-dim algebra")
    }

    pub fn space(&self) -> &Space {
        self.mult.codomain()
    }

    pub fn dim(&self) -> usize {
        self.space().dim()
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn mult(&self) -> &LinearMap {
        &self.mult
    }

    pub fn unit(&self) -> &LinearMap {
        &self.unit
    }

    pub fn unit_vector(&self) -> Vec<Scalar> {
        self.unit.column(0)
    }

    /// Product of basis elements `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.mult.column(i * self.dim() + j)
    }

    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.dim();
        if a.len() != n || b.len() != n {
            return Err(Error::shape("multiply", n, a.len().max(b.len())));
        }
        let ab: Vec<Scalar> = (0..n * n).map(|k| &a[k / n] * &b[k % n]).collect();
        self.mult.apply(&ab)
    }

    /// The opposite algebra, `a ·op b = b a`.
    pub fn opposite(&self) -> Algebra {
        let s = self.space();
        let tw = LinearMap::twist(self.field(), s, s);
        Algebra {
            mult: self.mult.compose(&tw).expect("square shape"),
            unit: self.unit.clone(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.opposite().mult == self.mult
    }

    /// The tensor product algebra `A ⊗ B` with `(a⊗b)(a'⊗b') = aa' ⊗ bb'`.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let f = self.field();
        let (a, b) = (self.space(), other.space());
        let mid = id(f, a).kron(&LinearMap::twist(f, b, a)).kron(&id(f, b));
        let mult = self.mult.kron(&other.mult).compose(&mid).expect("tensor shapes");
        Algebra {
            mult,
            unit: self.unit.kron(&other.unit).reshape(&Space::ground(), &a.tensor(b)).expect("unit"),
        }
    }

    /// `A ⊕ A` with `(a ⊕ b)(a' ⊕ b') = aa' ⊕ (ab' + ba')` and unit `1 ⊕ 0`.
    pub fn square_zero_extension(&self) -> Algebra {
        let f = self.field();
        let n = self.dim();
        let space = self.space().direct_sum(self.space());
        let lift = |v: Vec<Scalar>, offset: usize| -> Vec<(usize, Scalar)> {
            v.into_iter().enumerate().map(|(k, x)| (k + offset, x)).collect()
        };
        let mult = LinearMap::from_sparse_fn(f, space.tensor(&space), space.clone(), |c| {
            let (i, j) = (c / (2 * n), c % (2 * n));
            match (i < n, j < n) {
                (true, true) => lift(self.basis_product(i, j), 0),
                (true, false) => lift(self.basis_product(i, j - n), n),
                (false, true) => lift(self.basis_product(i - n, j), n),
                (false, false) => Vec::new(),
            }
        });
        let mut unit = self.unit_vector();
        unit.extend((0..n).map(|_| f.zero()));
        Algebra::new(mult, LinearMap::from_vector(f, &space, &unit).expect("unit")).expect("shapes")
    }

    /// `A` as a coalgebra-free view of its underlying space with new labels.
    pub fn relabel(&self, space: &Space) -> Result<Algebra> {
        Ok(Algebra {
            mult: self.mult.reshape(&space.tensor(space), space)?,
            unit: self.unit.reshape(&Space::ground(), space)?,
        })
    }
}

/// A counital coassociative coalgebra: `comult: C → C ⊗ C`, `counit: C → K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    comult: LinearMap,
    counit: LinearMap,
}

impl Coalgebra {
    pub fn new(comult: LinearMap, counit: LinearMap) -> Result<Coalgebra> {
        let space = comult.domain().clone();
        let square = space.tensor(&space);
        if comult.rows() != square.dim() {
            return Err(Error::shape("comultiplication codomain", square.dim(), comult.rows()));
        }
        if counit.rows() != 1 || counit.cols() != space.dim() {
            return Err(Error::shape("counit", format!("1x{}", space.dim()), format!("{}x{}", counit.rows(), counit.cols())));
        }
        Ok(Coalgebra {
            comult: comult.reshape(&space, &square)?,
            counit: counit.reshape(&space, &Space::ground())?,
        })
    }

    pub fn from_table(
        field: Field,
        space: &Space,
        coproduct: impl FnMut(usize) -> Vec<(usize, Scalar)>,
        counit: &[Scalar],
    ) -> Result<Coalgebra> {
        let comult = LinearMap::from_sparse_fn(field, space.clone(), space.tensor(space), coproduct);
        Coalgebra::new(comult, LinearMap::from_covector(field, space, counit)?)
    }

    /// `Δ(g) = g ⊗ g`, `ε(g) = 1` on every basis element.
    pub fn grouplike(field: Field, space: &Space) -> Coalgebra {
        let n = space.dim();
        let ones = vec![field.one(); n];
        Coalgebra::from_table(field, space, |i| vec![(i * n + i, field.one())], &ones).expect("shapes")
    }

    pub fn space(&self) -> &Space {
        self.comult.domain()
    }

    pub fn dim(&self) -> usize {
        self.space().dim()
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn comult(&self) -> &LinearMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinearMap {
        &self.counit
    }

    pub fn counit_values(&self) -> Vec<Scalar> {
        (0..self.dim()).map(|j| self.counit.entry(0, j)).collect()
    }
}

/// An algebra and a coalgebra on the same space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    algebra: Algebra,
    coalgebra: Coalgebra,
}

impl Bialgebra {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra) -> Result<Bialgebra> {
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::shape("bialgebra", algebra.dim(), coalgebra.dim()));
        }
        let coalgebra = Coalgebra::new(
            coalgebra.comult.reshape(algebra.space(), &algebra.space().tensor(algebra.space()))?,
            coalgebra.counit.reshape(algebra.space(), &Space::ground())?,
        )?;
        Ok(Bialgebra { algebra, coalgebra })
    }

    /// The monoid algebra of a finite monoid given by its multiplication table;
    /// every element is group-like.
    pub fn monoid(field: Field, space: &Space, table: impl Fn(usize, usize) -> usize) -> Result<Bialgebra> {
        let unit_index = (0..space.dim())
            .find(|&e| (0..space.dim()).all(|a| table(e, a) == a && table(a, e) == a))
            .ok_or_else(|| Error::InvalidArgument("monoid table has no identity".into()))?;
        let mut unit = vec![field.zero(); space.dim()];
        unit[unit_index] = field.one();
        let algebra = Algebra::from_table(field, space, |i, j| vec![(table(i, j), field.one())], &unit)?;
        Bialgebra::new(algebra, Coalgebra::grouplike(field, space))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn space(&self) -> &Space {
        self.algebra.space()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }
}

/// A right module `M ⊗ A → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    algebra: Algebra,
    action: LinearMap,
}

impl ModuleAction {
    pub fn new(algebra: Algebra, action: LinearMap) -> Result<ModuleAction> {
        let m = action.codomain().clone();
        let dom = m.tensor(algebra.space());
        if action.cols() != dom.dim() {
            return Err(Error::shape("module action domain", dom.dim(), action.cols()));
        }
        let action = action.reshape(&dom, &m)?;
        Ok(ModuleAction { algebra, action })
    }

    /// `A` acting on itself by right multiplication.
    pub fn regular(algebra: &Algebra) -> ModuleAction {
        ModuleAction {
            algebra: algebra.clone(),
            action: algebra.mult().clone(),
        }
    }

    /// `A` acting on a space through a character `χ: A → K`, `m·a = χ(a) m`.
    pub fn character(algebra: &Algebra, space: &Space, chi: &[Scalar]) -> Result<ModuleAction> {
        let f = algebra.field();
        let character = LinearMap::from_covector(f, algebra.space(), chi)?;
        let action = id(f, space).kron(&character).reshape(&space.tensor(algebra.space()), space)?;
        ModuleAction::new(algebra.clone(), action)
    }

    pub fn module(&self) -> &Space {
        self.action.codomain()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn action(&self) -> &LinearMap {
        &self.action
    }

    pub fn field(&self) -> Field {
        self.action.field()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `M → M ⊗ C`
    Right,
    /// `M → C ⊗ M`
    Left,
}

/// A comodule over a coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleCoaction {
    coalgebra: Coalgebra,
    coaction: LinearMap,
    side: Side,
}

impl ComoduleCoaction {
    pub fn new(coalgebra: Coalgebra, coaction: LinearMap, side: Side) -> Result<ComoduleCoaction> {
        let m = coaction.domain().clone();
        let cod = match side {
            Side::Right => m.tensor(coalgebra.space()),
            Side::Left => coalgebra.space().tensor(&m),
        };
        if coaction.rows() != cod.dim() {
            return Err(Error::shape("coaction codomain", cod.dim(), coaction.rows()));
        }
        let coaction = coaction.reshape(&m, &cod)?;
        Ok(ComoduleCoaction {
            coalgebra,
            coaction,
            side,
        })
    }

    /// `C` coacting on itself through `Δ`, on the given side.
    pub fn regular(coalgebra: &Coalgebra, side: Side) -> ComoduleCoaction {
        ComoduleCoaction {
            coalgebra: coalgebra.clone(),
            coaction: coalgebra.comult().clone(),
            side,
        }
    }

    pub fn comodule(&self) -> &Space {
        self.coaction.domain()
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn coaction(&self) -> &LinearMap {
        &self.coaction
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn field(&self) -> Field {
        self.coaction.field()
    }
}

pub fn check_algebra(a: &Algebra) -> Result<Report> {
    let f = a.field();
    let s = a.space();
    let i = id(f, s);
    let m = a.mult();
    let mut r = Report::new("algebra");
    r.identity("associativity", &m.compose(&m.kron(&i))?, &m.compose(&i.kron(m))?)?;
    r.identity("unit-left", &m.compose(&a.unit().kron(&i))?, &i)?;
    r.identity("unit-right", &m.compose(&i.kron(a.unit()))?, &i)?;
    Ok(r)
}

pub fn check_coalgebra(c: &Coalgebra) -> Result<Report> {
    let f = c.field();
    let i = id(f, c.space());
    let d = c.comult();
    let mut r = Report::new("coalgebra");
    r.identity("coassociativity", &d.kron(&i).compose(d)?, &i.kron(d).compose(d)?)?;
    r.identity("counit-left", &c.counit().kron(&i).compose(d)?, &i)?;
    r.identity("counit-right", &i.kron(c.counit()).compose(d)?, &i)?;
    Ok(r)
}

pub fn check_bialgebra(h: &Bialgebra) -> Result<Report> {
    let f = h.field();
    let s = h.space();
    let (a, c) = (h.algebra(), h.coalgebra());
    let mut r = Report::new("bialgebra");
    r.absorb("algebra", check_algebra(a)?);
    r.absorb("coalgebra", check_coalgebra(c)?);
    let middle = id(f, s).kron(&LinearMap::twist(f, s, s)).kron(&id(f, s));
    let rhs = LinearMap::compose_all(&[&a.mult().kron(a.mult()), &middle, &c.comult().kron(c.comult())])?;
    r.identity("comult-multiplicative", &c.comult().compose(a.mult())?, &rhs)?;
    r.identity("comult-unit", &c.comult().compose(a.unit())?, &a.unit().kron(a.unit()))?;
    r.identity("counit-multiplicative", &c.counit().compose(a.mult())?, &c.counit().kron(c.counit()))?;
    r.identity("counit-unit", &c.counit().compose(a.unit())?, &id(f, &Space::ground()))?;
    Ok(r)
}

pub fn check_module(m: &ModuleAction) -> Result<Report> {
    let f = m.field();
    let alg = m.algebra();
    let (im, ia) = (id(f, m.module()), id(f, alg.space()));
    let act = m.action();
    let mut r = Report::new("module");
    r.identity(
        "associativity",
        &act.compose(&act.kron(&ia))?,
        &act.compose(&im.kron(alg.mult()))?,
    )?;
    r.identity("unit", &act.compose(&im.kron(alg.unit()))?, &im)?;
    Ok(r)
}

pub fn check_comodule(c: &ComoduleCoaction) -> Result<Report> {
    let f = c.field();
    let co = c.coalgebra();
    let (im, ic) = (id(f, c.comodule()), id(f, co.space()));
    let rho = c.coaction();
    let mut r = Report::new("comodule");
    match c.side() {
        Side::Right => {
            r.identity("coassociativity", &rho.kron(&ic).compose(rho)?, &im.kron(co.comult()).compose(rho)?)?;
            r.identity("counit", &im.kron(co.counit()).compose(rho)?, &im)?;
        }
        Side::Left => {
            r.identity("coassociativity", &ic.kron(rho).compose(rho)?, &co.comult().kron(&im).compose(rho)?)?;
            r.identity("counit", &co.counit().kron(&im).compose(rho)?, &im)?;
        }
    }
    Ok(r)
}

fn require_right(c: &ComoduleCoaction) -> Result<()> {
    if c.side() != Side::Right {
        return Err(Error::InvalidArgument("expected a right coaction".into()));
    }
    Ok(())
}

/// `A` is a right `H`-comodule algebra: the coaction `A → A ⊗ H` is an algebra map.
pub fn check_comodule_algebra(a: &Algebra, coaction: &ComoduleCoaction, h: &Bialgebra) -> Result<Report> {
    require_right(coaction)?;
    let f = a.field();
    let (sa, sh) = (a.space(), h.space());
    let rho = coaction.coaction().reshape(sa, &sa.tensor(sh))?;
    let mut r = Report::new("comodule-algebra");
    r.absorb("comodule", check_comodule(coaction)?);
    let middle = id(f, sa).kron(&LinearMap::twist(f, sh, sa)).kron(&id(f, sh));
    let rhs = LinearMap::compose_all(&[&a.mult().kron(h.algebra().mult()), &middle, &rho.kron(&rho)])?;
    r.identity("coaction-multiplicative", &rho.compose(a.mult())?, &rhs)?;
    r.identity("coaction-unit", &rho.compose(a.unit())?, &a.unit().kron(h.algebra().unit()))?;
    Ok(r)
}

/// `C` is a right `H`-comodule coalgebra: `Δ_C` and `ε_C` are `H`-colinear.
pub fn check_comodule_coalgebra(c: &Coalgebra, coaction: &ComoduleCoaction, h: &Bialgebra) -> Result<Report> {
    require_right(coaction)?;
    let f = c.field();
    let (sc, sh) = (c.space(), h.space());
    let rho = coaction.coaction().reshape(sc, &sc.tensor(sh))?;
    let mut r = Report::new("comodule-coalgebra");
    r.absorb("comodule", check_comodule(coaction)?);
    let lhs = c.comult().kron(&id(f, sh)).compose(&rho)?;
    let swap = id(f, sc).kron(&LinearMap::twist(f, sh, sc)).kron(&id(f, sh));
    let mult = id(f, sc).kron(&id(f, sc)).kron(h.algebra().mult());
    let rhs = LinearMap::compose_all(&[&mult, &swap, &rho.kron(&rho), c.comult()])?;
    r.identity("comult-colinear", &lhs, &rhs)?;
    r.identity(
        "counit-colinear",
        &c.counit().kron(&id(f, sh)).compose(&rho)?,
        &h.algebra().unit().compose(c.counit())?,
    )?;
    Ok(r)
}

/// `B` is a right `H`-module algebra: `(bb')·h = (b·h₁)(b'·h₂)` and `1·h = ε(h)1`.
pub fn check_module_algebra(b: &Algebra, action: &ModuleAction, h: &Bialgebra) -> Result<Report> {
    let f = b.field();
    let (sb, sh) = (b.space(), h.space());
    let act = action.action().reshape(&sb.tensor(sh), sb)?;
    let mut r = Report::new("module-algebra");
    r.absorb("module", check_module(action)?);
    let lhs = act.compose(&b.mult().kron(&id(f, sh)))?;
    let split = id(f, sb).kron(&id(f, sb)).kron(h.coalgebra().comult());
    let swap = id(f, sb).kron(&LinearMap::twist(f, sb, sh)).kron(&id(f, sh));
    let rhs = LinearMap::compose_all(&[b.mult(), &act.kron(&act), &swap, &split])?;
    r.identity("action-multiplicative", &lhs, &rhs)?;
    r.identity(
        "action-unit",
        &act.compose(&b.unit().kron(&id(f, sh)))?,
        &b.unit().compose(h.coalgebra().counit())?,
    )?;
    Ok(r)
}

/// `D` is a right `H`-module coalgebra: `Δ(d·h) = d₁·h₁ ⊗ d₂·h₂` and `ε(d·h) = ε(d)ε(h)`.
pub fn check_module_coalgebra(d: &Coalgebra, action: &ModuleAction, h: &Bialgebra) -> Result<Report> {
    let f = d.field();
    let (sd, sh) = (d.space(), h.space());
    let act = action.action().reshape(&sd.tensor(sh), sd)?;
    let mut r = Report::new("module-coalgebra");
    r.absorb("module", check_module(action)?);
    let swap = id(f, sd).kron(&LinearMap::twist(f, sd, sh)).kron(&id(f, sh));
    let rhs = LinearMap::compose_all(&[&act.kron(&act), &swap, &d.comult().kron(h.coalgebra().comult())])?;
    r.identity("comult-multiplicative", &d.comult().compose(&act)?, &rhs)?;
    r.identity(
        "counit-multiplicative",
        &d.counit().compose(&act)?,
        &d.counit().kron(h.coalgebra().counit()),
    )?;
    Ok(r)
}

/// The dual coalgebra of a finite-dimensional algebra (dual basis, transposed structure constants).
pub fn dualize_algebra(a: &Algebra) -> Coalgebra {
    let dual = a.space().dual();
    Coalgebra::new(
        a.mult().transpose().reshape(&dual, &dual.tensor(&dual)).expect("shape"),
        a.unit().transpose().reshape(&dual, &Space::ground()).expect("shape"),
    )
    .expect("dual shapes")
}

/// The convolution algebra `C*`, `(f * g)(c) = f(c₁) g(c₂)`, unit `ε`.
pub fn convolution_algebra(c: &Coalgebra) -> Algebra {
    let dual = c.space().dual();
    Algebra::new(
        c.comult().transpose().reshape(&dual.tensor(&dual), &dual).expect("shape"),
        c.counit().transpose().reshape(&Space::ground(), &dual).expect("shape"),
    )
    .expect("dual shapes")
}

/// Checks that `x` is a group-like bilateral integral of `H`:
/// `a·x = x·a = ε(a)x`, `Δ(x) = x ⊗ x`, `ε(x) = 1`.
pub fn is_grouplike_bilateral_integral(h: &Bialgebra, x: &[Scalar]) -> Result<Report> {
    let f = h.field();
    let s = h.space();
    let xv = LinearMap::from_vector(f, s, x)?;
    let (a, c) = (h.algebra(), h.coalgebra());
    let i = id(f, s);
    let scaled = xv.compose(c.counit())?;
    let mut r = Report::new("grouplike-bilateral-integral");
    r.identity("a·x=ε(a)x", &a.mult().compose(&i.kron(&xv))?, &scaled)?;
    r.identity("x·a=ε(a)x", &a.mult().compose(&xv.kron(&i))?, &scaled)?;
    r.identity("Δ(x)=x⊗x", &c.comult().compose(&xv)?, &xv.kron(&xv))?;
    r.identity("ε(x)=1", &c.counit().compose(&xv)?, &id(f, &Space::ground()))?;
    Ok(r)
}

/// Leibniz rule `δ(ab) = δ(a)b + aδ(b)` and `δ(1) = 0`.
pub fn check_derivation(a: &Algebra, delta: &LinearMap) -> Result<Report> {
    let f = a.field();
    let s = a.space();
    let delta = delta.reshape(s, s)?;
    let i = id(f, s);
    let m = a.mult();
    let mut r = Report::new("derivation");
    let rhs = m.compose(&delta.kron(&i))?.add(&m.compose(&i.kron(&delta))?)?;
    r.identity("leibniz", &delta.compose(m)?, &rhs)?;
    r.vanishes("unit", &delta.compose(a.unit())?)?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn quadratic(p: i64) -> Algebra {
        let f = q();
        let s = Space::new(["1", "x"]).unwrap();
        Algebra::from_table(
            f,
            &s,
            |i, j| match i + j {
                2 => vec![(0, f.int(p))],
                k => vec![(k, f.one())],
            },
            &[f.one(), f.zero()],
        )
        .unwrap()
    }

    fn cubic() -> Algebra {
        let f = q();
        let s = Space::new(["1", "x", "x2"]).unwrap();
        Algebra::from_table(f, &s, |i, j| if i + j < 3 { vec![(i + j, f.one())] } else { vec![] }, &[f.one(), f.zero(), f.zero()])
            .unwrap()
    }

    fn z2_group() -> Bialgebra {
        Bialgebra::monoid(q(), &Space::new(["1", "g"]).unwrap(), |i, j| (i + j) % 2).unwrap()
    }

    fn absorbing_monoid() -> Bialgebra {
        Bialgebra::monoid(q(), &Space::new(["1", "z"]).unwrap(), |i, j| i.max(j)).unwrap()
    }

    #[test]
    fn ground_and_quadratic_algebras_pass() {
        assert!(check_algebra(&Algebra::ground(q())).unwrap().passed);
        for p in 0..=2 {
            assert!(check_algebra(&quadratic(p)).unwrap().passed, "p = {p}");
        }
    }

    #[test]
    fn tampered_unit_fails_with_witness() {
        let f = q();
        let s = Space::new(["1", "x"]).unwrap();
        // x·x = p·1 + x, and 1·x = 0 while 1 is still declared the unit
        let bad = Algebra::from_table(
            f,
            &s,
            |i, j| match (i, j) {
                (1, 1) => vec![(0, f.one()), (1, f.one())],
                (0, 0) => vec![(0, f.one())],
                _ => vec![],
            },
            &[f.one(), f.zero()],
        )
        .unwrap();
        let r = check_algebra(&bad).unwrap();
        assert!(!r.passed);
        let v = r.verdict("unit-left").unwrap();
        assert!(!v.passed);
        assert_eq!(v.witness.as_ref().unwrap().tuple, vec!["1", "x"]);
    }

    #[test]
    fn grouplike_coalgebra_and_monoid_bialgebra_pass() {
        let c = Coalgebra::grouplike(q(), &Space::new(["g0", "g1"]).unwrap());
        assert!(check_coalgebra(&c).unwrap().passed);
        let r = check_bialgebra(&absorbing_monoid()).unwrap();
        assert!(r.passed, "{r}");
        assert!(r.holds("counit-multiplicative"));
        assert!(check_bialgebra(&z2_group()).unwrap().passed);
    }

    #[test]
    fn regular_module_passes() {
        for a in [quadratic(0), quadratic(2), cubic()] {
            assert!(check_module(&ModuleAction::regular(&a)).unwrap().passed);
        }
    }

    #[test]
    fn broken_coassociativity_is_named() {
        let f = q();
        let s = Space::new(["a", "b"]).unwrap();
        let c = Coalgebra::from_table(f, &s, |i| vec![(i * 2 + i, f.one()), (1, f.one())], &[f.one(), f.one()]).unwrap();
        let r = check_coalgebra(&c).unwrap();
        assert!(!r.passed);
        assert!(r.failures().any(|v| v.name.starts_with("co")));
    }

    #[test]
    fn dual_of_ground_algebra() {
        let c = dualize_algebra(&Algebra::ground(q()));
        assert_eq!(c.comult().entry(0, 0), q().one());
        assert_eq!(c.counit().entry(0, 0), q().one());
        assert!(check_coalgebra(&c).unwrap().passed);
    }

    #[test]
    fn convolution_of_grouplike_is_function_algebra() {
        let c = Coalgebra::grouplike(q(), &Space::new(["g0", "g1"]).unwrap());
        let a = convolution_algebra(&c);
        for i in 0..2 {
            for j in 0..2 {
                let expected: Vec<Scalar> = (0..2).map(|k| q().int((i == j && k == i) as i64)).collect();
                assert_eq!(a.basis_product(i, j), expected);
            }
        }
        assert_eq!(a.unit_vector(), vec![q().one(), q().one()]);
        assert!(check_algebra(&a).unwrap().passed);
    }

    #[test]
    fn double_dual_round_trip() {
        let a = quadratic(1);
        let back = convolution_algebra(&dualize_algebra(&a));
        assert_eq!(back, a);
        let c = Coalgebra::grouplike(q(), &Space::new(["g0", "g1"]).unwrap());
        assert_eq!(dualize_algebra(&convolution_algebra(&c)), c);
    }

    #[test]
    fn integrals() {
        let f = q();
        let k = Bialgebra::new(Algebra::ground(f), dualize_algebra(&Algebra::ground(f))).unwrap();
        let k = Bialgebra::new(k.algebra().clone(), k.coalgebra().clone().clone()).unwrap();
        assert!(is_grouplike_bilateral_integral(&k, &[f.one()]).unwrap().passed);
        let r = is_grouplike_bilateral_integral(&absorbing_monoid(), &[f.zero(), f.one()]).unwrap();
        assert!(r.passed, "{r}");
        let r = is_grouplike_bilateral_integral(&z2_group(), &[f.zero(), f.one()]).unwrap();
        assert!(!r.passed);
        let v = r.verdict("a·x=ε(a)x").unwrap();
        // a = g: g·g = 1 but ε(g) g = g
        assert_eq!(v.witness.as_ref().unwrap().tuple[0], "g");
        assert!(is_grouplike_bilateral_integral(&z2_group(), &[f.one()]).is_err());
    }

    #[test]
    fn derivations() {
        let f = q();
        let a = cubic();
        let zero = LinearMap::zero(f, a.space(), a.space());
        assert!(check_derivation(&a, &zero).unwrap().passed);
        // δ(x) = x², hence δ(x²) = 2x·x² = 0
        let d = LinearMap::from_sparse_fn(f, a.space().clone(), a.space().clone(), |j| if j == 1 { vec![(2, f.one())] } else { vec![] });
        assert!(check_derivation(&a, &d).unwrap().passed);
        let a = quadratic(1);
        let d = LinearMap::from_sparse_fn(f, a.space().clone(), a.space().clone(), |j| if j == 1 { vec![(0, f.one())] } else { vec![] });
        let r = check_derivation(&a, &d).unwrap();
        assert!(!r.holds("leibniz"));
        let w = r.verdict("leibniz").unwrap().witness.clone().unwrap();
        // δ(x·x) = δ(1) = 0 but δ(x)x + xδ(x) = 2x
        assert_eq!(w.tuple, vec!["x", "x"]);
        assert_eq!(w.residual, vec![f.zero(), f.int(-2)]);
    }

    #[test]
    fn opposite_and_commutativity() {
        assert!(quadratic(2).is_commutative());
        let f = q();
        let s = Space::new(["e11", "e12", "e21", "e22"]).unwrap();
        let m2 = Algebra::from_table(
            f,
            &s,
            |a, b| {
                let (i, j, k, l) = (a / 2, a % 2, b / 2, b % 2);
                if j == k { vec![(2 * i + l, f.one())] } else { vec![] }
            },
            &[f.one(), f.zero(), f.zero(), f.one()],
        )
        .unwrap();
        assert!(!m2.is_commutative());
        assert!(check_algebra(&m2.opposite()).unwrap().passed);
        assert!(check_algebra(&m2.tensor(&quadratic(1))).unwrap().passed);
        assert!(check_algebra(&m2.square_zero_extension()).unwrap().passed);
    }

    #[test]
    fn comodule_and_module_algebra_checks() {
        let h = z2_group();
        let co = ComoduleCoaction::regular(h.coalgebra(), Side::Right);
        assert!(check_comodule(&co).unwrap().passed);
        assert!(check_comodule_algebra(h.algebra(), &co, &h).unwrap().passed);
        let left = ComoduleCoaction::regular(h.coalgebra(), Side::Left);
        assert!(check_comodule(&left).unwrap().passed);
        let f = q();
        let sign = ModuleAction::character(h.algebra(), &Space::ground(), &[f.one(), f.int(-1)]).unwrap();
        assert!(check_module(&sign).unwrap().passed);
        // the sign character does not respect products of the ground algebra
        assert!(!check_module_algebra(&Algebra::ground(f), &sign, &h).unwrap().passed);
        let trivial = ModuleAction::character(h.algebra(), &Space::ground(), &[f.one(), f.one()]).unwrap();
        assert!(check_module_algebra(&Algebra::ground(f), &trivial, &h).unwrap().passed);
    }
}
