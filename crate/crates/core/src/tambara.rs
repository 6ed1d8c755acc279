//! Generator actions induced by (co)semi-entwinings: the finite relations they satisfy,
//! the inverse reconstruction, and the (co)algebra refinements.
//!
//! For a semi-entwining `ψ: B ⊗ A → A ⊗ B` the generator `[a_i* ⊗ a_j]` acts on `B` by
//! `b ↦ (a_i* ⊗ id) ψ(b ⊗ a_j)`. For a cosemi-entwining `ψ: D ⊗ C → C ⊗ D` the same
//! formula defines the action of `[c_i* ⊗ c_j]` on `D`. Dual bases are the coordinate bases.

use crate::entwine::{check_cosemi_entwining, check_semi_entwining, require, Carrier, EntwiningData, Kind};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalar::{Field, Scalar};
use crate::structures::{Algebra, Coalgebra};
use crate::tensorlin::{LinearMap, Space};

/// Splits `ψ: B ⊗ A → A ⊗ B` into the `n²` maps `(a_i* ⊗ id) ψ(- ⊗ a_j)`, stored at `i·n + j`.
fn split_generators(psi: &LinearMap, carrier: &Space, base: &Space) -> Vec<LinearMap> {
    let f = psi.field();
    let (n, nb) = (base.dim(), carrier.dim());
    let mut cols: Vec<Vec<Vec<(usize, Scalar)>>> = vec![vec![Vec::new(); nb]; n * n];
    for b in 0..nb {
        for j in 0..n {
            for (row, v) in psi.sparse_column(b * n + j) {
                cols[(row / nb) * n + j][b].push((row % nb, v.clone()));
            }
        }
    }
    cols.into_iter()
        .map(|mut c| LinearMap::from_sparse_fn(f, carrier.clone(), carrier.clone(), |b| std::mem::take(&mut c[b])))
        .collect()
}

/// `ψ(b ⊗ a_j) = Σ_i a_i ⊗ ρ(i, j)(b)`.
fn assemble(rho: &[LinearMap], carrier: &Space, base: &Space, field: Field) -> LinearMap {
    let (n, nb) = (base.dim(), carrier.dim());
    LinearMap::from_sparse_fn(field, carrier.tensor(base), base.tensor(carrier), |c| {
        let (b, j) = (c / n, c % n);
        (0..n)
            .flat_map(|i| rho[i * n + j].sparse_column(b).iter().map(move |(r, v)| (i * nb + r, v.clone())))
            .collect()
    })
}

/// `Σ c · ρ(i, j)` over the given terms.
fn combine(rho: &[LinearMap], n: usize, carrier: &Space, field: Field, terms: &[(usize, usize, Scalar)]) -> LinearMap {
    terms.iter().fold(LinearMap::zero(field, carrier, carrier), |acc, (i, j, c)| {
        acc.add(&rho[i * n + j].scale(c)).expect("same carrier")
    })
}

/// Nonzero structure constants of a map into or out of `V ⊗ V`, as `(i, p, q, c)` with
/// `i` the simple-factor index and `(p, q)` the tensor index.
fn constants(map: &LinearMap, n: usize, tensor_is_domain: bool) -> Vec<(usize, usize, usize, Scalar)> {
    let mut out = Vec::new();
    for col in 0..map.cols() {
        for (row, c) in map.sparse_column(col) {
            let (i, t) = if tensor_is_domain { (*row, col) } else { (col, *row) };
            out.push((i, t / n, t % n, c.clone()));
        }
    }
    out
}

fn check_carrier(rho: &[LinearMap], carrier: &Space, n: usize) -> Result<()> {
    if rho.len() != n * n {
        return Err(Error::shape("generator count", n * n, rho.len()));
    }
    for m in rho {
        if m.rows() != carrier.dim() || m.cols() != carrier.dim() {
            return Err(Error::shape("generator action", carrier, m.domain()));
        }
    }
    Ok(())
}

/// The action of the generators `[a_i* ⊗ a_j]` on a space `B`, for an algebra `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorAction {
    base: Algebra,
    carrier: Carrier,
    rho: Vec<LinearMap>,
}

impl GeneratorAction {
    /// `rho[i·n + j]` is the action of `[a_i* ⊗ a_j]`.
    pub fn new(base: &Algebra, carrier: Carrier, rho: Vec<LinearMap>) -> Result<GeneratorAction> {
        check_carrier(&rho, carrier.space(), base.dim())?;
        let s = carrier.space().clone();
        let rho = rho.iter().map(|m| m.reshape(&s, &s)).collect::<Result<_>>()?;
        Ok(GeneratorAction {
            base: base.clone(),
            carrier,
            rho,
        })
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn generator(&self, i: usize, j: usize) -> &LinearMap {
        &self.rho[i * self.base.dim() + j]
    }

    pub fn generators(&self) -> &[LinearMap] {
        &self.rho
    }

    /// A copy with the action of `[a_i* ⊗ a_j]` replaced.
    pub fn with_generator(&self, i: usize, j: usize, map: LinearMap) -> Result<GeneratorAction> {
        let mut rho = self.rho.clone();
        rho[i * self.base.dim() + j] = map;
        GeneratorAction::new(&self.base, self.carrier.clone(), rho)
    }

    fn label(&self, i: usize, j: usize) -> String {
        let s = self.base.space();
        format!("{}*⊗{}", s.label(i), s.label(j))
    }
}

/// The generator action of any map `B ⊗ A → A ⊗ B` over an algebra `A`, without checking it.
pub fn generator_action(e: &EntwiningData) -> Result<GeneratorAction> {
    let a = e.right().need_algebra("right")?;
    let rho = split_generators(e.psi(), e.left().space(), a.space());
    GeneratorAction::new(a, e.left().clone(), rho)
}

/// `b[a* ⊗ a] = a*(a_α) b^α` for a semi-entwining `ψ(b ⊗ a) = a_α ⊗ b^α`.
pub fn action_from_semi(e: &EntwiningData) -> Result<GeneratorAction> {
    require("semi-entwining", check_semi_entwining(e)?)?;
    generator_action(e)
}

/// `ρ(a*, 1) = a*(1) id` and `ρ(a*, aa′) = Σ ρ(a*₂, a′) ∘ ρ(a*₁, a)`.
pub fn check_tambara_relations(g: &GeneratorAction) -> Result<Report> {
    let a = &g.base;
    let f = a.field();
    let n = a.dim();
    let s = g.carrier.space();
    let ib = LinearMap::identity(f, s);
    let unit = a.unit_vector();
    let mult = constants(a.mult(), n, true);
    let mut r = Report::new("tambara-relations");
    for i in 0..n {
        let terms: Vec<_> = (0..n).map(|j| (i, j, unit[j].clone())).collect();
        let lhs = combine(&g.rho, n, s, f, &terms);
        let name = format!("unit[{}*]", a.space().label(i));
        r.identity(name, &lhs, &ib.scale(&unit[i]))?;
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let terms: Vec<_> = a.basis_product(j, k).into_iter().enumerate().map(|(l, c)| (i, l, c)).collect();
                let lhs = combine(&g.rho, n, s, f, &terms);
                let mut rhs = LinearMap::zero(f, s, s);
                for (_, p, q, c) in mult.iter().filter(|t| t.0 == i) {
                    let step = g.generator(*q, k).compose(g.generator(*p, j))?.scale(c);
                    rhs = rhs.add(&step)?;
                }
                let name = format!("multiplicative[{}, {}]", g.label(i, j), a.space().label(k));
                r.identity(name, &lhs, &rhs)?;
            }
        }
    }
    Ok(r)
}

/// `ψ(b ⊗ a) = Σ_i a_i ⊗ b[a_i* ⊗ a]`, after checking the relations.
pub fn semi_from_action(g: &GeneratorAction) -> Result<EntwiningData> {
    require("tambara relations", check_tambara_relations(g)?)?;
    let a = &g.base;
    let psi = assemble(&g.rho, g.carrier.space(), a.space(), a.field());
    EntwiningData::new(g.carrier.clone(), Carrier::algebra(a), psi, Kind::Semi)
}

/// `(bb′)·h = Σ (b·h₁)(b′·h₂)` and `1·h = ε(h) 1` on the generators, for an algebra `B`.
pub fn check_module_algebra_refinement(g: &GeneratorAction) -> Result<Report> {
    let b = g.carrier.need_algebra("carrier")?;
    let a = &g.base;
    let f = a.field();
    let n = a.dim();
    let mut r = Report::new("module-algebra-refinement");
    for i in 0..n {
        for j in 0..n {
            let h = g.generator(i, j);
            let mut rhs = LinearMap::zero(f, &b.space().tensor(b.space()), b.space());
            for k in 0..n {
                rhs = rhs.add(&b.mult().compose(&g.generator(i, k).kron(g.generator(k, j)))?)?;
            }
            r.identity(format!("multiplicative[{}]", g.label(i, j)), &h.compose(b.mult())?, &rhs)?;
            let counit = if i == j { f.one() } else { f.zero() };
            r.identity(format!("unit[{}]", g.label(i, j)), &h.compose(b.unit())?, &b.unit().scale(&counit))?;
        }
    }
    Ok(r)
}

/// The action of the generators `[c_i* ⊗ c_j]` on a space `D`, for a coalgebra `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotambaraAction {
    base: Coalgebra,
    carrier: Carrier,
    rho: Vec<LinearMap>,
}

impl CotambaraAction {
    /// `rho[i·n + j]` is the action of `[c_i* ⊗ c_j]`.
    pub fn new(base: &Coalgebra, carrier: Carrier, rho: Vec<LinearMap>) -> Result<CotambaraAction> {
        check_carrier(&rho, carrier.space(), base.dim())?;
        let s = carrier.space().clone();
        let rho = rho.iter().map(|m| m.reshape(&s, &s)).collect::<Result<_>>()?;
        Ok(CotambaraAction {
            base: base.clone(),
            carrier,
            rho,
        })
    }

    pub fn base(&self) -> &Coalgebra {
        &self.base
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn generator(&self, i: usize, j: usize) -> &LinearMap {
        &self.rho[i * self.base.dim() + j]
    }

    pub fn generators(&self) -> &[LinearMap] {
        &self.rho
    }

    pub fn with_generator(&self, i: usize, j: usize, map: LinearMap) -> Result<CotambaraAction> {
        let mut rho = self.rho.clone();
        rho[i * self.base.dim() + j] = map;
        CotambaraAction::new(&self.base, self.carrier.clone(), rho)
    }

    fn label(&self, i: usize, j: usize) -> String {
        let s = self.base.space();
        format!("{}*⊗{}", s.label(i), s.label(j))
    }
}

/// The generator action of any map `D ⊗ C → C ⊗ D` over a coalgebra `C`, without checking it.
pub fn cotambara_generator_action(e: &EntwiningData) -> Result<CotambaraAction> {
    let c = e.right().need_coalgebra("right")?;
    let rho = split_generators(e.psi(), e.left().space(), c.space());
    CotambaraAction::new(c, e.left().clone(), rho)
}

/// `d[c* ⊗ c] = c*(c_α) d^α` for a cosemi-entwining `ψ(d ⊗ c) = c_α ⊗ d^α`.
pub fn cotambara_action(e: &EntwiningData) -> Result<CotambaraAction> {
    require("cosemi-entwining", check_cosemi_entwining(e)?)?;
    cotambara_generator_action(e)
}

/// `ρ(ε, c) = ε(c) id` and `ρ(c* ∗ d*, c) = Σ ρ(d*, c₂) ∘ ρ(c*, c₁)`.
pub fn check_cotambara_relations(g: &CotambaraAction) -> Result<Report> {
    let c = &g.base;
    let f = c.field();
    let n = c.dim();
    let s = g.carrier.space();
    let ib = LinearMap::identity(f, s);
    let counit = c.counit_values();
    let comult = constants(c.comult(), n, false);
    let mut r = Report::new("cotambara-relations");
    for j in 0..n {
        let terms: Vec<_> = (0..n).map(|i| (i, j, counit[i].clone())).collect();
        let lhs = combine(&g.rho, n, s, f, &terms);
        r.identity(format!("counit[{}]", c.space().label(j)), &lhs, &ib.scale(&counit[j]))?;
    }
    for p in 0..n {
        for q in 0..n {
            let product: Vec<_> = comult.iter().filter(|t| t.1 == p && t.2 == q).collect();
            for j in 0..n {
                let terms: Vec<_> = product.iter().map(|(l, _, _, x)| (*l, j, x.clone())).collect();
                let lhs = combine(&g.rho, n, s, f, &terms);
                let mut rhs = LinearMap::zero(f, s, s);
                for (_, s1, s2, x) in comult.iter().filter(|t| t.0 == j) {
                    rhs = rhs.add(&g.generator(q, *s2).compose(g.generator(p, *s1))?.scale(x))?;
                }
                let labels = c.space();
                let name = format!("convolution[{}*∗{}*, {}]", labels.label(p), labels.label(q), labels.label(j));
                r.identity(name, &lhs, &rhs)?;
            }
        }
    }
    Ok(r)
}

/// `ψ(d ⊗ c) = Σ_i c_i ⊗ d[c_i* ⊗ c]`, after checking the relations.
pub fn cosemi_from_action(g: &CotambaraAction) -> Result<EntwiningData> {
    require("cotambara relations", check_cotambara_relations(g)?)?;
    let c = &g.base;
    let psi = assemble(&g.rho, g.carrier.space(), c.space(), c.field());
    EntwiningData::new(g.carrier.clone(), Carrier::coalgebra(c), psi, Kind::Cosemi)
}

/// `Δ(d·h) = Σ_i d₁[c* ⊗ c_i] ⊗ d₂[c_i* ⊗ c]` and `ε(d·h) = ε(d) c*(c)`, for a coalgebra `D`.
pub fn check_module_coalgebra_refinement(g: &CotambaraAction) -> Result<Report> {
    let d = g.carrier.need_coalgebra("carrier")?;
    let c = &g.base;
    let f = c.field();
    let n = c.dim();
    let mut r = Report::new("module-coalgebra-refinement");
    for p in 0..n {
        for j in 0..n {
            let h = g.generator(p, j);
            let mut rhs = LinearMap::zero(f, d.space(), &d.space().tensor(d.space()));
            for i in 0..n {
                rhs = rhs.add(&g.generator(p, i).kron(g.generator(i, j)).compose(d.comult())?)?;
            }
            r.identity(format!("comultiplicative[{}]", g.label(p, j)), &d.comult().compose(h)?, &rhs)?;
            let value = if p == j { f.one() } else { f.zero() };
            r.identity(format!("counit[{}]", g.label(p, j)), &d.counit().compose(h)?, &d.counit().scale(&value))?;
        }
    }
    Ok(r)
}
