use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::tensorlin::Space;

type Column = Vec<(usize, Scalar)>;

/// A linear map between labeled spaces.
///
/// Matrix semantics are dense (`codomain.dim() x domain.dim()`, column `j` is the
/// image of the `j`-th domain basis vector); storage keeps only the nonzero
/// entries of each column, sorted by row.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    domain: Space,
    codomain: Space,
    field: Field,
    cols: Vec<Column>,
}

fn normalize(mut entries: Vec<(usize, Scalar)>) -> Column {
    entries.sort_by_key(|(r, _)| *r);
    let mut out: Column = Vec::with_capacity(entries.len());
    for (r, v) in entries {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => *lv = &*lv + &v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

impl LinearMap {
    /// Builds a map from a function returning the (sparse) image of each domain basis vector.
    /// Repeated rows are summed.
    pub fn from_sparse_fn(
        field: Field,
        domain: Space,
        codomain: Space,
        mut column: impl FnMut(usize) -> Vec<(usize, Scalar)>,
    ) -> LinearMap {
        let cols = (0..domain.dim())
            .map(|j| {
                let col = normalize(column(j));
                debug_assert!(col.iter().all(|(r, _)| *r < codomain.dim()));
                col
            })
            .collect();
        LinearMap {
            domain,
            codomain,
            field,
            cols,
        }
    }

    /// Builds a map from a function returning the dense image of each domain basis vector.
    pub fn from_fn(
        field: Field,
        domain: Space,
        codomain: Space,
        mut column: impl FnMut(usize) -> Vec<Scalar>,
    ) -> LinearMap {
        let cod = codomain.dim();
        LinearMap::from_sparse_fn(field, domain, codomain, |j| {
            let col = column(j);
            assert_eq!(col.len(), cod, "column length must equal codomain dimension");
            col.into_iter().enumerate().collect()
        })
    }

    /// Builds a map from dense rows (`codomain.dim()` rows of `domain.dim()` entries).
    pub fn from_rows(field: Field, domain: Space, codomain: Space, rows: Vec<Vec<Scalar>>) -> Result<LinearMap> {
        if rows.len() != codomain.dim() || rows.iter().any(|r| r.len() != domain.dim()) {
            let found = format!(
                "{}x{}",
                rows.len(),
                rows.first().map_or(0, Vec::len)
            );
            return Err(Error::shape(
                "matrix rows",
                format!("{}x{}", codomain.dim(), domain.dim()),
                found,
            ));
        }
        if let Some(bad) = rows.iter().flatten().find(|s| s.field() != field) {
            return Err(Error::InvalidField(format!("entry {bad} is not in {field}")));
        }
        let mut cols = vec![Vec::new(); domain.dim()];
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    cols[j].push((i, v));
                }
            }
        }
        Ok(LinearMap {
            domain,
            codomain,
            field,
            cols,
        })
    }

    pub fn identity(field: Field, space: &Space) -> LinearMap {
        LinearMap::from_sparse_fn(field, space.clone(), space.clone(), |j| vec![(j, field.one())])
    }

    pub fn zero(field: Field, domain: &Space, codomain: &Space) -> LinearMap {
        LinearMap::from_sparse_fn(field, domain.clone(), codomain.clone(), |_| Vec::new())
    }

    /// A map with entries drawn uniformly from `{-1, 0, 1}`.
    pub fn random_ternary(field: Field, domain: &Space, codomain: &Space, rng: &mut impl Rng) -> LinearMap {
        LinearMap::from_sparse_fn(field, domain.clone(), codomain.clone(), |_| {
            (0..codomain.dim())
                .map(|i| (i, field.int(rng.gen_range(-1..=1))))
                .collect()
        })
    }

    /// The swap `v ⊗ w ↦ w ⊗ v`.
    pub fn twist(field: Field, v: &Space, w: &Space) -> LinearMap {
        let (dv, dw) = (v.dim(), w.dim());
        LinearMap::from_sparse_fn(field, v.tensor(w), w.tensor(v), |col| {
            let (i, j) = (col / dw, col % dw);
            vec![(j * dv + i, field.one())]
        })
    }

    /// The map `K → V` sending `1` to `vector`.
    pub fn from_vector(field: Field, space: &Space, vector: &[Scalar]) -> Result<LinearMap> {
        if vector.len() != space.dim() {
            return Err(Error::shape("vector", space.dim(), vector.len()));
        }
        Ok(LinearMap::from_fn(field, Space::ground(), space.clone(), |_| vector.to_vec()))
    }

    /// The map `V → K` with the given values on the basis.
    pub fn from_covector(field: Field, space: &Space, values: &[Scalar]) -> Result<LinearMap> {
        if values.len() != space.dim() {
            return Err(Error::shape("covector", space.dim(), values.len()));
        }
        Ok(LinearMap::from_fn(field, space.clone(), Space::ground(), |j| vec![values[j].clone()]))
    }

    pub fn domain(&self) -> &Space {
        &self.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.codomain.dim()
    }

    pub fn cols(&self) -> usize {
        self.domain.dim()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        self.cols[col]
            .binary_search_by_key(&row, |(r, _)| *r)
            .map(|k| self.cols[col][k].1.clone())
            .unwrap_or_else(|_| self.field.zero())
    }

    pub fn column(&self, col: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.rows()];
        for (r, v) in &self.cols[col] {
            out[*r] = v.clone();
        }
        out
    }

    pub fn sparse_column(&self, col: usize) -> &[(usize, Scalar)] {
        &self.cols[col]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![self.field.zero(); self.cols()]; self.rows()];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                rows[*i][j] = v.clone();
            }
        }
        rows
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if inner.codomain.dim() != self.domain.dim() || inner.codomain.shape() != self.domain.shape() {
            return Err(Error::shape("composition", &self.domain, &inner.codomain));
        }
        let cols = inner
            .cols
            .iter()
            .map(|col| {
                let mut acc = Vec::new();
                for (k, v) in col {
                    for (i, w) in &self.cols[*k] {
                        acc.push((*i, w * v));
                    }
                }
                normalize(acc)
            })
            .collect();
        Ok(LinearMap {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            field: self.field,
            cols,
        })
    }

    /// Composes a chain of maps, applied right to left: `chain[0] ∘ chain[1] ∘ ...`.
    pub fn compose_all(chain: &[&LinearMap]) -> Result<LinearMap> {
        let (last, rest) = chain
            .split_last()
            .ok_or_else(|| Error::InvalidArgument("empty composition".into()))?;
        rest.iter()
            .rev()
            .try_fold((*last).clone(), |acc, m| m.compose(&acc))
    }

    /// Kronecker product `f ⊗ g` under the row-major basis contract.
    pub fn kron(&self, other: &LinearMap) -> LinearMap {
        let dom = self.domain.tensor(&other.domain);
        let cod = self.codomain.tensor(&other.codomain);
        let (gd, gc) = (other.cols(), other.rows());
        let cols = (0..dom.dim())
            .map(|j| {
                let (j1, j2) = (j / gd, j % gd);
                let mut col = Vec::with_capacity(self.cols[j1].len() * other.cols[j2].len());
                for (i1, a) in &self.cols[j1] {
                    for (i2, b) in &other.cols[j2] {
                        col.push((i1 * gc + i2, a * b));
                    }
                }
                col
            })
            .collect();
        LinearMap {
            domain: dom,
            codomain: cod,
            field: self.field,
            cols,
        }
    }

    pub fn kron_all(maps: &[&LinearMap]) -> Result<LinearMap> {
        let (first, rest) = maps
            .split_first()
            .ok_or_else(|| Error::InvalidArgument("empty tensor product".into()))?;
        Ok(rest.iter().fold((*first).clone(), |acc, m| acc.kron(m)))
    }

    fn check_same_dims(&self, other: &LinearMap, context: &str) -> Result<()> {
        if self.rows() != other.rows() || self.cols() != other.cols() {
            return Err(Error::shape(
                context,
                format!("{}x{}", self.rows(), self.cols()),
                format!("{}x{}", other.rows(), other.cols()),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_same_dims(other, "sum")?;
        Ok(self.zip_cols(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_same_dims(other, "difference")?;
        Ok(self.zip_cols(other, |a, b| a - b))
    }

    fn zip_cols(&self, other: &LinearMap, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> LinearMap {
        let zero = self.field.zero();
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut out = Vec::new();
                let (mut x, mut y) = (0, 0);
                while x < a.len() || y < b.len() {
                    let ra = a.get(x).map_or(usize::MAX, |e| e.0);
                    let rb = b.get(y).map_or(usize::MAX, |e| e.0);
                    let (r, v) = if ra == rb {
                        x += 1;
                        y += 1;
                        (ra, op(&a[x - 1].1, &b[y - 1].1))
                    } else if ra < rb {
                        x += 1;
                        (ra, op(&a[x - 1].1, &zero))
                    } else {
                        y += 1;
                        (rb, op(&zero, &b[y - 1].1))
                    };
                    if !v.is_zero() {
                        out.push((r, v));
                    }
                }
                out
            })
            .collect();
        LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            field: self.field,
            cols,
        }
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|(r, v)| (*r, v * s)).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            field: self.field,
            cols,
        }
    }

    pub fn neg(&self) -> LinearMap {
        self.scale(&-self.field.one())
    }

    /// The transpose, as a map between dual spaces `cod* → dom*`.
    pub fn transpose(&self) -> LinearMap {
        let mut cols = vec![Vec::new(); self.rows()];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                cols[*i].push((j, v.clone()));
            }
        }
        LinearMap {
            domain: self.codomain.dual(),
            codomain: self.domain.dual(),
            field: self.field,
            cols,
        }
    }

    /// The same matrix between other spaces of equal dimension.
    pub fn reshape(&self, domain: &Space, codomain: &Space) -> Result<LinearMap> {
        if domain.dim() != self.cols() || codomain.dim() != self.rows() {
            return Err(Error::shape(
                "reshape",
                format!("{}x{}", self.rows(), self.cols()),
                format!("{}x{}", codomain.dim(), domain.dim()),
            ));
        }
        Ok(LinearMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            field: self.field,
            cols: self.cols.clone(),
        })
    }

    pub fn apply(&self, vector: &[Scalar]) -> Result<Vec<Scalar>> {
        if vector.len() != self.cols() {
            return Err(Error::shape("apply", self.cols(), vector.len()));
        }
        let mut out = vec![self.field.zero(); self.rows()];
        for (j, x) in vector.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, v) in &self.cols[j] {
                out[*i] = &out[*i] + &(v * x);
            }
        }
        Ok(out)
    }

    /// Replaces one entry; used to build corrupted fixtures.
    pub fn with_entry(&self, row: usize, col: usize, value: Scalar) -> LinearMap {
        let mut out = self.clone();
        let c = &mut out.cols[col];
        c.retain(|(r, _)| *r != row);
        c.push((row, value));
        *c = normalize(std::mem::take(c));
        out
    }

    /// First domain basis index (lexicographic order) where the two maps differ,
    /// with the residual column `self - other`.
    pub fn first_difference(&self, other: &LinearMap) -> Result<Option<(usize, Vec<Scalar>)>> {
        self.check_same_dims(other, "comparison")?;
        for j in 0..self.cols() {
            if self.cols[j] != other.cols[j] {
                let residual = self
                    .column(j)
                    .iter()
                    .zip(other.column(j))
                    .map(|(a, b)| a - &b)
                    .collect();
                return Ok(Some((j, residual)));
            }
        }
        Ok(None)
    }

    /// Exact determinant by Gaussian elimination.
    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        let n = self.rows();
        let mut m = self.to_rows();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det = &det * &m[c][c];
            let inv = m[c][c].inverse().expect("pivot is nonzero");
            for r in c + 1..n {
                if m[r][c].is_zero() {
                    continue;
                }
                let factor = &m[r][c] * &inv;
                for k in c..n {
                    let delta = &factor * &m[c][k];
                    m[r][k] = &m[r][k] - &delta;
                }
            }
        }
        Ok(det)
    }

    pub fn is_invertible(&self) -> Result<bool> {
        Ok(!self.determinant()?.is_zero())
    }

    /// `S₁₃ = (id_V ⊗ τ_{V″,V′}) ∘ (S ⊗ id_{V′}) ∘ (id_V ⊗ τ_{V′,V″})` for an endomorphism `S`
    /// of a two-factor space `V ⊗ V″`.
    pub fn embed13(&self, middle: &Space) -> Result<LinearMap> {
        let factors = self.domain.factors();
        if factors.len() != 2 {
            return Err(Error::shape("embed13 domain factors", 2, factors.len()));
        }
        self.embed13_split(&factors[0], &factors[1], middle)
    }

    /// [`embed13`](Self::embed13) with the outer factors named explicitly, for when
    /// `V` or `V″` are themselves tensor products.
    pub fn embed13_split(&self, first: &Space, last: &Space, middle: &Space) -> Result<LinearMap> {
        let outer = first.tensor(last);
        if self.cols() != outer.dim() || self.rows() != outer.dim() {
            return Err(Error::shape("embed13 operand", &outer, &self.domain));
        }
        let s = self.reshape(&outer, &outer)?;
        let f = self.field;
        let id_first = LinearMap::identity(f, first);
        let pre = id_first.kron(&LinearMap::twist(f, middle, last));
        let mid = s.kron(&LinearMap::identity(f, middle));
        let post = id_first.kron(&LinearMap::twist(f, last, middle));
        LinearMap::compose_all(&[&post, &mid, &pre])
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap {} -> {}", self.domain, self.codomain)?;
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn sp(n: usize) -> Space {
        Space::numbered("e", n).unwrap()
    }

    fn mat(rows: &[&[i64]], dom: &Space, cod: &Space) -> LinearMap {
        let rows = rows.iter().map(|r| r.iter().map(|&x| q().int(x)).collect()).collect();
        LinearMap::from_rows(q(), dom.clone(), cod.clone(), rows).unwrap()
    }

    fn basis(n: usize, i: usize) -> Vec<Scalar> {
        (0..n).map(|k| q().int((k == i) as i64)).collect()
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let k = LinearMap::identity(q(), &sp(2)).kron(&LinearMap::identity(q(), &sp(3)));
        assert_eq!(k, LinearMap::identity(q(), &sp(2).tensor(&sp(3))));
    }

    #[test]
    fn kron_acts_on_pure_tensors() {
        let v = sp(2);
        let f = mat(&[&[1, -2], &[3, 0]], &v, &v);
        let g = mat(&[&[0, 5], &[-1, 1]], &v, &v);
        let fg = f.kron(&g);
        for i in 0..2 {
            for j in 0..2 {
                let x = fg.column(i * 2 + j);
                let (fi, gj) = (f.column(i), g.column(j));
                // expand e_i⊗f_j ↦ f(e_i)⊗g(f_j) entrywise
                let expected: Vec<Scalar> =
                    (0..4).map(|r| &fi[r / 2] * &gj[r % 2]).collect();
                assert_eq!(x, expected);
            }
        }
    }

    #[test]
    fn twist_on_two_dims_swaps_middle_indices() {
        let t = LinearMap::twist(q(), &sp(2), &sp(2));
        let expected = mat(
            &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]],
            &sp(2).tensor(&sp(2)),
            &sp(2).tensor(&sp(2)),
        );
        assert_eq!(t, expected);
        let one = LinearMap::twist(q(), &sp(1), &sp(1));
        assert_eq!(one, LinearMap::identity(q(), &sp(1).tensor(&sp(1))));
    }

    #[test]
    fn twist_is_an_involution() {
        let (v, w) = (sp(2), Space::numbered("f", 3).unwrap());
        let back = LinearMap::twist(q(), &w, &v)
            .compose(&LinearMap::twist(q(), &v, &w))
            .unwrap();
        assert_eq!(back, LinearMap::identity(q(), &v.tensor(&w)));
    }

    #[test]
    fn cyclic_permutation_of_three_legs() {
        let v = sp(3);
        let id = LinearMap::identity(q(), &v);
        let t = LinearMap::twist(q(), &v, &v);
        let p = t.kron(&id).compose(&id.kron(&t)).unwrap();
        let vvv = Space::tensor_all([&v, &v, &v]);
        let input = vvv.flatten_index(&[0, 1, 2]);
        let output = vvv.flatten_index(&[2, 0, 1]);
        assert_eq!(p.column(input), basis(27, output));
    }

    #[test]
    fn embed13_of_identity_is_identity() {
        let s = LinearMap::identity(q(), &sp(2).tensor(&sp(3)));
        let e = s.embed13(&sp(2)).unwrap();
        assert_eq!(e, LinearMap::identity(q(), &Space::tensor_all([&sp(2), &sp(2), &sp(3)])));
    }

    #[test]
    fn embed13_of_twist_swaps_outer_legs() {
        let v = sp(2);
        let t = LinearMap::twist(q(), &v, &v);
        for middle_dim in [1, 2] {
            let mid = Space::numbered("m", middle_dim).unwrap();
            let e = t.embed13(&mid).unwrap();
            let s = Space::tensor_all([&v, &mid, &v]);
            for i in 0..2 {
                for j in 0..middle_dim {
                    for k in 0..2 {
                        let col = e.column(s.flatten_index(&[i, j, k]));
                        assert_eq!(col, basis(s.dim(), s.flatten_index(&[k, j, i])));
                    }
                }
            }
        }
    }

    #[test]
    fn embed13_rejects_non_two_factor_domain() {
        let s = LinearMap::identity(q(), &sp(4));
        assert!(s.embed13(&sp(2)).is_err());
    }

    #[test]
    fn invertibility() {
        assert!(LinearMap::identity(q(), &sp(3)).is_invertible().unwrap());
        assert!(!LinearMap::zero(q(), &sp(2), &sp(2)).is_invertible().unwrap());
        assert!(LinearMap::zero(q(), &sp(2), &sp(3)).is_invertible().is_err());
    }

    #[test]
    fn determinant_by_cofactors() {
        let v = sp(3);
        let m = mat(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]], &v, &v);
        // 2(3-2) - 0 + 1(1-3) = 0
        assert!(m.determinant().unwrap().is_zero());
        let m = mat(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]], &v, &v);
        // 2(6-2) - 0 + 1(1-3) = 6
        assert_eq!(m.determinant().unwrap(), q().int(6));
    }

    #[test]
    fn composition_checks_shapes() {
        let a = LinearMap::identity(q(), &sp(2));
        let b = LinearMap::identity(q(), &sp(3));
        assert!(a.compose(&b).is_err());
        let k2 = sp(2).tensor(&sp(2));
        let k4 = LinearMap::identity(q(), &sp(4));
        assert!(k4.compose(&LinearMap::identity(q(), &k2)).is_err());
        let ground = LinearMap::identity(q(), &Space::ground().tensor(&sp(2)));
        assert!(a.compose(&ground).is_ok());
    }

    #[test]
    fn first_difference_reports_lexicographic_first_column() {
        let v = sp(2);
        let a = LinearMap::identity(q(), &v);
        let b = a.with_entry(0, 1, q().int(3));
        let (col, residual) = a.first_difference(&b).unwrap().unwrap();
        assert_eq!(col, 1);
        assert_eq!(residual, vec![q().int(-3), q().zero()]);
        assert!(a.first_difference(&a).unwrap().is_none());
    }

    #[test]
    fn transpose_dualizes_spaces() {
        let v = Space::new(["1", "x"]).unwrap();
        let m = mat(&[&[1, 2], &[3, 4]], &v, &v);
        let t = m.transpose();
        assert_eq!(t.entry(0, 1), q().int(3));
        assert_eq!(t.domain().labels(), vec!["1*", "x*"]);
        assert_eq!(t.transpose(), m);
    }
}
