use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite-dimensional space with a labeled basis, possibly a tensor product of
/// other spaces.
///
/// Tensor products are stored flattened into their simple factors. The basis of
/// `V ⊗ W` is ordered row-major: `e_i ⊗ f_j` has index `i * dim(W) + j`.
#[derive(Clone, PartialEq, Eq)]
pub struct Space(Arc<Inner>);

#[derive(PartialEq, Eq)]
enum Inner {
    Simple { labels: Vec<String> },
    Tensor { factors: Vec<Space>, dim: usize },
}

impl Space {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Space> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidArgument("space must have positive dimension".into()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate basis label {l:?}")));
            }
        }
        Ok(Space(Arc::new(Inner::Simple { labels })))
    }

    /// A space with labels `prefix0, prefix1, ...`.
    pub fn numbered(prefix: &str, dim: usize) -> Result<Space> {
        Space::new((0..dim).map(|i| format!("{prefix}{i}")))
    }

    /// The one-dimensional ground space, basis `{1}`.
    pub fn ground() -> Space {
        Space::new(["1"]).expect("valid labels")
    }

    pub fn tensor(&self, other: &Space) -> Space {
        Space::tensor_all([self, other])
    }

    pub fn tensor_all<'a>(spaces: impl IntoIterator<Item = &'a Space>) -> Space {
        let factors: Vec<Space> = spaces.into_iter().flat_map(|s| s.factors()).collect();
        if factors.len() == 1 {
            return factors.into_iter().next().unwrap();
        }
        let dim = factors.iter().map(Space::dim).product();
        Space(Arc::new(Inner::Tensor { factors, dim }))
    }

    /// `self ⊕ other`, labels `l⊕0` and `0⊕l`.
    pub fn direct_sum(&self, other: &Space) -> Space {
        let labels = (0..self.dim())
            .map(|i| format!("{}⊕0", self.label(i)))
            .chain((0..other.dim()).map(|i| format!("0⊕{}", other.label(i))));
        Space::new(labels).expect("summand labels are distinct")
    }

    /// The dual space, labelled by the dual basis. Dualizing twice restores the labels.
    pub fn dual(&self) -> Space {
        match &*self.0 {
            Inner::Simple { labels } => Space::new(labels.iter().map(|l| match l.strip_suffix('*') {
                Some(base) => base.to_string(),
                None => format!("{l}*"),
            }))
            .expect("dual labels are distinct"),
            Inner::Tensor { factors, .. } => {
                Space::tensor_all(factors.iter().map(Space::dual).collect::<Vec<_>>().iter())
            }
        }
    }

    pub fn dim(&self) -> usize {
        match &*self.0 {
            Inner::Simple { labels } => labels.len(),
            Inner::Tensor { dim, .. } => *dim,
        }
    }

    /// The simple factors; a simple space is its own only factor.
    pub fn factors(&self) -> Vec<Space> {
        match &*self.0 {
            Inner::Simple { .. } => vec![self.clone()],
            Inner::Tensor { factors, .. } => factors.clone(),
        }
    }

    pub fn is_tensor(&self) -> bool {
        matches!(&*self.0, Inner::Tensor { .. })
    }

    /// Factor dimensions with one-dimensional factors dropped, so `K ⊗ V` and `V` agree.
    pub fn shape(&self) -> Vec<usize> {
        self.factors().iter().map(Space::dim).filter(|&d| d != 1).collect()
    }

    /// Splits a basis index into per-factor indices.
    pub fn split_index(&self, mut index: usize) -> Vec<usize> {
        let factors = self.factors();
        let mut out = vec![0; factors.len()];
        for (slot, f) in out.iter_mut().zip(&factors).rev() {
            *slot = index % f.dim();
            index /= f.dim();
        }
        out
    }

    pub fn flatten_index(&self, indices: &[usize]) -> usize {
        self.factors()
            .iter()
            .zip(indices)
            .fold(0, |acc, (f, &i)| acc * f.dim() + i)
    }

    /// Labels of the simple factors of basis element `index`.
    pub fn tuple(&self, index: usize) -> Vec<String> {
        match &*self.0 {
            Inner::Simple { labels } => vec![labels[index].clone()],
            Inner::Tensor { factors, .. } => self
                .split_index(index)
                .into_iter()
                .zip(factors)
                .map(|(i, f)| f.label(i))
                .collect(),
        }
    }

    pub fn label(&self, index: usize) -> String {
        self.tuple(index).join("⊗")
    }

    /// Labels of a simple space; for tensors, the joined labels of every basis element.
    pub fn labels(&self) -> Vec<String> {
        match &*self.0 {
            Inner::Simple { labels } => labels.clone(),
            Inner::Tensor { .. } => (0..self.dim()).map(|i| self.label(i)).collect(),
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        match &*self.0 {
            Inner::Simple { labels } => labels.iter().position(|l| l == label),
            Inner::Tensor { .. } => (0..self.dim()).find(|&i| self.label(i) == label),
        }
    }
}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Inner::Simple { labels } => write!(f, "Space{labels:?}"),
            Inner::Tensor { factors, .. } => {
                let parts: Vec<String> = factors.iter().map(|s| format!("{s:?}")).collect();
                write!(f, "{}", parts.join("⊗"))
            }
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.factors().iter().map(|s| s.dim().to_string()).collect();
        write!(f, "[{}]", dims.join("⊗"))
    }
}
