//! Small structures built in code for unit tests.

use crate::scalar::Field;
use crate::structures::{Algebra, Bialgebra, Coalgebra, ComoduleCoaction, ModuleAction, Side};
use crate::tensorlin::{LinearMap, Space};

pub fn quadratic(f: Field, p: i64) -> Algebra {
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

pub fn cubic(f: Field) -> Algebra {
    let s = Space::new(["1", "x", "x2"]).unwrap();
    Algebra::from_table(
        f,
        &s,
        |i, j| if i + j < 3 { vec![(i + j, f.one())] } else { vec![] },
        &[f.one(), f.zero(), f.zero()],
    )
    .unwrap()
}

pub fn m2(f: Field) -> Algebra {
    let s = Space::new(["e11", "e12", "e21", "e22"]).unwrap();
    Algebra::from_table(
        f,
        &s,
        |a, b| {
            let (i, j, k, l) = (a / 2, a % 2, b / 2, b % 2);
            if j == k {
                vec![(2 * i + l, f.one())]
            } else {
                vec![]
            }
        },
        &[f.one(), f.zero(), f.zero(), f.one()],
    )
    .unwrap()
}

pub fn all_algebras(f: Field) -> Vec<(&'static str, Algebra)> {
    vec![
        ("K", Algebra::ground(f)),
        ("Kx2-0", quadratic(f, 0)),
        ("Kx2-1", quadratic(f, 1)),
        ("Kx2-2", quadratic(f, 2)),
        ("Kx3", cubic(f)),
        ("M2", m2(f)),
    ]
}

pub fn z2(f: Field) -> Bialgebra {
    Bialgebra::monoid(f, &Space::new(["1", "g"]).unwrap(), |i, j| (i + j) % 2).unwrap()
}

pub fn absorbing(f: Field) -> Bialgebra {
    Bialgebra::monoid(f, &Space::new(["1", "z"]).unwrap(), |i, j| i.max(j)).unwrap()
}

pub fn grouplike2(f: Field) -> Coalgebra {
    Coalgebra::grouplike(f, &Space::new(["g0", "g1"]).unwrap())
}

/// The dual of `K[x]/(x²)`: `Δe0 = e0⊗e0`, `Δe1 = e0⊗e1 + e1⊗e0`.
pub fn dual_numbers(f: Field) -> Coalgebra {
    let s = Space::new(["e0", "e1"]).unwrap();
    Coalgebra::from_table(
        f,
        &s,
        |i| match i {
            0 => vec![(0, f.one())],
            _ => vec![(1, f.one()), (2, f.one())],
        },
        &[f.one(), f.zero()],
    )
    .unwrap()
}

/// The `Z/2`-grading `e0 ↦ e0⊗1`, `e1 ↦ e1⊗g` of the dual numbers.
pub fn grading(f: Field) -> ComoduleCoaction {
    let c = dual_numbers(f);
    let h = z2(f);
    let map = LinearMap::from_sparse_fn(f, c.space().clone(), c.space().tensor(h.space()), |i| vec![(i * 2 + i, f.one())]);
    ComoduleCoaction::new(h.coalgebra().clone(), map, Side::Right).unwrap()
}

/// `K` with `g` acting as `-1`.
pub fn sign(f: Field) -> ModuleAction {
    let h = z2(f);
    ModuleAction::character(h.algebra(), &Space::new(["s"]).unwrap(), &[f.one(), f.int(-1)]).unwrap()
}

pub fn trivial(f: Field) -> ModuleAction {
    let h = z2(f);
    ModuleAction::character(h.algebra(), &Space::new(["t"]).unwrap(), &[f.one(), f.one()]).unwrap()
}
