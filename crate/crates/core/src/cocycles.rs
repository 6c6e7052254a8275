//! Cycle-valued 2-cocycles on `Z^d` and the extensions they define.
//!
//! The extension law is `(v1,h1)(v2,h2) = (v1+v2, h1 + T_{v1} h2 + y(v1,v2))`, where
//! `T_v` translates a cycle by `v`. This is the law forced by concatenating lattice
//! paths, so the canonical cocycle built from the monomial paths `x1^m1 ... xd^md`
//! makes the map `(v, h) -> (v, h + flow(path to v))` an isomorphism onto the
//! metabelian group.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::homology::{algebraic_area, PlaquetteSum};
use crate::lattice::{evaluate_path, EdgeFlow};
use crate::point::Point;
use crate::words::{check_rank, check_same_rank, Letter, Sign, Word};

/// The monomial word `x1^m1 x2^m2 ... xd^md`.
pub fn canonical_path(m: &Point) -> Word {
    let rank = m.rank();
    let mut letters = Vec::new();
    for axis in 1..=rank {
        let c = m.coord(axis);
        let sign = if c < &BigInt::zero() { Sign::Neg } else { Sign::Pos };
        let mut n = num_traits::Signed::abs(c);
        while !n.is_zero() {
            letters.push(Letter::new(axis, sign));
            n -= 1;
        }
    }
    Word::from_letters(rank, letters).expect("monomial letters are in range")
}

/// Flow of the monomial path to `m`.
pub fn canonical_flow(m: &Point) -> EdgeFlow {
    evaluate_path(&canonical_path(m)).flow
}

/// `flow(w_{g1}) + T_{g1} flow(w_{g2}) - flow(w_{g1+g2})`: the loop that goes out along
/// the monomial path to `g1`, continues along the shifted monomial path to `g1+g2`
/// and returns along the monomial path to `g1+g2`.
pub fn canonical_cocycle(g1: &Point, g2: &Point) -> Result<EdgeFlow> {
    let sum = g1.checked_add(g2)?;
    canonical_flow(g1)
        .add(&canonical_flow(g2).translate(g1)?)?
        .sub(&canonical_flow(&sum))
}

/// A rule assigning a cycle to each pair of lattice vectors.
pub trait CocycleRule {
    fn rank(&self) -> usize;
    fn value(&self, g1: &Point, g2: &Point) -> Result<EdgeFlow>;
}

/// A finitely supported map `Z^d -> cycles`, vanishing at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Perturbation {
    rank: usize,
    values: BTreeMap<Point, EdgeFlow>,
}

impl Perturbation {
    pub fn new(rank: usize) -> Result<Self> {
        check_rank(rank)?;
        Ok(Perturbation {
            rank,
            values: BTreeMap::new(),
        })
    }

    /// Adds `cycle` to the value at `vertex`.
    pub fn insert(&mut self, vertex: Point, cycle: EdgeFlow) -> Result<()> {
        check_same_rank(self.rank, vertex.rank())?;
        check_same_rank(self.rank, cycle.rank())?;
        if !cycle.is_cycle() {
            return Err(Error::NonCycleValue {
                vertex: vertex.to_string(),
            });
        }
        if vertex.is_origin() && !cycle.is_empty() {
            return Err(Error::PerturbationAtOrigin);
        }
        let slot = self
            .values
            .entry(vertex.clone())
            .or_insert_with(|| EdgeFlow::zero(self.rank));
        *slot = slot.add(&cycle)?;
        if slot.is_empty() {
            self.values.remove(&vertex);
        }
        Ok(())
    }

    pub fn from_plaquette_sums<I: IntoIterator<Item = (Point, PlaquetteSum)>>(rank: usize, it: I) -> Result<Self> {
        let mut u = Perturbation::new(rank)?;
        for (v, s) in it {
            check_same_rank(rank, s.rank())?;
            u.insert(v, s.boundary_image())?;
        }
        Ok(u)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, at: &Point) -> EdgeFlow {
        self.values
            .get(at)
            .cloned()
            .unwrap_or_else(|| EdgeFlow::zero(self.rank))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, &EdgeFlow)> {
        self.values.iter()
    }
}

/// `u(g1) + T_{g1} u(g2) - u(g1+g2)`.
pub fn coboundary(u: &Perturbation, g1: &Point, g2: &Point) -> Result<EdgeFlow> {
    check_same_rank(u.rank(), g1.rank())?;
    let sum = g1.checked_add(g2)?;
    u.get(g1).add(&u.get(g2).translate(g1)?)?.sub(&u.get(&sum))
}

/// The cocycle rules provided by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cocycle {
    Canonical {
        rank: usize,
    },
    Scaled {
        rank: usize,
        factor: BigInt,
    },
    Perturbed {
        base: Box<Cocycle>,
        perturbation: Perturbation,
    },
}

impl Cocycle {
    pub fn canonical(rank: usize) -> Self {
        Cocycle::Canonical { rank }
    }

    pub fn scaled(rank: usize, factor: impl Into<BigInt>) -> Self {
        Cocycle::Scaled {
            rank,
            factor: factor.into(),
        }
    }

    pub fn perturbed(self, perturbation: Perturbation) -> Result<Self> {
        check_same_rank(self.rank(), perturbation.rank())?;
        Ok(Cocycle::Perturbed {
            base: Box::new(self),
            perturbation,
        })
    }
}

impl CocycleRule for Cocycle {
    fn rank(&self) -> usize {
        match self {
            Cocycle::Canonical { rank } | Cocycle::Scaled { rank, .. } => *rank,
            Cocycle::Perturbed { base, .. } => base.rank(),
        }
    }

    fn value(&self, g1: &Point, g2: &Point) -> Result<EdgeFlow> {
        check_same_rank(self.rank(), g1.rank())?;
        check_same_rank(self.rank(), g2.rank())?;
        match self {
            Cocycle::Canonical { .. } => canonical_cocycle(g1, g2),
            Cocycle::Scaled { factor, .. } => {
                if factor.is_one() {
                    canonical_cocycle(g1, g2)
                } else {
                    Ok(canonical_cocycle(g1, g2)?.scale(factor))
                }
            }
            Cocycle::Perturbed { base, perturbation } => base.value(g1, g2)?.add(&coboundary(perturbation, g1, g2)?),
        }
    }
}

impl<C: CocycleRule + ?Sized> CocycleRule for &C {
    fn rank(&self) -> usize {
        (**self).rank()
    }

    fn value(&self, g1: &Point, g2: &Point) -> Result<EdgeFlow> {
        (**self).value(g1, g2)
    }
}

/// `y(g1,g2) + y(g1+g2,g3) - y(g1,g2+g3) - T_{g1} y(g2,g3)` as a flow.
pub fn cocycle_defect<C: CocycleRule>(y: &C, g1: &Point, g2: &Point, g3: &Point) -> Result<EdgeFlow> {
    let g12 = g1.checked_add(g2)?;
    let g23 = g2.checked_add(g3)?;
    y.value(g1, g2)?
        .add(&y.value(&g12, g3)?)?
        .sub(&y.value(g1, &g23)?)?
        .sub(&y.value(g2, g3)?.translate(g1)?)
}

pub fn check_cocycle_identity<C: CocycleRule>(y: &C, g1: &Point, g2: &Point, g3: &Point) -> Result<bool> {
    Ok(cocycle_defect(y, g1, g2, g3)?.is_empty())
}

/// An element of the extension `Z^d x cycles` determined by some cocycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtElem {
    pub vec: Point,
    pub cycle: EdgeFlow,
}

impl ExtElem {
    pub fn identity(rank: usize) -> Self {
        ExtElem {
            vec: Point::origin(rank),
            cycle: EdgeFlow::zero(rank),
        }
    }

    pub fn of_vec(vec: Point) -> Self {
        let rank = vec.rank();
        ExtElem {
            vec,
            cycle: EdgeFlow::zero(rank),
        }
    }
}

pub fn ext_mul<C: CocycleRule>(y: &C, a: &ExtElem, b: &ExtElem) -> Result<ExtElem> {
    let vec = a.vec.checked_add(&b.vec)?;
    let cycle = a
        .cycle
        .add(&b.cycle.translate(&a.vec)?)?
        .add(&y.value(&a.vec, &b.vec)?)?;
    Ok(ExtElem { vec, cycle })
}

/// `(v,h)^-1 = (-v, -T_{-v}(h + y(v,-v)))`.
pub fn ext_inv<C: CocycleRule>(y: &C, a: &ExtElem) -> Result<ExtElem> {
    let neg = -&a.vec;
    let cycle = a.cycle.add(&y.value(&a.vec, &neg)?)?.translate(&neg)?.negate();
    Ok(ExtElem { vec: neg, cycle })
}

pub fn ext_commutator<C: CocycleRule>(y: &C, a: &ExtElem, b: &ExtElem) -> Result<ExtElem> {
    let ab = ext_mul(y, a, b)?;
    let aba = ext_mul(y, &ab, &ext_inv(y, a)?)?;
    ext_mul(y, &aba, &ext_inv(y, b)?)
}

/// The cycle part of the commutator `[(e1,0),(e2,0)]` in the extension of `y`.
pub fn commutator_defect<C: CocycleRule>(y: &C) -> Result<EdgeFlow> {
    check_same_rank(y.rank(), 2)?;
    let x = ExtElem::of_vec(Point::unit(2, 1));
    let z = ExtElem::of_vec(Point::unit(2, 2));
    let c = ext_commutator(y, &x, &z)?;
    debug_assert!(c.vec.is_origin());
    Ok(c.cycle)
}

/// Signed area of the commutator defect; constant on cohomology classes.
pub fn beta<C: CocycleRule>(y: &C) -> Result<BigInt> {
    algebraic_area(&commutator_defect(y)?)
}
