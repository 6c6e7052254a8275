//! The satellite groups `Met_k(2)`: extensions of the planar cycle group by `Z^2`
//! with cocycle `k * c`, generated by `x = (e1, 0)`, `y = (e2, 0)` and the unit
//! plaquette `z`. They satisfy `[x, y] = z^k` and conjugates of `z` commute;
//! `k = 1` is the free metabelian group on two generators and `k = 0` is split.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cocycles::{ext_inv, ext_mul, Cocycle, ExtElem};
use crate::error::{Error, Result};
use crate::homology::{algebraic_area, decompose_cycle_2d, Plaquette};
use crate::lattice::EdgeFlow;
use crate::point::Point;
use crate::words::tokenize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SatelliteElem {
    pub k: i64,
    pub vec: Point,
    pub cycle: EdgeFlow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SatGenerator {
    X,
    Y,
    Z,
}

impl std::str::FromStr for SatGenerator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" => Ok(SatGenerator::X),
            "y" => Ok(SatGenerator::Y),
            "z" => Ok(SatGenerator::Z),
            other => Err(Error::UnknownGenerator(other.to_string())),
        }
    }
}

/// Subgroups with a membership test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subgroup {
    /// Normal closure of `z`: elements with zero vector part.
    N,
    /// Normal closure of `z^k`: cycles with every plaquette coefficient in `kZ`.
    M,
    /// The commutant: cycles whose signed area lies in `kZ`.
    Commutant,
}

impl std::str::FromStr for Subgroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "N" | "n" => Ok(Subgroup::N),
            "M" | "m" => Ok(Subgroup::M),
            "commutant" => Ok(Subgroup::Commutant),
            other => Err(Error::Syntax {
                token: other.to_string(),
                reason: "expected N, M or commutant".into(),
            }),
        }
    }
}

fn divisible(value: &BigInt, k: i64) -> bool {
    if k == 0 {
        value.is_zero()
    } else {
        (value % BigInt::from(k)).is_zero()
    }
}

impl SatelliteElem {
    pub fn identity(k: i64) -> Self {
        SatelliteElem {
            k,
            vec: Point::origin(2),
            cycle: EdgeFlow::zero(2),
        }
    }

    /// `(v, h)` with `h` a planar cycle.
    pub fn new(k: i64, vec: Point, cycle: EdgeFlow) -> Result<Self> {
        crate::words::check_same_rank(vec.rank(), 2)?;
        crate::words::check_same_rank(cycle.rank(), 2)?;
        crate::lattice::require_cycle(&cycle)?;
        Ok(SatelliteElem { k, vec, cycle })
    }

    pub fn generator(g: SatGenerator, k: i64) -> Self {
        match g {
            SatGenerator::X => SatelliteElem {
                k,
                vec: Point::unit(2, 1),
                cycle: EdgeFlow::zero(2),
            },
            SatGenerator::Y => SatelliteElem {
                k,
                vec: Point::unit(2, 2),
                cycle: EdgeFlow::zero(2),
            },
            SatGenerator::Z => SatelliteElem {
                k,
                vec: Point::origin(2),
                cycle: Plaquette {
                    base: Point::origin(2),
                    i: 1,
                    j: 2,
                }
                .boundary(),
            },
        }
    }

    fn cocycle(&self) -> Cocycle {
        Cocycle::scaled(2, self.k)
    }

    fn ext(&self) -> ExtElem {
        ExtElem {
            vec: self.vec.clone(),
            cycle: self.cycle.clone(),
        }
    }

    fn with(&self, e: ExtElem) -> SatelliteElem {
        SatelliteElem {
            k: self.k,
            vec: e.vec,
            cycle: e.cycle,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.vec.is_origin() && self.cycle.is_empty()
    }

    /// `(v1 + v2, h1 + T_{v1} h2 + k c(v1, v2))`.
    pub fn mul(&self, other: &SatelliteElem) -> Result<SatelliteElem> {
        if self.k != other.k {
            return Err(Error::LevelMismatch {
                left: self.k.to_string(),
                right: other.k.to_string(),
            });
        }
        Ok(self.with(ext_mul(&self.cocycle(), &self.ext(), &other.ext())?))
    }

    pub fn inv(&self) -> SatelliteElem {
        self.with(ext_inv(&self.cocycle(), &self.ext()).expect("rank 2"))
    }

    pub fn pow(&self, n: i64) -> SatelliteElem {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut acc = SatelliteElem::identity(self.k);
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base).expect("same level");
        }
        acc
    }

    /// `by * self * by^-1`.
    pub fn conj(&self, by: &SatelliteElem) -> Result<SatelliteElem> {
        by.mul(self)?.mul(&by.inv())
    }

    pub fn comm(&self, other: &SatelliteElem) -> Result<SatelliteElem> {
        self.mul(other)?.mul(&self.inv())?.mul(&other.inv())
    }

    pub fn in_n(&self) -> bool {
        self.vec.is_origin()
    }

    pub fn in_m(&self) -> bool {
        self.in_n()
            && decompose_cycle_2d(&self.cycle)
                .expect("satellite cycles are closed")
                .coefficients()
                .all(|c| divisible(c, self.k))
    }

    pub fn in_commutant(&self) -> bool {
        self.in_n()
            && divisible(
                &algebraic_area(&self.cycle).expect("satellite cycles are closed"),
                self.k,
            )
    }

    pub fn is_member(&self, sub: Subgroup) -> bool {
        match sub {
            Subgroup::N => self.in_n(),
            Subgroup::M => self.in_m(),
            Subgroup::Commutant => self.in_commutant(),
        }
    }

    /// Parses and evaluates a word over `x, y, z` (tokens `x`, `y^-2`, `z^3`, ...).
    pub fn from_word(text: &str, k: i64) -> Result<SatelliteElem> {
        let mut acc = SatelliteElem::identity(k);
        for tok in tokenize(text)? {
            let g: SatGenerator = tok.name.parse()?;
            let step = SatelliteElem::generator(g, k).pow(tok.exponent);
            acc = acc.mul(&step)?;
        }
        Ok(acc)
    }
}

/// Order of `z` in the abelianization: the least `j > 0` with `z^j` in the
/// commutant, searched up to `|k|`. `None` means infinite order (`k = 0`).
pub fn abelianization_order_of_z(k: i64) -> Option<u64> {
    let z = SatelliteElem::generator(SatGenerator::Z, k);
    let mut acc = SatelliteElem::identity(k);
    for j in 1..=k.unsigned_abs() {
        acc = acc.mul(&z).expect("same level");
        if acc.in_commutant() {
            return Some(j);
        }
    }
    None
}

/// Plaquette coefficients of an `N` element reduced mod `|k|` (the image in `N/M`).
pub fn reduce_mod_m(a: &SatelliteElem) -> Result<Vec<(Plaquette, BigInt)>> {
    if !a.in_n() {
        return Err(Error::NotACycle);
    }
    let modulus = BigInt::from(a.k).abs();
    Ok(decompose_cycle_2d(&a.cycle)?
        .iter()
        .filter_map(|(p, c)| {
            let r = if modulus.is_zero() {
                c.clone()
            } else {
                ((c % &modulus) + &modulus) % &modulus
            };
            (!r.is_zero()).then(|| (p.clone(), r))
        })
        .collect())
}
