//! The free metabelian group `Met(d) = F_d / F_d''`.
//!
//! An element is stored in edge-flow normal form: the endpoint of its lattice path
//! and the net multiplicity of every unit edge. Two words are equal in `Met(d)`
//! exactly when both data agree, which solves the word problem by a single walk.

use num_bigint::BigInt;

use crate::cocycles::canonical_path;
use crate::error::{Error, Result};
use crate::homology::Plaquette;
use crate::lattice::{evaluate_path, EdgeFlow, PathEvaluation};
use crate::point::Point;
use crate::sparse::Sparse;
use crate::words::{check_axis, check_rank, check_same_rank, Sign, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MetabelianElem {
    pub endpoint: Point,
    pub flow: EdgeFlow,
}

impl MetabelianElem {
    pub fn identity(rank: usize) -> Self {
        MetabelianElem {
            endpoint: Point::origin(rank),
            flow: EdgeFlow::zero(rank),
        }
    }

    pub fn from_word(w: &Word) -> Self {
        let PathEvaluation { endpoint, flow } = evaluate_path(w);
        MetabelianElem { endpoint, flow }
    }

    /// Builds an element from raw parts, checking `boundary(flow) = [endpoint] - [0]`.
    pub fn from_parts(endpoint: Point, flow: EdgeFlow) -> Result<Self> {
        check_same_rank(endpoint.rank(), flow.rank())?;
        let b = flow.boundary();
        let origin = Point::origin(endpoint.rank());
        let consistent = if endpoint.is_origin() {
            b.is_zero()
        } else {
            b.iter().count() == 2 && b.get(&endpoint) == BigInt::from(1) && b.get(&origin) == BigInt::from(-1)
        };
        if !consistent {
            return Err(Error::NotACycle);
        }
        Ok(MetabelianElem { endpoint, flow })
    }

    pub fn rank(&self) -> usize {
        self.endpoint.rank()
    }

    pub fn is_identity(&self) -> bool {
        self.endpoint.is_origin() && self.flow.is_empty()
    }

    /// `(a + b, f + T_a g)`: the second path is walked from the first endpoint.
    pub fn mul(&self, other: &MetabelianElem) -> Result<MetabelianElem> {
        check_same_rank(self.rank(), other.rank())?;
        Ok(MetabelianElem {
            endpoint: &self.endpoint + &other.endpoint,
            flow: self.flow.add(&other.flow.translate(&self.endpoint)?)?,
        })
    }

    pub fn inv(&self) -> MetabelianElem {
        let back = -&self.endpoint;
        MetabelianElem {
            flow: self.flow.translate(&back).expect("same rank").negate(),
            endpoint: back,
        }
    }

    /// `by * self * by^-1`.
    pub fn conj(&self, by: &MetabelianElem) -> Result<MetabelianElem> {
        by.mul(self)?.mul(&by.inv())
    }

    /// `self * other * self^-1 * other^-1`.
    pub fn comm(&self, other: &MetabelianElem) -> Result<MetabelianElem> {
        self.mul(other)?.mul(&self.inv())?.mul(&other.inv())
    }
}

pub fn met_from_word(w: &Word) -> MetabelianElem {
    MetabelianElem::from_word(w)
}

/// Word problem in `Met(d)`.
pub fn met_eq(w1: &Word, w2: &Word) -> Result<bool> {
    check_same_rank(w1.rank(), w2.rank())?;
    Ok(MetabelianElem::from_word(w1) == MetabelianElem::from_word(w2))
}

/// The word `x1^m1 ... xd^md [x_i, x_j] xd^-md ... x1^-m1`.
pub fn plaquette_word(p: &Plaquette) -> Word {
    let rank = p.rank();
    let m = canonical_path(&p.base);
    let xi = Word::power(rank, p.i, 1).expect("valid axis");
    let xj = Word::power(rank, p.j, 1).expect("valid axis");
    xi.commutator(&xj).and_then(|c| c.conjugate_by(&m)).expect("same rank")
}

/// The element of `Met(d)` whose flow is the plaquette `p`.
pub fn plaquette_element(p: &Plaquette) -> MetabelianElem {
    MetabelianElem::from_word(&plaquette_word(p))
}

/// Image of the extension generator `(g, p)`: the monomial path to `g`
/// followed by the plaquette element of `p`.
pub fn section_image(g: &Point, p: Option<&Plaquette>) -> Result<MetabelianElem> {
    let base = MetabelianElem::from_word(&canonical_path(g));
    match p {
        None => Ok(base),
        Some(p) => {
            check_same_rank(g.rank(), p.rank())?;
            base.mul(&plaquette_element(p))
        }
    }
}

/// A Laurent polynomial in commuting variables `t_1..t_d`, keyed by exponent vector.
pub type LaurentPoly = Sparse<Point>;

/// Image of a word under the Magnus embedding: the upper-triangular matrix
/// `[[t^monomial, sum_i derivatives_i s_i], [0, 1]]`, where `derivatives_i` is the
/// abelianized Fox derivative with respect to `x_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FoxImage {
    pub monomial: Point,
    pub derivatives: Vec<LaurentPoly>,
}

impl FoxImage {
    pub fn identity(rank: usize) -> Self {
        FoxImage {
            monomial: Point::origin(rank),
            derivatives: vec![LaurentPoly::new(); rank],
        }
    }

    /// Matrix of `x_axis^(+1)` or `x_axis^(-1)`: `d(x)/dx = 1`, `d(x^-1)/dx = -t^-1`.
    pub fn generator(rank: usize, axis: usize, sign: Sign) -> Result<Self> {
        check_rank(rank)?;
        check_axis(axis, rank)?;
        let mut g = FoxImage::identity(rank);
        match sign {
            Sign::Pos => {
                g.monomial = Point::unit(rank, axis);
                g.derivatives[axis - 1].add_at(Point::origin(rank), 1);
            }
            Sign::Neg => {
                g.monomial = -&Point::unit(rank, axis);
                g.derivatives[axis - 1].add_at(g.monomial.clone(), -1);
            }
        }
        Ok(g)
    }

    /// Matrix product: `(t^a, D)(t^b, E) = (t^(a+b), D + t^a E)`.
    pub fn mul(&self, other: &FoxImage) -> Result<FoxImage> {
        check_same_rank(self.monomial.rank(), other.monomial.rank())?;
        let shift = &self.monomial;
        let derivatives = self
            .derivatives
            .iter()
            .zip(&other.derivatives)
            .map(|(d, e)| {
                let mut out = d.clone();
                out.add_assign(&e.map_keys(|k| Some(k + shift)));
                out
            })
            .collect();
        Ok(FoxImage {
            monomial: &self.monomial + &other.monomial,
            derivatives,
        })
    }
}

/// Folds the Magnus matrices of the letters of `w`.
pub fn fox_image(w: &Word) -> FoxImage {
    let rank = w.rank();
    w.letters()
        .iter()
        .map(|l| FoxImage::generator(rank, l.axis, l.sign).expect("word letters are in range"))
        .fold(FoxImage::identity(rank), |acc, g| acc.mul(&g).expect("same rank"))
}
