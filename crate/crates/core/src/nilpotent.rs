//! Free 2-step nilpotent groups (the discrete Heisenberg group for `d = 2`).
//!
//! Elements are `(v, A)` with `A` strictly upper triangular. Walking a word,
//! `A_ij` accumulates the discrete line integral of `x_i dx_j`, so for a closed
//! word it is the signed area of the path's projection to the `(i, j)` plane.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::point::Point;
use crate::words::{check_same_rank, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeisenbergElem {
    pub endpoint: Point,
    /// Row-major upper triangle: `(1,2), (1,3), ..., (1,d), (2,3), ...`.
    areas: Vec<BigInt>,
}

fn tri_index(rank: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= rank);
    // rows 1..i-1 hold (rank - r) entries each
    let before: usize = (1..i).map(|r| rank - r).sum();
    before + (j - i - 1)
}

impl HeisenbergElem {
    pub fn identity(rank: usize) -> Self {
        HeisenbergElem {
            endpoint: Point::origin(rank),
            areas: vec![BigInt::zero(); rank * rank.saturating_sub(1) / 2],
        }
    }

    pub fn rank(&self) -> usize {
        self.endpoint.rank()
    }

    /// `A_ij` for `1 <= i < j <= d`.
    pub fn area(&self, i: usize, j: usize) -> &BigInt {
        &self.areas[tri_index(self.rank(), i, j)]
    }

    /// All `(i, j, A_ij)` with `i < j`, row-major.
    pub fn areas(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        let rank = self.rank();
        (1..=rank)
            .flat_map(move |i| (i + 1..=rank).map(move |j| (i, j)))
            .zip(&self.areas)
            .map(|((i, j), a)| (i, j, a))
    }

    pub fn is_identity(&self) -> bool {
        self.endpoint.is_origin() && self.areas.iter().all(Zero::is_zero)
    }

    /// `(v + w, A + B + C)` with `C_ij = v_i w_j`.
    pub fn mul(&self, other: &HeisenbergElem) -> Result<HeisenbergElem> {
        check_same_rank(self.rank(), other.rank())?;
        let rank = self.rank();
        let mut areas = Vec::with_capacity(self.areas.len());
        for i in 1..=rank {
            for j in i + 1..=rank {
                let idx = tri_index(rank, i, j);
                areas.push(&self.areas[idx] + &other.areas[idx] + self.endpoint.coord(i) * other.endpoint.coord(j));
            }
        }
        Ok(HeisenbergElem {
            endpoint: &self.endpoint + &other.endpoint,
            areas,
        })
    }

    pub fn inv(&self) -> HeisenbergElem {
        // (v, A)^-1 = (-v, -A + C(v, v))
        let rank = self.rank();
        let mut out = HeisenbergElem::identity(rank);
        out.endpoint = -&self.endpoint;
        for i in 1..=rank {
            for j in i + 1..=rank {
                let idx = tri_index(rank, i, j);
                out.areas[idx] = -&self.areas[idx] + self.endpoint.coord(i) * self.endpoint.coord(j);
            }
        }
        out
    }
}

/// Folds the unit steps of `w`: a step `s` on axis `j` adds `v_i * s` to every
/// `A_ij` with `i < j`, then moves `v_j` by `s`.
pub fn heis_eval(w: &Word) -> HeisenbergElem {
    let rank = w.rank();
    let mut h = HeisenbergElem::identity(rank);
    let mut coords: Vec<BigInt> = vec![BigInt::zero(); rank];
    for l in w.letters() {
        let s = l.sign.as_i64();
        let j = l.axis;
        for (i, vi) in coords.iter().enumerate().take(j - 1) {
            let idx = tri_index(rank, i + 1, j);
            if s > 0 {
                h.areas[idx] += vi;
            } else {
                h.areas[idx] -= vi;
            }
        }
        coords[j - 1] += s;
    }
    h.endpoint = Point::from_coords(coords);
    h
}

pub fn heis_trivial(w: &Word) -> bool {
    heis_eval(w).is_identity()
}

/// Equality in the free 2-step nilpotent group.
pub fn heis_eq(w1: &Word, w2: &Word) -> Result<bool> {
    check_same_rank(w1.rank(), w2.rank())?;
    Ok(heis_eval(w1) == heis_eval(w2))
}
