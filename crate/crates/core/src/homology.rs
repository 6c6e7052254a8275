//! First homology of the grid complex in plaquette coordinates.
//!
//! `p(m, i, j)` is the boundary of the unit square at `m` spanned by axes `i < j`,
//! oriented so that it equals the flow of the commutator `x_i x_j x_i^-1 x_j^-1`
//! walked from `m`. For `d = 2` plaquettes are a free basis of the cycles; for
//! `d >= 3` they satisfy the cube relations and decompositions are not unique.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{require_cycle, EdgeFlow, EdgeKey};
use crate::point::Point;
use crate::sparse::Sparse;
use crate::words::{check_rank, check_same_rank};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Plaquette {
    pub base: Point,
    pub i: usize,
    pub j: usize,
}

impl Plaquette {
    pub fn new(base: Point, i: usize, j: usize) -> Result<Self> {
        let rank = base.rank();
        if !(1 <= i && i < j && j <= rank) {
            return Err(Error::BadAxes { axes: vec![i, j], rank });
        }
        Ok(Plaquette { base, i, j })
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    /// `{(m,i):+1, (m+e_i,j):+1, (m+e_j,i):-1, (m,j):-1}`.
    pub fn boundary(&self) -> EdgeFlow {
        let mut f = EdgeFlow::zero(self.rank());
        add_plaquette(&mut f, self, &BigInt::from(1));
        f
    }
}

impl fmt::Display for Plaquette {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p({};{},{})", self.base, self.i, self.j)
    }
}

fn add_plaquette(f: &mut EdgeFlow, p: &Plaquette, k: &BigInt) {
    f.add_at(EdgeKey::new(p.base.clone(), p.i), k.clone());
    f.add_at(EdgeKey::new(p.base.step(p.i, 1), p.j), k.clone());
    f.add_at(EdgeKey::new(p.base.step(p.j, 1), p.i), -k);
    f.add_at(EdgeKey::new(p.base.clone(), p.j), -k);
}

pub fn plaquette_boundary(p: &Plaquette) -> EdgeFlow {
    p.boundary()
}

/// Integer combination of plaquettes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaquetteSum {
    rank: usize,
    entries: Sparse<Plaquette>,
}

impl PlaquetteSum {
    pub fn zero(rank: usize) -> Self {
        PlaquetteSum {
            rank,
            entries: Sparse::new(),
        }
    }

    pub fn from_entries<I, V>(rank: usize, it: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Plaquette, V)>,
        V: Into<BigInt>,
    {
        check_rank(rank)?;
        let mut entries = Sparse::new();
        for (p, v) in it {
            check_same_rank(rank, p.rank())?;
            entries.add_at(p, v);
        }
        Ok(PlaquetteSum { rank, entries })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, p: &Plaquette) -> BigInt {
        self.entries.get(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Plaquette, &BigInt)> {
        self.entries.iter()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &BigInt> {
        self.entries.values()
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> BigInt {
        self.entries.total()
    }

    pub fn add(&self, other: &PlaquetteSum) -> Result<PlaquetteSum> {
        check_same_rank(self.rank, other.rank)?;
        let mut out = self.clone();
        out.entries.add_assign(&other.entries);
        Ok(out)
    }

    pub fn negate(&self) -> PlaquetteSum {
        PlaquetteSum {
            rank: self.rank,
            entries: self.entries.negated(),
        }
    }

    pub fn translate(&self, by: &Point) -> Result<PlaquetteSum> {
        check_same_rank(self.rank, by.rank())?;
        Ok(PlaquetteSum {
            rank: self.rank,
            entries: self.entries.map_keys(|p| {
                Some(Plaquette {
                    base: &p.base + by,
                    i: p.i,
                    j: p.j,
                })
            }),
        })
    }

    /// `sum k_p * boundary(p)`.
    pub fn boundary_image(&self) -> EdgeFlow {
        let mut f = EdgeFlow::zero(self.rank);
        for (p, k) in self.entries.iter() {
            add_plaquette(&mut f, p, k);
        }
        f
    }
}

impl fmt::Display for PlaquetteSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (n, (p, k)) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{k}*{p}")?;
        }
        Ok(())
    }
}

/// Peels the lexicographically smallest edge `(m, a)` with the plaquette
/// `p(m, a, b)`, `b` the smallest axis above `a` carrying flow at `m`.
///
/// At the minimal base vertex every incoming edge is zero, so for a cycle the
/// outgoing flows sum to zero and such a `b` exists. Every vertex touched stays in
/// the bounding box of the input and the minimal key strictly increases, so the
/// loop terminates.
fn peel(flow: &EdgeFlow) -> Result<PlaquetteSum> {
    let rank = flow.rank();
    let mut rest = flow.sparse().clone();
    let mut out = Sparse::new();
    while let Some((key, k)) = rest.first() {
        let (m, a, k) = (key.base.clone(), key.axis, k.clone());
        let b = (a + 1..=rank)
            .find(|&b| rest.get(&EdgeKey::new(m.clone(), b)) != BigInt::default())
            .ok_or(Error::NotACycle)?;
        let p = Plaquette { base: m, i: a, j: b };
        let mut step = EdgeFlow::zero(rank);
        add_plaquette(&mut step, &p, &k);
        rest.sub_assign(step.sparse());
        out.add_at(p, k);
    }
    Ok(PlaquetteSum { rank, entries: out })
}

/// The unique plaquette expansion of a planar cycle.
pub fn decompose_cycle_2d(flow: &EdgeFlow) -> Result<PlaquetteSum> {
    check_same_rank(flow.rank(), 2)?;
    require_cycle(flow)?;
    peel(flow)
}

/// Some plaquette expansion of a cycle in any rank `d >= 2`; canonical only for `d = 2`.
pub fn decompose_cycle(flow: &EdgeFlow) -> Result<PlaquetteSum> {
    if flow.rank() < 2 {
        return Err(Error::RankTooSmall {
            rank: flow.rank(),
            needed: 2,
        });
    }
    require_cycle(flow)?;
    peel(flow)
}

/// Signed area of a planar cycle: the sum of its plaquette coefficients.
pub fn algebraic_area(flow: &EdgeFlow) -> Result<BigInt> {
    Ok(decompose_cycle_2d(flow)?.total())
}

/// Signed face sum of the unit cube at `base` spanned by axes `i < j < k`.
/// Its boundary image is the zero flow.
pub fn cube_relation(base: &Point, i: usize, j: usize, k: usize) -> Result<PlaquetteSum> {
    let rank = base.rank();
    if rank < 3 {
        return Err(Error::RankTooSmall { rank, needed: 3 });
    }
    if !(1 <= i && i < j && j < k && k <= rank) {
        return Err(Error::BadAxes {
            axes: vec![i, j, k],
            rank,
        });
    }
    let face = |b: Point, a1, a2| Plaquette { base: b, i: a1, j: a2 };
    PlaquetteSum::from_entries(
        rank,
        [
            (face(base.clone(), i, j), -1),
            (face(base.clone(), i, k), 1),
            (face(base.clone(), j, k), -1),
            (face(base.step(k, 1), i, j), 1),
            (face(base.step(j, 1), i, k), -1),
            (face(base.step(i, 1), j, k), 1),
        ],
    )
}

/// Projects onto the coordinate plane of axes `i < j`, re-keying to rank 2.
pub fn project_flow(flow: &EdgeFlow, i: usize, j: usize) -> Result<EdgeFlow> {
    let rank = flow.rank();
    if !(1 <= i && i < j && j <= rank) {
        return Err(Error::BadAxes { axes: vec![i, j], rank });
    }
    let projected = flow.sparse().map_keys(|key| {
        let axis = if key.axis == i {
            1
        } else if key.axis == j {
            2
        } else {
            return None;
        };
        let base = Point::from_coords([key.base.coord(i).clone(), key.base.coord(j).clone()]);
        Some(EdgeKey::new(base, axis))
    });
    Ok(EdgeFlow::from_sparse(2, projected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::evaluate_path;
    use crate::words::Word;

    fn flow(s: &str, d: usize) -> EdgeFlow {
        evaluate_path(&Word::parse(s, d).unwrap()).flow
    }

    fn pl(base: &[i64], i: usize, j: usize) -> Plaquette {
        Plaquette::new(Point::from_coords(base.iter().copied()), i, j).unwrap()
    }

    #[test]
    fn plaquette_matches_commutator_walk() {
        assert_eq!(pl(&[0, 0], 1, 2).boundary(), flow("x1 x2 x1^-1 x2^-1", 2));
        let shifted = flow("x1 x2 x1^-1 x2^-1", 2)
            .translate(&Point::from_coords([5, -3]))
            .unwrap();
        assert_eq!(pl(&[5, -3], 1, 2).boundary(), shifted);
        assert!(pl(&[2, 7, -1], 1, 3).boundary().is_cycle());
        assert!(Plaquette::new(Point::origin(2), 2, 1).is_err());
        assert!(Plaquette::new(Point::origin(2), 1, 3).is_err());
    }

    #[test]
    fn decompose_2d_examples() {
        let d = decompose_cycle_2d(&flow("x1 x2 x1^-1 x2^-1", 2)).unwrap();
        assert_eq!(d, PlaquetteSum::from_entries(2, [(pl(&[0, 0], 1, 2), 1)]).unwrap());
        assert!(decompose_cycle_2d(&EdgeFlow::zero(2)).unwrap().is_empty());
        let d = decompose_cycle_2d(&flow("x1^2 x2 x1^-2 x2^-1", 2)).unwrap();
        let expected = PlaquetteSum::from_entries(2, [(pl(&[0, 0], 1, 2), 1), (pl(&[1, 0], 1, 2), 1)]).unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn decompose_rejects_non_cycles() {
        assert_eq!(decompose_cycle_2d(&flow("x1", 2)), Err(Error::NotACycle));
        assert_eq!(decompose_cycle(&flow("x1 x3", 3)), Err(Error::NotACycle));
        assert!(matches!(
            decompose_cycle_2d(&flow("x1 x2 x1^-1 x2^-1", 3)),
            Err(Error::RankMismatch { .. })
        ));
        assert!(matches!(
            decompose_cycle(&EdgeFlow::zero(1)),
            Err(Error::RankTooSmall { .. })
        ));
    }

    #[test]
    fn area_examples() {
        assert_eq!(algebraic_area(&flow("x1 x2 x1^-1 x2^-1", 2)).unwrap(), 1.into());
        assert_eq!(algebraic_area(&EdgeFlow::zero(2)).unwrap(), 0.into());
        assert_eq!(algebraic_area(&flow("x2 x1 x2^-1 x1^-1", 2)).unwrap(), (-1).into());
        // figure eight: the two lobes cancel
        let eight = flow("x1 x2 x1^-1 x2^-1 x2^-1 x1^-1 x2 x1", 2);
        assert_eq!(algebraic_area(&eight).unwrap(), 0.into());
        assert_eq!(decompose_cycle_2d(&eight).unwrap().len(), 2);
    }

    #[test]
    fn decompose_general_examples() {
        let d = decompose_cycle(&flow("x1 x2 x1^-1 x2^-1", 3)).unwrap();
        assert_eq!(d, PlaquetteSum::from_entries(3, [(pl(&[0, 0, 0], 1, 2), 1)]).unwrap());
        assert!(decompose_cycle(&EdgeFlow::zero(3)).unwrap().is_empty());
        let f = flow("x1 x3 x2 x1^-1 x3^-1 x2^-1", 3);
        assert_eq!(decompose_cycle(&f).unwrap().boundary_image(), f);
    }

    #[test]
    fn cube_relation_examples() {
        let c = cube_relation(&Point::origin(3), 1, 2, 3).unwrap();
        assert_eq!(c.len(), 6);
        assert!(c.boundary_image().is_empty());
        let one = Point::from_coords([1, 1, 1]);
        assert_eq!(cube_relation(&one, 1, 2, 3).unwrap(), c.translate(&one).unwrap());
        assert!(matches!(
            cube_relation(&Point::origin(2), 1, 2, 3),
            Err(Error::RankTooSmall { .. })
        ));
        assert!(matches!(
            cube_relation(&Point::origin(4), 1, 3, 2),
            Err(Error::BadAxes { .. })
        ));
    }

    /// Exhausts the 64 sign patterns on the six faces: exactly the frozen pattern
    /// and its negative have zero boundary.
    #[test]
    fn cube_signs_are_the_only_solution() {
        let m = Point::origin(3);
        let faces = [
            pl(&[0, 0, 0], 1, 2),
            pl(&[0, 0, 0], 1, 3),
            pl(&[0, 0, 0], 2, 3),
            pl(&[0, 0, 1], 1, 2),
            pl(&[0, 1, 0], 1, 3),
            pl(&[1, 0, 0], 2, 3),
        ];
        let frozen = cube_relation(&m, 1, 2, 3).unwrap();
        let mut solutions = 0;
        for mask in 0u32..64 {
            let s = PlaquetteSum::from_entries(
                3,
                faces
                    .iter()
                    .enumerate()
                    .map(|(n, f)| (f.clone(), if mask >> n & 1 == 1 { -1 } else { 1 })),
            )
            .unwrap();
            if s.boundary_image().is_empty() {
                solutions += 1;
                assert!(s == frozen || s == frozen.negate());
            }
        }
        assert_eq!(solutions, 2);
        // the sign pattern p(ij)+p(ik)+p(jk)-p(+k,ij)-p(+j,ik)+p(+i,jk) does not close
        let displayed = PlaquetteSum::from_entries(3, faces.iter().cloned().zip([1, 1, 1, -1, -1, 1])).unwrap();
        assert!(!displayed.boundary_image().is_empty());
    }

    #[test]
    fn projection_examples() {
        let f = flow("x1 x2 x1^-1 x2^-1", 3);
        assert_eq!(project_flow(&f, 1, 2).unwrap(), flow("x1 x2 x1^-1 x2^-1", 2));
        assert!(project_flow(&f, 1, 3).unwrap().is_empty());
        assert!(project_flow(&EdgeFlow::zero(3), 2, 3).unwrap().is_empty());
        assert!(project_flow(&f, 2, 2).is_err());
    }
}
