//! The grid complex of `Z^d`: positively oriented unit edges, integer edge flows
//! (1-chains), vertex chains, and the evaluation of a word as a lattice path.
//!
//! A path is recorded by its endpoint and its net flow: each unit edge carries the
//! number of positive traversals minus the number of negative ones. Back-and-forth
//! steps cancel, so the flow of a letter sequence only depends on its free reduction.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::point::Point;
use crate::sparse::Sparse;
use crate::words::{check_axis, check_rank, check_same_rank, Letter, Sign, Word};

/// The unit edge from `base` to `base + e_axis`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeKey {
    pub base: Point,
    pub axis: usize,
}

impl EdgeKey {
    pub fn new(base: Point, axis: usize) -> Self {
        EdgeKey { base, axis }
    }

    pub fn head(&self) -> Point {
        self.base.step(self.axis, 1)
    }
}

/// A finitely supported integer 1-chain on the grid. Iteration is in lexicographic
/// `(base, axis)` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeFlow {
    rank: usize,
    entries: Sparse<EdgeKey>,
}

/// A finitely supported integer 0-chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexChain {
    rank: usize,
    entries: Sparse<Point>,
}

impl VertexChain {
    pub fn zero(rank: usize) -> Self {
        VertexChain {
            rank,
            entries: Sparse::new(),
        }
    }

    pub fn from_entries<I: IntoIterator<Item = (Point, V)>, V: Into<BigInt>>(rank: usize, it: I) -> Self {
        VertexChain {
            rank,
            entries: it.into_iter().collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, p: &Point) -> BigInt {
        self.entries.get(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, &BigInt)> {
        self.entries.iter()
    }

    pub fn translate(&self, by: &Point) -> VertexChain {
        VertexChain {
            rank: self.rank,
            entries: self.entries.map_keys(|p| Some(p + by)),
        }
    }
}

impl EdgeFlow {
    pub fn zero(rank: usize) -> Self {
        EdgeFlow {
            rank,
            entries: Sparse::new(),
        }
    }

    /// Sums the given entries; keys must have rank `rank` and valid axes.
    pub fn from_entries<I, V>(rank: usize, it: I) -> Result<Self>
    where
        I: IntoIterator<Item = (EdgeKey, V)>,
        V: Into<BigInt>,
    {
        check_rank(rank)?;
        let mut entries = Sparse::new();
        for (k, v) in it {
            check_same_rank(rank, k.base.rank())?;
            check_axis(k.axis, rank)?;
            entries.add_at(k, v);
        }
        Ok(EdgeFlow { rank, entries })
    }

    pub(crate) fn from_sparse(rank: usize, entries: Sparse<EdgeKey>) -> Self {
        EdgeFlow { rank, entries }
    }

    pub(crate) fn sparse(&self) -> &Sparse<EdgeKey> {
        &self.entries
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

    pub fn get(&self, key: &EdgeKey) -> BigInt {
        self.entries.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&EdgeKey, &BigInt)> {
        self.entries.iter()
    }

    pub(crate) fn add_at(&mut self, key: EdgeKey, delta: impl Into<BigInt>) {
        self.entries.add_at(key, delta);
    }

    pub fn add(&self, other: &EdgeFlow) -> Result<EdgeFlow> {
        check_same_rank(self.rank, other.rank)?;
        let mut out = self.clone();
        out.entries.add_assign(&other.entries);
        Ok(out)
    }

    pub fn sub(&self, other: &EdgeFlow) -> Result<EdgeFlow> {
        check_same_rank(self.rank, other.rank)?;
        let mut out = self.clone();
        out.entries.sub_assign(&other.entries);
        Ok(out)
    }

    pub fn negate(&self) -> EdgeFlow {
        EdgeFlow {
            rank: self.rank,
            entries: self.entries.negated(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> EdgeFlow {
        EdgeFlow {
            rank: self.rank,
            entries: self.entries.scaled(factor),
        }
    }

    /// Rigid shift: the result at `(base, axis)` is `self` at `(base - by, axis)`.
    pub fn translate(&self, by: &Point) -> Result<EdgeFlow> {
        check_same_rank(self.rank, by.rank())?;
        Ok(EdgeFlow {
            rank: self.rank,
            entries: self.entries.map_keys(|k| Some(EdgeKey::new(&k.base + by, k.axis))),
        })
    }

    /// `+k` at the head and `-k` at the tail of every edge.
    pub fn boundary(&self) -> VertexChain {
        let mut out = Sparse::new();
        for (k, v) in self.entries.iter() {
            out.add_at(k.head(), v.clone());
            out.add_at(k.base.clone(), -v);
        }
        VertexChain {
            rank: self.rank,
            entries: out,
        }
    }

    pub fn is_cycle(&self) -> bool {
        self.boundary().is_zero()
    }

    /// The slice `m -> flow(m, axis)` as a sparse map over base points.
    pub fn axis_slice(&self, axis: usize) -> Sparse<Point> {
        self.entries.map_keys(|k| (k.axis == axis).then(|| k.base.clone()))
    }
}

/// A path from the origin summarized by its endpoint and net edge flow.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathEvaluation {
    pub endpoint: Point,
    pub flow: EdgeFlow,
}

impl PathEvaluation {
    pub fn identity(rank: usize) -> Self {
        PathEvaluation {
            endpoint: Point::origin(rank),
            flow: EdgeFlow::zero(rank),
        }
    }

    pub fn is_loop(&self) -> bool {
        self.endpoint.is_origin()
    }

    /// Appends one unit step.
    pub fn push(&mut self, letter: Letter) {
        match letter.sign {
            Sign::Pos => {
                let next = self.endpoint.step(letter.axis, 1);
                let from = std::mem::replace(&mut self.endpoint, next);
                self.flow.add_at(EdgeKey::new(from, letter.axis), 1);
            }
            Sign::Neg => {
                self.endpoint = self.endpoint.step(letter.axis, -1);
                self.flow.add_at(EdgeKey::new(self.endpoint.clone(), letter.axis), -1);
            }
        }
    }
}

/// Walks the word from the origin with unit steps.
pub fn evaluate_path(word: &Word) -> PathEvaluation {
    let mut pe = PathEvaluation::identity(word.rank());
    for &l in word.letters() {
        pe.push(l);
    }
    pe
}

/// Same as [`evaluate_path`] for a raw (possibly unreduced) letter sequence.
pub fn evaluate_letters(rank: usize, letters: &[Letter]) -> Result<PathEvaluation> {
    check_rank(rank)?;
    let mut pe = PathEvaluation::identity(rank);
    for &l in letters {
        check_axis(l.axis, rank)?;
        pe.push(l);
    }
    Ok(pe)
}

/// Whether the path closes, i.e. `w` is trivial in the abelianization.
pub fn is_loop(word: &Word) -> bool {
    let mut end = Point::origin(word.rank());
    for l in word.letters() {
        end = end.step(l.axis, l.sign.as_i64());
    }
    end.is_origin()
}

pub(crate) fn require_cycle(flow: &EdgeFlow) -> Result<()> {
    if flow.is_cycle() {
        Ok(())
    } else {
        Err(Error::NotACycle)
    }
}
