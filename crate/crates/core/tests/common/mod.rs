#![allow(dead_code)]

use std::collections::BTreeMap;

use latgroup::{canonical_path, evaluate_path, EdgeFlow, Letter, PlaquetteSum, Point, Sign, Word};
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::Rng;

pub fn letters(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        (1..=rank, any::<bool>()).prop_map(|(a, s)| Letter::new(a, if s { Sign::Pos } else { Sign::Neg })),
        0..=max_len,
    )
}

pub fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    letters(rank, max_len).prop_map(move |ls| Word::from_letters(rank, ls).unwrap())
}

/// Closes a word by walking the monomial path back to the origin.
pub fn close(w: &Word) -> Word {
    let back = canonical_path(&-&evaluate_path(w).endpoint);
    w.concat(&back).unwrap()
}

pub fn loop_word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    word(rank, max_len).prop_map(|w| close(&w))
}

pub fn point(rank: usize, bound: i64) -> impl Strategy<Value = Point> {
    prop::collection::vec(-bound..=bound, rank).prop_map(Point::from_coords)
}

pub fn rand_letters<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Vec<Letter> {
    let n = rng.gen_range(0..=max_len);
    (0..n)
        .map(|_| {
            let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
            Letter::new(rng.gen_range(1..=rank), sign)
        })
        .collect()
}

pub fn rand_word<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    Word::from_letters(rank, rand_letters(rng, rank, max_len)).unwrap()
}

pub fn rand_loop<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    close(&rand_word(rng, rank, max_len))
}

pub fn rand_point<R: Rng>(rng: &mut R, rank: usize, bound: i64) -> Point {
    Point::from_coords((0..rank).map(|_| rng.gen_range(-bound..=bound)))
}

/// Random word over the satellite alphabet `x, y, z` with exponents in [-2, 2].
pub fn rand_sat_word<R: Rng>(rng: &mut R, max_tokens: usize) -> String {
    let n = rng.gen_range(0..=max_tokens);
    (0..n)
        .map(|_| {
            let g = ["x", "y", "z"][rng.gen_range(0..3)];
            let mut e = rng.gen_range(-2i64..=2);
            if e == 0 {
                e = 1;
            }
            format!("{g}^{e}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Independent planar expansion: the coefficient of the square at `(m, n)` is the
/// net horizontal flow through column `m` at rows `<= n`.
pub fn prefix_sum_oracle(f: &EdgeFlow) -> BTreeMap<(i64, i64), i64> {
    let mut columns: BTreeMap<i64, BTreeMap<i64, i64>> = BTreeMap::new();
    for (k, v) in f.iter() {
        if k.axis == 1 {
            let (m, t) = (
                k.base.coords()[0].to_i64().unwrap(),
                k.base.coords()[1].to_i64().unwrap(),
            );
            *columns.entry(m).or_default().entry(t).or_default() += v.to_i64().unwrap();
        }
    }
    let mut out = BTreeMap::new();
    for (m, col) in columns {
        let (lo, hi) = (*col.keys().next().unwrap(), *col.keys().last().unwrap());
        let mut acc = 0;
        for n in lo..=hi {
            acc += col.get(&n).copied().unwrap_or(0);
            if acc != 0 {
                out.insert((m, n), acc);
            }
        }
    }
    out
}

pub fn as_map(s: &PlaquetteSum) -> BTreeMap<(i64, i64), i64> {
    s.iter()
        .map(|(p, k)| {
            let c = p.base.coords();
            ((c[0].to_i64().unwrap(), c[1].to_i64().unwrap()), k.to_i64().unwrap())
        })
        .collect()
}
