//! Words in the free group `F_d`: parsing, free reduction, products and inverses.
//!
//! A [`Word`] is always stored freely reduced and carries its rank `d`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest `|exponent|` accepted by the parsers. Exponents are expanded into unit
/// letters, so this bounds the memory a single token can request.
pub const MAX_EXPONENT: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A generator `x_axis` or its inverse. Axes are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub axis: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(axis: usize, sign: Sign) -> Self {
        Letter { axis, sign }
    }

    pub fn pos(axis: usize) -> Self {
        Letter::new(axis, Sign::Pos)
    }

    pub fn neg(axis: usize) -> Self {
        Letter::new(axis, Sign::Neg)
    }

    pub fn inverse(self) -> Self {
        Letter::new(self.axis, self.sign.flip())
    }

    fn cancels(self, other: Letter) -> bool {
        self.axis == other.axis && self.sign != other.sign
    }
}

/// A freely reduced word over `x_1, ..., x_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    rank: usize,
}

/// Stack-based free reduction of an arbitrary letter sequence.
pub fn free_reduce_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

impl Word {
    pub fn identity(rank: usize) -> Result<Self> {
        check_rank(rank)?;
        Ok(Word {
            letters: Vec::new(),
            rank,
        })
    }

    /// Builds the reduced word of an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(rank: usize, letters: I) -> Result<Self> {
        check_rank(rank)?;
        let letters: Vec<Letter> = letters.into_iter().collect();
        for l in &letters {
            check_axis(l.axis, rank)?;
        }
        Ok(Word {
            letters: free_reduce_letters(letters),
            rank,
        })
    }

    /// `x_axis^exponent` as a reduced word.
    pub fn power(rank: usize, axis: usize, exponent: i64) -> Result<Self> {
        let sign = if exponent < 0 { Sign::Neg } else { Sign::Pos };
        let n = exponent.unsigned_abs() as usize;
        Word::from_letters(rank, std::iter::repeat_n(Letter::new(axis, sign), n))
    }

    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        check_rank(rank)?;
        let mut letters = Vec::new();
        for tok in tokenize(text)? {
            let idx = tok
                .name
                .strip_prefix('x')
                .filter(|s| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()))
                .ok_or_else(|| Error::Syntax {
                    token: tok.raw.clone(),
                    reason: "expected x<index>".into(),
                })?;
            let axis: usize = idx.parse().map_err(|_| Error::Syntax {
                token: tok.raw.clone(),
                reason: "index does not fit".into(),
            })?;
            if axis == 0 {
                return Err(Error::Syntax {
                    token: tok.raw,
                    reason: "generator indices start at 1".into(),
                });
            }
            check_axis(axis, rank)?;
            let sign = if tok.exponent < 0 { Sign::Neg } else { Sign::Pos };
            letters.extend(std::iter::repeat_n(
                Letter::new(axis, sign),
                tok.exponent.unsigned_abs() as usize,
            ));
        }
        Word::from_letters(rank, letters)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        check_same_rank(self.rank, other.rank)?;
        Ok(Word {
            letters: free_reduce_letters(self.letters.iter().chain(&other.letters).copied()),
            rank: self.rank,
        })
    }

    pub fn invert(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
            rank: self.rank,
        }
    }

    /// `u v u^-1 v^-1`.
    pub fn commutator(&self, other: &Word) -> Result<Word> {
        self.concat(other)?.concat(&self.invert())?.concat(&other.invert())
    }

    /// `v u v^-1` where `self = u`.
    pub fn conjugate_by(&self, by: &Word) -> Result<Word> {
        by.concat(self)?.concat(&by.invert())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_runs(f, self.letters.iter().map(|l| (format!("x{}", l.axis), l.sign)))
    }
}

/// Writes a letter sequence as space-separated runs `name^exp`.
pub(crate) fn write_runs<I>(f: &mut fmt::Formatter<'_>, letters: I) -> fmt::Result
where
    I: IntoIterator<Item = (String, Sign)>,
{
    let mut runs: Vec<(String, i64)> = Vec::new();
    for (name, sign) in letters {
        match runs.last_mut() {
            Some((n, e)) if *n == name && (*e > 0) == (sign == Sign::Pos) => *e += sign.as_i64(),
            _ => runs.push((name, sign.as_i64())),
        }
    }
    for (i, (name, e)) in runs.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        if *e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

pub(crate) struct Token {
    pub raw: String,
    pub name: String,
    pub exponent: i64,
}

/// Splits on whitespace or `.`, then peels an optional `^<nonzero integer>` suffix.
pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>> {
    text.split(|c: char| c.is_whitespace() || c == '.')
        .filter(|s| !s.is_empty())
        .map(|raw| {
            let (name, exponent) = match raw.split_once('^') {
                None => (raw, 1i64),
                Some((name, exp)) => {
                    let e: i64 = exp.parse().map_err(|_| Error::Syntax {
                        token: raw.to_string(),
                        reason: "exponent must be a signed integer".into(),
                    })?;
                    if e == 0 {
                        return Err(Error::ZeroExponent(raw.to_string()));
                    }
                    if e.unsigned_abs() > MAX_EXPONENT {
                        return Err(Error::ExponentTooLarge {
                            token: raw.to_string(),
                            exponent: exp.to_string(),
                            limit: MAX_EXPONENT,
                        });
                    }
                    (name, e)
                }
            };
            if name.is_empty() {
                return Err(Error::Syntax {
                    token: raw.to_string(),
                    reason: "missing generator name".into(),
                });
            }
            Ok(Token {
                raw: raw.to_string(),
                name: name.to_string(),
                exponent,
            })
        })
        .collect()
}

pub(crate) fn check_rank(rank: usize) -> Result<()> {
    if rank == 0 {
        Err(Error::ZeroRank)
    } else {
        Ok(())
    }
}

pub(crate) fn check_axis(axis: usize, rank: usize) -> Result<()> {
    if axis == 0 || axis > rank {
        Err(Error::IndexOutOfRange { index: axis, rank })
    } else {
        Ok(())
    }
}

pub(crate) fn check_same_rank(left: usize, right: usize) -> Result<()> {
    if left != right {
        Err(Error::RankMismatch { left, right })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, d: usize) -> Word {
        Word::parse(s, d).unwrap()
    }

    #[test]
    fn parse_examples() {
        let c = w("x1 x2 x1^-1 x2^-1", 2);
        assert_eq!(
            c.letters(),
            &[Letter::pos(1), Letter::pos(2), Letter::neg(1), Letter::neg(2)]
        );
        assert!(w("x1 x1^-1", 2).is_empty());
        assert_eq!(w("x1^3", 1).letters(), &[Letter::pos(1); 3]);
        assert_eq!(w("x1 x2^-2 . x3", 3).len(), 4);
        assert!(w("", 2).is_empty());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Word::parse("x3", 2),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        ));
        assert!(matches!(Word::parse("x1^0", 2), Err(Error::ZeroExponent(_))));
        assert!(matches!(Word::parse("y1", 2), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse("x0", 2), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse("x1^", 2), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse("x1^a", 2), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse("^2", 2), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse("x", 2), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse("x1", 0), Err(Error::ZeroRank)));
        assert!(matches!(
            Word::parse("x1^99999999999", 2),
            Err(Error::ExponentTooLarge { .. })
        ));
    }

    #[test]
    fn reduce_examples() {
        let r = free_reduce_letters([Letter::pos(1), Letter::pos(2), Letter::neg(2), Letter::neg(1)]);
        assert!(r.is_empty());
        let r = free_reduce_letters([Letter::pos(1), Letter::pos(2)]);
        assert_eq!(r, vec![Letter::pos(1), Letter::pos(2)]);
        let r = free_reduce_letters([Letter::pos(1), Letter::pos(1), Letter::neg(1)]);
        assert_eq!(r, vec![Letter::pos(1)]);
    }

    #[test]
    fn concat_and_invert_examples() {
        assert!(w("x1", 2).concat(&w("x1^-1", 2)).unwrap().is_empty());
        assert_eq!(w("x1 x2", 3).concat(&w("x2^-1 x3", 3)).unwrap(), w("x1 x3", 3));
        let e = Word::identity(2).unwrap();
        let x = w("x2 x1^5", 2);
        assert_eq!(e.concat(&x).unwrap(), x);
        assert!(matches!(
            w("x1", 2).concat(&w("x1", 3)),
            Err(Error::RankMismatch { .. })
        ));

        assert_eq!(w("x1 x2", 2).invert(), w("x2^-1 x1^-1", 2));
        assert!(e.invert().is_empty());
        assert_eq!(w("x1^-1", 2).invert(), w("x1", 2));
    }

    #[test]
    fn display_runs() {
        assert_eq!(w("x1 x1 x2^-1 . x2^-1 x3", 3).to_string(), "x1^2 x2^-2 x3");
        assert_eq!(Word::identity(2).unwrap().to_string(), "");
        assert_eq!(w("x1 x2 x1^-1 x2^-1", 2).to_string(), "x1 x2 x1^-1 x2^-1");
    }
}
