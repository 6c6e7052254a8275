use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::words::check_same_rank;

/// An integer vector in `Z^d`. Ordering is lexicographic in the coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<BigInt>);

impl Point {
    pub fn origin(rank: usize) -> Self {
        Point(vec![BigInt::zero(); rank])
    }

    pub fn unit(rank: usize, axis: usize) -> Self {
        let mut p = Point::origin(rank);
        p.0[axis - 1] = BigInt::from(1);
        p
    }

    pub fn from_coords<I, T>(coords: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Point(coords.into_iter().map(Into::into).collect())
    }

    /// Parses `a,b,c` (commas, optional surrounding whitespace).
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::BadVector(text.to_string()));
        }
        trimmed
            .split(',')
            .map(|s| s.trim().parse::<BigInt>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Point)
            .map_err(|_| Error::BadVector(text.to_string()))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    /// 1-based coordinate accessor.
    pub fn coord(&self, axis: usize) -> &BigInt {
        &self.0[axis - 1]
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `self + s * e_axis`.
    pub fn step(&self, axis: usize, s: i64) -> Point {
        let mut p = self.clone();
        p.0[axis - 1] += s;
        p
    }

    pub fn checked_add(&self, other: &Point) -> Result<Point> {
        check_same_rank(self.rank(), other.rank())?;
        Ok(self + other)
    }

    /// L1 norm.
    pub fn l1(&self) -> BigInt {
        self.0.iter().map(|c| c.abs()).sum()
    }
}

impl<'a> Add<&'a Point> for &'a Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        debug_assert_eq!(self.rank(), rhs.rank());
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a Point> for &'a Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        debug_assert_eq!(self.rank(), rhs.rank());
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_vectors() {
        assert_eq!(Point::parse("1,-2").unwrap(), Point::from_coords([1, -2]));
        assert_eq!(Point::parse(" 3 , 0 ,4").unwrap(), Point::from_coords([3, 0, 4]));
        assert!(Point::parse("").is_err());
        assert!(Point::parse("1,,2").is_err());
        assert!(Point::parse("1;2").is_err());
        let big = Point::parse("123456789012345678901234567890,0").unwrap();
        assert_eq!(big.coord(1).to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn ordering_is_lexicographic() {
        let a = Point::from_coords([0, 5]);
        let b = Point::from_coords([1, -5]);
        assert!(a < b);
        assert!(Point::from_coords([1, -6]) < b);
    }
}
