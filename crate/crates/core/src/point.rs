//! Integer and rational vectors indexed by ground-set positions.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::set::{ElementSet, GroundSet};

pub type Rational = Ratio<i64>;

/// An integer vector over the ground set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Point(Vec<i64>);

impl Point {
    pub fn new(coords: Vec<i64>) -> Self {
        Point(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Point(alloc::vec![0; n])
    }

    pub fn constant(n: usize, c: i64) -> Self {
        Point(alloc::vec![c; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn get(&self, e: usize) -> i64 {
        self.0[e]
    }

    pub fn check_dim(&self, n: usize) -> Result<()> {
        if self.0.len() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: n, found: self.0.len() })
        }
    }

    /// `Σ_{e ∈ set} x(e)`, widened so it cannot overflow for `|set| ≤ 64`.
    pub fn sum_over(&self, set: ElementSet) -> i128 {
        set.iter().map(|e| self.0[e] as i128).sum()
    }

    /// `x + k·1`.
    pub fn shifted(&self, k: i64) -> Result<Point> {
        self.0
            .iter()
            .map(|&c| c.checked_add(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Point)
    }

    /// `x + k·1_set`.
    pub fn add_on(&self, set: ElementSet, k: i64) -> Result<Point> {
        let mut out = self.0.clone();
        for e in set.iter() {
            out[e] = out[e].checked_add(k).ok_or(Error::Overflow)?;
        }
        Ok(Point(out))
    }

    pub fn checked_add(&self, other: &Point) -> Result<Point> {
        other.check_dim(self.len())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Point)
    }

    pub fn checked_sub(&self, other: &Point) -> Result<Point> {
        other.check_dim(self.len())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Point)
    }

    pub fn inf(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn sup(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Point) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `label=value` pairs in ground order.
    pub fn format(&self, ground: &GroundSet) -> String {
        let mut out = String::new();
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(ground.label(i));
            out.push('=');
            out.push_str(&alloc::format!("{c}"));
        }
        out
    }

    pub fn to_rational(&self) -> RationalPoint {
        RationalPoint(self.0.iter().map(|&c| Rational::from_integer(c)).collect())
    }
}

impl From<Vec<i64>> for Point {
    fn from(v: Vec<i64>) -> Self {
        Point(v)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An exact rational vector over the ground set.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RationalPoint(Vec<Rational>);

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalPoint(coords)
    }

    pub fn zeros(n: usize) -> Self {
        RationalPoint(alloc::vec![Rational::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, e: usize) -> Rational {
        self.0[e]
    }

    pub fn check_dim(&self, n: usize) -> Result<()> {
        if self.0.len() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: n, found: self.0.len() })
        }
    }

    pub fn sum_over(&self, set: ElementSet) -> Rational {
        set.iter().map(|e| self.0[e]).fold(Rational::zero(), |a, b| a + b)
    }

    pub fn floor(&self) -> Point {
        Point(self.0.iter().map(|c| c.floor().to_integer()).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// The integer point, if every coordinate is integral.
    pub fn to_integer(&self) -> Option<Point> {
        self.is_integral().then(|| self.floor())
    }

    pub fn neg(&self) -> RationalPoint {
        RationalPoint(self.0.iter().map(|c| -c).collect())
    }

    pub fn format(&self, ground: &GroundSet) -> String {
        let mut out = String::new();
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(ground.label(i));
            out.push('=');
            out.push_str(&alloc::format!("{c}"));
        }
        out
    }
}

impl From<Vec<Rational>> for RationalPoint {
    fn from(v: Vec<Rational>) -> Self {
        RationalPoint(v)
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
