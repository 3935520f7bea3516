//! Integer polynomials, polynomial matrices, and the valuation
//! `B ↦ deg det(B)` on their column bases.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::set::{subsets_of_size, ElementSet, GroundSet};
use crate::valuation::Valuation;

/// A polynomial in `t` with integer coefficients, lowest degree first and no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly(Vec<i64>);

impl Poly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: i64) -> Self {
        Poly::new(alloc::vec![c])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> i64 {
        *self.0.last().unwrap_or(&0)
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        let n = self.0.len().max(other.0.len());
        let mut out = alloc::vec![0i64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = other.0.get(i).copied().unwrap_or(0);
            *o = a.checked_add(b).ok_or(Error::Overflow)?;
        }
        Ok(Poly::new(out))
    }

    pub fn neg(&self) -> Result<Poly> {
        self.0
            .iter()
            .map(|c| c.checked_neg().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Poly)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg()?)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero());
        }
        let mut out = alloc::vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                let p = a.checked_mul(*b).ok_or(Error::Overflow)?;
                out[i + j] = out[i + j].checked_add(p).ok_or(Error::Overflow)?;
            }
        }
        Ok(Poly::new(out))
    }

    /// `self / divisor` when the quotient lies in `Z[t]` and the division is
    /// exact; anything else is reported as an internal error.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let fail = || Error::Theorem(String::from("inexact polynomial division"));
        let dd = divisor.degree().ok_or_else(fail)?;
        let mut rem = self.0.clone();
        let Some(sd) = self.degree() else {
            return Ok(Poly::zero());
        };
        if sd < dd {
            return Err(fail());
        }
        let mut quot = alloc::vec![0i64; sd - dd + 1];
        let lead = divisor.lead();
        for k in (0..=sd - dd).rev() {
            let top = rem[k + dd];
            if top % lead != 0 {
                return Err(fail());
            }
            let q = top / lead;
            quot[k] = q;
            if q != 0 {
                for (j, c) in divisor.0.iter().enumerate() {
                    let p = q.checked_mul(*c).ok_or(Error::Overflow)?;
                    rem[k + j] = rem[k + j].checked_sub(p).ok_or(Error::Overflow)?;
                }
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(fail());
        }
        Ok(Poly::new(quot))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if *c < 0 { '-' } else { '+' })?;
            } else if *c < 0 {
                write!(f, "-")?;
            }
            let a = c.unsigned_abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{a}t^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination with row pivoting.
pub fn determinant(rows: &[Vec<Poly>]) -> Result<Poly> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidMatrix(String::from("determinant of a non-square matrix")));
    }
    if n == 0 {
        return Ok(Poly::constant(1));
    }
    let mut m: Vec<Vec<Poly>> = rows.to_vec();
    let mut negate = false;
    let mut prev = Poly::constant(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Poly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j])?.sub(&m[i][k].mul(&m[k][j])?)?;
                m[i][j] = num.exact_div(&prev)?;
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        Ok(det)
    }
}

/// An `n × m` matrix of integer polynomials with labelled columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    labels: Vec<String>,
    rows: Vec<Vec<Poly>>,
}

impl PolyMatrix {
    pub fn new(labels: Vec<String>, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let m = labels.len();
        if rows.is_empty() {
            return Err(Error::InvalidMatrix(String::from("no rows")));
        }
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidMatrix(String::from("row length differs from column count")));
        }
        if rows.len() > m {
            return Err(Error::InvalidMatrix(String::from("more rows than columns")));
        }
        Ok(PolyMatrix { labels, rows })
    }

    /// Builds a matrix from columns given as coefficient lists, row by row
    /// inside each column.
    pub fn from_columns(labels: &[&str], columns: &[&[&[i64]]]) -> Result<Self> {
        let n = columns.first().map_or(0, |c| c.len());
        if columns.iter().any(|c| c.len() != n) {
            return Err(Error::InvalidMatrix(String::from("ragged columns")));
        }
        let rows = (0..n)
            .map(|i| columns.iter().map(|c| Poly::new(c[i].to_vec())).collect())
            .collect();
        PolyMatrix::new(labels.iter().map(|l| String::from(*l)).collect(), rows)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> usize {
        self.labels.len()
    }

    /// The square submatrix on the given columns.
    pub fn submatrix(&self, columns: ElementSet) -> Vec<Vec<Poly>> {
        self.rows
            .iter()
            .map(|r| columns.iter().map(|c| r[c].clone()).collect())
            .collect()
    }
}

/// `ω(B) = deg det(B)` over the column subsets with nonzero determinant.
pub fn gen_representable(matrix: &PolyMatrix) -> Result<Valuation> {
    let ground = Arc::new(GroundSet::new(matrix.labels.iter().cloned())?);
    let n = matrix.row_count();
    let mut pairs = Vec::new();
    for cols in subsets_of_size(matrix.column_count(), n) {
        let det = determinant(&matrix.submatrix(cols))?;
        if let Some(d) = det.degree() {
            pairs.push((cols, d as i64));
        }
    }
    if pairs.is_empty() {
        return Err(Error::Degenerate(String::from("every maximal minor vanishes")));
    }
    Valuation::from_pairs(ground, n, pairs)
}
