//! Exact dense linear algebra over ℚ and prime fields.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exterior::{pow_mod, Coefficient, Domain};

pub trait Field: Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn domain(&self) -> Domain;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn embed(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn to_coefficient(&self, a: &Self::Elem) -> Coefficient;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// `a -= c·b`, the elimination kernel.
    fn sub_assign_scaled(&self, a: &mut Self::Elem, c: &Self::Elem, b: &Self::Elem) {
        if !self.is_zero(b) {
            *a = self.sub(a, &self.mul(c, b));
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn domain(&self) -> Domain {
        Domain::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn embed(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn to_coefficient(&self, a: &BigRational) -> Coefficient {
        Coefficient::Rational(a.clone())
    }
    fn sub_assign_scaled(&self, a: &mut BigRational, c: &BigRational, b: &BigRational) {
        if !b.is_zero() {
            *a -= c * b;
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u32) -> Self {
        PrimeField { p: p as u64 }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn domain(&self) -> Domain {
        Domain::Prime(self.p as u32)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn embed(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        debug_assert!(*a != 0);
        pow_mod(*a, self.p - 2, self.p)
    }
    fn to_coefficient(&self, a: &u64) -> Coefficient {
        Coefficient::Residue {
            value: *a as u32,
            modulus: self.p as u32,
        }
    }
}

/// Runs `$body` with `$f` bound to the field behind a [`Domain`]; integers are rejected.
#[macro_export]
macro_rules! with_field {
    ($domain:expr, |$f:ident| $body:expr) => {
        match $domain {
            $crate::exterior::Domain::Rational => {
                let $f = $crate::linalg::Rationals;
                Ok($body)
            }
            $crate::exterior::Domain::Prime(p) => {
                let $f = $crate::linalg::PrimeField::new(p);
                Ok($body)
            }
            d @ $crate::exterior::Domain::Integer => Err($crate::error::Error::NotAField(d)),
        }
    };
}

/// Rows in semi-echelon form, grown one vector at a time.
///
/// Each stored row has a 1 at its pivot and zeros at the pivots of all rows
/// stored before it.
pub struct Echelon<'f, F: Field> {
    field: &'f F,
    width: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<'f, F: Field> Echelon<'f, F> {
    pub fn new(field: &'f F, width: usize) -> Self {
        Echelon {
            field,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    /// Reduces `row` against the stored rows.
    pub fn reduce(&self, row: &mut [F::Elem]) {
        let f = self.field;
        for (stored, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(stored) {
                f.sub_assign_scaled(x, &c, y);
            }
        }
    }

    /// Adds `row` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut row: Vec<F::Elem>) -> bool {
        debug_assert_eq!(row.len(), self.width);
        if self.is_full() {
            return false;
        }
        self.reduce(&mut row);
        let f = self.field;
        let Some(p) = row.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&row[p]);
        for x in row.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        self.rows.push(row);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, row: &[F::Elem]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().all(|x| self.field.is_zero(x))
    }
}

/// Reduced row echelon form: returns the nonzero rows (pivot entries equal to 1,
/// pivot columns otherwise zero) ordered by pivot column, and the pivot columns.
pub fn rref<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> (Vec<Vec<F::Elem>>, Vec<usize>) {
    let width = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..width {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(next, found);
        let inv = field.inv(&rows[next][col]);
        for x in rows[next].iter_mut() {
            if !field.is_zero(x) {
                *x = field.mul(x, &inv);
            }
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || field.is_zero(&row[col]) {
                continue;
            }
            let c = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                field.sub_assign_scaled(x, &c, y);
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    (rows, pivots)
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let width = rows.first().map_or(0, |r| r.len());
    let mut ech = Echelon::new(field, width);
    for r in rows {
        ech.insert(r.clone());
        if ech.is_full() {
            break;
        }
    }
    ech.rank()
}

/// Rank of a rational matrix given row by row.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> Result<usize> {
    let width = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::InvalidArrangement("rows of unequal length".into()));
    }
    Ok(rank(&Rationals, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        Rationals.embed(v)
    }

    #[test]
    fn rank_over_q_and_f2_differ_on_parity_matrix() {
        // Rows of the incidence matrix of a triangle: rank 3 over Q, 2 over F2.
        let int_rows = [[1, 1, 0], [0, 1, 1], [1, 0, 1]];
        let rq: Vec<Vec<BigRational>> = int_rows
            .iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect();
        assert_eq!(rank(&Rationals, &rq), 3);
        let f2 = PrimeField::new(2);
        let r2: Vec<Vec<u64>> = int_rows
            .iter()
            .map(|r| r.iter().map(|&v| f2.embed(v)).collect())
            .collect();
        assert_eq!(rank(&f2, &r2), 2);
    }

    #[test]
    fn rref_is_reduced() {
        let f = PrimeField::new(5);
        let rows = vec![vec![2, 4, 1], vec![1, 2, 3], vec![0, 0, 1]];
        let (r, piv) = rref(&f, rows);
        assert_eq!(piv, vec![0, 2]);
        assert_eq!(r, vec![vec![1, 2, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::new(&Rationals, 3);
        assert!(e.insert(vec![q(1), q(2), q(3)]));
        assert!(e.insert(vec![q(0), q(1), q(1)]));
        assert!(!e.insert(vec![q(2), q(5), q(7)]));
        assert!(e.contains(&[q(1), q(3), q(4)]));
        assert!(!e.contains(&[q(0), q(0), q(1)]));
        assert_eq!(e.rank(), 2);
    }
}
