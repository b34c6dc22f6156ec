use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

use super::IntMatrix;

/// Row-echelon basis of the ℤ-span of a set of integer vectors.
///
/// Rows are kept sorted by pivot column; pivots are positive and every row is
/// zero left of its pivot. Entries above pivots are reduced modulo the pivot
/// after each insertion.
#[derive(Clone, Debug)]
pub struct LatticeBasis {
    width: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl LatticeBasis {
    pub fn new(width: usize) -> Self {
        LatticeBasis {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<'a, I>(width: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = &'a [BigInt]>,
    {
        let mut b = LatticeBasis::new(width);
        for r in rows {
            b.insert(r.to_vec());
        }
        b
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.width, self.rows.clone())
    }

    /// Adds `v` to the generating set.
    pub fn insert(&mut self, mut v: Vec<BigInt>) {
        debug_assert_eq!(v.len(), self.width);
        loop {
            let Some(c) = v.iter().position(|x| !x.is_zero()) else {
                return;
            };
            match self.pivots.binary_search(&c) {
                Err(slot) => {
                    if v[c].is_negative() {
                        v.iter_mut().for_each(|x| *x = -&*x);
                    }
                    self.rows.insert(slot, v);
                    self.pivots.insert(slot, c);
                    self.reduce_above(slot);
                    return;
                }
                Ok(k) => {
                    let b = &self.rows[k];
                    if (&v[c] % &b[c]).is_zero() {
                        let q = &v[c] / &b[c];
                        for (x, y) in v.iter_mut().zip(b) {
                            if !y.is_zero() {
                                *x -= &q * y;
                            }
                        }
                    } else {
                        // [b; v] ← [[s, t], [v_c/g, -b_c/g]]·[b; v], unimodular
                        let e = b[c].extended_gcd(&v[c]);
                        let (vc, bc) = (&v[c] / &e.gcd, &b[c] / &e.gcd);
                        let new_b: Vec<BigInt> =
                            b.iter().zip(&v).map(|(x, y)| &e.x * x + &e.y * y).collect();
                        let new_v: Vec<BigInt> =
                            b.iter().zip(&v).map(|(x, y)| &vc * x - &bc * y).collect();
                        let mut new_b = new_b;
                        if new_b[c].is_negative() {
                            new_b.iter_mut().for_each(|x| *x = -&*x);
                        }
                        self.rows[k] = new_b;
                        self.reduce_above(k);
                        v = new_v;
                    }
                }
            }
        }
    }

    // Reduce the entries of earlier rows in the pivot column of row k.
    fn reduce_above(&mut self, k: usize) {
        let p = self.pivots[k];
        let (above, rest) = self.rows.split_at_mut(k);
        let pivot_row = &rest[0];
        for row in above {
            if row[p].is_zero() {
                continue;
            }
            let q = row[p].div_floor(&pivot_row[p]);
            if q.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(pivot_row) {
                if !y.is_zero() {
                    *x -= &q * y;
                }
            }
        }
    }

    /// Integer coordinates of `v` in this basis, or an invariant error when `v`
    /// is not in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let (q, r) = rest[p].div_rem(&row[p]);
            if !r.is_zero() {
                return Err(Error::Invariant(format!(
                    "vector not integral over lattice basis (column {p})"
                )));
            }
            if !q.is_zero() {
                for (x, y) in rest.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &q * y;
                    }
                }
            }
            coords.push(q);
        }
        if rest.iter().any(|x| !x.is_zero()) {
            return Err(Error::Invariant("vector outside the lattice span".into()));
        }
        Ok(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gcd_step_builds_correct_lattice() {
        let mut b = LatticeBasis::new(2);
        b.insert(v(&[4, 1]));
        b.insert(v(&[6, 0]));
        // lattice spanned by (4,1),(6,0) has determinant 6
        assert_eq!(b.rank(), 2);
        let det = &b.rows()[0][0] * &b.rows()[1][1] - &b.rows()[0][1] * &b.rows()[1][0];
        assert_eq!(det.abs(), BigInt::from(6));
        let c = b.coordinates(&v(&[10, 1])).unwrap();
        let back: Vec<BigInt> = (0..2)
            .map(|j| (0..2).map(|i| &c[i] * &b.rows()[i][j]).sum())
            .collect();
        assert_eq!(back, v(&[10, 1]));
        assert!(b.coordinates(&v(&[1, 0])).is_err());
    }

    #[test]
    fn dependent_vectors_do_not_raise_rank() {
        let b = LatticeBasis::from_rows(
            3,
            [v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])]
                .iter()
                .map(|r| r.as_slice()),
        );
        assert_eq!(b.rank(), 2);
    }
}
