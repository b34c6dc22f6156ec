use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    /// Builds from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, data: Vec<Vec<BigInt>>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i][j] = v;
    }

    /// Multiplies every row by `k`.
    pub fn scaled(&self, k: i64) -> IntMatrix {
        let k = BigInt::from(k);
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| r.iter().map(|v| v * &k).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i][j] += a * &other.data[k][j];
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j][i] = self.data[i][j].clone();
            }
        }
        out
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in &mut self.data {
                r.swap(a, b);
            }
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in &self.data {
            let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Elementary divisors `d₁ | d₂ | … | d_r` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub divisors: Vec<BigInt>,
    pub rows: usize,
    pub cols: usize,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    /// Divisors greater than one: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.divisors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }

    pub fn all_unit(&self) -> bool {
        self.divisors.iter().all(|d| d.is_one())
    }

    /// Free rank of the cokernel `ℤ^cols / rowspan`.
    pub fn cokernel_free_rank(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn divisor_chain_holds(&self) -> bool {
        self.divisors.iter().all(|d| d.is_positive())
            && self.divisors.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }
}

/// Smith normal form by unimodular row and column operations, pivoting on the
/// entry of least absolute value.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut divisors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&a, t) else {
            break;
        };
        a.data.swap(t, pi);
        a.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            // clear column t below the pivot
            for i in t + 1..rows {
                if a.data[i][t].is_zero() {
                    continue;
                }
                let q = a.data[i][t].div_floor(&a.data[t][t]);
                subtract_row(&mut a, i, t, &q);
                if !a.data[i][t].is_zero() {
                    dirty = true;
                }
            }
            // clear row t right of the pivot
            for j in t + 1..cols {
                if a.data[t][j].is_zero() {
                    continue;
                }
                let q = a.data[t][j].div_floor(&a.data[t][t]);
                for i in t..rows {
                    let v = &q * &a.data[i][t];
                    if !v.is_zero() {
                        a.data[i][j] -= v;
                    }
                }
                if !a.data[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pi, pj) = min_abs_entry_cross(&a, t);
                a.data.swap(t, pi);
                a.swap_cols(t, pj);
                continue;
            }
            // pivot must divide the remaining block
            let pivot = a.data[t][t].clone();
            let offender =
                (t + 1..rows).find(|&i| a.data[i][t + 1..].iter().any(|v| !(v % &pivot).is_zero()));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let v = a.data[i][j].clone();
                        a.data[t][j] += v;
                    }
                }
                None => break,
            }
        }
        divisors.push(a.data[t][t].abs());
        t += 1;
    }
    SnfResult {
        divisors,
        rows,
        cols,
    }
}

fn subtract_row(a: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (src, dst) = if source < target {
        let (lo, hi) = a.data.split_at_mut(target);
        (&lo[source], &mut hi[0])
    } else {
        let (lo, hi) = a.data.split_at_mut(source);
        (&hi[0], &mut lo[target])
    };
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

fn min_abs_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = &a.data[i][j];
            if v.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, _, b)| v.abs() < *b) {
                best = Some((i, j, v.abs()));
                if v.is_one() || (-v).is_one() {
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

// Smallest nonzero entry in row t or column t (the pivot itself included).
fn min_abs_entry_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t, a.data[t][t].abs());
    let mut consider = |i: usize, j: usize, v: &BigInt| {
        if !v.is_zero() && (best.2.is_zero() || v.abs() < best.2) {
            best = (i, j, v.abs());
        }
    };
    for i in t..a.rows {
        consider(i, t, &a.data[i][t]);
    }
    for j in t..a.cols {
        consider(t, j, &a.data[t][j]);
    }
    (best.0, best.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divisors(rows: &[Vec<i64>]) -> Vec<i64> {
        smith_normal_form(&IntMatrix::from_i64(rows))
            .divisors
            .iter()
            .map(|d| d.try_into().unwrap())
            .collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(divisors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(
            divisors(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            vec![1, 1, 1]
        );
        assert_eq!(divisors(&[vec![2]]), vec![2]);
        assert_eq!(divisors(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
        assert_eq!(
            divisors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]),
            vec![2, 6, 12]
        );
    }

    #[test]
    fn empty_matrix() {
        let r = smith_normal_form(&IntMatrix::zeros(0, 4));
        assert_eq!(r.rank(), 0);
        assert_eq!(r.cokernel_free_rank(), 4);
    }

    #[test]
    fn scaled_identity_reports_torsion() {
        let r = smith_normal_form(&IntMatrix::identity(3).scaled(2));
        assert_eq!(r.torsion(), vec![BigInt::from(2); 3]);
        assert!(!r.all_unit());
        assert!(r.divisor_chain_holds());
    }
}
