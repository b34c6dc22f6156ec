//! Independent reference computations for the integration tests. Nothing here
//! calls into the library's linear algebra, circuit or basis code.

#![allow(dead_code, clippy::needless_range_loop, clippy::manual_contains)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub const P: i64 = 1_000_003;

/// Rank over ℚ by fraction Gaussian elimination.
pub fn q_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows.to_vec();
    let width = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..width {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for i in rank + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &pivot;
            for j in c..width {
                let v = &f * &a[rank][j];
                a[i][j] -= v;
            }
        }
        rank += 1;
    }
    rank
}

pub fn int_rows_to_q(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect()
}

/// Rank modulo the prime `p`.
pub fn rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(p)).collect())
        .collect();
    let width = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..width {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for i in rank + 1..a.len() {
            if a[i][c] == 0 {
                continue;
            }
            let f = a[i][c] * inv % p;
            for j in c..width {
                a[i][j] = (a[i][j] - f * a[rank][j]).rem_euclid(p);
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Minimal dependent subsets of `0..n` under a rank function, sorted by
/// (size, bitmask).
pub fn brute_circuits(n: usize, rank: impl Fn(u64) -> usize) -> Vec<u64> {
    let mut dependent: Vec<u64> = (1u64..1 << n)
        .filter(|&s| rank(s) < s.count_ones() as usize)
        .collect();
    dependent.sort_by_key(|&s| (s.count_ones(), s));
    let mut circuits: Vec<u64> = Vec::new();
    for s in dependent {
        if !circuits.iter().any(|&c| c & s == c) {
            circuits.push(s);
        }
    }
    circuits
}

/// Rank of the rows of `matrix` selected by `mask`, over ℚ.
pub fn subset_rank(matrix: &[Vec<i64>], mask: u64) -> usize {
    let rows: Vec<Vec<i64>> = (0..matrix.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| matrix[i].clone())
        .collect();
    q_rank(&int_rows_to_q(&rows))
}

/// Sign of the product `e_A ∧ e_B` for disjoint index sets: (−1)^{#{a∈A, b∈B : a > b}}.
pub fn wedge_sign(a: u64, b: u64) -> i64 {
    let mut inversions = 0;
    for x in 0..64 {
        if a >> x & 1 == 1 {
            inversions += (b & ((1u64 << x) - 1)).count_ones();
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `∂(e_C)` as (monomial mask, coefficient) pairs.
pub fn boundary_terms(c: u64) -> Vec<(u64, i64)> {
    let mut out = Vec::new();
    let mut k = 0;
    for i in 0..64 {
        if c >> i & 1 == 1 {
            out.push((c & !(1u64 << i), if k % 2 == 0 { 1 } else { -1 }));
            k += 1;
        }
    }
    out
}

/// Degree-`q` monomials of `n` generators, in increasing bitmask order.
pub fn monomials(n: usize, q: usize) -> Vec<u64> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == q)
        .collect()
}

/// Dense rows `e_S ∧ ∂(e_C)` spanning `I^q`; with `decomposable`, only `S ≠ ∅`
/// (spanning `(Λ⁺I)^q`).
pub fn span_rows(n: usize, circuits: &[u64], q: usize, decomposable: bool) -> Vec<Vec<i64>> {
    let cols = monomials(n, q);
    let index = |m: u64| cols.binary_search(&m).expect("degree-q monomial");
    let mut rows = Vec::new();
    for &c in circuits {
        let k = c.count_ones() as usize;
        if k > q + 1 || (decomposable && k == q + 1) {
            continue;
        }
        for s in monomials(n, q + 1 - k) {
            // e_S ∧ ∂(e_C) vanishes once S meets C in two or more elements
            if (s & c).count_ones() > 1 {
                continue;
            }
            let mut row = vec![0i64; cols.len()];
            for (m, coeff) in boundary_terms(c) {
                if s & m == 0 {
                    row[index(s | m)] += wedge_sign(s, m) * coeff;
                }
            }
            rows.push(row);
        }
    }
    rows
}

/// `dim (I/Λ⁺I)^q` over 𝔽_P from the reference spanning sets.
pub fn quotient_dim(n: usize, circuits: &[u64], q: usize) -> usize {
    rank_mod(&span_rows(n, circuits, q, false), P) - rank_mod(&span_rows(n, circuits, q, true), P)
}

/// Determinant by fraction-free Bareiss elimination.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(s) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// gcd of all `k × k` minors (zero when every minor vanishes).
pub fn minors_gcd(a: &[Vec<BigInt>], k: usize) -> BigInt {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut g = BigInt::zero();
    for r in combinations(rows, k) {
        for c in combinations(cols, k) {
            let sub: Vec<Vec<BigInt>> = r
                .iter()
                .map(|&i| c.iter().map(|&j| a[i][j].clone()).collect())
                .collect();
            g = g.gcd(&bareiss_det(sub));
        }
    }
    g.abs()
}

/// Chordless cycles of a simple graph by brute force over edge subsets,
/// counted by length.
pub fn chordless_cycle_counts(vertices: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let e = edges.len();
    let mut counts = vec![0; e + 1];
    for mask in 1u64..1 << e {
        let chosen: Vec<(usize, usize)> = (0..e)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| edges[i])
            .collect();
        let mut degree = vec![0; vertices];
        for &(a, b) in &chosen {
            degree[a] += 1;
            degree[b] += 1;
        }
        if degree.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        let on: Vec<usize> = (0..vertices).filter(|&v| degree[v] == 2).collect();
        // connected?
        let mut seen = vec![on[0]];
        let mut frontier = vec![on[0]];
        while let Some(v) = frontier.pop() {
            for &(a, b) in &chosen {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen.contains(&y) {
                        seen.push(y);
                        frontier.push(y);
                    }
                }
            }
        }
        if seen.len() != on.len() {
            continue;
        }
        let induced = edges
            .iter()
            .filter(|(a, b)| on.contains(a) && on.contains(b))
            .count();
        if induced == chosen.len() {
            counts[chosen.len()] += 1;
        }
    }
    counts
}
