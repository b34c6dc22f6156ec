use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::bitset::{ElementSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::linalg::rational_rank;

use super::Matroid;

/// Central hyperplane arrangement given by the normal vectors of its hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    normals: Vec<Vec<BigRational>>,
}

impl Arrangement {
    /// Rejects zero normals and proportional pairs, which would make the matroid non-simple.
    pub fn new(normals: Vec<Vec<BigRational>>) -> Result<Arrangement> {
        let d = normals.first().map_or(0, |r| r.len());
        if d == 0 {
            return Err(Error::InvalidArrangement(
                "ambient dimension must be at least 1".into(),
            ));
        }
        if normals.len() > MAX_ELEMENTS {
            return Err(Error::TooManyElements {
                n: normals.len(),
                max: MAX_ELEMENTS,
            });
        }
        if let Some(i) = normals.iter().position(|r| r.len() != d) {
            return Err(Error::InvalidArrangement(format!(
                "row {} has {} entries, expected {d}",
                i + 1,
                normals[i].len()
            )));
        }
        if let Some(i) = normals.iter().position(|r| r.iter().all(Zero::is_zero)) {
            return Err(Error::NonSimple(format!("row {} is zero", i + 1)));
        }
        for i in 0..normals.len() {
            for j in i + 1..normals.len() {
                if rational_rank(&[normals[i].clone(), normals[j].clone()])? < 2 {
                    return Err(Error::NonSimple(format!(
                        "rows {} and {} are proportional",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Arrangement { normals })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Arrangement> {
        Arrangement::new(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| BigRational::from_integer(BigInt::from(v)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.normals[0].len()
    }

    pub fn normals(&self) -> &[Vec<BigRational>] {
        &self.normals
    }

    fn rank_of(&self, s: ElementSet) -> usize {
        let rows: Vec<Vec<BigRational>> = s.iter().map(|i| self.normals[i].clone()).collect();
        rational_rank(&rows).expect("rows validated")
    }

    /// Minimal linearly dependent row sets, found by sweeping subsets by size
    /// up to rank + 1.
    pub(crate) fn matroid(&self) -> Result<Matroid> {
        let n = self.len();
        let rank = self.rank_of(ElementSet::full(n));
        let mut circuits: Vec<ElementSet> = Vec::new();
        for k in 3..=(rank + 1).min(n) {
            let found: Vec<ElementSet> = ElementSet::subsets_of_size(n, k)
                .filter(|s| !circuits.iter().any(|c| c.is_subset(*s)))
                .filter(|s| self.rank_of(*s) < k)
                .collect();
            circuits.extend(found);
        }
        Ok(Matroid::from_complete_circuits(n, circuits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ix: &[usize]) -> ElementSet {
        ElementSet::from_indices(ix.iter().map(|i| i - 1))
    }

    #[test]
    fn worked_arrangement_circuits() {
        let a = Arrangement::from_integers(&[
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![1, 1, 1, 1],
            vec![1, -1, -1, 1],
        ])
        .unwrap();
        let m = a.matroid().unwrap();
        let mut expected = vec![
            set(&[5, 6, 2, 3]),
            set(&[5, 6, 1, 4]),
            set(&[5, 1, 2, 3, 4]),
            set(&[6, 1, 2, 3, 4]),
        ];
        expected.sort_by(|a, b| a.cmp_len_lex(b));
        assert_eq!(m.circuits(), expected.as_slice());
        assert_eq!(m.rank(), 4);
    }

    #[test]
    fn identity_rows_are_free() {
        let a = Arrangement::from_integers(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert!(a.matroid().unwrap().circuits().is_empty());
    }

    #[test]
    fn vandermonde_rows_are_uniform() {
        let rows: Vec<Vec<i64>> = (1..=5).map(|t| vec![1, t, t * t]).collect();
        let m = Arrangement::from_integers(&rows)
            .unwrap()
            .matroid()
            .unwrap();
        assert_eq!(m.circuits().len(), 5);
        assert!(m.circuits().iter().all(|c| c.len() == 4));
    }

    #[test]
    fn rejects_non_simple_input() {
        assert!(matches!(
            Arrangement::from_integers(&[vec![1, 0], vec![0, 0]]),
            Err(Error::NonSimple(_))
        ));
        assert!(matches!(
            Arrangement::from_integers(&[vec![1, 2], vec![-2, -4]]),
            Err(Error::NonSimple(_))
        ));
        assert!(matches!(
            Arrangement::from_integers(&[vec![1, 2], vec![1]]),
            Err(Error::InvalidArrangement(_))
        ));
        assert!(Arrangement::new(vec![vec![]]).is_err());
    }
}
