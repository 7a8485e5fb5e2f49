//! Symmetric matrices of polynomials (Bezoutians, Hessians) and exact
//! rational linear algebra for the PSD tests.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::poly::Polynomial;

/// A square matrix of polynomials with entries[i][j] = entries[j][i] as
/// canonical polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPolyMatrix {
    dim: usize,
    entries: Vec<Polynomial>, // row-major
}

impl SymmetricPolyMatrix {
    pub fn new(dim: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::ArityMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        let m = SymmetricPolyMatrix { dim, entries };
        for i in 0..dim {
            for j in (i + 1)..dim {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::InvariantViolation(format!(
                        "matrix entry ({i},{j}) differs from ({j},{i})"
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    /// Evaluates every entry at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<Vec<Vec<BigRational>>> {
        let scalars: Vec<Scalar> = point.iter().cloned().map(Scalar::Rat).collect();
        let mut rows = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let mut row = Vec::with_capacity(self.dim);
            for j in 0..self.dim {
                let v = self.get(i, j).evaluate(&scalars)?;
                row.push(v.as_rational().clone());
            }
            rows.push(row);
        }
        Ok(rows)
    }
}

/// Exact determinant by Gaussian elimination with rational pivots.
pub fn det_rational(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero());
        let Some(p) = pivot else {
            return BigRational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pv = a[col][col].clone();
        det *= &pv;
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pv;
            for c in col..n {
                let v = &a[r][c] - &f * &a[col][c];
                a[r][c] = v;
            }
        }
    }
    det
}

/// PSD test for a symmetric rational matrix: nonnegativity of ALL principal
/// minors (every nonempty subset of rows/columns), which characterizes
/// positive semidefiniteness exactly. 2^dim - 1 determinants.
pub fn psd_all_principal_minors(m: &[Vec<BigRational>]) -> bool {
    let n = m.len();
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub: Vec<Vec<BigRational>> = idx
            .iter()
            .map(|&r| idx.iter().map(|&c| m[r][c].clone()).collect())
            .collect();
        if det_rational(&sub).is_negative() {
            return false;
        }
    }
    true
}
