//! Dense exact matrices, stored column-major.
//!
//! Everything here is plain Gaussian elimination, done exactly: over the
//! rationals every row operation renormalizes (num-rational keeps lowest
//! terms), over GF(q) all products are reduced mod q. 0xN and Nx0 matrices
//! are first-class citizens; an empty column set has rank 0.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_linalg::scalar::{Domain, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    domain: Domain,
    rows: usize,
    cols: Vec<Vec<Scalar>>,
}

impl ExactMatrix {
    /// A matrix with no columns yet.
    pub fn empty(domain: Domain, rows: usize) -> ExactMatrix {
        ExactMatrix {
            domain,
            rows,
            cols: Vec::new(),
        }
    }

    /// Builds from explicit columns, validating lengths and domain membership.
    pub fn from_columns(
        domain: Domain,
        rows: usize,
        cols: Vec<Vec<Scalar>>,
    ) -> Result<ExactMatrix> {
        for col in &cols {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    got: col.len(),
                });
            }
            for s in col {
                if !domain.contains(s) {
                    return Err(Error::DomainMismatch);
                }
            }
        }
        Ok(ExactMatrix { domain, rows, cols })
    }

    /// The n x n identity.
    pub fn identity(domain: Domain, n: usize) -> ExactMatrix {
        let cols = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| if i == j { domain.one() } else { domain.zero() })
                    .collect()
            })
            .collect();
        ExactMatrix {
            domain,
            rows: n,
            cols,
        }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &[Scalar] {
        &self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.cols[j][i]
    }

    pub fn set_col(&mut self, j: usize, col: Vec<Scalar>) -> Result<()> {
        if col.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: col.len(),
            });
        }
        for s in &col {
            if !self.domain.contains(s) {
                return Err(Error::DomainMismatch);
            }
        }
        self.cols[j] = col;
        Ok(())
    }

    pub fn remove_col(&mut self, j: usize) {
        self.cols.remove(j);
    }

    pub fn is_zero_col(&self, j: usize) -> bool {
        self.cols[j].iter().all(|s| self.domain.is_zero(s))
    }

    /// Rank of the submatrix given by `cols` (duplicates contribute nothing).
    pub fn rank(&self, cols: &[usize]) -> usize {
        let mut elim = Eliminator::new(&self.domain, self.rows);
        for &j in cols {
            elim.insert(self.cols[j].clone());
        }
        elim.rank()
    }

    pub fn rank_all(&self) -> usize {
        let all: Vec<usize> = (0..self.ncols()).collect();
        self.rank(&all)
    }

    /// Exact determinant of the square submatrix `rows x cols`, by Gaussian
    /// elimination with division (both domains are fields).
    pub fn det(&self, rows: &[usize], cols: &[usize]) -> Result<Scalar> {
        if rows.len() != cols.len() {
            return Err(Error::NotSquare {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        let d = &self.domain;
        let k = rows.len();
        // a[i][j], working copy
        let mut a: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| self.cols[j][i].clone()).collect())
            .collect();
        let mut det = d.one();
        for pivot in 0..k {
            let row_with_pivot = (pivot..k).find(|&i| !d.is_zero(&a[i][pivot]));
            let Some(r) = row_with_pivot else {
                return Ok(d.zero());
            };
            if r != pivot {
                a.swap(r, pivot);
                det = d.neg(&det);
            }
            let p = a[pivot][pivot].clone();
            det = d.mul(&det, &p);
            let p_inv = d.inv(&p)?;
            for i in pivot + 1..k {
                if d.is_zero(&a[i][pivot]) {
                    continue;
                }
                let f = d.mul(&a[i][pivot], &p_inv);
                for j in pivot..k {
                    let sub = d.mul(&f, &a[pivot][j]);
                    a[i][j] = d.sub(&a[i][j], &sub);
                }
            }
        }
        Ok(det)
    }

    /// Selects a maximal independent subset of rows (greedy in row order)
    /// and returns the matrix restricted to those rows, plus their indices.
    /// Column subsets keep their rank under this restriction.
    pub fn row_basis(&self) -> (ExactMatrix, Vec<usize>) {
        let mut elim = Eliminator::new(&self.domain, self.ncols());
        let mut keep = Vec::new();
        for i in 0..self.rows {
            let row: Vec<Scalar> = (0..self.ncols()).map(|j| self.cols[j][i].clone()).collect();
            if elim.insert(row) {
                keep.push(i);
            }
        }
        let cols = self
            .cols
            .iter()
            .map(|c| keep.iter().map(|&i| c[i].clone()).collect())
            .collect();
        (
            ExactMatrix {
                domain: self.domain.clone(),
                rows: keep.len(),
                cols,
            },
            keep,
        )
    }

    /// Is `target` in the span of the given columns?
    pub fn in_span(&self, gens: &[usize], target: &[Scalar]) -> Result<bool> {
        if target.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: target.len(),
            });
        }
        let mut elim = Eliminator::new(&self.domain, self.rows);
        for &j in gens {
            elim.insert(self.cols[j].clone());
        }
        let mut t = target.to_vec();
        elim.reduce(&mut t);
        Ok(t.iter().all(|s| self.domain.is_zero(s)))
    }

    /// Maps a rational matrix to GF(q): entry a/b becomes a * b^-1 mod q.
    /// Fails with a retryable error if any denominator vanishes mod q.
    pub fn mod_reduce(&self, q: &BigUint) -> Result<ExactMatrix> {
        if !self.domain.is_rational() {
            return Err(Error::DomainMismatch);
        }
        let target = Domain::prime_field(q.clone())?;
        let qi = BigInt::from(q.clone());
        let mut cols = Vec::with_capacity(self.ncols());
        for (j, col) in self.cols.iter().enumerate() {
            let mut out = Vec::with_capacity(self.rows);
            for (i, s) in col.iter().enumerate() {
                let Scalar::Rational(r) = s else {
                    return Err(Error::DomainMismatch);
                };
                let den = r.denom().mod_floor(&qi);
                if den.is_zero() {
                    return Err(Error::DenominatorCollision {
                        row: i,
                        col: j,
                        modulus: q.clone(),
                    });
                }
                let num = target.from_bigint(r.numer());
                let den = target.from_bigint(&den);
                out.push(target.div(&num, &den)?);
            }
            cols.push(out);
        }
        Ok(ExactMatrix {
            domain: target,
            rows: self.rows,
            cols,
        })
    }

    /// Reads a GF(q) matrix as an integer matrix over the rationals
    /// (each residue becomes its canonical representative in [0, q)).
    pub fn lift_to_rational(&self) -> Result<ExactMatrix> {
        if self.domain.is_rational() {
            return Err(Error::DomainMismatch);
        }
        let target = Domain::Rational;
        let cols = self
            .cols
            .iter()
            .map(|col| {
                col.iter()
                    .map(|s| {
                        let Scalar::Residue(r) = s else { unreachable!() };
                        target.from_bigint(&BigInt::from(r.clone()))
                    })
                    .collect()
            })
            .collect();
        Ok(ExactMatrix {
            domain: target,
            rows: self.rows,
            cols,
        })
    }

    /// Largest entry bit length (see `Domain::bit_length`).
    pub fn max_entry_bits(&self) -> u64 {
        self.cols
            .iter()
            .flat_map(|c| c.iter())
            .map(|s| self.domain.bit_length(s))
            .max()
            .unwrap_or(0)
    }
}

/// Incremental Gaussian eliminator: keeps reduced pivot columns, each scaled
/// so its pivot entry is 1. Vectors are reduced against pivots in insertion
/// order; pivot rows are chosen first-nonzero by row order, which keeps
/// every operation deterministic.
pub struct Eliminator<'d> {
    domain: &'d Domain,
    dim: usize,
    pivots: Vec<(usize, Vec<Scalar>)>,
}

impl<'d> Eliminator<'d> {
    pub fn new(domain: &'d Domain, dim: usize) -> Eliminator<'d> {
        Eliminator {
            domain,
            dim,
            pivots: Vec::new(),
        }
    }

    /// Subtracts the projection onto the current pivots from `v` in place.
    pub fn reduce(&self, v: &mut Vec<Scalar>) {
        debug_assert_eq!(v.len(), self.dim);
        for (prow, pcol) in &self.pivots {
            if self.domain.is_zero(&v[*prow]) {
                continue;
            }
            let f = v[*prow].clone();
            for i in 0..self.dim {
                let sub = self.domain.mul(&f, &pcol[i]);
                v[i] = self.domain.sub(&v[i], &sub);
            }
        }
    }

    /// Reduces `v` and adopts it as a new pivot if anything is left.
    /// Returns whether `v` was independent of the pivots so far.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        self.reduce(&mut v);
        let Some(prow) = (0..self.dim).find(|&i| !self.domain.is_zero(&v[i])) else {
            return false;
        };
        let inv = self
            .domain
            .inv(&v[prow])
            .expect("nonzero entry must be invertible");
        for s in v.iter_mut() {
            *s = self.domain.mul(s, &inv);
        }
        self.pivots.push((prow, v));
        true
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}
