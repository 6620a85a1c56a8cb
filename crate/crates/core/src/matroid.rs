//! Linear matroids represented by labeled matrix columns.
//!
//! The ground set is the set of column labels; independence is linear
//! independence of the corresponding columns. Deletion drops a column,
//! contraction pivots one out. After any rank-changing mutation the
//! representation is compacted to a row basis, so `rep.rows() == rank` holds
//! between operations.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exact_linalg::{Domain, ExactMatrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMatroid {
    rep: ExactMatrix,
    labels: Vec<u32>,
}

impl LinearMatroid {
    /// Wraps a representation matrix; labels must be distinct and match the
    /// column count.
    pub fn from_matrix(rep: ExactMatrix, labels: Vec<u32>) -> Result<LinearMatroid> {
        if labels.len() != rep.ncols() {
            return Err(Error::DimensionMismatch {
                expected: rep.ncols(),
                got: labels.len(),
            });
        }
        let mut seen = labels.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != labels.len() {
            return Err(Error::Input("duplicate matroid labels".into()));
        }
        Ok(LinearMatroid { rep, labels })
    }

    /// The free matroid I_n on the given labels: one unit column each, in
    /// label order.
    pub fn identity(domain: Domain, labels: Vec<u32>) -> Result<LinearMatroid> {
        let rep = ExactMatrix::identity(domain, labels.len());
        LinearMatroid::from_matrix(rep, labels)
    }

    pub fn rep(&self) -> &ExactMatrix {
        &self.rep
    }

    pub fn domain(&self) -> &Domain {
        self.rep.domain()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn contains(&self, label: u32) -> bool {
        self.labels.contains(&label)
    }

    fn col_index(&self, label: u32) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or(Error::UnknownElement(label))
    }

    /// The column bound to `label`.
    pub fn column(&self, label: u32) -> Result<&[Scalar]> {
        Ok(self.rep.col(self.col_index(label)?))
    }

    /// Rank of a set of labels. Unknown labels are an error.
    pub fn rank_subset(&self, subset: &[u32]) -> Result<usize> {
        let idx: Vec<usize> = subset
            .iter()
            .map(|&l| self.col_index(l))
            .collect::<Result<_>>()?;
        Ok(self.rep.rank(&idx))
    }

    /// Rank of the whole matroid.
    pub fn full_rank(&self) -> usize {
        self.rep.rank_all()
    }

    /// A loop is an element represented by the zero column.
    pub fn is_loop(&self, label: u32) -> Result<bool> {
        Ok(self.rep.is_zero_col(self.col_index(label)?))
    }

    /// A coloop lies in every basis: removing it drops the rank.
    pub fn is_coloop(&self, label: u32) -> Result<bool> {
        let j = self.col_index(label)?;
        let rest: Vec<usize> = (0..self.rep.ncols()).filter(|&c| c != j).collect();
        Ok(self.rep.rank(&rest) + 1 == self.rep.rank_all())
    }

    /// Is `target` in the span of the columns labeled by `gens`?
    pub fn in_span_of(&self, gens: &[u32], target: &[Scalar]) -> Result<bool> {
        let idx: Vec<usize> = gens
            .iter()
            .map(|&l| self.col_index(l))
            .collect::<Result<_>>()?;
        self.rep.in_span(&idx, target)
    }

    /// Replaces the column bound to `label`. The representation is *not*
    /// compacted: this is the transient half of a move-and-contract step.
    pub fn set_column(&mut self, label: u32, col: Vec<Scalar>) -> Result<()> {
        let j = self.col_index(label)?;
        self.rep.set_col(j, col)
    }

    /// Deletes an element, then recompacts rows (deleting a coloop drops the
    /// rank, and we keep `rows == rank`).
    pub fn delete(&mut self, label: u32) -> Result<()> {
        let j = self.col_index(label)?;
        self.rep.remove_col(j);
        self.labels.remove(j);
        self.compact();
        Ok(())
    }

    /// Contracts a non-loop element: pivot on the first nonzero entry of its
    /// column (row order), eliminate that row from every other column, drop
    /// the pivot row and the column, recompact. For every remaining subset T,
    /// rank_{X/e}(T) = rank_X(T + e) - 1.
    pub fn contract(&mut self, label: u32) -> Result<()> {
        let j = self.col_index(label)?;
        if self.rep.is_zero_col(j) {
            return Err(Error::ContractLoop(label));
        }
        let d = self.domain().clone();
        let pivot_col = self.rep.col(j).to_vec();
        let prow = (0..self.rep.rows())
            .find(|&i| !d.is_zero(&pivot_col[i]))
            .expect("non-loop column has a nonzero entry");
        let p_inv = d.inv(&pivot_col[prow])?;

        let mut new_cols = Vec::with_capacity(self.rep.ncols() - 1);
        for c in 0..self.rep.ncols() {
            if c == j {
                continue;
            }
            let col = self.rep.col(c);
            let f = d.mul(&col[prow], &p_inv);
            let mut out = Vec::with_capacity(self.rep.rows() - 1);
            for i in 0..self.rep.rows() {
                if i == prow {
                    continue;
                }
                let sub = d.mul(&f, &pivot_col[i]);
                out.push(d.sub(&col[i], &sub));
            }
            new_cols.push(out);
        }
        let rows = self.rep.rows() - 1;
        self.labels.remove(j);
        self.rep = ExactMatrix::from_columns(d, rows, new_cols)?;
        self.compact();
        Ok(())
    }

    /// Row-basis compaction: keeps `rep.rows() == rank` without touching any
    /// column-subset rank.
    fn compact(&mut self) {
        if self.rep.rows() != self.rep.rank_all() {
            let (compact, _) = self.rep.row_basis();
            self.rep = compact;
        }
    }

    /// All labels whose columns are zero.
    pub fn loops(&self) -> Vec<u32> {
        self.labels
            .iter()
            .copied()
            .filter(|&l| self.is_loop(l).expect("label exists"))
            .collect()
    }

    /// Lifts a prime-field matroid to the rationals, reading residues as
    /// integers (used between faithful-mode steps).
    pub fn lift_to_rational(&self) -> Result<LinearMatroid> {
        Ok(LinearMatroid {
            rep: self.rep.lift_to_rational()?,
            labels: self.labels.clone(),
        })
    }

    /// Reduces a rational matroid mod q (retryable on denominator collision).
    pub fn mod_reduce(&self, q: &BigUint) -> Result<LinearMatroid> {
        Ok(LinearMatroid {
            rep: self.rep.mod_reduce(q)?,
            labels: self.labels.clone(),
        })
    }
}
