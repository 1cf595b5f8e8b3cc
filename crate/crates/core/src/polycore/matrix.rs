//! Rectangular matrices of polynomials, structured constructors, and
//! minor extraction.

use std::sync::Arc;

use crate::error::{CaError, CaResult};
use crate::par;
use crate::polycore::field::Field;
use crate::polycore::poly::Polynomial;
use crate::polycore::ring::PolyRing;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<K: Field> {
    ring: Arc<PolyRing<K>>,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Polynomial<K>>, // row-major
}

impl<K: Field> PolyMatrix<K> {
    pub fn new(
        ring: &Arc<PolyRing<K>>,
        rows: usize,
        cols: usize,
        entries: Vec<Polynomial<K>>,
    ) -> CaResult<Self> {
        if entries.len() != rows * cols {
            return Err(CaError::ShapeMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|e| !e.ring().compatible(ring)) {
            return Err(CaError::RingMismatch);
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(ring: &Arc<PolyRing<K>>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: (0..rows * cols).map(|_| Polynomial::zero(ring)).collect(),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing<K>> {
        &self.ring
    }

    pub fn at(&self, r: usize, c: usize) -> &Polynomial<K> {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial<K>) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn column(&self, c: usize) -> Vec<Polynomial<K>> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<Polynomial<K>> {
        (0..self.cols).map(|c| self.at(r, c).clone()).collect()
    }

    pub fn from_columns(
        ring: &Arc<PolyRing<K>>,
        rows: usize,
        columns: &[Vec<Polynomial<K>>],
    ) -> CaResult<Self> {
        let cols = columns.len();
        let mut m = Self::zero(ring, rows, cols);
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(CaError::ShapeMismatch(format!(
                    "column {c} has {} entries, expected {rows}",
                    col.len()
                )));
            }
            for (r, p) in col.iter().enumerate() {
                m.set(r, c, p.clone());
            }
        }
        Ok(m)
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(&self.ring, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(c, r, self.at(r, c).clone());
            }
        }
        m
    }

    /// Matrix product, exact.
    pub fn mul(&self, rhs: &Self) -> CaResult<Self> {
        if self.cols != rhs.rows {
            return Err(CaError::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zero(&self.ring, self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    acc = acc.add(&self.at(r, k).mul(rhs.at(k, c))?);
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    /// Determinant of the square submatrix given by `rows`/`cols` index
    /// sets, by Laplace expansion along the first selected row.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> CaResult<Polynomial<K>> {
        assert_eq!(rows.len(), cols.len());
        match rows.len() {
            0 => Ok(Polynomial::one(&self.ring)),
            1 => Ok(self.at(rows[0], cols[0]).clone()),
            n => {
                let field = self.ring.field.clone();
                let mut acc = Polynomial::zero(&self.ring);
                let sub_rows = &rows[1..];
                for (j, &c) in cols.iter().enumerate() {
                    let e = self.at(rows[0], c);
                    if e.is_zero() {
                        continue;
                    }
                    let mut sub_cols = Vec::with_capacity(n - 1);
                    sub_cols.extend(cols.iter().take(j).copied());
                    sub_cols.extend(cols.iter().skip(j + 1).copied());
                    let sub = self.minor(sub_rows, &sub_cols)?;
                    let signed = if j % 2 == 0 {
                        e.clone()
                    } else {
                        e.scale(&field.from_i64(-1))
                    };
                    acc = acc.add(&signed.mul(&sub)?);
                }
                Ok(acc)
            }
        }
    }

    /// All t-by-t minors, duplicates and zeros removed, in the scan order
    /// (row index set, then column index set, both lexicographic).
    pub fn minors(&self, t: usize) -> CaResult<Vec<Polynomial<K>>> {
        if t == 0 || t > self.rows.min(self.cols) {
            return Err(CaError::MinorOutOfRange {
                t,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let row_sets = combinations(self.rows, t);
        let col_sets = combinations(self.cols, t);
        let mut jobs = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                jobs.push((rs.clone(), cs.clone()));
            }
        }
        let dets = par::try_map_vec(jobs, |(rs, cs)| self.minor(&rs, &cs))?;
        let mut out: Vec<Polynomial<K>> = Vec::new();
        for d in dets {
            if d.is_zero() {
                continue;
            }
            let d = d.make_monic();
            if !out.contains(&d) {
                out.push(d);
            }
        }
        Ok(out)
    }

    /// Rank over the fraction field: the largest t with a nonzero t-minor.
    pub fn generic_rank(&self) -> CaResult<usize> {
        let max = self.rows.min(self.cols);
        for t in (1..=max).rev() {
            let row_sets = combinations(self.rows, t);
            let col_sets = combinations(self.cols, t);
            for rs in &row_sets {
                for cs in &col_sets {
                    if !self.minor(rs, cs)?.is_zero() {
                        return Ok(t);
                    }
                }
            }
        }
        Ok(0)
    }
}

/// All size-k subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Structured matrices from the ring's leading variables.
pub enum MatrixKind {
    /// r x c matrix of distinct indeterminates, row-major.
    Generic(usize, usize),
    /// s x s symmetric matrix filled from s(s+1)/2 indeterminates.
    Symmetric(usize),
    /// The 2x4 generalized Hankel matrix with rows (X1..X4), (X_{r+1}..X_{r+4}).
    Catalecticant(usize),
}

pub fn build_matrix<K: Field>(
    kind: MatrixKind,
    ring: &Arc<PolyRing<K>>,
) -> CaResult<PolyMatrix<K>> {
    let need = match kind {
        MatrixKind::Generic(r, c) => r * c,
        MatrixKind::Symmetric(s) => s * (s + 1) / 2,
        MatrixKind::Catalecticant(r) => r + 4,
    };
    if ring.nvars() < need {
        return Err(CaError::InsufficientVariables {
            have: ring.nvars(),
            need,
        });
    }
    match kind {
        MatrixKind::Generic(r, c) => {
            let entries = (0..r * c).map(|i| Polynomial::var(ring, i)).collect();
            PolyMatrix::new(ring, r, c, entries)
        }
        MatrixKind::Symmetric(s) => {
            // fill the upper triangle row by row, mirror below
            let mut index = vec![vec![0usize; s]; s];
            let mut next = 0;
            #[allow(clippy::needless_range_loop)]
            for i in 0..s {
                for j in i..s {
                    index[i][j] = next;
                    index[j][i] = next;
                    next += 1;
                }
            }
            let entries: Vec<Polynomial<K>> = index
                .iter()
                .flat_map(|row| row.iter().map(|&v| Polynomial::var(ring, v)))
                .collect();
            PolyMatrix::new(ring, s, s, entries)
        }
        MatrixKind::Catalecticant(r) => {
            let mut entries = Vec::with_capacity(8);
            for j in 0..4 {
                entries.push(Polynomial::var(ring, j));
            }
            for j in 0..4 {
                entries.push(Polynomial::var(ring, r + j));
            }
            PolyMatrix::new(ring, 2, 4, entries)
        }
    }
}
