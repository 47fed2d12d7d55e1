//! Exact linear algebra over scalar polynomials.
//!
//! Elimination is fraction-free (`row_j := pivot*row_j - entry*row_pivot`), so
//! it works over parametric rings where entries are polynomials, and rows are
//! tidied after each step by stripping common monomial factors and rescaling
//! the leading base coefficient. Over a parameter-free ring every entry is a
//! constant and this degenerates to ordinary Gaussian elimination.

use crate::error::Error;
use crate::ring::Ring;
use crate::scalar::{Monomial, Scalar};
use crate::Result;

/// Dense matrix of scalars with a fixed column count.
#[derive(Debug, Clone)]
pub struct Matrix {
    ring: Ring,
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn new(ring: &Ring, ncols: usize) -> Matrix {
        Matrix {
            ring: ring.clone(),
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<Scalar>) {
        assert_eq!(row.len(), self.ncols, "row length mismatch");
        // Skip zero rows: they never affect rank or nullspace.
        if row.iter().any(|s| !s.is_zero()) {
            self.rows.push(row);
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Rank over the fraction field of the ring.
    pub fn rank(&self) -> usize {
        let (_, pivots) = echelon(&self.ring, self.rows.clone());
        pivots.len()
    }

    /// Basis of the right nullspace. Each vector has polynomial entries and
    /// is determined up to a scalar multiple; entries are normalized so the
    /// leading base coefficient of the first nonzero entry is 1.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (rows, pivots) = echelon(&self.ring, self.rows.clone());
        let pivot_cols: Vec<usize> = pivots.clone();
        let is_pivot = |c: usize| pivot_cols.contains(&c);
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if is_pivot(free) {
                continue;
            }
            // Back-substitute with a running cleared denominator: the true
            // solution is num/den, but only num matters up to scale.
            let mut num: Vec<Scalar> = (0..self.ncols)
                .map(|c| {
                    if c == free {
                        Scalar::one(&self.ring)
                    } else {
                        Scalar::zero(&self.ring)
                    }
                })
                .collect();
            for (ri, &pc) in pivot_cols.iter().enumerate().rev() {
                let row = &rows[ri];
                let mut acc = Scalar::zero(&self.ring);
                for c in (pc + 1)..self.ncols {
                    if !row[c].is_zero() && !num[c].is_zero() {
                        acc = acc + &row[c] * &num[c];
                    }
                }
                let pivot = row[pc].clone();
                for (c, entry) in num.iter_mut().enumerate() {
                    if c != pc && !entry.is_zero() {
                        *entry = &*entry * &pivot;
                    }
                }
                num[pc] = -acc;
            }
            normalize_row(&mut num);
            basis.push(num);
        }
        basis
    }
}

/// Strip the common monomial factor of a row and rescale so the leading base
/// coefficient of its first nonzero entry is 1. Leaves zero rows alone.
fn normalize_row(row: &mut [Scalar]) {
    let Some(first) = row.iter().find(|s| !s.is_zero()) else {
        return;
    };
    let ring = first.ring().clone();
    let nparams = ring.parameters().len();
    let mut common: Option<Vec<u32>> = None;
    for s in row.iter() {
        for (m, _) in s.terms() {
            match &mut common {
                None => common = Some(m.exponents().to_vec()),
                Some(c) => {
                    for (ci, &e) in c.iter_mut().zip(m.exponents()) {
                        *ci = (*ci).min(e);
                    }
                }
            }
        }
    }
    if let Some(c) = common {
        if c.iter().any(|&e| e > 0) {
            let m = Scalar::monomial_term(
                &ring,
                Monomial::from_exponents(c),
                crate::ring::Coeff::one(&ring),
            );
            for s in row.iter_mut() {
                if !s.is_zero() {
                    *s = s.divide_exact(&m).expect("common monomial divides");
                }
            }
        }
    }
    let lead = row
        .iter()
        .find(|s| !s.is_zero())
        .and_then(|s| s.leading_term().map(|(_, c)| c.clone()))
        .expect("nonzero row");
    let inv = lead
        .inv(ring.characteristic().max(1))
        .expect("base coefficients are invertible");
    if !Scalar::constant(&ring, inv.clone()).is_one() {
        for s in row.iter_mut() {
            if !s.is_zero() {
                *s = s.scale(&inv);
            }
        }
    }
    let _ = nparams;
}

/// Fraction-free row echelon form. Returns the transformed rows together
/// with the pivot column of each leading row (in order).
fn echelon(ring: &Ring, mut rows: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let mut best: Option<usize> = None;
        for i in r..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            if rows[i][col].is_constant() {
                best = Some(i);
                break;
            }
            if best.is_none() {
                best = Some(i);
            }
        }
        let Some(pi) = best else { continue };
        rows.swap(r, pi);
        normalize_row(&mut rows[r]);
        let pivot = rows[r][col].clone();
        let pivot_row = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (c, entry) in row.iter_mut().enumerate() {
                *entry = &(&*entry * &pivot) - &(&f * &pivot_row[c]);
            }
            normalize_row(row);
        }
        let _ = ring;
        pivots.push(col);
        r += 1;
    }
    (rows, pivots)
}

/// Rank of the span of the given vectors.
pub fn span_rank(ring: &Ring, vectors: &[Vec<Scalar>]) -> usize {
    let dim = vectors.first().map(|v| v.len()).unwrap_or(0);
    let mut m = Matrix::new(ring, dim);
    for v in vectors {
        m.push_row(v.clone());
    }
    m.rank()
}

/// Membership of `v` in the span of `basis` over the fraction field, decided
/// by rank comparison (no divisions needed, so parametric entries are fine).
pub fn span_contains(ring: &Ring, basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    let r0 = span_rank(ring, basis);
    let mut all: Vec<Vec<Scalar>> = basis.to_vec();
    all.push(v.to_vec());
    span_rank(ring, &all) == r0
}

/// Equality of two spans over the fraction field.
pub fn spans_equal(ring: &Ring, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> bool {
    let ra = span_rank(ring, a);
    let rb = span_rank(ring, b);
    if ra != rb {
        return false;
    }
    let mut all: Vec<Vec<Scalar>> = a.to_vec();
    all.extend(b.iter().cloned());
    span_rank(ring, &all) == ra
}

/// Incremental rank tracker using fraction-free reduction only, so it works
/// with parametric entries. Tracks the span but cannot produce coordinates.
pub struct IncrementalSpan {
    dim: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl IncrementalSpan {
    pub fn new(_ring: &Ring, dim: usize) -> IncrementalSpan {
        IncrementalSpan {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (pc, row) in &self.rows {
            let f = w[*pc].clone();
            if f.is_zero() {
                continue;
            }
            let pivot = row[*pc].clone();
            for (wi, ri) in w.iter_mut().zip(row) {
                *wi = &(&*wi * &pivot) - &(&f * ri);
            }
            normalize_row(&mut w);
        }
        w
    }

    /// Add a vector; returns `true` when it enlarged the span.
    pub fn add(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut w = self.reduce(v);
        let Some(pivot) = w.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        normalize_row(&mut w);
        let at = self
            .rows
            .iter()
            .position(|(p, _)| *p > pivot)
            .unwrap_or(self.rows.len());
        self.rows.insert(at, (pivot, w));
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|s| s.is_zero())
    }

    /// The reduced spanning rows accumulated so far.
    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}

struct ReducedRow {
    pivot: usize,
    row: Vec<Scalar>,
    combo: Vec<Scalar>,
}

/// Incremental span tracker that can express vectors as combinations of the
/// accepted (independent) ones. Pivot entries must be invertible, which holds
/// whenever the vectors have constant entries; parametric pivots report
/// [`Error::NotInvertible`].
pub struct SpanSolver {
    ring: Ring,
    dim: usize,
    accepted: usize,
    rows: Vec<ReducedRow>,
}

impl SpanSolver {
    pub fn new(ring: &Ring, dim: usize) -> SpanSolver {
        SpanSolver {
            ring: ring.clone(),
            dim,
            accepted: 0,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut w = v.to_vec();
        let mut combo = vec![Scalar::zero(&self.ring); self.accepted];
        for rr in &self.rows {
            let c = w[rr.pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (wi, ri) in w.iter_mut().zip(&rr.row) {
                if !ri.is_zero() {
                    *wi = &*wi - &(&c * ri);
                }
            }
            for (ci, bi) in combo.iter_mut().zip(&rr.combo) {
                if !bi.is_zero() {
                    *ci = &*ci - &(&c * bi);
                }
            }
        }
        (w, combo)
    }

    /// Add a vector; returns `true` when it enlarged the span.
    pub fn add(&mut self, v: &[Scalar]) -> Result<bool> {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let (mut w, mut combo) = self.reduce(v);
        let Some(pivot) = w.iter().position(|s| !s.is_zero()) else {
            return Ok(false);
        };
        let inv = w[pivot].inverse().map_err(|_| {
            Error::NotInvertible(format!("parametric pivot {}", w[pivot]))
        })?;
        for wi in w.iter_mut() {
            if !wi.is_zero() {
                *wi = &*wi * &inv;
            }
        }
        combo.push(Scalar::one(&self.ring));
        for ci in combo.iter_mut() {
            if !ci.is_zero() {
                *ci = &*ci * &inv;
            }
        }
        // The new accepted vector contributes a fresh combo coordinate, so
        // widen the existing rows first.
        for rr in &mut self.rows {
            rr.combo.push(Scalar::zero(&self.ring));
        }
        self.accepted += 1;
        let rr = ReducedRow {
            pivot,
            row: w,
            combo,
        };
        let at = self
            .rows
            .iter()
            .position(|r| r.pivot > pivot)
            .unwrap_or(self.rows.len());
        self.rows.insert(at, rr);
        Ok(true)
    }

    /// Coordinates of `v` over the accepted vectors, or `None` when `v` lies
    /// outside the span. `v == Σ coords[i] * accepted[i]` with `i` counting
    /// only the vectors for which [`SpanSolver::add`] returned `true`.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let (w, combo) = self.reduce(v);
        if w.iter().all(|s| s.is_zero()) {
            Some(combo.iter().map(|c| c.negate()).collect())
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(ring: &Ring, text: &str) -> Scalar {
        Scalar::parse(ring, text).unwrap()
    }

    fn row(ring: &Ring, texts: &[&str]) -> Vec<Scalar> {
        texts.iter().map(|t| sc(ring, t)).collect()
    }

    #[test]
    fn rank_and_nullspace_over_a_field() {
        let ring = Ring::gf(5).unwrap();
        let mut m = Matrix::new(&ring, 3);
        m.push_row(row(&ring, &["1", "0", "2"]));
        m.push_row(row(&ring, &["0", "1", "0"]));
        m.push_row(row(&ring, &["1", "1", "1"]));
        assert_eq!(m.rank(), 3);
        assert!(m.nullspace().is_empty());

        let mut s = Matrix::new(&ring, 3);
        s.push_row(row(&ring, &["1", "2", "3"]));
        s.push_row(row(&ring, &["0", "1", "4"]));
        assert_eq!(s.rank(), 2);
        let ns = s.nullspace();
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        // Check the vector really solves both equations.
        for r in [row(&ring, &["1", "2", "3"]), row(&ring, &["0", "1", "4"])] {
            let mut acc = Scalar::zero(&ring);
            for (a, b) in r.iter().zip(v) {
                acc = acc + a * b;
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn rank_and_nullspace_with_parameters() {
        let ring = Ring::new(0, &["m"]).unwrap();
        let mut s = Matrix::new(&ring, 2);
        s.push_row(row(&ring, &["m", "1"]));
        s.push_row(row(&ring, &["m^2", "m"]));
        assert_eq!(s.rank(), 1);
        let ns = s.nullspace();
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        let lhs = &sc(&ring, "m") * &v[0] + &v[1];
        assert!(lhs.is_zero(), "nullspace vector fails: {} {}", v[0], v[1]);
    }

    #[test]
    fn mixed_parametric_rank() {
        let ring = Ring::new(0, &["a", "b"]).unwrap();
        let mut m = Matrix::new(&ring, 3);
        m.push_row(row(&ring, &["a", "b", "0"]));
        m.push_row(row(&ring, &["0", "a", "b"]));
        m.push_row(row(&ring, &["a", "a + b", "b"]));
        assert_eq!(m.rank(), 2, "third row is the sum of the first two");
    }

    #[test]
    fn span_membership_by_rank() {
        let ring = Ring::new(0, &["t"]).unwrap();
        let basis = vec![row(&ring, &["1", "t"]), row(&ring, &["0", "0"])];
        assert!(span_contains(&ring, &basis, &row(&ring, &["3", "3*t"])));
        assert!(!span_contains(&ring, &basis, &row(&ring, &["0", "1"])));
        assert!(spans_equal(
            &ring,
            &[row(&ring, &["2", "2*t"])],
            &[row(&ring, &["1", "t"])]
        ));
    }

    #[test]
    fn incremental_span_with_parameters() {
        let ring = Ring::new(0, &["t"]).unwrap();
        let mut s = IncrementalSpan::new(&ring, 3);
        assert!(s.add(&row(&ring, &["t", "1", "0"])));
        assert!(!s.add(&row(&ring, &["t^2", "t", "0"])));
        assert!(s.add(&row(&ring, &["0", "0", "t"])));
        assert_eq!(s.rank(), 2);
        assert!(s.contains(&row(&ring, &["t^2", "t", "5*t"])));
        assert!(!s.contains(&row(&ring, &["1", "0", "0"])));
    }

    #[test]
    fn span_solver_coordinates() {
        let ring = Ring::rationals();
        let mut s = SpanSolver::new(&ring, 3);
        let b0 = row(&ring, &["1", "1", "0"]);
        let b1 = row(&ring, &["0", "1", "1"]);
        assert!(s.add(&b0).unwrap());
        assert!(s.add(&b1).unwrap());
        assert!(!s.add(&row(&ring, &["1", "2", "1"])).unwrap());
        assert_eq!(s.rank(), 2);
        let v = row(&ring, &["2", "5", "3"]);
        let coords = s.coordinates(&v).unwrap();
        let mut rec = vec![Scalar::zero(&ring); 3];
        for (c, b) in coords.iter().zip([&b0, &b1]) {
            for (ri, bi) in rec.iter_mut().zip(b) {
                *ri = &*ri + &(c * bi);
            }
        }
        assert_eq!(rec, v);
        assert!(s.coordinates(&row(&ring, &["0", "0", "1"])).is_none());
    }
}
