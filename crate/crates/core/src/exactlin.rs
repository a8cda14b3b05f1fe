//! Dense exact linear algebra.
//!
//! Over `Q` the rank is computed with fraction-free (Bareiss) elimination on
//! an integer copy of the matrix, so no rational arithmetic happens during
//! elimination. Over `F_p` ordinary row reduction on machine words is used.
//! Pivots are always the first nonzero entry in column order, so every
//! result is reproducible bit for bit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{inv_mod, mul_mod, FieldElement, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<FieldElement>,
}

impl ExactMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have `cols` entries.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Argument(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|e| e.field() != field) {
                return Err(Error::Argument(format!(
                    "entry over {} in a matrix over {field}",
                    bad.field()
                )));
            }
            entries.extend(row);
        }
        Ok(ExactMatrix {
            rows: nrows,
            cols,
            field,
            entries,
        })
    }

    pub fn from_i64_rows(field: FieldSpec, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, cols, rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        assert_eq!(v.field(), self.field);
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// `M v`.
    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        match self.field {
            FieldSpec::Rational => bareiss_echelon(self.integer_rows()).pivots.len(),
            FieldSpec::Prime { p } => modp_rref(self.residue_rows(), self.cols, p).1.len(),
        }
    }

    /// A basis of `{ v : M v = 0 }`, with `cols - rank` vectors.
    ///
    /// Over `Q` each vector is scaled to a primitive integer vector whose last
    /// nonzero entry is positive.
    pub fn nullspace_basis(&self) -> Vec<Vec<FieldElement>> {
        match self.field {
            FieldSpec::Rational => self.rational_nullspace(),
            FieldSpec::Prime { p } => {
                let (rref, pivots) = modp_rref(self.residue_rows(), self.cols, p);
                let mut is_pivot = vec![false; self.cols];
                for &c in &pivots {
                    is_pivot[c] = true;
                }
                (0..self.cols)
                    .filter(|&c| !is_pivot[c])
                    .map(|free| {
                        let mut v = vec![0u64; self.cols];
                        v[free] = 1;
                        for (row, &pc) in pivots.iter().enumerate() {
                            let a = rref[row][free];
                            v[pc] = if a == 0 { 0 } else { p - a };
                        }
                        v.into_iter()
                            .map(|x| FieldElement::Prime { value: x, modulus: p })
                            .collect()
                    })
                    .collect()
            }
        }
    }

    fn rational_nullspace(&self) -> Vec<Vec<FieldElement>> {
        let echelon = bareiss_echelon(self.integer_rows());
        let mut is_pivot = vec![false; self.cols];
        for &c in &echelon.pivots {
            is_pivot[c] = true;
        }
        let rows = &echelon.rows;
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                // Back substitution on the integer echelon form.
                let mut x = vec![BigRational::zero(); self.cols];
                x[free] = BigRational::one();
                for (i, &pc) in echelon.pivots.iter().enumerate().rev() {
                    let mut acc = BigRational::zero();
                    for j in pc + 1..self.cols {
                        if !x[j].is_zero() && !rows[i][j].is_zero() {
                            acc += BigRational::from_integer(rows[i][j].clone()) * &x[j];
                        }
                    }
                    x[pc] = -acc / BigRational::from_integer(rows[i][pc].clone());
                }
                primitive_integer_vector(&x)
                    .into_iter()
                    .map(|n| FieldElement::Rational(BigRational::from_integer(n)))
                    .collect()
            })
            .collect()
    }

    /// Rows scaled by the lcm of their denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row.iter().fold(BigInt::one(), |acc, e| {
                    acc.lcm(e.as_rational().expect("rational entry").denom())
                });
                row.iter()
                    .map(|e| {
                        let r = e.as_rational().expect("rational entry");
                        r.numer() * (&lcm / r.denom())
                    })
                    .collect()
            })
            .collect()
    }

    fn residue_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|e| e.residue().expect("prime field entry"))
                    .collect()
            })
            .collect()
    }
}

fn primitive_integer_vector(x: &[BigRational]) -> Vec<BigInt> {
    let lcm = x
        .iter()
        .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
    let mut ints: Vec<BigInt> = x.iter().map(|e| e.numer() * (&lcm / e.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() {
        for v in ints.iter_mut() {
            *v = &*v / &g;
        }
    }
    if let Some(last) = ints.iter().rev().find(|v| !v.is_zero()) {
        if last.is_negative() {
            for v in ints.iter_mut() {
                *v = -&*v;
            }
        }
    }
    ints
}

pub(crate) struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

/// Fraction-free forward elimination. After the call the first
/// `pivots.len()` rows are in echelon form with pivot columns `pivots`.
pub(crate) fn bareiss_echelon(mut a: Vec<Vec<BigInt>>) -> Echelon {
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            let factor = row[c].clone();
            if factor.is_zero() {
                for x in row[c + 1..ncols].iter_mut() {
                    if !x.is_zero() {
                        *x = (&pivot_row[c] * &*x) / &prev;
                    }
                }
                continue;
            }
            for j in c + 1..ncols {
                let v = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = top[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(pivots.len());
    Echelon { rows: a, pivots }
}

/// Reduced row echelon form modulo `p`; returns the nonzero rows and pivots.
fn modp_rref(mut a: Vec<Vec<u64>>, ncols: usize, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        for x in a[r][c..ncols].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for j in c..ncols {
                if pivot_row[j] != 0 {
                    let s = mul_mod(f, pivot_row[j], p);
                    row[j] = if row[j] >= s { row[j] - s } else { row[j] + p - s };
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(pivots.len());
    (a, pivots)
}

/// Incrementally maintained echelon basis of a row space.
///
/// Used for "extend a basis" questions: whether a vector is in the span of
/// the rows inserted so far, and which inserted vectors were independent.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    field: FieldSpec,
    dim: usize,
    rows: Vec<(usize, Vec<FieldElement>)>,
}

impl SpanBasis {
    pub fn new(field: FieldSpec, dim: usize) -> Self {
        SpanBasis {
            field,
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

    fn reduce(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row).skip(*pivot) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.reduce(v).iter().all(FieldElement::is_zero)
    }

    /// Adds `v`; returns `true` when it was independent of the current span.
    pub fn insert(&mut self, v: &[FieldElement]) -> bool {
        let mut w = self.reduce(v);
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[pivot].inv().expect("nonzero pivot");
        for x in w.iter_mut().skip(pivot) {
            *x *= &inv;
        }
        self.rows.push((pivot, w));
        true
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const P: u64 = 1_000_003;

    /// Independent oracle: cross-multiplying elimination mod p that never
    /// inverts a pivot.
    fn oracle_rank_modp(mut a: Vec<Vec<i128>>, p: i128) -> usize {
        let nrows = a.len();
        let ncols = a.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..ncols {
            let Some(pr) = (rank..nrows).find(|&i| a[i][c].rem_euclid(p) != 0) else {
                continue;
            };
            a.swap(rank, pr);
            for i in rank + 1..nrows {
                let f = a[i][c];
                let piv = a[rank][c];
                let (top, bottom) = a.split_at_mut(i);
                for (x, &y) in bottom[0].iter_mut().zip(&top[rank]) {
                    *x = (piv * *x - f * y).rem_euclid(p);
                }
            }
            rank += 1;
        }
        rank
    }

    fn random_low_rank(rng: &mut ChaCha8Rng, n: usize, k: usize, bound: i64) -> Vec<Vec<i64>> {
        let left: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..k).map(|_| rng.gen_range(-bound..=bound)).collect())
            .collect();
        let right: Vec<Vec<i64>> = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect())
            .collect();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..k).map(|l| left[i][l] * right[l][j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn identity_and_zero() {
        let q = FieldSpec::Rational;
        assert_eq!(ExactMatrix::identity(q, 3).rank(), 3);
        assert_eq!(ExactMatrix::zeros(q, 4, 7).rank(), 0);
        assert_eq!(ExactMatrix::zeros(q, 4, 7).nullspace_basis().len(), 7);
        assert!(ExactMatrix::identity(q, 3).nullspace_basis().is_empty());
        let f = FieldSpec::prime(P).unwrap();
        assert_eq!(ExactMatrix::identity(f, 3).rank(), 3);
        assert_eq!(ExactMatrix::zeros(f, 4, 7).rank(), 0);
    }

    #[test]
    fn one_by_two_kernel() {
        let q = FieldSpec::Rational;
        let m = ExactMatrix::from_i64_rows(q, &[vec![1, -1]]).unwrap();
        let ker = m.nullspace_basis();
        assert_eq!(ker, vec![vec![q.from_i64(1), q.from_i64(1)]]);
    }

    #[test]
    fn random_ranks_match_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f = FieldSpec::prime(P).unwrap();
        for trial in 0..20 {
            let k = trial % 21;
            let m = random_low_rank(&mut rng, 20, k, 50);
            let oracle = oracle_rank_modp(
                m.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect(),
                P as i128,
            );
            let ours = ExactMatrix::from_i64_rows(f, &m).unwrap().rank();
            assert_eq!(ours, oracle, "trial {trial}");
            assert!(ours <= k);
        }
    }

    #[test]
    fn rational_rank_agrees_with_three_primes() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for trial in 0..15 {
            let k = trial % 9;
            let m = random_low_rank(&mut rng, 9, k, 9);
            let rq = ExactMatrix::from_i64_rows(FieldSpec::Rational, &m).unwrap().rank();
            for p in [1_000_003, 998_244_353, 2_147_483_647] {
                let rp = ExactMatrix::from_i64_rows(FieldSpec::prime(p).unwrap(), &m)
                    .unwrap()
                    .rank();
                assert_eq!(rq, rp);
            }
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for trial in 0..100 {
            let field = if trial % 2 == 0 {
                FieldSpec::Rational
            } else {
                FieldSpec::prime(10007).unwrap()
            };
            let rows = rng.gen_range(1..8);
            let cols = rng.gen_range(1..10);
            let m: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            let m = ExactMatrix::from_i64_rows(field, &m).unwrap();
            let ker = m.nullspace_basis();
            assert_eq!(ker.len() + m.rank(), cols);
            for v in &ker {
                assert!(m.mul_vec(v).iter().all(FieldElement::is_zero));
            }
            let k = ExactMatrix::from_rows(field, cols, ker.clone()).unwrap();
            assert_eq!(k.rank(), ker.len());
        }
    }

    #[test]
    fn span_basis_tracks_rank() {
        let f = FieldSpec::Rational;
        let mut span = SpanBasis::new(f, 3);
        let v = |a: i64, b: i64, c: i64| vec![f.from_i64(a), f.from_i64(b), f.from_i64(c)];
        assert!(span.insert(&v(1, 2, 3)));
        assert!(span.insert(&v(0, 1, 1)));
        assert!(!span.insert(&v(1, 3, 4)));
        assert!(span.contains(&v(2, 5, 7)));
        assert!(!span.contains(&v(0, 0, 1)));
        assert_eq!(span.rank(), 2);
    }

    #[test]
    fn ragged_rows_rejected() {
        let f = FieldSpec::Rational;
        assert!(ExactMatrix::from_rows(f, 2, vec![vec![f.one()]]).is_err());
    }
}
