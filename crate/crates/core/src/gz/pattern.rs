//! Triangular pattern arrays and the shift tuples indexing composite
//! root-vector operators.

use alloc::vec::Vec;

use super::scalar::Scalar;
use crate::{Error, Result};

/// Triangular array γ_{i,j}, 1 ≤ j ≤ i ≤ n. Row n carries the spectral
/// parameters λ₁…λₙ and is never shifted by any operator in this crate.
#[derive(Debug, Clone, PartialEq)]
pub struct GzPattern<S> {
    n: usize,
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> GzPattern<S> {
    /// Build a pattern from rows 1..=n; row i must have exactly i entries.
    pub fn new(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidInput(alloc::string::String::from(
                "pattern needs at least one row",
            )));
        }
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != idx + 1 {
                return Err(Error::InvalidInput(alloc::format!(
                    "pattern row {} must have {} entries, got {}",
                    idx + 1,
                    idx + 1,
                    row.len()
                )));
            }
        }
        Ok(Self { n, rows })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Entry γ_{i,j}, 1-based in both indices.
    pub fn entry(&self, i: usize, j: usize) -> &S {
        &self.rows[i - 1][j - 1]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.rows[i - 1]
    }

    /// Top row: the spectral parameters λ.
    pub fn spectral(&self) -> &[S] {
        &self.rows[self.n - 1]
    }

    /// Σ_i λ_i² over the top row.
    pub fn lambda_sq(&self) -> S {
        let mut acc = S::zero();
        for l in self.spectral() {
            acc = acc + l.clone() * l.clone();
        }
        acc
    }

    /// Copy with γ_{m,k_m} += amount for every row m covered by the tuple.
    pub fn shifted(&self, k: &ShiftTuple, amount: &S) -> Self {
        let mut rows = self.rows.clone();
        let (i, j) = k.rows();
        for m in i..j {
            let col = k.k_at(m);
            let cell = &mut rows[m - 1][col - 1];
            *cell = cell.clone() + amount.clone();
        }
        Self { n: self.n, rows }
    }
}

/// Element of the index set S_{i,j}: one column choice k_m ∈ {1..m} for each
/// row m = i..j−1, selecting a single summand of the composite operator for
/// the row pair (i, j), i < j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftTuple {
    i: usize,
    j: usize,
    ks: Vec<usize>,
}

impl ShiftTuple {
    /// All tuples for the pair (i, j) at rank n, in lexicographic order.
    /// There are i·(i+1)⋯(j−1) of them.
    pub fn enumerate(i: usize, j: usize, n: usize) -> Result<Vec<ShiftTuple>> {
        if i == 0 || i >= j || j > n {
            return Err(Error::InvalidRange { i, j, n });
        }
        let len = j - i;
        let mut out = Vec::new();
        let mut ks = alloc::vec![1usize; len];
        loop {
            out.push(ShiftTuple { i, j, ks: ks.clone() });
            // odometer: last position runs fastest
            let mut pos = len;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                let row = i + pos; // k_row ∈ 1..=row
                if ks[pos] < row {
                    ks[pos] += 1;
                    for k in ks[pos + 1..].iter_mut() {
                        *k = 1;
                    }
                    break;
                }
            }
        }
    }

    /// Row pair (i, j) the tuple belongs to.
    pub fn rows(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    /// Column choice k_m for row m (i ≤ m < j).
    pub fn k_at(&self, m: usize) -> usize {
        debug_assert!(m >= self.i && m < self.j);
        self.ks[m - self.i]
    }

    pub fn components(&self) -> &[usize] {
        &self.ks
    }
}

/// Row weight h_i(γ) = Σ_{j≤i} γ_{i,j} − Σ_{j≤i−1} γ_{i−1,j}.
///
/// These linear functions are the diagonal of the representation (e_{i,i}
/// multiplies by h_i/2g) and the exponent weights of the wave-function
/// integrand; they telescope to Σ h_i = Σ λ_j.
pub fn weight_h<S: Scalar>(p: &GzPattern<S>, i: usize) -> S {
    let mut acc = S::zero();
    for v in p.row(i) {
        acc = acc + v.clone();
    }
    if i > 1 {
        for v in p.row(i - 1) {
            acc = acc - v.clone();
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gz::Rational;
    use num_bigint::BigInt;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn rat2(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn enumerate_single() {
        let ts = ShiftTuple::enumerate(1, 2, 2).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].components(), &[1]);
    }

    #[test]
    fn enumerate_pair_1_3() {
        let ts = ShiftTuple::enumerate(1, 3, 3).unwrap();
        let got: Vec<_> = ts.iter().map(|t| t.components().to_vec()).collect();
        assert_eq!(got, alloc::vec![alloc::vec![1, 1], alloc::vec![1, 2]]);
    }

    #[test]
    fn enumerate_pair_2_4_cardinality_and_order() {
        let ts = ShiftTuple::enumerate(2, 4, 4).unwrap();
        assert_eq!(ts.len(), 6); // 2·3
        let got: Vec<_> = ts.iter().map(|t| t.components().to_vec()).collect();
        let expect = alloc::vec![
            alloc::vec![1, 1],
            alloc::vec![1, 2],
            alloc::vec![1, 3],
            alloc::vec![2, 1],
            alloc::vec![2, 2],
            alloc::vec![2, 3],
        ];
        assert_eq!(got, expect);
    }

    #[test]
    fn enumerate_rejects_bad_ranges() {
        assert!(ShiftTuple::enumerate(2, 2, 3).is_err());
        assert!(ShiftTuple::enumerate(1, 4, 3).is_err());
        assert!(ShiftTuple::enumerate(0, 2, 3).is_err());
    }

    #[test]
    fn pattern_shape_validated() {
        assert!(GzPattern::new(alloc::vec![alloc::vec![rat(1)], alloc::vec![rat(2)]]).is_err());
        assert!(GzPattern::<Rational>::new(alloc::vec![]).is_err());
    }

    #[test]
    fn weight_h_rank_two() {
        // h₁ = γ, h₂ = λ₁ + λ₂ − γ
        let p = GzPattern::new(alloc::vec![
            alloc::vec![rat2(7, 3)],
            alloc::vec![rat(4), rat(-1)],
        ])
        .unwrap();
        assert_eq!(weight_h(&p, 1), rat2(7, 3));
        assert_eq!(weight_h(&p, 2), rat(3) - rat2(7, 3));
    }

    #[test]
    fn weight_h_rank_one() {
        let p = GzPattern::new(alloc::vec![alloc::vec![rat(5)]]).unwrap();
        assert_eq!(weight_h(&p, 1), rat(5));
    }

    #[test]
    fn weights_telescope_to_spectral_sum() {
        let p = GzPattern::new(alloc::vec![
            alloc::vec![rat2(1, 2)],
            alloc::vec![rat(2), rat2(-3, 5)],
            alloc::vec![rat(1), rat(7), rat2(9, 4)],
        ])
        .unwrap();
        let total = weight_h(&p, 1) + weight_h(&p, 2) + weight_h(&p, 3);
        assert_eq!(total, rat(1) + rat(7) + rat2(9, 4));
    }

    #[test]
    fn shifted_touches_only_tuple_entries() {
        let p = GzPattern::new(alloc::vec![
            alloc::vec![rat(1)],
            alloc::vec![rat(2), rat(3)],
            alloc::vec![rat(4), rat(5), rat(6)],
        ])
        .unwrap();
        let t = &ShiftTuple::enumerate(1, 3, 3).unwrap()[1]; // (1, 2)
        let q = p.shifted(t, &rat(10));
        assert_eq!(q.entry(1, 1), &rat(11));
        assert_eq!(q.entry(2, 1), &rat(2));
        assert_eq!(q.entry(2, 2), &rat(13));
        assert_eq!(q.spectral(), p.spectral());
    }
}
