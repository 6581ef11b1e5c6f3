//! Exact linear algebra: fraction-free (Bareiss) elimination for ranks and
//! determinants, and field Gaussian elimination for nullspaces.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::scalar::{FieldTag, Scalar};
use super::uni::UniPoly;

/// Integral-domain entry for fraction-free elimination. The Bareiss update
/// `(pivot*a - b*c) / prev` is guaranteed exact over any integral domain.
pub trait Entry: Clone {
    fn e_zero_like(&self) -> Self;
    fn e_one_like(&self) -> Self;
    fn e_is_zero(&self) -> bool;
    fn e_mul(&self, o: &Self) -> Self;
    fn e_sub(&self, o: &Self) -> Self;
    fn e_exact_div(&self, o: &Self) -> Self;
}

impl Entry for BigInt {
    fn e_zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn e_one_like(&self) -> Self {
        BigInt::one()
    }
    fn e_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn e_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn e_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn e_exact_div(&self, o: &Self) -> Self {
        let (q, r) = self.div_rem(o);
        debug_assert!(r.is_zero(), "inexact Bareiss division");
        q
    }
}

impl Entry for UniPoly {
    fn e_zero_like(&self) -> Self {
        UniPoly::zero(self.field)
    }
    fn e_one_like(&self) -> Self {
        UniPoly::constant(Scalar::one(self.field))
    }
    fn e_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn e_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn e_sub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn e_exact_div(&self, o: &Self) -> Self {
        self.exact_div(o)
    }
}

/// Determinant of a square matrix by fraction-free Bareiss elimination.
pub fn bareiss_det<E: Entry>(mut m: Vec<Vec<E>>) -> E {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "square matrix");
    let mut sign_flip = false;
    let mut prev = m[0][0].e_one_like();
    for k in 0..n {
        if m[k][k].e_is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].e_is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return m[0][0].e_zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].e_mul(&m[i][j]).e_sub(&m[i][k].e_mul(&m[k][j]));
                m[i][j] = num.e_exact_div(&prev);
            }
            m[i][k] = m[i][k].e_zero_like();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.e_zero_like().e_sub(&det)
    } else {
        det
    }
}

/// Rank of a rectangular matrix by fraction-free elimination (column pivots).
fn bareiss_rank<E: Entry>(mut m: Vec<Vec<E>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = m[0][0].e_one_like();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        match (r..rows).find(|&i| !m[i][c].e_is_zero()) {
            None => continue,
            Some(i) => m.swap(r, i),
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = m[r][c].e_mul(&m[i][j]).e_sub(&m[i][c].e_mul(&m[r][j]));
                m[i][j] = num.e_exact_div(&prev);
            }
            m[i][c] = m[i][c].e_zero_like();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Rank of a matrix of scalars: fraction-free over the rationals (rows are
/// cleared to integers first), ordinary Gaussian elimination over `F_p`.
pub fn rank(matrix: &[Vec<Scalar>], field: FieldTag) -> usize {
    if matrix.is_empty() || matrix[0].is_empty() {
        return 0;
    }
    match field {
        FieldTag::Rationals => {
            let m: Vec<Vec<BigInt>> = matrix.iter().map(|row| clear_row(row)).collect();
            bareiss_rank(m)
        }
        FieldTag::PrimeField(p) => {
            let m: Vec<Vec<u64>> = matrix
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|s| s.as_fp().expect("prime-field scalar"))
                        .collect()
                })
                .collect();
            fp_rank(m, p)
        }
    }
}

fn clear_row(row: &[Scalar]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for s in row {
        let r = s.as_rational().expect("rational scalar");
        lcm = lcm.lcm(r.denom());
    }
    row.iter()
        .map(|s| {
            let r = s.as_rational().unwrap();
            r.numer() * (&lcm / r.denom())
        })
        .collect()
}

fn fp_rank(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = m[0].len();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        match (r..rows).find(|&i| m[i][c] % p != 0) {
            None => continue,
            Some(i) => m.swap(r, i),
        }
        let inv = Scalar::Fp { p, val: m[r][c] % p }.inv().unwrap().as_fp().unwrap();
        for i in r + 1..rows {
            let factor = (m[i][c] % p) as u128 * inv as u128 % p as u128;
            if factor == 0 {
                continue;
            }
            for j in c..cols {
                let sub = factor * (m[r][j] % p) as u128 % p as u128;
                m[i][j] = ((m[i][j] as u128 + p as u128 - sub) % p as u128) as u64;
            }
        }
        r += 1;
    }
    r
}

/// Basis of the right kernel `{v : Mv = 0}` by reduced row echelon form.
pub fn nullspace(matrix: &[Vec<Scalar>], field: FieldTag) -> Vec<Vec<Scalar>> {
    let cols = match matrix.first() {
        Some(r) => r.len(),
        None => return Vec::new(),
    };
    let mut m: Vec<Vec<Scalar>> = matrix.to_vec();
    let rows = m.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        match (r..rows).find(|&i| !m[i][c].is_zero()) {
            None => continue,
            Some(i) => m.swap(r, i),
        }
        let inv = m[r][c].inv().unwrap();
        for j in c..cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = f.mul(&m[r][j]);
                    m[i][j] = m[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Scalar::zero(field); cols];
        v[free] = Scalar::one(field);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = m[row][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Determinant of a 3x3 scalar matrix.
pub fn det3(m: &[[Scalar; 3]; 3]) -> Scalar {
    let minor = |a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar| a.mul(d).sub(&b.mul(c));
    let m0 = minor(&m[1][1], &m[1][2], &m[2][1], &m[2][2]);
    let m1 = minor(&m[1][0], &m[1][2], &m[2][0], &m[2][2]);
    let m2 = minor(&m[1][0], &m[1][1], &m[2][0], &m[2][1]);
    m[0][0].mul(&m0).sub(&m[0][1].mul(&m1)).add(&m[0][2].mul(&m2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(n, FieldTag::Rationals)
    }

    #[test]
    fn bareiss_det_matches_hand_value() {
        let m: Vec<Vec<BigInt>> = vec![
            vec![2.into(), 1.into(), 3.into()],
            vec![0.into(), (-1).into(), 4.into()],
            vec![5.into(), 2.into(), 1.into()],
        ];
        // Expanded by hand: 2(-1-8) - 1(0-20) + 3(0+5) = -18 + 20 + 15 = 17
        assert_eq!(bareiss_det(m), BigInt::from(17));
    }

    #[test]
    fn rank_rational_with_fractions() {
        let half = Scalar::from_ratio(1, 2, FieldTag::Rationals).unwrap();
        let m = vec![
            vec![q(1), q(2), q(3)],
            vec![half.clone(), q(1), half.mul(&q(3))],
            vec![q(0), q(1), q(1)],
        ];
        // Row 2 is half of row 1.
        assert_eq!(rank(&m, FieldTag::Rationals), 2);
    }

    #[test]
    fn rank_fp() {
        let f5 = FieldTag::PrimeField(5);
        let s = |n: i64| Scalar::from_i64(n, f5);
        let m = vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)], // 2x row 1 mod 5
            vec![s(0), s(0), s(1)],
        ];
        assert_eq!(rank(&m, f5), 2);
    }

    #[test]
    fn nullspace_vectors_annihilate() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let ns = nullspace(&m, FieldTag::Rationals);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(q(0), |acc, (a, b)| acc.add(&a.mul(b)));
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn det3_permutation() {
        let zero = q(0);
        let one = q(1);
        let m = [
            [zero.clone(), one.clone(), zero.clone()],
            [one.clone(), zero.clone(), zero.clone()],
            [zero.clone(), zero.clone(), one.clone()],
        ];
        assert_eq!(det3(&m), q(-1));
    }
}
