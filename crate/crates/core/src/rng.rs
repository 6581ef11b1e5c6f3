//! Seeded sampling helpers. Every randomized harness in the crate takes a
//! 64-bit seed and draws from ChaCha8, so runs are bit-reproducible.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{FieldTag, HomogPoly, Scalar};
use crate::pointconf::PointP2;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform field element; over the rationals, a small integer in [-9, 9].
pub fn random_scalar<R: Rng>(rng: &mut R, field: FieldTag) -> Scalar {
    match field {
        FieldTag::Rationals => Scalar::from_i64(rng.gen_range(-9..=9), field),
        FieldTag::PrimeField(p) => Scalar::Fp {
            p,
            val: rng.gen_range(0..p),
        },
    }
}

pub fn random_nonzero_scalar<R: Rng>(rng: &mut R, field: FieldTag) -> Scalar {
    loop {
        let s = random_scalar(rng, field);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_point<R: Rng>(rng: &mut R, field: FieldTag) -> PointP2 {
    loop {
        let coords = [
            random_scalar(rng, field),
            random_scalar(rng, field),
            random_scalar(rng, field),
        ];
        if let Ok(p) = PointP2::new(coords) {
            return p;
        }
    }
}

/// Dense random homogeneous polynomial of the given degree.
pub fn random_homog<R: Rng>(rng: &mut R, field: FieldTag, degree: usize) -> HomogPoly {
    loop {
        let terms = crate::algebra::monomials(degree)
            .into_iter()
            .map(|e| (e, random_scalar(rng, field)))
            .collect::<Vec<_>>();
        let f = HomogPoly::from_terms(field, degree, terms).expect("homogeneous by construction");
        if !f.is_zero() {
            return f;
        }
    }
}

/// A k-subset of 0..n, in increasing order.
pub fn sample_indices<R: Rng>(rng: &mut R, n: usize, k: usize) -> Vec<usize> {
    assert!(k <= n, "cannot sample {} of {}", k, n);
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    while chosen.len() < k {
        let i = rng.gen_range(0..n);
        if !chosen.contains(&i) {
            chosen.push(i);
        }
    }
    chosen.sort_unstable();
    chosen
}

/// All rational points of the projective plane over `F_p`, in a fixed
/// deterministic order: `[1:b:c]`, then `[0:1:c]`, then `[0:0:1]`.
pub fn enumerate_plane_points(p: u64) -> Vec<PointP2> {
    let s = |v: u64| Scalar::Fp { p, val: v };
    let mut out = Vec::with_capacity((p * p + p + 1) as usize);
    for b in 0..p {
        for c in 0..p {
            out.push(PointP2::new([s(1), s(b), s(c)]).unwrap());
        }
    }
    for c in 0..p {
        out.push(PointP2::new([s(0), s(1), s(c)]).unwrap());
    }
    out.push(PointP2::new([s(0), s(0), s(1)]).unwrap());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_given_seed() {
        let mut a = seeded(42);
        let mut b = seeded(42);
        for _ in 0..10 {
            assert_eq!(
                random_scalar(&mut a, FieldTag::PrimeField(101)),
                random_scalar(&mut b, FieldTag::PrimeField(101))
            );
        }
    }

    #[test]
    fn plane_point_count() {
        assert_eq!(enumerate_plane_points(3).len(), 13);
        assert_eq!(enumerate_plane_points(5).len(), 31);
        let pts = enumerate_plane_points(7);
        assert_eq!(pts.len(), 57);
        // All distinct.
        for i in 0..pts.len() {
            for j in 0..i {
                assert_ne!(pts[i], pts[j]);
            }
        }
    }

    #[test]
    fn sample_indices_sorted_distinct() {
        let mut rng = seeded(7);
        let v = sample_indices(&mut rng, 10, 5);
        assert_eq!(v.len(), 5);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }
}
