//! Integer partitions and symmetric-group conjugacy class data.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::HurwitzError;
use core::fmt;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, HurwitzError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(HurwitzError::InvalidPartition(String::from(
                "parts must be positive",
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The trivial type `(1, ..., 1)` of size n.
    pub fn trivial(n: usize) -> Self {
        Partition {
            parts: vec![1; n],
        }
    }

    /// The simple branch type `(2, 1, ..., 1)` of size d (requires d >= 2).
    pub fn transposition(d: usize) -> Result<Self, HurwitzError> {
        if d < 2 {
            return Err(HurwitzError::InvalidPartition(String::from(
                "a transposition type needs d >= 2",
            )));
        }
        let mut parts = vec![1; d - 1];
        parts[0] = 2;
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_simple(&self, d: usize) -> bool {
        self.n() == d && self.parts.first() == Some(&2) && self.parts.iter().skip(1).all(|&p| p == 1)
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Multiplicities as (value, count) pairs, descending in value.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Centralizer order of the class in S_n: `prod k^{m_k} m_k!`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::from(1u32);
        for (value, count) in self.multiplicities() {
            z *= BigUint::from(value).pow(count as u32);
            z *= factorial(count);
        }
        z
    }

    /// Size of the conjugacy class in S_n: `n! / centralizer`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.n()) / self.centralizer_order()
    }

    /// Parity of the permutations in the class: `n - (number of parts)` mod 2.
    pub fn parity(&self) -> usize {
        (self.n() - self.len()) % 2
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
            first = false;
        }
        Ok(())
    }
}

pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// All partitions of n in reverse-lexicographic order:
/// `(n), (n-1,1), ..., (1,...,1)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn gen(n: usize, max: usize, out: &mut Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = n.min(max);
        for k in (1..=top).rev() {
            prefix.push(k);
            gen(n - k, k, out, prefix);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    gen(n, n, &mut raw, &mut Vec::new());
    raw.into_iter().map(|parts| Partition { parts }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_three_in_order() {
        let ps = partitions_of(3);
        let parts: Vec<&[usize]> = ps.iter().map(|p| p.parts()).collect();
        assert_eq!(parts, vec![&[3][..], &[2, 1][..], &[1, 1, 1][..]]);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(10).len(), 42);
        // Independent oracle: Euler's pentagonal-number recurrence.
        let mut p = vec![1i64];
        for n in 1..=10usize {
            let mut acc = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g1 > n && g2 > n {
                    break;
                }
                let sign = if k % 2 == 0 { -1 } else { 1 };
                if g1 <= n {
                    acc += sign * p[n - g1];
                }
                if g2 <= n {
                    acc += sign * p[n - g2];
                }
                k += 1;
            }
            p.push(acc);
            assert_eq!(partitions_of(n).len() as i64, acc, "p({})", n);
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=7 {
            let total: BigUint = partitions_of(n).iter().map(Partition::class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn transposition_class_size() {
        // d=4: 6 transpositions.
        let t = Partition::transposition(4).unwrap();
        assert_eq!(t.class_size(), BigUint::from(6u32));
        assert!(t.is_simple(4));
        assert_eq!(t.parity(), 1);
    }

    #[test]
    fn rejects_zero_parts() {
        assert!(Partition::new(vec![2, 0]).is_err());
    }
}
