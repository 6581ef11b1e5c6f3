//! Exact character tables of symmetric groups by the Murnaghan-Nakayama
//! border-strip recursion, with orthogonality checked before a table is
//! handed out.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};

use super::partition::{factorial, partitions_of, Partition};
use super::HurwitzError;

/// Character values stay well inside i64 up to this degree.
pub const CHARACTER_DEGREE_CAP: usize = 9;

/// Integer character table of S_d. Rows are indexed by irreducibles
/// (partitions), columns by conjugacy classes (partitions), both in the
/// fixed reverse-lexicographic order of [`partitions_of`].
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub d: usize,
    pub partitions: Vec<Partition>,
    /// `values[row][col]` is the character of irreducible `row` on class `col`.
    pub values: Vec<Vec<i64>>,
    /// Dimensions `f_lambda` (the first column in trivial-class order).
    pub dims: Vec<u64>,
    pub class_sizes: Vec<BigUint>,
}

impl CharacterTable {
    pub fn index_of(&self, class: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == class)
    }

    pub fn value(&self, irrep: usize, class: usize) -> i64 {
        self.values[irrep][class]
    }
}

/// Border-strip recursion on beta-sets. `beta` holds the strictly decreasing
/// first-column hook lengths of the current shape.
fn mn_value(
    beta: &[usize],
    mu: &[usize],
    memo: &mut BTreeMap<(Vec<usize>, Vec<usize>), i64>,
) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (beta.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = mu[0];
    let rest = &mu[1..];
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beta.contains(&target) {
            continue;
        }
        // Height = number of beta entries strictly between target and b.
        let height = beta
            .iter()
            .filter(|&&x| target < x && x < b)
            .count();
        let mut next: Vec<usize> = beta
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, &x)| x)
            .collect();
        next.push(target);
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sub = mn_value(&next, rest, memo);
        total += if height % 2 == 0 { sub } else { -sub };
    }
    memo.insert(key, total);
    total
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let parts = lambda.parts();
    let l = parts.len();
    (0..l).map(|i| parts[i] + (l - 1 - i)).collect()
}

/// Character value on one class; exposed for spot checks.
pub fn character_value(lambda: &Partition, class: &Partition) -> i64 {
    assert_eq!(lambda.n(), class.n(), "sizes must match");
    let mut memo = BTreeMap::new();
    mn_value(&beta_set(lambda), class.parts(), &mut memo)
}

/// Full character table of S_d with orthogonality asserted.
pub fn character_table(d: usize) -> Result<CharacterTable, HurwitzError> {
    if d == 0 || d > CHARACTER_DEGREE_CAP {
        return Err(HurwitzError::DegreeCap {
            degree: d,
            cap: CHARACTER_DEGREE_CAP,
        });
    }
    let partitions = partitions_of(d);
    let class_sizes: Vec<BigUint> = partitions.iter().map(Partition::class_size).collect();
    let mut memo = BTreeMap::new();
    let values: Vec<Vec<i64>> = partitions
        .iter()
        .map(|lambda| {
            let beta = beta_set(lambda);
            partitions
                .iter()
                .map(|mu| mn_value(&beta, mu.parts(), &mut memo))
                .collect()
        })
        .collect();
    let trivial_col = partitions
        .iter()
        .position(|p| p.is_trivial())
        .expect("trivial class present");
    let dims: Vec<u64> = values
        .iter()
        .map(|row| {
            let v = row[trivial_col];
            assert!(v > 0, "dimensions are positive");
            v as u64
        })
        .collect();

    let table = CharacterTable {
        d,
        partitions,
        values,
        dims,
        class_sizes,
    };
    assert_orthogonality(&table);
    Ok(table)
}

/// Row orthogonality (sum over classes weighted by class size) and column
/// orthogonality (sum over irreducibles equals the centralizer order).
fn assert_orthogonality(t: &CharacterTable) {
    let n = t.partitions.len();
    let order = factorial(t.d);
    let order_int = BigInt::from(order.clone());
    for a in 0..n {
        for b in 0..=a {
            let mut acc = BigInt::from(0);
            for c in 0..n {
                let prod = BigInt::from(t.values[a][c]) * BigInt::from(t.values[b][c]);
                acc += prod * BigInt::from(t.class_sizes[c].clone());
            }
            let expected = if a == b {
                order_int.clone()
            } else {
                BigInt::from(0)
            };
            assert_eq!(acc, expected, "row orthogonality ({}, {})", a, b);
        }
    }
    for c in 0..n {
        let mut acc = BigInt::from(0);
        for r in 0..n {
            acc += BigInt::from(t.values[r][c]) * BigInt::from(t.values[r][c]);
        }
        let centralizer = BigInt::from(t.partitions[c].centralizer_order());
        assert_eq!(acc, centralizer, "column orthogonality at class {}", c);
    }
    // Sum of squared dimensions is the group order.
    let mut acc = BigUint::from(0u32);
    for &f in &t.dims {
        acc += BigUint::from(f) * BigUint::from(f);
    }
    assert_eq!(acc, order, "sum of f^2");
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    /// Hook length formula, as an independent oracle for dimensions.
    fn dim_by_hooks(lambda: &Partition) -> u64 {
        use num_traits::ToPrimitive;
        let parts = lambda.parts();
        let n = lambda.n();
        let col_len = |j: usize| parts.iter().filter(|&&p| p > j).count();
        let mut hooks: BigUint = BigUint::from(1u32);
        for (i, &p) in parts.iter().enumerate() {
            for j in 0..p {
                let arm = p - 1 - j;
                let leg = col_len(j) - 1 - i;
                hooks *= BigUint::from(arm + leg + 1);
            }
        }
        (factorial(n) / hooks).to_u64().unwrap()
    }

    #[test]
    fn s3_table_matches_hand_values() {
        let t = character_table(3).unwrap();
        // Partitions in order: (3), (2,1), (1,1,1).
        // Rows: trivial = (3), standard = (2,1), sign = (1,1,1).
        assert_eq!(t.values[0], vec![1, 1, 1]);
        assert_eq!(t.values[1], vec![-1, 0, 2]);
        assert_eq!(t.values[2], vec![1, -1, 1]);
        assert_eq!(t.dims, vec![1, 2, 1]);
    }

    #[test]
    fn standard_rep_on_three_cycle() {
        // chi_(2,1) on class (3) = -1: a single 3-hook of height 1.
        let lam = Partition::new(vec![2, 1]).unwrap();
        let cls = Partition::new(vec![3]).unwrap();
        assert_eq!(character_value(&lam, &cls), -1);
    }

    #[test]
    fn trivial_row_is_all_ones() {
        for d in 1..=6 {
            let t = character_table(d).unwrap();
            assert!(t.values[0].iter().all(|&v| v == 1));
        }
    }

    #[test]
    fn dims_match_hook_length_formula() {
        for d in 1..=8 {
            let t = character_table(d).unwrap();
            for (i, lam) in t.partitions.iter().enumerate() {
                assert_eq!(t.dims[i], dim_by_hooks(lam), "dim of {}", lam);
            }
        }
    }

    #[test]
    fn sign_character() {
        // The last row is the sign character: (-1)^parity on each class.
        for d in 2..=6 {
            let t = character_table(d).unwrap();
            let last = t.values.last().unwrap();
            for (c, mu) in t.partitions.iter().enumerate() {
                let expected = if mu.parity() % 2 == 0 { 1 } else { -1 };
                assert_eq!(last[c], expected);
            }
        }
    }

    #[test]
    fn degree_cap_enforced() {
        assert!(character_table(10).is_err());
        assert!(character_table(0).is_err());
        assert!(character_table(9).is_ok());
    }
}
