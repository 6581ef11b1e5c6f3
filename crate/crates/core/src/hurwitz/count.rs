//! Counting tuples of permutations with prescribed cycle types and identity
//! product: the Frobenius character sum for all tuples, two independent
//! transitivity corrections (exponential-formula inversion and a direct DP
//! over orbit partitions), and a brute-force enumerator used as an oracle.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::character::{character_table, CharacterTable, CHARACTER_DEGREE_CAP};
use super::partition::{binomial, factorial, Partition};
use super::HurwitzError;

/// The direct orbit-partition DP runs up to this degree (d! * Bell(d) states).
pub const DP_DEGREE_CAP: usize = 5;

/// A branch profile: the covering degree and the multiset of branch types.
/// Types are kept sorted so profiles are canonical memo keys.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Profile {
    d: usize,
    types: Vec<Partition>,
}

impl Profile {
    pub fn new(d: usize, mut types: Vec<Partition>) -> Result<Self, HurwitzError> {
        for t in &types {
            if t.n() != d {
                return Err(HurwitzError::TypeDegreeMismatch {
                    expected: d,
                    got: t.n(),
                });
            }
        }
        types.sort();
        Ok(Profile { d, types })
    }

    /// Profile of `w` simple branch points.
    pub fn simple(d: usize, w: usize) -> Result<Self, HurwitzError> {
        if w == 0 {
            return Profile::new(d, Vec::new());
        }
        let t = Partition::transposition(d)?;
        Profile::new(d, vec![t; w])
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn types(&self) -> &[Partition] {
        &self.types
    }

    pub fn branch_points(&self) -> usize {
        self.types.len()
    }

    /// Total ramification parity: factorization counts vanish when odd.
    pub fn parity(&self) -> usize {
        self.types.iter().map(Partition::parity).sum::<usize>() % 2
    }

    /// Genus of a connected covering with this profile, when it is a
    /// nonnegative integer: `2 - 2g = 2d - sum (d - #parts)`.
    pub fn genus(&self) -> Option<i64> {
        let ram: i64 = self
            .types
            .iter()
            .map(|t| (self.d - t.len()) as i64)
            .sum();
        let two_g = ram + 2 - 2 * self.d as i64;
        if two_g % 2 != 0 || two_g < 0 {
            None
        } else {
            Some(two_g / 2)
        }
    }
}

impl core::fmt::Display for Profile {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut first = true;
        for t in &self.types {
            if !first {
                write!(f, ";")?;
            }
            write!(f, "{}", t)?;
            first = false;
        }
        Ok(())
    }
}

fn table_cache(d: usize, cache: &mut BTreeMap<usize, CharacterTable>) -> &CharacterTable {
    cache
        .entry(d)
        .or_insert_with(|| character_table(d).expect("degree within cap"))
}

/// Frobenius count of tuples `(s_1, ..., s_w)` with `s_i` in the class of
/// `types[i]` and product the identity:
/// `(1/d!) sum_lambda f^2 prod_i |C_i| chi_lambda(C_i) / f`.
pub fn count_factorizations(profile: &Profile) -> Result<BigUint, HurwitzError> {
    let mut cache = BTreeMap::new();
    Ok(frobenius_count(profile, &mut cache))
}

fn frobenius_count(profile: &Profile, cache: &mut BTreeMap<usize, CharacterTable>) -> BigUint {
    let d = profile.d;
    if d == 0 {
        return BigUint::one();
    }
    if profile.parity() == 1 {
        return BigUint::zero();
    }
    let table = table_cache(d, cache).clone();
    let class_cols: Vec<usize> = profile
        .types
        .iter()
        .map(|t| table.index_of(t).expect("class present"))
        .collect();
    let mut acc = BigRational::zero();
    for (row, &f) in table.dims.iter().enumerate() {
        let f_int = BigInt::from(f);
        let mut term = BigRational::from_integer(&f_int * &f_int);
        for &col in &class_cols {
            let chi = table.values[row][col];
            if chi == 0 {
                term = BigRational::zero();
                break;
            }
            let size = BigInt::from(table.class_sizes[col].clone());
            term *= BigRational::new(size * BigInt::from(chi), f_int.clone());
        }
        acc += term;
    }
    acc /= BigRational::from_integer(BigInt::from(factorial(d)));
    assert!(acc.is_integer(), "Frobenius sum must be an integer");
    assert!(!acc.is_negative(), "tuple counts are nonnegative");
    acc.to_integer().to_biguint().expect("nonnegative")
}

/// Distinct sub-multisets of the parts of `t` with given sum, each paired
/// with the complementary multiset.
fn sub_multisets(t: &Partition, sum: usize) -> Vec<(Partition, Partition)> {
    let groups = t.multiplicities();
    let mut out = Vec::new();
    fn rec(
        groups: &[(usize, usize)],
        idx: usize,
        remaining: usize,
        taken: &mut Vec<usize>,
        left: &mut Vec<usize>,
        out: &mut Vec<(Partition, Partition)>,
    ) {
        if idx == groups.len() {
            if remaining == 0 {
                let a = Partition::new(taken.clone()).unwrap_or_else(|_| Partition::empty());
                let b = Partition::new(left.clone()).unwrap_or_else(|_| Partition::empty());
                let a = if taken.is_empty() { Partition::empty() } else { a };
                let b = if left.is_empty() { Partition::empty() } else { b };
                out.push((a, b));
            }
            return;
        }
        let (value, count) = groups[idx];
        for take in 0..=count {
            if take * value > remaining {
                break;
            }
            for _ in 0..take {
                taken.push(value);
            }
            for _ in 0..(count - take) {
                left.push(value);
            }
            rec(groups, idx + 1, remaining - take * value, taken, left, out);
            for _ in 0..take {
                taken.pop();
            }
            for _ in 0..(count - take) {
                left.pop();
            }
        }
    }
    rec(&groups, 0, sum, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// One way of splitting a whole profile across (block, complement): the
/// multiplicity-weighted choice of a sub-type at every branch point.
struct Split {
    ways: BigUint,
    block: Vec<Partition>,
    rest: Vec<Partition>,
}

/// Enumerates the grouped distributions of the profile's branch points over
/// a block of size `d1` and its complement, collapsing identical types into
/// multinomial weights.
fn enumerate_splits(profile: &Profile, d1: usize) -> Vec<Split> {
    // Group identical types with multiplicities.
    let mut grouped: Vec<(Partition, usize)> = Vec::new();
    for t in &profile.types {
        match grouped.last_mut() {
            Some((g, c)) if g == t => *c += 1,
            _ => grouped.push((t.clone(), 1)),
        }
    }
    let per_type_options: Vec<Vec<(Partition, Partition)>> = grouped
        .iter()
        .map(|(t, _)| sub_multisets(t, d1))
        .collect();

    let mut splits = vec![Split {
        ways: BigUint::one(),
        block: Vec::new(),
        rest: Vec::new(),
    }];
    for ((_, count), options) in grouped.iter().zip(&per_type_options) {
        if options.is_empty() {
            return Vec::new();
        }
        let mut next: Vec<Split> = Vec::new();
        // Distribute `count` identical branch points over the options.
        let distributions = compositions(*count, options.len());
        for split in &splits {
            for dist in &distributions {
                let mut ways = split.ways.clone();
                ways *= multinomial(*count, dist);
                let mut block = split.block.clone();
                let mut rest = split.rest.clone();
                for (opt_idx, &copies) in dist.iter().enumerate() {
                    for _ in 0..copies {
                        block.push(options[opt_idx].0.clone());
                        rest.push(options[opt_idx].1.clone());
                    }
                }
                next.push(Split { ways, block, rest });
            }
        }
        splits = next;
    }
    splits
}

/// All ways to write `n` as an ordered sum of `k` nonnegative integers.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, k - 1) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

fn multinomial(n: usize, parts: &[usize]) -> BigUint {
    debug_assert_eq!(parts.iter().sum::<usize>(), n);
    let mut acc = factorial(n);
    for &p in parts {
        acc /= factorial(p);
    }
    acc
}

/// Transitive (connected) tuple count by exponential-formula inversion: the
/// block of the first sheet is split off with every compatible sub-profile.
pub fn count_transitive_inversion(profile: &Profile) -> Result<BigUint, HurwitzError> {
    let mut tables = BTreeMap::new();
    let mut conn_memo: BTreeMap<Profile, BigUint> = BTreeMap::new();
    let mut all_memo: BTreeMap<Profile, BigUint> = BTreeMap::new();
    Ok(connected_count(
        profile,
        &mut tables,
        &mut conn_memo,
        &mut all_memo,
    ))
}

fn all_count_memo(
    profile: &Profile,
    tables: &mut BTreeMap<usize, CharacterTable>,
    all_memo: &mut BTreeMap<Profile, BigUint>,
) -> BigUint {
    if let Some(v) = all_memo.get(profile) {
        return v.clone();
    }
    let v = frobenius_count(profile, tables);
    all_memo.insert(profile.clone(), v.clone());
    v
}

fn connected_count(
    profile: &Profile,
    tables: &mut BTreeMap<usize, CharacterTable>,
    conn_memo: &mut BTreeMap<Profile, BigUint>,
    all_memo: &mut BTreeMap<Profile, BigUint>,
) -> BigUint {
    if let Some(v) = conn_memo.get(profile) {
        return v.clone();
    }
    let d = profile.d;
    let mut total = BigInt::from(all_count_memo(profile, tables, all_memo));
    for d1 in 1..d {
        for split in enumerate_splits(profile, d1) {
            // Drop empty sub-types: a branch point with nothing in the block
            // is impossible (restriction to a nonempty block has full size d1).
            if split.block.iter().any(Partition::is_empty) {
                continue;
            }
            debug_assert!(split.rest.iter().all(|p| !p.is_empty()));
            let block_profile = Profile::new(d1, split.block).expect("block profile");
            let rest_profile = Profile::new(d - d1, split.rest).expect("rest profile");
            let conn = connected_count(&block_profile, tables, conn_memo, all_memo);
            if conn.is_zero() {
                continue;
            }
            let rest = all_count_memo(&rest_profile, tables, all_memo);
            if rest.is_zero() {
                continue;
            }
            let ways = split.ways * binomial(d - 1, d1 - 1) * conn * rest;
            total -= BigInt::from(ways);
        }
    }
    assert!(!total.is_negative(), "inversion must stay nonnegative");
    let v = total.to_biguint().unwrap();
    conn_memo.insert(profile.clone(), v.clone());
    v
}

// --- Small permutation utilities for the DP and brute-force oracles. ---

fn all_perms(d: usize) -> Vec<Vec<u8>> {
    fn rec(current: &mut Vec<u8>, used: &mut Vec<bool>, d: usize, out: &mut Vec<Vec<u8>>) {
        if current.len() == d {
            out.push(current.clone());
            return;
        }
        for v in 0..d as u8 {
            if !used[v as usize] {
                used[v as usize] = true;
                current.push(v);
                rec(current, used, d, out);
                current.pop();
                used[v as usize] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; d], d, &mut out);
    out
}

/// `(a * b)(x) = b(a(x))`: apply `a` first.
fn perm_mul(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn cycle_type(p: &[u8]) -> Partition {
    let d = p.len();
    let mut seen = vec![false; d];
    let mut parts = Vec::new();
    for start in 0..d {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = p[cur] as usize;
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts).expect("positive cycle lengths")
}

/// Restricted-growth-string encoding of the orbit partition of a permutation.
fn cycle_rgs(p: &[u8]) -> Vec<u8> {
    let d = p.len();
    let mut block = vec![u8::MAX; d];
    let mut next = 0u8;
    for start in 0..d {
        if block[start] != u8::MAX {
            continue;
        }
        let mut cur = start;
        while block[cur] == u8::MAX {
            block[cur] = next;
            cur = p[cur] as usize;
        }
        next += 1;
    }
    block
}

fn rgs_canon(labels: &[u8]) -> Vec<u8> {
    let mut map: Vec<Option<u8>> = vec![None; labels.len() + 1];
    let mut next = 0u8;
    labels
        .iter()
        .map(|&l| {
            let slot = &mut map[l as usize];
            match slot {
                Some(v) => *v,
                None => {
                    let v = next;
                    *slot = Some(v);
                    next += 1;
                    v
                }
            }
        })
        .collect()
}

fn rgs_join(a: &[u8], b: &[u8]) -> Vec<u8> {
    let d = a.len();
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for i in 1..d {
        for j in 0..i {
            if a[i] == a[j] || b[i] == b[j] {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let labels: Vec<u8> = (0..d).map(|i| find(&mut parent, i) as u8).collect();
    rgs_canon(&labels)
}

fn all_rgs(d: usize) -> Vec<Vec<u8>> {
    fn rec(prefix: &mut Vec<u8>, max: u8, d: usize, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == d {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=max + 1 {
            prefix.push(v);
            let next_max = max.max(v);
            rec(prefix, next_max, d, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut prefix = vec![0u8];
    if d == 0 {
        return vec![Vec::new()];
    }
    rec(&mut prefix, 0, d, &mut out);
    out
}

/// Transitive count by dynamic programming over pairs (running product,
/// orbit partition generated so far). State space is `d! * Bell(d)`.
pub fn count_transitive_dp(profile: &Profile) -> Result<BigUint, HurwitzError> {
    let d = profile.d;
    if d > DP_DEGREE_CAP {
        return Err(HurwitzError::DegreeCap {
            degree: d,
            cap: DP_DEGREE_CAP,
        });
    }
    if d == 0 {
        return Ok(BigUint::one());
    }
    let perms = all_perms(d);
    let perm_index: BTreeMap<Vec<u8>, usize> =
        perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let rgs = all_rgs(d);
    let rgs_index: BTreeMap<Vec<u8>, usize> =
        rgs.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let nperm = perms.len();
    let nrgs = rgs.len();

    // Class members and their orbit partitions, per branch type.
    let mut class_members: BTreeMap<&Partition, Vec<usize>> = BTreeMap::new();
    for t in profile.types() {
        class_members.entry(t).or_insert_with(|| {
            (0..nperm)
                .filter(|&i| &cycle_type(&perms[i]) == t)
                .collect()
        });
    }
    // Join table: partition x permutation-cycle-partition.
    let perm_rgs: Vec<usize> = perms
        .iter()
        .map(|p| rgs_index[&cycle_rgs(p)])
        .collect();
    let mut join_table: Vec<Vec<usize>> = vec![vec![usize::MAX; nrgs]; nrgs];
    #[allow(clippy::needless_range_loop)]
    for a in 0..nrgs {
        for b in 0..nrgs {
            join_table[a][b] = rgs_index[&rgs_join(&rgs[a], &rgs[b])];
        }
    }

    let discrete = rgs_index[&(0..d as u8).collect::<Vec<u8>>()];
    let identity = perm_index[&(0..d as u8).collect::<Vec<u8>>()];
    let full = rgs_index[&vec![0u8; d]];

    let mut dist: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
    dist.insert((identity, discrete), BigUint::one());
    for t in profile.types() {
        let members = &class_members[t];
        let mut next: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
        for ((prod, part), count) in &dist {
            for &m in members {
                let new_prod = perm_index[&perm_mul(&perms[*prod], &perms[m])];
                let new_part = join_table[*part][perm_rgs[m]];
                let slot = next
                    .entry((new_prod, new_part))
                    .or_insert_with(BigUint::zero);
                *slot += count;
            }
        }
        dist = next;
    }
    Ok(dist.get(&(identity, full)).cloned().unwrap_or_default())
}

/// Brute-force enumeration over all tuples in the prescribed classes:
/// `(all, transitive)`. Exponential; intended for small d and w.
pub fn count_by_enumeration(profile: &Profile) -> (BigUint, BigUint) {
    let d = profile.d;
    if d == 0 || profile.types().is_empty() {
        let one = BigUint::one();
        let transitive = if d <= 1 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
        return (one, transitive);
    }
    let perms = all_perms(d);
    let classes: Vec<Vec<usize>> = profile
        .types()
        .iter()
        .map(|t| {
            (0..perms.len())
                .filter(|&i| &cycle_type(&perms[i]) == t)
                .collect()
        })
        .collect();
    let identity: Vec<u8> = (0..d as u8).collect();
    let mut all = BigUint::zero();
    let mut transitive = BigUint::zero();
    let mut chosen: Vec<usize> = Vec::with_capacity(classes.len());

    fn dfs(
        idx: usize,
        product: Vec<u8>,
        classes: &[Vec<usize>],
        perms: &[Vec<u8>],
        identity: &[u8],
        chosen: &mut Vec<usize>,
        all: &mut BigUint,
        transitive: &mut BigUint,
    ) {
        if idx == classes.len() {
            if product == identity {
                *all += 1u32;
                // Transitivity: join the cycle partitions of the tuple.
                let d = identity.len();
                let mut joined = cycle_rgs(&perms[chosen[0]]);
                for &c in &chosen[1..] {
                    joined = rgs_join(&joined, &cycle_rgs(&perms[c]));
                }
                if joined.iter().all(|&b| b == 0) || d == 1 {
                    *transitive += 1u32;
                }
            }
            return;
        }
        for &m in &classes[idx] {
            chosen.push(m);
            dfs(
                idx + 1,
                perm_mul(&product, &perms[m]),
                classes,
                perms,
                identity,
                chosen,
                all,
                transitive,
            );
            chosen.pop();
        }
    }
    dfs(
        0,
        identity.clone(),
        &classes,
        &perms,
        &identity,
        &mut chosen,
        &mut all,
        &mut transitive,
    );
    (all, transitive)
}

/// Group-algebra convolution oracle for the all-tuples count: distributions
/// over S_d convolved with class indicator vectors.
pub fn count_factorizations_dp(profile: &Profile) -> Result<BigUint, HurwitzError> {
    let d = profile.d;
    if d > 6 {
        return Err(HurwitzError::DegreeCap { degree: d, cap: 6 });
    }
    if d == 0 {
        return Ok(BigUint::one());
    }
    let perms = all_perms(d);
    let perm_index: BTreeMap<Vec<u8>, usize> =
        perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let identity = perm_index[&(0..d as u8).collect::<Vec<u8>>()];
    let mut dist = vec![BigUint::zero(); perms.len()];
    dist[identity] = BigUint::one();
    for t in profile.types() {
        let members: Vec<usize> = (0..perms.len())
            .filter(|&i| &cycle_type(&perms[i]) == t)
            .collect();
        let mut next = vec![BigUint::zero(); perms.len()];
        for (g, count) in dist.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            for &m in &members {
                let h = perm_index[&perm_mul(&perms[g], &perms[m])];
                next[h] += count;
            }
        }
        dist = next;
    }
    Ok(dist[identity].clone())
}

/// Result of a transitive count: exact tuple counts and the covering count
/// `transitive / d!` (fractional values are legitimate, e.g. degree 2 with
/// two branch points gives 1/2).
#[derive(Clone, Debug)]
pub struct HurwitzResult {
    pub profile: Profile,
    pub all_tuples: BigUint,
    pub transitive_tuples: BigUint,
    pub hurwitz_number: BigRational,
    pub methods: Vec<&'static str>,
}

/// Transitive count with cross-validation: the inversion method always
/// runs; for `d <= 5` the orbit-partition DP runs too and must agree.
pub fn count_transitive(profile: &Profile) -> Result<HurwitzResult, HurwitzError> {
    if profile.d > CHARACTER_DEGREE_CAP {
        return Err(HurwitzError::DegreeCap {
            degree: profile.d,
            cap: CHARACTER_DEGREE_CAP,
        });
    }
    let all = count_factorizations(profile)?;
    let transitive = count_transitive_inversion(profile)?;
    let mut methods = vec!["frobenius-inversion"];
    if profile.d <= DP_DEGREE_CAP {
        let dp = count_transitive_dp(profile)?;
        assert_eq!(
            dp, transitive,
            "orbit DP and inversion disagree on {}",
            profile
        );
        methods.push("orbit-partition-dp");
    }
    assert!(transitive <= all);
    let hurwitz_number = BigRational::new(
        BigInt::from(transitive.clone()),
        BigInt::from(factorial(profile.d)),
    );
    Ok(HurwitzResult {
        profile: profile.clone(),
        all_tuples: all,
        transitive_tuples: transitive,
        hurwitz_number,
        methods,
    })
}

/// The simple Hurwitz number: transitive tuples of `w = 2g + 2d - 2`
/// transpositions with identity product, divided by `d!`.
pub fn simple_hurwitz_number(d: usize, g: usize) -> Result<HurwitzResult, HurwitzError> {
    if d == 0 {
        return Err(HurwitzError::InvalidPartition(String::from(
            "degree must be positive",
        )));
    }
    if d == 1 && g > 0 {
        return Err(HurwitzError::InvalidPartition(String::from(
            "a degree-1 covering has genus 0",
        )));
    }
    let w = 2 * g + 2 * d - 2;
    let profile = Profile::simple(d, w)?;
    count_transitive(&profile)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn three_sheets_four_transpositions() {
        // Hand Frobenius: (3^4/6)(1 + 1 + 0) = 27 tuples.
        let p = Profile::simple(3, 4).unwrap();
        assert_eq!(count_factorizations(&p).unwrap(), BigUint::from(27u32));
        let (all, transitive) = count_by_enumeration(&p);
        assert_eq!(all, BigUint::from(27u32));
        // 3 intransitive tuples (a fixed point and four flips of the rest).
        assert_eq!(transitive, BigUint::from(24u32));
        let r = count_transitive(&p).unwrap();
        assert_eq!(r.transitive_tuples, BigUint::from(24u32));
        assert_eq!(r.hurwitz_number, BigRational::from_integer(4.into()));
    }

    #[test]
    fn three_sheets_six_transpositions() {
        let p = Profile::simple(3, 6).unwrap();
        assert_eq!(count_factorizations(&p).unwrap(), BigUint::from(243u32));
        let r = count_transitive(&p).unwrap();
        assert_eq!(r.transitive_tuples, BigUint::from(240u32));
        assert_eq!(r.hurwitz_number, BigRational::from_integer(40.into()));
    }

    #[test]
    fn two_sheets_two_transpositions() {
        let p = Profile::simple(2, 2).unwrap();
        let (all, transitive) = count_by_enumeration(&p);
        assert_eq!(all, BigUint::one());
        assert_eq!(transitive, BigUint::one());
        let r = count_transitive(&p).unwrap();
        assert_eq!(
            r.hurwitz_number,
            BigRational::new(1.into(), 2.into()),
            "fractional count from the covering automorphism"
        );
    }

    #[test]
    fn parity_obstruction() {
        // Odd number of transpositions can never multiply to the identity.
        let p = Profile::simple(3, 5).unwrap();
        assert_eq!(count_factorizations(&p).unwrap(), BigUint::zero());
    }

    #[test]
    fn frobenius_matches_enumeration_small() {
        for (d, w) in [(2usize, 4usize), (3, 4), (4, 4)] {
            let p = Profile::simple(d, w).unwrap();
            let frob = count_factorizations(&p).unwrap();
            let (all, transitive) = count_by_enumeration(&p);
            assert_eq!(frob, all, "d={} w={}", d, w);
            let inv = count_transitive_inversion(&p).unwrap();
            assert_eq!(inv, transitive, "d={} w={}", d, w);
            let dp = count_transitive_dp(&p).unwrap();
            assert_eq!(dp, transitive, "d={} w={}", d, w);
        }
    }

    #[test]
    fn mixed_profile_cross_check() {
        // Genus formula and counts for a 3-cycle pair on 4 sheets plus
        // transpositions.
        let p = Profile::new(
            4,
            vec![part(&[3, 1]), part(&[3, 1]), part(&[2, 1, 1]), part(&[2, 1, 1])],
        )
        .unwrap();
        let frob = count_factorizations(&p).unwrap();
        let (all, transitive) = count_by_enumeration(&p);
        assert_eq!(frob, all);
        assert_eq!(count_transitive_inversion(&p).unwrap(), transitive);
        assert_eq!(count_transitive_dp(&p).unwrap(), transitive);
    }

    #[test]
    fn convolution_oracle_agrees() {
        let p = Profile::new(4, vec![part(&[2, 2]), part(&[2, 2]), part(&[4]), part(&[4])])
            .unwrap();
        assert_eq!(
            count_factorizations(&p).unwrap(),
            count_factorizations_dp(&p).unwrap()
        );
    }

    #[test]
    fn simple_hurwitz_values() {
        // Degree 3 genus 1: the 40 in the cubic orbit count.
        let r = simple_hurwitz_number(3, 1).unwrap();
        assert_eq!(r.hurwitz_number, BigRational::from_integer(40.into()));
        // Degree 2 genus 0: 1/2.
        let r2 = simple_hurwitz_number(2, 0).unwrap();
        assert_eq!(r2.hurwitz_number, BigRational::new(1.into(), 2.into()));
        // Degree 1: a single unbranched sheet.
        let r1 = simple_hurwitz_number(1, 0).unwrap();
        assert_eq!(r1.hurwitz_number, BigRational::from_integer(1.into()));
    }

    #[test]
    fn quartic_hurwitz_number() {
        // Degree 4, genus 3: 255 * (3^10 - 1) / 2 = 7,528,620.
        let r = simple_hurwitz_number(4, 3).unwrap();
        assert_eq!(
            r.hurwitz_number,
            BigRational::from_integer(7_528_620.into())
        );
        assert_eq!(r.profile.branch_points(), 12);
    }

    #[test]
    fn genus_from_profile() {
        assert_eq!(Profile::simple(3, 6).unwrap().genus(), Some(1));
        assert_eq!(Profile::simple(4, 12).unwrap().genus(), Some(3));
        assert_eq!(Profile::simple(2, 2).unwrap().genus(), Some(0));
    }
}
