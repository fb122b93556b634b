//! Separable integer partition classes of types A and B.
//!
//! A class of type B with modulus `k` is described by minimum values
//! `c_1..c_k` (with `c_r = r` mod `k`) and gap thresholds `d_1..d_k`. Members
//! have strictly increasing parts with `p_i >= c_r` and adjacent gaps at
//! least `max(1, d_r)`, where `r` is the residue of the larger part. Every
//! member splits uniquely into a basis element plus a non-decreasing
//! sequence of multiples of `k`.
//!
//! One consequence of the gap windows is baked into the membership
//! predicate: two adjacent parts sharing an odd-like residue (one with
//! `d_r = 0`) can never arise from a basis element plus multiples of `k`,
//! because the basis window `[1, k)` for such a residue contains no multiple
//! of `k`. [`is_member_type_b`] therefore excludes those pairs; for the
//! billiard class this is exactly the no-two-adjacent-odd-parts rule, and it
//! is what makes the decomposition exist and stay unique.
//!
//! Residues are written `1..=k`, with `k` standing for the zero residue.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Type-B class data: modulus, minimum values and gap thresholds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SipClassB {
    k: u64,
    c: Vec<u64>,
    dgaps: Vec<u64>,
}

/// Type-A class data; same shape as [`SipClassB`], but members are
/// multisets (repeated parts allowed when the gap threshold is zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SipClassA {
    k: u64,
    c: Vec<u64>,
    dgaps: Vec<u64>,
}

fn validate_class(k: u64, c: &[u64], dgaps: &[u64]) -> Result<()> {
    if k == 0 || c.len() != k as usize || dgaps.len() != k as usize {
        return Err(Error::InvalidClass);
    }
    for (idx, &cr) in c.iter().enumerate() {
        let r = idx as u64 + 1;
        if cr == 0 || cr % k != r % k {
            return Err(Error::InvalidClass);
        }
    }
    Ok(())
}

impl SipClassB {
    pub fn new(k: u64, c: Vec<u64>, dgaps: Vec<u64>) -> Result<Self> {
        validate_class(k, &c, &dgaps)?;
        Ok(SipClassB { k, c, dgaps })
    }

    /// The billiard class: modulus 2, `c = (1, 2)`, `d = (0, 1)`.
    pub fn billiard() -> Self {
        SipClassB { k: 2, c: alloc::vec![1, 2], dgaps: alloc::vec![0, 1] }
    }

    /// Modulus 3 with `d = (0, 0, 1)` (two odd-like residues).
    pub fn p32() -> Self {
        SipClassB { k: 3, c: alloc::vec![1, 2, 3], dgaps: alloc::vec![0, 0, 1] }
    }

    /// Modulus 3 with `d = (0, 1, 1)` (one odd-like residue).
    pub fn p31() -> Self {
        SipClassB { k: 3, c: alloc::vec![1, 2, 3], dgaps: alloc::vec![0, 1, 1] }
    }

    /// Minimal class of modulus `k` with `ell` odd-like residues:
    /// `c_r = r`, `d_r = 0` for `r <= ell` and `d_r = 1` otherwise.
    pub fn canonical(k: u64, ell: u64) -> Result<Self> {
        if k == 0 || ell > k {
            return Err(Error::InvalidClass);
        }
        let c = (1..=k).collect();
        let dgaps = (1..=k).map(|r| u64::from(r > ell)).collect();
        Ok(SipClassB { k, c, dgaps })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn c(&self) -> &[u64] {
        &self.c
    }

    pub fn dgaps(&self) -> &[u64] {
        &self.dgaps
    }

    /// Residue of `v` in `1..=k` (`k` stands for the zero residue).
    pub fn residue_of(&self, v: u64) -> u64 {
        let r = v % self.k;
        if r == 0 { self.k } else { r }
    }

    pub fn c_of(&self, r: u64) -> u64 {
        self.c[(r - 1) as usize]
    }

    pub fn dgap_of(&self, r: u64) -> u64 {
        self.dgaps[(r - 1) as usize]
    }

    /// True when residue `r` is odd-like (`d_r = 0`).
    pub fn is_odd_like(&self, r: u64) -> bool {
        self.dgap_of(r) == 0
    }

    /// Number of odd-like residues, `ell`.
    pub fn odd_like_count(&self) -> u64 {
        self.dgaps.iter().filter(|&&d| d == 0).count() as u64
    }

    /// True when `c_r = r` for every residue, i.e. every minimum value is
    /// the least positive representative. Residue-level counting is exact
    /// only then.
    pub fn has_minimal_c(&self) -> bool {
        self.c.iter().enumerate().all(|(idx, &cr)| cr == idx as u64 + 1)
    }

    /// The unique admissible basis successor of part `b` with residue `r`:
    /// the value congruent to `r` in `[b + max(d_r, 1), b + d_r + k)`, if it
    /// exists and is at least `c_r`.
    pub fn successor(&self, b: u64, r: u64) -> Option<u64> {
        let dr = self.dgap_of(r);
        let lo = b + dr.max(1);
        let hi = b + dr + self.k;
        let offset = (r as i64 - lo as i64).rem_euclid(self.k as i64) as u64;
        let v = lo + offset;
        (v < hi && v >= self.c_of(r)).then_some(v)
    }
}

impl SipClassA {
    pub fn new(k: u64, c: Vec<u64>, dgaps: Vec<u64>) -> Result<Self> {
        validate_class(k, &c, &dgaps)?;
        Ok(SipClassA { k, c, dgaps })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn residue_of(&self, v: u64) -> u64 {
        let r = v % self.k;
        if r == 0 { self.k } else { r }
    }

    pub fn c_of(&self, r: u64) -> u64 {
        self.c[(r - 1) as usize]
    }

    pub fn dgap_of(&self, r: u64) -> u64 {
        self.dgaps[(r - 1) as usize]
    }
}

/// Which smallest parts a basis chain may start from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmallestPartMode {
    /// Chains start at this value, which must be one of the `c_r`.
    FixedValue(u64),
    /// Chains may start at any `c_r`.
    Unrestricted,
}

fn root_values(cls: &SipClassB, mode: SmallestPartMode) -> Result<Vec<u64>> {
    match mode {
        SmallestPartMode::FixedValue(v) => {
            if cls.c().contains(&v) {
                Ok(alloc::vec![v])
            } else {
                Err(Error::InvalidClass)
            }
        }
        SmallestPartMode::Unrestricted => Ok(cls.c().to_vec()),
    }
}

/// Type-B membership: strictly increasing parts, `p_i >= c_r`, adjacent gaps
/// at least `max(1, d_r)` for the residue `r` of the larger part, and no
/// adjacent pair sharing an odd-like residue (see the module docs).
pub fn is_member_type_b(p: &Partition, cls: &SipClassB) -> bool {
    if !p.is_strict() {
        return false;
    }
    let parts: Vec<u64> = p.ascending().collect();
    for (i, &v) in parts.iter().enumerate() {
        let r = cls.residue_of(v);
        if v < cls.c_of(r) {
            return false;
        }
        if i > 0 {
            let prev = parts[i - 1];
            if v - prev < cls.dgap_of(r).max(1) {
                return false;
            }
            if cls.is_odd_like(r) && cls.residue_of(prev) == r {
                return false;
            }
        }
    }
    true
}

/// Type-B basis membership: the first part equals its `c_r`, every part is
/// at least its `c_r`, and each adjacent gap lies in
/// `[max(d_r, 1), d_r + k)` for the residue of the larger part.
pub fn is_basal_type_b(p: &Partition, cls: &SipClassB) -> bool {
    if !p.is_strict() {
        return false;
    }
    let parts: Vec<u64> = p.ascending().collect();
    for (i, &v) in parts.iter().enumerate() {
        let r = cls.residue_of(v);
        if i == 0 {
            if v != cls.c_of(r) {
                return false;
            }
            continue;
        }
        if v < cls.c_of(r) {
            return false;
        }
        let gap = v - parts[i - 1];
        let dr = cls.dgap_of(r);
        if gap < dr.max(1) || gap >= dr + cls.k() {
            return false;
        }
    }
    true
}

/// Type-A basis membership on multisets: the first part equals its `c_r`
/// and each adjacent gap lies in `[d_r, d_r + k)`.
pub fn is_basal_type_a(p: &Partition, cls: &SipClassA) -> bool {
    let parts: Vec<u64> = p.ascending().collect();
    for (i, &v) in parts.iter().enumerate() {
        let r = cls.residue_of(v);
        if i == 0 {
            if v != cls.c_of(r) {
                return false;
            }
            continue;
        }
        let gap = v - parts[i - 1];
        let dr = cls.dgap_of(r);
        if gap < dr || gap >= dr + cls.k() {
            return false;
        }
    }
    true
}

/// All basis elements with exactly `d` parts, generated along the successor
/// tree; the output length is the count `f_d`.
///
/// Output is sorted in decreasing lexicographic order of the decreasing part
/// sequences.
pub fn enumerate_basis(
    cls: &SipClassB,
    d: usize,
    mode: SmallestPartMode,
) -> Result<Vec<Partition>> {
    if d == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut chain = Vec::with_capacity(d);
    for root in root_values(cls, mode)? {
        chain.push(root);
        grow_basis_chain(cls, &mut chain, d, &mut out);
        chain.pop();
    }
    out.sort_unstable_by(|a: &Partition, b: &Partition| b.cmp(a));
    Ok(out)
}

fn grow_basis_chain(cls: &SipClassB, chain: &mut Vec<u64>, d: usize, out: &mut Vec<Partition>) {
    if chain.len() == d {
        let mut parts = chain.clone();
        parts.reverse();
        out.push(Partition::new(&parts).expect("basis chains have positive parts"));
        return;
    }
    let last = *chain.last().expect("chain is never empty here");
    for r in 1..=cls.k() {
        if let Some(next) = cls.successor(last, r) {
            chain.push(next);
            grow_basis_chain(cls, chain, d, out);
            chain.pop();
        }
    }
}

/// Basis counts `f_1..f_dmax` per part count.
///
/// Uses residue-level dynamic programming when every `c_r` is minimal
/// (successor existence then depends only on residues); falls back to
/// explicit enumeration otherwise.
pub fn count_basis(cls: &SipClassB, d_max: usize, mode: SmallestPartMode) -> Result<Vec<BigInt>> {
    Ok(count_basis_refined_all(cls, d_max, mode)?
        .into_iter()
        .map(|(a, b)| a + b)
        .collect())
}

/// Refined basis counts `(a_d, b_d)` for `d = 1..=d_max`: `a_d` counts basis
/// elements whose largest part has an odd-like residue, `b_d` the rest.
pub fn count_basis_refined_all(
    cls: &SipClassB,
    d_max: usize,
    mode: SmallestPartMode,
) -> Result<Vec<(BigInt, BigInt)>> {
    if cls.has_minimal_c() {
        count_refined_dp(cls, d_max, mode)
    } else {
        count_refined_enumerated(cls, d_max, mode)
    }
}

/// Refined count at a single `d`.
pub fn count_basis_refined(
    cls: &SipClassB,
    d: usize,
    mode: SmallestPartMode,
) -> Result<(BigInt, BigInt)> {
    let mut all = count_basis_refined_all(cls, d, mode)?;
    all.pop().ok_or(Error::InvalidClass)
}

fn count_refined_dp(
    cls: &SipClassB,
    d_max: usize,
    mode: SmallestPartMode,
) -> Result<Vec<(BigInt, BigInt)>> {
    let k = cls.k() as usize;
    // counts of chains by residue of the current largest part
    let mut by_residue: Vec<BigInt> = alloc::vec![BigInt::from(0); k];
    for root in root_values(cls, mode)? {
        by_residue[(cls.residue_of(root) - 1) as usize] += 1;
    }
    let mut out = Vec::with_capacity(d_max);
    for _ in 0..d_max {
        let mut odd_like = BigInt::from(0);
        let mut rest = BigInt::from(0);
        for r in 1..=k as u64 {
            let count = &by_residue[(r - 1) as usize];
            if cls.is_odd_like(r) {
                odd_like += count;
            } else {
                rest += count;
            }
        }
        out.push((odd_like, rest));

        let mut next: Vec<BigInt> = alloc::vec![BigInt::from(0); k];
        for r0 in 1..=k as u64 {
            let count = by_residue[(r0 - 1) as usize].clone();
            if count == BigInt::from(0) {
                continue;
            }
            for r in 1..=k as u64 {
                // a successor with residue r exists unless r is odd-like and
                // equals the current residue
                if cls.is_odd_like(r) && r == r0 {
                    continue;
                }
                next[(r - 1) as usize] += &count;
            }
        }
        by_residue = next;
    }
    Ok(out)
}

fn count_refined_enumerated(
    cls: &SipClassB,
    d_max: usize,
    mode: SmallestPartMode,
) -> Result<Vec<(BigInt, BigInt)>> {
    let mut out = Vec::with_capacity(d_max);
    for d in 1..=d_max {
        let mut odd_like = 0u64;
        let mut rest = 0u64;
        for p in enumerate_basis(cls, d, mode)? {
            if cls.is_odd_like(cls.residue_of(p.largest())) {
                odd_like += 1;
            } else {
                rest += 1;
            }
        }
        out.push((BigInt::from(odd_like), BigInt::from(rest)));
    }
    Ok(out)
}

/// Coefficients and initial values of the Lucas recursion satisfied by the
/// basis counts of a type-B class with all nonzero gap thresholds equal 1:
/// `f_{d+2} = T f_{d+1} - R f_d` with `T = k - 1`, `R = ell - k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucasParams {
    pub t: i64,
    pub r: i64,
    pub f1: BigInt,
    pub f2: BigInt,
}

/// Outcome of checking the Lucas recursion against enumerated/counted data.
#[derive(Debug, Clone)]
pub struct LucasReport {
    pub k: u64,
    pub ell: u64,
    pub params: LucasParams,
    pub counts: Vec<BigInt>,
    pub initial_ok: bool,
    pub recursion_ok: bool,
    /// Indices `d` (1-based) where `f_{d+2} = T f_{d+1} - R f_d` failed.
    pub failures: Vec<usize>,
}

impl LucasReport {
    pub fn ok(&self) -> bool {
        self.initial_ok && self.recursion_ok
    }
}

/// Expected `(f1, f2)` for a class and smallest-part mode.
fn expected_initial(cls: &SipClassB, mode: SmallestPartMode) -> Result<(BigInt, BigInt)> {
    let k = cls.k();
    let ell = cls.odd_like_count();
    match mode {
        SmallestPartMode::Unrestricted => {
            Ok((BigInt::from(k), BigInt::from(k * k - ell)))
        }
        SmallestPartMode::FixedValue(v) => {
            if !cls.c().contains(&v) {
                return Err(Error::InvalidClass);
            }
            let odd_like = cls.is_odd_like(cls.residue_of(v));
            Ok((BigInt::from(1), BigInt::from(if odd_like { k - 1 } else { k })))
        }
    }
}

/// Checks `f_{d+2} = (k-1) f_{d+1} + (k-ell) f_d` together with the stated
/// initial conditions, against counted basis data up to `d_max` parts.
///
/// Errors with [`Error::HypothesisViolated`] unless every nonzero gap
/// threshold equals 1.
pub fn verify_lucas(
    cls: &SipClassB,
    d_max: usize,
    mode: SmallestPartMode,
) -> Result<LucasReport> {
    if cls.dgaps().iter().any(|&d| d > 1) {
        return Err(Error::HypothesisViolated);
    }
    if d_max < 2 {
        return Err(Error::InvalidClass);
    }
    let k = cls.k();
    let ell = cls.odd_like_count();
    let counts = count_basis(cls, d_max, mode)?;
    let (f1, f2) = expected_initial(cls, mode)?;
    let initial_ok = counts[0] == f1 && counts[1] == f2;
    let t = k as i64 - 1;
    let r = ell as i64 - k as i64;
    let mut failures = Vec::new();
    for d in 1..=d_max.saturating_sub(2) {
        let lhs = &counts[d + 1];
        let rhs = BigInt::from(t) * &counts[d] - BigInt::from(r) * &counts[d - 1];
        if *lhs != rhs {
            failures.push(d);
        }
    }
    let recursion_ok = failures.is_empty();
    Ok(LucasReport {
        k,
        ell,
        params: LucasParams { t, r, f1, f2 },
        counts,
        initial_ok,
        recursion_ok,
        failures,
    })
}

/// A member split into its basis element and the residual multiples of `k`,
/// aligned smallest-to-smallest (`residual[i]` belongs to the i-th smallest
/// part; it is non-decreasing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub basal: Partition,
    pub residual: Vec<u64>,
}

/// Splits a member into basis element plus residual, constructively from
/// the smallest part up: `b_1 = c_r` of the smallest part, then each `b_i`
/// is the unique admissible successor with the residue of `p_i`.
///
/// [`Error::DecompositionFailed`] never fires on members of a class with
/// minimal `c`; it signals an implementation or hypothesis breach.
pub fn decompose(p: &Partition, cls: &SipClassB) -> Result<Decomposition> {
    if !is_member_type_b(p, cls) {
        return Err(Error::NotInClass);
    }
    let parts: Vec<u64> = p.ascending().collect();
    let mut basal: Vec<u64> = Vec::with_capacity(parts.len());
    let mut residual: Vec<u64> = Vec::with_capacity(parts.len());

    let first = parts[0];
    let b1 = cls.c_of(cls.residue_of(first));
    basal.push(b1);
    residual.push(first - b1);

    for (i, &v) in parts.iter().enumerate().skip(1) {
        let r = cls.residue_of(v);
        let prev = basal[i - 1];
        let b = cls.successor(prev, r).ok_or(Error::DecompositionFailed)?;
        if b > v {
            return Err(Error::DecompositionFailed);
        }
        let off = v - b;
        debug_assert_eq!(off % cls.k(), 0);
        if off < residual[i - 1] {
            return Err(Error::DecompositionFailed);
        }
        basal.push(b);
        residual.push(off);
    }

    let mut desc = basal;
    desc.reverse();
    let basal = Partition::new(&desc).expect("basis chain has positive parts");
    debug_assert!(is_basal_type_b(&basal, cls));
    Ok(Decomposition { basal, residual })
}

/// Part-wise sum of a basis element and a residual sequence (aligned
/// smallest-to-smallest); the result is a member of the class.
pub fn recompose(basal: &Partition, residual: &[u64], cls: &SipClassB) -> Result<Partition> {
    if !is_basal_type_b(basal, cls) {
        return Err(Error::NotInClass);
    }
    if residual.len() != basal.num_parts()
        || residual.windows(2).any(|w| w[0] > w[1])
        || residual.iter().any(|&p| p % cls.k() != 0)
    {
        return Err(Error::ShapeMismatch);
    }
    let parts: Vec<u64> = basal
        .ascending()
        .zip(residual.iter())
        .map(|(b, &p)| b + p)
        .collect();
    let member = Partition::new(&parts).expect("sums of positive parts are positive");
    debug_assert!(is_member_type_b(&member, cls), "recomposed partition must be a member");
    Ok(member)
}

/// All members of a type-B class with `|pi| <= sum_cap`, grouped by sum.
pub fn enumerate_members(cls: &SipClassB, sum_cap: u64) -> BTreeMap<u64, Vec<Partition>> {
    let mut out: BTreeMap<u64, Vec<Partition>> = BTreeMap::new();
    let mut chain: Vec<u64> = Vec::new();
    for first in 1..=sum_cap {
        if first < cls.c_of(cls.residue_of(first)) {
            continue;
        }
        chain.push(first);
        extend_members(cls, &mut chain, first, sum_cap, &mut out);
        chain.pop();
    }
    for bucket in out.values_mut() {
        bucket.sort_unstable_by(|a, b| b.cmp(a));
    }
    out
}

fn extend_members(
    cls: &SipClassB,
    chain: &mut Vec<u64>,
    sum: u64,
    sum_cap: u64,
    out: &mut BTreeMap<u64, Vec<Partition>>,
) {
    let mut parts = chain.clone();
    parts.reverse();
    out.entry(sum).or_default().push(Partition::new(&parts).expect("positive parts"));

    let last = *chain.last().expect("chain is never empty here");
    let mut next = last + 1;
    while sum + next <= sum_cap {
        let r = cls.residue_of(next);
        let gap_ok = next - last >= cls.dgap_of(r).max(1);
        let min_ok = next >= cls.c_of(r);
        let odd_like_ok = !(cls.is_odd_like(r) && cls.residue_of(last) == r);
        if gap_ok && min_ok && odd_like_ok {
            chain.push(next);
            extend_members(cls, chain, sum + next, sum_cap, out);
            chain.pop();
        }
        next += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u64]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn billiard_membership() {
        let cls = SipClassB::billiard();
        assert!(is_member_type_b(&part(&[9, 4, 2]), &cls));
        // generic type-B membership does not require an even smallest part
        assert!(is_member_type_b(&part(&[4, 3]), &cls));
        // two adjacent odd parts can never decompose
        assert!(!is_member_type_b(&part(&[5, 3]), &cls));
        // same parts are fine mod 3: the residues differ
        assert!(is_member_type_b(&part(&[5, 3]), &SipClassB::p32()));
    }

    #[test]
    fn billiard_basis() {
        let cls = SipClassB::billiard();
        assert!(is_basal_type_b(&part(&[5, 4, 2]), &cls));
        assert!(!is_basal_type_b(&part(&[7, 4, 2]), &cls));
        assert!(is_basal_type_b(&part(&[5, 4, 3]), &SipClassB::p32()));
    }

    #[test]
    fn gollnitz_gordon_type_a_basis() {
        // parts differ by at least 2, by at least 4 between even parts
        let cls = SipClassA::new(2, alloc::vec![1, 2], alloc::vec![2, 3]).unwrap();
        assert!(is_basal_type_a(&part(&[3, 1]), &cls));
        assert!(is_basal_type_a(&part(&[1]), &cls));
        assert!(!is_basal_type_a(&part(&[6, 1]), &cls));
    }

    #[test]
    fn fibonacci_counts_for_billiard() {
        let cls = SipClassB::billiard();
        let mode = SmallestPartMode::FixedValue(2);
        let counts: Vec<usize> = (1..=5)
            .map(|d| enumerate_basis(&cls, d, mode).unwrap().len())
            .collect();
        assert_eq!(counts, alloc::vec![1, 2, 3, 5, 8]);
    }

    #[test]
    fn unrestricted_counts_for_mod_three_classes() {
        let f = |cls: &SipClassB, d: usize| {
            enumerate_basis(cls, d, SmallestPartMode::Unrestricted).unwrap().len()
        };
        assert_eq!(f(&SipClassB::p32(), 1), 3);
        assert_eq!(f(&SipClassB::p32(), 2), 7);
        assert_eq!(f(&SipClassB::p31(), 1), 3);
        assert_eq!(f(&SipClassB::p31(), 2), 8);
    }

    #[test]
    fn refined_counts_for_billiard_d3() {
        let (a, b) = count_basis_refined(
            &SipClassB::billiard(),
            3,
            SmallestPartMode::FixedValue(2),
        )
        .unwrap();
        assert_eq!(a, BigInt::from(1)); // 2+4+5
        assert_eq!(b, BigInt::from(2)); // 2+3+4 and 2+4+6
    }

    #[test]
    fn lucas_for_billiard_is_fibonacci() {
        let report = verify_lucas(
            &SipClassB::billiard(),
            20,
            SmallestPartMode::FixedValue(2),
        )
        .unwrap();
        assert_eq!(report.params.t, 1);
        assert_eq!(report.params.r, -1);
        assert!(report.ok(), "failures at {:?}", report.failures);
    }

    #[test]
    fn lucas_rejects_large_gaps() {
        let cls = SipClassB::new(2, alloc::vec![1, 2], alloc::vec![0, 2]).unwrap();
        assert_eq!(
            verify_lucas(&cls, 5, SmallestPartMode::Unrestricted).unwrap_err(),
            Error::HypothesisViolated
        );
    }

    #[test]
    fn decompose_billiard_example() {
        let cls = SipClassB::billiard();
        let dec = decompose(&part(&[9, 4, 2]), &cls).unwrap();
        assert_eq!(dec.basal, part(&[5, 4, 2]));
        assert_eq!(dec.residual, alloc::vec![0, 0, 4]);
        let back = recompose(&dec.basal, &dec.residual, &cls).unwrap();
        assert_eq!(back, part(&[9, 4, 2]));

        let fixed = decompose(&part(&[5, 4, 2]), &cls).unwrap();
        assert_eq!(fixed.basal, part(&[5, 4, 2]));
        assert_eq!(fixed.residual, alloc::vec![0, 0, 0]);

        assert_eq!(decompose(&part(&[5, 3]), &cls).unwrap_err(), Error::NotInClass);
    }

    #[test]
    fn recompose_single_part() {
        let cls = SipClassB::billiard();
        let sum = recompose(&part(&[2]), &[6], &cls).unwrap();
        assert_eq!(sum, part(&[8]));
        assert!(crate::partition::is_member_d(&sum));
    }

    #[test]
    fn recompose_shape_errors() {
        let cls = SipClassB::billiard();
        assert_eq!(
            recompose(&part(&[4, 2]), &[2], &cls).unwrap_err(),
            Error::ShapeMismatch
        );
        assert_eq!(
            recompose(&part(&[4, 2]), &[4, 2], &cls).unwrap_err(),
            Error::ShapeMismatch
        );
        assert_eq!(
            recompose(&part(&[4, 2]), &[1, 3], &cls).unwrap_err(),
            Error::ShapeMismatch
        );
        assert_eq!(
            recompose(&part(&[7, 4, 2]), &[0, 0, 0], &cls).unwrap_err(),
            Error::NotInClass
        );
    }
}
