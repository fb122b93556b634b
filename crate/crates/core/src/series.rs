//! Sparse exact multivariate series arithmetic.
//!
//! A [`MultiSeries`] is a finite map from exponent tuples to big-integer
//! coefficients. The variables are `q` (Laurent, exponent may be negative),
//! `a`, `x` and `z` (nonnegative exponents). Each value carries its own
//! [`TruncationPolicy`]; the arithmetic keeps the guarantee that every stored
//! monomial inside the caps has a mathematically exact coefficient.
//!
//! Truncation caps are combined degree-aware on multiplication: a product
//! coefficient at total degree `e` is exact only when every contributing
//! split lies inside both operands' exact regions, so the resulting cap in a
//! variable is `min(cap1 + mindeg2, cap2 + mindeg1)`. This matters for
//! Laurent factors such as `q^-1 x`, which genuinely erode the exact window.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent tuple `q^e_q a^e_a x^e_x z^e_z`.
///
/// Field order gives the derived lexicographic `Ord` the canonical sort key
/// `(e_x, e_q, e_a, e_z)` used by the serialized form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub e_x: u32,
    pub e_q: i64,
    pub e_a: u32,
    pub e_z: u32,
}

impl Monomial {
    /// The unit monomial (all exponents zero).
    pub const UNIT: Monomial = Monomial { e_q: 0, e_a: 0, e_x: 0, e_z: 0 };

    pub fn new(e_q: i64, e_a: u32, e_x: u32, e_z: u32) -> Self {
        Monomial { e_q, e_a, e_x, e_z }
    }

    pub fn q(e: i64) -> Self {
        Monomial { e_q: e, ..Self::UNIT }
    }

    pub fn a(e: u32) -> Self {
        Monomial { e_a: e, ..Self::UNIT }
    }

    pub fn x(e: u32) -> Self {
        Monomial { e_x: e, ..Self::UNIT }
    }

    pub fn z(e: u32) -> Self {
        Monomial { e_z: e, ..Self::UNIT }
    }

    pub fn is_unit(&self) -> bool {
        *self == Self::UNIT
    }

    /// Product of two monomials (exponents add).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            e_q: self.e_q.checked_add(other.e_q).expect("q exponent overflow"),
            e_a: self.e_a.checked_add(other.e_a).expect("a exponent overflow"),
            e_x: self.e_x.checked_add(other.e_x).expect("x exponent overflow"),
            e_z: self.e_z.checked_add(other.e_z).expect("z exponent overflow"),
        }
    }

    fn exponent(&self, var: Var) -> i64 {
        match var {
            Var::Q => self.e_q,
            Var::A => i64::from(self.e_a),
            Var::X => i64::from(self.e_x),
            Var::Z => i64::from(self.e_z),
        }
    }
}

/// A formal variable of the series ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Q,
    A,
    X,
    Z,
}

/// Variables that [`MultiSeries::substitute_scale`] may rescale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScaleVar {
    A,
    X,
    Z,
}

impl ScaleVar {
    fn as_var(self) -> Var {
        match self {
            ScaleVar::A => Var::A,
            ScaleVar::X => Var::X,
            ScaleVar::Z => Var::Z,
        }
    }
}

/// Sign carried by a variable substitution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn applies_to(self, exponent: i64) -> bool {
        matches!(self, Sign::Minus) && exponent % 2 != 0
    }
}

/// Per-value truncation caps. `None` means the series is exact at every
/// degree of that variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TruncationPolicy {
    pub x_cap: Option<u32>,
    pub q_cap: Option<i64>,
    pub z_cap: Option<u32>,
}

impl TruncationPolicy {
    /// No caps: the value is an exact polynomial.
    pub fn exact() -> Self {
        TruncationPolicy::default()
    }

    pub fn with_x_cap(mut self, cap: u32) -> Self {
        self.x_cap = Some(cap);
        self
    }

    pub fn with_q_cap(mut self, cap: i64) -> Self {
        self.q_cap = Some(cap);
        self
    }

    pub fn with_z_cap(mut self, cap: u32) -> Self {
        self.z_cap = Some(cap);
        self
    }

    /// True when the monomial lies inside every cap.
    pub fn admits(&self, m: &Monomial) -> bool {
        self.x_cap.map_or(true, |c| m.e_x <= c)
            && self.q_cap.map_or(true, |c| m.e_q <= c)
            && self.z_cap.map_or(true, |c| m.e_z <= c)
    }

    /// Per-variable minimum of two policies.
    pub fn intersect(&self, other: &TruncationPolicy) -> TruncationPolicy {
        TruncationPolicy {
            x_cap: min_opt(self.x_cap, other.x_cap),
            q_cap: min_opt(self.q_cap, other.q_cap),
            z_cap: min_opt(self.z_cap, other.z_cap),
        }
    }

    fn cap(&self, var: Var) -> Option<i64> {
        match var {
            Var::Q => self.q_cap,
            Var::A => None,
            Var::X => self.x_cap.map(i64::from),
            Var::Z => self.z_cap.map(i64::from),
        }
    }

    fn set_cap(&mut self, var: Var, cap: Option<i64>) {
        match var {
            Var::Q => self.q_cap = cap,
            Var::A => {}
            Var::X => self.x_cap = cap.map(|c| c.max(0) as u32),
            Var::Z => self.z_cap = cap.map(|c| c.max(0) as u32),
        }
    }
}

fn min_opt<T: Ord>(a: Option<T>, b: Option<T>) -> Option<T> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (Some(a), None) => Some(a),
        (None, b) => b,
    }
}

/// Sparse exact series with big-integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiSeries {
    terms: BTreeMap<Monomial, BigInt>,
    policy: TruncationPolicy,
}

impl MultiSeries {
    pub fn zero(policy: TruncationPolicy) -> Self {
        MultiSeries { terms: BTreeMap::new(), policy }
    }

    pub fn one(policy: TruncationPolicy) -> Self {
        Self::term(policy, 1, Monomial::UNIT)
    }

    /// Single-term series `coeff * m`; pruned if `m` violates the caps.
    pub fn term(policy: TruncationPolicy, coeff: i64, m: Monomial) -> Self {
        Self::from_terms(policy, &[(coeff, m)])
    }

    pub fn from_terms(policy: TruncationPolicy, terms: &[(i64, Monomial)]) -> Self {
        let list: Vec<(Monomial, BigInt)> =
            terms.iter().map(|(c, m)| (*m, BigInt::from(*c))).collect();
        Self::from_big_terms(policy, list)
    }

    pub fn from_big_terms(policy: TruncationPolicy, terms: Vec<(Monomial, BigInt)>) -> Self {
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() || !policy.admits(&m) {
                continue;
            }
            let entry = map.entry(m).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                map.remove(&m);
            }
        }
        MultiSeries { terms: map, policy }
    }

    pub fn policy(&self) -> &TruncationPolicy {
        &self.policy
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical `(e_x, e_q, e_a, e_z)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Exact coefficient of `m`; zero if absent.
    ///
    /// Errors with [`Error::OutsideTruncation`] when `m` violates a cap,
    /// because the coefficient there is not guaranteed exact.
    pub fn coefficient(&self, m: &Monomial) -> Result<BigInt> {
        if !self.policy.admits(m) {
            return Err(Error::OutsideTruncation);
        }
        Ok(self.coefficient_unchecked(m))
    }

    /// Stored coefficient without the cap check.
    pub fn coefficient_unchecked(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    fn min_exponent_raw(&self, var: Var) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(var)).min()
    }

    pub fn min_exponent(&self, var: Var) -> Option<i64> {
        self.min_exponent_raw(var)
    }

    pub fn max_exponent(&self, var: Var) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    pub fn has_negative_q_exponent(&self) -> bool {
        self.min_exponent_raw(Var::Q).is_some_and(|m| m < 0)
    }

    /// Coefficient-wise sum; policies intersect.
    pub fn add(&self, other: &MultiSeries) -> MultiSeries {
        let policy = self.policy.intersect(&other.policy);
        let mut terms = BTreeMap::new();
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            if !policy.admits(m) {
                continue;
            }
            let entry = terms.entry(*m).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c: &mut BigInt| !c.is_zero());
        MultiSeries { terms, policy }
    }

    pub fn neg(&self) -> MultiSeries {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect();
        MultiSeries { terms, policy: self.policy }
    }

    pub fn sub(&self, other: &MultiSeries) -> MultiSeries {
        self.add(&other.neg())
    }

    pub fn mul_scalar(&self, c: &BigInt) -> MultiSeries {
        if c.is_zero() {
            return MultiSeries::zero(self.policy);
        }
        let terms = self.terms.iter().map(|(m, v)| (*m, v * c)).collect();
        MultiSeries { terms, policy: self.policy }
    }

    pub fn mul_i64(&self, c: i64) -> MultiSeries {
        self.mul_scalar(&BigInt::from(c))
    }

    /// Exact Cauchy product below the combined caps.
    pub fn mul(&self, other: &MultiSeries) -> MultiSeries {
        let policy = self.mul_policy(other);
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                if !policy.admits(&m) {
                    continue;
                }
                let entry = terms.entry(m).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c: &mut BigInt| !c.is_zero());
        MultiSeries { terms, policy }
    }

    fn mul_policy(&self, other: &MultiSeries) -> TruncationPolicy {
        let mut policy = TruncationPolicy::exact();
        for var in [Var::Q, Var::X, Var::Z] {
            let c1 = self.policy.cap(var);
            let c2 = other.policy.cap(var);
            let m1 = self.min_exponent_raw(var);
            let m2 = other.min_exponent_raw(var);
            // cap + min-degree of the other factor; an empty factor poses
            // no constraint (there are no splits through it).
            let b1 = match (c1, m2) {
                (Some(c), Some(m)) => Some(c.saturating_add(m)),
                _ => None,
            };
            let b2 = match (c2, m1) {
                (Some(c), Some(m)) => Some(c.saturating_add(m)),
                _ => None,
            };
            policy.set_cap(var, min_opt(b1, b2));
        }
        policy
    }

    /// Multiply by a single monomial with an integer coefficient.
    pub fn mul_monomial(&self, coeff: i64, m: Monomial) -> MultiSeries {
        self.mul(&MultiSeries::term(TruncationPolicy::exact(), coeff, m))
    }

    /// Small nonnegative power by repeated multiplication.
    pub fn pow(&self, n: u32) -> MultiSeries {
        let mut acc = MultiSeries::one(self.policy);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse up to the caps.
    ///
    /// Requires the constant term to be `+1` or `-1` and an `x_cap` to be
    /// set; every other monomial must escape through some cap (positive `x`
    /// degree, or positive `q`/`z` degree under a corresponding cap), so that
    /// the geometric expansion terminates.
    pub fn invert(&self) -> Result<MultiSeries> {
        let c0 = self.coefficient_unchecked(&Monomial::UNIT);
        if !(c0.clone().abs().is_one()) {
            return Err(Error::NonUnitConstantTerm);
        }
        if self.policy.x_cap.is_none() {
            return Err(Error::MissingCap);
        }
        for m in self.terms.keys() {
            if m.is_unit() {
                continue;
            }
            let escapes = m.e_x > 0
                || (m.e_q > 0 && self.policy.q_cap.is_some())
                || (m.e_z > 0 && self.policy.z_cap.is_some());
            if !escapes {
                return Err(Error::MissingCap);
            }
        }
        // s = c0 (1 + c0 u)  with c0 = ±1, so 1/s = c0 Σ (-c0 u)^j.
        let u = self.sub(&MultiSeries::from_big_terms(
            self.policy,
            alloc::vec![(Monomial::UNIT, c0.clone())],
        ));
        let step = u.mul_scalar(&-c0.clone());
        let mut acc = MultiSeries::one(self.policy);
        let mut power = MultiSeries::one(self.policy);
        loop {
            power = power.mul(&step);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc.mul_scalar(&c0))
    }

    /// Substitute `var -> sign * q^q_shift * var`: each monomial with
    /// var-exponent `e` picks up `sign^e` and `q_shift * e` extra q-degree.
    pub fn substitute_scale(&self, var: ScaleVar, sign: Sign, q_shift: i64) -> MultiSeries {
        let v = var.as_var();
        let mut policy = self.policy;
        if q_shift < 0 {
            if let Some(q_cap) = self.policy.q_cap {
                // Worst-case erosion of the exact q-window over the reachable
                // var-exponents.
                let e_max = self
                    .policy
                    .cap(v)
                    .or_else(|| self.max_exponent(v))
                    .unwrap_or(0);
                policy.q_cap = Some(q_cap.saturating_add(q_shift.saturating_mul(e_max)));
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e = m.exponent(v);
                let mut m2 = *m;
                m2.e_q = m2.e_q.checked_add(q_shift.checked_mul(e).expect("q shift overflow"))
                    .expect("q exponent overflow");
                let c2 = if sign.applies_to(e) { -c.clone() } else { c.clone() };
                (m2, c2)
            })
            .collect();
        MultiSeries::from_big_terms(policy, terms)
    }

    /// Substitute `var -> -var`: flips the sign of every coefficient whose
    /// var-exponent is odd. Unlike [`substitute_scale`] this also accepts `q`.
    ///
    /// [`substitute_scale`]: MultiSeries::substitute_scale
    pub fn twist_sign(&self, var: Var) -> MultiSeries {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e = m.exponent(var);
                let c2 = if e % 2 != 0 { -c.clone() } else { c.clone() };
                (*m, c2)
            })
            .collect();
        MultiSeries { terms, policy: self.policy }
    }

    /// Formal evaluation at `q = 1`: sums coefficients per `(a, x, z)`
    /// monomial. Only valid on series that are exact in `q` (no `q_cap`).
    pub fn eval_q_one(&self) -> Result<MultiSeries> {
        if self.policy.q_cap.is_some() {
            return Err(Error::OutsideTruncation);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial { e_q: 0, ..*m }, c.clone()))
            .collect();
        Ok(MultiSeries::from_big_terms(self.policy, terms))
    }

    /// Re-truncate to a (typically smaller) policy.
    pub fn truncate_to(&self, policy: TruncationPolicy) -> MultiSeries {
        let policy = self.policy.intersect(&policy);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| policy.admits(m))
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        MultiSeries { terms, policy }
    }

    /// The sub-sum of terms with `e_x == j` (exponents kept as stored).
    pub fn x_slice(&self, j: u32) -> MultiSeries {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.e_x == j)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        MultiSeries { terms, policy: self.policy }
    }

    /// First monomial (in canonical order) where the two series differ,
    /// restricted to the intersection of their exact regions.
    pub fn first_mismatch(&self, other: &MultiSeries) -> Option<(Monomial, BigInt, BigInt)> {
        let policy = self.policy.intersect(&other.policy);
        let mut keys: Vec<Monomial> =
            self.terms.keys().chain(other.terms.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        for m in keys {
            if !policy.admits(&m) {
                continue;
            }
            let c1 = self.coefficient_unchecked(&m);
            let c2 = other.coefficient_unchecked(&m);
            if c1 != c2 {
                return Some((m, c1, c2));
            }
        }
        None
    }
}

impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let mag = c.clone().abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars = monomial_string(m);
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{mag}{vars}")?;
            }
        }
        Ok(())
    }
}

fn monomial_string(m: &Monomial) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    let mut push = |name: &str, e: i64| {
        if e == 1 {
            let _ = write!(s, "{name}");
        } else if e != 0 {
            let _ = write!(s, "{name}^{e}");
        }
    };
    push("q", m.e_q);
    push("a", i64::from(m.e_a));
    push("x", i64::from(m.e_x));
    push("z", i64::from(m.e_z));
    s
}

/// `(q^step; q^step)_n = prod_{i=1..n} (1 - q^(step*i))`; the empty product
/// is 1.
pub fn q_pochhammer(step: i64, n: u32) -> MultiSeries {
    assert!(step > 0, "pochhammer step must be positive");
    let policy = TruncationPolicy::exact();
    let mut acc = MultiSeries::one(policy);
    for i in 1..=i64::from(n) {
        let factor = MultiSeries::from_terms(
            policy,
            &[(1, Monomial::UNIT), (-1, Monomial::q(step * i))],
        );
        acc = acc.mul(&factor);
    }
    acc
}

/// `1 / (q^step; q^step)_n` expanded as a q-series up to `q_cap`, via the
/// truncated geometric expansion of each factor.
pub fn q_pochhammer_inverse(step: i64, n: u32, q_cap: i64) -> MultiSeries {
    assert!(step > 0, "pochhammer step must be positive");
    let policy = TruncationPolicy::exact().with_q_cap(q_cap);
    let mut acc = MultiSeries::one(policy);
    for i in 1..=i64::from(n) {
        let e = step * i;
        let mut terms = Vec::new();
        let mut deg = 0i64;
        while deg <= q_cap {
            terms.push((1, Monomial::q(deg)));
            deg += e;
        }
        acc = acc.mul(&MultiSeries::from_terms(policy, &terms));
    }
    acc
}

/// Gaussian binomial `[a_top over b_bot]` in the variable `q^step`, computed
/// with the q-Pascal recursion; zero outside `0 <= b_bot <= a_top`.
///
/// The result is always an exact polynomial with nonnegative coefficients.
pub fn gaussian_binomial(a_top: i64, b_bot: i64, step: i64) -> MultiSeries {
    let policy = TruncationPolicy::exact();
    if b_bot < 0 || b_bot > a_top {
        return MultiSeries::zero(policy);
    }
    // row-by-row q-Pascal: [A,B] = [A-1,B] + q^(step(A-B)) [A-1,B-1]
    let mut row: Vec<MultiSeries> = alloc::vec![MultiSeries::one(policy)];
    for a in 1..=a_top {
        let mut next: Vec<MultiSeries> = Vec::with_capacity(row.len() + 1);
        for b in 0..=a {
            let left = if b <= a - 1 { row[b as usize].clone() } else { MultiSeries::zero(policy) };
            let up = if b >= 1 {
                row[(b - 1) as usize].mul_monomial(1, Monomial::q(step * (a - b)))
            } else {
                MultiSeries::zero(policy)
            };
            next.push(left.add(&up));
        }
        row = next;
    }
    row[b_bot as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact() -> TruncationPolicy {
        TruncationPolicy::exact()
    }

    #[test]
    fn add_cancels_and_doubles() {
        let q_plus_a =
            MultiSeries::from_terms(exact(), &[(1, Monomial::q(1)), (1, Monomial::a(1))]);
        let minus_a = MultiSeries::term(exact(), -1, Monomial::a(1));
        let sum = q_plus_a.add(&minus_a);
        assert_eq!(sum, MultiSeries::term(exact(), 1, Monomial::q(1)));

        let zero = MultiSeries::zero(exact());
        assert_eq!(zero.add(&q_plus_a), q_plus_a);

        let s = MultiSeries::from_terms(exact(), &[(1, Monomial::UNIT), (1, Monomial::q(2))]);
        let doubled =
            MultiSeries::from_terms(exact(), &[(2, Monomial::UNIT), (2, Monomial::q(2))]);
        assert_eq!(s.add(&s), doubled);
    }

    #[test]
    fn mul_basics() {
        let one_plus_q =
            MultiSeries::from_terms(exact(), &[(1, Monomial::UNIT), (1, Monomial::q(1))]);
        let one_minus_q =
            MultiSeries::from_terms(exact(), &[(1, Monomial::UNIT), (-1, Monomial::q(1))]);
        let expect = MultiSeries::from_terms(exact(), &[(1, Monomial::UNIT), (-1, Monomial::q(2))]);
        assert_eq!(one_plus_q.mul(&one_minus_q), expect);

        let m1 = MultiSeries::term(exact(), 1, Monomial::new(2, 0, 0, 1));
        let m2 = MultiSeries::term(exact(), 1, Monomial::new(3, 0, 0, 1));
        assert_eq!(m1.mul(&m2), MultiSeries::term(exact(), 1, Monomial::new(5, 0, 0, 2)));
    }

    #[test]
    fn mul_c2_factor_expansion() {
        // (q^8 z^2 + q^12 z^3)(q^9 z + q^14(1+q+q^2) z^2 + q^21 z^3), expanded
        // by hand and frozen.
        let lhs = MultiSeries::from_terms(
            exact(),
            &[(1, Monomial::new(8, 0, 0, 2)), (1, Monomial::new(12, 0, 0, 3))],
        );
        let rhs = MultiSeries::from_terms(
            exact(),
            &[
                (1, Monomial::new(9, 0, 0, 1)),
                (1, Monomial::new(14, 0, 0, 2)),
                (1, Monomial::new(15, 0, 0, 2)),
                (1, Monomial::new(16, 0, 0, 2)),
                (1, Monomial::new(21, 0, 0, 3)),
            ],
        );
        let expect = MultiSeries::from_terms(
            exact(),
            &[
                (1, Monomial::new(17, 0, 0, 3)),
                (1, Monomial::new(21, 0, 0, 4)),
                (1, Monomial::new(22, 0, 0, 4)),
                (1, Monomial::new(23, 0, 0, 4)),
                (1, Monomial::new(24, 0, 0, 4)),
                (1, Monomial::new(26, 0, 0, 5)),
                (1, Monomial::new(27, 0, 0, 5)),
                (1, Monomial::new(28, 0, 0, 5)),
                (1, Monomial::new(29, 0, 0, 5)),
                (1, Monomial::new(33, 0, 0, 6)),
            ],
        );
        assert_eq!(lhs.mul(&rhs), expect);
    }

    #[test]
    fn laurent_product_erodes_q_cap() {
        // exact-to-q^10 series times q^-3: exact only to q^7 afterwards.
        let s = MultiSeries::from_terms(
            exact().with_q_cap(10),
            &[(1, Monomial::UNIT), (1, Monomial::q(10))],
        );
        let shifted = s.mul_monomial(1, Monomial::q(-3));
        assert_eq!(shifted.policy().q_cap, Some(7));
        assert_eq!(shifted.coefficient(&Monomial::q(7)).unwrap(), BigInt::from(1));
        assert!(shifted.coefficient(&Monomial::q(8)).is_err());
    }

    #[test]
    fn invert_trivia() {
        let one = MultiSeries::one(exact().with_x_cap(5));
        assert_eq!(one.invert().unwrap(), one);

        let s = MultiSeries::from_terms(
            exact().with_x_cap(4),
            &[(1, Monomial::UNIT), (-1, Monomial::x(1))],
        );
        let inv = s.invert().unwrap();
        let expect = MultiSeries::from_terms(
            exact().with_x_cap(4),
            &[
                (1, Monomial::UNIT),
                (1, Monomial::x(1)),
                (1, Monomial::x(2)),
                (1, Monomial::x(3)),
                (1, Monomial::x(4)),
            ],
        );
        assert_eq!(inv, expect);
    }

    #[test]
    fn invert_roundtrips_to_cap() {
        let s = MultiSeries::from_terms(
            exact().with_x_cap(6),
            &[
                (1, Monomial::UNIT),
                (1, Monomial::new(1, 1, 1, 0)),
                (1, Monomial::new(0, 1, 1, 0)),
                (1, Monomial::new(2, 0, 2, 0)),
            ],
        );
        let inv = s.invert().unwrap();
        assert_eq!(s.mul(&inv), MultiSeries::one(exact().with_x_cap(6)));
    }

    #[test]
    fn invert_rejects_bad_inputs() {
        let no_cap = MultiSeries::from_terms(exact(), &[(1, Monomial::UNIT), (1, Monomial::x(1))]);
        assert_eq!(no_cap.invert().unwrap_err(), Error::MissingCap);

        let bad_constant = MultiSeries::from_terms(
            exact().with_x_cap(3),
            &[(2, Monomial::UNIT), (1, Monomial::x(1))],
        );
        assert_eq!(bad_constant.invert().unwrap_err(), Error::NonUnitConstantTerm);

        // a-only tail cannot escape through any cap
        let stuck = MultiSeries::from_terms(
            exact().with_x_cap(3),
            &[(1, Monomial::UNIT), (1, Monomial::a(1))],
        );
        assert_eq!(stuck.invert().unwrap_err(), Error::MissingCap);
    }

    #[test]
    fn substitute_scale_examples() {
        let x2 = MultiSeries::term(exact(), 1, Monomial::x(2));
        let scaled = x2.substitute_scale(ScaleVar::X, Sign::Minus, 3);
        assert_eq!(scaled, MultiSeries::term(exact(), 1, Monomial::new(6, 0, 2, 0)));

        let ax = MultiSeries::term(exact(), 1, Monomial::new(0, 1, 1, 0));
        let negated = ax.substitute_scale(ScaleVar::A, Sign::Minus, 0);
        assert_eq!(negated, MultiSeries::term(exact(), -1, Monomial::new(0, 1, 1, 0)));

        let x = MultiSeries::term(exact(), 1, Monomial::x(1));
        let laurent = x.substitute_scale(ScaleVar::X, Sign::Plus, -1);
        assert_eq!(laurent, MultiSeries::term(exact(), 1, Monomial::new(-1, 0, 1, 0)));
    }

    #[test]
    fn pochhammer_small_cases() {
        assert_eq!(q_pochhammer(2, 0), MultiSeries::one(TruncationPolicy::exact()));
        assert_eq!(
            q_pochhammer(2, 1),
            MultiSeries::from_terms(exact(), &[(1, Monomial::UNIT), (-1, Monomial::q(2))])
        );
        assert_eq!(
            q_pochhammer(2, 2),
            MultiSeries::from_terms(
                exact(),
                &[
                    (1, Monomial::UNIT),
                    (-1, Monomial::q(2)),
                    (-1, Monomial::q(4)),
                    (1, Monomial::q(6)),
                ]
            )
        );
    }

    #[test]
    fn pochhammer_vanishes_at_q_one() {
        for n in 1..=6u32 {
            let p = q_pochhammer(2, n);
            assert!(p.eval_q_one().unwrap().is_zero(), "(q^2;q^2)_{n} at q=1");
        }
        assert!(!q_pochhammer(2, 0).eval_q_one().unwrap().is_zero());
    }

    #[test]
    fn pochhammer_inverse_matches_product() {
        // (q^2;q^2)_3 * 1/(q^2;q^2)_3 = 1 + O(q^31)
        let cap = 30;
        let p = q_pochhammer(2, 3);
        let inv = q_pochhammer_inverse(2, 3, cap);
        let prod = p.mul(&inv);
        assert_eq!(prod, MultiSeries::one(TruncationPolicy::exact().with_q_cap(cap)));
    }

    #[test]
    fn gaussian_binomial_examples() {
        assert!(gaussian_binomial(1, 2, 2).is_zero());
        assert!(gaussian_binomial(3, -1, 2).is_zero());
        assert_eq!(gaussian_binomial(4, 0, 2), MultiSeries::one(TruncationPolicy::exact()));
        let expect = MultiSeries::from_terms(
            exact(),
            &[(1, Monomial::UNIT), (1, Monomial::q(2)), (1, Monomial::q(4))],
        );
        assert_eq!(gaussian_binomial(3, 2, 2), expect);
    }

    #[test]
    fn gaussian_binomial_symmetry_and_product_check() {
        for a in 0..=8i64 {
            for b in 0..=a {
                let lhs = gaussian_binomial(a, b, 2);
                assert_eq!(lhs, gaussian_binomial(a, a - b, 2));
                // multiply-back: [a,b] (q;q)_b (q;q)_{a-b} = (q;q)_a
                let back = lhs.mul(&q_pochhammer(2, b as u32)).mul(&q_pochhammer(2, (a - b) as u32));
                assert_eq!(back, q_pochhammer(2, a as u32), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn coefficient_and_truncation() {
        let policy = exact().with_q_cap(5);
        let s = MultiSeries::from_terms(policy, &[(1, Monomial::UNIT), (2, Monomial::q(2))]);
        assert_eq!(s.coefficient(&Monomial::q(2)).unwrap(), BigInt::from(2));
        assert_eq!(s.coefficient(&Monomial::q(3)).unwrap(), BigInt::zero());
        assert_eq!(s.coefficient(&Monomial::q(6)).unwrap_err(), Error::OutsideTruncation);
    }

    #[test]
    fn canonical_order_is_x_q_a_z() {
        let mut keys = alloc::vec![
            Monomial::new(5, 0, 0, 0),
            Monomial::new(0, 0, 1, 0),
            Monomial::new(-2, 3, 0, 1),
            Monomial::new(-2, 2, 0, 1),
        ];
        keys.sort();
        assert_eq!(
            keys,
            alloc::vec![
                Monomial::new(-2, 2, 0, 1),
                Monomial::new(-2, 3, 0, 1),
                Monomial::new(5, 0, 0, 0),
                Monomial::new(0, 0, 1, 0),
            ]
        );
    }
}
