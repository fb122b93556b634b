//! Symmetric-quiver generating series.
//!
//! For a symmetric quiver with adjacency matrix `C`, the unreduced series is
//!
//! `sum over dimension vectors d of (-q)^(sum C_ij d_i d_j)
//!   prod_i x_i^(d_i) / (q^2; q^2)_(d_i)`
//!
//! and the reduced form carries the extra numerator
//! `(q^2; q^2)_(d_1+..+d_m)`, which turns every summand into a q-multinomial
//! times a monomial — each x-graded slice of the reduced series is an exact
//! polynomial, so it needs no q-cap.
//!
//! Node variables are specialized to `(a, x, q)`-monomials through a
//! [`NodeVar`] assignment per node; the formal two-node assignment
//! `x_1 -> x, x_2 -> a x` is faithful (the dimension vector is recoverable
//! from the `a` and `x` exponents) and later rescalings go through
//! [`MultiSeries::substitute_scale`].

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::weight_exponent;
use crate::series::{
    gaussian_binomial, q_pochhammer_inverse, Monomial, MultiSeries, ScaleVar, Sign,
    TruncationPolicy,
};
use crate::sip::{enumerate_basis, SipClassB, SmallestPartMode};

/// A quiver with symmetric nonnegative adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricQuiver {
    adjacency: Vec<Vec<u64>>,
}

impl SymmetricQuiver {
    pub fn new(adjacency: Vec<Vec<u64>>) -> Result<Self> {
        let m = adjacency.len();
        if adjacency.iter().any(|row| row.len() != m) {
            return Err(Error::ShapeMismatch);
        }
        for i in 0..m {
            for j in 0..m {
                if adjacency[i][j] != adjacency[j][i] {
                    return Err(Error::InvalidClass);
                }
            }
        }
        Ok(SymmetricQuiver { adjacency })
    }

    /// The two-node quiver `[[2, 1], [1, 1]]` whose reduced series matches
    /// the stratified basal billiard series.
    pub fn two_node_billiard() -> Self {
        SymmetricQuiver { adjacency: alloc::vec![alloc::vec![2, 1], alloc::vec![1, 1]] }
    }

    pub fn nodes(&self) -> usize {
        self.adjacency.len()
    }

    pub fn adjacency(&self) -> &[Vec<u64>] {
        &self.adjacency
    }

    /// `sum_ij C_ij d_i d_j` in exact integer arithmetic.
    pub fn pairing(&self, dims: &[u64]) -> i64 {
        let mut acc: i64 = 0;
        for (i, row) in self.adjacency.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                acc += (c as i64) * (dims[i] as i64) * (dims[j] as i64);
            }
        }
        acc
    }
}

/// A dimension vector: one nonnegative entry per node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionVector(pub Vec<u64>);

/// The monomial a node variable specializes to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeVar {
    pub sign: Sign,
    pub monomial: Monomial,
}

impl NodeVar {
    pub fn new(sign: Sign, monomial: Monomial) -> Self {
        NodeVar { sign, monomial }
    }

    /// Formal two-node assignment `x_1 -> x`, `x_2 -> a x`.
    pub fn formal_pair() -> Vec<NodeVar> {
        alloc::vec![
            NodeVar::new(Sign::Plus, Monomial::x(1)),
            NodeVar::new(Sign::Plus, Monomial::new(0, 1, 1, 0)),
        ]
    }
}

fn check_assignment(quiver: &SymmetricQuiver, vars: &[NodeVar]) -> Result<()> {
    if vars.len() != quiver.nodes() {
        return Err(Error::ShapeMismatch);
    }
    // x_cap bounds the total dimension only if every node carries x-degree
    if vars.iter().any(|v| v.monomial.e_x == 0) {
        return Err(Error::MissingCap);
    }
    Ok(())
}

fn for_each_dimension_vector(
    vars: &[NodeVar],
    x_cap: u32,
    f: &mut impl FnMut(&[u64]),
) {
    fn rec(
        vars: &[NodeVar],
        budget: u32,
        dims: &mut Vec<u64>,
        f: &mut impl FnMut(&[u64]),
    ) {
        if dims.len() == vars.len() {
            f(dims);
            return;
        }
        let weight = vars[dims.len()].monomial.e_x;
        let mut d = 0u64;
        loop {
            let used = d as u32 * weight;
            if used > budget {
                break;
            }
            dims.push(d);
            rec(vars, budget - used, dims, f);
            dims.pop();
            d += 1;
        }
    }
    rec(vars, x_cap, &mut Vec::new(), f);
}

/// The base monomial (and sign) contributed by the node variables at
/// dimension vector `dims`, together with the `(-q)^pairing` factor.
fn summand_monomial(
    quiver: &SymmetricQuiver,
    vars: &[NodeVar],
    dims: &[u64],
) -> (bool, Monomial) {
    let e = quiver.pairing(dims);
    let mut negative = e % 2 != 0;
    let mut mono = Monomial::q(e);
    for (var, &d) in vars.iter().zip(dims) {
        if d == 0 {
            continue;
        }
        if matches!(var.sign, Sign::Minus) && d % 2 == 1 {
            negative = !negative;
        }
        let m = var.monomial;
        let d32 = d as u32;
        mono = mono.mul(&Monomial::new(
            m.e_q * d as i64,
            m.e_a * d32,
            m.e_x * d32,
            m.e_z * d32,
        ));
    }
    (negative, mono)
}

/// Unreduced quiver series with node variables specialized through `vars`,
/// summed over dimension vectors of x-weight at most `x_cap`, with each
/// `1/(q^2; q^2)_(d_i)` expanded to `q_cap`.
pub fn quiver_series_unreduced(
    quiver: &SymmetricQuiver,
    vars: &[NodeVar],
    x_cap: u32,
    q_cap: i64,
) -> Result<MultiSeries> {
    check_assignment(quiver, vars)?;
    let policy = TruncationPolicy::exact().with_x_cap(x_cap).with_q_cap(q_cap);
    let mut total = MultiSeries::zero(policy);
    for_each_dimension_vector(vars, x_cap, &mut |dims| {
        let (negative, mono) = summand_monomial(quiver, vars, dims);
        let mut summand =
            MultiSeries::term(TruncationPolicy::exact().with_q_cap(q_cap), 1, Monomial::UNIT);
        for &d in dims {
            if d > 0 {
                summand = summand.mul(&q_pochhammer_inverse(2, d as u32, q_cap));
            }
        }
        let coeff = if negative { -1 } else { 1 };
        total = total.add(&summand.mul_monomial(coeff, mono).truncate_to(policy));
    });
    Ok(total)
}

/// Reduced quiver series: the numerator `(q^2; q^2)_(sum d_i)` makes every
/// summand an exact polynomial, so only the x-cap is needed.
pub fn quiver_series_reduced(
    quiver: &SymmetricQuiver,
    vars: &[NodeVar],
    x_cap: u32,
) -> Result<MultiSeries> {
    check_assignment(quiver, vars)?;
    let policy = TruncationPolicy::exact().with_x_cap(x_cap);
    let mut total = MultiSeries::zero(policy);
    for_each_dimension_vector(vars, x_cap, &mut |dims| {
        let (negative, mono) = summand_monomial(quiver, vars, dims);
        let multi = q_multinomial(dims);
        let coeff = if negative { -1 } else { 1 };
        total = total.add(&multi.mul_monomial(coeff, mono).truncate_to(policy));
    });
    Ok(total)
}

/// `(q^2; q^2)_(sum d_i) / prod_i (q^2; q^2)_(d_i)` as a product of Gaussian
/// binomials over prefix sums; always an exact polynomial.
pub fn q_multinomial(dims: &[u64]) -> MultiSeries {
    let mut acc = MultiSeries::one(TruncationPolicy::exact());
    let mut prefix = 0u64;
    for &d in dims {
        prefix += d;
        acc = acc.mul(&gaussian_binomial(prefix as i64, d as i64, 2));
    }
    acc
}

/// Stratified series of even basal billiard partitions: `x` tracks the
/// largest part (exponent `n-1` for largest part `2n`), `a` the weight,
/// `q` the sum:
///
/// `sum over n >= 1, n <= d <= 2n-1 of
///   x^(n-1) a^(2n-d-1) q^(2n^2-2dn-n+d^2+2d) [n-1 over 2n-d-1]_{q^2}`.
pub fn basal_even_stratified(x_cap: u32) -> MultiSeries {
    let policy = TruncationPolicy::exact().with_x_cap(x_cap);
    let mut total = MultiSeries::zero(policy);
    for n in 1..=i64::from(x_cap) + 1 {
        for d in n..=2 * n - 1 {
            let e_a = 2 * n - d - 1;
            let e_q = 2 * n * n - 2 * d * n - n + d * d + 2 * d;
            let gb = gaussian_binomial(n - 1, e_a, 2);
            let mono = Monomial::new(e_q, e_a as u32, (n - 1) as u32, 0);
            total = total.add(&gb.mul_monomial(1, mono));
        }
    }
    total
}

/// The same series through the change of variables `i = 2n-d-1`, `j = d-n`:
/// `q^2 sum_{i,j>=0} x^(i+j) a^i q^(i^2+2ij+2j^2+3i+5j) [i+j over i]_{q^2}`.
pub fn basal_even_stratified_multinomial(x_cap: u32) -> MultiSeries {
    let policy = TruncationPolicy::exact().with_x_cap(x_cap);
    let mut total = MultiSeries::zero(policy);
    for i in 0..=i64::from(x_cap) {
        for j in 0..=i64::from(x_cap) - i {
            let e_q = i * i + 2 * i * j + 2 * j * j + 3 * i + 5 * j + 2;
            let gb = gaussian_binomial(i + j, i, 2);
            let mono = Monomial::new(e_q, i as u32, (i + j) as u32, 0);
            total = total.add(&gb.mul_monomial(1, mono));
        }
    }
    total
}

/// Outcome of comparing the stratified basal series against the two-node
/// quiver series under `x_1 -> q^5 x`, `x_2 -> -a q^3 x` (the overall `q^2`
/// kept explicit on the quiver side).
#[derive(Debug, Clone)]
pub struct Prop2Report {
    pub x_cap: u32,
    pub ok: bool,
    pub first_mismatch: Option<(Monomial, BigInt, BigInt)>,
}

/// Checks `basal_even_stratified(x_cap) = q^2 * P_reduced(q^5 x, -a q^3 x)`
/// for the two-node quiver, monomial by monomial through x-degree `x_cap`.
pub fn verify_prop2(x_cap: u32) -> Result<Prop2Report> {
    let stratified = basal_even_stratified(x_cap);
    let quiver = SymmetricQuiver::two_node_billiard();
    let substituted = alloc::vec![
        NodeVar::new(Sign::Plus, Monomial::new(5, 0, 1, 0)),
        NodeVar::new(Sign::Minus, Monomial::new(3, 1, 1, 0)),
    ];
    let reduced = quiver_series_reduced(&quiver, &substituted, x_cap)?;
    let rhs = reduced.mul_monomial(1, Monomial::q(2));
    let first_mismatch = stratified.first_mismatch(&rhs);
    Ok(Prop2Report { x_cap, ok: first_mismatch.is_none(), first_mismatch })
}

/// Outcome of comparing stratified x-slices against brute-force enumeration.
#[derive(Debug, Clone)]
pub struct StratificationReport {
    pub x_cap: u32,
    pub ok: bool,
    /// Largest parts `2n` whose slice disagreed with enumeration.
    pub failing_slices: Vec<u64>,
}

/// For each `n <= x_cap + 1`, checks that the `x^(n-1)` slice of
/// [`basal_even_stratified`] equals the enumerated sum of
/// `a^weight q^sum x^(n-1)` over basal billiard partitions with largest
/// part `2n`.
pub fn verify_stratified_vs_enumeration(x_cap: u32) -> Result<StratificationReport> {
    let stratified = basal_even_stratified(x_cap);
    let cls = SipClassB::billiard();
    let mut failing = Vec::new();
    for n in 1..=u64::from(x_cap) + 1 {
        let slice = stratified.x_slice(n as u32 - 1);
        let mut terms = Vec::new();
        for d in n..=2 * n - 1 {
            for p in enumerate_basis(&cls, d as usize, SmallestPartMode::FixedValue(2))? {
                if p.largest() != 2 * n {
                    continue;
                }
                let w = weight_exponent(&p).expect("basal members");
                terms.push((
                    Monomial::new(p.sum() as i64, w, n as u32 - 1, 0),
                    BigInt::from(1),
                ));
            }
        }
        let enumerated =
            MultiSeries::from_big_terms(TruncationPolicy::exact().with_x_cap(x_cap), terms);
        if slice.first_mismatch(&enumerated).is_some() {
            failing.push(2 * n);
        }
    }
    Ok(StratificationReport { x_cap, ok: failing.is_empty(), failing_slices: failing })
}

/// Substitutes `x_1 -> q^5 x`, `x_2 -> -a q^3 x` into a series produced with
/// the formal pair assignment, via two scale substitutions: per `a`-exponent
/// the factor `-q^(3-5)`, then per `x`-exponent the factor `q^5`.
pub fn substitute_prop2(series: &MultiSeries) -> MultiSeries {
    series
        .substitute_scale(ScaleVar::A, Sign::Minus, -2)
        .substitute_scale(ScaleVar::X, Sign::Plus, 5)
}
