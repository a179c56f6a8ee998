//! Exact evaluation of Dedekind sums and signature defects.
//!
//! The point defect attached to a local representation
//! `(z1, z2) -> (mu^k z1, mu^{kq} z2)` of a prime-order rotation is the
//! cyclotomic sum
//!
//! ```text
//! I(p, q) = sum_{k=1}^{p-1} (1 + mu^k)(1 + mu^{kq}) / ((1 - mu^k)(1 - mu^{kq}))
//! ```
//!
//! which this module evaluates along three independent routes: a closed
//! master formula built from floor sums, the Dedekind-sum relation
//! `I(p, q) = -4p * s(q, p)`, and a floating-point cotangent oracle.
//! All three must agree; tests and the acceptance suite enforce it.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{
    big, floor_div, format_rational, int, nonzero_residue, ratio, PrimeOrder, Rational,
};
use crate::error::{Error, Result};

/// Which route produced a [`DefectValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefectPath {
    ClosedForm,
    Dedekind,
    Oracle,
}

/// A signature defect together with the route that computed it.
#[derive(Debug, Clone, PartialEq)]
pub struct DefectValue {
    pub value: Rational,
    pub path: DefectPath,
}

impl DefectValue {
    pub fn closed_form(p: PrimeOrder, q: i64) -> Result<Self> {
        Ok(DefectValue { value: defect_point(p, q)?, path: DefectPath::ClosedForm })
    }

    pub fn via_dedekind(p: PrimeOrder, q: i64) -> Result<Self> {
        let s = dedekind_sum(q, p)?;
        Ok(DefectValue { value: s * int(-4 * p.as_i64()), path: DefectPath::Dedekind })
    }

    /// Rational snapshot of the floating-point route; approximate by nature.
    pub fn via_oracle(p: PrimeOrder, q: i64) -> Result<Self> {
        let v = defect_point_oracle(p, q)?;
        let value = Rational::from_float(v)
            .ok_or_else(|| Error::InvalidInput(format!("oracle returned non-finite {v}")))?;
        Ok(DefectValue { value, path: DefectPath::Oracle })
    }
}

impl std::fmt::Display for DefectValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", format_rational(&self.value))
    }
}

/// The sawtooth function `((x))`: `x - floor(x) - 1/2` off the integers, 0 on them.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        return Rational::zero();
    }
    x - x.floor() - ratio(1, 2)
}

/// `f_p(q) = sum_{k=1}^{p-1} k * floor(kq/p)`, exact.
pub fn f_sum(q: i64, p: PrimeOrder) -> Result<BigInt> {
    nonzero_residue(q, p)?;
    let pb = big(p.as_i64());
    let qb = big(q);
    let mut acc = BigInt::zero();
    for k in 1..p.get() {
        let kb = BigInt::from(k);
        acc += &kb * floor_div(&(&kb * &qb), &pb);
    }
    Ok(acc)
}

/// `sum_{k=1}^{p-1} floor(kq/p)^2`, exact.
pub fn floor_square_sum(q: i64, p: PrimeOrder) -> Result<BigInt> {
    nonzero_residue(q, p)?;
    let pb = big(p.as_i64());
    let qb = big(q);
    let mut acc = BigInt::zero();
    for k in 1..p.get() {
        let f = floor_div(&(BigInt::from(k) * &qb), &pb);
        acc += &f * &f;
    }
    Ok(acc)
}

/// Dedekind sum `s(q, p)` for gcd(q, p) = 1, through the floor-sum identity
/// `6p s(q,p) = (p-1)(2pq - q - 3p/2) - 6 f_p(q)`.
pub fn dedekind_sum(q: i64, p: PrimeOrder) -> Result<Rational> {
    let f = f_sum(q, p)?;
    let pv = p.as_i64();
    let head = int(pv - 1) * (int(2 * pv * q - q) - ratio(3 * pv, 2));
    let six_p_s = head - Rational::from_integer(f * big(6));
    Ok(six_p_s / int(6 * pv))
}

/// Dedekind sum straight from its definition `sum ((k/p))((kq/p))`.
///
/// Independent of [`dedekind_sum`]; kept as the in-crate oracle for it.
pub fn dedekind_sum_definition(q: i64, p: PrimeOrder) -> Result<Rational> {
    nonzero_residue(q, p)?;
    let pv = p.as_i64();
    let mut acc = Rational::zero();
    for k in 1..=pv {
        acc += sawtooth(&ratio(k, pv)) * sawtooth(&Rational::new(big(k) * big(q), big(pv)));
    }
    Ok(acc)
}

/// Reduce q mod p into the window `[-(p-1)/2, (p-1)/2] \ {0}` (p odd; 1 for p = 2).
///
/// The defect is invariant under q -> q + p, and the closed forms stay exact
/// while the intermediate floor sums stay small at the centered representative.
pub fn canonical_q(q: i64, p: PrimeOrder) -> Result<i64> {
    let r = nonzero_residue(q, p)? as i64;
    let pv = p.as_i64();
    if pv == 2 {
        return Ok(1);
    }
    Ok(if r > (pv - 1) / 2 { r - pv } else { r })
}

/// The point defect `I(p, q)` via the master closed formula
///
/// ```text
/// I(p,q) = (-2pq/3 + q/3 + 1/(3q) + p - 2p/(3q))(p-1) + (2p/q) * sum floor(kq/p)^2
/// ```
///
/// evaluated at the canonical representative of q.
pub fn defect_point(p: PrimeOrder, q: i64) -> Result<Rational> {
    let qc = canonical_q(q, p)?;
    if p.get() == 2 {
        // degenerate order-2 case: every numerator factor (1 + mu^k) vanishes
        return Ok(Rational::zero());
    }
    let s = floor_square_sum(qc, p)?;
    let pv = p.as_i64();
    let coeff = ratio(-2 * pv * qc + qc, 3) + ratio(1 - 2 * pv, 3 * qc) + int(pv);
    Ok(coeff * int(pv - 1) + ratio(2 * pv, qc) * Rational::from_integer(s))
}

/// Floating-point evaluation `-sum cot(pi k / p) cot(pi k q / p)`.
///
/// The imaginary parts of the defining cyclotomic sum cancel pairwise, so
/// only the real cotangent form is evaluated. Trustworthy to 1e-6 for
/// p <= 1000; refuses p > 10^4 rather than silently degrade.
pub fn defect_point_oracle(p: PrimeOrder, q: i64) -> Result<f64> {
    const LIMIT: u64 = 10_000;
    if p.get() > LIMIT {
        return Err(Error::OracleRange { p: p.get(), limit: LIMIT });
    }
    nonzero_residue(q, p)?;
    let pv = p.get() as i64;
    let pi = std::f64::consts::PI;
    let cot = |m: i64| -> f64 {
        let x = pi * (m as f64) / (pv as f64);
        x.cos() / x.sin()
    };
    let mut acc = 0.0;
    for k in 1..pv {
        let m = (k as i128 * q as i128).rem_euclid(pv as i128) as i64;
        acc -= cot(k) * cot(m);
    }
    Ok(acc)
}

/// All three defect routes for one (p, q), for agreement checks.
pub struct ThreePathDefect {
    pub closed_form: Rational,
    pub via_dedekind: Rational,
    pub oracle: f64,
}

impl ThreePathDefect {
    pub fn compute(p: PrimeOrder, q: i64) -> Result<Self> {
        Ok(ThreePathDefect {
            closed_form: defect_point(p, q)?,
            via_dedekind: DefectValue::via_dedekind(p, q)?.value,
            oracle: defect_point_oracle(p, q)?,
        })
    }

    /// Exact agreement of the two rational routes and 1e-6 agreement of the oracle.
    pub fn agree(&self) -> bool {
        use num_traits::ToPrimitive;
        if self.closed_form != self.via_dedekind {
            return false;
        }
        match self.closed_form.to_f64() {
            Some(x) => (x - self.oracle).abs() < 1e-6,
            None => false,
        }
    }
}

/// The five fixed-point group shapes of a pseudofree action.
///
/// Numbering follows the group sizes: a type-k group contributes k isolated
/// fixed points (the order-3 special shape contributes three).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupType {
    Type1,
    Type2,
    Type3,
    Type4,
    /// Three points of scalar type (k, k); occurs only for p = 3.
    ThreeSpecial,
}

impl GroupType {
    pub const ALL: [GroupType; 5] =
        [GroupType::Type1, GroupType::Type2, GroupType::Type3, GroupType::Type4, GroupType::ThreeSpecial];

    /// Number of isolated fixed points in one group of this type.
    pub fn points(self) -> u64 {
        match self {
            GroupType::Type1 => 1,
            GroupType::Type2 => 2,
            GroupType::Type3 => 3,
            GroupType::Type4 => 4,
            GroupType::ThreeSpecial => 3,
        }
    }

    /// Occurrence condition on the prime order.
    pub fn admissible(self, p: PrimeOrder) -> bool {
        match self {
            GroupType::Type1 => true,
            GroupType::Type2 => p.get() > 5,
            GroupType::Type3 | GroupType::Type4 => p.get() > 3,
            GroupType::ThreeSpecial => p.get() == 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            GroupType::Type1 => "1",
            GroupType::Type2 => "2",
            GroupType::Type3 => "3",
            GroupType::Type4 => "4",
            GroupType::ThreeSpecial => "3-special",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(GroupType::Type1),
            "2" => Ok(GroupType::Type2),
            "3" => Ok(GroupType::Type3),
            "4" => Ok(GroupType::Type4),
            "3-special" | "3s" => Ok(GroupType::ThreeSpecial),
            other => Err(Error::InvalidInput(format!("unknown group type `{other}`"))),
        }
    }

    fn occurrence_error(self, p: PrimeOrder) -> Error {
        Error::OccurrenceViolation(format!(
            "group type {} does not occur at p = {p}",
            self.label()
        ))
    }
}

impl std::fmt::Display for GroupType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Total defect of one fixed-point group, by summing the point defects.
///
/// Cross-checked against [`group_defect_closed_form`]; the two routes agree
/// for every admissible input, and disagreement would be an arithmetic bug.
pub fn group_defect(ty: GroupType, p: PrimeOrder) -> Result<Rational> {
    if !ty.admissible(p) {
        return Err(ty.occurrence_error(p));
    }
    let pv = p.as_i64();
    let value = match ty {
        GroupType::Type1 => defect_point(p, -1)?,
        GroupType::Type2 => defect_point(p, -6)? + defect_point(p, (pv + 3) / 2)?,
        GroupType::Type3 => defect_point(p, 2)? + int(2) * defect_point(p, -4)?,
        GroupType::Type4 => defect_point(p, 1)? + int(3) * defect_point(p, -3)?,
        GroupType::ThreeSpecial => int(3) * defect_point(p, 1)?,
    };
    let closed = group_defect_closed_form(ty, p)?;
    assert_eq!(value, closed, "defect routes diverged for type {} at p = {}", ty, p);
    Ok(value)
}

/// Total defect of one fixed-point group, by residue-class closed forms:
///
/// ```text
/// type 1: (p-1)(p-2)/3
/// type 2: -8r if p = 6r+1,  8r+8 if p = 6r+5
/// type 3: -8r if p = 4r+1,  2    if p = 4r+3
/// type 4: -8r if p = 3r+1,  -4r  if p = 3r+2
/// ```
pub fn group_defect_closed_form(ty: GroupType, p: PrimeOrder) -> Result<Rational> {
    if !ty.admissible(p) {
        return Err(ty.occurrence_error(p));
    }
    let pv = p.as_i64();
    Ok(match ty {
        GroupType::Type1 => ratio((pv - 1) * (pv - 2), 3),
        GroupType::Type2 => {
            let r = pv / 6;
            if pv % 6 == 1 { int(-8 * r) } else { int(8 * r + 8) }
        }
        GroupType::Type3 => {
            let r = pv / 4;
            if pv % 4 == 1 { int(-8 * r) } else { int(2) }
        }
        GroupType::Type4 => {
            let r = pv / 3;
            if pv % 3 == 1 { int(-8 * r) } else { int(-4 * r) }
        }
        GroupType::ThreeSpecial => int(-(pv - 1) * (pv - 2)),
    })
}

/// Defect of a fixed surface: `(p^2 - 1)/3 * (Y.Y)`.
pub fn defect_surface(p: PrimeOrder, self_intersection: i64) -> Rational {
    let pv = p.as_i64();
    ratio(pv * pv - 1, 3) * int(self_intersection)
}
