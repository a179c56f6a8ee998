//! Signature bookkeeping of a prime-order quotient: the defect-sum
//! residual, Euler-characteristic accounting, and exhaustive feasibility
//! of fixed-point-group censuses.

use num_traits::Zero;
use serde_json::json;

use crate::arith::{format_rational, int, ratio, PrimeOrder, Rational};
use crate::defects::{self, GroupType};
use crate::error::{Error, Result};
use crate::localrep::LocalRep;

/// Euler characteristic from `2 chi + 3 sign = c1^2`.
pub fn euler_from(c1_squared: i64, signature: i64) -> Result<i64> {
    let num = c1_squared - 3 * signature;
    if num % 2 != 0 {
        return Err(Error::ParityViolation(num));
    }
    Ok(num / 2)
}

/// Numerical invariants of the ambient 4-manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ManifoldInvariants {
    pub signature: i64,
    pub c1_squared: i64,
    pub b2_plus: i64,
    /// The action induces the identity on rational homology; forces
    /// `sign(M/G) = sign(M)` and `|M^G| = chi(M)`.
    pub homologically_trivial: bool,
    pub euler: i64,
}

impl ManifoldInvariants {
    pub fn new(
        signature: i64,
        c1_squared: i64,
        b2_plus: i64,
        homologically_trivial: bool,
    ) -> Result<Self> {
        let euler = euler_from(c1_squared, signature)?;
        Ok(ManifoldInvariants { signature, c1_squared, b2_plus, homologically_trivial, euler })
    }
}

/// A fixed 2-dimensional component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceFixComponent {
    pub genus: u64,
    pub self_intersection: i64,
}

impl SurfaceFixComponent {
    pub fn euler(&self) -> i64 {
        2 - 2 * self.genus as i64
    }
}

/// The full fixed-point set: isolated points plus fixed surfaces.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FixedPointData {
    pub isolated: Vec<LocalRep>,
    pub surfaces: Vec<SurfaceFixComponent>,
}

impl FixedPointData {
    /// Total Euler characteristic carried by the fixed set; equals chi(M)
    /// for a homologically trivial action.
    pub fn euler_total(&self) -> i64 {
        self.isolated.len() as i64 + self.surfaces.iter().map(|s| s.euler()).sum::<i64>()
    }

    fn check_order(&self, p: PrimeOrder) -> Result<()> {
        for rep in &self.isolated {
            if rep.p() != p {
                return Err(Error::InvalidInput(format!(
                    "representation {rep} does not live mod p = {p}"
                )));
            }
        }
        Ok(())
    }
}

/// The residual of the signature equation:
///
/// ```text
/// p * sign(M/G) - sign(M) - sum def_m - sum def_Y
/// ```
///
/// Zero exactly when the fixed-point data is consistent with the quotient
/// signature.
pub fn gsig_residual(
    p: PrimeOrder,
    sign_m: i64,
    sign_mg: i64,
    data: &FixedPointData,
) -> Result<Rational> {
    data.check_order(p)?;
    let mut acc = int(p.as_i64() * sign_mg - sign_m);
    for rep in &data.isolated {
        acc -= rep.defect();
    }
    for surf in &data.surfaces {
        acc -= defects::defect_surface(p, surf.self_intersection);
    }
    Ok(acc)
}

/// Counts of fixed-point groups by type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GroupCensus {
    pub type1: u64,
    pub type2: u64,
    pub type3: u64,
    pub type4: u64,
    pub three_special: u64,
}

impl GroupCensus {
    pub fn get(&self, ty: GroupType) -> u64 {
        match ty {
            GroupType::Type1 => self.type1,
            GroupType::Type2 => self.type2,
            GroupType::Type3 => self.type3,
            GroupType::Type4 => self.type4,
            GroupType::ThreeSpecial => self.three_special,
        }
    }

    pub fn set(&mut self, ty: GroupType, n: u64) {
        match ty {
            GroupType::Type1 => self.type1 = n,
            GroupType::Type2 => self.type2 = n,
            GroupType::Type3 => self.type3 = n,
            GroupType::Type4 => self.type4 = n,
            GroupType::ThreeSpecial => self.three_special = n,
        }
    }

    /// Total number of isolated fixed points represented by the census.
    pub fn points_total(&self) -> u64 {
        GroupType::ALL.iter().map(|&t| self.get(t) * t.points()).sum()
    }

    pub fn validate_for(&self, p: PrimeOrder) -> Result<()> {
        for ty in GroupType::ALL {
            if self.get(ty) > 0 && !ty.admissible(p) {
                return Err(Error::OccurrenceViolation(format!(
                    "census has {} groups of type {}, which does not occur at p = {p}",
                    self.get(ty),
                    ty.label()
                )));
            }
        }
        Ok(())
    }

    /// Total signature defect of the census.
    pub fn defect_total(&self, p: PrimeOrder) -> Result<Rational> {
        let mut acc = Rational::zero();
        for ty in GroupType::ALL {
            let n = self.get(ty);
            if n > 0 {
                acc += int(n as i64) * defects::group_defect(ty, p)?;
            }
        }
        Ok(acc)
    }

    pub fn as_array4(&self) -> [u64; 4] {
        [self.type1, self.type2, self.type3, self.type4]
    }

    /// Expand into explicit fixed-point data with representative k = 1.
    pub fn expand(&self, p: PrimeOrder) -> Result<FixedPointData> {
        self.validate_for(p)?;
        let pv = p.as_i64();
        let mut isolated = Vec::new();
        let mut push = |k: i64, q: i64, n: u64| -> Result<()> {
            for _ in 0..n {
                isolated.push(LocalRep::new(p, k, q)?);
            }
            Ok(())
        };
        for _ in 0..self.type1 {
            push(1, pv - 1, 1)?;
        }
        for _ in 0..self.type2 {
            push(2, (pv + 3) / 2, 1)?; // weights (2, 3)
            push(pv - 1, pv - 6, 1)?; // weights (-1, 6)
        }
        for _ in 0..self.type3 {
            push(1, 2, 1)?;
            push(pv - 1, pv - 4, 2)?; // weights (-1, 4)
        }
        for _ in 0..self.type4 {
            push(1, 1, 1)?;
            push(pv - 1, pv - 3, 3)?; // weights (-1, 3)
        }
        for _ in 0..self.three_special {
            push(1, 1, 3)?;
        }
        Ok(FixedPointData { isolated, surfaces: Vec::new() })
    }
}

/// Group types that can occur at the given prime, in census order.
pub fn admissible_types(p: PrimeOrder) -> Vec<GroupType> {
    GroupType::ALL.iter().copied().filter(|t| t.admissible(p)).collect()
}

/// Outcome of the census feasibility search.
#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityReport {
    pub p: PrimeOrder,
    pub chi: i64,
    pub sign: i64,
    pub solutions: Vec<GroupCensus>,
    /// `def_(k) + (2k/3)(p-1)` per admissible type.
    pub slack: Vec<(GroupType, Rational)>,
    pub forced_trivial: bool,
}

impl FeasibilityReport {
    pub fn to_json(&self) -> serde_json::Value {
        let slack: serde_json::Map<String, serde_json::Value> = self
            .slack
            .iter()
            .map(|(t, r)| (t.label().to_string(), json!(format_rational(r))))
            .collect();
        json!({
            "schema": "sigdefect/feasibility/v1",
            "p": self.p.get(),
            "chi": self.chi,
            "sign": self.sign,
            "solutions": self.solutions.iter().map(|c| c.as_array4()).collect::<Vec<_>>(),
            "slack": slack,
            "forced_trivial": self.forced_trivial,
        })
    }
}

/// Enumerate every census satisfying both counting constraints:
///
/// * point count: `sum_k delta_k * points(k) = chi`
/// * defect sum: `sum_k delta_k * def_(k) = -(2/3)(p-1) chi`
///
/// over the bounded simplex `delta_k <= chi / points(k)`. Enumeration is
/// exhaustive and ordered lexicographically in (delta4, delta3, delta2,
/// delta1); the census at p = 2 consists of single SL2 points only, and at
/// p = 3 of SL2 points and scalar triples.
pub fn feasibility_solver(
    p: PrimeOrder,
    invariants: &ManifoldInvariants,
) -> Result<FeasibilityReport> {
    if invariants.c1_squared != 0 {
        return Err(Error::InvalidInput(format!(
            "the census feasibility problem assumes c1^2 = 0, got {}",
            invariants.c1_squared
        )));
    }
    if !invariants.homologically_trivial {
        return Err(Error::InvalidInput(
            "the census feasibility problem assumes a homologically trivial action".into(),
        ));
    }
    let chi = invariants.euler;
    if chi < 0 {
        return Err(Error::InvalidInput(format!("negative Euler characteristic {chi}")));
    }

    let types = admissible_types(p);
    let defs: Vec<Rational> =
        types.iter().map(|&t| defects::group_defect(t, p)).collect::<Result<_>>()?;
    let target = ratio(-2 * (p.as_i64() - 1) * chi, 3);

    let mut solutions = Vec::new();
    // highest-index type outermost; type 1 absorbs the point remainder
    let mut counts = vec![0u64; types.len()];
    enumerate(&types, &defs, &target, chi as u64, types.len() - 1, &mut counts, &mut solutions);

    let slack = types
        .iter()
        .zip(&defs)
        .map(|(&t, d)| {
            (t, d.clone() + ratio(2 * t.points() as i64, 3) * int(p.as_i64() - 1))
        })
        .collect();

    let forced_trivial = solutions.is_empty() && chi > 0;
    Ok(FeasibilityReport { p, chi, sign: invariants.signature, solutions, slack, forced_trivial })
}

fn enumerate(
    types: &[GroupType],
    defs: &[Rational],
    target: &Rational,
    remaining: u64,
    idx: usize,
    counts: &mut Vec<u64>,
    out: &mut Vec<GroupCensus>,
) {
    if idx == 0 {
        // type 1 groups carry one point each
        debug_assert_eq!(types[0], GroupType::Type1);
        counts[0] = remaining;
        let total: Rational = counts
            .iter()
            .zip(defs)
            .map(|(&n, d)| int(n as i64) * d.clone())
            .sum();
        if &total == target {
            let mut census = GroupCensus::default();
            for (&t, &n) in types.iter().zip(counts.iter()) {
                census.set(t, n);
            }
            out.push(census);
        }
        return;
    }
    let step = types[idx].points();
    for n in 0..=remaining / step {
        counts[idx] = n;
        enumerate(types, defs, target, remaining - n * step, idx - 1, counts, out);
    }
    counts[idx] = 0;
}

/// Result of the realizability check for a census.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GsfReport {
    /// `sum_k delta_k def_(k) = (p-1) sign(M)`, the summed signature form.
    pub summed: bool,
    /// The collapsed per-element form, available only when every count is
    /// divisible by p-1 so the census splits into full orbits of types.
    pub per_element: Option<bool>,
}

impl GsfReport {
    pub fn satisfied(&self) -> bool {
        self.summed && self.per_element != Some(false)
    }
}

pub fn gsf_report(p: PrimeOrder, census: &GroupCensus, sign_m: i64) -> Result<GsfReport> {
    census.validate_for(p)?;
    let total = census.defect_total(p)?;
    let summed = total == int((p.as_i64() - 1) * sign_m);
    let orbit = p.get() - 1;
    let decomposable = GroupType::ALL.iter().all(|&t| census.get(t) % orbit == 0);
    let per_element = if decomposable {
        let mut acc = Rational::zero();
        for ty in GroupType::ALL {
            let blocks = census.get(ty) / orbit;
            if blocks > 0 {
                acc += int(blocks as i64) * defects::group_defect(ty, p)?;
            }
        }
        Some(acc == int(sign_m))
    } else {
        None
    };
    Ok(GsfReport { summed, per_element })
}

/// True iff the summed signature form holds and the collapsed per-element
/// form holds whenever the census decomposes into full orbit blocks.
pub fn gsf_check(p: PrimeOrder, census: &GroupCensus, sign_m: i64) -> Result<bool> {
    Ok(gsf_report(p, census, sign_m)?.satisfied())
}

/// Line-oriented fixed-point data files:
///
/// ```text
/// # p=5
/// point 1 2
/// point 4 1
/// surface 1 0
/// ```
///
/// `point k q` declares an isolated point with representation (k, q) mod p;
/// `surface genus selfint` a fixed surface. Other `#` lines are comments.
pub mod datafile {
    use super::*;

    pub fn parse(input: &str) -> Result<(PrimeOrder, FixedPointData)> {
        let mut p: Option<PrimeOrder> = None;
        let mut data = FixedPointData::default();
        for (lineno, raw) in input.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| {
                Error::InvalidInput(format!("line {}: {msg}: `{line}`", lineno + 1))
            };
            if let Some(rest) = line.strip_prefix('#') {
                let rest = rest.trim();
                if let Some(pval) = rest.strip_prefix("p=") {
                    let n: u64 =
                        pval.trim().parse().map_err(|_| bad("unreadable prime header"))?;
                    p = Some(PrimeOrder::new(n)?);
                }
                continue;
            }
            let p = p.ok_or_else(|| bad("data before the `# p=<prime>` header"))?;
            let mut it = line.split_whitespace();
            match it.next() {
                Some("point") => {
                    let k: i64 = it
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| bad("expected `point k q`"))?;
                    let q: i64 = it
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| bad("expected `point k q`"))?;
                    data.isolated.push(LocalRep::new(p, k, q)?);
                }
                Some("surface") => {
                    let genus: u64 = it
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| bad("expected `surface genus selfint`"))?;
                    let self_intersection: i64 = it
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| bad("expected `surface genus selfint`"))?;
                    data.surfaces.push(SurfaceFixComponent { genus, self_intersection });
                }
                _ => return Err(bad("expected `point` or `surface`")),
            }
            if it.next().is_some() {
                return Err(bad("trailing fields"));
            }
        }
        let p = p.ok_or_else(|| Error::InvalidInput("missing `# p=<prime>` header".into()))?;
        Ok((p, data))
    }

    pub fn write(p: PrimeOrder, data: &FixedPointData) -> String {
        let mut out = format!("# p={}\n", p.get());
        for rep in &data.isolated {
            out.push_str(&format!("point {} {}\n", rep.k(), rep.q()));
        }
        for s in &data.surfaces {
            out.push_str(&format!("surface {} {}\n", s.genus, s.self_intersection));
        }
        out
    }
}
