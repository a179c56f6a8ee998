//! Local representations at isolated fixed points, rotation numbers and
//! their congruences, the curve-type classifier, and the tabulated
//! per-component fixed-point data.

use crate::arith::{int, mod_inverse, nonzero_residue, ratio, PrimeOrder, Rational};
use crate::defects;
use crate::error::{Error, Result};
use crate::gsig::SurfaceFixComponent;

/// The tangent representation `(z1, z2) -> (mu^k z1, mu^{kq} z2)` at an
/// isolated fixed point, with k, q nonzero residues mod p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LocalRep {
    p: PrimeOrder,
    k: u64,
    q: u64,
}

impl LocalRep {
    pub fn new(p: PrimeOrder, k: i64, q: i64) -> Result<Self> {
        Ok(LocalRep { p, k: nonzero_residue(k, p)?, q: nonzero_residue(q, p)? })
    }

    pub fn p(&self) -> PrimeOrder {
        self.p
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The two tangent weights (k, kq) as residues in 1..p.
    pub fn weights(&self) -> (u64, u64) {
        let pv = self.p.get();
        (self.k, (self.k as u128 * self.q as u128 % pv as u128) as u64)
    }

    /// Signature defect of this point, which depends only on q.
    pub fn defect(&self) -> Rational {
        defects::defect_point(self.p, self.q as i64)
            .expect("constructed reps have nonzero q")
    }

    /// Canonical form: k rescaled to 1, q the smaller of its two
    /// inverse-related candidates. The defect is invariant under the choice.
    pub fn normalized(&self) -> LocalRep {
        let (a, b) = self.weights();
        normalize_rep((a as i64, b as i64), self.p).expect("weights are nonzero")
    }
}

impl std::fmt::Display for LocalRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(k={}, q={}) mod {}", self.k, self.q, self.p)
    }
}

/// Convert raw tangent weights (a, b) into the canonical rep (1, q) with
/// q = min(a^-1 b, b^-1 a) as residues in 1..p.
pub fn normalize_rep(weights: (i64, i64), p: PrimeOrder) -> Result<LocalRep> {
    let (a, b) = weights;
    let ar = nonzero_residue(a, p).map_err(|_| Error::ZeroWeight(a, p.get()))?;
    let br = nonzero_residue(b, p).map_err(|_| Error::ZeroWeight(b, p.get()))?;
    let pv = p.get();
    let q1 = (mod_inverse(ar, p)? as u128 * br as u128 % pv as u128) as u64;
    let q2 = (mod_inverse(br, p)? as u128 * ar as u128 % pv as u128) as u64;
    Ok(LocalRep { p, k: 1, q: q1.min(q2) })
}

/// True iff the representation lies in SL2: k + kq = 0 mod p, i.e. q = -1.
pub fn sl2_check(rep: &LocalRep) -> bool {
    (rep.k + rep.k * rep.q) % rep.p.get() == 0
}

/// An unordered pair of rotation numbers at a fixed point on an invariant
/// curve; stored sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RotationPair {
    m1: u64,
    m2: u64,
}

impl RotationPair {
    pub fn new(a: u64, b: u64, p: PrimeOrder) -> Result<Self> {
        if a >= p.get() || b >= p.get() {
            return Err(Error::InvalidInput(format!(
                "rotation numbers ({a},{b}) out of range mod {p}"
            )));
        }
        Ok(RotationPair { m1: a.min(b), m2: a.max(b) })
    }

    pub fn m1(&self) -> u64 {
        self.m1
    }

    pub fn m2(&self) -> u64 {
        self.m2
    }

    pub fn sum(&self) -> u64 {
        self.m1 + self.m2
    }
}

impl std::fmt::Display for RotationPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.m1, self.m2)
    }
}

fn expect_two_pairs(pairs: &[RotationPair]) -> Result<()> {
    if pairs.len() != 2 {
        return Err(Error::WrongPairCount(pairs.len()));
    }
    Ok(())
}

/// The sphere congruence: an invariant sphere with K.C = 0 and two fixed
/// points has `sum (m_{i,1} + m_{i,2}) = 0 mod p`.
pub fn rotation_congruence(pairs: &[RotationPair], p: PrimeOrder, k_dot_c: i64) -> Result<bool> {
    expect_two_pairs(pairs)?;
    if k_dot_c != 0 {
        return Err(Error::NonzeroCanonicalPairing(k_dot_c));
    }
    let total: u64 = pairs.iter().map(|pr| pr.sum()).sum();
    Ok(total % p.get() == 0)
}

/// Virtual dimension of the equivariant parametrized moduli problem at an
/// invariant sphere: `d = -(K.C)/p + 2 - sum (m_{i,1} + m_{i,2})/p`.
///
/// Integrality of `d` with K.C = 0 is exactly [`rotation_congruence`].
pub fn virtual_dim(pairs: &[RotationPair], p: PrimeOrder, k_dot_c: i64) -> Result<Rational> {
    expect_two_pairs(pairs)?;
    let total: u64 = pairs.iter().map(|pr| pr.sum()).sum();
    Ok(ratio(-k_dot_c, p.as_i64()) + int(2) - ratio(total as i64, p.as_i64()))
}

/// One admissible (genus, double points, Milnor numbers) shape of a single
/// holomorphic curve with prescribed C^2 and K.C.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSingularityProfile {
    pub genus: u64,
    pub double_points: u64,
    pub milnor_numbers: Vec<u64>,
}

impl CurveSingularityProfile {
    /// The adjunction identity `C^2 + K.C + 2 = 2g + 2d + 2 sum kappa`.
    pub fn adjunction_holds(&self, c_squared: i64, k_dot_c: i64) -> bool {
        let rhs = 2 * self.genus as i64
            + 2 * self.double_points as i64
            + 2 * self.milnor_numbers.iter().sum::<u64>() as i64;
        c_squared + k_dot_c + 2 == rhs
    }
}

/// Enumerate every (genus, double-point, Milnor) shape compatible with the
/// adjunction identity at the given C^2 and K.C.
///
/// Ordering is deterministic: genus descending, then double points
/// descending, then Milnor partitions in descending lexicographic order.
pub fn classify_single_curve(
    c_squared: i64,
    k_dot_c: i64,
) -> Result<Vec<CurveSingularityProfile>> {
    let budget = c_squared + k_dot_c + 2;
    if budget < 0 || budget % 2 != 0 {
        return Err(Error::InvalidBudget(budget));
    }
    let half = (budget / 2) as u64;
    let mut out = Vec::new();
    for genus in (0..=half).rev() {
        for dp in (0..=half - genus).rev() {
            let kappa_total = half - genus - dp;
            for part in partitions_desc(kappa_total) {
                out.push(CurveSingularityProfile {
                    genus,
                    double_points: dp,
                    milnor_numbers: part,
                });
            }
        }
    }
    Ok(out)
}

/// Partitions of n into positive parts, descending parts, descending
/// lexicographic order; for n = 0 the single empty partition.
fn partitions_desc(n: u64) -> Vec<Vec<u64>> {
    fn rec(n: u64, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        let hi = n.min(max);
        for part in (1..=hi).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// The component shapes that can carry fixed points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentType {
    /// Torus fixed entirely by the action.
    IFixed,
    /// Torus with four isolated fixed points; occurs only at p = 2.
    IP2,
    /// Torus with three isolated fixed points; occurs only at p = 3.
    IP3,
    /// Cusp sphere of self-intersection 0; occurs only for p >= 5.
    II,
    /// Nodal sphere of self-intersection 0.
    III,
    /// Two (-2)-spheres meeting at one point with order-2 tangency; p >= 3.
    IV,
    /// Three (-2)-spheres through a single point; occurs only for p != 3.
    VTriple,
}

impl ComponentType {
    pub const ALL: [ComponentType; 7] = [
        ComponentType::IFixed,
        ComponentType::IP2,
        ComponentType::IP3,
        ComponentType::II,
        ComponentType::III,
        ComponentType::IV,
        ComponentType::VTriple,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ComponentType::IFixed => "I-fixed",
            ComponentType::IP2 => "I-p2",
            ComponentType::IP3 => "I-p3",
            ComponentType::II => "II",
            ComponentType::III => "III",
            ComponentType::IV => "IV",
            ComponentType::VTriple => "V-triple",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        ComponentType::ALL
            .iter()
            .copied()
            .find(|c| c.label() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown component type `{s}`")))
    }

    pub fn admissible(self, p: PrimeOrder) -> bool {
        match self {
            ComponentType::IFixed | ComponentType::III => true,
            ComponentType::IP2 => p.get() == 2,
            ComponentType::IP3 => p.get() == 3,
            ComponentType::II => p.get() >= 5,
            ComponentType::IV => p.get() >= 3,
            ComponentType::VTriple => p.get() != 3,
        }
    }
}

impl std::fmt::Display for ComponentType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// An isolated fixed point of a component, with one rotation pair per
/// curve branch through it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointInfo {
    pub label: String,
    pub pairs: Vec<RotationPair>,
}

impl FixedPointInfo {
    /// The tangent representation read off any branch pair.
    pub fn rep(&self, p: PrimeOrder) -> Result<LocalRep> {
        let pr = self.pairs.first().ok_or_else(|| {
            Error::InvalidInput(format!("point `{}` carries no rotation pair", self.label))
        })?;
        normalize_rep((pr.m1() as i64, pr.m2() as i64), p)
    }
}

/// A sphere of a component, listing (point index, pair index) for its two
/// fixed points; a nodal sphere lists the same point twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereIncidence {
    pub label: String,
    pub points: Vec<(usize, usize)>,
}

/// Fixed-point data of one invariant component, one consistent assignment.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentData {
    pub component: ComponentType,
    pub p: PrimeOrder,
    pub fixed_surfaces: Vec<SurfaceFixComponent>,
    pub points: Vec<FixedPointInfo>,
    pub spheres: Vec<SphereIncidence>,
    pub notes: Vec<String>,
}

impl ComponentData {
    /// Rotation pairs of one sphere in incidence order.
    pub fn sphere_pairs(&self, sphere: &SphereIncidence) -> Vec<RotationPair> {
        sphere
            .points
            .iter()
            .map(|&(pt, pair)| self.points[pt].pairs[pair])
            .collect()
    }
}

/// The tabulated fixed-point data of each component type. Types with a
/// genuine alternative (the p = 3 torus) return one entry per alternative.
pub fn component_fixed_data(
    component: ComponentType,
    p: PrimeOrder,
) -> Result<Vec<ComponentData>> {
    if !component.admissible(p) {
        return Err(Error::OccurrenceViolation(format!(
            "component {component} does not occur at p = {p}"
        )));
    }
    let pv = p.get();
    let pair = |a: u64, b: u64| RotationPair::new(a % pv, b % pv, p).expect("tabulated pair");
    let base = ComponentData {
        component,
        p,
        fixed_surfaces: Vec::new(),
        points: Vec::new(),
        spheres: Vec::new(),
        notes: Vec::new(),
    };
    let mut variants = Vec::new();
    match component {
        ComponentType::IFixed => {
            let mut d = base;
            d.fixed_surfaces.push(SurfaceFixComponent { genus: 1, self_intersection: 0 });
            d.notes.push("torus fixed entirely; contributes no signature defect".into());
            variants.push(d);
        }
        ComponentType::IP2 => {
            let mut d = base;
            for i in 1..=4 {
                d.points.push(FixedPointInfo {
                    label: format!("torus point {i}"),
                    pairs: vec![pair(1, 1)],
                });
            }
            d.notes.push("free boundary action; occurs only at p = 2".into());
            variants.push(d);
        }
        ComponentType::IP3 => {
            // both admissible uniform representations are returned
            for q in [1u64, 2] {
                let mut d = base.clone();
                for i in 1..=3 {
                    d.points.push(FixedPointInfo {
                        label: format!("torus point {i}"),
                        pairs: vec![pair(1, q)],
                    });
                }
                d.notes.push(format!("all three points share rotation numbers (1,{q})"));
                variants.push(d);
            }
        }
        ComponentType::II => {
            let mut d = base;
            let m = if pv > 5 { pv - 6 } else { 4 };
            d.points.push(FixedPointInfo { label: "cusp".into(), pairs: vec![pair(2, 3)] });
            d.points.push(FixedPointInfo { label: "smooth".into(), pairs: vec![pair(1, m)] });
            d.spheres.push(SphereIncidence {
                label: "cusp sphere".into(),
                points: vec![(0, 0), (1, 0)],
            });
            variants.push(d);
        }
        ComponentType::III => {
            let mut d = base;
            d.points.push(FixedPointInfo {
                label: "node".into(),
                pairs: vec![pair(1, pv - 1), pair(1, pv - 1)],
            });
            d.spheres.push(SphereIncidence {
                label: "nodal sphere".into(),
                points: vec![(0, 0), (0, 1)],
            });
            variants.push(d);
        }
        ComponentType::IV => {
            let mut d = base;
            let m = if pv > 3 { pv - 4 } else { 2 };
            d.points.push(FixedPointInfo {
                label: "tangency point".into(),
                pairs: vec![pair(1, 2), pair(1, 2)],
            });
            d.points.push(FixedPointInfo { label: "outer 1".into(), pairs: vec![pair(1, m)] });
            d.points.push(FixedPointInfo { label: "outer 2".into(), pairs: vec![pair(1, m)] });
            d.spheres.push(SphereIncidence {
                label: "sphere 1".into(),
                points: vec![(0, 0), (1, 0)],
            });
            d.spheres.push(SphereIncidence {
                label: "sphere 2".into(),
                points: vec![(0, 1), (2, 0)],
            });
            variants.push(d);
        }
        ComponentType::VTriple => {
            let mut d = base;
            let m = if pv == 2 { 1 } else { pv - 3 };
            d.points.push(FixedPointInfo {
                label: "triple point".into(),
                pairs: vec![pair(1, 1), pair(1, 1), pair(1, 1)],
            });
            for i in 1..=3 {
                d.points.push(FixedPointInfo {
                    label: format!("outer {i}"),
                    pairs: vec![pair(1, m)],
                });
            }
            for i in 1..=3usize {
                d.spheres.push(SphereIncidence {
                    label: format!("sphere {i}"),
                    points: vec![(0, i - 1), (i, 0)],
                });
            }
            variants.push(d);
        }
    }
    Ok(variants)
}

/// A normalized Seifert invariant `(b; (a1,b1), ..., (an,bn))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertData {
    pub b: i64,
    pub exceptional: Vec<(u64, i64)>,
}

impl std::fmt::Display for SeifertData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}", self.b)?;
        for (a, b) in &self.exceptional {
            write!(f, ", ({a},{b})")?;
        }
        write!(f, ")")
    }
}

/// Quotient Seifert data for the torus-boundary case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusSeifertData {
    pub triples: Vec<SeifertData>,
    /// Set when the list is empty, explaining why.
    pub unavailable: Option<String>,
}

/// The tabulated quotient Seifert invariants of a torus component with
/// isolated fixed points; nonempty only for p = 2 and p = 3.
pub fn torus_seifert_data(p: PrimeOrder) -> TorusSeifertData {
    match p.get() {
        2 => TorusSeifertData {
            triples: vec![SeifertData { b: -2, exceptional: vec![(2, 1); 4] }],
            unavailable: None,
        },
        3 => TorusSeifertData {
            triples: vec![
                SeifertData { b: -1, exceptional: vec![(3, 1); 3] },
                SeifertData { b: -2, exceptional: vec![(3, 2); 3] },
            ],
            unavailable: None,
        },
        _ => TorusSeifertData {
            triples: Vec::new(),
            unavailable: Some(
                "a free boundary action with fixed points on the torus occurs only for p = 2 or p = 3"
                    .into(),
            ),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes_up_to;
    use crate::defects::defect_point;
    use proptest::prelude::*;

    fn p(n: u64) -> PrimeOrder {
        PrimeOrder::new(n).unwrap()
    }

    #[test]
    fn normalize_rep_examples() {
        let r = normalize_rep((2, 3), p(5)).unwrap();
        assert_eq!((r.k(), r.q()), (1, 4));
        let r = normalize_rep((1, 1), p(11)).unwrap();
        assert_eq!((r.k(), r.q()), (1, 1));
        let r = normalize_rep((3, 1), p(7)).unwrap();
        assert_eq!((r.k(), r.q()), (1, 3));
        assert!(matches!(normalize_rep((5, 3), p(5)), Err(Error::ZeroWeight(5, 5))));
    }

    proptest! {
        #[test]
        fn normalize_rep_idempotent_and_branch_free(a in 1i64..100, b in 1i64..100, idx in 0usize..20) {
            let primes = primes_up_to(71);
            let pr = p(primes[idx % primes.len()]);
            if a % pr.as_i64() != 0 && b % pr.as_i64() != 0 {
                let n = normalize_rep((a, b), pr).unwrap();
                prop_assert_eq!(n.normalized(), n);
                // the defect is blind to the tie-break between q and q^-1
                let q1 = normalize_rep((a, b), pr).unwrap().q() as i64;
                let q2 = normalize_rep((b, a), pr).unwrap().q() as i64;
                prop_assert_eq!(defect_point(pr, q1).unwrap(), defect_point(pr, q2).unwrap());
            }
        }
    }

    #[test]
    fn sl2_detection() {
        assert!(sl2_check(&LocalRep::new(p(7), 1, 6).unwrap()));
        assert!(!sl2_check(&LocalRep::new(p(7), 1, 1).unwrap()));
        assert!(sl2_check(&normalize_rep((2, 3), p(5)).unwrap()));
        assert!(sl2_check(&LocalRep::new(p(2), 1, 1).unwrap()));
    }

    #[test]
    fn rotation_congruence_examples() {
        let pr = p(7);
        let pairs = [
            RotationPair::new(2, 3, pr).unwrap(),
            RotationPair::new(1, 1, pr).unwrap(),
        ];
        assert!(rotation_congruence(&pairs, pr, 0).unwrap());
        for pv in [2u64, 3, 5, 13] {
            let pr = p(pv);
            let sl2 = RotationPair::new(1, pv - 1, pr).unwrap();
            assert!(rotation_congruence(&[sl2, sl2], pr, 0).unwrap());
        }
        let pairs = [
            RotationPair::new(1, 2, pr).unwrap(),
            RotationPair::new(1, 1, pr).unwrap(),
        ];
        assert!(!rotation_congruence(&pairs, pr, 0).unwrap());
        assert!(matches!(
            rotation_congruence(&pairs[..1], pr, 0),
            Err(Error::WrongPairCount(1))
        ));
        assert!(rotation_congruence(&pairs, pr, 1).is_err());
    }

    #[test]
    fn virtual_dim_examples() {
        let pr = p(7);
        let pairs = [
            RotationPair::new(2, 3, pr).unwrap(),
            RotationPair::new(1, 1, pr).unwrap(),
        ];
        assert_eq!(virtual_dim(&pairs, pr, 0).unwrap(), int(1));
        let pr = p(11);
        let sl2 = RotationPair::new(1, 10, pr).unwrap();
        assert_eq!(virtual_dim(&[sl2, sl2], pr, 0).unwrap(), int(0));
        let pr = p(5);
        let pairs = [
            RotationPair::new(1, 2, pr).unwrap(),
            RotationPair::new(1, 1, pr).unwrap(),
        ];
        assert_eq!(virtual_dim(&pairs, pr, 0).unwrap(), int(1));
    }

    proptest! {
        #[test]
        fn dim_integral_iff_congruent(a1 in 0u64..13, a2 in 0u64..13, b1 in 0u64..13, b2 in 0u64..13) {
            let pr = p(13);
            let pairs = [
                RotationPair::new(a1, a2, pr).unwrap(),
                RotationPair::new(b1, b2, pr).unwrap(),
            ];
            let d = virtual_dim(&pairs, pr, 0).unwrap();
            prop_assert_eq!(d.is_integer(), rotation_congruence(&pairs, pr, 0).unwrap());
        }
    }

    #[test]
    fn curve_classifier_square_zero() {
        let got = classify_single_curve(0, 0).unwrap();
        assert_eq!(
            got,
            vec![
                CurveSingularityProfile { genus: 1, double_points: 0, milnor_numbers: vec![] },
                CurveSingularityProfile { genus: 0, double_points: 1, milnor_numbers: vec![] },
                CurveSingularityProfile { genus: 0, double_points: 0, milnor_numbers: vec![1] },
            ]
        );
        for profile in &got {
            assert!(profile.adjunction_holds(0, 0));
        }
    }

    #[test]
    fn curve_classifier_rigid_spheres() {
        let embedded = vec![CurveSingularityProfile {
            genus: 0,
            double_points: 0,
            milnor_numbers: vec![],
        }];
        assert_eq!(classify_single_curve(-2, 0).unwrap(), embedded);
        assert_eq!(classify_single_curve(-1, -1).unwrap(), embedded);
        assert!(matches!(classify_single_curve(-3, 0), Err(Error::InvalidBudget(-1))));
        assert!(matches!(classify_single_curve(-1, 0), Err(Error::InvalidBudget(1))));
    }

    #[test]
    fn curve_classifier_enumerates_partitions() {
        // budget 4: g + d + sum kappa = 2
        let got = classify_single_curve(2, 0).unwrap();
        assert!(got.contains(&CurveSingularityProfile {
            genus: 0,
            double_points: 0,
            milnor_numbers: vec![2]
        }));
        assert!(got.contains(&CurveSingularityProfile {
            genus: 0,
            double_points: 0,
            milnor_numbers: vec![1, 1]
        }));
        assert_eq!(got.len(), 7);
    }

    #[test]
    fn component_data_tables() {
        let d = &component_fixed_data(ComponentType::II, p(7)).unwrap()[0];
        assert_eq!(d.points[0].pairs[0], RotationPair::new(2, 3, p(7)).unwrap());
        assert_eq!(d.points[1].pairs[0], RotationPair::new(1, 1, p(7)).unwrap());

        let d = &component_fixed_data(ComponentType::III, p(11)).unwrap()[0];
        assert_eq!(d.points[0].pairs, vec![
            RotationPair::new(1, 10, p(11)).unwrap(),
            RotationPair::new(1, 10, p(11)).unwrap()
        ]);

        let d = &component_fixed_data(ComponentType::IV, p(5)).unwrap()[0];
        assert_eq!(d.points[0].pairs[0], RotationPair::new(1, 2, p(5)).unwrap());
        assert_eq!(d.points[1].pairs[0], RotationPair::new(1, 1, p(5)).unwrap());

        let d = &component_fixed_data(ComponentType::IP2, p(2)).unwrap()[0];
        assert_eq!(d.points.len(), 4);
        assert!(d.points.iter().all(|pt| pt.pairs[0] == RotationPair::new(1, 1, p(2)).unwrap()));

        let variants = component_fixed_data(ComponentType::IP3, p(3)).unwrap();
        assert_eq!(variants.len(), 2);

        assert!(component_fixed_data(ComponentType::II, p(3)).is_err());
        assert!(component_fixed_data(ComponentType::VTriple, p(3)).is_err());
        assert!(component_fixed_data(ComponentType::IP2, p(5)).is_err());
    }

    #[test]
    fn component_spheres_satisfy_congruence() {
        for pv in primes_up_to(199) {
            let pr = p(pv);
            for ty in ComponentType::ALL {
                if !ty.admissible(pr) {
                    continue;
                }
                for d in component_fixed_data(ty, pr).unwrap() {
                    for s in &d.spheres {
                        let pairs = d.sphere_pairs(s);
                        assert!(
                            rotation_congruence(&pairs, pr, 0).unwrap(),
                            "{ty} at p={pv}, {}",
                            s.label
                        );
                        assert!(virtual_dim(&pairs, pr, 0).unwrap().is_integer());
                    }
                }
            }
        }
    }

    #[test]
    fn component_tables_match_census_groups() {
        use crate::defects::GroupType;
        use crate::gsig::GroupCensus;
        let normalized_qs = |d: &ComponentData, pr: PrimeOrder| {
            let mut qs: Vec<u64> =
                d.points.iter().map(|pt| pt.rep(pr).unwrap().normalized().q()).collect();
            qs.sort_unstable();
            qs
        };
        let census_qs = |ty: GroupType, pr: PrimeOrder| {
            let mut c = GroupCensus::default();
            c.set(ty, 1);
            let mut qs: Vec<u64> =
                c.expand(pr).unwrap().isolated.iter().map(|r| r.normalized().q()).collect();
            qs.sort_unstable();
            qs
        };
        for pv in primes_up_to(199) {
            let pr = p(pv);
            let pairs: Vec<(ComponentType, GroupType)> = match pv {
                2 => vec![(ComponentType::III, GroupType::Type1)],
                3 => vec![(ComponentType::III, GroupType::Type1)],
                5 => vec![
                    (ComponentType::III, GroupType::Type1),
                    (ComponentType::IV, GroupType::Type3),
                    (ComponentType::VTriple, GroupType::Type4),
                ],
                _ => vec![
                    (ComponentType::III, GroupType::Type1),
                    (ComponentType::II, GroupType::Type2),
                    (ComponentType::IV, GroupType::Type3),
                    (ComponentType::VTriple, GroupType::Type4),
                ],
            };
            for (ct, gt) in pairs {
                let comp = &component_fixed_data(ct, pr).unwrap()[0];
                assert_eq!(normalized_qs(comp, pr), census_qs(gt, pr), "{ct} vs {gt} at p={pv}");
            }
            if pv == 5 {
                // the cusp component degenerates to a pair of SL2 points
                let comp = &component_fixed_data(ComponentType::II, pr).unwrap()[0];
                assert!(comp.points.iter().all(|pt| sl2_check(&pt.rep(pr).unwrap())));
            }
        }
    }

    #[test]
    fn seifert_tables() {
        let d = torus_seifert_data(p(2));
        assert_eq!(d.triples, vec![SeifertData { b: -2, exceptional: vec![(2, 1); 4] }]);
        let d = torus_seifert_data(p(3));
        assert_eq!(d.triples.len(), 2);
        assert_eq!(d.triples[0], SeifertData { b: -1, exceptional: vec![(3, 1); 3] });
        let d = torus_seifert_data(p(5));
        assert!(d.triples.is_empty());
        assert!(d.unavailable.is_some());
    }
}
