//! Machine-checked replays of the end-to-end numerical arguments: the
//! rigidity contradiction for trivial canonical class, the realizability
//! example censuses, the non-pseudofree case arithmetic, and prime sweeps
//! of the census feasibility problem.
//!
//! Every ledger entry is recomputed from the defect and signature
//! primitives; no scenario hard-codes a defect value.

use serde_json::json;

use crate::arith::{format_rational, int, primes_up_to, ratio, PrimeOrder, Rational};
use crate::defects::{self, GroupType};
use crate::error::{Error, Result};
use crate::gsig::{self, FeasibilityReport, GroupCensus, ManifoldInvariants};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    Contradiction,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Consistent => f.write_str("CONSISTENT"),
            Verdict::Contradiction => f.write_str("CONTRADICTION"),
        }
    }
}

/// The relation the scenario's equation asserts between lhs and rhs;
/// its failure is the contradiction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Equal,
    GreaterEq,
}

/// A replayed numerical argument with its full term ledger.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioReport {
    pub scenario_id: String,
    pub inputs: Vec<(String, String)>,
    pub ledger: Vec<(String, Rational)>,
    pub lhs: Rational,
    pub rhs: Rational,
    pub relation: Relation,
    pub verdict: Verdict,
    /// The verdict the argument is expected to produce.
    pub expected_verdict: Verdict,
    pub narrative: String,
}

impl ScenarioReport {
    fn conclude(
        scenario_id: String,
        inputs: Vec<(String, String)>,
        ledger: Vec<(String, Rational)>,
        lhs: Rational,
        rhs: Rational,
        relation: Relation,
        expected_verdict: Verdict,
        narrative: String,
    ) -> Self {
        let holds = match relation {
            Relation::Equal => lhs == rhs,
            Relation::GreaterEq => lhs >= rhs,
        };
        let verdict = if holds { Verdict::Consistent } else { Verdict::Contradiction };
        ScenarioReport {
            scenario_id,
            inputs,
            ledger,
            lhs,
            rhs,
            relation,
            verdict,
            expected_verdict,
            narrative,
        }
    }

    pub fn reproduced(&self) -> bool {
        self.verdict == self.expected_verdict
    }

    /// The final verdict line, e.g. `LHS -64 != RHS 56: CONTRADICTION`.
    pub fn verdict_line(&self) -> String {
        let l = format_rational(&self.lhs);
        let r = format_rational(&self.rhs);
        match (self.relation, self.verdict) {
            (Relation::Equal, Verdict::Consistent) => format!("LHS {l} == RHS {r}: CONSISTENT"),
            (Relation::Equal, Verdict::Contradiction) => {
                format!("LHS {l} != RHS {r}: CONTRADICTION")
            }
            (Relation::GreaterEq, Verdict::Consistent) => {
                format!("LHS {l} >= RHS {r} HOLDS: CONSISTENT")
            }
            (Relation::GreaterEq, Verdict::Contradiction) => {
                format!("LHS {l} >= RHS {r} FAILS: CONTRADICTION")
            }
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("scenario: {}\n", self.scenario_id);
        for (k, v) in &self.inputs {
            out.push_str(&format!("input {k} = {v}\n"));
        }
        for (term, value) in &self.ledger {
            out.push_str(&format!("  {term} = {}\n", format_rational(value)));
        }
        out.push_str(&format!("{}\n", self.narrative));
        out.push_str(&self.verdict_line());
        out.push('\n');
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": "sigdefect/scenario/v1",
            "scenario": self.scenario_id,
            "inputs": self.inputs.iter()
                .map(|(k, v)| (k.clone(), json!(v)))
                .collect::<serde_json::Map<_, _>>(),
            "ledger": self.ledger.iter()
                .map(|(t, v)| json!([t, format_rational(v)]))
                .collect::<Vec<_>>(),
            "lhs": format_rational(&self.lhs),
            "rhs": format_rational(&self.rhs),
            "relation": match self.relation { Relation::Equal => "equal", Relation::GreaterEq => "greater-eq" },
            "verdict": self.verdict.to_string(),
            "expected_verdict": self.expected_verdict.to_string(),
            "reproduced": self.reproduced(),
            "narrative": self.narrative,
        })
    }
}

/// The rigidity contradiction for trivial canonical class and nonzero
/// signature: every fixed point is SL2-type, so the per-point defect is
/// `(p-1)(p-2)/3`, while the signature equation would force `(2/3)(1-p)`.
pub fn theorem_a(p: PrimeOrder, sign: i64) -> Result<ScenarioReport> {
    if sign == 0 || sign % 2 != 0 || -3 * sign / 2 <= 0 {
        return Err(Error::InvalidInput(format!(
            "need an even negative signature with positive chi = -(3/2) sign, got {sign}"
        )));
    }
    let chi = gsig::euler_from(0, sign)?;
    let lhs = defects::defect_point(p, -1)?;
    let rhs = ratio((p.as_i64() - 1) * sign, chi);
    let ledger = vec![
        ("defect of one SL2-type point".to_string(), lhs.clone()),
        ("defect per point forced by the signature equation".to_string(), rhs.clone()),
        ("fixed point count chi".to_string(), int(chi)),
    ];
    let narrative = format!(
        "all {chi} fixed points are SL2-type with defect {}; \
         the quotient signature equation would force {} per point",
        format_rational(&lhs),
        format_rational(&rhs),
    );
    Ok(ScenarioReport::conclude(
        format!("theorem-a/p{}", p.get()),
        vec![("p".into(), p.to_string()), ("sign".into(), sign.to_string())],
        ledger,
        lhs,
        rhs,
        Relation::Equal,
        Verdict::Contradiction,
        narrative,
    ))
}

/// Variants of the realizability census check on a 24-fixed-point
/// homotopy K3 with signature -16.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Example39Variant {
    /// p = 5, eight type-3 triples.
    P5,
    /// p = 7, twelve type-2 pairs.
    P7Type2,
    /// p = 7, six type-4 quadruples.
    P7Type4,
    /// p = 5 with one triple removed; a deliberately broken control case.
    P5Broken,
}

impl Example39Variant {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "p5" => Ok(Example39Variant::P5),
            "p7-type2" => Ok(Example39Variant::P7Type2),
            "p7-type4" => Ok(Example39Variant::P7Type4),
            "p5-broken" => Ok(Example39Variant::P5Broken),
            other => Err(Error::InvalidInput(format!("unknown census variant `{other}`"))),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Example39Variant::P5 => "p5",
            Example39Variant::P7Type2 => "p7-type2",
            Example39Variant::P7Type4 => "p7-type4",
            Example39Variant::P5Broken => "p5-broken",
        }
    }
}

pub fn example_39(variant: Example39Variant) -> Result<ScenarioReport> {
    let sign = -16i64;
    let (p, census, ty, expected) = match variant {
        Example39Variant::P5 => (
            PrimeOrder::new(5)?,
            GroupCensus { type3: 8, ..Default::default() },
            GroupType::Type3,
            Verdict::Consistent,
        ),
        Example39Variant::P7Type2 => (
            PrimeOrder::new(7)?,
            GroupCensus { type2: 12, ..Default::default() },
            GroupType::Type2,
            Verdict::Consistent,
        ),
        Example39Variant::P7Type4 => (
            PrimeOrder::new(7)?,
            GroupCensus { type4: 6, ..Default::default() },
            GroupType::Type4,
            Verdict::Consistent,
        ),
        Example39Variant::P5Broken => (
            PrimeOrder::new(5)?,
            GroupCensus { type3: 7, ..Default::default() },
            GroupType::Type3,
            Verdict::Contradiction,
        ),
    };
    let group = defects::group_defect(ty, p)?;
    let lhs = census.defect_total(p)?;
    let rhs = int((p.as_i64() - 1) * sign);
    let data = census.expand(p)?;
    let residual = gsig::gsig_residual(p, sign, sign, &data)?;
    let gsf = gsig::gsf_report(p, &census, sign)?;

    let mut ledger = vec![
        (format!("group defect def_({})", ty.label()), group.clone()),
        ("census defect total".to_string(), lhs.clone()),
        ("(p-1) * sign".to_string(), rhs.clone()),
        ("signature residual on the expanded point set".to_string(), residual),
    ];
    let orbit = p.get() - 1;
    if census.get(ty) % orbit == 0 {
        ledger.push((
            "per-element sum over full orbit blocks".to_string(),
            int((census.get(ty) / orbit) as i64) * group,
        ));
    }
    let narrative = format!(
        "{} groups of type {} over {} isolated points; realizability check: {}",
        census.get(ty),
        ty.label(),
        census.points_total(),
        if gsf.satisfied() { "satisfied" } else { "violated" },
    );
    Ok(ScenarioReport::conclude(
        format!("example-3.9/{}", variant.label()),
        vec![
            ("p".into(), p.to_string()),
            ("sign".into(), sign.to_string()),
            (format!("delta_{}", ty.label()), census.get(ty).to_string()),
        ],
        ledger,
        lhs,
        rhs,
        Relation::Equal,
        expected,
        narrative,
    ))
}

/// The non-pseudofree case arithmetic on an integral-period homotopy K3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Example310Case {
    P2,
    P3,
    P5Atilde4,
    /// The 4-leaf-star configuration bound, at any prime.
    Dtilde4(u64),
}

impl Example310Case {
    pub fn label(self) -> String {
        match self {
            Example310Case::P2 => "p2".into(),
            Example310Case::P3 => "p3".into(),
            Example310Case::P5Atilde4 => "p5-atilde4".into(),
            Example310Case::Dtilde4(p) => format!("dtilde4-p{p}"),
        }
    }
}

pub fn example_310(case: Example310Case) -> Result<ScenarioReport> {
    let sign = -16i64;
    match case {
        Example310Case::P2 => {
            let p = PrimeOrder::new(2)?;
            let def_y = defects::defect_surface(p, -2);
            let def_m = defects::defect_point(p, 1)?;
            let lhs = int((p.as_i64() - 1) * sign);
            let rhs = int(3) * def_y.clone();
            let ledger = vec![
                ("defect of one fixed (-2)-sphere".to_string(), def_y),
                ("defect of any isolated point".to_string(), def_m),
                ("largest achievable defect total (at most 3 fixed spheres)".to_string(), rhs.clone()),
            ];
            let narrative = "every point defect vanishes at order 2, so the whole budget \
                             rests on at most three fixed spheres"
                .to_string();
            Ok(ScenarioReport::conclude(
                "example-3.10/p2".into(),
                vec![("p".into(), "2".into()), ("sign".into(), sign.to_string())],
                ledger,
                lhs,
                rhs,
                Relation::GreaterEq,
                Verdict::Contradiction,
                narrative,
            ))
        }
        Example310Case::P3 => {
            let p = PrimeOrder::new(3)?;
            let def_m_min = defects::defect_point(p, 1)?; // the scalar type; SL2 gives +2/3
            let def_y = defects::defect_surface(p, -2);
            let lhs = int((p.as_i64() - 1) * sign);
            let rhs = int(24) * def_m_min.clone() + int(2) * def_y.clone();
            let ledger = vec![
                ("smallest point defect at order 3".to_string(), def_m_min),
                ("defect of one fixed (-2)-sphere".to_string(), def_y),
                ("lower bound over 24 points and at most 2 fixed spheres".to_string(), rhs.clone()),
            ];
            let narrative = "-32 = -16(p-1) would have to dominate a sum bounded below by -80/3"
                .to_string();
            Ok(ScenarioReport::conclude(
                "example-3.10/p3".into(),
                vec![("p".into(), "3".into()), ("sign".into(), sign.to_string())],
                ledger,
                lhs,
                rhs,
                Relation::GreaterEq,
                Verdict::Contradiction,
                narrative,
            ))
        }
        Example310Case::P5Atilde4 => {
            let p = PrimeOrder::new(5)?;
            let sl2 = defects::defect_point(p, -1)?;
            let i1 = defects::defect_point(p, 1)?;
            let i2 = defects::defect_point(p, 2)?;
            let i3 = defects::defect_point(p, 3)?;
            let def_y = defects::defect_surface(p, -2);
            let lhs = int((p.as_i64() - 1) * sign);
            let rhs = int(19) * sl2.clone() + i1.clone() + i2.clone() + i3.clone() + def_y.clone();
            let ledger = vec![
                ("19 SL2-type points".to_string(), int(19) * sl2),
                ("cycle point with q = 1".to_string(), i1),
                ("cycle point with q = 2".to_string(), i2),
                ("cycle point with q = 3".to_string(), i3),
                ("fixed (-2)-sphere of the 5-cycle".to_string(), def_y),
                ("defect total".to_string(), rhs.clone()),
            ];
            let narrative =
                "a fixed sphere inside a 5-cycle of (-2)-spheres leaves 19 SL2-type points \
                 plus cycle points with q = 1, 2, 3; the totals disagree"
                    .to_string();
            Ok(ScenarioReport::conclude(
                "example-3.10/p5-atilde4".into(),
                vec![("p".into(), "5".into()), ("sign".into(), sign.to_string())],
                ledger,
                lhs,
                rhs,
                Relation::Equal,
                Verdict::Contradiction,
                narrative,
            ))
        }
        Example310Case::Dtilde4(pv) => {
            let p = PrimeOrder::new(pv)?;
            // at p = 2 the defining sum for q = -2 degenerates, so the
            // closed form (p-1)(p-5)/6 stands in for it there
            let i_minus2 = if pv > 2 {
                defects::defect_point(p, -2)?
            } else {
                ratio((p.as_i64() - 1) * (p.as_i64() - 5), 6)
            };
            debug_assert_eq!(i_minus2, ratio((p.as_i64() - 1) * (p.as_i64() - 5), 6));
            let sphere_term = defects::defect_surface(p, -2);
            let lhs = int((p.as_i64() - 1) * sign);
            let rhs = int(4) * i_minus2.clone() + sphere_term.clone();
            let ledger = vec![
                ("defect of one point with q = -2".to_string(), i_minus2),
                ("four star points total".to_string(), rhs.clone() - sphere_term.clone()),
                ("fixed central (-2)-sphere".to_string(), sphere_term),
                ("defect lower bound".to_string(), rhs.clone()),
            ];
            let narrative = format!(
                "a 4-leaf star with fixed center would need -16(p-1) to dominate \
                 4*I(p,-2) - (2/3)(p^2-1) at p = {pv}"
            );
            Ok(ScenarioReport::conclude(
                format!("example-3.10/dtilde4-p{pv}"),
                vec![("p".into(), pv.to_string()), ("sign".into(), sign.to_string())],
                ledger,
                lhs,
                rhs,
                Relation::GreaterEq,
                Verdict::Contradiction,
                narrative,
            ))
        }
    }
}

/// One prime of a feasibility sweep, annotated with its residue classes.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimeScanRow {
    pub p: u64,
    pub mod4: u64,
    pub mod6: u64,
    pub report: FeasibilityReport,
}

impl PrimeScanRow {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "p": self.p,
            "p_mod_4": self.mod4,
            "p_mod_6": self.mod6,
            "report": self.report.to_json(),
        })
    }
}

/// Run the census feasibility solver over every prime up to `p_max`.
pub fn scan_primes(p_max: u64, sign: i64) -> Result<Vec<PrimeScanRow>> {
    if p_max > 1000 {
        return Err(Error::BoundExceeded(format!("prime sweep bounded by 1000, got {p_max}")));
    }
    let invariants = ManifoldInvariants::new(sign, 0, 2, true)?;
    if invariants.euler < 0 {
        return Err(Error::InvalidInput(format!(
            "sign = {sign} gives negative chi = {}",
            invariants.euler
        )));
    }
    primes_up_to(p_max)
        .into_iter()
        .map(|pv| {
            let p = PrimeOrder::new(pv)?;
            Ok(PrimeScanRow {
                p: pv,
                mod4: pv % 4,
                mod6: pv % 6,
                report: gsig::feasibility_solver(p, &invariants)?,
            })
        })
        .collect()
}

/// One line of the invariant quick-suite.
#[derive(Debug, Clone)]
pub struct SuiteLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn line(name: &str, pass: bool, detail: String) -> SuiteLine {
    SuiteLine { name: name.to_string(), pass, detail }
}

struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }
}

/// A fast, deterministic sample of the crate's cross-route invariants.
pub fn quick_suite() -> Vec<SuiteLine> {
    let mut out = Vec::new();
    let p = |n: u64| PrimeOrder::new(n).unwrap();

    // pinned defect table
    {
        let vals: Vec<Rational> =
            [-1i64, 1, 2, 3].iter().map(|&q| defects::defect_point(p(5), q).unwrap()).collect();
        let expect = vec![int(4), int(-4), int(0), int(0)];
        out.push(line(
            "defect-table",
            vals == expect,
            format!("I(5, -1|1|2|3) = {}", vals.iter().map(format_rational).collect::<Vec<_>>().join(", ")),
        ));
    }

    // three-path agreement on a deterministic sample
    {
        let primes = primes_up_to(499);
        let mut rng = Lcg(0x5eed);
        let mut pass = true;
        for _ in 0..60 {
            let pv = primes[(rng.next() as usize) % primes.len()];
            let q = (rng.next() % (pv - 1) + 1) as i64;
            if !defects::ThreePathDefect::compute(p(pv), q).unwrap().agree() {
                pass = false;
                break;
            }
        }
        out.push(line("three-path-agreement", pass, "60 sampled (p, q), p <= 499".into()));
    }

    // antisymmetry, periodicity, inverse invariance
    {
        let primes = primes_up_to(199);
        let mut rng = Lcg(0xabcdef);
        let mut pass = true;
        for _ in 0..40 {
            let pv = primes[(rng.next() as usize) % primes.len()];
            let pr = p(pv);
            let q = (rng.next() % (pv - 1) + 1) as i64;
            let a = defects::defect_point(pr, q).unwrap();
            pass &= a.clone() + defects::defect_point(pr, -q).unwrap() == int(0);
            pass &= a == defects::defect_point(pr, q + pr.as_i64()).unwrap();
            if pv > 2 {
                let qinv = crate::arith::mod_inverse(q as u64, pr).unwrap() as i64;
                pass &= a == defects::defect_point(pr, qinv).unwrap();
            }
        }
        out.push(line("defect-symmetries", pass, "40 sampled (p, q), p <= 199".into()));
    }

    // group-defect table, both routes
    {
        let mut pass = true;
        for pv in primes_up_to(199) {
            let pr = p(pv);
            for ty in GroupType::ALL {
                if !ty.admissible(pr) {
                    continue;
                }
                pass &= defects::group_defect(ty, pr).unwrap()
                    == defects::group_defect_closed_form(ty, pr).unwrap();
            }
        }
        out.push(line("group-defect-table", pass, "point-sum route == closed form, p <= 199".into()));
    }

    // floor-square closed forms
    {
        let mut pass = true;
        for pv in primes_up_to(199) {
            if pv < 3 {
                continue;
            }
            let pr = p(pv);
            let fss = |q: i64| defects::floor_square_sum(q, pr).unwrap();
            let r4 = (pv / 4) as i64;
            if pv % 4 == 1 {
                pass &= fss(-4) == crate::arith::big(30 * r4);
            } else {
                pass &= fss(-4) == crate::arith::big(30 * r4 + 13);
            }
            if pv > 3 {
                let r6 = (pv / 6) as i64;
                if pv % 6 == 1 {
                    pass &= fss(-6) == crate::arith::big(91 * r6);
                    pass &= fss((pv as i64 + 3) / 2)
                        == crate::arith::big(r6 * (18 * r6 * r6 + 13 * r6 + 3));
                } else {
                    pass &= fss(-6) == crate::arith::big(91 * r6 + 54);
                    pass &= fss((pv as i64 + 3) / 2)
                        == crate::arith::big((r6 + 1) * (18 * r6 * r6 + 31 * r6 + 14));
                }
                let r3 = (pv / 3) as i64;
                if pv % 3 == 1 {
                    pass &= fss(-3) == crate::arith::big(14 * r3);
                } else {
                    pass &= fss(-3) == crate::arith::big(14 * r3 + 4);
                }
            }
        }
        out.push(line("floor-square-closed-forms", pass, "q in {-3, -4, -6, (p+3)/2}, p <= 199".into()));
    }

    // slack bounds drive the census rigidity
    {
        let mut pass = true;
        for pv in primes_up_to(199) {
            if pv <= 3 {
                continue;
            }
            let pr = p(pv);
            for ty in gsig::admissible_types(pr) {
                let slack = defects::group_defect(ty, pr).unwrap()
                    + ratio(2 * ty.points() as i64, 3) * int(pr.as_i64() - 1);
                pass &= slack >= int(0);
                if ty == GroupType::Type1 {
                    pass &= slack > int(0);
                }
            }
        }
        out.push(line("slack-bounds", pass, "def_(k) + (2k/3)(p-1) >= 0, p <= 199".into()));
    }

    // component data passes the sphere congruence with integral dimension
    {
        use crate::localrep::{component_fixed_data, rotation_congruence, virtual_dim, ComponentType};
        let mut pass = true;
        for pv in primes_up_to(97) {
            let pr = p(pv);
            for ty in ComponentType::ALL {
                if !ty.admissible(pr) {
                    continue;
                }
                for d in component_fixed_data(ty, pr).unwrap() {
                    for s in &d.spheres {
                        let pairs = d.sphere_pairs(s);
                        pass &= rotation_congruence(&pairs, pr, 0).unwrap();
                        pass &= virtual_dim(&pairs, pr, 0).unwrap().is_integer();
                    }
                }
            }
        }
        out.push(line("component-congruences", pass, "all component types, p <= 97".into()));
    }

    // component tables match the census group shapes after normalization
    {
        use crate::localrep::{component_fixed_data, ComponentType};
        let mut pass = true;
        for pv in primes_up_to(97) {
            let pr = p(pv);
            let mut check = |ct: ComponentType, gt: GroupType| {
                let comp = &component_fixed_data(ct, pr).unwrap()[0];
                let mut got: Vec<u64> = comp
                    .points
                    .iter()
                    .map(|pt| pt.rep(pr).unwrap().normalized().q())
                    .collect();
                let census = {
                    let mut c = GroupCensus::default();
                    c.set(gt, 1);
                    c
                };
                let mut want: Vec<u64> = census
                    .expand(pr)
                    .unwrap()
                    .isolated
                    .iter()
                    .map(|r| r.normalized().q())
                    .collect();
                got.sort_unstable();
                want.sort_unstable();
                pass &= got == want;
            };
            if pv >= 7 {
                check(ComponentType::II, GroupType::Type2);
            }
            if pv >= 5 {
                check(ComponentType::IV, GroupType::Type3);
                check(ComponentType::VTriple, GroupType::Type4);
            }
            check(ComponentType::III, GroupType::Type1);
            if pv == 5 {
                // the cusp component degenerates to two SL2-type points
                let comp = &component_fixed_data(ComponentType::II, pr).unwrap()[0];
                pass &= comp
                    .points
                    .iter()
                    .all(|pt| crate::localrep::sl2_check(&pt.rep(pr).unwrap()));
            }
        }
        out.push(line("component-census-crosscheck", pass, "component tables vs census groups, p <= 97".into()));
    }

    // plumbing congruences
    {
        use crate::plumbing;
        let mut pass = true;
        for pv in primes_up_to(47) {
            let pr = p(pv);
            for n in 4..=60u64 {
                pass &= plumbing::dtilde_congruence(n, pr).unwrap() == (n % pv == 4 % pv);
            }
        }
        for pv in [5u64, 7] {
            let pr = p(pv);
            for k in 1..=4 * pv {
                for s in plumbing::atilde_rotation_sequences(pr, k).unwrap() {
                    pass &= s.iter().all(|&m| m == pv - 1);
                }
            }
        }
        out.push(line("plumbing-congruences", pass, "chain recursion vs closed forms".into()));
    }

    // affine recognition on the named families and nearby rejections
    {
        use crate::plumbing::{classify, classify_by_shape, GraphKind, PlumbingGraph};
        let mut pass = true;
        for k in 2..=8 {
            let g = PlumbingGraph::cycle(k).unwrap();
            pass &= classify(&g).unwrap().kind == GraphKind::ATilde(k - 1);
        }
        for n in 4..=8 {
            let g = PlumbingGraph::dtilde_graph(n).unwrap();
            let c = classify(&g).unwrap();
            pass &= c.kind == GraphKind::DTilde(n);
            pass &= classify_by_shape(&g).unwrap() == c;
        }
        for which in [6u8, 7, 8] {
            let g = PlumbingGraph::etilde_graph(which).unwrap();
            pass &= classify(&g).unwrap().is_affine();
        }
        for k in 2..=8 {
            let g = PlumbingGraph::from_edges(k, &(0..k - 1).map(|v| (v, v + 1)).collect::<Vec<_>>())
                .unwrap();
            pass &= !classify(&g).unwrap().is_affine();
        }
        out.push(line("affine-recognition", pass, "named families accepted, finite chains rejected".into()));
    }

    // realizability check of the order-5 census
    {
        let pr = p(5);
        let good = GroupCensus { type3: 8, ..Default::default() };
        let bad = GroupCensus { type3: 7, ..Default::default() };
        let pass = gsig::gsf_check(pr, &good, -16).unwrap() && !gsig::gsf_check(pr, &bad, -16).unwrap();
        out.push(line("census-realizability", pass, "order-5 census accepted, off-by-one rejected".into()));
    }

    out
}

/// The full reproduction run: every scenario, the census sweep, and the
/// invariant quick-suite, as one deterministic list of pass/fail lines.
pub fn reproduce_all() -> Vec<SuiteLine> {
    let mut out = Vec::new();

    // rigidity contradiction across a default prime list
    {
        let mut pass = true;
        let mut worst = String::new();
        for pv in primes_up_to(97) {
            let r = theorem_a(PrimeOrder::new(pv).unwrap(), -16).unwrap();
            if !r.reproduced() {
                pass = false;
                worst = r.scenario_id.clone();
            }
        }
        out.push(line(
            "theorem-a",
            pass,
            if pass { "contradiction reproduced for every prime p <= 97".into() } else { worst },
        ));
    }

    // census realizability examples, including the broken control
    for variant in [
        Example39Variant::P5,
        Example39Variant::P7Type2,
        Example39Variant::P7Type4,
        Example39Variant::P5Broken,
    ] {
        let r = example_39(variant).unwrap();
        out.push(line(
            &format!("example-3.9/{}", variant.label()),
            r.reproduced(),
            r.verdict_line(),
        ));
    }

    // the non-pseudofree case arithmetic
    for case in [Example310Case::P2, Example310Case::P3, Example310Case::P5Atilde4] {
        let r = example_310(case).unwrap();
        out.push(line(&format!("example-3.10/{}", case.label()), r.reproduced(), r.verdict_line()));
    }
    {
        let mut pass = true;
        for pv in primes_up_to(97) {
            pass &= example_310(Example310Case::Dtilde4(pv)).unwrap().reproduced();
        }
        out.push(line(
            "example-3.10/dtilde4",
            pass,
            "4-leaf-star bound fails for every prime p <= 97".into(),
        ));
    }

    // the census sweep and its residue-class reading
    {
        let rows = scan_primes(200, -16).unwrap();
        let residue_ok = rows
            .iter()
            .filter(|r| r.mod4 != 1 && r.mod6 != 1)
            .all(|r| r.report.forced_trivial);
        out.push(line(
            "scan/forced-residues",
            residue_ok,
            "p != 1 mod 4 and p != 1 mod 6 always forced trivial, p <= 200".into(),
        ));
        let p5 = rows.iter().find(|r| r.p == 5).unwrap();
        let p5_ok = !p5.report.forced_trivial
            && p5.report.solutions == vec![GroupCensus { type3: 8, ..Default::default() }];
        out.push(line("scan/p5-census", p5_ok, "p = 5 admits exactly the (0,0,8,0) census".into()));
        let no_sl2 = rows
            .iter()
            .all(|r| r.report.solutions.iter().all(|s| s.type1 == 0));
        out.push(line("scan/no-sl2-groups", no_sl2, "no solution uses an SL2-type group".into()));
    }

    out.extend(quick_suite());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> PrimeOrder {
        PrimeOrder::new(n).unwrap()
    }

    #[test]
    fn theorem_a_examples() {
        let r = theorem_a(p(5), -16).unwrap();
        assert_eq!(r.verdict, Verdict::Contradiction);
        assert_eq!(r.lhs, int(4));
        assert_eq!(r.rhs, ratio(-8, 3));
        assert!(r.reproduced());

        let r = theorem_a(p(2), -16).unwrap();
        assert_eq!(r.lhs, int(0));
        assert_eq!(r.rhs, ratio(-2, 3));
        assert_eq!(r.verdict, Verdict::Contradiction);

        let r = theorem_a(p(7), -16).unwrap();
        assert_eq!(r.lhs, int(10));
        assert_eq!(r.rhs, int(-4));

        assert!(theorem_a(p(5), 0).is_err());
        assert!(theorem_a(p(5), 3).is_err());
        assert!(theorem_a(p(5), 16).is_err());
    }

    #[test]
    fn example_39_variants() {
        let r = example_39(Example39Variant::P5).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert_eq!(r.lhs, int(-64));
        assert!(r.ledger.iter().any(|(t, v)| t.contains("def_(3)") && v == &int(-8)));
        assert!(r
            .ledger
            .iter()
            .any(|(t, v)| t.contains("per-element") && v == &int(-16)));
        assert!(r.reproduced());

        let r = example_39(Example39Variant::P7Type4).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert_eq!(r.lhs, int(-96));

        let r = example_39(Example39Variant::P7Type2).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);

        let r = example_39(Example39Variant::P5Broken).unwrap();
        assert_eq!(r.verdict, Verdict::Contradiction);
        assert!(r.reproduced());
    }

    #[test]
    fn example_310_cases() {
        let r = example_310(Example310Case::P5Atilde4).unwrap();
        assert_eq!(r.lhs, int(-64));
        assert_eq!(r.rhs, int(56));
        assert_eq!(r.verdict, Verdict::Contradiction);
        assert_eq!(r.verdict_line(), "LHS -64 != RHS 56: CONTRADICTION");

        let r = example_310(Example310Case::P3).unwrap();
        assert_eq!(r.lhs, int(-32));
        assert_eq!(r.rhs, ratio(-80, 3));
        assert_eq!(r.verdict, Verdict::Contradiction);

        let r = example_310(Example310Case::P2).unwrap();
        assert_eq!(r.lhs, int(-16));
        assert_eq!(r.rhs, int(-6));
        assert_eq!(r.verdict, Verdict::Contradiction);

        let r = example_310(Example310Case::Dtilde4(7)).unwrap();
        assert_eq!(r.lhs, int(-96));
        assert_eq!(r.rhs, int(-24));
        assert_eq!(r.verdict, Verdict::Contradiction);

        // the ledger pins I(p,-2) = (p-1)(p-5)/6
        assert!(r.ledger.iter().any(|(t, v)| t.contains("q = -2") && v == &int(2)));
    }

    #[test]
    fn scan_examples() {
        let rows = scan_primes(50, -16).unwrap();
        let forced: Vec<u64> =
            rows.iter().filter(|r| r.report.forced_trivial).map(|r| r.p).collect();
        for expected in [2u64, 3, 11, 23, 47] {
            assert!(forced.contains(&expected), "p={expected} should be forced");
        }
        let p5 = rows.iter().find(|r| r.p == 5).unwrap();
        assert!(!p5.report.forced_trivial);
        assert_eq!(
            p5.report.solutions,
            vec![GroupCensus { type3: 8, ..Default::default() }]
        );

        let rows = scan_primes(50, 0).unwrap();
        assert!(rows.iter().all(|r| !r.report.forced_trivial));

        assert!(scan_primes(2000, -16).is_err());
        assert!(scan_primes(50, 2).is_err());
    }

    #[test]
    fn scan_matches_residue_prediction() {
        for row in scan_primes(199, -16).unwrap() {
            if row.mod4 != 1 && row.mod6 != 1 {
                assert!(row.report.forced_trivial, "p={}", row.p);
            }
            for sol in &row.report.solutions {
                // no SL2-type groups, and the verdict survives recomputation
                // through the expanded signature residual
                assert_eq!(sol.type1, 0, "p={}", row.p);
                let pr = PrimeOrder::new(row.p).unwrap();
                let data = sol.expand(pr).unwrap();
                assert_eq!(gsig::gsig_residual(pr, -16, -16, &data).unwrap(), int(0));
            }
        }
    }

    #[test]
    fn quick_suite_is_green() {
        for l in quick_suite() {
            assert!(l.pass, "{}: {}", l.name, l.detail);
        }
    }

    #[test]
    fn report_serialization() {
        let r = example_310(Example310Case::P5Atilde4).unwrap();
        let text = r.to_text();
        assert!(text.ends_with("LHS -64 != RHS 56: CONTRADICTION\n"));
        let v = r.to_json();
        assert_eq!(v["lhs"], "-64");
        assert_eq!(v["rhs"], "56");
        assert_eq!(v["reproduced"], true);
        // round trip: parse back and recompute
        let parsed: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(parsed, v);
    }
}
