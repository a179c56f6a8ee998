//! Command-line front end: every library operation behind deterministic
//! text/JSON output, plus the full reproduction run.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use sigdefect::arith::{format_rational, PrimeOrder};
use sigdefect::defects::{self, GroupType, ThreePathDefect};
use sigdefect::gsig::{self, datafile, ManifoldInvariants};
use sigdefect::localrep::{self, ComponentType};
use sigdefect::plumbing::{self, PlumbingGraph};
use sigdefect::scenarios::{self, Example310Case, Example39Variant, SuiteLine};

#[derive(Parser)]
#[command(
    name = "sigdefect",
    version,
    about = "Exact signature defects, fixed-point censuses and plumbing graphs of prime-order symmetries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Point defect I(p, q) of a local representation (k, kq)
    Defect {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also run the Dedekind and cotangent routes and report agreement
        #[arg(long)]
        verify: bool,
    },
    /// Dedekind sum s(q, p)
    Dedekind {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Total defect of one fixed-point group (types 1-4 or 3-special)
    GroupDefect {
        #[arg(long = "type")]
        group_type: String,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Signature residual of a fixed-point data file
    Residual {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        sign_m: i64,
        /// Quotient signature; defaults to sign-m (homologically trivial)
        #[arg(long, allow_hyphen_values = true)]
        sign_mg: Option<i64>,
        /// Fixed-point data file, `-` for stdin
        #[arg(long)]
        data: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate all group censuses compatible with the invariants
    Solve {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        sign: i64,
        #[arg(long, default_value_t = 2)]
        b2_plus: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the census solver over every prime up to a bound
    Scan {
        #[arg(long)]
        p_max: u64,
        #[arg(long, allow_hyphen_values = true)]
        sign: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Recognize the affine family of a (-2)-sphere configuration
    Classify {
        /// Edge-list file, `-` for stdin
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Emit a graph as DOT (and optionally its Q matrix)
    Plumb {
        /// Edge-list file, `-` for stdin
        #[arg(long)]
        graph: String,
        /// Print the Q matrix instead of DOT
        #[arg(long)]
        q_matrix: bool,
    },
    /// Tabulated fixed-point data of one component type
    ComponentData {
        #[arg(long)]
        component: String,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Replay one numerical argument; exits 0 iff its verdict is reproduced
    Scenario {
        /// One of: theorem-a, example-3.9, example-3.10
        name: String,
        /// Case tag (example-3.9: p5 | p7-type2 | p7-type4 | p5-broken;
        /// example-3.10: p2 | p3 | p5-atilde4 | dtilde4)
        #[arg(long)]
        case: Option<String>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, allow_hyphen_values = true, default_value_t = -16)]
        sign: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run every scenario, the prime sweep and the invariant quick-suite
    ReproduceAll {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn read_input(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Defect { p, q, format, verify } => {
            let p = PrimeOrder::new(p)?;
            let value = defects::defect_point(p, q)?;
            match format {
                Format::Json => {
                    let mut v = json!({
                        "p": p.get(),
                        "q": q,
                        "value": format_rational(&value),
                    });
                    if verify {
                        let three = ThreePathDefect::compute(p, q)?;
                        v["agreement"] = json!(three.agree());
                        v["oracle"] = json!(three.oracle);
                    }
                    println!("{v}");
                }
                Format::Text => {
                    println!("I({},{}) = {}", p.get(), q, format_rational(&value));
                    if verify {
                        let three = ThreePathDefect::compute(p, q)?;
                        println!("dedekind route = {}", format_rational(&three.via_dedekind));
                        println!("cotangent oracle = {:.9}", three.oracle);
                        println!("agreement: {}", if three.agree() { "ok" } else { "MISMATCH" });
                    }
                }
            }
        }
        Command::Dedekind { p, q, format } => {
            let p = PrimeOrder::new(p)?;
            let value = defects::dedekind_sum(q, p)?;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({ "p": p.get(), "q": q, "value": format_rational(&value) })
                ),
                Format::Text => println!("s({},{}) = {}", q, p.get(), format_rational(&value)),
            }
        }
        Command::GroupDefect { group_type, p, format } => {
            let p = PrimeOrder::new(p)?;
            let ty = GroupType::parse(&group_type)?;
            let value = defects::group_defect(ty, p)?;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({ "p": p.get(), "type": ty.label(), "value": format_rational(&value) })
                ),
                Format::Text => {
                    println!("def_({}) at p = {} is {}", ty.label(), p.get(), format_rational(&value))
                }
            }
        }
        Command::Residual { p, sign_m, sign_mg, data, format } => {
            let p = PrimeOrder::new(p)?;
            let text = read_input(&data)?;
            let (file_p, parsed) = datafile::parse(&text)?;
            if file_p != p {
                anyhow::bail!("data file is for p = {}, requested p = {}", file_p.get(), p.get());
            }
            let sign_mg = sign_mg.unwrap_or(sign_m);
            let residual = gsig::gsig_residual(p, sign_m, sign_mg, &parsed)?;
            let consistent = residual == sigdefect::arith::int(0);
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": "sigdefect/residual/v1",
                        "p": p.get(),
                        "sign_m": sign_m,
                        "sign_mg": sign_mg,
                        "points": parsed.isolated.len(),
                        "surfaces": parsed.surfaces.len(),
                        "residual": format_rational(&residual),
                        "consistent": consistent,
                    })
                ),
                Format::Text => {
                    println!(
                        "{} isolated points, {} fixed surfaces at p = {}",
                        parsed.isolated.len(),
                        parsed.surfaces.len(),
                        p.get()
                    );
                    println!("residual = {}", format_rational(&residual));
                    println!("{}", if consistent { "CONSISTENT" } else { "INCONSISTENT" });
                }
            }
        }
        Command::Solve { p, sign, b2_plus, format } => {
            let p = PrimeOrder::new(p)?;
            let invariants = ManifoldInvariants::new(sign, 0, b2_plus, true)?;
            let report = gsig::feasibility_solver(p, &invariants)?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", render_feasibility(&report)),
            }
        }
        Command::Scan { p_max, sign, format } => {
            let rows = scenarios::scan_primes(p_max, sign)?;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": "sigdefect/scan/v1",
                        "p_max": p_max,
                        "sign": sign,
                        "rows": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                    })
                ),
                Format::Text => {
                    println!("{:>5} {:>6} {:>6} {:>10} {:>9}", "p", "p%4", "p%6", "solutions", "forced");
                    for r in &rows {
                        println!(
                            "{:>5} {:>6} {:>6} {:>10} {:>9}",
                            r.p,
                            r.mod4,
                            r.mod6,
                            r.report.solutions.len(),
                            if r.report.forced_trivial { "trivial" } else { "-" }
                        );
                    }
                }
            }
        }
        Command::Classify { graph, format } => {
            let text = read_input(&graph)?;
            if text.trim().is_empty() {
                eprintln!("usage error: empty graph input");
                return Ok(ExitCode::from(2));
            }
            let g = PlumbingGraph::parse(&text)?;
            let class = plumbing::classify(&g)?;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "kind": class.kind.to_string(),
                        "multiplicities": class.multiplicities,
                    })
                ),
                Format::Text => match &class.multiplicities {
                    Some(marks) => println!("{} with multiplicities {:?}", class.kind, marks),
                    None => println!("{}", class.kind),
                },
            }
        }
        Command::Plumb { graph, q_matrix } => {
            let text = read_input(&graph)?;
            if text.trim().is_empty() {
                eprintln!("usage error: empty graph input");
                return Ok(ExitCode::from(2));
            }
            let g = PlumbingGraph::parse(&text)?;
            if q_matrix {
                let q = plumbing::q_matrix(&g)?;
                for row in &q.0 {
                    let cells: Vec<String> = row.iter().map(format_rational).collect();
                    println!("[{}]", cells.join(", "));
                }
            } else {
                print!("{}", g.to_dot());
            }
        }
        Command::ComponentData { component, p, format } => {
            let p = PrimeOrder::new(p)?;
            let ty = ComponentType::parse(&component)?;
            let variants = localrep::component_fixed_data(ty, p)?;
            match format {
                Format::Json => {
                    let vs: Vec<serde_json::Value> = variants
                        .iter()
                        .map(|d| {
                            json!({
                                "surfaces": d.fixed_surfaces.iter()
                                    .map(|s| json!({"genus": s.genus, "self_intersection": s.self_intersection}))
                                    .collect::<Vec<_>>(),
                                "points": d.points.iter().map(|pt| json!({
                                    "label": pt.label,
                                    "pairs": pt.pairs.iter().map(|pr| json!([pr.m1(), pr.m2()])).collect::<Vec<_>>(),
                                    "rep_q": pt.rep(p).map(|r| r.q()).ok(),
                                })).collect::<Vec<_>>(),
                                "spheres": d.spheres.iter().map(|s| json!({
                                    "label": s.label,
                                    "points": s.points,
                                })).collect::<Vec<_>>(),
                                "notes": d.notes,
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        json!({
                            "schema": "sigdefect/component/v1",
                            "component": ty.label(),
                            "p": p.get(),
                            "variants": vs,
                        })
                    );
                }
                Format::Text => {
                    for (i, d) in variants.iter().enumerate() {
                        if variants.len() > 1 {
                            println!("variant {}:", i + 1);
                        }
                        for s in &d.fixed_surfaces {
                            println!("surface genus {} self-intersection {}", s.genus, s.self_intersection);
                        }
                        for pt in &d.points {
                            let pairs: Vec<String> =
                                pt.pairs.iter().map(|pr| pr.to_string()).collect();
                            let rep = pt
                                .rep(p)
                                .map(|r| format!(" -> rep (1,{})", r.q()))
                                .unwrap_or_default();
                            println!("point {}: pairs {}{}", pt.label, pairs.join(" "), rep);
                        }
                        for s in &d.spheres {
                            println!("sphere {}: fixed points {:?}", s.label, s.points);
                        }
                        for n in &d.notes {
                            println!("note: {n}");
                        }
                    }
                }
            }
        }
        Command::Scenario { name, case, p, sign, format } => {
            let report = match name.as_str() {
                "theorem-a" => {
                    let p = PrimeOrder::new(p.unwrap_or(5))?;
                    scenarios::theorem_a(p, sign)?
                }
                "example-3.9" => {
                    let variant = Example39Variant::parse(case.as_deref().unwrap_or("p5"))?;
                    scenarios::example_39(variant)?
                }
                "example-3.10" => {
                    let case = case.as_deref().unwrap_or("p5-atilde4");
                    let case = match case {
                        "p2" => Example310Case::P2,
                        "p3" => Example310Case::P3,
                        "p5-atilde4" => Example310Case::P5Atilde4,
                        "dtilde4" => Example310Case::Dtilde4(p.unwrap_or(5)),
                        other => anyhow::bail!("unknown case `{other}`"),
                    };
                    scenarios::example_310(case)?
                }
                other => anyhow::bail!("unknown scenario `{other}`"),
            };
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            if !report.reproduced() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::ReproduceAll { format } => {
            let lines = scenarios::reproduce_all();
            let failures = lines.iter().filter(|l| !l.pass).count();
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": "sigdefect/reproduce/v1",
                        "checks": lines.iter().map(|l| json!({
                            "name": l.name, "pass": l.pass, "detail": l.detail,
                        })).collect::<Vec<_>>(),
                        "failures": failures,
                    })
                ),
                Format::Text => {
                    print!("{}", render_suite(&lines));
                }
            }
            if failures > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn render_suite(lines: &[SuiteLine]) -> String {
    let mut out = String::new();
    let width = lines.iter().map(|l| l.name.len()).max().unwrap_or(0);
    for l in lines {
        out.push_str(&format!(
            "{} {:width$}  {}\n",
            if l.pass { "ok  " } else { "FAIL" },
            l.name,
            l.detail,
        ));
    }
    let failures = lines.iter().filter(|l| !l.pass).count();
    out.push_str(&format!("{} checks, {} failures\n", lines.len(), failures));
    out
}

fn render_feasibility(report: &gsig::FeasibilityReport) -> String {
    let mut out = format!(
        "p = {}, chi = {}, sign = {}\n",
        report.p.get(),
        report.chi,
        report.sign
    );
    out.push_str("slack per group type:\n");
    for (ty, s) in &report.slack {
        out.push_str(&format!("  type {}: {}\n", ty.label(), format_rational(s)));
    }
    if report.solutions.is_empty() {
        out.push_str("no census satisfies both constraints\n");
    } else {
        out.push_str("solutions (delta_1, delta_2, delta_3, delta_4):\n");
        for c in &report.solutions {
            out.push_str(&format!("  {:?}", c.as_array4()));
            if c.three_special > 0 {
                out.push_str(&format!(" + {} scalar triples", c.three_special));
            }
            out.push('\n');
        }
    }
    out.push_str(&format!("forced_trivial: {}\n", report.forced_trivial));
    out
}
