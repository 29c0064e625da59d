use std::process::ExitCode;

use alladi_core::enumeration::{count, EnumerationQuery};
use alladi_core::factorization::{generic_factorization, refined_factorization, render_factors};
use alladi_core::maps::{self, DomainIndex};
use alladi_core::poly::{
    count_series, d_n, eq4_sides, eq5_sides, eq6_sides, truncated_product_eq2, PolyCache,
};
use alladi_core::trace::{f_trace, trace_result};
use alladi_core::verify::{run_all, run_suite, SuiteReport};
use alladi_core::{ClassKind, Error, Orientation, Partition};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "alladi",
    version,
    about = "Apply, invert and verify the Schur-to-Alladi partition bijection"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply one map to a partition.
    Map {
        map: MapVerb,
        partition: String,
        /// m of the intended domain (required by inverses of grouping maps).
        #[arg(long)]
        m: Option<u32>,
        /// Sum of the intended domain (required by inverses of grouping maps).
        #[arg(long)]
        n: Option<u32>,
    },
    /// Generic or refined factorization of a Schur partition.
    Factorize {
        partition: String,
        #[arg(long, value_enum)]
        orientation: OrientationArg,
        #[arg(long)]
        refined: bool,
    },
    /// The 2-modular graph trace of f.
    Trace {
        partition: String,
        /// Run every step instead of stopping once the state is in D and C.
        #[arg(long)]
        full: bool,
    },
    /// Count partitions in a class.
    Count {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_enum, default_value = "schur")]
        class: ClassArg,
        #[arg(long)]
        g: Option<u8>,
        #[arg(long = "max-part")]
        max_part: Option<u32>,
    },
    /// Print d_N or check a recurrence at N.
    Poly {
        #[arg(long = "N", allow_hyphen_values = true)]
        big_n: i64,
        #[arg(long, value_enum)]
        check: Option<CheckArg>,
        /// q-degree bound for the truncated product check.
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "max-n", default_value_t = 40)]
        max_n: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapVerb {
    #[value(name = "f")]
    F,
    #[value(name = "f-inverse")]
    FInverse,
    #[value(name = "phi")]
    Phi,
    #[value(name = "phi-inverse")]
    PhiInverse,
    #[value(name = "phi-prime")]
    PhiPrime,
    #[value(name = "phi-prime-inverse")]
    PhiPrimeInverse,
    #[value(name = "psi")]
    Psi,
    #[value(name = "schur-lift")]
    SchurLift,
    #[value(name = "G")]
    G,
    #[value(name = "G-inverse")]
    GInverse,
    #[value(name = "G-prime")]
    GPrime,
    #[value(name = "G-prime-inverse")]
    GPrimeInverse,
    #[value(name = "alladi-reduce")]
    AlladiReduce,
    #[value(name = "alladi-lift")]
    AlladiLift,
    #[value(name = "rho")]
    Rho,
    #[value(name = "rho-inverse")]
    RhoInverse,
    #[value(name = "r")]
    R,
}

impl MapVerb {
    fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }

    /// Inverses of grouping maps have no context-free meaning.
    fn needs_domain(self) -> bool {
        matches!(
            self,
            MapVerb::PhiInverse
                | MapVerb::PhiPrimeInverse
                | MapVerb::GInverse
                | MapVerb::GPrimeInverse
        )
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrientationArg {
    Upper,
    Lower,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Schur,
    Alladi,
    SchurStar,
    AlladiStar,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Eq2,
    Eq4,
    Eq5,
    Eq6,
}

/// A command's result: text and JSON renderings plus whether every checked
/// identity held.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            ok: true,
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Domain(other),
        }
    }
}

fn parse(text: &str) -> Result<Partition, Failure> {
    Ok(text.parse::<Partition>()?)
}

fn partition_json(p: &Partition) -> Value {
    json!({ "partition": p.to_string(), "parts": p.parts(), "m": p.m_statistic(), "n": p.sigma() })
}

fn run_map(
    verb: MapVerb,
    input: &Partition,
    m: Option<u32>,
    n: Option<u32>,
) -> Result<Output, Failure> {
    let domain = match (m, n) {
        (Some(m), Some(n)) => Some(DomainIndex::new(m, n)),
        (None, None) => None,
        _ => return Err(Failure::Usage("--m and --n must be given together".into())),
    };
    if verb.needs_domain() && domain.is_none() {
        return Err(Failure::Usage(format!(
            "map {} needs the intended domain: pass --m M --n N",
            verb.name()
        )));
    }
    let target = domain.unwrap_or(DomainIndex::of(input));
    let mut g = None;
    let output = match verb {
        MapVerb::F => maps::f(input)?,
        MapVerb::FInverse => maps::f_inverse(input)?,
        MapVerb::Phi => maps::phi(input)?,
        MapVerb::PhiInverse => maps::phi_inverse(input, target)?,
        MapVerb::PhiPrime => maps::phi_prime(input)?,
        MapVerb::PhiPrimeInverse => maps::phi_prime_inverse(input, target)?,
        MapVerb::Psi => maps::schur_reduce(input)?,
        MapVerb::SchurLift => maps::schur_lift(input)?,
        MapVerb::G => {
            let r = maps::grouping(input)?;
            g = Some(r.g);
            r.image
        }
        MapVerb::GInverse => maps::grouping_inverse(input, target)?,
        MapVerb::GPrime => {
            let r = maps::alladi_grouping(input)?;
            g = Some(r.g);
            r.image
        }
        MapVerb::GPrimeInverse => maps::alladi_grouping_inverse(input, target)?,
        MapVerb::AlladiReduce => maps::alladi_reduce(input)?,
        MapVerb::AlladiLift => maps::alladi_lift(input)?,
        MapVerb::Rho => maps::rho(input)?,
        MapVerb::RhoInverse => maps::rho_inverse(input)?,
        MapVerb::R => maps::add_two(input),
    };
    // for inverses that do not need a domain, a given one must match
    if let Some(d) = domain {
        if !verb.needs_domain() && DomainIndex::of(&output) != d {
            return Err(Failure::Domain(Error::Domain {
                partition: output,
                m: d.m,
                n: d.n,
                reason: format!("map {} does not land in the requested domain", verb.name()),
            }));
        }
    }
    let mut value = json!({
        "map": verb.name(),
        "input": partition_json(input),
        "output": partition_json(&output),
    });
    if let Some(g) = g {
        value["g"] = json!(g);
    }
    Ok(Output::new(output.to_string(), value))
}

fn run_factorize(
    p: &Partition,
    orientation: Orientation,
    refined: bool,
) -> Result<Output, Failure> {
    if refined {
        let r = refined_factorization(p, orientation)?;
        let text = r.render();
        Ok(Output::new(
            text.clone(),
            json!({ "orientation": orientation.name(), "refined": true, "render": text, "factors": r.factors }),
        ))
    } else {
        let factors = generic_factorization(p, orientation)?;
        let text = render_factors(&factors);
        Ok(Output::new(
            text.clone(),
            json!({ "orientation": orientation.name(), "refined": false, "render": text, "factors": factors }),
        ))
    }
}

fn run_trace(p: &Partition, full: bool) -> Result<Output, Failure> {
    let steps = f_trace(p, !full)?;
    let result = trace_result(&steps)?;
    let mut text: Vec<String> = steps.iter().map(|s| s.render()).collect();
    text.push(format!("result {result}"));
    Ok(Output::new(
        text.join("\n\n"),
        json!({ "steps": steps, "result": partition_json(&result) }),
    ))
}

fn run_count(
    n: u32,
    m: Option<u32>,
    class: ClassArg,
    g: Option<u8>,
    max_part: Option<u32>,
) -> Result<Output, Failure> {
    let kind = match class {
        ClassArg::Schur => ClassKind::Schur,
        ClassArg::Alladi => ClassKind::Alladi,
        ClassArg::SchurStar => ClassKind::SchurStar,
        ClassArg::AlladiStar => ClassKind::AlladiStar,
    };
    if g.is_some_and(|g| g > 2) {
        return Err(Failure::Usage("--g must be 0, 1 or 2".into()));
    }
    if max_part == Some(0) {
        return Err(Failure::Usage("--max-part must be positive".into()));
    }
    let mut q = EnumerationQuery::new(kind, n);
    q.m = m;
    q.tag.g = g;
    q.tag.max_part = max_part;
    let total = count(&q);
    Ok(Output::new(
        total.to_string(),
        json!({ "class": kind.symbol(), "n": n, "m": m, "g": g, "max_part": max_part, "count": total }),
    ))
}

fn run_poly(big_n: i64, check: Option<CheckArg>, bound: Option<u32>) -> Result<Output, Failure> {
    let mut cache = PolyCache::new();
    let sides = match check {
        None => {
            if big_n < -1 {
                return Err(Failure::Domain(Error::OutOfRange {
                    what: "N",
                    detail: format!("d_N needs N >= -1, got {big_n}"),
                }));
            }
            let d = d_n(big_n);
            return Ok(Output::new(d.to_string(), json!({ "N": big_n, "poly": d })));
        }
        Some(CheckArg::Eq2) => {
            let bound =
                bound.ok_or_else(|| Failure::Usage("--check eq2 needs --bound B".into()))?;
            let terms = u32::try_from(big_n)
                .map_err(|_| Failure::Usage("--N must be nonnegative for eq2".into()))?;
            let product = truncated_product_eq2(terms, bound)?;
            let counts = count_series(ClassKind::Alladi, bound);
            let holds = product == counts;
            let text = format!(
                "eq2 {terms} factors mod q^{}: {}\n{product}",
                bound + 1,
                if holds { "holds" } else { "FAILS" }
            );
            let mut out = Output::new(
                text,
                json!({ "check": "eq2", "N": terms, "bound": bound, "holds": holds, "product": product, "counts": counts }),
            );
            out.ok = holds;
            return Ok(out);
        }
        Some(CheckArg::Eq4) => eq4_sides(&mut cache, big_n)?,
        Some(CheckArg::Eq5) => eq5_sides(&mut cache, big_n)?,
        Some(CheckArg::Eq6) => eq6_sides(&mut cache, big_n)?,
    };
    let name = match check {
        Some(CheckArg::Eq4) => "eq4",
        Some(CheckArg::Eq5) => "eq5",
        _ => "eq6",
    };
    let holds = sides.holds();
    let mut text = format!(
        "{name} N={big_n}: {}: {}",
        sides.name,
        if holds { "holds" } else { "FAILS" }
    );
    if !holds {
        text.push_str(&format!("\nlhs {}\nrhs {}", sides.lhs, sides.rhs));
    }
    let mut out = Output::new(
        text,
        json!({ "check": name, "N": big_n, "identity": sides.name, "holds": holds, "lhs": sides.lhs, "rhs": sides.rhs }),
    );
    out.ok = holds;
    Ok(out)
}

fn run_verify(suite: &str, max_n: u32) -> Result<Output, Failure> {
    let reports: Vec<SuiteReport> = if suite == "all" {
        run_all(max_n)
    } else {
        vec![run_suite(suite, max_n).map_err(|e| Failure::Usage(e.to_string()))?]
    };
    let mut lines = vec![format!(
        "{:<16}{:>10}{:>10}{:>12}  status",
        "suite", "checks", "failures", "ms"
    )];
    for r in &reports {
        lines.push(format!(
            "{:<16}{:>10}{:>10}{:>12.1}  {}",
            r.name,
            r.checks,
            r.failures,
            r.elapsed_ms,
            if r.passed() { "pass" } else { "FAIL" }
        ));
        for w in &r.witnesses {
            lines.push(format!("    {w}"));
        }
    }
    let ok = reports.iter().all(SuiteReport::passed);
    lines.push(format!(
        "{} of {} suites passed",
        reports.iter().filter(|r| r.passed()).count(),
        reports.len()
    ));
    let mut out = Output::new(
        lines.join("\n"),
        json!({ "max_n": max_n, "passed": ok, "suites": reports }),
    );
    out.ok = ok;
    Ok(out)
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Map {
            map,
            partition,
            m,
            n,
        } => run_map(map, &parse(&partition)?, m, n),
        Command::Factorize {
            partition,
            orientation,
            refined,
        } => {
            let orientation = match orientation {
                OrientationArg::Upper => Orientation::Upper,
                OrientationArg::Lower => Orientation::Lower,
            };
            run_factorize(&parse(&partition)?, orientation, refined)
        }
        Command::Trace { partition, full } => run_trace(&parse(&partition)?, full),
        Command::Count {
            n,
            m,
            class,
            g,
            max_part,
        } => run_count(n, m, class, g, max_part),
        Command::Poly {
            big_n,
            check,
            bound,
        } => run_poly(big_n, check, bound),
        Command::Verify { suite, max_n } => run_verify(&suite, max_n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_mode = cli.json;
    match run(cli.command) {
        Ok(out) => {
            if json_mode {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            let (code, kind, detail) = match failure {
                Failure::Usage(detail) => (2, "usage", detail),
                Failure::Domain(e) => (1, e.kind(), e.to_string()),
            };
            if json_mode {
                println!("{}", json!({ "error": { "kind": kind, "detail": detail } }));
            } else {
                eprintln!("error: {detail}");
            }
            ExitCode::from(code)
        }
    }
}
