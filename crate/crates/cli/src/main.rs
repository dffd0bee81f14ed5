//! `hodgestar` command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use hodgestar::arith::{factorial, format_rational, parse_rational, Rational};
use hodgestar::flagcx::{flag_example, MetricParams};
use hodgestar::lefschetz::{verify_all, Oracle, VerificationReport};
use hodgestar::partitions::{
    double_diagram, enum_bound_from_env, hook_product, schur_g_formula, shifted_hook_product,
    shifted_syt_count_bruteforce, syt_count_bruteforce, Partition, StrictPartition,
};
use hodgestar::rootsys::{BruhatPoset, CartanType, ParabolicChoice};
use hodgestar::spaces::{ClassJson, CohomologyClass, Label, Space, SpaceDescriptor};
use hodgestar::Error;

#[derive(Parser)]
#[command(name = "hodgestar", version, about = "Exact Hodge star computations on Schubert bases")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    /// Graphviz text; `poset` only.
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Grassmannian,
    OgEven,
    OgOdd,
    Lg,
    QuadricOdd,
    QuadricEven,
}

#[derive(Args, Clone)]
struct SpaceArgs {
    #[arg(long, value_enum)]
    space: Family,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Hook products and tableau counts of a partition.
    Hooks {
        /// Parts separated by commas, e.g. `5,3,2`.
        #[arg(long)]
        partition: String,
        /// Use shifted hooks (strict partitions).
        #[arg(long)]
        shifted: bool,
    },
    /// Closed-form star next to the Lefschetz-oracle star.
    Star {
        #[command(flatten)]
        space: SpaceArgs,
        /// A single basis label; all labels when omitted.
        #[arg(long)]
        label: Option<String>,
    },
    /// Closed-form adjoint of the Lefschetz operator.
    Lambda {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        label: Option<String>,
    },
    /// Expansion of ω^r in the Schubert basis.
    OmegaPower {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        r: usize,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, value_enum, required_unless_present = "all")]
        space: Option<Family>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Every implemented space up to `--max-rank`.
        #[arg(long, conflicts_with = "space")]
        all: bool,
        #[arg(long, default_value_t = 300)]
        max_rank: usize,
    },
    /// Bruhat poset of a parabolic quotient.
    Poset {
        /// Root system, e.g. `E6`, `E7`, `A4`, `D5`.
        #[arg(long = "type")]
        cartan_type: String,
        /// Excluded simple root (Bourbaki numbering); defaults to 1 for E6 and 7 for E7.
        #[arg(long)]
        node: Option<usize>,
    },
    /// Star of h₁ on the full flag manifold of C³.
    FlagExample {
        #[arg(long, default_value = "1")]
        alpha: String,
        #[arg(long, default_value = "2")]
        beta: String,
        #[arg(long, default_value = "1")]
        gamma: String,
        #[arg(long, default_value = "1")]
        vol: String,
    },
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalInvariant(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult = Result<(), Failure>;

fn descriptor(family: Family, m: Option<usize>, n: Option<usize>, k: Option<usize>) -> Result<SpaceDescriptor, Failure> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("this space needs --{flag}")));
    let desc = match family {
        Family::Grassmannian => SpaceDescriptor::Grassmannian { m: need(m, "m")?, n: need(n, "n")? },
        Family::OgEven => SpaceDescriptor::OgEven { n: need(n, "n")? },
        Family::OgOdd => SpaceDescriptor::OgOddAlias { n: need(n, "n")? },
        Family::Lg => SpaceDescriptor::Lagrangian { n: need(n, "n")? },
        Family::QuadricOdd => SpaceDescriptor::QuadricOdd { k: need(k, "k")? },
        Family::QuadricEven => SpaceDescriptor::QuadricEven { k: need(k, "k")? },
    };
    desc.validate()?;
    Ok(desc)
}

fn build_space(a: &SpaceArgs) -> Result<Space, Failure> {
    Ok(Space::new(descriptor(a.space, a.m, a.n, a.k)?)?)
}

fn alias_note(space: &Space) -> Option<String> {
    match space.descriptor() {
        SpaceDescriptor::OgOddAlias { n } => Some(format!(
            "note: {} has the cohomology ring and Lefschetz action of OG({n},{})",
            space.descriptor(),
            2 * n
        )),
        _ => None,
    }
}

fn class_json(x: &CohomologyClass) -> Result<Value, Failure> {
    Ok(serde_json::to_value(ClassJson::from_class(x)?).expect("serialisable"))
}

fn labels_for(space: &Space, label: &Option<String>) -> Result<Vec<Label>, Failure> {
    match label {
        Some(s) => Ok(vec![space.parse_label(s)?]),
        None => Ok(space.labels().cloned().collect()),
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serialisable"));
}

fn reject_dot(format: Format) -> CliResult {
    if format == Format::Dot {
        return Err(Failure::Usage("--format dot is only available for `poset`".into()));
    }
    Ok(())
}

fn cmd_hooks(format: Format, partition: &str, shifted: bool) -> CliResult {
    let lambda: Partition = partition.parse()?;
    let bound = enum_bound_from_env()?;
    let weight = lambda.weight();
    let wf = factorial(weight as u64);
    let (kind, product, count, cross_check) = if shifted {
        let s = StrictPartition::try_from(lambda.clone())?;
        let g = shifted_hook_product(&s);
        let schur = schur_g_formula(&s);
        let count = shifted_syt_count_bruteforce(&s, bound)?;
        let note = format!("double diagram {}, Schur product {schur}", double_diagram(&s));
        if schur != g {
            return Err(Failure::Verification(format!("g_λ = {g} but Schur's product gives {schur}")));
        }
        ("g", g, count, note)
    } else {
        let h = hook_product(&lambda);
        let count = syt_count_bruteforce(&lambda, bound)?;
        ("h", h, count, format!("conjugate {}", lambda.conjugate()))
    };
    let closed = &wf / &product;
    let agree = closed == count.into();
    match format {
        Format::Json => print_json(&json!({
            "partition": lambda.to_string(),
            "shifted": shifted,
            "hook_product": product.to_string(),
            "weight_factorial": wf.to_string(),
            "tableaux_closed_form": closed.to_string(),
            "tableaux_bruteforce": count,
            "agree": agree,
        })),
        _ => {
            println!("partition: {lambda}");
            println!("{kind}_λ = {product}");
            println!("|λ|! / {kind}_λ = {closed}");
            println!("tableaux (brute force) = {count}");
            println!("{cross_check}");
        }
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::Verification(format!("closed form {closed} ≠ brute-force count {count}")))
    }
}

fn cmd_star(format: Format, args: &SpaceArgs, label: &Option<String>) -> CliResult {
    let space = build_space(args)?;
    let labels = labels_for(&space, label)?;
    let oracle = Oracle::new(&space)?;
    let mut rows = Vec::new();
    let mut mismatches = 0;
    for l in &labels {
        let x = space.basis_class(l);
        let closed = space.star(&x);
        let via_oracle = oracle.star(&x)?;
        if closed != via_oracle {
            mismatches += 1;
        }
        rows.push((l.clone(), closed, via_oracle));
    }
    match format {
        Format::Json => {
            let items = rows
                .iter()
                .map(|(l, t, o)| {
                    Ok(json!({
                        "label": l.to_string(),
                        "closed_form": class_json(t)?,
                        "oracle": class_json(o)?,
                        "agree": t == o,
                    }))
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            print_json(&json!({"space": space.descriptor().to_string(), "star": items}));
        }
        _ => {
            println!("space: {}", space.descriptor());
            if let Some(note) = alias_note(&space) {
                println!("{note}");
            }
            for (l, t, o) in &rows {
                let mark = if t == o { "agree" } else { "DIFFER" };
                println!(
                    "*{} = {}    [oracle: {}; {mark}]",
                    space.display_label(l),
                    space.display_class(t),
                    space.display_class(o)
                );
            }
        }
    }
    if mismatches > 0 {
        return Err(Failure::Verification(format!("{mismatches} label(s) disagree with the oracle")));
    }
    Ok(())
}

fn cmd_lambda(format: Format, args: &SpaceArgs, label: &Option<String>) -> CliResult {
    let space = build_space(args)?;
    let labels = labels_for(&space, label)?;
    let rows: Vec<(Label, CohomologyClass)> = labels
        .into_iter()
        .map(|l| {
            let y = space.lambda_adjoint(&space.basis_class(&l));
            (l, y)
        })
        .collect();
    match format {
        Format::Json => {
            let items = rows
                .iter()
                .map(|(l, y)| Ok(json!({"label": l.to_string(), "lambda": class_json(y)?})))
                .collect::<Result<Vec<_>, Failure>>()?;
            print_json(&json!({"space": space.descriptor().to_string(), "lambda": items}));
        }
        _ => {
            println!("space: {}", space.descriptor());
            if let Some(note) = alias_note(&space) {
                println!("{note}");
            }
            for (l, y) in &rows {
                println!("Λ{} = {}", space.display_label(l), space.display_class(y));
            }
        }
    }
    Ok(())
}

fn cmd_omega_power(format: Format, args: &SpaceArgs, r: usize) -> CliResult {
    let space = build_space(args)?;
    let x = space.omega_power_expand(r)?;
    match format {
        Format::Json => print_json(&json!({"r": r, "omega_power": class_json(&x)?})),
        _ => {
            println!("space: {}", space.descriptor());
            println!("ω^{r} = {}", space.display_class(&x));
        }
    }
    Ok(())
}

/// Every implemented space of rank at most `max_rank`, within fixed
/// parameter ceilings.
fn verification_scope(max_rank: usize) -> Vec<SpaceDescriptor> {
    let mut out = Vec::new();
    let mut keep = |d: SpaceDescriptor| {
        if d.validate().is_ok() && d.rank() <= max_rank as u128 {
            out.push(d);
        }
    };
    for total in 2..=14 {
        for m in 1..total {
            keep(SpaceDescriptor::Grassmannian { m, n: total - m });
        }
    }
    for n in 2..=12 {
        keep(SpaceDescriptor::OgEven { n });
        keep(SpaceDescriptor::OgOddAlias { n });
    }
    for n in 1..=12 {
        keep(SpaceDescriptor::Lagrangian { n });
    }
    for k in 1..=24 {
        keep(SpaceDescriptor::QuadricOdd { k });
        keep(SpaceDescriptor::QuadricEven { k });
    }
    out
}

fn cmd_verify(
    format: Format,
    family: Option<Family>,
    (m, n, k): (Option<usize>, Option<usize>, Option<usize>),
    all: bool,
    max_rank: usize,
) -> CliResult {
    let descs = if all {
        verification_scope(max_rank)
    } else {
        let family = family.ok_or_else(|| Failure::Usage("give --space or --all".into()))?;
        vec![descriptor(family, m, n, k)?]
    };
    // Spaces run in parallel; `collect` keeps the input order.
    let results: Vec<Result<Vec<VerificationReport>, Error>> = descs
        .par_iter()
        .map(|&d| Space::new(d).map(|s| verify_all(&s)))
        .collect();
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    match format {
        Format::Json => print_json(&serde_json::to_value(&reports).expect("serialisable")),
        _ => {
            for r in &reports {
                let desc = SpaceDescriptor::try_from(&r.space).map(|d| d.to_string()).unwrap_or_default();
                let status = if r.passed { "PASS" } else { "FAIL" };
                println!("{status} {desc:<10} {}", r.check);
                for f in &r.failures {
                    println!("    {}: expected {}, got {}", f.label, f.expected, f.got);
                }
            }
            println!("{} reports, {failed} failed", reports.len());
        }
    }
    if failed > 0 {
        return Err(Failure::Verification(format!("{failed} report(s) failed")));
    }
    Ok(())
}

fn cmd_poset(format: Format, cartan_type: &str, node: Option<usize>) -> CliResult {
    let t: CartanType = cartan_type.parse()?;
    let node = match (node, t) {
        (Some(n), _) => n,
        (None, CartanType::E6) => 1,
        (None, CartanType::E7) => 7,
        (None, _) => return Err(Failure::Usage(format!("--node is required for {t}"))),
    };
    let poset = BruhatPoset::new(ParabolicChoice::new(t, node)?)?;
    match format {
        Format::Json => print_json(&poset.to_json()),
        Format::Dot => print!("{}", poset.to_dot()),
        Format::Table => {
            println!(
                "{}: {} elements, top length {}, minuscule: {}",
                poset.parabolic,
                poset.len(),
                poset.top_length(),
                if poset.parabolic.is_minuscule() { "yes" } else { "no" }
            );
            if let Some(space) = poset.parabolic.space() {
                println!("model space: {space}");
            }
            println!("{:>5} {:>4} {:>5} {:>12} {:>14}  reduced word", "node", "len", "dual", "N", "star");
            for i in 0..poset.len() {
                let star = poset
                    .star_coefficient_pathcount(i)
                    .map(|q| format_rational(&q))
                    .unwrap_or_else(|_| "-".into());
                let word: Vec<String> = poset.nodes[i].reduced_word.iter().map(usize::to_string).collect();
                println!(
                    "{i:>5} {:>4} {:>5} {:>12} {star:>14}  {}",
                    poset.nodes[i].length(),
                    poset.dual_node(i),
                    poset.count_paths(i).to_string(),
                    word.join(" ")
                );
            }
        }
    }
    Ok(())
}

fn parse_param(name: &str, s: &str) -> Result<Rational, Failure> {
    parse_rational(s).ok_or_else(|| Failure::Usage(format!("--{name} {s:?} is not a rational number")))
}

fn cmd_flag_example(format: Format, alpha: &str, beta: &str, gamma: &str, vol: &str) -> CliResult {
    let params = MetricParams::new(
        parse_param("alpha", alpha)?,
        parse_param("beta", beta)?,
        parse_param("gamma", gamma)?,
        parse_param("vol", vol)?,
    )?;
    let ex = flag_example(&params)?;
    match format {
        Format::Json => print_json(&serde_json::to_value(&ex).expect("serialisable")),
        _ => {
            println!("metric: α = {}, β = {}, γ = {}, V = {}", ex.alpha, ex.beta, ex.gamma, ex.vol);
            println!("Kähler (β = α + γ): {}", ex.kahler);
            println!("*h1 = {}", ex.star_h1);
            println!("λ = {}", ex.lambda);
            println!("μ = {} (model-derived)", ex.mu);
            println!("*y1 = {}", ex.star_y1);
            println!(
                "*y1 is {}a multiple of the dual class y1y2",
                if ex.proportional_to_dual { "" } else { "not " }
            );
        }
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    let format = cli.format;
    if !matches!(cli.command, Command::Poset { .. }) {
        reject_dot(format)?;
    }
    match &cli.command {
        Command::Hooks { partition, shifted } => cmd_hooks(format, partition, *shifted),
        Command::Star { space, label } => cmd_star(format, space, label),
        Command::Lambda { space, label } => cmd_lambda(format, space, label),
        Command::OmegaPower { space, r } => cmd_omega_power(format, space, *r),
        Command::Verify { space, m, n, k, all, max_rank } => cmd_verify(format, *space, (*m, *n, *k), *all, *max_rank),
        Command::Poset { cartan_type, node } => cmd_poset(format, cartan_type, *node),
        Command::FlagExample { alpha, beta, gamma, vol } => cmd_flag_example(format, alpha, beta, gamma, vol),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
