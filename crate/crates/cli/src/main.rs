//! depth2lab: exact decision procedures for depth two, separability,
//! H-separability, split and Frobenius properties of finite-dimensional
//! ring extensions, with a character-theoretic route for group algebras.

use std::io::Read;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use depth2_core::algebras::{extension_builder, group_algebra_extension, Extension, Side};
use depth2_core::characters::character_table;
use depth2_core::depth2::{analyze_pair, normality_equivalence_sweep};
use depth2_core::exact::{Cyclotomic, Rational};
use depth2_core::io::{parse_generators, AlgebraInput, GroupInput};
use depth2_core::perm::{group_builder, PermGroup, SubgroupEmbedding, DEFAULT_ORDER_CAP};
use depth2_core::report::{run_checks, CheckKind};

const SCHEMA: &str = "depth2-lab/1";

#[derive(Parser)]
#[command(
    name = "depth2lab",
    about = "Exact workbench for depth-two, separability and Frobenius properties of ring extensions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timing in the report (off by default so identical
    /// inputs produce byte-identical output).
    #[arg(long, global = true)]
    timing: bool,
    /// Group order cap (overridden by the DEPTH2_MAX_ORDER environment
    /// variable when set).
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    max_order: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Character-theoretic depth-two analysis of a subgroup pair H <= G.
    CheckGroup(CheckGroupArgs),
    /// Sweep all subgroups of G and assert depth two <=> normality.
    Sweep(SweepArgs),
    /// Structure-constant checks on an algebra extension B <= A.
    CheckAlgebra(CheckAlgebraArgs),
    /// Print the exact character table of a group.
    CharTable(CharTableArgs),
}

#[derive(Args)]
struct GroupSource {
    /// Stock group: S{n}, A{n}, C{n}, D{n}, Q8, V4, or products like C2xC2.
    #[arg(long)]
    builder: Option<String>,
    /// JSON group file: `{ "degree": n, "generators": [[[0,1],[2,3]], ...] }`.
    #[arg(long)]
    group_file: Option<String>,
}

#[derive(Args)]
struct CheckGroupArgs {
    #[command(flatten)]
    source: GroupSource,
    /// Subgroup generators in cycle notation, e.g. "(01)" or "(0 1 2);(3 4)".
    #[arg(long, conflicts_with = "subgroup_indices")]
    subgroup: Option<String>,
    /// Subgroup generated by the given (comma-separated) indices into the
    /// group's generator list.
    #[arg(long)]
    subgroup_indices: Option<String>,
    /// Cross-check the verdict with the structure-constant quasibase test
    /// over the rationals.
    #[arg(long)]
    linear: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    source: GroupSource,
    /// Analyze every subgroup instead of one per conjugacy class.
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Args)]
struct CheckAlgebraArgs {
    /// Stock extension: triangular{n}, matrix{n}, product, dual,
    /// augmented-dual, or group-algebra (with --group/--subgroup).
    #[arg(long)]
    builder: Option<String>,
    /// Subalgebra choice for stock builders (diagonal | scalars | self).
    #[arg(long)]
    sub: Option<String>,
    /// Size parameter for builders that need one (e.g. product --n 3).
    #[arg(long)]
    n: Option<usize>,
    /// Group builder name for --builder group-algebra.
    #[arg(long)]
    group: Option<String>,
    /// JSON group file for --builder group-algebra (alternative to --group).
    #[arg(long)]
    group_file: Option<String>,
    /// Subgroup generators for --builder group-algebra.
    #[arg(long)]
    subgroup: Option<String>,
    /// Work over Q(zeta_m) instead of Q.
    #[arg(long)]
    conductor: Option<u32>,
    /// JSON algebra file (structure constants).
    #[arg(long)]
    algebra_file: Option<String>,
    /// Comma-separated checks: dims,d2,separability,h-separability,gamma,
    /// end-rt,integrals,pairings,rank-one,frobenius,projectivity,cond-exp.
    #[arg(long, default_value = "dims,d2,separability,h-separability,frobenius")]
    checks: String,
}

#[derive(Args)]
struct CharTableArgs {
    #[command(flatten)]
    source: GroupSource,
}

#[derive(Serialize)]
struct RunReport {
    schema: &'static str,
    input: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
    results: Vec<Value>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn order_cap(cli: &Cli) -> usize {
    std::env::var("DEPTH2_MAX_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(cli.max_order)
}

fn load_group(source: &GroupSource, cap: usize) -> Result<(Arc<PermGroup>, Value)> {
    match (&source.builder, &source.group_file) {
        (Some(name), None) => {
            let group = group_builder(name)
                .ok_or_else(|| anyhow!("unknown group builder `{name}`"))?;
            if group.order() > cap {
                bail!("group order {} exceeds the cap {}", group.order(), cap);
            }
            Ok((Arc::new(group), json!({ "builder": name })))
        }
        (None, Some(path)) => {
            let mut text = String::new();
            std::fs::File::open(path)
                .and_then(|mut f| f.read_to_string(&mut text))
                .with_context(|| format!("reading {path}"))?;
            let input: GroupInput = serde_json::from_str(&text)
                .with_context(|| format!("parsing {path}"))?;
            let group = input.build(cap)?;
            Ok((Arc::new(group), json!({ "group_file": path })))
        }
        _ => bail!("specify exactly one of --builder or --group-file"),
    }
}

fn subgroup_embedding(group: &Arc<PermGroup>, spec: &str) -> Result<SubgroupEmbedding> {
    let generators = parse_generators(spec, group.degree())?;
    Ok(SubgroupEmbedding::generated(group.clone(), &generators)?)
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let cap = order_cap(cli);
    let start = Instant::now();
    let (input, results, exit) = match &cli.command {
        Command::CheckGroup(args) => check_group(cli, args, cap)?,
        Command::Sweep(args) => sweep(cli, args, cap)?,
        Command::CheckAlgebra(args) => check_algebra(cli, args)?,
        Command::CharTable(args) => char_table_cmd(cli, args, cap)?,
    };
    let report = RunReport {
        schema: SCHEMA,
        input,
        timing_ms: cli.timing.then(|| start.elapsed().as_millis()),
        results,
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    }
    Ok(exit)
}

#[derive(Serialize)]
struct GroupCheckResult {
    group_order: usize,
    subgroup_order: usize,
    index: usize,
    normal: bool,
    a_table: Vec<Vec<u64>>,
    c_table: Vec<Vec<u64>>,
    is_d2: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    minimal_n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    linear: Option<LinearCrossCheck>,
}

#[derive(Serialize)]
struct LinearCrossCheck {
    left_d2: bool,
    right_d2: bool,
    is_d2: bool,
    agrees_with_characters: bool,
}

fn check_group(cli: &Cli, args: &CheckGroupArgs, cap: usize) -> Result<(Value, Vec<Value>, ExitCode)> {
    let (group, mut input) = load_group(&args.source, cap)?;
    let emb = match (&args.subgroup, &args.subgroup_indices) {
        (Some(spec), None) => {
            input["subgroup"] = json!(spec);
            subgroup_embedding(&group, spec)?
        }
        (None, Some(indices)) => {
            input["subgroup_indices"] = json!(indices);
            let gens = indices
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| -> Result<_> {
                    let i: usize = s.parse().with_context(|| format!("bad index `{s}`"))?;
                    group
                        .generators()
                        .get(i)
                        .cloned()
                        .ok_or_else(|| anyhow!("generator index {i} out of range"))
                })
                .collect::<Result<Vec<_>>>()?;
            SubgroupEmbedding::generated(group.clone(), &gens)?
        }
        _ => bail!("specify exactly one of --subgroup or --subgroup-indices"),
    };
    let analysis = analyze_pair(&emb)?;
    let normal = emb.is_normal();
    let linear = if args.linear {
        let ext = group_algebra_extension::<Rational>(&emb);
        let left = ext.d2_test(Side::Left).is_some();
        let right = ext.d2_test(Side::Right).is_some();
        Some(LinearCrossCheck {
            left_d2: left,
            right_d2: right,
            is_d2: left && right,
            agrees_with_characters: (left && right) == analysis.verdict.is_d2,
        })
    } else {
        None
    };
    let agreement_failed = linear.as_ref().map_or(false, |l| !l.agrees_with_characters);
    let result = GroupCheckResult {
        group_order: group.order(),
        subgroup_order: emb.subgroup().order(),
        index: emb.index(),
        normal,
        a_table: analysis.ind_res.a.clone(),
        c_table: analysis.triple.c.clone(),
        is_d2: analysis.verdict.is_d2,
        minimal_n: analysis.verdict.minimal_n,
        witness: analysis.verdict.witness,
        linear,
    };
    if !cli.json {
        render_group_check(&result);
    }
    let exit = if agreement_failed { ExitCode::from(2) } else { ExitCode::SUCCESS };
    Ok((input, vec![serde_json::to_value(&result)?], exit))
}

fn render_group_check(r: &GroupCheckResult) {
    println!("group:     order {}", r.group_order);
    println!("subgroup:  order {}, index {}", r.subgroup_order, r.index);
    println!("normal:    {}", r.normal);
    println!("induction-restriction table a:");
    for row in &r.a_table {
        println!("  {row:?}");
    }
    println!("triple table c = a*a^T*a:");
    for row in &r.c_table {
        println!("  {row:?}");
    }
    match (r.is_d2, r.minimal_n, r.witness) {
        (true, Some(n), _) => println!("depth two: yes (minimal N = {n})"),
        (false, _, Some((i, j))) => {
            println!("depth two: no (witness a[{i}][{j}] = 0 with c[{i}][{j}] > 0)")
        }
        _ => println!("depth two: {}", r.is_d2),
    }
    if let Some(l) = &r.linear {
        println!(
            "linear cross-check: left {} / right {} -> d2 {}, agrees with characters: {}",
            l.left_d2, l.right_d2, l.is_d2, l.agrees_with_characters
        );
    }
}

fn sweep(cli: &Cli, args: &SweepArgs, cap: usize) -> Result<(Value, Vec<Value>, ExitCode)> {
    let (group, mut input) = load_group(&args.source, cap)?;
    input["exhaustive"] = json!(args.exhaustive);
    let report = normality_equivalence_sweep(&group, args.exhaustive)?;
    if !cli.json {
        println!("group of order {}, {} subgroup(s) analyzed", report.group_order, report.subgroups.len());
        for e in &report.subgroups {
            let status = match (e.normal, e.minimal_n) {
                (true, Some(n)) => format!("normal, depth two, N = {n}"),
                (true, None) => "normal, depth two".to_owned(),
                (false, _) => {
                    let w = e
                        .witness
                        .map(|(i, j)| format!(" (witness a[{i}][{j}]=0)"))
                        .unwrap_or_default();
                    format!("not normal, not depth two{w}")
                }
            };
            println!(
                "  order {:>3}  index {:>3}  x{:<2} generated by {}  ->  {status}",
                e.order,
                e.index,
                e.conjugates,
                e.generators.join(", ")
            );
        }
        println!("normal <=> depth two: {}", report.equivalence_holds);
    }
    Ok((input, vec![serde_json::to_value(&report)?], ExitCode::SUCCESS))
}

fn parse_checks(spec: &str) -> Result<Vec<CheckKind>> {
    if spec.trim() == "all" {
        return Ok(CheckKind::ALL.to_vec());
    }
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| CheckKind::parse(s).ok_or_else(|| anyhow!("unknown check `{s}`")))
        .collect()
}

fn check_algebra(cli: &Cli, args: &CheckAlgebraArgs) -> Result<(Value, Vec<Value>, ExitCode)> {
    let checks = parse_checks(&args.checks)?;
    let cap = order_cap(cli);
    let (outcomes, input): (Vec<Value>, Value) = match (&args.builder, &args.algebra_file) {
        (Some(builder), None) if builder == "group-algebra" => {
            if args.group.is_none() && args.group_file.is_none() {
                bail!("--builder group-algebra needs --group or --group-file");
            }
            let source = GroupSource {
                builder: args.group.clone(),
                group_file: args.group_file.clone(),
            };
            let (group, group_desc) = load_group(&source, cap)?;
            let sub_spec = args.subgroup.as_deref().unwrap_or("()");
            let emb = subgroup_embedding(&group, sub_spec)?;
            let input = json!({
                "builder": "group-algebra",
                "group": group_desc,
                "subgroup": sub_spec,
                "field": field_desc(args.conductor),
            });
            let outcomes = match args.conductor {
                None => to_values(run_checks(&group_algebra_extension::<Rational>(&emb), &checks))?,
                Some(m) => {
                    let ext: Extension<Cyclotomic> = group_algebra_extension(&emb);
                    let _ = m; // scalars embed into Q(zeta_m) implicitly
                    to_values(run_checks(&ext, &checks))?
                }
            };
            (outcomes, input)
        }
        (Some(builder), None) => {
            let input = json!({
                "builder": builder,
                "sub": args.sub,
                "n": args.n,
                "field": field_desc(args.conductor),
            });
            let outcomes = match args.conductor {
                None => {
                    let ext = extension_builder::<Rational>(builder, args.sub.as_deref(), args.n)?;
                    to_values(run_checks(&ext, &checks))?
                }
                Some(_) => {
                    let ext =
                        extension_builder::<Cyclotomic>(builder, args.sub.as_deref(), args.n)?;
                    to_values(run_checks(&ext, &checks))?
                }
            };
            (outcomes, input)
        }
        (None, Some(path)) => {
            let mut text = String::new();
            std::fs::File::open(path)
                .and_then(|mut f| f.read_to_string(&mut text))
                .with_context(|| format!("reading {path}"))?;
            let parsed: AlgebraInput =
                serde_json::from_str(&text).with_context(|| format!("parsing {path}"))?;
            let input = json!({ "algebra_file": path });
            let outcomes = match &parsed.field {
                depth2_core::io::FieldInput::Name(n) if n == "Q" => {
                    to_values(run_checks(&parsed.build_rational()?, &checks))?
                }
                depth2_core::io::FieldInput::Cyclotomic { cyclotomic } => {
                    to_values(run_checks(&parsed.build_cyclotomic(*cyclotomic)?, &checks))?
                }
                depth2_core::io::FieldInput::Name(n) => bail!("unknown field `{n}`"),
            };
            (outcomes, input)
        }
        _ => bail!("specify exactly one of --builder or --algebra-file"),
    };
    if !cli.json {
        for outcome in &outcomes {
            render_outcome(outcome);
        }
    }
    Ok((input, outcomes, ExitCode::SUCCESS))
}

fn field_desc(conductor: Option<u32>) -> Value {
    match conductor {
        None => json!("Q"),
        Some(m) => json!({ "cyclotomic": m }),
    }
}

fn to_values<T: Serialize>(items: Vec<T>) -> Result<Vec<Value>> {
    items.into_iter().map(|i| Ok(serde_json::to_value(i)?)).collect()
}

fn render_outcome(v: &Value) {
    let check = v.get("check").and_then(Value::as_str).unwrap_or("?");
    print!("[{check}]");
    if let Value::Object(map) = v {
        for (k, val) in map {
            if k == "check" {
                continue;
            }
            match val {
                Value::Array(_) | Value::Object(_) => continue,
                _ => print!(" {k}={val}"),
            }
        }
    }
    println!();
}

fn char_table_cmd(cli: &Cli, args: &CharTableArgs, cap: usize) -> Result<(Value, Vec<Value>, ExitCode)> {
    let (group, input) = load_group(&args.source, cap)?;
    let table = character_table(&group);
    let export = table.export();
    if !cli.json {
        println!("classes ({}):", export.classes.len());
        for (i, c) in export.classes.iter().enumerate() {
            println!(
                "  {i}: rep {} size {} element-order {}",
                c.representative, c.size, c.element_order
            );
        }
        println!("irreducible characters:");
        for (i, row) in export.irreducibles.iter().enumerate() {
            println!("  chi{}: [{}]", i + 1, row.join(", "));
        }
    }
    Ok((input, vec![serde_json::to_value(&export)?], ExitCode::SUCCESS))
}
