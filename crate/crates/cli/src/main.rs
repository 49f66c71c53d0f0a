//! `lieforge`: exact computations with finite-dimensional Lie algebras over
//! the rationals.
//!
//! Every run prints a human summary, a `---` separator, and one JSON document
//! with the command name, sha256 digests of all inputs, the structured result,
//! and a status. Output is byte-identical across runs on identical inputs.
//!
//! Exit codes: 0 success, 1 mathematical violation or failed verification,
//! 2 unreadable/unparseable/oversized input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use lieforge_core::bider::{
    biderivation_space, check_biderivation, check_cpa, space_dimension_oracle, BiderViolation,
    CheckReport,
};
use lieforge_core::constructions::{delta_recipe_fixture, fixture, sl2, vm};
use lieforge_core::fgdelta::{check_conditions, compose, decompose, ConditionReport};
use lieforge_core::io::{
    read_algebra, read_bilinear, read_fgdelta, read_representation, write_algebra, write_bilinear,
    write_fgdelta, write_representation, AlgebraRef, ParsedAlgebra,
};
use lieforge_core::linalg::rank;
use lieforge_core::{CoreError, LieAlgebra, Matrix, Representation, SplitAlgebra};

#[derive(Parser)]
#[command(name = "lieforge", version, about = "Exact Lie-algebra structure and product solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra and report its structural invariants.
    Check(CheckArgs),
    /// Solve for the space of biderivations with the given coefficient module.
    Bider(BiderArgs),
    /// Write a catalog fixture to disk as canonical files.
    Construct(ConstructArgs),
    /// Convert a radical-valued product to/from its block triple (F, G, Delta).
    Fgdelta(FgdeltaArgs),
    /// Check explicit map files pointwise against the defining identities.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Algebra file path, or a fixture name such as `sl2` or `sl2-vm:2`.
    input: String,
}

#[derive(Args)]
struct BiderArgs {
    /// Algebra file path or fixture name.
    input: String,
    /// Representation file giving the coefficient module.
    #[arg(long, conflicts_with = "adjoint", value_name = "FILE")]
    module: Option<PathBuf>,
    /// Use the adjoint module (the default when --module is absent).
    #[arg(long)]
    adjoint: bool,
    /// Restrict to symmetric maps.
    #[arg(long)]
    symmetric: bool,
    /// Re-solve with the naive dense assembler and require agreement.
    #[arg(long)]
    oracle: bool,
    /// Include the canonical basis in the machine block.
    #[arg(long)]
    basis: bool,
}

#[derive(Args)]
struct ConstructArgs {
    /// Fixture name from the catalog.
    name: String,
    /// Output directory (created if missing).
    #[arg(long, value_name = "DIR")]
    out: PathBuf,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["compose", "decompose"])))]
struct FgdeltaArgs {
    /// Algebra file with `split` metadata, or a split fixture name.
    algebra: String,
    /// Block-triple file (--compose) or product file (--decompose).
    data: PathBuf,
    /// Assemble a product from a block-triple file.
    #[arg(long)]
    compose: bool,
    /// Split a product file into its block triple.
    #[arg(long)]
    decompose: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Algebra file path or fixture name.
    algebra: String,
    /// Bilinear map file to check.
    product: PathBuf,
    /// Representation file giving the coefficient module.
    #[arg(long, conflicts_with = "adjoint", value_name = "FILE")]
    module: Option<PathBuf>,
    /// Use the adjoint module (the default when --module is absent).
    #[arg(long)]
    adjoint: bool,
    /// Also require symmetry of the map.
    #[arg(long)]
    symmetric: bool,
    /// Check the full compatible-product conditions (adjoint module,
    /// symmetry, and the quadratic compatibility identity).
    #[arg(long, conflicts_with = "module")]
    cpa: bool,
}

/// A terminal failure: exit code plus a one-line message.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn violated(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<CoreError> for Failure {
    fn from(err: CoreError) -> Self {
        let code = match err {
            CoreError::Parse(_) | CoreError::UnknownFixture(_) | CoreError::MissingSplit(_) => 2,
            _ => 1,
        };
        Failure { code, message: err.to_string() }
    }
}

/// Result of one command: status string, exit code, human lines, payload.
struct Outcome {
    status: &'static str,
    code: u8,
    human: Vec<String>,
    result: Value,
}

impl Outcome {
    fn ok(human: Vec<String>, result: Value) -> Self {
        Outcome { status: "ok", code: 0, human, result }
    }

    fn violated(human: Vec<String>, result: Value) -> Self {
        Outcome { status: "violated", code: 1, human, result }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut inputs: Vec<Value> = Vec::new();
    let (name, res) = match &cli.command {
        Command::Check(a) => ("check", cmd_check(a, &mut inputs)),
        Command::Bider(a) => ("bider", cmd_bider(a, &mut inputs)),
        Command::Construct(a) => ("construct", cmd_construct(a, &mut inputs)),
        Command::Fgdelta(a) => ("fgdelta", cmd_fgdelta(a, &mut inputs)),
        Command::Verify(a) => ("verify", cmd_verify(a, &mut inputs)),
    };
    let outcome = res.unwrap_or_else(|f| Outcome {
        status: if f.code == 2 { "error" } else { "violated" },
        code: f.code,
        human: vec![f.message.clone()],
        result: json!({ "error": f.message }),
    });

    let machine = json!({
        "command": name,
        "inputs": inputs,
        "result": outcome.result,
        "status": outcome.status,
    });
    let mut text = format!("lieforge {} {}\n", env!("CARGO_PKG_VERSION"), name);
    for line in &outcome.human {
        text.push_str(line);
        text.push('\n');
    }
    text.push_str(&format!("status: {}\n---\n", outcome.status));
    text.push_str(&serde_json::to_string_pretty(&machine).expect("serializable"));
    text.push('\n');
    // A closed pipe (e.g. `lieforge ... | head`) is not an error worth a
    // panic; the exit code still reflects the computation.
    use std::io::Write;
    let _ = std::io::stdout().write_all(text.as_bytes());
    ExitCode::from(outcome.code)
}

// ---------------------------------------------------------------- plumbing

fn sha256_hex(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn input_record(role: &str, source: &str, text: &str) -> Value {
    json!({ "role": role, "sha256": sha256_hex(text.as_bytes()), "source": source })
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn max_dim() -> Result<usize, Failure> {
    match std::env::var("LIEFORGE_MAX_DIM") {
        Err(std::env::VarError::NotPresent) => Ok(64),
        Err(e) => Err(Failure::input(format!("LIEFORGE_MAX_DIM: {e}"))),
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::input(format!("LIEFORGE_MAX_DIM: not a number: {s:?}"))),
    }
}

fn enforce_cap(what: &str, dim: usize) -> Result<(), Failure> {
    let cap = max_dim()?;
    if dim > cap {
        return Err(Failure::input(format!(
            "{what} dimension {dim} exceeds LIEFORGE_MAX_DIM = {cap}"
        )));
    }
    Ok(())
}

/// Upper bound on a fixture's total dimension, read off its parameters, so
/// oversized requests are refused before anything is built.
fn fixture_dim_estimate(name: &str) -> usize {
    let params = |p: &str| -> Vec<usize> {
        p.split(',').map(|s| s.parse().unwrap_or(0)).collect()
    };
    if let Some(p) = name.strip_prefix("abelian:") {
        params(p).first().copied().unwrap_or(0)
    } else if let Some(p) = name.strip_prefix("sl2-vm:") {
        params(p).first().copied().unwrap_or(0) + 4
    } else if let Some(p) = name.strip_prefix("sl2-sum:") {
        3 + params(p).iter().map(|w| w + 1).sum::<usize>()
    } else {
        8
    }
}

struct Loaded {
    parsed: ParsedAlgebra,
    label: String,
}

/// Resolves `arg` as a file path if one exists, otherwise as a fixture name.
fn load_algebra(arg: &str, inputs: &mut Vec<Value>) -> Result<Loaded, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = read_file(path)?;
        inputs.push(input_record("algebra", arg, &text));
        let parsed = read_algebra(&text)?;
        enforce_cap("algebra", parsed.algebra.dim())?;
        Ok(Loaded { parsed, label: format!("file {arg:?}") })
    } else {
        enforce_cap("fixture", fixture_dim_estimate(arg))?;
        let fx = fixture(arg)?;
        let s_dim = fx.split().map(SplitAlgebra::s_dim);
        let algebra = fx.algebra().clone();
        enforce_cap("algebra", algebra.dim())?;
        let canonical = write_algebra(&algebra, s_dim);
        inputs.push(input_record("algebra", &format!("fixture:{arg}"), &canonical));
        Ok(Loaded { parsed: ParsedAlgebra { algebra, s_dim }, label: format!("fixture {arg:?}") })
    }
}

/// The coefficient module for bider/verify: a representation file, or the
/// adjoint module by default.
fn load_module(
    module: &Option<PathBuf>,
    g: &LieAlgebra,
    inputs: &mut Vec<Value>,
) -> Result<(Representation, String), Failure> {
    let Some(path) = module else {
        return Ok((g.adjoint(), "adjoint".to_string()));
    };
    let text = read_file(path)?;
    inputs.push(input_record("module", &path.display().to_string(), &text));
    let (aref, rep) = read_representation(&text)?;
    if rep.algebra_dim() != g.dim() {
        return Err(Failure::violated(format!(
            "module file provides {} action matrices but the algebra has dimension {}",
            rep.algebra_dim(),
            g.dim()
        )));
    }
    enforce_cap("module", rep.module_dim())?;
    rep.validate(g)?;
    let mut label = format!("file {:?}", path.display().to_string());
    if let AlgebraRef::Name(n) = &aref {
        if n != g.name() {
            label.push_str(&format!(" (declared for algebra {n:?})"));
        }
    }
    Ok((rep, label))
}

/// Re-encodes a canonical document emitted by the core writers as a JSON
/// value, so machine blocks embed exactly what the file form would contain.
fn embed(doc: String) -> Value {
    serde_json::from_str(&doc).expect("writer output is valid json")
}

fn rationals_to_strings(v: &[lieforge_core::Rational]) -> Vec<String> {
    v.iter().map(|r| r.to_string()).collect()
}

fn count_nonzero(m: &Matrix) -> usize {
    let zero = lieforge_core::linalg::rat(0);
    (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .filter(|&(i, j)| m.at(i, j) != &zero)
        .count()
}

fn bider_violation_value(v: &BiderViolation) -> Value {
    match v {
        BiderViolation::Identity { slot, x, y, z, residual } => json!({
            "kind": "identity",
            "residual": rationals_to_strings(residual),
            "slot": slot,
            "x": x, "y": y, "z": z,
        }),
        BiderViolation::Symmetry { x, y, residual } => json!({
            "kind": "symmetry",
            "residual": rationals_to_strings(residual),
            "x": x, "y": y,
        }),
    }
}

fn describe_bider_violation(v: &BiderViolation) -> String {
    match v {
        BiderViolation::Identity { slot, x, y, z, .. } => {
            format!("slot {slot} identity fails at basis triple ({x}, {y}, {z})")
        }
        BiderViolation::Symmetry { x, y, .. } => {
            format!("symmetry fails at basis pair ({x}, {y})")
        }
    }
}

fn check_report_values(report: &CheckReport) -> Vec<Value> {
    report.violations.iter().map(bider_violation_value).collect()
}

fn condition_report_value(report: &ConditionReport) -> Value {
    let outcomes: Vec<Value> = report
        .outcomes
        .iter()
        .map(|o| match o.witness {
            None => json!({ "condition": o.condition.to_string(), "pass": true }),
            Some((a, b, c)) => json!({
                "condition": o.condition.to_string(),
                "pass": false,
                "witness": [a, b, c],
            }),
        })
        .collect();
    json!({ "abelian_variant": report.abelian_variant, "outcomes": outcomes })
}

fn describe_conditions(report: &ConditionReport, human: &mut Vec<String>) {
    let variant = if report.abelian_variant { "abelian variant" } else { "general variant" };
    if report.all_pass() {
        human.push(format!("conditions ({variant}): all pass"));
    } else {
        human.push(format!("conditions ({variant}):"));
        for o in &report.outcomes {
            match o.witness {
                None => human.push(format!("  {}: pass", o.condition)),
                Some(w) => human.push(format!("  {}: FAIL at {:?}", o.condition, w)),
            }
        }
    }
}

/// Builds the split view an algebra file's metadata promises.
fn split_from(parsed: ParsedAlgebra) -> Result<SplitAlgebra, Failure> {
    let s_dim = parsed
        .s_dim
        .ok_or_else(|| CoreError::MissingSplit(parsed.algebra.name().to_string()))?;
    Ok(SplitAlgebra::from_total(parsed.algebra, s_dim)?)
}

// ---------------------------------------------------------------- commands

fn cmd_check(args: &CheckArgs, inputs: &mut Vec<Value>) -> Result<Outcome, Failure> {
    let Loaded { parsed, label } = load_algebra(&args.input, inputs)?;
    let g = &parsed.algebra;
    let mut human = vec![format!("algebra {:?} ({label}): dimension {}", g.name(), g.dim())];

    let defects = g.validate();
    if !defects.is_empty() {
        human.push(format!("structure defects: {}", defects.len()));
        let listed: Vec<String> = defects.iter().map(|d| format!("{d:?}")).collect();
        for d in &listed {
            human.push(format!("  {d}"));
        }
        return Ok(Outcome::violated(human, json!({ "defects": listed })));
    }

    let series: Vec<usize> = g.derived_series().iter().map(|s| s.dim()).collect();
    let radical_dim = g.radical().dim();
    let killing_rank = rank(&g.killing_form());
    let perfect = g.is_perfect();
    let solvable = g.is_solvable();
    let semisimple = g.is_semisimple();

    human.push(format!("basis: {}", g.basis_names().join(", ")));
    human.push(format!("perfect: {perfect}"));
    human.push(format!("solvable: {solvable}"));
    human.push(format!("semisimple: {semisimple}"));
    human.push(format!("radical dim: {radical_dim}"));
    human.push(format!("killing rank: {killing_rank}"));
    human.push(format!(
        "derived series dims: {}",
        series.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
    ));

    let mut result = json!({
        "algebra": { "basis": g.basis_names(), "dim": g.dim(), "name": g.name() },
        "derived_series_dims": series,
        "killing_rank": killing_rank,
        "perfect": perfect,
        "radical_dim": radical_dim,
        "semisimple": semisimple,
        "solvable": solvable,
    });

    if parsed.s_dim.is_some() {
        let sp = split_from(parsed)?;
        human.push(format!(
            "split: s_dim {}, r_dim {}, levi-shaped: {}",
            sp.s_dim(),
            sp.r_dim(),
            sp.is_levi_shaped()
        ));
        result["split"] = json!({
            "levi_shaped": sp.is_levi_shaped(),
            "r_dim": sp.r_dim(),
            "s_dim": sp.s_dim(),
        });
    }

    Ok(Outcome::ok(human, result))
}

fn cmd_bider(args: &BiderArgs, inputs: &mut Vec<Value>) -> Result<Outcome, Failure> {
    let Loaded { parsed, label } = load_algebra(&args.input, inputs)?;
    let g = &parsed.algebra;
    let (rep, module_label) = load_module(&args.module, g, inputs)?;

    let report = biderivation_space(g, &rep, args.symmetric)?;
    let meta = &report.metadata;

    let mut human = vec![
        format!("algebra {:?} ({label}): dimension {}", g.name(), g.dim()),
        format!("module: {module_label} (dimension {})", rep.module_dim()),
        format!("symmetric: {}", args.symmetric),
        format!("space dimension: {}", report.dimension),
        format!(
            "constraint shape: {} rows x {} cols (nominal)",
            meta.constraint_rows, meta.constraint_cols
        ),
    ];

    let mut result = json!({
        "dimension": report.dimension,
        "metadata": {
            "algebra": meta.algebra,
            "constraint_cols": meta.constraint_cols,
            "constraint_rows": meta.constraint_rows,
            "module": meta.module,
            "symmetric": meta.symmetric,
        },
    });

    if args.basis {
        let basis: Vec<Value> =
            report.basis.iter().map(|b| embed(write_bilinear(b))).collect();
        human.push(format!("basis members listed: {}", basis.len()));
        result["basis"] = Value::Array(basis);
    }

    if args.oracle {
        let slow = space_dimension_oracle(g, &rep, args.symmetric);
        let agrees = slow == report.dimension;
        human.push(format!("oracle dimension: {slow} ({})", if agrees { "agrees" } else { "DISAGREES" }));
        result["oracle"] = json!({ "agrees": agrees, "dimension": slow });
        if !agrees {
            return Ok(Outcome::violated(human, result));
        }
    }

    Ok(Outcome::ok(human, result))
}

/// The defining Levi-part module of a semidirect fixture, when it has one.
/// `name` has already been validated by the catalog.
fn defining_module(name: &str) -> Option<Representation> {
    if let Some(p) = name.strip_prefix("sl2-vm:") {
        return vm(p.parse().ok()?).ok();
    }
    if let Some(p) = name.strip_prefix("sl2-sum:") {
        let weights: Vec<usize> = p.split(',').map(|s| s.parse().ok()).collect::<Option<_>>()?;
        let mut rep = vm(*weights.first()?).ok()?;
        for &w in &weights[1..] {
            rep = rep.direct_sum(&vm(w).ok()?).ok()?;
        }
        return Some(rep);
    }
    None
}

fn cmd_construct(args: &ConstructArgs, inputs: &mut Vec<Value>) -> Result<Outcome, Failure> {
    enforce_cap("fixture", fixture_dim_estimate(&args.name))?;
    let fx = fixture(&args.name)?;
    enforce_cap("algebra", fx.algebra().dim())?;
    inputs.push(json!({ "role": "fixture", "source": args.name }));

    std::fs::create_dir_all(&args.out)
        .map_err(|e| Failure::input(format!("cannot create {}: {e}", args.out.display())))?;
    let stem = args.name.replace([':', ','], "-");

    let mut human = Vec::new();
    let mut written: Vec<Value> = Vec::new();
    let mut emit = |file: String, role: &str, text: String| -> Result<(), Failure> {
        let path = args.out.join(&file);
        std::fs::write(&path, &text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?;
        human.push(format!("wrote {role}: {}", path.display()));
        written.push(json!({
            "bytes": text.len(),
            "path": path.display().to_string(),
            "role": role,
            "sha256": sha256_hex(text.as_bytes()),
        }));
        Ok(())
    };

    let s_dim = fx.split().map(SplitAlgebra::s_dim);
    emit(format!("{stem}.algebra.json"), "algebra", write_algebra(fx.algebra(), s_dim))?;

    if let Some(rep) = defining_module(&args.name) {
        let doc = write_representation(&rep, &AlgebraRef::Inline(sl2()));
        emit(format!("{stem}.module.json"), "module", doc)?;
    }
    if args.name == "nonperfect-delta" {
        let (_, product) = delta_recipe_fixture();
        emit(format!("{stem}.product.json"), "product", write_bilinear(&product))?;
    }

    Ok(Outcome::ok(human, json!({ "written": written })))
}

fn cmd_fgdelta(args: &FgdeltaArgs, inputs: &mut Vec<Value>) -> Result<Outcome, Failure> {
    let Loaded { parsed, label } = load_algebra(&args.algebra, inputs)?;
    let sp = split_from(parsed)?;
    let text = read_file(&args.data)?;
    let role = if args.compose { "fgdelta" } else { "product" };
    inputs.push(input_record(role, &args.data.display().to_string(), &text));

    let mut human = vec![format!(
        "algebra {:?} ({label}): s_dim {}, r_dim {}",
        sp.total().name(),
        sp.s_dim(),
        sp.r_dim()
    )];

    if args.decompose {
        let product = read_bilinear(&text)?;
        human.push(format!(
            "product: {}x{} -> {}, nonzero values: {}",
            product.left_dim(),
            product.right_dim(),
            product.module_dim(),
            (0..product.left_dim())
                .flat_map(|i| (0..product.right_dim()).map(move |j| (i, j)))
                .filter(|&(i, j)| product.value(i, j).iter().any(|c| c != &lieforge_core::linalg::rat(0)))
                .count()
        ));
        let data = decompose(&sp, &product)?;
        let conditions = check_conditions(&sp, &data);
        human.push(format!(
            "blocks: F {}x{}, G {}x{}, Delta {} maps {}x{}",
            data.f.rows(), data.f.cols(),
            data.g.rows(), data.g.cols(),
            data.delta.len(), data.g.rows(), data.g.cols()
        ));
        human.push(format!(
            "nonzero entries: F {}, G {}, Delta {}",
            count_nonzero(&data.f),
            count_nonzero(&data.g),
            data.delta.iter().map(count_nonzero).sum::<usize>()
        ));
        describe_conditions(&conditions, &mut human);
        let result = json!({
            "conditions": condition_report_value(&conditions),
            "fgdelta": embed(write_fgdelta(&data)),
        });
        return Ok(Outcome::ok(human, result));
    }

    let data = read_fgdelta(&text)?;
    if data.s_dim() != sp.s_dim() || data.r_dim() != sp.r_dim() {
        return Err(Failure::violated(format!(
            "block triple is shaped for s_dim {}, r_dim {} but the algebra has s_dim {}, r_dim {}",
            data.s_dim(),
            data.r_dim(),
            sp.s_dim(),
            sp.r_dim()
        )));
    }
    match compose(&sp, &data) {
        Ok(product) => {
            let conditions = check_conditions(&sp, &data);
            describe_conditions(&conditions, &mut human);
            human.push(format!(
                "product assembled: {}x{} -> {}",
                product.left_dim(),
                product.right_dim(),
                product.module_dim()
            ));
            let result = json!({
                "conditions": condition_report_value(&conditions),
                "product": embed(write_bilinear(&product)),
            });
            Ok(Outcome::ok(human, result))
        }
        Err(report) => {
            describe_conditions(&report, &mut human);
            let result = json!({ "conditions": condition_report_value(&report) });
            Ok(Outcome::violated(human, result))
        }
    }
}

fn cmd_verify(args: &VerifyArgs, inputs: &mut Vec<Value>) -> Result<Outcome, Failure> {
    let Loaded { parsed, label } = load_algebra(&args.algebra, inputs)?;
    let g = &parsed.algebra;
    let text = read_file(&args.product)?;
    inputs.push(input_record("product", &args.product.display().to_string(), &text));
    let product = read_bilinear(&text)?;

    let mut human = vec![
        format!("algebra {:?} ({label}): dimension {}", g.name(), g.dim()),
        format!(
            "map: {}x{} -> {}, symmetric values: {}",
            product.left_dim(),
            product.right_dim(),
            product.module_dim(),
            product.is_symmetric()
        ),
    ];

    if args.cpa {
        let report = check_cpa(g, &product)?;
        let clean = report.is_clean();
        let linear = check_report_values(&report.abd);
        let quadratic: Vec<Value> = report
            .cpa_violations
            .iter()
            .map(|v| {
                json!({
                    "kind": "compatibility",
                    "residual": rationals_to_strings(&v.residual),
                    "x": v.x, "y": v.y, "z": v.z,
                })
            })
            .collect();
        for v in &report.abd.violations {
            human.push(describe_bider_violation(v));
        }
        for v in &report.cpa_violations {
            human.push(format!(
                "compatibility identity fails at basis triple ({}, {}, {})",
                v.x, v.y, v.z
            ));
        }
        human.push(format!("compatible-product check: {}", if clean { "clean" } else { "failed" }));
        let result = json!({
            "clean": clean,
            "linear_violations": linear,
            "quadratic_violations": quadratic,
        });
        return if clean {
            Ok(Outcome::ok(human, result))
        } else {
            Ok(Outcome::violated(human, result))
        };
    }

    let (rep, module_label) = load_module(&args.module, g, inputs)?;
    human.insert(1, format!("module: {module_label} (dimension {})", rep.module_dim()));
    let report = check_biderivation(g, &rep, &product, args.symmetric)?;
    let clean = report.is_clean();
    for v in &report.violations {
        human.push(describe_bider_violation(v));
    }
    human.push(format!("biderivation check: {}", if clean { "clean" } else { "failed" }));
    let result = json!({ "clean": clean, "violations": check_report_values(&report) });
    if clean {
        Ok(Outcome::ok(human, result))
    } else {
        Ok(Outcome::violated(human, result))
    }
}
