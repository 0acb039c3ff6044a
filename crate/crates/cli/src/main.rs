use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hodge_forge::constructor::{
    betti_advisory, evaluate, plan_betti, plan_middle_weight, plan_truncated, plan_weight_k, planner_constants,
    zc_certificate, Infeasible, Recipe,
};
use hodge_forge::inequalities::{
    dominates, family_witness, fourfold_check, hypersurface_euler, hypersurface_hodge, surface_check, threefold_check,
    Canonical, Family, FourfoldChern, FourfoldData, SurfaceData, ThreefoldChern, ThreefoldData,
};
use hodge_forge::invariants::{block_table, closed_form_aa, crosscheck, oracle};
use hodge_forge::json::{array_field, int_from_value, int_value, usize_field};
use hodge_forge::{BigInt, Betti, Diamond, Error, GroupSpec, OracleOptions, Partial, Truncated};
use serde_json::{json, Value};

const DEFAULT_MAX_GROUP: u64 = 1_000_000;
const DEFAULT_MAX_BASIS: u64 = 10_000_000;
const CAPS_VAR: &str = "HODGE_FORGE_CAPS";

#[derive(Parser)]
#[command(name = "hodge-forge", version, about = "Exact Hodge-number constructions, oracles and checkers")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Read the JSON input from a file instead of stdin.
    #[arg(long = "in", value_name = "PATH", global = true)]
    input: Option<PathBuf>,
    /// Worker threads for oracle sums.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest group the oracle may enumerate [default: 1000000].
    #[arg(long, global = true)]
    max_group: Option<u64>,
    /// Largest amount of monomial work the oracle may do [default: 10000000].
    #[arg(long, global = true)]
    max_basis: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Check a diamond, truncated diamond or Betti vector.
    Validate,
    /// Plan a weight-k Hodge structure: {"k", "n", "target"}.
    PlanWeight,
    /// Plan a truncated diamond: {"n", "h"} with null middle entries allowed.
    PlanTruncated,
    /// Plan a Betti vector: {"n", "b"}.
    PlanBetti,
    /// Plan a middle row: {"n", "target"}.
    PlanMiddle,
    /// Recompute the Hodge numbers of a recipe.
    Evaluate,
    /// Closed-form invariant dimensions of a block.
    Invariants(SpecArgs),
    /// Invariant dimensions by orbit averaging.
    Oracle(SpecArgs),
    /// Compare the oracle with the closed form.
    Crosscheck(SpecArgs),
    /// Single-type certificate of type (a,b), level c, dimension n.
    ZcCert {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        n: usize,
    },
    /// Surface inequalities: {"h10", "h20", "h11"}.
    CheckSurface,
    /// Threefold rules: {"h10", "h20", "h30", "h11", "h21"} plus optional Chern numbers.
    CheckThreefold,
    /// Fourfold rules: Hodge numbers plus optional Chern numbers and "canonical".
    CheckFourfold,
    /// Hodge numbers of a degree-d hypersurface of dimension n.
    Hypersurface {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Whether h^{r,s} dominates h^{p,q} in dimension n.
    Dominates(QueryArgs),
    /// Members of a family refuting domination.
    Family {
        #[command(flatten)]
        query: QueryArgs,
        /// First family index.
        #[arg(long, default_value_t = 1)]
        j: u32,
        /// Number of members.
        #[arg(long, default_value_t = 1)]
        count: u32,
        /// Family name; defaults to the first computable one.
        #[arg(long)]
        family: Option<String>,
    },
    /// Planner constants C(p, n) and their bounds.
    Constants {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct SpecArgs {
    /// Block G(a,b,g); without it the group spec is read as JSON.
    #[arg(long, requires_all = ["b", "g"])]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    g: Option<u32>,
}

#[derive(Args)]
struct QueryArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_pair)]
    rs: (usize, usize),
    #[arg(long, value_parser = parse_pair)]
    pq: (usize, usize),
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `a,b`, got `{s}`"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((num(a)?, num(b)?))
}

/// Why a command did not succeed.
enum Failure {
    Input(String),
    Engine(Error),
    Infeasible(Infeasible),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Engine(Error::Malformed(_) | Error::Contract(_)) => 2,
            Failure::Engine(Error::ResourceCap { .. }) => 3,
            Failure::Engine(_) => 1,
            Failure::Infeasible(i) if i.is_input_error() => 2,
            Failure::Infeasible(_) => 1,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Failure::Input(m) => json!({ "error": { "kind": "input", "message": m } }),
            Failure::Engine(e) => {
                let kind = match e {
                    Error::Malformed(_) => "malformed",
                    Error::Contract(_) => "contract",
                    Error::ResourceCap { .. } => "resource_cap",
                    Error::Internal(_) => "internal",
                    Error::NotComputable(_) => "not_computable",
                };
                json!({ "error": { "kind": kind, "message": e.to_string() } })
            }
            Failure::Infeasible(i) => json!({ "infeasible": i.to_json() }),
        }
    }
}

type Outcome = Result<(Value, bool), Failure>;

struct Context {
    input: Option<PathBuf>,
    opts: OracleOptions,
}

impl Context {
    fn read_json(&self) -> Result<Value, Failure> {
        let text = match &self.input {
            Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
            None => {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
                s
            }
        };
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("invalid JSON: {e}")))
    }
}

fn caps(global: &Global) -> Result<(u64, u64), Failure> {
    let (mut max_group, mut max_basis) = (DEFAULT_MAX_GROUP, DEFAULT_MAX_BASIS);
    if let Ok(spec) = std::env::var(CAPS_VAR) {
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let bad = || Failure::Input(format!("{CAPS_VAR}: cannot read `{part}`"));
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            let value: u64 = value.trim().parse().map_err(|_| bad())?;
            match key.trim() {
                "max_group" => max_group = value,
                "max_basis" => max_basis = value,
                _ => return Err(bad()),
            }
        }
    }
    Ok((global.max_group.unwrap_or(max_group), global.max_basis.unwrap_or(max_basis)))
}

fn field(v: &Value, key: &str) -> Result<BigInt, Failure> {
    let x = v.get(key).ok_or_else(|| Failure::Input(format!("missing field `{key}`")))?;
    Ok(int_from_value(x)?)
}

fn opt_field(v: &Value, key: &str) -> Result<Option<BigInt>, Failure> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(x) => Ok(Some(int_from_value(x)?)),
    }
}

fn int_list(v: &Value, key: &str) -> Result<Vec<BigInt>, Failure> {
    Ok(array_field(v, key)?.iter().map(int_from_value).collect::<hodge_forge::Result<_>>()?)
}

fn planned(r: Result<Recipe, Infeasible>) -> Result<Value, Failure> {
    r.map(|recipe| json!({ "recipe": recipe.to_json() })).map_err(Failure::Infeasible)
}

fn spec_from(args: &SpecArgs, ctx: &Context) -> Result<GroupSpec, Failure> {
    match (args.a, args.b, args.g) {
        (Some(a), Some(b), Some(g)) => Ok(GroupSpec::gabg(a, b, g)),
        _ => {
            let v = ctx.read_json()?;
            serde_json::from_value(v).map_err(|e| Failure::Input(format!("group spec: {e}")))
        }
    }
}

fn validate(v: &Value) -> Outcome {
    if v.get("b").is_some() {
        let report = Betti::from_json(v)?.validate();
        let ok = report.is_valid();
        return Ok((json!({ "kind": "betti", "report": report.to_json() }), ok));
    }
    let has_null = array_field(v, "h")?.iter().any(|row| row.as_array().is_some_and(|r| r.iter().any(Value::is_null)));
    let (kind, report) = if has_null {
        ("truncated", Truncated::from_json(v)?.validate())
    } else {
        ("diamond", Diamond::from_json(v)?.validate())
    };
    let ok = report.is_valid();
    Ok((json!({ "kind": kind, "report": report.to_json() }), ok))
}

fn threefold_input(v: &Value) -> Result<ThreefoldData<BigInt>, Failure> {
    Ok(ThreefoldData {
        h10: field(v, "h10")?,
        h20: field(v, "h20")?,
        h30: field(v, "h30")?,
        h11: field(v, "h11")?,
        h21: field(v, "h21")?,
        chern: ThreefoldChern { c1c2: opt_field(v, "c1c2")?, c1_cubed: opt_field(v, "c1_cubed")?, c3: opt_field(v, "c3")? },
    })
}

fn fourfold_input(v: &Value) -> Result<FourfoldData<BigInt>, Failure> {
    let canonical = match v.get("canonical").and_then(Value::as_str) {
        None => None,
        Some(s) => Some(Canonical::parse(s).ok_or_else(|| Failure::Input(format!("unknown canonical type `{s}`")))?),
    };
    Ok(FourfoldData {
        h10: field(v, "h10")?,
        h20: field(v, "h20")?,
        h30: field(v, "h30")?,
        h40: field(v, "h40")?,
        h11: field(v, "h11")?,
        h21: field(v, "h21")?,
        h31: field(v, "h31")?,
        h22: field(v, "h22")?,
        chern: FourfoldChern {
            c1_4: opt_field(v, "c1_4")?,
            c1_2c2: opt_field(v, "c1_2c2")?,
            c1c3: opt_field(v, "c1c3")?,
            c2_2: opt_field(v, "c2_2")?,
            c4: opt_field(v, "c4")?,
        },
        canonical,
    })
}

fn constants(n: usize) -> Outcome {
    let mut rows = Vec::new();
    let mut all = true;
    for p in 1..n.div_ceil(2) {
        let c = planner_constants(p, n)?;
        let (pb, nb) = (p as u128, n as u128);
        let bound_c = pb * (nb * nb - 2 * nb + 5);
        let bound_c1 = pb * (nb - 1) * (nb - 1);
        let bound_c2 = bound_c1 + 4 * pb;
        let checks = [4 * c.c <= bound_c, 4 * c.c1_max() <= bound_c1, 4 * c.c2 <= bound_c2];
        all &= checks.iter().all(|&b| b);
        let mut row = c.to_json();
        row["bound_c_times_4"] = int_value(&bound_c);
        row["bound_c1_times_4"] = int_value(&bound_c1);
        row["bound_c2_times_4"] = int_value(&bound_c2);
        row["within_bounds"] = json!(checks.iter().all(|&b| b));
        rows.push(row);
    }
    Ok((json!({ "n": n, "rows": rows, "all_within_bounds": all }), all))
}

fn family(query: &QueryArgs, j: u32, count: u32, name: Option<&str>, ctx: &Context) -> Outcome {
    let dom = dominates(query.n, query.rs, query.pq)?;
    let family = match name {
        Some(s) => Family::parse(s).ok_or_else(|| Failure::Input(format!("unknown family `{s}`")))?,
        None => *dom.families.first().ok_or_else(|| {
            Failure::Engine(Error::Contract(format!("no family refutes this query ({})", dom.tag)))
        })?,
    };
    if !family.computable() && dom.families.contains(&family) {
        let certificate = json!({
            "family": family.name(),
            "n": dom.n,
            "rs": [dom.rs.0, dom.rs.1],
            "pq": [dom.pq.0, dom.pq.1],
            "h_rs": "bounded",
            "h_pq": "unbounded, not computed",
        });
        let e = Error::NotComputable(format!("{} members have no computed middle Hodge numbers", family.name()));
        return Ok((json!({ "query": dom.to_json(), "not_computable": e.to_string(), "certificate": certificate }), false));
    }
    let witnesses = (j..j.saturating_add(count))
        .map(|i| family_witness(&dom, family, i, &ctx.opts).map(|w| w.to_json()))
        .collect::<hodge_forge::Result<Vec<_>>>()?;
    Ok((json!({ "query": dom.to_json(), "witnesses": witnesses }), true))
}

fn run(command: &Command, ctx: &Context) -> Outcome {
    match command {
        Command::Validate => validate(&ctx.read_json()?),
        Command::PlanWeight => {
            let v = ctx.read_json()?;
            let out = planned(plan_weight_k(usize_field(&v, "k")?, &int_list(&v, "target")?, usize_field(&v, "n")?))?;
            Ok((out, true))
        }
        Command::PlanTruncated => Ok((planned(plan_truncated(&Truncated::from_json(&ctx.read_json()?)?))?, true)),
        Command::PlanBetti => {
            let b = Betti::from_json(&ctx.read_json()?)?;
            let mut out = planned(plan_betti(&b))?;
            out["advisory"] = betti_advisory(&b).to_json();
            Ok((out, true))
        }
        Command::PlanMiddle => {
            let v = ctx.read_json()?;
            Ok((planned(plan_middle_weight(&int_list(&v, "target")?, usize_field(&v, "n")?))?, true))
        }
        Command::Evaluate => {
            let v = ctx.read_json()?;
            let recipe = Recipe::from_json(v.get("recipe").unwrap_or(&v))?;
            let d: Partial = evaluate(&recipe, &ctx.opts)?;
            Ok((json!({ "diamond": d.to_json(), "complete": d.is_complete() }), true))
        }
        Command::Invariants(args) => {
            let spec = spec_from(args, ctx)?;
            let mut out = json!({ "table": block_table(&spec, &ctx.opts)?.to_json() });
            if let GroupSpec::Gabg { a, b, g } = spec {
                if a == b {
                    let aa = closed_form_aa(a, g)?;
                    out["printed"] = aa.printed.to_json();
                    out["verified"] = json!(aa.verified);
                }
            }
            Ok((out, true))
        }
        Command::Oracle(args) => {
            let spec = spec_from(args, ctx)?;
            Ok((json!({ "table": oracle(&spec, None, &ctx.opts)?.to_json() }), true))
        }
        Command::Crosscheck(args) => {
            let spec = spec_from(args, ctx)?;
            let closed = block_table(&spec, &ctx.opts)?;
            let report = crosscheck(&spec, &closed, &ctx.opts)?;
            let ok = report.is_empty();
            Ok((json!({ "closed_form": closed.source().name(), "report": report.to_json() }), ok))
        }
        Command::ZcCert { a, b, c, n } => {
            let z = zc_certificate(*a, *b, *c, *n)?;
            z.validate()?;
            Ok((json!({ "certificate": z.to_json(), "valid": true }), true))
        }
        Command::CheckSurface => {
            let v = ctx.read_json()?;
            let r = surface_check(&SurfaceData { h10: field(&v, "h10")?, h20: field(&v, "h20")?, h11: field(&v, "h11")? });
            Ok((r.to_json(), r.passed()))
        }
        Command::CheckThreefold => {
            let r = threefold_check(&threefold_input(&ctx.read_json()?)?);
            Ok((r.to_json(), r.passed()))
        }
        Command::CheckFourfold => {
            let r = fourfold_check(&fourfold_input(&ctx.read_json()?)?);
            Ok((r.to_json(), r.passed()))
        }
        Command::Hypersurface { n, d } => {
            let v = hypersurface_hodge(*n, *d)?;
            let middle: Vec<Value> = (0..=*n).map(|q| int_value(v.get(n - q, q))).collect();
            let out = json!({
                "n": n,
                "d": d,
                "diamond": v.to_json(),
                "middle_row": middle,
                "euler": int_value(&v.euler_number()),
                "euler_formula": int_value(&hypersurface_euler(*n, *d)),
            });
            Ok((out, true))
        }
        Command::Dominates(q) => Ok((dominates(q.n, q.rs, q.pq)?.to_json(), true)),
        Command::Family { query, j, count, family: name } => family(query, *j, *count, name.as_deref(), ctx),
        Command::Constants { n } => constants(*n),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn render(v: &Value, path: &str, out: &mut Vec<String>) {
    let key = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(map) if map.contains_key("n") && map.get("h").is_some_and(Value::is_array) => {
            out.push(format!("{path}:"));
            for row in map["h"].as_array().into_iter().flatten() {
                let cells: Vec<String> = row.as_array().into_iter().flatten().map(scalar_text).collect();
                out.push(format!("  {}", cells.join(" ")));
            }
        }
        Value::Object(map) => {
            for (k, x) in map {
                render(x, &key(k), out);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            out.push(format!("{path}: {}", items.iter().map(scalar_text).collect::<Vec<_>>().join(" ")));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                render(x, &format!("{path}[{i}]"), out);
            }
        }
        other => out.push(format!("{path}: {}", scalar_text(other))),
    }
}

fn emit(v: &Value, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(v).expect("reports serialize")),
        Format::Table => {
            let mut lines = Vec::new();
            render(v, "", &mut lines);
            println!("{}", lines.join("\n"));
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = caps(&cli.global).and_then(|(max_group, max_basis)| {
        let ctx = Context {
            input: cli.global.input.clone(),
            opts: OracleOptions { jobs: cli.global.jobs, max_group, max_basis },
        };
        run(&cli.command, &ctx)
    });
    match result {
        Ok((report, ok)) => {
            emit(&report, cli.global.format);
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(failure) => {
            emit(&failure.to_json(), cli.global.format);
            if let Failure::Engine(e) = &failure {
                eprintln!("hodge-forge: {e}");
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
