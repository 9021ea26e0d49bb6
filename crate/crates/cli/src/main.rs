use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Number, Value};
use symcoh::catalog;
use symcoh::checks::Suite;
use symcoh::exact_rank2::{conics_cohomology, SpFamily};
use symcoh::pairspec::{find_in_dirs, Index, PairFile};
use symcoh::{CohomologyTable, Scalar, SymmetricPair, VirtualModule, Weight, Q};

mod plot;

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "symcoh", version, about = "Line-bundle cohomology on complete symmetric varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct PairArgs {
    /// Catalog name (e.g. `conics`, `CnH4(4)`), a pair-spec file, or a name
    /// found in `SYMCOH_PAIR_PATH`.
    #[arg(long)]
    pair: String,
    /// Parameter for template pairs.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(clap::Args)]
struct LambdaArgs {
    /// Comma-separated coordinates; see `--ambient`.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    lambda: Vec<i64>,
    /// Read `--lambda` as full fundamental-weight coordinates instead of one
    /// value per restricted node.
    #[arg(long)]
    ambient: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Svg,
    Ascii,
}

#[derive(Subcommand)]
enum Command {
    /// Euler characteristic as a virtual module.
    Euler {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        lambda: LambdaArgs,
    },
    /// Cohomology table, exact (conics, CnH4) or the general upper bound.
    Cohomology {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        lambda: LambdaArgs,
        #[arg(long, conflicts_with = "bound")]
        exact: bool,
        #[arg(long)]
        bound: bool,
    },
    /// Nonvanishing degrees over a window of the special lattice.
    Regions {
        #[command(flatten)]
        pair: PairArgs,
        /// `x0:x1,y0:y1` in special-lattice coordinates.
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long, value_enum, default_value = "ascii")]
        emit: Emit,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a cross-validation suite (or `all`).
    Check {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// List built-in pairs and those found in `SYMCOH_PAIR_PATH`.
    CatalogList,
}

enum Failure {
    Input(String),
    Unbounded(String),
    Check,
    Io(String),
}

impl From<symcoh::Error> for Failure {
    fn from(e: symcoh::Error) -> Self {
        match e {
            symcoh::Error::UnboundedRegion(_) => Failure::Unbounded(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn pair_dirs() -> Vec<PathBuf> {
    std::env::var_os("SYMCOH_PAIR_PATH")
        .map(|v| std::env::split_paths(&v).collect())
        .unwrap_or_default()
}

/// The pair, its base name and the parameter it was built with.
fn load_pair(args: &PairArgs) -> CliResult<(SymmetricPair, String, Option<usize>)> {
    let (base, inline) = catalog::split_name(&args.pair)?;
    let n = inline.or(args.n);
    let path = Path::new(&args.pair);
    let file = if path.extension().is_some_and(|e| e == "toml") || path.is_file() {
        PairFile::load(path)?
    } else if let Ok(f) = catalog::file(&base) {
        f
    } else if let Some(p) = find_in_dirs(&base, &pair_dirs()) {
        PairFile::load(&p)?
    } else {
        return Err(symcoh::Error::UnknownPair(base).into());
    };
    let n = if file.is_template() { n } else { None };
    let pair = file.build(n)?;
    Ok((pair, file.name.clone(), n))
}

fn lambda_of(pair: &SymmetricPair, args: &LambdaArgs) -> CliResult<Weight> {
    let rank = pair.root_system().rank();
    let r = pair.rank_restricted();
    let l = if args.ambient {
        if args.lambda.len() != rank {
            return Err(Failure::Input(format!("--ambient expects {rank} coordinates, got {}", args.lambda.len())));
        }
        Weight::from_ints(&args.lambda)
    } else {
        if args.lambda.len() != r {
            return Err(Failure::Input(format!("--lambda expects {r} coordinates, got {}", args.lambda.len())));
        }
        let v: Vec<Q> = args.lambda.iter().map(|&x| Q::from_int(x)).collect();
        pair.representative_weight(&v)
    };
    if !pair.is_special(&l) {
        return Err(Failure::Input(format!("{l} is not in the special lattice of {}", pair.name())));
    }
    pair.special_ints(&l)?;
    Ok(l)
}

fn coords_json(w: &Weight) -> Value {
    match w.to_ints() {
        Some(v) => json!(v),
        None => json!(w.coords.iter().map(|c| symcoh::scalar::render(c)).collect::<Vec<_>>()),
    }
}

fn modules_json(pair: &SymmetricPair, m: &VirtualModule) -> CliResult<Value> {
    let rs = pair.root_system();
    let mut out = Vec::new();
    for (mu, &mult) in m.iter() {
        let dim = rs.weyl_dim(mu)?;
        let dim = Number::from_str(&dim.to_string()).map_err(|e| Failure::Io(e.to_string()))?;
        out.push(json!({ "weight": coords_json(mu), "mult": mult, "dim": dim }));
    }
    Ok(Value::Array(out))
}

fn print_json(v: &Value) -> CliResult<()> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Failure::Io(e.to_string()))?;
    s.push('\n');
    std::io::stdout().write_all(s.as_bytes())?;
    Ok(())
}

fn cmd_euler(p: &PairArgs, l: &LambdaArgs) -> CliResult<()> {
    let (pair, _, _) = load_pair(p)?;
    let lambda = lambda_of(&pair, l)?;
    let chi = symcoh::cohomology::euler_character(&pair, &lambda)?;
    print_json(&json!({
        "schema": SCHEMA,
        "pair": pair.name(),
        "lambda": coords_json(&lambda),
        "chi": modules_json(&pair, &chi)?,
    }))
}

fn cmd_cohomology(p: &PairArgs, l: &LambdaArgs, exact: bool) -> CliResult<()> {
    let (pair, base, n) = load_pair(p)?;
    let lambda = lambda_of(&pair, l)?;
    let table: CohomologyTable = if exact {
        match (base.as_str(), n) {
            ("conics", _) => conics_cohomology(&lambda)?,
            ("CnH4", Some(n)) => {
                let xy = pair.special_ints(&lambda)?;
                SpFamily::<Q>::new(n)?.cohomology(xy[0], xy[1])?
            }
            _ => {
                return Err(Failure::Input(format!(
                    "no exact formula for {}; use --bound",
                    pair.name()
                )))
            }
        }
    } else {
        symcoh::cohomology::bound_cohomology(&pair, &lambda)?
    };
    let mut records = Vec::new();
    for (d, m) in &table.by_degree {
        records.push(json!({
            "pair": pair.name(),
            "lambda": coords_json(&lambda),
            "degree": d,
            "modules": modules_json(&pair, m)?,
        }));
    }
    print_json(&json!({
        "schema": SCHEMA,
        "pair": pair.name(),
        "lambda": coords_json(&lambda),
        "mode": if exact { "exact" } else { "bound" },
        "records": records,
    }))
}

fn parse_window(s: &str) -> CliResult<[(i64, i64); 2]> {
    let bad = || Failure::Input(format!("window `{s}` is not of the form x0:x1,y0:y1"));
    let mut out = [(0, 0); 2];
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(bad());
    }
    for (slot, part) in out.iter_mut().zip(parts) {
        let (a, b) = part.split_once(':').ok_or_else(bad)?;
        let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
        if a > b {
            return Err(bad());
        }
        *slot = (a, b);
    }
    Ok(out)
}

fn cmd_regions(p: &PairArgs, window: &str, emit: Emit, out: Option<&Path>) -> CliResult<()> {
    let (pair, base, _) = load_pair(p)?;
    if pair.rank_restricted() != 2 {
        return Err(Failure::Input(format!(
            "{} has restricted rank {}; region plots need rank 2",
            pair.name(),
            pair.rank_restricted()
        )));
    }
    let win = parse_window(window)?;
    let grid = plot::Grid::compute(&pair, base == "conics", win)?;
    let text = match emit {
        Emit::Svg => plot::svg(&grid),
        Emit::Ascii => plot::ascii(&grid),
    };
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_check(suite: &str, seed: u64) -> CliResult<()> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let mut ok = true;
    for s in suites {
        for o in s.run::<Q>(seed)? {
            println!("[{}] {o}", s.name());
            ok &= o.passed();
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn index_json(i: &Index) -> Value {
    match i {
        Index::Int(v) => json!(v),
        Index::Expr(s) => json!(s),
    }
}

fn entry_json(f: &PairFile, source: &str) -> Value {
    json!({
        "name": f.name,
        "family": f.family,
        "rank": f.rank.as_ref().map(index_json),
        "template": f.is_template(),
        "min_n": f.min_n,
        "description": f.description,
        "source": source,
    })
}

fn cmd_catalog_list() -> CliResult<()> {
    let mut pairs = Vec::new();
    for name in catalog::names() {
        pairs.push(entry_json(&catalog::file(name)?, "builtin"));
    }
    for dir in pair_dirs() {
        let Ok(rd) = std::fs::read_dir(&dir) else {
            continue;
        };
        let mut paths: Vec<PathBuf> = rd
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|e| e == "toml"))
            .collect();
        paths.sort();
        for p in paths {
            match PairFile::load(&p) {
                Ok(f) => pairs.push(entry_json(&f, &p.display().to_string())),
                Err(e) => eprintln!("warning: skipping {}: {e}", p.display()),
            }
        }
    }
    print_json(&json!({ "schema": SCHEMA, "pairs": pairs }))
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Euler { pair, lambda } => cmd_euler(&pair, &lambda),
        Command::Cohomology { pair, lambda, exact, .. } => cmd_cohomology(&pair, &lambda, exact),
        Command::Regions { pair, window, emit, out } => cmd_regions(&pair, &window, emit, out.as_deref()),
        Command::Check { suite, seed } => cmd_check(&suite, seed),
        Command::CatalogList => cmd_catalog_list(),
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check => 1,
            Failure::Input(_) | Failure::Io(_) => 2,
            Failure::Unbounded(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Failure::Input(m) | Failure::Unbounded(m) | Failure::Io(m) = &f {
                eprintln!("error: {m}");
            }
            ExitCode::from(f.code())
        }
    }
}
