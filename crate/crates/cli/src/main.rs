//! `dmw`: verification, constraint solving, degrees, branching, census and
//! block comparison for decomposition tables of unipotent blocks.
//!
//! Exit codes: 0 when everything passes, 1 on a failed check or an
//! inconsistent constraint system, 2 on unreadable or malformed input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dmw_chardata::{data_dir, format_census, load_table_file, series_census, BlockTable};
use dmw_constraints::{solve, table_constraints, Constraint, SolveError, SolveOptions};
use dmw_decomp::{permutation_identical, verify, VerifyOptions, DEFAULT_Q_SAMPLES};
use dmw_paramexpr::Assignment;
use dmw_symbols::{induce_one_box, restrict_one_box, ClassicalGroup};

#[derive(Parser)]
#[command(name = "dmw", version, about = "Decomposition matrices of unipotent blocks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every consistency check on a dataset.
    Verify {
        path: String,
        /// Values for unknowns, e.g. `a=1,b=0`.
        #[arg(long, value_parser = parse_assignment)]
        assign: Option<Assignment>,
        /// Scenario to apply before checking.
        #[arg(long)]
        scenario: Option<String>,
        /// Sample values of q for degree positivity, e.g. `2,3,5`.
        #[arg(long, value_delimiter = ',', value_parser = parse_q)]
        q: Vec<i64>,
    },
    /// Solve the constraints a dataset declares for its unknowns.
    Solve {
        path: String,
        /// Scenario to solve; the dataset's default scenario otherwise.
        #[arg(long)]
        scenario: Option<String>,
        /// Narrows a domain, e.g. `a=0..2`. Repeatable.
        #[arg(long = "domain", value_parser = parse_domain)]
        domains: Vec<(String, i64, i64)>,
    },
    /// Generic degree of a unipotent character of a classical group.
    Degree {
        #[arg(long)]
        group: String,
        #[arg(long)]
        label: String,
    },
    /// One-box Harish-Chandra induction or restriction between adjacent ranks.
    Branch {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        label: String,
        /// Inferred from the ranks when omitted.
        #[arg(long, value_enum)]
        direction: Option<Direction>,
    },
    /// Count the columns of a dataset by Harish-Chandra series.
    Census { path: String },
    /// Decide whether two datasets agree up to reordering rows and columns.
    Equiv { first: String, second: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Induce,
    Restrict,
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl ToString) -> Failure {
    Failure { code: 2, message: message.to_string() }
}

fn parse_assignment(text: &str) -> Result<Assignment, String> {
    text.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|pair| {
            let (k, v) = pair.split_once('=').ok_or_else(|| format!("expected name=value, found `{pair}`"))?;
            let v: i64 = v.trim().parse().map_err(|_| format!("`{v}` is not an integer"))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

fn parse_q(text: &str) -> Result<i64, String> {
    match text.trim().parse::<i64>() {
        Ok(q) if q >= 2 => Ok(q),
        _ => Err(format!("q samples must be integers at least 2, found `{text}`")),
    }
}

fn parse_domain(text: &str) -> Result<(String, i64, i64), String> {
    let (name, range) = text.split_once('=').ok_or_else(|| format!("expected name=lo..hi, found `{text}`"))?;
    let (lo, hi) = range.split_once("..").ok_or_else(|| format!("expected lo..hi, found `{range}`"))?;
    let num = |s: &str| s.trim().parse::<i64>().map_err(|_| format!("`{s}` is not an integer"));
    Ok((name.trim().to_string(), num(lo)?, num(hi)?))
}

/// Reads a dataset from `path`, falling back to the data directory for a
/// bare file name or dataset name.
fn load(path: &str) -> Result<BlockTable, Failure> {
    let direct = Path::new(path);
    let candidate: PathBuf = if direct.exists() {
        direct.to_path_buf()
    } else {
        let file = direct.file_name().map(PathBuf::from).unwrap_or_default();
        let mut p = data_dir().join(file);
        if p.extension().is_none() {
            p.set_extension("json");
        }
        if p.exists() {
            p
        } else {
            direct.to_path_buf()
        }
    };
    load_table_file(&candidate).map_err(input_error)
}

fn with_scenario(t: BlockTable, name: Option<&str>) -> Result<BlockTable, Failure> {
    match name {
        Some(s) => t.with_scenario(s).map_err(input_error),
        None => Ok(t),
    }
}

fn cmd_verify(path: &str, assign: Option<Assignment>, scenario: Option<String>, q: Vec<i64>) -> Result<bool, Failure> {
    let base = load(path)?;
    // Assignments naming unknowns the base table lacks refer to its default scenario.
    let scenario = scenario.or_else(|| {
        let needs = assign.as_ref().is_some_and(|s| s.keys().any(|k| !base.params.contains_key(k)));
        if needs {
            base.default_scenario.clone()
        } else {
            None
        }
    });
    let t = with_scenario(base, scenario.as_deref())?;
    if let Some(s) = &assign {
        if let Some(k) = s.keys().find(|k| !t.params.contains_key(*k)) {
            return Err(input_error(format!("`{}` has no unknown `{k}`", t.name)));
        }
    }
    let opts = VerifyOptions {
        q_samples: if q.is_empty() { DEFAULT_Q_SAMPLES.to_vec() } else { q },
        assignment: assign,
    };
    match &t.scenario {
        Some(s) => println!("table: {} (scenario {s})", t.name),
        None => println!("table: {}", t.name),
    }
    let checks = verify(&t, &opts);
    for c in &checks {
        println!("{c}");
    }
    Ok(checks.iter().all(|c| c.pass))
}

fn cmd_solve(path: &str, scenario: Option<String>, domains: Vec<(String, i64, i64)>) -> Result<bool, Failure> {
    let base = load(path)?;
    let scenario = scenario.or_else(|| base.default_scenario.clone());
    let t = with_scenario(base, scenario.as_deref())?;
    let mut cs = table_constraints(&t).map_err(|e| Failure { code: 1, message: e.to_string() })?;
    cs.extend(domains.iter().map(|(u, lo, hi)| Constraint::domain(u, *lo, *hi)));
    match &t.scenario {
        Some(s) => println!("table: {} (scenario {s})", t.name),
        None => println!("table: {}", t.name),
    }
    match solve(&t, &cs, &SolveOptions::default()) {
        Ok(r) => {
            print!("{r}");
            Ok(true)
        }
        Err(SolveError::Infeasible { reasons }) => {
            println!("survivors: 0");
            for r in reasons {
                println!("eliminated: {r}");
            }
            Ok(false)
        }
        Err(e @ SolveError::MissingDomain(_)) => Err(input_error(e)),
        Err(e) => Err(Failure { code: 1, message: e.to_string() }),
    }
}

fn cmd_degree(group: &str, label: &str) -> Result<bool, Failure> {
    let g = ClassicalGroup::parse(group).map_err(input_error)?;
    let d = g.parse_label(label).and_then(|l| l.generic_degree()).map_err(input_error)?;
    println!("{d}");
    Ok(true)
}

fn cmd_branch(from: &str, to: &str, label: &str, direction: Option<Direction>) -> Result<bool, Failure> {
    let g_from = ClassicalGroup::parse(from).map_err(input_error)?;
    let g_to = ClassicalGroup::parse(to).map_err(input_error)?;
    let inferred = if g_from.levi_below() == Some(g_to) {
        Direction::Restrict
    } else if g_to.levi_below() == Some(g_from) {
        Direction::Induce
    } else {
        return Err(input_error(format!("{to} is not adjacent to {from} in the branching chain")));
    };
    if direction.is_some_and(|d| d != inferred) {
        return Err(input_error(format!("cannot branch from {from} to {to} in that direction")));
    }
    let parsed = g_from.parse_label(label).map_err(input_error)?;
    let b = parsed
        .as_principal()
        .ok_or_else(|| input_error(format!("`{label}` is not a principal-series label")))?;
    let images = match inferred {
        Direction::Induce => induce_one_box(b),
        Direction::Restrict => restrict_one_box(b),
    };
    for (image, m) in images {
        println!("{m} {image}");
    }
    Ok(true)
}

fn cmd_census(path: &str) -> Result<bool, Failure> {
    let t = load(path)?;
    println!("{}", format_census(&series_census(&t)));
    Ok(true)
}

fn cmd_equiv(first: &str, second: &str) -> Result<bool, Failure> {
    let (t1, t2) = (load(first)?, load(second)?);
    match permutation_identical(&t1, &t2) {
        Some(w) => {
            println!("witness: {} -> {}", t1.name, t2.name);
            let rows: Vec<String> =
                w.rows.iter().enumerate().map(|(i, &j)| format!("{}={}", t1.rows[i].name, t2.rows[j].name)).collect();
            let cols: Vec<String> = w.cols.iter().enumerate().map(|(i, &j)| format!("{}={}", i + 1, j + 1)).collect();
            println!("rows: {}", rows.join(" "));
            println!("columns: {}", cols.join(" "));
            Ok(true)
        }
        None => {
            println!("NONE");
            Ok(false)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify { path, assign, scenario, q } => cmd_verify(&path, assign, scenario, q),
        Command::Solve { path, scenario, domains } => cmd_solve(&path, scenario, domains),
        Command::Degree { group, label } => cmd_degree(&group, &label),
        Command::Branch { from, to, label, direction } => cmd_branch(&from, &to, &label, direction),
        Command::Census { path } => cmd_census(&path),
        Command::Equiv { first, second } => cmd_equiv(&first, &second),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
