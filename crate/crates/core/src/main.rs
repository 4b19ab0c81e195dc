use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use cubedom::constructions::{execute, resolve_plan, ConstructionReport, Method};
use cubedom::cube::{is_connected, DEFAULT_NMAX};
use cubedom::domination::is_dominating;
use cubedom::exact::{exact_gamma, exact_gamma_c, Budget, ExactOptions, Status};
use cubedom::hamming::build_hamming;
use cubedom::io::{parse_set, parse_tree, write_set, write_tree};
use cubedom::table::{build_table, render, TableFormat};
use cubedom::tree::verify_tree;
use cubedom::{CubeError, Result};

/// Dominating sets, connected dominating sets and leafy spanning trees of Q_n.
///
/// Vertex strings have n characters; the leftmost is coordinate n (the most
/// significant bit), so "011" in Q_3 is the vertex with coordinates 1 and 2 set.
#[derive(Parser)]
#[command(name = "cubedom", version)]
struct Cli {
    /// Largest dimension built as explicit vertex sets.
    #[arg(long, global = true, env = "CUBEDOM_NMAX", default_value_t = DEFAULT_NMAX)]
    n_max: u32,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the Hamming code of length 2^k - 1.
    Code {
        #[arg(long)]
        k: u32,
        /// Also list every codeword, one per line.
        #[arg(long)]
        list: bool,
    },
    /// Build a connected dominating set and spanning tree of Q_n.
    Construct {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        j: Option<u32>,
        /// Write the connected dominating set here (vertex per line).
        #[arg(long)]
        out_set: Option<PathBuf>,
        /// Write the spanning tree here.
        #[arg(long)]
        out_tree: Option<PathBuf>,
        /// Also print the report as one JSON record.
        #[arg(long)]
        json: bool,
    },
    /// Compute γ(Q_n) or γ_c(Q_n) exactly by branch and bound.
    Exact {
        #[arg(value_enum)]
        parameter: ParameterArg,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 100_000_000)]
        budget_nodes: u64,
        #[arg(long, default_value_t = 300)]
        budget_secs: u64,
        /// Write the witness set here instead of printing it.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Search without assuming vertex 0 is in the set.
        #[arg(long)]
        no_symmetry: bool,
    },
    /// Check a set or tree file.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Print the bound table for a range of dimensions.
    Table {
        #[arg(long, default_value_t = 2)]
        min_n: u32,
        #[arg(long)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Allow rows above n_max, reporting formula bounds only.
        #[arg(long)]
        formula_above_nmax: bool,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Check that a set file dominates Q_n (and is connected with --connected).
    Set {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        connected: bool,
    },
    /// Check that a tree file is a spanning tree of Q_n.
    Tree {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Hamming,
    Doubling,
    Expansion,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParameterArg {
    Gamma,
    GammaC,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Tsv,
    Markdown,
}

fn print_report(r: &ConstructionReport) {
    let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
    println!("n={}", r.n);
    println!("method={}", r.method);
    println!("N={}", r.base_dim);
    println!("j={}", r.j);
    println!("k={}", r.k.map(|k| k.to_string()).unwrap_or_else(|| "-".into()));
    println!("ds_size={}", r.ds_size);
    println!("set_size={}", opt(r.set_size));
    println!("cds_size={}", opt(r.cds_size));
    println!("leaf_count={}", opt(r.leaf_count));
    println!("bound_value={}", r.bound_value);
    println!("gamma_lower={}", r.gamma_lower);
    println!(
        "gamma_c_lower={}",
        r.gamma_c_lower.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
    );
    println!("ratio={:.6}", r.ratio);
    println!("explicit={}", r.explicit);
}

fn read(path: &PathBuf) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let n_max = cli.n_max;
    match cli.cmd {
        Cmd::Code { k, list } => {
            let code = build_hamming(k)?;
            println!("k={}", code.k);
            println!("N={}", code.length);
            println!("dimension={}", code.dimension());
            println!("codewords={}", code.codeword_count());
            for (i, row) in code.generator_rows.iter().enumerate() {
                println!("row{i}={}", row.to_text(code.length));
            }
            if list {
                if code.length > n_max {
                    return Err(CubeError::TooLarge { n: code.length, n_max });
                }
                print!("{}", write_set(&code.codewords()?));
            }
        }
        Cmd::Construct { n, method, k, j, out_set, out_tree, json } => {
            let method = match method {
                MethodArg::Hamming => Some(Method::Hamming),
                MethodArg::Doubling => Some(Method::Doubling),
                MethodArg::Expansion => Some(Method::Expansion),
                MethodArg::Auto => None,
            };
            let plan = resolve_plan(n, method, k, j)?;
            if (out_set.is_some() || out_tree.is_some()) && n > n_max {
                return Err(CubeError::TooLarge { n, n_max });
            }
            let built = execute(&plan, n_max)?;
            print_report(&built.report);
            if json {
                println!("{}", serde_json::to_string(&built.report).expect("report serializes"));
            }
            if let (Some(path), Some(set)) = (out_set, &built.set) {
                fs::write(path, write_set(set))?;
            }
            if let (Some(path), Some(tree)) = (out_tree, &built.tree) {
                fs::write(path, write_tree(tree))?;
            }
        }
        Cmd::Exact { parameter, n, budget_nodes, budget_secs, witness, no_symmetry } => {
            let opts = ExactOptions {
                budget: Budget { max_nodes: budget_nodes, max_time: Duration::from_secs(budget_secs) },
                translation_symmetry: !no_symmetry,
            };
            let result = match parameter {
                ParameterArg::Gamma => exact_gamma(n, opts)?,
                ParameterArg::GammaC => exact_gamma_c(n, opts)?,
            };
            println!("value={}", result.value);
            let status = match result.status {
                Status::Proven => "proven",
                Status::BudgetExhausted => "budget_exhausted",
            };
            println!("status={status}");
            println!("nodes={}", result.nodes_explored);
            match witness {
                Some(path) => {
                    fs::write(&path, write_set(&result.witness))?;
                    println!("witness={}", path.display());
                }
                None => print!("{}", write_set(&result.witness)),
            }
            if !result.is_proven() {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Verify { what: VerifyCmd::Set { n, file, connected } } => {
            let set = parse_set(&read(&file)?, n)?;
            let dominating = is_dominating(&set);
            let conn = !set.is_empty() && is_connected(&set)?;
            println!("size={}", set.len());
            println!("dominating={dominating}");
            println!("connected={conn}");
            if !dominating || (connected && !conn) {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Verify { what: VerifyCmd::Tree { n, file } } => {
            let tree = parse_tree(&read(&file)?, Some(n))?;
            let report = verify_tree(&tree);
            println!("edges={}", tree.edges.len());
            println!("leaf_count={}", report.leaf_count);
            println!("internal={}", report.internal_count);
            for v in &report.violations {
                println!("violation: {v}");
            }
            println!("valid={}", report.is_valid());
            if !report.is_valid() {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Table { min_n, max_n, format, formula_above_nmax } => {
            let rows = build_table(min_n, max_n, n_max, formula_above_nmax)?;
            let format = match format {
                FormatArg::Csv => TableFormat::Csv,
                FormatArg::Tsv => TableFormat::Tsv,
                FormatArg::Markdown => TableFormat::Markdown,
            };
            print!("{}", render(&rows, format));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}
