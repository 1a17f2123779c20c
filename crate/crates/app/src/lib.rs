//! Command-line front end for `pizza-core`: fixture generation, file formats
//! (pizza and partition-tree JSON, profile CSV, SVG drawings) and the
//! subcommands of the `pizza` binary.

pub mod cli;
pub mod config;
pub mod document;
pub mod error;
pub mod generate;
pub mod svg;
pub mod tree;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::Parser;
use pizza_core::chain::{boundary_point_at, build_chain};
use pizza_core::partition::{check_disk_deficiency, fair_partition, verify_partition};
use pizza_core::sections::{find_corollary_section, find_simultaneous_section, profile, Body};
use pizza_core::Pizza;
use serde::Serialize;

use cli::{
    ChainArgs, Cli, Command, Common, DeficiencyArgs, GenerateArgs, Kind, PartitionArgs, ProfileArgs, Theorem1Args,
    VerifyArgs,
};
use config::RunConfig;
use document::PizzaDocument;
use error::{exit, AppError};
use tree::TreeDocument;

pub use error::ErrorReport;

/// Written into every JSON document this crate produces.
pub const FORMAT_VERSION: &str = "1";

pub const PIZZA_FILE: &str = "pizza.json";
pub const TREE_FILE: &str = "partition_tree.json";
pub const FAIRNESS_FILE: &str = "fairness_report.json";
pub const PARTITION_SVG: &str = "partition.svg";
pub const PROFILE_FILE: &str = "profile.csv";
pub const SECTION_FILE: &str = "section.json";
pub const SECTION_SVG: &str = "section.svg";
pub const CHAIN_FILE: &str = "chain_report.json";
pub const CHAIN_SVG: &str = "chain.svg";
pub const DEFICIENCY_FILE: &str = "deficiency_report.json";
pub const ERROR_FILE: &str = "error.json";

#[derive(Serialize)]
struct Versioned<'a, T: Serialize> {
    format_version: &'static str,
    #[serde(flatten)]
    body: &'a T,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("in-memory JSON serialization");
    s.push('\n');
    s
}

fn versioned_json<T: Serialize>(body: &T) -> String {
    to_json(&Versioned {
        format_version: FORMAT_VERSION,
        body,
    })
}

pub(crate) fn read_file(path: &Path) -> Result<String, AppError> {
    fs::read_to_string(path).map_err(|source| AppError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, AppError> {
    let path = dir.join(name);
    fs::create_dir_all(dir)
        .and_then(|_| fs::write(&path, contents))
        .map_err(|source| AppError::Write {
            path: path.clone(),
            source,
        })?;
    Ok(path)
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// process exit code. Failures are printed to stderr and, when the command
/// has an output directory, written to `error.json` there.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                exit::INVALID_INPUT
            } else {
                exit::SUCCESS
            };
        }
    };
    if cli.threads == 0 {
        eprintln!("error: --threads must be at least 1");
        return exit::INVALID_INPUT;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot start {} worker threads: {e}", cli.threads);
            return exit::NUMERICAL_FAILURE;
        }
    };
    match pool.install(|| dispatch(&cli.command)) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            if let Some(dir) = output_dir(&cli.command) {
                if let Err(e) = write_file(dir, ERROR_FILE, &to_json(&err.report())) {
                    eprintln!("error: {e}");
                }
            }
            err.exit_code()
        }
    }
}

fn output_dir(command: &Command) -> Option<&Path> {
    match command {
        Command::Generate(a) => a.output_dir.as_deref(),
        Command::Partition(a) => Some(&a.common.output_dir),
        Command::Profile(a) => Some(&a.common.output_dir),
        Command::Theorem1(a) => Some(&a.common.output_dir),
        Command::Chain(a) => Some(&a.common.output_dir),
        Command::Verify(a) => a.output_dir.as_deref(),
        Command::Deficiency(a) => Some(&a.output_dir),
    }
}

fn dispatch(command: &Command) -> Result<i32, AppError> {
    match command {
        Command::Generate(a) => cmd_generate(a),
        Command::Partition(a) => cmd_partition(a),
        Command::Profile(a) => cmd_profile(a),
        Command::Theorem1(a) => cmd_theorem1(a),
        Command::Chain(a) => cmd_chain(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Deficiency(a) => cmd_deficiency(a),
    }
}

fn run_config(common: &Common, n: usize, eps_fair: f64) -> Result<RunConfig, AppError> {
    let cfg = RunConfig {
        n,
        eps_sec: common.eps_sec,
        eps_fair,
        theta_samples: common.theta_samples,
        output_dir: Some(common.output_dir.clone()),
        ..RunConfig::default()
    };
    cfg.validate()?;
    Ok(cfg)
}

fn load(common: &Common) -> Result<Pizza, AppError> {
    Ok(PizzaDocument::load(&common.input)?.1)
}

fn announce(path: &Path) {
    println!("wrote {}", path.display());
}

fn cmd_generate(a: &GenerateArgs) -> Result<i32, AppError> {
    let cfg = RunConfig {
        disk_vertices: a.disk_vertices,
        seed: a.seed,
        output_dir: a.output_dir.clone(),
        ..RunConfig::default()
    };
    cfg.validate()?;
    let mut doc = match a.kind {
        Kind::DiskPair => generate::disk_pair(a.r, a.big_r, cfg.disk_vertices)?,
        Kind::SquarePair => generate::square_pair(a.a.unwrap_or(1.0), a.b)?,
        Kind::OffsetSquare => generate::offset_square(a.a.unwrap_or(0.8), a.b, a.x, a.y)?,
        Kind::RandomPair => generate::random_pair(cfg.seed)?,
    };
    if let (Some(name), Some(meta)) = (&a.name, doc.metadata.as_mut()) {
        meta.name = Some(name.clone());
    }
    match &cfg.output_dir {
        Some(dir) => announce(&write_file(dir, PIZZA_FILE, &doc.to_json())?),
        None => print!("{}", doc.to_json()),
    }
    Ok(exit::SUCCESS)
}

fn cmd_partition(a: &PartitionArgs) -> Result<i32, AppError> {
    let cfg = run_config(&a.common, a.n, a.tol)?;
    let pizza = load(&a.common)?;
    let tree = fair_partition(&pizza, cfg.n, &cfg.partition())?;
    let report = verify_partition(&pizza, &tree, cfg.eps_fair);
    let dir = &a.common.output_dir;
    announce(&write_file(dir, TREE_FILE, &TreeDocument::new(&tree).to_json())?);
    announce(&write_file(dir, FAIRNESS_FILE, &versioned_json(&report))?);
    if a.common.svg {
        announce(&write_file(dir, PARTITION_SVG, &svg::partition(&pizza, &tree))?);
    }
    if !report.fair {
        return Err(AppError::Unfair {
            dough: report.max_dough_deviation,
            topping: report.max_topping_deviation,
            tol: cfg.eps_fair,
        });
    }
    println!(
        "fair partition into {} slices: max deviation {:e} (dough), {:e} (topping)",
        report.n, report.max_dough_deviation, report.max_topping_deviation
    );
    Ok(exit::SUCCESS)
}

fn cmd_profile(a: &ProfileArgs) -> Result<i32, AppError> {
    let cfg = run_config(&a.common, 2, pizza_core::tol::EPS_FAIR)?;
    let pizza = load(&a.common)?;
    let p = profile(&pizza, a.alpha, Body::from(a.body), cfg.theta_samples, &cfg.search())?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| AppError::InvalidInput(format!("CSV encoding failed: {e}"));
    w.write_record(["theta", "t", "fraction"]).map_err(csv_err)?;
    for i in 0..p.thetas.len() {
        w.write_record([p.thetas[i], p.offsets[i], p.fractions[i]].map(|v| v.to_string()))
            .map_err(csv_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| AppError::InvalidInput(format!("CSV encoding failed: {e}")))?;
    let text = String::from_utf8(bytes).expect("CSV of numbers is ASCII");
    announce(&write_file(&a.common.output_dir, PROFILE_FILE, &text)?);
    Ok(exit::SUCCESS)
}

#[derive(Serialize)]
struct SectionRecord<'a> {
    kind: &'static str,
    /// Body sectioned at `alpha`; `beta` is measured in the other one.
    sectioned: Body,
    #[serde(flatten)]
    section: &'a pizza_core::sections::SimultaneousSection,
}

fn cmd_theorem1(a: &Theorem1Args) -> Result<i32, AppError> {
    let cfg = run_config(&a.common, 2, pizza_core::tol::EPS_FAIR)?;
    let pizza = load(&a.common)?;
    let (kind, sectioned, section) = if a.corollary {
        (
            "corollary",
            Body::Dough,
            find_corollary_section(&pizza, a.alpha, &cfg.search())?,
        )
    } else {
        (
            "simultaneous",
            Body::Topping,
            find_simultaneous_section(&pizza, a.alpha, &cfg.search())?,
        )
    };
    let record = SectionRecord {
        kind,
        sectioned,
        section: &section,
    };
    let dir = &a.common.output_dir;
    announce(&write_file(dir, SECTION_FILE, &versioned_json(&record))?);
    if a.common.svg {
        announce(&write_file(dir, SECTION_SVG, &svg::section(&pizza, &section))?);
    }
    println!("alpha {} beta {}", section.alpha, section.beta);
    Ok(exit::SUCCESS)
}

fn cmd_chain(a: &ChainArgs) -> Result<i32, AppError> {
    let cfg = run_config(&a.common, a.n, pizza_core::tol::EPS_FAIR)?;
    let pizza = load(&a.common)?;
    let body = match Body::from(a.body) {
        Body::Topping => pizza.topping(),
        Body::Dough => pizza.dough(),
    };
    if !a.start.is_finite() {
        return Err(AppError::InvalidInput(format!(
            "--start must be finite, got {}",
            a.start
        )));
    }
    let x0 = boundary_point_at(body, a.start);
    let report = build_chain(body, a.alpha, &x0, cfg.n, &cfg.search())?;
    let dir = &a.common.output_dir;
    announce(&write_file(dir, CHAIN_FILE, &versioned_json(&report))?);
    if a.common.svg {
        announce(&write_file(dir, CHAIN_SVG, &svg::chain(body, &report))?);
    }
    println!(
        "k {} tours {} closure residual {:e}",
        report.k, report.tours, report.closure_residual
    );
    Ok(exit::SUCCESS)
}

fn cmd_verify(a: &VerifyArgs) -> Result<i32, AppError> {
    if !(a.tol > 0.0 && a.tol < 1.0) {
        return Err(AppError::InvalidInput(format!(
            "--tol must lie in (0, 1), got {}",
            a.tol
        )));
    }
    let (_, pizza) = PizzaDocument::load(&a.input)?;
    let doc = TreeDocument::load(&a.tree)?;
    let tree = doc.node.to_tree(pizza.dough())?;
    let report = verify_partition(&pizza, &tree, a.tol);
    let json = versioned_json(&report);
    match &a.output_dir {
        Some(dir) => announce(&write_file(dir, FAIRNESS_FILE, &json)?),
        None => print!("{json}"),
    }
    Ok(if report.fair { exit::SUCCESS } else { exit::UNFAIR })
}

fn cmd_deficiency(a: &DeficiencyArgs) -> Result<i32, AppError> {
    let cfg = RunConfig {
        disk_vertices: a.disk_vertices,
        ..RunConfig::default()
    };
    cfg.validate()?;
    let report = check_disk_deficiency(a.r, a.big_r, cfg.disk_vertices, &a.betas, &cfg.search())?;
    announce(&write_file(&a.output_dir, DEFICIENCY_FILE, &versioned_json(&report))?);
    for e in &report.entries {
        println!("beta {} min slack {:e} margin {:e}", e.beta, e.min_slack, e.margin);
    }
    Ok(exit::SUCCESS)
}
