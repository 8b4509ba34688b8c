//! `aci` — exact commutative-algebra computations and the verification
//! harness, from the command line.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use aci_core::generate::instance_from_parts;
use aci_core::hilbert::{hilbert, length_artinian};
use aci_core::ideal::groebner_basis;
use aci_core::reduction::{core_of_maximal_ideal, expected_core};
use aci_core::socle::socle;
use aci_core::verify::{run_campaign, verify_instance, CampaignParams};
use aci_core::{Ideal, MonomialOrder, Poly, RingContext};

#[derive(Parser)]
#[command(name = "aci", version, about = "Exact ideal arithmetic and multiplicity-bound verification")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(value: OrderArg) -> Self {
        match value {
            OrderArg::Grevlex => MonomialOrder::GrevLex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the reduced Gröbner basis of the ideal in FILE.
    Gb {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
    },
    /// Print Hilbert data of R/I: dimension, series numerator, multiplicity.
    Hilbert { file: PathBuf },
    /// Print the multiplicity of R/I.
    Mult { file: PathBuf },
    /// Print the length of the Artinian quotient R/I.
    Length { file: PathBuf },
    /// Print the socle of the Artinian quotient R/I, degree by degree.
    Socle { file: PathBuf },
    /// Core of the maximal ideal modulo the regular sequence in FILE.
    Core {
        file: PathBuf,
        /// RNG seed for the general linear forms (default: ACI_SEED or 1).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Verify the multiplicity bound on the almost complete intersection in
    /// FILE (generators f_1, ..., f_{N+1}).
    Verify {
        file: PathBuf,
        /// 1-based index of the distinguished extra generator (default: the
        /// last one).
        #[arg(long = "dlast-index")]
        dlast_index: Option<usize>,
        /// Also run the Koszul homology / Euler characteristic checks.
        #[arg(long)]
        koszul: bool,
        /// RNG seed for the general linear forms (default: ACI_SEED or 1).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run a seeded verification campaign and append one record per trial
    /// to --out.
    Campaign {
        #[arg(long)]
        n: usize,
        /// Degrees of the regular sequence, comma separated (e.g. 2,2).
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        /// Degree of the extra generator.
        #[arg(long)]
        dlast: u32,
        #[arg(long)]
        trials: u32,
        /// Base seed; trial i uses seed + i (default: ACI_SEED or 1).
        #[arg(long)]
        seed: Option<u64>,
        /// Run the Koszul checks on the first K trials.
        #[arg(long = "koszul-first", default_value_t = 5)]
        koszul_first: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

/// On-disk ideal description.
#[derive(Debug, Deserialize)]
struct IdealFile {
    vars: Vec<String>,
    gens: Vec<String>,
    #[serde(default)]
    order: Option<String>,
}

fn load_ideal_file(path: &Path) -> Result<(RingContext, Vec<Poly>, Option<MonomialOrder>)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let parsed: IdealFile = toml::from_str(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    let ctx = RingContext::new(parsed.vars.clone())?;
    let gens = parsed
        .gens
        .iter()
        .map(|s| ctx.poly(s).with_context(|| format!("parsing generator `{s}`")))
        .collect::<Result<Vec<_>>>()?;
    let order = match parsed.order.as_deref() {
        None => None,
        Some("grevlex") => Some(MonomialOrder::GrevLex),
        Some("lex") => Some(MonomialOrder::Lex),
        Some(other) => bail!("unknown order `{other}` (expected grevlex or lex)"),
    };
    Ok((ctx, gens, order))
}

fn load_ideal(path: &Path) -> Result<(Ideal, Option<MonomialOrder>)> {
    let (_, gens, order) = load_ideal_file(path)?;
    Ok((Ideal::new(gens)?, order))
}

fn default_seed(cli_seed: Option<u64>) -> u64 {
    cli_seed
        .or_else(|| std::env::var("ACI_SEED").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Gb { file, order } => {
            let (ideal, file_order) = load_ideal(&file)?;
            let order = file_order.unwrap_or(order.into());
            let gb = groebner_basis(&ideal, order);
            for g in gb.elements() {
                println!("{g}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Hilbert { file } => {
            let (ideal, _) = load_ideal(&file)?;
            let data = hilbert(&ideal)?;
            println!("dim R/I = {}", data.dim);
            println!("numerator Q(t) = {}", data.numerator);
            println!("multiplicity e(R/I) = {}", data.multiplicity);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Mult { file } => {
            let (ideal, _) = load_ideal(&file)?;
            println!("{}", hilbert(&ideal)?.multiplicity);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Length { file } => {
            let (ideal, _) = load_ideal(&file)?;
            println!("{}", length_artinian(&ideal)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Socle { file } => {
            let (ideal, _) = load_ideal(&file)?;
            let data = socle(&ideal)?;
            for (degree, dim) in &data.by_degree {
                println!("degree {degree}: dimension {dim}");
            }
            for g in &data.generators {
                println!("generator: {g}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Core { file, seed } => {
            let (_, gens, _) = load_ideal_file(&file)?;
            let seed = default_seed(seed);
            let out = core_of_maximal_ideal(&gens, seed)?;
            println!("r = {}", out.r);
            for l in &out.ells {
                println!("linear form: {l}");
            }
            for g in out.core.generators() {
                println!("core generator: {g}");
            }
            let lemma = aci_core::ideal::ideal_equal(&out.core, &expected_core(&gens, out.r)?);
            println!("equals m^(r+1) + (f): {lemma}");
            Ok(if lemma { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Cmd::Verify { file, dlast_index, koszul, seed } => {
            let (_, mut gens, _) = load_ideal_file(&file)?;
            if gens.len() < 2 {
                bail!("verify needs at least two generators");
            }
            let index = dlast_index.unwrap_or(gens.len());
            if index == 0 || index > gens.len() {
                bail!("--dlast-index must be between 1 and {}", gens.len());
            }
            let f_last = gens.remove(index - 1);
            let inst = instance_from_parts(gens, f_last, default_seed(seed))?;
            let report = verify_instance(&inst, koszul)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            if report.passes() {
                Ok(ExitCode::SUCCESS)
            } else {
                let mut cert = inst.certificate();
                cert["report"] = serde_json::to_value(&report)?;
                eprintln!("counterexample certificate: {cert}");
                Ok(ExitCode::FAILURE)
            }
        }
        Cmd::Campaign { n, degrees, dlast, trials, seed, koszul_first, out } => {
            let params = CampaignParams {
                n,
                degrees,
                d_last: dlast,
                trials,
                base_seed: default_seed(seed),
                koszul_first,
                workers: None,
            };
            let summary = run_campaign(&params, &out)?;
            print!("{summary}");
            for cert in &summary.certificates {
                eprintln!("counterexample certificate: {cert}");
            }
            Ok(if summary.all_ok() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}
