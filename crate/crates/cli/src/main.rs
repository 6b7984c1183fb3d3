//! `spinim` command-line interface.

mod render;
mod source;

use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use spinim::catalog::{self, FixtureName};
use spinim::compatibility::check_compatibility;
use spinim::conventions::convention_report;
use spinim::io::{self, CatalogJson, CheckJson, ConventionsJson, KillingJson, ObstructJson};
use spinim::killing::killing_report;
use spinim::obstruction::obstruct;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "spinim", version, about = "Spinorial and Gauss-Codazzi checks for framed 3-manifolds")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Built-in geometry (flat, sol3, e-kappa-tau, torus-bundle) or a geometry JSON file
    #[arg(long, global = true)]
    geometry: Option<String>,

    /// Base curvature for e-kappa-tau
    #[arg(long, global = true, allow_negative_numbers = true)]
    kappa: Option<f64>,

    /// Bundle curvature for e-kappa-tau
    #[arg(long, global = true, allow_negative_numbers = true)]
    tau: Option<f64>,

    /// Eigenvalue for torus-bundle (default: golden ratio squared)
    #[arg(long, global = true)]
    alpha: Option<f64>,

    /// Built-in fixture: flat_plane, hypersphere, product_slice
    #[arg(long, global = true)]
    fixture: Option<String>,

    /// Immersion data JSON file
    #[arg(long, global = true)]
    data: Option<std::path::PathBuf>,

    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Gauss, Codazzi and structural residuals of immersion data
    Check,
    /// Non-immersibility into R^4 of an eta-Einstein geometry
    Obstruct,
    /// Killing, Dirac and norm-condition residuals of a spinor field
    Killing,
    /// List built-in geometries and fixtures
    CatalogList,
    /// Print sign conventions and their calibration checks
    Conventions,
}

const EXIT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn emit(format: Format, json: String, text: String) {
    match format {
        Format::Json => println!("{json}"),
        Format::Text => print!("{text}"),
    }
}

fn verdict(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED)
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    if !(cli.tolerance > 0.0 && cli.tolerance.is_finite()) {
        bail!("tolerance must be positive and finite, got {}", cli.tolerance);
    }
    let tol = cli.tolerance;
    match cli.command {
        Command::Check => {
            let src = source::resolve(cli)?;
            let data = src.require_data()?;
            let report = check_compatibility(&src.geometry, &data, tol)?;
            emit(
                cli.format,
                io::to_json(&CheckJson::new(&src.label, &report)),
                render::check(&src.label, &report),
            );
            Ok(verdict(report.pass()))
        }
        Command::Obstruct => {
            let src = source::resolve(cli)?;
            if src.data.is_some() {
                bail!("obstruct takes a geometry only");
            }
            let xi = src.geometry.xi_index.unwrap_or(2);
            let result = obstruct(&src.geometry, xi, tol)?;
            emit(
                cli.format,
                io::to_json(&ObstructJson::new(&src.label, &result)),
                render::obstruct(&src.label, &result),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Killing => {
            let src = source::resolve(cli)?;
            let data = src.require_data()?;
            let Some(field) = src.spinor else {
                bail!("no spinor field: add a \"spinor\" entry to the data file or use a geometry with a special spinor");
            };
            let report = killing_report(&src.geometry, &field, &data, tol)?;
            emit(
                cli.format,
                io::to_json(&KillingJson::new(&src.label, &data, &report)),
                render::killing(&src.label, &report),
            );
            Ok(verdict(report.pass()))
        }
        Command::CatalogList => {
            let mut entries = catalog::list::<f64>();
            entries.extend(FixtureName::ALL.map(catalog::build_fixture));
            emit(cli.format, io::to_json(&CatalogJson::new(&entries)), render::catalog(&entries));
            Ok(ExitCode::SUCCESS)
        }
        Command::Conventions => {
            let report = convention_report();
            emit(cli.format, io::to_json(&ConventionsJson::new(&report)), render::conventions(&report));
            Ok(verdict(report.pass()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
