use std::path::Path;

use anyhow::{bail, Context, Result};
use spinim::catalog::{self, CatalogEntry, FixtureName};
use spinim::{io, FrameGeometry64, FramedSpinorField64, ImmersionData64};

use crate::Cli;

/// Geometry plus whatever data and spinor the flags resolved to.
pub struct Source {
    pub label: String,
    pub geometry: FrameGeometry64,
    pub data: Option<ImmersionData64>,
    pub spinor: Option<FramedSpinorField64>,
}

impl Source {
    pub fn require_data(&self) -> Result<ImmersionData64> {
        match self.data {
            Some(d) => Ok(d),
            None => bail!("immersion data required: pass --data <file> or --fixture <name>"),
        }
    }
}

fn from_entry(label: String, entry: CatalogEntry<f64>) -> Source {
    Source {
        label,
        data: entry.fixtures.first().map(|f| f.data),
        spinor: entry.special_spinor,
        geometry: entry.geometry,
    }
}

fn reject_unused(cli: &Cli, used: &[&str]) -> Result<()> {
    for (name, set) in [
        ("kappa", cli.kappa.is_some()),
        ("tau", cli.tau.is_some()),
        ("alpha", cli.alpha.is_some()),
    ] {
        if set && !used.contains(&name) {
            bail!("--{name} does not apply to this geometry");
        }
    }
    Ok(())
}

fn builtin(cli: &Cli, name: &str) -> Result<Option<Source>> {
    let entry = match name {
        "flat" => {
            reject_unused(cli, &[])?;
            let mut e = catalog::build_fixture(FixtureName::FlatPlane);
            e.fixtures.clear();
            e
        }
        "sol3" => {
            reject_unused(cli, &[])?;
            catalog::sol3()
        }
        "e-kappa-tau" => {
            reject_unused(cli, &["kappa", "tau"])?;
            let (Some(kappa), Some(tau)) = (cli.kappa, cli.tau) else {
                bail!("e-kappa-tau needs both --kappa and --tau");
            };
            catalog::e_kappa_tau(kappa, tau)?
        }
        "torus-bundle" => {
            reject_unused(cli, &["alpha"])?;
            match cli.alpha {
                Some(alpha) => catalog::torus_bundle(alpha)?,
                None => catalog::torus_bundle_from_matrix([[2, 1], [1, 1]])?,
            }
        }
        _ => return Ok(None),
    };
    let label = entry.geometry.name.clone();
    Ok(Some(from_entry(label, entry)))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn resolve(cli: &Cli) -> Result<Source> {
    let mut src = match (&cli.fixture, &cli.geometry) {
        (Some(_), Some(_)) => bail!("--fixture and --geometry are mutually exclusive"),
        (None, None) => bail!("one of --geometry or --fixture is required"),
        (Some(name), None) => {
            reject_unused(cli, &[])?;
            let Some(fixture) = FixtureName::parse(name) else {
                bail!("unknown fixture {name:?} (expected flat_plane, hypersphere or product_slice)");
            };
            from_entry(name.clone(), catalog::build_fixture(fixture))
        }
        (None, Some(name)) => match builtin(cli, name)? {
            Some(src) => src,
            None => {
                let path = Path::new(name);
                if !path.is_file() {
                    bail!("unknown geometry {name:?}: not a built-in name or a readable file");
                }
                reject_unused(cli, &[])?;
                let geometry = io::parse_geometry(&read(path)?)
                    .with_context(|| format!("loading geometry {}", path.display()))?;
                Source {
                    label: geometry.name.clone(),
                    geometry,
                    data: None,
                    spinor: None,
                }
            }
        },
    };
    if let Some(path) = &cli.data {
        let (data, spinor) = io::parse_immersion(&read(path)?)
            .with_context(|| format!("loading immersion data {}", path.display()))?;
        src.data = Some(data);
        if spinor.is_some() {
            src.spinor = spinor;
        }
    }
    Ok(src)
}
