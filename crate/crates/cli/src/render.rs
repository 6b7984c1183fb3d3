use std::fmt::Write;

use spinim::catalog::CatalogEntry;
use spinim::compatibility::CompatibilityReport;
use spinim::conventions::ConventionReport;
use spinim::killing::KillingReport;
use spinim::obstruction::ObstructionResult;
use spinim::Mat3f64;

fn mark(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

fn mat(m: &Mat3f64) -> String {
    let rows: Vec<String> = m
        .0
        .iter()
        .map(|r| format!("[{:.6}, {:.6}, {:.6}]", r[0], r[1], r[2]))
        .collect();
    format!("[{}]", rows.join(", "))
}

pub fn check(label: &str, r: &CompatibilityReport<f64>) -> String {
    let mut s = String::new();
    let (i, j, k) = r.gauss_worst;
    let (ci, cj) = r.codazzi_worst;
    writeln!(s, "geometry   {label}").unwrap();
    writeln!(s, "gauss      {:.3e}  {}  worst (e{}, e{}, e{})", r.gauss, mark(r.gauss_pass()), i + 1, j + 1, k + 1).unwrap();
    writeln!(s, "codazzi    {:.3e}  {}  worst (e{}, e{})", r.codazzi, mark(r.codazzi_pass()), ci + 1, cj + 1).unwrap();
    match r.structural {
        Some(st) => {
            writeln!(s, "nabla_T    {:.3e}  {}", st.nabla_t, mark(st.nabla_t <= r.tolerance)).unwrap();
            writeln!(s, "df         {:.3e}  {}", st.df, mark(st.df <= r.tolerance)).unwrap();
            writeln!(s, "unit_norm  {:.3e}  {}", st.unit_norm, mark(st.unit_norm <= r.tolerance)).unwrap();
        }
        None => writeln!(s, "structural n/a (space form)").unwrap(),
    }
    writeln!(s, "verdict    {} (tolerance {:e})", mark(r.pass()), r.tolerance).unwrap();
    s
}

pub fn obstruct(label: &str, r: &ObstructionResult<f64>) -> String {
    let mut s = String::new();
    writeln!(s, "geometry   {label}").unwrap();
    writeln!(s, "ricci      {}", mat(&r.ricci)).unwrap();
    writeln!(
        s,
        "split      lambda = {:.6}, eta = {:.6}, xi = e{}",
        r.split.lambda,
        r.split.eta_einstein,
        r.split.xi_index + 1
    )
    .unwrap();
    writeln!(s, "case       {}", r.case.as_str()).unwrap();
    for (a, res) in r.candidates.iter().zip(&r.codazzi_residuals) {
        writeln!(s, "candidate  {}  codazzi {:.3e}", mat(a), res).unwrap();
    }
    writeln!(s, "verdict    {}", r.verdict.as_str()).unwrap();
    s
}

pub fn killing(label: &str, r: &KillingReport<f64>) -> String {
    let mut s = String::new();
    writeln!(s, "geometry   {label}").unwrap();
    for (i, k) in r.killing.iter().enumerate() {
        writeln!(s, "killing e{} {:.3e}  {}", i + 1, k, mark(*k <= r.tolerance)).unwrap();
    }
    writeln!(s, "dirac      {:.3e}  {}  (H = tr A/3 = {:.6}; tr A/2 = {:.6})", r.dirac, mark(r.dirac <= r.tolerance), r.mean_curvature, r.half_trace).unwrap();
    for (i, n) in r.norm_condition.iter().enumerate() {
        writeln!(
            s,
            "norm e{}    {:.3e}  {}  (unscaled variant {:.3e})",
            i + 1,
            n,
            mark(n.abs() <= r.tolerance),
            r.norm_condition_unscaled[i]
        )
        .unwrap();
    }
    writeln!(s, "Q          {}", mat(&r.energy_momentum)).unwrap();
    match &r.reconstruction {
        Ok(rec) => writeln!(s, "A_rec      {}  killing {:.3e}", mat(&rec.a_rec), rec.killing_residual).unwrap(),
        Err(e) => writeln!(s, "A_rec      not recovered: {e}").unwrap(),
    }
    writeln!(s, "verdict    {} (tolerance {:e})", mark(r.pass()), r.tolerance).unwrap();
    s
}

pub fn catalog(entries: &[CatalogEntry<f64>]) -> String {
    let mut s = String::new();
    for e in entries {
        let params: Vec<String> = e.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut flags = Vec::new();
        if e.space_form {
            flags.push("space form");
        }
        if e.special_spinor.is_some() {
            flags.push("special spinor");
        }
        if !e.fixtures.is_empty() {
            flags.push("fixture");
        }
        writeln!(s, "{:<14} {:<22} {:<40} {}", e.name, e.geometry.name, params.join(" "), flags.join(", ")).unwrap();
    }
    s
}

pub fn conventions(r: &ConventionReport) -> String {
    let mut s = String::new();
    for (k, v) in &r.statements {
        writeln!(s, "{k}: {v}").unwrap();
    }
    writeln!(s).unwrap();
    for c in &r.checks {
        writeln!(s, "{}: {} ({:.1e})", c.name, mark(c.pass), c.residual).unwrap();
    }
    s
}
