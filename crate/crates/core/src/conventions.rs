//! The sign conventions in force and the calibration checks that pin them.

use crate::catalog;
use crate::clifford::{mul_vec, CliffordRep};
use crate::linalg::Mat3;
use crate::spin::{covariant_spinor_derivative, dirac};

/// Threshold for calibration checks.
pub const CALIBRATION_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationCheck {
    pub name: String,
    pub residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConventionReport {
    pub statements: Vec<(&'static str, &'static str)>,
    pub checks: Vec<CalibrationCheck>,
}

impl ConventionReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn check(name: impl Into<String>, residual: f64) -> CalibrationCheck {
    CalibrationCheck {
        name: name.into(),
        residual,
        pass: residual <= CALIBRATION_TOLERANCE,
    }
}

fn missing(name: impl Into<String>) -> CalibrationCheck {
    CalibrationCheck {
        name: name.into(),
        residual: f64::INFINITY,
        pass: false,
    }
}

fn law_residual(entry: &catalog::CatalogEntry<f64>) -> Option<f64> {
    let field = entry.special_spinor?;
    let law = entry.spinor_law?;
    Some(
        (0..3)
            .map(|i| {
                let d = covariant_spinor_derivative(&entry.geometry, &field, i);
                (d - mul_vec(&law.column(i), &field.value)).max_abs()
            })
            .fold(0.0, f64::max),
    )
}

pub fn convention_report() -> ConventionReport {
    let statements = vec![
        ("gamma matrices", "gamma_j = -i sigma_j (Pauli)"),
        ("hermitian product", "<psi,phi> = sum psi_a conj(phi_a), linear in the first slot"),
        ("christoffel", "G[i][j][k] = <nabla_{e_i} e_j, e_k>"),
        ("spin connection", "nabla_i phi = e_i(phi) + 1/2 sum_{j<k} G[i][j][k] gamma_j gamma_k phi"),
        ("curvature", "R(X,Y) = nabla_[X,Y] - [nabla_X, nabla_Y], R_ijij = sectional curvature"),
        ("ricci", "Ric_jk = sum_i R_ijik"),
        ("mean curvature", "H = tr(A)/3 in Dirac residuals"),
        ("killing branch", "nabla_X phi = -eps/2 A(X)phi + eta X.T.phi + eps eta f X.phi + eta <X,T> phi"),
    ];

    let r = CliffordRep::<f64>::standard().residuals();
    let mut checks = vec![
        check("Clifford relation gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij", r.anticommutation),
        check("gamma_i anti-Hermitian", r.anti_hermitian),
        check("-gamma_1 gamma_2 gamma_3 = Id", r.volume),
        check("gamma_i gamma_j = gamma_k cyclically", r.cyclic),
    ];

    let mut ricci = 0.0f64;
    for kappa in [-2.0, -1.0, 0.0, 1.0, 2.0] {
        for tau in [0.5, 1.0, 2.0] {
            let g = catalog::e_kappa_tau(kappa, tau).expect("grid parameters are valid").geometry;
            let t2 = 2.0 * tau * tau;
            let expected = Mat3::diag(kappa - t2, kappa - t2, t2);
            ricci = ricci.max(g.ricci_matrix().max_abs_diff(&expected));
        }
    }
    checks.push(CalibrationCheck {
        name: "Ricci(E(kappa,tau)) calibration".into(),
        residual: ricci,
        pass: ricci <= 1e-10,
    });
    let sol = catalog::sol3::<f64>();
    checks.push(check(
        "Ricci(Sol3) calibration",
        sol.geometry.ricci_matrix().max_abs_diff(&Mat3::diag(0.0, 0.0, -2.0)),
    ));
    let alpha = 2.0f64;
    let tb = catalog::torus_bundle(alpha).expect("alpha > 1");
    let l2 = alpha.ln().powi(2);
    checks.push(check(
        "Ricci(T_B) calibration",
        tb.geometry.ricci_matrix().max_abs_diff(&Mat3::diag(0.0, 0.0, -2.0 * l2)),
    ));

    for (label, entry) in [
        ("E(kappa,tau) special spinor found", catalog::e_kappa_tau(1.0, 1.0).ok()),
        ("Sol3 special spinor found", Some(sol.clone())),
        ("T_B special spinor found", Some(tb.clone())),
    ] {
        match entry.as_ref().and_then(law_residual) {
            Some(res) => checks.push(check(label, res)),
            None => checks.push(missing(label)),
        }
    }

    match catalog::e_kappa_tau(4.0f64, 1.0) {
        Ok(round) => {
            let field = round.special_spinor.expect("special spinor present");
            let res = (dirac(&round.geometry, &field) + field.value.scale_real(1.5)).max_abs();
            checks.push(check("Dirac eigenvalue on round sphere is -3/2", res));
        }
        Err(_) => checks.push(missing("Dirac eigenvalue on round sphere is -3/2")),
    }

    ConventionReport { statements, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_build_calibrates() {
        let report = convention_report();
        for c in &report.checks {
            assert!(c.pass, "{} residual {}", c.name, c.residual);
        }
        assert!(report.pass());
        assert!(report.checks.iter().any(|c| c.name == "-gamma_1 gamma_2 gamma_3 = Id"));
    }
}
