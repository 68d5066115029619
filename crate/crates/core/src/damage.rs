//! Local isotropic damage evolution with history irreversibility, plus the
//! Hashin-based directional factors and the mixing weight ψ.
//!
//! The scalar damage drives everything downstream: microscale stress is
//! `(1-ω)·L:ε`, and the reduced model's eigenstrain is `μ = ω·ε`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensor::SymTensor2;

/// Damage threshold strains for one phase. A phase without parameters never
/// damages (the "-" entries of the material tables).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DamageParams {
    /// Damage initiation strain κ_D.
    pub kappa_d: f64,
    /// Complete-failure strain κ_F.
    pub kappa_f: f64,
}

impl DamageParams {
    pub fn new(kappa_d: f64, kappa_f: f64) -> Result<Self> {
        if !(kappa_d > 0.0 && kappa_f > kappa_d) {
            return Err(Error::parameter(format!(
                "damage thresholds must satisfy 0 < kappa_d < kappa_f, got {kappa_d}, {kappa_f}"
            )));
        }
        Ok(DamageParams { kappa_d, kappa_f })
    }
}

/// Strain-valued strengths for the Hashin factors. Out-of-plane entries are
/// optional in plane problems.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Strengths {
    pub e11: f64,
    pub e22: f64,
    pub e12: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e13: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e23: Option<f64>,
}

impl Strengths {
    pub fn validate(&self) -> Result<()> {
        let mut all = vec![self.e11, self.e22, self.e12];
        all.extend(self.e13);
        all.extend(self.e23);
        if all.iter().any(|&s| s <= 0.0) {
            return Err(Error::parameter("strengths must be positive".to_string()));
        }
        Ok(())
    }
}

/// Running maximum of the driving strain; non-decreasing over any history.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct History {
    pub kappa: f64,
}

impl History {
    /// Irreversible update: κ' = max(κ, max principal strain of `eps`).
    pub fn update(&self, eps: &SymTensor2) -> History {
        History {
            kappa: self.kappa.max(eps.max_principal()),
        }
    }
}

/// Damage variable ω(κ) ∈ [0, 1]: zero up to κ_D, one beyond κ_F, and the
/// linear-softening closed form in between, so that (1-ω)·E·κ descends
/// linearly from E·κ_D at κ_D to zero at κ_F.
pub fn omega(kappa: f64, p: &DamageParams) -> f64 {
    if kappa <= p.kappa_d {
        0.0
    } else if kappa >= p.kappa_f {
        1.0
    } else {
        (p.kappa_f * (kappa - p.kappa_d) / (kappa * (p.kappa_f - p.kappa_d))).clamp(0.0, 1.0)
    }
}

/// Analytic dω/dκ; zero outside the open softening interval (one-sided at
/// the kinks).
pub fn domega_dkappa(kappa: f64, p: &DamageParams) -> f64 {
    if kappa <= p.kappa_d || kappa >= p.kappa_f {
        0.0
    } else {
        p.kappa_f * p.kappa_d / (kappa * kappa * (p.kappa_f - p.kappa_d))
    }
}

/// Strain components in the ply frame used by the Hashin factors. 2D tensors
/// embed with all 3-indexed components zero.
#[derive(Debug, Clone, Copy, Default)]
pub struct PlyStrain {
    pub e11: f64,
    pub e22: f64,
    pub e33: f64,
    pub e23: f64,
    pub e13: f64,
    pub e12: f64,
}

impl From<&SymTensor2> for PlyStrain {
    fn from(t: &SymTensor2) -> Self {
        PlyStrain {
            e11: t.t11(),
            e22: t.t22(),
            e12: t.t12(),
            ..Default::default()
        }
    }
}

/// Fiber-direction failure factor:
/// (ε11/𝔈11)² + (ε12/𝔈12)² + (ε13/𝔈13)²; the 13 term drops in 2D.
pub fn hashin_fiber(eps: &PlyStrain, s: &Strengths) -> Result<f64> {
    let mut r = (eps.e11 / s.e11).powi(2) + (eps.e12 / s.e12).powi(2);
    if eps.e13 != 0.0 {
        let e13 = s.e13.ok_or_else(|| {
            Error::parameter("nonzero eps13 requires the e13 strength".to_string())
        })?;
        r += (eps.e13 / e13).powi(2);
    }
    Ok(r)
}

/// Transverse failure factor:
/// (ε22/𝔈22)² + (ε33/𝔈22)² + (ε23² - ε22·ε33)/𝔈23² + (ε12² + ε13²)/𝔈12².
pub fn hashin_matrix(eps: &PlyStrain, s: &Strengths) -> Result<f64> {
    let mut r = (eps.e22 / s.e22).powi(2) + (eps.e12 * eps.e12) / (s.e12 * s.e12);
    if eps.e33 != 0.0 || eps.e23 != 0.0 {
        let e23 = s.e23.ok_or_else(|| {
            Error::parameter("out-of-plane strain requires the e23 strength".to_string())
        })?;
        r += (eps.e33 / s.e22).powi(2);
        r += (eps.e23 * eps.e23 - eps.e22 * eps.e33) / (e23 * e23);
    }
    if eps.e13 != 0.0 {
        r += (eps.e13 * eps.e13) / (s.e12 * s.e12);
    }
    Ok(r)
}

/// Mixing weight ψ = 𝔯_f / (𝔯_f + 𝔯_m), with the undamaged-state fallback 0.5
/// when both factors vanish (the value is irrelevant there since D̄ = 0).
pub fn psi(rf: f64, rm: f64) -> f64 {
    if rf == 0.0 && rm == 0.0 {
        0.5
    } else {
        rf / (rf + rm)
    }
}
