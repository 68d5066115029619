//! Symmetric tensor algebra in the orthonormal (Mandel) component convention.
//!
//! A plane-strain symmetric second-order tensor is stored as the component
//! vector `[t11, t22, √2·t12]`. Fourth-order tensors with minor symmetries are
//! 3×3 matrices acting on those vectors. The √2 scaling makes double
//! contraction an ordinary dot product and turns transposes/inverses of the
//! influence-tensor equations into literal matrix operations (no Voigt
//! engineering-shear factors to track).

use nalgebra::{Matrix2, Matrix3, Vector2, Vector3};
use serde::{Deserialize, Serialize};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

pub const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Symmetric second-order tensor (2D plane problems), Mandel components
/// `[t11, t22, √2·t12]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SymTensor2 {
    v: [f64; 3],
}

impl SymTensor2 {
    pub const ZERO: SymTensor2 = SymTensor2 { v: [0.0; 3] };

    /// Construct from tensor components (`t12` is the tensor shear component,
    /// not the Mandel-scaled one).
    pub fn new(t11: f64, t22: f64, t12: f64) -> Self {
        SymTensor2 {
            v: [t11, t22, SQRT_2 * t12],
        }
    }

    pub fn from_mandel(v: [f64; 3]) -> Self {
        SymTensor2 { v }
    }

    pub fn mandel(&self) -> [f64; 3] {
        self.v
    }

    pub fn as_vector(&self) -> Vector3<f64> {
        Vector3::from(self.v)
    }

    pub fn t11(&self) -> f64 {
        self.v[0]
    }

    pub fn t22(&self) -> f64 {
        self.v[1]
    }

    /// Tensor shear component t12 (Mandel storage divided by √2).
    pub fn t12(&self) -> f64 {
        self.v[2] / SQRT_2
    }

    pub fn to_matrix(&self) -> Matrix2<f64> {
        let s = self.t12();
        Matrix2::new(self.v[0], s, s, self.v[1])
    }

    pub fn from_matrix(m: &Matrix2<f64>) -> Self {
        SymTensor2::new(m[(0, 0)], m[(1, 1)], 0.5 * (m[(0, 1)] + m[(1, 0)]))
    }

    /// Double contraction `a : b` (dot product of Mandel vectors).
    pub fn ddot(&self, other: &SymTensor2) -> f64 {
        self.v[0] * other.v[0] + self.v[1] * other.v[1] + self.v[2] * other.v[2]
    }

    /// Mandel 2-norm, equal to √(t : t).
    pub fn norm(&self) -> f64 {
        self.ddot(self).sqrt()
    }

    pub fn trace(&self) -> f64 {
        self.v[0] + self.v[1]
    }

    /// Largest eigenvalue of the full tensor form (closed-form 2×2 solution).
    pub fn max_principal(&self) -> f64 {
        let avg = 0.5 * (self.v[0] + self.v[1]);
        let t12 = self.t12();
        let r = (0.25 * (self.v[0] - self.v[1]).powi(2) + t12 * t12).sqrt();
        avg + r
    }

    /// Unit eigenvector for the largest eigenvalue. Falls back to e1 when the
    /// eigenvalues are degenerate.
    pub fn max_principal_direction(&self) -> Vector2<f64> {
        let t12 = self.t12();
        let phi = 0.5 * f64::atan2(2.0 * t12, self.v[0] - self.v[1]);
        Vector2::new(phi.cos(), phi.sin())
    }

    /// Mandel representation of n⊗n for the max-principal direction; this is
    /// ∂(max principal)/∂t wherever the eigenvalues are distinct.
    pub fn max_principal_dyad(&self) -> SymTensor2 {
        let n = self.max_principal_direction();
        SymTensor2::new(n.x * n.x, n.y * n.y, n.x * n.y)
    }

    /// Components of the same tensor in a frame rotated by `theta`.
    pub fn rotate(&self, theta: f64) -> SymTensor2 {
        let r = rotation_matrix(theta);
        SymTensor2 {
            v: (r * self.as_vector()).into(),
        }
    }

    /// Dyadic product a⊗b as a map on Mandel vectors.
    pub fn outer(&self, other: &SymTensor2) -> Tensor4 {
        Tensor4 {
            m: self.as_vector() * other.as_vector().transpose(),
        }
    }
}

impl Add for SymTensor2 {
    type Output = SymTensor2;
    fn add(self, rhs: SymTensor2) -> SymTensor2 {
        SymTensor2 {
            v: [
                self.v[0] + rhs.v[0],
                self.v[1] + rhs.v[1],
                self.v[2] + rhs.v[2],
            ],
        }
    }
}

impl Sub for SymTensor2 {
    type Output = SymTensor2;
    fn sub(self, rhs: SymTensor2) -> SymTensor2 {
        SymTensor2 {
            v: [
                self.v[0] - rhs.v[0],
                self.v[1] - rhs.v[1],
                self.v[2] - rhs.v[2],
            ],
        }
    }
}

impl Neg for SymTensor2 {
    type Output = SymTensor2;
    fn neg(self) -> SymTensor2 {
        SymTensor2 {
            v: [-self.v[0], -self.v[1], -self.v[2]],
        }
    }
}

impl Mul<f64> for SymTensor2 {
    type Output = SymTensor2;
    fn mul(self, s: f64) -> SymTensor2 {
        SymTensor2 {
            v: [self.v[0] * s, self.v[1] * s, self.v[2] * s],
        }
    }
}

impl AddAssign for SymTensor2 {
    fn add_assign(&mut self, rhs: SymTensor2) {
        for k in 0..3 {
            self.v[k] += rhs.v[k];
        }
    }
}

impl SubAssign for SymTensor2 {
    fn sub_assign(&mut self, rhs: SymTensor2) {
        for k in 0..3 {
            self.v[k] -= rhs.v[k];
        }
    }
}

/// Minor-symmetric fourth-order tensor as a 3×3 matrix on Mandel vectors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tensor4 {
    m: Matrix3<f64>,
}

impl Tensor4 {
    pub fn zero() -> Self {
        Tensor4 {
            m: Matrix3::zeros(),
        }
    }

    pub fn identity() -> Self {
        Tensor4 {
            m: Matrix3::identity(),
        }
    }

    pub fn from_matrix(m: Matrix3<f64>) -> Self {
        Tensor4 { m }
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[(i, j)]
    }

    /// Double contraction with a second-order tensor (matrix–vector product).
    pub fn apply(&self, t: &SymTensor2) -> SymTensor2 {
        SymTensor2 {
            v: (self.m * t.as_vector()).into(),
        }
    }

    /// Double contraction with another fourth-order tensor (matrix product).
    pub fn compose(&self, other: &Tensor4) -> Tensor4 {
        Tensor4 { m: self.m * other.m }
    }

    pub fn transpose(&self) -> Tensor4 {
        Tensor4 {
            m: self.m.transpose(),
        }
    }

    pub fn inverse(&self) -> Result<Tensor4> {
        self.m
            .try_inverse()
            .map(|m| Tensor4 { m })
            .ok_or_else(|| Error::structural("singular fourth-order tensor"))
    }

    pub fn scale(&self, s: f64) -> Tensor4 {
        Tensor4 { m: self.m * s }
    }

    /// Max relative asymmetry |M - Mᵀ| / |M|; zero for major-symmetric tensors.
    pub fn asymmetry(&self) -> f64 {
        let d = self.m - self.m.transpose();
        let n = self.m.norm();
        if n == 0.0 {
            0.0
        } else {
            d.norm() / n
        }
    }

    pub fn symmetrized(&self) -> Tensor4 {
        Tensor4 {
            m: 0.5 * (self.m + self.m.transpose()),
        }
    }

    /// Components of the same tensor in a frame rotated by `theta`:
    /// `R(θ) · M · R(θ)ᵀ` with the orthogonal Mandel rotation matrix.
    pub fn rotate(&self, theta: f64) -> Tensor4 {
        let r = rotation_matrix(theta);
        Tensor4 {
            m: r * self.m * r.transpose(),
        }
    }

    /// Isotropic plane-strain stiffness.
    ///
    /// In Mandel components the shear diagonal entry is 2G = E/(1+ν).
    pub fn isotropic_plane_strain(e: f64, nu: f64) -> Result<Tensor4> {
        if e <= 0.0 {
            return Err(Error::parameter(format!(
                "Young's modulus must be positive, got {e}"
            )));
        }
        if !(-1.0 < nu && nu < 0.5) {
            return Err(Error::parameter(format!(
                "Poisson's ratio must lie in (-1, 0.5), got {nu}"
            )));
        }
        let lambda = e * nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
        let mu = e / (2.0 * (1.0 + nu));
        let d = lambda + 2.0 * mu;
        Ok(Tensor4 {
            m: Matrix3::new(d, lambda, 0.0, lambda, d, 0.0, 0.0, 0.0, 2.0 * mu),
        })
    }
}

impl Add for Tensor4 {
    type Output = Tensor4;
    fn add(self, rhs: Tensor4) -> Tensor4 {
        Tensor4 { m: self.m + rhs.m }
    }
}

impl Sub for Tensor4 {
    type Output = Tensor4;
    fn sub(self, rhs: Tensor4) -> Tensor4 {
        Tensor4 { m: self.m - rhs.m }
    }
}

impl AddAssign for Tensor4 {
    fn add_assign(&mut self, rhs: Tensor4) {
        self.m += rhs.m;
    }
}

impl Mul<f64> for Tensor4 {
    type Output = Tensor4;
    fn mul(self, s: f64) -> Tensor4 {
        Tensor4 { m: self.m * s }
    }
}

/// Orthogonal Mandel-basis rotation: `rotation_matrix(θ) · t` gives the
/// components of `t` in the frame whose first axis is at +θ from the old one.
pub fn rotation_matrix(theta: f64) -> Matrix3<f64> {
    let c = theta.cos();
    let s = theta.sin();
    let cs = c * s;
    Matrix3::new(
        c * c,
        s * s,
        SQRT_2 * cs,
        s * s,
        c * c,
        -SQRT_2 * cs,
        -SQRT_2 * cs,
        SQRT_2 * cs,
        c * c - s * s,
    )
}

/// 3D Mandel helpers. Only the pieces needed to keep the component convention
/// dimension-generic; the pipeline itself runs plane-strain end-to-end.
pub mod dim3 {
    use nalgebra::{Matrix3, SMatrix};

    use crate::error::{Error, Result};

    /// Isotropic 3D stiffness as a 6×6 Mandel matrix, component order
    /// `[11, 22, 33, √2·23, √2·13, √2·12]`.
    pub fn isotropic_stiffness(e: f64, nu: f64) -> Result<SMatrix<f64, 6, 6>> {
        if e <= 0.0 {
            return Err(Error::parameter(format!(
                "Young's modulus must be positive, got {e}"
            )));
        }
        if !(-1.0 < nu && nu < 0.5) {
            return Err(Error::parameter(format!(
                "Poisson's ratio must lie in (-1, 0.5), got {nu}"
            )));
        }
        let lambda = e * nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
        let mu = e / (2.0 * (1.0 + nu));
        let mut m = SMatrix::<f64, 6, 6>::zeros();
        for i in 0..3 {
            for j in 0..3 {
                m[(i, j)] = lambda;
            }
            m[(i, i)] = lambda + 2.0 * mu;
            m[(i + 3, i + 3)] = 2.0 * mu;
        }
        Ok(m)
    }

    /// Largest eigenvalue of a 3D symmetric tensor given as a full matrix.
    pub fn max_principal(m: &Matrix3<f64>) -> f64 {
        let sym = 0.5 * (m + m.transpose());
        sym.symmetric_eigenvalues().max()
    }
}
