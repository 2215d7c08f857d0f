//! Family constructors and the algebra of 1+1 dimensional transforms.

use std::fmt;

use crate::error::{Error, Result};
use crate::factor::{gamma_antisymmetric, gamma_symmetric, Sign};
use crate::matrix::Mat2;
use crate::vector::TwoVector;
use crate::ENTRY_TOLERANCE;

/// Which construction produced a [`Transform`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BranchKind {
    /// `Λ(τ, K, V)`, even `γ`.
    SymmetricLambda,
    /// `L(τ, K, W)`, odd `γ`.
    AntisymmetricL,
    /// Result of composition, inversion or conjugation.
    Derived,
}

/// Velocity parameter of a family member, in units of `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Velocity {
    Finite(f64),
    /// The `V → ∞` limit of the symmetric family at negative `K`.
    AtInfinity,
}

impl fmt::Display for Velocity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Velocity::Finite(v) => write!(f, "{v}"),
            Velocity::AtInfinity => f.write_str("infinity"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyParams {
    pub tau: Sign,
    pub k: f64,
    pub vel: Velocity,
}

/// A linear map between two coordinate systems, with the family parameters
/// it was built from when it came out of a family constructor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transform {
    matrix: Mat2,
    branch: BranchKind,
    params: Option<FamilyParams>,
}

/// `L(−1, 1, W) = swap · Λ(1, 1, 1/W)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwapDecomposition {
    pub swapped: bool,
    pub boost: Transform,
}

/// Relative agreement required by [`Transform::refit`].
pub const REFIT_TOLERANCE: f64 = 1e-9;

fn family_matrix(gamma: f64, vel: f64) -> Mat2 {
    let off = -gamma * vel;
    Mat2::new(gamma, off, off, gamma)
}

impl Transform {
    pub const IDENTITY: Transform = Transform {
        matrix: Mat2::IDENTITY,
        branch: BranchKind::Derived,
        params: None,
    };

    /// `Λ(τ, K, V) = τ/sqrt(1 − K·V²) · [[1, −V], [−V, 1]]`.
    pub fn lambda(tau: Sign, k: f64, v: f64) -> Result<Transform> {
        let gamma = gamma_symmetric(k, v, tau)?;
        Ok(Transform {
            matrix: family_matrix(gamma, v),
            branch: BranchKind::SymmetricLambda,
            params: Some(FamilyParams {
                tau,
                k,
                vel: Velocity::Finite(v),
            }),
        })
    }

    /// Limit of `Λ(τ, K, V)` as `V → ∞`; exists only for `K < 0`, where
    /// `V·γ(V) → 1/sqrt(−K)` and `γ(V) → 0`.
    pub fn lambda_infinite_limit(tau: Sign, k: f64) -> Result<Transform> {
        if !(k < 0.0) || !k.is_finite() {
            return Err(Error::Domain(format!(
                "infinite-velocity limit requires finite k < 0, got {k}"
            )));
        }
        let off = -tau.value() / (-k).sqrt();
        Ok(Transform {
            matrix: Mat2::new(0.0, off, off, 0.0),
            branch: BranchKind::SymmetricLambda,
            params: Some(FamilyParams {
                tau,
                k,
                vel: Velocity::AtInfinity,
            }),
        })
    }

    /// `L(τ, K, W) = τ·(W/|W|)/sqrt(K·W² − 1) · [[1, −W], [−W, 1]]`.
    pub fn l(tau: Sign, k: f64, w: f64) -> Result<Transform> {
        let gamma = gamma_antisymmetric(k, w, tau)?;
        Ok(Transform {
            matrix: family_matrix(gamma, w),
            branch: BranchKind::AntisymmetricL,
            params: Some(FamilyParams {
                tau,
                k,
                vel: Velocity::Finite(w),
            }),
        })
    }

    /// Wraps an arbitrary invertible matrix as a derived transform.
    pub fn from_matrix(matrix: Mat2) -> Result<Transform> {
        if !matrix.is_finite() || matrix.inverse().is_none() {
            return Err(Error::SingularMatrix { det: matrix.det() });
        }
        Ok(Transform::derived(matrix))
    }

    fn derived(matrix: Mat2) -> Transform {
        Transform {
            matrix,
            branch: BranchKind::Derived,
            params: None,
        }
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.matrix
    }

    pub fn branch(&self) -> BranchKind {
        self.branch
    }

    pub fn params(&self) -> Option<&FamilyParams> {
        self.params.as_ref()
    }

    pub fn det(&self) -> f64 {
        self.matrix.det()
    }

    pub fn apply(&self, x: TwoVector) -> TwoVector {
        self.matrix.mul_vec(x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Transform) -> Transform {
        Transform::derived(self.matrix * other.matrix)
    }

    pub fn inverse(&self) -> Result<Transform> {
        self.matrix
            .inverse()
            .map(Transform::derived)
            .ok_or(Error::SingularMatrix {
                det: self.matrix.det(),
            })
    }

    /// `P·M·P` with `P = diag(1, −1)`: the same map written in coordinates
    /// whose spatial axis is reversed on both sides.
    pub fn parity_conjugate(&self) -> Transform {
        Transform::derived(Mat2::PARITY * self.matrix * Mat2::PARITY)
    }

    /// Factor `L(−1, 1, W)` into the coordinate swap and `Λ(1, 1, 1/W)`.
    pub fn swap_decompose(&self) -> Result<SwapDecomposition> {
        let params = match (self.branch, self.params) {
            (BranchKind::AntisymmetricL, Some(p)) => p,
            (branch, _) => {
                return Err(Error::NotDecomposable(format!("branch is {branch:?}")));
            }
        };
        if params.tau != Sign::Minus || (params.k - 1.0).abs() > ENTRY_TOLERANCE {
            return Err(Error::NotDecomposable(format!(
                "requires tau = -1 and k = 1, got tau = {}, k = {}",
                params.tau, params.k
            )));
        }
        let w = match params.vel {
            Velocity::Finite(w) => w,
            Velocity::AtInfinity => {
                return Err(Error::NotDecomposable("infinite velocity parameter".into()));
            }
        };
        let boost = Transform::lambda(Sign::Plus, 1.0, 1.0 / w)
            .map_err(|e| Error::NotDecomposable(e.to_string()))?;
        let residual = (Mat2::SWAP * boost.matrix).max_abs_diff(&self.matrix);
        if residual > ENTRY_TOLERANCE * self.matrix.max_abs_entry().max(1.0) {
            return Err(Error::NotDecomposable(format!("residual {residual:e}")));
        }
        Ok(SwapDecomposition {
            swapped: true,
            boost,
        })
    }

    /// Match this matrix to a family member with the given `K`.
    ///
    /// Both family forms are `g·[[1, −u], [−u, 1]]`, so `u = −m01/m00`
    /// and the branch follows from whether `K·u²` is below or above one.
    /// Returns the family-built transform when its matrix agrees with this
    /// one within [`REFIT_TOLERANCE`] relative to the largest entry. Recovering
    /// `u` near the light cone loses digits, hence the looser bound.
    pub fn refit(&self, k: f64) -> Option<Transform> {
        let [[m00, m01], [m10, m11]] = self.matrix.0;
        let scale = self.matrix.max_abs_entry().max(1.0);
        let tol = REFIT_TOLERANCE * scale;
        if (m00 - m11).abs() > tol || (m01 - m10).abs() > tol || m00 == 0.0 {
            return None;
        }
        let u = -0.5 * (m01 + m10) / m00;
        let candidate = if k * u * u < 1.0 {
            Transform::lambda(Sign::of(m00), k, u).ok()?
        } else {
            Transform::l(Sign::of(m00 * u), k, u).ok()?
        };
        (candidate.matrix.max_abs_diff(&self.matrix) <= tol).then_some(candidate)
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.matrix.0;
        match (self.branch, self.params) {
            (BranchKind::SymmetricLambda, Some(p)) => {
                write!(f, "lambda(tau={}, k={}, vel={})", p.tau, p.k, p.vel)?
            }
            (BranchKind::AntisymmetricL, Some(p)) => {
                write!(f, "L(tau={}, k={}, vel={})", p.tau, p.k, p.vel)?
            }
            _ => f.write_str("derived")?,
        }
        write!(f, " [[{a}, {b}], [{c}, {d}]]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const S3: f64 = 1.732_050_807_568_877_3;

    #[allow(clippy::needless_range_loop)]
    fn brute_inverse(m: &Mat2) -> Mat2 {
        // Gauss-Jordan on the augmented matrix, independent of Mat2::inverse.
        let mut a = [
            [m.get(0, 0), m.get(0, 1), 1.0, 0.0],
            [m.get(1, 0), m.get(1, 1), 0.0, 1.0],
        ];
        if a[0][0].abs() < a[1][0].abs() {
            a.swap(0, 1);
        }
        let p = a[0][0];
        for x in a[0].iter_mut() {
            *x /= p;
        }
        let f = a[1][0];
        for j in 0..4 {
            a[1][j] -= f * a[0][j];
        }
        let p = a[1][1];
        for x in a[1].iter_mut() {
            *x /= p;
        }
        let f = a[0][1];
        for j in 0..4 {
            a[0][j] -= f * a[1][j];
        }
        Mat2::new(a[0][2], a[0][3], a[1][2], a[1][3])
    }

    fn close(a: &Mat2, b: &Mat2, tol: f64) {
        let d = a.max_abs_diff(b);
        assert!(d <= tol, "{a:?} vs {b:?}: {d:e}");
    }

    #[test]
    fn lambda_examples() {
        let id = Transform::lambda(Sign::Plus, 1.0, 0.0).unwrap();
        assert_eq!(*id.matrix(), Mat2::IDENTITY);

        let t = Transform::lambda(Sign::Plus, 1.0, 0.5).unwrap();
        close(
            t.matrix(),
            &Mat2::new(2.0 / S3, -1.0 / S3, -1.0 / S3, 2.0 / S3),
            1e-15,
        );
        assert_eq!(t.branch(), BranchKind::SymmetricLambda);

        let t = Transform::lambda(Sign::Minus, 1.0, 0.5).unwrap();
        close(
            t.matrix(),
            &Mat2::new(-2.0 / S3, 1.0 / S3, 1.0 / S3, -2.0 / S3),
            1e-15,
        );
    }

    #[test]
    fn lambda_rejects_boundary() {
        assert!(matches!(
            Transform::lambda(Sign::Plus, 1.0, 1.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn infinite_limit() {
        let t = Transform::lambda_infinite_limit(Sign::Plus, -1.0).unwrap();
        assert_eq!(*t.matrix(), Mat2::new(0.0, -1.0, -1.0, 0.0));
        assert_eq!(t.params().unwrap().vel, Velocity::AtInfinity);

        let t = Transform::lambda_infinite_limit(Sign::Minus, -1.0).unwrap();
        assert_eq!(*t.matrix(), Mat2::new(0.0, 1.0, 1.0, 0.0));

        // Large-V evaluation of the finite family as the oracle.
        let t = Transform::lambda_infinite_limit(Sign::Plus, -4.0).unwrap();
        assert_eq!(*t.matrix(), Mat2::new(0.0, -0.5, -0.5, 0.0));
        let far = Transform::lambda(Sign::Plus, -4.0, 1e6).unwrap();
        close(t.matrix(), far.matrix(), 1e-6);

        assert!(Transform::lambda_infinite_limit(Sign::Plus, 0.0).is_err());
        assert!(Transform::lambda_infinite_limit(Sign::Plus, 1.0).is_err());
    }

    #[test]
    fn l_examples() {
        let t = Transform::l(Sign::Minus, 1.0, 2.0).unwrap();
        close(
            t.matrix(),
            &Mat2::new(-1.0 / S3, 2.0 / S3, 2.0 / S3, -1.0 / S3),
            1e-15,
        );
        assert_eq!(t.branch(), BranchKind::AntisymmetricL);

        let t = Transform::l(Sign::Minus, 1.0, -2.0).unwrap();
        close(
            t.matrix(),
            &Mat2::new(1.0 / S3, 2.0 / S3, 2.0 / S3, 1.0 / S3),
            1e-15,
        );

        assert!(matches!(
            Transform::l(Sign::Minus, 1.0, 0.5),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn apply_examples() {
        let v = TwoVector::new(3.0, 4.0);
        assert_eq!(Transform::IDENTITY.apply(v), v);

        let l = Transform::l(Sign::Minus, 1.0, 2.0).unwrap();
        let ray = l.apply(TwoVector::new(1.0, 1.0));
        assert!(ray.max_abs_diff(&TwoVector::new(1.0 / S3, 1.0 / S3)) < 1e-15);
        let d = l.apply(TwoVector::new(2.0, 1.0));
        assert_eq!(d.c1, 0.0);
        assert!((d.c2 - S3).abs() < 1e-15);
    }

    #[test]
    fn compose_identity_and_velocity_addition() {
        let id = Transform::IDENTITY.compose(&Transform::IDENTITY);
        assert_eq!(*id.matrix(), Mat2::IDENTITY);
        assert_eq!(id.branch(), BranchKind::Derived);

        let half = Transform::lambda(Sign::Plus, 1.0, 0.5).unwrap();
        let both = half.compose(&half);
        assert_eq!(both.branch(), BranchKind::Derived);
        assert!(both.params().is_none());
        let fit = both.refit(1.0).unwrap();
        assert_eq!(fit.branch(), BranchKind::SymmetricLambda);
        let p = fit.params().unwrap();
        assert_eq!(p.tau, Sign::Plus);
        match p.vel {
            Velocity::Finite(v) => assert!((v - 0.8).abs() < 1e-14),
            Velocity::AtInfinity => panic!(),
        }
    }

    #[test]
    fn two_antisymmetric_compose_to_symmetric() {
        let a = Transform::l(Sign::Minus, 1.0, 2.0).unwrap();
        let b = Transform::l(Sign::Minus, 1.0, 3.0).unwrap();
        let fit = a.compose(&b).refit(1.0).unwrap();
        assert_eq!(fit.branch(), BranchKind::SymmetricLambda);
        let Velocity::Finite(v) = fit.params().unwrap().vel else {
            panic!()
        };
        assert!((v - 5.0 / 7.0).abs() < 1e-14);
    }

    #[test]
    fn refit_rejects_non_family_matrix() {
        let t = Transform::from_matrix(Mat2::new(2.0, 1.0, 1.0, 1.0)).unwrap();
        assert!(t.refit(1.0).is_none());
        let swap = Transform::from_matrix(Mat2::SWAP).unwrap();
        assert!(swap.refit(1.0).is_none());
    }

    #[test]
    fn refit_recovers_l() {
        let l = Transform::l(Sign::Minus, 1.0, -3.5).unwrap();
        let fit = Transform::from_matrix(*l.matrix())
            .unwrap()
            .refit(1.0)
            .unwrap();
        assert_eq!(fit, l);
    }

    #[test]
    fn inverse_examples() {
        let inv = Transform::IDENTITY.inverse().unwrap();
        assert_eq!(*inv.matrix(), Mat2::IDENTITY);

        let l = Transform::l(Sign::Minus, 1.0, 2.0).unwrap();
        let l_neg = Transform::l(Sign::Minus, 1.0, -2.0).unwrap();
        close(l.inverse().unwrap().matrix(), l_neg.matrix(), 1e-12);
        close(&brute_inverse(l.matrix()), l_neg.matrix(), 1e-12);
        assert_eq!(l.inverse().unwrap().branch(), BranchKind::Derived);

        let lam = Transform::lambda(Sign::Plus, 1.0, 0.5).unwrap();
        let lam_neg = Transform::lambda(Sign::Plus, 1.0, -0.5).unwrap();
        close(&brute_inverse(lam.matrix()), lam_neg.matrix(), 1e-12);
        close(lam.inverse().unwrap().matrix(), lam_neg.matrix(), 1e-12);
    }

    #[test]
    fn singular_matrix_rejected() {
        assert!(matches!(
            Transform::from_matrix(Mat2::new(1.0, 1.0, 1.0, 1.0)),
            Err(Error::SingularMatrix { .. })
        ));
    }

    #[test]
    fn parity_examples() {
        let lam = Transform::lambda(Sign::Plus, 1.0, 0.5).unwrap();
        let lam_neg = Transform::lambda(Sign::Plus, 1.0, -0.5).unwrap();
        assert_eq!(lam.parity_conjugate().matrix(), lam_neg.matrix());

        assert_eq!(
            *Transform::IDENTITY.parity_conjugate().matrix(),
            Mat2::IDENTITY
        );

        let l = Transform::l(Sign::Minus, 1.0, 2.0).unwrap();
        let l_neg = Transform::l(Sign::Minus, 1.0, -2.0).unwrap();
        assert_eq!(*l.parity_conjugate().matrix(), -*l_neg.matrix());
    }

    #[test]
    fn swap_decompose_examples() {
        let l = Transform::l(Sign::Minus, 1.0, 2.0).unwrap();
        let dec = l.swap_decompose().unwrap();
        assert!(dec.swapped);
        assert_eq!(dec.boost, Transform::lambda(Sign::Plus, 1.0, 0.5).unwrap());
        close(
            &(Mat2::SWAP * Mat2::new(2.0 / S3, -1.0 / S3, -1.0 / S3, 2.0 / S3)),
            &Mat2::new(-1.0 / S3, 2.0 / S3, 2.0 / S3, -1.0 / S3),
            1e-15,
        );

        let dec = Transform::l(Sign::Minus, 1.0, -2.0)
            .unwrap()
            .swap_decompose()
            .unwrap();
        assert_eq!(dec.boost, Transform::lambda(Sign::Plus, 1.0, -0.5).unwrap());

        let lam = Transform::lambda(Sign::Plus, 1.0, 0.5).unwrap();
        assert!(matches!(
            lam.swap_decompose(),
            Err(Error::NotDecomposable(_))
        ));
        let l_plus = Transform::l(Sign::Plus, 1.0, 2.0).unwrap();
        assert!(matches!(
            l_plus.swap_decompose(),
            Err(Error::NotDecomposable(_))
        ));
        let l_k = Transform::l(Sign::Minus, 2.0, 2.0).unwrap();
        assert!(matches!(
            l_k.swap_decompose(),
            Err(Error::NotDecomposable(_))
        ));
    }

    #[test]
    fn determinants() {
        for &v in &[-0.9, -0.3, 0.0, 0.4, 0.99] {
            let t = Transform::lambda(Sign::Minus, 1.0, v).unwrap();
            assert!((t.det() - 1.0).abs() < 1e-12);
            let t = Transform::lambda(Sign::Plus, 0.5, v).unwrap();
            let expected = (1.0 - v * v) / (1.0 - 0.5 * v * v);
            assert!((t.det() - expected).abs() < 1e-12);
        }
        for &w in &[-50.0, -1.5, 1.01, 7.0] {
            let t = Transform::l(Sign::Plus, 1.0, w).unwrap();
            assert!((t.det() + 1.0).abs() < 1e-12);
        }
    }
}
