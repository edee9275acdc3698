//! Amplitudes and inverses.
//!
//! The amplitude |M| = sqrt(M conj(M)) is the multiplicative "size" of a
//! multivector. Below dimension 3 the radicand is a real scalar; in dimension
//! 3 it lands in the commuting centre and the square root is the principal
//! complex one; in dimension 4 a second involution is needed to reduce the
//! radicand to a scalar, giving a fourth root.

use crate::center::{Amplitude, CenterComplex, SplitScalar};
use crate::context::Context;
use crate::error::{GaError, Result};
use crate::multivector::Multivector;

/// Repeated-squaring power for non-negative exponents (total).
pub(crate) fn powu(m: &Multivector, mut k: u32) -> Multivector {
    let mut base = *m;
    let mut acc = Multivector::scalar(m.dim(), 1.0);
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * base;
        }
        base = base * base;
        k >>= 1;
    }
    acc
}

impl Multivector {
    /// The radicand M conj(M) viewed in the commuting-complex lane. For
    /// dimensions 1-2 the imaginary part is identically zero (the e12 slot is
    /// cleared of cancellation dust so downstream square roots stay on a
    /// consistent side of the branch cut); in dimension 3 it is
    /// `2(at - v.w)` against the centre unit `e123`.
    pub fn amplitude_radicand(&self) -> Result<CenterComplex> {
        if self.dim() > 3 {
            return Err(GaError::UnsupportedDim {
                op: "amplitude",
                dim: self.dim(),
            });
        }
        let r = (*self * self.cliff_conj()).complex_part();
        Ok(if self.dim() <= 2 {
            CenterComplex::real(r.re)
        } else {
            r
        })
    }

    /// Amplitude |M|, the principal square root of M conj(M).
    pub fn amplitude(&self) -> Result<Amplitude> {
        let r = self.amplitude_radicand()?;
        Ok(if self.dim() <= 2 {
            Amplitude::Split(SplitScalar::from_radicand(r.re))
        } else {
            Amplitude::Center(r.sqrt())
        })
    }

    /// Inverse M^-1 = conj(M) / (M conj(M)) in dimensions 1-3.
    ///
    /// Fails with [`GaError::NullAmplitude`] when the radicand's modulus is
    /// below `ctx.null_eps * max(1, norm^2)`; such multivectors (e.g.
    /// `1 + e1`) are zero divisors.
    pub fn inverse(&self, ctx: &Context) -> Result<Multivector> {
        let r = self.amplitude_radicand()?;
        if r.modulus() <= ctx.null_threshold(self.norm()) {
            return Err(GaError::NullAmplitude);
        }
        self.cliff_conj().mul_complex(r.inv())
    }

    /// Dimension-4 involution that flips grades 1, 3 and 4:
    /// `(a + v + B + Iw + It)# = a - v + B - Iw - It`. Together with Clifford
    /// conjugation it reduces M conj(M) to a scalar.
    pub fn sharp(&self) -> Result<Multivector> {
        if self.dim() != 4 {
            return Err(GaError::UnsupportedDim {
                op: "sharp",
                dim: self.dim(),
            });
        }
        let mut out = *self;
        for idx in 0..self.len() {
            if matches!(Multivector::blade_grade(4, idx), 1 | 3 | 4) {
                *out.coeff_mut(idx) = -out.coeff(idx);
            }
        }
        Ok(out)
    }

    /// The scalar radicand `M conj(M) (M conj(M))#` of the dimension-4
    /// amplitude. Any residual outside the scalar slot indicates an internal
    /// error and is reported as [`GaError::NonScalarRadicand`].
    pub fn quartic_radicand(&self, ctx: &Context) -> Result<f64> {
        if self.dim() != 4 {
            return Err(GaError::UnsupportedDim {
                op: "amplitude4",
                dim: self.dim(),
            });
        }
        let n = *self * self.cliff_conj();
        let s = n * n.sharp()?;
        let scalar = s.scalar_part();
        let residual = s
            .coeffs()
            .iter()
            .skip(1)
            .map(|x| x.abs())
            .fold(0.0, f64::max);
        let scale = (self.norm().powi(4)).max(1.0);
        if residual > ctx.check_eps * scale {
            return Err(GaError::NonScalarRadicand);
        }
        Ok(scalar)
    }

    /// Dimension-4 amplitude |M| = (M conj(M) (M conj(M))#)^(1/4), as the
    /// principal quartic root of the scalar radicand.
    pub fn amplitude4(&self, ctx: &Context) -> Result<CenterComplex> {
        let r = self.quartic_radicand(ctx)?;
        Ok(CenterComplex::real(r).powf(0.25))
    }

    /// Dimension-4 inverse M^-1 = conj(M) (M conj(M))# / |M|^4.
    pub fn inverse4(&self, ctx: &Context) -> Result<Multivector> {
        let r = self.quartic_radicand(ctx)?;
        if r.abs() <= ctx.null_eps * (self.norm().powi(4)).max(1.0) {
            return Err(GaError::NullAmplitude);
        }
        let n = *self * self.cliff_conj();
        Ok((self.cliff_conj() * n.sharp()?).scale(1.0 / r))
    }

    /// Finite geometric sum `1 + M + ... + M^n` by the closed form
    /// `(1 - M)^-1 (1 - M^(n+1))`. The identity is algebraic, so no
    /// convergence condition is needed beyond invertibility of `1 - M`.
    pub fn geometric_series(&self, n: u32, ctx: &Context) -> Result<Multivector> {
        let one = Multivector::scalar(self.dim(), 1.0);
        let lead = (one - *self).inverse(ctx)?;
        Ok(lead * (one - powu(self, n + 1)))
    }
}

/// Quotient of two grade-1 vectors, `v / w = v w / w^2`. The result lives in
/// the even subalgebra (a scalar plus a bivector).
pub fn vector_quotient(v: &Multivector, w: &Multivector, ctx: &Context) -> Result<Multivector> {
    for m in [v, w] {
        if (*m - m.grade(1)?.value).norm() > 0.0 {
            return Err(GaError::OutOfSubspace);
        }
    }
    let w2 = (*w * *w).scalar_part();
    if w2 <= ctx.null_threshold(w.norm()) {
        return Err(GaError::ZeroVector);
    }
    Ok((v.gp(w)?).scale(1.0 / w2))
}
