//! Elementary functions of a multivector variable.
//!
//! Every function here is organised around one decomposition: write
//! `M = Z + F`, where `Z` collects the grades that commute with everything
//! (scalar, plus the pseudoscalar in dimension 3) and `F = v + B` collects the
//! vector and bivector grades. `Z` behaves like a complex number, `F` squares
//! into the same commuting lane (`F^2 = -|F|^2`), and analytic functions of
//! `M` reduce to complex coefficient functions of `|F|^2` multiplying `1` and
//! `F`.
//!
//! The coefficient kernels are the even/odd pair
//!
//! ```text
//! c(s) = cos(sqrt(s))          m(s) = sin(sqrt(s)) / sqrt(s)
//! ```
//!
//! both entire in `s`, evaluated by a short series for small `|s|` and in
//! closed form otherwise. Working in `s = |F|^2` (never `|F|` itself) makes
//! every formula independent of the square-root branch and removes the 0/0 at
//! `F -> 0`, including the nilpotent case `F != 0, |F| = 0` where
//! `exp(Z + F) = exp(Z)(1 + F)` falls out of the same code path.

use crate::center::{Amplitude, CenterComplex};
use crate::context::Context;
use crate::error::{GaError, Result};
use crate::multivector::Multivector;

/// Threshold on |s| = ||F|^2| below which the kernels use their power series.
const KERNEL_SERIES_THRESHOLD: f64 = 1e-4;

/// Unit imaginary of the commuting lane, as a complex pair.
const I: CenterComplex = CenterComplex { re: 0.0, im: 1.0 };

/// The commuting/direction split `M = Z + F`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FSplit {
    /// Scalar part, plus the pseudoscalar part in dimension 3.
    pub z: CenterComplex,
    /// Vector and bivector grades.
    pub f: Multivector,
}

/// Polar data `M = (cos(phi) + fhat sin(phi)) |M|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarForm {
    pub amp: Amplitude,
    /// Direction factor `F / |F|` (the amplitude divides on the right).
    pub fhat: Multivector,
    /// Argument, in the commuting-complex lane of the dimension.
    pub phi: CenterComplex,
    /// Whether `M = |M| exp(fhat * phi)` also holds. Always true in
    /// dimension 3; in dimensions 1-2 it requires a real amplitude and, when
    /// `|F|` is pseudoscalar-valued, a positive scalar part.
    pub exp_form: bool,
}

/// Index into the family of logarithms: `log M + 2 pi n fhat + 2 pi m e123`,
/// plus an extra `pi fhat + pi e123` when `half` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BranchIndex {
    pub n: i32,
    pub m: i32,
    pub half: bool,
}

/// Which sign to take in the square-root formula
/// `(M +/- |M|) (M + conj(M) +/- 2|M|)^(-1/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootSign {
    Plus,
    Minus,
}

/// Side on which a multivector exponent multiplies the logarithm:
/// `M^P = exp(log(M) P)` (right, the default) or `exp(P log(M))` (left).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PowerSide {
    #[default]
    Right,
    Left,
}

/// Even/odd coefficient kernels `(c(s), m(s))`.
fn kernels(s: CenterComplex) -> (CenterComplex, CenterComplex) {
    if s.modulus() < KERNEL_SERIES_THRESHOLD {
        // c(s) = 1 - s/2 + s^2/24 - s^3/720, m(s) = 1 - s/6 + s^2/120 - s^3/5040;
        // the truncation error is below 1e-16 at this threshold.
        let s2 = s * s;
        let s3 = s2 * s;
        let c = CenterComplex::ONE - s.scale(0.5) + s2.scale(1.0 / 24.0) - s3.scale(1.0 / 720.0);
        let m = CenterComplex::ONE - s.scale(1.0 / 6.0) + s2.scale(1.0 / 120.0)
            - s3.scale(1.0 / 5040.0);
        (c, m)
    } else {
        let w = s.sqrt();
        (w.cos(), w.sin() / w)
    }
}

/// Hyperbolic variants `cosh(sqrt(s))` and `sinh(sqrt(s))/sqrt(s)`; these are
/// the same kernels at `-s`.
pub(crate) fn kernels_hyperbolic(s: CenterComplex) -> (CenterComplex, CenterComplex) {
    kernels(-s)
}

pub(crate) fn kernels_circular(s: CenterComplex) -> (CenterComplex, CenterComplex) {
    kernels(s)
}

fn require_dim_le3(m: &Multivector, op: &'static str) -> Result<()> {
    if m.dim() > 3 {
        return Err(GaError::UnsupportedDim { op, dim: m.dim() });
    }
    Ok(())
}

impl Multivector {
    /// Split into the commuting part `Z` (grades 0 and 3) and the direction
    /// part `F` (grades 1 and 2). `Z + F` reassembles the input exactly.
    pub fn split(&self) -> FSplit {
        let z = if self.dim() == 3 {
            CenterComplex::new(self.scalar_part(), self.pseudoscalar_part())
        } else {
            CenterComplex::real(self.scalar_part())
        };
        FSplit {
            z,
            f: self.select(|g| g == 1 || g == 2),
        }
    }

    /// The invariants `(|F|^2, |F|)` of the direction part: `|F|^2 = -F^2`
    /// lands in the commuting lane and `|F|` is its principal square root.
    pub fn f_invariants(&self) -> Result<(CenterComplex, CenterComplex)> {
        require_dim_le3(self, "f_invariants")?;
        let f = self.split().f;
        let s = -((f * f).complex_part());
        Ok((s, s.sqrt()))
    }

    /// Exponential. Defined for every multivector in dimensions 1-3:
    /// `exp(Z + F) = exp(Z) (c(|F|^2) + F m(|F|^2))`.
    pub fn exp(&self) -> Result<Multivector> {
        require_dim_le3(self, "exp")?;
        let FSplit { z, f } = self.split();
        let s = -((f * f).complex_part());
        let (c, m) = kernels(s);
        let ez = z.exp();
        let head = Multivector::from_complex(self.dim(), ez * c)?;
        Ok(head + f.mul_complex(ez * m)?)
    }

    /// Argument `phi` with `cos(phi) = Z/|M|` and `sin(phi) = |F|/|M|`,
    /// computed as `-i log((Z + i|F|) / |M|)` in the commuting-complex lane.
    /// For real inputs this reduces to the two-argument arctangent with
    /// principal range (-pi, pi].
    pub fn arg(&self, ctx: &Context) -> Result<CenterComplex> {
        require_dim_le3(self, "arg")?;
        let z = self.split().z;
        let (_, famp) = self.f_invariants()?;
        let r = self.amplitude_radicand()?;
        if r.modulus() <= ctx.null_threshold(self.norm()) {
            return Err(GaError::NullAmplitude);
        }
        let amp = r.sqrt();
        let w = (z + I * famp) / amp;
        let phi = -(I * w.ln());
        Ok(phi)
    }

    /// Polar decomposition `M = (cos(phi) + fhat sin(phi)) |M|`.
    ///
    /// Requires dimension 2 or 3 (in dimension 1 the direction factor leaves
    /// the algebra; embed into dimension 3 first), a non-null amplitude, and
    /// `|F| != 0`.
    pub fn polar(&self, ctx: &Context) -> Result<PolarForm> {
        if self.dim() != 2 && self.dim() != 3 {
            return Err(GaError::UnsupportedDim {
                op: "polar",
                dim: self.dim(),
            });
        }
        let r = self.amplitude_radicand()?;
        if r.modulus() <= ctx.null_threshold(self.norm()) {
            return Err(GaError::NullAmplitude);
        }
        let FSplit { z: _, f } = self.split();
        let (fsq, famp) = self.f_invariants()?;
        if fsq.modulus() <= ctx.null_threshold(f.norm()) {
            return Err(GaError::ZeroF);
        }
        let amp = self.amplitude()?;
        let fhat = f.mul_complex(famp.inv())?;
        let phi = self.arg(ctx)?;
        let exp_form = if self.dim() == 3 {
            true
        } else {
            amp.is_real() && (famp.im == 0.0 || self.scalar_part() > 0.0)
        };
        Ok(PolarForm {
            amp,
            fhat,
            phi,
            exp_form,
        })
    }

    /// Principal logarithm: `log M = log|M| + fhat phi`, with the central
    /// cases routed through the complex (dimension 3) or real (positive
    /// scalar) logarithm.
    pub fn log(&self, ctx: &Context) -> Result<Multivector> {
        require_dim_le3(self, "log")?;
        let dim = self.dim();
        let FSplit { z, f } = self.split();

        if f.is_zero() {
            // Central input.
            if z.modulus() <= ctx.null_eps {
                return Err(GaError::NullAmplitude);
            }
            if dim == 3 {
                return Multivector::from_complex(3, z.ln());
            }
            if z.re > 0.0 {
                return Ok(Multivector::scalar(dim, z.re.ln()));
            }
            // Negative reals below dimension 3: no principal choice exists
            // (the candidate directions form a continuum).
            return Err(GaError::ZeroFNoCentral);
        }

        let (fsq, famp) = self.f_invariants()?;
        if fsq.modulus() <= ctx.null_threshold(f.norm()) {
            // F is nilpotent; a logarithm may exist but has no principal
            // direction factor.
            return Err(GaError::ZeroFNoCentral);
        }
        let r = self.amplitude_radicand()?;
        if r.modulus() <= ctx.null_threshold(self.norm()) {
            return Err(GaError::NullAmplitude);
        }
        let phi = self.arg(ctx)?;
        // log M = log|M| + F (phi / |F|); phi and |F| commute.
        let ratio = phi / famp;
        if dim <= 2 {
            if r.re <= 0.0 {
                return Err(GaError::NonRealAmplitude2D);
            }
            // In dims 1-2 the coefficient of F must be real; a residual
            // signals the hyperbolic regime with negative scalar part, which
            // has a trigonometric form but no logarithm in the algebra.
            if ratio.im.abs() > ctx.check_eps * (1.0 + ratio.modulus()) {
                return Err(GaError::NoExponentialForm);
            }
            let log_amp = 0.5 * r.re.ln();
            return Ok(Multivector::scalar(dim, log_amp) + f.scale(ratio.re));
        }
        let log_amp = r.ln().scale(0.5);
        Ok(Multivector::from_complex(3, log_amp)? + f.mul_complex(ratio)?)
    }

    /// A non-principal logarithm from the branch family
    /// `log M + 2 pi n fhat + 2 pi m e123` (plus `pi fhat + pi e123` when
    /// `half`). Every member exponentiates back to M.
    pub fn log_branches(&self, b: BranchIndex, ctx: &Context) -> Result<Multivector> {
        let base = self.log(ctx)?;
        let dim = self.dim();
        if dim <= 2 && (b.m != 0 || b.half) {
            // The centre winding and the half-shift both need e123.
            return Err(GaError::InvalidBranch);
        }
        let mut out = base;
        let fhat_turns = 2.0 * std::f64::consts::PI * f64::from(b.n)
            + if b.half { std::f64::consts::PI } else { 0.0 };
        if fhat_turns != 0.0 {
            let f = self.split().f;
            let (fsq, famp) = self.f_invariants()?;
            if f.is_zero() || fsq.modulus() <= ctx.null_threshold(f.norm()) {
                return Err(GaError::ZeroF);
            }
            let fhat = f.mul_complex(famp.inv())?;
            out = out + fhat.scale(fhat_turns);
        }
        if dim == 3 {
            let center_turns = 2.0 * std::f64::consts::PI * f64::from(b.m)
                + if b.half { std::f64::consts::PI } else { 0.0 };
            if center_turns != 0.0 {
                out = out + Multivector::from_complex(3, CenterComplex::new(0.0, center_turns))?;
            }
        }
        Ok(out)
    }

    /// Square root by `(M +/- |M|) (M + conj(M) +/- 2|M|)^(-1/2)`.
    ///
    /// Central inputs in dimension 3 take the principal complex root
    /// directly (negated for [`RootSign::Minus`]); real scalars below
    /// dimension 3 are rejected in favour of [`scalar_roots`], whose answers
    /// form parametric families.
    pub fn sqrt_mv(&self, sign: RootSign, ctx: &Context) -> Result<Multivector> {
        require_dim_le3(self, "sqrt_mv")?;
        let dim = self.dim();
        let FSplit { z, f } = self.split();
        let sgn = match sign {
            RootSign::Plus => 1.0,
            RootSign::Minus => -1.0,
        };

        if f.is_zero() {
            if dim <= 2 {
                return Err(GaError::RealScalarInput);
            }
            if z.modulus() <= ctx.null_eps {
                return Ok(Multivector::zero(3));
            }
            return Multivector::from_complex(3, z.sqrt().scale(sgn));
        }

        let r = self.amplitude_radicand()?;
        if dim <= 2 {
            // The root formula needs a real amplitude and a positive real
            // denominator 2(a +/- |M|); the minus branch additionally demands
            // a > 0 and a - |M| > 0.
            if r.re < 0.0 {
                return Err(GaError::NonRealAmplitude2D);
            }
            let amp = r.re.sqrt();
            let d = 2.0 * (self.scalar_part() + sgn * amp);
            if d <= ctx.null_threshold(self.norm()) {
                return Err(GaError::ZeroDenominator);
            }
            let shifted = *self + Multivector::scalar(dim, sgn * amp);
            return Ok(shifted.scale(1.0 / d.sqrt()));
        }

        let amp = r.sqrt();
        let denom = (z + amp.scale(sgn)).scale(2.0);
        if denom.modulus() <= ctx.null_threshold(self.norm()) {
            return Err(GaError::ZeroDenominator);
        }
        let shifted = *self + Multivector::from_complex(3, amp.scale(sgn))?;
        shifted.mul_complex(denom.powf(-0.5))
    }

    /// Principal square root with the scalar cases folded in: complex root
    /// for central dimension-3 inputs, real root for non-negative scalars,
    /// `e12 sqrt(-a)` for negative scalars in dimension 2, and the
    /// plus-branch root formula otherwise.
    pub fn sqrt_principal(&self, ctx: &Context) -> Result<Multivector> {
        let dim = self.dim();
        if dim <= 2 && self.split().f.is_zero() {
            let a = self.scalar_part();
            if a >= 0.0 {
                return Ok(Multivector::scalar(dim, a.sqrt()));
            }
            if dim == 2 {
                return Multivector::from_complex(2, CenterComplex::new(0.0, (-a).sqrt()));
            }
            return Err(GaError::NonRealAmplitude2D);
        }
        self.sqrt_mv(RootSign::Plus, ctx)
    }

    /// Integer power by repeated squaring; negative exponents invert first
    /// (through the quartic inverse in dimension 4).
    pub fn pow_int(&self, p: i32, ctx: &Context) -> Result<Multivector> {
        let base = if p < 0 {
            if self.dim() == 4 {
                self.inverse4(ctx)?
            } else {
                self.inverse(ctx)?
            }
        } else {
            *self
        };
        Ok(crate::algebra::powu(&base, p.unsigned_abs()))
    }

    /// Real power by the de Moivre form `|M|^x (cos(x phi) + fhat sin(x phi))`.
    pub fn pow_real(&self, x: f64, ctx: &Context) -> Result<Multivector> {
        self.pow_center(CenterComplex::real(x), ctx)
    }

    /// Power with a commuting-complex exponent (dimension 3 for genuinely
    /// complex exponents). Principal branch throughout.
    pub fn pow_center(&self, p: CenterComplex, ctx: &Context) -> Result<Multivector> {
        require_dim_le3(self, "pow_center")?;
        let dim = self.dim();
        if dim < 3 && p.im != 0.0 {
            return Err(GaError::UnsupportedDim {
                op: "complex exponent",
                dim,
            });
        }
        if p == CenterComplex::ZERO {
            return Ok(Multivector::scalar(dim, 1.0));
        }
        let FSplit { z, f } = self.split();

        if f.is_zero() {
            if z.modulus() <= ctx.null_eps {
                return Err(GaError::NullAmplitude);
            }
            if dim == 3 {
                return Multivector::from_complex(3, z.powc(p));
            }
            if z.re > 0.0 {
                return Ok(Multivector::scalar(dim, z.re.powf(p.re)));
            }
            return Err(GaError::ZeroFNoCentral);
        }

        let (fsq, famp) = self.f_invariants()?;
        if fsq.modulus() <= ctx.null_threshold(f.norm()) {
            return Err(GaError::ZeroFNoCentral);
        }
        let r = self.amplitude_radicand()?;
        if r.modulus() <= ctx.null_threshold(self.norm()) {
            return Err(GaError::NullAmplitude);
        }
        if dim <= 2 {
            if r.re <= 0.0 {
                return Err(GaError::NonRealAmplitude2D);
            }
            if famp.im != 0.0 && self.scalar_part() < 0.0 {
                return Err(GaError::NoExponentialForm);
            }
        }
        let phi = self.arg(ctx)?;
        let fhat = f.mul_complex(famp.inv())?;
        let xphi = phi * p;
        // |M|^p: in dims 1-2 the amplitude is real positive here.
        let amp_pow = if dim == 3 {
            r.sqrt().powc(p)
        } else {
            CenterComplex::real(r.re.sqrt().powf(p.re))
        };
        let trig = Multivector::from_complex(dim, xphi.cos())? + fhat.mul_complex(xphi.sin())?;
        trig.mul_complex(amp_pow)
    }

    /// General multivector power `M^P` through the principal logarithm:
    /// `exp(log(M) P)` for [`PowerSide::Right`] (the default),
    /// `exp(P log(M))` for [`PowerSide::Left`].
    pub fn pow_mv(&self, p: &Multivector, side: PowerSide, ctx: &Context) -> Result<Multivector> {
        let l = self.log(ctx)?;
        let e = match side {
            PowerSide::Right => l.gp(p)?,
            PowerSide::Left => p.gp(&l)?,
        };
        e.exp()
    }
}

/// Square roots of a real scalar in dimension 2, which form parametric
/// families rather than a finite set:
///
/// * for `a < 0`: `v + e12 sqrt(-a + v^2)` squares to `a` for every vector `v`;
/// * for `a >= 0` and `v != 0`: `sqrt(a + |v|^2) vhat + e12 |v|` squares to `a`;
/// * for `a >= 0` and `v = 0` the plain scalar root is returned.
pub fn scalar_roots(a: f64, v: &Multivector) -> Result<Multivector> {
    if v.dim() != 2 {
        return Err(GaError::UnsupportedDim {
            op: "scalar_roots",
            dim: v.dim(),
        });
    }
    if (*v - v.grade(1)?.value).norm() > 0.0 {
        return Err(GaError::OutOfSubspace);
    }
    let e12 = Multivector::basis(2, 3)?;
    let d = v.norm();
    if a < 0.0 {
        return Ok(*v + e12.scale((-a + d * d).sqrt()));
    }
    if d == 0.0 {
        return Ok(Multivector::scalar(2, a.sqrt()));
    }
    let vhat = v.scale(1.0 / d);
    Ok(vhat.scale((a + d * d).sqrt()) + e12.scale(d))
}

/// A hyperbolic family of square roots of -1 in dimension 3:
/// `sinh(theta) wperp + e123 cosh(theta) what` for orthonormal vectors
/// `what`, `wperp`.
pub fn root_minus_one_3d(
    theta: f64,
    what: &Multivector,
    wperp: &Multivector,
    ctx: &Context,
) -> Result<Multivector> {
    for m in [what, wperp] {
        if m.dim() != 3 {
            return Err(GaError::UnsupportedDim {
                op: "root_minus_one_3d",
                dim: m.dim(),
            });
        }
        if (*m - m.grade(1)?.value).norm() > 0.0 {
            return Err(GaError::OutOfSubspace);
        }
        if (m.norm() - 1.0).abs() > ctx.check_eps {
            return Err(GaError::NonOrthonormal);
        }
    }
    if what.inner(wperp)?.abs() > ctx.check_eps {
        return Err(GaError::NonOrthonormal);
    }
    let j = Multivector::basis(3, 7)?;
    Ok(wperp.scale(theta.sinh()) + (j * *what).scale(theta.cosh()))
}

/// Logarithm of `y` to a multivector base: `(1 / log(base)) log(y)`.
pub fn log_base(base: &Multivector, y: &Multivector, ctx: &Context) -> Result<Multivector> {
    let lb = base.log(ctx)?;
    let ly = y.log(ctx)?;
    lb.inverse(ctx)?.gp(&ly)
}

/// Logarithm of a product of two vectors without forming the product's
/// polar data explicitly:
/// `log(ab) = (1/2) log(a^2 b^2) + theta (a ^ b)/|a ^ b|`, where `theta` is
/// the angle between the vectors. Parallel vectors route to the scalar
/// logarithm of `a . b`.
pub fn log_two_vectors(a: &Multivector, b: &Multivector, ctx: &Context) -> Result<Multivector> {
    let dim = a.dim();
    if dim != 2 && dim != 3 {
        return Err(GaError::UnsupportedDim {
            op: "log_two_vectors",
            dim,
        });
    }
    for m in [a, b] {
        if (*m - m.grade(1)?.value).norm() > 0.0 {
            return Err(GaError::OutOfSubspace);
        }
        if m.norm() == 0.0 {
            return Err(GaError::ZeroVector);
        }
    }
    let prod = a.gp(b)?;
    let dot = prod.scalar_part();
    let wedge = prod.grade(2)?.value;
    let wnorm = wedge.norm();
    if wnorm <= ctx.check_eps * a.norm() * b.norm() {
        if dot > 0.0 {
            return Ok(Multivector::scalar(dim, dot.ln()));
        }
        if dim == 3 {
            return Multivector::from_complex(
                3,
                CenterComplex::new((-dot).ln(), std::f64::consts::PI),
            );
        }
        return Err(GaError::ZeroFNoCentral);
    }
    let theta = wnorm.atan2(dot);
    let log_amp = 0.5 * (a.norm() * a.norm() * b.norm() * b.norm()).ln();
    Ok(Multivector::scalar(dim, log_amp) + wedge.scale(theta / wnorm))
}

impl PolarForm {
    /// Rebuild the multivector as `(cos(phi) + fhat sin(phi)) |M|`; the
    /// amplitude multiplies on the right, which matters below dimension 3.
    pub fn recompose(&self) -> Result<Multivector> {
        let dim = self.fhat.dim();
        let trig = Multivector::from_complex(dim, self.phi.cos())?
            + self.fhat.mul_complex(self.phi.sin())?;
        trig.mul_complex(self.amp.to_center())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, FRAC_PI_2, PI};

    fn mv(dim: usize, coeffs: &[f64]) -> Multivector {
        Multivector::new(dim, coeffs).unwrap()
    }

    fn ctx() -> Context {
        Context::default()
    }

    fn close(a: &Multivector, b: &Multivector, tol: f64) -> bool {
        (*a - *b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn split_reassembles() {
        let m = mv(3, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0]);
        let FSplit { z, f } = m.split();
        assert_eq!(z, CenterComplex::new(1.0, 8.0));
        let back = Multivector::from_complex(3, z).unwrap() + f;
        assert_eq!(back, m);
        // In dimension 2 the bivector belongs to F, not Z.
        let m = mv(2, &[1.0, 2.0, 3.0, 4.0]);
        let FSplit { z, f } = m.split();
        assert_eq!(z, CenterComplex::real(1.0));
        assert_eq!(f.coeffs(), &[0.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn f_invariants_examples() {
        // F = e1 + e123 e1 = e1 + e23: |F|^2 = -1 + 1 - 2 e123 (v.w = 1).
        let m = mv(3, &[0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
        let (fsq, famp) = m.f_invariants().unwrap();
        assert!((fsq.re - 0.0).abs() < 1e-14 && (fsq.im + 2.0).abs() < 1e-14);
        // principal sqrt(-2 e123) = 1 - e123.
        assert!((famp.re - 1.0).abs() < 1e-14 && (famp.im + 1.0).abs() < 1e-14);
    }

    #[test]
    fn exp_basic_values() {
        // exp(e1) = cosh(1) + sinh(1) e1, in dimensions 1 and 2.
        for dim in [1usize, 2] {
            let e1 = Multivector::basis(dim, 1).unwrap();
            let got = e1.exp().unwrap();
            let mut want = Multivector::scalar(dim, 1f64.cosh());
            *want.coeff_mut(1) = 1f64.sinh();
            assert!(close(&got, &want, 1e-15), "dim {dim}");
        }
        // exp((pi/2) e12) = e12.
        let m = mv(2, &[0.0, 0.0, 0.0, FRAC_PI_2]);
        assert!(close(&m.exp().unwrap(), &Multivector::basis(2, 3).unwrap(), 1e-15));
        // exp(pi e123) = -1 (Euler in the centre).
        let m = mv(3, &[0.0; 8]) + Multivector::basis(3, 7).unwrap().scale(PI);
        assert!(close(&m.exp().unwrap(), &Multivector::scalar(3, -1.0), 1e-15));
    }

    #[test]
    fn exp_nilpotent_direction() {
        // F = e1 + e123 e2 has F^2 = 0, so exp(F) = 1 + F.
        let f = mv(3, &[0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0]);
        let got = f.exp().unwrap();
        let want = Multivector::scalar(3, 1.0) + f;
        assert!(close(&got, &want, 1e-15));
    }

    #[test]
    fn exp_amplitude_is_exp_of_center() {
        // |exp(M)|^2 = exp(2Z) exactly.
        let m = mv(3, &[0.4, -1.2, 0.3, 0.8, -0.5, 0.6, -0.9, 0.2]);
        let e = m.exp().unwrap();
        let r = e.amplitude_radicand().unwrap();
        let expect = m.split().z.scale(2.0).exp();
        assert!((r.re - expect.re).abs() < 1e-12 && (r.im - expect.im).abs() < 1e-12);
    }

    #[test]
    fn arg_reduces_to_atan2() {
        let c = ctx();
        // 1 + sqrt(3) e12: phi = pi/3.
        let m = mv(2, &[1.0, 0.0, 0.0, 3f64.sqrt()]);
        let phi = m.arg(&c).unwrap();
        assert!((phi.re - PI / 3.0).abs() < 1e-14 && phi.im.abs() < 1e-14);
        // Negative real axis: phi = pi, not -pi.
        let m = Multivector::scalar(3, -2.0);
        let phi = m.arg(&c).unwrap();
        assert!((phi.re - PI).abs() < 1e-14);
    }

    #[test]
    fn polar_recomposes_hyperbolic_regime() {
        let c = ctx();
        // a < 0 with |F| pseudoscalar-valued: trig form holds, exp form not.
        let m = mv(2, &[-2.0, 1.0, 0.0, 0.0]);
        let p = m.polar(&c).unwrap();
        assert!(!p.exp_form);
        assert!(close(&p.recompose().unwrap(), &m, 1e-12));
        // Mixed argument: phi = pi - e12 asinh-like part.
        assert!((p.phi.re - PI).abs() < 1e-12);
        assert!(p.phi.im.abs() > 0.1);
    }

    #[test]
    fn polar_exp_form_flag() {
        let c = ctx();
        let m = mv(2, &[2.0, 1.0, 0.0, 0.0]);
        let p = m.polar(&c).unwrap();
        assert!(p.exp_form);
        let m = mv(3, &[0.5, 1.0, -0.3, 0.2, 0.4, -0.1, 0.6, 0.9]);
        let p = m.polar(&c).unwrap();
        assert!(p.exp_form);
        assert!(close(&p.recompose().unwrap(), &m, 1e-12));
        // fhat squares to -1 whenever |F| is not pseudoscalar-valued in 2D.
        let f2 = p.fhat * p.fhat;
        assert!(close(&f2, &Multivector::scalar(3, -1.0), 1e-12));
    }

    #[test]
    fn log_fixed_values() {
        let c = ctx();
        // log(e123) = (pi/2) e123.
        let j = Multivector::basis(3, 7).unwrap();
        let want = j.scale(FRAC_PI_2);
        assert!(close(&j.log(&c).unwrap(), &want, 1e-14));
        // log(-1) = pi e123 in dimension 3.
        let m = Multivector::scalar(3, -1.0);
        assert!(close(&m.log(&c).unwrap(), &j.scale(PI), 1e-14));
        // log(2 e1) = ln 2 + (pi/2)(e123 - e23).
        let v = Multivector::vector(3, &[2.0, 0.0, 0.0]).unwrap();
        let want = Multivector::scalar(3, 2f64.ln()) + j.scale(FRAC_PI_2)
            - Multivector::basis(3, 6).unwrap().scale(FRAC_PI_2);
        assert!(close(&v.log(&c).unwrap(), &want, 1e-14));
        // exp(log(2 e1)) = 2 e1.
        assert!(close(&v.log(&c).unwrap().exp().unwrap(), &v, 1e-14));
        // Negative reals have no principal log below dimension 3.
        assert_eq!(
            Multivector::scalar(2, -1.0).log(&c),
            Err(GaError::ZeroFNoCentral)
        );
        // Quaternion-like input: log(a + e123 w).
        let q = Multivector::scalar(3, 1.0) + (j * Multivector::vector(3, &[1.0, 0.0, 0.0]).unwrap());
        let l = q.log(&c).unwrap();
        assert!(close(&l.exp().unwrap(), &q, 1e-14));
    }

    #[test]
    fn log_rejects_hyperbolic_negative_scalar_2d() {
        let c = ctx();
        let m = mv(2, &[-2.0, 1.0, 0.0, 0.0]);
        assert_eq!(m.log(&c), Err(GaError::NoExponentialForm));
        // But with positive scalar part the hyperbolic log exists.
        let m = mv(2, &[2.0, 1.0, 0.0, 0.0]);
        let l = m.log(&c).unwrap();
        assert!(close(&l.exp().unwrap(), &m, 1e-13));
    }

    #[test]
    fn log_branches_family() {
        let c = ctx();
        let j = Multivector::basis(3, 7).unwrap();
        // log(-1) with centre winding m = 1: 3 pi e123.
        let m = Multivector::scalar(3, -1.0);
        let b = m
            .log_branches(
                BranchIndex {
                    n: 0,
                    m: 1,
                    half: false,
                },
                &c,
            )
            .unwrap();
        assert!(close(&b, &j.scale(3.0 * PI), 1e-13));
        assert!(close(&b.exp().unwrap(), &m, 1e-12));
        // A generic input: every branch exponentiates back.
        let m = mv(3, &[0.5, 1.0, -0.3, 0.2, 0.4, -0.1, 0.6, 0.9]);
        for (n, mm, half) in [(1, 0, false), (-2, 1, false), (0, 0, true), (1, -1, true)] {
            let b = m.log_branches(BranchIndex { n, m: mm, half }, &c).unwrap();
            assert!(close(&b.exp().unwrap(), &m, 1e-10), "branch {n},{mm},{half}");
        }
        // Branches that need fhat fail on central input.
        assert_eq!(
            Multivector::scalar(3, -1.0).log_branches(
                BranchIndex {
                    n: 1,
                    m: 0,
                    half: false
                },
                &c
            ),
            Err(GaError::ZeroF)
        );
    }

    #[test]
    fn sqrt_fixed_values() {
        let c = ctx();
        // sqrt(e1) = (1 - e123)(e1 + e123)/2.
        let e1 = Multivector::vector(3, &[1.0, 0.0, 0.0]).unwrap();
        let s = e1.sqrt_mv(RootSign::Plus, &c).unwrap();
        let want = mv(3, &[0.5, 0.5, 0.0, 0.0, 0.0, 0.0, -0.5, 0.0, ])
            + Multivector::basis(3, 7).unwrap().scale(0.5);
        assert!(close(&s, &want, 1e-14));
        assert!(close(&(s * s), &e1, 1e-14));
        // Central: sqrt(-1) = e123, sqrt(4) = 2.
        let m = Multivector::scalar(3, -1.0);
        assert!(close(
            &m.sqrt_mv(RootSign::Plus, &c).unwrap(),
            &Multivector::basis(3, 7).unwrap(),
            1e-15
        ));
        let m = Multivector::scalar(3, 4.0);
        assert!(close(&m.sqrt_mv(RootSign::Plus, &c).unwrap(), &Multivector::scalar(3, 2.0), 1e-15));
        // Real scalars below dimension 3 route to scalar_roots.
        assert_eq!(
            Multivector::scalar(2, 4.0).sqrt_mv(RootSign::Plus, &c),
            Err(GaError::RealScalarInput)
        );
    }

    #[test]
    fn sqrt_minus_branch_conditions() {
        let c = ctx();
        // 3 + e1: a > 0 and a - |M| > 0, so the minus branch exists.
        let m = mv(2, &[3.0, 1.0, 0.0, 0.0]);
        let s = m.sqrt_mv(RootSign::Minus, &c).unwrap();
        assert!(close(&(s * s), &m, 1e-13));
        // 1 + 2 e12: a - |M| < 0, minus branch rejected.
        let m = mv(2, &[1.0, 0.0, 0.0, 2.0]);
        assert_eq!(m.sqrt_mv(RootSign::Minus, &c), Err(GaError::ZeroDenominator));
        // Plus branch works and squares back.
        let s = m.sqrt_mv(RootSign::Plus, &c).unwrap();
        assert!(close(&(s * s), &m, 1e-14));
    }

    #[test]
    fn sqrt_plus_equals_exp_half_log() {
        let c = ctx();
        let m = mv(3, &[0.7, 0.4, -0.2, 0.5, 0.3, -0.6, 0.1, 0.8]);
        let s = m.sqrt_mv(RootSign::Plus, &c).unwrap();
        let via_log = m.log(&c).unwrap().scale(0.5).exp().unwrap();
        assert!(close(&s, &via_log, 1e-12));
    }

    #[test]
    fn scalar_roots_families() {
        let e12 = Multivector::basis(2, 3).unwrap();
        let zero = Multivector::zero(2);
        assert!(close(&scalar_roots(-1.0, &zero).unwrap(), &e12, 1e-15));
        assert!(close(&scalar_roots(-4.0, &zero).unwrap(), &e12.scale(2.0), 1e-15));
        let v = Multivector::vector(2, &[1.0, 0.0]).unwrap();
        let r = scalar_roots(-1.0, &v).unwrap();
        let want = v + e12.scale(2f64.sqrt());
        assert!(close(&r, &want, 1e-15));
        assert!(close(&(r * r), &Multivector::scalar(2, -1.0), 1e-14));
        // Positive scalar with a direction parameter.
        let r = scalar_roots(9.0, &v).unwrap();
        assert!(close(&(r * r), &Multivector::scalar(2, 9.0), 1e-14));
        assert!(close(&scalar_roots(9.0, &zero).unwrap(), &Multivector::scalar(2, 3.0), 1e-15));
    }

    #[test]
    fn root_minus_one_family() {
        let c = ctx();
        let e1 = Multivector::vector(3, &[1.0, 0.0, 0.0]).unwrap();
        let e2 = Multivector::vector(3, &[0.0, 1.0, 0.0]).unwrap();
        for theta in [0.0, 0.7, -1.3] {
            let r = root_minus_one_3d(theta, &e1, &e2, &c).unwrap();
            assert!(close(&(r * r), &Multivector::scalar(3, -1.0), 1e-13), "theta {theta}");
        }
        assert_eq!(
            root_minus_one_3d(0.0, &e1, &e1, &c),
            Err(GaError::NonOrthonormal)
        );
    }

    #[test]
    fn pow_int_matches_repeated_product() {
        let c = ctx();
        let e12 = Multivector::basis(2, 3).unwrap();
        assert!(close(&e12.pow_int(2, &c).unwrap(), &Multivector::scalar(2, -1.0), 1e-15));
        let m = mv(3, &[0.5, 1.0, -0.3, 0.2, 0.4, -0.1, 0.6, 0.9]);
        let mut acc = Multivector::scalar(3, 1.0);
        for _ in 0..5 {
            acc = acc * m;
        }
        assert!(close(&m.pow_int(5, &c).unwrap(), &acc, 1e-12));
        // Negative power: M^-2 * M^2 = 1.
        let p = m.pow_int(-2, &c).unwrap() * m.pow_int(2, &c).unwrap();
        assert!(close(&p, &Multivector::scalar(3, 1.0), 1e-12));
    }

    #[test]
    fn pow_real_values() {
        let c = ctx();
        // 4^0.5 = 2 through the central route.
        let m = Multivector::scalar(3, 4.0);
        assert!(close(&m.pow_real(0.5, &c).unwrap(), &Multivector::scalar(3, 2.0), 1e-14));
        // De Moivre at x = 2 equals the direct square.
        let m = mv(3, &[0.5, 1.0, -0.3, 0.2, 0.4, -0.1, 0.6, 0.9]);
        assert!(close(&m.pow_real(2.0, &c).unwrap(), &(m * m), 1e-12));
        // Half power squares back.
        let h = m.pow_real(0.5, &c).unwrap();
        assert!(close(&(h * h), &m, 1e-12));
        // 2D hyperbolic regime with positive scalar part.
        let m = mv(2, &[2.0, 1.0, 0.0, 0.0]);
        let h = m.pow_real(0.5, &c).unwrap();
        assert!(close(&(h * h), &m, 1e-13));
        // ... and the rejected regime.
        let m = mv(2, &[-2.0, 1.0, 0.0, 0.0]);
        assert_eq!(m.pow_real(0.5, &c), Err(GaError::NoExponentialForm));
    }

    #[test]
    fn pow_mv_fixed_identities() {
        let c = ctx();
        let j = Multivector::basis(3, 7).unwrap();
        // j^j = exp(-pi/2).
        let p = j.pow_mv(&j, PowerSide::Right, &c).unwrap();
        assert!(close(&p, &Multivector::scalar(3, (-FRAC_PI_2).exp()), 1e-14));
        // e1^e1 = e1.
        let e1 = Multivector::vector(3, &[1.0, 0.0, 0.0]).unwrap();
        assert!(close(&e1.pow_mv(&e1, PowerSide::Right, &c).unwrap(), &e1, 1e-13));
        // j^e3 = e12 (= e123 e3).
        let e3 = Multivector::vector(3, &[0.0, 0.0, 1.0]).unwrap();
        let want = Multivector::basis(3, 4).unwrap();
        assert!(close(&j.pow_mv(&e3, PowerSide::Right, &c).unwrap(), &want, 1e-13));
        // (e123 e3)^e3 = e123.
        let je3 = Multivector::basis(3, 4).unwrap();
        assert!(close(&je3.pow_mv(&e3, PowerSide::Right, &c).unwrap(), &j, 1e-13));
    }

    #[test]
    fn log_base_value() {
        let c = ctx();
        let j = Multivector::basis(3, 7).unwrap();
        let m = Multivector::scalar(3, -1.0);
        let got = log_base(&j, &m, &c).unwrap();
        assert!(close(&got, &Multivector::scalar(3, 2.0), 1e-14));
    }

    #[test]
    fn log_two_vectors_matches_direct_log() {
        let c = ctx();
        for (a, b) in [
            ([1.0, 0.2, -0.5], [0.3, 1.1, 0.4]),
            ([1.0, 0.0, 0.0], [-1.0, 0.2, 0.0]), // obtuse pair
        ] {
            let av = Multivector::vector(3, &a).unwrap();
            let bv = Multivector::vector(3, &b).unwrap();
            let got = log_two_vectors(&av, &bv, &c).unwrap();
            let want = av.gp(&bv).unwrap().log(&c).unwrap();
            assert!(close(&got, &want, 1e-12), "{a:?} {b:?}");
        }
        // Parallel vectors: scalar route.
        let av = Multivector::vector(2, &[2.0, 0.0]).unwrap();
        let bv = Multivector::vector(2, &[3.0, 0.0]).unwrap();
        let got = log_two_vectors(&av, &bv, &c).unwrap();
        assert!(close(&got, &Multivector::scalar(2, 6f64.ln()), 1e-14));
        // Anti-parallel in dim 3: picks up pi e123.
        let got = log_two_vectors(&av.embed_in(3).unwrap(), &bv.embed_in(3).unwrap().scale(-1.0), &c).unwrap();
        let want = Multivector::scalar(3, 6f64.ln()) + Multivector::basis(3, 7).unwrap().scale(PI);
        assert!(close(&got, &want, 1e-14));
    }

    #[test]
    fn one_dimensional_specialisation() {
        let c = ctx();
        // exp in dimension 1: hyperbolic.
        let m = mv(1, &[0.3, 0.9]);
        let e = m.exp().unwrap();
        let want = mv(1, &[E.powf(0.3) * 0.9f64.cosh(), E.powf(0.3) * 0.9f64.sinh()]);
        assert!(close(&e, &want, 1e-14));
        // log exists iff a > |v|.
        let l = e.log(&c).unwrap();
        assert!(close(&l, &m, 1e-13));
        assert!(mv(1, &[0.5, 2.0]).log(&c).is_err());
        assert!(mv(1, &[-2.0, 0.5]).log(&c).is_err());
    }
}
