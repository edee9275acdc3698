//! Trigonometric and hyperbolic functions of a multivector, with inverses.
//!
//! Direct functions follow from the same split used by the exponential:
//! with `M = Z + F` and `s = |F|^2 = -F^2`,
//!
//! ```text
//! cosh M = c(s) cosh Z + F m(s) sinh Z     cos M = c(-s) cos Z - F m(-s) sin Z
//! sinh M = c(s) sinh Z + F m(s) cosh Z     sin M = c(-s) sin Z + F m(-s) cos Z
//! ```
//!
//! where `c(s) = cos(sqrt(s))` and `m(s) = sin(sqrt(s))/sqrt(s)` are the
//! kernels shared with the exponential. `F` squares to `-|F|^2`, so the
//! hyperbolic pair picks up the circular kernels and vice versa: a bivector
//! argument makes cos grow like cosh, while a vector argument keeps it
//! bounded.
//!
//! Inverse functions go through the principal logarithm and square root and
//! inherit those domains: the circular inverses need the dimension-3
//! pseudoscalar, while the hyperbolic ones exist in dimensions 1-3.

use crate::center::CenterComplex;
use crate::context::Context;
use crate::elem::{kernels_circular, kernels_hyperbolic};
use crate::error::{GaError, Result};
use crate::multivector::Multivector;

fn require_dim_le3(m: &Multivector, op: &'static str) -> Result<()> {
    if m.dim() > 3 {
        return Err(GaError::UnsupportedDim { op, dim: m.dim() });
    }
    Ok(())
}

fn require_dim3(m: &Multivector, op: &'static str) -> Result<()> {
    if m.dim() != 3 {
        return Err(GaError::UnsupportedDim { op, dim: m.dim() });
    }
    Ok(())
}

/// Assemble `head(Z) kernel_even(s) + F tail(Z) kernel_odd(s)`, with the
/// kernels taken at `s` (hyperbolic family) or `-s` (circular family).
fn even_odd(
    m: &Multivector,
    circular: bool,
    head: impl Fn(CenterComplex) -> CenterComplex,
    tail: impl Fn(CenterComplex) -> CenterComplex,
) -> Result<Multivector> {
    let split = m.split();
    let (s, _) = m.f_invariants()?;
    let (ke, ko) = if circular {
        kernels_hyperbolic(s)
    } else {
        kernels_circular(s)
    };
    let a = Multivector::from_complex(m.dim(), head(split.z) * ke)?;
    let b = split.f.mul_complex(tail(split.z) * ko)?;
    Ok(a + b)
}

impl Multivector {
    pub fn cosh_mv(&self) -> Result<Multivector> {
        require_dim_le3(self, "cosh")?;
        even_odd(self, false, |z| z.cosh(), |z| z.sinh())
    }

    pub fn sinh_mv(&self) -> Result<Multivector> {
        require_dim_le3(self, "sinh")?;
        even_odd(self, false, |z| z.sinh(), |z| z.cosh())
    }

    pub fn cos_mv(&self) -> Result<Multivector> {
        require_dim_le3(self, "cos")?;
        even_odd(self, true, |z| z.cos(), |z| -(z.sin()))
    }

    pub fn sin_mv(&self) -> Result<Multivector> {
        require_dim_le3(self, "sin")?;
        even_odd(self, true, |z| z.sin(), |z| z.cos())
    }

    /// `tan M = sin M (cos M)^{-1}`; sine and cosine of the same argument
    /// commute, so the quotient is side-independent.
    pub fn tan_mv(&self, ctx: &Context) -> Result<Multivector> {
        let c = self.cos_mv()?;
        self.sin_mv()?.gp(&c.inverse(ctx)?)
    }

    pub fn tanh_mv(&self, ctx: &Context) -> Result<Multivector> {
        let c = self.cosh_mv()?;
        self.sinh_mv()?.gp(&c.inverse(ctx)?)
    }

    /// `arcsinh X = log(X + sqrt(1 + X^2))`, principal throughout.
    pub fn arcsinh_mv(&self, ctx: &Context) -> Result<Multivector> {
        require_dim_le3(self, "arcsinh")?;
        let one = Multivector::scalar(self.dim(), 1.0);
        let root = (one + *self * *self).sqrt_principal(ctx)?;
        (*self + root).log(ctx)
    }

    /// `arccosh X = log(X + sqrt(X^2 - 1))`.
    pub fn arccosh_mv(&self, ctx: &Context) -> Result<Multivector> {
        require_dim_le3(self, "arccosh")?;
        let one = Multivector::scalar(self.dim(), 1.0);
        let root = (*self * *self - one).sqrt_principal(ctx)?;
        (*self + root).log(ctx)
    }

    /// `arctanh X = (log(1 + X) - log(1 - X)) / 2`.
    pub fn arctanh_mv(&self, ctx: &Context) -> Result<Multivector> {
        require_dim_le3(self, "arctanh")?;
        let one = Multivector::scalar(self.dim(), 1.0);
        let p = (one + *self).log(ctx)?;
        let q = (one - *self).log(ctx)?;
        Ok((p - q).scale(0.5))
    }

    /// `arcsin X = -e123 log(e123 X + sqrt(1 - X^2))`; needs the central
    /// pseudoscalar, hence dimension 3.
    pub fn arcsin_mv(&self, ctx: &Context) -> Result<Multivector> {
        require_dim3(self, "arcsin")?;
        let j = Multivector::basis(3, 7)?;
        let one = Multivector::scalar(3, 1.0);
        let root = (one - *self * *self).sqrt_principal(ctx)?;
        let l = (j * *self + root).log(ctx)?;
        Ok(-(j * l))
    }

    /// `arccos X = -e123 log(X + e123 sqrt(1 - X^2))`.
    pub fn arccos_mv(&self, ctx: &Context) -> Result<Multivector> {
        require_dim3(self, "arccos")?;
        let j = Multivector::basis(3, 7)?;
        let one = Multivector::scalar(3, 1.0);
        let root = (one - *self * *self).sqrt_principal(ctx)?;
        let l = (*self + j * root).log(ctx)?;
        Ok(-(j * l))
    }

    /// `arctan X = (e123 / 2)(log(1 - e123 X) - log(1 + e123 X))`.
    pub fn arctan_mv(&self, ctx: &Context) -> Result<Multivector> {
        require_dim3(self, "arctan")?;
        let j = Multivector::basis(3, 7)?;
        let one = Multivector::scalar(3, 1.0);
        let p = (one - j * *self).log(ctx)?;
        let q = (one + j * *self).log(ctx)?;
        Ok(j * (p - q).scale(0.5))
    }
}

/// A zero of sinh in dimension 3: `m pi fhat + n pi e123`, or with `half`
/// set, `(m + 1/2) pi fhat + (n + 1/2) pi e123`. `fhat` must square to -1.
pub fn sinh_zeros(
    m_idx: i32,
    n_idx: i32,
    half: bool,
    fhat: &Multivector,
    ctx: &Context,
) -> Result<Multivector> {
    require_dim3(fhat, "sinh_zeros")?;
    let sq = *fhat * *fhat;
    if (sq + Multivector::scalar(3, 1.0)).norm() > ctx.check_eps {
        return Err(GaError::InvalidFhat);
    }
    let shift = if half { 0.5 } else { 0.0 };
    let pi = std::f64::consts::PI;
    let j = Multivector::basis(3, 7)?;
    Ok(fhat.scale((f64::from(m_idx) + shift) * pi) + j.scale((f64::from(n_idx) + shift) * pi))
}
