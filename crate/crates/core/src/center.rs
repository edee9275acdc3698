//! Commuting complex-like scalars.
//!
//! Several quantities in this library live in a two-component subalgebra that
//! multiplies exactly like the complex numbers: the centre `a + t e123` of the
//! dimension-3 algebra, and the even line `a + b e12` that carries amplitudes
//! and arguments in dimensions 1-2. [`CenterComplex`] is that value type; the
//! meaning of `im` (which unit it multiplies) is fixed by the dimension of the
//! surrounding computation.
//!
//! [`SplitScalar`] is the constrained form taken by amplitudes below
//! dimension 3: the radicand there is real, so the square root is either a
//! real scalar or a pure pseudoscalar multiple, never a mixture.

use crate::error::{GaError, Result};
use num_complex::Complex64;

/// A commuting complex pair `re + im * u`, where `u` is the pseudoscalar-like
/// unit of the ambient dimension (`e123` in dim 3, `e12` in dims 1-2).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CenterComplex {
    pub re: f64,
    pub im: f64,
}

impl CenterComplex {
    pub const ZERO: CenterComplex = CenterComplex { re: 0.0, im: 0.0 };
    pub const ONE: CenterComplex = CenterComplex { re: 1.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Self {
        CenterComplex { re, im }
    }

    pub fn real(re: f64) -> Self {
        CenterComplex { re, im: 0.0 }
    }

    fn c(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    fn from_c(z: Complex64) -> Self {
        CenterComplex { re: z.re, im: z.im }
    }

    /// Replace signed zeros by +0.0 so that principal-branch functions treat
    /// computed zeros consistently (arg(-1 - 0.0i) must be pi, not -pi).
    fn canonical(self) -> Complex64 {
        let re = if self.re == 0.0 { 0.0 } else { self.re };
        let im = if self.im == 0.0 { 0.0 } else { self.im };
        Complex64::new(re, im)
    }

    pub fn modulus(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn is_real(self) -> bool {
        self.im == 0.0
    }

    pub fn conj(self) -> Self {
        CenterComplex::new(self.re, -self.im)
    }

    /// Principal square root: branch cut along the negative real axis, result
    /// with `re >= 0`, and `im >= 0` on the cut itself.
    pub fn sqrt(self) -> Self {
        Self::from_c(self.canonical().sqrt())
    }

    /// Principal logarithm with imaginary part in (-pi, pi].
    pub fn ln(self) -> Self {
        Self::from_c(self.canonical().ln())
    }

    pub fn exp(self) -> Self {
        Self::from_c(self.c().exp())
    }

    pub fn cos(self) -> Self {
        Self::from_c(self.c().cos())
    }

    pub fn sin(self) -> Self {
        Self::from_c(self.c().sin())
    }

    pub fn cosh(self) -> Self {
        Self::from_c(self.c().cosh())
    }

    pub fn sinh(self) -> Self {
        Self::from_c(self.c().sinh())
    }

    /// Principal power `self^p = exp(p * ln(self))`.
    pub fn powc(self, p: CenterComplex) -> Self {
        Self::from_c(self.canonical().powc(p.c()))
    }

    pub fn powf(self, p: f64) -> Self {
        self.powc(CenterComplex::real(p))
    }

    pub fn inv(self) -> Self {
        Self::from_c(self.c().inv())
    }

    pub fn scale(self, s: f64) -> Self {
        CenterComplex::new(self.re * s, self.im * s)
    }
}

impl std::ops::Add for CenterComplex {
    type Output = CenterComplex;
    fn add(self, rhs: Self) -> Self {
        CenterComplex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl std::ops::Sub for CenterComplex {
    type Output = CenterComplex;
    fn sub(self, rhs: Self) -> Self {
        CenterComplex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl std::ops::Neg for CenterComplex {
    type Output = CenterComplex;
    fn neg(self) -> Self {
        CenterComplex::new(-self.re, -self.im)
    }
}

impl std::ops::Mul for CenterComplex {
    type Output = CenterComplex;
    fn mul(self, rhs: Self) -> Self {
        Self::from_c(self.c() * rhs.c())
    }
}

impl std::ops::Div for CenterComplex {
    type Output = CenterComplex;
    fn div(self, rhs: Self) -> Self {
        Self::from_c(self.c() / rhs.c())
    }
}

/// Amplitude value in dimensions 1-2: either a real scalar or a pseudoscalar
/// multiple `ps * e12`, never both.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SplitScalar {
    pub re: f64,
    pub ps: f64,
}

impl SplitScalar {
    /// Principal square root of a real radicand: `sqrt(r)` when `r >= 0`,
    /// otherwise `e12 * sqrt(-r)`.
    pub fn from_radicand(r: f64) -> Self {
        if r >= 0.0 {
            SplitScalar { re: r.sqrt(), ps: 0.0 }
        } else {
            SplitScalar { re: 0.0, ps: (-r).sqrt() }
        }
    }

    pub fn is_real(self) -> bool {
        self.ps == 0.0
    }

    pub fn modulus(self) -> f64 {
        self.re.abs() + self.ps.abs()
    }

    /// View as a complex pair over the `e12` unit.
    pub fn to_center(self) -> CenterComplex {
        CenterComplex::new(self.re, self.ps)
    }
}

/// Amplitude |M| across dimensions: a [`SplitScalar`] below dimension 3 and a
/// [`CenterComplex`] (over `e123`) in dimension 3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Amplitude {
    Split(SplitScalar),
    Center(CenterComplex),
}

impl Amplitude {
    pub fn modulus(&self) -> f64 {
        match self {
            Amplitude::Split(s) => s.modulus(),
            Amplitude::Center(z) => z.modulus(),
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            Amplitude::Split(s) => s.is_real(),
            Amplitude::Center(z) => z.is_real(),
        }
    }

    /// Uniform complex view (the imaginary unit is the dimension's own).
    pub fn to_center(&self) -> CenterComplex {
        match self {
            Amplitude::Split(s) => s.to_center(),
            Amplitude::Center(z) => *z,
        }
    }

    pub fn split(&self) -> Result<SplitScalar> {
        match self {
            Amplitude::Split(s) => Ok(*s),
            Amplitude::Center(_) => Err(GaError::NonRealAmplitude2D),
        }
    }

    pub fn center(&self) -> Result<CenterComplex> {
        match self {
            Amplitude::Center(z) => Ok(*z),
            Amplitude::Split(_) => Err(GaError::NonScalarRadicand),
        }
    }
}
