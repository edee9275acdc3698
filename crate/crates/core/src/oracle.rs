//! Independent verification backends.
//!
//! Two cross-checks that share no code with the function library:
//!
//! * **Matrix route.** The dimension-2 algebra is isomorphic to real 2x2
//!   matrices and the dimension-3 algebra to complex 2x2 matrices (the Pauli
//!   representation); dimension 1 embeds in dimension 2. Analytic functions
//!   of a 2x2 matrix have a closed form through its eigenvalues, so
//!   `unrep(f(rep(M)))` gives a reference value for `f(M)` that never touches
//!   the multivector formulas.
//! * **Series route.** Raw power-series summation with multivector
//!   arithmetic only, for exp/cos/sin/cosh/sinh and log(1 + M).
//!
//! Matrix functions use the principal branch of each eigenvalue scalar
//! function. When an eigenvalue sits near the negative real cut (for log and
//! sqrt), the matrix and multivector principal values may legitimately
//! disagree; [`MatFnOutput::branch_mismatch`] flags those inputs instead of
//! failing.

use crate::context::Context;
use crate::error::{GaError, Result};
use crate::multivector::Multivector;
use num_complex::Complex64;

/// Real 2x2 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2R(pub [[f64; 2]; 2]);

/// Complex 2x2 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2C(pub [[Complex64; 2]; 2]);

impl Mat2R {
    pub fn zero() -> Self {
        Mat2R([[0.0; 2]; 2])
    }

    pub fn mul(&self, rhs: &Mat2R) -> Mat2R {
        let a = &self.0;
        let b = &rhs.0;
        Mat2R([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }

    pub fn add(&self, rhs: &Mat2R) -> Mat2R {
        let mut out = *self;
        for i in 0..2 {
            for k in 0..2 {
                out.0[i][k] += rhs.0[i][k];
            }
        }
        out
    }

    pub fn to_complex(&self) -> Mat2C {
        let mut out = Mat2C::zero();
        for i in 0..2 {
            for k in 0..2 {
                out.0[i][k] = Complex64::new(self.0[i][k], 0.0);
            }
        }
        out
    }
}

impl Mat2C {
    pub fn zero() -> Self {
        Mat2C([[Complex64::new(0.0, 0.0); 2]; 2])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        m.0[0][0] = Complex64::new(1.0, 0.0);
        m.0[1][1] = Complex64::new(1.0, 0.0);
        m
    }

    pub fn mul(&self, rhs: &Mat2C) -> Mat2C {
        let a = &self.0;
        let b = &rhs.0;
        Mat2C([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }

    pub fn add(&self, rhs: &Mat2C) -> Mat2C {
        let mut out = *self;
        for i in 0..2 {
            for k in 0..2 {
                out.0[i][k] += rhs.0[i][k];
            }
        }
        out
    }

    pub fn scale(&self, z: Complex64) -> Mat2C {
        let mut out = *self;
        for row in out.0.iter_mut() {
            for x in row.iter_mut() {
                *x *= z;
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Mat2C) -> Mat2C {
        self.add(&rhs.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_imag(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.im.abs())
            .fold(0.0, f64::max)
    }

    /// Eigenvalues as `(mean, delta)`: the spectrum is `mean +/- delta`.
    pub fn eigen_pair(&self) -> (Complex64, Complex64) {
        let a = &self.0;
        let mean = (a[0][0] + a[1][1]) * 0.5;
        let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        let delta = (mean * mean - det).sqrt();
        (mean, delta)
    }
}

/// Represent a dimension-2 multivector as a real 2x2 matrix:
/// `e1 -> diag(1, -1)`, `e2 -> [[0,1],[1,0]]`, `e12 -> [[0,1],[-1,0]]`.
pub fn rep2(m: &Multivector) -> Result<Mat2R> {
    if m.dim() != 2 {
        return Err(GaError::UnsupportedDim {
            op: "rep2",
            dim: m.dim(),
        });
    }
    let c = m.coeffs();
    Ok(Mat2R([
        [c[0] + c[1], c[2] + c[3]],
        [c[2] - c[3], c[0] - c[1]],
    ]))
}

/// Exact inverse of [`rep2`].
pub fn unrep2(a: &Mat2R) -> Multivector {
    let m = &a.0;
    Multivector::new(
        2,
        &[
            (m[0][0] + m[1][1]) * 0.5,
            (m[0][0] - m[1][1]) * 0.5,
            (m[0][1] + m[1][0]) * 0.5,
            (m[0][1] - m[1][0]) * 0.5,
        ],
    )
    .expect("matrix entries are finite")
}

/// Represent a dimension-3 multivector as a complex 2x2 matrix via the Pauli
/// basis: `e1 -> s1`, `e2 -> s2`, `e3 -> s3`, `e123 -> iI` (so each bivector
/// is `i` times the dual Pauli matrix).
pub fn rep3(m: &Multivector) -> Result<Mat2C> {
    if m.dim() != 3 {
        return Err(GaError::UnsupportedDim {
            op: "rep3",
            dim: m.dim(),
        });
    }
    let c = m.coeffs();
    let (a, v1, v2, v3, b12, b31, b23, t) = (c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]);
    Ok(Mat2C([
        [
            Complex64::new(a + v3, t + b12),
            Complex64::new(v1 + b31, b23 - v2),
        ],
        [
            Complex64::new(v1 - b31, b23 + v2),
            Complex64::new(a - v3, t - b12),
        ],
    ]))
}

/// Exact inverse of [`rep3`]; the representation is onto, so every complex
/// 2x2 matrix decodes.
pub fn unrep3(a: &Mat2C) -> Multivector {
    let m = &a.0;
    let half = 0.5;
    Multivector::new(
        3,
        &[
            (m[0][0].re + m[1][1].re) * half,
            (m[0][1].re + m[1][0].re) * half,
            (m[1][0].im - m[0][1].im) * half,
            (m[0][0].re - m[1][1].re) * half,
            (m[0][0].im - m[1][1].im) * half,
            (m[0][1].re - m[1][0].re) * half,
            (m[0][1].im + m[1][0].im) * half,
            (m[0][0].im + m[1][1].im) * half,
        ],
    )
    .expect("matrix entries are finite")
}

/// Scalar function selector for the matrix oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FnKind {
    Exp,
    Log,
    Sqrt,
    Cos,
    Sin,
    Cosh,
    Sinh,
}

impl FnKind {
    fn eval(self, z: Complex64) -> Complex64 {
        match self {
            FnKind::Exp => z.exp(),
            FnKind::Log => z.ln(),
            FnKind::Sqrt => z.sqrt(),
            FnKind::Cos => z.cos(),
            FnKind::Sin => z.sin(),
            FnKind::Cosh => z.cosh(),
            FnKind::Sinh => z.sinh(),
        }
    }

    fn deriv(self, z: Complex64) -> Complex64 {
        match self {
            FnKind::Exp => z.exp(),
            FnKind::Log => z.inv(),
            FnKind::Sqrt => (z.sqrt() * 2.0).inv(),
            FnKind::Cos => -z.sin(),
            FnKind::Sin => z.cos(),
            FnKind::Cosh => z.sinh(),
            FnKind::Sinh => z.cosh(),
        }
    }

    fn has_cut(self) -> bool {
        matches!(self, FnKind::Log | FnKind::Sqrt)
    }
}

/// Result of a matrix-function evaluation.
#[derive(Debug, Clone, Copy)]
pub struct MatFn2 {
    pub value: Mat2C,
    /// An eigenvalue sat near the negative real axis for a cut function;
    /// principal values of the matrix and multivector routes may then differ
    /// by a branch.
    pub branch_mismatch: bool,
}

/// Analytic function of a 2x2 matrix through its spectrum:
/// `f(A) = (f(l+) + f(l-))/2 I + (f(l+) - f(l-))/(l+ - l-) (A - mean I)`,
/// switching to the exact confluent form `f(mean) I + f'(mean)(A - mean I)`
/// when the eigenvalues nearly coincide.
pub fn mat_fn(a: &Mat2C, kind: FnKind, ctx: &Context) -> Result<MatFn2> {
    let (mean, delta) = a.eigen_pair();
    let scale = a.norm().max(1.0);
    let n = a.sub(&Mat2C::identity().scale(mean));
    let mut branch_mismatch = false;
    let (alpha, beta) = if delta.norm() <= 1e-6 * scale {
        if kind.has_cut() && mean.re < ctx.check_eps * scale && mean.im.abs() <= 1e-3 * scale {
            branch_mismatch = true;
        }
        if kind.has_cut() && mean.norm() <= ctx.null_eps * scale {
            return Err(GaError::ZeroDenominator);
        }
        (kind.eval(mean), kind.deriv(mean))
    } else {
        let (lp, lm) = (mean + delta, mean - delta);
        if kind.has_cut() {
            for l in [lp, lm] {
                if l.norm() <= ctx.null_eps * scale {
                    return Err(GaError::ZeroDenominator);
                }
                if l.re < 0.0 && l.im.abs() <= 1e-3 * l.norm() {
                    branch_mismatch = true;
                }
            }
        }
        let (fp, fm) = (kind.eval(lp), kind.eval(lm));
        ((fp + fm) * 0.5, (fp - fm) / (lp - lm))
    };
    let value = Mat2C::identity().scale(alpha).add(&n.scale(beta));
    Ok(MatFn2 {
        value,
        branch_mismatch,
    })
}

/// Multivector-level wrapper of the matrix oracle.
#[derive(Debug, Clone, Copy)]
pub struct MatFnOutput {
    pub value: Multivector,
    pub branch_mismatch: bool,
    /// Norm of whatever the decoded matrix carried outside the source
    /// algebra (imaginary parts in dimension 2, extra blades in dimension 1);
    /// near zero when matrix and multivector routes agree.
    pub residual: f64,
}

/// Evaluate `f(M)` through the matrix representation of the dimension.
pub fn mat_fn_mv(m: &Multivector, kind: FnKind, ctx: &Context) -> Result<MatFnOutput> {
    match m.dim() {
        1 | 2 => {
            let wide = if m.dim() == 1 { m.embed_in(2)? } else { *m };
            let out = mat_fn(&rep2(&wide)?.to_complex(), kind, ctx)?;
            let imag = out.value.max_imag();
            let mut real = Mat2R::zero();
            for i in 0..2 {
                for k in 0..2 {
                    real.0[i][k] = out.value.0[i][k].re;
                }
            }
            let decoded = unrep2(&real);
            let (value, dropped) = decoded.project_to(m.dim())?;
            Ok(MatFnOutput {
                value,
                branch_mismatch: out.branch_mismatch,
                residual: imag.hypot(dropped),
            })
        }
        3 => {
            let out = mat_fn(&rep3(m)?, kind, ctx)?;
            Ok(MatFnOutput {
                value: unrep3(&out.value),
                branch_mismatch: out.branch_mismatch,
                residual: 0.0,
            })
        }
        d => Err(GaError::UnsupportedDim {
            op: "mat_fn_mv",
            dim: d,
        }),
    }
}

/// Power-series selector for the series oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Exp,
    Cos,
    Sin,
    Cosh,
    Sinh,
    /// `log(1 + M)`; requires the spectrum of `M` inside the unit disc.
    Log1p,
}

/// Largest eigenvalue modulus of the matrix representation (dimensions 1-3);
/// a conservative coefficient-norm bound in dimension 4.
fn spectral_bound(m: &Multivector) -> Result<f64> {
    if m.dim() <= 3 {
        let wide = m.embed_in(3)?;
        let (mean, delta) = rep3(&wide)?.eigen_pair();
        Ok((mean + delta).norm().max((mean - delta).norm()))
    } else {
        Ok(m.norm() * std::f64::consts::SQRT_2)
    }
}

/// Sum `terms` terms of the chosen power series using only multivector
/// products. For [`SeriesKind::Log1p`] the argument's spectrum must stay
/// inside the unit disc, otherwise [`GaError::DivergentSeries`].
pub fn series_eval(m: &Multivector, kind: SeriesKind, terms: usize) -> Result<Multivector> {
    let one = Multivector::scalar(m.dim(), 1.0);
    let m2 = m.gp(m)?;
    let mut acc;
    match kind {
        SeriesKind::Exp => {
            let mut term = one;
            acc = term;
            for k in 1..terms {
                term = term.gp(m)?.scale(1.0 / k as f64);
                acc = acc + term;
            }
        }
        SeriesKind::Cos | SeriesKind::Cosh => {
            let sign = if kind == SeriesKind::Cos { -1.0 } else { 1.0 };
            let mut term = one;
            acc = term;
            for k in 1..terms {
                let d = ((2 * k - 1) * 2 * k) as f64;
                term = term.gp(&m2)?.scale(sign / d);
                acc = acc + term;
            }
        }
        SeriesKind::Sin | SeriesKind::Sinh => {
            let sign = if kind == SeriesKind::Sin { -1.0 } else { 1.0 };
            let mut term = *m;
            acc = term;
            for k in 1..terms {
                let d = (2 * k * (2 * k + 1)) as f64;
                term = term.gp(&m2)?.scale(sign / d);
                acc = acc + term;
            }
        }
        SeriesKind::Log1p => {
            if spectral_bound(m)? >= 1.0 - 1e-9 {
                return Err(GaError::DivergentSeries);
            }
            // sum_{k>=1} (-1)^{k+1} M^k / k
            let mut power = *m;
            acc = power;
            for k in 2..=terms {
                power = power.gp(m)?.scale(-1.0);
                acc = acc + power.scale(1.0 / k as f64);
            }
        }
    }
    Ok(acc)
}
