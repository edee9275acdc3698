//! Dense multivectors over the Euclidean Clifford algebras of dimensions 1-4.
//!
//! Coefficients are stored against a fixed canonical blade order per
//! dimension:
//!
//! * dim 1: `[1, e1]`
//! * dim 2: `[1, e1, e2, e12]`
//! * dim 3: `[1, e1, e2, e3, e12, e31, e23, e123]`
//! * dim 4: `[1, e1, e2, e3, e4, e12, e13, e14, e23, e24, e34, e123, e124,
//!   e134, e234, e1234]`
//!
//! Note the dimension-3 bivector order `e12, e31, e23`: each bivector is the
//! dual of the like-indexed vector (`e23 = e123 e1` and so on), which keeps
//! the vector/bivector pairing used throughout the function library aligned
//! by index. `e31 = -e13`, and the orientation sign is handled by the blade
//! tables below.

use crate::center::CenterComplex;
use crate::error::{GaError, Result};
use std::fmt;

pub(crate) const MAX_COEFFS: usize = 16;

/// Canonical blade order, expressed as basis bitmasks (bit k = factor e_{k+1})
/// plus an orientation sign relative to the ascending-index blade.
struct BladeTable {
    masks: &'static [u16],
    signs: &'static [f64],
    mask_to_idx: &'static [usize],
    names: &'static [&'static str],
}

static TABLE_1: BladeTable = BladeTable {
    masks: &[0, 1],
    signs: &[1.0, 1.0],
    mask_to_idx: &[0, 1],
    names: &["", "e1"],
};

static TABLE_2: BladeTable = BladeTable {
    masks: &[0, 1, 2, 3],
    signs: &[1.0, 1.0, 1.0, 1.0],
    mask_to_idx: &[0, 1, 2, 3],
    names: &["", "e1", "e2", "e12"],
};

static TABLE_3: BladeTable = BladeTable {
    masks: &[0, 1, 2, 4, 3, 5, 6, 7],
    // index 5 stores e31 = -e13
    signs: &[1.0, 1.0, 1.0, 1.0, 1.0, -1.0, 1.0, 1.0],
    mask_to_idx: &[0, 1, 2, 4, 3, 5, 6, 7],
    names: &["", "e1", "e2", "e3", "e12", "e31", "e23", "e123"],
};

static TABLE_4: BladeTable = BladeTable {
    masks: &[0, 1, 2, 4, 8, 3, 5, 9, 6, 10, 12, 7, 11, 13, 14, 15],
    signs: &[1.0; 16],
    mask_to_idx: &[0, 1, 2, 5, 3, 6, 8, 11, 4, 7, 9, 12, 10, 13, 14, 15],
    names: &[
        "", "e1", "e2", "e3", "e4", "e12", "e13", "e14", "e23", "e24", "e34",
        "e123", "e124", "e134", "e234", "e1234",
    ],
};

fn table(dim: usize) -> &'static BladeTable {
    match dim {
        1 => &TABLE_1,
        2 => &TABLE_2,
        3 => &TABLE_3,
        4 => &TABLE_4,
        _ => unreachable!("dimension is validated at construction"),
    }
}

/// Sign incurred by reordering the product of two ascending-index blades into
/// ascending order (Euclidean metric: each transposition of distinct
/// generators contributes -1, squares contribute +1).
fn reorder_sign(a: u16, b: u16) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// A multivector of Cl(R^n), 1 <= n <= 4, with f64 coefficients.
#[derive(Clone, Copy, PartialEq)]
pub struct Multivector {
    dim: u8,
    c: [f64; MAX_COEFFS],
}

/// A single grade slice of a multivector, tagged with its grade.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GradePart {
    pub k: usize,
    pub value: Multivector,
}

impl Multivector {
    /// Build a multivector from `1 << dim` coefficients in canonical blade
    /// order. Rejects unsupported dimensions, wrong coefficient counts, and
    /// non-finite entries.
    pub fn new(dim: usize, coeffs: &[f64]) -> Result<Self> {
        if !(1..=4).contains(&dim) {
            return Err(GaError::InvalidDim(dim));
        }
        let expected = 1usize << dim;
        if coeffs.len() != expected {
            return Err(GaError::CoeffLength {
                dim,
                expected,
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|x| !x.is_finite()) {
            return Err(GaError::NonFinite);
        }
        let mut c = [0.0; MAX_COEFFS];
        c[..expected].copy_from_slice(coeffs);
        Ok(Multivector { dim: dim as u8, c })
    }

    pub fn zero(dim: usize) -> Self {
        Multivector::new(dim, &vec![0.0; 1 << dim]).expect("dim validated by caller")
    }

    pub fn scalar(dim: usize, a: f64) -> Self {
        let mut m = Multivector::zero(dim);
        m.c[0] = a;
        m
    }

    /// The canonical basis blade at the given coefficient index.
    pub fn basis(dim: usize, idx: usize) -> Result<Self> {
        let mut m = Multivector::zero(dim);
        if idx >= m.len() {
            return Err(GaError::CoeffLength {
                dim,
                expected: m.len(),
                got: idx,
            });
        }
        m.c[idx] = 1.0;
        Ok(m)
    }

    /// A grade-1 vector with the given components.
    pub fn vector(dim: usize, comps: &[f64]) -> Result<Self> {
        if comps.len() != dim {
            return Err(GaError::CoeffLength {
                dim,
                expected: dim,
                got: comps.len(),
            });
        }
        let mut m = Multivector::zero(dim);
        if comps.iter().any(|x| !x.is_finite()) {
            return Err(GaError::NonFinite);
        }
        m.c[1..=dim].copy_from_slice(comps);
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn len(&self) -> usize {
        1usize << self.dim
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.c[..self.len()]
    }

    pub fn coeff(&self, idx: usize) -> f64 {
        self.c[idx]
    }

    pub(crate) fn coeff_mut(&mut self, idx: usize) -> &mut f64 {
        &mut self.c[idx]
    }

    /// Grade of the blade stored at a coefficient index.
    pub fn blade_grade(dim: usize, idx: usize) -> usize {
        table(dim).masks[idx].count_ones() as usize
    }

    /// Canonical blade name for a coefficient index ("" for the scalar slot).
    pub fn blade_name(dim: usize, idx: usize) -> &'static str {
        table(dim).names[idx]
    }

    fn check_dims(&self, rhs: &Self) -> Result<()> {
        if self.dim != rhs.dim {
            return Err(GaError::DimMismatch {
                left: self.dim(),
                right: rhs.dim(),
            });
        }
        Ok(())
    }

    /// Checked sum; see also the panicking `+` operator for same-dimension
    /// contexts.
    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_dims(rhs)?;
        Ok(*self + *rhs)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_dims(rhs)?;
        Ok(*self - *rhs)
    }

    /// Geometric product. This is the single product everything else in the
    /// library is built from.
    pub fn gp(&self, rhs: &Self) -> Result<Self> {
        self.check_dims(rhs)?;
        Ok(self.mul_raw(rhs))
    }

    fn mul_raw(&self, rhs: &Self) -> Self {
        let t = table(self.dim());
        let n = self.len();
        let mut out = Multivector::zero(self.dim());
        for i in 0..n {
            let a = self.c[i];
            if a == 0.0 {
                continue;
            }
            let mi = t.masks[i];
            let si = t.signs[i];
            for j in 0..n {
                let b = rhs.c[j];
                if b == 0.0 {
                    continue;
                }
                let mj = t.masks[j];
                let mk = mi ^ mj;
                let k = t.mask_to_idx[mk as usize];
                let s = reorder_sign(mi, mj) * si * t.signs[j] * t.signs[k];
                out.c[k] += s * a * b;
            }
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = *self;
        for x in out.c.iter_mut() {
            *x *= s;
        }
        out
    }

    /// Extract a single grade.
    pub fn grade(&self, k: usize) -> Result<GradePart> {
        if k > self.dim() {
            return Err(GaError::GradeOutOfRange { k, dim: self.dim() });
        }
        Ok(GradePart {
            k,
            value: self.select(|g| g == k),
        })
    }

    /// Keep the coefficients whose blade grade satisfies the predicate.
    pub fn select(&self, keep: impl Fn(usize) -> bool) -> Self {
        let mut out = *self;
        for idx in 0..self.len() {
            if !keep(Self::blade_grade(self.dim(), idx)) {
                out.c[idx] = 0.0;
            }
        }
        out
    }

    fn grade_signs(&self, sign: impl Fn(usize) -> f64) -> Self {
        let mut out = *self;
        for idx in 0..self.len() {
            out.c[idx] *= sign(Self::blade_grade(self.dim(), idx));
        }
        out
    }

    /// Space inversion (grade involution): each grade-k part picks up
    /// (-1)^k. An automorphism of the geometric product.
    pub fn space_inversion(&self) -> Self {
        self.grade_signs(|g| if g % 2 == 0 { 1.0 } else { -1.0 })
    }

    /// Reversion: grade-k parts pick up (-1)^(k(k-1)/2), i.e. signs
    /// + + - - + ... . An anti-automorphism.
    pub fn reversion(&self) -> Self {
        self.grade_signs(|g| if (g * (g.wrapping_sub(1)) / 2) % 2 == 0 { 1.0 } else { -1.0 })
    }

    /// Clifford conjugation (composition of the other two): signs
    /// + - - + + ... . An anti-automorphism.
    pub fn cliff_conj(&self) -> Self {
        self.grade_signs(|g| if (g * (g + 1) / 2) % 2 == 0 { 1.0 } else { -1.0 })
    }

    /// Scalar inner product `<M1 reversion(M2)>_0`. On the canonical basis
    /// this is the plain dot product of coefficient arrays, and the induced
    /// norm is positive definite.
    pub fn inner(&self, rhs: &Self) -> Result<f64> {
        self.check_dims(rhs)?;
        Ok(self
            .coeffs()
            .iter()
            .zip(rhs.coeffs())
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Euclidean norm of the coefficient vector, `sqrt(<M reversion(M)>_0)`.
    pub fn norm(&self) -> f64 {
        self.coeffs().iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|x| *x == 0.0)
    }

    /// Scalar coefficient.
    pub fn scalar_part(&self) -> f64 {
        self.c[0]
    }

    /// Pseudoscalar coefficient (the last canonical slot).
    pub fn pseudoscalar_part(&self) -> f64 {
        self.c[self.len() - 1]
    }

    /// The commuting complex view of the grade {0, n} slots: `re` is the
    /// scalar and `im` the pseudoscalar coefficient. In dimension 3 this is
    /// the centre `a + t e123`; in dimension 2 the even unit is `e12`.
    pub fn complex_part(&self) -> CenterComplex {
        if self.dim() == 1 {
            CenterComplex::real(self.c[0])
        } else {
            CenterComplex::new(self.c[0], self.pseudoscalar_part())
        }
    }

    /// Embed `re + im * u`, where `u` is the dimension's commuting-complex
    /// unit: `e123` in dimension 3, `e12` in dimension 2. In dimension 1 the
    /// imaginary part must vanish.
    pub fn from_complex(dim: usize, z: CenterComplex) -> Result<Self> {
        if dim == 1 && z.im != 0.0 {
            return Err(GaError::NonRealAmplitude2D);
        }
        if dim == 4 {
            return Err(GaError::UnsupportedDim { op: "complex embed", dim });
        }
        let mut m = Multivector::zero(dim);
        m.c[0] = z.re;
        if dim > 1 {
            let last = m.len() - 1;
            m.c[last] = z.im;
        }
        Ok(m)
    }

    /// Multiply by an embedded complex coefficient on the right. In dimension
    /// 3 the coefficient is central so the side is immaterial; in dimensions
    /// 1-2 callers must keep the factor order of the formula being computed.
    pub fn mul_complex(&self, z: CenterComplex) -> Result<Self> {
        let zm = Multivector::from_complex(self.dim(), z)?;
        Ok(self.mul_raw(&zm))
    }

    /// Largest absolute coefficient outside the {scalar, pseudoscalar} slots;
    /// used to verify quantities that must be commuting-complex.
    pub fn noncomplex_residual(&self) -> f64 {
        let last = self.len() - 1;
        self.coeffs()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != 0 && (*i != last || self.dim() == 1))
            .map(|(_, x)| x.abs())
            .fold(0.0, f64::max)
    }

    /// Zero-extend into a higher-dimensional algebra; blades map by their
    /// basis factors, so products are preserved.
    pub fn embed_in(&self, dim: usize) -> Result<Multivector> {
        if !(1..=4).contains(&dim) {
            return Err(GaError::InvalidDim(dim));
        }
        if dim < self.dim() {
            return Err(GaError::DimMismatch {
                left: self.dim(),
                right: dim,
            });
        }
        let src = table(self.dim());
        let dst = table(dim);
        let mut out = Multivector::zero(dim);
        for i in 0..self.len() {
            let mask = src.masks[i];
            let k = dst.mask_to_idx[mask as usize];
            // Convert between orientation conventions (e31 vs e13).
            out.c[k] = self.c[i] * src.signs[i] * dst.signs[k];
        }
        Ok(out)
    }

    /// Keep only the blades that exist in a lower-dimensional algebra.
    /// Returns the projection and the norm of what was dropped.
    pub fn project_to(&self, dim: usize) -> Result<(Multivector, f64)> {
        if !(1..=4).contains(&dim) {
            return Err(GaError::InvalidDim(dim));
        }
        if dim > self.dim() {
            return Err(GaError::DimMismatch {
                left: self.dim(),
                right: dim,
            });
        }
        let src = table(self.dim());
        let dst = table(dim);
        let mut out = Multivector::zero(dim);
        let mut dropped = 0.0;
        let keep_mask: u16 = (1 << dim) - 1;
        for i in 0..self.len() {
            let mask = src.masks[i];
            if mask & !keep_mask == 0 {
                let k = dst.mask_to_idx[mask as usize];
                out.c[k] = self.c[i] * src.signs[i] * dst.signs[k];
            } else {
                dropped += self.c[i] * self.c[i];
            }
        }
        Ok((out, dropped.sqrt()))
    }
}

impl std::ops::Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Self) -> Multivector {
        assert_eq!(self.dim, rhs.dim, "multivector dimensions must match");
        let mut out = self;
        for (x, y) in out.c.iter_mut().zip(rhs.c.iter()) {
            *x += y;
        }
        out
    }
}

impl std::ops::Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Self) -> Multivector {
        assert_eq!(self.dim, rhs.dim, "multivector dimensions must match");
        let mut out = self;
        for (x, y) in out.c.iter_mut().zip(rhs.c.iter()) {
            *x -= y;
        }
        out
    }
}

impl std::ops::Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

/// Geometric product; panics on dimension mismatch (use [`Multivector::gp`]
/// for the checked form).
impl std::ops::Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Self) -> Multivector {
        assert_eq!(self.dim, rhs.dim, "multivector dimensions must match");
        self.mul_raw(&rhs)
    }
}

impl std::ops::Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl std::ops::Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        rhs.scale(self)
    }
}

impl fmt::Display for Multivector {
    /// Canonical text form: `a + b e1 - c e12`, omitting zero terms, `0` for
    /// the zero multivector. Coefficients use the shortest representation
    /// that parses back to the identical float.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for idx in 0..self.len() {
            let v = self.c[idx];
            if v == 0.0 {
                continue;
            }
            let name = Self::blade_name(self.dim(), idx);
            if first {
                if v < 0.0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if v < 0.0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = v.abs();
            if name.is_empty() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag} {name}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector(dim {}: {})", self.dim(), self)
    }
}
