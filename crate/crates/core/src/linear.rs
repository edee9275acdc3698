//! Linear multivector transformations: sandwich maps, reflections,
//! rotations, the two-sided linear (Sylvester) equation, and
//! denominator rationalization.

use crate::context::Context;
use crate::error::{GaError, Result};
use crate::multivector::Multivector;

/// Evaluate the general linear map `sum_i R_i M S_i`.
pub fn linear_apply(terms: &[(Multivector, Multivector)], m: &Multivector) -> Result<Multivector> {
    if terms.is_empty() {
        return Err(GaError::EmptyTermList);
    }
    let mut acc = Multivector::zero(m.dim());
    for (r, s) in terms {
        if r.dim() != m.dim() || s.dim() != m.dim() {
            return Err(GaError::DimMismatch {
                left: r.dim().min(s.dim()),
                right: m.dim(),
            });
        }
        acc = acc + r.gp(m)?.gp(s)?;
    }
    Ok(acc)
}

/// Reflect `m` in the hyperplane orthogonal to the vector `v`: `-v M v`.
/// With `normalize` set, `v` is scaled to unit length first; otherwise it
/// must already be unit.
pub fn reflect(v: &Multivector, m: &Multivector, normalize: bool, ctx: &Context) -> Result<Multivector> {
    if (*v - v.grade(1)?.value).norm() > 0.0 {
        return Err(GaError::OutOfSubspace);
    }
    let n = v.norm();
    let v = if normalize {
        if n == 0.0 {
            return Err(GaError::ZeroVector);
        }
        v.scale(1.0 / n)
    } else {
        if (n - 1.0).abs() > ctx.check_eps {
            return Err(GaError::NonUnitVector);
        }
        *v
    };
    Ok(-(v.gp(m)?.gp(&v)?))
}

/// Rotate by a unit rotor: `R M rev(R)`. `r` must be even (grades 0 and 2)
/// with `R rev(R) = 1`.
pub fn rotate3(r: &Multivector, m: &Multivector, ctx: &Context) -> Result<Multivector> {
    let even = r.select(|g| g == 0 || g == 2);
    if (*r - even).norm() > 0.0 {
        return Err(GaError::NonEvenGrade);
    }
    let unit = r.gp(&r.reversion())?;
    if (unit - Multivector::scalar(r.dim(), 1.0)).norm() > ctx.check_eps {
        return Err(GaError::NonUnitRotor);
    }
    r.gp(m)?.gp(&r.reversion())
}

/// Four-dimensional rotation in the odd subspace of the dimension-3 algebra.
///
/// Odd elements `M = x e1 + y e2 + z e3 + w e123` carry four real
/// coordinates; multiplying by unit rotors on both sides, `R M S`, realizes
/// every rotation of that R^4 (the double-quaternion construction). `m` must
/// be odd; `r` and `s` must be even unit rotors.
pub fn rotate4(
    r: &Multivector,
    s: &Multivector,
    m: &Multivector,
    ctx: &Context,
) -> Result<Multivector> {
    if m.dim() != 3 || r.dim() != 3 || s.dim() != 3 {
        return Err(GaError::UnsupportedDim {
            op: "rotate4",
            dim: m.dim().max(r.dim()).max(s.dim()),
        });
    }
    let odd = m.select(|g| g == 1 || g == 3);
    if (*m - odd).norm() > 0.0 {
        return Err(GaError::OutOfSubspace);
    }
    for rotor in [r, s] {
        let even = rotor.select(|g| g == 0 || g == 2);
        if (*rotor - even).norm() > 0.0 {
            return Err(GaError::NonEvenGrade);
        }
        let unit = rotor.gp(&rotor.reversion())?;
        if (unit - Multivector::scalar(3, 1.0)).norm() > ctx.check_eps {
            return Err(GaError::NonUnitRotor);
        }
    }
    r.gp(m)?.gp(s)
}

/// Solve the two-sided linear equation `A M + M B = Y` for `M`.
///
/// Multiplying the equation by `conj(A)` on the left and by `conj(B)` on the
/// right turns the coefficients into commuting amplitudes, giving the closed
/// form
///
/// ```text
/// M = (B + conj(B) + A^-1 B conj(B) + A)^-1 (A^-1 Y conj(B) + Y)
/// ```
///
/// valid when `A` is invertible. When it is not but `B` is, the mirrored
/// derivation (multiply by `conj(B)` on the right first) gives
///
/// ```text
/// M = (conj(A) Y B^-1 + Y) (A + conj(A) + A conj(A) B^-1 + B)^-1
/// ```
///
/// Both still need the final combined factor to be invertible; a genuinely
/// singular pencil surfaces as a [`GaError::NullAmplitude`] from one of the
/// inversions.
pub fn sylvester_solve(
    a: &Multivector,
    b: &Multivector,
    y: &Multivector,
    ctx: &Context,
) -> Result<Multivector> {
    let dim = a.dim();
    if dim > 3 {
        return Err(GaError::UnsupportedDim {
            op: "sylvester_solve",
            dim,
        });
    }
    if b.dim() != dim || y.dim() != dim {
        return Err(GaError::DimMismatch {
            left: dim,
            right: b.dim().max(y.dim()),
        });
    }
    if let Ok(a_inv) = a.inverse(ctx) {
        let factor = *b + b.cliff_conj() + a_inv.gp(b)?.gp(&b.cliff_conj())? + *a;
        let rhs = a_inv.gp(y)?.gp(&b.cliff_conj())? + *y;
        return factor.inverse(ctx)?.gp(&rhs);
    }
    let b_inv = b.inverse(ctx)?;
    let lhs = a.cliff_conj().gp(y)?.gp(&b_inv)? + *y;
    let factor = *a + a.cliff_conj() + a.gp(&a.cliff_conj())?.gp(&b_inv)? + *b;
    lhs.gp(&factor.inverse(ctx)?)
}

/// A rationalizing factor for `M`: returns `(R, r)` with `M R = r`, `r` real.
/// `M conj(M)` is always commuting; if it is already real the conjugate
/// alone suffices, otherwise one extra reversion factor clears the
/// pseudoscalar part.
pub fn rationalize(m: &Multivector) -> Result<(Multivector, f64)> {
    if m.dim() > 3 {
        return Err(GaError::UnsupportedDim {
            op: "rationalize",
            dim: m.dim(),
        });
    }
    let amp2 = m.gp(&m.cliff_conj())?;
    let z = amp2.complex_part();
    if z.im == 0.0 {
        return Ok((m.cliff_conj(), z.re));
    }
    let r = m.cliff_conj().gp(&amp2.reversion())?;
    Ok((r, (z * z.conj()).re))
}
