/// Numerical tolerances shared by the fallible operations.
///
/// `null_eps` guards divisions: an amplitude whose squared modulus is at most
/// `null_eps * max(1, norm^2)` counts as zero and the operation reports
/// [`GaError::NullAmplitude`](crate::GaError::NullAmplitude).
///
/// `check_eps` is the relative tolerance for structural checks such as
/// "this rotor is unit", "this radicand is scalar", or "this result stayed
/// inside the expected subspace".
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Context {
    pub null_eps: f64,
    pub check_eps: f64,
}

impl Default for Context {
    fn default() -> Self {
        Context {
            null_eps: 1e-12,
            check_eps: 1e-9,
        }
    }
}

impl Context {
    /// Context with `check_eps = tol` and a proportionally tighter null
    /// threshold. Used by callers that expose a single tolerance knob.
    pub fn with_tolerance(tol: f64) -> Self {
        Context {
            null_eps: tol * 1e-3,
            check_eps: tol,
        }
    }

    /// Threshold below which a squared amplitude counts as zero for a
    /// multivector of the given norm.
    pub fn null_threshold(&self, norm: f64) -> f64 {
        self.null_eps * (norm * norm).max(1.0)
    }
}
