//! Expression evaluation against a session dimension.

use crate::expr::{parse, Expr, ParseError};
use mvfn_core::{Context, GaError, Multivector, PowerSide};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EvalError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] GaError),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("{0:?} needs dimension {1} (this session is dimension {2})")]
    NameNeedsDim(String, usize, usize),
    #[error("unknown function {0:?}")]
    UnknownFunction(String),
    #[error("{name} takes {want} argument(s), got {got}")]
    Arity {
        name: String,
        want: usize,
        got: usize,
    },
    #[error("{0:?} is not available in dimension 4 (only + - * conj rev star sharp abs inv)")]
    RestrictedDim4(String),
    #[error("invalid multivector JSON: {0}")]
    Json(String),
    #[error("grade index must be an integer between 0 and the dimension")]
    BadGradeIndex,
    #[error("{0} is not representable in this dimension")]
    NotRepresentable(&'static str),
}

/// Exit-code class of an error: 2 for input mistakes, 1 for domain failures.
pub fn error_class(e: &EvalError) -> u8 {
    match e {
        EvalError::Parse(_)
        | EvalError::UnknownName(_)
        | EvalError::NameNeedsDim(..)
        | EvalError::UnknownFunction(_)
        | EvalError::Arity { .. }
        | EvalError::RestrictedDim4(_)
        | EvalError::Json(_)
        | EvalError::BadGradeIndex => 2,
        EvalError::Algebra(_) | EvalError::NotRepresentable(_) => 1,
    }
}

pub struct EvalContext {
    pub dim: usize,
    pub ctx: Context,
    pub power_side: PowerSide,
    pub vars: HashMap<String, Multivector>,
}

impl EvalContext {
    pub fn new(dim: usize) -> Result<Self, EvalError> {
        if !(1..=4).contains(&dim) {
            return Err(GaError::InvalidDim(dim).into());
        }
        Ok(EvalContext {
            dim,
            ctx: Context::default(),
            power_side: PowerSide::default(),
            vars: HashMap::new(),
        })
    }

    pub fn with_context(dim: usize, ctx: Context) -> Result<Self, EvalError> {
        let mut e = Self::new(dim)?;
        e.ctx = ctx;
        Ok(e)
    }
}

/// Resolve a basis-blade name like `e1`, `e12`, `e123`, `e31` (any index
/// order; repeated indices are invalid). Returns the signed blade.
fn basis_from_name(name: &str, dim: usize) -> Option<Result<Multivector, EvalError>> {
    let digits = name.strip_prefix('e')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut seen = [false; 9];
    let mut acc = Multivector::scalar(dim, 1.0);
    for b in digits.bytes() {
        let k = (b - b'0') as usize;
        if k == 0 || k > 8 || seen[k] {
            return Some(Err(EvalError::UnknownName(name.to_owned())));
        }
        seen[k] = true;
        if k > dim {
            return Some(Err(EvalError::NameNeedsDim(name.to_owned(), k, dim)));
        }
        let mut comps = [0.0; 4];
        comps[k - 1] = 1.0;
        let ek = match Multivector::vector(dim, &comps[..dim]) {
            Ok(v) => v,
            Err(e) => return Some(Err(e.into())),
        };
        acc = match acc.gp(&ek) {
            Ok(p) => p,
            Err(e) => return Some(Err(e.into())),
        };
    }
    Some(Ok(acc))
}

fn lookup(name: &str, ecx: &EvalContext) -> Result<Multivector, EvalError> {
    if let Some(v) = ecx.vars.get(name) {
        return Ok(*v);
    }
    match name {
        "pi" => return Ok(Multivector::scalar(ecx.dim, std::f64::consts::PI)),
        "i" => {
            return if ecx.dim == 2 {
                Ok(Multivector::basis(2, 3)?)
            } else {
                Err(EvalError::NameNeedsDim(name.into(), 2, ecx.dim))
            }
        }
        "j" => {
            return if ecx.dim == 3 {
                Ok(Multivector::basis(3, 7)?)
            } else {
                Err(EvalError::NameNeedsDim(name.into(), 3, ecx.dim))
            }
        }
        _ => {}
    }
    if let Some(b) = basis_from_name(name, ecx.dim) {
        return b;
    }
    Err(EvalError::UnknownName(name.to_owned()))
}

/// Functions available in a dimension-4 session. Everything else is refused
/// there; below dimension 4 the full library applies.
const DIM4_FUNCTIONS: [&str; 6] = ["conj", "rev", "star", "sharp", "abs", "inv"];

fn is_scalar_only(m: &Multivector) -> bool {
    m.coeffs().iter().skip(1).all(|&c| c == 0.0)
}

fn is_center_only(m: &Multivector) -> bool {
    m.dim() == 3 && m.coeffs()[1..7].iter().all(|&c| c == 0.0)
}

fn eval_pow(base: &Multivector, p: &Multivector, ecx: &EvalContext) -> Result<Multivector, EvalError> {
    if is_scalar_only(p) {
        let x = p.scalar_part();
        if x.fract() == 0.0 && x.abs() <= 4096.0 {
            return Ok(base.pow_int(x as i32, &ecx.ctx)?);
        }
        return Ok(base.pow_real(x, &ecx.ctx)?);
    }
    if is_center_only(p) {
        return Ok(base.pow_center(p.complex_part(), &ecx.ctx)?);
    }
    Ok(base.pow_mv(p, ecx.power_side, &ecx.ctx)?)
}

fn eval_call(name: &str, args: &[Expr], ecx: &EvalContext) -> Result<Multivector, EvalError> {
    if ecx.dim == 4 && !DIM4_FUNCTIONS.contains(&name) {
        return Err(EvalError::RestrictedDim4(name.to_owned()));
    }
    let arity = if name == "grade" { 2 } else { 1 };
    if args.len() != arity {
        return Err(EvalError::Arity {
            name: name.to_owned(),
            want: arity,
            got: args.len(),
        });
    }
    let m = eval(&args[0], ecx)?;
    let ctx = &ecx.ctx;
    let out = match name {
        "exp" => m.exp()?,
        "log" => m.log(ctx)?,
        "sqrt" => m.sqrt_principal(ctx)?,
        "sin" => m.sin_mv()?,
        "cos" => m.cos_mv()?,
        "tan" => m.tan_mv(ctx)?,
        "sinh" => m.sinh_mv()?,
        "cosh" => m.cosh_mv()?,
        "tanh" => m.tanh_mv(ctx)?,
        "asin" => m.arcsin_mv(ctx)?,
        "acos" => m.arccos_mv(ctx)?,
        "atan" => m.arctan_mv(ctx)?,
        "asinh" => m.arcsinh_mv(ctx)?,
        "acosh" => m.arccosh_mv(ctx)?,
        "atanh" => m.arctanh_mv(ctx)?,
        "abs" => {
            if ecx.dim == 4 {
                let a = m.amplitude4(ctx)?;
                if a.im != 0.0 {
                    return Err(EvalError::NotRepresentable("a complex quartic amplitude"));
                }
                Multivector::scalar(4, a.re)
            } else {
                Multivector::from_complex(ecx.dim, m.amplitude()?.to_center())?
            }
        }
        "norm" => Multivector::scalar(ecx.dim, m.norm()),
        "arg" => {
            let mut phi = m.arg(ctx)?;
            if ecx.dim < 3 {
                // Real arguments accumulate ~1e-16 of imaginary dust; a
                // genuinely complex argument has no home below dimension 3.
                if phi.im.abs() > ctx.check_eps * (1.0 + phi.modulus()) {
                    return Err(EvalError::NotRepresentable(
                        "a complex argument (it has no centre below dimension 3)",
                    ));
                }
                phi = mvfn_core::CenterComplex::real(phi.re);
            }
            Multivector::from_complex(ecx.dim, phi)?
        }
        "grade" => {
            let k = eval(&args[1], ecx)?;
            if !is_scalar_only(&k) {
                return Err(EvalError::BadGradeIndex);
            }
            let kf = k.scalar_part();
            if kf.fract() != 0.0 || kf < 0.0 || kf > ecx.dim as f64 {
                return Err(EvalError::BadGradeIndex);
            }
            m.grade(kf as usize)?.value
        }
        "inv" => {
            if ecx.dim == 4 {
                m.inverse4(ctx)?
            } else {
                m.inverse(ctx)?
            }
        }
        "conj" => m.cliff_conj(),
        "rev" => m.reversion(),
        "star" => m.space_inversion(),
        "sharp" => m.sharp()?,
        _ => return Err(EvalError::UnknownFunction(name.to_owned())),
    };
    Ok(out)
}

pub fn eval(e: &Expr, ecx: &EvalContext) -> Result<Multivector, EvalError> {
    match e {
        Expr::Num(x) => Ok(Multivector::scalar(ecx.dim, *x)),
        Expr::Name(n) => lookup(n, ecx),
        Expr::Neg(a) => Ok(-eval(a, ecx)?),
        Expr::Add(a, b) => Ok(eval(a, ecx)? + eval(b, ecx)?),
        Expr::Sub(a, b) => Ok(eval(a, ecx)? - eval(b, ecx)?),
        Expr::Mul(a, b) => Ok(eval(a, ecx)?.gp(&eval(b, ecx)?)?),
        Expr::Div(a, b) => {
            if ecx.dim == 4 {
                return Err(EvalError::RestrictedDim4("/".to_owned()));
            }
            let den = eval(b, ecx)?;
            Ok(eval(a, ecx)?.gp(&den.inverse(&ecx.ctx)?)?)
        }
        Expr::Pow(a, b) => {
            if ecx.dim == 4 {
                return Err(EvalError::RestrictedDim4("^".to_owned()));
            }
            let base = eval(a, ecx)?;
            let p = eval(b, ecx)?;
            eval_pow(&base, &p, ecx)
        }
        Expr::Call(name, args) => eval_call(name, args, ecx),
    }
}

pub fn eval_str(src: &str, ecx: &EvalContext) -> Result<Multivector, EvalError> {
    let e = parse(src)?;
    eval(&e, ecx)
}

/// Smallest dimension that gives every name in the source a meaning:
/// basis indices push it up, `i` needs 2, `j` needs 3; the floor is 1.
pub fn infer_dim(src: &str) -> Result<usize, ParseError> {
    let tokens = crate::expr::lex(src)?;
    let mut dim = 1usize;
    for (tok, _) in &tokens {
        if let crate::expr::Token::Ident(name) = tok {
            match name.as_str() {
                "i" => dim = dim.max(2),
                "j" => dim = dim.max(3),
                _ => {
                    if let Some(digits) = name.strip_prefix('e') {
                        if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                            for b in digits.bytes() {
                                dim = dim.max((b - b'0') as usize);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(dim.min(4).max(1))
}
