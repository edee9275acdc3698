//! Registry of named algebraic identities, checked on random inputs.
//!
//! Every relation draws samples (coefficients uniform in [-2, 2], resampled
//! away from degenerate configurations), evaluates both sides of an
//! identity, and reports the worst relative residual over the run together
//! with up to five failing witnesses. Deterministic relations (fixed-point
//! identities with no free input) evaluate once.
//!
//! Identities that hold only on a stated non-principal branch of the
//! logarithm carry a note saying which branch realizes them.

use crate::center::CenterComplex;
use crate::context::Context;
use crate::elem::{BranchIndex, PowerSide, RootSign};
use crate::error::{GaError, Result};
use crate::linear;
use crate::multivector::Multivector;
use crate::oracle::{series_eval, SeriesKind};
use crate::trig::sinh_zeros;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationStatus {
    Pass,
    Fail,
}

/// A failing (or worst) sample: the formatted inputs and the residual there.
#[derive(Debug, Clone)]
pub struct Witness {
    pub input: String,
    pub residual: f64,
}

#[derive(Debug, Clone)]
pub struct RelationReport {
    pub name: String,
    /// Valid samples actually evaluated.
    pub samples: usize,
    pub max_residual: f64,
    pub status: RelationStatus,
    /// Up to five samples exceeding the tolerance (worst first).
    pub witnesses: Vec<Witness>,
    pub note: Option<String>,
}

type Body = fn(&mut ChaCha8Rng, &Context) -> Result<Option<(f64, String)>>;

struct RelationDef {
    name: &'static str,
    tol: f64,
    /// Deterministic relations evaluate a single fixed configuration.
    deterministic: bool,
    note: Option<&'static str>,
    body: Body,
}

/// Relative deviation between a computed value and its expected value.
fn rel(a: &Multivector, b: &Multivector) -> f64 {
    (*a - *b).norm() / (1.0 + b.norm())
}

fn rel_f(a: f64, b: f64) -> f64 {
    (a - b).abs() / (1.0 + b.abs())
}

fn rel_c(a: CenterComplex, b: CenterComplex) -> f64 {
    (a - b).modulus() / (1.0 + b.modulus())
}

fn rand_mv(rng: &mut ChaCha8Rng, dim: usize) -> Multivector {
    let mut c = [0.0; 16];
    for x in c.iter_mut().take(1 << dim) {
        *x = rng.random_range(-2.0..2.0);
    }
    Multivector::new(dim, &c[..1 << dim]).expect("finite coefficients")
}

fn rand_dim(rng: &mut ChaCha8Rng) -> usize {
    rng.random_range(1..=3)
}

/// Random unit vector in dimension 3.
fn rand_unit_vec3(rng: &mut ChaCha8Rng) -> Multivector {
    loop {
        let v = Multivector::vector(
            3,
            &[
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            ],
        )
        .expect("finite");
        let n = v.norm();
        if n > 0.3 {
            return v.scale(1.0 / n);
        }
    }
}

/// Random orthonormal pair of dimension-3 vectors.
fn rand_ortho_pair3(rng: &mut ChaCha8Rng) -> (Multivector, Multivector) {
    loop {
        let a = rand_unit_vec3(rng);
        let b = rand_unit_vec3(rng);
        let proj = a.inner(&b).expect("same dim");
        let perp = b - a.scale(proj);
        let n = perp.norm();
        if n > 0.3 {
            return (a, perp.scale(1.0 / n));
        }
    }
}

fn amplitude_ok(m: &Multivector) -> bool {
    m.amplitude_radicand()
        .map(|r| r.modulus().sqrt() > 1e-3)
        .unwrap_or(false)
}

fn witness(parts: &[(&str, &Multivector)]) -> String {
    parts
        .iter()
        .map(|(label, m)| format!("{label} = {m}"))
        .collect::<Vec<_>>()
        .join("; ")
}

// --- ring and involution laws -----------------------------------------------

fn gp_associative(rng: &mut ChaCha8Rng, _: &Context) -> Result<Option<(f64, String)>> {
    let dim = rng.random_range(1..=4);
    let a = rand_mv(rng, dim);
    let b = rand_mv(rng, dim);
    let c = rand_mv(rng, dim);
    let lhs = a.gp(&b)?.gp(&c)?;
    let rhs = a.gp(&b.gp(&c)?)?;
    Ok(Some((
        rel(&lhs, &rhs),
        witness(&[("A", &a), ("B", &b), ("C", &c)]),
    )))
}

fn reversion_antiautomorphism(rng: &mut ChaCha8Rng, _: &Context) -> Result<Option<(f64, String)>> {
    let dim = rng.random_range(1..=4);
    let a = rand_mv(rng, dim);
    let b = rand_mv(rng, dim);
    let lhs = a.gp(&b)?.reversion();
    let rhs = b.reversion().gp(&a.reversion())?;
    Ok(Some((rel(&lhs, &rhs), witness(&[("A", &a), ("B", &b)]))))
}

fn conjugation_antiautomorphism(rng: &mut ChaCha8Rng, _: &Context) -> Result<Option<(f64, String)>> {
    let dim = rng.random_range(1..=4);
    let a = rand_mv(rng, dim);
    let b = rand_mv(rng, dim);
    let lhs = a.gp(&b)?.cliff_conj();
    let rhs = b.cliff_conj().gp(&a.cliff_conj())?;
    Ok(Some((rel(&lhs, &rhs), witness(&[("A", &a), ("B", &b)]))))
}

// --- fixed-point power identities -----------------------------------------

fn j_pow_j(_: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let j = Multivector::basis(3, 7)?;
    let got = j.pow_mv(&j, PowerSide::Right, ctx)?;
    let want = Multivector::scalar(3, (-std::f64::consts::FRAC_PI_2).exp());
    Ok(Some((rel(&got, &want), "e123 ^ e123".into())))
}

fn i_pow_i_2d(_: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let i = Multivector::basis(2, 3)?;
    let got = i.pow_mv(&i, PowerSide::Right, ctx)?;
    let want = Multivector::scalar(2, (-std::f64::consts::FRAC_PI_2).exp());
    Ok(Some((rel(&got, &want), "e12 ^ e12".into())))
}

fn jv_pow_jv(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let v = rand_unit_vec3(rng);
    let jv = Multivector::basis(3, 7)?.gp(&v)?;
    let got = jv.pow_mv(&jv, PowerSide::Right, ctx)?;
    let want = Multivector::scalar(3, (-std::f64::consts::FRAC_PI_2).exp());
    Ok(Some((rel(&got, &want), witness(&[("v", &v)]))))
}

fn jv_pow_jvperp(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let j = Multivector::basis(3, 7)?;
    let (v, p) = rand_ortho_pair3(rng);
    let jv = j.gp(&v)?;
    let jp = j.gp(&p)?;
    let got = jv.pow_mv(&jp, PowerSide::Right, ctx)?;
    // w completes the right-handed triple: w = e123 v vperp.
    let w = j.gp(&v)?.gp(&p)?;
    let want = j.gp(&w)?;
    Ok(Some((rel(&got, &want), witness(&[("v", &v), ("vperp", &p)]))))
}

fn vhat_pow_vhat(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let v = rand_unit_vec3(rng);
    let got = v.pow_mv(&v, PowerSide::Right, ctx)?;
    Ok(Some((rel(&got, &v), witness(&[("v", &v)]))))
}

fn vhat_pow_vperp(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let (v, p) = rand_ortho_pair3(rng);
    let l = v.log_branches(
        BranchIndex {
            n: -1,
            m: 1,
            half: false,
        },
        ctx,
    )?;
    let got = l.gp(&p)?.exp()?;
    let want = Multivector::scalar(3, 1.0);
    Ok(Some((rel(&got, &want), witness(&[("v", &v), ("vperp", &p)]))))
}

fn vhat_pow_jvperp(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let j = Multivector::basis(3, 7)?;
    let (v, p) = rand_ortho_pair3(rng);
    let l = v.log_branches(
        BranchIndex {
            n: 1,
            m: -1,
            half: false,
        },
        ctx,
    )?;
    let got = l.gp(&j.gp(&p)?)?.exp()?;
    let want = Multivector::scalar(3, 1.0);
    Ok(Some((rel(&got, &want), witness(&[("v", &v), ("vperp", &p)]))))
}

fn jv_pow_v(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let j = Multivector::basis(3, 7)?;
    let v = rand_unit_vec3(rng);
    let jv = j.gp(&v)?;
    let got = jv.pow_mv(&v, PowerSide::Right, ctx)?;
    Ok(Some((rel(&got, &j), witness(&[("v", &v)]))))
}

fn j_pow_v(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let j = Multivector::basis(3, 7)?;
    let v = rand_unit_vec3(rng);
    let got = j.pow_mv(&v, PowerSide::Right, ctx)?;
    let want = j.gp(&v)?;
    Ok(Some((rel(&got, &want), witness(&[("v", &v)]))))
}

/// Raise a unit centre element to a vector power. The result is the plane
/// rotation `cos(s t) + e123 vhat sin(s t)` — an even element of unit
/// amplitude — where `s` is the vector's length and `t` the centre argument.
pub fn rosetta_stone(zhat: CenterComplex, v: &Multivector, ctx: &Context) -> Result<Multivector> {
    if (zhat.modulus() - 1.0).abs() > ctx.check_eps {
        return Err(GaError::NonUnitCenter);
    }
    if v.dim() != 3 {
        return Err(GaError::UnsupportedDim {
            op: "rosetta_stone",
            dim: v.dim(),
        });
    }
    if !(*v - v.grade(1)?.value).is_zero() {
        return Err(GaError::OutOfSubspace);
    }
    Multivector::from_complex(3, zhat)?.pow_mv(v, PowerSide::Right, ctx)
}

fn rosetta_stone_relation(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    // (e^{e123 theta})^{s v} = cos(s theta) + e123 v sin(s theta).
    let theta: f64 = rng.random_range(-3.0..3.0);
    let s = rng.random_range(-2.0..2.0);
    let v = rand_unit_vec3(rng);
    let got = rosetta_stone(CenterComplex::new(theta.cos(), theta.sin()), &v.scale(s), ctx)?;
    let j = Multivector::basis(3, 7)?;
    let want = Multivector::scalar(3, (s * theta).cos()) + j.gp(&v)?.scale((s * theta).sin());
    Ok(Some((
        rel(&got, &want),
        format!("theta = {theta}; s = {s}; {}", witness(&[("v", &v)])),
    )))
}

// --- roots, logs, exponentials ---------------------------------------------

fn vec_sqrt(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let v = rand_unit_vec3(rng).scale(rng.random_range(0.2..2.0));
    let s = v.sqrt_mv(RootSign::Plus, ctx)?;
    Ok(Some((rel(&(s * s), &v), witness(&[("v", &v)]))))
}

fn sqrt_squares(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let m = rand_mv(rng, 3);
    if !amplitude_ok(&m) {
        return Ok(None);
    }
    let mut worst = 0.0f64;
    for sign in [RootSign::Plus, RootSign::Minus] {
        match m.sqrt_mv(sign, ctx) {
            Ok(s) => worst = worst.max(rel(&(s * s), &m)),
            Err(GaError::ZeroDenominator) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(Some((worst, witness(&[("M", &m)]))))
}

fn exp_log_roundtrip(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let dim = rand_dim(rng);
    let m = rand_mv(rng, dim);
    if !amplitude_ok(&m) {
        return Ok(None);
    }
    let l = match m.log(ctx) {
        Ok(l) => l,
        Err(_) => return Ok(None),
    };
    Ok(Some((rel(&l.exp()?, &m), witness(&[("M", &m)]))))
}

fn de_moivre(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let m = rand_mv(rng, 3);
    if !amplitude_ok(&m) {
        return Ok(None);
    }
    let k: i32 = rng.random_range(-3..=4);
    let via_real = match m.pow_real(f64::from(k), ctx) {
        Ok(p) => p,
        Err(_) => return Ok(None),
    };
    let via_int = m.pow_int(k, ctx)?;
    Ok(Some((
        rel(&via_real, &via_int),
        format!("k = {k}; {}", witness(&[("M", &m)])),
    )))
}

fn power_laws(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let m = rand_mv(rng, 3);
    if !amplitude_ok(&m) {
        return Ok(None);
    }
    if m.log(ctx).is_err() {
        return Ok(None);
    }
    let a = rng.random_range(-1.5..1.5);
    let b = rng.random_range(-1.5..1.5);
    let lhs = m.pow_real(a + b, ctx)?;
    let rhs = m.pow_real(a, ctx)?.gp(&m.pow_real(b, ctx)?)?;
    Ok(Some((
        rel(&lhs, &rhs),
        format!("a = {a}; b = {b}; {}", witness(&[("M", &m)])),
    )))
}

fn exp_split(rng: &mut ChaCha8Rng, _: &Context) -> Result<Option<(f64, String)>> {
    let dim = rand_dim(rng);
    let m = rand_mv(rng, dim);
    let split = m.split();
    let head = Multivector::from_complex(m.dim(), split.z.exp())?;
    let got = head.gp(&split.f.exp()?)?;
    Ok(Some((rel(&got, &m.exp()?), witness(&[("M", &m)]))))
}

fn exp_j_split(rng: &mut ChaCha8Rng, _: &Context) -> Result<Option<(f64, String)>> {
    let m = rand_mv(rng, 3);
    let c = m.coeffs();
    let scalar = Multivector::scalar(3, c[0]).exp()?;
    let center = Multivector::basis(3, 7)?.scale(c[7]).exp()?;
    let f = m.select(|g| g == 1 || g == 2).exp()?;
    let got = scalar.gp(&center)?.gp(&f)?;
    Ok(Some((rel(&got, &m.exp()?), witness(&[("M", &m)]))))
}

fn exp_nilpotent(rng: &mut ChaCha8Rng, _: &Context) -> Result<Option<(f64, String)>> {
    // F = v + e123 w with |v| = |w|, v . w = 0 squares to zero.
    let (v, w) = rand_ortho_pair3(rng);
    let scale = rng.random_range(0.2..2.0);
    let f = v.scale(scale) + Multivector::basis(3, 7)?.gp(&w)?.scale(scale);
    let got = f.exp()?;
    let want = Multivector::scalar(3, 1.0) + f;
    Ok(Some((rel(&got, &want), witness(&[("F", &f)]))))
}

fn log_two_vectors_agree(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let a = rand_unit_vec3(rng).scale(rng.random_range(0.3..2.0));
    let b = rand_unit_vec3(rng).scale(rng.random_range(0.3..2.0));
    let wedge = (a.gp(&b)? - b.gp(&a)?).scale(0.5);
    if wedge.norm() < 1e-3 {
        return Ok(None);
    }
    let got = crate::elem::log_two_vectors(&a, &b, ctx)?;
    let want = a.gp(&b)?.log(ctx)?;
    Ok(Some((rel(&got, &want), witness(&[("a", &a), ("b", &b)]))))
}

fn polar_recompose(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let dim = if rng.random_range(0..2) == 0 { 2 } else { 3 };
    let m = rand_mv(rng, dim);
    let p = match m.polar(ctx) {
        Ok(p) => p,
        Err(_) => return Ok(None),
    };
    Ok(Some((rel(&p.recompose()?, &m), witness(&[("M", &m)]))))
}

// --- trigonometric family ---------------------------------------------------

fn cos_vec(rng: &mut ChaCha8Rng, _: &Context) -> Result<Option<(f64, String)>> {
    let v = rand_unit_vec3(rng).scale(rng.random_range(0.1..2.5));
    let got = v.cos_mv()?;
    let want = Multivector::scalar(3, v.norm().cos());
    Ok(Some((rel(&got, &want), witness(&[("v", &v)]))))
}

fn sin_vec(rng: &mut ChaCha8Rng, _: &Context) -> Result<Option<(f64, String)>> {
    let v = rand_unit_vec3(rng).scale(rng.random_range(0.1..2.5));
    let got = v.sin_mv()?;
    let want = v.scale(v.norm().sin() / v.norm());
    Ok(Some((rel(&got, &want), witness(&[("v", &v)]))))
}

fn arcsinh_vec(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let dim = if rng.random_range(0..2) == 0 { 2 } else { 3 };
    let v = rand_mv(rng, dim).grade(1)?.value;
    if v.norm() < 0.1 {
        return Ok(None);
    }
    let a = v.arcsinh_mv(ctx)?;
    Ok(Some((rel(&a.sinh_mv()?, &v), witness(&[("v", &v)]))))
}

fn trig_pythagoras(rng: &mut ChaCha8Rng, _: &Context) -> Result<Option<(f64, String)>> {
    let dim = rand_dim(rng);
    let m = rand_mv(rng, dim);
    let c = m.cos_mv()?;
    let s = m.sin_mv()?;
    let one = Multivector::scalar(m.dim(), 1.0);
    Ok(Some((rel(&(c * c + s * s), &one), witness(&[("M", &m)]))))
}

fn hyper_pythagoras(rng: &mut ChaCha8Rng, _: &Context) -> Result<Option<(f64, String)>> {
    let dim = rand_dim(rng);
    let m = rand_mv(rng, dim);
    let c = m.cosh_mv()?;
    let s = m.sinh_mv()?;
    let one = Multivector::scalar(m.dim(), 1.0);
    Ok(Some((rel(&(c * c - s * s), &one), witness(&[("M", &m)]))))
}

fn sinh_double(rng: &mut ChaCha8Rng, _: &Context) -> Result<Option<(f64, String)>> {
    let dim = rand_dim(rng);
    let m = rand_mv(rng, dim);
    let lhs = m.scale(2.0).sinh_mv()?;
    let rhs = m.sinh_mv()?.gp(&m.cosh_mv()?)?.scale(2.0);
    Ok(Some((rel(&lhs, &rhs), witness(&[("M", &m)]))))
}

fn sinh_zero_family(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    // fhat alternates between unit bivectors and e123 v forms.
    let fhat = if rng.random_range(0..2) == 0 {
        Multivector::basis(3, 7)?.gp(&rand_unit_vec3(rng))?
    } else {
        let (a, b) = rand_ortho_pair3(rng);
        a.gp(&b)? // unit bivector
    };
    let m = rng.random_range(-2..=2);
    let n = rng.random_range(-2..=2);
    let half = rng.random_range(0..2) == 1;
    let z = sinh_zeros(m, n, half, &fhat, ctx)?;
    let res = z.sinh_mv()?.norm() / (1.0 + z.norm().exp());
    Ok(Some((
        res,
        format!("m = {m}; n = {n}; half = {half}; {}", witness(&[("fhat", &fhat)])),
    )))
}

fn tan_formula(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let m = rand_mv(rng, 3).scale(0.7);
    let split = m.split();
    let (fsq, famp) = m.f_invariants()?;
    if fsq.modulus() < 1e-3 {
        return Ok(None);
    }
    let direct = match m.tan_mv(ctx) {
        Ok(t) => t,
        Err(_) => return Ok(None),
    };
    // (tan Z + fhat tanh|F|)(1 - fhat tanh|F| tan Z)^{-1}
    let tz = split.z.sin() / split.z.cos();
    let th = famp.sinh() / famp.cosh();
    let fhat = split.f.mul_complex(famp.inv())?;
    let num = Multivector::from_complex(3, tz)? + fhat.mul_complex(th)?;
    let den = Multivector::scalar(3, 1.0) - fhat.mul_complex(th * tz)?;
    let formula = match den.inverse(ctx) {
        Ok(inv) => num.gp(&inv)?,
        Err(_) => return Ok(None),
    };
    Ok(Some((rel(&formula, &direct), witness(&[("M", &m)]))))
}

fn arcsin_roundtrip(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let m = rand_mv(rng, 3).scale(0.35);
    let a = match m.arcsin_mv(ctx) {
        Ok(a) => a,
        Err(_) => return Ok(None),
    };
    Ok(Some((rel(&a.sin_mv()?, &m), witness(&[("M", &m)]))))
}

fn arctan_roundtrip(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let m = rand_mv(rng, 3).scale(0.35);
    let a = match m.arctan_mv(ctx) {
        Ok(a) => a,
        Err(_) => return Ok(None),
    };
    let t = match a.tan_mv(ctx) {
        Ok(t) => t,
        Err(_) => return Ok(None),
    };
    Ok(Some((rel(&t, &m), witness(&[("M", &m)]))))
}

// --- amplitudes, inverses, linear algebra -----------------------------------

fn four_square(rng: &mut ChaCha8Rng, _: &Context) -> Result<Option<(f64, String)>> {
    // In dimension 2 the amplitude radicand is real and multiplicative.
    let m = rand_mv(rng, 2);
    let n = rand_mv(rng, 2);
    let lhs = m.gp(&n)?.amplitude_radicand()?.re;
    let rhs = m.amplitude_radicand()?.re * n.amplitude_radicand()?.re;
    Ok(Some((rel_f(lhs, rhs), witness(&[("M", &m), ("N", &n)]))))
}

fn amplitude_product(rng: &mut ChaCha8Rng, _: &Context) -> Result<Option<(f64, String)>> {
    let m = rand_mv(rng, 3);
    let n = rand_mv(rng, 3);
    let lhs = m.gp(&n)?.amplitude_radicand()?;
    let rhs = m.amplitude_radicand()? * n.amplitude_radicand()?;
    Ok(Some((rel_c(lhs, rhs), witness(&[("M", &m), ("N", &n)]))))
}

fn inverse_roundtrip(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let dim = rand_dim(rng);
    let m = rand_mv(rng, dim);
    if !amplitude_ok(&m) {
        return Ok(None);
    }
    let inv = m.inverse(ctx)?;
    let one = Multivector::scalar(m.dim(), 1.0);
    let r = rel(&m.gp(&inv)?, &one).max(rel(&inv.gp(&m)?, &one));
    Ok(Some((r, witness(&[("M", &m)]))))
}

fn inverse4_roundtrip(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let m = rand_mv(rng, 4);
    let inv = match m.inverse4(ctx) {
        Ok(i) => i,
        Err(GaError::NullAmplitude) => return Ok(None),
        Err(e) => return Err(e),
    };
    let one = Multivector::scalar(4, 1.0);
    let r = rel(&m.gp(&inv)?, &one).max(rel(&inv.gp(&m)?, &one));
    Ok(Some((r, witness(&[("M", &m)]))))
}

fn geometric_series_sum(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let dim = rand_dim(rng);
    let mut m = rand_mv(rng, dim);
    let n = m.norm();
    if n > 0.0 {
        m = m.scale(rng.random_range(0.1..0.8) / n);
    }
    let terms: u32 = rng.random_range(0..=12);
    let got = match m.geometric_series(terms, ctx) {
        Ok(g) => g,
        Err(_) => return Ok(None),
    };
    let mut direct = Multivector::zero(dim);
    let mut p = Multivector::scalar(dim, 1.0);
    for _ in 0..=terms {
        direct = direct + p;
        p = p.gp(&m)?;
    }
    Ok(Some((
        rel(&got, &direct),
        format!("n = {terms}; {}", witness(&[("M", &m)])),
    )))
}

fn sylvester_random(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let dim = if rng.random_range(0..2) == 0 { 2 } else { 3 };
    let a = rand_mv(rng, dim);
    let b = rand_mv(rng, dim);
    let m = rand_mv(rng, dim);
    let y = a.gp(&m)? + m.gp(&b)?;
    let got = match linear::sylvester_solve(&a, &b, &y, ctx) {
        Ok(g) => g,
        Err(_) => return Ok(None),
    };
    let back = a.gp(&got)? + got.gp(&b)?;
    Ok(Some((
        rel(&back, &y),
        witness(&[("A", &a), ("B", &b), ("Y", &y)]),
    )))
}

fn rationalize_real(rng: &mut ChaCha8Rng, _: &Context) -> Result<Option<(f64, String)>> {
    let dim = rand_dim(rng);
    let m = rand_mv(rng, dim);
    let (r, val) = linear::rationalize(&m)?;
    let got = m.gp(&r)?;
    let want = Multivector::scalar(m.dim(), val);
    Ok(Some((rel(&got, &want), witness(&[("M", &m)]))))
}

fn reflect_involution(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let v = rand_unit_vec3(rng);
    let m = rand_mv(rng, 3);
    let once = linear::reflect(&v, &m, false, ctx)?;
    let twice = linear::reflect(&v, &once, false, ctx)?;
    Ok(Some((rel(&twice, &m), witness(&[("v", &v), ("M", &m)]))))
}

fn rotate3_invariants(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    let b = rand_mv(rng, 3).grade(2)?.value;
    let r = b.exp()?;
    let m = rand_mv(rng, 3);
    let rot = linear::rotate3(&r, &m, ctx)?;
    let mut worst = rel_f(rot.norm(), m.norm());
    for k in 0..=3 {
        worst = worst.max(rel_f(rot.grade(k)?.value.norm(), m.grade(k)?.value.norm()));
    }
    Ok(Some((worst, witness(&[("R", &r), ("M", &m)]))))
}

// --- quaternion and series structure ----------------------------------------

/// Split an even element `a + b e12 + c e31 + d e23` of the
/// three-dimensional algebra into the pair `(a + b i, c + d i)` over the
/// commutative plane `i = e12`, so that `q = z1 + z2 e31`.
pub fn quat_as_pairs(q: &Multivector) -> Result<(CenterComplex, CenterComplex)> {
    if q.dim() != 3 {
        return Err(GaError::UnsupportedDim {
            op: "quat_as_pairs",
            dim: q.dim(),
        });
    }
    if !(*q - q.select(|g| g == 0 || g == 2)).is_zero() {
        return Err(GaError::NonEvenGrade);
    }
    let c = q.coeffs();
    Ok((
        CenterComplex::new(c[0], c[4]),
        CenterComplex::new(c[5], c[6]),
    ))
}

fn quat_unpair(z1: CenterComplex, z2: CenterComplex) -> Result<Multivector> {
    Multivector::new(3, &[z1.re, 0.0, 0.0, 0.0, z1.im, z2.re, z2.im, 0.0])
}

/// Multiply two even elements using only commuting complex arithmetic on
/// their pairs: `pq = (x1 y1 - x2 conj(y2)) + (x1 y2 + x2 conj(y1)) e31`.
pub fn quat_pair_product(p: &Multivector, q: &Multivector) -> Result<Multivector> {
    let (x1, x2) = quat_as_pairs(p)?;
    let (y1, y2) = quat_as_pairs(q)?;
    quat_unpair(x1 * y1 - x2 * y2.conj(), x1 * y2 + x2 * y1.conj())
}

fn cayley_dickson_product(rng: &mut ChaCha8Rng, _: &Context) -> Result<Option<(f64, String)>> {
    // Quaternions as pairs z1 + z2 e31 over the commutative plane {1, e12}.
    let q = rand_mv(rng, 3).select(|g| g == 0 || g == 2);
    let p = rand_mv(rng, 3).select(|g| g == 0 || g == 2);
    let got = quat_pair_product(&q, &p)?;
    let want = q.gp(&p)?;
    Ok(Some((rel(&got, &want), witness(&[("q", &q), ("p", &p)]))))
}

/// Split a full three-dimensional multivector into two even elements with
/// `M = q1 + e123 q2`.
pub fn mv_as_quat_pair(m: &Multivector) -> Result<(Multivector, Multivector)> {
    if m.dim() != 3 {
        return Err(GaError::UnsupportedDim {
            op: "mv_as_quat_pair",
            dim: m.dim(),
        });
    }
    let j = Multivector::basis(3, 7)?;
    let even = m.select(|g| g == 0 || g == 2);
    let odd = *m - even;
    let q2 = -(j.gp(&odd)?);
    Ok((even, q2))
}

fn quat_pair_reassembly(rng: &mut ChaCha8Rng, _: &Context) -> Result<Option<(f64, String)>> {
    // M = q1 + e123 q2 with q1, q2 even; products follow the complex rule
    // over the central e123.
    let j = Multivector::basis(3, 7)?;
    let m = rand_mv(rng, 3);
    let n = rand_mv(rng, 3);
    let (m1, m2) = mv_as_quat_pair(&m)?;
    let (n1, n2) = mv_as_quat_pair(&n)?;
    let back = m1 + j.gp(&m2)?;
    let mut worst = rel(&back, &m);
    let prod1 = m1.gp(&n1)? - m2.gp(&n2)?;
    let prod2 = m1.gp(&n2)? + m2.gp(&n1)?;
    let got = prod1 + j.gp(&prod2)?;
    worst = worst.max(rel(&got, &m.gp(&n)?));
    Ok(Some((worst, witness(&[("M", &m), ("N", &n)]))))
}

fn geometric_series_vs_log1p(rng: &mut ChaCha8Rng, ctx: &Context) -> Result<Option<(f64, String)>> {
    // Independent series route: log(1 + M) summed term by term matches the
    // closed-form logarithm.
    let dim = rand_dim(rng);
    let mut m = rand_mv(rng, dim);
    let n = m.norm();
    if n > 0.0 {
        m = m.scale(rng.random_range(0.05..0.35) / n);
    }
    let series = match series_eval(&m, SeriesKind::Log1p, 60) {
        Ok(s) => s,
        Err(GaError::DivergentSeries) => return Ok(None),
        Err(e) => return Err(e),
    };
    let closed = match (Multivector::scalar(dim, 1.0) + m).log(ctx) {
        Ok(l) => l,
        Err(_) => return Ok(None),
    };
    Ok(Some((rel(&series, &closed), witness(&[("M", &m)]))))
}

// --- registry ----------------------------------------------------------------

fn registry() -> Vec<RelationDef> {
    fn def(name: &'static str, tol: f64, deterministic: bool, note: Option<&'static str>, body: Body) -> RelationDef {
        RelationDef {
            name,
            tol,
            deterministic,
            note,
            body,
        }
    }
    vec![
        def("amplitude_product", 1e-9, false, Some("|MN|^2 = |M|^2 |N|^2 over the commuting centre"), amplitude_product),
        def("arcsin_roundtrip", 1e-8, false, None, arcsin_roundtrip),
        def("arcsinh_vec", 1e-9, false, None, arcsinh_vec),
        def("arctan_roundtrip", 1e-8, false, None, arctan_roundtrip),
        def("cayley_dickson_product", 1e-10, false, Some("quaternion product via complex pairs over e12"), cayley_dickson_product),
        def("conjugation_antiautomorphism", 1e-10, false, Some("conj(AB) = conj(B) conj(A)"), conjugation_antiautomorphism),
        def("cos_vec", 1e-10, false, Some("cos of a vector is the real cosine of its length"), cos_vec),
        def("de_moivre", 1e-8, false, Some("real powers at integers match repeated products"), de_moivre),
        def("exp_j_split", 1e-10, false, None, exp_j_split),
        def("exp_log_roundtrip", 1e-9, false, None, exp_log_roundtrip),
        def("exp_nilpotent", 1e-10, false, Some("exp(F) = 1 + F when F is nilpotent"), exp_nilpotent),
        def("exp_split", 1e-10, false, Some("exp(M) = exp(Z) exp(F)"), exp_split),
        def("four_square", 1e-9, false, Some("two-dimensional amplitudes are multiplicative (four-square identity)"), four_square),
        def("geometric_series_sum", 1e-10, false, Some("(1-M)^{-1}(1-M^{n+1}) equals the direct partial sum"), geometric_series_sum),
        def("gp_associative", 1e-10, false, Some("(AB)C = A(BC) in every supported dimension"), gp_associative),
        def("hyper_pythagoras", 1e-8, false, None, hyper_pythagoras),
        def("i_pow_i_2d", 1e-11, true, Some("e12^e12 = exp(-pi/2) in two dimensions"), i_pow_i_2d),
        def("inverse4_roundtrip", 1e-8, false, Some("quartic-amplitude inverse is two-sided in dimension 4"), inverse4_roundtrip),
        def("inverse_roundtrip", 1e-8, false, None, inverse_roundtrip),
        def("j_pow_j", 1e-11, true, Some("e123^e123 = exp(-pi/2)"), j_pow_j),
        def("j_pow_v", 1e-10, false, Some("e123^v = e123 v for unit vectors"), j_pow_v),
        def("jv_pow_jv", 1e-10, false, Some("(e123 v)^(e123 v) = exp(-pi/2)"), jv_pow_jv),
        def("jv_pow_jvperp", 1e-10, false, Some("(e123 v)^(e123 vperp) = e123 w, w completing the triple"), jv_pow_jvperp),
        def("jv_pow_v", 1e-10, false, Some("(e123 v)^v = e123"), jv_pow_v),
        def("log1p_series_agrees", 1e-9, false, Some("term-by-term log(1+M) matches the closed form"), geometric_series_vs_log1p),
        def("log_two_vectors_agree", 1e-9, false, None, log_two_vectors_agree),
        def("polar_recompose", 1e-9, false, Some("(cos phi + fhat sin phi)|M| rebuilds M"), polar_recompose),
        def("power_laws", 1e-8, false, Some("M^(a+b) = M^a M^b on the principal-log domain"), power_laws),
        def("quat_pair_reassembly", 1e-10, false, Some("M = q1 + e123 q2 with the complex product rule"), quat_pair_reassembly),
        def("rationalize_real", 1e-9, false, Some("M times its rationalizer is the claimed real scalar"), rationalize_real),
        def("reflect_involution", 1e-10, false, None, reflect_involution),
        def("reversion_antiautomorphism", 1e-10, false, Some("rev(AB) = rev(B) rev(A)"), reversion_antiautomorphism),
        def("rosetta_stone", 1e-9, false, Some("(e^(e123 t))^(s v) = cos(st) + e123 v sin(st)"), rosetta_stone_relation),
        def("rotate3_invariants", 1e-9, false, Some("rotor sandwiches preserve the norm of every grade"), rotate3_invariants),
        def("sin_vec", 1e-10, false, None, sin_vec),
        def("sinh_double", 1e-8, false, Some("sinh 2M = 2 sinh M cosh M"), sinh_double),
        def("sinh_zero_family", 1e-10, false, Some("sinh vanishes on the (m pi fhat, n pi e123) lattice and its half-shift"), sinh_zero_family),
        def("sqrt_squares", 1e-8, false, Some("both square-root branches square back to M"), sqrt_squares),
        def("sylvester_random", 1e-7, false, Some("closed-form solution satisfies AM + MB = Y"), sylvester_random),
        def("tan_formula", 1e-8, false, Some("tan M = (tan Z + fhat tanh|F|)(1 - fhat tanh|F| tan Z)^{-1}"), tan_formula),
        def("trig_pythagoras", 1e-8, false, None, trig_pythagoras),
        def("vec_sqrt", 1e-9, false, None, vec_sqrt),
        def("vhat_pow_jvperp", 1e-9, false, Some("v^(e123 vperp) = 1 on the log branch n = 1, m = -1; the principal branch leaves a nilpotent defect"), vhat_pow_jvperp),
        def("vhat_pow_vhat", 1e-9, false, Some("v^v = v for unit vectors"), vhat_pow_vhat),
        def("vhat_pow_vperp", 1e-9, false, Some("v^vperp = 1 on the log branch n = -1, m = 1; the principal branch leaves a nilpotent defect"), vhat_pow_vperp),
    ]
}

/// Names of all registered relations, sorted.
pub fn relation_names() -> Vec<&'static str> {
    registry().iter().map(|d| d.name).collect()
}

fn run_def(def: &RelationDef, samples: usize, seed: u64, ctx: &Context) -> RelationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let wanted = if def.deterministic { 1 } else { samples.max(1) };
    let mut done = 0usize;
    let mut attempts = 0usize;
    let mut max_residual = 0.0f64;
    let mut witnesses: Vec<Witness> = Vec::new();
    let mut note = def.note.map(str::to_owned);
    while done < wanted && attempts < wanted * 50 + 50 {
        attempts += 1;
        match (def.body)(&mut rng, ctx) {
            Ok(Some((residual, input))) => {
                done += 1;
                max_residual = max_residual.max(residual);
                if residual > def.tol {
                    witnesses.push(Witness { input, residual });
                }
            }
            Ok(None) => continue,
            Err(e) => {
                max_residual = f64::INFINITY;
                witnesses.push(Witness {
                    input: format!("error: {e}"),
                    residual: f64::INFINITY,
                });
                done += 1;
            }
        }
    }
    if done < wanted {
        let extra = format!("only {done}/{wanted} valid samples drawn");
        note = Some(match note {
            Some(n) => format!("{n}; {extra}"),
            None => extra,
        });
    }
    witnesses.sort_by(|a, b| b.residual.total_cmp(&a.residual));
    witnesses.truncate(5);
    let status = if max_residual <= def.tol && done == wanted {
        RelationStatus::Pass
    } else {
        RelationStatus::Fail
    };
    RelationReport {
        name: def.name.to_owned(),
        samples: done,
        max_residual,
        status,
        witnesses,
        note,
    }
}

/// Run one relation by name.
pub fn run_relation(name: &str, samples: usize, seed: u64, ctx: &Context) -> Result<RelationReport> {
    let defs = registry();
    let def = defs
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| GaError::UnknownRelation(name.to_owned()))?;
    Ok(run_def(def, samples, seed, ctx))
}

/// Does a relation name match a filter? A filter containing `*` is a
/// shell-style glob anchored at both ends (`rosetta*`, `*_roundtrip`);
/// otherwise it matches as a plain substring.
pub fn name_matches(filter: &str, name: &str) -> bool {
    fn glob(p: &[u8], s: &[u8]) -> bool {
        match p.split_first() {
            None => s.is_empty(),
            Some((b'*', rest)) => (0..=s.len()).any(|i| glob(rest, &s[i..])),
            Some((c, rest)) => s.split_first().is_some_and(|(d, tail)| c == d && glob(rest, tail)),
        }
    }
    if filter.contains('*') {
        glob(filter.as_bytes(), name.as_bytes())
    } else {
        name.contains(filter)
    }
}

/// Run every relation whose name matches `filter` (all when `None`),
/// in registry (alphabetical) order.
pub fn run_matching(
    filter: Option<&str>,
    samples: usize,
    seed: u64,
    ctx: &Context,
) -> Vec<RelationReport> {
    registry()
        .iter()
        .filter(|d| filter.is_none_or(|f| name_matches(f, d.name)))
        .map(|d| run_def(d, samples, seed, ctx))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_sorted_and_named_uniquely() {
        let names = relation_names();
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(names, sorted, "registry must stay alphabetical and unique");
        assert!(names.len() >= 30);
    }

    #[test]
    fn rosetta_stone_matches_its_closed_forms() {
        let ctx = Context::default();
        let e3 = Multivector::basis(3, 3).unwrap();
        let j_hat = CenterComplex::new(0.0, 1.0);
        // j^e3 = j e3 = e12.
        let got = rosetta_stone(j_hat, &e3, &ctx).unwrap();
        assert!(rel(&got, &Multivector::basis(3, 4).unwrap()) < 1e-12);
        // j^(2 e3) = cos(pi) = -1.
        let got = rosetta_stone(j_hat, &e3.scale(2.0), &ctx).unwrap();
        assert!(rel(&got, &Multivector::scalar(3, -1.0)) < 1e-9);
        // 1^v = 1.
        let v = Multivector::vector(3, &[0.3, -1.1, 0.4]).unwrap();
        let got = rosetta_stone(CenterComplex::new(1.0, 0.0), &v, &ctx).unwrap();
        assert!(rel(&got, &Multivector::scalar(3, 1.0)) < 1e-12);
        // Guards: the centre element must be unit, the power a vector.
        assert_eq!(
            rosetta_stone(CenterComplex::new(0.0, 1.5), &e3, &ctx),
            Err(GaError::NonUnitCenter)
        );
        assert_eq!(
            rosetta_stone(j_hat, &Multivector::basis(3, 4).unwrap(), &ctx),
            Err(GaError::OutOfSubspace)
        );
    }

    #[test]
    fn quat_pairs_round_trip_and_multiply() {
        let e31 = Multivector::basis(3, 5).unwrap();
        // e31 pairs as (0, 1), and e31 * e31 = -1.
        let (z1, z2) = quat_as_pairs(&e31).unwrap();
        assert_eq!((z1.re, z1.im, z2.re, z2.im), (0.0, 0.0, 1.0, 0.0));
        let sq = quat_pair_product(&e31, &e31).unwrap();
        assert!(rel(&sq, &Multivector::scalar(3, -1.0)) < 1e-15);
        // Multiplying by 1 changes nothing.
        let one = Multivector::scalar(3, 1.0);
        let q = Multivector::new(3, &[0.5, 0.0, 0.0, 0.0, -1.5, 2.0, 0.25, 0.0]).unwrap();
        assert!(rel(&quat_pair_product(&q, &one).unwrap(), &q) < 1e-15);
        // Odd-grade input is rejected.
        assert_eq!(
            quat_as_pairs(&Multivector::basis(3, 1).unwrap()),
            Err(GaError::NonEvenGrade)
        );
    }

    #[test]
    fn quat_pair_split_reassembles_exactly() {
        let j = Multivector::basis(3, 7).unwrap();
        // A scalar splits as (a, 0); e123 as (0, 1).
        let (q1, q2) = mv_as_quat_pair(&Multivector::scalar(3, 2.5)).unwrap();
        assert_eq!(q1, Multivector::scalar(3, 2.5));
        assert!(q2.is_zero());
        let (q1, q2) = mv_as_quat_pair(&j).unwrap();
        assert!(q1.is_zero());
        assert_eq!(q2, Multivector::scalar(3, 1.0));
        // A vector reassembles from its even pair.
        let e1 = Multivector::basis(3, 1).unwrap();
        let (q1, q2) = mv_as_quat_pair(&e1).unwrap();
        assert!(rel(&(q1 + j.gp(&q2).unwrap()), &e1) < 1e-15);
    }

    #[test]
    fn filters_accept_substrings_and_globs() {
        assert!(name_matches("rosetta", "rosetta_stone"));
        assert!(name_matches("rosetta*", "rosetta_stone"));
        assert!(name_matches("*_roundtrip", "exp_log_roundtrip"));
        assert!(name_matches("*pow*", "j_pow_v"));
        assert!(!name_matches("rosetta*", "the_rosetta_stone"));
        assert!(!name_matches("*_roundtrip", "roundtrip_exp"));
        assert_eq!(run_matching(Some("stone*"), 1, 0, &Context::default()).len(), 0);
    }

    #[test]
    fn unknown_relation_is_reported() {
        let ctx = Context::default();
        assert!(matches!(
            run_relation("no_such_relation", 10, 1, &ctx),
            Err(GaError::UnknownRelation(_))
        ));
    }

    #[test]
    fn all_relations_pass_at_moderate_sample_count() {
        let ctx = Context::default();
        for report in run_matching(None, 60, 0xACCE55, &ctx) {
            assert_eq!(
                report.status,
                RelationStatus::Pass,
                "{}: max residual {:.3e}, witnesses {:?}, note {:?}",
                report.name,
                report.max_residual,
                report.witnesses.first().map(|w| &w.input),
                report.note
            );
        }
    }

    #[test]
    fn reports_are_reproducible() {
        let ctx = Context::default();
        let a = run_relation("exp_log_roundtrip", 40, 7, &ctx).unwrap();
        let b = run_relation("exp_log_roundtrip", 40, 7, &ctx).unwrap();
        assert_eq!(a.max_residual, b.max_residual);
        assert_eq!(a.samples, b.samples);
    }
}
