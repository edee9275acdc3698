//! Cross-checks of the closed-form function library against two independent
//! routes: 2x2 matrix representations (spectral evaluation) and raw power
//! series. Branch-cut functions are compared on exponential images
//! `M = exp(X)` with `X` small, where every route provably picks the same
//! branch.

use mvfn_core::oracle::{mat_fn_mv, series_eval, FnKind, SeriesKind};
use mvfn_core::{Context, Multivector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rand_mv(rng: &mut ChaCha8Rng, dim: usize, half_width: f64) -> Multivector {
    let mut c = [0.0; 16];
    for x in c.iter_mut().take(1 << dim) {
        *x = rng.random_range(-half_width..half_width);
    }
    Multivector::new(dim, &c[..1 << dim]).unwrap()
}

fn assert_close(got: &Multivector, want: &Multivector, tol: f64, what: &str) {
    let r = (*got - *want).norm() / (1.0 + want.norm());
    assert!(r <= tol, "{what}: residual {r:.3e} (got {got}, want {want})");
}

#[test]
fn exp_matches_matrix_route_everywhere() {
    let ctx = Context::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let dim = rng.random_range(1..=3);
        let m = rand_mv(&mut rng, dim, 2.0);
        let got = m.exp().unwrap();
        let o = mat_fn_mv(&m, FnKind::Exp, &ctx).unwrap();
        assert!(o.residual <= 1e-9 * (1.0 + got.norm()));
        assert_close(&got, &o.value, 1e-9, "exp vs matrix");
    }
}

#[test]
fn exp_matches_power_series() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let dim = rng.random_range(1..=3);
        let m = rand_mv(&mut rng, dim, 1.5);
        let got = m.exp().unwrap();
        let series = series_eval(&m, SeriesKind::Exp, 40).unwrap();
        assert_close(&got, &series, 1e-10, "exp vs series");
    }
}

#[test]
fn trig_matches_both_routes() {
    let ctx = Context::default();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let cases: [(FnKind, SeriesKind); 4] = [
        (FnKind::Cos, SeriesKind::Cos),
        (FnKind::Sin, SeriesKind::Sin),
        (FnKind::Cosh, SeriesKind::Cosh),
        (FnKind::Sinh, SeriesKind::Sinh),
    ];
    for _ in 0..200 {
        let dim = rng.random_range(1..=3);
        let m = rand_mv(&mut rng, dim, 1.5);
        for (fk, sk) in cases {
            let got = match fk {
                FnKind::Cos => m.cos_mv().unwrap(),
                FnKind::Sin => m.sin_mv().unwrap(),
                FnKind::Cosh => m.cosh_mv().unwrap(),
                FnKind::Sinh => m.sinh_mv().unwrap(),
                _ => unreachable!(),
            };
            let o = mat_fn_mv(&m, fk, &ctx).unwrap();
            assert_close(&got, &o.value, 1e-9, "trig vs matrix");
            let series = series_eval(&m, sk, 40).unwrap();
            assert_close(&got, &series, 1e-9, "trig vs series");
        }
    }
}

#[test]
fn log_matches_matrix_route_on_exponential_images() {
    // log(exp(X)) recovers X whenever the representation's eigenvalues of X
    // keep |imaginary part| < pi/2; a coefficient norm at most 1 guarantees
    // that. There all logarithm routes agree on the principal branch.
    let ctx = Context::default();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut checked = 0;
    while checked < 300 {
        let dim = rng.random_range(1..=3);
        let mut x = rand_mv(&mut rng, dim, 1.0);
        let n = x.norm();
        if n > 1.0 {
            x = x.scale(rng.random_range(0.05..1.0) / n);
        }
        let m = x.exp().unwrap();
        let got = match m.log(&ctx) {
            Ok(l) => l,
            Err(_) => continue, // 2-dimensional hyperbolic arguments are out of scope
        };
        assert_close(&got, &x, 1e-8, "log inverts exp");
        let o = mat_fn_mv(&m, FnKind::Log, &ctx).unwrap();
        assert!(!o.branch_mismatch);
        assert_close(&got, &o.value, 1e-8, "log vs matrix");
        checked += 1;
    }
}

#[test]
fn sqrt_matches_matrix_route_on_exponential_images() {
    let ctx = Context::default();
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let mut checked = 0;
    while checked < 300 {
        let dim = rng.random_range(1..=3);
        let mut x = rand_mv(&mut rng, dim, 1.0);
        let n = x.norm();
        if n > 1.0 {
            x = x.scale(rng.random_range(0.05..1.0) / n);
        }
        let m = x.exp().unwrap();
        let got = match m.sqrt_principal(&ctx) {
            Ok(s) => s,
            Err(_) => continue,
        };
        assert_close(&got.gp(&got).unwrap(), &m, 1e-9, "sqrt squares back");
        let o = mat_fn_mv(&m, FnKind::Sqrt, &ctx).unwrap();
        assert!(!o.branch_mismatch);
        assert_close(&got, &o.value, 1e-8, "sqrt vs matrix");
        checked += 1;
    }
}

#[test]
fn log_series_matches_closed_form_near_one() {
    let ctx = Context::default();
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let mut checked = 0;
    while checked < 200 {
        let dim = rng.random_range(1..=3);
        let mut d = rand_mv(&mut rng, dim, 1.0);
        let n = d.norm();
        if n > 0.0 {
            d = d.scale(rng.random_range(0.05..0.4) / n);
        }
        let m = Multivector::scalar(dim, 1.0) + d;
        let closed = match m.log(&ctx) {
            Ok(l) => l,
            Err(_) => continue,
        };
        let series = match series_eval(&d, SeriesKind::Log1p, 80) {
            Ok(s) => s,
            Err(_) => continue,
        };
        assert_close(&closed, &series, 1e-9, "log vs series");
        checked += 1;
    }
}
