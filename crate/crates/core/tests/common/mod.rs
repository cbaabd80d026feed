//! Independent reference values for the integration tests.
#![allow(dead_code)]

/// Symmetric cursed Knight-Nash threshold for the contamination band.
pub fn theta_kappa(k: f64) -> f64 {
    if k == 0.0 {
        return 0.5;
    }
    (4.0 * k - 1.0 - (8.0 * k + 1.0).sqrt()) / (4.0 * (k - 1.0))
}

/// Symmetric cursed Knight-Nash threshold for the triangle band.
pub fn theta_a(a: f64) -> f64 {
    (-a * a - a + 3.0 + (a.powi(4) + 2.0 * a.powi(3) + 3.0 * a * a - 6.0 * a + 1.0).sqrt()) / 4.0
}

/// Symmetric cursed Knight-Nash threshold for the ε band.
pub fn theta_eps(e: f64) -> f64 {
    if e < 1.0 / 3.0 {
        (-2.0 * e + 1.0 + (4.0 * e * e + 12.0 * e + 1.0).sqrt()) / 4.0
    } else {
        (e + 1.0) / 2.0
    }
}

/// Ambiguous cursed threshold for the contamination band.
pub fn vartheta_kappa(k: f64) -> f64 {
    (4.0 * k * k - 7.0 * k + 1.0 + (-7.0 * k * k + 10.0 * k + 1.0).sqrt()) / (4.0 * (k * k - 2.0 * k + 1.0))
}

/// Ambiguous cursed threshold for the triangle band.
pub fn vartheta_a(a: f64) -> f64 {
    if a <= 2f64.sqrt() {
        (-a.powi(3) - 2.0 * a + 4.0 + a * (a.powi(4) + 4.0 * a * a - 4.0).sqrt()) / 4.0
    } else {
        (-3.0 * a + 4.0 + (9.0 * a * a - 8.0 * a).sqrt()) / 4.0
    }
}

/// Ambiguous cursed threshold for the ε band.
pub fn vartheta_eps(e: f64) -> f64 {
    (-4.0 * e + 1.0 + (16.0 * e + 1.0).sqrt()) / 4.0
}

/// Map whose 2-cycles are the asymmetric profiles of the sine band.
pub fn sine_g(t: f64) -> f64 {
    let inner = (4.0 * std::f64::consts::PI * t).sin() / 16.0 + t - 0.5;
    1.0 - 4.0 * inner * inner
}

/// Plain bisection, kept separate from the library's root finder.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0) == (flo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Equilibrium quantiles of the `(χ₁, χ₂)` game from the best-response
/// fixed point, computed by iterating the two best responses.
pub fn partial_fixed_point(c1: f64, c2: f64) -> (f64, f64) {
    let br = |chi: f64, s: f64| {
        let interior = s / (2.0 * (1.0 - chi + chi * s));
        if chi > 0.5 {
            interior.max((2.0 * chi - 1.0) / (2.0 * chi))
        } else {
            interior
        }
    };
    let (mut t1, mut t2) = (1.0, 1.0);
    for _ in 0..10_000 {
        let n1 = br(c1, t2);
        let n2 = br(c2, n1);
        if (n1 - t1).abs() < 1e-16 && (n2 - t2).abs() < 1e-16 {
            break;
        }
        t1 = n1;
        t2 = n2;
    }
    (t1, t2)
}

/// Perceived utility of player 1 as actual utility plus the perception bias.
pub fn v1_from_bias(c1: f64, c2: f64, f1: f64, f2: f64) -> f64 {
    let u1 = 0.5 + f1.min(f2) * (f2 - f1);
    if c1 <= c2 {
        u1 + c1 * f1 * f1 * (1.0 - f2)
    } else {
        u1 + c1 * f2 * (f1 * (1.0 - f1) + f1 - f2)
    }
}

pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}
