//! Slow reference computations.
//!
//! Nothing here depends on `crtfourier`: every routine is a direct,
//! textbook evaluation (linear scans, O(n²) sums with exact integer phase
//! reduction, adaptive Gauss-Kronrod quadrature). Tests use these to freeze
//! expected values and to cross-check the fast paths.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Smallest `x` in `[0, Π m_j)` with `x ≡ r_j (mod m_j)`, found by scanning.
pub fn brute_force_crt(moduli: &[u64], residues: &[u64]) -> Option<u64> {
    let gamma: u64 = moduli.iter().product();
    (0..gamma).find(|x| moduli.iter().zip(residues).all(|(m, r)| x % m == *r))
}

/// Smallest `v` in `[1, m)` with `a·v ≡ 1 (mod m)`.
pub fn brute_force_inverse(a: u64, m: u64) -> Option<u64> {
    (1..m).find(|v| (a % m) * v % m == 1)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `e^{sign·2πi·p/q}` with `p` already reduced into `[0, q)`.
fn unit_phase(sign: f64, p: u64, q: u64) -> Complex64 {
    let theta = sign * 2.0 * PI * (p as f64) / (q as f64);
    Complex64::new(theta.cos(), theta.sin())
}

/// `out[k] = Σ_j v[j]·e^{sign·2πi·jk/n}`, phases from `jk mod n`.
pub fn naive_dft(v: &[Complex64], sign: f64) -> Vec<Complex64> {
    let n = v.len() as u64;
    (0..n)
        .map(|k| {
            v.iter()
                .enumerate()
                .map(|(j, x)| x * unit_phase(sign, (j as u64 * k) % n, n))
                .sum()
        })
        .collect()
}

/// The dual-grid forward sum evaluated term by term:
/// `out[k] = (1/M) Σ_j s[j]·e^{−2πi·(j−w)(k−w)/(MN)}` with `w = MN/2`.
pub fn direct_grid_forward(samples: &[Complex64], big_n: usize, big_m: usize) -> Vec<Complex64> {
    let size = (big_n * big_m) as i64;
    assert_eq!(samples.len() as i64, size);
    let w = size / 2;
    (0..size)
        .map(|k| {
            let acc: Complex64 = samples
                .iter()
                .enumerate()
                .map(|(j, s)| {
                    let p = ((j as i64 - w) * (k - w)).rem_euclid(size);
                    s * unit_phase(-1.0, p as u64, size as u64)
                })
                .sum();
            acc / big_m as f64
        })
        .collect()
}

/// `Σ_{k=0}^{MN} e^{−2πi·(x/N)·(−MN/2 + k)}`.
pub fn dirichlet_direct_sum(x: f64, big_n: usize, big_m: usize) -> Complex64 {
    let size = (big_n * big_m) as i64;
    (0..=size)
        .map(|k| {
            let theta = -2.0 * PI * (x / big_n as f64) * ((k - size / 2) as f64);
            Complex64::new(theta.cos(), theta.sin())
        })
        .sum()
}

/// `Σ_{n∈ℤ} e^{−π(n/width)²}`, summed outward until terms underflow.
pub fn gaussian_theta_series(width: f64) -> f64 {
    let mut total = 1.0;
    let mut n = 1.0_f64;
    loop {
        let term = (-PI * (n / width).powi(2)).exp();
        if term == 0.0 {
            break;
        }
        total += 2.0 * term;
        n += 1.0;
    }
    total
}

// 15-point Kronrod nodes on [0, 1] and weights, with the embedded 7-point Gauss weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for i in 0..7 {
        let dx = h * XGK[i];
        let pair = f(c - dx) + f(c + dx);
        kronrod += WGK[i] * pair;
        // odd Kronrod indices are the Gauss nodes
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

/// Adaptive Gauss-Kronrod (7/15) on `[a, b]`, bisecting until every
/// panel's error estimate is below its share of `abs_tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64) -> f64 {
    fn recurse<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let (value, err) = gk15(f, a, b);
        if err <= tol || depth == 0 {
            return value;
        }
        let mid = 0.5 * (a + b);
        recurse(f, a, mid, 0.5 * tol, depth - 1) + recurse(f, mid, b, 0.5 * tol, depth - 1)
    }
    // start from a fixed subdivision so oscillatory integrands are resolved
    let panels = 64;
    let step = (b - a) / panels as f64;
    (0..panels)
        .map(|i| {
            let lo = a + step * i as f64;
            recurse(&f, lo, lo + step, abs_tol / panels as f64, 40)
        })
        .sum()
}

/// `∫_a^b f(x)·e^{−2πixy} dx` for real-valued `f`.
pub fn fourier_integral<F: Fn(f64) -> f64>(
    f: F,
    y: f64,
    a: f64,
    b: f64,
    abs_tol: f64,
) -> Complex64 {
    let re = integrate(|x| f(x) * (2.0 * PI * x * y).cos(), a, b, abs_tol);
    let im = integrate(|x| -f(x) * (2.0 * PI * x * y).sin(), a, b, abs_tol);
    Complex64::new(re, im)
}
