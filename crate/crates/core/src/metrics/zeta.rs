//! Hurwitz zeta function for real `s > 1`, `q > 0`.

/// B_2, B_4, ..., B_16.
const BERNOULLI: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

/// Number of terms summed directly before switching to the asymptotic tail.
const DIRECT_TERMS: usize = 12;

/// `ζ(s, q) = Σ_{k≥0} (q + k)^{-s}` via Euler–Maclaurin summation.
///
/// Relative error is below 1e-14 for `s` in (1, 50] and `q >= 1`.
pub fn hurwitz_zeta(s: f64, q: f64) -> f64 {
    debug_assert!(s > 1.0 && q > 0.0);
    let mut sum = 0.0;
    let mut a = q;
    for _ in 0..DIRECT_TERMS {
        sum += a.powf(-s);
        a += 1.0;
    }
    // a = q + N from here on.
    let a_pow = a.powf(-s);
    let mut tail = a * a_pow / (s - 1.0) + 0.5 * a_pow;
    // term_j = B_2j / (2j)! * s (s+1) ... (s+2j-2) * a^{-s-2j+1}
    let mut rising = s;
    let mut factorial = 2.0;
    let mut power = a_pow / a;
    for (j, b) in BERNOULLI.iter().enumerate() {
        let term = b / factorial * rising * power;
        tail += term;
        if term.abs() < 1e-17 * tail.abs() {
            break;
        }
        let next = 2 * (j + 1);
        rising *= (s + next as f64 - 1.0) * (s + next as f64);
        factorial *= ((next + 1) * (next + 2)) as f64;
        power /= a * a;
    }
    sum + tail
}
