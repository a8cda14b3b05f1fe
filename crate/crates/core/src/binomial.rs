//! Small integer combinatorics shared by several modules.

/// `C(n, k)` for nonnegative `n`, zero when `k < 0` or `k > n`.
///
/// Panics on overflow of `u64`; every caller works with small arguments.
pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// `C(n, k)` with the convention that it is zero whenever `n < k`, including
/// negative `n`. This is the convention used by the dot-count formulas.
pub fn binom_or_zero(n: i64, k: u64) -> i64 {
    if n < 0 {
        return 0;
    }
    binom(n as u64, k) as i64
}

/// The quadratic polynomial `k(k-1)/2`, i.e. `C(k, 2)` extended to all
/// integers.
pub fn choose2_poly(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// Number of monomials of degree `t` in `n + 1` variables.
pub fn forms_dim(n: usize, t: usize) -> usize {
    binom((t + n) as u64, n as u64) as usize
}
