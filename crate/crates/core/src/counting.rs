//! Counting functions for single-deletion balls at resolution 2.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{binom_i, pow};
use crate::error::{err, Result};

/// Number of binary sequences of length `n` with `rho` runs and weight `w`.
pub fn count_runs_weight(n: usize, rho: usize, w: usize) -> Result<BigUint> {
    if n == 0 || rho == 0 || rho > n || w > n {
        return Err(err!(Domain, "need n >= 1, 1 <= rho <= n, 0 <= w <= n; got n = {n}, rho = {rho}, w = {w}"));
    }
    if w == 0 || w == n {
        return Ok(if rho == 1 { BigUint::one() } else { BigUint::zero() });
    }
    if rho == 1 {
        return Ok(BigUint::zero());
    }
    // runs alternate; the ones form ceil or floor of rho/2 runs depending on the first symbol
    let (hi, lo) = (rho.div_ceil(2) as i64, (rho / 2) as i64);
    let (w, z) = (w as i64, (n - w) as i64);
    Ok(binom_i(w - 1, hi - 1) * binom_i(z - 1, lo - 1) + binom_i(w - 1, lo - 1) * binom_i(z - 1, hi - 1))
}

/// Number of distinct `s1` of length `n` dominating, componentwise, some
/// one-symbol supersequence of a fixed length `n-1` word of weight `w`.
pub fn count_v(n: usize, w: usize) -> Result<BigUint> {
    if n == 0 || w >= n {
        return Err(err!(Domain, "need 0 <= w <= n-1; got n = {n}, w = {w}"));
    }
    let mut v = pow(2, n - w);
    if w > 0 {
        v += BigUint::from(w) * pow(2, n - w - 1);
    }
    Ok(v)
}

/// Size of the vertex set of the row-0 deletion hypergraph, `2*3^(n-1) + (n-1)*3^(n-2)`.
pub fn vertex_set_size_10(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(err!(Domain, "n must be at least 1"));
    }
    let mut v = BigUint::from(2u32) * pow(3, n - 1);
    if n >= 2 {
        v += BigUint::from(n - 1) * pow(3, n - 2);
    }
    Ok(v)
}
