use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};

/// Unsigned Stirling numbers of the first kind `c(n, k)`.
pub fn stirling1(n: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for i in 0..n {
        let mut next = vec![BigInt::zero(); i + 2];
        for (j, v) in row.iter().enumerate() {
            next[j + 1] += v;
            next[j] += v * BigInt::from(i);
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Degree and dimension of the piece of the Koszul dual module with `s_i`
/// components on `k_i` points of color `i`.
pub fn kq_dimension(m: &[i64], s: &[usize], k: &[usize]) -> Result<(i64, BigInt)> {
    if m.len() != s.len() || m.len() != k.len() {
        return invalid("m, s and k must have the same length");
    }
    let total: usize = k.iter().sum();
    let degree = m
        .iter()
        .zip(s)
        .map(|(&mi, &si)| si as i64 * (mi - 1))
        .sum::<i64>()
        + total as i64;
    let mut dim = factorial(total);
    for &ki in k {
        dim /= factorial(ki);
    }
    for (&si, &ki) in s.iter().zip(k) {
        dim *= stirling1(ki, si);
    }
    Ok((degree, dim))
}
