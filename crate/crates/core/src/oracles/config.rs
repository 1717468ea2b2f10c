use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};

/// Coefficients of the Poincaré polynomial of the configuration space of
/// `k` points in `R^n`, indexed by the power of `q`.
pub fn config_poincare(k: usize, n: usize) -> Result<Vec<BigInt>> {
    if n < 2 {
        return invalid(format!("config_poincare needs n >= 2, got {n}"));
    }
    let step = n - 1;
    let mut poly = vec![BigInt::one()];
    for j in 1..k {
        let mut next = vec![BigInt::zero(); poly.len() + step];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + step] += c * BigInt::from(j);
        }
        poly = next;
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_products() {
        assert_eq!(config_poincare(0, 3).unwrap(), ints(&[1]));
        assert_eq!(config_poincare(1, 5).unwrap(), ints(&[1]));
        assert_eq!(config_poincare(2, 4).unwrap(), ints(&[1, 0, 0, 1]));
        assert_eq!(config_poincare(4, 3).unwrap(), ints(&[1, 0, 6, 0, 11, 0, 6]));
        assert!(config_poincare(3, 1).is_err());
    }

    #[test]
    fn total_dimension_is_factorial() {
        for k in 1..8usize {
            let total: BigInt = config_poincare(k, 2).unwrap().iter().sum();
            let fact: BigInt = (1..=k).map(BigInt::from).product();
            assert_eq!(total, fact);
        }
    }
}
