//! Associated Legendre functions with the Condon–Shortley phase.

use crate::error::{Error, Result};

/// `P_ℓ^m(u)` for `|m| ≤ ℓ`, `u ∈ [−1, 1]`, including the `(−1)^m`
/// Condon–Shortley factor (`P₁¹(u) = −√(1−u²)`). Negative orders use
/// `P_ℓ^{−m} = (−1)^m (ℓ−m)!/(ℓ+m)! P_ℓ^m`.
pub fn assoc_legendre(ell: u32, m: i32, u: f64) -> Result<f64> {
    let am = m.unsigned_abs();
    if am > ell {
        return Err(Error::Domain(format!("|m| = {am} exceeds ell = {ell}")));
    }
    if !(-1.0..=1.0).contains(&u) {
        return Err(Error::Domain(format!("argument {u} outside [-1, 1]")));
    }
    let p = upward(ell, am, u);
    if m >= 0 {
        Ok(p)
    } else {
        let sign = if am.is_multiple_of(2) { 1.0 } else { -1.0 };
        Ok(sign * factorial_ratio(ell, am) * p)
    }
}

/// `(ℓ−m)! / (ℓ+m)!` as a running product.
pub(crate) fn factorial_ratio(ell: u32, m: u32) -> f64 {
    ((ell - m + 1)..=(ell + m)).fold(1.0, |acc, k| acc / k as f64)
}

fn upward(ell: u32, m: u32, u: f64) -> f64 {
    // P_m^m = (−1)^m (2m−1)!! (1−u²)^{m/2}
    let s = ((1.0 - u) * (1.0 + u)).sqrt();
    let mut pmm = 1.0;
    let mut odd = 1.0;
    for _ in 0..m {
        pmm *= -odd * s;
        odd += 2.0;
    }
    if ell == m {
        return pmm;
    }
    let mut p_prev = pmm;
    let mut p = u * (2 * m + 1) as f64 * pmm;
    for l in (m + 2)..=ell {
        let next = (u * (2 * l - 1) as f64 * p - (l + m - 1) as f64 * p_prev) / (l - m) as f64;
        p_prev = p;
        p = next;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_values() {
        assert_eq!(assoc_legendre(0, 0, 0.3).unwrap(), 1.0);
        assert_eq!(assoc_legendre(1, 1, 0.0).unwrap(), -1.0);
        let u = 0.4_f64;
        let s = (1.0 - u * u).sqrt();
        assert!((assoc_legendre(1, 0, u).unwrap() - u).abs() < 1e-15);
        assert!((assoc_legendre(2, 0, u).unwrap() - 0.5 * (3.0 * u * u - 1.0)).abs() < 1e-15);
        assert!((assoc_legendre(2, 1, u).unwrap() + 3.0 * u * s).abs() < 1e-15);
        assert!((assoc_legendre(2, 2, u).unwrap() - 3.0 * s * s).abs() < 1e-15);
        assert!((assoc_legendre(1, -1, u).unwrap() - 0.5 * s).abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(assoc_legendre(2, 3, 0.1), Err(Error::Domain(_))));
        assert!(matches!(assoc_legendre(2, -3, 0.1), Err(Error::Domain(_))));
        assert!(matches!(assoc_legendre(2, 1, 1.5), Err(Error::Domain(_))));
    }
}
