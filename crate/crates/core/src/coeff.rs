//! Coefficient arithmetic: exact rationals and Gaussian rationals.
//!
//! `Rat` is an arbitrary-precision rational, always stored reduced with a
//! positive denominator. `GaussRat` is a Gaussian rational a + b*i; every
//! polynomial in the crate carries `GaussRat` coefficients, and real-only
//! operations check that imaginary parts vanish instead of maintaining a
//! parallel real polynomial type.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;
pub type GaussRat = Complex<Rat>;

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Reduced rational n/d. Panics if d = 0.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Real Gaussian rational.
pub fn gr_real(re: Rat) -> GaussRat {
    GaussRat::new(re, Rat::zero())
}

/// Gaussian rational from parts.
pub fn gr(re: Rat, im: Rat) -> GaussRat {
    GaussRat::new(re, im)
}

/// Integer as a Gaussian rational.
pub fn gr_int(n: i64) -> GaussRat {
    gr_real(rat_int(n))
}

/// Reduced rational n/d as a Gaussian rational.
pub fn gr_rat(n: i64, d: i64) -> GaussRat {
    gr_real(rat(n, d))
}

/// The imaginary unit.
pub fn gr_i() -> GaussRat {
    GaussRat::new(Rat::zero(), Rat::one())
}

pub fn is_real(c: &GaussRat) -> bool {
    c.im.is_zero()
}

/// gcd of two non-negative rationals: gcd of numerators over lcm of denominators.
/// gcd(0, x) = x. The result is non-negative.
pub fn rat_gcd(a: &Rat, b: &Rat) -> Rat {
    use num_integer::Integer;
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let num = a.numer().gcd(b.numer());
    let den = a.denom().lcm(b.denom());
    Rat::new(num, den)
}

/// Best-effort f64 value of a rational (documented non-exactness).
pub fn rat_to_f64(a: &Rat) -> f64 {
    a.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of lossy parts for values outside f64 range.
        let n = a.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = a.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Render a rational as `n` or `n/d`.
pub fn rat_display(a: &Rat) -> String {
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_field_ops() {
        let a = gr(rat(1, 2), rat(3, 1));
        let b = gr(rat(-2, 3), rat(1, 5));
        let prod = a.clone() * b.clone();
        let back = prod / b;
        assert_eq!(back, a);
    }

    #[test]
    fn conjugation_involution() {
        let a = gr(rat(7, 3), rat(-2, 9));
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(gr_i() * gr_i(), gr_int(-1));
    }

    #[test]
    fn rational_gcd() {
        assert_eq!(rat_gcd(&rat(4, 3), &rat(2, 9)), rat(2, 9));
        assert_eq!(rat_gcd(&rat(0, 1), &rat(-5, 7)), rat(5, 7));
    }
}
