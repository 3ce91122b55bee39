//! Exact rational helpers shared by the invariant and bound code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn integer(value: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(value.into())
}

pub fn ceil(x: &BigRational) -> BigInt {
    x.numer().div_ceil(x.denom())
}

/// `⌈x⌉` for `x >= 0`, and `0` otherwise.
pub fn ceil_plus(x: &BigRational) -> BigInt {
    if x.is_negative() {
        BigInt::zero()
    } else {
        ceil(x)
    }
}

/// `p/q` in lowest terms, or just `p` for integers.
pub fn exact_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Display-only decimal with six significant digits.
pub fn approx_string(x: &BigRational) -> String {
    let value = x.to_f64().unwrap_or(f64::NAN);
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() || value.abs() >= 1e15 || value.abs() < 1e-6 {
        return format!("{value:.5e}");
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    let rendered = format!("{value:.decimals$}");
    if rendered.contains('.') {
        rendered
            .trim_end_matches('0')
            .trim_end_matches('.')
            .to_string()
    } else {
        rendered
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_plus_clamps_negatives() {
        assert_eq!(ceil_plus(&ratio(-2, 3)), BigInt::from(0));
        assert_eq!(ceil_plus(&ratio(0, 1)), BigInt::from(0));
        assert_eq!(ceil_plus(&ratio(1, 3)), BigInt::from(1));
        assert_eq!(ceil_plus(&ratio(4, 1)), BigInt::from(4));
        assert_eq!(ceil(&ratio(-5, 3)), BigInt::from(-1));
    }

    #[test]
    fn renders_exact_and_approximate() {
        assert_eq!(exact_string(&ratio(54, 5)), "54/5");
        assert_eq!(exact_string(&ratio(-8, 100)), "-2/25");
        assert_eq!(exact_string(&integer(7)), "7");
        assert_eq!(approx_string(&ratio(54, 5)), "10.8");
        assert_eq!(approx_string(&ratio(1, 3)), "0.333333");
        assert_eq!(approx_string(&ratio(640, 17)), "37.6471");
        assert_eq!(approx_string(&ratio(-2, 25)), "-0.08");
        assert_eq!(approx_string(&integer(0)), "0");
    }
}
