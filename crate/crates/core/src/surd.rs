//! Exact arithmetic in the field `Q(sqrt 5)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// The number `a + b * sqrt(5)` with rational `a`, `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Surd5 {
    pub a: BigRational,
    pub b: BigRational,
}

impl Surd5 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Surd5 { a, b }
    }

    /// `(a + b sqrt 5) / den` for integers.
    pub fn from_ints(a: i64, b: i64, den: i64) -> Self {
        let r = |x: i64| BigRational::new(BigInt::from(x), BigInt::from(den));
        Surd5 { a: r(a), b: r(b) }
    }

    pub fn rational(a: BigRational) -> Self {
        Surd5 {
            a,
            b: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Surd5 {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// `a^2 - 5 b^2`, the field norm.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(BigInt::from(5))
    }

    /// Exact sign of the real value.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        if sa == sb || sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal {
            return sb;
        }
        // opposite signs: the term of larger magnitude wins
        match self.norm().cmp(&BigRational::zero()) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let root = 5f64.sqrt();
        if self.a.is_positive() == self.b.is_positive() || self.a.is_zero() || self.b.is_zero() {
            a + b * root
        } else {
            // a + b r = norm / (a - b r), free of cancellation
            self.norm().to_f64().unwrap_or(f64::NAN) / (a - b * root)
        }
    }
}

impl PartialOrd for Surd5 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Surd5 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum()
    }
}

impl Add for Surd5 {
    type Output = Surd5;
    fn add(self, rhs: Surd5) -> Surd5 {
        Surd5::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Surd5 {
    type Output = Surd5;
    fn sub(self, rhs: Surd5) -> Surd5 {
        Surd5::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Surd5 {
    type Output = Surd5;
    fn neg(self) -> Surd5 {
        Surd5::new(-self.a, -self.b)
    }
}

impl Mul for Surd5 {
    type Output = Surd5;
    fn mul(self, rhs: Surd5) -> Surd5 {
        let five = BigRational::from_integer(BigInt::from(5));
        Surd5::new(
            &self.a * &rhs.a + &self.b * &rhs.b * five,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Div for Surd5 {
    type Output = Surd5;

    /// # Panics
    ///
    /// On division by zero.
    fn div(self, rhs: Surd5) -> Surd5 {
        let norm = rhs.norm();
        assert!(!norm.is_zero(), "division by zero in Q(sqrt 5)");
        let num = self * rhs.conjugate();
        Surd5::new(num.a / &norm, num.b / norm)
    }
}

impl fmt::Display for Surd5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}√5", self.a, -&self.b)
        } else {
            write!(f, "{} + {}√5", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_operations() {
        let x = Surd5::from_ints(1, 1, 2); // golden ratio
        let sq = x.clone() * x.clone();
        assert_eq!(sq, x.clone() + Surd5::from_ints(1, 0, 1));
        let one = x.clone() / x.clone();
        assert_eq!(one, Surd5::from_ints(1, 0, 1));
        assert!((x.to_f64() - 1.618_033_988_749_895).abs() < 1e-15);
    }

    #[test]
    fn exact_sign() {
        assert_eq!(Surd5::from_ints(-11, 5, 2).signum(), Ordering::Greater);
        assert_eq!(Surd5::from_ints(87, -39, 2).signum(), Ordering::Less);
        assert_eq!(Surd5::from_ints(0, 0, 1).signum(), Ordering::Equal);
        assert!(Surd5::from_ints(9, -4, 1) > Surd5::from_ints(0, 0, 1));
    }

    #[test]
    fn cancellation_free_float() {
        // 9 - 4 sqrt 5 = 1 / (9 + 4 sqrt 5)
        let v = Surd5::from_ints(9, -4, 1).to_f64();
        assert!((v - 1.0 / (9.0 + 4.0 * 5f64.sqrt())).abs() < 1e-17);
    }
}
