use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Polynomial;

/// Quotient of two integer polynomials in `n` and `k`.
///
/// Stored reduced by content only (the gcd of all numerator and denominator
/// coefficients is 1, denominator leading coefficient positive). Equality is
/// decided by cross-multiplication, so two representations of the same function
/// compare equal even when they differ by a common polynomial factor.
#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Panics if `den` is the zero polynomial.
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut out = RationalFunction { num, den };
        out.normalize();
        out
    }

    pub fn one() -> Self {
        Self::new(Polynomial::one(), Polynomial::one())
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self::new(p, Polynomial::one())
    }

    pub fn constant(c: &BigRational) -> Self {
        Self::new(
            Polynomial::constant(c.numer().clone()),
            Polynomial::constant(c.denom().clone()),
        )
    }

    fn normalize(&mut self) {
        let g = self.num.content().gcd(&self.den.content());
        let g = if self.den.leading_coefficient().is_negative() { -g } else { g };
        if !g.is_one() && !g.is_zero() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at an integer point; `None` where the denominator vanishes.
    pub fn eval(&self, n: i64, k: i64) -> Option<BigRational> {
        let d = self.den.eval_i64(n, k);
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(self.num.eval_i64(n, k), d))
    }

    pub fn eval_big(&self, n: &BigInt, k: &BigInt) -> Option<BigRational> {
        let d = self.den.eval(n, k);
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(self.num.eval(n, k), d))
    }

    pub fn shifted(&self, dn: i64, dk: i64) -> Self {
        Self::new(self.num.shifted(dn, dk), self.den.shifted(dn, dk))
    }

    pub fn with_k(&self, value: i64) -> Option<Self> {
        let den = self.den.with_k(value);
        (!den.is_zero()).then(|| Self::new(self.num.with_k(value), den))
    }

    pub fn recip(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| Self::new(self.den.clone(), self.num.clone()))
    }

    /// Cross-multiplied equality: `a/b == c/d` iff `a*d == c*b`.
    pub fn same_as(&self, other: &RationalFunction) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn involves_k(&self) -> bool {
        self.num.involves_k() || self.den.involves_k()
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl std::ops::Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl std::ops::Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(self.num.clone() + rhs.num.clone(), self.den.clone());
        }
        RationalFunction::new(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl std::ops::Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction::new(-self.num.clone(), self.den.clone())
    }
}

impl std::ops::Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::LinearForm;

    fn lin(a: i64, b: i64, c: i64) -> Polynomial {
        Polynomial::from_linear(&LinearForm::new(a, b, c))
    }

    #[test]
    fn equality_ignores_common_factors_and_content() {
        let r = RationalFunction::new(lin(1, 0, 1), lin(1, 0, 2));
        let scaled = RationalFunction::new(
            lin(1, 0, 1).scale(&BigInt::from(-6)) * lin(0, 1, 3),
            lin(1, 0, 2).scale(&BigInt::from(-6)) * lin(0, 1, 3),
        );
        assert_eq!(r, scaled);
        assert_ne!(r, RationalFunction::one());
    }

    #[test]
    fn content_normalization() {
        let r = RationalFunction::new(lin(2, 0, 2), lin(-4, 0, 0));
        assert_eq!(r.numerator(), &lin(-1, 0, -1));
        assert_eq!(r.denominator(), &lin(2, 0, 0));
    }

    #[test]
    fn arithmetic_matches_pointwise_values() {
        let a = RationalFunction::new(lin(1, -1, 0), lin(1, 0, 1));
        let b = RationalFunction::new(lin(0, 1, 1), lin(2, 1, 3));
        for (n, k) in [(1, 0), (3, 2), (7, 5)] {
            let (va, vb) = (a.eval(n, k).unwrap(), b.eval(n, k).unwrap());
            assert_eq!((&a + &b).eval(n, k).unwrap(), &va + &vb);
            assert_eq!((&a - &b).eval(n, k).unwrap(), &va - &vb);
            assert_eq!((&a * &b).eval(n, k).unwrap(), &va * &vb);
        }
    }
}
