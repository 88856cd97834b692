use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Domain, LinearForm, Polynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::numeric::factorial;

/// A two-variable hypergeometric term
///
/// `constant * (-1)^sign * prod (L_i)!^e_i * poly_num / poly_den`.
///
/// Construction canonicalizes: factorials over the same linear form are merged,
/// constant-argument factorials are folded into the constant, the sign exponent
/// is reduced mod 2, and polynomial content is moved into the constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperTerm {
    sign: LinearForm,
    factorials: Vec<(LinearForm, i32)>,
    poly_num: Polynomial,
    poly_den: Polynomial,
    constant: BigRational,
}

impl HyperTerm {
    pub fn constant(c: BigRational) -> Self {
        HyperTerm {
            sign: LinearForm::constant(0),
            factorials: Vec::new(),
            poly_num: Polynomial::one(),
            poly_den: Polynomial::one(),
            constant: c,
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// Assembles and canonicalizes a term from its parts.
    pub fn from_parts(
        sign: LinearForm,
        factorials: impl IntoIterator<Item = (LinearForm, i32)>,
        poly_num: Polynomial,
        poly_den: Polynomial,
        constant: BigRational,
    ) -> Self {
        let mut t = HyperTerm {
            sign,
            factorials: factorials.into_iter().collect(),
            poly_num,
            poly_den,
            constant,
        };
        t.canonicalize();
        t
    }

    pub fn with_sign(mut self, l: LinearForm) -> Self {
        self.sign = self.sign + l;
        self.canonicalize();
        self
    }

    pub fn with_factorial(mut self, l: LinearForm, exponent: i32) -> Self {
        self.factorials.push((l, exponent));
        self.canonicalize();
        self
    }

    pub fn times_poly(mut self, p: Polynomial) -> Self {
        self.poly_num = &self.poly_num * &p;
        self.canonicalize();
        self
    }

    pub fn over_poly(mut self, p: Polynomial) -> Self {
        self.poly_den = &self.poly_den * &p;
        self.canonicalize();
        self
    }

    pub fn scaled(mut self, c: &BigRational) -> Self {
        self.constant *= c;
        self.canonicalize();
        self
    }

    /// Product of two terms (exponents add, polynomials multiply).
    pub fn product(&self, other: &HyperTerm) -> Self {
        Self::from_parts(
            self.sign + other.sign,
            self.factorials.iter().chain(&other.factorials).copied(),
            &self.poly_num * &other.poly_num,
            &self.poly_den * &other.poly_den,
            &self.constant * &other.constant,
        )
    }

    /// Multiplicative inverse as a formal term.
    pub fn reciprocal(&self) -> Option<Self> {
        if self.constant.is_zero() || self.poly_num.is_zero() {
            return None;
        }
        Some(Self::from_parts(
            self.sign,
            self.factorials.iter().map(|&(l, e)| (l, -e)),
            self.poly_den.clone(),
            self.poly_num.clone(),
            self.constant.recip(),
        ))
    }

    fn canonicalize(&mut self) {
        self.sign = LinearForm::new(
            self.sign.a.rem_euclid(2),
            self.sign.b.rem_euclid(2),
            self.sign.c.rem_euclid(2),
        );

        let mut merged: BTreeMap<LinearForm, i32> = BTreeMap::new();
        for &(l, e) in &self.factorials {
            *merged.entry(l).or_insert(0) += e;
        }
        let mut factorials = Vec::new();
        for (l, e) in merged {
            if e == 0 {
                continue;
            }
            if l.is_constant() && l.c >= 0 {
                let f = BigRational::from_integer(factorial(l.c as u64));
                self.constant *= crate::numeric::pow_rational(&f, e);
            } else {
                factorials.push((l, e));
            }
        }
        self.factorials = factorials;

        if self.poly_num.is_zero() {
            self.constant = BigRational::zero();
        }
        if self.constant.is_zero() {
            self.sign = LinearForm::constant(0);
            self.factorials.clear();
            self.poly_num = Polynomial::one();
            self.poly_den = Polynomial::one();
            return;
        }
        for (poly, numerator_side) in [(&mut self.poly_num, true), (&mut self.poly_den, false)] {
            let mut g = poly.content();
            if poly.leading_coefficient().is_negative() {
                g = -g;
            }
            if !g.is_one() {
                *poly = poly.div_exact(&g);
                let g = BigRational::from_integer(g);
                if numerator_side {
                    self.constant *= g;
                } else {
                    self.constant /= g;
                }
            }
        }
    }

    pub fn sign_exponent(&self) -> LinearForm {
        self.sign
    }

    pub fn factorials(&self) -> &[(LinearForm, i32)] {
        &self.factorials
    }

    pub fn poly_numerator(&self) -> &Polynomial {
        &self.poly_num
    }

    pub fn poly_denominator(&self) -> &Polynomial {
        &self.poly_den
    }

    pub fn constant_factor(&self) -> &BigRational {
        &self.constant
    }

    pub fn involves_k(&self) -> bool {
        self.sign.b != 0
            || self.factorials.iter().any(|(l, _)| l.b != 0)
            || self.poly_num.involves_k()
            || self.poly_den.involves_k()
    }

    /// Every linear form that appears under a factorial.
    pub fn factorial_arguments(&self) -> impl Iterator<Item = LinearForm> + '_ {
        self.factorials.iter().map(|&(l, _)| l)
    }

    /// The region `n >= n_min` where every factorial argument is nonnegative.
    pub fn natural_domain(&self, n_min: i64) -> Domain {
        Domain::new(n_min, self.factorial_arguments().collect())
    }

    /// Exact value at `(n, k)`.
    pub fn eval_exact(&self, n: i64, k: i64) -> Result<BigRational> {
        if self.constant.is_zero() {
            return Ok(BigRational::zero());
        }
        let mut top = BigInt::one();
        let mut bottom = BigInt::one();
        for &(l, e) in &self.factorials {
            let v = l.eval(n, k);
            if v < 0 {
                return Err(Error::domain(n, k, format!("factorial argument {l} = {v} is negative")));
            }
            let f = num_traits::pow(factorial(v as u64), e.unsigned_abs() as usize);
            if e > 0 {
                top *= f;
            } else {
                bottom *= f;
            }
        }
        let d = self.poly_den.eval_i64(n, k);
        if d.is_zero() {
            return Err(Error::domain(n, k, format!("denominator {} vanishes", self.poly_den)));
        }
        top *= self.poly_num.eval_i64(n, k) * self.constant.numer();
        bottom *= d * self.constant.denom();
        if self.sign.eval(n, k).rem_euclid(2) == 1 {
            top = -top;
        }
        Ok(BigRational::new(top, bottom))
    }

    /// `R(n,k)` with `term(n+dn, k+dk) = R(n,k) * term(n,k)` wherever both sides are defined.
    pub fn shift_ratio(&self, dn: i64, dk: i64) -> RationalFunction {
        let mut paired = Vec::with_capacity(2 * self.factorials.len());
        for &(l, e) in &self.factorials {
            paired.push((l.shifted(dn, dk), e));
            paired.push((l, -e));
        }
        let (fac_num, fac_den) = factorial_quotient(&paired)
            .expect("a factorial and its own shift always share a direction");
        let mut num = &(&self.poly_num.shifted(dn, dk) * &self.poly_den) * &fac_num;
        let den = &(&self.poly_num * &self.poly_den.shifted(dn, dk)) * &fac_den;
        if self.sign.shifted(dn, dk).c.rem_euclid(2) != self.sign.c {
            num = -num;
        }
        RationalFunction::new(num, den)
    }

    /// `R(n,k) = self(n,k) / base(n,k)` as a rational function, provided the
    /// factorial structures of the two terms align up to integer shifts.
    pub fn cross_ratio(&self, base: &HyperTerm) -> Result<RationalFunction> {
        let sign_diff = self.sign - base.sign;
        if sign_diff.a.rem_euclid(2) != 0 || sign_diff.b.rem_euclid(2) != 0 {
            return Err(Error::IncompatibleTerms(format!(
                "sign exponents differ by {sign_diff}, which is not an even form"
            )));
        }
        if base.constant.is_zero() {
            return Err(Error::IncompatibleTerms("base term is identically zero".into()));
        }
        let combined: Vec<_> = self
            .factorials
            .iter()
            .copied()
            .chain(base.factorials.iter().map(|&(l, e)| (l, -e)))
            .collect();
        let (fac_num, fac_den) = factorial_quotient(&combined)?;
        let c = &self.constant / &base.constant;
        let mut num = (&(&self.poly_num * &base.poly_den) * &fac_num)
            .scale(c.numer());
        let den = (&(&self.poly_den * &base.poly_num) * &fac_den).scale(c.denom());
        if sign_diff.c.rem_euclid(2) == 1 {
            num = -num;
        }
        Ok(RationalFunction::new(num, den))
    }

    /// Substitutes `k -> value`, leaving a term in `n` alone.
    pub fn with_k(&self, value: i64) -> Self {
        Self::from_parts(
            self.sign.with_k(value),
            self.factorials.iter().map(|&(l, e)| (l.with_k(value), e)),
            self.poly_num.with_k(value),
            self.poly_den.with_k(value),
            self.constant.clone(),
        )
    }
}

/// Reduces a product of factorial powers to a polynomial quotient.
///
/// Forms are grouped by direction `(a, b)`; inside a group every form is an
/// integer offset of the group's smallest form, so `(L+d)! = L! * (L+1)...(L+d)`.
/// A group whose exponents do not sum to zero leaves a factorial behind and
/// cannot be expressed rationally.
fn factorial_quotient(factors: &[(LinearForm, i32)]) -> Result<(Polynomial, Polynomial)> {
    let mut groups: BTreeMap<(i64, i64), Vec<(LinearForm, i32)>> = BTreeMap::new();
    for &(l, e) in factors {
        if e != 0 {
            groups.entry(l.direction()).or_default().push((l, e));
        }
    }
    let mut num = Polynomial::one();
    let mut den = Polynomial::one();
    for (direction, members) in groups {
        let net: i32 = members.iter().map(|&(_, e)| e).sum();
        if net != 0 {
            return Err(Error::IncompatibleTerms(format!(
                "factorials in direction {direction:?} leave a net exponent of {net}"
            )));
        }
        let base_c = members.iter().map(|(l, _)| l.c).min().unwrap();
        for (l, e) in members {
            let mut rising = Polynomial::one();
            for i in base_c + 1..=l.c {
                rising = &rising * &Polynomial::from_linear(&LinearForm { c: i, ..l });
            }
            let powered = rising.pow(e.unsigned_abs());
            if e > 0 {
                num = &num * &powered;
            } else {
                den = &den * &powered;
            }
        }
    }
    Ok((num, den))
}
