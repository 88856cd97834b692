use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::LinearForm;

/// Integer polynomial in `n` and `k`, keyed by `(deg_n, deg_k)`.
///
/// Canonical: no zero coefficients are ever stored, so the zero polynomial
/// has an empty coefficient map and structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term((0, 0), c.into());
        p
    }

    pub fn n() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn k() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn monomial(deg_n: u32, deg_k: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term((deg_n, deg_k), c.into());
        p
    }

    pub fn from_linear(l: &LinearForm) -> Self {
        let mut p = Self::zero();
        p.add_term((1, 0), l.a.into());
        p.add_term((0, 1), l.b.into());
        p.add_term((0, 0), l.c.into());
        p
    }

    /// Builds from `(deg_n, deg_k, coefficient)` triples; repeated keys accumulate.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term((i, j), c.into());
        }
        p
    }

    fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(key).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => self.coeffs.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn coefficient(&self, deg_n: u32, deg_k: u32) -> BigInt {
        self.coeffs.get(&(deg_n, deg_k)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.coeffs.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn degree_n(&self) -> u32 {
        self.coeffs.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn degree_k(&self) -> u32 {
        self.coeffs.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.coeffs.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn involves_k(&self) -> bool {
        self.coeffs.keys().any(|&(_, j)| j > 0)
    }

    /// Returns the linear form if the polynomial has total degree at most one.
    pub fn as_linear(&self) -> Option<LinearForm> {
        if self.total_degree() > 1 {
            return None;
        }
        let get = |key: (u32, u32)| -> Option<i64> {
            let c = self.coefficient(key.0, key.1);
            i64::try_from(c).ok()
        };
        Some(LinearForm::new(get((1, 0))?, get((0, 1))?, get((0, 0))?))
    }

    /// Gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|(&key, v)| (key, v * c)).collect(),
        }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_exact(&self, c: &BigInt) -> Self {
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&key, v)| {
                    debug_assert!((v % c).is_zero());
                    (key, v / c)
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, n: &BigInt, k: &BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (&(i, j), c) in &self.coeffs {
            total += c * num_traits::pow(n.clone(), i as usize) * num_traits::pow(k.clone(), j as usize);
        }
        total
    }

    pub fn eval_i64(&self, n: i64, k: i64) -> BigInt {
        self.eval(&BigInt::from(n), &BigInt::from(k))
    }

    pub fn eval_rational(&self, n: &BigRational, k: &BigRational) -> BigRational {
        let mut total = BigRational::zero();
        for (&(i, j), c) in &self.coeffs {
            total += BigRational::from_integer(c.clone())
                * num_traits::pow(n.clone(), i as usize)
                * num_traits::pow(k.clone(), j as usize);
        }
        total
    }

    /// Substitutes `n -> n + dn`, `k -> k + dk` and expands.
    pub fn shifted(&self, dn: i64, dk: i64) -> Self {
        if dn == 0 && dk == 0 {
            return self.clone();
        }
        let n_sub = Polynomial::from_linear(&LinearForm::new(1, 0, dn));
        let k_sub = Polynomial::from_linear(&LinearForm::new(0, 1, dk));
        self.substitute(&n_sub, &k_sub)
    }

    /// Substitutes `k -> value`, leaving a polynomial in `n` only.
    pub fn with_k(&self, value: i64) -> Self {
        self.substitute(&Polynomial::n(), &Polynomial::constant(value))
    }

    pub fn substitute(&self, n_sub: &Polynomial, k_sub: &Polynomial) -> Self {
        let mut n_pows = vec![Polynomial::one()];
        let mut k_pows = vec![Polynomial::one()];
        let mut out = Polynomial::zero();
        for (&(i, j), c) in &self.coeffs {
            while n_pows.len() <= i as usize {
                let next = n_pows.last().unwrap() * n_sub;
                n_pows.push(next);
            }
            while k_pows.len() <= j as usize {
                let next = k_pows.last().unwrap() * k_sub;
                k_pows.push(next);
            }
            out = out + (&n_pows[i as usize] * &k_pows[j as usize]).scale(c);
        }
        out
    }

    /// True when the polynomial, in `n` alone, is provably positive on `n >= start`:
    /// after substituting `n = start + x`, every coefficient is nonnegative and the
    /// constant is positive. A sufficient (not necessary) condition.
    pub fn positive_from(&self, start: i64) -> bool {
        if self.involves_k() {
            return false;
        }
        let moved = self.shifted(start, 0);
        moved.coefficient(0, 0).is_positive() && moved.coeffs.values().all(|c| !c.is_negative())
    }

    /// Sign convention used for rendering: the coefficient of the leading term.
    pub fn leading_coefficient(&self) -> BigInt {
        self.coeffs
            .iter()
            .max_by_key(|(&(i, j), _)| (i + j, i))
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }
}

impl std::ops::Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        for (key, c) in rhs.coeffs {
            self.add_term(key, c);
        }
        self
    }
}

impl std::ops::Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        for (key, c) in rhs.coeffs {
            self.add_term(key, -c);
        }
        self
    }
}

impl std::ops::Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|(key, c)| (key, -c)).collect(),
        }
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (&(i1, j1), c1) in &self.coeffs {
            for (&(i2, j2), c2) in &rhs.coeffs {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl std::ops::Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: &str, e: u32, need_star: bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if need_star {
        f.write_str("*")?;
    }
    f.write_str(name)?;
    if e > 1 {
        write!(f, "^{e}")?;
    }
    Ok(())
}

/// Renders in DSL syntax with explicit `*`, highest degree first: `56*n^2-32*n+5`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.coeffs.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| std::cmp::Reverse((i + j, i)));
        for (idx, key) in keys.iter().enumerate() {
            let c = &self.coeffs[key];
            if c.is_negative() {
                f.write_str("-")?;
            } else if idx > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            let constant = key.0 == 0 && key.1 == 0;
            let show_coeff = constant || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            write_var(f, "n", key.0, show_coeff)?;
            write_var(f, "k", key.1, show_coeff || key.0 > 0)?;
        }
        Ok(())
    }
}
