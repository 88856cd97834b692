//! Exact verification of WZ pairs and the acceleration transform
//! `sum_{n>=0} G(n,0) = sum_{n>=1} F(n,n-1) + G(n-1,n-1)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numeric::format_rational;
use crate::series::{SeriesSpec, TermModel};
use crate::term::{Domain, HyperTerm, LinearForm, Polynomial, RationalFunction};

/// A pair `(F, G)` claimed to satisfy `F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k)`.
#[derive(Debug, Clone)]
pub struct WzPair {
    pub name: String,
    pub f: HyperTerm,
    pub g: HyperTerm,
    /// Family parameter; informational.
    pub s: u32,
    /// Region where all four quantities of the identity are defined.
    pub check_domain: Domain,
    /// `c` with `sum_{n>=0} G(n,0) = c * zeta(3)`, when known.
    pub lhs_limit: Option<BigRational>,
}

impl WzPair {
    /// Pair over the catalog domain `n >= 1`, `0 <= k <= s*n - 1`.
    pub fn new(name: impl Into<String>, f: HyperTerm, g: HyperTerm, s: u32) -> Self {
        WzPair {
            name: name.into(),
            f,
            g,
            s,
            check_domain: Domain::triangle(1, s as i64),
            lhs_limit: None,
        }
    }

    pub fn with_lhs_limit(mut self, c: BigRational) -> Self {
        self.lhs_limit = Some(c);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Grid,
    Symbolic,
}

impl fmt::Display for VerifyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifyMode::Grid => "grid",
            VerifyMode::Symbolic => "symbolic",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub n: i64,
    pub k: i64,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub mode: VerifyMode,
    pub points_checked: usize,
    /// `(deg_n, deg_k)` bound on the cleared identity, symbolic mode only.
    pub degree_bound: Option<(u32, u32)>,
    pub certificate: Option<RationalFunction>,
    /// Sorted by `(n, k)`.
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn outcome(&self) -> Outcome {
        if self.failures.is_empty() {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome() == Outcome::Pass
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

/// One `n k lhs rhs FAIL` line per failure, then a summary line.
impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fl in &self.failures {
            writeln!(
                f,
                "{} {} {} {} FAIL",
                fl.n,
                fl.k,
                format_rational(&fl.lhs),
                format_rational(&fl.rhs)
            )?;
        }
        let status = match self.outcome() {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
        };
        write!(f, "{status} mode={} points={}", self.mode, self.points_checked)?;
        if let Some((dn, dk)) = self.degree_bound {
            write!(f, " degree_n={dn} degree_k={dk}")?;
        }
        if let Some(r) = &self.certificate {
            write!(f, " certificate={r}")?;
        }
        if !self.failures.is_empty() {
            write!(f, " failures={}", self.failures.len())?;
        }
        Ok(())
    }
}

/// Checks the WZ identity exactly at every point of the pair's domain with `n <= n_max`.
pub fn verify_grid(pair: &WzPair, n_max: i64) -> Result<VerifyReport> {
    if n_max < 1 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    let points = pair.check_domain.points(n_max)?;
    let outcomes: Vec<Option<Failure>> = points
        .par_iter()
        .map(|&(n, k)| -> Result<Option<Failure>> {
            let lhs = pair.f.eval_exact(n + 1, k)? - pair.f.eval_exact(n, k)?;
            let rhs = pair.g.eval_exact(n, k + 1)? - pair.g.eval_exact(n, k)?;
            Ok((lhs != rhs).then_some(Failure { n, k, lhs, rhs }))
        })
        .collect::<Result<_>>()?;
    let failures = outcomes.into_iter().flatten().collect();
    Ok(VerifyReport {
        mode: VerifyMode::Grid,
        points_checked: points.len(),
        degree_bound: None,
        certificate: None,
        failures,
    })
}

/// Proves the WZ identity for all `(n, k)` via the certificate `R = G/F`.
pub fn verify_symbolic(pair: &WzPair) -> Result<VerifyReport> {
    let r = pair.g.cross_ratio(&pair.f)?;
    verify_certificate(&pair.f, &r)
}

struct Side<'a> {
    factors: Vec<&'a Polynomial>,
}

impl Side<'_> {
    fn degrees(&self) -> (u32, u32) {
        self.factors
            .iter()
            .fold((0, 0), |(a, b), p| (a + p.degree_n(), b + p.degree_k()))
    }

    fn eval(&self, n: &BigInt, k: &BigInt) -> BigInt {
        self.factors.iter().map(|p| p.eval(n, k)).product()
    }
}

/// Proves `F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k)` where `G = R * F`.
///
/// Dividing by `F(n,k)` gives `F(n+1,k)/F - 1 = R(n,k+1) * F(n,k+1)/F - R(n,k)`,
/// an identity between rational functions. Clearing denominators leaves a
/// polynomial `P(n,k)` whose partial degrees are bounded by the sum of its
/// factors' degrees; `P` vanishing on a `(deg_n+1) x (deg_k+1)` product grid
/// forces `P = 0`. The products are never expanded.
pub fn verify_certificate(f: &HyperTerm, r: &RationalFunction) -> Result<VerifyReport> {
    let a = f.shift_ratio(1, 0);
    let s = f.shift_ratio(0, 1);
    let rs = r.shifted(0, 1);
    let a_minus_one = a.numerator().clone() - a.denominator().clone();

    // lhs = (a_n - a_d) * rs_d * s_d * r_d
    let lhs = Side {
        factors: vec![&a_minus_one, rs.denominator(), s.denominator(), r.denominator()],
    };
    // rhs = rs_n * s_n * a_d * r_d - r_n * a_d * rs_d * s_d
    let rhs_plus = Side {
        factors: vec![rs.numerator(), s.numerator(), a.denominator(), r.denominator()],
    };
    let rhs_minus = Side {
        factors: vec![r.numerator(), a.denominator(), rs.denominator(), s.denominator()],
    };
    let (dn, dk) = [lhs.degrees(), rhs_plus.degrees(), rhs_minus.degrees()]
        .into_iter()
        .fold((0, 0), |(x, y), (a, b)| (x.max(a), y.max(b)));

    let denominators = [a.denominator(), s.denominator(), r.denominator(), rs.denominator()];
    let (n0, k0) = find_grid(&denominators, dn, dk).ok_or(Error::SingularGrid)?;

    let mut failures = Vec::new();
    let mut checked = 0;
    for n in n0..=n0 + dn as i64 {
        for k in k0..=k0 + dk as i64 {
            let (bn, bk) = (BigInt::from(n), BigInt::from(k));
            let l = lhs.eval(&bn, &bk);
            let rv = rhs_plus.eval(&bn, &bk) - rhs_minus.eval(&bn, &bk);
            checked += 1;
            if l != rv {
                failures.push(Failure {
                    n,
                    k,
                    lhs: BigRational::from_integer(l),
                    rhs: BigRational::from_integer(rv),
                });
            }
        }
    }
    Ok(VerifyReport {
        mode: VerifyMode::Symbolic,
        points_checked: checked,
        degree_bound: Some((dn, dk)),
        certificate: Some(r.clone()),
        failures,
    })
}

/// Lower-left corner of a grid on which no denominator vanishes, searching
/// corners within ten times the grid size.
fn find_grid(denominators: &[&Polynomial], dn: u32, dk: u32) -> Option<(i64, i64)> {
    let window_n = 10 * (dn as i64 + dk as i64 + 1);
    let window_k = 10 * (dk as i64 + 1);
    for n0 in 1..=window_n {
        'corner: for k0 in 0..=window_k {
            for n in n0..=n0 + dn as i64 {
                for k in k0..=k0 + dk as i64 {
                    if denominators.iter().any(|d| d.eval_i64(n, k).is_zero()) {
                        continue 'corner;
                    }
                }
            }
            return Some((n0, k0));
        }
    }
    None
}

/// Checks `l(n, shift_k(n)) >= 0` for every `n >= n_from`, where the form is
/// restricted to a line `k = n + dk`, shifted by `dn` in `n`.
fn nonnegative_on_line(l: &LinearForm, dn: i64, dk: i64, n_from: i64) -> bool {
    // l(n + dn, n + dk) = (a + b) n + (a dn + b dk + c)
    let slope = l.a + l.b;
    slope >= 0 && l.eval(n_from + dn, n_from + dk) >= 0
}

/// The accelerated series `b_n = F(n, n-1) + G(n-1, n-1)`, `n >= 1`.
pub fn accelerate(pair: &WzPair) -> Result<SeriesSpec> {
    for l in pair.f.factorial_arguments() {
        if !nonnegative_on_line(&l, 0, -1, 1) {
            return Err(Error::domain(1, 0, format!("F factorial ({l})! leaves its domain on k = n-1")));
        }
    }
    for l in pair.g.factorial_arguments() {
        if !nonnegative_on_line(&l, -1, -1, 1) {
            return Err(Error::domain(0, 0, format!("G factorial ({l})! leaves its domain on (n-1, n-1)")));
        }
    }
    Ok(SeriesSpec {
        name: format!("accel_{}", pair.name),
        start: 1,
        model: TermModel::Accelerated(Arc::new(pair.clone())),
        claimed_limit: pair.lhs_limit.clone(),
        rate_estimate: 0.0,
    })
}

/// The left-hand series `G(n, 0)`, `n >= 0`.
pub fn lhs_series(pair: &WzPair) -> Result<SeriesSpec> {
    let term = pair.g.with_k(0);
    for l in term.factorial_arguments() {
        if l.a < 0 || l.c < 0 {
            return Err(Error::domain(0, 0, format!("G(n,0) factorial ({l})! is negative for some n >= 0")));
        }
    }
    SeriesSpec::hypergeometric(format!("lhs_{}", pair.name), 0, term, pair.lhs_limit.clone(), 0.0)
}
