//! Certified decimal evaluation of alternating series.
//!
//! A run stops at the first term below `10^-(digits+2)`. For alternating
//! terms of decreasing magnitude the gap to the limit is at most that first
//! omitted term; alternation and monotonicity are checked on every generated
//! term, including the omitted one.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numeric::{format_rational, log10_abs, pow10, truncated_decimal};
use crate::series::{SeriesSpec, TermModel};
use crate::term::{LinearForm, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumMode {
    /// Accumulate exact rationals.
    Exact,
    /// Accumulate `floor(term * 10^(digits+guard))` as integers.
    Scaled,
}

impl fmt::Display for SumMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SumMode::Exact => "exact",
            SumMode::Scaled => "scaled",
        })
    }
}

impl FromStr for SumMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(SumMode::Exact),
            "scaled" => Ok(SumMode::Scaled),
            _ => Err(Error::InvalidArgument(format!("unknown mode `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecisionContext {
    pub target_digits: u32,
    pub guard_digits: u32,
    /// `10^(target_digits + guard_digits)`
    pub scale: BigInt,
}

impl PrecisionContext {
    pub fn new(target_digits: u32, guard_digits: u32) -> Result<Self> {
        if target_digits == 0 {
            return Err(Error::InvalidArgument("digits must be at least 1".into()));
        }
        if guard_digits < 10 {
            return Err(Error::InvalidArgument("guard digits must be at least 10".into()));
        }
        Ok(PrecisionContext {
            target_digits,
            guard_digits,
            scale: pow10(target_digits + guard_digits),
        })
    }

    /// Guard digits sized so that `terms / scale` stays below `10^-(digits+10)`.
    pub fn for_terms(target_digits: u32, expected_terms: usize) -> Result<Self> {
        let guard = 10 + ceil_log10(expected_terms.max(1));
        Self::new(target_digits, guard)
    }
}

fn ceil_log10(x: usize) -> u32 {
    let mut d = 0;
    let mut p: usize = 1;
    while p < x {
        p = p.saturating_mul(10);
        d += 1;
    }
    d
}

#[derive(Debug, Clone)]
pub struct EvalReport {
    pub series: String,
    pub mode: SumMode,
    pub target_digits: u32,
    /// Partial sum truncated after `certified_digits` decimals.
    pub decimal: String,
    pub terms_used: usize,
    pub tail_bound: BigRational,
    pub rounding_bound: BigRational,
    pub certified_digits: u32,
    pub partial_sum: BigRational,
}

impl EvalReport {
    pub fn error_bound(&self) -> BigRational {
        &self.tail_bound + &self.rounding_bound
    }
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.decimal)?;
        writeln!(f, "terms={}", self.terms_used)?;
        writeln!(f, "tail_bound={}", format_rational(&self.tail_bound))?;
        writeln!(f, "rounding_bound={}", format_rational(&self.rounding_bound))?;
        writeln!(f, "certified_digits={}", self.certified_digits)?;
        writeln!(f, "mode={}", self.mode)?;
        write!(f, "series={}", self.series)
    }
}

struct RawSum {
    sum: BigRational,
    terms_used: usize,
    first_omitted: BigRational,
    rounding: BigRational,
}

fn check_pair(n: i64, start: i64, prev: &BigRational, cur: &BigRational) -> Result<()> {
    if cur.is_zero() || prev.is_zero() || prev.is_negative() == cur.is_negative() {
        return Err(Error::NonAlternating { n: n - 1 });
    }
    if n >= start + 2 && cur.abs() >= prev.abs() {
        return Err(Error::MonotonicityViolation { n: n - 1 });
    }
    Ok(())
}

fn run_sum(series: &SeriesSpec, threshold: &BigRational, ctx: Option<&PrecisionContext>, max_terms: usize) -> Result<RawSum> {
    let mut exact = BigRational::zero();
    let mut scaled = BigInt::zero();
    let mut prev: Option<BigRational> = None;
    for (used, item) in series.terms()?.enumerate() {
        let (n, t) = item?;
        if let Some(p) = &prev {
            check_pair(n, series.start, p, &t)?;
        }
        if t.abs() < *threshold {
            let (sum, rounding) = match ctx {
                Some(c) => (
                    BigRational::new(scaled, c.scale.clone()),
                    BigRational::new(BigInt::from(used), c.scale.clone()),
                ),
                None => (exact, BigRational::zero()),
            };
            return Ok(RawSum {
                sum,
                terms_used: used,
                first_omitted: t,
                rounding,
            });
        }
        if used >= max_terms {
            return Err(Error::InvalidArgument(format!(
                "series `{}` did not reach the target within {max_terms} terms",
                series.name
            )));
        }
        match ctx {
            Some(c) => {
                let s = &t * BigRational::from_integer(c.scale.clone());
                scaled += s.numer().div_floor(s.denom());
            }
            None => exact += &t,
        }
        prev = Some(t);
    }
    unreachable!("term iterator is unbounded")
}

fn certify(sum: &BigRational, err: &BigRational, digits: u32) -> u32 {
    let lo = sum - err;
    let hi = sum + err;
    let mut d = digits;
    while d > 0 {
        let unit = BigRational::new(BigInt::one(), pow10(d));
        let same_digits = lo.is_negative() == hi.is_negative()
            && truncated_decimal(&lo, d) == truncated_decimal(&hi, d);
        if *err < unit && same_digits {
            break;
        }
        d -= 1;
    }
    d
}

fn expected_terms(series: &SeriesSpec, digits: u32) -> usize {
    if series.rate_estimate > 0.0 {
        ((digits as f64 + 2.0) / series.rate_estimate).ceil() as usize + 2
    } else {
        1000
    }
}

/// Sums `series` until the first omitted term is below `10^-(digits+2)` and
/// certifies as many of the requested decimals as the error bound allows.
pub fn sum_to_digits(series: &SeriesSpec, digits: u32, mode: SumMode) -> Result<EvalReport> {
    if digits == 0 {
        return Err(Error::InvalidArgument("digits must be at least 1".into()));
    }
    let threshold = BigRational::new(BigInt::one(), pow10(digits + 2));
    let mut expected = expected_terms(series, digits);
    let max_terms = expected.saturating_mul(50).max(100_000);
    let raw = loop {
        let ctx = PrecisionContext::for_terms(digits, expected)?;
        let ctx_ref = (mode == SumMode::Scaled).then_some(&ctx);
        let raw = run_sum(series, &threshold, ctx_ref, max_terms)?;
        // rerun with wider guard digits if the estimate was too low
        if mode == SumMode::Scaled && raw.terms_used > expected {
            expected = raw.terms_used;
            continue;
        }
        break raw;
    };
    let tail = raw.first_omitted.abs();
    let err = &tail + &raw.rounding;
    let certified = certify(&raw.sum, &err, digits);
    Ok(EvalReport {
        series: series.name.clone(),
        mode,
        target_digits: digits,
        decimal: truncated_decimal(&raw.sum, certified),
        terms_used: raw.terms_used,
        tail_bound: tail,
        rounding_bound: raw.rounding,
        certified_digits: certified,
        partial_sum: raw.sum,
    })
}

/// Least-squares slope of `-log10 |term_at(n)|` over `n` in `[lo, hi]`.
pub fn measure_rate(series: &SeriesSpec, lo: i64, hi: i64) -> Result<f64> {
    if hi <= lo || lo < series.start {
        return Err(Error::domain(
            lo,
            0,
            format!("rate range [{lo}, {hi}] is invalid for a series starting at {}", series.start),
        ));
    }
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for item in series.terms_from(lo)? {
        let (n, t) = item?;
        if t.is_zero() {
            return Err(Error::domain(n, 0, "term is zero"));
        }
        xs.push(n as f64);
        ys.push(-log10_abs(&t));
        if n >= hi {
            break;
        }
    }
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx)
}

/// Number of leading decimals on which the certified evaluations of `a` and
/// `b` agree, capped at the smaller certified count.
pub fn compare_series(a: &SeriesSpec, b: &SeriesSpec, digits: u32) -> Result<u32> {
    if a.claimed_limit != b.claimed_limit {
        return Err(Error::InvalidArgument(format!(
            "`{}` and `{}` claim different limits",
            a.name, b.name
        )));
    }
    let ra = sum_to_digits(a, digits, SumMode::Exact)?;
    let rb = sum_to_digits(b, digits, SumMode::Exact)?;
    Ok(common_decimals(&ra.decimal, &rb.decimal).min(ra.certified_digits.min(rb.certified_digits)))
}

fn common_decimals(a: &str, b: &str) -> u32 {
    let (ia, fa) = a.split_once('.').unwrap_or((a, ""));
    let (ib, fb) = b.split_once('.').unwrap_or((b, ""));
    if ia != ib {
        return 0;
    }
    fa.bytes().zip(fb.bytes()).take_while(|(x, y)| x == y).count() as u32
}

/// Exact partial sum over `start..=last`, computed as independent blocks of
/// `block_len` terms summed concurrently.
pub fn partial_sum_blocks(series: &SeriesSpec, last: i64, block_len: usize) -> Result<BigRational> {
    if block_len == 0 {
        return Err(Error::InvalidArgument("block length must be positive".into()));
    }
    let starts: Vec<i64> = (series.start..=last).step_by(block_len).collect();
    let blocks: Vec<BigRational> = starts
        .par_iter()
        .map(|&from| -> Result<BigRational> {
            let to = (from + block_len as i64 - 1).min(last);
            let mut acc = BigRational::zero();
            for item in series.terms_from(from)? {
                let (n, t) = item?;
                acc += t;
                if n >= to {
                    break;
                }
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    Ok(blocks.into_iter().fold(BigRational::zero(), |acc, b| acc + b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailMethod {
    /// Term ratio proven in `(-1, 0)` for all later `n`; bound is the first omitted term.
    Alternating,
    /// Term ratio proven at most `(n-1)/(n+1)`; bound is `n * t_n`.
    Positive,
    /// No term model: alternation and decrease observed at the cut only.
    Observed,
}

#[derive(Debug, Clone)]
pub struct TailBound {
    pub bound: BigRational,
    pub method: TailMethod,
}

/// Upper bound on `|sum_{n >= first_omitted} term_at(n)|`.
///
/// For hypergeometric series the bound comes with a certificate: the relevant
/// inequality on the term ratio `P(n)/Q(n)` is cleared to a polynomial and
/// shown positive on `n >= first_omitted` by a coefficient-sign test.
/// A positive series whose ratio satisfies `r(n) <= (n-1)/(n+1)` has
/// `(n-1) t_n - n t_{n+1} >= t_n`, which telescopes to `sum_{m>=n} t_m <= n t_n`.
pub fn tail_bound(series: &SeriesSpec, first_omitted: i64) -> Result<TailBound> {
    let t = series.term_at(first_omitted)?;
    let no_bound = || Error::NoTailBound {
        series: series.name.clone(),
        n: first_omitted,
    };
    match &series.model {
        TermModel::Hyper(_) => {
            let r = series.term_ratio()?;
            let (p, q) = (r.numerator(), r.denominator());
            let pq = p * q;
            let alternating = (-pq.clone()).positive_from(first_omitted)
                && ((q * q) - (p * p)).positive_from(first_omitted);
            if alternating {
                return Ok(TailBound {
                    bound: t.abs(),
                    method: TailMethod::Alternating,
                });
            }
            let n_minus_1 = Polynomial::from_linear(&LinearForm::new(1, 0, -1));
            let n_plus_1 = Polynomial::from_linear(&LinearForm::new(1, 0, 1));
            let gap = (&n_minus_1 * q) - (&n_plus_1 * p);
            if first_omitted >= 1 && pq.positive_from(first_omitted) && (&gap * q).positive_from(first_omitted) {
                return Ok(TailBound {
                    bound: t.abs() * BigRational::from_integer(BigInt::from(first_omitted)),
                    method: TailMethod::Positive,
                });
            }
            Err(no_bound())
        }
        TermModel::Accelerated(_) => {
            let next = series.term_at(first_omitted + 1)?;
            let mut alternates = !t.is_zero() && t.is_negative() != next.is_negative();
            if first_omitted > series.start {
                let prev = series.term_at(first_omitted - 1)?;
                alternates &= prev.is_negative() != t.is_negative() && t.abs() < prev.abs();
            }
            if alternates && next.abs() < t.abs() {
                Ok(TailBound {
                    bound: t.abs(),
                    method: TailMethod::Observed,
                })
            } else {
                Err(no_bound())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::numeric::rat;

    #[test]
    fn two_term_apery_sum() {
        let c = Catalog::bundled();
        let s1 = c.series("s1").unwrap();
        assert_eq!(s1.partial_sum(2).unwrap(), rat(115, 96));
        let t3 = s1.term_at(3).unwrap();
        assert_eq!(t3, rat(1, 216));
        let tb = tail_bound(s1, 3).unwrap();
        assert_eq!(tb.method, TailMethod::Alternating);
        assert_eq!(tb.bound, rat(1, 216));
    }

    #[test]
    fn twenty_digits_of_apery() {
        let c = Catalog::bundled();
        let r = sum_to_digits(c.series("s1").unwrap(), 20, SumMode::Exact).unwrap();
        assert_eq!(r.decimal, "1.20205690315959428539");
        assert_eq!(r.certified_digits, 20);
        assert!(r.error_bound() < rat(1, 10).pow(20));
    }

    #[test]
    fn one_digit_for_every_zeta_series() {
        let c = Catalog::bundled();
        for s in c.zeta_series() {
            for mode in [SumMode::Exact, SumMode::Scaled] {
                let r = sum_to_digits(s, 1, mode).unwrap();
                assert!(r.certified_digits >= 1, "{}", s.name);
                assert!(r.decimal.starts_with("1.2"), "{} {}", s.name, r.decimal);
            }
        }
    }

    #[test]
    fn non_alternating_series_is_rejected() {
        let c = Catalog::bundled();
        let err = sum_to_digits(c.series("lhs_s1").unwrap(), 5, SumMode::Exact).unwrap_err();
        assert_eq!(err, Error::NonAlternating { n: 0 });
    }

    #[test]
    fn growing_magnitudes_are_rejected() {
        // (-1)^n * (n+1): alternating but growing
        let t = crate::dsl::parse_term("(-1)^n * (n+1)").unwrap();
        let s = SeriesSpec::hypergeometric("grow", 0, t, None, 1.0).unwrap();
        assert_eq!(
            sum_to_digits(&s, 3, SumMode::Exact).unwrap_err(),
            Error::MonotonicityViolation { n: 1 }
        );
    }

    #[test]
    fn zero_digits_is_invalid() {
        let c = Catalog::bundled();
        assert!(sum_to_digits(c.series("s2").unwrap(), 0, SumMode::Exact).is_err());
        assert!(PrecisionContext::new(5, 9).is_err());
        let ctx = PrecisionContext::for_terms(20, 70).unwrap();
        assert_eq!(ctx.guard_digits, 12);
        assert_eq!(ctx.scale, pow10(32));
    }

    #[test]
    fn positive_tail_certificate_for_g1() {
        let c = Catalog::bundled();
        let lhs = c.series("lhs_s1").unwrap();
        let tb = tail_bound(lhs, 300).unwrap();
        assert_eq!(tb.method, TailMethod::Positive);
        // the true tail sum_{n>=300} 2/(n+1)^3 exceeds 1/301^2 and is below 1/300^2
        assert!(tb.bound > rat(1, 301 * 301));
        assert!(tail_bound(c.series("lhs_s2").unwrap(), 300).is_ok());
    }

    #[test]
    fn rate_range_validation() {
        let c = Catalog::bundled();
        let s1 = c.series("s1").unwrap();
        assert!(matches!(measure_rate(s1, 0, 10), Err(Error::Domain { .. })));
        assert!(matches!(measure_rate(s1, 10, 10), Err(Error::Domain { .. })));
        let r = measure_rate(s1, 100, 200).unwrap();
        assert!((r - 0.602).abs() < 0.02, "{r}");
    }

    #[test]
    fn self_comparison() {
        let c = Catalog::bundled();
        let s1 = c.series("s1").unwrap();
        assert_eq!(compare_series(s1, s1, 50).unwrap(), 50);
        assert!(compare_series(s1, c.series("lhs_s1").unwrap(), 5).is_err());
    }

    #[test]
    fn blocks_match_sequential() {
        let c = Catalog::bundled();
        let s3 = c.series("s3").unwrap();
        assert_eq!(partial_sum_blocks(s3, 40, 7).unwrap(), s3.partial_sum(40).unwrap());
    }

    #[test]
    fn report_serialization() {
        let c = Catalog::bundled();
        let r = sum_to_digits(c.series("s1").unwrap(), 3, SumMode::Exact).unwrap();
        let text = r.to_string();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "1.202");
        assert!(lines[1].starts_with("terms="));
        assert!(lines[2].starts_with("tail_bound="));
        assert_eq!(lines[3], "rounding_bound=0");
        assert_eq!(lines[4], "certified_digits=3");
        assert_eq!(lines[5], "mode=exact");
        assert_eq!(lines[6], "series=s1");
    }
}
