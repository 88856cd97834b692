//! One-variable series whose terms are generated exactly.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::term::{HyperTerm, RationalFunction};
use crate::wz::WzPair;

#[derive(Debug, Clone)]
pub enum TermModel {
    /// Terms are `term(n, 0)`; the term must not involve `k`.
    Hyper(HyperTerm),
    /// Terms are `F(n, n-1) + G(n-1, n-1)` for a WZ pair.
    Accelerated(Arc<WzPair>),
}

#[derive(Debug, Clone)]
pub struct SeriesSpec {
    pub name: String,
    pub start: i64,
    pub model: TermModel,
    /// `c` such that the series sums to `c * zeta(3)`, when known.
    pub claimed_limit: Option<BigRational>,
    /// Decimal digits gained per term (informational).
    pub rate_estimate: f64,
}

impl SeriesSpec {
    pub fn hypergeometric(
        name: impl Into<String>,
        start: i64,
        term: HyperTerm,
        claimed_limit: Option<BigRational>,
        rate_estimate: f64,
    ) -> Result<Self> {
        let name = name.into();
        if term.involves_k() {
            return Err(Error::InvalidArgument(format!(
                "series `{name}` term depends on k"
            )));
        }
        Ok(SeriesSpec {
            name,
            start,
            model: TermModel::Hyper(term),
            claimed_limit,
            rate_estimate,
        })
    }

    pub fn hyper_term(&self) -> Option<&HyperTerm> {
        match &self.model {
            TermModel::Hyper(t) => Some(t),
            TermModel::Accelerated(_) => None,
        }
    }

    /// Exact value of the `n`-th summand, constant prefactors included.
    pub fn term_at(&self, n: i64) -> Result<BigRational> {
        if n < self.start {
            return Err(Error::BelowStart { n, start: self.start });
        }
        match &self.model {
            TermModel::Hyper(t) => t.eval_exact(n, 0),
            TermModel::Accelerated(pair) => {
                Ok(pair.f.eval_exact(n, n - 1)? + pair.g.eval_exact(n - 1, n - 1)?)
            }
        }
    }

    /// `r(n)` with `term_at(n+1) = r(n) * term_at(n)`.
    pub fn term_ratio(&self) -> Result<RationalFunction> {
        match &self.model {
            TermModel::Hyper(t) => Ok(t.shift_ratio(1, 0)),
            TermModel::Accelerated(_) => Err(Error::NotHypergeometric(self.name.clone())),
        }
    }

    /// Iterates `(n, term_at(n))` from `from` onward.
    ///
    /// Hypergeometric series advance by the term ratio, falling back to direct
    /// evaluation wherever the ratio is undefined or the running term is zero.
    pub fn terms_from(&self, from: i64) -> Result<Terms<'_>> {
        let current = self.term_at(from)?;
        let ratio = self.term_ratio().ok();
        Ok(Terms {
            series: self,
            ratio,
            n: from,
            current: Some(current),
            pending: None,
        })
    }

    pub fn terms(&self) -> Result<Terms<'_>> {
        self.terms_from(self.start)
    }

    /// Exact partial sum over `start..=last`.
    pub fn partial_sum(&self, last: i64) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        if last < self.start {
            return Ok(acc);
        }
        for item in self.terms()? {
            let (n, t) = item?;
            acc += t;
            if n >= last {
                break;
            }
        }
        Ok(acc)
    }
}

pub struct Terms<'a> {
    series: &'a SeriesSpec,
    ratio: Option<RationalFunction>,
    n: i64,
    current: Option<BigRational>,
    pending: Option<Error>,
}

impl Iterator for Terms<'_> {
    type Item = Result<(i64, BigRational)>;

    fn next(&mut self) -> Option<Self::Item> {
        if let Some(e) = self.pending.take() {
            return Some(Err(e));
        }
        let value = self.current.take()?;
        let n = self.n;
        let next = match &self.ratio {
            Some(r) if !value.is_zero() => match r.eval(n, 0) {
                Some(q) => Ok(&value * q),
                None => self.series.term_at(n + 1),
            },
            _ => self.series.term_at(n + 1),
        };
        self.n = n + 1;
        match next {
            Ok(v) => self.current = Some(v),
            // surfaced on the following call
            Err(e) => self.pending = Some(e),
        }
        Some(Ok((n, value)))
    }
}
