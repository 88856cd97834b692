//! The shipped series and WZ pairs.
//!
//! Entries are defined as DSL text in `data/catalog.txt` and parsed at load.
//! The [`builtin`] constructors build the same terms directly and are used for
//! any entry the text does not define.

use std::fmt;

use num_rational::BigRational;

use crate::dsl::parse_definitions;
use crate::error::{Error, Result};
use crate::numeric::int;
use crate::series::SeriesSpec;
use crate::term::HyperTerm;
use crate::wz::{lhs_series, WzPair};

pub const BUNDLED: &str = include_str!("../data/catalog.txt");

const TERM_NAMES: [&str; 7] = ["f_s1", "g_s1", "f_s2", "g_s2", "s1", "s2", "s3"];

/// Digits per term, fitted over `n` in `[100, 200]`.
pub const RATE_S1: f64 = 0.602;
pub const RATE_S2: f64 = 1.431;
pub const RATE_S3: f64 = 1.806;

/// Hand-coded terms, independent of the parser.
pub mod builtin {
    use crate::numeric::rat;
    use crate::term::{HyperTerm, LinearForm, Polynomial};

    fn lin(a: i64, b: i64, c: i64) -> LinearForm {
        LinearForm::new(a, b, c)
    }

    fn lp(a: i64, b: i64, c: i64) -> Polynomial {
        Polynomial::from_linear(&lin(a, b, c))
    }

    /// `(-1)^k k!^2 (sn-k-1)! / ((sn+k+1)! (k+1))`
    pub fn family_f(s: i64) -> HyperTerm {
        HyperTerm::one()
            .with_sign(LinearForm::k())
            .with_factorial(LinearForm::k(), 2)
            .with_factorial(lin(s, -1, -1), 1)
            .with_factorial(lin(s, 1, 1), -1)
            .over_poly(lp(0, 1, 1))
    }

    /// `2 (-1)^k k!^2 (n-k)! / ((n+k+1)! (n+1)^2)`
    pub fn g_s1() -> HyperTerm {
        HyperTerm::constant(rat(2, 1))
            .with_sign(LinearForm::k())
            .with_factorial(LinearForm::k(), 2)
            .with_factorial(lin(1, -1, 0), 1)
            .with_factorial(lin(1, 1, 1), -1)
            .over_poly(lp(1, 0, 1).pow(2))
    }

    /// `(-1)^k k!^2 (2n-k)! (3+4n)(4n^2+6n+k+3) / (2 (2n+k+2)! (n+1)^2 (2n+1)^2)`
    pub fn g_s2() -> HyperTerm {
        let quadratic = Polynomial::from_terms([(2, 0, 4), (1, 0, 6), (0, 1, 1), (0, 0, 3)]);
        HyperTerm::constant(rat(1, 2))
            .with_sign(LinearForm::k())
            .with_factorial(LinearForm::k(), 2)
            .with_factorial(lin(2, -1, 0), 1)
            .with_factorial(lin(2, 1, 2), -1)
            .times_poly(lp(4, 0, 3))
            .times_poly(quadratic)
            .over_poly(lp(1, 0, 1).pow(2))
            .over_poly(lp(2, 0, 1).pow(2))
    }

    /// `5/2 (-1)^(n-1) / (C(2n,n) n^3)`
    pub fn s1() -> HyperTerm {
        HyperTerm::constant(rat(5, 2))
            .with_sign(lin(1, 0, -1))
            .with_factorial(LinearForm::n(), 2)
            .with_factorial(lin(2, 0, 0), -1)
            .over_poly(Polynomial::n().pow(3))
    }

    /// `1/4 (-1)^(n-1) (56n^2-32n+5) / ((2n-1)^2 C(3n,n) C(2n,n) n^3)`
    pub fn s2() -> HyperTerm {
        HyperTerm::constant(rat(1, 4))
            .with_sign(lin(1, 0, -1))
            .with_factorial(LinearForm::n(), 3)
            .with_factorial(lin(3, 0, 0), -1)
            .times_poly(Polynomial::from_terms([(2, 0, 56), (1, 0, -32), (0, 0, 5)]))
            .over_poly(lp(2, 0, -1).pow(2))
            .over_poly(Polynomial::n().pow(3))
    }

    /// `(-1)^n / (72 C(4n,n) C(3n,n)) * P(n) / ((4n+1)(4n+3)(n+1)(3n+1)^2(3n+2)^2)`
    pub fn s3() -> HyperTerm {
        let p = Polynomial::from_terms([(4, 0, 5265), (3, 0, 13878), (2, 0, 13761), (1, 0, 6120), (0, 0, 1040)]);
        HyperTerm::constant(rat(1, 72))
            .with_sign(LinearForm::n())
            .with_factorial(LinearForm::n(), 2)
            .with_factorial(lin(2, 0, 0), 1)
            .with_factorial(lin(4, 0, 0), -1)
            .times_poly(p)
            .over_poly(lp(4, 0, 1))
            .over_poly(lp(4, 0, 3))
            .over_poly(lp(1, 0, 1))
            .over_poly(lp(3, 0, 1).pow(2))
            .over_poly(lp(3, 0, 2).pow(2))
    }

    pub fn by_name(name: &str) -> Option<HyperTerm> {
        Some(match name {
            "f_s1" => family_f(1),
            "g_s1" => g_s1(),
            "f_s2" => family_f(2),
            "g_s2" => g_s2(),
            "s1" => s1(),
            "s2" => s2(),
            "s3" => s3(),
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Entry<'a> {
    Series(&'a SeriesSpec),
    Pair(&'a WzPair),
}

impl Entry<'_> {
    pub fn name(&self) -> &str {
        match self {
            Entry::Series(s) => &s.name,
            Entry::Pair(p) => &p.name,
        }
    }
}

/// `name kind start rate`, as printed by `list`.
impl fmt::Display for Entry<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Series(s) => write!(f, "{} series {} {:.3}", s.name, s.start, s.rate_estimate),
            Entry::Pair(p) => write!(
                f,
                "{} pair {} {:.3}",
                p.name,
                p.check_domain.n_min,
                pair_rate(p.s)
            ),
        }
    }
}

fn pair_rate(s: u32) -> f64 {
    match s {
        1 => RATE_S1,
        2 => RATE_S2,
        3 => RATE_S3,
        _ => 0.0,
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    series: Vec<SeriesSpec>,
    pairs: Vec<WzPair>,
}

impl Catalog {
    /// The bundled catalog; falls back to the hand-coded terms if the bundled
    /// text fails to parse.
    pub fn bundled() -> Catalog {
        Catalog::from_text(BUNDLED).unwrap_or_else(|_| Catalog::builtin())
    }

    pub fn builtin() -> Catalog {
        Catalog::assemble(|name| builtin::by_name(name).expect("known catalog name"))
            .expect("hand-coded catalog is well formed")
    }

    /// Loads catalog text. Names the text omits use the hand-coded terms; names
    /// outside the catalog are rejected.
    pub fn from_text(text: &str) -> Result<Catalog> {
        let defs = parse_definitions(text)?;
        for (name, _) in &defs {
            if !TERM_NAMES.contains(&name.as_str()) {
                return Err(Error::Catalog(format!("unknown catalog entry `{name}`")));
            }
        }
        Catalog::assemble(|name| {
            defs.iter()
                .rev()
                .find(|(n, _)| n == name)
                .map(|(_, t)| t.clone())
                .unwrap_or_else(|| builtin::by_name(name).expect("known catalog name"))
        })
    }

    fn assemble(term: impl Fn(&str) -> HyperTerm) -> Result<Catalog> {
        let one: BigRational = int(1);
        let two: BigRational = int(2);
        let pairs = vec![
            WzPair::new("s1", term("f_s1"), term("g_s1"), 1).with_lhs_limit(two.clone()),
            WzPair::new("s2", term("f_s2"), term("g_s2"), 2).with_lhs_limit(two),
        ];
        let mut series = vec![
            SeriesSpec::hypergeometric("s1", 1, term("s1"), Some(one.clone()), RATE_S1)?,
            SeriesSpec::hypergeometric("s2", 1, term("s2"), Some(one.clone()), RATE_S2)?,
            SeriesSpec::hypergeometric("s3", 0, term("s3"), Some(one), RATE_S3)?,
        ];
        for p in &pairs {
            series.push(lhs_series(p)?);
        }
        Ok(Catalog { series, pairs })
    }

    pub fn series(&self, name: &str) -> Result<&SeriesSpec> {
        self.series
            .iter()
            .find(|s| s.name.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown series `{name}`")))
    }

    pub fn pair(&self, name: &str) -> Result<&WzPair> {
        self.pairs
            .iter()
            .find(|p| p.name.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown pair `{name}`")))
    }

    pub fn all_series(&self) -> &[SeriesSpec] {
        &self.series
    }

    pub fn pairs(&self) -> &[WzPair] {
        &self.pairs
    }

    /// The series that sum to exactly `zeta(3)`.
    pub fn zeta_series(&self) -> impl Iterator<Item = &SeriesSpec> {
        self.series
            .iter()
            .filter(|s| s.claimed_limit.as_ref().is_some_and(|c| *c == int(1)))
    }

    pub fn entries(&self) -> Vec<Entry<'_>> {
        self.series
            .iter()
            .map(Entry::Series)
            .chain(self.pairs.iter().map(Entry::Pair))
            .collect()
    }
}

/// All bundled entries.
pub fn catalog_entries() -> Vec<Entry<'static>> {
    static CATALOG: std::sync::OnceLock<Catalog> = std::sync::OnceLock::new();
    CATALOG.get_or_init(Catalog::bundled).entries()
}
