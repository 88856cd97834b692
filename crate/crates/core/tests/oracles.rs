//! Catalog terms checked against hand-written factorial and binomial formulas.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zeta3::catalog::Catalog;
use zeta3::precision::{compare_series, sum_to_digits, tail_bound, SumMode, TailMethod};
use zeta3::term::{LinearForm, Polynomial, RationalFunction};
use zeta3::wz::{accelerate, lhs_series, verify_grid, verify_symbolic};

fn fact(m: i64) -> BigInt {
    assert!(m >= 0);
    (1..=m).fold(BigInt::one(), |a, i| a * i)
}

fn choose(n: i64, k: i64) -> BigInt {
    fact(n) / (fact(k) * fact(n - k))
}

fn q(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

fn sgn(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 { BigInt::one() } else { -BigInt::one() }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn f_direct(s: i64, n: i64, k: i64) -> BigRational {
    q(sgn(k) * fact(k).pow(2) * fact(s * n - k - 1), fact(s * n + k + 1) * big(k + 1))
}

fn g1_direct(n: i64, k: i64) -> BigRational {
    q(big(2) * sgn(k) * fact(k).pow(2) * fact(n - k), fact(n + k + 1) * big((n + 1).pow(2)))
}

fn g2_direct(n: i64, k: i64) -> BigRational {
    q(
        sgn(k) * fact(k).pow(2) * fact(2 * n - k) * big(3 + 4 * n) * big(4 * n * n + 6 * n + k + 3),
        big(2) * fact(2 * n + k + 2) * big((n + 1).pow(2)) * big((2 * n + 1).pow(2)),
    )
}

fn s1_direct(n: i64) -> BigRational {
    q(big(5) * sgn(n - 1), big(2) * choose(2 * n, n) * big(n.pow(3)))
}

fn s2_direct(n: i64) -> BigRational {
    q(
        sgn(n - 1) * big(56 * n * n - 32 * n + 5),
        big(4) * big((2 * n - 1).pow(2)) * choose(3 * n, n) * choose(2 * n, n) * big(n.pow(3)),
    )
}

fn s3_direct(n: i64) -> BigRational {
    let p = 6120 * n + 5265 * n.pow(4) + 13761 * n.pow(2) + 13878 * n.pow(3) + 1040;
    let d = (4 * n + 1) * (4 * n + 3) * (n + 1) * (3 * n + 1).pow(2) * (3 * n + 2).pow(2);
    q(sgn(n) * big(p), big(72) * choose(4 * n, n) * choose(3 * n, n) * big(d))
}

#[test]
fn catalog_terms_match_direct_formulas() {
    let c = Catalog::bundled();
    let (p1, p2) = (c.pair("s1").unwrap(), c.pair("s2").unwrap());
    for n in 1..25 {
        for k in 0..n {
            assert_eq!(p1.f.eval_exact(n, k).unwrap(), f_direct(1, n, k));
            assert_eq!(p1.g.eval_exact(n, k).unwrap(), g1_direct(n, k));
        }
        for k in 0..2 * n {
            assert_eq!(p2.f.eval_exact(n, k).unwrap(), f_direct(2, n, k));
            assert_eq!(p2.g.eval_exact(n, k).unwrap(), g2_direct(n, k));
        }
    }
    for n in 1..60 {
        assert_eq!(c.series("s1").unwrap().term_at(n).unwrap(), s1_direct(n));
        assert_eq!(c.series("s2").unwrap().term_at(n).unwrap(), s2_direct(n));
    }
    for n in 0..60 {
        assert_eq!(c.series("s3").unwrap().term_at(n).unwrap(), s3_direct(n));
    }
}

#[test]
fn displayed_spot_values() {
    let c = Catalog::bundled();
    assert_eq!(f_direct(1, 1, 0), q(big(1), big(2)));
    assert_eq!(g1_direct(0, 0), big(2).into());
    assert_eq!(c.series("s1").unwrap().term_at(2).unwrap(), q(big(-5), big(96)));
    assert_eq!(c.series("s3").unwrap().term_at(0).unwrap(), q(big(65), big(54)));
    let p2 = c.pair("s2").unwrap();
    let r = p2.g.cross_ratio(&p2.f).unwrap();
    assert_eq!(g2_direct(1, 0) / f_direct(2, 1, 0), q(big(91), big(144)));
    assert_eq!(r.eval(1, 0).unwrap(), q(big(91), big(144)));
    let b2 = accelerate(p2).unwrap();
    assert_eq!(b2.term_at(1).unwrap(), q(big(29), big(12)));
    assert_eq!(lhs_series(p2).unwrap().term_at(0).unwrap(), q(big(9), big(4)));
}

#[test]
fn shift_ratio_of_g1_at_random_points() {
    let c = Catalog::bundled();
    let g = &c.pair("s1").unwrap().g;
    let r = g.shift_ratio(1, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let n = rng.gen_range(0..50);
        let k = rng.gen_range(0..=n);
        let expected = g1_direct(n + 1, k) / g1_direct(n, k);
        assert_eq!(r.eval(n, k).unwrap(), expected, "({n},{k})");
    }
    let lin = |a, b, c| Polynomial::from_linear(&LinearForm::new(a, b, c));
    let closed = RationalFunction::new(&lin(1, -1, 1) * &lin(1, 0, 1).pow(2), &lin(1, 1, 2) * &lin(1, 0, 2).pow(2));
    assert_eq!(r, closed);
}

#[test]
fn series_term_ratios() {
    let c = Catalog::bundled();
    let lin = |a, c| Polynomial::from_linear(&LinearForm::new(a, 0, c));
    let apery = RationalFunction::new(
        -Polynomial::n().pow(3),
        (&lin(2, 1) * &lin(1, 1).pow(2)).scale(&big(2)),
    );
    let s1 = c.series("s1").unwrap();
    assert_eq!(s1.term_ratio().unwrap(), apery);
    assert_eq!(s1.term_at(2).unwrap() / s1.term_at(1).unwrap(), q(big(-1), big(24)));
    for n in 1..=20 {
        assert_eq!(apery.eval(n, 0).unwrap(), s1_direct(n + 1) / s1_direct(n));
    }
    let lhs = c.series("lhs_s1").unwrap();
    assert_eq!(lhs.term_ratio().unwrap(), RationalFunction::new(lin(1, 1).pow(3), lin(1, 2).pow(3)));
    let constant = zeta3::series::SeriesSpec::hypergeometric("c", 0, zeta3::dsl::parse_term("3").unwrap(), None, 0.0).unwrap();
    assert!(constant.term_ratio().unwrap().is_one());
}

#[test]
fn recurrence_matches_direct_terms_over_long_prefix() {
    let c = Catalog::bundled();
    for s in c.all_series() {
        let r = s.term_ratio().unwrap();
        for item in s.terms().unwrap().take(201) {
            let (n, t) = item.unwrap();
            assert_eq!(t, s.term_at(n).unwrap(), "{} n={n}", s.name);
            assert_eq!(s.term_at(n + 1).unwrap(), r.eval(n, 0).unwrap() * &t);
        }
    }
}

#[test]
fn zeta_series_alternate_and_shrink() {
    let c = Catalog::bundled();
    for s in c.zeta_series() {
        let terms: Vec<_> = s.terms().unwrap().take(150).map(|t| t.unwrap().1).collect();
        for w in terms.windows(2) {
            assert_ne!(w[0].is_negative(), w[1].is_negative(), "{}", s.name);
            assert!(w[1].abs() < w[0].abs(), "{}", s.name);
        }
        assert_eq!(tail_bound(s, s.start + 5).unwrap().method, TailMethod::Alternating);
    }
}

#[test]
fn acceleration_doubles_the_apery_series() {
    let c = Catalog::bundled();
    let b = accelerate(c.pair("s1").unwrap()).unwrap();
    let s1 = c.series("s1").unwrap();
    for n in 1..=50 {
        assert_eq!(b.term_at(n).unwrap(), s1.term_at(n).unwrap() * big(2));
    }
    let b2 = accelerate(c.pair("s2").unwrap()).unwrap();
    let s2 = c.series("s2").unwrap();
    for n in 1..=50 {
        assert_eq!(b2.term_at(n).unwrap(), s2.term_at(n).unwrap() * big(2));
    }
}

#[test]
fn lhs_series_sums_to_twice_the_accelerated_limit() {
    // sum_{n>=0} 2/(n+1)^3 = 2 zeta(3): partial sums straddle 2 * 1.2020569...
    let c = Catalog::bundled();
    let lhs = c.series("lhs_s1").unwrap();
    let partial = lhs.partial_sum(999).unwrap();
    let two_zeta = q(big(24041138063191885), BigInt::from(10).pow(16));
    let tail = tail_bound(lhs, 1000).unwrap().bound;
    assert!(partial < two_zeta);
    assert!(&partial + &tail > two_zeta);
}

#[test]
fn grid_and_symbolic_agree_on_catalog_pairs() {
    let c = Catalog::bundled();
    for p in c.pairs() {
        assert_eq!(verify_grid(p, 25).unwrap().passed(), verify_symbolic(p).unwrap().passed());
    }
}

#[test]
fn s2_certificate_perturbation_breaks_both_checks() {
    let c = Catalog::bundled();
    let mut p = c.pair("s2").unwrap().clone();
    p.g = p.g.scaled(&q(big(101), big(100)));
    assert!(!verify_grid(&p, 5).unwrap().passed());
    assert!(!verify_symbolic(&p).unwrap().passed());
}

#[test]
fn soundness_against_longer_reference_sums() {
    let c = Catalog::bundled();
    for s in c.zeta_series() {
        for digits in [10, 75, 200] {
            let r = sum_to_digits(s, digits, SumMode::Scaled).unwrap();
            let last = s.start + r.terms_used as i64 - 1;
            let reference = s.partial_sum(last + 400).unwrap();
            assert!((&reference - &r.partial_sum).abs() <= r.error_bound(), "{} {digits}", s.name);
        }
    }
}

#[test]
fn pairwise_comparisons() {
    let c = Catalog::bundled();
    let s1 = c.series("s1").unwrap();
    assert_eq!(compare_series(s1, c.series("s2").unwrap(), 100).unwrap(), 100);
    assert_eq!(compare_series(s1, c.series("s3").unwrap(), 100).unwrap(), 100);
}
