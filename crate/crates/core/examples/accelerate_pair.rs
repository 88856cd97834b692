//! Applies the acceleration transform to a WZ pair and compares both sides.
//!
//!     cargo run --example accelerate_pair -- s2

use num_traits::Signed;
use zeta3::catalog::Catalog;
use zeta3::numeric::{format_rational, truncated_decimal};
use zeta3::precision::tail_bound;
use zeta3::wz::{accelerate, lhs_series};

fn main() -> Result<(), zeta3::Error> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "s1".into());
    let catalog = Catalog::bundled();
    let pair = catalog.pair(&name)?;
    let accel = accelerate(pair)?;
    let shipped = catalog.series(&name)?;

    println!("  n  b_n = F(n,n-1) + G(n-1,n-1)        b_n / shipped term");
    for n in 1..=8 {
        let b = accel.term_at(n)?;
        let ratio = &b / shipped.term_at(n)?;
        println!("{n:>3}  {:<34} {}", format_rational(&b), format_rational(&ratio));
    }

    let lhs = lhs_series(pair)?;
    let left = lhs.partial_sum(299)?;
    let right = accel.partial_sum(50)?;
    let bound = tail_bound(&lhs, 300)?.bound + tail_bound(&accel, 51)?.bound;
    println!("\nsum_(n<300) G(n,0)       = {}", truncated_decimal(&left, 25));
    println!("sum_(n<=50) b_n          = {}", truncated_decimal(&right, 25));
    println!(
        "|difference| <= bound    : {}",
        (&left - &right).abs() <= bound
    );
    Ok(())
}
