//! Certified digits of zeta(3) from each shipped series.
//!
//!     cargo run --release --example zeta3_digits -- 500

use std::time::Instant;

use zeta3::catalog::Catalog;
use zeta3::precision::{sum_to_digits, SumMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let digits: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(100);
    let catalog = Catalog::bundled();
    for series in catalog.zeta_series() {
        let started = Instant::now();
        let report = sum_to_digits(series, digits, SumMode::Scaled)?;
        println!(
            "{:>3}: {} terms, {} certified digits, {:.2?}",
            series.name,
            report.terms_used,
            report.certified_digits,
            started.elapsed()
        );
    }
    let best = sum_to_digits(catalog.series("s3")?, digits, SumMode::Exact)?;
    println!("\n{}", best.decimal);
    Ok(())
}
