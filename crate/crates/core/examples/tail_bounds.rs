//! Error accounting behind certification: tail bounds and their certificates.

use zeta3::catalog::Catalog;
use zeta3::numeric::{log10_abs, truncated_decimal};
use zeta3::precision::{sum_to_digits, tail_bound, SumMode};

fn main() -> Result<(), zeta3::Error> {
    let catalog = Catalog::bundled();
    for series in catalog.all_series() {
        let tb = tail_bound(series, series.start + 20)?;
        println!(
            "{:>7}: tail from n={} <= 10^{:.1} ({:?})",
            series.name,
            series.start + 20,
            log10_abs(&tb.bound),
            tb.method
        );
    }

    let s1 = catalog.series("s1")?;
    for n in [2, 5, 10] {
        let partial = s1.partial_sum(n)?;
        let next = s1.term_at(n + 1)?;
        println!(
            "\nS_{n} = {}, first omitted term {}",
            truncated_decimal(&partial, 12),
            truncated_decimal(&next, 12)
        );
    }
    let report = sum_to_digits(s1, 30, SumMode::Scaled)?;
    println!("\n{report}");
    Ok(())
}
