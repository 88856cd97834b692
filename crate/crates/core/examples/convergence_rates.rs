//! Digits gained per term for each shipped series, against the asymptotic
//! values log10(4), log10(27), log10(64).

use zeta3::catalog::Catalog;
use zeta3::precision::measure_rate;

fn main() -> Result<(), zeta3::Error> {
    let catalog = Catalog::bundled();
    for (name, base) in [("s1", 4f64), ("s2", 27.0), ("s3", 64.0)] {
        let series = catalog.series(name)?;
        let fitted = measure_rate(series, 100, 200)?;
        let far = measure_rate(series, 2000, 2100)?;
        println!(
            "{name}: {fitted:.4} digits/term on [100,200], {far:.4} on [2000,2100], limit {:.4}",
            base.log10()
        );
    }
    Ok(())
}
