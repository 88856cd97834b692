//! Checks both shipped WZ pairs on a grid, then proves them via their certificates.

use zeta3::catalog::Catalog;
use zeta3::wz::{verify_grid, verify_symbolic};

fn main() -> Result<(), zeta3::Error> {
    let catalog = Catalog::bundled();
    for pair in catalog.pairs() {
        let grid = verify_grid(pair, 60)?;
        println!("pair {} (s={}): {grid}", pair.name, pair.s);
        let proof = verify_symbolic(pair)?;
        let (dn, dk) = proof.degree_bound.unwrap_or_default();
        println!(
            "  symbolic: {} on a {}x{} grid",
            if proof.passed() { "proved" } else { "FAILED" },
            dn + 1,
            dk + 1
        );
        if let Some(r) = &proof.certificate {
            println!("  G/F = {r}");
        }
    }
    Ok(())
}
