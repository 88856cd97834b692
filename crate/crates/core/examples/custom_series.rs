//! Defines terms in the text DSL: the s=3 member of the F family, and a
//! user series summed with certified digits.

use num_rational::BigRational;
use zeta3::dsl::{parse_term, render_term};
use zeta3::precision::{sum_to_digits, SumMode};
use zeta3::series::SeriesSpec;

fn main() -> Result<(), zeta3::Error> {
    let f3 = parse_term("(-1)^k * k!^2 * (3n-k-1)! / ((3n+k+1)! * (k+1))")?;
    println!("F(s=3)      = {}", render_term(&f3));
    println!("F(s=3)(2,1) = {}", f3.eval_exact(2, 1)?);
    println!("F(n+1,k)/F  = {}", f3.shift_ratio(1, 0));

    // sum_{n>=1} (-1)^(n-1)/n^3 = (3/4) zeta(3)
    let eta = parse_term("(-1)^(n-1) / (n^3)")?;
    let series = SeriesSpec::hypergeometric("eta3", 1, eta, Some(BigRational::new(3.into(), 4.into())), 0.0)?;
    let report = sum_to_digits(&series, 4, SumMode::Exact)?;
    println!("\n{report}");
    Ok(())
}
