use super::{HyperTerm, LinearForm};
use crate::error::{Error, Result};

/// Region `n >= n_min` with every constraint `L(n, k) >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domain {
    pub n_min: i64,
    pub constraints: Vec<LinearForm>,
}

impl Domain {
    pub fn new(n_min: i64, constraints: Vec<LinearForm>) -> Self {
        Domain { n_min, constraints }
    }

    /// One-variable domain: `n >= n_min`, `k = 0`.
    pub fn univariate(n_min: i64) -> Self {
        Domain::new(n_min, vec![LinearForm::k(), LinearForm::new(0, -1, 0)])
    }

    /// `n >= n_min`, `0 <= k <= s*n - 1`.
    pub fn triangle(n_min: i64, s: i64) -> Self {
        Domain::new(n_min, vec![LinearForm::k(), LinearForm::new(s, -1, -1)])
    }

    pub fn contains(&self, n: i64, k: i64) -> bool {
        n >= self.n_min && self.constraints.iter().all(|l| l.eval(n, k) >= 0)
    }

    /// The admissible `k` range for a fixed `n`, or `None` if empty.
    fn k_range(&self, n: i64) -> Result<Option<(i64, i64)>> {
        let mut lo: Option<i64> = None;
        let mut hi: Option<i64> = None;
        for l in &self.constraints {
            let rest = l.a * n + l.c;
            match l.b {
                0 if rest < 0 => return Ok(None),
                0 => {}
                b if b > 0 => {
                    let bound = (-rest).div_euclid(b) + i64::from((-rest).rem_euclid(b) != 0);
                    lo = Some(lo.map_or(bound, |v| v.max(bound)));
                }
                b => {
                    let bound = rest.div_euclid(-b);
                    hi = Some(hi.map_or(bound, |v| v.min(bound)));
                }
            }
        }
        match (lo, hi) {
            (Some(lo), Some(hi)) => Ok((lo <= hi).then_some((lo, hi))),
            _ => Err(Error::InvalidArgument(format!(
                "domain is unbounded in k at n={n}"
            ))),
        }
    }

    /// Every lattice point with `n_min <= n <= n_max`, in `(n, k)` order.
    pub fn points(&self, n_max: i64) -> Result<Vec<(i64, i64)>> {
        let mut out = Vec::new();
        for n in self.n_min..=n_max {
            if let Some((lo, hi)) = self.k_range(n)? {
                out.extend((lo..=hi).map(|k| (n, k)));
            }
        }
        Ok(out)
    }

    pub fn is_empty_up_to(&self, n_max: i64) -> Result<bool> {
        Ok(self.points(n_max)?.is_empty())
    }

    /// Checks that `term`, shifted by `(dn, dk)`, has nonnegative factorial
    /// arguments at every point of this domain up to `n_max`.
    pub fn admits(&self, term: &HyperTerm, dn: i64, dk: i64, n_max: i64) -> Result<()> {
        for (n, k) in self.points(n_max)? {
            for l in term.factorial_arguments() {
                let v = l.eval(n + dn, k + dk);
                if v < 0 {
                    return Err(Error::domain(
                        n + dn,
                        k + dk,
                        format!("factorial argument {l} = {v} is negative inside the declared domain"),
                    ));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_points() {
        let d = Domain::triangle(1, 1);
        assert_eq!(d.points(3).unwrap(), vec![(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)]);
        assert_eq!(Domain::triangle(1, 2).points(60).unwrap().len(), (1..=60).map(|n| 2 * n).sum::<usize>());
        assert!(d.contains(5, 4));
        assert!(!d.contains(5, 5));
        assert!(!d.contains(0, 0));
    }

    #[test]
    fn univariate_points_fix_k() {
        assert_eq!(Domain::univariate(0).points(2).unwrap(), vec![(0, 0), (1, 0), (2, 0)]);
    }

    #[test]
    fn unbounded_domain_is_rejected() {
        let d = Domain::new(0, vec![LinearForm::k()]);
        assert!(d.points(3).is_err());
    }
}
