use std::fmt;

/// Integer-linear form `a*n + b*k + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl LinearForm {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        LinearForm { a, b, c }
    }

    pub const fn constant(c: i64) -> Self {
        LinearForm { a: 0, b: 0, c }
    }

    pub const fn n() -> Self {
        LinearForm { a: 1, b: 0, c: 0 }
    }

    pub const fn k() -> Self {
        LinearForm { a: 0, b: 1, c: 0 }
    }

    pub fn eval(&self, n: i64, k: i64) -> i64 {
        self.a * n + self.b * k + self.c
    }

    /// The form obtained by substituting `n -> n + dn`, `k -> k + dk`.
    pub fn shifted(&self, dn: i64, dk: i64) -> Self {
        LinearForm {
            c: self.c + self.a * dn + self.b * dk,
            ..*self
        }
    }

    pub fn offset(&self, m: i64) -> Self {
        LinearForm {
            c: self.c + m,
            ..*self
        }
    }

    /// Substitutes `k -> value`, leaving a form in `n` only.
    pub fn with_k(&self, value: i64) -> Self {
        LinearForm {
            a: self.a,
            b: 0,
            c: self.c + self.b * value,
        }
    }

    /// The `(a, b)` direction; two forms differ by an integer iff directions match.
    pub fn direction(&self) -> (i64, i64) {
        (self.a, self.b)
    }

    pub fn is_constant(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl std::ops::Sub for LinearForm {
    type Output = LinearForm;
    fn sub(self, rhs: Self) -> Self {
        LinearForm::new(self.a - rhs.a, self.b - rhs.b, self.c - rhs.c)
    }
}

impl std::ops::Add for LinearForm {
    type Output = LinearForm;
    fn add(self, rhs: Self) -> Self {
        LinearForm::new(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, coeff: i64, var: &str, first: bool) -> fmt::Result {
    if coeff == 0 {
        return Ok(());
    }
    if coeff < 0 {
        f.write_str("-")?;
    } else if !first {
        f.write_str("+")?;
    }
    match coeff.unsigned_abs() {
        1 => f.write_str(var),
        m => write!(f, "{m}*{var}"),
    }
}

/// Renders in DSL syntax, e.g. `2*n-k-1`.
impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if self.a != 0 {
            write_monomial(f, self.a, "n", first)?;
            first = false;
        }
        if self.b != 0 {
            write_monomial(f, self.b, "k", first)?;
            first = false;
        }
        if self.c != 0 || first {
            if self.c >= 0 && !first {
                f.write_str("+")?;
            }
            write!(f, "{}", self.c)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_dsl_syntax() {
        assert_eq!(LinearForm::new(2, -1, 0).to_string(), "2*n-k");
        assert_eq!(LinearForm::new(1, -1, -1).to_string(), "n-k-1");
        assert_eq!(LinearForm::new(0, 1, 0).to_string(), "k");
        assert_eq!(LinearForm::new(0, -1, 3).to_string(), "-k+3");
        assert_eq!(LinearForm::constant(0).to_string(), "0");
        assert_eq!(LinearForm::constant(-4).to_string(), "-4");
    }

    #[test]
    fn shifting_moves_only_the_constant() {
        let l = LinearForm::new(2, -1, -1);
        assert_eq!(l.shifted(1, 0), LinearForm::new(2, -1, 1));
        assert_eq!(l.shifted(0, 1), LinearForm::new(2, -1, -2));
        assert_eq!(l.with_k(0), LinearForm::new(2, 0, -1));
        assert_eq!(l.shifted(3, 2).eval(4, 5), l.eval(7, 7));
    }
}
