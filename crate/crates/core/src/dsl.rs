//! Plain-text term language.
//!
//! ```text
//! expr    := factor { ("*" | "/") factor }
//! factor  := base [ "!" ] [ "^" exponent ]
//! base    := uint | var | "(" sum ")"
//! sum     := [ "+" | "-" ] product { ("+" | "-") product }     (inside parentheses)
//! product := factor { [ "*" | "/" ] factor }                    (juxtaposition allowed)
//! exponent:= [ "-" ] uint | var | "(" sum ")"
//! var     := "n" | "k"
//! ```
//!
//! At the top level only explicit `*` and `/` join factors, so `2n` must be
//! written `2*n` there; inside parentheses conventional algebraic notation such
//! as `(56n^2-32n+5)` is accepted. A `!` may follow a bare variable only at the
//! top level, and otherwise must follow a parenthesized linear form. A power
//! whose exponent is not an integer must have base `(-1)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::term::{HyperTerm, LinearForm, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(char),
    LParen,
    RParen,
    Star,
    Slash,
    Caret,
    Bang,
    Plus,
    Minus,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("integer `{v}`"),
            Tok::Var(c) => format!("`{c}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = src[start..i].parse().expect("ascii digits");
                out.push((start, Tok::Int(v)));
                continue;
            }
            b'n' | b'k' => Tok::Var(c as char),
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'!' => Tok::Bang,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            _ => {
                let found = src[i..].chars().next().unwrap();
                return Err(Error::Parse {
                    offset: i,
                    expected: vec!["a term token".into()],
                    found: format!("`{found}`"),
                });
            }
        };
        out.push((i, tok));
        i += 1;
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

/// A parsed value that is a plain polynomial `scale * poly`, if it is one.
fn as_polynomial(t: &HyperTerm) -> Option<(BigRational, Polynomial)> {
    let sign = t.sign_exponent();
    if sign.a != 0 || sign.b != 0 || !t.factorials().is_empty() || !t.poly_denominator().is_one() {
        return None;
    }
    let mut c = t.constant_factor().clone();
    if sign.c == 1 {
        c = -c;
    }
    Some((c, t.poly_numerator().clone()))
}

fn structure(offset: usize, message: impl Into<String>) -> Error {
    Error::Structure {
        offset,
        message: message.into(),
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> Error {
        Error::Parse {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        }
    }

    fn expr(&mut self) -> Result<HyperTerm> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.product(&self.factor()?);
                }
                Tok::Slash => {
                    self.bump();
                    let off = self.offset();
                    acc = self.divide(acc, off)?;
                }
                Tok::End => return Ok(acc),
                _ => return Err(self.unexpected(&["`*`", "`/`", "end of input"])),
            }
        }
    }

    fn divide(&mut self, acc: HyperTerm, off: usize) -> Result<HyperTerm> {
        let divisor = self.factor()?;
        let inv = divisor
            .reciprocal()
            .ok_or_else(|| structure(off, "division by zero"))?;
        Ok(acc.product(&inv))
    }

    fn sum(&mut self) -> Result<HyperTerm> {
        let mut negate = false;
        match self.peek() {
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.product()?;
        if negate {
            acc = acc.scaled(&-BigRational::one());
        }
        loop {
            let sign = match self.peek() {
                Tok::Plus => BigRational::one(),
                Tok::Minus => -BigRational::one(),
                _ => return Ok(acc),
            };
            let (op_off, _) = self.bump();
            let rhs = self.product()?.scaled(&sign);
            acc = add_polynomials(&acc, &rhs).ok_or_else(|| {
                structure(op_off, "only polynomials in n and k may be added or subtracted")
            })?;
        }
    }

    fn product(&mut self) -> Result<HyperTerm> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.product(&self.factor()?);
                }
                Tok::Slash => {
                    self.bump();
                    let off = self.offset();
                    acc = self.divide(acc, off)?;
                }
                Tok::Int(_) | Tok::Var(_) | Tok::LParen => {
                    acc = acc.product(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<HyperTerm> {
        let (base, is_var, grouped) = match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                (HyperTerm::constant(BigRational::from_integer(v)), false, false)
            }
            Tok::Var(c) => {
                self.bump();
                (var_term(c), true, false)
            }
            Tok::LParen => {
                self.bump();
                (self.group()?, false, true)
            }
            _ => return Err(self.unexpected(&["integer", "`n`", "`k`", "`(`"])),
        };

        let mut value = base;
        if *self.peek() == Tok::Bang && (grouped || (is_var && self.depth == 0)) {
            let (bang_off, _) = self.bump();
            let form = linear_form_of(&value)
                .ok_or_else(|| structure(bang_off, "factorial argument must be an integer linear form in n and k"))?;
            value = HyperTerm::one().with_factorial(form, 1);
        }

        if *self.peek() == Tok::Caret {
            let (caret_off, _) = self.bump();
            value = self.power(value, caret_off)?;
        }
        Ok(value)
    }

    /// Parses the inside of a parenthesized group; the `(` is already consumed.
    fn group(&mut self) -> Result<HyperTerm> {
        self.depth += 1;
        let inner = self.sum()?;
        if *self.peek() != Tok::RParen {
            return Err(self.unexpected(&["`*`", "`/`", "`+`", "`-`", "`)`"]));
        }
        self.bump();
        self.depth -= 1;
        Ok(inner)
    }

    fn power(&mut self, base: HyperTerm, caret_off: usize) -> Result<HyperTerm> {
        let exponent = match self.peek().clone() {
            Tok::Minus => {
                self.bump();
                match self.peek().clone() {
                    Tok::Int(v) => {
                        self.bump();
                        Exponent::Integer(-v)
                    }
                    _ => return Err(self.unexpected(&["integer"])),
                }
            }
            Tok::Int(v) => {
                self.bump();
                Exponent::Integer(v)
            }
            Tok::Var(c) => {
                self.bump();
                Exponent::Linear(if c == 'n' { LinearForm::n() } else { LinearForm::k() })
            }
            Tok::LParen => {
                let group_off = self.offset();
                self.bump();
                let inner = self.group()?;
                let form = linear_form_of(&inner)
                    .ok_or_else(|| structure(group_off, "exponent must be an integer linear form"))?;
                if form.is_constant() {
                    Exponent::Integer(BigInt::from(form.c))
                } else {
                    Exponent::Linear(form)
                }
            }
            _ => return Err(self.unexpected(&["integer", "`-`", "`n`", "`k`", "`(`"])),
        };
        match exponent {
            Exponent::Integer(e) => {
                let e: i32 = e
                    .try_into()
                    .map_err(|_| structure(caret_off, "exponent out of range"))?;
                power_term(&base, e).ok_or_else(|| structure(caret_off, "zero raised to a negative power"))
            }
            Exponent::Linear(form) => {
                let is_minus_one = as_polynomial(&base)
                    .is_some_and(|(c, p)| p.is_one() && c == -BigRational::one());
                if !is_minus_one {
                    return Err(structure(caret_off, "only (-1) may be raised to a symbolic power"));
                }
                Ok(HyperTerm::one().with_sign(form))
            }
        }
    }
}

enum Exponent {
    Integer(BigInt),
    Linear(LinearForm),
}

fn var_term(c: char) -> HyperTerm {
    HyperTerm::one().times_poly(if c == 'n' { Polynomial::n() } else { Polynomial::k() })
}

fn linear_form_of(t: &HyperTerm) -> Option<LinearForm> {
    let (c, p) = as_polynomial(t)?;
    if !c.is_integer() {
        return None;
    }
    p.scale(c.numer()).as_linear()
}

fn add_polynomials(a: &HyperTerm, b: &HyperTerm) -> Option<HyperTerm> {
    let (ca, pa) = as_polynomial(a)?;
    let (cb, pb) = as_polynomial(b)?;
    let l = ca.denom().lcm(cb.denom());
    let sa = (&ca * BigRational::from_integer(l.clone())).to_integer();
    let sb = (&cb * BigRational::from_integer(l.clone())).to_integer();
    let sum = pa.scale(&sa) + pb.scale(&sb);
    Some(HyperTerm::from_parts(
        LinearForm::constant(0),
        [],
        sum,
        Polynomial::one(),
        BigRational::new(BigInt::one(), l),
    ))
}

fn power_term(base: &HyperTerm, e: i32) -> Option<HyperTerm> {
    let b = if e < 0 { base.reciprocal()? } else { base.clone() };
    let e = e.unsigned_abs();
    let sign = b.sign_exponent();
    let m = e as i64;
    Some(HyperTerm::from_parts(
        LinearForm::new(sign.a * m, sign.b * m, sign.c * m),
        b.factorials().iter().map(|&(l, x)| (l, x * e as i32)),
        b.poly_numerator().pow(e),
        b.poly_denominator().pow(e),
        crate::numeric::pow_rational(b.constant_factor(), e as i32),
    ))
}

/// Parses one expression into a hypergeometric term.
pub fn parse_term(src: &str) -> Result<HyperTerm> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        depth: 0,
    };
    p.expr()
}

fn factorial_text(l: &LinearForm, e: i32) -> String {
    let arg = if *l == LinearForm::n() || *l == LinearForm::k() {
        l.to_string()
    } else {
        format!("({l})")
    };
    match e.unsigned_abs() {
        1 => format!("{arg}!"),
        m => format!("{arg}!^{m}"),
    }
}

/// Renders a term back into the DSL; `parse_term(&render_term(t))` evaluates like `t`.
pub fn render_term(t: &HyperTerm) -> String {
    let mut top: Vec<String> = Vec::new();
    let mut bottom: Vec<String> = Vec::new();
    let c = t.constant_factor();
    if c.is_zero() {
        return "0".into();
    }
    let numer = c.numer();
    if numer.is_negative() {
        top.push(format!("({numer})"));
    } else if !numer.is_one() {
        top.push(numer.to_string());
    }
    if !c.denom().is_one() {
        bottom.push(c.denom().to_string());
    }
    let sign = t.sign_exponent();
    if sign != LinearForm::constant(0) {
        if sign == LinearForm::n() || sign == LinearForm::k() {
            top.push(format!("(-1)^{sign}"));
        } else {
            top.push(format!("(-1)^({sign})"));
        }
    }
    for &(l, e) in t.factorials() {
        if e > 0 {
            top.push(factorial_text(&l, e));
        } else {
            bottom.push(factorial_text(&l, e));
        }
    }
    if !t.poly_numerator().is_one() {
        top.push(format!("({})", t.poly_numerator()));
    }
    if !t.poly_denominator().is_one() {
        bottom.push(format!("({})", t.poly_denominator()));
    }
    let mut out = if top.is_empty() { "1".to_string() } else { top.join(" * ") };
    for d in bottom {
        out.push_str(" / ");
        out.push_str(&d);
    }
    out
}

/// Parses `name = expr` definitions, one per line; `#` starts a comment.
pub fn parse_definitions(text: &str) -> Result<Vec<(String, HyperTerm)>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (name, expr) = line
            .split_once('=')
            .ok_or_else(|| Error::Catalog(format!("line {}: expected `name = expression`", lineno + 1)))?;
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::Catalog(format!("line {}: invalid name `{name}`", lineno + 1)));
        }
        let term = parse_term(expr).map_err(|e| Error::Catalog(format!("line {}: {e}", lineno + 1)))?;
        out.push((name.to_string(), term));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn parses_family_f_for_s1() {
        let f = parse_term("(-1)^k * k!^2 * (n-k-1)! / ((n+k+1)! * (k+1))").unwrap();
        assert_eq!(f.eval_exact(1, 0).unwrap(), rat(1, 2));
        assert_eq!(f.eval_exact(2, 1).unwrap(), rat(-1, 48));
    }

    #[test]
    fn constant_term() {
        let t = parse_term("7").unwrap();
        for (n, k) in [(0, 0), (5, 3), (-2, 9)] {
            assert_eq!(t.eval_exact(n, k).unwrap(), rat(7, 1));
        }
        assert_eq!(render_term(&t), "7");
    }

    #[test]
    fn unclosed_group_reports_offset() {
        match parse_term("(n-k!") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn implicit_multiplication_only_inside_parentheses() {
        assert!(matches!(parse_term("2n"), Err(Error::Parse { offset: 1, .. })));
        let t = parse_term("(2n)").unwrap();
        assert_eq!(t.eval_exact(3, 0).unwrap(), rat(6, 1));
        let p = parse_term("(56n^2-32n+5)").unwrap();
        assert_eq!(p.eval_exact(1, 0).unwrap(), rat(29, 1));
        assert_eq!(p.eval_exact(2, 0).unwrap(), rat(165, 1));
    }

    #[test]
    fn operator_precedence_and_associativity() {
        // left-associative: 12 / 2 * 3 = 18
        assert_eq!(parse_term("12 / 2 * 3").unwrap().eval_exact(0, 0).unwrap(), rat(18, 1));
        // '^' binds tighter than '*'
        assert_eq!(parse_term("2 * n^2").unwrap().eval_exact(3, 0).unwrap(), rat(18, 1));
        assert_eq!(parse_term("(-k^2+1)").unwrap().eval_exact(0, 3).unwrap(), rat(-8, 1));
        assert_eq!(parse_term("5/2").unwrap().eval_exact(0, 0).unwrap(), rat(5, 2));
        assert_eq!(parse_term("(n+1)^-2").unwrap().eval_exact(1, 0).unwrap(), rat(1, 4));
    }

    #[test]
    fn symbolic_sign_powers() {
        let t = parse_term("(-1)^(n-1)").unwrap();
        assert_eq!(t.eval_exact(1, 0).unwrap(), rat(1, 1));
        assert_eq!(t.eval_exact(2, 0).unwrap(), rat(-1, 1));
        assert_eq!(parse_term("(-1)^2").unwrap().eval_exact(0, 0).unwrap(), rat(1, 1));
        assert!(matches!(parse_term("2^n"), Err(Error::Structure { offset: 1, .. })));
    }

    #[test]
    fn structure_errors() {
        assert!(matches!(parse_term("(n^2)!"), Err(Error::Structure { .. })));
        assert!(matches!(parse_term("(n! + 1)"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_term("((n)! + 1)"), Err(Error::Structure { .. })));
        assert!(matches!(parse_term("1/0"), Err(Error::Structure { .. })));
        assert!(matches!(parse_term("(n/2)!"), Err(Error::Structure { .. })));
    }

    #[test]
    fn parse_errors_stay_inside_the_input() {
        for bad in ["", "(", "n *", "(n+", "n^", "x", "n ** k", ")", "(-1)^", "k!!"] {
            match parse_term(bad) {
                Err(Error::Parse { offset, .. }) => assert!(offset <= bad.len(), "{bad:?}"),
                other => panic!("{bad:?}: expected parse error, got {other:?}"),
            }
        }
    }

    #[test]
    fn render_uses_explicit_products() {
        let g2 = parse_term(
            "(-1)^k * k!^2 * (2n-k)! * (3+4n) * (4n^2+6n+k+3) / (2 * (2n+k+2)! * (n+1)^2 * (2n+1)^2)",
        )
        .unwrap();
        let text = render_term(&g2);
        assert!(text.contains("(2*n-k)!"), "{text}");
        let back = parse_term(&text).unwrap();
        for n in 0..6 {
            for k in 0..=2 * n {
                assert_eq!(back.eval_exact(n, k).unwrap(), g2.eval_exact(n, k).unwrap());
            }
        }
    }

    #[test]
    fn definitions_file() {
        let defs = parse_definitions("# comment\n\nf = 5/2 * n  # trailing\ng=k\n").unwrap();
        assert_eq!(defs.len(), 2);
        assert_eq!(defs[0].0, "f");
        assert_eq!(defs[0].1.eval_exact(2, 0).unwrap(), rat(5, 1));
        assert!(matches!(parse_definitions("f 5"), Err(Error::Catalog(_))));
        assert!(matches!(parse_definitions("f = (n"), Err(Error::Catalog(_))));
    }
}
