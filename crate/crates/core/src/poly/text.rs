//! Text form of polynomials.
//!
//! Grammar: terms joined by `+` / `-`, each term a product of an optional
//! rational or interval coefficient and variable powers, e.g.
//! `3*x^2*y - 1/2*y + 4` or `[-1,2)*x*y + [0,1)*y + [3,5)`. Exact
//! polynomial lines also accept parenthesized coefficient expressions
//! such as `(1/2 - 1/2*h)*x^5`, which are expanded on parse.

use super::{IntervalPolynomial, Monomial, MonomialOrder, ParamPolynomial, PolyError, Polynomial, Rat, Ring};
use crate::interval::text::{parse_interval, parse_rational};
use crate::interval::Interval;
use num::One;
use std::fmt;

fn format_terms(
    f: &mut fmt::Formatter<'_>,
    terms: &[(String, String)], // (coefficient text, monomial text); coefficient "" means 1
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (coef, mono)) in terms.iter().enumerate() {
        let (sign, coef_body) = match coef.strip_prefix('-') {
            Some(body) => ("-", body),
            None => ("+", coef.as_str()),
        };
        if i == 0 {
            if sign == "-" {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", sign)?;
        }
        match (coef_body, mono.as_str()) {
            ("1", "") => write!(f, "1")?,
            ("1", m) => write!(f, "{}", m)?,
            (c, "") => write!(f, "{}", c)?,
            (c, m) => write!(f, "{}*{}", c, m)?,
        }
    }
    Ok(())
}

pub(crate) fn monomial_text(m: &Monomial, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    parts.join("*")
}

impl Polynomial {
    /// Renders with terms descending under `order`.
    pub fn render(&self, order: &MonomialOrder) -> String {
        let terms: Vec<(String, String)> = self
            .sorted_terms(order)
            .into_iter()
            .map(|(m, c)| (c.to_string(), monomial_text(m, self.ring().vars())))
            .collect();
        DisplayTerms(terms).to_string()
    }
}

struct DisplayTerms(Vec<(String, String)>);

impl fmt::Display for DisplayTerms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(f, &self.0)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, String)> = self
            .terms()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .map(|(m, c)| (c.to_string(), monomial_text(m, self.ring().vars())))
            .collect();
        format_terms(f, &terms)
    }
}

impl fmt::Display for ParamPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(String, String)> = Vec::new();
        for (m, coef) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let mono = monomial_text(m, self.x_ring().vars());
            if let Some(c) = coef.as_constant() {
                terms.push((c.to_string(), mono));
            } else if coef.n_terms() == 1 {
                let (pm, pc) = coef.terms().next().unwrap();
                let coef_text = if pc.is_one() {
                    monomial_text(pm, self.param_ring().vars())
                } else if (-pc).is_one() {
                    format!("-{}", monomial_text(pm, self.param_ring().vars()))
                } else {
                    format!("{}*{}", pc, monomial_text(pm, self.param_ring().vars()))
                };
                terms.push((coef_text, mono));
            } else {
                terms.push((format!("({})", coef), mono));
            }
        }
        format_terms(f, &terms)
    }
}

impl fmt::Display for IntervalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, String)> = self
            .terms()
            .map(|(m, iv)| {
                let mono = monomial_text(m, self.ring().vars());
                match iv.as_point() {
                    Some(q) => (q.to_string(), mono),
                    None => (iv.to_string(), mono),
                }
            })
            .collect();
        format_terms(f, &terms)
    }
}

/// Parses an exact polynomial expression over the ring's variables.
/// Supports `+ - * ^ ( )`, rational literals and variable names.
pub fn parse_polynomial(input: &str, ring: &Ring) -> Result<Polynomial, PolyError> {
    let mut p = ExprParser::new(input, ring);
    let poly = p.parse_expr()?;
    p.expect_end()?;
    Ok(poly)
}

/// Parses an interval polynomial: a sum of terms whose coefficients are
/// interval literals or rationals.
pub fn parse_interval_polynomial(
    input: &str,
    ring: &Ring,
) -> Result<IntervalPolynomial, PolyError> {
    let mut out = IntervalPolynomial::zero(ring);
    let mut rest = input.trim();
    let mut first = true;
    let mut col = input.len() - rest.len();
    while !rest.is_empty() {
        let mut negate = false;
        if let Some(r) = rest.strip_prefix('+') {
            if first {
                return Err(parse_err(col, "unexpected '+'"));
            }
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('-') {
            negate = true;
            rest = r.trim_start();
        } else if !first {
            return Err(parse_err(col, "expected '+' or '-' between terms"));
        }
        first = false;
        col = input.len() - rest.len();
        let (iv, mono, r) = parse_interval_term(rest, ring, col)?;
        let iv = if negate { iv.neg() } else { iv };
        merge_interval_term(&mut out, mono, iv, col)?;
        rest = r.trim_start();
        col = input.len() - rest.len();
    }
    Ok(out)
}

fn merge_interval_term(
    out: &mut IntervalPolynomial,
    mono: Monomial,
    iv: Interval,
    col: usize,
) -> Result<(), PolyError> {
    // Two exact terms on the same monomial add up; interval coefficients
    // must be unique per monomial.
    let existing = out.terms().find(|(m, _)| **m == mono).map(|(_, i)| i.clone());
    match existing {
        None => {
            out.add_term(mono, iv);
            Ok(())
        }
        Some(prev) => match (prev.as_point(), iv.as_point()) {
            (Some(a), Some(b)) => {
                out.add_term(mono, Interval::point(a + b));
                Ok(())
            }
            _ => Err(parse_err(col, "duplicate monomial with interval coefficient")),
        },
    }
}

fn parse_interval_term<'a>(
    s: &'a str,
    ring: &Ring,
    col: usize,
) -> Result<(Interval, Monomial, &'a str), PolyError> {
    let s = s.trim_start();
    // Coefficient: interval literal, rational literal, or implicit 1.
    let (iv, mut rest) = if s.starts_with('[') || looks_like_open_interval(s) {
        let (iv, r) = parse_interval(s).map_err(|e| parse_err(col, &e.to_string()))?;
        (iv, r)
    } else if let Some((q, r)) = parse_rational(s) {
        (Interval::point(q), r)
    } else {
        (Interval::point(Rat::one()), s)
    };
    rest = rest.trim_start();
    let mut mono = Monomial::one(ring.n_vars());
    let mut saw_star = false;
    loop {
        let r = rest.trim_start();
        if let Some(r2) = r.strip_prefix('*') {
            saw_star = true;
            rest = r2.trim_start();
            continue;
        }
        match parse_var_power(r, ring) {
            Some((i, e, r2)) => {
                let mut exps = mono.exponents().to_vec();
                exps[i] += e;
                mono = Monomial::new(exps);
                rest = r2;
                saw_star = false;
            }
            None => {
                if saw_star {
                    return Err(parse_err(col, "expected variable after '*'"));
                }
                break;
            }
        }
    }
    Ok((iv, mono, rest))
}

/// `(a, b]`-style interval openings are distinguished from parenthesized
/// expressions by the comma before the matching close.
fn looks_like_open_interval(s: &str) -> bool {
    if !s.starts_with('(') {
        return false;
    }
    let mut depth = 0usize;
    for c in s.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                if depth == 1 {
                    return false;
                }
                depth -= 1;
            }
            ',' if depth == 1 => return true,
            _ => {}
        }
    }
    false
}

fn parse_var_power<'a>(s: &'a str, ring: &Ring) -> Option<(usize, u32, &'a str)> {
    let (name, rest) = take_ident(s)?;
    let i = ring.index_of(name)?;
    let rest_trim = rest.trim_start();
    if let Some(r) = rest_trim.strip_prefix('^') {
        let r = r.trim_start();
        let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
        if end == 0 {
            return None;
        }
        let e: u32 = r[..end].parse().ok()?;
        Some((i, e, &r[end..]))
    } else {
        Some((i, 1, rest))
    }
}

fn take_ident(s: &str) -> Option<(&str, &str)> {
    let mut end = 0;
    for (i, c) in s.char_indices() {
        if (c.is_ascii_alphabetic() || c == '_') || (i > 0 && c.is_ascii_digit()) {
            end = i + c.len_utf8();
        } else {
            break;
        }
    }
    if end == 0 {
        None
    } else {
        Some((&s[..end], &s[end..]))
    }
}

fn parse_err(col: usize, message: &str) -> PolyError {
    PolyError::Parse {
        line: 1,
        col: col + 1,
        message: message.into(),
    }
}

struct ExprParser<'a> {
    input: &'a str,
    rest: &'a str,
    ring: &'a Ring,
}

impl<'a> ExprParser<'a> {
    fn new(input: &'a str, ring: &'a Ring) -> Self {
        ExprParser {
            input,
            rest: input,
            ring,
        }
    }

    fn col(&self) -> usize {
        self.input.len() - self.rest.len()
    }

    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if let Some(r) = self.rest.strip_prefix(c) {
            self.rest = r;
            true
        } else {
            false
        }
    }

    fn expect_end(&mut self) -> Result<(), PolyError> {
        self.skip_ws();
        if self.rest.is_empty() {
            Ok(())
        } else {
            Err(parse_err(self.col(), "unexpected trailing input"))
        }
    }

    fn parse_expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = if self.eat('-') {
            self.parse_product()?.neg()
        } else {
            self.parse_product()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.parse_product()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.parse_product()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_product(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.parse_power()?;
        loop {
            self.skip_ws();
            if self.eat('*') {
                acc = acc.mul(&self.parse_power()?);
            } else if self.rest.starts_with('(')
                || self
                    .rest
                    .chars()
                    .next()
                    .map_or(false, |c| c.is_ascii_alphabetic() || c == '_')
            {
                // Implicit product such as `2x` or `a(x+1)`.
                acc = acc.mul(&self.parse_power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.parse_atom()?;
        self.skip_ws();
        if self.eat('^') {
            self.skip_ws();
            let end = self
                .rest
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(self.rest.len());
            if end == 0 {
                return Err(parse_err(self.col(), "expected exponent"));
            }
            let e: u32 = self.rest[..end]
                .parse()
                .map_err(|_| parse_err(self.col(), "exponent out of range"))?;
            self.rest = &self.rest[end..];
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn parse_atom(&mut self) -> Result<Polynomial, PolyError> {
        self.skip_ws();
        if self.eat('(') {
            let inner = self.parse_expr()?;
            if !self.eat(')') {
                return Err(parse_err(self.col(), "expected ')'"));
            }
            return Ok(inner);
        }
        if let Some((q, rest)) = parse_rational(self.rest) {
            self.rest = rest;
            return Ok(Polynomial::constant(self.ring, q));
        }
        if let Some((name, rest)) = take_ident(self.rest) {
            match self.ring.index_of(name) {
                Some(i) => {
                    self.rest = rest;
                    return Ok(Polynomial::var(self.ring, i));
                }
                None => {
                    return Err(PolyError::UnknownVariable(name.to_string()));
                }
            }
        }
        Err(parse_err(self.col(), "expected a term"))
    }
}

/// Parses an exact polynomial over `[vars..., params...]` and splits it
/// into a parametric polynomial.
pub fn parse_param_polynomial(
    input: &str,
    x_ring: &Ring,
    p_ring: &Ring,
) -> Result<ParamPolynomial, PolyError> {
    let mut names: Vec<String> = x_ring.vars().to_vec();
    names.extend(p_ring.vars().iter().cloned());
    let combined = Ring::new(names);
    let poly = parse_polynomial(input, &combined)?;
    Ok(ParamPolynomial::from_combined(
        &poly,
        x_ring.n_vars(),
        x_ring,
        p_ring,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_display_round_trip() {
        let ring = Ring::new(vec!["x", "y"]);
        let f = parse_polynomial("3*x^2*y - 1/2*y + 4", &ring).unwrap();
        let shown = f.to_string();
        assert_eq!(parse_polynomial(&shown, &ring).unwrap(), f);
        assert_eq!(shown, "3*x^2*y - 1/2*y + 4");
    }

    #[test]
    fn expression_expansion() {
        let ring = Ring::new(vec!["x", "h"]);
        let f = parse_polynomial("(1/2 - 1/2*h)*x^5 + 1/2 - 3/4*h", &ring).unwrap();
        let g = parse_polynomial("1/2*x^5 - 1/2*h*x^5 - 3/4*h + 1/2", &ring).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn interval_polynomial_parse() {
        let ring = Ring::new(vec!["x", "y"]);
        let f = parse_interval_polynomial("[-1,2)*x*y + [0,1)*y + [3,5)", &ring).unwrap();
        assert_eq!(f.n_terms(), 3);
        let shown = f.to_string();
        assert_eq!(parse_interval_polynomial(&shown, &ring).unwrap(), f);
    }

    #[test]
    fn interval_polynomial_rejects_bad_interval() {
        let ring = Ring::new(vec!["x"]);
        assert!(parse_interval_polynomial("(3,1]*x", &ring).is_err());
        assert!(parse_interval_polynomial("[1,inf]*x", &ring).is_err());
    }

    #[test]
    fn unknown_variable_is_an_error() {
        let ring = Ring::new(vec!["x"]);
        assert!(matches!(
            parse_polynomial("x + z", &ring),
            Err(PolyError::UnknownVariable(v)) if v == "z"
        ));
    }
}
