//! Text grammar for polynomials and for linear/exterior combinations of
//! named basis symbols with polynomial coefficients.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (('*' | '^') power)*        '^' between symbols is a wedge
//! power  := atom ['^' INT]
//! atom   := INT ['/' INT] | IDENT | 'd/d' IDENT | '(' expr ')'
//! ```

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::chart::ChartRef;
use crate::exact::polynomial::Polynomial;
use crate::exact::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line: 0,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Int(s.parse().unwrap()), col));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            // `d/dx` is a single symbol naming a coordinate vector field.
            if c == 'd'
                && chars.get(i + 1) == Some(&'/')
                && chars.get(i + 2) == Some(&'d')
                && chars
                    .get(i + 3)
                    .is_some_and(|c| c.is_ascii_alphabetic() || *c == '_')
            {
                i += 3;
            }
            while i < chars.len()
                && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
            {
                i += 1;
            }
            // Trailing stars belong to the name (`e1*`) unless an operand
            // follows them, in which case the star is a product.
            let mut j = i;
            while j < chars.len() && chars[j] == '*' {
                j += 1;
            }
            if j > i {
                let mut k = j;
                while k < chars.len() && chars[k].is_whitespace() {
                    k += 1;
                }
                let operand = chars
                    .get(k)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_' || *c == '(');
                if !operand {
                    i = j;
                }
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Ident(s), col));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(err(col, format!("unexpected character `{other}`"))),
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

/// Words over basis symbols (in order of appearance) with polynomial
/// coefficients.
type Words = BTreeMap<Vec<usize>, Polynomial>;

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    chart: &'a ChartRef,
    basis: &'a [String],
    end_col: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end_col)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Words> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.pos += 1;
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        let mut acc = Words::new();
        let first = self.term()?;
        add_words(&mut acc, first, negate);
        loop {
            let neg = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => break,
            };
            self.pos += 1;
            let t = self.term()?;
            add_words(&mut acc, t, neg);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Words> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) | Some(Tok::Caret) => {
                    self.pos += 1;
                    let rhs = self.power()?;
                    acc = mul_words(&acc, &rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Words> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret)
            && matches!(self.toks.get(self.pos + 1), Some((Tok::Int(_), _)))
        {
            let col = self.col();
            self.pos += 1;
            let Some(Tok::Int(e)) = self.next() else {
                unreachable!()
            };
            let e: u32 = e
                .try_into()
                .map_err(|_| err(col, "exponent too large"))?;
            if base.keys().any(|w| !w.is_empty()) {
                if e == 1 {
                    return Ok(base);
                }
                return Err(err(col, "basis symbols cannot be raised to a power"));
            }
            let p = base
                .get(&Vec::new())
                .cloned()
                .unwrap_or_else(|| Polynomial::zero(self.chart));
            let mut w = Words::new();
            w.insert(Vec::new(), p.pow(e));
            return Ok(w);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Words> {
        let col = self.col();
        match self.next() {
            Some(Tok::Int(n)) => {
                let value = if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let dcol = self.col();
                    match self.next() {
                        Some(Tok::Int(d)) => {
                            Rational::from_big(n, d).map_err(|_| err(dcol, "zero denominator"))?
                        }
                        _ => return Err(err(dcol, "expected denominator")),
                    }
                } else {
                    Rational::from_big(n, BigInt::from(1)).unwrap()
                };
                let mut w = Words::new();
                w.insert(Vec::new(), Polynomial::constant(self.chart, value));
                Ok(w)
            }
            Some(Tok::Ident(name)) => {
                let mut w = Words::new();
                if let Some(i) = self.chart.index_of(&name) {
                    w.insert(Vec::new(), Polynomial::var_index(self.chart, i));
                } else if let Some(k) = self.basis.iter().position(|b| *b == name) {
                    w.insert(vec![k], Polynomial::one(self.chart));
                } else {
                    return Err(err(col, format!("unknown symbol `{name}`")));
                }
                Ok(w)
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let c = self.col();
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(err(c, "expected `)`")),
                }
            }
            Some(t) => Err(err(col, format!("unexpected token {t:?}"))),
            None => Err(err(col, "unexpected end of expression")),
        }
    }
}

fn add_words(acc: &mut Words, w: Words, negate: bool) {
    for (k, p) in w {
        let p = if negate { -&p } else { p };
        let sum = match acc.remove(&k) {
            Some(existing) => &existing + &p,
            None => p,
        };
        if !sum.is_zero() {
            acc.insert(k, sum);
        }
    }
}

fn mul_words(a: &Words, b: &Words) -> Words {
    let mut out = Words::new();
    for (wa, pa) in a {
        for (wb, pb) in b {
            let mut w = wa.clone();
            w.extend(wb);
            let mut single = Words::new();
            single.insert(w, pa * pb);
            add_words(&mut out, single, false);
        }
    }
    out
}

fn parse_words(text: &str, chart: &ChartRef, basis: &[String]) -> Result<Words> {
    let toks = lex(text)?;
    let end_col = text.chars().count() + 1;
    if toks.is_empty() {
        return Err(err(1, "empty expression"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        chart,
        basis,
        end_col,
    };
    let w = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(err(p.col(), "trailing input"));
    }
    Ok(w)
}

/// Sorts a word of basis indices, returning the sign of the permutation, or
/// `None` if an index repeats (the wedge vanishes).
pub fn sort_with_sign(word: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut w = word.to_vec();
    let mut sign = 1;
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        None
    } else {
        Some((w, sign))
    }
}

pub fn parse_polynomial(text: &str, chart: &ChartRef) -> Result<Polynomial> {
    let w = parse_words(text, chart, &[])?;
    Ok(w
        .get(&Vec::new())
        .cloned()
        .unwrap_or_else(|| Polynomial::zero(chart)))
}

/// Parses an element of the `degree`-th exterior power over `basis`; words
/// are antisymmetrized and keyed by strictly increasing index lists.
pub fn parse_exterior(
    text: &str,
    chart: &ChartRef,
    basis: &[String],
    degree: usize,
) -> Result<BTreeMap<Vec<usize>, Polynomial>> {
    let w = parse_words(text, chart, basis)?;
    let mut out: BTreeMap<Vec<usize>, Polynomial> = BTreeMap::new();
    for (word, coef) in w {
        if word.len() != degree {
            return Err(err(
                1,
                format!(
                    "expected terms with exactly {degree} basis symbol(s) from [{}]",
                    basis.join(", ")
                ),
            ));
        }
        if let Some((sorted, sign)) = sort_with_sign(&word) {
            let c = if sign < 0 { -&coef } else { coef };
            let sum = match out.remove(&sorted) {
                Some(e) => &e + &c,
                None => c,
            };
            if !sum.is_zero() {
                out.insert(sorted, sum);
            }
        }
    }
    Ok(out)
}

/// Parses `Σ coef * basis_k` into a dense coefficient vector.
pub fn parse_linear(text: &str, chart: &ChartRef, basis: &[String]) -> Result<Vec<Polynomial>> {
    // A bare `0` is accepted as the zero combination.
    if text.trim() == "0" {
        return Ok(vec![Polynomial::zero(chart); basis.len()]);
    }
    let ext = parse_exterior(text, chart, basis, 1)?;
    let mut v = vec![Polynomial::zero(chart); basis.len()];
    for (w, c) in ext {
        v[w[0]] = c;
    }
    Ok(v)
}

/// Prints a dense coefficient vector in the grammar accepted by
/// [`parse_linear`].
pub fn format_linear(coeffs: &[Polynomial], basis: &[String]) -> String {
    let words: Vec<(Vec<usize>, &Polynomial)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (vec![k], c))
        .collect();
    format_words(&words, basis, " ")
}

/// Prints a combination of basis words, wedged with `^`.
pub fn format_exterior(terms: &BTreeMap<Vec<usize>, Polynomial>, basis: &[String]) -> String {
    let words: Vec<(Vec<usize>, &Polynomial)> =
        terms.iter().filter(|(_, c)| !c.is_zero()).map(|(w, c)| (w.clone(), c)).collect();
    format_words(&words, basis, " ^ ")
}

fn format_words(words: &[(Vec<usize>, &Polynomial)], basis: &[String], wedge: &str) -> String {
    if words.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (k, (w, c)) in words.iter().enumerate() {
        let sym: Vec<&str> = w.iter().map(|&i| basis[i].as_str()).collect();
        let sym = if sym.is_empty() {
            "1".to_string()
        } else {
            sym.join(wedge)
        };
        let (neg, body) = match c.as_constant() {
            Some(v) if v.is_one() => (false, sym),
            Some(v) if (-&v).is_one() => (true, sym),
            Some(v) if v.is_negative() => (true, format!("{} * {sym}", v.abs())),
            Some(v) => (false, format!("{v} * {sym}")),
            None if c.num_terms() == 1 => {
                let text = c.to_string();
                match text.strip_prefix('-') {
                    Some(rest) => (true, format!("{rest} * {sym}")),
                    None => (false, format!("{text} * {sym}")),
                }
            }
            None => (false, format!("({c}) * {sym}")),
        };
        match (k, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        s.push_str(&body);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::chart::Chart;

    fn basis(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn polynomial_grammar() {
        let c = Chart::new(&["x", "y"]).unwrap();
        let p = parse_polynomial("-1/2 * x^2 * y + 3 - (x - y) * 2", &c).unwrap();
        assert_eq!(p.to_string(), "-1/2 * x^2 * y - 2 * x + 2 * y + 3");
        assert!(parse_polynomial("x +", &c).is_err());
        assert!(parse_polynomial("z", &c).is_err());
        assert!(parse_polynomial("1/0", &c).is_err());
        assert!(parse_polynomial("x $ y", &c).is_err());
    }

    #[test]
    fn error_columns_point_at_the_problem() {
        let c = Chart::new(&["x"]).unwrap();
        match parse_polynomial("x + q", &c) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn linear_combinations() {
        let c = Chart::new(&["x", "y"]).unwrap();
        let b = basis(&["e1", "e2"]);
        let v = parse_linear("x * e1 + e2 - 2 * e1", &c, &b).unwrap();
        assert_eq!(v[0].to_string(), "x - 2");
        assert_eq!(v[1].to_string(), "1");
        assert_eq!(format_linear(&v, &b), "(x - 2) * e1 + e2");
        assert!(parse_linear("x", &c, &b).is_err());
        assert!(parse_linear("e1 * e2", &c, &b).is_err());
        let vf = parse_linear("x * d/dy", &c, &basis(&["d/dx", "d/dy"])).unwrap();
        assert_eq!(vf[1].to_string(), "x");
    }

    #[test]
    fn starred_names() {
        let c = Chart::new(&["x"]).unwrap();
        let b = basis(&["e1", "e1*", "e2*"]);
        let v = parse_linear("x*e1 + 2 * e1* - e2*", &c, &b).unwrap();
        assert_eq!(format_linear(&v, &b), "x * e1 + 2 * e1* - e2*");
        let w = parse_exterior("e1* ^ e2*", &Chart::point(), &b, 2).unwrap();
        assert_eq!(w[&vec![1, 2]].to_string(), "1");
    }

    #[test]
    fn wedges_are_antisymmetrized() {
        let c = Chart::point();
        let b = basis(&["e1", "e2", "e3"]);
        let w = parse_exterior("e2 ^ e1 + 3 * e1 ^ e3 + e3 ^ e3", &c, &b, 2).unwrap();
        assert_eq!(w[&vec![0, 1]].to_string(), "-1");
        assert_eq!(w[&vec![0, 2]].to_string(), "3");
        assert_eq!(w.len(), 2);
        assert_eq!(format_exterior(&w, &b), "-e1 ^ e2 + 3 * e1 ^ e3");
    }

    #[test]
    fn sort_sign() {
        assert_eq!(sort_with_sign(&[2, 0, 1]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_with_sign(&[1, 0]), Some((vec![0, 1], -1)));
        assert_eq!(sort_with_sign(&[1, 1]), None);
    }
}
