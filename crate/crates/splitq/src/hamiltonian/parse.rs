//! A small expression grammar for analytic Hamiltonians.
//!
//! Accepted forms: the variables `x` and `p`, real literals (`0.5`, `2e-3`),
//! imaginary literals (`i`, `2i`, `1.5i`), parentheses, `+`, `-`, `*`, and
//! nonnegative integer powers `^n`. Unicode `·` and `−` are accepted as
//! multiplication and subtraction. The result is a complex polynomial; any
//! variable power above [`MAX_EXPONENT`](super::MAX_EXPONENT) is rejected.

use std::collections::BTreeMap;

use num_complex::Complex64;
use thiserror::Error;

use super::{AnalyticSpec, HamiltonianError, MAX_EXPONENT};

/// Errors from [`parse_analytic`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at byte {pos}")]
    UnexpectedChar { pos: usize, ch: char },
    #[error("unexpected end of expression")]
    UnexpectedEnd,
    #[error("malformed number at byte {pos}")]
    BadNumber { pos: usize },
    #[error("expected a nonnegative integer exponent at byte {pos}")]
    BadExponent { pos: usize },
    #[error("a term exceeds the maximum variable power of {MAX_EXPONENT}")]
    DegreeTooLarge,
}

/// Parse an analytic Hamiltonian from a polynomial expression in `x` and `p`.
pub fn parse_analytic(input: &str) -> Result<AnalyticSpec, ParseError> {
    let mut parser = Parser {
        chars: input.char_indices().collect(),
        at: 0,
    };
    let poly = parser.expr()?;
    parser.skip_ws();
    if let Some(&(pos, ch)) = parser.peek() {
        return Err(ParseError::UnexpectedChar { pos, ch });
    }
    let terms: Vec<(u8, u8, Complex64)> = poly
        .0
        .into_iter()
        .map(|((xp, pp), c)| (xp, pp, c))
        .collect();
    AnalyticSpec::new(&terms).map_err(|e| match e {
        HamiltonianError::ExponentTooLarge { .. } => ParseError::DegreeTooLarge,
        _ => unreachable!("only degree errors can arise from parsed terms"),
    })
}

/// Sparse complex polynomial in `(x, p)`, keyed by exponent pair.
#[derive(Clone, Debug)]
struct Poly(BTreeMap<(u8, u8), Complex64>);

impl Poly {
    fn constant(c: Complex64) -> Self {
        let mut m = BTreeMap::new();
        if c != Complex64::new(0.0, 0.0) {
            m.insert((0, 0), c);
        }
        Poly(m)
    }

    fn variable(x: bool) -> Self {
        let mut m = BTreeMap::new();
        m.insert(if x { (1, 0) } else { (0, 1) }, Complex64::new(1.0, 0.0));
        Poly(m)
    }

    fn add(mut self, rhs: &Poly, sign: f64) -> Self {
        for (&k, &c) in &rhs.0 {
            *self.0.entry(k).or_insert(Complex64::new(0.0, 0.0)) += c * sign;
        }
        self
    }

    fn neg(mut self) -> Self {
        for c in self.0.values_mut() {
            *c = -*c;
        }
        self
    }

    fn mul(&self, rhs: &Poly) -> Result<Self, ParseError> {
        let mut out: BTreeMap<(u8, u8), Complex64> = BTreeMap::new();
        for (&(ax, ap), &ac) in &self.0 {
            for (&(bx, bp), &bc) in &rhs.0 {
                let (xp, pp) = (ax + bx, ap + bp);
                if xp > MAX_EXPONENT || pp > MAX_EXPONENT {
                    return Err(ParseError::DegreeTooLarge);
                }
                *out.entry((xp, pp)).or_insert(Complex64::new(0.0, 0.0)) += ac * bc;
            }
        }
        Ok(Poly(out))
    }

    fn pow(&self, n: u32) -> Result<Self, ParseError> {
        let mut out = Poly::constant(Complex64::new(1.0, 0.0));
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, char)> {
        self.chars.get(self.at)
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        let c = self.chars.get(self.at).copied();
        if c.is_some() {
            self.at += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(&(_, ch)) if ch.is_whitespace()) {
            self.at += 1;
        }
    }

    fn eat(&mut self, wanted: &[char]) -> Option<char> {
        self.skip_ws();
        match self.peek() {
            Some(&(_, ch)) if wanted.contains(&ch) => {
                self.at += 1;
                Some(ch)
            }
            _ => None,
        }
    }

    /// expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        while let Some(op) = self.eat(&['+', '-', '\u{2212}']) {
            let rhs = self.term()?;
            acc = acc.add(&rhs, if op == '+' { 1.0 } else { -1.0 });
        }
        Ok(acc)
    }

    /// term := unary ('*' unary)*
    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        while self.eat(&['*', '\u{b7}']).is_some() {
            let rhs = self.unary()?;
            acc = acc.mul(&rhs)?;
        }
        Ok(acc)
    }

    /// unary := '-' unary | power
    fn unary(&mut self) -> Result<Poly, ParseError> {
        if self.eat(&['-', '\u{2212}']).is_some() {
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    /// power := atom ('^' integer)?
    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.eat(&['^']).is_some() {
            self.skip_ws();
            let pos = self.peek().map_or(usize::MAX, |&(p, _)| p);
            let mut digits = String::new();
            while matches!(self.peek(), Some(&(_, ch)) if ch.is_ascii_digit()) {
                digits.push(self.bump().unwrap().1);
            }
            if digits.is_empty() {
                return Err(ParseError::BadExponent { pos });
            }
            let n: u32 = digits.parse().map_err(|_| ParseError::BadExponent { pos })?;
            if n > u32::from(MAX_EXPONENT) {
                return Err(ParseError::DegreeTooLarge);
            }
            return base.pow(n);
        }
        Ok(base)
    }

    /// atom := number 'i'? | 'i' | 'x' | 'p' | '(' expr ')'
    fn atom(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        let &(pos, ch) = self.peek().ok_or(ParseError::UnexpectedEnd)?;
        match ch {
            'x' => {
                self.bump();
                Ok(Poly::variable(true))
            }
            'p' => {
                self.bump();
                Ok(Poly::variable(false))
            }
            'i' => {
                self.bump();
                Ok(Poly::constant(Complex64::i()))
            }
            '(' => {
                self.bump();
                let inner = self.expr()?;
                if self.eat(&[')']).is_none() {
                    match self.peek() {
                        Some(&(pos, ch)) => Err(ParseError::UnexpectedChar { pos, ch }),
                        None => Err(ParseError::UnexpectedEnd),
                    }
                } else {
                    Ok(inner)
                }
            }
            _ if ch.is_ascii_digit() || ch == '.' => {
                let mut text = String::new();
                let mut seen_exp = false;
                while let Some(&(_, c)) = self.peek() {
                    let take = c.is_ascii_digit()
                        || c == '.'
                        || (c == 'e' || c == 'E')
                        || ((c == '+' || c == '-') && seen_exp && matches!(text.chars().last(), Some('e' | 'E')));
                    if !take {
                        break;
                    }
                    if c == 'e' || c == 'E' {
                        seen_exp = true;
                    }
                    text.push(self.bump().unwrap().1);
                }
                let value: f64 = text.parse().map_err(|_| ParseError::BadNumber { pos })?;
                // A directly attached `i` makes the literal imaginary.
                if matches!(self.peek(), Some(&(_, 'i'))) {
                    self.bump();
                    Ok(Poly::constant(Complex64::new(0.0, value)))
                } else {
                    Ok(Poly::constant(Complex64::new(value, 0.0)))
                }
            }
            _ => Err(ParseError::UnexpectedChar { pos, ch }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature::Coquaternion;
    use crate::hamiltonian::PhasePoint;

    fn eval_expanded(src: &str, s: &PhasePoint) -> Complex64 {
        let h = parse_analytic(src).unwrap().expand(Coquaternion);
        let v = h.eval(s);
        assert_eq!(v.q2, 0.0);
        assert_eq!(v.q3, 0.0);
        Complex64::new(v.q0, v.q1)
    }

    #[test]
    fn oscillator_string_round_trips() {
        let direct = AnalyticSpec::new(&[
            (2, 0, Complex64::new(0.5, 0.0)),
            (0, 2, Complex64::new(0.5, 0.0)),
        ])
        .unwrap();
        assert_eq!(parse_analytic("0.5*(x^2 + p^2)").unwrap(), direct);
        assert_eq!(parse_analytic(" 0.5*x^2+0.5*p^2 ").unwrap(), direct);
    }

    #[test]
    fn literals_variables_and_signs() {
        let s = PhasePoint::new(0.4, -1.1, 0.9, 0.3);
        let x = Complex64::new(s.x0, s.x1);
        let p = Complex64::new(s.p0, s.p1);

        let got = eval_expanded("x", &s);
        assert!((got - x).norm() < 1e-14);

        let got = eval_expanded("i*x*p", &s);
        assert!((got - Complex64::i() * x * p).norm() < 1e-14);

        let got = eval_expanded("2i - x^3 + 1.5", &s);
        let want = Complex64::new(1.5, 2.0) - x * x * x;
        assert!((got - want).norm() < 1e-13);

        let got = eval_expanded("-p^2 - -x", &s);
        let want = -p * p + x;
        assert!((got - want).norm() < 1e-14);

        let got = eval_expanded("2e-1*p", &s);
        assert!((got - 0.2 * p).norm() < 1e-14);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            parse_analytic("x + y"),
            Err(ParseError::UnexpectedChar { ch: 'y', .. })
        ));
        assert!(matches!(parse_analytic("x +"), Err(ParseError::UnexpectedEnd)));
        assert!(matches!(
            parse_analytic("x^-2"),
            Err(ParseError::BadExponent { .. })
        ));
        assert!(matches!(parse_analytic("(x"), Err(ParseError::UnexpectedEnd)));
        assert!(matches!(parse_analytic("x^9"), Err(ParseError::DegreeTooLarge)));
        assert!(matches!(
            parse_analytic("x^5 * x^5"),
            Err(ParseError::DegreeTooLarge)
        ));
        assert!(matches!(
            parse_analytic("x 2"),
            Err(ParseError::UnexpectedChar { ch: '2', .. })
        ));
    }
}
