//! Text form of polynomials: `x_(1,2)*x_(3,4) - x_(1,3)*x_(2,4) + x_(1,4)*x_(2,3)`.
//!
//! Terms are printed in decreasing lexicographic order of the canonical
//! variable index (`x_(1,2)` largest); within a term the `t` factors come
//! first, then the `x` factors.

use num_bigint::BigInt;
use num_traits::One;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder};
use super::poly::{PolyRing, Polynomial};
use super::Variable;
use crate::error::{Error, Result};

fn render_monomial<F: Field>(ring: &PolyRing<F>, m: &Monomial) -> String {
    let mut factors = Vec::new();
    let mut push = |idx: usize| {
        let e = m.exponent(idx);
        if e == 0 {
            return;
        }
        let v = ring.variable_at(idx);
        if e == 1 {
            factors.push(v.to_string());
        } else {
            factors.push(format!("{v}^{e}"));
        }
    };
    for idx in ring.nx()..ring.nvars() {
        push(idx);
    }
    for idx in 0..ring.nx() {
        push(idx);
    }
    factors.join("*")
}

/// Deterministic rendering, independent of the ring's active order.
pub fn render_polynomial<F: Field>(ring: &PolyRing<F>, p: &Polynomial<F>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<&(Monomial, F::Elem)> = p.terms().iter().collect();
    terms.sort_by(|a, b| MonomialOrder::Lex.cmp(&b.0, &a.0));
    let mut out = String::new();
    for (k, (m, c)) in terms.into_iter().enumerate() {
        let (neg, abs) = ring.field().render(c);
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&abs);
        } else {
            if abs != "1" {
                out.push_str(&abs);
                out.push('*');
            }
            out.push_str(&render_monomial(ring, m));
        }
    }
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", b as char))
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn small(&mut self) -> Result<usize> {
        let start = self.pos;
        let d = self.digits()?;
        d.parse().map_err(|_| Error::Parse { pos: start, msg: "integer too large".into() })
    }
}

/// Parses the text form (plus `t_i` variables, `^` powers and `a/b` coefficients)
/// into a polynomial of `ring`.
pub fn parse_polynomial<F: Field>(ring: &PolyRing<F>, text: &str) -> Result<Polynomial<F>> {
    let fld = ring.field();
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let mut terms: Vec<(Monomial, F::Elem)> = Vec::new();
    p.skip_ws();
    if p.peek().is_none() {
        return p.err("empty input");
    }
    let mut first = true;
    loop {
        p.skip_ws();
        let mut negative = false;
        match p.peek() {
            Some(b'+') if !first => p.pos += 1,
            Some(b'-') => {
                negative = true;
                p.pos += 1;
            }
            None => break,
            _ if first => {}
            _ => return p.err("expected `+` or `-`"),
        }
        first = false;
        p.skip_ws();
        let mut coeff = fld.one();
        let mut mono = ring.one_monomial();
        loop {
            p.skip_ws();
            let start = p.pos;
            match p.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let num: BigInt = p.digits()?.parse().expect("digits parse");
                    let mut den = BigInt::one();
                    p.skip_ws();
                    if p.peek() == Some(b'/') {
                        p.pos += 1;
                        p.skip_ws();
                        den = p.digits()?.parse().expect("digits parse");
                    }
                    let c = fld.from_ratio(&num, &den).ok_or(Error::Parse {
                        pos: start,
                        msg: "denominator vanishes in the coefficient field".into(),
                    })?;
                    coeff = fld.mul(&coeff, &c);
                }
                Some(b'x') => {
                    p.pos += 1;
                    p.expect(b'_')?;
                    p.expect(b'(')?;
                    p.skip_ws();
                    let i = p.small()?;
                    p.skip_ws();
                    p.expect(b',')?;
                    p.skip_ws();
                    let j = p.small()?;
                    p.skip_ws();
                    p.expect(b')')?;
                    mono = mul_power(ring, &mut p, mono, Variable::X(i, j), start)?;
                }
                Some(b't') => {
                    p.pos += 1;
                    p.expect(b'_')?;
                    let i = p.small()?;
                    mono = mul_power(ring, &mut p, mono, Variable::T(i), start)?;
                }
                _ => return p.err("expected a coefficient or a variable"),
            }
            p.skip_ws();
            if p.peek() == Some(b'*') {
                p.pos += 1;
            } else {
                break;
            }
        }
        if negative {
            coeff = fld.neg(&coeff);
        }
        terms.push((mono, coeff));
        p.skip_ws();
        if p.peek().is_none() {
            break;
        }
    }
    Ok(ring.from_terms(terms))
}

fn mul_power<F: Field>(
    ring: &PolyRing<F>,
    p: &mut Parser<'_>,
    mono: Monomial,
    v: Variable,
    start: usize,
) -> Result<Monomial> {
    let vm = ring
        .var_monomial(v)
        .map_err(|_| Error::Parse { pos: start, msg: format!("variable {v} out of range") })?;
    p.skip_ws();
    let mut e = 1;
    if p.peek() == Some(b'^') {
        p.pos += 1;
        p.skip_ws();
        e = p.small()?;
    }
    let mut out = mono;
    for _ in 0..e {
        out = out.mul(&vm);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PrimeField, Rationals};

    const PF4: &str = "x_(1,2)*x_(3,4) - x_(1,3)*x_(2,4) + x_(1,4)*x_(2,3)";

    #[test]
    fn pfaffian_text_round_trip() {
        let r = PolyRing::new(Rationals, 4).unwrap();
        let p = parse_polynomial(&r, PF4).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(render_polynomial(&r, &p), PF4);
    }

    #[test]
    fn zero_and_constants() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        assert!(parse_polynomial(&r, "0").unwrap().is_zero());
        let p = parse_polynomial(&r, "-1/2*t_1*x_(1,2)^2 + 3").unwrap();
        assert_eq!(render_polynomial(&r, &p), "-1/2*t_1*x_(1,2)^2 + 3");
    }

    #[test]
    fn t_factors_print_first() {
        let r = PolyRing::new(PrimeField::new(32003).unwrap(), 2).unwrap();
        let p = r.mul(&r.x(1, 2), &r.t(1));
        assert_eq!(render_polynomial(&r, &p), "t_1*x_(1,2)");
        assert_eq!(render_polynomial(&r, &r.neg(&p)), "-t_1*x_(1,2)");
    }

    #[test]
    fn errors_carry_positions() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        match parse_polynomial(&r, "x_(1,2) + x_(1,4)") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 10),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_polynomial(&r, "x_(1,2) +").is_err());
        assert!(parse_polynomial(&r, "x_(1,2) x_(1,3)").is_err());
        assert!(parse_polynomial(&r, "").is_err());
        assert!(parse_polynomial(&r, "t_0").is_err());
    }
}
