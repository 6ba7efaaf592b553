//! The `.poly` text format.
//!
//! ```text
//! vars: x,z
//! 81*z^4 + 1024*x^3 + 864*x*z^2 - 288*z^2
//! ```
//!
//! First line: comma-separated variable names, order significant. Second
//! line: terms joined by ` + ` / ` - `, each `coeff`, `coeff*mono` or `mono`,
//! monomials like `x^3*y*z^2` with `^1` omitted, rational coefficients as
//! `a/b`, Gaussian coefficients as `(a/b+c/d*i)`. Canonical output sorts
//! terms descending under a declared monomial order with a positive leading
//! sign absorbed; `poly_parse(canonical_text(p)) == p` bit-exactly.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::coeff::{gr_real, rat_display, GaussRat, Rat};
use crate::error::{ParseError, PolyError};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::vars::VarRegistry;

fn mono_display(m: &Monomial, reg: &VarRegistry) -> String {
    let mut parts = Vec::new();
    for (i, name) in reg.names().iter().enumerate() {
        let e = m.exp(i);
        if e == 1 {
            parts.push(name.clone());
        } else if e > 1 {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

fn gauss_display(c: &GaussRat) -> String {
    let re = rat_display(&c.re);
    if c.im.is_negative() {
        format!("({re}-{}*i)", rat_display(&-c.im.clone()))
    } else {
        format!("({re}+{}*i)", rat_display(&c.im))
    }
}

/// The polynomial line of the format (without the `vars:` header).
pub fn poly_body(p: &Polynomial, order: &MonomialOrder) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.sorted_terms(order).into_iter().enumerate() {
        let first = k == 0;
        let (joiner, coeff_str) = if !c.im.is_zero() {
            (if first { "" } else { " + " }, Some(gauss_display(c)))
        } else {
            let neg = c.re.is_negative();
            let joiner = match (first, neg) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            let abs = c.re.abs();
            let coeff_str = if abs.is_one() && !m.is_unit() {
                None
            } else {
                Some(rat_display(&abs))
            };
            (joiner, coeff_str)
        };
        out.push_str(joiner);
        let mono = if m.is_unit() { String::new() } else { mono_display(m, p.registry()) };
        match (coeff_str, mono.is_empty()) {
            (Some(c), true) => out.push_str(&c),
            (Some(c), false) => {
                out.push_str(&c);
                out.push('*');
                out.push_str(&mono);
            }
            (None, false) => out.push_str(&mono),
            (None, true) => out.push('1'),
        }
    }
    out
}

/// Full two-line canonical document.
pub fn canonical_text(p: &Polynomial, order: &MonomialOrder) -> String {
    format!("vars: {}\n{}", p.registry().joined(), poly_body(p, order))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a str,
    line: usize,
    col: usize,
    toks: Vec<(Tok, usize, usize, String)>,
}

impl<'a> Lexer<'a> {
    fn err(&self, col: usize, token: &str, message: &str) -> ParseError {
        ParseError {
            line: self.line,
            col,
            token: token.to_string(),
            message: message.to_string(),
        }
    }

    fn run(mut self) -> Result<Vec<(Tok, usize, usize, String)>, ParseError> {
        let chars: Vec<char> = self.src.chars().collect();
        let mut i = 0usize;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let simple = match c {
                '+' => Some(Tok::Plus),
                '-' => Some(Tok::Minus),
                '*' => Some(Tok::Star),
                '^' => Some(Tok::Caret),
                '/' => Some(Tok::Slash),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                _ => None,
            };
            if let Some(t) = simple {
                self.toks.push((t, self.line, col, c.to_string()));
                i += 1;
                continue;
            }
            if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n: BigInt = s.parse().map_err(|_| self.err(col, &s, "invalid integer"))?;
                self.toks.push((Tok::Int(n), self.line, col, s));
                continue;
            }
            if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                self.toks.push((Tok::Name(s.clone()), self.line, col, s));
                continue;
            }
            return Err(self.err(col, &c.to_string(), "unexpected character"));
        }
        self.col = chars.len();
        Ok(self.toks)
    }
}

struct Parser {
    toks: Vec<(Tok, usize, usize, String)>,
    pos: usize,
    line: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _, _)| t)
    }

    fn next(&mut self) -> Option<(Tok, usize, usize, String)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err_here(&self, message: &str) -> ParseError {
        match self.toks.get(self.pos) {
            Some((_, line, col, text)) => ParseError {
                line: *line,
                col: *col,
                token: text.clone(),
                message: message.to_string(),
            },
            None => ParseError {
                line: self.line,
                col: self.toks.last().map(|(_, _, c, t)| c + t.len()).unwrap_or(1),
                token: "<end of input>".to_string(),
                message: message.to_string(),
            },
        }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if *t == want => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err_here(&format!("expected {what}"))),
        }
    }

    /// `INT` or `INT/INT`, unsigned.
    fn rational(&mut self) -> Result<Rat, ParseError> {
        let n = match self.next() {
            Some((Tok::Int(n), _, _, _)) => n,
            _ => {
                self.pos -= 1;
                return Err(self.err_here("expected integer"));
            }
        };
        if self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            match self.next() {
                Some((Tok::Int(d), line, col, text)) => {
                    if d.is_zero() {
                        return Err(ParseError {
                            line,
                            col,
                            token: text,
                            message: "zero denominator".to_string(),
                        });
                    }
                    Ok(Rat::new(n, d))
                }
                _ => {
                    self.pos -= 1;
                    Err(self.err_here("expected denominator"))
                }
            }
        } else {
            Ok(Rat::from_integer(n))
        }
    }

    /// Signed rational inside a Gaussian literal: `[+-] INT [/ INT]`.
    fn signed_rational(&mut self) -> Result<Rat, ParseError> {
        let neg = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let r = self.rational()?;
        Ok(if neg { -r } else { r })
    }

    /// `( re [+-] im * i )`, positioned right after the `(`.
    fn gaussian(&mut self) -> Result<GaussRat, ParseError> {
        let re = self.signed_rational()?;
        let sign = match self.next() {
            Some((Tok::Plus, _, _, _)) => Rat::one(),
            Some((Tok::Minus, _, _, _)) => -Rat::one(),
            _ => {
                self.pos -= 1;
                return Err(self.err_here("expected `+` or `-` in Gaussian coefficient"));
            }
        };
        let im_mag = self.rational()?;
        self.expect(Tok::Star, "`*` before `i`")?;
        match self.next() {
            Some((Tok::Name(n), _, _, _)) if n == "i" => {}
            _ => {
                self.pos -= 1;
                return Err(self.err_here("expected `i`"));
            }
        }
        self.expect(Tok::RParen, "closing `)`")?;
        Ok(GaussRat::new(re, sign * im_mag))
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        match self.next() {
            Some((Tok::Int(n), line, col, text)) => {
                u32::try_from(&n).map_err(|_| ParseError {
                    line,
                    col,
                    token: text,
                    message: "exponent out of range".to_string(),
                })
            }
            _ => {
                self.pos -= 1;
                Err(self.err_here("expected exponent"))
            }
        }
    }

    /// One term: product of coefficient and variable factors.
    fn term(
        &mut self,
        reg: &std::sync::Arc<VarRegistry>,
    ) -> Result<(Monomial, GaussRat), ParseError> {
        let mut coeff = GaussRat::one();
        let mut exps = vec![0u32; reg.len()];
        let mut any = false;
        loop {
            match self.peek() {
                Some(Tok::Int(_)) => {
                    let r = self.rational()?;
                    coeff = coeff * gr_real(r);
                }
                Some(Tok::LParen) => {
                    self.pos += 1;
                    let g = self.gaussian()?;
                    coeff = coeff * g;
                }
                Some(Tok::Name(_)) => {
                    let (tok, line, col, text) = self.next().unwrap();
                    let name = match tok {
                        Tok::Name(n) => n,
                        _ => unreachable!(),
                    };
                    let idx = reg.index_of(&name).ok_or(ParseError {
                        line,
                        col,
                        token: text,
                        message: "unknown variable (not in `vars:` header)".to_string(),
                    })?;
                    let e = if self.peek() == Some(&Tok::Caret) {
                        self.pos += 1;
                        self.exponent()?
                    } else {
                        1
                    };
                    exps[idx] = exps[idx].checked_add(e).ok_or(ParseError {
                        line,
                        col,
                        token: name,
                        message: "exponent overflow".to_string(),
                    })?;
                }
                _ => return Err(self.err_here("expected a term")),
            }
            any = true;
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
                continue;
            }
            break;
        }
        debug_assert!(any);
        Ok((Monomial::from_exps(exps), coeff))
    }
}

/// Parse the two-line `.poly` document.
pub fn poly_parse(text: &str) -> Result<Polynomial, PolyError> {
    let mut lines = text.split('\n');
    let header = lines.next().unwrap_or("");
    let rest = lines.next().unwrap_or("");
    for (k, extra) in lines.enumerate() {
        if !extra.trim().is_empty() {
            return Err(PolyError::Parse(ParseError {
                line: k + 3,
                col: 1,
                token: extra.trim().to_string(),
                message: "unexpected content after the polynomial line".to_string(),
            }));
        }
    }
    let header = header.trim_end_matches('\r');
    let body_src = rest.trim_end_matches('\r');
    let names_part = header.strip_prefix("vars:").ok_or(PolyError::Parse(ParseError {
        line: 1,
        col: 1,
        token: header.chars().take(12).collect(),
        message: "expected `vars:` header".to_string(),
    }))?;
    let names: Vec<String> = {
        let trimmed = names_part.trim();
        if trimmed.is_empty() {
            Vec::new()
        } else {
            trimmed.split(',').map(|s| s.trim().to_string()).collect()
        }
    };
    let reg = VarRegistry::new(names)?;

    let toks = Lexer { src: body_src, line: 2, col: 1, toks: Vec::new() }.run()?;
    let mut parser = Parser { toks, pos: 0, line: 2 };
    if parser.peek().is_none() {
        return Err(PolyError::Parse(parser.err_here("empty polynomial line")));
    }
    let mut terms: Vec<(Monomial, GaussRat)> = Vec::new();
    // Optional leading sign.
    let mut sign = Rat::one();
    match parser.peek() {
        Some(Tok::Minus) => {
            parser.pos += 1;
            sign = -Rat::one();
        }
        Some(Tok::Plus) => {
            parser.pos += 1;
        }
        _ => {}
    }
    loop {
        let (m, c) = parser.term(&reg)?;
        terms.push((m, c * gr_real(sign.clone())));
        match parser.next() {
            None => break,
            Some((Tok::Plus, _, _, _)) => sign = Rat::one(),
            Some((Tok::Minus, _, _, _)) => sign = -Rat::one(),
            Some(_) => {
                parser.pos -= 1;
                return Err(PolyError::Parse(parser.err_here("expected `+` or `-`")));
            }
        }
    }
    Ok(Polynomial::from_terms(&reg, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{gr, gr_int, rat};

    fn p(text: &str) -> Polynomial {
        poly_parse(text).unwrap()
    }

    #[test]
    fn zero_prints_as_zero() {
        let reg = VarRegistry::new(["x"]).unwrap();
        let z = Polynomial::zero(&reg);
        assert_eq!(poly_body(&z, &MonomialOrder::Grevlex), "0");
        assert_eq!(p("vars: x\n0"), z);
    }

    #[test]
    fn square_binomial_round_trip() {
        let q = p("vars: x,y\nx^2 - 2*x*y + y^2");
        assert_eq!(poly_body(&q, &MonomialOrder::Grevlex), "x^2 - 2*x*y + y^2");
        assert_eq!(poly_parse(&canonical_text(&q, &MonomialOrder::Grevlex)).unwrap(), q);
    }

    #[test]
    fn profile_quartic_vanishes_at_sample_point() {
        let q = p("vars: x,z\n1024*x^3 + 864*x*z^2 - 288*z^2 + 81*z^4");
        let v = q.eval_real_exact(&[rat(1, 4), rat(2, 3)]).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn gaussian_coefficients() {
        let reg = VarRegistry::new(["zeta"]).unwrap();
        let q = Polynomial::from_terms(
            &reg,
            [
                (Monomial::var(1, 0, 1), gr(rat(0, 1), rat(1, 1))),
                (Monomial::unit(1), gr(rat(1, 2), rat(-3, 1))),
            ],
        );
        let text = canonical_text(&q, &MonomialOrder::Grevlex);
        assert_eq!(text, "vars: zeta\n(0+1*i)*zeta + (1/2-3*i)");
        assert_eq!(poly_parse(&text).unwrap(), q);
    }

    #[test]
    fn error_positions() {
        let err = poly_parse("vars: x\nx +").unwrap_err();
        match err {
            PolyError::Parse(e) => {
                assert_eq!(e.line, 2);
                assert!(e.col >= 3);
            }
            other => panic!("unexpected error {other:?}"),
        }
        let err = poly_parse("vars: x\nx + y").unwrap_err();
        match err {
            PolyError::Parse(e) => assert_eq!(e.token, "y"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn negative_leading_coefficient() {
        let q = p("vars: x\n-x + 2");
        assert_eq!(poly_body(&q, &MonomialOrder::Grevlex), "-x + 2");
        assert_eq!(q.coefficient(&Monomial::var(1, 0, 1)), gr_int(-1));
    }
}
