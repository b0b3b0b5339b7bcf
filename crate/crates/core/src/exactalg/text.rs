//! Text and JSON forms of rational polynomials.
//!
//! Text: a sum of terms such as `-3/2 * s0^2 * u1`. Printing is canonical:
//! factors follow variable names in sorted order, terms go by descending
//! total degree and then descending exponents, unit coefficients are
//! omitted. Parsing accepts any order, repeated factors and integer or
//! `p/q` coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::multipoly::{Exponents, MultiPoly};
use super::AlgError;
use crate::Rational;

/// Canonical terms: sorted used variables and their exponent rows.
fn canonical_terms(p: &MultiPoly<Rational>) -> (Vec<String>, Vec<(Vec<u32>, Rational)>) {
    let mut names = p.used_vars();
    names.sort();
    let idx: Vec<usize> = names.iter().map(|n| p.var_index(n).expect("used")).collect();
    let mut rows: Vec<(Vec<u32>, Rational)> = p
        .terms()
        .iter()
        .map(|(e, c)| (idx.iter().map(|&i| e[i]).collect(), c.clone()))
        .collect();
    rows.sort_by(|(a, _), (b, _)| {
        let da: u64 = a.iter().map(|&x| x as u64).sum();
        let db: u64 = b.iter().map(|&x| x as u64).sum();
        db.cmp(&da).then_with(|| b.cmp(a))
    });
    (names, rows)
}

pub fn format_poly(p: &MultiPoly<Rational>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let (names, rows) = canonical_terms(p);
    let mut out = String::new();
    for (k, (e, c)) in rows.iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        let mut factors: Vec<String> = Vec::new();
        let has_vars = e.iter().any(|&x| x > 0);
        if !mag.is_one() || !has_vars {
            factors.push(mag.to_string());
        }
        for (name, &x) in names.iter().zip(e) {
            match x {
                0 => {}
                1 => factors.push(name.clone()),
                _ => factors.push(format!("{name}^{x}")),
            }
        }
        out.push_str(&factors.join(" * "));
    }
    out
}

impl fmt::Display for MultiPoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

struct Lexed {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Lexed>, AlgError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1usize, 1usize);
    while let Some(&ch) = chars.peek() {
        let (l, c) = (line, column);
        if ch == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let tok = if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                chars.next();
                column += 1;
            }
            Tok::Num(s.parse().expect("digits"))
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                s.push(d);
                chars.next();
                column += 1;
            }
            Tok::Ident(s)
        } else {
            chars.next();
            column += 1;
            match ch {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                _ => {
                    return Err(AlgError::Parse {
                        line: l,
                        column: c,
                        msg: format!("unexpected character '{ch}'"),
                    })
                }
            }
        };
        out.push(Lexed { tok, line: l, column: c });
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Lexed],
    pos: usize,
    end: (usize, usize),
    allowed: Option<&'a [String]>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map_or(self.end, |t| (t.line, t.column))
    }

    fn error(&self, msg: impl Into<String>) -> AlgError {
        let (line, column) = self.here();
        AlgError::Parse {
            line,
            column,
            msg: msg.into(),
        }
    }

    fn number(&mut self) -> Result<BigInt, AlgError> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.error("expected a number")),
        }
    }

    /// One term: a product of coefficients and powers of variables.
    fn term(&mut self, acc: &mut BTreeMap<String, u32>) -> Result<Rational, AlgError> {
        let mut coeff = Rational::one();
        loop {
            match self.peek().cloned() {
                Some(Tok::Num(_)) => {
                    let num = self.number()?;
                    let den = if self.peek() == Some(&Tok::Slash) {
                        self.pos += 1;
                        let d = self.number()?;
                        if d.is_zero() {
                            self.pos -= 1;
                            return Err(self.error("zero denominator"));
                        }
                        d
                    } else {
                        BigInt::one()
                    };
                    coeff *= Rational::new(num, den);
                }
                Some(Tok::Ident(name)) => {
                    if let Some(list) = self.allowed {
                        if !list.contains(&name) {
                            return Err(self.error(format!("unknown variable {name}")));
                        }
                    }
                    self.pos += 1;
                    let mut e = 1u32;
                    if self.peek() == Some(&Tok::Caret) {
                        self.pos += 1;
                        let n = self.number()?;
                        e = u32::try_from(&n).map_err(|_| {
                            self.pos -= 1;
                            self.error("exponent out of range")
                        })?;
                    }
                    let slot = acc.entry(name).or_insert(0);
                    *slot = slot
                        .checked_add(e)
                        .ok_or_else(|| self.error("exponent out of range"))?;
                }
                _ => return Err(self.error("expected a coefficient or variable")),
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                return Ok(coeff);
            }
        }
    }
}

/// Parse a polynomial. With `vars`, the result lives in that context and any
/// other variable is an error; otherwise the context is the sorted set of
/// variables that appear.
pub fn parse_poly(text: &str, vars: Option<&[&str]>) -> Result<MultiPoly<Rational>, AlgError> {
    let toks = lex(text)?;
    let last_line = text.lines().count().max(1);
    let last_col = text.lines().last().map_or(0, |l| l.chars().count()) + 1;
    let allowed: Option<Vec<String>> = vars.map(|v| v.iter().map(|s| s.to_string()).collect());
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: (last_line, last_col),
        allowed: allowed.as_deref(),
    };
    let mut terms: Vec<(BTreeMap<String, u32>, Rational)> = Vec::new();
    let mut sign = Rational::one();
    match p.peek() {
        Some(Tok::Minus) => {
            sign = -sign;
            p.pos += 1;
        }
        Some(Tok::Plus) => p.pos += 1,
        None => return Err(p.error("empty polynomial")),
        _ => {}
    }
    loop {
        let mut acc = BTreeMap::new();
        let c = p.term(&mut acc)?;
        terms.push((acc, sign * c));
        match p.peek() {
            None => break,
            Some(Tok::Plus) => sign = Rational::one(),
            Some(Tok::Minus) => sign = -Rational::one(),
            Some(_) => return Err(p.error("expected '+', '-' or '*'")),
        }
        p.pos += 1;
    }
    let context: Vec<String> = match &allowed {
        Some(list) => list.clone(),
        None => {
            let mut names: Vec<String> = terms.iter().flat_map(|(m, _)| m.keys().cloned()).collect();
            names.sort();
            names.dedup();
            names
        }
    };
    let rows = terms.into_iter().map(|(m, c)| {
        let e: Exponents = context.iter().map(|n| m.get(n).copied().unwrap_or(0)).collect();
        (e, c)
    });
    MultiPoly::from_terms(&context, rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub num: String,
    pub den: String,
}

/// JSON shape of a polynomial: its variable context and nonzero terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl From<&MultiPoly<Rational>> for PolyJson {
    fn from(p: &MultiPoly<Rational>) -> Self {
        PolyJson {
            vars: p.vars().to_vec(),
            terms: p
                .terms()
                .iter()
                .map(|(e, c)| TermJson {
                    exp: e.clone(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolyJson> for MultiPoly<Rational> {
    type Error = AlgError;

    fn try_from(j: &PolyJson) -> Result<Self, AlgError> {
        let bad = |msg: String| AlgError::Parse { line: 0, column: 0, msg };
        let mut rows = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let num: BigInt = t.num.parse().map_err(|_| bad(format!("bad numerator {:?}", t.num)))?;
            let den: BigInt = t.den.parse().map_err(|_| bad(format!("bad denominator {:?}", t.den)))?;
            if den.is_zero() {
                return Err(bad("zero denominator".into()));
            }
            rows.push((t.exp.clone(), Rational::new(num, den)));
        }
        MultiPoly::from_terms(&j.vars, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly;

    #[test]
    fn prints_canonically() {
        let p = parse_poly("u1 * s0^2 * 3/2 - 1 + s1 - s0^2*u1", None).unwrap();
        assert_eq!(format_poly(&p), "1/2 * s0^2 * u1 + s1 - 1");
        assert_eq!(format_poly(&Poly::zero()), "0");
        assert_eq!(format_poly(&-&Poly::var("x")), "-x");
    }

    #[test]
    fn round_trips() {
        for s in [
            "s0^2 * u0^2 + s0^2 * u1^2 + s1^2 * u0^2 + 2 * s1^2 * u1^2",
            "-7/3 * X0^4 + X1 * X2^2 * X3 - 5",
            "0",
            "x",
        ] {
            let p = parse_poly(s, None).unwrap();
            let printed = format_poly(&p);
            assert_eq!(printed, s);
            assert_eq!(parse_poly(&printed, None).unwrap(), p);
        }
    }

    #[test]
    fn reports_positions() {
        let err = parse_poly("s0 +\n  3 ** u0", None).unwrap_err();
        assert_eq!(
            err,
            AlgError::Parse { line: 2, column: 6, msg: "expected a coefficient or variable".into() }
        );
        let err = parse_poly("s0 + z", Some(&["s0", "s1"])).unwrap_err();
        assert!(matches!(err, AlgError::Parse { line: 1, column: 6, .. }));
        assert!(matches!(parse_poly("1/0", None), Err(AlgError::Parse { .. })));
        assert!(matches!(parse_poly("", None), Err(AlgError::Parse { .. })));
        assert!(matches!(parse_poly("x $", None), Err(AlgError::Parse { column: 3, .. })));
    }

    #[test]
    fn json_round_trip() {
        let p = parse_poly("-3/4 * s0 * u1^2 + 9", Some(&["s0", "s1", "u0", "u1"])).unwrap();
        let j = PolyJson::from(&p);
        assert_eq!(j.vars, ["s0", "s1", "u0", "u1"]);
        let text = serde_json::to_string(&j).unwrap();
        let back: PolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Poly::try_from(&back).unwrap(), p);
        let broken = PolyJson {
            vars: vec!["x".into()],
            terms: vec![TermJson { exp: vec![1, 2], num: "1".into(), den: "1".into() }],
        };
        assert!(Poly::try_from(&broken).is_err());
    }
}
