//! Coefficient expressions: a small recursive-descent parser and a canonical renderer.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor | paren-factor)*
//! factor := atom ('^' exp)?
//! exp    := ['-'] int | '(' ['-'] int ['/' int] ')'
//! atom   := int | 'q' | 't' | 'tau' | '(' expr ')'
//! ```
//!
//! Juxtaposition is only accepted next to a parenthesised group, so `2(1+q)` and
//! `(1-q)(1+t)` parse but `2q` and `qt` do not. `tau` is `t^-1`.

use crate::arith::{Int, LaurentPoly, RatFunc};
use crate::error::{Error, Result};

/// Which variables appear in rendered output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Display {
    QT,
    /// `t` is written as `tau^-1`.
    Tau,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(Int),
    Q,
    T,
    Tau,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
}

fn lex(src: &str) -> Result<Lexer> {
    let mut toks = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            let v: num_bigint::BigInt = s.parse().unwrap();
            toks.push((Tok::Int(Int::from_big(v)), l0, c0));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            let t = match s.as_str() {
                "q" => Tok::Q,
                "t" => Tok::T,
                "tau" => Tok::Tau,
                _ => {
                    return Err(Error::Parse { line: l0, col: c0, msg: format!("unknown symbol '{s}'") })
                }
            };
            toks.push((t, l0, c0));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' | '\u{b7}' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(Error::Parse { line: l0, col: c0, msg: format!("unexpected character '{c}'") })
            }
        };
        toks.push((t, l0, c0));
        col += 1;
        i += 1;
    }
    toks.push((Tok::End, line, col));
    Ok(Lexer { toks })
}

struct Parser {
    lx: Lexer,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.lx.toks[self.pos].0
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (_, line, col) = self.lx.toks[self.pos];
        Err(Error::Parse { line, col, msg: msg.into() })
    }

    fn bump(&mut self) -> Tok {
        let t = self.lx.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected {t:?}, found {:?}", self.peek()))
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut neg = false;
        match self.peek() {
            Tok::Minus => {
                self.bump();
                neg = true;
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if neg {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let (mut acc, mut prev_paren) = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let (f, p) = self.factor()?;
                    acc = &acc * &f;
                    prev_paren = p;
                }
                Tok::Slash => {
                    self.bump();
                    let (f, p) = self.factor()?;
                    if f.is_zero() {
                        return self.err("division by zero");
                    }
                    acc = &acc / &f;
                    prev_paren = p;
                }
                Tok::LParen => {
                    let (f, p) = self.factor()?;
                    acc = &acc * &f;
                    prev_paren = p;
                }
                Tok::Int(_) | Tok::Q | Tok::T | Tok::Tau if prev_paren => {
                    let (f, p) = self.factor()?;
                    acc = &acc * &f;
                    prev_paren = p;
                }
                Tok::Int(_) | Tok::Q | Tok::T | Tok::Tau => {
                    return self.err("implicit multiplication needs '*'");
                }
                _ => return Ok(acc),
            }
        }
    }

    /// Returns the value and whether the factor was a parenthesised group.
    fn factor(&mut self) -> Result<(RatFunc, bool)> {
        let (base, paren) = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok((base, paren));
        }
        self.bump();
        let (num, den) = self.exponent()?;
        let v = if den == 1 {
            match base.pow(num) {
                Some(v) => v,
                None => return self.err("zero raised to a negative power"),
            }
        } else {
            // half-integer powers only make sense on monomials
            match base.as_monomial() {
                Some((c, a, b)) if c.is_one() && (a * num) % 2 == 0 && (b * num) % 2 == 0 => {
                    RatFunc::monomial(1, a * num / 2, b * num / 2)
                }
                _ => return self.err("fractional power of a non-monomial"),
            }
        };
        Ok((v, false))
    }

    fn small_int(&mut self) -> Result<i32> {
        match self.bump() {
            Tok::Int(v) => match v.as_i64().and_then(|x| i32::try_from(x).ok()) {
                Some(x) if x <= 1 << 20 => Ok(x),
                _ => {
                    self.pos -= 1;
                    self.err("exponent too large")
                }
            },
            _ => {
                self.pos -= 1;
                self.err("expected an integer exponent")
            }
        }
    }

    fn exponent(&mut self) -> Result<(i32, i32)> {
        if *self.peek() == Tok::LParen {
            self.bump();
            let sign = if *self.peek() == Tok::Minus {
                self.bump();
                -1
            } else {
                1
            };
            let n = sign * self.small_int()?;
            let d = if *self.peek() == Tok::Slash {
                self.bump();
                self.small_int()?
            } else {
                1
            };
            self.expect(Tok::RParen)?;
            match d {
                1 => Ok((n, 1)),
                2 if n % 2 == 0 => Ok((n / 2, 1)),
                2 => Ok((n, 2)),
                _ => self.err("only integer and half-integer exponents are supported"),
            }
        } else {
            let sign = if *self.peek() == Tok::Minus {
                self.bump();
                -1
            } else {
                1
            };
            Ok((sign * self.small_int()?, 1))
        }
    }

    fn atom(&mut self) -> Result<(RatFunc, bool)> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok((RatFunc::from_int(v), false))
            }
            Tok::Q => {
                self.bump();
                Ok((RatFunc::q(), false))
            }
            Tok::T => {
                self.bump();
                Ok((RatFunc::t(), false))
            }
            Tok::Tau => {
                self.bump();
                Ok((RatFunc::monomial(1, 0, -2), false))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok((e, true))
            }
            t => self.err(format!("unexpected {t:?}")),
        }
    }
}

/// Parses an expression into canonical form.
pub fn parse(src: &str) -> Result<RatFunc> {
    let mut p = Parser { lx: lex(src)?, pos: 0 };
    if *p.peek() == Tok::End {
        return p.err("empty expression");
    }
    let v = p.expr()?;
    if *p.peek() != Tok::End {
        return p.err(format!("trailing input at {:?}", p.peek()));
    }
    Ok(v)
}

fn var_power(name: &str, e: i32) -> Option<String> {
    match e {
        0 => None,
        2 => Some(name.to_string()),
        e if e % 2 == 0 => Some(format!("{name}^{}", e / 2)),
        e => Some(format!("{name}^({e}/2)")),
    }
}

fn monomial_factors(m: (i32, i32), second: &str) -> Vec<String> {
    var_power("q", m.0).into_iter().chain(var_power(second, m.1)).collect()
}

/// Renders a polynomial whose exponents are all nonnegative, lowest degree first.
fn render_poly(p: &LaurentPoly, second: &str) -> String {
    let mut terms: Vec<_> = p.terms().to_vec();
    terms.sort_by_key(|((a, b), _)| (a + b, -a));
    let mut s = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        let mut f = monomial_factors(*m, second);
        let neg = c.is_negative();
        let a = c.abs();
        if !a.is_one() || f.is_empty() {
            f.insert(0, a.to_string());
        }
        if neg {
            s.push('-');
        } else if i > 0 {
            s.push('+');
        }
        s.push_str(&f.join("*"));
    }
    s
}

/// Splits a display-coordinate polynomial into `c * x^m * P` with `P` primitive, exponents
/// starting at zero and a positive first term.
fn split(p: &LaurentPoly) -> (Int, (i32, i32), LaurentPoly) {
    let m = p.min_exps().unwrap();
    let p = p.shift((-m.0, -m.1));
    let mut c = p.content();
    let mut sorted: Vec<_> = p.terms().to_vec();
    sorted.sort_by_key(|((a, b), _)| (a + b, -a));
    if sorted[0].1.is_negative() {
        c = -c;
    }
    (c.clone(), m, p.div_int_exact(&c))
}

/// Canonical text of a rational function. Numerator and denominator are each written
/// as an integer times a monomial times a primitive polynomial.
pub fn render(f: &RatFunc, mode: Display) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let (second, flip) = match mode {
        Display::QT => ("t", 1),
        Display::Tau => ("tau", -1),
    };
    let to_disp = |p: &LaurentPoly| p.map_exps(|(a, b)| (a, flip * b));
    let (cn, mn, pn) = split(&to_disp(f.numer()));
    let (cd, md, pd) = split(&to_disp(f.denom()));
    let (cn, cd) = if cd.is_negative() { (-cn, -cd) } else { (cn, cd) };
    let g = cn.gcd(&cd);
    let (cn, cd) = (cn.div_exact(&g), cd.div_exact(&g));
    let m = (mn.0 - md.0, mn.1 - md.1);

    let mut top: Vec<String> = Vec::new();
    let mut bot: Vec<String> = Vec::new();
    let neg = cn.is_negative();
    if !cn.abs().is_one() {
        top.push(cn.abs().to_string());
    }
    if !cd.is_one() {
        bot.push(cd.to_string());
    }
    top.extend(monomial_factors((m.0.max(0), m.1.max(0)), second));
    bot.extend(monomial_factors(((-m.0).max(0), (-m.1).max(0)), second));
    if !pn.is_one() {
        top.push(format!("({})", render_poly(&pn, second)));
    }
    if !pd.is_one() {
        bot.push(format!("({})", render_poly(&pd, second)));
    }
    // a lone polynomial factor needs no parentheses
    if top.len() == 1 && bot.is_empty() && !pn.is_one() && !neg {
        return render_poly(&pn, second);
    }
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    if top.is_empty() {
        s.push('1');
    } else {
        s.push_str(&top.join("*"));
    }
    match bot.len() {
        0 => {}
        1 => {
            s.push('/');
            s.push_str(&bot[0]);
        }
        _ => {
            s.push_str("/(");
            s.push_str(&bot.join("*"));
            s.push(')');
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rt(s: &str) {
        let v = parse(s).unwrap();
        for mode in [Display::QT, Display::Tau] {
            let r = render(&v, mode);
            assert_eq!(parse(&r).unwrap(), v, "{s} -> {r}");
        }
    }

    #[test]
    fn parses_and_evaluates() {
        let f = parse("(1-q)*(1+t)/(1-q*t)").unwrap();
        let v = f
            .evaluate(&num_rational::BigRational::from_integer(2.into()), &num_rational::BigRational::from_integer(3.into()))
            .unwrap();
        assert_eq!(v, num_rational::BigRational::new(4.into(), 5.into()));
        assert_eq!(parse("tau").unwrap(), RatFunc::monomial(1, 0, -2));
        assert_eq!(parse("q^(1/2)*q^(1/2)").unwrap(), RatFunc::q());
        assert_eq!(parse("(1+q)(1-q)").unwrap(), parse("1-q^2").unwrap());
        assert_eq!(parse("-q^-1").unwrap(), RatFunc::monomial(-1, -2, 0));
    }

    #[test]
    fn rejects_bad_input() {
        for s in ["", "2q", "qt", "1+", "(1", "q^", "x", "1/0", "(1+q)^(1/2)", "q^(1/3)"] {
            assert!(parse(s).is_err(), "{s}");
        }
        match parse("1 + \n  q*y") {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (2, 5)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn round_trips() {
        for s in [
            "0",
            "1",
            "-7",
            "3/4",
            "q",
            "tau^2",
            "1+q*tau+q^2*tau^3",
            "(1-q)*(1+t)/(1-q*t)",
            "-2*q^3/(3*t)",
            "q^(1/2)*t^(-3/2)*(1+q)",
            "(q-t)^3/(q*t-1)^2",
        ] {
            rt(s);
        }
    }

    #[test]
    fn rendering_shape() {
        assert_eq!(render(&parse("tau^2").unwrap(), Display::Tau), "tau^2");
        assert_eq!(render(&parse("tau^2").unwrap(), Display::QT), "1/t^2");
        assert_eq!(render(&parse("1+q").unwrap(), Display::QT), "1+q");
        assert_eq!(render(&parse("-1-q").unwrap(), Display::QT), "-(1+q)");
    }
}
