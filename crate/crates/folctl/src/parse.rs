//! Polynomial strings: integer and `a/b` literals, variables, `+ - * ^`,
//! parentheses. No implicit multiplication.

use folcore::poly::Polynomial;
use folcore::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    /// 1-based line and column inside the polynomial string.
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

fn lex(s: &str) -> Result<Lexer, PolyError> {
    let chars: Vec<char> = s.chars().collect();
    let (mut line, mut col) = (1, 1);
    let mut toks = Vec::new();
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
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            toks.push((Tok::Num(chars[start..i].iter().collect()), l0, c0));
        } else if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), l0, c0));
        } else if "+-*^/()".contains(c) {
            i += 1;
            toks.push((Tok::Sym(c), l0, c0));
        } else {
            return Err(PolyError::Syntax { line, column: col, message: format!("unexpected character '{}'", c) });
        }
        col += i - start;
    }
    toks.push((Tok::End, line, col));
    Ok(Lexer { toks, pos: 0 })
}

struct Parser<'a> {
    lex: Lexer,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.lex.toks[self.lex.pos].0
    }

    fn here(&self) -> (usize, usize) {
        let (_, l, c) = &self.lex.toks[self.lex.pos];
        (*l, *c)
    }

    fn error<T>(&self, message: &str) -> Result<T, PolyError> {
        let (line, column) = self.here();
        let found = match self.peek() {
            Tok::Num(n) => format!("'{}'", n),
            Tok::Ident(v) => format!("'{}'", v),
            Tok::Sym(c) => format!("'{}'", c),
            Tok::End => "end of input".into(),
        };
        Err(PolyError::Syntax { line, column, message: format!("{}, found {}", message, found) })
    }

    fn bump(&mut self) -> Tok {
        let t = self.lex.toks[self.lex.pos].0.clone();
        if t != Tok::End {
            self.lex.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Sym('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        while self.peek() == &Tok::Sym('*') {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Tok::Sym('-') => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Sym('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.peek() != &Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        match self.peek().clone() {
            Tok::Num(n) => match n.parse::<u32>() {
                Ok(e) => {
                    self.bump();
                    Ok(base.pow(e))
                }
                Err(_) => self.error("exponent too large"),
            },
            _ => self.error("expected a nonnegative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        let n = self.vars.len();
        match self.peek().clone() {
            Tok::Num(num) => {
                self.bump();
                let mut text = num;
                if self.peek() == &Tok::Sym('/') {
                    self.bump();
                    match self.peek().clone() {
                        Tok::Num(den) if den.trim_start_matches('0').is_empty() => {
                            return self.error("zero denominator")
                        }
                        Tok::Num(den) => {
                            self.bump();
                            text = format!("{}/{}", text, den);
                        }
                        _ => return self.error("expected an integer denominator"),
                    }
                }
                let q: Rational = text.parse().expect("digits form a valid rational");
                Ok(Polynomial::constant(n, q))
            }
            Tok::Ident(name) => {
                let (line, column) = self.here();
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => {
                        self.bump();
                        Ok(Polynomial::var(n, i))
                    }
                    None => Err(PolyError::UnknownVariable { name, line, column }),
                }
            }
            Tok::Sym('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != &Tok::Sym(')') {
                    return self.error("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            _ => self.error("expected a number, variable or '('"),
        }
    }
}

pub fn parse_polynomial(s: &str, vars: &[String]) -> Result<Polynomial, PolyError> {
    let mut p = Parser { lex: lex(s)?, vars };
    let out = p.expr()?;
    if p.peek() != &Tok::End {
        return p.error("expected an operator or end of input");
    }
    Ok(out)
}

/// Identifiers of `s` in order of first appearance.
pub fn identifiers(s: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    if let Ok(l) = lex(s) {
        for (t, _, _) in l.toks {
            if let Tok::Ident(v) = t {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
    }
    out
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_') && chars.all(|c| c.is_alphanumeric() || c == '_')
}
