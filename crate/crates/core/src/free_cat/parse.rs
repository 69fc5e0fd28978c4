//! Reader for the term language.
//!
//! ```text
//! term := ten (";" ten)*
//! ten  := atom ("#" atom)*
//! atom := "id[" nat "]" | gen | "(" term ")"
//! gen  := name ("[" nat ("," nat)? "]")?
//! ```

use super::term::Term;
use super::TermError;
use crate::gen::{Gen, Signature};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Nat(usize),
    LBrack,
    RBrack,
    Comma,
    LParen,
    RParen,
    Semi,
    Hash,
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Lexer, TermError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut col) = (1usize, 1usize);
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            k += 1;
            continue;
        }
        let simple = match c {
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            ',' => Some(Tok::Comma),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ';' => Some(Tok::Semi),
            '#' => Some(Tok::Hash),
            _ => None,
        };
        if let Some(t) = simple {
            toks.push((t, l0, c0));
            k += 1;
            col += 1;
            continue;
        }
        let start = k;
        if c.is_ascii_digit() {
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            let v = s.parse().map_err(|_| TermError::Syntax {
                line: l0,
                col: c0,
                msg: format!("number `{s}` too large"),
            })?;
            toks.push((Tok::Nat(v), l0, c0));
        } else if c.is_ascii_alphabetic() {
            while k < chars.len() && chars[k].is_ascii_alphabetic() {
                k += 1;
            }
            toks.push((Tok::Name(chars[start..k].iter().collect()), l0, c0));
        } else {
            return Err(TermError::Syntax {
                line: l0,
                col: c0,
                msg: format!("unexpected character `{c}`"),
            });
        }
        col += k - start;
    }
    toks.push((Tok::End, line, col));
    Ok(Lexer { toks, pos: 0 })
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail(&self, msg: impl Into<String>) -> TermError {
        let (_, line, col) = self.toks[self.pos];
        TermError::Syntax {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), TermError> {
        if *self.peek() == t {
            self.next();
            Ok(())
        } else {
            Err(self.fail(format!("expected {what}")))
        }
    }

    fn nat(&mut self) -> Result<usize, TermError> {
        match self.peek().clone() {
            Tok::Nat(v) => {
                self.next();
                Ok(v)
            }
            _ => Err(self.fail("expected a number")),
        }
    }
}

struct Parser {
    lx: Lexer,
    sig: Signature,
}

impl Parser {
    fn term(&mut self) -> Result<Term, TermError> {
        let mut parts = vec![self.ten()?];
        while *self.lx.peek() == Tok::Semi {
            self.lx.next();
            parts.push(self.ten()?);
        }
        Term::seq(parts)
    }

    fn ten(&mut self) -> Result<Term, TermError> {
        let mut parts = vec![self.atom()?];
        while *self.lx.peek() == Tok::Hash {
            self.lx.next();
            parts.push(self.atom()?);
        }
        Ok(Term::ten(parts))
    }

    fn atom(&mut self) -> Result<Term, TermError> {
        match self.lx.peek().clone() {
            Tok::LParen => {
                self.lx.next();
                let t = self.term()?;
                self.lx.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            Tok::Name(name) => {
                let here = self.lx.pos;
                self.lx.next();
                let mut args = Vec::new();
                if *self.lx.peek() == Tok::LBrack {
                    self.lx.next();
                    args.push(self.lx.nat()?);
                    if *self.lx.peek() == Tok::Comma {
                        self.lx.next();
                        args.push(self.lx.nat()?);
                    }
                    self.lx.expect(Tok::RBrack, "`]`")?;
                }
                if name == "id" {
                    return match args[..] {
                        [n] => Ok(Term::id(n)),
                        _ => {
                            self.lx.pos = here;
                            Err(self.lx.fail("`id` takes exactly one argument"))
                        }
                    };
                }
                let g = Gen::from_parts(&name, &args).map_err(|e| {
                    self.lx.pos = here;
                    match e {
                        crate::gen::GenError::BadIndex(_) => TermError::Gen(e),
                        _ => self.lx.fail(e.to_string()),
                    }
                })?;
                Term::gen(g, self.sig)
            }
            _ => Err(self.lx.fail("expected `id[n]`, a generator, or `(`")),
        }
    }
}

/// Parse with unit step (`l[n]: n -> n+1`, `U: 1 -> 0`).
pub fn parse_term(text: &str) -> Result<Term, TermError> {
    parse_term_in(text, Signature::UNIT)
}

pub fn parse_term_in(text: &str, sig: Signature) -> Result<Term, TermError> {
    let mut p = Parser { lx: lex(text)?, sig };
    let t = p.term()?;
    if *p.lx.peek() != Tok::End {
        return Err(p.lx.fail("trailing input"));
    }
    Ok(t)
}

pub fn print_term(t: &Term) -> String {
    t.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_term() {
        let t = parse_term("id[2]").unwrap();
        assert!(t.is_identity());
        assert_eq!((t.dom(), t.cod()), (2, 2));
    }

    #[test]
    fn two_layers() {
        let t = parse_term("(X # id[1]) ; (id[1] # X)").unwrap();
        assert_eq!((t.dom(), t.cod()), (3, 3));
        assert_eq!(print_term(&t), "(X # id[1]) ; (id[1] # X)");
    }

    #[test]
    fn precedence() {
        let a = parse_term("X # id[1] ; id[1] # X").unwrap();
        let b = parse_term("(X # id[1]) ; (id[1] # X)").unwrap();
        assert_eq!(a, b);
        let c = parse_term("X ; D").unwrap();
        assert_eq!(c.to_string(), "X ; D");
    }

    #[test]
    fn type_errors_carry_the_pair() {
        assert_eq!(
            parse_term("X ; U").unwrap_err(),
            TermError::Type { cod: 2, dom: 1 }
        );
        assert!(parse_term_in("X ; U", Signature::PAIR).is_ok());
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_term("X ;\n  Q").unwrap_err() {
            TermError::Syntax { line, col, .. } => assert_eq!((line, col), (2, 3)),
            e => panic!("{e:?}"),
        }
        assert!(matches!(parse_term("s[1,2"), Err(TermError::Syntax { .. })));
        assert!(matches!(parse_term("s[2,2]"), Err(TermError::Gen(_))));
    }

    #[test]
    fn nested_groups_print_back() {
        let text = "(U # Uu # id[2]) ; (id[1] # (X ; D))";
        let t = parse_term(text).unwrap();
        assert_eq!(parse_term(&print_term(&t)).unwrap(), t);
    }
}
