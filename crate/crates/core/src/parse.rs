//! Recursive-descent parser for formulas and negation-words.
//!
//! The Unicode forms `¬ ⊥ ∧ ∨ → ↔` are accepted wherever their ASCII
//! spellings are.
//!
//! ```text
//! formula := imp ( "<->" formula )?
//! imp     := or ( "->" imp )?
//! or      := and ( "|" and )*
//! and     := unary ( "&" unary )*
//! unary   := ("~" | "!" | "¬") unary | atom
//! atom    := var | "0" | "1" | "bot" | "⊥" | "(" formula ")"
//! var     := "p" ( [1-9][0-9]* )?
//! ```

use std::fmt;

use crate::formula::{Formula, NWord, NegKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Var(u32),
    Zero,
    One,
    Bot,
    Tilde,
    Bang,
    And,
    Or,
    Arrow,
    Iff,
    LParen,
    RParen,
}

impl Tok {
    fn describe(self) -> String {
        match self {
            Tok::Var(1) => "'p'".into(),
            Tok::Var(i) => format!("'p{i}'"),
            Tok::Zero => "'0'".into(),
            Tok::One => "'1'".into(),
            Tok::Bot => "'bot'".into(),
            Tok::Tilde => "'~'".into(),
            Tok::Bang => "'!'".into(),
            Tok::And => "'&'".into(),
            Tok::Or => "'|'".into(),
            Tok::Arrow => "'->'".into(),
            Tok::Iff => "'<->'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

fn err(position: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '~' => Tok::Tilde,
            '!' | '¬' => Tok::Bang,
            '&' | '∧' => Tok::And,
            '|' | '∨' => Tok::Or,
            '→' => Tok::Arrow,
            '↔' => Tok::Iff,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0' => Tok::Zero,
            '1' => Tok::One,
            '⊥' => Tok::Bot,
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Tok::Arrow
            }
            '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                i += 2;
                Tok::Iff
            }
            'b' if chars[i..].starts_with(&['b', 'o', 't']) => {
                i += 2;
                Tok::Bot
            }
            'p' => {
                let mut j = i + 1;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let index = if j == i + 1 {
                    1
                } else {
                    if chars[i + 1] == '0' {
                        return Err(err(i + 1, "variable index must not start with 0"));
                    }
                    let digits: String = chars[i + 1..j].iter().collect();
                    digits
                        .parse::<u32>()
                        .map_err(|_| err(i + 1, "variable index out of range"))?
                };
                i = j - 1;
                Tok::Var(index)
            }
            other => return Err(err(i, format!("unexpected character '{other}'"))),
        };
        toks.push((start, tok));
        i += 1;
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|&(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn eat(&mut self, tok: Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.imp()?;
        if self.eat(Tok::Iff) {
            let rhs = self.formula()?;
            return Ok(Formula::iff(lhs, rhs));
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if self.eat(Tok::Arrow) {
            let rhs = self.imp()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while self.eat(Tok::Or) {
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(Tok::And) {
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.eat(Tok::Tilde) {
            return Ok(Formula::int_neg(self.unary()?));
        }
        if self.eat(Tok::Bang) {
            return Ok(Formula::perp_neg(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let at = self.offset();
        let Some(tok) = self.peek() else {
            return Err(err(at, "unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Tok::Var(i) => Ok(Formula::Var(i)),
            Tok::Zero => Ok(Formula::Zero),
            Tok::One => Ok(Formula::One),
            Tok::Bot => Ok(Formula::Bot),
            Tok::LParen => {
                let inner = self.formula()?;
                if !self.eat(Tok::RParen) {
                    return Err(err(self.offset(), "expected ')'"));
                }
                Ok(inner)
            }
            other => Err(err(at, format!("unexpected {}", other.describe()))),
        }
    }
}

/// Parses a formula of the full language.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(err(0, "empty input"));
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
    };
    let f = parser.formula()?;
    if let Some(tok) = parser.peek() {
        return Err(err(parser.offset(), format!("unexpected {}", tok.describe())));
    }
    Ok(f)
}

/// Parses `("~" | "!")* "p"`; `¬` is accepted for `!`.
pub fn parse_nword(text: &str) -> Result<NWord, ParseError> {
    let mut negs = Vec::new();
    let mut seen_p = false;
    for (i, c) in text.chars().enumerate() {
        if c.is_whitespace() {
            continue;
        }
        if seen_p {
            return Err(err(i, format!("unexpected '{c}' after the variable")));
        }
        match c {
            '~' => negs.push(NegKind::Int),
            '!' | '¬' => negs.push(NegKind::Perp),
            'p' => seen_p = true,
            other => return Err(err(i, format!("unexpected character '{other}' in negation-word"))),
        }
    }
    if !seen_p {
        return Err(err(text.chars().count(), "expected the variable 'p'"));
    }
    Ok(NWord::new(negs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use NegKind::*;

    #[test]
    fn excluded_middle() {
        assert_eq!(
            parse_formula("p | !p").unwrap(),
            Formula::or(Formula::p(), Formula::perp_neg(Formula::p()))
        );
    }

    #[test]
    fn constants() {
        assert_eq!(parse_formula("1").unwrap(), Formula::One);
        assert_eq!(parse_formula("0").unwrap(), Formula::Zero);
        assert_eq!(parse_formula("bot").unwrap(), Formula::Bot);
        assert_eq!(parse_formula("⊥").unwrap(), Formula::Bot);
    }

    #[test]
    fn stacked_negations() {
        let expected = Formula::int_neg(Formula::perp_neg(Formula::int_neg(Formula::int_neg(
            Formula::p(),
        ))));
        assert_eq!(parse_formula("~!~~p").unwrap(), expected);
        assert_eq!(parse_formula("~¬~~p").unwrap(), expected);
    }

    #[test]
    fn precedence_and_associativity() {
        let p = Formula::p;
        let q = || Formula::Var(2);
        let r = || Formula::Var(3);
        assert_eq!(
            parse_formula("p -> p2 -> p3").unwrap(),
            Formula::imp(p(), Formula::imp(q(), r()))
        );
        assert_eq!(
            parse_formula("p | p2 & p3").unwrap(),
            Formula::or(p(), Formula::and(q(), r()))
        );
        assert_eq!(
            parse_formula("~p & p2 | p3 -> 0").unwrap(),
            Formula::imp(
                Formula::or(Formula::and(Formula::int_neg(p()), q()), r()),
                Formula::Zero
            )
        );
        assert_eq!(
            parse_formula("p | p2 | p3").unwrap(),
            Formula::or(Formula::or(p(), q()), r())
        );
    }

    #[test]
    fn biconditional_is_desugared() {
        assert_eq!(
            parse_formula("p <-> ~~p").unwrap(),
            Formula::iff(Formula::p(), Formula::int_neg(Formula::int_neg(Formula::p())))
        );
    }

    #[test]
    fn explicit_variable_indices() {
        assert_eq!(parse_formula("p1").unwrap(), Formula::p());
        assert_eq!(parse_formula("p12").unwrap(), Formula::Var(12));
        assert!(parse_formula("p0").is_err());
        assert!(parse_formula("p01").is_err());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(parse_formula("").unwrap_err().position, 0);
        assert_eq!(parse_formula("   ").unwrap_err().message, "empty input");
        assert_eq!(parse_formula("(p | 1").unwrap_err().position, 6);
        assert_eq!(parse_formula("p)").unwrap_err().position, 1);
        assert_eq!(parse_formula("p q").unwrap_err().position, 2);
        assert_eq!(parse_formula("p & ").unwrap_err().position, 4);
        assert_eq!(parse_formula("p - q").unwrap_err().position, 2);
        assert_eq!(parse_formula("bo").unwrap_err().position, 0);
    }

    #[test]
    fn nwords() {
        assert_eq!(parse_nword("p").unwrap(), NWord::var());
        assert_eq!(
            parse_nword("!!~~p").unwrap(),
            NWord::new(vec![Perp, Perp, Int, Int])
        );
        assert_eq!(parse_nword("¬~p").unwrap(), NWord::new(vec![Perp, Int]));
        assert!(parse_nword("~p q").is_err());
        assert!(parse_nword("~(p)").is_err());
        assert!(parse_nword("~~").is_err());
        assert!(parse_nword("p2").is_err());
    }
}
