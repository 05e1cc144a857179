//! Propositional formulas: syntax trees, a recursive-descent parser and a
//! precedence-aware printer.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! formula := imp
//! imp     := or ("->" imp)?          right-associative
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "~" unary | "(" formula ")" | "false" | atom
//! atom    := [a-zA-Z_][a-zA-Z0-9_]*
//! ```
//!
//! Precedence: `~` > `&` > `|` > `->`.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::worlds::{Vocabulary, WorldSet};

/// A formula over some vocabulary; atoms are stored by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    False,
    Atom(usize),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// The worlds satisfying this formula.
    pub fn models(&self, vocab: &Vocabulary) -> WorldSet {
        match self {
            Formula::False => WorldSet::EMPTY,
            Formula::Atom(i) => vocab.atom_worlds(*i),
            Formula::Not(a) => vocab.complement(a.models(vocab)),
            Formula::And(a, b) => a.models(vocab) & b.models(vocab),
            Formula::Or(a, b) => a.models(vocab) | b.models(vocab),
            Formula::Implies(a, b) => vocab.complement(a.models(vocab)) | b.models(vocab),
        }
    }

    /// `Some(index)` when the formula is a bare atom. The identity backend
    /// accepts only such formulas.
    pub fn as_atom(&self) -> Option<usize> {
        match self {
            Formula::Atom(i) => Some(*i),
            _ => None,
        }
    }

    pub fn display<'a>(&'a self, vocab: &'a Vocabulary) -> impl fmt::Display + 'a {
        FormulaDisplay {
            formula: self,
            vocab,
        }
    }
}

/// `Mod(X)` for a set of formulas: the semantic representation of `Cn(X)`.
pub fn models_of(formulas: &[Formula], vocab: &Vocabulary) -> WorldSet {
    formulas
        .iter()
        .fold(vocab.all_worlds(), |acc, f| acc & f.models(vocab))
}

/// `a ∈ Cn(X)`.
pub fn entails(formulas: &[Formula], conclusion: &Formula, vocab: &Vocabulary) -> bool {
    models_of(formulas, vocab).subset_of(conclusion.models(vocab))
}

/// Canonical formula with exactly the given model set: a disjunction of
/// per-world conjunctions of literals, worlds ascending, atoms in vocabulary
/// order, folded to the left. The empty set yields `false` and the full set
/// the fixed tautology `~false`.
pub fn characteristic_formula(mask: WorldSet, vocab: &Vocabulary) -> Formula {
    if mask.is_empty() {
        return Formula::False;
    }
    if mask == vocab.all_worlds() {
        return Formula::not(Formula::False);
    }
    let world_conj = |w: u8| {
        let mut conj: Option<Formula> = None;
        for i in 0..vocab.atom_count() {
            let lit = if w >> i & 1 == 1 {
                Formula::Atom(i)
            } else {
                Formula::not(Formula::Atom(i))
            };
            conj = Some(match conj {
                None => lit,
                Some(c) => Formula::and(c, lit),
            });
        }
        conj.expect("vocabulary is nonempty")
    };
    let mut out: Option<Formula> = None;
    for w in mask.iter() {
        let c = world_conj(w);
        out = Some(match out {
            None => c,
            Some(o) => Formula::or(o, c),
        });
    }
    out.expect("mask is nonempty")
}

struct FormulaDisplay<'a> {
    formula: &'a Formula,
    vocab: &'a Vocabulary,
}

// Binding strength used by the printer; parenthesize a child whose own level
// is below what its position requires.
fn level(f: &Formula) -> u8 {
    match f {
        Formula::Implies(..) => 1,
        Formula::Or(..) => 2,
        Formula::And(..) => 3,
        Formula::Not(..) | Formula::Atom(..) | Formula::False => 4,
    }
}

fn write_formula(
    f: &mut fmt::Formatter<'_>,
    formula: &Formula,
    vocab: &Vocabulary,
    min_level: u8,
) -> fmt::Result {
    let paren = level(formula) < min_level;
    if paren {
        f.write_str("(")?;
    }
    match formula {
        Formula::False => f.write_str("false")?,
        Formula::Atom(i) => f.write_str(vocab.atom_name(*i))?,
        Formula::Not(a) => {
            f.write_str("~")?;
            write_formula(f, a, vocab, 4)?;
        }
        Formula::And(a, b) => {
            write_formula(f, a, vocab, 3)?;
            f.write_str(" & ")?;
            write_formula(f, b, vocab, 4)?;
        }
        Formula::Or(a, b) => {
            write_formula(f, a, vocab, 2)?;
            f.write_str(" | ")?;
            write_formula(f, b, vocab, 3)?;
        }
        Formula::Implies(a, b) => {
            write_formula(f, a, vocab, 2)?;
            f.write_str(" -> ")?;
            write_formula(f, b, vocab, 1)?;
        }
    }
    if paren {
        f.write_str(")")?;
    }
    Ok(())
}

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self.formula, self.vocab, 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnknownAtom(String),
    UnbalancedParen,
    UnexpectedEnd,
    TrailingInput,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected character `{c}` at offset {}", self.position)
            }
            ParseErrorKind::UnknownAtom(a) => {
                write!(f, "unknown atom `{a}` at offset {}", self.position)
            }
            ParseErrorKind::UnbalancedParen => {
                write!(f, "unbalanced parenthesis at offset {}", self.position)
            }
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::TrailingInput => {
                write!(f, "trailing input at offset {}", self.position)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Atom(String),
    False,
    Not,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '~' => {
                tokens.push((Token::Not, i));
                i += 1;
            }
            '&' => {
                tokens.push((Token::And, i));
                i += 1;
            }
            '|' => {
                tokens.push((Token::Or, i));
                i += 1;
            }
            '(' => {
                tokens.push((Token::LParen, i));
                i += 1;
            }
            ')' => {
                tokens.push((Token::RParen, i));
                i += 1;
            }
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    tokens.push((Token::Arrow, i));
                    i += 2;
                } else {
                    return Err(ParseError {
                        position: i,
                        kind: ParseErrorKind::UnexpectedChar('-'),
                    });
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                if word == "false" {
                    tokens.push((Token::False, start));
                } else {
                    tokens.push((Token::Atom(String::from(word)), start));
                }
            }
            other => {
                return Err(ParseError {
                    position: i,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    vocab: &'a Vocabulary,
    input_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.input_len, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<(Token, usize)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if self.peek() == Some(&Token::Arrow) {
            self.bump();
            let rhs = self.imp()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Token::Or) {
            self.bump();
            lhs = Formula::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.bump();
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.bump() {
            Some((Token::Not, _)) => Ok(Formula::not(self.unary()?)),
            Some((Token::LParen, open)) => {
                let inner = self.imp()?;
                match self.bump() {
                    Some((Token::RParen, _)) => Ok(inner),
                    _ => Err(ParseError {
                        position: open,
                        kind: ParseErrorKind::UnbalancedParen,
                    }),
                }
            }
            Some((Token::False, _)) => Ok(Formula::False),
            Some((Token::Atom(name), pos)) => match self.vocab.atom_index(&name) {
                Some(i) => Ok(Formula::Atom(i)),
                None => Err(ParseError {
                    position: pos,
                    kind: ParseErrorKind::UnknownAtom(name),
                }),
            },
            Some((Token::RParen, pos)) => Err(ParseError {
                position: pos,
                kind: ParseErrorKind::UnbalancedParen,
            }),
            Some((_, pos)) => Err(ParseError {
                position: pos,
                kind: ParseErrorKind::UnexpectedEnd,
            }),
            None => Err(ParseError {
                position: self.input_len,
                kind: ParseErrorKind::UnexpectedEnd,
            }),
        }
    }
}

/// Parses a formula against a vocabulary.
pub fn parse_formula(text: &str, vocab: &Vocabulary) -> Result<Formula, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        vocab,
        input_len: text.len(),
    };
    let formula = parser.imp()?;
    if parser.pos != parser.tokens.len() {
        return Err(ParseError {
            position: parser.here(),
            kind: ParseErrorKind::TrailingInput,
        });
    }
    Ok(formula)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn vocab() -> Vocabulary {
        Vocabulary::new(["p", "q", "r"]).unwrap()
    }

    #[test]
    fn parses_precedence_and_associativity() {
        let v = vocab();
        assert_eq!(
            parse_formula("p & ~q", &v).unwrap(),
            Formula::and(Formula::Atom(0), Formula::not(Formula::Atom(1)))
        );
        assert_eq!(parse_formula("false", &v).unwrap(), Formula::False);
        // `->` is right-associative
        assert_eq!(
            parse_formula("p -> q -> r", &v).unwrap(),
            Formula::implies(
                Formula::Atom(0),
                Formula::implies(Formula::Atom(1), Formula::Atom(2))
            )
        );
        // `~` binds tighter than `&` binds tighter than `|` binds tighter than `->`
        assert_eq!(
            parse_formula("~p & q | r -> p", &v).unwrap(),
            Formula::implies(
                Formula::or(
                    Formula::and(Formula::not(Formula::Atom(0)), Formula::Atom(1)),
                    Formula::Atom(2)
                ),
                Formula::Atom(0)
            )
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        let v = vocab();
        let err = parse_formula("p & z", &v).unwrap_err();
        assert_eq!(err.position, 4);
        assert!(matches!(err.kind, ParseErrorKind::UnknownAtom(_)));

        let err = parse_formula("(p & q", &v).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnbalancedParen);

        let err = parse_formula("p @ q", &v).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedChar('@'));
        assert_eq!(err.position, 2);

        let err = parse_formula("p q", &v).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::TrailingInput);

        assert!(parse_formula("p &", &v).is_err());
        assert!(parse_formula("p - q", &v).is_err());
    }

    #[test]
    fn models_by_truth_table() {
        let v = Vocabulary::new(["p", "q"]).unwrap();
        let f = parse_formula("p -> q", &v).unwrap();
        // worlds: 0=00, 1=10, 2=01, 3=11 in pq bit order
        assert_eq!(f.models(&v), WorldSet(0b1101));
        let x = vec![
            parse_formula("p", &v).unwrap(),
            parse_formula("p -> q", &v).unwrap(),
        ];
        assert_eq!(models_of(&x, &v), WorldSet(0b1000));
        assert!(entails(&x, &parse_formula("q", &v).unwrap(), &v));
        assert!(!entails(
            &[parse_formula("p", &v).unwrap()],
            &parse_formula("q", &v).unwrap(),
            &v
        ));
        // inconsistent premises entail everything
        let bad = vec![
            parse_formula("p", &v).unwrap(),
            parse_formula("~p", &v).unwrap(),
        ];
        assert_eq!(models_of(&bad, &v), WorldSet::EMPTY);
        // the empty premise set entails only tautologies
        assert!(entails(&[], &parse_formula("p | ~p", &v).unwrap(), &v));
        assert!(!entails(&[], &parse_formula("p", &v).unwrap(), &v));
    }

    #[test]
    fn characteristic_formula_round_trips() {
        let v = Vocabulary::new(["p", "q"]).unwrap();
        for mask in 0..16u64 {
            let f = characteristic_formula(WorldSet(mask), &v);
            assert_eq!(f.models(&v), WorldSet(mask));
            // printing then reparsing gives the same tree
            let text = format!("{}", f.display(&v));
            assert_eq!(parse_formula(&text, &v).unwrap(), f);
        }
        assert_eq!(characteristic_formula(WorldSet::EMPTY, &v), Formula::False);
        assert_eq!(
            characteristic_formula(WorldSet(0b1000), &v),
            Formula::and(Formula::Atom(0), Formula::Atom(1))
        );
        assert_eq!(
            characteristic_formula(v.all_worlds(), &v),
            Formula::not(Formula::False)
        );
    }
}
