//! Signed Boolean expressions in disjunctive normal form.
//!
//! ```text
//! EXPR   := TERM (('|' | OR) TERM)*
//! TERM   := FACTOR (('&' | AND) FACTOR)*
//! FACTOR := ('!' | NOT)? IDENT | ('!' | NOT)? '(' EXPR ')' | true | false
//! ```
//!
//! A negated group is only accepted when normalization is requested.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::function::{minimize, Clause, RegulatorContext, Shape, Sign, MAX_ARITY};

/// Largest number of conjunctions produced while distributing.
const MAX_TERMS: usize = 1 << 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Or(Vec<Expr>),
    And(Vec<Expr>),
    Not(Box<Expr>),
    Var(String),
    Const(bool),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Or,
    And,
    Not,
    Open,
    Close,
    True,
    False,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(at, c)) = chars.peek() {
        let column = text[..at].chars().count() + 1;
        let simple = match c {
            '|' => Some(Token::Or),
            '&' => Some(Token::And),
            '!' => Some(Token::Not),
            '(' => Some(Token::Open),
            ')' => Some(Token::Close),
            _ => None,
        };
        if let Some(tok) = simple {
            chars.next();
            out.push((column, tok));
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut word = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' || c == '.' {
                    word.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            let tok = match word.to_ascii_lowercase().as_str() {
                "or" => Token::Or,
                "and" => Token::And,
                "not" => Token::Not,
                "true" => Token::True,
                "false" => Token::False,
                _ => Token::Ident(word),
            };
            out.push((column, tok));
            continue;
        }
        return Err(Error::Syntax {
            column,
            message: format!("unexpected character {c:?}"),
        });
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end_column: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.end_column, |(c, _)| *c)
    }

    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            column: self.column(),
            message: message.to_string(),
        }
    }

    fn expr(&mut self, depth: usize) -> Result<Expr> {
        if depth > 256 {
            return Err(self.error("nesting too deep"));
        }
        let mut terms = vec![self.term(depth)?];
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            terms.push(self.term(depth)?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Or(terms)
        })
    }

    fn term(&mut self, depth: usize) -> Result<Expr> {
        let mut factors = vec![self.factor(depth)?];
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            factors.push(self.factor(depth)?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::And(factors)
        })
    }

    fn factor(&mut self, depth: usize) -> Result<Expr> {
        let negated = self.peek() == Some(&Token::Not);
        if negated {
            self.pos += 1;
        }
        let inner = match self.peek().cloned() {
            Some(Token::Ident(name)) => {
                self.pos += 1;
                Expr::Var(name)
            }
            Some(Token::True) => {
                self.pos += 1;
                Expr::Const(true)
            }
            Some(Token::False) => {
                self.pos += 1;
                Expr::Const(false)
            }
            Some(Token::Open) => {
                self.pos += 1;
                let e = self.expr(depth + 1)?;
                if self.peek() != Some(&Token::Close) {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                e
            }
            Some(Token::Not) => return Err(self.error("double negation")),
            _ => return Err(self.error("expected a variable or '('")),
        };
        Ok(if negated {
            Expr::Not(Box::new(inner))
        } else {
            inner
        })
    }
}

/// Parses the grammar into a tree without any semantic checks.
pub fn parse_ast(text: &str) -> Result<Expr> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end_column: text.chars().count() + 1,
    };
    let e = parser.expr(0)?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(e)
}

type Literal = (String, bool);
type Dnf = Vec<Vec<Literal>>;

fn push_negations(e: Expr, negate: bool, normalize: bool) -> Result<Expr> {
    Ok(match e {
        Expr::Var(v) if negate => Expr::Not(Box::new(Expr::Var(v))),
        Expr::Var(v) => Expr::Var(v),
        Expr::Const(b) => Expr::Const(b ^ negate),
        Expr::Not(inner) => match *inner {
            Expr::Var(v) if !negate => Expr::Not(Box::new(Expr::Var(v))),
            other if normalize || negate => push_negations(other, !negate, normalize)?,
            other => {
                return Err(Error::NotDnf(format!(
                    "negated group {}",
                    render_ast(&other)
                )))
            }
        },
        Expr::Or(xs) | Expr::And(xs) if negate && !normalize => {
            return Err(Error::NotDnf(format!(
                "negated group of {} operands",
                xs.len()
            )))
        }
        Expr::Or(xs) => {
            let xs = xs
                .into_iter()
                .map(|x| push_negations(x, negate, normalize))
                .collect::<Result<_>>()?;
            if negate {
                Expr::And(xs)
            } else {
                Expr::Or(xs)
            }
        }
        Expr::And(xs) => {
            let xs = xs
                .into_iter()
                .map(|x| push_negations(x, negate, normalize))
                .collect::<Result<_>>()?;
            if negate {
                Expr::Or(xs)
            } else {
                Expr::And(xs)
            }
        }
    })
}

fn to_dnf(e: &Expr) -> Result<Dnf> {
    Ok(match e {
        Expr::Var(v) => vec![vec![(v.clone(), true)]],
        Expr::Not(inner) => match inner.as_ref() {
            Expr::Var(v) => vec![vec![(v.clone(), false)]],
            _ => unreachable!("negations are pushed to variables first"),
        },
        Expr::Const(true) => vec![Vec::new()],
        Expr::Const(false) => Vec::new(),
        Expr::Or(xs) => {
            let mut out = Vec::new();
            for x in xs {
                out.extend(to_dnf(x)?);
                if out.len() > MAX_TERMS {
                    return Err(Error::NotDnf("expansion too large".into()));
                }
            }
            out
        }
        Expr::And(xs) => {
            let mut acc: Dnf = vec![Vec::new()];
            for x in xs {
                let rhs = to_dnf(x)?;
                if acc.len().saturating_mul(rhs.len()) > MAX_TERMS {
                    return Err(Error::NotDnf("expansion too large".into()));
                }
                acc = acc
                    .iter()
                    .flat_map(|l| {
                        rhs.iter()
                            .map(move |r| l.iter().chain(r).cloned().collect())
                    })
                    .collect();
            }
            acc
        }
    })
}

fn render_ast(e: &Expr) -> String {
    match e {
        Expr::Var(v) => v.clone(),
        Expr::Const(b) => b.to_string(),
        Expr::Not(x) => format!("!{}", render_ast(x)),
        Expr::And(xs) => format!(
            "({})",
            xs.iter().map(render_ast).collect::<Vec<_>>().join(" & ")
        ),
        Expr::Or(xs) => format!(
            "({})",
            xs.iter().map(render_ast).collect::<Vec<_>>().join(" | ")
        ),
    }
}

/// A parsed regulatory function: its shape, the inferred signs, and the
/// regulator names in first-appearance order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedExpression {
    pub shape: Shape,
    pub ctx: RegulatorContext,
    pub names: Vec<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Push negations inward with De Morgan's laws instead of rejecting
    /// negated groups.
    pub normalize: bool,
}

pub fn parse_expression(text: &str) -> Result<ParsedExpression> {
    parse_expression_with(text, ParseOptions::default())
}

pub fn parse_expression_with(text: &str, options: ParseOptions) -> Result<ParsedExpression> {
    let ast = parse_ast(text)?;
    let dnf = to_dnf(&push_negations(ast, false, options.normalize)?)?;

    let mut names: Vec<String> = Vec::new();
    let mut signs: Vec<Sign> = Vec::new();
    for (name, positive) in dnf.iter().flatten() {
        let sign = if *positive {
            Sign::Positive
        } else {
            Sign::Negative
        };
        match names.iter().position(|n| n == name) {
            Some(k) if signs[k] != sign => return Err(Error::DualRegulation(name.clone())),
            Some(_) => {}
            None => {
                names.push(name.clone());
                signs.push(sign);
            }
        }
    }
    if dnf.is_empty() || dnf.iter().any(|t| t.is_empty()) {
        return Err(Error::ConstantExpression);
    }
    if names.len() > MAX_ARITY {
        return Err(Error::ArityTooLarge {
            arity: names.len(),
            limit: MAX_ARITY,
        });
    }
    let clauses = dnf
        .iter()
        .map(|term| {
            Clause::from_indices(
                term.iter()
                    .map(|(n, _)| names.iter().position(|m| m == n).unwrap() + 1),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let clauses = minimize(clauses)?;
    let used: BTreeSet<usize> = clauses.iter().flat_map(|c| c.indices()).collect();
    if let Some(k) = (1..=names.len()).find(|k| !used.contains(k)) {
        return Err(Error::NonEssential(names[k - 1].clone()));
    }
    Ok(ParsedExpression {
        shape: Shape::new(names.len(), clauses)?,
        ctx: RegulatorContext::new(signs)?,
        names,
    })
}

/// CDNF text for a shape, e.g. `s1 | (s2 & !s3)`.
pub fn render_function(shape: &Shape, ctx: &RegulatorContext, names: &[String]) -> String {
    let multi = shape.len() > 1;
    shape
        .clauses()
        .iter()
        .map(|c| {
            let lits: Vec<String> = c
                .indices()
                .map(|k| match ctx.sign(k) {
                    Sign::Positive => names[k - 1].clone(),
                    Sign::Negative => format!("!{}", names[k - 1]),
                })
                .collect();
            if multi && lits.len() > 1 {
                format!("({})", lits.join(" & "))
            } else {
                lits.join(" & ")
            }
        })
        .collect::<Vec<_>>()
        .join(" | ")
}
