//! Line-oriented model files.
//!
//! ```text
//! targets, factors
//! # comment
//! s1, s1 | (s2 & !s3)
//! s2, !s3
//! s3, !s2
//! ```
//!
//! A third column holds a probability. Repeating a target with different
//! expressions then declares an ensemble of alternatives for it.

use crate::dynamics::{BooleanNetwork, Component, UpdateFunction};
use crate::error::{Error, Result};
use crate::function::{Clause, Shape, Sign};
use crate::io::expr::{parse_expression_with, render_function, ParseOptions, ParsedExpression};

#[derive(Clone, Debug, PartialEq)]
pub struct Declaration {
    pub name: String,
    pub expression: String,
    pub probability: Option<f64>,
    /// 1-based line in the source text.
    pub line: usize,
}

/// Declarations as they appear in the file, before name resolution.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ModelDocument {
    pub declarations: Vec<Declaration>,
}

/// A resolved component function with its alternatives.
#[derive(Clone, Debug, PartialEq)]
pub struct ResolvedComponent {
    pub component: Component,
    /// Alternative shapes over the component's regulators, with
    /// probabilities; empty when the file gives no probability column.
    pub alternatives: Vec<(Shape, f64)>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

fn is_header(fields: &[&str]) -> bool {
    fields.len() >= 2
        && fields[0].eq_ignore_ascii_case("targets")
        && fields[1].eq_ignore_ascii_case("factors")
        && (fields.len() == 2
            || (fields.len() == 3 && fields[2].to_ascii_lowercase().starts_with("probabilit")))
}

impl ModelDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let mut declarations = Vec::new();
        let mut header: Option<usize> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split(',').map(str::trim).collect();
            let Some(columns) = header else {
                if !is_header(&fields) {
                    return Err(Error::Syntax {
                        column: 1,
                        message: "expected header `targets, factors`".into(),
                    }
                    .at_line(line));
                }
                header = Some(fields.len());
                continue;
            };
            if fields.len() != columns {
                return Err(Error::Syntax {
                    column: 1,
                    message: format!(
                        "expected {columns} comma-separated fields, found {}",
                        fields.len()
                    ),
                }
                .at_line(line));
            }
            if !is_identifier(fields[0]) {
                return Err(Error::Syntax {
                    column: 1,
                    message: format!("invalid component name {:?}", fields[0]),
                }
                .at_line(line));
            }
            let probability = match fields.get(2) {
                None => None,
                Some(p) => Some(p.parse::<f64>().map_err(|_| {
                    Error::Syntax {
                        column: content.rfind(',').map_or(1, |c| c + 2),
                        message: format!("invalid probability {p:?}"),
                    }
                    .at_line(line)
                })?),
            };
            declarations.push(Declaration {
                name: fields[0].to_string(),
                expression: fields[1].to_string(),
                probability,
                line,
            });
        }
        if header.is_none() {
            return Err(Error::Syntax {
                column: 1,
                message: "missing header `targets, factors`".into(),
            }
            .at_line(1));
        }
        Ok(ModelDocument { declarations })
    }

    /// Component names in declaration order, without repeats.
    pub fn names(&self) -> Vec<&str> {
        let mut names: Vec<&str> = Vec::new();
        for d in &self.declarations {
            if !names.contains(&d.name.as_str()) {
                names.push(&d.name);
            }
        }
        names
    }

    pub fn has_probabilities(&self) -> bool {
        self.declarations.iter().any(|d| d.probability.is_some())
    }

    /// Resolves every declaration. Without a probability column each
    /// component must be declared once. With one, repeated declarations are
    /// alternatives and the most probable one (first on ties) becomes the
    /// component's reference function.
    pub fn resolve(&self, options: ParseOptions) -> Result<Vec<ResolvedComponent>> {
        let names = self.names();
        let ensembles = self.has_probabilities();
        let mut out: Vec<Option<ResolvedComponent>> = vec![None; names.len()];
        let mut best: Vec<f64> = vec![f64::NEG_INFINITY; names.len()];
        for d in &self.declarations {
            let i = names.iter().position(|n| *n == d.name).unwrap();
            if out[i].is_some() && !ensembles {
                return Err(Error::DuplicateComponent(d.name.clone()).at_line(d.line));
            }
            let component =
                declaration_component(d, &names, options).map_err(|e| e.at_line(d.line))?;
            let prob = d.probability.unwrap_or(1.0);
            match &mut out[i] {
                None => {
                    best[i] = prob;
                    out[i] = Some(ResolvedComponent {
                        alternatives: alternative(&component, prob),
                        component,
                    });
                }
                Some(existing) => {
                    if component.regulators() != existing.component.regulators()
                        || component.context() != existing.component.context()
                    {
                        return Err(Error::InvalidNetwork(format!(
                            "alternatives for {} use different regulators",
                            d.name
                        ))
                        .at_line(d.line));
                    }
                    existing.alternatives.extend(alternative(&component, prob));
                    if prob > best[i] {
                        best[i] = prob;
                        existing.component = component;
                    }
                }
            }
        }
        let mut resolved: Vec<ResolvedComponent> = out.into_iter().map(Option::unwrap).collect();
        if !ensembles {
            for r in &mut resolved {
                r.alternatives.clear();
            }
        }
        Ok(resolved)
    }

    pub fn to_network(&self) -> Result<BooleanNetwork> {
        self.to_network_with(ParseOptions::default())
    }

    pub fn to_network_with(&self, options: ParseOptions) -> Result<BooleanNetwork> {
        let components = self
            .resolve(options)?
            .into_iter()
            .map(|r| r.component)
            .collect();
        BooleanNetwork::new(components)
    }
}

fn alternative(component: &Component, prob: f64) -> Vec<(Shape, f64)> {
    component
        .shape()
        .map(|s| vec![(s.clone(), prob)])
        .unwrap_or_default()
}

fn declaration_component(
    d: &Declaration,
    names: &[&str],
    options: ParseOptions,
) -> Result<Component> {
    let text = d.expression.trim();
    if text.eq_ignore_ascii_case("true") || text.eq_ignore_ascii_case("false") {
        return Ok(Component::constant(
            d.name.clone(),
            text.eq_ignore_ascii_case("true"),
        ));
    }
    let parsed = parse_expression_with(text, options)?;
    canonical_component(&d.name, &parsed, names)
}

/// Builds a component whose regulators are listed in declaration order,
/// relabelling the shape's indices to match.
fn canonical_component(name: &str, parsed: &ParsedExpression, names: &[&str]) -> Result<Component> {
    let mut indexed: Vec<(usize, usize)> = Vec::with_capacity(parsed.names.len());
    for (k, var) in parsed.names.iter().enumerate() {
        let global = names
            .iter()
            .position(|n| n == var)
            .ok_or_else(|| Error::UnknownVariable(var.clone()))?;
        indexed.push((global, k));
    }
    indexed.sort_unstable();
    // new position of old regulator k
    let mut to_new = vec![0usize; indexed.len()];
    for (new, &(_, old)) in indexed.iter().enumerate() {
        to_new[old] = new;
    }
    let clauses = parsed
        .shape
        .clauses()
        .iter()
        .map(|c| Clause::from_indices(c.indices().map(|k| to_new[k - 1] + 1)))
        .collect::<Result<Vec<_>>>()?;
    let regulators: Vec<(usize, Sign)> = indexed
        .iter()
        .map(|&(global, old)| (global, parsed.ctx.sign(old + 1)))
        .collect();
    Component::regulated(name, regulators, Shape::new(parsed.names.len(), clauses)?)
}

/// Parses `text` as an alternative function for component `i`, over the
/// same regulators and signs.
pub fn parse_function_for(bn: &BooleanNetwork, i: usize, text: &str) -> Result<Shape> {
    let c = bn.component(i);
    let names: Vec<&str> = bn.names().collect();
    let parsed = parse_expression_with(text, ParseOptions::default())?;
    let candidate = canonical_component(c.name(), &parsed, &names)?;
    let signs = |c: &Component| c.context().map(|ctx| ctx.signs().to_vec());
    if candidate.regulators() != c.regulators() || signs(&candidate) != signs(c) {
        return Err(Error::InvalidNetwork(format!(
            "{text:?} does not use the regulators of {}",
            c.name()
        )));
    }
    Ok(candidate.shape().cloned().expect("regulated"))
}

pub fn parse_model(text: &str) -> Result<BooleanNetwork> {
    ModelDocument::parse(text)?.to_network()
}

pub fn parse_model_with(text: &str, options: ParseOptions) -> Result<BooleanNetwork> {
    ModelDocument::parse(text)?.to_network_with(options)
}

/// CDNF text of one component's function in terms of component names.
pub fn render_component(bn: &BooleanNetwork, i: usize) -> String {
    let c = bn.component(i);
    match c.function() {
        UpdateFunction::Constant(v) => v.to_string(),
        UpdateFunction::Regulated { shape, ctx } => {
            let names: Vec<String> = c
                .regulators()
                .iter()
                .map(|&r| bn.component(r).name().to_string())
                .collect();
            render_function(shape, ctx, &names)
        }
    }
}

pub fn render_model(bn: &BooleanNetwork) -> String {
    let mut out = String::from("targets, factors\n");
    for (i, c) in bn.components().iter().enumerate() {
        out.push_str(c.name());
        out.push_str(", ");
        out.push_str(&render_component(bn, i));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::stable_states;

    const TOY: &str = "targets, factors\ns1, s1 | (s2 & !s3)\ns2, !s3\ns3, !s2\n";

    #[test]
    fn toy_model_stable_states() {
        let bn = parse_model(TOY).unwrap();
        let mut stable: Vec<String> = stable_states(&bn)
            .unwrap()
            .iter()
            .map(|s| s.to_string())
            .collect();
        stable.sort();
        assert_eq!(stable, ["001", "101", "110"]);
    }

    #[test]
    fn crlf_comments_and_keywords() {
        let text = "# toy\r\nTargets, Factors\r\n\r\ns1, s1 OR (s2 AND NOT s3) # f1\r\ns2, !s3\r\ns3, !s2\r\n";
        assert_eq!(parse_model(text).unwrap(), parse_model(TOY).unwrap());
    }

    #[test]
    fn line_numbers_on_errors() {
        let text = "targets, factors\nX, Y & !Y\nY, X\n";
        assert_eq!(
            parse_model(text),
            Err(Error::AtLine {
                line: 2,
                source: Box::new(Error::DualRegulation("Y".into()))
            })
        );
        let unknown = parse_model("targets, factors\nA, B\n").unwrap_err();
        assert!(
            matches!(unknown, Error::AtLine { line: 2, ref source } if **source == Error::UnknownVariable("B".into()))
        );
        let dup = parse_model("targets, factors\nA, A\nA, !A\n").unwrap_err();
        assert!(
            matches!(dup, Error::AtLine { line: 3, ref source } if matches!(**source, Error::DuplicateComponent(_)))
        );
        assert!(parse_model("A, A\n").unwrap_err().is_parse_error());
        assert!(parse_model("").unwrap_err().is_parse_error());
    }

    #[test]
    fn inputs_are_constants() {
        let bn = parse_model("targets, factors\nI, false\nA, I & !B\nB, A\n").unwrap();
        assert!(bn.component(0).is_input());
        assert_eq!(bn.component(1).regulators(), &[0, 2]);
    }

    #[test]
    fn regulators_follow_declaration_order() {
        let a = parse_model("targets, factors\na, c | (a & b)\nb, a\nc, b\n").unwrap();
        let b = parse_model("targets, factors\na, (b & a) | c\nb, a\nc, b\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.component(0).shape().unwrap().to_string(), "{{3},{1,2}}");
    }

    #[test]
    fn render_round_trip() {
        let text = "targets, factors\nx, (z & !y) | (w & !y) | (x & w)\ny, !x\nz, x | y\nw, z\n";
        let bn = parse_model(text).unwrap();
        let rendered = render_model(&bn);
        assert_eq!(parse_model(&rendered).unwrap(), bn);
        assert_eq!(render_model(&parse_model(&rendered).unwrap()), rendered);
    }

    #[test]
    fn probability_column() {
        let text =
            "targets, factors, probability\nA, B | C, 0.3\nA, B & C, 0.7\nB, A, 1\nC, C, 1\n";
        let doc = ModelDocument::parse(text).unwrap();
        assert!(doc.has_probabilities());
        let resolved = doc.resolve(ParseOptions::default()).unwrap();
        assert_eq!(resolved.len(), 3);
        assert_eq!(resolved[0].alternatives.len(), 2);
        assert_eq!(
            resolved[0].component.shape().unwrap().to_string(),
            "{{1,2}}"
        );
        let bad = "targets, factors, probability\nA, B, 0.5\nA, B & C, 0.5\nB, A, 1\nC, C, 1\n";
        assert!(ModelDocument::parse(bad)
            .unwrap()
            .resolve(ParseOptions::default())
            .is_err());
    }
}
