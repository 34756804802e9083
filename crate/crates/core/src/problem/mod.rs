//! Problem files, command execution and reports.
//!
//! A problem file is line oriented; `#` starts a comment.
//!
//! ```text
//! ring x1 x2 x3
//! space: x2*x1^2 - x3^2
//! ideal A: x2, x3
//! cycle W: 2*(A) + (O)
//! point P: 0, 0, 0
//! map G: t1 t2 | t1^2, t1*t2, t2
//! expect segre --ideal A --point P => segre=[0,1,2] stable=true
//! ```
//!
//! `expect` lines hold a command and the values its report must contain;
//! the `check` command replays them.

mod command;
mod report;

use std::collections::BTreeMap;

use serde_json::Value;

use crate::algebra::{AffinePoint, PolyParser, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::groebner::IdealRep;
use crate::intersect::CycleRep;

pub use command::{check, execute, CheckOutcome, Command, Invocation, OutputFormat};
pub use report::Report;

/// A parametrization `t ↦ (γ_1(t), ..., γ_N(t))`.
#[derive(Clone, Debug)]
pub struct MapDef {
    pub params: Ring,
    pub components: Vec<Polynomial>,
}

/// A recorded `expect` line.
#[derive(Clone, Debug)]
pub struct Expectation {
    pub line: usize,
    pub args: Vec<String>,
    pub expected: Vec<(String, Value)>,
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub ring: Ring,
    pub space: IdealRep,
    ideals: BTreeMap<String, IdealRep>,
    cycles: BTreeMap<String, CycleRep>,
    points: BTreeMap<String, AffinePoint>,
    maps: BTreeMap<String, MapDef>,
    pub expectations: Vec<Expectation>,
}

impl ProblemFile {
    pub fn ideal(&self, name: &str) -> Result<&IdealRep> {
        self.ideals
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// A named cycle, or a named ideal taken with coefficient 1.
    pub fn cycle(&self, name: &str) -> Result<CycleRep> {
        if let Some(c) = self.cycles.get(name) {
            return Ok(c.clone());
        }
        Ok(CycleRep::from_ideal(self.ideal(name)?.clone()))
    }

    /// Named ideals in name order.
    pub fn ideals(&self) -> impl Iterator<Item = (&str, &IdealRep)> {
        self.ideals.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn point(&self, name: &str) -> Result<&AffinePoint> {
        self.points
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn map(&self, name: &str) -> Result<&MapDef> {
        self.maps
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    fn taken(&self, name: &str) -> bool {
        self.ideals.contains_key(name)
            || self.cycles.contains_key(name)
            || self.points.contains_key(name)
            || self.maps.contains_key(name)
    }
}

/// A header token with its 1-based column.
#[derive(Clone, Debug)]
struct Word<'a> {
    text: &'a str,
    column: usize,
}

fn syntax(line: usize, column: usize, token: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        token,
        message: message.into(),
    }
}

/// Splits the part of a line before the first `:` into words, with `:` as a
/// word of its own. Returns the words and the column where the body starts.
fn header(text: &str) -> (Vec<Word<'_>>, Option<usize>) {
    let mut words = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in text.char_indices() {
        if ch.is_whitespace() || ch == ':' {
            if let Some(s) = start.take() {
                words.push(Word {
                    text: &text[s..i],
                    column: text[..s].chars().count() + 1,
                });
            }
            if ch == ':' {
                words.push(Word {
                    text: ":",
                    column: text[..i].chars().count() + 1,
                });
                return (words, Some(i + 1));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        words.push(Word {
            text: &text[s..],
            column: text[..s].chars().count() + 1,
        });
    }
    (words, None)
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses a problem file.
pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let mut problem: Option<ProblemFile> = None;
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let (words, body_at) = header(line);
        let keyword = &words[0];
        if keyword.text == "expect" {
            let p = problem
                .as_mut()
                .ok_or_else(|| syntax(line_no, keyword.column, 1, "`ring` must come first"))?;
            let rest = &line[line.find("expect").expect("keyword present") + "expect".len()..];
            p.expectations.push(parse_expect(rest, line_no)?);
            continue;
        }
        if keyword.text == "ring" {
            if problem.is_some() {
                return Err(syntax(line_no, keyword.column, 1, "`ring` given twice"));
            }
            if body_at.is_some() {
                let colon = words
                    .iter()
                    .position(|w| w.text == ":")
                    .expect("colon word");
                return Err(syntax(
                    line_no,
                    words[colon].column,
                    colon + 1,
                    "unexpected `:`",
                ));
            }
            if words.len() < 2 {
                return Err(syntax(
                    line_no,
                    keyword.column,
                    1,
                    "`ring` needs at least one variable",
                ));
            }
            for (k, w) in words.iter().enumerate().skip(1) {
                if !is_identifier(w.text) {
                    return Err(syntax(
                        line_no,
                        w.column,
                        k + 1,
                        format!("`{}` is not a variable name", w.text),
                    ));
                }
            }
            let ring = Ring::new(words[1..].iter().map(|w| w.text.to_string()))?;
            let n = ring.nvars();
            problem = Some(ProblemFile {
                ring,
                space: IdealRep::zero(n),
                ideals: BTreeMap::new(),
                cycles: BTreeMap::new(),
                points: BTreeMap::new(),
                maps: BTreeMap::new(),
                expectations: Vec::new(),
            });
            continue;
        }
        let p = problem
            .as_mut()
            .ok_or_else(|| syntax(line_no, keyword.column, 1, "`ring` must come first"))?;
        let (name, name_token) = match keyword.text {
            "space" => (None, 1),
            "ideal" | "cycle" | "point" | "map" => {
                let Some(w) = words.get(1) else {
                    return Err(syntax(
                        line_no,
                        line.trim_end().chars().count() + 1,
                        2,
                        "expected a name",
                    ));
                };
                if !is_identifier(w.text) {
                    return Err(syntax(
                        line_no,
                        w.column,
                        2,
                        format!("`{}` is not a valid name", w.text),
                    ));
                }
                if p.taken(w.text) {
                    return Err(Error::DuplicateName(w.text.to_string()));
                }
                (Some(w.text.to_string()), 2)
            }
            other => {
                return Err(syntax(
                    line_no,
                    keyword.column,
                    1,
                    format!("unknown directive `{other}`"),
                ));
            }
        };
        let colon_token = name_token + 1;
        match words.get(colon_token - 1) {
            Some(w) if w.text == ":" => {}
            Some(w) => {
                return Err(syntax(
                    line_no,
                    w.column,
                    colon_token,
                    format!("expected `:`, found `{}`", w.text),
                ))
            }
            None => {
                return Err(syntax(
                    line_no,
                    line.trim_end().chars().count() + 1,
                    colon_token,
                    "expected `:`",
                ));
            }
        }
        let body_start = body_at.expect("colon seen");
        let body = &line[body_start..];
        let body_col = line[..body_start].chars().count() + 1;
        let ring = p.ring.clone();
        let n = ring.nvars();
        match keyword.text {
            "space" => {
                let gens = parse_generators(&ring, body, line_no, body_col)?;
                p.space = IdealRep::new(n, gens)?;
            }
            "ideal" => {
                let gens = parse_generators(&ring, body, line_no, body_col)?;
                p.ideals
                    .insert(name.expect("named"), IdealRep::new(n, gens)?);
            }
            "point" => {
                let coords = parse_generators(&ring, body, line_no, body_col)?;
                if coords.len() != n {
                    return Err(Error::ArityMismatch {
                        expected: n,
                        found: coords.len(),
                    });
                }
                let mut values = Vec::with_capacity(n);
                for c in coords {
                    if !c.is_constant() {
                        return Err(syntax(
                            line_no,
                            body_col,
                            4,
                            "point coordinates must be rational numbers",
                        ));
                    }
                    values.push(
                        c.terms()
                            .first()
                            .map(|(_, v)| v.clone())
                            .unwrap_or_default(),
                    );
                }
                p.points
                    .insert(name.expect("named"), AffinePoint::new(values));
            }
            "cycle" => {
                let cycle = parse_cycle(p, body, line_no, body_col)?;
                p.cycles.insert(name.expect("named"), cycle);
            }
            "map" => {
                let def = parse_map(body, line_no, body_col)?;
                if def.components.len() != n {
                    return Err(Error::ArityMismatch {
                        expected: n,
                        found: def.components.len(),
                    });
                }
                p.maps.insert(name.expect("named"), def);
            }
            _ => unreachable!("directive checked above"),
        }
    }
    problem.ok_or_else(|| syntax(1, 1, 1, "missing `ring` line"))
}

fn parse_generators(ring: &Ring, body: &str, line: usize, col: usize) -> Result<Vec<Polynomial>> {
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    PolyParser::new(ring, body, line, col).parse_list()
}

/// `c1*(I1) + (I2) + I3`
fn parse_cycle(p: &ProblemFile, body: &str, line: usize, col: usize) -> Result<CycleRep> {
    let mut cycle = CycleRep::empty(p.ring.nvars());
    let mut offset = 0;
    for (k, raw) in body.split('+').enumerate() {
        let at = col + body[..offset].chars().count();
        offset += raw.len() + 1;
        let term = raw.trim();
        let bad = || syntax(line, at, k + 1, format!("malformed cycle term `{term}`"));
        let (coeff, name) = match term.split_once('*') {
            Some((c, rest)) => (c.trim().parse::<u64>().map_err(|_| bad())?, rest.trim()),
            None => (1, term),
        };
        let name = name
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(name)
            .trim();
        if !is_identifier(name) {
            return Err(bad());
        }
        for (ideal, c) in p.cycle(name)?.parts() {
            cycle = cycle.with_part(ideal.clone(), coeff * c);
        }
    }
    Ok(cycle.with_space(p.space.clone()))
}

/// `t1 t2 | comp_1, ..., comp_N`
fn parse_map(body: &str, line: usize, col: usize) -> Result<MapDef> {
    let Some((params, comps)) = body.split_once('|') else {
        return Err(syntax(line, col, 1, "expected `params | components`"));
    };
    let names: Vec<&str> = params.split_whitespace().collect();
    if names.is_empty() || !names.iter().all(|s| is_identifier(s)) {
        return Err(syntax(line, col, 1, "expected parameter names before `|`"));
    }
    let params = Ring::new(names.iter().map(|s| s.to_string()))?;
    let comp_col = col + params_len(body);
    let components = parse_generators(&params, comps, line, comp_col)?;
    Ok(MapDef { params, components })
}

fn params_len(body: &str) -> usize {
    body.find('|')
        .map(|i| body[..=i].chars().count())
        .unwrap_or(0)
}

/// `ARGS => key=value key=value`, values in JSON.
fn parse_expect(rest: &str, line: usize) -> Result<Expectation> {
    let Some((cmd, values)) = rest.split_once("=>") else {
        return Err(syntax(line, 1, 2, "expected `=>` in expect line"));
    };
    let args = shlex::split(cmd).ok_or_else(|| syntax(line, 1, 2, "unbalanced quotes"))?;
    let mut expected = Vec::new();
    let mut s = values.trim_start();
    while !s.is_empty() {
        let Some((key, after)) = s.split_once('=') else {
            return Err(syntax(
                line,
                1,
                expected.len() + 1,
                format!("expected `key=value`, found `{s}`"),
            ));
        };
        let key = key.trim();
        let mut stream = serde_json::Deserializer::from_str(after).into_iter::<Value>();
        let value = match stream.next() {
            Some(Ok(v)) => v,
            _ => {
                return Err(syntax(
                    line,
                    1,
                    expected.len() + 1,
                    format!("bad value for `{key}`"),
                ))
            }
        };
        let used = stream.byte_offset();
        expected.push((key.to_string(), value));
        s = after[used..].trim_start();
    }
    Ok(Expectation {
        line,
        args,
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_single_ideal() {
        let p = parse_problem("ring x y\nideal I: x^2 - y").unwrap();
        assert_eq!(p.ideal("I").unwrap().generators().len(), 1);
    }

    #[test]
    fn parses_the_corpus_shape() {
        let text = "# hak1\nring t1 t2 t3\nideal F: t3*t1, t3*t2, t3^2\npoint P: 0,0,0\n\
                    cycle W: 2*(F) + F\nmap G: s | s^2, s^3, 1/2\n\
                    expect segre --ideal F --point P => segre=[0,1,1,2] stable=true\n";
        let p = parse_problem(text).unwrap();
        assert!(p.point("P").unwrap().is_origin());
        assert_eq!(p.cycle("W").unwrap().parts()[0].1, 3);
        assert_eq!(p.map("G").unwrap().components.len(), 3);
        let e = &p.expectations[0];
        assert_eq!(e.args, ["segre", "--ideal", "F", "--point", "P"]);
        assert_eq!(
            e.expected[0],
            ("segre".to_string(), serde_json::json!([0, 1, 1, 2]))
        );
        assert_eq!(e.expected[1], ("stable".to_string(), Value::Bool(true)));
    }

    #[test]
    fn missing_colon_reports_token() {
        match parse_problem("ring x y\nideal I x") {
            Err(Error::Syntax {
                line,
                column,
                token,
                ..
            }) => {
                assert_eq!((line, column, token), (2, 9, 3));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_duplicates_and_unknowns() {
        assert_eq!(
            parse_problem("ring x\nideal I: x\npoint I: 0").unwrap_err(),
            Error::DuplicateName("I".into())
        );
        assert_eq!(
            parse_problem("ring x\ncycle C: 2*(J)").unwrap_err(),
            Error::UnknownName("J".into())
        );
        assert!(matches!(
            parse_problem("ring x\nideal I: y"),
            Err(Error::Syntax { .. }) | Err(Error::UnknownVariable(_))
        ));
        assert_eq!(
            parse_problem("ring x y\npoint P: 0").unwrap_err(),
            Error::ArityMismatch {
                expected: 2,
                found: 1
            }
        );
    }
}
