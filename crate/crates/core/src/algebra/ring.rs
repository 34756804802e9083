use std::collections::HashSet;
use std::fmt::Write;

use num_traits::{One, Signed};

use super::parse::PolyParser;
use super::{MonomialOrder, Polynomial};
use crate::error::{Error, Result};

/// Variable names of a polynomial ring; variables are identified by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Ring> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::DuplicateName(n.clone()));
            }
        }
        Ok(Ring { names })
    }

    /// Ring with variables `x1 .. xn`.
    pub fn standard(nvars: usize) -> Ring {
        Ring {
            names: (1..=nvars).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The `copies`-fold product ring; block `j` (1-based) gets suffix `_j`.
    pub fn power(&self, copies: usize) -> Ring {
        let mut names = Vec::with_capacity(self.names.len() * copies);
        for j in 1..=copies {
            for n in &self.names {
                names.push(format!("{n}_{j}"));
            }
        }
        Ring { names }
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        PolyParser::new(self, text, 1, 1).parse_all()
    }

    /// Parse a comma-separated generator list; empty input gives no generators.
    pub fn parse_list(&self, text: &str) -> Result<Vec<Polynomial>> {
        if text.trim().is_empty() {
            return Ok(Vec::new());
        }
        PolyParser::new(self, text, 1, 1).parse_list()
    }

    pub fn format(&self, p: &Polynomial) -> String {
        format_polynomial(p, &self.names)
    }

    /// Substitute named variables by polynomials of this ring.
    pub fn substitute_named(
        &self,
        p: &Polynomial,
        bindings: &[(&str, Polynomial)],
    ) -> Result<Polynomial> {
        let mut slots: Vec<Option<Polynomial>> = vec![None; self.nvars()];
        for (name, q) in bindings {
            let i = self
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            slots[i] = Some(q.clone());
        }
        p.substitute(&slots, self.nvars())
    }
}

/// Canonical text form: grevlex-descending terms, `*` between factors.
pub(crate) fn format_polynomial(p: &Polynomial, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let p = p.with_order(MonomialOrder::Grevlex);
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || m.is_one() {
            if abs.is_integer() {
                factors.push(abs.numer().to_string());
            } else {
                factors.push(format!("{}/{}", abs.numer(), abs.denom()));
            }
        }
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(names[i].clone()),
                _ => factors.push(format!("{}^{}", names[i], e)),
            }
        }
        let _ = write!(out, "{}", factors.join("*"));
    }
    out
}
