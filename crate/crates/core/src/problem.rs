//! The line-oriented problem file format.
//!
//! ```text
//! # comments run to the end of the line
//! ring: int            # int | rat | unipoly(t) | multipoly(t,u)
//! vars: x, y
//! order: lex           # lex | grevlex
//! 3*x*y + x + y^2
//! x^2
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::ProblemError;
use crate::poly::{MonomialOrder, PolyRing};
use crate::ring::{dispatch, is_identifier, Ring, RingDescriptor, RingVisitor};

/// A polynomial system together with its ring, variables and order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub ring: RingDescriptor,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub generators: Vec<String>,
}

struct Check<'a> {
    vars: &'a [String],
    order: MonomialOrder,
    generators: &'a [(usize, String)],
}

impl RingVisitor for Check<'_> {
    type Output = Result<(), ProblemError>;

    fn visit<R: Ring + 'static>(self, ring: R) -> Self::Output {
        let ctx = PolyRing::new(ring, self.vars.iter().cloned(), self.order);
        for (line, g) in self.generators {
            ctx.parse(g).map_err(|source| ProblemError::Poly { line: *line, source })?;
        }
        Ok(())
    }
}

impl ProblemFile {
    /// Parses and validates a problem: every generator must parse under the
    /// declared ring and variables.
    pub fn parse(text: &str) -> Result<Self, ProblemError> {
        let mut ring = None;
        let mut vars: Option<Vec<String>> = None;
        let mut order = None;
        let mut generators = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let syntax = |msg: String| ProblemError::Syntax { line, msg };
            let Some((key, value)) = content.split_once(':') else {
                generators.push((line, content.to_string()));
                continue;
            };
            match key.trim() {
                "ring" => ring = Some(RingDescriptor::from_str(value).map_err(syntax)?),
                "order" => order = Some(MonomialOrder::from_str(value).map_err(syntax)?),
                "vars" => {
                    let names: Vec<String> = value.split(',').map(|v| v.trim().to_string()).collect();
                    if let Some(bad) = names.iter().find(|v| !is_identifier(v)) {
                        return Err(syntax(format!("`{bad}` is not a valid variable name")));
                    }
                    for (i, v) in names.iter().enumerate() {
                        if names[..i].contains(v) {
                            return Err(syntax(format!("variable `{v}` declared twice")));
                        }
                    }
                    vars = Some(names);
                }
                other => return Err(syntax(format!("unknown header `{other}`"))),
            }
        }
        let ring = ring.ok_or(ProblemError::MissingHeader("ring"))?;
        let vars = vars.ok_or(ProblemError::MissingHeader("vars"))?;
        let order = order.ok_or(ProblemError::MissingHeader("order"))?;
        if let Some(v) = vars.iter().find(|v| ring.aux_vars.contains(v)) {
            return Err(ProblemError::Syntax {
                line: 0,
                msg: format!("`{v}` is both a variable and a coefficient-ring variable"),
            });
        }
        if generators.is_empty() {
            return Err(ProblemError::NoGenerators);
        }
        dispatch(&ring, Check { vars: &vars, order, generators: &generators })?;
        Ok(Self { ring, vars, order, generators: generators.into_iter().map(|(_, g)| g).collect() })
    }
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring: {}", self.ring)?;
        writeln!(f, "vars: {}", self.vars.join(", "))?;
        writeln!(f, "order: {}", self.order.name())?;
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}
