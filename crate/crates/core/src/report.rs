//! Verification reports. A check is a suite of named identities evaluated on
//! every tuple of basis indices; the first violation of each identity is kept
//! as a witness that can be replayed against the same suite.

use std::fmt;

use serde::Serialize;

use crate::linalg::combination;
use crate::scalar::Scalar;

/// How the two sides of an identity are laid out, for display.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Shape {
    /// Coordinates in a basis named `<prefix>1, <prefix>2, ...`.
    Vector(String),
    /// Row-major entries.
    Matrix { rows: usize, cols: usize },
    /// A flat grid of scalars.
    Grid,
}

impl Shape {
    pub fn vector(prefix: &str) -> Shape {
        Shape::Vector(prefix.to_string())
    }

    fn render(&self, xs: &[Scalar]) -> String {
        match self {
            Shape::Vector(p) => combination(xs.iter().enumerate(), |i| format!("{p}{}", i + 1)),
            Shape::Matrix { rows, cols } => {
                let body: Vec<String> = (0..*rows)
                    .map(|r| {
                        (0..*cols)
                            .map(|c| xs[r * cols + c].to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                format!("[{}]", body.join(" ; "))
            }
            Shape::Grid => {
                let nz: Vec<String> = xs
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| !s.is_zero())
                    .map(|(i, s)| format!("#{i}={s}"))
                    .collect();
                if nz.is_empty() {
                    "0".into()
                } else {
                    format!("{{{}}}", nz.join(", "))
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Basis labels of the failing tuple, e.g. `["e1", "e1", "e1"]`.
    pub at: Vec<String>,
    /// 0-based indices of the same tuple, used for replay.
    pub index: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
    #[serde(skip)]
    pub shape: Option<Shape>,
}

impl Witness {
    pub fn lhs_text(&self) -> String {
        self.shape.clone().unwrap_or(Shape::Grid).render(&self.lhs)
    }

    pub fn rhs_text(&self) -> String {
        self.shape.clone().unwrap_or(Shape::Grid).render(&self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    /// Number of basis tuples evaluated.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Clause {
    pub fn fact(name: impl Into<String>, passed: bool) -> Clause {
        Clause {
            name: name.into(),
            passed,
            checked: 1,
            witness: None,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Clause {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub passed: bool,
    pub clauses: Vec<Clause>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Report {
        Report {
            subject: subject.into(),
            passed: true,
            clauses: Vec::new(),
        }
    }

    pub fn push(&mut self, clause: Clause) {
        self.passed &= clause.passed;
        self.clauses.push(clause);
    }

    /// Append the clauses of another report, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.clauses {
            if !prefix.is_empty() {
                c.name = format!("{prefix}/{}", c.name);
            }
            self.push(c);
        }
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| !c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, if self.passed { "PASS" } else { "FAIL" })?;
        for c in &self.clauses {
            write!(f, "  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name)?;
            if let Some(w) = &c.witness {
                write!(f, " at ({}): lhs {} rhs {}", w.at.join(","), w.lhs_text(), w.rhs_text())?;
            }
            if let Some(n) = &c.note {
                write!(f, " ({n})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

type Eval<'a> = Box<dyn Fn(&[usize]) -> (Vec<Scalar>, Vec<Scalar>) + 'a>;

/// An identity `lhs(t) = rhs(t)` quantified over tuples `t` of basis indices.
pub struct Identity<'a> {
    pub name: String,
    /// Per argument: label prefix and range size.
    pub args: Vec<(String, usize)>,
    pub shape: Shape,
    eval: Eval<'a>,
}

impl<'a> Identity<'a> {
    pub fn new(
        name: impl Into<String>,
        args: &[(&str, usize)],
        shape: Shape,
        eval: impl Fn(&[usize]) -> (Vec<Scalar>, Vec<Scalar>) + 'a,
    ) -> Identity<'a> {
        Identity {
            name: name.into(),
            args: args.iter().map(|(p, n)| (p.to_string(), *n)).collect(),
            shape,
            eval: Box::new(eval),
        }
    }

    pub fn evaluate(&self, index: &[usize]) -> (Vec<Scalar>, Vec<Scalar>) {
        (self.eval)(index)
    }

    fn run(&self) -> Clause {
        let total: usize = self.args.iter().map(|a| a.1).product();
        let mut index = vec![0usize; self.args.len()];
        let mut checked = 0;
        if total > 0 {
            loop {
                let (lhs, rhs) = self.evaluate(&index);
                checked += 1;
                if lhs != rhs {
                    let at = index
                        .iter()
                        .zip(&self.args)
                        .map(|(i, (p, _))| format!("{p}{}", i + 1))
                        .collect();
                    return Clause {
                        name: self.name.clone(),
                        passed: false,
                        checked,
                        witness: Some(Witness {
                            at,
                            index,
                            lhs,
                            rhs,
                            shape: Some(self.shape.clone()),
                        }),
                        note: None,
                    };
                }
                let mut k = index.len();
                loop {
                    if k == 0 {
                        return Clause {
                            name: self.name.clone(),
                            passed: true,
                            checked,
                            witness: None,
                            note: None,
                        };
                    }
                    k -= 1;
                    index[k] += 1;
                    if index[k] < self.args[k].1 {
                        break;
                    }
                    index[k] = 0;
                }
            }
        }
        Clause {
            name: self.name.clone(),
            passed: true,
            checked,
            witness: None,
            note: None,
        }
    }
}

/// A named collection of identities and precomputed facts.
pub struct Suite<'a> {
    pub subject: String,
    facts: Vec<Clause>,
    identities: Vec<Identity<'a>>,
}

impl<'a> Suite<'a> {
    pub fn new(subject: impl Into<String>) -> Suite<'a> {
        Suite {
            subject: subject.into(),
            facts: Vec::new(),
            identities: Vec::new(),
        }
    }

    pub fn fact(&mut self, clause: Clause) -> &mut Self {
        self.facts.push(clause);
        self
    }

    pub fn identity(&mut self, id: Identity<'a>) -> &mut Self {
        self.identities.push(id);
        self
    }

    pub fn with(mut self, id: Identity<'a>) -> Self {
        self.identities.push(id);
        self
    }

    pub fn extend(&mut self, other: Suite<'a>) {
        self.facts.extend(other.facts);
        self.identities.extend(other.identities);
    }

    /// Prefix every clause name with `prefix/`.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for f in &mut self.facts {
            f.name = format!("{prefix}/{}", f.name);
        }
        for i in &mut self.identities {
            i.name = format!("{prefix}/{}", i.name);
        }
        self
    }

    pub fn identities(&self) -> &[Identity<'a>] {
        &self.identities
    }

    pub fn run(&self) -> Report {
        let mut report = Report::new(self.subject.clone());
        for f in &self.facts {
            report.push(f.clone());
        }
        for id in &self.identities {
            report.push(id.run());
        }
        report
    }

    /// Re-evaluate a failing clause at its witness. `Some(true)` means the
    /// violation is reproduced with identical sides.
    pub fn replay(&self, clause: &Clause) -> Option<bool> {
        let w = clause.witness.as_ref()?;
        let id = self.identities.iter().find(|i| i.name == clause.name)?;
        let (lhs, rhs) = id.evaluate(&w.index);
        Some(lhs != rhs && lhs == w.lhs && rhs == w.rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    #[test]
    fn suite_finds_first_violation_and_replays_it() {
        let q = Field::Rational;
        let suite = Suite::new("toy").with(Identity::new(
            "square-free",
            &[("e", 3), ("e", 3)],
            Shape::Grid,
            move |t| (vec![q.int((t[0] * t[1]) as i64)], vec![q.int(if t[0] == 2 && t[1] == 1 { 0 } else { (t[0] * t[1]) as i64 })]),
        ));
        let report = suite.run();
        assert!(!report.passed);
        let c = report.first_failure().unwrap();
        assert_eq!(c.witness.as_ref().unwrap().at, vec!["e3", "e2"]);
        assert_eq!(suite.replay(c), Some(true));
    }

    #[test]
    fn facts_enter_the_verdict() {
        let mut s = Suite::new("facts");
        s.fact(Clause::fact("ok", true)).fact(Clause::fact("bad", false));
        let r = s.run();
        assert!(!r.passed);
        assert_eq!(r.first_failure().unwrap().name, "bad");
    }
}
