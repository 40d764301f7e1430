//! Semiring terms and equational identities over named variables.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use crate::semiring::FiniteSemiring;

/// A term in the language `{0, 1, +, *}` with named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Zero,
    One,
    Var(String),
    Sum(Box<Term>, Box<Term>),
    Prod(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_owned())
    }

    pub fn sum(lhs: Term, rhs: Term) -> Term {
        Term::Sum(Box::new(lhs), Box::new(rhs))
    }

    pub fn prod(lhs: Term, rhs: Term) -> Term {
        Term::Prod(Box::new(lhs), Box::new(rhs))
    }

    /// The numeral multiple `k*t`, expanded as a left-nested sum; `0*t` is 0.
    pub fn scaled(k: usize, t: Term) -> Term {
        match k {
            0 => Term::Zero,
            _ => (1..k).fold(t.clone(), |acc, _| Term::sum(acc, t.clone())),
        }
    }

    /// The power `t^k`, expanded as a left-nested product; `t^0` is 1.
    pub fn power(t: Term, k: usize) -> Term {
        match k {
            0 => Term::One,
            _ => (1..k).fold(t.clone(), |acc, _| Term::prod(acc, t.clone())),
        }
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Zero | Term::One => {}
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Sum(l, r) | Term::Prod(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Zero => write!(f, "0"),
            Term::One => write!(f, "1"),
            Term::Var(v) => write!(f, "{v}"),
            Term::Sum(l, r) => write!(f, "({l} + {r})"),
            Term::Prod(l, r) => write!(f, "({l} * {r})"),
        }
    }
}

/// Variable assignment: names to carrier indices.
pub type Assignment = BTreeMap<String, usize>;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TermError {
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("assignment sends {var} to {value}, outside a carrier of order {order}")]
    ValueOutOfRange { var: String, value: usize, order: usize },
}

/// Evaluates a term under an assignment, by table walk.
pub fn eval_term(a: &FiniteSemiring, t: &Term, env: &Assignment) -> Result<usize, TermError> {
    match t {
        Term::Zero => Ok(0),
        Term::One => Ok(a.one()),
        Term::Var(v) => {
            let value = *env
                .get(v)
                .ok_or_else(|| TermError::UnboundVariable(v.clone()))?;
            if value >= a.order() {
                return Err(TermError::ValueOutOfRange {
                    var: v.clone(),
                    value,
                    order: a.order(),
                });
            }
            Ok(value)
        }
        Term::Sum(l, r) => Ok(a.add(eval_term(a, l, env)?, eval_term(a, r, env)?)),
        Term::Prod(l, r) => Ok(a.mul(eval_term(a, l, env)?, eval_term(a, r, env)?)),
    }
}

/// An equation `lhs = rhs` over an ordered list of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub lhs: Term,
    pub rhs: Term,
    pub vars: Vec<String>,
}

impl Identity {
    /// Builds an identity; every variable occurring in the terms must be
    /// declared.
    pub fn new(name: &str, lhs: Term, rhs: Term, vars: &[&str]) -> Result<Identity, TermError> {
        let declared: BTreeSet<String> = vars.iter().map(|v| (*v).to_owned()).collect();
        for side in [&lhs, &rhs] {
            if let Some(v) = side.variables().difference(&declared).next() {
                return Err(TermError::UnboundVariable(v.clone()));
            }
        }
        Ok(Identity {
            name: name.to_owned(),
            lhs,
            rhs,
            vars: vars.iter().map(|v| (*v).to_owned()).collect(),
        })
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}", self.name, self.lhs, self.rhs)
    }
}

/// A falsifying assignment with both evaluated sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub assignment: Assignment,
    pub lhs_value: usize,
    pub rhs_value: usize,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let binds: Vec<String> = self
            .assignment
            .iter()
            .map(|(v, x)| format!("{v}={x}"))
            .collect();
        write!(
            f,
            "[{}] gives {} != {}",
            binds.join(", "),
            self.lhs_value,
            self.rhs_value
        )
    }
}

/// Checks an identity over all assignments, in lexicographic order, and
/// returns the first falsifying one if any.
pub fn check_identity(a: &FiniteSemiring, id: &Identity) -> Result<(), Counterexample> {
    let k = id.vars.len();
    let n = a.order();
    let mut values = vec![0usize; k];
    loop {
        let env: Assignment = id
            .vars
            .iter()
            .cloned()
            .zip(values.iter().copied())
            .collect();
        let lhs_value = eval_term(a, &id.lhs, &env).expect("declared variables are bound");
        let rhs_value = eval_term(a, &id.rhs, &env).expect("declared variables are bound");
        if lhs_value != rhs_value {
            return Err(Counterexample {
                assignment: env,
                lhs_value,
                rhs_value,
            });
        }
        // Odometer step over {0, .., n-1}^k.
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            values[pos] += 1;
            if values[pos] < n {
                break;
            }
            values[pos] = 0;
        }
    }
}

/// A finite list of identities cut out of the semiring variety.
#[derive(Clone, Debug)]
pub struct VarietySpec {
    pub name: String,
    pub identities: Vec<Identity>,
}

impl VarietySpec {
    /// The defining identities of the coreflective subvariety:
    /// `1 + 2x = 1` and `x*x = x`.
    pub fn star() -> VarietySpec {
        let x = || Term::var("x");
        VarietySpec {
            name: "star".into(),
            identities: vec![
                Identity::new(
                    "1+2x=1",
                    Term::sum(Term::One, Term::scaled(2, x())),
                    Term::One,
                    &["x"],
                )
                .unwrap(),
                Identity::new("x^2=x", Term::power(x(), 2), x(), &["x"]).unwrap(),
            ],
        }
    }

    /// Checks every identity; the first failure is returned with its
    /// counterexample.
    pub fn holds_in(&self, a: &FiniteSemiring) -> Result<(), (Identity, Counterexample)> {
        for id in &self.identities {
            check_identity(a, id).map_err(|ce| (id.clone(), ce))?;
        }
        Ok(())
    }
}
