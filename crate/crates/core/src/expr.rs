//! Sum-of-products expressions over projection literals.
//!
//! Evaluation fixes Sum = quaternary MAX and Product = quaternary MIN: a
//! product of same-family literals asserting level v evaluates to v when
//! every literal fires, and sums clamp instead of wrapping.

use std::fmt;

use thiserror::Error;

use crate::circuit::ValuePair;
use crate::gf4::{qmax, qmin, Gf4Value, ProjectionKind};

/// One multiplicand of a product term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    /// Projection literal over one or more variables. A multi-argument
    /// plain literal fires only when every argument equals the index.
    Literal {
        kind: ProjectionKind,
        vars: Vec<usize>,
    },
    /// Merged symmetric pair: fires to `level` when the two variables'
    /// values form the pair, in either order.
    PairMerge {
        var_a: usize,
        var_b: usize,
        pair: ValuePair,
        level: Gf4Value,
    },
    Const(Gf4Value),
}

impl Factor {
    pub fn literal(kind: ProjectionKind, var: usize) -> Factor {
        Factor::Literal {
            kind,
            vars: vec![var],
        }
    }

    /// Largest value the factor can evaluate to.
    pub fn max_value(&self) -> Gf4Value {
        match self {
            Factor::Literal { kind, .. } => kind.family.fire_value(),
            Factor::PairMerge { level, .. } => *level,
            Factor::Const(c) => *c,
        }
    }

    fn eval(&self, inputs: &[Gf4Value]) -> Result<Gf4Value, ExprError> {
        match self {
            Factor::Literal { kind, vars } => {
                let mut all_hit = true;
                for &v in vars {
                    let value = *inputs.get(v).ok_or(ExprError::UnboundVariable {
                        var: v,
                        have: inputs.len(),
                    })?;
                    all_hit &= value == kind.index;
                }
                let fire = kind.family.fire_value();
                if all_hit != kind.complemented {
                    Ok(fire)
                } else {
                    Ok(Gf4Value::ZERO)
                }
            }
            Factor::PairMerge {
                var_a,
                var_b,
                pair,
                level,
            } => {
                let bound = |v: usize| {
                    inputs.get(v).copied().ok_or(ExprError::UnboundVariable {
                        var: v,
                        have: inputs.len(),
                    })
                };
                let a = bound(*var_a)?;
                let b = bound(*var_b)?;
                if pair.matches(a, b) {
                    Ok(*level)
                } else {
                    Ok(Gf4Value::ZERO)
                }
            }
            Factor::Const(c) => Ok(*c),
        }
    }
}

/// A product (MIN-fold) of factors. The empty product evaluates to 3.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Product {
    pub factors: Vec<Factor>,
}

impl Product {
    pub fn new(factors: Vec<Factor>) -> Product {
        Product { factors }
    }

    /// Largest value the product can evaluate to.
    pub fn max_value(&self) -> Gf4Value {
        self.factors
            .iter()
            .fold(Gf4Value::THREE, |acc, f| qmin(acc, f.max_value()))
    }

    pub fn eval(&self, inputs: &[Gf4Value]) -> Result<Gf4Value, ExprError> {
        let mut acc = Gf4Value::THREE;
        for factor in &self.factors {
            acc = qmin(acc, factor.eval(inputs)?);
            if acc == Gf4Value::ZERO {
                break;
            }
        }
        Ok(acc)
    }
}

/// A sum (MAX-fold) of products. The empty sum evaluates to 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QExpr {
    pub var_count: usize,
    pub terms: Vec<Product>,
}

impl QExpr {
    pub fn new(var_count: usize, terms: Vec<Product>) -> QExpr {
        QExpr { var_count, terms }
    }

    pub fn constant_zero(var_count: usize) -> QExpr {
        QExpr {
            var_count,
            terms: Vec::new(),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("expression references variable {var} but only {have} inputs are bound")]
    UnboundVariable { var: usize, have: usize },
}

/// Evaluate an expression on a full input assignment.
pub fn eval_expr(expr: &QExpr, inputs: &[Gf4Value]) -> Result<Gf4Value, ExprError> {
    let mut acc = Gf4Value::ZERO;
    for term in &expr.terms {
        acc = qmax(acc, term.eval(inputs)?);
        if acc == Gf4Value::THREE {
            break;
        }
    }
    Ok(acc)
}

/// Variable display name: a, b, c, ... then x26, x27, ...
pub fn var_name(index: usize) -> String {
    if index < 26 {
        char::from(b'a' + index as u8).to_string()
    } else {
        format!("x{index}")
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Literal { kind, vars } => {
                let args: Vec<String> = vars.iter().map(|&v| var_name(v)).collect();
                write!(
                    f,
                    "{}{}{}({})",
                    kind.family,
                    if kind.complemented { "'" } else { "" },
                    kind.index,
                    args.join(",")
                )
            }
            Factor::PairMerge {
                var_a,
                var_b,
                pair,
                level,
            } => write!(
                f,
                "C2CS{pair}+{level}({},{})",
                var_name(*var_a),
                var_name(*var_b)
            ),
            Factor::Const(c) => write!(f, "{c}"),
        }
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "3");
        }
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Display for QExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
