//! Minterm-based synthesis of quaternary functions.
//!
//! A function is expressed as a MAX-of-MIN expression of projection
//! literals: one product per input vector with nonzero output, using the L
//! family for level 1, J for 2 and P for 3. The expression is simplified to
//! a fixpoint and lowered onto gates: projection literals become GQG gates
//! onto zero ancillae, merged symmetric pairs become C2CS gates, products
//! fold with MIN and the sum folds with MAX. Every synthesized circuit is
//! self-checked by exhaustive simulation before it is returned.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::circuit::{
    circuit_cost, circuit_levels, Circuit, CircuitError, CostModel, Gate, ValuePair, WireRole,
};
use crate::expr::{ExprError, Factor, Product, QExpr};
use crate::func::{FunctionError, QuaternaryFunction};
use crate::gf4::{qmin, shift_identity, shift_translation, Gf4Value, ProjFamily, ProjectionKind};
use crate::sim::{self, SimError};

/// A single minterm: the exact input vector it fires on (one literal per
/// variable) and the nonzero level it asserts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minterm {
    pub literals: Vec<(usize, Gf4Value)>,
    pub level: Gf4Value,
}

#[derive(Debug, Error, PartialEq)]
pub enum SynthError {
    #[error("cannot lower factor {0}: complemented multi-variable literals have no gate form")]
    UnloweredFactor(String),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Function(#[from] FunctionError),
    #[error(
        "internal self-check failed on output {output} at inputs {inputs:?}: \
         circuit gives {got}, function wants {want}"
    )]
    SelfCheck {
        output: usize,
        inputs: Vec<Gf4Value>,
        got: Gf4Value,
        want: Gf4Value,
    },
}

/// Synthesis report counters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthStats {
    /// Input vectors (summed over outputs) where the function is 1.
    pub n: usize,
    /// ... where the function is 2.
    pub p: usize,
    /// ... where the function is 3.
    pub s: usize,
    /// The (n+p+s)*m ancilla bound of the unsimplified expression.
    pub max_ancilla: usize,
    /// Ancilla wires actually present after simplification.
    pub reduced_ancilla: usize,
    /// Declared cost of the macro netlist under the default model.
    pub cost: u64,
    /// ASAP depth of the macro netlist.
    pub levels: usize,
}

/// One minterm per input vector with a nonzero value in the chosen output
/// column.
pub fn extract_minterms(f: &QuaternaryFunction, output: usize) -> Vec<Minterm> {
    let m = f.input_count();
    let mut minterms = Vec::new();
    for (idx, row) in f.rows().iter().enumerate() {
        let level = row[output];
        if level == Gf4Value::ZERO {
            continue;
        }
        let inputs = crate::func::index_to_inputs(idx, m);
        minterms.push(Minterm {
            literals: inputs.iter().copied().enumerate().collect(),
            level,
        });
    }
    minterms
}

/// Sum over the minterms; each becomes a product of projection literals of
/// the family matching its level.
pub fn build_expression(var_count: usize, minterms: &[Minterm]) -> QExpr {
    let terms = minterms
        .iter()
        .map(|mt| {
            let family = ProjFamily::for_level(mt.level)
                .expect("minterm levels are restricted to 1..3");
            if mt.literals.is_empty() {
                return Product::new(vec![Factor::Const(mt.level)]);
            }
            let factors = mt
                .literals
                .iter()
                .map(|&(var, value)| {
                    Factor::literal(ProjectionKind::new(family, value, false), var)
                })
                .collect();
            Product::new(factors)
        })
        .collect();
    QExpr::new(var_count, terms)
}

/// Normalize one product: idempotence (rule 8), multi-argument merging
/// (rule 9), complement annihilation (rule 5) and constant absorption
/// (rules 1-2). Returns `None` when the product is identically zero.
fn normalize_product(product: &Product) -> Option<Product> {
    let mut plain: BTreeMap<(ProjFamily, Gf4Value), Vec<usize>> = BTreeMap::new();
    let mut rest: Vec<Factor> = Vec::new();
    let mut const_min: Option<Gf4Value> = None;

    let mut factors = product.factors.clone();
    factors.sort();
    factors.dedup();
    for factor in factors {
        match factor {
            Factor::Literal { kind, vars } if !kind.complemented => {
                let entry = plain.entry((kind.family, kind.index)).or_default();
                for v in vars {
                    if !entry.contains(&v) {
                        entry.push(v);
                    }
                }
            }
            Factor::Const(c) => {
                const_min = Some(match const_min {
                    Some(prev) => qmin(prev, c),
                    None => c,
                });
            }
            other => rest.push(other),
        }
    }

    let mut out: Vec<Factor> = Vec::new();
    for ((family, index), mut vars) in plain {
        vars.sort();
        out.push(Factor::Literal {
            kind: ProjectionKind::new(family, index, false),
            vars,
        });
    }
    // Rule 5: a plain literal annihilates a complemented one of the same
    // family and index whose variables it covers.
    for factor in &rest {
        if let Factor::Literal { kind, vars } = factor {
            if kind.complemented {
                if let Some(Factor::Literal { vars: pvars, .. }) =
                    out.iter().find(|f| match f {
                        Factor::Literal { kind: pk, .. } => {
                            !pk.complemented
                                && pk.family == kind.family
                                && pk.index == kind.index
                        }
                        _ => false,
                    })
                {
                    if vars.iter().all(|v| pvars.contains(v)) {
                        return None;
                    }
                }
            }
        }
    }
    out.extend(rest);

    if let Some(c) = const_min {
        if c == Gf4Value::ZERO {
            return None;
        }
        let cap = out
            .iter()
            .fold(Gf4Value::THREE, |acc, f| qmin(acc, f.max_value()));
        if out.is_empty() || c.value() < cap.value() {
            out.push(Factor::Const(c));
        }
    }
    out.sort();
    Some(Product::new(out))
}

fn multiset_sub(a: &[Factor], b: &[Factor]) -> Vec<Factor> {
    let mut remaining = b.to_vec();
    let mut out = Vec::new();
    for f in a {
        if let Some(pos) = remaining.iter().position(|x| x == f) {
            remaining.remove(pos);
        } else {
            out.push(f.clone());
        }
    }
    out
}

fn single_var_plain(factor: &Factor) -> Option<(ProjFamily, Gf4Value, usize)> {
    match factor {
        Factor::Literal { kind, vars } if !kind.complemented && vars.len() == 1 => {
            Some((kind.family, kind.index, vars[0]))
        }
        _ => None,
    }
}

/// Rule 7: merge `X_i(a)X_j(b) + X_j(a)X_i(b)` (times any common factors)
/// into a pair-merge factor, restricted to value pairs from {1,2,3}.
fn try_pair_merge(p1: &Product, p2: &Product) -> Option<Product> {
    let d1 = multiset_sub(&p1.factors, &p2.factors);
    let d2 = multiset_sub(&p2.factors, &p1.factors);
    if d1.len() != 2 || d2.len() != 2 {
        return None;
    }
    let (f1, i1, a1) = single_var_plain(&d1[0])?;
    let (f2, i2, a2) = single_var_plain(&d1[1])?;
    let (g1, j1, b1) = single_var_plain(&d2[0])?;
    let (g2, j2, b2) = single_var_plain(&d2[1])?;
    if f1 != f2 || f1 != g1 || f1 != g2 || a1 == a2 || i1 == i2 {
        return None;
    }
    // d1 = X_i1(a1) X_i2(a2); d2 must be the transposed X_i2(a1) X_i1(a2).
    let transposed = (j1 == i2 && b1 == a1 && j2 == i1 && b2 == a2)
        || (j1 == i1 && b1 == a2 && j2 == i2 && b2 == a1);
    if !transposed {
        return None;
    }
    let pair = ValuePair::new(i1, i2).ok()?;
    let mut factors = multiset_sub(&p1.factors, &d1);
    factors.push(Factor::PairMerge {
        var_a: a1.min(a2),
        var_b: a1.max(a2),
        pair,
        level: f1.fire_value(),
    });
    factors.sort();
    Some(Product::new(factors))
}

fn simplify_pass(expr: &QExpr) -> QExpr {
    // Product-level rules.
    let mut terms: Vec<Product> = expr.terms.iter().filter_map(normalize_product).collect();
    terms.sort();
    terms.dedup();

    // Rule 6: X_i(v) + X'_i(v) over the same variables completes to the
    // family constant.
    'completion: loop {
        for i in 0..terms.len() {
            if terms[i].factors.len() != 1 {
                continue;
            }
            let Factor::Literal { kind, vars } = &terms[i].factors[0] else {
                continue;
            };
            let complement = Factor::Literal {
                kind: ProjectionKind::new(kind.family, kind.index, !kind.complemented),
                vars: vars.clone(),
            };
            let partner = Product::new(vec![complement]);
            if let Some(j) = terms.iter().position(|t| *t == partner) {
                let fire = kind.family.fire_value();
                let (lo, hi) = (i.min(j), i.max(j));
                terms.remove(hi);
                terms.remove(lo);
                terms.push(Product::new(vec![Factor::Const(fire)]));
                terms.sort();
                terms.dedup();
                continue 'completion;
            }
        }
        break;
    }

    // Rules 3-4: drop zero terms (already gone) and absorb terms dominated
    // by a constant term.
    let const_max = terms
        .iter()
        .filter_map(|t| match t.factors.as_slice() {
            [Factor::Const(c)] => Some(*c),
            _ => None,
        })
        .max();
    if let Some(cmax) = const_max {
        terms.retain(|t| t.max_value().value() > cmax.value());
        terms.push(Product::new(vec![Factor::Const(cmax)]));
        terms.sort();
    }

    // Rule 7 pair merging to a local fixpoint.
    'merging: loop {
        for i in 0..terms.len() {
            for j in (i + 1)..terms.len() {
                if let Some(merged) = try_pair_merge(&terms[i], &terms[j]) {
                    terms.remove(j);
                    terms.remove(i);
                    terms.push(merged);
                    terms.sort();
                    terms.dedup();
                    continue 'merging;
                }
            }
        }
        break;
    }

    QExpr::new(expr.var_count, terms)
}

/// Apply simplification rules 1-9 to a fixpoint. Evaluation is preserved on
/// every input vector.
pub fn simplify(expr: &QExpr) -> QExpr {
    let mut current = simplify_pass(expr);
    loop {
        let next = simplify_pass(&current);
        if next == current {
            return next;
        }
        current = next;
    }
}

fn lower_factor(
    circuit: &mut Circuit,
    inputs: &[usize],
    factor: &Factor,
) -> Result<usize, SynthError> {
    match factor {
        Factor::Literal { kind, vars } => {
            if kind.complemented && vars.len() > 1 {
                return Err(SynthError::UnloweredFactor(factor.to_string()));
            }
            let anc = circuit.add_ancilla(Gf4Value::ZERO);
            let fire = shift_translation(kind.family.fire_value());
            let mut shifts = [shift_identity(); 4];
            if kind.complemented {
                for v in Gf4Value::ALL {
                    if v != kind.index {
                        shifts[v.index()] = fire;
                    }
                }
            } else {
                shifts[kind.index.index()] = fire;
            }
            circuit.append_gate(Gate::Gqg {
                controls: vars.iter().map(|&v| inputs[v]).collect(),
                target: anc,
                shifts,
            })?;
            Ok(anc)
        }
        Factor::PairMerge {
            var_a,
            var_b,
            pair,
            level,
        } => {
            let anc = circuit.add_ancilla(Gf4Value::ZERO);
            circuit.append_gate(Gate::C2cs {
                a: inputs[*var_a],
                b: inputs[*var_b],
                target: anc,
                pair: *pair,
                amount: *level,
            })?;
            Ok(anc)
        }
        Factor::Const(c) => Ok(circuit.add_constant(*c)),
    }
}

/// Fold a wire list with Min/Max onto the first ancilla-role wire among
/// them, so no extra ancilla is consumed by the fold itself.
fn fold_wires(
    circuit: &mut Circuit,
    wires: Vec<usize>,
    min_fold: bool,
) -> Result<usize, SynthError> {
    if wires.len() == 1 {
        return Ok(wires[0]);
    }
    let target_pos = wires
        .iter()
        .position(|&w| circuit.wires()[w].role == WireRole::Ancilla);
    let (target, rest): (usize, Vec<usize>) = match target_pos {
        Some(pos) => {
            let mut rest = wires.clone();
            let target = rest.remove(pos);
            (target, rest)
        }
        None => {
            let init = if min_fold {
                Gf4Value::THREE
            } else {
                Gf4Value::ZERO
            };
            (circuit.add_ancilla(init), wires)
        }
    };
    let gate = if min_fold {
        Gate::Min {
            inputs: rest,
            target,
        }
    } else {
        Gate::Max {
            inputs: rest,
            target,
        }
    };
    circuit.append_gate(gate)?;
    Ok(target)
}

/// Lower a simplified expression onto an existing circuit sharing the given
/// input wires. Returns the output wire.
pub fn lower_onto(
    circuit: &mut Circuit,
    inputs: &[usize],
    expr: &QExpr,
) -> Result<usize, SynthError> {
    let mut term_wires = Vec::with_capacity(expr.terms.len());
    for term in &expr.terms {
        let factor_wires = term
            .factors
            .iter()
            .map(|f| lower_factor(circuit, inputs, f))
            .collect::<Result<Vec<_>, _>>()?;
        term_wires.push(fold_wires(circuit, factor_wires, true)?);
    }
    if term_wires.is_empty() {
        return Ok(circuit.add_constant(Gf4Value::ZERO));
    }
    fold_wires(circuit, term_wires, false)
}

/// Lower a simplified expression into a standalone circuit with one output
/// named `y`.
pub fn lower(expr: &QExpr) -> Result<Circuit, SynthError> {
    let mut circuit = Circuit::new();
    let inputs: Vec<usize> = (0..expr.var_count).map(|_| circuit.add_input()).collect();
    let out = lower_onto(&mut circuit, &inputs, expr)?;
    circuit.add_output(out, "y")?;
    Ok(circuit)
}

/// End-to-end synthesis of a complete multi-output function. The resulting
/// circuit is verified against the function on every input vector before it
/// is returned; a mismatch is a hard error.
pub fn synth(f: &QuaternaryFunction) -> Result<(Circuit, SynthStats), SynthError> {
    let m = f.input_count();
    let mut circuit = Circuit::new();
    let inputs: Vec<usize> = (0..m).map(|_| circuit.add_input()).collect();

    let (mut n, mut p, mut s) = (0usize, 0usize, 0usize);
    for output in 0..f.output_count() {
        let (n_o, p_o, s_o) = f.level_counts(output);
        n += n_o;
        p += p_o;
        s += s_o;
        let minterms = extract_minterms(f, output);
        let expr = simplify(&build_expression(m, &minterms));
        let wire = lower_onto(&mut circuit, &inputs, &expr)?;
        circuit.add_output(wire, format!("y{output}"))?;
    }
    circuit.lint_fold_targets()?;

    let table = sim::truth_table(&circuit)?;
    for (idx, row) in table.rows().iter().enumerate() {
        let want = f.outputs_at_index(idx);
        if row != want {
            let output = row
                .iter()
                .zip(want)
                .position(|(g, w)| g != w)
                .unwrap_or(0);
            return Err(SynthError::SelfCheck {
                output,
                inputs: crate::func::index_to_inputs(idx, m),
                got: row[output],
                want: want[output],
            });
        }
    }

    let stats = SynthStats {
        n,
        p,
        s,
        max_ancilla: (n + p + s) * m,
        reduced_ancilla: circuit.ancilla_count(),
        cost: circuit_cost(&circuit, &CostModel::default())?,
        levels: circuit_levels(&circuit),
    };
    Ok((circuit, stats))
}
