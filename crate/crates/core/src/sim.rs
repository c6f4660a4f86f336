//! Exact classical simulation of circuits over basis states.
//!
//! Every gate in the set maps basis values to basis values, so exhaustive
//! enumeration of the 4^m input assignments recovers the full truth table.
//! Sweeps over distinct input vectors are independent and run on a rayon
//! pool when the `parallel` feature is enabled; the sequential path is
//! always available.

use thiserror::Error;

use crate::circuit::{Circuit, Gate, WireRole};
use crate::func::{index_to_inputs, row_count, QuaternaryFunction, MAX_SWEEP_INPUTS};
use crate::gf4::{gf4_add, gf4_mul, mod4_add, qmax, qmin, shift_apply, Gf4Value};

/// Number of rows above which the dispatching sweep functions go parallel.
#[cfg(feature = "parallel")]
const PAR_THRESHOLD: usize = 256;

/// Values of every wire, indexed by wire id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisState {
    values: Vec<Gf4Value>,
}

impl BasisState {
    pub fn new(values: Vec<Gf4Value>) -> BasisState {
        BasisState { values }
    }

    pub fn zeros(width: usize) -> BasisState {
        BasisState {
            values: vec![Gf4Value::ZERO; width],
        }
    }

    pub fn get(&self, wire: usize) -> Gf4Value {
        self.values[wire]
    }

    pub fn set(&mut self, wire: usize, value: Gf4Value) {
        self.values[wire] = value;
    }

    pub fn values(&self) -> &[Gf4Value] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimError {
    #[error("circuit has {want} primary inputs but {got} values were supplied")]
    MissingInput { want: usize, got: usize },
    #[error("{0} primary inputs exceed the exhaustive sweep cap of {MAX_SWEEP_INPUTS}")]
    TooManyInputs(usize),
    #[error("circuit declares no outputs")]
    NoOutputs,
    #[error("arity mismatch: {0} vs {1} inputs, {2} vs {3} outputs")]
    ArityMismatch(usize, usize, usize, usize),
}

/// Apply one gate in place. Only the gate's target wire changes.
pub fn apply_gate(state: &mut BasisState, gate: &Gate) {
    match gate {
        Gate::Ms {
            control,
            target,
            shift,
        } => {
            if state.get(*control) == Gf4Value::THREE {
                state.set(*target, shift_apply(*shift, state.get(*target)));
            }
        }
        Gate::Feynman { a, b } => {
            state.set(*b, gf4_add(state.get(*a), state.get(*b)));
        }
        Gate::Toffoli { a, b, c } => {
            let prod = gf4_mul(state.get(*a), state.get(*b));
            state.set(*c, gf4_add(prod, state.get(*c)));
        }
        Gate::Max { inputs, target } => {
            let folded = inputs
                .iter()
                .fold(state.get(*target), |acc, &w| qmax(acc, state.get(w)));
            state.set(*target, folded);
        }
        Gate::Min { inputs, target } => {
            let folded = inputs
                .iter()
                .fold(state.get(*target), |acc, &w| qmin(acc, state.get(w)));
            state.set(*target, folded);
        }
        Gate::Gqg {
            controls,
            target,
            shifts,
        } => {
            let v = state.get(controls[0]);
            if controls.iter().all(|&c| state.get(c) == v) {
                state.set(*target, shift_apply(shifts[v.index()], state.get(*target)));
            }
        }
        Gate::C2cs {
            a,
            b,
            target,
            pair,
            amount,
        } => {
            if pair.matches(state.get(*a), state.get(*b)) {
                state.set(*target, mod4_add(state.get(*target), *amount));
            }
        }
        Gate::Add { a, b } => {
            state.set(*b, mod4_add(state.get(*a), state.get(*b)));
        }
        Gate::Shift { target, op } => {
            state.set(*target, shift_apply(*op, state.get(*target)));
        }
    }
}

/// Apply every gate of a circuit to an arbitrary full state, ignoring wire
/// initial values. Used for gadget equivalence and bijectivity checks.
pub fn apply_circuit(state: &mut BasisState, circuit: &Circuit) {
    for gate in circuit.gates() {
        apply_gate(state, gate);
    }
}

/// Run a circuit: initialize ancilla and constant wires from their declared
/// values, bind the primary inputs, then apply the gates in order.
pub fn run(circuit: &Circuit, inputs: &[Gf4Value]) -> Result<BasisState, SimError> {
    let primaries = circuit.primary_inputs();
    if primaries.len() != inputs.len() {
        return Err(SimError::MissingInput {
            want: primaries.len(),
            got: inputs.len(),
        });
    }
    let mut state = BasisState::zeros(circuit.wire_count());
    for wire in circuit.wires() {
        match wire.role {
            WireRole::PrimaryInput => {}
            WireRole::Ancilla | WireRole::Constant => {
                state.set(wire.id, wire.init.unwrap_or(Gf4Value::ZERO));
            }
        }
    }
    for (slot, &wire) in primaries.iter().enumerate() {
        state.set(wire, inputs[slot]);
    }
    apply_circuit(&mut state, circuit);
    Ok(state)
}

fn sweep_row(circuit: &Circuit, m: usize, index: usize) -> Vec<Gf4Value> {
    let inputs = index_to_inputs(index, m);
    let state = run(circuit, &inputs).expect("sweep supplies all inputs");
    circuit
        .outputs()
        .iter()
        .map(|(wire, _)| state.get(*wire))
        .collect()
}

fn sweep_preflight(circuit: &Circuit) -> Result<(usize, usize), SimError> {
    let m = circuit.primary_inputs().len();
    if m > MAX_SWEEP_INPUTS {
        return Err(SimError::TooManyInputs(m));
    }
    let k = circuit.outputs().len();
    if k == 0 {
        return Err(SimError::NoOutputs);
    }
    Ok((m, k))
}

/// Exhaustive truth-table extraction, sequential sweep.
pub fn truth_table_seq(circuit: &Circuit) -> Result<QuaternaryFunction, SimError> {
    let (m, k) = sweep_preflight(circuit)?;
    let table = (0..row_count(m))
        .map(|idx| sweep_row(circuit, m, idx))
        .collect();
    Ok(QuaternaryFunction::new(m, k, table).expect("sweep builds a complete table"))
}

/// Exhaustive truth-table extraction on the rayon pool, merged by row index.
#[cfg(feature = "parallel")]
pub fn truth_table_par(circuit: &Circuit) -> Result<QuaternaryFunction, SimError> {
    use rayon::prelude::*;
    let (m, k) = sweep_preflight(circuit)?;
    let table: Vec<Vec<Gf4Value>> = (0..row_count(m))
        .into_par_iter()
        .map(|idx| sweep_row(circuit, m, idx))
        .collect();
    Ok(QuaternaryFunction::new(m, k, table).expect("sweep builds a complete table"))
}

/// Exhaustive truth-table extraction; picks the parallel sweep for larger
/// input spaces when built with the `parallel` feature.
pub fn truth_table(circuit: &Circuit) -> Result<QuaternaryFunction, SimError> {
    #[cfg(feature = "parallel")]
    {
        let m = circuit.primary_inputs().len();
        if m <= MAX_SWEEP_INPUTS && row_count(m) >= PAR_THRESHOLD {
            return truth_table_par(circuit);
        }
    }
    truth_table_seq(circuit)
}

/// Outcome of an equivalence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    /// First mismatching input vector in lexicographic order, with the
    /// output vectors of both circuits.
    Mismatch {
        inputs: Vec<Gf4Value>,
        left: Vec<Gf4Value>,
        right: Vec<Gf4Value>,
    },
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent)
    }
}

fn equiv_preflight(c1: &Circuit, c2: &Circuit) -> Result<usize, SimError> {
    let (m1, k1) = sweep_preflight(c1)?;
    let (m2, k2) = sweep_preflight(c2)?;
    if m1 != m2 || k1 != k2 {
        return Err(SimError::ArityMismatch(m1, m2, k1, k2));
    }
    Ok(m1)
}

fn mismatch_at(c1: &Circuit, c2: &Circuit, m: usize, idx: usize) -> Option<Equivalence> {
    let left = sweep_row(c1, m, idx);
    let right = sweep_row(c2, m, idx);
    if left == right {
        None
    } else {
        Some(Equivalence::Mismatch {
            inputs: index_to_inputs(idx, m),
            left,
            right,
        })
    }
}

/// Check two circuits for truth-table equality, sequential sweep.
pub fn equivalent_seq(c1: &Circuit, c2: &Circuit) -> Result<Equivalence, SimError> {
    let m = equiv_preflight(c1, c2)?;
    for idx in 0..row_count(m) {
        if let Some(mismatch) = mismatch_at(c1, c2, m, idx) {
            return Ok(mismatch);
        }
    }
    Ok(Equivalence::Equivalent)
}

/// Parallel equivalence sweep over row chunks; still reports the first
/// mismatch in input order thanks to `find_map_first`.
#[cfg(feature = "parallel")]
pub fn equivalent_par(c1: &Circuit, c2: &Circuit) -> Result<Equivalence, SimError> {
    use rayon::prelude::*;
    const CHUNK: usize = 256;
    let m = equiv_preflight(c1, c2)?;
    let rows = row_count(m);
    let found = (0..rows.div_ceil(CHUNK))
        .into_par_iter()
        .find_map_first(|chunk| {
            let start = chunk * CHUNK;
            (start..rows.min(start + CHUNK)).find_map(|idx| mismatch_at(c1, c2, m, idx))
        });
    Ok(found.unwrap_or(Equivalence::Equivalent))
}

/// Exhaustive circuit equivalence with first counterexample.
pub fn equivalent(c1: &Circuit, c2: &Circuit) -> Result<Equivalence, SimError> {
    #[cfg(feature = "parallel")]
    {
        let m = c1.primary_inputs().len();
        if m <= MAX_SWEEP_INPUTS && row_count(m) >= PAR_THRESHOLD {
            return equivalent_par(c1, c2);
        }
    }
    equivalent_seq(c1, c2)
}

/// Randomized equivalence check for circuits beyond the exhaustive sweep
/// cap. A pass is NOT a proof of equivalence; reports must label it as
/// sampled. Inputs are drawn from a splitmix stream of the given seed, so
/// runs are reproducible.
pub fn equivalent_sampled(
    c1: &Circuit,
    c2: &Circuit,
    samples: usize,
    seed: u64,
) -> Result<Equivalence, SimError> {
    let m1 = c1.primary_inputs().len();
    let m2 = c2.primary_inputs().len();
    let (k1, k2) = (c1.outputs().len(), c2.outputs().len());
    if m1 != m2 || k1 != k2 {
        return Err(SimError::ArityMismatch(m1, m2, k1, k2));
    }
    if k1 == 0 {
        return Err(SimError::NoOutputs);
    }
    let mut state = seed;
    let mut next = || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    for _ in 0..samples {
        let inputs: Vec<Gf4Value> = (0..m1)
            .map(|i| Gf4Value::from_u8(((next() >> (2 * (i % 16))) & 3) as u8))
            .collect();
        let read = |c: &Circuit| -> Result<Vec<Gf4Value>, SimError> {
            let s = run(c, &inputs)?;
            Ok(c.outputs().iter().map(|(w, _)| s.get(*w)).collect())
        };
        let left = read(c1)?;
        let right = read(c2)?;
        if left != right {
            return Ok(Equivalence::Mismatch {
                inputs,
                left,
                right,
            });
        }
    }
    Ok(Equivalence::Equivalent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::ValuePair;
    use crate::gf4::shift_by_symbol;

    fn g(v: u8) -> Gf4Value {
        Gf4Value::from_u8(v)
    }

    #[test]
    fn ms_fires_only_on_control_three() {
        let mut c = Circuit::new();
        let ctl = c.add_input();
        let tgt = c.add_input();
        c.append_gate(Gate::Ms {
            control: ctl,
            target: tgt,
            shift: shift_by_symbol("x+1").unwrap(),
        })
        .unwrap();

        let s = run(&c, &[g(3), g(0)]).unwrap();
        assert_eq!(s.get(tgt), g(1));
        let s = run(&c, &[g(2), g(0)]).unwrap();
        assert_eq!(s.get(tgt), g(0));
    }

    #[test]
    fn feynman_adds_over_gf4() {
        let mut c = Circuit::new();
        let a = c.add_input();
        let b = c.add_input();
        c.append_gate(Gate::Feynman { a, b }).unwrap();
        let s = run(&c, &[g(2), g(3)]).unwrap();
        assert_eq!(s.get(b), g(1));
        assert_eq!(s.get(a), g(2));
    }

    #[test]
    fn c2cs_fires_on_pair_only() {
        let mut c = Circuit::new();
        let a = c.add_input();
        let b = c.add_input();
        let t = c.add_ancilla(g(0));
        c.append_gate(Gate::C2cs {
            a,
            b,
            target: t,
            pair: ValuePair::new(g(1), g(3)).unwrap(),
            amount: g(1),
        })
        .unwrap();
        c.add_output(t, "y").unwrap();

        assert_eq!(run(&c, &[g(1), g(3)]).unwrap().get(t), g(1));
        assert_eq!(run(&c, &[g(3), g(1)]).unwrap().get(t), g(1));
        assert_eq!(run(&c, &[g(1), g(2)]).unwrap().get(t), g(0));
    }

    #[test]
    fn add_gate_mod4() {
        let mut c = Circuit::new();
        let a = c.add_input();
        let b = c.add_input();
        c.append_gate(Gate::Add { a, b }).unwrap();
        let s = run(&c, &[g(3), g(2)]).unwrap();
        assert_eq!(s.values(), &[g(3), g(1)]);
    }

    #[test]
    fn gqg_projection_semantics() {
        // GQG realizing L_2: shift x+1 on control value 2, identity elsewhere.
        let mut c = Circuit::new();
        let a = c.add_input();
        let t = c.add_ancilla(g(0));
        let id = crate::gf4::shift_identity();
        let mut shifts = [id; 4];
        shifts[2] = shift_by_symbol("x+1").unwrap();
        c.append_gate(Gate::Gqg {
            controls: vec![a],
            target: t,
            shifts,
        })
        .unwrap();
        c.add_output(t, "y").unwrap();
        assert_eq!(run(&c, &[g(2)]).unwrap().get(t), g(1));
        assert_eq!(run(&c, &[g(1)]).unwrap().get(t), g(0));
    }

    #[test]
    fn gqg_multi_control_requires_agreement() {
        let mut c = Circuit::new();
        let a = c.add_input();
        let b = c.add_input();
        let t = c.add_ancilla(g(0));
        let id = crate::gf4::shift_identity();
        let mut shifts = [id; 4];
        shifts[1] = shift_by_symbol("x+3").unwrap();
        c.append_gate(Gate::Gqg {
            controls: vec![a, b],
            target: t,
            shifts,
        })
        .unwrap();
        c.add_output(t, "y").unwrap();
        assert_eq!(run(&c, &[g(1), g(1)]).unwrap().get(t), g(3));
        assert_eq!(run(&c, &[g(1), g(2)]).unwrap().get(t), g(0));
        assert_eq!(run(&c, &[g(2), g(2)]).unwrap().get(t), g(0), "identity row");
    }

    #[test]
    fn run_checks_input_count() {
        let mut c = Circuit::new();
        c.add_input();
        c.add_input();
        assert_eq!(
            run(&c, &[g(0)]),
            Err(SimError::MissingInput { want: 2, got: 1 })
        );
    }

    #[test]
    fn empty_circuit_passes_inputs_through() {
        let mut c = Circuit::new();
        let a = c.add_input();
        c.add_ancilla(g(2));
        let s = run(&c, &[g(2)]).unwrap();
        assert_eq!(s.get(a), g(2));
        assert_eq!(s.get(1), g(2));
    }

    #[test]
    fn truth_table_of_identity() {
        let mut c = Circuit::new();
        let a = c.add_input();
        c.add_output(a, "y").unwrap();
        let f = truth_table_seq(&c).unwrap();
        for v in Gf4Value::ALL {
            assert_eq!(f.eval(&[v]).unwrap(), &[v]);
        }
    }

    #[test]
    fn truth_table_of_feynman_is_the_addition_table() {
        let mut c = Circuit::new();
        let a = c.add_input();
        let b = c.add_input();
        c.append_gate(Gate::Feynman { a, b }).unwrap();
        c.add_output(a, "a").unwrap();
        c.add_output(b, "sum").unwrap();
        let f = truth_table(&c).unwrap();
        for x in Gf4Value::ALL {
            for y in Gf4Value::ALL {
                assert_eq!(f.eval(&[x, y]).unwrap(), &[x, gf4_add(x, y)]);
            }
        }
    }

    #[test]
    fn feynman_vs_add_counterexample() {
        let mut c1 = Circuit::new();
        let a = c1.add_input();
        let b = c1.add_input();
        c1.append_gate(Gate::Feynman { a, b }).unwrap();
        c1.add_output(b, "y").unwrap();

        let mut c2 = Circuit::new();
        let a = c2.add_input();
        let b = c2.add_input();
        c2.append_gate(Gate::Add { a, b }).unwrap();
        c2.add_output(b, "y").unwrap();

        // GF(4) and mod-4 addition agree on (1,2) but differ on (1,1):
        // 1+1 = 0 over GF(4), 2 modulo 4. (1,1) is the first mismatch.
        match equivalent_seq(&c1, &c2).unwrap() {
            Equivalence::Mismatch {
                inputs,
                left,
                right,
            } => {
                assert_eq!(inputs, vec![g(1), g(1)]);
                assert_eq!(left, vec![g(0)]);
                assert_eq!(right, vec![g(2)]);
            }
            other => panic!("expected mismatch, got {other:?}"),
        }
    }

    #[test]
    fn circuit_equivalent_to_itself() {
        let mut c = Circuit::new();
        let a = c.add_input();
        let b = c.add_input();
        let t = c.add_ancilla(g(0));
        c.append_gate(Gate::Toffoli { a, b, c: t }).unwrap();
        c.add_output(t, "y").unwrap();
        assert!(equivalent(&c, &c).unwrap().is_equivalent());
    }

    #[test]
    fn gates_touch_only_their_target() {
        let mut c = Circuit::new();
        for _ in 0..4 {
            c.add_input();
        }
        let gates = vec![
            Gate::Ms {
                control: 0,
                target: 1,
                shift: shift_by_symbol("x0123").unwrap(),
            },
            Gate::Feynman { a: 2, b: 3 },
            Gate::Toffoli { a: 0, b: 1, c: 2 },
            Gate::Add { a: 1, b: 0 },
            Gate::Max {
                inputs: vec![0, 1],
                target: 2,
            },
            Gate::Min {
                inputs: vec![2, 3],
                target: 0,
            },
        ];
        for gate in gates {
            for idx in 0..256 {
                let vals: Vec<Gf4Value> = index_to_inputs(idx, 4);
                let mut state = BasisState::new(vals.clone());
                apply_gate(&mut state, &gate);
                let t = gate.target();
                for (w, val) in vals.iter().enumerate() {
                    if w != t {
                        assert_eq!(state.get(w), *val, "{:?} touched q{w}", gate.kind());
                    }
                }
            }
        }
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_and_sequential_sweeps_agree() {
        let mut c = Circuit::new();
        let a = c.add_input();
        let b = c.add_input();
        let d = c.add_input();
        let e = c.add_input();
        let t = c.add_ancilla(g(0));
        c.append_gate(Gate::Toffoli { a, b, c: t }).unwrap();
        c.append_gate(Gate::Feynman { a: d, b: t }).unwrap();
        c.append_gate(Gate::Add { a: e, b: t }).unwrap();
        c.add_output(t, "y").unwrap();
        assert_eq!(truth_table_seq(&c).unwrap(), truth_table_par(&c).unwrap());
        assert!(equivalent_par(&c, &c).unwrap().is_equivalent());
    }

    #[test]
    fn too_many_inputs_rejected() {
        let mut c = Circuit::new();
        for _ in 0..13 {
            c.add_input();
        }
        c.add_output(0, "y").unwrap();
        assert_eq!(truth_table_seq(&c), Err(SimError::TooManyInputs(13)));
    }

    #[test]
    fn sampled_equivalence_catches_wide_mismatches() {
        // 14 inputs is past the exhaustive cap; sampling still works.
        let build = |and_gate: bool| {
            let mut c = Circuit::new();
            for _ in 0..14 {
                c.add_input();
            }
            let t = c.add_ancilla(g(0));
            for w in 0..14 {
                c.append_gate(if and_gate && w == 7 {
                    Gate::Feynman { a: w, b: t }
                } else {
                    Gate::Add { a: w, b: t }
                })
                .unwrap();
            }
            c.add_output(t, "y").unwrap();
            c
        };
        let c1 = build(false);
        assert!(equivalent_sampled(&c1, &c1, 64, 7).unwrap().is_equivalent());
        let c2 = build(true);
        assert!(!equivalent_sampled(&c1, &c2, 512, 7).unwrap().is_equivalent());
    }
}
