//! Synthesis toolchain for quaternary (GF(4)) logic circuits.
//!
//! The pipeline turns multi-output quaternary truth tables into gate
//! netlists through projection-operator minterm expressions, simplifies the
//! expressions, lowers macro gates toward Muthukrishnan-Stroud primitives
//! and verifies every step by exhaustive classical simulation.
//!
//! Modules:
//! - [`gf4`] — field and modulo-4 arithmetic, shift catalog, projections
//! - [`circuit`] — gate netlist IR, cost/level/ancilla accounting, text format
//! - [`sim`] — basis-state simulation, truth tables, equivalence checking
//! - [`func`] — complete quaternary truth tables and the `.qtt` format
//! - [`expr`] — sum-of-products expressions over projection literals
//! - [`synth`] — minterm extraction, simplification rules, circuit lowering
//! - [`lower`] — M-S-level gadgets and the decomposition search oracle
//!
//! Exhaustive sweeps run on a rayon pool when the `parallel` feature
//! (default) is enabled; sequential variants are always available.

pub mod circuit;
pub mod expr;
pub mod func;
pub mod gf4;
pub mod lower;
pub mod sim;
pub mod synth;

pub use circuit::{
    circuit_cost, circuit_levels, parse, serialize, Circuit, CostModel, Gate, GateKind,
    NetlistError, ValuePair, Wire, WireRole,
};
pub use expr::{eval_expr, Factor, Product, QExpr};
pub use func::{parse_qtt, QuaternaryFunction};
pub use gf4::{
    gf4_add, gf4_mul, mod4_add, projection, qmax, qmin, quat_not, shift_apply, shift_catalog,
    shift_compose, shift_inverse, Gf4Value, ProjFamily, ProjectionKind, ShiftOp,
};
pub use lower::{decompose, search_decomposition, GadgetLibrary};
pub use sim::{apply_gate, equivalent, run, truth_table, BasisState, Equivalence};
pub use synth::{
    build_expression, extract_minterms, lower, simplify, synth, Minterm, SynthStats,
};
