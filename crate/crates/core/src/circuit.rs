//! Gate and netlist representation for quaternary circuits: wires with
//! roles and initial values, the gate set, cost/level/ancilla accounting and
//! the line-oriented netlist text format.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::gf4::{shift_by_symbol, Gf4Value, ShiftOp};

/// What a wire carries at circuit start.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WireRole {
    /// Driven by the environment; enumerated by truth-table sweeps.
    PrimaryInput,
    /// Helper wire with a known initial value, counted in ancilla reports.
    Ancilla,
    /// Fixed-value wire, not counted as an ancilla.
    Constant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Wire {
    pub id: usize,
    pub role: WireRole,
    /// Initial value for ancilla and constant wires; `None` for inputs.
    pub init: Option<Gf4Value>,
}

/// An unordered pair of distinct values drawn from {1,2,3}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ValuePair {
    lo: Gf4Value,
    hi: Gf4Value,
}

impl ValuePair {
    pub fn new(a: Gf4Value, b: Gf4Value) -> Result<ValuePair, CircuitError> {
        if a == b {
            return Err(CircuitError::InvalidPair(a.value(), b.value()));
        }
        if a == Gf4Value::ZERO || b == Gf4Value::ZERO {
            return Err(CircuitError::InvalidPair(a.value(), b.value()));
        }
        let (lo, hi) = if a.value() < b.value() { (a, b) } else { (b, a) };
        Ok(ValuePair { lo, hi })
    }

    pub fn lo(self) -> Gf4Value {
        self.lo
    }

    pub fn hi(self) -> Gf4Value {
        self.hi
    }

    pub fn matches(self, a: Gf4Value, b: Gf4Value) -> bool {
        (a == self.lo && b == self.hi) || (a == self.hi && b == self.lo)
    }
}

impl fmt::Display for ValuePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// The gate set. Every gate names the wires it touches by id; semantics live
/// in the simulator.
#[derive(Debug, Clone, PartialEq)]
pub enum Gate {
    /// Muthukrishnan-Stroud primitive: shift the target iff control = 3.
    Ms {
        control: usize,
        target: usize,
        shift: ShiftOp,
    },
    /// b <- a + b over GF(4).
    Feynman { a: usize, b: usize },
    /// c <- a.b + c over GF(4).
    Toffoli { a: usize, b: usize, c: usize },
    /// target <- max(inputs..., target).
    Max { inputs: Vec<usize>, target: usize },
    /// target <- min(inputs..., target).
    Min { inputs: Vec<usize>, target: usize },
    /// Generalized quaternary gate: when all controls agree on a value v,
    /// apply `shifts[v]` to the target.
    Gqg {
        controls: Vec<usize>,
        target: usize,
        shifts: [ShiftOp; 4],
    },
    /// Controlled cyclic shift: when {a,b} equals the value pair, add
    /// `amount` to the target modulo 4.
    C2cs {
        a: usize,
        b: usize,
        target: usize,
        pair: ValuePair,
        amount: Gf4Value,
    },
    /// b <- a + b modulo 4.
    Add { a: usize, b: usize },
    /// Unconditional 1-qudit shift on the target.
    Shift { target: usize, op: ShiftOp },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    Ms,
    Feynman,
    Toffoli,
    Max,
    Min,
    Gqg,
    C2cs,
    Add,
    Shift,
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GateKind::Ms => "ms",
            GateKind::Feynman => "feynman",
            GateKind::Toffoli => "toffoli",
            GateKind::Max => "max",
            GateKind::Min => "min",
            GateKind::Gqg => "gqg",
            GateKind::C2cs => "c2cs",
            GateKind::Add => "add",
            GateKind::Shift => "shift",
        };
        write!(f, "{s}")
    }
}

impl Gate {
    pub fn kind(&self) -> GateKind {
        match self {
            Gate::Ms { .. } => GateKind::Ms,
            Gate::Feynman { .. } => GateKind::Feynman,
            Gate::Toffoli { .. } => GateKind::Toffoli,
            Gate::Max { .. } => GateKind::Max,
            Gate::Min { .. } => GateKind::Min,
            Gate::Gqg { .. } => GateKind::Gqg,
            Gate::C2cs { .. } => GateKind::C2cs,
            Gate::Add { .. } => GateKind::Add,
            Gate::Shift { .. } => GateKind::Shift,
        }
    }

    /// All wires the gate touches, reads and writes alike.
    pub fn wires(&self) -> Vec<usize> {
        match self {
            Gate::Ms {
                control, target, ..
            } => vec![*control, *target],
            Gate::Feynman { a, b } | Gate::Add { a, b } => vec![*a, *b],
            Gate::Toffoli { a, b, c } => vec![*a, *b, *c],
            Gate::Max { inputs, target } | Gate::Min { inputs, target } => {
                let mut w = inputs.clone();
                w.push(*target);
                w
            }
            Gate::Gqg {
                controls, target, ..
            } => {
                let mut w = controls.clone();
                w.push(*target);
                w
            }
            Gate::C2cs { a, b, target, .. } => vec![*a, *b, *target],
            Gate::Shift { target, .. } => vec![*target],
        }
    }

    /// The single wire the gate writes.
    pub fn target(&self) -> usize {
        match self {
            Gate::Ms { target, .. }
            | Gate::Max { target, .. }
            | Gate::Min { target, .. }
            | Gate::Gqg { target, .. }
            | Gate::C2cs { target, .. }
            | Gate::Shift { target, .. } => *target,
            Gate::Feynman { b, .. } | Gate::Add { b, .. } => *b,
            Gate::Toffoli { c, .. } => *c,
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum CircuitError {
    #[error("gate references unknown wire q{0}")]
    UnknownWire(usize),
    #[error("gate wire list contains q{0} more than once")]
    DuplicateWire(usize),
    #[error("gate has an empty input list")]
    EmptyInputs,
    #[error("pair {{{0},{1}}} is not two distinct values from {{1,2,3}}")]
    InvalidPair(u8, u8),
    #[error("c2cs amount must be 1, 2 or 3")]
    InvalidAmount,
    #[error("output references unknown wire q{0}")]
    UnknownOutputWire(usize),
    #[error("no cost declared for gate kind {0}")]
    UnpricedGate(GateKind),
    #[error("{0} gate target q{1} is not an ancilla wire")]
    FoldTargetNotAncilla(GateKind, usize),
}

/// An ordered gate netlist over a fixed set of wires.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Circuit {
    wires: Vec<Wire>,
    gates: Vec<Gate>,
    outputs: Vec<(usize, String)>,
}

impl Circuit {
    pub fn new() -> Circuit {
        Circuit::default()
    }

    pub fn add_input(&mut self) -> usize {
        let id = self.wires.len();
        self.wires.push(Wire {
            id,
            role: WireRole::PrimaryInput,
            init: None,
        });
        id
    }

    pub fn add_ancilla(&mut self, init: Gf4Value) -> usize {
        let id = self.wires.len();
        self.wires.push(Wire {
            id,
            role: WireRole::Ancilla,
            init: Some(init),
        });
        id
    }

    pub fn add_constant(&mut self, init: Gf4Value) -> usize {
        let id = self.wires.len();
        self.wires.push(Wire {
            id,
            role: WireRole::Constant,
            init: Some(init),
        });
        id
    }

    pub fn wires(&self) -> &[Wire] {
        &self.wires
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn outputs(&self) -> &[(usize, String)] {
        &self.outputs
    }

    pub fn wire_count(&self) -> usize {
        self.wires.len()
    }

    /// Ids of primary-input wires in ascending order.
    pub fn primary_inputs(&self) -> Vec<usize> {
        self.wires
            .iter()
            .filter(|w| w.role == WireRole::PrimaryInput)
            .map(|w| w.id)
            .collect()
    }

    fn validate_gate(&self, gate: &Gate) -> Result<(), CircuitError> {
        let wires = gate.wires();
        if wires.is_empty() {
            return Err(CircuitError::EmptyInputs);
        }
        match gate {
            Gate::Max { inputs, .. } | Gate::Min { inputs, .. } | Gate::Gqg { controls: inputs, .. }
                if inputs.is_empty() =>
            {
                return Err(CircuitError::EmptyInputs)
            }
            Gate::C2cs { amount, .. } if *amount == Gf4Value::ZERO => {
                return Err(CircuitError::InvalidAmount)
            }
            _ => {}
        }
        let mut seen = vec![false; self.wires.len()];
        for w in wires {
            if w >= self.wires.len() {
                return Err(CircuitError::UnknownWire(w));
            }
            if seen[w] {
                return Err(CircuitError::DuplicateWire(w));
            }
            seen[w] = true;
        }
        Ok(())
    }

    pub fn append_gate(&mut self, gate: Gate) -> Result<(), CircuitError> {
        self.validate_gate(&gate)?;
        self.gates.push(gate);
        Ok(())
    }

    pub fn add_output(&mut self, wire: usize, name: impl Into<String>) -> Result<(), CircuitError> {
        if wire >= self.wires.len() {
            return Err(CircuitError::UnknownOutputWire(wire));
        }
        self.outputs.push((wire, name.into()));
        Ok(())
    }

    /// Number of ancilla-role wires.
    pub fn ancilla_count(&self) -> usize {
        self.wires
            .iter()
            .filter(|w| w.role == WireRole::Ancilla)
            .count()
    }

    /// Max/Min gates overwrite their target, so synthesized circuits must
    /// only ever point them at ancilla wires; this lint enforces that.
    pub fn lint_fold_targets(&self) -> Result<(), CircuitError> {
        for gate in &self.gates {
            if matches!(gate.kind(), GateKind::Max | GateKind::Min) {
                let t = gate.target();
                if self.wires[t].role != WireRole::Ancilla {
                    return Err(CircuitError::FoldTargetNotAncilla(gate.kind(), t));
                }
            }
        }
        Ok(())
    }
}

/// Per-gate-kind M-S gate counts used for cost reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostModel {
    costs: BTreeMap<GateKind, u64>,
}

impl Default for CostModel {
    /// The declared constants: Feynman 5, Toffoli 17, MAX/MIN 6, GQG 8,
    /// C2CS 8, ADD 8, M-S 1 and 1 per bare 1-qudit shift.
    fn default() -> CostModel {
        let mut costs = BTreeMap::new();
        costs.insert(GateKind::Ms, 1);
        costs.insert(GateKind::Feynman, 5);
        costs.insert(GateKind::Toffoli, 17);
        costs.insert(GateKind::Max, 6);
        costs.insert(GateKind::Min, 6);
        costs.insert(GateKind::Gqg, 8);
        costs.insert(GateKind::C2cs, 8);
        costs.insert(GateKind::Add, 8);
        costs.insert(GateKind::Shift, 1);
        CostModel { costs }
    }
}

impl CostModel {
    pub fn empty() -> CostModel {
        CostModel {
            costs: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, kind: GateKind, cost: u64) {
        self.costs.insert(kind, cost);
    }

    pub fn cost_of(&self, kind: GateKind) -> Option<u64> {
        self.costs.get(&kind).copied()
    }
}

/// Total cost of a circuit under a model; additive over gates.
pub fn circuit_cost(circuit: &Circuit, model: &CostModel) -> Result<u64, CircuitError> {
    let mut total = 0u64;
    for gate in circuit.gates() {
        total += model
            .cost_of(gate.kind())
            .ok_or(CircuitError::UnpricedGate(gate.kind()))?;
    }
    Ok(total)
}

/// Circuit depth under as-soon-as-possible scheduling: gates sharing no wire
/// may occupy the same level, order along each wire is preserved.
pub fn circuit_levels(circuit: &Circuit) -> usize {
    let mut depth = vec![0usize; circuit.wire_count()];
    let mut max_level = 0;
    for gate in circuit.gates() {
        let wires = gate.wires();
        let level = wires.iter().map(|&w| depth[w]).max().unwrap_or(0) + 1;
        for w in wires {
            depth[w] = level;
        }
        max_level = max_level.max(level);
    }
    max_level
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {col}: {msg}")]
pub struct NetlistError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl NetlistError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> NetlistError {
        NetlistError {
            line,
            col,
            msg: msg.into(),
        }
    }
}

/// Canonical netlist text form: `.wires`, wire declarations in id order,
/// `.output` lines, then one line per gate.
pub fn serialize(circuit: &Circuit) -> String {
    let mut out = String::new();
    out.push_str(&format!(".wires {}\n", circuit.wire_count()));
    for wire in circuit.wires() {
        match wire.role {
            WireRole::PrimaryInput => out.push_str(&format!(".input q{}\n", wire.id)),
            WireRole::Ancilla => out.push_str(&format!(
                ".ancilla q{} = {}\n",
                wire.id,
                wire.init.unwrap_or(Gf4Value::ZERO)
            )),
            WireRole::Constant => out.push_str(&format!(
                ".const q{} = {}\n",
                wire.id,
                wire.init.unwrap_or(Gf4Value::ZERO)
            )),
        }
    }
    for (wire, name) in circuit.outputs() {
        out.push_str(&format!(".output {name} q{wire}\n"));
    }
    for gate in circuit.gates() {
        out.push_str(&serialize_gate(gate));
        out.push('\n');
    }
    out
}

/// Serialize one gate as its netlist line.
pub(crate) fn serialize_gate(gate: &Gate) -> String {
    serialize_gate_line(gate)
}

/// Parse one gate line outside of a netlist body.
pub(crate) fn parse_gate_text(text: &str) -> Result<Gate, NetlistError> {
    let tokens = tokenize(text);
    if tokens.is_empty() {
        return Err(NetlistError::new(1, 1, "expected a gate line"));
    }
    parse_gate_line(&tokens, 1)
}

fn join_wires(wires: &[usize]) -> String {
    wires
        .iter()
        .map(|w| format!("q{w}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn serialize_gate_line(gate: &Gate) -> String {
    match gate {
        Gate::Ms {
            control,
            target,
            shift,
        } => format!("ms q{control} q{target} {shift}"),
        Gate::Feynman { a, b } => format!("feynman q{a} q{b}"),
        Gate::Toffoli { a, b, c } => format!("toffoli q{a} q{b} q{c}"),
        Gate::Max { inputs, target } => format!("max {} -> q{target}", join_wires(inputs)),
        Gate::Min { inputs, target } => format!("min {} -> q{target}", join_wires(inputs)),
        Gate::Gqg {
            controls,
            target,
            shifts,
        } => format!(
            "gqg {} -> q{target} [{},{},{},{}]",
            join_wires(controls),
            shifts[0],
            shifts[1],
            shifts[2],
            shifts[3]
        ),
        Gate::C2cs {
            a,
            b,
            target,
            pair,
            amount,
        } => format!("c2cs q{a} q{b} {pair} +{amount} -> q{target}"),
        Gate::Add { a, b } => format!("add q{a} q{b}"),
        Gate::Shift { target, op } => format!("shift q{target} {op}"),
    }
}

struct Token<'a> {
    col: usize,
    text: &'a str,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let body = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, ch) in body.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push(Token {
                    col: s + 1,
                    text: &body[s..i],
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push(Token {
            col: s + 1,
            text: &body[s..],
        });
    }
    tokens
}

fn parse_wire_ref(tok: &Token<'_>, line: usize) -> Result<usize, NetlistError> {
    let text = tok.text;
    if let Some(rest) = text.strip_prefix('q') {
        if let Ok(id) = rest.parse::<usize>() {
            return Ok(id);
        }
    }
    Err(NetlistError::new(
        line,
        tok.col,
        format!("expected wire reference like q0, found `{text}`"),
    ))
}

fn parse_digit(tok: &Token<'_>, line: usize) -> Result<Gf4Value, NetlistError> {
    tok.text
        .parse::<u64>()
        .ok()
        .and_then(|v| Gf4Value::new(v).ok())
        .ok_or_else(|| {
            NetlistError::new(
                line,
                tok.col,
                format!("expected quaternary digit 0..3, found `{}`", tok.text),
            )
        })
}

fn parse_shift_sym(tok: &Token<'_>, line: usize) -> Result<ShiftOp, NetlistError> {
    shift_by_symbol(tok.text).ok_or_else(|| {
        NetlistError::new(
            line,
            tok.col,
            format!("unknown shift symbol `{}`", tok.text),
        )
    })
}

fn expect_token<'a, 'b>(
    tokens: &'a [Token<'b>],
    idx: usize,
    line: usize,
    what: &str,
) -> Result<&'a Token<'b>, NetlistError> {
    tokens.get(idx).ok_or_else(|| {
        let col = tokens.last().map(|t| t.col + t.text.len()).unwrap_or(1);
        NetlistError::new(line, col, format!("expected {what}"))
    })
}

enum WireDecl {
    Input,
    Ancilla(Gf4Value),
    Constant(Gf4Value),
}

/// Parse the netlist text format. Reports line/column and cause on
/// malformed input; gate-level validation errors carry the gate line.
pub fn parse(text: &str) -> Result<Circuit, NetlistError> {
    let mut wire_total: Option<usize> = None;
    let mut decls: Vec<Option<(WireDecl, usize)>> = Vec::new();
    let mut outputs: Vec<(usize, String, usize, usize)> = Vec::new();
    let mut gates: Vec<(Gate, usize)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let tokens = tokenize(raw);
        if tokens.is_empty() {
            continue;
        }
        let head = &tokens[0];
        if wire_total.is_none() {
            if head.text != ".wires" {
                return Err(NetlistError::new(
                    line,
                    head.col,
                    "netlist must start with a `.wires N` line",
                ));
            }
            let count_tok = expect_token(&tokens, 1, line, "wire count")?;
            let count = count_tok.text.parse::<usize>().map_err(|_| {
                NetlistError::new(line, count_tok.col, "wire count must be an integer")
            })?;
            wire_total = Some(count);
            decls = (0..count).map(|_| None).collect();
            continue;
        }
        let total = wire_total.unwrap();
        match head.text {
            ".wires" => {
                return Err(NetlistError::new(line, head.col, "duplicate `.wires` line"));
            }
            ".input" | ".ancilla" | ".const" => {
                if !gates.is_empty() {
                    return Err(NetlistError::new(
                        line,
                        head.col,
                        "wire declarations must precede gates",
                    ));
                }
                let wire_tok = expect_token(&tokens, 1, line, "wire reference")?;
                let id = parse_wire_ref(wire_tok, line)?;
                if id >= total {
                    return Err(NetlistError::new(
                        line,
                        wire_tok.col,
                        format!("wire q{id} out of range (declared {total} wires)"),
                    ));
                }
                if decls[id].is_some() {
                    return Err(NetlistError::new(
                        line,
                        wire_tok.col,
                        format!("wire q{id} declared twice"),
                    ));
                }
                let decl = if head.text == ".input" {
                    WireDecl::Input
                } else {
                    let eq = expect_token(&tokens, 2, line, "`=`")?;
                    if eq.text != "=" {
                        return Err(NetlistError::new(line, eq.col, "expected `=`"));
                    }
                    let val = parse_digit(expect_token(&tokens, 3, line, "initial value")?, line)?;
                    if head.text == ".ancilla" {
                        WireDecl::Ancilla(val)
                    } else {
                        WireDecl::Constant(val)
                    }
                };
                decls[id] = Some((decl, line));
            }
            ".output" => {
                let name_tok = expect_token(&tokens, 1, line, "output name")?;
                let wire_tok = expect_token(&tokens, 2, line, "wire reference")?;
                let id = parse_wire_ref(wire_tok, line)?;
                outputs.push((id, name_tok.text.to_string(), line, wire_tok.col));
            }
            _ => {
                let gate = parse_gate_line(&tokens, line)?;
                gates.push((gate, line));
            }
        }
    }

    wire_total.ok_or_else(|| NetlistError::new(1, 1, "empty netlist"))?;
    let mut circuit = Circuit::new();
    for (id, decl) in decls.iter().enumerate() {
        match decl {
            Some((WireDecl::Input, _)) => {
                circuit.add_input();
            }
            Some((WireDecl::Ancilla(v), _)) => {
                circuit.add_ancilla(*v);
            }
            Some((WireDecl::Constant(v), _)) => {
                circuit.add_constant(*v);
            }
            None => {
                return Err(NetlistError::new(
                    1,
                    1,
                    format!("wire q{id} has no declaration"),
                ));
            }
        }
    }
    for (id, name, line, col) in outputs {
        circuit
            .add_output(id, name)
            .map_err(|e| NetlistError::new(line, col, e.to_string()))?;
    }
    for (gate, line) in gates {
        circuit
            .append_gate(gate)
            .map_err(|e| NetlistError::new(line, 1, e.to_string()))?;
    }
    Ok(circuit)
}

fn split_arrow<'a, 'b>(
    tokens: &'a [Token<'b>],
    line: usize,
) -> Result<(&'a [Token<'b>], &'a Token<'b>), NetlistError> {
    let pos = tokens.iter().position(|t| t.text == "->").ok_or_else(|| {
        NetlistError::new(line, tokens[0].col, "expected `->` before target wire")
    })?;
    if pos + 1 >= tokens.len() {
        return Err(NetlistError::new(
            line,
            tokens[pos].col + 2,
            "expected target wire after `->`",
        ));
    }
    if pos + 2 < tokens.len() && tokens[0].text != "gqg" {
        return Err(NetlistError::new(
            line,
            tokens[pos + 2].col,
            "unexpected trailing tokens",
        ));
    }
    Ok((&tokens[1..pos], &tokens[pos + 1]))
}

fn parse_gate_line(tokens: &[Token<'_>], line: usize) -> Result<Gate, NetlistError> {
    let head = &tokens[0];
    let arity = |n: usize| -> Result<(), NetlistError> {
        if tokens.len() != n + 1 {
            Err(NetlistError::new(
                line,
                head.col,
                format!("`{}` expects {n} arguments", head.text),
            ))
        } else {
            Ok(())
        }
    };
    match head.text {
        "ms" => {
            arity(3)?;
            Ok(Gate::Ms {
                control: parse_wire_ref(&tokens[1], line)?,
                target: parse_wire_ref(&tokens[2], line)?,
                shift: parse_shift_sym(&tokens[3], line)?,
            })
        }
        "feynman" => {
            arity(2)?;
            Ok(Gate::Feynman {
                a: parse_wire_ref(&tokens[1], line)?,
                b: parse_wire_ref(&tokens[2], line)?,
            })
        }
        "toffoli" => {
            arity(3)?;
            Ok(Gate::Toffoli {
                a: parse_wire_ref(&tokens[1], line)?,
                b: parse_wire_ref(&tokens[2], line)?,
                c: parse_wire_ref(&tokens[3], line)?,
            })
        }
        "add" => {
            arity(2)?;
            Ok(Gate::Add {
                a: parse_wire_ref(&tokens[1], line)?,
                b: parse_wire_ref(&tokens[2], line)?,
            })
        }
        "shift" => {
            arity(2)?;
            Ok(Gate::Shift {
                target: parse_wire_ref(&tokens[1], line)?,
                op: parse_shift_sym(&tokens[2], line)?,
            })
        }
        "max" | "min" => {
            let (ins, target_tok) = split_arrow(tokens, line)?;
            let inputs = ins
                .iter()
                .map(|t| parse_wire_ref(t, line))
                .collect::<Result<Vec<_>, _>>()?;
            let target = parse_wire_ref(target_tok, line)?;
            if head.text == "max" {
                Ok(Gate::Max { inputs, target })
            } else {
                Ok(Gate::Min { inputs, target })
            }
        }
        "gqg" => {
            let (ins, target_tok) = split_arrow(tokens, line)?;
            let controls = ins
                .iter()
                .map(|t| parse_wire_ref(t, line))
                .collect::<Result<Vec<_>, _>>()?;
            let target = parse_wire_ref(target_tok, line)?;
            let arrow_pos = tokens.iter().position(|t| t.text == "->").unwrap();
            let list_tok = expect_token(tokens, arrow_pos + 2, line, "shift list [s0,s1,s2,s3]")?;
            let body = list_tok
                .text
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| {
                    NetlistError::new(line, list_tok.col, "expected shift list [s0,s1,s2,s3]")
                })?;
            let syms: Vec<&str> = body.split(',').collect();
            if syms.len() != 4 {
                return Err(NetlistError::new(
                    line,
                    list_tok.col,
                    "shift list must have exactly 4 entries",
                ));
            }
            let mut shifts = [crate::gf4::shift_identity(); 4];
            for (i, sym) in syms.iter().enumerate() {
                shifts[i] = shift_by_symbol(sym).ok_or_else(|| {
                    NetlistError::new(line, list_tok.col, format!("unknown shift symbol `{sym}`"))
                })?;
            }
            Ok(Gate::Gqg {
                controls,
                target,
                shifts,
            })
        }
        "c2cs" => {
            // c2cs qA qB {i,j} +k -> qT
            arity(6)?;
            let a = parse_wire_ref(&tokens[1], line)?;
            let b = parse_wire_ref(&tokens[2], line)?;
            let pair_tok = &tokens[3];
            let body = pair_tok
                .text
                .strip_prefix('{')
                .and_then(|s| s.strip_suffix('}'))
                .ok_or_else(|| {
                    NetlistError::new(line, pair_tok.col, "expected value pair like {1,3}")
                })?;
            let parts: Vec<&str> = body.split(',').collect();
            if parts.len() != 2 {
                return Err(NetlistError::new(
                    line,
                    pair_tok.col,
                    "value pair must have exactly 2 entries",
                ));
            }
            let pv = |s: &str| -> Option<Gf4Value> {
                s.parse::<u64>().ok().and_then(|v| Gf4Value::new(v).ok())
            };
            let (i, j) = match (pv(parts[0]), pv(parts[1])) {
                (Some(i), Some(j)) => (i, j),
                _ => {
                    return Err(NetlistError::new(
                        line,
                        pair_tok.col,
                        "pair entries must be digits 1..3",
                    ))
                }
            };
            let pair = ValuePair::new(i, j)
                .map_err(|e| NetlistError::new(line, pair_tok.col, e.to_string()))?;
            let amt_tok = &tokens[4];
            let amount = amt_tok
                .text
                .strip_prefix('+')
                .and_then(pv)
                .filter(|v| *v != Gf4Value::ZERO)
                .ok_or_else(|| {
                    NetlistError::new(line, amt_tok.col, "expected amount like +1, +2 or +3")
                })?;
            if tokens[5].text != "->" {
                return Err(NetlistError::new(line, tokens[5].col, "expected `->`"));
            }
            let target = parse_wire_ref(&tokens[6], line)?;
            Ok(Gate::C2cs {
                a,
                b,
                target,
                pair,
                amount,
            })
        }
        other => Err(NetlistError::new(
            line,
            head.col,
            format!("unknown gate or directive `{other}`"),
        )),
    }
}
