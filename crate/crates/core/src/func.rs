//! Complete multi-output quaternary truth tables and the `.qtt` text format.

use std::fmt::Write as _;

use thiserror::Error;

use crate::gf4::Gf4Value;

/// Hard cap on exhaustive input sweeps (4^12 rows).
pub const MAX_SWEEP_INPUTS: usize = 12;

/// An m-input, k-output function over {0,1,2,3}, completely specified.
///
/// Rows are stored in ascending lexicographic input order with the first
/// input as the most significant digit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternaryFunction {
    m: usize,
    k: usize,
    name: Option<String>,
    table: Vec<Vec<Gf4Value>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FunctionError {
    #[error("table has {got} rows, a complete {m}-input function needs {want}")]
    IncompleteTable { m: usize, got: usize, want: usize },
    #[error("row {row} has {got} outputs, expected {want}")]
    BadRow { row: usize, got: usize, want: usize },
    #[error("{0} inputs exceed the exhaustive sweep cap of {MAX_SWEEP_INPUTS}")]
    TooManyInputs(usize),
    #[error("input vector has {got} digits, expected {want}")]
    BadArity { got: usize, want: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct QttError {
    pub line: usize,
    pub msg: String,
}

impl QttError {
    fn new(line: usize, msg: impl Into<String>) -> QttError {
        QttError {
            line,
            msg: msg.into(),
        }
    }
}

pub fn row_count(m: usize) -> usize {
    4usize.pow(m as u32)
}

/// Decode a row index into its input vector (first input most significant).
pub fn index_to_inputs(index: usize, m: usize) -> Vec<Gf4Value> {
    let mut inputs = vec![Gf4Value::ZERO; m];
    let mut rest = index;
    for i in (0..m).rev() {
        inputs[i] = Gf4Value::from_u8((rest % 4) as u8);
        rest /= 4;
    }
    inputs
}

/// Encode an input vector as its row index.
pub fn inputs_to_index(inputs: &[Gf4Value]) -> usize {
    inputs
        .iter()
        .fold(0usize, |acc, v| acc * 4 + v.index())
}

impl QuaternaryFunction {
    pub fn new(
        m: usize,
        k: usize,
        table: Vec<Vec<Gf4Value>>,
    ) -> Result<QuaternaryFunction, FunctionError> {
        if m > MAX_SWEEP_INPUTS {
            return Err(FunctionError::TooManyInputs(m));
        }
        let want = row_count(m);
        if table.len() != want {
            return Err(FunctionError::IncompleteTable {
                m,
                got: table.len(),
                want,
            });
        }
        for (row, outs) in table.iter().enumerate() {
            if outs.len() != k {
                return Err(FunctionError::BadRow {
                    row,
                    got: outs.len(),
                    want: k,
                });
            }
        }
        Ok(QuaternaryFunction {
            m,
            k,
            name: None,
            table,
        })
    }

    /// Build from a closure evaluated on every input vector.
    pub fn from_fn(
        m: usize,
        k: usize,
        f: impl Fn(&[Gf4Value]) -> Vec<Gf4Value>,
    ) -> Result<QuaternaryFunction, FunctionError> {
        if m > MAX_SWEEP_INPUTS {
            return Err(FunctionError::TooManyInputs(m));
        }
        let table = (0..row_count(m))
            .map(|idx| f(&index_to_inputs(idx, m)))
            .collect();
        QuaternaryFunction::new(m, k, table)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> QuaternaryFunction {
        self.name = Some(name.into());
        self
    }

    pub fn input_count(&self) -> usize {
        self.m
    }

    pub fn output_count(&self) -> usize {
        self.k
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rows(&self) -> &[Vec<Gf4Value>] {
        &self.table
    }

    pub fn outputs_at_index(&self, index: usize) -> &[Gf4Value] {
        &self.table[index]
    }

    pub fn eval(&self, inputs: &[Gf4Value]) -> Result<&[Gf4Value], FunctionError> {
        if inputs.len() != self.m {
            return Err(FunctionError::BadArity {
                got: inputs.len(),
                want: self.m,
            });
        }
        Ok(&self.table[inputs_to_index(inputs)])
    }

    /// Count input vectors whose given output equals 1, 2 and 3.
    pub fn level_counts(&self, output: usize) -> (usize, usize, usize) {
        let mut counts = (0usize, 0usize, 0usize);
        for row in &self.table {
            match row[output].value() {
                1 => counts.0 += 1,
                2 => counts.1 += 1,
                3 => counts.2 += 1,
                _ => {}
            }
        }
        counts
    }

    /// Canonical `.qtt` text: optional `.name`, `.i`, `.o`, then explicit
    /// `inputs outputs` rows in ascending input order.
    pub fn to_qtt(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, ".name {name}");
        }
        let _ = writeln!(out, ".i {}", self.m);
        let _ = writeln!(out, ".o {}", self.k);
        for (idx, row) in self.table.iter().enumerate() {
            let ins: String = index_to_inputs(idx, self.m)
                .iter()
                .map(|v| char::from(b'0' + v.value()))
                .collect();
            let outs: String = row.iter().map(|v| char::from(b'0' + v.value())).collect();
            if self.m == 0 {
                let _ = writeln!(out, "{outs}");
            } else {
                let _ = writeln!(out, "{ins} {outs}");
            }
        }
        out
    }
}

fn parse_digit_str(s: &str, line: usize) -> Result<Vec<Gf4Value>, QttError> {
    s.bytes()
        .map(|b| {
            if b.is_ascii_digit() && b < b'4' {
                Ok(Gf4Value::from_u8(b - b'0'))
            } else {
                Err(QttError::new(
                    line,
                    format!("`{}` is not a quaternary digit string", s),
                ))
            }
        })
        .collect()
}

/// Parse the `.qtt` truth-table format.
///
/// Accepts explicit `inputs outputs` rows in any order, or output-only rows
/// in ascending input order when the `.ordered` flag is set. Incomplete or
/// duplicated rows are rejected.
pub fn parse_qtt(text: &str) -> Result<QuaternaryFunction, QttError> {
    let mut m: Option<usize> = None;
    let mut k: Option<usize> = None;
    let mut name: Option<String> = None;
    let mut ordered = false;
    let mut rows: Vec<Option<Vec<Gf4Value>>> = Vec::new();
    let mut next_ordered_row = 0usize;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let body = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match tokens[0] {
            ".i" => {
                let v = tokens
                    .get(1)
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| QttError::new(line, "`.i` needs an integer argument"))?;
                if v > MAX_SWEEP_INPUTS {
                    return Err(QttError::new(
                        line,
                        format!("{v} inputs exceed the cap of {MAX_SWEEP_INPUTS}"),
                    ));
                }
                m = Some(v);
                rows = vec![None; row_count(v)];
            }
            ".o" => {
                k = Some(
                    tokens
                        .get(1)
                        .and_then(|t| t.parse::<usize>().ok())
                        .filter(|&v| v > 0)
                        .ok_or_else(|| QttError::new(line, "`.o` needs a positive integer"))?,
                );
            }
            ".name" => {
                name = Some(
                    tokens
                        .get(1)
                        .ok_or_else(|| QttError::new(line, "`.name` needs an argument"))?
                        .to_string(),
                );
            }
            ".ordered" => ordered = true,
            t if t.starts_with('.') => {
                return Err(QttError::new(line, format!("unknown directive `{t}`")));
            }
            _ => {
                let (m, k) = match (m, k) {
                    (Some(m), Some(k)) => (m, k),
                    _ => {
                        return Err(QttError::new(
                            line,
                            "rows must come after `.i` and `.o` headers",
                        ))
                    }
                };
                let (index, outs) = if ordered || m == 0 {
                    if tokens.len() != 1 {
                        return Err(QttError::new(line, "ordered rows carry outputs only"));
                    }
                    let outs = parse_digit_str(tokens[0], line)?;
                    let idx = next_ordered_row;
                    next_ordered_row += 1;
                    if idx >= rows.len() {
                        return Err(QttError::new(line, "more rows than the input count allows"));
                    }
                    (idx, outs)
                } else {
                    if tokens.len() != 2 {
                        return Err(QttError::new(line, "expected `inputs outputs`"));
                    }
                    let ins = parse_digit_str(tokens[0], line)?;
                    if ins.len() != m {
                        return Err(QttError::new(
                            line,
                            format!("input has {} digits, expected {m}", ins.len()),
                        ));
                    }
                    let outs = parse_digit_str(tokens[1], line)?;
                    (inputs_to_index(&ins), outs)
                };
                if outs.len() != k {
                    return Err(QttError::new(
                        line,
                        format!("output has {} digits, expected {k}", outs.len()),
                    ));
                }
                if rows[index].is_some() {
                    return Err(QttError::new(line, "duplicate row"));
                }
                rows[index] = Some(outs);
            }
        }
    }

    let m = m.ok_or_else(|| QttError::new(1, "missing `.i` header"))?;
    let k = k.ok_or_else(|| QttError::new(1, "missing `.o` header"))?;
    let mut table = Vec::with_capacity(rows.len());
    for (idx, row) in rows.into_iter().enumerate() {
        match row {
            Some(r) => table.push(r),
            None => {
                let ins: String = index_to_inputs(idx, m)
                    .iter()
                    .map(|v| char::from(b'0' + v.value()))
                    .collect();
                return Err(QttError::new(
                    0,
                    format!("incomplete truth table: row for input {ins} is missing"),
                ));
            }
        }
    }
    let f = QuaternaryFunction::new(m, k, table)
        .map_err(|e| QttError::new(0, e.to_string()))?;
    Ok(match name {
        Some(n) => f.with_name(n),
        None => f,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: u8) -> Gf4Value {
        Gf4Value::from_u8(v)
    }

    #[test]
    fn index_round_trip() {
        for m in 0..4 {
            for idx in 0..row_count(m) {
                let ins = index_to_inputs(idx, m);
                assert_eq!(inputs_to_index(&ins), idx);
            }
        }
        assert_eq!(
            index_to_inputs(6, 2),
            vec![g(1), g(2)],
            "index 6 decodes as digits 12"
        );
    }

    #[test]
    fn complete_table_enforced() {
        assert!(QuaternaryFunction::new(1, 1, vec![vec![g(0)]; 4]).is_ok());
        assert_eq!(
            QuaternaryFunction::new(1, 1, vec![vec![g(0)]; 3]),
            Err(FunctionError::IncompleteTable {
                m: 1,
                got: 3,
                want: 4
            })
        );
    }

    #[test]
    fn qtt_round_trip() {
        let f = QuaternaryFunction::from_fn(2, 2, |ins| {
            vec![crate::gf4::gf4_add(ins[0], ins[1]), ins[0]]
        })
        .unwrap()
        .with_name("pair");
        let text = f.to_qtt();
        let parsed = parse_qtt(&text).unwrap();
        assert_eq!(parsed, f);
        assert_eq!(parsed.to_qtt(), text);
    }

    #[test]
    fn qtt_ordered_rows() {
        let text = ".i 1\n.o 1\n.ordered\n3\n2\n1\n0\n";
        let f = parse_qtt(text).unwrap();
        assert_eq!(f.eval(&[g(0)]).unwrap(), &[g(3)]);
        assert_eq!(f.eval(&[g(3)]).unwrap(), &[g(0)]);
    }

    #[test]
    fn qtt_rejects_bad_digit_with_line() {
        let err = parse_qtt(".i 1\n.o 1\n0 0\n1 4\n2 0\n3 0\n").unwrap_err();
        assert_eq!(err.line, 4);
        assert!(err.msg.contains("not a quaternary digit"));
    }

    #[test]
    fn qtt_rejects_incomplete() {
        let err = parse_qtt(".i 1\n.o 1\n0 0\n1 1\n").unwrap_err();
        assert!(err.msg.contains("incomplete"));
        assert!(err.msg.contains("2"));
    }

    #[test]
    fn qtt_rejects_duplicate_row() {
        let err = parse_qtt(".i 1\n.o 1\n0 0\n0 1\n1 0\n2 0\n3 0\n").unwrap_err();
        assert_eq!(err.line, 4);
        assert!(err.msg.contains("duplicate"));
    }

    #[test]
    fn level_counts() {
        let f = QuaternaryFunction::from_fn(1, 1, |ins| vec![ins[0]]).unwrap();
        assert_eq!(f.level_counts(0), (1, 1, 1));
    }
}
