//! Two-level PLA ingestion: binary tables packed into quaternary functions
//! by grouping bit pairs into qudits.
//!
//! Packing convention: bits pair up msb-first, the most significant pair
//! lands in the lowest-index qudit, and odd bit counts are padded with a
//! constant-0 bit on the most significant side. Padding bits are ignored on
//! lookup, which keeps the packed function completely specified. Outputs
//! pack the same way.

use std::collections::BTreeMap;

use thiserror::Error;

use qsynth4_core::func::{index_to_inputs, row_count};
use qsynth4_core::gf4::Gf4Value;
use qsynth4_core::QuaternaryFunction;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct PlaError {
    pub line: usize,
    pub msg: String,
}

impl PlaError {
    fn new(line: usize, msg: impl Into<String>) -> PlaError {
        PlaError {
            line,
            msg: msg.into(),
        }
    }
}

/// A parsed binary PLA cover: full-minterm rows only (don't-cares are
/// rejected), output semantics are ON-set (`1` bits set the output, missing
/// rows are 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaFile {
    pub inputs: usize,
    pub outputs: usize,
    pub rows: Vec<(Vec<bool>, Vec<bool>)>,
}

pub fn parse_pla(text: &str) -> Result<PlaFile, PlaError> {
    let mut inputs: Option<usize> = None;
    let mut outputs: Option<usize> = None;
    let mut rows = Vec::new();
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
                inputs = Some(
                    tokens
                        .get(1)
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| PlaError::new(line, "`.i` needs an integer"))?,
                );
            }
            ".o" => {
                outputs = Some(
                    tokens
                        .get(1)
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| PlaError::new(line, "`.o` needs an integer"))?,
                );
            }
            ".p" | ".ilb" | ".ob" | ".type" => {}
            ".e" | ".end" => break,
            t if t.starts_with('.') => {
                return Err(PlaError::new(line, format!("unknown directive `{t}`")));
            }
            _ => {
                let (n, k) = match (inputs, outputs) {
                    (Some(n), Some(k)) => (n, k),
                    _ => return Err(PlaError::new(line, "rows must come after `.i` and `.o`")),
                };
                if tokens.len() != 2 {
                    return Err(PlaError::new(line, "expected `input-bits output-bits`"));
                }
                let ins = parse_bits(tokens[0], line, false)?;
                if ins.len() != n {
                    return Err(PlaError::new(
                        line,
                        format!("input has {} bits, expected {n}", ins.len()),
                    ));
                }
                let outs = parse_bits(tokens[1], line, true)?;
                if outs.len() != k {
                    return Err(PlaError::new(
                        line,
                        format!("output has {} bits, expected {k}", outs.len()),
                    ));
                }
                rows.push((ins, outs));
            }
        }
    }
    let inputs = inputs.ok_or_else(|| PlaError::new(1, "missing `.i` header"))?;
    let outputs = outputs.ok_or_else(|| PlaError::new(1, "missing `.o` header"))?;
    if rows.is_empty() {
        return Err(PlaError::new(1, "PLA file declares no rows"));
    }
    Ok(PlaFile {
        inputs,
        outputs,
        rows,
    })
}

fn parse_bits(s: &str, line: usize, output_side: bool) -> Result<Vec<bool>, PlaError> {
    s.chars()
        .map(|c| match c {
            '1' => Ok(true),
            '0' => Ok(false),
            '~' if output_side => Ok(false),
            '-' if !output_side => Err(PlaError::new(
                line,
                "don't-care inputs are not supported; expand the cover first",
            )),
            other => Err(PlaError::new(line, format!("unexpected character `{other}`"))),
        })
        .collect()
}

/// Number of qudits covering `bits` binary positions.
pub fn qudit_count(bits: usize) -> usize {
    bits.div_ceil(2)
}

/// Pack a bit string (msb first) into qudits, padding on the left.
fn pack_bits(bits: &[bool]) -> Vec<Gf4Value> {
    let q = qudit_count(bits.len());
    let mut padded = vec![false; 2 * q - bits.len()];
    padded.extend_from_slice(bits);
    padded
        .chunks(2)
        .map(|pair| Gf4Value::from_u8(u8::from(pair[0]) * 2 + u8::from(pair[1])))
        .collect()
}

/// Expand qudits back to a bit string of the given width, dropping pads.
fn unpack_bits(qudits: &[Gf4Value], bits: usize) -> Vec<bool> {
    let mut all = Vec::with_capacity(qudits.len() * 2);
    for q in qudits {
        all.push(q.value() & 2 != 0);
        all.push(q.value() & 1 != 0);
    }
    all.split_off(all.len() - bits)
}

/// Pack a parsed PLA into a complete quaternary function. Padding bits do
/// not affect the output.
pub fn pack(pla: &PlaFile) -> Result<QuaternaryFunction, PlaError> {
    let m = qudit_count(pla.inputs);
    let k = qudit_count(pla.outputs);
    if m > qsynth4_core::func::MAX_SWEEP_INPUTS {
        return Err(PlaError::new(
            1,
            format!("{} input bits pack into {m} qudits, over the sweep cap", pla.inputs),
        ));
    }
    // ON-set lookup: OR together the outputs of every matching row.
    let mut table: BTreeMap<Vec<bool>, Vec<bool>> = BTreeMap::new();
    for (ins, outs) in &pla.rows {
        let entry = table
            .entry(ins.clone())
            .or_insert_with(|| vec![false; pla.outputs]);
        for (slot, &bit) in entry.iter_mut().zip(outs) {
            *slot |= bit;
        }
    }

    let rows = (0..row_count(m))
        .map(|idx| {
            let qudits = index_to_inputs(idx, m);
            let bits = unpack_bits(&qudits, pla.inputs);
            let outs = table
                .get(&bits)
                .cloned()
                .unwrap_or_else(|| vec![false; pla.outputs]);
            pack_bits(&outs)
        })
        .collect::<Vec<_>>();
    debug_assert!(rows.iter().all(|r| r.len() == k));
    Ok(QuaternaryFunction::new(m, k, rows).expect("packed table is complete"))
}

/// Parse and pack in one step.
pub fn ingest_pla(text: &str) -> Result<QuaternaryFunction, PlaError> {
    pack(&parse_pla(text)?)
}

/// Inverse of packing, for round-trip checks: evaluate the packed function
/// on every original binary input and recover the binary output rows.
pub fn unpack_binary(
    f: &QuaternaryFunction,
    in_bits: usize,
    out_bits: usize,
) -> Vec<(Vec<bool>, Vec<bool>)> {
    (0..1usize << in_bits)
        .map(|idx| {
            let bits: Vec<bool> = (0..in_bits)
                .map(|b| idx & (1 << (in_bits - 1 - b)) != 0)
                .collect();
            let qudits = pack_bits(&bits);
            let outs = f.eval(&qudits).expect("packed arity matches");
            (bits, unpack_bits(outs, out_bits))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: u8) -> Gf4Value {
        Gf4Value::from_u8(v)
    }

    const XOR2: &str = ".i 2\n.o 1\n01 1\n10 1\n00 0\n11 0\n.e\n";

    #[test]
    fn two_bit_xor_packs_into_one_qudit() {
        let f = ingest_pla(XOR2).unwrap();
        assert_eq!(f.input_count(), 1);
        assert_eq!(f.output_count(), 1);
        // Input qudit 2 is the bit pair 10; the single output bit packs
        // into the low bit of its qudit.
        assert_eq!(f.eval(&[g(2)]).unwrap(), &[g(1)]);
        assert_eq!(f.eval(&[g(3)]).unwrap(), &[g(0)]);
    }

    #[test]
    fn packing_round_trips_bit_for_bit() {
        let f = ingest_pla(XOR2).unwrap();
        let rows = unpack_binary(&f, 2, 1);
        for (ins, outs) in rows {
            assert_eq!(outs, vec![ins[0] ^ ins[1]], "{ins:?}");
        }
    }

    #[test]
    fn five_bits_pack_into_three_qudits() {
        let mut text = String::from(".i 5\n.o 1\n");
        for idx in 0..32 {
            let bits: String = (0..5)
                .map(|b| if idx & (1 << (4 - b)) != 0 { '1' } else { '0' })
                .collect();
            let parity = (idx as u32).count_ones() % 2;
            text.push_str(&format!("{bits} {parity}\n"));
        }
        let f = ingest_pla(&text).unwrap();
        assert_eq!(f.input_count(), 3);
        let rows = unpack_binary(&f, 5, 1);
        for (ins, outs) in rows {
            let parity = ins.iter().filter(|&&b| b).count() % 2 == 1;
            assert_eq!(outs, vec![parity]);
        }
    }

    #[test]
    fn pad_bits_are_ignored() {
        let mut text = String::from(".i 1\n.o 1\n");
        text.push_str("0 1\n1 0\n");
        let f = ingest_pla(&text).unwrap();
        // One bit packs into one qudit with a pad: values 0/2 carry pad=1
        // in the high bit... the pad is the high bit, so 0 and 2 read as
        // bit 0, and 1 and 3 read as bit 1.
        assert_eq!(f.eval(&[g(0)]).unwrap(), f.eval(&[g(2)]).unwrap());
        assert_eq!(f.eval(&[g(1)]).unwrap(), f.eval(&[g(3)]).unwrap());
        assert_eq!(f.eval(&[g(0)]).unwrap(), &[g(1)]);
    }

    #[test]
    fn empty_and_malformed_files_error() {
        assert!(parse_pla("").is_err());
        let err = parse_pla(".i 2\n.o 1\n-1 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.msg.contains("don't-care"));
    }
}
