//! Plain-text circuit format.
//!
//! ```text
//! qubits 4
//! g 0 1
//! g 2 3
//! ```
//!
//! The first non-blank line is the header `qubits N`; every following
//! non-blank line is one gate `g A B`, in program order. Tokens are
//! separated by any whitespace. There are no comments.

use std::fmt::Write as _;

use qccd_core::Circuit;

use crate::LabError;

fn parse_err(line: usize, message: impl Into<String>) -> LabError {
    LabError::Parse { line, message: message.into() }
}

pub fn parse(text: &str) -> Result<Circuit, LabError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, tokens)| !tokens.is_empty());
    let n_qubits = match lines.next() {
        Some((line, tokens)) => match tokens.as_slice() {
            ["qubits", n] => n.parse::<usize>().map_err(|e| parse_err(line, format!("qubit count: {e}")))?,
            _ => return Err(parse_err(line, "expected header `qubits N`")),
        },
        None => return Err(parse_err(1, "missing header `qubits N`")),
    };
    let mut pairs = Vec::new();
    for (line, tokens) in lines {
        match tokens.as_slice() {
            ["g", a, b] => {
                let q = |s: &str| s.parse::<usize>().map_err(|e| parse_err(line, format!("qubit index: {e}")));
                pairs.push((q(a)?, q(b)?));
            }
            _ => return Err(parse_err(line, "expected gate `g A B`")),
        }
    }
    let circuit = Circuit::new(n_qubits, pairs);
    if let Some(v) = circuit.validate().first() {
        return Err(LabError::InvalidCircuit(v.to_string()));
    }
    Ok(circuit)
}

pub fn write(circuit: &Circuit) -> String {
    let mut out = format!("qubits {}\n", circuit.n_qubits());
    for (a, b) in circuit.pairs() {
        writeln!(out, "g {a} {b}").expect("writing to a String cannot fail");
    }
    out
}
