//! Cross-check of a closed-form codec against brute-force enumeration.

use num_bigint::BigUint;

use crate::families::{Family, FamilyCodec};
use crate::generic::ConstraintAutomaton;

/// Largest lengths whose full code is cheap to enumerate.
pub fn oracle_max_len(family: Family) -> usize {
    match family.q() {
        2 => 12,
        4 => 8,
        _ => 5,
    }
}

/// Lengths checked, or the first disagreement found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub family: Family,
    pub lengths: Vec<usize>,
    pub codewords: usize,
    pub failure: Option<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// For every length up to the oracle limit: the enumeration is sorted, the
/// closed-form index equals the enumeration position, the count matches,
/// and every message decodes back to itself.
pub fn oracle_equivalence(family: Family) -> OracleReport {
    let automaton = ConstraintAutomaton::build(&family.forbidden_set());
    let mut report = OracleReport {
        family,
        lengths: Vec::new(),
        codewords: 0,
        failure: None,
    };
    for m in 1..=oracle_max_len(family) {
        let Ok(codec) = FamilyCodec::new(family, m) else {
            continue;
        };
        if let Err(e) = check_length(&automaton, &codec) {
            report.failure = Some(format!("m={m}: {e}"));
            return report;
        }
        report.lengths.push(m);
        report.codewords += automaton.enumerate(m).map(|w| w.len()).unwrap_or(0);
    }
    report
}

fn check_length(automaton: &ConstraintAutomaton, codec: &FamilyCodec) -> Result<(), String> {
    let m = codec.m();
    let words = automaton.enumerate(m).map_err(|e| e.to_string())?;
    if BigUint::from(words.len()) != *codec.cardinality() {
        return Err(format!(
            "cardinality {} but {} codewords enumerated",
            codec.cardinality(),
            words.len()
        ));
    }
    if words.windows(2).any(|p| p[0].levels() >= p[1].levels()) {
        return Err("enumeration is not strictly increasing".into());
    }
    for (k, w) in words.iter().enumerate() {
        let g = codec.index(w).map_err(|e| e.to_string())?;
        if g != BigUint::from(k) {
            return Err(format!("index of {w} is {g}, expected {k}"));
        }
    }
    let s = codec.message_length();
    for v in 0u64..(1u64 << s) {
        let bits: Vec<bool> = (0..s).rev().map(|b| v >> b & 1 == 1).collect();
        let w = codec.encode(&bits).map_err(|e| e.to_string())?;
        if codec.decode(&w).map_err(|e| e.to_string())? != bits {
            return Err(format!("message {v} does not survive a round trip"));
        }
    }
    Ok(())
}
