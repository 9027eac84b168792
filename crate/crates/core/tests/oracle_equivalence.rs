//! Closed-form codecs against the automaton engine and brute-force
//! enumeration, exhaustively at small lengths.

use loco::{ConstraintAutomaton, Family, FamilyCodec};
use num_bigint::BigUint;

fn oracle_lengths(f: Family) -> std::ops::RangeInclusive<usize> {
    match f.q() {
        2 => 2..=12,
        4 => 2..=8,
        _ => 2..=5,
    }
}

fn families() -> Vec<Family> {
    vec![
        Family::LoRll { d: 1 },
        Family::LoRll { d: 2 },
        Family::LoRll { d: 3 },
        Family::SLoco { x: 1 },
        Family::SLoco { x: 2 },
        Family::SLoco { x: 3 },
        Family::Os,
        Family::Op,
        Family::Ns,
        Family::Np,
    ]
}

#[test]
fn index_matches_enumeration_position() {
    for f in families() {
        let a = ConstraintAutomaton::build(&f.forbidden_set());
        for m in oracle_lengths(f) {
            let codec = match FamilyCodec::new(f, m) {
                Ok(c) => c,
                Err(_) => continue,
            };
            let words = a.enumerate(m).unwrap();
            assert_eq!(
                BigUint::from(words.len()),
                *codec.cardinality(),
                "{f} m={m}"
            );
            let table = a.completion_table(m);
            for (k, w) in words.iter().enumerate() {
                let expect = BigUint::from(k);
                assert_eq!(codec.index(w).unwrap(), expect, "{f} m={m} word {w}");
                assert_eq!(table.rank(&a, w).unwrap(), expect, "{f} m={m} word {w}");
                assert_eq!(
                    codec.codeword_at(&expect).unwrap(),
                    *w,
                    "{f} m={m} index {k}"
                );
            }
        }
    }
}
