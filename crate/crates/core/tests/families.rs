//! Family codecs: round trips, rates against capacity, and the earlier
//! S-LOCO rule.

use loco::families::{legacy_sloco_index, message_length};
use loco::{rate, ConstraintAutomaton, Family, FamilyCodec, LocoError, Word};
use num_bigint::BigUint;
use proptest::prelude::*;

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        (1u32..=4).prop_map(|d| Family::LoRll { d }),
        (1u32..=4).prop_map(|x| Family::SLoco { x }),
        Just(Family::Os),
        Just(Family::Op),
        Just(Family::Ns),
        Just(Family::Np),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn encode_decode_round_trip(f in family(), m in 2usize..=60, seed in prop::collection::vec(any::<bool>(), 200)) {
        let Ok(codec) = FamilyCodec::new(f, m) else { return Ok(()) };
        let msg = seed[..codec.message_length()].to_vec();
        let w = codec.encode(&msg).unwrap();
        prop_assert!(f.forbidden_set().admits(w.levels()));
        prop_assert!(!codec.clocking_exclusions().words.contains(&w));
        prop_assert_eq!(codec.decode(&w).unwrap(), msg);
    }

    #[test]
    fn index_and_codeword_at_are_inverse(f in family(), m in 2usize..=40, frac in 0.0f64..1.0) {
        let Ok(codec) = FamilyCodec::new(f, m) else { return Ok(()) };
        let n = codec.cardinality().clone();
        let scale = 1u64 << 40;
        let g = (&n * BigUint::from((frac * scale as f64) as u64)) / BigUint::from(scale);
        let w = codec.codeword_at(&g).unwrap();
        prop_assert_eq!(codec.index(&w).unwrap(), g);
    }

    #[test]
    fn rate_stays_below_capacity(f in family(), m in 2usize..=120) {
        let r = rate(f, m).unwrap();
        let c = match f.scheme_capacity().unwrap() {
            Some(s) => s,
            None => f.capacity().unwrap(),
        };
        prop_assert!(r.normalized <= c.normalized + 1e-12, "{} m={} {} > {}", f, m, r.normalized, c.normalized);
    }
}

#[test]
fn message_lengths() {
    assert_eq!(message_length(Family::Os, 23).unwrap(), 68);
    assert_eq!(message_length(Family::Op, 18).unwrap(), 52);
    assert_eq!(message_length(Family::Os, 5).unwrap(), 14);
    assert_eq!(message_length(Family::Np, 6).unwrap(), 11);
    assert_eq!(message_length(Family::LoRll { d: 1 }, 5).unwrap(), 3);
}

#[test]
fn rates_approach_capacity() {
    for f in [Family::Os, Family::Op, Family::Ns, Family::Np] {
        let c = f
            .scheme_capacity()
            .unwrap()
            .unwrap_or_else(|| f.capacity().unwrap());
        let r = rate(f, 400).unwrap();
        assert!(
            c.normalized - r.normalized < 0.01,
            "{f}: {} vs {}",
            r.normalized,
            c.normalized
        );
    }
}

#[test]
fn legacy_sloco_rule_agrees() {
    for x in 1..=3 {
        let f = Family::SLoco { x };
        let a = ConstraintAutomaton::build(&f.forbidden_set());
        for m in 2..=12 {
            let Ok(codec) = FamilyCodec::new(f, m) else {
                continue;
            };
            for w in a.enumerate(m).unwrap() {
                assert_eq!(
                    legacy_sloco_index(x, &w).unwrap(),
                    codec.index(&w).unwrap(),
                    "x={x} {w}"
                );
            }
        }
    }
}

#[test]
fn rejects_bad_input() {
    let codec = FamilyCodec::new(Family::Os, 5).unwrap();
    let alphabet = Family::Os.alphabet();
    let bad = Word::parse(alphabet, "10200").unwrap();
    assert!(matches!(
        codec.index(&bad),
        Err(LocoError::ConstraintViolation { .. })
    ));
    assert!(matches!(
        codec.encode(&[true; 3]),
        Err(LocoError::MessageLength { .. })
    ));
    let short = Word::parse(alphabet, "0000").unwrap();
    assert!(codec.decode(&short).is_err());
    // Indices past 2^s are not messages.
    let top = codec.codeword_at(&(codec.cardinality() - 1u32)).unwrap();
    assert!(matches!(codec.decode(&top), Err(LocoError::IndexOverflow)));
}
