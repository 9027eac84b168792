//! Binary LO-RLL and S-LOCO: cardinalities, a full codebook listing and a
//! message round trip.
//!
//! `cargo run --example rll_tables`

use loco::{cardinality, Family, FamilyCodec};

fn main() -> loco::Result<()> {
    for f in [
        Family::LoRll { d: 1 },
        Family::LoRll { d: 2 },
        Family::SLoco { x: 1 },
    ] {
        let counts: Vec<String> = (1..=10)
            .map(|m| cardinality(f, m).map(|n| n.to_string()))
            .collect::<loco::Result<_>>()?;
        println!("{f:<12} N(1..=10) = {}", counts.join(" "));
    }

    let codec = FamilyCodec::new(Family::SLoco { x: 2 }, 6)?;
    println!(
        "\nS-LOCO(x=2), m=6: N={} s={} rate={:.4}",
        codec.cardinality(),
        codec.message_length(),
        codec.rate().bits
    );
    let n: u64 = codec.cardinality().try_into().expect("small");
    for g in 0..n {
        let w = codec.codeword_at(&g.into())?;
        let note = match codec.decode(&w) {
            Ok(bits) => bits.iter().map(|&b| if b { '1' } else { '0' }).collect(),
            Err(_) => "-".to_string(),
        };
        println!("  {g:>3} {w} {note}");
    }
    Ok(())
}
