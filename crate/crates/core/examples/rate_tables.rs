//! Rates and adder sizes of the TDMR codes over a range of lengths.
//!
//! `cargo run --example rate_tables`

use loco::{rate, Family};

fn main() -> loco::Result<()> {
    for f in [Family::Os, Family::Op, Family::Ns, Family::Np] {
        println!("{f}");
        println!("{:>4} {:>8} {:>8} {:>6}", "m", "R", "Rn", "adder");
        for m in [5, 8, 13, 18, 23, 34, 55, 89] {
            let r = rate(f, m)?;
            println!(
                "{:>4} {:>8.4} {:>8.4} {:>6}",
                m,
                r.bits,
                r.normalized,
                r.adder_bits()
            );
        }
        println!();
    }
    Ok(())
}
