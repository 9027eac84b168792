//! Capacities of every family constraint, with the scheme capacity for the
//! GF(4) codes.
//!
//! `cargo run --example capacity`

use loco::Family;

fn main() -> loco::Result<()> {
    let families = [
        Family::LoRll { d: 1 },
        Family::LoRll { d: 2 },
        Family::SLoco { x: 1 },
        Family::SLoco { x: 2 },
        Family::Os,
        Family::Op,
        Family::Ns,
        Family::Np,
    ];
    for f in families {
        let c = f.capacity()?;
        print!(
            "{:<12} lambda={:.6} C={:.4} Cn={:.4}",
            f.to_string(),
            c.spectral_radius,
            c.bits,
            c.normalized
        );
        if let Some(s) = f.scheme_capacity()? {
            print!("  scheme C={:.4} Cn={:.4}", s.bits, s.normalized);
        }
        println!();
    }
    Ok(())
}
