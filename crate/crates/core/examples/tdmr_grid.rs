//! OS-LOCO and OP-LOCO streams on a 3-track grid, checked for isolation
//! patterns and transition-free runs.
//!
//! `cargo run --example tdmr_grid`

use loco::tdmr::{max_no_transition_run, scan_pis, scan_sis, FrameStatus, StreamCodec};
use loco::Family;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> loco::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for f in [Family::Os, Family::Op] {
        let sc = StreamCodec::new(f, 6)?;
        let bits: Vec<bool> = (0..4 * sc.chunk_bits()).map(|_| rng.gen()).collect();
        let symbols = sc.assemble_symbols(&bits)?;
        let grid = sc.assemble_grid(&bits)?;
        println!("{f}, m=6, {} bits per codeword", sc.chunk_bits());
        println!("{}", sc.render(&symbols));
        print!("{}", grid.to_text());
        println!(
            "SIS windows {}, PIS windows {}, longest run without transition {}",
            scan_sis(&grid).len(),
            scan_pis(&grid).len(),
            max_no_transition_run(&grid)
        );
        let frames = sc.parse_grid(&grid)?;
        let ok = frames.iter().all(|fr| fr.status == FrameStatus::Ok);
        let back: Vec<bool> = frames
            .into_iter()
            .flat_map(|fr| fr.bits.unwrap_or_default())
            .collect();
        println!(
            "decoded {}\n",
            if ok && back == bits { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
