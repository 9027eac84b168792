//! NS-LOCO and NP-LOCO: GF(4) codewords plus one selection bit per column,
//! written as GF(8) columns.
//!
//! `cargo run --example near_optimal_scheme`

use loco::tdmr::{max_no_transition_run, scan_pis, scan_sis, SchemeMapping, StreamCodec};
use loco::Family;

fn main() -> loco::Result<()> {
    for f in [Family::Ns, Family::Np] {
        let map = SchemeMapping::for_family(f).expect("scheme family");
        let table: Vec<String> = (0..4)
            .map(|s| map.preimages(s).map(|[l, r]| format!("{s}->{l}/{r}")))
            .collect::<loco::Result<_>>()?;
        println!("{f} mux: {}", table.join(" "));

        let sc = StreamCodec::new(f, 5)?;
        let s = sc.codec().message_length();
        let bits: Vec<bool> = (0..3 * sc.chunk_bits()).map(|k| k % 3 == 0).collect();
        let grid = sc.assemble_grid(&bits)?;
        println!(
            "m=5: {} codeword bits + selection bits = {} per chunk, rate {:.4} ({:.4} normalized)",
            s,
            sc.chunk_bits(),
            sc.codec().rate().bits,
            sc.codec().rate().normalized
        );
        println!("{}", sc.render(&grid.to_symbols()));
        print!("{}", grid.to_text());
        println!(
            "SIS {} PIS {} max run {}\n",
            scan_sis(&grid).len(),
            scan_pis(&grid).len(),
            max_no_transition_run(&grid)
        );
    }
    Ok(())
}
