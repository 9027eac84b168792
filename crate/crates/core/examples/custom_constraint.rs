//! Any finite forbidden-pattern set: count, rank, unrank and capacity
//! through the generic automaton.
//!
//! `cargo run --example custom_constraint`

use loco::{Alphabet, ConstraintAutomaton, ForbiddenSet, Word};

fn main() -> loco::Result<()> {
    // Ternary words without "00" or "212".
    let set = ForbiddenSet::from_json(r#"{"q": 3, "patterns": [[0, 0], [2, 1, 2]]}"#)?;
    let a = ConstraintAutomaton::build(&set);
    println!("{} states", a.num_states());
    for m in 1..=8 {
        println!("N({m}) = {}", a.count(m));
    }

    let m = 6;
    let table = a.completion_table(m);
    let w = Word::parse(Alphabet::new(3)?, "120102")?;
    let g = table.rank(&a, &w)?;
    println!("rank({w}) = {g}");
    println!("unrank({g}) = {}", table.unrank(&a, &g, m)?);

    let c = a.capacity()?;
    println!(
        "capacity {:.4} bits/symbol, {:.4} normalized",
        c.bits, c.normalized
    );
    Ok(())
}
