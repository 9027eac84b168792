//! Lexicographically-ordered constrained (LOCO) codes.
//!
//! - [`alphabet`]: symbols, level-equivalents and words.
//! - [`generic`]: automaton-based counting, rank/unrank and capacity for any
//!   finite forbidden-pattern set.
//! - [`families`]: the closed-form codecs LO-RLL, S-LOCO, OS-LOCO, OP-LOCO,
//!   NS-LOCO and NP-LOCO, with bridging, clocking and rates.
//! - [`tdmr`]: GF(8) columns, GF(4) schemes, streams and grid scanners.
//!
//! ```
//! use loco::{Family, FamilyCodec};
//!
//! let codec = FamilyCodec::new(Family::Os, 5).unwrap();
//! let bits: Vec<bool> = "00010110101000".chars().map(|c| c == '1').collect();
//! let word = codec.encode(&bits).unwrap();
//! assert_eq!(word.to_string(), "02765");
//! assert_eq!(codec.decode(&word).unwrap(), bits);
//! ```

pub mod alphabet;
pub mod error;
pub mod families;
pub mod generic;
pub mod selftest;
pub mod tdmr;

pub use alphabet::{lex_compare, Alphabet, Symbol, Word};
pub use error::{LocoError, Result};
pub use families::{bridge, cardinality, rate, Family, FamilyCodec, Rate};
pub use generic::{Capacity, CompletionTable, ConstraintAutomaton, ForbiddenSet};
