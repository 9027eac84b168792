//! The six closed-form LOCO families.
//!
//! | family  | q | forbidden patterns (levels)                        |
//! |---------|---|----------------------------------------------------|
//! | LO-RLL  | 2 | `1 0^k 1`, `0 <= k < d`                            |
//! | S-LOCO  | 2 | `0 1^k 0`, `1 0^k 1`, `1 <= k <= x`                |
//! | OS-LOCO | 8 | `020`, `757`                                       |
//! | OP-LOCO | 8 | `u2v`, u,v in {0,1,4,5}; `u5v`, u,v in {2,3,6,7}   |
//! | NS-LOCO | 4 | `303`                                              |
//! | NP-LOCO | 4 | `u3v`, u,v in {0,1}; `u0v`, u,v in {2,3}           |

mod bridge;
mod cardinality;
mod codec;

pub use bridge::{boundary_is_safe, bridge};
pub use cardinality::{cardinality, CardinalityTable};
pub use codec::{legacy_sloco_index, FamilyCodec};

use std::fmt;
use std::str::FromStr;

use crate::alphabet::{Alphabet, Word};
use crate::error::{LocoError, Result};
use crate::generic::{Capacity, ConstraintAutomaton, ForbiddenSet};

/// OP-LOCO neighbour classes, as levels.
pub(crate) const OP_B1: [u8; 4] = [0, 1, 4, 5];
pub(crate) const OP_B2: [u8; 4] = [2, 3, 6, 7];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `(d, ∞)` run-length-limited, at least `d` zeros between ones.
    LoRll { d: u32 },
    /// Symmetric LOCO, runs of length at least `x + 1` inside the word.
    SLoco { x: u32 },
    /// GF(8), no square-isolation patterns in a 3-track group.
    Os,
    /// GF(8), no plus-isolation patterns in a 3-track group.
    Op,
    /// GF(4) part of the near-optimal square scheme.
    Ns,
    /// GF(4) part of the near-optimal plus scheme.
    Np,
}

impl Family {
    pub const NAMES: [&'static str; 6] = ["lorll", "sloco", "os", "op", "ns", "np"];

    pub fn lo_rll(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(LocoError::InvalidParameter("LO-RLL needs d >= 1".into()));
        }
        Ok(Family::LoRll { d })
    }

    pub fn s_loco(x: u32) -> Result<Self> {
        if x == 0 {
            return Err(LocoError::InvalidParameter("S-LOCO needs x >= 1".into()));
        }
        Ok(Family::SLoco { x })
    }

    /// Resolves a CLI-style name; `param` feeds `d` or `x`.
    pub fn from_name(name: &str, param: Option<u32>) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "lorll" | "lo-rll" => Family::lo_rll(param.unwrap_or(1)),
            "sloco" | "s-loco" => Family::s_loco(param.unwrap_or(1)),
            "os" => Ok(Family::Os),
            "op" => Ok(Family::Op),
            "ns" => Ok(Family::Ns),
            "np" => Ok(Family::Np),
            other => Err(LocoError::InvalidParameter(format!(
                "unknown family {other:?}"
            ))),
        }
    }

    pub fn q(self) -> u8 {
        match self {
            Family::LoRll { .. } | Family::SLoco { .. } => 2,
            Family::Os | Family::Op => 8,
            Family::Ns | Family::Np => 4,
        }
    }

    pub fn alphabet(self) -> Alphabet {
        Alphabet::new(u32::from(self.q())).expect("family alphabets are valid")
    }

    /// `true` for the two GF(4) codes written through a GF(8) mux.
    pub fn is_scheme(self) -> bool {
        matches!(self, Family::Ns | Family::Np)
    }

    pub fn forbidden_patterns(self) -> Vec<Vec<u8>> {
        match self {
            Family::LoRll { d } => (0..d as usize)
                .map(|k| {
                    let mut p = vec![1];
                    p.extend(std::iter::repeat_n(0, k));
                    p.push(1);
                    p
                })
                .collect(),
            Family::SLoco { x } => (1..=x as usize)
                .flat_map(|k| {
                    let run = |edge: u8, fill: u8| {
                        let mut p = vec![edge];
                        p.extend(std::iter::repeat_n(fill, k));
                        p.push(edge);
                        p
                    };
                    [run(0, 1), run(1, 0)]
                })
                .collect(),
            Family::Os => vec![vec![0, 2, 0], vec![7, 5, 7]],
            Family::Op => sandwich(&OP_B1, 2).chain(sandwich(&OP_B2, 5)).collect(),
            Family::Ns => vec![vec![3, 0, 3]],
            Family::Np => sandwich(&[0, 1], 3).chain(sandwich(&[2, 3], 0)).collect(),
        }
    }

    pub fn forbidden_set(self) -> ForbiddenSet {
        ForbiddenSet::new(self.alphabet(), self.forbidden_patterns())
            .expect("family pattern sets are valid")
    }

    /// Codewords removed so that every written codeword has a transition,
    /// and the index shift they cause.
    pub fn clocking_exclusions(self, m: usize) -> ClockingExclusions {
        let a = self.alphabet();
        let w = |l: u8| Word::from_levels_unchecked(a, vec![l; m]);
        match self {
            Family::LoRll { .. } => ClockingExclusions {
                words: vec![w(0)],
                offset: 1,
            },
            Family::SLoco { .. } => ClockingExclusions {
                words: vec![w(0), w(1)],
                offset: 1,
            },
            _ => ClockingExclusions {
                words: Vec::new(),
                offset: 0,
            },
        }
    }

    /// Capacity of the family constraint over its own alphabet.
    pub fn capacity(self) -> Result<Capacity> {
        ConstraintAutomaton::build(&self.forbidden_set()).capacity()
    }

    /// For the GF(4) schemes: one extra selection bit per written GF(8)
    /// column, normalized by 3 bits per column.
    pub fn scheme_capacity(self) -> Result<Option<Capacity>> {
        if !self.is_scheme() {
            return Ok(None);
        }
        let c = self.capacity()?;
        let bits = c.bits + 1.0;
        Ok(Some(Capacity {
            spectral_radius: 2.0 * c.spectral_radius,
            bits,
            normalized: bits / 3.0,
        }))
    }

    /// Number of symbols inserted between consecutive codewords.
    pub fn bridge_len(self) -> usize {
        match self {
            Family::LoRll { d } => d as usize,
            Family::SLoco { x } => x as usize,
            _ => 1,
        }
    }
}

fn sandwich(outer: &'static [u8], center: u8) -> impl Iterator<Item = Vec<u8>> {
    outer
        .iter()
        .flat_map(move |&u| outer.iter().map(move |&v| vec![u, center, v]))
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::LoRll { d } => write!(f, "LO-RLL(d={d})"),
            Family::SLoco { x } => write!(f, "S-LOCO(x={x})"),
            Family::Os => f.write_str("OS-LOCO"),
            Family::Op => f.write_str("OP-LOCO"),
            Family::Ns => f.write_str("NS-LOCO"),
            Family::Np => f.write_str("NP-LOCO"),
        }
    }
}

impl FromStr for Family {
    type Err = LocoError;

    fn from_str(s: &str) -> Result<Self> {
        Family::from_name(s, None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClockingExclusions {
    pub words: Vec<Word>,
    /// Message value `v` maps to codeword index `v + offset`.
    pub offset: u32,
}

/// Rate of a family at length `m`, counting bridging overhead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rate {
    pub m: usize,
    /// Message bits per codeword; also the adder width in bits.
    pub s: usize,
    /// Input bits per written symbol.
    pub bits: f64,
    /// `bits` divided by 3 for the TDMR codes, by 1 for the binary ones.
    pub normalized: f64,
}

impl Rate {
    pub fn adder_bits(&self) -> usize {
        self.s
    }
}

/// Rate, normalized rate and adder size.
pub fn rate(family: Family, m: usize) -> Result<Rate> {
    let s = FamilyCodec::new(family, m)?.message_length();
    Ok(rate_from_s(family, m, s))
}

pub(crate) fn rate_from_s(family: Family, m: usize, s: usize) -> Rate {
    let (num, den, norm) = match family {
        Family::LoRll { d } => (s, m + d as usize, 1.0),
        Family::SLoco { x } => (s, m + x as usize, 1.0),
        Family::Os | Family::Op => (s, m + 1, 3.0),
        Family::Ns => (s + m + 1, m + 1, 3.0),
        Family::Np => (s + m, m + 1, 3.0),
    };
    let bits = num as f64 / den as f64;
    Rate {
        m,
        s,
        bits,
        normalized: bits / norm,
    }
}

/// `⌊log2(N − r)⌋` with `r` the number of clocking exclusions.
pub fn message_length(family: Family, m: usize) -> Result<usize> {
    Ok(FamilyCodec::new(family, m)?.message_length())
}
