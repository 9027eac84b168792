use crate::error::{LocoError, Result};
use crate::families::Family;

/// GF(4) ↔ GF(8) map of the two near-optimal schemes. Every GF(4) symbol
/// has two GF(8) preimages; a selection bit `0` picks the left one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeMapping {
    Ns,
    Np,
}

impl SchemeMapping {
    pub fn for_family(family: Family) -> Option<Self> {
        match family {
            Family::Ns => Some(SchemeMapping::Ns),
            Family::Np => Some(SchemeMapping::Np),
            _ => None,
        }
    }

    /// `(left, right)` GF(8) levels for a GF(4) level.
    pub fn preimages(self, s4: u8) -> Result<[u8; 2]> {
        let table: [[u8; 2]; 4] = match self {
            SchemeMapping::Ns => [[2, 5], [1, 6], [3, 4], [0, 7]],
            SchemeMapping::Np => [[4, 5], [0, 1], [6, 7], [2, 3]],
        };
        table
            .get(usize::from(s4))
            .copied()
            .ok_or(LocoError::LevelOutOfRange {
                level: u32::from(s4),
                q: 4,
            })
    }

    pub fn mux(self, s4: u8, bit: bool) -> Result<u8> {
        Ok(self.preimages(s4)?[usize::from(bit)])
    }

    pub fn demux(self, s8: u8) -> Result<(u8, bool)> {
        for s4 in 0..4 {
            let [l, r] = self.preimages(s4)?;
            if s8 == l {
                return Ok((s4, false));
            }
            if s8 == r {
                return Ok((s4, true));
            }
        }
        Err(LocoError::LevelOutOfRange {
            level: u32::from(s8),
            q: 8,
        })
    }
}
