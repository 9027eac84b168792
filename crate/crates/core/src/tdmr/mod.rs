//! Two-dimensional magnetic recording view of the GF(8) codes.
//!
//! A GF(8) symbol is one 3×1 column across a group of three down tracks:
//! the 3-bit binary form of its level, most significant bit on top. After
//! level-based signaling a bit `0` is written as `-1` and `1` as `+1`. The
//! no-write symbol `z` leaves the column unmagnetized.

mod scheme;
mod stream;

pub use scheme::SchemeMapping;
pub use stream::{
    parse_symbol_text, render_symbols, Frame, FrameStatus, GridAudit, StreamAudit, StreamCodec,
};

use std::fmt;

use crate::error::{LocoError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Column {
    /// Top, middle, bottom bits.
    Written([bool; 3]),
    NoWrite,
}

impl Column {
    /// Magnetization after level-based signaling, `None` for `z`.
    pub fn signal(self) -> Option<[i8; 3]> {
        match self {
            Column::Written(bits) => Some(bits.map(|b| if b { 1 } else { -1 })),
            Column::NoWrite => None,
        }
    }

    pub fn bits(self) -> Option<[bool; 3]> {
        match self {
            Column::Written(bits) => Some(bits),
            Column::NoWrite => None,
        }
    }
}

/// Column for a GF(8) level.
pub fn symbol_to_column(level: u8) -> Result<Column> {
    if level >= 8 {
        return Err(LocoError::LevelOutOfRange {
            level: u32::from(level),
            q: 8,
        });
    }
    Ok(Column::Written([
        level & 4 != 0,
        level & 2 != 0,
        level & 1 != 0,
    ]))
}

/// GF(8) level of a written column.
pub fn column_to_symbol(column: Column) -> Result<u8> {
    match column {
        Column::Written([t, m, b]) => Ok(u8::from(t) << 2 | u8::from(m) << 1 | u8::from(b)),
        Column::NoWrite => Err(LocoError::MalformedStream(
            "a no-write column carries no symbol".into(),
        )),
    }
}

/// A 3×n grid, one group of three adjacent down tracks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Grid {
    pub columns: Vec<Column>,
}

impl Grid {
    pub fn new(columns: Vec<Column>) -> Self {
        Self { columns }
    }

    /// Grid from GF(8) levels, `None` meaning `z`.
    pub fn from_symbols(symbols: &[Option<u8>]) -> Result<Self> {
        symbols
            .iter()
            .map(|s| s.map_or(Ok(Column::NoWrite), symbol_to_column))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn to_symbols(&self) -> Vec<Option<u8>> {
        self.columns
            .iter()
            .map(|&c| column_to_symbol(c).ok())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Three lines of `+`, `-` and `z`, top track first.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(3 * (self.columns.len() + 1));
        for row in 0..3 {
            for c in &self.columns {
                out.push(match c {
                    Column::Written(bits) if bits[row] => '+',
                    Column::Written(_) => '-',
                    Column::NoWrite => 'z',
                });
            }
            out.push('\n');
        }
        out
    }

    #[allow(clippy::needless_range_loop)]
    pub fn from_text(text: &str) -> Result<Self> {
        let rows: Vec<Vec<char>> = text
            .lines()
            .map(|l| l.trim_end().chars().collect())
            .filter(|l: &Vec<char>| !l.is_empty())
            .collect();
        if rows.is_empty() {
            return Ok(Self::default());
        }
        if rows.len() != 3 || rows.iter().any(|r| r.len() != rows[0].len()) {
            return Err(LocoError::MalformedStream(
                "a grid is three lines of equal length".into(),
            ));
        }
        let mut columns = Vec::with_capacity(rows[0].len());
        for k in 0..rows[0].len() {
            let cells = [rows[0][k], rows[1][k], rows[2][k]];
            let col = match cells {
                ['z', 'z', 'z'] => Column::NoWrite,
                _ => {
                    let mut bits = [false; 3];
                    for (b, ch) in bits.iter_mut().zip(cells) {
                        *b = match ch {
                            '+' => true,
                            '-' => false,
                            other => {
                                return Err(LocoError::MalformedStream(format!(
                                    "column {k}: unexpected cell {other:?}"
                                )))
                            }
                        };
                    }
                    Column::Written(bits)
                }
            };
            columns.push(col);
        }
        Ok(Self::new(columns))
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// 3×3 windows centred on column `k`, skipping any window that touches `z`.
fn windows(grid: &Grid) -> impl Iterator<Item = (usize, [[bool; 3]; 3])> + '_ {
    (1..grid.len().saturating_sub(1)).filter_map(move |k| {
        let l = grid.columns[k - 1].bits()?;
        let c = grid.columns[k].bits()?;
        let r = grid.columns[k + 1].bits()?;
        Some((k, [l, c, r]))
    })
}

/// Centres of square-isolated bits: all eight neighbours complement the centre.
pub fn scan_sis(grid: &Grid) -> Vec<usize> {
    windows(grid)
        .filter(|(_, [l, c, r])| {
            let x = c[1];
            l.iter().chain(r.iter()).all(|&b| b != x) && c[0] != x && c[2] != x
        })
        .map(|(k, _)| k)
        .collect()
}

/// Centres of plus-isolated bits: the four edge neighbours complement the
/// centre, corners are free.
pub fn scan_pis(grid: &Grid) -> Vec<usize> {
    windows(grid)
        .filter(|(_, [l, c, r])| {
            let x = c[1];
            c[0] != x && c[2] != x && l[1] != x && r[1] != x
        })
        .map(|(k, _)| k)
        .collect()
}

/// Longest run of identical consecutive written columns; `z` ends a run.
pub fn max_no_transition_run(grid: &Grid) -> usize {
    let mut best = 0;
    let mut run = 0;
    let mut last: Option<[bool; 3]> = None;
    for c in &grid.columns {
        match c.bits() {
            Some(bits) => {
                run = if last == Some(bits) { run + 1 } else { 1 };
                last = Some(bits);
                best = best.max(run);
            }
            None => {
                run = 0;
                last = None;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_mapping() {
        assert_eq!(symbol_to_column(0).unwrap(), Column::Written([false; 3]));
        assert_eq!(
            symbol_to_column(5).unwrap(),
            Column::Written([true, false, true])
        );
        assert_eq!(symbol_to_column(7).unwrap().signal(), Some([1, 1, 1]));
        for l in 0..8 {
            assert_eq!(column_to_symbol(symbol_to_column(l).unwrap()).unwrap(), l);
        }
        assert!(column_to_symbol(Column::NoWrite).is_err());
        assert!(symbol_to_column(8).is_err());
    }

    #[test]
    fn square_pattern() {
        let g = Grid::from_symbols(&[Some(0), Some(2), Some(0)]).unwrap();
        assert_eq!(scan_sis(&g), vec![1]);
        assert_eq!(scan_pis(&g), vec![1]);
        let g = Grid::from_symbols(&[Some(0), Some(2), None]).unwrap();
        assert!(scan_pis(&g).is_empty());
    }

    #[test]
    fn runs() {
        let g = Grid::from_symbols(&[Some(3); 5]).unwrap();
        assert_eq!(max_no_transition_run(&g), 5);
        let g = Grid::from_symbols(&[Some(3), Some(3), None, Some(3), Some(1)]).unwrap();
        assert_eq!(max_no_transition_run(&g), 2);
    }

    #[test]
    fn text_round_trip() {
        let g = Grid::from_symbols(&[Some(0), Some(5), None, Some(7)]).unwrap();
        assert_eq!(g.to_text(), "-+z+\n--z+\n-+z+\n");
        assert_eq!(Grid::from_text(&g.to_text()).unwrap(), g);
        assert!(Grid::from_text("+-\n+\n--\n").is_err());
    }
}
