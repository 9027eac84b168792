//! Multi-codeword streams.
//!
//! Input bits are cut into chunks. A chunk is `s` message bits, followed for
//! the GF(4) schemes by one selection bit per codeword symbol and, for
//! NS-LOCO, one more bit for the bridge column after the codeword.
//!
//! Layout: `cw_0 ‖ bridge ‖ cw_1 ‖ … ‖ cw_{n-1}`. NS-LOCO streams also end
//! with a bridge, since that column carries the last chunk's final bit.
//!
//! NP-LOCO bridge columns carry no data. Of the two GF(8) preimages of the
//! bridge symbol, the one that differs from the adjacent column with the
//! same GF(4) symbol is written, so a bridge never extends a run.

use super::{max_no_transition_run, scan_pis, scan_sis, Grid, SchemeMapping};
use crate::alphabet::Word;
use crate::error::{LocoError, Result};
use crate::families::{bridge, Family, FamilyCodec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrameStatus {
    Ok,
    ConstraintViolation,
    IndexOverflow,
}

impl FrameStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            FrameStatus::Ok => "ok",
            FrameStatus::ConstraintViolation => "constraint_violation",
            FrameStatus::IndexOverflow => "index_overflow",
        }
    }
}

/// One decoded chunk; `bits` is present only when the frame is ok.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub status: FrameStatus,
    pub bits: Option<Vec<bool>>,
}

/// Result of [`StreamCodec::audit`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamAudit {
    pub frames: Vec<FrameStatus>,
    /// End positions of forbidden patterns.
    pub forbidden: Vec<usize>,
    pub grid: Option<GridAudit>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridAudit {
    pub sis: Vec<usize>,
    pub pis: Vec<usize>,
    pub max_run: usize,
    pub run_bound: usize,
    /// The code guards against square (SIS) rather than plus (PIS) patterns.
    pub square: bool,
}

impl GridAudit {
    /// Windows of the kind the code is meant to prevent.
    pub fn guarded(&self) -> &[usize] {
        if self.square {
            &self.sis
        } else {
            &self.pis
        }
    }
}

impl StreamAudit {
    pub fn count(&self, status: FrameStatus) -> usize {
        self.frames.iter().filter(|&&s| s == status).count()
    }

    /// Bad frames, forbidden patterns, guarded windows and an over-long run.
    pub fn problems(&self) -> usize {
        let grid = self.grid.as_ref().map_or(0, |g| {
            g.guarded().len() + usize::from(g.max_run > g.run_bound)
        });
        self.frames.len() - self.count(FrameStatus::Ok) + self.forbidden.len() + grid
    }

    pub fn is_clean(&self) -> bool {
        self.problems() == 0
    }
}

/// Stream assembler/parser for one family at one codeword length.
#[derive(Debug, Clone)]
pub struct StreamCodec {
    codec: FamilyCodec,
    mapping: Option<SchemeMapping>,
}

impl StreamCodec {
    pub fn new(family: Family, m: usize) -> Result<Self> {
        if m < 2 {
            return Err(LocoError::InvalidParameter(
                "streams need codewords of length at least 2".into(),
            ));
        }
        Ok(Self {
            codec: FamilyCodec::new(family, m)?,
            mapping: SchemeMapping::for_family(family),
        })
    }

    pub fn codec(&self) -> &FamilyCodec {
        &self.codec
    }

    pub fn family(&self) -> Family {
        self.codec.family()
    }

    pub fn m(&self) -> usize {
        self.codec.m()
    }

    pub fn chunk_bits(&self) -> usize {
        let (s, m) = (self.codec.message_length(), self.m());
        match self.family() {
            Family::Ns => s + m + 1,
            Family::Np => s + m,
            _ => s,
        }
    }

    /// Written symbols per codeword plus its bridge.
    fn period(&self) -> usize {
        self.m() + self.family().bridge_len()
    }

    fn trailing_bridge(&self) -> bool {
        self.family() == Family::Ns
    }

    /// Alphabet size of the written symbols.
    pub fn written_q(&self) -> u8 {
        if self.mapping.is_some() {
            8
        } else {
            self.family().q()
        }
    }

    /// Expected stream length for `frames` codewords.
    pub fn stream_len(&self, frames: usize) -> usize {
        match frames {
            0 => 0,
            n if self.trailing_bridge() => n * self.period(),
            n => n * self.period() - self.family().bridge_len(),
        }
    }

    pub fn frame_count(&self, len: usize) -> Result<usize> {
        let (p, b) = (self.period(), self.family().bridge_len());
        let n = if len == 0 {
            0
        } else if self.trailing_bridge() {
            len / p
        } else {
            (len + b) / p
        };
        if self.stream_len(n) != len {
            return Err(LocoError::MalformedStream(format!(
                "length {len} does not fit whole frames of {} symbols",
                self.m()
            )));
        }
        Ok(n)
    }

    /// Written symbols (`None` is `z`) for a bit string made of whole chunks.
    pub fn assemble_symbols(&self, bits: &[bool]) -> Result<Vec<Option<u8>>> {
        let chunk = self.chunk_bits();
        if !bits.len().is_multiple_of(chunk) {
            return Err(LocoError::MessageLength {
                expected: chunk * (bits.len() / chunk + 1),
                got: bits.len(),
            });
        }
        let (s, m) = (self.codec.message_length(), self.m());
        let chunks: Vec<&[bool]> = bits.chunks(chunk).collect();
        let words = chunks
            .iter()
            .map(|c| self.codec.encode(&c[..s]))
            .collect::<Result<Vec<Word>>>()?;

        let written = |k: usize| -> Result<Vec<u8>> {
            let lv = words[k].levels();
            match self.mapping {
                Some(map) => (0..m).map(|j| map.mux(lv[j], chunks[k][s + j])).collect(),
                None => Ok(lv.to_vec()),
            }
        };

        let mut out: Vec<Option<u8>> = Vec::with_capacity(self.stream_len(words.len()));
        let mut next_written = if words.is_empty() {
            None
        } else {
            Some(written(0)?)
        };
        for k in 0..words.len() {
            let cur = next_written.take().expect("filled ahead");
            out.extend(cur.iter().map(|&l| Some(l)));
            let last = k + 1 == words.len();
            if !last {
                next_written = Some(written(k + 1)?);
            } else if !self.trailing_bridge() {
                break;
            }
            let tail = &words[k].levels()[m - 2..];
            let head: &[u8] = if last {
                &[]
            } else {
                &words[k + 1].levels()[..2]
            };
            for sym in bridge(self.family(), tail, head) {
                let col = match (sym, self.mapping) {
                    (None, _) => None,
                    (Some(l), None) => Some(l),
                    (Some(l), Some(SchemeMapping::Ns)) => {
                        Some(SchemeMapping::Ns.mux(l, chunks[k][s + m])?)
                    }
                    (Some(l), Some(SchemeMapping::Np)) => {
                        let prev = *cur.last().expect("m >= 2");
                        let next = next_written.as_ref().map(|w| w[0]);
                        Some(np_bridge_column(l, prev, next)?)
                    }
                };
                out.push(col);
            }
        }
        Ok(out)
    }

    pub fn assemble_grid(&self, bits: &[bool]) -> Result<Grid> {
        self.require_grid()?;
        Grid::from_symbols(&self.assemble_symbols(bits)?)
    }

    /// Splits a written stream into frames and decodes each one; bridge
    /// columns are skipped except for the NS selection bit.
    pub fn parse_symbols(&self, symbols: &[Option<u8>]) -> Result<Vec<Frame>> {
        let n = self.frame_count(symbols.len())?;
        let (m, p) = (self.m(), self.period());
        let q = self.written_q();
        if let Some(bad) = symbols.iter().flatten().find(|&&l| l >= q) {
            return Err(LocoError::LevelOutOfRange {
                level: u32::from(*bad),
                q,
            });
        }
        (0..n)
            .map(|k| {
                let cols = &symbols[k * p..k * p + m];
                let bridge_col = self.trailing_bridge().then(|| symbols[k * p + m]);
                Ok(self.decode_frame(cols, bridge_col))
            })
            .collect()
    }

    pub fn parse_grid(&self, grid: &Grid) -> Result<Vec<Frame>> {
        self.require_grid()?;
        self.parse_symbols(&grid.to_symbols())
    }

    fn decode_frame(&self, cols: &[Option<u8>], bridge_col: Option<Option<u8>>) -> Frame {
        let fail = |status| Frame { status, bits: None };
        let Some(written): Option<Vec<u8>> = cols.iter().copied().collect() else {
            return fail(FrameStatus::ConstraintViolation);
        };
        let (levels, mut sel) = match self.mapping {
            Some(map) => written
                .iter()
                .map(|&l| map.demux(l).expect("levels checked"))
                .unzip(),
            None => (written, Vec::new()),
        };
        if let Some(col) = bridge_col {
            match col.map(|l| SchemeMapping::Ns.demux(l).expect("levels checked")) {
                Some((_, bit)) => sel.push(bit),
                None => return fail(FrameStatus::ConstraintViolation),
            }
        }
        let word = Word::from_levels(self.family().alphabet(), levels).expect("demuxed levels");
        match self.codec.decode(&word) {
            Ok(mut bits) => {
                bits.extend(sel);
                Frame {
                    status: FrameStatus::Ok,
                    bits: Some(bits),
                }
            }
            Err(LocoError::IndexOverflow) => fail(FrameStatus::IndexOverflow),
            Err(_) => fail(FrameStatus::ConstraintViolation),
        }
    }

    /// End positions of forbidden patterns in the family alphabet, reading
    /// schemes through the demux; `z` separates segments.
    pub fn scan_forbidden(&self, symbols: &[Option<u8>]) -> Result<Vec<usize>> {
        let set = self.codec.forbidden();
        let plen = set.p_max();
        let mut hits = Vec::new();
        let mut seg: Vec<u8> = Vec::new();
        for (k, sym) in symbols.iter().enumerate() {
            match sym {
                None => seg.clear(),
                Some(l) => {
                    let l = match self.mapping {
                        Some(map) => map.demux(*l)?.0,
                        None => *l,
                    };
                    seg.push(l);
                    let from = seg.len().saturating_sub(plen);
                    let tail = &seg[from..];
                    let ends_here = set.patterns().iter().any(|p| tail.ends_with(p.levels()));
                    if ends_here {
                        hits.push(k);
                    }
                }
            }
        }
        Ok(hits)
    }

    /// Longest run of identical written columns the bridging allows.
    pub fn run_bound(&self) -> Option<usize> {
        match self.family() {
            Family::Np => Some(self.m()),
            Family::Os | Family::Op | Family::Ns => Some(self.m() + 1),
            _ => None,
        }
    }

    /// Frame statuses, forbidden-pattern hits and, for GF(8) streams, the
    /// grid scans.
    pub fn audit(&self, symbols: &[Option<u8>]) -> Result<StreamAudit> {
        let frames = self.parse_symbols(symbols)?;
        let forbidden = self.scan_forbidden(symbols)?;
        let grid = match self.run_bound() {
            Some(run_bound) => {
                let g = Grid::from_symbols(symbols)?;
                Some(GridAudit {
                    sis: scan_sis(&g),
                    pis: scan_pis(&g),
                    max_run: max_no_transition_run(&g),
                    run_bound,
                    square: matches!(self.family(), Family::Os | Family::Ns),
                })
            }
            None => None,
        };
        Ok(StreamAudit {
            frames: frames.into_iter().map(|f| f.status).collect(),
            forbidden,
            grid,
        })
    }

    /// Text with `|` after each codeword and each bridge.
    pub fn render(&self, symbols: &[Option<u8>]) -> String {
        let (m, p) = (self.m(), self.period());
        let mut out = String::new();
        for (k, s) in symbols.iter().enumerate() {
            if k > 0 && (k % p == m || k % p == 0) {
                out.push('|');
            }
            out.push(symbol_char(*s));
        }
        out
    }

    fn require_grid(&self) -> Result<()> {
        if self.written_q() != 8 {
            return Err(LocoError::InvalidParameter(format!(
                "{} is not written as GF(8) columns",
                self.family()
            )));
        }
        Ok(())
    }
}

/// NP bridge column: the preimage that differs from whichever neighbour
/// column shares the bridge's GF(4) symbol; the left one otherwise.
fn np_bridge_column(s4: u8, prev: u8, next: Option<u8>) -> Result<u8> {
    let map = SchemeMapping::Np;
    let [left, right] = map.preimages(s4)?;
    let same = |col: u8| map.demux(col).map(|(g, _)| g == s4);
    let avoid = if same(prev)? {
        Some(prev)
    } else {
        match next {
            Some(n) if same(n)? => Some(n),
            _ => None,
        }
    };
    Ok(if avoid == Some(left) { right } else { left })
}

fn symbol_char(s: Option<u8>) -> char {
    match s {
        None => 'z',
        Some(l) => char::from_digit(u32::from(l), 10).unwrap_or('?'),
    }
}

/// Plain rendering, one character per symbol.
pub fn render_symbols(symbols: &[Option<u8>]) -> String {
    symbols.iter().map(|&s| symbol_char(s)).collect()
}

/// Reads level digits and `z`; `|` and whitespace are ignored.
pub fn parse_symbol_text(text: &str) -> Result<Vec<Option<u8>>> {
    text.chars()
        .filter(|c| !c.is_whitespace() && *c != '|')
        .map(|c| match c {
            'z' => Ok(None),
            d => d
                .to_digit(10)
                .map(|v| Some(v as u8))
                .ok_or_else(|| LocoError::MalformedStream(format!("unexpected character {d:?}"))),
        })
        .collect()
}
