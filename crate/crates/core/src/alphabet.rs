//! Symbols, words and the level ordering.
//!
//! A q-ary symbol is either `0` or a power `α^k` of the primitive element.
//! Its level is `0` for `0` and `k + 1` for `α^k`, so levels run over
//! `0..q`. Words are stored leftmost first; the leftmost symbol is the most
//! significant one. Position `i` in the `c_{m-1} … c_0` convention therefore
//! sits at storage index `m - 1 - i`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{LocoError, Result};

/// Alphabet of size `q` (`q = 2` binary, `q = 4` GF(4), `q = 8` GF(8)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    q: u8,
}

impl Alphabet {
    pub fn new(q: u32) -> Result<Self> {
        if !(2..=255).contains(&q) {
            return Err(LocoError::InvalidAlphabet(q));
        }
        Ok(Self { q: q as u8 })
    }

    pub fn binary() -> Self {
        Self { q: 2 }
    }

    pub fn size(self) -> u8 {
        self.q
    }

    pub fn symbol(self, level: u32) -> Result<Symbol> {
        if level >= u32::from(self.q) {
            return Err(LocoError::LevelOutOfRange { level, q: self.q });
        }
        Ok(Symbol(level as u8))
    }

    pub fn symbols(self) -> impl Iterator<Item = Symbol> {
        (0..self.q).map(Symbol)
    }

    pub(crate) fn check_levels(self, levels: &[u8]) -> Result<()> {
        match levels.iter().find(|&&l| l >= self.q) {
            Some(&l) => Err(LocoError::LevelOutOfRange {
                level: u32::from(l),
                q: self.q,
            }),
            None => Ok(()),
        }
    }
}

/// A symbol identified by its level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u8);

impl Symbol {
    pub const ZERO: Symbol = Symbol(0);

    /// The symbol `α^k`.
    pub fn alpha_pow(k: u8) -> Symbol {
        Symbol(k + 1)
    }

    pub fn level(self) -> u8 {
        self.0
    }

    /// Exponent `k` for `α^k`, `None` for `0`.
    pub fn exponent(self) -> Option<u8> {
        self.0.checked_sub(1)
    }

    /// Algebraic name: `0`, `1`, `α`, `α^2`, ...
    pub fn label(self) -> String {
        match self.0 {
            0 => "0".into(),
            1 => "1".into(),
            2 => "α".into(),
            l => format!("α^{}", l - 1),
        }
    }
}

/// Level-equivalent of a symbol.
pub fn level(c: Symbol) -> u8 {
    c.level()
}

/// Inverse of [`level`].
pub fn inverse_level(a: u32, alphabet: Alphabet) -> Result<Symbol> {
    alphabet.symbol(a)
}

/// A finite word, leftmost symbol first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    levels: Vec<u8>,
}

impl Word {
    pub fn from_levels(alphabet: Alphabet, levels: Vec<u8>) -> Result<Self> {
        alphabet.check_levels(&levels)?;
        Ok(Self { alphabet, levels })
    }

    pub(crate) fn from_levels_unchecked(alphabet: Alphabet, levels: Vec<u8>) -> Self {
        debug_assert!(alphabet.check_levels(&levels).is_ok());
        Self { alphabet, levels }
    }

    pub fn from_symbols(alphabet: Alphabet, symbols: &[Symbol]) -> Result<Self> {
        Self::from_levels(alphabet, symbols.iter().map(|s| s.level()).collect())
    }

    /// Parses one digit per level, e.g. `"02765"`. Only for `q <= 10`.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self> {
        if alphabet.size() > 10 {
            return Err(LocoError::MalformedStream(
                "digit notation needs q <= 10".into(),
            ));
        }
        let levels = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                c.to_digit(10).map(|d| d as u8).ok_or_else(|| {
                    LocoError::MalformedStream(format!("unexpected character {c:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_levels(alphabet, levels)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Levels, leftmost first.
    pub fn levels(&self) -> &[u8] {
        &self.levels
    }

    pub fn into_levels(self) -> Vec<u8> {
        self.levels
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.levels.iter().map(|&l| Symbol(l))
    }

    /// Symbol `c_i`, counting from the right end (`c_0` is the rightmost).
    /// Positions at or beyond the length are the out-of-bounds sentinel,
    /// returned as `None`; it never equals any symbol.
    pub fn at(&self, i: usize) -> Option<Symbol> {
        let m = self.levels.len();
        (i < m).then(|| Symbol(self.levels[m - 1 - i]))
    }

    /// Algebraic rendering, e.g. `0 α α^6 α^5 α^4`.
    pub fn labels(&self) -> String {
        self.symbols()
            .map(Symbol::label)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet.size() <= 10 {
            for &l in &self.levels {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            f.write_str(&self.labels())
        }
    }
}

/// Lexicographic comparison with the leftmost symbol most significant.
pub fn lex_compare(u: &Word, v: &Word) -> Result<Ordering> {
    if u.alphabet != v.alphabet {
        return Err(LocoError::AlphabetMismatch {
            left: u.alphabet.size(),
            right: v.alphabet.size(),
        });
    }
    if u.len() != v.len() {
        return Err(LocoError::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(u.levels.cmp(&v.levels))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levels_and_labels() {
        let a = Alphabet::new(8).unwrap();
        let w = Word::parse(a, "02765").unwrap();
        assert_eq!(w.labels(), "0 α α^6 α^5 α^4");
        assert_eq!(w.at(4), Some(Symbol::ZERO));
        assert_eq!(w.at(0), Some(Symbol::alpha_pow(4)));
        assert_eq!(w.at(5), None);
        assert_eq!(level(Symbol::alpha_pow(6)), 7);
    }

    #[test]
    fn ordering_is_leftmost_first() {
        let a = Alphabet::new(4).unwrap();
        let u = Word::parse(a, "103").unwrap();
        let v = Word::parse(a, "110").unwrap();
        assert_eq!(lex_compare(&u, &v).unwrap(), Ordering::Less);
        let w = Word::parse(a, "11").unwrap();
        assert!(lex_compare(&u, &w).is_err());
    }

    #[test]
    fn rejects_bad_levels() {
        let a = Alphabet::binary();
        assert!(Word::from_levels(a, vec![0, 2]).is_err());
        assert!(Alphabet::new(1).is_err());
        assert!(inverse_level(3, a).is_err());
    }
}
