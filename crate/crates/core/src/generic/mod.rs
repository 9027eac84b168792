//! Generic engine for an arbitrary finite forbidden-pattern set.
//!
//! [`ForbiddenSet`] holds the patterns, [`ConstraintAutomaton`] is the
//! substring-avoidance automaton built from them, and [`CompletionTable`]
//! counts accepted continuations so that any constrained code can be
//! counted, ranked and unranked exactly.

mod automaton;
mod capacity;

pub use automaton::{CompletionTable, ConstraintAutomaton, DEFAULT_ENUMERATION_CAP};
pub use capacity::{Capacity, DEFAULT_CAPACITY_TOL, MAX_POWER_ITERATIONS};

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Word};
use crate::error::{LocoError, Result};

/// A list of forbidden subwords over one alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenSet {
    alphabet: Alphabet,
    patterns: Vec<Word>,
}

impl ForbiddenSet {
    /// Validates the patterns. A pattern that contains another pattern as a
    /// subword can never be the first match, so it is dropped with a warning.
    pub fn new(alphabet: Alphabet, patterns: Vec<Vec<u8>>) -> Result<Self> {
        let mut seen: Vec<Vec<u8>> = Vec::with_capacity(patterns.len());
        for p in patterns {
            if p.is_empty() {
                return Err(LocoError::InvalidPattern("empty pattern".into()));
            }
            alphabet.check_levels(&p)?;
            if seen.contains(&p) {
                return Err(LocoError::DuplicatePattern(p));
            }
            seen.push(p);
        }
        let kept: Vec<Vec<u8>> = seen
            .iter()
            .filter(|p| {
                let redundant = seen
                    .iter()
                    .any(|other| other.len() < p.len() && contains_subword(p, other));
                if redundant {
                    log::warn!("dropping pattern {p:?}: it contains a shorter forbidden pattern");
                }
                !redundant
            })
            .cloned()
            .collect();
        Ok(Self {
            alphabet,
            patterns: kept
                .into_iter()
                .map(|p| Word::from_levels_unchecked(alphabet, p))
                .collect(),
        })
    }

    pub fn unconstrained(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            patterns: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn patterns(&self) -> &[Word] {
        &self.patterns
    }

    /// Longest pattern length, 0 when unconstrained.
    pub fn p_max(&self) -> usize {
        self.patterns.iter().map(Word::len).max().unwrap_or(0)
    }

    /// Position (leftmost-first storage index) where the first forbidden
    /// occurrence ends, found by direct substring comparison.
    pub fn first_violation(&self, levels: &[u8]) -> Option<usize> {
        (0..levels.len()).find(|&end| {
            self.patterns.iter().any(|p| {
                let n = p.len();
                end + 1 >= n && &levels[end + 1 - n..=end] == p.levels()
            })
        })
    }

    pub fn admits(&self, levels: &[u8]) -> bool {
        self.first_violation(levels).is_none()
    }

    /// Reads `{ "q": 8, "patterns": [[0,2,0],[7,5,7]] }`.
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: ConstraintConfig =
            serde_json::from_str(text).map_err(|e| LocoError::Config(e.to_string()))?;
        cfg.build()
    }

    pub fn from_config_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| LocoError::Config(format!("{}: {e}", path.as_ref().display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        let cfg = ConstraintConfig {
            q: u32::from(self.alphabet.size()),
            patterns: self.patterns.iter().map(|p| p.levels().to_vec()).collect(),
        };
        serde_json::to_string(&cfg).expect("config serializes")
    }
}

/// Serialized form of a constraint.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstraintConfig {
    pub q: u32,
    pub patterns: Vec<Vec<u8>>,
}

impl ConstraintConfig {
    pub fn build(self) -> Result<ForbiddenSet> {
        ForbiddenSet::new(Alphabet::new(self.q)?, self.patterns)
    }
}

fn contains_subword(hay: &[u8], needle: &[u8]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn drops_containing_patterns() {
        let set = ForbiddenSet::new(Alphabet::binary(), vec![vec![1, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(set.patterns().len(), 1);
        assert_eq!(set.p_max(), 2);
    }

    #[test]
    fn rejects_duplicates_and_bad_levels() {
        let a = Alphabet::binary();
        assert!(matches!(
            ForbiddenSet::new(a, vec![vec![1, 1], vec![1, 1]]),
            Err(LocoError::DuplicatePattern(_))
        ));
        assert!(ForbiddenSet::new(a, vec![vec![2]]).is_err());
        assert!(ForbiddenSet::new(a, vec![vec![]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let set = ForbiddenSet::from_json(r#"{ "q": 8, "patterns": [[0,2,0],[7,5,7]] }"#).unwrap();
        assert_eq!(set.alphabet().size(), 8);
        let again = ForbiddenSet::from_json(&set.to_json()).unwrap();
        assert_eq!(set, again);
        assert!(ForbiddenSet::from_json("{").is_err());
    }

    #[test]
    fn substring_scan() {
        let set = ForbiddenSet::new(Alphabet::binary(), vec![vec![1, 1]]).unwrap();
        assert!(set.admits(&[1, 0, 1, 0, 1]));
        assert_eq!(set.first_violation(&[0, 1, 1, 0]), Some(2));
    }
}
