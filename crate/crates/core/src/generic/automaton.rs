use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::ForbiddenSet;
use crate::alphabet::{Alphabet, Word};
use crate::error::{LocoError, Result};

/// Default limit on `q^m` for brute-force enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;

/// Deterministic automaton whose states are the pattern prefixes that can
/// still grow into a match. A transition to `None` is the absorbing reject
/// state: the word read so far contains a forbidden pattern.
#[derive(Debug, Clone)]
pub struct ConstraintAutomaton {
    set: ForbiddenSet,
    delta: Vec<Vec<Option<usize>>>,
    contexts: Vec<Vec<u8>>,
}

impl ConstraintAutomaton {
    pub fn build(set: &ForbiddenSet) -> Self {
        let q = usize::from(set.alphabet().size());

        // Trie over the patterns, node 0 is the empty context.
        let mut children: Vec<Vec<Option<usize>>> = vec![vec![None; q]];
        let mut terminal = vec![false];
        let mut depth_ctx: Vec<Vec<u8>> = vec![Vec::new()];
        for p in set.patterns() {
            let mut node = 0;
            for &l in p.levels() {
                let l = usize::from(l);
                node = match children[node][l] {
                    Some(next) => next,
                    None => {
                        children.push(vec![None; q]);
                        terminal.push(false);
                        let mut ctx = depth_ctx[node].clone();
                        ctx.push(l as u8);
                        depth_ctx.push(ctx);
                        let id = children.len() - 1;
                        children[node][l] = Some(id);
                        id
                    }
                };
            }
            terminal[node] = true;
        }

        // Failure links, breadth first; goto is completed through them.
        let n = children.len();
        let mut fail = vec![0usize; n];
        let mut go = vec![vec![0usize; q]; n];
        let mut queue = VecDeque::new();
        for c in 0..q {
            match children[0][c] {
                Some(v) => {
                    fail[v] = 0;
                    go[0][c] = v;
                    queue.push_back(v);
                }
                None => go[0][c] = 0,
            }
        }
        while let Some(u) = queue.pop_front() {
            terminal[u] |= terminal[fail[u]];
            for c in 0..q {
                match children[u][c] {
                    Some(v) => {
                        fail[v] = go[fail[u]][c];
                        go[u][c] = v;
                        queue.push_back(v);
                    }
                    None => go[u][c] = go[fail[u]][c],
                }
            }
        }

        // Keep live states only; anything reaching a terminal node rejects.
        let mut index = vec![usize::MAX; n];
        let mut contexts = Vec::new();
        for u in 0..n {
            if !terminal[u] {
                index[u] = contexts.len();
                contexts.push(depth_ctx[u].clone());
            }
        }
        let delta = (0..n)
            .filter(|&u| !terminal[u])
            .map(|u| {
                go[u]
                    .iter()
                    .map(|&v| (!terminal[v]).then_some(index[v]))
                    .collect()
            })
            .collect();

        Self {
            set: set.clone(),
            delta,
            contexts,
        }
    }

    pub fn forbidden(&self) -> &ForbiddenSet {
        &self.set
    }

    pub fn alphabet(&self) -> Alphabet {
        self.set.alphabet()
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn start(&self) -> usize {
        0
    }

    /// Context string (pattern prefix) a state stands for.
    pub fn context(&self, state: usize) -> &[u8] {
        &self.contexts[state]
    }

    pub fn next(&self, state: usize, level: u8) -> Option<usize> {
        self.delta[state][usize::from(level)]
    }

    pub fn accepts(&self, levels: &[u8]) -> bool {
        self.walk(levels).is_ok()
    }

    /// Final state after reading `levels`, or the storage index at which the
    /// walk rejected.
    pub fn walk(&self, levels: &[u8]) -> std::result::Result<usize, usize> {
        let mut s = self.start();
        for (k, &l) in levels.iter().enumerate() {
            s = self.next(s, l).ok_or(k)?;
        }
        Ok(s)
    }

    pub fn completion_table(&self, max_len: usize) -> CompletionTable {
        CompletionTable::build(self, max_len)
    }

    /// Number of length-`m` words avoiding every pattern.
    pub fn count(&self, m: usize) -> BigUint {
        self.completion_table(m).count(m)
    }

    /// All admissible words of length `m` in lexicographic order, found by
    /// scanning every candidate word directly against the pattern list.
    pub fn enumerate(&self, m: usize) -> Result<Vec<Word>> {
        self.enumerate_capped(m, DEFAULT_ENUMERATION_CAP)
    }

    pub fn enumerate_capped(&self, m: usize, cap: u64) -> Result<Vec<Word>> {
        let alphabet = self.alphabet();
        let q = alphabet.size();
        let candidates = BigUint::from(q).pow(m as u32);
        if candidates > BigUint::from(cap) {
            return Err(LocoError::EnumerationCapExceeded {
                candidates: candidates.to_string(),
                cap,
            });
        }
        let total = candidates.to_u64().expect("bounded by cap");
        let mut out = Vec::new();
        let mut cur = vec![0u8; m];
        for k in 0..total {
            if k > 0 {
                // Odometer step, rightmost symbol fastest.
                let mut pos = m;
                while pos > 0 {
                    pos -= 1;
                    cur[pos] += 1;
                    if cur[pos] < q {
                        break;
                    }
                    cur[pos] = 0;
                }
            }
            if self.set.admits(&cur) {
                out.push(Word::from_levels_unchecked(alphabet, cur.clone()));
            }
        }
        Ok(out)
    }
}

/// `W[len][state]`: number of admissible continuations of length `len`.
#[derive(Debug, Clone)]
pub struct CompletionTable {
    w: Vec<Vec<BigUint>>,
}

impl CompletionTable {
    pub fn build(a: &ConstraintAutomaton, max_len: usize) -> Self {
        let n = a.num_states();
        let mut w: Vec<Vec<BigUint>> = Vec::with_capacity(max_len + 1);
        w.push(vec![BigUint::one(); n]);
        for len in 1..=max_len {
            let prev = &w[len - 1];
            let row = (0..n)
                .map(|s| {
                    a.delta[s]
                        .iter()
                        .flatten()
                        .fold(BigUint::zero(), |acc, &t| acc + &prev[t])
                })
                .collect();
            w.push(row);
        }
        Self { w }
    }

    pub fn max_len(&self) -> usize {
        self.w.len() - 1
    }

    pub fn get(&self, state: usize, len: usize) -> &BigUint {
        &self.w[len][state]
    }

    pub fn count(&self, m: usize) -> BigUint {
        self.w[m][0].clone()
    }

    /// Lexicographic index of an admissible word.
    pub fn rank(&self, a: &ConstraintAutomaton, word: &Word) -> Result<BigUint> {
        let m = word.len();
        self.check_len(m)?;
        let mut g = BigUint::zero();
        let mut state = a.start();
        for (k, &c) in word.levels().iter().enumerate() {
            let i = m - 1 - k;
            for lower in 0..c {
                if let Some(t) = a.next(state, lower) {
                    g += &self.w[i][t];
                }
            }
            state = a
                .next(state, c)
                .ok_or(LocoError::ConstraintViolation { position: i })?;
        }
        Ok(g)
    }

    /// Word of length `m` at index `g`, chosen greedily from the left.
    pub fn unrank(&self, a: &ConstraintAutomaton, g: &BigUint, m: usize) -> Result<Word> {
        self.check_len(m)?;
        let size = self.count(m);
        if *g >= size {
            return Err(LocoError::IndexOutOfRange {
                index: g.to_string(),
                size: size.to_string(),
            });
        }
        let q = a.alphabet().size();
        let mut residual = g.clone();
        let mut state = a.start();
        let mut levels = Vec::with_capacity(m);
        for k in 0..m {
            let i = m - 1 - k;
            let mut chosen = None;
            for c in 0..q {
                if let Some(t) = a.next(state, c) {
                    let w = &self.w[i][t];
                    if residual < *w {
                        chosen = Some((c, t));
                        break;
                    }
                    residual -= w;
                }
            }
            let (c, t) = chosen.expect("residual stays below the subtree count");
            levels.push(c);
            state = t;
        }
        Ok(Word::from_levels_unchecked(a.alphabet(), levels))
    }

    fn check_len(&self, m: usize) -> Result<()> {
        if m > self.max_len() {
            return Err(LocoError::InvalidParameter(format!(
                "length {m} exceeds the completion table ({})",
                self.max_len()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rll() -> ConstraintAutomaton {
        let set = ForbiddenSet::new(Alphabet::binary(), vec![vec![1, 1]]).unwrap();
        ConstraintAutomaton::build(&set)
    }

    #[test]
    fn unconstrained_is_one_state() {
        let a = ConstraintAutomaton::build(&ForbiddenSet::unconstrained(Alphabet::binary()));
        assert_eq!(a.num_states(), 1);
        assert_eq!(a.next(0, 0), Some(0));
        assert_eq!(a.next(0, 1), Some(0));
        assert_eq!(a.count(2), BigUint::from(4u32));
    }

    #[test]
    fn walks() {
        let a = rll();
        assert!(a.accepts(&[1, 0, 1, 0, 1]));
        assert!(!a.accepts(&[0, 1, 1, 0]));
        assert_eq!(a.walk(&[0, 1, 1, 0]), Err(2));
    }

    #[test]
    fn rank_unrank_small() {
        let a = rll();
        let t = a.completion_table(5);
        assert_eq!(t.count(5), BigUint::from(13u32));
        let w = Word::parse(Alphabet::binary(), "10101").unwrap();
        assert_eq!(t.rank(&a, &w).unwrap(), BigUint::from(12u32));
        assert_eq!(t.unrank(&a, &BigUint::from(12u32), 5).unwrap(), w);
        assert!(t.unrank(&a, &BigUint::from(13u32), 5).is_err());
        let bad = Word::parse(Alphabet::binary(), "01100").unwrap();
        assert!(matches!(
            t.rank(&a, &bad),
            Err(LocoError::ConstraintViolation { .. })
        ));
    }

    #[test]
    fn enumerate_cap() {
        let a = rll();
        assert_eq!(a.enumerate(3).unwrap().len(), 5);
        assert!(a.enumerate_capped(10, 1000).is_err());
    }
}
