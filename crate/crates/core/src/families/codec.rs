//! Closed-form index rules and the message codec built on them.
//!
//! Each family writes the contribution of a symbol as
//! `g_i(a) = (1/den) * Σ coef_k * N(idx_k)`, with small integer coefficients
//! set by the merging variables. The codec keeps `P(j) = N(j) * L`, where
//! `L` clears every denominator in the cardinality table, so a contribution
//! scaled by `K = den * L` is an exact integer. A real contribution is an
//! integer iff its scaled value is a multiple of `K`; that is checked for
//! every symbol that is encoded or decoded.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rate_from_s, CardinalityTable, ClockingExclusions, Family, Rate, OP_B1, OP_B2};
use crate::alphabet::Word;
use crate::error::{LocoError, Result};
use crate::generic::ForbiddenSet;

/// Up to three `(coefficient, cardinality index)` terms.
type Terms = [(i64, i64); 3];

const NONE: (i64, i64) = (0, 0);

fn b(v: bool) -> i64 {
    i64::from(v)
}

/// Common denominator of a family's merging functions.
fn rule_denominator(family: Family) -> i64 {
    match family {
        Family::LoRll { .. } | Family::Ns => 1,
        Family::SLoco { .. } | Family::Os => 2,
        Family::Op => 8,
        Family::Np => 4,
    }
}

/// Terms of `g_i(a)` given the symbols already placed to the left
/// (`prev`, leftmost first, so `prev.last()` is `c_{i+1}`).
fn terms(family: Family, i: usize, a: u8, prev: &[u8]) -> Terms {
    let i = i as i64;
    let c1 = prev.last().copied();
    let c2 = prev.len().checked_sub(2).map(|k| prev[k]);
    let al = i64::from(a);
    match family {
        Family::LoRll { .. } => [(al, i), NONE, NONE],
        Family::SLoco { x } => {
            let ones = prev.iter().rev().take_while(|&&l| l == 1).count();
            let bounded = ones < prev.len();
            let y1 = a == 1 && (1..=x as usize).contains(&ones) && bounded;
            let y2 = a == 1 && c1 == Some(1) && !y1;
            [(al - b(y1), i + 1 - b(y2) * i64::from(x)), NONE, NONE]
        }
        Family::Os => {
            let y1 = c2 == Some(0) && c1 == Some(2) && a >= 1;
            let y2 = (c1 == Some(0) && a >= 3) || (c1 == Some(7) && a >= 6);
            let t = b(a != 0) * (1 - b(y1));
            [
                (2 * al - 2 * b(y1) - b(y2), i),
                (t * (6 * b(y2) - 1), i - 1),
                (t * 6, i - 2),
            ]
        }
        Family::Op => {
            let in_b1 = |c: Option<u8>| c.is_some_and(|c| OP_B1.contains(&c));
            let in_b2 = |c: Option<u8>| c.is_some_and(|c| OP_B2.contains(&c));
            let (mut y1, mut y2) = (false, false);
            if in_b1(c2) && c1 == Some(2) {
                y1 = a == 2 || a == 3;
                y2 = a >= 6;
            } else if in_b2(c2) && c1 == Some(5) {
                y1 = a == 4 || a == 5;
            }
            let y3 = ((in_b1(c1) && a >= 3) || (in_b2(c1) && a >= 6)) && !y1 && !y2;
            [
                (al - 2 * b(y1) - 4 * b(y2) - b(y3), i + 1),
                (4 * b(y3), i),
                NONE,
            ]
        }
        Family::Ns => {
            let y1 = c1 == Some(3) && a >= 1;
            [(al - b(y1), i), (3 * b(y1), i - 1), NONE]
        }
        Family::Np => {
            let y1 = matches!(c2, Some(0 | 1)) && c1 == Some(3) && a >= 2;
            let y2 = matches!(c1, Some(2 | 3)) && a >= 1 && !y1;
            [(al - 2 * b(y1) - b(y2), i + 1), (2 * b(y2), i), NONE]
        }
    }
}

/// Encoder/decoder for one family at one codeword length.
#[derive(Debug, Clone)]
pub struct FamilyCodec {
    family: Family,
    m: usize,
    s: usize,
    offset: u32,
    table: CardinalityTable,
    /// `N(j) * L` for every `j` in the table.
    scaled: Vec<BigInt>,
    /// `den * L`.
    k: BigInt,
    count: BigUint,
    forbidden: ForbiddenSet,
}

impl FamilyCodec {
    pub fn new(family: Family, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(LocoError::LengthOutOfRange {
                family: family.to_string(),
                m: 0,
            });
        }
        let table = CardinalityTable::build(family, m as i64 + 1)?;
        let lcm = table.denominator_lcm();
        let scaled = table
            .values()
            .iter()
            .map(|v| {
                let p = v * num_rational::BigRational::from_integer(lcm.clone());
                debug_assert!(p.is_integer());
                p.to_integer()
            })
            .collect();
        let k = lcm * BigInt::from(rule_denominator(family));
        let count = table.count(m)?;
        let ex = family.clocking_exclusions(m);
        let usable = &count - BigUint::from(ex.words.len());
        if usable < BigUint::from(2u32) {
            return Err(LocoError::EmptyMessageSpace { m });
        }
        let s = (usable.bits() - 1) as usize;
        Ok(Self {
            family,
            m,
            s,
            offset: ex.offset,
            table,
            scaled,
            k,
            count,
            forbidden: family.forbidden_set(),
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Message bits per codeword.
    pub fn message_length(&self) -> usize {
        self.s
    }

    pub fn cardinality(&self) -> &BigUint {
        &self.count
    }

    pub fn table(&self) -> &CardinalityTable {
        &self.table
    }

    pub fn forbidden(&self) -> &ForbiddenSet {
        &self.forbidden
    }

    pub fn clocking_exclusions(&self) -> ClockingExclusions {
        self.family.clocking_exclusions(self.m)
    }

    pub fn rate(&self) -> Rate {
        rate_from_s(self.family, self.m, self.s)
    }

    fn p(&self, j: i64) -> &BigInt {
        &self.scaled[(j - self.table.min_index()) as usize]
    }

    /// `K * g_i(a)`.
    fn scaled_contribution(&self, i: usize, a: u8, prev: &[u8]) -> BigInt {
        terms(self.family, i, a, prev)
            .iter()
            .filter(|(coef, _)| *coef != 0)
            .fold(BigInt::zero(), |acc, &(coef, j)| {
                acc + BigInt::from(coef) * self.p(j)
            })
    }

    fn exact(&self, scaled: &BigInt, position: usize) -> Result<BigUint> {
        let (quot, rem) = scaled.div_rem(&self.k);
        if !rem.is_zero() || scaled.is_negative() {
            return Err(LocoError::NonIntegral { position });
        }
        Ok(quot.magnitude().clone())
    }

    fn check(&self, word: &Word) -> Result<()> {
        if word.alphabet() != self.family.alphabet() {
            return Err(LocoError::AlphabetMismatch {
                left: word.alphabet().size(),
                right: self.family.q(),
            });
        }
        if word.len() != self.m {
            return Err(LocoError::LengthMismatch {
                left: word.len(),
                right: self.m,
            });
        }
        if let Some(k) = self.forbidden.first_violation(word.levels()) {
            return Err(LocoError::ConstraintViolation {
                position: self.m - 1 - k,
            });
        }
        Ok(())
    }

    /// Per-symbol contributions `g_i(c_i)`, listed from `i = m - 1` down.
    pub fn contributions(&self, word: &Word) -> Result<Vec<BigUint>> {
        self.check(word)?;
        let lv = word.levels();
        (0..self.m)
            .map(|k| {
                let i = self.m - 1 - k;
                self.exact(&self.scaled_contribution(i, lv[k], &lv[..k]), i)
            })
            .collect()
    }

    /// Lexicographic index `g(c)`.
    pub fn index(&self, word: &Word) -> Result<BigUint> {
        Ok(self.contributions(word)?.into_iter().sum())
    }

    /// Codeword at index `g`, built greedily from the left: the top level
    /// if the residual reaches its contribution, otherwise the level whose
    /// contribution interval holds the residual, otherwise `0`.
    pub fn codeword_at(&self, g: &BigUint) -> Result<Word> {
        if *g >= self.count {
            return Err(LocoError::IndexOutOfRange {
                index: g.to_string(),
                size: self.count.to_string(),
            });
        }
        let q = self.family.q();
        let mut residual = BigInt::from_biguint(Sign::Plus, g.clone()) * &self.k;
        let mut levels: Vec<u8> = Vec::with_capacity(self.m);
        let mut contrib: Vec<BigInt> = vec![BigInt::zero(); usize::from(q)];
        for k in 0..self.m {
            let i = self.m - 1 - k;
            for a in 1..q {
                contrib[usize::from(a)] = self.scaled_contribution(i, a, &levels);
            }
            let top = q - 1;
            let chosen = if residual >= contrib[usize::from(top)] {
                top
            } else {
                (1..top)
                    .rev()
                    .find(|&a| {
                        contrib[usize::from(a)] <= residual
                            && residual < contrib[usize::from(a) + 1]
                    })
                    .unwrap_or(0)
            };
            let c = &contrib[usize::from(chosen)];
            self.exact(c, i)?;
            residual -= c;
            levels.push(chosen);
        }
        if !residual.is_zero() {
            return Err(LocoError::NonIntegral { position: 0 });
        }
        Ok(Word::from_levels_unchecked(self.family.alphabet(), levels))
    }

    /// Encodes exactly `s` bits, `bits[0]` most significant.
    pub fn encode(&self, bits: &[bool]) -> Result<Word> {
        if bits.len() != self.s {
            return Err(LocoError::MessageLength {
                expected: self.s,
                got: bits.len(),
            });
        }
        let g = bits_to_int(bits) + BigUint::from(self.offset);
        self.codeword_at(&g)
    }

    /// Inverse of [`encode`](Self::encode). Codewords outside the message
    /// space, including the clocking exclusions, give `IndexOverflow`.
    pub fn decode(&self, word: &Word) -> Result<Vec<bool>> {
        let g = self.index(word)?;
        let offset = BigUint::from(self.offset);
        if g < offset {
            return Err(LocoError::IndexOverflow);
        }
        let v = g - offset;
        if v.bits() as usize > self.s {
            return Err(LocoError::IndexOverflow);
        }
        Ok(int_to_bits(&v, self.s))
    }
}

pub(crate) fn bits_to_int(bits: &[bool]) -> BigUint {
    bits.iter().fold(BigUint::zero(), |acc, &bit| {
        (acc << 1u32) + if bit { BigUint::one() } else { BigUint::zero() }
    })
}

pub(crate) fn int_to_bits(v: &BigUint, width: usize) -> Vec<bool> {
    (0..width).rev().map(|k| v.bit(k as u64)).collect()
}

/// Earlier S-LOCO rule: every `1` except the leftmost symbol contributes
/// `N(i + 1 - x) / 2`, and a leading `1` contributes `N(m) / 2`.
pub fn legacy_sloco_index(x: u32, word: &Word) -> Result<BigUint> {
    let family = Family::s_loco(x)?;
    let m = word.len();
    let codec = FamilyCodec::new(family, m)?;
    codec.check(word)?;
    let lv = word.levels();
    let mut total = BigInt::zero();
    for (k, &a) in lv.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let i = (m - 1 - k) as i64;
        let j = if k == 0 {
            m as i64
        } else {
            i + 1 - i64::from(x)
        };
        total += codec.p(j);
    }
    codec.exact(&total, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn w(q: u32, s: &str) -> Word {
        Word::parse(Alphabet::new(q).unwrap(), s).unwrap()
    }

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn os_contributions() {
        let c = FamilyCodec::new(Family::Os, 5).unwrap();
        let parts: Vec<u64> = c
            .contributions(&w(8, "02765"))
            .unwrap()
            .iter()
            .map(|v| v.try_into().unwrap())
            .collect();
        assert_eq!(parts, [0, 1012, 384, 47, 5]);
        assert_eq!(c.message_length(), 14);
        assert_eq!(c.encode(&bits("00010110101000")).unwrap(), w(8, "02765"));
    }

    #[test]
    fn op_contributions() {
        let c = FamilyCodec::new(Family::Op, 5).unwrap();
        let parts: Vec<u64> = c
            .contributions(&w(8, "44267"))
            .unwrap()
            .iter()
            .map(|v| v.try_into().unwrap())
            .collect();
        assert_eq!(parts, [13616, 1596, 120, 16, 7]);
    }

    #[test]
    fn np_contributions() {
        let c = FamilyCodec::new(Family::Np, 6).unwrap();
        let parts: Vec<u64> = c
            .contributions(&w(4, "132312"))
            .unwrap()
            .iter()
            .map(|v| v.try_into().unwrap())
            .collect();
        assert_eq!(parts, [634, 534, 0, 36, 2, 2]);
    }

    #[test]
    fn clocking_offsets() {
        let lo = FamilyCodec::new(Family::LoRll { d: 1 }, 5).unwrap();
        assert_eq!(lo.message_length(), 3);
        assert_eq!(lo.decode(&w(2, "00000")), Err(LocoError::IndexOverflow));
        assert_eq!(lo.encode(&bits("000")).unwrap(), w(2, "00001"));

        let s = FamilyCodec::new(Family::SLoco { x: 2 }, 5).unwrap();
        assert_eq!(s.index(&w(2, "01111")).unwrap(), BigUint::from(5u32));
        assert_eq!(s.decode(&w(2, "01111")).unwrap(), bits("100"));
        assert_eq!(s.decode(&w(2, "11111")), Err(LocoError::IndexOverflow));
        assert_eq!(s.decode(&w(2, "00000")), Err(LocoError::IndexOverflow));
    }

    #[test]
    fn rejects_violations_and_lengths() {
        let c = FamilyCodec::new(Family::Os, 5).unwrap();
        assert!(matches!(
            c.decode(&w(8, "00200")),
            Err(LocoError::ConstraintViolation { position: 1 })
        ));
        assert!(matches!(
            c.encode(&bits("01")),
            Err(LocoError::MessageLength { .. })
        ));
        assert!(FamilyCodec::new(Family::LoRll { d: 1 }, 1).is_err());
    }

    #[test]
    fn legacy_rule_example() {
        assert_eq!(
            legacy_sloco_index(2, &w(2, "01111")).unwrap(),
            BigUint::from(5u32)
        );
        assert_eq!(
            legacy_sloco_index(2, &w(2, "10000")).unwrap(),
            BigUint::from(6u32)
        );
    }
}
