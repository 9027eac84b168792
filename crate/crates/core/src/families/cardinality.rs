use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::Family;
use crate::error::{LocoError, Result};

/// Exact cardinalities `N(i)` for `i` from the family's smallest defined
/// index up to some maximum. Values below `i = 1` are the boundary values
/// that make the recursion and the index rules hold uniformly; several of
/// them are fractions.
#[derive(Debug, Clone)]
pub struct CardinalityTable {
    family: Family,
    min_index: i64,
    values: Vec<BigRational>,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl CardinalityTable {
    pub fn build(family: Family, max_index: i64) -> Result<Self> {
        let (min_index, seed): (i64, Vec<BigRational>) = match family {
            Family::LoRll { d } => (-(d as i64), vec![int(1); d as usize + 1]),
            Family::SLoco { x } => (1 - x as i64, vec![int(2); x as usize + 1]),
            Family::Os => (-2, vec![frac(1, 36), frac(1, 6), int(1), int(8)]),
            Family::Op => (0, vec![int(2), int(8)]),
            Family::Ns => (-1, vec![frac(1, 3), int(1), int(4)]),
            Family::Np => (0, vec![int(2), int(4)]),
        };
        if max_index < min_index {
            return Err(LocoError::LengthOutOfRange {
                family: family.to_string(),
                m: max_index,
            });
        }
        let mut values = seed;
        let at = |v: &[BigRational], i: i64| v[(i - min_index) as usize].clone();
        let mut i = min_index + values.len() as i64;
        while i <= max_index {
            let n = match family {
                Family::LoRll { d } => at(&values, i - 1) + at(&values, i - d as i64 - 1),
                Family::SLoco { x } => at(&values, i - 1) + at(&values, i - x as i64 - 1),
                Family::Os => {
                    int(8) * at(&values, i - 1) - at(&values, i - 2) + int(6) * at(&values, i - 3)
                }
                Family::Op => int(7) * at(&values, i - 1) + int(4) * at(&values, i - 2),
                Family::Ns => {
                    int(4) * at(&values, i - 1) - at(&values, i - 2) + int(3) * at(&values, i - 3)
                }
                Family::Np => int(3) * at(&values, i - 1) + int(2) * at(&values, i - 2),
            };
            values.push(n);
            i += 1;
        }
        values.truncate((max_index - min_index + 1) as usize);
        Ok(Self {
            family,
            min_index,
            values,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn min_index(&self) -> i64 {
        self.min_index
    }

    pub fn max_index(&self) -> i64 {
        self.min_index + self.values.len() as i64 - 1
    }

    pub fn get(&self, i: i64) -> Result<&BigRational> {
        if i < self.min_index || i > self.max_index() {
            return Err(LocoError::LengthOutOfRange {
                family: self.family.to_string(),
                m: i,
            });
        }
        Ok(&self.values[(i - self.min_index) as usize])
    }

    /// `N(m)` for an actual code length, checked to be a non-negative integer.
    pub fn count(&self, m: usize) -> Result<BigUint> {
        let v = self.get(m as i64)?;
        if !v.is_integer() || v.is_negative() {
            return Err(LocoError::NonIntegral { position: m });
        }
        Ok(v.to_integer().magnitude().clone())
    }

    /// Least common multiple of the denominators in the table.
    pub(crate) fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.values
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
    }

    pub(crate) fn values(&self) -> &[BigRational] {
        &self.values
    }
}

/// `N(m)` as an exact rational; fractional only for boundary indices.
pub fn cardinality(family: Family, m: i64) -> Result<BigRational> {
    let t = CardinalityTable::build(family, m.max(1))?;
    t.get(m).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(f: Family, ms: std::ops::RangeInclusive<i64>) -> Vec<String> {
        ms.map(|m| cardinality(f, m).unwrap().to_string()).collect()
    }

    #[test]
    fn boundary_values() {
        assert_eq!(cardinality(Family::Os, -2).unwrap(), frac(1, 36));
        assert_eq!(cardinality(Family::Ns, -1).unwrap(), frac(1, 3));
        assert!(cardinality(Family::Os, -3).is_err());
        assert_eq!(row(Family::SLoco { x: 2 }, -1..=1), ["2", "2", "2"]);
    }

    #[test]
    fn small_lengths_are_unconstrained() {
        assert_eq!(row(Family::Os, 1..=2), ["8", "64"]);
        assert_eq!(row(Family::Op, 1..=2), ["8", "64"]);
        assert_eq!(row(Family::Ns, 1..=3), ["4", "16", "63"]);
        assert_eq!(row(Family::Np, 1..=2), ["4", "16"]);
    }
}
