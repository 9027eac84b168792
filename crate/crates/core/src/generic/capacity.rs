use super::ConstraintAutomaton;
use crate::error::{LocoError, Result};

pub const DEFAULT_CAPACITY_TOL: f64 = 1e-10;
pub const MAX_POWER_ITERATIONS: usize = 1_000_000;

/// Capacity in bits per symbol and normalized by `log2 q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Capacity {
    pub spectral_radius: f64,
    pub bits: f64,
    pub normalized: f64,
}

impl ConstraintAutomaton {
    /// States that are reachable from the start and can be extended forever.
    pub fn trimmed_states(&self) -> Vec<usize> {
        let n = self.num_states();
        let q = self.alphabet().size();
        let mut alive = vec![false; n];
        let mut stack = vec![self.start()];
        alive[self.start()] = true;
        while let Some(s) = stack.pop() {
            for c in 0..q {
                if let Some(t) = self.next(s, c) {
                    if !alive[t] {
                        alive[t] = true;
                        stack.push(t);
                    }
                }
            }
        }
        loop {
            let mut changed = false;
            for s in 0..n {
                if alive[s] && !(0..q).any(|c| self.next(s, c).is_some_and(|t| alive[t])) {
                    alive[s] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        (0..n).filter(|&s| alive[s]).collect()
    }

    /// Transition-count matrix over the trimmed states.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u32>> {
        let states = self.trimmed_states();
        let mut pos = vec![usize::MAX; self.num_states()];
        for (k, &s) in states.iter().enumerate() {
            pos[s] = k;
        }
        states
            .iter()
            .map(|&s| {
                let mut row = vec![0u32; states.len()];
                for c in 0..self.alphabet().size() {
                    if let Some(t) = self.next(s, c) {
                        if pos[t] != usize::MAX {
                            row[pos[t]] += 1;
                        }
                    }
                }
                row
            })
            .collect()
    }

    pub fn capacity(&self) -> Result<Capacity> {
        self.capacity_with_tol(DEFAULT_CAPACITY_TOL)
    }

    /// Power iteration on `A + I` (aperiodic, same Perron vector) from the
    /// all-ones vector; the shift is removed at the end.
    pub fn capacity_with_tol(&self, tol: f64) -> Result<Capacity> {
        let a = self.adjacency_matrix();
        if a.is_empty() {
            return Err(LocoError::DegenerateConstraint);
        }
        let n = a.len();
        let adj: Vec<Vec<(usize, f64)>> = a
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &v)| v > 0)
                    .map(|(j, &v)| (j, f64::from(v)))
                    .collect()
            })
            .collect();

        let mut v = vec![1.0f64; n];
        let mut lambda = 0.0f64;
        for _ in 0..MAX_POWER_ITERATIONS {
            let mut next: Vec<f64> = (0..n)
                .map(|i| v[i] + adj[i].iter().map(|&(j, w)| w * v[j]).sum::<f64>())
                .collect();
            let norm = next.iter().cloned().fold(0.0, f64::max);
            for x in &mut next {
                *x /= norm;
            }
            let shift = next
                .iter()
                .zip(&v)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            let done = (norm - lambda).abs() <= tol * norm && shift <= tol;
            lambda = norm;
            v = next;
            if done {
                let rho = lambda - 1.0;
                let bits = rho.log2();
                let q = f64::from(self.alphabet().size());
                return Ok(Capacity {
                    spectral_radius: rho,
                    bits,
                    normalized: bits / q.log2(),
                });
            }
        }
        Err(LocoError::NotConverged(MAX_POWER_ITERATIONS))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::generic::ForbiddenSet;

    #[test]
    fn unconstrained_is_log_q() {
        for q in [2u32, 4, 8] {
            let set = ForbiddenSet::unconstrained(Alphabet::new(q).unwrap());
            let c = ConstraintAutomaton::build(&set).capacity().unwrap();
            assert!((c.bits - f64::from(q).log2()).abs() < 1e-9);
            assert!((c.normalized - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn golden_ratio() {
        let set = ForbiddenSet::new(Alphabet::binary(), vec![vec![1, 1]]).unwrap();
        let c = ConstraintAutomaton::build(&set).capacity().unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((c.spectral_radius - phi).abs() < 1e-8);
    }

    #[test]
    fn degenerate() {
        let set = ForbiddenSet::new(Alphabet::binary(), vec![vec![0], vec![1]]).unwrap();
        assert_eq!(
            ConstraintAutomaton::build(&set).capacity(),
            Err(LocoError::DegenerateConstraint)
        );
    }
}
