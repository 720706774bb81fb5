//! Numerical semigroups `S = ⟨a_1, .., a_k⟩ ⊆ N` with `gcd(a_i) = 1`:
//! membership, gaps, the Frobenius number, and the conductor exponent.
//!
//! Membership is a dynamic-programming table. Rather than trusting a bound
//! on the Frobenius number, the table is grown until it ends with
//! `min(a_i)` consecutive members; from such a run onwards every integer is
//! a member (add multiples of the smallest generator), so the largest gap
//! found is exact.

use crate::error::AlgebraError;

/// A numerical semigroup with finite complement in `N`.
#[derive(Debug, Clone)]
pub struct NumericalSemigroup {
    gens: Vec<u64>,
    member: Vec<bool>,
    conductor: u64,
}

/// Everything from the conductor on is a member once a run of `min_gen`
/// consecutive members appears; cap table growth far beyond desk scale.
const TABLE_CAP: u64 = 1 << 22;

impl NumericalSemigroup {
    pub fn new(gens: &[u64]) -> Result<NumericalSemigroup, AlgebraError> {
        if gens.is_empty() {
            return Err(AlgebraError::precondition(
                "numerical semigroup needs at least one generator",
            ));
        }
        if gens.iter().any(|&g| g == 0) {
            return Err(AlgebraError::precondition(
                "numerical semigroup generators must be positive",
            ));
        }
        let g = gens.iter().fold(0u64, |a, &b| gcd(a, b));
        if g != 1 {
            return Err(AlgebraError::precondition(format!(
                "numerical semigroup generators have gcd {g}, expected 1",
            )));
        }
        let mut sorted: Vec<u64> = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let min = sorted[0];

        let mut bound = (min * sorted[sorted.len() - 1]).max(min) + 1;
        loop {
            let member = membership_table(&sorted, bound);
            if let Some(c) = conductor_from_table(&member, min) {
                return Ok(NumericalSemigroup {
                    gens: sorted,
                    member,
                    conductor: c,
                });
            }
            bound *= 2;
            if bound > TABLE_CAP {
                return Err(AlgebraError::internal(
                    "numerical semigroup table exceeded its cap",
                ));
            }
        }
    }

    pub fn gens(&self) -> &[u64] {
        &self.gens
    }

    pub fn contains(&self, n: u64) -> bool {
        if n >= self.conductor {
            return true;
        }
        self.member[n as usize]
    }

    /// All gaps (non-members), in increasing order.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor).filter(|&n| !self.contains(n)).collect()
    }

    /// The largest gap; `None` when the semigroup is all of `N`.
    pub fn frobenius_number(&self) -> Option<u64> {
        self.gaps().last().copied()
    }

    /// The smallest `c` with `c + N ⊆ S`; zero when the semigroup is `N`.
    pub fn conductor_exponent(&self) -> u64 {
        self.conductor
    }

    /// A representation `n = Σ c_i·a_i` as the exponent vector `(c_i)`,
    /// `None` for gaps. Deterministic: greedy on parent pointers that prefer
    /// the smallest usable generator.
    pub fn representation(&self, n: u64) -> Option<Vec<u64>> {
        if !self.contains(n) {
            return None;
        }
        let size = (n + 1) as usize;
        // parent[m] = index of the generator used to reach m, if reachable.
        let mut parent: Vec<Option<usize>> = vec![None; size];
        let mut reachable = vec![false; size];
        reachable[0] = true;
        for m in 1..size {
            for (gi, &gen) in self.gens.iter().enumerate() {
                let g = gen as usize;
                if m >= g && reachable[m - g] {
                    reachable[m] = true;
                    parent[m] = Some(gi);
                    break;
                }
            }
        }
        debug_assert!(reachable[n as usize]);
        let mut counts = vec![0u64; self.gens.len()];
        let mut m = n as usize;
        while m > 0 {
            let gi = parent[m].expect("reachable chain is complete");
            counts[gi] += 1;
            m -= self.gens[gi] as usize;
        }
        Some(counts)
    }
}

fn membership_table(gens: &[u64], bound: u64) -> Vec<bool> {
    let size = (bound + 1) as usize;
    let mut member = vec![false; size];
    member[0] = true;
    for m in 1..size {
        member[m] = gens
            .iter()
            .any(|&g| m >= g as usize && member[m - g as usize]);
    }
    member
}

/// The conductor, provided the table is long enough to certify it: returns
/// the position after the last gap once the table ends with `min_gen`
/// consecutive members.
fn conductor_from_table(member: &[bool], min_gen: u64) -> Option<u64> {
    let run_needed = min_gen as usize;
    let n = member.len();
    if n < run_needed || member[n - run_needed..].iter().any(|&m| !m) {
        return None;
    }
    let last_gap = member.iter().rposition(|&m| !m);
    Some(match last_gap {
        None => 0,
        Some(g) => (g + 1) as u64,
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_three() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(s.gaps(), vec![1]);
        assert_eq!(s.frobenius_number(), Some(1));
        assert_eq!(s.conductor_exponent(), 2);
        assert!(s.contains(0));
        assert!(!s.contains(1));
        assert!(s.contains(2));
    }

    #[test]
    fn three_four_five() {
        let s = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        assert_eq!(s.gaps(), vec![1, 2]);
        assert_eq!(s.frobenius_number(), Some(2));
        assert_eq!(s.conductor_exponent(), 3);
    }

    #[test]
    fn three_five() {
        let s = NumericalSemigroup::new(&[3, 5]).unwrap();
        assert_eq!(s.gaps(), vec![1, 2, 4, 7]);
        assert_eq!(s.conductor_exponent(), 8);
    }

    #[test]
    fn no_coprime_pair() {
        let s = NumericalSemigroup::new(&[6, 10, 15]).unwrap();
        assert_eq!(s.frobenius_number(), Some(29));
        assert_eq!(s.conductor_exponent(), 30);
    }

    #[test]
    fn whole_naturals() {
        let s = NumericalSemigroup::new(&[1]).unwrap();
        assert!(s.gaps().is_empty());
        assert_eq!(s.frobenius_number(), None);
        assert_eq!(s.conductor_exponent(), 0);
    }

    #[test]
    fn bad_generators() {
        assert!(NumericalSemigroup::new(&[]).is_err());
        assert!(NumericalSemigroup::new(&[0, 3]).is_err());
        assert!(NumericalSemigroup::new(&[4, 6]).is_err());
    }

    #[test]
    fn representations() {
        let s = NumericalSemigroup::new(&[3, 5]).unwrap();
        assert_eq!(s.representation(8), Some(vec![1, 1]));
        assert_eq!(s.representation(7), None);
        assert_eq!(s.representation(0), Some(vec![0, 0]));
        let r = s.representation(21).unwrap();
        assert_eq!(3 * r[0] + 5 * r[1], 21);
    }
}
