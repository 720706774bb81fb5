//! Monomials as exponent vectors, together with the monomial orders used by
//! the Groebner engine.
//!
//! Three orders are provided: lexicographic, graded reverse lexicographic
//! (the default everywhere), and block elimination orders that place a prefix
//! of auxiliary variables in front. All three are total, multiplicative, and
//! have `1` as the unique minimal element, which is what Buchberger's
//! algorithm and the elimination arguments rely on.

use std::cmp::Ordering;

/// A monomial in a fixed number of variables, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u64>);

impl Monomial {
    pub fn new(exponents: Vec<u64>) -> Self {
        Monomial(exponents)
    }

    /// The monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The single variable `x_i`.
    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn pow(&self, k: u64) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|a| a.checked_mul(k).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, defined exactly when `self` divides `other`.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// True when the supports are disjoint (used by the coprime pair criterion).
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// All monomials in `nvars` variables of total degree exactly `d`.
pub fn monomials_of_total_degree(nvars: usize, d: u64) -> Vec<Monomial> {
    if nvars == 0 {
        return if d == 0 {
            vec![Monomial::new(Vec::new())]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let mut current = vec![0u64; nvars];
    fill_degree(&mut out, &mut current, 0, d);
    out
}

fn fill_degree(out: &mut Vec<Monomial>, current: &mut Vec<u64>, var: usize, remaining: u64) {
    if var + 1 == current.len() {
        current[var] = remaining;
        out.push(Monomial::new(current.clone()));
        return;
    }
    for e in 0..=remaining {
        current[var] = e;
        fill_degree(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}

/// All monomials `m` with `m_i < bounds_i` in every coordinate, in
/// lexicographic sweep order. Used to enumerate Frobenius digit boxes.
pub fn monomials_in_box(bounds: &[u64]) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u64; bounds.len()];
    fill_box(&mut out, &mut current, 0, bounds);
    out
}

fn fill_box(out: &mut Vec<Monomial>, current: &mut Vec<u64>, var: usize, bounds: &[u64]) {
    if var == bounds.len() {
        out.push(Monomial::new(current.clone()));
        return;
    }
    for e in 0..bounds[var] {
        current[var] = e;
        fill_box(out, current, var + 1, bounds);
    }
    current[var] = 0;
}

/// A monomial order on a fixed variable set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Block order eliminating the first `block` variables: compare that
    /// prefix by grevlex first, ties broken by grevlex on the rest. Any
    /// monomial involving an eliminated variable sorts above every monomial
    /// that avoids them all, which is the elimination property.
    Elimination { block: usize },
}

fn grevlex(a: &[u64], b: &[u64]) -> Ordering {
    let da: u64 = a.iter().sum();
    let db: u64 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            // Equal degree: the monomial with the smaller exponent in the
            // last variable where they differ is the larger one.
            for i in (0..a.len()).rev() {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

fn lex(a: &[u64], b: &[u64]) -> Ordering {
    for i in 0..a.len() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Lex => lex(a.exponents(), b.exponents()),
            MonomialOrder::GrevLex => grevlex(a.exponents(), b.exponents()),
            MonomialOrder::Elimination { block } => {
                let (a1, a2) = a.exponents().split_at(*block);
                let (b1, b2) = b.exponents().split_at(*block);
                grevlex(a1, b1).then_with(|| grevlex(a2, b2))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u64]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn divisibility_and_quotients() {
        assert!(m(&[1, 0]).divides(&m(&[2, 3])));
        assert!(!m(&[1, 4]).divides(&m(&[2, 3])));
        assert_eq!(m(&[1, 2]).divide_into(&m(&[3, 2])), Some(m(&[2, 0])));
        assert_eq!(m(&[2, 0]).divide_into(&m(&[1, 5])), None);
        assert_eq!(m(&[1, 2]).lcm(&m(&[3, 0])), m(&[3, 2]));
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::GrevLex;
        // Higher total degree wins.
        assert_eq!(o.cmp(&m(&[3, 0]), &m(&[1, 1])), Ordering::Greater);
        // Equal degree: x*y > z^2 in three variables would be (1,1,0) vs (0,0,2).
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 0, 2])), Ordering::Greater);
        // x^2*y > x*y^2.
        assert_eq!(o.cmp(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
    }

    #[test]
    fn lex_examples() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2]), &m(&[1, 3])), Ordering::Less);
    }

    #[test]
    fn elimination_prefers_block() {
        // One eliminated variable t in front: any power of t dominates the rest.
        let o = MonomialOrder::Elimination { block: 1 };
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 7, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 1]), &m(&[0, 1, 1])), Ordering::Greater);
    }
}
