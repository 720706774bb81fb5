//! Multivariate polynomials over `F_p` with a fixed ambient ring context.
//!
//! A [`PolyRing`] fixes the characteristic, the variable names and the
//! monomial order; a [`Polynomial`] stores its terms sorted descending in
//! that order with no zero coefficients, so structural equality is semantic
//! equality and rendering is canonical. All binary operations require both
//! operands to live in the same ambient ring (checked, panics otherwise:
//! mixing rings is a programming error, and cross-ring moves are done
//! explicitly via [`Polynomial::map_to_ring`]).

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::field::{Fp, PrimeField};
use crate::monomial::{Monomial, MonomialOrder};

/// Ambient polynomial ring `F_p[vars]` with a monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new(p: u32, vars: &[&str], order: MonomialOrder) -> Result<Arc<Self>, AlgebraError> {
        let field = PrimeField::new(p)?;
        if vars.is_empty() {
            return Err(AlgebraError::precondition("at least one variable required"));
        }
        let mut seen = std::collections::BTreeSet::new();
        for v in vars {
            if !valid_identifier(v) {
                return Err(AlgebraError::precondition(format!(
                    "invalid variable name {v:?}"
                )));
            }
            if !seen.insert(v.to_string()) {
                return Err(AlgebraError::precondition(format!(
                    "duplicate variable name {v:?}"
                )));
            }
        }
        if let MonomialOrder::Elimination { block } = order {
            if block == 0 || block >= vars.len() {
                return Err(AlgebraError::precondition(
                    "elimination block must be a proper nonempty prefix",
                ));
            }
        }
        Ok(Arc::new(PolyRing {
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            order,
        }))
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(self: &Arc<Self>, n: i64) -> Polynomial {
        let c = self.field.elt(n);
        let terms = if c.0 == 0 {
            Vec::new()
        } else {
            vec![(Monomial::one(self.nvars()), c)]
        };
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial {
        assert!(i < self.nvars(), "variable index out of range");
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::var(i, self.nvars()), self.field.one())],
        }
    }

    pub fn monomial(self: &Arc<Self>, m: Monomial, c: Fp) -> Polynomial {
        assert_eq!(m.nvars(), self.nvars(), "monomial arity mismatch");
        let terms = if c.0 == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms(self: &Arc<Self>, terms: Vec<(Monomial, Fp)>) -> Polynomial {
        let mut acc: HashMap<Monomial, Fp> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), self.nvars(), "monomial arity mismatch");
            let e = acc.entry(m).or_insert(Fp(0));
            *e = self.field.add(*e, c);
        }
        let mut out: Vec<(Monomial, Fp)> = acc.into_iter().filter(|(_, c)| c.0 != 0).collect();
        out.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        Polynomial {
            ring: self.clone(),
            terms: out,
        }
    }

    /// Same ring with a different monomial order (used for elimination).
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>, AlgebraError> {
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        PolyRing::new(self.characteristic(), &vars, order)
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 1 {
                parts.push(self.vars[i].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", self.vars[i], e));
            }
        }
        parts.join("*")
    }
}

/// A polynomial in a fixed [`PolyRing`]; terms are sorted descending in the
/// ring's monomial order and never carry a zero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Fp)>,
}

impl Polynomial {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Fp)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 .0 == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Leading term in the ring's order; `None` for the zero polynomial.
    pub fn leading(&self) -> Option<(&Monomial, Fp)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(
            *self.ring == *other.ring,
            "mismatched ambient rings: {:?} vs {:?}",
            self.ring.vars(),
            other.ring.vars()
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match order.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(self.terms[i].1, other.terms[j].1);
                    if c.0 != 0 {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(*c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    /// Multiplication by a single term, preserving sortedness.
    pub fn mul_term(&self, m: &Monomial, c: Fp) -> Polynomial {
        let field = self.ring.field();
        if c.0 == 0 {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), field.mul(*tc, c)))
                .filter(|(_, tc)| tc.0 != 0)
                .collect(),
        }
    }

    pub fn scale(&self, c: Fp) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let field = self.ring.field();
        let mut acc: HashMap<Monomial, Fp> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let e = acc.entry(m).or_insert(Fp(0));
                *e = field.add(*e, field.mul(*ca, *cb));
            }
        }
        self.ring.from_terms(acc.into_iter().collect())
    }

    pub fn pow(&self, k: u64) -> Polynomial {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `p^e`-th power. Coefficients are fixed by Frobenius on the prime
    /// field, so this just scales every exponent vector by `q = p^e`.
    pub fn frobenius_power(&self, e: u32) -> Polynomial {
        let q = frobenius_exponent(self.ring.characteristic(), e);
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.pow(q), *c))
                .collect(),
        }
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let field = self.ring.field();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let c2 = field.mul(*c, field.from_u64(e));
            if c2.0 == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            terms.push((Monomial::new(exps), c2));
        }
        self.ring.from_terms(terms)
    }

    /// Transplants the polynomial into another ring with at least as many
    /// variables; `var_map[i]` is the index of variable `i` in the target.
    /// Requires equal characteristics.
    pub fn map_to_ring(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> Polynomial {
        assert_eq!(
            self.ring.characteristic(),
            target.characteristic(),
            "characteristic mismatch"
        );
        assert_eq!(var_map.len(), self.ring.nvars());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u64; target.nvars()];
                for (i, &e) in m.exponents().iter().enumerate() {
                    exps[var_map[i]] = e;
                }
                (Monomial::new(exps), *c)
            })
            .collect();
        target.from_terms(terms)
    }

    /// Substitutes `var_i -> t^{weights[i]}` and returns the image in the
    /// given univariate ring (used to validate semigroup presentations).
    pub fn eval_powers(&self, t_ring: &Arc<PolyRing>, weights: &[u64]) -> Polynomial {
        assert_eq!(t_ring.nvars(), 1);
        assert_eq!(weights.len(), self.ring.nvars());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let deg: u64 = m
                    .exponents()
                    .iter()
                    .zip(weights)
                    .map(|(e, w)| e.checked_mul(*w).expect("exponent overflow"))
                    .sum();
                (Monomial::new(vec![deg]), *c)
            })
            .collect();
        t_ring.from_terms(terms)
    }
}

/// `p^e` as a u64, with an overflow check.
pub fn frobenius_exponent(p: u32, e: u32) -> u64 {
    (p as u64)
        .checked_pow(e)
        .expect("p^e exceeds machine range")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    format!("{}", c.0)
                } else if c.0 == 1 {
                    self.ring.render_monomial(m)
                } else {
                    format!("{}*{}", c.0, self.ring.render_monomial(m))
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u32) -> Arc<PolyRing> {
        PolyRing::new(p, &["x", "y"], MonomialOrder::GrevLex).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        crate::parse::parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn add_cancels_in_char_2() {
        let r = ring(2);
        let f = p(&r, "x + y");
        assert!(f.add(&f).is_zero());
    }

    #[test]
    fn product_expands() {
        let r = ring(3);
        let f = p(&r, "x + y");
        let g = p(&r, "x + 2*y");
        // (x+y)(x+2y) = x^2 + 3xy + 2y^2 = x^2 + 2y^2 mod 3.
        assert_eq!(f.mul(&g), p(&r, "x^2 + 2*y^2"));
    }

    #[test]
    fn frobenius_power_matches_repeated_multiplication() {
        let r = ring(3);
        let f = p(&r, "y^2 + 2*x^3");
        let direct = f.frobenius_power(1);
        assert_eq!(direct, p(&r, "y^6 + 2*x^9"));
        assert_eq!(direct, f.mul(&f).mul(&f));
    }

    #[test]
    fn derivative_drops_multiples_of_p() {
        let r = ring(3);
        let f = p(&r, "y^2 + 2*x^3");
        // d/dx (2x^3) = 6x^2 = 0 mod 3.
        assert!(f.derivative(0).is_zero());
        assert_eq!(f.derivative(1), p(&r, "2*y"));
    }

    #[test]
    fn canonical_rendering_sorts_descending() {
        let r = ring(5);
        let f = p(&r, "y^2 - x^3");
        // Monic-from-parse is not applied; -1 = 4 and x^3 has higher degree.
        assert_eq!(f.to_string(), "4*x^3 + y^2");
    }

    #[test]
    fn display_roundtrips_through_parser() {
        let r = ring(5);
        for s in ["0", "1", "4*x^3 + y^2", "x*y + 3", "2*x^2*y^5 + x + 4"] {
            let f = p(&r, s);
            assert_eq!(f.to_string(), s);
            assert_eq!(p(&r, &f.to_string()), f);
        }
    }

    #[test]
    #[should_panic(expected = "mismatched ambient rings")]
    fn mixing_rings_panics() {
        let r1 = ring(3);
        let r2 = PolyRing::new(3, &["u", "v"], MonomialOrder::GrevLex).unwrap();
        let _ = p(&r1, "x").add(&p(&r2, "u"));
    }

    #[test]
    fn eval_powers_detects_semigroup_relations() {
        let r = PolyRing::new(2, &["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let t = PolyRing::new(2, &["t"], MonomialOrder::GrevLex).unwrap();
        let f = crate::parse::parse_polynomial(&r, "y^2 - x*z").unwrap();
        // x -> t^3, y -> t^4, z -> t^5: y^2 - xz = t^8 - t^8 = 0.
        assert!(f.eval_powers(&t, &[3, 4, 5]).is_zero());
    }
}
