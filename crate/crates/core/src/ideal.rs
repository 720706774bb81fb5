//! Ideals of the ambient polynomial ring, with the operations the Frobenius
//! machinery is built from: sums, products, intersections via an elimination
//! variable, colon ideals, bracket powers, and minimal primes of monomial
//! ideals.
//!
//! An [`Ideal`] keeps its original generators and lazily caches the reduced
//! Groebner basis; the cache is write-once, so clones and concurrent readers
//! observe either nothing or the final basis.

use std::sync::{Arc, OnceLock};

use crate::error::AlgebraError;
use crate::field::Fp;
use crate::groebner::{CofactorCertificate, GroebnerBasis};
use crate::monomial::{Monomial, MonomialOrder};
use crate::parse::parse_polynomial;
use crate::poly::{PolyRing, Polynomial};

/// A finitely generated ideal of a polynomial ring over `F_p`.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb,
        }
    }
}

impl Ideal {
    /// Builds an ideal from generators; zero generators are dropped.
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Ideal {
        let gens: Vec<Polynomial> = gens
            .into_iter()
            .filter(|g| {
                assert!(*g.ring() == *ring, "generator from a different ring");
                !g.is_zero()
            })
            .collect();
        Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        }
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        let one = ring.one();
        Ideal::new(ring, vec![one])
    }

    /// Convenience constructor from expression strings.
    pub fn parse(ring: &Arc<PolyRing>, exprs: &[&str]) -> Result<Ideal, AlgebraError> {
        let gens = exprs
            .iter()
            .map(|s| parse_polynomial(ring, s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal::new(ring, gens))
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The cached reduced Groebner basis.
    pub fn groebner(&self) -> &Arc<GroebnerBasis> {
        self.gb
            .get_or_init(|| Arc::new(GroebnerBasis::compute(&self.ring, &self.gens)))
    }

    /// Canonical generators: the reduced Groebner basis.
    pub fn canonical_gens(&self) -> &[Polynomial] {
        self.groebner().basis()
    }

    /// Canonical rendering of the ideal, one string per reduced basis element.
    pub fn render_canonical(&self) -> Vec<String> {
        self.canonical_gens().iter().map(|p| p.to_string()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.groebner().normal_form(f)
    }

    pub fn contains_poly(&self, f: &Polynomial) -> bool {
        self.groebner().contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains_poly(g))
    }

    pub fn equals(&self, other: &Ideal) -> bool {
        assert!(self.ring == other.ring, "ideals from different rings");
        self.canonical_gens() == other.canonical_gens()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.canonical_gens().is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.canonical_gens().len() == 1 && self.canonical_gens()[0].is_one()
    }

    pub fn reduce_with_cofactors(&self, f: &Polynomial) -> CofactorCertificate {
        self.groebner().reduce_with_cofactors(f)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert!(self.ring == other.ring, "ideals from different rings");
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Adds the given elements one at a time, skipping any that are already
    /// contained, so the basis is rebuilt only when the ideal actually grows.
    /// Equivalent to summing with the ideal they generate, but much faster
    /// when most candidates are redundant, which is the normal situation for
    /// Frobenius-image accumulation.
    pub fn absorbing<T>(&self, extra: T) -> Ideal
    where
        T: IntoIterator<Item = Polynomial>,
    {
        let mut acc = self.clone();
        for h in extra {
            if acc.is_unit_ideal() {
                break;
            }
            if h.is_zero() || acc.contains_poly(&h) {
                continue;
            }
            let mut gens = acc.canonical_gens().to_vec();
            gens.push(h);
            acc = Ideal::new(&self.ring, gens);
        }
        acc
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        assert!(self.ring == other.ring, "ideals from different rings");
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn multiply_poly(&self, f: &Polynomial) -> Ideal {
        Ideal::new(
            &self.ring,
            self.gens.iter().map(|g| g.mul(f)).collect(),
        )
    }

    /// Bracket power `I^{[p^e]}`: generated by the `p^e`-th powers of the
    /// generators. Independent of the chosen generating set.
    pub fn frobenius_bracket(&self, e: u32) -> Ideal {
        Ideal::new(
            &self.ring,
            self.gens.iter().map(|g| g.frobenius_power(e)).collect(),
        )
    }

    /// Intersection via a fresh elimination variable `t`:
    /// `I ∩ J = (t·I + (1−t)·J) ∩ F_p[vars]`.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        assert!(self.ring == other.ring, "ideals from different rings");
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ideal::zero(&self.ring);
        }
        let (ext, var_map) = extension_ring(&self.ring);
        let t = ext.var(0);
        let one_minus_t = ext.one().sub(&t);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(g.map_to_ring(&ext, &var_map).mul(&t));
        }
        for g in &other.gens {
            gens.push(g.map_to_ring(&ext, &var_map).mul(&one_minus_t));
        }
        let gb = GroebnerBasis::compute(&ext, &gens);
        let kept: Vec<Polynomial> = gb
            .basis()
            .iter()
            .filter(|p| p.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
            .map(|p| restrict_from_extension(&self.ring, p))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// `(I : f)` for a single nonzero `f`, via `(I ∩ (f)) / f`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal, AlgebraError> {
        if f.is_zero() {
            return Err(AlgebraError::precondition("colon by the zero polynomial"));
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()]);
        let inter = self.intersect(&principal);
        let mut gens = Vec::new();
        for g in inter.gens() {
            let q = divide_exact(g, f).ok_or_else(|| {
                AlgebraError::internal("element of I ∩ (f) not divisible by f")
            })?;
            gens.push(q);
        }
        Ok(Ideal::new(&self.ring, gens))
    }

    /// `(I : J) = ∩_j (I : f_j)` over the generators of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal, AlgebraError> {
        assert!(self.ring == other.ring, "ideals from different rings");
        if other.gens.is_empty() {
            return Err(AlgebraError::precondition("colon by the zero ideal"));
        }
        let mut acc: Option<Ideal> = None;
        for f in &other.gens {
            let part = self.colon_poly(f)?;
            acc = Some(match acc {
                None => part,
                Some(prev) => prev.intersect(&part),
            });
        }
        Ok(acc.unwrap())
    }

    /// True when the canonical basis consists of monomials.
    pub fn is_monomial_ideal(&self) -> bool {
        self.canonical_gens().iter().all(|p| p.terms().len() == 1)
    }

    pub fn is_squarefree_monomial(&self) -> bool {
        self.is_monomial_ideal()
            && self
                .canonical_gens()
                .iter()
                .all(|p| p.terms()[0].0.exponents().iter().all(|&e| e <= 1))
    }

    /// Radical of a monomial ideal: square-free parts of the generators.
    pub fn monomial_radical(&self) -> Result<Ideal, AlgebraError> {
        if !self.is_monomial_ideal() {
            return Err(AlgebraError::unsupported(
                "radical is only computed for monomial ideals",
            ));
        }
        let gens = self
            .canonical_gens()
            .iter()
            .map(|p| {
                let (m, _) = p.terms()[0].clone();
                let exps: Vec<u64> = m.exponents().iter().map(|&e| e.min(1)).collect();
                self.ring.monomial(Monomial::new(exps), Fp(1))
            })
            .collect();
        Ok(Ideal::new(&self.ring, gens))
    }

    /// Minimal primes of a monomial ideal; each is generated by variables.
    /// The zero ideal has the single minimal prime `(0)`.
    pub fn minimal_primes_monomial(&self) -> Result<Vec<Ideal>, AlgebraError> {
        if !self.is_monomial_ideal() {
            return Err(AlgebraError::unsupported(
                "minimal primes are only computed for monomial ideals; declare them explicitly",
            ));
        }
        if self.is_unit_ideal() {
            return Err(AlgebraError::precondition(
                "the unit ideal has no minimal primes",
            ));
        }
        let supports: Vec<Vec<usize>> = self
            .canonical_gens()
            .iter()
            .map(|p| {
                p.terms()[0]
                    .0
                    .exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let mut covers = minimal_covers(&supports);
        covers.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        Ok(covers
            .into_iter()
            .map(|vars| {
                Ideal::new(
                    &self.ring,
                    vars.iter().map(|&i| self.ring.var(i)).collect(),
                )
            })
            .collect())
    }
}

/// All minimal variable sets hitting every support in the list.
fn minimal_covers(supports: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn rec(supports: &[Vec<usize>], chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        match supports.iter().find(|s| !s.iter().any(|v| chosen.contains(v))) {
            None => {
                let mut c = chosen.clone();
                c.sort_unstable();
                out.push(c);
            }
            Some(s) => {
                for &v in s {
                    chosen.push(v);
                    rec(supports, chosen, out);
                    chosen.pop();
                }
            }
        }
    }
    let mut raw = Vec::new();
    rec(supports, &mut Vec::new(), &mut raw);
    // Remove duplicates and non-minimal covers.
    raw.sort();
    raw.dedup();
    let minimal: Vec<Vec<usize>> = raw
        .iter()
        .filter(|c| {
            !raw.iter()
                .any(|d| d.len() < c.len() && d.iter().all(|v| c.contains(v)))
        })
        .cloned()
        .collect();
    minimal
}

/// Builds the ring `F_p[t, vars]` with a block order eliminating `t`, plus
/// the index map sending original variable `i` to `i + 1`.
fn extension_ring(ring: &Arc<PolyRing>) -> (Arc<PolyRing>, Vec<usize>) {
    let mut name = "t".to_string();
    let mut k = 0usize;
    while ring.var_index(&name).is_some() {
        name = format!("t{k}");
        k += 1;
    }
    let mut vars: Vec<&str> = vec![name.as_str()];
    let originals: Vec<String> = ring.vars().to_vec();
    vars.extend(originals.iter().map(|s| s.as_str()));
    let ext = PolyRing::new(
        ring.characteristic(),
        &vars,
        MonomialOrder::Elimination { block: 1 },
    )
    .expect("extension ring construction");
    let var_map: Vec<usize> = (0..ring.nvars()).map(|i| i + 1).collect();
    (ext, var_map)
}

/// Drops the (unused) elimination variable from a polynomial of the
/// extension ring and rebuilds it in the base ring.
fn restrict_from_extension(base: &Arc<PolyRing>, p: &Polynomial) -> Polynomial {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            debug_assert_eq!(m.exponents()[0], 0);
            (Monomial::new(m.exponents()[1..].to_vec()), *c)
        })
        .collect();
    base.from_terms(terms)
}

/// Exact polynomial division; `None` if `f` does not divide `g`.
pub fn divide_exact(g: &Polynomial, f: &Polynomial) -> Option<Polynomial> {
    assert!(!f.is_zero(), "division by zero polynomial");
    let ring = g.ring().clone();
    let field = *ring.field();
    let (fm, fc) = f.leading().unwrap();
    let fc_inv = field.inv(fc).ok()?;
    let mut work = g.clone();
    let mut q_terms: Vec<(Monomial, Fp)> = Vec::new();
    while let Some((wm, wc)) = work.leading() {
        let u = fm.divide_into(wm)?;
        let c = field.mul(wc, fc_inv);
        q_terms.push((u.clone(), c));
        work = work.sub(&f.mul_term(&u, c));
    }
    Some(ring.from_terms(q_terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u32, vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(p, vars, MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn sum_and_product() {
        let r = ring(5, &["x", "y"]);
        let a = Ideal::parse(&r, &["x"]).unwrap();
        let b = Ideal::parse(&r, &["y"]).unwrap();
        assert_eq!(a.sum(&b).render_canonical(), vec!["x", "y"]);
        assert_eq!(a.product(&b).render_canonical(), vec!["x*y"]);
    }

    #[test]
    fn equality_ignores_generating_set() {
        let r = ring(5, &["x", "y"]);
        let a = Ideal::parse(&r, &["x", "y"]).unwrap();
        let b = Ideal::parse(&r, &["x + y", "y", "x^2"]).unwrap();
        assert!(a.equals(&b));
    }

    #[test]
    fn monomial_intersection() {
        let r = ring(2, &["x", "y"]);
        let a = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let b = Ideal::parse(&r, &["y"]).unwrap();
        // (x^2, xy) ∩ (y) = (x^2 y, xy) = (xy).
        assert_eq!(a.intersect(&b).render_canonical(), vec!["x*y"]);
    }

    #[test]
    fn principal_intersection_is_lcm() {
        let r = ring(5, &["x", "y"]);
        let a = Ideal::parse(&r, &["x*y"]).unwrap();
        let b = Ideal::parse(&r, &["y^2"]).unwrap();
        assert_eq!(a.intersect(&b).render_canonical(), vec!["x*y^2"]);
    }

    #[test]
    fn colon_examples() {
        let r = ring(5, &["x", "y"]);
        // ((x^2, xy) : x) = (x, y).
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let j = Ideal::parse(&r, &["x"]).unwrap();
        assert_eq!(i.colon(&j).unwrap().render_canonical(), vec!["x", "y"]);
        // ((xy) : (x)) = (y).
        let i = Ideal::parse(&r, &["x*y"]).unwrap();
        assert_eq!(i.colon(&j).unwrap().render_canonical(), vec!["y"]);
        // Colon by the zero ideal is rejected.
        assert!(i.colon(&Ideal::zero(&r)).is_err());
    }

    #[test]
    fn colon_detects_nonzerodivisors() {
        let r = ring(5, &["x", "y"]);
        let i = Ideal::parse(&r, &["x*y"]).unwrap();
        // x is a zerodivisor mod (xy): (xy : x) = (y) != (xy).
        let by_x = i.colon(&Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        assert!(!by_x.equals(&i));
        // x + y is a nonzerodivisor mod (xy).
        let by_s = i.colon(&Ideal::parse(&r, &["x + y"]).unwrap()).unwrap();
        assert!(by_s.equals(&i));
    }

    #[test]
    fn bracket_power() {
        let r = ring(3, &["x", "y"]);
        let i = Ideal::parse(&r, &["y^2 - x^3", "x*y"]).unwrap();
        let b = i.frobenius_bracket(1);
        assert_eq!(
            b.render_canonical(),
            Ideal::parse(&r, &["y^6 - x^9", "x^3*y^3"])
                .unwrap()
                .render_canonical()
        );
    }

    #[test]
    fn minimal_primes_of_monomial_ideals() {
        let r = ring(2, &["x", "y", "z"]);
        let i = Ideal::parse(&r, &["x*y", "x*z"]).unwrap();
        let primes = i.minimal_primes_monomial().unwrap();
        let rendered: Vec<Vec<String>> =
            primes.iter().map(|p| p.render_canonical()).collect();
        assert_eq!(rendered, vec![vec!["x"], vec!["y", "z"]]);

        // Zero ideal: single minimal prime (0).
        let z = Ideal::zero(&r);
        let primes = z.minimal_primes_monomial().unwrap();
        assert_eq!(primes.len(), 1);
        assert!(primes[0].is_zero_ideal());

        // Non-monomial input is refused.
        let q = Ideal::parse(&r, &["x*y - z^2"]).unwrap();
        assert!(q.minimal_primes_monomial().is_err());
    }

    #[test]
    fn radical_of_monomial_ideal() {
        let r = ring(3, &["x", "y"]);
        let i = Ideal::parse(&r, &["x^2*y"]).unwrap();
        assert_eq!(i.monomial_radical().unwrap().render_canonical(), vec!["x*y"]);
        assert!(!i.is_squarefree_monomial());
        assert!(Ideal::parse(&r, &["x*y"]).unwrap().is_squarefree_monomial());
    }

    #[test]
    fn exact_division() {
        let r = ring(5, &["x", "y"]);
        let f = parse_polynomial(&r, "x + y").unwrap();
        let g = f.mul(&parse_polynomial(&r, "x^2 + 3*y").unwrap());
        assert_eq!(
            divide_exact(&g, &f).unwrap(),
            parse_polynomial(&r, "x^2 + 3*y").unwrap()
        );
        let h = parse_polynomial(&r, "x^2 + 1").unwrap();
        assert!(divide_exact(&h, &f).is_none());
    }
}
