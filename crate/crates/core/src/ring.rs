//! Presentations of quotient rings `R = F_p[x_1..x_n] / I`.
//!
//! A [`RingPresentation`] bundles the ambient polynomial ring with the
//! defining ideal and optional declared data (minimal primes, a numerical
//! semigroup interpretation, a preferred test element, a reducedness claim).
//! Ideals of `R` are always represented by their full preimages `J + I` in
//! the ambient ring, so equality and membership mod `I` reduce to Groebner
//! computations upstairs.
//!
//! The Frobenius colon ideals `(I^{[p^e]} : I)`, which classify the
//! `p^{-e}`-linear endomorphisms of `R`, are cached per exponent because
//! every trace and interior computation re-uses them.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::AlgebraError;
use crate::ideal::Ideal;
use crate::monomial::MonomialOrder;
use crate::poly::{frobenius_exponent, PolyRing, Polynomial};

/// How an element sits relative to the defining ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementClass {
    /// The element lies in the defining ideal.
    Zero,
    /// Nonzero in the quotient but kills a nonzero element.
    Zerodivisor,
    /// A nonzerodivisor on the quotient ring.
    Nonzerodivisor,
}

/// A quotient ring `F_p[vars] / I` with optional declared structure.
#[derive(Debug)]
pub struct RingPresentation {
    ambient: Arc<PolyRing>,
    defining: Ideal,
    declared_reduced: Option<bool>,
    declared_min_primes: Option<Vec<Ideal>>,
    semigroup: Option<Vec<u64>>,
    declared_test_element: Option<Polynomial>,
    fedder_cache: Mutex<HashMap<u32, Arc<Ideal>>>,
    radical_cache: OnceLock<Option<Ideal>>,
}

impl RingPresentation {
    pub fn new(ambient: Arc<PolyRing>, defining: Ideal) -> Result<RingPresentation, AlgebraError> {
        assert!(
            *defining.ring() == ambient,
            "defining ideal from a different ring"
        );
        if defining.is_unit_ideal() {
            return Err(AlgebraError::precondition(
                "defining ideal is the unit ideal; the quotient ring is zero",
            ));
        }
        Ok(RingPresentation {
            ambient,
            defining,
            declared_reduced: None,
            declared_min_primes: None,
            semigroup: None,
            declared_test_element: None,
            fedder_cache: Mutex::new(HashMap::new()),
            radical_cache: OnceLock::new(),
        })
    }

    /// Declares the minimal primes of the quotient. Each must contain the
    /// defining ideal; this is validated, primality is trusted.
    pub fn with_declared_min_primes(
        mut self,
        primes: Vec<Ideal>,
    ) -> Result<RingPresentation, AlgebraError> {
        if primes.is_empty() {
            return Err(AlgebraError::precondition(
                "declared minimal prime list is empty",
            ));
        }
        for p in &primes {
            if !p.contains_ideal(&self.defining) {
                return Err(AlgebraError::precondition(format!(
                    "declared minimal prime ({}) does not contain the defining ideal",
                    p.render_canonical().join(", ")
                )));
            }
            if p.is_unit_ideal() {
                return Err(AlgebraError::precondition(
                    "declared minimal prime is the unit ideal",
                ));
            }
        }
        self.declared_min_primes = Some(primes);
        Ok(self)
    }

    /// Declares a reducedness claim. When the defining ideal is monomial the
    /// claim is checked exactly and a contradiction is an error.
    pub fn with_reduced_claim(mut self, reduced: bool) -> Result<RingPresentation, AlgebraError> {
        if self.defining.is_monomial_ideal() {
            let actual = self
                .defining
                .monomial_radical()?
                .equals(&self.defining);
            if actual != reduced {
                return Err(AlgebraError::precondition(format!(
                    "reducedness claim ({reduced}) contradicts the monomial defining ideal",
                )));
            }
        }
        self.declared_reduced = Some(reduced);
        Ok(self)
    }

    /// Declares a numerical semigroup interpretation: variable `x_i` maps to
    /// `t^{a_i}` in `F_p[t]`. Validated by: positive weights, gcd one, one
    /// weight per variable, and every defining generator vanishing under the
    /// substitution.
    pub fn with_semigroup(mut self, weights: Vec<u64>) -> Result<RingPresentation, AlgebraError> {
        if weights.len() != self.ambient.nvars() {
            return Err(AlgebraError::precondition(format!(
                "semigroup weight count {} does not match variable count {}",
                weights.len(),
                self.ambient.nvars()
            )));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(AlgebraError::precondition("semigroup weights must be positive"));
        }
        let g = weights.iter().fold(0u64, |a, &b| gcd(a, b));
        if g != 1 {
            return Err(AlgebraError::precondition(format!(
                "semigroup weights have gcd {g}, expected 1"
            )));
        }
        let t_ring = PolyRing::new(
            self.ambient.characteristic(),
            &["t"],
            MonomialOrder::Lex,
        )?;
        for gen in self.defining.gens() {
            let image = gen.eval_powers(&t_ring, &weights);
            if !image.is_zero() {
                return Err(AlgebraError::precondition(format!(
                    "defining generator {gen} does not vanish under the semigroup substitution",
                )));
            }
        }
        self.semigroup = Some(weights);
        Ok(self)
    }

    /// Declares a preferred test element (must be nonzero in the quotient).
    pub fn with_test_element(mut self, c: Polynomial) -> Result<RingPresentation, AlgebraError> {
        if self.defining.contains_poly(&c) {
            return Err(AlgebraError::precondition(format!(
                "declared test element {c} is zero in the quotient",
            )));
        }
        self.declared_test_element = Some(c);
        Ok(self)
    }

    pub fn ambient(&self) -> &Arc<PolyRing> {
        &self.ambient
    }

    pub fn defining(&self) -> &Ideal {
        &self.defining
    }

    pub fn characteristic(&self) -> u32 {
        self.ambient.characteristic()
    }

    pub fn semigroup(&self) -> Option<&[u64]> {
        self.semigroup.as_deref()
    }

    pub fn declared_test_element(&self) -> Option<&Polynomial> {
        self.declared_test_element.as_ref()
    }

    /// Full ambient preimage `J + I` of the ideal generated by `J` in the
    /// quotient.
    pub fn lift(&self, j: &Ideal) -> Ideal {
        j.sum(&self.defining)
    }

    /// Equality of ideals of the quotient, both given by ambient generators.
    pub fn equals_mod(&self, a: &Ideal, b: &Ideal) -> bool {
        self.lift(a).equals(&self.lift(b))
    }

    pub fn contains_mod(&self, j: &Ideal, f: &Polynomial) -> bool {
        self.lift(j).contains_poly(f)
    }

    pub fn is_zero_mod(&self, j: &Ideal) -> bool {
        self.defining.contains_ideal(j)
    }

    /// Canonical generator strings for the ideal `J·R`, read off the reduced
    /// basis of `J + I`.
    pub fn render_ideal(&self, j: &Ideal) -> Vec<String> {
        self.lift(j).render_canonical()
    }

    pub fn classify_element(&self, c: &Polynomial) -> Result<ElementClass, AlgebraError> {
        if self.defining.contains_poly(c) {
            return Ok(ElementClass::Zero);
        }
        if self.defining.is_zero_ideal() {
            return Ok(ElementClass::Nonzerodivisor);
        }
        let colon = self.defining.colon_poly(c)?;
        if colon.equals(&self.defining) {
            Ok(ElementClass::Nonzerodivisor)
        } else {
            Ok(ElementClass::Zerodivisor)
        }
    }

    pub fn is_nonzerodivisor(&self, c: &Polynomial) -> Result<bool, AlgebraError> {
        Ok(self.classify_element(c)? == ElementClass::Nonzerodivisor)
    }

    /// Minimal primes of the quotient as ambient ideals containing `I`.
    /// Computed exactly for monomial defining ideals (and the zero ideal);
    /// otherwise falls back to the declared list.
    pub fn minimal_primes(&self) -> Result<Vec<Ideal>, AlgebraError> {
        if let Some(primes) = &self.declared_min_primes {
            return Ok(primes.clone());
        }
        if self.defining.is_monomial_ideal() {
            return self.defining.minimal_primes_monomial();
        }
        Err(AlgebraError::unsupported(
            "minimal primes are only computed for monomial defining ideals; \
             declare them in the ring description",
        ))
    }

    /// The radical of the defining ideal, when determinable: computed for
    /// monomial ideals, otherwise intersected from declared minimal primes.
    pub fn radical_of_defining(&self) -> Result<Ideal, AlgebraError> {
        let cached = self.radical_cache.get_or_init(|| {
            if self.defining.is_monomial_ideal() {
                return self.defining.monomial_radical().ok();
            }
            if let Some(primes) = &self.declared_min_primes {
                let mut acc: Option<Ideal> = None;
                for p in primes {
                    acc = Some(match acc {
                        None => p.clone(),
                        Some(prev) => prev.intersect(p),
                    });
                }
                return acc;
            }
            None
        });
        cached.clone().ok_or_else(|| {
            AlgebraError::unsupported(
                "radical is only available for monomial defining ideals or \
                 rings with declared minimal primes",
            )
        })
    }

    /// Whether the quotient is reduced, when determinable.
    pub fn is_reduced(&self) -> Result<bool, AlgebraError> {
        if let Ok(rad) = self.radical_of_defining() {
            return Ok(rad.equals(&self.defining));
        }
        if let Some(claim) = self.declared_reduced {
            return Ok(claim);
        }
        Err(AlgebraError::unsupported(
            "reducedness is undeterminable; declare `reduced = true|false` in the ring description",
        ))
    }

    /// Whether `c` avoids every minimal prime of the quotient (lies in the
    /// complement of the union of minimal primes). Falls back to the
    /// nonzerodivisor test, which is sufficient, when minimal primes are
    /// unknown.
    pub fn avoids_minimal_primes(&self, c: &Polynomial) -> Result<bool, AlgebraError> {
        match self.minimal_primes() {
            Ok(primes) => Ok(primes.iter().all(|p| !p.contains_poly(c))),
            Err(_) => {
                if self.is_nonzerodivisor(c)? {
                    Ok(true)
                } else {
                    Err(AlgebraError::unsupported(
                        "cannot decide membership in the complement of the minimal primes; \
                         declare minimal primes in the ring description",
                    ))
                }
            }
        }
    }

    /// `(I^{[p^e]} : I)`, the multiplier ideal of `p^{-e}`-linear maps on the
    /// quotient; cached per exponent. For principal `I = (f)` this is exactly
    /// `(f^{p^e - 1})` because the ambient ring is a domain.
    pub fn fedder_colon(&self, e: u32) -> Result<Arc<Ideal>, AlgebraError> {
        if e == 0 {
            return Err(AlgebraError::precondition(
                "Frobenius colon requires a positive exponent",
            ));
        }
        if let Some(hit) = self.fedder_cache.lock().unwrap().get(&e) {
            return Ok(hit.clone());
        }
        let q = frobenius_exponent(self.characteristic(), e);
        let result = if self.defining.is_zero_ideal() {
            Ideal::unit(&self.ambient)
        } else if self.defining.canonical_gens().len() == 1 {
            let f = self.defining.canonical_gens()[0].clone();
            Ideal::new(&self.ambient, vec![f.pow(q - 1)])
        } else {
            self.defining.frobenius_bracket(e).colon(&self.defining)?
        };
        let arc = Arc::new(result);
        self.fedder_cache
            .lock()
            .unwrap()
            .insert(e, arc.clone());
        Ok(arc)
    }

    /// Quotient by additional relations: `R / (extra·R)` presented as
    /// `F_p[vars] / (I + extra)`. Declared structure is not inherited.
    pub fn quotient_by(&self, extra: &Ideal) -> Result<RingPresentation, AlgebraError> {
        RingPresentation::new(self.ambient.clone(), self.defining.sum(extra))
    }

    /// Localization at `f`: builds `R_f = F_p[vars, u] / (I, u·f - 1)` with
    /// a fresh inverse variable appended. Returns the presentation, the map
    /// of original variable indices, and the index of the inverse variable.
    pub fn localization(
        &self,
        f: &Polynomial,
    ) -> Result<(RingPresentation, Vec<usize>, usize), AlgebraError> {
        if self.defining.contains_poly(f) {
            return Err(AlgebraError::precondition(
                "cannot localize at an element that is zero in the quotient",
            ));
        }
        let mut inv_name = "u".to_string();
        let mut k = 0usize;
        while self.ambient.var_index(&inv_name).is_some() {
            inv_name = format!("u{k}");
            k += 1;
        }
        let mut vars: Vec<&str> = self.ambient.vars().iter().map(|s| s.as_str()).collect();
        vars.push(&inv_name);
        let ext = PolyRing::new(self.characteristic(), &vars, self.ambient.order())?;
        let var_map: Vec<usize> = (0..self.ambient.nvars()).collect();
        let t_index = ext.nvars() - 1;
        let mut gens: Vec<Polynomial> = self
            .defining
            .gens()
            .iter()
            .map(|g| g.map_to_ring(&ext, &var_map))
            .collect();
        let relation = ext
            .var(t_index)
            .mul(&f.map_to_ring(&ext, &var_map))
            .sub(&ext.one());
        gens.push(relation);
        let defining = Ideal::new(&ext, gens);
        if defining.is_unit_ideal() {
            return Err(AlgebraError::precondition(
                "localization is the zero ring; the element is nilpotent",
            ));
        }
        let presentation = RingPresentation::new(ext, defining)?;
        Ok((presentation, var_map, t_index))
    }
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
    use crate::parse::parse_polynomial;

    fn node(p: u32) -> RingPresentation {
        let r = PolyRing::new(p, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let i = Ideal::parse(&r, &["x*y"]).unwrap();
        RingPresentation::new(r, i).unwrap()
    }

    #[test]
    fn rejects_zero_quotient() {
        let r = PolyRing::new(3, &["x"], MonomialOrder::GrevLex).unwrap();
        let i = Ideal::parse(&r, &["2"]).unwrap();
        assert!(RingPresentation::new(r, i).is_err());
    }

    #[test]
    fn element_classification() {
        let rp = node(5);
        let x = parse_polynomial(rp.ambient(), "x").unwrap();
        let xy = parse_polynomial(rp.ambient(), "x*y").unwrap();
        let s = parse_polynomial(rp.ambient(), "x + y").unwrap();
        assert_eq!(rp.classify_element(&xy).unwrap(), ElementClass::Zero);
        assert_eq!(rp.classify_element(&x).unwrap(), ElementClass::Zerodivisor);
        assert_eq!(rp.classify_element(&s).unwrap(), ElementClass::Nonzerodivisor);
    }

    #[test]
    fn minimal_primes_and_reducedness() {
        let rp = node(3);
        let primes = rp.minimal_primes().unwrap();
        let rendered: Vec<Vec<String>> =
            primes.iter().map(|p| p.render_canonical()).collect();
        assert_eq!(rendered, vec![vec!["x"], vec!["y"]]);
        assert!(rp.is_reduced().unwrap());

        let r = PolyRing::new(3, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let i = Ideal::parse(&r, &["x^2*y"]).unwrap();
        let rp = RingPresentation::new(r, i).unwrap();
        assert!(!rp.is_reduced().unwrap());
        assert_eq!(
            rp.radical_of_defining().unwrap().render_canonical(),
            vec!["x*y"]
        );
    }

    #[test]
    fn avoids_minimal_primes_examples() {
        let rp = node(3);
        let x = parse_polynomial(rp.ambient(), "x").unwrap();
        let s = parse_polynomial(rp.ambient(), "x + y").unwrap();
        assert!(!rp.avoids_minimal_primes(&x).unwrap());
        assert!(rp.avoids_minimal_primes(&s).unwrap());
    }

    #[test]
    fn fedder_colon_of_node() {
        // For I = (xy) in F_3[x,y]: (I^[3] : I) = (x^2 y^2).
        let rp = node(3);
        let c = rp.fedder_colon(1).unwrap();
        assert_eq!(c.render_canonical(), vec!["x^2*y^2"]);
        // Cached value is returned on repeat.
        let again = rp.fedder_colon(1).unwrap();
        assert!(Arc::ptr_eq(&c, &again));
    }

    #[test]
    fn fedder_colon_general_matches_principal_fast_path() {
        // Same ideal given with a redundant generator takes the general
        // colon route; the canonical result must agree.
        let r = PolyRing::new(3, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let i = Ideal::parse(&r, &["x*y", "x^2*y"]).unwrap();
        assert_eq!(i.canonical_gens().len(), 1);
        let rp = RingPresentation::new(r.clone(), i).unwrap();
        let fast = rp.fedder_colon(1).unwrap();

        let same = Ideal::parse(&r, &["x*y"]).unwrap();
        let general = same.frobenius_bracket(1).colon(&same).unwrap();
        assert!(fast.equals(&general));
    }

    #[test]
    fn fedder_colon_of_zero_ideal_is_unit() {
        let r = PolyRing::new(2, &["x"], MonomialOrder::GrevLex).unwrap();
        let zero = Ideal::zero(&r);
        let rp = RingPresentation::new(r, zero).unwrap();
        assert!(rp.fedder_colon(2).unwrap().is_unit_ideal());
    }

    #[test]
    fn semigroup_validation() {
        let r = PolyRing::new(2, &["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let i = Ideal::parse(&r, &["y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"]).unwrap();
        let rp = RingPresentation::new(r.clone(), i.clone()).unwrap();
        assert!(rp.with_semigroup(vec![3, 4, 5]).is_ok());

        // Wrong weights fail the substitution check.
        let rp = RingPresentation::new(r.clone(), i).unwrap();
        assert!(rp.with_semigroup(vec![3, 4, 7]).is_err());

        // gcd > 1 is rejected.
        let j = Ideal::parse(&r, &["y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"]).unwrap();
        let rp = RingPresentation::new(r, j).unwrap();
        assert!(rp.with_semigroup(vec![6, 8, 10]).is_err());
    }

    #[test]
    fn localization_presentation() {
        let rp = node(3);
        let x = parse_polynomial(rp.ambient(), "x").unwrap();
        let (loc, var_map, t_index) = rp.localization(&x).unwrap();
        assert_eq!(loc.ambient().nvars(), 3);
        assert_eq!(var_map, vec![0, 1]);
        assert_eq!(t_index, 2);
        // In R_x the relation xy = 0 forces y = 0.
        let y_ext = loc.ambient().var(1);
        assert!(loc.defining().contains_poly(&y_ext));
    }

    #[test]
    fn declared_primes_validation() {
        let r = PolyRing::new(3, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let i = Ideal::parse(&r, &["y^2 - x^3"]).unwrap();
        let good = Ideal::parse(&r, &["y^2 - x^3"]).unwrap();
        let bad = Ideal::parse(&r, &["x"]).unwrap();
        let rp = RingPresentation::new(r.clone(), i.clone()).unwrap();
        assert!(rp.with_declared_min_primes(vec![good]).is_ok());
        let rp = RingPresentation::new(r, i).unwrap();
        assert!(rp.with_declared_min_primes(vec![bad]).is_err());
    }
}
