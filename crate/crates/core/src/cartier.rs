//! Cartier (p^{-e}-linear) operators on polynomial rings and their quotients.
//!
//! Over `S = F_p[x_1..x_n]`, every `f` decomposes uniquely as
//! `f = Σ_a f_a^{p^e} · x^a` with exponent vectors `a` in `[0, p^e - 1]^n`;
//! `f_a` is the `a`-th `p^e`-th root component. The standard trace `Φ_e`
//! projects onto the component at `a = (p^e - 1, .., p^e - 1)`, and every
//! `p^{-e}`-linear map `S → S` is `f ↦ Φ_e(h·f)` for a unique `h`.
//!
//! Maps on a quotient `R = S/I` are the span of the twists
//! `f ↦ Φ_e(x^t·u·f)` with `u` in the Frobenius colon `(I^{[p^e]} : I)`.
//! The twist enumeration is never materialised: the ideal generated by
//! `{Φ_e(x^t·w) : all t}` equals the ideal generated by the root components
//! of `w`, because `(v·w)_a = Σ_b (v·x^b)_a · w_b` lies in the component
//! ideal of `w` for every multiplier `v`. All image computations below walk
//! the components directly, which also makes them independent of the chosen
//! generating sets.

use std::sync::Arc;

use crate::error::AlgebraError;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::{frobenius_exponent, PolyRing, Polynomial};
use crate::ring::RingPresentation;

/// The root components of a polynomial: `f = Σ_a comp(a)^{p^e} · x^a`.
#[derive(Debug, Clone)]
pub struct PeDecomposition {
    e: u32,
    components: Vec<(Monomial, Polynomial)>,
}

impl PeDecomposition {
    pub fn exponent(&self) -> u32 {
        self.e
    }

    /// The nonzero components as `(a, f_a)` pairs.
    pub fn components(&self) -> &[(Monomial, Polynomial)] {
        &self.components
    }

    /// The component at a specific exponent vector, zero if absent.
    pub fn component_at(&self, ring: &Arc<PolyRing>, a: &Monomial) -> Polynomial {
        self.components
            .iter()
            .find(|(m, _)| m == a)
            .map(|(_, f)| f.clone())
            .unwrap_or_else(|| ring.zero())
    }

    /// Reassembles `Σ_a f_a^{p^e} x^a`; used to cross-check the split.
    pub fn reassemble(&self, ring: &Arc<PolyRing>) -> Polynomial {
        let mut acc = ring.zero();
        for (a, fa) in &self.components {
            let term = fa
                .frobenius_power(self.e)
                .mul(&ring.monomial(a.clone(), ring.field().one()));
            acc = acc.add(&term);
        }
        acc
    }
}

/// Splits `f` into its `p^e`-th root components. Coefficients are fixed by
/// Frobenius on the prime field, so roots of coefficients are themselves.
pub fn pe_components(f: &Polynomial, e: u32) -> PeDecomposition {
    let ring = f.ring().clone();
    let q = frobenius_exponent(ring.characteristic(), e);
    let mut buckets: Vec<(Monomial, Vec<(Monomial, crate::field::Fp)>)> = Vec::new();
    for (m, c) in f.terms() {
        let exps = m.exponents();
        let a = Monomial::new(exps.iter().map(|&x| x % q).collect());
        let b = Monomial::new(exps.iter().map(|&x| x / q).collect());
        match buckets.iter_mut().find(|(key, _)| *key == a) {
            Some((_, terms)) => terms.push((b, *c)),
            None => buckets.push((a, vec![(b, *c)])),
        }
    }
    let components = buckets
        .into_iter()
        .map(|(a, terms)| (a, ring.from_terms(terms)))
        .collect();
    PeDecomposition { e, components }
}

/// The standard trace `Φ_e(f)`: the root component of `f` at
/// `a = (p^e - 1, .., p^e - 1)`.
pub fn cartier_trace(f: &Polynomial, e: u32) -> Polynomial {
    let ring = f.ring().clone();
    let q = frobenius_exponent(ring.characteristic(), e);
    let corner = Monomial::new(vec![q - 1; ring.nvars()]);
    pe_components(f, e).component_at(&ring, &corner)
}

/// Multipliers `u` whose twisted traces give well-defined `p^{-e}`-linear
/// maps `ᵉ(S/J_src) → S/I_tgt` landing inside the submodule generated by
/// `K'` of the target: `(I_tgt^{[q]} : J_src) ∩ (K' + I_tgt)^{[q]}`.
///
/// The colon enforces well-definedness (`u·J_src ⊆ I_tgt^{[q]}` makes the
/// value independent of the chosen lift), and membership in a bracket power
/// `W^{[q]}` is exactly the condition that every root component of `u` lies
/// in `W`, which confines the image.
pub fn hom_multipliers(
    j_src: &Ideal,
    i_tgt: &Ideal,
    k_prime: &Ideal,
    e: u32,
) -> Result<Ideal, AlgebraError> {
    if e == 0 {
        return Err(AlgebraError::precondition(
            "Cartier multipliers require a positive exponent",
        ));
    }
    let ring = i_tgt.ring().clone();
    let well_defined = if j_src.is_zero_ideal() {
        Ideal::unit(&ring)
    } else {
        let bracket = i_tgt.frobenius_bracket(e);
        if i_tgt.canonical_gens().len() == 1 && j_src.equals(i_tgt) {
            // Principal target with J_src = I_tgt: (f^q : f) = (f^{q-1})
            // because the ambient ring is a domain.
            let q = frobenius_exponent(ring.characteristic(), e);
            let f = i_tgt.canonical_gens()[0].clone();
            Ideal::new(&ring, vec![f.pow(q - 1)])
        } else {
            bracket.colon(j_src)?
        }
    };
    let target = k_prime.sum(i_tgt);
    if target.is_unit_ideal() {
        return Ok(well_defined);
    }
    Ok(well_defined.intersect(&target.frobenius_bracket(e)))
}

/// Multipliers for maps `ᵉR → K ⊆ R` on a single quotient `R = S/I`, where
/// `K` is the submodule generated by `k_prime`.
pub fn hom_into_ideal_multipliers(
    rp: &RingPresentation,
    k_prime: &Ideal,
    e: u32,
) -> Result<Ideal, AlgebraError> {
    // Same computation as `hom_multipliers` with source and target both `I`,
    // but routed through the presentation's cached Frobenius colon.
    let well_defined = (*rp.fedder_colon(e)?).clone();
    if k_prime.is_unit_ideal() {
        return Ok(well_defined);
    }
    let target = k_prime.sum(rp.defining());
    if target.is_unit_ideal() {
        return Ok(well_defined);
    }
    Ok(well_defined.intersect(&target.frobenius_bracket(e)))
}

/// The total image `Σ_φ φ(ᵉ(J·R))` over all `p^{-e}`-linear maps
/// `φ: ᵉR → R`, returned as an ambient ideal containing the defining ideal.
///
/// Computed as `I + (root components of u·g)` over Frobenius-colon
/// generators `u` and generators `g` of `J + I`; see the module notes for
/// why this needs no twist enumeration.
pub fn cartier_image(
    rp: &RingPresentation,
    j: &Ideal,
    e: u32,
) -> Result<Ideal, AlgebraError> {
    let fedder = rp.fedder_colon(e)?;
    let lifted = rp.lift(j);
    let mut acc = Ideal::new(rp.ambient(), rp.defining().gens().to_vec());
    for u in fedder.gens() {
        for g in lifted.gens() {
            if acc.is_unit_ideal() {
                return Ok(acc);
            }
            let split = pe_components(&u.mul(g), e);
            acc = acc.absorbing(split.components().iter().map(|(_, fa)| fa.clone()));
        }
    }
    Ok(acc)
}

/// `Σ_{e=1..e_cap} Φ^e(J·R)`: one application of the sum-of-traces operator
/// that Cartier-fixed ideals are fixed by.
pub fn cartier_plus_image(
    rp: &RingPresentation,
    j: &Ideal,
    e_cap: u32,
) -> Result<Ideal, AlgebraError> {
    if e_cap == 0 {
        return Err(AlgebraError::precondition(
            "sum of traces requires a positive exponent cap",
        ));
    }
    let mut acc = cartier_image(rp, j, 1)?;
    for e in 2..=e_cap {
        if acc.is_unit_ideal() {
            break;
        }
        acc = acc.absorbing(cartier_image(rp, j, e)?.canonical_gens().iter().cloned());
    }
    Ok(acc)
}

/// Fedder's criterion at the irrelevant maximal ideal: `R = S/I` is F-pure
/// iff `(I^{[p]} : I)` is not contained in `(x_1^p, .., x_n^p)`.
pub fn is_f_pure(rp: &RingPresentation) -> Result<bool, AlgebraError> {
    let fedder = rp.fedder_colon(1)?;
    let p = u64::from(rp.characteristic());
    let ring = rp.ambient();
    let m_bracket = Ideal::new(
        ring,
        (0..ring.nvars()).map(|i| ring.var(i).pow(p)).collect(),
    );
    Ok(!m_bracket.contains_ideal(&fedder))
}
