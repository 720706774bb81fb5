//! Tight interiors and big test ideals via partial sums of Cartier images.
//!
//! For a submodule `K = K'·R ⊆ R = S/I` and a co-test element `c`, the tight
//! interior is the ascending sum over `e` of the images of all
//! `p^{-e}`-linear maps `ᵉR → K` evaluated at `ᵉc`. The partial sums are
//!
//! * `S_0 = c·K` (the honest `e = 0` term: `Hom(R, K)` evaluated at `c`),
//! * `S_e = S_{e-1} + (root components of u·c)` over multiplier generators
//!   `u` at level `e`.
//!
//! The sums are computed with ambient lifts (`… + I`) and compared by
//! reduced Groebner bases; once `window` consecutive sums agree the chain
//! has stabilized and the last sum is returned together with the full trace.
//! The big test ideal is the interior of `R` itself, and strong F-regularity
//! is the statement that it is the unit ideal.
//!
//! Interiors over a different quotient than the target module (needed for
//! the minimal-prime decomposition and the nilradical reduction identity)
//! reuse the same partial-sum loop with generalised multiplier ideals.

use crate::cartier::{
    cartier_image, cartier_plus_image, hom_into_ideal_multipliers, hom_multipliers,
    pe_components,
};
use crate::error::AlgebraError;
use crate::ideal::Ideal;
use crate::poly::{frobenius_exponent, Polynomial};
use crate::ring::RingPresentation;

/// A stabilized chain of partial sums, all as ambient lifts containing `I`.
#[derive(Debug, Clone)]
pub struct InteriorTrace {
    /// Partial sums `S_{e_start}, .., S_{stabilized_at}`.
    pub partial_sums: Vec<Ideal>,
    pub e_start: u32,
    /// The exponent of the last partial sum, which closes the first window
    /// of consecutive equal sums.
    pub stabilized_at: u32,
    /// The stabilized value (the last partial sum).
    pub result: Ideal,
}

/// A tight-interior computation together with the element that drove it.
#[derive(Debug, Clone)]
pub struct TauComputation {
    pub trace: InteriorTrace,
    pub test_element: Polynomial,
    /// Whether the element was validated as a test element (automatic
    /// choices are constructed to be valid; declared ones are checked when
    /// possible).
    pub validated: bool,
}

/// Shared partial-sum loop. `seed` is the starting sum (already lifted),
/// `mult_at(e)` produces the multiplier ideal for level `e`, and images at
/// level `e` are the root components of `u·c`.
pub fn interior_sums<F>(
    rp: &RingPresentation,
    seed: Ideal,
    c: &Polynomial,
    e_start: u32,
    e_max: u32,
    window: u32,
    mult_at: F,
) -> Result<InteriorTrace, AlgebraError>
where
    F: Fn(u32) -> Result<Ideal, AlgebraError>,
{
    if window < 2 {
        return Err(AlgebraError::precondition(
            "stabilization window must be at least 2",
        ));
    }
    if e_max < e_start {
        return Err(AlgebraError::precondition(format!(
            "exponent bound {e_max} is below the starting exponent {e_start}",
        )));
    }
    assert!(
        *seed.ring() == *rp.ambient(),
        "seed ideal from a different ring"
    );
    let mut sums: Vec<Ideal> = Vec::new();
    let mut current = seed;
    let mut e = e_start;
    loop {
        // Once the sum fills the ring there is nothing left to add; the
        // guard also skips the (possibly expensive) multiplier ideal.
        if e >= 1 && !current.is_unit_ideal() {
            let mult = mult_at(e)?;
            let mut extra: Vec<Polynomial> = Vec::new();
            for u in mult.gens() {
                for (_, fa) in pe_components(&u.mul(c), e).components() {
                    extra.push(fa.clone());
                }
            }
            current = current.absorbing(extra);
        }
        sums.push(current.clone());
        let w = window as usize;
        if sums.len() >= w {
            let tail = &sums[sums.len() - w..];
            if tail.windows(2).all(|pair| pair[0].equals(&pair[1])) {
                return Ok(InteriorTrace {
                    partial_sums: sums,
                    e_start,
                    stabilized_at: e,
                    result: current,
                });
            }
        }
        if e == e_max {
            let trace = sums
                .iter()
                .map(|s| format!("[{}]", s.render_canonical().join(", ")))
                .collect::<Vec<_>>()
                .join(" -> ");
            return Err(AlgebraError::NotStabilized {
                e_max,
                window,
                trace,
            });
        }
        e += 1;
    }
}

/// Tight interior of the submodule generated by `k_prime` inside `R`,
/// driven by the element `c`.
pub fn tight_interior_of_ideal(
    rp: &RingPresentation,
    k_prime: &Ideal,
    c: &Polynomial,
    e_max: u32,
    window: u32,
) -> Result<InteriorTrace, AlgebraError> {
    let seed = rp.lift(&k_prime.multiply_poly(c));
    interior_sums(rp, seed, c, 0, e_max, window, |e| {
        hom_into_ideal_multipliers(rp, k_prime, e)
    })
}

/// The big test ideal `τ_b(R)`: the tight interior of `R` itself.
pub fn big_test_ideal(
    rp: &RingPresentation,
    c: &Polynomial,
    e_max: u32,
    window: u32,
) -> Result<InteriorTrace, AlgebraError> {
    tight_interior_of_ideal(rp, &Ideal::unit(rp.ambient()), c, e_max, window)
}

/// Big test ideal with an automatically found test element.
pub fn big_test_ideal_auto(
    rp: &RingPresentation,
    e_max: u32,
    window: u32,
) -> Result<TauComputation, AlgebraError> {
    let c = find_test_element(rp)?;
    let trace = big_test_ideal(rp, &c, e_max, window)?;
    Ok(TauComputation {
        trace,
        test_element: c,
        validated: true,
    })
}

/// The smallest `e` with `(√I)^{[p^e]} ⊆ I`; zero exactly when the ring is
/// reduced. Needs a computable radical.
pub fn nilpotency_level(rp: &RingPresentation) -> Result<u32, AlgebraError> {
    let radical = rp.radical_of_defining()?;
    if radical.equals(rp.defining()) {
        return Ok(0);
    }
    let mut e0 = 1u32;
    loop {
        if rp.defining().contains_ideal(&radical.frobenius_bracket(e0)) {
            return Ok(e0);
        }
        e0 += 1;
        if e0 > 32 {
            return Err(AlgebraError::unsupported(
                "nilradical bracket power does not fall into the defining ideal by e = 32",
            ));
        }
    }
}

/// Big test ideal with a caller-supplied test element, valid on both
/// reduced and non-reduced presentations. Reduced rings run the direct
/// partial-sum recipe. Non-reduced rings restart the sum at the nilpotency
/// level `e0`, since levels below `e0` contribute nothing stable and a raw
/// degree-zero term would wrongly pick up units of the non-reduced ring.
pub fn big_test_ideal_with_element(
    rp: &RingPresentation,
    c: Polynomial,
    e_max: u32,
    window: u32,
) -> Result<TauComputation, AlgebraError> {
    if rp.is_reduced()? {
        let trace = big_test_ideal(rp, &c, e_max, window)?;
        return Ok(TauComputation {
            trace,
            test_element: c,
            validated: true,
        });
    }
    let e0 = nilpotency_level(rp)?;
    let seed = rp.lift(&Ideal::zero(rp.ambient()));
    let trace = interior_sums(rp, seed, &c, e0, e_max.max(e0), window, |e| {
        Ok((*rp.fedder_colon(e)?).clone())
    })?;
    Ok(TauComputation {
        trace,
        test_element: c,
        validated: true,
    })
}

/// Big test ideal of an arbitrary quotient with an automatically chosen
/// test element: a validated element of the reduced ring, raised to the
/// `p^{e0}`-th power when the presentation carries nilpotents.
pub fn big_test_ideal_for_ring(
    rp: &RingPresentation,
    e_max: u32,
    window: u32,
) -> Result<TauComputation, AlgebraError> {
    if rp.is_reduced()? {
        return big_test_ideal_auto(rp, e_max, window);
    }
    let e0 = nilpotency_level(rp)?;
    let radical = rp.radical_of_defining()?;
    let reduced = RingPresentation::new(rp.ambient().clone(), radical)?;
    let c_red = find_test_element(&reduced)?;
    let q0 = frobenius_exponent(rp.characteristic(), e0);
    big_test_ideal_with_element(rp, c_red.pow(q0), e_max, window)
}

/// `R` is strongly F-regular iff its big test ideal is the unit ideal.
pub fn is_strongly_f_regular(
    rp: &RingPresentation,
    c: &Polynomial,
    e_max: u32,
    window: u32,
) -> Result<bool, AlgebraError> {
    Ok(big_test_ideal(rp, c, e_max, window)?.result.is_unit_ideal())
}

/// Searches for a test element: a nonzerodivisor-style element of the
/// Jacobian ideal avoiding every minimal prime. Candidates are the partial
/// derivatives of the defining generators, then their pairwise sums and
/// products, then the declared element. Candidates are ranked by total
/// degree and then by rendered string, so the choice is deterministic.
pub fn find_test_element(rp: &RingPresentation) -> Result<Polynomial, AlgebraError> {
    let ring = rp.ambient();
    if rp.defining().is_zero_ideal() {
        return Ok(ring.one());
    }

    let admissible = |c: &Polynomial| -> bool {
        !c.is_zero()
            && !rp.defining().contains_poly(c)
            && rp.avoids_minimal_primes(c).unwrap_or(false)
    };

    let mut partials: Vec<Polynomial> = Vec::new();
    for g in rp.defining().gens() {
        for v in 0..ring.nvars() {
            let d = g.derivative(v);
            if !d.is_zero() && !partials.contains(&d) {
                partials.push(d);
            }
        }
    }

    let mut candidates: Vec<Polynomial> = partials.iter().filter(|c| admissible(c)).cloned().collect();

    if candidates.is_empty() {
        // Combinations of partials: pairwise sums and products, the total
        // sum, and the total product.
        let mut combos: Vec<Polynomial> = Vec::new();
        for i in 0..partials.len() {
            for j in (i + 1)..partials.len() {
                combos.push(partials[i].add(&partials[j]));
                combos.push(partials[i].mul(&partials[j]));
            }
        }
        if partials.len() > 2 {
            let sum = partials.iter().fold(ring.zero(), |a, b| a.add(b));
            let prod = partials.iter().fold(ring.one(), |a, b| a.mul(b));
            combos.push(sum);
            combos.push(prod);
        }
        candidates = combos.into_iter().filter(|c| admissible(c)).collect();
    }

    if candidates.is_empty() {
        if let Some(c) = rp.declared_test_element() {
            if admissible(c) {
                candidates.push(c.clone());
            }
        }
    }

    candidates.sort_by_key(|c| (c.total_degree().unwrap_or(0), c.to_string()));
    candidates.into_iter().next().ok_or_else(|| {
        AlgebraError::unsupported(
            "no test element found from partial derivatives; declare one in the ring description",
        )
    })
}

/// Whether `c` is a valid test element: it must avoid every minimal prime
/// and lie in the big test ideal (computed with an automatic element).
pub fn is_test_element(
    rp: &RingPresentation,
    c: &Polynomial,
    e_max: u32,
    window: u32,
) -> Result<bool, AlgebraError> {
    if !rp.avoids_minimal_primes(c)? {
        return Ok(false);
    }
    let auto = big_test_ideal_auto(rp, e_max, window)?;
    Ok(auto.trace.result.contains_poly(c))
}

/// The chain `N ⊇ σ(N) ⊇ σ²(N) ⊇ ..` under the sum-of-traces operator
/// `σ(J) = Σ_{1≤e≤e_cap} Φ^e(J)`, iterated to its fixed point. The chain
/// descends whenever `N` is compatible (`σ(N) ⊆ N`); starting from the unit
/// ideal it always does.
#[derive(Debug, Clone)]
pub struct ChainTrace {
    /// `N_0, .., N_k` with `N_k = N_{k-1}` the certified fixed point.
    pub steps: Vec<Ideal>,
    pub fixed_point: Ideal,
    /// Whether every step contained the next (weak descent).
    pub descending: bool,
}

pub fn cartier_chain_down(
    rp: &RingPresentation,
    start: &Ideal,
    e_cap: u32,
    iter_cap: u32,
) -> Result<ChainTrace, AlgebraError> {
    let mut steps = vec![rp.lift(start)];
    let mut descending = true;
    for _ in 0..iter_cap {
        let prev = steps.last().unwrap();
        let next = cartier_plus_image(rp, prev, e_cap)?;
        let fixed = next.equals(prev);
        descending = descending && prev.contains_ideal(&next);
        steps.push(next);
        if fixed {
            let fixed_point = steps.last().unwrap().clone();
            return Ok(ChainTrace {
                steps,
                fixed_point,
                descending,
            });
        }
    }
    Err(AlgebraError::NotStabilized {
        e_max: iter_cap,
        window: 2,
        trace: steps
            .iter()
            .map(|s| format!("[{}]", s.render_canonical().join(", ")))
            .collect::<Vec<_>>()
            .join(" -> "),
    })
}

/// Whether `J·R` absorbs every trace up to `e_cap`: `Φ^e(J) ⊆ J` for all
/// `1 ≤ e ≤ e_cap`.
pub fn is_compatible(
    rp: &RingPresentation,
    j: &Ideal,
    e_cap: u32,
) -> Result<bool, AlgebraError> {
    let lifted = rp.lift(j);
    for e in 1..=e_cap {
        if !lifted.contains_ideal(&cartier_image(rp, j, e)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Compatibility and fixedness in one pass: compatible iff `Φ^e(J) ⊆ J`
/// for all `1 ≤ e ≤ e_cap`, fixed iff additionally `Σ_e Φ^e(J) = J`.
pub fn compatibility_check(
    rp: &RingPresentation,
    j: &Ideal,
    e_cap: u32,
) -> Result<(bool, bool), AlgebraError> {
    let compatible = is_compatible(rp, j, e_cap)?;
    let fixed = compatible && cartier_plus_image(rp, j, e_cap)?.equals(&rp.lift(j));
    Ok((compatible, fixed))
}

/// Outcome of a two-sided identity check, with ambient lifts of both sides.
#[derive(Debug, Clone)]
pub struct IdentityOutcome {
    pub lhs: Ideal,
    pub rhs: Ideal,
    pub matches: bool,
}

/// Checks the minimal-prime decomposition of the big test ideal:
/// `τ_b(R) = Σ_i interior of (0 : 𝔭_i) computed over R/𝔭_i`.
///
/// Each summand is an interior of the module `K_i = (I : 𝔭_i)/I` over the
/// domain `R/𝔭_i`, driven by a test element of `R/𝔭_i` and the multiplier
/// ideals `(I^{[q]} : 𝔭_i) ∩ (K_i + I)^{[q]}`.
pub fn decomposition_check(
    rp: &RingPresentation,
    c: &Polynomial,
    e_max: u32,
    window: u32,
) -> Result<IdentityOutcome, AlgebraError> {
    let lhs = big_test_ideal(rp, c, e_max, window)?.result;
    let primes = rp.minimal_primes()?;
    let mut rhs_gens: Vec<Polynomial> = rp.defining().gens().to_vec();
    for p in &primes {
        let summand = component_interior(rp, p, e_max, window)?;
        rhs_gens.extend(summand.result.gens().iter().cloned());
    }
    let rhs = Ideal::new(rp.ambient(), rhs_gens);
    let matches = lhs.equals(&rhs);
    Ok(IdentityOutcome { lhs, rhs, matches })
}

/// Interior of `(0 :_R 𝔭)` as a module over `R/𝔭`, for one minimal prime.
fn component_interior(
    rp: &RingPresentation,
    prime: &Ideal,
    e_max: u32,
    window: u32,
) -> Result<InteriorTrace, AlgebraError> {
    let component = RingPresentation::new(rp.ambient().clone(), prime.clone())?;
    let c = find_test_element(&component)?;
    let k = if prime.is_zero_ideal() {
        Ideal::unit(rp.ambient())
    } else {
        rp.defining().colon(prime)?
    };
    let seed = rp.lift(&k.multiply_poly(&c));
    interior_sums(rp, seed, &c, 0, e_max, window, |e| {
        hom_multipliers(prime, rp.defining(), &k, e)
    })
}

/// Outcome of the nilradical reduction identity, with the exponent at which
/// the nilradical's bracket power falls into the defining ideal.
#[derive(Debug, Clone)]
pub struct NilradicalOutcome {
    pub lhs: Ideal,
    pub rhs: Ideal,
    pub matches: bool,
    pub e0: u32,
    pub reduced_test_element: Polynomial,
}

/// Checks that interiors see only the reduced structure:
/// `R_{*R} = (0 :_R 𝔫)_{* R_red}` where `𝔫` is the nilradical.
///
/// With `e_0` minimal such that `(√I)^{[p^{e_0}]} ⊆ I` and `c` a test
/// element of `R_red`, the left side starts its sum at `e_0` driven by
/// `c^{p^{e_0}}` (whose twisted traces already factor through `R_red`), and
/// the right side is the interior of `K = (I : √I)/I` over `R_red` with
/// multipliers `(I^{[q]} : √I) ∩ (K + I)^{[q]}`.
pub fn nilradical_reduction_check(
    rp: &RingPresentation,
    e_max: u32,
    window: u32,
) -> Result<NilradicalOutcome, AlgebraError> {
    let radical = rp.radical_of_defining()?;
    let reduced = RingPresentation::new(rp.ambient().clone(), radical.clone())?;
    let c_red = find_test_element(&reduced)?;
    let e0 = nilpotency_level(rp)?;

    let lhs = if e0 == 0 {
        big_test_ideal(rp, &c_red, e_max, window)?.result
    } else {
        big_test_ideal_for_ring(rp, e_max, window)?.trace.result
    };

    let k = if radical.equals(rp.defining()) {
        Ideal::unit(rp.ambient())
    } else {
        rp.defining().colon(&radical)?
    };
    let seed = rp.lift(&k.multiply_poly(&c_red));
    let rhs = interior_sums(rp, seed, &c_red, 0, e_max, window, |e| {
        hom_multipliers(&radical, rp.defining(), &k, e)
    })?
    .result;

    let matches = lhs.equals(&rhs);
    Ok(NilradicalOutcome {
        lhs,
        rhs,
        matches,
        e0,
        reduced_test_element: c_red,
    })
}

/// Outcome of the localization comparison, both sides as ideals of the
/// localized presentation's ambient ring.
#[derive(Debug, Clone)]
pub struct LocalizationOutcome {
    pub extended: Ideal,
    pub localized: Ideal,
    pub matches: bool,
}

/// Checks that the big test ideal commutes with inverting `f`:
/// `τ_b(R)·R_f = τ_b(R_f)`, computed with the same test element on both
/// sides (test elements stay test elements after localization).
pub fn localization_commutes_check(
    rp: &RingPresentation,
    c: &Polynomial,
    f: &Polynomial,
    e_max: u32,
    window: u32,
) -> Result<LocalizationOutcome, AlgebraError> {
    let tau = big_test_ideal(rp, c, e_max, window)?.result;
    let (loc, var_map, _) = rp.localization(f)?;
    let ext_ring = loc.ambient().clone();
    let extended = loc.lift(&Ideal::new(
        &ext_ring,
        tau.gens()
            .iter()
            .map(|g| g.map_to_ring(&ext_ring, &var_map))
            .collect(),
    ));
    let c_loc = c.map_to_ring(&ext_ring, &var_map);
    if loc.defining().contains_poly(&c_loc) {
        return Err(AlgebraError::precondition(
            "test element becomes zero after localization",
        ));
    }
    let localized = big_test_ideal(&loc, &c_loc, e_max, window)?.result;
    let matches = extended.equals(&localized);
    Ok(LocalizationOutcome {
        extended,
        localized,
        matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::parse::parse_polynomial;
    use crate::poly::PolyRing;

    fn quotient(p: u32, vars: &[&str], gens: &[&str]) -> RingPresentation {
        let r = PolyRing::new(p, vars, MonomialOrder::GrevLex).unwrap();
        let i = Ideal::parse(&r, gens).unwrap();
        RingPresentation::new(r, i).unwrap()
    }

    #[test]
    fn node_test_element_and_tau() {
        let rp = quotient(2, &["x", "y"], &["x*y"]);
        let c = find_test_element(&rp).unwrap();
        assert_eq!(c.to_string(), "x + y");
        let trace = big_test_ideal(&rp, &c, 4, 2).unwrap();
        assert_eq!(trace.stabilized_at, 2);
        assert_eq!(trace.result.render_canonical(), vec!["x", "y"]);
    }

    #[test]
    fn cusp_char_two_full_trace() {
        let rp = quotient(2, &["x", "y"], &["y^2 + x^3"]);
        let c = find_test_element(&rp).unwrap();
        assert_eq!(c.to_string(), "x^2");
        let trace = big_test_ideal(&rp, &c, 4, 2).unwrap();
        assert_eq!(trace.stabilized_at, 4);
        let rendered: Vec<Vec<String>> = trace
            .partial_sums
            .iter()
            .map(|s| s.render_canonical())
            .collect();
        assert_eq!(
            rendered,
            vec![
                vec!["x^2".to_string(), "y^2".to_string()],
                vec!["x^2".to_string(), "x*y".to_string(), "y^2".to_string()],
                vec!["x^2".to_string(), "y".to_string()],
                vec!["x".to_string(), "y".to_string()],
                vec!["x".to_string(), "y".to_string()],
            ]
        );
        assert!(!is_strongly_f_regular(&rp, &c, 4, 2).unwrap());
    }

    #[test]
    fn cusp_char_three_stabilizes_at_three() {
        let rp = quotient(3, &["x", "y"], &["y^2 - x^3"]);
        let c = find_test_element(&rp).unwrap();
        assert_eq!(c.to_string(), "2*y");
        let trace = big_test_ideal(&rp, &c, 4, 2).unwrap();
        assert_eq!(trace.stabilized_at, 3);
        assert_eq!(trace.result.render_canonical(), vec!["x", "y"]);
    }

    #[test]
    fn regular_rings_are_strongly_f_regular() {
        let r = PolyRing::new(5, &["x"], MonomialOrder::GrevLex).unwrap();
        let zero = Ideal::zero(&r);
        let rp = RingPresentation::new(r, zero).unwrap();
        let c = find_test_element(&rp).unwrap();
        assert!(c.is_one());
        let trace = big_test_ideal(&rp, &c, 4, 2).unwrap();
        assert_eq!(trace.stabilized_at, 1);
        assert!(trace.result.is_unit_ideal());
    }

    #[test]
    fn quadric_cone_is_strongly_f_regular() {
        let rp = quotient(3, &["x", "y", "z"], &["x^2 + y*z"]);
        let c = find_test_element(&rp).unwrap();
        assert!(is_strongly_f_regular(&rp, &c, 4, 2).unwrap());
    }

    #[test]
    fn stanley_reisner_tau() {
        let rp = quotient(2, &["x", "y", "z"], &["x*y", "x*z"]);
        let c = find_test_element(&rp).unwrap();
        assert_eq!(c.to_string(), "x + y");
        let trace = big_test_ideal(&rp, &c, 4, 2).unwrap();
        assert_eq!(trace.result.render_canonical(), vec!["x", "y", "z"]);
    }

    #[test]
    fn tau_is_independent_of_the_test_element() {
        let rp = quotient(2, &["x", "y", "z"], &["x*y", "x*z"]);
        let a = parse_polynomial(rp.ambient(), "x + y").unwrap();
        let b = parse_polynomial(rp.ambient(), "x + z").unwrap();
        let ta = big_test_ideal(&rp, &a, 4, 2).unwrap().result;
        let tb = big_test_ideal(&rp, &b, 4, 2).unwrap().result;
        assert!(ta.equals(&tb));
    }

    #[test]
    fn interior_of_smaller_module() {
        // K = (x, y) in the node: the interior stays inside K.
        let rp = quotient(2, &["x", "y"], &["x*y"]);
        let c = parse_polynomial(rp.ambient(), "x + y").unwrap();
        let k = Ideal::parse(rp.ambient(), &["x", "y"]).unwrap();
        let trace = tight_interior_of_ideal(&rp, &k, &c, 4, 2).unwrap();
        assert!(rp.lift(&k).contains_ideal(&trace.result));
    }

    #[test]
    fn idempotence_of_tau() {
        // The interior of τ_b itself is τ_b again.
        let rp = quotient(2, &["x", "y"], &["y^2 + x^3"]);
        let c = find_test_element(&rp).unwrap();
        let tau = big_test_ideal(&rp, &c, 4, 2).unwrap().result;
        let again = tight_interior_of_ideal(&rp, &tau, &c, 4, 2).unwrap().result;
        assert!(again.equals(&tau));
    }

    #[test]
    fn test_element_validation() {
        let rp = quotient(2, &["x", "y"], &["x*y"]);
        let good = parse_polynomial(rp.ambient(), "x + y").unwrap();
        let bad = parse_polynomial(rp.ambient(), "x").unwrap();
        assert!(is_test_element(&rp, &good, 4, 2).unwrap());
        assert!(!is_test_element(&rp, &bad, 4, 2).unwrap());
    }

    #[test]
    fn chain_down_on_the_cusp() {
        let rp = quotient(2, &["x", "y"], &["y^2 + x^3"]);
        let one = Ideal::unit(rp.ambient());
        let chain = cartier_chain_down(&rp, &one, 2, 16).unwrap();
        assert_eq!(chain.fixed_point.render_canonical(), vec!["x", "y"]);
        assert!(chain.descending);
        // τ_b sits inside the fixed point.
        let c = find_test_element(&rp).unwrap();
        let tau = big_test_ideal(&rp, &c, 4, 2).unwrap().result;
        assert!(chain.fixed_point.contains_ideal(&tau));
    }

    #[test]
    fn chain_down_on_an_f_pure_ring_stays_unit() {
        let rp = quotient(2, &["x", "y"], &["x*y"]);
        let one = Ideal::unit(rp.ambient());
        let chain = cartier_chain_down(&rp, &one, 2, 16).unwrap();
        assert!(chain.fixed_point.is_unit_ideal());
        // The zero ideal is a fixed point as well.
        let zero = Ideal::zero(rp.ambient());
        let chain = cartier_chain_down(&rp, &zero, 2, 16).unwrap();
        assert!(chain.fixed_point.equals(rp.defining()));
        // Compatibility and fixedness of τ_b.
        let c = find_test_element(&rp).unwrap();
        let tau = big_test_ideal(&rp, &c, 4, 2).unwrap().result;
        assert_eq!(compatibility_check(&rp, &tau, 3).unwrap(), (true, true));
    }

    #[test]
    fn minimal_primes_are_compatible() {
        let rp = quotient(3, &["x", "y"], &["x*y"]);
        for p in rp.minimal_primes().unwrap() {
            assert!(is_compatible(&rp, &p, 3).unwrap());
        }
        // τ_b is compatible as well.
        let c = find_test_element(&rp).unwrap();
        let tau = big_test_ideal(&rp, &c, 4, 2).unwrap().result;
        assert!(is_compatible(&rp, &tau, 3).unwrap());
    }

    #[test]
    fn decomposition_over_minimal_primes() {
        let rp = quotient(3, &["x", "y"], &["x*y"]);
        let c = find_test_element(&rp).unwrap();
        let out = decomposition_check(&rp, &c, 4, 2).unwrap();
        assert!(out.matches, "lhs {:?} rhs {:?}", out.lhs.render_canonical(), out.rhs.render_canonical());
        assert_eq!(out.lhs.render_canonical(), vec!["x", "y"]);

        let rp = quotient(2, &["x", "y", "z"], &["x*y", "x*z"]);
        let c = find_test_element(&rp).unwrap();
        let out = decomposition_check(&rp, &c, 4, 2).unwrap();
        assert!(out.matches);
    }

    #[test]
    fn nilradical_reduction_on_non_reduced_rings() {
        // F_3[x]/(x^2): both sides are (x).
        let rp = quotient(3, &["x"], &["x^2"]);
        let out = nilradical_reduction_check(&rp, 4, 2).unwrap();
        assert!(out.matches);
        assert_eq!(out.e0, 1);
        assert_eq!(out.lhs.render_canonical(), vec!["x"]);

        // F_3[x,y]/(x^2 y): both sides are (x^2, xy).
        let rp = quotient(3, &["x", "y"], &["x^2*y"]);
        let out = nilradical_reduction_check(&rp, 4, 2).unwrap();
        assert!(out.matches, "lhs {:?} rhs {:?}", out.lhs.render_canonical(), out.rhs.render_canonical());
        assert_eq!(out.lhs.render_canonical(), vec!["x^2", "x*y"]);
    }

    #[test]
    fn nilradical_check_is_trivial_on_reduced_rings() {
        let rp = quotient(2, &["x", "y"], &["x*y"]);
        let out = nilradical_reduction_check(&rp, 4, 2).unwrap();
        assert!(out.matches);
        assert_eq!(out.e0, 0);
    }

    #[test]
    fn dispatcher_handles_reduced_and_non_reduced_rings() {
        let rp = quotient(2, &["x", "y"], &["x*y"]);
        let tau = big_test_ideal_for_ring(&rp, 4, 2).unwrap();
        assert_eq!(rp.lift(&tau.trace.result).render_canonical(), vec!["x", "y"]);

        let rp = quotient(2, &["x"], &["x^2"]);
        assert_eq!(nilpotency_level(&rp).unwrap(), 1);
        let tau = big_test_ideal_for_ring(&rp, 4, 2).unwrap();
        assert_eq!(rp.lift(&tau.trace.result).render_canonical(), vec!["x"]);
        // The restarted sum must not contain the unit that a naive degree
        // zero term c·R would contribute (c maps to a unit mod nilpotents).
        assert!(!tau.trace.result.is_unit_ideal());

        let rp = quotient(3, &["x", "y"], &["x^2*y"]);
        let tau = big_test_ideal_for_ring(&rp, 4, 2).unwrap();
        assert_eq!(
            rp.lift(&tau.trace.result).render_canonical(),
            vec!["x^2", "x*y"]
        );
    }

    #[test]
    fn localization_of_the_node_at_x() {
        let rp = quotient(3, &["x", "y"], &["x*y"]);
        let c = parse_polynomial(rp.ambient(), "x + y").unwrap();
        let x = parse_polynomial(rp.ambient(), "x").unwrap();
        let out = localization_commutes_check(&rp, &c, &x, 4, 2).unwrap();
        assert!(out.matches);
        // R_x is a localized polynomial ring, so both sides are the unit ideal.
        assert!(out.localized.is_unit_ideal());
    }

    #[test]
    fn not_stabilized_is_reported() {
        // e_max = 0 with window 2 cannot close a window.
        let rp = quotient(2, &["x", "y"], &["x*y"]);
        let c = parse_polynomial(rp.ambient(), "x + y").unwrap();
        let err = big_test_ideal(&rp, &c, 0, 2).unwrap_err();
        match err {
            AlgebraError::NotStabilized { e_max, .. } => assert_eq!(e_max, 0),
            other => panic!("expected NotStabilized, got {other:?}"),
        }
    }

    #[test]
    fn declared_test_element_fallback() {
        // A ring whose partials all vanish: F_2[x]/(x^2) has d(x^2) = 0.
        let r = PolyRing::new(2, &["x"], MonomialOrder::GrevLex).unwrap();
        let i = Ideal::parse(&r, &["x^2"]).unwrap();
        let rp = RingPresentation::new(r.clone(), i).unwrap();
        assert!(find_test_element(&rp).is_err());
        // A declared unit constant avoids the minimal prime (x) and is
        // picked up as the fallback.
        let rp = {
            let i = Ideal::parse(&r, &["x^2"]).unwrap();
            RingPresentation::new(r.clone(), i)
                .unwrap()
                .with_test_element(parse_polynomial(&r, "1").unwrap())
                .unwrap()
        };
        let c = find_test_element(&rp).unwrap();
        assert!(c.is_one());
    }
}
