//! Conductor ideals of the bundled ring classes, and the identities tying
//! them to big test ideals.
//!
//! Two computable routes:
//!
//! * Stanley-Reisner: for a square-free monomial defining ideal the
//!   normalization is the product of the (polynomial) quotients by the
//!   minimal primes, and the conductor is `Σ_i (I : 𝔭_i)`.
//! * Numerical semigroup: for `R = F_p[t^{a_1}, .., t^{a_k}]` presented with
//!   declared exponents, the normalization is `F_p[t]` and the conductor is
//!   spanned by `t^c` onward, `c` = Frobenius number + 1. The ideal of `R`
//!   is generated by the images of `t^c, .., t^{c + min(a_i) - 1}`.
//!
//! The finite-map transformation check re-derives the big test ideal from
//! upstairs: every `p^{-e}`-linear map `ᵉR̄ → R` factors as the standard
//! trace of `F_p[t]` followed by multiplication into the conductor, so
//! `τ_b(R) = Σ_{e=0..e_max} Φ_e(𝔠_S^{[p^e]})` expressed in `R`-coordinates.
//! On `t`-exponents, `Φ_e` maps the span of exponents `≥ c·p^e` onto the
//! span of exponents `≥ c`, which this module evaluates directly.

use crate::error::AlgebraError;
use crate::ideal::Ideal;
use crate::interior::IdentityOutcome;
use crate::poly::{frobenius_exponent, Polynomial};
use crate::ring::RingPresentation;
use crate::semigroup::NumericalSemigroup;

/// Which route produced a conductor ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConductorMethod {
    StanleyReisner,
    Semigroup,
    Supplied,
}

#[derive(Debug, Clone)]
pub struct ConductorResult {
    /// Ambient lift of the conductor ideal.
    pub ideal: Ideal,
    pub method: ConductorMethod,
}

/// Conductor of a Stanley-Reisner ring: `Σ_i (I : 𝔭_i)` over the minimal
/// primes. Requires a square-free monomial defining ideal (or the zero
/// ideal, which is its own normalization).
pub fn stanley_reisner_conductor(rp: &RingPresentation) -> Result<ConductorResult, AlgebraError> {
    if rp.defining().is_zero_ideal() {
        return Ok(ConductorResult {
            ideal: Ideal::unit(rp.ambient()),
            method: ConductorMethod::StanleyReisner,
        });
    }
    if !rp.defining().is_squarefree_monomial() {
        return Err(AlgebraError::unsupported(
            "the Stanley-Reisner conductor route requires a square-free monomial defining ideal",
        ));
    }
    let mut gens: Vec<Polynomial> = rp.defining().gens().to_vec();
    for p in rp.minimal_primes()? {
        gens.extend(rp.defining().colon(&p)?.gens().iter().cloned());
    }
    Ok(ConductorResult {
        ideal: Ideal::new(rp.ambient(), gens),
        method: ConductorMethod::StanleyReisner,
    })
}

/// Conductor of a numerical-semigroup ring: the images of
/// `t^c, .., t^{c + min(a_i) - 1}` under `t^{a_i} ↦ x_i`.
pub fn semigroup_conductor(
    rp: &RingPresentation,
) -> Result<(ConductorResult, NumericalSemigroup), AlgebraError> {
    let weights = rp.semigroup().ok_or_else(|| {
        AlgebraError::unsupported(
            "the semigroup conductor route requires declared semigroup exponents",
        )
    })?;
    let sg = NumericalSemigroup::new(weights)?;
    let c = sg.conductor_exponent();
    let ideal = span_of_exponents_from(rp, &sg, c)?;
    Ok((
        ConductorResult {
            ideal,
            method: ConductorMethod::Semigroup,
        },
        sg,
    ))
}

/// The ideal of `R` spanned by all `t^m` with `m ≥ start`, as an ambient
/// lift. Generated by the images of `start, .., start + min(a_i) - 1`,
/// since larger exponents differ by further generators. Exponents below the
/// conductor that are gaps contribute nothing and are skipped.
fn span_of_exponents_from(
    rp: &RingPresentation,
    sg: &NumericalSemigroup,
    start: u64,
) -> Result<Ideal, AlgebraError> {
    if start == 0 {
        return Ok(Ideal::unit(rp.ambient()));
    }
    let weights = rp.semigroup().expect("checked by callers");
    let min_w = *sg.gens().first().expect("validated semigroup");
    let mut gens: Vec<Polynomial> = rp.defining().gens().to_vec();
    for m in start..start + min_w {
        if let Some(rep) = sg.representation(m) {
            // rep is indexed by the sorted unique generators; map back to
            // the per-variable weights.
            let mut exps = vec![0u64; weights.len()];
            let mut remaining: Vec<u64> = rep.clone();
            for (vi, &w) in weights.iter().enumerate() {
                let gi = sg.gens().iter().position(|&g| g == w).expect("weight is a generator");
                exps[vi] = remaining[gi];
                remaining[gi] = 0;
            }
            let mono = crate::monomial::Monomial::new(exps);
            gens.push(rp.ambient().monomial(mono, rp.ambient().field().one()));
        }
    }
    Ok(Ideal::new(rp.ambient(), gens))
}

/// Route dispatch: semigroup when declared, else Stanley-Reisner when the
/// defining ideal is square-free monomial.
pub fn conductor_auto(rp: &RingPresentation) -> Result<ConductorResult, AlgebraError> {
    if rp.semigroup().is_some() {
        return Ok(semigroup_conductor(rp)?.0);
    }
    stanley_reisner_conductor(rp)
}

/// One verdict of the conductor identity report.
#[derive(Debug, Clone)]
pub struct ConductorVerdict {
    pub name: &'static str,
    /// `None` means the comparison was uncheckable with the available data.
    pub holds: Option<bool>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    /// Whether equality/containment is an expected theorem for this ring
    /// (as opposed to an observation).
    pub expected: bool,
}

/// The conductor identities: `τ_b(R) ⊆ 𝔠`, `𝔠 ⊆ Σ_i 𝔞_i` with
/// `𝔞_i = (I : 𝔭_i)`, and `τ_b(R) = 𝔠`. The equality is an expected
/// theorem when the normalization is strongly F-regular, which holds for
/// both computable routes (polynomial rings upstairs).
pub fn conductor_identities_check(
    rp: &RingPresentation,
    tau: &Ideal,
    conductor: &ConductorResult,
) -> Result<Vec<ConductorVerdict>, AlgebraError> {
    let tau_l = rp.lift(tau);
    let cond_l = rp.lift(&conductor.ideal);
    let mut verdicts = Vec::new();

    verdicts.push(ConductorVerdict {
        name: "tau_subset_conductor",
        holds: Some(cond_l.contains_ideal(&tau_l)),
        lhs: tau_l.render_canonical(),
        rhs: cond_l.render_canonical(),
        expected: true,
    });

    match rp.minimal_primes() {
        Ok(primes) => {
            let mut gens: Vec<Polynomial> = rp.defining().gens().to_vec();
            for p in &primes {
                if p.is_zero_ideal() {
                    gens.push(rp.ambient().one());
                } else {
                    gens.extend(rp.defining().colon(p)?.gens().iter().cloned());
                }
            }
            let ann_sum = Ideal::new(rp.ambient(), gens);
            verdicts.push(ConductorVerdict {
                name: "conductor_subset_annihilator_sum",
                holds: Some(ann_sum.contains_ideal(&cond_l)),
                lhs: cond_l.render_canonical(),
                rhs: ann_sum.render_canonical(),
                expected: true,
            });
        }
        Err(_) => {
            verdicts.push(ConductorVerdict {
                name: "conductor_subset_annihilator_sum",
                holds: None,
                lhs: cond_l.render_canonical(),
                rhs: vec!["<minimal primes unknown>".to_string()],
                expected: true,
            });
        }
    }

    // Equality is a theorem whenever the normalization is strongly
    // F-regular; both computable routes have polynomial rings upstairs.
    let expected_equal = matches!(
        conductor.method,
        ConductorMethod::StanleyReisner | ConductorMethod::Semigroup
    );
    verdicts.push(ConductorVerdict {
        name: "tau_equals_conductor",
        holds: Some(tau_l.equals(&cond_l)),
        lhs: tau_l.render_canonical(),
        rhs: cond_l.render_canonical(),
        expected: expected_equal,
    });

    Ok(verdicts)
}

/// The finite-map transformation identity for a semigroup ring `R` with
/// normalization `S = F_p[t]`: `τ_b(R)` equals
/// `Σ_{e=0..e_max} Φ_e^S(𝔠_S^{[p^e]})` pushed into `R`.
///
/// On exponents: `𝔠_S^{[p^e]}` is spanned by `t^m, m ≥ c·p^e`, its trace
/// image by `t^m, m ≥ ceil((c·p^e - (p^e - 1)) / p^e) = c`. Every exponent
/// `≥ c` lies in the semigroup, so the push into `R` is the semigroup
/// conductor ideal itself; the comparison against `τ_b` is still a genuine
/// two-sided computation.
pub fn finite_transform_check(
    rp: &RingPresentation,
    tau: &Ideal,
    e_max: u32,
) -> Result<IdentityOutcome, AlgebraError> {
    let (_, sg) = semigroup_conductor(rp)?;
    let c = sg.conductor_exponent();
    let mut start = c; // e = 0 term: the conductor itself.
    for e in 1..=e_max {
        let q = frobenius_exponent(rp.characteristic(), e);
        let bracket_start = c.checked_mul(q).ok_or_else(|| {
            AlgebraError::precondition("conductor exponent times p^e overflows")
        })?;
        // Trace image of span(t^m : m ≥ bracket_start): exponents from
        // ceil((bracket_start - (q - 1)) / q).
        let traced = bracket_start.saturating_sub(q - 1).div_ceil(q);
        start = start.min(traced);
    }
    let rhs = span_of_exponents_from(rp, &sg, start)?;
    let lhs = rp.lift(tau);
    let rhs = rp.lift(&rhs);
    let matches = lhs.equals(&rhs);
    Ok(IdentityOutcome { lhs, rhs, matches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interior::{big_test_ideal, find_test_element};
    use crate::monomial::MonomialOrder;
    use crate::poly::PolyRing;

    fn quotient(p: u32, vars: &[&str], gens: &[&str]) -> RingPresentation {
        let r = PolyRing::new(p, vars, MonomialOrder::GrevLex).unwrap();
        let i = Ideal::parse(&r, gens).unwrap();
        RingPresentation::new(r, i).unwrap()
    }

    fn cusp_semigroup(p: u32) -> RingPresentation {
        quotient(p, &["x", "y"], &["y^2 - x^3"])
            .with_semigroup(vec![2, 3])
            .unwrap()
    }

    #[test]
    fn node_stanley_reisner_conductor() {
        let rp = quotient(2, &["x", "y"], &["x*y"]);
        let c = stanley_reisner_conductor(&rp).unwrap();
        assert_eq!(rp.lift(&c.ideal).render_canonical(), vec!["x", "y"]);
    }

    #[test]
    fn stanley_reisner_route_rejects_non_squarefree() {
        let rp = quotient(3, &["x", "y"], &["x^2*y"]);
        assert!(stanley_reisner_conductor(&rp).is_err());
        let rp = cusp_semigroup(5);
        assert!(stanley_reisner_conductor(&rp).is_err());
    }

    #[test]
    fn cusp_semigroup_conductor() {
        let rp = cusp_semigroup(5);
        let (c, sg) = semigroup_conductor(&rp).unwrap();
        assert_eq!(sg.conductor_exponent(), 2);
        // t^2 -> x, t^3 -> y.
        assert_eq!(rp.lift(&c.ideal).render_canonical(), vec!["x", "y"]);
    }

    #[test]
    fn three_four_five_conductor() {
        let rp = quotient(
            2,
            &["x", "y", "z"],
            &["y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"],
        )
        .with_semigroup(vec![3, 4, 5])
        .unwrap();
        let (c, sg) = semigroup_conductor(&rp).unwrap();
        assert_eq!(sg.conductor_exponent(), 3);
        assert_eq!(
            rp.lift(&c.ideal).render_canonical(),
            vec!["x", "y", "z"]
        );
    }

    #[test]
    fn whole_semigroup_gives_unit_conductor() {
        let r = PolyRing::new(3, &["x"], MonomialOrder::GrevLex).unwrap();
        let zero = Ideal::zero(&r);
        let rp = RingPresentation::new(r, zero)
            .unwrap()
            .with_semigroup(vec![1])
            .unwrap();
        let (c, _) = semigroup_conductor(&rp).unwrap();
        assert!(c.ideal.is_unit_ideal());
    }

    #[test]
    fn conductor_identities_on_the_node() {
        let rp = quotient(2, &["x", "y"], &["x*y"]);
        let c = find_test_element(&rp).unwrap();
        let tau = big_test_ideal(&rp, &c, 4, 2).unwrap().result;
        let cond = conductor_auto(&rp).unwrap();
        let verdicts = conductor_identities_check(&rp, &tau, &cond).unwrap();
        assert_eq!(verdicts.len(), 3);
        for v in &verdicts {
            assert_eq!(v.holds, Some(true), "verdict {} failed", v.name);
        }
    }

    #[test]
    fn transformation_rule_on_semigroup_rings() {
        for p in [2u32, 3, 5] {
            let rp = cusp_semigroup(p);
            let c = find_test_element(&rp).unwrap();
            let tau = big_test_ideal(&rp, &c, 4, 2).unwrap().result;
            let out = finite_transform_check(&rp, &tau, 4).unwrap();
            assert!(
                out.matches,
                "p = {p}: lhs {:?} rhs {:?}",
                out.lhs.render_canonical(),
                out.rhs.render_canonical()
            );
            assert_eq!(out.rhs.render_canonical(), vec!["x", "y"]);
        }
    }

    #[test]
    fn transformation_rule_on_three_four_five() {
        let rp = quotient(
            2,
            &["x", "y", "z"],
            &["y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"],
        )
        .with_semigroup(vec![3, 4, 5])
        .unwrap();
        let c = find_test_element(&rp).unwrap();
        let tau = big_test_ideal(&rp, &c, 4, 2).unwrap().result;
        let out = finite_transform_check(&rp, &tau, 4).unwrap();
        assert!(
            out.matches,
            "lhs {:?} rhs {:?}",
            out.lhs.render_canonical(),
            out.rhs.render_canonical()
        );
    }

    #[test]
    fn transform_requires_semigroup_presentation() {
        let rp = quotient(2, &["x", "y"], &["x*y"]);
        let tau = Ideal::parse(rp.ambient(), &["x", "y"]).unwrap();
        assert!(finite_transform_check(&rp, &tau, 4).is_err());
    }
}
