//! Brute-force verification of the Cartier machinery by bounded-degree
//! linear algebra, with no Fedder-type shortcuts anywhere on this path.
//!
//! A `p^{-e}`-linear map out of `R = A/I` is determined by its values
//! `v_a = φ(ᵉx^a)` on the Frobenius digit box `a ∈ [0, p^e)^n`, and
//! well-definedness is equivalent to the linear constraints
//! `Σ_a comp_a(x^t·g)·v_a ≡ 0 (mod I)` over the generators `g` of `I` and
//! twists `t` in the same box: over the free ambient ring every relation
//! among the `ᵉx^a` decomposes through the digit components of the
//! multiples `x^t·g`. Solving those constraints enumerates the entire
//! homomorphism space, and spans of the resulting values rebuild level
//! images and module interiors from first principles.
//!
//! Ring-valued maps take values in the standard-monomial span up to a
//! caller-supplied degree cap, so image comparisons happen on bounded
//! truncations: both the claimed ideal and the oracle's span are cut to
//! representatives of degree at most `d` (exact, since grevlex division
//! never raises degree). A strict deficit on the oracle side is reported
//! as a raise-the-cap diagnostic rather than a refutation, because a
//! low cap can hide homomorphisms; the reverse inclusion failing refutes
//! the checked implementation outright. Module-valued maps into a
//! finite-length module need no truncation and the Matlis duality check
//! built on them is exact.

use std::collections::HashMap;

use crate::cartier::{cartier_image, pe_components};
use crate::error::AlgebraError;
use crate::field::Fp;
use crate::gradedmod::{
    default_witness, matlis_dual, tight_closure_zero, GradedModule, ModuleBasis,
};
use crate::ideal::Ideal;
use crate::linalg::{same_span, span_contains, MatFp};
use crate::monomial::{monomials_in_box, monomials_of_total_degree, Monomial};
use crate::poly::{frobenius_exponent, Polynomial};
use crate::ring::RingPresentation;

/// The standard monomials of `R = A/I` up to a degree cap: monomials not
/// divisible by any leading term of the reduced Groebner basis of `I`.
#[derive(Debug, Clone)]
pub struct GradedSlice {
    degree_cap: u64,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl GradedSlice {
    pub fn standard_monomials(rp: &RingPresentation, degree_cap: u64) -> GradedSlice {
        let leading: Vec<Monomial> = rp
            .defining()
            .groebner()
            .basis()
            .iter()
            .filter_map(|g| g.leading().map(|(m, _)| m.clone()))
            .collect();
        let nvars = rp.ambient().nvars();
        let mut monomials = Vec::new();
        for d in 0..=degree_cap {
            for m in monomials_of_total_degree(nvars, d) {
                if !leading.iter().any(|lt| lt.divides(&m)) {
                    monomials.push(m);
                }
            }
        }
        let index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        GradedSlice {
            degree_cap,
            monomials,
            index,
        }
    }

    pub fn degree_cap(&self) -> u64 {
        self.degree_cap
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Coordinates of a polynomial already in normal form. `None` when a
    /// term falls outside the slice (degree above the cap).
    pub fn coords(&self, f: &Polynomial) -> Option<Vec<Fp>> {
        let field = f.ring().field();
        let mut v = vec![field.zero(); self.monomials.len()];
        for (m, c) in f.terms() {
            let idx = self.index.get(m)?;
            v[*idx] = *c;
        }
        Some(v)
    }
}

/// A basis of the space of `p^{-e}`-linear maps `ᵉR → R` with values
/// truncated to standard monomials of degree at most the slice cap. Each
/// basis map stores one polynomial value per digit monomial.
#[derive(Debug)]
pub struct HomBasis {
    pub e: u32,
    pub digits: Vec<Monomial>,
    pub maps: Vec<Vec<Polynomial>>,
}

/// Enumerate the truncated homomorphism space by solving the
/// well-definedness constraints over the digit box.
pub fn hom_space(rp: &RingPresentation, e: u32, d: u64) -> Result<HomBasis, AlgebraError> {
    if e == 0 {
        return Err(AlgebraError::precondition(
            "homomorphism enumeration needs e >= 1",
        ));
    }
    let ring = rp.ambient();
    let field = *ring.field();
    let q = frobenius_exponent(rp.characteristic(), e);
    let digits = monomials_in_box(&vec![q; ring.nvars()]);
    let slice = GradedSlice::standard_monomials(rp, d);
    let unknowns = digits.len() * slice.len();

    // Constraint coordinates live in a taller slice: products of a digit
    // component with a value monomial stay within cap + component degree.
    let mut max_comp_deg = 0u64;
    let mut component_rows: Vec<Vec<(usize, Polynomial)>> = Vec::new();
    for g in rp.defining().gens() {
        for t in &digits {
            let shifted = g.mul_term(t, field.one());
            let decomp = pe_components(&shifted, e);
            let mut row = Vec::new();
            for (a, comp) in decomp.components() {
                let idx = digits.iter().position(|m| m == a).expect("digit in box");
                max_comp_deg = max_comp_deg.max(comp.total_degree().unwrap_or(0));
                row.push((idx, comp.clone()));
            }
            if !row.is_empty() {
                component_rows.push(row);
            }
        }
    }
    let tall = GradedSlice::standard_monomials(rp, d + max_comp_deg);
    let mut constraints = MatFp::new(field, unknowns);
    for row in &component_rows {
        let mut blocks: Vec<(usize, Vec<Fp>)> = Vec::new();
        for (digit_idx, comp) in row {
            for (mu_idx, mu) in slice.monomials().iter().enumerate() {
                let product = rp.defining().normal_form(&comp.mul_term(mu, field.one()));
                if product.is_zero() {
                    continue;
                }
                let coords = tall
                    .coords(&product)
                    .expect("normal form stays within the tall slice");
                blocks.push((digit_idx * slice.len() + mu_idx, coords));
            }
        }
        for coord in 0..tall.len() {
            let mut crow = vec![field.zero(); unknowns];
            let mut nonzero = false;
            for (col, coords) in &blocks {
                if coords[coord] != field.zero() {
                    crow[*col] = coords[coord];
                    nonzero = true;
                }
            }
            if nonzero {
                constraints.push_row(crow);
            }
        }
    }
    let kernel = constraints.kernel_basis();
    let maps = kernel
        .into_iter()
        .map(|sol| {
            digits
                .iter()
                .enumerate()
                .map(|(digit_idx, _)| {
                    let mut value = ring.zero();
                    for (mu_idx, mu) in slice.monomials().iter().enumerate() {
                        let c = sol[digit_idx * slice.len() + mu_idx];
                        if c != field.zero() {
                            value = value.add(&ring.monomial(mu.clone(), c));
                        }
                    }
                    value
                })
                .collect()
        })
        .collect();
    Ok(HomBasis { e, digits, maps })
}

/// Apply one enumerated map to `ᵉf`: split `f` into digit components and
/// pair them with the stored values.
pub fn apply_hom(
    rp: &RingPresentation,
    basis: &HomBasis,
    values: &[Polynomial],
    f: &Polynomial,
) -> Polynomial {
    let ring = rp.ambient();
    let decomp = pe_components(f, basis.e);
    let mut out = ring.zero();
    for (a, comp) in decomp.components() {
        let idx = basis
            .digits
            .iter()
            .position(|m| m == a)
            .expect("component digit within box");
        out = out.add(&comp.mul(&values[idx]));
    }
    rp.defining().normal_form(&out)
}

/// The level-`e` image `Σ_φ φ(ᵉJ)` rebuilt from the enumerated maps, as an
/// ambient ideal (the defining ideal is included).
pub fn brute_hom_image(
    rp: &RingPresentation,
    j: &Ideal,
    e: u32,
    d: u64,
) -> Result<Ideal, AlgebraError> {
    let ring = rp.ambient();
    let field = *ring.field();
    let homs = hom_space(rp, e, d)?;
    let lifted = rp.lift(j);
    let mut gens: Vec<Polynomial> = rp.defining().gens().to_vec();
    let mut seen = std::collections::HashSet::new();
    for values in &homs.maps {
        for g in lifted.gens() {
            for t in &homs.digits {
                let value = apply_hom(rp, &homs, values, &g.mul_term(t, field.one()));
                if value.is_zero() {
                    continue;
                }
                if seen.insert(format!("{value}")) {
                    gens.push(value.clone());
                }
            }
        }
    }
    Ok(Ideal::new(ring, gens))
}

/// Basis of the degree-at-most-`d` truncation of an ambient ideal, as
/// coordinate rows over the standard-monomial slice. Exact: grevlex
/// division never raises degree, so every element of the ideal with a
/// representative of degree ≤ d is a combination of monomial multiples of
/// Groebner basis elements within the cap.
pub fn truncated_span(rp: &RingPresentation, ideal: &Ideal, slice: &GradedSlice) -> Vec<Vec<Fp>> {
    let ring = rp.ambient();
    let field = *ring.field();
    let d = slice.degree_cap();
    let mut rows = Vec::new();
    for b in ideal.groebner().basis() {
        let Some(bd) = b.total_degree() else { continue };
        if bd > d {
            continue;
        }
        for m_deg in 0..=(d - bd) {
            for m in monomials_of_total_degree(ring.nvars(), m_deg) {
                let nf = rp.defining().normal_form(&b.mul_term(&m, field.one()));
                if nf.is_zero() {
                    continue;
                }
                let coords = slice
                    .coords(&nf)
                    .expect("normal form of a capped product stays in the slice");
                rows.push(coords);
            }
        }
    }
    rows
}

/// Outcome of checking the Cartier engine against the brute-force oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleComparison {
    /// Truncations agree exactly.
    Agree,
    /// The oracle span is a strict subspace of the engine's: the degree cap
    /// is too small to exhibit every homomorphism, raise `d` and retry.
    RaiseDegreeCap,
    /// The oracle produced image elements the engine misses: the engine is
    /// wrong.
    EngineMissing,
}

/// Compare `cartier_image(J, e)` against the enumerated homomorphism
/// images on the degree-≤-`d` truncation.
pub fn compare_level_image(
    rp: &RingPresentation,
    j: &Ideal,
    e: u32,
    d: u64,
) -> Result<OracleComparison, AlgebraError> {
    let slice = GradedSlice::standard_monomials(rp, d);
    let engine = cartier_image(rp, j, e)?;
    let oracle = brute_hom_image(rp, j, e, d)?;
    let engine_rows = truncated_span(rp, &engine, &slice);
    let oracle_rows = truncated_span(rp, &oracle, &slice);
    let field = *rp.ambient().field();
    if same_span(field, slice.len(), &engine_rows, &oracle_rows) {
        return Ok(OracleComparison::Agree);
    }
    if span_contains(field, slice.len(), &engine_rows, &oracle_rows) {
        return Ok(OracleComparison::RaiseDegreeCap);
    }
    Ok(OracleComparison::EngineMissing)
}

/// A basis of the maps `ᵉR → L` into a finite-length module: the same
/// digit-box constraints with values in the module's coordinate space.
/// Exact, no truncation. Returns one concatenated coordinate vector per
/// basis map, blocks indexed by the digit box.
pub fn module_hom_space(
    rp: &RingPresentation,
    basis: &ModuleBasis,
    e: u32,
) -> Result<(Vec<Monomial>, Vec<Vec<Fp>>), AlgebraError> {
    if e == 0 {
        return Err(AlgebraError::precondition(
            "homomorphism enumeration needs e >= 1",
        ));
    }
    let ring = rp.ambient();
    let field = *ring.field();
    let q = frobenius_exponent(rp.characteristic(), e);
    let digits = monomials_in_box(&vec![q; ring.nvars()]);
    let dim = basis.dim();
    let unknowns = digits.len() * dim;
    let mut constraints = MatFp::new(field, unknowns);
    for g in rp.defining().gens() {
        for t in &digits {
            let decomp = pe_components(&g.mul_term(t, field.one()), e);
            let mut blocks: Vec<(usize, Vec<Vec<Fp>>)> = Vec::new();
            for (a, comp) in decomp.components() {
                let idx = digits.iter().position(|m| m == a).expect("digit in box");
                blocks.push((idx, basis.multiplication_matrix(comp)));
            }
            for target in 0..dim {
                let mut row = vec![field.zero(); unknowns];
                let mut nonzero = false;
                for (idx, mat) in &blocks {
                    for source in 0..dim {
                        let v = mat[target][source];
                        if v != field.zero() {
                            row[idx * dim + source] = field.add(row[idx * dim + source], v);
                            nonzero = true;
                        }
                    }
                }
                if nonzero {
                    constraints.push_row(row);
                }
            }
        }
    }
    Ok((digits, constraints.kernel_basis()))
}

/// Dimension of the tight interior `L_*` of a finite-length module: the
/// span of `c·L` together with the values `φ(ᵉc)` of every map `ᵉR → L`
/// for `1 ≤ e ≤ e_max`.
pub fn module_interior_dim(
    rp: &RingPresentation,
    basis: &ModuleBasis,
    c: &Polynomial,
    e_max: u32,
) -> Result<usize, AlgebraError> {
    let field = *rp.ambient().field();
    let dim = basis.dim();
    let mut span = MatFp::new(field, dim);
    let mult_c = basis.multiplication_matrix(c);
    for source in 0..dim {
        let col: Vec<Fp> = (0..dim).map(|t| mult_c[t][source]).collect();
        span.push_row(col);
    }
    for e in 1..=e_max {
        let (digits, homs) = module_hom_space(rp, basis, e)?;
        let decomp = pe_components(c, e);
        let comp_mats: Vec<(usize, Vec<Vec<Fp>>)> = decomp
            .components()
            .iter()
            .map(|(a, comp)| {
                let idx = digits.iter().position(|m| m == a).expect("digit in box");
                (idx, basis.multiplication_matrix(comp))
            })
            .collect();
        for hom in &homs {
            let mut value = vec![field.zero(); dim];
            for (idx, mat) in &comp_mats {
                for target in 0..dim {
                    let mut acc = field.zero();
                    for source in 0..dim {
                        acc = field.add(acc, field.mul(mat[target][source], hom[idx * dim + source]));
                    }
                    value[target] = field.add(value[target], acc);
                }
            }
            span.push_row(value);
        }
    }
    Ok(span.rref().len())
}

/// Report of the Matlis duality identity on a finite-length module.
#[derive(Debug, Clone)]
pub struct DualityReport {
    pub dim_module: usize,
    pub dim_interior: usize,
    pub dim_zero_closure_dual: usize,
    pub holds: bool,
}

/// Check `dim L_* = dim L − dim 0^*_{L^∨}`: the interior of `L` computed
/// by direct map enumeration against the tight closure of zero in the
/// Matlis dual computed through the Frobenius functor.
pub fn duality_check(
    rp: &RingPresentation,
    module: &GradedModule,
    c: &Polynomial,
    e_max: u32,
) -> Result<DualityReport, AlgebraError> {
    if !rp.is_reduced()? {
        return Err(AlgebraError::precondition(
            "the duality check requires a reduced ring",
        ));
    }
    if !rp.avoids_minimal_primes(c)? {
        return Err(AlgebraError::precondition(
            "the duality test element must avoid every minimal prime",
        ));
    }
    let basis = ModuleBasis::compute(rp, module, default_witness(rp, module))?;
    let dim_module = basis.dim();
    let dim_interior = module_interior_dim(rp, &basis, c, e_max)?;
    let (dual, dual_basis) = matlis_dual(rp, &basis)?;
    let closure = tight_closure_zero(rp, &dual, &dual_basis, c, e_max)?;
    let dim_zero_closure_dual = closure.len();
    Ok(DualityReport {
        dim_module,
        dim_interior,
        dim_zero_closure_dual,
        holds: dim_interior == dim_module - dim_zero_closure_dual,
    })
}
