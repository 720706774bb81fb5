//! Finite-length graded modules presented by homogeneous relation matrices.
//!
//! A module is given as `M = ⊕_j R·e_j / (relation columns)` over a graded
//! quotient `R = A/I` with `I` homogeneous. Everything is computed through
//! graded slices: the degree-`d` piece is the span of the monomial-generator
//! pairs of that degree modulo the degree-`d` multiples of the relations and
//! of `I`. Finite length is certified, not assumed: once a slice vanishes at
//! a degree at or above every generator degree it stays zero (the ambient
//! variables act in degree one), and the scan refuses modules that never
//! produce such a slice below the caller's witness degree.
//!
//! On top of the slice bases the module offers the operator-level tools the
//! duality computations need: matrices for multiplication by an arbitrary
//! ring element, the Frobenius functor (entrywise bracket powers of the
//! relations, generator degrees scaled by `p^e`), the kernel description of
//! the tight closure of zero, and the Matlis dual with contragredient
//! variable action.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::field::Fp;
use crate::linalg::MatFp;
use crate::monomial::{monomials_of_total_degree, Monomial};
use crate::poly::{frobenius_exponent, PolyRing, Polynomial};
use crate::ring::RingPresentation;

/// A graded module presentation: free generators `e_j` in degrees
/// `gen_degrees[j]` modulo homogeneous relation columns. The defining ideal
/// of the ring presentation is imposed on every generator automatically and
/// does not need to appear among the columns.
#[derive(Debug, Clone)]
pub struct GradedModule {
    ring: Arc<PolyRing>,
    gen_degrees: Vec<i64>,
    relations: Vec<Vec<Polynomial>>,
}

/// Total degree of a homogeneous polynomial; `None` for zero or mixed.
fn homogeneous_degree(f: &Polynomial) -> Option<u64> {
    let mut deg = None;
    for (m, _) in f.terms() {
        match deg {
            None => deg = Some(m.total_degree()),
            Some(d) if d == m.total_degree() => {}
            Some(_) => return None,
        }
    }
    deg
}

impl GradedModule {
    pub fn new(
        ring: &Arc<PolyRing>,
        gen_degrees: Vec<i64>,
        relations: Vec<Vec<Polynomial>>,
    ) -> Result<GradedModule, AlgebraError> {
        for col in &relations {
            if col.len() != gen_degrees.len() {
                return Err(AlgebraError::precondition(
                    "relation column length must match the number of generators",
                ));
            }
            let mut col_degree: Option<i64> = None;
            for (j, entry) in col.iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                assert!(
                    *entry.ring() == *ring,
                    "relation entries must live in the module's ring"
                );
                let Some(d) = homogeneous_degree(entry) else {
                    return Err(AlgebraError::precondition(
                        "relation entries must be homogeneous",
                    ));
                };
                let total = d as i64 + gen_degrees[j];
                match col_degree {
                    None => col_degree = Some(total),
                    Some(t) if t == total => {}
                    Some(_) => {
                        return Err(AlgebraError::precondition(
                            "relation columns must be homogeneous across generators",
                        ))
                    }
                }
            }
        }
        Ok(GradedModule {
            ring: ring.clone(),
            gen_degrees,
            relations,
        })
    }

    /// The cyclic module `R/J` with its generator in degree zero.
    pub fn quotient_module(
        ring: &Arc<PolyRing>,
        j_gens: &[Polynomial],
    ) -> Result<GradedModule, AlgebraError> {
        let relations = j_gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| vec![g.clone()])
            .collect();
        GradedModule::new(ring, vec![0], relations)
    }

    pub fn free(ring: &Arc<PolyRing>, degrees: Vec<i64>) -> GradedModule {
        GradedModule {
            ring: ring.clone(),
            gen_degrees: degrees,
            relations: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gen_degrees(&self) -> &[i64] {
        &self.gen_degrees
    }

    pub fn relations(&self) -> &[Vec<Polynomial>] {
        &self.relations
    }

    /// The Frobenius functor `F^e`: every relation entry is raised to the
    /// `p^e`-th bracket power and generator degrees scale by `p^e`.
    pub fn frobenius_functor(&self, e: u32) -> GradedModule {
        let q = frobenius_exponent(self.ring.characteristic(), e) as i64;
        GradedModule {
            ring: self.ring.clone(),
            gen_degrees: self.gen_degrees.iter().map(|d| d * q).collect(),
            relations: self
                .relations
                .iter()
                .map(|col| col.iter().map(|r| r.frobenius_power(e)).collect())
                .collect(),
        }
    }
}

/// One graded slice: the monomial-generator pairs of a fixed degree together
/// with the row-reduced relation subspace and the coset basis (free columns).
#[derive(Debug)]
struct Slice {
    ambient: Vec<(Monomial, usize)>,
    index: HashMap<(Monomial, usize), usize>,
    rel: MatFp,
    rel_pivots: Vec<usize>,
    free_cols: Vec<usize>,
    offset: usize,
}

impl Slice {
    fn dim(&self) -> usize {
        self.free_cols.len()
    }
}

/// A certified k-basis of a finite-length graded module, with enough
/// structure to express arbitrary elements and ring actions in coordinates.
#[derive(Debug)]
pub struct ModuleBasis {
    ring: Arc<PolyRing>,
    gen_degrees: Vec<i64>,
    slices: BTreeMap<i64, Slice>,
    /// Degrees above this are certified zero.
    top_degree: i64,
    total_dim: usize,
    basis_degrees: Vec<i64>,
}

impl ModuleBasis {
    /// Compute slice bases degree by degree until a vanishing slice at or
    /// above every generator degree certifies finite length. `witness` is
    /// the degree at which to give up and declare the module not visibly
    /// finite length.
    pub fn compute(
        rp: &RingPresentation,
        module: &GradedModule,
        witness: i64,
    ) -> Result<ModuleBasis, AlgebraError> {
        assert!(
            *module.ring == **rp.ambient(),
            "module must live over the presentation's ambient ring"
        );
        for g in rp.defining().gens() {
            if homogeneous_degree(g).is_none() {
                return Err(AlgebraError::unsupported(
                    "graded module computations require a homogeneous defining ideal",
                ));
            }
        }
        if module.gen_degrees.is_empty() {
            return Ok(ModuleBasis {
                ring: module.ring.clone(),
                gen_degrees: Vec::new(),
                slices: BTreeMap::new(),
                top_degree: i64::MIN,
                total_dim: 0,
                basis_degrees: Vec::new(),
            });
        }
        let min_s = *module.gen_degrees.iter().min().expect("nonempty");
        let max_s = *module.gen_degrees.iter().max().expect("nonempty");
        let mut slices = BTreeMap::new();
        let mut offset = 0usize;
        let mut basis_degrees = Vec::new();
        let mut d = min_s;
        loop {
            if d > witness {
                return Err(AlgebraError::precondition(
                    "no vanishing slice found below the witness degree; \
                     the module does not look finite length",
                ));
            }
            let slice = build_slice(rp, module, d, offset)?;
            offset += slice.dim();
            let dim = slice.dim();
            basis_degrees.extend(std::iter::repeat(d).take(dim));
            slices.insert(d, slice);
            if dim == 0 && d >= max_s {
                break;
            }
            d += 1;
        }
        Ok(ModuleBasis {
            ring: module.ring.clone(),
            gen_degrees: module.gen_degrees.clone(),
            slices,
            top_degree: d,
            total_dim: offset,
            basis_degrees,
        })
    }

    pub fn dim(&self) -> usize {
        self.total_dim
    }

    /// Degree of each global basis vector.
    pub fn basis_degrees(&self) -> &[i64] {
        &self.basis_degrees
    }

    /// Coordinates of a module element given as one polynomial per
    /// generator. Terms in certified-zero degrees vanish.
    pub fn element_coords(&self, element: &[Polynomial]) -> Vec<Fp> {
        assert_eq!(element.len(), self.gen_degrees.len());
        let field = *self.ring.field();
        let mut buckets: BTreeMap<i64, Vec<(usize, Monomial, Fp)>> = BTreeMap::new();
        for (j, poly) in element.iter().enumerate() {
            for (m, c) in poly.terms() {
                let degree = m.total_degree() as i64 + self.gen_degrees[j];
                buckets
                    .entry(degree)
                    .or_default()
                    .push((j, m.clone(), *c));
            }
        }
        let mut global = vec![field.zero(); self.total_dim];
        for (degree, terms) in buckets {
            if degree > self.top_degree {
                continue;
            }
            let slice = self
                .slices
                .get(&degree)
                .expect("degrees at or below top are all scanned");
            let mut ambient = vec![field.zero(); slice.ambient.len()];
            for (j, m, c) in terms {
                let idx = slice.index[&(m, j)];
                ambient[idx] = field.add(ambient[idx], c);
            }
            let local = reduce_in_slice(&self.ring, slice, ambient);
            for (k, v) in local.into_iter().enumerate() {
                global[slice.offset + k] = v;
            }
        }
        global
    }

    /// The matrix of multiplication by `g` in the global basis, stored as
    /// `rows[target][source]`.
    pub fn multiplication_matrix(&self, g: &Polynomial) -> Vec<Vec<Fp>> {
        let field = *self.ring.field();
        let mut rows = vec![vec![field.zero(); self.total_dim]; self.total_dim];
        for slice in self.slices.values() {
            for (local, &col) in slice.free_cols.iter().enumerate() {
                let (m0, j) = slice.ambient[col].clone();
                let mut element = vec![self.ring.zero(); self.gen_degrees.len()];
                element[j] = g.mul_term(&m0, field.one());
                let image = self.element_coords(&element);
                let source = slice.offset + local;
                for (target, &v) in image.iter().enumerate() {
                    if v != field.zero() {
                        rows[target][source] = v;
                    }
                }
            }
        }
        rows
    }

    /// Coordinates in the Frobenius image: the global matrix of the
    /// `p^e`-semilinear map `z ↦ z^{[p^e]} ∈ F^e(M)` (linear over the prime
    /// field), expressed from this basis to `target`, which must be the
    /// basis of `frobenius_functor(e)` of the same module.
    pub fn frobenius_map_matrix(&self, target: &ModuleBasis, e: u32) -> Vec<Vec<Fp>> {
        let field = *self.ring.field();
        let q = frobenius_exponent(self.ring.characteristic(), e);
        let mut rows = vec![vec![field.zero(); self.total_dim]; target.total_dim];
        for slice in self.slices.values() {
            for (local, &col) in slice.free_cols.iter().enumerate() {
                let (m0, j) = slice.ambient[col].clone();
                let mut element = vec![self.ring.zero(); self.gen_degrees.len()];
                element[j] = self.ring.monomial(m0.pow(q), field.one());
                let image = target.element_coords(&element);
                let source = slice.offset + local;
                for (t, &v) in image.iter().enumerate() {
                    if v != field.zero() {
                        rows[t][source] = v;
                    }
                }
            }
        }
        rows
    }
}

fn build_slice(
    rp: &RingPresentation,
    module: &GradedModule,
    degree: i64,
    offset: usize,
) -> Result<Slice, AlgebraError> {
    let ring = &module.ring;
    let field = *ring.field();
    let nvars = ring.nvars();
    let mut ambient = Vec::new();
    for (j, &s) in module.gen_degrees.iter().enumerate() {
        let rem = degree - s;
        if rem < 0 {
            continue;
        }
        for m in monomials_of_total_degree(nvars, rem as u64) {
            ambient.push((m, j));
        }
    }
    let index: HashMap<(Monomial, usize), usize> = ambient
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, key)| (key, i))
        .collect();
    let mut rel = MatFp::new(field, ambient.len());
    let mut add_row = |combo: Vec<(usize, Polynomial)>| {
        let mut row = vec![field.zero(); index.len()];
        let mut nonzero = false;
        for (j, poly) in combo {
            for (m, c) in poly.terms() {
                let idx = index[&(m.clone(), j)];
                row[idx] = field.add(row[idx], *c);
                nonzero = true;
            }
        }
        if nonzero {
            rel.push_row(row);
        }
    };
    // Multiples of the relation columns landing in this degree.
    for col in &module.relations {
        let mut col_degree = None;
        for (j, entry) in col.iter().enumerate() {
            if let Some(d) = homogeneous_degree(entry) {
                col_degree = Some(d as i64 + module.gen_degrees[j]);
                break;
            }
        }
        let Some(cd) = col_degree else { continue };
        let rem = degree - cd;
        if rem < 0 {
            continue;
        }
        for mu in monomials_of_total_degree(nvars, rem as u64) {
            add_row(
                col.iter()
                    .enumerate()
                    .map(|(j, entry)| (j, entry.mul_term(&mu, field.one())))
                    .collect(),
            );
        }
    }
    // Multiples of the defining ideal on each generator.
    for g in rp.defining().gens() {
        let gd = homogeneous_degree(g).expect("validated by compute") as i64;
        for (j, &s) in module.gen_degrees.iter().enumerate() {
            let rem = degree - gd - s;
            if rem < 0 {
                continue;
            }
            for mu in monomials_of_total_degree(nvars, rem as u64) {
                add_row(vec![(j, g.mul_term(&mu, field.one()))]);
            }
        }
    }
    let rel_pivots = rel.rref();
    let pivot_set: std::collections::HashSet<usize> = rel_pivots.iter().copied().collect();
    let free_cols: Vec<usize> = (0..ambient.len())
        .filter(|c| !pivot_set.contains(c))
        .collect();
    Ok(Slice {
        ambient,
        index,
        rel,
        rel_pivots,
        free_cols,
        offset,
    })
}

/// Reduce an ambient coordinate vector modulo the relation subspace and
/// read off coset coordinates on the free columns.
fn reduce_in_slice(ring: &Arc<PolyRing>, slice: &Slice, mut ambient: Vec<Fp>) -> Vec<Fp> {
    let field = *ring.field();
    for (row, &pc) in slice.rel.rows().iter().zip(&slice.rel_pivots) {
        let factor = ambient[pc];
        if factor == field.zero() {
            continue;
        }
        for (entry, &r) in ambient.iter_mut().zip(row) {
            *entry = field.sub(*entry, field.mul(factor, r));
        }
    }
    slice.free_cols.iter().map(|&c| ambient[c]).collect()
}

/// Basis of the tight closure of zero: all `z` with `c·z^{[p^e]} = 0` in
/// `F^e(M)` for every `1 ≤ e ≤ e_max`. Returned as global coordinate
/// vectors with respect to `basis`.
pub fn tight_closure_zero(
    rp: &RingPresentation,
    module: &GradedModule,
    basis: &ModuleBasis,
    c: &Polynomial,
    e_max: u32,
) -> Result<Vec<Vec<Fp>>, AlgebraError> {
    if e_max == 0 {
        return Err(AlgebraError::precondition("e_max must be at least 1"));
    }
    let field = *module.ring.field();
    let mut stacked = MatFp::new(field, basis.dim());
    for e in 1..=e_max {
        let fe = module.frobenius_functor(e);
        let fe_basis = ModuleBasis::compute(rp, &fe, default_witness(rp, &fe))?;
        let frob = basis.frobenius_map_matrix(&fe_basis, e);
        let mult = fe_basis.multiplication_matrix(c);
        // rows of (mult ∘ frob): target coords of c·z^{[q]}.
        for target_row in 0..fe_basis.dim() {
            let mut row = vec![field.zero(); basis.dim()];
            let mut nonzero = false;
            for source in 0..basis.dim() {
                let mut acc = field.zero();
                for (k, frob_row) in frob.iter().enumerate() {
                    acc = field.add(acc, field.mul(mult[target_row][k], frob_row[source]));
                }
                if acc != field.zero() {
                    nonzero = true;
                }
                row[source] = acc;
            }
            if nonzero {
                stacked.push_row(row);
            }
        }
    }
    Ok(stacked.kernel_basis())
}

/// A generous degree bound past which a finite-length module must have
/// shown a vanishing slice: generator degrees plus the total weight of all
/// relation and defining-ideal degrees.
pub fn default_witness(rp: &RingPresentation, module: &GradedModule) -> i64 {
    let max_s = module.gen_degrees.iter().copied().max().unwrap_or(0);
    let mut bound = max_s + 2;
    for col in &module.relations {
        let col_deg = col
            .iter()
            .filter_map(homogeneous_degree)
            .max()
            .unwrap_or(0) as i64;
        bound += col_deg;
    }
    for g in rp.defining().gens() {
        bound += g.total_degree().unwrap_or(0) as i64;
    }
    bound
}

/// The Matlis dual of a finite-length module: one generator per basis
/// vector of `M` in the negated degree, with the contragredient variable
/// action `x_i·f_b = Σ f_{b'}·(coefficient of b in x_i·b')`.
pub fn matlis_dual(
    rp: &RingPresentation,
    basis: &ModuleBasis,
) -> Result<(GradedModule, ModuleBasis), AlgebraError> {
    let ring = basis.ring.clone();
    let field = *ring.field();
    let n = basis.dim();
    let gen_degrees: Vec<i64> = basis.basis_degrees.iter().map(|d| -d).collect();
    let mut relations = Vec::new();
    for i in 0..ring.nvars() {
        let action = basis.multiplication_matrix(&ring.var(i));
        for b in 0..n {
            let mut col = vec![ring.zero(); n];
            col[b] = ring.var(i);
            for bp in 0..n {
                let coeff = action[b][bp];
                if coeff != field.zero() {
                    col[bp] = col[bp].sub(&ring.monomial(Monomial::one(ring.nvars()), coeff));
                }
            }
            relations.push(col);
        }
    }
    let dual = GradedModule::new(&ring, gen_degrees, relations)?;
    let dual_basis = ModuleBasis::compute(rp, &dual, default_witness(rp, &dual))?;
    if dual_basis.dim() != n {
        return Err(AlgebraError::internal(format!(
            "Matlis dual dimension {} does not match the module dimension {}",
            dual_basis.dim(),
            n
        )));
    }
    Ok((dual, dual_basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Ideal;
    use crate::monomial::MonomialOrder;

    fn node(p: u32) -> RingPresentation {
        let r = PolyRing::new(p, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let i = Ideal::parse(&r, &["x*y"]).unwrap();
        RingPresentation::new(r, i).unwrap()
    }

    fn cyclic(rp: &RingPresentation, gens: &[&str]) -> GradedModule {
        let polys = Ideal::parse(rp.ambient(), gens).unwrap().gens().to_vec();
        GradedModule::quotient_module(rp.ambient(), &polys).unwrap()
    }

    #[test]
    fn residue_field_has_dimension_one() {
        let rp = node(2);
        let m = cyclic(&rp, &["x", "y"]);
        let basis = ModuleBasis::compute(&rp, &m, 16).unwrap();
        assert_eq!(basis.dim(), 1);
        assert_eq!(basis.basis_degrees(), &[0]);
    }

    #[test]
    fn square_socle_module_has_dimension_three() {
        let rp = node(2);
        let m = cyclic(&rp, &["x^2", "y^2"]);
        let basis = ModuleBasis::compute(&rp, &m, 16).unwrap();
        // 1, x, y; the cross term xy dies in the ring.
        assert_eq!(basis.dim(), 3);
        assert_eq!(basis.basis_degrees(), &[0, 1, 1]);
    }

    #[test]
    fn infinite_length_module_is_rejected() {
        let rp = node(2);
        let m = cyclic(&rp, &["y"]);
        // R/(y) is the polynomial ring in x: never a vanishing slice.
        assert!(ModuleBasis::compute(&rp, &m, 24).is_err());
    }

    #[test]
    fn nonhomogeneous_relations_are_rejected() {
        let rp = node(2);
        let polys = Ideal::parse(rp.ambient(), &["x^2 + y"]).unwrap().gens().to_vec();
        assert!(GradedModule::quotient_module(rp.ambient(), &polys).is_err());
    }

    #[test]
    fn multiplication_matrix_acts_correctly() {
        let rp = node(2);
        let m = cyclic(&rp, &["x^2", "y^2"]);
        let basis = ModuleBasis::compute(&rp, &m, 16).unwrap();
        let x = rp.ambient().var(0);
        let mx = basis.multiplication_matrix(&x);
        // x * 1 = x, x * x = 0, x * y = 0.
        let one_coords = basis.element_coords(&[rp.ambient().one()]);
        let field = *rp.ambient().field();
        let image: Vec<Fp> = (0..basis.dim())
            .map(|t| {
                let mut acc = field.zero();
                for (s, &v) in one_coords.iter().enumerate() {
                    acc = field.add(acc, field.mul(mx[t][s], v));
                }
                acc
            })
            .collect();
        let x_coords = basis.element_coords(&[x.clone()]);
        assert_eq!(image, x_coords);
        // x annihilates both degree-one basis vectors.
        for s in 1..3 {
            let col: Vec<Fp> = (0..3).map(|t| mx[t][s]).collect();
            assert!(col.iter().all(|&v| v == field.zero()));
        }
    }

    #[test]
    fn frobenius_functor_on_principal_quotients() {
        let rp = node(2);
        let m = cyclic(&rp, &["x^2", "y^2"]);
        let f1 = m.frobenius_functor(1);
        let basis = ModuleBasis::compute(&rp, &f1, 32).unwrap();
        // F(M) = R/(x^4, y^4): basis 1, x, x^2, x^3, y, y^2, y^3.
        assert_eq!(basis.dim(), 7);
    }

    #[test]
    fn frobenius_of_free_module_is_free() {
        let rp = node(3);
        let free = GradedModule::free(rp.ambient(), vec![0]);
        let f2 = free.frobenius_functor(2);
        assert!(f2.relations().is_empty());
        assert_eq!(f2.gen_degrees(), &[0]);
    }

    #[test]
    fn tight_closure_zero_in_the_residue_field_vanishes() {
        let rp = node(2);
        let m = cyclic(&rp, &["x", "y"]);
        let basis = ModuleBasis::compute(&rp, &m, 16).unwrap();
        let c = Ideal::parse(rp.ambient(), &["x + y"]).unwrap().gens()[0].clone();
        let z = tight_closure_zero(&rp, &m, &basis, &c, 2).unwrap();
        assert!(z.is_empty());
    }

    #[test]
    fn tight_closure_zero_in_the_square_socle_module() {
        let rp = node(2);
        let m = cyclic(&rp, &["x^2", "y^2"]);
        let basis = ModuleBasis::compute(&rp, &m, 16).unwrap();
        let c = Ideal::parse(rp.ambient(), &["x + y"]).unwrap().gens()[0].clone();
        let z = tight_closure_zero(&rp, &m, &basis, &c, 2).unwrap();
        // c·z^{[q]} in F^e(M) = R/(x^{2q}, y^{2q}) never vanishes on 1, x, y:
        // (x+y)·x^q = x^{q+1} survives, so only the zero vector is in 0^*.
        assert!(z.is_empty());
    }

    #[test]
    fn matlis_dual_preserves_dimension_and_double_dual_degrees() {
        let rp = node(2);
        let m = cyclic(&rp, &["x^2", "y^2"]);
        let basis = ModuleBasis::compute(&rp, &m, 16).unwrap();
        let (_, dual_basis) = matlis_dual(&rp, &basis).unwrap();
        assert_eq!(dual_basis.dim(), 3);
        let mut dual_degs = dual_basis.basis_degrees().to_vec();
        dual_degs.sort_unstable();
        assert_eq!(dual_degs, vec![-1, -1, 0]);
        let (_, double_basis) = matlis_dual(&rp, &dual_basis).unwrap();
        let mut degs = double_basis.basis_degrees().to_vec();
        degs.sort_unstable();
        assert_eq!(degs, vec![0, 1, 1]);
    }

    #[test]
    fn dual_socle_structure_of_the_square_module() {
        // L = R/(x^2, y^2) over the node has one generator and a
        // two-dimensional socle; its dual has a one-dimensional socle.
        let rp = node(2);
        let m = cyclic(&rp, &["x^2", "y^2"]);
        let basis = ModuleBasis::compute(&rp, &m, 16).unwrap();
        let (_, dual_basis) = matlis_dual(&rp, &basis).unwrap();
        let field = *rp.ambient().field();
        let mx = dual_basis.multiplication_matrix(&rp.ambient().var(0));
        let my = dual_basis.multiplication_matrix(&rp.ambient().var(1));
        // Socle = common kernel of x and y.
        let mut stacked = MatFp::new(field, dual_basis.dim());
        for row in mx.into_iter().chain(my) {
            stacked.push_row(row);
        }
        assert_eq!(stacked.kernel_basis().len(), 1);
    }
}
