//! Buchberger's algorithm with Gebauer-Moeller pair pruning and cofactor
//! tracking.
//!
//! The engine returns the reduced Groebner basis (monic, mutually reduced,
//! sorted descending by leading monomial), which is a canonical form for the
//! ideal: two generator sets generate the same ideal iff their reduced bases
//! coincide. Every basis element carries a cofactor vector expressing it as a
//! combination of the original generators, and [`GroebnerBasis::reduce_with_cofactors`]
//! produces membership certificates `target = normal_form + sum c_j * gen_j`
//! that callers can replay term by term.

use std::cmp::Ordering;
use std::sync::{Arc, OnceLock};

use crate::field::Fp;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

/// Certificate produced by division with remainder against an ideal:
/// `target = normal_form + sum cofactors[j] * gens[j]`, and no term of
/// `normal_form` is divisible by any leading monomial of the reduced basis.
#[derive(Debug, Clone)]
pub struct CofactorCertificate {
    pub target: Polynomial,
    pub normal_form: Polynomial,
    pub cofactors: Vec<Polynomial>,
}

impl CofactorCertificate {
    /// Replays the certificate against the generators it refers to.
    pub fn verify(&self, gens: &[Polynomial]) -> bool {
        let ring = self.target.ring().clone();
        let mut acc = self.normal_form.clone();
        assert_eq!(self.cofactors.len(), gens.len());
        for (c, g) in self.cofactors.iter().zip(gens) {
            acc = acc.add(&c.mul(g));
        }
        acc == self.target && ring == *self.target.ring()
    }
}

#[derive(Debug, Clone)]
struct Tracked {
    poly: Polynomial, // monic
    cof: Vec<Polynomial>,
}

/// Reduced Groebner basis of an ideal, with cofactors over the original
/// generator list.
///
/// Cofactor tracking multiplies the cost of every reduction by the number of
/// original generators, so the table is built lazily: the basis itself is
/// computed without tracking, and the first certificate request replays the
/// (deterministic) computation with tracking switched on.
#[derive(Debug)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    basis: Vec<Polynomial>,
    cofactors: OnceLock<Vec<Vec<Polynomial>>>,
}

fn zero_vec(ring: &Arc<PolyRing>, n: usize) -> Vec<Polynomial> {
    (0..n).map(|_| ring.zero()).collect()
}

/// Full normal form of `f` against `basis`. Returns the remainder and, for
/// each basis element, the multiplier polynomial consumed during reduction,
/// so that `f = rem + sum used[k] * basis[k].poly`.
fn divide(f: &Polynomial, basis: &[Tracked], track: bool) -> (Polynomial, Vec<Polynomial>) {
    let ring = f.ring().clone();
    let field = *ring.field();
    let mut work = f.clone();
    let mut rem_terms: Vec<(Monomial, Fp)> = Vec::new();
    let mut used = if track {
        zero_vec(&ring, basis.len())
    } else {
        Vec::new()
    };
    'outer: while let Some((ltm, ltc)) = work.leading() {
        let ltm = ltm.clone();
        for (k, b) in basis.iter().enumerate() {
            let (bm, bc) = b.poly.leading().expect("basis elements are nonzero");
            if let Some(u) = bm.divide_into(&ltm) {
                // Basis is monic except transiently; divide by its LC anyway.
                let c = field.mul(ltc, field.inv(bc).expect("nonzero LC"));
                work = work.sub(&b.poly.mul_term(&u, c));
                if track {
                    used[k] = used[k].add(&ring.monomial(u, c));
                }
                continue 'outer;
            }
        }
        // Leading term is irreducible: move it to the remainder. Terms are
        // peeled in strictly decreasing order, so rem_terms stays sorted.
        rem_terms.push((ltm, ltc));
        work = strip_leading(&work);
    }
    let rem = assemble_sorted(&ring, rem_terms);
    (rem, used)
}

fn strip_leading(f: &Polynomial) -> Polynomial {
    let ring = f.ring().clone();
    let terms = f.terms()[1..].to_vec();
    // Tail of a sorted polynomial is sorted; rebuild directly.
    assemble_sorted(&ring, terms)
}

fn assemble_sorted(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Fp)>) -> Polynomial {
    // from_terms would re-sort; terms here are already strictly decreasing.
    ring.from_terms(terms)
}

fn make_monic(ring: &Arc<PolyRing>, t: &mut Tracked) {
    let field = ring.field();
    if let Some((_, lc)) = t.poly.leading() {
        if lc.0 != 1 {
            let inv = field.inv(lc).expect("nonzero LC");
            t.poly = t.poly.scale(inv);
            for c in &mut t.cof {
                *c = c.scale(inv);
            }
        }
    }
}

/// Gebauer-Moeller update: installs element `t` (already pushed into `g`),
/// pruning the pending pair set and generating the surviving new pairs.
fn update_pairs(g: &[Tracked], pairs: &mut Vec<(usize, usize)>, t: usize) {
    let lt = |i: usize| g[i].poly.leading().unwrap().0;
    let lcm = |i: usize, j: usize| lt(i).lcm(lt(j));
    let lt_t = lt(t).clone();

    // New candidate pairs (i, t), pruned against each other.
    let mut kept: Vec<usize> = Vec::new();
    let candidates: Vec<usize> = (0..t).collect();
    for (pos, &i) in candidates.iter().enumerate() {
        let l_i = lcm(i, t);
        let coprime = lt(i).coprime(&lt_t);
        if coprime {
            kept.push(i);
            continue;
        }
        let dominated = candidates[pos + 1..]
            .iter()
            .any(|&j| lcm(j, t).divides(&l_i) && lcm(j, t) != l_i)
            || kept.iter().any(|&j| lcm(j, t).divides(&l_i));
        if !dominated {
            kept.push(i);
        }
    }
    let new_pairs: Vec<(usize, usize)> = kept
        .into_iter()
        .filter(|&i| !lt(i).coprime(&lt_t))
        .map(|i| (i, t))
        .collect();

    // Prune old pairs made redundant by the new leading monomial.
    pairs.retain(|&(i, j)| {
        let l = lcm(i, j);
        !(lt_t.divides(&l) && lcm(i, t) != l && lcm(j, t) != l)
    });
    pairs.extend(new_pairs);
}

/// The Buchberger loop, returning the reduced basis. With `track` set, each
/// element carries cofactors over `gens`; without it the cofactor vectors
/// stay empty and all certificate bookkeeping is skipped.
fn buchberger(ring: &Arc<PolyRing>, gens: &[Polynomial], track: bool) -> Vec<Tracked> {
    let order = ring.order();
    let mut g: Vec<Tracked> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();

    for (j, gen) in gens.iter().enumerate() {
        let cof = if track {
            let mut cof = zero_vec(ring, gens.len());
            cof[j] = ring.one();
            cof
        } else {
            Vec::new()
        };
        let mut t = Tracked {
            poly: gen.clone(),
            cof,
        };
        make_monic(ring, &mut t);
        g.push(t);
        update_pairs(&g, &mut pairs, g.len() - 1);
    }

    while !pairs.is_empty() {
        // Normal selection: smallest lcm first, ties by index.
        let mut best = 0;
        for k in 1..pairs.len() {
            let (ai, aj) = pairs[best];
            let (bi, bj) = pairs[k];
            let la = g[ai].poly.leading().unwrap().0.lcm(g[aj].poly.leading().unwrap().0);
            let lb = g[bi].poly.leading().unwrap().0.lcm(g[bj].poly.leading().unwrap().0);
            match order.cmp(&lb, &la) {
                Ordering::Less => best = k,
                Ordering::Equal if (bi, bj) < (ai, aj) => best = k,
                _ => {}
            }
        }
        let (i, j) = pairs.swap_remove(best);

        let (mi, _) = g[i].poly.leading().unwrap();
        let (mj, _) = g[j].poly.leading().unwrap();
        let l = mi.lcm(mj);
        let ui = mi.divide_into(&l).unwrap();
        let uj = mj.divide_into(&l).unwrap();
        // Both monic: S(i, j) = ui * g_i - uj * g_j kills the lcm term.
        let s = g[i]
            .poly
            .mul_term(&ui, Fp(1))
            .sub(&g[j].poly.mul_term(&uj, Fp(1)));
        let (rem, used) = divide(&s, &g, track);
        if rem.is_zero() {
            continue;
        }
        let cof = if track {
            let mut cof = zero_vec(ring, gens.len());
            for (jj, c) in cof.iter_mut().enumerate() {
                *c = g[i].cof[jj]
                    .mul_term(&ui, Fp(1))
                    .sub(&g[j].cof[jj].mul_term(&uj, Fp(1)));
                for (k, u) in used.iter().enumerate() {
                    if !u.is_zero() {
                        *c = c.sub(&u.mul(&g[k].cof[jj]));
                    }
                }
            }
            cof
        } else {
            Vec::new()
        };
        let mut t = Tracked { poly: rem, cof };
        make_monic(ring, &mut t);
        g.push(t);
        update_pairs(&g, &mut pairs, g.len() - 1);
    }

    interreduce(ring, g, track)
}

impl GroebnerBasis {
    pub fn compute(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> GroebnerBasis {
        for g in gens {
            assert!(*g.ring() == *ring, "generator from a different ring");
            assert!(!g.is_zero(), "ideal generators must be nonzero");
        }
        let basis = buchberger(ring, gens, false)
            .into_iter()
            .map(|t| t.poly)
            .collect();
        GroebnerBasis {
            ring: ring.clone(),
            gens: gens.to_vec(),
            basis,
            cofactors: OnceLock::new(),
        }
    }

    /// The lazily built cofactor table; the tracked rerun is deterministic,
    /// so it reproduces exactly the stored basis.
    fn cofactor_table(&self) -> &[Vec<Polynomial>] {
        self.cofactors.get_or_init(|| {
            let reduced = buchberger(&self.ring, &self.gens, true);
            debug_assert!(reduced
                .iter()
                .map(|t| &t.poly)
                .eq(self.basis.iter()));
            reduced.into_iter().map(|t| t.cof).collect()
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The reduced basis: monic, mutually reduced, sorted descending by
    /// leading monomial. Canonical for the ideal.
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    /// Cofactors of `basis()[k]` over `gens()`.
    pub fn basis_cofactors(&self, k: usize) -> &[Polynomial] {
        &self.cofactor_table()[k]
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let tracked: Vec<Tracked> = self
            .basis
            .iter()
            .map(|p| Tracked {
                poly: p.clone(),
                cof: Vec::new(),
            })
            .collect();
        divide(f, &tracked, false).0
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Division with remainder, certified over the *original* generators.
    pub fn reduce_with_cofactors(&self, f: &Polynomial) -> CofactorCertificate {
        let tracked: Vec<Tracked> = self
            .basis
            .iter()
            .zip(self.cofactor_table())
            .map(|(p, c)| Tracked {
                poly: p.clone(),
                cof: c.clone(),
            })
            .collect();
        let (rem, used) = divide(f, &tracked, true);
        let mut cof = zero_vec(&self.ring, self.gens.len());
        for (j, c) in cof.iter_mut().enumerate() {
            for (k, u) in used.iter().enumerate() {
                if !u.is_zero() {
                    *c = c.add(&u.mul(&tracked[k].cof[j]));
                }
            }
        }
        CofactorCertificate {
            target: f.clone(),
            normal_form: rem,
            cofactors: cof,
        }
    }
}

fn interreduce(ring: &Arc<PolyRing>, g: Vec<Tracked>, track: bool) -> Vec<Tracked> {
    let order = ring.order();
    // Minimalize: drop any element whose LT is divisible by another kept LT.
    // Processing in ascending LT order means a divisor is always seen first.
    let mut idx: Vec<usize> = (0..g.len()).collect();
    idx.sort_by(|&a, &b| {
        order
            .cmp(g[a].poly.leading().unwrap().0, g[b].poly.leading().unwrap().0)
            .then(a.cmp(&b))
    });
    let mut kept: Vec<Tracked> = Vec::new();
    for &i in &idx {
        let lt_i = g[i].poly.leading().unwrap().0;
        if !kept
            .iter()
            .any(|k| k.poly.leading().unwrap().0.divides(lt_i))
        {
            kept.push(g[i].clone());
        }
    }
    // Tail-reduce each element against the others. Leading terms are
    // pairwise indivisible, so they survive and one pass yields the reduced
    // basis.
    let mut out: Vec<Tracked> = Vec::new();
    for i in 0..kept.len() {
        let others: Vec<Tracked> = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, t)| t.clone())
            .collect();
        let (rem, used) = divide(&kept[i].poly, &others, track);
        debug_assert!(!rem.is_zero());
        let mut cof = kept[i].cof.clone();
        if track {
            for (j, c) in cof.iter_mut().enumerate() {
                for (k, u) in used.iter().enumerate() {
                    if !u.is_zero() {
                        *c = c.sub(&u.mul(&others[k].cof[j]));
                    }
                }
            }
        }
        let mut t = Tracked { poly: rem, cof };
        make_monic(ring, &mut t);
        out.push(t);
    }
    out.sort_by(|a, b| {
        order
            .cmp(b.poly.leading().unwrap().0, a.poly.leading().unwrap().0)
    });
    out
}
