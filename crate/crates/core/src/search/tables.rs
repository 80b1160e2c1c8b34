//! Immutable per-problem tables: facet orbits, ridges and the pairwise
//! half-complementarity conflicts between orbits.

use std::collections::HashMap;

use crate::perm::Permutation;
use crate::vertex_set::{binomial, k_subsets, VertexSet};

use super::{SearchError, SearchProblem};

/// Largest number of candidate facets materialized.
pub const MAX_CANDIDATE_FACETS: u64 = 20_000_000;

#[derive(Clone, Debug)]
pub struct FacetOrbit {
    pub facets: Vec<VertexSet>,
    /// Ridge indices touched, with the number of orbit facets through each.
    pub ridges: Vec<(u32, u8)>,
    /// Other orbits holding a facet `F'` with `F ∪ F' = V` for some `F`
    /// here; sorted.
    pub conflicts: Vec<u32>,
    /// Two facets of this orbit (possibly equal) already cover `V`.
    pub self_conflict: bool,
}

impl FacetOrbit {
    pub fn size(&self) -> usize {
        self.facets.len()
    }
}

pub struct Tables {
    pub n: usize,
    pub d: usize,
    pub orbits: Vec<FacetOrbit>,
    pub ridges: Vec<VertexSet>,
    /// Orbits with a facet through each ridge, with multiplicity.
    pub ridge_orbits: Vec<Vec<(u32, u8)>>,
    pub facet_orbit: HashMap<VertexSet, u32>,
}

fn orbits_of_subsets(n: usize, k: usize, gens: &[Permutation]) -> Vec<Vec<VertexSet>> {
    let all: Vec<VertexSet> = k_subsets(n, k).collect();
    let index: HashMap<VertexSet, usize> = all.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let mut seen = vec![false; all.len()];
    let mut out = Vec::new();
    for start in 0..all.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![all[start]];
        let mut i = 0;
        while i < orbit.len() {
            let s = orbit[i];
            i += 1;
            for g in gens {
                let t = g.apply_set(s);
                let j = index[&t];
                if !seen[j] {
                    seen[j] = true;
                    orbit.push(t);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out.sort_unstable_by_key(|o| o[0]);
    out
}

impl Tables {
    pub fn build(p: &SearchProblem) -> Result<Tables, SearchError> {
        let (n, d) = (p.n, p.d);
        let k = d + 1;
        let count = binomial(n as u64, k as u64);
        if count > MAX_CANDIDATE_FACETS {
            return Err(SearchError::MemoryBudget { needed: count });
        }
        let orbit_sets = orbits_of_subsets(n, k, p.group.generators());
        let mut facet_orbit: HashMap<VertexSet, u32> = HashMap::new();
        for (i, o) in orbit_sets.iter().enumerate() {
            for f in o {
                facet_orbit.insert(*f, i as u32);
            }
        }

        let mut ridge_index: HashMap<VertexSet, u32> = HashMap::new();
        let mut ridges = Vec::new();
        let mut orbit_ridges: Vec<Vec<(u32, u8)>> = Vec::with_capacity(orbit_sets.len());
        for o in &orbit_sets {
            let mut counts: HashMap<u32, u8> = HashMap::new();
            for f in o {
                for v in f.iter() {
                    let r = f.without(v);
                    let idx = *ridge_index.entry(r).or_insert_with(|| {
                        ridges.push(r);
                        (ridges.len() - 1) as u32
                    });
                    *counts.entry(idx).or_insert(0) += 1;
                }
            }
            let mut list: Vec<(u32, u8)> = counts.into_iter().collect();
            list.sort_unstable();
            orbit_ridges.push(list);
        }
        let mut ridge_orbits: Vec<Vec<(u32, u8)>> = vec![Vec::new(); ridges.len()];
        for (o, list) in orbit_ridges.iter().enumerate() {
            for &(r, m) in list {
                ridge_orbits[r as usize].push((o as u32, m));
            }
        }

        // F ∪ F' = V iff F' = (V∖F) ∪ T with T ⊆ F, |T| = 2(d+1) - n.
        let full = VertexSet::full(n);
        let overlap = (2 * k).checked_sub(n);
        let mut orbits = Vec::with_capacity(orbit_sets.len());
        for (i, o) in orbit_sets.into_iter().enumerate() {
            let mut conflicts: Vec<u32> = Vec::new();
            let mut self_conflict = false;
            if let Some(s) = overlap {
                for f in &o {
                    let comp = full.difference(*f);
                    for t in k_subsets(k, s) {
                        let other = comp.union(crate::complex::expand_subset(*f, t));
                        let j = facet_orbit[&other];
                        if j as usize == i {
                            self_conflict = true;
                        } else {
                            conflicts.push(j);
                        }
                    }
                }
            }
            conflicts.sort_unstable();
            conflicts.dedup();
            orbits.push(FacetOrbit {
                facets: o,
                ridges: std::mem::take(&mut orbit_ridges[i]),
                conflicts,
                self_conflict,
            });
        }
        Ok(Tables {
            n,
            d,
            orbits,
            ridges,
            ridge_orbits,
            facet_orbit,
        })
    }
}
