//! Canonical labelings, isomorphism tests and automorphism groups.
//!
//! Individualization-refinement: vertex colours are refined by the
//! multiset of colour patterns of the facets through each vertex until
//! stable; non-discrete colourings branch on the smallest non-singleton
//! cell. Every leaf gives a relabeling, and the canonical form is the one
//! whose sorted facet bitmask list is lexicographically smallest.
//! Automorphisms found along the way prune equivalent subtrees.

use std::collections::HashMap;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::complex::SimplicialComplex;
use crate::error::GroupError;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoCertificate {
    /// `mapping[v - 1]` is the image of vertex `v`.
    pub mapping: Vec<usize>,
    pub verified: bool,
}

impl IsoCertificate {
    pub fn as_permutation(&self) -> Permutation {
        Permutation::from_images(&self.mapping).expect("certificates are bijections")
    }

    pub fn inverse(&self) -> IsoCertificate {
        let mut inv = vec![0; self.mapping.len()];
        for (i, &m) in self.mapping.iter().enumerate() {
            inv[m - 1] = i + 1;
        }
        IsoCertificate {
            mapping: inv,
            verified: self.verified,
        }
    }
}

/// Whether `map` (0-based images) carries the facets of `a` exactly onto
/// those of `b`.
fn transports(a: &SimplicialComplex, b: &SimplicialComplex, map: &[u8]) -> bool {
    a.n() == b.n() && a.relabel_zero_based(map).facets() == b.facets()
}

pub struct CanonicalResult {
    pub form: SimplicialComplex,
    /// 0-based: vertex `v` of the input becomes vertex `labeling[v-1] + 1`.
    pub labeling: Vec<u8>,
    /// Automorphisms met during the search; they generate the full group.
    pub automorphisms: Vec<Permutation>,
    pub leaves: usize,
}

struct Searcher<'a> {
    n: usize,
    facets: &'a [VertexSet],
    incident: Vec<Vec<usize>>,
    first: Option<(Vec<usize>, Vec<u64>, Vec<u8>)>,
    best: Option<(Vec<usize>, Vec<u64>, Vec<u8>)>,
    autos: Vec<Vec<u8>>,
    leaves: usize,
}

fn rank_by<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap() as u32).collect()
}

impl<'a> Searcher<'a> {
    fn new(k: &'a SimplicialComplex) -> Self {
        let n = k.n();
        let mut incident = vec![Vec::new(); n];
        for (i, f) in k.facets().iter().enumerate() {
            for v in f.iter() {
                incident[v - 1].push(i);
            }
        }
        Searcher {
            n,
            facets: k.facets(),
            incident,
            first: None,
            best: None,
            autos: Vec::new(),
            leaves: 0,
        }
    }

    fn cell_count(colors: &[u32]) -> usize {
        colors.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Equitable-style refinement; colour order is preserved.
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        loop {
            let before = Self::cell_count(&colors);
            let patterns: Vec<Vec<u32>> = self
                .facets
                .iter()
                .map(|f| {
                    let mut p: Vec<u32> = f.iter().map(|v| colors[v - 1]).collect();
                    p.sort_unstable();
                    p
                })
                .collect();
            let pattern_id = rank_by(&patterns);
            let sigs: Vec<(u32, Vec<u32>)> = (0..self.n)
                .map(|v| {
                    let mut s: Vec<u32> = self.incident[v].iter().map(|&f| pattern_id[f]).collect();
                    s.sort_unstable();
                    (colors[v], s)
                })
                .collect();
            colors = rank_by(&sigs);
            if Self::cell_count(&colors) == before {
                return colors;
            }
        }
    }

    fn leaf_form(&self, colors: &[u32]) -> (Vec<u64>, Vec<u8>) {
        let map: Vec<u8> = colors.iter().map(|&c| c as u8).collect();
        let mut form: Vec<u64> = self.facets.iter().map(|f| f.map_zero_based(&map).bits()).collect();
        form.sort_unstable();
        (form, map)
    }

    fn common_prefix(a: &[usize], b: &[usize]) -> usize {
        a.iter().zip(b).take_while(|(x, y)| x == y).count()
    }

    /// Returns `Some(depth)` to abandon everything below the node at
    /// `depth` on the current path.
    fn search(&mut self, colors: Vec<u32>, path: &mut Vec<usize>) -> Option<usize> {
        let colors = self.refine(colors);
        if Self::cell_count(&colors) == self.n {
            self.leaves += 1;
            let (form, map) = self.leaf_form(&colors);
            for which in [0, 1] {
                let slot = if which == 0 { &self.first } else { &self.best };
                if let Some((p, f, m)) = slot {
                    if *f == form {
                        // m⁻¹ ∘ map is an automorphism.
                        let mut inv = vec![0u8; self.n];
                        for (i, &x) in m.iter().enumerate() {
                            inv[x as usize] = i as u8;
                        }
                        let auto: Vec<u8> = map.iter().map(|&x| inv[x as usize]).collect();
                        let depth = Self::common_prefix(p, path);
                        if !auto.iter().enumerate().all(|(i, &x)| i == x as usize) {
                            self.autos.push(auto);
                        }
                        return Some(depth);
                    }
                }
            }
            if self.first.is_none() {
                self.first = Some((path.clone(), form.clone(), map.clone()));
            }
            if self.best.as_ref().is_none_or(|(_, f, _)| form < *f) {
                self.best = Some((path.clone(), form, map));
            }
            return None;
        }

        // Smallest non-singleton cell, lowest colour on ties.
        let mut sizes = vec![0usize; Self::cell_count(&colors)];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..sizes.len())
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c))
            .unwrap() as u32;
        let cell: Vec<usize> = (0..self.n).filter(|&v| colors[v] == target).collect();
        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &cell {
            if explored.iter().any(|&u| self.same_orbit_fixing(path, u, w)) {
                continue;
            }
            // Split w off in front of the rest of its cell.
            let child: Vec<u32> = {
                let keys: Vec<(u32, bool)> =
                    (0..self.n).map(|v| (colors[v], v != w)).collect();
                rank_by(&keys)
            };
            path.push(w);
            let r = self.search(child, path);
            path.pop();
            explored.push(w);
            if let Some(d) = r {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    /// Whether some product of found automorphisms fixing `path` pointwise
    /// sends `u` to `w`.
    fn same_orbit_fixing(&self, path: &[usize], u: usize, w: usize) -> bool {
        let gens: Vec<&Vec<u8>> = self
            .autos
            .iter()
            .filter(|a| path.iter().all(|&p| a[p] as usize == p))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![u];
        seen[u] = true;
        while let Some(x) = stack.pop() {
            if x == w {
                return true;
            }
            for g in &gens {
                let y = g[x] as usize;
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }
}

pub fn canonical_labeling(k: &SimplicialComplex) -> CanonicalResult {
    let n = k.n();
    if n == 0 {
        return CanonicalResult {
            form: k.clone(),
            labeling: Vec::new(),
            automorphisms: Vec::new(),
            leaves: 1,
        };
    }
    let mut s = Searcher::new(k);
    s.search(vec![0; n], &mut Vec::new());
    let (_, _, labeling) = s.best.clone().expect("at least one leaf");
    let form = k.relabel_zero_based(&labeling);
    let automorphisms = s
        .autos
        .iter()
        .map(|a| Permutation::from_zero_based(a.clone()))
        .collect();
    CanonicalResult {
        form,
        labeling,
        automorphisms,
        leaves: s.leaves,
    }
}

pub fn canonical_form(k: &SimplicialComplex) -> SimplicialComplex {
    canonical_labeling(k).form
}

/// SHA-256 of the canonical facet list, as hex.
pub fn canonical_hash(k: &SimplicialComplex) -> String {
    let form = canonical_form(k);
    let mut h = Sha256::new();
    h.update((form.n() as u64).to_le_bytes());
    for f in form.facets() {
        h.update(f.bits().to_le_bytes());
    }
    hex::encode(h.finalize())
}

pub fn are_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<IsoCertificate> {
    if a.n() != b.n() || a.facets().len() != b.facets().len() {
        return None;
    }
    let mut sa: Vec<usize> = a.facets().iter().map(|f| f.len()).collect();
    let mut sb: Vec<usize> = b.facets().iter().map(|f| f.len()).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let ca = canonical_labeling(a);
    let cb = canonical_labeling(b);
    if ca.form != cb.form {
        return None;
    }
    let mut inv_b = vec![0u8; b.n()];
    for (i, &x) in cb.labeling.iter().enumerate() {
        inv_b[x as usize] = i as u8;
    }
    let map: Vec<u8> = ca.labeling.iter().map(|&x| inv_b[x as usize]).collect();
    let verified = transports(a, b, &map);
    assert!(verified, "canonical forms agree but the composed labeling does not transport");
    Some(IsoCertificate {
        mapping: map.iter().map(|&x| x as usize + 1).collect(),
        verified,
    })
}

/// Re-checks a certificate by transporting the facet set.
pub fn verify_certificate(a: &SimplicialComplex, b: &SimplicialComplex, c: &IsoCertificate) -> bool {
    if c.mapping.len() != a.n() {
        return false;
    }
    let Ok(p) = Permutation::from_images(&c.mapping) else {
        return false;
    };
    transports(a, b, p.zero_based())
}

/// The full automorphism group, generated by the automorphisms found while
/// canonically labeling. Fails only if the order exceeds the element cap.
pub fn symmetry_group(k: &SimplicialComplex) -> Result<PermGroup, GroupError> {
    let r = canonical_labeling(k);
    let g = PermGroup::generate(k.n(), r.automorphisms)?;
    debug_assert!(g
        .generators()
        .iter()
        .all(|a| transports(k, k, a.zero_based())));
    Ok(g)
}

/// Keeps the first complex of each isomorphism class, in input order.
pub fn dedup_up_to_iso(complexes: Vec<SimplicialComplex>) -> Vec<SimplicialComplex> {
    let mut seen: HashMap<SimplicialComplex, ()> = HashMap::new();
    let mut out = Vec::new();
    for k in complexes {
        let form = canonical_form(&k);
        if seen.insert(form, ()).is_none() {
            out.push(k);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boundary_simplex, cp2_9, icosahedron, rp2_6};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn shuffled(k: &SimplicialComplex, seed: u64) -> (SimplicialComplex, Vec<u8>) {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut map: Vec<u8> = (0..k.n() as u8).collect();
        map.shuffle(&mut rng);
        (k.relabel_zero_based(&map), map)
    }

    #[test]
    fn symmetry_orders() {
        assert_eq!(symmetry_group(&boundary_simplex(4)).unwrap().order(), 120);
        assert_eq!(symmetry_group(&cp2_9()).unwrap().order(), 54);
        let a5 = symmetry_group(&rp2_6()).unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(
            a5.element_order_multiset(),
            std::collections::BTreeMap::from([(1, 1), (2, 15), (3, 20), (5, 24)])
        );
        assert_eq!(symmetry_group(&icosahedron()).unwrap().order(), 120);
    }

    #[test]
    fn relabelings_are_recognized() {
        for k in [cp2_9(), rp2_6(), icosahedron()] {
            for seed in 0..5 {
                let (r, _) = shuffled(&k, seed);
                let c = are_isomorphic(&k, &r).expect("isomorphic");
                assert!(verify_certificate(&k, &r, &c));
                assert!(verify_certificate(&r, &k, &c.inverse()));
                assert_eq!(canonical_form(&r), canonical_form(&k));
            }
        }
    }

    #[test]
    fn non_isomorphic_pairs() {
        assert!(are_isomorphic(&boundary_simplex(3), &rp2_6()).is_none());
        // Same f-vector, different complexes: a hexagon vs two triangles.
        let hex = SimplicialComplex::from_vertex_lists(
            6,
            &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6], &[1, 6]],
        )
        .unwrap();
        let two = SimplicialComplex::from_vertex_lists(
            6,
            &[&[1, 2], &[2, 3], &[1, 3], &[4, 5], &[5, 6], &[4, 6]],
        )
        .unwrap();
        assert!(are_isomorphic(&hex, &two).is_none());
        assert_ne!(canonical_hash(&hex), canonical_hash(&two));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let c = canonical_form(&cp2_9());
        assert_eq!(canonical_form(&c), c);
        assert_eq!(canonical_form(&SimplicialComplex::empty()), SimplicialComplex::empty());
    }

    #[test]
    fn large_symmetric_group_is_pruned() {
        let r = canonical_labeling(&boundary_simplex(9));
        assert!(r.leaves < 1000, "{} leaves", r.leaves);
        let k = boundary_simplex(9);
        assert!(r.automorphisms.iter().all(|a| transports(&k, &k, a.zero_based())));
        assert_eq!(symmetry_group(&boundary_simplex(6)).unwrap().order(), 5040);
    }

    #[test]
    fn dedup_keeps_one_per_class() {
        let k = rp2_6();
        let list = vec![k.clone(), shuffled(&k, 1).0, boundary_simplex(3), shuffled(&k, 2).0];
        let d = dedup_up_to_iso(list);
        assert_eq!(d.len(), 2);
        assert_eq!(d[0], k);
    }
}
