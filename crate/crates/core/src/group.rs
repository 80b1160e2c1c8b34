//! Finitely generated permutation groups with all elements materialized.
//!
//! Every group in scope has at most a few thousand elements, so groups are
//! stored as their full sorted element list and subgroups are found by
//! closure rather than by stabilizer chains.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::error::GroupError;
use crate::perm::Permutation;
use crate::vertex_set::VertexSet;

pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

/// Orbits of a group on its points, ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    pub orbits: Vec<VertexSet>,
}

impl OrbitPartition {
    /// Orbit sizes, largest first.
    pub fn lengths(&self) -> Vec<usize> {
        let mut l: Vec<usize> = self.orbits.iter().map(|o| o.len()).collect();
        l.sort_unstable_by(|a, b| b.cmp(a));
        l
    }

    pub fn count(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbit_of(&self, v: usize) -> VertexSet {
        *self.orbits.iter().find(|o| o.contains(v)).expect("point in range")
    }
}

impl PermGroup {
    pub fn generate(degree: usize, gens: Vec<Permutation>) -> Result<Self, GroupError> {
        Self::generate_with_cap(degree, gens, DEFAULT_ORDER_CAP)
    }

    /// Closes the generators under composition.
    pub fn generate_with_cap(
        degree: usize,
        gens: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let elements = closure(degree, &gens, cap).ok_or(GroupError::OrderCapExceeded(cap))?;
        Ok(PermGroup {
            degree,
            generators: gens,
            elements,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// Wraps an element list already known to be a group.
    pub(crate) fn from_closed_elements(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Self {
        elements.sort_unstable();
        PermGroup {
            degree,
            generators,
            elements,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in sorted order of their image arrays.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.elements.iter().all(|g| other.contains(g))
    }

    pub fn orbits(&self) -> OrbitPartition {
        let n = self.degree;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for g in &self.generators {
            for (i, &x) in g.zero_based().iter().enumerate() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, x as usize));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut by_root: BTreeMap<usize, VertexSet> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            let e = by_root.entry(r).or_default();
            *e = e.with(i + 1);
        }
        let mut orbits: Vec<VertexSet> = by_root.into_values().collect();
        orbits.sort_unstable_by_key(|o| o.min_vertex());
        OrbitPartition { orbits }
    }

    pub fn stabilizer(&self, v: usize) -> PermGroup {
        let elements: Vec<Permutation> =
            self.elements.iter().filter(|g| g.apply(v) == v).cloned().collect();
        let gens = small_generating_set(self.degree, &elements);
        Self::from_closed_elements(self.degree, gens, elements)
    }

    /// Setwise stabilizer of a vertex set.
    pub fn set_stabilizer(&self, s: VertexSet) -> PermGroup {
        let elements: Vec<Permutation> =
            self.elements.iter().filter(|g| g.apply_set(s) == s).cloned().collect();
        let gens = small_generating_set(self.degree, &elements);
        Self::from_closed_elements(self.degree, gens, elements)
    }

    /// Element order → number of elements of that order.
    pub fn element_order_multiset(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for g in &self.elements {
            *m.entry(g.order()).or_insert(0) += 1;
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    pub fn exponent(&self) -> usize {
        use num_integer::Integer;
        self.elements.iter().fold(1, |acc, g| acc.lcm(&g.order()))
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements.iter().any(|g| g.order() == self.order())
    }

    /// `g H g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> PermGroup {
        let gi = g.inverse();
        let conj = |h: &Permutation| g.compose(h).compose(&gi);
        PermGroup::from_closed_elements(
            self.degree,
            self.generators.iter().map(conj).collect(),
            self.elements.iter().map(conj).collect(),
        )
    }

    /// Whether `n` (a subgroup of `self`) is normal, by conjugating its
    /// generators with the generators of `self`.
    pub fn is_normal_subgroup(&self, n: &PermGroup) -> bool {
        if !n.is_subgroup_of(self) {
            return false;
        }
        self.generators.iter().all(|g| {
            let gi = g.inverse();
            n.generators.iter().all(|h| n.contains(&g.compose(h).compose(&gi)))
        })
    }

    /// Brute-force conjugacy test of two subgroups inside `self`.
    pub fn are_conjugate(&self, a: &PermGroup, b: &PermGroup) -> bool {
        if a.order() != b.order() {
            return false;
        }
        self.elements.iter().any(|g| a.conjugate_by(g).elements == b.elements)
    }

    /// All subgroups whose order divides `k`, found by joining one element
    /// at a time starting from the trivial group. Every subgroup is reachable
    /// this way since each proper step stays inside it.
    pub fn subgroups_dividing(&self, k: usize) -> Result<Vec<PermGroup>, GroupError> {
        if !self.order().is_multiple_of(k) {
            return Err(GroupError::NotADivisor {
                k,
                order: self.order(),
            });
        }
        let candidates: Vec<&Permutation> =
            self.elements.iter().filter(|g| k.is_multiple_of(g.order()) && !g.is_identity()).collect();
        let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
        let trivial = PermGroup::trivial(self.degree);
        seen.insert(trivial.elements.clone());
        let mut found = vec![trivial];
        let mut queue = VecDeque::from([0usize]);
        while let Some(idx) = queue.pop_front() {
            let base = found[idx].clone();
            if base.order() == k {
                continue;
            }
            for g in &candidates {
                if base.contains(g) {
                    continue;
                }
                let mut gens = base.generators.clone();
                gens.push((*g).clone());
                let Some(elements) = closure(self.degree, &gens, k) else {
                    continue;
                };
                if !k.is_multiple_of(elements.len()) || seen.contains(&elements) {
                    continue;
                }
                seen.insert(elements.clone());
                found.push(PermGroup::from_closed_elements(self.degree, gens, elements));
                queue.push_back(found.len() - 1);
            }
        }
        found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
        Ok(found)
    }

    pub fn subgroups_of_order(&self, k: usize) -> Result<Vec<PermGroup>, GroupError> {
        Ok(self
            .subgroups_dividing(k)?
            .into_iter()
            .filter(|h| h.order() == k)
            .collect())
    }

    pub fn all_subgroups(&self) -> Vec<PermGroup> {
        self.subgroups_dividing(self.order()).expect("order divides itself")
    }

    /// All `p`-subgroups (including the trivial group).
    pub fn p_subgroups(&self, p: usize) -> Vec<PermGroup> {
        let mut pk = 1;
        while self.order().is_multiple_of(pk * p) {
            pk *= p;
        }
        self.subgroups_dividing(pk).expect("p-part divides the order")
    }

    /// The cyclic subgroup generated by `g`.
    pub fn cyclic(g: &Permutation) -> PermGroup {
        PermGroup::generate(g.degree(), vec![g.clone()]).expect("cyclic groups are small")
    }
}

/// Breadth-first closure of `gens` under left multiplication; `None` if more
/// than `cap` elements appear. Output is sorted.
fn closure(degree: usize, gens: &[Permutation], cap: usize) -> Option<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        let e = out[i].clone();
        i += 1;
        for g in gens {
            let p = g.compose(&e);
            if !seen.contains(&p) {
                if out.len() >= cap {
                    return None;
                }
                seen.insert(p.clone());
                out.push(p);
            }
        }
    }
    out.sort_unstable();
    Some(out)
}

/// Greedy generating set for a closed element list.
fn small_generating_set(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
    for g in elements {
        if current.contains(g) {
            continue;
        }
        gens.push(g.clone());
        current = closure(degree, &gens, usize::MAX).unwrap().into_iter().collect();
        if current.len() == elements.len() {
            break;
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    fn q8_regular() -> PermGroup {
        crate::catalog::q8_regular()
    }

    #[test]
    fn cyclic_group_orders() {
        let g = PermGroup::generate(3, vec![p(3, "(1 2 3)")]).unwrap();
        assert_eq!(g.order(), 3);
        let c4 = PermGroup::generate(4, vec![p(4, "(1 2 3 4)")]).unwrap();
        assert_eq!(c4.element_order_multiset(), BTreeMap::from([(1, 1), (2, 1), (4, 2)]));
        assert!(c4.is_cyclic() && c4.is_abelian());
    }

    #[test]
    fn order_cap_is_enforced() {
        let gens = vec![p(6, "(1 2)"), p(6, "(1 2 3 4 5 6)")];
        assert_eq!(
            PermGroup::generate_with_cap(6, gens.clone(), 100),
            Err(GroupError::OrderCapExceeded(100))
        );
        assert_eq!(PermGroup::generate(6, gens).unwrap().order(), 720);
    }

    #[test]
    fn degree_mismatch() {
        assert_eq!(
            PermGroup::generate(4, vec![p(3, "(1 2)")]),
            Err(GroupError::DegreeMismatch {
                expected: 4,
                found: 3
            })
        );
    }

    #[test]
    fn orbits_and_stabilizers() {
        let g = PermGroup::trivial(5);
        assert_eq!(g.orbits().lengths(), vec![1; 5]);
        let s4 = PermGroup::generate(5, vec![p(5, "(1 2)"), p(5, "(1 2 3 4)")]).unwrap();
        assert_eq!(s4.orbits().lengths(), vec![4, 1]);
        for v in 1..=5 {
            let orbit = s4.orbits().orbit_of(v).len();
            assert_eq!(orbit * s4.stabilizer(v).order(), s4.order());
        }
    }

    #[test]
    fn generator_order_does_not_matter() {
        let a = PermGroup::generate(5, vec![p(5, "(1 2)"), p(5, "(2 3 4 5)")]).unwrap();
        let b = PermGroup::generate(5, vec![p(5, "(2 3 4 5)"), p(5, "(1 2)")]).unwrap();
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn quaternion_subgroups() {
        let q8 = q8_regular();
        assert_eq!(q8.order(), 8);
        let c4s = q8.subgroups_of_order(4).unwrap();
        assert_eq!(c4s.len(), 3);
        assert!(c4s.iter().all(PermGroup::is_cyclic));
        assert_eq!(q8.subgroups_of_order(2).unwrap().len(), 1);
        assert_eq!(q8.all_subgroups().len(), 6);
        assert!(matches!(q8.subgroups_of_order(3), Err(GroupError::NotADivisor { .. })));
    }

    #[test]
    fn cyclic_13_has_one_subgroup_of_order_13() {
        let c13 = PermGroup::generate(13, vec![p(13, "(1 2 3 4 5 6 7 8 9 10 11 12 13)")]).unwrap();
        assert_eq!(c13.subgroups_of_order(13).unwrap().len(), 1);
    }

    #[test]
    fn s4_subgroup_lattice() {
        let s4 = PermGroup::generate(4, vec![p(4, "(1 2)"), p(4, "(1 2 3 4)")]).unwrap();
        // 30 subgroups of S4; 3 Sylow 2-subgroups, all conjugate.
        assert_eq!(s4.all_subgroups().len(), 30);
        let syl = s4.subgroups_of_order(8).unwrap();
        assert_eq!(syl.len(), 3);
        assert!(syl.iter().all(|h| s4.are_conjugate(&syl[0], h)));
        let v4 = PermGroup::generate(4, vec![p(4, "(1 2)(3 4)"), p(4, "(1 3)(2 4)")]).unwrap();
        assert!(s4.is_normal_subgroup(&v4));
        let c2 = PermGroup::cyclic(&p(4, "(1 2)"));
        assert!(!s4.is_normal_subgroup(&c2));
    }
}
