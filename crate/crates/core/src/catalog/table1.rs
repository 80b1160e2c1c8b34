//! Explicit actions on 27 points for each candidate symmetry group of a
//! 27-vertex triangulation, plus `PSU(3,2)` acting with three orbits of
//! length 9.

use serde::Serialize;

use super::blocks::{assemble, cosets, f3_affine, f3_translation, fixed, q8_on_nonzero_vectors, regular, zmod_affine};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Table row (1..=26), or `None` for `PSU(3,2)`.
    pub row: Option<usize>,
    pub name: &'static str,
    pub group: PermGroup,
    /// Largest first.
    pub expected_orbit_lengths: Vec<usize>,
    pub expected_order: usize,
}

#[derive(Serialize)]
struct EntrySummary<'a> {
    row: Option<usize>,
    name: &'a str,
    order: usize,
    orbit_lengths: Vec<usize>,
}

impl CatalogEntry {
    /// Checks order, orbit lengths and the extra structure some rows carry.
    pub fn validate(&self) -> Result<(), String> {
        if self.group.degree() != 27 {
            return Err(format!("{}: degree {}", self.name, self.group.degree()));
        }
        if self.group.order() != self.expected_order {
            return Err(format!("{}: order {} != {}", self.name, self.group.order(), self.expected_order));
        }
        let lengths = self.group.orbits().lengths();
        if lengths != self.expected_orbit_lengths {
            return Err(format!("{}: orbit lengths {:?}", self.name, lengths));
        }
        match self.row {
            Some(5) | Some(6) => {
                // C4 acting faithfully: no element of order 2p.
                let bad = self.group.elements().iter().any(|g| matches!(g.order(), 6 | 12 | 18 | 26 | 52));
                if bad {
                    return Err(format!("{}: C4 does not act faithfully", self.name));
                }
            }
            Some(18) => check_row18(&self.group)?,
            Some(22) => check_row22(&self.group)?,
            _ => {}
        }
        Ok(())
    }

    pub fn summary_json(&self) -> serde_json::Value {
        serde_json::to_value(EntrySummary {
            row: self.row,
            name: self.name,
            order: self.group.order(),
            orbit_lengths: self.group.orbits().lengths(),
        })
        .expect("plain data")
    }
}

fn center(g: &PermGroup) -> Vec<Permutation> {
    g.elements()
        .iter()
        .filter(|z| g.elements().iter().all(|x| x.compose(z) == z.compose(x)))
        .cloned()
        .collect()
}

fn point_stabilizers_by_orbit_length(g: &PermGroup, len: usize) -> Vec<PermGroup> {
    g.orbits()
        .orbits
        .iter()
        .filter(|o| o.len() == len)
        .map(|o| g.stabilizer(o.min_vertex().unwrap()))
        .collect()
}

fn check_row18(g: &PermGroup) -> Result<(), String> {
    let z = center(g);
    let four = point_stabilizers_by_orbit_length(g, 4);
    if four.len() != 2 {
        return Err("D4: expected two orbits of length 4".into());
    }
    if g.are_conjugate(&four[0], &four[1]) {
        return Err("D4: stabilizers on the length-4 orbits are conjugate".into());
    }
    if four.iter().any(|s| s.elements() == z.as_slice()) {
        return Err("D4: a length-4 stabilizer is the centre".into());
    }
    let two = point_stabilizers_by_orbit_length(g, 2);
    if two.len() != 1 || two[0].order() != 4 || !two[0].is_cyclic() {
        return Err("D4: stabilizer on the length-2 orbit is not C4".into());
    }
    Ok(())
}

fn check_row22(g: &PermGroup) -> Result<(), String> {
    let two = point_stabilizers_by_orbit_length(g, 2);
    if two.len() != 3 || two.iter().any(|s| s.order() != 2) {
        return Err("C2^2: expected three length-2 orbits with order-2 stabilizers".into());
    }
    if two[0] == two[1] || two[0] == two[2] || two[1] == two[2] {
        return Err("C2^2: length-2 stabilizers are not pairwise different".into());
    }
    Ok(())
}

fn entry(
    row: Option<usize>,
    name: &'static str,
    order: usize,
    lengths: &[usize],
    blocks: Vec<Vec<Permutation>>,
) -> CatalogEntry {
    let gens = assemble(&blocks);
    let group = PermGroup::generate(27, gens).expect("catalog groups are small");
    let e = CatalogEntry {
        row,
        name,
        group,
        expected_orbit_lengths: lengths.to_vec(),
        expected_order: order,
    };
    if let Err(msg) = e.validate() {
        panic!("catalog construction is wrong: {msg}");
    }
    e
}

fn rep<T: Clone>(x: T, k: usize) -> Vec<T> {
    vec![x; k]
}

fn cat(parts: Vec<Vec<Vec<Permutation>>>) -> Vec<Vec<Permutation>> {
    parts.into_iter().flatten().collect()
}

/// The 26 table rows in order, followed by `PSU(3,2)`. Each entry has been
/// validated against its orbit lengths (and footnoted structure) before it
/// is returned.
pub fn table1_actions() -> Vec<CatalogEntry> {
    let id2: [&[i64]; 2] = [&[1, 0], &[0, 1]];
    let t1 = f3_affine(&id2, &[1, 0]);
    let t2 = f3_affine(&id2, &[0, 1]);
    let z = |m: usize, a: i64, b: i64| zmod_affine(m, a, b);

    let mut out = Vec::with_capacity(27);

    // 1: F₃³ ⋊ ⟨M⟩, M the companion matrix of x³ + 2x + 2 (order 13).
    let g351 = vec![
        f3_translation(3, 0),
        f3_translation(3, 1),
        f3_translation(3, 2),
        f3_affine(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 0]], &[0, 0, 0]),
    ];
    out.push(entry(Some(1), "C3^3:C13", 351, &[27], vec![g351]));

    let tr3 = vec![f3_translation(3, 0), f3_translation(3, 1), f3_translation(3, 2)];
    out.push(entry(Some(2), "C3^3", 27, &[27], vec![tr3]));

    let he3 = vec![t1.clone(), t2.clone(), f3_affine(&[&[1, 1], &[0, 1]], &[0, 0])];
    out.push(entry(Some(3), "He3", 27, &[27], vec![regular(&he3)]));

    let ex27 = vec![z(9, 1, 1), z(9, 4, 0)];
    out.push(entry(Some(4), "3-^(1+2)", 27, &[27], vec![regular(&ex27)]));

    let f52 = vec![z(13, 1, 1), z(13, 5, 0)];
    out.push(entry(Some(5), "C13:C4", 52, &[13, 13, 1], vec![f52.clone(), f52, fixed(2, 1)]));

    let g36 = vec![t1.clone(), t2.clone(), f3_affine(&[&[0, -1], &[1, 0]], &[0, 0])];
    out.push(entry(Some(6), "C3^2:C4", 36, &[9, 9, 9], rep(g36, 3)));

    let d13 = vec![z(13, 1, 1), z(13, -1, 0)];
    out.push(entry(Some(7), "D13", 26, &[13, 13, 1], vec![d13.clone(), d13, fixed(2, 1)]));

    let d11 = vec![z(11, 1, 1), z(11, -1, 0)];
    let d11_on_two = cosets(&d11, &d11[..1]);
    out.push(entry(
        Some(8),
        "D11",
        22,
        &[11, 11, 2, 2, 1],
        vec![d11.clone(), d11, d11_on_two.clone(), d11_on_two, fixed(2, 1)],
    ));

    let g18 = vec![t1.clone(), t2.clone(), f3_affine(&[&[-1, 0], &[0, -1]], &[0, 0])];
    out.push(entry(Some(9), "C3:S3", 18, &[9, 9, 9], rep(g18, 3)));

    let d9 = vec![z(9, 1, 1), z(9, -1, 0)];
    out.push(entry(Some(10), "D9", 18, &[9, 9, 9], rep(d9, 3)));

    let c13 = vec![z(13, 1, 1)];
    out.push(entry(Some(11), "C13", 13, &[13, 13, 1], vec![c13.clone(), c13, fixed(1, 1)]));

    let a4 = vec![
        Permutation::parse_cycles(4, "(1 2 3)").unwrap(),
        Permutation::parse_cycles(4, "(1 2)(3 4)").unwrap(),
    ];
    let v4 = [
        Permutation::parse_cycles(4, "(1 2)(3 4)").unwrap(),
        Permutation::parse_cycles(4, "(1 3)(2 4)").unwrap(),
    ];
    let a4_reg = regular(&a4);
    out.push(entry(
        Some(12),
        "A4",
        12,
        &[12, 12, 3],
        vec![a4_reg.clone(), a4_reg, cosets(&a4, &v4)],
    ));

    let c11 = vec![z(11, 1, 1)];
    out.push(entry(
        Some(13),
        "C11",
        11,
        &[11, 11, 1, 1, 1, 1, 1],
        vec![c11.clone(), c11, fixed(1, 5)],
    ));

    out.push(entry(Some(14), "C3^2", 9, &[9, 9, 9], rep(vec![t1.clone(), t2.clone()], 3)));

    out.push(entry(Some(15), "C9", 9, &[9, 9, 9], rep(vec![z(9, 1, 1)], 3)));

    let c2_3 = vec![
        Permutation::parse_cycles(6, "(1 2)").unwrap(),
        Permutation::parse_cycles(6, "(3 4)").unwrap(),
        Permutation::parse_cycles(6, "(5 6)").unwrap(),
    ];
    out.push(entry(
        Some(16),
        "C2^3",
        8,
        &[8, 8, 8, 1, 1, 1],
        cat(vec![rep(regular(&c2_3), 3), vec![fixed(3, 3)]]),
    ));

    // D4 on the corners of a square: r a rotation, s a reflection.
    let r = z(4, 1, 1);
    let s = z(4, -1, 0);
    let d4 = vec![r.clone(), s.clone()];
    out.push(entry(
        Some(17),
        "D4",
        8,
        &[8, 8, 8, 1, 1, 1],
        cat(vec![rep(regular(&d4), 3), vec![fixed(2, 3)]]),
    ));

    // Stabilizers ⟨s⟩ and ⟨sr⟩ are reflections from different classes;
    // ⟨r⟩ is the cyclic subgroup of order 4.
    let sr = s.compose(&r);
    out.push(entry(
        Some(18),
        "D4",
        8,
        &[8, 8, 4, 4, 2, 1],
        cat(vec![
            rep(regular(&d4), 2),
            vec![
                cosets(&d4, std::slice::from_ref(&s)),
                cosets(&d4, &[sr]),
                cosets(&d4, std::slice::from_ref(&r)),
                fixed(2, 1),
            ],
        ]),
    ));

    let q8 = q8_on_nonzero_vectors();
    out.push(entry(
        Some(19),
        "Q8",
        8,
        &[8, 8, 8, 1, 1, 1],
        cat(vec![rep(q8, 3), vec![fixed(2, 3)]]),
    ));

    let s3 = vec![z(3, 1, 1), z(3, -1, 0)];
    out.push(entry(
        Some(20),
        "S3",
        6,
        &[6, 6, 6, 3, 3, 3],
        cat(vec![rep(regular(&s3), 3), rep(s3.clone(), 3)]),
    ));

    let a = Permutation::parse_cycles(4, "(1 2)").unwrap();
    let b = Permutation::parse_cycles(4, "(3 4)").unwrap();
    let v = vec![a.clone(), b.clone()];
    out.push(entry(
        Some(21),
        "C2^2",
        4,
        &[4, 4, 4, 4, 4, 4, 1, 1, 1],
        cat(vec![rep(regular(&v), 6), vec![fixed(2, 3)]]),
    ));

    out.push(entry(
        Some(22),
        "C2^2",
        4,
        &[4, 4, 4, 4, 4, 2, 2, 2, 1],
        cat(vec![
            rep(regular(&v), 5),
            vec![
                cosets(&v, std::slice::from_ref(&a)),
                cosets(&v, std::slice::from_ref(&b)),
                cosets(&v, &[a.compose(&b)]),
                fixed(2, 1),
            ],
        ]),
    ));

    out.push(entry(
        Some(23),
        "C4",
        4,
        &[4, 4, 4, 4, 4, 4, 1, 1, 1],
        cat(vec![rep(vec![z(4, 1, 1)], 6), vec![fixed(1, 3)]]),
    ));

    out.push(entry(Some(24), "C3", 3, &[3; 9], rep(vec![z(3, 1, 1)], 9)));

    out.push(entry(
        Some(25),
        "C2",
        2,
        &[2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1],
        cat(vec![rep(vec![z(2, 1, 1)], 12), vec![fixed(1, 3)]]),
    ));

    out.push(entry(Some(26), "1", 1, &[1; 27], vec![fixed(1, 27)]));

    // Translations of F₃² extended by Q₈ ⊂ SL(2,3).
    let psu = vec![
        t1,
        t2,
        f3_affine(&[&[0, -1], &[1, 0]], &[0, 0]),
        f3_affine(&[&[1, 1], &[1, -1]], &[0, 0]),
    ];
    out.push(entry(None, "PSU(3,2)", 72, &[9, 9, 9], rep(psu, 3)));

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn all_entries_validate() {
        let t = table1_actions();
        assert_eq!(t.len(), 27);
        for (i, e) in t.iter().take(26).enumerate() {
            assert_eq!(e.row, Some(i + 1));
        }
        assert!(t[26].row.is_none());
    }

    #[test]
    fn group_structure_spot_checks() {
        let t = table1_actions();
        let orders = |i: usize| t[i].group.element_order_multiset();
        // Row 1: 26 elements of order 3 in the translation subgroup, the
        // rest of order 13.
        assert_eq!(orders(0), BTreeMap::from([(1, 1), (3, 26), (13, 324)]));
        // Rows 2-4 are distinguished by abelianness and exponent.
        assert!(t[1].group.is_abelian());
        assert!(!t[2].group.is_abelian() && t[2].group.exponent() == 3);
        assert!(!t[3].group.is_abelian() && t[3].group.exponent() == 9);
        assert_eq!(orders(18), BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
        assert_eq!(orders(16), BTreeMap::from([(1, 1), (2, 5), (4, 2)]));
        assert_eq!(orders(14), BTreeMap::from([(1, 1), (3, 2), (9, 6)]));
        assert!(t[11].group.exponent() == 6 && !t[11].group.is_abelian());
        assert!(t[22].group.is_cyclic());
        let psu = &t[26].group;
        assert_eq!(psu.p_subgroups(2).iter().filter(|h| h.order() == 8).count(), 9);
    }
}
