//! Building permutation actions as disjoint unions of blocks.
//!
//! A model is a faithful action of some group given by generators. Each
//! block is an action of the same generators on its own points (natural,
//! regular, on cosets, or trivial); blocks are then laid side by side.

use std::collections::HashMap;

use crate::group::PermGroup;
use crate::perm::Permutation;

/// Point `v ∈ F₃^dim` is numbered `1 + Σ vₖ 3ᵏ`.
pub(crate) fn f3_index(v: &[i64]) -> usize {
    v.iter().rev().fold(0usize, |acc, &c| acc * 3 + c.rem_euclid(3) as usize) + 1
}

pub(crate) fn f3_point(dim: usize, idx: usize) -> Vec<i64> {
    let mut i = idx - 1;
    (0..dim)
        .map(|_| {
            let c = (i % 3) as i64;
            i /= 3;
            c
        })
        .collect()
}

/// `v ↦ M v + t` on `F₃^dim`, with `m` given by rows.
pub(crate) fn f3_affine(m: &[&[i64]], t: &[i64]) -> Permutation {
    let dim = t.len();
    let n = 3usize.pow(dim as u32);
    let images: Vec<usize> = (1..=n)
        .map(|idx| {
            let v = f3_point(dim, idx);
            let w: Vec<i64> = (0..dim)
                .map(|r| m[r].iter().zip(&v).map(|(a, b)| a * b).sum::<i64>() + t[r])
                .collect();
            f3_index(&w)
        })
        .collect();
    Permutation::from_images(&images).expect("invertible affine map")
}

pub(crate) fn f3_translation(dim: usize, axis: usize) -> Permutation {
    let id: Vec<Vec<i64>> = (0..dim).map(|r| (0..dim).map(|c| (r == c) as i64).collect()).collect();
    let rows: Vec<&[i64]> = id.iter().map(Vec::as_slice).collect();
    let t: Vec<i64> = (0..dim).map(|k| (k == axis) as i64).collect();
    f3_affine(&rows, &t)
}

/// `x ↦ a·x + b` on `Z/m`, point `x` numbered `x + 1`.
pub(crate) fn zmod_affine(m: usize, a: i64, b: i64) -> Permutation {
    let images: Vec<usize> = (0..m as i64)
        .map(|x| (a * x + b).rem_euclid(m as i64) as usize + 1)
        .collect();
    Permutation::from_images(&images).expect("unit multiplier")
}

/// A linear map of `F₃²` restricted to the 8 nonzero vectors, renumbered
/// `1..=8`.
pub(crate) fn f3_linear_on_nonzero(m: &[&[i64]]) -> Permutation {
    let full = f3_affine(m, &[0, 0]);
    debug_assert_eq!(full.apply(1), 1);
    let images: Vec<usize> = (2..=9).map(|v| full.apply(v) - 1).collect();
    Permutation::from_images(&images).expect("linear map fixes the origin")
}

pub(crate) fn q8_on_nonzero_vectors() -> Vec<Permutation> {
    vec![
        f3_linear_on_nonzero(&[&[0, -1], &[1, 0]]),
        f3_linear_on_nonzero(&[&[1, 1], &[1, -1]]),
    ]
}

/// Left-regular action of the group generated by `model`.
pub(crate) fn regular(model: &[Permutation]) -> Vec<Permutation> {
    cosets(model, &[])
}

/// Action by left multiplication on the left cosets `xH`, `H = ⟨sub⟩`.
pub(crate) fn cosets(model: &[Permutation], sub: &[Permutation]) -> Vec<Permutation> {
    let degree = model[0].degree();
    let g = PermGroup::generate(degree, model.to_vec()).expect("model group is small");
    let h = PermGroup::generate(degree, sub.to_vec()).expect("subgroup is small");
    let mut coset_of: HashMap<Permutation, usize> = HashMap::new();
    let mut count = 0;
    for x in g.elements() {
        if coset_of.contains_key(x) {
            continue;
        }
        for y in h.elements() {
            coset_of.insert(x.compose(y), count);
        }
        count += 1;
    }
    let reps: Vec<&Permutation> = {
        let mut r: Vec<Option<&Permutation>> = vec![None; count];
        for x in g.elements() {
            r[coset_of[x]].get_or_insert(x);
        }
        r.into_iter().map(Option::unwrap).collect()
    };
    model
        .iter()
        .map(|s| {
            let images: Vec<usize> = reps.iter().map(|x| coset_of[&s.compose(x)] + 1).collect();
            Permutation::from_images(&images).expect("cosets are permuted")
        })
        .collect()
}

pub(crate) fn fixed(model_len: usize, k: usize) -> Vec<Permutation> {
    vec![Permutation::identity(k); model_len]
}

/// Lays blocks side by side; block `b` supplies one permutation per model
/// generator.
pub(crate) fn assemble(blocks: &[Vec<Permutation>]) -> Vec<Permutation> {
    let ngens = blocks[0].len();
    assert!(blocks.iter().all(|b| b.len() == ngens));
    (0..ngens)
        .map(|i| {
            let mut images = Vec::new();
            for b in blocks {
                let offset = images.len();
                images.extend(b[i].images().into_iter().map(|x| x + offset));
            }
            Permutation::from_images(&images).expect("blocks are disjoint")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f3_numbering_is_row_major_in_y() {
        assert_eq!(f3_index(&[0, 0]), 1);
        assert_eq!(f3_index(&[2, 0]), 3);
        assert_eq!(f3_index(&[0, 1]), 4);
        assert_eq!(f3_index(&[2, 2]), 9);
        for i in 1..=27 {
            assert_eq!(f3_index(&f3_point(3, i)), i);
        }
    }

    #[test]
    fn coset_action_sizes() {
        let s3 = vec![zmod_affine(3, 1, 1), zmod_affine(3, -1, 0)];
        let reg = regular(&s3);
        assert_eq!(reg[0].degree(), 6);
        let g = PermGroup::generate(6, reg).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.orbits().lengths(), vec![6]);
        let on_c3 = cosets(&s3, &[s3[0].clone()]);
        assert_eq!(on_c3[0].degree(), 2);
        assert!(on_c3[0].is_identity());
        assert!(!on_c3[1].is_identity());
    }

    #[test]
    fn assembled_blocks_keep_the_group() {
        let d = vec![zmod_affine(5, 1, 1), zmod_affine(5, -1, 0)];
        let gens = assemble(&[d.clone(), regular(&d), fixed(2, 2)]);
        let g = PermGroup::generate(17, gens).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.orbits().lengths(), vec![10, 5, 1, 1]);
    }
}
