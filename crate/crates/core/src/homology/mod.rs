//! Simplicial homology over `Z` and `F_p`, and the homology-manifold test.

pub mod snf;

pub use snf::{mat_mul, smith_normal_form, smith_normal_form_with_transforms, Matrix, SmithForm};

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::HomologyError;
use crate::vertex_set::VertexSet;

/// Default memory budget for enumerated faces: 2 GiB.
pub const DEFAULT_MEMORY_BUDGET_BYTES: u64 = 2 << 30;
/// Bytes charged per enumerated face (bitmask plus index entry).
const BYTES_PER_FACE: u64 = 16;

pub fn face_budget_for_bytes(bytes: u64) -> u64 {
    bytes / BYTES_PER_FACE
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ring {
    Integers,
    Prime(u64),
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl Serialize for Ring {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub ring: Ring,
    /// `betti[i]` is the rank of `H_i` (unreduced).
    pub betti: Vec<usize>,
    /// `torsion[i]` lists the invariant factors `> 1` of `H_i`; always
    /// empty over a field.
    pub torsion: Vec<Vec<u64>>,
}

impl HomologyProfile {
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    /// Whether this is the homology of the `m`-sphere (`m ≥ 0`).
    pub fn is_sphere(&self, m: usize) -> bool {
        if self.betti.len() != m + 1 || !self.is_torsion_free() {
            return false;
        }
        self.betti.iter().enumerate().all(|(i, &b)| match (m, i) {
            (0, 0) => b == 2,
            (_, 0) => b == 1,
            (_, i) if i == m => b == 1,
            _ => b == 0,
        })
    }

    /// One line per dimension: `H_i rank [torsion …]`.
    pub fn to_lines(&self) -> String {
        let mut s = String::new();
        for (i, b) in self.betti.iter().enumerate() {
            s.push_str(&format!("H_{i} {b}"));
            for t in &self.torsion[i] {
                s.push_str(&format!(" Z/{t}"));
            }
            s.push('\n');
        }
        s
    }
}

/// `∂_k` as sparse columns: column `j` is the boundary of the `j`-th
/// `k`-face, with `(row, sign)` entries over the sorted `(k-1)`-faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub rows: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl BoundaryMatrix {
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.cols()]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, s) in col {
                m[i][j] = s;
            }
        }
        m
    }

    fn to_bigint(&self) -> Matrix {
        self.to_dense()
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect()
    }
}

fn check_budget(k: &SimplicialComplex, budget: u64) -> Result<(), HomologyError> {
    let bound: u64 = k
        .facets()
        .iter()
        .map(|f| 1u64.checked_shl(f.len() as u32).unwrap_or(u64::MAX))
        .fold(0u64, u64::saturating_add);
    if bound > budget {
        return Err(HomologyError::FaceCountOverflow {
            needed: bound,
            budget,
        });
    }
    Ok(())
}

/// `[∂₁, …, ∂_d]` with signs from ascending vertex order.
pub fn boundary_matrices(k: &SimplicialComplex) -> Result<Vec<BoundaryMatrix>, HomologyError> {
    boundary_matrices_with_budget(k, face_budget_for_bytes(DEFAULT_MEMORY_BUDGET_BYTES))
}

pub fn boundary_matrices_with_budget(
    k: &SimplicialComplex,
    face_budget: u64,
) -> Result<Vec<BoundaryMatrix>, HomologyError> {
    check_budget(k, face_budget)?;
    Ok(boundaries_of(&k.faces_by_dim()))
}

fn boundaries_of(faces: &[Vec<VertexSet>]) -> Vec<BoundaryMatrix> {
    (1..faces.len())
        .map(|dim| {
            let index: HashMap<VertexSet, usize> =
                faces[dim - 1].iter().enumerate().map(|(i, f)| (*f, i)).collect();
            let columns = faces[dim]
                .iter()
                .map(|f| {
                    f.iter()
                        .enumerate()
                        .map(|(pos, v)| (index[&f.without(v)], if pos % 2 == 0 { 1 } else { -1 }))
                        .collect()
                })
                .collect();
            BoundaryMatrix {
                rows: faces[dim - 1].len(),
                columns,
            }
        })
        .collect()
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Rank over `F_p` by Gaussian elimination on the dense matrix.
pub fn rank_mod_p(m: &BoundaryMatrix, p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = m
        .to_dense()
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let (rows, cols) = (m.rows, m.cols());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn homology(k: &SimplicialComplex, ring: Ring) -> Result<HomologyProfile, HomologyError> {
    homology_with_budget(k, ring, face_budget_for_bytes(DEFAULT_MEMORY_BUDGET_BYTES))
}

pub fn homology_with_budget(
    k: &SimplicialComplex,
    ring: Ring,
    face_budget: u64,
) -> Result<HomologyProfile, HomologyError> {
    if let Ring::Prime(p) = ring {
        if !is_prime(p) {
            return Err(HomologyError::NotPrime(p));
        }
    }
    check_budget(k, face_budget)?;
    let faces = k.faces_by_dim();
    let boundaries = boundaries_of(&faces);
    let top = faces.len();
    // ranks[i] = rank ∂_i for i in 1..top, zero at both ends.
    let mut ranks = vec![0usize; top + 1];
    let mut torsion = vec![Vec::new(); top];
    for (idx, b) in boundaries.iter().enumerate() {
        let i = idx + 1;
        match ring {
            Ring::Prime(p) => ranks[i] = rank_mod_p(b, p),
            Ring::Integers => {
                let s = smith_normal_form(b.to_bigint());
                ranks[i] = s.rank();
                torsion[i - 1] = s
                    .torsion()
                    .iter()
                    .map(|t| t.to_u64().expect("torsion coefficient fits u64"))
                    .collect();
            }
        }
    }
    let betti = (0..top)
        .map(|i| faces[i].len() - ranks[i] - ranks[i + 1])
        .collect();
    Ok(HomologyProfile {
        ring,
        betti,
        torsion,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ManifoldCheck {
    pub holds: bool,
    /// A face whose link is not a homology sphere of the right dimension,
    /// or a maximal face of the wrong dimension.
    pub witness: Option<VertexSet>,
}

/// Pure of dimension `d` with every proper nonempty face having the link
/// homology of a `(d - dim σ - 1)`-sphere over `ring`.
pub fn is_homology_manifold(
    k: &SimplicialComplex,
    d: usize,
    ring: Ring,
) -> Result<ManifoldCheck, HomologyError> {
    is_homology_manifold_with_budget(k, d, ring, face_budget_for_bytes(DEFAULT_MEMORY_BUDGET_BYTES))
}

pub fn is_homology_manifold_with_budget(
    k: &SimplicialComplex,
    d: usize,
    ring: Ring,
    face_budget: u64,
) -> Result<ManifoldCheck, HomologyError> {
    if let Some(f) = k.facets().iter().find(|f| f.len() != d + 1) {
        return Ok(ManifoldCheck {
            holds: false,
            witness: Some(*f),
        });
    }
    if k.is_empty() {
        return Ok(ManifoldCheck {
            holds: false,
            witness: None,
        });
    }
    check_budget(k, face_budget)?;
    for faces in k.faces_by_dim().iter().take(d) {
        for &sigma in faces {
            let link = k.link(sigma).expect("face of k");
            let h = homology_with_budget(&link, ring, face_budget)?;
            if !h.is_sphere(d - sigma.len()) {
                return Ok(ManifoldCheck {
                    holds: false,
                    witness: Some(sigma),
                });
            }
        }
    }
    Ok(ManifoldCheck {
        holds: true,
        witness: None,
    })
}
