//! Permutations of `{1..n}`.
//!
//! Composition follows `(g·h)(x) = g(h(x))`: the right factor acts first.
//! Cycle notation reads left to right, so `(1 3 2 4)` sends 1→3→2→4→1.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_integer::Integer;

use crate::error::GroupError;
use crate::vertex_set::VertexSet;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // 0-based images
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= 256);
        Permutation {
            images: (0..n).map(|i| i as u8).collect(),
        }
    }

    /// From 1-based images: `images[i-1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(GroupError::NotABijection(n));
            }
            seen[x - 1] = true;
            out.push((x - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        Permutation { images }
    }

    /// Builds a permutation of degree `n` from disjoint cycles of 1-based
    /// points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n];
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x == 0 || x > n || touched[x - 1] {
                    return Err(GroupError::NotABijection(n));
                }
                touched[x - 1] = true;
                images[x - 1] = c[(i + 1) % c.len()];
            }
        }
        Self::from_images(&images)
    }

    /// Parses cycle notation such as `(1 3 2 4)(5 7 6 8)`; `()` is the
    /// identity. Commas are accepted as separators.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self, GroupError> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(GroupError::NotABijection(n));
            };
            let Some(end) = stripped.find(')') else {
                return Err(GroupError::NotABijection(n));
            };
            let body = &stripped[..end];
            let cycle = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| GroupError::NotABijection(n)))
                .collect::<Result<Vec<_>, _>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = stripped[end + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `v`.
    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1] as usize + 1
    }

    pub(crate) fn zero_based(&self) -> &[u8] {
        &self.images
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn apply_set(&self, s: VertexSet) -> VertexSet {
        s.map_zero_based(&self.images)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Cycles including fixed points, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(c);
        }
        out
    }

    /// Cycle length → number of cycles of that length (fixed points count
    /// as 1-cycles).
    pub fn cycle_type(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for c in self.cycles() {
            *m.entry(c.len()).or_insert(0) += 1;
        }
        m
    }

    pub fn fixed_points(&self) -> VertexSet {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i == x as usize)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1usize, |acc, c| acc.lcm(&c.len()))
    }

    pub fn to_cycle_string(&self) -> String {
        let nontrivial: Vec<Vec<usize>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return "()".to_string();
        }
        nontrivial
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(ToString::to_string).collect();
                format!("({})", body.join(" "))
            })
            .collect()
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn extend(&self, n: usize) -> Permutation {
        assert!(n >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..n as u8);
        Permutation { images }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}
