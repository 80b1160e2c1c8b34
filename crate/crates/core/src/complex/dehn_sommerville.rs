//! h-vectors, Dehn–Sommerville residuals, and the exact linear solve for
//! f-vectors of neighborly homology manifolds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{FVector, SimplicialComplex};
use crate::error::ComplexError;
use crate::vertex_set::binomial;

/// `(h₀, …, h_{d+1})`, defined by
/// `Σ hᵢ t^{d+1-i} = Σ f_{i-1} (t-1)^{d+1-i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector(pub Vec<i64>);

impl HVector {
    pub fn from_f_vector(f: &FVector) -> HVector {
        let top = (f.dim() + 1) as usize; // d + 1
        let h = (0..=top)
            .map(|j| {
                (0..=j)
                    .map(|i| {
                        let c = binomial((top - i) as u64, (j - i) as u64) as i64;
                        let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                        sign * c * f.0[i] as i64
                    })
                    .sum()
            })
            .collect();
        HVector(h)
    }

    /// Inverts the defining identity: `f_{j-1} = Σ_{i≤j} C(d+1-i, j-i) hᵢ`.
    pub fn to_f_vector(&self) -> FVector {
        let top = self.0.len() - 1;
        let f = (0..=top)
            .map(|j| {
                let s: i64 = (0..=j)
                    .map(|i| binomial((top - i) as u64, (j - i) as u64) as i64 * self.0[i])
                    .sum();
                u64::try_from(s).expect("negative face count")
            })
            .collect();
        FVector(f)
    }
}

impl SimplicialComplex {
    pub fn h_vector(&self) -> Result<HVector, ComplexError> {
        if !self.is_pure() {
            return Err(ComplexError::NotPure(self.dim()));
        }
        Ok(HVector::from_f_vector(&self.f_vector()))
    }

    /// `h_{d+1-i} - h_i - (-1)^i C(d+1, i) (χ - 2)` for `0 ≤ i ≤ d+1`.
    pub fn dehn_sommerville_residual(&self, d: usize) -> Result<Vec<i64>, ComplexError> {
        if !self.is_pure() || self.dim() != d as isize {
            return Err(ComplexError::NotPure(d as isize));
        }
        let f = self.f_vector();
        let chi = f.euler_characteristic();
        let h = HVector::from_f_vector(&f).0;
        let top = d + 1;
        Ok((0..=top)
            .map(|i| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                h[top - i] - h[i] - sign * binomial(top as u64, i as u64) as i64 * (chi - 2)
            })
            .collect())
    }
}

/// Solves for the f-vector of an `n`-vertex, `k`-neighborly `d`-manifold
/// from the Dehn–Sommerville relations alone. Fails unless the solution is
/// unique, integral and nonnegative.
pub fn solve_neighborly_fvector(n: usize, d: usize, k: usize) -> Result<FVector, ComplexError> {
    let top = d + 1;
    // Each relation is a row of coefficients on (f₋₁, …, f_d) plus constant.
    let coeffs_h = |j: usize| -> Vec<BigInt> {
        let mut row = vec![BigInt::zero(); top + 1];
        for (i, c) in row.iter_mut().enumerate().take(j + 1) {
            let b = BigInt::from(binomial((top - i) as u64, (j - i) as u64));
            *c = if (j - i).is_multiple_of(2) { b } else { -b };
        }
        row
    };
    let chi_row: Vec<BigInt> = (0..=top)
        .map(|i| match i {
            0 => BigInt::zero(),
            i if (i - 1) % 2 == 0 => BigInt::one(),
            _ => -BigInt::one(),
        })
        .collect();

    let mut rows: Vec<(Vec<BigInt>, BigInt)> = Vec::new();
    for i in 0..=top {
        let hi = coeffs_h(i);
        let hj = coeffs_h(top - i);
        let c = BigInt::from(binomial(top as u64, i as u64));
        let c = if i % 2 == 0 { c } else { -c };
        // h_{top-i} - h_i - c·χ + 2c = 0
        let row: Vec<BigInt> = (0..=top)
            .map(|t| &hj[t] - &hi[t] - &c * &chi_row[t])
            .collect();
        rows.push((row, -BigInt::from(2) * &c));
    }

    let fixed = |idx: usize| -> Option<u64> {
        // idx = i + 1 for f_i; neighborliness fixes f_i = C(n, i+1) for i+1 ≤ k.
        (idx <= k).then(|| binomial(n as u64, idx as u64))
    };
    let unknowns: Vec<usize> = (0..=top).filter(|&idx| fixed(idx).is_none()).collect();
    let m = unknowns.len();

    // Dense rational system A x = b over the unknowns.
    let mut a: Vec<Vec<BigRational>> = Vec::new();
    let mut b: Vec<BigRational> = Vec::new();
    for (row, rhs) in &rows {
        let mut r = rhs.clone();
        for idx in 0..=top {
            if let Some(v) = fixed(idx) {
                r -= &row[idx] * BigInt::from(v);
            }
        }
        a.push(unknowns.iter().map(|&u| BigRational::from_integer(row[u].clone())).collect());
        b.push(BigRational::from_integer(r));
    }

    let mut pivot_row = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..m {
        let Some(p) = (pivot_row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, p);
        b.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for c in 0..m {
            a[pivot_row][c] = &a[pivot_row][c] * &inv;
        }
        b[pivot_row] = &b[pivot_row] * &inv;
        for r in 0..a.len() {
            if r != pivot_row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..m {
                    let t = &factor * &a[pivot_row][c];
                    a[r][c] -= t;
                }
                let t = &factor * &b[pivot_row];
                b[r] -= t;
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }
    if pivot_cols.len() < m {
        return Err(ComplexError::FVectorSystem("underdetermined"));
    }
    if b[pivot_row..].iter().any(|x| !x.is_zero()) {
        return Err(ComplexError::FVectorSystem("inconsistent"));
    }

    let mut f = vec![0u64; top + 1];
    for (idx, slot) in f.iter_mut().enumerate() {
        if let Some(v) = fixed(idx) {
            *slot = v;
        }
    }
    for (r, &col) in pivot_cols.iter().enumerate() {
        let x = &b[r];
        if !x.is_integer() || x.is_negative() {
            return Err(ComplexError::FVectorSystem("not a nonnegative integer solution"));
        }
        f[unknowns[col]] = x.to_integer().to_u64().expect("face count fits u64");
    }
    Ok(FVector(f))
}

/// The 15-vertex, 5-neighborly, 8-dimensional instance.
pub fn solve_bk_fvector() -> FVector {
    solve_neighborly_fvector(15, 8, 5).expect("the 15-vertex system has a unique solution")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::k_subsets;

    fn boundary(k: usize) -> SimplicialComplex {
        SimplicialComplex::from_facets(k + 1, k_subsets(k + 1, k)).unwrap()
    }

    #[test]
    fn simplex_boundary_has_all_ones() {
        assert_eq!(boundary(4).h_vector().unwrap(), HVector(vec![1; 5]));
        assert_eq!(boundary(5).dehn_sommerville_residual(4).unwrap(), vec![0; 6]);
    }

    #[test]
    fn h_vector_from_rp2_counts() {
        // Independent expansion of (t-1)^3 + 6(t-1)^2 + 15(t-1) + 10.
        let f = FVector(vec![1, 6, 15, 10]);
        let h = HVector::from_f_vector(&f);
        assert_eq!(h, HVector(vec![1, 3, 6, 0]));
        assert_eq!(h.to_f_vector(), f);
    }

    #[test]
    fn not_pure_is_rejected() {
        let k = SimplicialComplex::from_vertex_lists(4, &[&[1, 2, 3], &[3, 4]]).unwrap();
        assert_eq!(k.h_vector(), Err(ComplexError::NotPure(2)));
        assert!(boundary(3).dehn_sommerville_residual(3).is_err());
    }

    #[test]
    fn neighborly_solve_for_rp2_and_cp2() {
        // 6-vertex 2-neighborly surface: f = (6, 15, 10).
        assert_eq!(solve_neighborly_fvector(6, 2, 2).unwrap().0, vec![1, 6, 15, 10]);
        // 9-vertex 3-neighborly 4-manifold.
        assert_eq!(
            solve_neighborly_fvector(9, 4, 3).unwrap().0,
            vec![1, 9, 36, 84, 90, 36]
        );
    }

    #[test]
    fn underdetermined_system_is_reported() {
        assert_eq!(
            solve_neighborly_fvector(10, 4, 1),
            Err(ComplexError::FVectorSystem("underdetermined"))
        );
    }
}
