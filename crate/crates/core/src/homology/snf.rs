//! Smith normal form over the integers with exact arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<BigInt>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero invariant factors `d₁ | d₂ | …`, all positive.
    pub diagonal: Vec<BigInt>,
    /// `U` and `V` with `U·A·V = D`, when requested.
    pub transforms: Option<(Matrix, Matrix)>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = BigInt::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            s += &row[k] * &b[k][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

struct Reducer {
    a: Matrix,
    rows: usize,
    cols: usize,
    u: Option<Matrix>,
    v: Option<Matrix>,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            if let Some(u) = &mut self.u {
                u.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for r in self.a.iter_mut() {
                r.swap(i, j);
            }
            if let Some(v) = &mut self.v {
                for r in v.iter_mut() {
                    r.swap(i, j);
                }
            }
        }
    }

    /// row_i += c · row_j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        let (src, dst) = two_rows(&mut self.a, j, i);
        for (d, s) in dst.iter_mut().zip(src.iter()) {
            if !s.is_zero() {
                *d += c * s;
            }
        }
        if let Some(u) = &mut self.u {
            let (src, dst) = two_rows(u, j, i);
            for (d, s) in dst.iter_mut().zip(src.iter()) {
                if !s.is_zero() {
                    *d += c * s;
                }
            }
        }
    }

    /// col_i += c · col_j
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        for r in self.a.iter_mut() {
            if !r[j].is_zero() {
                let t = c * &r[j];
                r[i] += t;
            }
        }
        if let Some(v) = &mut self.v {
            for r in v.iter_mut() {
                if !r[j].is_zero() {
                    let t = c * &r[j];
                    r[i] += t;
                }
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -std::mem::take(x);
        }
        if let Some(u) = &mut self.u {
            for x in u[i].iter_mut() {
                *x = -std::mem::take(x);
            }
        }
    }

    fn min_abs_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[bi][bj].abs()) {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(mut self) -> SmithForm {
        let mut diagonal = Vec::new();
        let mut t = 0;
        while t < self.rows.min(self.cols) {
            let Some((i, j)) = self.min_abs_entry(t) else {
                break;
            };
            self.swap_rows(t, i);
            self.swap_cols(t, j);
            loop {
                // Clear column t below the pivot.
                let mut dirty = false;
                for i in t + 1..self.rows {
                    if !self.a[i][t].is_zero() {
                        let q = -(&self.a[i][t] / &self.a[t][t]);
                        self.add_row(i, t, &q);
                        dirty |= !self.a[i][t].is_zero();
                    }
                }
                if dirty {
                    let i = (t..self.rows)
                        .filter(|&i| !self.a[i][t].is_zero())
                        .min_by_key(|&i| self.a[i][t].abs())
                        .unwrap();
                    self.swap_rows(t, i);
                    continue;
                }
                // Clear row t right of the pivot.
                for j in t + 1..self.cols {
                    if !self.a[t][j].is_zero() {
                        let q = -(&self.a[t][j] / &self.a[t][t]);
                        self.add_col(j, t, &q);
                        dirty |= !self.a[t][j].is_zero();
                    }
                }
                if dirty {
                    let j = (t..self.cols)
                        .filter(|&j| !self.a[t][j].is_zero())
                        .min_by_key(|&j| self.a[t][j].abs())
                        .unwrap();
                    self.swap_cols(t, j);
                    continue;
                }
                // Enforce divisibility of the remaining block.
                let p = self.a[t][t].clone();
                let offender = (t + 1..self.rows)
                    .find(|&i| (t + 1..self.cols).any(|j| !self.a[i][j].is_multiple_of(&p)));
                match offender {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            diagonal.push(self.a[t][t].clone());
            t += 1;
        }
        SmithForm {
            diagonal,
            transforms: match (self.u, self.v) {
                (Some(u), Some(v)) => Some((u, v)),
                _ => None,
            },
        }
    }
}

fn two_rows(m: &mut Matrix, src: usize, dst: usize) -> (&Vec<BigInt>, &mut Vec<BigInt>) {
    assert_ne!(src, dst);
    if src < dst {
        let (a, b) = m.split_at_mut(dst);
        (&a[src], &mut b[0])
    } else {
        let (a, b) = m.split_at_mut(src);
        (&b[0], &mut a[dst])
    }
}

pub fn smith_normal_form(a: Matrix) -> SmithForm {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    Reducer { a, rows, cols, u: None, v: None }.run()
}

/// Also records unimodular `U`, `V` with `U·A·V = diag(d₁, …)`.
pub fn smith_normal_form_with_transforms(a: Matrix) -> SmithForm {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    Reducer {
        a,
        rows,
        cols,
        u: Some(identity(rows)),
        v: Some(identity(cols)),
    }
    .run()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn check_transforms(a: Matrix) -> SmithForm {
        let s = smith_normal_form_with_transforms(a.clone());
        let (u, v) = s.transforms.clone().unwrap();
        let d = mat_mul(&mat_mul(&u, &a), &v);
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let want = if i == j && i < s.diagonal.len() { s.diagonal[i].clone() } else { BigInt::zero() };
                assert_eq!(*x, want, "entry ({i},{j})");
            }
        }
        for w in s.diagonal.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn textbook_example() {
        let s = check_transforms(m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        let want: Vec<BigInt> = [2, 6, 12].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(s.diagonal, want);
    }

    #[test]
    fn divisibility_is_enforced() {
        let s = check_transforms(m(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn zero_and_empty() {
        assert_eq!(smith_normal_form(m(&[&[0, 0], &[0, 0]])).rank(), 0);
        assert_eq!(smith_normal_form(Vec::new()).rank(), 0);
    }

    #[test]
    fn random_small_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let r = rng.gen_range(1..6);
            let c = rng.gen_range(1..6);
            let a: Matrix = (0..r)
                .map(|_| (0..c).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect())
                .collect();
            check_transforms(a);
        }
    }
}
