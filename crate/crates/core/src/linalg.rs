//! Dense matrices over a prime field `F_p`, used to invert and solve
//! `F_p`-linear maps between field elements written in their base-`p`
//! digit coordinates.

/// A row-major matrix with entries in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Base-`p` digits of `index`, least significant first, padded to `len`.
pub fn digits(p: u32, mut index: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(index % p);
        index /= p;
    }
    out
}

/// Inverse of [`digits`].
pub fn from_digits(p: u32, digits: &[u32]) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    // p is prime, Fermat
    let mut result = 1u64;
    let mut base = (a % p) as u64;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    result as u32
}

impl FpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Matrix of the `F_p`-linear map `f` from a space with `in_dim` digits to
    /// one with `out_dim` digits; column `j` holds the digits of `f(p^j)`.
    pub fn from_linear_map(p: u32, in_dim: usize, out_dim: usize, f: impl Fn(u32) -> u32) -> Self {
        let mut m = Self::zeros(p, out_dim, in_dim);
        for j in 0..in_dim {
            let image = digits(p, f(p.pow(j as u32)), out_dim);
            for (i, d) in image.into_iter().enumerate() {
                m.set(i, j, d);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let s: u64 = (0..self.cols).map(|c| self.get(r, c) as u64 * v[c] as u64).sum();
                (s % self.p as u64) as u32
            })
            .collect()
    }

    /// Reduced row echelon form of `[self | rhs]`; returns the pivot columns.
    fn eliminate(&self, rhs: &mut FpMatrix) -> (FpMatrix, Vec<usize>) {
        let p = self.p as u64;
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(pr) = (row..a.rows).find(|&r| a.get(r, col) != 0) else {
                continue;
            };
            if pr != row {
                a.swap_rows(pr, row);
                rhs.swap_rows(pr, row);
            }
            let inv = inv_mod(a.get(row, col), self.p) as u64;
            a.scale_row(row, inv);
            rhs.scale_row(row, inv);
            for r in 0..a.rows {
                let factor = a.get(r, col) as u64;
                if r != row && factor != 0 {
                    let neg = p - factor;
                    a.add_row_multiple(r, row, neg);
                    rhs.add_row_multiple(r, row, neg);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: u64) {
        let p = self.p as u64;
        for c in 0..self.cols {
            let v = self.get(r, c) as u64 * s % p;
            self.data[r * self.cols + c] = v as u32;
        }
    }

    fn add_row_multiple(&mut self, target: usize, src: usize, s: u64) {
        let p = self.p as u64;
        for c in 0..self.cols {
            let v = (self.get(target, c) as u64 + s * self.get(src, c) as u64) % p;
            self.data[target * self.cols + c] = v as u32;
        }
    }

    pub fn rank(&self) -> usize {
        let mut dummy = FpMatrix::zeros(self.p, self.rows, 0);
        self.eliminate(&mut dummy).1.len()
    }

    /// Some solution `x` of `self * x = b`, or `None` if the system is inconsistent.
    /// Free variables are set to zero, so the answer is deterministic.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let mut rhs = FpMatrix::zeros(self.p, self.rows, 1);
        for (i, &v) in b.iter().enumerate() {
            rhs.set(i, 0, v);
        }
        let (_, pivots) = self.eliminate(&mut rhs);
        if (pivots.len()..self.rows).any(|r| rhs.get(r, 0) != 0) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = rhs.get(r, 0);
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let mut rhs = FpMatrix::identity(self.p, self.rows);
        let (_, pivots) = self.eliminate(&mut rhs);
        (pivots.len() == self.rows).then_some(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits_roundtrip() {
        assert_eq!(digits(3, 14, 3), vec![2, 1, 1]);
        assert_eq!(from_digits(3, &[2, 1, 1]), 14);
    }

    #[test]
    fn inverse_of_invertible_matrix() {
        let mut m = FpMatrix::zeros(5, 2, 2);
        m.set(0, 0, 1);
        m.set(0, 1, 2);
        m.set(1, 0, 3);
        m.set(1, 1, 4);
        let inv = m.inverse().unwrap();
        for v in [[1, 0], [0, 1], [3, 4]] {
            let back = inv.mul_vec(&m.mul_vec(&v));
            assert_eq!(back, v.to_vec());
        }
    }

    #[test]
    fn singular_matrix_has_no_inverse_and_partial_solutions() {
        let mut m = FpMatrix::zeros(3, 2, 2);
        m.set(0, 0, 1);
        m.set(0, 1, 1);
        m.set(1, 0, 2);
        m.set(1, 1, 2);
        assert!(m.inverse().is_none());
        assert_eq!(m.rank(), 1);
        let x = m.solve(&[1, 2]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![1, 2]);
        assert!(m.solve(&[1, 0]).is_none());
    }
}
