//! Integer polynomials in `q`, used for the census and count identities.

use std::ops::{Add, Mul, Neg, Sub};

/// `Σ c_i q^i`, coefficients stored lowest degree first without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly(Vec<i64>);

impl QPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![c])
    }

    /// `c q^d`
    pub fn monomial(c: i64, d: usize) -> Self {
        let mut v = vec![0; d + 1];
        v[d] = c;
        Self::new(v)
    }

    /// `q^d`
    pub fn q_pow(d: usize) -> Self {
        Self::monomial(1, d)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn eval(&self, q: i128) -> i128 {
        self.0.iter().rev().fold(0, |acc, &c| acc * q + c as i128)
    }

    /// Coefficients of the same polynomial in powers of `q - 1`, lowest first.
    pub fn in_q_minus_one(&self) -> Vec<i64> {
        // substitute q = x + 1 via Horner
        let mut out: Vec<i64> = Vec::new();
        for &c in self.0.iter().rev() {
            // out <- out * (x + 1) + c
            let mut next = vec![0; out.len() + 1];
            for (i, &a) in out.iter().enumerate() {
                next[i] += a;
                next[i + 1] += a;
            }
            next[0] += c;
            out = next;
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.0.len().max(rhs.0.len());
        QPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&0) + rhs.0.get(i).unwrap_or(&0))
                .collect(),
        )
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.0.iter().map(|c| -c).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return QPoly::default();
        }
        let mut v = vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly::new(v)
    }
}

macro_rules! owned_op {
    ($trait:ident, $method:ident) => {
        impl $trait for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_op!(Add, add);
owned_op!(Sub, sub);
owned_op!(Mul, mul);

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::default(), |a, b| a + b)
    }
}
