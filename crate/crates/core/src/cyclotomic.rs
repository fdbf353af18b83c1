//! Exact arithmetic in `Z[ζ_p]` and the additive character `ϑ` of `F_q`.
//!
//! Values are stored in the basis `1, ζ, .., ζ^{p-2}`; the relation
//! `1 + ζ + .. + ζ^{p-1} = 0` eliminates `ζ^{p-1}`, so equal numbers have
//! equal coefficient vectors.

use std::fmt;

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{FieldTowerCtx, Fq3Element, FqElement};

/// Coefficient types usable for [`Cyclotomic`].
pub trait CycScalar:
    Clone + Eq + std::hash::Hash + fmt::Debug + Signed + CheckedAdd + CheckedSub + CheckedMul + FromPrimitive + ToPrimitive
{
}

impl<T> CycScalar for T where
    T: Clone
        + Eq
        + std::hash::Hash
        + fmt::Debug
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
{
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic<T> {
    p: u32,
    coeffs: Vec<T>,
}

impl<T: CycScalar> Cyclotomic<T> {
    pub fn zero(p: u32) -> Self {
        Cyclotomic {
            p,
            coeffs: vec![T::zero(); p as usize - 1],
        }
    }

    pub fn one(p: u32) -> Self {
        Self::from_int(p, T::one())
    }

    pub fn from_int(p: u32, n: T) -> Self {
        let mut c = Self::zero(p);
        c.coeffs[0] = n;
        c
    }

    /// `ζ_p^e`
    pub fn zeta_pow(p: u32, e: i64) -> Self {
        let e = e.rem_euclid(p as i64) as usize;
        let mut counts = vec![T::zero(); p as usize];
        counts[e] = T::one();
        Self::from_exponent_counts(p, counts).expect("single term cannot overflow")
    }

    /// `Σ_e counts[e] ζ^e` for a slice of length `p`.
    pub fn from_exponent_counts(p: u32, mut counts: Vec<T>) -> Result<Self> {
        assert_eq!(counts.len(), p as usize);
        let top = counts.pop().unwrap();
        for c in counts.iter_mut() {
            *c = c.checked_sub(&top).ok_or(Error::IntegerOverflow)?;
        }
        Ok(Cyclotomic { p, coeffs: counts })
    }

    /// Builds a value from canonical coefficients `c_0, .., c_{p-2}`.
    pub fn from_coeffs(p: u32, coeffs: Vec<T>) -> Option<Self> {
        (coeffs.len() == p as usize - 1).then_some(Cyclotomic { p, coeffs })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `Some(n)` when the value is the rational integer `n`.
    pub fn as_integer(&self) -> Option<&T> {
        self.coeffs[1..].iter().all(|c| c.is_zero()).then(|| &self.coeffs[0])
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.p, other.p);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(b).ok_or(Error::IntegerOverflow))
            .collect::<Result<_>>()?;
        Ok(Cyclotomic { p: self.p, coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.p, other.p);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_sub(b).ok_or(Error::IntegerOverflow))
            .collect::<Result<_>>()?;
        Ok(Cyclotomic { p: self.p, coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.p, other.p);
        let p = self.p as usize;
        let mut counts = vec![T::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::IntegerOverflow)?;
                let slot = &mut counts[(i + j) % p];
                *slot = slot.checked_add(&term).ok_or(Error::IntegerOverflow)?;
            }
        }
        Self::from_exponent_counts(self.p, counts)
    }

    pub fn checked_scale(&self, n: &T) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(n).ok_or(Error::IntegerOverflow))
            .collect::<Result<_>>()?;
        Ok(Cyclotomic { p: self.p, coeffs })
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let p = self.p as usize;
        let mut counts = vec![T::zero(); p];
        for (i, c) in self.coeffs.iter().enumerate() {
            counts[(p - i) % p] = c.clone();
        }
        Self::from_exponent_counts(self.p, counts).expect("permutation of coefficients")
    }

    /// Floating-point rendering, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let p = self.p as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (i, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let angle = 2.0 * std::f64::consts::PI * i as f64 / p;
            (re + c * angle.cos(), im + c * angle.sin())
        })
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<T: CycScalar> std::ops::$trait for &Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $method(self, rhs: Self) -> Cyclotomic<T> {
                self.$checked(rhs).expect("cyclotomic integer overflow")
            }
        }
        impl<T: CycScalar> std::ops::$trait for Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $method(self, rhs: Self) -> Cyclotomic<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl<T: CycScalar> std::ops::Neg for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic::neg(&self)
    }
}

impl<T: CycScalar + fmt::Display> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            first = false;
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{abs}*z")?,
                (_, true) => write!(f, "z^{i}")?,
                (_, false) => write!(f, "{abs}*z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<T: Serialize> Serialize for Cyclotomic<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

/// Accumulates `Σ n_e ζ^e` by counting exponents; exact and overflow-free
/// for fewer than `2^63` terms.
#[derive(Clone, Debug)]
pub struct ExpCounts {
    counts: Vec<i64>,
}

impl ExpCounts {
    pub fn new(p: u32) -> Self {
        ExpCounts {
            counts: vec![0; p as usize],
        }
    }

    #[inline]
    pub fn add_exp(&mut self, e: u32) {
        self.counts[e as usize] += 1;
    }

    #[inline]
    pub fn add_exp_times(&mut self, e: u32, n: i64) {
        self.counts[e as usize] += n;
    }

    pub fn finish(self) -> Cyclotomic<i64> {
        let p = self.counts.len() as u32;
        Cyclotomic::from_exponent_counts(p, self.counts).expect("counts are small")
    }
}

/// Exponent `e` with `ϑ(b) = ζ_p^e`.
#[inline]
pub fn theta_exp(ctx: &FieldTowerCtx, b: FqElement) -> u32 {
    ctx.fq_trace(b)
}

/// `ϑ(b) = ζ_p^{Tr(b)}`, the fixed nontrivial character of `F_q^+`.
pub fn theta(ctx: &FieldTowerCtx, b: FqElement) -> Cyclotomic<i64> {
    Cyclotomic::zeta_pow(ctx.p(), theta_exp(ctx, b) as i64)
}

/// `ϑ(π_q(x))`
pub fn theta_pi(ctx: &FieldTowerCtx, x: Fq3Element) -> Cyclotomic<i64> {
    theta(ctx, ctx.pi_q(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_tower;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type C = Cyclotomic<i64>;

    fn ctx3() -> FieldTowerCtx {
        build_tower(3, 1, None, None).unwrap()
    }

    #[test]
    fn minimal_relation_reduces_to_zero() {
        for p in [3, 5, 7] {
            let sum = (0..p as i64).map(|e| C::zeta_pow(p, e)).fold(C::zero(p), |a, b| a + b);
            assert!(sum.is_zero());
            assert_eq!(C::zeta_pow(p, p as i64 - 1) * C::zeta_pow(p, 1), C::one(p));
        }
    }

    #[test]
    fn conjugation_and_theta() {
        let ctx = ctx3();
        assert_eq!(theta(&ctx, FqElement::ZERO), C::one(3));
        let total = ctx.fq_elements().map(|b| theta(&ctx, b)).fold(C::zero(3), |a, b| a + b);
        assert!(total.is_zero());
        for a in ctx.fq_elements() {
            assert_eq!(theta(&ctx, a).conj(), theta(&ctx, ctx.fq_neg(a)));
            for b in ctx.fq_elements() {
                assert_eq!(theta(&ctx, ctx.fq_add(a, b)), theta(&ctx, a) * theta(&ctx, b));
            }
        }
        // over F_9 the trace is what makes ϑ nontrivial on the non-prime part
        let ctx9 = build_tower(3, 2, None, None).unwrap();
        let total = ctx9
            .fq_elements()
            .map(|b| theta(&ctx9, b))
            .fold(C::zero(3), |a, b| a + b);
        assert!(total.is_zero());
        assert!(ctx9.fq_elements().any(|b| ctx9.fq_trace(b) != 0));
    }

    #[test]
    fn theta_pi_properties() {
        let ctx = ctx3();
        assert_eq!(theta_pi(&ctx, Fq3Element::ZERO), C::one(3));
        for c in ctx.fq_elements() {
            assert_eq!(theta_pi(&ctx, ctx.embed(c)), theta(&ctx, c));
        }
        for a in ctx.fq3_nonzero() {
            let s = ctx
                .fq3_elements()
                .map(|t| theta_pi(&ctx, ctx.fq3_mul(a, t)))
                .fold(C::zero(3), |x, y| x + y);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn twisted_character_identity() {
        let ctx = ctx3();
        let eta = ctx.eta();
        let factor = ctx.fq3_mul(ctx.fq3_inv(eta).unwrap(), ctx.fq3_add(eta, ctx.frobenius_q(eta)));
        for u in ctx.fq3_elements() {
            let uq = ctx.frobenius_q(u);
            for t in ctx.fq3_elements() {
                let lhs = ctx.fq3_add(ctx.fq3_mul(uq, t), ctx.fq3_mul(u, ctx.frobenius_q2(t)));
                let rhs = ctx.fq3_mul(ctx.fq3_mul(factor, uq), t);
                assert_eq!(theta_pi(&ctx, lhs), theta_pi(&ctx, rhs));
            }
        }
    }

    #[test]
    fn characters_of_the_big_field_are_distinct() {
        let ctx = ctx3();
        let mut rows: Vec<Vec<u32>> = ctx
            .fq3_elements()
            .map(|a| {
                ctx.fq3_elements()
                    .map(|t| theta_exp(&ctx, ctx.pi_q(ctx.fq3_mul(a, t))))
                    .collect()
            })
            .collect();
        rows.sort();
        rows.dedup();
        assert_eq!(rows.len(), 27);
    }

    #[test]
    fn overflow_is_detected() {
        let big = C::from_int(3, i64::MAX);
        assert_eq!(big.checked_add(&C::one(3)), Err(Error::IntegerOverflow));
        assert_eq!(big.checked_mul(&C::from_int(3, 2)), Err(Error::IntegerOverflow));
        let b = Cyclotomic::<BigInt>::from_int(3, BigInt::from(i64::MAX));
        let sum = b.checked_add(&Cyclotomic::one(3)).unwrap();
        assert_eq!(sum.coeffs()[0], BigInt::from(i64::MAX) + 1);
    }

    #[test]
    fn display_and_complex() {
        let z = C::zeta_pow(3, 1);
        assert_eq!(z.to_string(), "z");
        assert_eq!(C::zeta_pow(3, 2).to_string(), "-1 - z");
        assert_eq!(C::zero(5).to_string(), "0");
        let (re, im) = z.to_complex();
        assert!((re + 0.5).abs() < 1e-12 && (im - 0.75f64.sqrt()).abs() < 1e-12);
        assert_eq!(serde_json::to_string(&C::zeta_pow(5, 4)).unwrap(), "[-1,-1,-1,-1]");
    }

    fn arb(p: u32) -> impl Strategy<Value = C> {
        proptest::collection::vec(-1000i64..1000, p as usize - 1).prop_map(move |c| C::from_coeffs(p, c).unwrap())
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb(5), b in arb(5), c in arb(5)) {
            prop_assert!((a.clone() + a.neg()).is_zero());
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a * &b) * c.clone(), a.clone() * (&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
            prop_assert_eq!(a.conj().conj(), a);
        }
    }
}
