//! Character values computed from the constructions: linear characters of
//! subgroups (or of subgroups of quotients), induced by summing over
//! explicit coset representatives.
//!
//! Quotients by `X4X5X6`, `X5X6` and `X6` are normal, and an element's image
//! is read off by ignoring the dropped coordinates.

use super::subgroup::lambda_exp;
use super::CharLabel;
use crate::cyclotomic::ExpCounts;
use crate::error::{Error, Result};
use crate::field::{FieldTowerCtx, Fq3Element, FqElement};
use crate::group::{inverse, multiply, GroupElement, RootFactor};
use crate::CycInt;

/// Largest `q` the induction oracle accepts.
pub const ORACLE_MAX_Q: u32 = 7;

fn check_cap(ctx: &FieldTowerCtx) -> Result<()> {
    if ctx.q() > ORACLE_MAX_Q {
        return Err(Error::TooLarge {
            what: "oracle field order q",
            size: ctx.q() as u64,
            cap: ORACLE_MAX_Q as u64,
        });
    }
    Ok(())
}

/// `r⁻¹ x r`
fn conj_by_inverse(ctx: &FieldTowerCtx, r: &GroupElement, x: &GroupElement) -> GroupElement {
    multiply(ctx, &multiply(ctx, &inverse(ctx, r), x), r)
}

pub fn induced_value_oracle(ctx: &FieldTowerCtx, label: &CharLabel, x: &GroupElement) -> Result<CycInt> {
    check_cap(ctx)?;
    let p = ctx.p();
    let th = |a: FqElement, t: FqElement| ctx.fq_trace(ctx.fq_mul(a, t));
    let thp = |t: Fq3Element| ctx.fq_trace(ctx.pi_q(t));
    let mul = |a, b| ctx.fq3_mul(a, b);
    let mut acc = ExpCounts::new(p);
    match *label {
        CharLabel::Lin { a12, a23 } => acc.add_exp((thp(mul(a12, x.t1)) + th(a23, x.t2)) % p),
        CharLabel::F3 { a13, a12bar } => {
            // U/X4X5X6, induced from the image of X1X3
            for s in ctx.fq_elements() {
                let y = conj_by_inverse(ctx, &RootFactor::X2(s).element(), x);
                if y.t2.is_zero() {
                    acc.add_exp(thp(ctx.fq3_sub(mul(a12bar, y.t1), mul(a13, y.t3))));
                }
            }
        }
        CharLabel::F4 { a15, a23 } => {
            // U/X5X6, induced from the image of X2X3X4
            for r1 in ctx.fq3_elements() {
                let y = conj_by_inverse(ctx, &RootFactor::X1(r1).element(), x);
                if y.t1.is_zero() {
                    let lam = lambda_exp(ctx, FqElement::ZERO, FqElement::ZERO, a15, &y);
                    acc.add_exp((th(a23, y.t2) + lam) % p);
                }
            }
        }
        CharLabel::F5 { a16, a23, a13 } => {
            // U/X6, induced from the image of X2X3X4X5
            for r1 in ctx.fq3_elements() {
                let y = conj_by_inverse(ctx, &RootFactor::X1(r1).element(), x);
                if y.t1.is_zero() {
                    let e = th(a23, y.t2) + thp(ctx.fq3_neg(mul(a13, y.t3))) + th(a16, y.t5);
                    acc.add_exp(e % p);
                }
            }
        }
        CharLabel::F6 { a17, a12 } => {
            // induced from H = X1X4X5X6
            for r2 in ctx.fq_elements() {
                for r3 in ctx.fq3_elements() {
                    let r = GroupElement {
                        t2: r2,
                        t3: r3,
                        ..GroupElement::IDENTITY
                    };
                    let y = conj_by_inverse(ctx, &r, x);
                    if y.t2.is_zero() && y.t3.is_zero() {
                        acc.add_exp((thp(mul(a12, y.t1)) + th(a17, y.t6)) % p);
                    }
                }
            }
        }
    }
    Ok(acc.finish())
}

/// `Ind_N^U λ^{A17,A16,A15}(x)`, summed over the representatives `x(r1,r2,r3,0,0,0)`.
pub fn induced_from_n(
    ctx: &FieldTowerCtx,
    a17: FqElement,
    a16: FqElement,
    a15: Fq3Element,
    x: &GroupElement,
) -> Result<CycInt> {
    check_cap(ctx)?;
    let mut acc = ExpCounts::new(ctx.p());
    for r1 in ctx.fq3_elements() {
        for r2 in ctx.fq_elements() {
            for r3 in ctx.fq3_elements() {
                let r = GroupElement {
                    t1: r1,
                    t2: r2,
                    t3: r3,
                    ..GroupElement::IDENTITY
                };
                let y = conj_by_inverse(ctx, &r, x);
                if y.t1.is_zero() && y.t2.is_zero() && y.t3.is_zero() {
                    acc.add_exp(lambda_exp(ctx, a17, a16, a15, &y));
                }
            }
        }
    }
    Ok(acc.finish())
}
