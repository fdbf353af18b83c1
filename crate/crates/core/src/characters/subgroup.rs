//! Characters of the normal subgroups `N = X4X5X6`, `H = X1X4X5X6` and
//! `T = X2X3X4X5X6`.

use serde::Serialize;

use crate::cyclotomic::ExpCounts;
use crate::error::{Error, Result};
use crate::field::{FieldTowerCtx, Fq3Element, FqElement};
use crate::group::{self, conjugate, format_element, GroupElement, RootFactor};
use crate::CycInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SubgroupCharLabel {
    /// `λ^{A17,A16,A15}` of `N`.
    N {
        a17: FqElement,
        a16: FqElement,
        a15: Fq3Element,
    },
    /// Linear characters of `H`.
    HLinear {
        a17: FqElement,
        a15: Fq3Element,
        a12: Fq3Element,
    },
    /// `Ind_N^H λ^{A17,A16,0}` with `A16 ≠ 0`.
    HInduced { a17: FqElement, a16: FqElement },
    /// Linear characters of `T`.
    TLinear {
        a16: FqElement,
        a15: Fq3Element,
        a13: Fq3Element,
        a23: FqElement,
    },
    /// `ψ^{A17}` of degree `q^4`, `A17 ≠ 0`.
    TInduced { a17: FqElement },
}

/// The three subgroups whose characters are tabulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subgroup {
    N,
    H,
    T,
}

impl Subgroup {
    pub fn contains(self, x: &GroupElement) -> bool {
        match self {
            Subgroup::N => in_n(x),
            Subgroup::H => Ambient::H.contains(x),
            Subgroup::T => Ambient::T.contains(x),
        }
    }
}

/// All irreducible characters of `N`, `H` or `T`, linear ones first.
pub fn subgroup_irreducibles(ctx: &FieldTowerCtx, which: Subgroup) -> Vec<SubgroupCharLabel> {
    let mut out = Vec::new();
    match which {
        Subgroup::N => {
            for a17 in ctx.fq_elements() {
                for a16 in ctx.fq_elements() {
                    for a15 in ctx.fq3_elements() {
                        out.push(SubgroupCharLabel::N { a17, a16, a15 });
                    }
                }
            }
        }
        Subgroup::H => {
            for a17 in ctx.fq_elements() {
                for a15 in ctx.fq3_elements() {
                    for a12 in ctx.fq3_elements() {
                        out.push(SubgroupCharLabel::HLinear { a17, a15, a12 });
                    }
                }
            }
            for a17 in ctx.fq_elements() {
                for a16 in ctx.fq_nonzero() {
                    out.push(SubgroupCharLabel::HInduced { a17, a16 });
                }
            }
        }
        Subgroup::T => {
            for a16 in ctx.fq_elements() {
                for a15 in ctx.fq3_elements() {
                    for a13 in ctx.fq3_elements() {
                        for a23 in ctx.fq_elements() {
                            out.push(SubgroupCharLabel::TLinear { a16, a15, a13, a23 });
                        }
                    }
                }
            }
            for a17 in ctx.fq_nonzero() {
                out.push(SubgroupCharLabel::TInduced { a17 });
            }
        }
    }
    out
}

/// Groups in which inertia groups of characters of `N` are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    U,
    H,
    T,
}

impl Ambient {
    pub fn contains(self, x: &GroupElement) -> bool {
        match self {
            Ambient::U => true,
            Ambient::H => x.t2.is_zero() && x.t3.is_zero(),
            Ambient::T => x.t1.is_zero(),
        }
    }
}

fn in_n(x: &GroupElement) -> bool {
    x.t1.is_zero() && x.t2.is_zero() && x.t3.is_zero()
}

/// Exponent of `ϑπ_q(A15^q t4 + A15 t4^{q²})`.
fn n_part(ctx: &FieldTowerCtx, a15: Fq3Element, t4: Fq3Element) -> u32 {
    let arg = ctx.fq3_add(
        ctx.fq3_mul(ctx.frobenius_q(a15), t4),
        ctx.fq3_mul(a15, ctx.frobenius_q2(t4)),
    );
    ctx.fq_trace(ctx.pi_q(arg))
}

/// `λ^{A17,A16,A15}(x)` as an exponent of `ζ_p`, for `x ∈ N`.
pub(crate) fn lambda_exp(
    ctx: &FieldTowerCtx,
    a17: FqElement,
    a16: FqElement,
    a15: Fq3Element,
    x: &GroupElement,
) -> u32 {
    let e = ctx.fq_trace(ctx.fq_mul(a17, x.t6)) + ctx.fq_trace(ctx.fq_mul(a16, x.t5)) + n_part(ctx, a15, x.t4);
    e % ctx.p()
}

pub fn subgroup_char_value(ctx: &FieldTowerCtx, label: &SubgroupCharLabel, x: &GroupElement) -> Result<CycInt> {
    let p = ctx.p();
    let q = ctx.q() as i64;
    let th = |a: FqElement, t: FqElement| ctx.fq_trace(ctx.fq_mul(a, t));
    let thp = |t: Fq3Element| ctx.fq_trace(ctx.pi_q(t));
    let outside = |subgroup| {
        Err(Error::NotInSubgroup {
            subgroup,
            element: format_element(ctx, x),
        })
    };
    let mut acc = ExpCounts::new(p);
    match *label {
        SubgroupCharLabel::N { a17, a16, a15 } => {
            if !in_n(x) {
                return outside("N");
            }
            acc.add_exp(lambda_exp(ctx, a17, a16, a15, x));
        }
        SubgroupCharLabel::HLinear { a17, a15, a12 } => {
            if !Ambient::H.contains(x) {
                return outside("H");
            }
            acc.add_exp((th(a17, x.t6) + n_part(ctx, a15, x.t4) + thp(ctx.fq3_mul(a12, x.t1))) % p);
        }
        SubgroupCharLabel::HInduced { a17, a16 } => {
            if !Ambient::H.contains(x) {
                return outside("H");
            }
            if x.t1.is_zero() && x.t4.is_zero() {
                acc.add_exp_times((th(a17, x.t6) + th(a16, x.t5)) % p, q.pow(3));
            }
        }
        SubgroupCharLabel::TLinear { a16, a15, a13, a23 } => {
            if !Ambient::T.contains(x) {
                return outside("T");
            }
            let e = th(a16, x.t5) + n_part(ctx, a15, x.t4) + thp(ctx.fq3_neg(ctx.fq3_mul(a13, x.t3))) + th(a23, x.t2);
            acc.add_exp(e % p);
        }
        SubgroupCharLabel::TInduced { a17 } => {
            if !Ambient::T.contains(x) {
                return outside("T");
            }
            if x.support() & !32 == 0 {
                acc.add_exp_times(th(a17, x.t6), q.pow(4));
            }
        }
    }
    Ok(acc.finish())
}

/// `|{u ∈ ambient : λ^u = λ}|` for a character `λ` of `N`, by enumeration.
pub fn inertia_order(
    ctx: &FieldTowerCtx,
    label: &SubgroupCharLabel,
    ambient: Ambient,
    cap: Option<u64>,
) -> Result<u64> {
    let SubgroupCharLabel::N { a17, a16, a15 } = *label else {
        return Err(Error::NotInSubgroup {
            subgroup: "N",
            element: format!("{label:?}"),
        });
    };
    let mut gens = Vec::new();
    for b in ctx.fq3_basis() {
        gens.push(RootFactor::X4(b).element());
    }
    for b in ctx.fq_basis() {
        gens.push(RootFactor::X5(b).element());
        gens.push(RootFactor::X6(b).element());
    }
    let values: Vec<u32> = gens.iter().map(|n| lambda_exp(ctx, a17, a16, a15, n)).collect();
    let mut count = 0;
    for u in group::enumerate_all(ctx, cap)? {
        if !ambient.contains(&u) {
            continue;
        }
        // λ^u(n) = λ(u n u⁻¹); linear characters agree iff they agree on generators
        let fixed = gens
            .iter()
            .zip(&values)
            .all(|(n, &v)| lambda_exp(ctx, a17, a16, a15, &conjugate(ctx, &u, n)) == v);
        count += fixed as u64;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_tower;
    use crate::group::multiply;

    fn ctx3() -> FieldTowerCtx {
        build_tower(3, 1, None, None).unwrap()
    }

    fn n_elements(ctx: &FieldTowerCtx) -> Vec<GroupElement> {
        let mut out = Vec::new();
        for t4 in ctx.fq3_elements() {
            for t5 in ctx.fq_elements() {
                for t6 in ctx.fq_elements() {
                    out.push(GroupElement {
                        t4,
                        t5,
                        t6,
                        ..GroupElement::IDENTITY
                    });
                }
            }
        }
        out
    }

    #[test]
    fn n_characters_are_homomorphisms() {
        let ctx = ctx3();
        let elems = n_elements(&ctx);
        let label = SubgroupCharLabel::N {
            a17: FqElement::ONE,
            a16: ctx.fq(2).unwrap(),
            a15: ctx.fq3(7).unwrap(),
        };
        for x in elems.iter().step_by(5) {
            for y in elems.iter().step_by(7) {
                let xy = multiply(&ctx, x, y);
                let lhs = subgroup_char_value(&ctx, &label, &xy).unwrap();
                let rhs = subgroup_char_value(&ctx, &label, x).unwrap() * subgroup_char_value(&ctx, &label, y).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        for t6 in ctx.fq_elements() {
            let v = subgroup_char_value(&ctx, &label, &RootFactor::X6(t6).element()).unwrap();
            assert_eq!(v, crate::theta(&ctx, t6));
        }
        let outside = RootFactor::X1(Fq3Element::ONE).element();
        assert!(matches!(
            subgroup_char_value(&ctx, &label, &outside),
            Err(Error::NotInSubgroup { .. })
        ));
    }

    #[test]
    fn induced_rows() {
        let ctx = ctx3();
        let (a17, a16) = (ctx.fq(2).unwrap(), FqElement::ONE);
        let label = SubgroupCharLabel::HInduced { a17, a16 };
        for t5 in ctx.fq_elements() {
            for t6 in ctx.fq_elements() {
                let x = GroupElement {
                    t5,
                    t6,
                    ..GroupElement::IDENTITY
                };
                let expected = (crate::theta(&ctx, ctx.fq_mul(a17, t6)) * crate::theta(&ctx, ctx.fq_mul(a16, t5)))
                    .checked_scale(&27)
                    .unwrap();
                assert_eq!(subgroup_char_value(&ctx, &label, &x).unwrap(), expected);
            }
        }
        let psi = SubgroupCharLabel::TInduced { a17: FqElement::ONE };
        for t5 in ctx.fq_nonzero() {
            assert!(subgroup_char_value(&ctx, &psi, &RootFactor::X5(t5).element())
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn restriction_of_the_induced_character_to_n() {
        // Res_N Ind_N^H λ^{A17,A16,0} = Σ_{B15} λ^{A17,A16,B15}
        let ctx = ctx3();
        let (a17, a16) = (FqElement::ONE, ctx.fq(2).unwrap());
        let induced = SubgroupCharLabel::HInduced { a17, a16 };
        for x in n_elements(&ctx) {
            let sum = ctx
                .fq3_elements()
                .map(|b15| subgroup_char_value(&ctx, &SubgroupCharLabel::N { a17, a16, a15: b15 }, &x).unwrap())
                .fold(CycInt::zero(3), |a, b| a + b);
            assert_eq!(subgroup_char_value(&ctx, &induced, &x).unwrap(), sum);
        }
    }

    fn subgroup_elements(ctx: &FieldTowerCtx, which: Subgroup) -> Vec<GroupElement> {
        group::enumerate_all(ctx, None)
            .unwrap()
            .filter(|x| which.contains(x))
            .collect()
    }

    #[test]
    fn subgroup_tables_are_complete() {
        let ctx = ctx3();
        for (which, order, linear, big, big_degree) in [
            (Subgroup::H, 3u64.pow(8), 3u64.pow(7), 6u64, 27i64),
            (Subgroup::T, 3u64.pow(9), 3u64.pow(8), 2, 81),
        ] {
            let labels = subgroup_irreducibles(&ctx, which);
            let elems = subgroup_elements(&ctx, which);
            assert_eq!(elems.len() as u64, order);
            assert_eq!(labels.len() as u64, linear + big);
            let mut degree_sq = 0u64;
            let mut rows = std::collections::HashSet::new();
            for l in &labels {
                let deg = subgroup_char_value(&ctx, l, &GroupElement::IDENTITY).unwrap();
                let d = *deg.as_integer().unwrap();
                degree_sq += (d * d) as u64;
                if d == 1 {
                    // a linear character is determined by its values on generators
                    let row: Vec<_> = group::generators(&ctx)
                        .iter()
                        .filter(|g| which.contains(g))
                        .map(|g| subgroup_char_value(&ctx, l, g).unwrap())
                        .collect();
                    assert!(rows.insert(row));
                } else {
                    assert_eq!(d, big_degree);
                    let norm = elems
                        .iter()
                        .map(|x| {
                            let v = subgroup_char_value(&ctx, l, x).unwrap();
                            &v * &v.conj()
                        })
                        .fold(CycInt::zero(3), |a, b| a + b);
                    assert_eq!(norm, CycInt::from_int(3, order as i64));
                }
            }
            assert_eq!(degree_sq, order);
        }
        assert_eq!(subgroup_irreducibles(&ctx, Subgroup::N).len(), 3usize.pow(5));
    }

    #[test]
    fn inertia_groups() {
        let ctx = ctx3();
        let z = FqElement::ZERO;
        let trivial = SubgroupCharLabel::N {
            a17: z,
            a16: z,
            a15: Fq3Element::ZERO,
        };
        assert_eq!(inertia_order(&ctx, &trivial, Ambient::U, None).unwrap(), 3u64.pow(12));
        let central = SubgroupCharLabel::N {
            a17: FqElement::ONE,
            a16: z,
            a15: Fq3Element::ZERO,
        };
        assert_eq!(inertia_order(&ctx, &central, Ambient::U, None).unwrap(), 3u64.pow(8));
        let x5 = SubgroupCharLabel::N {
            a17: FqElement::ONE,
            a16: FqElement::ONE,
            a15: Fq3Element::ZERO,
        };
        assert_eq!(inertia_order(&ctx, &x5, Ambient::H, None).unwrap(), 3u64.pow(5));
    }
}
