//! Irreducible characters of `U`: labels, closed-form values on the class
//! representatives, and the materialized character table.
//!
//! The five families and their parameters are
//!
//! | family | parameters                                   | degree |
//! |--------|----------------------------------------------|--------|
//! | `Lin`  | `A12 ∈ F_{q³}`, `A23 ∈ F_q`                   | 1      |
//! | `F3`   | `A13 ∈ F_{q³}*`, `Ā12 ∈ T^{A13}`              | q      |
//! | `F4`   | `A15 ∈ F_{q³}*`, `A23 ∈ F_q`                  | q³     |
//! | `F5`   | `A16 ∈ F_q*`, `A23 ∈ F_q`, `A13 ∈ F_{q³}`     | q³     |
//! | `F6`   | `A17 ∈ F_q*`, `A12 ∈ F_{q³}`                  | q⁴     |

mod oracle;
mod subgroup;
mod table;

pub use oracle::{induced_from_n, induced_value_oracle, ORACLE_MAX_Q};
pub use subgroup::{inertia_order, subgroup_char_value, subgroup_irreducibles, Ambient, Subgroup, SubgroupCharLabel};
pub use table::{CharTable, TABLE_CELL_CAP};

use serde::Serialize;

use crate::conjugacy::{canonical_rep, ClassCensus, ClassFamily, ConjClass};
use crate::cyclotomic::ExpCounts;
use crate::error::{Error, Result};
use crate::field::{FieldTowerCtx, Fq3Element, FqElement};
use crate::group::{format_element, GroupElement};
use crate::poly::QPoly;
use crate::CycInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CharFamily {
    Lin,
    F3,
    F4,
    F5,
    F6,
}

impl CharFamily {
    pub const ALL: [CharFamily; 5] = [
        CharFamily::Lin,
        CharFamily::F3,
        CharFamily::F4,
        CharFamily::F5,
        CharFamily::F6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CharFamily::Lin => "lin",
            CharFamily::F3 => "F3",
            CharFamily::F4 => "F4",
            CharFamily::F5 => "F5",
            CharFamily::F6 => "F6",
        }
    }

    /// `e` with `deg χ = q^e`.
    pub fn degree_exponent(self) -> u32 {
        match self {
            CharFamily::Lin => 0,
            CharFamily::F3 => 1,
            CharFamily::F4 | CharFamily::F5 => 3,
            CharFamily::F6 => 4,
        }
    }

    pub fn count_poly(self) -> QPoly {
        let q = QPoly::q_pow;
        let one = || QPoly::constant(1);
        match self {
            CharFamily::Lin => q(4),
            CharFamily::F3 => q(2) * (q(3) - one()),
            CharFamily::F4 => q(1) * (q(3) - one()),
            CharFamily::F5 => q(4) * (q(1) - one()),
            CharFamily::F6 => q(3) * (q(1) - one()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family")]
pub enum CharLabel {
    Lin {
        a12: Fq3Element,
        a23: FqElement,
    },
    F3 {
        a13: Fq3Element,
        a12bar: Fq3Element,
    },
    F4 {
        a15: Fq3Element,
        a23: FqElement,
    },
    F5 {
        a16: FqElement,
        a23: FqElement,
        a13: Fq3Element,
    },
    F6 {
        a17: FqElement,
        a12: Fq3Element,
    },
}

impl CharLabel {
    pub fn family(&self) -> CharFamily {
        match self {
            CharLabel::Lin { .. } => CharFamily::Lin,
            CharLabel::F3 { .. } => CharFamily::F3,
            CharLabel::F4 { .. } => CharFamily::F4,
            CharLabel::F5 { .. } => CharFamily::F5,
            CharLabel::F6 { .. } => CharFamily::F6,
        }
    }

    pub fn degree(&self, ctx: &FieldTowerCtx) -> u64 {
        (ctx.q() as u64).pow(self.family().degree_exponent())
    }

    /// Compact rendering with parameters as `F_p` coefficient lists.
    pub fn describe(&self, ctx: &FieldTowerCtx) -> String {
        let a = |x: Fq3Element| ctx.fmt_fq3(x);
        let b = |x: FqElement| ctx.fmt_fq(x);
        match *self {
            CharLabel::Lin { a12, a23 } => format!("lin(A12={},A23={})", a(a12), b(a23)),
            CharLabel::F3 { a13, a12bar } => format!("F3(A13={},A12bar={})", a(a13), a(a12bar)),
            CharLabel::F4 { a15, a23 } => format!("F4(A15={},A23={})", a(a15), b(a23)),
            CharLabel::F5 { a16, a23, a13 } => format!("F5(A16={},A23={},A13={})", b(a16), b(a23), a(a13)),
            CharLabel::F6 { a17, a12 } => format!("F6(A17={},A12={})", b(a17), a(a12)),
        }
    }
}

/// All irreducible characters: families in the order `Lin, F3, F4, F5, F6`,
/// parameters in increasing index order.
pub fn list_irreducibles(ctx: &FieldTowerCtx) -> Vec<CharLabel> {
    let mut out = Vec::new();
    for a12 in ctx.fq3_elements() {
        for a23 in ctx.fq_elements() {
            out.push(CharLabel::Lin { a12, a23 });
        }
    }
    for a13 in ctx.fq3_nonzero() {
        for a12bar in ctx.transversal(a13).expect("a13 is nonzero") {
            out.push(CharLabel::F3 { a13, a12bar });
        }
    }
    for a15 in ctx.fq3_nonzero() {
        for a23 in ctx.fq_elements() {
            out.push(CharLabel::F4 { a15, a23 });
        }
    }
    for a16 in ctx.fq_nonzero() {
        for a23 in ctx.fq_elements() {
            for a13 in ctx.fq3_elements() {
                out.push(CharLabel::F5 { a16, a23, a13 });
            }
        }
    }
    for a17 in ctx.fq_nonzero() {
        for a12 in ctx.fq3_elements() {
            out.push(CharLabel::F6 { a17, a12 });
        }
    }
    out
}

/// Checks that `c.rep` is a listed representative of family `c.family`.
fn check_rep(ctx: &FieldTowerCtx, c: &ConjClass) -> Result<()> {
    let x = &c.rep;
    let zero3 = |t: Fq3Element| t.is_zero();
    let zero = |t: FqElement| t.is_zero();
    let ok = match c.family {
        ClassFamily::Identity => x.is_identity(),
        ClassFamily::X6 => x.support() == 32,
        ClassFamily::X5 => x.support() == 16,
        ClassFamily::X4 => x.support() == 8,
        ClassFamily::T3T5 => !zero3(x.t3) && x.support() & !(4 | 16) == 0,
        ClassFamily::T2T4T5 => !zero(x.t2) && x.support() & !(2 | 8 | 16) == 0,
        ClassFamily::T1T6 => !zero3(x.t1) && x.support() & !(1 | 32) == 0,
        ClassFamily::T1T3 => {
            !zero3(x.t1)
                && x.support() == (1 | 4)
                && ctx.decompose(x.t1, x.t3).map(|(rep, _)| rep == x.t3).unwrap_or(false)
        }
        ClassFamily::T1T2 => x.support() == (1 | 2),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::UnknownClass(format_element(ctx, x)))
    }
}

/// `χ(C)` from the closed formulas of the character table.
pub fn char_value(ctx: &FieldTowerCtx, label: &CharLabel, c: &ConjClass) -> Result<CycInt> {
    check_rep(ctx, c)?;
    Ok(value_at_rep(ctx, label, c.family, &c.rep))
}

/// `χ(x)` for an arbitrary element, through its class.
pub fn char_value_at(ctx: &FieldTowerCtx, census: &ClassCensus, label: &CharLabel, x: &GroupElement) -> Result<CycInt> {
    char_value(ctx, label, census.class_of(ctx, x)?)
}

/// Value at a representative already known to be canonical.
pub(crate) fn value_at_rep(ctx: &FieldTowerCtx, label: &CharLabel, family: ClassFamily, x: &GroupElement) -> CycInt {
    debug_assert_eq!(canonical_rep(ctx, x), (family, *x));
    let p = ctx.p();
    let q = ctx.q() as i64;
    let th = |b: FqElement| ctx.fq_trace(b);
    let thp = |t: Fq3Element| ctx.fq_trace(ctx.pi_q(t));
    let mul = |a, b| ctx.fq3_mul(a, b);
    let fmul = |a, b| ctx.fq_mul(a, b);
    let add = |a, b| ctx.fq3_add(a, b);
    let sub = |a, b| ctx.fq3_sub(a, b);
    let e = |c| ctx.embed(c);
    let fr = |a| ctx.frobenius_q(a);
    let fr2 = |a| ctx.frobenius_q2(a);
    let mut acc = ExpCounts::new(p);
    use ClassFamily::*;
    match *label {
        CharLabel::Lin { a12, a23 } => acc.add_exp((thp(mul(a12, x.t1)) + th(fmul(a23, x.t2))) % p),
        CharLabel::F3 { a13, a12bar } => match family {
            Identity | X6 | X5 | X4 => acc.add_exp_times(0, q),
            T3T5 => acc.add_exp_times(thp(ctx.fq3_neg(mul(a13, x.t3))), q),
            T2T4T5 | T1T2 => {}
            T1T6 | T1T3 => {
                for r2 in ctx.fq_elements() {
                    let coeff = sub(a12bar, ctx.fq3_scale(r2, a13));
                    acc.add_exp(thp(sub(mul(coeff, x.t1), mul(x.t3, a13))));
                }
            }
        },
        CharLabel::F4 { a15, a23 } => {
            let q3 = q.pow(3);
            let a15q = fr(a15);
            match family {
                Identity | X6 | X5 => acc.add_exp_times(0, q3),
                X4 => acc.add_exp_times(thp(add(mul(a15q, x.t4), mul(a15, fr2(x.t4)))), q3),
                T2T4T5 => {
                    let base = th(fmul(a23, x.t2));
                    let t2 = x.t2;
                    for r1 in ctx.fq3_elements() {
                        let left = sub(x.t4, ctx.fq3_scale(t2, mul(r1, fr(r1))));
                        let right = sub(fr2(x.t4), ctx.fq3_scale(t2, mul(fr2(r1), r1)));
                        acc.add_exp((base + thp(add(mul(a15q, left), mul(a15, right)))) % p);
                    }
                }
                _ => {}
            }
        }
        CharLabel::F5 { a16, a23, a13 } => {
            let q3 = q.pow(3);
            match family {
                Identity | X6 => acc.add_exp_times(0, q3),
                X5 => acc.add_exp_times(th(fmul(a16, x.t5)), q3),
                T3T5 => {
                    let base = thp(add(ctx.fq3_neg(mul(a13, x.t3)), e(fmul(a16, x.t5))));
                    for r1 in ctx.fq3_elements() {
                        let s = ctx.phi0(mul(x.t3, mul(fr2(r1), fr(r1))));
                        acc.add_exp((base + th(fmul(a16, s))) % p);
                    }
                }
                T2T4T5 => {
                    let base = th(ctx.fq_add(fmul(a23, x.t2), fmul(a16, x.t5)));
                    let t4q = fr(x.t4);
                    for r1 in ctx.fq3_elements() {
                        let inner = ctx.fq_sub(ctx.phi0(mul(r1, t4q)), fmul(x.t2, ctx.norm(r1)));
                        let arg = add(ctx.fq3_scale(x.t2, mul(a13, r1)), e(fmul(a16, inner)));
                        acc.add_exp((base + thp(arg)) % p);
                    }
                }
                _ => {}
            }
        }
        CharLabel::F6 { a17, a12 } => {
            let q4 = q.pow(4);
            match family {
                Identity => acc.add_exp_times(0, q4),
                X6 => acc.add_exp_times(th(fmul(a17, x.t6)), q4),
                T1T6 => {
                    let base = thp(add(mul(a12, x.t1), e(fmul(a17, x.t6))));
                    for r3 in ctx.fq3_elements() {
                        let s = ctx.phi0(ctx.fq3_neg(mul(x.t1, mul(fr2(r3), fr(r3)))));
                        acc.add_exp((base + th(fmul(a17, s))) % p);
                    }
                }
                _ => {}
            }
        }
    }
    acc.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_tower;
    use crate::group::{conjugate, random_element, RootFactor};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn label_counts_at_three() {
        let ctx = build_tower(3, 1, None, None).unwrap();
        let labels = list_irreducibles(&ctx);
        assert_eq!(labels.len(), 609);
        assert_eq!(labels.iter().filter(|l| l.degree(&ctx) == 81).count(), 54);
        assert_eq!(labels.iter().filter(|l| l.degree(&ctx) == 1).count(), 81);
        for f in CharFamily::ALL {
            let n = labels.iter().filter(|l| l.family() == f).count() as i128;
            assert_eq!(f.count_poly().eval(3), n);
        }
        let total: u64 = labels.iter().map(|l| l.degree(&ctx).pow(2)).sum();
        assert_eq!(total, 531_441);
    }

    #[test]
    fn trivial_character_and_degrees() {
        let ctx = build_tower(3, 1, None, None).unwrap();
        let census = ClassCensus::new(&ctx);
        let trivial = CharLabel::Lin {
            a12: Fq3Element::ZERO,
            a23: FqElement::ZERO,
        };
        for c in census.classes() {
            assert_eq!(char_value(&ctx, &trivial, c).unwrap(), CycInt::one(3));
        }
        for l in list_irreducibles(&ctx) {
            let v = char_value(&ctx, &l, &census.classes()[0]).unwrap();
            assert_eq!(v, CycInt::from_int(3, l.degree(&ctx) as i64));
        }
    }

    #[test]
    fn table_entries() {
        let ctx = build_tower(3, 1, None, None).unwrap();
        let census = ClassCensus::new(&ctx);
        let a17 = FqElement::ONE;
        for a12 in ctx.fq3_elements() {
            let chi = CharLabel::F6 { a17, a12 };
            for c in census.classes() {
                let v = char_value(&ctx, &chi, c).unwrap();
                match c.family {
                    ClassFamily::X6 => {
                        let expected = crate::theta(&ctx, ctx.fq_mul(a17, c.rep.t6))
                            .checked_scale(&81)
                            .unwrap();
                        assert_eq!(v, expected);
                    }
                    ClassFamily::T2T4T5 => assert!(v.is_zero()),
                    _ => {}
                }
            }
        }
        for a12 in ctx.fq3_elements() {
            for t1 in ctx.fq3_elements() {
                let chi = CharLabel::Lin {
                    a12,
                    a23: FqElement::ONE,
                };
                let v = char_value_at(&ctx, &census, &chi, &RootFactor::X1(t1).element()).unwrap();
                assert_eq!(v, crate::theta_pi(&ctx, ctx.fq3_mul(a12, t1)));
            }
        }
    }

    #[test]
    fn kernel_pattern() {
        let ctx = build_tower(3, 1, None, None).unwrap();
        let census = ClassCensus::new(&ctx);
        for l in list_irreducibles(&ctx) {
            let deg = CycInt::from_int(3, l.degree(&ctx) as i64);
            for c in census.classes() {
                let forced = match l.family() {
                    CharFamily::Lin => matches!(c.family, ClassFamily::X4 | ClassFamily::X5 | ClassFamily::X6),
                    CharFamily::F3 => matches!(c.family, ClassFamily::X4 | ClassFamily::X5 | ClassFamily::X6),
                    CharFamily::F4 => matches!(c.family, ClassFamily::X5 | ClassFamily::X6),
                    CharFamily::F5 => c.family == ClassFamily::X6,
                    CharFamily::F6 => false,
                };
                if forced {
                    assert_eq!(
                        char_value(&ctx, &l, c).unwrap(),
                        deg,
                        "{} on {:?}",
                        l.describe(&ctx),
                        c.family
                    );
                }
            }
        }
    }

    #[test]
    fn class_functions_at_other_q() {
        for (p, k) in [(5, 1), (3, 2)] {
            let ctx = build_tower(p, k, None, None).unwrap();
            let census = ClassCensus::new(&ctx);
            let labels = list_irreducibles(&ctx);
            let mut rng = ChaCha8Rng::seed_from_u64(21);
            for _ in 0..200 {
                let l = labels[rand::Rng::gen_range(&mut rng, 0..labels.len())];
                let (g, x) = (random_element(&ctx, &mut rng), random_element(&ctx, &mut rng));
                let y = conjugate(&ctx, &g, &x);
                assert_eq!(
                    char_value_at(&ctx, &census, &l, &x).unwrap(),
                    char_value_at(&ctx, &census, &l, &y).unwrap()
                );
            }
        }
    }

    #[test]
    fn rejects_foreign_representatives() {
        let ctx = build_tower(3, 1, None, None).unwrap();
        let census = ClassCensus::new(&ctx);
        let mut c = census.classes()[5].clone();
        c.rep.t3 = ctx.fq3(4).unwrap();
        let chi = CharLabel::Lin {
            a12: Fq3Element::ZERO,
            a23: FqElement::ZERO,
        };
        assert!(matches!(char_value(&ctx, &chi, &c), Err(Error::UnknownClass(_))));
    }
}
