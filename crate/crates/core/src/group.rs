//! The group `U = 3D4syl(q^3)` in the normal form
//! `x(t1,..,t6) = x2(t2) x1(t1) x3(t3) x4(t4) x5(t5) x6(t6)`.
//!
//! Products are collected by pushing root factors onto a normal-form word
//! from the right: factors behind the insertion point are pulled out,
//! re-inserted, and the commutator each one picks up on the way is pushed
//! in turn. Every commutator lies strictly deeper in the order
//! `x2 ≺ x1 ≺ x3 ≺ x4 ≺ x5 ≺ x6`, so the recursion is bounded.
//!
//! The defining commutators `[a, b] = a⁻¹ b⁻¹ a b` are
//!
//! ```text
//! [x1(t1), x2(t2)] = x3(-t1 t2) x4(t2 t1^{q+1}) x5(-t2 t1^{1+q+q²}) x6(2 t2² t1^{1+q+q²})
//! [x1(t1), x3(t3)] = x4(t1 t3^q + t1^q t3) x5(-φ0(t1^{q+1} t3^{q²})) x6(-φ0(t1 t3^{q+q²}))
//! [x1(t1), x4(t4)] = x5(φ0(t1 t4^q))
//! [x3(t3), x4(t4)] = x6(φ0(t3 t4^q))
//! [x2(t2), x5(t5)] = x6(t2 t5)
//! ```
//!
//! with all other pairs commuting.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldTowerCtx, Fq3Element, FqElement};

/// Default bound on `q^12` for exhaustive enumeration (admits `q = 3` only).
pub const DEFAULT_ENUMERATION_CAP: u64 = 531_441;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub t1: Fq3Element,
    pub t2: FqElement,
    pub t3: Fq3Element,
    pub t4: Fq3Element,
    pub t5: FqElement,
    pub t6: FqElement,
}

/// A single root-subgroup element `x_i(t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootFactor {
    X1(Fq3Element),
    X2(FqElement),
    X3(Fq3Element),
    X4(Fq3Element),
    X5(FqElement),
    X6(FqElement),
}

impl RootFactor {
    pub fn index(self) -> u8 {
        match self {
            RootFactor::X1(_) => 1,
            RootFactor::X2(_) => 2,
            RootFactor::X3(_) => 3,
            RootFactor::X4(_) => 4,
            RootFactor::X5(_) => 5,
            RootFactor::X6(_) => 6,
        }
    }

    pub fn is_trivial(self) -> bool {
        match self {
            RootFactor::X1(t) | RootFactor::X3(t) | RootFactor::X4(t) => t.is_zero(),
            RootFactor::X2(t) | RootFactor::X5(t) | RootFactor::X6(t) => t.is_zero(),
        }
    }

    pub fn element(self) -> GroupElement {
        let mut g = GroupElement::IDENTITY;
        match self {
            RootFactor::X1(t) => g.t1 = t,
            RootFactor::X2(t) => g.t2 = t,
            RootFactor::X3(t) => g.t3 = t,
            RootFactor::X4(t) => g.t4 = t,
            RootFactor::X5(t) => g.t5 = t,
            RootFactor::X6(t) => g.t6 = t,
        }
        g
    }
}

impl From<RootFactor> for GroupElement {
    fn from(f: RootFactor) -> Self {
        f.element()
    }
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        t1: Fq3Element::ZERO,
        t2: FqElement::ZERO,
        t3: Fq3Element::ZERO,
        t4: Fq3Element::ZERO,
        t5: FqElement::ZERO,
        t6: FqElement::ZERO,
    };

    pub fn new(t1: Fq3Element, t2: FqElement, t3: Fq3Element, t4: Fq3Element, t5: FqElement, t6: FqElement) -> Self {
        GroupElement { t1, t2, t3, t4, t5, t6 }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// The factors of the normal form, in normal order, trivial ones included.
    pub fn factors(&self) -> [RootFactor; 6] {
        [
            RootFactor::X2(self.t2),
            RootFactor::X1(self.t1),
            RootFactor::X3(self.t3),
            RootFactor::X4(self.t4),
            RootFactor::X5(self.t5),
            RootFactor::X6(self.t6),
        ]
    }

    /// Indices `i` with `t_i ≠ 0`, as a bitmask with bit `i - 1`.
    pub fn support(&self) -> u8 {
        let mut s = 0;
        for f in self.factors() {
            if !f.is_trivial() {
                s |= 1 << (f.index() - 1);
            }
        }
        s
    }
}

/// Short-hand field operations used by the formulas below.
#[derive(Clone, Copy)]
struct Ops<'a>(&'a FieldTowerCtx);

impl Ops<'_> {
    #[inline]
    fn add(self, a: Fq3Element, b: Fq3Element) -> Fq3Element {
        self.0.fq3_add(a, b)
    }
    #[inline]
    fn sub(self, a: Fq3Element, b: Fq3Element) -> Fq3Element {
        self.0.fq3_sub(a, b)
    }
    #[inline]
    fn mul(self, a: Fq3Element, b: Fq3Element) -> Fq3Element {
        self.0.fq3_mul(a, b)
    }
    #[inline]
    fn neg(self, a: Fq3Element) -> Fq3Element {
        self.0.fq3_neg(a)
    }
    #[inline]
    fn sc(self, c: FqElement, a: Fq3Element) -> Fq3Element {
        self.0.fq3_scale(c, a)
    }
    #[inline]
    fn fr(self, a: Fq3Element) -> Fq3Element {
        self.0.frobenius_q(a)
    }
    #[inline]
    fn fr2(self, a: Fq3Element) -> Fq3Element {
        self.0.frobenius_q2(a)
    }
    #[inline]
    fn ph(self, a: Fq3Element) -> FqElement {
        self.0.phi0(a)
    }
    #[inline]
    fn norm(self, a: Fq3Element) -> FqElement {
        self.0.norm(a)
    }
    #[inline]
    fn a(self, a: FqElement, b: FqElement) -> FqElement {
        self.0.fq_add(a, b)
    }
    #[inline]
    fn s(self, a: FqElement, b: FqElement) -> FqElement {
        self.0.fq_sub(a, b)
    }
    #[inline]
    fn m(self, a: FqElement, b: FqElement) -> FqElement {
        self.0.fq_mul(a, b)
    }
    #[inline]
    fn n(self, a: FqElement) -> FqElement {
        self.0.fq_neg(a)
    }
    /// `a^{q+1}`
    #[inline]
    fn q1(self, a: Fq3Element) -> Fq3Element {
        self.mul(a, self.fr(a))
    }
    /// `a^{q²+q}`
    #[inline]
    fn qq(self, a: Fq3Element) -> Fq3Element {
        self.mul(self.fr(a), self.fr2(a))
    }
    fn sum(self, terms: &[FqElement]) -> FqElement {
        terms.iter().fold(FqElement::ZERO, |acc, &t| self.a(acc, t))
    }
}

/// `w ← w · f`
fn push(ctx: &FieldTowerCtx, w: &mut GroupElement, f: RootFactor) {
    let o = Ops(ctx);
    match f {
        RootFactor::X6(t) => w.t6 = o.a(w.t6, t),
        RootFactor::X5(t) => w.t5 = o.a(w.t5, t),
        RootFactor::X4(t) => w.t4 = o.add(w.t4, t),
        RootFactor::X3(t) => {
            // x4(t4) x3(t) = x3(t) x4(t4) x6(-φ0(t t4^q))
            if !w.t4.is_zero() {
                w.t6 = o.s(w.t6, o.ph(o.mul(t, o.fr(w.t4))));
            }
            w.t3 = o.add(w.t3, t);
        }
        RootFactor::X1(t) => {
            if t.is_zero() {
                return;
            }
            let (t3, t4, t5, t6) = (w.t3, w.t4, w.t5, w.t6);
            w.t1 = o.add(w.t1, t);
            // s x1(t) = x1(t) s [s, x1(t)] for s = x3(t3), x4(t4); x5, x6 commute with x1
            w.t3 = t3;
            w.t4 = o.sub(t4, o.add(o.mul(t, o.fr(t3)), o.mul(o.fr(t), t3)));
            w.t5 = o.sum(&[t5, o.ph(o.mul(o.q1(t), o.fr2(t3))), o.n(o.ph(o.mul(t, o.fr(t4))))]);
            w.t6 = o.a(t6, o.ph(o.mul(t, o.qq(t3))));
        }
        RootFactor::X2(t) => {
            if t.is_zero() {
                return;
            }
            let (t1, t3, t4, t5, t6) = (w.t1, w.t3, w.t4, w.t5, w.t6);
            let tt = ctx.embed(t);
            w.t2 = o.a(w.t2, t);
            let nt1 = o.norm(t1);
            // x1(t1) x2(t) = x2(t) x1(t1) [x1(t1), x2(t)]
            w.t1 = t1;
            w.t3 = o.neg(o.mul(tt, t1));
            w.t4 = o.sc(t, o.q1(t1));
            w.t5 = o.n(o.m(t, nt1));
            w.t6 = o.m(o.m(ctx.fq_from_int(2), o.m(t, t)), nt1);
            // then x3(t3) past the x4 just created, and x5(t5) past x2(t)
            w.t6 = o.s(w.t6, o.ph(o.mul(t3, o.fr(w.t4))));
            w.t3 = o.add(w.t3, t3);
            w.t4 = o.add(w.t4, t4);
            w.t5 = o.a(w.t5, t5);
            w.t6 = o.sum(&[w.t6, o.n(o.m(t, t5)), t6]);
        }
    }
}

pub fn multiply(ctx: &FieldTowerCtx, a: &GroupElement, b: &GroupElement) -> GroupElement {
    let mut w = *a;
    for f in b.factors() {
        if !f.is_trivial() {
            push(ctx, &mut w, f);
        }
    }
    w
}

pub fn inverse(ctx: &FieldTowerCtx, a: &GroupElement) -> GroupElement {
    let mut w = GroupElement::IDENTITY;
    let factors = [
        RootFactor::X6(ctx.fq_neg(a.t6)),
        RootFactor::X5(ctx.fq_neg(a.t5)),
        RootFactor::X4(ctx.fq3_neg(a.t4)),
        RootFactor::X3(ctx.fq3_neg(a.t3)),
        RootFactor::X1(ctx.fq3_neg(a.t1)),
        RootFactor::X2(ctx.fq_neg(a.t2)),
    ];
    for f in factors {
        if !f.is_trivial() {
            push(ctx, &mut w, f);
        }
    }
    w
}

/// `[a, b] = a⁻¹ b⁻¹ a b`
pub fn commutator(ctx: &FieldTowerCtx, a: &GroupElement, b: &GroupElement) -> GroupElement {
    let left = multiply(ctx, &inverse(ctx, a), &inverse(ctx, b));
    multiply(ctx, &multiply(ctx, &left, a), b)
}

/// `^u x = u x u⁻¹`, by collection.
pub fn conjugate(ctx: &FieldTowerCtx, u: &GroupElement, x: &GroupElement) -> GroupElement {
    multiply(ctx, &multiply(ctx, u, x), &inverse(ctx, u))
}

/// `^u x_i(t)` from the closed conjugation formulas.
pub fn conjugate_root(ctx: &FieldTowerCtx, u: &GroupElement, f: RootFactor) -> GroupElement {
    let o = Ops(ctx);
    let GroupElement {
        t1: r1,
        t2: r2,
        t3: r3,
        t4: r4,
        t5: r5,
        ..
    } = *u;
    let two = ctx.fq_from_int(2);
    let mut g = f.element();
    match f {
        RootFactor::X6(_) => {}
        RootFactor::X5(t5) => g.t6 = o.m(r2, t5),
        RootFactor::X4(t4) => {
            let t4q = o.fr(t4);
            g.t5 = o.ph(o.mul(r1, t4q));
            g.t6 = o.a(o.ph(o.sc(r2, o.mul(r1, t4q))), o.ph(o.mul(r3, t4q)));
        }
        RootFactor::X3(t3) => {
            g.t4 = o.add(o.mul(r1, o.fr(t3)), o.mul(o.fr(r1), t3));
            g.t5 = o.ph(o.mul(o.qq(r1), t3));
            g.t6 = o.sum(&[
                o.ph(o.sc(r2, o.mul(o.qq(r1), t3))),
                o.ph(o.neg(o.mul(r1, o.qq(t3)))),
                o.ph(o.neg(o.mul(t3, o.fr(r4)))),
            ]);
        }
        RootFactor::X2(t2) => {
            let nr1 = o.norm(r1);
            g.t3 = o.neg(o.sc(t2, r1));
            g.t4 = o.neg(o.sc(t2, o.q1(r1)));
            g.t5 = o.n(o.m(t2, nr1));
            g.t6 = o.sum(&[o.n(o.m(t2, r5)), o.n(o.m(o.m(t2, t2), nr1)), o.n(o.m(o.m(t2, nr1), r2))]);
        }
        RootFactor::X1(t1) => {
            let nt1 = o.norm(t1);
            let cross = o.neg(o.add(o.mul(r3, o.fr(t1)), o.mul(o.fr(r3), t1)));
            g.t3 = o.sc(r2, t1);
            g.t4 = o.add(o.neg(o.sc(r2, o.q1(t1))), cross);
            g.t5 = o.sum(&[
                o.m(r2, nt1),
                o.ph(o.mul(o.fr2(r1), cross)),
                o.ph(o.mul(o.fr2(r3), o.q1(t1))),
                o.ph(o.neg(o.mul(t1, o.fr(r4)))),
            ]);
            g.t6 = o.sum(&[
                o.m(o.m(two, o.m(r2, r2)), nt1),
                o.ph(o.sc(r2, o.mul(o.fr2(r1), cross))),
                o.ph(o.sc(r2, o.mul(o.fr2(r3), o.q1(t1)))),
                o.ph(o.neg(o.sc(r2, o.mul(o.fr(r4), t1)))),
                o.ph(o.neg(o.mul(t1, o.qq(r3)))),
            ]);
        }
    }
    g
}

const S1: u8 = 1;
const S2: u8 = 2;
const S3: u8 = 4;
const S4: u8 = 8;
const S5: u8 = 16;
const S6: u8 = 32;

/// `^u x` from the closed conjugation formulas.
///
/// Elements of the shapes `x3 x5`, `x2 x4 x5`, `x1 x3` and `x2 x1` (times
/// a central `x6`) use the dedicated product formulas; anything else is
/// conjugated factor by factor.
pub fn conjugate_closed(ctx: &FieldTowerCtx, u: &GroupElement, x: &GroupElement) -> GroupElement {
    let o = Ops(ctx);
    let support = x.support() & !S6;
    let mut g = if support & !(S3 | S5) == 0 {
        conj_x3x5(ctx, u, x.t3, x.t5)
    } else if support & !(S2 | S4 | S5) == 0 {
        conj_x2x4x5(ctx, u, x.t2, x.t4, x.t5)
    } else if support & !(S1 | S3) == 0 {
        conj_x1x3(ctx, u, x.t1, x.t3)
    } else if support & !(S1 | S2) == 0 {
        conj_x2x1(ctx, u, x.t2, x.t1)
    } else {
        x.factors()[..5]
            .iter()
            .filter(|f| !f.is_trivial())
            .fold(GroupElement::IDENTITY, |acc, &f| {
                multiply(ctx, &acc, &conjugate_root(ctx, u, f))
            })
    };
    g.t6 = o.a(g.t6, x.t6);
    g
}

fn conj_x3x5(ctx: &FieldTowerCtx, u: &GroupElement, t3: Fq3Element, t5: FqElement) -> GroupElement {
    let o = Ops(ctx);
    let GroupElement {
        t1: r1, t2: r2, t4: r4, ..
    } = *u;
    let r1qq = o.qq(r1);
    GroupElement {
        t1: Fq3Element::ZERO,
        t2: FqElement::ZERO,
        t3,
        t4: o.add(o.mul(r1, o.fr(t3)), o.mul(o.fr(r1), t3)),
        t5: o.a(t5, o.ph(o.mul(r1qq, t3))),
        t6: o.sum(&[
            o.m(r2, t5),
            o.ph(o.sc(r2, o.mul(r1qq, t3))),
            o.ph(o.neg(o.mul(r1, o.qq(t3)))),
            o.ph(o.neg(o.mul(t3, o.fr(r4)))),
        ]),
    }
}

fn conj_x2x4x5(ctx: &FieldTowerCtx, u: &GroupElement, t2: FqElement, t4: Fq3Element, t5: FqElement) -> GroupElement {
    let o = Ops(ctx);
    let GroupElement {
        t1: r1,
        t2: r2,
        t3: r3,
        t5: r5,
        ..
    } = *u;
    let nr1 = o.norm(r1);
    let t4q = o.fr(t4);
    GroupElement {
        t1: Fq3Element::ZERO,
        t2,
        t3: o.neg(o.sc(t2, r1)),
        t4: o.sub(t4, o.sc(t2, o.q1(r1))),
        t5: o.sum(&[t5, o.n(o.m(t2, nr1)), o.ph(o.mul(r1, t4q))]),
        t6: o.sum(&[
            o.n(o.m(t2, r5)),
            o.n(o.m(o.m(t2, t2), nr1)),
            o.n(o.m(o.m(t2, nr1), r2)),
            o.ph(o.sc(r2, o.mul(r1, t4q))),
            o.ph(o.mul(r3, t4q)),
            o.m(r2, t5),
        ]),
    }
}

fn conj_x1x3(ctx: &FieldTowerCtx, u: &GroupElement, t1: Fq3Element, tb: Fq3Element) -> GroupElement {
    let o = Ops(ctx);
    let GroupElement {
        t1: r1,
        t2: r2,
        t3: r3,
        t4: r4,
        ..
    } = *u;
    let two = ctx.fq_from_int(2);
    let r1qq = o.qq(r1);
    let t1q1 = o.q1(t1);
    let nt1 = o.norm(t1);
    let cross = o.neg(o.add(o.mul(r3, o.fr(t1)), o.mul(o.fr(r3), t1)));
    let y = o.add(o.sc(r2, t1q1), o.neg(cross));
    GroupElement {
        t1,
        t2: FqElement::ZERO,
        t3: o.add(o.sc(r2, t1), tb),
        t4: o.add(
            o.add(o.neg(o.sc(r2, t1q1)), cross),
            o.add(o.mul(r1, o.fr(tb)), o.mul(o.fr(r1), tb)),
        ),
        t5: o.sum(&[
            o.m(r2, nt1),
            o.ph(o.mul(o.fr2(r1), cross)),
            o.ph(o.mul(o.fr2(r3), t1q1)),
            o.ph(o.neg(o.mul(t1, o.fr(r4)))),
            o.ph(o.mul(r1qq, tb)),
        ]),
        t6: o.sum(&[
            o.m(o.m(two, o.m(r2, r2)), nt1),
            o.ph(o.sc(r2, o.mul(o.fr2(r1), cross))),
            o.ph(o.sc(r2, o.mul(o.fr2(r3), t1q1))),
            o.n(o.m(r2, o.ph(o.mul(o.fr(r4), t1)))),
            o.ph(o.neg(o.mul(t1, o.qq(r3)))),
            o.ph(o.sc(r2, o.mul(r1qq, tb))),
            o.ph(o.neg(o.mul(r1, o.qq(tb)))),
            o.ph(o.neg(o.mul(tb, o.fr(r4)))),
            o.ph(o.mul(o.fr2(tb), y)),
        ]),
    }
}

fn conj_x2x1(ctx: &FieldTowerCtx, u: &GroupElement, t2: FqElement, t1: Fq3Element) -> GroupElement {
    let o = Ops(ctx);
    let GroupElement {
        t1: r1,
        t2: r2,
        t3: r3,
        t4: r4,
        t5: r5,
        ..
    } = *u;
    let two = ctx.fq_from_int(2);
    let r1qq = o.qq(r1);
    let r1q1 = o.q1(r1);
    let t1q1 = o.q1(t1);
    let t1qq = o.qq(t1);
    let nt1 = o.norm(t1);
    let nr1 = o.norm(r1);
    let cross = o.neg(o.add(o.mul(r3, o.fr(t1)), o.mul(o.fr(r3), t1)));
    GroupElement {
        t1,
        t2,
        t3: o.sub(o.sc(r2, t1), o.sc(t2, r1)),
        t4: o.add(
            o.add(o.neg(o.sc(r2, t1q1)), cross),
            o.sc(t2, o.sub(o.add(o.mul(t1, o.fr(r1)), o.mul(o.fr(t1), r1)), r1q1)),
        ),
        t5: o.sum(&[
            o.m(r2, nt1),
            o.ph(o.mul(o.fr2(r1), cross)),
            o.ph(o.mul(o.fr2(r3), t1q1)),
            o.ph(o.neg(o.mul(t1, o.fr(r4)))),
            o.n(o.m(t2, nr1)),
            o.ph(o.neg(o.sc(t2, o.mul(r1, t1qq)))),
            o.ph(o.sc(t2, o.mul(o.fr2(t1), r1q1))),
        ]),
        t6: o.sum(&[
            o.m(o.m(two, o.m(r2, r2)), nt1),
            o.ph(o.sc(r2, o.mul(o.fr2(r1), cross))),
            o.ph(o.sc(r2, o.mul(o.fr2(r3), t1q1))),
            o.n(o.m(r2, o.ph(o.mul(o.fr(r4), t1)))),
            o.ph(o.neg(o.mul(t1, o.qq(r3)))),
            o.n(o.m(t2, r5)),
            o.n(o.m(o.m(t2, t2), nr1)),
            o.n(o.m(o.m(t2, nr1), r2)),
            o.ph(o.neg(o.sc(o.m(two, o.m(r2, t2)), o.mul(r1, t1qq)))),
            o.ph(o.sc(o.m(t2, r2), o.mul(o.fr2(t1), r1q1))),
            o.ph(o.sc(o.m(t2, t2), o.mul(r1qq, t1))),
        ]),
    }
}

// ---- enumeration ------------------------------------------------------------------

/// `q^12`, or `None` on overflow.
pub fn group_order(ctx: &FieldTowerCtx) -> Option<u64> {
    (ctx.q() as u64).checked_pow(12)
}

/// Position of `x` in coordinate-lexicographic order (`t1` most significant).
pub fn rank(ctx: &FieldTowerCtx, x: &GroupElement) -> u64 {
    let q = ctx.q() as u64;
    let q3 = q * q * q;
    let r = x.t1.index() as u64;
    let r = r * q + x.t2.index() as u64;
    let r = r * q3 + x.t3.index() as u64;
    let r = r * q3 + x.t4.index() as u64;
    let r = r * q + x.t5.index() as u64;
    r * q + x.t6.index() as u64
}

pub fn unrank(ctx: &FieldTowerCtx, mut r: u64) -> GroupElement {
    let q = ctx.q() as u64;
    let q3 = q * q * q;
    let mut take = |m: u64| {
        let d = r % m;
        r /= m;
        d as u32
    };
    let t6 = take(q);
    let t5 = take(q);
    let t4 = take(q3);
    let t3 = take(q3);
    let t2 = take(q);
    let t1 = take(q3);
    let fq = |i| ctx.fq(i).unwrap();
    let fq3 = |i| ctx.fq3(i).unwrap();
    GroupElement::new(fq3(t1), fq(t2), fq3(t3), fq3(t4), fq(t5), fq(t6))
}

/// All `q^12` elements in coordinate-lexicographic order; `cap` defaults to
/// [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_all(ctx: &FieldTowerCtx, cap: Option<u64>) -> Result<impl Iterator<Item = GroupElement> + '_> {
    let order = checked_order(ctx, cap)?;
    Ok((0..order).map(move |r| unrank(ctx, r)))
}

/// `q^12` if it does not exceed `cap`.
pub fn checked_order(ctx: &FieldTowerCtx, cap: Option<u64>) -> Result<u64> {
    let cap = cap.unwrap_or(DEFAULT_ENUMERATION_CAP);
    match group_order(ctx) {
        Some(n) if n <= cap => Ok(n),
        n => Err(Error::TooLarge {
            what: "group order q^12",
            size: n.unwrap_or(u64::MAX),
            cap,
        }),
    }
}

pub fn random_element<R: Rng + ?Sized>(ctx: &FieldTowerCtx, rng: &mut R) -> GroupElement {
    let fq = |rng: &mut R| ctx.fq(rng.gen_range(0..ctx.q())).unwrap();
    let fq3 = |rng: &mut R| ctx.fq3(rng.gen_range(0..ctx.q3())).unwrap();
    GroupElement::new(fq3(rng), fq(rng), fq3(rng), fq3(rng), fq(rng), fq(rng))
}

/// Generators `x_i(b)` with `b` running over the `F_p`-basis of the relevant field.
pub fn generators(ctx: &FieldTowerCtx) -> Vec<GroupElement> {
    let mut gens = Vec::new();
    for b in ctx.fq3_basis() {
        gens.push(RootFactor::X1(b).element());
        gens.push(RootFactor::X3(b).element());
        gens.push(RootFactor::X4(b).element());
    }
    for b in ctx.fq_basis() {
        gens.push(RootFactor::X2(b).element());
        gens.push(RootFactor::X5(b).element());
        gens.push(RootFactor::X6(b).element());
    }
    gens
}

// ---- text format ------------------------------------------------------------------

/// Renders `x` as `x(t1;t2;t3;t4;t5;t6)` with each coordinate given by its
/// comma-separated `F_p` coefficients, lowest first.
pub fn format_element(ctx: &FieldTowerCtx, x: &GroupElement) -> String {
    let join = |v: Vec<u32>| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
    let parts = [
        join(ctx.fq3_fp_coeffs(x.t1)),
        join(ctx.fq_coeffs(x.t2)),
        join(ctx.fq3_fp_coeffs(x.t3)),
        join(ctx.fq3_fp_coeffs(x.t4)),
        join(ctx.fq_coeffs(x.t5)),
        join(ctx.fq_coeffs(x.t6)),
    ];
    format!("x({})", parts.join(";"))
}

pub fn parse_element(ctx: &FieldTowerCtx, s: &str) -> Result<GroupElement> {
    let bad = || Error::Parse(format!("expected x(t1;..;t6), got {s:?}"));
    let inner = s
        .trim()
        .strip_prefix("x(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    let parts: Vec<&str> = inner.split(';').collect();
    if parts.len() != 6 {
        return Err(bad());
    }
    // trailing zero coefficients may be omitted
    let coeffs = |part: &str, len: usize| -> Result<Vec<u32>> {
        let mut v = part
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if v.len() < len {
            v.resize(len, 0);
        }
        Ok(v)
    };
    let k = ctx.k() as usize;
    let fq = |part: &str| -> Result<FqElement> {
        ctx.fq_from_coeffs(&coeffs(part, k)?)
            .ok_or_else(|| Error::Parse(format!("{part:?} is not an element of F_{}", ctx.q())))
    };
    let fq3 = |part: &str| -> Result<Fq3Element> {
        ctx.fq3_from_fp_coeffs(&coeffs(part, 3 * k)?)
            .ok_or_else(|| Error::Parse(format!("{part:?} is not an element of F_{}^3", ctx.q())))
    };
    Ok(GroupElement::new(
        fq3(parts[0])?,
        fq(parts[1])?,
        fq3(parts[2])?,
        fq3(parts[3])?,
        fq(parts[4])?,
        fq(parts[5])?,
    ))
}

/// Display adapter pairing an element with its context.
pub struct Displayed<'a>(pub &'a FieldTowerCtx, pub &'a GroupElement);

impl fmt::Display for Displayed<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_element(self.0, self.1))
    }
}
