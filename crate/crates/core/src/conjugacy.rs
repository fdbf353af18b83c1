//! Conjugacy classes of `U`: the closed-form census, canonical
//! representatives of arbitrary elements, and a brute-force orbit oracle.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldTowerCtx;
use crate::group::{self, conjugate, conjugate_closed, generators, GroupElement, RootFactor};
use crate::linalg::{digits, FpMatrix};
use crate::poly::QPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassFamily {
    Identity,
    X6,
    X5,
    X4,
    T3T5,
    T2T4T5,
    T1T6,
    T1T3,
    T1T2,
}

impl ClassFamily {
    pub const ALL: [ClassFamily; 9] = [
        ClassFamily::Identity,
        ClassFamily::X6,
        ClassFamily::X5,
        ClassFamily::X4,
        ClassFamily::T3T5,
        ClassFamily::T2T4T5,
        ClassFamily::T1T6,
        ClassFamily::T1T3,
        ClassFamily::T1T2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassFamily::Identity => "identity",
            ClassFamily::X6 => "x6",
            ClassFamily::X5 => "x5",
            ClassFamily::X4 => "x4",
            ClassFamily::T3T5 => "x3x5",
            ClassFamily::T2T4T5 => "x2x4x5",
            ClassFamily::T1T6 => "x1x6",
            ClassFamily::T1T3 => "x1x3",
            ClassFamily::T1T2 => "x2x1",
        }
    }

    /// Number of classes in the family, as a polynomial in `q`.
    pub fn count_poly(self) -> QPoly {
        let q = |d| QPoly::q_pow(d);
        let one = || QPoly::constant(1);
        match self {
            ClassFamily::Identity => one(),
            ClassFamily::X6 | ClassFamily::X5 => q(1) - one(),
            ClassFamily::X4 => q(3) - one(),
            ClassFamily::T3T5 | ClassFamily::T1T6 => (q(3) - one()) * q(1),
            ClassFamily::T2T4T5 => (q(1) - one()) * q(4),
            ClassFamily::T1T3 => (q(3) - one()) * (q(2) - one()),
            ClassFamily::T1T2 => (q(3) - one()) * (q(1) - one()),
        }
    }

    /// Exponent `e` with class size `q^e`.
    pub fn size_exponent(self) -> u32 {
        match self {
            ClassFamily::Identity | ClassFamily::X6 => 0,
            ClassFamily::X5 => 1,
            ClassFamily::X4 => 2,
            ClassFamily::T3T5 | ClassFamily::T2T4T5 => 4,
            ClassFamily::T1T6 => 5,
            ClassFamily::T1T3 => 6,
            ClassFamily::T1T2 => 8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjClass {
    pub family: ClassFamily,
    pub rep: GroupElement,
    pub size: u64,
    pub index: usize,
}

/// `|C_U(x)|` for `x` in the class.
pub fn centralizer_order(ctx: &FieldTowerCtx, c: &ConjClass) -> u64 {
    (ctx.q() as u64).pow(12) / c.size
}

/// All classes: families in table order, parameters in increasing index order.
pub fn list_classes(ctx: &FieldTowerCtx) -> Vec<ConjClass> {
    let q = ctx.q() as u64;
    let id = GroupElement::IDENTITY;
    let mut out = Vec::new();
    let mut emit = |family: ClassFamily, rep: GroupElement| {
        let index = out.len();
        out.push(ConjClass {
            family,
            rep,
            size: q.pow(family.size_exponent()),
            index,
        });
    };
    emit(ClassFamily::Identity, id);
    for t6 in ctx.fq_nonzero() {
        emit(ClassFamily::X6, GroupElement { t6, ..id });
    }
    for t5 in ctx.fq_nonzero() {
        emit(ClassFamily::X5, GroupElement { t5, ..id });
    }
    for t4 in ctx.fq3_nonzero() {
        emit(ClassFamily::X4, GroupElement { t4, ..id });
    }
    for t3 in ctx.fq3_nonzero() {
        for t5 in ctx.fq_elements() {
            emit(ClassFamily::T3T5, GroupElement { t3, t5, ..id });
        }
    }
    for t2 in ctx.fq_nonzero() {
        for t4 in ctx.fq3_elements() {
            for t5 in ctx.fq_elements() {
                emit(ClassFamily::T2T4T5, GroupElement { t2, t4, t5, ..id });
            }
        }
    }
    for t1 in ctx.fq3_nonzero() {
        for t6 in ctx.fq_elements() {
            emit(ClassFamily::T1T6, GroupElement { t1, t6, ..id });
        }
    }
    for t1 in ctx.fq3_nonzero() {
        for t3 in ctx.transversal(t1).expect("t1 is nonzero").into_iter().skip(1) {
            emit(ClassFamily::T1T3, GroupElement { t1, t3, ..id });
        }
    }
    for t1 in ctx.fq3_nonzero() {
        for t2 in ctx.fq_nonzero() {
            emit(ClassFamily::T1T2, GroupElement { t1, t2, ..id });
        }
    }
    out
}

/// The class list with a representative lookup table.
#[derive(Debug, Clone)]
pub struct ClassCensus {
    classes: Vec<ConjClass>,
    lookup: HashMap<GroupElement, usize>,
}

impl ClassCensus {
    pub fn new(ctx: &FieldTowerCtx) -> Self {
        let classes = list_classes(ctx);
        let lookup = classes.iter().map(|c| (c.rep, c.index)).collect();
        ClassCensus { classes, lookup }
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&ConjClass> {
        self.classes.get(index)
    }

    /// The class whose listed representative is `rep`.
    pub fn by_rep(&self, rep: &GroupElement) -> Option<&ConjClass> {
        self.lookup.get(rep).map(|&i| &self.classes[i])
    }

    /// The class containing `x`.
    pub fn class_of(&self, ctx: &FieldTowerCtx, x: &GroupElement) -> Result<&ConjClass> {
        let (_, rep) = canonical_rep(ctx, x);
        self.by_rep(&rep)
            .ok_or_else(|| Error::UnknownClass(group::format_element(ctx, &rep)))
    }
}

fn coord_index(x: &GroupElement, c: usize) -> u32 {
    match c {
        1 => x.t1.index(),
        2 => x.t2.index(),
        3 => x.t3.index(),
        4 => x.t4.index(),
        5 => x.t5.index(),
        6 => x.t6.index(),
        _ => unreachable!(),
    }
}

fn big_coord(c: usize) -> bool {
    matches!(c, 1 | 3 | 4)
}

/// Index of `a_c - b_c`.
fn coord_diff(ctx: &FieldTowerCtx, c: usize, a: &GroupElement, b: &GroupElement) -> u32 {
    let (x, y) = (coord_index(a, c), coord_index(b, c));
    if big_coord(c) {
        ctx.fq3_sub(ctx.fq3(x).unwrap(), ctx.fq3(y).unwrap()).index()
    } else {
        ctx.fq_sub(ctx.fq(x).unwrap(), ctx.fq(y).unwrap()).index()
    }
}

fn root(ctx: &FieldTowerCtx, i: usize, idx: u32) -> RootFactor {
    let fq3 = |i| ctx.fq3(i).unwrap();
    let fq = |i| ctx.fq(i).unwrap();
    match i {
        1 => RootFactor::X1(fq3(idx)),
        2 => RootFactor::X2(fq(idx)),
        3 => RootFactor::X3(fq3(idx)),
        4 => RootFactor::X4(fq3(idx)),
        5 => RootFactor::X5(fq(idx)),
        6 => RootFactor::X6(fq(idx)),
        _ => unreachable!(),
    }
}

/// Conjugates `w` by the `x_i(r)` that makes coordinate `c` vanish.
///
/// `r ↦ (^{x_i(r)} w)_c` is affine over `F_p` in every case used here, so
/// its linear part is read off from the images of a basis and the system
/// is solved by elimination.
fn clear_coordinate(ctx: &FieldTowerCtx, w: &GroupElement, i: usize, c: usize) -> GroupElement {
    if coord_index(w, c) == 0 {
        return *w;
    }
    let k = ctx.k() as usize;
    let in_dim = if big_coord(i) { 3 * k } else { k };
    let out_dim = if big_coord(c) { 3 * k } else { k };
    let conj = |idx: u32| conjugate_closed(ctx, &root(ctx, i, idx).element(), w);
    let m = FpMatrix::from_linear_map(ctx.p(), in_dim, out_dim, |idx| coord_diff(ctx, c, &conj(idx), w));
    let target: Vec<u32> = digits(ctx.p(), coord_index(w, c), out_dim)
        .iter()
        .map(|&d| (ctx.p() - d) % ctx.p())
        .collect();
    let r = m.solve(&target).expect("the coordinate can always be cleared");
    let out = conj(crate::linalg::from_digits(ctx.p(), &r));
    assert_eq!(coord_index(&out, c), 0, "conjugation is affine in the parameter");
    out
}

/// Family and listed representative of the class containing `x`.
pub fn canonical_rep(ctx: &FieldTowerCtx, x: &GroupElement) -> (ClassFamily, GroupElement) {
    let id = GroupElement::IDENTITY;
    if !x.t1.is_zero() {
        if !x.t2.is_zero() {
            return (
                ClassFamily::T1T2,
                GroupElement {
                    t1: x.t1,
                    t2: x.t2,
                    ..id
                },
            );
        }
        let (rep, _) = ctx.decompose(x.t1, x.t3).expect("t1 is nonzero");
        if !rep.is_zero() {
            return (
                ClassFamily::T1T3,
                GroupElement {
                    t1: x.t1,
                    t3: rep,
                    ..id
                },
            );
        }
        let w = clear_coordinate(ctx, x, 2, 3);
        let w = clear_coordinate(ctx, &w, 3, 4);
        let w = clear_coordinate(ctx, &w, 4, 5);
        return (ClassFamily::T1T6, w);
    }
    if !x.t2.is_zero() {
        let w = clear_coordinate(ctx, x, 1, 3);
        let w = clear_coordinate(ctx, &w, 5, 6);
        return (ClassFamily::T2T4T5, w);
    }
    if !x.t3.is_zero() {
        let w = clear_coordinate(ctx, x, 1, 4);
        let w = clear_coordinate(ctx, &w, 4, 6);
        return (ClassFamily::T3T5, w);
    }
    if !x.t4.is_zero() {
        return (ClassFamily::X4, GroupElement { t4: x.t4, ..id });
    }
    if !x.t5.is_zero() {
        return (ClassFamily::X5, GroupElement { t5: x.t5, ..id });
    }
    if !x.t6.is_zero() {
        return (ClassFamily::X6, *x);
    }
    (ClassFamily::Identity, id)
}

/// Conjugation orbits of all elements, computed by closure under the
/// generators of [`group::generators`] using collection only.
#[derive(Debug, Clone)]
pub struct OrbitPartition {
    /// Orbit number of each element, indexed by [`group::rank`].
    pub labels: Vec<u32>,
    /// Smallest rank in each orbit; orbits are numbered in increasing order of it.
    pub orbit_min: Vec<u64>,
    pub orbit_size: Vec<u64>,
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.orbit_min.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbit_min.is_empty()
    }
}

pub fn brute_force_classes(ctx: &FieldTowerCtx, cap: Option<u64>) -> Result<OrbitPartition> {
    let n = group::checked_order(ctx, cap)?;
    let gens: Vec<GroupElement> = generators(ctx);
    let mut labels = vec![u32::MAX; n as usize];
    let mut orbit_min = Vec::new();
    let mut orbit_size = Vec::new();
    let mut queue = Vec::new();
    for seed in 0..n {
        if labels[seed as usize] != u32::MAX {
            continue;
        }
        let label = orbit_min.len() as u32;
        labels[seed as usize] = label;
        queue.push(seed);
        let mut size = 0u64;
        while let Some(r) = queue.pop() {
            size += 1;
            let x = group::unrank(ctx, r);
            for g in &gens {
                let y = group::rank(ctx, &conjugate(ctx, g, &x));
                if labels[y as usize] == u32::MAX {
                    labels[y as usize] = label;
                    queue.push(y);
                }
            }
        }
        orbit_min.push(seed);
        orbit_size.push(size);
    }
    Ok(OrbitPartition {
        labels,
        orbit_min,
        orbit_size,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{build_tower, Fq3Element, FqElement};
    use crate::group::{inverse, multiply, random_element};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn census_at_three() {
        let ctx = build_tower(3, 1, None, None).unwrap();
        let classes = list_classes(&ctx);
        assert_eq!(classes.len(), 609);
        assert_eq!(classes.iter().map(|c| c.size).sum::<u64>(), 531_441);
        let x4: Vec<_> = classes.iter().filter(|c| c.family == ClassFamily::X4).collect();
        assert_eq!(x4.len(), 26);
        assert!(x4.iter().all(|c| c.size == 9));
        assert!(classes.iter().enumerate().all(|(i, c)| c.index == i));
        for f in ClassFamily::ALL {
            let n = classes.iter().filter(|c| c.family == f).count() as i128;
            assert_eq!(f.count_poly().eval(3), n);
        }
    }

    #[test]
    fn census_identity_is_symbolic() {
        let total: QPoly = ClassFamily::ALL
            .iter()
            .map(|f| f.count_poly() * QPoly::q_pow(f.size_exponent() as usize))
            .sum();
        assert_eq!(total, QPoly::q_pow(12));
        let count: QPoly = ClassFamily::ALL.iter().map(|f| f.count_poly()).sum();
        assert_eq!(count, QPoly::new(vec![0, -1, -1, -1, 2, 2]));
        for q in [5u32, 7] {
            let ctx = build_tower(q, 1, None, None).unwrap();
            let classes = list_classes(&ctx);
            assert_eq!(classes.len() as i128, count.eval(q as i128));
            assert_eq!(
                classes.iter().map(|c| c.size as u128).sum::<u128>(),
                (q as u128).pow(12)
            );
        }
    }

    #[test]
    fn centralizer_orders() {
        let ctx = build_tower(5, 1, None, None).unwrap();
        let census = ClassCensus::new(&ctx);
        let q12 = 5u64.pow(12);
        assert_eq!(centralizer_order(&ctx, &census.classes()[0]), q12);
        for c in census.classes() {
            let expected = match c.family {
                ClassFamily::X6 => q12,
                ClassFamily::T1T2 => 625,
                _ => q12 / c.size,
            };
            assert_eq!(centralizer_order(&ctx, c), expected);
        }
    }

    #[test]
    fn representatives_are_fixed_points() {
        for (p, k) in [(3, 1), (5, 1), (3, 2)] {
            let ctx = build_tower(p, k, None, None).unwrap();
            let census = ClassCensus::new(&ctx);
            for c in census.classes() {
                assert_eq!(census.class_of(&ctx, &c.rep).unwrap().index, c.index);
            }
        }
    }

    #[test]
    fn class_of_is_conjugation_invariant() {
        for (p, k) in [(3, 1), (5, 1), (7, 1), (3, 2)] {
            let ctx = build_tower(p, k, None, None).unwrap();
            let census = ClassCensus::new(&ctx);
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            for _ in 0..3000 {
                let (g, x) = (random_element(&ctx, &mut rng), random_element(&ctx, &mut rng));
                let y = multiply(&ctx, &multiply(&ctx, &g, &x), &inverse(&ctx, &g));
                assert_eq!(
                    census.class_of(&ctx, &x).unwrap().index,
                    census.class_of(&ctx, &y).unwrap().index
                );
            }
        }
    }

    #[test]
    fn x5_class_absorbs_the_center() {
        let ctx = build_tower(3, 1, None, None).unwrap();
        let census = ClassCensus::new(&ctx);
        for t5 in ctx.fq_nonzero() {
            let base = census.class_of(&ctx, &RootFactor::X5(t5).element()).unwrap().index;
            for t6 in ctx.fq_elements() {
                let x = GroupElement {
                    t5,
                    t6,
                    ..GroupElement::IDENTITY
                };
                assert_eq!(census.class_of(&ctx, &x).unwrap().index, base);
            }
        }
    }

    #[test]
    fn t1t6_membership_has_q5_elements() {
        let ctx = build_tower(3, 1, None, None).unwrap();
        let t1 = ctx.fq3(5).unwrap();
        let mut counts: HashMap<FqElement, usize> = HashMap::new();
        for s2 in ctx.fq_elements() {
            for t4 in ctx.fq3_elements() {
                for t5 in ctx.fq_elements() {
                    for t6 in ctx.fq_elements() {
                        let x = GroupElement::new(t1, FqElement::ZERO, ctx.fq3_scale(s2, t1), t4, t5, t6);
                        let (fam, rep) = canonical_rep(&ctx, &x);
                        assert_eq!(fam, ClassFamily::T1T6);
                        assert_eq!(
                            (rep.t1, rep.t3, rep.t4, rep.t5),
                            (t1, Fq3Element::ZERO, Fq3Element::ZERO, FqElement::ZERO)
                        );
                        *counts.entry(rep.t6).or_default() += 1;
                    }
                }
            }
        }
        assert_eq!(counts.len(), 3);
        assert!(counts.values().all(|&n| n == 243));
    }
}
