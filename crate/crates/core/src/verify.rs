//! Verification suites. Every check is exact: sums are accumulated as
//! integer multiplicities of the powers of `ζ_p` and compared coefficientwise.

use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{induced_from_n, induced_value_oracle, list_irreducibles, CharFamily, CharLabel, CharTable};
use crate::conjugacy::{brute_force_classes, ClassCensus, ClassFamily, ConjClass};
use crate::cyclotomic::theta_exp;
use crate::error::Result;
use crate::field::{build_tower_for_q, FieldTowerCtx, FqElement};
use crate::group::{
    self, commutator, conjugate_closed, format_element, generators, inverse, multiply, random_element, GroupElement,
};
use crate::poly::QPoly;
use crate::CycInt;

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub passed: bool,
    pub detail: String,
    pub counterexample: Option<String>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    fn new(check: &str, start: Instant, outcome: std::result::Result<String, String>) -> Self {
        let elapsed_ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => VerificationReport {
                check: check.into(),
                passed: true,
                detail,
                counterexample: None,
                elapsed_ms,
            },
            Err(cx) => VerificationReport {
                check: check.into(),
                passed: false,
                detail: String::new(),
                counterexample: Some(cx),
                elapsed_ms,
            },
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} ms)", self.check, self.elapsed_ms)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        if let Some(cx) = &self.counterexample {
            write!(f, ": counterexample {cx}")?;
        }
        Ok(())
    }
}

fn q12(ctx: &FieldTowerCtx) -> i128 {
    (ctx.q() as i128).pow(12)
}

/// Adds `w · a · conj(b)` to the exponent multiplicities `acc`.
#[inline]
fn accumulate(p: usize, a: &[i32], b: &[i32], w: i128, acc: &mut [i128]) {
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let wx = w * x as i128;
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                acc[(i + p - j) % p] += wx * y as i128;
            }
        }
    }
}

/// Whether `acc` represents the rational integer `n`.
fn equals_integer(acc: &[i128], n: i128) -> bool {
    let top = *acc.last().unwrap();
    acc[0] - top == n && acc[1..acc.len() - 1].iter().all(|&c| c == top)
}

fn render(acc: &[i128]) -> String {
    let top = *acc.last().unwrap();
    let parts: Vec<String> = acc[..acc.len() - 1].iter().map(|c| (c - top).to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// `Σ_C |C| χ(C) conj(ψ(C)) = δ_{χψ} q^12` for all pairs of rows of `table`,
/// which must contain every class.
pub fn verify_row_orthogonality(ctx: &FieldTowerCtx, table: &CharTable) -> VerificationReport {
    let start = Instant::now();
    let name = "row orthogonality";
    let expected_classes = count_poly_total().eval(ctx.q() as i128);
    if table.n_classes() as i128 != expected_classes {
        return VerificationReport::new(
            name,
            start,
            Err(format!("table has {} of {expected_classes} classes", table.n_classes())),
        );
    }
    let p = ctx.p() as usize;
    let n = table.n_chars();
    let sizes: Vec<i128> = table.classes().iter().map(|c| c.size as i128).collect();
    let failure = (0..n).into_par_iter().find_map_first(|i| {
        let mut acc = vec![0i128; p];
        for j in i..n {
            acc.iter_mut().for_each(|c| *c = 0);
            for (c, &w) in sizes.iter().enumerate() {
                accumulate(p, table.coeffs(i, c), table.coeffs(j, c), w, &mut acc);
            }
            let target = if i == j { q12(ctx) } else { 0 };
            if !equals_integer(&acc, target) {
                return Some(format!(
                    "<{}, {}> = {}, expected {target}",
                    table.labels()[i].describe(ctx),
                    table.labels()[j].describe(ctx),
                    render(&acc)
                ));
            }
        }
        None
    });
    let pairs = n * (n + 1) / 2;
    VerificationReport::new(
        name,
        start,
        failure.map_or(Ok(format!("{pairs} pairs of {n} characters")), Err),
    )
}

/// `Σ_χ χ(C) conj(χ(D)) = δ_{CD} q^12 / |C|` for all pairs of columns of
/// `table`, which must contain every character.
pub fn verify_column_orthogonality(ctx: &FieldTowerCtx, table: &CharTable) -> VerificationReport {
    let start = Instant::now();
    let name = "column orthogonality";
    let expected_chars = count_poly_total().eval(ctx.q() as i128);
    if table.n_chars() as i128 != expected_chars {
        return VerificationReport::new(
            name,
            start,
            Err(format!("table has {} of {expected_chars} characters", table.n_chars())),
        );
    }
    let p = ctx.p() as usize;
    let (rows, cols) = (table.n_chars(), table.n_classes());
    let w = p - 1;
    // column-major copy for contiguous access
    let mut by_col = vec![0i32; rows * cols * w];
    for i in 0..rows {
        for j in 0..cols {
            by_col[(j * rows + i) * w..(j * rows + i + 1) * w].copy_from_slice(table.coeffs(i, j));
        }
    }
    let cell = |j: usize, i: usize| &by_col[(j * rows + i) * w..(j * rows + i + 1) * w];
    let failure = (0..cols).into_par_iter().find_map_first(|c| {
        let mut acc = vec![0i128; p];
        for d in c..cols {
            acc.iter_mut().for_each(|x| *x = 0);
            for i in 0..rows {
                accumulate(p, cell(c, i), cell(d, i), 1, &mut acc);
            }
            let target = if c == d {
                q12(ctx) / table.classes()[c].size as i128
            } else {
                0
            };
            if !equals_integer(&acc, target) {
                return Some(format!(
                    "columns {} and {}: sum = {}, expected {target}",
                    format_element(ctx, &table.classes()[c].rep),
                    format_element(ctx, &table.classes()[d].rep),
                    render(&acc)
                ));
            }
        }
        None
    });
    let pairs = cols * (cols + 1) / 2;
    VerificationReport::new(
        name,
        start,
        failure.map_or(Ok(format!("{pairs} pairs of {cols} classes")), Err),
    )
}

/// Row and column orthogonality, either over the full table or over `k`
/// seeded random rows (against all classes) and `k` random columns
/// (against all characters).
pub fn verify_orthogonality(
    ctx: &FieldTowerCtx,
    census: &ClassCensus,
    sample_size: Option<usize>,
    seed: u64,
) -> Result<Vec<VerificationReport>> {
    let labels = list_irreducibles(ctx);
    match sample_size {
        None => {
            let table = CharTable::build_rows(ctx, census, labels)?;
            Ok(vec![
                verify_row_orthogonality(ctx, &table),
                verify_column_orthogonality(ctx, &table),
            ])
        }
        Some(k) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut rows: Vec<usize> = sample(&mut rng, labels.len(), k.min(labels.len())).into_vec();
            rows.sort_unstable();
            let mut cols: Vec<usize> = sample(&mut rng, census.len(), k.min(census.len())).into_vec();
            cols.sort_unstable();
            let row_table = CharTable::build_sub(
                ctx,
                rows.iter().map(|&i| labels[i]).collect(),
                census.classes().to_vec(),
            )?;
            let col_table =
                CharTable::build_sub(ctx, labels, cols.iter().map(|&j| census.classes()[j].clone()).collect())?;
            let mut row = verify_row_orthogonality(ctx, &row_table);
            let mut col = verify_column_orthogonality(ctx, &col_table);
            row.check = format!("row orthogonality (sampled, seed {seed})");
            col.check = format!("column orthogonality (sampled, seed {seed})");
            Ok(vec![row, col])
        }
    }
}

/// Number of rows sampled by default, giving about `10^4` pairs.
pub const DEFAULT_SAMPLE: usize = 141;

pub fn count_poly_total() -> QPoly {
    ClassFamily::ALL.iter().map(|f| f.count_poly()).sum()
}

/// Expected `(q-1)`-expansions, lowest power first: total, `#Irr_0`, `#Irr_1`, `#Irr_3`, `#Irr_4`.
pub const EXPANSIONS: [(&str, u32, &[i64]); 5] = [
    ("#Irr", u32::MAX, &[1, 12, 28, 27, 12, 2]),
    ("#Irr_0", 0, &[1, 4, 6, 4, 1]),
    ("#Irr_1", 1, &[0, 3, 9, 10, 5, 1]),
    ("#Irr_3", 3, &[0, 4, 10, 10, 5, 1]),
    ("#Irr_4", 4, &[0, 1, 3, 3, 1]),
];

fn degree_poly(e: u32) -> QPoly {
    CharFamily::ALL
        .iter()
        .filter(|f| e == u32::MAX || f.degree_exponent() == e)
        .map(|f| f.count_poly())
        .sum()
}

/// Enumerated character and class counts against the count polynomials and
/// their `(q-1)`-expansions.
pub fn verify_counts(qs: &[u64]) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut outcome = Ok(String::new());
    let mut lines = Vec::new();
    'outer: for &q in qs {
        let ctx = build_tower_for_q(q)?;
        let labels = list_irreducibles(&ctx);
        let classes = crate::conjugacy::list_classes(&ctx);
        let total = count_poly_total();
        if classes.len() as i128 != total.eval(q as i128) || labels.len() != classes.len() {
            outcome = Err(format!(
                "q={q}: {} classes, {} characters, polynomial {}",
                classes.len(),
                labels.len(),
                total.eval(q as i128)
            ));
            break;
        }
        for (name, e, expansion) in EXPANSIONS {
            let poly = degree_poly(e);
            let n = labels
                .iter()
                .filter(|l| e == u32::MAX || l.family().degree_exponent() == e)
                .count() as i128;
            if poly.eval(q as i128) != n || poly.in_q_minus_one() != expansion || expansion.iter().any(|&c| c < 0) {
                outcome = Err(format!(
                    "q={q}: {name} = {n}, polynomial gives {}, expansion {:?}",
                    poly.eval(q as i128),
                    poly.in_q_minus_one()
                ));
                break 'outer;
            }
        }
        lines.push(format!("q={q}: {} characters", labels.len()));
    }
    if outcome.is_ok() {
        outcome = Ok(lines.join("; "));
    }
    Ok(VerificationReport::new("count polynomials", start, outcome))
}

/// `Σ_χ deg(χ)^2 = q^12`.
pub fn verify_degree_identity(ctx: &FieldTowerCtx) -> VerificationReport {
    let start = Instant::now();
    let sum: u128 = list_irreducibles(ctx)
        .iter()
        .map(|l| (l.degree(ctx) as u128).pow(2))
        .sum();
    let target = (ctx.q() as u128).pow(12);
    let outcome = if sum == target {
        Ok(format!("sum = {sum}"))
    } else {
        Err(format!("sum = {sum}, expected {target}"))
    };
    VerificationReport::new("degree identity", start, outcome)
}

/// Brute-force orbits against the closed-form census and `class_of`.
pub fn verify_class_census(ctx: &FieldTowerCtx, census: &ClassCensus, cap: Option<u64>) -> Result<VerificationReport> {
    let start = Instant::now();
    let orbits = brute_force_classes(ctx, cap)?;
    let outcome = (|| {
        if orbits.len() != census.len() {
            return Err(format!("{} orbits, {} listed classes", orbits.len(), census.len()));
        }
        let mut orbit_class = vec![usize::MAX; orbits.len()];
        let mut class_orbit = vec![usize::MAX; census.len()];
        for (r, &label) in orbits.labels.iter().enumerate() {
            let x = group::unrank(ctx, r as u64);
            let c = census.class_of(ctx, &x).map_err(|e| e.to_string())?.index;
            let o = label as usize;
            if orbit_class[o] == usize::MAX && class_orbit[c] == usize::MAX {
                orbit_class[o] = c;
                class_orbit[c] = o;
            } else if orbit_class[o] != c || class_orbit[c] != o {
                return Err(format!(
                    "element {} breaks the orbit/class correspondence",
                    format_element(ctx, &x)
                ));
            }
        }
        for (o, &c) in orbit_class.iter().enumerate() {
            if orbits.orbit_size[o] != census.classes()[c].size {
                return Err(format!(
                    "orbit of {} has {} elements, class size {}",
                    format_element(ctx, &group::unrank(ctx, orbits.orbit_min[o])),
                    orbits.orbit_size[o],
                    census.classes()[c].size
                ));
            }
        }
        let mut by_size: HashMap<u64, usize> = HashMap::new();
        for &s in &orbits.orbit_size {
            *by_size.entry(s).or_default() += 1;
        }
        let mut dist: Vec<_> = by_size.into_iter().collect();
        dist.sort_unstable();
        let dist: Vec<String> = dist.iter().map(|(s, n)| format!("{n}x{s}")).collect();
        Ok(format!("{} orbits ({})", orbits.len(), dist.join(", ")))
    })();
    Ok(VerificationReport::new("class census vs orbit oracle", start, outcome))
}

/// Closed-form values against the induction oracle on every cell of `table`.
pub fn verify_character_oracle(ctx: &FieldTowerCtx, table: &CharTable) -> Result<VerificationReport> {
    let start = Instant::now();
    let classes = table.classes();
    let failure = (0..table.n_chars())
        .into_par_iter()
        .map(|i| -> Result<Option<String>> {
            let label = &table.labels()[i];
            for (j, c) in classes.iter().enumerate() {
                let v = induced_value_oracle(ctx, label, &c.rep)?;
                if v != table.get(i, j) {
                    return Ok(Some(format!(
                        "{} at {}: table {}, oracle {}",
                        label.describe(ctx),
                        format_element(ctx, &c.rep),
                        table.get(i, j),
                        v
                    )));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    let cells = table.n_chars() * table.n_classes();
    Ok(VerificationReport::new(
        "character values vs induction oracle",
        start,
        failure.map_or(Ok(format!("{cells} cells")), Err),
    ))
}

/// `Σ_{A12} χ_F6^{A17,A12} = Ind_N^U λ^{A17,0,0}` on every class
/// representative, with `A12` over `F_{q^3}`.
pub fn verify_f6_decomposition(ctx: &FieldTowerCtx, census: &ClassCensus) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut failure = None;
    'outer: for a17 in ctx.fq_nonzero() {
        for c in census.classes() {
            let induced = induced_from_n(ctx, a17, FqElement::ZERO, crate::field::Fq3Element::ZERO, &c.rep)?;
            let sum = ctx
                .fq3_elements()
                .map(|a12| crate::characters::char_value(ctx, &CharLabel::F6 { a17, a12 }, c))
                .try_fold(CycInt::zero(ctx.p()), |acc, v| v.map(|v| acc + v))?;
            if sum != induced {
                failure = Some(format!(
                    "A17={} at {}: sum {sum}, induced {induced}",
                    ctx.fmt_fq(a17),
                    format_element(ctx, &c.rep)
                ));
                break 'outer;
            }
        }
    }
    let detail = format!("{} classes, {} values of A17", census.len(), ctx.q() - 1);
    Ok(VerificationReport::new(
        "F6 sum over A12 in F_q^3 equals Ind_N^U",
        start,
        failure.map_or(Ok(detail), Err),
    ))
}

/// Closed-form conjugation against `u x u⁻¹` by collection, on seeded random
/// pairs and, if `all_reps`, on every pair of a group element and a class representative.
pub fn verify_conjugation(
    ctx: &FieldTowerCtx,
    census: &ClassCensus,
    random_pairs: usize,
    all_reps: bool,
    seed: u64,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mismatch = |u: &GroupElement, x: &GroupElement| {
        let by_collection = multiply(ctx, &multiply(ctx, u, x), &inverse(ctx, u));
        (conjugate_closed(ctx, u, x) != by_collection)
            .then(|| format!("u = {}, x = {}", format_element(ctx, u), format_element(ctx, x)))
    };
    let mut failure = None;
    for _ in 0..random_pairs {
        let (u, x) = (random_element(ctx, &mut rng), random_element(ctx, &mut rng));
        if let Some(cx) = mismatch(&u, &x) {
            failure = Some(cx);
            break;
        }
    }
    let mut checked = random_pairs as u64;
    if failure.is_none() && all_reps {
        let order = group::checked_order(ctx, None)?;
        let reps: Vec<GroupElement> = census.classes().iter().map(|c| c.rep).collect();
        failure = (0..order).into_par_iter().find_map_first(|r| {
            let u = group::unrank(ctx, r);
            let u_inv = inverse(ctx, &u);
            reps.iter().find_map(|x| {
                let by_collection = multiply(ctx, &multiply(ctx, &u, x), &u_inv);
                (conjugate_closed(ctx, &u, x) != by_collection)
                    .then(|| format!("u = {}, x = {}", format_element(ctx, &u), format_element(ctx, x)))
            })
        });
        checked += order * reps.len() as u64;
    }
    Ok(VerificationReport::new(
        "closed-form conjugation vs collection",
        start,
        failure.map_or(Ok(format!("{checked} pairs")), Err),
    ))
}

/// The field-layer identities, exhaustively.
pub fn verify_field_properties(ctx: &FieldTowerCtx) -> VerificationReport {
    let start = Instant::now();
    let outcome = (|| {
        let q = ctx.q() as usize;
        let all: Vec<_> = ctx.fq3_elements().collect();
        let kernel: Vec<_> = all.iter().copied().filter(|&t| ctx.phi0(t).is_zero()).collect();
        if kernel.len() != q * q {
            return Err(format!("|ker phi0| = {}", kernel.len()));
        }
        if all.iter().filter(|&&t| ctx.phi0(t) == FqElement::ONE).count() != q * q {
            return Err("phi0 = 1 does not have q^2 solutions".into());
        }
        for c in ctx.fq_elements() {
            if ctx.pi_q(ctx.embed(c)) != c {
                return Err(format!("pi_q({}) != itself", ctx.fmt_fq(c)));
            }
        }
        for &t in &all {
            let v = ctx.pi_q(t);
            if ctx.pi_q(ctx.embed(v)) != v {
                return Err(format!("pi_q not idempotent at {}", ctx.fmt_fq3(t)));
            }
        }
        if all.iter().filter(|&&t| ctx.pi_q(t).is_zero()).count() != q * q {
            return Err("|ker pi_q| != q^2".into());
        }
        for u in ctx.fq3_nonzero() {
            let mut seen = vec![false; all.len()];
            for &t in &all {
                let s = ctx.zeta(u, t).map_err(|e| e.to_string())?;
                if std::mem::replace(&mut seen[s.index() as usize], true) {
                    return Err(format!("zeta_u not injective for u = {}", ctx.fmt_fq3(u)));
                }
            }
        }
        for u in ctx.fq3_elements().filter(|&u| !ctx.in_fq(u)) {
            let mut image = vec![false; q];
            for &k in &kernel {
                image[ctx.phi0(ctx.fq3_mul(u, k)).index() as usize] = true;
            }
            if image.iter().any(|&b| !b) {
                return Err(format!("phi0 on u ker phi0 not onto for u = {}", ctx.fmt_fq3(u)));
            }
        }
        let eta = ctx.eta();
        let factor = ctx.fq3_mul(ctx.fq3_inv(eta).unwrap(), ctx.fq3_add(eta, ctx.frobenius_q(eta)));
        for &u in &all {
            let uq = ctx.frobenius_q(u);
            let twisted = ctx.fq3_mul(factor, uq);
            for &t in &all {
                let lhs = ctx.fq3_add(ctx.fq3_mul(uq, t), ctx.fq3_mul(u, ctx.frobenius_q2(t)));
                if theta_exp(ctx, ctx.pi_q(lhs)) != theta_exp(ctx, ctx.pi_q(ctx.fq3_mul(twisted, t))) {
                    return Err(format!(
                        "twisted character identity fails at u = {}, t = {}",
                        ctx.fmt_fq3(u),
                        ctx.fmt_fq3(t)
                    ));
                }
            }
        }
        Ok(format!("exhaustive over F_{}^3", ctx.q()))
    })();
    VerificationReport::new("field identities", start, outcome)
}

/// Associativity and inverses on random elements, the center, and the
/// subgroup generated by commutators.
pub fn verify_group_axioms(
    ctx: &FieldTowerCtx,
    triples: usize,
    inverses: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let order = group::checked_order(ctx, None)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outcome = (|| {
        for _ in 0..triples {
            let (a, b, c) = (
                random_element(ctx, &mut rng),
                random_element(ctx, &mut rng),
                random_element(ctx, &mut rng),
            );
            if multiply(ctx, &multiply(ctx, &a, &b), &c) != multiply(ctx, &a, &multiply(ctx, &b, &c)) {
                return Err(format!(
                    "associativity: {}, {}, {}",
                    format_element(ctx, &a),
                    format_element(ctx, &b),
                    format_element(ctx, &c)
                ));
            }
        }
        for _ in 0..inverses {
            let a = random_element(ctx, &mut rng);
            let ai = inverse(ctx, &a);
            if !multiply(ctx, &a, &ai).is_identity() || !multiply(ctx, &ai, &a).is_identity() {
                return Err(format!("inverse: {}", format_element(ctx, &a)));
            }
        }
        let gens = generators(ctx);
        let center: Vec<GroupElement> = (0..order)
            .map(|r| group::unrank(ctx, r))
            .filter(|x| gens.iter().all(|g| multiply(ctx, x, g) == multiply(ctx, g, x)))
            .collect();
        if center.len() != ctx.q() as usize || center.iter().any(|x| x.support() & !32 != 0) {
            return Err(format!("center has {} elements", center.len()));
        }
        let derived = derived_subgroup(ctx, &gens, order);
        let expected = (ctx.q() as u64).pow(8);
        if derived.len() as u64 != expected || derived.iter().any(|x| !(x.t1.is_zero() && x.t2.is_zero())) {
            return Err(format!("commutators generate {} elements", derived.len()));
        }
        Ok(format!(
            "{triples} triples, {inverses} inverses, |Z| = {}, |U'| = {}",
            center.len(),
            derived.len()
        ))
    })();
    Ok(VerificationReport::new("group axioms", start, outcome))
}

/// Normal closure of the commutators of the generators, by breadth-first closure.
fn derived_subgroup(ctx: &FieldTowerCtx, gens: &[GroupElement], order: u64) -> Vec<GroupElement> {
    let mut mult: Vec<GroupElement> = Vec::new();
    for a in gens {
        for b in gens {
            let c = commutator(ctx, a, b);
            if !c.is_identity() && !mult.contains(&c) {
                mult.push(c);
            }
        }
    }
    loop {
        let mut member = vec![false; order as usize];
        let mut elems = vec![GroupElement::IDENTITY];
        member[0] = true;
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            i += 1;
            for m in &mult {
                let y = multiply(ctx, &x, m);
                let r = group::rank(ctx, &y) as usize;
                if !member[r] {
                    member[r] = true;
                    elems.push(y);
                }
            }
        }
        let mut grew = false;
        for g in gens {
            for m in mult.clone() {
                let c = group::conjugate(ctx, g, &m);
                if !member[group::rank(ctx, &c) as usize] {
                    mult.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            return elems;
        }
    }
}

/// Oracle-backed checks; fails with `TooLarge` beyond the enumeration cap.
pub fn verify_against_oracles(
    ctx: &FieldTowerCtx,
    census: &ClassCensus,
    table: &CharTable,
) -> Result<Vec<VerificationReport>> {
    group::checked_order(ctx, None)?;
    Ok(vec![
        verify_class_census(ctx, census, None)?,
        verify_character_oracle(ctx, table)?,
        verify_f6_decomposition(ctx, census)?,
        verify_conjugation(ctx, census, 100_000, false, 1)?,
    ])
}

/// Class list as `(family, size)` multiplicities, for reporting.
pub fn class_distribution(classes: &[ConjClass]) -> Vec<(ClassFamily, u64, usize)> {
    ClassFamily::ALL
        .iter()
        .filter_map(|&f| {
            let members: Vec<_> = classes.iter().filter(|c| c.family == f).collect();
            members.first().map(|c| (f, c.size, members.len()))
        })
        .collect()
}
