//! The tower `F_p ⊆ F_q ⊆ F_{q^3}`.
//!
//! `F_q` is `F_p[x]/(f)` and `F_{q^3}` is `F_q[y]/(g)`. Elements are stored
//! as a single integer index:
//!
//! * an [`FqElement`] with coefficients `c_0, .., c_{k-1}` (constant first)
//!   has index `Σ c_i p^i`;
//! * an [`Fq3Element`] `a_0 + a_1 y + a_2 y^2` has index
//!   `a_0 + q a_1 + q^2 a_2`.
//!
//! The base-`p` digits of an index are therefore exactly its coordinates
//! over `F_p`, and `F_q` embeds into `F_{q^3}` as the indices below `q`.
//! All tables are built once by [`build_tower`]; the context is immutable
//! afterwards.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{digits, inv_mod, FpMatrix};

/// Largest `q` accepted by [`build_tower`]; per-element tables of `F_{q^3}` are kept in memory.
pub const MAX_Q: u64 = 128;

/// Full addition/multiplication tables of `F_{q^3}` are built below this size.
const FQ3_TABLE_LIMIT: u32 = 1331;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FqElement(u32);

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Fq3Element(u32);

impl FqElement {
    pub const ZERO: FqElement = FqElement(0);
    pub const ONE: FqElement = FqElement(1);

    pub const fn index(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Fq3Element {
    pub const ZERO: Fq3Element = Fq3Element(0);
    pub const ONE: Fq3Element = Fq3Element(1);

    pub const fn index(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Arithmetic context for the tower. See the module docs for the encoding.
#[derive(Debug, Clone)]
pub struct FieldTowerCtx {
    p: u32,
    k: u32,
    q: u32,
    f: Vec<u32>,
    g: [FqElement; 4],
    eta: Fq3Element,
    frobenius_table: [[FqElement; 3]; 3],

    fq_add: Vec<u32>,
    fq_mul: Vec<u32>,
    fq_neg: Vec<u32>,
    fq_inv: Vec<u32>,
    fq_trace: Vec<u32>,

    fq3_add: Option<Vec<u16>>,
    fq3_mul: Option<Vec<u16>>,
    frob: Vec<u32>,
    phi0: Vec<u32>,
    pi_q: Vec<u32>,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Splits `q` into `(p, k)` with `q = p^k`, `p` an odd prime.
pub fn prime_power(q: u64) -> Result<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).ok_or(Error::InvalidOrder(q))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    if rest != 1 || p == 2 {
        return Err(Error::InvalidOrder(q));
    }
    Ok((p as u32, k))
}

// Polynomials over F_p, constant term first.

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p) as u64;
    while r.len() > db {
        let top = *r.last().unwrap() as u64;
        if top != 0 {
            let factor = top * lead_inv % p as u64;
            let shift = r.len() - 1 - db;
            for (i, &bi) in b.iter().enumerate() {
                let sub = factor * bi as u64 % p as u64;
                r[shift + i] = ((r[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible_fp(f: &[u32], p: u32) -> bool {
    let d = f.len() - 1;
    for deg in 1..=d / 2 {
        for idx in 0..p.pow(deg as u32) {
            let mut h = digits(p, idx, deg);
            h.push(1);
            if poly_rem(f, &h, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn fmt_poly(coeffs: &[u32]) -> String {
    let parts: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Builds the tower for `q = p^k`.
///
/// `f` (degree `k` over `F_p`) and `g` (degree 3 over `F_q`) are monic
/// coefficient lists with the constant term first; the entries of `g` are
/// `F_q` indices. When omitted, the smallest monic irreducible in the
/// index order of the non-leading coefficients is used. `η` is the smallest
/// `t ∉ F_q` with `t + t^q + t^{q^2} = 1`.
pub fn build_tower(p: u32, k: u32, f: Option<&[u32]>, g: Option<&[u32]>) -> Result<FieldTowerCtx> {
    if p == 2 || !is_prime(p as u64) {
        return Err(Error::EvenCharacteristic(p as u64));
    }
    if k == 0 {
        return Err(Error::InvalidOrder(1));
    }
    let q64 = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
    if q64 > MAX_Q {
        return Err(Error::TooLarge {
            what: "field order q",
            size: q64,
            cap: MAX_Q,
        });
    }
    let q = q64 as u32;

    let f = match f {
        Some(f) => {
            if f.len() != k as usize + 1 || f[k as usize] != 1 || f.iter().any(|&c| c >= p) {
                return Err(Error::MalformedPolynomial(format!(
                    "f must be monic of degree {k} over F_{p}, got {}",
                    fmt_poly(f)
                )));
            }
            if !is_irreducible_fp(f, p) {
                return Err(Error::ReduciblePolynomial(fmt_poly(f)));
            }
            f.to_vec()
        }
        None => (0..q)
            .map(|idx| {
                let mut c = digits(p, idx, k as usize);
                c.push(1);
                c
            })
            .find(|c| is_irreducible_fp(c, p))
            .expect("irreducible polynomials exist in every degree"),
    };

    // F_q tables
    let n = q as usize;
    let kk = k as usize;
    let mut fq_add = vec![0u32; n * n];
    let mut fq_mul = vec![0u32; n * n];
    for a in 0..q {
        let da = digits(p, a, kk);
        for b in 0..q {
            let db = digits(p, b, kk);
            let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            fq_add[(a * q + b) as usize] = crate::linalg::from_digits(p, &sum);
            let mut prod = vec![0u32; 2 * kk];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let rem = poly_rem(&prod, &f, p);
            let mut rem = rem;
            rem.resize(kk, 0);
            fq_mul[(a * q + b) as usize] = crate::linalg::from_digits(p, &rem);
        }
    }
    let fq_neg: Vec<u32> = (0..q)
        .map(|a| (0..q).find(|&b| fq_add[(a * q + b) as usize] == 0).unwrap())
        .collect();
    let fq_inv: Vec<u32> = (0..q)
        .map(|a| {
            if a == 0 {
                0
            } else {
                (1..q).find(|&b| fq_mul[(a * q + b) as usize] == 1).unwrap()
            }
        })
        .collect();

    let mut ctx = FieldTowerCtx {
        p,
        k,
        q,
        f,
        g: [FqElement::ZERO; 4],
        eta: Fq3Element::ZERO,
        frobenius_table: [[FqElement::ZERO; 3]; 3],
        fq_add,
        fq_mul,
        fq_neg,
        fq_inv,
        fq_trace: Vec::new(),
        fq3_add: None,
        fq3_mul: None,
        frob: Vec::new(),
        phi0: Vec::new(),
        pi_q: Vec::new(),
    };
    ctx.fq_trace = (0..q)
        .map(|b| {
            let mut acc = FqElement::ZERO;
            let mut power = FqElement(b);
            for _ in 0..k {
                acc = ctx.fq_add(acc, power);
                power = ctx.fq_pow(power, p as u64);
            }
            debug_assert!(acc.0 < p);
            acc.0
        })
        .collect();

    let g = match g {
        Some(g) => {
            if g.len() != 4 || g[3] != 1 || g.iter().any(|&c| c >= q) {
                return Err(Error::MalformedPolynomial(format!(
                    "g must be monic of degree 3 over F_{q}, got {}",
                    fmt_poly(g)
                )));
            }
            let g = [FqElement(g[0]), FqElement(g[1]), FqElement(g[2]), FqElement(g[3])];
            if !ctx.cubic_irreducible(&g) {
                return Err(Error::ReduciblePolynomial(fmt_poly(&g.map(|c| c.0))));
            }
            g
        }
        None => (0..q * q * q)
            .map(|idx| {
                [
                    FqElement(idx % q),
                    FqElement(idx / q % q),
                    FqElement(idx / (q * q)),
                    FqElement::ONE,
                ]
            })
            .find(|g| ctx.cubic_irreducible(g))
            .expect("irreducible cubics exist"),
    };
    ctx.g = g;

    let size = q * q * q;
    if size <= FQ3_TABLE_LIMIT {
        let s = size as usize;
        let mut add = vec![0u16; s * s];
        let mut mul = vec![0u16; s * s];
        for a in 0..size {
            for b in 0..size {
                add[(a * size + b) as usize] = ctx.fq3_add_slow(Fq3Element(a), Fq3Element(b)).0 as u16;
                mul[(a * size + b) as usize] = ctx.fq3_mul_slow(Fq3Element(a), Fq3Element(b)).0 as u16;
            }
        }
        ctx.fq3_add = Some(add);
        ctx.fq3_mul = Some(mul);
    }

    // t -> t^q is F_q-linear: tabulate the images of 1, y, y^2.
    let mut table = [[FqElement::ZERO; 3]; 3];
    for (i, row) in table.iter_mut().enumerate() {
        let basis = Fq3Element(q.pow(i as u32));
        *row = ctx.fq3_coords(ctx.fq3_pow(basis, q as u64));
    }
    ctx.frobenius_table = table;
    ctx.frob = (0..size).map(|x| ctx.frobenius_via_table(Fq3Element(x)).0).collect();
    for x in (0..size).map(Fq3Element) {
        let thrice = ctx.frobenius_q(ctx.frobenius_q(ctx.frobenius_q(x)));
        assert_eq!(thrice, x, "Frobenius must have order dividing 3");
    }
    ctx.phi0 = (0..size)
        .map(|x| {
            let x = Fq3Element(x);
            let s = ctx.fq3_add(ctx.fq3_add(x, ctx.frobenius_q(x)), ctx.frobenius_q2(x));
            assert!(s.0 < q, "trace must land in F_q");
            s.0
        })
        .collect();

    let eta = (q..size)
        .map(Fq3Element)
        .find(|&t| ctx.phi0(t) == FqElement::ONE)
        .expect("at least q^2 - q elements outside F_q have trace 1");
    let twisted = ctx.fq3_mul(eta, ctx.fq3_inv(ctx.frobenius_q2(eta)).unwrap());
    assert!(
        !ctx.fq3_add(Fq3Element::ONE, twisted).is_zero(),
        "1 + eta^(1-q^2) must be nonzero"
    );
    ctx.eta = eta;
    ctx.pi_q = (0..size).map(|x| ctx.phi0(ctx.fq3_mul(eta, Fq3Element(x))).0).collect();
    Ok(ctx)
}

/// Builds the tower for `q` with default polynomials.
pub fn build_tower_for_q(q: u64) -> Result<FieldTowerCtx> {
    let (p, k) = prime_power(q)?;
    build_tower(p, k, None, None)
}

impl FieldTowerCtx {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `|F_{q^3}|`
    pub fn q3(&self) -> u32 {
        self.q * self.q * self.q
    }

    /// Defining polynomial of `F_q` over `F_p`, constant term first.
    pub fn f(&self) -> &[u32] {
        &self.f
    }

    /// Defining polynomial of `F_{q^3}` over `F_q`, constant term first.
    pub fn g(&self) -> [FqElement; 4] {
        self.g
    }

    pub fn eta(&self) -> Fq3Element {
        self.eta
    }

    /// Row `i` holds the `F_q`-coordinates of `(y^i)^q`.
    pub fn frobenius_table(&self) -> [[FqElement; 3]; 3] {
        self.frobenius_table
    }

    // ---- construction and enumeration -------------------------------------------------

    pub fn fq(&self, index: u32) -> Option<FqElement> {
        (index < self.q).then_some(FqElement(index))
    }

    pub fn fq3(&self, index: u32) -> Option<Fq3Element> {
        (index < self.q3()).then_some(Fq3Element(index))
    }

    /// Image of an integer under `Z -> F_p ⊆ F_q`.
    pub fn fq_from_int(&self, n: i64) -> FqElement {
        FqElement(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn fq_elements(&self) -> impl Iterator<Item = FqElement> + Clone {
        (0..self.q).map(FqElement)
    }

    pub fn fq_nonzero(&self) -> impl Iterator<Item = FqElement> + Clone {
        (1..self.q).map(FqElement)
    }

    pub fn fq3_elements(&self) -> impl Iterator<Item = Fq3Element> + Clone {
        (0..self.q3()).map(Fq3Element)
    }

    pub fn fq3_nonzero(&self) -> impl Iterator<Item = Fq3Element> + Clone {
        (1..self.q3()).map(Fq3Element)
    }

    /// `F_p`-basis `p^0, .., p^{k-1}` of `F_q`.
    pub fn fq_basis(&self) -> impl Iterator<Item = FqElement> + '_ {
        (0..self.k).map(|i| FqElement(self.p.pow(i)))
    }

    /// `F_p`-basis `p^0, .., p^{3k-1}` of `F_{q^3}`.
    pub fn fq3_basis(&self) -> impl Iterator<Item = Fq3Element> + '_ {
        (0..3 * self.k).map(|i| Fq3Element(self.p.pow(i)))
    }

    /// Coefficients over `F_p` of an `F_q` element, constant term first.
    pub fn fq_coeffs(&self, x: FqElement) -> Vec<u32> {
        digits(self.p, x.0, self.k as usize)
    }

    pub fn fq_from_coeffs(&self, coeffs: &[u32]) -> Option<FqElement> {
        if coeffs.len() != self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return None;
        }
        Some(FqElement(crate::linalg::from_digits(self.p, coeffs)))
    }

    /// Coordinates in the `F_q`-basis `1, y, y^2`.
    pub fn fq3_coords(&self, x: Fq3Element) -> [FqElement; 3] {
        let q = self.q;
        [FqElement(x.0 % q), FqElement(x.0 / q % q), FqElement(x.0 / (q * q))]
    }

    pub fn fq3_from_coords(&self, c: [FqElement; 3]) -> Fq3Element {
        let q = self.q;
        Fq3Element(c[0].0 + q * c[1].0 + q * q * c[2].0)
    }

    /// All `3k` coefficients over `F_p`.
    pub fn fq3_fp_coeffs(&self, x: Fq3Element) -> Vec<u32> {
        digits(self.p, x.0, 3 * self.k as usize)
    }

    pub fn fq3_from_fp_coeffs(&self, coeffs: &[u32]) -> Option<Fq3Element> {
        if coeffs.len() != 3 * self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return None;
        }
        Some(Fq3Element(crate::linalg::from_digits(self.p, coeffs)))
    }

    pub fn embed(&self, c: FqElement) -> Fq3Element {
        Fq3Element(c.0)
    }

    /// `Some(c)` when `x = embed(c)`.
    pub fn as_fq(&self, x: Fq3Element) -> Option<FqElement> {
        (x.0 < self.q).then_some(FqElement(x.0))
    }

    pub fn in_fq(&self, x: Fq3Element) -> bool {
        x.0 < self.q
    }

    // ---- F_q ------------------------------------------------------------------------

    #[inline]
    pub fn fq_add(&self, a: FqElement, b: FqElement) -> FqElement {
        FqElement(self.fq_add[(a.0 * self.q + b.0) as usize])
    }

    #[inline]
    pub fn fq_neg(&self, a: FqElement) -> FqElement {
        FqElement(self.fq_neg[a.0 as usize])
    }

    #[inline]
    pub fn fq_sub(&self, a: FqElement, b: FqElement) -> FqElement {
        self.fq_add(a, self.fq_neg(b))
    }

    #[inline]
    pub fn fq_mul(&self, a: FqElement, b: FqElement) -> FqElement {
        FqElement(self.fq_mul[(a.0 * self.q + b.0) as usize])
    }

    pub fn fq_inv(&self, a: FqElement) -> Option<FqElement> {
        (!a.is_zero()).then(|| FqElement(self.fq_inv[a.0 as usize]))
    }

    pub fn fq_pow(&self, a: FqElement, mut e: u64) -> FqElement {
        let mut result = FqElement::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.fq_mul(result, base);
            }
            base = self.fq_mul(base, base);
            e >>= 1;
        }
        result
    }

    /// Absolute trace `F_q -> F_p`, returned as an integer in `[0, p)`.
    #[inline]
    pub fn fq_trace(&self, a: FqElement) -> u32 {
        self.fq_trace[a.0 as usize]
    }

    // ---- F_{q^3} ----------------------------------------------------------------------

    fn fq3_add_slow(&self, a: Fq3Element, b: Fq3Element) -> Fq3Element {
        let (x, y) = (self.fq3_coords(a), self.fq3_coords(b));
        self.fq3_from_coords([
            self.fq_add(x[0], y[0]),
            self.fq_add(x[1], y[1]),
            self.fq_add(x[2], y[2]),
        ])
    }

    fn fq3_mul_slow(&self, a: Fq3Element, b: Fq3Element) -> Fq3Element {
        let (x, y) = (self.fq3_coords(a), self.fq3_coords(b));
        let mut c = [FqElement::ZERO; 5];
        for i in 0..3 {
            for j in 0..3 {
                c[i + j] = self.fq_add(c[i + j], self.fq_mul(x[i], y[j]));
            }
        }
        // y^3 = -(g0 + g1 y + g2 y^2)
        for d in [4, 3] {
            let top = c[d];
            for i in 0..3 {
                c[d - 3 + i] = self.fq_sub(c[d - 3 + i], self.fq_mul(top, self.g[i]));
            }
        }
        self.fq3_from_coords([c[0], c[1], c[2]])
    }

    fn cubic_irreducible(&self, g: &[FqElement; 4]) -> bool {
        // a cubic is irreducible iff it has no root
        self.fq_elements().all(|r| {
            let mut v = FqElement::ZERO;
            for &c in g.iter().rev() {
                v = self.fq_add(self.fq_mul(v, r), c);
            }
            !v.is_zero()
        })
    }

    #[inline]
    pub fn fq3_add(&self, a: Fq3Element, b: Fq3Element) -> Fq3Element {
        match &self.fq3_add {
            Some(t) => Fq3Element(t[(a.0 * self.q3() + b.0) as usize] as u32),
            None => self.fq3_add_slow(a, b),
        }
    }

    #[inline]
    pub fn fq3_mul(&self, a: Fq3Element, b: Fq3Element) -> Fq3Element {
        match &self.fq3_mul {
            Some(t) => Fq3Element(t[(a.0 * self.q3() + b.0) as usize] as u32),
            None => self.fq3_mul_slow(a, b),
        }
    }

    #[inline]
    pub fn fq3_neg(&self, a: Fq3Element) -> Fq3Element {
        let c = self.fq3_coords(a);
        self.fq3_from_coords([self.fq_neg(c[0]), self.fq_neg(c[1]), self.fq_neg(c[2])])
    }

    #[inline]
    pub fn fq3_sub(&self, a: Fq3Element, b: Fq3Element) -> Fq3Element {
        self.fq3_add(a, self.fq3_neg(b))
    }

    /// `c · x` for `c ∈ F_q`.
    #[inline]
    pub fn fq3_scale(&self, c: FqElement, x: Fq3Element) -> Fq3Element {
        self.fq3_mul(self.embed(c), x)
    }

    pub fn fq3_pow(&self, a: Fq3Element, mut e: u64) -> Fq3Element {
        let mut result = Fq3Element::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.fq3_mul(result, base);
            }
            base = self.fq3_mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn fq3_inv(&self, a: Fq3Element) -> Option<Fq3Element> {
        (!a.is_zero()).then(|| self.fq3_pow(a, self.q3() as u64 - 2))
    }

    fn frobenius_via_table(&self, x: Fq3Element) -> Fq3Element {
        let c = self.fq3_coords(x);
        let mut out = [FqElement::ZERO; 3];
        for (ci, row) in c.iter().zip(&self.frobenius_table) {
            for j in 0..3 {
                out[j] = self.fq_add(out[j], self.fq_mul(*ci, row[j]));
            }
        }
        self.fq3_from_coords(out)
    }

    /// `x^q`
    #[inline]
    pub fn frobenius_q(&self, x: Fq3Element) -> Fq3Element {
        Fq3Element(self.frob[x.0 as usize])
    }

    /// `x^{q^2}`
    #[inline]
    pub fn frobenius_q2(&self, x: Fq3Element) -> Fq3Element {
        self.frobenius_q(self.frobenius_q(x))
    }

    /// `φ₀(x) = x + x^q + x^{q²}`, the trace down to `F_q`.
    #[inline]
    pub fn phi0(&self, x: Fq3Element) -> FqElement {
        FqElement(self.phi0[x.0 as usize])
    }

    /// `x^{1+q+q²}`, the norm down to `F_q`.
    pub fn norm(&self, x: Fq3Element) -> FqElement {
        let n = self.fq3_mul(self.fq3_mul(x, self.frobenius_q(x)), self.frobenius_q2(x));
        self.as_fq(n).expect("norm lies in F_q")
    }

    /// `π_q(x) = φ₀(ηx)`.
    #[inline]
    pub fn pi_q(&self, x: Fq3Element) -> FqElement {
        FqElement(self.pi_q[x.0 as usize])
    }

    /// `ζ_u(t) = u t^{q²} + u^q t^q`.
    pub fn zeta(&self, u: Fq3Element, t: Fq3Element) -> Result<Fq3Element> {
        if u.is_zero() {
            return Err(Error::ZeroTwist);
        }
        Ok(self.zeta_unchecked(u, t))
    }

    fn zeta_unchecked(&self, u: Fq3Element, t: Fq3Element) -> Fq3Element {
        self.fq3_add(
            self.fq3_mul(u, self.frobenius_q2(t)),
            self.fq3_mul(self.frobenius_q(u), self.frobenius_q(t)),
        )
    }

    /// The unique `t` with `ζ_u(t) = s`.
    pub fn zeta_inv(&self, u: Fq3Element, s: Fq3Element) -> Result<Fq3Element> {
        if u.is_zero() {
            return Err(Error::ZeroTwist);
        }
        let n = 3 * self.k as usize;
        let m = FpMatrix::from_linear_map(self.p, n, n, |t| self.zeta_unchecked(u, Fq3Element(t)).0);
        let t = m.solve(&self.fq3_fp_coeffs(s)).expect("zeta_u is bijective");
        Ok(self.fq3_from_fp_coeffs(&t).unwrap())
    }

    fn line_pivot(&self, a: Fq3Element) -> Result<usize> {
        if a.is_zero() {
            return Err(Error::ZeroModulus);
        }
        Ok(self.fq3_coords(a).iter().position(|c| !c.is_zero()).unwrap())
    }

    /// Coset representatives of `a·F_q` in `F_{q^3}`: the elements whose
    /// coordinate at the first nonzero coordinate of `a` vanishes, in index order.
    /// The zero coset is represented by `0`.
    pub fn transversal(&self, a: Fq3Element) -> Result<Vec<Fq3Element>> {
        let j = self.line_pivot(a)?;
        Ok(self
            .fq3_elements()
            .filter(|&t| self.fq3_coords(t)[j].is_zero())
            .collect())
    }

    /// The unique `(rep, s)` with `t = rep + s·a` and `rep` in [`Self::transversal`]`(a)`.
    pub fn decompose(&self, a: Fq3Element, t: Fq3Element) -> Result<(Fq3Element, FqElement)> {
        let j = self.line_pivot(a)?;
        let s = self.fq_mul(self.fq3_coords(t)[j], self.fq_inv(self.fq3_coords(a)[j]).unwrap());
        Ok((self.fq3_sub(t, self.fq3_scale(s, a)), s))
    }

    /// Human-readable coefficient list of an `F_q` element.
    pub fn fmt_fq(&self, x: FqElement) -> String {
        fmt_poly(&self.fq_coeffs(x))
    }

    pub fn fmt_fq3(&self, x: Fq3Element) -> String {
        fmt_poly(&self.fq3_fp_coeffs(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx3() -> FieldTowerCtx {
        build_tower(3, 1, None, None).unwrap()
    }

    #[test]
    fn default_tower_at_three() {
        let ctx = ctx3();
        assert_eq!(ctx.q(), 3);
        assert_eq!(ctx.q3(), 27);
        assert_eq!(ctx.f(), &[0, 1]);
        // y^3 + 2y + 1 is the first cubic without a root in F_3
        assert_eq!(ctx.g().map(|c| c.index()), [1, 2, 0, 1]);
        // exhaustive oracle: t + t^3 + t^9 = 1 with t outside F_3, smallest index first
        let eta = ctx
            .fq3_elements()
            .find(|&t| {
                let s = ctx.fq3_add(ctx.fq3_add(t, ctx.fq3_pow(t, 3)), ctx.fq3_pow(t, 9));
                s == Fq3Element::ONE && !ctx.in_fq(t)
            })
            .unwrap();
        assert_eq!(ctx.eta(), eta);
        assert_eq!(ctx.phi0(ctx.eta()), FqElement::ONE);
        assert!(!ctx.in_fq(ctx.eta()));
    }

    #[test]
    fn rejects_even_or_composite_characteristic() {
        assert_eq!(build_tower(2, 1, None, None).unwrap_err(), Error::EvenCharacteristic(2));
        assert_eq!(build_tower(9, 1, None, None).unwrap_err(), Error::EvenCharacteristic(9));
        assert!(matches!(prime_power(8), Err(Error::InvalidOrder(8))));
        assert_eq!(prime_power(9).unwrap(), (3, 2));
        assert_eq!(prime_power(7).unwrap(), (7, 1));
    }

    #[test]
    fn rejects_reducible_polynomials() {
        // y^3 - y = y(y-1)(y+1)
        let err = build_tower(3, 1, None, Some(&[0, 2, 0, 1])).unwrap_err();
        assert!(matches!(err, Error::ReduciblePolynomial(_)));
        // x^2 + 2 = (x-1)(x+1) over F_3
        let err = build_tower(3, 2, Some(&[2, 0, 1]), None).unwrap_err();
        assert!(matches!(err, Error::ReduciblePolynomial(_)));
        assert!(matches!(
            build_tower(3, 1, None, Some(&[1, 2, 0, 2])),
            Err(Error::MalformedPolynomial(_))
        ));
        assert!(build_tower(3, 2, Some(&[1, 0, 1]), None).is_ok());
    }

    #[test]
    fn frobenius_matches_repeated_multiplication() {
        for ctx in [
            ctx3(),
            build_tower(3, 2, None, None).unwrap(),
            build_tower(5, 1, None, None).unwrap(),
        ] {
            let q = ctx.q() as u64;
            for x in ctx.fq3_elements() {
                assert_eq!(ctx.frobenius_q(x), ctx.fq3_pow(x, q));
            }
            for c in ctx.fq_elements() {
                assert_eq!(ctx.frobenius_q(ctx.embed(c)), ctx.embed(c));
            }
        }
    }

    #[test]
    fn frobenius_is_a_ring_homomorphism_of_order_three() {
        let ctx = ctx3();
        for a in ctx.fq3_elements() {
            assert_eq!(ctx.frobenius_q(ctx.frobenius_q2(a)), a);
            for b in ctx.fq3_elements() {
                assert_eq!(
                    ctx.frobenius_q(ctx.fq3_add(a, b)),
                    ctx.fq3_add(ctx.frobenius_q(a), ctx.frobenius_q(b))
                );
                assert_eq!(
                    ctx.frobenius_q(ctx.fq3_mul(a, b)),
                    ctx.fq3_mul(ctx.frobenius_q(a), ctx.frobenius_q(b))
                );
            }
        }
    }

    #[test]
    fn tables_agree_with_polynomial_arithmetic() {
        let ctx = build_tower(3, 2, None, None).unwrap();
        for a in ctx.fq3_elements().step_by(7) {
            for b in ctx.fq3_elements().step_by(11) {
                assert_eq!(ctx.fq3_mul(a, b), ctx.fq3_mul_slow(a, b));
                assert_eq!(ctx.fq3_add(a, b), ctx.fq3_add_slow(a, b));
            }
            if !a.is_zero() {
                assert_eq!(ctx.fq3_mul(a, ctx.fq3_inv(a).unwrap()), Fq3Element::ONE);
            }
        }
    }

    #[test]
    fn phi0_kernel_and_values() {
        let ctx = ctx3();
        assert_eq!(ctx.phi0(Fq3Element::ZERO), FqElement::ZERO);
        for c in ctx.fq_elements() {
            // 3c = 0 in characteristic 3
            assert_eq!(ctx.phi0(ctx.embed(c)), FqElement::ZERO);
        }
        assert_eq!(ctx.fq3_elements().filter(|&t| ctx.phi0(t).is_zero()).count(), 9);
        assert_eq!(ctx.fq3_elements().filter(|&t| ctx.phi0(t) == FqElement::ONE).count(), 9);
        let ctx5 = build_tower(5, 1, None, None).unwrap();
        for c in ctx5.fq_elements() {
            let three_c = ctx5.fq_mul(ctx5.fq_from_int(3), c);
            assert_eq!(ctx5.phi0(ctx5.embed(c)), three_c);
        }
    }

    #[test]
    fn pi_q_is_an_idempotent_projection() {
        let ctx = ctx3();
        for c in ctx.fq_elements() {
            assert_eq!(ctx.pi_q(ctx.embed(c)), c);
        }
        for t in ctx.fq3_elements() {
            let v = ctx.pi_q(t);
            assert_eq!(ctx.pi_q(ctx.embed(v)), v);
        }
        assert_eq!(ctx.fq3_elements().filter(|&t| ctx.pi_q(t).is_zero()).count(), 9);
        // F_{q^3} = ker π_q ⊕ F_q
        let kernel: Vec<_> = ctx.fq3_elements().filter(|&t| ctx.pi_q(t).is_zero()).collect();
        let mut sums: Vec<_> = kernel
            .iter()
            .flat_map(|&k| ctx.fq_elements().map(move |c| (k, c)))
            .map(|(k, c)| ctx.fq3_add(k, ctx.embed(c)))
            .collect();
        sums.sort();
        sums.dedup();
        assert_eq!(sums.len(), 27);
    }

    #[test]
    fn zeta_is_bijective_and_inverts() {
        let ctx = ctx3();
        assert_eq!(ctx.zeta(Fq3Element::ZERO, Fq3Element::ONE), Err(Error::ZeroTwist));
        for u in ctx.fq3_nonzero() {
            assert_eq!(ctx.zeta(u, Fq3Element::ZERO).unwrap(), Fq3Element::ZERO);
            let mut image: Vec<_> = ctx.fq3_elements().map(|t| ctx.zeta(u, t).unwrap()).collect();
            image.sort();
            image.dedup();
            assert_eq!(image.len(), 27);
            for t in ctx.fq3_elements() {
                assert_eq!(ctx.zeta_inv(u, ctx.zeta(u, t).unwrap()).unwrap(), t);
            }
        }
    }

    #[test]
    fn transversal_partitions_into_lines() {
        let ctx = ctx3();
        assert_eq!(ctx.transversal(Fq3Element::ZERO), Err(Error::ZeroModulus));
        for a in ctx.fq3_nonzero() {
            let reps = ctx.transversal(a).unwrap();
            assert_eq!(reps.len(), 9);
            assert_eq!(reps[0], Fq3Element::ZERO);
            assert_eq!(ctx.decompose(a, a).unwrap(), (Fq3Element::ZERO, FqElement::ONE));
            for &r in &reps {
                assert_eq!(ctx.decompose(a, r).unwrap(), (r, FqElement::ZERO));
            }
            for t in ctx.fq3_elements() {
                let (rep, s) = ctx.decompose(a, t).unwrap();
                assert!(reps.contains(&rep));
                assert_eq!(ctx.fq3_add(rep, ctx.fq3_scale(s, a)), t);
            }
        }
    }

    #[test]
    fn coefficient_views_roundtrip() {
        let ctx = build_tower(3, 2, None, None).unwrap();
        for x in ctx.fq3_elements() {
            assert_eq!(ctx.fq3_from_coords(ctx.fq3_coords(x)), x);
            assert_eq!(ctx.fq3_from_fp_coeffs(&ctx.fq3_fp_coeffs(x)), Some(x));
        }
        for c in ctx.fq_elements() {
            assert_eq!(ctx.fq_from_coeffs(&ctx.fq_coeffs(c)), Some(c));
            let e = ctx.embed(c);
            let coords = ctx.fq3_coords(e);
            assert!(coords[1].is_zero() && coords[2].is_zero());
        }
    }
}
