//! Arithmetic in `GF(p)` and `GF(p^k)`: the field kernel.
//!
//! A [`FieldCtx`] fixes the odd prime `p`, the extension degree `k` and a
//! monic irreducible modulus of degree `k` over `GF(p)`. Elements are
//! little-endian coefficient vectors in the modulus root. The canonical
//! modulus is the lexicographically smallest monic irreducible (coefficients
//! compared low degree first), so outputs are reproducible across runs.
//!
//! Subfields are never constructed separately: `F_{p^r}` inside `GF(p^k)` is
//! always the fixed set of the `r`-fold Frobenius.

use std::fmt;
use std::sync::Arc;

use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::CoreError;
use crate::limits::Limits;
use crate::Result;

/// The four checked binary field operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug)]
struct CtxInner {
    p: u64,
    k: usize,
    /// Monic irreducible of degree `k`, dense little-endian, length `k + 1`.
    modulus: Vec<u64>,
    limits: Limits,
}

/// Shared description of `GF(p^k)`. Cheap to clone; immutable after
/// construction, safe to share between threads.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    inner: Arc<CtxInner>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.k == other.inner.k
                && self.inner.modulus == other.inner.modulus)
    }
}
impl Eq for FieldCtx {}

impl FieldCtx {
    /// `GF(p^k)` with the canonical (lexicographically smallest) modulus.
    pub fn new(p: u64, k: usize) -> Result<FieldCtx> {
        FieldCtx::with_limits(p, k, Limits::default())
    }

    /// `GF(p)` itself.
    pub fn prime_field(p: u64) -> Result<FieldCtx> {
        FieldCtx::new(p, 1)
    }

    pub fn with_limits(p: u64, k: usize, limits: Limits) -> Result<FieldCtx> {
        validate_p(p)?;
        if k == 0 {
            return Err(CoreError::invalid("extension degree k must be >= 1"));
        }
        if k > limits.max_extension_degree {
            return Err(CoreError::resource(format!(
                "extension degree {k} exceeds cap {}",
                limits.max_extension_degree
            )));
        }
        let modulus = canonical_irreducible(p, k);
        Ok(FieldCtx {
            inner: Arc::new(CtxInner { p, k, modulus, limits }),
        })
    }

    /// Build a context from an explicit modulus (validated monic irreducible).
    pub fn with_modulus(p: u64, modulus: Vec<u64>, limits: Limits) -> Result<FieldCtx> {
        validate_p(p)?;
        if modulus.len() < 2 {
            return Err(CoreError::invalid("modulus must have degree >= 1"));
        }
        let k = modulus.len() - 1;
        if k > limits.max_extension_degree {
            return Err(CoreError::resource(format!(
                "extension degree {k} exceeds cap {}",
                limits.max_extension_degree
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(CoreError::invalid("modulus coefficients must be reduced mod p"));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(CoreError::invalid("modulus must be monic"));
        }
        if !is_irreducible(p, &modulus) {
            return Err(CoreError::invalid("modulus is not irreducible over GF(p)"));
        }
        Ok(FieldCtx {
            inner: Arc::new(CtxInner { p, k, modulus, limits }),
        })
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn k(&self) -> usize {
        self.inner.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn limits(&self) -> &Limits {
        &self.inner.limits
    }

    /// Field size `p^k` (errors if it does not fit in u64).
    pub fn order(&self) -> Result<u64> {
        checked_pow_u64(self.inner.p, self.inner.k as u32)
            .ok_or_else(|| CoreError::resource("field order overflows u64"))
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            ctx: self.clone(),
            coeffs: vec![0; self.inner.k],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    /// The constant `c mod p` embedded in the field.
    pub fn from_u64(&self, c: u64) -> FieldElement {
        let mut coeffs = vec![0; self.inner.k];
        coeffs[0] = c % self.inner.p;
        FieldElement { ctx: self.clone(), coeffs }
    }

    /// Element from an explicit little-endian coefficient vector.
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.inner.k {
            return Err(CoreError::invalid(format!(
                "coefficient vector length {} != extension degree {}",
                coeffs.len(),
                self.inner.k
            )));
        }
        if coeffs.iter().any(|&c| c >= self.inner.p) {
            return Err(CoreError::invalid("coefficients must be reduced mod p"));
        }
        Ok(FieldElement {
            ctx: self.clone(),
            coeffs: coeffs.to_vec(),
        })
    }

    /// The image of the modulus root (only meaningful for `k >= 2`).
    pub fn generator_coeff(&self) -> FieldElement {
        let mut coeffs = vec![0; self.inner.k];
        if self.inner.k >= 2 {
            coeffs[1] = 1;
        } else {
            // k = 1: the root of the degree-1 modulus x + c is -c.
            coeffs[0] = (self.inner.p - self.inner.modulus[0]) % self.inner.p;
        }
        FieldElement { ctx: self.clone(), coeffs }
    }

    /// Index of an element under the canonical ordering (lexicographic on the
    /// coefficient sequence, low degree compared first).
    pub fn element_index(&self, a: &FieldElement) -> u64 {
        debug_assert_eq!(self, &a.ctx);
        let mut idx = 0u64;
        for &c in &a.coeffs {
            idx = idx * self.inner.p + c;
        }
        idx
    }

    /// Inverse of [`FieldCtx::element_index`].
    pub fn element_from_index(&self, mut idx: u64) -> FieldElement {
        let k = self.inner.k;
        let mut coeffs = vec![0u64; k];
        for j in (0..k).rev() {
            coeffs[j] = idx % self.inner.p;
            idx /= self.inner.p;
        }
        FieldElement { ctx: self.clone(), coeffs }
    }

    /// All elements in canonical order. Guarded by the search budget.
    pub fn elements(&self) -> Result<Vec<FieldElement>> {
        let order = self.order()?;
        if order > self.inner.limits.search_budget {
            return Err(CoreError::resource(format!(
                "enumerating {order} field elements exceeds budget"
            )));
        }
        Ok((0..order).map(|i| self.element_from_index(i)).collect())
    }

    /// All elements of the subfield `F_{p^r}` (the Frobenius-fixed set),
    /// in canonical order. Requires `r | k`.
    pub fn enumerate_subfield(&self, r: usize) -> Result<Vec<FieldElement>> {
        if r == 0 || self.inner.k % r != 0 {
            return Err(CoreError::invalid(format!(
                "subfield degree {r} does not divide extension degree {}",
                self.inner.k
            )));
        }
        let out: Vec<FieldElement> = self
            .elements()?
            .into_iter()
            .filter(|a| a.in_subfield(r))
            .collect();
        debug_assert_eq!(out.len() as u64, checked_pow_u64(self.inner.p, r as u32).unwrap());
        Ok(out)
    }

    /// Construct from already-reduced coefficients (internal fast paths).
    pub(crate) fn element_unchecked(&self, coeffs: Vec<u64>) -> FieldElement {
        debug_assert_eq!(coeffs.len(), self.inner.k);
        debug_assert!(coeffs.iter().all(|&c| c < self.inner.p));
        FieldElement {
            ctx: self.clone(),
            coeffs,
        }
    }

    /// Checked entry point for the four binary operations; reports
    /// context mismatch and division by zero as errors.
    pub fn arith(&self, op: FieldOp, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        if &a.ctx != self || &b.ctx != self {
            return Err(CoreError::CtxMismatch);
        }
        match op {
            FieldOp::Add => Ok(a + b),
            FieldOp::Sub => Ok(a - b),
            FieldOp::Mul => Ok(a * b),
            FieldOp::Div => a.div(b),
        }
    }
}

impl Serialize for FieldCtx {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FieldCtx", 3)?;
        st.serialize_field("p", &self.inner.p)?;
        st.serialize_field("k", &self.inner.k)?;
        st.serialize_field("modulus", &self.inner.modulus)?;
        st.end()
    }
}

/// An element of `GF(p^k)`: a little-endian coefficient vector in the modulus
/// root, every entry reduced mod `p`. A plain value; clone freely.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    ctx: FieldCtx,
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn assert_same_ctx(&self, other: &FieldElement) {
        assert!(
            self.ctx == other.ctx,
            "field elements from different contexts"
        );
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.ctx.p();
        FieldElement {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|&c| (p - c) % p).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// coefficient polynomial and the modulus.
    pub fn invert(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        let p = self.ctx.p();
        let inv = poly_mod_inverse(p, &self.coeffs, self.ctx.modulus())
            .expect("nonzero element of a field is invertible");
        Ok(FieldElement {
            ctx: self.ctx.clone(),
            coeffs: inv,
        })
    }

    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.assert_same_ctx(rhs);
        Ok(self * &rhs.invert()?)
    }

    /// `self^e` by square-and-multiply.
    pub fn pow(&self, mut e: u128) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^(p^e)`: the `e`-fold Frobenius. `frobenius(a, k) = a`.
    pub fn frobenius(&self, e: usize) -> FieldElement {
        let k = self.ctx.k();
        let mut a = self.clone();
        for _ in 0..(e % k) {
            a = a.pow(self.ctx.p() as u128);
        }
        a
    }

    /// The unique `b` with `b^p = self` (finite fields are perfect):
    /// `frobenius(self, k - 1)`.
    pub fn pth_root(&self) -> FieldElement {
        self.frobenius(self.ctx.k() - 1)
    }

    /// True iff `self` lies in the subfield `F_{p^gcd(r,k)}`, i.e. is fixed
    /// by the `r`-fold Frobenius. Requires `1 <= r <= k`.
    pub fn in_subfield(&self, r: usize) -> bool {
        assert!(r >= 1 && r <= self.ctx.k(), "subfield degree out of range");
        // frobenius reduces e mod k, so r = k tests frobenius^k = identity.
        if r == self.ctx.k() {
            return true;
        }
        &self.frobenius(r) == self
    }

    /// Embed a prime-field element into a larger context over the same `p`.
    pub fn embed_into(&self, target: &FieldCtx) -> Result<FieldElement> {
        if self.ctx.k() != 1 {
            return Err(CoreError::invalid(
                "embedding is only defined from the prime field",
            ));
        }
        if self.ctx.p() != target.p() {
            return Err(CoreError::CtxMismatch);
        }
        Ok(target.from_u64(self.coeffs[0]))
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical ordering: lexicographic on the coefficient sequence, low degree
/// compared first. Only meaningful within one context.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ctx.k() == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            write!(
                f,
                "[{}]",
                self.coeffs
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        }
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl std::ops::$trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.assert_same_ctx(rhs);
                let p = self.ctx.p();
                FieldElement {
                    ctx: self.ctx.clone(),
                    coeffs: $imp(p, &self.coeffs, &rhs.coeffs, self.ctx.modulus()),
                }
            }
        }
    };
}

fn add_impl(p: u64, a: &[u64], b: &[u64], _m: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| (x + y) % p).collect()
}

fn sub_impl(p: u64, a: &[u64], b: &[u64], _m: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| (x + p - y) % p).collect()
}

fn mul_impl(p: u64, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    let k = a.len();
    let mut acc = vec![0u64; 2 * k - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y == 0 {
                continue;
            }
            acc[i + j] = (acc[i + j] + x * y) % p;
        }
    }
    poly_rem_dense(p, &acc, m)
}

impl_binop!(Add, add, add_impl);
impl_binop!(Sub, sub, sub_impl);
impl_binop!(Mul, mul, mul_impl);

// ---------------------------------------------------------------------------
// Raw allocation-free kernels over flat coefficient slices, for the dense
// polynomial fast paths. A "chunk" is one field element: k u64 words.
// ---------------------------------------------------------------------------

pub(crate) mod raw {
    /// `buf` (length >= 2k-1) reduced in place modulo the monic `m`.
    pub(crate) fn rem_in_place(p: u64, m: &[u64], buf: &mut [u64]) {
        let k = m.len() - 1;
        for d in (k..buf.len()).rev() {
            let lead = buf[d];
            if lead == 0 {
                continue;
            }
            buf[d] = 0;
            let shift = d - k;
            for (j, &mc) in m.iter().enumerate().take(k) {
                if mc != 0 {
                    buf[shift + j] = (buf[shift + j] + p - (lead * mc) % p) % p;
                }
            }
        }
    }

    /// `scratch` (length >= 2k-1) = a * b mod (p, m).
    pub(crate) fn mul_into<'s>(
        p: u64,
        m: &[u64],
        a: &[u64],
        b: &[u64],
        scratch: &'s mut [u64],
    ) -> &'s [u64] {
        let k = a.len();
        let width = 2 * k - 1;
        scratch[..width].fill(0);
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                scratch[i + j] = (scratch[i + j] + x * y) % p;
            }
        }
        rem_in_place(p, m, &mut scratch[..width]);
        &scratch[..k]
    }

    /// `acc` (one chunk) += a * b.
    pub(crate) fn mul_acc(p: u64, m: &[u64], a: &[u64], b: &[u64], acc: &mut [u64], scratch: &mut [u64]) {
        let k = a.len();
        let prod = mul_into(p, m, a, b, scratch);
        for i in 0..k {
            acc[i] = (acc[i] + prod[i]) % p;
        }
    }

    /// `target` (one chunk) -= a * b.
    pub(crate) fn mul_sub(p: u64, m: &[u64], a: &[u64], b: &[u64], target: &mut [u64], scratch: &mut [u64]) {
        let k = a.len();
        let prod = mul_into(p, m, a, b, scratch);
        for i in 0..k {
            target[i] = (target[i] + p - prod[i]) % p;
        }
    }

    pub(crate) fn is_zero_chunk(a: &[u64]) -> bool {
        a.iter().all(|&c| c == 0)
    }
}

// ---------------------------------------------------------------------------
// Dense polynomial arithmetic over GF(p), used for the modulus machinery and
// for element multiplication/inversion. Little-endian coefficient vectors.
// ---------------------------------------------------------------------------

fn validate_p(p: u64) -> Result<()> {
    if p <= 2 {
        return Err(CoreError::invalid("p must be an odd prime > 2"));
    }
    if !is_prime_u64(p) {
        return Err(CoreError::invalid(format!("{p} is not prime")));
    }
    Ok(())
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for d in [2u64, 3, 5, 7] {
        if n == d {
            return true;
        }
        if n % d == 0 {
            return false;
        }
    }
    let mut d = 11u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn checked_pow_u64(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

fn dense_deg(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn poly_mul_dense(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y == 0 {
                continue;
            }
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of `a` modulo monic `m`, dense, little-endian.
fn poly_rem_dense(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    let k = m.len() - 1;
    let mut r = a.to_vec();
    loop {
        let d = match dense_deg(&r) {
            Some(d) if d >= k => d,
            _ => break,
        };
        let lead = r[d];
        r[d] = 0;
        let shift = d - k;
        for (j, &mc) in m.iter().enumerate().take(k) {
            if mc != 0 {
                r[shift + j] = (r[shift + j] + p - (lead * mc) % p) % p;
            }
        }
    }
    r.resize(k, 0);
    r
}

/// Extended Euclid: inverse of `a` modulo the monic irreducible `m`.
fn poly_mod_inverse(p: u64, a: &[u64], m: &[u64]) -> Option<Vec<u64>> {
    let k = m.len() - 1;
    // Standard extended Euclid on (m, a).
    let mut r0: Vec<u64> = m.to_vec();
    let mut r1: Vec<u64> = {
        let mut v = a.to_vec();
        v.resize(k.max(v.len()), 0);
        v
    };
    let mut s0: Vec<u64> = vec![0];
    let mut s1: Vec<u64> = vec![1];
    while dense_deg(&r1).is_some() {
        let (q, r) = poly_divmod_dense(p, &r0, &r1)?;
        let qs1 = poly_mul_dense(p, &q, &s1);
        let s2 = poly_sub_dense(p, &s0, &qs1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    // r0 is now gcd(m, a); for irreducible m and a != 0 it is a nonzero constant.
    let d = dense_deg(&r0)?;
    if d != 0 {
        return None;
    }
    let c_inv = mod_inverse_u64(r0[0], p)?;
    let mut inv: Vec<u64> = s0.iter().map(|&c| (c * c_inv) % p).collect();
    let reduced = poly_rem_dense(p, &inv, m);
    inv = reduced;
    Some(inv)
}

fn poly_sub_dense(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + p - y) % p;
    }
    out
}

/// Dense division with remainder; divisor need not be monic. Returns None
/// only when the divisor is zero.
fn poly_divmod_dense(p: u64, a: &[u64], b: &[u64]) -> Option<(Vec<u64>, Vec<u64>)> {
    let db = dense_deg(b)?;
    let lb_inv = mod_inverse_u64(b[db], p)?;
    let mut r = a.to_vec();
    let da = match dense_deg(&r) {
        Some(d) => d,
        None => return Some((vec![], vec![])),
    };
    if da < db {
        return Some((vec![], r));
    }
    let mut q = vec![0u64; da - db + 1];
    for d in (db..=da).rev() {
        let lead = match dense_deg(&r) {
            Some(dd) if dd == d => r[d],
            _ => continue,
        };
        let c = (lead * lb_inv) % p;
        q[d - db] = c;
        for (j, &bc) in b.iter().enumerate().take(db + 1) {
            if bc != 0 {
                r[d - db + j] = (r[d - db + j] + p - (c * bc) % p) % p;
            }
        }
    }
    Some((q, r))
}

fn mod_inverse_u64(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    let (g, x, _) = extended_gcd(a as i128 % p as i128, p as i128);
    if g != 1 {
        return None;
    }
    Some(((x % p as i128 + p as i128) % p as i128) as u64)
}

fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Rabin's irreducibility criterion: `f` of degree `k` is irreducible over
/// `GF(p)` iff `x^{p^k} = x (mod f)` and `gcd(x^{p^{k/l}} - x, f) = 1` for
/// every prime `l | k`.
fn is_irreducible(p: u64, f: &[u64]) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    // Iterated Frobenius of x modulo f: powers[j] = x^{p^j} mod f.
    let k_usize = k;
    let x: Vec<u64> = vec![0, 1];
    let mut powers: Vec<Vec<u64>> = Vec::with_capacity(k_usize + 1);
    powers.push(poly_rem_dense(p, &x, f));
    for _ in 0..k_usize {
        let prev = powers.last().unwrap();
        powers.push(poly_powmod_dense(p, prev, p, f));
    }
    let x_red = poly_rem_dense(p, &x, f);
    if powers[k_usize] != x_red {
        return false;
    }
    for l in prime_factors(k_usize as u64) {
        let j = k_usize / l as usize;
        let diff = poly_sub_dense(p, &powers[j], &x_red);
        let g = poly_gcd_dense(p, &diff, f);
        if dense_deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

fn poly_powmod_dense(p: u64, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut b = base.to_vec();
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem_dense(p, &poly_mul_dense(p, &acc, &b), m);
        }
        e >>= 1;
        if e > 0 {
            b = poly_rem_dense(p, &poly_mul_dense(p, &b, &b), m);
        }
    }
    acc
}

fn poly_gcd_dense(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    while dense_deg(&r1).is_some() {
        let (_, r) = poly_divmod_dense(p, &r0, &r1).unwrap();
        r0 = r1;
        r1 = r;
    }
    r0
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The lexicographically smallest monic irreducible of degree `k` over
/// `GF(p)`, coefficients compared low degree first.
fn canonical_irreducible(p: u64, k: usize) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1]; // x itself: degree-1 polynomials are irreducible
    }
    // Candidates ordered by the (c_0, ..., c_{k-1}) tuple, c_0 most
    // significant: decode the counter with c_{k-1} as its lowest base-p digit.
    let total = p.pow(k as u32);
    for m in 0..total {
        let mut f = vec![0u64; k + 1];
        f[k] = 1;
        let mut rest = m;
        for j in (0..k).rev() {
            f[j] = rest % p;
            rest /= p;
        }
        if is_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, k: usize) -> FieldCtx {
        FieldCtx::new(p, k).unwrap()
    }

    #[test]
    fn prime_field_arithmetic_mod_3() {
        let f3 = gf(3, 1);
        let two = f3.from_u64(2);
        assert_eq!(&two + &two, f3.from_u64(1));
        assert_eq!(&two * &two, f3.from_u64(1));
    }

    #[test]
    fn gf9_inverse_of_generator() {
        let f9 = gf(3, 2);
        let w = f9.generator_coeff();
        let w_inv = w.invert().unwrap();
        assert!((&w * &w_inv).is_one());
    }

    #[test]
    fn canonical_modulus_gf9_is_x2_plus_1() {
        let f9 = gf(3, 2);
        assert_eq!(f9.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let f9 = gf(3, 2);
        let a = f9.one();
        assert!(matches!(
            a.div(&f9.zero()),
            Err(CoreError::DivisionByZero)
        ));
    }

    #[test]
    fn mismatched_ctx_is_an_error() {
        let f3 = gf(3, 1);
        let f5 = gf(5, 1);
        let err = f3.arith(FieldOp::Add, &f3.one(), &f5.one());
        assert!(matches!(err, Err(CoreError::CtxMismatch)));
    }

    #[test]
    fn frobenius_fixes_prime_field_and_has_order_k() {
        let f3 = gf(3, 1);
        for c in 0..3 {
            let a = f3.from_u64(c);
            assert_eq!(a.frobenius(1), a);
        }
        let f9 = gf(3, 2);
        for i in 0..9 {
            let a = f9.element_from_index(i);
            assert_eq!(a.frobenius(2), a);
        }
    }

    #[test]
    fn frobenius_of_generator_matches_repeated_squaring_oracle() {
        // Oracle: w^3 by explicit square-and-multiply, then (w^3)^3 = w^9 = w.
        let f9 = gf(3, 2);
        let w = f9.generator_coeff();
        let w_cubed = (&(&w * &w) * &w).clone();
        assert_eq!(w.frobenius(1), w_cubed);
        assert_eq!(w_cubed.frobenius(1), w);
    }

    #[test]
    fn pth_root_inverts_pth_power_exhaustively_gf9() {
        let f9 = gf(3, 2);
        for i in 0..9 {
            let a = f9.element_from_index(i);
            assert_eq!(a.pth_root().pow(3), a);
            assert_eq!(a.pow(3).pth_root(), a);
        }
    }

    #[test]
    fn pth_root_of_zero_and_one() {
        let f9 = gf(3, 2);
        assert!(f9.zero().pth_root().is_zero());
        assert!(f9.one().pth_root().is_one());
    }

    #[test]
    fn subfield_membership_counts_gf81() {
        // Exactly p^gcd(r,k) elements are fixed by frobenius^r, (p,k) = (3,4).
        let f81 = gf(3, 4);
        for r in 1..=4usize {
            let g = num_integer::gcd(r, 4);
            let count = (0..81)
                .filter(|&i| f81.element_from_index(i).in_subfield(r))
                .count() as u64;
            assert_eq!(count, 3u64.pow(g as u32), "r = {r}");
        }
    }

    #[test]
    fn multiplicative_generator_of_gf81_not_in_quadratic_subfield() {
        // An element of order 80 cannot satisfy a^9 = a (order would divide 8).
        let f81 = gf(3, 4);
        let gen = (1..81)
            .map(|i| f81.element_from_index(i))
            .find(|a| {
                let mut seen = 1u64;
                let mut x = a.clone();
                while !x.is_one() {
                    x = &x * a;
                    seen += 1;
                }
                seen == 80
            })
            .expect("GF(81)^x is cyclic of order 80");
        assert!(!gen.in_subfield(2));
        assert!(gen.in_subfield(4));
    }

    #[test]
    fn enumerate_subfield_sizes_and_order() {
        let f9 = gf(3, 2);
        let prime = f9.enumerate_subfield(1).unwrap();
        assert_eq!(prime.len(), 3);
        assert!(prime.windows(2).all(|w| w[0] < w[1]));
        let all = f9.enumerate_subfield(2).unwrap();
        assert_eq!(all.len(), 9);

        let f81 = gf(3, 4);
        let quad = f81.enumerate_subfield(2).unwrap();
        assert_eq!(quad.len(), 9);
        for a in &quad {
            assert_eq!(a.pow(9), *a);
        }
        assert!(matches!(
            f81.enumerate_subfield(3),
            Err(CoreError::InvalidInput(_))
        ));
    }

    #[test]
    fn in_subfield_reduces_to_gcd() {
        let f81 = gf(3, 4);
        for i in 0..81 {
            let a = f81.element_from_index(i);
            for r in 1..=4usize {
                let g = num_integer::gcd(r, 4);
                assert_eq!(a.in_subfield(r), a.in_subfield(g));
            }
        }
    }

    #[test]
    fn rejects_p_not_odd_prime() {
        assert!(FieldCtx::new(2, 1).is_err());
        assert!(FieldCtx::new(4, 1).is_err());
        assert!(FieldCtx::new(9, 2).is_err());
    }

    #[test]
    fn explicit_modulus_validation() {
        // x^2 + 1 is irreducible over GF(3); x^2 + 2 = (x+1)(x+2) is not.
        assert!(FieldCtx::with_modulus(3, vec![1, 0, 1], Limits::default()).is_ok());
        assert!(FieldCtx::with_modulus(3, vec![2, 0, 1], Limits::default()).is_err());
    }

    #[test]
    fn element_index_roundtrip_and_order() {
        let f9 = gf(3, 2);
        for i in 0..9 {
            let a = f9.element_from_index(i);
            assert_eq!(f9.element_index(&a), i);
        }
        // Canonical order compares the constant coefficient first: zero,
        // then w (coeffs (0,1)), then 2w, then the constant 1 at index 3.
        assert!(f9.element_from_index(0).is_zero());
        assert_eq!(f9.element_from_index(1), f9.generator_coeff());
        assert!(f9.element_from_index(3).is_one());
    }
}
