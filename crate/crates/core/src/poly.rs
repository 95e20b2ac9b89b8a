//! Sparse univariate polynomials over `GF(p^k)`.
//!
//! Terms are stored as exponent -> coefficient associations with no zero
//! coefficients; the zero polynomial is the empty association set. The
//! construction manipulates polynomials of degree ~ p*q with few terms, so
//! sparse storage is the natural representation.
//!
//! Exponents are 64-bit with checked arithmetic; operations that can grow the
//! degree honor the context's degree cap and fail with a resource error
//! rather than overflow.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::CoreError;
use crate::field::{FieldCtx, FieldElement};
use crate::Result;

/// A sparse polynomial over a fixed field context.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly {
    ctx: FieldCtx,
    terms: BTreeMap<u64, FieldElement>,
}

impl SparsePoly {
    pub fn zero(ctx: &FieldCtx) -> SparsePoly {
        SparsePoly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &FieldCtx) -> SparsePoly {
        SparsePoly::monomial(ctx, 0, ctx.one())
    }

    /// The variable itself.
    pub fn var(ctx: &FieldCtx) -> SparsePoly {
        SparsePoly::monomial(ctx, 1, ctx.one())
    }

    pub fn constant(ctx: &FieldCtx, c: FieldElement) -> SparsePoly {
        SparsePoly::monomial(ctx, 0, c)
    }

    pub fn monomial(ctx: &FieldCtx, exp: u64, coeff: FieldElement) -> SparsePoly {
        assert!(coeff.ctx() == ctx, "coefficient from a different context");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        SparsePoly { ctx: ctx.clone(), terms }
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents accumulate.
    pub fn from_terms<I>(ctx: &FieldCtx, iter: I) -> Result<SparsePoly>
    where
        I: IntoIterator<Item = (u64, FieldElement)>,
    {
        let mut out = SparsePoly::zero(ctx);
        for (e, c) in iter {
            if c.ctx() != ctx {
                return Err(CoreError::CtxMismatch);
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    /// Convenience for prime-field polynomials given as integer coefficients.
    pub fn from_int_terms(ctx: &FieldCtx, terms: &[(u64, u64)]) -> SparsePoly {
        let mut out = SparsePoly::zero(ctx);
        for &(e, c) in terms {
            out.add_term(e, ctx.from_u64(c));
        }
        out
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &FieldElement)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: u64) -> FieldElement {
        self.terms
            .get(&exp)
            .cloned()
            .unwrap_or_else(|| self.ctx.zero())
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.terms.values().next_back()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, |c| c.is_one())
    }

    fn add_term(&mut self, exp: u64, coeff: FieldElement) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            None => {
                self.terms.insert(exp, coeff);
            }
            Some(old) => {
                let sum = &old + &coeff;
                if !sum.is_zero() {
                    self.terms.insert(exp, sum);
                }
            }
        }
    }

    fn assert_same_ctx(&self, other: &SparsePoly) {
        assert!(self.ctx == other.ctx, "polynomials from different contexts");
    }

    fn check_degree(&self, deg: u64) -> Result<()> {
        if deg > self.ctx.limits().degree_cap {
            return Err(CoreError::resource(format!(
                "degree {deg} exceeds cap {}",
                self.ctx.limits().degree_cap
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &SparsePoly) -> SparsePoly {
        self.assert_same_ctx(rhs);
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> SparsePoly {
        SparsePoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e, c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &SparsePoly) -> SparsePoly {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &FieldElement) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(&self.ctx);
        }
        SparsePoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &SparsePoly) -> Result<SparsePoly> {
        self.assert_same_ctx(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Ok(SparsePoly::zero(&self.ctx));
        }
        let d = self
            .degree()
            .unwrap()
            .checked_add(rhs.degree().unwrap())
            .ok_or_else(|| CoreError::resource("degree overflow in mul"))?;
        self.check_degree(d)?;
        // Bulk products go through a flat dense buffer; small ones through
        // the term map directly.
        const DENSE_DEG_LIMIT: u64 = 1 << 13;
        if d <= DENSE_DEG_LIMIT && self.num_terms() * rhs.num_terms() >= 32 {
            return Ok(self.mul_dense(rhs, d));
        }
        let mut out = SparsePoly::zero(&self.ctx);
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    fn mul_dense(&self, rhs: &SparsePoly, out_deg: u64) -> SparsePoly {
        let k = self.ctx.k();
        let p = self.ctx.p();
        let m = self.ctx.modulus();
        let mut buf = vec![0u64; (out_deg as usize + 1) * k];
        let mut scratch = vec![0u64; 2 * k];
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                let off = (e1 + e2) as usize * k;
                crate::field::raw::mul_acc(
                    p,
                    m,
                    c1.coeffs(),
                    c2.coeffs(),
                    &mut buf[off..off + k],
                    &mut scratch,
                );
            }
        }
        SparsePoly::from_raw_dense(&self.ctx, &buf, k)
    }

    fn from_raw_dense(ctx: &FieldCtx, buf: &[u64], k: usize) -> SparsePoly {
        let terms = buf
            .chunks_exact(k)
            .enumerate()
            .filter(|(_, chunk)| !crate::field::raw::is_zero_chunk(chunk))
            .map(|(e, chunk)| (e as u64, ctx.element_unchecked(chunk.to_vec())))
            .collect();
        SparsePoly {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: u64) -> Result<SparsePoly> {
        if e == 0 {
            return Ok(SparsePoly::one(&self.ctx));
        }
        if let Some(d) = self.degree() {
            let total = d
                .checked_mul(e)
                .ok_or_else(|| CoreError::resource("degree overflow in pow"))?;
            self.check_degree(total)?;
        }
        let mut base = self.clone();
        let mut acc = SparsePoly::one(&self.ctx);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `self^{p^e}`, computed exactly via the characteristic-p identity
    /// `(sum c_i t^i)^{p^e} = sum c_i^{p^e} t^{i p^e}` (validated against
    /// honest repeated multiplication in the test suite).
    pub fn frobenius_pow(&self, e: usize) -> Result<SparsePoly> {
        let p = self.ctx.p();
        let mut scale = 1u64;
        for _ in 0..e {
            scale = scale
                .checked_mul(p)
                .ok_or_else(|| CoreError::resource("p^e overflow in frobenius_pow"))?;
        }
        if let Some(d) = self.degree() {
            let total = d
                .checked_mul(scale)
                .ok_or_else(|| CoreError::resource("degree overflow in frobenius_pow"))?;
            self.check_degree(total)?;
        }
        Ok(SparsePoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&ex, c)| (ex * scale, c.frobenius(e)))
                .collect(),
        })
    }

    /// Quotient and remainder with `deg r < deg g`.
    pub fn divmod(&self, g: &SparsePoly) -> Result<(SparsePoly, SparsePoly)> {
        self.assert_same_ctx(g);
        if g.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        let dg = g.degree().unwrap();
        let lg_inv = g.leading_coeff().unwrap().invert()?;
        let mut q = SparsePoly::zero(&self.ctx);
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let c = r.leading_coeff().unwrap() * &lg_inv;
            let shift = dr - dg;
            q.add_term(shift, c.clone());
            // r -= c * t^shift * g
            for (e, gc) in g.terms() {
                r.add_term(e + shift, (gc * &c).neg());
            }
        }
        Ok((q, r))
    }

    /// Monic greatest common divisor (Euclid). Errors when both inputs are zero.
    ///
    /// Remainder sequences densify quickly, so small-degree inputs run on a
    /// dense coefficient buffer instead of the term map.
    pub fn gcd(&self, g: &SparsePoly) -> Result<SparsePoly> {
        self.assert_same_ctx(g);
        if self.is_zero() && g.is_zero() {
            return Err(CoreError::invalid("gcd(0, 0) is undefined"));
        }
        const DENSE_LIMIT: u64 = 1 << 13;
        let max_deg = self.degree().unwrap_or(0).max(g.degree().unwrap_or(0));
        if max_deg <= DENSE_LIMIT {
            return self.gcd_dense(g);
        }
        let mut a = self.clone();
        let mut b = g.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        Ok(a.make_monic())
    }

    fn gcd_dense(&self, g: &SparsePoly) -> Result<SparsePoly> {
        use crate::field::raw;
        let k = self.ctx.k();
        let p = self.ctx.p();
        let m = self.ctx.modulus().to_vec();
        let deg_of = |v: &[u64]| -> Option<usize> {
            v.chunks_exact(k).rposition(|c| !raw::is_zero_chunk(c))
        };
        let mut r0 = self.to_raw_dense(k);
        let mut r1 = g.to_raw_dense(k);
        let mut scratch = vec![0u64; 2 * k];
        loop {
            let Some(d1) = deg_of(&r1) else { break };
            let lc = self.ctx.element_unchecked(r1[d1 * k..(d1 + 1) * k].to_vec());
            let lc_inv = lc.invert()?;
            // r0 <- r0 mod r1, in place, top coefficient down.
            while let Some(d0) = deg_of(&r0) {
                if d0 < d1 {
                    break;
                }
                let lead = self.ctx.element_unchecked(r0[d0 * k..(d0 + 1) * k].to_vec());
                let c = &lead * &lc_inv;
                let shift = d0 - d1;
                for j in 0..=d1 {
                    let chunk = &r1[j * k..(j + 1) * k];
                    if raw::is_zero_chunk(chunk) {
                        continue;
                    }
                    raw::mul_sub(
                        p,
                        &m,
                        chunk,
                        c.coeffs(),
                        &mut r0[(shift + j) * k..(shift + j + 1) * k],
                        &mut scratch,
                    );
                }
            }
            std::mem::swap(&mut r0, &mut r1);
        }
        Ok(SparsePoly::from_raw_dense(&self.ctx, &r0, k).make_monic())
    }

    fn to_raw_dense(&self, k: usize) -> Vec<u64> {
        let deg = self.degree().unwrap_or(0) as usize;
        let mut out = vec![0u64; (deg + 1) * k];
        for (e, c) in self.terms() {
            out[e as usize * k..(e as usize + 1) * k].copy_from_slice(c.coeffs());
        }
        out
    }

    pub fn make_monic(&self) -> SparsePoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.invert().expect("nonzero leading coefficient")),
        }
    }

    /// If every exponent is divisible by `p`, return the unique `g` with
    /// `g^p = self` (coefficients are adjusted by `pth_root`; over a perfect
    /// field only the exponent condition can fail). Otherwise `None`.
    pub fn pth_power_root(&self) -> Option<SparsePoly> {
        let p = self.ctx.p();
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms() {
            if e % p != 0 {
                return None;
            }
            terms.insert(e / p, c.pth_root());
        }
        Some(SparsePoly {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    /// Substitution `f(g(t))`, computed exactly. `substitute(f, t) = f`.
    pub fn substitute(&self, g: &SparsePoly) -> Result<SparsePoly> {
        self.assert_same_ctx(g);
        if let (Some(df), Some(dg)) = (self.degree(), g.degree()) {
            let total = df
                .checked_mul(dg)
                .ok_or_else(|| CoreError::resource("degree overflow in substitute"))?;
            self.check_degree(total)?;
        }
        // Walk exponents in ascending order, raising g incrementally.
        let mut out = SparsePoly::zero(&self.ctx);
        let mut g_pow = SparsePoly::one(&self.ctx);
        let mut current_e = 0u64;
        for (e, c) in self.terms() {
            g_pow = g_pow.mul(&g.pow(e - current_e)?)?;
            current_e = e;
            out = out.add(&g_pow.scale(c));
        }
        Ok(out)
    }

    /// Multiply every exponent by `m` (the substitution `t -> t^m`).
    pub fn scale_exponents(&self, m: u64) -> Result<SparsePoly> {
        if m == 0 {
            return Err(CoreError::invalid("exponent scale must be >= 1"));
        }
        if let Some(d) = self.degree() {
            let total = d
                .checked_mul(m)
                .ok_or_else(|| CoreError::resource("degree overflow in scale_exponents"))?;
            self.check_degree(total)?;
        }
        Ok(SparsePoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(&e, c)| (e * m, c.clone())).collect(),
        })
    }

    /// Reinterpret `self`, all of whose exponents are divisible by `m`, as a
    /// polynomial in `t^m` (exponents divided by `m`, coefficients unchanged).
    pub fn compress_exponents(&self, m: u64) -> Result<SparsePoly> {
        if m == 0 {
            return Err(CoreError::invalid("exponent divisor must be >= 1"));
        }
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms() {
            if e % m != 0 {
                return Err(CoreError::invalid(format!(
                    "exponent {e} not divisible by {m} in compress_exponents"
                )));
            }
            terms.insert(e / m, c.clone());
        }
        Ok(SparsePoly {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    /// Embed a prime-field polynomial into an extension of the same `p`.
    pub fn lift_to(&self, target: &FieldCtx) -> Result<SparsePoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms() {
            terms.insert(e, c.embed_into(target)?);
        }
        Ok(SparsePoly {
            ctx: target.clone(),
            terms,
        })
    }

    /// Evaluate at a field element.
    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.ctx.zero();
        for (e, c) in self.terms() {
            acc = &acc + &(c * &x.pow(e as u128));
        }
        acc
    }
}

impl PartialOrd for SparsePoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical ordering for deterministic outputs: lexicographic on the sorted
/// (exponent, coefficient) term list.
impl Ord for SparsePoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a: Vec<_> = self.terms.iter().collect();
        let b: Vec<_> = other.terms.iter().collect();
        a.cmp(&b)
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl SparsePoly {
    /// Render with an explicit variable name (`Display` uses `t`).
    pub fn to_string_var(&self, var: char) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            match (*e, c.is_one()) {
                (0, _) => out.push_str(&c.to_string()),
                (1, true) => out.push(var),
                (1, false) => out.push_str(&format!("{c}*{var}")),
                (_, true) => out.push_str(&format!("{var}^{e}")),
                (_, false) => out.push_str(&format!("{c}*{var}^{e}")),
            }
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var('t'))
    }
}

impl Serialize for SparsePoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    fn f3() -> FieldCtx {
        FieldCtx::prime_field(3).unwrap()
    }

    fn poly(ctx: &FieldCtx, terms: &[(u64, u64)]) -> SparsePoly {
        SparsePoly::from_int_terms(ctx, terms)
    }

    #[test]
    fn mul_t_plus_1_times_t_minus_1() {
        let ctx = f3();
        let a = poly(&ctx, &[(1, 1), (0, 1)]); // t + 1
        let b = poly(&ctx, &[(1, 1), (0, 2)]); // t - 1
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod, poly(&ctx, &[(2, 1), (0, 2)])); // t^2 - 1
    }

    #[test]
    fn divmod_against_long_division_oracle() {
        // (t^4 - 1) / (t + 1) over GF(3): quotient t^3 - t^2 + t - 1, rem 0.
        let ctx = f3();
        let a = poly(&ctx, &[(4, 1), (0, 2)]);
        let b = poly(&ctx, &[(1, 1), (0, 1)]);
        let (q, r) = a.divmod(&b).unwrap();
        assert_eq!(q, poly(&ctx, &[(3, 1), (2, 2), (1, 1), (0, 2)]));
        assert!(r.is_zero());
        // Oracle identity: a = q*b + r reconstructs exactly.
        assert_eq!(q.mul(&b).unwrap().add(&r), a);
    }

    #[test]
    fn gcd_against_euclid_oracle() {
        let ctx = f3();
        let a = poly(&ctx, &[(4, 1), (0, 2)]); // t^4 - 1
        let b = poly(&ctx, &[(1, 1), (0, 1)]); // t + 1
        assert_eq!(a.gcd(&b).unwrap(), b);
        assert!(matches!(
            SparsePoly::zero(&ctx).gcd(&SparsePoly::zero(&ctx)),
            Err(CoreError::InvalidInput(_))
        ));
    }

    #[test]
    fn division_by_zero_poly() {
        let ctx = f3();
        let a = poly(&ctx, &[(1, 1)]);
        assert!(matches!(
            a.divmod(&SparsePoly::zero(&ctx)),
            Err(CoreError::DivisionByZero)
        ));
    }

    #[test]
    fn pth_power_root_cases() {
        let ctx = f3();
        // f = 0 -> root 0
        assert!(SparsePoly::zero(&ctx)
            .pth_power_root()
            .unwrap()
            .is_zero());
        // t^9 + 1 -> t^3 + 1; oracle: (t^3+1)^3 expands back to t^9 + 1.
        let f = poly(&ctx, &[(9, 1), (0, 1)]);
        let root = f.pth_power_root().unwrap();
        assert_eq!(root, poly(&ctx, &[(3, 1), (0, 1)]));
        assert_eq!(root.pow(3).unwrap(), f);
        // t + t^5 (the n = 1 curve coefficient) is not a p-th power.
        let a1 = poly(&ctx, &[(1, 1), (5, 1)]);
        assert!(a1.pth_power_root().is_none());
    }

    #[test]
    fn pth_power_root_adjusts_coefficients_in_extensions() {
        // Over GF(9): (c t)^3 = c^3 t^3, so the root at exponent 1 is
        // pth_root(c^3) = c.
        let f9 = FieldCtx::new(3, 2).unwrap();
        let w = f9.generator_coeff();
        let f = SparsePoly::monomial(&f9, 1, w.clone());
        let cube = f.pow(3).unwrap();
        assert_eq!(cube.pth_power_root().unwrap(), f);
    }

    #[test]
    fn substitution_examples() {
        let ctx = f3();
        // f = u^2 + u at g = t^3 -> t^6 + t^3
        let fpoly = poly(&ctx, &[(2, 1), (1, 1)]);
        let g = poly(&ctx, &[(3, 1)]);
        assert_eq!(
            fpoly.substitute(&g).unwrap(),
            poly(&ctx, &[(6, 1), (3, 1)])
        );
        // t*f(g) with f = 1 + u, g = t^4 -> t + t^5
        let f1 = poly(&ctx, &[(0, 1), (1, 1)]);
        let comp = f1.substitute(&poly(&ctx, &[(4, 1)])).unwrap();
        let result = comp.mul(&SparsePoly::var(&ctx)).unwrap();
        assert_eq!(result, poly(&ctx, &[(1, 1), (5, 1)]));
        // Identity substitution.
        let f2 = poly(&ctx, &[(7, 2), (3, 1), (0, 1)]);
        assert_eq!(f2.substitute(&SparsePoly::var(&ctx)).unwrap(), f2);
    }

    #[test]
    fn char_p_binomial_identity() {
        // (t^{q+1} - 1)^{p-1} = sum_{i<p} t^{(q+1)i} for p in {3,5,7}, n in {1,2,3}.
        for p in [3u64, 5, 7] {
            let ctx = FieldCtx::prime_field(p).unwrap();
            for n in 1u32..=3 {
                let q = p.pow(n);
                let base = poly(&ctx, &[(q + 1, 1), (0, p - 1)]); // t^{q+1} - 1
                let lhs = base.pow(p - 1).unwrap();
                let rhs_terms: Vec<(u64, u64)> =
                    (0..p).map(|i| ((q + 1) * i, 1)).collect();
                let rhs = poly(&ctx, &rhs_terms);
                assert_eq!(lhs, rhs, "p={p}, n={n}");
            }
        }
    }

    #[test]
    fn frobenius_pow_matches_honest_pow() {
        for p in [3u64, 5] {
            let ctx = FieldCtx::prime_field(p).unwrap();
            let f = poly(&ctx, &[(0, 2), (1, 1), (4, p - 1), (7, 2)]);
            assert_eq!(f.frobenius_pow(1).unwrap(), f.pow(p).unwrap());
        }
        // Extension coefficients are raised along with the exponents.
        let f9 = FieldCtx::new(3, 2).unwrap();
        let w = f9.generator_coeff();
        let g = SparsePoly::monomial(&f9, 2, w).add(&SparsePoly::one(&f9));
        assert_eq!(g.frobenius_pow(1).unwrap(), g.pow(3).unwrap());
        assert_eq!(g.frobenius_pow(2).unwrap(), g.pow(9).unwrap());
    }

    #[test]
    fn degree_cap_is_enforced() {
        let ctx = f3();
        let big = poly(&ctx, &[(1 << 30, 1)]);
        // (t^2^30)^2^11 would exceed the 2^40 cap.
        assert!(matches!(
            big.pow(1 << 11),
            Err(CoreError::ResourceLimit(_))
        ));
    }

    #[test]
    fn serialization_is_sorted_pairs() {
        let ctx = f3();
        let f = poly(&ctx, &[(5, 2), (0, 1)]);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, "[[0,[1]],[5,[2]]]");
    }
}
