//! Genus verification for `x - a*x^p = y^p`, `a` not a p-th power in `K`.
//!
//! Two independent claims are checked:
//!
//! * **Relative genus** `(p-1)(p-2)/2`, computed from the defining property
//!   of `g_K`: `l(D) = deg D + 1 - g_K` for divisors of large degree. We use
//!   `D = m * div_inf(x)` of degree `pm`. Since `K(C)/K(x)` is purely
//!   inseparable of degree `p`, a function `f = sum_j c_j(x) y^j` lies in
//!   `L(D)` iff `f^p = sum_j c_j(x)^p (x - a x^p)^j` is a polynomial in `x`
//!   of degree at most `pm`; when `1, a, ..., a^{p-1}` are independent over
//!   `K^p` the top-degree terms `lc(c_j)^p (-a)^j x^{p(deg c_j + j)}` cannot
//!   cancel, so the condition is exactly `deg c_j <= m - j`. That dimension
//!   formula is the fast path; it is validated by an independent oracle that
//!   solves the coefficient conditions by exact semilinear linear algebra
//!   over `K^p = F_p(s)` (`s` standing for `t^p`).
//!
//! * **Absolute genus zero**, witnessed by the explicit parametrization over
//!   `F_p(s)` with `t = s^p`: `x(z) = z^p`, `y(z) = z - a_hat(s) z^p` where
//!   `a_hat(s)^p = a(s^p)`. The identity `x - a(s^p) x^p - y^p = 0` is
//!   expanded symbolically, and every constructed point is pulled back to its
//!   parameter `z = y + a_hat * x` with `z^p = x`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::curve::{AffinePoint, Curve};
use crate::error::CoreError;
use crate::ratfn::RatFn;
use crate::Result;

/// True iff `a` is not a p-th power in `K` — equivalently `1, a, ..., a^{p-1}`
/// are linearly independent over `K^p`, the hypothesis the dimension formula
/// needs.
pub fn not_pth_power_check(a: &RatFn) -> bool {
    !a.is_zero() && a.pth_power_root().is_none()
}

/// One Riemann-Roch dimension sample at `D = m * div_inf(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RRReport {
    pub m: u64,
    /// `l(m * div_inf(x))`.
    pub ell: u64,
    /// `deg D = p * m`.
    pub deg: u64,
    /// `deg D + 1 - ell`; equals the relative genus once `deg D > 2g - 2`.
    pub genus_estimate: i64,
}

/// Fast-path dimension: `ell = sum_{j=0}^{p-1} max(0, m - j + 1)`.
pub fn rr_dimension_fast(curve: &Curve, m: u64) -> Result<RRReport> {
    if !not_pth_power_check(curve.coefficient()) {
        return Err(CoreError::invalid(
            "dimension formula requires a outside K^p",
        ));
    }
    let p = curve.p();
    let ell: u64 = (0..p).map(|j| (m + 1).saturating_sub(j)).sum();
    let deg = p * m;
    Ok(RRReport {
        m,
        ell,
        deg,
        genus_estimate: deg as i64 + 1 - ell as i64,
    })
}

/// Independent dimension oracle by exact semilinear linear algebra.
///
/// Unknowns are `delta_{j,d} = c_{j,d}^p` for `0 <= j < p`, `0 <= d <= bound`.
/// Expanding `sum_j (sum_d delta_{j,d} x^{pd}) (x - a x^p)^j`, every
/// x-exponent above `pm` gives a K-linear condition on the deltas; each
/// condition splits into `p` conditions over `F_p(s)` via the module basis
/// `1, t, ..., t^{p-1}` of `K` over `K^p`. The kernel dimension over `F_p(s)`
/// equals `dim_K L` because `f -> (c_{j,d}^p)` is a Frobenius-semilinear
/// bijection, which preserves dimension.
pub fn rr_dimension_oracle(curve: &Curve, m: u64, bound: u64) -> Result<u64> {
    if !not_pth_power_check(curve.coefficient()) {
        return Err(CoreError::invalid(
            "dimension oracle requires a outside K^p",
        ));
    }
    if bound < m {
        return Err(CoreError::invalid("oracle degree bound must be >= m"));
    }
    let p = curve.p();
    let a = curve.coefficient();
    let ctx = a.ctx().clone();

    let n_cols = (p * (bound + 1)) as usize;
    let e_max = p * bound + p * (p - 1);
    let n_rows = (p * (e_max.saturating_sub(p * m))) as usize;
    if n_cols > 128 || n_rows.saturating_mul(n_cols) > 8192 {
        return Err(CoreError::resource(format!(
            "oracle instance too large ({n_rows} x {n_cols})"
        )));
    }

    // Powers of w = x - a x^p as polynomials in x with K-coefficients,
    // expanded by honest repeated multiplication.
    let w: XPoly = BTreeMap::from([
        (1u64, RatFn::one(&ctx)),
        (p, a.neg()),
    ]);
    let mut w_pows: Vec<XPoly> = vec![BTreeMap::from([(0u64, RatFn::one(&ctx))])];
    for _ in 1..p {
        w_pows.push(xpoly_mul(w_pows.last().unwrap(), &w)?);
    }

    // Split each coefficient of each w^j into its p components over F_p(s).
    let mut splits: Vec<BTreeMap<u64, Vec<RatFn>>> = Vec::with_capacity(p as usize);
    for wj in &w_pows {
        let mut split_map = BTreeMap::new();
        for (&e, coeff) in wj {
            split_map.insert(e, split_pbasis(coeff)?);
        }
        splits.push(split_map);
    }

    // Rows: one per (x-exponent e > pm, basis component r).
    let mut rows: Vec<Vec<RatFn>> = vec![];
    for e in (p * m + 1)..=e_max {
        for r in 0..p as usize {
            let mut row = Vec::with_capacity(n_cols);
            let mut nonzero = false;
            for j in 0..p {
                for d in 0..=bound {
                    let entry = e
                        .checked_sub(p * d)
                        .and_then(|xe| splits[j as usize].get(&xe))
                        .map(|comps| comps[r].clone())
                        .unwrap_or_else(|| RatFn::zero(&ctx));
                    if !entry.is_zero() {
                        nonzero = true;
                    }
                    row.push(entry);
                }
            }
            if nonzero {
                rows.push(row);
            }
        }
    }

    let rank = matrix_rank(rows, n_cols)?;
    Ok(n_cols as u64 - rank as u64)
}

/// Run the oracle at `bound = m` and `bound = m + p`; the two must agree
/// (a disagreement would falsify the fast path's degree-window analysis).
pub fn rr_dimension_oracle_checked(curve: &Curve, m: u64) -> Result<u64> {
    let d1 = rr_dimension_oracle(curve, m, m)?;
    let d2 = rr_dimension_oracle(curve, m, m + curve.p())?;
    if d1 != d2 {
        return Err(CoreError::CheckFailed(format!(
            "oracle dimensions disagree between bounds: {d1} (B=m) vs {d2} (B=m+p)"
        )));
    }
    Ok(d1)
}

/// The relative genus, from the fast path at `m = p-1` and `m = p`.
///
/// Both samples must give the same genus and differ in dimension by exactly
/// `p` (the stable Riemann-Roch slope); for the `C_n` family the result must
/// equal `(p-1)(p-2)/2`.
pub fn relative_genus(curve: &Curve) -> Result<u64> {
    let p = curve.p();
    let r1 = rr_dimension_fast(curve, p - 1)?;
    let r2 = rr_dimension_fast(curve, p)?;
    if r1.genus_estimate != r2.genus_estimate {
        return Err(CoreError::CheckFailed(format!(
            "genus estimates disagree: {} at m=p-1, {} at m=p",
            r1.genus_estimate, r2.genus_estimate
        )));
    }
    if r2.ell - r1.ell != p {
        return Err(CoreError::CheckFailed(
            "Riemann-Roch slope is not p in the stable range".into(),
        ));
    }
    let g = r1.genus_estimate as u64;
    if curve.is_cn() && g != (p - 1) * (p - 2) / 2 {
        return Err(CoreError::CheckFailed(format!(
            "relative genus {g} != (p-1)(p-2)/2 for C_n"
        )));
    }
    Ok(g)
}

/// The inseparable parametrization witnessing absolute genus zero:
/// over `F_p(s)` with `t = s^p`, `x(z) = z^p` and
/// `y(z) = z - a_hat(s) z^p` where `a_hat(s)^p = a(s^p)`.
#[derive(Clone, Debug)]
pub struct Parametrization {
    pub p: u64,
    /// `a_hat(s)`, the p-th root of `a(s^p)`.
    pub a_hat: RatFn,
}

/// Verify `x(z) - a(s^p) x(z)^p - y(z)^p = 0` identically in `z` by honest
/// symbolic expansion over `F_p(s)`.
pub fn absolute_parametrization_check(curve: &Curve) -> Result<Parametrization> {
    let p = curve.p();
    let a_s = curve.coefficient().scale_exponents(p)?; // a(s^p)
    let a_hat = a_s.pth_power_root().ok_or_else(|| {
        CoreError::ConstructionFailure("a(s^p) has no p-th root".into())
    })?;
    let ctx = a_hat.ctx().clone();

    let x_of_z: ZPoly = BTreeMap::from([(p, RatFn::one(&ctx))]);
    let y_of_z: ZPoly = BTreeMap::from([(1u64, RatFn::one(&ctx)), (p, a_hat.neg())]);

    let x_pow_p = xpoly_pow(&x_of_z, p)?;
    let y_pow_p = xpoly_pow(&y_of_z, p)?;
    let a_x_p = xpoly_scale(&x_pow_p, &a_s)?;

    let mut identity = xpoly_sub(&x_of_z, &a_x_p)?;
    identity = xpoly_sub(&identity, &y_pow_p)?;
    if !identity.is_empty() {
        return Err(CoreError::ConstructionFailure(format!(
            "parametrization identity fails; residual has {} terms",
            identity.len()
        )));
    }
    Ok(Parametrization { p, a_hat })
}

/// Pull a verified point back to its parameter: with `t = s^p`,
/// `z = y + a_hat * x` must satisfy `z^p = x` exactly.
pub fn point_parameter_roundtrip(curve: &Curve, pt: &AffinePoint) -> Result<bool> {
    let p = curve.p();
    let x_s = pt.x.scale_exponents(p)?;
    let y_s = pt.y.scale_exponents(p)?;
    let a_hat = curve
        .coefficient()
        .scale_exponents(p)?
        .pth_power_root()
        .ok_or_else(|| CoreError::ConstructionFailure("a(s^p) has no p-th root".into()))?
        .lift_to(x_s.ctx())?;
    let z = y_s.add(&a_hat.mul(&x_s)?)?;
    Ok(z.frobenius_pow(1)? == x_s)
}

/// Genus drop summary: the drop from `g_K` to absolute genus 0 and Tate's
/// divisibility by `(p-1)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenusDropReport {
    pub p: u64,
    pub relative_genus: u64,
    pub absolute_genus: u64,
    pub drop: u64,
    pub divisor: u64,
    pub divides: bool,
    pub quotient: u64,
}

pub fn genus_drop_report(curve: &Curve) -> Result<GenusDropReport> {
    let p = curve.p();
    let g = relative_genus(curve)?;
    let divisor = (p - 1) / 2;
    Ok(GenusDropReport {
        p,
        relative_genus: g,
        absolute_genus: 0,
        drop: g,
        divisor,
        divides: g % divisor == 0,
        quotient: g / divisor,
    })
}

// ---------------------------------------------------------------------------
// Polynomials in one outer variable with RatFn coefficients, used both for
// powers of w = x - a x^p (variable x) and the parametrization (variable z).
// ---------------------------------------------------------------------------

type XPoly = BTreeMap<u64, RatFn>;
type ZPoly = XPoly;

fn xpoly_mul(a: &XPoly, b: &XPoly) -> Result<XPoly> {
    let mut out: XPoly = BTreeMap::new();
    for (&e1, c1) in a {
        for (&e2, c2) in b {
            let e = e1
                .checked_add(e2)
                .ok_or_else(|| CoreError::resource("exponent overflow"))?;
            let prod = c1.mul(c2)?;
            match out.remove(&e) {
                None => {
                    if !prod.is_zero() {
                        out.insert(e, prod);
                    }
                }
                Some(old) => {
                    let sum = old.add(&prod)?;
                    if !sum.is_zero() {
                        out.insert(e, sum);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn xpoly_pow(a: &XPoly, e: u64) -> Result<XPoly> {
    let ctx = a
        .values()
        .next()
        .map(|c| c.ctx().clone())
        .expect("xpoly_pow of the zero polynomial is unused");
    let mut acc: XPoly = BTreeMap::from([(0u64, RatFn::one(&ctx))]);
    let mut base = a.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = xpoly_mul(&acc, &base)?;
        }
        e >>= 1;
        if e > 0 {
            base = xpoly_mul(&base, &base)?;
        }
    }
    Ok(acc)
}

fn xpoly_scale(a: &XPoly, c: &RatFn) -> Result<XPoly> {
    let mut out = BTreeMap::new();
    for (&e, coeff) in a {
        let prod = coeff.mul(c)?;
        if !prod.is_zero() {
            out.insert(e, prod);
        }
    }
    Ok(out)
}

fn xpoly_sub(a: &XPoly, b: &XPoly) -> Result<XPoly> {
    let mut out = a.clone();
    for (&e, c) in b {
        match out.remove(&e) {
            None => {
                out.insert(e, c.neg());
            }
            Some(old) => {
                let diff = old.sub(c)?;
                if !diff.is_zero() {
                    out.insert(e, diff);
                }
            }
        }
    }
    Ok(out)
}

/// Decompose `lambda` in `K = F_p(t)` over the `K^p`-basis `1, t, ..., t^{p-1}`:
/// returns components `lambda_r` in `F_p(s)` with
/// `lambda(t) = sum_r t^r * lambda_r(t^p)`.
fn split_pbasis(lambda: &RatFn) -> Result<Vec<RatFn>> {
    let ctx = lambda.ctx().clone();
    let p = ctx.p();
    if ctx.k() != 1 {
        return Err(CoreError::invalid("p-basis split requires GF(p) scalars"));
    }
    // lambda = N * D^{p-1} / D^p; D^p is a polynomial in t^p.
    let num = lambda.num().mul(&lambda.den().pow(p - 1)?)?;
    let den_s = lambda.den().pow(p)?.compress_exponents(p)?;
    let mut num_parts = vec![crate::poly::SparsePoly::zero(&ctx); p as usize];
    for (e, c) in num.terms() {
        let r = (e % p) as usize;
        num_parts[r] = num_parts[r].add(&crate::poly::SparsePoly::monomial(
            &ctx,
            e / p,
            c.clone(),
        ));
    }
    num_parts
        .into_iter()
        .map(|part| RatFn::new(part, den_s.clone()))
        .collect()
}

/// Row rank by exact Gaussian elimination over the rational function field.
fn matrix_rank(mut rows: Vec<Vec<RatFn>>, n_cols: usize) -> Result<usize> {
    let mut rank = 0usize;
    for col in 0..n_cols {
        let pivot_row = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(pr) = pivot_row else { continue };
        rows.swap(rank, pr);
        let pivot = rows[rank][col].clone();
        for r in (rank + 1)..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].div(&pivot)?;
            for c in col..n_cols {
                let sub = factor.mul(&rows[rank][c])?;
                rows[r][c] = rows[r][c].sub(&sub)?;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok(rank)
}
