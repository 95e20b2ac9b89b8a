//! Curves `x - a*x^p = y^p` over `K = F_p(t)` and their rational points.
//!
//! The distinguished member `C_n` has coefficient
//! `A_n(t) = sum_{k=0}^{p-2} t^{k(q+1)+1}` with `q = p^n`. Points are built
//! from coefficient assignments: an x-coordinate `a(t)/(t^{q+1}-1)` with
//! `a(t) = sum alpha_i t^i` gives a point exactly when
//! `(t^{q+1}-1)^{p-1} a(t) - A_n(t) a(t)^p` is a p-th power, which comparing
//! coefficients reduces to `alpha_i = alpha_{phi(i)}^p` on admissible indices
//! and `alpha_i = 0` elsewhere. Each orbit of `phi` contributes one free
//! choice, constrained to the subfield fixed by the orbit-length Frobenius.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::CoreError;
use crate::field::{FieldCtx, FieldElement};
use crate::limits::Limits;
use crate::orbit::{IndexParams, Orbit};
use crate::poly::SparsePoly;
use crate::ratfn::RatFn;
use crate::Result;

/// A curve `x - a*x^p = y^p` with `a` not a p-th power in `K`.
#[derive(Clone, Debug)]
pub struct Curve {
    params: IndexParams,
    /// Coefficient `a` as a rational function over `GF(p)` in `t`.
    a: RatFn,
    /// Whether `a` is the distinguished coefficient `A_n(t)`.
    is_cn: bool,
    limits: Limits,
}

impl Curve {
    /// The curve `C_n` over `F_p(t)`.
    pub fn cn(p: u64, n: u32) -> Result<Curve> {
        Curve::cn_with_limits(p, n, Limits::default())
    }

    pub fn cn_with_limits(p: u64, n: u32, limits: Limits) -> Result<Curve> {
        let params = IndexParams::with_limits(p, n, &limits)?;
        let ctx = FieldCtx::with_limits(p, 1, limits)?;
        let a = RatFn::from_poly(cn_coefficient(&ctx, params.q())?);
        let curve = Curve {
            params,
            a,
            is_cn: true,
            limits,
        };
        curve.validate()?;
        Ok(curve)
    }

    /// A general curve with explicit coefficient `a` (over `GF(p)`, in `t`).
    pub fn with_coefficient(p: u64, n: u32, a: RatFn) -> Result<Curve> {
        let limits = Limits::default();
        let params = IndexParams::with_limits(p, n, &limits)?;
        if a.ctx().p() != p || a.ctx().k() != 1 {
            return Err(CoreError::invalid(
                "curve coefficient must live over GF(p) itself",
            ));
        }
        let curve = Curve {
            params,
            a,
            is_cn: false,
            limits,
        };
        curve.validate()?;
        Ok(curve)
    }

    fn validate(&self) -> Result<()> {
        if self.a.is_zero() || self.a.pth_power_root().is_some() {
            return Err(CoreError::invalid(
                "curve coefficient must lie outside K^p",
            ));
        }
        Ok(())
    }

    pub fn p(&self) -> u64 {
        self.params.p()
    }

    pub fn n(&self) -> u32 {
        self.params.n()
    }

    pub fn q(&self) -> u64 {
        self.params.q()
    }

    pub fn params(&self) -> &IndexParams {
        &self.params
    }

    pub fn coefficient(&self) -> &RatFn {
        &self.a
    }

    pub fn is_cn(&self) -> bool {
        self.is_cn
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// `x - a*x^p` as a reduced rational function over the context of `x`.
    pub fn curve_lhs(&self, x: &RatFn) -> Result<RatFn> {
        let a = self.a.lift_to(x.ctx())?;
        x.sub(&a.mul(&x.pow(self.p())?)?)
    }

    /// True iff `(x, y)` satisfies `x - a*x^p = y^p` exactly.
    ///
    /// Checked by cross-multiplication: with `x = N/D`, `a = An/Ad` and the
    /// reduced forms canonical, the equation holds iff
    /// `(N D^{p-1} Ad - An N^p) * Dy^p = Ny^p * (Ad D^p)` as polynomials.
    pub fn verify_point(&self, x: &RatFn, y: &RatFn) -> Result<bool> {
        if x.ctx() != y.ctx() {
            return Err(CoreError::CtxMismatch);
        }
        let p = self.p();
        let an = self.a.num().lift_to(x.ctx())?;
        let ad = self.a.den().lift_to(x.ctx())?;
        let d_pm1 = x.den().pow(p - 1)?;
        let lhs_num = x
            .num()
            .mul(&d_pm1)?
            .mul(&ad)?
            .sub(&an.mul(&x.num().frobenius_pow(1)?)?);
        let lhs_den = ad.mul(&d_pm1.mul(x.den())?)?;
        let rhs_num = y.num().frobenius_pow(1)?;
        let rhs_den = y.den().frobenius_pow(1)?;
        Ok(lhs_num.mul(&rhs_den)? == rhs_num.mul(&lhs_den)?)
    }
}

/// `A_n(t) = t + t^{q+2} + t^{2q+3} + ... + t^{(p-2)q+p-1}`: exactly `p - 1`
/// terms, exponents `k(q+1) + 1`.
fn cn_coefficient(ctx: &FieldCtx, q: u64) -> Result<SparsePoly> {
    let p = ctx.p();
    let mut terms = vec![];
    for k in 0..(p - 1) {
        let e = k
            .checked_mul(q + 1)
            .and_then(|v| v.checked_add(1))
            .ok_or_else(|| CoreError::resource("curve coefficient degree overflow"))?;
        terms.push((e, ctx.one()));
    }
    SparsePoly::from_terms(ctx, terms)
}

/// `t * f(u)` with `f(u) = 1 + u + ... + u^{p-2}`; specializing
/// `u = t^{q+1}` recovers the `C_n` coefficient.
pub fn family_coefficient(p: u64, u: &RatFn) -> Result<RatFn> {
    if u.ctx().p() != p {
        return Err(CoreError::CtxMismatch);
    }
    let ctx = u.ctx();
    let mut f = RatFn::zero(ctx);
    for i in 0..(p - 1) {
        f = f.add(&u.pow(i)?)?;
    }
    f.mul(&RatFn::var(ctx))
}

/// A choice of `alpha_i` at every admissible index satisfying
/// `alpha_i = alpha_{phi(i)}^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffAssignment {
    ctx: FieldCtx,
    alpha: BTreeMap<u64, FieldElement>,
}

impl CoeffAssignment {
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn alpha(&self) -> &BTreeMap<u64, FieldElement> {
        &self.alpha
    }

    /// The numerator polynomial `a(t) = sum alpha_i t^i`.
    pub fn numerator(&self) -> SparsePoly {
        SparsePoly::from_terms(
            &self.ctx,
            self.alpha.iter().map(|(&i, c)| (i, c.clone())),
        )
        .expect("assignment coefficients share the context")
    }

    /// Check `alpha_i = alpha_{phi(i)}^p` around every orbit, plus the
    /// three-case recurrence on all of `[0, q)` with zeros elsewhere.
    pub fn satisfies_recurrence(&self, params: &IndexParams) -> Result<bool> {
        let zero = self.ctx.zero();
        let at = |i: u64| self.alpha.get(&i).cloned().unwrap_or_else(|| zero.clone());
        for i in 0..params.q() {
            let expected = match params.phi(i)? {
                Some(j) => at(j).pow(params.p() as u128),
                None => zero.clone(),
            };
            if at(i) != expected {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// All coefficient assignments over `GF(p^k)`, in deterministic order.
///
/// For an orbit of length `r` the free value ranges over the subfield fixed
/// by the `r`-fold Frobenius (`p^gcd(r,k)` elements); the value at the `j`-th
/// member of the traversal is `beta^{p^{(r-j) mod r}}`, which makes
/// `alpha_i = alpha_{phi(i)}^p` hold around the cycle. The total count is
/// `p^{sum_orbits gcd(r,k)}`.
pub fn enumerate_assignments(curve: &Curve, k: usize) -> Result<Vec<CoeffAssignment>> {
    let ctx = FieldCtx::with_limits(curve.p(), k, *curve.limits())?;
    let orbits = curve.params().orbit_decomposition()?;
    let choices: Vec<Vec<FieldElement>> = orbits
        .iter()
        .map(|orbit| {
            let g = num_integer::gcd(orbit.len(), k);
            ctx.enumerate_subfield(g)
        })
        .collect::<Result<_>>()?;

    let total = choices
        .iter()
        .try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64))
        .filter(|&t| t <= curve.limits().search_budget)
        .ok_or_else(|| CoreError::resource("assignment count exceeds budget"))?;

    let mut out = Vec::with_capacity(total as usize);
    let mut cursor = vec![0usize; orbits.len()];
    loop {
        let mut alpha = BTreeMap::new();
        for (orbit, (choice, &idx)) in orbits.iter().zip(choices.iter().zip(&cursor)) {
            let beta = &choice[idx];
            propagate_orbit(&mut alpha, orbit, beta);
        }
        out.push(CoeffAssignment {
            ctx: ctx.clone(),
            alpha,
        });
        // Odometer with the first orbit's choice varying fastest.
        let mut pos = 0;
        loop {
            if pos == orbits.len() {
                debug_assert_eq!(out.len() as u64, total);
                return Ok(out);
            }
            cursor[pos] += 1;
            if cursor[pos] < choices[pos].len() {
                break;
            }
            cursor[pos] = 0;
            pos += 1;
        }
    }
}

fn propagate_orbit(alpha: &mut BTreeMap<u64, FieldElement>, orbit: &Orbit, beta: &FieldElement) {
    let r = orbit.len();
    for (j, &i) in orbit.members().iter().enumerate() {
        let e = (r - j) % r;
        alpha.insert(i, beta.frobenius(e));
    }
}

/// A verified affine point with optional construction provenance.
#[derive(Clone, Debug)]
pub struct AffinePoint {
    pub x: RatFn,
    pub y: RatFn,
    /// The raw numerator `a(t)` of the unreduced form `a(t)/(t^{q+1}-1)`,
    /// when the point came from the orbit construction.
    pub provenance: Option<CoeffAssignment>,
}

impl AffinePoint {
    /// Serializable document per the external point format.
    pub fn doc(&self, curve: &Curve, k: usize) -> PointDoc {
        PointDoc {
            p: curve.p(),
            n: curve.n(),
            k,
            modulus: self
                .x
                .ctx()
                .modulus()
                .to_vec(),
            alpha: self.provenance.as_ref().map(|asg| {
                asg.alpha()
                    .iter()
                    .map(|(&i, c)| (i, c.coeffs().to_vec()))
                    .collect()
            }),
            x: self.x.clone(),
            y: self.y.clone(),
        }
    }
}

/// External JSON shape of a point.
#[derive(Clone, Debug, Serialize)]
pub struct PointDoc {
    pub p: u64,
    pub n: u32,
    pub k: usize,
    pub modulus: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<(u64, Vec<u64>)>>,
    pub x: RatFn,
    pub y: RatFn,
}

/// Shared per-enumeration data for turning assignments into points.
///
/// With `x = a(t)/(t^{q+1}-1)` and `A` the (polynomial) curve coefficient,
/// `x - A x^p = W / (t^{q+1}-1)^p` where
/// `W = (t^{q+1}-1)^{p-1} a(t) - A a(t)^p`. Since the denominator is already
/// a p-th power, the fraction is one iff `W` is a p-th power polynomial
/// `V^p`, and then `y = V/(t^{q+1}-1)`.
pub struct PointBuilder {
    /// `t^{q+1} - 1` over the point context.
    cyc: SparsePoly,
    /// `(t^{q+1} - 1)^{p-1}`.
    cyc_pow: SparsePoly,
    /// The curve coefficient lifted to the point context.
    a_lifted: SparsePoly,
}

impl PointBuilder {
    pub fn new(curve: &Curve, ctx: &FieldCtx) -> Result<PointBuilder> {
        if !curve.coefficient().is_polynomial() {
            return Err(CoreError::invalid(
                "the point construction needs a polynomial curve coefficient",
            ));
        }
        let cyc = cyclotomic_like_denominator(ctx, curve.q())?;
        Ok(PointBuilder {
            cyc_pow: cyc.pow(curve.p() - 1)?,
            a_lifted: curve.coefficient().num().lift_to(ctx)?,
            cyc,
        })
    }

    /// A failed root extraction is a construction bug, reported hard.
    ///
    /// `a^p` is taken by exact coefficient Frobenius; the honest-power route
    /// is what the brute-force oracle exercises.
    pub fn build(&self, asg: &CoeffAssignment) -> Result<AffinePoint> {
        let num = asg.numerator();
        let w = self
            .cyc_pow
            .mul(&num)?
            .sub(&self.a_lifted.mul(&num.frobenius_pow(1)?)?);
        let v = w.pth_power_root().ok_or_else(|| {
            CoreError::ConstructionFailure(format!(
                "(t^(q+1)-1)^(p-1) a - A a^p is not a p-th power for assignment {:?}",
                asg.alpha()
            ))
        })?;
        Ok(AffinePoint {
            x: RatFn::new(num, self.cyc.clone())?,
            y: RatFn::new(v, self.cyc.clone())?,
            provenance: Some(asg.clone()),
        })
    }
}

/// Turn an assignment into the point it encodes (see [`PointBuilder`]).
pub fn assignment_to_point(curve: &Curve, asg: &CoeffAssignment) -> Result<AffinePoint> {
    PointBuilder::new(curve, asg.ctx())?.build(asg)
}

/// `t^{q+1} - 1`, the fixed denominator of constructed x-coordinates.
pub fn cyclotomic_like_denominator(ctx: &FieldCtx, q: u64) -> Result<SparsePoly> {
    Ok(SparsePoly::from_terms(
        ctx,
        [(q + 1, ctx.one()), (0, ctx.one().neg())],
    )?)
}

/// Enumerate the constructed points of `curve` over `F_{p^k}(t)`.
///
/// The full enumeration asserts that distinct assignments give distinct
/// reduced x-coordinates and that the count matches `p^{sum gcd(r,k)}`.
pub fn enumerate_points(curve: &Curve, k: usize, limit: Option<usize>) -> Result<Vec<AffinePoint>> {
    let assignments = enumerate_assignments(curve, k)?;
    let expected = expected_point_count(curve, k)?;
    let truncated = match limit {
        Some(l) if l < assignments.len() => true,
        _ => false,
    };
    let selected: Vec<&CoeffAssignment> = match limit {
        Some(l) => assignments.iter().take(l).collect(),
        None => assignments.iter().collect(),
    };
    let builder = match selected.first() {
        Some(asg) => Some(PointBuilder::new(curve, asg.ctx())?),
        None => None,
    };
    let points: Vec<AffinePoint> = selected
        .par_iter()
        .map(|asg| builder.as_ref().unwrap().build(asg))
        .collect::<Result<_>>()?;
    if !truncated {
        if points.len() as u64 != expected {
            return Err(CoreError::CheckFailed(format!(
                "point count {} != p^sum gcd(r,k) = {expected}",
                points.len()
            )));
        }
        let mut xs = BTreeSet::new();
        for pt in &points {
            if !xs.insert(pt.x.clone()) {
                return Err(CoreError::CheckFailed(
                    "two assignments produced the same reduced x".into(),
                ));
            }
        }
    }
    Ok(points)
}

/// `p^{sum_orbits gcd(r,k)}`, the exact constructed-point count.
pub fn expected_point_count(curve: &Curve, k: usize) -> Result<u64> {
    let exp = point_count_exponent(curve, k)?;
    curve
        .p()
        .checked_pow(exp as u32)
        .ok_or_else(|| CoreError::resource("point count overflows u64"))
}

/// `sum_orbits gcd(r, k)`.
pub fn point_count_exponent(curve: &Curve, k: usize) -> Result<u64> {
    let orbits = curve.params().orbit_decomposition()?;
    Ok(orbits
        .iter()
        .map(|o| num_integer::gcd(o.len(), k) as u64)
        .sum())
}

/// The bound report: orbit census, exact point counts over `F_p(t)` and
/// `F_{p^{2n}}(t)` (as exponents of `p`), and the two theorem bound checks
/// carried out in exact integer arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub p: u64,
    pub n: u32,
    pub q: u64,
    pub orbit_lengths: Vec<usize>,
    pub n_orbits: u64,
    /// Count over F_p(t) is p^this (= number of orbits).
    pub count_base_exponent: u64,
    /// Count over F_{p^{2n}}(t) is p^this (= sum of orbit lengths = 2^n).
    pub count_ext_exponent: u64,
    /// `2n * N_orb >= 2^n`, the exact form of the first theorem bound.
    pub base_bound_holds: bool,
    /// The extension count equals `p^{2^n}` exactly.
    pub ext_count_is_p_pow_2n: bool,
}

impl Serialize for BoundsReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BoundsReport", 9)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("orbit_lengths", &self.orbit_lengths)?;
        st.serialize_field("n_orbits", &self.n_orbits)?;
        st.serialize_field("count_base_exponent", &self.count_base_exponent)?;
        st.serialize_field("count_ext_exponent", &self.count_ext_exponent)?;
        st.serialize_field("base_bound_holds", &self.base_bound_holds)?;
        st.serialize_field("ext_count_is_p_pow_2n", &self.ext_count_is_p_pow_2n)?;
        st.end()
    }
}

/// Verify the two point-count bounds for `C_n` by orbit counting alone.
pub fn verify_bounds(p: u64, n: u32) -> Result<BoundsReport> {
    let params = IndexParams::new(p, n)?;
    let orbits = params.orbit_decomposition()?;
    let orbit_lengths: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
    let n_orbits = orbits.len() as u64;
    let sum_lengths: u64 = orbit_lengths.iter().map(|&r| r as u64).sum();
    let two_pow_n = 1u64 << n;
    Ok(BoundsReport {
        p,
        n,
        q: params.q(),
        orbit_lengths,
        n_orbits,
        count_base_exponent: n_orbits,
        count_ext_exponent: sum_lengths,
        base_bound_holds: 2 * n as u64 * n_orbits >= two_pow_n,
        ext_count_is_p_pow_2n: sum_lengths == two_pow_n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(ctx: &FieldCtx, terms: &[(u64, u64)]) -> SparsePoly {
        SparsePoly::from_int_terms(ctx, terms)
    }

    #[test]
    fn cn_coefficients() {
        let c31 = Curve::cn(3, 1).unwrap();
        let ctx = c31.coefficient().ctx().clone();
        assert_eq!(
            c31.coefficient(),
            &RatFn::from_poly(poly(&ctx, &[(1, 1), (5, 1)]))
        );
        let c32 = Curve::cn(3, 2).unwrap();
        assert_eq!(
            c32.coefficient(),
            &RatFn::from_poly(poly(&ctx, &[(1, 1), (11, 1)]))
        );
        let c51 = Curve::cn(5, 1).unwrap();
        let ctx5 = c51.coefficient().ctx().clone();
        assert_eq!(
            c51.coefficient(),
            &RatFn::from_poly(poly(&ctx5, &[(1, 1), (7, 1), (13, 1), (19, 1)]))
        );
    }

    #[test]
    fn general_coefficient_must_avoid_kp() {
        let ctx = FieldCtx::prime_field(3).unwrap();
        let cube = RatFn::from_poly(poly(&ctx, &[(3, 1)]));
        assert!(Curve::with_coefficient(3, 1, cube).is_err());
        let ok = RatFn::from_poly(poly(&ctx, &[(1, 1)]));
        assert!(Curve::with_coefficient(3, 1, ok).is_ok());
    }

    #[test]
    fn family_specialization_examples() {
        let ctx = FieldCtx::prime_field(3).unwrap();
        // u = t^4 -> t + t^5 = A_1
        let u = RatFn::from_poly(poly(&ctx, &[(4, 1)]));
        let coeff = family_coefficient(3, &u).unwrap();
        assert_eq!(coeff, *Curve::cn(3, 1).unwrap().coefficient());
        // u = 0 -> t
        let z = family_coefficient(3, &RatFn::zero(&ctx)).unwrap();
        assert_eq!(z, RatFn::var(&ctx));
        // p = 5, u = t^6 -> A_1 for p = 5
        let ctx5 = FieldCtx::prime_field(5).unwrap();
        let u5 = RatFn::from_poly(poly(&ctx5, &[(6, 1)]));
        assert_eq!(
            family_coefficient(5, &u5).unwrap(),
            *Curve::cn(5, 1).unwrap().coefficient()
        );
    }

    #[test]
    fn assignment_counts() {
        let c31 = Curve::cn(3, 1).unwrap();
        assert_eq!(enumerate_assignments(&c31, 1).unwrap().len(), 3);
        assert_eq!(enumerate_assignments(&c31, 2).unwrap().len(), 9);
        let c33 = Curve::cn(3, 3).unwrap();
        assert_eq!(enumerate_assignments(&c33, 6).unwrap().len(), 6561);
    }

    #[test]
    fn assignments_k1_are_constant_on_orbits() {
        let c31 = Curve::cn(3, 1).unwrap();
        for asg in enumerate_assignments(&c31, 1).unwrap() {
            assert_eq!(asg.alpha()[&0], asg.alpha()[&1]);
            assert!(asg.satisfies_recurrence(c31.params()).unwrap());
        }
    }

    #[test]
    fn point_for_beta_one_matches_expansion_oracle() {
        // beta = 1 on C_1 gives x = (1+t)/(t^4-1), y = (t^3+1)/(t^4-1).
        let c31 = Curve::cn(3, 1).unwrap();
        let assignments = enumerate_assignments(&c31, 1).unwrap();
        let ctx = assignments[0].ctx().clone();
        let one_asg = assignments
            .iter()
            .find(|a| a.alpha()[&0].is_one())
            .unwrap();
        let pt = assignment_to_point(&c31, one_asg).unwrap();
        let expected_x = RatFn::new(
            poly(&ctx, &[(0, 1), (1, 1)]),
            poly(&ctx, &[(4, 1), (0, 2)]),
        )
        .unwrap();
        let expected_y = RatFn::new(
            poly(&ctx, &[(3, 1), (0, 1)]),
            poly(&ctx, &[(4, 1), (0, 2)]),
        )
        .unwrap();
        assert_eq!(pt.x, expected_x);
        assert_eq!(pt.y, expected_y);
        assert!(c31.verify_point(&pt.x, &pt.y).unwrap());
        // The beta = 2 point is the scaling by 2.
        let two_asg = assignments
            .iter()
            .find(|a| a.alpha()[&0] == ctx.from_u64(2))
            .unwrap();
        let pt2 = assignment_to_point(&c31, two_asg).unwrap();
        let two = RatFn::constant(&ctx, ctx.from_u64(2));
        assert_eq!(pt2.x, expected_x.mul(&two).unwrap());
        assert_eq!(pt2.y, expected_y.mul(&two).unwrap());
    }

    #[test]
    fn zero_assignment_gives_origin() {
        let c31 = Curve::cn(3, 1).unwrap();
        let assignments = enumerate_assignments(&c31, 1).unwrap();
        let zero_asg = assignments
            .iter()
            .find(|a| a.alpha().values().all(|c| c.is_zero()))
            .unwrap();
        let pt = assignment_to_point(&c31, zero_asg).unwrap();
        assert!(pt.x.is_zero());
        assert!(pt.y.is_zero());
    }

    #[test]
    fn verify_point_rejects_wrong_y() {
        let c31 = Curve::cn(3, 1).unwrap();
        let ctx = FieldCtx::prime_field(3).unwrap();
        let x = RatFn::new(
            poly(&ctx, &[(0, 1), (1, 1)]),
            poly(&ctx, &[(4, 1), (0, 2)]),
        )
        .unwrap();
        assert!(!c31.verify_point(&x, &RatFn::zero(&ctx)).unwrap());
        assert!(c31
            .verify_point(&RatFn::zero(&ctx), &RatFn::zero(&ctx))
            .unwrap());
    }

    #[test]
    fn point_counts_small_matrix() {
        for (p, n, k, expected) in [
            (3u64, 1u32, 1usize, 3u64),
            (3, 2, 1, 3),
            (3, 1, 2, 9),
            (5, 1, 1, 5),
            (5, 1, 2, 25),
        ] {
            let curve = Curve::cn(p, n).unwrap();
            let pts = enumerate_points(&curve, k, None).unwrap();
            assert_eq!(pts.len() as u64, expected, "(p,n,k)=({p},{n},{k})");
        }
    }

    #[test]
    fn limit_gives_deterministic_prefix() {
        let c31 = Curve::cn(3, 1).unwrap();
        let all = enumerate_points(&c31, 2, None).unwrap();
        let first_two = enumerate_points(&c31, 2, Some(2)).unwrap();
        assert_eq!(first_two.len(), 2);
        for (a, b) in all.iter().zip(&first_two) {
            assert_eq!(a.x, b.x);
            assert_eq!(a.y, b.y);
        }
    }

    #[test]
    fn bounds_reports() {
        let r33 = verify_bounds(3, 3).unwrap();
        assert_eq!(r33.n_orbits, 2);
        assert_eq!(r33.count_base_exponent, 2);
        assert_eq!(r33.count_ext_exponent, 8);
        assert!(r33.base_bound_holds); // 6*2 = 12 >= 8
        assert!(r33.ext_count_is_p_pow_2n);
        let r31 = verify_bounds(3, 1).unwrap();
        assert_eq!((r31.n_orbits, r31.count_ext_exponent), (1, 2));
        assert!(r31.base_bound_holds); // 2*1 >= 2
        let r51 = verify_bounds(5, 1).unwrap();
        assert_eq!((r51.n_orbits, r51.count_ext_exponent), (1, 2));
        assert!(r51.base_bound_holds);
    }
}
