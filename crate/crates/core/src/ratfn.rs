//! Reduced rational functions `num/den` over a finite field.
//!
//! The stored form is always canonical: `gcd(num, den) = 1` and `den` monic,
//! so equality is structural equality. Elements of `K = F_p(t)` and the
//! coordinate functions of curve points are both this type.

use std::fmt;

use serde::Serialize;

use crate::error::CoreError;
use crate::field::{FieldCtx, FieldElement};
use crate::poly::SparsePoly;
use crate::Result;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RatFn {
    num: SparsePoly,
    den: SparsePoly,
}

impl RatFn {
    /// Normalize `num/den` to the reduced, monic-denominator form.
    pub fn new(num: SparsePoly, den: SparsePoly) -> Result<RatFn> {
        if den.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFn {
                num,
                den: SparsePoly::one(den.ctx()),
            });
        }
        let g = num.gcd(&den)?;
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            let (qn, rn) = num.divmod(&g)?;
            let (qd, rd) = den.divmod(&g)?;
            debug_assert!(rn.is_zero() && rd.is_zero());
            (qn, qd)
        };
        // Make the denominator monic, scaling the numerator to compensate.
        let lc = den.leading_coeff().unwrap().clone();
        if !lc.is_one() {
            let lc_inv = lc.invert()?;
            num = num.scale(&lc_inv);
            den = den.scale(&lc_inv);
        }
        Ok(RatFn { num, den })
    }

    pub fn from_poly(p: SparsePoly) -> RatFn {
        let one = SparsePoly::one(p.ctx());
        RatFn { num: p, den: one }
    }

    pub fn zero(ctx: &FieldCtx) -> RatFn {
        RatFn::from_poly(SparsePoly::zero(ctx))
    }

    pub fn one(ctx: &FieldCtx) -> RatFn {
        RatFn::from_poly(SparsePoly::one(ctx))
    }

    pub fn var(ctx: &FieldCtx) -> RatFn {
        RatFn::from_poly(SparsePoly::var(ctx))
    }

    pub fn constant(ctx: &FieldCtx, c: FieldElement) -> RatFn {
        RatFn::from_poly(SparsePoly::constant(ctx, c))
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.num.ctx()
    }

    pub fn num(&self) -> &SparsePoly {
        &self.num
    }

    pub fn den(&self) -> &SparsePoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// `max(deg num, deg den)` on the reduced form; the affine height.
    pub fn height(&self) -> u64 {
        self.num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0))
    }

    pub fn add(&self, rhs: &RatFn) -> Result<RatFn> {
        let a = self.num.mul(&rhs.den)?;
        let b = rhs.num.mul(&self.den)?;
        RatFn::new(a.add(&b), self.den.mul(&rhs.den)?)
    }

    pub fn sub(&self, rhs: &RatFn) -> Result<RatFn> {
        let a = self.num.mul(&rhs.den)?;
        let b = rhs.num.mul(&self.den)?;
        RatFn::new(a.sub(&b), self.den.mul(&rhs.den)?)
    }

    pub fn neg(&self) -> RatFn {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &RatFn) -> Result<RatFn> {
        RatFn::new(self.num.mul(&rhs.num)?, self.den.mul(&rhs.den)?)
    }

    pub fn div(&self, rhs: &RatFn) -> Result<RatFn> {
        if rhs.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        RatFn::new(self.num.mul(&rhs.den)?, self.den.mul(&rhs.num)?)
    }

    pub fn inverse(&self) -> Result<RatFn> {
        if self.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        RatFn::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u64) -> Result<RatFn> {
        // Powers of coprime polynomials stay coprime and the power of a monic
        // denominator stays monic: the result is already canonical.
        Ok(RatFn {
            num: self.num.pow(e)?,
            den: self.den.pow(e)?,
        })
    }

    /// `self^{p^e}` via exact coefficient Frobenius (see
    /// [`SparsePoly::frobenius_pow`]); canonical form is preserved.
    pub fn frobenius_pow(&self, e: usize) -> Result<RatFn> {
        Ok(RatFn {
            num: self.num.frobenius_pow(e)?,
            den: self.den.frobenius_pow(e)?,
        })
    }

    /// If `self = s^p` for some rational function `s`, return it. Because the
    /// stored form is reduced and the constant field is perfect, this holds
    /// iff numerator and denominator are separately p-th powers.
    pub fn pth_power_root(&self) -> Option<RatFn> {
        let num = self.num.pth_power_root()?;
        let den = self.den.pth_power_root()?;
        // Roots of coprime p-th powers are coprime, and the root of a monic
        // polynomial is monic: the result is already canonical.
        debug_assert!(den.is_monic() || den.degree() == Some(0));
        Some(RatFn { num, den })
    }

    /// The substitution `t -> t^m` (used to view `F_p(t)` inside `F_p(s)`
    /// with `t = s^p`).
    pub fn scale_exponents(&self, m: u64) -> Result<RatFn> {
        RatFn::new(self.num.scale_exponents(m)?, self.den.scale_exponents(m)?)
    }

    /// Substitute another rational function for the variable.
    pub fn substitute(&self, g: &RatFn) -> Result<RatFn> {
        // f(g) = sum c_e g^e / sum d_e g^e; evaluate num and den as
        // polynomials in g and divide.
        let eval = |f: &SparsePoly| -> Result<RatFn> {
            let mut acc = RatFn::zero(self.ctx());
            for (e, c) in f.terms() {
                let term = g.pow(e)?.mul(&RatFn::constant(self.ctx(), c.clone()))?;
                acc = acc.add(&term)?;
            }
            Ok(acc)
        };
        eval(&self.num)?.div(&eval(&self.den)?)
    }

    pub fn lift_to(&self, target: &FieldCtx) -> Result<RatFn> {
        Ok(RatFn {
            num: self.num.lift_to(target)?,
            den: self.den.lift_to(target)?,
        })
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl RatFn {
    /// Render with an explicit variable name (`Display` uses `t`).
    pub fn to_string_var(&self, var: char) -> String {
        let num = self.num.to_string_var(var);
        if self.is_polynomial() {
            return num;
        }
        let den = self.den.to_string_var(var);
        let num_part = if self.num.num_terms() <= 1 {
            num
        } else {
            format!("({num})")
        };
        let den_part = if self.den.num_terms() <= 1 {
            den
        } else {
            format!("({den})")
        };
        format!("{num_part}/{den_part}")
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var('t'))
    }
}
