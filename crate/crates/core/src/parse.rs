//! Text syntax for polynomials and rational functions.
//!
//! Grammar: a rational function is `SUM` or `SUM / SUM` (the split happens at
//! the single top-level `/`), where a sum is made of `c`, `c*v^e`, `v^e`,
//! `v`, `c*v` terms joined by `+` or `-`, optionally parenthesized as a
//! whole. Any single-letter variable name is accepted. Examples: `t^4`,
//! `0`, `t + t^5`, `2*t^2 + 1`, `(t+1)/(t^4-1)`.

use crate::error::CoreError;
use crate::field::FieldCtx;
use crate::poly::SparsePoly;
use crate::ratfn::RatFn;
use crate::Result;

pub fn parse_ratfn(ctx: &FieldCtx, input: &str) -> Result<RatFn> {
    let input = input.trim();
    if input.is_empty() {
        return Err(CoreError::Parse("empty expression".into()));
    }
    match split_top_level_slash(input)? {
        Some((num, den)) => {
            let n = parse_poly(ctx, num)?;
            let d = parse_poly(ctx, den)?;
            RatFn::new(n, d)
        }
        None => Ok(RatFn::from_poly(parse_poly(ctx, input)?)),
    }
}

pub fn parse_poly(ctx: &FieldCtx, input: &str) -> Result<SparsePoly> {
    let inner = strip_outer_parens(input.trim());
    let mut out = SparsePoly::zero(ctx);
    for (sign, term) in split_terms(inner)? {
        let (coeff, exp) = parse_term(ctx.p(), term)?;
        let c = if sign < 0 {
            ctx.from_u64(coeff).neg()
        } else {
            ctx.from_u64(coeff)
        };
        out = out.add(&SparsePoly::monomial(ctx, exp, c));
    }
    Ok(out)
}

/// Find the unique depth-zero `/`; error on more than one.
fn split_top_level_slash(s: &str) -> Result<Option<(&str, &str)>> {
    let mut depth = 0i32;
    let mut pos = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(CoreError::Parse("unbalanced parentheses".into()));
                }
            }
            '/' if depth == 0 => {
                if pos.is_some() {
                    return Err(CoreError::Parse("more than one top-level '/'".into()));
                }
                pos = Some(i);
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(CoreError::Parse("unbalanced parentheses".into()));
    }
    Ok(pos.map(|i| (&s[..i], &s[i + 1..])))
}

fn strip_outer_parens(s: &str) -> &str {
    let s = s.trim();
    if !s.starts_with('(') || !s.ends_with(')') {
        return s;
    }
    // Only strip if the parens wrap the whole expression.
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i != s.len() - 1 {
                    return s;
                }
            }
            _ => {}
        }
    }
    strip_outer_parens(&s[1..s.len() - 1])
}

/// Split `a + b - c` into signed terms.
fn split_terms(s: &str) -> Result<Vec<(i32, &str)>> {
    let mut terms = vec![];
    let mut sign = 1i32;
    let mut start = 0usize;
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if b == b'+' || b == b'-' {
            let piece = s[start..i].trim();
            if piece.is_empty() {
                if i == 0 || terms.is_empty() && s[..i].trim().is_empty() {
                    // Leading sign.
                    sign = if b == b'-' { -1 } else { 1 };
                    start = i + 1;
                    continue;
                }
                return Err(CoreError::Parse(format!("empty term in '{s}'")));
            }
            terms.push((sign, piece));
            sign = if b == b'-' { -1 } else { 1 };
            start = i + 1;
        }
    }
    let last = s[start..].trim();
    if last.is_empty() {
        return Err(CoreError::Parse(format!("trailing operator in '{s}'")));
    }
    terms.push((sign, last));
    Ok(terms)
}

/// Parse one `c`, `v`, `v^e`, `c*v`, or `c*v^e` term; returns (coeff, exp).
fn parse_term(p: u64, term: &str) -> Result<(u64, u64)> {
    let term = term.trim();
    let (coeff_str, var_str) = match term.find('*') {
        Some(i) => (Some(term[..i].trim()), term[i + 1..].trim()),
        None => {
            if term.starts_with(|c: char| c.is_ascii_digit()) {
                (Some(term), "")
            } else {
                (None, term)
            }
        }
    };
    let coeff = match coeff_str {
        None | Some("") => 1,
        Some(cs) => cs
            .parse::<u64>()
            .map_err(|_| CoreError::Parse(format!("bad coefficient '{cs}'")))?
            % p,
    };
    if var_str.is_empty() {
        return Ok((coeff, 0));
    }
    let (name, exp) = match var_str.find('^') {
        Some(i) => {
            let e = var_str[i + 1..]
                .trim()
                .parse::<u64>()
                .map_err(|_| CoreError::Parse(format!("bad exponent in '{var_str}'")))?;
            (var_str[..i].trim(), e)
        }
        None => (var_str, 1),
    };
    if name.len() != 1 || !name.chars().all(|c| c.is_ascii_alphabetic()) {
        return Err(CoreError::Parse(format!("bad variable '{name}'")));
    }
    Ok((coeff, exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FieldCtx {
        FieldCtx::prime_field(3).unwrap()
    }

    #[test]
    fn parses_monomials_and_sums() {
        let ctx = f3();
        let a = parse_ratfn(&ctx, "t + t^5").unwrap();
        assert_eq!(
            a,
            RatFn::from_poly(SparsePoly::from_int_terms(&ctx, &[(1, 1), (5, 1)]))
        );
        let b = parse_ratfn(&ctx, "0").unwrap();
        assert!(b.is_zero());
        let c = parse_ratfn(&ctx, "2*t^2 + 1").unwrap();
        assert_eq!(
            c,
            RatFn::from_poly(SparsePoly::from_int_terms(&ctx, &[(2, 2), (0, 1)]))
        );
    }

    #[test]
    fn parses_fractions_and_minus() {
        let ctx = f3();
        let r = parse_ratfn(&ctx, "(t+1)/(t^4-1)").unwrap();
        let expected = RatFn::new(
            SparsePoly::from_int_terms(&ctx, &[(1, 1), (0, 1)]),
            SparsePoly::from_int_terms(&ctx, &[(4, 1), (0, 2)]),
        )
        .unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn accepts_other_variable_letters() {
        let ctx = f3();
        let u = parse_ratfn(&ctx, "u^4 + 2*u").unwrap();
        assert_eq!(
            u,
            RatFn::from_poly(SparsePoly::from_int_terms(&ctx, &[(4, 1), (1, 2)]))
        );
    }

    #[test]
    fn rejects_garbage() {
        let ctx = f3();
        assert!(parse_ratfn(&ctx, "").is_err());
        assert!(parse_ratfn(&ctx, "t^").is_err());
        assert!(parse_ratfn(&ctx, "t/(t/(t))/t").is_err());
        assert!(parse_ratfn(&ctx, "(t+1").is_err());
        assert!(parse_ratfn(&ctx, "t + ").is_err());
        assert!(parse_ratfn(&ctx, "1/0").is_err());
    }
}
