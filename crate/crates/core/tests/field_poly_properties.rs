//! Randomized and exhaustive algebraic properties of the arithmetic kernel.
//! Random cases use a fixed seed for reproducibility.

use genuslab::{FieldCtx, FieldElement, RatFn, SparsePoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x67656e75736c6162; // "genuslab"

fn random_element(rng: &mut ChaCha8Rng, ctx: &FieldCtx) -> FieldElement {
    let order = ctx.order().unwrap();
    ctx.element_from_index(rng.gen_range(0..order))
}

fn random_poly(rng: &mut ChaCha8Rng, ctx: &FieldCtx, max_exp: u64, terms: usize) -> SparsePoly {
    let mut out = SparsePoly::zero(ctx);
    for _ in 0..terms {
        let e = rng.gen_range(0..=max_exp);
        let c = random_element(rng, ctx);
        out = out.add(&SparsePoly::monomial(ctx, e, c));
    }
    out
}

#[test]
fn field_axioms_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for p in [3u64, 5, 7] {
        for k in [1usize, 2, 4, 6] {
            let ctx = FieldCtx::new(p, k).unwrap();
            for _ in 0..40 {
                let a = random_element(&mut rng, &ctx);
                let b = random_element(&mut rng, &ctx);
                let c = random_element(&mut rng, &ctx);
                assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                assert_eq!(&a + &b, &b + &a);
                assert_eq!(&a * &b, &b * &a);
                assert!((&a - &a).is_zero());
                if !a.is_zero() {
                    assert!((&a * &a.invert().unwrap()).is_one());
                }
            }
        }
    }
}

#[test]
fn frobenius_is_a_field_automorphism_exhaustive() {
    // (a+b)^p = a^p + b^p and (ab)^p = a^p b^p, all pairs, p^k <= 81.
    for (p, k) in [(3u64, 1usize), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2), (7, 1), (7, 2)] {
        let ctx = FieldCtx::new(p, k).unwrap();
        let order = ctx.order().unwrap();
        for i in 0..order {
            let a = ctx.element_from_index(i);
            for j in 0..order {
                let b = ctx.element_from_index(j);
                assert_eq!((&a + &b).frobenius(1), &a.frobenius(1) + &b.frobenius(1));
                assert_eq!((&a * &b).frobenius(1), &a.frobenius(1) * &b.frobenius(1));
            }
        }
    }
}

#[test]
fn pth_root_roundtrips_exhaustive() {
    for (p, k) in [(3u64, 1usize), (3, 2), (3, 4), (5, 2), (7, 2)] {
        let ctx = FieldCtx::new(p, k).unwrap();
        for i in 0..ctx.order().unwrap() {
            let a = ctx.element_from_index(i);
            assert_eq!(a.pth_root().pow(p as u128), a);
            assert_eq!(a.pow(p as u128).pth_root(), a);
        }
    }
}

#[test]
fn poly_pth_power_roundtrip_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    for p in [3u64, 5, 7] {
        let ctx = FieldCtx::prime_field(p).unwrap();
        for _ in 0..25 {
            let f = random_poly(&mut rng, &ctx, 30, 6);
            let fp = f.pow(p).unwrap();
            assert_eq!(fp.pth_power_root().as_ref(), Some(&f));
            // f^p * t is never a p-th power (exponent 1 mod p appears).
            let shifted = fp.mul(&SparsePoly::var(&ctx)).unwrap();
            if !shifted.is_zero() {
                assert!(shifted.pth_power_root().is_none());
            }
        }
    }
}

#[test]
fn polynomial_frobenius_additivity_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    for p in [3u64, 5] {
        let ctx = FieldCtx::prime_field(p).unwrap();
        for _ in 0..20 {
            let f = random_poly(&mut rng, &ctx, 20, 5);
            let g = random_poly(&mut rng, &ctx, 20, 5);
            let lhs = f.add(&g).pow(p).unwrap();
            let rhs = f.pow(p).unwrap().add(&g.pow(p).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn ratfn_field_axioms_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    for p in [3u64, 5] {
        let ctx = FieldCtx::prime_field(p).unwrap();
        for _ in 0..15 {
            let mk = |rng: &mut ChaCha8Rng| -> RatFn {
                loop {
                    let num = random_poly(rng, &ctx, 8, 3);
                    let den = random_poly(rng, &ctx, 5, 3);
                    if !den.is_zero() {
                        return RatFn::new(num, den).unwrap();
                    }
                }
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            let c = mk(&mut rng);
            let assoc_l = a.add(&b).unwrap().add(&c).unwrap();
            let assoc_r = a.add(&b.add(&c).unwrap()).unwrap();
            assert_eq!(assoc_l, assoc_r);
            let dist_l = a.mul(&b.add(&c).unwrap()).unwrap();
            let dist_r = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            assert_eq!(dist_l, dist_r);
            if !a.is_zero() {
                assert_eq!(a.mul(&a.inverse().unwrap()).unwrap(), RatFn::one(&ctx));
            }
            assert_eq!(a.sub(&a).unwrap(), RatFn::zero(&ctx));
        }
    }
}

#[test]
fn substitution_respects_identity_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    let ctx = FieldCtx::prime_field(3).unwrap();
    for _ in 0..20 {
        let f = random_poly(&mut rng, &ctx, 15, 5);
        assert_eq!(f.substitute(&SparsePoly::var(&ctx)).unwrap(), f);
    }
}
