//! The index map `phi` and its orbit decomposition.
//!
//! For `q = p^n`, `phi` is the partial map on `[0, q)` given by
//! `phi(i) = (i+q)/p` when `i = 0 (mod p)` and `(i-1)/p` when
//! `i = 1 (mod p)`, undefined otherwise. Writing `i` in base-p digits
//! `(e_0, ..., e_{n-1})` (little-endian), `phi` drops `e_0`, shifts the rest
//! down, and appends `1 - e_0` at the top — defined exactly when
//! `e_0` is 0 or 1.
//!
//! An index is *admissible* when every digit is 0 or 1; there are `2^n` of
//! them, `phi` permutes them, `phi^n` is the digit complement and `phi^{2n}`
//! the identity, so orbit lengths divide `2n`. Each orbit supports one free
//! coefficient choice in the point construction, which is where the point
//! count bound comes from.
//!
//! The index 0 (all digits zero) is included as a valid admissible index with
//! `phi(0) = q/p`; the construction needs the constant coefficient, and the
//! brute-force coefficient oracle confirms the choice.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::CoreError;
use crate::field::is_prime_u64;
use crate::limits::Limits;
use crate::Result;

/// Curve index parameters `(p, n, q = p^n)`, validated on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexParams {
    p: u64,
    n: u32,
    q: u64,
}

impl IndexParams {
    pub fn new(p: u64, n: u32) -> Result<IndexParams> {
        IndexParams::with_limits(p, n, &Limits::default())
    }

    pub fn with_limits(p: u64, n: u32, limits: &Limits) -> Result<IndexParams> {
        if p <= 2 || !is_prime_u64(p) {
            return Err(CoreError::invalid(format!("p = {p} is not an odd prime")));
        }
        if n == 0 {
            return Err(CoreError::invalid("n must be >= 1"));
        }
        if n > limits.max_n {
            return Err(CoreError::resource(format!(
                "n = {n} exceeds cap {}",
                limits.max_n
            )));
        }
        let q = p
            .checked_pow(n)
            .ok_or_else(|| CoreError::resource(format!("q = {p}^{n} overflows u64")))?;
        Ok(IndexParams { p, n, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    fn check_index(&self, i: u64) -> Result<()> {
        if i >= self.q {
            return Err(CoreError::invalid(format!(
                "index {i} out of range [0, {})",
                self.q
            )));
        }
        Ok(())
    }

    /// Base-p digits of `i`, little-endian, length `n`.
    pub fn digits(&self, i: u64) -> Result<Vec<u64>> {
        self.check_index(i)?;
        let mut digits = vec![0u64; self.n as usize];
        let mut rest = i;
        for d in digits.iter_mut() {
            *d = rest % self.p;
            rest /= self.p;
        }
        Ok(digits)
    }

    /// The arithmetic form of `phi`; `None` when `i` is not 0 or 1 mod p.
    pub fn phi(&self, i: u64) -> Result<Option<u64>> {
        self.check_index(i)?;
        Ok(match i % self.p {
            0 => Some((i + self.q) / self.p),
            1 => Some((i - 1) / self.p),
            _ => None,
        })
    }

    /// The digit form of `phi`: drop the low digit, shift, append its
    /// complement at the top. Defined for the same indices as [`Self::phi`].
    pub fn phi_digits(&self, i: u64) -> Result<Option<u64>> {
        let digits = self.digits(i)?;
        let e0 = digits[0];
        if e0 > 1 {
            return Ok(None);
        }
        let delta = 1 - e0;
        let mut out = 0u64;
        for (j, &d) in digits.iter().enumerate().skip(1) {
            out += d * self.p.pow(j as u32 - 1);
        }
        out += delta * self.p.pow(self.n - 1);
        Ok(Some(out))
    }

    /// True iff every base-p digit of `i` is 0 or 1.
    pub fn is_admissible(&self, i: u64) -> Result<bool> {
        self.check_index(i)?;
        let mut rest = i;
        for _ in 0..self.n {
            if rest % self.p > 1 {
                return Ok(false);
            }
            rest /= self.p;
        }
        Ok(true)
    }

    /// The `2^n` admissible indices, ascending.
    pub fn admissible_indices(&self) -> Vec<u64> {
        let count = 1u64 << self.n;
        let mut out = Vec::with_capacity(count as usize);
        for mask in 0..count {
            let mut i = 0u64;
            let mut pw = 1u64;
            for j in 0..self.n {
                if mask >> j & 1 == 1 {
                    i += pw;
                }
                pw *= self.p;
            }
            out.push(i);
        }
        out.sort_unstable();
        out
    }

    /// Partition the admissible set into `phi`-orbits, ordered by minimal
    /// member, each traversed from its minimal member.
    pub fn orbit_decomposition(&self) -> Result<Vec<Orbit>> {
        let admissible = self.admissible_indices();
        let mut seen = std::collections::BTreeSet::new();
        let mut orbits = vec![];
        for &start in &admissible {
            if seen.contains(&start) {
                continue;
            }
            let mut members = vec![start];
            seen.insert(start);
            let mut cur = self
                .phi(start)?
                .expect("phi is defined on admissible indices");
            while cur != start {
                members.push(cur);
                seen.insert(cur);
                cur = self.phi(cur)?.expect("phi closed on admissible indices");
            }
            orbits.push(Orbit { members });
        }
        // Every orbit length divides 2n and the lengths sum to 2^n.
        let two_n = 2 * self.n as u64;
        let total: u64 = orbits.iter().map(|o| o.len() as u64).sum();
        debug_assert_eq!(total, 1 << self.n);
        debug_assert!(orbits.iter().all(|o| two_n % o.len() as u64 == 0));
        Ok(orbits)
    }

    /// `phi^{2n} = id` on every admissible index, with the stronger check
    /// that `phi^n` is the digit complement.
    pub fn verify_phi_period(&self) -> Result<bool> {
        for &i in &self.admissible_indices() {
            let mut cur = i;
            for _ in 0..self.n {
                cur = match self.phi(cur)? {
                    Some(j) => j,
                    None => return Ok(false),
                };
            }
            let complement: u64 = self
                .digits(i)?
                .iter()
                .enumerate()
                .map(|(j, &d)| (1 - d) * self.p.pow(j as u32))
                .sum();
            if cur != complement {
                return Ok(false);
            }
            for _ in 0..self.n {
                cur = match self.phi(cur)? {
                    Some(j) => j,
                    None => return Ok(false),
                };
            }
            if cur != i {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// One orbit of `phi` on the admissible set, in traversal order from the
/// minimal member. The length always divides `2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    members: Vec<u64>,
}

impl Orbit {
    pub fn rep(&self) -> u64 {
        self.members[0]
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl Serialize for Orbit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Orbit", 3)?;
        st.serialize_field("rep", &self.rep())?;
        st.serialize_field("members", &self.members)?;
        st.serialize_field("length", &self.len())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: u64, n: u32) -> IndexParams {
        IndexParams::new(p, n).unwrap()
    }

    #[test]
    fn digit_examples() {
        let pr = params(3, 2);
        assert_eq!(pr.digits(0).unwrap(), vec![0, 0]);
        assert_eq!(pr.digits(3).unwrap(), vec![0, 1]);
        assert_eq!(pr.digits(5).unwrap(), vec![2, 1]);
        assert!(pr.digits(9).is_err());
    }

    #[test]
    fn phi_tables() {
        let p31 = params(3, 1);
        assert_eq!(p31.phi(0).unwrap(), Some(1));
        assert_eq!(p31.phi(1).unwrap(), Some(0));
        assert_eq!(p31.phi(2).unwrap(), None);
        let p32 = params(3, 2);
        assert_eq!(p32.phi(0).unwrap(), Some(3));
        assert_eq!(p32.phi(3).unwrap(), Some(4));
        assert_eq!(p32.phi(4).unwrap(), Some(1));
        assert_eq!(p32.phi(1).unwrap(), Some(0));
    }

    #[test]
    fn arithmetic_and_digit_forms_agree() {
        for (p, n) in [(3u64, 4u32), (5, 3), (7, 2)] {
            let pr = params(p, n);
            for i in 0..pr.q() {
                assert_eq!(pr.phi(i).unwrap(), pr.phi_digits(i).unwrap(), "i = {i}");
            }
        }
    }

    #[test]
    fn admissible_sets() {
        assert_eq!(params(3, 2).admissible_indices(), vec![0, 1, 3, 4]);
        assert_eq!(params(3, 3).admissible_indices().len(), 8);
        assert_eq!(params(5, 1).admissible_indices(), vec![0, 1]);
        let pr = params(3, 2);
        for i in 0..9 {
            let expected = [0u64, 1, 3, 4].contains(&i);
            assert_eq!(pr.is_admissible(i).unwrap(), expected);
        }
    }

    #[test]
    fn orbit_decompositions() {
        let orbits31 = params(3, 1).orbit_decomposition().unwrap();
        assert_eq!(orbits31.len(), 1);
        assert_eq!(orbits31[0].members(), &[0, 1]);

        let orbits32 = params(3, 2).orbit_decomposition().unwrap();
        assert_eq!(orbits32.len(), 1);
        assert_eq!(orbits32[0].members(), &[0, 3, 4, 1]);

        let orbits33 = params(3, 3).orbit_decomposition().unwrap();
        assert_eq!(orbits33.len(), 2);
        let mut lengths: Vec<usize> = orbits33.iter().map(|o| o.len()).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![2, 6]);
        // The length-2 orbit is {3, 10}: digit strings 010 and 101.
        let small = orbits33.iter().find(|o| o.len() == 2).unwrap();
        assert_eq!(small.members(), &[3, 10]);
    }

    #[test]
    fn phi_period_and_complement() {
        for (p, n) in [(3u64, 1u32), (3, 3), (7, 2)] {
            assert!(params(p, n).verify_phi_period().unwrap(), "(p,n)=({p},{n})");
        }
    }

    #[test]
    fn non_admissible_escape_small() {
        // Indices with a digit > 1 that are still 0/1 mod p must leave the
        // domain of phi within 2n steps.
        for (p, n) in [(3u64, 3u32), (5, 2), (7, 2)] {
            let pr = params(p, n);
            for i in 0..pr.q() {
                if pr.is_admissible(i).unwrap() || i % p > 1 {
                    continue;
                }
                let mut cur = i;
                let mut escaped = false;
                for _ in 0..=2 * n {
                    match pr.phi(cur).unwrap() {
                        Some(j) => cur = j,
                        None => {
                            escaped = true;
                            break;
                        }
                    }
                }
                assert!(escaped, "(p,n)=({p},{n}) i={i} never escaped");
            }
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(IndexParams::new(4, 1).is_err());
        assert!(IndexParams::new(2, 1).is_err());
        assert!(IndexParams::new(3, 0).is_err());
        assert!(IndexParams::new(3, 21).is_err());
    }

    #[test]
    fn orbit_json_shape() {
        let orbits = params(3, 1).orbit_decomposition().unwrap();
        let json = serde_json::to_string(&orbits[0]).unwrap();
        assert_eq!(json, r#"{"rep":0,"members":[0,1],"length":2}"#);
    }
}
