//! Monomial model of the cohomology of a product of hyperelliptic curves.
//!
//! A factor `C_g` contributes the letters `1`, `ω_1 … ω_g`, `ω̄_1 … ω̄_g` and
//! the fundamental class `Ω`. A monomial picks one letter per factor; the
//! product `ω_l ∧ ω̄_m` on a single factor is a multiple of `Ω`, so it never
//! appears as a separate basis element.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::diamond::FormalHodgeDiamond;
use crate::error::{Error, Result};
use crate::scalar::HodgeInt;

/// The hyperelliptic curve `y² = x^{2g+1} + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CurveSpec {
    pub genus: u32,
}

impl CurveSpec {
    pub fn new(genus: u32) -> Self {
        Self { genus }
    }

    /// Order of the automorphism `ψ_g`.
    pub fn psi_order(self) -> u64 {
        2 * u64::from(self.genus) + 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    One,
    Hol(u32),
    AntiHol(u32),
    Top,
}

impl Letter {
    pub fn bidegree(self) -> (usize, usize) {
        match self {
            Letter::One => (0, 0),
            Letter::Hol(_) => (1, 0),
            Letter::AntiHol(_) => (0, 1),
            Letter::Top => (1, 1),
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Letter::Hol(_) | Letter::AntiHol(_))
    }

    pub fn conjugate(self) -> Self {
        match self {
            Letter::Hol(l) => Letter::AntiHol(l),
            Letter::AntiHol(l) => Letter::Hol(l),
            other => other,
        }
    }

    /// All letters of a curve of genus `g`, in basis order.
    pub fn all(genus: u32) -> impl Iterator<Item = Letter> {
        std::iter::once(Letter::One)
            .chain((1..=genus).map(Letter::Hol))
            .chain((1..=genus).map(Letter::AntiHol))
            .chain(std::iter::once(Letter::Top))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::One => write!(f, "1"),
            Letter::Hol(l) => write!(f, "w{l}"),
            Letter::AntiHol(l) => write!(f, "wbar{l}"),
            Letter::Top => write!(f, "W"),
        }
    }
}

/// One letter per factor, ordered by factor index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<Letter>);

impl Monomial {
    pub fn unit(k: usize) -> Self {
        Monomial(vec![Letter::One; k])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn bidegree(&self) -> (usize, usize) {
        self.0.iter().fold((0, 0), |(p, q), l| {
            let (dp, dq) = l.bidegree();
            (p + dp, q + dq)
        })
    }

    pub fn conjugate(&self) -> Self {
        Monomial(self.0.iter().map(|l| l.conjugate()).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Letter::to_string).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

/// An exact root of unity `ζ_m^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    exp: u64,
    modulus: u64,
}

impl Scalar {
    pub fn one(modulus: u64) -> Self {
        Self { exp: 0, modulus }
    }

    pub fn from_exp(exp: u64, modulus: u64) -> Self {
        Self { exp: exp % modulus, modulus }
    }

    /// `-1`; needs an even modulus.
    pub fn minus_one(modulus: u64) -> Self {
        debug_assert!(modulus % 2 == 0);
        Self { exp: modulus / 2, modulus }
    }

    pub fn exp(self) -> u64 {
        self.exp
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_one(self) -> bool {
        self.exp == 0
    }

    pub fn mul(self, other: Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Self::from_exp(self.exp + other.exp, self.modulus)
    }
}

/// `C_{g_1} × … × C_{g_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProductSpace {
    factors: Vec<CurveSpec>,
}

impl ProductSpace {
    pub fn new(genera: &[u32]) -> Self {
        Self { factors: genera.iter().map(|&g| CurveSpec::new(g)).collect() }
    }

    /// `C_g^k`.
    pub fn power(genus: u32, k: usize) -> Self {
        Self::new(&vec![genus; k])
    }

    pub fn point() -> Self {
        Self { factors: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[CurveSpec] {
        &self.factors
    }

    pub fn genera(&self) -> Vec<u32> {
        self.factors.iter().map(|c| c.genus).collect()
    }

    pub fn product(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Self { factors }
    }

    /// The modulus `m = lcm_j 2(2g_j + 1)` of all scalars on this space.
    pub fn modulus(&self) -> u64 {
        self.factors.iter().fold(2, |m, c| m.lcm(&(2 * c.psi_order())))
    }

    /// All monomials of bidegree `(p, q)`, in lexicographic letter order.
    pub fn basis(&self, p: usize, q: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.dim());
        self.basis_rec(0, p, q, &mut current, &mut out);
        out
    }

    fn basis_rec(&self, i: usize, p: usize, q: usize, current: &mut Vec<Letter>, out: &mut Vec<Monomial>) {
        let k = self.dim();
        if i == k {
            if p == 0 && q == 0 {
                out.push(Monomial(current.clone()));
            }
            return;
        }
        let left = k - i;
        if p > left || q > left {
            return;
        }
        for letter in Letter::all(self.factors[i].genus) {
            let (dp, dq) = letter.bidegree();
            if dp <= p && dq <= q {
                current.push(letter);
                self.basis_rec(i + 1, p - dp, q - dq, current, out);
                current.pop();
            }
        }
    }

    /// `|basis(p, q)|` without enumerating.
    pub fn basis_count(&self, p: usize, q: usize) -> u128 {
        let d: FormalHodgeDiamond<i128> = self.hodge_numbers();
        if p > self.dim() || q > self.dim() {
            0
        } else {
            *d.get(p, q) as u128
        }
    }

    /// Iterated Künneth product of the curve diamonds.
    pub fn hodge_numbers<T: HodgeInt>(&self) -> FormalHodgeDiamond<T> {
        self.factors.iter().fold(FormalHodgeDiamond::point(), |acc, c| {
            acc.kunneth(&FormalHodgeDiamond::curve(T::from_u64_exact(u64::from(c.genus))))
        })
    }

    /// Checks that `m` has one admissible letter per factor.
    pub fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.0.len() != self.dim() {
            return Err(Error::Contract(format!(
                "monomial has {} letters on a {}-fold product",
                m.0.len(),
                self.dim()
            )));
        }
        for (letter, curve) in m.0.iter().zip(&self.factors) {
            if let Letter::Hol(l) | Letter::AntiHol(l) = letter {
                if *l == 0 || *l > curve.genus {
                    return Err(Error::Contract(format!("letter {letter} on a genus {} curve", curve.genus)));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(ProductSpace::power(1, 2).basis(2, 0).len(), 1);
        for g in 0..5 {
            assert_eq!(ProductSpace::power(g, 1).basis(1, 0).len(), g as usize);
        }
        assert_eq!(ProductSpace::power(1, 3).basis(1, 1).len(), 9);
    }

    #[test]
    fn elliptic_square_has_four_classes_of_type_one_one() {
        let s = ProductSpace::power(1, 2);
        assert_eq!(s.basis(1, 1).len(), 4);
        assert_eq!(*s.hodge_numbers::<i64>().get(1, 1), 4);
    }

    #[test]
    fn first_betti_number_adds_genera() {
        let d = ProductSpace::new(&[2, 3]).hodge_numbers::<i64>();
        assert_eq!(*d.betti().get(1), 10);
    }

    #[test]
    fn modulus_covers_signs_and_all_psi_orders() {
        assert_eq!(ProductSpace::new(&[1, 2]).modulus(), 30);
        assert_eq!(ProductSpace::new(&[0]).modulus(), 2);
        assert_eq!(ProductSpace::point().modulus(), 2);
    }

    #[test]
    fn bidegree_of_basis_elements() {
        let s = ProductSpace::new(&[2, 1, 0]);
        for p in 0..=3 {
            for q in 0..=3 {
                for m in s.basis(p, q) {
                    assert_eq!(m.bidegree(), (p, q));
                    s.check_monomial(&m).unwrap();
                }
            }
        }
    }
}
