//! Complex-polynomial Hamiltonians `H(x, p)` and their expansion over the
//! doubled phase space.
//!
//! Expansion substitutes `x → x0 + i x1` and `p → p0 + i p1`, with the
//! coefficient imaginary unit mapped to the algebra's `i`; the real and
//! imaginary parts of the result are the `H0`/`H1` components of the
//! produced [`HamiltonianSpec`], and the pair satisfies the Cauchy–Riemann
//! conditions by construction.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::algebra::{HyperComplex, Signature};

use super::{HamiltonianError, HamiltonianSpec, Term, MAX_EXPONENT};

/// A polynomial in one complex position/momentum pair with complex
/// coefficients, keyed by `(x power, p power)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AnalyticSpec {
    terms: BTreeMap<(u8, u8), Complex64>,
}

impl AnalyticSpec {
    /// Build from `(x power, p power, coefficient)` triples; duplicates are
    /// merged and vanished terms are dropped.
    pub fn new(terms: &[(u8, u8, Complex64)]) -> Result<Self, HamiltonianError> {
        let mut merged: BTreeMap<(u8, u8), Complex64> = BTreeMap::new();
        for &(xp, pp, c) in terms {
            if xp > MAX_EXPONENT {
                return Err(HamiltonianError::ExponentTooLarge { var: "x", pow: xp });
            }
            if pp > MAX_EXPONENT {
                return Err(HamiltonianError::ExponentTooLarge { var: "p", pow: pp });
            }
            *merged.entry((xp, pp)).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        merged.retain(|_, c| c.re != 0.0 || c.im != 0.0);
        Ok(Self { terms: merged })
    }

    pub fn terms(&self) -> impl Iterator<Item = (u8, u8, Complex64)> + '_ {
        self.terms.iter().map(|(&(a, b), &c)| (a, b, c))
    }

    /// Expand over the doubled phase space for the given target signature.
    ///
    /// `c x^a p^b` becomes `c Σₘ Σₙ C(a,m) C(b,n) i^{m+n} x0^{a−m} x1^m
    /// p0^{b−n} p1^n`; the complex arithmetic stays inside the `(1, i)`
    /// subalgebra, so the output has only `H0` and `H1` components.
    pub fn expand(&self, sig: Signature) -> HamiltonianSpec {
        let mut acc: BTreeMap<[u8; 4], Complex64> = BTreeMap::new();
        for (&(xp, pp), &c) in &self.terms {
            for m in 0..=xp {
                for n in 0..=pp {
                    let coeff = c
                        * binomial(xp, m)
                        * binomial(pp, n)
                        * Complex64::i().powu(u32::from(m) + u32::from(n));
                    let powers = [xp - m, pp - n, m, n];
                    *acc.entry(powers).or_insert(Complex64::new(0.0, 0.0)) += coeff;
                }
            }
        }
        let terms: Vec<Term> = acc
            .into_iter()
            .map(|(powers, c)| {
                Term::new(HyperComplex::new(sig, c.re, c.im, 0.0, 0.0), powers)
            })
            .collect();
        HamiltonianSpec::new(sig, &terms).expect("expansion preserves exponent bounds")
    }
}

fn binomial(n: u8, k: u8) -> f64 {
    let mut out = 1.0;
    for i in 0..k {
        out = out * f64::from(n - i) / f64::from(i + 1);
    }
    out
}
