//! Polynomial Hamiltonians over the four-real-dimensional phase space
//! `(x0, p0, x1, p1)`.
//!
//! A Hamiltonian is a finite sum of monomial terms with [`HyperComplex`]
//! coefficients; its four real components `H0..H3` are the components of the
//! evaluated value. Complex-analytic sources (polynomials in one complex
//! position/momentum pair) live in [`AnalyticSpec`] and expand into the
//! two-component form via `x → x0 + i x1`, `p → p0 + i p1`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{HyperComplex, Signature};

mod analytic;
mod parse;

pub use analytic::AnalyticSpec;
pub use parse::{parse_analytic, ParseError};

/// Largest admissible exponent per variable in a monomial.
pub const MAX_EXPONENT: u8 = 8;

/// Errors from Hamiltonian construction and evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HamiltonianError {
    /// A coefficient's signature disagrees with the Hamiltonian's signature.
    #[error("coefficient signature {found:?} differs from spec signature {expected:?}")]
    SignatureMismatch {
        expected: Signature,
        found: Signature,
    },
    /// A monomial exponent exceeds [`MAX_EXPONENT`].
    #[error("exponent {pow} on variable {var} exceeds the maximum of {MAX_EXPONENT}")]
    ExponentTooLarge { var: &'static str, pow: u8 },
    /// Operation requires at most the two components `H0`, `H1`.
    #[error("Hamiltonian has nonzero j/k components; only H0 and H1 are admissible here")]
    NotComplexValued,
    /// A phase-space coordinate was not finite.
    #[error("non-finite phase-space coordinate {var} = {value}")]
    NonFiniteCoordinate { var: &'static str, value: f64 },
}

/// Phase-space variable names in storage order.
pub const VARS: [&str; 4] = ["x0", "p0", "x1", "p1"];

/// A point `(x0, p0, x1, p1)` of the doubled phase space. Coordinates are
/// finite by construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhasePoint {
    pub x0: f64,
    pub p0: f64,
    pub x1: f64,
    pub p1: f64,
}

impl PhasePoint {
    /// Checked constructor; rejects NaN and infinities.
    pub fn try_new(x0: f64, p0: f64, x1: f64, p1: f64) -> Result<Self, HamiltonianError> {
        for (var, value) in VARS.iter().zip([x0, p0, x1, p1]) {
            if !value.is_finite() {
                return Err(HamiltonianError::NonFiniteCoordinate { var, value });
            }
        }
        Ok(Self { x0, p0, x1, p1 })
    }

    /// Panicking constructor for coordinates known to be finite.
    pub fn new(x0: f64, p0: f64, x1: f64, p1: f64) -> Self {
        Self::try_new(x0, p0, x1, p1).expect("phase-space coordinates must be finite")
    }

    #[inline]
    pub const fn coords(&self) -> [f64; 4] {
        [self.x0, self.p0, self.x1, self.p1]
    }

    #[inline]
    pub fn from_coords(c: [f64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }
}

/// One monomial `coeff · x0^a p0^b x1^c p1^d`; `powers` follows [`VARS`]
/// order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Term {
    pub coeff: HyperComplex,
    pub powers: [u8; 4],
}

impl Term {
    pub const fn new(coeff: HyperComplex, powers: [u8; 4]) -> Self {
        Self { coeff, powers }
    }
}

/// A polynomial Hamiltonian: merged, sorted monomials over one signature.
#[derive(Clone, Debug, PartialEq)]
pub struct HamiltonianSpec {
    terms: Vec<Term>,
    sig: Signature,
}

impl HamiltonianSpec {
    /// Build from a term list: validates signatures and exponent bounds,
    /// merges duplicate exponent tuples, drops vanished terms, and sorts for
    /// a canonical order.
    pub fn new(sig: Signature, terms: &[Term]) -> Result<Self, HamiltonianError> {
        let mut merged: BTreeMap<[u8; 4], [f64; 4]> = BTreeMap::new();
        for term in terms {
            if term.coeff.sig() != sig {
                return Err(HamiltonianError::SignatureMismatch {
                    expected: sig,
                    found: term.coeff.sig(),
                });
            }
            for (&var, &pow) in VARS.iter().zip(&term.powers) {
                if pow > MAX_EXPONENT {
                    return Err(HamiltonianError::ExponentTooLarge { var, pow });
                }
            }
            let entry = merged.entry(term.powers).or_insert([0.0; 4]);
            for (acc, c) in entry.iter_mut().zip(term.coeff.components()) {
                *acc += c;
            }
        }
        let terms = merged
            .into_iter()
            .filter(|(_, c)| c.iter().any(|&x| x != 0.0))
            .map(|(powers, c)| Term::new(HyperComplex::from_components(sig, c), powers))
            .collect();
        Ok(Self { terms, sig })
    }

    /// The zero Hamiltonian.
    pub fn zero(sig: Signature) -> Self {
        Self { terms: Vec::new(), sig }
    }

    #[inline]
    pub fn sig(&self) -> Signature {
        self.sig
    }

    /// Canonical term list (sorted by exponent tuple).
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Whether component `m` (0..=3) is the zero polynomial.
    pub fn component_is_zero(&self, m: usize) -> bool {
        self.terms.iter().all(|t| t.coeff.components()[m] == 0.0)
    }

    /// The `H0` part as a new real-coefficient Hamiltonian.
    pub fn real_part(&self) -> Self {
        let terms: Vec<Term> = self
            .terms
            .iter()
            .filter(|t| t.coeff.q0 != 0.0)
            .map(|t| Term::new(HyperComplex::real(self.sig, t.coeff.q0), t.powers))
            .collect();
        Self { terms, sig: self.sig }
    }

    /// Evaluate at a phase point; the result's components are `H0..H3`.
    pub fn eval(&self, s: &PhasePoint) -> HyperComplex {
        self.eval_coords(&s.coords())
    }

    /// All sixteen first partial derivatives at `s`: entry `[m][v]` is
    /// `∂H_m/∂v` with `v` in [`VARS`] order.
    pub fn partials(&self, s: &PhasePoint) -> [[f64; 4]; 4] {
        self.partials_coords(&s.coords())
    }

    /// [`Self::eval`] on a raw coordinate array (integrator hot path, where
    /// intermediate stages may be arbitrarily large).
    pub(crate) fn eval_coords(&self, c: &[f64; 4]) -> HyperComplex {
        let mut acc = HyperComplex::zero(self.sig);
        for term in &self.terms {
            acc = acc + term.coeff * monomial(c, &term.powers);
        }
        acc
    }

    /// [`Self::partials`] on a raw coordinate array.
    pub(crate) fn partials_coords(&self, c: &[f64; 4]) -> [[f64; 4]; 4] {
        let mut out = [[0.0; 4]; 4];
        for term in &self.terms {
            let comps = term.coeff.components();
            for v in 0..4 {
                let n = term.powers[v];
                if n == 0 {
                    continue;
                }
                let mut d = f64::from(n);
                for u in 0..4 {
                    let pow = if u == v { term.powers[u] - 1 } else { term.powers[u] };
                    d *= powi(c[u], pow);
                }
                for m in 0..4 {
                    out[m][v] += comps[m] * d;
                }
            }
        }
        out
    }

    /// Largest violation of the Cauchy–Riemann pairing between `H0` and `H1`
    /// at `s`. Zero (to roundoff) exactly when the pair comes from an
    /// analytic function of `(x0 + i x1, p0 + i p1)`.
    pub fn cr_residual(&self, s: &PhasePoint) -> Result<f64, HamiltonianError> {
        if !(self.component_is_zero(2) && self.component_is_zero(3)) {
            return Err(HamiltonianError::NotComplexValued);
        }
        let p = self.partials(s);
        let (h0, h1) = (p[0], p[1]);
        // Pairings: ∂H0/∂x0 = ∂H1/∂x1, ∂H0/∂x1 = −∂H1/∂x0, and the same
        // with x replaced by p.
        let residuals = [
            h0[0] - h1[2],
            h0[2] + h1[0],
            h0[1] - h1[3],
            h0[3] + h1[1],
        ];
        Ok(residuals.iter().fold(0.0, |acc: f64, r| acc.max(r.abs())))
    }
}

#[inline]
fn powi(base: f64, exp: u8) -> f64 {
    let mut out = 1.0;
    for _ in 0..exp {
        out *= base;
    }
    out
}

fn monomial(coords: &[f64; 4], powers: &[u8; 4]) -> f64 {
    coords
        .iter()
        .zip(powers)
        .fold(1.0, |acc, (&c, &p)| acc * powi(c, p))
}
