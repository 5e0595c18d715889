//! Polynomial form of unary functions over GF(p).
//!
//! Every `h: E_p -> E_p` with `p` prime is a unique polynomial of degree at
//! most `p - 1`, obtained here by Lagrange interpolation through the points
//! `(x, h(x))`, `x = 0, ..., p - 1`. Composite orders are rejected: `Z_k` is
//! not a field and the Vandermonde system can be singular.

use std::fmt;

use crate::arith::{add_mod, inv_mod, is_prime, mul_mod, sub_mod};
use crate::error::{Error, Result};
use crate::function::TruthTable;

/// `c_0 + c_1 x + ... + c_{p-1} x^{p-1}` over GF(p), coefficients reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnaryPolynomial {
    modulus: u8,
    coefficients: Vec<u8>,
}

impl UnaryPolynomial {
    /// Pads or rejects `coefficients` to exactly `p` entries, each in `E_p`.
    pub fn new(modulus: u8, mut coefficients: Vec<u8>) -> Result<Self> {
        if !is_prime(modulus) {
            return Err(Error::NonPrimeModulus(modulus));
        }
        if coefficients.len() > usize::from(modulus) {
            return Err(Error::domain(format!(
                "degree {} exceeds {}",
                coefficients.len() - 1,
                modulus - 1
            )));
        }
        if let Some(c) = coefficients.iter().find(|&&c| c >= modulus) {
            return Err(Error::domain(format!("coefficient {c} is not in E_{modulus}")));
        }
        coefficients.resize(usize::from(modulus), 0);
        Ok(UnaryPolynomial {
            modulus,
            coefficients,
        })
    }

    pub fn modulus(&self) -> u8 {
        self.modulus
    }

    /// `c_j` is the coefficient of `x^j`; always `p` entries.
    pub fn coefficients(&self) -> &[u8] {
        &self.coefficients
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.iter().rposition(|&c| c != 0)
    }
}

impl fmt::Display for UnaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, c)| match j {
                0 => c.to_string(),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{j}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0 mod {}", self.modulus)
        } else {
            write!(f, "{} mod {}", terms.join(" + "), self.modulus)
        }
    }
}

/// The interpolating polynomial of a unary table over prime `k`.
pub fn interpolate_unary(table: &TruthTable) -> Result<UnaryPolynomial> {
    if table.arity() != 1 {
        return Err(Error::Arity {
            expected: 1,
            got: table.arity(),
        });
    }
    let p = table.order();
    if !is_prime(p) {
        return Err(Error::NonPrimeModulus(p));
    }
    let mut coefficients = vec![0u8; usize::from(p)];
    for (i, &y) in (0..p).zip(table.values()) {
        if y == 0 {
            continue;
        }
        // basis numerator: prod_{j != i} (x - j), built by repeated multiplication
        let mut basis = vec![1u8];
        let mut denom = 1u8;
        for j in (0..p).filter(|&j| j != i) {
            let neg_j = sub_mod(0, j, p);
            let mut next = vec![0u8; basis.len() + 1];
            for (d, &c) in basis.iter().enumerate() {
                next[d + 1] = add_mod(next[d + 1], c, p);
                next[d] = add_mod(next[d], mul_mod(c, neg_j, p), p);
            }
            basis = next;
            denom = mul_mod(denom, sub_mod(i, j, p), p);
        }
        let scale = mul_mod(y, inv_mod(denom, p), p);
        for (acc, &c) in coefficients.iter_mut().zip(&basis) {
            *acc = add_mod(*acc, mul_mod(scale, c, p), p);
        }
    }
    UnaryPolynomial::new(p, coefficients)
}

/// Horner evaluation of `poly` at `x`.
pub fn eval_polynomial(poly: &UnaryPolynomial, x: u8) -> Result<u8> {
    let p = poly.modulus;
    if x >= p {
        return Err(Error::domain(format!("{x} is not in E_{p}")));
    }
    Ok(poly
        .coefficients
        .iter()
        .rev()
        .fold(0u8, |acc, &c| add_mod(mul_mod(acc, x, p), c, p)))
}
