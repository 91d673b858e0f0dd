//! Dense univariate polynomials in `N` with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul};

use serde::Serialize;

use crate::rational::Rational;

/// Coefficients lowest degree first, trailing zeros trimmed. The zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    /// `c * N^exp`.
    pub fn monomial(c: Rational, exp: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = c;
        Polynomial::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> Rational {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Lagrange interpolation through `(x_i, y_i)` with distinct `x_i`.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Polynomial::from_integers(&[1]);
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis * Polynomial::new(vec![-xj.clone(), Rational::one()]);
                denom *= &(xi - xj);
            }
            out = out + basis.scale(&(yi / &denom));
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.coeffs.iter().map(Rational::to_string).collect();
        write!(f, "[{}]", list.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_evaluates() {
        let p = Polynomial::from_integers(&[1, 0, 2, 0, 0]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(&Rational::from(3)), Rational::from(19));
        assert_eq!(Polynomial::from_integers(&[0, 0]).degree(), None);
        assert_eq!(p.to_string(), "[1/1, 0/1, 2/1]");
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = Polynomial::new(vec![
            Rational::new(-1, 12),
            Rational::new(1, 3),
            Rational::zero(),
            Rational::new(5, 7),
        ]);
        let points: Vec<_> = (0..4)
            .map(|x| {
                let x = Rational::from(x);
                let y = p.eval(&x);
                (x, y)
            })
            .collect();
        assert_eq!(Polynomial::interpolate(&points), p);
    }

    #[test]
    fn arithmetic() {
        let a = Polynomial::from_integers(&[1, 1]);
        let b = Polynomial::from_integers(&[-1, 1]);
        assert_eq!(
            a.clone() * b.clone(),
            Polynomial::from_integers(&[-1, 0, 1])
        );
        assert_eq!(a + b, Polynomial::from_integers(&[0, 2]));
    }
}
