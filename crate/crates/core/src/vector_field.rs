//! Polynomial vector fields `X = Σ P_a ∂/∂x_a` acting as derivations.

use alloc::vec::Vec;

use crate::linalg::QMatrix;
use crate::module::ModuleElement;
use crate::poly::Polynomial;
use crate::{Error, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VectorField {
    nvars: usize,
    coefficients: Vec<Polynomial>,
}

impl VectorField {
    pub fn new(coefficients: Vec<Polynomial>) -> Result<Self, Error> {
        let n = coefficients.len();
        if coefficients.iter().any(|p| p.nvars() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: coefficients.iter().map(Polynomial::nvars).find(|&m| m != n).unwrap_or(n),
            });
        }
        Ok(VectorField { nvars: n, coefficients })
    }

    pub fn zero(nvars: usize) -> Self {
        VectorField { nvars, coefficients: (0..nvars).map(|_| Polynomial::zero(nvars)).collect() }
    }

    /// The coordinate field `∂/∂x_i`.
    pub fn coordinate(nvars: usize, i: usize) -> Self {
        let mut x = VectorField::zero(nvars);
        x.coefficients[i] = Polynomial::one(nvars);
        x
    }

    /// `f · ∂/∂x_i`
    pub fn from_component(f: Polynomial, i: usize) -> Self {
        let mut x = VectorField::zero(f.nvars());
        x.coefficients[i] = f;
        x
    }

    /// The Euler field `Σ x_a ∂/∂x_a`.
    pub fn euler(nvars: usize) -> Self {
        VectorField { nvars, coefficients: (0..nvars).map(|a| Polynomial::var(nvars, a)).collect() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coefficients
    }

    pub fn coefficient(&self, a: usize) -> &Polynomial {
        &self.coefficients[a]
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Polynomial::is_zero)
    }

    /// `X[f] = Σ P_a ∂f/∂x_a`
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (a, p) in self.coefficients.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let d = f.derivative(a);
            if !d.is_zero() {
                out += &(p * &d);
            }
        }
        out
    }

    /// `[X, Y]^a = X[Y^a] − Y[X^a]`
    pub fn bracket(&self, other: &VectorField) -> Result<VectorField, Error> {
        if self.nvars != other.nvars {
            return Err(Error::MixedAmbient);
        }
        let coefficients = (0..self.nvars)
            .map(|a| &self.apply(&other.coefficients[a]) - &other.apply(&self.coefficients[a]))
            .collect();
        Ok(VectorField { nvars: self.nvars, coefficients })
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        VectorField {
            nvars: self.nvars,
            coefficients: self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &VectorField) -> VectorField {
        VectorField {
            nvars: self.nvars,
            coefficients: self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> VectorField {
        VectorField { nvars: self.nvars, coefficients: self.coefficients.iter().map(|a| a * f).collect() }
    }

    pub fn scale(&self, c: &Rational) -> VectorField {
        VectorField { nvars: self.nvars, coefficients: self.coefficients.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn eval(&self, point: &[Rational]) -> Vec<Rational> {
        self.coefficients.iter().map(|p| p.eval(point)).collect()
    }

    pub fn vanishes_at(&self, point: &[Rational]) -> bool {
        use num_traits::Zero;
        self.eval(point).iter().all(Zero::is_zero)
    }

    /// Jacobian at `point`, `J_ab = ∂X^a/∂x_b`; the linearized field acts as `u ↦ J·u`.
    pub fn jacobian_at(&self, point: &[Rational]) -> QMatrix {
        let mut j = QMatrix::zero(self.nvars, self.nvars);
        for a in 0..self.nvars {
            for b in 0..self.nvars {
                j.set(a, b, self.coefficients[a].derivative(b).eval(point));
            }
        }
        j
    }

    pub fn to_module_element(&self) -> ModuleElement {
        ModuleElement::new(self.nvars, self.coefficients.clone()).expect("uniform arity")
    }

    pub fn from_module_element(v: &ModuleElement) -> Result<VectorField, Error> {
        VectorField::new(v.components().to_vec())
    }
}

/// `Σ coeffs_i · fields_i`
pub fn combination(coeffs: &[Polynomial], fields: &[VectorField]) -> VectorField {
    let n = fields.first().map(VectorField::nvars).expect("combination of no fields");
    let mut acc = VectorField::zero(n);
    for (c, x) in coeffs.iter().zip(fields) {
        if !c.is_zero() {
            acc = acc.add(&x.mul_poly(c));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn bracket_examples() {
        let (x, y) = (Polynomial::var(2, 0), Polynomial::var(2, 1));
        let x_dy = VectorField::from_component(x.clone(), 1);
        let y_dx = VectorField::from_component(y.clone(), 0);
        let expected = VectorField::new(vec![x.clone(), -&y]).unwrap();
        assert_eq!(x_dy.bracket(&y_dx).unwrap(), expected);

        let dx = VectorField::coordinate(2, 0);
        let x_dx = VectorField::from_component(x.clone(), 0);
        assert_eq!(dx.bracket(&x_dx).unwrap(), dx);
        assert!(x_dy.bracket(&x_dy).unwrap().is_zero());
    }

    #[test]
    fn jacobian_convention() {
        // x ∂y has Jacobian E_{21}
        let x = Polynomial::var(2, 0);
        let f = VectorField::from_component(x, 1);
        let j = f.jacobian_at(&[crate::poly::int(0), crate::poly::int(0)]);
        assert_eq!(j.get(1, 0), &crate::poly::int(1));
        assert_eq!(j.get(0, 1), &crate::poly::int(0));
    }

    #[test]
    fn mixed_ambient() {
        assert_eq!(VectorField::zero(2).bracket(&VectorField::zero(3)).unwrap_err(), Error::MixedAmbient);
    }
}
