//! Homogeneous sections of `E_{-•}`, multibrackets extended to polynomial
//! coefficients, and the higher Jacobi residual.
//!
//! Conventions: `E_{-i}` sits in degree `−i`, every `ℓ_k` has degree `+1` and
//! is graded symmetric. `ℓ_2` satisfies the anchored Leibniz rule in each
//! argument of degree `−1`; all other brackets are linear over functions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::signs::koszul_sign;
use crate::poly::Polynomial;
use crate::vector_field::VectorField;
use crate::{Error, Rational};

/// `Σ_I f_I ∂_I` in a single degree. Basis indices are model-specific keys
/// (sorted multi-indices for the Koszul model, one-element indices otherwise).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedElement {
    pub degree: i32,
    pub nvars: usize,
    pub combination: BTreeMap<Vec<usize>, Polynomial>,
}

impl GradedElement {
    pub fn zero(nvars: usize, degree: i32) -> Self {
        GradedElement { degree, nvars, combination: BTreeMap::new() }
    }

    pub fn basis(nvars: usize, degree: i32, index: Vec<usize>) -> Self {
        GradedElement::term(degree, index, Polynomial::one(nvars))
    }

    pub fn term(degree: i32, index: Vec<usize>, coefficient: Polynomial) -> Self {
        let mut g = GradedElement::zero(coefficient.nvars(), degree);
        g.add_term(index, coefficient);
        g
    }

    pub fn is_zero(&self) -> bool {
        self.combination.is_empty()
    }

    pub fn coefficient(&self, index: &[usize]) -> Polynomial {
        self.combination.get(index).cloned().unwrap_or_else(|| Polynomial::zero(self.nvars))
    }

    pub fn add_term(&mut self, index: Vec<usize>, coefficient: Polynomial) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.combination.entry(index.clone()).or_insert_with(|| Polynomial::zero(coefficient.nvars()));
        *entry += &coefficient;
        if entry.is_zero() {
            self.combination.remove(&index);
        }
    }

    pub fn add_assign(&mut self, other: &GradedElement) {
        for (k, v) in &other.combination {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> GradedElement {
        let mut out = GradedElement::zero(self.nvars, self.degree);
        for (k, v) in &self.combination {
            out.add_term(k.clone(), v * f);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> GradedElement {
        let mut out = GradedElement::zero(self.nvars, self.degree);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.combination {
            out.add_term(k.clone(), v.scale(c));
        }
        out
    }

    pub fn neg(&self) -> GradedElement {
        self.scale(&-Rational::from_integer(1.into()))
    }
}

/// A Lie∞-algebroid given by its brackets on basis elements.
pub trait LinftyStructure {
    fn nvars(&self) -> usize;
    /// Highest bracket arity that can be evaluated.
    fn available_arity(&self) -> usize;
    /// The lowest nonzero degree `−length`.
    fn min_degree(&self) -> i32;
    /// `ρ` of a basis element of `E_{-1}`.
    fn anchor(&self, index: &[usize]) -> VectorField;
    /// `ℓ_k` on basis elements (constant coefficients).
    fn bracket_on_basis(&self, args: &[(i32, &[usize])]) -> GradedElement;
}

fn in_range<L: LinftyStructure + ?Sized>(l: &L, degree: i32) -> bool {
    degree <= -1 && degree >= l.min_degree()
}

/// `ℓ_k(args)` with polynomial coefficients.
pub fn bracket<L: LinftyStructure + ?Sized>(l: &L, args: &[GradedElement]) -> GradedElement {
    let nvars = l.nvars();
    let degree = args.iter().map(|a| a.degree).sum::<i32>() + 1;
    let mut out = GradedElement::zero(nvars, degree);
    if !in_range(l, degree) || args.iter().any(GradedElement::is_zero) {
        return out;
    }
    let k = args.len();
    let terms: Vec<Vec<(&Vec<usize>, &Polynomial)>> = args.iter().map(|a| a.combination.iter().collect()).collect();
    let mut choice = alloc::vec![0usize; k];
    loop {
        let basis: Vec<(i32, &[usize])> = (0..k).map(|s| (args[s].degree, terms[s][choice[s]].0.as_slice())).collect();
        let coeffs: Vec<&Polynomial> = (0..k).map(|s| terms[s][choice[s]].1).collect();
        let value = l.bracket_on_basis(&basis);
        let mut product = Polynomial::one(nvars);
        for c in &coeffs {
            product = &product * *c;
        }
        out.add_assign(&value.mul_poly(&product));
        if k == 2 {
            let (x, y) = (basis[0], basis[1]);
            let (f, g) = (coeffs[0], coeffs[1]);
            // ℓ2(f x, g y) ∋ f ρ(x)[g] y + (−1)^{|x||y|} g ρ(y)[f] x
            if x.0 == -1 {
                let t = f * &l.anchor(x.1).apply(g);
                out.add_term(y.1.to_vec(), t);
            }
            if y.0 == -1 {
                let t = g * &l.anchor(y.1).apply(f);
                let t = if (x.0 * y.0) % 2 != 0 { -t } else { t };
                out.add_term(x.1.to_vec(), t);
            }
        }
        let mut s = 0;
        loop {
            if s == k {
                return out;
            }
            choice[s] += 1;
            if choice[s] < terms[s].len() {
                break;
            }
            choice[s] = 0;
            s += 1;
        }
    }
}

/// `Σ_i Σ_σ ε(σ) ℓ_{n−i+1}(ℓ_i(e_σ(1), …, e_σ(i)), e_σ(i+1), …, e_σ(n))` over unshuffles.
pub fn higher_jacobi_residual<L: LinftyStructure + ?Sized>(
    l: &L,
    args: &[GradedElement],
    n: usize,
) -> Result<GradedElement, Error> {
    if n > l.available_arity() {
        return Err(Error::ArityUnavailable { requested: n, available: l.available_arity() });
    }
    if args.len() != n {
        return Err(Error::WrongLength { expected: n, found: args.len() });
    }
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let degrees: Vec<i32> = args.iter().map(|a| a.degree).collect();
    let total = degrees.iter().sum::<i32>() + 2;
    let mut out = GradedElement::zero(l.nvars(), total);
    for i in 1..=n {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != i {
                continue;
            }
            let chosen: Vec<usize> = (0..n).filter(|&p| mask & (1 << p) != 0).collect();
            let rest: Vec<usize> = (0..n).filter(|&p| mask & (1 << p) == 0).collect();
            let mut perm = chosen.clone();
            perm.extend(rest.iter().copied());
            let sign = koszul_sign(&degrees, &perm);
            let inner_args: Vec<GradedElement> = chosen.iter().map(|&p| args[p].clone()).collect();
            let inner = bracket(l, &inner_args);
            let mut outer_args = alloc::vec![inner];
            outer_args.extend(rest.iter().map(|&p| args[p].clone()));
            let value = bracket(l, &outer_args);
            if sign < 0 {
                out.add_assign(&value.neg());
            } else {
                out.add_assign(&value);
            }
        }
    }
    Ok(out)
}
