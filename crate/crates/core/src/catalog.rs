//! Generator lists for standard families of polynomial foliations.

use alloc::string::String;
use alloc::vec::Vec;

use crate::foliation::FoliationPresentation;
use crate::module::ModuleElement;
use crate::poly::{default_var_names, Monomial, Polynomial};
use crate::syzygy::syzygies;
use crate::vector_field::VectorField;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExampleKind {
    /// Vector fields vanishing to order `k` at the origin of `Q^n`:
    /// `x^α ∂_j` for all `|α| = k`.
    VanishingOrder { n: usize, k: u32 },
    /// Infinitesimal rotations `x_j ∂_i − x_i ∂_j`, `i < j`.
    SpecialOrthogonal { n: usize },
    /// `φ_j ∂_i − φ_i ∂_j`, `i < j`, all annihilating `φ`.
    AnnihilatorOf { vars: Vec<String>, phi: Polynomial },
    /// `φ_a ∂_j`: vector fields vanishing on the zero set of the ideal.
    VanishingOnIdeal { vars: Vec<String>, ideal: Vec<Polynomial> },
    /// Generators of `{X : X[φ_a] ∈ (φ_1 … φ_k) for all a}`.
    TangentToIdeal { vars: Vec<String>, ideal: Vec<Polynomial> },
    /// `t^{d_i} X_i` on `Q × Q^n`, with `t` prepended to the coordinates.
    Filtered { base: FoliationPresentation, degrees: Vec<u32> },
}

pub fn make_example(kind: &ExampleKind) -> Result<FoliationPresentation, Error> {
    match kind {
        ExampleKind::VanishingOrder { n, k } => vanishing_order(*n, *k),
        ExampleKind::SpecialOrthogonal { n } => special_orthogonal(*n),
        ExampleKind::AnnihilatorOf { vars, phi } => annihilator_of(vars, phi),
        ExampleKind::VanishingOnIdeal { vars, ideal } => vanishing_on_ideal(vars, ideal),
        ExampleKind::TangentToIdeal { vars, ideal } => tangent_to_ideal(vars, ideal),
        ExampleKind::Filtered { base, degrees } => filtered(base, degrees),
    }
}

/// Exponent vectors of total degree `k` in `n` variables, lex-descending.
fn monomials_of_degree(n: usize, k: u32) -> Vec<Monomial> {
    fn rec(n: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == n - 1 {
            prefix.push(k);
            out.push(Monomial::from_exponents(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=k).rev() {
            prefix.push(e);
            rec(n, k - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

pub fn vanishing_order(n: usize, k: u32) -> Result<FoliationPresentation, Error> {
    if n == 0 {
        return Err(Error::BadParams("n must be positive".into()));
    }
    let mut gens = Vec::new();
    for m in monomials_of_degree(n, k) {
        for j in 0..n {
            gens.push(VectorField::from_component(Polynomial::monomial(m.clone(), crate::poly::int(1)), j));
        }
    }
    FoliationPresentation::new(default_var_names(n), gens)
}

pub fn special_orthogonal(n: usize) -> Result<FoliationPresentation, Error> {
    if n < 2 {
        return Err(Error::BadParams("so(n) needs n >= 2".into()));
    }
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let a = VectorField::from_component(Polynomial::var(n, j), i);
            let b = VectorField::from_component(Polynomial::var(n, i), j);
            gens.push(a.sub(&b));
        }
    }
    FoliationPresentation::new(default_var_names(n), gens)
}

fn check_ring(vars: &[String], polys: &[Polynomial]) -> Result<(), Error> {
    if vars.is_empty() {
        return Err(Error::BadParams("no variables".into()));
    }
    if polys.iter().any(|p| p.nvars() != vars.len()) {
        return Err(Error::BadParams("polynomial ring does not match the variables".into()));
    }
    Ok(())
}

pub fn annihilator_of(vars: &[String], phi: &Polynomial) -> Result<FoliationPresentation, Error> {
    check_ring(vars, core::slice::from_ref(phi))?;
    if phi.is_constant() {
        return Err(Error::BadParams("phi must be nonconstant".into()));
    }
    let n = vars.len();
    if n < 2 {
        return Err(Error::BadParams("annihilator needs at least two variables".into()));
    }
    let grad: Vec<Polynomial> = (0..n).map(|i| phi.derivative(i)).collect();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            gens.push(anchor_pair(&grad, i, j));
        }
    }
    FoliationPresentation::new(vars.to_vec(), gens)
}

/// `φ_j ∂_i − φ_i ∂_j` from the gradient of `φ`.
pub(crate) fn anchor_pair(grad: &[Polynomial], i: usize, j: usize) -> VectorField {
    VectorField::from_component(grad[j].clone(), i).sub(&VectorField::from_component(grad[i].clone(), j))
}

pub fn vanishing_on_ideal(vars: &[String], ideal: &[Polynomial]) -> Result<FoliationPresentation, Error> {
    check_ring(vars, ideal)?;
    if ideal.is_empty() {
        return Err(Error::BadParams("empty ideal".into()));
    }
    let mut gens = Vec::new();
    for phi in ideal {
        for j in 0..vars.len() {
            gens.push(VectorField::from_component(phi.clone(), j));
        }
    }
    FoliationPresentation::new(vars.to_vec(), gens)
}

/// Solves `Σ_j P_j ∂_jφ_a = Σ_b Q_ab φ_b` for all `a` as one syzygy
/// computation in `O^k`, keeping the `P` block.
pub fn tangent_to_ideal(vars: &[String], ideal: &[Polynomial]) -> Result<FoliationPresentation, Error> {
    check_ring(vars, ideal)?;
    if ideal.is_empty() {
        return Err(Error::BadParams("empty ideal".into()));
    }
    let (n, k) = (vars.len(), ideal.len());
    let mut cols: Vec<ModuleElement> = Vec::new();
    for j in 0..n {
        cols.push(ModuleElement::new(n, ideal.iter().map(|phi| phi.derivative(j)).collect())?);
    }
    for a in 0..k {
        for phi in ideal {
            let mut comps: Vec<Polynomial> = (0..k).map(|_| Polynomial::zero(n)).collect();
            comps[a] = phi.clone();
            cols.push(ModuleElement::new(n, comps)?);
        }
    }
    let mut gens: Vec<VectorField> = Vec::new();
    for s in syzygies(&cols)? {
        let x = VectorField::new(s.components()[..n].to_vec())?;
        if !x.is_zero() && !gens.contains(&x) {
            gens.push(x);
        }
    }
    if gens.is_empty() {
        gens.push(VectorField::zero(n));
    }
    FoliationPresentation::new(vars.to_vec(), gens)
}

pub fn filtered(base: &FoliationPresentation, degrees: &[u32]) -> Result<FoliationPresentation, Error> {
    if degrees.len() != base.generator_count() {
        return Err(Error::BadParams("one degree per generator is required".into()));
    }
    let n = base.nvars() + 1;
    let mut vars = alloc::vec![String::from("t")];
    vars.extend(base.vars().iter().cloned());
    if base.vars().iter().any(|v| v == "t") {
        return Err(Error::BadParams("base foliation already uses the name t".into()));
    }
    let lift = |p: &Polynomial| {
        let images: Vec<Polynomial> = (1..n).map(|i| Polynomial::var(n, i)).collect();
        p.compose(&images)
    };
    let t = Polynomial::var(n, 0);
    let mut gens = Vec::new();
    for (x, &d) in base.generators().iter().zip(degrees) {
        let td = t.pow(d);
        let mut coeffs = alloc::vec![Polynomial::zero(n)];
        coeffs.extend(x.coefficients().iter().map(|c| &lift(c) * &td));
        gens.push(VectorField::new(coeffs)?);
    }
    FoliationPresentation::new(vars, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn names(n: usize) -> Vec<String> {
        default_var_names(n)
    }

    #[test]
    fn vanishing_order_generators() {
        let f = vanishing_order(2, 1).unwrap();
        let (x, y) = (Polynomial::var(2, 0), Polynomial::var(2, 1));
        let expected = [
            VectorField::from_component(x.clone(), 0),
            VectorField::from_component(x, 1),
            VectorField::from_component(y.clone(), 0),
            VectorField::from_component(y, 1),
        ];
        assert_eq!(f.generators(), &expected[..]);
        assert_eq!(vanishing_order(2, 2).unwrap().generator_count(), 6);
    }

    #[test]
    fn so3_generators() {
        let f = special_orthogonal(3).unwrap();
        let v = |i| Polynomial::var(3, i);
        let g = |a: Polynomial, i, b: Polynomial, j| {
            VectorField::from_component(a, i).sub(&VectorField::from_component(b, j))
        };
        assert_eq!(f.generators(), &[g(v(1), 0, v(0), 1), g(v(2), 0, v(0), 2), g(v(2), 1, v(1), 2)][..]);
    }

    #[test]
    fn annihilator_kills_phi() {
        let v = |i| Polynomial::var(3, i);
        let phi = &(&v(0).pow(2) + &v(1).pow(2)) + &v(2).pow(2);
        let f = annihilator_of(&names(3), &phi).unwrap();
        let two = int(2);
        let expected =
            VectorField::from_component(v(1).scale(&two), 0).sub(&VectorField::from_component(v(0).scale(&two), 1));
        assert_eq!(f.generators()[0], expected);
        for g in f.generators() {
            assert!(g.apply(&phi).is_zero());
        }
        assert!(annihilator_of(&names(3), &Polynomial::from_int(3, 4)).is_err());
    }

    #[test]
    fn tangent_to_circle() {
        let (x, y) = (Polynomial::var(2, 0), Polynomial::var(2, 1));
        let phi = &(&x.pow(2) + &y.pow(2)) - &Polynomial::one(2);
        let f = tangent_to_ideal(&names(2), core::slice::from_ref(&phi)).unwrap();
        for g in f.generators() {
            let image = g.apply(&phi);
            assert!(image.div_exact(&phi).is_some(), "X[phi] must lie in (phi)");
        }
        // the rotation field is tangent to the circle and must be in the module
        let rot = VectorField::from_component(y, 0).sub(&VectorField::from_component(x, 1));
        let gb = f.groebner();
        assert!(gb.contains(&rot.to_module_element()).unwrap());
    }

    #[test]
    fn filtered_prepends_t() {
        let base = vanishing_order(1, 1).unwrap();
        let f = filtered(&base, &[2]).unwrap();
        assert_eq!(f.vars(), &[String::from("t"), String::from("x")][..]);
        let t = Polynomial::var(2, 0);
        let x = Polynomial::var(2, 1);
        assert_eq!(f.generators()[0], VectorField::from_component(&t.pow(2) * &x, 1));
        assert!(filtered(&base, &[1, 2]).is_err());
    }

    #[test]
    fn bad_params() {
        assert!(special_orthogonal(1).is_err());
        assert!(vanishing_order(0, 1).is_err());
        assert!(vanishing_on_ideal(&names(2), &[]).is_err());
    }
}
