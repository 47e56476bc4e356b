//! Syzygy modules, kernels of polynomial matrices, and iterated free resolutions.

use alloc::vec::Vec;

use crate::groebner::{module_groebner, normalize_content, GroebnerData};
use crate::module::{ModuleElement, ModuleOrder, PolyMatrix};
use crate::poly::Polynomial;
use crate::Error;

/// Generators of `{ s ∈ O^r : Σ s_i · gens_i = 0 }`.
///
/// Schreyer syzygies of a Gröbner basis of the generators, pulled back to the
/// generators through the change matrix. Zero generators contribute their unit
/// vector. Output is content-normalized and free of zeros and duplicates.
pub fn syzygies(gens: &[ModuleElement]) -> Result<Vec<ModuleElement>, Error> {
    let order = ModuleOrder::default();
    let gb = module_groebner(gens, order)?;
    Ok(syzygies_from(&gb, &order))
}

pub(crate) fn syzygies_from(gb: &GroebnerData, order: &ModuleOrder) -> Vec<ModuleElement> {
    let gens = gb.original_generators();
    let (nvars, r) = (gb.nvars(), gens.len());
    let mut out: Vec<ModuleElement> = Vec::new();
    let mut push = |s: ModuleElement| {
        if s.is_zero() {
            return;
        }
        let s = normalize_content(&s, order);
        if !out.contains(&s) {
            out.push(s);
        }
    };
    for s in gb.basis_syzygies() {
        let coeffs = gb.to_generator_coefficients(s.components());
        push(ModuleElement::new(nvars, coeffs).expect("uniform arity"));
    }
    for (j, g) in gens.iter().enumerate() {
        if g.is_zero() {
            push(ModuleElement::unit(nvars, r, j));
        }
    }
    out
}

/// Generators of `{ v ∈ O^a : M · v = 0 }` for an `s × a` matrix `M`.
pub fn kernel_of_map(m: &PolyMatrix) -> Result<Vec<ModuleElement>, Error> {
    if m.cols() == 0 {
        return Ok(Vec::new());
    }
    if m.rows() == 0 {
        return Ok((0..m.cols()).map(|j| ModuleElement::unit(m.nvars(), m.cols(), j)).collect());
    }
    syzygies(&m.columns())
}

/// A chain `O^{r_L} → … → O^{r_2} → O^{r_1} → O^s` of polynomial matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeResolutionData {
    /// `(r_1, r_2, …)`
    pub ranks: Vec<usize>,
    /// `matrices[0]` is the head map (`s × r_1`); `matrices[i]` is `r_i × r_{i+1}`.
    pub matrices: Vec<PolyMatrix>,
    /// True when the length cap was reached while syzygies were still nonzero.
    pub truncated: bool,
}

impl FreeResolutionData {
    pub fn head_map(&self) -> &PolyMatrix {
        &self.matrices[0]
    }

    /// Differentials below the head map: `d^{(2)}, d^{(3)}, …`.
    pub fn differentials(&self) -> &[PolyMatrix] {
        &self.matrices[1..]
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Checks that all consecutive products vanish.
    pub fn is_complex(&self) -> bool {
        self.matrices.windows(2).all(|w| w[0].mul(&w[1]).map(|p| p.is_zero()).unwrap_or(false))
    }
}

/// Iterates syzygies starting from `gens` until the syzygy module is zero or
/// `max_len` free modules have been produced.
pub fn free_resolution(gens: &[ModuleElement], max_len: usize) -> Result<FreeResolutionData, Error> {
    if max_len == 0 {
        return Err(Error::BadParams("max_len must be at least 1".into()));
    }
    let first = gens.first().ok_or(Error::EmptyInput)?;
    let nvars = first.nvars();
    let head = PolyMatrix::from_columns(nvars, first.rank(), gens)?;
    let mut ranks = alloc::vec![gens.len()];
    let mut matrices = alloc::vec![head];
    let mut current: Vec<ModuleElement> = gens.to_vec();
    loop {
        let syz = syzygies(&current)?;
        if syz.is_empty() {
            return Ok(FreeResolutionData { ranks, matrices, truncated: false });
        }
        if ranks.len() == max_len {
            return Ok(FreeResolutionData { ranks, matrices, truncated: true });
        }
        let rows = current.len();
        matrices.push(PolyMatrix::from_columns(nvars, rows, &syz)?);
        ranks.push(syz.len());
        current = syz;
    }
}

/// `Σ coeffs_i · gens_i`, the image of a coefficient vector.
pub fn combine(coeffs: &[Polynomial], gens: &[ModuleElement]) -> ModuleElement {
    crate::module::linear_combination(coeffs, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn v(i: usize) -> Polynomial {
        Polynomial::var(2, i)
    }

    fn e(c: Vec<Polynomial>) -> ModuleElement {
        ModuleElement::from_components(c)
    }

    #[test]
    fn syzygy_examples() {
        let (x, y) = (v(0), v(1));
        let s = syzygies(&[e(vec![x.pow(2)]), e(vec![&x * &y])]).unwrap();
        assert_eq!(s, vec![e(vec![y.clone(), -&x])]);
        let s = syzygies(&[e(vec![x.clone()]), e(vec![y.clone()])]).unwrap();
        assert_eq!(s, vec![e(vec![y.clone(), -&x])]);
        let s = syzygies(&[e(vec![&x + &y.pow(3)])]).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn kernel_examples() {
        let (x, y) = (v(0), v(1));
        let m = PolyMatrix::from_rows(2, vec![vec![x.clone(), y.clone()]]).unwrap();
        assert_eq!(kernel_of_map(&m).unwrap(), vec![e(vec![y.clone(), -&x])]);
        assert!(kernel_of_map(&PolyMatrix::identity(2, 2)).unwrap().is_empty());
        let m = PolyMatrix::from_rows(2, vec![vec![x.pow(2), &x * &y, y.pow(2)]]).unwrap();
        let z = Polynomial::zero(2);
        assert_eq!(kernel_of_map(&m).unwrap(), vec![e(vec![y.clone(), -&x, z.clone()]), e(vec![z, y.clone(), -&x])]);
    }

    #[test]
    fn resolution_examples() {
        let (x, y) = (v(0), v(1));
        let r = free_resolution(&[e(vec![x.clone()]), e(vec![y.clone()])], 5).unwrap();
        assert_eq!(r.ranks, vec![2, 1]);
        assert!(!r.truncated);
        assert_eq!(r.matrices[1].column(0), e(vec![y.clone(), -&x]));

        let z = Polynomial::zero(2);
        let f1 = vec![
            e(vec![x.clone(), z.clone()]),
            e(vec![z.clone(), x.clone()]),
            e(vec![y.clone(), z.clone()]),
            e(vec![z.clone(), y.clone()]),
        ];
        let r = free_resolution(&f1, 5).unwrap();
        assert_eq!(r.ranks, vec![4, 2]);
        assert!(r.is_complex());

        let r = free_resolution(&[e(vec![x.clone(), z.clone()])], 5).unwrap();
        assert_eq!(r.ranks, vec![1]);

        let r = free_resolution(&[e(vec![x.clone()]), e(vec![y.clone()])], 1).unwrap();
        assert!(r.truncated);
        assert_eq!(r.ranks, vec![2]);
    }

    #[test]
    fn duplicate_and_zero_generators() {
        let x = v(0);
        let s = syzygies(&[e(vec![x.clone()]), e(vec![x.clone()]), e(vec![Polynomial::zero(2)])]).unwrap();
        let one = Polynomial::one(2);
        let z = Polynomial::zero(2);
        assert_eq!(s, vec![e(vec![one.clone(), -&one, z.clone()]), e(vec![z.clone(), z, one])]);
    }
}
