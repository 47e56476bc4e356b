//! The Lie∞-algebroid on `E_{-i} = Λ^{i+1} Q^d` attached to a function `φ`:
//! `ℓ_1 = ι_{dφ}`, anchor `ρ(∂_i∧∂_j) = φ_j ∂_i − φ_i ∂_j`, and n-ary brackets
//! contracting the n-th derivatives of `φ`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::linfty::{GradedElement, LinftyStructure};
use super::signs::{koszul_sign, normalize_wedge, permutation_sign};
use crate::catalog::anchor_pair;
use crate::poly::Polynomial;
use crate::vector_field::VectorField;
use crate::Error;

/// How the sign of a term of the n-ary bracket is formed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NarySign {
    /// Signature of the permutation bringing `i_1, …, i_n` to the front of
    /// `I_1 • ⋯ • I_n`, times the Koszul sign of moving each `i_s` past the
    /// remainders `I_t \ i_t`, `t < s`. Graded symmetric; compatible with the anchor.
    Shifted,
    /// The signature alone.
    Literal,
}

type Key = Vec<(i32, Vec<usize>)>;

#[cfg(feature = "std")]
type Cache = std::sync::Mutex<BTreeMap<Key, GradedElement>>;
#[cfg(not(feature = "std"))]
type Cache = core::cell::RefCell<BTreeMap<Key, GradedElement>>;

#[derive(Debug)]
pub struct KoszulLinfty {
    d: usize,
    phi: Polynomial,
    max_arity: usize,
    sign: NarySign,
    gradient: Vec<Polynomial>,
    cache: Cache,
}

impl Clone for KoszulLinfty {
    fn clone(&self) -> Self {
        KoszulLinfty::build(self.phi.clone(), self.max_arity, self.sign)
    }
}

fn subsets(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, d: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            rec(i + 1, d, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, d, k, &mut Vec::new(), &mut out);
    out
}

pub fn koszul_linfty(phi: &Polynomial, max_arity: usize) -> Result<KoszulLinfty, Error> {
    koszul_linfty_with(phi, max_arity, NarySign::Shifted)
}

pub fn koszul_linfty_with(phi: &Polynomial, max_arity: usize, sign: NarySign) -> Result<KoszulLinfty, Error> {
    if phi.is_constant() || phi.nvars() < 2 {
        return Err(Error::BadPhi);
    }
    if max_arity == 0 {
        return Err(Error::BadParams("max arity must be positive".into()));
    }
    Ok(KoszulLinfty::build(phi.clone(), max_arity, sign))
}

impl KoszulLinfty {
    fn build(phi: Polynomial, max_arity: usize, sign: NarySign) -> Self {
        let d = phi.nvars();
        let gradient = (0..d).map(|i| phi.derivative(i)).collect();
        KoszulLinfty { d, phi, max_arity, sign, gradient, cache: Cache::default() }
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn phi(&self) -> &Polynomial {
        &self.phi
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    /// Sorted multi-indices of length `i + 1` spanning `E_{-i}`.
    pub fn basis(&self, i: usize) -> Vec<Vec<usize>> {
        if i == 0 || i + 1 > self.d {
            return Vec::new();
        }
        subsets(self.d, i + 1)
    }

    pub fn basis_element(&self, index: Vec<usize>) -> GradedElement {
        let degree = -(index.len() as i32 - 1);
        GradedElement::basis(self.d, degree, index)
    }

    /// `ρ(∂_i ∧ ∂_j) = φ_j ∂_i − φ_i ∂_j`
    pub fn anchor_of(&self, i: usize, j: usize) -> VectorField {
        anchor_pair(&self.gradient, i, j)
    }

    /// `ι_{dφ}` on a multi-index of any length (unrestricted by degree).
    pub fn contraction(&self, index: &[usize]) -> GradedElement {
        let degree = -(index.len() as i32 - 2);
        let mut out = GradedElement::zero(self.d, degree);
        for (p, &i) in index.iter().enumerate() {
            let mut rest = index.to_vec();
            rest.remove(p);
            let c = if p % 2 == 0 { self.gradient[i].clone() } else { -&self.gradient[i] };
            out.add_term(rest, c);
        }
        out
    }

    fn compute(&self, args: &[(i32, &[usize])]) -> GradedElement {
        let n = args.len();
        let degree = args.iter().map(|a| a.0).sum::<i32>() + 1;
        let mut out = GradedElement::zero(self.d, degree);
        if degree > -1 || degree < -(self.d as i32 - 1) {
            return out;
        }
        let mut offsets = Vec::with_capacity(n);
        let mut concat: Vec<usize> = Vec::new();
        for a in args {
            offsets.push(concat.len());
            concat.extend_from_slice(a.1);
        }
        let mut choice = alloc::vec![0usize; n];
        loop {
            let picked: Vec<usize> = (0..n).map(|s| args[s].1[choice[s]]).collect();
            let mut derivative = self.phi.clone();
            for &i in &picked {
                derivative = derivative.derivative(i);
            }
            if !derivative.is_zero() {
                let chosen: Vec<usize> = (0..n).map(|s| offsets[s] + choice[s]).collect();
                let rest_pos: Vec<usize> = (0..concat.len()).filter(|p| !chosen.contains(p)).collect();
                let mut perm = chosen.clone();
                perm.extend(rest_pos.iter().copied());
                let mut sign = permutation_sign(&perm);
                if self.sign == NarySign::Shifted {
                    // blocks i_1, R_1, i_2, R_2, … reordered to i_1 … i_n, R_1 … R_n
                    let mut degrees = Vec::with_capacity(2 * n);
                    for a in args {
                        degrees.push(1);
                        degrees.push(a.1.len() as i32 - 1);
                    }
                    let mut block_perm: Vec<usize> = (0..n).map(|s| 2 * s).collect();
                    block_perm.extend((0..n).map(|s| 2 * s + 1));
                    sign *= koszul_sign(&degrees, &block_perm);
                }
                let rest: Vec<usize> = rest_pos.iter().map(|&p| concat[p]).collect();
                if let Some((s, sorted)) = normalize_wedge(&rest) {
                    let c = if sign * s < 0 { -derivative } else { derivative };
                    out.add_term(sorted, c);
                }
            }
            let mut s = 0;
            loop {
                if s == n {
                    return out;
                }
                choice[s] += 1;
                if choice[s] < args[s].1.len() {
                    break;
                }
                choice[s] = 0;
                s += 1;
            }
        }
    }

    #[cfg(feature = "std")]
    fn cached(&self, key: &Key) -> Option<GradedElement> {
        self.cache.lock().ok()?.get(key).cloned()
    }

    #[cfg(feature = "std")]
    fn store(&self, key: Key, value: &GradedElement) {
        if let Ok(mut c) = self.cache.lock() {
            c.entry(key).or_insert_with(|| value.clone());
        }
    }

    #[cfg(not(feature = "std"))]
    fn cached(&self, key: &Key) -> Option<GradedElement> {
        self.cache.borrow().get(key).cloned()
    }

    #[cfg(not(feature = "std"))]
    fn store(&self, key: Key, value: &GradedElement) {
        self.cache.borrow_mut().entry(key).or_insert_with(|| value.clone());
    }
}

impl LinftyStructure for KoszulLinfty {
    fn nvars(&self) -> usize {
        self.d
    }

    fn available_arity(&self) -> usize {
        self.max_arity
    }

    fn min_degree(&self) -> i32 {
        -(self.d as i32 - 1)
    }

    fn anchor(&self, index: &[usize]) -> VectorField {
        self.anchor_of(index[0], index[1])
    }

    fn bracket_on_basis(&self, args: &[(i32, &[usize])]) -> GradedElement {
        let key: Key = args.iter().map(|(d, i)| (*d, i.to_vec())).collect();
        if let Some(v) = self.cached(&key) {
            return v;
        }
        let v = self.compute(args);
        self.store(key, &v);
        v
    }
}
