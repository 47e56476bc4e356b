//! The almost-Lie algebroid `(O^r, [·,·], ρ)` over a presented foliation.

use alloc::vec::Vec;

use crate::foliation::{christoffel, ChristoffelTensor, FoliationPresentation};
use crate::poly::Polynomial;
use crate::vector_field::{combination, VectorField};
use crate::Error;

/// A section `Σ f_i e_i` of `E_{-1} = O^r`.
pub type Section = Vec<Polynomial>;

#[derive(Clone, Debug)]
pub struct AlmostLieAlgebroid {
    pub foliation: FoliationPresentation,
    pub bracket: ChristoffelTensor,
}

/// Skew Christoffel symbols as the bracket; the anchor condition is checked
/// on every generator pair.
pub fn almost_lie_algebroid(f: &FoliationPresentation) -> Result<AlmostLieAlgebroid, Error> {
    let c = christoffel(f)?;
    AlmostLieAlgebroid::with_bracket(f, c)
}

impl AlmostLieAlgebroid {
    /// Uses the given skew tensor as bracket. Fails with `NotInvolutive` when
    /// it violates the anchor condition.
    pub fn with_bracket(f: &FoliationPresentation, c: ChristoffelTensor) -> Result<Self, Error> {
        if c.generator_count() != f.generator_count() {
            return Err(Error::WrongLength { expected: f.generator_count(), found: c.generator_count() });
        }
        if !c.is_skew() {
            return Err(Error::BadParams("bracket must be skew".into()));
        }
        let a = AlmostLieAlgebroid { foliation: f.clone(), bracket: c };
        if let Some((i, j)) = a.anchor_condition_failure() {
            return Err(Error::NotInvolutive { i, j });
        }
        Ok(a)
    }

    pub fn rank(&self) -> usize {
        self.foliation.generator_count()
    }

    pub fn nvars(&self) -> usize {
        self.foliation.nvars()
    }

    pub fn unit(&self, i: usize) -> Section {
        let mut s = self.zero_section();
        s[i] = Polynomial::one(self.nvars());
        s
    }

    pub fn zero_section(&self) -> Section {
        (0..self.rank()).map(|_| Polynomial::zero(self.nvars())).collect()
    }

    /// `ρ(Σ f_i e_i) = Σ f_i X_i`
    pub fn anchor(&self, s: &[Polynomial]) -> VectorField {
        combination(s, self.foliation.generators())
    }

    /// First pair `(i, j)` with `ρ([e_i, e_j]) ≠ [X_i, X_j]`.
    pub fn anchor_condition_failure(&self) -> Option<(usize, usize)> {
        let gens = self.foliation.generators();
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                let lhs = self.anchor(&self.bracket.structure(i, j));
                if lhs != gens[i].bracket(&gens[j]).expect("same ambient") {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `[Σ f_i e_i, Σ g_j e_j] = Σ f_i g_j [e_i, e_j] + Σ f_i X_i[g_j] e_j − Σ g_j X_j[f_i] e_i`
    pub fn section_bracket(&self, a: &[Polynomial], b: &[Polynomial]) -> Section {
        let r = self.rank();
        let gens = self.foliation.generators();
        let mut out = self.zero_section();
        for i in 0..r {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..r {
                if b[j].is_zero() {
                    continue;
                }
                let fg = &a[i] * &b[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.bracket.get(i, j, k);
                    if !c.is_zero() {
                        *o += &(&fg * c);
                    }
                }
            }
        }
        for i in 0..r {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..r {
                let t = gens[i].apply(&b[j]);
                if !t.is_zero() {
                    out[j] += &(&a[i] * &t);
                }
            }
        }
        for j in 0..r {
            if b[j].is_zero() {
                continue;
            }
            for i in 0..r {
                let t = gens[j].apply(&a[i]);
                if !t.is_zero() {
                    out[i] -= &(&b[j] * &t);
                }
            }
        }
        out
    }

    /// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]]` on sections.
    pub fn jacobiator_of(&self, a: &[Polynomial], b: &[Polynomial], c: &[Polynomial]) -> Section {
        let t1 = self.section_bracket(a, &self.section_bracket(b, c));
        let t2 = self.section_bracket(b, &self.section_bracket(c, a));
        let t3 = self.section_bracket(c, &self.section_bracket(a, b));
        t1.iter().zip(&t2).zip(&t3).map(|((x, y), z)| &(x + y) + z).collect()
    }
}

/// `J(e_i, e_j, e_k)`; `ρ(J) = 0` is asserted.
pub fn jacobiator(a: &AlmostLieAlgebroid, i: usize, j: usize, k: usize) -> Result<Section, Error> {
    let r = a.rank();
    for &idx in &[i, j, k] {
        if idx >= r {
            return Err(Error::IndexOutOfRange { index: idx, len: r });
        }
    }
    let jac = a.jacobiator_of(&a.unit(i), &a.unit(j), &a.unit(k));
    assert!(a.anchor(&jac).is_zero(), "the anchor of a Jacobiator must vanish");
    Ok(jac)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{special_orthogonal, vanishing_order};

    #[test]
    fn so3_is_a_lie_algebroid() {
        let f = special_orthogonal(3).unwrap();
        let a = almost_lie_algebroid(&f).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert!(jacobiator(&a, i, j, k).unwrap().iter().all(Polynomial::is_zero));
                }
                for k in 0..3 {
                    assert!(a.bracket.get(i, j, k).is_constant());
                }
            }
        }
        assert!(matches!(jacobiator(&a, 0, 1, 3), Err(Error::IndexOutOfRange { index: 3, len: 3 })));
    }

    #[test]
    fn leibniz_rule() {
        let f = vanishing_order(2, 1).unwrap();
        let a = almost_lie_algebroid(&f).unwrap();
        let x = Polynomial::var(2, 0);
        let g = &(&x * &x) + &Polynomial::from_int(2, 3);
        for i in 0..4 {
            for j in 0..4 {
                let fe: Section = a.unit(j).iter().map(|p| p * &g).collect();
                let lhs = a.section_bracket(&a.unit(i), &fe);
                let base = a.section_bracket(&a.unit(i), &a.unit(j));
                let xi_g = f.generators()[i].apply(&g);
                for k in 0..4 {
                    let mut expect = &base[k] * &g;
                    if k == j {
                        expect += &xi_g;
                    }
                    assert_eq!(lhs[k], expect);
                }
            }
        }
    }
}
