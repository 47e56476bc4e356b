//! The 2-Lie algebroid on a length-two geometric resolution
//! `E_{-2} --d--> E_{-1} --ρ--> TM`: connection `∇` and 3-bracket, both
//! obtained by lifting through the injective map `d`.

use alloc::vec::Vec;

use super::almost::{AlmostLieAlgebroid, Section};
use super::linfty::{GradedElement, LinftyStructure};
use crate::foliation::FoliationPresentation;
use crate::groebner::{module_groebner, normal_form, GroebnerData};
use crate::module::{ModuleElement, ModuleOrder, PolyMatrix};
use crate::poly::Polynomial;
use crate::resolution::GeometricResolution;
use crate::vector_field::VectorField;
use crate::Error;

/// Outcome of checking the four compatibility identities on generator tuples.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TwoLieVerdicts {
    /// `[a, f b]_2 = f [a, b]_2 + ρ(a)[f] b` and linearity of the 3-bracket.
    pub leibniz: bool,
    /// `d[a, b]_2 = [d a, b]_2` for `a ∈ E_{-2}`, `b ∈ E_{-1}`.
    pub differential: bool,
    /// `d[a, b, c]_3 + Jac(a, b, c) = 0`.
    pub jacobiator: bool,
    /// `[a, b, dc]_3 + [a, [b, c]_2]_2 + [b, [c, a]_2]_2 + [c, [a, b]_2]_2 = 0`.
    pub mixed_jacobi: bool,
}

impl TwoLieVerdicts {
    pub fn all(&self) -> bool {
        self.leibniz && self.differential && self.jacobiator && self.mixed_jacobi
    }
}

#[derive(Clone, Debug)]
pub struct TwoLieAlgebroid {
    pub base: AlmostLieAlgebroid,
    pub resolution: GeometricResolution,
    /// `nabla[(i * r2 + b) * r2 + c]`: coefficient of `f_c` in `∇_{e_i} f_b`.
    pub nabla: Vec<Polynomial>,
    /// `three_bracket[((i * r + j) * r + k) * r2 + c]`: coefficient of `f_c` in `[e_i, e_j, e_k]_3`.
    pub three_bracket: Vec<Polynomial>,
    pub verdicts: TwoLieVerdicts,
    d2_groebner: GroebnerData,
}

pub fn extend_to_two_algebroid(
    f: &FoliationPresentation,
    r: &GeometricResolution,
    a: &AlmostLieAlgebroid,
) -> Result<TwoLieAlgebroid, Error> {
    if r.len() != 2 {
        return Err(Error::WrongLength { expected: 2, found: r.len() });
    }
    if r.truncated {
        return Err(Error::NotInjective);
    }
    if f.generators() != a.foliation.generators() || f.generators() != r.foliation.generators() {
        return Err(Error::BadParams("resolution and algebroid must present the same foliation".into()));
    }
    let d2 = r.chain.matrices[1].clone();
    let (rank, r2) = (d2.rows(), d2.cols());
    let gb = module_groebner(&d2.columns(), ModuleOrder::default())?;
    let mut two = TwoLieAlgebroid {
        base: a.clone(),
        resolution: r.clone(),
        nabla: Vec::new(),
        three_bracket: Vec::new(),
        verdicts: TwoLieVerdicts { leibniz: false, differential: false, jacobiator: false, mixed_jacobi: false },
        d2_groebner: gb,
    };
    let mut nabla = Vec::with_capacity(rank * r2 * r2);
    for i in 0..rank {
        for b in 0..r2 {
            let target = a.section_bracket(&a.unit(i), &two.d2(&two.unit2(b)));
            nabla.extend(two.lift(&target)?);
        }
    }
    two.nabla = nabla;
    let zero2: Vec<Polynomial> = (0..r2).map(|_| Polynomial::zero(f.nvars())).collect();
    let mut three = Vec::with_capacity(rank * rank * rank * r2);
    for i in 0..rank {
        for j in 0..rank {
            for k in 0..rank {
                if i < j && j < k {
                    let jac = a.jacobiator_of(&a.unit(i), &a.unit(j), &a.unit(k));
                    let neg: Section = jac.iter().map(|p| -p).collect();
                    three.extend(two.lift(&neg)?);
                } else {
                    three.extend(zero2.iter().cloned());
                }
            }
        }
    }
    // skew-symmetric extension from i < j < k
    for i in 0..rank {
        for j in 0..rank {
            for k in 0..rank {
                let mut idx = [i, j, k];
                if idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2] {
                    continue;
                }
                let mut sign = 1;
                for p in 0..3 {
                    for q in 0..2 - p {
                        if idx[q] > idx[q + 1] {
                            idx.swap(q, q + 1);
                            sign = -sign;
                        }
                    }
                }
                if idx == [i, j, k] {
                    continue;
                }
                let src = ((idx[0] * rank + idx[1]) * rank + idx[2]) * r2;
                let dst = ((i * rank + j) * rank + k) * r2;
                for c in 0..r2 {
                    let v = three[src + c].clone();
                    three[dst + c] = if sign < 0 { -v } else { v };
                }
            }
        }
    }
    two.three_bracket = three;
    two.verdicts = two.verify();
    Ok(two)
}

impl TwoLieAlgebroid {
    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn rank2(&self) -> usize {
        self.differential().cols()
    }

    pub fn nvars(&self) -> usize {
        self.base.nvars()
    }

    pub fn differential(&self) -> &PolyMatrix {
        &self.resolution.chain.matrices[1]
    }

    fn unit2(&self, b: usize) -> Vec<Polynomial> {
        let mut v: Vec<Polynomial> = (0..self.rank2()).map(|_| Polynomial::zero(self.nvars())).collect();
        v[b] = Polynomial::one(self.nvars());
        v
    }

    /// `d: E_{-2} → E_{-1}` on sections.
    pub fn d2(&self, v: &[Polynomial]) -> Section {
        let e = ModuleElement::new(self.nvars(), v.to_vec()).expect("uniform arity");
        self.differential().apply(&e).expect("matching size").into_components()
    }

    /// The unique `v` with `d v = w`.
    pub fn lift(&self, w: &[Polynomial]) -> Result<Vec<Polynomial>, Error> {
        let e = ModuleElement::new(self.nvars(), w.to_vec())?;
        let (rem, quotients) = normal_form(&e, &self.d2_groebner)?;
        if !rem.is_zero() {
            return Err(Error::LiftFailed);
        }
        Ok(self.d2_groebner.to_generator_coefficients(&quotients))
    }

    pub fn nabla_basis(&self, i: usize, b: usize) -> Vec<Polynomial> {
        let r2 = self.rank2();
        self.nabla[(i * r2 + b) * r2..(i * r2 + b + 1) * r2].to_vec()
    }

    pub fn three_basis(&self, i: usize, j: usize, k: usize) -> Vec<Polynomial> {
        let (r, r2) = (self.rank(), self.rank2());
        let s = ((i * r + j) * r + k) * r2;
        self.three_bracket[s..s + r2].to_vec()
    }

    /// `∇_a c = Σ_i a_i (Σ_b c_b ∇_{e_i} f_b + X_i[c_b] f_b)`
    pub fn nabla_section(&self, a: &[Polynomial], c: &[Polynomial]) -> Vec<Polynomial> {
        let r2 = self.rank2();
        let gens = self.base.foliation.generators();
        let mut out: Vec<Polynomial> = (0..r2).map(|_| Polynomial::zero(self.nvars())).collect();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (b, cb) in c.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let nb = self.nabla_basis(i, b);
                for (o, n) in out.iter_mut().zip(&nb) {
                    if !n.is_zero() {
                        *o += &(&(ai * cb) * n);
                    }
                }
                let der = gens[i].apply(cb);
                if !der.is_zero() {
                    out[b] += &(ai * &der);
                }
            }
        }
        out
    }

    /// `[a, b, c]_3`, linear over functions.
    pub fn three_section(&self, a: &[Polynomial], b: &[Polynomial], c: &[Polynomial]) -> Vec<Polynomial> {
        let r = self.rank();
        let mut out: Vec<Polynomial> = (0..self.rank2()).map(|_| Polynomial::zero(self.nvars())).collect();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    if a[i].is_zero() || b[j].is_zero() || c[k].is_zero() {
                        continue;
                    }
                    let coeff = &(&a[i] * &b[j]) * &c[k];
                    for (o, t) in out.iter_mut().zip(self.three_basis(i, j, k)) {
                        if !t.is_zero() {
                            *o += &(&coeff * &t);
                        }
                    }
                }
            }
        }
        out
    }

    fn verify(&self) -> TwoLieVerdicts {
        let (r, r2, n) = (self.rank(), self.rank2(), self.nvars());
        let a = &self.base;
        let gens = a.foliation.generators();
        let is_zero = |v: &[Polynomial]| v.iter().all(Polynomial::is_zero);
        let sub =
            |x: &[Polynomial], y: &[Polynomial]| -> Vec<Polynomial> { x.iter().zip(y).map(|(p, q)| p - q).collect() };
        let add =
            |x: &[Polynomial], y: &[Polynomial]| -> Vec<Polynomial> { x.iter().zip(y).map(|(p, q)| p + q).collect() };

        // 1: lift [e_i, d(x_v f_b)] afresh and compare with the Leibniz expansion
        let mut leibniz = true;
        'outer: for v in 0..n {
            let xv = Polynomial::var(n, v);
            for i in 0..r {
                for b in 0..r2 {
                    let c: Vec<Polynomial> = self.unit2(b).iter().map(|p| p * &xv).collect();
                    let target = a.section_bracket(&a.unit(i), &self.d2(&c));
                    let fresh = match self.lift(&target) {
                        Ok(l) => l,
                        Err(_) => {
                            leibniz = false;
                            break 'outer;
                        }
                    };
                    let mut expect: Vec<Polynomial> = self.nabla_basis(i, b).iter().map(|p| p * &xv).collect();
                    expect[b] += &gens[i].apply(&xv);
                    if fresh != expect {
                        leibniz = false;
                        break 'outer;
                    }
                }
            }
            for i in 0..r {
                for j in i + 1..r {
                    for k in j + 1..r {
                        let xe: Section = a.unit(i).iter().map(|p| p * &xv).collect();
                        let jac = a.jacobiator_of(&xe, &a.unit(j), &a.unit(k));
                        let neg: Section = jac.iter().map(|p| -p).collect();
                        let expect: Vec<Polynomial> = self.three_basis(i, j, k).iter().map(|p| p * &xv).collect();
                        if self.lift(&neg).ok() != Some(expect) {
                            leibniz = false;
                            break 'outer;
                        }
                    }
                }
            }
        }

        // 2: d(−∇_b a) = [d a, b]
        let mut differential = true;
        for b in 0..r2 {
            for i in 0..r {
                let lhs: Section = self.d2(&self.nabla_basis(i, b)).iter().map(|p| -p).collect();
                let rhs = a.section_bracket(&self.d2(&self.unit2(b)), &a.unit(i));
                differential &= lhs == rhs;
            }
        }

        // 3
        let mut jacobiator = true;
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let jac = a.jacobiator_of(&a.unit(i), &a.unit(j), &a.unit(k));
                    jacobiator &= is_zero(&add(&self.d2(&self.three_basis(i, j, k)), &jac));
                }
            }
        }

        // 4: [a,b,dc]_3 + ∇_a∇_b c − ∇_b∇_a c − ∇_{[a,b]} c
        let mut mixed_jacobi = true;
        for i in 0..r {
            for j in 0..r {
                for b in 0..r2 {
                    let (ei, ej, c) = (a.unit(i), a.unit(j), self.unit2(b));
                    let t0 = self.three_section(&ei, &ej, &self.d2(&c));
                    let t1 = self.nabla_section(&ei, &self.nabla_section(&ej, &c));
                    let t2 = self.nabla_section(&ej, &self.nabla_section(&ei, &c));
                    let t3 = self.nabla_section(&a.section_bracket(&ei, &ej), &c);
                    mixed_jacobi &= is_zero(&sub(&sub(&add(&t0, &t1), &t2), &t3));
                }
            }
        }
        TwoLieVerdicts { leibniz, differential, jacobiator, mixed_jacobi }
    }
}

/// Symmetric degree `+1` presentation: `ℓ_1 = d`, `ℓ_2(e, e') = [e, e']`,
/// `ℓ_2(e, f) = ℓ_2(f, e) = ∇_e f`, `ℓ_3 = −[·,·,·]_3`. Basis keys are `[i]`.
impl LinftyStructure for TwoLieAlgebroid {
    fn nvars(&self) -> usize {
        self.base.nvars()
    }

    fn available_arity(&self) -> usize {
        usize::MAX
    }

    fn min_degree(&self) -> i32 {
        -2
    }

    fn anchor(&self, index: &[usize]) -> VectorField {
        self.base.foliation.generators()[index[0]].clone()
    }

    fn bracket_on_basis(&self, args: &[(i32, &[usize])]) -> GradedElement {
        let n = self.nvars();
        let degree = args.iter().map(|a| a.0).sum::<i32>() + 1;
        let mut out = GradedElement::zero(n, degree);
        let push = |out: &mut GradedElement, v: &[Polynomial], neg: bool| {
            for (k, p) in v.iter().enumerate() {
                out.add_term(alloc::vec![k], if neg { -p } else { p.clone() });
            }
        };
        match args {
            [(-2, b)] => push(&mut out, &self.d2(&self.unit2(b[0])), false),
            [(-1, i), (-1, j)] => push(&mut out, &self.base.bracket.structure(i[0], j[0]), false),
            [(-1, i), (-2, b)] | [(-2, b), (-1, i)] => push(&mut out, &self.nabla_basis(i[0], b[0]), false),
            [(-1, i), (-1, j), (-1, k)] => push(&mut out, &self.three_basis(i[0], j[0], k[0]), true),
            _ => {}
        }
        out
    }
}
