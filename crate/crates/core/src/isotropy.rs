//! Kernel and strong kernel of the anchor at a point, the isotropy Lie algebra
//! `ker(ρ_m) / Sker(ρ, m)` and the linear isotropy Lie algebra.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::foliation::{christoffel, rank_at, tangent_space_at, ChristoffelTensor, FoliationPresentation};
use crate::linalg::{coordinates_in, in_span, span_rref, QMatrix};
use crate::poly::fmt_rational;
use crate::syzygy::syzygies;
use crate::{Error, Rational};

/// A subspace of `Q^r` given by a reduced row echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspaceOfKr {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<Rational>>,
}

impl SubspaceOfKr {
    pub fn span(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        SubspaceOfKr { ambient_dim, basis: span_rref(ambient_dim, vectors) }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        in_span(&self.basis, v)
    }
}

/// `ker(ρ_m)`: coefficient vectors `λ` with `Σ λ_i X_i(m) = 0`.
pub fn kernel_at(f: &FoliationPresentation, m: &[Rational]) -> Result<SubspaceOfKr, Error> {
    f.check_point(m)?;
    let values = f.generator_matrix().eval(m);
    Ok(SubspaceOfKr::span(f.generator_count(), &values.kernel()))
}

/// `Sker(ρ, m)`: values at `m` of the syzygies of the generators.
pub fn strong_kernel_at(f: &FoliationPresentation, m: &[Rational]) -> Result<SubspaceOfKr, Error> {
    f.check_point(m)?;
    let syz = syzygies(&f.module_elements())?;
    let values: Vec<Vec<Rational>> = syz.iter().map(|s| s.eval(m)).collect();
    Ok(SubspaceOfKr::span(f.generator_count(), &values))
}

/// A finite-dimensional Lie algebra given by structure constants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebraPresentation {
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// Representatives in `Q^r` of the chosen quotient basis.
    pub basis_vectors: Vec<Vec<Rational>>,
    /// `structure_constants[(a * dim + b) * dim + c]` is the coefficient of `b_c` in `[b_a, b_b]`.
    pub structure_constants: Vec<Rational>,
    pub jacobi_verified: bool,
}

impl LieAlgebraPresentation {
    pub fn constant(&self, a: usize, b: usize, c: usize) -> &Rational {
        &self.structure_constants[(a * self.dim + b) * self.dim + c]
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); self.dim];
        for a in 0..self.dim {
            if u[a].is_zero() {
                continue;
            }
            for b in 0..self.dim {
                if v[b].is_zero() {
                    continue;
                }
                let uv = &u[a] * &v[b];
                for (c, o) in out.iter_mut().enumerate() {
                    let k = self.constant(a, b, c);
                    if !k.is_zero() {
                        *o += &uv * k;
                    }
                }
            }
        }
        out
    }

    pub fn is_skew(&self) -> bool {
        (0..self.dim).all(|a| {
            (0..self.dim).all(|b| (0..self.dim).all(|c| (self.constant(a, b, c) + self.constant(b, a, c)).is_zero()))
        })
    }

    /// Exact Jacobi identity on all basis triples.
    pub fn jacobi_holds(&self) -> bool {
        let unit = |i: usize| {
            let mut v = alloc::vec![Rational::zero(); self.dim];
            v[i] = Rational::one();
            v
        };
        for a in 0..self.dim {
            for b in 0..self.dim {
                for c in 0..self.dim {
                    let (x, y, z) = (unit(a), unit(b), unit(c));
                    let t1 = self.bracket(&x, &self.bracket(&y, &z));
                    let t2 = self.bracket(&y, &self.bracket(&z, &x));
                    let t3 = self.bracket(&z, &self.bracket(&x, &y));
                    if t1.iter().zip(&t2).zip(&t3).any(|((p, q), r)| !(p + q + r).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// `[λ, μ]^k = Σ_{ij} λ_i μ_j c_ij^k(m)` from evaluated Christoffel values.
pub(crate) fn pointwise_bracket(c_at_m: &[Rational], r: usize, lambda: &[Rational], mu: &[Rational]) -> Vec<Rational> {
    let mut out = alloc::vec![Rational::zero(); r];
    for i in 0..r {
        if lambda[i].is_zero() {
            continue;
        }
        for j in 0..r {
            if mu[j].is_zero() {
                continue;
            }
            let lm = &lambda[i] * &mu[j];
            for (k, o) in out.iter_mut().enumerate() {
                let c = &c_at_m[(i * r + j) * r + k];
                if !c.is_zero() {
                    *o += &lm * c;
                }
            }
        }
    }
    out
}

/// Greedy extension of `sub` to a basis of `sup`: the vectors of `sup`, in
/// order, that are independent of `sub` and of those already chosen.
pub(crate) fn complement(sub: &[Vec<Rational>], sup: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut acc: Vec<Vec<Rational>> = sub.to_vec();
    let mut chosen = Vec::new();
    for v in sup {
        if !in_span(&acc, v) {
            acc.push(v.clone());
            chosen.push(v.clone());
        }
    }
    chosen
}

fn label(v: &[Rational]) -> String {
    let mut s = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            s.push_str(&fmt_rational(&abs));
            s.push('*');
        }
        s.push_str(&format!("e{}", i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// The isotropy Lie algebra at `m`, using the skew Christoffel symbols of `f`.
pub fn isotropy_lie_algebra(f: &FoliationPresentation, m: &[Rational]) -> Result<LieAlgebraPresentation, Error> {
    let c = christoffel(f)?;
    isotropy_with_christoffel(f, &c, m)
}

/// Same as [`isotropy_lie_algebra`] for an explicitly chosen Christoffel tensor.
pub fn isotropy_with_christoffel(
    f: &FoliationPresentation,
    c: &ChristoffelTensor,
    m: &[Rational],
) -> Result<LieAlgebraPresentation, Error> {
    let ker = kernel_at(f, m)?;
    let sker = strong_kernel_at(f, m)?;
    let quotient = complement(&sker.basis, &ker.basis);
    isotropy_on_basis(f, c, m, &sker.basis, quotient)
}

/// Structure constants for a given complement of `Sker` inside `ker(ρ_m)`.
pub fn isotropy_on_basis(
    f: &FoliationPresentation,
    c: &ChristoffelTensor,
    m: &[Rational],
    sker: &[Vec<Rational>],
    quotient: Vec<Vec<Rational>>,
) -> Result<LieAlgebraPresentation, Error> {
    let r = f.generator_count();
    let c_at_m = c.eval(m);
    let dim = quotient.len();
    let mut frame = quotient.clone();
    frame.extend(sker.iter().cloned());
    let mut constants = alloc::vec![Rational::zero(); dim * dim * dim];
    for a in 0..dim {
        for b in 0..dim {
            let v = pointwise_bracket(&c_at_m, r, &quotient[a], &quotient[b]);
            let coords = coordinates_in(&frame, &v).expect("bracket of kernel elements stays in the kernel");
            for k in 0..dim {
                constants[(a * dim + b) * dim + k] = coords[k].clone();
            }
        }
    }
    let mut alg = LieAlgebraPresentation {
        dim,
        basis_labels: quotient.iter().map(|v| label(v)).collect(),
        basis_vectors: quotient,
        structure_constants: constants,
        jacobi_verified: false,
    };
    alg.jacobi_verified = alg.jacobi_holds();
    Ok(alg)
}

/// A matrix Lie algebra spanned by `n × n` matrices (row-major, row-reduced).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixLieAlgebra {
    pub n: usize,
    pub spanning_matrices: Vec<Vec<Rational>>,
    pub closed_under_commutator: bool,
}

impl MatrixLieAlgebra {
    pub fn dim(&self) -> usize {
        self.spanning_matrices.len()
    }

    pub fn matrix(&self, i: usize) -> QMatrix {
        to_matrix(self.n, &self.spanning_matrices[i])
    }

    pub fn contains(&self, m: &QMatrix) -> bool {
        in_span(&self.spanning_matrices, &flatten(m))
    }
}

fn flatten(m: &QMatrix) -> Vec<Rational> {
    (0..m.rows()).flat_map(|i| m.row(i)).collect()
}

fn to_matrix(n: usize, v: &[Rational]) -> QMatrix {
    let rows: Vec<Vec<Rational>> = v.chunks(n).map(|c| c.to_vec()).collect();
    QMatrix::from_rows(&rows)
}

pub(crate) fn commutator(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let ab = a.mul(b);
    let ba = b.mul(a);
    let mut out = QMatrix::zero(a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out.set(i, j, ab.get(i, j) - ba.get(i, j));
        }
    }
    out
}

/// Linear parts at `m` of the elements of `F` vanishing at `m`:
/// `span{Σ λ_i J_i(m) : λ ∈ ker ρ_m} + Hom(Q^n, T_mF)`.
pub fn linear_isotropy_at(f: &FoliationPresentation, m: &[Rational]) -> Result<MatrixLieAlgebra, Error> {
    christoffel(f)?;
    let n = f.nvars();
    let ker = kernel_at(f, m)?;
    let jacobians: Vec<QMatrix> = f.generators().iter().map(|x| x.jacobian_at(m)).collect();
    let mut spanning: Vec<Vec<Rational>> = Vec::new();
    for lambda in &ker.basis {
        let mut acc = QMatrix::zero(n, n);
        for (l, j) in lambda.iter().zip(&jacobians) {
            if l.is_zero() {
                continue;
            }
            for a in 0..n {
                for b in 0..n {
                    let v = acc.get(a, b) + l * j.get(a, b);
                    acc.set(a, b, v);
                }
            }
        }
        spanning.push(flatten(&acc));
    }
    let (_, tangent) = tangent_space_at(f, m)?;
    for v in &tangent {
        for b in 0..n {
            let mut outer = QMatrix::zero(n, n);
            for (a, va) in v.iter().enumerate() {
                outer.set(a, b, va.clone());
            }
            spanning.push(flatten(&outer));
        }
    }
    let basis = span_rref(n * n, &spanning);
    let mut alg = MatrixLieAlgebra { n, spanning_matrices: basis, closed_under_commutator: false };
    alg.closed_under_commutator =
        (0..alg.dim()).all(|i| (i + 1..alg.dim()).all(|j| alg.contains(&commutator(&alg.matrix(i), &alg.matrix(j)))));
    Ok(alg)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RankDimensionReport {
    pub rank: usize,
    pub tangent_dim: usize,
    pub isotropy_dim: usize,
    pub identity_holds: bool,
}

/// `rk_m(F) = dim g_m(F) + dim T_mF`, each side computed independently.
pub fn rank_dimension_report(f: &FoliationPresentation, m: &[Rational]) -> Result<RankDimensionReport, Error> {
    let iso = isotropy_lie_algebra(f, m)?;
    let rank = rank_at(f, m)?;
    let (tangent_dim, _) = tangent_space_at(f, m)?;
    Ok(RankDimensionReport { rank, tangent_dim, isotropy_dim: iso.dim, identity_holds: rank == iso.dim + tangent_dim })
}
