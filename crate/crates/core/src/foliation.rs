//! Foliation presentations, involutivity certificates, Christoffel symbols and
//! pointwise tangent/rank data.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::groebner::{module_groebner, normal_form, GroebnerData};
use crate::linalg::span_rref;
use crate::module::{ModuleElement, ModuleOrder, PolyMatrix};
use crate::poly::{int, rat, Polynomial};
use crate::syzygy::syzygies;
use crate::vector_field::VectorField;
use crate::{Error, Rational};

/// Polynomial functions `c[i][j][k]` with `[X_i, X_j] = Σ_k c[i][j][k] X_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChristoffelTensor {
    r: usize,
    c: Vec<Polynomial>,
}

impl ChristoffelTensor {
    pub fn zero(nvars: usize, r: usize) -> Self {
        ChristoffelTensor { r, c: (0..r * r * r).map(|_| Polynomial::zero(nvars)).collect() }
    }

    pub fn generator_count(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Polynomial {
        &self.c[(i * self.r + j) * self.r + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, p: Polynomial) {
        self.c[(i * self.r + j) * self.r + k] = p;
    }

    /// `(c[i][j][k])_k`
    pub fn structure(&self, i: usize, j: usize) -> Vec<Polynomial> {
        (0..self.r).map(|k| self.get(i, j, k).clone()).collect()
    }

    pub fn is_skew(&self) -> bool {
        (0..self.r).all(|i| (0..self.r).all(|j| (0..self.r).all(|k| (self.get(i, j, k) + self.get(j, i, k)).is_zero())))
    }

    /// `(c_ij^k − c_ji^k) / 2`
    pub fn skew_symmetrized(&self) -> ChristoffelTensor {
        let half = rat(1, 2);
        let mut out = self.clone();
        for i in 0..self.r {
            for j in 0..self.r {
                for k in 0..self.r {
                    out.set(i, j, k, (self.get(i, j, k) - self.get(j, i, k)).scale(&half));
                }
            }
        }
        out
    }

    /// Values `c_ij^k(m)`.
    pub fn eval(&self, point: &[Rational]) -> Vec<Rational> {
        self.c.iter().map(|p| p.eval(point)).collect()
    }

    /// Checks `[X_i, X_j] = Σ_k c_ij^k X_k` for every ordered pair.
    pub fn reconstructs(&self, generators: &[VectorField]) -> bool {
        if generators.len() != self.r {
            return false;
        }
        (0..self.r).all(|i| {
            (0..self.r).all(|j| {
                let br = generators[i].bracket(&generators[j]).expect("same ambient");
                crate::vector_field::combination(&self.structure(i, j), generators) == br
            })
        })
    }
}

/// The outcome of an involutivity check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Involutivity {
    Involutive(ChristoffelTensor),
    /// First pair `(i, j)`, `i < j` (0-based), whose bracket has a nonzero normal form.
    Counterexample {
        i: usize,
        j: usize,
        residual: VectorField,
    },
}

/// A finite list of polynomial vector fields on `Q^n` with named coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FoliationPresentation {
    vars: Vec<String>,
    generators: Vec<VectorField>,
    certificate: Option<ChristoffelTensor>,
}

impl FoliationPresentation {
    pub fn new(vars: Vec<String>, generators: Vec<VectorField>) -> Result<Self, Error> {
        if generators.is_empty() {
            return Err(Error::EmptyInput);
        }
        for g in &generators {
            if g.nvars() != vars.len() {
                return Err(Error::DimensionMismatch { expected: vars.len(), found: g.nvars() });
            }
        }
        Ok(FoliationPresentation { vars, generators, certificate: None })
    }

    /// Attaches a Christoffel certificate after checking that it reconstructs every bracket.
    pub fn with_certificate(mut self, c: ChristoffelTensor) -> Result<Self, Error> {
        if !c.reconstructs(&self.generators) {
            return Err(Error::BadParams("certificate does not reconstruct the brackets".into()));
        }
        self.certificate = Some(c);
        Ok(self)
    }

    /// Computes and attaches the certificate, failing when not involutive.
    pub fn certified(self) -> Result<Self, Error> {
        let c = christoffel(&self)?;
        Ok(FoliationPresentation { certificate: Some(c), ..self })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn generators(&self) -> &[VectorField] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn certificate(&self) -> Option<&ChristoffelTensor> {
        self.certificate.as_ref()
    }

    pub fn module_elements(&self) -> Vec<ModuleElement> {
        self.generators.iter().map(VectorField::to_module_element).collect()
    }

    /// The `n × r` matrix whose columns are the generators (the anchor).
    pub fn generator_matrix(&self) -> PolyMatrix {
        PolyMatrix::from_columns(self.nvars(), self.nvars(), &self.module_elements()).expect("uniform arity")
    }

    pub fn groebner(&self) -> GroebnerData {
        module_groebner(&self.module_elements(), ModuleOrder::default()).expect("uniform arity")
    }

    /// Same foliation with generators listed in a different order (`perm[new] = old`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Self, Error> {
        let generators = perm
            .iter()
            .map(|&i| {
                self.generators.get(i).cloned().ok_or(Error::IndexOutOfRange { index: i, len: self.generators.len() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        FoliationPresentation::new(self.vars.clone(), generators)
    }

    pub(crate) fn check_point(&self, point: &[Rational]) -> Result<(), Error> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: point.len() });
        }
        Ok(())
    }
}

/// Decides whether the generated module is closed under the bracket.
///
/// On success the certificate is the skew-symmetrized tensor of division
/// quotients; on failure the first offending pair and its normal form.
pub fn check_involutive(f: &FoliationPresentation) -> Involutivity {
    let gb = f.groebner();
    let r = f.generator_count();
    let gens = f.generators();
    let mut raw = ChristoffelTensor::zero(f.nvars(), r);
    for i in 0..r {
        for j in i + 1..r {
            let br = gens[i].bracket(&gens[j]).expect("same ambient");
            let (rem, quots) = normal_form(&br.to_module_element(), &gb).expect("same ambient");
            if !rem.is_zero() {
                return Involutivity::Counterexample {
                    i,
                    j,
                    residual: VectorField::from_module_element(&rem).expect("uniform arity"),
                };
            }
            let coeffs = gb.to_generator_coefficients(&quots);
            for (k, c) in coeffs.into_iter().enumerate() {
                raw.set(j, i, k, -&c);
                raw.set(i, j, k, c);
            }
        }
    }
    Involutivity::Involutive(raw.skew_symmetrized())
}

/// The deterministic skew Christoffel tensor, or `NotInvolutive`.
pub fn christoffel(f: &FoliationPresentation) -> Result<ChristoffelTensor, Error> {
    if let Some(c) = &f.certificate {
        return Ok(c.clone());
    }
    match check_involutive(f) {
        Involutivity::Involutive(c) => Ok(c),
        Involutivity::Counterexample { i, j, .. } => Err(Error::NotInvolutive { i, j }),
    }
}

/// `T_mF`: dimension and a row-reduced basis of the span of the generator values.
pub fn tangent_space_at(f: &FoliationPresentation, m: &[Rational]) -> Result<(usize, Vec<Vec<Rational>>), Error> {
    f.check_point(m)?;
    let values: Vec<Vec<Rational>> = f.generators().iter().map(|x| x.eval(m)).collect();
    let basis = span_rref(f.nvars(), &values);
    Ok((basis.len(), basis))
}

/// `{λ ∈ Q^r : Σ λ_i X_i ∈ I_m F}`, as a row-reduced basis.
///
/// Evaluates at `m` the first block of the syzygies of the family
/// `(X_1 … X_r, (x_j − m_j) X_k)`.
pub fn relations_at(f: &FoliationPresentation, m: &[Rational]) -> Result<Vec<Vec<Rational>>, Error> {
    f.check_point(m)?;
    let n = f.nvars();
    let r = f.generator_count();
    let mut family: Vec<ModuleElement> = f.module_elements();
    for j in 0..n {
        let shift = &Polynomial::var(n, j) - &Polynomial::constant(n, m[j].clone());
        for x in f.generators() {
            family.push(x.to_module_element().mul_poly(&shift));
        }
    }
    let syz = syzygies(&family)?;
    let values: Vec<Vec<Rational>> =
        syz.iter().map(|s| s.components()[..r].iter().map(|p| p.eval(m)).collect()).collect();
    Ok(span_rref(r, &values))
}

/// `rk_m(F) = dim F / I_m F`.
pub fn rank_at(f: &FoliationPresentation, m: &[Rational]) -> Result<usize, Error> {
    Ok(f.generator_count() - relations_at(f, m)?.len())
}

/// Rank of the generator matrix over the field of rational functions.
pub fn generic_rank(f: &FoliationPresentation) -> usize {
    polynomial_matrix_rank(&f.generator_matrix())
}

/// Fraction-free (Bareiss) elimination over `Q[x]`; every division is exact.
pub fn polynomial_matrix_rank(m: &PolyMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<Polynomial>> = (0..rows).map(|i| (0..cols).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut prev = Polynomial::one(m.nvars());
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = &(&a[rank][col] * &a[i][j]) - &(&a[i][col] * &a[rank][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][col] = Polynomial::zero(m.nvars());
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PointClass {
    Regular,
    Singular,
}

/// Regular iff `dim T_mF` equals the generic rank.
pub fn classify_point(f: &FoliationPresentation, m: &[Rational]) -> Result<PointClass, Error> {
    let (dim, _) = tangent_space_at(f, m)?;
    Ok(if dim == generic_rank(f) { PointClass::Regular } else { PointClass::Singular })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointInvariants {
    pub tangent_basis: Vec<Vec<Rational>>,
    pub tangent_dim: usize,
    pub rank_at_point: usize,
    pub is_regular: bool,
    pub generic_rank: usize,
}

pub fn point_invariants(f: &FoliationPresentation, m: &[Rational]) -> Result<PointInvariants, Error> {
    let (tangent_dim, tangent_basis) = tangent_space_at(f, m)?;
    let generic_rank = generic_rank(f);
    Ok(PointInvariants {
        tangent_basis,
        tangent_dim,
        rank_at_point: rank_at(f, m)?,
        is_regular: tangent_dim == generic_rank,
        generic_rank,
    })
}

/// The origin of `Q^n`.
pub fn origin(n: usize) -> Vec<Rational> {
    (0..n).map(|_| Rational::zero()).collect()
}

/// Converts small integers to a rational point.
pub fn point(coords: &[i64]) -> Vec<Rational> {
    coords.iter().map(|&c| int(c)).collect()
}
