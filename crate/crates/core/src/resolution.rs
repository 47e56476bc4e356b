//! Geometric resolutions of a foliation: the anchor followed by iterated
//! syzygies, evaluated pointwise.

use alloc::vec::Vec;

use crate::foliation::{check_involutive, generic_rank, FoliationPresentation, Involutivity};
use crate::groebner::{module_groebner, normal_form};
use crate::module::{ModuleElement, ModuleOrder, PolyMatrix};
use crate::poly::MonomialOrder;
use crate::syzygy::{free_resolution, FreeResolutionData};
use crate::{Error, Rational};

#[derive(Clone, Debug)]
pub struct GeometricResolution {
    pub foliation: FoliationPresentation,
    /// Head map = generator matrix (the anchor), then `d^{(2)}, d^{(3)}, …`.
    pub chain: FreeResolutionData,
    pub truncated: bool,
    /// Per-generator weights `deg(coefficients) − 1` when every generator is homogeneous.
    pub graded_weights: Option<Vec<i64>>,
    pub involutive: bool,
}

impl GeometricResolution {
    pub fn ranks(&self) -> &[usize] {
        &self.chain.ranks
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn anchor(&self) -> &PolyMatrix {
        self.chain.head_map()
    }

    /// `d^{(i)}` for `i ≥ 2`.
    pub fn differential(&self, i: usize) -> Option<&PolyMatrix> {
        if i < 2 {
            return None;
        }
        self.chain.matrices.get(i - 1)
    }

    /// For homogeneous generators the resolution must stop within `n + 1` steps.
    pub fn length_bound_violated(&self) -> bool {
        let bound = self.foliation.nvars() + 1;
        self.graded_weights.is_some() && (self.len() > bound || (self.truncated && self.len() >= bound))
    }
}

/// Default length cap: one beyond the `n + 1` bound for homogeneous input.
pub fn default_max_len(f: &FoliationPresentation) -> usize {
    f.nvars() + 2
}

fn homogeneous_weights(f: &FoliationPresentation) -> Option<Vec<i64>> {
    let mut weights = Vec::new();
    for x in f.generators() {
        let mut degree: Option<u32> = None;
        for p in x.coefficients() {
            for (m, _) in p.terms() {
                match degree {
                    None => degree = Some(m.degree()),
                    Some(d) if d != m.degree() => return None,
                    _ => {}
                }
            }
        }
        weights.push(degree.map(|d| d as i64 - 1).unwrap_or(0));
    }
    Some(weights)
}

pub fn geometric_resolution(f: &FoliationPresentation, max_len: usize) -> Result<GeometricResolution, Error> {
    let chain = free_resolution(&f.module_elements(), max_len)?;
    let involutive = matches!(check_involutive(f), Involutivity::Involutive(_));
    Ok(GeometricResolution {
        foliation: f.clone(),
        truncated: chain.truncated,
        chain,
        graded_weights: homogeneous_weights(f),
        involutive,
    })
}

/// Dimensions of the pointwise cohomology `H^{-1}, H^{-2}, …` at `m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointCohomology {
    pub point: Vec<Rational>,
    pub dims: Vec<usize>,
}

pub fn cohomology_at_point(r: &GeometricResolution, m: &[Rational]) -> Result<PointCohomology, Error> {
    r.foliation.check_point(m)?;
    let evaluated: Vec<_> = r.chain.matrices.iter().map(|d| d.eval(m)).collect();
    let ranks: Vec<usize> = evaluated.iter().map(|d| d.rank()).collect();
    let mut dims = Vec::with_capacity(r.len());
    for i in 0..r.len() {
        // E_{-(i+1)} has rank r_{i+1}; outgoing map is matrices[i], incoming matrices[i+1]
        let kernel = r.chain.ranks[i] - ranks[i];
        let image = ranks.get(i + 1).copied().unwrap_or(0);
        dims.push(kernel - image);
    }
    Ok(PointCohomology { point: m.to_vec(), dims })
}

/// All differentials of index `≥ 2` vanish at `m`.
pub fn is_minimal_at(r: &GeometricResolution, m: &[Rational]) -> Result<bool, Error> {
    r.foliation.check_point(m)?;
    Ok(r.chain.differentials().iter().all(|d| d.eval(m).is_zero()))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AlternatingSum {
    pub sum: i64,
    pub generic_rank: usize,
    pub matches: bool,
}

/// `Σ (−1)^{i+1} rank E_{-i}` against the generic rank of the foliation.
pub fn alternating_rank_sum(r: &GeometricResolution) -> Result<AlternatingSum, Error> {
    if r.truncated {
        return Err(Error::TruncatedResolution);
    }
    let sum: i64 = r.ranks().iter().enumerate().map(|(i, &k)| if i % 2 == 0 { k as i64 } else { -(k as i64) }).sum();
    let generic_rank = generic_rank(&r.foliation);
    Ok(AlternatingSum { sum, generic_rank, matches: sum == generic_rank as i64 })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExactnessWitness {
    /// `matrices[stage] · matrices[stage + 1] ≠ 0`.
    NonzeroComposite { stage: usize },
    /// A kernel element of `matrices[stage]` outside the image of the next map.
    KernelNotCovered { stage: usize, element: ModuleElement },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactnessVerdict {
    pub exact: bool,
    pub witness: Option<ExactnessWitness>,
}

/// Generators of `ker M` from an elimination Gröbner basis of the columns
/// `(M e_j ; e_j)` under lex position-over-term order.
pub fn kernel_by_elimination(m: &PolyMatrix) -> Result<Vec<ModuleElement>, Error> {
    let (s, a, nvars) = (m.rows(), m.cols(), m.nvars());
    if a == 0 {
        return Ok(Vec::new());
    }
    let stacked: Vec<ModuleElement> = (0..a)
        .map(|j| {
            let mut comps = m.column(j).into_components();
            comps.extend(ModuleElement::unit(nvars, a, j).into_components());
            ModuleElement::new(nvars, comps)
        })
        .collect::<Result<_, _>>()?;
    let gb = module_groebner(&stacked, ModuleOrder::new(MonomialOrder::Lex))?;
    Ok(gb
        .basis()
        .iter()
        .filter(|g| g.components()[..s].iter().all(|p| p.is_zero()))
        .map(|g| ModuleElement::new(nvars, g.components()[s..].to_vec()).expect("uniform arity"))
        .collect())
}

/// Independent exactness check of the chain: composites vanish, and every
/// kernel generator of each map lies in the image of the next one.
pub fn verify_exactness(r: &GeometricResolution) -> ExactnessVerdict {
    verify_chain(&r.chain)
}

pub fn verify_chain(chain: &FreeResolutionData) -> ExactnessVerdict {
    let mats = &chain.matrices;
    for (stage, w) in mats.windows(2).enumerate() {
        let zero = w[0].mul(&w[1]).map(|p| p.is_zero()).unwrap_or(false);
        if !zero {
            return ExactnessVerdict { exact: false, witness: Some(ExactnessWitness::NonzeroComposite { stage }) };
        }
    }
    for (stage, d) in mats.iter().enumerate() {
        let last = stage + 1 == mats.len();
        if last && chain.truncated {
            break;
        }
        let kernel = kernel_by_elimination(d).expect("well-formed matrix");
        let uncovered = if last {
            kernel.into_iter().find(|k| !k.is_zero())
        } else {
            let next = mats[stage + 1].columns();
            let gb = module_groebner(&next, ModuleOrder::default()).expect("well-formed matrix");
            kernel.into_iter().find(|k| !normal_form(k, &gb).expect("same module").0.is_zero())
        };
        if let Some(element) = uncovered {
            return ExactnessVerdict {
                exact: false,
                witness: Some(ExactnessWitness::KernelNotCovered { stage, element }),
            };
        }
    }
    ExactnessVerdict { exact: true, witness: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::vanishing_order;
    use crate::foliation::point;
    use crate::vector_field::VectorField;
    use alloc::vec;

    #[test]
    fn f1_resolution_and_cohomology() {
        let f1 = vanishing_order(2, 1).unwrap();
        let r = geometric_resolution(&f1, default_max_len(&f1)).unwrap();
        assert_eq!(r.ranks(), &[4, 2]);
        assert_eq!(r.graded_weights, Some(vec![0, 0, 0, 0]));
        assert!(!r.length_bound_violated());
        assert_eq!(cohomology_at_point(&r, &point(&[0, 0])).unwrap().dims, vec![4, 2]);
        assert_eq!(cohomology_at_point(&r, &point(&[1, 0])).unwrap().dims, vec![0, 0]);
        assert!(is_minimal_at(&r, &point(&[0, 0])).unwrap());
        assert!(!is_minimal_at(&r, &point(&[1, 0])).unwrap());
        let s = alternating_rank_sum(&r).unwrap();
        assert_eq!((s.sum, s.generic_rank, s.matches), (2, 2, true));
        assert!(verify_exactness(&r).exact);
    }

    #[test]
    fn single_generator_is_length_one() {
        let x = crate::poly::Polynomial::var(1, 0);
        let f = FoliationPresentation::new(vec!["x".into()], vec![VectorField::from_component(x, 0)]).unwrap();
        let r = geometric_resolution(&f, 3).unwrap();
        assert_eq!(r.ranks(), &[1]);
        assert!(is_minimal_at(&r, &point(&[5])).unwrap());
        assert_eq!(alternating_rank_sum(&r).unwrap().sum, 1);
        assert!(alternating_rank_sum(&r).unwrap().matches);
    }

    #[test]
    fn zero_foliation() {
        let f = FoliationPresentation::new(crate::poly::default_var_names(2), vec![VectorField::zero(2)]).unwrap();
        let r = geometric_resolution(&f, 4).unwrap();
        assert!(cohomology_at_point(&r, &point(&[0, 0])).unwrap().dims.iter().all(|&d| d == 0));
        assert!(verify_exactness(&r).exact);
        assert!(alternating_rank_sum(&r).unwrap().matches);
    }

    #[test]
    fn dropped_column_is_detected() {
        let f1 = vanishing_order(2, 1).unwrap();
        let mut r = geometric_resolution(&f1, 4).unwrap();
        let d2 = r.chain.matrices[1].columns();
        r.chain.matrices[1] = PolyMatrix::from_columns(2, 4, &d2[..1]).unwrap();
        r.chain.ranks[1] = 1;
        let v = verify_exactness(&r);
        assert!(!v.exact);
        assert!(matches!(v.witness, Some(ExactnessWitness::KernelNotCovered { stage: 0, .. })));
    }

    #[test]
    fn truncated_sum_is_an_error() {
        let f1 = vanishing_order(2, 1).unwrap();
        let r = geometric_resolution(&f1, 1).unwrap();
        assert!(r.truncated);
        assert_eq!(alternating_rank_sum(&r).unwrap_err(), Error::TruncatedResolution);
    }
}
