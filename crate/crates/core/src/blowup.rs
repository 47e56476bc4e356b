//! Blow-up of `Q^d` at the origin. Chart `i` (1-based) has blow-down map
//! `σ(x)_i = x_i`, `σ(x)_j = x_i x_j` for `j ≠ i`; the exceptional divisor is `{x_i = 0}`.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::foliation::{check_involutive, FoliationPresentation, Involutivity};
use crate::poly::Polynomial;
use crate::vector_field::VectorField;
use crate::Error;

/// `σ^*` of the coordinate functions in chart `i` (0-based).
pub fn chart_map(d: usize, i: usize) -> Vec<Polynomial> {
    (0..d)
        .map(|j| if j == i { Polynomial::var(d, i) } else { &Polynomial::var(d, i) * &Polynomial::var(d, j) })
        .collect()
}

fn check_chart(d: usize, chart: usize) -> Result<usize, Error> {
    if chart == 0 || chart > d {
        return Err(Error::IndexOutOfRange { index: chart, len: d });
    }
    Ok(chart - 1)
}

/// `Z[σ^* z_a] = X^a ∘ σ` for every coordinate `z_a`.
pub fn is_sigma_related(z: &VectorField, x: &VectorField, chart: usize) -> Result<bool, Error> {
    let d = x.nvars();
    let i = check_chart(d, chart)?;
    if z.nvars() != d {
        return Err(Error::MixedAmbient);
    }
    let sigma = chart_map(d, i);
    Ok((0..d).all(|a| z.apply(&sigma[a]) == x.coefficient(a).compose(&sigma)))
}

fn lift(x: &VectorField, chart: usize, generator: usize) -> Result<VectorField, Error> {
    let d = x.nvars();
    let i = check_chart(d, chart)?;
    if !x.coefficients().iter().all(|p| p.constant_term().is_zero()) {
        return Err(Error::NotVanishingAtOrigin { generator });
    }
    let sigma = chart_map(d, i);
    let pulled: Vec<Polynomial> = x.coefficients().iter().map(|p| p.compose(&sigma)).collect();
    let mut coeffs = Vec::with_capacity(d);
    for j in 0..d {
        if j == i {
            coeffs.push(pulled[i].clone());
        } else {
            let numerator = &pulled[j] - &(&Polynomial::var(d, j) * &pulled[i]);
            coeffs.push(numerator.div_by_var(i).ok_or(Error::InternalDivisionFailure)?);
        }
    }
    let z = VectorField::new(coeffs)?;
    if !is_sigma_related(&z, x, chart)? {
        return Err(Error::InternalDivisionFailure);
    }
    Ok(z)
}

/// The unique vector field on chart `chart` that is σ-related to `x`.
pub fn blowup_vector_field(x: &VectorField, chart: usize) -> Result<VectorField, Error> {
    lift(x, chart, 0)
}

#[derive(Clone, Debug)]
pub struct BlowupChartFoliation {
    /// 1-based.
    pub chart: usize,
    pub generators: Vec<VectorField>,
    pub source: FoliationPresentation,
    /// Bracket closure of the lifted generators, rechecked in the chart.
    pub involutive: bool,
}

impl BlowupChartFoliation {
    pub fn presentation(&self) -> Result<FoliationPresentation, Error> {
        FoliationPresentation::new(self.source.vars().to_vec(), self.generators.clone())
    }
}

pub fn blowup_chart(f: &FoliationPresentation, chart: usize) -> Result<BlowupChartFoliation, Error> {
    let generators =
        f.generators().iter().enumerate().map(|(g, x)| lift(x, chart, g)).collect::<Result<Vec<_>, _>>()?;
    let lifted = FoliationPresentation::new(f.vars().to_vec(), generators.clone())?;
    let involutive = matches!(check_involutive(&lifted), Involutivity::Involutive(_));
    Ok(BlowupChartFoliation { chart, generators, source: f.clone(), involutive })
}

/// One lifted foliation per chart.
pub fn blowup_foliation(f: &FoliationPresentation) -> Result<Vec<BlowupChartFoliation>, Error> {
    (1..=f.nvars()).map(|chart| blowup_chart(f, chart)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::vanishing_order;
    use crate::foliation::tangent_space_at;
    use crate::poly::{int, rat};
    use alloc::vec;

    fn xy() -> (Polynomial, Polynomial) {
        (Polynomial::var(2, 0), Polynomial::var(2, 1))
    }

    #[test]
    fn euler_lifts_to_radial_coordinate() {
        let e = VectorField::euler(2);
        let (x, y) = xy();
        assert_eq!(blowup_vector_field(&e, 1).unwrap(), VectorField::from_component(x, 0));
        assert_eq!(blowup_vector_field(&e, 2).unwrap(), VectorField::from_component(y, 1));
    }

    #[test]
    fn y_dx_in_chart_one() {
        let (x, y) = xy();
        let z = blowup_vector_field(&VectorField::from_component(y.clone(), 0), 1).unwrap();
        let expected = VectorField::new(vec![&x * &y, -&y.pow(2)]).unwrap();
        assert_eq!(z, expected);
    }

    #[test]
    fn non_vanishing_is_rejected() {
        let dx = VectorField::coordinate(2, 0);
        assert_eq!(blowup_vector_field(&dx, 1).unwrap_err(), Error::NotVanishingAtOrigin { generator: 0 });
        assert!(matches!(blowup_vector_field(&VectorField::euler(2), 3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn foliation_lifts() {
        let euler = FoliationPresentation::new(crate::poly::default_var_names(2), vec![VectorField::euler(2)]).unwrap();
        let charts = blowup_foliation(&euler).unwrap();
        assert_eq!(charts.len(), 2);
        let (x, _) = xy();
        assert_eq!(charts[0].generators, vec![VectorField::from_component(x, 0)]);
        let p = charts[0].presentation().unwrap();
        for t in [int(0), int(3), rat(-1, 2)] {
            assert_eq!(tangent_space_at(&p, &[int(0), t]).unwrap().0, 0);
        }

        let f1 = vanishing_order(2, 1).unwrap();
        for c in blowup_foliation(&f1).unwrap() {
            assert_eq!(c.generators.len(), 4);
            assert!(c.involutive);
        }

        let bad = FoliationPresentation::new(
            crate::poly::default_var_names(2),
            vec![VectorField::euler(2), VectorField::coordinate(2, 0)],
        )
        .unwrap();
        assert_eq!(blowup_foliation(&bad).unwrap_err(), Error::NotVanishingAtOrigin { generator: 1 });
    }

    #[test]
    fn quadratic_perturbation_vanishes_on_divisor() {
        let (_, y) = xy();
        let x = VectorField::euler(2).add(&VectorField::from_component(y.pow(2), 0));
        for chart in 1..=2 {
            let z = blowup_vector_field(&x, chart).unwrap();
            for t in [int(0), int(2), rat(5, 3)] {
                let mut p = vec![t.clone(), t];
                p[chart - 1] = int(0);
                assert!(z.vanishes_at(&p));
            }
        }
    }
}
