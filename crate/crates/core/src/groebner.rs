//! Buchberger's algorithm for submodules of `O^s` with a tracked change matrix,
//! full normal forms, and Schreyer syzygies of the computed basis.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use crate::module::{ModuleElement, ModuleOrder, SparseVec};
use crate::poly::{Monomial, Polynomial};
use crate::{Error, Rational};

/// A Gröbner basis together with the matrix expressing it in the input generators.
#[derive(Clone, Debug)]
pub struct GroebnerData {
    nvars: usize,
    rank: usize,
    order: ModuleOrder,
    original_generators: Vec<ModuleElement>,
    basis: Vec<ModuleElement>,
    /// `basis[i] = Σ_j change_matrix[i][j] · original_generators[j]`
    change_matrix: Vec<Vec<Polynomial>>,
    sparse: Vec<SparseVec>,
}

impl GroebnerData {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn original_generators(&self) -> &[ModuleElement] {
        &self.original_generators
    }

    pub fn basis(&self) -> &[ModuleElement] {
        &self.basis
    }

    pub fn change_matrix(&self) -> &[Vec<Polynomial>] {
        &self.change_matrix
    }

    /// Rewrites coefficients on the basis as coefficients on the original generators.
    pub fn to_generator_coefficients(&self, quotients: &[Polynomial]) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> =
            (0..self.original_generators.len()).map(|_| Polynomial::zero(self.nvars)).collect();
        for (q, row) in quotients.iter().zip(&self.change_matrix) {
            if q.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(row) {
                if !c.is_zero() {
                    *o += &(q * c);
                }
            }
        }
        out
    }

    /// True when `v` lies in the submodule.
    pub fn contains(&self, v: &ModuleElement) -> Result<bool, Error> {
        Ok(normal_form(v, self)?.0.is_zero())
    }

    /// Schreyer syzygies of the basis itself, as elements of `O^{#basis}`.
    ///
    /// One syzygy per S-pair that survives Möller's redundancy test on the
    /// leading-term syzygies; these generate the full syzygy module of the basis.
    pub fn basis_syzygies(&self) -> Vec<ModuleElement> {
        let t = self.sparse.len();
        let lead: Vec<&(usize, Monomial, Rational)> =
            self.sparse.iter().map(|s| s.leading().expect("zero in basis")).collect();
        let mut out = Vec::new();
        for i in 0..t {
            for j in i + 1..t {
                if lead[i].0 != lead[j].0 {
                    continue;
                }
                let lcm = lead[i].1.lcm(&lead[j].1);
                let redundant = (0..t).any(|k| {
                    k != i
                        && k != j
                        && lead[k].0 == lead[i].0
                        && lead[k].1.divides(&lcm)
                        && lead[i].1.lcm(&lead[k].1) != lcm
                        && lead[j].1.lcm(&lead[k].1) != lcm
                });
                if redundant {
                    continue;
                }
                let (mi, ci) = (lead[i].1.quotient_of(&lcm), lead[i].2.recip());
                let (mj, cj) = (lead[j].1.quotient_of(&lcm), -lead[j].2.recip());
                let s = SparseVec { terms: Vec::new() }.axpy(&ci, &mi, &self.sparse[i], &self.order).axpy(
                    &cj,
                    &mj,
                    &self.sparse[j],
                    &self.order,
                );
                let (rem, quots) = reduce(s, &self.sparse, &self.order, self.nvars);
                debug_assert!(rem.is_zero(), "S-pair of a Gröbner basis left a remainder");
                let mut comps: Vec<Polynomial> = quots.into_iter().map(|q| -q).collect();
                comps[i] += &Polynomial::monomial(mi, ci);
                comps[j] += &Polynomial::monomial(mj, cj);
                out.push(ModuleElement::new(self.nvars, comps).expect("uniform arity"));
            }
        }
        out
    }
}

/// Computes a Gröbner basis of the submodule generated by `gens`.
///
/// The nonzero input generators open the basis, unchanged and in input order;
/// new elements are appended monic. Pairs are processed by the normal
/// strategy (smallest lcm first, ties by index) with the chain criterion, and
/// the product criterion when the rank is one.
pub fn module_groebner(gens: &[ModuleElement], order: ModuleOrder) -> Result<GroebnerData, Error> {
    let first = gens.first().ok_or(Error::EmptyInput)?;
    let (nvars, rank) = (first.nvars(), first.rank());
    if gens.iter().any(|g| g.nvars() != nvars || g.rank() != rank) {
        return Err(Error::MixedAmbient);
    }
    let r = gens.len();
    let mut sparse: Vec<SparseVec> = Vec::new();
    let mut rows: Vec<Vec<Polynomial>> = Vec::new();
    for (j, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        sparse.push(SparseVec::from_element(g, &order));
        let mut row: Vec<Polynomial> = (0..r).map(|_| Polynomial::zero(nvars)).collect();
        row[j] = Polynomial::one(nvars);
        rows.push(row);
    }

    let mut pending: Vec<(usize, usize)> = Vec::new();
    for j in 0..sparse.len() {
        push_pairs(&mut pending, &sparse, j);
    }

    while !pending.is_empty() {
        let idx = select_pair(&pending, &sparse, &order);
        let (i, j) = pending.remove(idx);
        let (pi, mi_lead, ci_lead) = sparse[i].leading().cloned().expect("nonzero");
        let (_, mj_lead, cj_lead) = sparse[j].leading().cloned().expect("nonzero");
        // the product criterion only holds for ideals
        if rank == 1 && mi_lead.is_coprime(&mj_lead) {
            continue;
        }
        let lcm = mi_lead.lcm(&mj_lead);
        let chain = (0..sparse.len()).any(|k| {
            k != i
                && k != j
                && sparse[k].leading().map(|l| l.0 == pi && l.1.divides(&lcm)).unwrap_or(false)
                && !pending.contains(&ordered(i, k))
                && !pending.contains(&ordered(j, k))
        });
        if chain {
            continue;
        }
        let (mi, ci) = (mi_lead.quotient_of(&lcm), ci_lead.recip());
        let (mj, cj) = (mj_lead.quotient_of(&lcm), -cj_lead.recip());
        let s = SparseVec { terms: Vec::new() }.axpy(&ci, &mi, &sparse[i], &order).axpy(&cj, &mj, &sparse[j], &order);
        let (rem, quots) = reduce(s, &sparse, &order, nvars);
        if rem.is_zero() {
            continue;
        }
        // representation of the remainder in the original generators
        let mut row: Vec<Polynomial> = (0..r).map(|_| Polynomial::zero(nvars)).collect();
        add_scaled_row(&mut row, &Polynomial::monomial(mi, ci), &rows[i]);
        add_scaled_row(&mut row, &Polynomial::monomial(mj, cj), &rows[j]);
        for (q, qrow) in quots.iter().zip(&rows) {
            if !q.is_zero() {
                add_scaled_row(&mut row, &-q, qrow);
            }
        }
        let inv = rem.leading().expect("nonzero").2.recip();
        let rem = rem.scale(&inv);
        for p in row.iter_mut() {
            *p = p.scale(&inv);
        }
        sparse.push(rem);
        rows.push(row);
        push_pairs(&mut pending, &sparse, sparse.len() - 1);
    }

    let basis = sparse.iter().map(|s| s.to_element(nvars, rank)).collect();
    Ok(GroebnerData { nvars, rank, order, original_generators: gens.to_vec(), basis, change_matrix: rows, sparse })
}

/// Full reduction of `v` by the basis of `g`: returns the remainder and the
/// quotients, one per basis element, with `v = Σ quotients_i · basis_i + remainder`.
pub fn normal_form(v: &ModuleElement, g: &GroebnerData) -> Result<(ModuleElement, Vec<Polynomial>), Error> {
    if v.nvars() != g.nvars || v.rank() != g.rank {
        return Err(Error::MixedAmbient);
    }
    let sv = SparseVec::from_element(v, &g.order);
    let (rem, quots) = reduce(sv, &g.sparse, &g.order, g.nvars);
    Ok((rem.to_element(g.nvars, g.rank), quots))
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn push_pairs(pending: &mut Vec<(usize, usize)>, sparse: &[SparseVec], j: usize) {
    let pj = sparse[j].leading().expect("nonzero").0;
    for i in 0..j {
        if sparse[i].leading().expect("nonzero").0 == pj {
            pending.push((i, j));
        }
    }
}

fn select_pair(pending: &[(usize, usize)], sparse: &[SparseVec], order: &ModuleOrder) -> usize {
    let key = |&(i, j): &(usize, usize)| {
        let a = sparse[i].leading().expect("nonzero");
        let b = sparse[j].leading().expect("nonzero");
        (a.0, a.1.lcm(&b.1))
    };
    let mut best = 0;
    let mut best_key = key(&pending[0]);
    for (idx, p) in pending.iter().enumerate().skip(1) {
        let k = key(p);
        let c = order.cmp((k.0, &k.1), (best_key.0, &best_key.1));
        if c == Ordering::Less || (c == Ordering::Equal && *p < pending[best]) {
            best = idx;
            best_key = k;
        }
    }
    best
}

fn add_scaled_row(row: &mut [Polynomial], f: &Polynomial, other: &[Polynomial]) {
    for (a, b) in row.iter_mut().zip(other) {
        if !b.is_zero() {
            *a += &(f * b);
        }
    }
}

/// Reduces every term of `v`; the reducer is the first basis element (in list
/// order) whose leading term divides the current term.
pub(crate) fn reduce(
    mut v: SparseVec,
    basis: &[SparseVec],
    order: &ModuleOrder,
    nvars: usize,
) -> (SparseVec, Vec<Polynomial>) {
    let mut quots: Vec<Polynomial> = vec![Polynomial::zero(nvars); basis.len()];
    let mut rem: Vec<(usize, Monomial, Rational)> = Vec::new();
    while let Some((pos, mono, coeff)) = v.leading().cloned() {
        let reducer = basis.iter().position(|b| {
            let l = b.leading().expect("nonzero");
            l.0 == pos && l.1.divides(&mono)
        });
        match reducer {
            Some(k) => {
                let l = basis[k].leading().expect("nonzero");
                let q = l.1.quotient_of(&mono);
                let c = &coeff / &l.2;
                v = v.axpy(&-c.clone(), &q, &basis[k], order);
                quots[k].add_term(q, c);
            }
            None => {
                rem.push(v.terms.remove(0));
            }
        }
    }
    (SparseVec { terms: rem }, quots)
}

/// Scales `v` so that its coefficients are coprime integers and its leading
/// coefficient is positive.
pub(crate) fn normalize_content(v: &ModuleElement, order: &ModuleOrder) -> ModuleElement {
    use num_integer::Integer;
    let sv = SparseVec::from_element(v, order);
    let Some(lead) = sv.leading() else {
        return v.clone();
    };
    let mut den = num_bigint::BigInt::one();
    let mut num = num_bigint::BigInt::zero();
    for (_, _, c) in &sv.terms {
        den = den.lcm(c.denom());
        num = num.gcd(c.numer());
    }
    let mut scale = Rational::new(den, num);
    if (&lead.2 * &scale) < Rational::zero() {
        scale = -scale;
    }
    v.scale(&scale)
}
