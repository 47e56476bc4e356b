//! Elements of free modules `O^s`, polynomial matrices, and the
//! position-over-term module order.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::Zero;

use crate::linalg::QMatrix;
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::{Error, Rational};

/// An element of the free module `O^s`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModuleElement {
    nvars: usize,
    components: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(nvars: usize, components: Vec<Polynomial>) -> Result<Self, Error> {
        if components.iter().any(|p| p.nvars() != nvars) {
            return Err(Error::MixedAmbient);
        }
        Ok(ModuleElement { nvars, components })
    }

    /// Panics when the components disagree on the variable count.
    pub fn from_components(components: Vec<Polynomial>) -> Self {
        let nvars = components.first().map(Polynomial::nvars).expect("empty module element");
        ModuleElement::new(nvars, components).expect("components in different rings")
    }

    pub fn zero(nvars: usize, rank: usize) -> Self {
        ModuleElement { nvars, components: (0..rank).map(|_| Polynomial::zero(nvars)).collect() }
    }

    pub fn unit(nvars: usize, rank: usize, i: usize) -> Self {
        let mut e = ModuleElement::zero(nvars, rank);
        e.components[i] = Polynomial::one(nvars);
        e
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        debug_assert_eq!(self.rank(), other.rank());
        ModuleElement {
            nvars: self.nvars,
            components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        debug_assert_eq!(self.rank(), other.rank());
        ModuleElement {
            nvars: self.nvars,
            components: self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> ModuleElement {
        ModuleElement { nvars: self.nvars, components: self.components.iter().map(|a| a * f).collect() }
    }

    pub fn scale(&self, c: &Rational) -> ModuleElement {
        ModuleElement { nvars: self.nvars, components: self.components.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn eval(&self, point: &[Rational]) -> Vec<Rational> {
        self.components.iter().map(|p| p.eval(point)).collect()
    }

    pub(crate) fn add_assign_scaled(&mut self, f: &Polynomial, other: &ModuleElement) {
        for (a, b) in self.components.iter_mut().zip(&other.components) {
            *a += &(b * f);
        }
    }
}

/// `Σ coeffs_i · elems_i`.
pub fn linear_combination(coeffs: &[Polynomial], elems: &[ModuleElement]) -> ModuleElement {
    let first = elems.first().expect("linear combination of nothing");
    let mut acc = ModuleElement::zero(first.nvars(), first.rank());
    for (c, e) in coeffs.iter().zip(elems) {
        if !c.is_zero() {
            acc.add_assign_scaled(c, e);
        }
    }
    acc
}

/// Module term order: position over term, lower position index dominant.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ModuleOrder {
    pub base: MonomialOrder,
}

impl ModuleOrder {
    pub fn new(base: MonomialOrder) -> Self {
        ModuleOrder { base }
    }

    pub fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        b.0.cmp(&a.0).then_with(|| self.base.cmp(a.1, b.1))
    }
}

/// A dense `rows × cols` matrix of polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    nvars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(nvars: usize, rows: usize, cols: usize) -> Self {
        PolyMatrix { nvars, rows, cols, entries: (0..rows * cols).map(|_| Polynomial::zero(nvars)).collect() }
    }

    pub fn identity(nvars: usize, n: usize) -> Self {
        let mut m = PolyMatrix::zero(nvars, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(nvars));
        }
        m
    }

    /// Builds the matrix whose columns are `cols`, each of length `rows`.
    pub fn from_columns(nvars: usize, rows: usize, cols: &[ModuleElement]) -> Result<Self, Error> {
        let mut m = PolyMatrix::zero(nvars, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.rank() != rows || c.nvars() != nvars {
                return Err(Error::MixedAmbient);
            }
            for i in 0..rows {
                m.set(i, j, c.component(i).clone());
            }
        }
        Ok(m)
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<Polynomial>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, found: row.len() });
            }
            for p in row {
                if p.nvars() != nvars {
                    return Err(Error::MixedAmbient);
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix { nvars, rows: r, cols: c, entries })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> ModuleElement {
        ModuleElement { nvars: self.nvars, components: (0..self.rows).map(|i| self.get(i, j).clone()).collect() }
    }

    pub fn columns(&self) -> Vec<ModuleElement> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = PolyMatrix::zero(self.nvars, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(self.nvars);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &ModuleElement) -> Result<ModuleElement, Error> {
        if v.rank() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.rank() });
        }
        let mut comps = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = Polynomial::zero(self.nvars);
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), v.component(k));
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            comps.push(acc);
        }
        Ok(ModuleElement { nvars: self.nvars, components: comps })
    }

    pub fn eval(&self, point: &[Rational]) -> QMatrix {
        let mut m = QMatrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j).eval(point);
                if !v.is_zero() {
                    m.set(i, j, v);
                }
            }
        }
        m
    }
}

/// Sparse module vector used inside the Gröbner engine: terms sorted
/// strictly descending in a fixed module order.
#[derive(Clone, Debug)]
pub(crate) struct SparseVec {
    pub terms: Vec<(usize, Monomial, Rational)>,
}

impl SparseVec {
    pub fn from_element(v: &ModuleElement, order: &ModuleOrder) -> Self {
        let mut terms: Vec<(usize, Monomial, Rational)> = Vec::new();
        for (pos, p) in v.components().iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push((pos, m.clone(), c.clone()));
            }
        }
        terms.sort_by(|a, b| order.cmp((b.0, &b.1), (a.0, &a.1)));
        SparseVec { terms }
    }

    pub fn to_element(&self, nvars: usize, rank: usize) -> ModuleElement {
        let mut comps: Vec<Polynomial> = (0..rank).map(|_| Polynomial::zero(nvars)).collect();
        for (pos, m, c) in &self.terms {
            comps[*pos].add_term(m.clone(), c.clone());
        }
        ModuleElement { nvars, components: comps }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(usize, Monomial, Rational)> {
        self.terms.first()
    }

    /// `self + c · m · other`, merging two descending term lists.
    pub fn axpy(&self, c: &Rational, m: &Monomial, other: &SparseVec, order: &ModuleOrder) -> SparseVec {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(p, t, k)| (*p, t.mul(m), k * c)).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match order.cmp((x.0, &x.1), (y.0, &y.1)) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let s = &x.2 + &y.2;
                        if !s.is_zero() {
                            out.push((x.0, x.1.clone(), s));
                        }
                    }
                },
            }
        }
        SparseVec { terms: out }
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        SparseVec { terms: self.terms.iter().map(|(p, m, k)| (*p, m.clone(), k * c)).collect() }
    }
}
