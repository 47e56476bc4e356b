#![allow(dead_code)]

use std::cmp::Ordering;

use folcore::catalog::{annihilator_of, special_orthogonal, tangent_to_ideal, vanishing_on_ideal, vanishing_order};
use folcore::foliation::FoliationPresentation;
use folcore::foliation::{origin, point};
use folcore::groebner::{module_groebner, normal_form, GroebnerData};
use folcore::isotropy::LieAlgebraPresentation;
use folcore::linalg::{span_rref, QMatrix};
use folcore::module::{ModuleElement, ModuleOrder};
use folcore::poly::{default_var_names, int, rat, Monomial, Polynomial};
use folcore::vector_field::VectorField;
use folcore::Rational;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::Rng;

pub fn rng(seed: u64) -> StdRng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == n {
            out.push(Monomial::from_exponents(prefix.clone()));
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(n, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Random polynomial with at most `terms` terms of degree in `min_deg..=max_deg`.
pub fn random_poly(rng: &mut StdRng, n: usize, min_deg: u32, max_deg: u32, terms: usize) -> Polynomial {
    let pool: Vec<Monomial> = monomials_up_to(n, max_deg).into_iter().filter(|m| m.degree() >= min_deg).collect();
    let mut p = Polynomial::zero(n);
    for _ in 0..rng.gen_range(0..=terms) {
        let m = pool[rng.gen_range(0..pool.len())].clone();
        let c = rng.gen_range(-3i64..=3);
        p += &Polynomial::monomial(m, int(c));
    }
    p
}

pub fn random_field(rng: &mut StdRng, n: usize, min_deg: u32, max_deg: u32) -> VectorField {
    VectorField::new((0..n).map(|_| random_poly(rng, n, min_deg, max_deg, 3)).collect()).unwrap()
}

pub fn random_element(rng: &mut StdRng, n: usize, rank: usize, max_deg: u32) -> ModuleElement {
    ModuleElement::new(n, (0..rank).map(|_| random_poly(rng, n, 0, max_deg, 2)).collect()).unwrap()
}

pub fn presentation(gens: Vec<VectorField>) -> FoliationPresentation {
    let n = gens[0].nvars();
    FoliationPresentation::new(default_var_names(n), gens).unwrap()
}

fn leading(v: &ModuleElement, order: &ModuleOrder) -> Option<(usize, Monomial, Rational)> {
    let mut best: Option<(usize, Monomial, Rational)> = None;
    for (pos, p) in v.components().iter().enumerate() {
        for (m, c) in p.terms() {
            let better = match &best {
                None => true,
                Some((bp, bm, _)) => order.cmp((pos, m), (*bp, bm)) == Ordering::Greater,
            };
            if better {
                best = Some((pos, m.clone(), c.clone()));
            }
        }
    }
    best
}

/// Every S-pair of the basis reduces to zero, every basis element is the
/// recorded combination of the inputs, and every input reduces to zero.
pub fn groebner_reverified(gens: &[ModuleElement]) -> bool {
    let order = ModuleOrder::default();
    let g = module_groebner(gens, order).unwrap();
    let basis = g.basis();
    for (b, row) in basis.iter().zip(g.change_matrix()) {
        let mut acc = ModuleElement::zero(g.nvars(), g.rank());
        for (c, x) in row.iter().zip(gens) {
            acc = acc.add(&x.mul_poly(c));
        }
        if &acc != b {
            return false;
        }
    }
    for x in gens {
        if !normal_form(x, &g).unwrap().0.is_zero() {
            return false;
        }
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (pi, mi, ci) = leading(&basis[i], &order).unwrap();
            let (pj, mj, cj) = leading(&basis[j], &order).unwrap();
            if pi != pj {
                continue;
            }
            let l = mi.lcm(&mj);
            let si = basis[i].mul_poly(&Polynomial::monomial(mi.quotient_of(&l), ci.recip()));
            let sj = basis[j].mul_poly(&Polynomial::monomial(mj.quotient_of(&l), cj.recip()));
            let s = si.sub(&sj);
            if !normal_form(&s, &g).unwrap().0.is_zero() {
                return false;
            }
        }
    }
    true
}

/// `v = Σ q_i g_i + rem` with no term of `rem` divisible by a basis leading term in its position.
pub fn division_identity(v: &ModuleElement, g: &GroebnerData) -> bool {
    let (rem, q) = normal_form(v, g).unwrap();
    let mut acc = rem.clone();
    for (qi, b) in q.iter().zip(g.basis()) {
        acc = acc.add(&b.mul_poly(qi));
    }
    if &acc != v {
        return false;
    }
    let leads: Vec<(usize, Monomial, Rational)> = g.basis().iter().map(|b| leading(b, &g.order()).unwrap()).collect();
    rem.components()
        .iter()
        .enumerate()
        .all(|(pos, p)| p.terms().all(|(m, _)| !leads.iter().any(|(lp, lm, _)| *lp == pos && lm.divides(m))))
}

pub fn combine(coeffs: &[Polynomial], gens: &[ModuleElement]) -> ModuleElement {
    let mut acc = ModuleElement::zero(gens[0].nvars(), gens[0].rank());
    for (c, g) in coeffs.iter().zip(gens) {
        acc = acc.add(&g.mul_poly(c));
    }
    acc
}

/// Basis of all syzygies `(a_1 … a_r)` with every `deg a_j ≤ d`, by linear algebra.
pub fn brute_force_syzygies(gens: &[ModuleElement], d: u32) -> Vec<ModuleElement> {
    let (n, r) = (gens[0].nvars(), gens.len());
    let monos = monomials_up_to(n, d);
    let unknowns: Vec<(usize, &Monomial)> = (0..r).flat_map(|j| monos.iter().map(move |m| (j, m))).collect();
    let mut rows: std::collections::BTreeMap<(usize, Monomial), Vec<Rational>> = Default::default();
    for (col, (j, m)) in unknowns.iter().enumerate() {
        for (pos, p) in gens[*j].components().iter().enumerate() {
            for (t, c) in p.terms() {
                let row = rows.entry((pos, t.mul(m))).or_insert_with(|| vec![Rational::zero(); unknowns.len()]);
                row[col] += c;
            }
        }
    }
    let matrix: Vec<Vec<Rational>> = rows.into_values().collect();
    let kernel = if matrix.is_empty() {
        (0..unknowns.len())
            .map(|i| {
                let mut v = vec![Rational::zero(); unknowns.len()];
                v[i] = int(1);
                v
            })
            .collect()
    } else {
        QMatrix::from_rows(&matrix).kernel()
    };
    kernel
        .into_iter()
        .map(|v| {
            let mut comps: Vec<Polynomial> = (0..r).map(|_| Polynomial::zero(n)).collect();
            for (c, (j, m)) in v.iter().zip(&unknowns) {
                if !c.is_zero() {
                    comps[*j] += &Polynomial::monomial((*m).clone(), c.clone());
                }
            }
            ModuleElement::new(n, comps).unwrap()
        })
        .collect()
}

/// Computed syzygies are syzygies, and every bounded-degree syzygy lies in their span.
pub fn syzygies_sound_and_complete(gens: &[ModuleElement], d: u32) -> bool {
    let syz = folcore::syzygy::syzygies(gens).unwrap();
    for s in &syz {
        if !combine(s.components(), gens).is_zero() {
            return false;
        }
    }
    let brute = brute_force_syzygies(gens, d);
    if brute.is_empty() {
        return true;
    }
    if syz.is_empty() {
        return brute.iter().all(ModuleElement::is_zero);
    }
    let g = module_groebner(&syz, ModuleOrder::default()).unwrap();
    brute.iter().all(|b| g.contains(b).unwrap())
}

pub fn vector_field_jacobi(x: &VectorField, y: &VectorField, z: &VectorField) -> bool {
    let a = x.bracket(&y.bracket(z).unwrap()).unwrap();
    let b = y.bracket(&z.bracket(x).unwrap()).unwrap();
    let c = z.bracket(&x.bracket(y).unwrap()).unwrap();
    a.add(&b).add(&c).is_zero()
}

/// Checks that `λ ↦ Σ λ_i images_i` carries the basis of `alg` injectively and
/// bracket-preservingly into the matrix commutator algebra.
#[allow(clippy::needless_range_loop)]
pub fn matrix_representation_is_faithful(alg: &LieAlgebraPresentation, images: &[QMatrix]) -> bool {
    let n = images[0].rows();
    let to_matrix = |v: &[Rational]| {
        let mut m = QMatrix::zero(n, n);
        for (l, img) in v.iter().zip(images) {
            for a in 0..n {
                for b in 0..n {
                    let val = m.get(a, b) + l * img.get(a, b);
                    m.set(a, b, val);
                }
            }
        }
        m
    };
    let mats: Vec<QMatrix> = alg.basis_vectors.iter().map(|v| to_matrix(v)).collect();
    let flat: Vec<Vec<Rational>> = mats.iter().map(|m| (0..n).flat_map(|i| m.row(i)).collect()).collect();
    if span_rref(n * n, &flat).len() != alg.dim {
        return false;
    }
    for a in 0..alg.dim {
        for b in 0..alg.dim {
            let ab = mats[a].mul(&mats[b]);
            let ba = mats[b].mul(&mats[a]);
            let mut expected = QMatrix::zero(n, n);
            for c in 0..alg.dim {
                let k = alg.constant(a, b, c);
                for i in 0..n {
                    for j in 0..n {
                        let v = expected.get(i, j) + k * mats[c].get(i, j);
                        expected.set(i, j, v);
                    }
                }
            }
            for i in 0..n {
                for j in 0..n {
                    if ab.get(i, j) - ba.get(i, j) != *expected.get(i, j) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Transposed Jacobians at `m`: `x_i ∂_j ↦ E_ij` for linear fields.
pub fn transposed_jacobians(f: &FoliationPresentation, m: &[Rational]) -> Vec<QMatrix> {
    f.generators()
        .iter()
        .map(|x| {
            let j = x.jacobian_at(m);
            let n = j.rows();
            let mut t = QMatrix::zero(n, n);
            for a in 0..n {
                for b in 0..n {
                    t.set(a, b, j.get(b, a).clone());
                }
            }
            t
        })
        .collect()
}

pub fn sphere() -> Polynomial {
    let v = |i| Polynomial::var(3, i);
    &(&v(0).pow(2) + &v(1).pow(2)) + &v(2).pow(2)
}

/// Catalog foliations with four sample points each.
pub fn battery() -> Vec<(&'static str, FoliationPresentation, Vec<Vec<Rational>>)> {
    let names2 = default_var_names(2);
    let (x, y) = (Polynomial::var(2, 0), Polynomial::var(2, 1));
    let circle = &(&x.pow(2) + &y.pow(2)) - &Polynomial::one(2);
    let pts2 = vec![origin(2), point(&[1, 0]), point(&[1, 1]), vec![rat(1, 2), int(-3)]];
    let pts3 = vec![origin(3), point(&[1, 0, 0]), point(&[1, 1, 1]), vec![rat(1, 2), int(-3), int(2)]];
    let circ = vec![origin(2), point(&[1, 0]), point(&[0, -1]), point(&[2, 1])];
    vec![
        ("F1", vanishing_order(2, 1).unwrap(), pts2.clone()),
        ("F2", vanishing_order(2, 2).unwrap(), pts2.clone()),
        ("so3", special_orthogonal(3).unwrap(), pts3.clone()),
        ("Fphi", annihilator_of(&default_var_names(3), &sphere()).unwrap(), pts3),
        ("ideal", vanishing_on_ideal(&names2, &[x.pow(2), &x * &y, y.pow(2)]).unwrap(), pts2),
        ("circle", tangent_to_ideal(&names2, &[circle]).unwrap(), circ),
    ]
}
