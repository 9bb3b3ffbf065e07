//! Construction of the two families of Yetter-Drinfel'd Hopf algebras
//! over `K[Z2 x Z2]`, one commutative and one noncommutative, each
//! indexed by a fourth root of unity `zeta`.
//!
//! Both are eight-dimensional with monomial basis `x^i y^j`, carry a
//! basis of eight group-like elements (`omega_1..omega_4` spanning the
//! powers of `x`, `eta_1..eta_4` the coset of `y`), a `G`-action
//! permuting those group-likes, and the coaction derived from the action
//! through the standard bicharacter.

use std::collections::BTreeMap;

use super::klein::{Bicharacter, KleinGroup};
use crate::algebra::antipode::compute_antipode;
use crate::algebra::presentation::{Generator, Presentation, StraightenedAlgebra};
use crate::algebra::structure::{AlgebraData, CoalgebraData};
use crate::exact::{kvec_unit, kvec_zero, Cyclo, KVec, Mat};
use crate::YdError;

#[derive(Clone, Debug)]
pub struct YdHopfAlgebra {
    pub family: u8,
    pub zeta: Cyclo,
    pub group: KleinGroup,
    pub theta: Bicharacter,
    pub straightened: StraightenedAlgebra,
    pub coalgebra: CoalgebraData,
    /// Braided antipode (convolution inverse of the identity).
    pub antipode: Mat,
    /// Action matrix of each group element on the monomial basis.
    pub action: Vec<Mat>,
    /// Coaction components: `delta(a) = sum_g g (x) coaction[g](a)`.
    pub coaction: Vec<Mat>,
    /// Columns: the group-like basis `omega_1..omega_4, eta_1..eta_4`.
    pub group_likes: Mat,
    pub group_like_labels: Vec<String>,
    pub presentation: Presentation,
}

impl YdHopfAlgebra {
    pub fn dim(&self) -> usize {
        self.straightened.algebra.dim
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.straightened.algebra
    }

    /// The monomial `x^i y^j` as a coordinate vector.
    pub fn monomial(&self, i: u8, j: u8) -> KVec {
        self.straightened.monomial(&[i, j])
    }

    pub fn x_vec(&self) -> KVec {
        self.monomial(1, 0)
    }

    pub fn y_vec(&self) -> KVec {
        self.monomial(0, 1)
    }

    /// Group-like basis column as a vector.
    pub fn group_like(&self, m: usize) -> KVec {
        self.group_likes.col(m)
    }
}

fn half() -> Cyclo {
    Cyclo::ratio(1, 2)
}

fn family1_presentation(zeta: &Cyclo) -> Presentation {
    let h = half();
    // y^2 = (1 + zeta x + x^2 - zeta x^3) / 2
    let y_sq = vec![
        (h.clone(), vec![]),
        (&h * zeta, vec![0]),
        (h.clone(), vec![0, 0]),
        (-&(&h * zeta), vec![0, 0, 0]),
    ];
    Presentation {
        generators: vec![
            Generator {
                name: "x".into(),
                bound: 4,
            },
            Generator {
                name: "y".into(),
                bound: 2,
            },
        ],
        swaps: BTreeMap::from([((1u8, 0u8), vec![(Cyclo::one(), vec![0u8, 1u8])])]),
        powers: BTreeMap::from([(0u8, vec![(Cyclo::one(), vec![])]), (1u8, y_sq)]),
        declared_dim: 8,
    }
}

fn family2_presentation(zeta: &Cyclo) -> Presentation {
    let h = half();
    // y^2 = (zeta 1 + x - zeta x^2 + x^3) / 2
    let y_sq = vec![
        (&h * zeta, vec![]),
        (h.clone(), vec![0]),
        (-&(&h * zeta), vec![0, 0]),
        (h.clone(), vec![0, 0, 0]),
    ];
    Presentation {
        generators: vec![
            Generator {
                name: "x".into(),
                bound: 4,
            },
            Generator {
                name: "y".into(),
                bound: 2,
            },
        ],
        // x y = y x^3 rewrites y x -> x^3 y
        swaps: BTreeMap::from([((1u8, 0u8), vec![(Cyclo::one(), vec![0u8, 0u8, 0u8, 1u8])])]),
        powers: BTreeMap::from([(0u8, vec![(Cyclo::one(), vec![])]), (1u8, y_sq)]),
        declared_dim: 8,
    }
}

/// The group-like basis vectors in monomial coordinates, as matrix
/// columns `omega_1..omega_4, eta_1..eta_4`.
fn group_like_matrix(s: &StraightenedAlgebra, zeta: &Cyclo) -> (Mat, Vec<String>) {
    let dim = s.algebra.dim;
    let mono = |i: u8, j: u8| s.monomial(&[i, j]);
    let iota_z2 = &Cyclo::iota() * &zeta.pow(2);
    let a = (&Cyclo::one() + &iota_z2).scale(half().as_rational().unwrap());
    let b = (&Cyclo::one() - &iota_z2).scale(half().as_rational().unwrap());
    let add = |u: &KVec, v: &KVec| -> KVec { u.iter().zip(v).map(|(p, q)| p + q).collect() };
    let scale = |c: &Cyclo, v: &KVec| -> KVec { v.iter().map(|p| c * p).collect() };

    let omega1 = mono(0, 0);
    let omega2 = add(&scale(&a, &mono(1, 0)), &scale(&b, &mono(3, 0)));
    let omega3 = add(&scale(&b, &mono(1, 0)), &scale(&a, &mono(3, 0)));
    let omega4 = mono(2, 0);
    let eta1 = mono(0, 1);
    let eta2 = mono(3, 1);
    let eta3 = mono(2, 1);
    let eta4 = mono(1, 1);

    let cols = [omega1, omega2, omega3, omega4, eta1, eta2, eta3, eta4];
    let mut m = Mat::zero(dim, 8);
    for (j, col) in cols.iter().enumerate() {
        for i in 0..dim {
            m[(i, j)] = col[i].clone();
        }
    }
    let labels = vec![
        "omega1".into(),
        "omega2".into(),
        "omega3".into(),
        "omega4".into(),
        "eta1".into(),
        "eta2".into(),
        "eta3".into(),
        "eta4".into(),
    ];
    (m, labels)
}

/// Coalgebra structure determined by the group-like basis: every column
/// of `p` is group-like, and comultiplication extends linearly.
fn coalgebra_from_group_likes(p: &Mat) -> Result<CoalgebraData, YdError> {
    let dim = p.nrows();
    let p_inv = p
        .inverse()
        .map_err(|_| YdError::AxiomFailure {
            report: "labeled group-like elements are not a basis".into(),
        })?;
    let mut comult = Vec::with_capacity(dim);
    let mut counit = kvec_zero(dim);
    for k in 0..dim {
        let gamma = p_inv.apply(&kvec_unit(dim, k));
        let mut row: BTreeMap<(usize, usize), Cyclo> = BTreeMap::new();
        let mut eps = Cyclo::zero();
        for (m, g) in gamma.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            eps += g;
            let w = p.col(m);
            for (l, wl) in w.iter().enumerate() {
                if wl.is_zero() {
                    continue;
                }
                let gwl = g * wl;
                for (r, wr) in w.iter().enumerate() {
                    if !wr.is_zero() {
                        let e = row.entry((l, r)).or_insert_with(Cyclo::zero);
                        *e += &(&gwl * wr);
                    }
                }
            }
        }
        comult.push(
            row.into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((l, r), c)| (l, r, c))
                .collect(),
        );
        counit[k] = eps;
    }
    Ok(CoalgebraData {
        dim,
        counit,
        comult,
    })
}

/// Action matrices from the generator images, extended as algebra
/// automorphisms (`g.(x^i y^j) = (g.x)^i (g.y)^j`).
fn action_matrices(s: &StraightenedAlgebra, group: &KleinGroup) -> Vec<Mat> {
    let dim = s.algebra.dim;
    let alg = &s.algebra;
    // images of (x, y) under g2 and g3
    let g2_x = s.monomial(&[3, 0]);
    let g2_y = s.monomial(&[3, 1]);
    let g3_x = s.monomial(&[1, 0]);
    let g3_y = s.monomial(&[2, 1]);
    let build = |gx: &KVec, gy: &KVec| -> Mat {
        let mut m = Mat::zero(dim, dim);
        for (col, exps) in s.exponents.iter().enumerate() {
            let xi = alg.pow_vec(gx, exps[0] as u32);
            let yj = alg.pow_vec(gy, exps[1] as u32);
            let img = alg.mul(&xi, &yj);
            for i in 0..dim {
                m[(i, col)] = img[i].clone();
            }
        }
        m
    };
    let a2 = build(&g2_x, &g2_y);
    let a3 = build(&g3_x, &g3_y);
    let a1 = Mat::identity(dim);
    let a4 = a2.matmul(&a3);
    debug_assert_eq!(group.mul(1, 2), 3);
    vec![a1, a2, a3, a4]
}

/// Coaction components from the action through a nondegenerate
/// bicharacter: `delta(a) = (1/4) sum_{g,g'} theta(g, g') g (x) g'.a`.
pub fn coaction_from_action(
    action: &[Mat],
    theta: &Bicharacter,
    group: &KleinGroup,
) -> Result<Vec<Mat>, YdError> {
    if !theta.is_nondegenerate() || !theta.is_bimultiplicative(group) {
        return Err(YdError::DegenerateBicharacter);
    }
    let n = action[0].ncols();
    let quarter = Cyclo::ratio(1, 4);
    let mut out = Vec::with_capacity(4);
    for g in 0..4 {
        let mut m = Mat::zero(n, n);
        for (gp, act) in action.iter().enumerate() {
            m = m.add(&act.scale(&(&quarter * theta.value(g, gp))));
        }
        out.push(m);
    }
    Ok(out)
}

/// Inverse construction: the action recovered from the coaction by
/// pairing with the bicharacter. Round-trips with `coaction_from_action`
/// exactly when `theta` is nondegenerate.
pub fn action_from_coaction(
    coaction: &[Mat],
    theta: &Bicharacter,
) -> Result<Vec<Mat>, YdError> {
    let theta_inv = theta
        .matrix()
        .inverse()
        .map_err(|_| YdError::DegenerateBicharacter)?;
    let n = coaction[0].ncols();
    let four = Cyclo::from_int(4);
    let mut out = Vec::with_capacity(4);
    for gp in 0..4 {
        let mut m = Mat::zero(n, n);
        for (g, comp) in coaction.iter().enumerate() {
            m = m.add(&comp.scale(&(&four * &theta_inv[(gp, g)])));
        }
        out.push(m);
    }
    Ok(out)
}

fn build_family(family: u8, zeta: &Cyclo) -> Result<YdHopfAlgebra, YdError> {
    if !zeta.pow(4).is_one() {
        return Err(YdError::InvalidRoot);
    }
    let presentation = match family {
        1 => family1_presentation(zeta),
        2 => family2_presentation(zeta),
        _ => unreachable!("family tag is 1 or 2"),
    };
    let straightened = presentation.straighten().map_err(YdError::Algebra)?;
    let (group_likes, group_like_labels) = group_like_matrix(&straightened, zeta);
    let coalgebra = coalgebra_from_group_likes(&group_likes)?;
    let group = KleinGroup::new();
    let theta = Bicharacter::standard(zeta)?;
    let action = action_matrices(&straightened, &group);
    let coaction = coaction_from_action(&action, &theta, &group)?;
    let antipode =
        compute_antipode(&straightened.algebra, &coalgebra).map_err(YdError::Algebra)?;
    Ok(YdHopfAlgebra {
        family,
        zeta: zeta.clone(),
        group,
        theta,
        straightened,
        coalgebra,
        antipode,
        action,
        coaction,
        group_likes,
        group_like_labels,
        presentation,
    })
}

/// The commutative family.
pub fn build_family1(zeta: &Cyclo) -> Result<YdHopfAlgebra, YdError> {
    build_family(1, zeta)
}

/// The noncommutative family.
pub fn build_family2(zeta: &Cyclo) -> Result<YdHopfAlgebra, YdError> {
    build_family(2, zeta)
}

pub fn build(family: u8, zeta: &Cyclo) -> Result<YdHopfAlgebra, YdError> {
    match family {
        1 => build_family1(zeta),
        2 => build_family2(zeta),
        _ => Err(YdError::InvalidRoot),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{fourth_roots, Subspace};

    #[test]
    fn rejects_non_roots() {
        assert!(build_family1(&Cyclo::from_int(3)).is_err());
    }

    #[test]
    fn family1_relations() {
        for zeta in fourth_roots() {
            let a = build_family1(&zeta).unwrap();
            let alg = a.algebra();
            let x = a.x_vec();
            let y = a.y_vec();
            assert_eq!(alg.pow_vec(&x, 4), alg.unit);
            // commutativity of the generators
            assert_eq!(alg.mul(&x, &y), alg.mul(&y, &x));
            // y^2 = (1 + zeta x + x^2 - zeta x^3) / 2
            let h = Cyclo::ratio(1, 2);
            let mut expect = kvec_zero(8);
            for (e, c) in [
                (a.monomial(0, 0), h.clone()),
                (a.monomial(1, 0), &h * &zeta),
                (a.monomial(2, 0), h.clone()),
                (a.monomial(3, 0), -&(&h * &zeta)),
            ] {
                for (acc, v) in expect.iter_mut().zip(&e) {
                    *acc += &(&c * v);
                }
            }
            assert_eq!(alg.pow_vec(&y, 2), expect);
        }
    }

    #[test]
    fn family2_straightening() {
        for zeta in fourth_roots() {
            let a = build_family2(&zeta).unwrap();
            let alg = a.algebra();
            let x = a.x_vec();
            let y = a.y_vec();
            // y x = x^3 y
            assert_eq!(alg.mul(&y, &x), a.monomial(3, 1));
            // x y = y x^3 as stated
            let yx3 = alg.mul(&y, &alg.pow_vec(&x, 3));
            assert_eq!(alg.mul(&x, &y), yx3);
            // all eta share the same square
            let y2 = alg.pow_vec(&y, 2);
            for k in 0..4u8 {
                let eta = alg.mul(&alg.pow_vec(&x, k as u32), &y);
                assert_eq!(alg.pow_vec(&eta, 2), y2);
            }
        }
    }

    #[test]
    fn group_like_basis_is_group_like() {
        let iota = Cyclo::iota();
        for family in [1u8, 2] {
            let a = build(family, &iota).unwrap();
            for m in 0..8 {
                assert!(
                    a.coalgebra.is_group_like(&a.group_like(m)),
                    "family {} label {}",
                    family,
                    a.group_like_labels[m]
                );
            }
        }
    }

    #[test]
    fn omega2_value_at_iota() {
        // iota * zeta^2 = -iota when zeta = iota
        let a = build_family1(&Cyclo::iota()).unwrap();
        let h = Cyclo::ratio(1, 2).as_rational().unwrap().clone();
        let lo = (&Cyclo::one() - &Cyclo::iota()).scale(&h);
        let hi = (&Cyclo::one() + &Cyclo::iota()).scale(&h);
        let mut expect = kvec_zero(8);
        for (v, c) in [(a.monomial(1, 0), lo), (a.monomial(3, 0), hi)] {
            for (acc, p) in expect.iter_mut().zip(&v) {
                *acc += &(&c * p);
            }
        }
        assert_eq!(a.group_like(1), expect);
    }

    #[test]
    fn action_permutes_eta_by_group_law() {
        for family in [1u8, 2] {
            for zeta in fourth_roots() {
                let a = build(family, &zeta).unwrap();
                // g_i . eta_{g_j} = eta_{g_i g_j}; eta_m corresponds to
                // group element m in the label order
                for g in 0..4 {
                    for j in 0..4 {
                        let img = a.action[g].apply(&a.group_like(4 + j));
                        assert_eq!(img, a.group_like(4 + a.group.mul(g, j)));
                    }
                    // omegas: g3 fixes all, g2 fixes omega1/omega4 and
                    // swaps omega2/omega3
                    assert_eq!(a.action[2].apply(&a.group_like(1)), a.group_like(1));
                    assert_eq!(a.action[1].apply(&a.group_like(1)), a.group_like(2));
                    assert_eq!(a.action[1].apply(&a.group_like(3)), a.group_like(3));
                }
            }
        }
    }

    #[test]
    fn coaction_counit_law_and_round_trip() {
        for family in [1u8, 2] {
            let a = build(family, &-&Cyclo::iota()).unwrap();
            // (eps_H (x) id) delta = id: components sum to the identity
            let sum = a
                .coaction
                .iter()
                .fold(Mat::zero(8, 8), |acc, m| acc.add(m));
            assert_eq!(sum, Mat::identity(8));
            // fixed vectors coact trivially: delta(1) = g1 (x) 1
            assert_eq!(a.coaction[0].apply(&a.algebra().unit), a.algebra().unit);
            for g in 1..4 {
                assert!(a.coaction[g].apply(&a.algebra().unit).iter().all(|c| c.is_zero()));
            }
            // action recovered from coaction by bicharacter pairing
            let back = action_from_coaction(&a.coaction, &a.theta).unwrap();
            assert_eq!(back, a.action);
        }
    }

    #[test]
    fn omega_span_equals_x_span() {
        for family in [1u8, 2] {
            for zeta in fourth_roots() {
                let a = build(family, &zeta).unwrap();
                let omegas =
                    Subspace::from_rows(8, (0..4).map(|m| a.group_like(m)).collect());
                let xs = Subspace::from_rows(
                    8,
                    (0..4u8).map(|i| a.monomial(i, 0)).collect(),
                );
                assert_eq!(omegas, xs);
            }
        }
    }
}
