//! Operations on a built biproduct: coinvariants, the comparison with
//! the quotient coalgebra `B/BH^+`, character reconstruction, the
//! fixed-space description of the powers of `u`, and the explicit
//! isomorphism between the biproducts at `zeta` and `-zeta`.

use super::build::{monomial_index, Biproduct};
use crate::algebra::character::{characters, Character};
use crate::algebra::morphism::{algebra_map_failure, psi_automorphism};
use crate::algebra::presentation::StraightenedAlgebra;
use crate::algebra::quotient::{quotient_coalgebra, QuotientCoalgebra};
use crate::exact::{fixed_space, kvec_unit, Cyclo, Mat, Subspace};
use crate::yetterdrinfeld::YdHopfAlgebra;
use crate::{AlgebraError, BiproductError};

/// Decode a basis index into the exponents `(i, j, k, l)`.
pub fn monomial_exponents(m: usize) -> (usize, usize, usize, usize) {
    (m >> 3, (m >> 2) & 1, (m >> 1) & 1, m & 1)
}

/// The span of the group-algebra factor inside `B`.
pub fn h_span(b: &Biproduct) -> Subspace {
    Subspace::from_rows(32, (0..4).map(|m| b.emb_h.col(m)).collect())
}

/// The image of the `A`-embedding inside `B`.
pub fn a_image(b: &Biproduct) -> Subspace {
    Subspace::from_rows(32, (0..8).map(|m| b.emb_a.col(m)).collect())
}

/// `Span(1, u, u^2, u^3)`.
pub fn u_span(_b: &Biproduct) -> Subspace {
    Subspace::from_rows(
        32,
        (0..4)
            .map(|i| kvec_unit(32, monomial_index(i, 0, 0, 0)))
            .collect(),
    )
}

/// Coinvariants `{b : (id (x) pi_H)(Delta b) = b (x) 1_H}`, computed as
/// the kernel of the defining linear condition.
pub fn coinvariants(b: &Biproduct) -> Subspace {
    let n = 32;
    // rows indexed by (B coordinate, H coordinate)
    let mut m = Mat::zero(n * 4, n);
    for i in 0..n {
        for (l, r, c) in &b.hopf.coalgebra.comult[i] {
            for hm in 0..4 {
                let w = &b.pi_h[(hm, *r)];
                if !w.is_zero() {
                    m[(l * 4 + hm, i)] += &(c * w);
                }
            }
        }
        // subtract b (x) 1_H; the unit of H sits at coordinate 0
        m[(i * 4, i)] -= &Cyclo::one();
    }
    Subspace::from_rows(n, m.kernel_rows())
}

/// The quotient coalgebra `B / B H^+` for the group-algebra factor.
pub fn quotient_by_h(b: &Biproduct) -> Result<QuotientCoalgebra, AlgebraError> {
    quotient_coalgebra(&b.hopf, &h_span(b))
}

/// Matrix of the induced action of the `B`-basis element `m` on `A`
/// (`(a * h).a' = a (h.a')`).
fn b_action_on_a(a: &YdHopfAlgebra, mono: usize) -> Mat {
    let (i, j, k, l) = monomial_exponents(mono);
    let a_part = a.straightened.monomial(&[i as u8, j as u8]);
    let h_idx = k + 2 * l;
    let mut m = Mat::zero(8, 8);
    for col in 0..8 {
        let acted = a.action[h_idx].col(col);
        let img = a.algebra().mul(&a_part, &acted);
        for row in 0..8 {
            m[(row, col)] = img[row].clone();
        }
    }
    m
}

/// The comparison map `A -> B/BH^+`, `a -> class of (a * 1_H)`: checks
/// that it is bijective, a coalgebra map, and linear over the induced
/// `B`-actions on both sides.
pub fn quotient_iso_check(b: &Biproduct, a: &YdHopfAlgebra) -> Result<bool, BiproductError> {
    let quot = quotient_by_h(b).map_err(BiproductError::Algebra)?;
    if quot.dim() != 8 {
        return Ok(false);
    }
    let phi = quot.projection.matmul(&b.emb_a); // 8 x 8
    if phi.rank() != 8 {
        return Ok(false);
    }
    // coalgebra map
    for k in 0..8 {
        let through = a.coalgebra.comult_through(&phi, &kvec_unit(8, k));
        let direct = quot.coalgebra.comult_dense(&phi.col(k));
        if through != direct {
            return Ok(false);
        }
        if quot.coalgebra.counit_of(&phi.col(k)) != a.coalgebra.counit[k] {
            return Ok(false);
        }
    }
    // B-linearity over all basis elements of B
    for mono in 0..32 {
        let on_a = b_action_on_a(a, mono);
        let on_q = quot.action_matrix(&b.hopf, &kvec_unit(32, mono));
        if phi.matmul(&on_a) != on_q.matmul(&phi) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All characters of `B`, via its presentation; the multiplicativity
/// invariant is checked against the biproduct's own structure constants.
pub fn characters_of(b: &Biproduct) -> Result<Vec<Character>, AlgebraError> {
    let attached = StraightenedAlgebra::attach(&b.presentation, b.hopf.algebra.clone());
    characters(&b.presentation, &attached)
}

/// The three distinguished characters: the unique ones whose translation
/// automorphisms scale the monomial basis by `(-1)^j`, `(-1)^k`, and
/// `(-1)^l` respectively. Their generator values are
/// `chi1: (u,v,r,s) -> (1,-1,1,1)`, `chi2 -> (1,1,-1,1)`,
/// `chi3 -> (1,1,1,-1)`.
pub fn reconstruct_chi(b: &Biproduct) -> Result<[Character; 3], BiproductError> {
    let chars = characters_of(b).map_err(BiproductError::Algebra)?;
    let expected = |sel: fn(usize, usize, usize, usize) -> usize| -> Mat {
        let mut m = Mat::zero(32, 32);
        for idx in 0..32 {
            let (i, j, k, l) = monomial_exponents(idx);
            let sign = if sel(i, j, k, l) % 2 == 0 {
                Cyclo::one()
            } else {
                -&Cyclo::one()
            };
            m[(idx, idx)] = sign;
        }
        m
    };
    let selectors: [fn(usize, usize, usize, usize) -> usize; 3] = [
        |_, j, _, _| j,
        |_, _, k, _| k,
        |_, _, _, l| l,
    ];
    let mut out: Vec<Character> = Vec::new();
    for sel in selectors {
        let want = expected(sel);
        let matches: Vec<&Character> = chars
            .iter()
            .filter(|chi| psi_automorphism(&b.hopf, chi) == want)
            .collect();
        match matches.as_slice() {
            [one] => out.push((*one).clone()),
            [] => {
                return Err(BiproductError::Reconstruction {
                    what: "no character induces the required eigenvalues".into(),
                })
            }
            _ => {
                return Err(BiproductError::Reconstruction {
                    what: "several characters induce the required eigenvalues".into(),
                })
            }
        }
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone()])
}

/// The `psi` automorphisms of the three distinguished characters.
pub fn psi_ops(b: &Biproduct, chis: &[Character; 3]) -> [Mat; 3] {
    [
        psi_automorphism(&b.hopf, &chis[0]),
        psi_automorphism(&b.hopf, &chis[1]),
        psi_automorphism(&b.hopf, &chis[2]),
    ]
}

/// Simultaneous fixed space of the three translation automorphisms; by
/// the eigenvalue table this is exactly `Span(1, u, u^2, u^3)`.
pub fn invariant_subalgebra(b: &Biproduct, chis: &[Character; 3]) -> Subspace {
    let psis = psi_ops(b, chis);
    fixed_space(&psis)
}

/// The explicit isomorphism onto the biproduct at the negated parameter:
/// `u -> u'^3`, `v -> v'`, `r -> r's'`, `s -> s'`, extended to the
/// monomial basis. Errors when the generator images do not satisfy the
/// defining relations (they always do when the parameters are negatives
/// of each other).
pub fn explicit_iso_to_negative(b: &Biproduct, target: &Biproduct) -> Result<Mat, BiproductError> {
    if target.zeta != -&b.zeta {
        return Err(BiproductError::NotASignPair);
    }
    let alg = &target.hopf.algebra;
    let fu = alg.pow_vec(&target.u(), 3);
    let fv = target.v();
    let fr = alg.mul(&target.r(), &target.s());
    let fs = target.s();
    let mut f = Mat::zero(32, 32);
    for idx in 0..32 {
        let (i, j, k, l) = monomial_exponents(idx);
        let mut img = alg.pow_vec(&fu, i as u32);
        for _ in 0..j {
            img = alg.mul(&img, &fv);
        }
        for _ in 0..k {
            img = alg.mul(&img, &fr);
        }
        for _ in 0..l {
            img = alg.mul(&img, &fs);
        }
        for row in 0..32 {
            f[(row, idx)] = img[row].clone();
        }
    }
    if let Some(reason) = algebra_map_failure(&f, &b.hopf, &target.hopf) {
        return Err(BiproductError::RelationViolation { what: reason });
    }
    Ok(f)
}
