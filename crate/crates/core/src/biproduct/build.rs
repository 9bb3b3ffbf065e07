//! The Radford biproduct `B = A * H`: the ordinary Hopf algebra on
//! `A (x) H` with smash product multiplication and cosmash product
//! comultiplication, expressed over the monomial basis
//! `u^i v^j r^k s^l` (`i < 4`, `j, k, l < 2`).
//!
//! The same 32-dimensional algebra also has a presentation by the four
//! generators and defining relations; building the structure constants
//! both ways and comparing them entrywise is the module's primary
//! self-check, exercised by the test suite.

use std::collections::BTreeMap;

use crate::algebra::antipode::compute_antipode;
use crate::algebra::presentation::{Generator, Presentation};
use crate::algebra::structure::{AlgebraData, CoalgebraData, HopfData};
use crate::exact::{kvec_unit, kvec_zero, Cyclo, KVec, Mat, Tensor3};
use crate::yetterdrinfeld::{verify_yd_axioms, YdHopfAlgebra};
use crate::YdError;

/// A biproduct with its distinguished generators, embeddings, and the
/// coalgebra projection onto the group-algebra factor.
#[derive(Clone, Debug)]
pub struct Biproduct {
    pub family: u8,
    pub zeta: Cyclo,
    pub hopf: HopfData,
    pub basis_names: Vec<String>,
    /// `A -> B`, `a -> a * 1_H` (32 x 8).
    pub emb_a: Mat,
    /// `H -> B`, `h -> 1_A * h` (32 x 4).
    pub emb_h: Mat,
    /// `B -> H`, `a * h -> eps_A(a) h` (4 x 32).
    pub pi_h: Mat,
    /// Named elements: generators, `c_i`, `d_i`, `h_i`.
    pub named: Vec<(String, KVec)>,
    pub presentation: Presentation,
}

/// Basis index of the monomial `u^i v^j r^k s^l`.
pub fn monomial_index(i: usize, j: usize, k: usize, l: usize) -> usize {
    (((i * 2 + j) * 2) + k) * 2 + l
}

impl Biproduct {
    pub fn dim(&self) -> usize {
        32
    }

    pub fn monomial(&self, i: usize, j: usize, k: usize, l: usize) -> KVec {
        kvec_unit(32, monomial_index(i, j, k, l))
    }

    pub fn named_element(&self, name: &str) -> Option<&KVec> {
        self.named
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
    }

    pub fn u(&self) -> KVec {
        self.monomial(1, 0, 0, 0)
    }

    pub fn v(&self) -> KVec {
        self.monomial(0, 1, 0, 0)
    }

    pub fn r(&self) -> KVec {
        self.monomial(0, 0, 1, 0)
    }

    pub fn s(&self) -> KVec {
        self.monomial(0, 0, 0, 1)
    }

    /// Product of a list of named monomial exponent tuples, e.g. for
    /// spot identities in tests.
    pub fn product(&self, factors: &[(usize, usize, usize, usize)]) -> KVec {
        let mut acc = self.hopf.algebra.unit.clone();
        for &(i, j, k, l) in factors {
            acc = self.hopf.algebra.mul(&acc, &self.monomial(i, j, k, l));
        }
        acc
    }
}

/// The presentation of `B` by generators `u, v, r, s`:
/// `u^4 = 1`, `uv = vu`, `v^2 = (1 + zeta u + u^2 - zeta u^3)/2`,
/// `r^2 = s^2 = 1`, `rs = sr`,
/// `ru = u^3 r`, `rv = u^3 v r`, `su = us`, `sv = u^2 v s`.
pub fn biproduct_presentation(zeta: &Cyclo) -> Presentation {
    let h = Cyclo::ratio(1, 2);
    let one = Cyclo::one;
    let v_sq = vec![
        (h.clone(), vec![]),
        (&h * zeta, vec![0]),
        (h.clone(), vec![0, 0]),
        (-&(&h * zeta), vec![0, 0, 0]),
    ];
    Presentation {
        generators: vec![
            Generator {
                name: "u".into(),
                bound: 4,
            },
            Generator {
                name: "v".into(),
                bound: 2,
            },
            Generator {
                name: "r".into(),
                bound: 2,
            },
            Generator {
                name: "s".into(),
                bound: 2,
            },
        ],
        swaps: BTreeMap::from([
            ((1u8, 0u8), vec![(one(), vec![0, 1])]),
            ((2u8, 0u8), vec![(one(), vec![0, 0, 0, 2])]),
            ((2u8, 1u8), vec![(one(), vec![0, 0, 0, 1, 2])]),
            ((3u8, 0u8), vec![(one(), vec![0, 3])]),
            ((3u8, 1u8), vec![(one(), vec![0, 0, 1, 3])]),
            ((3u8, 2u8), vec![(one(), vec![2, 3])]),
        ]),
        powers: BTreeMap::from([
            (0u8, vec![(one(), vec![])]),
            (1u8, v_sq),
            (2u8, vec![(one(), vec![])]),
            (3u8, vec![(one(), vec![])]),
        ]),
        declared_dim: 32,
    }
}

// tensor-basis index (A part 0..8, H part 0..4) of a monomial
fn tensor_of_monomial(i: usize, j: usize, k: usize, l: usize) -> usize {
    let a_idx = 2 * i + j;
    let h_idx = k + 2 * l; // g2^k g3^l under the bit encoding of G
    a_idx * 4 + h_idx
}

/// Build `B = A * H` from the categorical formulas. The Yetter-Drinfel'd
/// axioms of `A` are verified first; failures propagate.
pub fn build_biproduct(a: &YdHopfAlgebra) -> Result<Biproduct, YdError> {
    let rep = verify_yd_axioms(a);
    if !rep.all_pass() {
        let failed: Vec<String> = rep
            .failures()
            .iter()
            .map(|e| e.name.clone())
            .collect();
        return Err(YdError::AxiomFailure {
            report: failed.join(", "),
        });
    }

    let n = 32;
    let a_alg = a.algebra();
    let group = &a.group;

    // monomial index <-> tensor index
    let mut mono_to_tensor = vec![0usize; n];
    let mut tensor_to_mono = vec![0usize; n];
    for i in 0..4 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let m = monomial_index(i, j, k, l);
                    let t = tensor_of_monomial(i, j, k, l);
                    mono_to_tensor[m] = t;
                    tensor_to_mono[t] = m;
                }
            }
        }
    }

    // smash product multiplication:
    // (e_a (x) g_m)(e_b (x) g_p) = e_a (g_m . e_b) (x) g_{m p}
    let mut mult = Tensor3::new(n);
    for bi in 0..n {
        let (ai, mi) = (mono_to_tensor[bi] / 4, mono_to_tensor[bi] % 4);
        for bj in 0..n {
            let (aj, mj) = (mono_to_tensor[bj] / 4, mono_to_tensor[bj] % 4);
            let acted = a.action[mi].col(aj);
            let prod = a_alg.mul(&kvec_unit(8, ai), &acted);
            let hm = group.mul(mi, mj);
            let mut row = Vec::new();
            for (c_idx, coef) in prod.iter().enumerate() {
                if !coef.is_zero() {
                    row.push((tensor_to_mono[c_idx * 4 + hm], coef.clone()));
                }
            }
            mult.set_row(bi, bj, row);
        }
    }
    let unit = kvec_unit(n, monomial_index(0, 0, 0, 0));
    let algebra = AlgebraData { dim: n, unit, mult };

    // cosmash comultiplication: for group-like h = g_m,
    // Delta(a (x) g_m) = sum over Delta_A(a) and coaction components g of
    //   (a_(1) (x) g g_m) (x) (delta_g(a_(2)) (x) g_m)
    let mut comult = Vec::with_capacity(n);
    let mut counit = kvec_zero(n);
    for b in 0..n {
        let (ab, mb) = (mono_to_tensor[b] / 4, mono_to_tensor[b] % 4);
        let mut row: BTreeMap<(usize, usize), Cyclo> = BTreeMap::new();
        for (l, r, c) in &a.coalgebra.comult[ab] {
            for g in 0..4 {
                let comp = a.coaction[g].col(*r);
                let left = tensor_to_mono[l * 4 + group.mul(g, mb)];
                for (s_idx, coef) in comp.iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    let right = tensor_to_mono[s_idx * 4 + mb];
                    let e = row.entry((left, right)).or_insert_with(Cyclo::zero);
                    *e += &(c * coef);
                }
            }
        }
        comult.push(
            row.into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((l, r), c)| (l, r, c))
                .collect(),
        );
        counit[b] = a.coalgebra.counit[ab].clone();
    }
    let coalgebra = CoalgebraData {
        dim: n,
        counit,
        comult,
    };

    let antipode = compute_antipode(&algebra, &coalgebra).map_err(YdError::Algebra)?;
    let hopf = HopfData {
        algebra,
        coalgebra,
        antipode,
    };

    // embeddings and projection
    let mut emb_a = Mat::zero(n, 8);
    for aj in 0..8 {
        emb_a[(tensor_to_mono[aj * 4], aj)] = Cyclo::one();
    }
    let mut emb_h = Mat::zero(n, 4);
    for m in 0..4 {
        emb_h[(tensor_to_mono[m], m)] = Cyclo::one();
    }
    let mut pi_h = Mat::zero(4, n);
    for b in 0..n {
        let (ab, mb) = (mono_to_tensor[b] / 4, mono_to_tensor[b] % 4);
        pi_h[(mb, b)] = a.coalgebra.counit[ab].clone();
    }

    // names
    let presentation = biproduct_presentation(&a.zeta);
    let mut basis_names = vec![String::new(); n];
    for i in 0..4 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    basis_names[monomial_index(i, j, k, l)] =
                        presentation.monomial_name(&[i as u8, j as u8, k as u8, l as u8]);
                }
            }
        }
    }
    let mut named: Vec<(String, KVec)> = vec![
        ("u".into(), kvec_unit(n, monomial_index(1, 0, 0, 0))),
        ("v".into(), kvec_unit(n, monomial_index(0, 1, 0, 0))),
        ("r".into(), kvec_unit(n, monomial_index(0, 0, 1, 0))),
        ("s".into(), kvec_unit(n, monomial_index(0, 0, 0, 1))),
    ];
    for m in 0..4 {
        named.push((format!("c{}", m + 1), emb_a.apply(&a.group_like(m))));
    }
    for m in 0..4 {
        named.push((format!("d{}", m + 1), emb_a.apply(&a.group_like(4 + m))));
    }
    for m in 0..4 {
        named.push((format!("h{}", m + 1), emb_h.apply(&kvec_unit(4, m))));
    }

    Ok(Biproduct {
        family: a.family,
        zeta: a.zeta.clone(),
        hopf,
        basis_names,
        emb_a,
        emb_h,
        pi_h,
        named,
        presentation,
    })
}
