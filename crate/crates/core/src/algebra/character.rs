//! Characters: unital algebra homomorphisms to the base field, found by
//! exhaustive enumeration of generator images over explicit candidate
//! root sets and filtered through every defining relation.

use num_traits::{Signed, Zero};

use super::presentation::{Presentation, StraightenedAlgebra, WordPoly};
use super::structure::HopfData;
use crate::exact::{kvec_cmp, Cyclo, KVec, Rational};
use crate::AlgebraError;

/// A multiplicative unital functional, tabulated on the whole basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    pub values: KVec,
}

impl Character {
    pub fn of(&self, v: &[Cyclo]) -> Cyclo {
        let mut acc = Cyclo::zero();
        for (a, x) in self.values.iter().zip(v) {
            if !a.is_zero() && !x.is_zero() {
                acc += &(a * x);
            }
        }
        acc
    }

    /// Multiplicativity on all basis pairs against the structure
    /// constants.
    pub fn is_multiplicative(&self, alg: &super::structure::AlgebraData) -> bool {
        if !self.of(&alg.unit).is_one() {
            return false;
        }
        let n = alg.dim;
        for i in 0..n {
            for j in 0..n {
                let prod = self.of(&alg.mult.row_dense(i, j));
                if prod != &self.values[i] * &self.values[j] {
                    return false;
                }
            }
        }
        true
    }
}

/// Convolution product of characters: `(a * b)(x) = a(x_(1)) b(x_(2))`.
pub fn convolve_characters(h: &HopfData, a: &Character, b: &Character) -> Character {
    let n = h.dim();
    let mut values = vec![Cyclo::zero(); n];
    for (i, slot) in values.iter_mut().enumerate() {
        for (l, r, c) in &h.coalgebra.comult[i] {
            *slot += &(&(c * &a.values[*l]) * &b.values[*r]);
        }
    }
    Character { values }
}

/// The counit as a character.
pub fn counit_character(h: &HopfData) -> Character {
    Character {
        values: h.coalgebra.counit.clone(),
    }
}

/// A character is central when its two translation operators agree:
/// `b_(1) chi(b_(2)) = chi(b_(1)) b_(2)` for every basis element. This is
/// centrality of the functional in the dual algebra.
pub fn is_central_character(h: &HopfData, chi: &Character) -> bool {
    let n = h.dim();
    for b in 0..n {
        let mut left = vec![Cyclo::zero(); n];
        let mut right = vec![Cyclo::zero(); n];
        for (l, r, c) in &h.coalgebra.comult[b] {
            left[*l] += &(c * &chi.values[*r]);
            right[*r] += &(c * &chi.values[*l]);
        }
        if left != right {
            return false;
        }
    }
    true
}

/// Rational `k`-th root candidates of a rational: exact integer roots of
/// numerator and denominator when both are perfect powers.
fn rational_root_candidates(r: &Rational, k: u32) -> Vec<Rational> {
    let mut out = Vec::new();
    if r.is_zero() {
        return out;
    }
    let a = r.numer().abs();
    let b = r.denom().clone();
    let ra = a.nth_root(k);
    let rb = b.nth_root(k);
    if num_traits::pow(ra.clone(), k as usize) == a && num_traits::pow(rb.clone(), k as usize) == b
    {
        out.push(Rational::new(ra, rb));
    }
    out
}

/// All solutions of `z^k = c` inside the candidate set
/// `{ w^j * q : j in 0..8, q rational }` where the rational scales are
/// read off from `c` itself. For the presentations in this crate the true
/// root sets are always eighth roots of unity, so the candidate set is
/// complete; when no candidate works the search fails loudly rather than
/// silently pruning.
pub fn kth_roots(c: &Cyclo, k: u32) -> Result<Vec<Cyclo>, AlgebraError> {
    if c.is_zero() {
        return Ok(vec![Cyclo::zero()]);
    }
    let mut scales: Vec<Rational> = vec![Rational::from_integer(1.into())];
    for m in 0..8 {
        // c = w^m * q with q rational?
        let q = c * &Cyclo::omega_pow(-(m as i64));
        if let Some(r) = q.as_rational() {
            scales.extend(rational_root_candidates(r, k));
        }
    }
    scales.sort();
    scales.dedup();
    let mut roots = Vec::new();
    for q in &scales {
        for j in 0..8 {
            let z = Cyclo::omega_pow(j).scale(q);
            if z.pow(k) == *c {
                roots.push(z);
            }
        }
    }
    roots.sort_by(|a, b| kvec_cmp(std::slice::from_ref(a), std::slice::from_ref(b)));
    roots.dedup();
    if roots.is_empty() {
        return Err(AlgebraError::CandidateSetIncomplete {
            relation: format!("z^{} = {}", k, c),
        });
    }
    Ok(roots)
}

/// Evaluate a word polynomial under a partial assignment of generator
/// values; `None` when the polynomial references an unassigned generator.
fn eval_word_poly(poly: &WordPoly, assign: &[Option<Cyclo>]) -> Option<Cyclo> {
    let mut acc = Cyclo::zero();
    for (c, word) in poly {
        let mut term = c.clone();
        for &g in word {
            term = &term * assign[g as usize].as_ref()?;
        }
        acc += &term;
    }
    Some(acc)
}

/// The complete set of characters of a presented algebra.
///
/// Generator images are enumerated in generator order; the candidate set
/// for a generator comes from its power rule, whose right-hand side must
/// evaluate under the assignments made so far. Full assignments are kept
/// when every swap and power rule holds, and each surviving tuple is
/// tabulated on the monomial basis and verified multiplicative against
/// the structure constants.
pub fn characters(
    pres: &Presentation,
    alg: &StraightenedAlgebra,
) -> Result<Vec<Character>, AlgebraError> {
    let m = pres.num_generators();
    let mut assignments: Vec<Vec<Cyclo>> = vec![Vec::new()];
    for g in 0..m {
        let rule = pres.powers.get(&(g as u8)).ok_or_else(|| {
            AlgebraError::CandidateSetIncomplete {
                relation: format!("generator {} has no power rule", g),
            }
        })?;
        let bound = pres.generators[g].bound as u32;
        let mut next = Vec::new();
        for partial in &assignments {
            let assign: Vec<Option<Cyclo>> = (0..m)
                .map(|i| partial.get(i).cloned())
                .collect();
            let target =
                eval_word_poly(rule, &assign).ok_or_else(|| AlgebraError::CandidateSetIncomplete {
                    relation: format!(
                        "power rule of generator {} references a later generator",
                        g
                    ),
                })?;
            for root in kth_roots(&target, bound)? {
                let mut ext = partial.clone();
                ext.push(root);
                next.push(ext);
            }
        }
        assignments = next;
    }

    // filter by all rules
    let eval_full = |poly: &WordPoly, vals: &[Cyclo]| -> Cyclo {
        let assign: Vec<Option<Cyclo>> = vals.iter().cloned().map(Some).collect();
        eval_word_poly(poly, &assign).expect("full assignment")
    };
    let mut chars: Vec<Character> = Vec::new();
    'cand: for vals in &assignments {
        for ((hi, lo), poly) in &pres.swaps {
            let lhs = &vals[*hi as usize] * &vals[*lo as usize];
            if lhs != eval_full(poly, vals) {
                continue 'cand;
            }
        }
        for (g, poly) in &pres.powers {
            let lhs = vals[*g as usize].pow(pres.generators[*g as usize].bound as u32);
            if lhs != eval_full(poly, vals) {
                continue 'cand;
            }
        }
        // tabulate on the monomial basis
        let values: KVec = alg
            .exponents
            .iter()
            .map(|exps| {
                let mut acc = Cyclo::one();
                for (g, &e) in exps.iter().enumerate() {
                    acc = &acc * &vals[g].pow(e as u32);
                }
                acc
            })
            .collect();
        let chi = Character { values };
        if chi.is_multiplicative(&alg.algebra) {
            chars.push(chi);
        }
    }
    chars.sort_by(|a, b| kvec_cmp(&a.values, &b.values));
    chars.dedup();
    Ok(chars)
}
