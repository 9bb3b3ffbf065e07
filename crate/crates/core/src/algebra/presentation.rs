//! Presentations by generators and relations, and straightening of words
//! into the normal monomial basis.
//!
//! Generators carry a fixed order and an exponent bound. A normal
//! monomial is `g_0^{e_0} ... g_{m-1}^{e_{m-1}}` with `e_i` below the
//! bound of `g_i`. Two kinds of rewrite rules bring arbitrary words into
//! normal form: swap rules replace an out-of-order adjacent pair by a
//! linear combination of words, and power rules replace a maximal power
//! `g^bound` by a polynomial.

use std::collections::BTreeMap;

use crate::exact::{Cyclo, KVec, Tensor3};
use crate::AlgebraError;

/// A word in the generators (sequence of generator indices).
pub type Word = Vec<u8>;

/// A formal linear combination of words.
pub type WordPoly = Vec<(Cyclo, Word)>;

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    /// Exponent bound: `g^bound` rewrites via the power rule, so normal
    /// monomials carry exponents `0..bound`.
    pub bound: u8,
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: Vec<Generator>,
    /// `swap[(hi, lo)]`, for `hi > lo`, rewrites the adjacent word
    /// `hi lo` into a polynomial.
    pub swaps: BTreeMap<(u8, u8), WordPoly>,
    /// `powers[g]` rewrites `g^bound(g)` into a polynomial.
    pub powers: BTreeMap<u8, WordPoly>,
    /// Dimension the normal monomials are expected to span.
    pub declared_dim: usize,
}

/// Reduction strategy; both must produce identical structure constants,
/// which the tests use as a confluence oracle.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReduceOrder {
    LeftmostFirst,
    RightmostFirst,
}

const STEP_BUDGET: usize = 1_000_000;

impl Presentation {
    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Exponent tuples of all normal monomials, in lexicographic order.
    pub fn normal_exponents(&self) -> Vec<Vec<u8>> {
        let mut out = vec![Vec::new()];
        for g in &self.generators {
            let mut next = Vec::new();
            for prefix in &out {
                for e in 0..g.bound {
                    let mut p = prefix.clone();
                    p.push(e);
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }

    pub fn monomial_name(&self, exps: &[u8]) -> String {
        let mut parts = Vec::new();
        for (g, &e) in self.generators.iter().zip(exps) {
            match e {
                0 => {}
                1 => parts.push(g.name.clone()),
                _ => parts.push(format!("{}^{}", g.name, e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }

    fn word_of_exponents(exps: &[u8]) -> Word {
        let mut w = Vec::new();
        for (g, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                w.push(g as u8);
            }
        }
        w
    }

    fn exponents_of_normal_word(&self, w: &[u8]) -> Option<Vec<u8>> {
        let mut exps = vec![0u8; self.generators.len()];
        let mut last = 0u8;
        for &g in w {
            if g < last {
                return None;
            }
            exps[g as usize] += 1;
            if exps[g as usize] >= self.generators[g as usize].bound {
                return None;
            }
            last = g;
        }
        Some(exps)
    }

    /// First reducible position in a word: either an out-of-order
    /// adjacent pair or a maximal power run.
    fn find_redex(&self, w: &[u8], order: ReduceOrder) -> Option<Redex> {
        let positions: Box<dyn Iterator<Item = usize>> = match order {
            ReduceOrder::LeftmostFirst => Box::new(0..w.len()),
            ReduceOrder::RightmostFirst => Box::new((0..w.len()).rev()),
        };
        for p in positions {
            // power run starting at p
            let g = w[p];
            let bound = self.generators[g as usize].bound as usize;
            if p + bound <= w.len() && w[p..p + bound].iter().all(|&x| x == g) {
                return Some(Redex::Power { at: p, gen: g });
            }
            if p + 1 < w.len() && w[p] > w[p + 1] {
                return Some(Redex::Swap { at: p });
            }
        }
        None
    }

    /// Straighten a single word into normal-monomial coordinates.
    pub fn straighten_word(
        &self,
        word: &[u8],
        order: ReduceOrder,
        index_of: &BTreeMap<Vec<u8>, usize>,
        dim: usize,
    ) -> Result<KVec, AlgebraError> {
        let mut terms: BTreeMap<Word, Cyclo> = BTreeMap::new();
        terms.insert(word.to_vec(), Cyclo::one());
        let mut steps = 0usize;
        loop {
            // pick a term with a redex
            let mut redex_term: Option<(Word, Redex)> = None;
            for w in terms.keys() {
                if let Some(r) = self.find_redex(w, order) {
                    redex_term = Some((w.clone(), r));
                    break;
                }
            }
            let Some((w, redex)) = redex_term else {
                break;
            };
            steps += 1;
            if steps > STEP_BUDGET {
                return Err(AlgebraError::Divergence {
                    steps,
                    word: format!("{:?}", word),
                });
            }
            let coeff = terms.remove(&w).expect("term present");
            if coeff.is_zero() {
                continue;
            }
            let (prefix, replacement, suffix): (&[u8], &WordPoly, &[u8]) = match redex {
                Redex::Power { at, gen } => {
                    let bound = self.generators[gen as usize].bound as usize;
                    let rule = self.powers.get(&gen).ok_or(AlgebraError::Divergence {
                        steps,
                        word: format!("missing power rule for generator {}", gen),
                    })?;
                    (&w[..at], rule, &w[at + bound..])
                }
                Redex::Swap { at } => {
                    let key = (w[at], w[at + 1]);
                    let rule = self.swaps.get(&key).ok_or(AlgebraError::Divergence {
                        steps,
                        word: format!("missing swap rule for pair {:?}", key),
                    })?;
                    (&w[..at], rule, &w[at + 2..])
                }
            };
            for (c, repl) in replacement {
                let mut nw = Vec::with_capacity(prefix.len() + repl.len() + suffix.len());
                nw.extend_from_slice(prefix);
                nw.extend_from_slice(repl);
                nw.extend_from_slice(suffix);
                let e = terms.entry(nw).or_insert_with(Cyclo::zero);
                *e += &(&coeff * c);
            }
        }
        let mut out = vec![Cyclo::zero(); dim];
        for (w, c) in terms {
            if c.is_zero() {
                continue;
            }
            let exps = self
                .exponents_of_normal_word(&w)
                .expect("irreducible word is a normal monomial");
            let idx = index_of[&exps];
            out[idx] += &c;
        }
        Ok(out)
    }

    /// Build structure constants over the normal monomial basis.
    pub fn straighten(&self) -> Result<StraightenedAlgebra, AlgebraError> {
        self.straighten_with(ReduceOrder::LeftmostFirst)
    }

    pub fn straighten_with(
        &self,
        order: ReduceOrder,
    ) -> Result<StraightenedAlgebra, AlgebraError> {
        let exps = self.normal_exponents();
        let dim = exps.len();
        if dim != self.declared_dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.declared_dim,
                got: dim,
            });
        }
        let index_of: BTreeMap<Vec<u8>, usize> = exps
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let mut mult = Tensor3::new(dim);
        for (i, ei) in exps.iter().enumerate() {
            for (j, ej) in exps.iter().enumerate() {
                let mut w = Self::word_of_exponents(ei);
                w.extend(Self::word_of_exponents(ej));
                let row = self.straighten_word(&w, order, &index_of, dim)?;
                mult.set_row_dense(i, j, &row);
            }
        }
        let unit_idx = index_of[&vec![0u8; self.generators.len()]];
        let mut unit = vec![Cyclo::zero(); dim];
        unit[unit_idx] = Cyclo::one();
        Ok(StraightenedAlgebra {
            algebra: super::structure::AlgebraData { dim, unit, mult },
            exponents: exps.clone(),
            names: exps.iter().map(|e| self.monomial_name(e)).collect(),
            index_of,
        })
    }

    /// Coordinates of a single generator in the normal basis.
    pub fn generator_vector(&self, g: usize, dim: usize) -> KVec {
        let mut exps = vec![0u8; self.generators.len()];
        exps[g] = 1;
        let mut idx = 0usize;
        for (k, gen) in self.generators.iter().enumerate() {
            idx = idx * gen.bound as usize + exps[k] as usize;
        }
        let mut v = vec![Cyclo::zero(); dim];
        v[idx] = Cyclo::one();
        v
    }
}

enum Redex {
    Power { at: usize, gen: u8 },
    Swap { at: usize },
}

/// Result of straightening: the algebra plus the basis bookkeeping.
#[derive(Clone, Debug)]
pub struct StraightenedAlgebra {
    pub algebra: super::structure::AlgebraData,
    /// Exponent tuple of each basis monomial, lexicographic order.
    pub exponents: Vec<Vec<u8>>,
    pub names: Vec<String>,
    pub index_of: BTreeMap<Vec<u8>, usize>,
}

impl StraightenedAlgebra {
    pub fn monomial(&self, exps: &[u8]) -> KVec {
        let idx = self.index_of[&exps.to_vec()];
        let mut v = vec![Cyclo::zero(); self.algebra.dim];
        v[idx] = Cyclo::one();
        v
    }

    /// Attach the monomial bookkeeping of a presentation to an algebra
    /// already known to live on the same normal-monomial basis order.
    pub fn attach(pres: &Presentation, algebra: super::structure::AlgebraData) -> Self {
        let exps = pres.normal_exponents();
        assert_eq!(exps.len(), algebra.dim);
        let index_of: BTreeMap<Vec<u8>, usize> = exps
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        StraightenedAlgebra {
            algebra,
            names: exps.iter().map(|e| pres.monomial_name(e)).collect(),
            exponents: exps,
            index_of,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Klein four-group as a two-generator presentation.
    fn klein_presentation() -> Presentation {
        Presentation {
            generators: vec![
                Generator {
                    name: "a".into(),
                    bound: 2,
                },
                Generator {
                    name: "b".into(),
                    bound: 2,
                },
            ],
            swaps: BTreeMap::from([(
                (1u8, 0u8),
                vec![(Cyclo::one(), vec![0u8, 1u8])],
            )]),
            powers: BTreeMap::from([
                (0u8, vec![(Cyclo::one(), vec![])]),
                (1u8, vec![(Cyclo::one(), vec![])]),
            ]),
            declared_dim: 4,
        }
    }

    #[test]
    fn klein_structure() {
        let s = klein_presentation().straighten().unwrap();
        assert_eq!(s.algebra.dim, 4);
        // (ab)(ab) = 1
        let ab = s.monomial(&[1, 1]);
        let sq = s.algebra.mul(&ab, &ab);
        assert_eq!(sq, s.algebra.unit);
    }

    #[test]
    fn reduction_orders_agree() {
        let p = klein_presentation();
        let left = p.straighten_with(ReduceOrder::LeftmostFirst).unwrap();
        let right = p.straighten_with(ReduceOrder::RightmostFirst).unwrap();
        assert_eq!(left.algebra, right.algebra);
    }
}
