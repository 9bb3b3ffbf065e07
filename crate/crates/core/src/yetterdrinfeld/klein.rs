//! The Klein four-group, its group algebra, and the symmetric
//! bicharacter that drives the coaction.

use crate::exact::{Cyclo, Mat};
use crate::YdError;

/// `G = Z2 x Z2` with elements `g1 = (0,0)`, `g2 = (1,0)`, `g3 = (0,1)`,
/// `g4 = (1,1)`, written multiplicatively; `g1` is the unit.
#[derive(Clone, Debug)]
pub struct KleinGroup {
    table: [[usize; 4]; 4],
}

impl KleinGroup {
    pub fn new() -> Self {
        let mut table = [[0usize; 4]; 4];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = i ^ j; // bit pairs compose by xor
            }
        }
        KleinGroup { table }
    }

    pub fn order(&self) -> usize {
        4
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        i // every element squares to the identity
    }

    /// `g h g^-1`; trivial here but kept in formulas for auditability.
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn element_name(&self, i: usize) -> String {
        format!("g{}", i + 1)
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.iter().map(|r| r.to_vec()).collect()
    }
}

impl Default for KleinGroup {
    fn default() -> Self {
        Self::new()
    }
}

/// A symmetric bicharacter on `G`, stored as its full 4x4 value table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    values: [[Cyclo; 4]; 4],
}

impl Bicharacter {
    /// The bicharacter with fundamental matrix
    /// `[[zeta^2, -1], [-1, 1]]` on the generators `(g2, g3)`, extended
    /// bimultiplicatively.
    pub fn standard(zeta: &Cyclo) -> Result<Self, YdError> {
        if !zeta.pow(4).is_one() {
            return Err(YdError::InvalidRoot);
        }
        let z2 = zeta.pow(2);
        let m1 = -&Cyclo::one();
        // theta on generator pairs
        let fundamental = |a: usize, b: usize| -> Cyclo {
            match (a, b) {
                (0, 0) => z2.clone(),
                (0, 1) | (1, 0) => m1.clone(),
                (1, 1) => Cyclo::one(),
                _ => unreachable!(),
            }
        };
        let mut values: [[Cyclo; 4]; 4] =
            std::array::from_fn(|_| std::array::from_fn(|_| Cyclo::one()));
        for g in 0..4 {
            for h in 0..4 {
                let (b1, b2) = (g & 1, (g >> 1) & 1); // g2-, g3-components
                let (c1, c2) = (h & 1, (h >> 1) & 1);
                let mut v = Cyclo::one();
                for (i, bi) in [(0, b1), (1, b2)] {
                    for (j, cj) in [(0, c1), (1, c2)] {
                        if bi == 1 && cj == 1 {
                            v = &v * &fundamental(i, j);
                        }
                    }
                }
                values[g][h] = v;
            }
        }
        Ok(Bicharacter { values })
    }

    pub fn value(&self, g: usize, h: usize) -> &Cyclo {
        &self.values[g][h]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..4).all(|g| (0..4).all(|h| self.values[g][h] == self.values[h][g]))
    }

    /// Multiplicative in each argument, exhaustively.
    pub fn is_bimultiplicative(&self, group: &KleinGroup) -> bool {
        for g in 0..4 {
            for gp in 0..4 {
                for h in 0..4 {
                    let lhs = &self.values[group.mul(g, gp)][h];
                    if *lhs != &self.values[g][h] * &self.values[gp][h] {
                        return false;
                    }
                    let lhs = &self.values[h][group.mul(g, gp)];
                    if *lhs != &self.values[h][g] * &self.values[h][gp] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Nondegeneracy: `g -> theta(g, .)` is injective into the character
    /// set, i.e. all rows are distinct.
    pub fn is_nondegenerate(&self) -> bool {
        for g in 0..4 {
            for h in (g + 1)..4 {
                if self.values[g] == self.values[h] {
                    return false;
                }
            }
        }
        true
    }

    /// The 4x4 value matrix (invertible iff nondegenerate over an
    /// abelian group, by character independence).
    pub fn matrix(&self) -> Mat {
        let mut m = Mat::zero(4, 4);
        for g in 0..4 {
            for h in 0..4 {
                m[(g, h)] = self.values[g][h].clone();
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fourth_roots;

    #[test]
    fn group_axioms() {
        let g = KleinGroup::new();
        for i in 0..4 {
            assert_eq!(g.mul(i, i), 0);
            assert_eq!(g.mul(0, i), i);
            for j in 0..4 {
                assert_eq!(g.mul(i, j), g.mul(j, i));
                assert_eq!(g.conj(i, j), j);
            }
        }
        assert_eq!(g.mul(1, 2), 3); // g2 g3 = g4
    }

    #[test]
    fn bicharacter_properties() {
        let g = KleinGroup::new();
        for zeta in fourth_roots() {
            let theta = Bicharacter::standard(&zeta).unwrap();
            assert!(theta.is_symmetric());
            assert!(theta.is_bimultiplicative(&g));
            assert!(theta.is_nondegenerate());
            assert_eq!(*theta.value(1, 1), zeta.pow(2));
            assert_eq!(*theta.value(1, 2), -&Cyclo::one());
            assert!(theta.value(2, 2).is_one());
            assert!(theta.matrix().inverse().is_ok());
        }
    }

    #[test]
    fn bicharacter_rejects_non_roots() {
        assert!(Bicharacter::standard(&Cyclo::from_int(2)).is_err());
    }
}
