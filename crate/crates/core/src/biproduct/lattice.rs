//! The group of group-like elements of `B`, the character group of its
//! dual, and their order-4 subgroup lattices.

use super::build::Biproduct;
use super::ops::{characters_of, psi_ops, reconstruct_chi};
use crate::algebra::character::{convolve_characters, counit_character, Character};
use crate::algebra::grouplike::{central_group_likes, group_likes};
use crate::exact::{kvec_cmp, KVec};
use crate::BiproductError;

/// A finite group presented by its element list and multiplication
/// table, plus the list of order-4 subgroups (as sorted index sets).
#[derive(Clone, Debug)]
pub struct GroupTable {
    pub unit: usize,
    pub table: Vec<Vec<usize>>,
    pub order4_subgroups: Vec<Vec<usize>>,
}

fn build_table<T, FMul, FEq>(
    elements: &[T],
    mul: FMul,
    eq: FEq,
    unit_pos: usize,
) -> Result<GroupTable, BiproductError>
where
    FMul: Fn(&T, &T) -> T,
    FEq: Fn(&T, &T) -> bool,
{
    let n = elements.len();
    if n != 8 {
        return Err(BiproductError::UnexpectedGroup {
            what: format!("expected 8 elements, found {}", n),
        });
    }
    let mut table = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            let p = mul(&elements[i], &elements[j]);
            let k = elements
                .iter()
                .position(|e| eq(e, &p))
                .ok_or_else(|| BiproductError::UnexpectedGroup {
                    what: "product of group elements escapes the set".into(),
                })?;
            table[i][j] = k;
        }
    }
    for (i, row) in table.iter().enumerate() {
        if row[i] != unit_pos {
            return Err(BiproductError::UnexpectedGroup {
                what: "group is not of exponent 2".into(),
            });
        }
    }
    // order-4 subgroups of an elementary abelian group of order 8:
    // {1, a, b, ab} over unordered pairs of distinct non-unit elements
    let mut subs: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        if a == unit_pos {
            continue;
        }
        for b in (a + 1)..n {
            if b == unit_pos {
                continue;
            }
            let mut s = vec![unit_pos, a, b, table[a][b]];
            s.sort_unstable();
            s.dedup();
            if s.len() == 4 && !subs.contains(&s) {
                subs.push(s);
            }
        }
    }
    subs.sort();
    Ok(GroupTable {
        unit: unit_pos,
        table,
        order4_subgroups: subs,
    })
}

/// `G(B)` with its subgroup lattice.
pub struct GroupLikeLattice {
    pub elements: Vec<KVec>,
    pub group: GroupTable,
    pub central: Vec<KVec>,
}

pub fn grouplike_lattice(b: &Biproduct) -> Result<GroupLikeLattice, BiproductError> {
    let chis = reconstruct_chi(b)?;
    let psis = psi_ops(b, &chis);
    let elements = group_likes(&b.hopf, &psis).map_err(BiproductError::Algebra)?;
    let unit_pos = elements
        .iter()
        .position(|e| *e == b.hopf.algebra.unit)
        .ok_or_else(|| BiproductError::UnexpectedGroup {
            what: "unit is not among the group-likes".into(),
        })?;
    let alg = &b.hopf.algebra;
    let group = build_table(
        &elements,
        |x: &KVec, y: &KVec| alg.mul(x, y),
        |x: &KVec, y: &KVec| x == y,
        unit_pos,
    )?;
    let central = central_group_likes(&b.hopf, &elements);
    Ok(GroupLikeLattice {
        elements,
        group,
        central,
    })
}

/// `G(B^*)`: the characters under convolution, with its subgroup
/// lattice and the seven order-4 subgroups labeled through the
/// distinguished generators.
pub struct DualLattice {
    pub characters: Vec<Character>,
    pub group: GroupTable,
    /// Indices of `chi1, chi2, chi3` in `characters`.
    pub chi: [usize; 3],
    /// The seven labeled subgroups, in the fixed labeling order, as
    /// sorted index sets into `characters`.
    pub gamma: Vec<Vec<usize>>,
}

pub fn dual_lattice(b: &Biproduct) -> Result<DualLattice, BiproductError> {
    let mut characters = characters_of(b).map_err(BiproductError::Algebra)?;
    characters.sort_by(|x, y| kvec_cmp(&x.values, &y.values));
    let eps = counit_character(&b.hopf);
    let unit_pos = characters
        .iter()
        .position(|c| *c == eps)
        .ok_or_else(|| BiproductError::UnexpectedGroup {
            what: "counit is not among the characters".into(),
        })?;
    let group = build_table(
        &characters,
        |x: &Character, y: &Character| convolve_characters(&b.hopf, x, y),
        |x: &Character, y: &Character| x == y,
        unit_pos,
    )?;
    let chis = reconstruct_chi(b)?;
    let find = |c: &Character| -> Result<usize, BiproductError> {
        characters
            .iter()
            .position(|x| x == c)
            .ok_or_else(|| BiproductError::UnexpectedGroup {
                what: "distinguished character missing from the group".into(),
            })
    };
    let chi = [find(&chis[0])?, find(&chis[1])?, find(&chis[2])?];
    let mul = |a: usize, b2: usize| group.table[a][b2];
    let (c1, c2, c3) = (chi[0], chi[1], chi[2]);
    let e = unit_pos;
    let mut gamma: Vec<Vec<usize>> = vec![
        vec![e, c1, c2, mul(c1, c2)],
        vec![e, c1, c3, mul(c1, c3)],
        vec![e, c1, mul(c2, c3), mul(c1, mul(c2, c3))],
        vec![e, c2, c3, mul(c2, c3)],
        vec![e, c2, mul(c1, c3), mul(c1, mul(c2, c3))],
        vec![e, c3, mul(c1, c2), mul(c1, mul(c2, c3))],
        vec![e, mul(c2, c3), mul(c1, c3), mul(c1, c2)],
    ];
    for g in gamma.iter_mut() {
        g.sort_unstable();
        g.dedup();
    }
    // the labeled list must be exactly the subgroup lattice
    let mut sorted = gamma.clone();
    sorted.sort();
    if sorted != group.order4_subgroups {
        return Err(BiproductError::UnexpectedGroup {
            what: "labeled subgroups do not exhaust the order-4 subgroups".into(),
        });
    }
    Ok(DualLattice {
        characters,
        group,
        chi,
        gamma,
    })
}
