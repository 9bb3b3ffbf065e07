//! Complete enumeration of group-like elements.
//!
//! Every group-like is a simultaneous eigenvector of the automorphisms
//! `psi_chi` (with eigenvalue `chi(c)`), so the search first splits the
//! space into simultaneous eigenspaces of the supplied family and then
//! solves `Delta(c) = c (x) c` within each eigenspace by support-pattern
//! enumeration. The solver only claims completeness on eigenspaces that
//! are spanned by distinguished basis vectors and of dimension at most 6;
//! anything else raises an error instead of returning a silently partial
//! list. Coalgebras whose basis is already group-like (the
//! Yetter-Drinfel'd algebras here) short-circuit: a full basis of
//! group-likes is the complete set, because group-likes are linearly
//! independent.

use super::structure::HopfData;
use crate::exact::{
    eigenspace, kvec_cmp, kvec_unit, Cyclo, KVec, Mat, Subspace,
};
use crate::AlgebraError;

const MAX_EIGENSPACE_DIM: usize = 6;

fn matrix_order(m: &Mat, bound: u32) -> Result<u32, AlgebraError> {
    let n = m.ncols();
    let id = Mat::identity(n);
    let mut acc = m.clone();
    for k in 1..=bound {
        if acc == id {
            return Ok(k);
        }
        acc = acc.matmul(m);
    }
    Err(AlgebraError::OrderExceedsBound { bound })
}

/// Split `K^n` into the common eigenspaces of a family of finite-order
/// operators. Eigenvalue candidates are the roots of unity in `K` whose
/// order divides the operator order; a dimension count certifies
/// diagonalizability.
pub fn simultaneous_eigenspaces(family: &[Mat], n: usize) -> Result<Vec<Subspace>, AlgebraError> {
    let mut spaces = vec![Subspace::full(n)];
    for psi in family {
        let ord = matrix_order(psi, 64)?;
        let lambdas: Vec<Cyclo> = (0..8)
            .map(Cyclo::omega_pow)
            .filter(|l| l.pow(ord).is_one())
            .collect();
        let mut next = Vec::new();
        for v in &spaces {
            let mut covered = 0;
            for lambda in &lambdas {
                let e = eigenspace(psi, lambda);
                let inter = v.intersect(&e);
                if inter.dim() > 0 {
                    covered += inter.dim();
                    next.push(inter);
                }
            }
            if covered != v.dim() {
                return Err(AlgebraError::NotDiagonalizable);
            }
        }
        spaces = next;
    }
    Ok(spaces)
}

/// Coordinate indices of a subspace spanned by unit vectors, if it is.
fn aligned_indices(s: &Subspace) -> Option<Vec<usize>> {
    let mut idxs = Vec::new();
    for row in s.basis() {
        let mut nz = None;
        for (i, c) in row.iter().enumerate() {
            if !c.is_zero() {
                if nz.is_some() || !c.is_one() {
                    return None;
                }
                nz = Some(i);
            }
        }
        idxs.push(nz?);
    }
    Some(idxs)
}

/// All group-like elements of `h`, sorted by coordinates.
pub fn group_likes(h: &HopfData, family: &[Mat]) -> Result<Vec<KVec>, AlgebraError> {
    let n = h.dim();
    // pointed fast path: a full basis of group-likes is the complete set
    if (0..n).all(|i| h.coalgebra.is_group_like(&kvec_unit(n, i))) {
        return Ok((0..n).map(|i| kvec_unit(n, i)).collect());
    }
    let spaces = if family.is_empty() {
        vec![Subspace::full(n)]
    } else {
        simultaneous_eigenspaces(family, n)?
    };
    let mut found: Vec<KVec> = Vec::new();
    for sp in &spaces {
        if sp.dim() > MAX_EIGENSPACE_DIM {
            return Err(AlgebraError::EigenspaceTooLarge { dim: sp.dim() });
        }
        let idxs = aligned_indices(sp).ok_or(AlgebraError::EigenspaceNotAligned)?;
        solve_eigenspace(h, &idxs, &mut found)?;
    }
    for c in &found {
        debug_assert!(h.coalgebra.is_group_like(c));
    }
    found.sort_by(|a, b| kvec_cmp(a, b));
    found.dedup();
    Ok(found)
}

/// Enumerate group-likes supported inside the coordinate set `idxs`.
fn solve_eigenspace(
    h: &HopfData,
    idxs: &[usize],
    out: &mut Vec<KVec>,
) -> Result<(), AlgebraError> {
    let n = h.dim();
    let d = idxs.len();
    for mask in 1u32..(1 << d) {
        let support: Vec<usize> = (0..d).filter(|m| mask & (1 << m) != 0).collect();
        let coords: Vec<usize> = support.iter().map(|&m| idxs[m]).collect();
        let k = coords.len();
        let pos_of = |c: usize| coords.iter().position(|&x| x == c);

        // Delta of a support combination, grouped by tensor pair:
        // row_map[(l, r)] = coefficient vector over the unknowns t.
        let mut row_map: std::collections::BTreeMap<(usize, usize), KVec> =
            std::collections::BTreeMap::new();
        for (m, &c) in coords.iter().enumerate() {
            for (l, r, coef) in &h.coalgebra.comult[c] {
                let row = row_map
                    .entry((*l, *r))
                    .or_insert_with(|| vec![Cyclo::zero(); k]);
                row[m] += coef;
            }
        }

        // linear phase: Delta(c) must vanish outside support x support
        let outside_rows: Vec<KVec> = row_map
            .iter()
            .filter(|((l, r), _)| pos_of(*l).is_none() || pos_of(*r).is_none())
            .map(|(_, row)| row.clone())
            .collect();
        let w_basis: Vec<KVec> = if outside_rows.is_empty() {
            (0..k).map(|i| kvec_unit(k, i)).collect()
        } else {
            Mat::from_rows(outside_rows).kernel_rows()
        };
        let e = w_basis.len();
        if e == 0 {
            continue;
        }

        // prune: every support coordinate functional must be nonzero
        // somewhere on W, otherwise no solution has full support
        if (0..k).any(|m| w_basis.iter().all(|w| w[m].is_zero())) {
            continue;
        }

        // quadratic equations on W: for (p, q) in support x support,
        // L_pq(t) = t_p * t_q
        let zero_row = vec![Cyclo::zero(); k];
        let mut dead = false;
        let mut pairs: Vec<(usize, usize, &KVec)> = Vec::new();
        for &p in &coords {
            for &q in &coords {
                let l = row_map.get(&(p, q)).unwrap_or(&zero_row);
                // linear part identically zero on W while both factors are
                // nonzero functionals: full-support solutions would need
                // t_p t_q = 0, impossible
                let lin_vanishes = w_basis
                    .iter()
                    .all(|w| w.iter().zip(l).fold(Cyclo::zero(), |acc, (a, b)| acc + (a * b)).is_zero());
                if lin_vanishes {
                    dead = true;
                    break;
                }
                pairs.push((pos_of(p).unwrap(), pos_of(q).unwrap(), l));
            }
            if dead {
                break;
            }
        }
        if dead {
            continue;
        }

        if e > 1 {
            return Err(AlgebraError::SolverIndeterminate { dim: e });
        }

        // one-parameter family t = alpha * w: each equation reads
        // alpha * L(w) = alpha^2 * w_p w_q, so alpha = L(w) / (w_p w_q)
        let w = &w_basis[0];
        let dot = |l: &KVec| -> Cyclo {
            w.iter()
                .zip(l)
                .fold(Cyclo::zero(), |acc, (a, b)| acc + (a * b))
        };
        let (p0, q0, l0) = &pairs[0];
        let denom = &w[*p0] * &w[*q0];
        debug_assert!(!denom.is_zero());
        let alpha = &dot(l0) * &denom.inv()?;
        if alpha.is_zero() {
            continue;
        }
        let consistent = pairs.iter().all(|(p, q, l)| {
            &alpha * &dot(l) == &(&alpha * &alpha) * &(&w[*p] * &w[*q])
        });
        if !consistent {
            continue;
        }
        let t: KVec = w.iter().map(|c| &alpha * c).collect();
        if t.iter().any(|c| c.is_zero()) {
            continue; // smaller support, found under its own pattern
        }
        let mut v = vec![Cyclo::zero(); n];
        for (m, &c) in coords.iter().enumerate() {
            v[c] = t[m].clone();
        }
        if h.coalgebra.is_group_like(&v) {
            out.push(v);
        }
    }
    Ok(())
}

/// Group-likes commuting with every basis element.
pub fn central_group_likes(h: &HopfData, group_likes: &[KVec]) -> Vec<KVec> {
    group_likes
        .iter()
        .filter(|c| h.algebra.left_mult_matrix(c) == h.algebra.right_mult_matrix(c))
        .cloned()
        .collect()
}
