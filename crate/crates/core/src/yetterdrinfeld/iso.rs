//! Exhaustive isomorphism search between Yetter-Drinfel'd Hopf algebras,
//! and the degree-6 relations satisfied by the second generator.
//!
//! An isomorphism must send the eight group-likes of the source
//! bijectively onto the eight group-likes of the target, so the search
//! enumerates those bijections and keeps the ones whose linear extension
//! is an algebra map, commutes with the action, and intertwines the
//! coactions. All bookkeeping happens in group-like coordinates, where a
//! candidate is just a permutation and the filters are table lookups.

use super::family::YdHopfAlgebra;
use crate::exact::{kvec_cmp, Cyclo, KVec, Mat};
use crate::YdError;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchMode {
    /// Skip bijections that move the unit or break action-orbit lengths.
    Pruned,
    /// The unpruned scan over all bijections; the ground-truth oracle.
    Full,
}

/// Data of one side translated into group-like coordinates.
struct Side {
    p: Mat,
    p_inv: Mat,
    /// products of group-likes, in group-like coordinates
    mult: Vec<Vec<KVec>>,
    /// action permutations on group-like indices
    perms: Vec<Vec<usize>>,
    /// coaction components in group-like coordinates
    coact: Vec<Vec<KVec>>,
    /// orbit size of each group-like under the action
    orbit_len: Vec<usize>,
}

fn side(a: &YdHopfAlgebra) -> Result<Side, YdError> {
    let p = a.group_likes.clone();
    let p_inv = p.inverse().map_err(|_| YdError::AxiomFailure {
        report: "group-like basis is singular".into(),
    })?;
    let n = a.dim();
    let cols: Vec<KVec> = (0..n).map(|m| p.col(m)).collect();
    let mut mult = Vec::with_capacity(n);
    for wi in &cols {
        let mut row = Vec::with_capacity(n);
        for wj in &cols {
            row.push(p_inv.apply(&a.algebra().mul(wi, wj)));
        }
        mult.push(row);
    }
    let mut perms = Vec::with_capacity(4);
    for act in &a.action {
        let mut perm = Vec::with_capacity(n);
        for wi in &cols {
            let img = act.apply(wi);
            let j = cols
                .iter()
                .position(|w| *w == img)
                .ok_or_else(|| YdError::AxiomFailure {
                    report: "action does not permute the group-like basis".into(),
                })?;
            perm.push(j);
        }
        perms.push(perm);
    }
    let coact: Vec<Vec<KVec>> = a
        .coaction
        .iter()
        .map(|comp| cols.iter().map(|w| p_inv.apply(&comp.apply(w))).collect())
        .collect();
    let mut orbit_len = vec![0usize; n];
    for (i, len) in orbit_len.iter_mut().enumerate() {
        let mut orbit: Vec<usize> = perms.iter().map(|p| p[i]).collect();
        orbit.sort_unstable();
        orbit.dedup();
        *len = orbit.len();
    }
    Ok(Side {
        p,
        p_inv,
        mult,
        perms,
        coact,
        orbit_len,
    })
}

fn permute_coords(sigma: &[usize], v: &[Cyclo]) -> KVec {
    let mut out = vec![Cyclo::zero(); v.len()];
    for (k, c) in v.iter().enumerate() {
        out[sigma[k]] = c.clone();
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The complete list of Yetter-Drinfel'd Hopf algebra isomorphisms from
/// `a` to `b`, as matrices in monomial coordinates, sorted
/// deterministically. Empty when the algebras are not isomorphic.
pub fn yd_iso_search(
    a: &YdHopfAlgebra,
    b: &YdHopfAlgebra,
    mode: SearchMode,
) -> Result<Vec<Mat>, YdError> {
    let sa = side(a)?;
    let sb = side(b)?;
    let n = a.dim();
    if n != b.dim() {
        return Ok(Vec::new());
    }
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut found: Vec<Mat> = Vec::new();
    loop {
        if admissible(&sa, &sb, &sigma, mode) && is_morphism(&sa, &sb, &sigma) {
            // monomial-coordinate matrix: p_b . perm . p_a^-1
            let mut perm = Mat::zero(n, n);
            for (i, &si) in sigma.iter().enumerate() {
                perm[(si, i)] = Cyclo::one();
            }
            found.push(sb.p.matmul(&perm).matmul(&sa.p_inv));
        }
        if !next_permutation(&mut sigma) {
            break;
        }
    }
    found.sort_by(|x, y| {
        let fx: KVec = (0..n).flat_map(|i| x.row(i).to_vec()).collect();
        let fy: KVec = (0..n).flat_map(|i| y.row(i).to_vec()).collect();
        kvec_cmp(&fx, &fy)
    });
    Ok(found)
}

fn admissible(sa: &Side, sb: &Side, sigma: &[usize], mode: SearchMode) -> bool {
    match mode {
        SearchMode::Full => true,
        SearchMode::Pruned => {
            sigma[0] == 0
                && sigma
                    .iter()
                    .enumerate()
                    .all(|(i, &si)| sa.orbit_len[i] == sb.orbit_len[si])
        }
    }
}

fn is_morphism(sa: &Side, sb: &Side, sigma: &[usize]) -> bool {
    let n = sigma.len();
    // H-linearity: sigma conjugates each action permutation
    for (pa, pb) in sa.perms.iter().zip(&sb.perms) {
        for i in 0..n {
            if sigma[pa[i]] != pb[sigma[i]] {
                return false;
            }
        }
    }
    // colinearity: coaction components intertwine
    for (ca, cb) in sa.coact.iter().zip(&sb.coact) {
        for i in 0..n {
            if permute_coords(sigma, &ca[i]) != cb[sigma[i]] {
                return false;
            }
        }
    }
    // algebra map on all pairs of group-likes
    for i in 0..n {
        for j in 0..n {
            if permute_coords(sigma, &sa.mult[i][j]) != sb.mult[sigma[i]][sigma[j]] {
                return false;
            }
        }
    }
    true
}

/// The degree-6 polynomial identity satisfied by `y`: for the
/// commutative family at a non-primitive parameter,
/// `y^6 - y^4 + y^2 - 1 = 0`; for the noncommutative family at a
/// primitive parameter, `y^6 - zeta y^4 - y^2 + zeta = 0`.
pub fn degree6_check(a: &YdHopfAlgebra) -> Result<bool, YdError> {
    let primitive = crate::exact::is_primitive_fourth_root(&a.zeta);
    let alg = a.algebra();
    let y = a.y_vec();
    let pows: Vec<KVec> = (0..=6).map(|k| alg.pow_vec(&y, k)).collect();
    let value: KVec = match (a.family, primitive) {
        (1, false) => {
            // y^6 - y^4 + y^2 - 1
            pows[6]
                .iter()
                .zip(&pows[4])
                .zip(&pows[2])
                .zip(&pows[0])
                .map(|(((a6, a4), a2), a0)| &(&(a6 - a4) + a2) - a0)
                .collect()
        }
        (2, true) => {
            // y^6 - zeta y^4 - y^2 + zeta 1
            let z = &a.zeta;
            pows[6]
                .iter()
                .zip(&pows[4])
                .zip(&pows[2])
                .zip(&pows[0])
                .map(|(((a6, a4), a2), a0)| &(&(a6 - &(z * a4)) - a2) + &(z * a0))
                .collect()
        }
        (1, true) => {
            return Err(YdError::WrongCase {
                expected: "family 1 with a non-primitive parameter".into(),
            })
        }
        (2, false) => {
            return Err(YdError::WrongCase {
                expected: "family 2 with a primitive parameter".into(),
            })
        }
        _ => unreachable!(),
    };
    Ok(value.iter().all(|c| c.is_zero()))
}
