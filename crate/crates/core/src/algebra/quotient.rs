//! Quotient coalgebras `B / B S^+` for a Hopf subalgebra span `S`, and
//! the normality check for Hopf subalgebras.

use super::structure::{CoalgebraData, HopfData};
use crate::exact::{kvec_unit, kvec_zero, Cyclo, KVec, Mat, Subspace};
use crate::AlgebraError;

/// A quotient coalgebra on the deterministic complement basis (the
/// non-pivot coordinates of the ideal's reduced row echelon form).
#[derive(Clone, Debug)]
pub struct QuotientCoalgebra {
    pub coalgebra: CoalgebraData,
    /// Projection matrix `B -> B/I` (quotient dim x ambient dim).
    pub projection: Mat,
    /// The left ideal `I = B * (S intersect ker eps)`.
    pub ideal: Subspace,
    /// Ambient coordinates lifting the quotient basis.
    pub complement: Vec<usize>,
}

impl QuotientCoalgebra {
    pub fn dim(&self) -> usize {
        self.coalgebra.dim
    }

    pub fn project(&self, v: &[Cyclo]) -> KVec {
        self.projection.apply(v)
    }

    /// Canonical lift of a quotient vector.
    pub fn lift(&self, q: &[Cyclo]) -> KVec {
        let mut v = kvec_zero(self.projection.ncols());
        for (m, &c) in self.complement.iter().enumerate() {
            v[c] = q[m].clone();
        }
        v
    }

    /// Induced action of `b` on the quotient via representative lifting.
    pub fn action_matrix(&self, h: &HopfData, b: &[Cyclo]) -> Mat {
        let d = self.dim();
        let mut m = Mat::zero(d, d);
        for j in 0..d {
            let lift = kvec_unit(h.dim(), self.complement[j]);
            let col = self.project(&h.algebra.mul(b, &lift));
            for i in 0..d {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }
}

/// Build `B / B S^+`: computes the left ideal `I = B (S cap ker eps)`,
/// verifies that it is a coideal and stable under left multiplication,
/// and induces the coalgebra structure on the complement coordinates.
pub fn quotient_coalgebra(
    h: &HopfData,
    hsub: &Subspace,
) -> Result<QuotientCoalgebra, AlgebraError> {
    let n = h.dim();
    // S intersect ker(eps)
    let ker_eps = Subspace::from_rows(
        n,
        Mat::from_rows(vec![h.coalgebra.counit.clone()]).kernel_rows(),
    );
    let aug = hsub.intersect(&ker_eps);
    // left ideal spanned by basis * aug-basis
    let mut rows = Vec::new();
    for b in 0..n {
        let eb = kvec_unit(n, b);
        for x in aug.basis() {
            rows.push(h.algebra.mul(&eb, x));
        }
    }
    let ideal = Subspace::from_rows(n, rows);
    // left stability (well-definedness of the induced module structure)
    for b in 0..n {
        let eb = kvec_unit(n, b);
        for x in ideal.basis() {
            if !ideal.contains(&h.algebra.mul(&eb, x)) {
                return Err(AlgebraError::NotACoideal);
            }
        }
    }

    let complement = ideal.complement_cols();
    let d = complement.len();
    let mut projection = Mat::zero(d, n);
    for j in 0..n {
        let red = ideal.reduce(&kvec_unit(n, j));
        for (i, &c) in complement.iter().enumerate() {
            projection[(i, j)] = red[c].clone();
        }
    }

    // coideal check: eps(I) = 0 and (pi (x) pi)(Delta I) = 0
    for x in ideal.basis() {
        if !h.coalgebra.counit_of(x).is_zero() {
            return Err(AlgebraError::NotACoideal);
        }
        let through = h.coalgebra.comult_through(&projection, x);
        if through.iter().any(|c| !c.is_zero()) {
            return Err(AlgebraError::NotACoideal);
        }
    }

    // induced structure on the complement basis
    let mut comult = Vec::with_capacity(d);
    let mut counit = kvec_zero(d);
    for (m, &c) in complement.iter().enumerate() {
        let lift = kvec_unit(n, c);
        let dense = h.coalgebra.comult_through(&projection, &lift);
        let mut row = Vec::new();
        for (idx, coef) in dense.iter().enumerate() {
            if !coef.is_zero() {
                row.push((idx / d, idx % d, coef.clone()));
            }
        }
        comult.push(row);
        counit[m] = h.coalgebra.counit[c].clone();
    }
    let coalgebra = CoalgebraData {
        dim: d,
        counit,
        comult,
    };
    Ok(QuotientCoalgebra {
        coalgebra,
        projection,
        ideal,
        complement,
    })
}

/// Preconditions for a Hopf subalgebra span, with reasons; `None` when
/// the span is a Hopf subalgebra.
pub fn hopf_subalgebra_failure(h: &HopfData, s: &Subspace) -> Option<String> {
    let n = h.dim();
    if !s.contains(&h.algebra.unit) {
        return Some("unit is not contained".into());
    }
    for x in s.basis() {
        for y in s.basis() {
            if !s.contains(&h.algebra.mul(x, y)) {
                return Some("not closed under multiplication".into());
            }
        }
    }
    // subcoalgebra: Delta(S) inside S (x) S, tested through the
    // complement projection on either tensor leg
    let d = n - s.dim();
    let mut q = Mat::zero(d, n);
    let comp = s.complement_cols();
    for j in 0..n {
        let red = s.reduce(&kvec_unit(n, j));
        for (i, &c) in comp.iter().enumerate() {
            q[(i, j)] = red[c].clone();
        }
    }
    for x in s.basis() {
        // accumulate (q (x) id) Delta x and (id (x) q) Delta x
        let mut left = vec![Cyclo::zero(); d * n];
        let mut right = vec![Cyclo::zero(); n * d];
        for (l, r, coef) in h.coalgebra.comult_vec(x) {
            let ql = q.apply(&kvec_unit(n, l));
            for (i, a) in ql.iter().enumerate() {
                if !a.is_zero() {
                    left[i * n + r] += &(a * &coef);
                }
            }
            let qr = q.apply(&kvec_unit(n, r));
            for (i, a) in qr.iter().enumerate() {
                if !a.is_zero() {
                    right[l * d + i] += &(a * &coef);
                }
            }
        }
        if left.iter().any(|c| !c.is_zero()) || right.iter().any(|c| !c.is_zero()) {
            return Some("not a subcoalgebra".into());
        }
    }
    for x in s.basis() {
        if !s.contains(&h.antipode.apply(x)) {
            return Some("not antipode-stable".into());
        }
    }
    None
}

/// Normality of a Hopf subalgebra span: stability under both adjoint
/// actions `b_(1) a S(b_(2))` and `S(b_(1)) a b_(2)` for all basis `b`
/// and all `a` spanning `s`. Errors when `s` is not a Hopf subalgebra at
/// all.
pub fn normal_hopf_subalgebra_check(h: &HopfData, s: &Subspace) -> Result<bool, AlgebraError> {
    if let Some(reason) = hopf_subalgebra_failure(h, s) {
        return Err(AlgebraError::NotAHopfSubalgebra { reason });
    }
    let n = h.dim();
    for b in 0..n {
        for a in s.basis() {
            let mut left = kvec_zero(n);
            let mut right = kvec_zero(n);
            for (l, r, c) in &h.coalgebra.comult[b] {
                let sl = h.antipode.col(*l);
                let sr = h.antipode.col(*r);
                let el = kvec_unit(n, *l);
                let er = kvec_unit(n, *r);
                // b_(1) a S(b_(2))
                let t = h.algebra.mul(&h.algebra.mul(&el, a), &sr);
                for (acc, x) in left.iter_mut().zip(&t) {
                    *acc += &(c * x);
                }
                // S(b_(1)) a b_(2)
                let t = h.algebra.mul(&h.algebra.mul(&sl, a), &er);
                for (acc, x) in right.iter_mut().zip(&t) {
                    *acc += &(c * x);
                }
            }
            if !s.contains(&left) || !s.contains(&right) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
