//! Axiom verification for Yetter-Drinfel'd Hopf algebras: module and
//! comodule laws, their compatibility, and the braided bialgebra and
//! antipode laws. Everything is scanned exhaustively over basis tuples.

use std::collections::BTreeMap;

use super::family::YdHopfAlgebra;
use crate::algebra::check::{check_bialgebra, AxiomReport};
use crate::exact::{kvec_unit, kvec_zero, Cyclo, KVec, Mat};

type PairMap = BTreeMap<(usize, usize), Cyclo>;

fn pair_map_of_dense(v: &[Cyclo], n: usize) -> PairMap {
    let mut m = PairMap::new();
    for (idx, c) in v.iter().enumerate() {
        if !c.is_zero() {
            m.insert((idx / n, idx % n), c.clone());
        }
    }
    m
}

/// Full axiom report for a Yetter-Drinfel'd Hopf algebra.
pub fn verify_yd_axioms(a: &YdHopfAlgebra) -> AxiomReport {
    let n = a.dim();
    let alg = a.algebra().clone();
    let coa = &a.coalgebra;
    let group = &a.group;

    // plain algebra/coalgebra axioms; ordinary multiplicativity of the
    // comultiplication does not apply in the braided setting
    let mut rep = check_bialgebra(&alg, coa);
    rep.entries
        .retain(|e| e.name != "comultiplication multiplicative");

    // G-representation
    let rep_ok = a.action[0] == Mat::identity(n)
        && (0..4).all(|i| {
            (0..4).all(|j| a.action[i].matmul(&a.action[j]) == a.action[group.mul(i, j)])
        });
    rep.push("group representation", rep_ok, None);

    // module algebra: g.(ab) = (g.a)(g.b), g.1 = 1
    let mut fail = None;
    'ma: for (g, act) in a.action.iter().enumerate() {
        if act.apply(&alg.unit) != alg.unit {
            fail = Some(format!("unit not fixed by g{}", g + 1));
            break;
        }
        for i in 0..n {
            let gi = act.col(i);
            for j in 0..n {
                let lhs = act.apply(&alg.mult.row_dense(i, j));
                let rhs = alg.mul(&gi, &act.col(j));
                if lhs != rhs {
                    fail = Some(format!("g{} on pair ({}, {})", g + 1, i, j));
                    break 'ma;
                }
            }
        }
    }
    rep.push("module algebra", fail.is_none(), fail);

    // module coalgebra: Delta(g.a) = (g (x) g) Delta(a), eps(g.a) = eps(a)
    let mut fail = None;
    'mc: for (g, act) in a.action.iter().enumerate() {
        for i in 0..n {
            let e = kvec_unit(n, i);
            if coa.comult_dense(&act.col(i)) != coa.comult_through(act, &e) {
                fail = Some(format!("coproduct, g{} on basis {}", g + 1, i));
                break 'mc;
            }
            if coa.counit_of(&act.col(i)) != coa.counit[i] {
                fail = Some(format!("counit, g{} on basis {}", g + 1, i));
                break 'mc;
            }
        }
    }
    rep.push("module coalgebra", fail.is_none(), fail);

    // comodule: the components are orthogonal idempotents summing to id
    let sum = a
        .coaction
        .iter()
        .fold(Mat::zero(n, n), |acc, m| acc.add(m));
    let mut comodule_ok = sum == Mat::identity(n);
    for g in 0..4 {
        for gp in 0..4 {
            let prod = a.coaction[g].matmul(&a.coaction[gp]);
            let expect = if g == gp {
                a.coaction[g].clone()
            } else {
                Mat::zero(n, n)
            };
            comodule_ok &= prod == expect;
        }
    }
    rep.push("comodule", comodule_ok, None);

    // comodule algebra: delta(ab) = a^(1) b^(1) (x) a^(2) b^(2), delta(1) = 1 (x) 1
    let mut fail = None;
    'ca: for h in 0..4 {
        let expect_unit: KVec = if h == 0 {
            alg.unit.clone()
        } else {
            kvec_zero(n)
        };
        if a.coaction[h].apply(&alg.unit) != expect_unit {
            fail = Some(format!("unit component g{}", h + 1));
            break;
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = a.coaction[h].apply(&alg.mult.row_dense(i, j));
                let mut rhs = kvec_zero(n);
                for h1 in 0..4 {
                    let h2 = group.mul(group.inv(h1), h); // h1 h2 = h
                    let t = alg.mul(&a.coaction[h1].col(i), &a.coaction[h2].col(j));
                    for (acc, x) in rhs.iter_mut().zip(&t) {
                        *acc += x;
                    }
                }
                if lhs != rhs {
                    fail = Some(format!("component g{} on pair ({}, {})", h + 1, i, j));
                    break 'ca;
                }
            }
        }
    }
    rep.push("comodule algebra", fail.is_none(), fail);

    // comodule coalgebra: Delta and eps are colinear
    let mut fail = None;
    'cc: for h in 0..4 {
        for i in 0..n {
            // Delta(delta_h(a))
            let direct = pair_map_of_dense(&coa.comult_dense(&a.coaction[h].col(i)), n);
            // sum over h1 h2 = h of (delta_h1 (x) delta_h2)(Delta a)
            let mut woven = PairMap::new();
            for (l, r, c) in &coa.comult[i] {
                for h1 in 0..4 {
                    let h2 = group.mul(group.inv(h1), h);
                    let dl = a.coaction[h1].col(*l);
                    let dr = a.coaction[h2].col(*r);
                    for (p, x) in dl.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        let cx = c * x;
                        for (q, y) in dr.iter().enumerate() {
                            if !y.is_zero() {
                                let e = woven.entry((p, q)).or_insert_with(Cyclo::zero);
                                *e += &(&cx * y);
                            }
                        }
                    }
                }
            }
            woven.retain(|_, c| !c.is_zero());
            if direct != woven {
                fail = Some(format!("coproduct colinearity, g{} basis {}", h + 1, i));
                break 'cc;
            }
            let eps_comp = coa.counit_of(&a.coaction[h].col(i));
            let expect = if h == 0 {
                coa.counit[i].clone()
            } else {
                Cyclo::zero()
            };
            if eps_comp != expect {
                fail = Some(format!("counit colinearity, g{} basis {}", h + 1, i));
                break 'cc;
            }
        }
    }
    rep.push("comodule coalgebra", fail.is_none(), fail);

    // Yetter-Drinfel'd compatibility:
    // delta(g.a) = g a^(1) g^-1 (x) g.a^(2); conjugation kept explicit
    let mut fail = None;
    'yd: for g in 0..4 {
        for h in 0..4 {
            let lhs = a.coaction[h].matmul(&a.action[g]);
            let src = group.conj(group.inv(g), h);
            let rhs = a.action[g].matmul(&a.coaction[src]);
            if lhs != rhs {
                fail = Some(format!("g{} component g{}", g + 1, h + 1));
                break 'yd;
            }
        }
    }
    rep.push("yd compatibility", fail.is_none(), fail);

    // braided bialgebra law:
    // Delta(ab) = a_(1) (a_(2)^(1) . b_(1)) (x) a_(2)^(2) b_(2)
    let mut fail = None;
    let unit_pairs = {
        let mut m = PairMap::new();
        for (l, x) in alg.unit.iter().enumerate() {
            for (r, y) in alg.unit.iter().enumerate() {
                let p = x * y;
                if !p.is_zero() {
                    m.insert((l, r), p);
                }
            }
        }
        m
    };
    let delta_unit_ok = {
        let mut m = PairMap::new();
        for (l, r, c) in coa.comult_vec(&alg.unit) {
            m.insert((l, r), c);
        }
        m == unit_pairs
    };
    if !delta_unit_ok {
        fail = Some("coproduct of the unit".into());
    }
    'bb: for i in 0..n {
        if fail.is_some() {
            break;
        }
        for j in 0..n {
            let direct = pair_map_of_dense(&coa.comult_dense(&alg.mult.row_dense(i, j)), n);
            let mut braided = PairMap::new();
            for (l1, r1, c1) in &coa.comult[i] {
                for (l2, r2, c2) in &coa.comult[j] {
                    let c12 = c1 * c2;
                    for g in 0..4 {
                        // left leg: e_l1 * (g . e_l2)
                        let left = alg.mul(&kvec_unit(n, *l1), &a.action[g].col(*l2));
                        // right leg: delta_g(e_r1) * e_r2
                        let right = alg.mul(&a.coaction[g].col(*r1), &kvec_unit(n, *r2));
                        for (p, x) in left.iter().enumerate() {
                            if x.is_zero() {
                                continue;
                            }
                            let cx = &c12 * x;
                            for (q, y) in right.iter().enumerate() {
                                if !y.is_zero() {
                                    let e = braided.entry((p, q)).or_insert_with(Cyclo::zero);
                                    *e += &(&cx * y);
                                }
                            }
                        }
                    }
                }
            }
            braided.retain(|_, c| !c.is_zero());
            if direct != braided {
                fail = Some(format!("pair ({}, {})", i, j));
                break 'bb;
            }
        }
    }
    rep.push("braided comultiplication multiplicative", fail.is_none(), fail);

    // braided antipode convolution laws
    let mut fail = None;
    for i in 0..n {
        let expect: KVec = alg.unit.iter().map(|u| u * &coa.counit[i]).collect();
        let mut left = kvec_zero(n);
        let mut right = kvec_zero(n);
        for (l, r, c) in &coa.comult[i] {
            let t = alg.mul(&a.antipode.col(*l), &kvec_unit(n, *r));
            for (acc, x) in left.iter_mut().zip(&t) {
                *acc += &(c * x);
            }
            let t = alg.mul(&kvec_unit(n, *l), &a.antipode.col(*r));
            for (acc, x) in right.iter_mut().zip(&t) {
                *acc += &(c * x);
            }
        }
        if left != expect || right != expect {
            fail = Some(format!("basis {}", i));
            break;
        }
    }
    rep.push("braided antipode", fail.is_none(), fail);

    rep
}
