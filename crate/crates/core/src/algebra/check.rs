//! Exhaustive axiom verification for structure-constant Hopf data. Every
//! check scans all basis tuples; failures land in the report rather than
//! aborting, so negative controls can inspect them.

use std::collections::BTreeMap;

use super::structure::{CoalgebraData, HopfData};
use crate::exact::{kvec_unit, Cyclo, KVec};

#[derive(Clone, Debug)]
pub struct CheckEntry {
    pub name: String,
    pub pass: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub entries: Vec<CheckEntry>,
}

impl AxiomReport {
    pub fn push(&mut self, name: &str, pass: bool, detail: Option<String>) {
        self.entries.push(CheckEntry {
            name: name.to_string(),
            pass,
            detail,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> Vec<&CheckEntry> {
        self.entries.iter().filter(|e| !e.pass).collect()
    }

    pub fn get(&self, name: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

type PairMap = BTreeMap<(usize, usize), Cyclo>;

fn pair_map(triples: &[(usize, usize, Cyclo)]) -> PairMap {
    let mut m = PairMap::new();
    for (l, r, c) in triples {
        let e = m.entry((*l, *r)).or_insert_with(Cyclo::zero);
        *e += c;
    }
    m.retain(|_, c| !c.is_zero());
    m
}

/// Product of two pair-indexed tensors in `B (x) B`, expanded through the
/// multiplication tensor leg by leg.
fn tensor_square_product(
    alg: &super::structure::AlgebraData,
    a: &PairMap,
    b: &PairMap,
) -> PairMap {
    let mut out = PairMap::new();
    for ((l1, r1), c1) in a {
        for ((l2, r2), c2) in b {
            let c = c1 * c2;
            for (kl, cl) in alg.mult.row(*l1, *l2) {
                let ccl = &c * cl;
                for (kr, cr) in alg.mult.row(*r1, *r2) {
                    let e = out.entry((*kl, *kr)).or_insert_with(Cyclo::zero);
                    *e += &(&ccl * cr);
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Full Hopf-axiom report: associativity over all basis triples, unit
/// laws, coassociativity, counit laws, multiplicativity of the coalgebra
/// structure, and both antipode axioms.
pub fn check_hopf(h: &HopfData) -> AxiomReport {
    let mut rep = check_bialgebra(&h.algebra, &h.coalgebra);
    let n = h.dim();
    let alg = &h.algebra;
    let coa = &h.coalgebra;

    // antipode axioms: m (S (x) id) Delta = eta eps = m (id (x) S) Delta
    let mut anti_fail = None;
    for i in 0..n {
        let expect: KVec = alg
            .unit
            .iter()
            .map(|u| u * &coa.counit[i])
            .collect();
        let mut left = vec![Cyclo::zero(); n];
        let mut right = vec![Cyclo::zero(); n];
        for (l, r, c) in &coa.comult[i] {
            let sl = h.antipode.col(*l);
            let term = alg.mul(&sl, &kvec_unit(n, *r));
            for (t, acc) in term.iter().zip(left.iter_mut()) {
                *acc += &(c * t);
            }
            let sr = h.antipode.col(*r);
            let term = alg.mul(&kvec_unit(n, *l), &sr);
            for (t, acc) in term.iter().zip(right.iter_mut()) {
                *acc += &(c * t);
            }
        }
        if left != expect || right != expect {
            anti_fail = Some(format!("basis {}", i));
            break;
        }
    }
    rep.push("antipode", anti_fail.is_none(), anti_fail);

    rep
}

/// All bialgebra axioms (everything except the antipode laws).
pub fn check_bialgebra(alg: &super::structure::AlgebraData, coa: &CoalgebraData) -> AxiomReport {
    let mut rep = AxiomReport::default();
    let n = alg.dim;

    // associativity, exhaustive over basis triples
    let mut assoc_fail = None;
    'assoc: for i in 0..n {
        for j in 0..n {
            let ij = alg.mult.row(i, j).clone();
            for k in 0..n {
                let jk = alg.mult.row(j, k).clone();
                let mut lhs: BTreeMap<usize, Cyclo> = BTreeMap::new();
                for (l, c) in &ij {
                    for (m, d) in alg.mult.row(*l, k) {
                        let e = lhs.entry(*m).or_insert_with(Cyclo::zero);
                        *e += &(c * d);
                    }
                }
                let mut rhs: BTreeMap<usize, Cyclo> = BTreeMap::new();
                for (r, c) in &jk {
                    for (m, d) in alg.mult.row(i, *r) {
                        let e = rhs.entry(*m).or_insert_with(Cyclo::zero);
                        *e += &(c * d);
                    }
                }
                lhs.retain(|_, c| !c.is_zero());
                rhs.retain(|_, c| !c.is_zero());
                if lhs != rhs {
                    assoc_fail = Some(format!("triple ({}, {}, {})", i, j, k));
                    break 'assoc;
                }
            }
        }
    }
    rep.push("associativity", assoc_fail.is_none(), assoc_fail);

    // two-sided unit
    let unit_ok = (0..n).all(|i| {
        let e = kvec_unit(n, i);
        alg.mul(&alg.unit, &e) == e && alg.mul(&e, &alg.unit) == e
    });
    rep.push("unit", unit_ok, None);

    // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
    let mut coassoc_fail = None;
    for i in 0..n {
        let mut lhs: BTreeMap<(usize, usize, usize), Cyclo> = BTreeMap::new();
        let mut rhs: BTreeMap<(usize, usize, usize), Cyclo> = BTreeMap::new();
        for (l, r, c) in &coa.comult[i] {
            for (a, b, d) in &coa.comult[*l] {
                let e = lhs.entry((*a, *b, *r)).or_insert_with(Cyclo::zero);
                *e += &(c * d);
            }
            for (a, b, d) in &coa.comult[*r] {
                let e = rhs.entry((*l, *a, *b)).or_insert_with(Cyclo::zero);
                *e += &(c * d);
            }
        }
        lhs.retain(|_, c| !c.is_zero());
        rhs.retain(|_, c| !c.is_zero());
        if lhs != rhs {
            coassoc_fail = Some(format!("basis {}", i));
            break;
        }
    }
    rep.push("coassociativity", coassoc_fail.is_none(), coassoc_fail);

    // counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta
    let mut counit_fail = None;
    for i in 0..n {
        let mut left = vec![Cyclo::zero(); n];
        let mut right = vec![Cyclo::zero(); n];
        for (l, r, c) in &coa.comult[i] {
            left[*r] += &(c * &coa.counit[*l]);
            right[*l] += &(c * &coa.counit[*r]);
        }
        let e = kvec_unit(n, i);
        if left != e || right != e {
            counit_fail = Some(format!("basis {}", i));
            break;
        }
    }
    rep.push("counit", counit_fail.is_none(), counit_fail);

    // Delta is an algebra map: Delta(1) = 1 (x) 1 and Delta(ab) = Delta(a) Delta(b)
    let unit_pairs = {
        let mut m = PairMap::new();
        for (l, x) in alg.unit.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, y) in alg.unit.iter().enumerate() {
                if !y.is_zero() {
                    m.insert((l, r), x * y);
                }
            }
        }
        m
    };
    let delta_unit_ok = pair_map(&coa.comult_vec(&alg.unit)) == unit_pairs;
    let mut delta_mult_fail = None;
    'dm: for i in 0..n {
        let di = pair_map(&coa.comult[i]);
        for j in 0..n {
            let dj = pair_map(&coa.comult[j]);
            let prod = tensor_square_product(alg, &di, &dj);
            let direct = pair_map(&coa.comult_vec(&alg.mult.row_dense(i, j)));
            if prod != direct {
                delta_mult_fail = Some(format!("pair ({}, {})", i, j));
                break 'dm;
            }
        }
    }
    rep.push(
        "comultiplication multiplicative",
        delta_unit_ok && delta_mult_fail.is_none(),
        delta_mult_fail,
    );

    // eps is an algebra map
    let mut eps_mult_fail = None;
    'em: for i in 0..n {
        for j in 0..n {
            let prodeps = coa.counit_of(&alg.mult.row_dense(i, j));
            if prodeps != &coa.counit[i] * &coa.counit[j] {
                eps_mult_fail = Some(format!("pair ({}, {})", i, j));
                break 'em;
            }
        }
    }
    let eps_unit_ok = coa.counit_of(&alg.unit).is_one();
    rep.push(
        "counit multiplicative",
        eps_unit_ok && eps_mult_fail.is_none(),
        eps_mult_fail,
    );

    rep
}

/// Counit check for a bare coalgebra (used by quotient constructions).
pub fn coalgebra_counit_ok(coa: &CoalgebraData) -> bool {
    let n = coa.dim;
    (0..n).all(|i| {
        let mut left = vec![Cyclo::zero(); n];
        let mut right = vec![Cyclo::zero(); n];
        for (l, r, c) in &coa.comult[i] {
            left[*r] += &(c * &coa.counit[*l]);
            right[*l] += &(c * &coa.counit[*r]);
        }
        let e = kvec_unit(n, i);
        left == e && right == e
    })
}
