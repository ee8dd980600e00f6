//! Named verification suites with machine-readable reports.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::affine::{geodesic_word, walk_word_variant, word_concat};
use crate::error::Result;
use crate::heckerep::{
    bernstein_check, cherednik_type_a, commutator, compare_chains, compare_on, CachedChain, MemoOp, compose, difference, eval_word, factors,
    hamiltonian, op_g, op_g_inv, op_x_limit, scattering_operator, lattice_window, window_polynomial,
    Failure, Outcome, PolyOperator,
};
use crate::innerprod::{build_measure, check_adjoint, orthogonality_check};
use crate::laurent::{LaurentPoly, Mono};
use crate::param::ParamScalar;
use crate::rootsys::{add, dot, fmt_vec, neg, rat, reflect_vec, sub, unit, RootSystem, Vector};
use crate::spectrum::{
    eigen_multiplet, eigenfunction, expected_multiplet, matrix_of, multiset_key, orbit, SpectralOrder,
};
use crate::yangbaxter::verify_weyl_relations;

pub const SUITES: [&str; 13] = [
    "quadratic",
    "braid",
    "yang-baxter",
    "affine-hecke",
    "exchange",
    "commute",
    "center",
    "bernstein",
    "unitarity",
    "adjoint",
    "triangularity",
    "eigen",
    "orthogonality",
];

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Value>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> SuiteReport {
        SuiteReport { suite: suite.into(), cases: 0, failures: vec![], notes: vec![] }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Compare two operators on a window under a case label.
    fn check(&mut self, label: &str, lhs: &PolyOperator, rhs: &PolyOperator, window: &[Mono]) {
        self.cases += window.len();
        for f in compare_on(lhs, rhs, window).into_iter().take(3) {
            self.fail(label, &f);
        }
    }

    /// Like [`Self::check`] for products given as factor lists.
    fn check_chain(&mut self, label: &str, lhs: &[&PolyOperator], rhs: &[&PolyOperator], window: &[Mono]) {
        self.cases += window.len();
        for f in compare_chains(lhs, rhs, window).into_iter().take(3) {
            self.fail(label, &f);
        }
    }

    fn fail(&mut self, label: &str, f: &Failure) {
        let mut v = f.to_json();
        v["case"] = json!(label);
        self.failures.push(v);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures,
            "notes": self.notes,
        })
    }
}

fn zero_op() -> PolyOperator {
    PolyOperator::Scale(ParamScalar::zero())
}

fn simple(rs: &RootSystem, i: usize) -> &Vector {
    &rs.simple_roots[i].coords
}

/// `(g − q)(g + q⁻¹) = 0` for every simple `g`.
pub fn quadratic_suite(rs: &RootSystem, d: i64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("quadratic");
    let w = lattice_window(rs, d);
    for i in 0..rs.rank {
        let g = op_g(rs, simple(rs, i))?;
        let q = crate::heckerep::root_param(rs, simple(rs, i));
        let a = difference(&g, &PolyOperator::Scale(q.clone()));
        let b = PolyOperator::Sum(vec![g.clone(), PolyOperator::Scale(q.inv()?)]);
        rep.check(&format!("g{}", i + 1), &a.then_after(&b), &zero_op(), &w);
        rep.check(&format!("g{} g{}^-1", i + 1, i + 1), &g.then_after(&op_g_inv(rs, simple(rs, i))?), &PolyOperator::Identity, &w);
    }
    Ok(rep)
}

fn alternating(a: &PolyOperator, b: &PolyOperator, m: usize) -> PolyOperator {
    compose((0..m).map(|k| if k % 2 == 0 { a.clone() } else { b.clone() }).collect())
}

/// `g_r g_s g_r ⋯ = g_s g_r g_s ⋯` (`m_rs` factors) for all simple pairs.
pub fn braid_suite(rs: &RootSystem, d: i64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("braid");
    let w = lattice_window(rs, d);
    for i in 0..rs.rank {
        for j in i + 1..rs.rank {
            let m = rs.braid_orders[i][j] as usize;
            let (gi, gj) = (op_g(rs, simple(rs, i))?, op_g(rs, simple(rs, j))?);
            rep.check(&format!("g{} g{} m={m}", i + 1, j + 1), &alternating(&gi, &gj, m), &alternating(&gj, &gi, m), &w);
        }
    }
    Ok(rep)
}

pub fn yang_baxter_suite(rs: &RootSystem) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("yang-baxter");
    let yb = verify_weyl_relations(rs)?;
    rep.cases = yb.cases;
    rep.failures = yb.to_json()["failures"].as_array().cloned().unwrap_or_default();
    Ok(rep)
}

/// `x_{−r} x_r = x_r x_{−r} = 1` for all positive roots, and
/// `S_ξ S_ξ^{-1} = 1` at word level for the fundamental coweights.
pub fn unitarity_suite(rs: &RootSystem, d: i64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("unitarity");
    let w = lattice_window(rs, d);
    for r in &rs.positive_roots {
        let x = op_x_limit(rs, &r.coords)?;
        let xm = op_x_limit(rs, &neg(&r.coords))?;
        let id = PolyOperator::Identity;
        rep.check(&format!("x_-{0} x_{0}", fmt_vec(&r.coords)), &xm.then_after(&x), &id, &w);
        rep.check(&format!("x_{0} x_-{0}", fmt_vec(&r.coords)), &x.then_after(&xm), &id, &w);
    }
    for cw in rs.fundamental_coweights() {
        let word = geodesic_word(rs, &cw.coords)?;
        let both = word_concat(&word, &word.inverse())?;
        rep.check(&format!("word {} . inverse", fmt_vec(&cw.coords)), &eval_word(rs, &both)?, &PolyOperator::Identity, &w);
    }
    Ok(rep)
}

/// Coweights exercised by the affine Hecke / commutation suites:
/// fundamental coweights plus the minuscule ones (deduplicated).
pub fn test_coweights(rs: &RootSystem) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for w in rs.fundamental_coweights().into_iter().chain(rs.minuscule_weights()) {
        if !out.contains(&w.coords) && w.coords.iter().any(|x| *x != rat(0)) {
            out.push(w.coords);
        }
    }
    out
}

/// `(α, ξ) = 0 ⇒ g S_ξ = S_ξ g`; `(α, ξ) = 1 ⇒ g S_ξ = S_{w_α ξ} g⁻¹`.
pub fn affine_hecke_suite(rs: &RootSystem, d: i64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("affine-hecke");
    let w = lattice_window(rs, d);
    for xi in test_coweights(rs) {
        let s = scattering_operator(rs, &xi)?;
        for i in 0..rs.rank {
            let a = simple(rs, i);
            let p = dot(&xi, a);
            let g = op_g(rs, a)?;
            let label = format!("g{} S{} (pairing {p})", i + 1, fmt_vec(&xi));
            if p == rat(0) {
                rep.check_chain(&label, &[&g, &s], &[&s, &g], &w);
            } else if p == rat(1) {
                let sw = scattering_operator(rs, &reflect_vec(a, &xi))?;
                rep.check_chain(&label, &[&g, &s], &[&sw, &op_g_inv(rs, a)?], &w);
            } else {
                rep.notes.push(format!("{label}: pairing outside {{0, 1}}, not covered"));
            }
        }
    }
    Ok(rep)
}

/// `S_a S_b = S_b S_a = S_{a+b}` over the test coweights.
pub fn commute_suite(rs: &RootSystem, d: i64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("commute");
    let w = lattice_window(rs, d);
    let xs = test_coweights(rs);
    let ops: Vec<PolyOperator> = xs.iter().map(|x| scattering_operator(rs, x)).collect::<Result<_>>()?;
    // One memo per operator, shared by all products it appears in.
    let mut memo: Vec<MemoOp> = ops.iter().map(MemoOp::new).collect();
    for i in 0..xs.len() {
        for j in i..xs.len() {
            let sum = scattering_operator(rs, &add(&xs[i], &xs[j]))?;
            let label = format!("S{} S{}", fmt_vec(&xs[i]), fmt_vec(&xs[j]));
            let mut direct_chain = CachedChain::new(&factors(&sum));
            let mut bad = 0;
            for m in &w {
                let p = LaurentPoly::monomial(m.clone());
                let bp = memo[j].apply(&p);
                let ab = memo[i].apply(&bp);
                let ap = memo[i].apply(&p);
                let ba = memo[j].apply(&ap);
                let direct = direct_chain.apply(&p);
                rep.cases += 1;
                for (what, rhs) in [("S_sum", &direct), ("commute", &ba)] {
                    if &ab != rhs && bad < 3 {
                        bad += 1;
                        let f = Failure { monomial: m.clone(), lhs: ab.clone(), rhs: rhs.clone() };
                        rep.fail(&format!("{label} {what}"), &f);
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// Words for one `ξ` from different base points give the same operator.
pub fn choice_independence_suite(rs: &RootSystem, d: i64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("choice-independence");
    let w = lattice_window(rs, d);
    let xs = test_coweights(rs);
    let mut targets = xs.clone();
    for i in 0..xs.len() {
        for j in i..xs.len() {
            targets.push(add(&xs[i], &xs[j]));
        }
    }
    let mut distinct_pairs = 0;
    let variants = crate::affine::variant_count(rs);
    for xi in targets {
        let reference = walk_word_variant(rs, &xi, 0, 0)?;
        let mut seen = vec![reference.tokens.clone()];
        let mut others = Vec::new();
        for v in 1..=variants {
            let word = walk_word_variant(rs, &xi, v, 0)?;
            if !seen.contains(&word.tokens) {
                seen.push(word.tokens.clone());
                others.push((v, eval_word(rs, &word)?));
            }
        }
        if others.is_empty() {
            continue;
        }
        let ref_op = eval_word(rs, &reference)?;
        let mut chain = CachedChain::new(&factors(&ref_op));
        let expected: Vec<LaurentPoly> = w.iter().map(|m| chain.apply(&LaurentPoly::monomial(m.clone()))).collect();
        for (v, op) in others {
            distinct_pairs += 1;
            rep.cases += w.len();
            let mut chain = CachedChain::new(&factors(&op));
            let fails = w.iter().zip(&expected).filter_map(|(m, e)| {
                let got = chain.apply(&LaurentPoly::monomial(m.clone()));
                (&got != e).then(|| Failure { monomial: m.clone(), lhs: got, rhs: e.clone() })
            });
            for f in fails.take(3).collect::<Vec<_>>() {
                rep.fail(&format!("{} base point {v}", fmt_vec(&xi)), &f);
            }
        }
    }
    rep.notes.push(format!("{distinct_pairs} pairs of distinct words compared"));
    if distinct_pairs == 0 {
        rep.notes.push("all base points gave the same words; nothing to compare".into());
    }
    Ok(rep)
}

/// `[g_k, S_j] = 0` for `j ∉ {k, k+1}`, and `g_k S_k = S_{k+1} g_k⁻¹`.
pub fn exchange_suite(n: usize, degree: u32) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("exchange");
    let rs = crate::rootsys::build_root_system(crate::rootsys::Family::A, n - 1)?;
    let w = window_polynomial(n, degree);
    let s: Vec<PolyOperator> = (1..=n).map(|j| cherednik_type_a(n, j)).collect::<Result<_>>()?;
    for k in 1..n {
        let a = sub(&unit(n, k), &unit(n, k + 1));
        let g = op_g(&rs, &a)?;
        for j in 1..=n {
            if j == k {
                rep.check(&format!("g{k} S{k} = S{} g{k}^-1", k + 1), &g.then_after(&s[k - 1]), &s[k].then_after(&op_g_inv(&rs, &a)?), &w);
            } else if j != k + 1 {
                rep.check(&format!("[g{k}, S{j}]"), &commutator(&g, &s[j - 1]), &zero_op(), &w);
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            rep.check(&format!("[S{}, S{}]", i + 1, j + 1), &commutator(&s[i], &s[j]), &zero_op(), &w);
        }
    }
    Ok(rep)
}

/// `[H_l, g_k] = 0` for all `l`, `k`.
pub fn center_suite(n: usize, degree: u32) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("center");
    let rs = crate::rootsys::build_root_system(crate::rootsys::Family::A, n - 1)?;
    let w = window_polynomial(n, degree);
    for l in 1..=n {
        let h = hamiltonian(n, l)?;
        for k in 1..n {
            let g = op_g(&rs, &sub(&unit(n, k), &unit(n, k + 1)))?;
            rep.check(&format!("[H{l}, g{k}]"), &commutator(&h, &g), &zero_op(), &w);
        }
    }
    Ok(rep)
}

pub fn bernstein_suite(rs: &RootSystem, xis: &[Vector], d: i64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("bernstein");
    if !rs.is_irreducible() {
        rep.notes.push("reducible system: factorization needs one affine generator per component, skipped".into());
        return Ok(rep);
    }
    let w = lattice_window(rs, d);
    for xi in xis {
        rep.cases += w.len();
        match bernstein_check(rs, xi, &w)? {
            Outcome::Holds => {}
            Outcome::Fails => rep.failures.push(json!({"case": fmt_vec(xi), "outcome": "fails"})),
            Outcome::Inconclusive => rep.notes.push(format!("{}: window too small, inconclusive", fmt_vec(xi))),
        }
    }
    Ok(rep)
}

/// `⟨g p1, p2⟩ = ⟨p1, g⁻¹ p2⟩` and `⟨S_j p1, p2⟩ = ⟨p1, S_j⁻¹ p2⟩`.
pub fn adjoint_suite(n: usize, kappa: u32, degree: u32) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("adjoint");
    let rs = crate::rootsys::build_root_system(crate::rootsys::Family::A, n - 1)?;
    let spec = build_measure(n, kappa)?;
    let w = window_polynomial(n, degree);
    let mut pairs: Vec<(String, PolyOperator, PolyOperator)> = Vec::new();
    for k in 1..n {
        let a = sub(&unit(n, k), &unit(n, k + 1));
        pairs.push((format!("g{k}"), op_g(&rs, &a)?, op_g_inv(&rs, &a)?));
    }
    for j in 1..=n {
        let s = cherednik_type_a(n, j)?;
        let inv = s.inverse().expect("S_j is invertible");
        pairs.push((format!("S{j}"), s, inv));
    }
    for (name, op, adj) in pairs {
        let r = check_adjoint(&op, &adj, &spec, &w)?;
        rep.cases += r.cases;
        for f in r.to_json()["failures"].as_array().unwrap().iter().take(3) {
            let mut f = f.clone();
            f["case"] = json!(name);
            rep.failures.push(f);
        }
    }
    Ok(rep)
}

/// Triangularity of every `S_j` and the orbit multiset of diagonal entries.
pub fn triangularity_suite(n: usize, max_degree: u32) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("triangularity");
    for d in 0..=max_degree {
        let order = SpectralOrder::cached(n, d)?;
        for j in 1..=n {
            rep.cases += 1;
            let m = matrix_of(&cherednik_type_a(n, j)?, d, n)?;
            if let Err(e) = m.check_triangular(&order) {
                rep.failures.push(json!({"case": format!("S{j} degree {d}"), "error": e.to_string()}));
            }
        }
        let mut partitions: BTreeMap<Vec<u32>, ()> = BTreeMap::new();
        for k in crate::heckerep::compositions(n, d) {
            partitions.insert(crate::spectrum::partition_of(&k), ());
        }
        for p in partitions.keys() {
            rep.cases += 1;
            // Every member of the orbit carries a permutation of the
            // multiplet of its partition.
            let want = multiset_key(&expected_multiplet(p));
            for k in orbit(n, p) {
                let m = eigen_multiplet(&k)?;
                if multiset_key(&m) != want || m.iter().any(|x| x.as_monomial().is_none()) {
                    rep.failures.push(json!({"case": format!("{k:?}"), "diagonal": multiset_key(&m), "expected": want}));
                }
            }
        }
    }
    Ok(rep)
}

/// `S_j E_k = λ_j E_k` for all compositions of degree ≤ `max_degree`.
pub fn eigen_suite(n: usize, max_degree: u32) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("eigen");
    for d in 0..=max_degree {
        for k in crate::heckerep::compositions(n, d) {
            rep.cases += 1;
            match eigenfunction(&k) {
                Ok(r) => {
                    if r.eigenfunction.coeff(&Mono::from_ints(&k.iter().map(|&x| x as i64).collect::<Vec<_>>())) != ParamScalar::one() {
                        rep.failures.push(json!({"case": format!("{k:?}"), "error": "leading coefficient is not 1"}));
                    }
                }
                Err(e) => rep.failures.push(json!({"case": format!("{k:?}"), "error": e.to_string()})),
            }
        }
    }
    Ok(rep)
}

pub fn orthogonality_suite(n: usize, kappa: u32, degree: u32) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("orthogonality");
    let r = orthogonality_check(n, kappa, degree)?;
    rep.cases = r.cases;
    rep.failures = r.to_json()["failures"].as_array().cloned().unwrap_or_default();
    rep.notes = r.warnings;
    Ok(rep)
}

/// Default Bernstein targets: fundamental coweights and their pairwise sums.
pub fn bernstein_targets(rs: &RootSystem) -> Vec<Vector> {
    let cw: Vec<Vector> = rs.fundamental_coweights().into_iter().map(|w| w.coords).collect();
    let mut out = cw.clone();
    for i in 0..cw.len() {
        for j in i + 1..cw.len() {
            out.push(add(&cw[i], &cw[j]));
        }
    }
    out
}

