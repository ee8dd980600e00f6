//! The polynomial representation: `s_r`, `g_r`, `x_r`, `t^a` and the
//! operators built from them (`S_ξ`, type-A `S_j`, `H_l`, `g_0`).

use std::collections::HashMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::affine::{gallery_labels, gamma, geodesic_word, walk_word_variant, Token, Word};
use crate::error::{Error, Result};
use crate::half::Half;
use crate::laurent::{coroot_pairing, demazure_mono, LaurentPoly, Mono};
use crate::param::{ParamScalar, Q, QL};
use crate::rootsys::{
    add, build_root_system, dot, fmt_vec, neg, rat, scale, sub, to_halves, unit, Family, Rat,
    RootSystem, Vector, WeylElement,
};

/// A linear endomorphism of [`LaurentPoly`] as a composition tree.
#[derive(Clone, Debug)]
pub enum PolyOperator {
    Identity,
    /// `e^λ ↦ e^{w_r λ}`.
    Reflect(Vec<Half>),
    /// `g_r = q s_r + (q − q⁻¹) (e^r − 1)⁻¹ (s_r − 1)`, or its inverse.
    Hecke { root: Vec<Half>, q: ParamScalar, inverse: bool },
    /// `x_r = s_r g_r` for a positive root `r`, or `x_{−r} = x_r⁻¹ = g_r⁻¹ s_r`.
    LimitX { root: Vec<Half>, q: ParamScalar, inverse: bool },
    /// `e^λ ↦ t^{(λ, a)} e^λ`.
    Shift(Vector),
    /// `e^λ ↦ e^{wλ}` for a linear map `w`.
    Linear(Vec<Vector>),
    Mult(LaurentPoly),
    Scale(ParamScalar),
    Sum(Vec<PolyOperator>),
    /// `[A, B, C]` is `A ∘ B ∘ C`: the last factor acts first.
    Compose(Vec<PolyOperator>),
}

fn qdiff(q: &ParamScalar) -> ParamScalar {
    q - &q.inv().expect("nonzero parameter")
}

/// `Σ c_λ D_r(e^λ)` for the telescoping quotient `D_r = (e^r − 1)⁻¹ (s_r − 1)`;
/// only additions happen here, the `(q − q⁻¹)` factor is applied by callers
/// once per output term.
fn demazure_part(r: &[Half], p: &LaurentPoly, out: &mut LaurentPoly) {
    for (m, c) in p.terms() {
        if coroot_pairing(&m.0, r) != 0 {
            demazure_mono(m, r, |mono, sign| out.add_term_signed(mono, c, sign < 0));
        }
    }
}

/// `c·p`, shifting exponents instead of multiplying when `c` is a bare monomial.
fn scale_fast(p: &LaurentPoly, c: &ParamScalar) -> LaurentPoly {
    match c.as_monomial() {
        Some((e, k)) if num_traits::One::is_one(k) && c.is_polynomial() => {
            p.map_coeffs(|x| Ok(x.mul_monomial(e))).expect("infallible")
        }
        _ => p.scale(c),
    }
}

impl PolyOperator {
    pub fn apply(&self, p: &LaurentPoly) -> LaurentPoly {
        use PolyOperator::*;
        let dim = p.dim();
        match self {
            Identity => p.clone(),
            Reflect(r) => p.reflect(r),
            Hecke { root, q, inverse } => {
                // g = q s + d D, g⁻¹ = g − d.
                let mut dp = LaurentPoly::zero(dim);
                demazure_part(root, p, &mut dp);
                if *inverse {
                    for (m, c) in p.terms() {
                        dp.add_term_signed(m.clone(), c, true);
                    }
                }
                let mut out = scale_fast(&p.reflect(root), q);
                out.add_scaled(&dp, &qdiff(q));
                out
            }
            LimitX { root, q, inverse: false } => {
                // x_r = s g = q + d s D.
                let mut dp = LaurentPoly::zero(dim);
                demazure_part(root, p, &mut dp);
                let mut out = scale_fast(p, q);
                out.add_scaled(&dp.reflect(root), &qdiff(q));
                out
            }
            LimitX { root, q, inverse: true } => {
                // x_{−r} = g⁻¹ s = q + d (D s − s).
                let sp = p.reflect(root);
                let mut dp = LaurentPoly::zero(dim);
                demazure_part(root, &sp, &mut dp);
                for (m, c) in sp.terms() {
                    dp.add_term_signed(m.clone(), c, true);
                }
                let mut out = scale_fast(p, q);
                out.add_scaled(&dp, &qdiff(q));
                out
            }
            Shift(a) => p.diagonal_shift(a),
            Linear(mat) => {
                let mut out = LaurentPoly::zero(dim);
                for (m, c) in p.terms() {
                    let v: Vector = m.0.iter().map(|h| h.to_rational()).collect();
                    let w: Vector = mat.iter().map(|row| dot(row, &v)).collect();
                    out.add_term(Mono(to_halves(&w)), c.clone());
                }
                out
            }
            Mult(f) => p * f,
            Scale(c) => p.scale(c),
            Sum(ops) => {
                let mut out = LaurentPoly::zero(dim);
                for op in ops {
                    out.add_scaled(&op.apply(p), &ParamScalar::one());
                }
                out
            }
            Compose(ops) => {
                let mut cur = p.clone();
                for op in ops.iter().rev() {
                    cur = op.apply(&cur);
                }
                cur
            }
        }
    }

    /// The inverse operator, when it is available structurally.
    pub fn inverse(&self) -> Option<PolyOperator> {
        use PolyOperator::*;
        Some(match self {
            Identity => Identity,
            Reflect(r) => Reflect(r.clone()),
            Hecke { root, q, inverse } => Hecke { root: root.clone(), q: q.clone(), inverse: !inverse },
            LimitX { root, q, inverse } => LimitX { root: root.clone(), q: q.clone(), inverse: !inverse },
            Shift(a) => Shift(neg(a)),
            Linear(m) => {
                let n = m.len();
                // Only orthogonal maps (Weyl group elements) are used here.
                Linear((0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect())
            }
            Scale(c) => Scale(c.inv().ok()?),
            Compose(ops) => Compose(ops.iter().rev().map(|o| o.inverse()).collect::<Option<_>>()?),
            Mult(_) | Sum(_) => return None,
        })
    }

    /// `self ∘ other`.
    pub fn then_after(&self, other: &PolyOperator) -> PolyOperator {
        compose(vec![self.clone(), other.clone()])
    }
}

pub fn compose(ops: Vec<PolyOperator>) -> PolyOperator {
    let mut flat = Vec::new();
    for op in ops {
        match op {
            PolyOperator::Compose(inner) => flat.extend(inner),
            PolyOperator::Identity => {}
            other => flat.push(other),
        }
    }
    match flat.len() {
        0 => PolyOperator::Identity,
        1 => flat.pop().unwrap(),
        _ => PolyOperator::Compose(flat),
    }
}

/// `a − b`.
pub fn difference(a: &PolyOperator, b: &PolyOperator) -> PolyOperator {
    PolyOperator::Sum(vec![a.clone(), compose(vec![PolyOperator::Scale(ParamScalar::int(-1)), b.clone()])])
}

/// `[a, b] = ab − ba`.
pub fn commutator(a: &PolyOperator, b: &PolyOperator) -> PolyOperator {
    difference(&a.then_after(b), &b.then_after(a))
}

/// Hecke parameter attached to a root.
pub fn root_param(rs: &RootSystem, r: &[Rat]) -> ParamScalar {
    match rs.param_label(r) {
        "ql" => ParamScalar::var_pow(QL, Half::ONE),
        _ => ParamScalar::var_pow(Q, Half::ONE),
    }
}

fn checked_root(rs: &RootSystem, r: &[Rat]) -> Result<Vec<Half>> {
    if !rs.is_root(r) {
        return Err(Error::NotARoot(fmt_vec(r)));
    }
    Ok(to_halves(r))
}

pub fn op_s(rs: &RootSystem, r: &[Rat]) -> Result<PolyOperator> {
    Ok(PolyOperator::Reflect(checked_root(rs, r)?))
}

pub fn op_g(rs: &RootSystem, r: &[Rat]) -> Result<PolyOperator> {
    Ok(PolyOperator::Hecke { root: checked_root(rs, r)?, q: root_param(rs, r), inverse: false })
}

pub fn op_g_inv(rs: &RootSystem, r: &[Rat]) -> Result<PolyOperator> {
    Ok(PolyOperator::Hecke { root: checked_root(rs, r)?, q: root_param(rs, r), inverse: true })
}

pub fn op_t(a: &[Rat]) -> PolyOperator {
    PolyOperator::Shift(a.to_vec())
}

/// `x_ρ` for a signed root: `s_ρ g_ρ` if `ρ > 0`, else `g_{−ρ}⁻¹ s_{−ρ}`.
pub fn op_x_limit(rs: &RootSystem, rho: &[Rat]) -> Result<PolyOperator> {
    let positive = rs.is_positive(rho);
    let r = if positive { rho.to_vec() } else { neg(rho) };
    Ok(PolyOperator::LimitX { root: checked_root(rs, &r)?, q: root_param(rs, &r), inverse: !positive })
}

pub fn op_x_limit_inv(rs: &RootSystem, rho: &[Rat]) -> Result<PolyOperator> {
    op_x_limit(rs, &neg(rho))
}

/// Compose the tokens of a word (the rightmost token acts first).
pub fn eval_word(rs: &RootSystem, w: &Word) -> Result<PolyOperator> {
    let ops = w
        .tokens
        .iter()
        .map(|t| match t {
            Token::Translate(a) => Ok(op_t(a)),
            Token::Reflect { root, .. } => op_x_limit(rs, root),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(compose(ops))
}

pub fn scattering_operator(rs: &RootSystem, xi: &[Rat]) -> Result<PolyOperator> {
    eval_word(rs, &geodesic_word(rs, xi)?)
}

/// `S_ξ` from the straight walk out of the `variant`-th base point family
/// (no dominant/quotient split).
pub fn scattering_operator_variant(rs: &RootSystem, xi: &[Rat], variant: usize) -> Result<PolyOperator> {
    eval_word(rs, &walk_word_variant(rs, xi, variant, 0)?)
}

fn type_a(n: usize) -> Result<RootSystem> {
    if n < 2 {
        return Err(Error::Usage("type A needs n >= 2 variables".into()));
    }
    build_root_system(Family::A, n - 1)
}

fn eij(n: usize, i: usize, j: usize) -> Vector {
    sub(&unit(n, i), &unit(n, j))
}

/// `x_{i,j} = x_{e_i − e_j}` in `n` variables.
pub fn x_ij(n: usize, i: usize, j: usize) -> Result<PolyOperator> {
    op_x_limit(&type_a(n)?, &eij(n, i, j))
}

/// Cherednik operator `S_j = x_{j,j+1}⁻¹ ⋯ x_{j,n}⁻¹ t_j x_{1,j} ⋯ x_{j−1,j}`.
pub fn cherednik_type_a(n: usize, j: usize) -> Result<PolyOperator> {
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, max: n });
    }
    let rs = type_a(n)?;
    let mut ops = Vec::new();
    for k in j + 1..=n {
        ops.push(op_x_limit_inv(&rs, &eij(n, j, k))?);
    }
    ops.push(op_t(&unit(n, j)));
    for i in 1..j {
        ops.push(op_x_limit(&rs, &eij(n, i, j))?);
    }
    Ok(compose(ops))
}

/// `H_l = Σ_{i_1 < ⋯ < i_l} S_{i_1} ⋯ S_{i_l}`.
pub fn hamiltonian(n: usize, l: usize) -> Result<PolyOperator> {
    if l == 0 || l > n {
        return Err(Error::IndexOutOfRange { index: l, max: n });
    }
    let s: Vec<PolyOperator> = (1..=n).map(|j| cherednik_type_a(n, j)).collect::<Result<_>>()?;
    let mut terms = Vec::new();
    for subset in subsets(n, l) {
        terms.push(compose(subset.iter().map(|&j| s[j].clone()).collect()));
    }
    Ok(PolyOperator::Sum(terms))
}

fn subsets(n: usize, l: usize) -> Vec<Vec<usize>> {
    if l == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for mut rest in subsets(n, l - 1) {
            if rest.first().is_none_or(|&r| r > first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
    }
    out
}

/// `g_0 = t^{−θ^∨/2} g_{−θ} t^{θ^∨/2}` for the highest root `θ`; `θ^∨/2`
/// lies on the affine wall `(θ, x) = 1`.
pub fn affine_generator_g0(rs: &RootSystem) -> PolyOperator {
    let rm = &rs.highest_root.coords;
    let half = scale(&rs.highest_root.coroot(), Rat::new(1, 2));
    compose(vec![
        op_t(&neg(&half)),
        PolyOperator::Hecke { root: to_halves(&neg(rm)), q: root_param(rs, rm), inverse: false },
        op_t(&half),
    ])
}

/// Affine simple generator by label (`0` is the affine one).
pub fn affine_simple_generator(rs: &RootSystem, label: usize) -> PolyOperator {
    if label == 0 {
        affine_generator_g0(rs)
    } else {
        op_g(rs, &rs.simple_roots[label - 1].coords).expect("simple root")
    }
}

/// The factorized form `t^{−γ} w g_{j_{m−1}}⁻¹ ⋯ g_{j_0}⁻¹` of `S_ξ`, built
/// from the labels `j_i` of the walls crossed by the walk and the finite part
/// `w` of `s_{j_0} ⋯ s_{j_{m−1}}`.
pub fn bernstein_operator(rs: &RootSystem, xi: &[Rat]) -> Result<PolyOperator> {
    let labels = gallery_labels(rs, xi)?;
    let mut w = WeylElement::identity(rs.ambient_dim);
    for &j in &labels {
        let s = if j == 0 {
            let r = &rs.highest_root;
            let cr = r.coroot();
            let n = rs.ambient_dim;
            WeylElement {
                word: vec![],
                matrix: (0..n)
                    .map(|a| (0..n).map(|b| rat((a == b) as i64) - r.coords[a] * cr[b]).collect())
                    .collect(),
            }
        } else {
            rs.simple_reflection(j - 1)
        };
        w = w.compose(&s);
    }
    let mut ops = vec![op_t(&neg(&gamma(rs, xi))), PolyOperator::Linear(w.matrix)];
    for &j in labels.iter().rev() {
        ops.push(affine_simple_generator(rs, j).inverse().unwrap());
    }
    Ok(compose(ops))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails,
    /// The window cannot separate operators differing on non-constant monomials.
    Inconclusive,
}

pub fn bernstein_check(rs: &RootSystem, xi: &[Rat], window: &[Mono]) -> Result<Outcome> {
    if window.iter().all(|m| m.is_zero()) {
        return Ok(Outcome::Inconclusive);
    }
    let lhs = scattering_operator(rs, xi)?;
    let rhs = bernstein_operator(rs, xi)?;
    Ok(if operator_equal(&lhs, &rhs, window) { Outcome::Holds } else { Outcome::Fails })
}

/// All monomials with exponents in `[−d, d]^n`.
pub fn window_box(n: usize, d: i64) -> Vec<Mono> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| (-d..=d).map(move |x| [v.clone(), vec![x]].concat()))
            .collect();
    }
    out.into_iter().map(|v| Mono::from_ints(&v)).collect()
}

/// Test window inside the weight lattice of `rs`: the integer box when every
/// integer vector pairs integrally with all coroots, otherwise the weights
/// `Σ c_i ϖ_i` with `c ∈ [−d, d]^rank` (G2 in its 3-dim ambient).
pub fn lattice_window(rs: &RootSystem, d: i64) -> Vec<Mono> {
    let n = rs.ambient_dim;
    let integral = (1..=n).all(|i| {
        let e = unit(n, i);
        rs.simple_roots.iter().all(|a| crate::rootsys::coroot_pairing(&e, &a.coords).is_integer())
    });
    if integral {
        return window_box(n, d);
    }
    let mut pts: Vec<Vector> = vec![vec![Rat::from_integer(0); n]];
    for w in rs.fundamental_weights() {
        pts = pts
            .into_iter()
            .flat_map(|p| {
                let w = w.coords.clone();
                (-d..=d).map(move |c| add(&p, &scale(&w, Rat::from_integer(c))))
            })
            .collect();
    }
    pts.iter().map(|p| Mono(to_halves(p))).collect()
}

/// Polynomial monomials (non-negative exponents) of total degree exactly `d`.
pub fn compositions(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for rest in compositions(n - 1, d - first) {
            out.push([vec![first], rest].concat());
        }
    }
    out
}

/// Polynomial monomials of total degree `≤ d`.
pub fn window_polynomial(n: usize, d: u32) -> Vec<Mono> {
    (0..=d)
        .flat_map(|k| compositions(n, k))
        .map(|c| Mono::from_ints(&c.iter().map(|&x| x as i64).collect::<Vec<_>>()))
        .collect()
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub monomial: Mono,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

impl Failure {
    pub fn to_json(&self) -> Value {
        json!({
            "monomial": self.monomial.to_string(),
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
        })
    }
}

/// Monomials of the window where the two operators differ.
pub fn compare_on(op1: &PolyOperator, op2: &PolyOperator, window: &[Mono]) -> Vec<Failure> {
    let mut fails: Vec<Failure> = window
        .par_iter()
        .filter_map(|m| {
            let p = LaurentPoly::monomial(m.clone());
            let (lhs, rhs) = (op1.apply(&p), op2.apply(&p));
            (lhs != rhs).then(|| Failure { monomial: m.clone(), lhs, rhs })
        })
        .collect();
    fails.sort_by(|a, b| a.monomial.cmp(&b.monomial));
    fails
}

/// An operator together with its images of every monomial seen so far.
pub struct MemoOp<'a> {
    op: &'a PolyOperator,
    memo: HashMap<Mono, LaurentPoly>,
}

impl<'a> MemoOp<'a> {
    pub fn new(op: &'a PolyOperator) -> Self {
        MemoOp { op, memo: HashMap::new() }
    }

    pub fn apply(&mut self, p: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(p.dim());
        for (m, c) in p.terms() {
            let img = self
                .memo
                .entry(m.clone())
                .or_insert_with(|| self.op.apply(&LaurentPoly::monomial(m.clone())));
            out.add_scaled(img, c);
        }
        out
    }
}

/// Evaluates `f_1 ∘ ⋯ ∘ f_k` (last factor first) with one memo per factor;
/// pays off when intermediate supports overlap across a window.
pub struct CachedChain<'a> {
    factors: Vec<MemoOp<'a>>,
}

impl<'a> CachedChain<'a> {
    pub fn new(factors: &[&'a PolyOperator]) -> Self {
        CachedChain { factors: factors.iter().map(|f| MemoOp::new(f)).collect() }
    }

    pub fn apply(&mut self, p: &LaurentPoly) -> LaurentPoly {
        let mut cur = p.clone();
        for f in self.factors.iter_mut().rev() {
            cur = f.apply(&cur);
        }
        cur
    }
}

/// The factors of a composite operator (itself if not composite).
pub fn factors(op: &PolyOperator) -> Vec<&PolyOperator> {
    match op {
        PolyOperator::Compose(v) => v.iter().collect(),
        other => vec![other],
    }
}

/// [`compare_on`] for products given as factor lists.
pub fn compare_chains(lhs: &[&PolyOperator], rhs: &[&PolyOperator], window: &[Mono]) -> Vec<Failure> {
    let mut fails: Vec<Failure> = window
        .par_iter()
        .map_init(
            || (CachedChain::new(lhs), CachedChain::new(rhs)),
            |(l, r), m| {
                let p = LaurentPoly::monomial(m.clone());
                let (a, b) = (l.apply(&p), r.apply(&p));
                (a != b).then(|| Failure { monomial: m.clone(), lhs: a, rhs: b })
            },
        )
        .flatten()
        .collect();
    fails.sort_by(|a, b| a.monomial.cmp(&b.monomial));
    fails
}

pub fn operator_equal(op1: &PolyOperator, op2: &PolyOperator, window: &[Mono]) -> bool {
    window.par_iter().all(|m| {
        let p = LaurentPoly::monomial(m.clone());
        op1.apply(&p) == op2.apply(&p)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::ints;

    fn q() -> ParamScalar {
        ParamScalar::q()
    }

    #[test]
    fn g_on_low_degree() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let g = op_g(&rs, &ints(&[1, -1])).unwrap();
        let z1 = LaurentPoly::z(2, 1);
        let z2 = LaurentPoly::z(2, 2);
        assert_eq!(g.apply(&z1), z2.scale(&q().pow(-1)));
        let expect = &z1.scale(&q()) + &z2.scale(&(&q() - &q().pow(-1)));
        assert_eq!(g.apply(&z2), expect);
        assert_eq!(g.apply(&LaurentPoly::one(2)), LaurentPoly::constant(2, q()));
    }

    #[test]
    fn x_inverse_pairs() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let r = ints(&[1, 0, -1]);
        let x = op_x_limit(&rs, &r).unwrap();
        let xi = op_x_limit(&rs, &neg(&r)).unwrap();
        let w = window_box(3, 1);
        assert!(operator_equal(&xi.then_after(&x), &PolyOperator::Identity, &w));
        assert!(operator_equal(&x.then_after(&xi), &PolyOperator::Identity, &w));
        assert!(!operator_equal(&op_g(&rs, &r).unwrap(), &op_g_inv(&rs, &r).unwrap(), &w));
    }

    #[test]
    fn limit_x_act() {
        // x_{1,2} z1^2 = q^{-1} z1^2 - (q - q^{-1}) z1 z2 ; x_{1,2} z2 = q z2 + (q - q^{-1}) z1.
        let x = x_ij(2, 1, 2).unwrap();
        let d = &q() - &q().pow(-1);
        let lhs = x.apply(&LaurentPoly::z_pow(&[2, 0]));
        let rhs = &LaurentPoly::z_pow(&[2, 0]).scale(&q().pow(-1)) - &LaurentPoly::z_pow(&[1, 1]).scale(&d);
        assert_eq!(lhs, rhs);
        let lhs = x.apply(&LaurentPoly::z(2, 2));
        let rhs = &LaurentPoly::z(2, 2).scale(&q()) + &LaurentPoly::z(2, 1).scale(&d);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cherednik_low_values() {
        let s1 = cherednik_type_a(2, 1).unwrap();
        let z1 = LaurentPoly::z(2, 1);
        let out = s1.apply(&z1);
        assert_eq!(out.coeff(&Mono::from_ints(&[1, 0])), &q() * &ParamScalar::t());
        let h2 = hamiltonian(2, 2).unwrap();
        assert_eq!(h2.apply(&z1), z1.scale(&ParamScalar::t()));
        assert!(cherednik_type_a(2, 3).is_err());
    }

    #[test]
    fn windows() {
        assert_eq!(window_box(2, 1).len(), 9);
        assert_eq!(compositions(3, 2).len(), 6);
        assert_eq!(window_polynomial(2, 2).len(), 6);
    }
}
