//! Affine roots, alcoves and the alcove-walk words for `S_ξ`.
//!
//! A word is stored in written order and applied right to left:
//! `[t^{a_m}, x_{ρ_m}, …, x_{ρ_1}, t^{a_0}]`. The translations read right to
//! left sum to the current origin, which must lie on the wall of the next
//! reflection; each reflection token records that wall's level.

use std::fmt;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rootsys::{
    add, coroot_pairing, dot, fmt_vec, is_zero, neg, rat, scale, solve_in_basis, sub, Rat,
    RootSystem, Vector,
};

/// The affine root `r + kδ`, i.e. the half-space `(r, x) ≥ k` side of `H_{r,k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineRoot {
    pub root: Vector,
    pub level: i64,
}

impl AffineRoot {
    /// `(r, x) − k`.
    pub fn value(&self, x: &[Rat]) -> Rat {
        dot(&self.root, x) - rat(self.level)
    }

    pub fn is_positive(&self, rs: &RootSystem) -> bool {
        self.level > 0 || (self.level == 0 && rs.is_positive(&self.root))
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", fmt_vec(&self.root), self.level)
    }
}

#[derive(Clone, Debug)]
pub struct Alcove {
    pub bounding: Vec<AffineRoot>,
}

impl Alcove {
    pub fn contains_interior(&self, x: &[Rat]) -> bool {
        self.bounding.iter().all(|w| w.value(x).is_positive())
    }

    pub fn contains_closed(&self, x: &[Rat]) -> bool {
        self.bounding.iter().all(|w| !w.value(x).is_negative())
    }
}

/// Simple walls at level 0 and an affine wall `−θ + δ` per component.
pub fn fundamental_alcove(rs: &RootSystem) -> Alcove {
    let mut bounding: Vec<AffineRoot> =
        rs.simple_roots.iter().map(|r| AffineRoot { root: r.coords.clone(), level: 0 }).collect();
    for h in rs.component_highest_roots() {
        bounding.push(AffineRoot { root: neg(&h.coords), level: -1 });
    }
    Alcove { bounding }
}

/// `w_{r+kδ}(x) = x − ((r, x) − k) r^V`.
pub fn affine_reflect(ar: &AffineRoot, x: &[Rat]) -> Vector {
    let c = ar.value(x) * rat(2) / dot(&ar.root, &ar.root);
    sub(x, &scale(&ar.root, c))
}

/// Vertices `0` and `ω_i / n_i` of the fundamental alcove, one simplex per
/// irreducible component (the alcove is their product).
pub fn alcove_vertices(rs: &RootSystem) -> Vec<Vec<Vector>> {
    let fw = rs.fundamental_coweights();
    let n = rs.highest_root_coeffs();
    rs.components()
        .into_iter()
        .map(|c| {
            let mut v = vec![vec![rat(0); rs.ambient_dim]];
            v.extend(c.iter().map(|&i| scale(&fw[i].coords, Rat::new(1, n[i]))));
            v
        })
        .collect()
}

const MAX_ATTEMPTS: usize = 16;
const PRIMES: [i64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

/// Barycenter of the fundamental alcove nudged by `1/M_attempt` along the
/// direction `Σ p_i^{attempt+1} ϖ_i^∨` (`p_i` the i-th prime).
pub fn base_point(rs: &RootSystem, attempt: usize) -> Vector {
    base_point_variant(rs, 0, attempt)
}

/// Number of base-point variants beyond the barycenter: one per choice of a
/// vertex in every component simplex.
pub fn variant_count(rs: &RootSystem) -> usize {
    alcove_vertices(rs).iter().map(|v| v.len()).product()
}

/// Like [`base_point`] for `variant = 0`; variant `v > 0` pulls the point
/// towards one vertex per component simplex (mixed radix in `v − 1`) so that
/// walks from different variants cross walls in different orders.
pub fn base_point_variant(rs: &RootSystem, variant: usize, attempt: usize) -> Vector {
    let mut b = vec![rat(0); rs.ambient_dim];
    let mut digits = variant.saturating_sub(1);
    for verts in alcove_vertices(rs) {
        let heavy = (variant > 0).then(|| digits % verts.len());
        digits /= verts.len();
        let mut c = vec![rat(0); rs.ambient_dim];
        let mut total = 0;
        for (j, v) in verts.iter().enumerate() {
            let w = if heavy == Some(j) { 4 } else { 1 };
            c = add(&c, &scale(v, rat(w)));
            total += w;
        }
        b = add(&b, &scale(&c, Rat::new(1, total)));
    }
    let mut dir = vec![rat(0); rs.ambient_dim];
    // Retries also turn the direction, so no single wall coincidence can persist.
    for (i, w) in rs.fundamental_coweights().iter().enumerate() {
        dir = add(&dir, &scale(&w.coords, rat(PRIMES[i % PRIMES.len()].pow(attempt as u32 + 1))));
    }
    let m = 101 + 97 * attempt as i64;
    add(&b, &scale(&dir, Rat::new(1, m * (rs.rank as i64 + 1) * 8)))
}

/// A wall crossing of the segment `A → A + ξ`.
#[derive(Clone, Debug)]
pub struct Crossing {
    pub time: Rat,
    pub root: Vector,
    pub level: i64,
    pub point: Vector,
}

/// All crossings of the open segment from `base` to `base + ξ`, by time.
/// Errors if two walls are crossed simultaneously.
pub fn crossings(rs: &RootSystem, xi: &[Rat], base: &[Rat]) -> Option<Vec<Crossing>> {
    let mut out = Vec::new();
    for r in &rs.positive_roots {
        let a = dot(&r.coords, base);
        let b = dot(&r.coords, xi);
        if b.is_zero() {
            continue;
        }
        let (lo, hi) = if b.is_positive() { (a, a + b) } else { (a + b, a) };
        let mut k = lo.floor().to_integer() + 1;
        while rat(k) < hi {
            let time = (rat(k) - a) / b;
            if time.is_positive() && time < rat(1) {
                out.push(Crossing {
                    time,
                    root: r.coords.clone(),
                    level: k,
                    point: add(base, &scale(xi, time)),
                });
            }
            k += 1;
        }
    }
    out.sort_by_key(|x| x.time);
    if out.windows(2).any(|w| w[0].time == w[1].time) {
        return None;
    }
    Some(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    /// `x_ρ`, applied with the origin on `H_{ρ, level}`.
    Reflect { root: Vector, level: Rat },
    /// `t^a`.
    Translate(Vector),
}

#[derive(Clone, Debug)]
pub struct Word {
    /// Written order; applied right to left.
    pub tokens: Vec<Token>,
    pub target: Vector,
    pub gamma: Vector,
    pub reflection_count: usize,
}

impl Word {
    pub fn empty(dim: usize) -> Word {
        Word {
            tokens: vec![],
            target: vec![rat(0); dim],
            gamma: vec![rat(0); dim],
            reflection_count: 0,
        }
    }

    pub fn total_translate(&self) -> Vector {
        let mut s = vec![rat(0); self.target.len()];
        for t in &self.tokens {
            if let Token::Translate(a) = t {
                s = add(&s, a);
            }
        }
        s
    }

    pub fn reflections(&self) -> impl Iterator<Item = &Vector> {
        self.tokens.iter().filter_map(|t| match t {
            Token::Reflect { root, .. } => Some(root),
            Token::Translate(_) => None,
        })
    }

    /// Check the target and that every reflection sits on its recorded wall.
    pub fn validate(&self) -> Result<()> {
        let mut origin = vec![rat(0); self.target.len()];
        for t in self.tokens.iter().rev() {
            match t {
                Token::Translate(a) => origin = add(&origin, a),
                Token::Reflect { root, level } => {
                    let v = dot(root, &origin);
                    if v != *level || !level.is_integer() {
                        return Err(Error::WordInvariant(format!(
                            "origin {} is at level {} of {}, recorded {}",
                            fmt_vec(&origin),
                            v,
                            fmt_vec(root),
                            level
                        )));
                    }
                }
            }
        }
        if origin != self.target {
            return Err(Error::WordInvariant(format!(
                "total translate {} differs from target {}",
                fmt_vec(&origin),
                fmt_vec(&self.target)
            )));
        }
        if self.reflections().count() != self.reflection_count {
            return Err(Error::WordInvariant("reflection count".into()));
        }
        Ok(())
    }

    /// The word of the inverse operator: reversed, with `x_ρ → x_{−ρ}`, `t^a → t^{−a}`.
    pub fn inverse(&self) -> Word {
        let xi = &self.target;
        let tokens = self
            .tokens
            .iter()
            .rev()
            .map(|t| match t {
                Token::Translate(a) => Token::Translate(neg(a)),
                Token::Reflect { root, level } => {
                    Token::Reflect { root: neg(root), level: dot(root, xi) - level }
                }
            })
            .collect();
        Word {
            tokens,
            target: neg(xi),
            gamma: vec![rat(0); xi.len()],
            reflection_count: self.reflection_count,
        }
    }

    pub fn to_json(&self) -> Value {
        let v = |x: &[Rat]| x.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        json!({
            "xi": v(&self.target),
            "gamma": v(&self.gamma),
            "reflection_count": self.reflection_count,
            "tokens": self.tokens.iter().map(|t| match t {
                Token::Reflect { root, level } =>
                    json!({"kind": "reflect", "root": v(root), "level": level.to_string()}),
                Token::Translate(a) => json!({"kind": "translate", "vec": v(a)}),
            }).collect::<Vec<_>>(),
        })
    }
}

/// `w1 · w2` (w2 applied first); w1's walls are shifted by w2's total translate.
pub fn word_concat(w1: &Word, w2: &Word) -> Result<Word> {
    if w1.target.len() != w2.target.len() {
        return Err(Error::DimensionMismatch { expected: w1.target.len(), found: w2.target.len() });
    }
    let shift = &w2.target;
    let mut tokens: Vec<Token> = w1
        .tokens
        .iter()
        .map(|t| match t {
            Token::Reflect { root, level } => {
                Token::Reflect { root: root.clone(), level: level + dot(root, shift) }
            }
            other => other.clone(),
        })
        .collect();
    tokens.extend(w2.tokens.iter().cloned());
    let w = Word {
        tokens,
        target: add(&w1.target, &w2.target),
        gamma: vec![rat(0); shift.len()],
        reflection_count: w1.reflection_count + w2.reflection_count,
    };
    w.validate()?;
    Ok(w)
}

/// Minimal-norm integral point on `(ρ, o) = k` (lexicographic tie-break),
/// falling back to `k ρ/(ρ, ρ)` when no integral point exists.
pub fn wall_origin(rho: &[Rat], k: i64) -> Vector {
    let support: Vec<usize> = (0..rho.len()).filter(|&i| !rho[i].is_zero()).collect();
    let bound = k.abs() + 1;
    let mut best: Option<(Rat, Vector)> = None;
    let mut idx = vec![-bound; support.len()];
    loop {
        let mut o = vec![rat(0); rho.len()];
        for (j, &i) in support.iter().enumerate() {
            o[i] = rat(idx[j]);
        }
        if dot(rho, &o) == rat(k) {
            let n = dot(&o, &o);
            let better = match &best {
                None => true,
                Some((bn, bo)) => n < *bn || (n == *bn && o < *bo),
            };
            if better {
                best = Some((n, o));
            }
        }
        let mut j = 0;
        while j < idx.len() {
            idx[j] += 1;
            if idx[j] <= bound {
                break;
            }
            idx[j] = -bound;
            j += 1;
        }
        if j == idx.len() {
            break;
        }
    }
    best.map(|(_, o)| o).unwrap_or_else(|| scale(rho, rat(k) / dot(rho, rho)))
}

/// Word of the straight walk `base → base + ξ`; `None` if the walk is not generic.
///
/// At each crossing the emitted root is the one pointing back into the
/// alcove being left (its value decreases along the walk).
pub fn walk_word(rs: &RootSystem, xi: &[Rat], base: &[Rat]) -> Option<Word> {
    let cr = crossings(rs, xi, base)?;
    let mut applied = Vec::new();
    let mut origin = vec![rat(0); xi.len()];
    for c in &cr {
        let increasing = dot(&c.root, xi).is_positive();
        let (rho, level) = if increasing { (neg(&c.root), -c.level) } else { (c.root.clone(), c.level) };
        let o = wall_origin(&rho, level);
        applied.push(Token::Translate(sub(&o, &origin)));
        applied.push(Token::Reflect { root: rho, level: rat(level) });
        origin = o;
    }
    applied.push(Token::Translate(sub(xi, &origin)));
    applied.retain(|t| !matches!(t, Token::Translate(a) if is_zero(a)));
    applied.reverse();
    Some(Word {
        reflection_count: cr.len(),
        tokens: applied,
        target: xi.to_vec(),
        gamma: gamma(rs, xi),
    })
}

/// Walk from the `attempt`-th base point onwards, retrying until generic.
pub fn walk_word_from(rs: &RootSystem, xi: &[Rat], first_attempt: usize) -> Result<Word> {
    walk_word_variant(rs, xi, 0, first_attempt)
}

pub fn walk_word_variant(rs: &RootSystem, xi: &[Rat], variant: usize, first_attempt: usize) -> Result<Word> {
    for attempt in first_attempt..first_attempt + MAX_ATTEMPTS {
        let base = base_point_variant(rs, variant, attempt);
        debug_assert!(fundamental_alcove(rs).contains_interior(&base));
        if let Some(w) = walk_word(rs, xi, &base) {
            return Ok(w);
        }
    }
    Err(Error::NonGeneric { attempts: MAX_ATTEMPTS })
}

/// Split `ξ = ξ1 − ξ2` with both dominant and `ξ2` minimal.
pub fn dominant_split(rs: &RootSystem, xi: &[Rat]) -> (Vector, Vector) {
    let mut xi2 = vec![rat(0); xi.len()];
    for (a, w) in rs.simple_roots.iter().zip(rs.fundamental_coweights()) {
        let p = dot(xi, &a.coords);
        if p.is_negative() {
            xi2 = add(&xi2, &scale(&w.coords, -p));
        }
    }
    (add(xi, &xi2), xi2)
}

/// The word for `S_ξ`: a geodesic walk for dominant `ξ`, otherwise the
/// formal quotient `S_{ξ1} S_{ξ2}^{-1}`.
pub fn geodesic_word(rs: &RootSystem, xi: &[Rat]) -> Result<Word> {
    if xi.len() != rs.ambient_dim {
        return Err(Error::DimensionMismatch { expected: rs.ambient_dim, found: xi.len() });
    }
    if !rs.is_coweight(xi) {
        return Err(Error::NotACoweight(fmt_vec(xi)));
    }
    let mut w = if rs.is_dominant(xi) {
        walk_word_from(rs, xi, 0)?
    } else {
        let (xi1, xi2) = dominant_split(rs, xi);
        let w1 = walk_word_from(rs, &xi1, 0)?;
        let w2 = walk_word_from(rs, &xi2, 0)?;
        word_concat(&w1, &w2.inverse())?
    };
    w.gamma = gamma(rs, xi);
    w.validate()?;
    Ok(w)
}

/// `{r + kδ : r > 0, 0 ≤ k < (ξ, r)}`.
pub fn inversion_set(rs: &RootSystem, xi: &[Rat]) -> Vec<AffineRoot> {
    let mut out = Vec::new();
    for r in &rs.positive_roots {
        let p = dot(xi, &r.coords);
        for k in 0..p.to_integer().max(0) {
            out.push(AffineRoot { root: r.coords.clone(), level: k });
        }
    }
    out
}

/// Orthogonal projection onto the span of the roots.
pub fn project_to_root_span(rs: &RootSystem, x: &[Rat]) -> Vector {
    let basis: Vec<Vector> = rs.simple_roots.iter().map(|r| r.coords.clone()).collect();
    let gram: Vec<Vector> =
        basis.iter().map(|a| basis.iter().map(|b| dot(a, b)).collect()).collect();
    let rhs: Vector = basis.iter().map(|a| dot(a, x)).collect();
    let c = solve_in_basis(&gram, &rhs).expect("simple roots are independent");
    let mut p = vec![rat(0); x.len()];
    for (a, ci) in basis.iter().zip(c) {
        p = add(&p, &scale(a, ci));
    }
    p
}

/// Minuscule correction: `γ` with `ξ + γ` a coroot-lattice vertex of `C + ξ`.
///
/// For type A in the GL ambient the correction also absorbs the diagonal
/// component of `ξ`, so `ξ + γ` has coordinate sum zero.
pub fn gamma(rs: &RootSystem, xi: &[Rat]) -> Vector {
    for m in rs.minuscule_weights() {
        let v = project_to_root_span(rs, &add(xi, &m.coords));
        if rs.is_coroot_lattice(&v) {
            return sub(&v, xi);
        }
    }
    unreachable!("every coweight class has a minuscule representative")
}

/// Label of each wall crossed by the walk: `i + 1` for the simple wall `α_i`,
/// `0` for the affine wall. Found by folding the crossing point into the
/// closed fundamental alcove.
pub fn gallery_labels(rs: &RootSystem, xi: &[Rat]) -> Result<Vec<usize>> {
    if !rs.is_irreducible() {
        return Err(Error::UnsupportedRootSystem { family: format!("{:?} (reducible)", rs.family), rank: rs.rank });
    }
    let base = (0..MAX_ATTEMPTS)
        .map(|a| base_point(rs, a))
        .find(|b| crossings(rs, xi, b).is_some())
        .ok_or(Error::NonGeneric { attempts: MAX_ATTEMPTS })?;
    let cr = crossings(rs, xi, &base).unwrap();
    let top = AffineRoot { root: rs.highest_root.coords.clone(), level: 1 };
    let mut labels = Vec::new();
    for c in cr {
        let mut x = c.point.clone();
        loop {
            if let Some(a) = rs.simple_roots.iter().find(|a| dot(&a.coords, &x).is_negative()) {
                x = sub(&x, &scale(&a.coords, coroot_pairing(&x, &a.coords)));
            } else if top.value(&x).is_positive() {
                x = affine_reflect(&top, &x);
            } else {
                break;
            }
        }
        let mut on: Vec<usize> = rs
            .simple_roots
            .iter()
            .enumerate()
            .filter(|(_, a)| dot(&a.coords, &x).is_zero())
            .map(|(i, _)| i + 1)
            .collect();
        if top.value(&x).is_zero() {
            on.push(0);
        }
        if on.len() != 1 {
            return Err(Error::NonGeneric { attempts: MAX_ATTEMPTS });
        }
        labels.push(on[0]);
    }
    Ok(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, ints, Family};

    #[test]
    fn fundamental_alcove_walls() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let c = fundamental_alcove(&rs);
        let walls: Vec<String> = c.bounding.iter().map(|w| w.to_string()).collect();
        assert_eq!(walls, ["(1, -1, 0)@0", "(0, 1, -1)@0", "(-1, 0, 1)@-1"]);
        assert!(!c.contains_interior(&ints(&[0, 0, 0])));
        assert!(c.contains_closed(&ints(&[0, 0, 0])));
        assert!(c.contains_interior(&base_point(&rs, 0)));
        let b2 = build_root_system(Family::B, 2).unwrap();
        assert_eq!(fundamental_alcove(&b2).bounding.len(), 3);
    }

    #[test]
    fn affine_reflection() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let ar = AffineRoot { root: ints(&[1, -1]), level: 1 };
        assert_eq!(affine_reflect(&ar, &ints(&[0, 0])), vec![Rat::new(1, 1), Rat::new(-1, 1)]);
        let fixed = vec![Rat::new(1, 2), Rat::new(-1, 2)];
        assert_eq!(affine_reflect(&ar, &fixed), fixed);
        let _ = rs;
    }

    #[test]
    fn word_for_minus_e1() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let w = geodesic_word(&rs, &ints(&[-1, 0, 0])).unwrap();
        let mut roots: Vec<Vector> = w.reflections().cloned().collect();
        roots.sort();
        assert_eq!(roots, vec![ints(&[1, -1, 0]), ints(&[1, 0, -1])]);
        assert_eq!(w.total_translate(), ints(&[-1, 0, 0]));
    }

    #[test]
    fn counts() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        assert_eq!(geodesic_word(&a2, &ints(&[1, 0, 0])).unwrap().reflection_count, 2);
        let b2 = build_root_system(Family::B, 2).unwrap();
        assert_eq!(geodesic_word(&b2, &ints(&[1, 1])).unwrap().reflection_count, 4);
        let inv = inversion_set(&b2, &ints(&[1, 1]));
        assert_eq!(inv.len(), 4);
        assert!(inv.contains(&AffineRoot { root: ints(&[1, 1]), level: 1 }));
        assert!(inversion_set(&a2, &ints(&[0, 0, 0])).is_empty());
    }

    #[test]
    fn gamma_for_a2() {
        let rs = build_root_system(Family::A, 2).unwrap();
        assert_eq!(gamma(&rs, &ints(&[1, 0, 0])), ints(&[0, 0, -1]));
        assert_eq!(gamma(&rs, &ints(&[1, 1, 0])), ints(&[0, -1, -1]));
        assert_eq!(gallery_labels(&rs, &ints(&[1, 0, 0])).unwrap(), vec![0, 2]);
        assert_eq!(gallery_labels(&rs, &ints(&[1, 1, 0])).unwrap(), vec![0, 1]);
    }

    #[test]
    fn concat_and_inverse() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let w1 = geodesic_word(&rs, &ints(&[1, 0, 0])).unwrap();
        let w2 = geodesic_word(&rs, &ints(&[1, 1, 0])).unwrap();
        let c = word_concat(&w1, &w2).unwrap();
        assert_eq!(c.target, ints(&[2, 1, 0]));
        assert_eq!(c.tokens.len(), w1.tokens.len() + w2.tokens.len());
        assert_eq!(word_concat(&w1, &Word::empty(3)).unwrap().tokens, w1.tokens);
        word_concat(&w1, &w1.inverse()).unwrap();
    }

    #[test]
    fn rejects_non_coweights() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let half = vec![Rat::new(1, 2), rat(0), rat(0)];
        assert!(matches!(geodesic_word(&rs, &half), Err(Error::NotACoweight(_))));
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::rootsys::{build_root_system, Family};
    use proptest::prelude::*;

    /// A random coroot-lattice vector of A2, B2 or C3.
    fn target() -> impl Strategy<Value = (RootSystem, Vector)> {
        prop::sample::select(vec![(Family::A, 2), (Family::B, 2), (Family::C, 3)])
            .prop_flat_map(|(f, n)| (Just(build_root_system(f, n).unwrap()), prop::collection::vec(-2i64..=2, n)))
            .prop_map(|(rs, c)| {
                let mut xi = vec![rat(0); rs.ambient_dim];
                for (a, k) in rs.simple_roots.iter().zip(c) {
                    xi = add(&xi, &scale(&a.coroot(), rat(k)));
                }
                (rs, xi)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn geodesic_word_lengths((rs, xi) in target()) {
            let w = geodesic_word(&rs, &xi).unwrap();
            w.validate().unwrap();
            prop_assert_eq!(w.total_translate(), xi.clone());
            let len = |x: &[Rat]| -> i64 {
                rs.positive_roots.iter().map(|r| dot(x, &r.coords).to_integer().abs()).sum()
            };
            // Dominant targets get a geodesic; others a quotient of two geodesics.
            let (xi1, xi2) = dominant_split(&rs, &xi);
            prop_assert_eq!(w.reflection_count as i64, len(&xi1) + len(&xi2));
            if rs.is_dominant(&xi) {
                prop_assert_eq!(w.reflection_count as i64, len(&xi));
            }
        }

        #[test]
        fn inverse_words_cancel((rs, xi) in target()) {
            let w = geodesic_word(&rs, &xi).unwrap();
            let inv = w.inverse();
            inv.validate().unwrap();
            prop_assert_eq!(inv.reflection_count, w.reflection_count);
            let round = word_concat(&w, &inv).unwrap();
            prop_assert!(is_zero(&round.total_translate()));
        }

        #[test]
        fn gamma_lands_on_coroot_lattice((rs, beta) in target(), m in 0usize..4) {
            let ms = rs.minuscule_weights();
            let xi = add(&beta, &ms[m % ms.len()].coords);
            let g = gamma(&rs, &xi);
            prop_assert!(rs.is_coroot_lattice(&add(&xi, &g)));
            prop_assert_eq!(gamma(&rs, &add(&xi, &beta)), g);
        }
    }
}
