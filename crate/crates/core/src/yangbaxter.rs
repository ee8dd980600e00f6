//! Yang–Baxter relations in their Weyl form `y_r² = 1`, `(y_r y_s)^m = 1`.
//!
//! The carrier is `(Σ_w N_w ⊗ T_w) / D`: Laurent numerators over the
//! regular module of the finite Hecke algebra with one common denominator,
//! kept as a list of factors and only expanded for the final comparison.

use std::collections::HashMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::Result;
use crate::heckerep::root_param;
use crate::laurent::{LaurentPoly, Mono};
use crate::rootsys::{reflect_vec, to_halves, RootSystem, Vector, WeylElement};

/// The Weyl group with its left-multiplication table by simple reflections.
pub struct HeckeContext {
    pub rs: RootSystem,
    pub elements: Vec<WeylElement>,
    pub lengths: Vec<usize>,
    /// `left[i][w]` = index of `s_i w`.
    pub left: Vec<Vec<usize>>,
}

impl HeckeContext {
    pub fn new(rs: &RootSystem) -> HeckeContext {
        let elements = rs.weyl_group();
        let index: HashMap<Vec<Vector>, usize> =
            elements.iter().enumerate().map(|(i, w)| (w.matrix.clone(), i)).collect();
        let lengths = elements.iter().map(|w| rs.weyl_length(w)).collect();
        let left = (0..rs.rank)
            .map(|i| {
                let s = rs.simple_reflection(i);
                elements.iter().map(|w| index[&s.compose(w).matrix]).collect()
            })
            .collect();
        HeckeContext { rs: rs.clone(), elements, lengths, left }
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    /// Index of the element with the given reduced word `s_{w[0]} s_{w[1]} ⋯`.
    pub fn index_of_word(&self, word: &[usize]) -> usize {
        let mut x = self.identity_index();
        for &i in word.iter().rev() {
            x = self.left[i][x];
        }
        x
    }
}

/// `Σ_w c_w T_w` with Laurent-polynomial coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeModuleElement {
    pub coeffs: Vec<LaurentPoly>,
}

impl HeckeModuleElement {
    pub fn basis(ctx: &HeckeContext, w: usize, c: LaurentPoly) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(c.dim()); ctx.elements.len()];
        coeffs[w] = c;
        Self { coeffs }
    }

    fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self { coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn add(&self, o: &Self) -> Self {
        Self { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

/// `T_{s_i} · x`: `T_{s w}` when the length goes up, else `T_{s w} + (q − q⁻¹) T_w`.
pub fn hecke_left_mult(ctx: &HeckeContext, i: usize, x: &HeckeModuleElement) -> HeckeModuleElement {
    let q = root_param(&ctx.rs, &ctx.rs.simple_roots[i].coords);
    let d = &q - &q.inv().unwrap();
    let dim = x.coeffs[0].dim();
    let mut out = vec![LaurentPoly::zero(dim); x.coeffs.len()];
    for (w, c) in x.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sw = ctx.left[i][w];
        out[sw] = &out[sw] + c;
        if ctx.lengths[sw] < ctx.lengths[w] {
            out[w].add_scaled(c, &d);
        }
    }
    HeckeModuleElement { coeffs: out }
}

/// A carrier element `x / Π den`.
#[derive(Clone, Debug)]
pub struct CarrierElement {
    pub num: HeckeModuleElement,
    pub den: Vec<LaurentPoly>,
}

/// `y_r = s_r ∘ (e^r f_r − f_r⁻¹)/(e^r q_r − q_r⁻¹)` for the simple root `α_i`.
pub fn y_operator(ctx: &HeckeContext, i: usize, x: &CarrierElement) -> CarrierElement {
    let r = &ctx.rs.simple_roots[i].coords;
    let rh = to_halves(r);
    let dim = ctx.rs.ambient_dim;
    let q = root_param(&ctx.rs, r);
    let er = LaurentPoly::monomial(Mono(rh.clone()));
    let d = &q - &q.inv().unwrap();
    // e^r f − f⁻¹ = (e^r − 1) f + (q − q⁻¹).
    let fx = hecke_left_mult(ctx, i, &x.num);
    let er_minus_1 = &er - &LaurentPoly::one(dim);
    let num = fx.map(|c| c * &er_minus_1).add(&x.num.map(|c| c.scale(&d)));
    let factor = &er.scale(&q) - &LaurentPoly::constant(dim, q.inv().unwrap());
    let mut den: Vec<LaurentPoly> = x.den.clone();
    den.push(factor);
    CarrierElement {
        num: num.map(|c| c.reflect(&rh)),
        den: den.iter().map(|c| c.reflect(&rh)).collect(),
    }
}

impl CarrierElement {
    pub fn basis(ctx: &HeckeContext, m: Mono, w: usize) -> Self {
        CarrierElement {
            num: HeckeModuleElement::basis(ctx, w, LaurentPoly::monomial(m)),
            den: vec![],
        }
    }

    /// Cross-multiplied equality `self = e^λ ⊗ T_w`.
    pub fn equals_basis(&self, m: &Mono, w: usize) -> bool {
        let dim = m.0.len();
        let mut d = LaurentPoly::one(dim);
        for f in &self.den {
            d = &d * f;
        }
        let target = d.shift_exponents(m);
        self.num.coeffs.iter().enumerate().all(|(v, c)| {
            if v == w {
                *c == target
            } else {
                c.is_zero()
            }
        })
    }
}

/// `r_1 = s, r_2 = w_s(r), r_3 = w_s w_r(s), …, r_m = r`.
pub fn yb_root_sequence(r: &[crate::rootsys::Rat], s: &[crate::rootsys::Rat], m: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for k in 1..=m {
        let mut v = if k % 2 == 1 { s.to_vec() } else { r.to_vec() };
        // Apply w_s w_r w_s ⋯ (k − 1 factors, rightmost first).
        let factors: Vec<&[crate::rootsys::Rat]> =
            (0..k - 1).map(|j| if j % 2 == 0 { s } else { r }).collect();
        for f in factors.iter().rev() {
            v = reflect_vec(f, &v);
        }
        out.push(v);
    }
    out
}

#[derive(Clone, Debug)]
pub struct YbFailure {
    pub relation: String,
    pub weight: Mono,
    pub element: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct YbReport {
    pub cases: usize,
    pub failures: Vec<YbFailure>,
}

impl YbReport {
    pub fn to_json(&self) -> Value {
        json!({
            "cases": self.cases,
            "failures": self.failures.iter().map(|f| json!({
                "relation": f.relation,
                "monomial": f.weight.to_string(),
                "basis": format!("T{:?}", f.element),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Window `{Σ c_i ϖ_i : c ∈ [−1, 1]^rank}`.
pub fn weight_window(rs: &RootSystem) -> Vec<Mono> {
    let fw = rs.fundamental_weights();
    let mut pts: Vec<Vector> = vec![vec![crate::rootsys::rat(0); rs.ambient_dim]];
    for w in &fw {
        pts = pts
            .into_iter()
            .flat_map(|p| {
                (-1..=1).map(move |c| {
                    p.iter().zip(&w.coords).map(|(a, b)| a + b * crate::rootsys::rat(c)).collect()
                })
            })
            .collect();
    }
    pts.iter().map(|p| Mono(to_halves(p))).collect()
}

/// Check `y_r² = 1` and `(y_r y_s)^{m_rs} = 1` on `window ⊗ {T_w}`.
pub fn verify_weyl_relations(rs: &RootSystem) -> Result<YbReport> {
    let ctx = HeckeContext::new(rs);
    let window = weight_window(rs);
    let mut relations: Vec<(String, Vec<usize>)> = Vec::new();
    for i in 0..rs.rank {
        relations.push((format!("y{}^2", i + 1), vec![i, i]));
    }
    for i in 0..rs.rank {
        for j in i + 1..rs.rank {
            let m = rs.braid_orders[i][j] as usize;
            let word: Vec<usize> = (0..2 * m).map(|k| if k % 2 == 0 { j } else { i }).collect();
            relations.push((format!("(y{} y{})^{}", i + 1, j + 1, m), word));
        }
    }
    let n_elems = ctx.elements.len();
    let cases: Vec<(usize, &Mono, usize)> = (0..relations.len())
        .flat_map(|r| window.iter().flat_map(move |m| (0..n_elems).map(move |w| (r, m, w))))
        .collect();
    let failures: Vec<YbFailure> = cases
        .par_iter()
        .filter_map(|&(r, m, w)| {
            let (name, word) = &relations[r];
            let mut x = CarrierElement::basis(&ctx, m.clone(), w);
            // Rightmost factor acts first.
            for &i in word.iter().rev() {
                x = y_operator(&ctx, i, &x);
            }
            (!x.equals_basis(m, w)).then(|| YbFailure {
                relation: name.clone(),
                weight: m.clone(),
                element: ctx.elements[w].word.clone(),
            })
        })
        .collect();
    Ok(YbReport { cases: cases.len(), failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::ParamScalar;
    use crate::rootsys::{build_root_system, ints, Family};

    #[test]
    fn hecke_regular_module() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let ctx = HeckeContext::new(&rs);
        let one = LaurentPoly::one(3);
        let e = HeckeModuleElement::basis(&ctx, 0, one.clone());
        let t1 = hecke_left_mult(&ctx, 0, &e);
        assert_eq!(t1, HeckeModuleElement::basis(&ctx, ctx.index_of_word(&[0]), one.clone()));
        // T_1 T_1 = (q − q⁻¹) T_1 + T_e
        let t11 = hecke_left_mult(&ctx, 0, &t1);
        let q = ParamScalar::q();
        let d = &q - &q.inv().unwrap();
        let mut expect = HeckeModuleElement::basis(&ctx, 0, one.clone());
        expect.coeffs[ctx.index_of_word(&[0])] = one.scale(&d);
        assert_eq!(t11, expect);
        // T_1 T_2 T_1 = T_{121}
        let t121 = hecke_left_mult(&ctx, 0, &hecke_left_mult(&ctx, 1, &t1));
        let w = ctx.index_of_word(&[0, 1, 0]);
        assert_eq!(ctx.lengths[w], 3);
        assert_eq!(t121, HeckeModuleElement::basis(&ctx, w, one));
    }

    #[test]
    fn y_squared_on_unit() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let ctx = HeckeContext::new(&rs);
        let m = Mono::zero(2);
        let x = CarrierElement::basis(&ctx, m.clone(), 0);
        let y = y_operator(&ctx, 0, &x);
        assert!(!y.equals_basis(&m, 0));
        assert!(y_operator(&ctx, 0, &y).equals_basis(&m, 0));
    }

    #[test]
    fn root_sequence_a2() {
        let seq = yb_root_sequence(&ints(&[1, -1, 0]), &ints(&[0, 1, -1]), 3);
        assert_eq!(seq, vec![ints(&[0, 1, -1]), ints(&[1, 0, -1]), ints(&[1, -1, 0])]);
    }

    #[test]
    fn weights_pair_to_kronecker() {
        for (f, n) in [(Family::B, 2), (Family::C, 3), (Family::G, 2), (Family::A, 3)] {
            let rs = build_root_system(f, n).unwrap();
            for (i, w) in rs.fundamental_weights().iter().enumerate() {
                for (j, a) in rs.simple_roots.iter().enumerate() {
                    let p = crate::rootsys::pairing(&w.coords, a);
                    assert_eq!(p, crate::rootsys::rat((i == j) as i64), "{f:?}{n} {i} {j}");
                }
            }
        }
    }
}
