//! Constant-term inner product `⟨p1, p2⟩ = CT(bar(p1) p2 C)`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::half::Half;
use crate::heckerep::{compositions, PolyOperator};
use crate::laurent::{LaurentPoly, Mono};
use crate::param::{PExp, ParamPoly, ParamScalar, Q, T};
use crate::spectrum::{eigenfunction_with, Composition, Specialization};

#[derive(Clone, Debug)]
pub struct MeasureSpec {
    pub n: usize,
    pub kappa: u32,
    pub measure: LaurentPoly,
    /// `bar(C) = bar_sign · C`.
    pub bar_sign: i64,
}

/// `C = Π_{i<j} Π_{l=−κ}^{κ−1} (t^{l/2} (z_i/z_j)^{1/2} − t^{−l/2} (z_j/z_i)^{1/2})`.
pub fn build_measure(n: usize, kappa: u32) -> Result<MeasureSpec> {
    let mut c = LaurentPoly::one(n);
    let k = kappa as i64;
    for i in 0..n {
        for j in i + 1..n {
            for l in -k..k {
                let mut up = vec![Half::ZERO; n];
                up[i] = Half::from_twice(1);
                up[j] = Half::from_twice(-1);
                let down: Vec<Half> = up.iter().map(|h| -*h).collect();
                let mut f = LaurentPoly::zero(n);
                f.add_term(Mono(up), ParamScalar::var_pow(T, Half::from_twice(l)));
                f.add_term(Mono(down), -&ParamScalar::var_pow(T, Half::from_twice(-l)));
                c = &c * &f;
            }
        }
    }
    if let Some((m, _)) = c.terms().find(|(m, _)| m.0.iter().any(|h| !h.is_integer())) {
        return Err(Error::Specialization(format!("measure has non-integral exponent {m}")));
    }
    let bar = c.bar();
    let bar_sign = if bar == c {
        1
    } else if bar == -&c {
        -1
    } else {
        return Err(Error::Specialization("measure is not bar-invariant up to sign".into()));
    };
    Ok(MeasureSpec { n, kappa, measure: c, bar_sign })
}

impl MeasureSpec {
    pub fn specialization(&self) -> Specialization {
        Specialization { kappa: self.kappa }
    }

    /// Substitute `q = t^{κ/2}` in the coefficients.
    pub fn specialize(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        self.specialization().poly(p)
    }
}

fn check_specialized(p: &LaurentPoly) -> Result<()> {
    if p.terms().any(|(_, c)| c.involves(Q)) {
        return Err(Error::Specialization("q must be specialized to t^(kappa/2) first".into()));
    }
    Ok(())
}

/// `CT(bar(p1) · p2 · C) = Σ bar(a_λ) b_μ C_{λ−μ}`.
pub fn scalar_product(p1: &LaurentPoly, p2: &LaurentPoly, spec: &MeasureSpec) -> Result<ParamScalar> {
    check_specialized(p1)?;
    check_specialized(p2)?;
    let mut acc = ParamScalar::zero();
    for (l, a) in p1.terms() {
        let ab = a.bar();
        for (m, b) in p2.terms() {
            let diff = l.add(&m.neg());
            let c = spec.measure.coeff(&diff);
            if !c.is_zero() {
                acc = &acc + &(&(&ab * b) * &c);
            }
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug)]
pub struct PairFailure {
    pub left: Mono,
    pub right: Mono,
    pub lhs: ParamScalar,
    pub rhs: ParamScalar,
}

#[derive(Clone, Debug, Default)]
pub struct PairReport {
    pub cases: usize,
    pub failures: Vec<PairFailure>,
    pub warnings: Vec<String>,
}

impl PairReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "cases": self.cases,
            "failures": self.failures.iter().map(|f| json!({
                "pair": [f.left.to_string(), f.right.to_string()],
                "lhs": s_string(&f.lhs),
                "rhs": s_string(&f.rhs),
            })).collect::<Vec<_>>(),
            "warnings": self.warnings,
        })
    }
}

/// `⟨op p1, p2⟩ = ⟨p1, adj p2⟩` for all pairs of window monomials.
pub fn check_adjoint(op: &PolyOperator, adj: &PolyOperator, spec: &MeasureSpec, window: &[Mono]) -> Result<PairReport> {
    let basis: Vec<LaurentPoly> = window.iter().map(|m| LaurentPoly::monomial(m.clone())).collect();
    let left: Vec<LaurentPoly> = basis.iter().map(|p| spec.specialize(&op.apply(p))).collect::<Result<_>>()?;
    let right: Vec<LaurentPoly> = basis.iter().map(|p| spec.specialize(&adj.apply(p))).collect::<Result<_>>()?;
    let mut rep = PairReport::default();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            rep.cases += 1;
            let lhs = scalar_product(&left[i], &basis[j], spec)?;
            let rhs = scalar_product(&basis[i], &right[j], spec)?;
            if lhs != rhs {
                rep.failures.push(PairFailure { left: window[i].clone(), right: window[j].clone(), lhs, rhs });
            }
        }
    }
    Ok(rep)
}

/// Eigenfunctions at `q = t^{κ/2}` for every composition of degree ≤ `degree`;
/// compositions whose eigenvalues collide are skipped with a warning.
pub fn specialized_eigenfunctions(n: usize, kappa: u32, degree: u32) -> Result<(Vec<(Composition, LaurentPoly)>, Vec<String>)> {
    let sp = Specialization { kappa };
    let mut out = Vec::new();
    let mut warnings = Vec::new();
    for d in 0..=degree {
        for k in compositions(n, d) {
            match eigenfunction_with(&k, Some(sp)) {
                Ok(rec) => out.push((k, rec.eigenfunction)),
                Err(Error::Degeneracy(a, b)) => {
                    warnings.push(format!("skipped {a:?}: eigenvalues collide with {b:?}"))
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok((out, warnings))
}

#[derive(Clone, Debug)]
pub struct Gram {
    pub compositions: Vec<Composition>,
    pub entries: Vec<Vec<ParamScalar>>,
    pub warnings: Vec<String>,
}

pub fn gram_matrix(n: usize, kappa: u32, degree: u32) -> Result<Gram> {
    let spec = build_measure(n, kappa)?;
    let (efs, warnings) = specialized_eigenfunctions(n, kappa, degree)?;
    let entries = efs
        .iter()
        .map(|(_, a)| efs.iter().map(|(_, b)| scalar_product(a, b, &spec)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Gram { compositions: efs.into_iter().map(|(k, _)| k).collect(), entries, warnings })
}

/// `⟨E_k, E_k'⟩ = 0` for distinct compositions.
pub fn orthogonality_check(n: usize, kappa: u32, degree: u32) -> Result<PairReport> {
    let g = gram_matrix(n, kappa, degree)?;
    let mono = |k: &Composition| Mono::from_ints(&k.iter().map(|&x| x as i64).collect::<Vec<_>>());
    let mut rep = PairReport { warnings: g.warnings.clone(), ..Default::default() };
    for (i, ki) in g.compositions.iter().enumerate() {
        for (j, kj) in g.compositions.iter().enumerate() {
            if i == j {
                continue;
            }
            rep.cases += 1;
            if !g.entries[i][j].is_zero() {
                rep.failures.push(PairFailure {
                    left: mono(ki),
                    right: mono(kj),
                    lhs: g.entries[i][j].clone(),
                    rhs: ParamScalar::zero(),
                });
            }
        }
    }
    Ok(rep)
}

fn poly_in_s(p: &ParamPoly) -> ParamPoly {
    ParamPoly::from_terms(p.terms().map(|(e, c)| {
        let mut x = PExp::ZERO;
        x.0[T] = Half::int(e.0[T].twice());
        x.0[Q] = e.0[Q];
        (x, c.clone())
    }))
}

/// A `t`-only scalar written in `s = t^{1/2}`.
pub fn s_string(c: &ParamScalar) -> String {
    let num = poly_in_s(c.num());
    let den = poly_in_s(c.den());
    ParamScalar::new(num, den).map(|x| x.to_string().replace('t', "s")).unwrap_or_else(|_| c.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt_t(e: i64) -> ParamScalar {
        ParamScalar::var_pow(T, Half::from_twice(e))
    }

    #[test]
    fn kappa_zero_is_flat() {
        let m = build_measure(3, 0).unwrap();
        assert_eq!(m.measure, LaurentPoly::one(3));
        let z1 = LaurentPoly::z(3, 1);
        assert!(scalar_product(&z1, &z1, &m).unwrap().is_one());
    }

    #[test]
    fn n2_kappa1_measure() {
        let m = build_measure(2, 1).unwrap();
        let mut expect = LaurentPoly::zero(2);
        expect.add_term(Mono::from_ints(&[1, -1]), sqrt_t(-1));
        expect.add_term(Mono::from_ints(&[-1, 1]), sqrt_t(1));
        expect.add_term(Mono::zero(2), -&(&sqrt_t(1) + &sqrt_t(-1)));
        assert_eq!(m.measure, expect);
        assert_eq!(m.bar_sign, 1);
    }

    #[test]
    fn rejects_unspecialized() {
        let m = build_measure(2, 1).unwrap();
        let p = LaurentPoly::constant(2, ParamScalar::q());
        assert!(matches!(scalar_product(&p, &p, &m), Err(Error::Specialization(_))));
    }

    #[test]
    fn s_strings() {
        assert_eq!(s_string(&(&sqrt_t(1) + &sqrt_t(-1))), "s + s^-1");
    }
}
