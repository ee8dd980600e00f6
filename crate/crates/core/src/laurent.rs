//! Sparse Laurent polynomials in the ambient variables `z_i = e^{e_i}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::{BigRational, Rational64};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::half::Half;
use crate::param::{PExp, ParamPoly, ParamScalar};

/// An exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<Half>);

impl Mono {
    pub fn zero(dim: usize) -> Mono {
        Mono(vec![Half::ZERO; dim])
    }

    pub fn from_ints(v: &[i64]) -> Mono {
        Mono(v.iter().map(|&x| Half::int(x)).collect())
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|h| h.twice()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|h| h.is_zero())
    }

    pub fn add(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| *a + *b).collect())
    }

    pub fn neg(&self) -> Mono {
        Mono(self.0.iter().map(|a| -*a).collect())
    }

    /// Integer exponents, if all are integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|h| h.to_int()).collect()
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, e)| {
                if *e == Half::ONE {
                    format!("z{}", i + 1)
                } else if e.is_integer() {
                    format!("z{}^{}", i + 1, e)
                } else {
                    format!("z{}^({})", i + 1, e)
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `2(λ, r)/(r, r)` for exponent vectors; panics if it is not an integer.
pub fn coroot_pairing(lambda: &[Half], r: &[Half]) -> i64 {
    let lr: i64 = lambda.iter().zip(r).map(|(a, b)| a.twice() * b.twice()).sum();
    let rr: i64 = r.iter().map(|b| b.twice() * b.twice()).sum();
    assert!(rr != 0, "zero root");
    assert!((2 * lr) % rr == 0, "non-integral coroot pairing");
    2 * lr / rr
}

/// `(λ, a)` as an exact half-integer (panics otherwise).
pub fn shift_exponent(lambda: &[Half], a: &[Rational64]) -> Half {
    let s: Rational64 = lambda.iter().zip(a).map(|(l, x)| l.to_rational() * x).sum();
    Half::from_rational(s)
}

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    dim: usize,
    terms: BTreeMap<Mono, ParamScalar>,
}

impl LaurentPoly {
    pub fn zero(dim: usize) -> Self {
        Self { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, ParamScalar::one())
    }

    pub fn constant(dim: usize, c: ParamScalar) -> Self {
        Self::term(Mono::zero(dim), c)
    }

    pub fn term(m: Mono, c: ParamScalar) -> Self {
        let mut p = Self::zero(m.0.len());
        p.add_term(m, c);
        p
    }

    /// `e^λ` with unit coefficient.
    pub fn monomial(m: Mono) -> Self {
        Self::term(m, ParamScalar::one())
    }

    /// `z^k` for an integer exponent vector.
    pub fn z_pow(k: &[i64]) -> Self {
        Self::monomial(Mono::from_ints(k))
    }

    /// The variable `z_i` (1-based).
    pub fn z(dim: usize, i: usize) -> Self {
        let mut k = vec![0; dim];
        k[i - 1] = 1;
        Self::z_pow(&k)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> ParamScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Mono, c: ParamScalar) {
        assert_eq!(m.0.len(), self.dim, "exponent vector length");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `+= sign·c e^m` without cloning `c` when the term already exists.
    pub fn add_term_signed(&mut self, m: Mono, c: &ParamScalar, negate: bool) {
        assert_eq!(m.0.len(), self.dim, "exponent vector length");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(if negate { -c } else { c.clone() });
            }
            Entry::Occupied(mut o) => {
                o.get_mut().accumulate(c, negate);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, p: &LaurentPoly, c: &ParamScalar) {
        if c.is_zero() {
            return;
        }
        let one = c.is_one();
        for (m, x) in &p.terms {
            if one {
                self.add_term_signed(m.clone(), x, false);
            } else {
                self.add_term(m.clone(), x * c);
            }
        }
    }

    fn check_dim(&self, o: &Self) -> Result<()> {
        if self.dim == o.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim, found: o.dim })
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check_dim(o)?;
        let mut r = self.clone();
        r.add_scaled(o, &ParamScalar::one());
        Ok(r)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check_dim(o)?;
        let mut r = Self::zero(self.dim);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.add(m2), c1 * c2);
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        let mut r = Self::zero(self.dim);
        r.add_scaled(self, c);
        r
    }

    /// Multiply by the monomial `e^μ`.
    pub fn shift_exponents(&self, mu: &Mono) -> Self {
        Self {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.add(mu), c.clone())).collect(),
        }
    }

    /// Coefficient of the zero exponent vector.
    pub fn constant_term(&self) -> ParamScalar {
        self.coeff(&Mono::zero(self.dim))
    }

    /// `z ↦ z⁻¹`, `q ↦ q⁻¹`, `t ↦ t⁻¹`.
    pub fn bar(&self) -> Self {
        Self {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.neg(), c.bar())).collect(),
        }
    }

    /// `e^λ ↦ t^{(λ,a)} e^λ`.
    pub fn diagonal_shift(&self, a: &[Rational64]) -> Self {
        assert_eq!(a.len(), self.dim, "shift vector length");
        Self {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let e = shift_exponent(&m.0, a);
                    (m.clone(), c.mul_monomial(PExp::var(crate::param::T, e)))
                })
                .collect(),
        }
    }

    /// `e^λ ↦ e^{w_r λ}` for a root `r` given in half-integer coordinates.
    pub fn reflect(&self, r: &[Half]) -> Self {
        let mut out = Self::zero(self.dim);
        for (m, c) in &self.terms {
            out.add_term(reflect_mono(m, r), c.clone());
        }
        out
    }

    /// `((s_r − 1)p)/(e^r − 1)` by the telescoping formula.
    pub fn demazure_divide(&self, r: &[Half]) -> Self {
        let mut out = Self::zero(self.dim);
        for (m, c) in &self.terms {
            demazure_mono(m, r, |mono, sign| {
                out.add_term(mono, if sign > 0 { c.clone() } else { -c })
            });
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&ParamScalar) -> Result<ParamScalar>) -> Result<Self> {
        let mut out = Self::zero(self.dim);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// True if every exponent is a non-negative integer.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|h| h.is_integer() && h.twice() >= 0))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    json!({
                        "exponents": m.0.iter().map(|h| h.to_rational().to_string()).collect::<Vec<_>>(),
                        "coeff": scalar_to_json(c),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value, dim: usize) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("expected an array of terms".into()))?;
        let mut p = Self::zero(dim);
        for t in arr {
            let ex = t["exponents"]
                .as_array()
                .ok_or_else(|| Error::Parse("missing exponents".into()))?;
            if ex.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: ex.len() });
            }
            let m = Mono(ex.iter().map(|e| Half::parse(e.as_str().unwrap_or("?"))).collect::<Result<_>>()?);
            p.add_term(m, scalar_from_json(&t["coeff"])?);
        }
        Ok(p)
    }
}

pub fn reflect_mono(m: &Mono, r: &[Half]) -> Mono {
    let k = coroot_pairing(&m.0, r);
    if k == 0 {
        return m.clone();
    }
    Mono(m.0.iter().zip(r).map(|(a, b)| *a - *b * k).collect())
}

/// Emit the signed monomials of the telescoping quotient for a single `e^λ`.
pub fn demazure_mono(m: &Mono, r: &[Half], mut emit: impl FnMut(Mono, i32)) {
    let k = coroot_pairing(&m.0, r);
    let step = |i: i64| Mono(m.0.iter().zip(r).map(|(a, b)| *a + *b * i).collect());
    if k > 0 {
        for i in 1..=k {
            emit(step(-i), -1);
        }
    } else if k < 0 {
        for i in 0..(-k) {
            emit(step(i), 1);
        }
    }
}

fn poly_to_json(p: &ParamPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| {
                let mut row = vec![
                    json!(e.0[0].to_rational().to_string()),
                    json!(e.0[1].to_rational().to_string()),
                    json!(c.to_string()),
                ];
                if !e.0[2].is_zero() {
                    row.push(json!(e.0[2].to_rational().to_string()));
                }
                Value::Array(row)
            })
            .collect(),
    )
}

fn poly_from_json(v: &Value) -> Result<ParamPoly> {
    let bad = || Error::Parse(format!("bad coefficient polynomial {v}"));
    let arr = v.as_array().ok_or_else(bad)?;
    let mut terms = Vec::new();
    for row in arr {
        let row = row.as_array().ok_or_else(bad)?;
        if row.len() < 3 || row.len() > 4 {
            return Err(bad());
        }
        let s = |i: usize| row[i].as_str().ok_or_else(bad);
        let ql = if row.len() == 4 { Half::parse(s(3)?)? } else { Half::ZERO };
        let c: BigRational = s(2)?.parse().map_err(|_| bad())?;
        terms.push((PExp([Half::parse(s(0)?)?, Half::parse(s(1)?)?, ql]), c));
    }
    Ok(ParamPoly::from_terms(terms))
}

pub fn scalar_to_json(c: &ParamScalar) -> Value {
    json!({ "num": poly_to_json(c.num()), "den": poly_to_json(c.den()) })
}

pub fn scalar_from_json(v: &Value) -> Result<ParamScalar> {
    ParamScalar::new(poly_from_json(&v["num"])?, poly_from_json(&v["den"])?)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                if m.is_zero() && c.is_one() {
                    "1".to_string()
                } else if m.is_zero() {
                    format!("({c})")
                } else if c.is_one() {
                    m.to_string()
                } else {
                    format!("({c})*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        self.try_add(o).expect("dimension mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self.check_dim(o).expect("dimension mismatch");
        let mut r = self.clone();
        r.add_scaled(o, &ParamScalar::int(-1));
        r
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        self.try_mul(o).expect("dimension mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&ParamScalar::int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: &[i64]) -> Vec<Half> {
        v.iter().map(|&x| Half::int(x)).collect()
    }

    #[test]
    fn difference_of_squares() {
        let z1 = LaurentPoly::z(2, 1);
        let z2 = LaurentPoly::z(2, 2);
        let lhs = &(&z1 - &z2) * &(&z1 + &z2);
        let rhs = &(&z1 * &z1) - &(&z2 * &z2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn demazure_of_square() {
        let r = h(&[1, -1, 0]);
        let p = LaurentPoly::z_pow(&[2, 0, 0]);
        let d = p.demazure_divide(&r);
        let expected = -&(&LaurentPoly::z_pow(&[1, 1, 0]) + &LaurentPoly::z_pow(&[0, 2, 0]));
        assert_eq!(d, expected);
    }

    #[test]
    fn constant_term_with_half_powers() {
        let c = ParamScalar::var_pow(crate::param::T, Half::from_twice(1));
        let p = LaurentPoly::constant(2, c.clone());
        assert_eq!(p.constant_term(), c);
        assert!(LaurentPoly::zero(2).constant_term().is_zero());
    }

    #[test]
    fn shift_scales_by_t_power() {
        let p = LaurentPoly::z_pow(&[2, 1]);
        let a = [Rational64::from(1), Rational64::from(0)];
        let s = p.diagonal_shift(&a);
        assert_eq!(s.coeff(&Mono::from_ints(&[2, 1])), ParamScalar::t().pow(2));
    }

    #[test]
    fn json_round_trip() {
        let q = ParamScalar::q();
        let c = &(&q - &q.pow(-1)) / &(&q + &ParamScalar::int(2));
        let mut p = LaurentPoly::term(Mono::from_ints(&[1, -1]), c);
        p.add_term(Mono(vec![Half::from_twice(1), Half::from_twice(-1)]), ParamScalar::t());
        let v = p.to_json();
        assert_eq!(LaurentPoly::from_json(&v, 2).unwrap(), p);
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn scalar() -> impl Strategy<Value = ParamScalar> {
        (-3i64..=3, -2i64..=2, -2i64..=2).prop_map(|(c, a, b)| {
            &(&ParamScalar::int(c) * &ParamScalar::q().pow(a)) * &ParamScalar::t().pow(b)
        })
    }

    fn poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((prop::collection::vec(-2i64..=2, 3), scalar()), 0..5).prop_map(|ts| {
            let mut p = LaurentPoly::zero(3);
            for (e, c) in ts {
                p.add_term(Mono::from_ints(&e), c);
            }
            p
        })
    }

    fn shift() -> impl Strategy<Value = Vec<Rational64>> {
        prop::collection::vec((-2i64..=2).prop_map(Rational64::from), 3)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn bar_is_ring_involution(a in poly(), b in poly()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        }

        #[test]
        fn demazure_times_denominator(a in poly(), i in 0usize..3, j in 0usize..3) {
            prop_assume!(i != j);
            let mut r = vec![0i64; 3];
            r[i] = 1;
            r[j] = -1;
            let rh: Vec<Half> = r.iter().map(|&x| Half::int(x)).collect();
            let lhs = &(&LaurentPoly::z_pow(&r) - &LaurentPoly::one(3)) * &a.demazure_divide(&rh);
            prop_assert_eq!(lhs, &a.reflect(&rh) - &a);
        }

        #[test]
        fn shifts_compose_additively(p in poly(), a in shift(), b in shift()) {
            let ab: Vec<Rational64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            prop_assert_eq!(p.diagonal_shift(&a).diagonal_shift(&b), p.diagonal_shift(&ab));
        }

        #[test]
        fn json_round_trips(p in poly()) {
            prop_assert_eq!(LaurentPoly::from_json(&p.to_json(), 3).unwrap(), p);
        }
    }
}
