//! Coefficient field: fractions of Laurent polynomials in the Hecke
//! parameters `q`, `t` and (for unequal parameters) `ql`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::half::Half;

pub const VAR_NAMES: [&str; 3] = ["q", "t", "ql"];
pub const Q: usize = 0;
pub const T: usize = 1;
pub const QL: usize = 2;

/// Exponents of `(q, t, ql)`, ordered graded-lexicographically.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PExp(pub [Half; 3]);

impl PExp {
    pub const ZERO: PExp = PExp([Half::ZERO; 3]);

    pub fn var(slot: usize, e: Half) -> PExp {
        let mut x = PExp::ZERO;
        x.0[slot] = e;
        x
    }

    #[inline]
    fn degree(&self) -> i64 {
        self.0[0].twice() + self.0[1].twice() + self.0[2].twice()
    }

    pub fn add(self, o: PExp) -> PExp {
        PExp([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }

    pub fn sub(self, o: PExp) -> PExp {
        PExp([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }

    pub fn neg(self) -> PExp {
        PExp([-self.0[0], -self.0[1], -self.0[2]])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|h| h.is_zero())
    }
}

impl Ord for PExp {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for PExp {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for PExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Sparse Laurent polynomial in `q, t, ql` with rational coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ParamPoly {
    terms: BTreeMap<PExp, BigRational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(PExp::ZERO, BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(PExp::ZERO, c)
    }

    pub fn monomial(e: PExp, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (PExp, BigRational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&PExp, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    pub fn as_monomial(&self) -> Option<(PExp, &BigRational)> {
        (self.terms.len() == 1).then(|| {
            let (e, c) = self.terms.iter().next().unwrap();
            (*e, c)
        })
    }

    fn add_term(&mut self, e: PExp, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let cur = o.get_mut();
                if cur.is_integer() && c.is_integer() {
                    *cur = BigRational::from_integer(cur.numer() + c.numer());
                } else {
                    *cur += c;
                }
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn leading(&self) -> Option<(&PExp, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, x)| (*e, rat_mul(x, c))).collect() }
    }

    pub fn mul_monomial(&self, m: PExp) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e.add(m), c.clone())).collect() }
    }

    fn min_exps(&self) -> PExp {
        let mut m = [i64::MAX; 3];
        for e in self.terms.keys() {
            for i in 0..3 {
                m[i] = m[i].min(e.0[i].twice());
            }
        }
        PExp(m.map(|x| Half::from_twice(if x == i64::MAX { 0 } else { x })))
    }

    fn max_exps(&self) -> PExp {
        let mut m = [i64::MIN; 3];
        for e in self.terms.keys() {
            for i in 0..3 {
                m[i] = m[i].max(e.0[i].twice());
            }
        }
        PExp(m.map(|x| Half::from_twice(if x == i64::MIN { 0 } else { x })))
    }

    /// Exact quotient `self / d` if it is a Laurent polynomial.
    pub fn div_exact(&self, d: &ParamPoly) -> Option<ParamPoly> {
        let (ld, lc) = d.leading()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Any quotient term lies in the box [min(f) - min(d), max(f) - max(d)].
        let lo = self.min_exps().sub(d.min_exps());
        let hi = self.max_exps().sub(d.max_exps());
        let mut r = self.clone();
        let mut quot = Self::zero();
        while let Some((lr, cr)) = r.leading() {
            let e = lr.sub(*ld);
            if (0..3).any(|i| e.0[i] < lo.0[i] || e.0[i] > hi.0[i]) {
                return None;
            }
            let c = cr / lc;
            r = &r - &d.mul_monomial(e).scale(&c);
            quot.add_term(e, c);
        }
        Some(quot)
    }

    /// Replace each exponent vector by its negation (`q → q⁻¹` etc.).
    pub fn bar(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e.neg(), c.clone())).collect() }
    }

    /// Variables that actually occur.
    fn support_vars(&self) -> [bool; 3] {
        let mut v = [false; 3];
        for e in self.terms.keys() {
            for i in 0..3 {
                v[i] |= !e.0[i].is_zero();
            }
        }
        v
    }

    pub fn involves(&self, slot: usize) -> bool {
        self.support_vars()[slot]
    }

    /// Substitute `var ↦ target^ratio` where `ratio ∈ ½ℤ`.
    pub fn substitute(&self, var: usize, target: usize, ratio: Half) -> Result<Self> {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut ne = *e;
            let prod = e.0[var].twice() * ratio.twice();
            if prod % 2 != 0 {
                return Err(Error::Specialization(format!(
                    "{}^{} does not specialize to a half-integer power",
                    VAR_NAMES[var], e.0[var]
                )));
            }
            ne.0[var] = Half::ZERO;
            ne.0[target] += Half::from_twice(prod / 2);
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Dense coefficients in `s = v^{1/2}`, lowest first, with the shift.
    fn to_univariate(&self, slot: usize) -> (i64, Vec<BigRational>) {
        let lo = self.min_exps().0[slot].twice();
        let hi = self.max_exps().0[slot].twice();
        let mut v = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e.0[slot].twice() - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    fn from_univariate(slot: usize, shift: i64, coeffs: &[BigRational]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (PExp::var(slot, Half::from_twice(shift + i as i64)), c.clone())),
        )
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !a.is_one() || e.is_zero() {
                factors.push(a.to_string());
            }
            for (slot, name) in VAR_NAMES.iter().enumerate() {
                let x = e.0[slot];
                if x.is_zero() {
                } else if x == Half::ONE {
                    factors.push(name.to_string());
                } else if x.is_integer() {
                    factors.push(format!("{name}^{x}"));
                } else {
                    factors.push(format!("{name}^({x})"));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Product skipping the gcd normalization when both factors are integers.
fn rat_mul(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_integer() && b.is_integer() {
        BigRational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

fn poly_gcd(a: Vec<BigRational>, b: Vec<BigRational>) -> Vec<BigRational> {
    fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        // a mod b
        let lb = b.last().unwrap().clone();
        while a.len() >= b.len() && !a.is_empty() {
            let c = a.last().unwrap() / &lb;
            let off = a.len() - b.len();
            for (i, bc) in b.iter().enumerate() {
                a[off + i] -= &c * bc;
            }
            a = trim(a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(l) = a.last().cloned() {
        for c in &mut a {
            *c /= &l;
        }
    }
    a
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f)
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f)
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, o: &ParamPoly) -> ParamPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.clone());
        }
        r
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, o: &ParamPoly) -> ParamPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, -c.clone());
        }
        r
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, o: &ParamPoly) -> ParamPoly {
        let mut r = ParamPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(e1.add(*e2), rat_mul(c1, c2));
            }
        }
        r
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

/// A fraction `num / den` of parameter polynomials.
///
/// Normalized so that `den` is monic with minimal exponents zero, and
/// `den = 1` whenever the division is exact. Equality is decided by
/// cross-multiplication, so no canonical reduced form is required.
#[derive(Clone)]
pub struct ParamScalar {
    num: ParamPoly,
    den: ParamPoly,
}

impl ParamScalar {
    pub fn zero() -> Self {
        Self { num: ParamPoly::zero(), den: ParamPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(ParamPoly::one())
    }

    pub fn from_poly(num: ParamPoly) -> Self {
        Self { num, den: ParamPoly::one() }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(c: BigRational) -> Self {
        Self::from_poly(ParamPoly::constant(c))
    }

    /// `c · q^a t^b ql^c`.
    pub fn monomial(e: PExp, c: BigRational) -> Self {
        Self::from_poly(ParamPoly::monomial(e, c))
    }

    pub fn var_pow(slot: usize, e: Half) -> Self {
        Self::monomial(PExp::var(slot, e), BigRational::one())
    }

    pub fn q() -> Self {
        Self::var_pow(Q, Half::ONE)
    }

    pub fn t() -> Self {
        Self::var_pow(T, Half::ONE)
    }

    pub fn ql() -> Self {
        Self::var_pow(QL, Half::ONE)
    }

    pub fn new(num: ParamPoly, den: ParamPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        let mut s = Self { num, den };
        s.normalize();
        Ok(s)
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &ParamPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `Some((exponents, coefficient))` for a single-term polynomial.
    pub fn as_monomial(&self) -> Option<(PExp, &BigRational)> {
        if self.den.is_one() {
            self.num.as_monomial()
        } else {
            None
        }
    }

    pub fn involves(&self, slot: usize) -> bool {
        self.num.involves(slot) || self.den.involves(slot)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = ParamPoly::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        if let Some((e, c)) = self.den.as_monomial() {
            let inv = c.recip();
            self.num = self.num.mul_monomial(e.neg()).scale(&inv);
            self.den = ParamPoly::one();
            return;
        }
        let (_, lc) = self.den.leading().unwrap();
        let inv = lc.recip();
        let m = self.den.min_exps().neg();
        self.den = self.den.mul_monomial(m).scale(&inv);
        self.num = self.num.mul_monomial(m).scale(&inv);
        if let Some(qt) = self.num.div_exact(&self.den) {
            self.num = qt;
            self.den = ParamPoly::one();
            return;
        }
        self.reduce_univariate();
    }

    /// Full reduction when only one parameter occurs (e.g. after `q = t^{κ/2}`).
    fn reduce_univariate(&mut self) {
        let vn = self.num.support_vars();
        let vd = self.den.support_vars();
        let used: Vec<usize> = (0..3).filter(|&i| vn[i] || vd[i]).collect();
        if used.len() != 1 {
            return;
        }
        let slot = used[0];
        let (_, a) = self.num.to_univariate(slot);
        let (_, b) = self.den.to_univariate(slot);
        let g = poly_gcd(a, b);
        if g.len() <= 1 {
            return;
        }
        let g = ParamPoly::from_univariate(slot, 0, &g);
        if let (Some(n), Some(d)) = (self.num.div_exact(&g), self.den.div_exact(&g)) {
            self.num = n;
            self.den = d;
            let (_, lc) = self.den.leading().unwrap();
            let inv = lc.recip();
            let m = self.den.min_exps().neg();
            self.den = self.den.mul_monomial(m).scale(&inv);
            self.num = self.num.mul_monomial(m).scale(&inv);
        }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv().expect("inverse of zero") } else { self.clone() };
        let mut r = Self::one();
        for _ in 0..k.unsigned_abs() {
            r = &r * &base;
        }
        r
    }

    /// `q ↦ q⁻¹, t ↦ t⁻¹`, rational coefficients fixed.
    pub fn bar(&self) -> Self {
        let mut s = Self { num: self.num.bar(), den: self.den.bar() };
        s.normalize();
        s
    }

    pub fn mul_monomial(&self, e: PExp) -> Self {
        if e.is_zero() {
            return self.clone();
        }
        Self { num: self.num.mul_monomial(e), den: self.den.clone() }
    }

    pub fn substitute(&self, var: usize, target: usize, ratio: Half) -> Result<Self> {
        let mut s = Self {
            num: self.num.substitute(var, target, ratio)?,
            den: self.den.substitute(var, target, ratio)?,
        };
        if s.den.is_zero() {
            return Err(Error::Specialization("denominator vanishes".into()));
        }
        s.normalize();
        Ok(s)
    }

    /// Exact division of numerator and denominator by a common factor, if possible.
    pub fn cancel(&self, f: &ParamPoly) -> Option<Self> {
        let n = self.num.div_exact(f)?;
        let d = self.den.div_exact(f)?;
        let mut s = Self { num: n, den: d };
        s.normalize();
        Some(s)
    }
}

impl Default for ParamScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for ParamScalar {
    fn eq(&self, o: &Self) -> bool {
        if self.den.is_one() && o.den.is_one() {
            return self.num == o.num;
        }
        &self.num * &o.den == &o.num * &self.den
    }
}

impl Eq for ParamScalar {}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let wrap = |p: &ParamPoly| {
                if p.len() > 1 {
                    format!("({p})")
                } else {
                    p.to_string()
                }
            };
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &ParamScalar {
    type Output = ParamScalar;
    fn add(self, o: &ParamScalar) -> ParamScalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return ParamScalar::from_poly(&self.num + &o.num);
        }
        if self.den == o.den {
            let mut s = ParamScalar { num: &self.num + &o.num, den: self.den.clone() };
            s.normalize();
            return s;
        }
        let mut s = ParamScalar {
            num: &(&self.num * &o.den) + &(&o.num * &self.den),
            den: &self.den * &o.den,
        };
        s.normalize();
        s
    }
}

impl ParamScalar {
    /// `self += o` (or `self −= o` when `negate`), in place when both are polynomials.
    pub fn accumulate(&mut self, o: &ParamScalar, negate: bool) {
        if o.is_zero() {
            return;
        }
        if self.den.is_one() && o.den.is_one() {
            for (e, c) in &o.num.terms {
                self.num.add_term(*e, if negate { -c.clone() } else { c.clone() });
            }
            return;
        }
        *self = if negate { &*self - o } else { &*self + o };
    }
}

impl std::ops::AddAssign<&ParamScalar> for ParamScalar {
    fn add_assign(&mut self, o: &ParamScalar) {
        self.accumulate(o, false);
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &ParamScalar {
    type Output = ParamScalar;
    fn sub(self, o: &ParamScalar) -> ParamScalar {
        self + &(-o)
    }
}

impl Mul for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, o: &ParamScalar) -> ParamScalar {
        if self.is_zero() || o.is_zero() {
            return ParamScalar::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return ParamScalar::from_poly(&self.num * &o.num);
        }
        let mut s = ParamScalar { num: &self.num * &o.num, den: &self.den * &o.den };
        s.normalize();
        s
    }
}

impl Div for &ParamScalar {
    type Output = ParamScalar;
    fn div(self, o: &ParamScalar) -> ParamScalar {
        self * &o.inv().expect("division by zero scalar")
    }
}

macro_rules! owned_ops {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t { (&self).$m(&o) }
        }
    )*};
}
owned_ops!(ParamPoly, Add add, Sub sub, Mul mul);
owned_ops!(ParamScalar, Add add, Sub sub, Mul mul, Div div);

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> ParamScalar {
        ParamScalar::q()
    }

    #[test]
    fn exact_division_cancels() {
        // (q^2 - q^-2) / (q - q^-1) = q + q^-1
        let a = &q().pow(2) - &q().pow(-2);
        let b = &q() - &q().inv().unwrap();
        let c = &a / &b;
        assert!(c.is_polynomial());
        assert_eq!(c, &q() + &q().pow(-1));
    }

    #[test]
    fn non_exact_fraction_keeps_denominator() {
        let one = ParamScalar::one();
        let c = &one / &(&q() - &one);
        assert!(!c.is_polynomial());
        assert_eq!(&c * &(&q() - &one), one);
    }

    #[test]
    fn univariate_gcd_reduces() {
        let t = ParamScalar::t();
        let one = ParamScalar::one();
        // (t^2 - 1)/(t^2 + t - 2) = (t + 1)/(t + 2)
        let n = &(&t * &t) - &one;
        let d = &(&(&t * &t) + &t) - &ParamScalar::int(2);
        let c = &n / &d;
        assert_eq!(c.den().len(), 2);
        assert_eq!(c, &(&t + &one) / &(&t + &ParamScalar::int(2)));
    }

    #[test]
    fn zero_is_unique() {
        let z = &q() - &q();
        assert!(z.is_zero());
        assert!(z.den().is_one());
    }

    #[test]
    fn bar_inverts_parameters() {
        let x = &q() * &ParamScalar::t().pow(2);
        assert_eq!(x.bar().to_string(), "q^-1*t^-2");
        assert_eq!(x.bar().bar(), x);
    }

    #[test]
    fn substitution_to_half_powers() {
        let x = q().pow(3);
        let s = x.substitute(Q, T, Half::from_twice(1)).unwrap();
        assert_eq!(s.to_string(), "t^(3/2)");
    }

    #[test]
    fn display_format() {
        let x = &(&q().pow(2) - &q().pow(-2)) + &ParamScalar::int(3);
        assert_eq!(x.to_string(), "q^2 + 3 - q^-2");
    }
}
