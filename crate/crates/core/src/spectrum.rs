//! Type-A spectral theory of the Cherednik operators `S_j`.
//!
//! Compositions of a fixed degree are ordered by dominance of their
//! partitions; inside one orbit the order is the transitive closure of the
//! off-diagonal support of the `S_j` themselves, computed once per
//! `(n, degree)` and cached.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::half::Half;
use crate::heckerep::{cherednik_type_a, compositions, PolyOperator};
use crate::laurent::{scalar_to_json, LaurentPoly, Mono};
use crate::param::{ParamPoly, ParamScalar, Q, T};
use crate::rootsys::Rat;

pub type Composition = Vec<u32>;

pub fn partition_of(k: &[u32]) -> Vec<u32> {
    let mut p = k.to_vec();
    p.sort_by(|a, b| b.cmp(a));
    p
}

pub fn degree(k: &[u32]) -> u32 {
    k.iter().sum()
}

fn mono(k: &[u32]) -> Mono {
    Mono::from_ints(&k.iter().map(|&x| x as i64).collect::<Vec<_>>())
}

fn from_mono(m: &Mono) -> Option<Composition> {
    m.to_ints()?.iter().map(|&x| u32::try_from(x).ok()).collect()
}

/// `λ ≤ μ` in dominance order (same size, padded).
pub fn dominated(lambda: &[u32], mu: &[u32]) -> bool {
    let (mut a, mut b) = (0i64, 0i64);
    for i in 0..lambda.len().max(mu.len()) {
        a += *lambda.get(i).unwrap_or(&0) as i64;
        b += *mu.get(i).unwrap_or(&0) as i64;
        if a > b {
            return false;
        }
    }
    true
}

/// Distinct rearrangements of `p` into `n` slots, canonical monomial order.
pub fn orbit(n: usize, p: &[u32]) -> Vec<Composition> {
    let mut base: Vec<u32> = p.to_vec();
    base.resize(n, 0);
    let mut out: BTreeSet<Composition> = BTreeSet::new();
    permute(&mut base, 0, &mut out);
    let mut v: Vec<Composition> = out.into_iter().collect();
    v.sort_by_key(|a| mono(a));
    v
}

fn permute(v: &mut Vec<u32>, i: usize, out: &mut BTreeSet<Composition>) {
    if i == v.len() {
        out.insert(v.clone());
        return;
    }
    for j in i..v.len() {
        v.swap(i, j);
        permute(v, i + 1, out);
        v.swap(i, j);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectralCmp {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// The spectral order on compositions of one degree in `n` variables.
#[derive(Debug)]
pub struct SpectralOrder {
    pub n: usize,
    pub degree: u32,
    /// `below[k]` = compositions strictly below `k` inside its orbit.
    below: HashMap<Composition, BTreeSet<Composition>>,
    /// Images `S_j z^k`, j = 1..n.
    images: Vec<HashMap<Composition, LaurentPoly>>,
}

impl SpectralOrder {
    pub fn build(n: usize, degree: u32) -> Result<SpectralOrder> {
        let basis = compositions(n, degree);
        let ops: Vec<PolyOperator> = (1..=n).map(|j| cherednik_type_a(n, j)).collect::<Result<_>>()?;
        let images: Vec<HashMap<Composition, LaurentPoly>> = ops
            .iter()
            .map(|op| basis.iter().map(|k| (k.clone(), op.apply(&LaurentPoly::monomial(mono(k))))).collect())
            .collect();
        let mut below: HashMap<Composition, BTreeSet<Composition>> =
            basis.iter().map(|k| (k.clone(), BTreeSet::new())).collect();
        for img in &images {
            for (k, p) in img {
                for (m, _) in p.terms() {
                    let k2 = from_mono(m).ok_or_else(|| Error::WordInvariant(format!("S_j left the polynomials: {m}")))?;
                    if k2 != *k && partition_of(&k2) == partition_of(k) {
                        below.get_mut(k).unwrap().insert(k2);
                    }
                }
            }
        }
        // Transitive closure.
        loop {
            let mut changed = false;
            for k in &basis {
                let cur: Vec<Composition> = below[k].iter().cloned().collect();
                for k2 in cur {
                    let extra: Vec<Composition> = below[&k2].iter().cloned().collect();
                    let set = below.get_mut(k).unwrap();
                    for e in extra {
                        changed |= set.insert(e);
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if let Some(k) = basis.iter().find(|k| below[*k].contains(*k)) {
            return Err(Error::Triangularity { row: k.clone(), col: k.clone() });
        }
        Ok(SpectralOrder { n, degree, below, images })
    }

    /// Shared instance for `(n, degree)`.
    pub fn cached(n: usize, degree: u32) -> Result<Arc<SpectralOrder>> {
        static CACHE: OnceLock<Mutex<HashMap<(usize, u32), Arc<SpectralOrder>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(o) = cache.lock().unwrap().get(&(n, degree)) {
            return Ok(o.clone());
        }
        let o = Arc::new(SpectralOrder::build(n, degree)?);
        cache.lock().unwrap().insert((n, degree), o.clone());
        Ok(o)
    }

    pub fn compare(&self, k1: &[u32], k2: &[u32]) -> SpectralCmp {
        if k1 == k2 {
            return SpectralCmp::Equal;
        }
        let (p1, p2) = (partition_of(k1), partition_of(k2));
        if p1 == p2 {
            if self.below[k2].contains(k1) {
                SpectralCmp::Less
            } else if self.below[k1].contains(k2) {
                SpectralCmp::Greater
            } else {
                SpectralCmp::Incomparable
            }
        } else if dominated(&p1, &p2) {
            SpectralCmp::Less
        } else if dominated(&p2, &p1) {
            SpectralCmp::Greater
        } else {
            SpectralCmp::Incomparable
        }
    }

    pub fn leq(&self, k1: &[u32], k2: &[u32]) -> bool {
        matches!(self.compare(k1, k2), SpectralCmp::Less | SpectralCmp::Equal)
    }

    /// Linear extension: repeatedly take the smallest minimal element in the
    /// canonical monomial order.
    pub fn linear_extension(&self) -> Vec<Composition> {
        let mut left = compositions(self.n, self.degree);
        left.sort_by_key(|a| mono(a));
        let mut out = Vec::new();
        while !left.is_empty() {
            let pos = left
                .iter()
                .position(|k| !left.iter().any(|o| self.compare(o, k) == SpectralCmp::Less))
                .expect("the order is acyclic");
            out.push(left.remove(pos));
        }
        out
    }

    /// `S_j z^k` (j is 1-based).
    pub fn image(&self, j: usize, k: &[u32]) -> &LaurentPoly {
        &self.images[j - 1][k]
    }
}

/// Compare two compositions of the same degree.
pub fn order_leq(k1: &[u32], k2: &[u32]) -> Result<SpectralCmp> {
    if k1.len() != k2.len() {
        return Err(Error::DimensionMismatch { expected: k1.len(), found: k2.len() });
    }
    if degree(k1) != degree(k2) {
        return Err(Error::DegreeMismatch(degree(k1) as usize, degree(k2) as usize));
    }
    Ok(SpectralOrder::cached(k1.len(), degree(k1))?.compare(k1, k2))
}

/// A matrix over the degree-`d` compositions: `entries[row][col]` is the
/// coefficient of `z^{basis[row]}` in `op z^{basis[col]}`.
#[derive(Clone, Debug)]
pub struct SpectralMatrix {
    pub basis: Vec<Composition>,
    pub entries: Vec<Vec<ParamScalar>>,
}

impl SpectralMatrix {
    /// Every nonzero entry must sit at `row ≤ col` in the spectral order.
    pub fn check_triangular(&self, order: &SpectralOrder) -> Result<()> {
        for (c, col) in self.basis.iter().enumerate() {
            for (r, row) in self.basis.iter().enumerate() {
                if !self.entries[r][c].is_zero() && !order.leq(row, col) {
                    return Err(Error::Triangularity { row: row.clone(), col: col.clone() });
                }
            }
        }
        Ok(())
    }

    pub fn diagonal(&self) -> Vec<ParamScalar> {
        (0..self.basis.len()).map(|i| self.entries[i][i].clone()).collect()
    }
}

/// Matrix of a degree-preserving operator in the linear-extension basis.
pub fn matrix_of(op: &PolyOperator, d: u32, n: usize) -> Result<SpectralMatrix> {
    let order = SpectralOrder::cached(n, d)?;
    let basis = order.linear_extension();
    let index: HashMap<&Composition, usize> = basis.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut entries = vec![vec![ParamScalar::zero(); basis.len()]; basis.len()];
    for (c, k) in basis.iter().enumerate() {
        let img = op.apply(&LaurentPoly::monomial(mono(k)));
        for (m, coeff) in img.terms() {
            let k2 = from_mono(m).filter(|k2| index.contains_key(k2)).ok_or_else(|| {
                Error::Usage(format!("operator does not preserve degree-{d} polynomials ({m})"))
            })?;
            entries[index[&k2]][c] = coeff.clone();
        }
    }
    Ok(SpectralMatrix { basis, entries })
}

/// `t^{k_j} q^{n+1−2j}`, j = 1..n.
pub fn expected_multiplet(k: &[u32]) -> Vec<ParamScalar> {
    let n = k.len() as i64;
    (1..=n)
        .map(|j| {
            &ParamScalar::t().pow(k[j as usize - 1] as i64) * &ParamScalar::q().pow(n + 1 - 2 * j)
        })
        .collect()
}

/// Diagonal entries of `S_1, …, S_n` at `z^k`.
pub fn eigen_multiplet(k: &[u32]) -> Result<Vec<ParamScalar>> {
    let order = SpectralOrder::cached(k.len(), degree(k))?;
    Ok((1..=k.len()).map(|j| order.image(j, k).coeff(&mono(k))).collect())
}

/// Sort key for multisets of monomial eigenvalues.
pub fn multiset_key(v: &[ParamScalar]) -> Vec<String> {
    let mut s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    s.sort();
    s
}

/// Elementary symmetric functions `e_1, …, e_n`.
pub fn elementary_symmetric(v: &[ParamScalar]) -> Vec<ParamScalar> {
    let mut e = vec![ParamScalar::one()];
    for x in v {
        let mut next = e.clone();
        next.push(ParamScalar::zero());
        for l in 1..next.len() {
            next[l] = &e.get(l).cloned().unwrap_or_default() + &(&e[l - 1] * x);
        }
        e = next;
    }
    e.remove(0);
    e
}

/// `K_j` with `λ_j = t^{K_j}` after `q = t^{β/2}`.
pub fn momenta(multiplet: &[ParamScalar], beta: Rat) -> Option<Vec<Rat>> {
    multiplet
        .iter()
        .map(|x| {
            let (e, _) = x.as_monomial()?;
            Some(e.0[T].to_rational() + e.0[Q].to_rational() * beta / Rat::from(2))
        })
        .collect()
}

/// Specialization of the coefficients: `q = t^{κ/2}`.
#[derive(Clone, Copy, Debug)]
pub struct Specialization {
    pub kappa: u32,
}

impl Specialization {
    pub fn scalar(&self, c: &ParamScalar) -> Result<ParamScalar> {
        c.substitute(Q, T, Half::from_twice(self.kappa as i64))
    }

    pub fn poly(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        p.map_coeffs(|c| self.scalar(c))
    }
}

#[derive(Clone, Debug)]
pub struct SpectralRecord {
    pub composition: Composition,
    pub multiplet: Vec<ParamScalar>,
    pub eigenfunction: LaurentPoly,
    pub hamiltonian_values: Vec<ParamScalar>,
}

impl SpectralRecord {
    pub fn to_json(&self) -> Value {
        json!({
            "composition": self.composition,
            "multiplet": self.multiplet.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "hamiltonian_values": self.hamiltonian_values.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "eigenfunction": self.eigenfunction.to_json(),
            "eigenfunction_text": self.eigenfunction.to_string(),
            "multiplet_exact": self.multiplet.iter().map(scalar_to_json).collect::<Vec<_>>(),
        })
    }

    /// `S_j E = λ_j E` for all j by direct operator application.
    pub fn verify(&self) -> Result<bool> {
        let n = self.composition.len();
        for j in 1..=n {
            let s = cherednik_type_a(n, j)?;
            if s.apply(&self.eigenfunction) != self.eigenfunction.scale(&self.multiplet[j - 1]) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Joint eigenfunction `E_k = z^k + Σ_{k' < k} c_{k'} z^{k'}` by the projector
/// `Π_{k'<k} (S_{j(k')} − λ_{j(k')}(k'))` applied to `z^k`, optionally after
/// specializing the parameters.
pub fn eigenfunction_with(k: &[u32], spec: Option<Specialization>) -> Result<SpectralRecord> {
    let n = k.len();
    let order = SpectralOrder::cached(n, degree(k))?;
    let sp = |c: &ParamScalar| -> Result<ParamScalar> {
        match spec {
            Some(s) => s.scalar(c),
            None => Ok(c.clone()),
        }
    };
    let images = |j: usize, k2: &[u32]| -> Result<BTreeMap<Composition, ParamScalar>> {
        order
            .image(j, k2)
            .terms()
            .map(|(m, c)| Ok((from_mono(m).unwrap(), sp(c)?)))
            .collect()
    };
    let eig = |k2: &[u32]| -> Result<Vec<ParamScalar>> {
        (1..=n).map(|j| sp(&order.image(j, k2).coeff(&mono(k2)))).collect()
    };
    let lam = eig(k)?;
    let lower: Vec<Composition> = order
        .linear_extension()
        .into_iter()
        .filter(|k2| order.compare(k2, k) == SpectralCmp::Less)
        .collect();
    let mut v: BTreeMap<Composition, ParamScalar> = BTreeMap::new();
    v.insert(k.to_vec(), ParamScalar::one());
    let mut factors: Vec<ParamScalar> = Vec::new();
    for k2 in &lower {
        let mu = eig(k2)?;
        let j = (0..n).find(|&j| mu[j] != lam[j]).ok_or_else(|| Error::Degeneracy(k.to_vec(), k2.clone()))?;
        // v ← (S_{j+1} − μ_j) v
        let mut next: BTreeMap<Composition, ParamScalar> = BTreeMap::new();
        let mut acc = |key: Composition, c: ParamScalar| {
            let e = next.entry(key).or_default();
            *e = &*e + &c;
        };
        for (kk, c) in &v {
            for (k3, a) in images(j + 1, kk)? {
                acc(k3, &a * c);
            }
            acc(kk.clone(), -&(&mu[j] * c));
        }
        next.retain(|_, c| !c.is_zero());
        v = next;
        factors.push(&lam[j] - &mu[j]);
    }
    // Cancel common binomial factors before dividing by the leading coefficient.
    let mut den = ParamScalar::one();
    for f in factors {
        let fp: Option<ParamPoly> = f.is_polynomial().then(|| f.num().clone());
        let cancelled = fp.as_ref().and_then(|fp| {
            v.iter()
                .map(|(kk, c)| c.cancel(fp).map(|x| (kk.clone(), x)))
                .collect::<Option<BTreeMap<_, _>>>()
        });
        match cancelled {
            Some(nv) => v = nv,
            None => den = &den * &f,
        }
    }
    let lead = v.get(k).cloned().unwrap_or_default();
    if lead != den {
        return Err(Error::WordInvariant(format!("projector leading coefficient {lead} != {den}")));
    }
    let mut e = LaurentPoly::zero(n);
    for (kk, c) in &v {
        e.add_term(mono(kk), c / &den);
    }
    let rec = SpectralRecord {
        composition: k.to_vec(),
        hamiltonian_values: elementary_symmetric(&lam),
        multiplet: lam,
        eigenfunction: e,
    };
    Ok(rec)
}

/// Generic-parameter eigenfunction, re-verified by direct application.
pub fn eigenfunction(k: &[u32]) -> Result<SpectralRecord> {
    let rec = eigenfunction_with(k, None)?;
    if !rec.verify()? {
        return Err(Error::WordInvariant(format!("E_{k:?} failed the eigenvalue check")));
    }
    Ok(rec)
}

/// `e_l` of the multiplet for every composition in the orbit of `partition`.
pub fn hamiltonian_spectrum(n: usize, l: usize, partition: &[u32]) -> Result<Vec<(Composition, ParamScalar)>> {
    if l == 0 || l > n {
        return Err(Error::IndexOutOfRange { index: l, max: n });
    }
    orbit(n, partition)
        .into_iter()
        .map(|k| {
            let m = eigen_multiplet(&k)?;
            Ok((k, elementary_symmetric(&m)[l - 1].clone()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> ParamScalar {
        ParamScalar::q()
    }
    fn t() -> ParamScalar {
        ParamScalar::t()
    }

    #[test]
    fn squeezing_examples() {
        assert_eq!(order_leq(&[1, 1, 0], &[2, 0, 0]).unwrap(), SpectralCmp::Less);
        assert_eq!(order_leq(&[1, 0, 1], &[1, 0, 1]).unwrap(), SpectralCmp::Equal);
        assert_ne!(order_leq(&[2, 0, 0], &[0, 0, 2]).unwrap(), SpectralCmp::Incomparable);
        assert!(order_leq(&[1, 0], &[1, 1]).is_err());
    }

    #[test]
    fn multiplets_n2() {
        assert_eq!(eigen_multiplet(&[0, 0]).unwrap(), vec![q().pow(-1), q()]);
        assert_eq!(eigen_multiplet(&[1, 0]).unwrap(), vec![&t() * &q(), q().pow(-1)]);
    }

    #[test]
    fn e10_is_monomial() {
        let r = eigenfunction(&[1, 0]).unwrap();
        assert_eq!(r.eigenfunction, LaurentPoly::z(2, 1));
        let r = eigenfunction(&[0, 1]).unwrap();
        assert_eq!(r.eigenfunction.len(), 2);
        assert_eq!(eigenfunction(&[0, 0]).unwrap().eigenfunction, LaurentPoly::one(2));
    }

    #[test]
    fn hamiltonian_values() {
        let h = hamiltonian_spectrum(2, 1, &[1, 0]).unwrap();
        for (_, v) in &h {
            assert_eq!(*v, &(&t() * &q()) + &q().pow(-1));
        }
        for (_, v) in hamiltonian_spectrum(2, 2, &[2, 1]).unwrap() {
            assert_eq!(v, t().pow(3));
        }
    }

    #[test]
    fn matrix_shapes() {
        let s1 = cherednik_type_a(2, 1).unwrap();
        let m = matrix_of(&s1, 1, 2).unwrap();
        let order = SpectralOrder::cached(2, 1).unwrap();
        m.check_triangular(&order).unwrap();
        let id = matrix_of(&PolyOperator::Identity, 2, 2).unwrap();
        for (i, row) in id.entries.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(x.is_one(), i == j);
                assert_eq!(x.is_zero(), i != j);
            }
        }
        let rs = crate::rootsys::build_root_system(crate::rootsys::Family::A, 1).unwrap();
        let g = crate::heckerep::op_g(&rs, &crate::rootsys::ints(&[1, -1])).unwrap();
        assert!(matrix_of(&g, 1, 2).unwrap().check_triangular(&order).is_err());
    }
}
