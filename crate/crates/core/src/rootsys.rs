//! Finite root systems, Weyl groups and coweights.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::half::Half;

pub type Rat = Rational64;
pub type Vector = Vec<Rat>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

pub fn ints(v: &[i64]) -> Vector {
    v.iter().map(|&x| rat(x)).collect()
}

/// `e_i` (1-based) in dimension `n`.
pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![rat(0); n];
    v[i - 1] = rat(1);
    v
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rat], c: Rat) -> Vector {
    a.iter().map(|x| x * c).collect()
}

pub fn neg(a: &[Rat]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn to_halves(a: &[Rat]) -> Vec<Half> {
    a.iter().map(|&x| Half::from_rational(x)).collect()
}

pub fn fmt_vec(a: &[Rat]) -> String {
    let parts: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// `(x, r^V) = 2(x, r)/(r, r)`.
pub fn coroot_pairing(x: &[Rat], r: &[Rat]) -> Rat {
    dot(x, r) * rat(2) / dot(r, r)
}

/// `w_r(x) = x − (x, r^V) r`.
pub fn reflect_vec(r: &[Rat], x: &[Rat]) -> Vector {
    sub(x, &scale(r, coroot_pairing(x, r)))
}

/// Coefficients `c` with `Σ c_i basis_i = x`, if `x` lies in the span.
pub fn solve_in_basis(basis: &[Vector], x: &[Rat]) -> Option<Vector> {
    let rows = x.len();
    let cols = basis.len();
    let mut m: Vec<Vector> =
        (0..rows).map(|i| (0..cols).map(|j| basis[j][i]).chain([x[i]]).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let lead = m[r][c];
        for v in m[r].iter_mut() {
            *v /= lead;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..=cols {
                    let d = m[r][j] * f;
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut sol = vec![rat(0); cols];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = m[i][cols];
    }
    Some(sol)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "G" | "G2" => Ok(Family::G),
            _ => Err(Error::UnsupportedRootSystem { family: s.to_string(), rank: 0 }),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LengthClass {
    Short,
    Long,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub coords: Vector,
    pub length_class: LengthClass,
}

impl Root {
    pub fn halves(&self) -> Vec<Half> {
        to_halves(&self.coords)
    }

    pub fn norm2(&self) -> Rat {
        dot(&self.coords, &self.coords)
    }

    pub fn coroot(&self) -> Vector {
        scale(&self.coords, rat(2) / self.norm2())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_vec(&self.coords))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Lattice {
    Coroot,
    Coweight,
    Ambient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    pub coords: Vector,
    pub lattice: Lattice,
}

impl Weight {
    pub fn ambient(coords: Vector) -> Weight {
        Weight { coords, lattice: Lattice::Ambient }
    }
}

/// A finite (reduced) root system in explicit ambient coordinates.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    pub ambient_dim: usize,
    pub simple_roots: Vec<Root>,
    /// Sorted by height, then by descending lexicographic coordinates.
    pub positive_roots: Vec<Root>,
    pub highest_root: Root,
    pub braid_orders: Vec<Vec<u32>>,
    /// Distinct parameters for long and short roots.
    pub unequal_params: bool,
    root_set: BTreeSet<Vector>,
    positive_set: BTreeSet<Vector>,
}

pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let unsupported = || Error::UnsupportedRootSystem { family: family.to_string(), rank };
    let n = rank;
    let chain = |dim: usize, k: usize| -> Vec<Vector> {
        (1..=k).map(|i| sub(&unit(dim, i), &unit(dim, i + 1))).collect()
    };
    let simple: Vec<Vector> = match family {
        Family::A if n >= 1 => chain(n + 1, n),
        Family::B if n >= 2 => {
            let mut s = chain(n, n - 1);
            s.push(unit(n, n));
            s
        }
        Family::C if n >= 2 => {
            let mut s = chain(n, n - 1);
            s.push(scale(&unit(n, n), rat(2)));
            s
        }
        Family::D if n >= 3 => {
            let mut s = chain(n, n - 1);
            s.push(add(&unit(n, n - 1), &unit(n, n)));
            s
        }
        Family::G if n == 2 => vec![ints(&[1, -1, 0]), ints(&[-2, 1, 1])],
        _ => return Err(unsupported()),
    };
    Ok(RootSystem::from_simple(family, simple))
}

impl RootSystem {
    /// Two orthogonal copies of A1, realized as D2 with roots ±e1 ± e2.
    pub fn a1_times_a1() -> RootSystem {
        RootSystem::from_simple(Family::D, vec![ints(&[1, -1]), ints(&[1, 1])])
    }

    fn from_simple(family: Family, simple: Vec<Vector>) -> RootSystem {
        let dim = simple[0].len();
        let mut all: BTreeSet<Vector> = simple.iter().cloned().collect();
        let mut queue: VecDeque<Vector> = simple.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for s in &simple {
                let y = reflect_vec(s, &x);
                if all.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let max_norm = all.iter().map(|r| dot(r, r)).max().unwrap();
        let laced = all.iter().all(|r| dot(r, r) == max_norm);
        let class = |r: &Vector| {
            if laced || dot(r, r) == max_norm {
                LengthClass::Long
            } else {
                LengthClass::Short
            }
        };
        let mk = |r: &Vector| Root { coords: r.clone(), length_class: class(r) };
        let mut positive: Vec<(i64, std::cmp::Reverse<Vector>)> = all
            .iter()
            .filter_map(|r| {
                let c = solve_in_basis(&simple, r).expect("root outside the simple span");
                (c.iter().all(|x| !x.is_negative()))
                    .then(|| (c.iter().sum::<Rat>().to_integer(), std::cmp::Reverse(r.clone())))
            })
            .collect();
        positive.sort();
        let positive_roots: Vec<Root> = positive.iter().map(|(_, r)| mk(&r.0)).collect();
        let highest_root = positive_roots.last().unwrap().clone();
        let rank = simple.len();
        let braid_orders = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        if i == j {
                            return 1;
                        }
                        let (a, b) = (&simple[i], &simple[j]);
                        let c = dot(a, b) * dot(a, b) / (dot(a, a) * dot(b, b));
                        match (c * rat(4)).to_integer() {
                            0 => 2,
                            1 => 3,
                            2 => 4,
                            3 => 6,
                            _ => unreachable!("not a crystallographic angle"),
                        }
                    })
                    .collect()
            })
            .collect();
        RootSystem {
            family,
            rank,
            ambient_dim: dim,
            simple_roots: simple.iter().map(mk).collect(),
            positive_set: positive.iter().map(|(_, r)| r.0.clone()).collect(),
            positive_roots,
            highest_root,
            braid_orders,
            unequal_params: false,
            root_set: all,
        }
    }

    pub fn with_unequal_params(mut self) -> RootSystem {
        self.unequal_params = true;
        self
    }

    pub fn is_simply_laced(&self) -> bool {
        self.positive_roots.iter().all(|r| r.norm2() == self.highest_root.norm2())
    }

    /// Label of the Hecke parameter attached to a root.
    pub fn param_label(&self, r: &[Rat]) -> &'static str {
        if self.unequal_params && !self.is_simply_laced() && dot(r, r) == self.highest_root.norm2()
        {
            "ql"
        } else {
            "q"
        }
    }

    pub fn is_root(&self, r: &[Rat]) -> bool {
        self.root_set.contains(r)
    }

    pub fn is_positive(&self, r: &[Rat]) -> bool {
        self.positive_set.contains(r)
    }

    pub fn root(&self, r: &[Rat]) -> Result<Root> {
        if !self.is_root(r) {
            return Err(Error::NotARoot(fmt_vec(r)));
        }
        let max = self.highest_root.norm2();
        let laced = self.is_simply_laced();
        Ok(Root {
            coords: r.to_vec(),
            length_class: if laced || dot(r, r) == max { LengthClass::Long } else { LengthClass::Short },
        })
    }

    pub fn roots(&self) -> impl Iterator<Item = &Vector> {
        self.root_set.iter()
    }

    /// Coefficients of `x` in the basis of simple roots (if in their span).
    pub fn simple_coords(&self, x: &[Rat]) -> Option<Vector> {
        let basis: Vec<Vector> = self.simple_roots.iter().map(|r| r.coords.clone()).collect();
        solve_in_basis(&basis, x)
    }

    /// Simple-root indices of each irreducible component.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp: Vec<usize> = (0..self.rank).collect();
        fn find(c: &mut Vec<usize>, i: usize) -> usize {
            if c[i] != i {
                let r = find(c, c[i]);
                c[i] = r;
            }
            c[i]
        }
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                if !dot(&self.simple_roots[i].coords, &self.simple_roots[j].coords).is_zero() {
                    let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                    comp[a] = b;
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.rank {
            let r = find(&mut comp, i);
            groups.entry(r).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    pub fn is_irreducible(&self) -> bool {
        self.components().len() == 1
    }

    /// Highest root of each irreducible component, in [`Self::components`] order.
    pub fn component_highest_roots(&self) -> Vec<Root> {
        self.components()
            .iter()
            .map(|c| {
                self.positive_roots
                    .iter()
                    .rfind(|r| {
                        let k = self.simple_coords(&r.coords).unwrap();
                        k.iter().enumerate().all(|(i, x)| x.is_zero() || c.contains(&i))
                    })
                    .unwrap()
                    .clone()
            })
            .collect()
    }

    /// Coefficient `n_i` of `α_i` in the highest root of its component.
    pub fn highest_root_coeffs(&self) -> Vec<i64> {
        let mut out = vec![0; self.rank];
        for (c, h) in self.components().iter().zip(self.component_highest_roots()) {
            let k = self.simple_coords(&h.coords).unwrap();
            for &i in c {
                out[i] = k[i].to_integer();
            }
        }
        out
    }

    /// Fundamental coweights `ω_i` with `(ω_i, α_j) = δ_ij`.
    ///
    /// Type A uses the GL representatives `e_1 + … + e_i`; the other types
    /// are solved inside the span of the roots.
    pub fn fundamental_coweights(&self) -> Vec<Weight> {
        let n = self.ambient_dim;
        if self.family == Family::A {
            return (1..=self.rank)
                .map(|i| Weight {
                    coords: (0..n).map(|k| rat((k < i) as i64)).collect(),
                    lattice: Lattice::Coweight,
                })
                .collect();
        }
        let basis: Vec<Vector> = self.simple_roots.iter().map(|r| r.coords.clone()).collect();
        (0..self.rank)
            .map(|i| {
                // ω = Σ c_j α_j with (ω, α_k) = δ_ik: solve the Gram system.
                let gram: Vec<Vector> = (0..self.rank)
                    .map(|j| (0..self.rank).map(|k| dot(&basis[j], &basis[k])).collect())
                    .collect();
                let target: Vector = (0..self.rank).map(|k| rat((k == i) as i64)).collect();
                let c = solve_in_basis(&gram, &target).expect("degenerate Gram matrix");
                let mut w = vec![rat(0); n];
                for (j, cj) in c.iter().enumerate() {
                    w = add(&w, &scale(&basis[j], *cj));
                }
                Weight { coords: w, lattice: Lattice::Coweight }
            })
            .collect()
    }

    /// Fundamental weights `ϖ_i` with `(ϖ_i, α_j^V) = δ_ij` (GL representatives in type A).
    pub fn fundamental_weights(&self) -> Vec<Weight> {
        if self.family == Family::A {
            return self
                .fundamental_coweights()
                .into_iter()
                .map(|w| Weight { coords: w.coords, lattice: Lattice::Ambient })
                .collect();
        }
        let basis: Vec<Vector> = self.simple_roots.iter().map(|r| r.coords.clone()).collect();
        let coroots: Vec<Vector> = self.simple_roots.iter().map(|r| r.coroot()).collect();
        (0..self.rank)
            .map(|i| {
                // Column j holds the pairings of α_j with every simple coroot.
                let gram: Vec<Vector> = (0..self.rank)
                    .map(|j| (0..self.rank).map(|k| dot(&basis[j], &coroots[k])).collect())
                    .collect();
                let target: Vector = (0..self.rank).map(|k| rat((k == i) as i64)).collect();
                let c = solve_in_basis(&gram, &target).expect("degenerate Cartan matrix");
                let mut w = vec![rat(0); self.ambient_dim];
                for (j, cj) in c.iter().enumerate() {
                    w = add(&w, &scale(&basis[j], *cj));
                }
                Weight { coords: w, lattice: Lattice::Ambient }
            })
            .collect()
    }

    pub fn is_coweight(&self, x: &[Rat]) -> bool {
        self.positive_roots.iter().all(|r| dot(x, &r.coords).is_integer())
    }

    pub fn is_coroot_lattice(&self, x: &[Rat]) -> bool {
        let basis: Vec<Vector> = self.simple_roots.iter().map(|r| r.coroot()).collect();
        solve_in_basis(&basis, x).is_some_and(|c| c.iter().all(|v| v.is_integer()))
    }

    pub fn is_dominant(&self, x: &[Rat]) -> bool {
        self.simple_roots.iter().all(|r| !dot(x, &r.coords).is_negative())
    }

    /// `{0}` together with the dominant coweights pairing to at most 1 with
    /// every component's highest root (sums over components when reducible).
    pub fn minuscule_weights(&self) -> Vec<Weight> {
        let zero = vec![rat(0); self.ambient_dim];
        let fw = self.fundamental_coweights();
        let n = self.highest_root_coeffs();
        let mut out = vec![zero];
        for c in self.components() {
            let choices: Vec<&Weight> = c.iter().filter(|&&i| n[i] == 1).map(|&i| &fw[i]).collect();
            let mut next = out.clone();
            for base in &out {
                for w in &choices {
                    next.push(add(base, &w.coords));
                }
            }
            out = next;
        }
        out.into_iter().map(|coords| Weight { coords, lattice: Lattice::Coweight }).collect()
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let r = &self.simple_roots[i].coords;
        let n = self.ambient_dim;
        let cr = self.simple_roots[i].coroot();
        let matrix = (0..n)
            .map(|a| (0..n).map(|b| rat((a == b) as i64) - r[a] * cr[b]).collect())
            .collect();
        WeylElement { word: vec![i], matrix }
    }

    /// All elements, each with a reduced word (breadth-first from the identity).
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        let mut seen: HashMap<Vec<Vector>, usize> = HashMap::new();
        let id = WeylElement::identity(self.ambient_dim);
        seen.insert(id.matrix.clone(), 0);
        let mut elems = vec![id];
        let gens: Vec<WeylElement> = (0..self.rank).map(|i| self.simple_reflection(i)).collect();
        let mut head = 0;
        while head < elems.len() {
            let w = elems[head].clone();
            head += 1;
            for g in &gens {
                let sw = g.compose(&w);
                if !seen.contains_key(&sw.matrix) {
                    seen.insert(sw.matrix.clone(), elems.len());
                    elems.push(sw);
                }
            }
        }
        elems
    }

    /// Number of positive roots sent to negative roots.
    pub fn weyl_length(&self, w: &WeylElement) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| !self.is_positive(&w.apply(&r.coords)))
            .count()
    }

    /// Reduced word by peeling off right descents: while `w(α_i) < 0`, `w ← w s_i`.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut cur = w.clone();
        let mut rev = Vec::new();
        'outer: loop {
            for i in 0..self.rank {
                if !self.is_positive(&cur.apply(&self.simple_roots[i].coords)) {
                    cur = cur.compose(&self.simple_reflection(i));
                    rev.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        rev.reverse();
        rev
    }

    pub fn longest_element(&self) -> WeylElement {
        let g = self.weyl_group();
        
        g.into_iter().max_by_key(|w| w.word.len()).unwrap()
    }

    /// Canonical text: family, rank, simple roots as rational tuples.
    pub fn canonical_text(&self) -> String {
        let simple: Vec<String> = self.simple_roots.iter().map(|r| fmt_vec(&r.coords)).collect();
        format!("{}{} simple: {}", self.family, self.rank, simple.join(" "))
    }
}

/// `w_r(x)`, checking that `r` is a root.
pub fn reflect(rs: &RootSystem, r: &[Rat], x: &Weight) -> Result<Weight> {
    if is_zero(r) || !rs.is_root(r) {
        return Err(Error::NotARoot(fmt_vec(r)));
    }
    Ok(Weight { coords: reflect_vec(r, &x.coords), lattice: x.lattice })
}

/// `(x, r^V)`.
pub fn pairing(x: &[Rat], r: &Root) -> Rat {
    coroot_pairing(x, &r.coords)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    /// Simple-reflection indices, leftmost first: `w = s_{word[0]} s_{word[1]} ⋯`.
    pub word: Vec<usize>,
    pub matrix: Vec<Vector>,
}

impl WeylElement {
    pub fn identity(n: usize) -> WeylElement {
        WeylElement {
            word: vec![],
            matrix: (0..n).map(|i| (0..n).map(|j| rat((i == j) as i64)).collect()).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, x)| *x == rat((i == j) as i64))
        })
    }

    pub fn apply(&self, x: &[Rat]) -> Vector {
        self.matrix.iter().map(|row| dot(row, x)).collect()
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &WeylElement) -> WeylElement {
        let n = self.matrix.len();
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| self.matrix[i][k] * o.matrix[k][j]).sum()).collect())
            .collect();
        let mut word = self.word.clone();
        word.extend(&o.word);
        WeylElement { word, matrix }
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.matrix.len();
        WeylElement {
            word: self.word.iter().rev().cloned().collect(),
            matrix: (0..n).map(|i| (0..n).map(|j| self.matrix[j][i]).collect()).collect(),
        }
    }

    pub fn is_orthogonal(&self) -> bool {
        let t = self.inverse();
        self.compose(&t).is_identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_roots() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let pos: Vec<Vector> = rs.positive_roots.iter().map(|r| r.coords.clone()).collect();
        assert_eq!(pos, vec![ints(&[1, -1, 0]), ints(&[0, 1, -1]), ints(&[1, 0, -1])]);
        assert_eq!(rs.highest_root.coords, ints(&[1, 0, -1]));
        assert_eq!(rs.braid_orders[0][1], 3);
    }

    #[test]
    fn b2_reflection() {
        let rs = build_root_system(Family::B, 2).unwrap();
        let x = reflect(&rs, &ints(&[0, 1]), &Weight::ambient(ints(&[1, 1]))).unwrap();
        assert_eq!(x.coords, ints(&[1, -1]));
        assert_eq!(rs.braid_orders[0][1], 4);
        assert!(reflect(&rs, &ints(&[1, 2]), &Weight::ambient(ints(&[1, 1]))).is_err());
    }

    #[test]
    fn g2_counts() {
        let rs = build_root_system(Family::G, 2).unwrap();
        assert_eq!(rs.positive_roots.len(), 6);
        assert_eq!(rs.braid_orders[0][1], 6);
        assert_eq!(rs.weyl_group().len(), 12);
    }

    #[test]
    fn pairings() {
        let a = build_root_system(Family::A, 1).unwrap();
        let r = &a.simple_roots[0];
        assert_eq!(pairing(&r.coords, r), rat(2));
        assert_eq!(pairing(&ints(&[1, 0]), r), rat(1));
        let b = build_root_system(Family::B, 2).unwrap();
        assert_eq!(pairing(&ints(&[1, 0]), &b.simple_roots[1]), rat(0));
    }

    #[test]
    fn lengths() {
        let rs = build_root_system(Family::A, 2).unwrap();
        assert_eq!(rs.weyl_length(&WeylElement::identity(3)), 0);
        assert_eq!(rs.weyl_length(&rs.simple_reflection(1)), 1);
        assert_eq!(rs.weyl_length(&rs.longest_element()), 3);
    }

    #[test]
    fn dominance() {
        let rs = build_root_system(Family::A, 2).unwrap();
        assert!(rs.is_dominant(&ints(&[0, 0, 0])));
        assert!(rs.is_dominant(&ints(&[1, 0, 0])));
        assert!(!rs.is_dominant(&ints(&[-1, 1, 0])));
    }

    #[test]
    fn minuscule_counts() {
        let count = |f, n| build_root_system(f, n).unwrap().minuscule_weights().len() - 1;
        assert_eq!(count(Family::A, 2), 2);
        assert_eq!(count(Family::B, 2), 1);
        assert_eq!(count(Family::D, 4), 3);
    }

    #[test]
    fn unsupported_pairs() {
        assert!(build_root_system(Family::D, 2).is_err());
        assert!(build_root_system(Family::G, 3).is_err());
        assert!(build_root_system(Family::B, 1).is_err());
        assert!(Family::parse("Z").is_err());
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn system() -> impl Strategy<Value = RootSystem> {
        prop::sample::select(vec![(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::G, 2)])
            .prop_map(|(f, n)| build_root_system(f, n).unwrap())
    }

    /// A system with a random Weyl element (product of simple reflections).
    fn with_element() -> impl Strategy<Value = (RootSystem, WeylElement)> {
        system().prop_flat_map(|rs| {
            let r = rs.rank;
            (Just(rs), prop::collection::vec(0..r, 0..8))
        })
        .prop_map(|(rs, word)| {
            let mut w = WeylElement::identity(rs.ambient_dim);
            for i in word {
                w = w.compose(&rs.simple_reflection(i));
            }
            (rs, w)
        })
    }

    fn vector(dim: usize) -> impl Strategy<Value = Vector> {
        prop::collection::vec((-3i64..=3, 1i64..=2).prop_map(|(a, b)| Rat::new(a, b)), dim)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn reflections_are_involutions((rs, x) in system().prop_flat_map(|rs| { let d = rs.ambient_dim; (Just(rs), vector(d)) })) {
            for r in rs.roots() {
                prop_assert_eq!(reflect_vec(r, &reflect_vec(r, &x)), x.clone());
            }
        }

        #[test]
        fn weyl_group_is_orthogonal_and_closes_roots((rs, w) in with_element()) {
            let roots: Vec<Vector> = rs.roots().cloned().collect();
            for a in &roots {
                prop_assert!(rs.is_root(&w.apply(a)));
                for b in &roots {
                    prop_assert_eq!(dot(&w.apply(a), &w.apply(b)), dot(a, b));
                }
            }
        }

        #[test]
        fn length_matches_reduced_word_and_inversions((rs, w) in with_element()) {
            let len = rs.weyl_length(&w);
            prop_assert_eq!(rs.reduced_word(&w).len(), len);
            let flipped = rs.positive_roots.iter().filter(|r| !rs.is_positive(&w.apply(&r.coords))).count();
            prop_assert_eq!(flipped, len);
            let inv = w.inverse();
            prop_assert!(w.compose(&inv).is_identity());
            prop_assert_eq!(rs.weyl_length(&inv), len);
        }
    }
}
