//! The Hecke-Clifford algebra HC_n in the normal form `Σ a · T_σ C_I`.
//!
//! Products are computed by right multiplication with single generators.
//! `C_I` is the ordered product `c_{i_1} ⋯ c_{i_k}` with `i_1 < ⋯ < i_k`.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::combinatorics::{w_gamma, Composition, Perm};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    T(usize),
    C(usize),
}

impl Generator {
    pub fn check(&self, n: usize) -> Result<()> {
        let ok = match *self {
            Generator::T(i) => i >= 1 && i < n,
            Generator::C(k) => k >= 1 && k <= n,
        };
        if ok {
            Ok(())
        } else {
            let index = match *self {
                Generator::T(i) | Generator::C(i) => i,
            };
            Err(Error::IndexOutOfRange { index, n })
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::T(i) => write!(f, "T{i}"),
            Generator::C(k) => write!(f, "c{k}"),
        }
    }
}

/// `T_σ C_I`, with bit `k-1` of `cliff` standing for `c_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisTerm {
    pub perm: Perm,
    pub cliff: u32,
}

impl BasisTerm {
    pub fn new(perm: Perm, cliff: u32) -> Self {
        BasisTerm { perm, cliff }
    }

    pub fn identity(n: usize) -> Self {
        BasisTerm::new(Perm::identity(n), 0)
    }

    pub fn is_odd(&self) -> bool {
        self.cliff.count_ones() % 2 == 1
    }

    /// Clifford indices in increasing order (1-based).
    pub fn cliff_indices(&self) -> Vec<usize> {
        bits(self.cliff)
    }
}

pub(crate) fn bits(mut s: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(s.count_ones() as usize);
    while s != 0 {
        let k = s.trailing_zeros() as usize;
        out.push(k + 1);
        s &= s - 1;
    }
    out
}

/// `C_I · c_j = sign · C_{I △ {j}}`; returns `(sign_negative, new set)`.
fn cliff_times_c(set: u32, j: usize) -> (bool, u32) {
    let above = set >> j;
    (above.count_ones() % 2 == 1, set ^ (1 << (j - 1)))
}

/// Product `C_I · C_J` as `(sign_negative, I △ J)`.
pub(crate) fn cliff_product(a: u32, b: u32) -> (bool, u32) {
    let mut neg = false;
    let mut s = a;
    for j in bits(b) {
        let (ng, t) = cliff_times_c(s, j);
        neg ^= ng;
        s = t;
    }
    (neg, s)
}

fn bump(map: &mut BTreeMap<BasisTerm, Scalar>, key: BasisTerm, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Element of HC_n: a sparse map from basis terms to nonzero scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    n: usize,
    terms: BTreeMap<BasisTerm, Scalar>,
}

impl Element {
    pub fn zero(n: usize) -> Self {
        Element {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Element::from_term(n, BasisTerm::identity(n), Scalar::one())
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        Element::from_term(n, BasisTerm::identity(n), c)
    }

    pub fn from_term(n: usize, t: BasisTerm, c: Scalar) -> Self {
        let mut e = Element::zero(n);
        bump(&mut e.terms, t, c);
        e
    }

    /// `T_σ`.
    pub fn t_perm(perm: Perm) -> Self {
        Element::from_term(perm.n(), BasisTerm::new(perm, 0), Scalar::one())
    }

    /// `C_I` for an increasing or arbitrary list of distinct indices; the
    /// product is taken in the order given.
    pub fn clifford(n: usize, indices: &[usize]) -> Result<Self> {
        let mut e = Element::one(n);
        for &k in indices {
            Generator::C(k).check(n)?;
            e = e.mul_c(k);
        }
        Ok(e)
    }

    pub fn generator(n: usize, g: Generator) -> Result<Self> {
        Element::from_word(n, &[g], Scalar::one())
    }

    /// Normal form of `coeff · g_1 g_2 ⋯ g_k`.
    pub fn from_word(n: usize, word: &[Generator], coeff: Scalar) -> Result<Self> {
        for g in word {
            g.check(n)?;
        }
        let mut e = Element::scalar(n, coeff);
        for g in word {
            e = e.mul_gen(*g);
        }
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> btree_map::Iter<'_, BasisTerm, Scalar> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &BasisTerm) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff every term has an even Clifford part.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|t| !t.is_odd())
    }

    pub fn even_part(&self) -> Element {
        Element {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| !t.is_odd())
                .map(|(t, c)| (*t, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(self.n);
        }
        Element {
            n: self.n,
            terms: self.terms.iter().map(|(t, a)| (*t, a * c)).collect(),
        }
    }

    pub fn add_term(&mut self, t: BasisTerm, c: Scalar) {
        bump(&mut self.terms, t, c);
    }

    pub fn mul_gen(&self, g: Generator) -> Element {
        match g {
            Generator::T(i) => self.mul_t(i),
            Generator::C(k) => self.mul_c(k),
        }
    }

    /// `self · c_j`.
    pub fn mul_c(&self, j: usize) -> Element {
        let mut out = BTreeMap::new();
        for (t, a) in &self.terms {
            let (neg, s) = cliff_times_c(t.cliff, j);
            let c = if neg { -a } else { a.clone() };
            bump(&mut out, BasisTerm::new(t.perm, s), c);
        }
        Element { n: self.n, terms: out }
    }

    /// `self · C_J`.
    pub fn mul_cliff(&self, set: u32) -> Element {
        if set == 0 {
            return self.clone();
        }
        let mut out = BTreeMap::new();
        for (t, a) in &self.terms {
            let (neg, s) = cliff_product(t.cliff, set);
            let c = if neg { -a } else { a.clone() };
            bump(&mut out, BasisTerm::new(t.perm, s), c);
        }
        Element { n: self.n, terms: out }
    }

    /// `self · T_i`.
    pub fn mul_t(&self, i: usize) -> Element {
        let vm1 = Scalar::v_poly(&[-1, 1]);
        let v = Scalar::v();
        let mut out = BTreeMap::new();
        let lo = 1u32 << (i - 1);
        let hi = 1u32 << i;
        for (t, a) in &self.terms {
            // C_I = L · M · R with M ⊆ {c_i, c_{i+1}}; T_i commutes with L, R.
            let rest = t.cliff & !(lo | hi);
            // C_I T_i = Σ T_i C_X · x  +  Σ C_Y · y  (X, Y subsets of {i, i+1})
            let (with_t, without_t): (Vec<(u32, Scalar)>, Vec<(u32, Scalar)>) =
                match (t.cliff & lo != 0, t.cliff & hi != 0) {
                    (false, false) => (vec![(0, Scalar::one())], vec![]),
                    (false, true) => (vec![(lo, Scalar::one())], vec![]),
                    (true, false) => (
                        vec![(hi, Scalar::one())],
                        vec![(hi, -&vm1), (lo, vm1.clone())],
                    ),
                    (true, true) => (
                        vec![(lo | hi, Scalar::from_int(-1))],
                        vec![(lo | hi, vm1.clone()), (0, vm1.clone())],
                    ),
                };
            let asc = t.perm.right_ascent(i);
            let sp = t.perm.mul_simple_right(i);
            for (x, c) in with_t {
                let ac = a * &c;
                let set = rest | x;
                if asc {
                    bump(&mut out, BasisTerm::new(sp, set), ac);
                } else {
                    bump(&mut out, BasisTerm::new(t.perm, set), &ac * &vm1);
                    bump(&mut out, BasisTerm::new(sp, set), &ac * &v);
                }
            }
            for (y, c) in without_t {
                bump(&mut out, BasisTerm::new(t.perm, rest | y), a * &c);
            }
        }
        Element { n: self.n, terms: out }
    }

    /// `self · T_σ` via the lexicographically smallest reduced word of σ.
    pub fn mul_t_perm(&self, p: &Perm) -> Element {
        let mut e = self.clone();
        for i in p.reduced_word() {
            e = e.mul_t(i);
        }
        e
    }

    pub fn multiply(&self, o: &Element) -> Result<Element> {
        if self.n != o.n {
            return Err(Error::RankMismatch(self.n, o.n));
        }
        let mut out = Element::zero(self.n);
        let mut by_perm: BTreeMap<Perm, Vec<(u32, &Scalar)>> = BTreeMap::new();
        for (t, c) in &o.terms {
            by_perm.entry(t.perm).or_default().push((t.cliff, c));
        }
        for (p, cl) in by_perm {
            let at = self.mul_t_perm(&p);
            for (set, c) in cl {
                let part = at.mul_cliff(set);
                for (t, a) in part.terms {
                    bump(&mut out.terms, t, &a * c);
                }
            }
        }
        Ok(out)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Element {
        let mut out = Element::zero(self.n);
        for (t, c) in &self.terms {
            bump(&mut out.terms, *t, f(c));
        }
        out
    }
}

/// `T_{w_μ}` as a single basis term.
pub fn build_t_w(mu: &Composition) -> Element {
    Element::t_perm(w_gamma(mu).0)
}

/// Inverse of the ordered Clifford word `c_{i_1} ⋯ c_{i_k}` (distinct indices).
pub fn clifford_inverse(n: usize, indices: &[usize]) -> Result<Element> {
    let rev: Vec<usize> = indices.iter().rev().copied().collect();
    Element::clifford(n, &rev)
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mut gens: Vec<String> =
                t.perm.reduced_word().iter().map(|i| format!("T{i}")).collect();
            gens.extend(bits(t.cliff).iter().map(|k| format!("c{k}")));
            if gens.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", gens.join(" "))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[n={}]({self})", self.n)
    }
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, o: &Element) -> Element {
        assert_eq!(self.n, o.n, "rank mismatch");
        let mut out = self.clone();
        for (t, c) in &o.terms {
            bump(&mut out.terms, *t, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, o: &Element) -> Element {
        assert_eq!(self.n, o.n, "rank mismatch");
        let mut out = self.clone();
        for (t, c) in &o.terms {
            bump(&mut out.terms, *t, -c);
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.map_coeffs(|c| -c)
    }
}

/// Panics on rank mismatch; use [`Element::multiply`] for a checked product.
impl<'a> Mul<&'a Element> for &'a Element {
    type Output = Element;
    fn mul(self, o: &Element) -> Element {
        self.multiply(o).expect("rank mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::{C, T};

    fn w(n: usize, g: &[Generator]) -> Element {
        Element::from_word(n, g, Scalar::one()).unwrap()
    }

    fn vm1() -> Scalar {
        Scalar::v_poly(&[-1, 1])
    }

    #[test]
    fn quadratic_relation() {
        let lhs = w(2, &[T(1), T(1)]);
        let rhs = &w(2, &[T(1)]).scale(&vm1()) + &Element::scalar(2, Scalar::v());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn t_past_c() {
        let e = w(2, &[T(1), C(1)]);
        let (t, c) = e.terms().next().unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!((t.perm.one_line(), t.cliff, c.clone()), (vec![2, 1], 0b01, Scalar::one()));
        assert_eq!(e, w(2, &[C(2), T(1)]));
        let lhs = w(2, &[T(1), C(2)]);
        let rhs = &(&w(2, &[C(1), T(1)]) + &w(2, &[C(2)]).scale(&vm1())) - &w(2, &[C(1)]).scale(&vm1());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn clifford_signs() {
        assert_eq!(w(2, &[C(1), C(1)]), Element::one(2));
        let e = w(2, &[C(2), C(1)]);
        assert_eq!(e, -&w(2, &[C(1), C(2)]));
        assert_eq!(e.coeff(&BasisTerm::new(Perm::identity(2), 0b11)), Scalar::from_int(-1));
    }

    #[test]
    fn braid() {
        assert!((&w(3, &[T(1), T(2), T(1)]) - &w(3, &[T(2), T(1), T(2)])).is_zero());
    }

    #[test]
    fn t_w_builders() {
        assert_eq!(build_t_w(&Composition::new(vec![1, 1, 1]).unwrap()), Element::one(3));
        let e = build_t_w(&Composition::new(vec![4]).unwrap());
        assert_eq!(e, w(4, &[T(1), T(2), T(3)]));
        let e = build_t_w(&Composition::new(vec![2, 2]).unwrap());
        assert_eq!(e, w(4, &[T(1), T(3)]));
    }

    #[test]
    fn clifford_inverses() {
        for idx in [&[1][..], &[1, 2], &[1, 2, 3, 4], &[2, 4, 5]] {
            let c = Element::clifford(5, idx).unwrap();
            assert_eq!(&c * &clifford_inverse(5, idx).unwrap(), Element::one(5));
        }
        assert_eq!(clifford_inverse(2, &[1, 2]).unwrap(), -&w(2, &[C(1), C(2)]));
        assert_eq!(clifford_inverse(4, &[1, 2, 3, 4]).unwrap(), w(4, &[C(1), C(2), C(3), C(4)]));
    }

    #[test]
    fn checked_multiply_rank() {
        assert_eq!(Element::one(2).multiply(&Element::one(3)), Err(Error::RankMismatch(2, 3)));
        assert!(Element::from_word(2, &[T(2)], Scalar::one()).is_err());
        assert!(Element::from_word(2, &[C(3)], Scalar::one()).is_err());
    }
}
