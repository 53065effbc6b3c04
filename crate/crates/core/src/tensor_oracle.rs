//! The action of HC_n on `V^{⊗n}`, `V` of super-dimension `m|m`, and the
//! weight-graded traces `tr(D · h)`.
//!
//! Basis vectors are tuples `(i_1, …, i_n)` over `{-m, …, -1, 1, …, m}`;
//! `e_k` is odd iff `k < 0`. `T_j` acts on factors `j, j+1` through the
//! explicit two-factor table for `S̄`; `c_k` acts by `Θ` on factor `k` with
//! the Koszul sign of the preceding factors. Operators are never stored as
//! matrices.

use std::collections::BTreeMap;

use rand::Rng;
use rayon::prelude::*;

use crate::characters::CharacterTable;
use crate::combinatorics::{enumerate, w_gamma, weak_compositions, Partition, PartitionKind};
use crate::error::{Error, Result};
use crate::hecke_clifford::{Element, Generator};
use crate::scalar::{Gauss, Ring, Scalar};
use crate::symfunc::{expand_in_q, SymPoly};

pub type Index = i8;

/// Sparse vector in `V^{⊗n}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TVec {
    terms: BTreeMap<Vec<Index>, Scalar>,
}

impl TVec {
    pub fn zero() -> Self {
        TVec::default()
    }

    pub fn basis(t: &[Index]) -> Self {
        let mut v = TVec::zero();
        v.add(t.to_vec(), Scalar::one());
        v
    }

    pub fn add(&mut self, t: Vec<Index>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(t) {
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

    pub fn add_scaled(&mut self, o: &TVec, c: &Scalar) {
        for (t, a) in &o.terms {
            self.add(t.clone(), a * c);
        }
    }

    pub fn coeff(&self, t: &[Index]) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Index>, &Scalar)> {
        self.terms.iter()
    }
}

/// `V^{⊗n}` with `V` of super-dimension `m|m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorSpace {
    pub m: usize,
    pub n: usize,
}

impl TensorSpace {
    pub fn new(m: usize, n: usize) -> Self {
        TensorSpace { m, n }
    }

    /// `(2m)^n`.
    pub fn dimension(&self) -> u128 {
        (2 * self.m as u128).pow(self.n as u32)
    }

    pub fn alphabet(&self) -> Vec<Index> {
        (-(self.m as Index)..=-1).chain(1..=self.m as Index).collect()
    }

    /// Basis tuples, grouped by weight.
    pub fn basis(&self) -> Vec<Vec<Index>> {
        weak_compositions(self.n, self.m).iter().flat_map(|w| weight_block(w)).collect()
    }

    pub fn apply(&self, g: Generator, x: &TVec) -> Result<TVec> {
        g.check(self.n)?;
        Ok(apply_gen(g, x))
    }

    pub fn apply_element(&self, h: &Element, x: &TVec) -> Result<TVec> {
        if h.n() != self.n {
            return Err(Error::RankMismatch(h.n(), self.n));
        }
        Ok(apply_element(h, x))
    }

    /// A vector with `support` random basis tuples and small integer
    /// coefficients.
    pub fn random_vector<R: Rng>(&self, rng: &mut R, support: usize) -> TVec {
        let alpha = self.alphabet();
        let mut x = TVec::zero();
        for _ in 0..support {
            let t: Vec<Index> = (0..self.n).map(|_| alpha[rng.gen_range(0..alpha.len())]).collect();
            x.add(t, Scalar::from_int(rng.gen_range(-3..=3)));
        }
        x
    }
}

/// Composition of absolute values: `weight[k-1] = #{j : |i_j| = k}`.
pub fn weight_of(t: &[Index], m: usize) -> Vec<usize> {
    let mut w = vec![0; m];
    for &i in t {
        w[i.unsigned_abs() as usize - 1] += 1;
    }
    w
}

fn is_odd(i: Index) -> bool {
    i < 0
}

fn sgn(i: Index) -> i64 {
    if i > 0 {
        1
    } else {
        -1
    }
}

/// `S̄(e_k ⊗ e_l)` as `(coefficient, a, b)` triples for `e_a ⊗ e_b`.
pub fn s_bar(k: Index, l: Index) -> Vec<(Scalar, Index, Index)> {
    let v = Scalar::v();
    let vm1 = Scalar::v_poly(&[-1, 1]);
    let u = Scalar::u();
    let (ak, al) = (k.abs(), l.abs());
    if k == l && k >= 1 {
        vec![(v, l, k), (vm1, -k, -l)]
    } else if k == l {
        vec![(Scalar::from_int(-1), l, k)]
    } else if k == -l && k >= 1 {
        vec![(Scalar::one(), l, k)]
    } else if k == -l {
        vec![(v, l, k), (vm1, k, l)]
    } else if ak < al && l >= 1 {
        vec![(u, l, k), (vm1.clone(), -k, -l), (vm1, k, l)]
    } else if ak < al {
        vec![(u.scale(&Gauss::from_int(sgn(k))), l, k)]
    } else if k >= 1 {
        vec![(u, l, k), (vm1.scale(&Gauss::from_int(sgn(l))), -k, -l)]
    } else {
        vec![(u.scale(&Gauss::from_int(sgn(l))), l, k), (vm1, k, l)]
    }
}

/// `Ψ(T_j)` on a vector.
pub fn apply_t(j: usize, x: &TVec) -> TVec {
    let mut out = TVec::zero();
    for (t, c) in x.terms() {
        for (d, a, b) in s_bar(t[j - 1], t[j]) {
            let mut s = t.clone();
            s[j - 1] = a;
            s[j] = b;
            out.add(s, c * &d);
        }
    }
    out
}

/// `Ψ(c_k)` on a vector: `Θ` on factor `k`, `Θ e_a = i e_{-a}`,
/// `Θ e_{-a} = -i e_a`, with sign `(-1)^{|v_1|+…+|v_{k-1}|}`.
pub fn apply_c(k: usize, x: &TVec) -> TVec {
    let i = Scalar::i();
    let mut out = TVec::zero();
    for (t, c) in x.terms() {
        let odd_before = t[..k - 1].iter().filter(|&&a| is_odd(a)).count();
        let mut coef = if t[k - 1] > 0 { i.clone() } else { -&i };
        if odd_before % 2 == 1 {
            coef = -coef;
        }
        let mut s = t.clone();
        s[k - 1] = -s[k - 1];
        out.add(s, c * &coef);
    }
    out
}

pub fn apply_gen(g: Generator, x: &TVec) -> TVec {
    match g {
        Generator::T(j) => apply_t(j, x),
        Generator::C(k) => apply_c(k, x),
    }
}

/// `Ψ(g_1 ⋯ g_k) x`, rightmost generator first.
pub fn apply_word(word: &[Generator], x: &TVec) -> TVec {
    word.iter().rev().fold(x.clone(), |acc, &g| apply_gen(g, &acc))
}

/// `Ψ(h) x`.
pub fn apply_element(h: &Element, x: &TVec) -> TVec {
    let mut out = TVec::zero();
    for (t, c) in h.terms() {
        let mut word: Vec<Generator> = t.perm.reduced_word().into_iter().map(Generator::T).collect();
        word.extend(t.cliff_indices().into_iter().map(Generator::C));
        out.add_scaled(&apply_word(&word, x), c);
    }
    out
}

/// All tuples of the given weight (absolute-value composition).
pub fn weight_block(weight: &[usize]) -> Vec<Vec<Index>> {
    let n: usize = weight.iter().sum();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut left = weight.to_vec();
    fn rec(n: usize, left: &mut Vec<usize>, cur: &mut Vec<Index>, out: &mut Vec<Vec<Index>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..left.len() {
            if left[k] == 0 {
                continue;
            }
            left[k] -= 1;
            for s in [1 as Index, -1] {
                cur.push(s * (k as Index + 1));
                rec(n, left, cur, out);
                cur.pop();
            }
            left[k] += 1;
        }
    }
    rec(n, &mut left, &mut cur, &mut out);
    out
}

/// Trace of `Ψ(h)` on the weight space of `weight` (`m` = its length).
pub fn weight_trace(h: &Element, weight: &[usize]) -> Scalar {
    weight_block(weight)
        .iter()
        .map(|t| apply_element(h, &TVec::basis(t)).coeff(t))
        .sum()
}

/// `tr(D · Ψ(h))` as a symmetric polynomial in `m` variables. Every weak
/// composition is computed and rearrangements are checked to agree.
pub fn trace_poly(h: &Element, m: usize) -> Result<SymPoly> {
    let n = h.n();
    let weights = weak_compositions(n, m);
    let traces: Vec<(Vec<usize>, Scalar)> = weights
        .par_iter()
        .map(|w| (w.clone(), weight_trace(h, w)))
        .collect();
    let mut by_shape: BTreeMap<Partition, Scalar> = BTreeMap::new();
    for (w, tr) in traces {
        let shape = Partition::from_unsorted(w.clone());
        match by_shape.get(&shape) {
            Some(prev) if *prev != tr => {
                return Err(Error::Asymmetric(crate::combinatorics::join(&w)));
            }
            Some(_) => {}
            None => {
                by_shape.insert(shape, tr);
            }
        }
    }
    if by_shape.values().any(|c| !c.is_in(Ring::Qv)) {
        return Err(Error::NotInQv);
    }
    Ok(SymPoly::from_monomials(m, n, by_shape))
}

/// Character table recomputed from traces on `V^{⊗n}` with `m = n`.
pub fn oracle_characters(n: usize) -> Result<CharacterTable> {
    let rows = enumerate(n, PartitionKind::Strict);
    let cols = enumerate(n, PartitionKind::Odd);
    let columns: Vec<Vec<Scalar>> = cols
        .par_iter()
        .map(|nu| -> Result<Vec<Scalar>> {
            let tp = trace_poly(&Element::t_perm(w_gamma(&nu.as_composition()).0), n)?;
            Ok(expand_in_q(&tp)?
                .into_iter()
                .map(|(l, c)| c.mul_pow2(((l.len() + l.delta()) / 2) as i64))
                .collect())
        })
        .collect::<Result<_>>()?;
    let entries = (0..rows.len())
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    Ok(CharacterTable { n, rows, cols, entries })
}

/// `Σ v^{f} (-1)^{g} (v-1)^{h} x_{|i_1|} ⋯ x_{|i_n|}` over weakly increasing
/// tuples, where `f`, `g`, `h` count adjacent positive repeats, negative
/// repeats and strict ascents.
pub fn statistic_sum(n: usize, m: usize) -> Result<SymPoly> {
    let alphabet: Vec<Index> = (-(m as Index)..=-1).chain(1..=m as Index).collect();
    let mut acc: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    let v = Scalar::v();
    let vm1 = Scalar::v_poly(&[-1, 1]);
    let mut cur = Vec::with_capacity(n);
    fn rec(
        start: usize,
        n: usize,
        m: usize,
        alphabet: &[Index],
        cur: &mut Vec<Index>,
        f: &mut dyn FnMut(&[Index]),
    ) {
        if cur.len() == n {
            f(cur);
            return;
        }
        for k in start..alphabet.len() {
            cur.push(alphabet[k]);
            rec(k, n, m, alphabet, cur, f);
            cur.pop();
        }
    }
    rec(0, n, m, &alphabet, &mut cur, &mut |t: &[Index]| {
        let mut c = Scalar::one();
        for w in t.windows(2) {
            if w[0] == w[1] && w[0] >= 1 {
                c *= &v;
            } else if w[0] == w[1] {
                c = -c;
            } else {
                c *= &vm1;
            }
        }
        let e = acc.entry(weight_of(t, m)).or_insert_with(Scalar::zero);
        *e += &c;
    });
    let mut by_shape: BTreeMap<Partition, Scalar> = BTreeMap::new();
    for (w, c) in acc {
        let shape = Partition::from_unsorted(w.clone());
        match by_shape.get(&shape) {
            Some(prev) if *prev != c => return Err(Error::Asymmetric(crate::combinatorics::join(&w))),
            Some(_) => {}
            None => {
                by_shape.insert(shape, c);
            }
        }
    }
    Ok(SymPoly::from_monomials(m, n, by_shape))
}
