//! Partitions, compositions, permutations of `[n]` and shifted diagrams.

use std::fmt;

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
///
/// The derived order is lexicographic on parts; enumeration and all table
/// layouts use the reverse of it, so `(3) , (2,1) , (1,1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionKind {
    All,
    Strict,
    Odd,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(join(&parts)));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    pub fn is_kind(&self, kind: PartitionKind) -> bool {
        match kind {
            PartitionKind::All => true,
            PartitionKind::Strict => self.is_strict(),
            PartitionKind::Odd => self.is_odd(),
        }
    }

    /// 0 if the length is even, 1 if odd.
    pub fn delta(&self) -> usize {
        self.len() % 2
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.0.first().copied().unwrap_or(0);
        Partition((1..=w).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// The exponent vector padded with zeros to `m` entries.
    pub fn padded(&self, m: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(m.max(v.len()), 0);
        v
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

pub(crate) fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let mut pos = 0;
    s.split(',')
        .map(|t| {
            let here = pos;
            pos += t.len() + 1;
            t.trim().parse::<usize>().map_err(|_| Error::Parse {
                pos: here,
                msg: format!("expected a nonnegative integer, found '{t}'"),
            })
        })
        .collect()
}

/// All partitions of `n` of the given kind, in reverse lexicographic order.
pub fn enumerate(n: usize, kind: PartitionKind) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, kind: PartitionKind, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            if kind == PartitionKind::Odd && p % 2 == 0 {
                continue;
            }
            cur.push(p);
            let next_max = if kind == PartitionKind::Strict { p - 1 } else { p };
            rec(rem - p, next_max, kind, cur, out);
            cur.pop();
        }
    }
    rec(n, n, kind, &mut cur, &mut out);
    out
}

/// Sequence of positive integers in a given order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidShape(join(&parts)));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Half-open position ranges `[start, end)` (0-based) of the blocks.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut s = 0;
        self.0
            .iter()
            .map(|&p| {
                let b = (s, s + p);
                s += p;
                b
            })
            .collect()
    }

    pub fn sort_to_partition(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

impl std::str::FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_list(s)?)
    }
}

/// All compositions of `n` (positive parts).
pub fn compositions(n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rem == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 1..=rem {
            cur.push(p);
            rec(rem - p, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut cur, &mut out);
    out
}

/// Weak compositions of `n` into exactly `m` nonnegative parts.
pub fn weak_compositions(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(rem: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for p in (0..=rem).rev() {
            cur.push(p);
            rec(rem - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    if m == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, m, &mut cur, &mut out);
    out
}

pub const MAX_RANK: usize = 16;

/// Permutation of `[n]` in one-line notation (stored 0-based).
///
/// Products compose as functions: `(a * b)(k) = a(b(k))`, so the simple
/// transposition product `s_1 s_2` is the cycle `(1,2,3)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    img: [u8; MAX_RANK],
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_RANK, "rank {n} exceeds {MAX_RANK}");
        let mut img = [0u8; MAX_RANK];
        for (k, x) in img.iter_mut().enumerate().take(n) {
            *x = k as u8;
        }
        Perm { n: n as u8, img }
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(v: &[usize]) -> Result<Self> {
        let n = v.len();
        if n > MAX_RANK {
            return Err(Error::InvalidShape(join(v)));
        }
        let mut seen = [false; MAX_RANK];
        let mut img = [0u8; MAX_RANK];
        for (k, &x) in v.iter().enumerate() {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidShape(join(v)));
            }
            seen[x - 1] = true;
            img[k] = (x - 1) as u8;
        }
        Ok(Perm { n: n as u8, img })
    }

    /// Product of simple transpositions `s_{w_1} s_{w_2} ...` (1-based indices).
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut p = Perm::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            p = p.mul_simple_right(i);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Image of `k` (1-based in and out).
    pub fn apply(&self, k: usize) -> usize {
        self.img[k - 1] as usize + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        (1..=self.n()).map(|k| self.apply(k)).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n()).all(|k| self.img[k] as usize == k)
    }

    pub fn inverse(&self) -> Perm {
        let mut img = [0u8; MAX_RANK];
        for k in 0..self.n() {
            img[self.img[k] as usize] = k as u8;
        }
        Perm { n: self.n, img }
    }

    pub fn compose(&self, o: &Perm) -> Perm {
        let mut img = [0u8; MAX_RANK];
        for (k, x) in img.iter_mut().enumerate().take(self.n()) {
            *x = self.img[o.img[k] as usize];
        }
        Perm { n: self.n, img }
    }

    /// `self * s_i`: swaps positions `i, i+1` of the one-line word.
    pub fn mul_simple_right(&self, i: usize) -> Perm {
        let mut p = *self;
        p.img.swap(i - 1, i);
        p
    }

    /// `s_i * self`: swaps the values `i, i+1`.
    pub fn mul_simple_left(&self, i: usize) -> Perm {
        let mut p = *self;
        for x in p.img.iter_mut().take(self.n()) {
            if *x as usize == i - 1 {
                *x = i as u8;
            } else if *x as usize == i {
                *x = (i - 1) as u8;
            }
        }
        p
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut c = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.img[a] > self.img[b] {
                    c += 1;
                }
            }
        }
        c
    }

    /// `ℓ(self * s_i) > ℓ(self)`.
    pub fn right_ascent(&self, i: usize) -> bool {
        self.img[i - 1] < self.img[i]
    }

    /// `ℓ(s_i * self) < ℓ(self)`.
    pub fn left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.img[i - 1] > inv.img[i]
    }

    /// Lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.length());
        let mut p = *self;
        'outer: while !p.is_identity() {
            for i in 1..p.n() {
                if p.left_descent(i) {
                    w.push(i);
                    p = p.mul_simple_left(i);
                    continue 'outer;
                }
            }
            unreachable!("non-identity permutation without a descent");
        }
        w
    }

    /// Every reduced word, in lexicographic order.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(p: Perm, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if p.is_identity() {
                out.push(cur.clone());
                return;
            }
            for i in 1..p.n() {
                if p.left_descent(i) {
                    cur.push(i);
                    rec(p.mul_simple_left(i), cur, out);
                    cur.pop();
                }
            }
        }
        rec(*self, &mut cur, &mut out);
        out
    }

    /// Cycle type as a partition.
    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                k = self.img[k] as usize;
                len += 1;
            }
            parts.push(len);
        }
        Partition::from_unsorted(parts)
    }

    /// If `self = w_γ` for some composition `γ`, returns it.
    pub fn as_w_gamma(&self) -> Option<Composition> {
        let mut parts = Vec::new();
        let mut start = 0;
        for k in 0..self.n() {
            let img = self.img[k] as usize;
            if img == k + 1 {
                continue;
            }
            if img != start {
                return None;
            }
            parts.push(k + 1 - start);
            start = k + 1;
        }
        Some(Composition(parts))
    }

    /// All permutations of `[n]` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Perm::from_one_line(&cur).unwrap());
            // next permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join(&self.one_line()))
    }
}

/// `w_γ` with its unique reduced word `(s_1…s_{γ1-1})(s_{γ1+1}…)…`.
pub fn w_gamma(gamma: &Composition) -> (Perm, Vec<usize>) {
    let n = gamma.size();
    let mut word = Vec::with_capacity(n - gamma.len());
    for (s, e) in gamma.blocks() {
        // 1-based generators s+1 .. e-1
        word.extend(s + 1..e);
    }
    let p = Perm::from_word(n, &word).expect("indices in range");
    (p, word)
}

/// Shifted diagram data for a strict partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedData {
    pub lambda: Partition,
    /// Row-wise hook lengths `h*` of the cells of `λ*`.
    pub hooks: Vec<Vec<usize>>,
    /// Row-wise contents `j - i` of the cells of `λ*`.
    pub contents: Vec<Vec<usize>>,
    /// The double partition `λ̃`.
    pub double: Partition,
    pub n_lambda: usize,
    pub delta: usize,
}

impl ShiftedData {
    pub fn hook_multiset(&self) -> Vec<usize> {
        self.hooks.iter().flatten().copied().collect()
    }

    pub fn content_multiset(&self) -> Vec<usize> {
        self.contents.iter().flatten().copied().collect()
    }

    pub fn hook_product(&self) -> u128 {
        self.hooks.iter().flatten().map(|&h| h as u128).product()
    }
}

pub fn shifted_data(lambda: &Partition) -> Result<ShiftedData> {
    if !lambda.is_strict() {
        return Err(Error::NotStrict(lambda.to_string()));
    }
    let l = lambda.len();
    let parts = lambda.parts();
    // λ̃ = (λ_1,…,λ_ℓ | λ_1-1,…,λ_ℓ-1): row i (1-based, i ≤ ℓ) spans columns
    // 1..=i+λ_i; below the diagonal, column j carries λ_j - 1 cells.
    let mut rows: Vec<usize> = Vec::new();
    for i in 1..=l {
        let arm_end = i + parts[i - 1];
        // cells strictly left of the diagonal in row i come from columns j < i
        // whose leg reaches row i: j + (λ_j - 1) >= i
        rows.push(arm_end);
        debug_assert!((1..i).all(|j| j + parts[j - 1] - 1 >= i));
    }
    let mut r = l + 1;
    loop {
        let len = (1..=l).filter(|&j| j + parts[j - 1] - 1 >= r).count();
        if len == 0 {
            break;
        }
        rows.push(len);
        r += 1;
    }
    let double = Partition::new(rows).expect("double diagram is a partition");
    let cols = double.conjugate();
    let hook = |i: usize, j: usize| double.parts()[i - 1] - j + cols.parts()[j - 1] - i + 1;
    let mut hooks = Vec::with_capacity(l);
    let mut contents = Vec::with_capacity(l);
    for i in 1..=l {
        // λ* row i occupies columns i..=λ_i+i-1; cell (i, j) ↦ λ̃ cell (i, j+1).
        let cols_i = i..=parts[i - 1] + i - 1;
        hooks.push(cols_i.clone().map(|j| hook(i, j + 1)).collect());
        contents.push(cols_i.map(|j| j - i).collect());
    }
    Ok(ShiftedData {
        lambda: lambda.clone(),
        hooks,
        contents,
        double,
        n_lambda: lambda.n_statistic(),
        delta: lambda.delta(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate(3, PartitionKind::Strict), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(enumerate(3, PartitionKind::Odd), vec![p(&[3]), p(&[1, 1, 1])]);
        assert_eq!(enumerate(4, PartitionKind::Strict).len(), 2);
        assert_eq!(enumerate(4, PartitionKind::Odd).len(), 2);
        assert_eq!(enumerate(0, PartitionKind::All), vec![p(&[])]);
    }

    #[test]
    fn strict_and_odd_are_equinumerous() {
        for n in 0..=10 {
            assert_eq!(
                enumerate(n, PartitionKind::Strict).len(),
                enumerate(n, PartitionKind::Odd).len(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        let all = enumerate(7, PartitionKind::All);
        assert_eq!(all.len(), 15);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn w_gamma_words() {
        let (perm, word) = w_gamma(&Composition::new(vec![4]).unwrap());
        assert_eq!(word, vec![1, 2, 3]);
        assert_eq!(perm.one_line(), vec![2, 3, 4, 1]);
        let (perm, word) = w_gamma(&Composition::new(vec![1, 1, 1]).unwrap());
        assert!(perm.is_identity() && word.is_empty());
        let (perm, word) = w_gamma(&Composition::new(vec![2, 1]).unwrap());
        assert_eq!((perm.one_line(), word.clone(), perm.length()), (vec![2, 1, 3], vec![1], 1));
        let (perm, word) = w_gamma(&Composition::new(vec![2, 2]).unwrap());
        assert_eq!((perm.one_line(), word), (vec![2, 1, 4, 3], vec![1, 3]));
    }

    #[test]
    fn w_gamma_length_and_recognition() {
        for n in 1..=6 {
            for g in compositions(n) {
                let (perm, word) = w_gamma(&g);
                assert_eq!(perm.length(), n - g.len());
                assert_eq!(word.len(), perm.length());
                assert_eq!(perm.as_w_gamma(), Some(g.clone()));
                assert_eq!(perm.cycle_type(), g.sort_to_partition());
            }
        }
        // exactly the permutations with σ(k) ≤ k+1
        let hits = Perm::all(5).into_iter().filter(|p| p.as_w_gamma().is_some()).count();
        assert_eq!(hits, compositions(5).len());
    }

    #[test]
    fn reduced_words_are_reduced() {
        for p in Perm::all(5) {
            let w = p.reduced_word();
            assert_eq!(w.len(), p.length());
            assert_eq!(Perm::from_word(5, &w).unwrap(), p);
            let all = p.all_reduced_words();
            assert_eq!(all[0], w);
            assert!(all.iter().all(|x| Perm::from_word(5, x).unwrap() == p));
        }
    }

    #[test]
    fn example_permutation_word() {
        // (2,3)(1,4) = s2 s1 s3 s2 s3 s1
        let p = Perm::from_word(4, &[2, 1, 3, 2, 3, 1]).unwrap();
        assert_eq!(p.one_line(), vec![4, 3, 2, 1]);
        assert_eq!(p.length(), 6);
    }

    #[test]
    fn sorting_compositions() {
        let c = |v: &[usize]| Composition::new(v.to_vec()).unwrap();
        assert_eq!(c(&[1, 2]).sort_to_partition(), p(&[2, 1]));
        assert_eq!(c(&[3, 1, 3]).sort_to_partition(), p(&[3, 3, 1]));
        assert_eq!(c(&[5]).sort_to_partition(), p(&[5]));
    }

    #[test]
    fn shifted_431() {
        let d = shifted_data(&p(&[4, 3, 1])).unwrap();
        assert_eq!(d.hooks, vec![vec![7, 5, 4, 2], vec![4, 3, 1], vec![1]]);
        assert_eq!(d.contents, vec![vec![0, 1, 2, 3], vec![0, 1, 2], vec![0]]);
        assert_eq!(d.double, p(&[5, 5, 4, 2]));
        assert_eq!(d.hook_product(), 3360);
        assert_eq!(d.n_lambda, 5);
    }

    #[test]
    fn shifted_small() {
        let d = shifted_data(&p(&[2])).unwrap();
        assert_eq!(d.double, p(&[3, 1]));
        assert_eq!((d.hooks, d.contents, d.n_lambda), (vec![vec![2, 1]], vec![vec![0, 1]], 0));
        let d = shifted_data(&p(&[1])).unwrap();
        assert_eq!((d.double, d.hooks, d.contents), (p(&[2]), vec![vec![1]], vec![vec![0]]));
        assert!(matches!(shifted_data(&p(&[2, 2])), Err(Error::NotStrict(_))));
    }

    #[test]
    fn shifted_cell_counts() {
        for n in 1..=9 {
            for l in enumerate(n, PartitionKind::Strict) {
                let d = shifted_data(&l).unwrap();
                assert_eq!(d.hook_multiset().len(), n);
                assert!(d.hook_multiset().iter().all(|&h| h > 0));
                assert_eq!(d.double.size(), 2 * n);
            }
        }
    }
}
