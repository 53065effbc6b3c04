//! Symmetric polynomials in `m` variables over [`Scalar`], stored in the
//! monomial basis `m_μ`.
//!
//! A symmetric polynomial is determined by its coefficients on sorted
//! (dominant) exponent vectors, so the sparse map is keyed by partitions
//! with at most `m` parts. Products are evaluated coefficient-wise at each
//! dominant exponent.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use crate::combinatorics::{enumerate, shifted_data, Partition, PartitionKind};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    m: usize,
    degree: usize,
    coeffs: BTreeMap<Partition, Scalar>,
}

impl SymPoly {
    pub fn zero(m: usize, degree: usize) -> Self {
        SymPoly {
            m,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        let mut p = SymPoly::zero(m, 0);
        p.coeffs.insert(Partition::from_unsorted(vec![]), Scalar::one());
        p
    }

    /// `m_μ`.
    pub fn monomial(mu: &Partition, m: usize) -> Result<Self> {
        if mu.len() > m {
            return Err(Error::TooFewVariables {
                need: mu.len(),
                have: m,
            });
        }
        let mut p = SymPoly::zero(m, mu.size());
        p.coeffs.insert(mu.clone(), Scalar::one());
        Ok(p)
    }

    /// `p_r = m_{(r)}`.
    pub fn power_sum(r: usize, m: usize) -> Result<Self> {
        if r == 0 {
            return Ok(SymPoly::one(m));
        }
        SymPoly::monomial(&Partition::from_unsorted(vec![r]), m)
    }

    /// Builds from monomial coefficients, dropping monomials with more than
    /// `m` parts (they vanish in `m` variables).
    pub fn from_monomials(m: usize, degree: usize, it: impl IntoIterator<Item = (Partition, Scalar)>) -> Self {
        let mut p = SymPoly::zero(m, degree);
        for (mu, c) in it {
            assert_eq!(mu.size(), degree, "inhomogeneous term {mu}");
            if mu.len() <= m && !c.is_zero() {
                p.coeffs.insert(mu, c);
            }
        }
        p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, mu: &Partition) -> Scalar {
        self.coeffs.get(mu).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Nonzero monomial coefficients in increasing partition order.
    pub fn monomials(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.coeffs.iter()
    }

    /// Coefficient of `x^α` for an arbitrary exponent vector.
    pub fn coeff_of_exponent(&self, alpha: &[usize]) -> Scalar {
        if alpha.iter().filter(|&&a| a > 0).count() > self.m {
            return Scalar::zero();
        }
        self.coeff(&Partition::from_unsorted(alpha.to_vec()))
    }

    pub fn scale(&self, c: &Scalar) -> SymPoly {
        SymPoly::from_monomials(self.m, self.degree, self.coeffs.iter().map(|(k, a)| (k.clone(), a * c)))
    }

    fn check_same(&self, o: &SymPoly) {
        assert_eq!(self.m, o.m, "variable count mismatch");
    }

    /// Evaluates at `x_i = v^{i-1}`, `i = 1..m`.
    pub fn principal_specialization(&self) -> Scalar {
        self.coeffs
            .iter()
            .map(|(mu, c)| c * &monomial_at_geometric(mu, self.m))
            .sum()
    }

    /// `(partition string, scalar string)` pairs in reverse lexicographic order.
    pub fn to_pairs(&self) -> Vec<(String, String)> {
        self.coeffs.iter().rev().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }
}

/// `m_μ(1, v, …, v^{m-1})` as a polynomial in `v`.
fn monomial_at_geometric(mu: &Partition, m: usize) -> Scalar {
    // Count distinct arrangements of μ's parts into m slots by the total
    // weight Σ (i-1)·α_i.
    let mut parts: Vec<(usize, usize)> = Vec::new();
    for &p in mu.parts() {
        match parts.last_mut() {
            Some((q, k)) if *q == p => *k += 1,
            _ => parts.push((p, 1)),
        }
    }
    let max_w = mu.size() * m.saturating_sub(1);
    let mut counts = vec![0i64; max_w + 1];
    fn rec(slot: usize, m: usize, w: usize, parts: &mut Vec<(usize, usize)>, left: usize, counts: &mut Vec<i64>) {
        if left == 0 {
            counts[w] += 1;
            return;
        }
        if m - slot < left {
            return;
        }
        rec(slot + 1, m, w, parts, left, counts);
        for k in 0..parts.len() {
            if parts[k].1 > 0 {
                parts[k].1 -= 1;
                let p = parts[k].0;
                rec(slot + 1, m, w + slot * p, parts, left - 1, counts);
                parts[k].1 += 1;
            }
        }
    }
    let left = mu.len();
    rec(0, m, 0, &mut parts, left, &mut counts);
    Scalar::v_poly(&counts)
}

impl<'a> Add<&'a SymPoly> for &'a SymPoly {
    type Output = SymPoly;
    fn add(self, o: &SymPoly) -> SymPoly {
        self.check_same(o);
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, o.degree, "inhomogeneous sum");
        let mut out = self.coeffs.clone();
        for (k, c) in &o.coeffs {
            let e = out.entry(k.clone()).or_insert_with(Scalar::zero);
            *e += c;
        }
        SymPoly::from_monomials(self.m, self.degree, out)
    }
}

impl<'a> Sub<&'a SymPoly> for &'a SymPoly {
    type Output = SymPoly;
    fn sub(self, o: &SymPoly) -> SymPoly {
        self + &o.scale(&Scalar::from_int(-1))
    }
}

impl<'a> Mul<&'a SymPoly> for &'a SymPoly {
    type Output = SymPoly;
    fn mul(self, o: &SymPoly) -> SymPoly {
        self.check_same(o);
        let degree = self.degree + o.degree;
        if self.is_zero() || o.is_zero() {
            return SymPoly::zero(self.m, degree);
        }
        let mut out = Vec::new();
        for nu in enumerate(degree, PartitionKind::All) {
            if nu.len() > self.m {
                continue;
            }
            // Σ over α ≤ ν with |α| = deg(self) of f[α] · g[ν - α].
            let target = nu.parts().to_vec();
            let mut alpha = vec![0usize; target.len()];
            let mut acc = Scalar::zero();
            sub_vectors(&target, 0, self.degree, &mut alpha, &mut |a| {
                let fa = self.coeff(&Partition::from_unsorted(a.to_vec()));
                if fa.is_zero() {
                    return;
                }
                let rest: Vec<usize> = target.iter().zip(a).map(|(t, x)| t - x).collect();
                let gb = o.coeff(&Partition::from_unsorted(rest));
                if !gb.is_zero() {
                    acc += &(&fa * &gb);
                }
            });
            if !acc.is_zero() {
                out.push((nu, acc));
            }
        }
        SymPoly::from_monomials(self.m, degree, out)
    }
}

fn sub_vectors(target: &[usize], k: usize, left: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if k == target.len() {
        if left == 0 {
            f(cur);
        }
        return;
    }
    let remaining: usize = target[k + 1..].iter().sum();
    for a in 0..=target[k].min(left) {
        if left - a > remaining {
            continue;
        }
        cur[k] = a;
        sub_vectors(target, k + 1, left - a, cur, f);
    }
    cur[k] = 0;
}

/// `Δ_s = 2(v^s - (-1)^s)/(v+1)` for `s ≥ 1`, `Δ_0 = 1`.
pub fn delta(s: usize) -> Scalar {
    if s == 0 {
        return Scalar::one();
    }
    // v^s - (-1)^s = (v+1) Σ_{k<s} (-1)^{s-1-k} v^k
    let coeffs: Vec<i64> = (0..s).map(|k| if (s - 1 - k) % 2 == 0 { 2 } else { -2 }).collect();
    Scalar::v_poly(&coeffs)
}

pub fn delta_of(rho: &Partition) -> Scalar {
    rho.parts().iter().map(|&s| delta(s)).fold(Scalar::one(), |a, b| &a * &b)
}

/// `q_r = Σ_{ρ ⊢ r} 2^{ℓ(ρ)} m_ρ`, the coefficient of `t^r` in `∏ (1+tx_i)/(1-tx_i)`.
pub fn q_r(r: usize, m: usize) -> SymPoly {
    SymPoly::from_monomials(
        m,
        r,
        enumerate(r, PartitionKind::All)
            .into_iter()
            .map(|rho| {
                let c = Scalar::one().mul_pow2(rho.len() as i64);
                (rho, c)
            }),
    )
}

/// `g̃_r = Σ_{ρ ⊢ r} Δ_ρ (v-1)^{ℓ(ρ)-1} m_ρ`.
pub fn g_tilde_r(r: usize, m: usize) -> SymPoly {
    if r == 0 {
        return SymPoly::one(m);
    }
    let vm1 = Scalar::v_poly(&[-1, 1]);
    SymPoly::from_monomials(
        m,
        r,
        enumerate(r, PartitionKind::All).into_iter().map(|rho| {
            let c = &delta_of(&rho) * &vm1.pow(rho.len() as i64 - 1).unwrap();
            (rho, c)
        }),
    )
}

/// `g̃_μ = ∏ g̃_{μ_i}`; requires `m ≥ |μ|`.
pub fn g_tilde(mu: &Partition, m: usize) -> Result<SymPoly> {
    if m < mu.size() {
        return Err(Error::TooFewVariables {
            need: mu.size(),
            have: m,
        });
    }
    Ok(mu
        .parts()
        .iter()
        .fold(SymPoly::one(m), |acc, &r| &acc * &g_tilde_r(r, m)))
}

/// Schur Q-function `Q_λ` in `m` variables.
pub fn schur_q(lambda: &Partition, m: usize) -> Result<SymPoly> {
    if !lambda.is_strict() {
        return Err(Error::NotStrict(lambda.to_string()));
    }
    let mut parts = lambda.parts().to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let mut memo = BTreeMap::new();
    Ok(pfaffian_q(&parts, m, &mut memo))
}

fn q_two_row(a: usize, b: usize, m: usize) -> SymPoly {
    if b == 0 {
        return q_r(a, m);
    }
    let mut acc = &q_r(a, m) * &q_r(b, m);
    for i in 1..=b {
        let term = (&q_r(a + i, m) * &q_r(b - i, m)).scale(&Scalar::from_int(if i % 2 == 0 { 2 } else { -2 }));
        acc = &acc + &term;
    }
    acc
}

/// Pfaffian first-row expansion for an even-length list of distinct parts
/// (the last may be zero).
fn pfaffian_q(parts: &[usize], m: usize, memo: &mut BTreeMap<Vec<usize>, SymPoly>) -> SymPoly {
    if parts.is_empty() {
        return SymPoly::one(m);
    }
    if let Some(p) = memo.get(parts) {
        return p.clone();
    }
    let out = if parts.len() == 2 {
        q_two_row(parts[0], parts[1], m)
    } else {
        let degree: usize = parts.iter().sum();
        let mut acc = SymPoly::zero(m, degree);
        for j in 1..parts.len() {
            let rest: Vec<usize> = parts[1..]
                .iter()
                .enumerate()
                .filter(|(k, _)| k + 1 != j)
                .map(|(_, &p)| p)
                .collect();
            let term = &q_two_row(parts[0], parts[j], m) * &pfaffian_q(&rest, m, memo);
            acc = if j % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        acc
    };
    memo.insert(parts.to_vec(), out.clone());
    out
}

/// Coefficients `a_λ` with `f = Σ_λ a_λ Q_λ`, over strict `λ ⊢ deg f`, in
/// reverse lexicographic order of `λ`.
pub fn expand_in_q(f: &SymPoly) -> Result<Vec<(Partition, Scalar)>> {
    let n = f.degree();
    if f.m() < n {
        return Err(Error::TooFewVariables { need: n, have: f.m() });
    }
    let strict = enumerate(n, PartitionKind::Strict);
    let rows = enumerate(n, PartitionKind::All);
    let qs: Vec<SymPoly> = strict.iter().map(|l| schur_q(l, f.m())).collect::<Result<_>>()?;
    let mut a = Matrix::zeros(rows.len(), strict.len());
    for (c, q) in qs.iter().enumerate() {
        for (r, mu) in rows.iter().enumerate() {
            a.set(r, c, q.coeff(mu));
        }
    }
    let b: Vec<Scalar> = rows.iter().map(|mu| f.coeff(mu)).collect();
    let x = a.solve(&b)?;
    Ok(strict.into_iter().zip(x).collect())
}

/// Closed form of `Q_λ(1, v, v², …)`: `v^{n(λ)} ∏(1+v^c) / ∏(1-v^{h*})`.
pub fn principal_specialization_q(lambda: &Partition) -> Result<Scalar> {
    let d = shifted_data(lambda)?;
    let mut num = Scalar::v_pow(d.n_lambda as i64);
    for c in d.content_multiset() {
        num *= &(&Scalar::one() + &Scalar::v_pow(c as i64));
    }
    let mut den = Scalar::one();
    for h in d.hook_multiset() {
        den *= &(&Scalar::one() - &Scalar::v_pow(h as i64));
    }
    num.checked_div(&den)
}
