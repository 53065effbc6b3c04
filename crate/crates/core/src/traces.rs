//! Reduction modulo the even part of `[HC_n, HC_n]`: class polynomials
//! `f_ν`, the basis trace functions, and the symmetrizing trace `ℷ`.
//!
//! Every basis term `T_σ C_I` with `|I|` even is congruent to a unique
//! combination `Σ_ν f_ν · T_{w_ν}` over odd partitions `ν`. The reducer
//! finds it by exact rewriting:
//!
//! 1. odd terms vanish;
//! 2. `σ` not of the form `w_γ`: rotate a simple reflection `T_j` from the
//!    left end to the right end (`T_σ C_I = T_j T_{s_jσ} C_I ≡ T_{s_jσ} C_I T_j`);
//! 3. `σ = w_γ` and some block meets `I` in an odd number of points: zero;
//! 4. `σ = w_γ`, all blocks even, `I ≠ ∅`: conjugate by `c_{i+1}`, `i = min I`;
//! 5. `T_{w_γ}` with `γ` unsorted: replace by `T_{w_μ}`, `μ` the sorted `γ`;
//! 6. `T_{w_μ}` with an even part: `T ≡ ½(T + y⁻¹Ty)` for `y` the Clifford
//!    product over that block; the right side only has shorter terms.

use std::cell::RefCell;
use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::combinatorics::{enumerate, w_gamma, Composition, Partition, PartitionKind, Perm};
use crate::error::{Error, Result};
use crate::hecke_clifford::{clifford_inverse, BasisTerm, Element};
use crate::scalar::Scalar;

/// Default number of rewriting steps allowed per top-level reduction.
pub const DEFAULT_FUEL: u64 = 50_000_000;

/// Coefficients on the odd partitions of `n`, in reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassVector {
    keys: Arc<Vec<Partition>>,
    coeffs: Vec<Scalar>,
}

impl ClassVector {
    pub fn zero(n: usize) -> Self {
        let keys = Arc::new(enumerate(n, PartitionKind::Odd));
        let coeffs = vec![Scalar::zero(); keys.len()];
        ClassVector { keys, coeffs }
    }

    /// Coefficients listed in the key order of [`ClassVector::zero`].
    pub fn from_values(n: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        let keys = Arc::new(enumerate(n, PartitionKind::Odd));
        if keys.len() != coeffs.len() {
            return Err(Error::InvalidShape(format!(
                "{} coefficients for {} odd partitions",
                coeffs.len(),
                keys.len()
            )));
        }
        Ok(ClassVector { keys, coeffs })
    }

    fn from_parts(keys: Arc<Vec<Partition>>, coeffs: Vec<Scalar>) -> Self {
        ClassVector { keys, coeffs }
    }

    pub fn unit(n: usize, nu: &Partition) -> Option<Self> {
        let mut v = ClassVector::zero(n);
        let k = v.keys.iter().position(|p| p == nu)?;
        v.coeffs[k] = Scalar::one();
        Some(v)
    }

    pub fn n(&self) -> usize {
        self.keys.first().map_or(0, Partition::size)
    }

    pub fn keys(&self) -> &[Partition] {
        &self.keys
    }

    pub fn values(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient at `ν`; zero if `ν` is not an odd partition of `n`.
    pub fn get(&self, nu: &Partition) -> Scalar {
        self.keys
            .iter()
            .position(|p| p == nu)
            .map_or_else(Scalar::zero, |k| self.coeffs[k].clone())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.keys.iter().zip(self.coeffs.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> ClassVector {
        ClassVector::from_parts(self.keys.clone(), self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, o: &ClassVector) -> ClassVector {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        ClassVector::from_parts(self.keys.clone(), coeffs)
    }

    /// `Σ_ν coeffs[ν] · T_{w_ν}`.
    pub fn to_element(&self) -> Element {
        let n = self.n();
        let mut e = Element::zero(n);
        for (nu, c) in self.iter() {
            let (p, _) = w_gamma(&nu.as_composition());
            e.add_term(BasisTerm::new(p, 0), c.clone());
        }
        e
    }

    /// `(partition string, scalar string)` pairs in key order.
    pub fn to_pairs(&self) -> Vec<(String, String)> {
        self.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }
}

enum Rewrite {
    Zero,
    Basis(usize),
    Combo(Element),
}

/// Memoizing reducer for a fixed rank. Not shared between threads; each
/// worker owns one (see [`with_reducer`]).
pub struct Reducer {
    n: usize,
    keys: Arc<Vec<Partition>>,
    index: HashMap<Partition, usize>,
    memo: HashMap<BasisTerm, Arc<[Scalar]>>,
    in_progress: HashSet<BasisTerm>,
    fuel: u64,
    spent: u64,
}

impl Reducer {
    pub fn new(n: usize) -> Self {
        Reducer::with_fuel(n, DEFAULT_FUEL)
    }

    pub fn with_fuel(n: usize, fuel: u64) -> Self {
        let keys = Arc::new(enumerate(n, PartitionKind::Odd));
        let index = keys.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        Reducer {
            n,
            keys,
            index,
            memo: HashMap::new(),
            in_progress: HashSet::new(),
            fuel,
            spent: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }

    pub fn reduce(&mut self, h: &Element) -> Result<ClassVector> {
        if h.n() != self.n {
            return Err(Error::RankMismatch(h.n(), self.n));
        }
        self.spent = 0;
        let mut acc = vec![Scalar::zero(); self.keys.len()];
        for (t, c) in h.terms() {
            if t.is_odd() {
                continue;
            }
            let r = self.reduce_term(*t)?;
            axpy(&mut acc, c, &r);
        }
        Ok(ClassVector::from_parts(self.keys.clone(), acc))
    }

    pub fn f_nu(&mut self, h: &Element, nu: &Partition) -> Result<Scalar> {
        Ok(self.reduce(h)?.get(nu))
    }

    pub fn gimel(&mut self, h: &Element) -> Result<Scalar> {
        Ok(gimel_of(&self.reduce(h)?))
    }

    fn reduce_term(&mut self, t: BasisTerm) -> Result<Arc<[Scalar]>> {
        if let Some(r) = self.memo.get(&t) {
            return Ok(r.clone());
        }
        if !self.in_progress.insert(t) {
            return Err(Error::ReductionCycle(format!("{:?} {:?}", t.perm, t.cliff_indices())));
        }
        let out = self.reduce_uncached(t);
        self.in_progress.remove(&t);
        let out: Arc<[Scalar]> = out?.into();
        self.memo.insert(t, out.clone());
        Ok(out)
    }

    fn reduce_uncached(&mut self, t: BasisTerm) -> Result<Vec<Scalar>> {
        self.spent += 1;
        if self.spent > self.fuel {
            return Err(Error::FuelExhausted(self.fuel));
        }
        let mut acc = vec![Scalar::zero(); self.keys.len()];
        match self.step(t)? {
            Rewrite::Zero => {}
            Rewrite::Basis(k) => acc[k] = Scalar::one(),
            Rewrite::Combo(e) => {
                for (s, c) in e.terms() {
                    if s.is_odd() {
                        continue;
                    }
                    let r = self.reduce_term(*s)?;
                    axpy(&mut acc, c, &r);
                }
            }
        }
        Ok(acc)
    }

    fn step(&self, t: BasisTerm) -> Result<Rewrite> {
        let n = self.n;
        if t.is_odd() {
            return Ok(Rewrite::Zero);
        }
        let sigma = t.perm;
        let Some(gamma) = sigma.as_w_gamma() else {
            let i = (1..=n)
                .find(|&i| sigma.apply(i) > i + 1)
                .expect("a permutation that is not some w_γ has σ(i) > i+1");
            let j = sigma.apply(i) - 1;
            let shorter = BasisTerm::new(sigma.mul_simple_left(j), t.cliff);
            return Ok(Rewrite::Combo(Element::from_term(n, shorter, Scalar::one()).mul_t(j)));
        };
        let blocks = gamma.blocks();
        let odd_block = blocks.iter().any(|&(s, e)| {
            let mask = ((1u64 << e) - (1u64 << s)) as u32;
            (t.cliff & mask).count_ones() % 2 == 1
        });
        if odd_block {
            return Ok(Rewrite::Zero);
        }
        if t.cliff != 0 {
            let i = t.cliff.trailing_zeros() as usize + 1;
            let c = Element::clifford(n, &[i + 1])?;
            let x = Element::from_term(n, t, Scalar::one());
            return Ok(Rewrite::Combo(&(&c * &x) * &c));
        }
        let mu = gamma.sort_to_partition();
        if mu.parts() != gamma.parts() {
            return Ok(Rewrite::Combo(t_w_partition(&mu)));
        }
        if mu.is_odd() {
            return Ok(Rewrite::Basis(self.index[&mu]));
        }
        let &(s, e) = blocks
            .iter()
            .zip(mu.parts())
            .find(|(_, &part)| part % 2 == 0)
            .map(|(b, _)| b)
            .expect("even part exists");
        let block: Vec<usize> = (s + 1..=e).collect();
        let y = Element::clifford(n, &block)?;
        let y_inv = clifford_inverse(n, &block)?;
        let tw = Element::from_term(n, t, Scalar::one());
        let z = &tw + &(&(&y_inv * &tw) * &y);
        let len = sigma.length();
        if z.terms().any(|(s, _)| s.perm.length() >= len) {
            return Err(Error::ReductionCycle(format!(
                "even-part elimination for {mu} left a term of length ≥ {len}"
            )));
        }
        Ok(Rewrite::Combo(z.scale(&Scalar::from_ratio(1, 2))))
    }
}

fn axpy(acc: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += &(c * b);
        }
    }
}

fn t_w_partition(mu: &Partition) -> Element {
    Element::t_perm(w_gamma(&mu.as_composition()).0)
}

/// `ℷ(T_{w_ν}) = ((v-1)/2)^{n-ℓ(ν)}`.
pub fn gimel_basis_value(n: usize, nu: &Partition) -> Scalar {
    let half = Scalar::v_poly(&[-1, 1]).mul_pow2(-1);
    half.pow((n - nu.len()) as i64).expect("nonnegative power")
}

pub fn gimel_of(cv: &ClassVector) -> Scalar {
    let n = cv.n();
    cv.iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(nu, c)| c * &gimel_basis_value(n, nu))
        .sum()
}

thread_local! {
    static REDUCERS: RefCell<HashMap<usize, Reducer>> = RefCell::new(HashMap::new());
}

/// Runs `f` with this thread's cached reducer for rank `n`.
pub fn with_reducer<R>(n: usize, f: impl FnOnce(&mut Reducer) -> R) -> R {
    REDUCERS.with(|cell| {
        let mut map = cell.borrow_mut();
        let r = map.entry(n).or_insert_with(|| Reducer::new(n));
        f(r)
    })
}

pub fn reduce(h: &Element) -> Result<ClassVector> {
    with_reducer(h.n(), |r| r.reduce(h))
}

pub fn f_nu(h: &Element, nu: &Partition) -> Result<Scalar> {
    Ok(reduce(h)?.get(nu))
}

pub fn gimel(h: &Element) -> Result<Scalar> {
    Ok(gimel_of(&reduce(h)?))
}

/// Class vector of `T_{w_γ}` for a composition `γ`.
pub fn reduce_t_w(gamma: &Composition) -> Result<ClassVector> {
    let (p, _): (Perm, _) = w_gamma(gamma);
    reduce(&Element::t_perm(p))
}
