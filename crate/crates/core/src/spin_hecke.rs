//! The spin Hecke algebra `sH_n`, handled through its image in HC_n under
//! `Ψ(R_i) = (c_i - c_{i+1}) T_i + (v-1) c_{i+1}`.
//!
//! All arithmetic happens in HC_n normal form; the spin relations and the
//! basis property are verified rather than assumed.

use rayon::prelude::*;

use crate::characters::{character_table, schur_element, CharacterTable};
use crate::combinatorics::{enumerate, w_gamma, Partition, PartitionKind, Perm};
use crate::error::{Error, Result};
use crate::hecke_clifford::{Element, Generator};
use crate::linalg::Matrix;
use crate::relations::spin_relations;
use crate::report::Check;
use crate::scalar::Scalar;
use crate::traces::{self, ClassVector};

use Generator::{C, T};

fn check_word(word: &[usize], n: usize) -> Result<()> {
    for &i in word {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
    }
    Ok(())
}

/// A comma-joined word such as `"2,1,3,2,3,1"`; the empty string is the
/// empty word.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    crate::combinatorics::parse_list(s)
}

/// `Ψ(R_i)`.
pub fn psi_r(i: usize, n: usize) -> Result<Element> {
    check_word(&[i], n)?;
    let ci_t = Element::from_word(n, &[C(i), T(i)], Scalar::one())?;
    let cj_t = Element::from_word(n, &[C(i + 1), T(i)], Scalar::one())?;
    let cj = Element::from_word(n, &[C(i + 1)], Scalar::v_poly(&[-1, 1]))?;
    Ok(&(&ci_t - &cj_t) + &cj)
}

/// `Ψ(R_{i_1} ⋯ R_{i_k})` in normal form. The word need not be reduced.
pub fn r_element(word: &[usize], n: usize) -> Result<Element> {
    check_word(word, n)?;
    let mut acc = Element::one(n);
    for &i in word {
        acc = acc.multiply(&psi_r(i, n)?)?;
    }
    Ok(acc)
}

/// `Ψ(Φ(T_i)) = -½ Ψ(R_i)(c_i - c_{i+1}) + ((v-1)/2)(1 - c_i c_{i+1})`.
pub fn psi_phi_t(i: usize, n: usize) -> Result<Element> {
    let r = psi_r(i, n)?;
    let diff = &Element::generator(n, C(i))? - &Element::generator(n, C(i + 1))?;
    let first = r.multiply(&diff)?.scale(&Scalar::from_ratio(-1, 2));
    let cc = Element::clifford(n, &[i, i + 1])?;
    let second = (&Element::one(n) - &cc).scale(&Scalar::v_poly(&[-1, 1]).mul_pow2(-1));
    Ok(&first + &second)
}

/// Relations of `sH_n` on the `Ψ(R_i)` and `Ψ∘Φ = id` on the `T_i`.
pub fn verify_iso(n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let bad: Vec<String> = spin_relations(n)
        .iter()
        .filter_map(|r| {
            let nf = r.normal_form(n);
            (!nf.is_zero()).then(|| format!("{} leaves {nf}", r.name))
        })
        .collect();
    let name = format!("spin relations n={n}");
    out.push(if bad.is_empty() { Check::pass(name) } else { Check::fail(name, bad.join("; ")) });
    let run = || -> Result<Option<String>> {
        for i in 1..n {
            let lhs = psi_phi_t(i, n)?;
            let rhs = Element::generator(n, T(i))?;
            if lhs != rhs {
                return Ok(Some(format!("i={i}: {lhs}")));
            }
        }
        Ok(None)
    };
    out.push(Check::from_result(format!("psi(phi(T_i)) = T_i n={n}"), run()));
    out
}

/// The word `w̲_μ` attached to a partition: consecutive generators within
/// each block.
pub fn w_word(mu: &Partition) -> Vec<usize> {
    w_gamma(&mu.as_composition()).1
}

/// `ℷ⁻(R_word) = ℷ(Ψ(R_word))`.
pub fn gimel_minus(word: &[usize], n: usize) -> Result<Scalar> {
    traces::gimel(&r_element(word, n)?)
}

/// `dim U_n` as a power of two: `k` for `n = 2k`, `k+1` for `n = 2k+1`.
pub fn dim_u_log2(n: usize) -> usize {
    n.div_ceil(2)
}

/// `1` when `n` is odd and `ℓ(λ)` is even.
fn halving(lambda: &Partition, n: usize) -> usize {
    (n % 2 == 1 && lambda.len() % 2 == 0) as usize
}

/// `δ_−(λ)`: `δ(λ)` for even `n`, `1 - δ(λ)` for odd `n`.
pub fn delta_minus(lambda: &Partition, n: usize) -> usize {
    if n % 2 == 0 {
        lambda.delta()
    } else {
        1 - lambda.delta()
    }
}

/// `c^λ_−` from the stated 2-power relation: `2^{-k} c^λ` for `n = 2k`,
/// `2^{-k-δ(λ)} c^λ` for `n = 2k+1`.
pub fn spin_schur_closed(lambda: &Partition) -> Result<Scalar> {
    let n = lambda.size();
    let k = (n / 2) as i64;
    let shift = if n % 2 == 0 { -k } else { -k - lambda.delta() as i64 };
    Ok(schur_element(lambda)?.mul_pow2(shift))
}

/// `2^{-k-δ_−(λ)} c^λ` for `n = 2k+1` (and `2^{-k} c^λ` for `n = 2k`): the
/// relation forced by `dim U^λ = 2^{-γ} dim U^λ_− dim U_n` when the type of
/// `U^λ_−` enters the weight.
pub fn spin_schur_by_type(lambda: &Partition) -> Result<Scalar> {
    let n = lambda.size();
    let k = (n / 2) as i64;
    let shift = if n % 2 == 0 { -k } else { -k - delta_minus(lambda, n) as i64 };
    Ok(schur_element(lambda)?.mul_pow2(shift))
}

/// The HC_n character table together with the spin table derived from it.
#[derive(Clone, Debug)]
pub struct SpinTables {
    pub table: CharacterTable,
    pub spin: CharacterTable,
}

impl SpinTables {
    pub fn new(n: usize) -> Result<Self> {
        let table = character_table(n)?;
        let cols = table.cols.clone();
        let columns: Vec<Vec<Scalar>> = cols
            .par_iter()
            .map(|nu| spin_values_with(&table, &r_element(&w_word(nu), n)?))
            .collect::<Result<_>>()?;
        let entries = (0..table.rows.len())
            .map(|r| columns.iter().map(|c| c[r].clone()).collect())
            .collect();
        let spin = CharacterTable {
            n,
            rows: table.rows.clone(),
            cols,
            entries,
        };
        Ok(SpinTables { table, spin })
    }

    pub fn n(&self) -> usize {
        self.table.n
    }

    /// `ζ^λ_−` of the spin element whose `Ψ`-image is `h`, for every row.
    pub fn values(&self, h: &Element) -> Result<Vec<Scalar>> {
        spin_values_with(&self.table, h)
    }

    /// `f⁻_ν(R_word)`, solved against the spin character table.
    pub fn class_polynomials(&self, word: &[usize]) -> Result<ClassVector> {
        let n = self.n();
        check_word(word, n)?;
        if word.len() % 2 == 1 {
            return Ok(ClassVector::zero(n));
        }
        let z = self.values(&r_element(word, n)?)?;
        let f = self.spin.to_matrix().solve(&z)?;
        ClassVector::from_values(n, f)
    }

    /// Coefficients `x_λ` with `ℷ⁻ = Σ_λ x_λ ζ^λ_−`, solved on the columns.
    pub fn gimel_minus_coefficients(&self) -> Result<Vec<(Partition, Scalar)>> {
        let n = self.n();
        let g: Vec<Scalar> = self
            .spin
            .cols
            .iter()
            .map(|nu| gimel_minus(&w_word(nu), n))
            .collect::<Result<_>>()?;
        let x = self.spin.to_matrix().transpose().solve(&g)?;
        Ok(self.spin.rows.iter().cloned().zip(x).collect())
    }

    fn schur_weighted(&self, delta: impl Fn(&Partition) -> usize) -> Result<Vec<(Partition, Scalar)>> {
        self.gimel_minus_coefficients()?
            .into_iter()
            .map(|(lambda, x)| {
                let c = x.mul_pow2(delta(&lambda) as i64).inv()?;
                Ok((lambda, c))
            })
            .collect()
    }

    /// `c^λ_−` from `ℷ⁻ = Σ_λ ζ^λ_− / (2^{δ(λ)} c^λ_−)`, the weighting of the
    /// HC_n decomposition carried over unchanged.
    pub fn schur_elements(&self) -> Result<Vec<(Partition, Scalar)>> {
        self.schur_weighted(Partition::delta)
    }

    /// `c^λ_−` from `ℷ⁻ = Σ_λ ζ^λ_− / (2^{δ_−(λ)} c^λ_−)`, weighting by the type
    /// of `U^λ_−`. At `v = 1` this gives `n! / ζ^λ_−(1)`.
    pub fn schur_elements_by_type(&self) -> Result<Vec<(Partition, Scalar)>> {
        let n = self.n();
        self.schur_weighted(|l| delta_minus(l, n))
    }
}

fn spin_values_with(table: &CharacterTable, h: &Element) -> Result<Vec<Scalar>> {
    let n = table.n;
    let cv = traces::reduce(h)?;
    Ok(table
        .values_on(&cv)
        .into_iter()
        .zip(&table.rows)
        .map(|(z, lambda)| z.mul_pow2(halving(lambda, n) as i64 - dim_u_log2(n) as i64))
        .collect())
}

pub fn spin_character_table(n: usize) -> Result<CharacterTable> {
    Ok(SpinTables::new(n)?.spin)
}

pub fn spin_class_polynomials(word: &[usize], n: usize) -> Result<ClassVector> {
    SpinTables::new(n)?.class_polynomials(word)
}

pub fn spin_schur_elements(n: usize) -> Result<Vec<(Partition, Scalar)>> {
    SpinTables::new(n)?.schur_elements()
}

fn compare_spin_schur(
    solved: Result<Vec<(Partition, Scalar)>>,
    name: String,
    closed: fn(&Partition) -> Result<Scalar>,
) -> Check {
    let run = || -> Result<Option<String>> {
        for (lambda, c) in solved? {
            let want = closed(&lambda)?;
            if c != want {
                return Ok(Some(format!("lambda={lambda}: solved {c}, closed {want}")));
            }
        }
        Ok(None)
    };
    Check::from_result(name, run())
}

/// [`SpinTables::schur_elements`] against [`spin_schur_closed`].
pub fn verify_spin_schur(tables: &SpinTables) -> Check {
    let n = tables.n();
    compare_spin_schur(tables.schur_elements(), format!("spin schur 2-power relation n={n}"), spin_schur_closed)
}

/// [`SpinTables::schur_elements_by_type`] against [`spin_schur_by_type`].
pub fn verify_spin_schur_by_type(tables: &SpinTables) -> Check {
    let n = tables.n();
    compare_spin_schur(
        tables.schur_elements_by_type(),
        format!("spin schur by module type n={n}"),
        spin_schur_by_type,
    )
}

/// `ℷ⁻(R_{w̲_μ}) = δ_{μ,(1^n)}` for every partition `μ ⊢ n`.
pub fn verify_gimel_minus_basis(n: usize) -> Check {
    let run = || -> Result<Option<String>> {
        for mu in enumerate(n, PartitionKind::All) {
            let g = gimel_minus(&w_word(&mu), n)?;
            let want = if mu.len() == n { Scalar::one() } else { Scalar::zero() };
            if g != want {
                return Ok(Some(format!("mu={mu}: {g}")));
            }
        }
        Ok(None)
    };
    Check::from_result(format!("gimel- on standard words n={n}"), run())
}

/// Minimal-length elements of each conjugacy class of `S_n`, keyed by
/// cycle type.
pub fn minimal_length_classes(n: usize) -> Vec<(Partition, Vec<Perm>)> {
    let mut classes: Vec<(Partition, Vec<Perm>)> = Vec::new();
    for p in Perm::all(n) {
        let ct = p.cycle_type();
        match classes.iter_mut().find(|(c, _)| *c == ct) {
            Some((_, ps)) => {
                let l = ps[0].length();
                if p.length() < l {
                    *ps = vec![p];
                } else if p.length() == l {
                    ps.push(p);
                }
            }
            None => classes.push((ct, vec![p])),
        }
    }
    classes.sort_by(|a, b| b.0.cmp(&a.0));
    classes
}

/// `ℷ⁻` vanishes on `R_w` for every reduced word of every minimal-length
/// element of every non-identity class.
pub fn verify_minimal_length_vanishing(n: usize) -> Check {
    let words: Vec<(Partition, Vec<usize>)> = minimal_length_classes(n)
        .into_iter()
        .filter(|(ct, _)| ct.len() != n)
        .flat_map(|(ct, ps)| {
            ps.into_iter()
                .flat_map(|p| p.all_reduced_words())
                .map(move |w| (ct.clone(), w))
                .collect::<Vec<_>>()
        })
        .collect();
    let found = words
        .par_iter()
        .map(|(ct, w)| -> Result<Option<String>> {
            let g = gimel_minus(w, n)?;
            Ok((!g.is_zero()).then(|| format!("class {ct}, word {}: {g}", crate::combinatorics::join(w))))
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().next());
    Check::from_result(format!("gimel- on minimal-length classes n={n}"), found)
}

/// Rank of `{Ψ(R_σ̲)}` over `S_n`, using lexicographically smallest
/// reduced words.
pub fn basis_rank(n: usize) -> Result<usize> {
    let elems: Vec<Element> = Perm::all(n)
        .par_iter()
        .map(|p| r_element(&p.reduced_word(), n))
        .collect::<Result<_>>()?;
    let mut keys: Vec<_> = elems.iter().flat_map(|e| e.terms().map(|(t, _)| *t)).collect();
    keys.sort();
    keys.dedup();
    let rows = elems
        .iter()
        .map(|e| keys.iter().map(|k| e.coeff(k)).collect())
        .collect();
    Ok(Matrix::from_rows(rows).rank())
}
