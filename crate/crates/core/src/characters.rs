//! Irreducible characters of HC_n from the Frobenius-type formula
//! `g̃_μ = Σ_λ 2^{-(ℓ(λ)+δ(λ))/2} ζ^λ(T_{w_μ}) Q_λ`, Schur elements and
//! spin generic degrees.

use rayon::prelude::*;

use crate::combinatorics::{enumerate, shifted_data, w_gamma, Partition, PartitionKind};
use crate::error::{Error, Result};
use crate::hecke_clifford::Element;
use crate::linalg::Matrix;
use crate::report::Check;
use crate::scalar::{Ring, Scalar};
use crate::symfunc::{expand_in_q, g_tilde_r, SymPoly};
use crate::traces::{self, gimel_basis_value, ClassVector};

/// Rows are strict partitions, columns odd partitions, both in reverse
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<Scalar>>,
}

impl CharacterTable {
    pub fn get(&self, lambda: &Partition, nu: &Partition) -> Option<&Scalar> {
        let r = self.rows.iter().position(|p| p == lambda)?;
        let c = self.cols.iter().position(|p| p == nu)?;
        Some(&self.entries[r][c])
    }

    pub fn row(&self, lambda: &Partition) -> Option<&[Scalar]> {
        let r = self.rows.iter().position(|p| p == lambda)?;
        Some(&self.entries[r])
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.entries.clone())
    }

    /// `ζ^λ(h) = Σ_ν f_ν(h) ζ^λ(T_{w_ν})` for each row `λ`.
    pub fn values_on(&self, cv: &ClassVector) -> Vec<Scalar> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(cv.values())
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(z, c)| z * c)
                    .sum()
            })
            .collect()
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<CharacterTable> {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(&f).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        Ok(CharacterTable {
            entries,
            ..self.clone()
        })
    }

    /// Every entry lies in the given subring.
    pub fn all_in(&self, ring: Ring) -> bool {
        self.entries.iter().flatten().all(|x| x.is_in(ring))
    }
}

/// `2^{(ℓ(λ)+δ(λ))/2}`, always an integral power.
fn frobenius_scale(lambda: &Partition) -> i64 {
    ((lambda.len() + lambda.delta()) / 2) as i64
}

/// `ζ^λ(T_{w_μ})` for every strict `λ ⊢ n`, for an arbitrary partition `μ`,
/// expanding in `m ≥ n` variables with `one_row(r, m)` as `g̃_r`.
pub fn frobenius_column_with(
    mu: &Partition,
    m: usize,
    one_row: &(dyn Fn(usize, usize) -> SymPoly + Sync),
) -> Result<Vec<Scalar>> {
    let n = mu.size();
    if m < n {
        return Err(Error::TooFewVariables { need: n, have: m });
    }
    let g = mu
        .parts()
        .iter()
        .fold(SymPoly::one(m), |acc, &r| &acc * &one_row(r, m));
    let a = expand_in_q(&g)?;
    Ok(a.into_iter()
        .map(|(lambda, c)| c.mul_pow2(frobenius_scale(&lambda)))
        .collect())
}

pub fn frobenius_column(mu: &Partition) -> Result<Vec<Scalar>> {
    frobenius_column_with(mu, mu.size(), &g_tilde_r)
}

pub fn character_table_with(
    n: usize,
    m: usize,
    one_row: &(dyn Fn(usize, usize) -> SymPoly + Sync),
) -> Result<CharacterTable> {
    if n == 0 {
        return Err(Error::InvalidShape("n must be positive".into()));
    }
    let rows = enumerate(n, PartitionKind::Strict);
    let cols = enumerate(n, PartitionKind::Odd);
    let columns: Vec<Vec<Scalar>> = cols
        .par_iter()
        .map(|nu| frobenius_column_with(nu, m, one_row))
        .collect::<Result<_>>()?;
    let entries = (0..rows.len())
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    Ok(CharacterTable { n, rows, cols, entries })
}

pub fn character_table(n: usize) -> Result<CharacterTable> {
    character_table_with(n, n, &g_tilde_r)
}

/// The table computed in `m ≥ n` variables; equal to [`character_table`].
pub fn character_table_in(n: usize, m: usize) -> Result<CharacterTable> {
    character_table_with(n, m, &g_tilde_r)
}

/// `ζ^λ(h)` for the row `λ` of `table`.
pub fn character_value(table: &CharacterTable, lambda: &Partition, h: &Element) -> Result<Scalar> {
    let r = table
        .rows
        .iter()
        .position(|p| p == lambda)
        .ok_or_else(|| Error::NotStrict(lambda.to_string()))?;
    let cv = traces::reduce(h)?;
    Ok(table.entries[r]
        .iter()
        .zip(cv.values())
        .filter(|(_, c)| !c.is_zero())
        .map(|(z, c)| z * c)
        .sum())
}

/// `P_n = ∏_{k≤n} (1-v^k)/(1-v)`.
pub fn poincare(n: usize) -> Scalar {
    (1..=n)
        .map(|k| Scalar::v_poly(&vec![1; k]))
        .fold(Scalar::one(), |a, b| &a * &b)
}

/// `c^λ = 2^{n+(ℓ-δ)/2} ∏(1-v^{h*}) / (v^{n(λ)} (1-v)^n ∏(1+v^c))`.
pub fn schur_element(lambda: &Partition) -> Result<Scalar> {
    let d = shifted_data(lambda)?;
    let n = lambda.size();
    let mut num = Scalar::one().mul_pow2((n + (lambda.len() - d.delta) / 2) as i64);
    for h in d.hook_multiset() {
        num *= &(&Scalar::one() - &Scalar::v_pow(h as i64));
    }
    let mut den = Scalar::v_pow(d.n_lambda as i64);
    den *= &Scalar::v_poly(&[1, -1]).pow(n as i64)?;
    for c in d.content_multiset() {
        den *= &(&Scalar::one() + &Scalar::v_pow(c as i64));
    }
    num.checked_div(&den)
}

/// `u_λ = 1/(2^{δ(λ)} c^λ)`, the weight of `ζ^λ` in `ℷ`.
pub fn u_lambda(lambda: &Partition) -> Result<Scalar> {
    schur_element(lambda)?.mul_pow2(lambda.delta() as i64).inv()
}

/// `D^λ = 2^n P_n / c^λ`.
pub fn generic_degree(lambda: &Partition) -> Result<Scalar> {
    let n = lambda.size();
    poincare(n).mul_pow2(n as i64).checked_div(&schur_element(lambda)?)
}

/// Checks `ℷ(T_{w_μ}) = Σ_λ u_λ ζ^λ(T_{w_μ})` for every partition `μ ⊢ n`,
/// with `ζ^λ(T_{w_μ})` obtained from the class polynomials of `T_{w_μ}`.
pub fn verify_gimel_decomposition(table: &CharacterTable) -> Check {
    let n = table.n;
    let name = format!("gimel decomposition n={n}");
    let run = || -> Result<Option<String>> {
        let us: Vec<Scalar> = table.rows.iter().map(u_lambda).collect::<Result<_>>()?;
        for mu in enumerate(n, PartitionKind::All) {
            let h = Element::t_perm(w_gamma(&mu.as_composition()).0);
            let cv = traces::reduce(&h)?;
            let lhs = traces::gimel_of(&cv);
            let rhs: Scalar = table.values_on(&cv).iter().zip(&us).map(|(z, u)| z * u).sum();
            if lhs != rhs {
                return Ok(Some(format!("mu={mu}: gimel={lhs}, sum={rhs}")));
            }
            if lhs != gimel_basis_value(n, &mu) {
                return Ok(Some(format!("mu={mu}: gimel={lhs}")));
            }
        }
        Ok(None)
    };
    Check::from_result(name, run())
}
