//! Seeded verification suites shared by the CLI and the test targets.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::characters::{character_table, generic_degree, verify_gimel_decomposition, CharacterTable};
use crate::combinatorics::{enumerate, shifted_data, w_gamma, PartitionKind, Perm};
use crate::error::{Error, Result};
use crate::hecke_clifford::{BasisTerm, Element};
use crate::relations::{hecke_clifford_relations, spin_relations};
use crate::report::Check;
use crate::scalar::{Ring, Scalar};
use crate::spin_hecke::{self, SpinTables};
use crate::symfunc::g_tilde_r;
use crate::tensor_oracle::{self, weight_of, TVec, TensorSpace};
use crate::traces::{self, gimel_basis_value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Core,
    Oracle,
    Spin,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "core" => Ok(Suite::Core),
            "oracle" => Ok(Suite::Oracle),
            "spin" => Ok(Suite::Spin),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown suite {s:?}"),
            }),
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Perm {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Perm::from_one_line(&v).expect("a shuffle is a permutation")
}

pub fn random_term<R: Rng>(rng: &mut R, n: usize) -> BasisTerm {
    let cliff = if n == 0 { 0 } else { rng.gen_range(0..1u32 << n) };
    BasisTerm::new(random_perm(rng, n), cliff)
}

/// A small integer or `±v^k`, `|k| ≤ 1`.
pub fn random_coeff<R: Rng>(rng: &mut R) -> Scalar {
    match rng.gen_range(0..4) {
        0 => Scalar::v(),
        1 => Scalar::v_pow(-1),
        _ => {
            let k = rng.gen_range(1..=3);
            Scalar::from_int(if rng.gen_bool(0.5) { k } else { -k })
        }
    }
}

/// Up to `terms` random basis terms with random coefficients.
pub fn random_element<R: Rng>(rng: &mut R, n: usize, terms: usize) -> Element {
    let mut e = Element::zero(n);
    for _ in 0..terms {
        e.add_term(random_term(rng, n), random_coeff(rng));
    }
    e
}

/// A word of length at most `max_len` over `1..n`.
pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Vec<usize> {
    if n < 2 {
        return Vec::new();
    }
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(1..n)).collect()
}

fn check(name: String, r: Result<Option<String>>) -> Check {
    Check::from_result(name, r)
}

fn first_failure<T: Send + Sync>(items: Vec<T>, f: impl Fn(&T) -> Result<Option<String>> + Sync) -> Result<Option<String>> {
    let found: Vec<Option<String>> = items.par_iter().map(&f).collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().next())
}

/// Relations of HC_n vanish in normal form.
pub fn check_hc_relations(n: usize) -> Check {
    let bad: Vec<String> = hecke_clifford_relations(n)
        .iter()
        .filter(|r| !r.normal_form(n).is_zero())
        .map(|r| r.name.clone())
        .collect();
    let name = format!("HC relations n={n}");
    if bad.is_empty() {
        Check::pass(name)
    } else {
        Check::fail(name, bad.join("; "))
    }
}

pub fn check_associativity(n: usize, samples: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let triples: Vec<_> = (0..samples)
        .map(|_| (random_element(&mut r, n, 2), random_element(&mut r, n, 2), random_element(&mut r, n, 2)))
        .collect();
    let run = first_failure(triples, |(a, b, c)| {
        let l = a.multiply(b)?.multiply(c)?;
        let r = a.multiply(&b.multiply(c)?)?;
        Ok((l != r).then(|| format!("({a})({b})({c})")))
    });
    check(format!("associativity n={n} ({samples} triples)"), run)
}

/// `f_ν(hh') = f_ν(h'h)` on random basis-term pairs.
pub fn check_trace_property(n: usize, samples: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let pairs: Vec<_> = (0..samples)
        .map(|_| (random_term(&mut r, n), random_term(&mut r, n)))
        .collect();
    let run = first_failure(pairs, |(a, b)| {
        let a = Element::from_term(n, *a, Scalar::one());
        let b = Element::from_term(n, *b, Scalar::one());
        let ab = traces::reduce(&a.multiply(&b)?)?;
        let ba = traces::reduce(&b.multiply(&a)?)?;
        Ok((ab != ba).then(|| format!("{a} | {b}")))
    });
    check(format!("trace property n={n} ({samples} pairs)"), run)
}

/// Class polynomials of basis terms lie in `Z[1/2][v, v^-1]`: the full
/// basis for `n ≤ 3`, otherwise `samples` random terms.
pub fn check_class_polys_in_a(n: usize, samples: usize, seed: u64) -> Check {
    let terms: Vec<BasisTerm> = if n <= 3 {
        Perm::all(n)
            .into_iter()
            .flat_map(|p| (0..1u32 << n).map(move |c| BasisTerm::new(p, c)))
            .collect()
    } else {
        let mut r = rng(seed);
        (0..samples).map(|_| random_term(&mut r, n)).collect()
    };
    let count = terms.len();
    let run = first_failure(terms, |t| {
        let cv = traces::reduce(&Element::from_term(n, *t, Scalar::one()))?;
        let bad = cv
            .iter()
            .find(|(_, c)| !c.is_in(Ring::A))
            .map(|(nu, c)| format!("{:?} {:?}: f_{nu} = {c}", t.perm.one_line(), t.cliff_indices()));
        Ok(bad)
    });
    check(format!("class polynomials in A n={n} ({count} terms)"), run)
}

/// `ℷ(T_{w_μ}) = ((v-1)/2)^{n-ℓ(μ)}` for every partition `μ ⊢ n`.
pub fn check_gimel_all_classes(n: usize) -> Check {
    let run = first_failure(enumerate(n, PartitionKind::All), |mu| {
        let h = Element::t_perm(w_gamma(&mu.as_composition()).0);
        let g = traces::gimel(&h)?;
        let want = gimel_basis_value(n, mu);
        Ok((g != want).then(|| format!("mu={mu}: {g}, expected {want}")))
    });
    check(format!("gimel on all T_w_mu n={n}"), run)
}

pub fn check_table_invertible(table: &CharacterTable) -> Check {
    let n = table.n;
    let name = format!("character table invertible n={n}");
    let rank = table.to_matrix().rank();
    if rank == table.rows.len() {
        Check::pass(name)
    } else {
        Check::fail(name, format!("rank {rank} of {}", table.rows.len()))
    }
}

/// `D^λ` is a polynomial, `D^λ(1) = 2^{n-(ℓ-δ)/2} n!/∏h*`, and
/// `Σ_λ 2^{-δ} D^λ(1)^2 = 2^n n!`.
pub fn check_generic_degrees(n: usize) -> Check {
    let run = || -> Result<Option<String>> {
        let fact: i64 = (1..=n as i64).product();
        let mut total = Scalar::zero();
        for lambda in enumerate(n, PartitionKind::Strict) {
            let d = generic_degree(&lambda)?;
            if !d.is_polynomial() || !d.is_in(Ring::A) {
                return Ok(Some(format!("lambda={lambda}: D = {d} is not a polynomial")));
            }
            let at1 = Scalar::from_gauss(d.at_v_one()?);
            let sd = shifted_data(&lambda)?;
            let want = Scalar::from_ratio(fact, sd.hook_product() as i64)
                .mul_pow2((n - (lambda.len() - lambda.delta()) / 2) as i64);
            if at1 != want {
                return Ok(Some(format!("lambda={lambda}: D(1) = {at1}, expected {want}")));
            }
            total += &(&at1 * &at1).mul_pow2(-(lambda.delta() as i64));
        }
        let want = Scalar::from_int(fact).mul_pow2(n as i64);
        Ok((total != want).then(|| format!("sum 2^-delta D(1)^2 = {total}, expected {want}")))
    };
    check(format!("generic degrees n={n}"), run())
}

pub fn core_suite(n: usize, seed: u64) -> Vec<Check> {
    let mut out = vec![
        check_hc_relations(n),
        check_associativity(n, 200, seed),
        check_trace_property(n, 100, seed),
        check_class_polys_in_a(n, 100, seed),
        check_gimel_all_classes(n),
    ];
    match character_table(n) {
        Ok(t) => {
            out.push(check_table_invertible(&t));
            out.push(verify_gimel_decomposition(&t));
        }
        Err(e) => out.push(Check::fail(format!("character table n={n}"), format!("error: {e}"))),
    }
    out.push(check_generic_degrees(n));
    out
}

pub fn check_oracle_table(n: usize) -> Check {
    let run = || -> Result<Option<String>> {
        let a = character_table(n)?;
        let b = tensor_oracle::oracle_characters(n)?;
        for (r, lambda) in a.rows.iter().enumerate() {
            for (c, nu) in a.cols.iter().enumerate() {
                if a.entries[r][c] != b.entries[r][c] {
                    return Ok(Some(format!(
                        "lambda={lambda} nu={nu}: frobenius {}, oracle {}",
                        a.entries[r][c], b.entries[r][c]
                    )));
                }
            }
        }
        Ok(None)
    };
    check(format!("oracle character table n={n}"), run())
}

/// Every HC_n and spin relation acts as zero on random sparse vectors.
pub fn check_tensor_relations(n: usize, m: usize, samples: usize, seed: u64) -> Check {
    let space = TensorSpace::new(m, n);
    let mut r = rng(seed);
    let vectors: Vec<TVec> = (0..samples).map(|_| space.random_vector(&mut r, 4)).collect();
    let rels: Vec<_> = hecke_clifford_relations(n).into_iter().chain(spin_relations(n)).collect();
    let run = first_failure(rels, |rel| {
        for x in &vectors {
            let mut acc = TVec::zero();
            for (c, w) in &rel.terms {
                acc.add_scaled(&tensor_oracle::apply_word(w, x), c);
            }
            if !acc.is_zero() {
                return Ok(Some(rel.name.clone()));
            }
        }
        Ok(None)
    });
    check(format!("tensor action kills relations n={n} m={m} ({samples} vectors)"), run)
}

/// Generators preserve weight spaces.
pub fn check_weight_preservation(n: usize, m: usize, samples: usize, seed: u64) -> Check {
    let space = TensorSpace::new(m, n);
    let alpha = space.alphabet();
    let mut r = rng(seed);
    let gens: Vec<_> = (1..n)
        .map(crate::hecke_clifford::Generator::T)
        .chain((1..=n).map(crate::hecke_clifford::Generator::C))
        .collect();
    for _ in 0..samples {
        let t: Vec<i8> = (0..n).map(|_| alpha[r.gen_range(0..alpha.len())]).collect();
        let w = weight_of(&t, m);
        for &g in &gens {
            let y = tensor_oracle::apply_gen(g, &TVec::basis(&t));
            let bad = y.terms().find(|(s, _)| weight_of(s, m) != w).map(|(s, _)| s.clone());
            if let Some(s) = bad {
                return Check::fail(
                    format!("weight preservation n={n} m={m}"),
                    format!("{g} maps {t:?} to {s:?}"),
                );
            }
        }
    }
    Check::pass(format!("weight preservation n={n} m={m}"))
}

pub fn check_statistic_sum(n: usize) -> Check {
    let run = || -> Result<Option<String>> {
        let s = tensor_oracle::statistic_sum(n, n)?;
        let g = g_tilde_r(n, n);
        Ok((s != g).then(|| "statistic sum differs from g~_n".to_string()))
    };
    check(format!("tuple statistics give g~_n n={n}"), run())
}

pub fn oracle_suite(n: usize, seed: u64) -> Vec<Check> {
    vec![
        check_oracle_table(n),
        check_tensor_relations(n, n, 50, seed),
        check_weight_preservation(n, n, 50, seed),
        check_statistic_sum(n),
    ]
}

/// `f⁻_ν(ab) = f⁻_ν(ba)` on random word pairs.
pub fn check_spin_trace_property(tables: &SpinTables, samples: usize, seed: u64) -> Check {
    let n = tables.n();
    let mut r = rng(seed);
    let pairs: Vec<(Vec<usize>, Vec<usize>)> = (0..samples)
        .map(|_| (random_word(&mut r, n, 3), random_word(&mut r, n, 3)))
        .collect();
    let run = first_failure(pairs, |(a, b)| {
        let ab: Vec<usize> = a.iter().chain(b).copied().collect();
        let ba: Vec<usize> = b.iter().chain(a).copied().collect();
        let fab = tables.class_polynomials(&ab)?;
        let fba = tables.class_polynomials(&ba)?;
        Ok((fab != fba).then(|| format!("a={a:?} b={b:?}")))
    });
    check(format!("spin trace property n={n} ({samples} pairs)"), run)
}

/// The class polynomials of `R_{w̲_ν}` are unit vectors.
pub fn check_spin_units(tables: &SpinTables) -> Check {
    let n = tables.n();
    let run = first_failure(tables.spin.cols.clone(), |nu| {
        let f = tables.class_polynomials(&spin_hecke::w_word(nu))?;
        let unit = traces::ClassVector::unit(n, nu).expect("odd partition");
        Ok((f != unit).then(|| format!("nu={nu}")))
    });
    check(format!("spin class polynomials of standard words n={n}"), run)
}

pub fn check_spin_basis(n: usize) -> Check {
    let run = || -> Result<Option<String>> {
        let rank = spin_hecke::basis_rank(n)?;
        let fact: usize = (1..=n).product();
        Ok((rank != fact).then(|| format!("rank {rank}, expected {fact}")))
    };
    check(format!("R-word images independent n={n}"), run())
}

/// Rank check above this size is skipped: exact elimination on a
/// `n! × 2^n n!` matrix over `Q(i)(u)`.
pub const SPIN_BASIS_MAX_N: usize = 4;

pub fn spin_suite(n: usize, seed: u64) -> Vec<Check> {
    if n < 2 {
        return vec![Check::pass(format!("spin layer trivial n={n}"))];
    }
    let mut out = spin_hecke::verify_iso(n);
    out.push(spin_hecke::verify_gimel_minus_basis(n));
    out.push(spin_hecke::verify_minimal_length_vanishing(n));
    match SpinTables::new(n) {
        Ok(t) => {
            out.push(spin_hecke::verify_spin_schur(&t));
            out.push(spin_hecke::verify_spin_schur_by_type(&t));
            out.push(check_spin_units(&t));
            out.push(check_spin_trace_property(&t, 50, seed));
        }
        Err(e) => out.push(Check::fail(format!("spin tables n={n}"), format!("error: {e}"))),
    }
    if n <= SPIN_BASIS_MAX_N {
        out.push(check_spin_basis(n));
    }
    out
}

pub fn run_suite(suite: Suite, n: usize, seed: u64) -> Vec<Check> {
    match suite {
        Suite::Core => core_suite(n, seed),
        Suite::Oracle => oracle_suite(n, seed),
        Suite::Spin => spin_suite(n, seed),
        Suite::All => {
            let mut v = core_suite(n, seed);
            v.extend(oracle_suite(n, seed));
            v.extend(spin_suite(n, seed));
            v
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_small() {
        for n in 1..=3 {
            for c in run_suite(Suite::All, n, 0) {
                assert!(c.passed, "{c}");
            }
        }
    }

    #[test]
    fn seeded_generators_are_deterministic() {
        let a = random_element(&mut rng(7), 4, 3);
        let b = random_element(&mut rng(7), 4, 3);
        assert_eq!(a, b);
    }
}
