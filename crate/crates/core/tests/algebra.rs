use std::collections::{BTreeMap, VecDeque};

use spinhecke::hecke_clifford::{build_t_w, clifford_inverse};
use spinhecke::linalg::Matrix;
use spinhecke::relations::hecke_clifford_relations;
use spinhecke::verify::{random_element, rng};
use spinhecke::{BasisTerm, Composition, Element, Generator, Perm, Scalar};

use Generator::{C, T};

fn s(x: &str) -> Scalar {
    x.parse().unwrap()
}

fn word(n: usize, w: &[Generator]) -> Element {
    Element::from_word(n, w, Scalar::one()).unwrap()
}

fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

#[test]
fn defining_relations_vanish() {
    for n in 1..=5 {
        for r in hecke_clifford_relations(n) {
            let nf = r.normal_form(n);
            assert!(nf.is_zero(), "n={n} {}: {nf}", r.name);
        }
    }
}

#[test]
fn associativity_on_random_triples() {
    for n in 1..=4 {
        let mut r = rng(7 + n as u64);
        for _ in 0..200 {
            let a = random_element(&mut r, n, 2);
            let b = random_element(&mut r, n, 2);
            let c = random_element(&mut r, n, 2);
            let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
            let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
            assert_eq!(left, right, "n={n}: ({a})({b})({c})");
        }
    }
}

/// Grows a spanning set by right multiplication with generators, testing
/// linear independence after specializing `v` to a rational point.
fn closure_dimension(n: usize) -> usize {
    let gens: Vec<Generator> = (1..n).map(T).chain((1..=n).map(C)).collect();
    let v0 = Scalar::from_int(4);
    let mut cols: BTreeMap<BasisTerm, usize> = BTreeMap::new();
    let mut rows: Vec<BTreeMap<usize, Scalar>> = Vec::new();
    let mut rank = 0;
    let mut try_add = |f: &Element| -> bool {
        let mut row = BTreeMap::new();
        for (t, c) in f.terms() {
            let k = cols.len();
            let j = *cols.entry(*t).or_insert(k);
            row.insert(j, c.substitute_v(&v0).unwrap());
        }
        rows.push(row);
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (i, r) in rows.iter().enumerate() {
            for (j, c) in r {
                m.set(i, *j, c.clone());
            }
        }
        if m.rank() > rank {
            rank += 1;
            true
        } else {
            rows.pop();
            false
        }
    };
    let one = Element::one(n);
    assert!(try_add(&one));
    let mut queue = VecDeque::from([one]);
    while let Some(e) = queue.pop_front() {
        for g in &gens {
            let f = e.mul_gen(*g);
            if try_add(&f) {
                queue.push_back(f);
            }
        }
    }
    assert_eq!(cols.len(), rank, "every basis term that appears is independent");
    rank
}

#[test]
fn generators_span_the_full_basis() {
    for (n, want) in [(1, 2), (2, 8), (3, 48)] {
        assert_eq!(closure_dimension(n), want, "n={n}");
    }
}

fn t_prime(n: usize, i: usize) -> Element {
    &word(n, &[T(i)]) - &Element::scalar(n, s("v-1"))
}

fn product(n: usize, factors: impl IntoIterator<Item = Element>) -> Element {
    factors.into_iter().fold(Element::one(n), |acc, f| acc.multiply(&f).unwrap())
}

#[test]
fn coxeter_element_times_clifford() {
    for n in 2..=5 {
        let xn = word(n, &(1..n).map(T).collect::<Vec<_>>());
        for i in 1..n {
            assert_eq!(xn.mul_c(i), word(n, &[C(i + 1)]).multiply(&xn).unwrap(), "n={n} i={i}");
        }
        // T_{w_(k)} = T_1 ⋯ T_{k-1} inside HC_n.
        let t_w = |k: usize| word(n, &(1..k).map(T).collect::<Vec<_>>());
        let mut rhs = product(n, std::iter::once(word(n, &[C(1)])).chain((1..n).map(|i| t_prime(n, i))));
        let mut tail = Element::zero(n);
        for j in 2..=n {
            let term = product(
                n,
                [word(n, &[C(j)]), t_w(j - 1)].into_iter().chain((j..n).map(|i| t_prime(n, i))),
            );
            tail = &tail + &term;
        }
        rhs = &rhs + &tail.scale(&s("v-1"));
        assert_eq!(xn.mul_c(n), rhs, "n={n}");
    }
}

#[test]
fn word_examples() {
    let id = BasisTerm::identity(2);
    let s1 = BasisTerm::new(Perm::from_word(2, &[1]).unwrap(), 0);

    let e = word(2, &[T(1), T(1)]);
    assert_eq!(e.coeff(&s1), s("v-1"));
    assert_eq!(e.coeff(&id), Scalar::v());
    assert_eq!(e.len(), 2);

    let e = word(2, &[T(1), C(1)]);
    assert_eq!(e, word(2, &[C(2), T(1)]));
    assert_eq!(e.len(), 1);
    assert_eq!(e.coeff(&BasisTerm::new(s1.perm, 0b01)), Scalar::one());

    let want = &(&word(2, &[C(1), T(1)]) + &word(2, &[C(2)]).scale(&s("v-1"))) - &word(2, &[C(1)]).scale(&s("v-1"));
    assert_eq!(word(2, &[T(1), C(2)]), want);

    assert!(Element::from_word(2, &[T(2)], Scalar::one()).is_err());
    assert!(Element::from_word(2, &[C(3)], Scalar::one()).is_err());
}

#[test]
fn multiplication_examples() {
    let c1 = word(2, &[C(1)]);
    let c2 = word(2, &[C(2)]);
    assert_eq!(c1.multiply(&c1).unwrap(), Element::one(2));
    let c21 = c2.multiply(&c1).unwrap();
    assert_eq!(c21.len(), 1);
    assert_eq!(c21.coeff(&BasisTerm::new(Perm::identity(2), 0b11)), -Scalar::one());

    let braid = &word(3, &[T(1), T(2), T(1)]) - &word(3, &[T(2), T(1), T(2)]);
    assert!(braid.is_zero());

    assert!(c1.multiply(&Element::one(3)).is_err());
}

#[test]
fn standard_elements() {
    assert_eq!(build_t_w(&comp(&[1, 1, 1])), Element::one(3));
    for n in 1..=5 {
        let e = build_t_w(&comp(&[n]));
        assert_eq!(e, word(n, &(1..n).map(T).collect::<Vec<_>>()));
    }
    let e = build_t_w(&comp(&[2, 2]));
    assert_eq!(e, Element::t_perm(Perm::from_one_line(&[2, 1, 4, 3]).unwrap()));
    assert_eq!(e, word(4, &[T(1), T(3)]));
}

#[test]
fn clifford_inverses() {
    let n = 4;
    assert_eq!(clifford_inverse(n, &[1]).unwrap(), word(n, &[C(1)]));
    assert_eq!(clifford_inverse(n, &[1, 2]).unwrap(), word(n, &[C(1), C(2)]).scale(&Scalar::from_int(-1)));
    assert_eq!(clifford_inverse(n, &[1, 2, 3, 4]).unwrap(), word(n, &[C(1), C(2), C(3), C(4)]));
    for set in [vec![2], vec![1, 3], vec![1, 2, 4], vec![1, 2, 3, 4]] {
        let c = Element::clifford(n, &set).unwrap();
        let inv = clifford_inverse(n, &set).unwrap();
        assert_eq!(c.multiply(&inv).unwrap(), Element::one(n));
        assert_eq!(inv.multiply(&c).unwrap(), Element::one(n));
    }
}
