//! Defining relations of HC_n and of the spin Hecke algebra, written as
//! linear combinations of generator words that must vanish.

use crate::hecke_clifford::{Element, Generator};
use crate::scalar::Scalar;

use Generator::{C, T};

/// `Σ coeff · word = 0`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub terms: Vec<(Scalar, Vec<Generator>)>,
}

impl Relation {
    fn new(name: String, terms: Vec<(Scalar, Vec<Generator>)>) -> Self {
        Relation { name, terms }
    }

    /// Normal form of the left-hand side; zero iff the relation holds.
    pub fn normal_form(&self, n: usize) -> Element {
        let mut acc = Element::zero(n);
        for (c, w) in &self.terms {
            let e = Element::from_word(n, w, c.clone()).expect("relation indices in range");
            acc = &acc + &e;
        }
        acc
    }
}

fn int(k: i64) -> Scalar {
    Scalar::from_int(k)
}

fn vm1() -> Scalar {
    Scalar::v_poly(&[-1, 1])
}

/// The relations of HC_n together with the derived rule for `T_i c_{i+1}`.
pub fn hecke_clifford_relations(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for i in 1..n {
        out.push(Relation::new(
            format!("(T{i}-v)(T{i}+1)"),
            vec![(int(1), vec![T(i), T(i)]), (-vm1(), vec![T(i)]), (-Scalar::v(), vec![])],
        ));
        out.push(Relation::new(
            format!("T{i} c{i} = c{} T{i}", i + 1),
            vec![(int(1), vec![T(i), C(i)]), (int(-1), vec![C(i + 1), T(i)])],
        ));
        out.push(Relation::new(
            format!("T{i} c{} = c{i} T{i} + (v-1)(c{} - c{i})", i + 1, i + 1),
            vec![
                (int(1), vec![T(i), C(i + 1)]),
                (int(-1), vec![C(i), T(i)]),
                (-vm1(), vec![C(i + 1)]),
                (vm1(), vec![C(i)]),
            ],
        ));
        for j in 1..=n {
            if j != i && j != i + 1 {
                out.push(Relation::new(
                    format!("T{i} c{j} = c{j} T{i}"),
                    vec![(int(1), vec![T(i), C(j)]), (int(-1), vec![C(j), T(i)])],
                ));
            }
        }
        for j in i + 2..n {
            out.push(Relation::new(
                format!("T{i} T{j} = T{j} T{i}"),
                vec![(int(1), vec![T(i), T(j)]), (int(-1), vec![T(j), T(i)])],
            ));
        }
        if i + 1 < n {
            out.push(Relation::new(
                format!("braid T{i} T{}", i + 1),
                vec![
                    (int(1), vec![T(i), T(i + 1), T(i)]),
                    (int(-1), vec![T(i + 1), T(i), T(i + 1)]),
                ],
            ));
        }
    }
    for i in 1..=n {
        out.push(Relation::new(format!("c{i}^2 = 1"), vec![(int(1), vec![C(i), C(i)]), (int(-1), vec![])]));
        for j in i + 1..=n {
            out.push(Relation::new(
                format!("c{i} c{j} = -c{j} c{i}"),
                vec![(int(1), vec![C(i), C(j)]), (int(1), vec![C(j), C(i)])],
            ));
        }
    }
    out
}

/// `R_i = (c_i - c_{i+1}) T_i + (v-1) c_{i+1}` as a combination of words.
pub fn r_words(i: usize) -> Vec<(Scalar, Vec<Generator>)> {
    vec![
        (int(1), vec![C(i), T(i)]),
        (int(-1), vec![C(i + 1), T(i)]),
        (vm1(), vec![C(i + 1)]),
    ]
}

/// Expansion of `R_{i_1} ⋯ R_{i_k}` into generator words.
pub fn r_product_words(word: &[usize]) -> Vec<(Scalar, Vec<Generator>)> {
    let mut acc: Vec<(Scalar, Vec<Generator>)> = vec![(int(1), vec![])];
    for &i in word {
        let mut next = Vec::with_capacity(acc.len() * 3);
        for (c, w) in &acc {
            for (d, x) in r_words(i) {
                let mut ww = w.clone();
                ww.extend(x);
                next.push((c * &d, ww));
            }
        }
        acc = next;
    }
    acc
}

fn scaled(c: Scalar, terms: Vec<(Scalar, Vec<Generator>)>) -> Vec<(Scalar, Vec<Generator>)> {
    terms.into_iter().map(|(d, w)| (&c * &d, w)).collect()
}

/// The spin relations for the images `R_i` inside HC_n.
pub fn spin_relations(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    let v2p1 = Scalar::v_poly(&[1, 0, 1]);
    let vm1sq = vm1().pow(2).unwrap();
    for i in 1..n {
        let mut t = r_product_words(&[i, i]);
        t.push((v2p1.clone(), vec![]));
        out.push(Relation::new(format!("R{i}^2 = -(v^2+1)"), t));
        for j in i + 2..n {
            let mut t = r_product_words(&[i, j]);
            t.extend(r_product_words(&[j, i]));
            out.push(Relation::new(format!("R{i} R{j} = -R{j} R{i}"), t));
        }
        if i + 1 < n {
            let mut t = r_product_words(&[i, i + 1, i]);
            t.extend(scaled(int(-1), r_product_words(&[i + 1, i, i + 1])));
            t.extend(scaled(-&vm1sq, r_product_words(&[i + 1])));
            t.extend(scaled(vm1sq.clone(), r_product_words(&[i])));
            out.push(Relation::new(format!("deformed braid R{i} R{}", i + 1), t));
        }
    }
    out
}
