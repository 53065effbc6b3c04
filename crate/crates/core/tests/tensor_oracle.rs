use spinhecke::characters::character_table;
use spinhecke::combinatorics::{compositions, enumerate, weak_compositions, PartitionKind};
use spinhecke::hecke_clifford::build_t_w;
use spinhecke::relations::{hecke_clifford_relations, spin_relations, Relation};
use spinhecke::symfunc::{delta_of, g_tilde_r};
use spinhecke::tensor_oracle::{
    apply_word, oracle_characters, s_bar, statistic_sum, trace_poly, weight_of, weight_trace,
};
use spinhecke::verify::{random_element, rng};
use spinhecke::{Composition, Element, Generator, Partition, Ring, Scalar, SymPoly, TVec, TensorSpace};

fn s(x: &str) -> Scalar {
    x.parse().unwrap()
}

fn act(rel: &Relation, x: &TVec) -> TVec {
    let mut out = TVec::zero();
    for (c, w) in &rel.terms {
        out.add_scaled(&apply_word(w, x), c);
    }
    out
}

#[test]
fn relations_act_as_zero() {
    for n in 1..=4 {
        let space = TensorSpace::new(n, n);
        let mut r = rng(31 + n as u64);
        let rels: Vec<Relation> = hecke_clifford_relations(n).into_iter().chain(spin_relations(n)).collect();
        for _ in 0..50 {
            let x = space.random_vector(&mut r, 4);
            for rel in &rels {
                let y = act(rel, &x);
                assert!(y.is_zero(), "n={n} {}", rel.name);
            }
        }
    }
}

#[test]
fn action_is_a_representation() {
    // Ψ(h)Ψ(k) = Ψ(hk) on random vectors.
    for n in 2..=3 {
        let space = TensorSpace::new(n, n);
        let mut r = rng(41);
        for _ in 0..10 {
            let h = random_element(&mut r, n, 2);
            let k = random_element(&mut r, n, 2);
            let x = space.random_vector(&mut r, 3);
            let lhs = space.apply_element(&h, &space.apply_element(&k, &x).unwrap()).unwrap();
            let rhs = space.apply_element(&h.multiply(&k).unwrap(), &x).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn weights_are_preserved() {
    for n in 1..=4 {
        let space = TensorSpace::new(n, n);
        let mut r = rng(53);
        for _ in 0..20 {
            let x = space.random_vector(&mut r, 1);
            let Some((t, _)) = x.terms().next() else { continue };
            let w = weight_of(t, n);
            let gens = (1..n).map(Generator::T).chain((1..=n).map(Generator::C));
            for g in gens {
                for (u, _) in space.apply(g, &x).unwrap().terms() {
                    assert_eq!(weight_of(u, n), w, "{g} moved {t:?} to {u:?}");
                }
            }
        }
    }
}

#[test]
fn tensor_space_shape() {
    for (m, n) in [(1, 1), (2, 2), (2, 3), (3, 2)] {
        let space = TensorSpace::new(m, n);
        assert_eq!(space.basis().len() as u128, space.dimension());
        assert_eq!(space.dimension(), (2 * m as u128).pow(n as u32));
    }
    assert!(TensorSpace::new(2, 2).apply(Generator::T(2), &TVec::zero()).is_err());
    assert!(TensorSpace::new(2, 2).apply_element(&Element::one(3), &TVec::zero()).is_err());
}

#[test]
fn two_factor_examples() {
    let terms = |k, l| {
        let mut x = TVec::zero();
        for (c, a, b) in s_bar(k, l) {
            x.add(vec![a, b], c);
        }
        x
    };
    let mut want = TVec::zero();
    want.add(vec![1, 1], Scalar::v());
    want.add(vec![-1, -1], s("v-1"));
    assert_eq!(terms(1, 1), want);
    assert_eq!(apply_word(&[Generator::T(1)], &TVec::basis(&[1, 1])), want);

    let mut want = TVec::zero();
    want.add(vec![-1, -1], Scalar::from_int(-1));
    assert_eq!(terms(-1, -1), want);

    let theta = apply_word(&[Generator::C(1)], &TVec::basis(&[1]));
    let mut want = TVec::zero();
    want.add(vec![-1], Scalar::i());
    assert_eq!(theta, want);
    let back = apply_word(&[Generator::C(1)], &theta);
    assert_eq!(back, TVec::basis(&[1]));
}

#[test]
fn weight_trace_examples() {
    assert_eq!(weight_trace(&Element::one(1), &[1]), Scalar::from_int(2));
    let t1 = Element::generator(2, Generator::T(1)).unwrap();
    assert_eq!(weight_trace(&t1, &[1, 1]), s("4*(v-1)"));
    for n in 1..=3 {
        let c1 = Element::generator(n, Generator::C(1)).unwrap();
        for w in weak_compositions(n, n) {
            assert!(weight_trace(&c1, &w).is_zero());
        }
    }
}

#[test]
fn one_row_trace_polynomials() {
    for n in 1..=4 {
        let tp = trace_poly(&build_t_w(&Composition::new(vec![n]).unwrap()), n).unwrap();
        assert_eq!(tp, g_tilde_r(n, n));
        let vm1 = s("v-1");
        for mu in enumerate(n, PartitionKind::All) {
            let want = &delta_of(&mu) * &vm1.pow(mu.len() as i64 - 1).unwrap();
            assert_eq!(tp.coeff(&mu), want, "mu={mu}");
        }
    }
}

#[test]
fn trace_polynomials_factor_over_blocks() {
    for n in 1..=4 {
        for gamma in compositions(n) {
            let whole = trace_poly(&build_t_w(&gamma), n).unwrap();
            let blocks = gamma.parts().iter().fold(SymPoly::one(n), |acc, &r| {
                let one_block = trace_poly(&build_t_w(&Composition::new(vec![r]).unwrap()), n).unwrap();
                &acc * &one_block
            });
            assert_eq!(whole, blocks, "gamma={gamma}");
            assert!(whole.monomials().all(|(_, c)| c.is_in(Ring::Qv) && c.is_in(Ring::Real)));
        }
    }
}

#[test]
fn trace_polynomials_of_mixed_elements_are_rational() {
    let mut r = rng(61);
    for n in 2..=3 {
        for _ in 0..5 {
            let h = random_element(&mut r, n, 3);
            let tp = trace_poly(&h, n).unwrap();
            assert!(tp.monomials().all(|(_, c)| c.is_in(Ring::Qv)));
        }
    }
}

#[test]
fn statistic_sum_is_the_one_row_function() {
    for n in 1..=4 {
        assert_eq!(statistic_sum(n, n).unwrap(), g_tilde_r(n, n), "n={n}");
    }
}

#[test]
fn oracle_table_matches_frobenius_table() {
    for n in 1..=3 {
        assert_eq!(oracle_characters(n).unwrap(), character_table(n).unwrap(), "n={n}");
    }
    let t = oracle_characters(2).unwrap();
    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    assert_eq!(t.get(&p(&[2]), &p(&[1, 1])), Some(&Scalar::from_int(4)));
}
