use spinhecke::combinatorics::{enumerate, PartitionKind};
use spinhecke::spin_hecke::{
    basis_rank, gimel_minus, minimal_length_classes, parse_word, psi_r, r_element, spin_schur_by_type,
    spin_schur_closed, verify_gimel_minus_basis, verify_iso, verify_minimal_length_vanishing, verify_spin_schur,
    verify_spin_schur_by_type, w_word,
};
use spinhecke::verify::{random_word, rng};
use spinhecke::{traces, ClassVector, Element, Generator, Partition, Scalar, SpinTables};

fn s(x: &str) -> Scalar {
    x.parse().unwrap()
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn r_element_examples() {
    let c = |i| Element::generator(2, Generator::C(i)).unwrap();
    let t1 = Element::generator(2, Generator::T(1)).unwrap();
    let want = &(&c(1) - &c(2)).multiply(&t1).unwrap() + &c(2).scale(&s("v-1"));
    assert_eq!(r_element(&[1], 2).unwrap(), want);
    assert_eq!(psi_r(1, 2).unwrap(), want);
    assert_eq!(r_element(&[1, 1], 2).unwrap(), Element::scalar(2, s("-(v^2+1)")));
    assert_eq!(r_element(&[], 3).unwrap(), Element::one(3));
    assert!(r_element(&[3], 3).is_err());
}

#[test]
fn psi_respects_the_spin_relations() {
    for n in 2..=5 {
        for c in verify_iso(n) {
            assert!(c.passed, "{c}");
        }
    }
    let lhs = r_element(&[1, 2, 1], 3).unwrap();
    let rhs = r_element(&[2, 1, 2], 3).unwrap();
    let diff = (&r_element(&[2], 3).unwrap() - &r_element(&[1], 3).unwrap()).scale(&s("(v-1)^2"));
    assert_eq!(&lhs - &rhs, diff);
    assert_eq!(r_element(&[1, 3], 4).unwrap(), -&r_element(&[3, 1], 4).unwrap());
}

#[test]
fn gimel_minus_examples() {
    assert!(gimel_minus(&[], 4).unwrap().is_one());
    assert!(gimel_minus(&[1, 2], 3).unwrap().is_zero());
    let w = parse_word("2,1,3,2,3,1").unwrap();
    let g = gimel_minus(&w, 4).unwrap();
    assert_eq!(g, s("-(v-1)^4*(v^2+1)"));
    assert_eq!(g.to_string(), "-v^6+4*v^5-7*v^4+8*v^3-7*v^2+4*v-1");
}

#[test]
fn gimel_minus_on_standard_words() {
    for n in 1..=5 {
        let c = verify_gimel_minus_basis(n);
        assert!(c.passed, "{c}");
    }
}

#[test]
fn gimel_minus_vanishes_on_minimal_length_classes() {
    for n in 2..=5 {
        let classes = minimal_length_classes(n);
        assert_eq!(classes.len(), enumerate(n, PartitionKind::All).len());
        let c = verify_minimal_length_vanishing(n);
        assert!(c.passed, "{c}");
    }
}

#[test]
fn odd_words_have_zero_trace() {
    let mut r = rng(71);
    for n in 2..=4 {
        for _ in 0..20 {
            let mut w = random_word(&mut r, n, 5);
            if w.len() % 2 == 0 {
                w.push(1);
            }
            assert!(gimel_minus(&w, n).unwrap().is_zero(), "{w:?}");
            assert!(traces::reduce(&r_element(&w, n).unwrap()).unwrap().is_zero());
        }
    }
}

#[test]
fn spin_tables() {
    let t2 = SpinTables::new(2).unwrap();
    assert_eq!(t2.spin.get(&p(&[2]), &p(&[1, 1])), Some(&Scalar::from_int(2)));
    let t3 = SpinTables::new(3).unwrap();
    assert_eq!(t3.spin.get(&p(&[2, 1]), &p(&[1, 1, 1])), Some(&Scalar::from_int(2)));
    for n in 1..=5 {
        let t = SpinTables::new(n).unwrap();
        assert!(!t.spin.to_matrix().determinant().unwrap().is_zero());
        let last = t.spin.cols.len() - 1;
        for row in &t.spin.entries {
            let d = row[last].as_rational().expect("constant");
            assert!(d.is_integer() && d.numer() > &0.into(), "n={n}");
        }
    }
}

#[test]
fn spin_class_polynomials() {
    for n in 2..=4 {
        let t = SpinTables::new(n).unwrap();
        for nu in enumerate(n, PartitionKind::Odd) {
            let f = t.class_polynomials(&w_word(&nu)).unwrap();
            assert_eq!(f, ClassVector::unit(n, &nu).unwrap());
        }
        assert!(t.class_polynomials(&[1]).unwrap().is_zero());
    }
    let t4 = SpinTables::new(4).unwrap();
    let f = t4.class_polynomials(&parse_word("2,1,3,2,3,1").unwrap()).unwrap();
    assert_eq!(f.get(&p(&[1, 1, 1, 1])), s("-(v-1)^4*(v^2+1)"));
}

#[test]
fn spin_class_polynomials_are_trace_functions() {
    let mut r = rng(83);
    for n in 2..=4 {
        let t = SpinTables::new(n).unwrap();
        for _ in 0..20 {
            let a = random_word(&mut r, n, 3);
            let b = random_word(&mut r, n, 3);
            let ab: Vec<usize> = a.iter().chain(&b).copied().collect();
            let ba: Vec<usize> = b.iter().chain(&a).copied().collect();
            assert_eq!(t.class_polynomials(&ab).unwrap(), t.class_polynomials(&ba).unwrap(), "{a:?} {b:?}");
        }
    }
}

#[test]
fn spin_schur_elements() {
    let t2 = SpinTables::new(2).unwrap();
    assert_eq!(t2.schur_elements().unwrap(), vec![(p(&[2]), Scalar::one())]);
    for n in 1..=5 {
        let t = SpinTables::new(n).unwrap();
        let c = verify_spin_schur(&t);
        assert!(c.passed, "{c}");
        let c = verify_spin_schur_by_type(&t);
        assert!(c.passed, "{c}");
        for lambda in &t.spin.rows {
            let closed = spin_schur_closed(lambda).unwrap();
            let by_type = spin_schur_by_type(lambda).unwrap();
            if n % 2 == 0 {
                assert_eq!(closed, by_type);
            } else {
                assert_ne!(closed, by_type);
            }
        }
    }
}

#[test]
fn r_word_images_are_independent() {
    for n in 1..=4 {
        assert_eq!(basis_rank(n).unwrap(), factorial(n), "n={n}");
    }
}
