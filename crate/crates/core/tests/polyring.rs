mod common;

use std::cmp::Ordering;
use std::collections::HashMap;

use common::{int, int_matrix, naive_det};
use lrbasis::polyring::{
    compare, determinant, determinant_restricted, json, leading_monomial, BlockCounts, Family, Integer, Matrix,
    Monomial, Polynomial, VarId, YOrder,
};
use lrbasis::Error;
use proptest::prelude::*;

fn poly(s: &str) -> Polynomial {
    s.parse().unwrap()
}

fn mono(s: &str) -> Monomial {
    s.parse().unwrap()
}

#[test]
fn arithmetic_examples() {
    let a = poly("+1*x[1,1] +1*y[1,1]");
    let b = poly("+1*x[1,1] -1*y[1,1]");
    assert_eq!(&a * &b, poly("+1*x[1,1]^2 -1*y[1,1]^2"));
    assert_eq!(&a + &Polynomial::zero(), a);
    assert_eq!(poly("+2*x[1,1]").scale(&int(3)), poly("+6*x[1,1]"));
    assert_eq!(&a - &a, Polynomial::zero());
}

#[test]
fn text_format() {
    let d = poly("+1*x[1,1]*y[2,1] -1*x[2,1]*y[1,1]");
    assert_eq!(d.to_string(), "+1*x[1,1]*y[2,1] -1*x[2,1]*y[1,1]");
    assert_eq!(Polynomial::zero().to_string(), "0");
    let big = poly("+123456789012345678901234567890*beta[1,2]^3");
    assert_eq!(big.to_string().parse::<Polynomial>().unwrap(), big);
}

#[test]
fn json_roundtrip() {
    let d = poly("+1*x[1,1]*y[2,1] -1*x[2,1]*y[1,1] +7*y[5,3]^2*alpha[1,1]");
    let v = json::to_json(&d);
    assert_eq!(json::from_json(&v).unwrap(), d);
    // graded first: the cubic term leads
    assert_eq!(v["terms"][0]["c"], "7");
    assert_eq!(v["terms"][1]["c"], "1");
    assert_eq!(v["terms"][1]["m"][0], serde_json::json!(["x", 1, 1, 1]));
    assert_eq!(v["terms"][2]["c"], "-1");
}

#[test]
fn derivative_examples() {
    let p = poly("+1*x[1,1]^2*y[2,1]");
    assert_eq!(p.partial_derivative(VarId::x(1, 1)), poly("+2*x[1,1]*y[2,1]"));
    assert!(poly("x[1,1]").partial_derivative(VarId::y(1, 1)).is_zero());
}

#[test]
fn order_examples() {
    assert_eq!(compare(&mono("y[1,1]"), &mono("y[2,1]"), &YOrder).unwrap(), Ordering::Greater);
    let a = mono("y[2,1]*y[3,2]");
    assert_eq!(compare(&a, &a, &YOrder).unwrap(), Ordering::Equal);
    // y42 is the largest variable on either side; the left has it squared
    let l = mono("y[5,3]^2*y[4,2]^2");
    let r = mono("y[5,3]*y[4,3]*y[5,2]*y[4,2]");
    assert_eq!(compare(&l, &r, &YOrder).unwrap(), Ordering::Greater);
    assert!(matches!(
        compare(&mono("x[1,1]"), &mono("y[1,1]"), &YOrder),
        Err(Error::UnorderedVariable(_))
    ));
    assert_eq!(leading_monomial(&poly("+1*y[2,1] +1*y[1,1]"), &YOrder).unwrap(), (mono("y[1,1]"), int(1)));
    assert_eq!(
        leading_monomial(&poly("-3*y[2,2]*y[1,3]"), &YOrder).unwrap(),
        (mono("y[2,2]*y[1,3]"), int(-3))
    );
    assert_eq!(leading_monomial(&Polynomial::zero(), &YOrder), Err(Error::ZeroPolynomial));
    // higher degree wins regardless of variables
    assert_eq!(compare(&mono("y[9,9]^2"), &mono("y[1,1]"), &YOrder).unwrap(), Ordering::Greater);
}

#[test]
fn determinant_examples() {
    let m = Matrix::from_rows(vec![
        vec![poly("x[1,1]"), poly("y[1,1]")],
        vec![poly("x[2,1]"), poly("y[2,1]")],
    ])
    .unwrap();
    assert_eq!(determinant(&m).unwrap(), poly("+1*x[1,1]*y[2,1] -1*x[2,1]*y[1,1]"));
    let id = int_matrix(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    assert_eq!(id.determinant().unwrap(), int(1));
    let rect = Matrix::<Integer>::zeros(2, 3);
    assert!(matches!(rect.determinant(), Err(Error::NonSquare { rows: 2, cols: 3 })));
    assert_eq!(Matrix::<Integer>::zeros(0, 0).determinant().unwrap(), int(1));
}

#[test]
fn coefficient_extraction() {
    let p = poly("+1*x[1,1]*beta[1,1] +1*y[1,1]*beta[1,1]^2");
    assert_eq!(p.coefficient_of(&mono("beta[1,1]"), &[Family::Beta]), poly("x[1,1]"));
    let q = poly("+1*x[1,1] -2*y[2,2]");
    assert_eq!(q.coefficient_of(&Monomial::one(), &[Family::Beta]), q);
    assert!(p.coefficient_of(&mono("beta[2,2]"), &[Family::Beta]).is_zero());
}

#[test]
fn evaluation_examples() {
    let p = poly("+1*x[1,1]*y[2,1] -1*x[2,1]*y[1,1]");
    let env: HashMap<VarId, Integer> = [
        (VarId::x(1, 1), int(1)),
        (VarId::y(2, 1), int(2)),
        (VarId::x(2, 1), int(3)),
        (VarId::y(1, 1), int(4)),
    ]
    .into_iter()
    .collect();
    assert_eq!(p.evaluate(&env).unwrap(), int(-10));
    let c = poly("+5 +1*x[1,1]");
    assert_eq!(c.evaluate_with(|_| Some(int(0))).unwrap(), int(5));
    assert!(matches!(p.evaluate(&HashMap::new()), Err(Error::MissingAssignment(_))));
}

// --- randomized -------------------------------------------------------------

const VARS: [&str; 6] = ["x[1,1]", "x[2,1]", "y[1,1]", "y[2,2]", "alpha[1,1]", "beta[2,1]"];

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((0..VARS.len(), 1u32..3), 0..4).prop_map(|v| {
        Monomial::from_pairs(v.into_iter().map(|(i, e)| (VARS[i].parse::<VarId>().unwrap(), e)))
    })
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((arb_monomial(), -20i64..20), 0..20)
        .prop_map(|t| Polynomial::from_terms(t.into_iter().map(|(m, c)| (m, int(c))).collect()))
}

fn arb_point() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-1_000_000i64..1_000_000, VARS.len())
}

fn at(point: &[i64]) -> impl Fn(VarId) -> Option<Integer> + '_ {
    move |v| VARS.iter().position(|s| s.parse::<VarId>().unwrap() == v).map(|i| int(point[i]))
}

fn arb_y_monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(((1usize..4, 1usize..4), 1u32..3), 0..4)
        .prop_map(|v| Monomial::from_pairs(v.into_iter().map(|((a, c), e)| (VarId::y(a, c), e))))
}

fn arb_entry() -> impl Strategy<Value = Polynomial> {
    prop_oneof![
        Just(Polynomial::zero()),
        (arb_monomial(), -3i64..4).prop_map(|(m, c)| Polynomial::term(m, int(c))),
    ]
}

fn arb_matrix(max: usize) -> impl Strategy<Value = Matrix<Polynomial>> {
    (0..=max).prop_flat_map(|n| {
        prop::collection::vec(arb_entry(), n * n).prop_map(move |e| {
            Matrix::from_rows(e.chunks(n.max(1)).take(n).map(|r| r.to_vec()).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a - &a, Polynomial::zero());
        prop_assert!(a.terms().iter().all(|(_, c)| !c.is_zero()));
        prop_assert!(a.terms().windows(2).all(|w| w[0].0 > w[1].0));
    }

    #[test]
    fn leibniz(a in arb_poly(), b in arb_poly(), v in 0..VARS.len()) {
        let v: VarId = VARS[v].parse().unwrap();
        let lhs = (&a * &b).partial_derivative(v);
        let rhs = &(&a.partial_derivative(v) * &b) + &(&a * &b.partial_derivative(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), pt in arb_point()) {
        let f = at(&pt);
        let ea = a.evaluate_with(&f).unwrap();
        let eb = b.evaluate_with(&f).unwrap();
        prop_assert_eq!((&a * &b).evaluate_with(&f).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).evaluate_with(&f).unwrap(), &ea + &eb);
    }

    #[test]
    fn y_order_is_total(a in arb_y_monomial(), b in arb_y_monomial(), c in arb_y_monomial()) {
        let ab = YOrder.compare(&a, &b).unwrap();
        prop_assert_eq!(YOrder.compare(&b, &a).unwrap(), ab.reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        let bc = YOrder.compare(&b, &c).unwrap();
        if ab == Ordering::Greater && bc == Ordering::Greater {
            prop_assert_eq!(YOrder.compare(&a, &c).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn determinant_matches_permutation_sum(m in arb_matrix(6)) {
        prop_assert_eq!(determinant(&m).unwrap(), naive_det(&m));
    }

    #[test]
    fn determinant_is_alternating(m in arb_matrix(5), i in 0usize..5, j in 0usize..5) {
        let n = m.rows();
        prop_assume!(n >= 2);
        let (i, j) = (i % n, j % n);
        prop_assume!(i != j);
        let d = determinant(&m).unwrap();
        let mut s = m.clone();
        s.swap_rows(i, j);
        prop_assert_eq!(determinant(&s).unwrap(), -&d);
        let mut rep = m.clone();
        for c in 0..n {
            rep.set(j, c, m.get(i, c).clone());
        }
        prop_assert!(determinant(&rep).unwrap().is_zero());
    }

    #[test]
    fn restricted_determinants_sum_to_the_whole(
        rows in prop::collection::vec(prop::collection::vec(-5i64..6, 5), 5),
        split_r in 0usize..=5,
        split_c in 0usize..=5,
    ) {
        let m = int_matrix(&rows)
            .with_blocks(vec![split_r, 5 - split_r], vec![split_c, 5 - split_c])
            .unwrap();
        let full = m.determinant().unwrap();
        // a permutation sends k of the first column block into the first row block
        let mut sum = Integer::ZERO;
        for k in (split_r + split_c).saturating_sub(5)..=split_c.min(split_r) {
            let counts = vec![vec![k, split_r - k], vec![split_c - k, 5 + k - split_r - split_c]];
            sum += &determinant_restricted(&m, Some(&BlockCounts { counts })).unwrap();
        }
        prop_assert_eq!(sum, full);
    }

    #[test]
    fn coefficient_extraction_reconstructs(a in arb_poly()) {
        let parts = a.expand_by(&[Family::Beta]);
        let mut back = Polynomial::zero();
        for (mu, q) in &parts {
            prop_assert_eq!(&a.coefficient_of(mu, &[Family::Beta]), q);
            back = &back + &q.mul_term(mu, &int(1));
        }
        prop_assert_eq!(back, a);
    }

    #[test]
    fn text_and_json_roundtrip(a in arb_poly()) {
        prop_assert_eq!(a.to_string().parse::<Polynomial>().unwrap(), a.clone());
        prop_assert_eq!(json::from_json(&json::to_json(&a)).unwrap(), a);
    }
}
