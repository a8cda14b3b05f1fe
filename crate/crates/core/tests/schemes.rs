use fatpoints::binomial::binom;
use fatpoints::cht::{reduction_vector_of, ReductionVector};
use fatpoints::exactlin::SpanBasis;
use fatpoints::macaulay::gmr_lift;
use fatpoints::ring::monomial_basis;
use fatpoints::scheme::{
    containment_test, random_generic_points, virtual_alpha, waldschmidt_bracket, ContainmentDirection,
    ContainmentResult,
};
use fatpoints::{Error, FatPointScheme, FieldSpec, Form, ProjectivePoint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn big() -> FieldSpec {
    FieldSpec::prime(2_147_483_647).unwrap()
}

fn generic(r: usize, seed: u64) -> Vec<ProjectivePoint> {
    random_generic_points(r, 2, big(), seed).unwrap()
}

#[test]
fn expected_dimension_bound_and_equality() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for k in 0..15 {
        let r = rng.gen_range(1..=6);
        let m: Vec<u32> = (0..r).map(|_| rng.gen_range(1..=3)).collect();
        let z = FatPointScheme::new(2, big(), generic(r, k), m.clone()).unwrap();
        let conditions: i64 = m.iter().map(|&x| binom(u64::from(x) + 1, 2) as i64).sum();
        let sum: u32 = m.iter().sum();
        for t in 0..=sum + 1 {
            let h = z.hilbert_ideal(t) as i64;
            let bound = binom(u64::from(t) + 2, 2) as i64 - conditions;
            assert!(h >= bound, "{m:?} t={t}");
            if t + 1 >= sum {
                assert_eq!(h, bound, "{m:?} t={t}");
            }
        }
    }
}

#[test]
fn single_fat_point() {
    let q = FieldSpec::Rational;
    for m in 1..=4u32 {
        let p = ProjectivePoint::from_i64(q, &[1, 2, 3]).unwrap();
        let z = FatPointScheme::new(2, q, vec![p], vec![m]).unwrap();
        for t in 0..m + 3 {
            let want = if t < m {
                0
            } else {
                binom(u64::from(t) + 2, 2) - binom(u64::from(m) + 1, 2)
            };
            assert_eq!(z.hilbert_ideal(t), want);
        }
        assert_eq!(z.alpha().degree, m);
        // m copies of a line through p
        let line = Form::homogeneous_i64(q, &[(&[0, 1, 0], 1), (&[1, 0, 0], -2)]).unwrap();
        assert!(z.points()[0].lies_on(&line));
        let tr = reduction_vector_of(&z, &vec![line; m as usize]).unwrap();
        assert_eq!(tr.vector, ReductionVector::new((1..=m).rev().collect()));
    }
    let p = ProjectivePoint::from_i64(q, &[0, 1, 0]).unwrap();
    let z = FatPointScheme::new(2, q, vec![p], vec![3]).unwrap();
    assert_eq!(z.hilbert_function().unwrap().values(), &[1, 3, 6]);
    assert_eq!(z.hilbert_function().unwrap().eventual_value(), 6);
}

#[test]
fn conditions_matrix_shapes() {
    let q = FieldSpec::Rational;
    let p = ProjectivePoint::from_i64(q, &[1, 1, 0]).unwrap();
    let double = FatPointScheme::new(2, q, vec![p.clone()], vec![2]).unwrap();
    let m = double.conditions_matrix(1);
    assert_eq!((m.rows(), m.cols(), m.rank()), (3, 3, 3));
    let single = FatPointScheme::reduced(2, q, vec![p]).unwrap();
    let m = single.conditions_matrix(1);
    assert_eq!((m.rows(), m.cols(), m.rank()), (1, 3, 1));
}

#[test]
fn generic_points() {
    assert_eq!(generic(5, 11), generic(5, 11));
    for seed in 0..3 {
        let z = FatPointScheme::reduced(2, big(), generic(5, seed)).unwrap();
        assert_eq!(z.hilbert_ideal(2), 1);
        let z = FatPointScheme::uniform(2, big(), generic(3, seed), 2).unwrap();
        assert_eq!(z.alpha().degree, 3);
    }
    assert!(matches!(
        random_generic_points(3, 2, FieldSpec::prime(101).unwrap(), 0),
        Err(Error::FieldSize(_))
    ));
    assert!(matches!(random_generic_points(0, 2, big(), 0), Err(Error::Argument(_))));
}

#[test]
fn alpha_of_symbolic_powers() {
    for seed in 0..3 {
        for r in 3..=6 {
            let z = FatPointScheme::reduced(2, big(), generic(r, 20 + seed)).unwrap();
            let alpha: Vec<u32> = (1..=4)
                .map(|m| z.symbolic_power(m).unwrap().alpha().degree)
                .collect();
            for a in 1..=2usize {
                for b in 1..=2usize {
                    assert!(alpha[a + b - 1] <= alpha[a - 1] + alpha[b - 1], "r={r} {alpha:?}");
                }
            }
            for (b, c) in [(1usize, 2usize), (1, 3), (1, 4), (2, 2)] {
                let (lhs, rhs) = (alpha[b * c - 1] * b as u32, alpha[b - 1] * (b * c) as u32);
                assert!(lhs <= rhs, "r={r} {alpha:?}");
            }
        }
    }
}

#[test]
fn virtual_alpha_approaches_root() {
    for s in 9u64..=30 {
        let best = (1..=12u64)
            .map(|m| virtual_alpha(s, m) as f64 / m as f64)
            .fold(f64::INFINITY, f64::min);
        assert!(best > (s as f64).sqrt() - 0.1, "s={s}: {best}");
        for m in 1..=12u64 {
            // independent scan
            let t = (0..).find(|&t: &u64| (t + 2) * (t + 1) / 2 > s * m * (m + 1) / 2).unwrap();
            assert_eq!(virtual_alpha(s, m), t);
        }
    }
}

#[test]
fn bracket_budget_names_m() {
    let z = FatPointScheme::reduced(2, big(), generic(4, 1)).unwrap();
    match waldschmidt_bracket(&z, 3, 5) {
        Err(Error::Budget(msg)) => assert!(msg.contains("m = 3"), "{msg}"),
        other => panic!("{other:?}"),
    }
    let b = waldschmidt_bracket(&z, 2, 10).unwrap();
    assert_eq!(b.upper, num_rational::Rational64::from_integer(2));
}

#[test]
fn generators() {
    let q = FieldSpec::Rational;
    let p = ProjectivePoint::from_i64(q, &[1, 0, 0]).unwrap();
    let one = FatPointScheme::reduced(2, q, vec![p.clone()]).unwrap();
    let g = one.minimal_generators(None);
    assert_eq!(g.iter().map(Form::degree).collect::<Vec<_>>(), vec![1, 1]);
    let p2 = ProjectivePoint::from_i64(q, &[0, 1, 0]).unwrap();
    let two = FatPointScheme::reduced(2, q, vec![p, p2]).unwrap();
    let mut degs: Vec<u32> = two.minimal_generators(None).iter().map(Form::degree).collect();
    degs.sort_unstable();
    assert_eq!(degs, vec![1, 2]);
}

#[test]
fn lifted_generators_generate() {
    let f = FieldSpec::prime(32003).unwrap();
    let lift = gmr_lift(&[1, 3, 6, 9, 10, 11, 11], f).unwrap();
    let z = lift.scheme(f).unwrap();
    for t in 0..=8u32 {
        let basis = monomial_basis(3, t);
        let mut span = SpanBasis::new(f, basis.len());
        for g in &lift.generators {
            if g.degree() > t {
                continue;
            }
            for m in monomial_basis(3, t - g.degree()) {
                span.insert(&g.mul_monomial(&m).coefficients(&basis));
            }
        }
        assert_eq!(span.rank() as u64, z.hilbert_ideal(t), "t={t}");
    }
}

#[test]
fn containment_examples() {
    for seed in 0..3 {
        let z = FatPointScheme::reduced(2, big(), generic(3, seed)).unwrap();
        let ord = |m, r| containment_test(&z, m, r, ContainmentDirection::OrdinaryInSymbolic, None).unwrap();
        assert!(ord(2, 2).holds());
        assert!(!ord(3, 2).holds());
        match containment_test(&z, 2, 2, ContainmentDirection::SymbolicInOrdinary, None).unwrap() {
            ContainmentResult::Fails { degree, witness } => {
                assert_eq!(degree, 3);
                assert!(z.symbolic_power(2).unwrap().contains(&witness));
            }
            other => panic!("{other:?}"),
        }
    }
}
