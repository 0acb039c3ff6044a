use hodge_forge::{BigInt, Diamond, DiamondI64, FormalHodgeDiamond, Predicate, Truncated};
use proptest::prelude::*;

/// A diamond assembled from nonnegative symmetric primitive numbers, which
/// satisfies every predicate by construction.
fn from_primitive(n: usize, l: &[Vec<i64>]) -> DiamondI64 {
    let lower = |p: usize, q: usize| -> i64 { (0..=p.min(q)).map(|s| l[p - s][q - s]).sum() };
    FormalHodgeDiamond::from_fn(n, |p, q| if p + q <= n { lower(p, q) } else { lower(n - p, n - q) })
}

fn diamond(max_n: usize) -> impl Strategy<Value = DiamondI64> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0i64..6, (n + 1) * (n + 1)).prop_map(move |raw| {
            let mut l = vec![vec![0i64; n + 1]; n + 1];
            for p in 0..=n {
                for q in 0..=n {
                    let (a, b) = (p.max(q), p.min(q));
                    l[p][q] = raw[a * (n + 1) + b];
                }
            }
            l[0][0] = 1;
            from_primitive(n, &l)
        })
    })
}

fn betti_by_hand(d: &DiamondI64) -> Vec<i64> {
    let n = d.dim();
    (0..=2 * n)
        .map(|k| (0..=n).filter(|&p| k >= p && k - p <= n).map(|p| *d.get(p, k - p)).sum())
        .collect()
}

fn to_big(d: &DiamondI64) -> Diamond {
    FormalHodgeDiamond::from_fn(d.dim(), |p, q| BigInt::from(*d.get(p, q)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn generated_diamonds_are_valid(d in diamond(5)) {
        prop_assert!(d.validate().is_valid());
        prop_assert!(d.betti().validate().is_valid());
    }

    #[test]
    fn betti_numbers_are_row_sums(d in diamond(5)) {
        prop_assert_eq!(d.betti().as_slice().to_vec(), betti_by_hand(&d));
        let euler: i64 = betti_by_hand(&d).iter().enumerate().map(|(k, b)| if k % 2 == 0 { *b } else { -*b }).sum();
        prop_assert_eq!(d.euler_number(), euler);
    }

    #[test]
    fn kunneth_convolves_betti_numbers(x in diamond(3), y in diamond(3)) {
        let z = x.kunneth(&y);
        prop_assert!(z.validate().is_valid());
        let (bx, by) = (betti_by_hand(&x), betti_by_hand(&y));
        let mut conv = vec![0i64; bx.len() + by.len() - 1];
        for (i, a) in bx.iter().enumerate() {
            for (j, b) in by.iter().enumerate() {
                conv[i + j] += a * b;
            }
        }
        prop_assert_eq!(z.betti().as_slice().to_vec(), conv);
        prop_assert_eq!(z.euler_number(), x.euler_number() * y.euler_number());
    }

    #[test]
    fn scalar_choice_does_not_matter(x in diamond(3), y in diamond(3)) {
        prop_assert_eq!(to_big(&x.kunneth(&y)), to_big(&x).kunneth(&to_big(&y)));
    }

    #[test]
    fn point_blow_ups_add_to_the_inner_diagonal(d in diamond(5), c in 0u64..5) {
        prop_assume!(d.dim() >= 2);
        let b = d.blow_up_points(c).unwrap();
        prop_assert!(b.validate().is_valid());
        let n = d.dim();
        for p in 0..=n {
            for q in 0..=n {
                let extra = if p == q && p >= 1 && p < n { c as i64 } else { 0 };
                prop_assert_eq!(*b.get(p, q), *d.get(p, q) + extra);
            }
        }
    }

    #[test]
    fn blow_up_adds_euler_number_of_the_exceptional_divisor(x in diamond(4), z in diamond(2)) {
        prop_assume!(x.dim() >= z.dim() + 2);
        let r = x.dim() - z.dim();
        let b = x.blow_up(&z, r).unwrap();
        prop_assert!(b.validate().is_valid());
        prop_assert_eq!(b.euler_number(), x.euler_number() + (r as i64 - 1) * z.euler_number());
    }

    #[test]
    fn primitive_numbers_integrate_back(d in diamond(6)) {
        let t = d.truncate();
        prop_assert_eq!(t.primitive_numbers().integrate().unwrap(), t.clone());
        prop_assert!(t.validate().is_valid());
    }

    #[test]
    fn json_round_trip(d in diamond(4)) {
        let big = to_big(&d);
        prop_assert_eq!(Diamond::from_json(&big.to_json()).unwrap(), big.clone());
        let t = big.truncate();
        prop_assert_eq!(Truncated::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn broken_symmetry_is_reported(d in diamond(4), bump in 1i64..4) {
        prop_assume!(d.dim() >= 1);
        let n = d.dim();
        let broken = FormalHodgeDiamond::from_fn(n, |p, q| d.get(p, q) + if (p, q) == (1, 0) { bump } else { 0 });
        let report = broken.validate();
        prop_assert!(report.violates(Predicate::ConjugateSymmetry));
    }
}

#[test]
fn known_varieties() {
    let k3 = DiamondI64::new(2, vec![vec![1, 0, 1], vec![0, 20, 0], vec![1, 0, 1]]).unwrap();
    assert!(k3.validate().is_valid());
    assert_eq!(k3.euler_number(), 24);
    let p2 = DiamondI64::projective(2);
    assert_eq!(p2.blow_up_points(1).unwrap().get(1, 1), &2);
    let e = DiamondI64::curve(1);
    assert_eq!(e.kunneth(&e).get(1, 1), &4);
}

#[test]
fn malformed_tables_are_rejected() {
    assert!(DiamondI64::new(2, vec![vec![1, 0], vec![0, 1]]).is_err());
    let bad = DiamondI64::new(1, vec![vec![2, 0], vec![0, 1]]).unwrap();
    assert!(bad.validate().violates(Predicate::Connectivity));
    assert!(Diamond::from_json(&serde_json::json!({"n": 1, "h": [[1, 0]]})).is_err());
}
