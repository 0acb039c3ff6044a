use hodge_forge::constructor::{
    betti_advisory, evaluate, middle_weight_floor, plan_betti, plan_middle_weight, plan_truncated, plan_weight_k,
    planner_constants, weight_floor, Ambient, Infeasible, Recipe,
};
use hodge_forge::{BettiI64, OracleOptions, PartialDiamond, PrimitiveTable, TruncatedI64};
use proptest::prelude::*;

fn eval(r: &Recipe) -> PartialDiamond<i64> {
    evaluate(r, &OracleOptions::default()).unwrap()
}

fn weight_target(k: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..5, k / 2 + 1).prop_map(move |half| {
        let mut t = vec![0i64; k + 1];
        for i in 0..=k / 2 {
            t[i] = half[i];
            t[k - i] = half[i];
        }
        if k % 2 == 0 {
            t[k / 2] += weight_floor(k / 2) as i64;
        }
        t
    })
}

/// Primitive numbers below the middle that clear every threshold, with
/// outer classes in degree `k0` only (`k0 = 0` for none).
fn feasible_primitive(n: usize) -> impl Strategy<Value = TruncatedI64> {
    (0..n, prop::collection::vec(0i64..4, n * n)).prop_map(move |(k0, raw)| {
        let mut l = PrimitiveTable::below_middle(n, |p, q| if (p, q) == (0, 0) { 1i64 } else { 0 });
        for p in 1..n {
            for q in 0..p {
                if p + q < n && (q >= 1 || p == k0) {
                    let v = raw[p * n + q];
                    l.add_at(p, q, v);
                    l.add_at(q, p, v);
                }
            }
        }
        for x in 1..n.div_ceil(2) {
            l.add_at(x, x, planner_constants(x, n).unwrap().c as i64 + raw[x]);
        }
        l.integrate().unwrap()
    })
}

fn feasible_betti(n: usize) -> impl Strategy<Value = BettiI64> {
    prop::collection::vec(0i64..4, 2 * n + 2).prop_map(move |raw| {
        let mut b = vec![0i64; 2 * n + 1];
        b[0] = 1;
        for k in 1..=n {
            let prev = if k >= 2 { b[k - 2] } else { 0 };
            b[k] = if k % 2 == 1 {
                prev + 2 * raw[k]
            } else if 2 * (k / 2) < n {
                prev + planner_constants(k / 2, n).unwrap().c as i64 + raw[k]
            } else {
                prev + raw[k]
            };
        }
        for k in n + 1..=2 * n {
            b[k] = b[2 * n - k];
        }
        BettiI64::new(n, b).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn weight_planner_round_trip((k, target, extra) in (1usize..=5).prop_flat_map(|k| (Just(k), weight_target(k), 1usize..=2))) {
        let n = (k + extra).min(6).max(k + 1);
        let r = plan_weight_k(k, &target, n).unwrap();
        let d = eval(&r);
        let row: Vec<i64> = d.row(k).into_iter().map(Option::unwrap).collect();
        prop_assert_eq!(row, target);
    }

    #[test]
    fn truncated_planner_round_trip(t in (4usize..=6).prop_flat_map(feasible_primitive)) {
        let r = plan_truncated(&t).unwrap();
        prop_assert_eq!(eval(&r).to_truncated().unwrap(), t);
    }

    #[test]
    fn betti_planner_round_trip(b in prop_oneof![feasible_betti(4), feasible_betti(6)]) {
        let n = b.dim();
        let r = plan_betti(&b).unwrap();
        let d = eval(&r);
        for k in (0..=2 * n).filter(|&k| k != n) {
            let sum: i64 = d.row(k).into_iter().map(Option::unwrap).sum();
            prop_assert_eq!(sum, *b.get(k), "degree {}", k);
        }
    }

    #[test]
    fn middle_planner_round_trip(n in 2usize..=5, raw in prop::collection::vec(0i64..3, 6)) {
        let m = n / 2;
        let mut target = vec![0i64; n + 1];
        for i in 1..=(n / 2) {
            target[i] = 2 * raw[i];
            target[n - i] = 2 * raw[i];
        }
        if n % 2 == 0 {
            let floor = middle_weight_floor(m) as i64;
            target[m] += floor + floor % 2 + 2 * raw[0];
        }
        let r = plan_middle_weight(&target, n).unwrap();
        let row: Vec<i64> = eval(&r).row(n).into_iter().map(Option::unwrap).collect();
        prop_assert_eq!(row, target);
    }
}

#[test]
fn weight_floor_is_reached_without_blow_ups() {
    for m in 1..=6 {
        let k = 2 * m;
        let mut target = vec![0i64; k + 1];
        target[m] = weight_floor(m) as i64;
        let r = plan_weight_k(k, &target, k + 1).unwrap();
        assert_eq!(r.point_blowups, 0);
        assert_eq!(eval(&r).get(m, m), Some(&(weight_floor(m) as i64)));
        target[m] -= 1;
        assert!(matches!(plan_weight_k(k, &target, k + 1), Err(Infeasible::BelowFloor { .. })));
    }
}

#[test]
fn below_threshold_is_reported() {
    let mut l = PrimitiveTable::below_middle(5, |p, q| i64::from((p, q) == (0, 0)));
    l.add_at(2, 1, 1);
    l.add_at(1, 2, 1);
    let t = l.integrate().unwrap();
    match plan_truncated(&t) {
        Err(Infeasible::BelowThreshold { p, .. }) => assert_eq!(p, 1),
        other => panic!("expected a threshold failure, got {other:?}"),
    }
}

#[test]
fn projective_targets_fall_back_to_blown_up_projective_space() {
    let t = hodge_forge::DiamondI64::projective(4).blow_up_points(3).unwrap().truncate();
    let r = plan_truncated(&t).unwrap();
    assert_eq!(r.ambient, Ambient::Projective);
    assert_eq!(r.point_blowups, 3);
    assert_eq!(eval(&r).to_truncated().unwrap(), t);
}

#[test]
fn invalid_targets_are_input_errors() {
    let e = plan_weight_k(2, &[1i64, 5, 2], 3).unwrap_err();
    assert!(e.is_input_error());
    let e = plan_middle_weight(&[0i64, 3, 0], 2).unwrap_err();
    assert!(matches!(e, Infeasible::OddEntry { .. }));
    let b = BettiI64::new(2, vec![1, 1, 2, 1, 1]).unwrap();
    assert!(plan_betti(&b).unwrap_err().is_input_error());
}

#[test]
fn betti_advisory_rows() {
    let b = BettiI64::new(4, vec![1, 0, 40, 0, 50, 0, 40, 0, 1]).unwrap();
    let adv = betti_advisory(&b);
    assert_eq!(adv.rows.len(), 1);
    assert!(adv.all_satisfied());
}

#[test]
fn recipes_round_trip_through_json() {
    let r = plan_weight_k(3, &[1i64, 2, 2, 1], 5).unwrap();
    assert_eq!(Recipe::from_json(&r.to_json()).unwrap(), r);
}
