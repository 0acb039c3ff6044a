use hodge_forge::{GroupElement, GroupSpec, Monomial, ProductSpace};
use proptest::prelude::*;

fn specs() -> Vec<GroupSpec> {
    vec![
        GroupSpec::gabg(2, 0, 1),
        GroupSpec::gabg(1, 1, 2),
        GroupSpec::gabg(2, 1, 1),
        GroupSpec::gabg(3, 0, 1),
    ]
}

fn apply(e: &GroupElement, space: &ProductSpace, m: &Monomial) -> (u64, Monomial) {
    let (s, out) = e.act(space, m);
    (s.exp(), out)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pullback_reverses_composition(which in 0usize..4, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), k in any::<prop::sample::Index>()) {
        let spec = &specs()[which];
        let space = spec.space();
        let group = spec.close(10_000).unwrap();
        let a = i.get(group.elements());
        let b = j.get(group.elements());
        let cells: Vec<Monomial> = (0..=space.dim())
            .flat_map(|p| (0..=space.dim()).map(move |q| (p, q)))
            .flat_map(|(p, q)| space.basis(p, q))
            .collect();
        let m = k.get(&cells);
        let (s_ab, m_ab) = apply(&a.compose(b, &space), &space, m);
        let (s_a, m_a) = apply(a, &space, m);
        let (s_b, m_ba) = apply(b, &space, &m_a);
        prop_assert_eq!(m_ab, m_ba);
        prop_assert_eq!(s_ab, (s_a + s_b) % space.modulus());
    }

    #[test]
    fn closure_is_a_group(which in 0usize..4, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let spec = &specs()[which];
        let space = spec.space();
        let group = spec.close(10_000).unwrap();
        let a = i.get(group.elements());
        let b = j.get(group.elements());
        prop_assert!(group.contains(&a.compose(b, &space)));
        prop_assert!(group.contains(&a.inverse(&space)));
        prop_assert!(a.compose(&a.inverse(&space), &space).is_identity());
    }
}

#[test]
fn orders_of_small_groups() {
    let order = |s: GroupSpec| s.close(100_000).unwrap().order();
    assert_eq!(order(GroupSpec::gabg(2, 0, 1)), 12);
    assert_eq!(order(GroupSpec::gabg(1, 1, 1)), 6);
    assert_eq!(order(GroupSpec::gabg(2, 1, 1)), 36);
    assert_eq!(order(GroupSpec::trivial(&[1, 2])), 1);
}

#[test]
fn factored_form_has_the_same_order() {
    for spec in specs() {
        let full = spec.close(100_000).unwrap().order();
        if let Some(f) = spec.factored(100_000) {
            let f = f.unwrap();
            assert_eq!(f.kernel_order(100_000).unwrap() * f.complement.order(), full, "{spec:?}");
        }
    }
}

#[test]
fn specs_round_trip_through_json() {
    for spec in specs().into_iter().chain([GroupSpec::Weight2 { n1: 2, n2: 1, g: 1 }]) {
        let text = serde_json::to_string(&spec).unwrap();
        let back: GroupSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, spec);
    }
    let v: GroupSpec = serde_json::from_str(r#"{"kind": "gabg", "a": 2, "b": 1, "g": 3}"#).unwrap();
    assert_eq!(v, GroupSpec::gabg(2, 1, 3));
}
