//! Planners for a single Hodge structure of prescribed weight.

use num_bigint::BigInt;

use super::{to_big, to_u32, to_u64, Infeasible, Recipe};
use crate::groups::GroupSpec;
use crate::scalar::HodgeInt;

type Planned = std::result::Result<Recipe, Infeasible>;

/// Value of `h(m,m)` that [`plan_weight_k`] reaches with no point blow-ups:
/// `m·⌊(m+3)/2⌋ + ⌊m/2⌋²`.
pub fn weight_floor(m: usize) -> u128 {
    let m = m as u128;
    m * ((m + 3) / 2) + (m / 2) * (m / 2)
}

/// Smallest `h(m,m)` that [`plan_middle_weight`] reaches in dimension `2m`.
pub fn middle_weight_floor(m: usize) -> u128 {
    match m {
        0 => 0,
        1 => 1,
        _ => 2 * weight_floor(m - 1),
    }
}

fn check_symmetric<T: HodgeInt>(k: usize, target: &[T]) -> std::result::Result<(), Infeasible> {
    if target.len() != k + 1 {
        return Err(Infeasible::InvalidTarget(format!(
            "a weight {k} target has {} entries, got {}",
            k + 1,
            target.len()
        )));
    }
    if let Some(i) = target.iter().position(|v| v.is_negative()) {
        return Err(Infeasible::InvalidTarget(format!("h({},{i}) is negative", k - i)));
    }
    if let Some(i) = (0..=k).find(|&i| target[i] != target[k - i]) {
        return Err(Infeasible::InvalidTarget(format!("h({},{i}) differs from h({i},{})", k - i, k - i)));
    }
    Ok(())
}

/// A variety of dimension `n > k` whose weight-`k` Hodge numbers are
/// `target = (h(k,0), …, h(0,k))`.
pub fn plan_weight_k<T: HodgeInt>(k: usize, target: &[T], n: usize) -> Planned {
    if k == 0 {
        return Err(Infeasible::InvalidTarget("the weight must be positive".into()));
    }
    check_symmetric(k, target)?;
    if n <= k {
        return Err(Infeasible::InvalidTarget(format!("the dimension {n} must exceed the weight {k}")));
    }
    let i0 = GroupSpec::gabg(k, 0, to_u32(&target[0], &format!("h({k},0)"))?);
    let blocks = (1..=(k - 1) / 2)
        .map(|i| Ok(GroupSpec::gabg(k - 2 * i, 0, to_u32(&target[i], &format!("h({},{i})", k - i))?)))
        .collect::<std::result::Result<Vec<_>, Infeasible>>()?;
    let mut point_blowups = 0;
    if k % 2 == 0 {
        let m = k / 2;
        let floor = weight_floor(m);
        let value = to_big(&target[m]);
        if value < BigInt::from(floor) {
            return Err(Infeasible::BelowFloor { m, floor, value });
        }
        point_blowups = to_u64(&(value - BigInt::from(floor)), "point blow-ups")?;
    }
    Ok(Recipe::key(n, i0, blocks, point_blowups, &format!("weight-{k} planner")))
}

/// A variety of dimension `n` whose middle Hodge numbers are `target`, all
/// even with `h(n,0) = 0`.
pub fn plan_middle_weight<T: HodgeInt>(target: &[T], n: usize) -> Planned {
    if n == 0 {
        return Err(Infeasible::InvalidTarget("the dimension must be positive".into()));
    }
    check_symmetric(n, target)?;
    let two = T::from_u64_exact(2);
    for (i, v) in target.iter().enumerate() {
        if !(v.clone() % two.clone()).is_zero() {
            return Err(Infeasible::OddEntry { at: format!("h({},{i})", n - i), value: to_big(v) });
        }
    }
    if !target[0].is_zero() {
        return Err(Infeasible::OuterPattern(format!("h({n},0) must vanish")));
    }
    match n {
        1 => Ok(Recipe::projective(1, 0, "middle-weight planner")),
        2 => {
            let h11 = to_big(&target[1]);
            if h11 < BigInt::from(1) {
                return Err(Infeasible::BelowFloor { m: 1, floor: 1, value: h11 });
            }
            let blowups = to_u64(&(h11 - 1), "point blow-ups")?;
            Ok(Recipe::projective(2, blowups, "middle-weight planner"))
        }
        _ => {
            let half: Vec<T> = target[1..n].iter().map(|v| v.clone() / two.clone()).collect();
            let mut recipe = plan_weight_k(n - 2, &half, n - 1).map_err(|e| match e {
                Infeasible::BelowFloor { m, floor, value } => Infeasible::BelowFloor {
                    m: m + 1,
                    floor: 2 * floor,
                    value: 2 * value,
                },
                other => other,
            })?;
            recipe.n = n;
            recipe.projective_factor = 1;
            recipe.provenance = "middle-weight planner".into();
            Ok(recipe)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructor::evaluate;
    use crate::invariants::OracleOptions;

    #[test]
    fn floors() {
        assert_eq!((1..=4).map(weight_floor).collect::<Vec<_>>(), vec![2, 5, 10, 16]);
        assert_eq!(middle_weight_floor(2), 4);
    }

    #[test]
    fn weight_two_round_trip() {
        let r = plan_weight_k(2, &[3i64, 2, 3], 3).unwrap();
        assert_eq!(r.point_blowups, 0);
        let d = evaluate::<i64>(&r, &OracleOptions::default()).unwrap();
        assert_eq!(d.get(2, 0), Some(&3));
        assert_eq!(d.get(1, 1), Some(&2));
    }

    #[test]
    fn weight_three_recipe() {
        let r = plan_weight_k(3, &[2i64, 5, 5, 2], 4).unwrap();
        assert_eq!(r.i0, Some(GroupSpec::gabg(3, 0, 2)));
        assert_eq!(r.blocks, vec![GroupSpec::gabg(1, 0, 5)]);
        let d = evaluate::<i64>(&r, &OracleOptions::default()).unwrap();
        assert_eq!(d.get(3, 0), Some(&2));
        assert_eq!(d.get(2, 1), Some(&5));
    }

    #[test]
    fn below_floor_reports_the_floor() {
        match plan_weight_k(4, &[0i64, 0, 4, 0, 0], 5) {
            Err(Infeasible::BelowFloor { m: 2, floor: 5, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn middle_weight_small_dimensions() {
        assert_eq!(plan_middle_weight(&[0i64, 0], 1).unwrap(), Recipe::projective(1, 0, "middle-weight planner"));
        assert_eq!(plan_middle_weight(&[0i64, 6, 0], 2).unwrap().point_blowups, 5);
        assert!(matches!(plan_middle_weight(&[0i64, 3, 0], 2), Err(Infeasible::OddEntry { .. })));
        assert!(matches!(plan_middle_weight(&[2i64, 0, 2], 2), Err(Infeasible::OuterPattern(_))));
    }

    #[test]
    fn middle_weight_threefold() {
        let r = plan_middle_weight(&[0i64, 4, 4, 0], 3).unwrap();
        let d = evaluate::<i64>(&r, &OracleOptions::default()).unwrap();
        assert_eq!(d.row(3), vec![Some(0), Some(4), Some(4), Some(0)]);
    }
}
