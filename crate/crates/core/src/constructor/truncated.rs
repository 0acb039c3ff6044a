//! Planners for truncated diamonds and Betti vectors.

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::{to_big, to_u32, to_u64, Infeasible, Recipe};
use crate::diamond::{BettiVector, PrimitiveTable, TruncatedDiamond};
use crate::error::{Error, Result};
use crate::groups::GroupSpec;
use crate::invariants::{diag_dim_aa, diag_dim_ab};
use crate::json::int_value;
use crate::scalar::HodgeInt;

type Planned = std::result::Result<Recipe, Infeasible>;

/// Genus-independent contributions to `l(p,p)` in dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlannerConstants {
    pub p: usize,
    pub n: usize,
    /// `C1(p, n, k0)` for `k0 = 1 … n-1`.
    pub c1: Vec<(usize, u128)>,
    pub c2: u128,
    /// `max(max_k0 C1, C2)`.
    pub c: u128,
}

impl PlannerConstants {
    pub fn c1_max(&self) -> u128 {
        self.c1.iter().map(|&(_, v)| v).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        let c1: Vec<Value> = self.c1.iter().map(|(k0, v)| json!({ "k0": k0, "c1": int_value(v) })).collect();
        json!({
            "p": self.p,
            "n": self.n,
            "c1": c1,
            "c1_max": int_value(&self.c1_max()),
            "c2": int_value(&self.c2),
            "c": int_value(&self.c),
        })
    }
}

/// Blocks `(a, b)` with `a ≥ b ≥ 1` and `2 < a + b < n`.
fn block_indices(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |a| (1..=a).map(move |b| (a, b))).filter(move |&(a, b)| a + b > 2 && a + b < n)
}

/// Diagonal contribution of all blocks at `(p, p)`, genera excluded.
fn block_part(p: usize, n: usize) -> u128 {
    block_indices(n)
        .map(|(a, b)| if a > b { diag_dim_ab(a - 1, b - 1, p - 1) } else { diag_dim_aa(a - 1, p - 1) })
        .sum()
}

fn c1_value(p: usize, n: usize, k0: usize) -> u128 {
    u128::from(p <= k0) + block_part(p, n)
}

fn c2_value(p: usize, n: usize) -> u128 {
    let i0 = if n >= 3 {
        (0..=p).map(|x| diag_dim_ab(n - 1, 0, x) * diag_dim_ab(n - 2, 0, p - x)).sum()
    } else {
        diag_dim_ab(n - 1, 0, p)
    };
    i0 + block_part(p, n)
}

pub fn planner_constants(p: usize, n: usize) -> Result<PlannerConstants> {
    if p == 0 || 2 * p >= n {
        return Err(Error::Contract(format!("planner constants need 1 <= p < n/2, got p = {p}, n = {n}")));
    }
    let c1: Vec<(usize, u128)> = (1..n).map(|k0| (k0, c1_value(p, n, k0))).collect();
    let c2 = c2_value(p, n);
    let c = c1.iter().map(|&(_, v)| v).max().unwrap_or(0).max(c2);
    Ok(PlannerConstants { p, n, c1, c2, c })
}

#[derive(Clone, Copy)]
enum Case {
    /// Only `h(k0,0)` may be nonzero among the outer numbers.
    Single(usize),
    /// Only `h(n-1,0)` and `h(n-2,0)` may be nonzero.
    TopTwo,
}

impl Case {
    fn threshold(self, p: usize, n: usize) -> u128 {
        match self {
            Case::Single(k0) => c1_value(p, n, k0),
            Case::TopTwo => c2_value(p, n),
        }
    }
}

fn genus<T: HodgeInt>(l: &PrimitiveTable<T>, p: usize, q: usize) -> std::result::Result<u32, Infeasible> {
    to_u32(l.get(p, q).expect("below the middle row"), &format!("l({p},{q})"))
}

fn build<T: HodgeInt>(n: usize, l: &PrimitiveTable<T>, case: Case) -> Planned {
    for p in 1..n.div_ceil(2) {
        let threshold = case.threshold(p, n);
        let value = to_big(l.get(p, p).expect("below the middle row"));
        if value < BigInt::from(threshold) {
            return Err(Infeasible::BelowThreshold { p, threshold, value });
        }
    }
    let i0 = match case {
        Case::Single(k0) => GroupSpec::gabg(k0, 0, genus(l, k0, 0)?),
        Case::TopTwo => {
            let top = GroupSpec::gabg(n - 1, 0, genus(l, n - 1, 0)?);
            if n >= 3 {
                GroupSpec::Product { parts: vec![top, GroupSpec::gabg(n - 2, 0, genus(l, n - 2, 0)?)] }
            } else {
                top
            }
        }
    };
    let mut blocks = Vec::new();
    for (a, b) in block_indices(n) {
        let g = if a > b {
            genus(l, a, b)?
        } else {
            let excess = to_big(l.get(a, a).expect("below the middle row")) - BigInt::from(case.threshold(a, n));
            to_u32(&excess, &format!("genus of block ({a},{a})"))?
        };
        blocks.push(GroupSpec::gabg(a - 1, b - 1, g));
    }
    let point_blowups = if n >= 3 {
        let excess = to_big(l.get(1, 1).expect("below the middle row")) - BigInt::from(case.threshold(1, n));
        to_u64(&excess, "point blow-ups")?
    } else {
        0
    };
    let provenance = match case {
        Case::Single(k0) => format!("truncated planner, single outer class in degree {k0}"),
        Case::TopTwo => "truncated planner, outer classes in degrees n-1 and n-2".to_string(),
    };
    Ok(Recipe::key(n, i0, blocks, point_blowups, &provenance))
}

/// `P^n` blown up in points, when `l` has that shape.
fn projective_fallback<T: HodgeInt>(n: usize, l: &PrimitiveTable<T>) -> Option<Recipe> {
    for p in 0..n {
        for q in 0..n - p {
            if (p, q) != (0, 0) && (p, q) != (1, 1) && !l.get(p, q).expect("below the middle row").is_zero() {
                return None;
            }
        }
    }
    let blowups = l.get(1, 1).map_or(Some(0), T::to_u64)?;
    Some(Recipe::projective(n, blowups, "blown-up projective space"))
}

/// A variety whose Hodge numbers off the middle row are those of `t`.
pub fn plan_truncated<T: HodgeInt>(t: &TruncatedDiamond<T>) -> Planned {
    let report = t.validate();
    if !report.is_valid() {
        let reasons: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
        return Err(Infeasible::InvalidTarget(reasons.join("; ")));
    }
    let n = t.dim();
    if n == 0 {
        return Ok(Recipe::projective(0, 0, "point"));
    }
    let l = t.primitive_numbers();
    if let Some(r) = projective_fallback(n, &l) {
        return Ok(r);
    }
    let outer: Vec<usize> = (1..n).filter(|&k| !l.get(k, 0).expect("below the middle row").is_zero()).collect();
    let top_two = outer.iter().all(|&k| k + 3 > n);
    let single = outer.len() <= 1;
    let mut last = None;
    if top_two && n >= 2 {
        match build(n, &l, Case::TopTwo) {
            Ok(r) => return Ok(r),
            Err(e) => last = Some(e),
        }
    }
    if single {
        let k0 = outer.first().copied().unwrap_or(1);
        match build(n, &l, Case::Single(k0)) {
            Ok(r) => return Ok(r),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| {
        Infeasible::OuterPattern(format!(
            "nonzero h(k,0) for k in {outer:?}; need at most one, or only k >= n-2"
        ))
    }))
}

/// The truncated diamond that puts even Betti numbers on the diagonal and
/// half of each odd Betti number next to it.
fn betti_distribution<T: HodgeInt>(b: &BettiVector<T>) -> TruncatedDiamond<T> {
    let n = b.dim();
    let two = T::from_u64_exact(2);
    let lower = |p: usize, q: usize| -> T {
        let k = p + q;
        if p == q {
            b.get(k).clone()
        } else if p.abs_diff(q) == 1 {
            b.get(k).clone() / two.clone()
        } else {
            T::zero()
        }
    };
    TruncatedDiamond::from_fn(n, |p, q| if p + q < n { lower(p, q) } else { lower(n - p, n - q) })
}

/// A variety whose Betti numbers are `b` in every degree other than `n`.
pub fn plan_betti<T: HodgeInt>(b: &BettiVector<T>) -> Planned {
    let report = b.validate();
    if !report.is_valid() {
        let reasons: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
        return Err(Infeasible::InvalidTarget(reasons.join("; ")));
    }
    plan_truncated(&betti_distribution(b))
}

/// Comparison of `b_{2k} - b_{2k-2}` with `k(n²-2n+5)/8`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiAdvisory {
    pub n: usize,
    /// `(k, b_{2k} - b_{2k-2}, k(n²-2n+5), satisfied)`.
    pub rows: Vec<(usize, BigInt, u128, bool)>,
}

impl BettiAdvisory {
    pub fn all_satisfied(&self) -> bool {
        self.rows.iter().all(|r| r.3)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|(k, diff, num, ok)| {
                json!({ "k": k, "difference": int_value(diff), "bound_times_8": int_value(num), "satisfied": ok })
            })
            .collect();
        json!({ "n": self.n, "rows": rows, "all_satisfied": self.all_satisfied() })
    }
}

pub fn betti_advisory<T: HodgeInt>(b: &BettiVector<T>) -> BettiAdvisory {
    let n = b.dim();
    let rows = (1..n.div_ceil(2))
        .map(|k| {
            let diff = to_big(b.get(2 * k)) - to_big(b.get(2 * k - 2));
            let n = n as u128;
            let num = k as u128 * (n * n - 2 * n + 5);
            let ok = diff.clone() * 8 >= BigInt::from(num);
            (k, diff, num, ok)
        })
        .collect();
    BettiAdvisory { n, rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructor::{evaluate, Ambient};
    use crate::diamond::FormalHodgeDiamond;
    use crate::invariants::OracleOptions;

    fn constants_bounds_hold(n: usize) {
        for p in 1..n.div_ceil(2) {
            let c = planner_constants(p, n).unwrap();
            let (p, n) = (p as u128, n as u128);
            assert!(4 * c.c <= p * (n * n - 2 * n + 5), "C({p},{n}) = {}", c.c);
            assert!(4 * c.c1_max() <= p * (n - 1) * (n - 1));
            assert!(4 * c.c2 <= p * (n - 1) * (n - 1) + 4 * p);
        }
    }

    #[test]
    fn constant_bounds_small_n() {
        for n in 3..=12 {
            constants_bounds_hold(n);
        }
    }

    #[test]
    fn projective_space_plans_as_itself() {
        for n in 1..=6 {
            let t = FormalHodgeDiamond::<i64>::projective(n).truncate();
            let r = plan_truncated(&t).unwrap();
            assert_eq!(r.ambient, Ambient::Projective);
            assert_eq!(r.point_blowups, 0);
        }
    }

    #[test]
    fn fourfold_with_interior_classes_uses_the_top_two_case() {
        let n = 4;
        let th = planner_constants(1, n).unwrap().c;
        let t = TruncatedDiamond::<i64>::from_fn(n, |p, q| {
            let (p, q) = if p + q < n { (p, q) } else { (n - p, n - q) };
            match (p, q) {
                (0, 0) => 1,
                (1, 1) => th as i64 + 1,
                (2, 1) | (1, 2) => 7,
                _ => 0,
            }
        });
        let r = plan_truncated(&t).unwrap();
        assert!(r.provenance.contains("n-1"));
        let d = evaluate::<i64>(&r, &OracleOptions::default()).unwrap();
        assert_eq!(d.to_truncated().unwrap(), t);
    }

    #[test]
    fn threshold_minus_one_is_reported() {
        let n = 6;
        let c1 = planner_constants(2, n).unwrap().c1;
        let th = c1[0].1;
        let t = TruncatedDiamond::<i64>::from_fn(n, |p, q| {
            let (p, q) = if p + q < n { (p, q) } else { (n - p, n - q) };
            match (p, q) {
                (0, 0) => 1,
                (1, 1) => 100,
                (2, 2) => 100 + th as i64 - 1,
                (1, 0) | (0, 1) => 1,
                (2, 1) | (1, 2) | (3, 2) | (2, 3) => 1,
                _ => 0,
            }
        });
        match plan_truncated(&t) {
            Err(Infeasible::BelowThreshold { p: 2, threshold, .. }) => assert_eq!(threshold, th),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn betti_of_projective_space() {
        let b = FormalHodgeDiamond::<i64>::projective(4).betti();
        let r = plan_betti(&b).unwrap();
        assert_eq!(r, Recipe::projective(4, 0, "blown-up projective space"));
    }
}
