//! Construction plans: recipes that describe a variety as a section of a
//! blown-up quotient (the key construction) or a blown-up projective space,
//! planners that produce them from target Hodge data, and an evaluator that
//! recomputes the Hodge numbers of a recipe.

mod truncated;
mod weight;
mod zc;

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::diamond::{FormalHodgeDiamond, PartialDiamond, PrimitiveTable};
use crate::error::{Error, Result};
use crate::groups::GroupSpec;
use crate::invariants::{block_table, InvariantTable, OracleOptions};
use crate::json::int_value;
use crate::scalar::HodgeInt;

pub use truncated::{betti_advisory, plan_betti, plan_truncated, planner_constants, BettiAdvisory, PlannerConstants};
pub use weight::{middle_weight_floor, plan_middle_weight, plan_weight_k, weight_floor};
pub use zc::{zc_certificate, ZcCertificate, ZcNode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ambient {
    /// A complete-intersection section of the blown-up quotient of
    /// `T_{i0} × P(V)`; only cohomology below the middle degree is controlled.
    Key,
    /// Projective space of dimension `n - projective_factor`.
    Projective,
}

/// A construction plan.
///
/// The variety is `X × P^r` with `r = projective_factor`, where `X` has
/// dimension `n - r` and comes from `ambient`, followed by `point_blowups`
/// blow-ups of points on `X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recipe {
    pub n: usize,
    pub ambient: Ambient,
    /// The block whose invariants enter unshifted. `None` is a point.
    #[serde(default)]
    pub i0: Option<GroupSpec>,
    /// Blocks whose invariants enter shifted by `(1, 1)`.
    #[serde(default)]
    pub blocks: Vec<GroupSpec>,
    #[serde(default)]
    pub point_blowups: u64,
    #[serde(default)]
    pub projective_factor: usize,
    #[serde(default)]
    pub provenance: String,
    /// Geometric preconditions taken on trust rather than computed.
    #[serde(default)]
    pub assumptions: Vec<String>,
}

pub(crate) const FIXED_POINT_ASSUMPTION: &str =
    "the i0 group fixes a point of its product, so every block embeds equivariantly";

impl Recipe {
    pub fn projective(n: usize, point_blowups: u64, provenance: &str) -> Self {
        Self {
            n,
            ambient: Ambient::Projective,
            i0: None,
            blocks: Vec::new(),
            point_blowups,
            projective_factor: 0,
            provenance: provenance.to_string(),
            assumptions: Vec::new(),
        }
    }

    pub(crate) fn key(n: usize, i0: GroupSpec, blocks: Vec<GroupSpec>, point_blowups: u64, provenance: &str) -> Self {
        Self {
            n,
            ambient: Ambient::Key,
            i0: Some(i0),
            blocks,
            point_blowups,
            projective_factor: 0,
            provenance: provenance.to_string(),
            assumptions: vec![FIXED_POINT_ASSUMPTION.to_string()],
        }
    }

    /// Dimension of the factor that is not projective space.
    pub fn base_dim(&self) -> Result<usize> {
        self.n
            .checked_sub(self.projective_factor)
            .ok_or_else(|| Error::Contract(format!("projective factor {} exceeds n = {}", self.projective_factor, self.n)))
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("recipes serialize")
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::Malformed(format!("recipe: {e}")))
    }
}

/// Why a planner could not produce a recipe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infeasible {
    /// The target itself is malformed (wrong length, asymmetric, negative, ...).
    InvalidTarget(String),
    /// The vanishing pattern of the outer numbers `h(k,0)` is not supported.
    OuterPattern(String),
    /// A diagonal primitive number is below the construction's threshold.
    BelowThreshold { p: usize, threshold: u128, value: BigInt },
    /// The middle Hodge number of an even weight is below the floor.
    BelowFloor { m: usize, floor: u128, value: BigInt },
    /// A value must be even.
    OddEntry { at: String, value: BigInt },
    /// A value does not fit the construction's parameter range.
    OutOfRange(String),
}

impl Infeasible {
    /// Whether the failure lies in the input rather than in the construction.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Infeasible::InvalidTarget(_) | Infeasible::OutOfRange(_))
    }

    pub fn to_json(&self) -> Value {
        match self {
            Infeasible::InvalidTarget(r) => json!({ "kind": "invalid_target", "reason": r }),
            Infeasible::OuterPattern(r) => json!({ "kind": "outer_pattern", "reason": r }),
            Infeasible::BelowThreshold { p, threshold, value } => json!({
                "kind": "below_threshold", "p": p,
                "threshold": int_value(threshold), "value": int_value(value),
                "reason": self.to_string(),
            }),
            Infeasible::BelowFloor { m, floor, value } => json!({
                "kind": "below_floor", "m": m,
                "floor": int_value(floor), "value": int_value(value),
                "reason": self.to_string(),
            }),
            Infeasible::OddEntry { at, value } => json!({
                "kind": "odd_entry", "at": at, "value": int_value(value), "reason": self.to_string(),
            }),
            Infeasible::OutOfRange(r) => json!({ "kind": "out_of_range", "reason": r }),
        }
    }
}

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infeasible::InvalidTarget(r) => write!(f, "invalid target: {r}"),
            Infeasible::OuterPattern(r) => write!(f, "unsupported outer pattern: {r}"),
            Infeasible::BelowThreshold { p, threshold, value } => {
                write!(f, "l({p},{p}) = {value} is below the threshold {threshold}")
            }
            Infeasible::BelowFloor { m, floor, value } => write!(f, "h({m},{m}) = {value} is below the floor {floor}"),
            Infeasible::OddEntry { at, value } => write!(f, "{at} = {value} must be even"),
            Infeasible::OutOfRange(r) => write!(f, "out of range: {r}"),
        }
    }
}

pub(crate) fn to_big<T: HodgeInt>(v: &T) -> BigInt {
    v.to_string().parse().expect("integers print as integers")
}

pub(crate) fn to_u32<T: HodgeInt>(v: &T, what: &str) -> std::result::Result<u32, Infeasible> {
    v.to_u32()
        .ok_or_else(|| Infeasible::OutOfRange(format!("{what} = {v} must be a genus between 0 and {}", u32::MAX)))
}

pub(crate) fn to_u64<T: HodgeInt>(v: &T, what: &str) -> std::result::Result<u64, Infeasible> {
    v.to_u64().ok_or_else(|| Infeasible::OutOfRange(format!("{what} = {v} must fit in 64 bits")))
}

fn from_u128<T: HodgeInt>(v: u128) -> T {
    T::from_u128(v).expect("scalar type too narrow for value")
}

/// Primitive numbers of the key construction in dimension `n`:
/// `l(p,q) = i0(p,q) + Σ block(p-1,q-1)` for `p + q < n`.
pub fn key_construction<T: HodgeInt>(i0: &InvariantTable, blocks: &[InvariantTable], n: usize) -> PrimitiveTable<T> {
    PrimitiveTable::below_middle(n, |p, q| {
        let shifted: u128 = blocks
            .iter()
            .map(|t| t.at(p as isize - 1, q as isize - 1))
            .sum();
        from_u128(i0.get(p, q) + shifted)
    })
}

/// Recomputes the Hodge numbers a recipe promises. Cells the construction
/// does not control are `None`.
pub fn evaluate<T: HodgeInt>(recipe: &Recipe, opts: &OracleOptions) -> Result<PartialDiamond<T>> {
    let d = recipe.base_dim()?;
    let base: PartialDiamond<T> = match recipe.ambient {
        Ambient::Projective => {
            if recipe.i0.is_some() || !recipe.blocks.is_empty() {
                return Err(Error::Contract("a projective recipe has no blocks".into()));
            }
            let x = FormalHodgeDiamond::<T>::projective(d).blow_up_points(recipe.point_blowups)?;
            PartialDiamond::from(&x)
        }
        Ambient::Key => {
            if d == 0 {
                return Err(Error::Contract("the key construction needs positive dimension".into()));
            }
            let i0 = match &recipe.i0 {
                Some(spec) => block_table(spec, opts)?,
                None => InvariantTable::of_space(&crate::cohomology::ProductSpace::point()),
            };
            let tables = recipe
                .blocks
                .par_iter()
                .map(|spec| block_table(spec, opts))
                .collect::<Result<Vec<_>>>()?;
            let mut l = key_construction::<T>(&i0, &tables, d);
            if d > 2 {
                l.add_at(1, 1, T::from_u64_exact(recipe.point_blowups));
            }
            PartialDiamond::from(&l.integrate()?)
        }
    };
    if recipe.projective_factor == 0 {
        Ok(base)
    } else {
        Ok(base.kunneth(&PartialDiamond::from(&FormalHodgeDiamond::projective(recipe.projective_factor))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_curve_block_gives_a_weight_one_structure() {
        let i0 = InvariantTable::of_space(&crate::cohomology::ProductSpace::new(&[4]));
        let l = key_construction::<i64>(&i0, &[], 2);
        assert_eq!(l.get(1, 0), Some(&4));
        assert_eq!(l.get(0, 0), Some(&1));
    }

    #[test]
    fn key_construction_shifts_blocks() {
        let opts = OracleOptions::default();
        let i0 = block_table(&GroupSpec::gabg(3, 0, 2), &opts).unwrap();
        let block = block_table(&GroupSpec::gabg(1, 0, 5), &opts).unwrap();
        let l = key_construction::<i64>(&i0, &[block], 4);
        assert_eq!(l.get(3, 0), Some(&2));
        assert_eq!(l.get(2, 1), Some(&5));
    }

    #[test]
    fn point_recipe_is_projective_below_the_middle() {
        let r = Recipe {
            n: 4,
            ambient: Ambient::Key,
            i0: None,
            blocks: vec![],
            point_blowups: 0,
            projective_factor: 0,
            provenance: String::new(),
            assumptions: vec![],
        };
        let d = evaluate::<i64>(&r, &OracleOptions::default()).unwrap();
        for p in 0..=4 {
            for q in 0..=4 {
                if p + q != 4 {
                    assert_eq!(d.get(p, q), Some(&i64::from(p == q)));
                } else {
                    assert_eq!(d.get(p, q), None);
                }
            }
        }
    }

    #[test]
    fn recipes_round_trip_through_json() {
        let r = Recipe::key(5, GroupSpec::gabg(2, 0, 3), vec![GroupSpec::gabg(2, 1, 4)], 7, "test");
        assert_eq!(Recipe::from_json(&r.to_json()).unwrap(), r);
    }
}
