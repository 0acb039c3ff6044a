//! Which Hodge numbers bound which others, with families that witness the
//! negative answers.
//!
//! `h^{r,s}` dominates `h^{p,q}` in dimension `n` if `c1·h^{r,s} + c2 >= h^{p,q}`
//! for every smooth projective `n`-fold. The only nontrivial instance is
//! `h^{1,1} > h^{2,0}` on surfaces; every other pair is either trivial (hard
//! Lefschetz or `h^{0,0} = 1`) or refuted by a family along which `h^{p,q}`
//! grows while `h^{r,s}` stays fixed.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::hypersurface::hypersurface_hodge;
use crate::constructor::{
    evaluate, middle_weight_floor, plan_middle_weight, plan_truncated, planner_constants, zc_certificate, Recipe,
};
use crate::diamond::{FormalHodgeDiamond, PartialDiamond, PrimitiveTable};
use crate::error::{Error, Result};
use crate::invariants::OracleOptions;
use crate::json::int_value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Hypersurfaces `V_d ⊂ P^{n+1}` of growing degree.
    Hypersurface,
    /// `P^n` blown up in a growing number of points.
    PointBlowups,
    /// Single-type certificates of growing level.
    ZcCertificate,
    /// Truncated diamonds with one growing entry, realized by the planner.
    TruncatedPlanner,
    /// `Y × C_g` with `Y` a single-type certificate of type `(n-1, 0)`.
    YTimesCurve,
    /// Middle-weight planner targets with one growing pair of entries.
    MiddleWeight,
    /// `Y × P^1` with `Y` of dimension `n-1`.
    YTimesP1,
    /// High-degree hyperplane sections; middle numbers are not computed.
    HyperplaneSection,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Hypersurface => "hypersurface",
            Family::PointBlowups => "point-blowups",
            Family::ZcCertificate => "single-type-certificate",
            Family::TruncatedPlanner => "truncated-planner",
            Family::YTimesCurve => "y-times-curve",
            Family::MiddleWeight => "middle-weight",
            Family::YTimesP1 => "y-times-p1",
            Family::HyperplaneSection => "hyperplane-section",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            Family::Hypersurface,
            Family::PointBlowups,
            Family::ZcCertificate,
            Family::TruncatedPlanner,
            Family::YTimesCurve,
            Family::MiddleWeight,
            Family::YTimesP1,
            Family::HyperplaneSection,
        ]
        .into_iter()
        .find(|f| f.name() == s)
    }

    /// Whether members of the family have computable Hodge numbers.
    pub fn computable(self) -> bool {
        self != Family::HyperplaneSection
    }
}

/// Answer for a normalized query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domination {
    pub n: usize,
    pub rs: (usize, usize),
    pub pq: (usize, usize),
    /// Nontrivial domination.
    pub dominates: bool,
    /// `h^{p,q}` is bounded by `h^{r,s}` for elementary reasons.
    pub trivial: bool,
    pub tag: &'static str,
    /// Families refuting domination; the first one is computable.
    pub families: Vec<Family>,
}

impl Domination {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "rs": [self.rs.0, self.rs.1],
            "pq": [self.pq.0, self.pq.1],
            "dominates": self.dominates,
            "trivial": self.trivial,
            "justification": self.tag,
            "families": self.families.iter().map(|f| f.name()).collect::<Vec<_>>(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HrsValue {
    Exact(BigInt),
    /// Independent of `j` but not computed.
    Unspecified,
}

/// Member `j` of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyWitness {
    pub family: Family,
    pub j: u32,
    pub h_rs: HrsValue,
    pub h_pq: BigInt,
    /// How the member is built.
    pub detail: Value,
}

impl FamilyWitness {
    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.name(),
            "j": self.j,
            "h_rs": match &self.h_rs {
                HrsValue::Exact(v) => int_value(v),
                HrsValue::Unspecified => json!("bounded, unspecified"),
            },
            "h_pq": int_value(&self.h_pq),
            "detail": self.detail,
        })
    }
}

/// Representative of `(a, b)` under conjugation and Serre duality with
/// `a >= b` and `a + b <= n`.
pub fn normalize(n: usize, (a, b): (usize, usize)) -> Result<(usize, usize)> {
    if a > n || b > n {
        return Err(Error::Contract(format!("indices ({a},{b}) out of range for n = {n}")));
    }
    let candidates = [(a, b), (b, a), (n - a, n - b), (n - b, n - a)];
    Ok(candidates
        .into_iter()
        .find(|&(x, y)| x >= y && x + y <= n)
        .expect("one representative lies in the lower half"))
}

pub fn dominates(n: usize, rs: (usize, usize), pq: (usize, usize)) -> Result<Domination> {
    if n == 0 {
        return Err(Error::Contract("the dimension must be positive".into()));
    }
    let (r, s) = normalize(n, rs)?;
    let (p, q) = normalize(n, pq)?;
    let answer = |dominates, trivial, tag, families: Vec<Family>| Domination {
        n,
        rs: (r, s),
        pq: (p, q),
        dominates,
        trivial,
        tag,
        families,
    };
    if (p, q) == (0, 0) || (p - q == r - s && p <= r) {
        return Ok(answer(false, true, "trivial", Vec::new()));
    }
    if n == 2 && (r, s) == (1, 1) && (p, q) == (2, 0) {
        return Ok(answer(true, false, "surface-h11-exceeds-h20", Vec::new()));
    }
    let family = if r + s < n {
        if p + q == n {
            Family::Hypersurface
        } else {
            Family::TruncatedPlanner
        }
    } else if r != s {
        if p == q {
            Family::PointBlowups
        } else {
            Family::ZcCertificate
        }
    } else if p + q == n {
        if q == 0 {
            Family::YTimesCurve
        } else {
            Family::MiddleWeight
        }
    } else {
        Family::YTimesP1
    };
    let mut families = vec![family];
    if family == Family::YTimesP1 {
        families.push(Family::HyperplaneSection);
    }
    Ok(answer(false, false, family.name(), families))
}

fn exact(d: &PartialDiamond<BigInt>, (p, q): (usize, usize)) -> Result<BigInt> {
    d.get(p, q)
        .cloned()
        .ok_or_else(|| Error::Internal(format!("h({p},{q}) of a family member is not determined")))
}

/// Primitive numbers below the middle of dimension `dim` that clear every
/// planner threshold, plus `j` at `(p, q)` and `(q, p)`.
fn planner_target(dim: usize, (p, q): (usize, usize), j: u32) -> Result<PrimitiveTable<BigInt>> {
    let mut l = PrimitiveTable::below_middle(dim, |x, y| {
        if (x, y) == (0, 0) {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    });
    for x in 1..dim.div_ceil(2) {
        l.add_at(x, x, BigInt::from(planner_constants(x, dim)?.c));
    }
    l.add_at(p, q, BigInt::from(j));
    if p != q {
        l.add_at(q, p, BigInt::from(j));
    }
    Ok(l)
}

fn planned(dim: usize, pq: (usize, usize), j: u32) -> Result<Recipe> {
    let target = planner_target(dim, pq, j)?.integrate()?;
    plan_truncated(&target).map_err(|e| Error::Internal(format!("family target rejected by the planner: {e}")))
}

/// Member `j >= 1` of `family` for the query `(n, rs, pq)`. `h_pq` is
/// strictly increasing in `j` and `h_rs` does not depend on it.
pub fn family_witness(dom: &Domination, family: Family, j: u32, opts: &OracleOptions) -> Result<FamilyWitness> {
    if dom.dominates || dom.trivial {
        return Err(Error::Contract(format!("no family refutes {} in dimension {}", dom.tag, dom.n)));
    }
    if !dom.families.contains(&family) {
        return Err(Error::Contract(format!("family {} does not apply to this query", family.name())));
    }
    if j == 0 {
        return Err(Error::Contract("family index must be at least 1".into()));
    }
    let (n, rs, pq) = (dom.n, dom.rs, dom.pq);
    let witness = |h_rs, h_pq, detail| Ok(FamilyWitness { family, j, h_rs, h_pq, detail });
    match family {
        Family::Hypersurface => {
            let d = n + 2 + j as usize;
            let v = PartialDiamond::from(&hypersurface_hodge(n, d)?);
            witness(HrsValue::Exact(exact(&v, rs)?), exact(&v, pq)?, json!({ "degree": d }))
        }
        Family::PointBlowups => {
            let x = PartialDiamond::from(&FormalHodgeDiamond::<BigInt>::projective(n).blow_up_points(u64::from(j))?);
            witness(HrsValue::Exact(exact(&x, rs)?), exact(&x, pq)?, json!({ "points": j }))
        }
        Family::ZcCertificate => {
            let z = zc_certificate(pq.0, pq.1, j, n)?;
            witness(HrsValue::Exact(BigInt::zero()), BigInt::from(z.offdiag), z.to_json())
        }
        Family::TruncatedPlanner => {
            let recipe = planned(n, pq, j)?;
            let x = evaluate::<BigInt>(&recipe, opts)?;
            witness(HrsValue::Exact(exact(&x, rs)?), exact(&x, pq)?, recipe.to_json())
        }
        Family::YTimesCurve => {
            let y = zc_certificate(n - 1, 0, 1, n - 1)?;
            witness(
                HrsValue::Unspecified,
                BigInt::from(j),
                json!({ "y": y.to_json(), "curve_genus": j }),
            )
        }
        Family::MiddleWeight => {
            let m = n / 2;
            let mut target = vec![BigInt::zero(); n + 1];
            target[m] = BigInt::from(middle_weight_floor(m));
            target[pq.1] = BigInt::from(2 * j);
            target[pq.0] = BigInt::from(2 * j);
            let recipe = plan_middle_weight(&target, n)
                .map_err(|e| Error::Internal(format!("family target rejected by the planner: {e}")))?;
            let x = evaluate::<BigInt>(&recipe, opts)?;
            witness(HrsValue::Exact(exact(&x, rs)?), exact(&x, pq)?, recipe.to_json())
        }
        Family::YTimesP1 => {
            let p1 = PartialDiamond::from(&FormalHodgeDiamond::<BigInt>::projective(1));
            if pq.0 + pq.1 == n - 1 {
                let d = n + 1 + j as usize;
                let x = PartialDiamond::from(&hypersurface_hodge(n - 1, d)?).kunneth(&p1);
                witness(HrsValue::Exact(exact(&x, rs)?), exact(&x, pq)?, json!({ "y": { "hypersurface_degree": d } }))
            } else {
                let mut recipe = planned(n - 1, pq, j)?;
                recipe.n += 1;
                recipe.projective_factor += 1;
                let x = evaluate::<BigInt>(&recipe, opts)?;
                witness(HrsValue::Exact(exact(&x, rs)?), exact(&x, pq)?, recipe.to_json())
            }
        }
        Family::HyperplaneSection => Err(Error::NotComputable(format!(
            "hyperplane-section family for h({},{}) in dimension {n}: certificate only, middle Hodge numbers are not computed",
            pq.0, pq.1
        ))),
    }
}

/// Member `j` of the first computable family refuting `h^{r,s}`
/// dominating `h^{p,q}`.
pub fn counterexample_family(
    n: usize,
    rs: (usize, usize),
    pq: (usize, usize),
    j: u32,
    opts: &OracleOptions,
) -> Result<FamilyWitness> {
    let dom = dominates(n, rs, pq)?;
    let family = dom
        .families
        .first()
        .copied()
        .ok_or_else(|| Error::Contract(format!("h({},{}) is bounded by h({},{})", dom.pq.0, dom.pq.1, dom.rs.0, dom.rs.1)))?;
    family_witness(&dom, family, j, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(n: usize) -> Vec<(usize, usize)> {
        (0..=n).flat_map(|a| (0..=a).map(move |b| (a, b))).filter(|&(a, b)| a + b <= n).collect()
    }

    #[test]
    fn only_surface_pair_dominates() {
        for n in 1..=6 {
            for rs in pairs(n) {
                for pq in pairs(n) {
                    let d = dominates(n, rs, pq).unwrap();
                    assert_eq!(d.dominates, n == 2 && rs == (1, 1) && pq == (2, 0));
                }
            }
        }
    }

    #[test]
    fn symmetric_substitutions_agree() {
        let n = 5;
        for (a, b) in pairs(n) {
            for (c, e) in pairs(n) {
                let base = dominates(n, (a, b), (c, e)).unwrap();
                for rs in [(a, b), (b, a), (n - a, n - b), (n - b, n - a)] {
                    for pq in [(c, e), (e, c), (n - c, n - e), (n - e, n - c)] {
                        assert_eq!(dominates(n, rs, pq).unwrap(), base);
                    }
                }
            }
        }
    }

    #[test]
    fn examples() {
        assert!(!dominates(2, (2, 0), (1, 1)).unwrap().dominates);
        let d = dominates(4, (2, 2), (4, 0)).unwrap();
        assert_eq!(d.families, vec![Family::YTimesCurve]);
        assert_eq!(dominates(3, (1, 1), (2, 1)).unwrap().families, vec![Family::Hypersurface]);
        assert_eq!(dominates(3, (2, 1), (1, 1)).unwrap().families, vec![Family::PointBlowups]);
    }

    #[test]
    fn blow_up_family_values() {
        let opts = OracleOptions::default();
        for j in 1..=4 {
            let w = counterexample_family(3, (2, 1), (1, 1), j, &opts).unwrap();
            assert_eq!(w.h_rs, HrsValue::Exact(BigInt::zero()));
            assert_eq!(w.h_pq, BigInt::from(1 + j));
        }
    }

    #[test]
    fn hypersurface_family_values() {
        let w = counterexample_family(3, (1, 1), (2, 1), 1, &OracleOptions::default()).unwrap();
        assert_eq!(w.h_rs, HrsValue::Exact(BigInt::one()));
        assert_eq!(w.detail["degree"], 6);
        assert_eq!(w.h_pq, hypersurface_hodge(3, 6).unwrap().get(2, 1).clone());
    }

    #[test]
    fn hyperplane_sections_are_certificate_only() {
        let d = dominates(4, (2, 2), (1, 0)).unwrap();
        assert_eq!(d.families, vec![Family::YTimesP1, Family::HyperplaneSection]);
        let err = family_witness(&d, Family::HyperplaneSection, 1, &OracleOptions::default()).unwrap_err();
        assert!(matches!(err, Error::NotComputable(_)));
    }

    #[test]
    fn families_are_monotone() {
        let opts = OracleOptions::default();
        for n in 2..=5 {
            for rs in pairs(n) {
                for pq in pairs(n) {
                    let d = dominates(n, rs, pq).unwrap();
                    if d.families.is_empty() {
                        continue;
                    }
                    let ws: Vec<FamilyWitness> =
                        (1..=3).map(|j| family_witness(&d, d.families[0], j, &opts).unwrap()).collect();
                    for pair in ws.windows(2) {
                        assert!(pair[0].h_pq < pair[1].h_pq, "n={n} rs={rs:?} pq={pq:?}");
                        assert_eq!(pair[0].h_rs, pair[1].h_rs, "n={n} rs={rs:?} pq={pq:?}");
                    }
                }
            }
        }
    }
}
