use super::{int, Relation, Report, RuleCheck};
use crate::scalar::HodgeInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceData<T> {
    pub h10: T,
    pub h20: T,
    pub h11: T,
}

impl<T: HodgeInt> SurfaceData<T> {
    pub fn b1(&self) -> T {
        int::<T>(2) * self.h10.clone()
    }

    pub fn b2(&self) -> T {
        int::<T>(2) * self.h20.clone() + self.h11.clone()
    }

    /// `c2 = 2 - 2b1 + b2`.
    pub fn c2(&self) -> T {
        int::<T>(2) - int::<T>(2) * self.b1() + self.b2()
    }

    /// `c1² = 10 - 4b1 + 10h20 - h11`.
    pub fn c1_squared(&self) -> T {
        int::<T>(10) - int::<T>(4) * self.b1() + int::<T>(10) * self.h20.clone() - self.h11.clone()
    }
}

/// `h11 > h20` holds on every Kähler surface. The sharper
/// `1 + h10 + h20 <= h11` is equivalent to `c1² <= 3c2` and is only claimed
/// for minimal surfaces of non-negative Kodaira dimension.
pub fn surface_check<T: HodgeInt>(d: &SurfaceData<T>) -> Report<T> {
    const SCOPE: &str = "holds for minimal surfaces of non-negative Kodaira dimension";
    let mut checks = Vec::new();
    checks.push(RuleCheck::compare("h11-exceeds-h20", "surface-h11-h20", d.h11.clone(), Relation::Gt, d.h20.clone()));
    checks.push(
        RuleCheck::compare(
            "hodge-inequality",
            "surface-hodge-inequality",
            T::one() + d.h10.clone() + d.h20.clone(),
            Relation::Le,
            d.h11.clone(),
        )
        .advisory(SCOPE),
    );
    checks.push(
        RuleCheck::compare("bmy", "bmy", d.c1_squared(), Relation::Le, int::<T>(3) * d.c2()).advisory(SCOPE),
    );
    Report { subject: "surface", branch: None, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inequalities::Status;

    fn data(h10: i64, h20: i64, h11: i64) -> SurfaceData<i64> {
        SurfaceData { h10, h20, h11 }
    }

    #[test]
    fn k3_passes() {
        let r = surface_check(&data(0, 1, 20));
        assert!(r.passed());
        assert_eq!(r.get("hodge-inequality").unwrap().lhs, Some(2));
    }

    #[test]
    fn h11_one_with_h20_fails() {
        let r = surface_check(&data(0, 1, 1));
        assert!(!r.passed());
        assert_eq!(r.get("hodge-inequality").unwrap().status, Status::Fail);
        for g in 1..5 {
            assert!(!surface_check(&data(0, g, 1)).passed());
        }
    }

    #[test]
    fn bmy_matches_the_hodge_inequality() {
        for h10 in 0..4 {
            for h20 in 0..4 {
                for h11 in 1..12 {
                    let r = surface_check(&data(h10, h20, h11));
                    assert_eq!(r.get("bmy").unwrap().status, r.get("hodge-inequality").unwrap().status);
                }
            }
        }
    }

    #[test]
    fn ruled_surfaces_are_not_excluded() {
        // A ruled surface over a genus 3 curve.
        assert!(surface_check(&data(3, 0, 2)).passed());
    }
}
