use super::{int, Relation, Report, RuleCheck};
use crate::scalar::HodgeInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Canonical {
    AntiAmple,
    Trivial,
    Ample,
}

impl Canonical {
    pub fn name(self) -> &'static str {
        match self {
            Canonical::AntiAmple => "anti-ample",
            Canonical::Trivial => "trivial",
            Canonical::Ample => "ample",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "anti-ample" | "anti_ample" | "fano" => Some(Canonical::AntiAmple),
            "trivial" => Some(Canonical::Trivial),
            "ample" => Some(Canonical::Ample),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourfoldChern<T> {
    pub c1_4: Option<T>,
    pub c1_2c2: Option<T>,
    pub c1c3: Option<T>,
    pub c2_2: Option<T>,
    pub c4: Option<T>,
}

impl<T> Default for FourfoldChern<T> {
    fn default() -> Self {
        Self { c1_4: None, c1_2c2: None, c1c3: None, c2_2: None, c4: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourfoldData<T> {
    pub h10: T,
    pub h20: T,
    pub h30: T,
    pub h40: T,
    pub h11: T,
    pub h21: T,
    pub h31: T,
    pub h22: T,
    pub chern: FourfoldChern<T>,
    pub canonical: Option<Canonical>,
}

impl<T: HodgeInt> FourfoldData<T> {
    #[allow(clippy::too_many_arguments)]
    pub fn hodge(h10: T, h20: T, h30: T, h40: T, h11: T, h21: T, h31: T, h22: T) -> Self {
        Self { h10, h20, h30, h40, h11, h21, h31, h22, chern: FourfoldChern::default(), canonical: None }
    }

    /// `χ(Ω^p)` for `p = 0..=4`.
    pub fn chi(&self) -> [T; 5] {
        let chi0 = T::one() - self.h10.clone() + self.h20.clone() - self.h30.clone() + self.h40.clone();
        let chi1 = self.h10.clone() - self.h11.clone() + self.h21.clone() - self.h31.clone() + self.h30.clone();
        let chi2 = int::<T>(2) * self.h20.clone() - int::<T>(2) * self.h21.clone() + self.h22.clone();
        [chi0.clone(), chi1.clone(), chi2, chi1, chi0]
    }

    /// Topological Euler number from the diamond.
    pub fn euler(&self) -> T {
        let [c0, c1, c2, _, _] = self.chi();
        int::<T>(2) * c0 - int::<T>(2) * c1 + c2
    }

    /// `c1c3 - (12χ2 - 36χ3 + 72χ4 - 14c4)`, zero on every compact Kähler
    /// fourfold.
    pub fn libgober_wood_residual(&self) -> Option<T> {
        let c1c3 = self.chern.c1c3.clone()?;
        let [_, _, chi2, chi3, chi4] = self.chi();
        let c4 = self.euler();
        Some(c1c3 - (int::<T>(12) * chi2 - int::<T>(36) * chi3 + int::<T>(72) * chi4 - int::<T>(14) * c4))
    }

    /// `(-c4 + c1c3 + 3c2² + 4c1²c2 - c1⁴) - 720χ(O)`.
    pub fn riemann_roch_residual(&self) -> Option<T> {
        let c = &self.chern;
        let (c1_4, c1_2c2, c1c3, c2_2) = (c.c1_4.clone()?, c.c1_2c2.clone()?, c.c1c3.clone()?, c.c2_2.clone()?);
        let c4 = c.c4.clone().unwrap_or_else(|| self.euler());
        let todd = -c4 + c1c3 + int::<T>(3) * c2_2 + int::<T>(4) * c1_2c2 - c1_4;
        Some(todd - int::<T>(720) * self.chi()[0].clone())
    }

    /// `224 + 228h20 - 224h30 + h22 - 2h31 + 226h40`.
    pub fn picard_one_hodge_side(&self) -> T {
        int::<T>(224) + int::<T>(228) * self.h20.clone() - int::<T>(224) * self.h30.clone() + self.h22.clone()
            - int::<T>(2) * self.h31.clone()
            + int::<T>(226) * self.h40.clone()
    }

    /// `52 + 40h20 - 4h21 - 2h22 - 52h30 + 8h31 + 44h40`, zero when the
    /// canonical class is trivial and `h11 = 1`, `h10 = 0`.
    pub fn k_trivial_residual(&self) -> T {
        int::<T>(52) + int::<T>(40) * self.h20.clone() - int::<T>(4) * self.h21.clone() - int::<T>(2) * self.h22.clone()
            - int::<T>(52) * self.h30.clone()
            + int::<T>(8) * self.h31.clone()
            + int::<T>(44) * self.h40.clone()
    }
}

pub fn fourfold_check<T: HodgeInt>(d: &FourfoldData<T>) -> Report<T> {
    let mut checks = Vec::new();
    let c = &d.chern;

    match d.libgober_wood_residual() {
        Some(r) => checks.push(RuleCheck::compare("libgober-wood", "libgober-wood", r, Relation::Eq, T::zero())),
        None => checks.push(RuleCheck::not_applicable("libgober-wood", "libgober-wood", Relation::Eq, "no c1c3 given")),
    }
    match d.riemann_roch_residual() {
        Some(r) => checks.push(RuleCheck::compare("riemann-roch", "riemann-roch", r, Relation::Eq, T::zero())),
        None => checks.push(RuleCheck::not_applicable(
            "riemann-roch",
            "riemann-roch",
            Relation::Eq,
            "needs c1^4, c1^2c2, c1c3 and c2^2",
        )),
    }
    match &c.c4 {
        Some(v) => checks.push(RuleCheck::compare("euler-number", "euler", v.clone(), Relation::Eq, d.euler())),
        None => checks.push(RuleCheck::not_applicable("euler-number", "euler", Relation::Eq, "no c4 given")),
    }

    let residual = RuleCheck::compare("k-trivial-identity", "k-trivial-identity", d.k_trivial_residual(), Relation::Eq, T::zero());
    checks.push(if d.canonical != Some(Canonical::Trivial) {
        residual.inapplicable_because("only constrained when the canonical class is trivial")
    } else if !(d.h11.is_one() && d.h10.is_zero()) {
        residual.inapplicable_because("identity assumes h11 = 1 and h10 = 0")
    } else {
        residual
    });

    let picard_one = d.h11.is_one();
    if picard_one {
        checks.push(RuleCheck::compare("odd-betti-vanishing", "odd-betti-vanishing", d.h10.clone(), Relation::Eq, T::zero()));
        let lhs = int::<T>(3) * d.picard_one_hodge_side();
        let rhs = match (d.canonical, &c.c1_4, &c.c1_2c2) {
            (Some(Canonical::Trivial), _, _) => Some(T::zero()),
            (_, Some(c1_4), Some(c1_2c2)) => Some(int::<T>(4) * c1_2c2.clone() - c1_4.clone()),
            _ => None,
        };
        match rhs {
            Some(rhs) => checks.push(RuleCheck::compare("picard-one-bound", "picard-one-bound", lhs, Relation::Ge, rhs)),
            None => checks.push(RuleCheck::not_applicable(
                "picard-one-bound",
                "picard-one-bound",
                Relation::Ge,
                "needs c1^4 and c1^2c2 unless the canonical class is trivial",
            )),
        }
        checks.push(RuleCheck::not_applicable(
            "second-betti-one",
            "picard-one-bound",
            Relation::Le,
            "b3 is bounded linearly in b4 when b2 = 1; no explicit constant is checked",
        ));
    } else {
        checks.push(RuleCheck::not_applicable("odd-betti-vanishing", "odd-betti-vanishing", Relation::Eq, "needs h11 = 1"));
        checks.push(RuleCheck::not_applicable("picard-one-bound", "picard-one-bound", Relation::Ge, "needs h11 = 1"));
    }

    if d.canonical == Some(Canonical::Ample) {
        match (&c.c1_4, &c.c1_2c2) {
            (Some(c1_4), Some(c1_2c2)) => checks.push(RuleCheck::compare(
                "miyaoka-yau",
                "yau",
                int::<T>(5) * c1_2c2.clone(),
                Relation::Ge,
                int::<T>(2) * c1_4.clone(),
            )),
            _ => checks.push(RuleCheck::not_applicable("miyaoka-yau", "yau", Relation::Ge, "needs c1^4 and c1^2c2")),
        }
        match (&c.c1_4, picard_one) {
            (Some(c1_4), true) => checks.push(RuleCheck::compare(
                "ample-picard-one-bound",
                "picard-one-bound",
                int::<T>(5) * d.picard_one_hodge_side(),
                Relation::Ge,
                c1_4.clone(),
            )),
            _ => checks.push(RuleCheck::not_applicable(
                "ample-picard-one-bound",
                "picard-one-bound",
                Relation::Ge,
                "needs h11 = 1 and c1^4",
            )),
        }
    }

    Report { subject: "fourfold", branch: d.canonical.map(Canonical::name), checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inequalities::Status;

    fn sextic() -> FourfoldData<i64> {
        let mut d = FourfoldData::hodge(0, 0, 0, 1, 1, 0, 426, 1752);
        d.canonical = Some(Canonical::Trivial);
        d
    }

    #[test]
    fn sextic_fourfold() {
        let d = sextic();
        assert_eq!(d.euler(), 2610);
        assert_eq!(d.k_trivial_residual(), 0);
        let r = fourfold_check(&d);
        assert!(r.passed());
        assert_eq!(r.get("picard-one-bound").unwrap().status, Status::Pass);
    }

    #[test]
    fn all_zero_residual_is_52() {
        let d = FourfoldData::hodge(0i64, 0, 0, 0, 0, 0, 0, 0);
        assert_eq!(d.k_trivial_residual(), 52);
        let r = fourfold_check(&d);
        assert_eq!(r.get("k-trivial-identity").unwrap().status, Status::NotApplicable);
        assert_eq!(r.get("k-trivial-identity").unwrap().lhs, Some(52));
    }

    #[test]
    fn projective_four_space_chern_numbers() {
        // c(P^4) = (1+h)^5.
        let mut d = FourfoldData::hodge(0i64, 0, 0, 0, 1, 0, 0, 1);
        d.chern = FourfoldChern { c1_4: Some(625), c1_2c2: Some(250), c1c3: Some(50), c2_2: Some(100), c4: Some(5) };
        d.canonical = Some(Canonical::AntiAmple);
        assert_eq!(d.libgober_wood_residual(), Some(0));
        assert_eq!(d.riemann_roch_residual(), Some(0));
        let r = fourfold_check(&d);
        assert!(r.passed());
    }

    #[test]
    fn wrong_c1c3_fails() {
        let mut d = sextic();
        d.chern.c1c3 = Some(1);
        assert!(!fourfold_check(&d).passed());
    }
}
