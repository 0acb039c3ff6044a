use super::{int, Relation, Report, RuleCheck};
use crate::scalar::HodgeInt;

/// Values of `h21` on Fano threefolds with Picard number one.
pub const FANO_H21: [i64; 11] = [0, 2, 3, 5, 7, 10, 14, 20, 21, 30, 52];

/// `1 748 588 · c1c2 <= 3 · c3` for threefolds with ample canonical class.
pub const NEF_C1C2: i64 = 1_748_588;
pub const NEF_C3: i64 = 3;

/// `6 994 346 (1 + h20) + 3 h21 <= 6 994 349 h30`, as stated for
/// `h11 = 1`, `h10 = 0`.
pub const HODGE_FORM_H20: i64 = 6_994_346;
pub const HODGE_FORM_H30: i64 = 6_994_349;

/// `6 994 350 (1 + h20) + h21 <= 6 994 351 h30`, what the `c1c2`
/// inequality becomes after substituting `c1c2 = 24χ` and `c3`.
pub const RR_FORM_H20: i64 = 6_994_350;
pub const RR_FORM_H30: i64 = 6_994_351;

/// `12^6`.
pub const COARSE_H21: i64 = 2_985_984;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreefoldChern<T> {
    pub c1c2: Option<T>,
    pub c1_cubed: Option<T>,
    pub c3: Option<T>,
}

impl<T> Default for ThreefoldChern<T> {
    fn default() -> Self {
        Self { c1c2: None, c1_cubed: None, c3: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreefoldData<T> {
    pub h10: T,
    pub h20: T,
    pub h30: T,
    pub h11: T,
    pub h21: T,
    pub chern: ThreefoldChern<T>,
}

impl<T: HodgeInt> ThreefoldData<T> {
    pub fn hodge(h10: T, h20: T, h30: T, h11: T, h21: T) -> Self {
        Self { h10, h20, h30, h11, h21, chern: ThreefoldChern::default() }
    }

    /// `χ(O) = 1 - h10 + h20 - h30`.
    pub fn chi(&self) -> T {
        T::one() - self.h10.clone() + self.h20.clone() - self.h30.clone()
    }

    /// Topological Euler number `c3 = Σ (-1)^k b_k`.
    pub fn euler(&self) -> T {
        int::<T>(2) - int::<T>(4) * self.h10.clone() + int::<T>(4) * self.h20.clone() + int::<T>(2) * self.h11.clone()
            - int::<T>(2) * self.h30.clone()
            - int::<T>(2) * self.h21.clone()
    }
}

pub fn threefold_check<T: HodgeInt>(d: &ThreefoldData<T>) -> Report<T> {
    let mut checks = Vec::new();
    let chi = d.chi();
    let c1c2 = d.chern.c1c2.clone().unwrap_or_else(|| int::<T>(24) * chi.clone());
    let c3 = d.chern.c3.clone().unwrap_or_else(|| d.euler());

    match &d.chern.c1c2 {
        Some(v) => checks.push(RuleCheck::compare("todd", "riemann-roch", v.clone(), Relation::Eq, int::<T>(24) * chi.clone())),
        None => checks.push(RuleCheck::not_applicable("todd", "riemann-roch", Relation::Eq, "no c1c2 given")),
    }
    match &d.chern.c3 {
        Some(v) => checks.push(RuleCheck::compare("euler-number", "euler", v.clone(), Relation::Eq, d.euler())),
        None => checks.push(RuleCheck::not_applicable("euler-number", "euler", Relation::Eq, "no c3 given")),
    }

    if !d.h11.is_one() {
        checks.push(RuleCheck::not_applicable("odd-betti-vanishing", "odd-betti-vanishing", Relation::Eq, "needs h11 = 1"));
        return Report { subject: "threefold", branch: None, checks };
    }

    checks.push(RuleCheck::compare("odd-betti-vanishing", "odd-betti-vanishing", d.h10.clone(), Relation::Eq, T::zero()));
    let (h20, h30, h21) = (d.h20.clone(), d.h30.clone(), d.h21.clone());
    let branch;
    if h30.is_zero() {
        branch = "anti-ample";
        checks.push(RuleCheck::compare("fano-h20", "fano-classification", h20, Relation::Eq, T::zero()));
        checks.push(RuleCheck::member("fano-h21", "fano-classification", h21, &FANO_H21));
    } else if h30.is_one() {
        branch = "numerically-trivial";
        checks.push(RuleCheck::compare("trivial-chi", "riemann-roch", T::one() + h20.clone(), Relation::Eq, h30));
        checks.push(RuleCheck::compare("trivial-h20", "k-trivial-sections", h20, Relation::Eq, T::zero()));
    } else {
        branch = "ample";
        checks.push(RuleCheck::compare("ample-chi", "yau", chi.clone(), Relation::Lt, T::zero()));
        checks.push(RuleCheck::compare(
            "nef-twist",
            "nef-chern-bound",
            int::<T>(NEF_C1C2) * c1c2.clone(),
            Relation::Le,
            int::<T>(NEF_C3) * c3,
        ));
        let one_h20 = T::one() + h20;
        checks.push(RuleCheck::compare(
            "hodge-form",
            "nef-chern-bound",
            int::<T>(HODGE_FORM_H20) * one_h20.clone() + int::<T>(3) * h21.clone(),
            Relation::Le,
            int::<T>(HODGE_FORM_H30) * h30.clone(),
        ));
        checks.push(
            RuleCheck::compare(
                "hodge-form-recomputed",
                "riemann-roch",
                int::<T>(RR_FORM_H20) * one_h20 + h21.clone(),
                Relation::Le,
                int::<T>(RR_FORM_H30) * h30.clone(),
            )
            .advisory("the c1c2 inequality with c1c2 = 24χ and c3 from the diamond"),
        );
        checks.push(RuleCheck::compare("coarse-h21", "nef-chern-bound", h21, Relation::Lt, int::<T>(COARSE_H21) * h30));
        match &d.chern.c1_cubed {
            Some(c1_cubed) => checks.push(RuleCheck::compare(
                "yau",
                "yau",
                int::<T>(8) * c1c2,
                Relation::Le,
                int::<T>(3) * c1_cubed.clone(),
            )),
            None => checks.push(RuleCheck::not_applicable("yau", "yau", Relation::Le, "no c1^3 given")),
        }
    }
    Report { subject: "threefold", branch: Some(branch), checks }
}
