//! Checkers for the known inequalities among Hodge numbers, hypersurface
//! Hodge numbers, and the classification of dominations between Hodge
//! numbers.

mod domination;
mod fourfold;
mod hypersurface;
mod surface;
mod threefold;

use std::cmp::Ordering;

use serde_json::{json, Value};

use crate::json::int_value;
use crate::scalar::HodgeInt;

pub use domination::{counterexample_family, dominates, family_witness, normalize, Domination, Family, FamilyWitness, HrsValue};
pub use fourfold::{fourfold_check, Canonical, FourfoldChern, FourfoldData};
pub use hypersurface::{hypersurface_euler, hypersurface_hodge, product_primitive};
pub use surface::{surface_check, SurfaceData};
pub use threefold::{threefold_check, ThreefoldChern, ThreefoldData, FANO_H21, HODGE_FORM_H20, HODGE_FORM_H30, NEF_C1C2, NEF_C3, RR_FORM_H20, RR_FORM_H30};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "n/a",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Lt,
    Le,
    Eq,
    Ge,
    Gt,
    /// Membership of `lhs` in a finite set; `rhs` is unused.
    In,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Gt => ">",
            Relation::In => "in",
        }
    }

    fn holds(self, ord: Ordering) -> bool {
        match self {
            Relation::Lt => ord == Ordering::Less,
            Relation::Le => ord != Ordering::Greater,
            Relation::Eq | Relation::In => ord == Ordering::Equal,
            Relation::Ge => ord != Ordering::Less,
            Relation::Gt => ord == Ordering::Greater,
        }
    }
}

/// One rule evaluated on one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleCheck<T> {
    pub rule: &'static str,
    pub anchor: &'static str,
    pub status: Status,
    pub relation: Relation,
    pub lhs: Option<T>,
    pub rhs: Option<T>,
    /// Whether a failure rules the input out. Non-binding rules are reported
    /// for information only.
    pub binding: bool,
    pub note: Option<String>,
}

impl<T: HodgeInt> RuleCheck<T> {
    pub fn compare(rule: &'static str, anchor: &'static str, lhs: T, relation: Relation, rhs: T) -> Self {
        let status = if relation.holds(lhs.cmp(&rhs)) { Status::Pass } else { Status::Fail };
        Self { rule, anchor, status, relation, lhs: Some(lhs), rhs: Some(rhs), binding: true, note: None }
    }

    pub fn member(rule: &'static str, anchor: &'static str, value: T, set: &[i64]) -> Self {
        let hit = set.iter().any(|&s| T::from_i64_exact(s) == value);
        Self {
            rule,
            anchor,
            status: if hit { Status::Pass } else { Status::Fail },
            relation: Relation::In,
            lhs: Some(value),
            rhs: None,
            binding: true,
            note: Some(format!("allowed values {set:?}")),
        }
    }

    pub fn not_applicable(rule: &'static str, anchor: &'static str, relation: Relation, reason: &str) -> Self {
        Self {
            rule,
            anchor,
            status: Status::NotApplicable,
            relation,
            lhs: None,
            rhs: None,
            binding: true,
            note: Some(reason.to_string()),
        }
    }

    /// Keeps the values but marks the rule as not applying.
    pub fn inapplicable_because(mut self, reason: &str) -> Self {
        self.status = Status::NotApplicable;
        self.note = Some(reason.to_string());
        self
    }

    pub fn advisory(mut self, note: &str) -> Self {
        self.binding = false;
        self.note = Some(note.to_string());
        self
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }

    pub fn to_json(&self) -> Value {
        let opt = |v: &Option<T>| v.as_ref().map_or(Value::Null, int_value);
        let mut out = json!({
            "rule": self.rule,
            "paper_anchor": self.anchor,
            "status": self.status.name(),
            "relation": self.relation.symbol(),
            "lhs": opt(&self.lhs),
            "rhs": opt(&self.rhs),
            "binding": self.binding,
        });
        if let Some(note) = &self.note {
            out["note"] = json!(note);
        }
        out
    }
}

/// All rules evaluated on one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report<T> {
    pub subject: &'static str,
    /// Which case analysis applied, if any.
    pub branch: Option<&'static str>,
    pub checks: Vec<RuleCheck<T>>,
}

impl<T: HodgeInt> Report<T> {
    /// No binding rule failed.
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(|c| c.binding && c.status == Status::Fail)
    }

    pub fn get(&self, rule: &str) -> Option<&RuleCheck<T>> {
        self.checks.iter().find(|c| c.rule == rule)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "subject": self.subject,
            "branch": self.branch,
            "verdict": if self.passed() { "pass" } else { "fail" },
            "checks": self.checks.iter().map(RuleCheck::to_json).collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn int<T: HodgeInt>(v: i64) -> T {
    T::from_i64_exact(v)
}
