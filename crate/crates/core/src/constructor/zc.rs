//! Certificates for varieties with a single off-diagonal primitive class
//! type, built by induction from a hyperelliptic curve with its order-3
//! automorphism structure.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::json::int_value;

/// One step of the induction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum ZcNode {
    /// `(C_g, ψ_g)` of type `(1,0)`, or its inverse of type `(0,1)`.
    Leaf { genus: u64, inverted: bool },
    /// Type `(a,b)` from `left` (used inverted) and `right`.
    Combine { a: usize, b: usize, left: Box<ZcNode>, right: Box<ZcNode> },
}

impl ZcNode {
    pub fn kind(&self) -> (usize, usize) {
        match self {
            ZcNode::Leaf { inverted: false, .. } => (1, 0),
            ZcNode::Leaf { inverted: true, .. } => (0, 1),
            ZcNode::Combine { a, b, .. } => (*a, *b),
        }
    }

    fn leaves(&self) -> usize {
        match self {
            ZcNode::Leaf { .. } => 1,
            ZcNode::Combine { left, right, .. } => left.leaves() + right.leaves(),
        }
    }

    fn check(&self, genus: u64) -> Result<()> {
        match self {
            ZcNode::Leaf { genus: g, .. } if *g == genus => Ok(()),
            ZcNode::Leaf { genus: g, .. } => Err(Error::Contract(format!("leaf of genus {g}, expected {genus}"))),
            ZcNode::Combine { a, b, left, right } => {
                let (a1, b1) = left.kind();
                let (a2, b2) = right.kind();
                if (a1 + a2, b1 + b2) != (*a, *b) {
                    return Err(Error::Contract(format!(
                        "node ({a},{b}) combines ({a1},{b1}) and ({a2},{b2})"
                    )));
                }
                let expected_left = if *b == 0 { (1, 0) } else { (0, 1) };
                if (a1, b1) != expected_left {
                    return Err(Error::Contract(format!("node ({a},{b}) has left child ({a1},{b1})")));
                }
                left.check(genus)?;
                right.check(genus)
            }
        }
    }
}

/// A variety of dimension `n` whose only off-diagonal primitive classes
/// below the middle are of type `(a,b)` and `(b,a)`, of dimension
/// `(3^c - 1)/2`. The diagonal numbers are not controlled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZcCertificate {
    pub a: usize,
    pub b: usize,
    pub c: u32,
    pub n: usize,
    pub tree: ZcNode,
    pub offdiag: u64,
}

fn leaf_genus(c: u32) -> Result<u64> {
    3u64.checked_pow(c)
        .map(|v| (v - 1) / 2)
        .ok_or_else(|| Error::Contract(format!("c = {c} is too large")))
}

fn build(a: usize, b: usize, genus: u64) -> ZcNode {
    match (a, b) {
        (1, 0) => ZcNode::Leaf { genus, inverted: false },
        (_, 0) => ZcNode::Combine {
            a,
            b,
            left: Box::new(ZcNode::Leaf { genus, inverted: false }),
            right: Box::new(build(a - 1, 0, genus)),
        },
        _ => ZcNode::Combine {
            a,
            b,
            left: Box::new(ZcNode::Leaf { genus, inverted: true }),
            right: Box::new(build(a, b - 1, genus)),
        },
    }
}

pub fn zc_certificate(a: usize, b: usize, c: u32, n: usize) -> Result<ZcCertificate> {
    if a <= b {
        return Err(Error::Contract(format!("need a > b, got a = {a}, b = {b}")));
    }
    if c == 0 {
        return Err(Error::Contract("need c >= 1".into()));
    }
    if n < a + b {
        return Err(Error::Contract(format!("need n >= a + b, got n = {n}")));
    }
    let genus = leaf_genus(c)?;
    Ok(ZcCertificate { a, b, c, n, tree: build(a, b, genus), offdiag: genus })
}

impl ZcCertificate {
    /// Structural check of the tree and the recorded values.
    pub fn validate(&self) -> Result<()> {
        let genus = leaf_genus(self.c)?;
        if self.offdiag != genus {
            return Err(Error::Contract(format!("offdiag {} but leaves have genus {genus}", self.offdiag)));
        }
        if self.a <= self.b || self.n < self.a + self.b {
            return Err(Error::Contract("parameters out of range".into()));
        }
        if self.tree.kind() != (self.a, self.b) {
            return Err(Error::Contract(format!("tree has type {:?}", self.tree.kind())));
        }
        if self.tree.leaves() != self.a + self.b {
            return Err(Error::Contract("leaf count differs from a + b".into()));
        }
        self.tree.check(genus)
    }

    pub fn projective_factor(&self) -> usize {
        self.n - self.a - self.b
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "n": self.n,
            "offdiag": int_value(&self.offdiag),
            "diagonal": "unspecified",
            "projective_factor": self.projective_factor(),
            "tree": serde_json::to_value(&self.tree).expect("trees serialize"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leaf_certificate() {
        let z = zc_certificate(1, 0, 1, 1).unwrap();
        assert_eq!(z.offdiag, 1);
        assert_eq!(z.tree, ZcNode::Leaf { genus: 1, inverted: false });
        z.validate().unwrap();
    }

    #[test]
    fn offdiag_values() {
        let z = zc_certificate(2, 1, 2, 3).unwrap();
        assert_eq!(z.offdiag, 4);
        z.validate().unwrap();
        for c in 1..=8 {
            let z = zc_certificate(3, 1, c, 5).unwrap();
            assert_eq!(z.offdiag, (3u64.pow(c) - 1) / 2);
            z.validate().unwrap();
        }
    }

    #[test]
    fn equal_indices_are_rejected() {
        assert!(zc_certificate(2, 2, 1, 4).is_err());
        assert!(zc_certificate(2, 1, 0, 4).is_err());
        assert!(zc_certificate(2, 1, 1, 2).is_err());
    }

    #[test]
    fn tampered_tree_fails_validation() {
        let mut z = zc_certificate(3, 1, 1, 4).unwrap();
        if let ZcNode::Combine { left, .. } = &mut z.tree {
            **left = ZcNode::Leaf { genus: 1, inverted: false };
        }
        assert!(z.validate().is_err());
    }
}
