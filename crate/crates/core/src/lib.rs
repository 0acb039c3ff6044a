//! Exact Hodge-number arithmetic.
//!
//! Formal Hodge diamonds and their validity checks, the cohomology of
//! products of hyperelliptic curves under finite group actions, planners that
//! assemble varieties with prescribed Hodge numbers, and checkers for the
//! known inequalities among Hodge numbers.
//!
//! The core types are generic over an exact integer scalar ([`HodgeInt`]).
//! The aliases below fix it to [`BigInt`] or `i64`.

pub mod cohomology;
pub mod constructor;
pub mod diamond;
pub mod error;
pub mod groups;
pub mod inequalities;
pub mod invariants;
pub mod json;
pub mod scalar;

pub use num_bigint::BigInt;

pub use cohomology::{CurveSpec, Letter, Monomial, ProductSpace, Scalar};
pub use diamond::{
    BettiVector, FormalHodgeDiamond, PartialDiamond, Predicate, PrimitiveTable, Site, TruncatedDiamond,
    ValidityReport, Violation,
};
pub use error::{Error, Result};
pub use groups::{GeneratedGroup, GroupElement, GroupSpec, Twist};
pub use invariants::{InvariantTable, OracleOptions, TableSource};
pub use scalar::HodgeInt;

pub type Diamond = FormalHodgeDiamond<BigInt>;
pub type Truncated = TruncatedDiamond<BigInt>;
pub type Betti = BettiVector<BigInt>;
pub type Primitive = PrimitiveTable<BigInt>;
pub type Partial = PartialDiamond<BigInt>;

pub type DiamondI64 = FormalHodgeDiamond<i64>;
pub type TruncatedI64 = TruncatedDiamond<i64>;
pub type BettiI64 = BettiVector<i64>;
