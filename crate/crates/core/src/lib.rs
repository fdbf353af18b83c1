//! Exact arithmetic, conjugacy classes and the character table of the Sylow
//! `p`-subgroup of the Steinberg triality group `3D4(q^3)`.

pub mod characters;
pub mod conjugacy;
pub mod cyclotomic;
pub mod error;
pub mod export;
pub mod field;
pub mod group;
pub mod linalg;
pub mod poly;
pub mod verify;

pub use cyclotomic::{theta, theta_pi, Cyclotomic};
pub use error::{Error, Result};
pub use field::{build_tower, build_tower_for_q, prime_power, FieldTowerCtx, Fq3Element, FqElement};
pub use group::{GroupElement, RootFactor};

/// Cyclotomic integers with 64-bit coefficients and overflow detection.
pub type CycInt = Cyclotomic<i64>;

/// Cyclotomic integers with arbitrary-precision coefficients.
pub type BigCycInt = Cyclotomic<num_bigint::BigInt>;
