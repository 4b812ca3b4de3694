//! Exact q-series machinery for the level 3 gap partition identities.
//!
//! The crate expands generating functions, theta and false theta functions,
//! finite recurrences and q-difference equations to a chosen truncation order,
//! then checks coefficient-level equality against brute-force partition
//! enumeration. Everything is exact: coefficients are big integers and the
//! series ring is `Z[t, t^-1]((q))` truncated in `q`.
//!
//! - [`series`]: truncated series arithmetic, Pochhammer symbols, q-binomials.
//! - [`partition`]: partition enumeration and the gap conditions.
//! - [`theta`]: theta and false theta functions and the classical identities
//!   they are built from.
//! - [`qdiff`]: finite recurrences, renormalized sequences, q-difference
//!   residuals and the limiting evaluation.
//! - [`verify`]: a registry of named checks producing structured reports.

pub mod partition;
pub mod qdiff;
pub mod series;
pub mod theta;
pub mod verify;

pub use partition::{GapConfig, Partition};
pub use series::{Monomial, QSeries, SeriesError, TLaurent, ZPoly};

/// Serde adapter writing big integers as decimal strings.
pub mod bigint_string {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}
