//! The guide's code listings, compiled and run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[doc = include_str!("../../../book/src/series.md")]
mod series {}

#[doc = include_str!("../../../book/src/partitions.md")]
mod partitions {}

#[doc = include_str!("../../../book/src/theta.md")]
mod theta {}

#[doc = include_str!("../../../book/src/qdiff.md")]
mod qdiff {}

#[doc = include_str!("../../../book/src/verification.md")]
mod verification {}

#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
#[doc = include_str!("../../../README.md")]
mod readme {}
