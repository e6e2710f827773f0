// The guide's code samples, compiled and run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[doc = include_str!("../../../book/src/structures.md")]
mod structures {}

#[doc = include_str!("../../../book/src/identities.md")]
mod identities {}

#[doc = include_str!("../../../book/src/shadow.md")]
mod shadow {}

#[doc = include_str!("../../../book/src/models.md")]
mod models {}

#[doc = include_str!("../../../book/src/completeness.md")]
mod completeness {}

#[doc = include_str!("../../../book/src/frames.md")]
mod frames {}

#[doc = include_str!("../../../book/src/census.md")]
mod census {}

#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
