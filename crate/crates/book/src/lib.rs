//! Compiles every listing in the guide under `book/src` as a doc-test.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/seifert.md")]
pub mod seifert {}

#[doc = include_str!("../../../book/src/linking.md")]
pub mod linking {}

#[doc = include_str!("../../../book/src/group_ring.md")]
pub mod group_ring {}

#[doc = include_str!("../../../book/src/metabolizers.md")]
pub mod metabolizers {}

#[doc = include_str!("../../../book/src/obstruction.md")]
pub mod obstruction {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
