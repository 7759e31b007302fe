//! The guide from `book/` compiled as documentation, so that every code
//! block in the book runs as a doc-test and cannot drift from the crate.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/permutations.md")]
pub mod permutations {}

#[doc = include_str!("../../../book/src/groups.md")]
pub mod groups {}

#[doc = include_str!("../../../book/src/commuting-graph.md")]
pub mod commuting_graph_chapter {}

#[doc = include_str!("../../../book/src/prime-graph.md")]
pub mod prime_graph_chapter {}

#[doc = include_str!("../../../book/src/checks.md")]
pub mod checks {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli_chapter {}
