//! Commuting graphs and prime graphs of finite permutation groups.
//!
//! The commuting graph of a finite group `G` has the non-central elements of
//! `G` as vertices, two distinct vertices being adjacent exactly when they
//! commute. The prime graph of `G` has the primes dividing `|G|` as vertices,
//! with `r ~ s` exactly when `G` contains an element of order `rs`. This
//! crate computes both for permutation groups at desk scale (full element
//! enumeration up to a configurable cap), measures connected components and
//! their diameters, and mechanically checks a family of structural facts
//! relating the two graphs: the bijection between conjugacy classes of
//! commuting-graph components and prime-graph components, distance bounds
//! for involutions, isolated subgroups, strongly embedded stabilizers, and a
//! corpus-wide bound of 10 on component diameters for groups with trivial
//! centre.
//!
//! ```
//! use commuting_graph::group::Group;
//! use commuting_graph::perm::Permutation;
//!
//! let gens = vec![
//!     Permutation::parse_cycles("(1,2,3)", 5).unwrap(),
//!     Permutation::parse_cycles("(3,4,5)", 5).unwrap(),
//! ];
//! let alt5 = Group::new(5, gens).unwrap();
//! assert_eq!(alt5.order(), 60);
//! ```
//!
//! The `book/` directory of the repository holds a guide with worked
//! examples; its code blocks compile as doc-tests of [`guide`].

pub mod analysis;
pub mod cli;
pub mod commgraph;
pub mod group;
pub mod guide;
pub mod perm;
pub mod primegraph;
