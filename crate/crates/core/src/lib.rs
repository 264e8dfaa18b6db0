//! Combinatorial objects counted by `2/(n(n+1)) * C(4n+1, n-1)` and the
//! bijections between them.
//!
//! The crate implements five families of objects of size `n`:
//!
//! * bridgeless rooted planar maps with `n` edges ([`planar_map::RootedMap`]),
//! * rooted 3-connected planar triangulations with `n` internal vertices,
//! * sticky trees with `n` edges ([`sticky::StickyTree`]),
//! * Tamari intervals of order `n` ([`tamari::TamariInterval`]),
//! * closed flows on forests with `n` nodes ([`flows::ForestFlow`]),
//!
//! together with decorated trees ([`decorated::DecoratedTree`]), which are the
//! leaf-labeled counterpart of sticky trees.
//!
//! Sticky trees act as the hub: every other family is mapped to and from
//! sticky trees, and composite conversions go through them.  Brute-force
//! generators and counters live in [`oracles`] so that the bijections can be
//! verified exhaustively at small sizes.
//!
//! The crate is `no_std` (with `alloc`); all IO, serialization and the CLI
//! live in the companion `stickytree-cli` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod decorated;
pub mod dyck;
pub mod flows;
pub mod map_bijections;
pub mod oracles;
pub mod plane_tree;
pub mod planar_map;
pub mod sticky;
pub mod tamari;

pub use decorated::DecoratedTree;
pub use dyck::DyckPath;
pub use flows::ForestFlow;
pub use plane_tree::PlaneTree;
pub use planar_map::{CoreMap, RootedMap};
pub use sticky::StickyTree;
pub use tamari::TamariInterval;
