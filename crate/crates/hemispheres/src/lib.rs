//! Exact-arithmetic construction and verification of hemisphere covering
//! nerves and the combinatorial spaces attached to them.
//!
//! The crate builds, over arbitrary-precision rationals:
//!
//! - constellation and big constellation complexes of spherical point
//!   configurations ([`sphere`]);
//! - intersection lattices of hyperplane arrangements with their Möbius
//!   invariants ([`arrangement`]);
//! - the complexes of acyclic and non-strongly-connected digraphs and the
//!   spherical encoding of weighted DAGs ([`digraph`]);
//! - posets of orders, preorders and finite topologies ([`posets`]);
//! - Gale/Alexander dual descriptions of the DAG space and the cycle
//!   lattice ([`gale`]);
//! - Vietoris–Rips persistence at exact squared-distance scales ([`tda`]).
//!
//! Integral simplicial homology is computed from Smith normal forms of
//! boundary matrices ([`complex`]); all feasibility predicates are decided
//! by exact rational linear programming ([`exact`]). The [`verify`] module
//! bundles the end-to-end checks behind one reporting interface, exposed on
//! the command line as `hemispheres verify`.

pub mod arrangement;
pub mod complex;
pub mod digraph;
pub mod exact;
pub mod gale;
pub mod posets;
pub mod sphere;
pub mod tda;
pub mod verify;

/// Maximum face count an enumeration may produce before aborting, unless
/// overridden by the `HEMI_MAX_FACES` environment variable.
pub const DEFAULT_MAX_FACES: usize = 1 << 16;

/// Current enumeration budget: `HEMI_MAX_FACES` when set, else the default.
pub fn max_faces_budget() -> usize {
    std::env::var("HEMI_MAX_FACES")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_FACES)
}
