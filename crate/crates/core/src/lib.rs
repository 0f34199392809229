//! Exact combinatorial engine for twisted bar constructions.
//!
//! The crate works with finite monoids equipped with an anti-involution
//! (`tau(xy) = tau(y) tau(x)`). From such a monoid it builds, levelwise and
//! exactly over the integers:
//!
//! * the bar construction with the reversal involution ([`simplicial::BarSigma`]),
//! * its edgewise subdivision ([`simplicial::Edgewise`]) and the subcomplex of
//!   involution-fixed simplices ([`simplicial::FixedBar`]),
//! * the two-sided bar construction over the fixed points with the conjugation
//!   style action `b -> a b tau(a)` ([`simplicial::TwoSidedBar`]),
//! * the levelwise comparison map between the last two ([`simplicial::eta`]),
//! * normalized chain complexes and integer homology via Smith normal form
//!   ([`homology`]).
//!
//! Everything is finite and enumerable, so the identities that glue these
//! objects together are checked by exhaustive sweeps that return
//! [`cert::Certificate`] values instead of being taken on faith.
//!
//! With the default `parallel` feature the sweeps and per-degree homology
//! runs are data-parallel via rayon; disabling the feature falls back to
//! equivalent sequential loops.

pub mod cert;
pub mod error;
pub mod homology;
pub mod monoid;
pub mod operad;
pub mod ordinal;
pub mod par;
pub mod simplicial;

pub use error::Error;
