//! Exact Schubert calculus on root-theoretic Young diagrams.
//!
//! A root-theoretic Young diagram (RYD) is the inversion set of a minimal
//! coset representative, drawn inside the poset of positive roots that use a
//! fixed simple root.  For partial flag varieties `GL_n/P` the roots split
//! into rectangular regions indexed by pairs of intervals of `[1,n]`, and the
//! diagram is a tuple of ordinary partitions, one per region.  For
//! non-maximal isotropic Grassmannians `OG(k, 2n+1)` and `OG(k, 2n)` the
//! ambient poset is a stack of `k` rows (chains for the odd case,
//! double-tailed diamonds for the even case) with a staircase on top.
//!
//! On top of these indexing sets the crate implements, with exact integer
//! arithmetic throughout:
//!
//! * Belkale–Kumar structure constants on `GL_n/P`, computed by jeu de taquin
//!   on region diagrams, and independently by flattening to ordinary
//!   Littlewood–Richardson numbers on Grassmannians;
//! * a Schubert-polynomial oracle (divided differences, multiply-and-peel)
//!   for classical cup products, used to cross-check every BK number;
//! * the translations between isotropic RYDs, signed permutations, and
//!   (n−k)-strict partitions, including the type D marker conventions;
//! * Pieri rules for the (co)adjoint spaces `LG(2,2n)` and `OG(2,2n)`;
//! * the associated star/diamond products on 2-row shapes with charge.
//!
//! The crate is `no_std` (with `alloc`); everything IO-shaped lives in the
//! companion CLI crate.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod bk;
pub mod dyadic;
pub mod error;
pub mod isotropic;
pub mod jdt;
pub mod partition;
pub mod perm;
pub mod pieri;
pub mod poset;
pub mod ryd;
pub mod schubert;
pub mod star;

pub use error::Error;

/// Convenient result alias used across the crate.
pub type Result<T> = core::result::Result<T, Error>;
