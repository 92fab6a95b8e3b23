//! Exact computational homological algebra over the integers and prime
//! fields.
//!
//! The crate builds, from the bottom up:
//!
//! * exact integer linear algebra (Smith normal form, kernels, cokernels,
//!   lattice arithmetic) and finitely generated abelian groups in invariant
//!   factor normal form ([`matrix`], [`groups`]);
//! * bounded chain complexes of finitely generated free abelian groups with
//!   cones, tensor and Hom complexes, strict ring and module objects, and
//!   Eilenberg-MacLane objects ([`complex`], [`ring`]);
//! * graded Hopf algebras over a prime field, comodules, cofree comodules,
//!   injective resolutions and Ext via two independent backends ([`fp`],
//!   [`hopf`]);
//! * towers of complexes, pro-isomorphisms, lim/lim^1 with stabilization
//!   certificates and homotopy-limit homology ([`tower`]);
//! * injective resolutions over and under an object, the unraveled exact
//!   couple and the modified Adams spectral sequence ([`resolution`], [`ss`]);
//! * nilpotent and injective completion and their comparison
//!   ([`completion`]);
//! * Hom computations in the arrow category ([`diagram`]).
//!
//! Everything is exact: no floating point enters any computation. All values
//! are immutable after construction and safe to share across threads.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod complex;
pub mod completion;
pub mod diagram;
pub mod fp;
pub mod groups;
pub mod hopf;
pub mod matrix;
pub mod resolution;
pub mod ring;
pub mod ss;
pub mod tower;

pub use groups::FgAbGroup;
pub use matrix::IntMatrix;
