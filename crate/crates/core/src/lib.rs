//! Generalized Lorentz transformations of a flat Finsler spacetime with
//! partially broken 3D isotropy.
//!
//! The background is fixed by a preferred unit direction `nu` and an
//! anisotropy exponent `r` ([`AnisotropySpec`]). Its homogeneous isometries
//! are rotations about `nu` and a 3-parameter group of generalized boosts
//! `D Lambda`, where `Lambda` belongs to the 4-parameter subgroup of the
//! Lorentz group that fixes `nu` up to a boost, and `D` is a compensating
//! dilatation. The crate provides:
//!
//! - boost matrices, composition law and velocity parametrization ([`boost`]),
//! - the Abelian and axial subgroups with their invariants ([`subgroups`]),
//! - the bispinor representation ([`spinor`]),
//! - the induced geometry of velocity space ([`velocity_space`]),
//! - seeded property suites ([`conformance`]) and reference oracles ([`oracle`]).
//!
//! Conventions: signature (+,-,-,-), `c = 1`, passive transformations.

#![allow(clippy::needless_range_loop)]

pub mod boost;
pub mod conformance;
pub mod error;
pub mod matrix;
pub mod metric;
pub mod oracle;
pub mod series;
pub mod spinor;
pub mod subgroups;
pub mod tolerance;
pub mod vector;
pub mod velocity_space;

pub use boost::{BoostParams, GeneratorMatrix};
pub use error::{FinslerError, Result};
pub use matrix::Matrix4;
pub use metric::{finsler_interval_sq, minkowski_interval, AnisotropySpec};
pub use spinor::{Bispinor, GammaBasis, SpinorMatrix};
pub use subgroups::{AbelianParams, AxialParams};
pub use tolerance::Tolerance;
pub use vector::{cross3, dot3, norm3, FourVector, UnitVector3, Vec3, Velocity3};
pub use velocity_space::{Resolution, SurfaceFamily, SurfaceSample};
