//! Decides, certifies, or empirically tests whether discrete subgroups
//! act properly discontinuously on reductive homogeneous spaces G/H.
//!
//! The pipeline follows the reduction of properness questions to
//! polyhedral-cone geometry in the flat of the group: group elements map
//! through the Cartan projection into a fixed dominant chamber, subgroup
//! images become exact rational cone data, and the proper-pair and
//! coarse-equivalence relations are decided by exact rational linear
//! programming.  On top of that sit the existence and nonexistence
//! criteria for compact Clifford-Klein forms, desk-scale orbit dynamics,
//! and deformation-space probes.

pub mod cartan;
pub mod catalog;
pub mod cones;
pub mod criteria;
pub mod deform;
pub mod dynamics;
pub mod error;
pub mod linalg;
pub mod par;

pub use error::{Error, Result};
