//! Mechanical verification of Rogers-Ramanujan-type partition identities that
//! arise from perfect crystals of affine Kac-Moody algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`series`]: exact truncated power series and q-Pochhammer expansion.
//! * [`cartan`]: affine Cartan tables, positive-root families, Lepowsky products.
//! * [`crystal`]: finite crystal graphs, tensor products, perfectness reports.
//! * [`energy`]: energy functions on tensor squares and their specialisation.
//! * [`partitions`]: brute-force coloured-partition enumeration.
//! * [`recursions`]: the P/R recursion system for the G2^(2) identity.
//! * [`cli`]: the command-line front end.

pub mod cartan;
pub mod cli;
pub mod crystal;
pub mod energy;
pub mod partitions;
pub mod recursions;
pub mod series;
