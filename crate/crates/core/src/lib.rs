//! Exact number-theoretic and combinatorial invariants of prime-order
//! cyclic symmetries of 4-manifolds.
//!
//! The crate computes, in arbitrary-precision rational arithmetic:
//!
//! * Dedekind sums and the point/surface signature defects of isolated
//!   fixed points and fixed surfaces ([`defects`]);
//! * the signature bookkeeping of a quotient, and exhaustive feasibility
//!   of fixed-point-group censuses ([`gsig`]);
//! * local representations, rotation numbers and their congruences, and
//!   the per-component fixed-point data tables ([`localrep`]);
//! * intersection matrices of (-2)-sphere configurations, affine ADE
//!   recognition with multiplicity vectors, and the equivariant plumbing
//!   weight recursions ([`plumbing`]);
//! * end-to-end consistency/contradiction scenarios and prime sweeps
//!   ([`scenarios`]).

pub mod arith;
pub mod defects;
pub mod error;
pub mod gsig;
pub mod localrep;
pub mod plumbing;
pub mod scenarios;

pub use arith::{format_rational, is_prime, primes_up_to, PrimeOrder, Rational};
pub use defects::{DefectPath, DefectValue, GroupType, ThreePathDefect};
pub use error::{Error, Result};
pub use gsig::{FeasibilityReport, FixedPointData, GroupCensus, ManifoldInvariants, SurfaceFixComponent};
pub use localrep::{ComponentData, ComponentType, LocalRep, RotationPair, SeifertData};
pub use plumbing::{GraphClass, GraphKind, PlumbingGraph, QMatrix, WeightPair};
pub use scenarios::{ScenarioReport, Verdict};
