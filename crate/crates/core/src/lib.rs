//! Symmetric bilinear multiplication algorithms for finite-field extensions
//! and truncated polynomial rings, together with effective upper bounds on
//! their bilinear complexity.
//!
//! - [`ffalg`]: prime fields, small extension fields, `F_q[t]/(f)` algebras.
//! - [`evalinterp`]: genus-0 evaluation-interpolation algorithms, a verifier,
//!   and exhaustive symmetric-rank search for tiny algebras.
//! - [`arith`]: Dedekind psi, the `f_a` family, and `X_0(N)` numerology.
//! - [`gaps`]: ceilings and relative gaps in integer value sets.
//! - [`bounds`]: the complexity bound engine.

pub mod arith;
pub mod bounds;
pub mod error;
pub mod evalinterp;
pub mod ffalg;
pub mod gaps;
pub mod primes;
pub mod rational;

pub use bounds::{best_bound, evaluate_all, BestBound, BoundQuery, BoundResult, EpsilonChoice, Method, Status, Target};
pub use error::{Error, Result};
pub use evalinterp::{RankResult, Site, SymmetricBilinearAlgorithm, VerificationReport};
pub use ffalg::{AlgebraElement, AlgebraKind, AlgebraSpec, BaseField};
pub use gaps::{NamedEstimate, ValueSet};
pub use rational::Rational;
