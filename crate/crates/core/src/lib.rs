//! Exact computation of the Hodge star operator, the Lefschetz operator and
//! its adjoint on the Schubert bases of compact hermitian symmetric spaces.
//!
//! * [`partitions`]: hooks, shifted hooks, beta sequences and tableau counters.
//! * [`spaces`]: graded Schubert bases with Pieri action, duality, the closed
//!   form star operator and the closed form adjoint.
//! * [`lefschetz`]: exact matrices, primitive decompositions and a star
//!   operator derived only from the ring and the Lefschetz action.
//! * [`rootsys`]: root systems, parabolic quotients, Bruhat posets and
//!   path counts, including the two exceptional spaces.
//! * [`flagcx`]: the invariant forms on the complete flag manifold of `C^3`.

pub mod arith;
pub mod error;
pub mod flagcx;
pub mod lefschetz;
pub mod linalg;
pub mod partitions;
pub mod rootsys;
pub mod spaces;

pub use arith::Rational;
pub use error::{Error, Result};
