//! Macdonald polynomials: operators, the generic computation of P_λ, Pieri
//! coefficients, the integral form and the resonant specialization.

pub mod kostka;
pub mod operators;
pub mod pieri;
pub mod specialize;
pub mod table;

pub use operators::{apply_d, apply_e, apply_op, eigenvalue_d, MacOp, OperatorMatrix, OperatorResult, Route};
pub use pieri::{check_integrality, integral_form_factor, psi_dblprime, psi_prime, verify_pieri};
pub use specialize::{admissible_neighbourhood, first_pole, specialize_p};
pub use table::{compute_p, MacdonaldTable};
