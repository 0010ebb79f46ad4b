//! Exact sparse polynomials, lexicographic term orders and Groebner machinery.

mod groebner;
mod monomial;
mod order;
mod polynomial;

pub use groebner::{
    buchberger_reduced, buchberger_reduced_with_budget, is_reduced_groebner, normal_form, normal_form_with_quotients,
    reduces_to_zero, s_polynomial, Division,
};
pub use monomial::{Monomial, Var};
pub use order::{OrderKind, TermOrder};
pub use polynomial::Polynomial;
