//! Ladder determinantal and pfaffian ideals: Groebner bases, liaison chains and
//! Stanley-Reisner checks in exact arithmetic.

pub mod budget;
pub mod complexes;
pub mod error;
pub mod families;
pub mod field;
pub mod ladders;
pub mod linkage;
pub mod localization;
pub mod matrix;
pub mod monomial_ideal;
pub mod poly;

pub use budget::Budget;
pub use complexes::{SimplicialComplex, VdCertificate, VdOutcome};
pub use error::{LadderError, Result};
pub use field::{Field, FieldElement};
pub use ladders::{Family, Ladder, LadderSpec, MaxMinors, OneSidedLadder, PfaffianLadder, SymmetricPlusLadder};
pub use linkage::{build_chain, replay, verify_family, FamilyReport, LinkageCertificate, LinkageStep, Status};
pub use matrix::{MatrixEntry, MatrixShape};
pub use monomial_ideal::{bdl, MonomialIdeal};
pub use poly::{Monomial, OrderKind, Polynomial, TermOrder, Var};
