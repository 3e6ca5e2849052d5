use thiserror::Error;

use crate::algebra::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("axiom violation: {0}")]
    Axiom(Violation),
    #[error("{what} of size {actual} exceeds the cap of {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("modules are over different rings or sides")]
    RingMismatch,
    #[error("not a submodule: {0}")]
    NotSubmodule(String),
    #[error("family is not coindependent: {0}")]
    NotCoindependent(String),
    #[error("certificate rejected: {0}")]
    Certificate(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid description: {0}")]
    InvalidSpec(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
