//! Finite rings, finite modules, and exhaustive computations on their
//! submodule lattices.
//!
//! Everything here works in a finite universe: rings and modules are
//! operation tables over element indices, submodules are bitsets, and every
//! predicate is decided by enumeration. The modules mirror the layers of the
//! computation:
//!
//! * [`algebra`]: rings, modules, submodules, homomorphisms and their
//!   constructors and validators.
//! * [`lattice`]: the full submodule lattice and order-theoretic predicates
//!   (small, essential, complements, coindependent families).
//! * [`dimension`]: radical, socle, length, uniform and hollow dimension,
//!   and the Camps–Dicks dimension function on submodules.
//! * [`supplements`]: supplements, weak supplements and the constructive
//!   transfer lemmas built on them.
//! * [`ringclass`]: Jacobson radical, ring profiles, the `Ra ∩ Rb = Rab`
//!   identity and the element-level dimension function.
//! * [`endo`]: Hom-sets, endomorphism rings, self-projectivity, the Baer
//!   criterion and the two dimension dualities relating a module to its
//!   endomorphism ring and to an injective cogenerator.

pub mod algebra;
pub mod bitset;
pub mod caps;
pub mod dimension;
pub mod endo;
mod error;
pub mod lattice;
pub mod ringclass;
pub mod spec;
pub mod supplements;

pub use algebra::{FiniteModule, FiniteRing, ModuleHom, Side, Submodule};
pub use caps::Caps;
pub use error::{Error, Result};
