//! Finite rings and modules as validated operation tables.
//!
//! Elements are indices `0..order`. Constructors fix a canonical indexing:
//! residues for cyclic rings, and mixed radix (first coordinate most
//! significant) for matrix, triangular and product rings and for direct sums.

mod hom;
mod module;
mod ring;
mod submodule;
mod validate;

pub use hom::ModuleHom;
pub use module::{DirectSum, FiniteModule, Quotient, Restriction, Side};
pub use ring::FiniteRing;
pub use submodule::Submodule;
pub use validate::{Law, Violation};

/// Decode `index` into mixed-radix digits, most significant first.
pub(crate) fn digits(mut index: usize, radices: &[usize]) -> Vec<usize> {
    let mut out = vec![0; radices.len()];
    for (slot, &radix) in out.iter_mut().zip(radices).rev() {
        *slot = index % radix;
        index /= radix;
    }
    out
}

pub(crate) fn encode(digits: &[usize], radices: &[usize]) -> usize {
    digits
        .iter()
        .zip(radices)
        .fold(0, |acc, (&d, &radix)| acc * radix + d)
}

/// Product of `radices`, or `None` on overflow.
pub(crate) fn radix_product(radices: &[usize]) -> Option<usize> {
    radices.iter().try_fold(1usize, |acc, &r| acc.checked_mul(r))
}

/// Product of `radices`, or a cap error naming `what` when it exceeds
/// `limit`.
pub(crate) fn capped_product(radices: &[usize], limit: usize, what: &'static str) -> crate::Result<usize> {
    radix_product(radices)
        .filter(|&o| o <= limit)
        .ok_or_else(|| crate::Error::CapExceeded {
            what,
            limit,
            actual: radices.iter().fold(1usize, |acc, &r| acc.saturating_mul(r)),
        })
}
