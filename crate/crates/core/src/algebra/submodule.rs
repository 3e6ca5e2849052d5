use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::bitset::BitSet;

/// A set of module element indices, expected to be closed under addition
/// and the scalar action (see [`FiniteModule::validate_submodule`]).
///
/// The canonical order is by cardinality, then lexicographically by the
/// sorted member list. The zero submodule is therefore the least element of
/// every lattice and the whole module the greatest.
///
/// [`FiniteModule::validate_submodule`]: super::FiniteModule::validate_submodule
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Submodule {
    bits: BitSet,
    len: usize,
}

impl Submodule {
    pub fn from_bits(bits: BitSet) -> Self {
        let len = bits.count();
        Submodule { bits, len }
    }

    pub fn from_indices(order: usize, members: impl IntoIterator<Item = usize>) -> Self {
        Self::from_bits(BitSet::from_indices(order, members))
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// Never true for a valid submodule; present for API completeness.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    pub fn members(&self) -> Vec<usize> {
        self.bits.iter().collect()
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn meet(&self, other: &Submodule) -> Submodule {
        Submodule::from_bits(self.bits.intersection(&other.bits))
    }

    /// Least nonzero member index, or the zero element for the zero
    /// submodule.
    pub fn least_nonzero(&self, zero: usize) -> usize {
        self.iter().find(|&x| x != zero).unwrap_or(zero)
    }
}

impl Ord for Submodule {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.bits.cmp_members(&other.bits))
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.bits)
    }
}

impl Serialize for Submodule {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.bits.iter())
    }
}
