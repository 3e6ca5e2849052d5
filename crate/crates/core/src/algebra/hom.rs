use std::fmt;

use super::submodule::Submodule;
use super::validate::{Law, Violation};
use super::FiniteModule;
use crate::bitset::BitSet;
use crate::{Error, Result};

/// A map between module carriers, `map[x]` being the image of `x`.
#[derive(Clone)]
pub struct ModuleHom {
    source: FiniteModule,
    target: FiniteModule,
    map: Vec<usize>,
}

impl ModuleHom {
    /// Validated constructor: the modules must be compatible and the map
    /// additive and scalar-linear.
    pub fn new(source: FiniteModule, target: FiniteModule, map: Vec<usize>) -> Result<Self> {
        if !source.compatible(&target) {
            return Err(Error::RingMismatch);
        }
        if map.len() != source.order() || map.iter().any(|&y| y >= target.order()) {
            return Err(Error::Axiom(Violation::new(Law::TableShape, [map.len()])));
        }
        let hom = ModuleHom { source, target, map };
        match hom.validate().into_iter().next() {
            Some(v) => Err(Error::Axiom(v)),
            None => Ok(hom),
        }
    }

    pub(crate) fn unchecked(source: FiniteModule, target: FiniteModule, map: Vec<u32>) -> Self {
        ModuleHom {
            source,
            target,
            map: map.into_iter().map(|v| v as usize).collect(),
        }
    }

    pub(crate) fn from_vec_unchecked(source: FiniteModule, target: FiniteModule, map: Vec<usize>) -> Self {
        ModuleHom { source, target, map }
    }

    pub fn identity(module: &FiniteModule) -> Self {
        ModuleHom {
            source: module.clone(),
            target: module.clone(),
            map: module.elements().collect(),
        }
    }

    pub fn source(&self) -> &FiniteModule {
        &self.source
    }

    pub fn target(&self) -> &FiniteModule {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// Additivity over all pairs and linearity over all scalars.
    pub fn validate(&self) -> Vec<Violation> {
        let (m, n) = (&self.source, &self.target);
        let mut out = Vec::new();
        'add: for a in m.elements() {
            for b in m.elements() {
                if self.map[m.add(a, b)] != n.add(self.map[a], self.map[b]) {
                    out.push(Violation::new(Law::HomAdditive, [a, b]));
                    break 'add;
                }
            }
        }
        'lin: for r in m.ring().elements() {
            for x in m.elements() {
                if self.map[m.act(r, x)] != n.act(r, self.map[x]) {
                    out.push(Violation::new(Law::HomLinear, [r, x]));
                    break 'lin;
                }
            }
        }
        out
    }

    pub fn image(&self, sub: &Submodule) -> Submodule {
        Submodule::from_bits(BitSet::from_indices(self.target.order(), sub.iter().map(|x| self.map[x])))
    }

    pub fn full_image(&self) -> Submodule {
        self.image(&self.source.whole())
    }

    pub fn preimage(&self, sub: &Submodule) -> Submodule {
        Submodule::from_bits(BitSet::from_indices(
            self.source.order(),
            self.source.elements().filter(|&x| sub.contains(self.map[x])),
        ))
    }

    pub fn kernel(&self) -> Submodule {
        self.preimage(&self.target.zero_submodule())
    }

    pub fn is_surjective(&self) -> bool {
        self.full_image().len() == self.target.order()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().len() == 1
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose_after(&self, first: &ModuleHom) -> Result<ModuleHom> {
        if !first.target.same_tables(&self.source) {
            return Err(Error::Precondition("composition of non-adjacent maps".into()));
        }
        Ok(ModuleHom {
            source: first.source.clone(),
            target: self.target.clone(),
            map: first.map.iter().map(|&x| self.map[x]).collect(),
        })
    }
}

impl fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}: {:?}", self.source.name(), self.target.name(), self.map)
    }
}
