//! JSON-facing descriptions of rings and modules.
//!
//! ```json
//! {"kind": "triangular", "base": {"kind": "cyclic", "n": 2}, "size": 2}
//! {"kind": "quotient", "of": {"kind": "regular", "side": "left"}, "by": [2]}
//! ```

use serde::{Deserialize, Serialize};

use crate::algebra::{FiniteModule, FiniteRing, Side};
use crate::lattice::generated_submodule;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSpec {
    Cyclic { n: usize },
    Matrix { base: Box<RingSpec>, size: usize },
    Triangular { base: Box<RingSpec>, size: usize },
    Product { factors: Vec<RingSpec> },
    Tables { add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>, one: usize },
}

impl RingSpec {
    pub fn cyclic(n: usize) -> Self {
        RingSpec::Cyclic { n }
    }

    pub fn matrix(base: RingSpec, size: usize) -> Self {
        RingSpec::Matrix { base: Box::new(base), size }
    }

    pub fn triangular(base: RingSpec, size: usize) -> Self {
        RingSpec::Triangular { base: Box::new(base), size }
    }

    pub fn build(&self) -> Result<FiniteRing> {
        let ring = match self {
            RingSpec::Cyclic { n } => FiniteRing::cyclic(*n)?,
            RingSpec::Matrix { base, size } => FiniteRing::matrix(&base.build()?, *size)?,
            RingSpec::Triangular { base, size } => FiniteRing::triangular(&base.build()?, *size)?,
            RingSpec::Product { factors } => {
                let built = factors.iter().map(RingSpec::build).collect::<Result<Vec<_>>>()?;
                FiniteRing::product(&built)?
            }
            RingSpec::Tables { add, mul, one } => FiniteRing::from_tables("tables", add, mul, *one)?,
        };
        Ok(ring.with_name(self.label()))
    }

    /// Compact display label, e.g. `triangular(cyclic(2),2)`.
    pub fn label(&self) -> String {
        match self {
            RingSpec::Cyclic { n } => format!("cyclic({n})"),
            RingSpec::Matrix { base, size } => format!("matrix({},{size})", base.label()),
            RingSpec::Triangular { base, size } => format!("triangular({},{size})", base.label()),
            RingSpec::Product { factors } => {
                format!("product({})", factors.iter().map(RingSpec::label).collect::<Vec<_>>().join(","))
            }
            RingSpec::Tables { add, .. } => format!("tables({})", add.len()),
        }
    }
}

/// An element of a module being described: a raw index, or one coordinate
/// per summand of a direct sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Index(usize),
    Coords(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleSpec {
    Regular { side: Side },
    Quotient { of: Box<ModuleSpec>, by: Vec<ElementSpec> },
    DirectSum { parts: Vec<ModuleSpec> },
}

impl ModuleSpec {
    pub fn regular(side: Side) -> Self {
        ModuleSpec::Regular { side }
    }

    pub fn quotient(of: ModuleSpec, by: impl IntoIterator<Item = usize>) -> Self {
        ModuleSpec::Quotient {
            of: Box::new(of),
            by: by.into_iter().map(ElementSpec::Index).collect(),
        }
    }

    pub fn side(&self) -> Side {
        match self {
            ModuleSpec::Regular { side } => *side,
            ModuleSpec::Quotient { of, .. } => of.side(),
            ModuleSpec::DirectSum { parts } => parts.first().map_or(Side::Left, ModuleSpec::side),
        }
    }

    pub fn build(&self, ring: &FiniteRing) -> Result<FiniteModule> {
        let module = match self {
            ModuleSpec::Regular { side } => FiniteModule::regular(ring, *side),
            ModuleSpec::Quotient { of, by } => {
                let base = of.build(ring)?;
                let radices: Option<Vec<usize>> = match of.as_ref() {
                    ModuleSpec::DirectSum { parts } => Some(
                        parts
                            .iter()
                            .map(|p| p.build(ring).map(|m| m.order()))
                            .collect::<Result<_>>()?,
                    ),
                    _ => None,
                };
                let gens = by
                    .iter()
                    .map(|e| resolve(e, base.order(), radices.as_deref()))
                    .collect::<Result<Vec<_>>>()?;
                base.quotient(&generated_submodule(&base, gens))?.module
            }
            ModuleSpec::DirectSum { parts } => {
                let side = self.side();
                let built = parts.iter().map(|p| p.build(ring)).collect::<Result<Vec<_>>>()?;
                FiniteModule::direct_sum(ring, side, &built)?.module
            }
        };
        Ok(module.with_name(self.label()))
    }

    pub fn label(&self) -> String {
        match self {
            ModuleSpec::Regular { side } => format!("regular-{side}"),
            ModuleSpec::Quotient { of, by } => {
                let gens: Vec<String> = by
                    .iter()
                    .map(|e| match e {
                        ElementSpec::Index(i) => i.to_string(),
                        ElementSpec::Coords(c) => format!("{c:?}").replace(' ', ""),
                    })
                    .collect();
                format!("{}/<{}>", of.label(), gens.join(","))
            }
            ModuleSpec::DirectSum { parts } => {
                format!("sum({})", parts.iter().map(ModuleSpec::label).collect::<Vec<_>>().join(","))
            }
        }
    }
}

fn resolve(element: &ElementSpec, order: usize, radices: Option<&[usize]>) -> Result<usize> {
    let index = match (element, radices) {
        (ElementSpec::Index(i), _) => *i,
        (ElementSpec::Coords(coords), Some(radices)) => {
            if coords.len() != radices.len() || coords.iter().zip(radices).any(|(c, r)| c >= r) {
                return Err(Error::InvalidSpec(format!("coordinates {coords:?} outside factor orders {radices:?}")));
            }
            crate::algebra::encode(coords, radices)
        }
        (ElementSpec::Coords(coords), None) => {
            return Err(Error::InvalidSpec(format!("coordinates {coords:?} given for a module that is not a direct sum")))
        }
    };
    if index >= order {
        return Err(Error::InvalidSpec(format!("element {index} outside module of order {order}")));
    }
    Ok(index)
}
