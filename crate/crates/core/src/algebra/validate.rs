use std::fmt;

use serde::Serialize;

/// The law a table fails, for [`Violation`] reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    TableShape,
    AddIdentity,
    AddInverse,
    AddCommutative,
    AddAssociative,
    MulIdentity,
    MulAssociative,
    LeftDistributive,
    RightDistributive,
    ZeroIsOne,
    ActionAddsRing,
    ActionAddsModule,
    ActionUnital,
    ActionAssociative,
    ContainsZero,
    ClosedUnderAddition,
    ClosedUnderAction,
    HomAdditive,
    HomLinear,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Law::TableShape => "table shape",
            Law::AddIdentity => "additive identity",
            Law::AddInverse => "additive inverses",
            Law::AddCommutative => "commutativity of addition",
            Law::AddAssociative => "associativity of addition",
            Law::MulIdentity => "multiplicative identity",
            Law::MulAssociative => "associativity of multiplication",
            Law::LeftDistributive => "left distributivity",
            Law::RightDistributive => "right distributivity",
            Law::ZeroIsOne => "zero distinct from one",
            Law::ActionAddsRing => "action additive in the ring argument",
            Law::ActionAddsModule => "action additive in the module argument",
            Law::ActionUnital => "unital action",
            Law::ActionAssociative => "associativity of the action",
            Law::ContainsZero => "submodule contains zero",
            Law::ClosedUnderAddition => "closure under addition",
            Law::ClosedUnderAction => "closure under scalar action",
            Law::HomAdditive => "additivity of the map",
            Law::HomLinear => "scalar linearity of the map",
        };
        f.write_str(text)
    }
}

/// A failed law together with the tuple of element indices witnessing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<usize>,
}

impl Violation {
    pub(crate) fn new(law: Law, witness: impl Into<Vec<usize>>) -> Self {
        Violation {
            law,
            witness: witness.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at (", self.law)?;
        for (i, w) in self.witness.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

/// Abelian group axioms for a flat `order × order` table. Returns the first
/// witness per failing law.
pub(crate) fn abelian_group(order: usize, add: &[u32], zero: usize) -> Vec<Violation> {
    let op = |a: usize, b: usize| add[a * order + b] as usize;
    let mut out = Vec::new();
    if let Some(x) = (0..order).find(|&x| op(zero, x) != x) {
        out.push(Violation::new(Law::AddIdentity, [zero, x]));
    }
    if let Some(x) = (0..order).find(|&x| (0..order).all(|y| op(x, y) != zero)) {
        out.push(Violation::new(Law::AddInverse, [x]));
    }
    'comm: for a in 0..order {
        for b in a + 1..order {
            if op(a, b) != op(b, a) {
                out.push(Violation::new(Law::AddCommutative, [a, b]));
                break 'comm;
            }
        }
    }
    'assoc: for a in 0..order {
        for b in 0..order {
            let ab = op(a, b);
            for c in 0..order {
                if op(ab, c) != op(a, op(b, c)) {
                    out.push(Violation::new(Law::AddAssociative, [a, b, c]));
                    break 'assoc;
                }
            }
        }
    }
    out
}

pub(crate) fn table_in_range(order: usize, table: &[u32], width: usize) -> Option<Violation> {
    table
        .iter()
        .position(|&v| v as usize >= order)
        .map(|pos| Violation::new(Law::TableShape, [pos / width, pos % width]))
}
