use std::fmt;
use std::sync::Arc;

use super::validate::{abelian_group, table_in_range, Law, Violation};
use super::{capped_product, digits, encode};
use crate::{Caps, Error, Result};

/// A finite associative unital ring stored as addition and multiplication
/// tables over element indices. Cloning is cheap.
#[derive(Clone)]
pub struct FiniteRing(Arc<RingData>);

struct RingData {
    name: String,
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
}

impl FiniteRing {
    /// Builds a ring from already-trusted flat tables.
    fn assemble(name: String, order: usize, add: Vec<u32>, mul: Vec<u32>, zero: usize, one: usize) -> Self {
        let neg = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| add[x * order + y] as usize == zero)
                    .expect("additive inverse exists in a trusted table") as u32
            })
            .collect();
        FiniteRing(Arc::new(RingData {
            name,
            order,
            add,
            mul,
            neg,
            zero,
            one,
        }))
    }

    /// Ring from raw tables. The additive identity is located in the table;
    /// every axiom is checked exhaustively and the first violation reported.
    pub fn from_tables(
        name: impl Into<String>,
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
        one: usize,
    ) -> Result<Self> {
        let order = add.len();
        Caps::check(Caps::current().elements, order, "ring")?;
        let flatten = |rows: &[Vec<usize>]| -> Result<Vec<u32>> {
            if rows.len() != order {
                return Err(Error::Axiom(Violation::new(Law::TableShape, [rows.len()])));
            }
            let mut flat = Vec::with_capacity(order * order);
            for (i, row) in rows.iter().enumerate() {
                if row.len() != order {
                    return Err(Error::Axiom(Violation::new(Law::TableShape, [i])));
                }
                flat.extend(row.iter().map(|&v| v as u32));
            }
            Ok(flat)
        };
        let add = flatten(add)?;
        let mul = flatten(mul)?;
        if order == 0 || one >= order {
            return Err(Error::Axiom(Violation::new(Law::MulIdentity, [one])));
        }
        if let Some(v) = table_in_range(order, &add, order).or_else(|| table_in_range(order, &mul, order)) {
            return Err(Error::Axiom(v));
        }
        let zero = (0..order)
            .find(|&e| (0..order).all(|x| add[e * order + x] as usize == x && add[x * order + e] as usize == x))
            .ok_or(Error::Axiom(Violation::new(Law::AddIdentity, [])))?;
        let violations = ring_axioms(order, &add, &mul, zero, one);
        if let Some(v) = violations.into_iter().next() {
            return Err(Error::Axiom(v));
        }
        Ok(Self::assemble(name.into(), order, add, mul, zero, one))
    }

    /// Integers modulo `n`, indexed by residue.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("cyclic ring needs n >= 1".into()));
        }
        Caps::check(Caps::current().elements, n, "ring")?;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push(((a + b) % n) as u32);
                mul.push(((a * b) % n) as u32);
            }
        }
        Ok(Self::assemble(format!("Z/{n}"), n, add, mul, 0, 1 % n))
    }

    /// Full `size × size` matrices over `base`, entries row-major.
    pub fn matrix(base: &FiniteRing, size: usize) -> Result<Self> {
        let cells: Vec<(usize, usize)> = (0..size).flat_map(|i| (0..size).map(move |j| (i, j))).collect();
        Self::matrix_like(base, size, cells, format!("M{size}({})", base.name()))
    }

    /// Upper-triangular `size × size` matrices over `base`; the entries on
    /// and above the diagonal are the coordinates, row-major.
    pub fn triangular(base: &FiniteRing, size: usize) -> Result<Self> {
        let cells: Vec<(usize, usize)> = (0..size).flat_map(|i| (i..size).map(move |j| (i, j))).collect();
        Self::matrix_like(base, size, cells, format!("T{size}({})", base.name()))
    }

    fn matrix_like(base: &FiniteRing, size: usize, cells: Vec<(usize, usize)>, name: String) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidSpec("matrix size must be >= 1".into()));
        }
        let q = base.order();
        let radices = vec![q; cells.len()];
        let order = capped_product(&radices, Caps::current().elements, "ring")?;
        let mut slot = vec![None; size * size];
        for (k, &(i, j)) in cells.iter().enumerate() {
            slot[i * size + j] = Some(k);
        }
        let entry = |m: &[usize], i: usize, j: usize| slot[i * size + j].map_or(base.zero(), |k| m[k]);
        let decoded: Vec<Vec<usize>> = (0..order).map(|x| digits(x, &radices)).collect();
        let mut add = Vec::with_capacity(order * order);
        let mut mul = Vec::with_capacity(order * order);
        for a in &decoded {
            for b in &decoded {
                let sum: Vec<usize> = a.iter().zip(b).map(|(&x, &y)| base.add(x, y)).collect();
                add.push(encode(&sum, &radices) as u32);
                let prod: Vec<usize> = cells
                    .iter()
                    .map(|&(i, j)| {
                        (0..size).fold(base.zero(), |acc, k| base.add(acc, base.mul(entry(a, i, k), entry(b, k, j))))
                    })
                    .collect();
                mul.push(encode(&prod, &radices) as u32);
            }
        }
        let one_digits: Vec<usize> = cells
            .iter()
            .map(|&(i, j)| if i == j { base.one() } else { base.zero() })
            .collect();
        let zero = encode(&vec![base.zero(); cells.len()], &radices);
        Ok(Self::assemble(name, order, add, mul, zero, encode(&one_digits, &radices)))
    }

    /// Direct product of rings, mixed-radix indexed with the first factor
    /// most significant. The empty product is the zero ring.
    pub fn product(factors: &[FiniteRing]) -> Result<Self> {
        let radices: Vec<usize> = factors.iter().map(FiniteRing::order).collect();
        let order = capped_product(&radices, Caps::current().elements, "ring")?;
        let decoded: Vec<Vec<usize>> = (0..order).map(|x| digits(x, &radices)).collect();
        let mut add = Vec::with_capacity(order * order);
        let mut mul = Vec::with_capacity(order * order);
        for a in &decoded {
            for b in &decoded {
                let s: Vec<usize> = factors.iter().zip(a.iter().zip(b)).map(|(r, (&x, &y))| r.add(x, y)).collect();
                let p: Vec<usize> = factors.iter().zip(a.iter().zip(b)).map(|(r, (&x, &y))| r.mul(x, y)).collect();
                add.push(encode(&s, &radices) as u32);
                mul.push(encode(&p, &radices) as u32);
            }
        }
        let zero: Vec<usize> = factors.iter().map(FiniteRing::zero).collect();
        let one: Vec<usize> = factors.iter().map(FiniteRing::one).collect();
        let name = factors.iter().map(|f| f.name().to_owned()).collect::<Vec<_>>().join(" x ");
        Ok(Self::assemble(
            if factors.is_empty() { "0".into() } else { name },
            order,
            add,
            mul,
            encode(&zero, &radices),
            encode(&one, &radices),
        ))
    }

    /// Same carrier and addition, multiplication reversed.
    pub fn opposite(&self) -> Self {
        let n = self.order();
        let mul = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| self.0.mul[b * n + a])
            .collect();
        let name = match self.name().strip_prefix("op(").and_then(|s| s.strip_suffix(')')) {
            Some(inner) => inner.to_owned(),
            None => format!("op({})", self.name()),
        };
        FiniteRing(Arc::new(RingData {
            name,
            order: n,
            add: self.0.add.clone(),
            mul,
            neg: self.0.neg.clone(),
            zero: self.0.zero,
            one: self.0.one,
        }))
    }

    pub fn with_name(&self, name: impl Into<String>) -> Self {
        FiniteRing(Arc::new(RingData {
            name: name.into(),
            order: self.0.order,
            add: self.0.add.clone(),
            mul: self.0.mul.clone(),
            neg: self.0.neg.clone(),
            zero: self.0.zero,
            one: self.0.one,
        }))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn zero(&self) -> usize {
        self.0.zero
    }

    pub fn one(&self) -> usize {
        self.0.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.0.add[a * self.0.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.mul[a * self.0.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.0.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.0.order
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// First pair `(a, b)` with `ab != ba`.
    pub fn noncommuting_pair(&self) -> Option<(usize, usize)> {
        self.elements()
            .flat_map(|a| self.elements().map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    pub fn has_left_inverse(&self, a: usize) -> bool {
        self.elements().any(|b| self.mul(b, a) == self.one())
    }

    pub fn has_right_inverse(&self, a: usize) -> bool {
        self.elements().any(|b| self.mul(a, b) == self.one())
    }

    /// Two-sided invertibility.
    pub fn is_unit(&self, a: usize) -> bool {
        self.has_left_inverse(a) && self.has_right_inverse(a)
    }

    pub fn units(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.is_unit(a)).collect()
    }

    /// Exhaustive check of every ring axiom; empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        ring_axioms(self.0.order, &self.0.add, &self.0.mul, self.0.zero, self.0.one)
    }

    /// Tables equal (names ignored).
    pub fn same_tables(&self, other: &FiniteRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.order == other.0.order
                && self.0.zero == other.0.zero
                && self.0.one == other.0.one
                && self.0.add == other.0.add
                && self.0.mul == other.0.mul)
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.same_tables(other)
    }
}

impl Eq for FiniteRing {}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.0.name, self.0.order)
    }
}

fn ring_axioms(order: usize, add: &[u32], mul: &[u32], zero: usize, one: usize) -> Vec<Violation> {
    let mut out = abelian_group(order, add, zero);
    let plus = |a: usize, b: usize| add[a * order + b] as usize;
    let times = |a: usize, b: usize| mul[a * order + b] as usize;
    if let Some(x) = (0..order).find(|&x| times(one, x) != x || times(x, one) != x) {
        out.push(Violation::new(Law::MulIdentity, [one, x]));
    }
    if zero == one && order > 1 {
        out.push(Violation::new(Law::ZeroIsOne, [zero]));
    }
    let mut assoc = None;
    let mut left = None;
    let mut right = None;
    'outer: for a in 0..order {
        for b in 0..order {
            let ab = times(a, b);
            let a_plus_b = plus(a, b);
            for c in 0..order {
                if assoc.is_none() && times(ab, c) != times(a, times(b, c)) {
                    assoc = Some([a, b, c]);
                }
                if left.is_none() && times(a, plus(b, c)) != plus(ab, times(a, c)) {
                    left = Some([a, b, c]);
                }
                if right.is_none() && times(a_plus_b, c) != plus(times(a, c), times(b, c)) {
                    right = Some([a, b, c]);
                }
                if assoc.is_some() && left.is_some() && right.is_some() {
                    break 'outer;
                }
            }
        }
    }
    out.extend(assoc.map(|w| Violation::new(Law::MulAssociative, w)));
    out.extend(left.map(|w| Violation::new(Law::LeftDistributive, w)));
    out.extend(right.map(|w| Violation::new(Law::RightDistributive, w)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn cyclic_twelve_has_four_units() {
        let r = FiniteRing::cyclic(12).unwrap();
        assert_eq!(r.order(), 12);
        // oracle: residues coprime to 12
        let coprime: Vec<usize> = (0..12).filter(|&a| gcd(a, 12) == 1).collect();
        assert_eq!(coprime, vec![1, 5, 7, 11]);
        assert_eq!(r.units(), coprime);
        assert!(r.validate().is_empty());
    }

    #[test]
    fn cyclic_one_is_the_zero_ring() {
        let r = FiniteRing::cyclic(1).unwrap();
        assert_eq!(r.order(), 1);
        assert_eq!(r.zero(), r.one());
        assert!(r.validate().is_empty());
        assert_eq!(r.units(), vec![0]);
    }

    #[test]
    fn triangular_over_f2_has_order_eight() {
        let f2 = FiniteRing::cyclic(2).unwrap();
        let t = FiniteRing::triangular(&f2, 2).unwrap();
        // three free entries over a two-element field
        assert_eq!(t.order(), 2usize.pow(3));
        assert!(t.validate().is_empty());
        assert!(!t.is_commutative());
        // coordinates (a11, a12, a22), most significant first: identity = 101b
        assert_eq!(t.one(), 0b101);
    }

    #[test]
    fn matrix_ring_identity_and_axioms() {
        let f2 = FiniteRing::cyclic(2).unwrap();
        let m = FiniteRing::matrix(&f2, 2).unwrap();
        assert_eq!(m.order(), 16);
        assert_eq!(m.one(), 0b1001);
        assert!(m.validate().is_empty());
        assert_eq!(m.units().len(), 6);
    }

    #[test]
    fn product_is_mixed_radix() {
        let r = FiniteRing::product(&[FiniteRing::cyclic(2).unwrap(), FiniteRing::cyclic(3).unwrap()]).unwrap();
        assert_eq!(r.order(), 6);
        assert_eq!(r.one(), 3 + 1);
        assert!(r.validate().is_empty());
        // (1,2) + (1,2) = (0,1)
        assert_eq!(r.add(5, 5), 1);
    }

    #[test]
    fn opposite_behaviour() {
        let z12 = FiniteRing::cyclic(12).unwrap();
        assert!(z12.opposite().same_tables(&z12));
        let t = FiniteRing::triangular(&FiniteRing::cyclic(2).unwrap(), 2).unwrap();
        let op = t.opposite();
        let (a, b) = t.noncommuting_pair().unwrap();
        assert_ne!(op.mul(a, b), t.mul(a, b));
        assert!(op.validate().is_empty());
        assert!(op.opposite().same_tables(&t));
        assert_eq!(op.opposite().name(), t.name());
    }

    #[test]
    fn from_tables_reports_associativity_triple() {
        // Z/3 with 2*2 changed to 2: still an associative monoid, but
        // 2*(1+1) != 2*1 + 2*1.
        let add: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let mut mul: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a * b) % 3).collect()).collect();
        mul[2][2] = 2;
        let err = FiniteRing::from_tables("bad", &add, &mul, 1).unwrap_err();
        match err {
            Error::Axiom(v) => {
                assert!(matches!(v.law, Law::MulAssociative | Law::LeftDistributive | Law::RightDistributive));
                assert_eq!(v.witness.len(), 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn from_tables_accepts_valid_and_rejects_shape() {
        let add: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        let mul: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a * b) % 4).collect()).collect();
        let r = FiniteRing::from_tables("z4", &add, &mul, 1).unwrap();
        assert!(r.same_tables(&FiniteRing::cyclic(4).unwrap()));
        let short = vec![vec![0, 1], vec![1]];
        assert!(FiniteRing::from_tables("x", &short, &short, 0).is_err());
        assert!(matches!(
            FiniteRing::from_tables("x", &add, &mul, 9),
            Err(Error::Axiom(Violation { law: Law::MulIdentity, .. }))
        ));
    }
}
