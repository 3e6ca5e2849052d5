use std::fmt;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::hom::ModuleHom;
use super::submodule::Submodule;
use super::validate::{abelian_group, table_in_range, Law, Violation};
use super::{capped_product, digits, encode, FiniteRing};
use crate::bitset::BitSet;
use crate::lattice::SubmoduleLattice;
use crate::{Caps, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A finite left or right module over a [`FiniteRing`].
///
/// `act(r, m)` is `r·m` for left modules and `m·r` for right modules.
/// Cloning is cheap; the submodule lattice, restrictions and quotients are
/// computed once and cached.
#[derive(Clone)]
pub struct FiniteModule(Arc<ModuleData>);

struct ModuleData {
    name: String,
    ring: FiniteRing,
    side: Side,
    order: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    act: Vec<u32>,
    lattice: OnceLock<Arc<SubmoduleLattice>>,
    restrictions: Mutex<HashMap<Submodule, FiniteModule>>,
    quotients: Mutex<HashMap<Submodule, (FiniteModule, Vec<u32>)>>,
}

/// A direct sum with its canonical embeddings and projections.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub module: FiniteModule,
    pub embeddings: Vec<ModuleHom>,
    pub projections: Vec<ModuleHom>,
}

/// A quotient module with its projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub module: FiniteModule,
    pub projection: ModuleHom,
}

/// A submodule viewed as a module in its own right, with the inclusion.
#[derive(Debug, Clone)]
pub struct Restriction {
    pub module: FiniteModule,
    pub inclusion: ModuleHom,
}

impl FiniteModule {
    pub(crate) fn assemble(
        name: String,
        ring: FiniteRing,
        side: Side,
        order: usize,
        add: Vec<u32>,
        zero: usize,
        act: Vec<u32>,
    ) -> Self {
        let neg = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| add[x * order + y] as usize == zero)
                    .expect("additive inverse exists in a trusted table") as u32
            })
            .collect();
        FiniteModule(Arc::new(ModuleData {
            name,
            ring,
            side,
            order,
            add,
            neg,
            zero,
            act,
            lattice: OnceLock::new(),
            restrictions: Mutex::default(),
            quotients: Mutex::default(),
        }))
    }

    /// Module from raw tables: `add` is `order × order`, `act` is
    /// `ring.order() × order`. All axioms are checked.
    pub fn from_tables(
        name: impl Into<String>,
        ring: &FiniteRing,
        side: Side,
        add: &[Vec<usize>],
        act: &[Vec<usize>],
    ) -> Result<Self> {
        let order = add.len();
        Caps::check(Caps::current().elements, order, "module")?;
        if order == 0 || add.iter().any(|row| row.len() != order) {
            return Err(Error::Axiom(Violation::new(Law::TableShape, [order])));
        }
        if act.len() != ring.order() || act.iter().any(|row| row.len() != order) {
            return Err(Error::Axiom(Violation::new(Law::TableShape, [act.len()])));
        }
        let add_flat: Vec<u32> = add.iter().flatten().map(|&v| v as u32).collect();
        let act_flat: Vec<u32> = act.iter().flatten().map(|&v| v as u32).collect();
        if let Some(v) = table_in_range(order, &add_flat, order).or_else(|| table_in_range(order, &act_flat, order)) {
            return Err(Error::Axiom(v));
        }
        let zero = (0..order)
            .find(|&e| (0..order).all(|x| add_flat[e * order + x] as usize == x))
            .ok_or(Error::Axiom(Violation::new(Law::AddIdentity, [])))?;
        let violations = module_axioms(ring, side, order, &add_flat, zero, &act_flat);
        if let Some(v) = violations.into_iter().next() {
            return Err(Error::Axiom(v));
        }
        Ok(Self::assemble(name.into(), ring.clone(), side, order, add_flat, zero, act_flat))
    }

    /// `R` acting on itself by left (`r·m = rm`) or right (`m·r = mr`)
    /// multiplication.
    pub fn regular(ring: &FiniteRing, side: Side) -> Self {
        let n = ring.order();
        let add = (0..n * n).map(|i| ring.add(i / n, i % n) as u32).collect();
        let act = (0..n * n)
            .map(|i| {
                let (r, m) = (i / n, i % n);
                let product = match side {
                    Side::Left => ring.mul(r, m),
                    Side::Right => ring.mul(m, r),
                };
                product as u32
            })
            .collect();
        let name = match side {
            Side::Left => format!("_R({})", ring.name()),
            Side::Right => format!("({})_R", ring.name()),
        };
        Self::assemble(name, ring.clone(), side, n, add, ring.zero(), act)
    }

    pub fn zero_module(ring: &FiniteRing, side: Side) -> Self {
        Self::assemble("0".into(), ring.clone(), side, 1, vec![0], 0, vec![0; ring.order()])
    }

    /// Componentwise direct sum, first part most significant. The empty sum
    /// is the zero module.
    pub fn direct_sum(ring: &FiniteRing, side: Side, parts: &[FiniteModule]) -> Result<DirectSum> {
        if parts.iter().any(|p| p.side() != side || p.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        let radices: Vec<usize> = parts.iter().map(FiniteModule::order).collect();
        let order = capped_product(&radices, Caps::current().elements, "module")?;
        let decoded: Vec<Vec<usize>> = (0..order).map(|x| digits(x, &radices)).collect();
        let mut add = Vec::with_capacity(order * order);
        for a in &decoded {
            for b in &decoded {
                let s: Vec<usize> = parts.iter().zip(a.iter().zip(b)).map(|(p, (&x, &y))| p.add(x, y)).collect();
                add.push(encode(&s, &radices) as u32);
            }
        }
        let mut act = Vec::with_capacity(ring.order() * order);
        for r in ring.elements() {
            for a in &decoded {
                let s: Vec<usize> = parts.iter().zip(a).map(|(p, &x)| p.act(r, x)).collect();
                act.push(encode(&s, &radices) as u32);
            }
        }
        let zero: Vec<usize> = parts.iter().map(FiniteModule::zero).collect();
        let name = if parts.is_empty() {
            "0".to_owned()
        } else {
            parts.iter().map(|p| p.name().to_owned()).collect::<Vec<_>>().join(" (+) ")
        };
        let module = Self::assemble(name, ring.clone(), side, order, add, encode(&zero, &radices), act);
        let mut embeddings = Vec::with_capacity(parts.len());
        let mut projections = Vec::with_capacity(parts.len());
        for (k, part) in parts.iter().enumerate() {
            let embed = (0..part.order())
                .map(|x| {
                    let mut coords = zero.clone();
                    coords[k] = x;
                    encode(&coords, &radices) as u32
                })
                .collect();
            embeddings.push(ModuleHom::unchecked(part.clone(), module.clone(), embed));
            let project = decoded.iter().map(|d| d[k] as u32).collect();
            projections.push(ModuleHom::unchecked(module.clone(), part.clone(), project));
        }
        Ok(DirectSum {
            module,
            embeddings,
            projections,
        })
    }

    /// `M/N`, cosets indexed in increasing order of their least member.
    pub fn quotient(&self, sub: &Submodule) -> Result<Quotient> {
        if let Some(v) = self.validate_submodule(sub) {
            return Err(Error::NotSubmodule(v.to_string()));
        }
        if let Some((module, class)) = self.0.quotients.lock().expect("cache lock").get(sub) {
            return Ok(Quotient {
                module: module.clone(),
                projection: ModuleHom::unchecked(self.clone(), module.clone(), class.clone()),
            });
        }
        let n = self.order();
        let label: Vec<usize> = (0..n)
            .map(|x| sub.iter().map(|s| self.add(x, s)).min().expect("submodule contains zero"))
            .collect();
        let mut reps: Vec<usize> = label.clone();
        reps.sort_unstable();
        reps.dedup();
        let mut class_of_rep = vec![usize::MAX; n];
        for (i, &r) in reps.iter().enumerate() {
            class_of_rep[r] = i;
        }
        let class: Vec<usize> = label.iter().map(|&l| class_of_rep[l]).collect();
        let q = reps.len();
        let add = (0..q * q)
            .map(|i| class[self.add(reps[i / q], reps[i % q])] as u32)
            .collect();
        let ring = self.ring();
        let act = (0..ring.order() * q)
            .map(|i| class[self.act(i / q, reps[i % q])] as u32)
            .collect();
        let module = Self::assemble(
            format!("{}/{}", self.name(), sub.len()),
            ring.clone(),
            self.side(),
            q,
            add,
            class[self.zero()],
            act,
        );
        let class: Vec<u32> = class.iter().map(|&c| c as u32).collect();
        let projection = ModuleHom::unchecked(self.clone(), module.clone(), class.clone());
        self.0.quotients.lock().expect("cache lock").insert(sub.clone(), (module.clone(), class));
        Ok(Quotient { module, projection })
    }

    /// The submodule as a module, its members re-indexed in increasing order.
    pub fn restrict(&self, sub: &Submodule) -> Result<Restriction> {
        if let Some(v) = self.validate_submodule(sub) {
            return Err(Error::NotSubmodule(v.to_string()));
        }
        let members: Vec<usize> = sub.iter().collect();
        let inclusion = |module: &FiniteModule| {
            ModuleHom::unchecked(module.clone(), self.clone(), members.iter().map(|&m| m as u32).collect())
        };
        if let Some(module) = self.0.restrictions.lock().expect("cache lock").get(sub) {
            return Ok(Restriction {
                module: module.clone(),
                inclusion: inclusion(module),
            });
        }
        let mut position = vec![usize::MAX; self.order()];
        for (i, &m) in members.iter().enumerate() {
            position[m] = i;
        }
        let k = members.len();
        let add = (0..k * k)
            .map(|i| position[self.add(members[i / k], members[i % k])] as u32)
            .collect();
        let ring = self.ring();
        let act = (0..ring.order() * k)
            .map(|i| position[self.act(i / k, members[i % k])] as u32)
            .collect();
        let module = Self::assemble(
            format!("{}|{}", self.name(), k),
            ring.clone(),
            self.side(),
            k,
            add,
            position[self.zero()],
            act,
        );
        self.0.restrictions.lock().expect("cache lock").insert(sub.clone(), module.clone());
        Ok(Restriction {
            inclusion: inclusion(&module),
            module,
        })
    }

    pub fn with_name(&self, name: impl Into<String>) -> Self {
        Self::assemble(
            name.into(),
            self.0.ring.clone(),
            self.0.side,
            self.0.order,
            self.0.add.clone(),
            self.0.zero,
            self.0.act.clone(),
        )
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.0.ring
    }

    pub fn side(&self) -> Side {
        self.0.side
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn zero(&self) -> usize {
        self.0.zero
    }

    pub fn is_zero(&self) -> bool {
        self.0.order == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.0.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.0.add[a * self.0.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.0.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Scalar action of ring element `r` on `m`, on the module's side.
    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.0.act[r * self.0.order + m] as usize
    }

    pub fn zero_submodule(&self) -> Submodule {
        Submodule::from_bits(BitSet::from_indices(self.order(), [self.zero()]))
    }

    pub fn whole(&self) -> Submodule {
        Submodule::from_bits(BitSet::full(self.order()))
    }

    /// The cyclic submodule `{r·x}` (or `{x·r}`).
    pub fn cyclic(&self, x: usize) -> Submodule {
        Submodule::from_bits(BitSet::from_indices(
            self.order(),
            self.ring().elements().map(|r| self.act(r, x)),
        ))
    }

    /// `A + B` as the set of sums; a submodule whenever both inputs are.
    pub fn sum(&self, a: &Submodule, b: &Submodule) -> Submodule {
        if a.is_subset(b) {
            return b.clone();
        }
        if b.is_subset(a) {
            return a.clone();
        }
        let mut bits = BitSet::new(self.order());
        let bs: Vec<usize> = b.iter().collect();
        for x in a.iter() {
            for &y in &bs {
                bits.insert(self.add(x, y));
            }
        }
        Submodule::from_bits(bits)
    }

    /// Exhaustive check of the module axioms; empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        module_axioms(self.ring(), self.side(), self.order(), &self.0.add, self.zero(), &self.0.act)
    }

    /// Checks that `sub` contains zero and is closed under addition and the
    /// scalar action; returns the first violation.
    pub fn validate_submodule(&self, sub: &Submodule) -> Option<Violation> {
        if sub.bits().capacity() != self.order() {
            return Some(Violation::new(Law::TableShape, [sub.bits().capacity()]));
        }
        if !sub.contains(self.zero()) {
            return Some(Violation::new(Law::ContainsZero, [self.zero()]));
        }
        let members: Vec<usize> = sub.iter().collect();
        for &a in &members {
            for &b in &members {
                let s = self.add(a, b);
                if !sub.contains(s) {
                    return Some(Violation::new(Law::ClosedUnderAddition, [a, b, s]));
                }
            }
        }
        for r in self.ring().elements() {
            for &m in &members {
                let s = self.act(r, m);
                if !sub.contains(s) {
                    return Some(Violation::new(Law::ClosedUnderAction, [r, m, s]));
                }
            }
        }
        None
    }

    pub(crate) fn cached_lattice(&self) -> Option<Arc<SubmoduleLattice>> {
        self.0.lattice.get().cloned()
    }

    pub(crate) fn cache_lattice(&self, lattice: Arc<SubmoduleLattice>) -> Arc<SubmoduleLattice> {
        self.0.lattice.get_or_init(|| lattice).clone()
    }

    /// Same ring, side and tables (names ignored).
    pub fn same_tables(&self, other: &FiniteModule) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.order == other.0.order
                && self.0.side == other.0.side
                && self.0.zero == other.0.zero
                && self.0.add == other.0.add
                && self.0.act == other.0.act
                && self.0.ring == other.0.ring)
    }

    pub fn compatible(&self, other: &FiniteModule) -> bool {
        self.side() == other.side() && self.ring() == other.ring()
    }
}

impl PartialEq for FiniteModule {
    fn eq(&self, other: &Self) -> bool {
        self.same_tables(other)
    }
}

impl Eq for FiniteModule {}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteModule({}, {} over {}, order {})",
            self.0.name,
            self.0.side,
            self.0.ring.name(),
            self.0.order
        )
    }
}

fn module_axioms(ring: &FiniteRing, side: Side, order: usize, add: &[u32], zero: usize, act: &[u32]) -> Vec<Violation> {
    let mut out = abelian_group(order, add, zero);
    let plus = |a: usize, b: usize| add[a * order + b] as usize;
    let act = |r: usize, m: usize| act[r * order + m] as usize;
    if let Some(m) = (0..order).find(|&m| act(ring.one(), m) != m) {
        out.push(Violation::new(Law::ActionUnital, [ring.one(), m]));
    }
    let mut ring_add = None;
    let mut assoc = None;
    'outer: for r in ring.elements() {
        for s in ring.elements() {
            let r_plus_s = ring.add(r, s);
            // left: (rs)m = r(sm); right: m(rs) = (mr)s
            let rs = ring.mul(r, s);
            for m in 0..order {
                if ring_add.is_none() && act(r_plus_s, m) != plus(act(r, m), act(s, m)) {
                    ring_add = Some([r, s, m]);
                }
                let ok = match side {
                    Side::Left => act(rs, m) == act(r, act(s, m)),
                    Side::Right => act(rs, m) == act(s, act(r, m)),
                };
                if assoc.is_none() && !ok {
                    assoc = Some([r, s, m]);
                }
                if ring_add.is_some() && assoc.is_some() {
                    break 'outer;
                }
            }
        }
    }
    out.extend(ring_add.map(|w| Violation::new(Law::ActionAddsRing, w)));
    out.extend(assoc.map(|w| Violation::new(Law::ActionAssociative, w)));
    'module: for r in ring.elements() {
        for m in 0..order {
            for n in 0..order {
                if act(r, plus(m, n)) != plus(act(r, m), act(r, n)) {
                    out.push(Violation::new(Law::ActionAddsModule, [r, m, n]));
                    break 'module;
                }
            }
        }
    }
    out
}
