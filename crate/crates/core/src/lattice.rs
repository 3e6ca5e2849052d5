//! Submodule lattices and the order-theoretic predicates on them.
//!
//! The lattice is enumerated by closing the set of cyclic submodules under
//! sums, starting from zero; subsets of the carrier are never scanned.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::{FiniteModule, Submodule};
use crate::bitset::BitSet;
use crate::{Caps, Error, Result};

/// Every submodule of a module, in canonical order, with cover relations.
#[derive(Debug)]
pub struct SubmoduleLattice {
    nodes: Vec<Submodule>,
    index: HashMap<BitSet, usize>,
    /// Indices of all supersets of each node (itself included), ascending.
    up: Vec<Vec<u32>>,
    upper_covers: Vec<Vec<u32>>,
    lower_covers: Vec<Vec<u32>>,
    /// Bit `k` of entry `i` is set when the `k`-th maximal submodule
    /// contains node `i`.
    maximal_above: Vec<BitSet>,
}

/// Least submodule containing `gens`, by worklist closure under addition and
/// the scalar action.
pub fn generated_submodule(module: &FiniteModule, gens: impl IntoIterator<Item = usize>) -> Submodule {
    let mut bits = BitSet::new(module.order());
    let mut members = Vec::new();
    let mut queue = VecDeque::new();
    let push = |x: usize, bits: &mut BitSet, queue: &mut VecDeque<usize>| {
        if bits.insert(x) {
            queue.push_back(x);
        }
    };
    push(module.zero(), &mut bits, &mut queue);
    for g in gens {
        push(g, &mut bits, &mut queue);
    }
    while let Some(x) = queue.pop_front() {
        members.push(x);
        for r in module.ring().elements() {
            push(module.act(r, x), &mut bits, &mut queue);
        }
        for &y in &members {
            push(module.add(x, y), &mut bits, &mut queue);
        }
    }
    Submodule::from_bits(bits)
}

/// The full submodule lattice of `module`, computed once per module value.
pub fn all_submodules(module: &FiniteModule) -> Result<Arc<SubmoduleLattice>> {
    if let Some(lattice) = module.cached_lattice() {
        return Ok(lattice);
    }
    let lattice = Arc::new(SubmoduleLattice::enumerate(module, Caps::current().lattice)?);
    Ok(module.cache_lattice(lattice))
}

impl SubmoduleLattice {
    fn enumerate(module: &FiniteModule, cap: usize) -> Result<Self> {
        let mut cyclics: Vec<Submodule> = module
            .elements()
            .map(|x| module.cyclic(x))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        cyclics.sort();
        let zero = module.zero_submodule();
        let mut seen: HashSet<BitSet> = HashSet::from([zero.bits().clone()]);
        let mut nodes = vec![zero.clone()];
        let mut queue = VecDeque::from([zero]);
        while let Some(current) = queue.pop_front() {
            for c in &cyclics {
                if c.is_subset(&current) {
                    continue;
                }
                let joined = module.sum(&current, c);
                if seen.insert(joined.bits().clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded {
                            what: "submodule lattice",
                            limit: cap,
                            actual: seen.len(),
                        });
                    }
                    nodes.push(joined.clone());
                    queue.push_back(joined);
                }
            }
        }
        Ok(Self::from_nodes(nodes))
    }

    fn from_nodes(mut nodes: Vec<Submodule>) -> Self {
        nodes.sort();
        let n = nodes.len();
        let index = nodes.iter().enumerate().map(|(i, s)| (s.bits().clone(), i)).collect();
        let up: Vec<Vec<u32>> = (0..n)
            .map(|i| (i..n).filter(|&j| nodes[i].is_subset(&nodes[j])).map(|j| j as u32).collect())
            .collect();
        let upper_covers: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                let mut covers: Vec<u32> = Vec::new();
                for &j in &up[i][1..] {
                    if !covers.iter().any(|&c| nodes[c as usize].is_subset(&nodes[j as usize])) {
                        covers.push(j);
                    }
                }
                covers
            })
            .collect();
        let mut lower_covers = vec![Vec::new(); n];
        for (i, covers) in upper_covers.iter().enumerate() {
            for &j in covers {
                lower_covers[j as usize].push(i as u32);
            }
        }
        let maximal = &lower_covers[n - 1];
        let maximal_above = nodes
            .iter()
            .map(|node| {
                BitSet::from_indices(
                    maximal.len(),
                    maximal
                        .iter()
                        .enumerate()
                        .filter(|(_, &k)| node.is_subset(&nodes[k as usize]))
                        .map(|(b, _)| b),
                )
            })
            .collect();
        SubmoduleLattice {
            nodes,
            index,
            up,
            upper_covers,
            lower_covers,
            maximal_above,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Submodule] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Submodule {
        &self.nodes[i]
    }

    pub fn index_of(&self, sub: &Submodule) -> Option<usize> {
        self.index.get(sub.bits()).copied()
    }

    /// Like [`index_of`](Self::index_of), erroring when `sub` is not a node.
    pub fn locate(&self, sub: &Submodule) -> Result<usize> {
        self.index_of(sub)
            .ok_or_else(|| Error::NotSubmodule(format!("{sub:?} is not in the lattice")))
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.nodes[i].is_subset(&self.nodes[j])
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        // `up[i]` is ascending in cardinality, so the first upper bound of
        // `j` is the least one.
        self.up[i]
            .iter()
            .map(|&k| k as usize)
            .find(|&k| self.nodes[j].is_subset(&self.nodes[k]))
            .expect("the whole module bounds every pair")
    }

    /// `node(i) + node(j)` is the whole module: in a finite module every
    /// proper submodule lies in a maximal one, so this holds iff no
    /// maximal submodule contains both.
    pub fn sums_to_top(&self, i: usize, j: usize) -> bool {
        self.maximal_above[i].is_disjoint(&self.maximal_above[j])
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.index[self.nodes[i].meet(&self.nodes[j]).bits()]
    }

    pub fn supersets(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.up[i].iter().map(|&k| k as usize)
    }

    pub fn upper_covers(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.upper_covers[i].iter().map(|&k| k as usize)
    }

    pub fn lower_covers(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.lower_covers[i].iter().map(|&k| k as usize)
    }

    /// Maximal proper submodules, ascending.
    pub fn maximal(&self) -> Vec<usize> {
        self.lower_covers(self.top()).collect()
    }

    /// Minimal nonzero submodules, ascending.
    pub fn minimal(&self) -> Vec<usize> {
        self.upper_covers(self.bottom()).collect()
    }

    /// `N ≪ M` for node `n`, quantifying over all `L`.
    pub fn is_small_node(&self, n: usize) -> bool {
        let top = self.top();
        (0..self.len()).all(|l| l == top || !self.sums_to_top(n, l))
    }

    /// `N ⊴ M` for node `n`, quantifying over all nonzero `L`.
    pub fn is_essential_node(&self, n: usize) -> bool {
        (1..self.len()).all(|l| self.meet(n, l) != 0)
    }

    /// First triple `(a, b, c)` with `a ≤ c` violating
    /// `a + (b ∩ c) = (a + b) ∩ c`, examining at most `budget` triples in a
    /// deterministic stride.
    pub fn modular_law_violation(&self, budget: usize) -> Option<(usize, usize, usize)> {
        let n = self.len();
        let total = n.saturating_mul(n).saturating_mul(n);
        let stride = (total / budget.max(1)).max(1);
        let mut t = 0;
        while t < total {
            let (a, b, c) = (t / (n * n), (t / n) % n, t % n);
            if self.le(a, c) && self.join(a, self.meet(b, c)) != self.meet(self.join(a, b), c) {
                return Some((a, b, c));
            }
            t += stride;
        }
        None
    }

    /// Graphviz rendering of the Hasse diagram: one node per submodule,
    /// labelled with its cardinality and least nonzero member, one edge per
    /// covering pair (drawn bottom to top).
    pub fn to_dot(&self, module: &FiniteModule) -> String {
        let mut out = String::from("digraph submodules {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let _ = writeln!(
                out,
                "  n{i} [label=\"|{}| min {}\"];",
                node.len(),
                node.least_nonzero(module.zero())
            );
        }
        for (i, covers) in self.upper_covers.iter().enumerate() {
            for &j in covers {
                let _ = writeln!(out, "  n{i} -> n{j};");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// `N ≪ M`, decided over the lattice and checked against `N ⊆ Rad M`.
pub fn is_small(module: &FiniteModule, sub: &Submodule) -> Result<bool> {
    let lattice = all_submodules(module)?;
    let direct = lattice.is_small_node(lattice.locate(sub)?);
    if direct != sub.is_subset(&crate::dimension::radical(module)?) {
        return Err(Error::Internal(format!("smallness criteria disagree in {}", module.name())));
    }
    Ok(direct)
}

/// `N ⊴ M`, decided over the lattice and checked against `Soc M ⊆ N`.
pub fn is_essential(module: &FiniteModule, sub: &Submodule) -> Result<bool> {
    let lattice = all_submodules(module)?;
    let direct = lattice.is_essential_node(lattice.locate(sub)?);
    if direct != crate::dimension::socle(module)?.is_subset(sub) {
        return Err(Error::Internal(format!("essentiality criteria disagree in {}", module.name())));
    }
    Ok(direct)
}

/// A submodule maximal among those meeting `sub` trivially; the least such
/// in canonical order.
pub fn complement_of(module: &FiniteModule, sub: &Submodule) -> Result<Submodule> {
    let lattice = all_submodules(module)?;
    let n = lattice.locate(sub)?;
    let disjoint: Vec<usize> = (0..lattice.len()).filter(|&l| lattice.meet(n, l) == 0).collect();
    let chosen = disjoint
        .iter()
        .copied()
        .find(|&l| !disjoint.iter().any(|&k| k != l && lattice.le(l, k)))
        .expect("zero meets everything trivially");
    Ok(lattice.node(chosen).clone())
}

/// How a coindependence check quantifies over the subsets `J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoindependenceMode {
    /// Only `J` = all other members: shrinking `J` enlarges the
    /// intersection, so this is the binding case.
    #[default]
    Binding,
    /// Every subset `J` of the other members, for auditing.
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoindependenceFailure {
    /// Member `index` is the whole module.
    NotProper { index: usize },
    /// `K_member + ⋂_{j ∈ others} K_j ≠ M`.
    SumFalls { member: usize, others: Vec<usize> },
}

impl std::fmt::Display for CoindependenceFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoindependenceFailure::NotProper { index } => write!(f, "member {index} is not proper"),
            CoindependenceFailure::SumFalls { member, others } => {
                write!(f, "member {member} plus the intersection of {others:?} is not the whole module")
            }
        }
    }
}

fn intersection_of<'a>(module: &FiniteModule, members: impl Iterator<Item = &'a Submodule>) -> Submodule {
    members.fold(module.whole(), |acc, k| acc.meet(k))
}

/// The first way `family` fails to be coindependent, if any.
pub fn coindependence_failure(
    module: &FiniteModule,
    family: &[Submodule],
    mode: CoindependenceMode,
) -> Option<CoindependenceFailure> {
    let whole = module.order();
    if let Some(index) = family.iter().position(|k| k.len() == whole) {
        return Some(CoindependenceFailure::NotProper { index });
    }
    for (lambda, k) in family.iter().enumerate() {
        let rest: Vec<usize> = (0..family.len()).filter(|&j| j != lambda).collect();
        let subsets: Vec<Vec<usize>> = match mode {
            CoindependenceMode::Binding => vec![rest],
            CoindependenceMode::Exhaustive => (0u64..1 << rest.len())
                .map(|mask| {
                    rest.iter()
                        .enumerate()
                        .filter(|(bit, _)| mask & (1 << bit) != 0)
                        .map(|(_, &j)| j)
                        .collect()
                })
                .collect(),
        };
        for others in subsets {
            let meet = intersection_of(module, others.iter().map(|&j| &family[j]));
            if module.sum(k, &meet).len() != whole {
                return Some(CoindependenceFailure::SumFalls { member: lambda, others });
            }
        }
    }
    None
}

pub fn is_coindependent(module: &FiniteModule, family: &[Submodule]) -> bool {
    coindependence_failure(module, family, CoindependenceMode::Binding).is_none()
}

/// Greedy small generating set of `target` drawn from `candidates`: at each
/// step take the candidate whose addition enlarges the generated submodule
/// most, ties to the least element index. Returns `None` if the candidates
/// do not generate `target`.
pub fn greedy_generators(
    module: &FiniteModule,
    target: &Submodule,
    candidates: impl IntoIterator<Item = usize>,
) -> Option<Vec<usize>> {
    let mut pool: Vec<usize> = candidates.into_iter().filter(|&x| target.contains(x)).collect();
    pool.sort_unstable();
    pool.dedup();
    let cyclic: Vec<Submodule> = pool.iter().map(|&x| module.cyclic(x)).collect();
    let mut current = module.zero_submodule();
    let mut gens = Vec::new();
    while current.len() < target.len() {
        let (best, grown) = pool
            .iter()
            .enumerate()
            .filter(|(_, &x)| !current.contains(x))
            .map(|(i, _)| (i, module.sum(&current, &cyclic[i])))
            .fold(None::<(usize, Submodule)>, |best, (i, s)| match best {
                Some((_, ref b)) if b.len() >= s.len() => best,
                _ => Some((i, s)),
            })?;
        gens.push(pool[best]);
        current = grown;
    }
    Some(gens)
}

/// A submodule together with an explicit finite generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedSubmodule {
    pub submodule: Submodule,
    pub generators: Vec<usize>,
}

/// Replaces a coindependent family `N_1..N_m` by a coindependent family of
/// finitely generated `L_i ⊆ N_i`, following the constructive argument:
/// pick `X_i ⊆ N_i` and `Y_i ⊆ ⋂_{j≠i} N_j` with `X_i + Y_i = M`, then
/// `L_i = X_i + Σ_{j≠i} Y_j`.
pub fn refine_coindependent_fg(module: &FiniteModule, family: &[Submodule]) -> Result<Vec<GeneratedSubmodule>> {
    if let Some(failure) = coindependence_failure(module, family, CoindependenceMode::Binding) {
        return Err(Error::NotCoindependent(failure.to_string()));
    }
    let whole = module.whole();
    let mut x_gens = Vec::with_capacity(family.len());
    let mut y_gens = Vec::with_capacity(family.len());
    for (i, n_i) in family.iter().enumerate() {
        let rest = intersection_of(module, family.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, k)| k));
        let gens = greedy_generators(module, &whole, n_i.iter().chain(rest.iter()))
            .ok_or_else(|| Error::Internal("N_i + rest does not generate M".into()))?;
        let (x, y): (Vec<usize>, Vec<usize>) = gens.into_iter().partition(|&g| n_i.contains(g));
        x_gens.push(x);
        y_gens.push(y);
    }
    let refined = (0..family.len())
        .map(|i| {
            let mut generators = x_gens[i].clone();
            for (j, y) in y_gens.iter().enumerate() {
                if j != i {
                    generators.extend(y);
                }
            }
            generators.sort_unstable();
            generators.dedup();
            GeneratedSubmodule {
                submodule: generated_submodule(module, generators.iter().copied()),
                generators,
            }
        })
        .collect::<Vec<_>>();
    let members: Vec<Submodule> = refined.iter().map(|g| g.submodule.clone()).collect();
    if !is_coindependent(module, &members) || refined.iter().zip(family).any(|(l, n)| !l.submodule.is_subset(n)) {
        return Err(Error::Internal("refined family lost coindependence or containment".into()));
    }
    Ok(refined)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteRing, Side};

    fn z(n: usize) -> FiniteModule {
        FiniteModule::regular(&FiniteRing::cyclic(n).unwrap(), Side::Left)
    }

    fn sub(order: usize, xs: &[usize]) -> Submodule {
        Submodule::from_indices(order, xs.iter().copied())
    }

    /// Oracle: every subset of a tiny carrier that is closed, by brute force.
    fn brute_force_submodules(m: &FiniteModule) -> Vec<Submodule> {
        let n = m.order();
        let mut out: Vec<Submodule> = (0u32..1 << n)
            .map(|mask| sub(n, &(0..n).filter(|&i| mask & (1 << i) != 0).collect::<Vec<_>>()))
            .filter(|s| m.validate_submodule(s).is_none())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn generated_submodule_examples() {
        let m = z(12);
        assert_eq!(generated_submodule(&m, [2]).members(), vec![0, 2, 4, 6, 8, 10]);
        assert_eq!(generated_submodule(&m, []).members(), vec![0]);
        assert_eq!(generated_submodule(&m, 0..12).len(), 12);
        assert_eq!(generated_submodule(&m, [4, 6]).members(), vec![0, 2, 4, 6, 8, 10]);
    }

    #[test]
    fn lattice_sizes() {
        // one submodule per divisor of 12
        let divisors = (1..=12).filter(|d| 12 % d == 0).count();
        assert_eq!(all_submodules(&z(12)).unwrap().len(), divisors);
        let f2 = FiniteRing::cyclic(2).unwrap();
        let plane = FiniteModule::direct_sum(&f2, Side::Left, &[z(2), z(2)]).unwrap().module;
        assert_eq!(all_submodules(&plane).unwrap().len(), 5);
        assert_eq!(all_submodules(&z(1)).unwrap().len(), 1);
    }

    #[test]
    fn lattice_matches_brute_force_on_small_modules() {
        let t = FiniteRing::triangular(&FiniteRing::cyclic(2).unwrap(), 2).unwrap();
        let f2 = FiniteRing::cyclic(2).unwrap();
        let cases = vec![
            z(8),
            z(12),
            FiniteModule::regular(&t, Side::Left),
            FiniteModule::regular(&t, Side::Right),
            FiniteModule::direct_sum(&f2, Side::Left, &[z(2), z(2), z(2)]).unwrap().module,
        ];
        for m in cases {
            let lattice = all_submodules(&m).unwrap();
            assert_eq!(lattice.nodes(), brute_force_submodules(&m).as_slice(), "{m:?}");
        }
    }

    #[test]
    fn left_and_right_ideals_differ_for_triangular() {
        let t = FiniteRing::triangular(&FiniteRing::cyclic(2).unwrap(), 2).unwrap();
        let left = all_submodules(&FiniteModule::regular(&t, Side::Left)).unwrap();
        let right = all_submodules(&FiniteModule::regular(&t, Side::Right)).unwrap();
        // (a, b, c) -> (c, b, a) is an anti-automorphism, so the counts agree
        // (7 each, by brute force) while the ideals themselves differ.
        assert_eq!(left.len(), 7);
        assert_eq!(right.len(), 7);
        assert_ne!(left.nodes(), right.nodes());
    }

    #[test]
    fn meets_and_joins_stay_in_the_lattice() {
        let m = z(12);
        let lattice = all_submodules(&m).unwrap();
        for i in 0..lattice.len() {
            for j in 0..lattice.len() {
                let sum = m.sum(lattice.node(i), lattice.node(j));
                assert_eq!(lattice.node(lattice.join(i, j)), &sum);
                assert_eq!(lattice.sums_to_top(i, j), sum.len() == m.order());
                assert_eq!(lattice.node(lattice.meet(i, j)), &lattice.node(i).meet(lattice.node(j)));
            }
        }
        assert!(lattice.modular_law_violation(10_000).is_none());
    }

    #[test]
    fn small_examples() {
        let m = z(12);
        assert!(is_small(&m, &sub(12, &[0, 6])).unwrap());
        assert!(is_small(&m, &sub(12, &[0])).unwrap());
        assert!(!is_small(&m, &sub(12, &[0, 2, 4, 6, 8, 10])).unwrap());
        // witness: 2Z + 3Z = M
        assert_eq!(m.sum(&sub(12, &[0, 2, 4, 6, 8, 10]), &sub(12, &[0, 3, 6, 9])).len(), 12);
    }

    #[test]
    fn essential_examples() {
        let m = z(12);
        assert!(is_essential(&m, &sub(12, &[0, 2, 4, 6, 8, 10])).unwrap());
        assert!(is_essential(&m, &m.whole()).unwrap());
        assert!(!is_essential(&m, &sub(12, &[0, 4, 8])).unwrap());
        assert!(matches!(is_essential(&m, &sub(12, &[0, 4])), Err(Error::NotSubmodule(_))));
    }

    #[test]
    fn complement_examples() {
        let r = FiniteRing::cyclic(4).unwrap();
        let m4 = z(4);
        let z2 = m4.quotient(&sub(4, &[0, 2])).unwrap().module;
        let m = FiniteModule::direct_sum(&r, Side::Left, &[z2, m4]).unwrap().module;
        // element (a, b) has index 4a + b; Rad = 0 (+) 2Z = {0, 2}
        let c = complement_of(&m, &sub(8, &[0, 2])).unwrap();
        assert_eq!(c.members(), vec![0, 4]);
        // oracle: every strictly larger submodule meets Rad
        let lattice = all_submodules(&m).unwrap();
        for node in lattice.nodes() {
            if c.is_subset(node) && node != &c {
                assert!(node.contains(2));
            }
        }
        assert_eq!(complement_of(&m, &m.zero_submodule()).unwrap(), m.whole());
        assert_eq!(complement_of(&m, &m.whole()).unwrap(), m.zero_submodule());
    }

    #[test]
    fn coindependence_examples() {
        let m = z(12);
        let two = sub(12, &[0, 2, 4, 6, 8, 10]);
        let three = sub(12, &[0, 3, 6, 9]);
        let four = sub(12, &[0, 4, 8]);
        assert!(is_coindependent(&m, &[two.clone(), three.clone()]));
        assert!(is_coindependent(&m, std::slice::from_ref(&four)));
        assert!(!is_coindependent(&m, &[two.clone(), four.clone()]));
        assert_eq!(
            coindependence_failure(&m, &[two.clone(), m.whole()], CoindependenceMode::Binding),
            Some(CoindependenceFailure::NotProper { index: 1 })
        );
        for family in [vec![two.clone(), three.clone()], vec![two, four]] {
            assert_eq!(
                coindependence_failure(&m, &family, CoindependenceMode::Binding).is_none(),
                coindependence_failure(&m, &family, CoindependenceMode::Exhaustive).is_none()
            );
        }
    }

    #[test]
    fn refinement_keeps_coindependence() {
        let m = z(12);
        let family = vec![sub(12, &[0, 2, 4, 6, 8, 10]), sub(12, &[0, 3, 6, 9])];
        let refined = refine_coindependent_fg(&m, &family).unwrap();
        assert_eq!(refined.len(), 2);
        for (l, n) in refined.iter().zip(&family) {
            assert!(l.submodule.is_subset(n));
            assert_eq!(generated_submodule(&m, l.generators.iter().copied()), l.submodule);
        }
        let members: Vec<_> = refined.into_iter().map(|g| g.submodule).collect();
        assert!(is_coindependent(&m, &members));

        let single = refine_coindependent_fg(&m, &[sub(12, &[0, 4, 8])]).unwrap();
        assert!(single[0].submodule.is_subset(&sub(12, &[0, 4, 8])));
        assert!(is_coindependent(&m, &[single[0].submodule.clone()]));

        let bad = vec![sub(12, &[0, 2, 4, 6, 8, 10]), sub(12, &[0, 4, 8])];
        assert!(matches!(refine_coindependent_fg(&m, &bad), Err(Error::NotCoindependent(_))));
    }

    #[test]
    fn dot_export_has_one_edge_per_cover() {
        let m = z(12);
        let lattice = all_submodules(&m).unwrap();
        let dot = lattice.to_dot(&m);
        assert!(dot.starts_with("digraph submodules {"));
        // divisor lattice of 12: 0-6, 0-4, 6-2, 6-3, 4-2, 2-M, 3-M
        assert_eq!(dot.matches("->").count(), 7);
        assert!(dot.contains("[label=\"|12| min 1\"]"));
    }

    #[test]
    fn lattice_cap_is_reported() {
        let f2 = FiniteRing::cyclic(2).unwrap();
        let cube = FiniteModule::direct_sum(&f2, Side::Left, &[z(2), z(2), z(2)]).unwrap().module;
        let err = SubmoduleLattice::enumerate(&cube, 5).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { limit: 5, .. }));
    }
}
