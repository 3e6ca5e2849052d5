//! Radical, socle, composition length, uniform and hollow dimension.
//!
//! Hollow dimension is computed three ways and the results must agree:
//!
//! * **decomposition**: greedily pick a coindependent family of maximal
//!   submodules, then certify the hollow quotients and small intersection;
//! * **coindependence**: exact maximum size of a coindependent family;
//! * **radical length**: the length of `M/Rad M`.
//!
//! Zero-module conventions: length, udim and hdim are 0, the module is
//! semisimple, and it is neither hollow nor uniform.

use serde::Serialize;

use crate::algebra::{FiniteModule, Submodule};
use crate::lattice::{all_submodules, SubmoduleLattice};
use crate::{Error, Result};

/// Intersection of the maximal submodules (`M` itself if there are none).
pub fn radical(module: &FiniteModule) -> Result<Submodule> {
    let lattice = all_submodules(module)?;
    Ok(radical_node(&lattice, module))
}

fn radical_node(lattice: &SubmoduleLattice, module: &FiniteModule) -> Submodule {
    lattice
        .maximal()
        .into_iter()
        .fold(module.whole(), |acc, k| acc.meet(lattice.node(k)))
}

/// Sum of the minimal nonzero submodules (`0` if there are none).
pub fn socle(module: &FiniteModule) -> Result<Submodule> {
    let lattice = all_submodules(module)?;
    Ok(lattice
        .minimal()
        .into_iter()
        .fold(module.zero_submodule(), |acc, k| module.sum(&acc, lattice.node(k))))
}

/// Semisimplicity, decided both as "every submodule is a direct summand"
/// and as "the socle is everything".
pub fn is_semisimple(module: &FiniteModule) -> Result<bool> {
    let lattice = all_submodules(module)?;
    let n = lattice.len();
    let summands = (0..n).all(|a| (0..n).any(|b| lattice.meet(a, b) == 0 && lattice.sums_to_top(a, b)));
    let by_socle = socle(module)?.len() == module.order();
    if summands != by_socle {
        return Err(Error::Internal(format!(
            "semisimplicity routes disagree on {}: summands {summands}, socle {by_socle}",
            module.name()
        )));
    }
    Ok(summands)
}

/// First submodule with no direct complement, if any.
pub fn non_summand(module: &FiniteModule) -> Result<Option<Submodule>> {
    let lattice = all_submodules(module)?;
    let n = lattice.len();
    Ok((0..n)
        .find(|&a| !(0..n).any(|b| lattice.meet(a, b) == 0 && lattice.sums_to_top(a, b)))
        .map(|a| lattice.node(a).clone()))
}

fn chain_length(lattice: &SubmoduleLattice, pick_last: bool) -> usize {
    let mut steps = 0;
    let mut at = lattice.bottom();
    while at != lattice.top() {
        let mut covers = lattice.upper_covers(at);
        at = if pick_last { covers.last() } else { covers.next() }.expect("non-top node has a cover");
        steps += 1;
    }
    steps
}

/// Composition length: one maximal chain, checked against a second chain
/// built with the opposite tie-break.
pub fn length(module: &FiniteModule) -> Result<usize> {
    let lattice = all_submodules(module)?;
    let first = chain_length(&lattice, false);
    let second = chain_length(&lattice, true);
    if first != second {
        return Err(Error::Internal(format!(
            "maximal chains of different lengths {first} and {second} in {}",
            module.name()
        )));
    }
    Ok(first)
}

fn is_independent(module: &FiniteModule, family: &[Submodule]) -> bool {
    family.iter().enumerate().all(|(i, k)| {
        let rest = family
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(module.zero_submodule(), |acc, (_, l)| module.sum(&acc, l));
        k.meet(&rest).len() == 1
    })
}

/// Uniform dimension as the length of the socle, with a witness family of
/// simple submodules whose sum is the (essential) socle.
pub fn uniform_dimension(module: &FiniteModule) -> Result<(usize, Vec<Submodule>)> {
    let soc = socle(module)?;
    let value = length(&module.restrict(&soc)?.module)?;
    let lattice = all_submodules(module)?;
    let mut witness: Vec<Submodule> = Vec::new();
    let mut sum = module.zero_submodule();
    for atom in lattice.minimal() {
        let node = lattice.node(atom);
        if node.meet(&sum).len() == 1 {
            sum = module.sum(&sum, node);
            witness.push(node.clone());
        }
    }
    if witness.len() != value || sum != soc || !lattice.is_essential_node(lattice.locate(&sum)?) {
        return Err(Error::Internal(format!(
            "uniform witness of size {} does not certify udim {value} for {}",
            witness.len(),
            module.name()
        )));
    }
    Ok((value, witness))
}

/// Largest independent family of nonzero submodules, by branch and bound
/// over the minimal submodules (every nonzero submodule contains one, and
/// shrinking members preserves independence).
pub fn max_independent_family(module: &FiniteModule) -> Result<Vec<Submodule>> {
    let lattice = all_submodules(module)?;
    let atoms: Vec<Submodule> = lattice.minimal().into_iter().map(|a| lattice.node(a).clone()).collect();
    let mut best = Vec::new();
    let mut current = Vec::new();
    search_family(&atoms, 0, &mut current, &mut best, &|family: &[Submodule]| {
        is_independent(module, family)
    });
    Ok(best)
}

/// Branch and bound for the largest subfamily of `candidates` (in index
/// order) accepted by `admissible`, assuming admissibility is inherited by
/// subfamilies.
fn search_family(
    candidates: &[Submodule],
    from: usize,
    current: &mut Vec<Submodule>,
    best: &mut Vec<Submodule>,
    admissible: &dyn Fn(&[Submodule]) -> bool,
) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    for i in from..candidates.len() {
        if current.len() + (candidates.len() - i) <= best.len() {
            return;
        }
        current.push(candidates[i].clone());
        if admissible(current) {
            search_family(candidates, i + 1, current, best, admissible);
        }
        current.pop();
    }
}

/// A coindependent family with hollow quotients and small intersection.
#[derive(Debug, Clone, Serialize)]
pub struct HollowDecomposition {
    pub family: Vec<Submodule>,
    pub hollow_quotients: Vec<bool>,
    pub intersection: Submodule,
}

/// The agreed hollow dimension with the value found by each algorithm.
#[derive(Debug, Clone, Serialize)]
pub struct HollowDimension {
    pub value: usize,
    pub by_decomposition: usize,
    pub by_coindependence: usize,
    pub by_radical_length: usize,
    pub decomposition: HollowDecomposition,
}

/// Hollowness by direct quantification: nonzero, every proper submodule
/// small.
fn hollow_direct(module: &FiniteModule) -> Result<bool> {
    if module.is_zero() {
        return Ok(false);
    }
    let lattice = all_submodules(module)?;
    Ok((0..lattice.top()).all(|n| lattice.is_small_node(n)))
}

fn uniform_direct(module: &FiniteModule) -> Result<bool> {
    if module.is_zero() {
        return Ok(false);
    }
    let lattice = all_submodules(module)?;
    Ok((1..lattice.len()).all(|n| lattice.is_essential_node(n)))
}

fn family_coindependent(lattice: &SubmoduleLattice, family: &[usize]) -> bool {
    let top = lattice.top();
    family.iter().enumerate().all(|(i, &k)| {
        if k == top {
            return false;
        }
        let rest = family
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(top, |acc, (_, &l)| lattice.meet(acc, l));
        lattice.sums_to_top(k, rest)
    })
}

/// Hollow decomposition from the greedy coindependent family of maximal
/// submodules, every property certified.
pub fn hollow_decomposition(module: &FiniteModule) -> Result<HollowDecomposition> {
    let lattice = all_submodules(module)?;
    let mut family: Vec<usize> = Vec::new();
    for k in lattice.maximal() {
        family.push(k);
        if !family_coindependent(&lattice, &family) {
            family.pop();
        }
    }
    let intersection = family.iter().fold(lattice.top(), |acc, &k| lattice.meet(acc, k));
    let hollow_quotients = family
        .iter()
        .map(|&k| hollow_direct(&module.quotient(lattice.node(k))?.module))
        .collect::<Result<Vec<_>>>()?;
    if !lattice.is_small_node(intersection) || hollow_quotients.iter().any(|h| !h) {
        return Err(Error::Internal(format!(
            "greedy family in {} does not give a hollow decomposition",
            module.name()
        )));
    }
    Ok(HollowDecomposition {
        family: family.iter().map(|&k| lattice.node(k).clone()).collect(),
        hollow_quotients,
        intersection: lattice.node(intersection).clone(),
    })
}

/// Largest coindependent family, by branch and bound over the maximal
/// submodules. Enlarging a member of a coindependent family keeps it
/// coindependent, so a largest family can always be pushed up to maximal
/// submodules.
pub fn max_coindependent_family(module: &FiniteModule) -> Result<Vec<Submodule>> {
    let lattice = all_submodules(module)?;
    let maximal: Vec<Submodule> = lattice.maximal().into_iter().map(|k| lattice.node(k).clone()).collect();
    let mut best = Vec::new();
    let mut current = Vec::new();
    search_family(&maximal, 0, &mut current, &mut best, &|family: &[Submodule]| {
        let idx: Vec<usize> = family.iter().map(|s| lattice.index_of(s).expect("node")).collect();
        family_coindependent(&lattice, &idx)
    });
    Ok(best)
}

/// Length of `M/Rad M`.
pub fn radical_quotient_length(module: &FiniteModule) -> Result<usize> {
    let rad = radical(module)?;
    length(&module.quotient(&rad)?.module)
}

/// Hollow dimension; all three algorithms run and must agree.
pub fn hollow_dimension(module: &FiniteModule) -> Result<HollowDimension> {
    let decomposition = hollow_decomposition(module)?;
    let by_decomposition = decomposition.family.len();
    let by_coindependence = max_coindependent_family(module)?.len();
    let by_radical_length = radical_quotient_length(module)?;
    if by_decomposition != by_coindependence || by_coindependence != by_radical_length {
        return Err(Error::Internal(format!(
            "hollow dimension of {} disagrees: decomposition {by_decomposition}, coindependence {by_coindependence}, radical length {by_radical_length}",
            module.name()
        )));
    }
    Ok(HollowDimension {
        value: by_decomposition,
        by_decomposition,
        by_coindependence,
        by_radical_length,
        decomposition,
    })
}

pub fn hdim(module: &FiniteModule) -> Result<usize> {
    Ok(hollow_dimension(module)?.value)
}

pub fn udim(module: &FiniteModule) -> Result<usize> {
    Ok(uniform_dimension(module)?.0)
}

/// Nonzero with every proper submodule small; cross-checked against
/// `hdim = 1`.
pub fn is_hollow(module: &FiniteModule) -> Result<bool> {
    let direct = hollow_direct(module)?;
    if direct != (hdim(module)? == 1) {
        return Err(Error::Internal(format!("hollowness of {} disagrees with hdim", module.name())));
    }
    Ok(direct)
}

/// Nonzero with every nonzero submodule essential; cross-checked against
/// `udim = 1`.
pub fn is_uniform(module: &FiniteModule) -> Result<bool> {
    let direct = uniform_direct(module)?;
    if direct != (udim(module)? == 1) {
        return Err(Error::Internal(format!("uniformity of {} disagrees with udim", module.name())));
    }
    Ok(direct)
}

/// `d(N) = hdim(M/N)`.
pub fn camps_dicks_d(module: &FiniteModule, sub: &Submodule) -> Result<usize> {
    hdim(&module.quotient(sub)?.module)
}

/// `d` on every lattice node, in lattice order.
pub fn camps_dicks_table(module: &FiniteModule) -> Result<Vec<usize>> {
    let lattice = all_submodules(module)?;
    lattice.nodes().iter().map(|n| camps_dicks_d(module, n)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DAxiomCounterexample {
    /// `d(N) = 0` but `N ≠ M`.
    ZeroOnProper { n: Submodule },
    /// `N + L = M` but `d(N ∩ L) ≠ d(N) + d(L)`.
    NotAdditive { n: Submodule, l: Submodule, d_meet: usize, d_n: usize, d_l: usize },
}

/// Checks both axioms of a dimension function on the submodule lattice
/// for `d(N) = hdim(M/N)`; returns the least counterexample.
pub fn verify_d_axioms(module: &FiniteModule) -> Result<Option<DAxiomCounterexample>> {
    let lattice = all_submodules(module)?;
    let d = camps_dicks_table(module)?;
    let top = lattice.top();
    if let Some(n) = (0..lattice.len()).find(|&n| d[n] == 0 && n != top) {
        return Ok(Some(DAxiomCounterexample::ZeroOnProper {
            n: lattice.node(n).clone(),
        }));
    }
    for n in 0..lattice.len() {
        for l in 0..lattice.len() {
            if !lattice.sums_to_top(n, l) {
                continue;
            }
            let meet = lattice.meet(n, l);
            if d[meet] != d[n] + d[l] {
                return Ok(Some(DAxiomCounterexample::NotAdditive {
                    n: lattice.node(n).clone(),
                    l: lattice.node(l).clone(),
                    d_meet: d[meet],
                    d_n: d[n],
                    d_l: d[l],
                }));
            }
        }
    }
    Ok(None)
}

/// Outcome of the descending-chain smallness check on maximal chains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainCheck {
    pub chains: usize,
    /// Chains where the least stabilising index differs from the first
    /// index at which the chain enters the radical.
    pub mismatches: usize,
}

/// For maximal chains `M = K_0 ⊃ K_1 ⊃ … ⊃ K_l = 0` (at most `limit` of
/// them, in canonical depth-first order) finds the least `n` with
/// `K_n/K_m ≪ M/K_m` for all `m ≥ n`, by quantifying over submodules above
/// `K_m`, and compares it with the first index where `K_n ⊆ Rad M`.
pub fn chain_smallness_check(module: &FiniteModule, limit: usize) -> Result<ChainCheck> {
    let lattice = all_submodules(module)?;
    let rad = radical_node(&lattice, module);
    let top = lattice.top();
    let small_in_quotient = |n: usize, m: usize| {
        lattice
            .supersets(m)
            .all(|l| l == top || !lattice.sums_to_top(n, l))
    };
    let mut chains = 0;
    let mut mismatches = 0;
    let mut stack = vec![vec![top]];
    while let Some(chain) = stack.pop() {
        let last = *chain.last().expect("nonempty");
        if last != lattice.bottom() {
            let mut covers: Vec<usize> = lattice.lower_covers(last).collect();
            covers.reverse();
            for c in covers {
                let mut next = chain.clone();
                next.push(c);
                stack.push(next);
            }
            continue;
        }
        let stable = (0..chain.len())
            .find(|&n| (n..chain.len()).all(|m| small_in_quotient(chain[n], chain[m])))
            .expect("the last index always stabilises");
        let enters = chain
            .iter()
            .position(|&k| lattice.node(k).is_subset(&rad))
            .expect("zero lies in the radical");
        if stable != enters {
            mismatches += 1;
        }
        chains += 1;
        if chains >= limit {
            break;
        }
    }
    Ok(ChainCheck { chains, mismatches })
}

/// Every dimension-theoretic invariant of a module in one record.
#[derive(Debug, Clone, Serialize)]
pub struct DimensionProfile {
    pub order: usize,
    pub radical: Submodule,
    pub socle: Submodule,
    pub length: usize,
    pub udim: usize,
    pub hdim: usize,
    pub semisimple: bool,
    pub hollow: bool,
    pub uniform: bool,
    pub hollow_decomposition: HollowDecomposition,
    pub uniform_witness: Vec<Submodule>,
}

pub fn profile(module: &FiniteModule) -> Result<DimensionProfile> {
    let hollow = hollow_dimension(module)?;
    let (udim, uniform_witness) = uniform_dimension(module)?;
    let soc = socle(module)?;
    if udim != length(&module.restrict(&soc)?.module)? {
        return Err(Error::Internal("udim differs from socle length".into()));
    }
    Ok(DimensionProfile {
        order: module.order(),
        radical: radical(module)?,
        socle: soc,
        length: length(module)?,
        udim,
        hdim: hollow.value,
        semisimple: is_semisimple(module)?,
        hollow: is_hollow(module)?,
        uniform: is_uniform(module)?,
        hollow_decomposition: hollow.decomposition,
        uniform_witness,
    })
}
