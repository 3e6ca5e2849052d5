//! Supplements, weak supplements, semilocality, and the constructive
//! transfer lemmas for weak supplements.
//!
//! Every finite module is artinian, hence supplemented, so the boolean
//! predicates here are always true on finite input. What matters is the
//! witnesses, which are certificates: [`WeakSupplementWitness::verify`]
//! rechecks them without trusting the search.

use serde::Serialize;

use crate::algebra::{digits, FiniteModule, ModuleHom, Submodule};
use crate::dimension::{is_semisimple, radical};
use crate::lattice::{all_submodules, complement_of, greedy_generators};
use crate::{Error, Result};

/// `L` is a weak supplement of `N`: `N + L = M` and `N ∩ L ≪ M`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakSupplementWitness {
    pub target: Submodule,
    pub supplement: Submodule,
    pub intersection: Submodule,
}

impl WeakSupplementWitness {
    /// Rechecks the certificate: the sum is recomputed as a sumset, the
    /// intersection as a bitset meet, and smallness through containment in
    /// the radical.
    pub fn verify(&self, module: &FiniteModule) -> Result<()> {
        let fail = |what: &str| Err(Error::Certificate(format!("weak supplement: {what}")));
        for s in [&self.target, &self.supplement, &self.intersection] {
            if !s.is_empty() && s.bits().capacity() != module.order() {
                return fail("submodule of another module");
            }
            if let Some(v) = module.validate_submodule(s) {
                return Err(Error::NotSubmodule(v.to_string()));
            }
        }
        if module.sum(&self.target, &self.supplement).len() != module.order() {
            return fail("sum is not the whole module");
        }
        if self.target.meet(&self.supplement) != self.intersection {
            return fail("recorded intersection is wrong");
        }
        if !self.intersection.is_subset(&radical(module)?) {
            return fail("intersection is not small");
        }
        Ok(())
    }
}

fn witness(module: &FiniteModule, target: &Submodule, supplement: Submodule) -> Result<WeakSupplementWitness> {
    let w = WeakSupplementWitness {
        target: target.clone(),
        intersection: target.meet(&supplement),
        supplement,
    };
    w.verify(module)?;
    Ok(w)
}

/// The least canonical `L` minimal with `N + L = M`, checked to satisfy
/// `N ∩ L ≪ L` inside `L`.
pub fn find_supplement(module: &FiniteModule, sub: &Submodule) -> Result<Option<Submodule>> {
    let lattice = all_submodules(module)?;
    let n = lattice.locate(sub)?;
    // canonical order lists smaller submodules first, so the first hit is
    // inclusion-minimal
    let Some(l) = (0..lattice.len()).find(|&l| lattice.sums_to_top(n, l)) else {
        return Ok(None);
    };
    if lattice.lower_covers(l).any(|k| lattice.sums_to_top(n, k)) {
        return Err(Error::Internal("supplement search returned a non-minimal submodule".into()));
    }
    let supplement = lattice.node(l).clone();
    let inside = module.restrict(&supplement)?;
    let meet = inside.inclusion.preimage(&sub.meet(&supplement));
    let inner = all_submodules(&inside.module)?;
    if !inner.is_small_node(inner.locate(&meet)?) {
        return Err(Error::Internal(format!(
            "minimal supplement in {} has a non-small intersection",
            module.name()
        )));
    }
    Ok(Some(supplement))
}

/// The least canonical `L` with `N + L = M` and `N ∩ L ≪ M`.
pub fn find_weak_supplement(module: &FiniteModule, sub: &Submodule) -> Result<Option<WeakSupplementWitness>> {
    let lattice = all_submodules(module)?;
    let n = lattice.locate(sub)?;
    match (0..lattice.len()).find(|&l| lattice.sums_to_top(n, l) && lattice.is_small_node(lattice.meet(n, l))) {
        Some(l) => witness(module, sub, lattice.node(l).clone()).map(Some),
        None => Ok(None),
    }
}

/// Weak supplements of every submodule, in lattice order.
pub type WeakSupplementMap = Vec<(Submodule, Option<WeakSupplementWitness>)>;

pub fn is_weakly_supplemented(module: &FiniteModule) -> Result<(bool, WeakSupplementMap)> {
    let lattice = all_submodules(module)?;
    let map = lattice
        .nodes()
        .iter()
        .map(|n| Ok((n.clone(), find_weak_supplement(module, n)?)))
        .collect::<Result<WeakSupplementMap>>()?;
    Ok((map.iter().all(|(_, w)| w.is_some()), map))
}

pub type SupplementMap = Vec<(Submodule, Option<Submodule>)>;

pub fn is_supplemented(module: &FiniteModule) -> Result<(bool, SupplementMap)> {
    let lattice = all_submodules(module)?;
    let map = lattice
        .nodes()
        .iter()
        .map(|n| Ok((n.clone(), find_supplement(module, n)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok((map.iter().all(|(_, s)| s.is_some()), map))
}

/// `M/Rad M` is semisimple.
pub fn is_semilocal_module(module: &FiniteModule) -> Result<bool> {
    is_semisimple(&module.quotient(&radical(module)?)?.module)
}

/// For every `L` there is `K` with `L + K = M` and `L ∩ K ⊆ N`; the
/// lattice form of "M/N is semisimple".
pub fn has_complements_modulo(module: &FiniteModule, sub: &Submodule) -> Result<bool> {
    let lattice = all_submodules(module)?;
    Ok((0..lattice.len()).all(|l| {
        (0..lattice.len()).any(|k| lattice.sums_to_top(l, k) && lattice.node(lattice.meet(l, k)).is_subset(sub))
    }))
}

/// `M = M1 ⊕ M2` with `M1` semisimple, `N ⊴ M2` and `M2/N` semisimple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemisimpleQuotientDecomposition {
    pub m1: Submodule,
    pub m2: Submodule,
}

impl SemisimpleQuotientDecomposition {
    pub fn verify(&self, module: &FiniteModule, sub: &Submodule) -> Result<()> {
        let fail = |what: &str| Err(Error::Certificate(format!("decomposition: {what}")));
        if module.sum(&self.m1, &self.m2).len() != module.order() || self.m1.meet(&self.m2).len() != 1 {
            return fail("not a direct sum");
        }
        if !is_semisimple(&module.restrict(&self.m1)?.module)? {
            return fail("first summand not semisimple");
        }
        if !sub.is_subset(&self.m2) {
            return fail("second summand does not contain N");
        }
        let inside = module.restrict(&self.m2)?;
        let n_inside = inside.inclusion.preimage(sub);
        let inner = all_submodules(&inside.module)?;
        if !inner.is_essential_node(inner.locate(&n_inside)?) {
            return fail("N not essential in the second summand");
        }
        if !is_semisimple(&inside.module.quotient(&n_inside)?.module)? {
            return fail("second summand modulo N not semisimple");
        }
        Ok(())
    }
}

/// `M1` is the canonical complement of `N`; `M2` is the least submodule
/// over `N` that complements `M1 + N` modulo `N`.
pub fn semisimple_quotient_decomposition(
    module: &FiniteModule,
    sub: &Submodule,
) -> Result<SemisimpleQuotientDecomposition> {
    if !is_semisimple(&module.quotient(sub)?.module)? {
        return Err(Error::Precondition("M/N is not semisimple".into()));
    }
    let lattice = all_submodules(module)?;
    let n = lattice.locate(sub)?;
    let m1 = complement_of(module, sub)?;
    let over = lattice.join(lattice.locate(&m1)?, n);
    let m2 = lattice
        .supersets(n)
        .find(|&k| lattice.sums_to_top(k, over) && lattice.meet(k, over) == n)
        .ok_or_else(|| Error::Internal("no complement modulo N".into()))?;
    let out = SemisimpleQuotientDecomposition {
        m1,
        m2: lattice.node(m2).clone(),
    };
    out.verify(module, sub)?;
    Ok(out)
}

/// Given an epimorphism `f: M → N`, `K ⊆ N` and a weak supplement `L` of
/// `f⁻¹(K)`, returns `f(L)` as a weak supplement of `K` in `N`.
pub fn push_forward_weak_supplement(
    f: &ModuleHom,
    k: &Submodule,
    l: &Submodule,
) -> Result<WeakSupplementWitness> {
    if !f.is_surjective() {
        return Err(Error::Precondition("map is not surjective".into()));
    }
    witness(f.source(), &f.preimage(k), l.clone())
        .map_err(|e| Error::Precondition(format!("L is not a weak supplement of the preimage: {e}")))?;
    witness(f.target(), k, f.image(l))
}

/// Given a small epimorphism `f: M → N`, `L ⊆ M` and a weak supplement `X`
/// of `f(L)` in `N`, returns `f⁻¹(X)` as a weak supplement of `L` in `M`.
pub fn pull_back_weak_supplement(
    f: &ModuleHom,
    x: &Submodule,
    l: &Submodule,
) -> Result<WeakSupplementWitness> {
    if !f.is_surjective() {
        return Err(Error::Precondition("map is not surjective".into()));
    }
    let source = all_submodules(f.source())?;
    if !source.is_small_node(source.locate(&f.kernel())?) {
        return Err(Error::Precondition("kernel is not small".into()));
    }
    witness(f.target(), &f.image(l), x.clone())
        .map_err(|e| Error::Precondition(format!("X is not a weak supplement of the image: {e}")))?;
    witness(f.source(), l, f.preimage(x))
}

/// With `N` a weak supplement of `M1 + K` and `M1` weakly supplemented,
/// finds a weak supplement `L` of `(K + N) ∩ M1` inside `M1` and returns
/// `N + L` as a weak supplement of `K`.
pub fn weak_supplement_from_summands(
    module: &FiniteModule,
    m1: &Submodule,
    k: &Submodule,
    n: &Submodule,
) -> Result<WeakSupplementWitness> {
    witness(module, &module.sum(m1, k), n.clone())
        .map_err(|e| Error::Precondition(format!("N is not a weak supplement of M1 + K: {e}")))?;
    let inside = module.restrict(m1)?;
    let target = inside.inclusion.preimage(&module.sum(k, n).meet(m1));
    let inner = find_weak_supplement(&inside.module, &target)?
        .ok_or_else(|| Error::Precondition("M1 is not weakly supplemented".into()))?;
    let l = inside.inclusion.image(&inner.supplement);
    witness(module, k, module.sum(n, &l))
}

/// A free module `R^k` mapping onto `M`, with a weak supplement `L` of the
/// kernel making `R^k → M ⊕ R^k/L` a small epimorphism.
#[derive(Debug, Clone)]
pub struct FreeCover {
    pub generators: Vec<usize>,
    pub free: FiniteModule,
    pub epimorphism: ModuleHom,
    pub supplement: WeakSupplementWitness,
    pub cover: ModuleHom,
}

impl FreeCover {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Rechecks that the cover map is surjective with small kernel
    /// `ker f ∩ L`.
    pub fn verify(&self) -> Result<()> {
        self.supplement.verify(&self.free)?;
        if !self.cover.validate().is_empty() || !self.cover.is_surjective() {
            return Err(Error::Certificate("cover map is not an epimorphism".into()));
        }
        let kernel = self.cover.kernel();
        if kernel != self.epimorphism.kernel().meet(&self.supplement.supplement) {
            return Err(Error::Certificate("cover kernel is not ker f ∩ L".into()));
        }
        let lattice = all_submodules(&self.free)?;
        if !lattice.is_small_node(lattice.locate(&kernel)?) {
            return Err(Error::Certificate("cover kernel is not small".into()));
        }
        Ok(())
    }
}

pub fn free_cover_decomposition(module: &FiniteModule) -> Result<FreeCover> {
    let ring = module.ring();
    let side = module.side();
    let generators = greedy_generators(module, &module.whole(), module.elements())
        .ok_or_else(|| Error::Internal("module is not generated by its elements".into()))?;
    let k = generators.len();
    let regular = FiniteModule::regular(ring, side);
    let free = FiniteModule::direct_sum(ring, side, &vec![regular; k])?.module;
    let radices = vec![ring.order(); k];
    let map = free
        .elements()
        .map(|x| {
            digits(x, &radices)
                .iter()
                .zip(&generators)
                .fold(module.zero(), |acc, (&r, &g)| module.add(acc, module.act(r, g)))
        })
        .collect();
    let epimorphism = ModuleHom::new(free.clone(), module.clone(), map)?;
    let supplement = find_weak_supplement(&free, &epimorphism.kernel())?
        .ok_or_else(|| Error::Internal("kernel has no weak supplement".into()))?;
    let quotient = free.quotient(&supplement.supplement)?;
    let target = FiniteModule::direct_sum(ring, side, &[module.clone(), quotient.module.clone()])?.module;
    let q = quotient.module.order();
    let cover_map = free
        .elements()
        .map(|x| epimorphism.apply(x) * q + quotient.projection.apply(x))
        .collect();
    let cover = ModuleHom::new(free.clone(), target, cover_map)?;
    let out = FreeCover {
        generators,
        free,
        epimorphism,
        supplement,
        cover,
    };
    out.verify()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteRing, Side};
    use crate::lattice::generated_submodule;

    fn z(n: usize) -> FiniteModule {
        FiniteModule::regular(&FiniteRing::cyclic(n).unwrap(), Side::Left)
    }

    fn sub(order: usize, xs: &[usize]) -> Submodule {
        Submodule::from_indices(order, xs.iter().copied())
    }

    fn quotient_by(m: &FiniteModule, g: usize) -> crate::algebra::Quotient {
        m.quotient(&generated_submodule(m, [g])).unwrap()
    }

    #[test]
    fn supplement_examples() {
        let m = z(12);
        let two = sub(12, &[0, 2, 4, 6, 8, 10]);
        assert_eq!(find_supplement(&m, &two).unwrap().unwrap().members(), vec![0, 3, 6, 9]);
        assert_eq!(find_supplement(&m, &m.whole()).unwrap().unwrap().len(), 1);
        assert_eq!(find_supplement(&m, &m.zero_submodule()).unwrap().unwrap().len(), 12);
    }

    #[test]
    fn weak_supplement_examples() {
        let m = z(12);
        let two = sub(12, &[0, 2, 4, 6, 8, 10]);
        let w = find_weak_supplement(&m, &two).unwrap().unwrap();
        assert_eq!(w.supplement.members(), vec![0, 3, 6, 9]);
        assert_eq!(w.intersection.members(), vec![0, 6]);
        assert_eq!(find_weak_supplement(&m, &m.whole()).unwrap().unwrap().supplement.len(), 1);
        let w = find_weak_supplement(&m, &sub(12, &[0, 6])).unwrap().unwrap();
        assert_eq!(w.supplement.len(), 12);
    }

    #[test]
    fn tampered_witness_is_rejected() {
        let m = z(12);
        let two = sub(12, &[0, 2, 4, 6, 8, 10]);
        let mut w = find_weak_supplement(&m, &two).unwrap().unwrap();
        w.supplement = sub(12, &[0, 4, 8]);
        w.intersection = sub(12, &[0, 4, 8]);
        assert!(w.verify(&m).is_err());
        // L = M sums to M but leaves the non-small 2Z as intersection
        let w = WeakSupplementWitness {
            target: two.clone(),
            supplement: m.whole(),
            intersection: two,
        };
        assert!(w.verify(&m).is_err());
    }

    #[test]
    fn every_small_module_is_weakly_supplemented_and_semilocal() {
        let t = FiniteRing::triangular(&FiniteRing::cyclic(2).unwrap(), 2).unwrap();
        for m in [z(1), z(8), z(12), FiniteModule::regular(&t, Side::Left), FiniteModule::regular(&t, Side::Right)] {
            assert!(is_weakly_supplemented(&m).unwrap().0);
            assert!(is_supplemented(&m).unwrap().0);
            assert!(is_semilocal_module(&m).unwrap());
        }
    }

    #[test]
    fn complements_modulo_match_semisimple_quotients() {
        let m = z(12);
        let lattice = all_submodules(&m).unwrap();
        for n in lattice.nodes() {
            let semisimple = is_semisimple(&m.quotient(n).unwrap().module).unwrap();
            assert_eq!(has_complements_modulo(&m, n).unwrap(), semisimple);
        }
    }

    fn z2_plus_z4() -> FiniteModule {
        let r = FiniteRing::cyclic(4).unwrap();
        let reg = FiniteModule::regular(&r, Side::Left);
        let z2 = quotient_by(&reg, 2).module;
        FiniteModule::direct_sum(&r, Side::Left, &[z2, reg]).unwrap().module
    }

    #[test]
    fn semisimple_quotient_decomposition_examples() {
        let m = z2_plus_z4();
        let rad = radical(&m).unwrap();
        assert_eq!(rad.members(), vec![0, 2]);
        let d = semisimple_quotient_decomposition(&m, &rad).unwrap();
        assert_eq!(d.m1.members(), vec![0, 4]);
        assert_eq!(d.m2.members(), vec![0, 1, 2, 3]);

        let s = z(6);
        let d = semisimple_quotient_decomposition(&s, &s.zero_submodule()).unwrap();
        assert_eq!((d.m1.len(), d.m2.len()), (6, 1));
        let d = semisimple_quotient_decomposition(&m, &m.whole()).unwrap();
        assert_eq!((d.m1.len(), d.m2.len()), (1, 8));
        assert!(semisimple_quotient_decomposition(&z(4), &z(4).zero_submodule()).is_err());
    }

    #[test]
    fn transfer_examples() {
        let m = z(12);
        let q = quotient_by(&m, 6);
        let f = &q.projection;
        // K = 2Z/6 in Z/6 is {0,2,4} under least-member labels
        let k = sub(6, &[0, 2, 4]);
        let w = push_forward_weak_supplement(f, &k, &sub(12, &[0, 3, 6, 9])).unwrap();
        assert_eq!(w.supplement.members(), vec![0, 3]);

        let w = pull_back_weak_supplement(f, &sub(6, &[0, 3]), &sub(12, &[0, 2, 4, 6, 8, 10])).unwrap();
        assert_eq!(w.supplement.members(), vec![0, 3, 6, 9]);

        let id = ModuleHom::identity(&m);
        let w = pull_back_weak_supplement(&id, &sub(12, &[0, 3, 6, 9]), &sub(12, &[0, 2, 4, 6, 8, 10])).unwrap();
        assert_eq!(w.supplement.members(), vec![0, 3, 6, 9]);

        let to_z4 = quotient_by(&m, 4).projection;
        let err = pull_back_weak_supplement(&to_z4, &sub(4, &[0]), &m.whole()).unwrap_err();
        assert!(err.to_string().contains("not small"));
    }

    #[test]
    fn from_summands_example() {
        let m = z(12);
        let w = weak_supplement_from_summands(
            &m,
            &sub(12, &[0, 4, 8]),
            &sub(12, &[0, 2, 4, 6, 8, 10]),
            &sub(12, &[0, 3, 6, 9]),
        )
        .unwrap();
        assert_eq!(w.supplement.members(), vec![0, 3, 6, 9]);
        let w = weak_supplement_from_summands(&m, &m.whole(), &m.whole(), &m.zero_submodule()).unwrap();
        assert_eq!(w.supplement.len(), 1);
    }

    #[test]
    fn free_cover_examples() {
        let r4 = z(4);
        let z2 = quotient_by(&r4, 2).module;
        let c = free_cover_decomposition(&z2).unwrap();
        assert_eq!(c.rank(), 1);
        assert_eq!(c.supplement.supplement.len(), 4);
        assert_eq!(c.supplement.intersection.members(), vec![0, 2]);

        let c = free_cover_decomposition(&r4).unwrap();
        assert_eq!(c.rank(), 1);
        assert_eq!(c.epimorphism.kernel().len(), 1);

        let z6 = quotient_by(&z(12), 6).module;
        let c = free_cover_decomposition(&z6).unwrap();
        assert_eq!(c.rank(), 1);
        c.verify().unwrap();

        let c = free_cover_decomposition(&z(1)).unwrap();
        assert_eq!(c.rank(), 0);
    }
}
