//! Ring-level invariants: the Jacobson radical by three routes, the
//! left/right hollow-dimension profile, the `Ra ∩ R(1 - ra) = Ra(1 - ra)`
//! sweep, and the element dimension function `d(a) = hdim(R/Ra)`.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{FiniteModule, FiniteRing, Side, Submodule};
use crate::dimension::{camps_dicks_d, hdim, length, radical};
use crate::lattice::{all_submodules, generated_submodule};
use crate::supplements::find_weak_supplement;
use crate::{Error, Result};

fn maximal_meet(module: &FiniteModule) -> Result<Submodule> {
    let lattice = all_submodules(module)?;
    Ok(lattice
        .maximal()
        .into_iter()
        .fold(module.whole(), |acc, k| acc.meet(lattice.node(k))))
}

/// `{a : 1 - ra is a unit for every r}`.
pub fn quasi_regular_radical(ring: &FiniteRing) -> Submodule {
    let one = ring.one();
    Submodule::from_indices(
        ring.order(),
        ring.elements()
            .filter(|&a| ring.elements().all(|r| ring.is_unit(ring.sub(one, ring.mul(r, a))))),
    )
}

/// The Jacobson radical as a submodule of the left regular module. The
/// meets of maximal left and of maximal right ideals and the quasi-regular
/// description must coincide.
pub fn jacobson_radical(ring: &FiniteRing) -> Result<Submodule> {
    let left = maximal_meet(&FiniteModule::regular(ring, Side::Left))?;
    let right = maximal_meet(&FiniteModule::regular(ring, Side::Right))?;
    let quasi = quasi_regular_radical(ring);
    if left != right || left != quasi {
        return Err(Error::Internal(format!(
            "Jacobson radical routes disagree for {}: left {:?}, right {:?}, quasi-regular {:?}",
            ring.name(),
            left.members(),
            right.members(),
            quasi.members()
        )));
    }
    Ok(left)
}

/// `∀x ∃y: xyx - x ∈ ideal`; with the zero ideal this is von Neumann
/// regularity of the ring itself.
pub fn is_regular_modulo(ring: &FiniteRing, ideal: &Submodule) -> bool {
    ring.elements().all(|x| {
        ring.elements()
            .any(|y| ideal.contains(ring.sub(ring.mul(ring.mul(x, y), x), x)))
    })
}

/// First `x` with no `y` such that `xyx = x`.
pub fn non_regular_element(ring: &FiniteRing) -> Option<usize> {
    ring.elements()
        .find(|&x| !ring.elements().any(|y| ring.mul(ring.mul(x, y), x) == x))
}

#[derive(Debug, Clone, Serialize)]
pub struct RingProfile {
    pub name: String,
    pub order: usize,
    pub commutative: bool,
    pub jacobson: Submodule,
    pub hdim_left: usize,
    pub hdim_right: usize,
    pub semisimple_quotient_length: usize,
    pub units: Vec<usize>,
    pub local: bool,
    pub vnr_quotient: bool,
}

impl RingProfile {
    pub fn symmetric(&self) -> bool {
        self.hdim_left == self.semisimple_quotient_length && self.hdim_right == self.semisimple_quotient_length
    }
}

pub fn classify(ring: &FiniteRing) -> Result<RingProfile> {
    let left = FiniteModule::regular(ring, Side::Left);
    let right = FiniteModule::regular(ring, Side::Right);
    let jacobson = jacobson_radical(ring)?;
    if jacobson != radical(&left)? {
        return Err(Error::Internal(format!("Jacobson radical of {} differs from Rad(_RR)", ring.name())));
    }
    let closed_right = jacobson
        .iter()
        .all(|a| ring.elements().all(|r| jacobson.contains(ring.mul(a, r))));
    if !closed_right {
        return Err(Error::Internal("Jacobson radical is not a two-sided ideal".into()));
    }
    for a in ring.elements() {
        if ring.has_left_inverse(a) != ring.is_unit(a) || ring.has_right_inverse(a) != ring.is_unit(a) {
            return Err(Error::Internal(format!("one-sided inverse of {a} is not two-sided")));
        }
    }
    let profile = RingProfile {
        name: ring.name().to_string(),
        order: ring.order(),
        commutative: ring.is_commutative(),
        hdim_left: hdim(&left)?,
        hdim_right: hdim(&right)?,
        semisimple_quotient_length: length(&left.quotient(&jacobson)?.module)?,
        units: ring.units(),
        local: all_submodules(&left)?.maximal().len() == 1,
        vnr_quotient: is_regular_modulo(ring, &jacobson),
        jacobson,
    };
    if !profile.symmetric() {
        return Err(Error::Internal(format!(
            "hdim left {}, right {}, length(R/J) {} for {}",
            profile.hdim_left,
            profile.hdim_right,
            profile.semisimple_quotient_length,
            ring.name()
        )));
    }
    Ok(profile)
}

/// Left principal ideals `Ra`, indexed by `a`.
fn principal_left(ring: &FiniteRing) -> (FiniteModule, Vec<Submodule>) {
    let left = FiniteModule::regular(ring, Side::Left);
    let ideals = ring.elements().map(|a| generated_submodule(&left, [a])).collect();
    (left, ideals)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSweep {
    pub pairs: usize,
    /// Least `(r, a)` where the identity fails.
    pub counterexample: Option<(usize, usize)>,
}

/// Checks `Ra ∩ Rb = Rab` with `b = 1 - ra` for every pair `(r, a)`.
pub fn verify_lemma_ra_rb(ring: &FiniteRing) -> PairSweep {
    let (_, ideals) = principal_left(ring);
    let one = ring.one();
    let mut pairs = 0;
    for r in ring.elements() {
        for a in ring.elements() {
            pairs += 1;
            let b = ring.sub(one, ring.mul(r, a));
            if ideals[a].meet(&ideals[b]) != ideals[ring.mul(a, b)] {
                return PairSweep {
                    pairs,
                    counterexample: Some((r, a)),
                };
            }
        }
    }
    PairSweep {
        pairs,
        counterexample: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ElementDViolation {
    /// `d(a) = 0` for a non-unit `a`.
    ZeroOnNonUnit { a: usize },
    /// `d(a(1 - ba)) ≠ d(a) + d(1 - ba)`.
    NotAdditive { a: usize, b: usize },
    /// `1 - ba` is not a unit yet `d(a(1 - ba)) ≤ d(a)`.
    NoIncrease { a: usize, b: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct ElementD {
    pub values: Vec<usize>,
    pub pairs: usize,
    pub violation: Option<ElementDViolation>,
}

/// `d(a) = hdim(R/Ra)` for every `a`, with its axioms checked over all
/// pairs `(a, b)`.
pub fn element_d_function(ring: &FiniteRing) -> Result<ElementD> {
    let (left, ideals) = principal_left(ring);
    let mut by_ideal: HashMap<&Submodule, usize> = HashMap::new();
    let mut values = Vec::with_capacity(ring.order());
    for ideal in &ideals {
        let d = match by_ideal.get(ideal) {
            Some(&d) => d,
            None => {
                let d = camps_dicks_d(&left, ideal)?;
                by_ideal.insert(ideal, d);
                d
            }
        };
        values.push(d);
    }
    let mut out = ElementD {
        values,
        pairs: 0,
        violation: None,
    };
    if let Some(a) = ring.elements().find(|&a| out.values[a] == 0 && !ring.is_unit(a)) {
        out.violation = Some(ElementDViolation::ZeroOnNonUnit { a });
        return Ok(out);
    }
    let one = ring.one();
    for a in ring.elements() {
        for b in ring.elements() {
            out.pairs += 1;
            let c = ring.sub(one, ring.mul(b, a));
            let product = ring.mul(a, c);
            let d = &out.values;
            if d[product] != d[a] + d[c] {
                out.violation = Some(ElementDViolation::NotAdditive { a, b });
                return Ok(out);
            }
            if !ring.is_unit(c) && d[product] <= d[a] {
                out.violation = Some(ElementDViolation::NoIncrease { a, b });
                return Ok(out);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemiregularRoutes {
    pub principal_left: bool,
    pub vnr_quotient: bool,
    pub principal_right: bool,
}

/// Every principal left ideal has a weak supplement in `_RR`, `R/J` is von
/// Neumann regular, and every principal right ideal has a weak supplement
/// in `R_R`; the three answers must agree.
pub fn is_semiregular_by_weak_supplements(ring: &FiniteRing) -> Result<(bool, SemiregularRoutes)> {
    let left = FiniteModule::regular(ring, Side::Left);
    let right = FiniteModule::regular(ring, Side::Right);
    let all_supplemented = |m: &FiniteModule| -> Result<bool> {
        for a in ring.elements() {
            if find_weak_supplement(m, &generated_submodule(m, [a]))?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let routes = SemiregularRoutes {
        principal_left: all_supplemented(&left)?,
        vnr_quotient: is_regular_modulo(ring, &jacobson_radical(ring)?),
        principal_right: all_supplemented(&right)?,
    };
    if routes.principal_left != routes.vnr_quotient || routes.vnr_quotient != routes.principal_right {
        return Err(Error::Internal(format!("semiregularity routes disagree for {}: {routes:?}", ring.name())));
    }
    Ok((routes.principal_left, routes))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteRing {
        FiniteRing::cyclic(n).unwrap()
    }

    fn t2() -> FiniteRing {
        FiniteRing::triangular(&cyclic(2), 2).unwrap()
    }

    /// Oracle: the strictly upper triangular matrices over F2, i.e. entry
    /// vectors (a, b, c) = (0, b, 0) in row-major (1,1), (1,2), (2,2) order.
    fn strictly_upper() -> Vec<usize> {
        vec![0, 0b010]
    }

    #[test]
    fn jacobson_examples() {
        assert_eq!(jacobson_radical(&cyclic(12)).unwrap().members(), vec![0, 6]);
        assert_eq!(jacobson_radical(&FiniteRing::matrix(&cyclic(2), 2).unwrap()).unwrap().members(), vec![0]);
        assert_eq!(jacobson_radical(&t2()).unwrap().members(), strictly_upper());
        assert_eq!(jacobson_radical(&cyclic(1)).unwrap().members(), vec![0]);
    }

    #[test]
    fn classify_examples() {
        let p = classify(&cyclic(12)).unwrap();
        assert_eq!((p.hdim_left, p.hdim_right, p.local), (2, 2, false));
        let p = classify(&cyclic(8)).unwrap();
        assert_eq!((p.hdim_left, p.local), (1, true));
        let p = classify(&t2()).unwrap();
        assert_eq!((p.hdim_left, p.hdim_right, p.semisimple_quotient_length), (2, 2, 2));
        assert!(!p.commutative && p.vnr_quotient);
        let p = classify(&FiniteRing::matrix(&cyclic(2), 2).unwrap()).unwrap();
        assert_eq!((p.hdim_left, p.hdim_right, p.units.len()), (2, 2, 6));
    }

    #[test]
    fn lemma_sweep_examples() {
        let r = cyclic(12);
        let sweep = verify_lemma_ra_rb(&r);
        assert_eq!(sweep, PairSweep { pairs: 144, counterexample: None });
        let (_, ideals) = principal_left(&r);
        assert_eq!(ideals[4].members(), vec![0, 4, 8]);
        assert_eq!(ideals[9].members(), vec![0, 3, 6, 9]);
        assert_eq!(ideals[4].meet(&ideals[9]).members(), vec![0]);
        assert_eq!(verify_lemma_ra_rb(&t2()).counterexample, None);
    }

    #[test]
    fn element_d_examples() {
        let d = element_d_function(&cyclic(12)).unwrap();
        assert_eq!(d.violation, None);
        assert_eq!((d.values[11], d.values[2], d.values[0], d.values[10], d.values[1]), (0, 1, 2, 1, 0));
        for r in [t2(), FiniteRing::matrix(&cyclic(2), 2).unwrap(), cyclic(8)] {
            let d = element_d_function(&r).unwrap();
            assert_eq!(d.violation, None);
            assert_eq!(d.values[r.one()], 0);
        }
    }

    #[test]
    fn semiregular_examples() {
        assert!(is_semiregular_by_weak_supplements(&FiniteRing::matrix(&cyclic(2), 2).unwrap()).unwrap().0);
        assert!(is_semiregular_by_weak_supplements(&cyclic(4)).unwrap().0);
        assert_eq!(non_regular_element(&cyclic(4)), Some(2));
        assert_eq!(non_regular_element(&cyclic(6)), None);
    }
}
