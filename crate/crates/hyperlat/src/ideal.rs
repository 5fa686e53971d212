//! Hyperideal recognition, generation, enumeration, radicals and colon ideals.
//!
//! A hyperideal of `(R, +, ∘)` is a nonempty subset closed under subtraction
//! and under absorption `r∘x ⊆ I` for `x ∈ I`, `r ∈ R`. Enumeration walks
//! the additive subgroup lattice (far smaller than `2ⁿ`) and filters by
//! absorption; an independent brute-force oracle over all `2ⁿ` subsets lives
//! in the test suites.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ring::FiniteHyperring;
use crate::set::{canonical_set_order, ElemSet};

/// A validated hyperideal, tied to its ring by fingerprint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperideal {
    members: ElemSet,
    proper: bool,
    stamp: u64,
}

impl Hyperideal {
    /// Validates the two closure conditions and binds the set to `h`.
    pub fn new(h: &FiniteHyperring, members: ElemSet) -> Result<Self> {
        match hyperideal_violation(h, members) {
            None => Ok(Self::from_checked(h, members)),
            Some(v) => Err(Error::NotHyperideal(v.describe(members))),
        }
    }

    pub(crate) fn from_checked(h: &FiniteHyperring, members: ElemSet) -> Self {
        debug_assert!(hyperideal_violation(h, members).is_none());
        Hyperideal {
            members,
            proper: members != h.carrier(),
            stamp: h.stamp(),
        }
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn is_proper(&self) -> bool {
        self.proper
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub(crate) fn stamp(&self) -> u64 {
        self.stamp
    }

    /// Guards against pairing an ideal with a different ring.
    pub fn check_ring(&self, h: &FiniteHyperring) -> Result<()> {
        if self.stamp != h.stamp() {
            return Err(Error::Domain(
                "hyperideal does not belong to this ring".into(),
            ));
        }
        Ok(())
    }
}

/// Why a subset fails to be a hyperideal.
#[derive(Debug, Clone, Copy)]
pub enum IdealViolation {
    Empty,
    /// `a - b` escapes the set.
    Subtraction { a: usize, b: usize },
    /// Some element of `r∘x` escapes the set.
    Absorption { r: usize, x: usize },
}

impl IdealViolation {
    fn describe(self, s: ElemSet) -> String {
        match self {
            IdealViolation::Empty => "the empty set".to_string(),
            IdealViolation::Subtraction { a, b } => {
                format!("{s} is not closed under subtraction: {a} - {b} escapes")
            }
            IdealViolation::Absorption { r, x } => {
                format!("{s} does not absorb: {r}∘{x} escapes")
            }
        }
    }
}

/// First violated closure condition, scanning in index order.
pub fn hyperideal_violation(h: &FiniteHyperring, s: ElemSet) -> Option<IdealViolation> {
    if s.is_empty() {
        return Some(IdealViolation::Empty);
    }
    for a in s.iter() {
        for b in s.iter() {
            if !s.contains(h.sub(a, b)) {
                return Some(IdealViolation::Subtraction { a, b });
            }
        }
    }
    for x in s.iter() {
        for r in 0..h.carrier_size() {
            if !h.hyper(r, x).is_subset(s) {
                return Some(IdealViolation::Absorption { r, x });
            }
        }
    }
    None
}

pub fn is_hyperideal(h: &FiniteHyperring, s: ElemSet) -> bool {
    hyperideal_violation(h, s).is_none()
}

/// Least hyperideal containing `seed`, as a fixpoint of closure under
/// subtraction and absorption.
pub fn generated_ideal(h: &FiniteHyperring, seed: ElemSet) -> Result<Hyperideal> {
    if seed.is_empty() {
        return Err(Error::Domain("generated ideal of the empty set".into()));
    }
    let mut cur = seed;
    loop {
        let mut next = cur;
        for a in cur.iter() {
            for b in cur.iter() {
                next.insert(h.sub(a, b));
            }
        }
        for x in cur.iter() {
            for r in 0..h.carrier_size() {
                next = next.union(h.hyper(r, x));
            }
        }
        if next == cur {
            return Ok(Hyperideal::from_checked(h, cur));
        }
        cur = next;
    }
}

/// Closure of a subset under the group addition (subtraction suffices on a
/// finite group).
fn subgroup_closure(h: &FiniteHyperring, seed: ElemSet) -> ElemSet {
    let mut cur = seed;
    cur.insert(h.zero());
    loop {
        let mut next = cur;
        for a in cur.iter() {
            for b in cur.iter() {
                next.insert(h.sub(a, b));
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// All subgroups of `(R, +)`, found by closing each known subgroup with each
/// outside generator until no new subgroup appears.
pub(crate) fn additive_subgroups(h: &FiniteHyperring) -> Vec<ElemSet> {
    let trivial = subgroup_closure(h, ElemSet::singleton(h.zero()));
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    seen.insert(trivial.bits());
    let mut queue = vec![trivial];
    while let Some(s) = queue.pop() {
        for g in s.complement(h.carrier_size()).iter() {
            let mut seed = s;
            seed.insert(g);
            let bigger = subgroup_closure(h, seed);
            if seen.insert(bigger.bits()) {
                queue.push(bigger);
            }
        }
    }
    seen.into_iter().map(ElemSet::from_bits).collect()
}

/// All hyperideals of `h`, including `R` itself, sorted by (size, members).
pub fn enumerate_hyperideals(h: &FiniteHyperring) -> Vec<Hyperideal> {
    let mut ideals: Vec<ElemSet> = additive_subgroups(h)
        .into_iter()
        .filter(|&s| {
            s.iter()
                .all(|x| (0..h.carrier_size()).all(|r| h.hyper(r, x).is_subset(s)))
        })
        .collect();
    ideals.sort_by(canonical_set_order);
    ideals
        .into_iter()
        .map(|s| Hyperideal::from_checked(h, s))
        .collect()
}

/// Proper hyperideals maximal under inclusion among proper hyperideals.
pub fn maximal_hyperideals(h: &FiniteHyperring) -> Result<Vec<Hyperideal>> {
    let proper: Vec<ElemSet> = enumerate_hyperideals(h)
        .into_iter()
        .filter(|i| i.is_proper())
        .map(|i| i.members())
        .collect();
    if proper.is_empty() {
        return Err(Error::Domain("ring has no proper hyperideals".into()));
    }
    Ok(proper
        .iter()
        .filter(|&&m| !proper.iter().any(|&k| m != k && m.is_subset(k)))
        .map(|&m| Hyperideal::from_checked(h, m))
        .collect())
}

/// Jacobson radical `J(R)`: the intersection of all maximal hyperideals.
pub fn jacobson(h: &FiniteHyperring) -> Result<Hyperideal> {
    let maximals = maximal_hyperideals(h)?;
    let mut acc = h.carrier();
    for m in &maximals {
        acc = acc.intersect(m.members());
    }
    Hyperideal::new(h, acc)
        .map_err(|e| Error::Internal(format!("J(R) is not a hyperideal: {e}")))
}

/// `J(I)`: the intersection of all maximal hyperideals containing `I`.
///
/// In a finite hyperring every proper ideal extends to a maximal one by
/// chain ascent, so the intersected family is checked to be nonempty rather
/// than assumed.
pub fn jacobson_of(h: &FiniteHyperring, i: &Hyperideal) -> Result<Hyperideal> {
    i.check_ring(h)?;
    if !i.is_proper() {
        return Err(Error::Domain("J(I) requires a proper hyperideal".into()));
    }
    let above: Vec<ElemSet> = maximal_hyperideals(h)?
        .into_iter()
        .map(|m| m.members())
        .filter(|&m| i.members().is_subset(m))
        .collect();
    if above.is_empty() {
        return Err(Error::Internal(format!(
            "no maximal hyperideal contains the proper ideal {}",
            i.members()
        )));
    }
    let mut acc = h.carrier();
    for m in above {
        acc = acc.intersect(m);
    }
    Hyperideal::new(h, acc)
        .map_err(|e| Error::Internal(format!("J(I) is not a hyperideal: {e}")))
}

/// First pair violating primality of `s`, i.e. `x∘y ⊆ s` with `x ∉ s`, `y ∉ s`.
pub(crate) fn prime_violation(h: &FiniteHyperring, s: ElemSet) -> Option<(usize, usize)> {
    let n = h.carrier_size();
    for x in 0..n {
        for y in 0..n {
            if h.hyper(x, y).is_subset(s) && !s.contains(x) && !s.contains(y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// All prime hyperideals (proper, prime under the pairwise test).
pub fn prime_hyperideals(h: &FiniteHyperring) -> Vec<Hyperideal> {
    enumerate_hyperideals(h)
        .into_iter()
        .filter(|i| i.is_proper() && prime_violation(h, i.members()).is_none())
        .collect()
}

/// Prime radical `√I`: intersection of all prime hyperideals containing `I`,
/// or the full carrier when none does.
pub fn prime_radical(h: &FiniteHyperring, i: &Hyperideal) -> Hyperideal {
    let mut acc = h.carrier();
    let mut found = false;
    for p in prime_hyperideals(h) {
        if i.members().is_subset(p.members()) {
            acc = acc.intersect(p.members());
            found = true;
        }
    }
    if !found {
        return Hyperideal::from_checked(h, h.carrier());
    }
    Hyperideal::new(h, acc).expect("intersection of primes above an ideal is an ideal")
}

/// The power radical `D = {r : rⁿ ⊆ I for some n}`.
///
/// The per-element search iterates `{r}, r², r³, …` and stops when a
/// previously seen set recurs; the finite powerset makes that exact.
pub fn power_radical(h: &FiniteHyperring, i: &Hyperideal) -> ElemSet {
    let target = i.members();
    let mut d = ElemSet::EMPTY;
    for r in 0..h.carrier_size() {
        let mut seen = BTreeSet::new();
        let mut power = ElemSet::singleton(r);
        loop {
            if power.is_subset(target) {
                d.insert(r);
                break;
            }
            if !seen.insert(power.bits()) {
                break;
            }
            power = h.set_mul(power, ElemSet::singleton(r));
        }
    }
    d
}

/// Colon ideal `(I : x) = {r : r∘x ⊆ I}`.
pub fn colon(h: &FiniteHyperring, i: &Hyperideal, x: usize) -> Hyperideal {
    let s: ElemSet = (0..h.carrier_size())
        .filter(|&r| h.hyper(r, x).is_subset(i.members()))
        .collect();
    Hyperideal::new(h, s).expect("(I : x) is always a hyperideal")
}

/// Colon ideal `(I : T) = {r : r∘t ⊆ I for all t ∈ T}` for nonempty `T`.
pub fn colon_set(h: &FiniteHyperring, i: &Hyperideal, t: ElemSet) -> Result<Hyperideal> {
    if t.is_empty() {
        return Err(Error::Domain("colon by the empty set".into()));
    }
    let s: ElemSet = (0..h.carrier_size())
        .filter(|&r| t.iter().all(|tt| h.hyper(r, tt).is_subset(i.members())))
        .collect();
    Hyperideal::new(h, s).map_err(|e| Error::Internal(format!("(I : T) is not an ideal: {e}")))
}

/// The hyperideal generated by the raw setwise product `⋃{a∘b : a∈I, b∈J}`.
/// The raw union need not be an ideal, so it is closed up.
pub fn ideal_product(h: &FiniteHyperring, i: &Hyperideal, j: &Hyperideal) -> Hyperideal {
    let raw = h.set_mul(i.members(), j.members());
    generated_ideal(h, raw).expect("product of nonempty ideals is nonempty")
}

/// Safety valve for the family fixpoints; reaching it on desk-scale corpora
/// would indicate a runaway closure rather than a legitimate instance.
const FAMILY_CAP: usize = 1 << 17;

/// The class **C** of all finite hyperproducts `r₁∘r₂∘…∘rₖ`, realized as the
/// least family of sets containing the singletons (k = 1) and closed under
/// right-multiplication by singletons.
#[derive(Debug, Clone)]
pub struct ProductFamily {
    pub sets: Vec<ElemSet>,
}

pub fn product_family(h: &FiniteHyperring) -> ProductFamily {
    let n = h.carrier_size();
    let mut seen: BTreeSet<u64> = (0..n).map(|r| ElemSet::singleton(r).bits()).collect();
    let mut queue: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
    while let Some(s) = queue.pop() {
        for r in 0..n {
            let next = h.set_mul(s, ElemSet::singleton(r));
            if seen.insert(next.bits()) {
                assert!(seen.len() <= FAMILY_CAP, "product family exceeded cap");
                queue.push(next);
            }
        }
    }
    let mut sets: Vec<ElemSet> = seen.into_iter().map(ElemSet::from_bits).collect();
    sets.sort_by(canonical_set_order);
    ProductFamily { sets }
}

/// The class 𝔘 of finite sums of members of **C**.
#[derive(Debug, Clone)]
pub struct SumFamily {
    pub sets: Vec<ElemSet>,
}

pub fn sum_family(h: &FiniteHyperring) -> SumFamily {
    let products = product_family(h);
    let mut seen: BTreeSet<u64> = products.sets.iter().map(|s| s.bits()).collect();
    let mut queue: Vec<ElemSet> = products.sets.clone();
    while let Some(s) = queue.pop() {
        for &a in &products.sets {
            let next = h.set_add(s, a);
            if seen.insert(next.bits()) {
                assert!(seen.len() <= FAMILY_CAP, "sum family exceeded cap");
                queue.push(next);
            }
        }
    }
    let mut sets: Vec<ElemSet> = seen.into_iter().map(ElemSet::from_bits).collect();
    sets.sort_by(canonical_set_order);
    SumFamily { sets }
}

/// Whether every member of **C** meeting `I` is contained in `I`.
pub fn is_c_hyperideal(h: &FiniteHyperring, i: &Hyperideal) -> bool {
    family_meets_cleanly(&product_family(h).sets, i.members())
}

/// Whether every member of 𝔘 meeting `I` is contained in `I`.
pub fn is_strong_c_hyperideal(h: &FiniteHyperring, i: &Hyperideal) -> bool {
    family_meets_cleanly(&sum_family(h).sets, i.members())
}

pub(crate) fn family_meets_cleanly(family: &[ElemSet], target: ElemSet) -> bool {
    family
        .iter()
        .all(|&a| !a.intersects(target) || a.is_subset(target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ZnScaledSpec;

    fn ring(n: usize, scalars: &[usize]) -> FiniteHyperring {
        FiniteHyperring::zn_scaled(&ZnScaledSpec::new(n, scalars.iter().copied())).unwrap()
    }

    fn ideal(h: &FiniteHyperring, members: &[usize]) -> Hyperideal {
        Hyperideal::new(h, ElemSet::from_members(members.iter().copied())).unwrap()
    }

    #[test]
    fn recognition() {
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        assert!(is_hyperideal(&z6, ElemSet::from_members([0, 3])));
        assert!(!is_hyperideal(&z6, ElemSet::from_members([0, 1])));
        assert!(is_hyperideal(&z6, ElemSet::from_members([0, 2, 4])));
        assert!(!is_hyperideal(&z6, ElemSet::EMPTY));
    }

    #[test]
    fn generation() {
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        assert_eq!(
            generated_ideal(&z6, ElemSet::singleton(3)).unwrap().members().members(),
            vec![0, 3]
        );
        assert_eq!(
            generated_ideal(&z6, ElemSet::singleton(0)).unwrap().members().members(),
            vec![0]
        );
        assert_eq!(
            generated_ideal(&z6, ElemSet::singleton(2)).unwrap().members().members(),
            vec![0, 2, 4]
        );
    }

    #[test]
    fn enumeration() {
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        let ideals = enumerate_hyperideals(&z6);
        let members: Vec<Vec<usize>> = ideals.iter().map(|i| i.members().members()).collect();
        assert_eq!(
            members,
            vec![
                vec![0],
                vec![0, 3],
                vec![0, 2, 4],
                vec![0, 1, 2, 3, 4, 5],
            ]
        );

        let z5 = ring(5, &[1]);
        assert_eq!(enumerate_hyperideals(&z5).len(), 2);

        let z4a = ring(4, &[1, 3]);
        let members: Vec<Vec<usize>> = enumerate_hyperideals(&z4a)
            .iter()
            .map(|i| i.members().members())
            .collect();
        assert_eq!(members, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn maximals_and_jacobson() {
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        let maxes: Vec<Vec<usize>> = maximal_hyperideals(&z6)
            .unwrap()
            .iter()
            .map(|i| i.members().members())
            .collect();
        assert_eq!(maxes, vec![vec![0, 3], vec![0, 2, 4]]);
        assert_eq!(jacobson(&z6).unwrap().members().members(), vec![0]);

        let z4a = ring(4, &[1, 3]);
        assert_eq!(jacobson(&z4a).unwrap().members().members(), vec![0, 2]);

        let z5 = ring(5, &[1]);
        let maxes = maximal_hyperideals(&z5).unwrap();
        assert_eq!(maxes.len(), 1);
        assert_eq!(maxes[0].members().members(), vec![0]);

        let j = jacobson_of(&z6, &ideal(&z6, &[0, 3])).unwrap();
        assert_eq!(j.members().members(), vec![0, 3]);
        assert!(jacobson_of(&z6, &Hyperideal::new(&z6, z6.carrier()).unwrap()).is_err());
    }

    #[test]
    fn radicals() {
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        let zero = ideal(&z6, &[0]);
        assert_eq!(prime_radical(&z6, &zero).members().members(), vec![0]);
        let p = ideal(&z6, &[0, 3]);
        assert_eq!(prime_radical(&z6, &p).members().members(), vec![0, 3]);
        assert_eq!(power_radical(&z6, &zero).members(), vec![0]);

        let z4a = ring(4, &[1, 3]);
        let zero = ideal(&z4a, &[0]);
        assert_eq!(prime_radical(&z4a, &zero).members().members(), vec![0, 2]);
        assert_eq!(power_radical(&z4a, &zero).members(), vec![0, 2]);

        let full = Hyperideal::new(&z4a, z4a.carrier()).unwrap();
        assert_eq!(power_radical(&z4a, &full), z4a.carrier());
    }

    #[test]
    fn colon_ideals() {
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        let zero = ideal(&z6, &[0]);
        assert_eq!(colon(&z6, &zero, 2).members().members(), vec![0, 3]);
        let p = ideal(&z6, &[0, 3]);
        assert_eq!(colon(&z6, &p, 2).members().members(), vec![0, 3]);
        let full = Hyperideal::new(&z6, z6.carrier()).unwrap();
        assert_eq!(colon(&z6, &full, 4).members(), z6.carrier());
        assert!(colon_set(&z6, &zero, ElemSet::EMPTY).is_err());
        assert_eq!(
            colon_set(&z6, &zero, ElemSet::from_members([2, 3])).unwrap().members().members(),
            vec![0]
        );
    }

    #[test]
    fn ideal_products() {
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        let p3 = ideal(&z6, &[0, 3]);
        let p2 = ideal(&z6, &[0, 2, 4]);
        assert_eq!(ideal_product(&z6, &p3, &p2).members().members(), vec![0]);
        assert_eq!(ideal_product(&z6, &p3, &p3).members().members(), vec![0, 3]);
        let full = Hyperideal::new(&z6, z6.carrier()).unwrap();
        assert_eq!(ideal_product(&z6, &p3, &full).members().members(), vec![0, 3]);
    }

    #[test]
    fn families_and_c_hyperideals() {
        let z5 = ring(5, &[1]);
        let fam = product_family(&z5);
        assert_eq!(fam.sets.len(), 5);
        assert!(fam.sets.iter().all(|s| s.len() == 1));
        for i in enumerate_hyperideals(&z5) {
            assert!(is_c_hyperideal(&z5, &i));
            assert!(is_strong_c_hyperideal(&z5, &i));
        }

        let z4a = ring(4, &[1, 3]);
        let fam = product_family(&z4a);
        assert!(fam.sets.contains(&ElemSet::from_members([1, 3])));
        let zero = ideal(&z4a, &[0]);
        let even = ideal(&z4a, &[0, 2]);
        assert!(is_c_hyperideal(&z4a, &zero));
        assert!(is_c_hyperideal(&z4a, &even));
        assert!(!is_strong_c_hyperideal(&z4a, &zero));
        assert!(is_strong_c_hyperideal(&z4a, &even));

        // 1∘2 = {0,2,4} meets {0} without being contained in it.
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        let zero = ideal(&z6, &[0]);
        assert!(!is_c_hyperideal(&z6, &zero));
    }

    #[test]
    fn power_radical_sits_below_prime_radical() {
        for (n, scalars) in [(6usize, vec![1, 2, 3, 4, 5]), (4, vec![1, 3]), (8, vec![2, 3]), (9, vec![1, 8])] {
            let h = ring(n, &scalars);
            for i in enumerate_hyperideals(&h) {
                let d = power_radical(&h, &i);
                let sqrt = prime_radical(&h, &i).members();
                assert!(d.is_subset(sqrt), "D ⊄ √I for {} in zn({n})", i.members());
                if is_c_hyperideal(&h, &i) {
                    assert_eq!(d, sqrt, "D ≠ √I for C-hyperideal {} in zn({n})", i.members());
                }
            }
        }
    }
}
