//! Membership of proper hyperideals in every class the engine knows about,
//! with counterwitnesses for negative answers.
//!
//! All predicates require a commutative validated ring and a proper
//! hyperideal; pair scans are O(n²), triple scans O(n³), with early exit and
//! lexicographic-first witness capture. A [`Classifier`] precomputes the
//! ideal lattice, maximal and prime hyperideals and the Jacobson radical
//! once per ring so batch classification stays cheap.

use std::cell::OnceCell;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{
    self, enumerate_hyperideals, family_meets_cleanly, prime_violation, product_family,
    sum_family, Hyperideal, ProductFamily, SumFamily,
};
use crate::ring::FiniteHyperring;
use crate::set::ElemSet;

/// The hyperideal classes tracked by [`Classifier::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum HyperidealClass {
    Prime,
    Maximal,
    JPrime,
    JPrimary,
    QuasiJPrime,
    QuasiPrimary,
    NHyperideal,
    RHyperideal,
    TwoAbsorbing,
    TwoAbsorbingPrimary,
    TwoAbsorbingJPrime,
    TwoAbsorbingJPrimary,
}

impl HyperidealClass {
    pub const ALL: [HyperidealClass; 12] = [
        HyperidealClass::Prime,
        HyperidealClass::Maximal,
        HyperidealClass::JPrime,
        HyperidealClass::JPrimary,
        HyperidealClass::QuasiJPrime,
        HyperidealClass::QuasiPrimary,
        HyperidealClass::NHyperideal,
        HyperidealClass::RHyperideal,
        HyperidealClass::TwoAbsorbing,
        HyperidealClass::TwoAbsorbingPrimary,
        HyperidealClass::TwoAbsorbingJPrime,
        HyperidealClass::TwoAbsorbingJPrimary,
    ];

    pub fn key(self) -> &'static str {
        match self {
            HyperidealClass::Prime => "prime",
            HyperidealClass::Maximal => "maximal",
            HyperidealClass::JPrime => "j_prime",
            HyperidealClass::JPrimary => "j_primary",
            HyperidealClass::QuasiJPrime => "quasi_j_prime",
            HyperidealClass::QuasiPrimary => "quasi_primary",
            HyperidealClass::NHyperideal => "n_hyperideal",
            HyperidealClass::RHyperideal => "r_hyperideal",
            HyperidealClass::TwoAbsorbing => "2_absorbing",
            HyperidealClass::TwoAbsorbingPrimary => "2_absorbing_primary",
            HyperidealClass::TwoAbsorbingJPrime => "2_absorbing_j_prime",
            HyperidealClass::TwoAbsorbingJPrimary => "2_absorbing_j_primary",
        }
    }
}

/// Counterwitness for a failed class membership; re-checkable through the
/// same public predicates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Element { index: usize },
    Pair { x: usize, y: usize },
    Triple { x: usize, y: usize, z: usize },
    Ideal { members: Vec<usize> },
}

/// Outcome of a single predicate: the flag plus a counterwitness when false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Decision {
    fn yes() -> Self {
        Decision {
            holds: true,
            witness: None,
        }
    }

    fn no(witness: Witness) -> Self {
        Decision {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Per-ideal boolean vector over all classes, with witnesses for the false
/// flags.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub ideal: Vec<usize>,
    pub flags: BTreeMap<String, bool>,
    pub witnesses: BTreeMap<String, Witness>,
    pub c_hyperideal: bool,
    pub strong_c_hyperideal: bool,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    pub fn flag(&self, class: HyperidealClass) -> bool {
        self.flags[class.key()]
    }

    pub fn witness(&self, class: HyperidealClass) -> Option<&Witness> {
        self.witnesses.get(class.key())
    }
}

/// Classification context for one commutative validated hyperring.
pub struct Classifier<'a> {
    h: &'a FiniteHyperring,
    ideals: Vec<Hyperideal>,
    index: BTreeMap<u64, usize>,
    maximal_sets: Vec<ElemSet>,
    prime_sets: Vec<ElemSet>,
    jac: Hyperideal,
    zero_ideal: Hyperideal,
    sqrt_zero: ElemSet,
    triples: OnceCell<Vec<ElemSet>>,
    c_family: OnceCell<ProductFamily>,
    s_family: OnceCell<SumFamily>,
}

impl<'a> Classifier<'a> {
    /// Builds the context. Fails on noncommutative rings and on degenerate
    /// rings without proper hyperideals (e.g. the one-element ring), which no
    /// classifier accepts.
    pub fn new(h: &'a FiniteHyperring) -> Result<Self> {
        if !h.is_commutative() {
            return Err(Error::Domain(
                "classification requires a commutative hyperring".into(),
            ));
        }
        let ideals = enumerate_hyperideals(h);
        if !ideals.iter().any(|i| i.is_proper()) {
            return Err(Error::Domain(
                "ring has no proper hyperideals to classify".into(),
            ));
        }
        let index = ideals
            .iter()
            .enumerate()
            .map(|(k, i)| (i.members().bits(), k))
            .collect();
        let maximal_sets = ideal::maximal_hyperideals(h)?
            .into_iter()
            .map(|m| m.members())
            .collect();
        let prime_sets: Vec<ElemSet> = ideals
            .iter()
            .filter(|i| i.is_proper() && prime_violation(h, i.members()).is_none())
            .map(|i| i.members())
            .collect();
        let jac = ideal::jacobson(h)?;
        let zero_ideal = ideal::generated_ideal(h, ElemSet::singleton(h.zero()))?;
        let sqrt_zero = ideal::prime_radical(h, &zero_ideal).members();
        Ok(Classifier {
            h,
            ideals,
            index,
            maximal_sets,
            prime_sets,
            jac,
            zero_ideal,
            sqrt_zero,
            triples: OnceCell::new(),
            c_family: OnceCell::new(),
            s_family: OnceCell::new(),
        })
    }

    pub fn ring(&self) -> &'a FiniteHyperring {
        self.h
    }

    /// All hyperideals including `R`, sorted by (size, members).
    pub fn ideals(&self) -> &[Hyperideal] {
        &self.ideals
    }

    pub fn proper_ideals(&self) -> impl Iterator<Item = &Hyperideal> {
        self.ideals.iter().filter(|i| i.is_proper())
    }

    pub fn maximal_sets(&self) -> &[ElemSet] {
        &self.maximal_sets
    }

    pub fn prime_sets(&self) -> &[ElemSet] {
        &self.prime_sets
    }

    pub fn jacobson(&self) -> &Hyperideal {
        &self.jac
    }

    pub fn zero_ideal(&self) -> &Hyperideal {
        &self.zero_ideal
    }

    pub fn sqrt_zero(&self) -> ElemSet {
        self.sqrt_zero
    }

    /// Looks a set up in the ideal lattice.
    pub fn ideal_by_set(&self, s: ElemSet) -> Option<&Hyperideal> {
        self.index.get(&s.bits()).map(|&k| &self.ideals[k])
    }

    /// Prime radical via the precomputed prime list.
    pub fn radical_of_set(&self, s: ElemSet) -> ElemSet {
        let mut acc = self.h.carrier();
        let mut found = false;
        for &p in &self.prime_sets {
            if s.is_subset(p) {
                acc = acc.intersect(p);
                found = true;
            }
        }
        if found {
            acc
        } else {
            self.h.carrier()
        }
    }

    /// `J(I)` via the precomputed maximal list; proper `I` only.
    pub fn jacobson_of_set(&self, s: ElemSet) -> Result<ElemSet> {
        let mut acc = self.h.carrier();
        let mut found = false;
        for &m in &self.maximal_sets {
            if s.is_subset(m) {
                acc = acc.intersect(m);
                found = true;
            }
        }
        if !found {
            return Err(Error::Internal(format!(
                "no maximal hyperideal contains {s}"
            )));
        }
        Ok(acc)
    }

    pub fn is_c(&self, i: &Hyperideal) -> bool {
        let fam = self.c_family.get_or_init(|| product_family(self.h));
        family_meets_cleanly(&fam.sets, i.members())
    }

    pub fn is_strong_c(&self, i: &Hyperideal) -> bool {
        let fam = self.s_family.get_or_init(|| sum_family(self.h));
        family_meets_cleanly(&fam.sets, i.members())
    }

    /// `x∘y∘z` for all triples, flattened as `x·n² + y·n + z`.
    fn triple(&self, x: usize, y: usize, z: usize) -> ElemSet {
        let n = self.h.carrier_size();
        let table = self.triples.get_or_init(|| {
            let mut t = Vec::with_capacity(n * n * n);
            for a in 0..n {
                for b in 0..n {
                    let ab = self.h.hyper(a, b);
                    for c in 0..n {
                        t.push(self.h.set_mul(ab, ElemSet::singleton(c)));
                    }
                }
            }
            t
        });
        table[x * n * n + y * n + z]
    }

    fn guard(&self, i: &Hyperideal) -> Result<()> {
        i.check_ring(self.h)?;
        if !i.is_proper() {
            return Err(Error::Domain(
                "classification requires a proper hyperideal".into(),
            ));
        }
        Ok(())
    }

    /// Prime: `x∘y ⊆ I ⇒ x ∈ I or y ∈ I`.
    pub fn is_prime(&self, i: &Hyperideal) -> Result<Decision> {
        self.guard(i)?;
        Ok(match prime_violation(self.h, i.members()) {
            None => Decision::yes(),
            Some((x, y)) => Decision::no(Witness::Pair { x, y }),
        })
    }

    /// Maximal among proper hyperideals; the witness is a strictly bigger
    /// proper hyperideal.
    pub fn is_maximal(&self, i: &Hyperideal) -> Result<Decision> {
        self.guard(i)?;
        let s = i.members();
        for j in self.proper_ideals() {
            let t = j.members();
            if t != s && s.is_subset(t) {
                return Ok(Decision::no(Witness::Ideal {
                    members: t.members(),
                }));
            }
        }
        Ok(Decision::yes())
    }

    fn pair_scan(
        &self,
        target: ElemSet,
        excuse_x: ElemSet,
        excuse_y: ElemSet,
    ) -> Option<(usize, usize)> {
        let n = self.h.carrier_size();
        for x in 0..n {
            if excuse_x.contains(x) {
                continue;
            }
            for y in 0..n {
                if !excuse_y.contains(y) && self.h.hyper(x, y).is_subset(target) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// J-prime: `x∘y ⊆ I ⇒ x ∈ J(R) or y ∈ I`. Ordered pairs are scanned,
    /// which covers both orientations of the implication.
    pub fn is_j_prime(&self, i: &Hyperideal) -> Result<Decision> {
        self.guard(i)?;
        Ok(self.j_prime_decision_on(i.members()))
    }

    pub(crate) fn j_prime_decision_on(&self, s: ElemSet) -> Decision {
        match self.pair_scan(s, self.jac.members(), s) {
            None => Decision::yes(),
            Some((x, y)) => Decision::no(Witness::Pair { x, y }),
        }
    }

    /// J-primary: `x∘y ⊆ I ⇒ x ∈ J(I) or y ∈ I`.
    pub fn is_j_primary(&self, i: &Hyperideal) -> Result<Decision> {
        self.guard(i)?;
        let ji = self.jacobson_of_set(i.members())?;
        Ok(match self.pair_scan(i.members(), ji, i.members()) {
            None => Decision::yes(),
            Some((x, y)) => Decision::no(Witness::Pair { x, y }),
        })
    }

    /// Quasi J-prime: `√I` is J-prime; an improper radical fails outright.
    pub fn is_quasi_j_prime(&self, i: &Hyperideal) -> Result<Decision> {
        self.guard(i)?;
        let sqrt = self.radical_of_set(i.members());
        if sqrt == self.h.carrier() {
            return Ok(Decision::no(Witness::Ideal {
                members: sqrt.members(),
            }));
        }
        Ok(self.j_prime_decision_on(sqrt))
    }

    /// Quasi primary: `√I` is prime; an improper radical fails outright.
    pub fn is_quasi_primary(&self, i: &Hyperideal) -> Result<Decision> {
        self.guard(i)?;
        let sqrt = self.radical_of_set(i.members());
        if sqrt == self.h.carrier() {
            return Ok(Decision::no(Witness::Ideal {
                members: sqrt.members(),
            }));
        }
        Ok(match prime_violation(self.h, sqrt) {
            None => Decision::yes(),
            Some((x, y)) => Decision::no(Witness::Pair { x, y }),
        })
    }

    /// n-hyperideal: `x∘y ⊆ I ⇒ x ∈ √0 or y ∈ I`.
    pub fn is_n_hyperideal(&self, i: &Hyperideal) -> Result<Decision> {
        self.guard(i)?;
        Ok(match self.pair_scan(i.members(), self.sqrt_zero, i.members()) {
            None => Decision::yes(),
            Some((x, y)) => Decision::no(Witness::Pair { x, y }),
        })
    }

    /// r-hyperideal: `x∘y ⊆ I` and `ann(x) = {0}` force `y ∈ I`.
    pub fn is_r_hyperideal(&self, i: &Hyperideal) -> Result<Decision> {
        self.guard(i)?;
        let n = self.h.carrier_size();
        let zero_only = ElemSet::singleton(self.h.zero());
        for x in 0..n {
            if self.h.ann(x) != zero_only {
                continue;
            }
            for y in 0..n {
                if !i.contains(y) && self.h.hyper(x, y).is_subset(i.members()) {
                    return Ok(Decision::no(Witness::Pair { x, y }));
                }
            }
        }
        Ok(Decision::yes())
    }

    fn triple_scan(
        &self,
        target: ElemSet,
        first: ElemSet,
        second: ElemSet,
        third: ElemSet,
    ) -> Option<(usize, usize, usize)> {
        let n = self.h.carrier_size();
        for x in 0..n {
            for y in 0..n {
                let xy = self.h.hyper(x, y);
                let xy_in = xy.is_subset(first);
                for z in 0..n {
                    if xy_in
                        || !self.triple(x, y, z).is_subset(target)
                        || self.h.hyper(x, z).is_subset(second)
                        || self.h.hyper(y, z).is_subset(third)
                    {
                        continue;
                    }
                    return Some((x, y, z));
                }
            }
        }
        None
    }

    /// 2-absorbing: `x∘y∘z ⊆ I ⇒ x∘y ⊆ I or x∘z ⊆ I or y∘z ⊆ I`.
    pub fn is_2_absorbing(&self, i: &Hyperideal) -> Result<Decision> {
        self.guard(i)?;
        let s = i.members();
        Ok(match self.triple_scan(s, s, s, s) {
            None => Decision::yes(),
            Some((x, y, z)) => Decision::no(Witness::Triple { x, y, z }),
        })
    }

    /// 2-absorbing primary: `x∘y∘z ⊆ I ⇒ x∘y ⊆ I or x∘z ⊆ √I or y∘z ⊆ √I`.
    pub fn is_2_absorbing_primary(&self, i: &Hyperideal) -> Result<Decision> {
        self.guard(i)?;
        let s = i.members();
        let sqrt = self.radical_of_set(s);
        Ok(match self.triple_scan(s, s, sqrt, sqrt) {
            None => Decision::yes(),
            Some((x, y, z)) => Decision::no(Witness::Triple { x, y, z }),
        })
    }

    /// 2-absorbing J-prime: `x∘y∘z ⊆ I ⇒ x∘y ⊆ I or x∘z ⊆ J(R) or y∘z ⊆ J(R)`.
    pub fn is_2_absorbing_j_prime(&self, i: &Hyperideal) -> Result<Decision> {
        self.guard(i)?;
        Ok(self.two_absorbing_j_prime_on(i.members()))
    }

    pub(crate) fn two_absorbing_j_prime_on(&self, s: ElemSet) -> Decision {
        let j = self.jac.members();
        match self.triple_scan(s, s, j, j) {
            None => Decision::yes(),
            Some((x, y, z)) => Decision::no(Witness::Triple { x, y, z }),
        }
    }

    /// 2-absorbing J-primary: `x∘y∘z ⊆ I ⇒ x∘y ⊆ I or x∘z ⊆ J(I) or y∘z ⊆ J(I)`.
    ///
    /// The containments on `J(I)` read the source definition's `∈` as `⊆`,
    /// consistent with every sibling definition; reports carry a note.
    pub fn is_2_absorbing_j_primary(&self, i: &Hyperideal) -> Result<Decision> {
        self.guard(i)?;
        let s = i.members();
        let ji = self.jacobson_of_set(s)?;
        Ok(match self.triple_scan(s, s, ji, ji) {
            None => Decision::yes(),
            Some((x, y, z)) => Decision::no(Witness::Triple { x, y, z }),
        })
    }

    /// J-multiplicatively closed subset: contains `R − J(R)` and satisfies
    /// `x∘y ⊆ S` for every `x ∈ R − J(R)`, `y ∈ S`.
    pub fn is_j_mult_closed(&self, s: ElemSet) -> Result<Decision> {
        if s.is_empty() {
            return Err(Error::Domain("the empty set is not considered".into()));
        }
        let outside = self.jac.members().complement(self.h.carrier_size());
        if let Some(missing) = outside.minus(s).min() {
            return Ok(Decision::no(Witness::Element { index: missing }));
        }
        for x in outside.iter() {
            for y in s.iter() {
                if !self.h.hyper(x, y).is_subset(s) {
                    return Ok(Decision::no(Witness::Pair { x, y }));
                }
            }
        }
        Ok(Decision::yes())
    }

    pub fn decide(&self, class: HyperidealClass, i: &Hyperideal) -> Result<Decision> {
        match class {
            HyperidealClass::Prime => self.is_prime(i),
            HyperidealClass::Maximal => self.is_maximal(i),
            HyperidealClass::JPrime => self.is_j_prime(i),
            HyperidealClass::JPrimary => self.is_j_primary(i),
            HyperidealClass::QuasiJPrime => self.is_quasi_j_prime(i),
            HyperidealClass::QuasiPrimary => self.is_quasi_primary(i),
            HyperidealClass::NHyperideal => self.is_n_hyperideal(i),
            HyperidealClass::RHyperideal => self.is_r_hyperideal(i),
            HyperidealClass::TwoAbsorbing => self.is_2_absorbing(i),
            HyperidealClass::TwoAbsorbingPrimary => self.is_2_absorbing_primary(i),
            HyperidealClass::TwoAbsorbingJPrime => self.is_2_absorbing_j_prime(i),
            HyperidealClass::TwoAbsorbingJPrimary => self.is_2_absorbing_j_primary(i),
        }
    }

    /// Runs every predicate and cross-checks the implications that hold
    /// unconditionally (plus two that require a designated identity).
    pub fn classify(&self, i: &Hyperideal) -> Result<ClassificationReport> {
        self.guard(i)?;
        let mut flags = BTreeMap::new();
        let mut witnesses = BTreeMap::new();
        for class in HyperidealClass::ALL {
            let d = self.decide(class, i)?;
            flags.insert(class.key().to_string(), d.holds);
            if let Some(w) = d.witness {
                witnesses.insert(class.key().to_string(), w);
            }
        }
        let get = |c: HyperidealClass| flags[c.key()];
        debug_assert!(!get(HyperidealClass::Prime) || get(HyperidealClass::TwoAbsorbing));
        debug_assert!(!get(HyperidealClass::Prime) || get(HyperidealClass::QuasiPrimary));
        debug_assert!(!get(HyperidealClass::JPrime) || get(HyperidealClass::JPrimary));
        debug_assert!(
            !get(HyperidealClass::TwoAbsorbing) || get(HyperidealClass::TwoAbsorbingPrimary)
        );
        debug_assert!(
            !get(HyperidealClass::TwoAbsorbingJPrime)
                || get(HyperidealClass::TwoAbsorbingJPrimary)
        );
        if self.h.one().is_some() {
            debug_assert!(!get(HyperidealClass::Maximal) || get(HyperidealClass::Prime));
            debug_assert!(!get(HyperidealClass::NHyperideal) || get(HyperidealClass::JPrime));
        }
        Ok(ClassificationReport {
            ideal: i.members().members(),
            flags,
            witnesses,
            c_hyperideal: self.is_c(i),
            strong_c_hyperideal: self.is_strong_c(i),
            notes: vec![
                "2_absorbing_j_primary reads the membership 'x∘z ∈ J(I)' as set containment x∘z ⊆ J(I)".to_string(),
            ],
        })
    }
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
    fn z6_zero_ideal_flags() {
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        let cls = Classifier::new(&z6).unwrap();
        let zero = ideal(&z6, &[0]);
        let report = cls.classify(&zero).unwrap();
        assert!(!report.flag(HyperidealClass::Prime));
        assert!(!report.flag(HyperidealClass::JPrime));
        assert!(report.flag(HyperidealClass::TwoAbsorbingJPrime));
        assert!(report.flag(HyperidealClass::TwoAbsorbing));
        assert!(!report.flag(HyperidealClass::QuasiJPrime));
        assert!(!report.flag(HyperidealClass::NHyperideal));
        // J({0}) = J(R) = {0}, so the J-primary scan matches the J-prime scan.
        assert_eq!(
            report.flag(HyperidealClass::JPrime),
            report.flag(HyperidealClass::JPrimary)
        );
        assert_eq!(
            report.witness(HyperidealClass::JPrime),
            Some(&Witness::Pair { x: 2, y: 3 })
        );
        let Witness::Pair { x, y } = *report.witness(HyperidealClass::JPrime).unwrap() else {
            panic!("expected pair witness");
        };
        assert_eq!(z6.hyper(x, y).members(), vec![0]);
    }

    #[test]
    fn z6_prime_ideals() {
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        let cls = Classifier::new(&z6).unwrap();
        let p3 = ideal(&z6, &[0, 3]);
        assert!(cls.is_prime(&p3).unwrap().holds);
        assert!(cls.is_maximal(&p3).unwrap().holds);
        assert!(cls.is_j_primary(&p3).unwrap().holds);
        assert!(cls.is_r_hyperideal(&p3).unwrap().holds);
        assert!(cls.is_2_absorbing(&p3).unwrap().holds);
        assert!(cls.is_quasi_primary(&p3).unwrap().holds);
        assert!(!cls.is_2_absorbing_j_prime(&p3).unwrap().holds);

        let zero = ideal(&z6, &[0]);
        assert!(!cls.is_maximal(&zero).unwrap().holds);
        assert!(cls.is_2_absorbing_primary(&zero).unwrap().holds);
        assert!(cls.is_2_absorbing_j_primary(&zero).unwrap().holds);
    }

    #[test]
    fn field_zero_ideal_is_everything() {
        let z5 = ring(5, &[1]);
        let cls = Classifier::new(&z5).unwrap();
        let zero = ideal(&z5, &[0]);
        let report = cls.classify(&zero).unwrap();
        for class in HyperidealClass::ALL {
            assert!(report.flag(class), "{} should hold in a field", class.key());
        }
    }

    #[test]
    fn z4_local_flags() {
        let z4a = ring(4, &[1, 3]);
        let cls = Classifier::new(&z4a).unwrap();
        let zero = ideal(&z4a, &[0]);
        assert!(cls.is_j_prime(&zero).unwrap().holds);
        assert!(cls.is_j_primary(&zero).unwrap().holds);
        assert!(cls.is_quasi_j_prime(&zero).unwrap().holds);
        assert!(cls.is_quasi_primary(&zero).unwrap().holds);
        assert!(cls.is_n_hyperideal(&zero).unwrap().holds);
        assert!(cls.is_2_absorbing_primary(&zero).unwrap().holds);
        assert!(cls.is_2_absorbing_j_primary(&zero).unwrap().holds);
    }

    #[test]
    fn improper_input_is_rejected() {
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        let cls = Classifier::new(&z6).unwrap();
        let full = Hyperideal::new(&z6, z6.carrier()).unwrap();
        assert!(cls.classify(&full).is_err());
        assert!(cls.is_r_hyperideal(&full).is_err());
    }

    #[test]
    fn j_mult_closed_examples() {
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        let cls = Classifier::new(&z6).unwrap();
        let s = ElemSet::from_members([1, 2, 3, 4, 5]);
        let d = cls.is_j_mult_closed(s).unwrap();
        assert!(!d.holds);
        assert!(matches!(d.witness, Some(Witness::Pair { .. })));

        let z5 = ring(5, &[1]);
        let cls5 = Classifier::new(&z5).unwrap();
        assert!(cls5
            .is_j_mult_closed(ElemSet::from_members([1, 2, 3, 4]))
            .unwrap()
            .holds);
        assert!(cls5.is_j_mult_closed(z5.carrier()).unwrap().holds);
    }

    #[test]
    fn witnesses_recheck_as_violations() {
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        let cls = Classifier::new(&z6).unwrap();
        let p3 = ideal(&z6, &[0, 3]);
        let d = cls.is_2_absorbing_j_prime(&p3).unwrap();
        let Some(Witness::Triple { x, y, z }) = d.witness else {
            panic!("expected triple witness");
        };
        let xyz = z6.set_mul(z6.hyper(x, y), ElemSet::singleton(z));
        let jac = cls.jacobson().members();
        assert!(xyz.is_subset(p3.members()));
        assert!(!z6.hyper(x, y).is_subset(p3.members()));
        assert!(!z6.hyper(x, z).is_subset(jac));
        assert!(!z6.hyper(y, z).is_subset(jac));
    }

    #[test]
    fn degenerate_ring_is_rejected() {
        let one = FiniteHyperring::from_flat(
            1,
            0,
            None,
            vec![0],
            vec![ElemSet::singleton(0)],
        )
        .unwrap();
        assert!(one.validate_axioms().all_passed());
        assert!(Classifier::new(&one).is_err());
    }
}
