//! Product and quotient hyperrings, and good homomorphisms with ideal
//! transport along them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{self, Hyperideal};
use crate::ring::FiniteHyperring;
use crate::set::{ElemSet, MAX_CARRIER};

/// Encoding of the pair `(i, j) ∈ R₁ × R₂` as a single carrier index.
/// Fixed as `i·n₂ + j` so witnesses are reproducible across runs.
pub fn pair_index(n2: usize, i: usize, j: usize) -> usize {
    i * n2 + j
}

/// Embeds `S₁ × S₂` into the product carrier.
pub fn product_set(n2: usize, s1: ElemSet, s2: ElemSet) -> ElemSet {
    let mut acc = ElemSet::EMPTY;
    for i in s1.iter() {
        for j in s2.iter() {
            acc.insert(pair_index(n2, i, j));
        }
    }
    acc
}

/// The product hyperring `R₁ × R₂` with componentwise addition and
/// `(x₁,x₂)∘(y₁,y₂) = (x₁∘y₁) × (x₂∘y₂)`. The designated identity is
/// `(1₁, 1₂)` when both factors have one.
pub fn product(h1: &FiniteHyperring, h2: &FiniteHyperring) -> Result<FiniteHyperring> {
    let n1 = h1.carrier_size();
    let n2 = h2.carrier_size();
    let n = n1 * n2;
    if n > MAX_CARRIER {
        return Err(Error::CarrierTooLarge { n, max: MAX_CARRIER });
    }
    let mut add = vec![0usize; n * n];
    let mut mul = vec![ElemSet::EMPTY; n * n];
    for x1 in 0..n1 {
        for x2 in 0..n2 {
            let x = pair_index(n2, x1, x2);
            for y1 in 0..n1 {
                for y2 in 0..n2 {
                    let y = pair_index(n2, y1, y2);
                    add[x * n + y] = pair_index(n2, h1.add(x1, y1), h2.add(x2, y2));
                    mul[x * n + y] = product_set(n2, h1.hyper(x1, y1), h2.hyper(x2, y2));
                }
            }
        }
    }
    let zero = pair_index(n2, h1.zero(), h2.zero());
    let one = match (h1.one(), h2.one()) {
        (Some(e1), Some(e2)) => Some(pair_index(n2, e1, e2)),
        _ => None,
    };
    FiniteHyperring::from_flat(n, zero, one, add, mul)
}

/// A map `R₁ → R₂` given pointwise; good when it preserves `+` exactly and
/// `∘` setwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoodHom {
    map: Vec<usize>,
    #[serde(skip)]
    source_stamp: u64,
    #[serde(skip)]
    target_stamp: u64,
}

impl GoodHom {
    pub fn new(h1: &FiniteHyperring, h2: &FiniteHyperring, map: Vec<usize>) -> Result<Self> {
        if map.len() != h1.carrier_size() {
            return Err(Error::Structure(
                "homomorphism table does not cover the source carrier".into(),
            ));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= h2.carrier_size()) {
            return Err(Error::Structure(format!(
                "homomorphism value {bad} out of target range"
            )));
        }
        Ok(GoodHom {
            map,
            source_stamp: h1.stamp(),
            target_stamp: h2.stamp(),
        })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn image_set(&self, s: ElemSet) -> ElemSet {
        s.iter().map(|x| self.map[x]).collect()
    }

    pub fn preimage_set(&self, s: ElemSet) -> ElemSet {
        self.map
            .iter()
            .enumerate()
            .filter(|&(_, &v)| s.contains(v))
            .map(|(x, _)| x)
            .collect()
    }

    pub fn is_surjective(&self, h2: &FiniteHyperring) -> bool {
        self.image_set(ElemSet::full(self.map.len())) == h2.carrier()
    }

    pub fn check_rings(&self, h1: &FiniteHyperring, h2: &FiniteHyperring) -> Result<()> {
        if self.source_stamp != h1.stamp() || self.target_stamp != h2.stamp() {
            return Err(Error::Domain(
                "homomorphism does not connect these rings".into(),
            ));
        }
        Ok(())
    }
}

/// How a candidate map fails to be a good homomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomViolation {
    /// `φ(x + y) ≠ φ(x) + φ(y)`.
    Addition { x: usize, y: usize },
    /// `φ(x∘y) ≠ φ(x)∘φ(y)` as sets.
    Product { x: usize, y: usize },
}

/// Checks preservation of `+` (exactly) and `∘` (setwise) on all pairs.
pub fn validate_hom(
    h1: &FiniteHyperring,
    h2: &FiniteHyperring,
    hom: &GoodHom,
) -> std::result::Result<(), HomViolation> {
    let n1 = h1.carrier_size();
    for x in 0..n1 {
        for y in 0..n1 {
            if hom.apply(h1.add(x, y)) != h2.add(hom.apply(x), hom.apply(y)) {
                return Err(HomViolation::Addition { x, y });
            }
            let lhs = hom.image_set(h1.hyper(x, y));
            let rhs = h2.hyper(hom.apply(x), hom.apply(y));
            if lhs != rhs {
                return Err(HomViolation::Product { x, y });
            }
        }
    }
    Ok(())
}

/// Additive-coset partition of the quotient `R/K` plus the projection map.
#[derive(Debug, Clone, Serialize)]
pub struct QuotientWitness {
    /// Cosets in quotient-index order; `cosets[0]` is `K` itself.
    pub cosets: Vec<Vec<usize>>,
    pub projection: GoodHom,
}

/// The quotient hyperring `R/K`: elements are additive cosets `x + K`,
/// indexed in order of least representative, with
/// `(x+K)∘(y+K) = {z+K : z ∈ x∘y}`.
///
/// Well-definedness of the induced hyperproduct and the full axiom set are
/// re-validated exhaustively; a failure is a construction error carrying a
/// witness, not a silent acceptance.
pub fn quotient(
    h: &FiniteHyperring,
    k: &Hyperideal,
) -> Result<(FiniteHyperring, QuotientWitness)> {
    k.check_ring(h)?;
    let n = h.carrier_size();
    let kset = k.members();

    // coset_of[x] = quotient index of x + K, in order of least representative
    let mut coset_of = vec![usize::MAX; n];
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let members: ElemSet = kset.iter().map(|kk| h.add(x, kk)).collect();
        let idx = cosets.len();
        for m in members.iter() {
            debug_assert_eq!(coset_of[m], usize::MAX);
            coset_of[m] = idx;
        }
        cosets.push(members.members());
    }
    let q = cosets.len();

    let project = |s: ElemSet| -> ElemSet { s.iter().map(|z| coset_of[z]).collect() };

    // Induced hyperproduct must be independent of representatives.
    let mut mul = vec![ElemSet::EMPTY; q * q];
    let mut add = vec![0usize; q * q];
    for (i, ci) in cosets.iter().enumerate() {
        for (j, cj) in cosets.iter().enumerate() {
            let image = project(h.hyper(ci[0], cj[0]));
            for &x in ci {
                for &y in cj {
                    let other = project(h.hyper(x, y));
                    if other != image {
                        return Err(Error::Domain(format!(
                            "quotient hyperproduct is not well defined: cosets of {} and {} disagree at representatives ({}, {})",
                            ci[0], cj[0], x, y
                        )));
                    }
                }
            }
            mul[i * q + j] = image;
            add[i * q + j] = coset_of[h.add(ci[0], cj[0])];
        }
    }

    let zero = coset_of[h.zero()];
    let mut ring = FiniteHyperring::from_flat(q, zero, None, add, mul)?;
    if let Some(e) = h.one() {
        let cand = coset_of[e];
        if (0..q).all(|a| ring.hyper(a, cand).contains(a)) {
            ring = ring.with_designated_identity(cand)?;
        }
    }
    let report = ring.validate_axioms();
    if let Some(bad) = report.first_failure() {
        return Err(Error::Domain(format!(
            "quotient violates axiom {:?} at witness {:?}",
            bad.axiom, bad.witness
        )));
    }

    let projection = GoodHom::new(h, &ring, coset_of)?;
    Ok((ring, QuotientWitness { cosets, projection }))
}

/// Kernel `φ⁻¹({0₂})`, verified to be a hyperideal of the source.
pub fn kernel(h1: &FiniteHyperring, h2: &FiniteHyperring, hom: &GoodHom) -> Result<Hyperideal> {
    hom.check_rings(h1, h2)?;
    let pre = hom.preimage_set(ElemSet::singleton(h2.zero()));
    Hyperideal::new(h1, pre)
}

/// Preimage of a hyperideal, verified to be a hyperideal of the source.
pub fn preimage_ideal(
    h1: &FiniteHyperring,
    h2: &FiniteHyperring,
    hom: &GoodHom,
    i2: &Hyperideal,
) -> Result<Hyperideal> {
    hom.check_rings(h1, h2)?;
    i2.check_ring(h2)?;
    Hyperideal::new(h1, hom.preimage_set(i2.members()))
}

/// Image of a hyperideal under a surjective good homomorphism, verified to
/// be a hyperideal of the target. Surjectivity is required: pushing an ideal
/// forward along a non-surjective map has no absorption guarantee.
pub fn image_ideal(
    h1: &FiniteHyperring,
    h2: &FiniteHyperring,
    hom: &GoodHom,
    i1: &Hyperideal,
) -> Result<Hyperideal> {
    hom.check_rings(h1, h2)?;
    i1.check_ring(h1)?;
    if !hom.is_surjective(h2) {
        return Err(Error::Domain(
            "image of an ideal requires a surjective homomorphism".into(),
        ));
    }
    Hyperideal::new(h2, hom.image_set(i1.members()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::enumerate_hyperideals;
    use crate::ring::ZnScaledSpec;

    fn ring(n: usize, scalars: &[usize]) -> FiniteHyperring {
        FiniteHyperring::zn_scaled(&ZnScaledSpec::new(n, scalars.iter().copied())).unwrap()
    }

    fn ideal(h: &FiniteHyperring, members: &[usize]) -> Hyperideal {
        Hyperideal::new(h, ElemSet::from_members(members.iter().copied())).unwrap()
    }

    #[test]
    fn product_of_rings() {
        let z2 = ring(2, &[1]);
        let z3 = ring(3, &[1]);
        let p = product(&z2, &z3).unwrap();
        assert_eq!(p.carrier_size(), 6);
        assert!(p.validate_axioms().all_passed());
        // (1,0)∘(0,1) = {(0,0)}
        let x = pair_index(3, 1, 0);
        let y = pair_index(3, 0, 1);
        assert_eq!(p.hyper(x, y).members(), vec![pair_index(3, 0, 0)]);
        assert_eq!(p.one(), Some(pair_index(3, 1, 1)));
    }

    #[test]
    fn product_of_hyperrings_validates() {
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        let z5 = ring(5, &[1]);
        let p = product(&z6, &z5).unwrap();
        assert_eq!(p.carrier_size(), 30);
        assert!(p.validate_axioms().all_passed());
        assert!(p.is_commutative());
    }

    #[test]
    fn product_size_cap() {
        let z9 = ring(9, &[1]);
        let z8 = ring(8, &[1]);
        assert!(product(&z9, &z8).is_ok());
        let p = product(&z9, &z8).unwrap();
        assert!(product(&p, &z8).is_err());
    }

    #[test]
    fn quotient_by_prime_ideal() {
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        let k = ideal(&z6, &[0, 3]);
        let (q, w) = quotient(&z6, &k).unwrap();
        assert_eq!(q.carrier_size(), 3);
        assert_eq!(w.cosets, vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert!(q.validate_axioms().all_passed());
        assert!(validate_hom(&z6, &q, &w.projection).is_ok());

        let k2 = ideal(&z6, &[0, 2, 4]);
        let (q2, _) = quotient(&z6, &k2).unwrap();
        assert_eq!(q2.carrier_size(), 2);
    }

    #[test]
    fn trivial_quotient_is_isomorphic_copy() {
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        let zero = ideal(&z6, &[0]);
        let (q, w) = quotient(&z6, &zero).unwrap();
        assert_eq!(q.carrier_size(), 6);
        assert_eq!((0..6).map(|x| w.projection.apply(x)).collect::<Vec<_>>(), (0..6).collect::<Vec<_>>());
        assert_eq!(q.hyper(2, 3), z6.hyper(2, 3));
    }

    #[test]
    fn hom_validation_catches_broken_maps() {
        let z5 = ring(5, &[1]);
        let id = GoodHom::new(&z5, &z5, (0..5).collect()).unwrap();
        assert!(validate_hom(&z5, &z5, &id).is_ok());

        // 1 ↦ 0 with everything else fixed breaks addition preservation.
        let broken = GoodHom::new(&z5, &z5, vec![0, 0, 2, 3, 4]).unwrap();
        let err = validate_hom(&z5, &z5, &broken).unwrap_err();
        assert!(matches!(err, HomViolation::Addition { .. }));
    }

    #[test]
    fn kernel_and_transport() {
        let z6 = ring(6, &[1, 2, 3, 4, 5]);
        let k = ideal(&z6, &[0, 3]);
        let (q, w) = quotient(&z6, &k).unwrap();
        let ker = kernel(&z6, &q, &w.projection).unwrap();
        assert_eq!(ker.members().members(), vec![0, 3]);

        let zero_q = Hyperideal::new(&q, ElemSet::singleton(0)).unwrap();
        let pre = preimage_ideal(&z6, &q, &w.projection, &zero_q).unwrap();
        assert_eq!(pre.members().members(), vec![0, 3]);

        let img = image_ideal(&z6, &q, &w.projection, &k).unwrap();
        assert_eq!(img.members().members(), vec![0]);

        let id = GoodHom::new(&z6, &z6, (0..6).collect()).unwrap();
        let zero = ideal(&z6, &[0]);
        assert_eq!(
            preimage_ideal(&z6, &z6, &id, &zero).unwrap().members().members(),
            vec![0]
        );
    }

    #[test]
    fn image_requires_surjectivity() {
        let z2 = ring(2, &[1]);
        let z4 = ring(4, &[1]);
        // The constant-zero map preserves + and ∘ here but is not surjective.
        let emb = GoodHom::new(&z2, &z4, vec![0, 0]).unwrap();
        assert!(validate_hom(&z2, &z4, &emb).is_ok());
        let zero = ideal(&z2, &[0]);
        assert!(image_ideal(&z2, &z4, &emb, &zero).is_err());
    }

    #[test]
    fn quotients_preserve_ideal_correspondence() {
        let z8 = ring(8, &[1, 3]);
        for k in enumerate_hyperideals(&z8) {
            if !k.is_proper() {
                continue;
            }
            let (q, w) = quotient(&z8, &k).unwrap();
            assert!(q.validate_axioms().all_passed());
            assert!(validate_hom(&z8, &q, &w.projection).is_ok());
            // ideals of R/K pull back to ideals of R containing K
            for i in enumerate_hyperideals(&q) {
                let pre = preimage_ideal(&z8, &q, &w.projection, &i).unwrap();
                assert!(k.members().is_subset(pre.members()));
            }
        }
    }
}
