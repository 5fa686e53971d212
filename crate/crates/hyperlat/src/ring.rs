//! Finite multiplicative hyperrings.
//!
//! A multiplicative hyperring is an abelian group `(R, +)` together with a
//! set-valued multiplication `∘ : R × R → P*(R)` that is associative as a
//! hyperoperation, distributes over `+` by inclusion, and satisfies the sign
//! rule `a∘(−b) = (−a)∘b = −(a∘b)`. Everything here is table-driven: the
//! carrier is `0..n`, addition is an `n×n` table of elements, and the
//! hyperproduct is an `n×n` table of [`ElemSet`]s.
//!
//! Rings are immutable after construction and all operations are pure, so
//! values can be shared freely across threads.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::{ElemSet, MAX_CARRIER};

/// Parameters for the scaled-product family on `ℤₙ`: `x∘y = {x·a·y mod n : a ∈ scalars}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZnScaledSpec {
    pub n: usize,
    /// The nonempty set of scaling factors (the set `A` in spec files).
    pub scalars: Vec<usize>,
}

impl ZnScaledSpec {
    pub fn new(n: usize, scalars: impl IntoIterator<Item = usize>) -> Self {
        ZnScaledSpec {
            n,
            scalars: scalars.into_iter().collect(),
        }
    }
}

/// A finite multiplicative hyperring, given by explicit operation tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteHyperring {
    n: usize,
    zero: usize,
    one: Option<usize>,
    add: Vec<usize>,
    neg: Vec<usize>,
    mul: Vec<ElemSet>,
    stamp: u64,
}

impl FiniteHyperring {
    /// Builds a ring from flattened row-major tables. Performs structural
    /// validation only (dimensions, index ranges, nonempty hyperproduct
    /// cells); axiom checking is a separate step, see [`Self::validate_axioms`].
    pub fn from_flat(
        n: usize,
        zero: usize,
        one: Option<usize>,
        add: Vec<usize>,
        mul: Vec<ElemSet>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::Structure("carrier must be nonempty".into()));
        }
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge { n, max: MAX_CARRIER });
        }
        if add.len() != n * n || mul.len() != n * n {
            return Err(Error::Structure(format!(
                "table dimensions do not match carrier size {n}: add has {} entries, mul has {}",
                add.len(),
                mul.len()
            )));
        }
        if zero >= n {
            return Err(Error::Structure(format!("zero index {zero} out of range")));
        }
        if let Some(e) = one {
            if e >= n {
                return Err(Error::Structure(format!("one index {e} out of range")));
            }
        }
        if let Some(&bad) = add.iter().find(|&&v| v >= n) {
            return Err(Error::Structure(format!("addition entry {bad} out of range")));
        }
        let carrier = ElemSet::full(n);
        for (k, cell) in mul.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::Structure(format!(
                    "hyperproduct cell ({},{}) is empty",
                    k / n,
                    k % n
                )));
            }
            if !cell.is_subset(carrier) {
                return Err(Error::Structure(format!(
                    "hyperproduct cell ({},{}) leaves the carrier",
                    k / n,
                    k % n
                )));
            }
        }
        // Additive inverses per element; missing ones surface as an axiom
        // failure in validate_axioms, never through the arithmetic API of a
        // validated ring.
        let mut neg = vec![0usize; n];
        for a in 0..n {
            neg[a] = (0..n).find(|&b| add[a * n + b] == zero).unwrap_or(a);
        }
        let stamp = fingerprint(n, zero, one, &add, &mul);
        Ok(FiniteHyperring {
            n,
            zero,
            one,
            add,
            neg,
            mul,
            stamp,
        })
    }

    /// Builds a ring from nested tables as they appear in spec files.
    pub fn from_tables(
        n: usize,
        zero: usize,
        one: Option<usize>,
        add: &[Vec<usize>],
        mul: &[Vec<Vec<usize>>],
    ) -> Result<Self> {
        if add.len() != n || add.iter().any(|row| row.len() != n) {
            return Err(Error::Structure("addition table is not n×n".into()));
        }
        if mul.len() != n || mul.iter().any(|row| row.len() != n) {
            return Err(Error::Structure("hyperproduct table is not n×n".into()));
        }
        let flat_add: Vec<usize> = add.iter().flatten().copied().collect();
        let mut flat_mul = Vec::with_capacity(n * n);
        for row in mul {
            for cell in row {
                if cell.iter().any(|&v| v >= n.min(MAX_CARRIER)) {
                    return Err(Error::Structure("hyperproduct entry out of range".into()));
                }
                flat_mul.push(ElemSet::from_members(cell.iter().copied()));
            }
        }
        Self::from_flat(n, zero, one, flat_add, flat_mul)
    }

    /// The hyperring `(ℤₙ, +, ∘)` with `x∘y = {x·a·y mod n : a ∈ A}`.
    ///
    /// The designated identity is set to `1` exactly when `1` satisfies the
    /// identity law `x ∈ x∘1` for every `x`.
    pub fn zn_scaled(spec: &ZnScaledSpec) -> Result<Self> {
        let n = spec.n;
        if n < 2 {
            return Err(Error::Structure(format!("zn_scaled modulus must be ≥ 2, got {n}")));
        }
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge { n, max: MAX_CARRIER });
        }
        if spec.scalars.is_empty() {
            return Err(Error::Structure("scalar set A must be nonempty".into()));
        }
        if let Some(&bad) = spec.scalars.iter().find(|&&a| a >= n) {
            return Err(Error::Structure(format!("scalar {bad} out of range for ℤ{n}")));
        }
        let mut add = vec![0usize; n * n];
        let mut mul = vec![ElemSet::EMPTY; n * n];
        for x in 0..n {
            for y in 0..n {
                add[x * n + y] = (x + y) % n;
                let mut cell = ElemSet::EMPTY;
                for &a in &spec.scalars {
                    cell.insert(x * a % n * y % n);
                }
                mul[x * n + y] = cell;
            }
        }
        let mut ring = Self::from_flat(n, 0, None, add, mul)?;
        if (0..n).all(|x| ring.hyper(x, 1).contains(x)) {
            ring.one = Some(1);
        }
        Ok(ring)
    }

    /// Re-designates the identity element after verifying the identity law.
    pub fn with_designated_identity(mut self, e: usize) -> Result<Self> {
        if e >= self.n {
            return Err(Error::Structure(format!("identity index {e} out of range")));
        }
        if !(0..self.n).all(|a| self.hyper(a, e).contains(a)) {
            return Err(Error::Domain(format!(
                "element {e} does not satisfy the identity law"
            )));
        }
        self.one = Some(e);
        self.stamp = fingerprint(self.n, self.zero, self.one, &self.add, &self.mul);
        Ok(self)
    }

    pub fn carrier_size(&self) -> usize {
        self.n
    }

    pub fn carrier(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    /// Fingerprint used to pair ideals with the ring they were built from.
    pub fn stamp(&self) -> u64 {
        self.stamp
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// The table entry `a∘b`.
    pub fn hyper(&self, a: usize, b: usize) -> ElemSet {
        self.mul[a * self.n + b]
    }

    /// Setwise hyperproduct `X∘Y = ⋃_{x∈X, y∈Y} x∘y`. Rejects empty operands.
    pub fn hyperproduct(&self, x: ElemSet, y: ElemSet) -> Result<ElemSet> {
        if x.is_empty() || y.is_empty() {
            return Err(Error::Domain("hyperproduct of an empty set".into()));
        }
        Ok(self.set_mul(x, y))
    }

    pub(crate) fn set_mul(&self, x: ElemSet, y: ElemSet) -> ElemSet {
        let mut acc = ElemSet::EMPTY;
        for a in x.iter() {
            let row = a * self.n;
            for b in y.iter() {
                acc = acc.union(self.mul[row + b]);
            }
        }
        acc
    }

    /// Setwise sum `X + Y = {x + y : x ∈ X, y ∈ Y}`.
    pub(crate) fn set_add(&self, x: ElemSet, y: ElemSet) -> ElemSet {
        let mut acc = ElemSet::EMPTY;
        for a in x.iter() {
            let row = a * self.n;
            for b in y.iter() {
                acc.insert(self.add[row + b]);
            }
        }
        acc
    }

    pub(crate) fn set_neg(&self, x: ElemSet) -> ElemSet {
        x.iter().map(|a| self.neg[a]).collect()
    }

    /// n-fold hyperpower of a single element: `power(r, 1) = {r}`, `power(r, k+1) = power(r, k)∘r`.
    pub(crate) fn element_power(&self, r: usize, k: usize) -> ElemSet {
        let mut acc = ElemSet::singleton(r);
        for _ in 1..k {
            acc = self.set_mul(acc, ElemSet::singleton(r));
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (a..self.n).all(|b| self.hyper(a, b) == self.hyper(b, a)))
    }

    /// Whether `r∘0 = 0∘r = {0}` for every `r`.
    pub fn is_zero_absorbing(&self) -> bool {
        let z = ElemSet::singleton(self.zero);
        (0..self.n).all(|r| self.hyper(r, self.zero) == z && self.hyper(self.zero, r) == z)
    }

    /// All elements `e` satisfying the identity law `a ∈ a∘e` for every `a`.
    pub fn identity_witnesses(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&e| (0..self.n).all(|a| self.hyper(a, e).contains(a)))
            .collect()
    }

    /// Least element satisfying the identity law, if any.
    pub fn find_identity(&self) -> Option<usize> {
        self.identity_witnesses().into_iter().next()
    }

    /// Units relative to the designated identity: `{x : ∃y, 1 ∈ x∘y}`.
    pub fn units(&self) -> Result<ElemSet> {
        let one = self
            .one
            .ok_or_else(|| Error::Domain("ring has no designated identity".into()))?;
        Ok((0..self.n)
            .filter(|&x| (0..self.n).any(|y| self.hyper(x, y).contains(one)))
            .collect())
    }

    /// Zero divisors: `{x : ∃y ≠ 0, x∘y = {0}}`.
    pub fn zero_divisors(&self) -> ElemSet {
        let z = ElemSet::singleton(self.zero);
        (0..self.n)
            .filter(|&x| (0..self.n).any(|y| y != self.zero && self.hyper(x, y) == z))
            .collect()
    }

    /// Annihilator `ann(x) = {y : x∘y = {0}}`.
    pub fn ann(&self, x: usize) -> ElemSet {
        let z = ElemSet::singleton(self.zero);
        (0..self.n).filter(|&y| self.hyper(x, y) == z).collect()
    }

    /// Checks every hyperring axiom exhaustively and reports each with a
    /// minimal witness on failure. Other modules accept a ring only when all
    /// axioms pass.
    pub fn validate_axioms(&self) -> ValidationReport {
        let n = self.n;
        let mut checks = Vec::new();

        let mut witness = None;
        'ident: for a in 0..n {
            if self.add(self.zero, a) != a || self.add(a, self.zero) != a {
                witness = Some(vec![a]);
                break 'ident;
            }
        }
        checks.push(AxiomCheck::new(Axiom::AddIdentity, witness));

        let witness = (0..n)
            .find(|&a| (0..n).all(|b| self.add(a, b) != self.zero))
            .map(|a| vec![a]);
        checks.push(AxiomCheck::new(Axiom::AddInverses, witness));

        let mut witness = None;
        'assoc: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        witness = Some(vec![a, b, c]);
                        break 'assoc;
                    }
                }
            }
        }
        checks.push(AxiomCheck::new(Axiom::AddAssociative, witness));

        let mut witness = None;
        'comm: for a in 0..n {
            for b in a + 1..n {
                if self.add(a, b) != self.add(b, a) {
                    witness = Some(vec![a, b]);
                    break 'comm;
                }
            }
        }
        checks.push(AxiomCheck::new(Axiom::AddCommutative, witness));

        let mut witness = None;
        'massoc: for a in 0..n {
            for b in 0..n {
                let ab = self.hyper(a, b);
                for c in 0..n {
                    let left = self.set_mul(ab, ElemSet::singleton(c));
                    let right = self.set_mul(ElemSet::singleton(a), self.hyper(b, c));
                    if left != right {
                        witness = Some(vec![a, b, c]);
                        break 'massoc;
                    }
                }
            }
        }
        checks.push(AxiomCheck::new(Axiom::MulAssociative, witness));

        let mut left_witness = None;
        let mut right_witness = None;
        'dist: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if left_witness.is_none() {
                        let lhs = self.hyper(a, self.add(b, c));
                        let rhs = self.set_add(self.hyper(a, b), self.hyper(a, c));
                        if !lhs.is_subset(rhs) {
                            left_witness = Some(vec![a, b, c]);
                        }
                    }
                    if right_witness.is_none() {
                        let lhs = self.hyper(self.add(b, c), a);
                        let rhs = self.set_add(self.hyper(b, a), self.hyper(c, a));
                        if !lhs.is_subset(rhs) {
                            right_witness = Some(vec![a, b, c]);
                        }
                    }
                    if left_witness.is_some() && right_witness.is_some() {
                        break 'dist;
                    }
                }
            }
        }
        checks.push(AxiomCheck::new(Axiom::DistributiveLeft, left_witness));
        checks.push(AxiomCheck::new(Axiom::DistributiveRight, right_witness));

        let mut witness = None;
        'sign: for a in 0..n {
            for b in 0..n {
                let x = self.hyper(a, self.neg(b));
                let y = self.hyper(self.neg(a), b);
                let z = self.set_neg(self.hyper(a, b));
                if x != y || y != z {
                    witness = Some(vec![a, b]);
                    break 'sign;
                }
            }
        }
        checks.push(AxiomCheck::new(Axiom::SignRule, witness));

        if let Some(e) = self.one {
            let witness = (0..n).find(|&a| !self.hyper(a, e).contains(a)).map(|a| vec![a]);
            checks.push(AxiomCheck::new(Axiom::IdentityLaw, witness));
        }

        ValidationReport {
            carrier_size: n,
            checks,
            identity_witnesses: self.identity_witnesses(),
        }
    }
}

fn fingerprint(n: usize, zero: usize, one: Option<usize>, add: &[usize], mul: &[ElemSet]) -> u64 {
    // FNV-1a over the defining data; only used to catch ring/ideal mixups.
    let mut h = 0xcbf29ce484222325u64;
    let mut eat = |v: u64| {
        for byte in v.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    eat(n as u64);
    eat(zero as u64);
    eat(one.map_or(u64::MAX, |e| e as u64));
    for &v in add {
        eat(v as u64);
    }
    for &s in mul {
        eat(s.bits());
    }
    h
}

/// The individual hyperring axioms checked by [`FiniteHyperring::validate_axioms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    AddIdentity,
    AddInverses,
    AddAssociative,
    AddCommutative,
    MulAssociative,
    DistributiveLeft,
    DistributiveRight,
    SignRule,
    IdentityLaw,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    /// Minimal witness tuple (first in lexicographic scan order) on failure.
    pub witness: Option<Vec<usize>>,
}

impl AxiomCheck {
    fn new(axiom: Axiom, witness: Option<Vec<usize>>) -> Self {
        AxiomCheck {
            axiom,
            passed: witness.is_none(),
            witness,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub carrier_size: usize,
    pub checks: Vec<AxiomCheck>,
    /// Every element satisfying the identity law, not just the designated one.
    pub identity_witnesses: Vec<usize>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}
