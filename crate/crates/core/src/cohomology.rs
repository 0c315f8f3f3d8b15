//! The Schubert basis of `H*(X(w, A, I))` as a combinatorial object.
//!
//! Basis classes `σ_v` are indexed by `v ∈ [1, w]^I` and carry degree
//! `2ℓ(v)`. Products by degree-two classes come from Chevalley's formula:
//!
//! ```text
//! σ_{s} · σ_v = Σ_β ω_s(β^∨) · σ_{(v s_β)^min}
//! ```
//!
//! summed over positive roots `β` with `ℓ((v s_β)^min) = ℓ(v) + 1`, where
//! `ω_s(β^∨)` is the `s`-coordinate of the coroot of `β`. Terms whose key is
//! not below `w` vanish in the cohomology of `X(w)` and are dropped.
//!
//! Everything else in this module (the order `≺`, subring supports, descent
//! sets and reduced words of classes) is recovered from these products
//! alone, never from the Weyl group directly.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::cartan::CartanMatrix;
use crate::weyl::{BruhatInterval, WeylElement, WeylError, WeylGroup, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error("element is not in the Bruhat interval [1, w]^I")]
    NotInInterval,
    #[error("generator {0} lies in the parabolic subset")]
    GeneratorInParabolic(String),
    #[error("generator {0} is not in the support of w")]
    GeneratorNotInSupport(String),
    #[error("σ_{0} is not a right descent of the class")]
    NotADescent(String),
    #[error("class reduced words need exactly one parabolic generator, got {0}")]
    ParabolicTooLarge(usize),
}

/// The triple `(A, w, I)` with `w ∈ W^I`: the identifier of `X(w, A, I)`.
#[derive(Debug, Clone)]
pub struct SchubertDatum {
    group: Arc<WeylGroup>,
    w: WeylElement,
    parabolic: BTreeSet<usize>,
}

impl SchubertDatum {
    pub fn new(
        group: Arc<WeylGroup>,
        w: WeylElement,
        parabolic: BTreeSet<usize>,
    ) -> Result<Self, WeylError> {
        if let Some(&bad) = parabolic.iter().find(|&&s| s >= group.rank()) {
            return Err(WeylError::UnknownLabel(bad.to_string()));
        }
        if !group.is_min_rep(&w, &parabolic) {
            return Err(WeylError::NotMinimalRepresentative);
        }
        Ok(SchubertDatum {
            group,
            w,
            parabolic,
        })
    }

    /// Builds a datum from display labels. The word is multiplied out as
    /// given; it need not be reduced, but the product must lie in `W^I`.
    pub fn from_labels<S: AsRef<str>, T: AsRef<str>>(
        cartan: CartanMatrix,
        word: &[S],
        parabolic: &[T],
    ) -> Result<Self, WeylError> {
        let group = Arc::new(WeylGroup::new(cartan));
        let w = group.from_labels(word)?;
        let parabolic = group.parse_word(parabolic)?.0.into_iter().collect();
        Self::new(group, w, parabolic)
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn cartan(&self) -> &CartanMatrix {
        self.group.cartan()
    }

    pub fn w(&self) -> &WeylElement {
        &self.w
    }

    pub fn parabolic(&self) -> &BTreeSet<usize> {
        &self.parabolic
    }

    /// Complex dimension of the variety, `ℓ(w)`.
    pub fn dimension(&self) -> usize {
        self.w.length()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.group.support(&self.w)
    }

    /// `S(w) ∖ I`, in bijection with the degree-two basis classes.
    pub fn free_support(&self) -> BTreeSet<usize> {
        self.support()
            .difference(&self.parabolic)
            .copied()
            .collect()
    }

    /// `S(w) ∩ I`.
    pub fn parabolic_support(&self) -> BTreeSet<usize> {
        self.support()
            .intersection(&self.parabolic)
            .copied()
            .collect()
    }

    /// Lexicographically smallest reduced word of `w`.
    pub fn word(&self) -> Word {
        self.group.reduced_word(&self.w)
    }

    pub fn display(&self, s: usize) -> &str {
        self.cartan().display(s)
    }
}

impl PartialEq for SchubertDatum {
    fn eq(&self, other: &Self) -> bool {
        self.cartan() == other.cartan() && self.w == other.w && self.parabolic == other.parabolic
    }
}

impl Eq for SchubertDatum {}

/// An integer combination of basis classes, keyed by interval index.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchubertClass {
    terms: BTreeMap<usize, BigInt>,
}

impl SchubertClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis_element(index: usize) -> Self {
        SchubertClass {
            terms: BTreeMap::from([(index, BigInt::from(1))]),
        }
    }

    pub fn add_term(&mut self, index: usize, coefficient: BigInt) {
        let entry = self.terms.entry(index).or_default();
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&index);
        }
    }

    pub fn coefficient(&self, index: usize) -> BigInt {
        self.terms.get(&index).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ(σ)`: basis classes with nonzero coefficient.
    pub fn support(&self) -> BTreeSet<usize> {
        self.terms.keys().copied().collect()
    }

    pub fn all_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}

/// The order `≺` on basis classes, as a reflexive comparison matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisPoset {
    leq: Vec<Vec<bool>>,
    degree_two: Vec<usize>,
}

impl BasisPoset {
    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.leq[u][v]
    }

    pub fn precedes(&self, u: usize, v: usize) -> bool {
        u != v && self.leq[u][v]
    }

    pub fn leq_matrix(&self) -> &[Vec<bool>] {
        &self.leq
    }

    /// Indices of `Σ_1`.
    pub fn degree_two(&self) -> &[usize] {
        &self.degree_two
    }
}

/// The Schubert basis `Σ(w, A, I)` of a datum, with Chevalley multiplication.
#[derive(Debug, Clone)]
pub struct SchubertBasis {
    datum: SchubertDatum,
    interval: BruhatInterval,
    /// `s ↦ index of σ_s` for `s ∈ S(w) ∖ I`.
    sigma_one: BTreeMap<usize, usize>,
}

impl SchubertBasis {
    pub fn new(datum: &SchubertDatum) -> Result<Self, CohomologyError> {
        let group = datum.group();
        let interval = group.interval(datum.w(), datum.parabolic())?;
        let sigma_one = datum
            .free_support()
            .into_iter()
            .map(|s| {
                let idx = interval
                    .index_of(group.generator(s))
                    .expect("s ≤ w and s ∉ I");
                (s, idx)
            })
            .collect();
        Ok(SchubertBasis {
            datum: datum.clone(),
            interval,
            sigma_one,
        })
    }

    pub fn datum(&self) -> &SchubertDatum {
        &self.datum
    }

    pub fn interval(&self) -> &BruhatInterval {
        &self.interval
    }

    pub fn len(&self) -> usize {
        self.interval.len()
    }

    pub fn is_empty(&self) -> bool {
        self.interval.is_empty()
    }

    pub fn element(&self, index: usize) -> &WeylElement {
        &self.interval.elements()[index]
    }

    pub fn index_of(&self, v: &WeylElement) -> Result<usize, CohomologyError> {
        self.interval
            .index_of(v)
            .ok_or(CohomologyError::NotInInterval)
    }

    pub fn degree(&self, index: usize) -> usize {
        2 * self.interval.length(index)
    }

    /// `(v, deg σ_v)` for every basis class, in index order.
    pub fn graded(&self) -> Vec<(&WeylElement, usize)> {
        (0..self.len())
            .map(|i| (self.element(i), self.degree(i)))
            .collect()
    }

    /// Generators `s ∈ S(w) ∖ I`, i.e. the labels of `Σ_1`.
    pub fn degree_two_generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.sigma_one.keys().copied()
    }

    /// Index of `σ_s` for `s ∈ S(w) ∖ I`.
    pub fn sigma(&self, s: usize) -> Result<usize, CohomologyError> {
        self.check_generator(s)?;
        Ok(self.sigma_one[&s])
    }

    fn check_generator(&self, s: usize) -> Result<(), CohomologyError> {
        let name = || self.datum.display(s).to_owned();
        if s >= self.datum.group().rank() {
            return Err(WeylError::UnknownLabel(s.to_string()).into());
        }
        if self.datum.parabolic().contains(&s) {
            return Err(CohomologyError::GeneratorInParabolic(name()));
        }
        if !self.sigma_one.contains_key(&s) {
            return Err(CohomologyError::GeneratorNotInSupport(name()));
        }
        Ok(())
    }

    /// `σ_s · σ_v` by Chevalley's formula.
    pub fn chevalley(&self, s: usize, v: usize) -> Result<SchubertClass, CohomologyError> {
        self.check_generator(s)?;
        if v >= self.len() {
            return Err(CohomologyError::NotInInterval);
        }
        Ok(self.chevalley_unchecked(s, v))
    }

    fn chevalley_unchecked(&self, s: usize, v: usize) -> SchubertClass {
        let group = self.datum.group();
        let base = self.element(v);
        let mut out = SchubertClass::zero();
        for beta in group.roots().positive() {
            let weight = beta.coroot[s];
            if weight == 0 {
                continue;
            }
            let raised = group.min_rep(
                &group.mul(base, &group.reflection(beta)),
                self.datum.parabolic(),
            );
            if raised.length() != base.length() + 1 {
                continue;
            }
            if let Some(idx) = self.interval.index_of(&raised) {
                out.add_term(idx, BigInt::from(weight));
            }
        }
        out
    }

    /// `σ_s · c`, extended linearly from [`chevalley`](Self::chevalley).
    pub fn multiply(
        &self,
        s: usize,
        class: &SchubertClass,
    ) -> Result<SchubertClass, CohomologyError> {
        self.check_generator(s)?;
        let mut out = SchubertClass::zero();
        for (v, c) in class.terms() {
            if v >= self.len() {
                return Err(CohomologyError::NotInInterval);
            }
            for (u, d) in self.chevalley_unchecked(s, v).terms() {
                out.add_term(u, c * d);
            }
        }
        Ok(out)
    }

    /// `≺`: the transitive closure of `σ_u ≺ σ_v` whenever `σ_v` appears in
    /// `σ_s · σ_u` for some `σ_s ∈ Σ_1`.
    pub fn reconstruct_poset(&self) -> BasisPoset {
        let n = self.len();
        let mut leq = vec![vec![false; n]; n];
        for u in 0..n {
            leq[u][u] = true;
            for s in self.degree_two_generators() {
                for v in self.chevalley_unchecked(s, u).support() {
                    leq[u][v] = true;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        BasisPoset {
            leq,
            degree_two: self.sigma_one.values().copied().collect(),
        }
    }

    /// `Σ^{J'}`: the union of supports of the subring generated by the
    /// classes of `Σ_1` whose generators are not in `excluded`.
    ///
    /// Chevalley coefficients are nonnegative, so no cancellation occurs and
    /// the union over monomials is the set of classes reachable from `σ_1`
    /// by repeated multiplication with allowed generators.
    pub fn subring_support(
        &self,
        excluded: &BTreeSet<usize>,
    ) -> Result<BTreeSet<usize>, CohomologyError> {
        for &s in excluded {
            self.check_generator(s)?;
        }
        let allowed: Vec<usize> = self
            .degree_two_generators()
            .filter(|s| !excluded.contains(s))
            .collect();
        let mut reached = BTreeSet::from([0usize]);
        let mut frontier = vec![0usize];
        while let Some(u) = frontier.pop() {
            for &s in &allowed {
                for v in self.chevalley_unchecked(s, u).support() {
                    if reached.insert(v) {
                        frontier.push(v);
                    }
                }
            }
        }
        Ok(reached)
    }

    /// `D_R(σ_v) = {σ_s ∈ Σ_1 : σ_v ∉ Σ^{{σ_s}}}`, returned by generator.
    pub fn class_descents(&self, v: usize) -> Result<BTreeSet<usize>, CohomologyError> {
        if v >= self.len() {
            return Err(CohomologyError::NotInInterval);
        }
        let mut out = BTreeSet::new();
        for s in self.degree_two_generators() {
            if !self.subring_support(&BTreeSet::from([s]))?.contains(&v) {
                out.insert(s);
            }
        }
        Ok(out)
    }

    /// The unique `≺`-maximal `σ_u ≺ σ_v` lying in `Σ^{{σ_t}}`.
    pub fn max_below(&self, v: usize, t: usize) -> Result<usize, CohomologyError> {
        let poset = self.reconstruct_poset();
        self.max_below_in(&poset, v, t)
    }

    fn max_below_in(
        &self,
        poset: &BasisPoset,
        v: usize,
        t: usize,
    ) -> Result<usize, CohomologyError> {
        if !self.class_descents(v)?.contains(&t) {
            return Err(CohomologyError::NotADescent(
                self.datum.display(t).to_owned(),
            ));
        }
        let sub = self.subring_support(&BTreeSet::from([t]))?;
        let candidates: Vec<usize> = sub.into_iter().filter(|&u| poset.precedes(u, v)).collect();
        let maximal: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&u| !candidates.iter().any(|&x| poset.precedes(u, x)))
            .collect();
        assert_eq!(
            maximal.len(),
            1,
            "maximal element below a descent is unique"
        );
        Ok(maximal[0])
    }

    /// Reduced words of `σ_v` when `|I| = 1`, over the alphabet `Σ_1` plus
    /// the symbol of the parabolic generator (both written as node indices).
    ///
    /// For each `σ_t ∈ D_R(σ_v)`, with `σ_u` the maximal class below, the
    /// words are `(word of σ_u) ++ tail`, the tail alternating between the
    /// parabolic symbol and `σ_t`, ending in `σ_t`, of length
    /// `(deg σ_v − deg σ_u) / 2`. A tail ending in the parabolic symbol could
    /// not spell an element of `W^I`.
    pub fn class_reduced_words(&self, v: usize) -> Result<Vec<Word>, CohomologyError> {
        let parabolic = self.datum.parabolic();
        if parabolic.len() != 1 {
            return Err(CohomologyError::ParabolicTooLarge(parabolic.len()));
        }
        if v >= self.len() {
            return Err(CohomologyError::NotInInterval);
        }
        let s = *parabolic.iter().next().unwrap();
        let poset = self.reconstruct_poset();
        let mut memo = HashMap::new();
        let mut words = self.class_words_rec(&poset, s, v, &mut memo)?;
        words.sort();
        words.dedup();
        Ok(words)
    }

    fn class_words_rec(
        &self,
        poset: &BasisPoset,
        s: usize,
        v: usize,
        memo: &mut HashMap<usize, Vec<Word>>,
    ) -> Result<Vec<Word>, CohomologyError> {
        if v == 0 {
            return Ok(vec![Word::default()]);
        }
        if let Some(w) = memo.get(&v) {
            return Ok(w.clone());
        }
        let mut out = Vec::new();
        for t in self.class_descents(v)? {
            let u = self.max_below_in(poset, v, t)?;
            let n = (self.degree(v) - self.degree(u)) / 2;
            let tail: Vec<usize> = (0..n)
                .map(|k| if (n - k) % 2 == 1 { t } else { s })
                .collect();
            for prefix in self.class_words_rec(poset, s, u, memo)? {
                let mut word = prefix.0;
                word.extend_from_slice(&tail);
                out.push(Word(word));
            }
        }
        memo.insert(v, out.clone());
        Ok(out)
    }

    /// Display labels of the key of a basis class.
    pub fn key_labels(&self, index: usize) -> Vec<String> {
        self.datum.group().word_labels(&self.key_word(index))
    }

    /// JSON object from serialized key words to integer coefficients.
    pub fn class_to_json(&self, class: &SchubertClass) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = class
            .terms()
            .map(|(i, c)| {
                let key = serde_json::to_string(&self.key_labels(i)).expect("strings");
                let value = serde_json::from_str(&c.to_string()).expect("integer literal");
                (key, value)
            })
            .collect();
        serde_json::Value::Object(map)
    }

    /// Human form such as `2·σ[s2,s1] + σ[s1,s2]`.
    pub fn format_class(&self, class: &SchubertClass) -> String {
        if class.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = class
            .terms()
            .map(|(i, c)| {
                let word: Vec<String> =
                    self.key_labels(i).iter().map(|l| format!("s{l}")).collect();
                let sigma = format!("σ[{}]", word.join(","));
                if *c == BigInt::from(1) {
                    sigma
                } else {
                    format!("{c}·{sigma}")
                }
            })
            .collect();
        terms.join(" + ")
    }

    /// Lexicographically smallest reduced word of the key of a basis class.
    pub fn key_word(&self, index: usize) -> Word {
        self.datum.group().reduced_word(self.element(index))
    }
}
