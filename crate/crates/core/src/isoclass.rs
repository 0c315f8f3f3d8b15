//! Deciding whether two Schubert data give isomorphic varieties.
//!
//! A verdict is reached in three stages. Both data are first restricted to
//! the support of `w`. Cheap invariants (dimension, graded basis counts,
//! emptiness of the parabolic part of the support) are then compared. Last,
//! a backtracking search looks for a bijection `τ: S(w) → S(w')` that maps a
//! reduced word of `w` onto a reduced word of `w'` and agrees on the Cartan
//! entries `a_{t1 t2}` for every `t1 t2 ≤ w`. Such a `τ` proves isomorphism.
//! When none exists and both sides meet `I` in at most one node, the data
//! are not isomorphic; otherwise the answer is unknown.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::cohomology::SchubertDatum;
use crate::weyl::{WeylError, WeylGroup, Word, DEFAULT_WORD_CAP};

/// Bijections beyond this count are not replayed to explain a failed search.
const EXPLAIN_LIMIT: usize = 720;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("τ is not a bijection between the supports")]
    NotABijection,
    #[error("τ does not map S(w) ∩ I onto S(w') ∩ I'")]
    ParabolicMismatch,
    #[error("witness word is not a reduced word of w")]
    WitnessNotReduced,
    #[error("image word is not τ of the witness word, or not a reduced word of w'")]
    ImageMismatch,
    #[error("Cartan entries a[{0}][{1}] disagree")]
    CartanMismatch(String, String),
    #[error("certificates do not compose")]
    NotComposable,
}

/// Why two data were found not isomorphic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Dimension {
        left: usize,
        right: usize,
    },
    EmptyVsNonemptyParabolic,
    DegreeTwoCount {
        left: usize,
        right: usize,
    },
    /// Graded counts of the Schubert bases; a graded ring isomorphism
    /// would match them.
    BettiNumbers {
        left: Vec<usize>,
        right: Vec<usize>,
    },
    /// A bijection passing the word condition fails on this entry.
    CartanEntry {
        left: CartanEntry,
        right: CartanEntry,
    },
    /// No bijection maps a reduced word of one side onto the other.
    ReducedWord,
    /// The search found nothing and was too large to replay.
    SearchExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanEntry {
    pub row: String,
    pub col: String,
    pub value: i64,
}

impl Witness {
    /// Short machine tag, e.g. `cartan_entry a[2][1]`.
    pub fn tag(&self) -> String {
        match self {
            Witness::Dimension { .. } => "dimension".into(),
            Witness::EmptyVsNonemptyParabolic => "empty_vs_nonempty_parabolic".into(),
            Witness::DegreeTwoCount { .. } => "degree_two_count".into(),
            Witness::BettiNumbers { .. } => "betti_numbers".into(),
            Witness::CartanEntry { left, .. } => {
                format!("cartan_entry a[{}][{}]", left.row, left.col)
            }
            Witness::ReducedWord => "reduced_word".into(),
            Witness::SearchExhausted => "search_exhausted".into(),
        }
    }

    fn swapped(self) -> Witness {
        match self {
            Witness::Dimension { left, right } => Witness::Dimension {
                left: right,
                right: left,
            },
            Witness::DegreeTwoCount { left, right } => Witness::DegreeTwoCount {
                left: right,
                right: left,
            },
            Witness::BettiNumbers { left, right } => Witness::BettiNumbers {
                left: right,
                right: left,
            },
            Witness::CartanEntry { left, right } => Witness::CartanEntry {
                left: right,
                right: left,
            },
            other => other,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Dimension { left, right } => write!(f, "dimensions differ: {left} vs {right}"),
            Witness::EmptyVsNonemptyParabolic => {
                write!(f, "exactly one side has a parabolic node in the support")
            }
            Witness::DegreeTwoCount { left, right } => {
                write!(f, "degree-two classes differ: {left} vs {right}")
            }
            Witness::BettiNumbers { left, right } => {
                write!(f, "graded basis counts differ: {left:?} vs {right:?}")
            }
            Witness::CartanEntry { left, right } => write!(
                f,
                "a[{}][{}] = {} but a'[{}][{}] = {}",
                left.row, left.col, left.value, right.row, right.col, right.value
            ),
            Witness::ReducedWord => {
                write!(f, "no bijection carries a reduced word of w to one of w'")
            }
            Witness::SearchExhausted => write!(f, "no admissible bijection exists"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnknownReason {
    /// No bijection was found, but one side meets `I` in two or more
    /// support nodes, where absence of a bijection proves nothing.
    BeyondTheoremScope,
}

impl UnknownReason {
    pub fn tag(&self) -> &'static str {
        match self {
            UnknownReason::BeyondTheoremScope => "beyond_theorem_scope",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VerdictKind {
    Isomorphic,
    NotIsomorphic,
    Unknown,
}

impl VerdictKind {
    pub fn tag(&self) -> &'static str {
        match self {
            VerdictKind::Isomorphic => "isomorphic",
            VerdictKind::NotIsomorphic => "not_isomorphic",
            VerdictKind::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoVerdict {
    Isomorphic(TauCertificate),
    NotIsomorphic(Witness),
    Unknown(UnknownReason),
}

impl IsoVerdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            IsoVerdict::Isomorphic(_) => VerdictKind::Isomorphic,
            IsoVerdict::NotIsomorphic(_) => VerdictKind::NotIsomorphic,
            IsoVerdict::Unknown(_) => VerdictKind::Unknown,
        }
    }

    pub fn certificate(&self) -> Option<&TauCertificate> {
        match self {
            IsoVerdict::Isomorphic(c) => Some(c),
            _ => None,
        }
    }

    /// The verdict for the pair read in the opposite order.
    pub fn swapped(self) -> IsoVerdict {
        match self {
            IsoVerdict::Isomorphic(c) => IsoVerdict::Isomorphic(c.inverse()),
            IsoVerdict::NotIsomorphic(w) => IsoVerdict::NotIsomorphic(w.swapped()),
            u => u,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            IsoVerdict::Isomorphic(c) => {
                let tau: Map<String, Value> = c
                    .pairs
                    .iter()
                    .map(|(a, b)| (a.clone(), Value::String(b.clone())))
                    .collect();
                json!({
                    "verdict": "isomorphic",
                    "tau": tau,
                    "witness_word": c.witness_word,
                    "image_word": c.image_word,
                })
            }
            IsoVerdict::NotIsomorphic(w) => json!({
                "verdict": "not_isomorphic",
                "witness": w.tag(),
                "detail": w.to_string(),
            }),
            IsoVerdict::Unknown(r) => json!({"verdict": "unknown", "reason": r.tag()}),
        }
    }
}

/// A bijection `τ: S(w) → S(w')` by display label, with a reduced word of
/// `w` whose image is a reduced word of `w'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauCertificate {
    pub pairs: Vec<(String, String)>,
    pub witness_word: Vec<String>,
    pub image_word: Vec<String>,
}

impl TauCertificate {
    pub fn image_of(&self, label: &str) -> Option<&str> {
        self.pairs
            .iter()
            .find(|(a, _)| a == label)
            .map(|(_, b)| b.as_str())
    }

    pub fn inverse(&self) -> TauCertificate {
        let mut pairs: Vec<(String, String)> = self
            .pairs
            .iter()
            .map(|(a, b)| (b.clone(), a.clone()))
            .collect();
        pairs.sort_by(|x, y| x.0.cmp(&y.0));
        TauCertificate {
            pairs,
            witness_word: self.image_word.clone(),
            image_word: self.witness_word.clone(),
        }
    }

    /// `other ∘ self`, keeping this certificate's witness word.
    pub fn compose(&self, other: &TauCertificate) -> Result<TauCertificate, CertificateError> {
        let pairs = self
            .pairs
            .iter()
            .map(|(a, b)| {
                let c = other.image_of(b).ok_or(CertificateError::NotComposable)?;
                Ok((a.clone(), c.to_owned()))
            })
            .collect::<Result<Vec<_>, CertificateError>>()?;
        if pairs.len() != other.pairs.len() {
            return Err(CertificateError::NotComposable);
        }
        let image_word = self
            .image_word
            .iter()
            .map(|b| {
                other
                    .image_of(b)
                    .map(str::to_owned)
                    .ok_or(CertificateError::NotComposable)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TauCertificate {
            pairs,
            witness_word: self.witness_word.clone(),
            image_word,
        })
    }

    /// Re-checks every claim of the certificate against the original data.
    pub fn verify(&self, d: &SchubertDatum, e: &SchubertDatum) -> Result<(), CertificateError> {
        let lookup = |datum: &SchubertDatum, label: &str| {
            datum
                .cartan()
                .index_of(label)
                .map_err(|_| CertificateError::UnknownLabel(label.to_owned()))
        };
        let mut tau = BTreeMap::new();
        for (a, b) in &self.pairs {
            if tau.insert(lookup(d, a)?, lookup(e, b)?).is_some() {
                return Err(CertificateError::NotABijection);
            }
        }
        let domain: BTreeSet<usize> = tau.keys().copied().collect();
        let range: BTreeSet<usize> = tau.values().copied().collect();
        if domain != d.support() || range != e.support() || range.len() != tau.len() {
            return Err(CertificateError::NotABijection);
        }
        for (&s, &t) in &tau {
            if d.parabolic().contains(&s) != e.parabolic().contains(&t) {
                return Err(CertificateError::ParabolicMismatch);
            }
        }
        let word = d
            .group()
            .parse_word(&self.witness_word)
            .map_err(|_| CertificateError::WitnessNotReduced)?;
        let wd = d
            .group()
            .from_word(word.letters())
            .map_err(|_| CertificateError::WitnessNotReduced)?;
        if wd != *d.w() || wd.length() != word.len() {
            return Err(CertificateError::WitnessNotReduced);
        }
        let image = word.map(|s| tau[&s]);
        if e.group().word_labels(&image) != self.image_word {
            return Err(CertificateError::ImageMismatch);
        }
        let we = e
            .group()
            .from_word(image.letters())
            .map_err(|_| CertificateError::ImageMismatch)?;
        if we != *e.w() || we.length() != image.len() {
            return Err(CertificateError::ImageMismatch);
        }
        if let Some((s, t)) = first_cartan_mismatch(&tau, d, e) {
            return Err(CertificateError::CartanMismatch(
                d.display(s).to_owned(),
                d.display(t).to_owned(),
            ));
        }
        Ok(())
    }
}

/// Restricts a datum to the support of `w`: the Cartan matrix becomes the
/// principal submatrix on `S(w)` and `I` becomes `S(w) ∩ I`. Display labels
/// are kept.
pub fn restrict(d: &SchubertDatum) -> SchubertDatum {
    let support = d.support();
    if support.len() == d.group().rank() {
        return d.clone();
    }
    let cartan = d
        .cartan()
        .submatrix(&support)
        .expect("principal submatrix of finite type");
    let position: HashMap<usize, usize> =
        support.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let group = Arc::new(WeylGroup::new(cartan));
    let word: Vec<usize> = d.word().letters().iter().map(|s| position[s]).collect();
    let w = group.from_word(&word).expect("letters inside the support");
    let parabolic = d
        .parabolic()
        .iter()
        .filter_map(|s| position.get(s).copied())
        .collect();
    SchubertDatum::new(group, w, parabolic).expect("right descents of w lie in its support")
}

/// Invariants that isomorphic varieties share. Both inputs should already be
/// restricted.
pub fn necessary_filters(d: &SchubertDatum, e: &SchubertDatum) -> Result<(), Witness> {
    if d.dimension() != e.dimension() {
        return Err(Witness::Dimension {
            left: d.dimension(),
            right: e.dimension(),
        });
    }
    if d.parabolic_support().is_empty() != e.parabolic_support().is_empty() {
        return Err(Witness::EmptyVsNonemptyParabolic);
    }
    let (l, r) = (d.free_support().len(), e.free_support().len());
    if l != r {
        return Err(Witness::DegreeTwoCount { left: l, right: r });
    }
    let betti = |x: &SchubertDatum| {
        x.group()
            .interval(x.w(), x.parabolic())
            .expect("valid datum")
            .rank_sizes()
    };
    let (l, r) = (betti(d), betti(e));
    if l != r {
        return Err(Witness::BettiNumbers { left: l, right: r });
    }
    Ok(())
}

/// `rel[t1][t2]`: whether `t1 t2 ≤ w` for distinct support nodes.
fn pair_relation(d: &SchubertDatum) -> Vec<Vec<bool>> {
    let g = d.group();
    let n = g.rank();
    let support = d.support();
    let mut rel = vec![vec![false; n]; n];
    for &a in &support {
        for &b in &support {
            if a != b {
                let ab = g.from_word(&[a, b]).expect("in range");
                rel[a][b] = g.bruhat_leq(&ab, d.w());
            }
        }
    }
    rel
}

fn first_cartan_mismatch(
    tau: &BTreeMap<usize, usize>,
    d: &SchubertDatum,
    e: &SchubertDatum,
) -> Option<(usize, usize)> {
    let rel = pair_relation(d);
    for (&a, &ta) in tau {
        for (&b, &tb) in tau {
            if a != b && rel[a][b] && d.cartan().entry(a, b) != e.cartan().entry(ta, tb) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Condition on Cartan entries: `a_{t1 t2} = a'_{τ(t1) τ(t2)}` whenever
/// `t1 ≠ t2` and `t1 t2 ≤ w`. `tau` maps node indices of `d` to those of `e`.
pub fn cartan_condition(
    tau: &BTreeMap<usize, usize>,
    d: &SchubertDatum,
    e: &SchubertDatum,
) -> bool {
    first_cartan_mismatch(tau, d, e).is_none()
}

/// Condition on words: the first reduced word of `w` (in sorted order)
/// whose letter-wise image under `tau` is a reduced word of `w'`.
pub fn word_condition(
    tau: &BTreeMap<usize, usize>,
    d: &SchubertDatum,
    e: &SchubertDatum,
    cap: usize,
) -> Result<Option<Word>, IsoError> {
    let words = d.group().reduced_words(d.w(), cap)?;
    Ok(first_word_image(tau, &words, e))
}

fn first_word_image(
    tau: &BTreeMap<usize, usize>,
    words: &[Word],
    e: &SchubertDatum,
) -> Option<Word> {
    words
        .iter()
        .find(|word| {
            let image: Vec<usize> = word.letters().iter().map(|s| tau[s]).collect();
            e.group()
                .from_word(&image)
                .map(|x| x.length() == image.len() && x == *e.w())
                .unwrap_or(false)
        })
        .cloned()
}

struct SearchSide<'a> {
    datum: &'a SchubertDatum,
    nodes: Vec<usize>,
    rel: Vec<Vec<bool>>,
}

impl<'a> SearchSide<'a> {
    fn new(datum: &'a SchubertDatum) -> Self {
        SearchSide {
            datum,
            nodes: datum.support().into_iter().collect(),
            rel: pair_relation(datum),
        }
    }

    fn entry(&self, s: usize, t: usize) -> i64 {
        self.datum.cartan().entry(s, t)
    }

    /// Data any admissible `τ` must preserve at a node.
    fn signature(&self, s: usize) -> (bool, Vec<i64>, Vec<i64>) {
        let mut out: Vec<i64> = self
            .nodes
            .iter()
            .filter(|&&t| self.rel[s][t])
            .map(|&t| self.entry(s, t))
            .collect();
        let mut inc: Vec<i64> = self
            .nodes
            .iter()
            .filter(|&&t| self.rel[t][s])
            .map(|&t| self.entry(t, s))
            .collect();
        out.sort_unstable();
        inc.sort_unstable();
        (self.datum.parabolic().contains(&s), out, inc)
    }
}

struct Search<'a> {
    left: SearchSide<'a>,
    right: SearchSide<'a>,
    candidates: Vec<Vec<usize>>,
    cap: usize,
    words: Option<Vec<Word>>,
}

impl Search<'_> {
    fn compatible(&self, assigned: &[(usize, usize)], s: usize, t: usize) -> bool {
        let (l, r) = (&self.left, &self.right);
        assigned.iter().all(|&(a, b)| {
            l.rel[s][a] == r.rel[t][b]
                && l.rel[a][s] == r.rel[b][t]
                && (!l.rel[s][a] || l.entry(s, a) == r.entry(t, b))
                && (!l.rel[a][s] || l.entry(a, s) == r.entry(b, t))
        })
    }

    fn run(
        &mut self,
        depth: usize,
        assigned: &mut Vec<(usize, usize)>,
        used: &mut BTreeSet<usize>,
    ) -> Result<Option<(BTreeMap<usize, usize>, Word)>, IsoError> {
        if depth == self.left.nodes.len() {
            let tau: BTreeMap<usize, usize> = assigned.iter().copied().collect();
            if !cartan_condition(&tau, self.left.datum, self.right.datum) {
                return Ok(None);
            }
            if self.words.is_none() {
                self.words = Some(
                    self.left
                        .datum
                        .group()
                        .reduced_words(self.left.datum.w(), self.cap)?,
                );
            }
            let words = self.words.as_ref().unwrap();
            return Ok(first_word_image(&tau, words, self.right.datum).map(|w| (tau, w)));
        }
        let s = self.left.nodes[depth];
        for t in self.candidates[depth].clone() {
            if used.contains(&t) || !self.compatible(assigned, s, t) {
                continue;
            }
            assigned.push((s, t));
            used.insert(t);
            if let Some(found) = self.run(depth + 1, assigned, used)? {
                return Ok(Some(found));
            }
            assigned.pop();
            used.remove(&t);
        }
        Ok(None)
    }
}

fn certificate(
    tau: &BTreeMap<usize, usize>,
    word: &Word,
    d: &SchubertDatum,
    e: &SchubertDatum,
) -> TauCertificate {
    let pairs = tau
        .iter()
        .map(|(&a, &b)| (d.display(a).to_owned(), e.display(b).to_owned()))
        .collect();
    TauCertificate {
        pairs,
        witness_word: d.group().word_labels(word),
        image_word: e.group().word_labels(&word.map(|s| tau[&s])),
    }
}

/// Searches for a certificate between two data without running the
/// necessary filters first. Returns `None` when no admissible `τ` exists.
pub fn search_tau(
    d: &SchubertDatum,
    e: &SchubertDatum,
    cap: usize,
) -> Result<Option<TauCertificate>, IsoError> {
    let (d, e) = (restrict(d), restrict(e));
    let left = SearchSide::new(&d);
    let right = SearchSide::new(&e);
    if left.nodes.len() != right.nodes.len() {
        return Ok(None);
    }
    let candidates = left
        .nodes
        .iter()
        .map(|&s| {
            let sig = left.signature(s);
            right
                .nodes
                .iter()
                .copied()
                .filter(|&t| right.signature(t) == sig)
                .collect()
        })
        .collect();
    let mut search = Search {
        left,
        right,
        candidates,
        cap,
        words: None,
    };
    let found = search.run(0, &mut Vec::new(), &mut BTreeSet::new())?;
    Ok(found.map(|(tau, word)| certificate(&tau, &word, &d, &e)))
}

/// Replays bijections respecting the parabolic parts to name a failure.
fn explain(d: &SchubertDatum, e: &SchubertDatum, cap: usize) -> Result<Witness, IsoError> {
    let left: Vec<usize> = d.support().into_iter().collect();
    let right: Vec<usize> = e.support().into_iter().collect();
    if (1..=left.len()).product::<usize>() > EXPLAIN_LIMIT {
        return Ok(Witness::SearchExhausted);
    }
    let words = d.group().reduced_words(d.w(), cap)?;
    let mut perm: Vec<usize> = (0..right.len()).collect();
    loop {
        let tau: BTreeMap<usize, usize> = left
            .iter()
            .zip(&perm)
            .map(|(&s, &i)| (s, right[i]))
            .collect();
        let respects = tau
            .iter()
            .all(|(s, t)| d.parabolic().contains(s) == e.parabolic().contains(t));
        if respects && first_word_image(&tau, &words, e).is_some() {
            if let Some((a, b)) = first_cartan_mismatch(&tau, d, e) {
                let entry = |x: &SchubertDatum, r: usize, c: usize| CartanEntry {
                    row: x.display(r).to_owned(),
                    col: x.display(c).to_owned(),
                    value: x.cartan().entry(r, c),
                };
                return Ok(Witness::CartanEntry {
                    left: entry(d, a, b),
                    right: entry(e, tau[&a], tau[&b]),
                });
            }
        }
        if !next_permutation(&mut perm) {
            return Ok(Witness::ReducedWord);
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Orders data so that verdicts for `(d, e)` and `(e, d)` mirror each other.
fn datum_key(d: &SchubertDatum) -> (Vec<String>, Vec<Vec<i64>>, Vec<usize>, BTreeSet<usize>) {
    let labels = d
        .cartan()
        .labels()
        .iter()
        .map(|l| l.display.clone())
        .collect();
    (
        labels,
        d.cartan().entries().to_vec(),
        d.word().0,
        d.parabolic().clone(),
    )
}

pub fn check_iso(d: &SchubertDatum, e: &SchubertDatum) -> Result<IsoVerdict, IsoError> {
    check_iso_with_cap(d, e, DEFAULT_WORD_CAP)
}

/// Full checker with an explicit bound on the reduced words enumerated.
pub fn check_iso_with_cap(
    d: &SchubertDatum,
    e: &SchubertDatum,
    cap: usize,
) -> Result<IsoVerdict, IsoError> {
    if datum_key(d) > datum_key(e) {
        return Ok(check_ordered(e, d, cap)?.swapped());
    }
    check_ordered(d, e, cap)
}

fn check_ordered(d: &SchubertDatum, e: &SchubertDatum, cap: usize) -> Result<IsoVerdict, IsoError> {
    let (d, e) = (restrict(d), restrict(e));
    if let Err(w) = necessary_filters(&d, &e) {
        return Ok(IsoVerdict::NotIsomorphic(w));
    }
    if let Some(cert) = search_tau(&d, &e, cap)? {
        return Ok(IsoVerdict::Isomorphic(cert));
    }
    if d.parabolic_support().len() <= 1 && e.parabolic_support().len() <= 1 {
        Ok(IsoVerdict::NotIsomorphic(explain(&d, &e, cap)?))
    } else {
        Ok(IsoVerdict::Unknown(UnknownReason::BeyondTheoremScope))
    }
}
