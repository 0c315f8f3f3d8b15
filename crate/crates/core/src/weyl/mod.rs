//! Finite Weyl groups in the reflection representation.
//!
//! A [`WeylElement`] is stored as the integer matrix of its action on root
//! coordinates (column `t` is the image of `α_t`). The representation is
//! faithful, so matrix equality is group equality.

mod interval;
mod roots;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::cartan::CartanMatrix;

pub use interval::BruhatInterval;
pub use roots::{Root, RootSystem};

/// Default bound on the number of reduced words enumerated at once.
pub const DEFAULT_WORD_CAP: usize = 10_000;

/// Groups up to this order are enumerated in full when computing intervals.
pub(crate) const SMALL_GROUP: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("unknown node label {0:?}")]
    UnknownLabel(String),
    #[error("more than {0} reduced words")]
    CapExceeded(usize),
    #[error("element is not a minimal coset representative for the parabolic subset")]
    NotMinimalRepresentative,
    #[error("{0:?} is not a positive root")]
    NotARoot(Vec<i64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A sequence of node indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, s: usize) {
        self.0.push(s);
    }

    pub fn map(&self, f: impl Fn(usize) -> usize) -> Word {
        Word(self.0.iter().map(|&s| f(s)).collect())
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl<const N: usize> From<[usize; N]> for Word {
    fn from(v: [usize; N]) -> Self {
        Word(v.to_vec())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    matrix: Box<[i64]>,
    length: usize,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement(len {}, {:?})", self.length, self.matrix)
    }
}

/// The Weyl group of a finite-type Cartan matrix, with its positive roots.
#[derive(Debug)]
pub struct WeylGroup {
    cartan: CartanMatrix,
    roots: RootSystem,
    generators: Vec<WeylElement>,
    small_elements: OnceLock<Option<Vec<WeylElement>>>,
}

impl WeylGroup {
    pub fn new(cartan: CartanMatrix) -> WeylGroup {
        let roots = RootSystem::generate(&cartan);
        let n = cartan.rank();
        let mut g = WeylGroup {
            cartan,
            roots,
            generators: Vec::new(),
            small_elements: OnceLock::new(),
        };
        g.generators = (0..n)
            .map(|s| {
                let mut m = identity_matrix(n);
                for t in 0..n {
                    m[s * n + t] -= g.cartan.entry(s, t);
                }
                WeylElement {
                    matrix: m.into(),
                    length: 1,
                }
            })
            .collect();
        g
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    fn element(&self, matrix: Box<[i64]>) -> WeylElement {
        let length = self.count_negated(&matrix);
        WeylElement { matrix, length }
    }

    fn count_negated(&self, matrix: &[i64]) -> usize {
        self.roots
            .positive()
            .iter()
            .filter(|b| is_negative(&apply(matrix, &b.root)))
            .count()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            matrix: identity_matrix(self.rank()).into(),
            length: 0,
        }
    }

    pub fn generator(&self, s: usize) -> &WeylElement {
        &self.generators[s]
    }

    pub fn mul(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        self.element(matmul(&a.matrix, &b.matrix, self.rank()))
    }

    /// Product of the generators in `word`; the word need not be reduced.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement, WeylError> {
        let n = self.rank();
        let mut m: Box<[i64]> = identity_matrix(n).into();
        for &s in word {
            if s >= n {
                return Err(WeylError::UnknownLabel(s.to_string()));
            }
            m = matmul(&m, &self.generators[s].matrix, n);
        }
        Ok(self.element(m))
    }

    /// Like [`from_word`](Self::from_word) with letters given by display name.
    pub fn from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<WeylElement, WeylError> {
        let word = self.parse_word(labels)?;
        self.from_word(word.letters())
    }

    pub fn parse_word<S: AsRef<str>>(&self, labels: &[S]) -> Result<Word, WeylError> {
        labels
            .iter()
            .map(|l| {
                self.cartan
                    .index_of(l.as_ref())
                    .map_err(|_| WeylError::UnknownLabel(l.as_ref().to_owned()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn word_labels(&self, word: &Word) -> Vec<String> {
        word.letters()
            .iter()
            .map(|&s| self.cartan.display(s).to_owned())
            .collect()
    }

    /// Image of a vector in root coordinates.
    pub fn act(&self, w: &WeylElement, coords: &[i64]) -> Vec<i64> {
        apply(&w.matrix, coords)
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        w.length
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut word = self.reduced_word(w).0;
        word.reverse();
        self.from_word(&word).expect("letters come from this group")
    }

    /// Right descents `{s : w(α_s) < 0}`, left descents `{s : w⁻¹(α_s) < 0}`.
    pub fn descents(&self, w: &WeylElement, side: Side) -> BTreeSet<usize> {
        (0..self.rank())
            .filter(|&s| self.is_descent(w, s, side))
            .collect()
    }

    pub fn is_descent(&self, w: &WeylElement, s: usize, side: Side) -> bool {
        match side {
            Side::Right => {
                let n = self.rank();
                is_negative(&(0..n).map(|i| w.matrix[i * n + s]).collect::<Vec<_>>())
            }
            Side::Left => self.mul(&self.generators[s], w).length < w.length,
        }
    }

    /// The lexicographically smallest reduced word, built from the smallest
    /// left descent at each step.
    pub fn reduced_word(&self, w: &WeylElement) -> Word {
        let mut word = Vec::with_capacity(w.length);
        let mut cur = w.clone();
        while !cur.is_identity() {
            let s = (0..self.rank())
                .find(|&s| self.is_descent(&cur, s, Side::Left))
                .expect("nonidentity element has a left descent");
            word.push(s);
            cur = self.mul(&self.generators[s], &cur);
        }
        Word(word)
    }

    /// All reduced words of `w`, sorted. Fails when there are more than `cap`.
    pub fn reduced_words(&self, w: &WeylElement, cap: usize) -> Result<Vec<Word>, WeylError> {
        let mut counts = HashMap::new();
        if self.count_reduced_words(w, cap, &mut counts) > cap {
            return Err(WeylError::CapExceeded(cap));
        }
        let mut memo: HashMap<WeylElement, Vec<Word>> = HashMap::new();
        let mut words = self.collect_reduced_words(w, &mut memo);
        words.sort();
        Ok(words)
    }

    fn count_reduced_words(
        &self,
        w: &WeylElement,
        cap: usize,
        memo: &mut HashMap<WeylElement, usize>,
    ) -> usize {
        if w.is_identity() {
            return 1;
        }
        if let Some(&c) = memo.get(w) {
            return c;
        }
        let mut total = 0usize;
        for s in self.descents(w, Side::Right) {
            let shorter = self.mul(w, &self.generators[s]);
            total = total.saturating_add(self.count_reduced_words(&shorter, cap, memo));
            if total > cap {
                break;
            }
        }
        memo.insert(w.clone(), total);
        total
    }

    fn collect_reduced_words(
        &self,
        w: &WeylElement,
        memo: &mut HashMap<WeylElement, Vec<Word>>,
    ) -> Vec<Word> {
        if w.is_identity() {
            return vec![Word::default()];
        }
        if let Some(words) = memo.get(w) {
            return words.clone();
        }
        let mut out = Vec::new();
        for s in self.descents(w, Side::Right) {
            let shorter = self.mul(w, &self.generators[s]);
            for mut word in self.collect_reduced_words(&shorter, memo) {
                word.push(s);
                out.push(word);
            }
        }
        memo.insert(w.clone(), out.clone());
        out
    }

    /// Bruhat order by the lifting property: with `s` a left descent of `v`,
    /// `u ≤ v` iff `su ≤ sv` (when `s` also descends `u`) or `u ≤ sv`.
    pub fn bruhat_leq(&self, u: &WeylElement, v: &WeylElement) -> bool {
        let (mut u, mut v) = (u.clone(), v.clone());
        loop {
            if u.length > v.length {
                return false;
            }
            if v.is_identity() {
                return u.is_identity();
            }
            if u.length == v.length {
                return u == v;
            }
            let s = (0..self.rank())
                .find(|&s| self.is_descent(&v, s, Side::Left))
                .expect("nonidentity element has a left descent");
            let sv = self.mul(&self.generators[s], &v);
            let su = self.mul(&self.generators[s], &u);
            if su.length < u.length {
                u = su;
            }
            v = sv;
        }
    }

    /// Generators occurring in a reduced word of `w`.
    pub fn support(&self, w: &WeylElement) -> BTreeSet<usize> {
        self.reduced_word(w).0.into_iter().collect()
    }

    /// The minimal-length element of the coset `w·W_I`.
    pub fn min_rep(&self, w: &WeylElement, parabolic: &BTreeSet<usize>) -> WeylElement {
        let mut cur = w.clone();
        while let Some(&s) = parabolic
            .iter()
            .find(|&&s| self.is_descent(&cur, s, Side::Right))
        {
            cur = self.mul(&cur, &self.generators[s]);
        }
        cur
    }

    pub fn is_min_rep(&self, w: &WeylElement, parabolic: &BTreeSet<usize>) -> bool {
        parabolic
            .iter()
            .all(|&s| !self.is_descent(w, s, Side::Right))
    }

    /// `I(w) = R⁺ ∩ w(R⁻)`: the positive roots sent negative by `w⁻¹`.
    pub fn inversion_set(&self, w: &WeylElement) -> Vec<Root> {
        let inv = self.inverse(w);
        self.roots
            .positive()
            .iter()
            .filter(|b| is_negative(&apply(&inv.matrix, &b.root)))
            .cloned()
            .collect()
    }

    /// The reflection `x ↦ x − <β^∨, x>·β` for a positive root `β`.
    pub fn reflection_of(&self, root_coords: &[i64]) -> Result<WeylElement, WeylError> {
        let beta = self
            .roots
            .find(root_coords)
            .ok_or_else(|| WeylError::NotARoot(root_coords.to_vec()))?;
        Ok(self.reflection(beta))
    }

    pub(crate) fn reflection(&self, beta: &Root) -> WeylElement {
        let n = self.rank();
        let mut m = identity_matrix(n);
        for t in 0..n {
            // <β^∨, α_t> = Σ_s c_s a[s][t]
            let pairing: i64 = (0..n)
                .map(|s| beta.coroot[s] * self.cartan.entry(s, t))
                .sum();
            for i in 0..n {
                m[i * n + t] -= pairing * beta.root[i];
            }
        }
        self.element(m.into())
    }

    /// Every element, in breadth-first order from the identity (so by length).
    pub fn elements(&self) -> Vec<WeylElement> {
        self.elements_bounded(usize::MAX).expect("unbounded")
    }

    /// All elements when the group has at most `limit` of them.
    pub fn elements_bounded(&self, limit: usize) -> Option<Vec<WeylElement>> {
        self.elements_by_length(usize::MAX, limit)
    }

    /// Elements of length at most `max_length`, or `None` past `limit` of them.
    pub fn elements_by_length(&self, max_length: usize, limit: usize) -> Option<Vec<WeylElement>> {
        let id = self.identity();
        let mut seen: HashMap<WeylElement, ()> = HashMap::from([(id.clone(), ())]);
        let mut order = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            if w.length >= max_length {
                continue;
            }
            for g in &self.generators {
                let x = self.mul(&w, g);
                if x.length > w.length && !seen.contains_key(&x) {
                    if order.len() == limit {
                        return None;
                    }
                    seen.insert(x.clone(), ());
                    order.push(x.clone());
                    queue.push_back(x);
                }
            }
        }
        Some(order)
    }

    pub(crate) fn small_elements(&self) -> Option<&[WeylElement]> {
        self.small_elements
            .get_or_init(|| self.elements_bounded(SMALL_GROUP))
            .as_deref()
    }

    pub fn longest_element(&self) -> WeylElement {
        let mut cur = self.identity();
        while let Some(g) = self
            .generators
            .iter()
            .find(|g| self.mul(&cur, g).length > cur.length)
        {
            cur = self.mul(&cur, g);
        }
        cur
    }

    /// `[1, w]^I` with its Bruhat order. Requires `w ∈ W^I`.
    pub fn interval(
        &self,
        w: &WeylElement,
        parabolic: &BTreeSet<usize>,
    ) -> Result<BruhatInterval, WeylError> {
        BruhatInterval::new(self, w, parabolic)
    }
}

fn identity_matrix(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn matmul(a: &[i64], b: &[i64], n: usize) -> Box<[i64]> {
    let mut c = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    c.into()
}

fn apply(m: &[i64], x: &[i64]) -> Vec<i64> {
    let n = x.len();
    (0..n)
        .map(|i| (0..n).map(|j| m[i * n + j] * x[j]).sum())
        .collect()
}

/// Roots are uniformly signed, so one negative coordinate decides.
fn is_negative(x: &[i64]) -> bool {
    x.iter().any(|&c| c < 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    fn m(n: i64) -> WeylGroup {
        WeylGroup::new(CartanMatrix::m(n))
    }

    #[test]
    fn from_word_basics() {
        let g = m(1);
        assert_eq!(g.from_word(&[]).unwrap(), g.identity());
        assert_eq!(g.from_word(&[0, 0]).unwrap(), g.identity());
        let w0 = g.from_word(&[0, 1, 0]).unwrap();
        assert_eq!(w0.length(), 3);
        assert_eq!(w0, g.longest_element());
        assert_eq!(g.from_word(&[2]), Err(WeylError::UnknownLabel("2".into())));
    }

    #[test]
    fn lengths() {
        let b2 = m(2);
        assert_eq!(b2.from_word(&[1, 0]).unwrap().length(), 2);
        assert_eq!(b2.longest_element().length(), 4);
        // unreduced input gets its true length
        assert_eq!(b2.from_word(&[1, 0, 0, 1, 1]).unwrap().length(), 1);
    }

    #[test]
    fn descents_of_small_elements() {
        let b2 = m(2);
        assert!(b2.descents(&b2.identity(), Side::Right).is_empty());
        let w = b2.from_word(&[1, 0]).unwrap();
        assert_eq!(b2.descents(&w, Side::Right), set(&[0]));
        assert_eq!(b2.descents(&w, Side::Left), set(&[1]));
        let a2 = m(1);
        assert_eq!(
            a2.descents(&a2.longest_element(), Side::Right),
            set(&[0, 1])
        );
        assert_eq!(a2.descents(&a2.longest_element(), Side::Left), set(&[0, 1]));
    }

    #[test]
    fn reduced_words_of_small_elements() {
        let a2 = m(1);
        assert_eq!(
            a2.reduced_words(&a2.identity(), 10).unwrap(),
            vec![Word::default()]
        );
        assert_eq!(
            a2.reduced_words(&a2.longest_element(), 10).unwrap(),
            vec![Word::from([0, 1, 0]), Word::from([1, 0, 1])]
        );
        let b2 = m(2);
        let w = b2.from_word(&[1, 0]).unwrap();
        assert_eq!(b2.reduced_words(&w, 10).unwrap(), vec![Word::from([1, 0])]);
        assert_eq!(
            a2.reduced_words(&a2.longest_element(), 1),
            Err(WeylError::CapExceeded(1))
        );
    }

    #[test]
    fn bruhat_examples() {
        let a4 = WeylGroup::new(CartanMatrix::type_a(4));
        let w = a4.from_word(&[3, 2, 1, 0]).unwrap();
        assert!(a4.bruhat_leq(a4.generator(2), &w));
        assert!(!a4.bruhat_leq(&a4.from_word(&[2, 3]).unwrap(), &w));
        assert!(a4.bruhat_leq(&a4.identity(), &w));
        assert_eq!(a4.support(&w), set(&[0, 1, 2, 3]));
        assert!(a4.support(&a4.identity()).is_empty());
        assert_eq!(m(2).support(m(2).generator(0)), set(&[0]));
    }

    #[test]
    fn min_rep_examples() {
        let a2 = m(1);
        let s1s2 = a2.from_word(&[0, 1]).unwrap();
        assert_eq!(a2.min_rep(&s1s2, &set(&[1])), *a2.generator(0));
        assert_eq!(a2.min_rep(&s1s2, &set(&[0])), s1s2);
        assert_eq!(
            a2.min_rep(&a2.longest_element(), &set(&[0, 1])),
            a2.identity()
        );
    }

    #[test]
    fn inversion_sets() {
        let b2 = m(2);
        assert!(b2.inversion_set(&b2.identity()).is_empty());
        let inv: Vec<Vec<i64>> = b2
            .inversion_set(b2.generator(0))
            .into_iter()
            .map(|r| r.root)
            .collect();
        assert_eq!(inv, vec![vec![1, 0]]);
        assert_eq!(b2.inversion_set(&b2.from_word(&[1, 0]).unwrap()).len(), 2);
    }

    #[test]
    fn reflections_of_roots() {
        let a2 = m(1);
        assert_eq!(a2.reflection_of(&[1, 0]).unwrap(), *a2.generator(0));
        assert_eq!(
            a2.reflection_of(&[1, 1]).unwrap(),
            a2.from_word(&[0, 1, 0]).unwrap()
        );
        let b2 = m(2);
        assert_eq!(
            b2.reflection_of(&[1, 2]).unwrap(),
            b2.from_word(&[1, 0, 1]).unwrap()
        );
        assert_eq!(
            b2.reflection_of(&[2, 1]),
            Err(WeylError::NotARoot(vec![2, 1]))
        );
    }

    #[test]
    fn inverse_round_trips() {
        let g = WeylGroup::new(CartanMatrix::type_b(3));
        for w in g.elements() {
            assert!(g.mul(&w, &g.inverse(&w)).is_identity());
        }
    }

    #[test]
    fn words_by_display_label() {
        let g = m(2);
        assert_eq!(
            g.from_labels(&["2", "1"]).unwrap(),
            g.from_word(&[1, 0]).unwrap()
        );
        assert_eq!(g.word_labels(&Word::from([1, 0])), vec!["2", "1"]);
        assert!(matches!(
            g.from_labels(&["9"]),
            Err(WeylError::UnknownLabel(_))
        ));
    }

    #[test]
    fn elements_bounded_stops() {
        let f4 = WeylGroup::new(CartanMatrix::type_f4());
        assert!(f4.elements_bounded(400).is_none());
        assert_eq!(f4.elements_by_length(1, 400).unwrap().len(), 5);
    }
}
