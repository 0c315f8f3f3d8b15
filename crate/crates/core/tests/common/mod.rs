//! Brute-force oracles shared by the integration tests. They use plain
//! integer matrices and never call into the Weyl group engine.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use schubert_iso::atlas::catalogue;
use schubert_iso::{CartanMatrix, SchubertDatum, WeylGroup};

pub type Mat = Vec<i64>;

fn mul(a: &Mat, b: &Mat, n: usize) -> Mat {
    let mut c = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                c[i * n + j] += a[i * n + k] * b[k * n + j];
            }
        }
    }
    c
}

/// `s_s` on root coordinates: column `t` holds `α_t − a[s][t]·α_s`.
pub fn reflection_matrix(a: &CartanMatrix, s: usize) -> Mat {
    let n = a.rank();
    let mut m = vec![0; n * n];
    for t in 0..n {
        m[t * n + t] = 1;
        m[s * n + t] -= a.entry(s, t);
    }
    m
}

/// The whole group by breadth-first closure, with a shortest word for
/// every element.
pub struct Closure {
    pub rank: usize,
    pub elements: Vec<Mat>,
    pub words: Vec<Vec<usize>>,
    pub index: HashMap<Mat, usize>,
}

impl Closure {
    pub fn new(a: &CartanMatrix) -> Closure {
        let n = a.rank();
        let gens: Vec<Mat> = (0..n).map(|s| reflection_matrix(a, s)).collect();
        let mut id = vec![0; n * n];
        for i in 0..n {
            id[i * n + i] = 1;
        }
        let mut c = Closure {
            rank: n,
            elements: vec![id.clone()],
            words: vec![vec![]],
            index: HashMap::from([(id, 0)]),
        };
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (s, g) in gens.iter().enumerate() {
                let x = mul(&c.elements[i], g, n);
                if !c.index.contains_key(&x) {
                    let mut w = c.words[i].clone();
                    w.push(s);
                    c.index.insert(x.clone(), c.elements.len());
                    c.elements.push(x);
                    c.words.push(w);
                    queue.push_back(c.elements.len() - 1);
                }
            }
        }
        c
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn length(&self, i: usize) -> usize {
        self.words[i].len()
    }

    pub fn product(&self, a: &CartanMatrix, word: &[usize]) -> usize {
        let n = self.rank;
        let mut m = self.elements[0].clone();
        for &s in word {
            m = mul(&m, &reflection_matrix(a, s), n);
        }
        self.index[&m]
    }

    /// `u ≤ v` iff some subword of a reduced word of `v` multiplies to `u`.
    pub fn subword_leq(&self, a: &CartanMatrix, u: usize, v: usize) -> bool {
        let word = &self.words[v];
        let k = word.len();
        (0u32..1 << k).any(|mask| {
            let sub: Vec<usize> = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| word[i])
                .collect();
            self.product(a, &sub) == u
        })
    }
}

/// Every datum `(A, w, I)` with `A` in the catalogue up to `max_rank`,
/// `ℓ(w) ≤ max_length` and `w ∈ W^I`, fully supported or not.
pub fn all_data(max_rank: usize, max_length: usize) -> Vec<(String, SchubertDatum)> {
    let mut out = Vec::new();
    for (name, cartan) in catalogue(max_rank) {
        let n = cartan.rank();
        let group = Arc::new(WeylGroup::new(cartan));
        for w in group.elements_by_length(max_length, usize::MAX).unwrap() {
            for mask in 0u32..1 << n {
                let parabolic: BTreeSet<usize> = (0..n).filter(|s| mask >> s & 1 == 1).collect();
                if let Ok(d) = SchubertDatum::new(group.clone(), w.clone(), parabolic) {
                    out.push((name.clone(), d));
                }
            }
        }
    }
    out
}

pub fn datum(cartan: CartanMatrix, word: &[&str], parabolic: &[&str]) -> SchubertDatum {
    SchubertDatum::from_labels(cartan, word, parabolic).unwrap()
}
