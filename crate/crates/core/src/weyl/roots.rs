use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::cartan::CartanMatrix;

/// A root with its coordinates over the simple roots and the coordinates of
/// its coroot over the simple coroots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub root: Vec<i64>,
    pub coroot: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.root.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.root.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root {
            root: self.root.iter().map(|c| -c).collect(),
            coroot: self.coroot.iter().map(|c| -c).collect(),
        }
    }

    /// `s_s(self)` in both coordinate systems:
    /// `s_s(α_t) = α_t − a[s][t]·α_s` and `s_s(α_t^∨) = α_t^∨ − a[t][s]·α_s^∨`.
    pub fn reflect(&self, cartan: &CartanMatrix, s: usize) -> Root {
        let n = cartan.rank();
        let pair_root: i64 = (0..n).map(|t| cartan.entry(s, t) * self.root[t]).sum();
        let pair_coroot: i64 = (0..n).map(|t| cartan.entry(t, s) * self.coroot[t]).sum();
        let mut out = self.clone();
        out.root[s] -= pair_root;
        out.coroot[s] -= pair_coroot;
        out
    }

    /// True when some root coordinate outside `subset` is nonzero.
    pub fn leaves(&self, subset: &BTreeSet<usize>) -> bool {
        self.root
            .iter()
            .enumerate()
            .any(|(t, &c)| c != 0 && !subset.contains(&t))
    }
}

/// The positive roots of a finite root system. The first `simple_count`
/// entries are the simple roots in label order; the rest follow by height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    simple_count: usize,
    positive: Vec<Root>,
}

impl RootSystem {
    /// Closes the simple roots under all simple reflections, keeping the
    /// positive images.
    pub fn generate(cartan: &CartanMatrix) -> RootSystem {
        let n = cartan.rank();
        let simple: Vec<Root> = (0..n)
            .map(|s| {
                let mut e = vec![0; n];
                e[s] = 1;
                Root {
                    root: e.clone(),
                    coroot: e,
                }
            })
            .collect();
        let mut seen: BTreeSet<Root> = simple.iter().cloned().collect();
        let mut queue: VecDeque<Root> = simple.iter().cloned().collect();
        while let Some(r) = queue.pop_front() {
            for s in 0..n {
                let image = r.reflect(cartan, s);
                if image.is_positive() && seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        let mut rest: Vec<Root> = seen.into_iter().filter(|r| r.height() > 1).collect();
        rest.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| b.root.cmp(&a.root))
        });
        let mut positive = simple;
        positive.extend(rest);
        RootSystem {
            simple_count: n,
            positive,
        }
    }

    pub fn simple_count(&self) -> usize {
        self.simple_count
    }

    pub fn positive(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple(&self, s: usize) -> &Root {
        &self.positive[s]
    }

    pub fn find(&self, root_coords: &[i64]) -> Option<&Root> {
        self.positive.iter().find(|r| r.root == root_coords)
    }
}
