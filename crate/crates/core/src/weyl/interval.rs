use std::collections::{BTreeSet, HashMap};

use super::{WeylElement, WeylError, WeylGroup};

/// The graded poset `[1, w]^I`.
///
/// Elements are sorted by length, then by lexicographically smallest reduced
/// word, so index 0 is always the identity and the last index is `w`.
#[derive(Debug, Clone)]
pub struct BruhatInterval {
    top: WeylElement,
    parabolic: BTreeSet<usize>,
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, usize>,
    leq: Vec<Vec<bool>>,
}

impl BruhatInterval {
    pub(super) fn new(
        group: &WeylGroup,
        w: &WeylElement,
        parabolic: &BTreeSet<usize>,
    ) -> Result<Self, WeylError> {
        if !group.is_min_rep(w, parabolic) {
            return Err(WeylError::NotMinimalRepresentative);
        }
        let members = match group.small_elements() {
            Some(all) => filter_group(group, all, w, parabolic),
            None => downward_closure(group, w, parabolic),
        };
        Ok(Self::from_members(group, w, parabolic, members))
    }

    fn from_members(
        group: &WeylGroup,
        w: &WeylElement,
        parabolic: &BTreeSet<usize>,
        members: Vec<WeylElement>,
    ) -> Self {
        let mut keyed: Vec<(usize, Vec<usize>, WeylElement)> = members
            .into_iter()
            .map(|v| (v.length(), group.reduced_word(&v).0, v))
            .collect();
        keyed.sort();
        let elements: Vec<WeylElement> = keyed.into_iter().map(|(_, _, v)| v).collect();
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let leq = elements
            .iter()
            .map(|u| elements.iter().map(|v| group.bruhat_leq(u, v)).collect())
            .collect();
        BruhatInterval {
            top: w.clone(),
            parabolic: parabolic.clone(),
            elements,
            index,
            leq,
        }
    }

    pub fn top(&self) -> &WeylElement {
        &self.top
    }

    pub fn parabolic(&self) -> &BTreeSet<usize> {
        &self.parabolic
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, v: &WeylElement) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn contains(&self, v: &WeylElement) -> bool {
        self.index.contains_key(v)
    }

    pub fn length(&self, i: usize) -> usize {
        self.elements[i].length()
    }

    /// Bruhat comparison by interval index.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn leq_matrix(&self) -> &[Vec<bool>] {
        &self.leq
    }

    /// Number of elements of each length `0..=ℓ(w)`.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.top.length() + 1];
        for v in &self.elements {
            sizes[v.length()] += 1;
        }
        sizes
    }
}

fn filter_group(
    group: &WeylGroup,
    all: &[WeylElement],
    w: &WeylElement,
    parabolic: &BTreeSet<usize>,
) -> Vec<WeylElement> {
    all.iter()
        .filter(|v| group.is_min_rep(v, parabolic) && group.bruhat_leq(v, w))
        .cloned()
        .collect()
}

/// Walks down from `w` along Bruhat covers `v ↦ v·s_β` that stay in `W^I`.
/// `W^I` is graded under Bruhat order, so every element of `[1, w]^I` is
/// reached.
pub(crate) fn downward_closure(
    group: &WeylGroup,
    w: &WeylElement,
    parabolic: &BTreeSet<usize>,
) -> Vec<WeylElement> {
    let reflections: Vec<WeylElement> = group
        .roots()
        .positive()
        .iter()
        .map(|b| group.reflection(b))
        .collect();
    let mut seen: BTreeSet<WeylElement> = BTreeSet::from([w.clone()]);
    let mut frontier = vec![w.clone()];
    while let Some(v) = frontier.pop() {
        for r in &reflections {
            let u = group.mul(&v, r);
            if u.length() + 1 == v.length()
                && group.is_min_rep(&u, parabolic)
                && seen.insert(u.clone())
            {
                frontier.push(u);
            }
        }
    }
    seen.into_iter().collect()
}
