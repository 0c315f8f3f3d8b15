//! Enumeration of Schubert data at small rank and length, classification
//! into isomorphism classes, and the named atlas of Schubert surfaces.

use std::collections::BTreeSet;
use std::io::{self, Write};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cartan::CartanMatrix;
use crate::cohomology::SchubertDatum;
use crate::document::DatumDocument;
use crate::isoclass::{check_iso_with_cap, IsoError, IsoVerdict, VerdictKind};
use crate::weyl::{WeylGroup, DEFAULT_WORD_CAP};

pub const MAX_RANK: usize = 4;
pub const MAX_LENGTH: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtlasError {
    #[error("enumeration limited to rank ≤ {MAX_RANK} and length ≤ {MAX_LENGTH}, got rank {0} and length {1}")]
    LimitExceeded(usize, usize),
    #[error(transparent)]
    Iso(#[from] IsoError),
    #[error("surface atlas mismatch: {0}")]
    AtlasMismatch(String),
}

/// One representative finite-type Cartan matrix for each isomorphism type
/// of rank `1..=max_rank`, irreducible or not.
pub fn catalogue(max_rank: usize) -> Vec<(String, CartanMatrix)> {
    let mut irreducible: Vec<Vec<(&str, CartanMatrix)>> = vec![Vec::new(); 5];
    irreducible[1].push(("A1", CartanMatrix::type_a(1)));
    irreducible[2].push(("A2", CartanMatrix::m(1)));
    irreducible[2].push(("B2", CartanMatrix::m(2)));
    irreducible[2].push(("G2", CartanMatrix::m(3)));
    irreducible[3].push(("A3", CartanMatrix::type_a(3)));
    irreducible[3].push(("B3", CartanMatrix::type_b(3)));
    irreducible[3].push(("C3", CartanMatrix::type_c(3)));
    irreducible[4].push(("A4", CartanMatrix::type_a(4)));
    irreducible[4].push(("B4", CartanMatrix::type_b(4)));
    irreducible[4].push(("C4", CartanMatrix::type_c(4)));
    irreducible[4].push(("D4", CartanMatrix::type_d(4)));
    irreducible[4].push(("F4", CartanMatrix::type_f4()));

    // factors as (rank, position) pairs, nonincreasing so each product appears once
    let factors: Vec<(usize, usize)> = (1..=4)
        .rev()
        .flat_map(|r| (0..irreducible[r].len()).map(move |i| (r, i)))
        .collect();
    let mut out = Vec::new();
    for rank in 1..=max_rank.min(MAX_RANK) {
        let mut partial = Vec::new();
        products(&factors, 0, rank, &mut partial, &mut |parts: &[(
            usize,
            usize,
        )]| {
            let mut names = Vec::new();
            let mut matrix: Option<CartanMatrix> = None;
            for &(r, i) in parts {
                let (name, m) = &irreducible[r][i];
                names.push(*name);
                matrix = Some(match matrix {
                    None => m.clone(),
                    Some(acc) => acc.product(m),
                });
            }
            let name = if names.len() == 2 && names[0] == "A1" && names[1] == "A1" {
                "2I2".to_owned()
            } else {
                names.join("x")
            };
            out.push((name, matrix.unwrap()));
        });
    }
    out
}

fn products(
    factors: &[(usize, usize)],
    from: usize,
    remaining: usize,
    partial: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[(usize, usize)]),
) {
    if remaining == 0 {
        emit(partial);
        return;
    }
    for k in from..factors.len() {
        let (r, _) = factors[k];
        if r <= remaining {
            partial.push(factors[k]);
            products(factors, k, remaining - r, partial, emit);
            partial.pop();
        }
    }
}

/// A datum together with the name of its Cartan type.
#[derive(Debug, Clone)]
pub struct Entry {
    pub type_name: String,
    pub datum: SchubertDatum,
}

/// Every `(A, w, I)` with `A` in the catalogue, `w` fully supported,
/// `ℓ(w) ≤ max_length` and `w ∈ W^I`. Data are not merged under node
/// relabeling, so a symmetric matrix contributes each of its mirror data.
pub fn enumerate(max_rank: usize, max_length: usize) -> Result<Vec<Entry>, AtlasError> {
    if max_rank > MAX_RANK || max_length > MAX_LENGTH {
        return Err(AtlasError::LimitExceeded(max_rank, max_length));
    }
    let mut out = Vec::new();
    for (type_name, cartan) in catalogue(max_rank) {
        let n = cartan.rank();
        let group = Arc::new(WeylGroup::new(cartan));
        let mut elements: Vec<_> = group
            .elements_by_length(max_length, usize::MAX)
            .expect("unbounded")
            .into_iter()
            .filter(|w| group.support(w).len() == n)
            .map(|w| (w.length(), group.reduced_word(&w), w))
            .collect();
        elements.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        for (_, _, w) in elements {
            let mut subsets: Vec<BTreeSet<usize>> = (0u32..1 << n)
                .map(|mask| {
                    (0..n)
                        .filter(|s| mask >> s & 1 == 1)
                        .collect::<BTreeSet<usize>>()
                })
                .filter(|parabolic| group.is_min_rep(&w, parabolic))
                .collect();
            subsets.sort_by_key(|p| (p.len(), p.iter().copied().collect::<Vec<_>>()));
            for parabolic in subsets {
                let datum = SchubertDatum::new(group.clone(), w.clone(), parabolic)
                    .expect("filtered to minimal representatives");
                out.push(Entry {
                    type_name: type_name.clone(),
                    datum,
                });
            }
        }
    }
    Ok(out)
}

/// Partition of a list of data into isomorphism classes, with the full
/// matrix of pairwise verdicts.
#[derive(Debug, Clone)]
pub struct Classification {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub verdicts: Vec<Vec<IsoVerdict>>,
    pub unknown_pairs: Vec<(usize, usize)>,
}

impl Classification {
    pub fn kind(&self, i: usize, j: usize) -> VerdictKind {
        self.verdicts[i][j].kind()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            cur = std::mem::replace(&mut self.0[cur], root);
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // smaller index becomes the root so class numbering follows input order
        if ra < rb {
            self.0[rb] = ra;
        } else if rb < ra {
            self.0[ra] = rb;
        }
    }
}

/// Classes are the components of the Isomorphic relation. Unknown pairs
/// are listed and never merged.
pub fn classify(data: &[SchubertDatum]) -> Result<Classification, AtlasError> {
    classify_with_cap(data, DEFAULT_WORD_CAP)
}

pub fn classify_with_cap(data: &[SchubertDatum], cap: usize) -> Result<Classification, AtlasError> {
    let n = data.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let computed: Vec<((usize, usize), IsoVerdict)> = pairs
        .into_par_iter()
        .map(|(i, j)| Ok(((i, j), check_iso_with_cap(&data[i], &data[j], cap)?)))
        .collect::<Result<_, IsoError>>()?;

    let mut verdicts: Vec<Vec<Option<IsoVerdict>>> = vec![vec![None; n]; n];
    let mut uf = UnionFind((0..n).collect());
    let mut unknown_pairs = Vec::new();
    for ((i, j), v) in computed {
        match v.kind() {
            VerdictKind::Isomorphic => uf.union(i, j),
            VerdictKind::Unknown => unknown_pairs.push((i, j)),
            VerdictKind::NotIsomorphic => {}
        }
        if i != j {
            verdicts[j][i] = Some(v.clone().swapped());
        }
        verdicts[i][j] = Some(v);
    }
    unknown_pairs.sort_unstable();

    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![usize::MAX; n];
    let mut root_class = vec![usize::MAX; n];
    for i in 0..n {
        let r = uf.find(i);
        if root_class[r] == usize::MAX {
            root_class[r] = classes.len();
            classes.push(Vec::new());
        }
        class_of[i] = root_class[r];
        classes[root_class[r]].push(i);
    }
    let verdicts = verdicts
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| v.expect("every pair computed"))
                .collect()
        })
        .collect();
    Ok(Classification {
        classes,
        class_of,
        verdicts,
        unknown_pairs,
    })
}

/// Names of the seven isomorphism classes of Schubert surfaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SurfaceLabel {
    P1xP1,
    P2,
    Sigma1,
    Sigma2,
    Sigma3,
    ConeOverConic,
    G2Exceptional,
}

impl SurfaceLabel {
    pub const ALL: [SurfaceLabel; 7] = [
        SurfaceLabel::P1xP1,
        SurfaceLabel::P2,
        SurfaceLabel::Sigma1,
        SurfaceLabel::Sigma2,
        SurfaceLabel::Sigma3,
        SurfaceLabel::ConeOverConic,
        SurfaceLabel::G2Exceptional,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SurfaceLabel::P1xP1 => "P1xP1",
            SurfaceLabel::P2 => "P2",
            SurfaceLabel::Sigma1 => "Sigma1",
            SurfaceLabel::Sigma2 => "Sigma2",
            SurfaceLabel::Sigma3 => "Sigma3",
            SurfaceLabel::ConeOverConic => "ConeOverConic",
            SurfaceLabel::G2Exceptional => "G2Exceptional",
        }
    }

    /// The surfaces known to lie in this class, as `(A, word, I)`.
    pub fn expected_members(&self) -> Vec<SchubertDatum> {
        let d = |a: CartanMatrix, w: [&str; 2], i: &[&str]| {
            SchubertDatum::from_labels(a, &w, i).expect("valid surface")
        };
        let none: &[&str] = &[];
        match self {
            SurfaceLabel::P1xP1 => vec![d(CartanMatrix::two_i2(), ["1", "2"], none)],
            SurfaceLabel::Sigma1 => {
                let mut v: Vec<_> = (1..=3)
                    .map(|n| d(CartanMatrix::m(n), ["1", "2"], none))
                    .collect();
                v.push(d(CartanMatrix::m(1), ["2", "1"], none));
                v
            }
            SurfaceLabel::Sigma2 => vec![d(CartanMatrix::m(2), ["2", "1"], none)],
            SurfaceLabel::Sigma3 => vec![d(CartanMatrix::m(3), ["2", "1"], none)],
            SurfaceLabel::P2 => {
                let mut v: Vec<_> = (1..=3)
                    .map(|n| d(CartanMatrix::m(n), ["1", "2"], &["1"]))
                    .collect();
                v.push(d(CartanMatrix::m(1), ["2", "1"], &["2"]));
                v
            }
            SurfaceLabel::ConeOverConic => vec![d(CartanMatrix::m(2), ["2", "1"], &["2"])],
            SurfaceLabel::G2Exceptional => vec![d(CartanMatrix::m(3), ["2", "1"], &["2"])],
        }
    }
}

/// A classified datum, as written to the atlas.
#[derive(Debug, Clone)]
pub struct AtlasRecord {
    pub id: usize,
    pub type_name: String,
    pub datum: SchubertDatum,
    pub class_id: usize,
    pub class_label: Option<SurfaceLabel>,
    pub verdicts: Vec<(usize, IsoVerdict)>,
}

impl AtlasRecord {
    pub fn to_json(&self) -> Value {
        let verdicts: Vec<Value> = self
            .verdicts
            .iter()
            .map(|(other, v)| {
                let mut j = json!({"other": other, "verdict": v.kind().tag()});
                if let IsoVerdict::NotIsomorphic(w) = v {
                    j["witness"] = json!(w.tag());
                }
                j
            })
            .collect();
        json!({
            "id": self.id,
            "type": self.type_name,
            "datum": DatumDocument::from_datum(&self.datum),
            "dimension": self.datum.dimension(),
            "class_id": self.class_id,
            "class_label": self.class_label.map(|l| l.name()),
            "verdicts": verdicts,
        })
    }
}

/// Classified data with records ready for output.
#[derive(Debug, Clone)]
pub struct Atlas {
    pub params: Value,
    pub records: Vec<AtlasRecord>,
    pub classification: Classification,
}

impl Atlas {
    pub fn class_count(&self) -> usize {
        self.classification.classes.len()
    }

    /// Header line followed by one record per line.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> io::Result<()> {
        let header = json!({
            "tool": env!("CARGO_PKG_NAME"),
            "version": env!("CARGO_PKG_VERSION"),
            "params": self.params,
        });
        writeln!(out, "{header}")?;
        for r in &self.records {
            writeln!(out, "{}", r.to_json())?;
        }
        Ok(())
    }

    pub fn to_jsonl(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("JSON is UTF-8")
    }
}

fn build(entries: Vec<Entry>, params: Value, cap: usize) -> Result<Atlas, AtlasError> {
    let data: Vec<SchubertDatum> = entries.iter().map(|e| e.datum.clone()).collect();
    let classification = classify_with_cap(&data, cap)?;
    let records = entries
        .into_iter()
        .enumerate()
        .map(|(id, e)| AtlasRecord {
            id,
            type_name: e.type_name,
            datum: e.datum,
            class_id: classification.class_of[id],
            class_label: None,
            verdicts: (0..data.len())
                .filter(|&j| j != id)
                .map(|j| (j, classification.verdicts[id][j].clone()))
                .collect(),
        })
        .collect();
    Ok(Atlas {
        params,
        records,
        classification,
    })
}

/// Enumerates and classifies every datum within the limits.
pub fn atlas(max_rank: usize, max_length: usize, cap: usize) -> Result<Atlas, AtlasError> {
    let entries = enumerate(max_rank, max_length)?;
    let params = json!({"max_rank": max_rank, "max_length": max_length, "cap": cap});
    build(entries, params, cap)
}

/// The thirteen Schubert surfaces of rank two, classified and named. Fails
/// unless the classes are exactly the seven expected ones.
pub fn surface_atlas() -> Result<Atlas, AtlasError> {
    let entries: Vec<Entry> = enumerate(2, 2)?
        .into_iter()
        .filter(|e| e.datum.dimension() == 2)
        .collect();
    let params = json!({"max_rank": 2, "max_length": 2, "dimension": 2});
    let mut atlas = build(entries, params, DEFAULT_WORD_CAP)?;

    if atlas.records.len() != 13 {
        return Err(AtlasError::AtlasMismatch(format!(
            "{} surfaces, expected 13",
            atlas.records.len()
        )));
    }
    if atlas.class_count() != 7 {
        return Err(AtlasError::AtlasMismatch(format!(
            "{} classes, expected 7",
            atlas.class_count()
        )));
    }
    if let Some(&(i, j)) = atlas.classification.unknown_pairs.first() {
        return Err(AtlasError::AtlasMismatch(format!(
            "undecided pair ({i}, {j})"
        )));
    }
    for label in SurfaceLabel::ALL {
        let expected = label.expected_members();
        let first = atlas
            .records
            .iter()
            .find(|r| r.datum == expected[0])
            .ok_or_else(|| {
                AtlasError::AtlasMismatch(format!("{} representative missing", label.name()))
            })?;
        let class = first.class_id;
        let members: Vec<usize> = atlas.classification.classes[class].clone();
        let same = members.len() == expected.len()
            && expected
                .iter()
                .all(|d| members.iter().any(|&m| atlas.records[m].datum == *d));
        if !same {
            return Err(AtlasError::AtlasMismatch(format!(
                "class {} has members {members:?}",
                label.name()
            )));
        }
        for m in members {
            if atlas.records[m].class_label.replace(label).is_some() {
                return Err(AtlasError::AtlasMismatch(format!(
                    "class {class} named twice"
                )));
            }
        }
    }
    Ok(atlas)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_sizes() {
        let names = |r| catalogue(r).into_iter().map(|(n, _)| n).collect::<Vec<_>>();
        assert_eq!(names(1), ["A1"]);
        assert_eq!(names(2), ["A1", "A2", "B2", "G2", "2I2"]);
        let three: Vec<_> = catalogue(3)
            .into_iter()
            .filter(|(_, m)| m.rank() == 3)
            .collect();
        assert_eq!(three.len(), 7);
        let four: Vec<_> = catalogue(4)
            .into_iter()
            .filter(|(_, m)| m.rank() == 4)
            .collect();
        // 5 irreducible, 3 of shape 3+1, 6 of shape 2+2, 3 of shape 2+1+1, one 1+1+1+1
        assert_eq!(four.len(), 18);
    }

    #[test]
    fn enumerate_examples() {
        let one = enumerate(1, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].datum.dimension(), 1);
        assert!(one[0].datum.parabolic().is_empty());
        assert!(enumerate(2, 0).unwrap().is_empty());
        let surfaces = enumerate(2, 2).unwrap();
        assert_eq!(surfaces.len(), 14);
        assert_eq!(
            surfaces.iter().filter(|e| e.datum.dimension() == 2).count(),
            13
        );
        assert_eq!(
            enumerate(5, 2).unwrap_err(),
            AtlasError::LimitExceeded(5, 2)
        );
        assert_eq!(
            enumerate(2, 9).unwrap_err(),
            AtlasError::LimitExceeded(2, 9)
        );
    }

    #[test]
    fn classify_single() {
        let d = enumerate(1, 1).unwrap().remove(0).datum;
        let c = classify(&[d]).unwrap();
        assert_eq!(c.classes, vec![vec![0]]);
    }

    #[test]
    fn surfaces_have_seven_named_classes() {
        let atlas = surface_atlas().unwrap();
        assert_eq!(atlas.class_count(), 7);
        let label_of = |a: CartanMatrix, w: [&str; 2], i: &[&str]| {
            let d = SchubertDatum::from_labels(a, &w, i).unwrap();
            atlas
                .records
                .iter()
                .find(|r| r.datum == d)
                .unwrap()
                .class_label
                .unwrap()
        };
        assert_eq!(
            label_of(CartanMatrix::m(2), ["1", "2"], &[]),
            SurfaceLabel::Sigma1
        );
        assert_eq!(
            label_of(CartanMatrix::m(1), ["2", "1"], &[]),
            SurfaceLabel::Sigma1
        );
        assert_eq!(
            label_of(CartanMatrix::m(3), ["2", "1"], &["2"]),
            SurfaceLabel::G2Exceptional
        );
    }

    #[test]
    fn jsonl_is_stable() {
        let a = surface_atlas().unwrap().to_jsonl();
        let b = surface_atlas().unwrap().to_jsonl();
        assert_eq!(a, b);
        assert_eq!(a.lines().count(), 14);
        let header: Value = serde_json::from_str(a.lines().next().unwrap()).unwrap();
        assert_eq!(header["tool"], "schubert-iso");
    }
}
