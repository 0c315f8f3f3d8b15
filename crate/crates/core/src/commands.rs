//! The logic behind the `schubert` binary. Each command returns its output
//! and exit code instead of printing, so it can be driven from tests.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use crate::atlas::{self, Atlas};
use crate::cohomology::{SchubertBasis, SchubertClass, SchubertDatum};
use crate::document::DatumDocument;
use crate::isoclass::{check_iso_with_cap, IsoVerdict, VerdictKind};
use crate::weyl::{WeylGroup, DEFAULT_WORD_CAP};
use crate::Error;

/// Exit code for errors; 0, 1 and 2 are verdicts.
pub const EXIT_ERROR: i32 = 3;

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub json: bool,
    pub normalize: bool,
    pub cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            json: false,
            normalize: false,
            cap: DEFAULT_WORD_CAP,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String, warnings: Vec<String>) -> Self {
        Output {
            stdout,
            warnings,
            code: 0,
        }
    }
}

fn read_document(path: &Path) -> Result<DatumDocument, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(path.display().to_string(), e))?;
    Ok(DatumDocument::parse(&text)?)
}

/// Reads a datum file, applying normalization when requested.
pub fn load(path: &Path, opts: &Options) -> Result<(SchubertDatum, Vec<String>), Error> {
    let loaded = read_document(path)?.to_datum(opts.normalize)?;
    let warnings = loaded
        .warning
        .map(|w| format!("{}: {w}", path.display()))
        .into_iter()
        .collect();
    Ok((loaded.datum, warnings))
}

fn describe(type_name: &str, d: &SchubertDatum) -> String {
    let word: String = d
        .group()
        .word_labels(&d.word())
        .iter()
        .map(|l| format!("s{l}"))
        .collect();
    let word = if word.is_empty() {
        "1".to_owned()
    } else {
        word
    };
    let parabolic: Vec<String> = d
        .parabolic()
        .iter()
        .map(|&s| format!("s{}", d.display(s)))
        .collect();
    let parabolic = if parabolic.is_empty() {
        "∅".to_owned()
    } else {
        format!("{{{}}}", parabolic.join(","))
    };
    format!("({type_name}, {word}, {parabolic})")
}

pub fn cmd_check(a: &Path, b: &Path, opts: &Options) -> Result<Output, Error> {
    let (d, mut warnings) = load(a, opts)?;
    let (e, more) = load(b, opts)?;
    warnings.extend(more);
    let verdict = check_iso_with_cap(&d, &e, opts.cap)?;
    let body = verdict.to_json();
    let stdout = if opts.json {
        format!("{body}\n")
    } else {
        format!(
            "{}\n",
            serde_json::to_string_pretty(&body).expect("plain JSON")
        )
    };
    let code = match verdict.kind() {
        VerdictKind::Isomorphic => 0,
        VerdictKind::NotIsomorphic => 1,
        VerdictKind::Unknown => 2,
    };
    Ok(Output {
        stdout,
        warnings,
        code,
    })
}

/// Re-checks every pair of an atlas and every certificate it holds.
fn reverify(atlas: &Atlas, cap: usize) -> Result<(), Error> {
    for (i, ri) in atlas.records.iter().enumerate() {
        for (j, rj) in atlas.records.iter().enumerate() {
            let again = check_iso_with_cap(&ri.datum, &rj.datum, cap)?;
            let stored = &atlas.classification.verdicts[i][j];
            if again.kind() != stored.kind() {
                return Err(Error::Usage(format!(
                    "verdict for ({i}, {j}) changed on re-check"
                )));
            }
            if let IsoVerdict::Isomorphic(c) = stored {
                c.verify(&ri.datum, &rj.datum)
                    .map_err(|e| Error::Usage(format!("({i}, {j}): {e}")))?;
            }
        }
    }
    Ok(())
}

pub fn cmd_surfaces(verify: bool, opts: &Options) -> Result<Output, Error> {
    let atlas = atlas::surface_atlas()?;
    if verify {
        reverify(&atlas, opts.cap)?;
    }
    if opts.json {
        return Ok(Output::ok(atlas.to_jsonl(), Vec::new()));
    }
    let mut out = String::new();
    writeln!(
        out,
        "# Schubert surfaces: {} data, {} classes",
        atlas.records.len(),
        atlas.class_count()
    )
    .unwrap();
    for class in &atlas.classification.classes {
        let label = atlas.records[class[0]]
            .class_label
            .map_or("?", |l| l.name());
        let members: Vec<String> = class
            .iter()
            .map(|&i| describe(&atlas.records[i].type_name, &atlas.records[i].datum))
            .collect();
        writeln!(out, "{label:<14} {:>2}  {}", class.len(), members.join(" ")).unwrap();
    }
    if verify {
        writeln!(out, "# all pairwise verdicts re-checked").unwrap();
    }
    Ok(Output::ok(out, Vec::new()))
}

fn parse_element(basis: &SchubertBasis, element: &str) -> Result<usize, Error> {
    let labels: Vec<&str> = element
        .split(',')
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    let v = basis.datum().group().from_labels(&labels)?;
    Ok(basis.index_of(&v)?)
}

pub fn cmd_cohomology(
    file: &Path,
    generator: Option<&str>,
    element: Option<&str>,
    opts: &Options,
) -> Result<Output, Error> {
    let (d, warnings) = load(file, opts)?;
    let basis = SchubertBasis::new(&d)?;
    let generators: Vec<usize> = match generator {
        Some(g) => vec![d.cartan().index_of(g)?],
        None => basis.degree_two_generators().collect(),
    };
    let elements: Vec<usize> = match element {
        Some(e) => vec![parse_element(&basis, e)?],
        None => (0..basis.len()).collect(),
    };
    let mut products: Vec<(usize, usize, SchubertClass)> = Vec::new();
    for &s in &generators {
        for &v in &elements {
            products.push((s, v, basis.chevalley(s, v)?));
        }
    }
    let mut out = String::new();
    if opts.json {
        let rows: Vec<Value> = products
            .iter()
            .map(|(s, v, c)| {
                json!({
                    "generator": d.display(*s),
                    "element": basis.key_labels(*v),
                    "product": basis.class_to_json(c),
                })
            })
            .collect();
        let body = if rows.len() == 1 {
            rows[0].clone()
        } else {
            Value::Array(rows)
        };
        writeln!(out, "{body}").unwrap();
    } else if products.len() == 1 {
        writeln!(out, "{}", basis.format_class(&products[0].2)).unwrap();
    } else {
        for (s, v, c) in &products {
            let key = basis.format_class(&SchubertClass::basis_element(*v));
            writeln!(
                out,
                "σ[s{}] · {key} = {}",
                d.display(*s),
                basis.format_class(c)
            )
            .unwrap();
        }
    }
    Ok(Output::ok(out, warnings))
}

pub fn cmd_interval(file: &Path, opts: &Options) -> Result<Output, Error> {
    let (d, warnings) = load(file, opts)?;
    let g = d.group();
    let interval = g.interval(d.w(), d.parabolic())?;
    let words: Vec<Vec<String>> = interval
        .elements()
        .iter()
        .map(|v| g.word_labels(&g.reduced_word(v)))
        .collect();
    let covers = |j: usize| -> Vec<usize> {
        (0..interval.len())
            .filter(|&i| interval.leq(i, j) && interval.length(i) + 1 == interval.length(j))
            .collect()
    };
    let mut out = String::new();
    if opts.json {
        let elements: Vec<Value> = (0..interval.len())
            .map(|j| json!({"word": words[j], "length": interval.length(j), "covers": covers(j)}))
            .collect();
        let body = json!({
            "top": g.word_labels(&d.word()),
            "parabolic": DatumDocument::from_datum(&d).parabolic,
            "elements": elements,
            "rank_sizes": interval.rank_sizes(),
        });
        writeln!(out, "{body}").unwrap();
    } else {
        writeln!(out, "{:>4}  {:>6}  {:<20}  covers", "idx", "length", "word").unwrap();
        for j in 0..interval.len() {
            let word = if words[j].is_empty() {
                "1".to_owned()
            } else {
                words[j].join(" ")
            };
            let below: Vec<String> = covers(j).iter().map(|i| i.to_string()).collect();
            writeln!(
                out,
                "{j:>4}  {:>6}  {word:<20}  {}",
                interval.length(j),
                below.join(",")
            )
            .unwrap();
        }
    }
    Ok(Output::ok(out, warnings))
}

pub fn cmd_enumerate(
    max_rank: usize,
    max_length: usize,
    classify: bool,
    opts: &Options,
) -> Result<Output, Error> {
    if classify {
        let atlas = atlas::atlas(max_rank, max_length, opts.cap)?;
        if opts.json {
            return Ok(Output::ok(atlas.to_jsonl(), Vec::new()));
        }
        let mut out = String::new();
        writeln!(
            out,
            "# max_rank={max_rank} max_length={max_length}: {} data, {} classes, {} undecided pairs",
            atlas.records.len(),
            atlas.class_count(),
            atlas.classification.unknown_pairs.len()
        )
        .unwrap();
        for (k, class) in atlas.classification.classes.iter().enumerate() {
            let members: Vec<String> = class
                .iter()
                .map(|&i| describe(&atlas.records[i].type_name, &atlas.records[i].datum))
                .collect();
            writeln!(out, "{k:>4}  {}", members.join(" ")).unwrap();
        }
        return Ok(Output::ok(out, Vec::new()));
    }
    let entries = atlas::enumerate(max_rank, max_length)?;
    let mut out = String::new();
    if opts.json {
        let header = json!({
            "tool": env!("CARGO_PKG_NAME"),
            "version": env!("CARGO_PKG_VERSION"),
            "params": {"max_rank": max_rank, "max_length": max_length},
        });
        writeln!(out, "{header}").unwrap();
        for (id, e) in entries.iter().enumerate() {
            let rec = json!({
                "id": id,
                "type": e.type_name,
                "datum": DatumDocument::from_datum(&e.datum),
                "dimension": e.datum.dimension(),
            });
            writeln!(out, "{rec}").unwrap();
        }
    } else {
        writeln!(
            out,
            "# max_rank={max_rank} max_length={max_length}: {} data",
            entries.len()
        )
        .unwrap();
        for (id, e) in entries.iter().enumerate() {
            writeln!(
                out,
                "{id:>6}  {:>3}  {}",
                e.datum.dimension(),
                describe(&e.type_name, &e.datum)
            )
            .unwrap();
        }
    }
    Ok(Output::ok(out, Vec::new()))
}

pub fn cmd_roots(file: &Path, opts: &Options) -> Result<Output, Error> {
    let doc = read_document(file)?;
    let group = WeylGroup::new(doc.cartan_matrix()?);
    let roots = group.roots().positive();
    let mut out = String::new();
    if opts.json {
        writeln!(out, "{}", serde_json::to_string(roots).expect("plain data")).unwrap();
    } else {
        writeln!(out, "{:>6}  {:<16}  coroot", "height", "root").unwrap();
        for r in roots {
            writeln!(
                out,
                "{:>6}  {:<16}  {:?}",
                r.height(),
                format!("{:?}", r.root),
                r.coroot
            )
            .unwrap();
        }
    }
    Ok(Output::ok(out, Vec::new()))
}
