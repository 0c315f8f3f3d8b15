//! Enumerating and classifying all fully supported data in rank three up
//! to dimension three, in parallel.
//!
//! ```bash
//! cargo run --release --example enumerate_and_classify
//! ```

use std::collections::BTreeMap;

use schubert_iso::atlas::atlas;
use schubert_iso::weyl::DEFAULT_WORD_CAP;

fn main() {
    let atlas = atlas(3, 3, DEFAULT_WORD_CAP).unwrap();
    let c = &atlas.classification;
    println!(
        "{} data, {} classes, {} undecided pairs",
        atlas.records.len(),
        c.classes.len(),
        c.unknown_pairs.len()
    );

    let mut by_dimension: BTreeMap<usize, usize> = BTreeMap::new();
    for class in &c.classes {
        *by_dimension
            .entry(atlas.records[class[0]].datum.dimension())
            .or_default() += 1;
    }
    println!("classes per dimension: {by_dimension:?}");

    for &(i, j) in c.unknown_pairs.iter().take(5) {
        println!(
            "undecided: {} vs {}",
            atlas.records[i].type_name, atlas.records[j].type_name
        );
    }
}
