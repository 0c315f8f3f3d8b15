//! The seven isomorphism classes of Schubert surfaces.
//!
//! ```bash
//! cargo run --example surface_atlas
//! ```

use schubert_iso::surface_atlas;

fn main() {
    let atlas = surface_atlas().expect("surfaces classify as expected");
    for class in &atlas.classification.classes {
        let label = atlas.records[class[0]].class_label.unwrap();
        println!("{}:", label.name());
        for &i in class {
            let r = &atlas.records[i];
            let word: String = r
                .datum
                .group()
                .word_labels(&r.datum.word())
                .iter()
                .map(|l| format!("s{l}"))
                .collect();
            let parabolic: Vec<&str> = r
                .datum
                .parabolic()
                .iter()
                .map(|&s| r.datum.display(s))
                .collect();
            println!("  {:<4} w = {word:<6} I = {parabolic:?}", r.type_name);
        }
    }
    println!("{}", atlas.to_jsonl().lines().next().unwrap());
}
