//! Positive roots, reduced words and Bruhat order in `B3`.
//!
//! ```bash
//! cargo run --example roots_and_words
//! ```

use schubert_iso::{CartanMatrix, WeylGroup};

fn main() {
    let g = WeylGroup::new(CartanMatrix::type_b(3));
    println!(
        "B3: {} positive roots, {} elements",
        g.roots().positive().len(),
        g.elements().len()
    );
    for r in g.roots().positive() {
        println!("  root {:?}  coroot {:?}", r.root, r.coroot);
    }

    let w = g.from_labels(&["1", "3", "2", "1"]).unwrap();
    let words = g.reduced_words(&w, 100).unwrap();
    println!(
        "s1 s3 s2 s1 has length {} and {} reduced words:",
        w.length(),
        words.len()
    );
    for word in &words {
        println!("  {}", g.word_labels(word).join(" "));
    }

    let u = g.from_labels(&["1", "3"]).unwrap();
    let v = g.from_labels(&["2", "3", "2"]).unwrap();
    println!("s1 s3 <= w: {}", g.bruhat_leq(&u, &w));
    println!("s2 s3 s2 <= w: {}", g.bruhat_leq(&v, &w));

    let w0 = g.longest_element();
    println!(
        "w0 = {} (length {})",
        g.word_labels(&g.reduced_word(&w0)).join(" "),
        w0.length()
    );
}
