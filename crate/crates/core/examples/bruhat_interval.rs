//! The interval `[1, w]^I` in a parabolic quotient, with its rank sizes.
//!
//! ```bash
//! cargo run --example bruhat_interval
//! ```

use std::collections::BTreeSet;

use schubert_iso::{CartanMatrix, WeylGroup};

fn main() {
    let g = WeylGroup::new(CartanMatrix::type_f4());
    let w = g.from_labels(&["1", "2", "3", "4"]).unwrap();
    let parabolic = BTreeSet::from([0]);
    let interval = g.interval(&w, &parabolic).unwrap();

    println!("[1, s1 s2 s3 s4]^{{s1}} in F4: {} elements", interval.len());
    for (i, v) in interval.elements().iter().enumerate() {
        let word = g.word_labels(&g.reduced_word(v));
        let below: Vec<usize> = (0..interval.len())
            .filter(|&j| interval.leq(j, i) && interval.length(j) + 1 == interval.length(i))
            .collect();
        println!(
            "  {i:>2}  {:<12} covers {below:?}",
            if word.is_empty() {
                "1".into()
            } else {
                word.join(" ")
            }
        );
    }
    println!("rank sizes {:?}", interval.rank_sizes());

    // the same w is not a minimal representative for I = {s4}
    println!("{:?}", g.interval(&w, &BTreeSet::from([3])).unwrap_err());
}
