//! Recovering the Bruhat order, descents and reduced words from products
//! in cohomology alone.
//!
//! ```bash
//! cargo run --example reconstruct_from_cohomology
//! ```

use std::collections::BTreeSet;

use schubert_iso::{CartanMatrix, SchubertBasis, SchubertDatum};

fn main() {
    let d =
        SchubertDatum::from_labels(CartanMatrix::type_b(3), &["1", "2", "3", "2"], &["1"]).unwrap();
    let basis = SchubertBasis::new(&d).unwrap();
    let poset = basis.reconstruct_poset();
    assert_eq!(poset.leq_matrix(), basis.interval().leq_matrix());
    println!(
        "{} classes; order from products matches Bruhat order",
        basis.len()
    );

    let top = basis.len() - 1;
    let name = |i: usize| basis.key_labels(i).join(" ");
    let descents: Vec<String> = basis
        .class_descents(top)
        .unwrap()
        .iter()
        .map(|t| format!("s{}", t + 1))
        .collect();
    println!("descents of σ[{}]: {}", name(top), descents.join(" "));
    for t in basis.class_descents(top).unwrap() {
        let u = basis.max_below(top, t).unwrap();
        println!(
            "  largest class below avoiding σ[s{}]: σ[{}]",
            t + 1,
            name(u)
        );
    }

    for g in basis.degree_two_generators() {
        let sub = basis.subring_support(&BTreeSet::from([g])).unwrap();
        println!(
            "without σ[s{}] the subring reaches {} classes",
            g + 1,
            sub.len()
        );
    }

    for word in basis.class_reduced_words(top).unwrap() {
        let labels: Vec<String> = word
            .letters()
            .iter()
            .map(|&s| format!("σ{}", s + 1))
            .collect();
        println!("  {}", labels.join(" "));
    }
}
