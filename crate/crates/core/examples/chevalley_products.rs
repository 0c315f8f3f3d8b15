//! Products of Schubert classes by degree-two classes.
//!
//! ```bash
//! cargo run --example chevalley_products
//! ```

use schubert_iso::{CartanMatrix, SchubertBasis, SchubertClass, SchubertDatum};

fn main() {
    // the cone over a conic: X(s2 s1, B2, {s2})
    let d = SchubertDatum::from_labels(CartanMatrix::m(2), &["2", "1"], &["2"]).unwrap();
    let basis = SchubertBasis::new(&d).unwrap();
    let s1 = basis.sigma(0).unwrap();
    let square = basis.chevalley(0, s1).unwrap();
    println!("σ[s1]^2 = {}", basis.format_class(&square));
    println!("as JSON: {}", basis.class_to_json(&square));

    // full flag variety of type G2
    let d = SchubertDatum::from_labels(
        CartanMatrix::m(3),
        &["1", "2", "1", "2", "1", "2"],
        &[] as &[&str],
    )
    .unwrap();
    let basis = SchubertBasis::new(&d).unwrap();
    println!("G2 has {} Schubert classes", basis.len());
    for s in [0, 1] {
        let mut c = SchubertClass::basis_element(0);
        for k in 1..=d.dimension() {
            c = basis.multiply(s, &c).unwrap();
            println!("σ[s{}]^{k} = {}", s + 1, basis.format_class(&c));
        }
    }
}
