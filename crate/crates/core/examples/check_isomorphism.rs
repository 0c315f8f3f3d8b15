//! Deciding isomorphism, with certificates and witnesses.
//!
//! ```bash
//! cargo run --example check_isomorphism
//! ```

use schubert_iso::{check_iso, CartanMatrix, SchubertDatum};

fn main() {
    let a4 =
        SchubertDatum::from_labels(CartanMatrix::type_a(4), &["4", "3", "2", "1"], &["4"]).unwrap();
    let b4 =
        SchubertDatum::from_labels(CartanMatrix::type_b(4), &["1", "2", "3", "4"], &["1"]).unwrap();
    let f4 =
        SchubertDatum::from_labels(CartanMatrix::type_f4(), &["1", "2", "3", "4"], &["1"]).unwrap();

    let ab = check_iso(&a4, &b4).unwrap();
    println!("A4 vs B4: {}", ab.to_json());
    let cert = ab.certificate().unwrap();
    cert.verify(&a4, &b4).unwrap();

    let bf = check_iso(&b4, &f4).unwrap();
    let af = cert.compose(bf.certificate().unwrap()).unwrap();
    af.verify(&a4, &f4).unwrap();
    println!("composed A4 -> F4: {:?}", af.pairs);

    for n in [2, 3] {
        let cone = SchubertDatum::from_labels(CartanMatrix::m(1), &["2", "1"], &["2"]).unwrap();
        let other = SchubertDatum::from_labels(CartanMatrix::m(n), &["2", "1"], &["2"]).unwrap();
        println!(
            "M1 vs M{n}: {}",
            check_iso(&cone, &other).unwrap().to_json()
        );
    }

    // two parabolic nodes in the support on both sides and no bijection
    let d =
        SchubertDatum::from_labels(CartanMatrix::type_a(3), &["1", "3", "2"], &["1", "3"]).unwrap();
    let e =
        SchubertDatum::from_labels(CartanMatrix::type_b(3), &["1", "3", "2"], &["1", "3"]).unwrap();
    println!("A3 vs B3: {}", check_iso(&d, &e).unwrap().to_json());
}
