//! Reading and writing data as JSON documents.
//!
//! ```bash
//! cargo run --example documents
//! ```

use schubert_iso::DatumDocument;

fn main() {
    let text =
        r#"{"labels":["a","b"],"cartan":[[2,-1],[-3,2]],"word":["b","a","b"],"parabolic":["b"]}"#;
    let doc = DatumDocument::parse(text).unwrap();

    match doc.to_datum(false) {
        Ok(_) => unreachable!(),
        Err(e) => println!("strict: {e}"),
    }
    let loaded = doc.to_datum(true).unwrap();
    println!("normalized: {}", loaded.warning.unwrap());
    println!("dimension {}", loaded.datum.dimension());
    println!("{}", DatumDocument::from_datum(&loaded.datum).to_json());
}
