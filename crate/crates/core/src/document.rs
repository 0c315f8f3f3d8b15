//! JSON form of a Schubert datum.
//!
//! ```json
//! {"labels":["1","2"],"cartan":[[2,-1],[-2,2]],"word":["2","1"],"parabolic":["2"]}
//! ```
//!
//! `word` and `parabolic` may be omitted where only the Cartan matrix
//! matters (root listings). By default the word must be reduced and its
//! product must be a minimal coset representative; with normalization the
//! product is replaced by its minimal representative instead.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cartan::{CartanError, CartanMatrix};
use crate::cohomology::SchubertDatum;
use crate::weyl::{WeylError, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Parse(String),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<String>),
    #[error("word {0:?} is not a minimal coset representative for I = {1:?}")]
    NotMinimal(Vec<String>, Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumDocument {
    pub labels: Vec<String>,
    pub cartan: Vec<Vec<i64>>,
    #[serde(default)]
    pub word: Vec<String>,
    #[serde(default)]
    pub parabolic: Vec<String>,
}

/// A datum read from a document, with a note when normalization changed it.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub datum: SchubertDatum,
    pub warning: Option<String>,
}

impl DatumDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    pub fn cartan_matrix(&self) -> Result<CartanMatrix, DocumentError> {
        Ok(CartanMatrix::new(self.cartan.clone(), &self.labels)?)
    }

    pub fn to_datum(&self, normalize: bool) -> Result<Loaded, DocumentError> {
        let group = Arc::new(WeylGroup::new(self.cartan_matrix()?));
        let letters = group.parse_word(&self.word)?;
        let parabolic = group.parse_word(&self.parabolic)?.0.into_iter().collect();
        let w = group.from_word(letters.letters())?;
        if normalize {
            let min = group.min_rep(&w, &parabolic);
            let word = group.word_labels(&group.reduced_word(&min));
            let warning = (word != self.word)
                .then(|| format!("word {:?} normalized to {:?}", self.word, word));
            let datum = SchubertDatum::new(group, min, parabolic)?;
            return Ok(Loaded { datum, warning });
        }
        if w.length() != letters.len() {
            return Err(DocumentError::NotReduced(self.word.clone()));
        }
        if !group.is_min_rep(&w, &parabolic) {
            return Err(DocumentError::NotMinimal(
                self.word.clone(),
                self.parabolic.clone(),
            ));
        }
        Ok(Loaded {
            datum: SchubertDatum::new(group, w, parabolic)?,
            warning: None,
        })
    }

    /// The document of a datum, with the lexicographically smallest reduced
    /// word of `w`.
    pub fn from_datum(d: &SchubertDatum) -> Self {
        let cartan = d.cartan();
        DatumDocument {
            labels: cartan.labels().iter().map(|l| l.display.clone()).collect(),
            cartan: cartan.entries().to_vec(),
            word: d.group().word_labels(&d.word()),
            parabolic: d
                .parabolic()
                .iter()
                .map(|&s| d.display(s).to_owned())
                .collect(),
        }
    }
}
