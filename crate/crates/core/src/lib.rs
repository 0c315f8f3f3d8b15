//! Isomorphism classification of Schubert varieties `X(w, A, I)` from
//! their combinatorial data: a finite-type Cartan matrix `A`, a Weyl group
//! element `w` and a parabolic subset `I` of the simple reflections.
//!
//! The layers build on each other:
//!
//! - [`cartan`]: validated Cartan matrices and the built-in types.
//! - [`weyl`]: roots, Weyl group elements, reduced words, Bruhat order and
//!   parabolic quotients.
//! - [`cohomology`]: the Schubert basis with Chevalley products and the
//!   structure recovered from them.
//! - [`isoclass`]: the isomorphism checker with certificates.
//! - [`atlas`]: enumeration, classification and the surface atlas.
//! - [`document`] and [`commands`]: JSON input and the command-line front end.

pub mod atlas;
pub mod cartan;
pub mod cohomology;
pub mod commands;
pub mod document;
pub mod isoclass;
pub mod weyl;

use thiserror::Error;

pub use atlas::{classify, enumerate, surface_atlas, SurfaceLabel};
pub use cartan::CartanMatrix;
pub use cohomology::{SchubertBasis, SchubertClass, SchubertDatum};
pub use document::DatumDocument;
pub use isoclass::{check_iso, IsoVerdict, TauCertificate, VerdictKind};
pub use weyl::{WeylElement, WeylGroup, Word};

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Cartan(#[from] cartan::CartanError),
    #[error(transparent)]
    Weyl(#[from] weyl::WeylError),
    #[error(transparent)]
    Cohomology(#[from] cohomology::CohomologyError),
    #[error(transparent)]
    Iso(#[from] isoclass::IsoError),
    #[error(transparent)]
    Atlas(#[from] atlas::AtlasError),
    #[error(transparent)]
    Document(#[from] document::DocumentError),
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("{0}")]
    Usage(String),
}
