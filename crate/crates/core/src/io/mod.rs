//! Documents, reports, SVG rendering and the bundled corpus.

pub mod corpus;
pub mod document;
pub mod report;
pub mod svg;

pub use corpus::{run_corpus, CorpusReport, CorpusSource};
pub use document::{parse_point, parse_slice_spec, CertificateDocument, DocumentError, PolytopeDocument, SliceDocument};
pub use report::Style;
pub use svg::render_svg;
