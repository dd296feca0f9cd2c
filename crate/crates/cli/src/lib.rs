//! Command-line front end for `quasitoric-core`: JSON documents, reports,
//! the example corpus and SVG drawings.

pub mod app;
pub mod corpus;
pub mod doc;
pub mod error;
pub mod render;
pub mod report;
