//! Command-line front end: the `.alg` format, the bundled corpus and reports.

pub mod app;
pub mod corpus;
pub mod format;
pub mod report;
