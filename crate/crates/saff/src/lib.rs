//! File formats, reports and the `saff` command line on top of `saff-core`.

pub mod acceptance;
pub mod cli;
pub mod format;
pub mod render;
