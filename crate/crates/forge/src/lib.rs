//! File formats, certificates and the command line for `ramsey-forge-core`.

pub mod certificate;
pub mod cli;
pub mod formats;
