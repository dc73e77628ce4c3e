//! IO, file formats, certificates and the command line for `skein-core`.

pub mod certificate;
pub mod cli;
pub mod diagram;
pub mod parallel;
pub mod selftest;
