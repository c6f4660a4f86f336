//! Library side of the `qsynth4` command-line tool: built-in truth-table
//! generators, PLA ingestion with bit-pair packing, and report rendering.

pub mod generators;
pub mod pla;
pub mod report;
