//! Library side of the `gl11` command: commands, reports and the golden
//! Kirby-move suite.

pub mod commands;
pub mod report;
pub mod suite;

pub use report::RunReport;
