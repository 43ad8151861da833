//! IO / CLI companion to `sutherland-core`: configuration merging, a thread
//! pool satisfying the core's deterministic chunk contract, report emission,
//! and the three subcommands (`eval`, `verify`, `compare-n2`).

pub mod commands;
pub mod config;
pub mod exec;
pub mod report;
