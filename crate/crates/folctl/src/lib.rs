//! Foliation files, polynomial parsing, command payloads and reports for `folctl`.

pub mod cache;
pub mod commands;
pub mod error;
pub mod file;
pub mod parse;
pub mod report;
