//! Batch driver and command-line front end for `exceptional-core`: the
//! curve list format, JSON-lines reports and a worker pool that keeps
//! input order.

pub mod batch;
pub mod cli;
pub mod input;
pub mod report;
