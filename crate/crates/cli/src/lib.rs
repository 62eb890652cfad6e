//! Std companion to `ellsum-core`: parallel sweeps, the JSON-lines record
//! format and the command implementations behind the `ellsum` binary.

pub mod cli;
pub mod parallel;
pub mod record;

pub use record::{render_text, OutputRecord, Status};
