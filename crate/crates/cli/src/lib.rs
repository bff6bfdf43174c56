//! Verification engine and report plumbing behind the `mplverify` binary.

pub mod engine;
pub mod numeric;
pub mod report;
pub mod specialized;

pub use engine::{run_entry, EngineOpts};
pub use report::{CheckReport, RunReport, Verdict};
