//! File formats, command-line spec parsing, parallel searches and
//! verification reports on top of `toricode-core`.

pub mod report;
pub mod search;
pub mod spec;
pub mod verify;

pub use report::{Comparison, RunReport, Status, VerificationReport};
pub use spec::{parse_field, parse_form, GraphSpec, SpecError};
pub use verify::{run_suite, RunOptions, Scenario};
