//! Library side of the `harmid` command: run configuration, the
//! verification driver and report rendering.

pub mod config;
pub mod eval;
pub mod list;
pub mod report;
pub mod run;

pub use config::{Filter, Format, RunConfig};
pub use report::{Report, SCHEMA_VERSION};
pub use run::run;

/// Exit status for a run with no failures.
pub const EXIT_OK: i32 = 0;
/// Some identity failed, or an expression could not be evaluated.
pub const EXIT_FAIL: i32 = 1;
/// Bad flags, unknown identity or class, unparsable expression.
pub const EXIT_USAGE: i32 = 2;
