//! Command-line front end: input format, command dispatch, JSON reports and
//! an on-disk Gröbner basis cache.

pub mod cache;
pub mod commands;
pub mod problem;
pub mod report;

pub use cache::DiskCache;
pub use commands::{run_command, run_command_with_store, Command, CommandError};
pub use problem::{parse_problem, print_problem, ParseError, ProblemSpec};
pub use report::Report;
