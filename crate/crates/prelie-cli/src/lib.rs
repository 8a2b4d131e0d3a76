//! Library face of the verification driver: suite execution, report
//! types, and table rendering, callable without going through the binary.

pub mod report;
pub mod suites;
pub mod tables;

pub use report::{parse_rat, Failure, SuiteCtx, SuiteReport};
pub use suites::complexsuite::left_mult_witness;
pub use suites::{run_suite, SUITE_NAMES};
pub use tables::{print_table, OutputFormat, TableKind};
