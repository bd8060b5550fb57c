//! Text formats, JSON reports, parallel drivers, verification suites and
//! the command-line front-end for `monres-core`.

pub mod cli;
pub mod parallel;
pub mod report;
pub mod suites;
pub mod text;
