//! Command-line front end for `cremona-core`: map fixtures, structured
//! reports and the `construct`, `analyze`, `theoremB` and `chow` commands.

pub mod fixture;
pub mod report;
pub mod run;

pub use fixture::{parse_any, AnyFixture, FieldSpec, Fixture, FixtureError};
pub use report::{CheckRow, Report, Row};
pub use run::{cmd_analyze, cmd_chow, cmd_construct, cmd_theorem_b, RunConfig, RunError, Tier};
