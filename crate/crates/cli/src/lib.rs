//! Library side of the command-line front end: JSON file plumbing and the
//! named verification suites the binary and the integration tests share.

pub mod io;
pub mod suites;

/// Knobs shared by generators and suites.  `None` means "use the suite's
/// documented default".  The seed fully determines every generated input,
/// so equal configurations give byte-identical reports.
#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: Option<usize>,
    pub bound: Option<i64>,
    pub n: Option<usize>,
}
