//! Range censuses: multiplicity counts at checkpoints, prime-power
//! totient sets, totient pairs, and convergence reports.

mod pairs;
mod powers;
mod ratio;
mod report;
mod table;

pub use pairs::{pair_census, pair_sets, PairCensusRow, PairSets};
pub use powers::{rt_census, rt_values, vkl_census, vkl_census_with, vkl_values, RtRow, VklRow};
pub use ratio::{strictly_decreasing, Ratio, DISPLAY_DIGITS};
pub use report::{ratio_report, Report, ReportEntry};
pub use table::{
    count_2mod4, totient_census, CensusOptions, CensusRow, CensusRun, Route, T2Split,
    DEFAULT_CHECKPOINTS, LONG_RUN_CHECKPOINTS, MAX_CHECKPOINT,
};
