//! Batch runs over problem corpora, results files, strategy covers and
//! summary reports.

mod cover;
mod report;
mod results;
mod run;

pub use cover::greedy_cover;
pub use report::{report, GuidanceRatio, Report, StrategySummary};
pub use results::{read_results, write_header, write_record, Header, ResultsError, RunRecord, FORMAT_NAME, FORMAT_VERSION};
pub use run::{run_corpus, run_one, solved_sets, CorpusOptions, RunConfig, RunOutput, WatchlistSource};
pub use crate::selection::extract_watchlist;
