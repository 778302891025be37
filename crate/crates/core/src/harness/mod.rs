//! Graph streams, the claim-suite runner, structure reports and the
//! conjecture hunter.

pub mod hunt;
pub mod report;
pub mod stream;
pub mod suite;

pub use hunt::{hunt, Conjecture, Finding, HuntReport, HuntSummary};
pub use report::{analyze, render_text, StructureReport};
pub use stream::{FileFormat, Filters, Source, StreamItem, StreamSpec};
pub use suite::{run_suite, run_suite_with, ClaimTally, SuiteOptions, SuiteReport};
