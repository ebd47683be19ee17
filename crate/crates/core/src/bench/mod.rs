//! Table reproduction, single-state reports and wavefunction dumps.

pub mod config;
pub mod labels;
pub mod reference;
pub mod report;

pub use config::BenchConfig;
pub use labels::{parse_state_label, StateLabel};
pub use reference::{reference_rows, ReferenceRow};
pub use report::{
    dump_wavefunction, normalization_audit, run_single, run_table1, ComparisonReport, ComparisonRow, Mode, SingleReport,
};
