//! Command-line surface: curve construction, record verification and the reference check.

pub mod commands;
pub mod ledger;
pub mod record;

pub use commands::{
    cmd_fixed, cmd_mestre, cmd_paper_check, cmd_verify, paper_ledger, Console, MestreInput, Outcome,
};
pub use ledger::{Check, CheckLedger, Comparison, Kind, Status};
pub use record::{records_from_json, records_to_json, CurveRecord, Provenance};
