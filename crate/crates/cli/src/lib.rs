//! Verification harness for the Askey-Wilson hierarchy kernel: named check
//! suites with machine-readable reports, plus object computation and
//! enumeration commands for inspection.

pub mod compute;
pub mod interchange;
pub mod report;
pub mod suites;
