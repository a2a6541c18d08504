//! Command-line front end: configuration ingestion, golden-value regression,
//! the verification suite, and table/CSV rendering.

pub mod config;
pub mod format;
pub mod reproduce;
pub mod verify;
