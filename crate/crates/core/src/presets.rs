//! Built-in scenario and cipher presets.
//!
//! Scenarios span three levels of optimism about future quantum hardware:
//!
//! * `mania` - 60 GHz gate speed, $50 per cipher-circuit-year. The speed
//!   comes from the NIST bound of a 2^64-layer circuit in ten years.
//! * `optimistic` - 1 GHz and $500, comparable to a budget desktop.
//! * `steady` - 100 MHz and $50,000.
//!
//! AES-128 ships with three published depth estimates (57894 and 57854 from
//! the shallowest known circuit, 15000 from the earlier generation); AES-192
//! and AES-256 reuse the shallow depth since no dedicated figures are
//! published at width 1000.

use crate::model::{CipherSpec, QuantumScenario};

pub fn scenarios() -> Vec<QuantumScenario> {
    vec![
        QuantumScenario::new("mania", 6e10, 50.0).unwrap(),
        QuantumScenario::new("optimistic", 1e9, 500.0).unwrap(),
        QuantumScenario::new("steady", 1e8, 50_000.0).unwrap(),
    ]
}

pub fn ciphers() -> Vec<CipherSpec> {
    vec![
        CipherSpec::new("aes128-d57894", 128, 57894, 1000).unwrap(),
        CipherSpec::new("aes128-d57854", 128, 57854, 1000).unwrap(),
        CipherSpec::new("aes128-grassl", 128, 15000, 1000).unwrap(),
        CipherSpec::new("aes192", 192, 57894, 1000).unwrap(),
        CipherSpec::new("aes256", 256, 57894, 1000).unwrap(),
    ]
}

/// Look up a preset scenario by name.
pub fn scenario(name: &str) -> Option<QuantumScenario> {
    scenarios().into_iter().find(|s| s.name == name)
}

/// Look up a preset cipher by name.
pub fn cipher(name: &str) -> Option<CipherSpec> {
    ciphers().into_iter().find(|c| c.name == name)
}

/// Name of the default scenario.
pub const DEFAULT_SCENARIO: &str = "mania";
/// Name of the default cipher.
pub const DEFAULT_CIPHER: &str = "aes128-d57894";
