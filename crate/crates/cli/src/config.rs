//! Scenario/cipher configuration: built-in presets plus an optional config
//! file that adds or shadows entries by name.
//!
//! The file format is flat sectioned text, one scalar per line:
//!
//! ```text
//! # future quantum lab
//! [scenario lab]
//! gate_speed_hz = 1e6
//! ccy_cost_usd = 1e6
//!
//! [cipher toy]
//! key_bits = 32
//! depth = 100
//! width = 64
//!
//! [defaults]
//! scenario = lab
//! cipher = toy
//! ```
//!
//! Keys match the library field names exactly. User entries are merged over
//! the presets; redefining an existing name shadows it and emits a warning.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use qkr_econ::model::{CipherSpec, QuantumScenario};
use qkr_econ::presets;

#[derive(Debug)]
pub enum ConfigError {
    Io(std::io::Error),
    /// The file does not follow the section/key grammar.
    Parse {
        line: usize,
        message: String,
    },
    /// Grammar was fine but a field value or reference is invalid.
    Validation {
        field: String,
        message: String,
    },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Io(e) => write!(f, "cannot read config: {e}"),
            Self::Parse { line, message } => {
                write!(f, "config parse error, line {line}: {message}")
            }
            Self::Validation { field, message } => {
                write!(f, "config validation error, field `{field}`: {message}")
            }
        }
    }
}

impl std::error::Error for ConfigError {}

impl From<std::io::Error> for ConfigError {
    fn from(e: std::io::Error) -> Self {
        Self::Io(e)
    }
}

/// The resolved set of named scenarios and ciphers plus default names.
#[derive(Debug, Clone)]
pub struct ScenarioConfig {
    scenarios: BTreeMap<String, QuantumScenario>,
    ciphers: BTreeMap<String, CipherSpec>,
    pub default_scenario: String,
    pub default_cipher: String,
    /// Human-readable merge warnings (shadowed names).
    pub warnings: Vec<String>,
}

impl ScenarioConfig {
    /// Presets only.
    pub fn presets() -> Self {
        Self {
            scenarios: presets::scenarios()
                .into_iter()
                .map(|s| (s.name.clone(), s))
                .collect(),
            ciphers: presets::ciphers()
                .into_iter()
                .map(|c| (c.name.clone(), c))
                .collect(),
            default_scenario: presets::DEFAULT_SCENARIO.to_string(),
            default_cipher: presets::DEFAULT_CIPHER.to_string(),
            warnings: Vec::new(),
        }
    }

    /// Presets merged with the definitions in `path`.
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    /// Presets merged with the definitions in `text`.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut config = Self::presets();
        let mut section = Section::None;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            if let Some(header) = line.strip_prefix('[') {
                let header = header.strip_suffix(']').ok_or_else(|| ConfigError::Parse {
                    line: line_no,
                    message: "section header missing closing `]`".into(),
                })?;
                section.finish(&mut config)?;
                section = Section::open(header.trim(), line_no)?;
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| ConfigError::Parse {
                line: line_no,
                message: "expected `key = value`".into(),
            })?;
            section.set(key.trim(), value.trim(), line_no)?;
        }
        section.finish(&mut config)?;

        if !config.scenarios.contains_key(&config.default_scenario) {
            return Err(ConfigError::Validation {
                field: "defaults.scenario".into(),
                message: format!(
                    "references undefined scenario `{}`",
                    config.default_scenario
                ),
            });
        }
        if !config.ciphers.contains_key(&config.default_cipher) {
            return Err(ConfigError::Validation {
                field: "defaults.cipher".into(),
                message: format!("references undefined cipher `{}`", config.default_cipher),
            });
        }
        Ok(config)
    }

    pub fn scenario(&self, name: &str) -> Option<&QuantumScenario> {
        self.scenarios.get(name)
    }

    pub fn cipher(&self, name: &str) -> Option<&CipherSpec> {
        self.ciphers.get(name)
    }

    pub fn scenario_names(&self) -> impl Iterator<Item = &str> {
        self.scenarios.keys().map(String::as_str)
    }

    pub fn cipher_names(&self) -> impl Iterator<Item = &str> {
        self.ciphers.keys().map(String::as_str)
    }

    fn add_scenario(&mut self, s: QuantumScenario) {
        if self.scenarios.insert(s.name.clone(), s.clone()).is_some() {
            self.warnings.push(format!(
                "scenario `{}` shadows an earlier definition",
                s.name
            ));
        }
    }

    fn add_cipher(&mut self, c: CipherSpec) {
        if self.ciphers.insert(c.name.clone(), c.clone()).is_some() {
            self.warnings
                .push(format!("cipher `{}` shadows an earlier definition", c.name));
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

enum Section {
    None,
    Scenario {
        name: String,
        line: usize,
        gate_speed_hz: Option<f64>,
        ccy_cost_usd: Option<f64>,
    },
    Cipher {
        name: String,
        line: usize,
        key_bits: Option<u32>,
        depth: Option<u64>,
        width: Option<u64>,
    },
    Defaults {
        scenario: Option<String>,
        cipher: Option<String>,
    },
}

impl Section {
    fn open(header: &str, line: usize) -> Result<Self, ConfigError> {
        if header == "defaults" {
            return Ok(Self::Defaults {
                scenario: None,
                cipher: None,
            });
        }
        if let Some(name) = header.strip_prefix("scenario ") {
            let name = name.trim();
            if name.is_empty() {
                return Err(ConfigError::Parse {
                    line,
                    message: "scenario section needs a name".into(),
                });
            }
            return Ok(Self::Scenario {
                name: name.to_string(),
                line,
                gate_speed_hz: None,
                ccy_cost_usd: None,
            });
        }
        if let Some(name) = header.strip_prefix("cipher ") {
            let name = name.trim();
            if name.is_empty() {
                return Err(ConfigError::Parse {
                    line,
                    message: "cipher section needs a name".into(),
                });
            }
            return Ok(Self::Cipher {
                name: name.to_string(),
                line,
                key_bits: None,
                depth: None,
                width: None,
            });
        }
        Err(ConfigError::Parse {
            line,
            message: format!(
                "unknown section `[{header}]` (expected `[scenario NAME]`, `[cipher NAME]`, or `[defaults]`)"
            ),
        })
    }

    fn set(&mut self, key: &str, value: &str, line: usize) -> Result<(), ConfigError> {
        match self {
            Self::None => Err(ConfigError::Parse {
                line,
                message: "key outside any section".into(),
            }),
            Self::Scenario {
                gate_speed_hz,
                ccy_cost_usd,
                ..
            } => match key {
                "gate_speed_hz" => {
                    *gate_speed_hz = Some(parse_f64(key, value, line)?);
                    Ok(())
                }
                "ccy_cost_usd" => {
                    *ccy_cost_usd = Some(parse_f64(key, value, line)?);
                    Ok(())
                }
                _ => Err(ConfigError::Validation {
                    field: key.to_string(),
                    message: format!("unknown scenario key on line {line}"),
                }),
            },
            Self::Cipher {
                key_bits,
                depth,
                width,
                ..
            } => match key {
                "key_bits" => {
                    *key_bits = Some(parse_int(key, value, line)? as u32);
                    Ok(())
                }
                "depth" => {
                    *depth = Some(parse_int(key, value, line)?);
                    Ok(())
                }
                "width" => {
                    *width = Some(parse_int(key, value, line)?);
                    Ok(())
                }
                _ => Err(ConfigError::Validation {
                    field: key.to_string(),
                    message: format!("unknown cipher key on line {line}"),
                }),
            },
            Self::Defaults { scenario, cipher } => match key {
                "scenario" => {
                    *scenario = Some(value.to_string());
                    Ok(())
                }
                "cipher" => {
                    *cipher = Some(value.to_string());
                    Ok(())
                }
                _ => Err(ConfigError::Validation {
                    field: key.to_string(),
                    message: format!("unknown defaults key on line {line}"),
                }),
            },
        }
    }

    fn finish(&mut self, config: &mut ScenarioConfig) -> Result<(), ConfigError> {
        match std::mem::replace(self, Section::None) {
            Self::None => Ok(()),
            Self::Scenario {
                name,
                line,
                gate_speed_hz,
                ccy_cost_usd,
            } => {
                let hz = gate_speed_hz.ok_or_else(|| missing(&name, "gate_speed_hz", line))?;
                let ccy = ccy_cost_usd.ok_or_else(|| missing(&name, "ccy_cost_usd", line))?;
                let scenario =
                    QuantumScenario::new(name, hz, ccy).map_err(|e| ConfigError::Validation {
                        field: e.field.to_string(),
                        message: e.reason.to_string(),
                    })?;
                config.add_scenario(scenario);
                Ok(())
            }
            Self::Cipher {
                name,
                line,
                key_bits,
                depth,
                width,
            } => {
                let n = key_bits.ok_or_else(|| missing(&name, "key_bits", line))?;
                let d = depth.ok_or_else(|| missing(&name, "depth", line))?;
                let w = width.ok_or_else(|| missing(&name, "width", line))?;
                let cipher =
                    CipherSpec::new(name, n, d, w).map_err(|e| ConfigError::Validation {
                        field: e.field.to_string(),
                        message: e.reason.to_string(),
                    })?;
                config.add_cipher(cipher);
                Ok(())
            }
            Self::Defaults { scenario, cipher } => {
                if let Some(s) = scenario {
                    config.default_scenario = s;
                }
                if let Some(c) = cipher {
                    config.default_cipher = c;
                }
                Ok(())
            }
        }
    }
}

fn missing(section: &str, field: &'static str, line: usize) -> ConfigError {
    ConfigError::Validation {
        field: field.to_string(),
        message: format!("missing in section `{section}` starting at line {line}"),
    }
}

fn parse_f64(key: &str, value: &str, line: usize) -> Result<f64, ConfigError> {
    value.parse::<f64>().map_err(|_| ConfigError::Parse {
        line,
        message: format!("`{key}` expects a number, got `{value}`"),
    })
}

fn parse_int(key: &str, value: &str, line: usize) -> Result<u64, ConfigError> {
    value.parse::<u64>().map_err(|_| ConfigError::Parse {
        line,
        message: format!("`{key}` expects an integer, got `{value}`"),
    })
}
