//! The JSON valuation file.
//!
//! ```json
//! {"valuations": [{"name": "cusp", "proximity": [[], [1], [2, 1]]},
//!                 {"maximal_contact": [4, 6, 13], "trailing_free": 2},
//!                 {"tono": {"a": 3, "e": 0}}],
//!  "aligned_mu": 3}
//! ```

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{tono_family, BoundsError, MultiValuation, ValuationBundle};
use crate::config::Configuration;
use crate::invariants::from_maximal_contact;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FileError {
    #[error("invalid JSON: {message} (line {line}, column {column})")]
    Syntax {
        message: String,
        line: usize,
        column: usize,
    },
    #[error("{path}: {message}")]
    Field { path: String, message: String },
}

impl FileError {
    fn field(path: impl Into<String>, message: impl ToString) -> Self {
        FileError::Field {
            path: path.into(),
            message: message.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TonoParams {
    pub a: i64,
    pub e: i64,
}

/// The one encoding carried by a valuation entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Encoding {
    Proximity {
        lists: Vec<Vec<usize>>,
        tangent_count: Option<usize>,
    },
    MaximalContact {
        values: Vec<u64>,
        trailing_free: Option<usize>,
    },
    Tono(TonoParams),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationEntry {
    pub name: Option<String>,
    pub encoding: Encoding,
}

impl ValuationEntry {
    pub fn new(name: Option<String>, encoding: Encoding) -> Self {
        Self { name, encoding }
    }

    /// The configuration the entry describes, named after the entry or the
    /// encoding.
    pub fn build(&self) -> Result<Configuration, String> {
        let cfg = match &self.encoding {
            Encoding::Proximity {
                lists,
                tangent_count,
            } => Configuration::build(lists, *tangent_count).map_err(|e| e.to_string())?,
            Encoding::MaximalContact {
                values,
                trailing_free,
            } => {
                let values: Vec<BigInt> = values.iter().map(|&x| BigInt::from(x)).collect();
                from_maximal_contact(&values, trailing_free.unwrap_or(0))
                    .map_err(|e| e.to_string())?
            }
            Encoding::Tono(TonoParams { a, e }) => {
                tono_family(*a, *e).map_err(|e| e.to_string())?.bundle.cfg
            }
        };
        Ok(match &self.name {
            Some(name) => cfg.with_name(name.clone()),
            None => cfg,
        })
    }
}

/// A parsed file whose configurations have all been built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationFile {
    valuations: Vec<ValuationEntry>,
    aligned_mu: Option<u64>,
    configurations: Vec<Configuration>,
}

impl ValuationFile {
    pub fn new(
        valuations: Vec<ValuationEntry>,
        aligned_mu: Option<u64>,
    ) -> Result<Self, FileError> {
        if valuations.is_empty() {
            return Err(FileError::field(
                "valuations",
                "at least one entry is required",
            ));
        }
        let configurations = valuations
            .iter()
            .enumerate()
            .map(|(i, entry)| {
                entry
                    .build()
                    .map_err(|message| FileError::field(format!("valuations[{i}]"), message))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let file = Self {
            valuations,
            aligned_mu,
            configurations,
        };
        if let Some(mu) = aligned_mu {
            if let Err(e @ BoundsError::AlignedMu { .. }) =
                MultiValuation::new(file.bundles(), Some(mu))
            {
                return Err(FileError::field("aligned_mu", e));
            }
        }
        Ok(file)
    }

    pub fn valuations(&self) -> &[ValuationEntry] {
        &self.valuations
    }

    pub fn aligned_mu(&self) -> Option<u64> {
        self.aligned_mu
    }

    pub fn configurations(&self) -> &[Configuration] {
        &self.configurations
    }

    pub fn bundles(&self) -> Vec<ValuationBundle> {
        self.configurations
            .iter()
            .cloned()
            .map(ValuationBundle::new)
            .collect()
    }

    /// Pretty-printed JSON that [`parse`] maps back to `self`.
    pub fn serialize(&self) -> String {
        let raw = RawFile {
            valuations: self.valuations.iter().map(RawEntry::from).collect(),
            aligned_mu: self.aligned_mu,
        };
        let mut text = serde_json::to_string_pretty(&raw).expect("plain data serializes");
        text.push('\n');
        text
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    valuations: Vec<RawEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    aligned_mu: Option<u64>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    proximity: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tangent_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    maximal_contact: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    trailing_free: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tono: Option<TonoParams>,
}

impl From<&ValuationEntry> for RawEntry {
    fn from(entry: &ValuationEntry) -> Self {
        let mut raw = RawEntry {
            name: entry.name.clone(),
            ..RawEntry::default()
        };
        match &entry.encoding {
            Encoding::Proximity {
                lists,
                tangent_count,
            } => {
                raw.proximity = Some(lists.clone());
                raw.tangent_count = *tangent_count;
            }
            Encoding::MaximalContact {
                values,
                trailing_free,
            } => {
                raw.maximal_contact = Some(values.clone());
                raw.trailing_free = *trailing_free;
            }
            Encoding::Tono(params) => raw.tono = Some(*params),
        }
        raw
    }
}

impl RawEntry {
    fn into_entry(self, index: usize) -> Result<ValuationEntry, FileError> {
        let path = |field: &str| format!("valuations[{index}].{field}");
        let present: Vec<&str> = [
            ("proximity", self.proximity.is_some()),
            ("maximal_contact", self.maximal_contact.is_some()),
            ("tono", self.tono.is_some()),
        ]
        .into_iter()
        .filter_map(|(k, p)| p.then_some(k))
        .collect();
        if present.len() != 1 {
            return Err(FileError::field(
                format!("valuations[{index}]"),
                format!(
                    "exactly one of proximity, maximal_contact, tono is required (found {})",
                    if present.is_empty() {
                        "none".to_string()
                    } else {
                        present.join(", ")
                    }
                ),
            ));
        }
        if self.tangent_count.is_some() && self.proximity.is_none() {
            return Err(FileError::field(
                path("tangent_count"),
                "only allowed with proximity",
            ));
        }
        if self.trailing_free.is_some() && self.maximal_contact.is_none() {
            return Err(FileError::field(
                path("trailing_free"),
                "only allowed with maximal_contact",
            ));
        }
        let encoding = if let Some(lists) = self.proximity {
            Encoding::Proximity {
                lists,
                tangent_count: self.tangent_count,
            }
        } else if let Some(values) = self.maximal_contact {
            Encoding::MaximalContact {
                values,
                trailing_free: self.trailing_free,
            }
        } else {
            Encoding::Tono(self.tono.expect("one encoding is present"))
        };
        Ok(ValuationEntry::new(self.name, encoding))
    }
}

/// Parses and validates a valuation file, building every configuration.
pub fn parse(text: &str) -> Result<ValuationFile, FileError> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| FileError::Syntax {
        message: strip_position(&e),
        line: e.line(),
        column: e.column(),
    })?;
    let entries = raw
        .valuations
        .into_iter()
        .enumerate()
        .map(|(i, entry)| entry.into_entry(i))
        .collect::<Result<Vec<_>, _>>()?;
    ValuationFile::new(entries, raw.aligned_mu)
}

fn strip_position(e: &serde_json::Error) -> String {
    let full = e.to_string();
    match full.rfind(" at line ") {
        Some(cut) => full[..cut].to_string(),
        None => full,
    }
}
