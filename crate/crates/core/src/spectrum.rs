//! Finite energy-level spectra: validation, level free energies and the
//! JSON / CSV file formats.
//!
//! Entropies are stored already multiplied by `k` (`S_n = k ln g_n`), so they
//! stay finite in the tropical limit. Energies need not be positive; only a
//! strict ordering is enforced.

use std::io::Read;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::scalar::{NumberKind, Scalar};

/// One energy level `(E_n, S_n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Level<S> {
    pub energy: S,
    pub entropy: S,
}

impl<S: Scalar> Level<S> {
    pub fn new(energy: S, entropy: S) -> Self {
        Level { energy, entropy }
    }

    /// `F_n(T) = E_n − T·S_n`.
    pub fn free_energy(&self, temperature: &S) -> S {
        self.energy.clone() - temperature.clone() * self.entropy.clone()
    }
}

/// `F_n(T) = E_n − T·S_n` for a single level.
pub fn level_free_energy<S: Scalar>(level: &Level<S>, temperature: &S) -> S {
    level.free_energy(temperature)
}

/// A validated, non-empty spectrum with strictly increasing energies.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<S> {
    levels: Vec<Level<S>>,
}

impl<S: Scalar> Spectrum<S> {
    pub fn levels(&self) -> &[Level<S>] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn level(&self, index: usize) -> Result<&Level<S>> {
        self.levels.get(index).ok_or(Error::BadIndex {
            index,
            len: self.levels.len(),
        })
    }

    pub fn number_kind(&self) -> NumberKind {
        S::KIND
    }

    pub fn lowest(&self) -> &Level<S> {
        &self.levels[0]
    }

    pub fn highest(&self) -> &Level<S> {
        &self.levels[self.levels.len() - 1]
    }

    /// Free energies of all levels at `temperature`, in level order.
    pub fn free_energies(&self, temperature: &S) -> Vec<S> {
        self.levels
            .iter()
            .map(|l| l.free_energy(temperature))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let levels = self
            .levels
            .iter()
            .map(|l| serde_json::json!({ "E": l.energy.to_json(), "S": l.entropy.to_json() }))
            .collect();
        serde_json::json!({ "levels": Value::Array(levels) })
    }

    pub fn serialize(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut out = serde_json::to_string_pretty(&self.to_json())
                    .expect("spectrum JSON is always serializable");
                out.push('\n');
                out
            }
            Format::Csv => {
                let mut out = String::from("E,S\n");
                for level in &self.levels {
                    out.push_str(&format!("{},{}\n", level.energy, level.entropy));
                }
                out
            }
        }
    }
}

/// Validates levels and sorts them by energy.
pub fn make_spectrum<S: Scalar>(levels: Vec<Level<S>>) -> Result<Spectrum<S>> {
    if levels.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    if let Some(index) = levels
        .iter()
        .position(|l| !l.energy.is_finite_value() || !l.entropy.is_finite_value())
    {
        return Err(Error::NonFiniteValue { index });
    }
    let mut levels = levels;
    levels.sort_by(|a, b| a.energy.partial_cmp(&b.energy).expect("finite energies"));
    if let Some(pair) = levels.windows(2).find(|w| w[0].energy == w[1].energy) {
        return Err(Error::DuplicateEnergy {
            energy: pair[0].energy.to_string(),
        });
    }
    Ok(Spectrum { levels })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Reads a spectrum file. Numbers may be JSON numbers or strings (`"3/2"`,
/// `"0.25"`); under exact scalars both are read as exact fractions.
pub fn parse_spectrum<S: Scalar, R: Read>(mut input: R, format: Format) -> Result<Spectrum<S>> {
    let mut text = String::new();
    input.read_to_string(&mut text)?;
    let levels = match format {
        Format::Json => parse_json_levels(&text)?,
        Format::Csv => parse_csv_levels(&text)?,
    };
    make_spectrum(levels)
}

pub(crate) fn scalar_from_json<S: Scalar>(value: &Value, location: &str) -> Result<S> {
    let parsed = match value {
        Value::Number(n) => S::parse_literal(&n.to_string()),
        Value::String(s) => S::parse_literal(s),
        _ => None,
    };
    parsed.ok_or_else(|| Error::Parse {
        location: location.to_string(),
        message: format!("expected a number or numeric string, found {value}"),
    })
}

pub(crate) fn levels_from_json<S: Scalar>(value: &Value, location: &str) -> Result<Vec<Level<S>>> {
    let items = value.as_array().ok_or_else(|| Error::Parse {
        location: location.to_string(),
        message: "expected an array of levels".into(),
    })?;
    items
        .iter()
        .enumerate()
        .map(|(i, item)| {
            let field = |name: &str| -> Result<S> {
                let loc = format!("{location}[{i}].{name}");
                let v = item.get(name).ok_or_else(|| Error::Parse {
                    location: loc.clone(),
                    message: "missing field".into(),
                })?;
                scalar_from_json(v, &loc)
            };
            Ok(Level::new(field("E")?, field("S")?))
        })
        .collect()
}

fn parse_json_levels<S: Scalar>(text: &str) -> Result<Vec<Level<S>>> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let levels = root.get("levels").ok_or_else(|| Error::Parse {
        location: "levels".into(),
        message: "missing `levels` array".into(),
    })?;
    levels_from_json(levels, "levels")
}

fn parse_csv_levels<S: Scalar>(text: &str) -> Result<Vec<Level<S>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut levels = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse {
            location: e
                .position()
                .map(|p| format!("line {}", p.line()))
                .unwrap_or_else(|| "csv".into()),
            message: e.to_string(),
        })?;
        let line = record
            .position()
            .map(|p| p.line())
            .unwrap_or(row as u64 + 1);
        if row == 0 && is_header(&record) {
            continue;
        }
        if record.len() != 2 {
            return Err(Error::Parse {
                location: format!("line {line}"),
                message: format!("expected 2 fields `E,S`, found {}", record.len()),
            });
        }
        let field = |idx: usize, name: &str| -> Result<S> {
            S::parse_literal(&record[idx]).ok_or_else(|| Error::Parse {
                location: format!("line {line}, field {name}"),
                message: format!("cannot parse `{}` as a number", &record[idx]),
            })
        };
        levels.push(Level::new(field(0, "E")?, field(1, "S")?));
    }
    Ok(levels)
}

fn is_header(record: &csv::StringRecord) -> bool {
    record.len() == 2 && record[0].eq_ignore_ascii_case("E") && record[1].eq_ignore_ascii_case("S")
}
