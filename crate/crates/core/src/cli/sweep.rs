//! Grid files for `sweep`: `key=value` lines, blocks separated by blank lines.
//!
//! Keys: `A`, `B`, `lambda_re`, `lambda_im`, `z0_re`, `z0_im`. `A`, `B` and
//! `z0_re` are required; the others default to 0. Lines starting with `#` are ignored.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

const KEYS: [&str; 6] = ["A", "B", "lambda_re", "lambda_im", "z0_re", "z0_im"];

#[derive(Debug, Clone, PartialEq)]
pub struct GridBlock {
    /// 1-based line of the block's first entry.
    pub line: usize,
    pub values: BTreeMap<&'static str, f64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

impl GridBlock {
    pub fn get(&self, key: &str) -> f64 {
        self.values.get(key).copied().unwrap_or(0.0)
    }

    /// Canonical text of the block: every key in fixed order, shortest round-trip floats.
    pub fn canonical(&self) -> String {
        KEYS.iter()
            .map(|k| format!("{k}={:?}", self.get(k)))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// First 16 hex digits of the SHA-256 of [`GridBlock::canonical`].
    pub fn hash(&self) -> String {
        let digest = Sha256::digest(self.canonical().as_bytes());
        hex::encode(&digest[..8])
    }
}

pub fn parse_grid(text: &str) -> Result<Vec<GridBlock>, ParseError> {
    let mut blocks = Vec::new();
    let mut current: Option<GridBlock> = None;
    let finish = |block: GridBlock, blocks: &mut Vec<GridBlock>| -> Result<(), ParseError> {
        for required in ["A", "B", "z0_re"] {
            if !block.values.contains_key(required) {
                return Err(ParseError {
                    line: block.line,
                    message: format!("block is missing required key `{required}`"),
                });
            }
        }
        blocks.push(block);
        Ok(())
    };
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if let Some(b) = current.take() {
                finish(b, &mut blocks)?;
            }
            continue;
        }
        let err = |message: String| ParseError { line: line_no, message };
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| err(format!("expected `key=value`, got `{line}`")))?;
        let key = key.trim();
        let key = *KEYS
            .iter()
            .find(|k| **k == key)
            .ok_or_else(|| err(format!("unknown key `{key}` (expected one of {})", KEYS.join(", "))))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| err(format!("value for `{key}` is not a number: `{}`", value.trim())))?;
        let block = current.get_or_insert_with(|| GridBlock {
            line: line_no,
            values: BTreeMap::new(),
        });
        if block.values.insert(key, value).is_some() {
            return Err(err(format!("duplicate key `{key}` in block")));
        }
    }
    if let Some(b) = current.take() {
        finish(b, &mut blocks)?;
    }
    Ok(blocks)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexEntry {
    pub hash: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    /// `"ok"` or `"rejected"`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// First lines of every block with this hash.
    pub lines: Vec<usize>,
    pub deduplicated: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepIndex {
    pub blocks: usize,
    pub unique: usize,
    pub records: Vec<IndexEntry>,
}
