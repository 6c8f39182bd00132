//! Plain-text s-box files.
//!
//! `#` starts a comment that runs to the end of the line. The remaining
//! tokens, separated by whitespace and/or commas, are the 2^n entries in
//! row-major order, each decimal or `0x`-prefixed hex. n is inferred from
//! the count.

use std::fmt::Write as _;

use sboxforge::{Error as CoreError, SBox};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: invalid entry {token:?}")]
    BadToken { line: usize, token: String },
    #[error("{0}")]
    Table(#[from] CoreError),
}

pub fn parse_sbox(text: &str) -> Result<SBox, ParseError> {
    let mut entries = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        for token in body.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let parsed = match token
                .strip_prefix("0x")
                .or_else(|| token.strip_prefix("0X"))
            {
                Some(hex) => u32::from_str_radix(hex, 16),
                None => token.parse::<u32>(),
            };
            entries.push(parsed.map_err(|_| ParseError::BadToken {
                line: lineno + 1,
                token: token.to_string(),
            })?);
        }
    }
    Ok(SBox::candidate(entries)?)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Radix {
    #[default]
    Decimal,
    Hex,
}

/// One header comment, then rows of up to 16 entries.
pub fn serialize_sbox(s: &SBox, radix: Radix) -> String {
    let digits = s.n().div_ceil(4) as usize;
    let mut out = format!("# {}-bit s-box, {} entries\n", s.n(), s.len());
    for row in s.table().chunks(16) {
        let cells: Vec<String> = row
            .iter()
            .map(|v| match radix {
                Radix::Decimal => v.to_string(),
                Radix::Hex => format!("0x{v:0digits$x}"),
            })
            .collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}
