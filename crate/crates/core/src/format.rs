//! The `KVLF` text format for truth tables, and the list syntaxes used on the
//! command line.
//!
//! ```text
//! KVLF 1
//! <k> <n>
//! <k^n values in lexicographic order, whitespace separated>
//! ```
//!
//! [`serialize`] writes the canonical form: single spaces, all values on the
//! third line, trailing newline. [`parse`] accepts any ASCII whitespace
//! between tokens and nothing else.

use crate::error::{Error, Result};
use crate::function::{cell_count, TruthTable, VariableSet};

pub const MAGIC: &str = "KVLF";
pub const VERSION: &str = "1";

pub fn serialize(f: &TruthTable) -> String {
    let mut out = format!("{MAGIC} {VERSION}\n{} {}\n", f.order(), f.arity());
    let body: Vec<String> = f.values().iter().map(|v| v.to_string()).collect();
    out.push_str(&body.join(" "));
    out.push('\n');
    out
}

struct Tokens<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        Tokens { bytes, pos: 0 }
    }

    fn next_token(&mut self) -> Option<(usize, &'a [u8])> {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos == self.bytes.len() {
            return None;
        }
        let start = self.pos;
        while self.pos < self.bytes.len() && !self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        Some((start, &self.bytes[start..self.pos]))
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a [u8])> {
        self.next_token().ok_or_else(|| Error::Format {
            offset: self.bytes.len(),
            message: format!("unexpected end of input, expected {what}"),
        })
    }
}

fn decimal(offset: usize, token: &[u8]) -> Result<u64> {
    if token.is_empty() || !token.iter().all(u8::is_ascii_digit) {
        return Err(Error::Format {
            offset,
            message: format!("expected a decimal number, found {:?}", String::from_utf8_lossy(token)),
        });
    }
    std::str::from_utf8(token)
        .ok()
        .and_then(|s| s.parse::<u64>().ok())
        .ok_or_else(|| Error::Format {
            offset,
            message: "number too large".into(),
        })
}

pub fn parse(bytes: &[u8]) -> Result<TruthTable> {
    let mut tokens = Tokens::new(bytes);

    let (offset, magic) = tokens.expect("magic")?;
    if magic != MAGIC.as_bytes() {
        return Err(Error::Format {
            offset,
            message: format!("bad magic, expected {MAGIC}"),
        });
    }
    let (offset, version) = tokens.expect("version")?;
    if version != VERSION.as_bytes() {
        return Err(Error::Format {
            offset,
            message: format!("unsupported version, expected {VERSION}"),
        });
    }

    let (offset, token) = tokens.expect("order k")?;
    let k = decimal(offset, token)?;
    let k = u8::try_from(k).map_err(|_| Error::Capacity(format!("order k = {k} is too large")))?;
    let (offset, token) = tokens.expect("arity n")?;
    let n = decimal(offset, token)?;
    let n = usize::try_from(n).map_err(|_| Error::Capacity(format!("arity n = {n} is too large")))?;
    let expected = cell_count(k, n)?;

    // grow with the input rather than the header's claim
    let mut values = Vec::new();
    let mut got = 0usize;
    while let Some((offset, token)) = tokens.next_token() {
        let value = decimal(offset, token)?;
        if value >= u64::from(k) {
            return Err(Error::ValueOutOfRange { offset, value, k });
        }
        if got < expected {
            values.push(value as u8);
        }
        got += 1;
    }
    if got != expected {
        return Err(Error::Length { expected, got });
    }
    TruthTable::new(k, n, values)
}

fn list_items(s: &str, sep: char) -> impl Iterator<Item = (usize, &str)> {
    let mut offset = 0;
    s.split(sep).map(move |item| {
        let start = offset;
        offset += item.len() + sep.len_utf8();
        let trimmed_start = start + (item.len() - item.trim_start().len());
        (trimmed_start, item.trim())
    })
}

/// Comma-separated non-negative integers, e.g. `1,1,2`. The empty string is
/// the empty list.
pub fn parse_u64_list(s: &str) -> Result<Vec<u64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    list_items(s, ',')
        .map(|(offset, item)| decimal(offset, item.as_bytes()))
        .collect()
}

/// Comma-separated 1-based variable positions, e.g. `1,3`.
pub fn parse_var_list(s: &str) -> Result<VariableSet> {
    let positions = parse_u64_list(s)?
        .into_iter()
        .map(|p| usize::try_from(p).map_err(|_| Error::domain(format!("variable x_{p} out of range"))))
        .collect::<Result<Vec<_>>>()?;
    VariableSet::new(positions)
}

/// Semicolon-separated blocks of variable lists, e.g. `1,3;2` for
/// `({x_1, x_3}, {x_2})`.
pub fn parse_block_spec(s: &str) -> Result<Vec<VariableSet>> {
    list_items(s, ';')
        .map(|(offset, block)| {
            if block.is_empty() {
                return Err(Error::Format {
                    offset,
                    message: "empty block".into(),
                });
            }
            parse_var_list(block).map_err(|e| match e {
                Error::Format { offset: o, message } => Error::Format {
                    offset: offset + o,
                    message,
                },
                other => other,
            })
        })
        .collect()
}
