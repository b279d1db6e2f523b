//! Acceptance rules applied to raw short-form/long-form matches.
//!
//! A candidate pair is dropped when any of these fires:
//!
//! - (a) the SF contains a currency symbol;
//! - (b) the SF contains punctuation other than hyphens and internal
//!   periods, contains a quotation mark, or ends with an apostrophe;
//! - (c) the SF starts with a single letter followed by a space;
//! - (d) the SF has no uppercase letter;
//! - (e) the LF has no internal whitespace (one-word LFs);
//! - (f) the SF is on the stop word list.
//!
//! Rules are checked in order a..f and the first failing rule is
//! reported. Rule ids appear verbatim in diagnostics and reject logs.

use std::collections::BTreeSet;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::corpus::{is_currency_symbol, is_punctuation};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RuleId {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl RuleId {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::A => "a",
            RuleId::B => "b",
            RuleId::C => "c",
            RuleId::D => "d",
            RuleId::E => "e",
            RuleId::F => "f",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Accepted, or rejected by the first failing rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FilterVerdict {
    pub rejected_by: Option<RuleId>,
}

impl FilterVerdict {
    pub const ACCEPTED: FilterVerdict = FilterVerdict { rejected_by: None };

    pub fn rejected(rule: RuleId) -> Self {
        FilterVerdict {
            rejected_by: Some(rule),
        }
    }

    pub fn accepted(&self) -> bool {
        self.rejected_by.is_none()
    }
}

/// Exact-match, case-sensitive stop word list.
#[derive(Debug, Clone, Default)]
pub struct Stoplist {
    entries: BTreeSet<String>,
}

impl Stoplist {
    /// An empty list that rejects nothing.
    pub fn empty() -> Self {
        Stoplist::default()
    }

    pub fn from_entries<I, S>(entries: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Stoplist {
            entries: entries.into_iter().map(Into::into).collect(),
        }
    }

    /// Load from a file: one entry per line, `#` comments and blank
    /// lines ignored, duplicates collapsed. Missing files are fatal; an
    /// empty result is left to the caller to warn about.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let file = File::open(path.as_ref())?;
        let mut entries = BTreeSet::new();
        for line in BufReader::new(file).lines() {
            let line = line?;
            let entry = line.trim();
            if entry.is_empty() || entry.starts_with('#') {
                continue;
            }
            entries.insert(entry.to_string());
        }
        Ok(Stoplist { entries })
    }

    pub fn contains(&self, sf: &str) -> bool {
        self.entries.contains(sf)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn is_quotation_mark(c: char) -> bool {
    matches!(
        c,
        '"' | '\u{2018}'
            | '\u{2019}'
            | '\u{201A}'
            | '\u{201B}'
            | '\u{201C}'
            | '\u{201D}'
            | '\u{201E}'
            | '«'
            | '»'
            | '‹'
            | '›'
    )
}

fn is_apostrophe(c: char) -> bool {
    matches!(c, '\'' | '\u{2019}')
}

// Rule (b). Hyphens always pass; a period passes when it immediately
// follows an alphanumeric char, which keeps "U.N.O." alive.
fn violates_punctuation_rule(sf: &str) -> bool {
    let chars: Vec<char> = sf.chars().collect();
    if let Some(&last) = chars.last() {
        if is_apostrophe(last) {
            return true;
        }
    }
    for (i, &c) in chars.iter().enumerate() {
        if is_quotation_mark(c) {
            return true;
        }
        if !is_punctuation(c) {
            continue;
        }
        if c == '-' || c == '\u{2010}' {
            continue;
        }
        if c == '.' && i > 0 && chars[i - 1].is_alphanumeric() {
            continue;
        }
        return true;
    }
    false
}

/// Apply the SF rules (a, b, c, d, f) in order.
pub fn check_sf(sf: &str, stoplist: &Stoplist) -> FilterVerdict {
    if sf.chars().any(is_currency_symbol) {
        return FilterVerdict::rejected(RuleId::A);
    }
    if violates_punctuation_rule(sf) {
        return FilterVerdict::rejected(RuleId::B);
    }
    let mut chars = sf.chars();
    if let (Some(first), Some(second)) = (chars.next(), chars.next()) {
        if first.is_alphabetic() && second.is_whitespace() {
            return FilterVerdict::rejected(RuleId::C);
        }
    }
    if !sf.chars().any(|c| c.is_uppercase()) {
        return FilterVerdict::rejected(RuleId::D);
    }
    if stoplist.contains(sf) {
        return FilterVerdict::rejected(RuleId::F);
    }
    FilterVerdict::ACCEPTED
}

/// Apply the LF rule (e): the LF must contain internal whitespace.
pub fn check_lf(lf: &str) -> FilterVerdict {
    if lf.trim().chars().any(|c| c.is_whitespace()) {
        FilterVerdict::ACCEPTED
    } else {
        FilterVerdict::rejected(RuleId::E)
    }
}
