//! Article ingestion, sentence segmentation and tokenization.
//!
//! Input corpora are newline-delimited UTF-8 records, one JSON object per
//! line with the keys `id, language, date, source, category, text`. Lines
//! starting with `#` are comments. Malformed records are skipped with a
//! per-record diagnostic instead of aborting: large news corpora always
//! contain dirt.
//!
//! All offsets in this crate are Unicode scalar-value offsets (`char`
//! counts), never byte offsets.

use std::io::{self, BufRead};

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

/// One news document with its metadata.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Article {
    pub id: String,
    /// Lowercase two-letter ISO-639-1 code.
    pub language: String,
    pub date: NaiveDate,
    pub source: String,
    #[serde(default)]
    pub category: String,
    pub text: String,
}

/// Half-open `[start, end)` range of char offsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start >= self.end
    }
}

/// Sentence boundaries as char offsets into the article text.
pub type SentenceSpan = Span;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Word,
    Punctuation,
    ParenOpen,
    ParenClose,
    Other,
}

/// One token, with char offsets relative to its sentence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TokenSpan {
    pub start: usize,
    pub end: usize,
    pub kind: TokenKind,
}

/// Why an input record was skipped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    /// 1-based line number in the input stream.
    pub line: usize,
    pub reason: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.reason)
    }
}

/// Outcome of reading one input line.
#[derive(Debug)]
pub enum Record {
    Article(Article),
    Skipped(Diagnostic),
}

/// Streaming reader over newline-delimited article records.
///
/// Yields `Ok(Record::Article)` for valid records and
/// `Ok(Record::Skipped)` for malformed ones; only stream-level I/O
/// failures surface as `Err`.
pub struct ArticleReader<R: BufRead> {
    input: R,
    line: usize,
    buf: String,
}

impl<R: BufRead> ArticleReader<R> {
    pub fn new(input: R) -> Self {
        ArticleReader {
            input,
            line: 0,
            buf: String::new(),
        }
    }
}

fn validate(article: &Article) -> Option<&'static str> {
    if article.id.is_empty() {
        return Some("empty id");
    }
    let lang_ok =
        article.language.len() == 2 && article.language.bytes().all(|b| b.is_ascii_lowercase());
    if !lang_ok {
        return Some("language is not a lowercase two-letter code");
    }
    None
}

impl<R: BufRead> Iterator for ArticleReader<R> {
    type Item = io::Result<Record>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.input.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e)),
            }
            self.line += 1;
            let line = self.buf.trim_end_matches(['\n', '\r']);
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let record = match serde_json::from_str::<Article>(line) {
                Ok(article) => match validate(&article) {
                    None => Record::Article(article),
                    Some(reason) => Record::Skipped(Diagnostic {
                        line: self.line,
                        reason: reason.to_string(),
                    }),
                },
                Err(e) => Record::Skipped(Diagnostic {
                    line: self.line,
                    reason: e.to_string(),
                }),
            };
            return Some(Ok(record));
        }
    }
}

/// Read a whole stream, separating valid articles from diagnostics.
pub fn read_articles<R: BufRead>(input: R) -> io::Result<(Vec<Article>, Vec<Diagnostic>)> {
    let mut articles = Vec::new();
    let mut diagnostics = Vec::new();
    for record in ArticleReader::new(input) {
        match record? {
            Record::Article(a) => articles.push(a),
            Record::Skipped(d) => diagnostics.push(d),
        }
    }
    Ok((articles, diagnostics))
}

fn is_opening_follower(c: char) -> bool {
    c.is_uppercase() || matches!(c, '"' | '\'' | '«' | '“' | '‘' | '„' | '(' | '[')
}

/// Split text into sentence spans.
///
/// A boundary is placed after `.`, `!` or `?` when followed by whitespace
/// and then an uppercase letter or an opening quote/parenthesis; no
/// boundary is ever placed inside a parenthesized region. Spans are
/// trimmed of surrounding whitespace and cover every non-whitespace char.
pub fn segment_sentences(text: &str) -> Vec<SentenceSpan> {
    let chars: Vec<char> = text.chars().collect();
    let mut spans = Vec::new();
    let mut depth = 0usize;
    let mut sentence_start = 0usize;

    let push = |start: usize, end: usize, spans: &mut Vec<SentenceSpan>| {
        // Trim whitespace off both ends; skip all-whitespace chunks.
        let mut s = start;
        let mut e = end;
        while s < e && chars[s].is_whitespace() {
            s += 1;
        }
        while e > s && chars[e - 1].is_whitespace() {
            e -= 1;
        }
        if s < e {
            spans.push(Span::new(s, e));
        }
    };

    let mut i = 0usize;
    while i < chars.len() {
        let c = chars[i];
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '.' | '!' | '?' if depth == 0 => {
                // Lookahead: whitespace run, then an opening char.
                let mut j = i + 1;
                while j < chars.len() && chars[j].is_whitespace() {
                    j += 1;
                }
                if j > i + 1 && j < chars.len() && is_opening_follower(chars[j]) {
                    push(sentence_start, i + 1, &mut spans);
                    sentence_start = j;
                    i = j;
                    continue;
                }
            }
            _ => {}
        }
        i += 1;
    }
    push(sentence_start, chars.len(), &mut spans);
    spans
}

fn is_connector(c: char) -> bool {
    matches!(c, '-' | '\u{2010}' | '\'' | '’' | '.')
}

/// Tokenize one sentence.
///
/// A word is a maximal run of alphanumeric chars plus internal hyphens,
/// apostrophes and periods, so "U.P." and "l'energia" are single words
/// (a trailing period binds to the word only when the word already
/// contains one). `(` and `)` are their own tokens; every other
/// non-whitespace char is a single-char punctuation/other token.
pub fn tokenize(sentence: &str) -> Vec<TokenSpan> {
    let chars: Vec<char> = sentence.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0usize;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '(' {
            tokens.push(TokenSpan {
                start: i,
                end: i + 1,
                kind: TokenKind::ParenOpen,
            });
            i += 1;
            continue;
        }
        if c == ')' {
            tokens.push(TokenSpan {
                start: i,
                end: i + 1,
                kind: TokenKind::ParenClose,
            });
            i += 1;
            continue;
        }
        if c.is_alphanumeric() {
            let start = i;
            let mut has_period = false;
            i += 1;
            loop {
                while i < chars.len() && chars[i].is_alphanumeric() {
                    i += 1;
                }
                if i < chars.len()
                    && is_connector(chars[i])
                    && i + 1 < chars.len()
                    && chars[i + 1].is_alphanumeric()
                {
                    has_period |= chars[i] == '.';
                    i += 2;
                    continue;
                }
                break;
            }
            if has_period && i < chars.len() && chars[i] == '.' {
                i += 1;
            }
            tokens.push(TokenSpan {
                start,
                end: i,
                kind: TokenKind::Word,
            });
            continue;
        }
        let kind = if is_punctuation(c) {
            TokenKind::Punctuation
        } else {
            TokenKind::Other
        };
        tokens.push(TokenSpan {
            start: i,
            end: i + 1,
            kind,
        });
        i += 1;
    }
    tokens
}

pub(crate) fn is_punctuation(c: char) -> bool {
    use unicode_properties::{GeneralCategoryGroup, UnicodeGeneralCategory};
    c.general_category_group() == GeneralCategoryGroup::Punctuation
}

pub(crate) fn is_currency_symbol(c: char) -> bool {
    use unicode_properties::{GeneralCategory, UnicodeGeneralCategory};
    c.general_category() == GeneralCategory::CurrencySymbol
}

/// Slice a sentence string by char offsets.
pub fn char_slice(text: &str, span: Span) -> String {
    text.chars().skip(span.start).take(span.len()).collect()
}
