//! Detection of parenthesized short-form candidates and right-to-left
//! character matching of the long form in the left-hand context.
//!
//! The matcher scans SF characters from right to left, skipping
//! non-alphanumeric ones. Each character must match, case-insensitively,
//! a character of the window text strictly left of the previous match;
//! matches are taken as far right as feasible, which yields the shortest
//! valid long form. The first SF character must in addition land on a
//! word-initial position (predecessor absent or non-alphanumeric). On
//! success the long form runs from the word containing that first match
//! to the word adjacent to the opening parenthesis.
//!
//! The search window holds at most `min(|A|+5, |A|*2)` words, `|A|` being
//! the number of characters of the SF. Only the `LF (SF)` order is
//! recognized; the inverted `SF (LF)` pattern is out of scope.

use std::io::{self, BufRead, Write};

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::corpus::{char_slice, segment_sentences, tokenize, Article, Span, TokenKind, TokenSpan};
use crate::error::{Error, Result};
use crate::filters::{check_lf, check_sf, RuleId, Stoplist};

/// A parenthesized short-form candidate before filtering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SfCandidate {
    /// Verbatim text between the parentheses, trimmed of whitespace.
    pub text: String,
    /// `|A|`: number of chars of the SF text, punctuation included.
    pub char_count: usize,
    pub word_count: usize,
    pub sentence_index: usize,
    /// Sentence-relative char offset of `(`.
    pub paren_open_offset: usize,
    /// Sentence-relative char offset of `)`.
    pub paren_close_offset: usize,
    /// Sentence-relative span of the SF text itself.
    pub sf_span: Span,
}

impl SfCandidate {
    /// Maximum number of window words for this SF.
    pub fn window_limit(&self) -> usize {
        (self.char_count + 5).min(self.char_count * 2)
    }
}

/// A successful long-form match inside a search window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfMatch {
    /// Index into the window word list where the long form starts.
    pub start_word_index: usize,
    /// Window words from the start word on, joined with single spaces.
    pub text: String,
}

/// One recognized SF-LF instance anchored to an article.
///
/// Pair identity is the exact `(language, sf, lf)` triple; case, spaces
/// and punctuation are significant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairOccurrence {
    pub sf: String,
    pub lf: String,
    pub article_id: String,
    pub language: String,
    pub date: NaiveDate,
    pub source: String,
    #[serde(default)]
    pub category: String,
    /// Article-level char span of the SF text.
    pub sf_offsets: Span,
    /// Article-level char span of the LF text.
    pub lf_offsets: Span,
}

/// A candidate dropped by the filter rules, for reject logs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RejectedCandidate {
    pub article_id: String,
    pub sf: String,
    /// Present only when the long form had already been matched.
    pub lf: Option<String>,
    pub rule: RuleId,
}

/// Find every innermost parenthesized expression that satisfies the SF
/// candidate constraints: 2..=10 chars, at most two words, at least one
/// letter. Nested parentheses only ever produce the innermost candidate;
/// unbalanced parentheses produce none for the unmatched side.
pub fn find_sf_candidates(
    sentence: &str,
    tokens: &[TokenSpan],
    sentence_index: usize,
) -> Vec<SfCandidate> {
    let chars: Vec<char> = sentence.chars().collect();
    let mut candidates = Vec::new();
    let mut open_stack: Vec<(usize, bool)> = Vec::new(); // (token idx, saw inner paren)

    for (i, tok) in tokens.iter().enumerate() {
        match tok.kind {
            TokenKind::ParenOpen => open_stack.push((i, false)),
            TokenKind::ParenClose => {
                let Some((open_idx, saw_inner)) = open_stack.pop() else {
                    continue;
                };
                if let Some(top) = open_stack.last_mut() {
                    top.1 = true;
                }
                if saw_inner {
                    continue;
                }
                let open = tokens[open_idx];
                if let Some(c) = candidate_between(&chars, open.start, tok.start, sentence_index) {
                    candidates.push(c);
                }
            }
            _ => {}
        }
    }
    candidates
}

fn candidate_between(
    chars: &[char],
    open: usize,
    close: usize,
    sentence_index: usize,
) -> Option<SfCandidate> {
    let mut start = open + 1;
    let mut end = close;
    while start < end && chars[start].is_whitespace() {
        start += 1;
    }
    while end > start && chars[end - 1].is_whitespace() {
        end -= 1;
    }
    if start >= end {
        return None;
    }
    let text: String = chars[start..end].iter().collect();
    let char_count = end - start;
    if !(2..=10).contains(&char_count) {
        return None;
    }
    let word_count = text.split_whitespace().count();
    if !(1..=2).contains(&word_count) {
        return None;
    }
    if !text.chars().any(|c| c.is_alphabetic()) {
        return None;
    }
    Some(SfCandidate {
        text,
        char_count,
        word_count,
        sentence_index,
        paren_open_offset: open,
        paren_close_offset: close,
        sf_span: Span::new(start, end),
    })
}

fn lowered(c: char) -> char {
    // First scalar of the lowercase mapping; enough for matching.
    c.to_lowercase().next().unwrap_or(c)
}

/// Match the SF against the window words (the up-to-`min(|A|+5, |A|*2)`
/// words immediately left of the opening parenthesis, in sentence
/// order). Returns the long form with the rightmost feasible start, or
/// `None` when no valid assignment exists.
pub fn match_long_form(window_words: &[&str], sf: &str) -> Option<LfMatch> {
    if window_words.is_empty() {
        return None;
    }
    let sf_chars: Vec<char> = sf
        .chars()
        .filter(|c| c.is_alphanumeric())
        .map(lowered)
        .collect();
    if sf_chars.is_empty() {
        return None;
    }

    // Window text: words joined with single spaces, with a map from
    // char position back to the owning word.
    let mut text: Vec<char> = Vec::new();
    let mut word_of: Vec<usize> = Vec::new();
    for (w, word) in window_words.iter().enumerate() {
        if w > 0 {
            text.push(' ');
            word_of.push(w); // never consulted: spaces cannot match
        }
        for c in word.chars() {
            text.push(lowered(c));
            word_of.push(w);
        }
    }

    let mut s = sf_chars.len() as isize - 1;
    let mut l = text.len() as isize - 1;
    while s >= 0 {
        let target = sf_chars[s as usize];
        let word_initial_needed = s == 0;
        loop {
            if l < 0 {
                return None;
            }
            let li = l as usize;
            let hit = text[li] == target
                && (!word_initial_needed || li == 0 || !text[li - 1].is_alphanumeric());
            if hit {
                break;
            }
            l -= 1;
        }
        s -= 1;
        l -= 1;
    }

    let start_word_index = word_of[(l + 1) as usize];
    Some(LfMatch {
        start_word_index,
        text: window_words[start_word_index..].join(" "),
    })
}

struct SentenceContext<'a> {
    text: &'a str,
    chars: Vec<char>,
    tokens: Vec<TokenSpan>,
    offset: usize, // article-level char offset of the sentence start
}

fn occurrence_for(
    article: &Article,
    ctx: &SentenceContext,
    sf_span: Span,
    lf_span: Span,
    sf: &str,
    lf: &str,
) -> PairOccurrence {
    PairOccurrence {
        sf: sf.to_string(),
        lf: lf.to_string(),
        article_id: article.id.clone(),
        language: article.language.clone(),
        date: article.date,
        source: article.source.clone(),
        category: article.category.clone(),
        sf_offsets: Span::new(ctx.offset + sf_span.start, ctx.offset + sf_span.end),
        lf_offsets: Span::new(ctx.offset + lf_span.start, ctx.offset + lf_span.end),
    }
}

/// Run the full pipeline over one article: segmentation, candidate
/// detection, window matching and filtering. Occurrences come out in
/// text order. The reject list records candidates dropped by a filter
/// rule (failed matches are not rejects; they simply produce nothing).
pub fn extract_pairs_detailed(
    article: &Article,
    stoplist: &Stoplist,
) -> (Vec<PairOccurrence>, Vec<RejectedCandidate>) {
    let mut occurrences = Vec::new();
    let mut rejects = Vec::new();

    for (sentence_index, span) in segment_sentences(&article.text).into_iter().enumerate() {
        let sentence = char_slice(&article.text, span);
        let tokens = tokenize(&sentence);
        let ctx = SentenceContext {
            text: &sentence,
            chars: sentence.chars().collect(),
            tokens,
            offset: span.start,
        };

        for candidate in find_sf_candidates(ctx.text, &ctx.tokens, sentence_index) {
            let verdict = check_sf(&candidate.text, stoplist);
            if let Some(rule) = verdict.rejected_by {
                rejects.push(RejectedCandidate {
                    article_id: article.id.clone(),
                    sf: candidate.text.clone(),
                    lf: None,
                    rule,
                });
                continue;
            }

            let Some((window_tokens, words)) = search_window(&ctx, &candidate) else {
                continue;
            };
            let word_refs: Vec<&str> = words.iter().map(String::as_str).collect();
            let Some(m) = match_long_form(&word_refs, &candidate.text) else {
                continue;
            };

            // Verbatim long form: from the start of the matched word to
            // the end of the last window word.
            let first = window_tokens[m.start_word_index];
            let last = window_tokens[window_tokens.len() - 1];
            let lf_span = Span::new(first.start, last.end);
            let lf_text: String = ctx.chars[lf_span.start..lf_span.end].iter().collect();

            let verdict = check_lf(&lf_text);
            if let Some(rule) = verdict.rejected_by {
                rejects.push(RejectedCandidate {
                    article_id: article.id.clone(),
                    sf: candidate.text.clone(),
                    lf: Some(lf_text),
                    rule,
                });
                continue;
            }

            occurrences.push(occurrence_for(
                article,
                &ctx,
                candidate.sf_span,
                lf_span,
                &candidate.text,
                &lf_text,
            ));
        }
    }
    (occurrences, rejects)
}

/// Like [`extract_pairs_detailed`] but without the reject log.
pub fn extract_pairs(article: &Article, stoplist: &Stoplist) -> Vec<PairOccurrence> {
    extract_pairs_detailed(article, stoplist).0
}

/// The window tokens right of which the candidate's `(` sits. The last
/// window word must be adjacent to the parenthesis (whitespace only in
/// between), and the window holds at most `candidate.window_limit()`
/// words.
fn search_window(
    ctx: &SentenceContext,
    candidate: &SfCandidate,
) -> Option<(Vec<TokenSpan>, Vec<String>)> {
    let paren_idx = ctx
        .tokens
        .iter()
        .position(|t| t.kind == TokenKind::ParenOpen && t.start == candidate.paren_open_offset)?;
    if paren_idx == 0 {
        return None;
    }
    let prev = ctx.tokens[paren_idx - 1];
    if prev.kind != TokenKind::Word {
        return None;
    }
    // Tokens are separated by whitespace only, so a preceding word token
    // is adjacent by construction.
    let limit = candidate.window_limit();
    let mut window: Vec<TokenSpan> = ctx.tokens[..paren_idx]
        .iter()
        .rev()
        .filter(|t| t.kind == TokenKind::Word)
        .take(limit)
        .copied()
        .collect();
    window.reverse();
    if window.is_empty() {
        return None;
    }
    let words: Vec<String> = window
        .iter()
        .map(|t| ctx.chars[t.start..t.end].iter().collect())
        .collect();
    Some((window, words))
}

/// Write occurrences as one JSON object per line.
pub fn write_occurrences_jsonl<W: Write>(
    occurrences: &[PairOccurrence],
    mut out: W,
) -> io::Result<()> {
    for occ in occurrences {
        serde_json::to_writer(&mut out, occ)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Read occurrences written by [`write_occurrences_jsonl`].
pub fn read_occurrences_jsonl<R: BufRead>(input: R) -> Result<Vec<PairOccurrence>> {
    let mut occurrences = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let occ: PairOccurrence =
            serde_json::from_str(trimmed).map_err(|e| Error::format(i + 1, e.to_string()))?;
        occurrences.push(occ);
    }
    Ok(occurrences)
}
