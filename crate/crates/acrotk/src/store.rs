//! Aggregation of occurrences into unique pairs, corpus statistics,
//! persistence and the dictionary-based long-form categorizer.
//!
//! A pair is keyed by the exact `(language, sf, lf)` triple — case,
//! spaces and punctuation all distinguish, so `UNO`, `Uno` and `U.N.O.`
//! are three different short forms. Stores merge associatively and
//! commutatively, which is what makes sharded parallel aggregation
//! equivalent to a single pass.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::Path;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::corpus::tokenize;
use crate::corpus::TokenKind;
use crate::error::{Error, Result};
use crate::extractor::PairOccurrence;

/// One unique pair with its aggregated metadata.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub language: String,
    pub sf: String,
    pub lf: String,
    pub count: u64,
    pub first_date: NaiveDate,
    pub last_date: NaiveDate,
    pub sources: BTreeSet<String>,
    /// News categories as a multiset: category -> occurrence count.
    pub categories: BTreeMap<String, u64>,
}

type PairKey = (String, String, String);

/// A `(language, sf)` key with the group's `(lf, count)` members.
pub type LfGroup = ((String, String), Vec<(String, u64)>);

fn key_of(occ: &PairOccurrence) -> PairKey {
    (occ.language.clone(), occ.sf.clone(), occ.lf.clone())
}

/// Aggregated unique pairs plus per-language article counters
/// (AA: articles analyzed, AS: articles with at least one pair).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairStore {
    records: BTreeMap<PairKey, PairRecord>,
    articles_analyzed: BTreeMap<String, u64>,
    articles_with_pairs: BTreeMap<String, u64>,
}

#[derive(Serialize, Deserialize)]
struct StoreHeader {
    articles_analyzed: BTreeMap<String, u64>,
    articles_with_pairs: BTreeMap<String, u64>,
}

impl PairStore {
    pub fn new() -> Self {
        PairStore::default()
    }

    /// Aggregate occurrences under the given per-language AA tally.
    /// AS counts each contributing article once, however many
    /// occurrences it produced.
    pub fn aggregate<'a, I>(occurrences: I, articles_analyzed: BTreeMap<String, u64>) -> Self
    where
        I: IntoIterator<Item = &'a PairOccurrence>,
    {
        let mut store = PairStore {
            articles_analyzed,
            ..PairStore::default()
        };
        let mut seen_articles: HashSet<(String, String)> = HashSet::new();
        for occ in occurrences {
            store.add_occurrence(occ);
            if seen_articles.insert((occ.language.clone(), occ.article_id.clone())) {
                *store
                    .articles_with_pairs
                    .entry(occ.language.clone())
                    .or_insert(0) += 1;
            }
        }
        store
    }

    fn add_occurrence(&mut self, occ: &PairOccurrence) {
        let record = self
            .records
            .entry(key_of(occ))
            .or_insert_with(|| PairRecord {
                language: occ.language.clone(),
                sf: occ.sf.clone(),
                lf: occ.lf.clone(),
                count: 0,
                first_date: occ.date,
                last_date: occ.date,
                sources: BTreeSet::new(),
                categories: BTreeMap::new(),
            });
        record.count += 1;
        record.first_date = record.first_date.min(occ.date);
        record.last_date = record.last_date.max(occ.date);
        record.sources.insert(occ.source.clone());
        *record.categories.entry(occ.category.clone()).or_insert(0) += 1;
    }

    /// Associative, commutative merge. Correct as long as no article is
    /// split across shards (AA/AS counters add).
    pub fn merge(mut self, other: PairStore) -> PairStore {
        for (key, record) in other.records {
            match self.records.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(record);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let r = e.get_mut();
                    r.count += record.count;
                    r.first_date = r.first_date.min(record.first_date);
                    r.last_date = r.last_date.max(record.last_date);
                    r.sources.extend(record.sources);
                    for (cat, n) in record.categories {
                        *r.categories.entry(cat).or_insert(0) += n;
                    }
                }
            }
        }
        for (lang, n) in other.articles_analyzed {
            *self.articles_analyzed.entry(lang).or_insert(0) += n;
        }
        for (lang, n) in other.articles_with_pairs {
            *self.articles_with_pairs.entry(lang).or_insert(0) += n;
        }
        self
    }

    pub fn records(&self) -> impl Iterator<Item = &PairRecord> {
        self.records.values()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn articles_analyzed(&self) -> &BTreeMap<String, u64> {
        &self.articles_analyzed
    }

    pub fn articles_with_pairs(&self) -> &BTreeMap<String, u64> {
        &self.articles_with_pairs
    }

    /// Restrict the store to one language.
    pub fn filter_language(&self, language: &str) -> PairStore {
        PairStore {
            records: self
                .records
                .iter()
                .filter(|((lang, _, _), _)| lang == language)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
            articles_analyzed: self
                .articles_analyzed
                .iter()
                .filter(|(lang, _)| *lang == language)
                .map(|(k, v)| (k.clone(), *v))
                .collect(),
            articles_with_pairs: self
                .articles_with_pairs
                .iter()
                .filter(|(lang, _)| *lang == language)
                .map(|(k, v)| (k.clone(), *v))
                .collect(),
        }
    }

    /// Long-form variants per `(language, sf)` group, for clustering.
    pub fn lf_groups(&self) -> Vec<LfGroup> {
        let mut groups: BTreeMap<(String, String), Vec<(String, u64)>> = BTreeMap::new();
        for record in self.records.values() {
            groups
                .entry((record.language.clone(), record.sf.clone()))
                .or_default()
                .push((record.lf.clone(), record.count));
        }
        groups.into_iter().collect()
    }

    /// TSV export: header plus one row per record in (language, sf, lf)
    /// order. Tabs, newlines and backslashes inside fields are escaped.
    pub fn export_tsv<W: Write>(&self, mut out: W) -> io::Result<()> {
        out.write_all(b"language\tsf\tlf\tcount\tfirst_date\tlast_date\tn_sources\n")?;
        for record in self.records.values() {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                tsv_escape(&record.language),
                tsv_escape(&record.sf),
                tsv_escape(&record.lf),
                record.count,
                record.first_date,
                record.last_date,
                record.sources.len(),
            )?;
        }
        Ok(())
    }

    /// Lossless line-oriented export: a header object carrying the
    /// article counters, then one record per line in key order.
    pub fn export_jsonl<W: Write>(&self, mut out: W) -> io::Result<()> {
        let header = StoreHeader {
            articles_analyzed: self.articles_analyzed.clone(),
            articles_with_pairs: self.articles_with_pairs.clone(),
        };
        serde_json::to_writer(&mut out, &header)?;
        out.write_all(b"\n")?;
        for record in self.records.values() {
            serde_json::to_writer(&mut out, record)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    /// Read back an [`export_jsonl`] stream.
    pub fn import_jsonl<R: BufRead>(input: R) -> Result<PairStore> {
        let mut store = PairStore::new();
        let mut saw_header = false;
        for (i, line) in input.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            if !saw_header {
                let header: StoreHeader = serde_json::from_str(trimmed)
                    .map_err(|e| Error::format(i + 1, format!("store header: {e}")))?;
                store.articles_analyzed = header.articles_analyzed;
                store.articles_with_pairs = header.articles_with_pairs;
                saw_header = true;
                continue;
            }
            let record: PairRecord =
                serde_json::from_str(trimmed).map_err(|e| Error::format(i + 1, e.to_string()))?;
            store
                .records
                .insert((record.language.clone(), record.sf.clone(), record.lf.clone()), record);
        }
        if !saw_header {
            return Err(Error::data("store file has no header line"));
        }
        Ok(store)
    }

    pub fn compute_stats(&self) -> CorpusStats {
        let mut languages: BTreeSet<String> = self.articles_analyzed.keys().cloned().collect();
        for (lang, _, _) in self.records.keys() {
            languages.insert(lang.clone());
        }
        let total_aa: u64 = self.articles_analyzed.values().sum();

        let mut per_language = Vec::new();
        let mut total = RawCounts::default();
        for lang in &languages {
            let mut raw = RawCounts {
                aa: self.articles_analyzed.get(lang).copied().unwrap_or(0),
                selected: self.articles_with_pairs.get(lang).copied().unwrap_or(0),
                ..RawCounts::default()
            };
            for record in self.records.values().filter(|r| &r.language == lang) {
                raw.add_record(record);
            }
            raw.seal();
            total.absorb(&raw);
            per_language.push(raw.into_stats(lang.clone(), total_aa));
        }
        let total = total.into_stats("TOTAL".to_string(), total_aa);
        CorpusStats {
            per_language,
            total,
        }
    }
}

fn tsv_escape(field: &str) -> String {
    if !field.contains(['\\', '\t', '\n', '\r']) {
        return field.to_string();
    }
    let mut out = String::with_capacity(field.len() + 4);
    for c in field.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '\t' => out.push_str("\\t"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            _ => out.push(c),
        }
    }
    out
}

#[derive(Default)]
struct RawCounts {
    aa: u64,
    selected: u64,
    pu: u64,
    po: u64,
    f1: u64,
    f10: u64,
    f100: u64,
    lfs_per_sf: BTreeMap<String, u64>,
    sfs_per_lf: BTreeMap<String, u64>,
    // For the pooled TOTAL row, distinct items are summed per language.
    n_sfs: u64,
    n_ambiguous_sfs: u64,
    n_lfs_of_ambiguous_sfs: u64,
    n_lfs: u64,
    n_ambiguous_lfs: u64,
    n_sfs_of_ambiguous_lfs: u64,
}

impl RawCounts {
    fn add_record(&mut self, record: &PairRecord) {
        self.pu += 1;
        self.po += record.count;
        if record.count == 1 {
            self.f1 += 1;
        }
        if record.count >= 10 {
            self.f10 += 1;
        }
        if record.count >= 100 {
            self.f100 += 1;
        }
        *self.lfs_per_sf.entry(record.sf.clone()).or_insert(0) += 1;
        *self.sfs_per_lf.entry(record.lf.clone()).or_insert(0) += 1;
    }

    /// Derive the distinct-item counters from the per-key maps. SFs and
    /// LFs are distinct per language; the pooled TOTAL row sums these
    /// per-language counts.
    fn seal(&mut self) {
        self.n_sfs = self.lfs_per_sf.len() as u64;
        self.n_lfs = self.sfs_per_lf.len() as u64;
        self.n_ambiguous_sfs = self.lfs_per_sf.values().filter(|&&n| n >= 2).count() as u64;
        self.n_lfs_of_ambiguous_sfs = self.lfs_per_sf.values().filter(|&&n| n >= 2).sum();
        self.n_ambiguous_lfs = self.sfs_per_lf.values().filter(|&&n| n >= 2).count() as u64;
        self.n_sfs_of_ambiguous_lfs = self.sfs_per_lf.values().filter(|&&n| n >= 2).sum();
    }

    /// Add a sealed per-language row into this (TOTAL) accumulator.
    fn absorb(&mut self, other: &RawCounts) {
        self.aa += other.aa;
        self.selected += other.selected;
        self.pu += other.pu;
        self.po += other.po;
        self.f1 += other.f1;
        self.f10 += other.f10;
        self.f100 += other.f100;
        self.n_sfs += other.n_sfs;
        self.n_lfs += other.n_lfs;
        self.n_ambiguous_sfs += other.n_ambiguous_sfs;
        self.n_lfs_of_ambiguous_sfs += other.n_lfs_of_ambiguous_sfs;
        self.n_ambiguous_lfs += other.n_ambiguous_lfs;
        self.n_sfs_of_ambiguous_lfs += other.n_sfs_of_ambiguous_lfs;
    }

    fn into_stats(self, language: String, total_aa: u64) -> LanguageStats {
        let ratio = |num: u64, den: u64| -> Option<f64> {
            if den == 0 {
                None
            } else {
                Some(num as f64 / den as f64)
            }
        };
        LanguageStats {
            language,
            aa_share: ratio(self.aa, total_aa),
            articles_analyzed: self.aa,
            articles_with_pairs: self.selected,
            unique_pairs: self.pu,
            pair_occurrences: self.po,
            as_over_aa: ratio(self.selected, self.aa),
            aa_over_pu: ratio(self.aa, self.pu),
            po_per_100_articles: ratio(self.po, self.aa).map(|r| r * 100.0),
            po_over_pu: ratio(self.po, self.pu),
            frac_pu_f1: ratio(self.f1, self.pu),
            frac_pu_f10: ratio(self.f10, self.pu),
            frac_pu_f100: ratio(self.f100, self.pu),
            avg_lf_per_sf: ratio(self.pu, self.n_sfs),
            avg_lf_per_ambiguous_sf: ratio(self.n_lfs_of_ambiguous_sfs, self.n_ambiguous_sfs),
            avg_sf_per_lf: ratio(self.pu, self.n_lfs),
            avg_sf_per_ambiguous_lf: ratio(self.n_sfs_of_ambiguous_lfs, self.n_ambiguous_lfs),
        }
    }
}

/// One statistics row; ratios are absent when their denominator is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct LanguageStats {
    pub language: String,
    /// This language's share of all analyzed articles.
    pub aa_share: Option<f64>,
    pub articles_analyzed: u64,
    pub articles_with_pairs: u64,
    pub unique_pairs: u64,
    pub pair_occurrences: u64,
    pub as_over_aa: Option<f64>,
    pub aa_over_pu: Option<f64>,
    pub po_per_100_articles: Option<f64>,
    pub po_over_pu: Option<f64>,
    pub frac_pu_f1: Option<f64>,
    pub frac_pu_f10: Option<f64>,
    pub frac_pu_f100: Option<f64>,
    pub avg_lf_per_sf: Option<f64>,
    pub avg_lf_per_ambiguous_sf: Option<f64>,
    pub avg_sf_per_lf: Option<f64>,
    pub avg_sf_per_ambiguous_lf: Option<f64>,
}

/// Statistics per language plus a pooled TOTAL row.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusStats {
    pub per_language: Vec<LanguageStats>,
    pub total: LanguageStats,
}

impl CorpusStats {
    pub fn language(&self, code: &str) -> Option<&LanguageStats> {
        self.per_language.iter().find(|s| s.language == code)
    }

    /// Table-shaped TSV: one row per language, TOTAL last. An empty
    /// store prints the header alone.
    pub fn write_tsv<W: Write>(&self, mut out: W) -> io::Result<()> {
        out.write_all(
            b"language\taa_share\taa\tas\tpu\tpo\tas_over_aa\taa_over_pu\tpo_per_100\t\
              po_over_pu\tpu_f1\tpu_f10\tpu_f100\tavg_lf_per_sf\tavg_lf_per_ambig_sf\t\
              avg_sf_per_lf\tavg_sf_per_ambig_lf\n",
        )?;
        let total = (!self.per_language.is_empty()).then_some(&self.total);
        for row in self.per_language.iter().chain(total) {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                row.language,
                fmt_ratio(row.aa_share),
                row.articles_analyzed,
                row.articles_with_pairs,
                row.unique_pairs,
                row.pair_occurrences,
                fmt_ratio(row.as_over_aa),
                fmt_ratio(row.aa_over_pu),
                fmt_ratio(row.po_per_100_articles),
                fmt_ratio(row.po_over_pu),
                fmt_ratio(row.frac_pu_f1),
                fmt_ratio(row.frac_pu_f10),
                fmt_ratio(row.frac_pu_f100),
                fmt_ratio(row.avg_lf_per_sf),
                fmt_ratio(row.avg_lf_per_ambiguous_sf),
                fmt_ratio(row.avg_sf_per_lf),
                fmt_ratio(row.avg_sf_per_ambiguous_lf),
            )?;
        }
        Ok(())
    }
}

fn fmt_ratio(v: Option<f64>) -> String {
    match v {
        Some(v) => format!("{v:.6}"),
        None => "-".to_string(),
    }
}

/// Category word lists: one file per `(language, category)` named
/// `<language>.<category>.txt`, one word per line, `#` comments.
/// Matching is case-insensitive on whole words; category priority is
/// the lexicographic order of category names.
#[derive(Debug, Clone, Default)]
pub struct CategoryDictionaries {
    per_language: BTreeMap<String, Vec<(String, BTreeSet<String>)>>,
}

impl CategoryDictionaries {
    pub fn load(dir: impl AsRef<Path>) -> Result<Self> {
        let mut per_language: BTreeMap<String, Vec<(String, BTreeSet<String>)>> = BTreeMap::new();
        for entry in fs::read_dir(dir.as_ref())? {
            let entry = entry?;
            if !entry.file_type()?.is_file() {
                continue;
            }
            let name = entry.file_name();
            let name = name.to_string_lossy();
            let Some(stem) = name.strip_suffix(".txt") else {
                continue;
            };
            let Some((language, category)) = stem.split_once('.') else {
                return Err(Error::data(format!(
                    "dictionary file {name:?} is not named <language>.<category>.txt"
                )));
            };
            let mut words = BTreeSet::new();
            for line in fs::read_to_string(entry.path())?.lines() {
                let word = line.trim();
                if word.is_empty() || word.starts_with('#') {
                    continue;
                }
                words.insert(word.to_lowercase());
            }
            per_language
                .entry(language.to_string())
                .or_default()
                .push((category.to_string(), words));
        }
        for categories in per_language.values_mut() {
            categories.sort_by(|a, b| a.0.cmp(&b.0));
        }
        Ok(CategoryDictionaries { per_language })
    }

    pub fn for_language(&self, language: &str) -> &[(String, BTreeSet<String>)] {
        self.per_language
            .get(language)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn is_empty(&self) -> bool {
        self.per_language.is_empty()
    }

    pub fn categorize(&self, language: &str, lf: &str) -> &str {
        categorize_lf(lf, self.for_language(language))
    }
}

/// First category (in priority order) one of whose words matches a
/// whole word of the long form, case-insensitively; `"other"` when none
/// does.
pub fn categorize_lf<'a>(lf: &str, dictionaries: &'a [(String, BTreeSet<String>)]) -> &'a str {
    let words: Vec<String> = tokenize(lf)
        .into_iter()
        .filter(|t| t.kind == TokenKind::Word)
        .map(|t| {
            lf.chars()
                .skip(t.start)
                .take(t.end - t.start)
                .collect::<String>()
                .to_lowercase()
        })
        .collect();
    for (category, dict) in dictionaries {
        if words.iter().any(|w| dict.contains(w)) {
            return category;
        }
    }
    "other"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Span;

    fn occ(language: &str, sf: &str, lf: &str, article_id: &str, day: u32) -> PairOccurrence {
        PairOccurrence {
            sf: sf.into(),
            lf: lf.into(),
            article_id: article_id.into(),
            language: language.into(),
            date: NaiveDate::from_ymd_opt(2013, 1, day).unwrap(),
            source: format!("src{day}"),
            category: "news".into(),
            sf_offsets: Span::new(0, 1),
            lf_offsets: Span::new(0, 1),
        }
    }

    fn aa(pairs: &[(&str, u64)]) -> BTreeMap<String, u64> {
        pairs.iter().map(|(l, n)| (l.to_string(), *n)).collect()
    }

    #[test]
    fn case_variants_are_distinct_records() {
        let occs = vec![
            occ("en", "UNO", "United Nations Organisation", "a1", 1),
            occ("en", "Uno", "United Nations Organisation", "a1", 2),
        ];
        let store = PairStore::aggregate(&occs, aa(&[("en", 2)]));
        assert_eq!(store.len(), 2);
    }

    #[test]
    fn empty_occurrences_keep_article_tally() {
        let store = PairStore::aggregate(&[], aa(&[("en", 5)]));
        assert!(store.is_empty());
        assert_eq!(store.articles_analyzed().get("en"), Some(&5));
        assert_eq!(store.articles_with_pairs().get("en"), None);
    }

    #[test]
    fn repeated_pair_in_one_article_counts_once_for_as() {
        let occs = vec![
            occ("en", "IMF", "International Monetary Fund", "a1", 3),
            occ("en", "IMF", "International Monetary Fund", "a1", 3),
        ];
        let store = PairStore::aggregate(&occs, aa(&[("en", 1)]));
        assert_eq!(store.len(), 1);
        let record = store.records().next().unwrap();
        assert_eq!(record.count, 2);
        assert_eq!(store.articles_with_pairs().get("en"), Some(&1));
    }

    #[test]
    fn dates_and_sources_accumulate() {
        let occs = vec![
            occ("en", "IMF", "International Monetary Fund", "a1", 5),
            occ("en", "IMF", "International Monetary Fund", "a2", 2),
            occ("en", "IMF", "International Monetary Fund", "a3", 9),
        ];
        let store = PairStore::aggregate(&occs, aa(&[("en", 3)]));
        let record = store.records().next().unwrap();
        assert_eq!(record.first_date, NaiveDate::from_ymd_opt(2013, 1, 2).unwrap());
        assert_eq!(record.last_date, NaiveDate::from_ymd_opt(2013, 1, 9).unwrap());
        assert_eq!(record.sources.len(), 3);
        assert_eq!(record.categories.get("news"), Some(&3));
    }

    #[test]
    fn merge_with_empty_is_identity() {
        let occs = vec![occ("en", "IMF", "International Monetary Fund", "a1", 1)];
        let store = PairStore::aggregate(&occs, aa(&[("en", 1)]));
        let merged = store.clone().merge(PairStore::new());
        assert_eq!(merged, store);
        let merged = PairStore::new().merge(store.clone());
        assert_eq!(merged, store);
    }

    #[test]
    fn merge_is_commutative() {
        let a = PairStore::aggregate(
            &[
                occ("en", "IMF", "International Monetary Fund", "a1", 1),
                occ("en", "UNO", "United Nations Organisation", "a1", 1),
            ],
            aa(&[("en", 2)]),
        );
        let b = PairStore::aggregate(
            &[occ("de", "EZB", "Europäische Zentralbank", "d1", 4)],
            aa(&[("de", 1)]),
        );
        assert_eq!(a.clone().merge(b.clone()), b.merge(a));
    }

    #[test]
    fn stats_match_hand_computed_fixture() {
        // AA=10, AS=5, PO=15, PU=6; LF-per-SF multiset {3, 2, 1}.
        let mut occs = Vec::new();
        let spec: &[(&str, &str, u64)] = &[
            ("S1", "lf one a", 5),
            ("S1", "lf one b", 3),
            ("S1", "lf one c", 2),
            ("S2", "lf two a", 2),
            ("S2", "lf two b", 1),
            ("S3", "lf three a", 2),
        ];
        let mut article = 0u32;
        for (sf, lf, count) in spec {
            for _ in 0..*count {
                article += 1;
                occs.push(occ("en", sf, lf, &format!("a{article}"), 1));
            }
        }
        assert_eq!(occs.len(), 15);
        // 15 occurrences in 15 distinct articles would give AS=15; the
        // fixture wants AS=5, so reuse five article ids.
        for (i, o) in occs.iter_mut().enumerate() {
            o.article_id = format!("a{}", i % 5);
        }
        let store = PairStore::aggregate(&occs, aa(&[("en", 10)]));
        let stats = store.compute_stats();
        let en = stats.language("en").unwrap();
        assert_eq!(en.articles_analyzed, 10);
        assert_eq!(en.articles_with_pairs, 5);
        assert_eq!(en.unique_pairs, 6);
        assert_eq!(en.pair_occurrences, 15);
        assert!((en.as_over_aa.unwrap() - 0.5).abs() < 1e-12);
        assert!((en.aa_over_pu.unwrap() - 10.0 / 6.0).abs() < 1e-12);
        assert!((en.po_per_100_articles.unwrap() - 150.0).abs() < 1e-12);
        assert!((en.po_over_pu.unwrap() - 2.5).abs() < 1e-12);
        assert!((en.avg_lf_per_sf.unwrap() - 2.0).abs() < 1e-12);
        assert!((en.avg_lf_per_ambiguous_sf.unwrap() - 2.5).abs() < 1e-12);
    }

    #[test]
    fn single_once_seen_pair_sits_in_the_f1_band() {
        let store = PairStore::aggregate(
            &[occ("en", "IMF", "International Monetary Fund", "a1", 1)],
            aa(&[("en", 1)]),
        );
        let stats = store.compute_stats();
        let en = stats.language("en").unwrap();
        assert_eq!(en.frac_pu_f1, Some(1.0));
        assert_eq!(en.frac_pu_f10, Some(0.0));
        assert_eq!(en.frac_pu_f100, Some(0.0));
    }

    #[test]
    fn empty_store_reports_absent_ratios() {
        let stats = PairStore::new().compute_stats();
        assert!(stats.per_language.is_empty());
        assert_eq!(stats.total.articles_analyzed, 0);
        assert_eq!(stats.total.as_over_aa, None);
        assert_eq!(stats.total.avg_lf_per_sf, None);
    }

    #[test]
    fn zero_aa_language_reports_absent_article_ratios() {
        let store = PairStore::aggregate(
            &[occ("en", "IMF", "International Monetary Fund", "a1", 1)],
            BTreeMap::new(),
        );
        let stats = store.compute_stats();
        let en = stats.language("en").unwrap();
        assert_eq!(en.as_over_aa, None);
        assert_eq!(en.po_per_100_articles, None);
        assert_eq!(en.avg_lf_per_sf, Some(1.0));
    }

    #[test]
    fn tsv_export_has_header_and_rows() {
        let store = PairStore::aggregate(
            &[
                occ("en", "IMF", "International Monetary Fund", "a1", 1),
                occ("en", "UNO", "United Nations Organisation", "a1", 1),
            ],
            aa(&[("en", 1)]),
        );
        let mut buf = Vec::new();
        store.export_tsv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 3);
        assert!(text.starts_with("language\tsf\tlf\t"));
    }

    #[test]
    fn tsv_escapes_embedded_tabs() {
        let store = PairStore::aggregate(
            &[occ("en", "AB", "weird\tlong form", "a1", 1)],
            aa(&[("en", 1)]),
        );
        let mut buf = Vec::new();
        store.export_tsv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("weird\\tlong form"));
        let row = text.lines().nth(1).unwrap();
        assert_eq!(row.split('\t').count(), 7);
    }

    #[test]
    fn jsonl_round_trip_is_byte_identical() {
        let store = PairStore::aggregate(
            &[
                occ("en", "IMF", "International Monetary Fund", "a1", 1),
                occ("de", "EZB", "Europäische Zentralbank", "d1", 2),
            ],
            aa(&[("en", 3), ("de", 2)]),
        );
        let mut first = Vec::new();
        store.export_jsonl(&mut first).unwrap();
        let imported = PairStore::import_jsonl(first.as_slice()).unwrap();
        let mut second = Vec::new();
        imported.export_jsonl(&mut second).unwrap();
        assert_eq!(first, second);
        assert_eq!(imported, store);
    }

    fn dicts(entries: &[(&str, &[&str])]) -> Vec<(String, BTreeSet<String>)> {
        entries
            .iter()
            .map(|(cat, words)| {
                (
                    cat.to_string(),
                    words.iter().map(|w| w.to_lowercase()).collect(),
                )
            })
            .collect()
    }

    #[test]
    fn categorizer_matches_whole_words_case_insensitively() {
        let d = dicts(&[("organisation", &["bank", "international", "club"])]);
        assert_eq!(categorize_lf("European Central Bank", &d), "organisation");
        assert_eq!(categorize_lf("International Monetary Fund", &d), "organisation");
        assert_eq!(categorize_lf("Stephan Dorgerloh", &d), "other");
        // "Bankers" is not the whole word "bank".
        assert_eq!(categorize_lf("Bankers Association", &d), "other");
    }

    #[test]
    fn categorizer_respects_priority_order() {
        let d = dicts(&[
            ("organisation", &["agency"]),
            ("programme", &["agency", "programme"]),
        ]);
        assert_eq!(categorize_lf("Space Agency Programme", &d), "organisation");
    }
}
