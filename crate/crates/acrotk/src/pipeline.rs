//! End-to-end extraction: parse articles, extract pairs, aggregate.
//!
//! Parallelism is per-article sharding: each shard builds its own
//! [`PairStore`] and the shards merge afterwards, which the merge
//! contract guarantees is equivalent to a single pass. Occurrences are
//! concatenated in shard order, so serial and parallel runs produce
//! identical output.

use std::collections::BTreeMap;
use std::io::{self, BufRead};

use crate::corpus::{read_articles, Article, Diagnostic};
use crate::extractor::{extract_pairs_detailed, PairOccurrence, RejectedCandidate};
use crate::filters::Stoplist;
use crate::store::PairStore;

#[derive(Debug, Clone)]
pub struct ExtractOptions {
    /// Number of article shards processed concurrently (>= 1).
    pub parallelism: usize,
    /// Restrict to one language code.
    pub language: Option<String>,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        ExtractOptions {
            parallelism: 1,
            language: None,
        }
    }
}

pub struct ExtractOutcome {
    pub occurrences: Vec<PairOccurrence>,
    pub store: PairStore,
    pub rejects: Vec<RejectedCandidate>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Extract pairs and the reject log from a slice of articles, sharded
/// over `parallelism` threads. Output order matches input order.
pub fn extract_articles(
    articles: &[Article],
    stoplist: &Stoplist,
    parallelism: usize,
) -> (Vec<PairOccurrence>, Vec<RejectedCandidate>) {
    let parallelism = parallelism.max(1).min(articles.len().max(1));
    if parallelism == 1 {
        let mut occurrences = Vec::new();
        let mut rejects = Vec::new();
        for article in articles {
            let (occ, rej) = extract_pairs_detailed(article, stoplist);
            occurrences.extend(occ);
            rejects.extend(rej);
        }
        return (occurrences, rejects);
    }

    let chunk_size = articles.len().div_ceil(parallelism);
    let chunks: Vec<&[Article]> = articles.chunks(chunk_size).collect();
    let results: Vec<(Vec<PairOccurrence>, Vec<RejectedCandidate>)> =
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|chunk| {
                    scope.spawn(move || {
                        let mut occurrences = Vec::new();
                        let mut rejects = Vec::new();
                        for article in chunk {
                            let (occ, rej) = extract_pairs_detailed(article, stoplist);
                            occurrences.extend(occ);
                            rejects.extend(rej);
                        }
                        (occurrences, rejects)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });

    let mut occurrences = Vec::new();
    let mut rejects = Vec::new();
    for (occ, rej) in results {
        occurrences.extend(occ);
        rejects.extend(rej);
    }
    (occurrences, rejects)
}

/// Per-language article tally (the AA counters).
pub fn tally_articles(articles: &[Article]) -> BTreeMap<String, u64> {
    let mut tally = BTreeMap::new();
    for article in articles {
        *tally.entry(article.language.clone()).or_insert(0) += 1;
    }
    tally
}

/// Read a corpus stream and run the whole extraction pipeline.
pub fn extract_corpus<R: BufRead>(
    input: R,
    stoplist: &Stoplist,
    options: &ExtractOptions,
) -> io::Result<ExtractOutcome> {
    let (mut articles, diagnostics) = read_articles(input)?;
    if let Some(lang) = &options.language {
        articles.retain(|a| &a.language == lang);
    }
    let (occurrences, rejects) = extract_articles(&articles, stoplist, options.parallelism);
    let store = PairStore::aggregate(&occurrences, tally_articles(&articles));
    Ok(ExtractOutcome {
        occurrences,
        store,
        rejects,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::NaiveDate;

    fn article(id: &str, language: &str, text: &str) -> Article {
        Article {
            id: id.into(),
            language: language.into(),
            date: NaiveDate::from_ymd_opt(2013, 1, 1).unwrap(),
            source: "s".into(),
            category: String::new(),
            text: text.into(),
        }
    }

    #[test]
    fn parallel_extraction_matches_serial() {
        let articles: Vec<Article> = (0..37)
            .map(|i| {
                article(
                    &format!("a{i}"),
                    if i % 2 == 0 { "en" } else { "de" },
                    "The International Monetary Fund (IMF) lent. Die Europäische Zentralbank (EZB) auch.",
                )
            })
            .collect();
        let stop = Stoplist::empty();
        let (serial, _) = extract_articles(&articles, &stop, 1);
        for p in [2, 3, 4, 8] {
            let (parallel, _) = extract_articles(&articles, &stop, p);
            assert_eq!(serial, parallel, "parallelism {p}");
        }
    }

    #[test]
    fn language_filter_restricts_everything() {
        let input = concat!(
            r#"{"id":"a1","language":"en","date":"2013-01-01","source":"s","category":"","text":"The United Nations (UN) met."}"#,
            "\n",
            r#"{"id":"d1","language":"de","date":"2013-01-01","source":"s","category":"","text":"Stephan Dorgerloh (SPD) sagte."}"#,
        );
        let outcome = extract_corpus(
            std::io::Cursor::new(input),
            &Stoplist::empty(),
            &ExtractOptions {
                parallelism: 1,
                language: Some("de".into()),
            },
        )
        .unwrap();
        assert_eq!(outcome.occurrences.len(), 1);
        assert_eq!(outcome.occurrences[0].language, "de");
        assert_eq!(outcome.store.articles_analyzed().get("en"), None);
        assert_eq!(outcome.store.articles_analyzed().get("de"), Some(&1));
    }
}
