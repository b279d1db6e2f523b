//! Shared fixtures for the integration and acceptance suites.
#![allow(dead_code)] // not every suite uses every fixture

use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use acrotk::corpus::{read_articles, Article};
use acrotk::filters::Stoplist;

pub fn data_path(relative: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(relative)
}

pub fn load_corpus() -> Vec<Article> {
    let file = File::open(data_path("fixtures/synthetic50.jsonl")).unwrap();
    let (articles, diagnostics) = read_articles(BufReader::new(file)).unwrap();
    assert!(diagnostics.is_empty(), "{diagnostics:?}");
    articles
}

pub fn load_stoplist() -> Stoplist {
    Stoplist::load(data_path("stoplist.txt")).unwrap()
}

pub fn load_aiea_lfs() -> Vec<(String, u64)> {
    let text = std::fs::read_to_string(data_path("fixtures/aiea_lfs.txt")).unwrap();
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| (l.to_string(), 1u64))
        .collect()
}

/// The unique pairs the synthetic corpus must produce, with counts.
/// Hand-derived from the per-article plan behind the fixture.
pub const EXPECTED_PAIRS: &[(&str, &str, &str, u64)] = &[
    ("de", "CDU", "Christlich Demokratische Union", 3),
    ("de", "EZB", "Europäische Zentralbank", 6),
    ("de", "EZB", "Europäischen Zentralbank", 2),
    ("de", "NBC", "Namibische Rundfunkanstalt", 1),
    ("de", "SPD", "Sozialdemokratische Partei Deutschlands", 4),
    ("de", "SPD", "Stephan Dorgerloh", 1),
    ("en", "CAR", "Capital Adequacy Ratio", 1),
    ("en", "CAR", "Central African Republic", 2),
    ("en", "ECB", "European Central Bank", 4),
    ("en", "IMF", "International Monetary Fund", 12),
    ("en", "IMF", "International Monetary Funds", 1),
    ("en", "NATO", "North Atlantic Treaty Organisation", 1),
    ("en", "UNO", "United Nations Organisation", 3),
    ("en", "Uno", "United Nations Organisation", 1),
    ("en", "WHO", "World Health Organization", 5),
    ("fr", "BCE", "Banque centrale européenne", 5),
    ("fr", "CAR", "Collectif d'artistes de reggae", 1),
    ("fr", "ONU", "l'Organisation des Nations Unies", 2),
    ("fr", "ONU", "l'Organisation des Nations unies", 4),
    ("fr", "PS", "Parti socialiste", 3),
];

/// Hand-computed statistics for the synthetic corpus, one row per
/// language plus TOTAL. Ratios are exact rationals evaluated in f64;
/// `None` marks ratios whose denominator is zero.
pub struct ExpectedStats {
    pub language: &'static str,
    pub aa: u64,
    pub selected: u64,
    pub pu: u64,
    pub po: u64,
    pub as_over_aa: f64,
    pub aa_over_pu: f64,
    pub po_per_100: f64,
    pub po_over_pu: f64,
    pub frac_f1: f64,
    pub frac_f10: f64,
    pub frac_f100: f64,
    pub avg_lf_per_sf: f64,
    pub avg_lf_per_ambiguous_sf: f64,
    pub avg_sf_per_lf: f64,
    pub avg_sf_per_ambiguous_lf: Option<f64>,
}

pub fn expected_stats() -> Vec<ExpectedStats> {
    vec![
        ExpectedStats {
            language: "en",
            aa: 20,
            selected: 16,
            pu: 9,
            po: 30,
            as_over_aa: 16.0 / 20.0,
            aa_over_pu: 20.0 / 9.0,
            po_per_100: 150.0,
            po_over_pu: 30.0 / 9.0,
            frac_f1: 4.0 / 9.0,
            frac_f10: 1.0 / 9.0,
            frac_f100: 0.0,
            avg_lf_per_sf: 9.0 / 7.0,
            avg_lf_per_ambiguous_sf: 4.0 / 2.0,
            avg_sf_per_lf: 9.0 / 8.0,
            avg_sf_per_ambiguous_lf: Some(2.0),
        },
        ExpectedStats {
            language: "de",
            aa: 15,
            selected: 10,
            pu: 6,
            po: 17,
            as_over_aa: 10.0 / 15.0,
            aa_over_pu: 15.0 / 6.0,
            po_per_100: 1700.0 / 15.0,
            po_over_pu: 17.0 / 6.0,
            frac_f1: 2.0 / 6.0,
            frac_f10: 0.0,
            frac_f100: 0.0,
            avg_lf_per_sf: 6.0 / 4.0,
            avg_lf_per_ambiguous_sf: 4.0 / 2.0,
            avg_sf_per_lf: 1.0, // 6 pairs over 6 distinct LFs
            avg_sf_per_ambiguous_lf: None,
        },
        ExpectedStats {
            language: "fr",
            aa: 15,
            selected: 8,
            pu: 5,
            po: 15,
            as_over_aa: 8.0 / 15.0,
            aa_over_pu: 15.0 / 5.0,
            po_per_100: 100.0,
            po_over_pu: 15.0 / 5.0,
            frac_f1: 1.0 / 5.0,
            frac_f10: 0.0,
            frac_f100: 0.0,
            avg_lf_per_sf: 5.0 / 4.0,
            avg_lf_per_ambiguous_sf: 2.0,
            avg_sf_per_lf: 1.0, // 5 pairs over 5 distinct LFs
            avg_sf_per_ambiguous_lf: None,
        },
        ExpectedStats {
            language: "TOTAL",
            aa: 50,
            selected: 34,
            pu: 20,
            po: 62,
            as_over_aa: 34.0 / 50.0,
            aa_over_pu: 50.0 / 20.0,
            po_per_100: 124.0,
            po_over_pu: 62.0 / 20.0,
            frac_f1: 7.0 / 20.0,
            frac_f10: 1.0 / 20.0,
            frac_f100: 0.0,
            avg_lf_per_sf: 20.0 / 15.0,
            avg_lf_per_ambiguous_sf: 10.0 / 5.0,
            avg_sf_per_lf: 20.0 / 19.0,
            avg_sf_per_ambiguous_lf: Some(2.0),
        },
    ]
}
