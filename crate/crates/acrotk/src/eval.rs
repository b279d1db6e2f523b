//! Scoring of extraction output against gold annotations, and of
//! clusterings against a gold partition with a recognition/border error
//! taxonomy.
//!
//! Extraction is scored set-wise per article. `exact` mode compares
//! both SF and LF strings after whitespace normalization (runs of
//! whitespace collapse to one space; case is never normalized);
//! `sf-only` compares just the SF.
//!
//! Cluster precision is the fraction of long forms whose gold partition
//! block matches the majority block of their system cluster. Error
//! flags are reported as independent rates: a border-error LF sitting
//! in the right cluster still counts as correctly clustered.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::io::{self, BufRead, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cluster::Cluster;
use crate::corpus::Span;
use crate::error::{Error, Result};
use crate::extractor::PairOccurrence;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchMode {
    Exact,
    SfOnly,
}

impl FromStr for MatchMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "exact" => Ok(MatchMode::Exact),
            "sf-only" => Ok(MatchMode::SfOnly),
            other => Err(format!("unknown match mode {other:?} (exact, sf-only)")),
        }
    }
}

/// Counts plus the derived precision/recall/F1, absent when undefined.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Prf {
    pub tp: u64,
    pub fp: u64,
    pub fn_: u64,
}

impl Prf {
    pub fn precision(&self) -> Option<f64> {
        ratio(self.tp, self.tp + self.fp)
    }

    pub fn recall(&self) -> Option<f64> {
        ratio(self.tp, self.tp + self.fn_)
    }

    pub fn f1(&self) -> Option<f64> {
        let p = self.precision()?;
        let r = self.recall()?;
        if p + r == 0.0 {
            None
        } else {
            Some(2.0 * p * r / (p + r))
        }
    }

    fn add(&mut self, other: Prf) {
        self.tp += other.tp;
        self.fp += other.fp;
        self.fn_ += other.fn_;
    }
}

fn ratio(num: u64, den: u64) -> Option<f64> {
    if den == 0 {
        None
    } else {
        Some(num as f64 / den as f64)
    }
}

/// One gold pair with its spans in the article text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldPair {
    pub sf: String,
    pub lf: String,
    pub sf_span: Span,
    pub lf_span: Span,
}

/// Gold annotations for one article.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldAnnotation {
    pub article_id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub language: Option<String>,
    pub pairs: Vec<GoldPair>,
}

pub fn read_gold_annotations<R: BufRead>(input: R) -> Result<Vec<GoldAnnotation>> {
    let mut gold = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let g: GoldAnnotation =
            serde_json::from_str(trimmed).map_err(|e| Error::format(i + 1, e.to_string()))?;
        gold.push(g);
    }
    Ok(gold)
}

fn normalize_ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn item_key(sf: &str, lf: &str, mode: MatchMode) -> String {
    match mode {
        MatchMode::Exact => format!("{}\u{0}{}", normalize_ws(sf), normalize_ws(lf)),
        MatchMode::SfOnly => normalize_ws(sf),
    }
}

/// Score predictions against gold annotations, pooled over articles.
/// Every predicted article id must be covered by the gold set.
pub fn score_extraction(
    predicted: &[PairOccurrence],
    gold: &[GoldAnnotation],
    mode: MatchMode,
) -> Result<Prf> {
    per_article_prf(predicted, gold, mode).map(|rows| {
        let mut total = Prf::default();
        for (_, prf) in rows {
            total.add(prf);
        }
        total
    })
}

fn per_article_prf(
    predicted: &[PairOccurrence],
    gold: &[GoldAnnotation],
    mode: MatchMode,
) -> Result<Vec<(String, Prf)>> {
    let mut gold_by_id: HashMap<&str, &GoldAnnotation> = HashMap::new();
    for g in gold {
        if gold_by_id.insert(g.article_id.as_str(), g).is_some() {
            return Err(Error::data(format!(
                "duplicate gold annotation for article {:?}",
                g.article_id
            )));
        }
    }
    let mut predicted_by_id: HashMap<&str, HashSet<String>> = HashMap::new();
    for occ in predicted {
        if !gold_by_id.contains_key(occ.article_id.as_str()) {
            return Err(Error::data(format!(
                "predicted article {:?} has no gold annotation",
                occ.article_id
            )));
        }
        predicted_by_id
            .entry(occ.article_id.as_str())
            .or_default()
            .insert(item_key(&occ.sf, &occ.lf, mode));
    }

    let empty = HashSet::new();
    let mut rows = Vec::new();
    for g in gold {
        let gold_set: HashSet<String> = g
            .pairs
            .iter()
            .map(|p| item_key(&p.sf, &p.lf, mode))
            .collect();
        let pred_set = predicted_by_id
            .get(g.article_id.as_str())
            .unwrap_or(&empty);
        let tp = pred_set.intersection(&gold_set).count() as u64;
        rows.push((
            g.article_id.clone(),
            Prf {
                tp,
                fp: pred_set.len() as u64 - tp,
                fn_: gold_set.len() as u64 - tp,
            },
        ));
    }
    Ok(rows)
}

/// Per-language extraction scores plus a pooled TOTAL row. The language
/// of an article comes from its gold record when present, else from any
/// prediction for it, else `"und"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionReport {
    pub rows: Vec<ExtractionRow>,
    pub total: ExtractionRow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionRow {
    pub language: String,
    /// Number of gold pairs evaluated.
    pub n_gold: u64,
    pub prf: Prf,
}

pub fn extraction_report(
    predicted: &[PairOccurrence],
    gold: &[GoldAnnotation],
    mode: MatchMode,
) -> Result<ExtractionReport> {
    let rows = per_article_prf(predicted, gold, mode)?;
    let mut lang_of_pred: HashMap<&str, &str> = HashMap::new();
    for occ in predicted {
        lang_of_pred.insert(occ.article_id.as_str(), occ.language.as_str());
    }

    let mut by_lang: BTreeMap<String, (u64, Prf)> = BTreeMap::new();
    let mut total = (0u64, Prf::default());
    for (article_id, prf) in rows {
        let g = gold.iter().find(|g| g.article_id == article_id).unwrap();
        let language = g
            .language
            .clone()
            .or_else(|| lang_of_pred.get(article_id.as_str()).map(|s| s.to_string()))
            .unwrap_or_else(|| "und".to_string());
        let n_gold = prf.tp + prf.fn_;
        let entry = by_lang.entry(language).or_default();
        entry.0 += n_gold;
        entry.1.add(prf);
        total.0 += n_gold;
        total.1.add(prf);
    }

    Ok(ExtractionReport {
        rows: by_lang
            .into_iter()
            .map(|(language, (n_gold, prf))| ExtractionRow {
                language,
                n_gold,
                prf,
            })
            .collect(),
        total: ExtractionRow {
            language: "TOTAL".to_string(),
            n_gold: total.0,
            prf: total.1,
        },
    })
}

impl ExtractionReport {
    pub fn write_tsv<W: Write>(&self, mut out: W) -> io::Result<()> {
        out.write_all(b"language\tn\ttp\tfp\tfn\tprecision\trecall\tf1\n")?;
        for row in self.rows.iter().chain(std::iter::once(&self.total)) {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                row.language,
                row.n_gold,
                row.prf.tp,
                row.prf.fp,
                row.prf.fn_,
                fmt_opt(row.prf.precision()),
                fmt_opt(row.prf.recall()),
                fmt_opt(row.prf.f1()),
            )?;
        }
        Ok(())
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    match v {
        Some(v) => format!("{v:.6}"),
        None => "-".to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorFlag {
    RecognitionError,
    BorderError,
}

/// Gold clustering for one `(language, sf)` group: the reference
/// partition of its long forms, plus per-LF error flags. Flags are
/// independent of partition membership.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterGoldGroup {
    pub language: String,
    pub sf: String,
    pub clusters: Vec<Vec<String>>,
    #[serde(default)]
    pub flags: BTreeMap<String, Vec<ErrorFlag>>,
}

pub fn read_cluster_gold<R: BufRead>(input: R) -> Result<Vec<ClusterGoldGroup>> {
    let mut groups = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let g: ClusterGoldGroup =
            serde_json::from_str(trimmed).map_err(|e| Error::format(i + 1, e.to_string()))?;
        groups.push(g);
    }
    Ok(groups)
}

/// Table-4-shaped clustering scores.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ClusterEvalReport {
    pub n_unique_lfs: u64,
    pub n_unique_sfs: u64,
    pub n_clusters: u64,
    pub n_clusters_ge2: u64,
    pub precision: Option<f64>,
    pub recognition_error_rate: Option<f64>,
    pub border_error_rate: Option<f64>,
}

#[derive(Default)]
struct ClusterTally {
    lfs: u64,
    sfs: u64,
    clusters: u64,
    clusters_ge2: u64,
    correct: u64,
    recognition_flags: u64,
    border_flags: u64,
}

impl ClusterTally {
    fn add(&mut self, other: &ClusterTally) {
        self.lfs += other.lfs;
        self.sfs += other.sfs;
        self.clusters += other.clusters;
        self.clusters_ge2 += other.clusters_ge2;
        self.correct += other.correct;
        self.recognition_flags += other.recognition_flags;
        self.border_flags += other.border_flags;
    }

    fn report(&self) -> ClusterEvalReport {
        ClusterEvalReport {
            n_unique_lfs: self.lfs,
            n_unique_sfs: self.sfs,
            n_clusters: self.clusters,
            n_clusters_ge2: self.clusters_ge2,
            precision: ratio(self.correct, self.lfs),
            recognition_error_rate: ratio(self.recognition_flags, self.lfs),
            border_error_rate: ratio(self.border_flags, self.lfs),
        }
    }
}

fn tally_group(system: &[&Cluster], gold: &ClusterGoldGroup) -> Result<ClusterTally> {
    // Gold label: index of the partition block holding the LF.
    let mut label_of: HashMap<&str, usize> = HashMap::new();
    for (label, block) in gold.clusters.iter().enumerate() {
        for lf in block {
            if label_of.insert(lf.as_str(), label).is_some() {
                return Err(Error::data(format!(
                    "gold for ({}, {}): {:?} appears in two blocks",
                    gold.language, gold.sf, lf
                )));
            }
        }
    }
    let system_lfs: BTreeSet<&str> = system
        .iter()
        .flat_map(|c| c.members.iter().map(|m| m.lf.as_str()))
        .collect();
    let gold_lfs: BTreeSet<&str> = label_of.keys().copied().collect();
    if system_lfs != gold_lfs {
        return Err(Error::data(format!(
            "coverage mismatch for ({}, {}): system and gold long-form sets differ",
            gold.language, gold.sf
        )));
    }

    let mut tally = ClusterTally {
        sfs: 1,
        ..ClusterTally::default()
    };
    for cluster in system {
        if cluster.members.is_empty() {
            continue;
        }
        tally.clusters += 1;
        if cluster.members.len() >= 2 {
            tally.clusters_ge2 += 1;
        }
        // Majority gold label of this cluster; ties go to the smallest
        // block index.
        let mut votes: BTreeMap<usize, u64> = BTreeMap::new();
        for member in &cluster.members {
            *votes.entry(label_of[member.lf.as_str()]).or_insert(0) += 1;
        }
        let majority = votes
            .iter()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
            .map(|(label, _)| *label)
            .unwrap();
        for member in &cluster.members {
            tally.lfs += 1;
            if label_of[member.lf.as_str()] == majority {
                tally.correct += 1;
            }
        }
    }
    for flags in gold.flags.values() {
        if flags.contains(&ErrorFlag::RecognitionError) {
            tally.recognition_flags += 1;
        }
        if flags.contains(&ErrorFlag::BorderError) {
            tally.border_flags += 1;
        }
    }
    Ok(tally)
}

/// Score a system clustering against gold groups, pooled over groups.
pub fn score_clusters(system: &[Cluster], gold: &[ClusterGoldGroup]) -> Result<ClusterEvalReport> {
    Ok(cluster_report(system, gold)?.total.1)
}

/// Per-language rows plus a pooled TOTAL.
pub struct ClusterReport {
    pub rows: Vec<(String, ClusterEvalReport)>,
    pub total: (String, ClusterEvalReport),
}

pub fn cluster_report(system: &[Cluster], gold: &[ClusterGoldGroup]) -> Result<ClusterReport> {
    let mut seen: HashSet<(&str, &str)> = HashSet::new();
    for g in gold {
        if !seen.insert((g.language.as_str(), g.sf.as_str())) {
            return Err(Error::data(format!(
                "duplicate gold group ({}, {})",
                g.language, g.sf
            )));
        }
    }
    for cluster in system {
        if !seen.contains(&(cluster.language.as_str(), cluster.sf.as_str())) {
            return Err(Error::data(format!(
                "system cluster ({}, {}) has no gold group",
                cluster.language, cluster.sf
            )));
        }
    }

    let mut by_lang: BTreeMap<String, ClusterTally> = BTreeMap::new();
    let mut total = ClusterTally::default();
    for g in gold {
        let members: Vec<&Cluster> = system
            .iter()
            .filter(|c| c.language == g.language && c.sf == g.sf)
            .collect();
        let tally = tally_group(&members, g)?;
        by_lang.entry(g.language.clone()).or_default().add(&tally);
        total.add(&tally);
    }
    Ok(ClusterReport {
        rows: by_lang
            .into_iter()
            .map(|(lang, tally)| (lang, tally.report()))
            .collect(),
        total: ("TOTAL".to_string(), total.report()),
    })
}

impl ClusterReport {
    pub fn write_tsv<W: Write>(&self, mut out: W) -> io::Result<()> {
        out.write_all(
            b"language\tn_unique_lfs\tn_unique_sfs\tn_clusters\tn_clusters_ge2\t\
              precision\trecognition_error\tborder_error\n",
        )?;
        for (language, r) in self.rows.iter().chain(std::iter::once(&self.total)) {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                language,
                r.n_unique_lfs,
                r.n_unique_sfs,
                r.n_clusters,
                r.n_clusters_ge2,
                fmt_opt(r.precision),
                fmt_opt(r.recognition_error_rate),
                fmt_opt(r.border_error_rate),
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::ClusterMember;
    use chrono::NaiveDate;

    fn occ(article_id: &str, language: &str, sf: &str, lf: &str) -> PairOccurrence {
        PairOccurrence {
            sf: sf.into(),
            lf: lf.into(),
            article_id: article_id.into(),
            language: language.into(),
            date: NaiveDate::from_ymd_opt(2013, 1, 1).unwrap(),
            source: "s".into(),
            category: String::new(),
            sf_offsets: Span::new(0, 1),
            lf_offsets: Span::new(0, 1),
        }
    }

    fn gold(article_id: &str, language: &str, pairs: &[(&str, &str)]) -> GoldAnnotation {
        GoldAnnotation {
            article_id: article_id.into(),
            language: Some(language.into()),
            pairs: pairs
                .iter()
                .map(|(sf, lf)| GoldPair {
                    sf: sf.to_string(),
                    lf: lf.to_string(),
                    sf_span: Span::new(0, 1),
                    lf_span: Span::new(0, 1),
                })
                .collect(),
        }
    }

    #[test]
    fn perfect_predictions_score_one() {
        let predicted = vec![occ("a1", "en", "IMF", "International Monetary Fund")];
        let g = vec![gold("a1", "en", &[("IMF", "International Monetary Fund")])];
        let prf = score_extraction(&predicted, &g, MatchMode::Exact).unwrap();
        assert_eq!(prf.precision(), Some(1.0));
        assert_eq!(prf.recall(), Some(1.0));
        assert_eq!(prf.f1(), Some(1.0));
    }

    #[test]
    fn no_predictions_means_zero_recall_absent_precision() {
        let g = vec![gold("a1", "en", &[("IMF", "International Monetary Fund")])];
        let prf = score_extraction(&[], &g, MatchMode::Exact).unwrap();
        assert_eq!(prf.precision(), None);
        assert_eq!(prf.recall(), Some(0.0));
        assert_eq!(prf.f1(), None);
    }

    #[test]
    fn counts_give_hand_computed_prf() {
        // 3 predicted, 2 correct, 4 gold.
        let predicted = vec![
            occ("a1", "en", "AA", "alpha alpha"),
            occ("a1", "en", "BB", "beta beta"),
            occ("a1", "en", "XX", "wrong guess"),
        ];
        let g = vec![gold(
            "a1",
            "en",
            &[
                ("AA", "alpha alpha"),
                ("BB", "beta beta"),
                ("CC", "gamma gamma"),
                ("DD", "delta delta"),
            ],
        )];
        let prf = score_extraction(&predicted, &g, MatchMode::Exact).unwrap();
        assert_eq!((prf.tp, prf.fp, prf.fn_), (2, 1, 2));
        assert!((prf.precision().unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert!((prf.recall().unwrap() - 0.5).abs() < 1e-12);
        assert!((prf.f1().unwrap() - 4.0 / 7.0).abs() < 1e-12);
    }

    #[test]
    fn swapping_predicted_and_gold_swaps_p_and_r() {
        let predicted = vec![
            occ("a1", "en", "AA", "alpha alpha"),
            occ("a1", "en", "XX", "wrong guess"),
        ];
        let g = vec![gold("a1", "en", &[("AA", "alpha alpha"), ("BB", "beta beta")])];
        let prf = score_extraction(&predicted, &g, MatchMode::Exact).unwrap();
        let swapped_pred = vec![occ("a1", "en", "AA", "alpha alpha"), occ("a1", "en", "BB", "beta beta")];
        let swapped_gold = vec![gold("a1", "en", &[("AA", "alpha alpha"), ("XX", "wrong guess")])];
        let swapped = score_extraction(&swapped_pred, &swapped_gold, MatchMode::Exact).unwrap();
        assert_eq!(prf.precision(), swapped.recall());
        assert_eq!(prf.recall(), swapped.precision());
    }

    #[test]
    fn whitespace_is_normalized_but_case_is_not() {
        let predicted = vec![occ("a1", "en", "IMF", "International  Monetary\tFund")];
        let g = vec![gold("a1", "en", &[("IMF", "International Monetary Fund")])];
        let prf = score_extraction(&predicted, &g, MatchMode::Exact).unwrap();
        assert_eq!(prf.tp, 1);

        let predicted = vec![occ("a1", "en", "IMF", "international monetary fund")];
        let prf = score_extraction(&predicted, &g, MatchMode::Exact).unwrap();
        assert_eq!(prf.tp, 0);
    }

    #[test]
    fn sf_only_mode_ignores_the_lf() {
        let predicted = vec![occ("a1", "en", "IMF", "a different long form")];
        let g = vec![gold("a1", "en", &[("IMF", "International Monetary Fund")])];
        assert_eq!(
            score_extraction(&predicted, &g, MatchMode::Exact)
                .unwrap()
                .tp,
            0
        );
        assert_eq!(
            score_extraction(&predicted, &g, MatchMode::SfOnly)
                .unwrap()
                .tp,
            1
        );
    }

    #[test]
    fn prf_values_stay_in_range_and_f1_is_harmonic() {
        for tp in 0..6u64 {
            for fp in 0..6u64 {
                for fn_ in 0..6u64 {
                    let prf = Prf { tp, fp, fn_ };
                    let inside = |v: Option<f64>| v.is_none_or(|v| (0.0..=1.0).contains(&v));
                    assert!(inside(prf.precision()));
                    assert!(inside(prf.recall()));
                    assert!(inside(prf.f1()));
                    if let (Some(p), Some(r), Some(f1)) =
                        (prf.precision(), prf.recall(), prf.f1())
                    {
                        assert!(f1 <= p.max(r) + 1e-12);
                        assert!((f1 - 2.0 * p * r / (p + r)).abs() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn unknown_predicted_article_is_fatal() {
        let predicted = vec![occ("a9", "en", "IMF", "International Monetary Fund")];
        let g = vec![gold("a1", "en", &[("IMF", "International Monetary Fund")])];
        assert!(score_extraction(&predicted, &g, MatchMode::Exact).is_err());
    }

    fn sys_cluster(language: &str, sf: &str, lfs: &[&str]) -> Cluster {
        Cluster {
            language: language.into(),
            sf: sf.into(),
            representative: lfs[0].to_string(),
            members: lfs
                .iter()
                .map(|lf| ClusterMember {
                    lf: lf.to_string(),
                    count: 1,
                })
                .collect(),
        }
    }

    fn gold_group(
        language: &str,
        sf: &str,
        blocks: &[&[&str]],
        flags: &[(&str, ErrorFlag)],
    ) -> ClusterGoldGroup {
        ClusterGoldGroup {
            language: language.into(),
            sf: sf.into(),
            clusters: blocks
                .iter()
                .map(|b| b.iter().map(|s| s.to_string()).collect())
                .collect(),
            flags: flags.iter().fold(BTreeMap::new(), |mut m, (lf, flag)| {
                m.entry(lf.to_string()).or_insert_with(Vec::new).push(*flag);
                m
            }),
        }
    }

    #[test]
    fn identical_partition_scores_one() {
        let system = vec![
            sys_cluster("en", "CAR", &["central african republic", "Central African Republic"]),
            sys_cluster("en", "CAR", &["capital adequacy ratio"]),
        ];
        let gold = vec![gold_group(
            "en",
            "CAR",
            &[
                &["central african republic", "Central African Republic"],
                &["capital adequacy ratio"],
            ],
            &[],
        )];
        let report = score_clusters(&system, &gold).unwrap();
        assert_eq!(report.precision, Some(1.0));
        assert_eq!(report.recognition_error_rate, Some(0.0));
        assert_eq!(report.border_error_rate, Some(0.0));
        assert_eq!(report.n_unique_lfs, 3);
        assert_eq!(report.n_unique_sfs, 1);
        assert_eq!(report.n_clusters, 2);
        assert_eq!(report.n_clusters_ge2, 1);
    }

    #[test]
    fn border_error_flag_does_not_change_precision() {
        let system = vec![sys_cluster("en", "IAEA", &["a b", "a b c"])];
        let gold = vec![gold_group(
            "en",
            "IAEA",
            &[&["a b", "a b c"]],
            &[("a b c", ErrorFlag::BorderError)],
        )];
        let report = score_clusters(&system, &gold).unwrap();
        assert_eq!(report.precision, Some(1.0));
        assert_eq!(report.border_error_rate, Some(0.5));
        assert_eq!(report.recognition_error_rate, Some(0.0));
    }

    #[test]
    fn merged_halves_score_half() {
        let system = vec![sys_cluster("en", "SF", &["one a", "one b", "two a", "two b"])];
        let gold = vec![gold_group(
            "en",
            "SF",
            &[&["one a", "one b"], &["two a", "two b"]],
            &[],
        )];
        let report = score_clusters(&system, &gold).unwrap();
        assert_eq!(report.precision, Some(0.5));
    }

    #[test]
    fn error_rates_ignore_the_clustering() {
        let gold = vec![gold_group(
            "en",
            "SF",
            &[&["one a", "one b"]],
            &[("one a", ErrorFlag::RecognitionError)],
        )];
        let merged = vec![sys_cluster("en", "SF", &["one a", "one b"])];
        let split = vec![
            sys_cluster("en", "SF", &["one a"]),
            sys_cluster("en", "SF", &["one b"]),
        ];
        let a = score_clusters(&merged, &gold).unwrap();
        let b = score_clusters(&split, &gold).unwrap();
        assert_eq!(a.recognition_error_rate, b.recognition_error_rate);
        assert_eq!(a.recognition_error_rate, Some(0.5));
    }

    #[test]
    fn coverage_mismatch_is_fatal() {
        let system = vec![sys_cluster("en", "SF", &["one a"])];
        let gold = vec![gold_group("en", "SF", &[&["one a", "one b"]], &[])];
        assert!(score_clusters(&system, &gold).is_err());
    }

    #[test]
    fn gold_round_trips_through_jsonl() {
        let g = gold_group(
            "it",
            "AIEA",
            &[&["agenzia a", "agenzia b"], &["atomic agency"]],
            &[("agenzia b", ErrorFlag::BorderError)],
        );
        let line = serde_json::to_string(&g).unwrap();
        let back: Vec<ClusterGoldGroup> = read_cluster_gold(line.as_bytes()).unwrap();
        assert_eq!(back, vec![g]);
        assert!(line.contains("border_error"));
    }
}
