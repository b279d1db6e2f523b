//! Grouping of long-form variants that share a short form.
//!
//! Long forms of one `(language, sf)` group are compared with a
//! normalized Levenshtein distance: the number of insertions, deletions
//! and substitutions divided by the char count of the longer string,
//! giving `D` in `[0, 1]`. Similarity is `S = 1 - D`, so `S = 1` exactly
//! for equal strings. Comparison is case-sensitive; reuniting case
//! variants is the clustering's job, not the metric's.
//!
//! Groups are clustered bottom-up: start from singletons and repeatedly
//! merge the pair of clusters whose union has the highest mean pairwise
//! similarity (over all pairs of the union, within and across), stopping
//! once no merge reaches the intra-cluster similarity threshold. The
//! threshold is configured per language; each cluster is represented by
//! its most frequent long form.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::store::PairStore;

/// Levenshtein edit distance over Unicode scalar values, case-sensitive.
pub fn edit_distance(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    if a.is_empty() {
        return b.len();
    }
    if b.is_empty() {
        return a.len();
    }
    // Single-row DP.
    let mut row: Vec<usize> = (0..=b.len()).collect();
    for (i, &ca) in a.iter().enumerate() {
        let mut diag = row[0];
        row[0] = i + 1;
        for (j, &cb) in b.iter().enumerate() {
            let cost = if ca == cb { diag } else { diag + 1 };
            diag = row[j + 1];
            row[j + 1] = cost.min(row[j] + 1).min(diag + 1);
        }
    }
    row[b.len()]
}

/// Edit distance divided by the length of the longer string.
/// Two empty strings have distance 0.
pub fn normalized_distance(a: &str, b: &str) -> f64 {
    let longer = a.chars().count().max(b.chars().count());
    if longer == 0 {
        return 0.0;
    }
    edit_distance(a, b) as f64 / longer as f64
}

/// `S = 1 - D`: 1 for equal strings, 0 for maximally different ones.
pub fn similarity(a: &str, b: &str) -> f64 {
    1.0 - normalized_distance(a, b)
}

/// Pairwise similarities for an ordered list of long forms.
#[derive(Debug, Clone)]
pub struct SimilarityMatrix {
    pub items: Vec<String>,
    values: Vec<f64>, // row-major n*n
}

impl SimilarityMatrix {
    pub fn build(items: &[String]) -> Self {
        let n = items.len();
        let mut values = vec![1.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let s = similarity(&items[i], &items[j]);
                values[i * n + j] = s;
                values[j * n + i] = s;
            }
        }
        SimilarityMatrix {
            items: items.to_vec(),
            values,
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.len() + j]
    }
}

/// Per-language intra-cluster similarity thresholds.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterConfig {
    pub default_threshold: f64,
    pub per_language: BTreeMap<String, f64>,
}

pub const DEFAULT_THRESHOLD: f64 = 0.8;

impl Default for ClusterConfig {
    fn default() -> Self {
        ClusterConfig {
            default_threshold: DEFAULT_THRESHOLD,
            per_language: BTreeMap::new(),
        }
    }
}

impl ClusterConfig {
    /// Parse a config file of `language=threshold` lines; the key
    /// `default` sets the threshold for unlisted languages.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let file = File::open(path.as_ref())?;
        let mut config = ClusterConfig::default();
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::format(i + 1, "expected language=threshold"))?;
            let t: f64 = value
                .trim()
                .parse()
                .map_err(|_| Error::format(i + 1, format!("bad threshold {:?}", value.trim())))?;
            if !(0.0..=1.0).contains(&t) {
                return Err(Error::format(i + 1, "threshold outside [0, 1]"));
            }
            match key.trim() {
                "default" => config.default_threshold = t,
                lang => {
                    config.per_language.insert(lang.to_string(), t);
                }
            }
        }
        Ok(config)
    }

    pub fn threshold_for(&self, language: &str) -> f64 {
        self.per_language
            .get(language)
            .copied()
            .unwrap_or(self.default_threshold)
    }
}

/// One long-form variant with its corpus frequency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterMember {
    pub lf: String,
    pub count: u64,
}

/// A group of long-form variants sharing one short form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cluster {
    pub language: String,
    pub sf: String,
    pub representative: String,
    pub members: Vec<ClusterMember>,
}

/// Group-average agglomeration. Returns the partition of `members` as
/// lists of input indices, ordered by smallest member index. Merge ties
/// are broken towards the smallest pair of cluster ids in input order.
pub fn cluster_long_forms(members: &[(String, u64)], threshold: f64) -> Vec<Vec<usize>> {
    let n = members.len();
    if n == 0 {
        return Vec::new();
    }
    let items: Vec<String> = members.iter().map(|(lf, _)| lf.clone()).collect();
    let sim = SimilarityMatrix::build(&items);

    // Active clusters with cached pair sums; cross[i][j] is the sum of
    // similarities across clusters i and j.
    struct Active {
        id: usize, // smallest member index, for tie-breaking
        members: Vec<usize>,
        internal_sum: f64, // sum over unordered within-pairs
    }
    let mut clusters: Vec<Active> = (0..n)
        .map(|i| Active {
            id: i,
            members: vec![i],
            internal_sum: 0.0,
        })
        .collect();
    let mut cross: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 0.0 } else { sim.get(i, j) }).collect())
        .collect();

    loop {
        if clusters.len() < 2 {
            break;
        }
        // (avg, lo_id, hi_id, position i, position j)
        let mut best: Option<(f64, usize, usize, usize, usize)> = None;
        for i in 0..clusters.len() {
            for j in (i + 1)..clusters.len() {
                let a = &clusters[i];
                let b = &clusters[j];
                let size = a.members.len() + b.members.len();
                let pairs = (size * (size - 1) / 2) as f64;
                let avg = (a.internal_sum + b.internal_sum + cross[i][j]) / pairs;
                let (lo, hi) = if a.id < b.id { (a.id, b.id) } else { (b.id, a.id) };
                let better = match best {
                    None => true,
                    Some((bavg, blo, bhi, _, _)) => {
                        avg > bavg || (avg == bavg && (lo, hi) < (blo, bhi))
                    }
                };
                if better {
                    best = Some((avg, lo, hi, i, j));
                }
            }
        }
        let Some((avg, _, _, i, j)) = best else { break };
        if avg < threshold {
            break;
        }
        // Merge j into i, drop j.
        let removed = clusters.remove(j);
        let merged_cross = cross[i][j];
        #[allow(clippy::needless_range_loop)] // k indexes three rows at once
        for k in 0..cross.len() {
            if k != i && k != j {
                cross[i][k] += cross[j][k];
                cross[k][i] = cross[i][k];
            }
        }
        cross.remove(j);
        for row in cross.iter_mut() {
            row.remove(j);
        }
        let target = &mut clusters[i];
        target.internal_sum += removed.internal_sum + merged_cross;
        target.members.extend(removed.members);
        target.id = target.id.min(removed.id);
    }

    let mut partition: Vec<Vec<usize>> = clusters
        .into_iter()
        .map(|c| {
            let mut m = c.members;
            m.sort_unstable();
            m
        })
        .collect();
    partition.sort_by_key(|m| m[0]);
    partition
}

/// Most frequent member; ties broken by shortest LF, then lexicographic.
pub fn representative(members: &[(String, u64)]) -> &str {
    assert!(!members.is_empty(), "representative of an empty cluster");
    let mut best = 0;
    for (i, (lf, count)) in members.iter().enumerate().skip(1) {
        let (blf, bcount) = (&members[best].0, members[best].1);
        let better = match count.cmp(&bcount) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => {
                match lf.chars().count().cmp(&blf.chars().count()) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal => lf < blf,
                }
            }
        };
        if better {
            best = i;
        }
    }
    &members[best].0
}

/// Cluster one `(language, sf)` group into full records.
pub fn cluster_group(
    language: &str,
    sf: &str,
    members: &[(String, u64)],
    threshold: f64,
) -> Vec<Cluster> {
    cluster_long_forms(members, threshold)
        .into_iter()
        .map(|indices| {
            let subset: Vec<(String, u64)> =
                indices.iter().map(|&i| members[i].clone()).collect();
            let representative = representative(&subset).to_string();
            let mut cluster_members: Vec<ClusterMember> = subset
                .into_iter()
                .map(|(lf, count)| ClusterMember { lf, count })
                .collect();
            cluster_members.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| a.lf.cmp(&b.lf)));
            Cluster {
                language: language.to_string(),
                sf: sf.to_string(),
                representative,
                members: cluster_members,
            }
        })
        .collect()
}

/// Cluster every `(language, sf)` group of a store, each at its
/// language's threshold. Output is sorted by (language, sf,
/// representative).
pub fn cluster_store(store: &PairStore, config: &ClusterConfig) -> Vec<Cluster> {
    let mut out = Vec::new();
    for ((language, sf), members) in store.lf_groups() {
        let threshold = config.threshold_for(&language);
        out.extend(cluster_group(&language, &sf, &members, threshold));
    }
    out.sort_by(|a, b| {
        (&a.language, &a.sf, &a.representative).cmp(&(&b.language, &b.sf, &b.representative))
    });
    out
}

/// One JSON record per cluster: `{language, sf, representative, members}`.
pub fn write_clusters_jsonl<W: Write>(clusters: &[Cluster], mut out: W) -> io::Result<()> {
    for cluster in clusters {
        serde_json::to_writer(&mut out, cluster)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn read_clusters_jsonl<R: BufRead>(input: R) -> Result<Vec<Cluster>> {
    let mut clusters = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let cluster: Cluster =
            serde_json::from_str(trimmed).map_err(|e| Error::format(i + 1, e.to_string()))?;
        clusters.push(cluster);
    }
    Ok(clusters)
}
