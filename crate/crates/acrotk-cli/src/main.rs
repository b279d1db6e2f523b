//! Batch front-end for the acronym pair pipeline:
//! extract -> stats/export -> cluster -> evaluate -> categorize.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use acrotk::cluster::{cluster_store, read_clusters_jsonl, write_clusters_jsonl, ClusterConfig};
use acrotk::eval::{
    cluster_report, extraction_report, read_cluster_gold, read_gold_annotations, MatchMode,
};
use acrotk::extractor::{read_occurrences_jsonl, write_occurrences_jsonl};
use acrotk::filters::Stoplist;
use acrotk::pipeline::{extract_corpus, ExtractOptions};
use acrotk::store::{CategoryDictionaries, PairStore};

#[derive(Parser)]
#[command(
    name = "acrotk",
    about = "Recognize, aggregate and cluster acronym pairs in multilingual news text",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extract SF-LF pairs from an article stream
    Extract(ExtractArgs),
    /// Compute per-language corpus statistics from a pair store
    Stats(StatsArgs),
    /// Cluster long-form variants per short form
    Cluster(ClusterArgs),
    /// Score extraction output against gold annotations
    EvalExtract(EvalExtractArgs),
    /// Score a clustering against a gold partition
    EvalCluster(EvalClusterArgs),
    /// Tag long forms with dictionary-based categories
    Categorize(CategorizeArgs),
}

#[derive(Args)]
struct ExtractArgs {
    /// Articles, one JSON record per line
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Stop word list, one entry per line
    #[arg(long, value_name = "FILE")]
    stoplist: PathBuf,
    /// Aggregated unique pairs as TSV
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
    /// Raw occurrences as jsonl
    #[arg(long, value_name = "FILE")]
    occurrences: Option<PathBuf>,
    /// Aggregated pair store as jsonl (input to stats/cluster/categorize)
    #[arg(long, value_name = "FILE")]
    store: Option<PathBuf>,
    /// Filter-rejected candidates as TSV
    #[arg(long, value_name = "FILE")]
    reject_log: Option<PathBuf>,
    /// Article shards processed concurrently
    #[arg(long, short = 'p', default_value_t = 1)]
    parallel: usize,
    /// Restrict to one language code
    #[arg(long, value_name = "XX")]
    lang: Option<String>,
}

#[derive(Args)]
struct StatsArgs {
    /// Pair store (jsonl) written by extract --store
    #[arg(long, value_name = "FILE")]
    store: PathBuf,
    /// Statistics table as TSV
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
    #[arg(long, value_name = "XX")]
    lang: Option<String>,
}

#[derive(Args)]
struct ClusterArgs {
    #[arg(long, value_name = "FILE")]
    store: PathBuf,
    /// Threshold config: `language=threshold` lines plus `default=`
    #[arg(long, value_name = "FILE")]
    thresholds: PathBuf,
    /// Clusters as jsonl
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
    #[arg(long, value_name = "XX")]
    lang: Option<String>,
}

#[derive(Args)]
struct EvalExtractArgs {
    /// Predicted occurrences (jsonl)
    #[arg(long, value_name = "FILE")]
    pred: PathBuf,
    /// Gold annotations (jsonl)
    #[arg(long, value_name = "FILE")]
    gold: PathBuf,
    /// Report as TSV
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
    /// exact | sf-only
    #[arg(long, default_value = "exact")]
    mode: MatchMode,
    #[arg(long, value_name = "XX")]
    lang: Option<String>,
}

#[derive(Args)]
struct EvalClusterArgs {
    /// System clusters (jsonl)
    #[arg(long, value_name = "FILE")]
    system: PathBuf,
    /// Gold cluster partition (jsonl)
    #[arg(long, value_name = "FILE")]
    gold: PathBuf,
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
    #[arg(long, value_name = "XX")]
    lang: Option<String>,
}

#[derive(Args)]
struct CategorizeArgs {
    #[arg(long, value_name = "FILE")]
    store: PathBuf,
    /// Directory of <language>.<category>.txt word lists
    #[arg(long, value_name = "DIR")]
    dicts: PathBuf,
    /// Category-annotated pairs as TSV
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
    #[arg(long, value_name = "XX")]
    lang: Option<String>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(err) = run(cli) {
        eprintln!("error: {err:#}");
        std::process::exit(2);
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Extract(args) => cmd_extract(args),
        Command::Stats(args) => cmd_stats(args),
        Command::Cluster(args) => cmd_cluster(args),
        Command::EvalExtract(args) => cmd_eval_extract(args),
        Command::EvalCluster(args) => cmd_eval_cluster(args),
        Command::Categorize(args) => cmd_categorize(args),
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    Ok(BufReader::new(
        File::open(path).with_context(|| format!("cannot open {}", path.display()))?,
    ))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(
        File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
    ))
}

fn load_store(path: &Path, lang: Option<&str>) -> Result<PairStore> {
    let store = PairStore::import_jsonl(open(path)?)
        .with_context(|| format!("cannot read store {}", path.display()))?;
    Ok(match lang {
        Some(lang) => store.filter_language(lang),
        None => store,
    })
}

fn cmd_extract(args: ExtractArgs) -> Result<()> {
    let stoplist = Stoplist::load(&args.stoplist)
        .with_context(|| format!("cannot read stoplist {}", args.stoplist.display()))?;
    if stoplist.is_empty() {
        eprintln!(
            "warning: stoplist {} has no entries",
            args.stoplist.display()
        );
    }
    let options = ExtractOptions {
        parallelism: args.parallel.max(1),
        language: args.lang,
    };
    let outcome = extract_corpus(open(&args.input)?, &stoplist, &options)
        .with_context(|| format!("cannot read {}", args.input.display()))?;

    for diag in &outcome.diagnostics {
        eprintln!("warning: {}: {}", args.input.display(), diag);
    }
    if !outcome.diagnostics.is_empty() {
        eprintln!(
            "warning: skipped {} malformed record(s)",
            outcome.diagnostics.len()
        );
    }

    let mut out = create(&args.out)?;
    outcome.store.export_tsv(&mut out)?;
    out.flush()?;

    if let Some(path) = &args.occurrences {
        let mut out = create(path)?;
        write_occurrences_jsonl(&outcome.occurrences, &mut out)?;
        out.flush()?;
    }
    if let Some(path) = &args.store {
        let mut out = create(path)?;
        outcome.store.export_jsonl(&mut out)?;
        out.flush()?;
    }
    if let Some(path) = &args.reject_log {
        let mut out = create(path)?;
        out.write_all(b"article_id\tsf\tlf\trule\n")?;
        for reject in &outcome.rejects {
            writeln!(
                out,
                "{}\t{}\t{}\t{}",
                reject.article_id,
                reject.sf,
                reject.lf.as_deref().unwrap_or("-"),
                reject.rule
            )?;
        }
        out.flush()?;
    }

    eprintln!(
        "extracted {} occurrence(s), {} unique pair(s) from {} article(s)",
        outcome.occurrences.len(),
        outcome.store.len(),
        outcome.store.articles_analyzed().values().sum::<u64>()
    );
    Ok(())
}

fn cmd_stats(args: StatsArgs) -> Result<()> {
    let store = load_store(&args.store, args.lang.as_deref())?;
    let stats = store.compute_stats();
    let mut out = create(&args.out)?;
    stats.write_tsv(&mut out)?;
    out.flush()?;
    Ok(())
}

fn cmd_cluster(args: ClusterArgs) -> Result<()> {
    let config = ClusterConfig::load(&args.thresholds)
        .with_context(|| format!("cannot read thresholds {}", args.thresholds.display()))?;
    let store = load_store(&args.store, args.lang.as_deref())?;
    let clusters = cluster_store(&store, &config);
    let mut out = create(&args.out)?;
    write_clusters_jsonl(&clusters, &mut out)?;
    out.flush()?;
    eprintln!(
        "clustered {} pair(s) into {} cluster(s)",
        store.len(),
        clusters.len()
    );
    Ok(())
}

fn cmd_eval_extract(args: EvalExtractArgs) -> Result<()> {
    let mut predicted = read_occurrences_jsonl(open(&args.pred)?)
        .with_context(|| format!("cannot read predictions {}", args.pred.display()))?;
    let mut gold = read_gold_annotations(open(&args.gold)?)
        .with_context(|| format!("cannot read gold {}", args.gold.display()))?;
    if let Some(lang) = &args.lang {
        predicted.retain(|o| &o.language == lang);
        gold.retain(|g| g.language.as_deref() == Some(lang.as_str()));
    }
    let report = extraction_report(&predicted, &gold, args.mode)?;
    let mut out = create(&args.out)?;
    report.write_tsv(&mut out)?;
    out.flush()?;
    Ok(())
}

fn cmd_eval_cluster(args: EvalClusterArgs) -> Result<()> {
    let mut system = read_clusters_jsonl(open(&args.system)?)
        .with_context(|| format!("cannot read clusters {}", args.system.display()))?;
    let mut gold = read_cluster_gold(open(&args.gold)?)
        .with_context(|| format!("cannot read gold {}", args.gold.display()))?;
    if let Some(lang) = &args.lang {
        system.retain(|c| &c.language == lang);
        gold.retain(|g| &g.language == lang);
    }
    let report = cluster_report(&system, &gold)?;
    let mut out = create(&args.out)?;
    report.write_tsv(&mut out)?;
    out.flush()?;
    Ok(())
}

fn cmd_categorize(args: CategorizeArgs) -> Result<()> {
    let dicts = CategoryDictionaries::load(&args.dicts)
        .with_context(|| format!("cannot read dictionaries in {}", args.dicts.display()))?;
    if dicts.is_empty() {
        bail!(
            "no <language>.<category>.txt files in {}",
            args.dicts.display()
        );
    }
    let store = load_store(&args.store, args.lang.as_deref())?;
    let mut out = create(&args.out)?;
    out.write_all(b"language\tsf\tlf\tcount\tcategory\n")?;
    for record in store.records() {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            record.language,
            record.sf,
            record.lf,
            record.count,
            dicts.categorize(&record.language, &record.lf)
        )?;
    }
    out.flush()?;
    Ok(())
}
