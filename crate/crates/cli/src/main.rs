//! Batch front end: catalog queries, wavelet entropies and distances,
//! multiresolution information tables, scalogram mutual information.

mod format;
mod ingest;
mod reference;

use clap::{Parser, Subcommand, ValueEnum};
use format::{bits4, pct, sig6};
use serde::Serialize;
use std::path::{Path, PathBuf};
use waveinfo::catalog::{
    self, builtin_filter_names, list_catalog, load_filter, load_wavelet, AnalyticWavelet,
    CascadeWavelet, CatalogKind, DaughterWavelet, WaveletEval, DEFAULT_CASCADE_ITERATIONS,
};
use waveinfo::crossdensity;
use waveinfo::divergence::{self, DistanceVariant};
use waveinfo::entropy::{self, EntropyDomain, QuadratureConfig};
use waveinfo::infotheory::{self, InfoReport, MraVariant};
use waveinfo::transform::{self, SampledSignal};
use waveinfo::Error;

#[derive(Parser)]
#[command(name = "waveinfo", version, about = "wavelet information toolkit")]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum DomainArg {
    Time,
    Frequency,
    Global,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Subband,
    Literal,
    Both,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum DistanceArg {
    Literal,
    Normalized,
    Full,
    Equiprobability,
    Gibbs,
}

#[derive(Subcommand)]
enum Command {
    /// List built-in wavelets and filter pairs with validation status.
    Catalog,
    /// Entropy of a wavelet density (time, frequency, or global).
    Entropy {
        #[arg(long)]
        wavelet: String,
        #[arg(long, value_enum, default_value_t = DomainArg::Global)]
        domain: DomainArg,
        /// Analyse the daughter at this scale instead of the mother.
        #[arg(long)]
        scale: Option<f64>,
        /// Daughter translation.
        #[arg(long, default_value_t = 0.0)]
        shift: f64,
        /// Target absolute quadrature error in bits.
        #[arg(long)]
        tolerance: Option<f64>,
        /// Also report the cross-entropy upper bound and the invariance overlap.
        #[arg(long)]
        diagnostics: bool,
    },
    /// Entropy of the discrete density of squared filter taps.
    MraEntropy {
        #[arg(long)]
        filter: String,
    },
    /// Kullback-Leibler distance between two wavelets.
    Distance {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_enum, default_value_t = DistanceArg::Literal)]
        variant: DistanceArg,
        /// Effective-support energy fraction for the two-domain variant.
        #[arg(long)]
        fraction: Option<f64>,
    },
    /// Per-subband information report of a multiresolution decomposition.
    MraInfo {
        #[arg(long)]
        signal: PathBuf,
        /// Filter name; `all` runs the whole catalog.
        #[arg(long)]
        wavelet: String,
        #[arg(long)]
        levels: u32,
        #[arg(long, value_enum, default_value_t = VariantArg::Subband)]
        variant: VariantArg,
        /// Print both variants next to the bundled reference rows.
        #[arg(long)]
        compare: bool,
        /// Write the joint density as a gnuplot-ready CSV.
        #[arg(long)]
        dump_density: Option<PathBuf>,
    },
    /// Mutual information between a signal and an analysing wavelet over a
    /// scalogram grid.
    CwtMi {
        #[arg(long)]
        signal: PathBuf,
        #[arg(long, default_value = "cmor")]
        wavelet: String,
        #[arg(long, default_value_t = 0.85)]
        min_coverage: f64,
        /// Densify the recommended grid by this factor in both axes.
        #[arg(long, default_value_t = 1)]
        densify: usize,
        /// Write the scalogram joint density as a gnuplot-ready CSV.
        #[arg(long)]
        dump_scalogram: Option<PathBuf>,
    },
    /// Order the catalog filters by total information on a signal.
    Rank {
        #[arg(long)]
        signal: PathBuf,
        #[arg(long)]
        levels: u32,
    },
}

/// Die quietly when the downstream pipe closes (default Unix behaviour),
/// instead of panicking inside println.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() {
    reset_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let is_usage = e.use_stderr();
            let _ = e.print();
            std::process::exit(if is_usage { 1 } else { 0 });
        }
    };
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(exit_code(&err));
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnknownName { .. }
        | Error::Parse { .. }
        | Error::Io(_)
        | Error::InvalidFraction(_)
        | Error::ZeroLevels => 1,
        _ => 2,
    }
}

fn quadrature_config(tolerance: Option<f64>) -> QuadratureConfig {
    let mut q = QuadratureConfig::default();
    if let Ok(s) = std::env::var("WIT_QUAD_POINTS") {
        if let Ok(points) = s.trim().parse::<usize>() {
            q.points = points.max(64);
        }
    }
    if let Some(t) = tolerance {
        if t > 0.0 {
            q.tolerance = t;
        }
    }
    q
}

/// Resolve an analytic wavelet, a daughter of one, or a filter-system
/// wavelet evaluated through the two-scale cascade.
fn resolve_wavelet(
    name: &str,
    scale: Option<f64>,
    shift: f64,
) -> Result<Box<dyn WaveletEval>, Error> {
    if let Ok(w) = load_wavelet(name) {
        return Ok(if let Some(a) = scale {
            Box::new(DaughterWavelet::new(w, a, shift)?)
        } else {
            Box::new(w)
        });
    }
    if let Ok(p) = load_filter(name) {
        return Ok(Box::new(CascadeWavelet::from_filter(
            &p,
            DEFAULT_CASCADE_ITERATIONS,
        )));
    }
    let mut available: Vec<&str> = catalog::ANALYTIC_NAMES.to_vec();
    available.extend(builtin_filter_names());
    Err(Error::UnknownName {
        name: name.to_string(),
        available: available.join(", "),
    })
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Catalog => cmd_catalog(cli.format),
        Command::Entropy {
            wavelet,
            domain,
            scale,
            shift,
            tolerance,
            diagnostics,
        } => cmd_entropy(cli.format, &wavelet, domain, scale, shift, tolerance, diagnostics),
        Command::MraEntropy { filter } => cmd_mra_entropy(cli.format, &filter),
        Command::Distance {
            from,
            to,
            variant,
            fraction,
        } => cmd_distance(cli.format, &from, &to, variant, fraction),
        Command::MraInfo {
            signal,
            wavelet,
            levels,
            variant,
            compare,
            dump_density,
        } => cmd_mra_info(cli.format, &signal, &wavelet, levels, variant, compare, dump_density),
        Command::CwtMi {
            signal,
            wavelet,
            min_coverage,
            densify,
            dump_scalogram,
        } => cmd_cwt_mi(cli.format, &signal, &wavelet, min_coverage, densify, dump_scalogram),
        Command::Rank { signal, levels } => cmd_rank(cli.format, &signal, levels),
    }
}

// ---- catalog ----------------------------------------------------------

#[derive(Serialize)]
struct CatalogJson {
    name: String,
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    taps: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    valid: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn cmd_catalog(format: Format) -> Result<(), Error> {
    let mut rows = Vec::new();
    for entry in list_catalog() {
        match entry.kind {
            CatalogKind::AnalyticWavelet => rows.push(CatalogJson {
                name: entry.name,
                kind: "analytic".into(),
                taps: None,
                valid: None,
                note: entry.note,
            }),
            CatalogKind::FilterPair { taps } => {
                let pair = load_filter(&entry.name)?;
                rows.push(CatalogJson {
                    name: entry.name,
                    kind: "filter".into(),
                    taps: Some(taps),
                    valid: Some(pair.validate().pass),
                    note: entry.note,
                });
            }
        }
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows).unwrap()),
        Format::Csv => {
            println!("name,kind,taps,valid,note");
            for r in rows {
                println!(
                    "{},{},{},{},{}",
                    r.name,
                    r.kind,
                    r.taps.map(|t| t.to_string()).unwrap_or_default(),
                    r.valid.map(|v| v.to_string()).unwrap_or_default(),
                    r.note.unwrap_or_default()
                );
            }
        }
        Format::Table => {
            println!("{:<8} {:<9} {:>4}  {:<6} note", "name", "kind", "taps", "valid");
            for r in rows {
                println!(
                    "{:<8} {:<9} {:>4}  {:<6} {}",
                    r.name,
                    r.kind,
                    r.taps.map(|t| t.to_string()).unwrap_or_default(),
                    r.valid.map(|v| v.to_string()).unwrap_or_default(),
                    r.note.unwrap_or_default()
                );
            }
        }
    }
    Ok(())
}

// ---- entropy ----------------------------------------------------------

#[derive(Serialize)]
struct EntropyJson {
    wavelet: String,
    domain: String,
    value: f64,
    estimated_error: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cross_term: Option<f64>,
}

fn cmd_entropy(
    format: Format,
    name: &str,
    domain: DomainArg,
    scale: Option<f64>,
    shift: f64,
    tolerance: Option<f64>,
    diagnostics: bool,
) -> Result<(), Error> {
    let w = resolve_wavelet(name, scale, shift)?;
    let q = quadrature_config(tolerance);
    let r = match domain {
        DomainArg::Time => entropy::time_entropy(w.as_ref(), &q)?,
        DomainArg::Frequency => entropy::frequency_entropy(w.as_ref(), &q)?,
        DomainArg::Global => entropy::global_entropy(w.as_ref(), &q)?,
    };
    let (bound, cross) = if diagnostics {
        (
            Some(entropy::entropy_upper_bound(w.as_ref(), &q)?),
            Some(crossdensity::cross_term(w.as_ref(), &q)?),
        )
    } else {
        (None, None)
    };
    let out = EntropyJson {
        wavelet: w.name().to_string(),
        domain: domain_name(r.domain).to_string(),
        value: r.value,
        estimated_error: r.estimated_error,
        upper_bound: bound,
        cross_term: cross,
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
        Format::Csv => {
            println!("wavelet,domain,value_bits,estimated_error_bits");
            println!(
                "{},{},{},{}",
                out.wavelet,
                out.domain,
                sig6(out.value),
                sig6(out.estimated_error)
            );
        }
        Format::Table => {
            println!(
                "{} entropy of {}: {} bits (est. error {})",
                out.domain,
                out.wavelet,
                sig6(out.value),
                sig6(out.estimated_error)
            );
            if let Some(b) = out.upper_bound {
                println!("cross-entropy upper bound: {} bits", sig6(b));
            }
            if let Some(c) = out.cross_term {
                println!("time-frequency overlap: {}", sig6(c));
            }
        }
    }
    Ok(())
}

fn domain_name(d: EntropyDomain) -> &'static str {
    match d {
        EntropyDomain::Time => "time",
        EntropyDomain::Frequency => "frequency",
        EntropyDomain::Global => "global",
    }
}

// ---- mra-entropy ------------------------------------------------------

fn cmd_mra_entropy(format: Format, filter: &str) -> Result<(), Error> {
    let pair = load_filter(filter)?;
    let bits = entropy::mra_entropy(&pair)?;
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                filter: &'a str,
                bits: f64,
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&Out { filter, bits }).unwrap()
            );
        }
        Format::Csv => {
            println!("filter,bits");
            println!("{filter},{}", sig6(bits));
        }
        Format::Table => println!("mra entropy of {filter}: {} bits", sig6(bits)),
    }
    Ok(())
}

// ---- distance ---------------------------------------------------------

#[derive(Serialize)]
struct DistanceJson {
    from: String,
    to: String,
    variant: String,
    value_bits: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu: Option<f64>,
}

fn cmd_distance(
    format: Format,
    from: &str,
    to: &str,
    variant: DistanceArg,
    fraction: Option<f64>,
) -> Result<(), Error> {
    let w1 = resolve_wavelet(from, None, 0.0)?;
    let w2 = resolve_wavelet(to, None, 0.0)?;
    let q = quadrature_config(None);
    let out = match variant {
        DistanceArg::Literal => {
            distance_json(from, to, divergence::kl_distance_time(w1.as_ref(), w2.as_ref(), &q)?)
        }
        DistanceArg::Normalized => distance_json(
            from,
            to,
            divergence::kl_distance_normalized(w1.as_ref(), w2.as_ref(), &q)?,
        ),
        DistanceArg::Full => {
            let d = match fraction {
                Some(f) => divergence::kl_distance_full_with_fraction(
                    w1.as_ref(),
                    w2.as_ref(),
                    &q,
                    f,
                )?,
                None => divergence::kl_distance_full(w1.as_ref(), w2.as_ref(), &q)?,
            };
            distance_json(from, to, d)
        }
        DistanceArg::Equiprobability => DistanceJson {
            from: from.into(),
            to: "haar".into(),
            variant: "equiprobability".into(),
            value_bits: divergence::divergence_from_equiprobability(w1.as_ref(), &q)?,
            lambda: None,
            mu: None,
        },
        DistanceArg::Gibbs => DistanceJson {
            from: from.into(),
            to: to.into(),
            variant: "gibbs-cross-entropy".into(),
            value_bits: divergence::gibbs_cross_entropy(w1.as_ref(), w2.as_ref(), &q)?,
            lambda: None,
            mu: None,
        },
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
        Format::Csv => {
            println!("from,to,variant,value_bits,lambda,mu");
            println!(
                "{},{},{},{},{},{}",
                out.from,
                out.to,
                out.variant,
                sig6(out.value_bits),
                out.lambda.map(sig6).unwrap_or_default(),
                out.mu.map(sig6).unwrap_or_default()
            );
        }
        Format::Table => {
            print!(
                "{} distance {} -> {}: {} bits",
                out.variant,
                out.from,
                out.to,
                sig6(out.value_bits)
            );
            if let Some(l) = out.lambda {
                print!("  (lambda {})", sig6(l));
            }
            if let Some(m) = out.mu {
                print!("  (mu {})", sig6(m));
            }
            println!();
        }
    }
    Ok(())
}

fn distance_json(from: &str, to: &str, d: divergence::DistanceResult) -> DistanceJson {
    DistanceJson {
        from: from.into(),
        to: to.into(),
        variant: match d.variant {
            DistanceVariant::D1Time => "literal",
            DistanceVariant::NormalizedD1 => "normalized",
            DistanceVariant::D2TimeFrequency => "full",
        }
        .into(),
        value_bits: d.value,
        lambda: Some(d.lambda),
        mu: d.mu,
    }
}

// ---- mra-info ---------------------------------------------------------

#[derive(Serialize)]
struct MraInfoJson {
    wavelet: String,
    levels: u32,
    variant: String,
    approx_bits: f64,
    /// Deepest level first, mirroring the table column order.
    detail_bits: Vec<f64>,
    total_bits: f64,
    approx_pct: f64,
    detail_pct: Vec<f64>,
}

fn report_to_json(r: &InfoReport) -> MraInfoJson {
    let (ap, dp) = r.percentages();
    // reports store level 1..J; tables print deepest first
    let mut detail_bits: Vec<f64> = r.detail_bits.clone();
    detail_bits.reverse();
    let mut detail_pct = dp;
    detail_pct.reverse();
    MraInfoJson {
        wavelet: r.wavelet.clone(),
        levels: r.levels,
        variant: match r.variant {
            MraVariant::SubbandPrimary => "subband",
            MraVariant::Eq27Literal => "literal",
        }
        .into(),
        approx_bits: r.approx_bits,
        detail_bits,
        total_bits: r.total_bits,
        approx_pct: ap,
        detail_pct,
    }
}

fn info_table_header(levels: u32) {
    print!("{:<8} {:<10} {:<16}", "wave", "variant", "Approx (%)");
    for level in (1..=levels).rev() {
        print!(" {:<16}", format!("Detail {level} (%)"));
    }
    println!(" Total");
}

fn info_table_row(r: &MraInfoJson) {
    print!(
        "{:<8} {:<10} {:<16}",
        r.wavelet,
        r.variant,
        format!("{} ({})", bits4(r.approx_bits), pct(r.approx_pct))
    );
    for (b, p) in r.detail_bits.iter().zip(&r.detail_pct) {
        print!(" {:<16}", format!("{} ({})", bits4(*b), pct(*p)));
    }
    println!(" {}", bits4(r.total_bits));
}

fn cmd_mra_info(
    format: Format,
    signal: &Path,
    wavelet: &str,
    levels: u32,
    variant: VariantArg,
    compare: bool,
    dump_density: Option<PathBuf>,
) -> Result<(), Error> {
    let f = ingest::ingest_signal(signal)?;
    let filter_names: Vec<String> = if wavelet == "all" {
        builtin_filter_names().iter().map(|s| s.to_string()).collect()
    } else {
        vec![wavelet.to_string()]
    };

    let mut reports: Vec<MraInfoJson> = Vec::new();
    for name in &filter_names {
        let pair = load_filter(name)?;
        let pyramid = transform::dwt_periodized(&f, &pair, levels)?;
        if !pyramid.wrapped_levels.is_empty() {
            eprintln!(
                "note: {name}: periodized window shorter than the filter at level(s) {:?}",
                pyramid.wrapped_levels
            );
        }
        let variants: Vec<MraVariant> = match (variant, compare) {
            (_, true) | (VariantArg::Both, _) => {
                vec![MraVariant::SubbandPrimary, MraVariant::Eq27Literal]
            }
            (VariantArg::Subband, _) => vec![MraVariant::SubbandPrimary],
            (VariantArg::Literal, _) => vec![MraVariant::Eq27Literal],
        };
        for v in variants {
            let report = infotheory::mra_info_report(&pyramid, v)?;
            reports.push(report_to_json(&report));
        }
        if let Some(path) = &dump_density {
            let joint = infotheory::mra_joint_density(&pyramid, MraVariant::SubbandPrimary)?;
            dump_joint_csv(path, &joint)?;
        }
    }

    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports).unwrap()),
        Format::Csv => {
            print!("wavelet,levels,variant,approx_bits,approx_pct");
            for level in (1..=levels).rev() {
                print!(",detail{level}_bits,detail{level}_pct");
            }
            println!(",total_bits");
            for r in &reports {
                print!(
                    "{},{},{},{},{}",
                    r.wavelet,
                    r.levels,
                    r.variant,
                    sig6(r.approx_bits),
                    pct(r.approx_pct)
                );
                for (b, p) in r.detail_bits.iter().zip(&r.detail_pct) {
                    print!(",{},{}", sig6(*b), pct(*p));
                }
                println!(",{}", sig6(r.total_bits));
            }
        }
        Format::Table => {
            info_table_header(levels);
            for r in &reports {
                info_table_row(r);
            }
            if compare {
                print_reference_comparison(&f, levels);
            }
        }
    }
    Ok(())
}

fn print_reference_comparison(f: &SampledSignal, levels: u32) {
    match reference::known_signal_key(f.samples()) {
        Some(key) => {
            let rows = reference::rows_for(key, levels);
            if rows.is_empty() {
                println!("(no reference rows for {key} at {levels} level(s))");
                return;
            }
            println!();
            println!("reference rows ({key}, {levels} level(s)); cell-for-cell agreement is not expected:");
            for r in rows {
                println!(
                    "{:<8} {} | total {}",
                    r.wavelet,
                    r.cells
                        .iter()
                        .map(|c| format!("{c:<9}"))
                        .collect::<Vec<_>>()
                        .join(" "),
                    r.total
                );
            }
        }
        None => println!("(signal does not match a bundled reference vector; comparison skipped)"),
    }
}

fn dump_joint_csv(path: &Path, joint: &infotheory::JointDensity) -> Result<(), Error> {
    use std::io::Write;
    let mut out = std::fs::File::create(path)?;
    writeln!(out, "row,col,mass")?;
    for r in 0..joint.rows() {
        for c in 0..joint.cols() {
            writeln!(
                out,
                "{},{},{}",
                joint.row_labels[r],
                joint.col_labels[c],
                joint.mass_at(r, c)
            )?;
        }
    }
    Ok(())
}

// ---- cwt-mi -----------------------------------------------------------

#[derive(Serialize)]
struct CwtMiJson {
    wavelet: String,
    signal_len: usize,
    mi_bits: f64,
    coverage: f64,
    scales: usize,
    translations: usize,
    c_psi: f64,
    energy: f64,
}

fn cmd_cwt_mi(
    format: Format,
    signal: &Path,
    wavelet: &str,
    min_coverage: f64,
    densify: usize,
    dump_scalogram: Option<PathBuf>,
) -> Result<(), Error> {
    let f = ingest::ingest_signal(signal)?;
    let w: AnalyticWavelet = load_wavelet(wavelet)?;
    let (scales, translations) =
        transform::recommended_cwt_grid_densified(f.len(), densify.max(1));
    let scalogram = transform::cwt(&f, &w, &scales, &translations)?;
    let joint = infotheory::joint_density_cwt(&scalogram)?;
    let mi = infotheory::mutual_info_cwt(&joint, min_coverage)?;
    if let Some(path) = &dump_scalogram {
        dump_joint_csv(path, &joint)?;
    }
    let out = CwtMiJson {
        wavelet: wavelet.into(),
        signal_len: f.len(),
        mi_bits: mi,
        coverage: joint.coverage,
        scales: scales.len(),
        translations: translations.len(),
        c_psi: scalogram.c_psi,
        energy: scalogram.energy,
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
        Format::Csv => {
            println!("wavelet,signal_len,mi_bits,coverage,scales,translations,c_psi,energy");
            println!(
                "{},{},{},{},{},{},{},{}",
                out.wavelet,
                out.signal_len,
                sig6(out.mi_bits),
                sig6(out.coverage),
                out.scales,
                out.translations,
                sig6(out.c_psi),
                sig6(out.energy)
            );
        }
        Format::Table => {
            println!(
                "mutual information {} / signal({} samples): {} bits",
                out.wavelet,
                out.signal_len,
                sig6(out.mi_bits)
            );
            println!(
                "coverage {} on {} scales x {} translations (c_psi {}, energy {})",
                sig6(out.coverage),
                out.scales,
                out.translations,
                sig6(out.c_psi),
                sig6(out.energy)
            );
        }
    }
    Ok(())
}

// ---- rank -------------------------------------------------------------

fn cmd_rank(format: Format, signal: &Path, levels: u32) -> Result<(), Error> {
    let f = ingest::ingest_signal(signal)?;
    let filters: Vec<_> = builtin_filter_names()
        .iter()
        .map(|n| load_filter(n))
        .collect::<Result<_, _>>()?;
    let ranked = infotheory::rank_wavelets(&f, &filters, levels)?;
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                name: String,
                total_bits: f64,
            }
            let rows: Vec<Row> = ranked
                .into_iter()
                .map(|(name, total_bits)| Row { name, total_bits })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).unwrap());
        }
        Format::Csv => {
            println!("rank,name,total_bits");
            for (i, (name, total)) in ranked.iter().enumerate() {
                println!("{},{},{}", i + 1, name, sig6(*total));
            }
        }
        Format::Table => {
            println!("{:<4} {:<8} total bits", "rank", "name");
            for (i, (name, total)) in ranked.iter().enumerate() {
                println!("{:<4} {:<8} {}", i + 1, name, bits4(*total));
            }
        }
    }
    Ok(())
}
