use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::Context;
use equidissect::constructions::{
    lemma1_refine, thm1_partition_with, thm2_partition, thm3_partition, thm4_partition,
    thm5_partition, ConstructionError, DartParams, Dissection, DissectionDocument, Thm1Variant,
    WeightedDissection,
};
use equidissect::spectrum::spectrum_report;
use equidissect::verify::{verify_equidissection, VerificationReport};
use equidissect::{QuadValue, Rational, Scalar};
use rayon::prelude::*;
use serde::Serialize;

use crate::svg::{render_svg, RenderOptions};
use crate::{ConstructArgs, RenderArgs, SpectrumArgs, SweepArgs, VerifyArgs};

#[derive(Debug)]
pub enum CliError {
    BadHypotheses(String),
    MalformedInput(String),
    NotATiling(String),
    Io(anyhow::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::BadHypotheses(msg) => write!(f, "BAD_HYPOTHESES: {msg}"),
            CliError::MalformedInput(msg) => write!(f, "MALFORMED_INPUT: {msg}"),
            CliError::NotATiling(msg) => write!(f, "NOT_A_TILING: {msg}"),
            CliError::Io(e) => write!(f, "error: {e:#}"),
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        CliError::BadHypotheses(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn need(value: Option<u64>, flag: &str, theorem: u8) -> CliResult<u64> {
    value.ok_or_else(|| CliError::BadHypotheses(format!("theorem {theorem} needs --{flag}")))
}

fn to_json(value: &impl Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("documents serialize");
    text.push('\n');
    text
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(CliError::Io),
        None => io::stdout()
            .write_all(text.as_bytes())
            .context("writing standard output")
            .map_err(CliError::Io),
    }
}

fn read_input(input: Option<&PathBuf>) -> CliResult<String> {
    let mut text = String::new();
    match input {
        Some(path) if path.as_os_str() != "-" => {
            text = fs::read_to_string(path)
                .map_err(|e| CliError::MalformedInput(format!("{}: {e}", path.display())))?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::MalformedInput(format!("standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn parse_document(text: &str) -> CliResult<DissectionDocument<QuadValue>> {
    serde_json::from_str(text).map_err(|e| CliError::MalformedInput(e.to_string()))
}

fn weighted_json<T: Scalar>(wd: &WeightedDissection<T>, refine: bool) -> String {
    if refine {
        to_json(&DissectionDocument::from(&lemma1_refine(wd)))
    } else {
        to_json(&DissectionDocument::from(wd))
    }
}

pub fn construct(args: &ConstructArgs) -> CliResult<u8> {
    let theorem = args.theorem;
    if args.paper_literal && theorem != 1 {
        return Err(CliError::BadHypotheses("--paper-literal applies to theorem 1 only".into()));
    }
    let dart = || DartParams::new(need(args.r, "r", theorem)?, need(args.s, "s", theorem)?).map_err(CliError::from);
    let json = match theorem {
        1 => {
            let variant = if args.paper_literal { Thm1Variant::PaperLiteral } else { Thm1Variant::Corrected };
            let wd = thm1_partition_with(&dart()?, need(args.t, "t", theorem)?, variant)?;
            weighted_json(&wd, args.refine)
        }
        2 => weighted_json(&thm2_partition(&dart()?)?, args.refine),
        3 => weighted_json(&thm3_partition(&dart()?, need(args.t, "t", theorem)?)?, args.refine),
        4 => weighted_json(&thm4_partition(need(args.k, "k", theorem)?)?, args.refine),
        _ => to_json(&DissectionDocument::from(&thm5_partition(need(args.k, "k", theorem)?)?)),
    };
    emit(args.out.as_deref(), &json)?;
    Ok(0)
}

/// Report JSON for a document, with rational values printed as fractions.
fn report_json(doc: &DissectionDocument<QuadValue>) -> (String, u8) {
    match doc.to_rational() {
        Some(rational) => {
            let report = rational.verify();
            (to_json(&report), report.exit_code() as u8)
        }
        None => {
            let report = doc.verify();
            (to_json(&report), report.exit_code() as u8)
        }
    }
}

pub fn verify(args: &VerifyArgs) -> CliResult<u8> {
    let doc = parse_document(&read_input(args.input.as_ref())?)?;
    let (json, code) = report_json(&doc);
    emit(args.out.as_deref(), &json)?;
    Ok(code)
}

pub fn spectrum(args: &SpectrumArgs) -> CliResult<u8> {
    let dart = DartParams::new(args.r, args.s)?;
    let limit = args.limit.unwrap_or(2 * args.r);
    emit(args.out.as_deref(), &to_json(&spectrum_report(&dart, limit)))?;
    Ok(0)
}

pub fn render(args: &RenderArgs) -> CliResult<u8> {
    let opts = RenderOptions::new(args.width, args.margin, args.digits, args.labels)
        .map_err(CliError::BadHypotheses)?;
    let doc = parse_document(&read_input(args.input.as_ref())?)?;
    let report = doc.verify();
    if !report.is_tiling && !args.force {
        let mut codes: Vec<&str> = report.failures.iter().map(|f| f.code.as_str()).collect();
        codes.dedup();
        return Err(CliError::NotATiling(format!(
            "faces do not tile the polygon ({}); pass --force to draw anyway",
            codes.join(", ")
        )));
    }
    emit(args.out.as_deref(), &render_svg(&doc, &opts))?;
    Ok(0)
}

#[derive(Serialize)]
struct SweepEntry {
    name: String,
    face_count: usize,
    is_tiling: bool,
    is_equidissection: bool,
}

#[derive(Serialize)]
struct SweepSummary {
    theorem: u8,
    instances: usize,
    verified: usize,
    entries: Vec<SweepEntry>,
}

enum Job {
    Dart(DartParams, Option<u64>),
    Kite(u64),
}

fn sweep_jobs(args: &SweepArgs) -> Vec<Job> {
    let darts = DartParams::all_up_to(args.r_max);
    match args.theorem {
        1 => darts
            .into_iter()
            .flat_map(|d| (d.r()..=d.r() + args.t_span).step_by(2).map(move |t| Job::Dart(d, Some(t))))
            .collect(),
        2 => darts.into_iter().filter(|d| d.s() % 2 == 0).map(|d| Job::Dart(d, None)).collect(),
        3 => darts
            .into_iter()
            .filter(|d| d.s() % 2 == 1)
            .flat_map(|d| {
                (1..2 * (d.r() - d.s()))
                    .step_by(2)
                    .filter(move |&t| thm3_partition(&d, t).is_ok())
                    .map(move |t| Job::Dart(d, Some(t)))
            })
            .collect(),
        _ => (1..=args.k_max).map(Job::Kite).collect(),
    }
}

fn job_name(theorem: u8, job: &Job) -> String {
    match job {
        Job::Dart(d, Some(t)) => format!("thm{theorem}-r{}-s{}-t{t}", d.r(), d.s()),
        Job::Dart(d, None) => format!("thm{theorem}-r{}-s{}", d.r(), d.s()),
        Job::Kite(k) => format!("thm{theorem}-k{k}"),
    }
}

fn check<T: Scalar>(d: &Dissection<T>) -> VerificationReport<T> {
    verify_equidissection(&d.polygon, &d.faces)
}

fn run_job(theorem: u8, job: &Job) -> Result<(usize, bool, bool, String), ConstructionError> {
    fn summarize<T: Scalar>(r: VerificationReport<T>) -> (usize, bool, bool, String) {
        (r.face_count, r.is_tiling, r.is_equidissection, to_json(&r))
    }
    Ok(match (theorem, job) {
        (1, Job::Dart(d, Some(t))) => {
            summarize::<Rational>(check(&lemma1_refine(&thm1_partition_with(d, *t, Thm1Variant::Corrected)?)))
        }
        (2, Job::Dart(d, _)) => summarize(check(&lemma1_refine(&thm2_partition(d)?))),
        (3, Job::Dart(d, Some(t))) => summarize(check(&lemma1_refine(&thm3_partition(d, *t)?))),
        (4, Job::Kite(k)) => summarize(check(&lemma1_refine(&thm4_partition(*k)?))),
        (5, Job::Kite(k)) => summarize(check(&thm5_partition(*k)?)),
        _ => unreachable!("jobs match their theorem"),
    })
}

pub fn sweep(args: &SweepArgs) -> CliResult<u8> {
    fs::create_dir_all(&args.out)
        .with_context(|| format!("creating {}", args.out.display()))
        .map_err(CliError::Io)?;
    let jobs = sweep_jobs(args);
    let entries = jobs
        .par_iter()
        .map(|job| {
            let name = job_name(args.theorem, job);
            let (face_count, is_tiling, is_equidissection, json) = run_job(args.theorem, job)?;
            emit(Some(&args.out.join(format!("{name}.json"))), &json)?;
            Ok(SweepEntry { name, face_count, is_tiling, is_equidissection })
        })
        .collect::<CliResult<Vec<_>>>()?;
    let verified = entries.iter().filter(|e| e.is_equidissection).count();
    let summary = SweepSummary { theorem: args.theorem, instances: entries.len(), verified, entries };
    emit(Some(&args.out.join("summary.json")), &to_json(&summary))?;
    eprintln!("{verified}/{} instances verified", summary.instances);
    Ok(if verified == summary.instances { 0 } else { 2 })
}
