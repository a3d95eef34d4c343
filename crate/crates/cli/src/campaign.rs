//! The invariant suite over a directory of definitions plus seeded generated algebras.

use std::path::{Path, PathBuf};

use homalg_core::campaign::{check_algebra, generated_instance, InstanceReport};
use homalg_core::constructions::GENERATOR_ALGORITHM;
use homalg_core::leibniz::HOM_LIE_DEFINITION;
use homalg_core::report::{Check, Verdict};
use rayon::prelude::*;
use serde::Serialize;

use crate::file::parse;
use crate::{check_dim, CliError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    /// Corpus-relative path, or `generated/<seed>`.
    pub source: String,
    pub name: String,
    pub field: String,
    pub dim: usize,
    pub passed: usize,
    pub skipped: usize,
    pub failures: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub generator_algorithm: &'static str,
    pub hom_lie_definition: &'static str,
    pub seeds: u64,
    pub corpus_files: usize,
    pub entries: Vec<Entry>,
    pub failed_entries: usize,
    pub failed_checks: usize,
}

impl CampaignReport {
    pub fn failed(&self) -> bool {
        self.failed_checks > 0
    }
}

fn entry(source: String, r: InstanceReport) -> Entry {
    let passed = r.checks.iter().filter(|c| c.passed()).count();
    let skipped = r.checks.iter().filter(|c| matches!(c.verdict, Verdict::Skipped(_))).count();
    Entry {
        source,
        name: r.name.clone(),
        field: r.field.clone(),
        dim: r.dim,
        passed,
        skipped,
        failures: r.failures().cloned().collect(),
    }
}

/// `*.json` files under `dir`, sorted by path.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for e in walkdir::WalkDir::new(dir).sort_by_file_name() {
        let e = e.map_err(|e| CliError::Usage(format!("cannot walk {}: {e}", dir.display())))?;
        if e.file_type().is_file() && e.path().extension().is_some_and(|x| x == "json") {
            files.push(e.into_path());
        }
    }
    files.sort();
    Ok(files)
}

/// Parses every corpus file up front, so that a malformed corpus fails before any work.
/// Entries are computed in parallel and reported in path order, then seed order.
pub fn run(dir: Option<&Path>, seeds: u64) -> Result<CampaignReport> {
    let files = match dir {
        Some(d) => corpus_files(d)?,
        None => Vec::new(),
    };
    let mut docs = Vec::with_capacity(files.len());
    for f in &files {
        let doc = parse(f).map_err(|e| CliError::Usage(format!("{}: {e}", f.display())))?;
        check_dim(doc.definition.algebra().dim())?;
        let rel = dir.and_then(|d| f.strip_prefix(d).ok()).unwrap_or(f);
        docs.push((rel.to_string_lossy().replace('\\', "/"), doc));
    }
    let mut entries: Vec<Entry> = docs
        .par_iter()
        .map(|(path, doc)| entry(path.clone(), check_algebra(path, doc.definition.algebra())))
        .collect();
    entries.par_extend((0..seeds).into_par_iter().map(|seed| {
        let inst = generated_instance(seed);
        entry(format!("generated/{seed}"), check_algebra(&inst.name, &inst.algebra))
    }));
    let failed_entries = entries.iter().filter(|e| !e.failures.is_empty()).count();
    let failed_checks = entries.iter().map(|e| e.failures.len()).sum();
    Ok(CampaignReport {
        generator_algorithm: GENERATOR_ALGORITHM,
        hom_lie_definition: HOM_LIE_DEFINITION,
        seeds,
        corpus_files: files.len(),
        entries,
        failed_entries,
        failed_checks,
    })
}
