//! Batch driver behind the `heckecert` binary: runs the selected checks over
//! groups and seeds and collects one record per unit of work.

use std::fmt::Write as _;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::b3;
use crate::group_engine::{self, enumerate};
use crate::hecke::{self, certify_freeness, Exact, HeckeError, HeckeSpec, ModP};
use crate::presentations::{expand_spanning_set, Catalog, CatalogEntry, Flavor, GroupId, PresentationError};
use crate::ring::{is_prime, prime_congruent_one, PrimeField, DEFAULT_PRIME};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration: {0}")]
    Config(String),
    #[error("catalog: {0}")]
    Catalog(#[from] PresentationError),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        3
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    GroupInfo,
    IsoCheck,
    Freeness,
    GroupAlgebra,
    B3Reps,
}

impl Task {
    pub fn name(self) -> &'static str {
        match self {
            Task::GroupInfo => "group-info",
            Task::IsoCheck => "iso-check",
            Task::Freeness => "freeness",
            Task::GroupAlgebra => "group-algebra",
            Task::B3Reps => "b3-reps",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Modp,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub groups: Vec<GroupId>,
    pub tasks: Vec<Task>,
    pub seeds: Vec<u64>,
    pub prime: u64,
    pub mode: Mode,
    pub out: Option<PathBuf>,
    /// Overrides the environment variable and the built-in catalog.
    pub catalog_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            groups: GroupId::all().collect(),
            tasks: vec![Task::GroupInfo],
            seeds: vec![1],
            prime: DEFAULT_PRIME,
            mode: Mode::Modp,
            out: None,
            catalog_dir: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.tasks.is_empty() {
            return Err(CliError::Config("no tasks selected".into()));
        }
        if self.groups.is_empty() && self.tasks.iter().any(|&t| t != Task::B3Reps) {
            return Err(CliError::Config("no groups selected".into()));
        }
        if self.seeds.is_empty() {
            return Err(CliError::Config("no seeds given".into()));
        }
        if !is_prime(self.prime) || self.prime < 5 || self.prime >= 1 << 32 {
            return Err(CliError::Config(format!("{} is not a prime between 5 and 2^32", self.prime)));
        }
        Ok(())
    }
}

/// `G4,G6`, `G4..G9`, `4-9` or `all`.
pub fn parse_groups(s: &str) -> Result<Vec<GroupId>, CliError> {
    let bad = |x: &str| CliError::Config(format!("bad group list entry {x:?}"));
    let num =
        |x: &str| -> Result<u8, CliError> { x.trim().trim_start_matches(['G', 'g']).parse::<u8>().map_err(|_| bad(x)) };
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part.eq_ignore_ascii_case("all") {
            out.extend(GroupId::all());
            continue;
        }
        let range = part.split_once("..").or_else(|| part.split_once('-'));
        let (lo, hi) = match range {
            Some((a, b)) => (num(a)?, num(b)?),
            None => (num(part)?, num(part)?),
        };
        for n in lo..=hi {
            out.push(GroupId::new(n).map_err(|_| bad(part))?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// `1,2,7` or `1..5` (inclusive).
pub fn parse_seeds(s: &str) -> Result<Vec<u64>, CliError> {
    let bad = |x: &str| CliError::Config(format!("bad seed entry {x:?}"));
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let (a, b): (u64, u64) = (a.parse().map_err(|_| bad(part))?, b.parse().map_err(|_| bad(part))?);
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| bad(part))?),
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub group: Option<String>,
    pub task: Task,
    pub seed: Option<u64>,
    pub status: Status,
    /// Machine-readable code for skips and failures.
    pub reason: Option<String>,
    pub rank: Option<usize>,
    pub order: Option<u64>,
    pub center_order: Option<u64>,
    pub details: serde_json::Value,
}

impl Record {
    fn new(group: Option<GroupId>, task: Task, seed: Option<u64>) -> Self {
        Record {
            group: group.map(|g| g.to_string()),
            task,
            seed,
            status: Status::Pass,
            reason: None,
            rank: None,
            order: None,
            center_order: None,
            details: json!({}),
        }
    }

    fn skip(mut self, reason: &str, detail: &str) -> Self {
        self.status = Status::Skipped;
        self.reason = Some(reason.into());
        self.details = json!({ "why": detail });
        self
    }

    fn fail(mut self, reason: &str, detail: String) -> Self {
        self.status = Status::Fail;
        self.reason = Some(reason.into());
        self.details = json!({ "error": detail });
        self
    }

    fn sort_key(&self) -> (u8, Task, u64, String) {
        let g = self.group.as_deref().and_then(|g| g[1..].parse().ok()).unwrap_or(0);
        let extra = self.details.get("k").map(|k| k.to_string()).unwrap_or_default()
            + &self.details.get("branch").map(|b| b.to_string()).unwrap_or_default();
        (g, self.task, self.seed.unwrap_or(0), extra)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub catalog_checksum: String,
    pub prime: u64,
    pub mode: Mode,
    pub pass: bool,
    pub records: Vec<Record>,
}

impl Report {
    /// 0 when nothing failed, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            2
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn summary_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<6} {:<14} {:>6} {:<8} {:>6} {:>6} {:>7}  note",
            "group", "task", "seed", "status", "rank", "order", "center"
        );
        let dash = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        for r in &self.records {
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skipped",
            };
            let note = match (&r.reason, r.task) {
                (Some(reason), _) => reason.clone(),
                (None, Task::B3Reps) => format!("k={} {}", r.details["k"], r.details["branch"]),
                _ => String::new(),
            };
            let _ = writeln!(
                s,
                "{:<6} {:<14} {:>6} {:<8} {:>6} {:>6} {:>7}  {}",
                dash(r.group.clone()),
                r.task.name(),
                dash(r.seed.map(|x| x.to_string())),
                status,
                dash(r.rank.map(|x| x.to_string())),
                dash(r.order.map(|x| x.to_string())),
                dash(r.center_order.map(|x| x.to_string())),
                note
            );
        }
        let failed = self.records.iter().filter(|r| r.status == Status::Fail).count();
        let skipped = self.records.iter().filter(|r| r.status == Status::Skipped).count();
        let _ = writeln!(s, "{} records, {failed} failed, {skipped} skipped", self.records.len());
        s
    }
}

/// Freeness is claimed only where a spanning set is known; for these groups
/// it remains open.
fn open_case(g: GroupId) -> bool {
    (17..=21).contains(&g.number())
}

pub fn load_catalog(config: &RunConfig) -> Result<Catalog, CliError> {
    Ok(match &config.catalog_dir {
        Some(dir) => Catalog::from_dir(dir)?,
        None => Catalog::load_default()?,
    })
}

pub fn run(config: &RunConfig) -> Result<Report, CliError> {
    config.validate()?;
    let cat = load_catalog(config)?;
    let field = PrimeField::new(config.prime).map_err(|e| CliError::Config(e.to_string()))?;
    let mut jobs: Vec<(Task, Option<GroupId>, Option<u64>)> = Vec::new();
    for &task in &config.tasks {
        match task {
            Task::Freeness if config.mode == Mode::Modp => {
                for &g in &config.groups {
                    jobs.extend(config.seeds.iter().map(|&s| (task, Some(g), Some(s))));
                }
            }
            Task::B3Reps => jobs.extend(config.seeds.iter().map(|&s| (task, None, Some(s)))),
            _ => jobs.extend(config.groups.iter().map(|&g| (task, Some(g), None))),
        }
    }
    for &g in &config.groups {
        cat.entry(g)?;
    }
    let mut records: Vec<Record> = jobs
        .par_iter()
        .flat_map_iter(|&(task, g, seed)| match (task, g) {
            (Task::B3Reps, _) => b3_records(field, seed.expect("seeded")),
            (_, Some(g)) => vec![group_task(&cat, task, g, seed, config, field)],
            _ => Vec::new(),
        })
        .collect();
    records.sort_by_key(|r| r.sort_key());
    let pass = records.iter().all(|r| r.status != Status::Fail);
    Ok(Report { catalog_checksum: cat.checksum().to_string(), prime: config.prime, mode: config.mode, pass, records })
}

/// Runs and, if requested, writes the JSON report.
pub fn run_and_write(config: &RunConfig) -> Result<Report, CliError> {
    let report = run(config)?;
    if let Some(path) = &config.out {
        std::fs::write(path, report.to_json()).map_err(|source| CliError::Io { path: path.clone(), source })?;
    }
    Ok(report)
}

fn group_task(
    cat: &Catalog,
    task: Task,
    g: GroupId,
    seed: Option<u64>,
    config: &RunConfig,
    field: PrimeField,
) -> Record {
    let entry = cat.entry(g).expect("checked");
    let rec = Record::new(Some(g), task, seed);
    match task {
        Task::GroupInfo => group_info(entry, rec),
        Task::IsoCheck => iso_check(entry, rec),
        Task::Freeness => freeness(entry, rec, config.mode, field),
        Task::GroupAlgebra => group_algebra(entry, rec, config.prime),
        Task::B3Reps => rec,
    }
}

fn group_info(entry: &CatalogEntry, mut rec: Record) -> Record {
    let mut flavors = serde_json::Map::new();
    let mut ok = true;
    for flavor in [Flavor::Bmr, Flavor::Er] {
        match group_engine::group_info(&entry.presentation(flavor)) {
            Ok(info) => {
                if flavor == Flavor::Bmr {
                    rec.order = Some(info.order);
                    rec.center_order = Some(info.center_word_order);
                }
                ok &= info.order == entry.bmr.group_order && info.center_word_central;
                flavors.insert(format!("{flavor:?}").to_lowercase(), json!(info));
            }
            Err(e) => return rec.fail("enumeration", e.to_string()),
        }
    }
    if entry.bmr.center_order > 0 {
        ok &= rec.center_order == Some(entry.bmr.center_order);
    }
    rec.details = serde_json::Value::Object(flavors);
    if !ok {
        rec.status = Status::Fail;
        rec.reason = Some("mismatch".into());
    }
    rec
}

fn iso_check(entry: &CatalogEntry, mut rec: Record) -> Record {
    match group_engine::verify_iso(entry) {
        Ok(rep) => {
            rec.order = Some(rep.bmr_order);
            let failures: Vec<&str> = rep.failures().map(|c| c.what.as_str()).collect();
            rec.details = json!({
                "bmr_order": rep.bmr_order,
                "er_order": rep.er_order,
                "relators_checked": rep.relators.len(),
                "round_trips_checked": rep.round_trips.len(),
                "failures": failures,
            });
            if !rep.pass {
                rec.status = Status::Fail;
                rec.reason = Some("iso-mismatch".into());
            }
            rec
        }
        Err(e) => rec.fail("enumeration", e.to_string()),
    }
}

fn hecke_reason(e: &HeckeError) -> &'static str {
    match e {
        HeckeError::RankDeficient { .. } => "rank-deficient",
        HeckeError::CheckFailed(_) => "check-failed",
        HeckeError::EnumerationCap { .. } => "enumeration-cap",
        HeckeError::NonUnitPivot { .. } => "non-unit-pivot",
        HeckeError::NoRootOfUnity { .. } => "no-root-of-unity",
        _ => "error",
    }
}

fn freeness(entry: &CatalogEntry, mut rec: Record, mode: Mode, field: PrimeField) -> Record {
    let g = entry.group;
    if open_case(g) {
        return rec.skip("open-case", "freeness is open for this group; no spanning set is known");
    }
    let Some(recipe) = &entry.spanning else {
        return rec.skip("no-recipe", "the catalog has no spanning recipe for this group");
    };
    let spec = match HeckeSpec::from_entry(entry) {
        Ok(s) => s,
        Err(e) => return rec.fail("error", e.to_string()),
    };
    let basis = match expand_spanning_set(&entry.bmr, recipe) {
        Ok(b) => b,
        Err(e) => return rec.fail("spanning", e.to_string()),
    };
    rec.order = Some(spec.group_order);
    let summary = |checks: &[hecke::Check], defined: usize| {
        json!({
            "checks": checks,
            "vectors_defined": defined,
            "basis_size": basis.len(),
        })
    };
    let outcome = match mode {
        Mode::Modp => {
            let point = spec.random_point(field, rec.seed.expect("seeded"));
            certify_freeness(&spec, &ModP::new(point), &basis).map(|c| (c.rank, summary(&c.checks, c.vectors_defined)))
        }
        Mode::Exact => certify_freeness(&spec, &Exact { vars: spec.vars() }, &basis)
            .map(|c| (c.rank, summary(&c.checks, c.vectors_defined))),
    };
    match outcome {
        Ok((rank, details)) => {
            rec.rank = Some(rank);
            rec.details = details;
            rec
        }
        Err(e) => {
            if let HeckeError::RankDeficient { rank, .. } = e {
                rec.rank = rank;
            }
            let rank = rec.rank;
            let mut r = rec.fail(hecke_reason(&e), e.to_string());
            r.rank = rank;
            r
        }
    }
}

fn group_algebra(entry: &CatalogEntry, mut rec: Record, prime: u64) -> Record {
    let Some(recipe) = &entry.spanning else {
        return rec.skip("no-recipe", "the catalog has no spanning recipe for this group");
    };
    if open_case(entry.group) {
        return rec.skip("open-case", "freeness is open for this group; no spanning set is known");
    }
    let run = || -> Result<hecke::GroupAlgebraReport, String> {
        let spec = HeckeSpec::from_entry(entry).map_err(|e| e.to_string())?;
        let basis = expand_spanning_set(&entry.bmr, recipe).map_err(|e| e.to_string())?;
        let table = enumerate(&entry.presentation(Flavor::Bmr)).map_err(|e| e.to_string())?;
        // A prime carrying every needed root of unity, at most the configured one.
        let m = spec.classes.iter().fold(1u64, |acc, c| lcm(acc, c.order as u64));
        let q = prime_congruent_one(m, prime).ok_or_else(|| format!("no prime = 1 mod {m} below {prime}"))?;
        let field = PrimeField::new(q).map_err(|e| e.to_string())?;
        hecke::group_algebra_check(&spec, &basis, &table, field).map_err(|e| e.to_string())
    };
    match run() {
        Ok(rep) => {
            rec.rank = Some(rep.algebra_dimension);
            rec.order = Some(entry.bmr.group_order);
            if !rep.pass {
                rec.status = Status::Fail;
                rec.reason = Some("not-group-algebra".into());
            }
            rec.details = json!(rep);
            rec
        }
        Err(e) => rec.fail("error", e),
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// One record per dimension (and root branch for k = 4) at this seed.
fn b3_records(field: PrimeField, seed: u64) -> Vec<Record> {
    let mut out = Vec::new();
    for (k, branch) in [(2, 0), (3, 0), (4, 0), (4, 1), (5, 0)] {
        let mut rec = Record::new(None, Task::B3Reps, Some(seed));
        match b3::evaluate(field, k, seed, branch) {
            Ok(r) => {
                if !r.pass() {
                    rec.status = Status::Fail;
                    rec.reason = Some(if r.oracle.is_some_and(|o| o != r.condition) {
                        "oracle-disagrees".into()
                    } else {
                        "check-failed".into()
                    });
                }
                rec.details = json!(r);
            }
            Err(e) => rec = rec.fail("error", e.to_string()),
        }
        if let serde_json::Value::Object(m) = &mut rec.details {
            m.insert("k".into(), json!(k));
            m.insert("branch".into(), json!(branch));
        }
        out.push(rec);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_lists() {
        let g = parse_groups("G4,G6..G8, 10").unwrap();
        let n: Vec<u8> = g.iter().map(|g| g.number()).collect();
        assert_eq!(n, vec![4, 6, 7, 8, 10]);
        assert_eq!(parse_groups("all").unwrap().len(), 19);
        assert!(parse_groups("G23").is_err());
        assert!(parse_groups("Gx").is_err());
    }

    #[test]
    fn seed_lists() {
        assert_eq!(parse_seeds("1..3,9").unwrap(), vec![1, 2, 3, 9]);
        assert!(parse_seeds("a").is_err());
    }

    #[test]
    fn config_rejects_composite_prime() {
        let c = RunConfig { prime: 15, ..RunConfig::default() };
        assert!(matches!(c.validate(), Err(CliError::Config(_))));
    }

    #[test]
    fn open_cases_are_skipped_with_a_reason() {
        let c =
            RunConfig { groups: parse_groups("G17,G22").unwrap(), tasks: vec![Task::Freeness], ..RunConfig::default() };
        let rep = run(&c).unwrap();
        assert!(rep.pass);
        let reasons: Vec<_> = rep.records.iter().map(|r| r.reason.clone().unwrap()).collect();
        assert_eq!(reasons, vec!["open-case", "no-recipe"]);
        assert!(rep.records.iter().all(|r| r.status == Status::Skipped));
    }

    #[test]
    fn report_is_deterministic() {
        let c = RunConfig {
            groups: parse_groups("G4,G5").unwrap(),
            tasks: vec![Task::Freeness, Task::GroupInfo],
            seeds: vec![1, 2],
            ..RunConfig::default()
        };
        assert_eq!(run(&c).unwrap().to_json(), run(&c).unwrap().to_json());
    }
}
