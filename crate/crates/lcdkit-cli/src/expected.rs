//! Expected-value tables and the harness behind `verify-tables`.
//!
//! The recorded values live as JSON fixture files rather than source
//! constants so they can be audited row by row: every row carries a
//! citation string naming the published table it was copied from, plus a
//! cost class so a default run can stay inside a desk-scale time budget.
//!
//! Four kinds of table exist. Count tables pin the number of equivalence
//! classes at given lengths. Family tables pin the residue-family constants
//! (weight offset, lift threshold, residual, terminal class count).
//! Representative tables pin published multiplicity vectors. Nonexistence
//! tables pin parameter sets that no LCD code attains.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use lcdkit::classify::{self, ClassificationResult, ClassifyOptions, Mode};
use lcdkit::code::{dual_distance_at_least, MultiplicityVector};
use lcdkit::theory;
use lcdkit::{Error, Result};
use serde::{Deserialize, Serialize};

/// How expensive one row is to recompute from scratch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CostClass {
    /// Under a second.
    Fast,
    /// Up to a few minutes.
    Medium,
    /// Up to two hours; runs only when explicitly requested.
    Heavy,
}

impl fmt::Display for CostClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CostClass::Fast => "FAST",
            CostClass::Medium => "MEDIUM",
            CostClass::Heavy => "HEAVY",
        };
        f.write_str(s)
    }
}

/// One expected equivalence-class count at a given length. The minimum
/// weight is not stored; it is recomputed from the optimal-weight formula.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CountRow {
    pub n: u64,
    pub expected: u64,
    pub cost: CostClass,
    pub citation: String,
}

/// One residue family of the optimal-weight table: the offset added to the
/// linear term, the lift threshold s', the residual r, and the number of
/// classes at the terminal length pair (q r, (q-1) r).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyRow {
    pub t: u64,
    pub d_offset: i64,
    pub s_prime: u64,
    pub r: u64,
    pub terminal_count: u64,
    pub cost: CostClass,
    pub citation: String,
}

/// One published representative: a labelled multiplicity vector together
/// with its stated length and minimum weight.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepresentativeRow {
    pub label: String,
    pub n: u64,
    pub d: u64,
    pub m: Vec<u32>,
    pub cost: CostClass,
    pub citation: String,
}

/// One parameter set at which no LCD code reaches minimum weight d.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NonexistenceRow {
    pub n: u64,
    pub d: u64,
    pub cost: CostClass,
    pub citation: String,
}

/// The rows of a table, tagged by the kind of check they demand.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", content = "rows", rename_all = "snake_case")]
pub enum TableRows {
    Counts(Vec<CountRow>),
    FamilyRows(Vec<FamilyRow>),
    Representatives(Vec<RepresentativeRow>),
    Nonexistence(Vec<NonexistenceRow>),
}

impl TableRows {
    pub fn len(&self) -> usize {
        match self {
            TableRows::Counts(r) => r.len(),
            TableRows::FamilyRows(r) => r.len(),
            TableRows::Representatives(r) => r.len(),
            TableRows::Nonexistence(r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// One expected table: identification, the caption quote of its source,
/// the field and dimension all rows share, and the rows themselves.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExpectedTable {
    pub name: String,
    pub citation: String,
    pub q: u8,
    pub k: usize,
    #[serde(flatten)]
    pub rows: TableRows,
}

fn require_citation(table: &str, row: &str, citation: &str) -> Result<()> {
    if citation.trim().is_empty() {
        return Err(Error::MalformedData(format!(
            "table {table}, row {row}: empty citation"
        )));
    }
    Ok(())
}

impl ExpectedTable {
    /// Structural validation: nonempty rows, a citation on every row, and
    /// multiplicity vectors of the right arity.
    pub fn validate(&self) -> Result<()> {
        require_citation(&self.name, "(table)", &self.citation)?;
        if self.rows.is_empty() {
            return Err(Error::MalformedData(format!("table {} has no rows", self.name)));
        }
        let v = theory::gaussian_count(self.q, self.k) as usize;
        match &self.rows {
            TableRows::Counts(rows) => {
                for r in rows {
                    require_citation(&self.name, &format!("n={}", r.n), &r.citation)?;
                }
            }
            TableRows::FamilyRows(rows) => {
                for r in rows {
                    require_citation(&self.name, &format!("t={}", r.t), &r.citation)?;
                }
            }
            TableRows::Representatives(rows) => {
                for r in rows {
                    require_citation(&self.name, &r.label, &r.citation)?;
                    if r.m.len() != v {
                        return Err(Error::MalformedData(format!(
                            "table {}, row {}: {} multiplicities, expected {v}",
                            self.name,
                            r.label,
                            r.m.len()
                        )));
                    }
                }
            }
            TableRows::Nonexistence(rows) => {
                for r in rows {
                    require_citation(&self.name, &format!("n={} d={}", r.n, r.d), &r.citation)?;
                }
            }
        }
        Ok(())
    }
}

/// Directory holding the expected-table fixtures.
pub fn tables_dir() -> PathBuf {
    lcdkit::store::fixtures_dir().join("expected")
}

/// Reads and validates one expected table from a JSON file.
pub fn read_table(path: &Path) -> Result<ExpectedTable> {
    let text = fs::read_to_string(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            Error::DataUnavailable(format!("missing expected table {}", path.display()))
        } else {
            Error::Io(e)
        }
    })?;
    let table: ExpectedTable = serde_json::from_str(&text)
        .map_err(|e| Error::MalformedData(format!("{}: {e}", path.display())))?;
    table.validate()?;
    Ok(table)
}

/// Reads every `*.json` table under `dir` in file-name order.
pub fn load_tables(dir: &Path) -> Result<Vec<ExpectedTable>> {
    let entries = fs::read_dir(dir).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            Error::DataUnavailable(format!("missing expected-table directory {}", dir.display()))
        } else {
            Error::Io(e)
        }
    })?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(Error::DataUnavailable(format!(
            "no expected tables under {}",
            dir.display()
        )));
    }
    paths.iter().map(|p| read_table(p)).collect()
}

/// Outcome of checking one table row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowStatus {
    Pass,
    Fail { expected: String, got: String },
    Skipped,
}

/// One line of the verification report.
#[derive(Debug, Clone)]
pub struct RowReport {
    pub table: String,
    pub row: String,
    pub cost: CostClass,
    pub status: RowStatus,
}

impl fmt::Display for RowReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            RowStatus::Pass => write!(f, "PASS {} {}", self.table, self.row),
            RowStatus::Fail { expected, got } => write!(
                f,
                "FAIL {} {} expected {expected}, got {got}",
                self.table, self.row
            ),
            RowStatus::Skipped => {
                write!(f, "SKIP {} {} ({} row)", self.table, self.row, self.cost)
            }
        }
    }
}

/// Recomputes expected rows, sharing classification results across rows
/// and tables through a cache keyed by the full search parameters.
pub struct Verifier {
    budget: CostClass,
    options: ClassifyOptions,
    cache: HashMap<(u8, usize, u64, u64, Mode), ClassificationResult>,
}

impl Verifier {
    pub fn new(budget: CostClass, workers: usize) -> Self {
        Verifier {
            budget,
            options: ClassifyOptions { workers, ..ClassifyOptions::default() },
            cache: HashMap::new(),
        }
    }

    /// Classification with memoization; counts and representatives of
    /// repeated parameter sets are computed once.
    pub fn classified(
        &mut self,
        q: u8,
        k: usize,
        n: u64,
        d: u64,
        mode: Mode,
    ) -> Result<&ClassificationResult> {
        let key = (q, k, n, d, mode);
        if !self.cache.contains_key(&key) {
            let result = classify::classify_with(q, k, n, d, mode, &self.options)?;
            self.cache.insert(key, result);
        }
        Ok(&self.cache[&key])
    }

    /// Seeds the cache with an already-computed classification.
    pub fn preload(&mut self, result: ClassificationResult) {
        let key = (result.q, result.k, result.n, result.d, result.mode);
        self.cache.entry(key).or_insert(result);
    }

    /// Checks every row of `table`, skipping rows whose cost class exceeds
    /// the budget. Rows never abort the sweep: errors become failures.
    pub fn verify_table(&mut self, table: &ExpectedTable) -> Vec<RowReport> {
        if let Err(e) = table.validate() {
            return vec![RowReport {
                table: table.name.clone(),
                row: "(table)".into(),
                cost: CostClass::Fast,
                status: RowStatus::Fail {
                    expected: "a well-formed table".into(),
                    got: e.to_string(),
                },
            }];
        }
        let mut reports = Vec::with_capacity(table.rows.len());
        match &table.rows {
            TableRows::Counts(rows) => {
                for row in rows {
                    reports.push(self.report(table, format!("n={}", row.n), row.cost, |s| {
                        s.check_count(table.q, table.k, row)
                    }));
                }
            }
            TableRows::FamilyRows(rows) => {
                for row in rows {
                    reports.push(self.report(table, format!("t={}", row.t), row.cost, |s| {
                        s.check_family(table.q, table.k, row)
                    }));
                }
            }
            TableRows::Representatives(rows) => {
                for row in rows {
                    reports.push(self.report(table, row.label.clone(), row.cost, |s| {
                        s.check_representative(table.q, table.k, row)
                    }));
                }
            }
            TableRows::Nonexistence(rows) => {
                for row in rows {
                    let label = format!("n={} d={}", row.n, row.d);
                    reports.push(self.report(table, label, row.cost, |s| {
                        s.check_nonexistence(table.q, table.k, row)
                    }));
                }
            }
        }
        reports
    }

    fn report<F>(
        &mut self,
        table: &ExpectedTable,
        row: String,
        cost: CostClass,
        check: F,
    ) -> RowReport
    where
        F: FnOnce(&mut Self) -> Result<RowStatus>,
    {
        let status = if cost > self.budget {
            RowStatus::Skipped
        } else {
            check(self).unwrap_or_else(|e| RowStatus::Fail {
                expected: "a completed check".into(),
                got: e.to_string(),
            })
        };
        RowReport { table: table.name.clone(), row, cost, status }
    }

    fn check_count(&mut self, q: u8, k: usize, row: &CountRow) -> Result<RowStatus> {
        let d = theory::largest_lcd_weight(q, k, row.n)?.d;
        let got = self.classified(q, k, row.n, d, Mode::ExactD)?.count as u64;
        Ok(if got == row.expected {
            RowStatus::Pass
        } else {
            RowStatus::Fail { expected: row.expected.to_string(), got: got.to_string() }
        })
    }

    fn check_family(&mut self, q: u8, k: usize, row: &FamilyRow) -> Result<RowStatus> {
        let v = theory::gaussian_count(q, k);
        let slope = (q as u64).pow(k as u32 - 1);
        let fail = |what: &str, expected: String, got: String| {
            Ok(RowStatus::Fail { expected: format!("{what} {expected}"), got })
        };

        let s_prime = theory::threshold_s_prime(q, k, row.t, row.d_offset)?;
        if s_prime != row.s_prime {
            return fail("threshold", row.s_prime.to_string(), s_prime.to_string());
        }
        // The residual is constant along the family; probe it at the two
        // lengths a later lift-equals-direct check will touch.
        for s in [row.s_prime, row.s_prime + 1] {
            let n = v * s + row.t;
            let d = (slope * s) as i64 + row.d_offset;
            let formula = theory::largest_lcd_weight(q, k, n)?;
            if formula.d as i64 != d {
                return fail("weight at the sampled length", d.to_string(), formula.d.to_string());
            }
            let r = theory::residual_r(q, n, k, formula.d);
            if r != row.r as i64 {
                return fail("residual", row.r.to_string(), r.to_string());
            }
        }
        let base_n = q as u64 * row.r;
        let base_d = (q as u64 - 1) * row.r;
        if base_n != v * (row.s_prime - 1) + row.t {
            return fail(
                "base length",
                (v * (row.s_prime - 1) + row.t).to_string(),
                base_n.to_string(),
            );
        }
        let got = self.classified(q, k, base_n, base_d, Mode::ExactD)?.count as u64;
        if got != row.terminal_count {
            return fail("terminal count", row.terminal_count.to_string(), got.to_string());
        }
        Ok(RowStatus::Pass)
    }

    fn check_representative(&mut self, q: u8, k: usize, row: &RepresentativeRow) -> Result<RowStatus> {
        let fail = |what: &str, got: String| {
            Ok(RowStatus::Fail { expected: what.to_string(), got })
        };
        let mv = MultiplicityVector::new(q, k, row.m.clone())?;
        if mv.n() != row.n {
            return fail("stated length", mv.n().to_string());
        }
        if !mv.is_lcd() {
            return fail("an LCD code", "a non-LCD code".into());
        }
        let w = mv.min_weight()?;
        if w != row.d {
            return fail("stated minimum weight", w.to_string());
        }
        let g = mv.generator_matrix()?;
        if !dual_distance_at_least(&g, 2)? {
            return fail("dual distance at least 2", "a zero column".into());
        }
        let optimal = theory::largest_lcd_weight(q, k, row.n)?.d;
        if optimal != row.d {
            return fail("the optimal minimum weight", format!("{optimal} by formula"));
        }
        let classes = self.classified(q, k, row.n, row.d, Mode::ExactD)?.clone();
        let mut hits = 0usize;
        for rep in &classes.representatives {
            if classify::are_equivalent(&mv, rep)? {
                hits += 1;
            }
        }
        if hits != 1 {
            return fail("equivalence to exactly one class", format!("{hits} classes"));
        }
        Ok(RowStatus::Pass)
    }

    fn check_nonexistence(&mut self, q: u8, k: usize, row: &NonexistenceRow) -> Result<RowStatus> {
        let got = self.classified(q, k, row.n, row.d, Mode::AtLeastD)?.count;
        Ok(if got == 0 {
            RowStatus::Pass
        } else {
            RowStatus::Fail { expected: "no code".into(), got: format!("{got} classes") }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_counts_table() -> ExpectedTable {
        ExpectedTable {
            name: "counts_3_2_sample".into(),
            citation: "ternary length-2 count table".into(),
            q: 3,
            k: 2,
            rows: TableRows::Counts(vec![
                CountRow {
                    n: 11,
                    expected: 3,
                    cost: CostClass::Fast,
                    citation: "row 11".into(),
                },
                CountRow {
                    n: 12,
                    expected: 2,
                    cost: CostClass::Heavy,
                    citation: "row 12".into(),
                },
            ]),
        }
    }

    #[test]
    fn table_round_trips_through_json() {
        let table = tiny_counts_table();
        let text = serde_json::to_string_pretty(&table).unwrap();
        assert!(text.contains("\"kind\": \"counts\""));
        let back: ExpectedTable = serde_json::from_str(&text).unwrap();
        back.validate().unwrap();
        assert_eq!(back.name, table.name);
        assert_eq!(back.rows.len(), 2);
    }

    #[test]
    fn verifier_passes_and_skips_by_budget() {
        let table = tiny_counts_table();
        let mut verifier = Verifier::new(CostClass::Medium, 1);
        let reports = verifier.verify_table(&table);
        assert_eq!(reports.len(), 2);
        assert_eq!(reports[0].status, RowStatus::Pass);
        assert_eq!(reports[1].status, RowStatus::Skipped);

        let mut all = Verifier::new(CostClass::Heavy, 1);
        let reports = all.verify_table(&table);
        assert!(reports.iter().all(|r| r.status == RowStatus::Pass));
    }

    #[test]
    fn verifier_reports_a_wrong_count() {
        let mut table = tiny_counts_table();
        if let TableRows::Counts(rows) = &mut table.rows {
            rows[0].expected = 4;
        }
        let mut verifier = Verifier::new(CostClass::Fast, 1);
        let reports = verifier.verify_table(&table);
        match &reports[0].status {
            RowStatus::Fail { expected, got } => {
                assert_eq!(expected, "4");
                assert_eq!(got, "3");
            }
            other => panic!("expected a failure, got {other:?}"),
        }
    }

    #[test]
    fn family_and_nonexistence_checks_work() {
        let table = ExpectedTable {
            name: "families_3_2_sample".into(),
            citation: "ternary length-2 family table".into(),
            q: 3,
            k: 2,
            rows: TableRows::FamilyRows(vec![FamilyRow {
                t: 0,
                d_offset: -1,
                s_prime: 4,
                r: 4,
                terminal_count: 2,
                cost: CostClass::Fast,
                citation: "row 4s".into(),
            }]),
        };
        let mut verifier = Verifier::new(CostClass::Heavy, 1);
        assert_eq!(verifier.verify_table(&table)[0].status, RowStatus::Pass);

        let none = ExpectedTable {
            name: "nonexistence_3_2_sample".into(),
            citation: "no ternary [4s, 2, 3s] code".into(),
            q: 3,
            k: 2,
            rows: TableRows::Nonexistence(vec![NonexistenceRow {
                n: 4,
                d: 3,
                cost: CostClass::Fast,
                citation: "s = 1".into(),
            }]),
        };
        assert_eq!(verifier.verify_table(&none)[0].status, RowStatus::Pass);
    }

    #[test]
    fn representative_check_accepts_a_published_vector() {
        let table = ExpectedTable {
            name: "representatives_3_2_sample".into(),
            citation: "ternary length-2 representatives".into(),
            q: 3,
            k: 2,
            rows: TableRows::Representatives(vec![RepresentativeRow {
                label: "T_{11,2,1}".into(),
                n: 11,
                d: 7,
                m: vec![4, 4, 3, 0],
                cost: CostClass::Fast,
                citation: "first length-11 representative".into(),
            }]),
        };
        let mut verifier = Verifier::new(CostClass::Heavy, 1);
        assert_eq!(verifier.verify_table(&table)[0].status, RowStatus::Pass);
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let mut table = tiny_counts_table();
        table.citation = "  ".into();
        assert!(matches!(table.validate(), Err(Error::MalformedData(_))));

        let short = ExpectedTable {
            name: "representatives_bad".into(),
            citation: "x".into(),
            q: 3,
            k: 2,
            rows: TableRows::Representatives(vec![RepresentativeRow {
                label: "bad".into(),
                n: 5,
                d: 3,
                m: vec![1, 2],
                cost: CostClass::Fast,
                citation: "x".into(),
            }]),
        };
        assert!(matches!(short.validate(), Err(Error::MalformedData(_))));
    }
}
