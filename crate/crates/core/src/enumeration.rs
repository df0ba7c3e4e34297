//! Exhaustive enumeration of Le-diagrams and the positroid count tables.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write as _};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{self, Set};
use crate::diagram::{LeDiagram, Shape};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::network::bases_from_flows;
use crate::paving::{all_pldc_functions, classify_paving, is_sparse_paving_f};
use crate::transversal::{is_fundamental_transversal, is_transversal};

/// Bumped whenever a change could alter cached counts.
pub const CACHE_FORMAT: u32 = 1;

/// Version string recorded in cache records and JSON output.
pub fn version() -> String {
    format!("{}+cache{CACHE_FORMAT}", env!("CARGO_PKG_VERSION"))
}

/// Every shape inside the `k x (n-k)` box, row lengths weakly decreasing,
/// in reverse lexicographic order (the full box first).
pub fn shapes(k: usize, n: usize) -> Vec<Shape> {
    fn grow(k: usize, n: usize, max: usize, parts: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if parts.len() == k {
            out.push(Shape::new(k, n, parts.clone()).expect("parts fit the box"));
            return;
        }
        for p in (0..=max).rev() {
            parts.push(p);
            grow(k, n, p, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n && n - k <= bits::MAX_GROUND {
        grow(k, n, n - k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Calls `visit` on every Le-filling of `shape`. Cells are decided column
/// by column from the left, top to bottom; a cell with a bullet above it and
/// a bullet to its left is forced, every other cell is free, so no branch
/// dead-ends.
pub fn for_each_filling(shape: &Shape, visit: &mut dyn FnMut(&LeDiagram)) {
    let cells: Vec<(usize, usize)> = (1..=shape.width())
        .flat_map(|c| (1..=shape.column_height(c)).map(move |r| (r, c)))
        .collect();
    let mut rows = vec![0u64; shape.k()];
    fill(shape, &cells, 0, false, &mut rows, visit);
}

fn fill(
    shape: &Shape,
    cells: &[(usize, usize)],
    idx: usize,
    filled_above: bool,
    rows: &mut Vec<u64>,
    visit: &mut dyn FnMut(&LeDiagram),
) {
    let Some(&(r, c)) = cells.get(idx) else {
        let d = LeDiagram::from_row_masks(shape.clone(), rows.clone()).expect("filling fits shape");
        visit(&d);
        return;
    };
    // A new column resets the "bullet above" flag.
    let above = filled_above && r > 1;
    let bit = 1u64 << (c - 1);
    let has_left = rows[r - 1] & (bit - 1) != 0;
    if !(above && has_left) {
        fill(shape, cells, idx + 1, above, rows, visit);
    }
    rows[r - 1] |= bit;
    fill(shape, cells, idx + 1, true, rows, visit);
    rows[r - 1] &= !bit;
}

/// All Le-diagrams in the `k x (n-k)` box, each exactly once.
pub fn enumerate_le_diagrams(k: usize, n: usize) -> Vec<LeDiagram> {
    let mut out = Vec::new();
    for shape in shapes(k, n) {
        for_each_filling(&shape, &mut |d| out.push(d.clone()));
    }
    out
}

/// Matroid properties counted in the tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    All,
    Transversal,
    Fundamental,
    Paving,
    SparsePaving,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::All,
        Property::Transversal,
        Property::Fundamental,
        Property::Paving,
        Property::SparsePaving,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::All => "all",
            Property::Transversal => "transversal",
            Property::Fundamental => "fundamental",
            Property::Paving => "paving",
            Property::SparsePaving => "sparse-paving",
        }
    }
}

impl std::fmt::Display for Property {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Argument(format!("unknown property {s:?}")))
    }
}

/// The positroid of a Le-diagram as a matroid.
pub fn positroid(diagram: &LeDiagram) -> Result<Matroid> {
    Ok(Matroid::from_bases_unchecked(diagram.n(), bases_from_flows(diagram)?))
}

/// Whether the positroid of `diagram` has `property`. Transversality is
/// decided on the loopless reduction, which changes neither verdict.
pub fn has_property(diagram: &LeDiagram, property: Property) -> Result<bool> {
    match property {
        Property::All => Ok(true),
        Property::Transversal => is_transversal(&positroid(&diagram.loopless_reduction())?),
        Property::Fundamental => is_fundamental_transversal(&positroid(&diagram.loopless_reduction())?),
        Property::Paving => Ok(classify_paving(diagram)?.is_paving()),
        Property::SparsePaving => Ok(classify_paving(diagram)?.is_sparse_paving(diagram.k(), diagram.n())),
    }
}

/// Number of rank-`k` positroids on `[n]` with `property`, scanning shapes
/// in parallel on the current rayon pool.
pub fn count_with_property(k: usize, n: usize, property: Property) -> Result<u64> {
    count_until(k, n, property, None).map(|c| c.expect("no deadline"))
}

fn count_until(k: usize, n: usize, property: Property, stop: Option<(&AtomicBool, Instant)>) -> Result<Option<u64>> {
    let expired = || match stop {
        Some((flag, deadline)) => {
            if Instant::now() >= deadline {
                flag.store(true, Ordering::Relaxed);
            }
            flag.load(Ordering::Relaxed)
        }
        None => false,
    };
    let counts: Vec<Result<Option<u64>>> = shapes(k, n)
        .par_iter()
        .map(|shape| {
            if expired() {
                return Ok(None);
            }
            let mut count = 0u64;
            let mut failure = None;
            let mut seen = 0u32;
            let mut abandoned = false;
            for_each_filling(shape, &mut |d| {
                if failure.is_some() || abandoned {
                    return;
                }
                seen += 1;
                if seen.is_multiple_of(256) && expired() {
                    abandoned = true;
                    return;
                }
                match has_property(d, property) {
                    Ok(true) => count += 1,
                    Ok(false) => {}
                    Err(e) => failure = Some(e),
                }
            });
            match failure {
                Some(e) => Err(e),
                None if abandoned => Ok(None),
                None => Ok(Some(count)),
            }
        })
        .collect();
    let mut total = 0;
    for c in counts {
        match c? {
            Some(v) => total += v,
            None => return Ok(None),
        }
    }
    Ok(Some(total))
}

/// Subsets of `[n]` with no two cyclically consecutive elements. For
/// `n = 1` the single element is not its own neighbour.
pub fn sparse_paving_subsets(n: usize) -> Vec<Set> {
    (0..1u64 << n)
        .filter(|&a| {
            (1..=n).all(|i| {
                let next = i % n + 1;
                next == i || !(bits::contains(a, i) && bits::contains(a, next))
            })
        })
        .collect()
}

/// Sparse-paving positroid count from compliant functions: `1` for
/// `k ∈ {0, n}`, `n + 1` for `k ∈ {1, n-1}`, and otherwise the compliant
/// functions passing the cyclic adjacency test.
pub fn count_sparse_paving(k: usize, n: usize) -> Result<u64> {
    if k > n {
        return Err(Error::Argument(format!("rank {k} exceeds n = {n}")));
    }
    if k == 0 || k == n {
        return Ok(1);
    }
    if k == 1 || k + 1 == n {
        return Ok(n as u64 + 1);
    }
    let mut count = 0;
    for f in all_pldc_functions(k, n) {
        if is_sparse_paving_f(&f)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Sparse-paving count by testing every positroid's bases directly.
pub fn count_sparse_paving_brute(k: usize, n: usize) -> Result<u64> {
    let mut count = 0;
    for d in enumerate_le_diagrams(k, n) {
        if positroid(&d)?.is_sparse_paving() {
            count += 1;
        }
    }
    Ok(count)
}

/// One line of the sparse-paving-subset comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceRow {
    pub n: usize,
    /// Cyclically non-adjacent subsets of `[n]`, counted directly.
    pub brute_force: u64,
    /// `s_n = s_{n-1} + s_{n-2}` from `s_0 = 1`, `s_1 = 2`.
    pub recurrence: u64,
}

impl RecurrenceRow {
    pub fn agrees(&self) -> bool {
        self.brute_force == self.recurrence
    }
}

/// Compares the direct count of sparse-paving subsets with the Fibonacci
/// recurrence for `n = 0..=n_max`. They part ways at `n = 4` (7 against 8);
/// the direct count follows `s_n = s_{n-1} + s_{n-2}` only from
/// `s_1 = 1`, `s_2 = 3` (Lucas numbers, with `s_0 = 1`, `s_1 = 2` as
/// special cases of the empty and one-point ground sets).
pub fn sparse_paving_recurrence_report(n_max: usize) -> Vec<RecurrenceRow> {
    let mut rec = vec![1u64, 2];
    while rec.len() <= n_max {
        let next = rec[rec.len() - 1] + rec[rec.len() - 2];
        rec.push(next);
    }
    (0..=n_max)
        .map(|n| RecurrenceRow {
            n,
            brute_force: sparse_paving_subsets(n).len() as u64,
            recurrence: rec[n],
        })
        .collect()
}

/// Triangular table of counts, `cells[n - 1][k]` for `1 <= n <= n_max`.
/// Missing cells were not finished within the time budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub property: Property,
    pub n_max: usize,
    pub cells: Vec<Vec<Option<u64>>>,
}

impl CountTable {
    pub fn new(property: Property, n_max: usize) -> Self {
        Self {
            property,
            n_max,
            cells: (1..=n_max).map(|n| vec![None; n + 1]).collect(),
        }
    }

    pub fn get(&self, n: usize, k: usize) -> Option<u64> {
        self.cells.get(n.checked_sub(1)?)?.get(k).copied().flatten()
    }

    /// The row for `n` when every cell is known.
    pub fn row(&self, n: usize) -> Option<Vec<u64>> {
        self.cells.get(n.checked_sub(1)?)?.iter().copied().collect()
    }

    pub fn completed(&self) -> usize {
        self.cells.iter().flatten().filter(|c| c.is_some()).count()
    }

    pub fn total(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn is_complete(&self) -> bool {
        self.completed() == self.total()
    }

    /// The table itself, or a budget error listing how far it got.
    pub fn require_complete(self) -> Result<Self> {
        if self.is_complete() {
            Ok(self)
        } else {
            Err(Error::Budget {
                completed: self.completed(),
                total: self.total(),
            })
        }
    }

    /// Markdown, one row per n and one column per k; unfinished cells show `?`.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = (0..=self.n_max).map(|k| format!("k={k}")).collect();
        let _ = writeln!(out, "| n | {} |", header.join(" | "));
        let _ = writeln!(out, "|---|{}", "---|".repeat(self.n_max + 1));
        for (idx, row) in self.cells.iter().enumerate() {
            let cells: Vec<String> = (0..=self.n_max)
                .map(|k| match row.get(k) {
                    Some(Some(v)) => v.to_string(),
                    Some(None) => "?".into(),
                    None => String::new(),
                })
                .collect();
            let _ = writeln!(out, "| {} | {} |", idx + 1, cells.join(" | "));
        }
        out
    }

    /// `n,k,count` lines; unfinished cells have an empty count.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,count\n");
        for (idx, row) in self.cells.iter().enumerate() {
            for (k, cell) in row.iter().enumerate() {
                let value = cell.map(|v| v.to_string()).unwrap_or_default();
                let _ = writeln!(out, "{},{k},{value}", idx + 1);
            }
        }
        out
    }
}

/// Knobs for [`emit_table`].
#[derive(Debug, Clone, Default)]
pub struct TableOptions {
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
    /// Wall-clock budget for the whole table.
    pub budget: Option<Duration>,
    /// JSON-lines cache file.
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CacheRecord {
    k: usize,
    n: usize,
    property: Property,
    version: String,
    count: u64,
}

type CacheKey = (usize, usize, Property, String);

fn read_cache(path: &Path) -> Result<HashMap<CacheKey, u64>> {
    let mut map = HashMap::new();
    let file = match std::fs::File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(map),
        Err(e) => return Err(Error::Io(format!("{}: {e}", path.display()))),
    };
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| Error::Io(e.to_string()))?;
        // Torn or foreign lines are skipped; later records win.
        if let Ok(rec) = serde_json::from_str::<CacheRecord>(&line) {
            map.insert((rec.k, rec.n, rec.property, rec.version), rec.count);
        }
    }
    Ok(map)
}

fn append_cache(path: &Path, record: &CacheRecord) -> Result<()> {
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let line = serde_json::to_string(record).expect("record serializes");
    writeln!(file, "{line}").map_err(|e| Error::Io(e.to_string()))
}

/// Fills the table for `1 <= n <= n_max`, cell by cell in order of `n`
/// then `k`. When the budget runs out the remaining cells stay empty.
pub fn emit_table(property: Property, n_max: usize, options: &TableOptions) -> Result<CountTable> {
    if n_max > 12 {
        return Err(Error::Argument(format!("n_max = {n_max} is beyond the supported 12")));
    }
    let pool = {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(jobs) = options.jobs {
            builder = builder.num_threads(jobs.max(1));
        }
        builder.build().map_err(|e| Error::Argument(format!("thread pool: {e}")))?
    };
    let version = version();
    let cached = match &options.cache {
        Some(path) => read_cache(path)?,
        None => HashMap::new(),
    };
    let start = Instant::now();
    let deadline = options.budget.map(|b| start + b);
    let flag = AtomicBool::new(false);
    let mut table = CountTable::new(property, n_max);
    'outer: for n in 1..=n_max {
        for k in 0..=n {
            if let Some(&count) = cached.get(&(k, n, property, version.clone())) {
                table.cells[n - 1][k] = Some(count);
                continue;
            }
            let stop = deadline.map(|d| (&flag, d));
            let result = pool.install(|| count_until(k, n, property, stop))?;
            let Some(count) = result else {
                break 'outer;
            };
            table.cells[n - 1][k] = Some(count);
            if let Some(path) = &options.cache {
                append_cache(
                    path,
                    &CacheRecord {
                        k,
                        n,
                        property,
                        version: version.clone(),
                        count,
                    },
                )?;
            }
        }
    }
    Ok(table)
}
