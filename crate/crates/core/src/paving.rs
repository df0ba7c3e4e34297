//! Paving positroids through compliant functions `f : [n] -> [0, n-k-1]`.
//!
//! Cells of the `k x (n-k)` box on its right/top/left boundary are numbered:
//! the bottom-right corner gets 1, the top row gets `2..=n-k+1` from right to
//! left, and the left column gets `n-k+1..=n` from top to bottom (the
//! top-left cell carries `n-k+1` in both runs). The diagram `D_{k,n}(f)`
//! starts from the full box and
//!
//! * shortens the bottom row by `f(1)` cells,
//! * for a top-row label `i`, empties cell `i` and the `f(i) - 1` cells to its
//!   left,
//! * for a left-column label `i > n-k+1`, empties cell `i` and the
//!   `f(i) - 1` cells to its right.
//!
//! The upper bound for top-row labels is `f(i) <= n-k+2-i`, the number of
//! cells from label `i` to the left edge. A bound one smaller would exclude
//! diagrams that are paving, such as `.*/**`.

use serde::{Deserialize, Serialize};

use crate::bits::{self, Set};
use crate::diagram::{LeDiagram, Shape};
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// Cell (row, column) carrying each label `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryNumbering {
    k: usize,
    n: usize,
    cells: Vec<(usize, usize)>,
}

impl BoundaryNumbering {
    pub fn cell_of(&self, label: usize) -> (usize, usize) {
        self.cells[label - 1]
    }

    /// All labels on a cell, increasing.
    pub fn labels_at(&self, row: usize, col: usize) -> Vec<usize> {
        (1..=self.n).filter(|&l| self.cells[l - 1] == (row, col)).collect()
    }

    /// The box with labelled boundary cells; shared cells show as `a/b`.
    pub fn to_text(&self) -> String {
        let width = self.n - self.k;
        let mut grid = vec![vec![String::from("."); width]; self.k];
        for r in 1..=self.k {
            for c in 1..=width {
                let labels = self.labels_at(r, c);
                if !labels.is_empty() {
                    grid[r - 1][c - 1] = labels.iter().map(usize::to_string).collect::<Vec<_>>().join("/");
                }
            }
        }
        let w = grid.iter().flatten().map(String::len).max().unwrap_or(1);
        grid.iter()
            .map(|row| row.iter().map(|s| format!("{s:>w$}")).collect::<Vec<_>>().join(" ") + "\n")
            .collect()
    }
}

pub fn boundary_numbering(k: usize, n: usize) -> Result<BoundaryNumbering> {
    if k == 0 || k >= n {
        return Err(Error::Argument(format!("boundary numbering needs 1 <= k < n, got k = {k}, n = {n}")));
    }
    let w = n - k;
    let cells = (1..=n)
        .map(|i| {
            if i == 1 {
                (k, w)
            } else if i <= w + 1 {
                (1, w + 2 - i)
            } else {
                (i - w, 1)
            }
        })
        .collect();
    Ok(BoundaryNumbering { k, n, cells })
}

/// A function `f : [n] -> [0, n-k-1]`, stored as `f[i - 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PldcFunction {
    k: usize,
    n: usize,
    f: Vec<usize>,
}

impl PldcFunction {
    pub fn new(k: usize, n: usize, f: Vec<usize>) -> Result<Self> {
        if k > n {
            return Err(Error::Argument(format!("rank {k} exceeds n = {n}")));
        }
        if f.len() != n {
            return Err(Error::Argument(format!("f needs {n} values, got {}", f.len())));
        }
        if let Some(i) = f.iter().position(|&v| v > 0 && v + k + 1 > n) {
            return Err(Error::Argument(format!(
                "f({}) = {} is outside [0, {}]",
                i + 1,
                f[i],
                n as i64 - k as i64 - 1
            )));
        }
        Ok(Self { k, n, f })
    }

    pub fn zero(k: usize, n: usize) -> Result<Self> {
        Self::new(k, n, vec![0; n])
    }

    /// Sets `f(i) = v` for each listed pair, zero elsewhere.
    pub fn from_pairs(k: usize, n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut f = vec![0; n];
        for &(i, v) in pairs {
            if i == 0 || i > n {
                return Err(Error::Argument(format!("argument {i} outside [{n}]")));
            }
            f[i - 1] = v;
        }
        Self::new(k, n, f)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[usize] {
        &self.f
    }

    /// `f(i)` for `i` in `1..=n`.
    pub fn at(&self, i: usize) -> usize {
        self.f[i - 1]
    }

    fn support(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| self.at(i) > 0).collect()
    }

    fn width(&self) -> usize {
        self.n - self.k
    }

    /// Numbers of the failed diagram-compliance conditions.
    pub fn ldc_violations(&self) -> Vec<usize> {
        let (n, w) = (self.n, self.width());
        let f = |i: usize| self.at(i) as i64;
        let w = w as i64;
        let mut failed = Vec::new();
        let top = |i: usize| i > 1 && i as i64 <= w + 1;
        if (2..=n).any(|i| top(i) && f(i) > w + 2 - i as i64) {
            failed.push(1);
        }
        if (1..=n).any(|i| !top(i) && f(i) > w - 1) {
            failed.push(2);
        }
        let support = self.support();
        let overlap = support.iter().any(|&i| {
            support
                .iter()
                .any(|&j| i > 1 && i < j && top(j) && f(i) >= (j - i) as i64)
        });
        if overlap {
            failed.push(3);
        }
        if n >= 1 && f(1) + f(n) > w - 1 && (f(1) > 0 || f(n) > 0) {
            failed.push(4);
        }
        failed
    }

    /// Numbers of the failed paving conditions (checked on top of
    /// diagram compliance).
    pub fn pldc_violations(&self) -> Vec<usize> {
        let (n, w) = (self.n, self.width() as i64);
        let f = |i: usize| self.at(i) as i64;
        let top = |i: usize| i as i64 <= w + 1;
        let support = self.support();
        let mut failed = [false; 4];
        for (a, &i) in support.iter().enumerate() {
            for &j in &support[a + 1..] {
                let gap = (j - i) as i64;
                if i == 1 && j < n {
                    let ok = if top(j) { f(1) + 2 <= j as i64 } else { f(1) + f(j) <= w };
                    failed[0] |= !ok;
                }
                if i > 1 && top(i) && !top(j) {
                    failed[1] |= f(i) + f(j) > gap.min(w);
                }
                if !top(i) {
                    failed[2] |= f(j) > (gap - 1).min(w - f(i));
                }
                if i == 1 && j == n {
                    let ok = support
                        .iter()
                        .filter(|&&l| l != 1 && l != n)
                        .all(|&l| f(1) + f(l) + f(n) <= w);
                    failed[3] |= !ok;
                }
            }
        }
        (1..=4).filter(|&c| failed[c - 1]).collect()
    }

    pub fn is_ldc(&self) -> bool {
        self.ldc_violations().is_empty()
    }

    pub fn is_pldc(&self) -> bool {
        self.is_ldc() && self.pldc_violations().is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("function serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PldcFunction =
            serde_json::from_str(text).map_err(|e| Error::Argument(format!("bad function JSON: {e}")))?;
        Self::new(raw.k, raw.n, raw.f)
    }
}

impl std::fmt::Display for PldcFunction {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let nonzero: Vec<String> = self
            .support()
            .into_iter()
            .map(|i| format!("f({i})={}", self.at(i)))
            .collect();
        if nonzero.is_empty() {
            write!(out, "f = 0 (k={}, n={})", self.k, self.n)
        } else {
            write!(out, "{} (k={}, n={})", nonzero.join(", "), self.k, self.n)
        }
    }
}

/// `D_{k,n}(f)`. Removals that fall outside the shortened shape are ignored.
pub fn build_pldc_diagram(f: &PldcFunction) -> Result<LeDiagram> {
    let failed = f.ldc_violations();
    if !failed.is_empty() {
        return Err(Error::Precondition(format!(
            "{f} is not diagram compliant, conditions {failed:?} fail"
        )));
    }
    let (k, n, w) = (f.k, f.n, f.width());
    let mut parts = vec![w; k];
    if k > 0 {
        parts[k - 1] = w - f.at(1);
    }
    let mask = |len: usize| if len == 0 { 0 } else { u64::MAX >> (64 - len) };
    let mut rows: Vec<u64> = parts.iter().map(|&p| mask(p)).collect();
    for i in 2..=n {
        let v = f.at(i);
        if v == 0 {
            continue;
        }
        if i <= w + 1 {
            let c = w + 2 - i;
            let cleared = mask(c) & !mask(c.saturating_sub(v));
            rows[0] &= !cleared;
        } else {
            rows[i - w - 1] &= !mask(v);
        }
    }
    LeDiagram::from_row_masks(Shape::new(k, n, parts)?, rows)
}

/// The sets `H_i` for `f(i) > 0`, with `H_1 ∪ H_n` replacing both when
/// `f(1), f(n) > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionFamily {
    pub k: usize,
    pub n: usize,
    /// `(i, H_i)` for each nonzero `f(i)` other than the merged pair.
    pub sets: Vec<(usize, Set)>,
    /// `H_1 ∪ H_n`, when both are present.
    pub merged: Option<Set>,
}

impl ObstructionFamily {
    /// Every obstruction set, `Ĥ` last.
    pub fn all(&self) -> Vec<Set> {
        let mut out: Vec<Set> = self.sets.iter().map(|&(_, s)| s).collect();
        out.extend(self.merged);
        out
    }

    /// Dependent hyperplanes of the positroid: the obstruction sets for
    /// `k >= 2`, their union (the loops) for `k = 1`.
    pub fn hyperplanes(&self) -> Vec<Set> {
        let all = self.all();
        if self.k == 1 {
            let union = all.iter().fold(0, |acc, &s| acc | s);
            return if union == 0 { Vec::new() } else { vec![union] };
        }
        all
    }
}

fn wrapped_range(n: usize, lo: usize, hi: usize) -> Set {
    (lo..=hi).fold(0, |acc, v| acc | bits::bit((v - 1) % n + 1))
}

pub fn obstructions(f: &PldcFunction) -> Result<ObstructionFamily> {
    if !f.is_pldc() {
        return Err(Error::Precondition(format!("{f} is not paving compliant")));
    }
    let (k, n, w) = (f.k, f.n, f.width());
    let h = |i: usize| {
        let v = f.at(i);
        if i <= w + 1 {
            wrapped_range(n, i, i + k + v - 2)
        } else {
            wrapped_range(n, i + 1 - v, i + k - 1)
        }
    };
    let merge = n > 1 && f.at(1) > 0 && f.at(n) > 0;
    let sets = f
        .support()
        .into_iter()
        .filter(|&i| !(merge && (i == 1 || i == n)))
        .map(|i| (i, h(i)))
        .collect();
    Ok(ObstructionFamily {
        k,
        n,
        sets,
        merged: merge.then(|| h(1) | h(n)),
    })
}

/// The compliant function whose diagram is `diagram`, if the positroid is
/// paving. Read off the shape and the empty runs without computing bases.
pub fn recognize_paving_positroid(diagram: &LeDiagram) -> Result<Option<PldcFunction>> {
    if let Some(v) = diagram.le_violation() {
        return Err(Error::Precondition(format!("not a Le-diagram: {v}")));
    }
    let coloops = diagram.coloops();
    if !coloops.is_empty() {
        return Err(Error::Precondition(format!(
            "coloops {coloops:?} present; use classify_paving for the coloop decomposition"
        )));
    }
    let (k, n) = (diagram.k(), diagram.n());
    if k == 0 {
        return Ok(Some(PldcFunction::zero(0, n)?));
    }
    let w = n - k;
    let parts = diagram.shape().parts();
    if parts[..k - 1].iter().any(|&p| p != w) {
        return Ok(None);
    }
    let mut f = vec![0usize; n];
    f[0] = w - parts[k - 1];
    // Top row: each maximal empty run is charged to the label of its
    // rightmost cell.
    let top = diagram.row_mask(1);
    let mut c = parts[0];
    while c >= 1 {
        if top >> (c - 1) & 1 == 1 {
            c -= 1;
            continue;
        }
        let right = c;
        while c >= 1 && top >> (c - 1) & 1 == 0 {
            c -= 1;
        }
        f[w + 2 - right - 1] = right - c;
    }
    // Other rows: the empty cells must form a prefix.
    for r in 2..=k {
        let row = diagram.row_mask(r);
        let prefix = row.trailing_zeros() as usize;
        let expected = if parts[r - 1] == 0 { 0 } else { (u64::MAX >> (64 - parts[r - 1])) & !((1u64 << prefix) - 1) };
        if row != expected {
            return Ok(None);
        }
        f[w + r - 1] = prefix;
    }
    let Ok(candidate) = PldcFunction::new(k, n, f) else {
        return Ok(None);
    };
    if !candidate.is_pldc() || build_pldc_diagram(&candidate)? != *diagram {
        return Ok(None);
    }
    Ok(Some(candidate))
}

/// Paving verdict for any Le-diagram, including those with coloops.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PavingClass {
    /// Coloop-free and of the form `D_{k,n}(f)` for compliant `f`.
    Compliant { f: PldcFunction },
    /// The Boolean matroid: every element is a coloop.
    Boolean,
    /// Exactly one coloop `c` and a uniform matroid on the rest.
    SingleColoop { coloop: usize },
    NotPaving,
}

impl PavingClass {
    pub fn is_paving(&self) -> bool {
        !matches!(self, Self::NotPaving)
    }

    /// Sparse paving for a rank-`k` positroid on `[n]` of this class. With a
    /// single coloop the dual has a loop, so the dual is paving only in
    /// corank at most 1.
    pub fn is_sparse_paving(&self, k: usize, n: usize) -> bool {
        match self {
            Self::Compliant { f } => is_sparse_paving_f(f).unwrap_or(false),
            Self::Boolean => true,
            Self::SingleColoop { .. } => n - k <= 1,
            Self::NotPaving => false,
        }
    }
}

/// Extends recognition to coloops: a non-Boolean paving matroid has at most
/// one coloop `c`, and then equals `B({c}) ⊕ U_{k-1}(E \ c)`. On diagrams
/// that is one empty row with every other row full and of length `n - k`.
pub fn classify_paving(diagram: &LeDiagram) -> Result<PavingClass> {
    let coloops = diagram.coloops();
    if coloops.is_empty() {
        return Ok(match recognize_paving_positroid(diagram)? {
            Some(f) => PavingClass::Compliant { f },
            None => PavingClass::NotPaving,
        });
    }
    if let Some(v) = diagram.le_violation() {
        return Err(Error::Precondition(format!("not a Le-diagram: {v}")));
    }
    let (k, n) = (diagram.k(), diagram.n());
    if k == n {
        return Ok(PavingClass::Boolean);
    }
    if coloops.len() > 1 {
        return Ok(PavingClass::NotPaving);
    }
    let w = n - k;
    let full = u64::MAX >> (64 - w);
    let rest_full = (1..=k)
        .filter(|&r| diagram.row_mask(r) != 0)
        .all(|r| diagram.shape().parts()[r - 1] == w && diagram.row_mask(r) == full);
    Ok(if rest_full {
        PavingClass::SingleColoop { coloop: coloops[0] }
    } else {
        PavingClass::NotPaving
    })
}

/// The coloop structure of a paving matroid: `Some(c)` when `M` is
/// non-Boolean with the single coloop `c`, which forces
/// `M = B({c}) ⊕ U_{r-1}(E \ c)`.
pub fn paving_coloop(m: &Matroid) -> Result<Option<usize>> {
    if !m.is_paving() {
        return Err(Error::Precondition("matroid is not paving".into()));
    }
    let coloops = bits::elements(m.coloops());
    if m.rank() == m.n() || coloops.is_empty() {
        return Ok(None);
    }
    if coloops.len() > 1 {
        return Err(Error::Structure(format!(
            "non-Boolean paving matroid with coloops {coloops:?}"
        )));
    }
    let c = coloops[0];
    let rest = m.ground() & !bits::bit(c);
    let expected: Vec<Set> = crate::matroid::subsets_of(rest, m.rank() - 1)
        .map(|b| b | bits::bit(c))
        .collect();
    if Matroid::from_bases_unchecked(m.n(), expected) != *m {
        return Err(Error::Structure(format!(
            "coloop {c} does not split off a uniform matroid"
        )));
    }
    Ok(Some(c))
}

/// Sparse-paving test on a compliant function. For `k >= 2` this is
/// `f(i) + f(i+1) <= 1` cyclically. In rank 1 the dual of a paving matroid
/// with loop set `L` is paving only when `|L| <= 1`, so the test becomes
/// `Σ f <= 1`.
pub fn is_sparse_paving_f(f: &PldcFunction) -> Result<bool> {
    if !f.is_pldc() {
        return Err(Error::Precondition(format!("{f} is not paving compliant")));
    }
    if f.k == 1 {
        return Ok(f.f.iter().sum::<usize>() <= 1);
    }
    let n = f.n;
    Ok((1..=n).all(|i| f.at(i) + f.at(i % n + 1) <= 1))
}

/// The cyclic adjacency test `f(i) + f(i+1) <= 1` with no rank-1 exception.
/// It accepts rank-1 functions whose dual has parallel elements.
pub fn adjacent_sum_at_most_one(f: &PldcFunction) -> bool {
    let n = f.n;
    n == 0 || (1..=n).all(|i| f.at(i) + f.at(i % n + 1) <= 1)
}

/// Every compliant function for `(k, n)`, in lexicographic order of values.
pub fn all_pldc_functions(k: usize, n: usize) -> Vec<PldcFunction> {
    let mut out = Vec::new();
    if k >= n {
        if k == n {
            out.extend(PldcFunction::zero(k, n));
        }
        return out;
    }
    let max = n - k - 1;
    let mut values = vec![0usize; n];
    loop {
        let f = PldcFunction { k, n, f: values.clone() };
        if f.is_pldc() {
            out.push(f);
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if values[pos] < max {
                values[pos] += 1;
                break;
            }
            values[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::bases_from_flows;

    fn set(e: &[usize]) -> Set {
        bits::from_elements(e.iter().copied())
    }

    fn condition_one_failure() -> PldcFunction {
        PldcFunction::from_pairs(4, 10, &[(1, 2), (3, 1), (9, 3)]).unwrap()
    }

    fn f_4_10(pairs: &[(usize, usize)]) -> PldcFunction {
        PldcFunction::from_pairs(4, 10, pairs).unwrap()
    }

    #[test]
    fn numbering_grids() {
        let b = boundary_numbering(4, 10).unwrap();
        assert_eq!(b.cell_of(1), (4, 6));
        assert_eq!((2..=7).map(|l| b.cell_of(l).1).collect::<Vec<_>>(), vec![6, 5, 4, 3, 2, 1]);
        assert_eq!((7..=10).map(|l| b.cell_of(l).0).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert_eq!(b.labels_at(1, 1), vec![7]);
        let b1 = boundary_numbering(1, 7).unwrap();
        assert_eq!(b1.labels_at(1, 6), vec![1, 2]);
        assert_eq!((3..=7).map(|l| b1.cell_of(l).1).collect::<Vec<_>>(), vec![5, 4, 3, 2, 1]);
        let b5 = boundary_numbering(5, 6).unwrap();
        assert_eq!(b5.labels_at(5, 1), vec![1, 6]);
        assert_eq!((2..=5).map(|l| b5.cell_of(l).0).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert!(boundary_numbering(0, 3).is_err());
        assert!(boundary_numbering(3, 3).is_err());
    }

    #[test]
    fn compliance_examples() {
        let f = condition_one_failure();
        assert!(f.is_ldc());
        assert!(!f.is_pldc());
        assert_eq!(f.pldc_violations(), vec![1]);
        let zero = PldcFunction::zero(4, 10).unwrap();
        assert!(zero.is_ldc() && zero.is_pldc());
        assert!(f_4_10(&[(1, 1), (3, 1), (6, 1), (9, 1)]).is_pldc());
        assert!(PldcFunction::new(2, 4, vec![2, 0, 0, 0]).is_err());
    }

    #[test]
    fn condition_one_failure_diagram() {
        let d = build_pldc_diagram(&condition_one_failure()).unwrap();
        assert_eq!(d.to_ascii(), "****.*\n******\n...***\n****\n");
        assert!(d.validate_le());
    }

    #[test]
    fn rank_one_diagrams() {
        let middle = PldcFunction::from_pairs(1, 7, &[(1, 1), (5, 1)]).unwrap();
        assert_eq!(build_pldc_diagram(&middle).unwrap().to_ascii(), "**.**\n");
        let right = PldcFunction::from_pairs(1, 7, &[(2, 1), (5, 1)]).unwrap();
        assert_eq!(build_pldc_diagram(&right).unwrap().to_ascii(), "**.**.\n");
    }

    #[test]
    fn zero_function_is_full_box() {
        let d = build_pldc_diagram(&PldcFunction::zero(3, 7).unwrap()).unwrap();
        assert_eq!(d, LeDiagram::full_rectangle(3, 7).unwrap());
    }

    #[test]
    fn spread_obstructions() {
        let f = f_4_10(&[(1, 1), (3, 1), (6, 1), (9, 1)]);
        let family = obstructions(&f).unwrap();
        assert_eq!(
            family.all(),
            vec![set(&[1, 2, 3, 4]), set(&[3, 4, 5, 6]), set(&[6, 7, 8, 9]), set(&[9, 10, 1, 2])]
        );
        let all = family.all();
        for (a, &s) in all.iter().enumerate() {
            for &t in &all[a + 1..] {
                assert!(bits::size(s & t) <= 2);
            }
        }
        assert!(obstructions(&PldcFunction::zero(4, 10).unwrap()).unwrap().all().is_empty());
        assert!(is_sparse_paving_f(&f).unwrap());
    }

    #[test]
    fn merged_obstruction() {
        let f = PldcFunction::from_pairs(3, 7, &[(1, 1), (7, 1)]).unwrap();
        assert!(f.is_pldc());
        let family = obstructions(&f).unwrap();
        assert!(family.sets.is_empty());
        assert_eq!(family.merged, Some(set(&[1, 2, 3]) | set(&[7, 1, 2])));
    }

    #[test]
    fn rank_one_hyperplane_is_union() {
        let f = PldcFunction::from_pairs(1, 7, &[(2, 1), (5, 2)]).unwrap();
        let family = obstructions(&f).unwrap();
        assert_eq!(family.hyperplanes(), vec![set(&[2, 5, 6])]);
        let m = Matroid::from_bases_unchecked(7, bases_from_flows(&build_pldc_diagram(&f).unwrap()).unwrap());
        assert_eq!(m.loops(), set(&[2, 5, 6]));
    }

    #[test]
    fn recognition_examples() {
        let stacked_column = LeDiagram::from_ascii(".*\n.*\n", None).unwrap();
        assert_eq!(recognize_paving_positroid(&stacked_column).unwrap(), None);
        let single_coloop = LeDiagram::from_ascii("..\n**\n", None).unwrap();
        assert!(matches!(recognize_paving_positroid(&single_coloop), Err(Error::Precondition(_))));
        assert_eq!(classify_paving(&single_coloop).unwrap(), PavingClass::SingleColoop { coloop: 1 });
        let full = LeDiagram::full_rectangle(3, 7).unwrap();
        assert_eq!(recognize_paving_positroid(&full).unwrap(), Some(PldcFunction::zero(3, 7).unwrap()));
        let middle = f_4_10(&[(1, 1), (3, 2), (6, 1), (9, 1)]);
        assert!(middle.is_pldc());
        let d = build_pldc_diagram(&middle).unwrap();
        let found = recognize_paving_positroid(&d).unwrap().unwrap();
        assert_eq!(found.at(3), 2);
        assert!(!is_sparse_paving_f(&found).unwrap());
        let parallel_pair = LeDiagram::from_ascii(".*\n**\n", None).unwrap();
        assert_eq!(
            recognize_paving_positroid(&parallel_pair).unwrap(),
            Some(PldcFunction::from_pairs(2, 4, &[(3, 1)]).unwrap())
        );
    }

    #[test]
    fn wrapped_pair_is_not_sparse() {
        let f = f_4_10(&[(1, 1), (3, 1), (6, 1), (10, 1)]);
        assert!(f.is_pldc());
        assert!(!is_sparse_paving_f(&f).unwrap());
    }

    #[test]
    fn adjacency_test_overcounts_in_rank_one() {
        let f = PldcFunction::from_pairs(1, 4, &[(2, 1), (4, 1)]).unwrap();
        assert!(f.is_pldc());
        assert!(adjacent_sum_at_most_one(&f));
        assert!(!is_sparse_paving_f(&f).unwrap());
        let m = Matroid::from_bases_unchecked(4, bases_from_flows(&build_pldc_diagram(&f).unwrap()).unwrap());
        assert_eq!(m.loops(), set(&[2, 4]));
        assert!(m.is_paving() && !m.is_sparse_paving());
    }

    #[test]
    fn coloop_helper() {
        let single_coloop = LeDiagram::from_ascii("..\n**\n", None).unwrap();
        let m = Matroid::from_bases_unchecked(4, bases_from_flows(&single_coloop).unwrap());
        assert!(m.is_paving());
        assert_eq!(paving_coloop(&m).unwrap(), Some(1));
        assert_eq!(paving_coloop(&Matroid::uniform(2, 4).unwrap()).unwrap(), None);
    }

    #[test]
    fn json_roundtrip() {
        let f = f_4_10(&[(1, 1), (3, 1)]);
        let text = f.to_json();
        assert_eq!(text, r#"{"k":4,"n":10,"f":[1,0,1,0,0,0,0,0,0,0]}"#);
        assert_eq!(PldcFunction::from_json(&text).unwrap(), f);
        assert!(PldcFunction::from_json(r#"{"k":2,"n":4,"f":[0,0,0]}"#).is_err());
    }
}
