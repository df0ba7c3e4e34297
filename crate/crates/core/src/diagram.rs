//! Young-diagram fillings inside a `k x (n-k)` box.
//!
//! Cells are addressed `(row, col)` with both coordinates 1-based, row 1 on
//! top and column 1 on the left. Rows are left justified with the longest
//! row on top. A filled cell holds a bullet.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition with `k` parts (zeros allowed) fitting in a `k x (n-k)` box.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    k: usize,
    n: usize,
    parts: Vec<usize>,
}

impl Shape {
    pub fn new(k: usize, n: usize, parts: Vec<usize>) -> Result<Self> {
        if k > n {
            return Err(Error::Structure(format!("k = {k} exceeds n = {n}")));
        }
        if n - k > 64 {
            return Err(Error::Structure(format!(
                "box width {} exceeds 64 columns",
                n - k
            )));
        }
        if parts.len() != k {
            return Err(Error::Structure(format!(
                "expected {k} parts, got {}",
                parts.len()
            )));
        }
        if let Some(p) = parts.iter().find(|&&p| p > n - k) {
            return Err(Error::Structure(format!(
                "part {p} does not fit in a box of width {}",
                n - k
            )));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::Structure(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(Self { k, n, parts })
    }

    /// The full `k x (n-k)` rectangle.
    pub fn rectangle(k: usize, n: usize) -> Result<Self> {
        Self::new(k, n, vec![n.saturating_sub(k); k])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Width of the bounding box, `n - k`.
    pub fn width(&self) -> usize {
        self.n - self.k
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && row <= self.k && col >= 1 && col <= self.parts[row - 1]
    }

    /// Number of rows whose length is at least `col`.
    pub fn column_height(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn cell_count(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// The cells involved in a failure of the Le condition: `top` and `left`
/// are filled while `corner` (same row as `left`, same column as `top`) is
/// empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeViolation {
    pub top: (usize, usize),
    pub left: (usize, usize),
    pub corner: (usize, usize),
}

impl std::fmt::Display for LeViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "cells {:?} and {:?} are filled but {:?} is empty",
            self.top, self.left, self.corner
        )
    }
}

/// A filling of a [`Shape`]. Despite the name, a value of this type need not
/// satisfy the Le condition; see [`LeDiagram::validate_le`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeDiagram {
    shape: Shape,
    /// Per row, bit `c - 1` set when cell `(row, c)` is filled.
    rows: Vec<u64>,
}

impl LeDiagram {
    pub fn new<I>(shape: Shape, filled: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = vec![0u64; shape.k];
        for (r, c) in filled {
            if !shape.contains(r, c) {
                return Err(Error::Structure(format!(
                    "cell ({r}, {c}) lies outside the shape {:?}",
                    shape.parts
                )));
            }
            rows[r - 1] |= 1 << (c - 1);
        }
        Ok(Self { shape, rows })
    }

    /// Builds a diagram from per-row bitmasks (bit `c - 1` is column `c`).
    pub fn from_row_masks(shape: Shape, rows: Vec<u64>) -> Result<Self> {
        if rows.len() != shape.k {
            return Err(Error::Structure(format!(
                "expected {} rows, got {}",
                shape.k,
                rows.len()
            )));
        }
        for (i, (&mask, &part)) in rows.iter().zip(&shape.parts).enumerate() {
            let allowed = if part >= 64 { u64::MAX } else { (1u64 << part) - 1 };
            if mask & !allowed != 0 {
                return Err(Error::Structure(format!(
                    "row {} has cells beyond its length {part}",
                    i + 1
                )));
            }
        }
        Ok(Self { shape, rows })
    }

    /// The fully filled `k x (n-k)` rectangle (the uniform positroid).
    pub fn full_rectangle(k: usize, n: usize) -> Result<Self> {
        let shape = Shape::rectangle(k, n)?;
        let w = shape.width();
        let mask = if w >= 64 { u64::MAX } else { (1u64 << w) - 1 };
        Ok(Self {
            rows: vec![mask; k],
            shape,
        })
    }

    /// The all-empty filling of `shape`.
    pub fn empty(shape: Shape) -> Self {
        let k = shape.k;
        Self {
            shape,
            rows: vec![0; k],
        }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn k(&self) -> usize {
        self.shape.k
    }

    pub fn n(&self) -> usize {
        self.shape.n
    }

    pub fn row_mask(&self, row: usize) -> u64 {
        self.rows[row - 1]
    }

    pub fn row_masks(&self) -> &[u64] {
        &self.rows
    }

    pub fn is_filled(&self, row: usize, col: usize) -> bool {
        row >= 1 && row <= self.shape.k && (1..=64).contains(&col) && self.rows[row - 1] >> (col - 1) & 1 == 1
    }

    /// `|D|`, the number of bullets.
    pub fn bullet_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Filled cells in row-major order.
    pub fn filled_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.bullet_count());
        for (i, &mask) in self.rows.iter().enumerate() {
            for c in 1..=self.shape.parts[i] {
                if mask >> (c - 1) & 1 == 1 {
                    out.push((i + 1, c));
                }
            }
        }
        out
    }

    pub fn column_is_empty(&self, col: usize) -> bool {
        self.rows.iter().all(|&m| m >> (col - 1) & 1 == 0)
    }

    /// The first failure of the Le condition in row-major order of the
    /// empty corner cell, if any.
    pub fn le_violation(&self) -> Option<LeViolation> {
        for r2 in 2..=self.shape.k {
            let part = self.shape.parts[r2 - 1];
            for c2 in 2..=part {
                if self.is_filled(r2, c2) {
                    continue;
                }
                let top = (1..r2).find(|&r1| self.is_filled(r1, c2));
                let left = (1..c2).find(|&c1| self.is_filled(r2, c1));
                if let (Some(r1), Some(c1)) = (top, left) {
                    return Some(LeViolation {
                        top: (r1, c2),
                        left: (r2, c1),
                        corner: (r2, c2),
                    });
                }
            }
        }
        None
    }

    /// The Le condition: whenever `(i, j')` and `(i', j)` are filled with
    /// `i < i'`, `j < j'`, the cell `(i', j')` is filled too.
    pub fn validate_le(&self) -> bool {
        self.le_violation().is_none()
    }

    /// The stronger closure condition: additionally, `(i, j')`, `(i', j)`
    /// and `(i', j')` all filled forces `(i, j)` to be filled.
    pub fn validate_sq(&self) -> Result<bool> {
        if let Some(v) = self.le_violation() {
            return Err(Error::Precondition(format!("not a Le-diagram: {v}")));
        }
        let k = self.shape.k;
        for r1 in 1..=k {
            for r2 in r1 + 1..=k {
                let both = self.rows[r1 - 1] & self.rows[r2 - 1];
                // (r1, c2) and (r2, c2) filled, (r2, c1) filled with c1 < c2
                // forces (r1, c1).
                for c2 in crate::bits::elements(both) {
                    let left_of = self.rows[r2 - 1] & ((1u64 << (c2 - 1)) - 1);
                    if left_of & !self.rows[r1 - 1] != 0 {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Removes every column without a bullet. The resulting diagram indexes
    /// the positroid with its loops deleted.
    pub fn loopless_reduction(&self) -> LeDiagram {
        let width = self.shape.width();
        let kept: Vec<usize> = (1..=width).filter(|&c| !self.column_is_empty(c)).collect();
        let removed = width - kept.len();
        let mut parts = Vec::with_capacity(self.shape.k);
        let mut rows = Vec::with_capacity(self.shape.k);
        for (i, &mask) in self.rows.iter().enumerate() {
            let part = self.shape.parts[i];
            let mut new_mask = 0u64;
            let mut len = 0;
            for (new_c, &c) in kept.iter().enumerate() {
                if c > part {
                    break;
                }
                len = new_c + 1;
                if mask >> (c - 1) & 1 == 1 {
                    new_mask |= 1 << new_c;
                }
            }
            parts.push(len);
            rows.push(new_mask);
        }
        LeDiagram {
            shape: Shape {
                k: self.shape.k,
                n: self.shape.n - removed,
                parts,
            },
            rows,
        }
    }

    /// Labels `1..=n` along the southeast boundary path, starting at the
    /// top-right corner of the box. Vertical steps are sources, horizontal
    /// steps are sinks.
    pub fn boundary_labeling(&self) -> BoundaryLabeling {
        let width = self.shape.width();
        let mut row_source = Vec::with_capacity(self.shape.k);
        let mut col_sink = vec![0; width];
        let mut is_source = vec![false; self.shape.n];
        let mut label = 1;
        let mut pos = width;
        for &part in &self.shape.parts {
            while pos > part {
                col_sink[pos - 1] = label;
                label += 1;
                pos -= 1;
            }
            row_source.push(label);
            is_source[label - 1] = true;
            label += 1;
        }
        while pos > 0 {
            col_sink[pos - 1] = label;
            label += 1;
            pos -= 1;
        }
        BoundaryLabeling {
            n: self.shape.n,
            row_source,
            col_sink,
            is_source,
        }
    }

    /// Elements of the ground set that are loops: sinks over empty columns.
    pub fn loops(&self) -> Vec<usize> {
        let labels = self.boundary_labeling();
        let mut out: Vec<usize> = (1..=self.shape.width())
            .filter(|&c| self.column_is_empty(c))
            .map(|c| labels.col_sink[c - 1])
            .collect();
        out.sort_unstable();
        out
    }

    /// Elements that are coloops: sources of rows without bullets.
    pub fn coloops(&self) -> Vec<usize> {
        let labels = self.boundary_labeling();
        let mut out: Vec<usize> = (1..=self.shape.k)
            .filter(|&r| self.rows[r - 1] == 0)
            .map(|r| labels.row_source[r - 1])
            .collect();
        out.sort_unstable();
        out
    }

    /// One line per row: `*` for a bullet, `.` for an empty cell.
    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        for (i, &part) in self.shape.parts.iter().enumerate() {
            for c in 1..=part {
                out.push(if self.rows[i] >> (c - 1) & 1 == 1 { '*' } else { '.' });
            }
            out.push('\n');
        }
        out
    }

    /// Parses the ASCII format. The box width defaults to the length of the
    /// first row when `n` is not given.
    pub fn from_ascii(text: &str, n: Option<usize>) -> Result<Self> {
        let mut lines: Vec<&str> = text.split('\n').collect();
        if lines.last() == Some(&"") {
            lines.pop();
        }
        let mut parts = Vec::with_capacity(lines.len());
        let mut filled = Vec::new();
        for (i, line) in lines.iter().enumerate() {
            let line = line.strip_suffix('\r').unwrap_or(line);
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '*' => filled.push((i + 1, j + 1)),
                    '.' => {}
                    other => {
                        return Err(Error::Parse {
                            line: i + 1,
                            column: j + 1,
                            message: format!("unexpected character {other:?}, expected '*' or '.'"),
                        })
                    }
                }
            }
            parts.push(line.chars().count());
        }
        let k = parts.len();
        let width = parts.first().copied().unwrap_or(0);
        let n = n.unwrap_or(k + width);
        if n < k + width {
            return Err(Error::Parse {
                line: 1,
                column: width,
                message: format!("rows of length {width} do not fit a box with n = {n}"),
            });
        }
        let shape = Shape::new(k, n, parts).map_err(|e| match e {
            Error::Structure(message) => Error::Parse {
                line: 1,
                column: 1,
                message,
            },
            other => other,
        })?;
        LeDiagram::new(shape, filled)
    }

    pub fn to_json_value(&self) -> DiagramJson {
        DiagramJson {
            k: self.shape.k,
            n: self.shape.n,
            parts: self.shape.parts.clone(),
            filled: self.filled_cells().into_iter().map(|(r, c)| [r, c]).collect(),
        }
    }

    /// Compact JSON, `{"k":..,"n":..,"parts":[..],"filled":[[r,c],..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("diagram serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: DiagramJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        raw.try_into()
    }
}

/// Serialized form of a [`LeDiagram`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub k: usize,
    pub n: usize,
    pub parts: Vec<usize>,
    pub filled: Vec<[usize; 2]>,
}

impl TryFrom<DiagramJson> for LeDiagram {
    type Error = Error;

    fn try_from(raw: DiagramJson) -> Result<Self> {
        let shape = Shape::new(raw.k, raw.n, raw.parts)?;
        LeDiagram::new(shape, raw.filled.into_iter().map(|[r, c]| (r, c)))
    }
}

impl std::fmt::Display for LeDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

/// Source and sink labels read off the boundary path of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryLabeling {
    n: usize,
    row_source: Vec<usize>,
    col_sink: Vec<usize>,
    is_source: Vec<bool>,
}

impl BoundaryLabeling {
    /// Source label of each row, top to bottom.
    pub fn row_sources(&self) -> &[usize] {
        &self.row_source
    }

    /// Sink label of each column of the box, left to right.
    pub fn column_sinks(&self) -> &[usize] {
        &self.col_sink
    }

    pub fn source_of_row(&self, row: usize) -> usize {
        self.row_source[row - 1]
    }

    pub fn sink_of_column(&self, col: usize) -> usize {
        self.col_sink[col - 1]
    }

    pub fn is_source(&self, label: usize) -> bool {
        self.is_source[label - 1]
    }

    /// Source labels in increasing order.
    pub fn sources(&self) -> Vec<usize> {
        (1..=self.n).filter(|&l| self.is_source[l - 1]).collect()
    }

    /// Sink labels in increasing order.
    pub fn sinks(&self) -> Vec<usize> {
        (1..=self.n).filter(|&l| !self.is_source[l - 1]).collect()
    }

    pub fn source_set(&self) -> crate::bits::Set {
        crate::bits::from_elements(self.sources())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn staircase() -> LeDiagram {
        LeDiagram::from_ascii(".**.\n.***\n..*\n", None).unwrap()
    }

    fn parallel_pair() -> LeDiagram {
        LeDiagram::from_ascii(".*\n**\n", None).unwrap()
    }

    #[test]
    fn shape_rejects_increasing_parts() {
        assert!(matches!(Shape::new(2, 5, vec![1, 2]), Err(Error::Structure(_))));
        assert!(matches!(Shape::new(2, 5, vec![4, 2]), Err(Error::Structure(_))));
        assert!(matches!(Shape::new(2, 5, vec![3]), Err(Error::Structure(_))));
        assert!(Shape::new(2, 5, vec![3, 0]).is_ok());
    }

    #[test]
    fn cell_outside_shape_is_rejected() {
        let shape = Shape::new(2, 4, vec![2, 1]).unwrap();
        assert!(LeDiagram::new(shape, [(2, 2)]).is_err());
    }

    #[test]
    fn le_examples() {
        assert!(staircase().validate_le());
        let bad = LeDiagram::new(Shape::rectangle(2, 4).unwrap(), [(1, 2), (2, 1)]).unwrap();
        assert!(!bad.validate_le());
        assert_eq!(
            bad.le_violation(),
            Some(LeViolation {
                top: (1, 2),
                left: (2, 1),
                corner: (2, 2)
            })
        );
        let empty = LeDiagram::empty(Shape::new(3, 7, vec![4, 2, 1]).unwrap());
        assert!(empty.validate_le());
    }

    #[test]
    fn sq_examples() {
        assert_eq!(parallel_pair().validate_sq(), Ok(false));
        assert_eq!(LeDiagram::full_rectangle(3, 7).unwrap().validate_sq(), Ok(true));
        for text in ["*.*\n*.*\n*.*\n", "*.*\n*.*\n**\n", "*.*\n**\n**\n", "**\n**\n**\n"] {
            let d = LeDiagram::from_ascii(text, Some(6)).unwrap();
            assert_eq!(d.validate_sq(), Ok(true), "{text}");
        }
        let bad = LeDiagram::new(Shape::rectangle(2, 4).unwrap(), [(1, 2), (2, 1)]).unwrap();
        assert!(matches!(bad.validate_sq(), Err(Error::Precondition(_))));
    }

    #[test]
    fn boundary_labels_staircase() {
        let l = staircase().boundary_labeling();
        assert_eq!(l.sources(), vec![1, 2, 4]);
        assert_eq!(l.sinks(), vec![3, 5, 6, 7]);
        assert_eq!(l.column_sinks(), &[7, 6, 5, 3]);
        let full = LeDiagram::full_rectangle(2, 4).unwrap().boundary_labeling();
        assert_eq!(full.sources(), vec![1, 2]);
        assert_eq!(full.sinks(), vec![3, 4]);
    }

    #[test]
    fn boundary_labels_rank_two_with_loops() {
        let d = LeDiagram::from_ascii("*.*...**.*\n.**.***\n", None).unwrap();
        let l = d.boundary_labeling();
        assert_eq!(d.n(), 12);
        assert_eq!(l.sources(), vec![1, 5]);
        // Sinks t1..t10 run right to left along the boundary.
        assert_eq!(l.column_sinks(), &[12, 11, 10, 9, 8, 7, 6, 4, 3, 2]);
        assert_eq!(d.loops(), vec![3, 9]);
        assert!(d.coloops().is_empty());
    }

    #[test]
    fn loopless_reduction_examples() {
        let d = LeDiagram::from_ascii("*.*...**.*\n.**.***\n", None).unwrap();
        let r = d.loopless_reduction();
        assert_eq!(r.n(), 10);
        assert_eq!(r.to_ascii(), "*.*..***\n.*****\n");
        assert_eq!(r.loopless_reduction(), r);

        let full = LeDiagram::full_rectangle(2, 5).unwrap();
        assert_eq!(full.loopless_reduction(), full);

        let strip = LeDiagram::empty(Shape::new(1, 5, vec![4]).unwrap());
        let reduced = strip.loopless_reduction();
        assert_eq!(reduced.n(), 1);
        assert_eq!(reduced.shape().parts(), &[0]);
    }

    #[test]
    fn coloops_from_empty_rows() {
        let d = LeDiagram::from_ascii("..\n**\n", None).unwrap();
        assert_eq!(d.coloops(), vec![1]);
        let zero_row = LeDiagram::new(Shape::new(2, 4, vec![2, 0]).unwrap(), [(1, 1)]).unwrap();
        assert_eq!(zero_row.coloops(), vec![4]);
        assert_eq!(zero_row.loops(), vec![2]);
    }

    #[test]
    fn ascii_round_trip_and_errors() {
        let text = "*.*..***\n.*****\n\n";
        let d = LeDiagram::from_ascii(text, None).unwrap();
        assert_eq!(d.k(), 3);
        assert_eq!(d.to_ascii(), text);
        let err = LeDiagram::from_ascii("*.\n*x\n", None).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                column: 2,
                message: "unexpected character 'x', expected '*' or '.'".into()
            }
        );
    }

    #[test]
    fn json_is_bit_exact() {
        let d = parallel_pair();
        let text = d.to_json();
        assert_eq!(text, r#"{"k":2,"n":4,"parts":[2,2],"filled":[[1,2],[2,1],[2,2]]}"#);
        assert_eq!(LeDiagram::from_json(&text).unwrap(), d);
    }
}
