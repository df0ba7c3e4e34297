//! Matroids on `[n]` given by their bases, stored as bitmasks.
//!
//! Derived objects (rank, closure, flats, circuits, cyclic flats) are read
//! from a rank table over all `2^n` subsets, built lazily on first use. The
//! table is exponential in `n`; for `n > RANK_TABLE_LIMIT` rank queries fall
//! back to scanning the bases and the family-level scans refuse to run.

use std::collections::HashSet;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bits::{self, Set, MAX_GROUND};
use crate::error::{Error, Result};
use crate::network::Rational;

pub const RANK_TABLE_LIMIT: usize = 24;

#[derive(Debug)]
pub struct Matroid {
    n: usize,
    r: usize,
    bases: Vec<Set>,
    rank_table: OnceLock<Vec<u8>>,
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        Self {
            n: self.n,
            r: self.r,
            bases: self.bases.clone(),
            rank_table: OnceLock::new(),
        }
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

/// Basis-system check: nonempty, equicardinal, inside `[n]`, and the
/// exchange axiom for every ordered pair of bases.
pub fn validate_bases(n: usize, r: usize, bases: &[Set]) -> bool {
    if bases.is_empty() || n > MAX_GROUND {
        return false;
    }
    let ground = bits::full(n);
    if bases.iter().any(|&b| b & !ground != 0 || bits::size(b) != r) {
        return false;
    }
    let lookup: HashSet<Set> = bases.iter().copied().collect();
    for &b1 in &lookup {
        for &b2 in &lookup {
            let only2 = b2 & !b1;
            let mut only1 = b1 & !b2;
            while only1 != 0 {
                let e = only1 & only1.wrapping_neg();
                only1 ^= e;
                let mut candidates = only2;
                let mut ok = false;
                while candidates != 0 {
                    let f = candidates & candidates.wrapping_neg();
                    candidates ^= f;
                    if lookup.contains(&((b1 ^ e) | f)) {
                        ok = true;
                        break;
                    }
                }
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

fn check_subset(n: usize, set: Set) -> Result<()> {
    if set & !bits::full(n) != 0 {
        return Err(Error::Argument(format!(
            "{} is not a subset of [{n}]",
            bits::format(set)
        )));
    }
    Ok(())
}

impl Matroid {
    /// Builds a matroid, validating the basis axioms.
    pub fn from_bases(n: usize, bases: Vec<Set>) -> Result<Self> {
        let r = bases.first().map(|&b| bits::size(b)).unwrap_or(0);
        if !validate_bases(n, r, &bases) {
            return Err(Error::Structure(format!(
                "the given family is not the basis system of a matroid on [{n}]"
            )));
        }
        Ok(Self::from_bases_unchecked(n, bases))
    }

    /// Builds a matroid from a family already known to be a basis system.
    /// Duplicates are removed and the bases sorted.
    pub fn from_bases_unchecked(n: usize, mut bases: Vec<Set>) -> Self {
        bases.sort_unstable();
        bases.dedup();
        let r = bases.first().map(|&b| bits::size(b)).unwrap_or(0);
        Self {
            n,
            r,
            bases,
            rank_table: OnceLock::new(),
        }
    }

    /// `U_{r,n}`: every `r`-subset is a basis.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r > n || n > MAX_GROUND {
            return Err(Error::Argument(format!("no uniform matroid U_{{{r},{n}}}")));
        }
        Ok(Self::from_bases_unchecked(n, bits::k_subsets(n, r).collect()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    /// Bases in increasing bitmask order.
    pub fn bases(&self) -> &[Set] {
        &self.bases
    }

    pub fn ground(&self) -> Set {
        bits::full(self.n)
    }

    pub fn is_basis(&self, set: Set) -> bool {
        self.bases.binary_search(&set).is_ok()
    }

    fn table(&self) -> Option<&[u8]> {
        if self.n > RANK_TABLE_LIMIT {
            return None;
        }
        Some(self.rank_table.get_or_init(|| {
            let size = 1usize << self.n;
            let mut independent = vec![false; size];
            for &b in &self.bases {
                independent[b as usize] = true;
            }
            for m in (1..size).rev() {
                if independent[m] {
                    let mut rest = m;
                    while rest != 0 {
                        let e = rest & rest.wrapping_neg();
                        rest ^= e;
                        independent[m ^ e] = true;
                    }
                }
            }
            let mut rank = vec![0u8; size];
            for m in 1..size {
                rank[m] = if independent[m] {
                    m.count_ones() as u8
                } else {
                    let mut best = 0;
                    let mut rest = m;
                    while rest != 0 {
                        let e = rest & rest.wrapping_neg();
                        rest ^= e;
                        best = best.max(rank[m ^ e]);
                    }
                    best
                };
            }
            rank
        }))
    }

    fn require_table(&self) -> Result<&[u8]> {
        self.table().ok_or_else(|| {
            Error::Unsupported(format!(
                "family scans need n <= {RANK_TABLE_LIMIT}, got n = {}",
                self.n
            ))
        })
    }

    /// `rank(A) = max |A ∩ B|` over bases `B`.
    pub fn rank_of(&self, set: Set) -> Result<usize> {
        check_subset(self.n, set)?;
        Ok(self.rank_unchecked(set))
    }

    pub(crate) fn rank_unchecked(&self, set: Set) -> usize {
        match self.table() {
            Some(t) => t[set as usize] as usize,
            None => self
                .bases
                .iter()
                .map(|&b| bits::size(b & set))
                .max()
                .unwrap_or(0),
        }
    }

    pub fn is_independent(&self, set: Set) -> Result<bool> {
        Ok(self.rank_of(set)? == bits::size(set))
    }

    pub fn closure(&self, set: Set) -> Result<Set> {
        check_subset(self.n, set)?;
        Ok(self.closure_unchecked(set))
    }

    fn closure_unchecked(&self, set: Set) -> Set {
        let r = self.rank_unchecked(set);
        (1..=self.n)
            .filter(|&e| !bits::contains(set, e))
            .filter(|&e| self.rank_unchecked(set | bits::bit(e)) == r)
            .fold(set, |acc, e| acc | bits::bit(e))
    }

    pub fn is_flat(&self, set: Set) -> Result<bool> {
        Ok(self.closure(set)? == set)
    }

    /// Minimal dependent sets, in increasing bitmask order.
    pub fn circuits(&self) -> Result<Vec<Set>> {
        let t = self.require_table()?;
        let dependent = |m: usize| (t[m] as u32) < m.count_ones();
        Ok((1..t.len())
            .filter(|&m| dependent(m))
            .filter(|&m| {
                let mut rest = m;
                while rest != 0 {
                    let e = rest & rest.wrapping_neg();
                    rest ^= e;
                    if dependent(m ^ e) {
                        return false;
                    }
                }
                true
            })
            .map(|m| m as Set)
            .collect())
    }

    /// All flats, found as closures of every subset. Exponential in `n`.
    pub fn flats(&self) -> Result<Vec<Set>> {
        let t = self.require_table()?;
        let mut flats: Vec<Set> = (0..t.len())
            .map(|m| m as Set)
            .filter(|&m| self.closure_unchecked(m) == m)
            .collect();
        flats.sort_unstable();
        Ok(flats)
    }

    /// Flats of rank `r - 1`.
    pub fn hyperplanes(&self) -> Result<Vec<Set>> {
        if self.r == 0 {
            return Ok(Vec::new());
        }
        Ok(self
            .flats()?
            .into_iter()
            .filter(|&f| self.rank_unchecked(f) == self.r - 1)
            .collect())
    }

    /// Hyperplanes with at least `r` elements, i.e. the dependent ones.
    pub fn dependent_hyperplanes(&self) -> Result<Vec<Set>> {
        Ok(self
            .hyperplanes()?
            .into_iter()
            .filter(|&h| bits::size(h) >= self.r)
            .collect())
    }

    /// Elements in no basis.
    pub fn loops(&self) -> Set {
        self.ground() & !self.bases.iter().fold(0, |acc, &b| acc | b)
    }

    /// Elements in every basis.
    pub fn coloops(&self) -> Set {
        self.bases.iter().fold(self.ground(), |acc, &b| acc & b)
    }

    /// Complements of the bases.
    pub fn dual(&self) -> Matroid {
        let ground = self.ground();
        Self::from_bases_unchecked(self.n, self.bases.iter().map(|&b| ground & !b).collect())
    }

    /// `M|S` on the same ground set `[n]`: bases are the largest sets among
    /// `B ∩ S`, so elements outside `S` become loops.
    pub fn restriction(&self, set: Set) -> Result<Matroid> {
        check_subset(self.n, set)?;
        let r = self.rank_unchecked(set);
        Ok(Self::from_bases_unchecked(
            self.n,
            self.bases
                .iter()
                .map(|&b| b & set)
                .filter(|&b| bits::size(b) == r)
                .collect(),
        ))
    }

    /// `M1 ⊕ M2` on `[n1 + n2]`, the elements of `M2` shifted by `n1`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        if self.n + other.n > MAX_GROUND {
            return Err(Error::Argument("direct sum exceeds the ground-set cap".into()));
        }
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &b1 in &self.bases {
            for &b2 in &other.bases {
                bases.push(b1 | (b2 << self.n));
            }
        }
        Ok(Self::from_bases_unchecked(self.n + other.n, bases))
    }

    /// Flats that are unions of circuits, with their ranks.
    pub fn cyclic_flats(&self) -> Result<CyclicFlatLattice> {
        let t = self.require_table()?;
        let mut flats: Vec<(Set, usize)> = (0..t.len())
            .filter(|&m| {
                let r = t[m];
                let mut rest = m;
                while rest != 0 {
                    let e = rest & rest.wrapping_neg();
                    rest ^= e;
                    if t[m ^ e] != r {
                        return false;
                    }
                }
                true
            })
            .map(|m| m as Set)
            .filter(|&m| self.closure_unchecked(m) == m)
            .map(|m| (m, t[m as usize] as usize))
            .collect();
        flats.sort_unstable_by_key(|&(f, r)| (r, bits::size(f), f));
        Ok(CyclicFlatLattice { flats })
    }

    /// Hyperplanes all of whose `r`-subsets are circuits.
    pub fn stressed_hyperplanes(&self) -> Result<Vec<Set>> {
        let hyperplanes = self.hyperplanes()?;
        Ok(hyperplanes
            .into_iter()
            .filter(|&h| self.is_stressed_unchecked(h))
            .collect())
    }

    fn is_stressed_unchecked(&self, h: Set) -> bool {
        // An r-subset of a rank-(r-1) flat is dependent; it is a circuit iff
        // every (r-1)-subset of it is independent.
        let r = self.r;
        if r == 0 {
            return false;
        }
        subsets_of(h, r - 1).all(|s| self.rank_unchecked(s) == r - 1)
    }

    /// Adds every `r`-subset of the stressed hyperplane `h` as a basis.
    pub fn relax(&self, h: Set) -> Result<Matroid> {
        check_subset(self.n, h)?;
        let is_hyperplane = self.r > 0
            && self.rank_unchecked(h) == self.r - 1
            && self.closure_unchecked(h) == h;
        if !is_hyperplane || !self.is_stressed_unchecked(h) {
            return Err(Error::Precondition(format!(
                "{} is not a stressed hyperplane",
                bits::format(h)
            )));
        }
        let mut bases = self.bases.clone();
        bases.extend(subsets_of(h, self.r));
        Ok(Self::from_bases_unchecked(self.n, bases))
    }

    /// No circuit has fewer than `r` elements; equivalently every
    /// `(r-1)`-subset is independent.
    pub fn is_paving(&self) -> bool {
        if self.r == 0 {
            return true;
        }
        bits::k_subsets(self.n, self.r - 1).all(|s| self.rank_unchecked(s) == self.r - 1)
    }

    pub fn is_sparse_paving(&self) -> bool {
        self.is_paving() && self.dual().is_paving()
    }

    /// Bases as sorted element lists, in lexicographic order.
    pub fn bases_as_lists(&self) -> Vec<Vec<usize>> {
        let mut lists: Vec<Vec<usize>> = self.bases.iter().map(|&b| bits::elements(b)).collect();
        lists.sort();
        lists
    }

    pub fn to_json(&self) -> String {
        let value = MatroidJson {
            n: self.n,
            r: self.r,
            bases: self.bases_as_lists(),
        };
        serde_json::to_string(&value).expect("matroid serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let value: MatroidJson =
            serde_json::from_str(text).map_err(|e| Error::Argument(format!("bad matroid JSON: {e}")))?;
        let mut bases = Vec::with_capacity(value.bases.len());
        for list in &value.bases {
            if list.iter().any(|&e| e == 0 || e > value.n) {
                return Err(Error::Argument(format!("basis {list:?} leaves [{}]", value.n)));
            }
            bases.push(bits::from_elements(list.iter().copied()));
        }
        if bases.first().map(|&b| bits::size(b)) != Some(value.r) {
            return Err(Error::Structure(format!("bases do not have size r = {}", value.r)));
        }
        Self::from_bases(value.n, bases)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatroidJson {
    pub n: usize,
    pub r: usize,
    pub bases: Vec<Vec<usize>>,
}

/// `size`-subsets of the set `set`.
pub(crate) fn subsets_of(set: Set, size: usize) -> impl Iterator<Item = Set> {
    let elems = bits::elements(set);
    bits::k_subsets(elems.len(), size).map(move |pick| {
        bits::elements(pick)
            .into_iter()
            .fold(0, |acc, i| acc | bits::bit(elems[i - 1]))
    })
}

/// The cyclic flats of a matroid, ordered by rank, then size, then mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicFlatLattice {
    flats: Vec<(Set, usize)>,
}

impl CyclicFlatLattice {
    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Set, usize)> + '_ {
        self.flats.iter().copied()
    }

    pub fn sets(&self) -> Vec<Set> {
        self.flats.iter().map(|&(f, _)| f).collect()
    }

    /// The least cyclic flat: the closure of the empty set, i.e. the loops.
    pub fn bottom(&self) -> Set {
        self.flats[0].0
    }

    /// The greatest cyclic flat: the non-coloops.
    pub fn top(&self) -> Set {
        self.flats[self.flats.len() - 1].0
    }

    /// Cyclic flats other than the bottom and top ones.
    pub fn nontrivial(&self) -> Vec<(Set, usize)> {
        let (bottom, top) = (self.bottom(), self.top());
        self.iter().filter(|&(f, _)| f != bottom && f != top).collect()
    }

    pub fn of_rank(&self, rank: usize) -> Vec<Set> {
        self.iter().filter(|&(_, r)| r == rank).map(|(f, _)| f).collect()
    }

    pub fn contains(&self, set: Set) -> bool {
        self.flats.iter().any(|&(f, _)| f == set)
    }
}

/// Paving matroid `B(E, r, S)`: the `r`-subsets of `[n]` contained in no
/// member of `family`.
pub fn paving_from_hyperplanes(n: usize, r: usize, family: &[Set]) -> Result<Matroid> {
    if r > n || n > MAX_GROUND {
        return Err(Error::Argument(format!("rank {r} impossible on [{n}]")));
    }
    for &s in family {
        check_subset(n, s)?;
        if bits::size(s) < r {
            return Err(Error::Precondition(format!(
                "{} has fewer than r = {r} elements",
                bits::format(s)
            )));
        }
    }
    for (i, &s) in family.iter().enumerate() {
        for &t in &family[i + 1..] {
            if bits::size(s & t) as i64 > r as i64 - 2 {
                return Err(Error::Precondition(format!(
                    "{} and {} share {} elements, more than r - 2 = {}",
                    bits::format(s),
                    bits::format(t),
                    bits::size(s & t),
                    r as i64 - 2
                )));
            }
        }
    }
    let bases: Vec<Set> = bits::k_subsets(n, r)
        .filter(|&b| family.iter().all(|&s| b & !s != 0))
        .collect();
    if bases.is_empty() {
        return Err(Error::Precondition(
            "the family covers every r-subset, leaving no basis".into(),
        ));
    }
    Ok(Matroid::from_bases_unchecked(n, bases))
}

/// Column matroid of a full-row-rank rational matrix: bases are the column
/// sets with nonzero maximal minor.
pub fn matroid_from_matrix(rows: &[Vec<Rational>]) -> Result<Matroid> {
    let k = rows.len();
    let n = rows.first().map(Vec::len).unwrap_or(0);
    if rows.iter().any(|row| row.len() != n) {
        return Err(Error::Argument("ragged matrix".into()));
    }
    if n > MAX_GROUND {
        return Err(Error::Argument(format!("{n} columns exceed the ground-set cap")));
    }
    if rank_of_matrix(rows.to_vec()) < k {
        return Err(Error::Precondition(format!("matrix does not have full row rank {k}")));
    }
    let bases = bits::k_subsets(n, k)
        .filter(|&cols| {
            let idx: Vec<usize> = bits::elements(cols).into_iter().map(|c| c - 1).collect();
            let minor: Vec<Vec<Rational>> = rows
                .iter()
                .map(|row| idx.iter().map(|&c| row[c].clone()).collect())
                .collect();
            rank_of_matrix(minor) == k
        })
        .collect();
    Ok(Matroid::from_bases_unchecked(n, bases))
}

/// Rank by exact Gaussian elimination.
pub fn rank_of_matrix(mut rows: Vec<Vec<Rational>>) -> usize {
    let width = rows.first().map(Vec::len).unwrap_or(0);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = Rational::one() / rows[rank][col].clone();
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut().filter(|row| !row[col].is_zero()) {
            let factor = &row[col] * &inv;
            for (entry, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *entry -= &factor * p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn set(e: &[usize]) -> Set {
        bits::from_elements(e.iter().copied())
    }

    fn parallel_pair() -> Matroid {
        Matroid::from_bases(4, bits::k_subsets(4, 2).filter(|&b| b != set(&[3, 4])).collect()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(validate_bases(4, 2, &bits::k_subsets(4, 2).collect::<Vec<_>>()));
        assert!(!validate_bases(4, 2, &[set(&[1, 2]), set(&[3, 4])]));
        assert!(validate_bases(4, 2, parallel_pair().bases()));
        assert!(!validate_bases(4, 2, &[]));
        assert!(!validate_bases(4, 2, &[set(&[1, 2]), set(&[1])]));
    }

    #[test]
    fn rank_and_circuits() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.rank_of(set(&[1])).unwrap(), 1);
        assert_eq!(u.rank_of(u.ground()).unwrap(), 2);
        assert!(matches!(u.rank_of(set(&[5])), Err(Error::Argument(_))));
        let circuits = parallel_pair().circuits().unwrap();
        assert_eq!(circuits, vec![set(&[1, 2, 3]), set(&[1, 2, 4]), set(&[3, 4])]);
        let small: Vec<Set> = circuits.into_iter().filter(|&c| bits::size(c) <= 2).collect();
        assert_eq!(small, vec![set(&[3, 4])]);
    }

    #[test]
    fn dual_and_uniform() {
        let u = Matroid::uniform(2, 5).unwrap();
        assert_eq!(u.dual(), Matroid::uniform(3, 5).unwrap());
        let m = parallel_pair();
        assert_eq!(m.dual().dual(), m);
        assert_eq!(m.loops(), m.dual().coloops());
    }

    #[test]
    fn edge_ranks() {
        let zero = Matroid::uniform(0, 3).unwrap();
        assert_eq!(zero.bases(), &[0]);
        assert_eq!(zero.loops(), 0b111);
        assert!(zero.is_paving());
        assert_eq!(zero.cyclic_flats().unwrap().sets(), vec![0b111]);
        let boolean = Matroid::uniform(3, 3).unwrap();
        assert_eq!(boolean.coloops(), 0b111);
        assert_eq!(boolean.cyclic_flats().unwrap().sets(), vec![0]);
        assert!(boolean.is_paving());
    }

    #[test]
    fn cyclic_flat_examples() {
        assert_eq!(Matroid::uniform(2, 4).unwrap().cyclic_flats().unwrap().sets(), vec![0, 0b1111]);
        assert_eq!(parallel_pair().cyclic_flats().unwrap().sets(), vec![0, set(&[3, 4]), 0b1111]);
    }

    #[test]
    fn flats_and_hyperplanes() {
        let m = parallel_pair();
        let hyper = m.hyperplanes().unwrap();
        assert_eq!(hyper, vec![set(&[1]), set(&[2]), set(&[3, 4])]);
        assert_eq!(m.flats().unwrap().len(), 1 + 3 + 1);
        assert_eq!(m.dependent_hyperplanes().unwrap(), vec![set(&[3, 4])]);
    }

    #[test]
    fn stressed_and_relax() {
        let u = Matroid::uniform(3, 5).unwrap();
        assert_eq!(u.stressed_hyperplanes().unwrap(), u.hyperplanes().unwrap());
        let h = set(&[1, 2]);
        assert_eq!(u.relax(h).unwrap(), u);
        let m = parallel_pair();
        assert_eq!(m.stressed_hyperplanes().unwrap().len(), 3);
        assert_eq!(m.relax(set(&[3, 4])).unwrap(), Matroid::uniform(2, 4).unwrap());
        assert!(matches!(m.relax(set(&[1, 3])), Err(Error::Precondition(_))));
    }

    #[test]
    fn paving_checks() {
        assert!(parallel_pair().is_paving());
        assert!(parallel_pair().is_sparse_paving());
        let u23 = Matroid::from_bases(3, vec![0b011, 0b101, 0b110]).unwrap();
        assert!(u23.is_paving());
        let with_loop = Matroid::from_bases(3, vec![0b011]).unwrap();
        assert!(!with_loop.is_paving());
    }

    #[test]
    fn restriction_and_sum() {
        let m = parallel_pair();
        let r = m.restriction(set(&[3, 4])).unwrap();
        assert_eq!(r.rank(), 1);
        assert_eq!(r.loops(), set(&[1, 2]));
        let s = Matroid::uniform(1, 2).unwrap().direct_sum(&Matroid::uniform(1, 1).unwrap()).unwrap();
        assert_eq!(s.bases(), &[0b101, 0b110]);
    }

    #[test]
    fn paving_from_family() {
        assert_eq!(paving_from_hyperplanes(4, 2, &[]).unwrap(), Matroid::uniform(2, 4).unwrap());
        let m = paving_from_hyperplanes(4, 2, &[set(&[1, 2, 3])]).unwrap();
        assert_eq!(m.bases(), &[set(&[1, 4]), set(&[2, 4]), set(&[3, 4])]);
        assert!(validate_bases(4, 2, m.bases()));
        assert!(matches!(
            paving_from_hyperplanes(4, 2, &[set(&[1])]),
            Err(Error::Precondition(_))
        ));
        let err = paving_from_hyperplanes(5, 3, &[set(&[1, 2, 3]), set(&[1, 2, 4])]).unwrap_err();
        assert!(err.to_string().contains("{1,2,3}"));
    }

    #[test]
    fn matrix_matroids() {
        let q = |x: i64| Rational::from_integer(BigInt::from(x));
        let intro = vec![vec![q(1), q(0), q(-1), q(-1)], vec![q(0), q(1), q(1), q(1)]];
        assert_eq!(matroid_from_matrix(&intro).unwrap(), parallel_pair());
        let id = vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]];
        assert_eq!(matroid_from_matrix(&id).unwrap().bases(), &[0b011]);
        let deficient = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(matches!(matroid_from_matrix(&deficient), Err(Error::Precondition(_))));
    }

    #[test]
    fn json_roundtrip() {
        let m = parallel_pair();
        let text = m.to_json();
        assert_eq!(text, r#"{"n":4,"r":2,"bases":[[1,2],[1,3],[1,4],[2,3],[2,4]]}"#);
        assert_eq!(Matroid::from_json(&text).unwrap(), m);
        assert!(Matroid::from_json(r#"{"n":4,"r":2,"bases":[[1,2],[3,4]]}"#).is_err());
    }
}
