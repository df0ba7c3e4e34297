//! Set systems and transversal matroids: presentations, crossing tests, the
//! antichain criterion over cyclic flats, and the combinatorial rank-2 test.

use serde::{Deserialize, Serialize};

use crate::bits::{self, Set, MAX_GROUND};
use crate::diagram::LeDiagram;
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// An ordered family `(S_1, ..., S_k)` of subsets of `[n]` admitting at
/// least one transversal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    n: usize,
    sets: Vec<Set>,
}

impl SetSystem {
    pub fn new(n: usize, sets: Vec<Set>) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::Argument(format!("ground set [{n}] exceeds the cap")));
        }
        if let Some(&s) = sets.iter().find(|&&s| s & !bits::full(n) != 0) {
            return Err(Error::Argument(format!(
                "{} is not a subset of [{n}]",
                bits::format(s)
            )));
        }
        if matching_size(&sets, bits::full(n)) < sets.len() {
            return Err(Error::NoTransversal);
        }
        Ok(Self { n, sets })
    }

    pub fn from_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut sets = Vec::with_capacity(lists.len());
        for list in lists {
            if let Some(&e) = list.iter().find(|&&e| e == 0 || e > n) {
                return Err(Error::Argument(format!("element {e} outside [{n}]")));
            }
            sets.push(bits::from_elements(list.iter().copied()));
        }
        Self::new(n, sets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[Set] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Whether `set` is a system of distinct representatives.
    pub fn is_transversal(&self, set: Set) -> bool {
        bits::size(set) == self.sets.len() && matching_size(&self.sets, set) == self.sets.len()
    }

    pub fn to_json(&self) -> String {
        let value = SetSystemJson {
            n: self.n,
            sets: self.sets.iter().map(|&s| bits::elements(s)).collect(),
        };
        serde_json::to_string(&value).expect("set system serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let value: SetSystemJson =
            serde_json::from_str(text).map_err(|e| Error::Argument(format!("bad set system JSON: {e}")))?;
        Self::from_lists(value.n, &value.sets)
    }
}

impl std::fmt::Display for SetSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.sets.iter().map(|&s| bits::format(s)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SetSystemJson {
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
}

/// Maximum matching between the sets and the elements of `allowed`
/// (Kuhn's augmenting paths).
fn matching_size(sets: &[Set], allowed: Set) -> usize {
    let mut owner = [usize::MAX; MAX_GROUND];
    let mut matched = 0;
    for i in 0..sets.len() {
        let mut visited: Set = 0;
        if augment(i, sets, allowed, &mut owner, &mut visited) {
            matched += 1;
        }
    }
    matched
}

fn augment(i: usize, sets: &[Set], allowed: Set, owner: &mut [usize; MAX_GROUND], visited: &mut Set) -> bool {
    let mut options = sets[i] & allowed & !*visited;
    while options != 0 {
        let e = options.trailing_zeros() as usize;
        options &= options - 1;
        if *visited >> e & 1 == 1 {
            continue;
        }
        *visited |= 1 << e;
        if owner[e] == usize::MAX || augment(owner[e], sets, allowed, owner, visited) {
            owner[e] = i;
            return true;
        }
    }
    false
}

/// `M[S]`: bases are the transversals of `system`.
pub fn transversal_matroid(system: &SetSystem) -> Matroid {
    let bases = bits::k_subsets(system.n, system.sets.len())
        .filter(|&j| matching_size(&system.sets, j) == system.sets.len())
        .collect();
    Matroid::from_bases_unchecked(system.n, bases)
}

/// Reading of the crossing condition on the fourth witness `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossingMode {
    /// `a, c ∈ S \ T`, `b ∈ T \ S` and `d ∈ T`.
    #[default]
    Verbatim,
    /// As `Verbatim`, additionally requiring `d ∉ S`.
    Symmetric,
}

/// `S_i` crosses `S_j` through `a <_a b <_a c <_a d`. Set indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingWitness {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub i: usize,
    pub j: usize,
}

/// A witness that `s` crosses `t` on `[n]`, if one exists.
pub fn crosses(n: usize, s: Set, t: Set, mode: CrossingMode) -> Option<(usize, usize, usize, usize)> {
    let ac = bits::elements(s & !t);
    let b_set = bits::elements(t & !s);
    let d_set = match mode {
        CrossingMode::Verbatim => bits::elements(t),
        CrossingMode::Symmetric => b_set.clone(),
    };
    for &a in &ac {
        let pos = |x: usize| (x + n - a) % n;
        for &b in &b_set {
            for &c in &ac {
                if !(pos(b) < pos(c)) || pos(b) == 0 {
                    continue;
                }
                if let Some(&d) = d_set.iter().find(|&&d| pos(d) > pos(c)) {
                    return Some((a, b, c, d));
                }
            }
        }
    }
    None
}

/// The first crossing pair `(S_i, S_j)` in row-major order of `(i, j)`.
pub fn find_crossing(system: &SetSystem, mode: CrossingMode) -> Option<CrossingWitness> {
    for (i, &s) in system.sets.iter().enumerate() {
        for (j, &t) in system.sets.iter().enumerate() {
            if i == j {
                continue;
            }
            if let Some((a, b, c, d)) = crosses(system.n, s, t, mode) {
                return Some(CrossingWitness { a, b, c, d, i: i + 1, j: j + 1 });
            }
        }
    }
    None
}

pub fn is_noncrossing(system: &SetSystem) -> bool {
    find_crossing(system, CrossingMode::Verbatim).is_none()
}

/// Every single-element deletion from a member set changes the matroid
/// (or destroys all transversals).
pub fn is_minimal_presentation(system: &SetSystem) -> bool {
    let matroid = transversal_matroid(system);
    for i in 0..system.sets.len() {
        for e in bits::elements(system.sets[i]) {
            let mut sets = system.sets.clone();
            sets[i] &= !bits::bit(e);
            if let Ok(smaller) = SetSystem::new(system.n, sets) {
                if transversal_matroid(&smaller) == matroid {
                    return false;
                }
            }
        }
    }
    true
}

/// An antichain of cyclic flats with both sides of the inequality
/// `rank(∩F) ≤ Σ_{∅≠F'⊆F} (-1)^{|F'|+1} rank(∪F')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntichainWitness {
    pub flats: Vec<Vec<usize>>,
    pub intersection_rank: i64,
    pub alternating_sum: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Check {
    Inequality,
    Equality,
}

/// Searches antichains of at least two cyclic flats for a failure of the
/// inequality (or of equality). Singletons always satisfy equality and the
/// two trivial cyclic flats are comparable with everything.
fn antichain_search(m: &Matroid, check: Check) -> Result<Option<AntichainWitness>> {
    let lattice = m.cyclic_flats()?;
    let flats: Vec<Set> = lattice.nontrivial().into_iter().map(|(f, _)| f).collect();
    let count = flats.len();
    let comparable = |x: Set, y: Set| x & y == x || x & y == y;
    let mut incomparable_after: Vec<Vec<bool>> = vec![vec![false; count]; count];
    for i in 0..count {
        for j in i + 1..count {
            incomparable_after[i][j] = !comparable(flats[i], flats[j]);
        }
    }

    struct Frame {
        chosen: Vec<usize>,
        terms: Vec<(Set, i64)>,
        intersection: Set,
    }

    fn extend(terms: &[(Set, i64)], f: Set) -> Vec<(Set, i64)> {
        let mut next: Vec<(Set, i64)> = Vec::with_capacity(2 * terms.len() + 1);
        next.extend_from_slice(terms);
        next.extend(terms.iter().map(|&(u, c)| (u | f, -c)));
        next.push((f, 1));
        next.sort_unstable_by_key(|&(u, _)| u);
        let mut merged: Vec<(Set, i64)> = Vec::with_capacity(next.len());
        for (u, c) in next {
            match merged.last_mut() {
                Some(last) if last.0 == u => last.1 += c,
                _ => merged.push((u, c)),
            }
        }
        merged.retain(|&(_, c)| c != 0);
        merged
    }

    let mut stack: Vec<Frame> = (0..count)
        .rev()
        .map(|i| Frame {
            chosen: vec![i],
            terms: vec![(flats[i], 1)],
            intersection: flats[i],
        })
        .collect();
    while let Some(frame) = stack.pop() {
        let last = *frame.chosen.last().expect("nonempty");
        for j in (last + 1..count).rev() {
            if !frame.chosen.iter().all(|&i| incomparable_after[i][j]) {
                continue;
            }
            let terms = extend(&frame.terms, flats[j]);
            let intersection = frame.intersection & flats[j];
            let lhs = m.rank_unchecked(intersection) as i64;
            let rhs: i64 = terms.iter().map(|&(u, c)| c * m.rank_unchecked(u) as i64).sum();
            let mut chosen = frame.chosen.clone();
            chosen.push(j);
            let failed = match check {
                Check::Inequality => lhs > rhs,
                Check::Equality => lhs != rhs,
            };
            if failed {
                return Ok(Some(AntichainWitness {
                    flats: chosen.iter().map(|&i| bits::elements(flats[i])).collect(),
                    intersection_rank: lhs,
                    alternating_sum: rhs,
                }));
            }
            stack.push(Frame { chosen, terms, intersection });
        }
    }
    Ok(None)
}

/// An antichain of cyclic flats violating the transversality inequality.
pub fn transversal_violation(m: &Matroid) -> Result<Option<AntichainWitness>> {
    antichain_search(m, Check::Inequality)
}

/// An antichain of cyclic flats where the inequality is not an equality.
pub fn fundamental_violation(m: &Matroid) -> Result<Option<AntichainWitness>> {
    antichain_search(m, Check::Equality)
}

pub fn is_transversal(m: &Matroid) -> Result<bool> {
    Ok(transversal_violation(m)?.is_none())
}

pub fn is_fundamental_transversal(m: &Matroid) -> Result<bool> {
    Ok(fundamental_violation(m)?.is_none())
}

/// Column types of a rank-2 diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColumnKind {
    Full,
    TopOnly,
    BottomOnly,
}

/// The statistic `τ` of a loopless rank-2 Le-diagram. Column ranges are
/// 1-based and inclusive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tau {
    pub value: usize,
    /// Maximal `L(i)` blocks: a run of bottom-only columns followed by one
    /// full column.
    pub blocks: Vec<(usize, usize)>,
    pub has_top_only: bool,
    pub has_stray_bottom_only: bool,
}

pub fn column_kinds(diagram: &LeDiagram) -> Result<Vec<ColumnKind>> {
    if diagram.k() != 2 {
        return Err(Error::Precondition(format!(
            "rank-2 statistic needs k = 2, got k = {}",
            diagram.k()
        )));
    }
    (1..=diagram.shape().width())
        .map(|c| match (diagram.is_filled(1, c), diagram.is_filled(2, c)) {
            (true, true) => Ok(ColumnKind::Full),
            (true, false) => Ok(ColumnKind::TopOnly),
            (false, true) => Ok(ColumnKind::BottomOnly),
            (false, false) => Err(Error::Precondition(format!(
                "column {c} is empty (a loop); reduce the diagram first"
            ))),
        })
        .collect()
}

pub fn tau(diagram: &LeDiagram) -> Result<Tau> {
    let kinds = column_kinds(diagram)?;
    let mut blocks = Vec::new();
    let mut covered = vec![false; kinds.len()];
    for (idx, &kind) in kinds.iter().enumerate() {
        if kind != ColumnKind::Full || idx == 0 || kinds[idx - 1] != ColumnKind::BottomOnly {
            continue;
        }
        let mut start = idx;
        while start > 0 && kinds[start - 1] == ColumnKind::BottomOnly {
            start -= 1;
        }
        covered[start..=idx].iter_mut().for_each(|c| *c = true);
        blocks.push((start + 1, idx + 1));
    }
    let uncovered = |want: ColumnKind| {
        kinds
            .iter()
            .zip(&covered)
            .any(|(&kind, &cov)| kind == want && !cov)
    };
    let has_top_only = uncovered(ColumnKind::TopOnly);
    let has_stray_bottom_only = uncovered(ColumnKind::BottomOnly);
    Ok(Tau {
        value: blocks.len() + usize::from(has_top_only) + usize::from(has_stray_bottom_only),
        blocks,
        has_top_only,
        has_stray_bottom_only,
    })
}

/// Transversality of a rank-2 positroid from its diagram: `τ ≤ 2` on the
/// loopless reduction.
pub fn is_transversal_rank2(diagram: &LeDiagram) -> Result<bool> {
    if diagram.k() != 2 {
        return Err(Error::Precondition(format!(
            "rank-2 test needs k = 2, got k = {}",
            diagram.k()
        )));
    }
    Ok(tau(&diagram.loopless_reduction())?.value <= 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> Set {
        bits::from_elements(e.iter().copied())
    }

    fn diagram(text: &str) -> LeDiagram {
        LeDiagram::from_ascii(text, None).unwrap()
    }

    #[test]
    fn transversal_matroid_examples() {
        let full = SetSystem::new(5, vec![0b11111; 2]).unwrap();
        assert_eq!(transversal_matroid(&full), Matroid::uniform(2, 5).unwrap());
        let diag = SetSystem::new(2, vec![set(&[1]), set(&[2])]).unwrap();
        assert_eq!(transversal_matroid(&diag).bases(), &[0b11]);
        let intro = SetSystem::new(4, vec![set(&[1, 2]), set(&[2, 3, 4])]).unwrap();
        let expected: Vec<Set> = bits::k_subsets(4, 2).filter(|&b| b != set(&[3, 4])).collect();
        assert_eq!(transversal_matroid(&intro).bases(), &expected[..]);
    }

    #[test]
    fn no_transversal_is_an_error() {
        assert!(matches!(SetSystem::new(3, vec![set(&[1]), set(&[1])]), Err(Error::NoTransversal)));
    }

    #[test]
    fn crossing_examples() {
        let s = SetSystem::new(4, vec![set(&[1, 3]), set(&[2, 4])]).unwrap();
        assert!(!is_noncrossing(&s));
        let w = find_crossing(&s, CrossingMode::Verbatim).unwrap();
        assert_eq!((w.a, w.b, w.c, w.d, w.i, w.j), (1, 2, 3, 4, 1, 2));
        let nested = SetSystem::new(5, vec![set(&[2, 3]), set(&[1, 2, 3, 4, 5])]).unwrap();
        assert!(is_noncrossing(&nested));
    }

    #[test]
    fn crossing_modes_differ() {
        // d may lie in S under the verbatim reading only.
        let s = set(&[1, 3, 4]);
        let t = set(&[2, 4]);
        assert!(crosses(4, s, t, CrossingMode::Verbatim).is_some());
        assert!(crosses(4, s, t, CrossingMode::Symmetric).is_none());
    }

    #[test]
    fn minimality_examples() {
        let full = SetSystem::new(4, vec![0b1111; 2]).unwrap();
        assert!(!is_minimal_presentation(&full));
        let diag = SetSystem::new(2, vec![set(&[1]), set(&[2])]).unwrap();
        assert!(is_minimal_presentation(&diag));
    }

    #[test]
    fn transversality_examples() {
        let parallel_pair = Matroid::from_bases(4, bits::k_subsets(4, 2).filter(|&b| b != set(&[3, 4])).collect()).unwrap();
        assert!(is_transversal(&parallel_pair).unwrap());
        assert!(is_fundamental_transversal(&parallel_pair).unwrap());
        let u = Matroid::uniform(3, 6).unwrap();
        assert!(is_transversal(&u).unwrap());
        assert!(is_fundamental_transversal(&u).unwrap());
    }

    #[test]
    fn three_parallel_classes_are_not_transversal() {
        // Rank 2 on [6] with parallel classes {1,2}, {3,4}, {5,6}.
        let classes = [set(&[1, 2]), set(&[3, 4]), set(&[5, 6])];
        let bases = bits::k_subsets(6, 2)
            .filter(|&b| classes.iter().all(|&c| b & !c != 0))
            .collect();
        let m = Matroid::from_bases(6, bases).unwrap();
        let w = transversal_violation(&m).unwrap().unwrap();
        assert_eq!(w.flats.len(), 3);
        assert_eq!((w.intersection_rank, w.alternating_sum), (0, -1));
    }

    #[test]
    fn tau_examples() {
        let reduced = diagram("*.*..***\n.*****\n");
        let t = tau(&reduced).unwrap();
        assert_eq!(t.value, 3);
        assert_eq!(t.blocks, vec![(2, 3), (4, 6)]);
        assert!(t.has_top_only && !t.has_stray_bottom_only);
        assert_eq!(tau(&diagram(".*\n**\n")).unwrap().value, 1);
        assert_eq!(tau(&LeDiagram::full_rectangle(2, 6).unwrap()).unwrap().value, 0);
        assert!(matches!(tau(&diagram("*.\n*\n")), Err(Error::Precondition(_))));
        assert!(matches!(tau(&diagram("*\n")), Err(Error::Precondition(_))));
    }

    #[test]
    fn rank2_examples() {
        let tau_three = LeDiagram::from_ascii("*.*...**.*\n.**.***\n", None).unwrap();
        assert!(!is_transversal_rank2(&tau_three).unwrap());
        assert!(is_transversal_rank2(&diagram(".*\n**\n")).unwrap());
        assert!(is_transversal_rank2(&LeDiagram::full_rectangle(2, 5).unwrap()).unwrap());
    }

    #[test]
    fn json_roundtrip() {
        let s = SetSystem::new(4, vec![set(&[1, 2]), set(&[2, 3, 4])]).unwrap();
        let text = s.to_json();
        assert_eq!(text, r#"{"n":4,"sets":[[1,2],[2,3,4]]}"#);
        assert_eq!(SetSystem::from_json(&text).unwrap(), s);
    }
}
