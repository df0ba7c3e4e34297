//! Planar networks built from Le-diagrams, their boundary measurement
//! matrices over exact rationals, and disjoint path systems.

use std::collections::VecDeque;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bits::{self, Set};
use crate::diagram::LeDiagram;
use crate::error::{Error, Result};
use crate::transversal::SetSystem;

pub type Rational = BigRational;

/// A vertex of a [`PlanarNetwork`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    /// Boundary vertex with its label in `1..=n`.
    Boundary(usize),
    /// Internal vertex, indexed in creation order.
    Internal(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub from: Vertex,
    pub to: Vertex,
    pub weight: Rational,
}

/// Positive weights for the horizontal edges of a Le-network, listed row by
/// row from the top, and right to left inside a row. Vertical edges always
/// carry weight 1.
#[derive(Debug, Clone, PartialEq)]
#[derive(Default)]
pub enum WeightAssignment {
    /// The `t`-th horizontal edge gets the `t`-th prime.
    #[default]
    Primes,
    /// Every horizontal edge gets weight 1.
    Unit,
    Explicit(Vec<Rational>),
}

impl WeightAssignment {
    pub fn from_integers<I: IntoIterator<Item = i64>>(weights: I) -> Self {
        Self::Explicit(
            weights
                .into_iter()
                .map(|w| Rational::from_integer(BigInt::from(w)))
                .collect(),
        )
    }

    fn weights(&self, count: usize) -> Result<Vec<Rational>> {
        match self {
            Self::Primes => Ok(first_primes(count)
                .into_iter()
                .map(|p| Rational::from_integer(BigInt::from(p)))
                .collect()),
            Self::Unit => Ok(vec![Rational::one(); count]),
            Self::Explicit(ws) => {
                if ws.len() != count {
                    return Err(Error::Argument(format!(
                        "network has {count} weighted edges but {} weights were given",
                        ws.len()
                    )));
                }
                if let Some((i, w)) = ws.iter().enumerate().find(|(_, w)| !w.is_positive()) {
                    return Err(Error::Domain(format!(
                        "edge weight #{} is {w}, weights must be strictly positive",
                        i + 1
                    )));
                }
                Ok(ws.clone())
            }
        }
    }
}

fn first_primes(count: usize) -> Vec<u64> {
    let mut primes: Vec<u64> = Vec::with_capacity(count);
    let mut candidate = 2u64;
    while primes.len() < count {
        if primes.iter().take_while(|&&p| p * p <= candidate).all(|&p| !candidate.is_multiple_of(p)) {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
}

/// A directed network embedded in a disk with boundary vertices `1..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanarNetwork {
    n: usize,
    is_source: Vec<bool>,
    internal: usize,
    /// Diagram cell of each internal vertex, when built from a diagram.
    cells: Vec<Option<(usize, usize)>>,
    edges: Vec<Edge>,
    acyclic: bool,
}

impl PlanarNetwork {
    /// Assembles a network from raw parts. Boundary vertices may touch at
    /// most one edge, sources only as tails and sinks only as heads. Cycles
    /// are accepted here but rejected by the measurement.
    pub fn new(n: usize, sources: &[usize], internal: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut is_source = vec![false; n];
        for &s in sources {
            if s == 0 || s > n {
                return Err(Error::Argument(format!("source {s} outside 1..={n}")));
            }
            is_source[s - 1] = true;
        }
        let mut degree = vec![0usize; n];
        for e in &edges {
            if !e.weight.is_positive() {
                return Err(Error::Domain(format!(
                    "edge {:?} -> {:?} has non-positive weight {}",
                    e.from, e.to, e.weight
                )));
            }
            for (v, is_tail) in [(e.from, true), (e.to, false)] {
                match v {
                    Vertex::Boundary(l) => {
                        if l == 0 || l > n {
                            return Err(Error::Argument(format!("boundary vertex {l} outside 1..={n}")));
                        }
                        if is_source[l - 1] != is_tail {
                            return Err(Error::Argument(format!(
                                "boundary vertex {l} is used against its source/sink role"
                            )));
                        }
                        degree[l - 1] += 1;
                    }
                    Vertex::Internal(i) if i >= internal => {
                        return Err(Error::Argument(format!("internal vertex {i} out of range")));
                    }
                    Vertex::Internal(_) => {}
                }
            }
        }
        if let Some(l) = degree.iter().position(|&d| d > 1) {
            return Err(Error::Argument(format!(
                "boundary vertex {} is incident to {} edges",
                l + 1,
                degree[l]
            )));
        }
        let mut net = Self {
            n,
            is_source,
            internal,
            cells: vec![None; internal],
            edges,
            acyclic: true,
        };
        net.acyclic = net.topological_order().is_some();
        Ok(net)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.is_source.iter().filter(|&&s| s).count()
    }

    /// Source labels in increasing order.
    pub fn sources(&self) -> Vec<usize> {
        (1..=self.n).filter(|&l| self.is_source[l - 1]).collect()
    }

    pub fn internal_count(&self) -> usize {
        self.internal
    }

    /// The diagram cell an internal vertex came from.
    pub fn cell_of(&self, internal: usize) -> Option<(usize, usize)> {
        self.cells.get(internal).copied().flatten()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_acyclic(&self) -> bool {
        self.acyclic
    }

    fn vertex_count(&self) -> usize {
        self.n + self.internal
    }

    fn id(&self, v: Vertex) -> usize {
        match v {
            Vertex::Boundary(l) => l - 1,
            Vertex::Internal(i) => self.n + i,
        }
    }

    fn out_lists(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count()];
        for (idx, e) in self.edges.iter().enumerate() {
            out[self.id(e.from)].push(idx);
        }
        out
    }

    fn topological_order(&self) -> Option<Vec<usize>> {
        let count = self.vertex_count();
        let mut indegree = vec![0usize; count];
        let mut succ = vec![Vec::new(); count];
        for e in &self.edges {
            let (u, v) = (self.id(e.from), self.id(e.to));
            succ[u].push(v);
            indegree[v] += 1;
        }
        let mut queue: VecDeque<usize> = (0..count).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(count);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &succ[u] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        (order.len() == count).then_some(order)
    }

    fn flow_network(&self) -> FlowNetwork {
        let mut succ = vec![Vec::new(); self.vertex_count()];
        for e in &self.edges {
            succ[self.id(e.from)].push(self.id(e.to));
        }
        FlowNetwork {
            n: self.n,
            sources: self.sources(),
            succ,
        }
    }
}

/// Builds the Le-network of `diagram`: one internal vertex per bullet,
/// weighted edges running leftward from each source (or bullet) to the next
/// bullet in its row, and unit edges running down from each bullet to the
/// next bullet or the sink below it.
pub fn build_network(diagram: &LeDiagram, weights: &WeightAssignment) -> Result<PlanarNetwork> {
    if let Some(v) = diagram.le_violation() {
        return Err(Error::Precondition(format!("not a Le-diagram: {v}")));
    }
    let labels = diagram.boundary_labeling();
    let n = diagram.n();
    let k = diagram.k();

    let mut index = std::collections::HashMap::new();
    let mut cells = Vec::new();
    for cell in diagram.filled_cells() {
        index.insert(cell, cells.len());
        cells.push(Some(cell));
    }

    let horizontal: usize = (1..=k)
        .map(|r| diagram.row_mask(r).count_ones() as usize)
        .sum();
    let mut weight_iter = weights.weights(horizontal)?.into_iter();
    let mut edges = Vec::new();
    for r in 1..=k {
        let mut prev = Vertex::Boundary(labels.source_of_row(r));
        for c in bits::elements(diagram.row_mask(r)).into_iter().rev() {
            let here = Vertex::Internal(index[&(r, c)]);
            edges.push(Edge {
                from: prev,
                to: here,
                weight: weight_iter.next().expect("weight count matches"),
            });
            prev = here;
        }
    }
    for &(r, c) in index.keys().collect::<std::collections::BTreeSet<_>>() {
        let below = (r + 1..=k).find(|&r2| diagram.is_filled(r2, c));
        let to = match below {
            Some(r2) => Vertex::Internal(index[&(r2, c)]),
            None => Vertex::Boundary(labels.sink_of_column(c)),
        };
        edges.push(Edge {
            from: Vertex::Internal(index[&(r, c)]),
            to,
            weight: Rational::one(),
        });
    }
    let mut net = PlanarNetwork::new(n, &labels.sources(), cells.len(), edges)?;
    net.cells = cells;
    Ok(net)
}

/// Boundary measurement matrix: rows indexed by the sources in increasing
/// order, columns by `1..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementMatrix {
    sources: Vec<usize>,
    n: usize,
    entries: Vec<Vec<Rational>>,
}

impl MeasurementMatrix {
    pub fn new(sources: Vec<usize>, n: usize, entries: Vec<Vec<Rational>>) -> Result<Self> {
        if entries.len() != sources.len() || entries.iter().any(|row| row.len() != n) {
            return Err(Error::Argument("matrix dimensions do not match".into()));
        }
        Ok(Self { sources, n, entries })
    }

    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// Entry for source `source` (a label) and column `col` (1-based).
    pub fn get(&self, source: usize, col: usize) -> Option<&Rational> {
        let row = self.sources.iter().position(|&s| s == source)?;
        self.entries[row].get(col - 1)
    }

    /// JSON array of rows, each entry an exact rational string `"p/q"`.
    pub fn to_json(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(rational_string).collect())
            .collect();
        serde_json::to_string(&rows).expect("strings serialize")
    }

    /// Right-aligned text table with source labels in the margin.
    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|q| q.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for (s, row) in self.sources.iter().zip(&cells) {
            let _ = write!(out, "{s:>3} |");
            for c in row {
                let _ = write!(out, " {c:>width$}");
            }
            out.push('\n');
        }
        out
    }
}

/// `p/q` with `q > 0`, always including the denominator.
pub fn rational_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Argument(format!("not a rational: {text:?}"));
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Signed weighted path sums: entry `(i, j)` is `(-1)^s` times the total
/// weight of directed paths `i -> j`, where `s` counts the sources strictly
/// between `i` and `j`.
pub fn boundary_measurement(net: &PlanarNetwork) -> Result<MeasurementMatrix> {
    let order = net
        .topological_order()
        .ok_or_else(|| Error::Unsupported("network has a directed cycle".into()))?;
    let out = net.out_lists();
    let sources = net.sources();
    let mut entries = Vec::with_capacity(sources.len());
    for &s in &sources {
        let mut sum = vec![Rational::zero(); net.vertex_count()];
        sum[s - 1] = Rational::one();
        for &u in &order {
            if sum[u].is_zero() {
                continue;
            }
            for &e in &out[u] {
                let edge = &net.edges[e];
                let v = net.id(edge.to);
                let add = &sum[u] * &edge.weight;
                sum[v] += add;
            }
        }
        let row: Vec<Rational> = (1..=net.n)
            .map(|j| {
                if j == s {
                    return Rational::one();
                }
                if net.is_source[j - 1] {
                    return Rational::zero();
                }
                let (lo, hi) = if s < j { (s, j) } else { (j, s) };
                let between = (lo + 1..hi).filter(|&l| net.is_source[l - 1]).count();
                let value = sum[j - 1].clone();
                if between % 2 == 1 {
                    -value
                } else {
                    value
                }
            })
            .collect();
        entries.push(row);
    }
    MeasurementMatrix::new(sources, net.n, entries)
}

/// Whether some family of pairwise vertex-disjoint paths, one from each
/// source (possibly empty), ends exactly at the labels in `terminals`.
pub fn has_disjoint_path_system(net: &PlanarNetwork, terminals: Set) -> Result<bool> {
    let k = net.k();
    if bits::size(terminals) != k || terminals & !bits::full(net.n) != 0 {
        return Err(Error::Argument(format!(
            "terminal set {} must be a {k}-subset of [{}]",
            bits::format(terminals),
            net.n
        )));
    }
    Ok(net.flow_network().routes(terminals))
}

/// The positroid bases of `diagram`, read combinatorially from disjoint path
/// systems of its network. Sorted increasingly as bitmasks.
pub fn bases_from_flows(diagram: &LeDiagram) -> Result<Vec<Set>> {
    if let Some(v) = diagram.le_violation() {
        return Err(Error::Precondition(format!("not a Le-diagram: {v}")));
    }
    let flow = FlowNetwork::from_diagram(diagram);
    Ok(bits::k_subsets(diagram.n(), diagram.k())
        .filter(|&j| flow.routes(j))
        .collect())
}

/// Row supports of a measurement matrix, as a set system.
pub fn support(matrix: &MeasurementMatrix) -> Result<SetSystem> {
    let sets = matrix
        .entries
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, q)| !q.is_zero())
                .fold(0, |acc, (j, _)| acc | bits::bit(j + 1))
        })
        .collect();
    SetSystem::new(matrix.n, sets)
}

/// Unweighted adjacency used for disjoint-path queries. Vertex ids: `0..n`
/// are boundary labels `1..=n`, the rest internal.
pub(crate) struct FlowNetwork {
    n: usize,
    sources: Vec<usize>,
    succ: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub(crate) fn from_diagram(diagram: &LeDiagram) -> Self {
        let labels = diagram.boundary_labeling();
        let n = diagram.n();
        let k = diagram.k();
        let width = diagram.shape().width();
        // id of the bullet at (r, c)
        let mut id = vec![usize::MAX; k * width.max(1)];
        let mut next = n;
        for r in 1..=k {
            for c in bits::elements(diagram.row_mask(r)) {
                id[(r - 1) * width + c - 1] = next;
                next += 1;
            }
        }
        let mut succ = vec![Vec::new(); next];
        for r in 1..=k {
            let mut prev = labels.source_of_row(r) - 1;
            for c in bits::elements(diagram.row_mask(r)).into_iter().rev() {
                let here = id[(r - 1) * width + c - 1];
                succ[prev].push(here);
                prev = here;
            }
            for c in bits::elements(diagram.row_mask(r)) {
                let here = id[(r - 1) * width + c - 1];
                let below = (r + 1..=k)
                    .find(|&r2| diagram.is_filled(r2, c))
                    .map(|r2| id[(r2 - 1) * width + c - 1])
                    .unwrap_or(labels.sink_of_column(c) - 1);
                succ[here].push(below);
            }
        }
        Self {
            n,
            sources: labels.sources(),
            succ,
        }
    }

    /// Max vertex-disjoint flow from the sources outside `terminals` to the
    /// sinks inside it, via unit-capacity vertex splitting.
    pub(crate) fn routes(&self, terminals: Set) -> bool {
        let senders: Vec<usize> = self
            .sources
            .iter()
            .copied()
            .filter(|&s| !bits::contains(terminals, s))
            .collect();
        let wanted = senders.len();
        if wanted == 0 {
            return true;
        }
        let vertices = self.succ.len();
        // Split node v into 2v (in) and 2v+1 (out); plus super source/sink.
        let source = 2 * vertices;
        let sink = source + 1;
        let mut graph = Residual::new(sink + 1);
        for v in 0..vertices {
            graph.add(2 * v, 2 * v + 1);
            for &w in &self.succ[v] {
                graph.add(2 * v + 1, 2 * w);
            }
        }
        for &s in &senders {
            graph.add(source, 2 * (s - 1));
        }
        for t in bits::elements(terminals) {
            if !self.sources.contains(&t) {
                graph.add(2 * (t - 1) + 1, sink);
            }
        }
        let _ = self.n;
        let mut flow = 0;
        while flow < wanted && graph.augment(source, sink) {
            flow += 1;
        }
        flow == wanted
    }
}

struct Residual {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u8>,
}

impl Residual {
    fn new(nodes: usize) -> Self {
        Self {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add(&mut self, u: usize, v: usize) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(1);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut parent_edge = vec![usize::MAX; self.head.len()];
        let mut seen = vec![false; self.head.len()];
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    parent_edge[v] = e;
                    queue.push_back(v);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut v = t;
        while v != s {
            let e = parent_edge[v];
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            v = self.to[e ^ 1];
        }
        true
    }
}
