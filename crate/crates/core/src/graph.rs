//! Simple undirected graphs and their automorphism groups, computed by
//! individualization-refinement over equitable ordered partitions.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

pub const GRAPH_SIZE_LIMIT: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    neighbors: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl Graph {
    /// Builds a graph from an edge list; loops and repeated edges are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::with_labels(labels, edges)
    }

    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let words = n.div_ceil(64);
        let mut g = Graph { n, words, bits: vec![0; n * words], neighbors: vec![Vec::new(); n], labels };
        for &(a, b) in edges {
            for p in [a, b] {
                if p >= n {
                    return Err(Error::PointOutOfRange { point: p, degree: n });
                }
            }
            if a != b && !g.has_edge(a, b) {
                g.bits[a * words + b / 64] |= 1 << (b % 64);
                g.bits[b * words + a / 64] |= 1 << (a % 64);
                g.neighbors[a].push(b);
                g.neighbors[b].push(a);
            }
        }
        for nb in &mut g.neighbors {
            nb.sort_unstable();
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Self::from_edges(n, &edges).expect("vertices in range")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|a| self.neighbors[a].iter().filter(move |&&b| a < b).map(move |&b| (a, b))).collect()
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.neighbors.first().map_or(0, Vec::len);
        self.neighbors.iter().all(|nb| nb.len() == d).then_some(d)
    }

    pub fn complement(&self) -> Graph {
        let edges: Vec<_> = (0..self.n)
            .flat_map(|a| (a + 1..self.n).filter(move |&b| !self.has_edge(a, b)).map(move |b| (a, b)))
            .collect();
        Graph::with_labels(self.labels.clone(), &edges).expect("vertices in range")
    }

    /// Copy with vertex `v` renamed to `p.image(v)`.
    pub fn relabel(&self, p: &Perm) -> Result<Graph> {
        if p.degree() != self.n {
            return Err(Error::NotBijection { degree: self.n });
        }
        let mut labels = vec![String::new(); self.n];
        for v in 0..self.n {
            labels[p.image(v)] = self.labels[v].clone();
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(a, b)| (p.image(a), p.image(b))).collect();
        Graph::with_labels(labels, &edges)
    }

    /// True iff `p` maps edges onto edges (and hence non-edges onto non-edges).
    pub fn is_automorphism(&self, p: &Perm) -> bool {
        p.degree() == self.n && self.edges().into_iter().all(|(a, b)| self.has_edge(p.image(a), p.image(b)))
    }

    /// One line per vertex: `label: neighbor-indices`.
    pub fn to_adjacency_text(&self) -> String {
        let mut out = String::new();
        for v in 0..self.n {
            let nb: Vec<String> = self.neighbors[v].iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}: {}", self.labels[v], nb.join(" "));
        }
        out
    }
}

/// Graph on `items` with an edge between `i != j` iff `pairing(i, j) == edge_value`.
pub fn intersection_graph<T, F>(items: &[T], labels: Vec<String>, pairing: F, edge_value: i64) -> Result<Graph>
where
    F: Fn(&T, &T) -> i64,
{
    if labels.len() != items.len() {
        return Err(Error::DimensionMismatch(format!("{} labels for {} items", labels.len(), items.len())));
    }
    let mut edges = Vec::new();
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if pairing(&items[i], &items[j]) == edge_value {
                edges.push((i, j));
            }
        }
    }
    Graph::with_labels(labels, &edges)
}

/// Pairing value joining two exceptional classes in the Gosset graph. With
/// classes of self-intersection -1, polytope edges have |e - e'|^2 = 2, which
/// is pairing 0. Pairing 1 gives the distance-2 graph instead, whose
/// neighborhoods are complements of the Schläfli graph.
pub const GOSSET_EDGE_VALUE: i64 = 0;

/// Graph on the 56 exceptional classes in their fixed order.
pub fn del_pezzo_graph(edge_value: i64) -> Graph {
    let classes = crate::del_pezzo::exceptional_classes();
    let labels = classes.iter().map(|c| c.label.to_string()).collect();
    intersection_graph(&classes, labels, crate::del_pezzo::class_pairing, edge_value).expect("labels match classes")
}

pub fn gosset_graph() -> Graph {
    del_pezzo_graph(GOSSET_EDGE_VALUE)
}

/// Induced subgraph on the neighbors of `v`, vertices in ascending order.
pub fn neighborhood_subgraph(g: &Graph, v: usize) -> Result<Graph> {
    if v >= g.n {
        return Err(Error::PointOutOfRange { point: v, degree: g.n });
    }
    let verts = g.neighbors(v);
    let labels = verts.iter().map(|&u| g.labels[u].clone()).collect();
    let mut edges = Vec::new();
    for (i, &a) in verts.iter().enumerate() {
        for (j, &b) in verts.iter().enumerate().skip(i + 1) {
            if g.has_edge(a, b) {
                edges.push((i, j));
            }
        }
    }
    Graph::with_labels(labels, &edges)
}

type Cells = Vec<Vec<usize>>;

/// Label-independent summary of an equitable partition: cell sizes and the
/// quotient matrix, both in cell order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct NodeInvariant {
    sizes: Vec<usize>,
    quotient: Vec<Vec<(usize, usize)>>,
}

fn cell_index(n: usize, cells: &Cells) -> Vec<usize> {
    let mut of = vec![0; n];
    for (i, c) in cells.iter().enumerate() {
        for &v in c {
            of[v] = i;
        }
    }
    of
}

fn signature(g: &Graph, v: usize, cell_of: &[usize]) -> Vec<(usize, usize)> {
    let mut counts: Vec<usize> = g.neighbors(v).iter().map(|&u| cell_of[u]).collect();
    counts.sort_unstable();
    let mut sig: Vec<(usize, usize)> = Vec::new();
    for c in counts {
        match sig.last_mut() {
            Some((cell, k)) if *cell == c => *k += 1,
            _ => sig.push((c, 1)),
        }
    }
    sig
}

/// Splits cells by neighbor-count signatures until the partition is equitable.
/// Subcells replace their parent in ascending signature order.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    'outer: loop {
        let cell_of = cell_index(g.n, &cells);
        for i in 0..cells.len() {
            if cells[i].len() == 1 {
                continue;
            }
            let mut keyed: Vec<(Vec<(usize, usize)>, usize)> =
                cells[i].iter().map(|&v| (signature(g, v, &cell_of), v)).collect();
            if keyed.iter().all(|(s, _)| *s == keyed[0].0) {
                continue;
            }
            keyed.sort();
            let mut parts: Cells = Vec::new();
            let mut last: Option<&Vec<(usize, usize)>> = None;
            for (sig, v) in &keyed {
                if last != Some(sig) {
                    parts.push(Vec::new());
                    last = Some(sig);
                }
                parts.last_mut().expect("pushed").push(*v);
            }
            cells.splice(i..=i, parts);
            continue 'outer;
        }
        return cells;
    }
}

fn initial_cells(g: &Graph) -> Cells {
    let mut by_degree: Vec<(usize, usize)> = (0..g.n).map(|v| (g.degree(v), v)).collect();
    by_degree.sort_unstable();
    let mut cells: Cells = Vec::new();
    let mut last = None;
    for (d, v) in by_degree {
        if last != Some(d) {
            cells.push(Vec::new());
            last = Some(d);
        }
        cells.last_mut().expect("pushed").push(v);
    }
    refine(g, cells)
}

fn invariant(g: &Graph, cells: &Cells) -> NodeInvariant {
    let cell_of = cell_index(g.n, cells);
    NodeInvariant {
        sizes: cells.iter().map(Vec::len).collect(),
        quotient: cells.iter().map(|c| signature(g, c[0], &cell_of)).collect(),
    }
}

/// First smallest non-singleton cell.
fn target_cell(cells: &Cells) -> Option<usize> {
    cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(i, c)| (c.len(), *i)).map(|(i, _)| i)
}

fn individualize(g: &Graph, cells: &Cells, cell: usize, v: usize) -> Cells {
    let mut next = cells.clone();
    let rest: Vec<usize> = cells[cell].iter().copied().filter(|&u| u != v).collect();
    next.splice(cell..=cell, [vec![v], rest]);
    refine(g, next)
}

struct PathNode {
    cells: Cells,
    inv: NodeInvariant,
}

/// Leftmost root-to-leaf path; each step individualizes the smallest vertex
/// of the target cell.
fn first_path(g: &Graph) -> Vec<PathNode> {
    let mut cells = initial_cells(g);
    let mut path = Vec::new();
    loop {
        let inv = invariant(g, &cells);
        let target = target_cell(&cells);
        path.push(PathNode { cells: cells.clone(), inv });
        match target {
            Some(t) => {
                let v = *cells[t].iter().min().expect("non-empty");
                cells = individualize(g, &cells, t, v);
            }
            None => return path,
        }
    }
}

fn leaf_order(cells: &Cells) -> Vec<usize> {
    cells.iter().map(|c| c[0]).collect()
}

/// Depth-first search below `cells` (at `depth` on the reference path) for a
/// leaf whose induced map from `reference` passes `accept`.
fn search_leaf<F>(
    g: &Graph,
    path: &[PathNode],
    reference: &[usize],
    cells: Cells,
    depth: usize,
    accept: &F,
) -> Option<Perm>
where
    F: Fn(&Perm) -> bool,
{
    if depth >= path.len() || invariant(g, &cells) != path[depth].inv {
        return None;
    }
    match target_cell(&cells) {
        None => {
            let mut images = vec![0; reference.len()];
            for (&a, b) in reference.iter().zip(leaf_order(&cells)) {
                images[a] = b;
            }
            let p = Perm::from_images(images).expect("leaf is a bijection");
            accept(&p).then_some(p)
        }
        Some(t) => {
            let mut cell = cells[t].clone();
            cell.sort_unstable();
            cell.into_iter()
                .find_map(|w| search_leaf(g, path, reference, individualize(g, &cells, t, w), depth + 1, accept))
        }
    }
}

fn orbit_of(n: usize, gens: &[Perm], v: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.image(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Generators of Aut(g) found level by level, deepest first: at each level
/// one automorphism is sought for every target-cell vertex not already in the
/// orbit of the path vertex.
pub fn automorphism_generators(g: &Graph) -> Result<Vec<Perm>> {
    if g.n > GRAPH_SIZE_LIMIT {
        return Err(Error::GraphTooLarge { n: g.n, limit: GRAPH_SIZE_LIMIT });
    }
    if g.n == 0 {
        return Ok(Vec::new());
    }
    let path = first_path(g);
    let reference = leaf_order(&path.last().expect("non-empty path").cells);
    let mut gens: Vec<Perm> = Vec::new();
    for d in (0..path.len() - 1).rev() {
        let cells = &path[d].cells;
        let t = target_cell(cells).expect("inner node");
        let v = *cells[t].iter().min().expect("non-empty");
        let mut orbit = orbit_of(g.n, &gens, v);
        let mut candidates = cells[t].clone();
        candidates.sort_unstable();
        for w in candidates {
            if orbit[w] {
                continue;
            }
            let next = individualize(g, cells, t, w);
            if let Some(p) = search_leaf(g, &path, &reference, next, d + 1, &|p| g.is_automorphism(p)) {
                gens.push(p);
                orbit = orbit_of(g.n, &gens, v);
            }
        }
    }
    Ok(gens)
}

pub fn automorphism_group(g: &Graph) -> Result<PermGroup> {
    let gens = automorphism_generators(g)?;
    PermGroup::from_generators(g.n, gens)
}

/// Isomorphism test: cheap invariants first, then a search of the second
/// graph's refinement tree for a leaf matching the first graph's leftmost leaf.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g1, g2)?.is_some())
}

/// A vertex bijection `p` with `g1` edge `{a,b}` ⇔ `g2` edge `{p(a),p(b)}`.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Result<Option<Perm>> {
    for g in [g1, g2] {
        if g.n > GRAPH_SIZE_LIMIT {
            return Err(Error::GraphTooLarge { n: g.n, limit: GRAPH_SIZE_LIMIT });
        }
    }
    if g1.n != g2.n || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let degrees = |g: &Graph| {
        let mut d: Vec<usize> = (0..g.n).map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g1) != degrees(g2) {
        return Ok(None);
    }
    if g1.n == 0 {
        return Ok(Some(Perm::identity(0)));
    }
    let path = first_path(g1);
    let reference = leaf_order(&path.last().expect("non-empty path").cells);
    let edges = g1.edges();
    let accept = |p: &Perm| edges.iter().all(|&(a, b)| g2.has_edge(p.image(a), p.image(b)));
    Ok(search_leaf(g2, &path, &reference, initial_cells(g2), 0, &accept))
}
