//! Simple undirected graphs on `0..n`, vertex orderings, and the augmented
//! adjacency matrix seen through an ordering.
//!
//! Adjacency is stored as a bit matrix with one `u64` word per 64 vertices
//! per row. Everything here is immutable once built.

use std::fmt;

use crate::error::GraphError;

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Square symmetric bit matrix shared by [`Graph`] and [`AugmentedMatrix`].
#[derive(Clone, PartialEq, Eq, Hash)]
struct BitMatrix {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let stride = words_for(n);
        BitMatrix {
            n,
            stride,
            bits: vec![0; stride * n],
        }
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        (self.bits[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    fn set_sym(&mut self, i: usize, j: usize, value: bool) {
        for (r, c) in [(i, j), (j, i)] {
            let w = &mut self.bits[r * self.stride + c / WORD];
            if value {
                *w |= 1 << (c % WORD);
            } else {
                *w &= !(1 << (c % WORD));
            }
        }
    }

    fn row_count(&self, i: usize) -> usize {
        self.bits[i * self.stride..(i + 1) * self.stride]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Equality is label-sensitive: two isomorphic graphs with different
/// labelings compare unequal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BitMatrix,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: BitMatrix::new(n),
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u.max(v),
                n,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        self.adj.set_sym(u, v, true);
        Ok(())
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj.get(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.row_count(v)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |u| ((u + 1)..n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&u| self.has_edge(v, u))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.has_edge(u, v) {
                    g.adj.set_sym(u, v, true);
                }
            }
        }
        g
    }

    /// Subgraph induced by `vertices`; vertex `vertices[k]` becomes `k`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let n = self.n();
        let mut seen = vec![false; n];
        for &v in vertices {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(GraphError::DuplicateVertex { vertex: v });
            }
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj.set_sym(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// Relabels so that new vertex `k` is old vertex `ordering[k]`.
    pub fn permuted(&self, ordering: &VertexOrdering) -> Result<Graph, GraphError> {
        ordering.check_len(self.n())?;
        self.induced_subgraph(ordering.as_slice())
    }

    /// Parses the edge-list text format.
    ///
    /// ```text
    /// # comment lines and blank lines are ignored
    /// n 4
    /// 0 1
    /// 1 2
    /// ```
    ///
    /// The first significant line must be `n <count>`; every later line is a
    /// pair of 0-based vertex indices separated by whitespace.
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut graph: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let parse_err = |message: String| GraphError::Parse {
                line: line_no,
                message,
            };
            match graph.as_mut() {
                None => {
                    if tokens.len() != 2 || tokens[0] != "n" {
                        return Err(parse_err(format!("expected header `n <count>`, found `{line}`")));
                    }
                    let n = tokens[1]
                        .parse::<usize>()
                        .map_err(|e| parse_err(format!("bad vertex count `{}`: {e}", tokens[1])))?;
                    graph = Some(Graph::empty(n));
                }
                Some(g) => {
                    if tokens.len() != 2 {
                        return Err(parse_err(format!("expected `u v`, found `{line}`")));
                    }
                    let mut ends = [0usize; 2];
                    for (slot, tok) in ends.iter_mut().zip(&tokens) {
                        *slot = tok
                            .parse::<usize>()
                            .map_err(|e| parse_err(format!("bad vertex index `{tok}`: {e}")))?;
                    }
                    g.insert_edge(ends[0], ends[1]).map_err(|e| parse_err(e.to_string()))?;
                }
            }
        }
        graph.ok_or(GraphError::Parse {
            line: text.lines().count().max(1),
            message: "missing header `n <count>`".into(),
        })
    }

    /// Inverse of [`Graph::parse`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Cycle `C_n` on `0..n` in cyclic order.
pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    require_at_least("cycle", n, 3)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn make_path(n: usize) -> Result<Graph, GraphError> {
    require_at_least("path", n, 1)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn make_complete(n: usize) -> Result<Graph, GraphError> {
    require_at_least("complete graph", n, 1)?;
    Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
}

/// `K_{m,n}`: vertices `0..m` form one side, `m..m+n` the other.
pub fn make_complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    require_at_least("complete bipartite side", m.min(n), 1)?;
    Graph::from_edges(m + n, (0..m).flat_map(|x| (m..m + n).map(move |y| (x, y))))
}

/// Wheel `W_n`: vertex 0 is the hub, `1..=n` is the rim cycle in order.
pub fn make_wheel(n: usize) -> Result<Graph, GraphError> {
    require_at_least("wheel", n, 3)?;
    let rim = (0..n).map(|i| (1 + i, 1 + (i + 1) % n));
    let spokes = (1..=n).map(|v| (0, v));
    Graph::from_edges(n + 1, rim.chain(spokes))
}

/// Caterpillar with spine `s_1..s_k` and `leg_counts[i]` leaves on `s_{i+1}`.
///
/// Spine vertices are numbered first (`0..k`), then the leaves in spine order.
pub fn make_caterpillar(leg_counts: &[usize]) -> Result<Graph, GraphError> {
    let k = leg_counts.len();
    require_at_least("caterpillar spine", k, 1)?;
    let n = k + leg_counts.iter().sum::<usize>();
    let mut edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    let mut next = k;
    for (spine, &legs) in leg_counts.iter().enumerate() {
        for _ in 0..legs {
            edges.push((spine, next));
            next += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn require_at_least(what: &'static str, got: usize, min: usize) -> Result<(), GraphError> {
    if got < min {
        Err(GraphError::TooSmall { what, min, got })
    } else {
        Ok(())
    }
}

/// A permutation of `0..n`: position `i` holds vertex `perm[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexOrdering(Vec<usize>);

impl VertexOrdering {
    pub fn new(perm: Vec<usize>) -> Result<Self, GraphError> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in &perm {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(GraphError::NotPermutation(perm));
            }
        }
        Ok(VertexOrdering(perm))
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering((0..n).collect())
    }

    /// Parses 1-based labels separated by commas and/or whitespace.
    pub fn parse_one_based(text: &str) -> Result<Self, GraphError> {
        let perm = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(GraphError::Parse {
                    line: 1,
                    message: format!("bad ordering label `{t}` (labels are 1-based)"),
                }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        VertexOrdering::new(perm)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `position[v]` is the index of vertex `v` in this ordering.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn to_one_based(&self) -> String {
        self.0.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<(), GraphError> {
        if self.len() != n {
            Err(GraphError::OrderingLength {
                expected: n,
                got: self.len(),
            })
        } else {
            Ok(())
        }
    }
}

/// Read access to a 0/1 matrix indexed by ordering positions.
///
/// Implemented by [`AugmentedMatrix`] and by the partial placements used
/// during search, so that the ordering checkers run on both.
pub trait OrderedAdjacency {
    fn size(&self) -> usize;
    /// Entry `(i, j)`; the diagonal reads as one.
    fn entry(&self, i: usize, j: usize) -> bool;
}

/// Augmented adjacency matrix: adjacency of `G` with rows and columns
/// arranged by an ordering and the diagonal forced to one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AugmentedMatrix {
    m: BitMatrix,
}

impl AugmentedMatrix {
    /// `a[i][j] = 1` iff `i == j` or `{σ[i], σ[j]}` is an edge of `g`.
    pub fn new(g: &Graph, ordering: &VertexOrdering) -> Result<Self, GraphError> {
        ordering.check_len(g.n())?;
        let n = g.n();
        let perm = ordering.as_slice();
        let mut m = BitMatrix::new(n);
        for i in 0..n {
            m.set_sym(i, i, true);
            for j in (i + 1)..n {
                if g.has_edge(perm[i], perm[j]) {
                    m.set_sym(i, j, true);
                }
            }
        }
        Ok(AugmentedMatrix { m })
    }

    pub fn identity_order(g: &Graph) -> Self {
        AugmentedMatrix::new(g, &VertexOrdering::identity(g.n())).expect("identity ordering has matching length")
    }

    /// Builds a matrix from rows of `0`/`1` characters (whitespace ignored).
    pub fn from_rows(rows: &[&str]) -> Result<Self, GraphError> {
        let n = rows.len();
        let cells: Vec<Vec<bool>> = rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(GraphError::Parse {
                            line: r + 1,
                            message: format!("unexpected matrix character `{c}`"),
                        }),
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        let mut m = BitMatrix::new(n);
        for i in 0..n {
            if cells[i].len() != n {
                return Err(GraphError::Parse {
                    line: i + 1,
                    message: format!("row has {} entries, expected {n}", cells[i].len()),
                });
            }
            if !cells[i][i] {
                return Err(GraphError::NotAugmented { row: i, col: i });
            }
            for (j, &cell) in cells[i].iter().enumerate() {
                if cell != cells[j].get(i).copied().unwrap_or(false) {
                    return Err(GraphError::NotAugmented { row: i, col: j });
                }
                if cell {
                    m.set_sym(i, j, true);
                }
            }
        }
        Ok(AugmentedMatrix { m })
    }

    pub fn n(&self) -> usize {
        self.m.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.m.get(i, j)
    }

    /// The graph whose vertex `i` is ordering position `i`.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in (i + 1)..n {
                if self.get(i, j) {
                    g.adj.set_sym(i, j, true);
                }
            }
        }
        g
    }

    /// First column holding a one in row `i`.
    pub fn first_one(&self, i: usize) -> usize {
        (0..self.n()).find(|&j| self.get(i, j)).expect("diagonal is one")
    }

    /// Last column holding a one in row `i`.
    pub fn last_one(&self, i: usize) -> usize {
        (0..self.n()).rev().find(|&j| self.get(i, j)).expect("diagonal is one")
    }
}

impl OrderedAdjacency for AugmentedMatrix {
    fn size(&self) -> usize {
        self.n()
    }

    #[inline]
    fn entry(&self, i: usize, j: usize) -> bool {
        self.get(i, j)
    }
}

impl fmt::Debug for AugmentedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "AugmentedMatrix {{")?;
        for i in 0..self.n() {
            let row: String = (0..self.n()).map(|j| if self.get(i, j) { '1' } else { '0' }).collect();
            writeln!(f, "  {row}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_single_edge() {
        let g = Graph::parse("n 2\n0 1").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn parse_edgeless() {
        let g = Graph::parse("n 3").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_c4_matches_generator() {
        let g = Graph::parse("n 4\n0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!(g, make_cycle(4).unwrap());
    }

    #[test]
    fn parse_collapses_duplicates_and_skips_comments() {
        let g = Graph::parse("# c\n\nn 3\n0 1\n1 0\n0 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let cases = [
            ("n 3\n0 1\n0 3", 3),
            ("n 3\n1 1", 2),
            ("n 3\n0 x", 2),
            ("n 3\n0 1 2", 2),
            ("m 3", 1),
        ];
        for (text, line) in cases {
            match Graph::parse(text) {
                Err(GraphError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(Graph::parse("# only a comment").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = make_wheel(5).unwrap();
        assert_eq!(Graph::parse(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn wheel_four_has_eight_edges() {
        let w = make_wheel(4).unwrap();
        assert_eq!(w.n(), 5);
        assert_eq!(w.edge_count(), 8);
        assert_eq!(w.degree(0), 4);
    }

    #[test]
    fn complement_of_c6() {
        let g = make_cycle(6).unwrap().complement();
        let mut expected: Vec<(usize, usize)> = Vec::new();
        for u in 0..6 {
            for v in (u + 1)..6 {
                let d = (v - u).min(6 - (v - u));
                if d >= 2 {
                    expected.push((u, v));
                }
            }
        }
        assert_eq!(expected.len(), 9);
        assert_eq!(g.edges().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn caterpillar_shape() {
        let g = make_caterpillar(&[2, 0, 1]).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![1, 3, 4]);
        assert_eq!(g.neighbors(2).collect::<Vec<_>>(), vec![1, 5]);
    }

    #[test]
    fn generators_reject_small_sizes() {
        assert!(make_cycle(2).is_err());
        assert!(make_wheel(2).is_err());
        assert!(make_complete(0).is_err());
        assert!(make_complete_bipartite(0, 3).is_err());
        assert!(make_caterpillar(&[]).is_err());
    }

    #[test]
    fn complete_bipartite_sides() {
        let g = make_complete_bipartite(2, 3).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(!g.has_edge(0, 1));
        assert!(!g.has_edge(2, 4));
        assert!(g.has_edge(1, 4));
    }

    #[test]
    fn augmented_matrix_cases() {
        let empty = Graph::empty(4);
        let a = AugmentedMatrix::new(&empty, &VertexOrdering::new(vec![2, 0, 3, 1]).unwrap()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a.get(i, j), i == j);
            }
        }
        let k3 = make_complete(3).unwrap();
        let a = AugmentedMatrix::new(&k3, &VertexOrdering::new(vec![1, 2, 0]).unwrap()).unwrap();
        assert!((0..3).all(|i| (0..3).all(|j| a.get(i, j))));
        assert!(matches!(
            AugmentedMatrix::new(&k3, &VertexOrdering::identity(2)),
            Err(GraphError::OrderingLength { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn augmented_follows_ordering() {
        let p3 = make_path(3).unwrap();
        let sigma = VertexOrdering::new(vec![0, 2, 1]).unwrap();
        let a = AugmentedMatrix::new(&p3, &sigma).unwrap();
        assert!(!a.get(0, 1));
        assert!(a.get(0, 2));
        assert!(a.get(1, 2));
        assert_eq!(a.to_graph(), p3.permuted(&sigma).unwrap());
    }

    #[test]
    fn from_rows_validates() {
        assert!(AugmentedMatrix::from_rows(&["11", "11"]).is_ok());
        assert!(AugmentedMatrix::from_rows(&["10", "11"]).is_err());
        assert!(AugmentedMatrix::from_rows(&["01", "11"]).is_err());
        assert!(AugmentedMatrix::from_rows(&["1", "11"]).is_err());
    }

    #[test]
    fn ordering_validation() {
        assert!(VertexOrdering::new(vec![0, 0]).is_err());
        assert!(VertexOrdering::new(vec![1, 2]).is_err());
        let o = VertexOrdering::parse_one_based("2, 1 3").unwrap();
        assert_eq!(o.as_slice(), &[1, 0, 2]);
        assert_eq!(o.positions(), vec![1, 0, 2]);
        assert_eq!(o.to_one_based(), "2 1 3");
        assert!(VertexOrdering::parse_one_based("0 1").is_err());
    }

    #[test]
    fn induced_subgraph_errors() {
        let g = make_cycle(4).unwrap();
        assert!(g.induced_subgraph(&[0, 0]).is_err());
        assert!(g.induced_subgraph(&[4]).is_err());
        let h = g.induced_subgraph(&[0, 2, 1]).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn wide_graphs_use_multiple_words() {
        let g = make_cycle(130).unwrap();
        assert!(g.has_edge(129, 0));
        assert!(g.has_edge(64, 65));
        assert!(!g.has_edge(63, 65));
        assert_eq!(g.edge_count(), 130);
        assert_eq!(g.complement().complement(), g);
    }
}
