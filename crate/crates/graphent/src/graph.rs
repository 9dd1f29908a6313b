//! Undirected simple graphs: edge-list parsing, named families, and the
//! degree/neighborhood queries the entanglement formula depends on.
//!
//! Vertices are 0-indexed; vertex `i` maps to qubit `q[i]`. Edges are stored
//! as unordered pairs normalized to `(min, max)`, so duplicates and reversed
//! listings collapse to one edge.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// An undirected simple graph: a vertex count plus a set of unordered edges.
///
/// No self-loops, no duplicate edges, all endpoints in range. Immutable after
/// construction, so values can be shared freely across threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Build a graph from an edge iterator, normalizing and deduplicating
    /// unordered pairs.
    pub fn new(n_vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph {
            n_vertices,
            edges: BTreeSet::new(),
        };
        for (i, j) in edges {
            g.insert_edge(i, j)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(Error::Invalid(format!("self-loop at vertex {i}")));
        }
        for v in [i, j] {
            if v >= self.n_vertices {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n_vertices: self.n_vertices,
                });
            }
        }
        self.edges.insert((i.min(j), i.max(j)));
        Ok(())
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized `(i, j)` pairs with `i < j`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n_vertices {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n_vertices: self.n_vertices,
            });
        }
        Ok(())
    }

    /// Number of edges incident to `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|&&(i, j)| i == v || j == v).count())
    }

    /// Vertices adjacent to `v`, sorted ascending. With `closed`, `v` itself
    /// is included.
    pub fn neighborhood(&self, v: usize, closed: bool) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(i, j)| {
                if i == v {
                    Some(j)
                } else if j == v {
                    Some(i)
                } else {
                    None
                }
            })
            .collect();
        if closed {
            out.push(v);
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Canonical edge-list text: a `n <count>` header, then one `i j` line
    /// per edge with `i < j`, sorted lexicographically.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n_vertices);
        for (i, j) in &self.edges {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }
}

/// Parse the edge-list interchange format.
///
/// The first significant line must be a header `n <vertex_count>`; every
/// following line is an edge `i j`. Blank lines and lines starting with `#`
/// are skipped. Reversed and repeated listings of the same pair collapse to
/// a single edge.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match graph {
            None => {
                if tokens.next() != Some("n") {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected header `n <vertex_count>`".into(),
                    });
                }
                let count = parse_token(tokens.next(), line_no, "vertex count")?;
                if tokens.next().is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "trailing tokens after header".into(),
                    });
                }
                graph = Some(Graph {
                    n_vertices: count,
                    edges: BTreeSet::new(),
                });
            }
            Some(ref mut g) => {
                let i = parse_token(tokens.next(), line_no, "edge endpoint")?;
                let j = parse_token(tokens.next(), line_no, "edge endpoint")?;
                if tokens.next().is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected exactly two endpoints per edge line".into(),
                    });
                }
                g.insert_edge(i, j)?;
            }
        }
    }
    graph.ok_or_else(|| Error::Parse {
        line: 1,
        msg: "missing header `n <vertex_count>`".into(),
    })
}

fn parse_token(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse {
        line,
        msg: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("invalid {what} `{tok}`"),
    })
}

/// The graph families used throughout: chains, the 4-vertex claw, complete
/// graphs, cycles, and stars.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Chain,
    Claw,
    Complete,
    Cycle,
    Star,
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            NamedGraph::Chain => "chain",
            NamedGraph::Claw => "claw",
            NamedGraph::Complete => "complete",
            NamedGraph::Cycle => "cycle",
            NamedGraph::Star => "star",
        };
        f.write_str(name)
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chain" => Ok(NamedGraph::Chain),
            "claw" => Ok(NamedGraph::Claw),
            "complete" => Ok(NamedGraph::Complete),
            "cycle" => Ok(NamedGraph::Cycle),
            "star" => Ok(NamedGraph::Star),
            other => Err(Error::Invalid(format!("unknown graph kind `{other}`"))),
        }
    }
}

/// Generate one of the named families on `n` vertices.
///
/// The claw is fixed to 4 vertices with hub 1 and leaves 0, 2, 3; `Star` is
/// the general hub-at-0 variant. Cycles need at least 3 vertices.
pub fn generate_named(kind: NamedGraph, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Invalid("graphs need at least one vertex".into()));
    }
    match kind {
        NamedGraph::Chain => Graph::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))),
        NamedGraph::Claw => {
            if n != 4 {
                return Err(Error::Invalid(format!(
                    "the claw is a 4-vertex graph, got n = {n}"
                )));
            }
            Graph::new(4, [(0, 1), (1, 2), (1, 3)])
        }
        NamedGraph::Complete => {
            Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        NamedGraph::Cycle => {
            if n < 3 {
                return Err(Error::Invalid(format!("cycles need n >= 3, got n = {n}")));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        NamedGraph::Star => Graph::new(n, (1..n).map(|i| (0, i))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_single_edge() {
        let g = parse_edge_list("n 2\n0 1").unwrap();
        assert_eq!(g.n_vertices(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn parse_chain5() {
        let g = parse_edge_list("n 5\n0 1\n1 2\n2 3\n3 4").unwrap();
        assert_eq!(g, generate_named(NamedGraph::Chain, 5).unwrap());
    }

    #[test]
    fn parse_deduplicates_unordered_pairs() {
        let g = parse_edge_list("n 3\n0 1\n1 0").unwrap();
        assert_eq!(g.n_vertices(), 3);
        assert_eq!(g.n_edges(), 1);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let g = parse_edge_list("# claw\n\nn 4\n0 1\n# hub edges\n1 2\n1 3\n").unwrap();
        assert_eq!(g, generate_named(NamedGraph::Claw, 4).unwrap());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_edge_list("n 3\n0 x").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(matches!(
            parse_edge_list("edges 3"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn parse_rejects_out_of_range_and_self_loops() {
        assert!(matches!(
            parse_edge_list("n 3\n0 3"),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 3\n1 1"),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn chain_degrees() {
        let g = generate_named(NamedGraph::Chain, 5).unwrap();
        assert_eq!(g.n_edges(), 4);
        let degrees: Vec<_> = (0..5).map(|v| g.degree(v).unwrap()).collect();
        assert_eq!(degrees, vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn claw_hub_degree() {
        let g = generate_named(NamedGraph::Claw, 4).unwrap();
        assert_eq!(g.degree(1).unwrap(), 3);
        assert_eq!(g.degree(0).unwrap(), 1);
        assert!(generate_named(NamedGraph::Claw, 5).is_err());
    }

    #[test]
    fn complete5() {
        let g = generate_named(NamedGraph::Complete, 5).unwrap();
        assert_eq!(g.n_edges(), 10);
        for v in 0..5 {
            assert_eq!(g.degree(v).unwrap(), 4);
        }
    }

    #[test]
    fn star_and_cycle() {
        let star = generate_named(NamedGraph::Star, 4).unwrap();
        assert_eq!(star.degree(0).unwrap(), 3);
        assert_eq!(star.degree(3).unwrap(), 1);
        let cycle = generate_named(NamedGraph::Cycle, 5).unwrap();
        assert_eq!(cycle.n_edges(), 5);
        for v in 0..5 {
            assert_eq!(cycle.degree(v).unwrap(), 2);
        }
        assert!(generate_named(NamedGraph::Cycle, 2).is_err());
        assert!(generate_named(NamedGraph::Chain, 0).is_err());
    }

    #[test]
    fn isolated_vertex_degree() {
        let g = Graph::new(1, []).unwrap();
        assert_eq!(g.degree(0).unwrap(), 0);
        assert!(matches!(
            g.degree(1),
            Err(Error::VertexOutOfRange { vertex: 1, .. })
        ));
    }

    #[test]
    fn neighborhoods() {
        let chain = generate_named(NamedGraph::Chain, 5).unwrap();
        assert_eq!(chain.neighborhood(2, false).unwrap(), vec![1, 3]);
        let claw = generate_named(NamedGraph::Claw, 4).unwrap();
        assert_eq!(claw.neighborhood(1, true).unwrap(), vec![0, 1, 2, 3]);
        let empty = Graph::new(3, []).unwrap();
        assert_eq!(empty.neighborhood(1, false).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn serialization_fixture() {
        let g = generate_named(NamedGraph::Chain, 5).unwrap();
        assert_eq!(g.to_edge_list(), "n 5\n0 1\n1 2\n2 3\n3 4\n");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (1usize..12).prop_flat_map(|n| {
                let edge = (0..n, 0..n).prop_filter_map("self-loop", |(i, j)| {
                    (i != j).then_some((i, j))
                });
                proptest::collection::vec(edge, 0..30)
                    .prop_map(move |edges| Graph::new(n, edges).unwrap())
            })
        }

        proptest! {
            #[test]
            fn degree_sum_is_twice_edge_count(g in arb_graph()) {
                let total: usize = (0..g.n_vertices()).map(|v| g.degree(v).unwrap()).sum();
                prop_assert_eq!(total, 2 * g.n_edges());
            }

            #[test]
            fn edge_list_round_trips(g in arb_graph()) {
                let parsed = parse_edge_list(&g.to_edge_list()).unwrap();
                prop_assert_eq!(parsed, g);
            }

            #[test]
            fn degree_matches_open_neighborhood(g in arb_graph()) {
                for v in 0..g.n_vertices() {
                    prop_assert_eq!(g.degree(v).unwrap(), g.neighborhood(v, false).unwrap().len());
                }
            }

            #[test]
            fn parser_never_panics(text in "\\PC*") {
                let _ = parse_edge_list(&text);
            }
        }
    }
}
