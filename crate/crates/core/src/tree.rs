//! Spanning trees of Q_n: construction from a connected dominating set,
//! independent verification, and exhaustive maximum-leaf search for tiny n.

use std::collections::VecDeque;
use std::fmt;

use crate::cube::{check_dim, neighbor_iter, order, CubeEdge, Vertex, VertexSet};
use crate::domination::is_connected_dominating;
use crate::error::{CubeError, Result};
use crate::union_find::UnionFind;

/// A spanning tree of Q_n given by its edge list.
///
/// `backbone` holds the internal vertices (tree degree at least 2) and
/// `leaf_count` the vertices of degree 1; both are derived from `edges` when
/// the tree is built with [`SpanningTree::from_edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    pub n: u32,
    pub edges: Vec<CubeEdge>,
    pub backbone: VertexSet,
    pub leaf_count: u64,
}

fn degrees(n: u32, edges: &[CubeEdge]) -> Result<Vec<u32>> {
    let mut deg = vec![0u32; order(n)];
    for e in edges {
        for x in [e.u, e.v] {
            if !x.in_cube(n) {
                return Err(CubeError::VertexOutOfRange { vertex: x.bits() as u64, n });
            }
            deg[x.index()] += 1;
        }
    }
    Ok(deg)
}

impl SpanningTree {
    /// Wraps an edge list, deriving degrees, leaves and backbone. No tree
    /// property is checked here; see [`verify_tree`].
    pub fn from_edges(n: u32, edges: Vec<CubeEdge>) -> Result<SpanningTree> {
        check_dim(n)?;
        let deg = degrees(n, &edges)?;
        let mut backbone = VertexSet::new(n)?;
        let mut leaf_count = 0;
        for (v, &d) in deg.iter().enumerate() {
            if d == 1 {
                leaf_count += 1;
            } else if d >= 2 {
                backbone.insert(Vertex(v as u32));
            }
        }
        Ok(SpanningTree { n, edges, backbone, leaf_count })
    }

    pub fn vertex_count(&self) -> usize {
        order(self.n)
    }
}

/// Builds a spanning tree whose internal vertices lie inside `cds`.
///
/// The members of `cds` are spanned breadth-first from the smallest member;
/// every other vertex hangs off its numerically smallest neighbour in `cds`.
pub fn tree_from_cds(cds: &VertexSet) -> Result<SpanningTree> {
    if !is_connected_dominating(cds) {
        return Err(CubeError::Precondition(
            "tree_from_cds needs a connected dominating set".into(),
        ));
    }
    let n = cds.dim();
    let mut edges = Vec::with_capacity(order(n) - 1);

    let root = cds.first().expect("nonempty");
    let mut seen = VertexSet::new(n)?;
    seen.insert(root);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for w in neighbor_iter(v, n) {
            if cds.contains(w) && seen.insert(w) {
                edges.push(CubeEdge::ordered(v, w));
                queue.push_back(w);
            }
        }
    }

    for x in 0..order(n) as u32 {
        let x = Vertex(x);
        if cds.contains(x) {
            continue;
        }
        let anchor = neighbor_iter(x, n)
            .filter(|&w| cds.contains(w))
            .min()
            .expect("dominated");
        edges.push(CubeEdge::ordered(x, anchor));
    }
    edges.sort_unstable();
    SpanningTree::from_edges(n, edges)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EdgeCount { found: usize, expected: usize },
    OutOfRange { edge: CubeEdge },
    NotCubeEdge { edge: CubeEdge },
    Unordered { edge: CubeEdge },
    Cycle { edge: CubeEdge },
    Disconnected { components: usize },
    LeafCount { stored: u64, recomputed: u64 },
    Backbone { stored: usize, recomputed: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeCount { found, expected } => {
                write!(f, "edge count {found}, expected {expected}")
            }
            Violation::OutOfRange { edge } => write!(f, "edge {}-{} leaves the cube", edge.u, edge.v),
            Violation::NotCubeEdge { edge } => {
                write!(f, "{}-{} is not a cube edge", edge.u, edge.v)
            }
            Violation::Unordered { edge } => write!(f, "edge {}-{} not stored with u < v", edge.u, edge.v),
            Violation::Cycle { edge } => write!(f, "edge {}-{} closes a cycle", edge.u, edge.v),
            Violation::Disconnected { components } => {
                write!(f, "tree has {components} components")
            }
            Violation::LeafCount { stored, recomputed } => {
                write!(f, "leaf count {stored} stored, {recomputed} recomputed")
            }
            Violation::Backbone { stored, recomputed } => {
                write!(f, "backbone size {stored} stored, {recomputed} recomputed")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct TreeReport {
    pub violations: Vec<Violation>,
    pub leaf_count: u64,
    pub internal_count: u64,
}

impl TreeReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every spanning-tree property from scratch and lists all violations.
pub fn verify_tree(tree: &SpanningTree) -> TreeReport {
    let n = tree.n;
    let vcount = order(n);
    let mut violations = Vec::new();
    if tree.edges.len() != vcount - 1 {
        violations.push(Violation::EdgeCount { found: tree.edges.len(), expected: vcount - 1 });
    }

    let mut deg = vec![0u32; vcount];
    let mut uf = UnionFind::new(vcount);
    for &edge in &tree.edges {
        if !edge.u.in_cube(n) || !edge.v.in_cube(n) {
            violations.push(Violation::OutOfRange { edge });
            continue;
        }
        if edge.u.distance(edge.v) != 1 {
            violations.push(Violation::NotCubeEdge { edge });
        }
        if edge.u >= edge.v {
            violations.push(Violation::Unordered { edge });
        }
        deg[edge.u.index()] += 1;
        deg[edge.v.index()] += 1;
        if !uf.union(edge.u.bits(), edge.v.bits()) {
            violations.push(Violation::Cycle { edge });
        }
    }
    if uf.components() != 1 {
        violations.push(Violation::Disconnected { components: uf.components() });
    }

    let leaf_count = deg.iter().filter(|&&d| d == 1).count() as u64;
    let internal_count = deg.iter().filter(|&&d| d >= 2).count() as u64;
    if leaf_count != tree.leaf_count {
        violations.push(Violation::LeafCount { stored: tree.leaf_count, recomputed: leaf_count });
    }
    if internal_count as usize != tree.backbone.len() {
        violations.push(Violation::Backbone {
            stored: tree.backbone.len(),
            recomputed: internal_count as usize,
        });
    }
    TreeReport { violations, leaf_count, internal_count }
}

/// Largest dimension accepted by [`max_leaf_bruteforce`].
pub const BRUTEFORCE_MAX_DIM: u32 = 3;

/// L(Q_n) by enumerating every (2^n - 1)-edge subset of E(Q_n).
pub fn max_leaf_bruteforce(n: u32) -> Result<u64> {
    if !(1..=BRUTEFORCE_MAX_DIM).contains(&n) {
        return Err(CubeError::Dimension { n, min: 1, max: BRUTEFORCE_MAX_DIM });
    }
    let vcount = order(n);
    let edges: Vec<(u32, u32)> = (0..vcount as u32)
        .flat_map(|v| (0..n).map(move |i| (v, v ^ (1 << i))))
        .filter(|(a, b)| a < b)
        .collect();
    let need = vcount as u32 - 1;

    let mut best = 0u64;
    for mask in 0u32..(1 << edges.len()) {
        if mask.count_ones() != need {
            continue;
        }
        let mut uf = UnionFind::new(vcount);
        let mut deg = vec![0u32; vcount];
        let mut acyclic = true;
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                acyclic &= uf.union(a, b);
                deg[a as usize] += 1;
                deg[b as usize] += 1;
            }
        }
        // n - 1 edges and no cycle means a spanning tree
        if acyclic {
            best = best.max(deg.iter().filter(|&&d| d == 1).count() as u64);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::gray_code_path;

    fn set(n: u32, bits: &[u32]) -> VertexSet {
        VertexSet::from_bits(n, bits.iter().copied()).unwrap()
    }

    #[test]
    fn tree_from_q3_cds() {
        let t = tree_from_cds(&set(3, &[0b000, 0b001, 0b011, 0b111])).unwrap();
        assert_eq!(t.edges.len(), 7);
        assert_eq!(t.leaf_count, 4);
        assert!(verify_tree(&t).is_valid());
    }

    #[test]
    fn tree_from_whole_square() {
        let t = tree_from_cds(&VertexSet::full(2).unwrap()).unwrap();
        assert_eq!(t.leaf_count, 2);
        assert!(verify_tree(&t).is_valid());
    }

    #[test]
    fn tree_from_cds_rejects_disconnected() {
        assert!(matches!(
            tree_from_cds(&set(3, &[0b000, 0b111])),
            Err(CubeError::Precondition(_))
        ));
    }

    #[test]
    fn gray_path_verifies() {
        let r = verify_tree(&gray_code_path(4).unwrap());
        assert!(r.is_valid());
        assert_eq!(r.leaf_count, 2);
    }

    #[test]
    fn duplicated_edge_is_reported() {
        let mut t = gray_code_path(3).unwrap();
        t.edges[6] = t.edges[0];
        let t = SpanningTree::from_edges(3, t.edges).unwrap();
        let r = verify_tree(&t);
        assert!(!r.is_valid());
        assert!(r.violations.iter().any(|v| matches!(v, Violation::Cycle { .. })));
        assert!(r.violations.iter().any(|v| matches!(v, Violation::Disconnected { .. })));
    }

    #[test]
    fn missing_edge_and_non_cube_edge_are_reported() {
        let mut t = gray_code_path(3).unwrap();
        t.edges.pop();
        t.edges.push(CubeEdge { u: Vertex(0), v: Vertex(3) });
        let r = verify_tree(&t);
        assert!(r.violations.iter().any(|v| matches!(v, Violation::NotCubeEdge { .. })));
        assert!(r.violations.iter().any(|v| matches!(v, Violation::LeafCount { .. })));

        let mut t = gray_code_path(3).unwrap();
        t.edges.pop();
        let r = verify_tree(&t);
        assert!(r.violations.contains(&Violation::EdgeCount { found: 6, expected: 7 }));
    }

    #[test]
    fn bruteforce_small_cubes() {
        assert_eq!(max_leaf_bruteforce(1).unwrap(), 2);
        assert_eq!(max_leaf_bruteforce(2).unwrap(), 2);
        assert_eq!(max_leaf_bruteforce(3).unwrap(), 4);
        assert!(max_leaf_bruteforce(4).is_err());
    }
}
