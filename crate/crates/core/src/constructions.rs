//! Constructive upper bounds on γ_c(Q_n): connecting the stars of a
//! dominating set, doubling, and expansion across 2^j layers.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cube::{check_dim, gray_code, neighbor_iter, order, CubeEdge, Vertex, VertexSet, MAX_DIM};
use crate::domination::{is_connected_dominating, is_dominating, lower_bounds, FORMULA_MAX_DIM};
use crate::error::{CubeError, Result};
use crate::hamming::{build_hamming, hamming_k_for, hamming_length};
use crate::tree::{tree_from_cds, verify_tree, SpanningTree};
use crate::union_find::UnionFind;

/// A dominating set with every other vertex hung on one adjacent center.
#[derive(Debug, Clone)]
pub struct StarForest {
    pub n: u32,
    pub centers: VertexSet,
    assignment: Vec<u32>,
}

impl StarForest {
    pub fn center_of(&self, v: Vertex) -> Vertex {
        Vertex(self.assignment[v.index()])
    }

    pub fn component_count(&self) -> usize {
        self.centers.len()
    }

    pub fn star_edges(&self) -> Vec<CubeEdge> {
        self.assignment
            .iter()
            .enumerate()
            .filter(|&(v, &c)| v as u32 != c)
            .map(|(v, &c)| CubeEdge::ordered(Vertex(v as u32), Vertex(c)))
            .collect()
    }
}

/// Assigns each non-center vertex to its numerically smallest adjacent center.
pub fn star_forest(ds: &VertexSet) -> Result<StarForest> {
    if !is_dominating(ds) {
        return Err(CubeError::Precondition("star_forest needs a dominating set".into()));
    }
    let n = ds.dim();
    let assignment = (0..order(n) as u32)
        .map(|v| {
            if ds.contains(Vertex(v)) {
                v
            } else {
                neighbor_iter(Vertex(v), n)
                    .filter(|&w| ds.contains(w))
                    .min()
                    .expect("dominated")
                    .bits()
            }
        })
        .collect();
    Ok(StarForest { n, centers: ds.clone(), assignment })
}

/// Result of joining the stars of a forest into one tree.
#[derive(Debug, Clone)]
pub struct StarConnection {
    /// Centers plus every endpoint of an added edge.
    pub backbone: VertexSet,
    pub added_edges: Vec<CubeEdge>,
}

impl StarConnection {
    /// The spanning tree made of the star edges and the added edges.
    pub fn tree(&self, forest: &StarForest) -> Result<SpanningTree> {
        let mut edges = forest.star_edges();
        edges.extend_from_slice(&self.added_edges);
        edges.sort_unstable();
        SpanningTree::from_edges(forest.n, edges)
    }
}

/// Adds `components - 1` cube edges between stars until the forest is one tree.
///
/// Edges are chosen greedily: an inter-star edge whose endpoints are both
/// already in the backbone beats one with a single backbone endpoint, which
/// beats one with none; within a class the lexicographically smallest (u, v)
/// wins. Every added endpoint joins the backbone.
pub fn connect_stars(forest: &StarForest) -> Result<StarConnection> {
    let n = forest.n;
    let mut backbone = forest.centers.clone();
    let mut uf = UnionFind::new(order(n));
    for (v, &c) in forest.assignment.iter().enumerate() {
        uf.union(v as u32, c);
    }

    let class = |bb: &VertexSet, a: u32, b: u32| -> u8 {
        2 - bb.contains(Vertex(a)) as u8 - bb.contains(Vertex(b)) as u8
    };
    let mut heap = BinaryHeap::new();
    for u in 0..order(n) as u32 {
        for w in neighbor_iter(Vertex(u), n) {
            let w = w.bits();
            if u < w && forest.assignment[u as usize] != forest.assignment[w as usize] {
                heap.push(Reverse((class(&backbone, u, w), u, w)));
            }
        }
    }

    let mut added_edges = Vec::with_capacity(forest.component_count().saturating_sub(1));
    while uf.components() > 1 {
        let Some(Reverse((c, u, w))) = heap.pop() else {
            return Err(CubeError::Integrity("ran out of edges between stars".into()));
        };
        // stale: merged already, or re-queued with a better class
        if uf.same(u, w) || class(&backbone, u, w) != c {
            continue;
        }
        uf.union(u, w);
        added_edges.push(CubeEdge::ordered(Vertex(u), Vertex(w)));
        for x in [u, w] {
            if backbone.insert(Vertex(x)) {
                for y in neighbor_iter(Vertex(x), n) {
                    let y = y.bits();
                    if !uf.same(x, y) {
                        heap.push(Reverse((class(&backbone, x, y), x.min(y), x.max(y))));
                    }
                }
            }
        }
    }
    Ok(StarConnection { backbone, added_edges })
}

/// Two copies of `set` in Q_{n+1}, one on each side of the new coordinate.
pub fn double_set(set: &VertexSet, connected: bool) -> Result<VertexSet> {
    if !is_dominating(set) {
        return Err(CubeError::Precondition("double_set needs a dominating set".into()));
    }
    if connected && !is_connected_dominating(set) {
        return Err(CubeError::Precondition("connected doubling needs a connected set".into()));
    }
    let m = set.dim() + 1;
    let mut out = set.lift(m, 0)?;
    out.union_with(&set.lift(m, 1)?);
    Ok(out)
}

/// Expansion of a dominating set of Q_N into a connected dominating set of
/// Q_{N+j}, together with the spanning tree it induces.
///
/// Layers are indexed by the top j bits. Every layer carries a copy of the
/// stars of `ds`; the 2^j copies of each center are joined along the Gray
/// code path of Q_j, and the stars of layer 0 are joined by [`connect_stars`].
pub fn expand_with_tree(ds: &VertexSet, j: u32) -> Result<(VertexSet, SpanningTree)> {
    if j == 0 {
        return Err(CubeError::Parameter("expansion needs j >= 1".into()));
    }
    let base = ds.dim();
    let n = base + j;
    check_dim(n)?;
    let forest = star_forest(ds)?;
    let joined = connect_stars(&forest)?;

    let layers = 1u32 << j;
    let mut set = joined.backbone.lift(n, 0)?;
    for layer in 1..layers {
        for c in forest.centers.iter() {
            set.insert(Vertex(c.bits() | layer << base));
        }
    }

    let mut edges = Vec::with_capacity(order(n) - 1);
    let star_edges = forest.star_edges();
    for layer in 0..layers {
        let offset = layer << base;
        edges.extend(
            star_edges
                .iter()
                .map(|e| CubeEdge::ordered(Vertex(e.u.bits() | offset), Vertex(e.v.bits() | offset))),
        );
    }
    let path = gray_code(j)?;
    for c in forest.centers.iter() {
        for w in path.windows(2) {
            edges.push(CubeEdge::ordered(
                Vertex(c.bits() | w[0].bits() << base),
                Vertex(c.bits() | w[1].bits() << base),
            ));
        }
    }
    edges.extend_from_slice(&joined.added_edges);
    edges.sort_unstable();
    Ok((set, SpanningTree::from_edges(n, edges)?))
}

/// The connected dominating set produced by [`expand_with_tree`].
pub fn expand(ds: &VertexSet, j: u32) -> Result<VertexSet> {
    expand_with_tree(ds, j).map(|(set, _)| set)
}

/// Upper bound 2^j |C| + 2(|C| - 1) on the expansion of a base set of size |C|.
pub fn expansion_bound(base_size: u128, j: u32) -> u128 {
    (base_size << j) + 2 * (base_size - 1)
}

/// Upper bound 3|C| - 2 on connecting the stars of a dominating set of size |C|.
pub fn star_connection_bound(centers: u128) -> u128 {
    3 * centers - 2
}

/// The best dominating set of Q_n this crate builds: the Hamming code of the
/// largest length 2^k - 1 <= n, doubled n - (2^k - 1) times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DoubledHamming {
    pub n: u32,
    pub k: u32,
    pub doublings: u32,
    pub size: u128,
}

pub fn doubled_hamming(n: u32) -> Result<DoubledHamming> {
    if !(1..=FORMULA_MAX_DIM).contains(&n) {
        return Err(CubeError::Dimension { n, min: 1, max: FORMULA_MAX_DIM });
    }
    let k = 31 - (n + 1).leading_zeros();
    let length = hamming_length(k);
    Ok(DoubledHamming { n, k, doublings: n - length, size: 1u128 << (n - k) })
}

pub fn doubled_hamming_set(n: u32) -> Result<VertexSet> {
    check_dim(n)?;
    let params = doubled_hamming(n)?;
    let mut set = build_hamming(params.k)?.codewords()?;
    for _ in 0..params.doublings {
        set = double_set(&set, false)?;
    }
    Ok(set)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Hamming code stars joined by connecting edges (j = 0).
    Hamming,
    /// A Hamming star-connection set doubled j times.
    Doubling,
    /// A dominating set of Q_N expanded across 2^j layers.
    Expansion,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Hamming => "hamming",
            Method::Doubling => "doubling",
            Method::Expansion => "expansion",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = CubeError;
    fn from_str(s: &str) -> Result<Method> {
        match s {
            "hamming" => Ok(Method::Hamming),
            "doubling" => Ok(Method::Doubling),
            "expansion" => Ok(Method::Expansion),
            _ => Err(CubeError::Parameter(format!("unknown method {s:?}"))),
        }
    }
}

/// A fully resolved construction: Q_n = Q_N x Q_j with a base set on Q_N.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Plan {
    pub n: u32,
    pub method: Method,
    /// Base dimension N.
    pub base_dim: u32,
    pub j: u32,
    /// Set when the base set is exactly the Hamming code of length N = 2^k - 1.
    pub k: Option<u32>,
    /// Size of the base dominating set of Q_N.
    pub base_size: u128,
    pub bound: u128,
}

impl Plan {
    pub fn hamming(n: u32) -> Result<Plan> {
        let k = hamming_k_for(n)
            .ok_or_else(|| CubeError::Parameter(format!("n = {n} is not of the form 2^k - 1")))?;
        let base_size = 1u128 << (n - k);
        Ok(Plan {
            n,
            method: Method::Hamming,
            base_dim: n,
            j: 0,
            k: Some(k),
            base_size,
            bound: star_connection_bound(base_size),
        })
    }

    pub fn doubling(n: u32, k: u32) -> Result<Plan> {
        let base_dim = hamming_length(k);
        if k == 0 || base_dim > n {
            return Err(CubeError::Parameter(format!("no Hamming base with k = {k} fits Q_{n}")));
        }
        let mut plan = Plan::hamming(base_dim)?;
        plan.n = n;
        plan.method = Method::Doubling;
        plan.j = n - base_dim;
        plan.bound <<= plan.j;
        Ok(plan)
    }

    /// Expansion of the doubled-Hamming base of Q_{n-j}.
    pub fn expansion(n: u32, j: u32) -> Result<Plan> {
        if j == 0 || j >= n {
            return Err(CubeError::Parameter(format!("expansion of Q_{n} needs 1 <= j < n, got {j}")));
        }
        let base_dim = n - j;
        let base = doubled_hamming(base_dim)?;
        Ok(Plan {
            n,
            method: Method::Expansion,
            base_dim,
            j,
            k: (base.doublings == 0).then_some(base.k),
            base_size: base.size,
            bound: expansion_bound(base.size, j),
        })
    }

    /// Size of the dominating set behind the construction, measured in Q_n.
    pub fn ds_size(&self) -> u128 {
        match self.method {
            Method::Doubling => self.base_size << self.j,
            _ => self.base_size,
        }
    }
}

/// Every expansion plan for Q_n plus the direct Hamming plan when n = 2^k - 1.
pub fn candidate_plans(n: u32) -> Result<Vec<Plan>> {
    if !(2..=FORMULA_MAX_DIM).contains(&n) {
        return Err(CubeError::Dimension { n, min: 2, max: FORMULA_MAX_DIM });
    }
    let mut plans = Vec::new();
    if let Ok(p) = Plan::hamming(n) {
        plans.push(p);
    }
    for j in 1..n {
        plans.push(Plan::expansion(n, j)?);
    }
    Ok(plans)
}

/// Minimum bound over [`candidate_plans`], smaller j on ties.
pub fn best_plan(n: u32) -> Result<Plan> {
    let plans = candidate_plans(n)?;
    Ok(*plans
        .iter()
        .min_by_key(|p| (p.bound, p.j))
        .expect("at least one plan"))
}

fn best_expansion_plan(n: u32) -> Result<Plan> {
    let plans = candidate_plans(n)?;
    plans
        .into_iter()
        .filter(|p| p.method == Method::Expansion)
        .min_by_key(|p| (p.bound, p.j))
        .ok_or_else(|| CubeError::Parameter(format!("no expansion plan for Q_{n}")))
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructionReport {
    pub n: u32,
    pub method: Method,
    pub base_dim: u32,
    pub j: u32,
    pub k: Option<u32>,
    /// |C|, the base dominating set (in Q_N, or its doubled copy in Q_n for doubling).
    pub ds_size: u128,
    /// Size of the connected dominating set the construction assembles.
    pub set_size: Option<u64>,
    /// Internal vertices of the emitted spanning tree; a connected
    /// dominating set no larger than `set_size`.
    pub cds_size: Option<u64>,
    pub leaf_count: Option<u64>,
    pub bound_value: u128,
    pub gamma_lower: u128,
    pub gamma_c_lower: Option<u128>,
    /// cds_size / (2^n / n), or bound_value / (2^n / n) in formula mode.
    pub ratio: f64,
    pub explicit: bool,
}

impl ConstructionReport {
    /// The best known size: the built backbone, else the formula bound.
    pub fn value(&self) -> u128 {
        self.cds_size.map(u128::from).unwrap_or(self.bound_value)
    }
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub report: ConstructionReport,
    pub set: Option<VertexSet>,
    pub tree: Option<SpanningTree>,
}

/// `value / (2^n / n)` in floating point.
pub fn ratio_to_n(value: u128, n: u32) -> f64 {
    value as f64 * n as f64 / (2f64).powi(n as i32)
}

fn formula_report(plan: &Plan) -> Result<ConstructionReport> {
    let bounds = lower_bounds(plan.n)?;
    Ok(ConstructionReport {
        n: plan.n,
        method: plan.method,
        base_dim: plan.base_dim,
        j: plan.j,
        k: plan.k,
        ds_size: plan.ds_size(),
        set_size: None,
        cds_size: None,
        leaf_count: None,
        bound_value: plan.bound,
        gamma_lower: bounds.gamma_lower,
        gamma_c_lower: bounds.gamma_c_lower,
        ratio: ratio_to_n(plan.bound, plan.n),
        explicit: false,
    })
}

fn build_set_and_tree(plan: &Plan) -> Result<(VertexSet, SpanningTree)> {
    match plan.method {
        Method::Hamming => {
            let code = build_hamming(plan.k.expect("hamming plan has k"))?;
            let forest = star_forest(&code.codewords()?)?;
            let joined = connect_stars(&forest)?;
            let tree = joined.tree(&forest)?;
            Ok((joined.backbone, tree))
        }
        Method::Doubling => {
            let code = build_hamming(plan.k.expect("doubling plan has k"))?;
            let forest = star_forest(&code.codewords()?)?;
            let mut set = connect_stars(&forest)?.backbone;
            for _ in 0..plan.j {
                set = double_set(&set, true)?;
            }
            let tree = tree_from_cds(&set)?;
            Ok((set, tree))
        }
        Method::Expansion => expand_with_tree(&doubled_hamming_set(plan.base_dim)?, plan.j),
    }
}

/// Builds `plan` explicitly and checks the result, or reports the formula
/// bound only when n exceeds `n_max`.
pub fn execute(plan: &Plan, n_max: u32) -> Result<Construction> {
    let mut report = formula_report(plan)?;
    if plan.n > n_max.min(MAX_DIM) {
        return Ok(Construction { report, set: None, tree: None });
    }
    let (set, tree) = build_set_and_tree(plan)?;
    if !is_connected_dominating(&set) {
        return Err(CubeError::Integrity(format!("{} construction is not a CDS", plan.method)));
    }
    let check = verify_tree(&tree);
    if !check.is_valid() {
        return Err(CubeError::Integrity(format!(
            "{} construction emitted an invalid tree: {}",
            plan.method, check.violations[0]
        )));
    }
    if !tree.backbone.is_subset(&set) || set.len() as u128 > plan.bound {
        return Err(CubeError::Integrity(format!(
            "{} construction of size {} exceeds its bound {}",
            plan.method,
            set.len(),
            plan.bound
        )));
    }
    let cds = tree.backbone.len() as u64;
    report.set_size = Some(set.len() as u64);
    report.cds_size = Some(cds);
    report.leaf_count = Some(tree.leaf_count);
    report.ratio = ratio_to_n(cds as u128, plan.n);
    report.explicit = true;
    Ok(Construction { report, set: Some(set), tree: Some(tree) })
}

/// Picks the construction with the smallest bound for Q_n and runs it.
pub fn auto_construct(n: u32, n_max: u32) -> Result<Construction> {
    execute(&best_plan(n)?, n_max)
}

/// Resolves a requested method and optional (k, j) into a plan for Q_n.
pub fn resolve_plan(n: u32, method: Option<Method>, k: Option<u32>, j: Option<u32>) -> Result<Plan> {
    let plan = match method {
        None => best_plan(n)?,
        Some(Method::Hamming) => {
            let plan = Plan::hamming(n)?;
            if k.is_some_and(|k| Some(k) != plan.k) || j.is_some_and(|j| j != 0) {
                return Err(CubeError::Parameter(format!("hamming method on Q_{n} needs k = {:?}, j = 0", plan.k)));
            }
            plan
        }
        Some(Method::Doubling) => {
            let k = match (k, j) {
                (Some(k), _) => k,
                (None, Some(j)) if j < n => hamming_k_for(n - j)
                    .ok_or_else(|| CubeError::Parameter(format!("n - j = {} is not 2^k - 1", n - j)))?,
                (None, _) => doubled_hamming(n)?.k,
            };
            let plan = Plan::doubling(n, k)?;
            if j.is_some_and(|j| j != plan.j) {
                return Err(CubeError::Parameter(format!("k = {k} forces j = {}", plan.j)));
            }
            plan
        }
        Some(Method::Expansion) => match (k, j) {
            (Some(k), j) => {
                let base = hamming_length(k);
                if base >= n {
                    return Err(CubeError::Parameter(format!("2^{k} - 1 >= n = {n} leaves no room to expand")));
                }
                if j.is_some_and(|j| j != n - base) {
                    return Err(CubeError::Parameter(format!("k = {k} forces j = {}", n - base)));
                }
                Plan::expansion(n, n - base)?
            }
            (None, Some(j)) => Plan::expansion(n, j)?,
            (None, None) => best_expansion_plan(n)?,
        },
    };
    Ok(plan)
}

/// For n = 2^k - 1: the direct Hamming star connection and the expansion of
/// the Hamming code of length 2^(k-1) - 1 by j = 2^(k-1), in that order.
pub fn hamming_cds_for_code_dim(k: u32, n_max: u32) -> Result<(Construction, Construction)> {
    if k < 2 {
        return Err(CubeError::Parameter("the expansion comparison needs k >= 2".into()));
    }
    let n = hamming_length(k);
    let direct = execute(&Plan::hamming(n)?, n_max)?;
    let expanded = execute(&Plan::expansion(n, 1 << (k - 1))?, n_max)?;
    Ok((direct, expanded))
}
