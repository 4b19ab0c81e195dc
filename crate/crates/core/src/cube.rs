//! Vertices, vertex sets and adjacency of the hypercube Q_n.
//!
//! A vertex of Q_n is an n-bit string a_1 ... a_n stored as an integer whose
//! bit i - 1 holds coordinate a_i, so coordinate 1 is the least-significant
//! bit. The text form prints coordinate n first, which makes the string read
//! as the ordinary binary representation of the integer.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CubeError, Result};
use crate::tree::SpanningTree;

/// Hard ceiling on dimensions that can be held as explicit sets (2^30 bits).
pub const MAX_DIM: u32 = 30;

/// Default cap on explicit constructions; larger dimensions get formula-only
/// reports unless the cap is raised.
pub const DEFAULT_NMAX: u32 = 24;

/// Checks `1 <= n <= MAX_DIM`.
pub fn check_dim(n: u32) -> Result<()> {
    if (1..=MAX_DIM).contains(&n) {
        Ok(())
    } else {
        Err(CubeError::Dimension { n, min: 1, max: MAX_DIM })
    }
}

/// Number of vertices of Q_n.
#[inline]
pub fn order(n: u32) -> usize {
    1usize << n
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex(pub u32);

impl Vertex {
    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Flips coordinate `i + 1`.
    #[inline]
    pub fn flip(self, i: u32) -> Vertex {
        Vertex(self.0 ^ (1 << i))
    }

    #[inline]
    pub fn distance(self, other: Vertex) -> u32 {
        (self.0 ^ other.0).count_ones()
    }

    #[inline]
    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    pub fn in_cube(self, n: u32) -> bool {
        n >= 32 || (self.0 >> n) == 0
    }

    fn check(self, n: u32) -> Result<()> {
        if self.in_cube(n) {
            Ok(())
        } else {
            Err(CubeError::VertexOutOfRange { vertex: self.0 as u64, n })
        }
    }

    /// Text form: `n` characters, coordinate n leftmost.
    pub fn to_text(self, n: u32) -> String {
        format!("{:0width$b}", self.0, width = n as usize)
    }

    /// Parses the text form produced by [`Vertex::to_text`].
    pub fn parse(s: &str, n: u32) -> std::result::Result<Vertex, String> {
        if s.len() != n as usize {
            return Err(format!("vertex {s:?} has length {}, expected {n}", s.len()));
        }
        if !s.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(format!("vertex {s:?} contains characters other than 0 and 1"));
        }
        u32::from_str_radix(s, 2)
            .map(Vertex)
            .map_err(|e| format!("vertex {s:?}: {e}"))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An edge of Q_n, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CubeEdge {
    pub u: Vertex,
    pub v: Vertex,
}

impl CubeEdge {
    pub fn new(a: Vertex, b: Vertex) -> Result<CubeEdge> {
        if a.distance(b) != 1 {
            return Err(CubeError::Precondition(format!(
                "{a} and {b} are not adjacent in the cube"
            )));
        }
        Ok(CubeEdge::ordered(a, b))
    }

    /// Orders the endpoints without checking adjacency.
    pub(crate) fn ordered(a: Vertex, b: Vertex) -> CubeEdge {
        if a < b {
            CubeEdge { u: a, v: b }
        } else {
            CubeEdge { u: b, v: a }
        }
    }

    /// The coordinate (0-based bit) along which the edge runs, if it is a cube edge.
    pub fn direction(&self) -> Option<u32> {
        let x = self.u.0 ^ self.v.0;
        (x.count_ones() == 1).then(|| x.trailing_zeros())
    }
}

/// Positions whose bit `i` is clear, for in-word flips along directions 0..6.
const IN_WORD_MASK: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

/// A subset of V(Q_n) as a bitset of length 2^n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: u32,
    words: Vec<u64>,
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet(Q_{}) {{", self.n)?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v.to_text(self.n))?;
        }
        write!(f, "}}")
    }
}

impl VertexSet {
    pub fn new(n: u32) -> Result<VertexSet> {
        check_dim(n)?;
        let words = order(n).div_ceil(64);
        Ok(VertexSet { n, words: vec![0; words] })
    }

    pub fn full(n: u32) -> Result<VertexSet> {
        let mut s = VertexSet::new(n)?;
        s.words.iter_mut().for_each(|w| *w = !0);
        s.trim();
        Ok(s)
    }

    pub fn from_vertices(n: u32, vertices: impl IntoIterator<Item = Vertex>) -> Result<VertexSet> {
        let mut s = VertexSet::new(n)?;
        for v in vertices {
            v.check(n)?;
            s.insert(v);
        }
        Ok(s)
    }

    pub fn from_bits(n: u32, bits: impl IntoIterator<Item = u32>) -> Result<VertexSet> {
        VertexSet::from_vertices(n, bits.into_iter().map(Vertex))
    }

    fn trim(&mut self) {
        if self.n < 6 {
            self.words[0] &= (1u64 << order(self.n)) - 1;
        }
    }

    #[inline]
    pub fn dim(&self) -> u32 {
        self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        let i = v.index();
        i < order(self.n) && (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    /// Inserts `v`; panics if `v` is outside the cube.
    #[inline]
    pub fn insert(&mut self, v: Vertex) -> bool {
        assert!(v.in_cube(self.n), "vertex {v} outside Q_{}", self.n);
        let i = v.index();
        let bit = 1u64 << (i & 63);
        let was = self.words[i >> 6] & bit != 0;
        self.words[i >> 6] |= bit;
        !was
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) -> bool {
        let i = v.index();
        if i >= order(self.n) {
            return false;
        }
        let bit = 1u64 << (i & 63);
        let was = self.words[i >> 6] & bit != 0;
        self.words[i >> 6] &= !bit;
        was
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        if self.n < 6 {
            self.words[0] == (1u64 << order(self.n)) - 1
        } else {
            self.words.iter().all(|&w| w == !0)
        }
    }

    pub fn first(&self) -> Option<Vertex> {
        self.iter().next()
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros();
                w &= w - 1;
                Some(Vertex(((wi as u32) << 6) | b))
            })
        })
    }

    fn same_dim(&self, other: &VertexSet) {
        assert_eq!(self.n, other.n, "vertex sets of different dimension");
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.same_dim(other);
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a |= b);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.same_dim(other);
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a &= b);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.same_dim(other);
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a &= !b);
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.same_dim(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// The set of neighbours along direction `i` of members: `{ v ^ 2^i : v in self }`.
    pub fn shifted(&self, i: u32) -> VertexSet {
        assert!(i < self.n);
        let mut out = VertexSet { n: self.n, words: vec![0; self.words.len()] };
        if i < 6 {
            let s = 1u32 << i;
            let m = IN_WORD_MASK[i as usize];
            for (o, &w) in out.words.iter_mut().zip(&self.words) {
                *o = ((w & m) << s) | ((w >> s) & m);
            }
        } else {
            let d = 1usize << (i - 6);
            for (wi, o) in out.words.iter_mut().enumerate() {
                *o = self.words[wi ^ d];
            }
        }
        out
    }

    /// Union of the closed neighbourhoods of all members, computed a word at a time.
    pub fn closed_cover(&self) -> VertexSet {
        let mut cover = self.clone();
        for i in 0..self.n {
            let sh = self.shifted(i);
            cover.union_with(&sh);
        }
        cover
    }

    /// Embeds the set in Q_m, m >= n, with the extra coordinates set to `high`.
    pub fn lift(&self, m: u32, high: u32) -> Result<VertexSet> {
        if m < self.n {
            return Err(CubeError::Parameter(format!("cannot lift Q_{} into Q_{m}", self.n)));
        }
        let mut out = VertexSet::new(m)?;
        let offset = high.checked_shl(self.n).filter(|&h| (h >> self.n) == high);
        let offset = offset.ok_or_else(|| CubeError::Parameter(format!("layer {high} too large")))?;
        for v in self.iter() {
            let w = Vertex(v.0 | offset);
            w.check(m)?;
            out.insert(w);
        }
        Ok(out)
    }
}

/// The n neighbours of `v`, ordered by flipped coordinate.
pub fn neighbors(v: Vertex, n: u32) -> Result<Vec<Vertex>> {
    check_dim(n)?;
    v.check(n)?;
    Ok((0..n).map(|i| v.flip(i)).collect())
}

/// Iterator version of [`neighbors`] without range checks.
#[inline]
pub(crate) fn neighbor_iter(v: Vertex, n: u32) -> impl Iterator<Item = Vertex> {
    (0..n).map(move |i| v.flip(i))
}

pub fn closed_neighborhood(v: Vertex, n: u32) -> Result<VertexSet> {
    let mut s = VertexSet::new(n)?;
    v.check(n)?;
    s.insert(v);
    for w in neighbor_iter(v, n) {
        s.insert(w);
    }
    Ok(s)
}

/// Whether the subgraph of Q_n induced by `set` is connected.
pub fn is_connected(set: &VertexSet) -> Result<bool> {
    let start = set
        .first()
        .ok_or_else(|| CubeError::Parameter("connectivity of the empty set".into()))?;
    let n = set.dim();
    let mut seen = VertexSet::new(n)?;
    seen.insert(start);
    let mut queue = VecDeque::from([start]);
    let mut reached = 1usize;
    while let Some(v) = queue.pop_front() {
        for w in neighbor_iter(v, n) {
            if set.contains(w) && seen.insert(w) {
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    Ok(reached == set.len())
}

/// Binary-reflected Gray code order of the vertices of Q_n.
pub fn gray_code(n: u32) -> Result<Vec<Vertex>> {
    check_dim(n)?;
    Ok((0..order(n) as u32).map(|i| Vertex(i ^ (i >> 1))).collect())
}

/// The Gray-code Hamilton path, a spanning tree with exactly two leaves.
pub fn gray_code_path(n: u32) -> Result<SpanningTree> {
    let order = gray_code(n)?;
    let edges = order
        .windows(2)
        .map(|w| CubeEdge::new(w[0], w[1]))
        .collect::<Result<Vec<_>>>()?;
    SpanningTree::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(n: u32, bits: &[u32]) -> VertexSet {
        VertexSet::from_bits(n, bits.iter().copied()).unwrap()
    }

    #[test]
    fn neighbors_examples() {
        let nb = neighbors(Vertex(0b000), 3).unwrap();
        assert_eq!(nb, vec![Vertex(0b001), Vertex(0b010), Vertex(0b100)]);
        let nb = neighbors(Vertex(0b101), 3).unwrap();
        assert_eq!(nb, vec![Vertex(0b100), Vertex(0b111), Vertex(0b001)]);
        for v in 0..16 {
            let nb = neighbors(Vertex(v), 4).unwrap();
            assert_eq!(nb.len(), 4);
            assert!(nb.iter().all(|w| w.distance(Vertex(v)) == 1));
        }
    }

    #[test]
    fn neighbors_rejects_bad_input() {
        assert!(matches!(neighbors(Vertex(0), 0), Err(CubeError::Dimension { .. })));
        assert!(matches!(neighbors(Vertex(0), MAX_DIM + 1), Err(CubeError::Dimension { .. })));
        assert!(matches!(neighbors(Vertex(8), 3), Err(CubeError::VertexOutOfRange { .. })));
    }

    #[test]
    fn closed_neighborhood_examples() {
        let a = closed_neighborhood(Vertex(0b000), 3).unwrap();
        assert_eq!(a, set(3, &[0b000, 0b001, 0b010, 0b100]));
        let b = closed_neighborhood(Vertex(0b111), 3).unwrap();
        assert_eq!(b, set(3, &[0b111, 0b110, 0b101, 0b011]));
        assert_eq!(a.len(), 4);
        let mut u = a.clone();
        u.union_with(&b);
        assert!(u.is_full());
    }

    #[test]
    fn connectivity_examples() {
        assert!(!is_connected(&set(3, &[0b000, 0b111])).unwrap());
        assert!(is_connected(&set(3, &[0b000, 0b001, 0b011, 0b111])).unwrap());
        for v in 0..8 {
            assert!(is_connected(&set(3, &[v])).unwrap());
        }
        assert!(is_connected(&VertexSet::new(3).unwrap()).is_err());
    }

    #[test]
    fn gray_code_examples() {
        let g: Vec<u32> = gray_code(3).unwrap().into_iter().map(Vertex::bits).collect();
        assert_eq!(g, vec![0b000, 0b001, 0b011, 0b010, 0b110, 0b111, 0b101, 0b100]);
        let p1 = gray_code_path(1).unwrap();
        assert_eq!(p1.edges.len(), 1);
        assert_eq!(p1.leaf_count, 2);
        let p4 = gray_code_path(4).unwrap();
        assert_eq!(p4.edges.len(), 15);
        assert_eq!(p4.leaf_count, 2);
    }

    #[test]
    fn text_form_is_msb_first() {
        assert_eq!(Vertex(0b001).to_text(3), "001");
        assert_eq!(Vertex(0b110).to_text(4), "0110");
        assert_eq!(Vertex::parse("0110", 4), Ok(Vertex(6)));
        assert!(Vertex::parse("011", 4).is_err());
        assert!(Vertex::parse("01a0", 4).is_err());
    }

    #[test]
    fn small_and_large_full_sets() {
        for n in 1..=8 {
            let f = VertexSet::full(n).unwrap();
            assert_eq!(f.len(), order(n));
            assert!(f.is_full());
            assert_eq!(f.closed_cover(), f);
        }
    }

    #[test]
    fn lift_places_copy_in_layer() {
        let s = set(2, &[0b01, 0b10]);
        let l = s.lift(4, 0b11).unwrap();
        assert_eq!(l, set(4, &[0b1101, 0b1110]));
        assert!(s.lift(1, 0).is_err());
    }

    fn connected_by_union_find(s: &VertexSet) -> bool {
        let n = s.dim();
        let mut parent: Vec<usize> = (0..order(n)).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for v in s.iter() {
            for i in 0..n {
                let w = v.flip(i);
                if s.contains(w) {
                    let (a, b) = (find(&mut parent, v.index()), find(&mut parent, w.index()));
                    parent[a] = b;
                }
            }
        }
        let roots: std::collections::BTreeSet<usize> =
            s.iter().map(|v| find(&mut parent, v.index())).collect();
        roots.len() == 1
    }

    fn arb_set() -> impl Strategy<Value = VertexSet> {
        (1u32..=8).prop_flat_map(|n| {
            proptest::collection::vec(0..(1u32 << n), 1..(1usize << n).min(40))
                .prop_map(move |bits| VertexSet::from_bits(n, bits).unwrap())
        })
    }

    proptest! {
        #[test]
        fn bfs_connectivity_matches_union_find(s in arb_set()) {
            prop_assert_eq!(is_connected(&s).unwrap(), connected_by_union_find(&s));
        }

        #[test]
        fn shifted_matches_per_vertex_flip(s in arb_set(), dir in 0u32..8) {
            let dir = dir % s.dim();
            let expect = VertexSet::from_vertices(s.dim(), s.iter().map(|v| v.flip(dir))).unwrap();
            prop_assert_eq!(s.shifted(dir), expect);
        }

        #[test]
        fn closed_neighborhood_has_n_plus_one(n in 1u32..=10, seed in any::<u32>()) {
            let v = Vertex(seed & ((1 << n) - 1));
            prop_assert_eq!(closed_neighborhood(v, n).unwrap().len(), n as usize + 1);
        }
    }
}
