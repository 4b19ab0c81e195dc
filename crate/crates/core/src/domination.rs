//! Domination checks, counting lower bounds and a greedy baseline.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::cube::{is_connected, neighbor_iter, order, Vertex, VertexSet};
use crate::error::{CubeError, Result};

/// Largest n for which the bounds fit in `u128`.
pub const FORMULA_MAX_DIM: u32 = 127;

/// Every vertex is in `set` or adjacent to a member.
pub fn is_dominating(set: &VertexSet) -> bool {
    set.closed_cover().is_full()
}

pub fn is_connected_dominating(set: &VertexSet) -> bool {
    !set.is_empty() && is_dominating(set) && is_connected(set).unwrap_or(false)
}

/// Counting lower bounds on the domination and connected domination numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationBounds {
    pub n: u32,
    /// ceil(2^n / (n + 1)): a vertex dominates itself and n neighbours.
    pub gamma_lower: u128,
    /// ceil((2^n - 2) / (n - 1)), defined for n >= 2.
    pub gamma_c_lower: Option<u128>,
}

pub fn lower_bounds(n: u32) -> Result<DominationBounds> {
    if !(1..=FORMULA_MAX_DIM).contains(&n) {
        return Err(CubeError::Dimension { n, min: 1, max: FORMULA_MAX_DIM });
    }
    let v = 1u128 << n;
    let n128 = n as u128;
    let gamma_lower = v.div_ceil(n128 + 1);
    // A tree on c vertices uses 2(c - 1) of the nc degree slots, and the
    // remaining slots must reach all 2^n - c outside vertices.
    let gamma_c_lower = (n >= 2).then(|| (v - 2).div_ceil(n128 - 1));
    Ok(DominationBounds { n, gamma_lower, gamma_c_lower })
}

/// Greedy set cover over closed neighbourhoods: repeatedly take the vertex
/// covering the most undominated vertices, smallest vertex on ties.
pub fn greedy_dominating(n: u32) -> Result<VertexSet> {
    let mut chosen = VertexSet::new(n)?;
    let mut covered = VertexSet::new(n)?;
    let mut gain = vec![n + 1; order(n)];
    let mut heap: BinaryHeap<(u32, Reverse<u32>)> =
        (0..order(n) as u32).map(|v| (n + 1, Reverse(v))).collect();
    let mut remaining = order(n);

    while remaining > 0 {
        let (g, Reverse(v)) = heap.pop().expect("uncovered vertices remain");
        let v = Vertex(v);
        let current = gain[v.index()];
        if g != current {
            if current > 0 {
                heap.push((current, Reverse(v.bits())));
            }
            continue;
        }
        chosen.insert(v);
        for x in std::iter::once(v).chain(neighbor_iter(v, n)) {
            if covered.insert(x) {
                remaining -= 1;
                for y in std::iter::once(x).chain(neighbor_iter(x, n)) {
                    gain[y.index()] -= 1;
                }
            }
        }
    }
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(n: u32, bits: &[u32]) -> VertexSet {
        VertexSet::from_bits(n, bits.iter().copied()).unwrap()
    }

    fn naive_dominating(s: &VertexSet) -> bool {
        let n = s.dim();
        (0..order(n) as u32).map(Vertex).all(|v| {
            s.contains(v) || (0..n).any(|i| s.contains(v.flip(i)))
        })
    }

    #[test]
    fn dominating_examples() {
        assert!(is_dominating(&set(3, &[0b000, 0b111])));
        assert!(!is_dominating(&set(3, &[0b000])));
        assert!(is_dominating(&VertexSet::full(5).unwrap()));
        assert!(!is_dominating(&VertexSet::new(2).unwrap()));
    }

    #[test]
    fn connected_dominating_examples() {
        assert!(is_connected_dominating(&set(2, &[0b00, 0b01])));
        assert!(!is_connected_dominating(&set(3, &[0b000, 0b111])));
        assert!(is_connected_dominating(&set(3, &[0b000, 0b001, 0b011, 0b111])));
        assert!(!is_connected_dominating(&VertexSet::new(3).unwrap()));
    }

    #[test]
    fn bounds_examples() {
        let b3 = lower_bounds(3).unwrap();
        assert_eq!((b3.gamma_lower, b3.gamma_c_lower), (2, Some(3)));
        let b4 = lower_bounds(4).unwrap();
        assert_eq!((b4.gamma_lower, b4.gamma_c_lower), (4, Some(5)));
        assert_eq!(lower_bounds(7).unwrap().gamma_lower, 16);
        assert_eq!(lower_bounds(1).unwrap().gamma_c_lower, None);
        assert!(lower_bounds(0).is_err());
        assert!(lower_bounds(128).is_err());
    }

    #[test]
    fn bounds_are_ordered() {
        for n in 2..=100 {
            let b = lower_bounds(n).unwrap();
            let c = b.gamma_c_lower.unwrap();
            assert!(c >= b.gamma_lower, "n={n}");
            assert!(c >= (1u128 << n).div_ceil(n as u128), "n={n}");
        }
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_dominating(1).unwrap(), set(1, &[0]));
        let g3 = greedy_dominating(3).unwrap();
        assert!(is_dominating(&g3));
        assert!(g3.len() <= 4);
        for n in 1..=12 {
            assert!(is_dominating(&greedy_dominating(n).unwrap()), "n={n}");
        }
    }

    proptest! {
        #[test]
        fn word_parallel_matches_naive(n in 1u32..=8, bits in proptest::collection::vec(any::<u32>(), 0..40)) {
            let mask = (1u32 << n) - 1;
            let s = VertexSet::from_bits(n, bits.into_iter().map(|b| b & mask)).unwrap();
            prop_assert_eq!(is_dominating(&s), naive_dominating(&s));
        }
    }
}
