//! Binary Hamming codes of length N = 2^k - 1 and the perfect star partition
//! of Q_N by their codewords.
//!
//! The generator has N - k rows. Row i has coordinate i + 1 set inside the
//! leading identity block; its trailing k coordinates carry the i-th k-bit
//! value of weight at least 2, in increasing integer order.

use crate::cube::{check_dim, neighbor_iter, order, Vertex, VertexSet};
use crate::error::{CubeError, Result};

/// Largest k with N = 2^k - 1 representable in a `Vertex`.
pub const HAMMING_MAX_K: u32 = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HammingCode {
    pub k: u32,
    /// Code length N = 2^k - 1.
    pub length: u32,
    pub generator_rows: Vec<Vertex>,
}

/// Length of the Hamming code with parameter k.
pub fn hamming_length(k: u32) -> u32 {
    (1u32 << k) - 1
}

/// Number of codewords 2^(N - k), for any k < 8.
pub fn hamming_codeword_count(k: u32) -> u128 {
    1u128 << (hamming_length(k) - k)
}

/// If n = 2^k - 1, returns k.
pub fn hamming_k_for(n: u32) -> Option<u32> {
    let k = (n + 1).trailing_zeros();
    (n >= 1 && hamming_length(k) == n).then_some(k)
}

pub fn build_hamming(k: u32) -> Result<HammingCode> {
    if !(1..=HAMMING_MAX_K).contains(&k) {
        return Err(CubeError::Parameter(format!(
            "Hamming parameter k = {k} outside [1, {HAMMING_MAX_K}]"
        )));
    }
    let length = hamming_length(k);
    let info = length - k;
    let suffixes = (0u32..1 << k).filter(|s| s.count_ones() >= 2);
    let generator_rows: Vec<Vertex> = suffixes
        .enumerate()
        .map(|(i, s)| Vertex((1 << i) | (s << info)))
        .collect();
    debug_assert_eq!(generator_rows.len() as u32, info);
    Ok(HammingCode { k, length, generator_rows })
}

impl HammingCode {
    /// Number of information coordinates N - k.
    pub fn dimension(&self) -> u32 {
        self.length - self.k
    }

    pub fn codeword_count(&self) -> u64 {
        1u64 << self.dimension()
    }

    /// Encodes the information word `m` (low N - k bits) as a codeword.
    pub fn encode(&self, m: u32) -> Vertex {
        self.generator_rows
            .iter()
            .enumerate()
            .filter(|(i, _)| m >> i & 1 == 1)
            .fold(Vertex(0), |acc, (_, r)| Vertex(acc.0 ^ r.0))
    }

    /// Syndrome of `v`: the trailing k coordinates minus those implied by
    /// the leading identity block. Zero exactly for codewords.
    pub fn syndrome(&self, v: Vertex) -> u32 {
        let info = self.dimension();
        let message = v.0 & ((1 << info) - 1);
        (v.0 ^ self.encode(message).0) >> info
    }

    pub fn is_codeword(&self, v: Vertex) -> bool {
        v.in_cube(self.length) && self.syndrome(v) == 0
    }

    /// The full codeword set C as a subset of Q_N.
    pub fn codewords(&self) -> Result<VertexSet> {
        check_dim(self.length).map_err(|_| CubeError::TooLarge {
            n: self.length,
            n_max: crate::cube::MAX_DIM,
        })?;
        VertexSet::from_vertices(self.length, (0..1u32 << self.dimension()).map(|m| self.encode(m)))
    }
}

/// Each vertex of Q_N mapped to the unique codeword within distance 1.
#[derive(Debug, Clone)]
pub struct StarPartition {
    pub code: HammingCode,
    center_of: Vec<u32>,
}

impl StarPartition {
    pub fn center_of(&self, v: Vertex) -> Vertex {
        Vertex(self.center_of[v.index()])
    }

    pub fn centers(&self) -> &[u32] {
        &self.center_of
    }

    /// Members of the star around `center`, the center first.
    pub fn star(&self, center: Vertex) -> Vec<Vertex> {
        let n = self.code.length;
        std::iter::once(center)
            .chain(neighbor_iter(center, n))
            .filter(|&v| self.center_of(v) == center)
            .collect()
    }
}

/// Partitions Q_N into the closed neighbourhoods of the codewords, failing
/// if some vertex is covered zero times or more than once.
pub fn star_partition(code: &HammingCode) -> Result<StarPartition> {
    let n = code.length;
    let words = code.codewords()?;
    let mut hits = vec![0u8; order(n)];
    let mut center_of = vec![0u32; order(n)];
    for c in words.iter() {
        for v in std::iter::once(c).chain(neighbor_iter(c, n)) {
            hits[v.index()] = hits[v.index()].saturating_add(1);
            center_of[v.index()] = c.0;
        }
    }
    if let Some(v) = hits.iter().position(|&h| h != 1) {
        return Err(CubeError::Integrity(format!(
            "vertex {} lies in {} codeword stars",
            Vertex(v as u32).to_text(n),
            hits[v]
        )));
    }
    Ok(StarPartition { code: code.clone(), center_of })
}
