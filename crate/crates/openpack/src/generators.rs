//! Deterministic instance generators: the extremal families G_r and H_r,
//! standard named graphs, clique blowups, and seeded random instances.
//!
//! Randomness comes exclusively from [`SplitMix64`], a fixed, documented
//! mixing function, so every generator is byte-for-byte reproducible from
//! its seed on any platform.

use crate::graph::{Graph, SplitPartition};
use crate::oracle::{HittingSetInstance, RdmInstance};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("parameter {name} = {got} outside supported range")]
    BadParameter { name: &'static str, got: usize },
    #[error("degree range [{lo}, {hi}] infeasible for clique of size {c}")]
    BadDegreeRange { lo: usize, hi: usize, c: usize },
    #[error("cannot sample {want} distinct objects from a space of {have}")]
    SpaceTooSmall { want: usize, have: usize },
    #[error("blowup sizes must all be positive")]
    ZeroBlowupSize,
    #[error("blowup sizes length {got} does not match vertex count {n}")]
    SizesLengthMismatch { got: usize, n: usize },
}

/// SplitMix64: the output stream is fully specified by these constants, so
/// seeded instances are portable across platforms and releases.
///
/// state += 0x9E3779B97F4A7C15;
/// z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough draw in `0..n` by reduction modulo n. The modulo bias
    /// is below 2^-49 for every n used here; portability of the exact
    /// stream matters more than removing it.
    pub fn next_below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    /// Uniform draw in [0, 1) with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// A uniformly random k-subset of `0..n`, sorted (partial Fisher–Yates).
    pub fn sample_subset(&mut self, n: usize, k: usize) -> Vec<usize> {
        assert!(k <= n);
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = i + self.next_below(n - i);
            pool.swap(i, j);
        }
        let mut out = pool[..k].to_vec();
        out.sort_unstable();
        out
    }
}

pub fn gen_path(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::BadParameter { name: "n", got: n });
    }
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::new(n, &edges).expect("path edges in range"))
}

pub fn gen_cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::BadParameter { name: "n", got: n });
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges).expect("cycle edges in range"))
}

pub fn gen_complete(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::BadParameter { name: "n", got: n });
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(Graph::new(n, &edges).expect("complete edges in range"))
}

/// The subdivided star G_r on 3r+2 vertices: r legs x_i–y_i–z_i hanging
/// from a hub u, plus a pendant v on the hub. Vertex layout: leg i
/// (1-based) occupies indices 3(i−1), 3(i−1)+1, 3(i−1)+2 as x_i, y_i, z_i;
/// u = 3r and v = 3r+1. Both its open packing and total domination numbers
/// equal 2r+1.
pub fn gen_gr(r: usize) -> Result<Graph, GenError> {
    if r < 1 {
        return Err(GenError::BadParameter { name: "r", got: r });
    }
    let u = 3 * r;
    let v = u + 1;
    let mut edges = Vec::with_capacity(3 * r + 1);
    let mut labels = Vec::with_capacity(3 * r + 2);
    for i in 0..r {
        let (x, y, z) = (3 * i, 3 * i + 1, 3 * i + 2);
        edges.push((x, y));
        edges.push((y, z));
        edges.push((z, u));
        labels.push(format!("x_{}", i + 1));
        labels.push(format!("y_{}", i + 1));
        labels.push(format!("z_{}", i + 1));
    }
    edges.push((u, v));
    labels.push("u".to_string());
    labels.push("v".to_string());
    Ok(Graph::new(3 * r + 2, &edges)
        .expect("edges in range")
        .with_labels(labels))
}

/// The family H_r on 3(r−2) vertices (r ≥ 3): r−2 paths x_i–y_i–z_i with
/// the z-layer completed to a clique. rK_1-free, with ρ° = 2(r−2).
pub fn gen_hr(r: usize) -> Result<Graph, GenError> {
    if r < 3 {
        return Err(GenError::BadParameter { name: "r", got: r });
    }
    let legs = r - 2;
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    for i in 0..legs {
        let (x, y, z) = (3 * i, 3 * i + 1, 3 * i + 2);
        edges.push((x, y));
        edges.push((y, z));
        labels.push(format!("x_{}", i + 1));
        labels.push(format!("y_{}", i + 1));
        labels.push(format!("z_{}", i + 1));
    }
    for i in 0..legs {
        for j in i + 1..legs {
            edges.push((3 * i + 2, 3 * j + 2));
        }
    }
    Ok(Graph::new(3 * legs, &edges)
        .expect("edges in range")
        .with_labels(labels))
}

/// Replaces each vertex v of `g` by a clique of `sizes[v]` vertices;
/// cliques of adjacent originals are fully joined (every replacement
/// vertex inherits all of its original's adjacencies).
pub fn blowup(g: &Graph, sizes: &[usize]) -> Result<Graph, GenError> {
    if sizes.len() != g.n() {
        return Err(GenError::SizesLengthMismatch {
            got: sizes.len(),
            n: g.n(),
        });
    }
    if sizes.contains(&0) {
        return Err(GenError::ZeroBlowupSize);
    }
    let mut start = vec![0usize; g.n()];
    let mut total = 0;
    for v in g.vertices() {
        start[v] = total;
        total += sizes[v];
    }
    let mut edges = Vec::new();
    for v in g.vertices() {
        for a in 0..sizes[v] {
            for b in a + 1..sizes[v] {
                edges.push((start[v] + a, start[v] + b));
            }
        }
    }
    for (u, v) in g.edges() {
        for a in 0..sizes[u] {
            for b in 0..sizes[v] {
                edges.push((start[u] + a, start[v] + b));
            }
        }
    }
    Ok(Graph::new(total, &edges).expect("edges in range"))
}

/// Erdős–Rényi-style sample: each of the C(n,2) edge slots is included
/// independently with probability p, in a fixed slot order.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p));
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("edges in range")
}

/// Random split graph: a clique on `c_size` vertices (indices 0..c_size)
/// and `i_size` independent vertices after it, each wired to a uniformly
/// random set of clique neighbors of uniformly random size in `deg_range`.
pub fn gen_random_split(
    c_size: usize,
    i_size: usize,
    deg_range: (usize, usize),
    seed: u64,
) -> Result<(Graph, SplitPartition), GenError> {
    let (lo, hi) = deg_range;
    if lo > hi || hi > c_size {
        return Err(GenError::BadDegreeRange { lo, hi, c: c_size });
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..c_size {
        for v in u + 1..c_size {
            edges.push((u, v));
        }
    }
    for i in 0..i_size {
        let deg = lo + rng.next_below(hi - lo + 1);
        for nbr in rng.sample_subset(c_size, deg) {
            edges.push((c_size + i, nbr));
        }
    }
    let g = Graph::new(c_size + i_size, &edges).expect("edges in range");
    let part = SplitPartition {
        clique: (0..c_size).collect(),
        independent: (c_size..c_size + i_size).collect(),
    };
    Ok((g, part))
}

/// Uniformly sampled distinct r-subsets of a universe.
pub fn gen_random_hitting_set(
    u_size: usize,
    set_count: usize,
    r: usize,
    seed: u64,
) -> Result<HittingSetInstance, GenError> {
    if r > u_size || r == 0 {
        return Err(GenError::BadParameter { name: "r", got: r });
    }
    let space = binomial(u_size, r);
    if set_count > space {
        return Err(GenError::SpaceTooSmall {
            want: set_count,
            have: space,
        });
    }
    let mut rng = SplitMix64::new(seed);
    let mut sets: Vec<Vec<usize>> = Vec::with_capacity(set_count);
    while sets.len() < set_count {
        let candidate = rng.sample_subset(u_size, r);
        if !sets.contains(&candidate) {
            sets.push(candidate);
        }
    }
    Ok(HittingSetInstance::new(u_size, r, sets).expect("generated sets are well-formed"))
}

/// Uniformly sampled distinct r-tuples over coordinate domains of size q.
pub fn gen_random_rdm(
    q: usize,
    r: usize,
    tuple_count: usize,
    seed: u64,
) -> Result<RdmInstance, GenError> {
    if tuple_count == 0 {
        return Err(GenError::BadParameter {
            name: "tuple_count",
            got: tuple_count,
        });
    }
    if q == 0 || r == 0 {
        return Err(GenError::BadParameter { name: "q·r", got: q * r });
    }
    let space = (q as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    if tuple_count as u128 > space {
        return Err(GenError::SpaceTooSmall {
            want: tuple_count,
            have: space.min(usize::MAX as u128) as usize,
        });
    }
    let mut rng = SplitMix64::new(seed);
    let mut tuples: Vec<Vec<usize>> = Vec::with_capacity(tuple_count);
    while tuples.len() < tuple_count {
        let candidate: Vec<usize> = (0..r).map(|_| rng.next_below(q)).collect();
        if !tuples.contains(&candidate) {
            tuples.push(candidate);
        }
    }
    Ok(RdmInstance::new(r, q, tuples).expect("generated tuples are well-formed"))
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: usize = 1;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs() {
        assert_eq!(gen_cycle(6).unwrap().m(), 6);
        assert!(gen_cycle(2).is_err());
        assert_eq!(gen_complete(1).unwrap().n(), 1);
        assert_eq!(gen_complete(5).unwrap().m(), 10);
        let p4 = gen_path(4).unwrap();
        assert_eq!(p4.degree(0), 1);
        assert_eq!(p4.degree(1), 2);
    }

    #[test]
    fn subdivided_star_family() {
        let g1 = gen_gr(1).unwrap();
        // r = 1 is the path x_1-y_1-z_1-u-v
        assert_eq!(g1.n(), 5);
        assert_eq!(g1.m(), 4);
        assert_eq!(g1.degree(0), 1);
        let g3 = gen_gr(3).unwrap();
        assert_eq!(g3.n(), 11);
        assert_eq!(g3.label(9), Some("u"));
        assert_eq!(g3.degree(9), 4); // hub: three z's plus the pendant
        assert!(gen_gr(0).is_err());
    }

    #[test]
    fn hr_family() {
        let h3 = gen_hr(3).unwrap();
        assert_eq!((h3.n(), h3.m()), (3, 2)); // single P_3
        let h7 = gen_hr(7).unwrap();
        assert_eq!(h7.n(), 15);
        // z-layer clique of size 5: each z has 1 (path) + 4 (clique) neighbors
        assert_eq!(h7.degree(2), 5);
        assert!(gen_hr(2).is_err());
    }

    #[test]
    fn blowups() {
        let c6 = gen_cycle(6).unwrap();
        assert_eq!(blowup(&c6, &[1; 6]).unwrap(), c6);
        let doubled = blowup(&c6, &[2; 6]).unwrap();
        assert_eq!(doubled.n(), 12);
        let k2 = gen_complete(2).unwrap();
        let k5 = blowup(&k2, &[2, 3]).unwrap();
        assert_eq!(k5, gen_complete(5).unwrap());
        assert!(blowup(&c6, &[0; 6]).is_err());
        assert!(blowup(&c6, &[1; 4]).is_err());
    }

    #[test]
    fn random_graphs_deterministic() {
        assert_eq!(gen_random_graph(5, 0.0, 7).m(), 0);
        assert_eq!(gen_random_graph(5, 1.0, 7).m(), 10);
        let a = gen_random_graph(8, 0.4, 42);
        let b = gen_random_graph(8, 0.4, 42);
        assert_eq!(a, b);
        assert_eq!(a.m(), 13); // pinned regression value for seed 42
    }

    #[test]
    fn random_split_graphs() {
        let (g, part) = gen_random_split(4, 5, (1, 2), 3).unwrap();
        assert!(part.is_valid(&g));
        assert!(part
            .independent
            .iter()
            .all(|&v| (1..=2).contains(&g.degree(v))));
        let (g, part) = gen_random_split(3, 4, (1, 1), 5).unwrap();
        assert!(part.independent.iter().all(|&v| g.degree(v) == 1));
        let (g, _) = gen_random_split(4, 0, (0, 0), 1).unwrap();
        assert_eq!(g, gen_complete(4).unwrap());
        assert!(gen_random_split(3, 2, (2, 4), 0).is_err());
    }

    #[test]
    fn random_instances() {
        let hs = gen_random_hitting_set(6, 4, 3, 9).unwrap();
        assert_eq!(hs.sets.len(), 4);
        assert!(hs.sets.iter().all(|s| s.len() == 3));
        assert!(gen_random_hitting_set(3, 1, 4, 0).is_err());
        let rdm = gen_random_rdm(3, 4, 5, 11).unwrap();
        assert_eq!(rdm.tuples.len(), 5);
        assert!(gen_random_rdm(1, 2, 5, 0).is_err());
        // determinism
        assert_eq!(gen_random_rdm(3, 4, 5, 11).unwrap(), rdm);
    }
}
