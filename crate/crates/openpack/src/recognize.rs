//! Graph-class recognition and structural transforms: split partitions,
//! star-freeness, I_r-split reconstruction, (P_t ∪ sK_1)-freeness, the
//! five-obstruction dichotomy classifier, and the neighborhood graph G^[o].

use crate::graph::{Graph, SplitPartition};
use itertools::Itertools;
use thiserror::Error;

/// Patterns above this size are refused by the induced-subgraph search.
pub const MAX_PATTERN_VERTICES: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecognizeError {
    #[error("pattern on {0} vertices exceeds the {MAX_PATTERN_VERTICES}-vertex limit")]
    PatternTooLarge(usize),
    #[error("parameter {name} = {got} outside supported range")]
    BadParameter { name: &'static str, got: usize },
}

/// An induced copy of a named pattern inside a host graph.
/// `embedding[i]` is the host vertex playing pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWitness {
    pub pattern_name: String,
    pub pattern: Graph,
    pub embedding: Vec<usize>,
}

impl PatternWitness {
    /// Re-checks the witness: the embedding must be injective and preserve
    /// both adjacency and non-adjacency.
    pub fn is_valid(&self, host: &Graph) -> bool {
        let emb = &self.embedding;
        if emb.len() != self.pattern.n() {
            return false;
        }
        if emb.iter().any(|&v| v >= host.n()) {
            return false;
        }
        if emb.iter().unique().count() != emb.len() {
            return false;
        }
        for i in 0..emb.len() {
            for j in i + 1..emb.len() {
                if self.pattern.has_edge(i, j) != host.has_edge(emb[i], emb[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Canonical split partition via the Hammer–Simeone degree-sequence test:
/// sort degrees descending, find the largest m with d_m ≥ m−1, and the
/// graph is split iff the first m vertices carry a full clique's worth of
/// degree. The resulting sides are re-verified before being returned.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    if g.n() == 0 {
        return Some(SplitPartition {
            clique: vec![],
            independent: vec![],
        });
    }
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degrees: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=g.n())
        .rev()
        .find(|&i| degrees[i - 1] >= i - 1)
        .unwrap_or(0);
    let head: usize = degrees[..m].iter().sum();
    let tail: usize = degrees[m..].iter().sum();
    if head != m * (m - 1) + tail {
        return None;
    }
    let mut clique: Vec<usize> = order[..m].to_vec();
    let mut independent: Vec<usize> = order[m..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    let part = SplitPartition {
        clique,
        independent,
    };
    part.is_valid(g).then_some(part)
}

/// First induced copy of `pattern` in `g`, in lexicographic order of the
/// embedding tuple; `None` when the host is pattern-free.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Result<Option<PatternWitness>, RecognizeError> {
    if pattern.n() > MAX_PATTERN_VERTICES {
        return Err(RecognizeError::PatternTooLarge(pattern.n()));
    }
    if pattern.n() > g.n() {
        return Ok(None);
    }
    let mut embedding = vec![0usize; pattern.n()];
    let mut used = vec![false; g.n()];
    fn go(
        depth: usize,
        g: &Graph,
        pattern: &Graph,
        embedding: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == pattern.n() {
            return true;
        }
        'candidates: for host in 0..g.n() {
            if used[host] {
                continue;
            }
            for (prev, &mapped) in embedding.iter().enumerate().take(depth) {
                if pattern.has_edge(prev, depth) != g.has_edge(mapped, host) {
                    continue 'candidates;
                }
            }
            embedding[depth] = host;
            used[host] = true;
            if go(depth + 1, g, pattern, embedding, used) {
                return true;
            }
            used[host] = false;
        }
        false
    }
    if go(0, g, pattern, &mut embedding, &mut used) {
        Ok(Some(PatternWitness {
            pattern_name: "pattern".to_string(),
            pattern: pattern.clone(),
            embedding,
        }))
    } else {
        Ok(None)
    }
}

/// K_{1,r}-freeness: true unless some vertex's neighborhood contains an
/// independent set of size r; the witness is the center plus those leaves.
pub fn is_k1r_free(g: &Graph, r: usize) -> Result<(bool, Option<PatternWitness>), RecognizeError> {
    if r < 2 {
        return Err(RecognizeError::BadParameter { name: "r", got: r });
    }
    for center in g.vertices() {
        if g.degree(center) < r {
            continue;
        }
        for leaves in g.neighbors(center).iter().copied().combinations(r) {
            let independent = leaves
                .iter()
                .tuple_combinations()
                .all(|(&a, &b)| !g.has_edge(a, b));
            if independent {
                let mut pattern_edges = Vec::new();
                for leaf in 1..=r {
                    pattern_edges.push((0, leaf));
                }
                let pattern = Graph::new(r + 1, &pattern_edges).expect("star pattern");
                let mut embedding = vec![center];
                embedding.extend(leaves);
                return Ok((
                    false,
                    Some(PatternWitness {
                        pattern_name: format!("K_{{1,{r}}}"),
                        pattern,
                        embedding,
                    }),
                ));
            }
        }
    }
    Ok((true, None))
}

/// The disjoint union P_t ∪ sK_1 as a pattern graph: the path first, the
/// isolated vertices after it.
pub fn pt_union_sk1_pattern(t: usize, s: usize) -> Result<Graph, RecognizeError> {
    if !(1..=4).contains(&t) {
        return Err(RecognizeError::BadParameter { name: "t", got: t });
    }
    let edges: Vec<(usize, usize)> = (0..t - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::new(t + s, &edges).expect("path pattern"))
}

/// (P_t ∪ sK_1)-freeness for t ∈ {1,2,3,4}.
pub fn is_pt_union_sk1_free(
    g: &Graph,
    t: usize,
    s: usize,
) -> Result<(bool, Option<PatternWitness>), RecognizeError> {
    let pattern = pt_union_sk1_pattern(t, s)?;
    match find_induced(g, &pattern)? {
        Some(mut witness) => {
            witness.pattern_name = format!("P_{t} ∪ {s}K_1");
            Ok((false, Some(witness)))
        }
        None => Ok((true, None)),
    }
}

/// Outcome of the dichotomy classifier: either the pattern is one of the
/// four tractable families, or it contains one of the five obstructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dichotomy {
    /// H = P_t ∪ (p−t)K_1 for some t ≤ 4.
    TractableFamily { t: usize },
    Obstruction(PatternWitness),
}

/// The five obstruction patterns, in the order they are searched.
pub fn obstruction_patterns() -> Vec<(String, Graph)> {
    vec![
        (
            "K_3".to_string(),
            Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
        ),
        ("2K_2".to_string(), Graph::new(4, &[(0, 1), (2, 3)]).unwrap()),
        (
            "C_4".to_string(),
            Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
        ),
        (
            "K_{1,3}".to_string(),
            Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
        ),
        (
            "C_5".to_string(),
            Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap(),
        ),
    ]
}

/// Dichotomy on a pattern graph H with at least 4 vertices: H is either a
/// path-plus-isolated-vertices family or contains one of K_3, 2K_2, C_4,
/// K_{1,3}, C_5 as an induced subgraph.
pub fn classify_h_dichotomy(h: &Graph) -> Result<Dichotomy, RecognizeError> {
    if h.n() < 4 {
        return Err(RecognizeError::BadParameter {
            name: "pattern order",
            got: h.n(),
        });
    }
    // tractable ⇔ at most one non-trivial component, and it is a path on
    // at most four vertices
    let nontrivial: Vec<Vec<usize>> = h
        .components()
        .into_iter()
        .filter(|c| c.len() > 1)
        .collect();
    let tractable_t = match nontrivial.as_slice() {
        [] => Some(1),
        [comp] if comp.len() <= 4 => {
            let ends = comp.iter().filter(|&&v| h.degree(v) == 1).count();
            let inner = comp.iter().filter(|&&v| h.degree(v) == 2).count();
            (ends == 2 && inner == comp.len() - 2).then_some(comp.len())
        }
        _ => None,
    };
    if let Some(t) = tractable_t {
        return Ok(Dichotomy::TractableFamily { t });
    }
    for (name, pattern) in obstruction_patterns() {
        if let Some(mut witness) = find_induced(h, &pattern)? {
            witness.pattern_name = name;
            return Ok(Dichotomy::Obstruction(witness));
        }
    }
    unreachable!("a non-family pattern on ≥ 4 vertices contains an obstruction")
}

/// The neighborhood graph G^[o]: same vertex set, with xy an edge exactly
/// when x and y share a common neighbor in g. Open packings of g are the
/// independent sets of G^[o].
pub fn neighborhood_graph(g: &Graph) -> Graph {
    let mut edges = Vec::new();
    for w in g.vertices() {
        let nbrs = g.neighbors(w);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    Graph::new(g.n(), &edges).expect("vertices unchanged")
}

/// Reconstructs a split partition in which every independent-side vertex
/// has degree exactly r, if the graph admits one.
///
/// Any such partition's independent side lies inside the degree-r vertex
/// set, so all other vertices are forced to the clique side. The remaining
/// constraints are purely pairwise (clique side pairwise adjacent,
/// independent side pairwise non-adjacent), which a fixpoint propagation
/// plus a split partition of the undecided remainder resolves exactly.
pub fn is_ir_split(g: &Graph, r: usize) -> Result<Option<SplitPartition>, RecognizeError> {
    if r < 1 {
        return Err(RecognizeError::BadParameter { name: "r", got: r });
    }
    const UNDECIDED: u8 = 0;
    const CLIQUE: u8 = 1;
    const INDEP: u8 = 2;
    let mut side = vec![UNDECIDED; g.n()];
    for v in g.vertices() {
        if g.degree(v) != r {
            side[v] = CLIQUE;
        }
    }
    // propagate: a non-neighbor of a clique vertex cannot join the clique;
    // a neighbor of an independent vertex cannot stay independent
    loop {
        let mut changed = false;
        for u in g.vertices() {
            if side[u] != UNDECIDED {
                continue;
            }
            let forced_indep = g
                .vertices()
                .any(|c| side[c] == CLIQUE && c != u && !g.has_edge(u, c));
            let forced_clique = g.neighbors(u).iter().any(|&w| side[w] == INDEP);
            match (forced_clique, forced_indep) {
                (true, true) => return Ok(None),
                (true, false) => {
                    side[u] = CLIQUE;
                    changed = true;
                }
                (false, true) => {
                    side[u] = INDEP;
                    changed = true;
                }
                (false, false) => {}
            }
        }
        if !changed {
            break;
        }
    }
    let forced_c: Vec<usize> = g.vertices().filter(|&v| side[v] == CLIQUE).collect();
    let forced_i: Vec<usize> = g.vertices().filter(|&v| side[v] == INDEP).collect();
    for (i, &u) in forced_c.iter().enumerate() {
        for &v in &forced_c[i + 1..] {
            if !g.has_edge(u, v) {
                return Ok(None);
            }
        }
    }
    for (i, &u) in forced_i.iter().enumerate() {
        for &v in &forced_i[i + 1..] {
            if g.has_edge(u, v) {
                return Ok(None);
            }
        }
    }
    // undecided vertices are adjacent to every forced clique vertex and to
    // no forced independent vertex; any split of their induced subgraph
    // completes the partition
    let undecided: Vec<usize> = g.vertices().filter(|&v| side[v] == UNDECIDED).collect();
    let (sub, map) = g.induced_subgraph(&undecided).expect("vertices in range");
    let Some(sub_part) = split_partition(&sub) else {
        return Ok(None);
    };
    let mut clique = forced_c;
    clique.extend(sub_part.clique.iter().map(|&i| map[i]));
    let mut independent = forced_i;
    independent.extend(sub_part.independent.iter().map(|&i| map[i]));
    clique.sort_unstable();
    independent.sort_unstable();
    let part = SplitPartition {
        clique,
        independent,
    };
    debug_assert!(part.is_valid(g));
    debug_assert!(part.independent.iter().all(|&v| g.degree(v) == r));
    Ok(Some(part))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn split_recognition() {
        let c5 = generators::gen_cycle(5).unwrap();
        assert_eq!(split_partition(&c5), None);
        let k3 = generators::gen_complete(3).unwrap();
        let part = split_partition(&k3).unwrap();
        assert_eq!(part.clique, vec![0, 1, 2]);
        assert!(part.independent.is_empty());
        // K_3 with a pendant: clique {0,1,2} (or a swap), pendant independent
        let paw = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let part = split_partition(&paw).unwrap();
        assert!(part.is_valid(&paw));
        let c4 = generators::gen_cycle(4).unwrap();
        assert_eq!(split_partition(&c4), None);
        let empty = Graph::new(0, &[]).unwrap();
        assert!(split_partition(&empty).is_some());
    }

    #[test]
    fn split_matches_brute_force_exhaustively() {
        // every labeled graph on ≤ 5 vertices: degree-sequence recognition
        // agrees with exhaustive bipartition search
        for n in 0..=5usize {
            let slots: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..(1 << slots.len()) {
                let edges: Vec<(usize, usize)> = slots
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, &edges).unwrap();
                let brute = (0u32..(1 << n)).any(|cmask| {
                    let clique: Vec<usize> = (0..n).filter(|&v| cmask >> v & 1 == 1).collect();
                    let independent: Vec<usize> =
                        (0..n).filter(|&v| cmask >> v & 1 == 0).collect();
                    SplitPartition {
                        clique,
                        independent,
                    }
                    .is_valid(&g)
                });
                assert_eq!(split_partition(&g).is_some(), brute, "n={n} mask={mask}");
            }
        }
    }

    #[test]
    fn induced_search() {
        let c6 = generators::gen_cycle(6).unwrap();
        let p4 = generators::gen_path(4).unwrap();
        let witness = find_induced(&c6, &p4).unwrap().unwrap();
        assert!(witness.is_valid(&c6));
        let k4 = generators::gen_complete(4).unwrap();
        let two_k1 = Graph::new(2, &[]).unwrap();
        assert_eq!(find_induced(&k4, &two_k1).unwrap(), None);
        // the subdivided star avoids P_4 with r extra isolated vertices
        let g3 = generators::gen_gr(3).unwrap();
        let pattern = pt_union_sk1_pattern(4, 3).unwrap();
        assert_eq!(find_induced(&g3, &pattern).unwrap(), None);
        let big = Graph::new(13, &[]).unwrap();
        assert!(find_induced(&c6, &big).is_err());
    }

    #[test]
    fn star_freeness() {
        let claw = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (free, witness) = is_k1r_free(&claw, 3).unwrap();
        assert!(!free);
        assert!(witness.unwrap().is_valid(&claw));
        let c6 = generators::gen_cycle(6).unwrap();
        assert!(is_k1r_free(&c6, 3).unwrap().0);
        assert!(is_k1r_free(&claw, 4).unwrap().0);
        assert!(is_k1r_free(&claw, 1).is_err());
    }

    #[test]
    fn path_union_freeness() {
        let c6 = generators::gen_cycle(6).unwrap();
        assert!(is_pt_union_sk1_free(&c6, 4, 1).unwrap().0);
        let c5 = generators::gen_cycle(5).unwrap();
        assert!(is_pt_union_sk1_free(&c5, 3, 1).unwrap().0);
        let p6 = generators::gen_path(6).unwrap();
        let (free, witness) = is_pt_union_sk1_free(&p6, 4, 1).unwrap();
        assert!(!free);
        assert!(witness.unwrap().is_valid(&p6));
    }

    #[test]
    fn dichotomy() {
        let family = Graph::new(6, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            classify_h_dichotomy(&family).unwrap(),
            Dichotomy::TractableFamily { t: 4 }
        );
        let c5 = generators::gen_cycle(5).unwrap();
        match classify_h_dichotomy(&c5).unwrap() {
            Dichotomy::Obstruction(w) => assert_eq!(w.pattern_name, "C_5"),
            other => panic!("expected obstruction, got {other:?}"),
        }
        let claw_plus = Graph::new(5, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        match classify_h_dichotomy(&claw_plus).unwrap() {
            Dichotomy::Obstruction(w) => {
                assert_eq!(w.pattern_name, "K_{1,3}");
                assert!(w.is_valid(&claw_plus));
            }
            other => panic!("expected obstruction, got {other:?}"),
        }
        let tiny = generators::gen_complete(3).unwrap();
        assert!(classify_h_dichotomy(&tiny).is_err());
    }

    #[test]
    fn neighborhood_graphs() {
        let p3 = generators::gen_path(3).unwrap();
        let ng = neighborhood_graph(&p3);
        assert_eq!(ng.edges(), vec![(0, 2)]);
        let k3 = generators::gen_complete(3).unwrap();
        assert_eq!(neighborhood_graph(&k3).m(), 3);
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(neighborhood_graph(&two_k2).m(), 0);
    }

    #[test]
    fn ir_split_recognition() {
        let c4 = generators::gen_cycle(4).unwrap();
        assert_eq!(is_ir_split(&c4, 2).unwrap(), None);
        // K_3 with one pendant per clique vertex is I_1-split
        let g = Graph::new(
            6,
            &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let part = is_ir_split(&g, 1).unwrap().unwrap();
        assert_eq!(part.independent, vec![3, 4, 5]);
        assert_eq!(is_ir_split(&g, 2).unwrap(), None);
        // complete graphs are vacuously I_r-split for any r
        let k4 = generators::gen_complete(4).unwrap();
        assert!(is_ir_split(&k4, 2).unwrap().is_some());
        assert!(is_ir_split(&k4, 1).unwrap().is_some());
        assert!(is_ir_split(&k4, 0).is_err());
    }

    #[test]
    fn ir_split_matches_brute_force_exhaustively() {
        for n in 1..=5usize {
            let slots: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..(1 << slots.len()) {
                let edges: Vec<(usize, usize)> = slots
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, &edges).unwrap();
                for r in 1..n.max(2) {
                    let brute = (0u32..(1 << n)).any(|cmask| {
                        let clique: Vec<usize> =
                            (0..n).filter(|&v| cmask >> v & 1 == 1).collect();
                        let independent: Vec<usize> =
                            (0..n).filter(|&v| cmask >> v & 1 == 0).collect();
                        independent.iter().all(|&v| g.degree(v) == r)
                            && SplitPartition {
                                clique,
                                independent,
                            }
                            .is_valid(&g)
                    });
                    let found = is_ir_split(&g, r).unwrap();
                    assert_eq!(found.is_some(), brute, "n={n} mask={mask} r={r}");
                    if let Some(part) = found {
                        assert!(part.is_valid(&g));
                        assert!(part.independent.iter().all(|&v| g.degree(v) == r));
                    }
                }
            }
        }
    }
}
