//! Exponential-time exact solvers used as ground truth, plus the
//! bounded-enumeration engines behind the polynomial special cases.
//!
//! All argmax/argmin operations are deterministic: subsets are explored in
//! increasing size and then lexicographic member order, so the reported
//! optimum is always the lexicographically least one of optimal cardinality.
//! Everything here refuses instances past a hard size guard — these are
//! desk-scale oracles, not production solvers.

use crate::certify;
use crate::graph::{Graph, Multigraph};
use itertools::Itertools;
use thiserror::Error;

/// Brute-force ops refuse vertex counts past this (2^26 subsets).
pub const MAX_ORACLE_VERTICES: usize = 26;

/// Edge-subset enumeration refuses multigraphs past this many edges.
pub const MAX_ORACLE_EDGES: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance too large for brute force: {size} exceeds limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("vertex {0} is isolated; total domination is undefined")]
    IsolatedVertex(usize),
    #[error("set {index} has size {got}, expected r = {r}")]
    SetWrongSize { index: usize, got: usize, r: usize },
    #[error("element {0} outside universe")]
    ElementOutOfRange(usize),
    #[error("tuple {index} has arity {got}, expected r = {r}")]
    TupleWrongArity { index: usize, got: usize, r: usize },
    #[error("coordinate value {0} outside domain of size {1}")]
    CoordinateOutOfRange(usize, usize),
    #[error("tuple family must be non-empty")]
    EmptyTupleFamily,
    #[error("tuples {0} and {1} are identical")]
    DuplicateTuple(usize, usize),
}

/// A family of r-sized subsets of `{0..universe_size}` to be hit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSetInstance {
    pub universe_size: usize,
    pub r: usize,
    pub sets: Vec<Vec<usize>>,
}

impl HittingSetInstance {
    pub fn new(
        universe_size: usize,
        r: usize,
        sets: Vec<Vec<usize>>,
    ) -> Result<Self, OracleError> {
        let mut sets = sets;
        for (index, set) in sets.iter_mut().enumerate() {
            set.sort_unstable();
            set.dedup();
            if set.len() != r {
                return Err(OracleError::SetWrongSize {
                    index,
                    got: set.len(),
                    r,
                });
            }
            if let Some(&max) = set.last() {
                if max >= universe_size {
                    return Err(OracleError::ElementOutOfRange(max));
                }
            }
        }
        Ok(HittingSetInstance {
            universe_size,
            r,
            sets,
        })
    }
}

/// A family M of r-tuples over coordinate domains `{0..q}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RdmInstance {
    pub r: usize,
    pub q: usize,
    pub tuples: Vec<Vec<usize>>,
}

impl RdmInstance {
    pub fn new(r: usize, q: usize, tuples: Vec<Vec<usize>>) -> Result<Self, OracleError> {
        if tuples.is_empty() {
            return Err(OracleError::EmptyTupleFamily);
        }
        for (index, tuple) in tuples.iter().enumerate() {
            if tuple.len() != r {
                return Err(OracleError::TupleWrongArity {
                    index,
                    got: tuple.len(),
                    r,
                });
            }
            for &value in tuple {
                if value >= q {
                    return Err(OracleError::CoordinateOutOfRange(value, q));
                }
            }
        }
        for i in 0..tuples.len() {
            for j in i + 1..tuples.len() {
                if tuples[i] == tuples[j] {
                    return Err(OracleError::DuplicateTuple(i, j));
                }
            }
        }
        Ok(RdmInstance { r, q, tuples })
    }
}

fn guard(size: usize, limit: usize) -> Result<(), OracleError> {
    if size > limit {
        Err(OracleError::TooLarge { size, limit })
    } else {
        Ok(())
    }
}

/// Per-vertex conflict masks: bit w of `masks[v]` is set when v and w share
/// a common neighbor, i.e. exactly when {v, w} is not an open packing.
fn open_packing_conflicts(g: &Graph) -> Vec<u64> {
    let mut masks = vec![0u64; g.n()];
    for w in 0..g.n() {
        let nbrs = g.neighbors(w);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                masks[a] |= 1 << b;
                masks[b] |= 1 << a;
            }
        }
    }
    masks
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    let mut masks = vec![0u64; g.n()];
    for (u, v) in g.edges() {
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }
    masks
}

/// Maximum size of a set avoiding all pairwise conflicts, by branch and
/// bound over vertices in index order.
fn max_conflict_free_size(n: usize, conflicts: &[u64]) -> usize {
    fn go(pos: usize, taken: u64, count: usize, best: &mut usize, n: usize, conflicts: &[u64]) {
        if count > *best {
            *best = count;
        }
        if pos == n || count + (n - pos) <= *best {
            return;
        }
        if conflicts[pos] & taken == 0 {
            go(pos + 1, taken | (1 << pos), count + 1, best, n, conflicts);
        }
        go(pos + 1, taken, count, best, n, conflicts);
    }
    let mut best = 0;
    go(0, 0, 0, &mut best, n, conflicts);
    best
}

/// Lexicographically least conflict-free set of size exactly `k`. Explores
/// size-k combinations in lexicographic order; the first completion wins.
fn lex_least_conflict_free(n: usize, conflicts: &[u64], k: usize) -> Option<Vec<usize>> {
    fn go(
        pos: usize,
        taken: u64,
        chosen: &mut Vec<usize>,
        k: usize,
        n: usize,
        conflicts: &[u64],
    ) -> bool {
        if chosen.len() == k {
            return true;
        }
        for v in pos..n {
            if n - v < k - chosen.len() {
                return false;
            }
            if conflicts[v] & taken == 0 {
                chosen.push(v);
                if go(v + 1, taken | (1 << v), chosen, k, n, conflicts) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::with_capacity(k);
    go(0, 0, &mut chosen, k, n, conflicts).then_some(chosen)
}

/// Every conflict-free set of size exactly `k`, in lexicographic order.
fn all_conflict_free_of_size(n: usize, conflicts: &[u64], k: usize) -> Vec<Vec<usize>> {
    fn go(
        pos: usize,
        taken: u64,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        k: usize,
        n: usize,
        conflicts: &[u64],
    ) {
        if chosen.len() == k {
            out.push(chosen.clone());
            return;
        }
        for v in pos..n {
            if n - v < k - chosen.len() {
                return;
            }
            if conflicts[v] & taken == 0 {
                chosen.push(v);
                go(v + 1, taken | (1 << v), chosen, out, k, n, conflicts);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(0, 0, &mut Vec::new(), &mut out, k, n, conflicts);
    out
}

/// Maximum open packing, lexicographically least among the maximum ones.
pub fn max_open_packing_bf(g: &Graph) -> Result<Vec<usize>, OracleError> {
    guard(g.n(), MAX_ORACLE_VERTICES)?;
    let conflicts = open_packing_conflicts(g);
    let k = max_conflict_free_size(g.n(), &conflicts);
    Ok(lex_least_conflict_free(g.n(), &conflicts, k).expect("optimum size is achievable"))
}

/// All maximum open packings, in lexicographic order. Used by test suites
/// that must exercise a property on every optimum, not just the canonical one.
pub fn all_max_open_packings(g: &Graph) -> Result<Vec<Vec<usize>>, OracleError> {
    guard(g.n(), MAX_ORACLE_VERTICES)?;
    let conflicts = open_packing_conflicts(g);
    let k = max_conflict_free_size(g.n(), &conflicts);
    Ok(all_conflict_free_of_size(g.n(), &conflicts, k))
}

/// Maximum independent set, lexicographically least among the maximum ones.
pub fn max_independent_set_bf(g: &Graph) -> Result<Vec<usize>, OracleError> {
    guard(g.n(), MAX_ORACLE_VERTICES)?;
    let adj = adjacency_masks(g);
    let k = max_conflict_free_size(g.n(), &adj);
    Ok(lex_least_conflict_free(g.n(), &adj, k).expect("optimum size is achievable"))
}

/// Minimum total dominating set, lexicographically least of minimum size.
/// Errors when any vertex is isolated (no total dominating set exists).
pub fn min_total_dominating_bf(g: &Graph) -> Result<Vec<usize>, OracleError> {
    guard(g.n(), MAX_ORACLE_VERTICES)?;
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(OracleError::IsolatedVertex(v));
    }
    match min_tds_bounded(g, g.n())? {
        Some(d) => Ok(d),
        None => unreachable!("V(g) totally dominates an isolated-vertex-free graph"),
    }
}

/// Lemma-5-style bounded search: the minimum total dominating set when
/// γ_t(g) ≤ bound, `None` when the bound is exceeded.
pub fn min_tds_bounded(g: &Graph, bound: usize) -> Result<Option<Vec<usize>>, OracleError> {
    guard(g.n(), MAX_ORACLE_VERTICES)?;
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(OracleError::IsolatedVertex(v));
    }
    for k in 1..=bound.min(g.n()) {
        for d in (0..g.n()).combinations(k) {
            if certify::is_total_dominating(g, &d)
                .expect("in-range set")
                .valid
            {
                return Ok(Some(d));
            }
        }
    }
    Ok(None)
}

/// All open packings of size at most `k`, in increasing-size-then-lex order.
pub fn enumerate_open_packings_upto(g: &Graph, k: usize) -> Result<Vec<Vec<usize>>, OracleError> {
    guard(g.n(), MAX_ORACLE_VERTICES)?;
    let conflicts = open_packing_conflicts(g);
    let mut out = Vec::new();
    for size in 0..=k.min(g.n()) {
        out.extend(all_conflict_free_of_size(g.n(), &conflicts, size));
    }
    Ok(out)
}

/// Maximum matching in a multigraph by exhaustive search over edge subsets,
/// reported as a lexicographically least optimal set of edge indices mapped
/// back to labels (edges considered in input order).
pub fn max_matching_bf(mg: &Multigraph) -> Result<Vec<String>, OracleError> {
    guard(mg.edges().len(), MAX_ORACLE_EDGES)?;
    let edges = mg.edges();
    let m = edges.len();
    // pairwise conflicts between edges sharing an endpoint (parallel edges
    // conflict on both)
    let mut conflicts = vec![0u64; m];
    for i in 0..m {
        for j in i + 1..m {
            let (a, b, _) = edges[i];
            let (c, d, _) = edges[j];
            if a == c || a == d || b == c || b == d {
                conflicts[i] |= 1 << j;
                conflicts[j] |= 1 << i;
            }
        }
    }
    let k = max_conflict_free_size(m, &conflicts);
    let picked = lex_least_conflict_free(m, &conflicts, k).expect("optimum size is achievable");
    Ok(picked.into_iter().map(|i| edges[i].2.clone()).collect())
}

/// Minimum hitting set, lexicographically least of minimum size.
pub fn min_hitting_set_bf(inst: &HittingSetInstance) -> Result<Vec<usize>, OracleError> {
    guard(inst.universe_size, MAX_ORACLE_VERTICES)?;
    for k in 0..=inst.universe_size {
        for x in (0..inst.universe_size).combinations(k) {
            if certify::is_hitting_set(inst, &x).expect("in-range set").valid {
                return Ok(x);
            }
        }
    }
    unreachable!("the whole universe hits every non-empty r-set")
}

/// Maximum coordinate-disjoint subfamily of tuples; the instance is a
/// yes-instance exactly when the result has size q.
pub fn max_rdm_bf(inst: &RdmInstance) -> Result<Vec<usize>, OracleError> {
    guard(inst.tuples.len(), MAX_ORACLE_VERTICES)?;
    let m = inst.tuples.len();
    let mut conflicts = vec![0u64; m];
    for i in 0..m {
        for j in i + 1..m {
            if (0..inst.r).any(|c| inst.tuples[i][c] == inst.tuples[j][c]) {
                conflicts[i] |= 1 << j;
                conflicts[j] |= 1 << i;
            }
        }
    }
    let k = max_conflict_free_size(m, &conflicts);
    Ok(lex_least_conflict_free(m, &conflicts, k).expect("optimum size is achievable"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn open_packing_optima() {
        let c4 = generators::gen_cycle(4).unwrap();
        assert_eq!(max_open_packing_bf(&c4).unwrap().len(), 2);
        let c6 = generators::gen_cycle(6).unwrap();
        assert_eq!(max_open_packing_bf(&c6).unwrap().len(), 2);
        let g3 = generators::gen_gr(3).unwrap();
        assert_eq!(max_open_packing_bf(&g3).unwrap().len(), 7);
        let empty = Graph::new(0, &[]).unwrap();
        assert_eq!(max_open_packing_bf(&empty).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn total_domination_optima() {
        let c6 = generators::gen_cycle(6).unwrap();
        assert_eq!(min_total_dominating_bf(&c6).unwrap().len(), 4);
        for n in 2..=6 {
            let kn = generators::gen_complete(n).unwrap();
            assert_eq!(min_total_dominating_bf(&kn).unwrap().len(), 2);
        }
        let h7 = generators::gen_hr(7).unwrap();
        assert_eq!(min_total_dominating_bf(&h7).unwrap().len(), 10);
        let lonely = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(
            min_total_dominating_bf(&lonely).unwrap_err(),
            OracleError::IsolatedVertex(2)
        );
    }

    #[test]
    fn independent_set_optima() {
        let c5 = generators::gen_cycle(5).unwrap();
        assert_eq!(max_independent_set_bf(&c5).unwrap().len(), 2);
        let k4 = generators::gen_complete(4).unwrap();
        assert_eq!(max_independent_set_bf(&k4).unwrap(), vec![0]);
        let e3 = Graph::new(3, &[]).unwrap();
        assert_eq!(max_independent_set_bf(&e3).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn matching_bf() {
        let mg = Multigraph::new(
            2,
            vec![(0, 1, "a".into()), (0, 1, "b".into())],
        )
        .unwrap();
        assert_eq!(max_matching_bf(&mg).unwrap(), vec!["a".to_string()]);
        let empty = Multigraph::new(3, vec![]).unwrap();
        assert!(max_matching_bf(&empty).unwrap().is_empty());
    }

    #[test]
    fn bounded_enumeration() {
        let p3 = generators::gen_path(3).unwrap();
        assert_eq!(enumerate_open_packings_upto(&p3, 1).unwrap().len(), 4);
        let c4 = generators::gen_cycle(4).unwrap();
        let packings = enumerate_open_packings_upto(&c4, 2).unwrap();
        // empty set, 4 singletons, and the 4 adjacent pairs
        assert_eq!(packings.len(), 9);
        assert_eq!(enumerate_open_packings_upto(&c4, 0).unwrap(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn bounded_total_domination() {
        let c6 = generators::gen_cycle(6).unwrap();
        assert_eq!(min_tds_bounded(&c6, 4).unwrap().unwrap().len(), 4);
        assert_eq!(min_tds_bounded(&c6, 3).unwrap(), None);
        let k2 = generators::gen_complete(2).unwrap();
        assert_eq!(min_tds_bounded(&k2, 2).unwrap().unwrap(), vec![0, 1]);
    }

    #[test]
    fn hitting_set_bf() {
        let inst = HittingSetInstance::new(
            6,
            3,
            vec![
                vec![0, 1, 4],
                vec![2, 4, 5],
                vec![0, 2, 5],
                vec![1, 3, 4],
            ],
        )
        .unwrap();
        assert_eq!(min_hitting_set_bf(&inst).unwrap().len(), 2);
        let single = HittingSetInstance::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(min_hitting_set_bf(&single).unwrap().len(), 1);
        let none = HittingSetInstance::new(3, 2, vec![]).unwrap();
        assert!(min_hitting_set_bf(&none).unwrap().is_empty());
    }

    #[test]
    fn rdm_bf() {
        let inst = RdmInstance::new(
            4,
            3,
            vec![
                vec![0, 1, 2, 2],
                vec![0, 0, 2, 2],
                vec![1, 1, 1, 1],
                vec![2, 2, 2, 0],
                vec![2, 2, 0, 0],
            ],
        )
        .unwrap();
        assert_eq!(max_rdm_bf(&inst).unwrap(), vec![1, 2, 4]);
        let single = RdmInstance::new(3, 1, vec![vec![0, 0, 0]]).unwrap();
        assert_eq!(max_rdm_bf(&single).unwrap().len(), 1);
        let clash = RdmInstance::new(2, 2, vec![vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(max_rdm_bf(&clash).unwrap().len(), 1);
    }

    #[test]
    fn instance_validation() {
        assert!(HittingSetInstance::new(3, 2, vec![vec![0, 1, 2]]).is_err());
        assert!(HittingSetInstance::new(3, 2, vec![vec![0, 9]]).is_err());
        assert!(RdmInstance::new(2, 2, vec![]).is_err());
        assert!(RdmInstance::new(2, 2, vec![vec![0, 1], vec![0, 1]]).is_err());
        assert!(RdmInstance::new(2, 2, vec![vec![0, 5]]).is_err());
    }

    #[test]
    fn size_guard() {
        let big = Graph::new(30, &[]).unwrap();
        assert!(matches!(
            max_open_packing_bf(&big),
            Err(OracleError::TooLarge { .. })
        ));
    }

    #[test]
    fn all_maximum_packings() {
        let c4 = generators::gen_cycle(4).unwrap();
        let all = all_max_open_packings(&c4).unwrap();
        assert_eq!(all, vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
    }
}
