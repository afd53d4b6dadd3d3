//! Linear-time certificate checkers for every solution concept in the
//! library: open packings (both a fast single-pass test and a definitional
//! all-pairs oracle), total dominating sets, independent sets, matchings in
//! multigraphs, hitting sets, and r-dimensional matchings.
//!
//! Checkers return a verdict plus, on failure, a witness that can be
//! re-validated against the instance independently.

use crate::graph::{checked_vertex_set, Graph, GraphError, Multigraph};
use crate::oracle::{HittingSetInstance, RdmInstance};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown edge label {0:?}")]
    UnknownEdgeLabel(String),
    #[error("duplicate edge label {0:?} in certificate")]
    DuplicateEdgeLabel(String),
    #[error("element {0} outside universe")]
    OutOfUniverse(usize),
    #[error("duplicate element {0} in certificate")]
    DuplicateElement(usize),
    #[error("tuple index {0} out of range")]
    UnknownTupleIndex(usize),
}

/// Why a certificate failed. Every variant carries enough data to re-check
/// the refutation against the instance without re-running the checker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Distinct set members `a` and `b` share the neighbor `via`.
    CommonNeighbor { a: usize, b: usize, via: usize },
    /// `vertex` has no neighbor in the claimed dominating set.
    Undominated { vertex: usize },
    /// The claimed independent set contains the edge `(a, b)`.
    EdgeInSet { a: usize, b: usize },
    /// Two selected edges meet at `vertex`.
    SharedEndpoint {
        edge_a: String,
        edge_b: String,
        vertex: usize,
    },
    /// The member set with this index is not hit.
    UnhitSet { set_index: usize },
    /// Selected tuples `a` and `b` agree in `coordinate`.
    CoordinateClash {
        a: usize,
        b: usize,
        coordinate: usize,
    },
    /// An r-dimensional matching must select exactly `q` tuples.
    WrongCardinality { got: usize, want: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifyResult {
    pub valid: bool,
    pub witness: Option<Violation>,
}

impl CertifyResult {
    fn ok() -> Self {
        CertifyResult {
            valid: true,
            witness: None,
        }
    }

    fn fail(witness: Violation) -> Self {
        CertifyResult {
            valid: false,
            witness: Some(witness),
        }
    }
}

/// Work accounting for the fast open-packing test, exposed so tests can
/// verify the advertised visit bounds.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounters {
    pub vertex_visits: usize,
    pub edge_visits: usize,
}

/// Single-pass open-packing test using a shared mark array.
///
/// Walks the members of `s`; for each, marks every neighbor with the member
/// that reached it. The first neighbor already marked by a *different*
/// member exposes a common neighbor and the test stops. A neighbor marked
/// by the same member can only mean a repeated adjacency, which a simple
/// graph excludes, so each vertex is marked at most once and the whole scan
/// touches at most 2n+1 vertices and n+1 edges.
pub fn is_open_packing_fast(g: &Graph, s: &[usize]) -> Result<CertifyResult, CertifyError> {
    Ok(is_open_packing_fast_counted(g, s)?.0)
}

/// [`is_open_packing_fast`] plus the visit counters.
pub fn is_open_packing_fast_counted(
    g: &Graph,
    s: &[usize],
) -> Result<(CertifyResult, OpCounters), CertifyError> {
    let s = checked_vertex_set(g, s)?;
    let mut mark: Vec<Option<usize>> = vec![None; g.n()];
    let mut counters = OpCounters::default();
    for &u in &s {
        counters.vertex_visits += 1;
        for &w in g.neighbors(u) {
            counters.edge_visits += 1;
            counters.vertex_visits += 1;
            match mark[w] {
                None => mark[w] = Some(u),
                Some(prev) => {
                    debug_assert_ne!(prev, u);
                    return Ok((
                        CertifyResult::fail(Violation::CommonNeighbor {
                            a: prev,
                            b: u,
                            via: w,
                        }),
                        counters,
                    ));
                }
            }
        }
    }
    Ok((CertifyResult::ok(), counters))
}

/// Definitional open-packing test: all pairs, common-neighbor intersection.
/// Serves as the oracle for the fast variant.
pub fn is_open_packing_naive(g: &Graph, s: &[usize]) -> Result<CertifyResult, CertifyError> {
    let s = checked_vertex_set(g, s)?;
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i + 1..] {
            let common = g.common_neighbors(a, b)?;
            if let Some(&via) = common.first() {
                return Ok(CertifyResult::fail(Violation::CommonNeighbor {
                    a,
                    b,
                    via,
                }));
            }
        }
    }
    Ok(CertifyResult::ok())
}

/// Total domination test: every vertex of `g` (members of `d` included)
/// must have a neighbor in `d`.
pub fn is_total_dominating(g: &Graph, d: &[usize]) -> Result<CertifyResult, CertifyError> {
    let d = checked_vertex_set(g, d)?;
    let mut dominated = vec![false; g.n()];
    for &u in &d {
        for &w in g.neighbors(u) {
            dominated[w] = true;
        }
    }
    match dominated.iter().position(|&ok| !ok) {
        Some(vertex) => Ok(CertifyResult::fail(Violation::Undominated { vertex })),
        None => Ok(CertifyResult::ok()),
    }
}

pub fn is_independent_set(g: &Graph, s: &[usize]) -> Result<CertifyResult, CertifyError> {
    let s = checked_vertex_set(g, s)?;
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i + 1..] {
            if g.has_edge(a, b) {
                return Ok(CertifyResult::fail(Violation::EdgeInSet { a, b }));
            }
        }
    }
    Ok(CertifyResult::ok())
}

/// Matching test on a labeled multigraph: the selected edges must be
/// pairwise endpoint-disjoint. Parallel edges therefore exclude each other.
pub fn is_matching(mg: &Multigraph, f: &[String]) -> Result<CertifyResult, CertifyError> {
    let mut seen = std::collections::HashSet::new();
    let mut used: Vec<Option<String>> = vec![None; mg.n()];
    for label in f {
        if !seen.insert(label.clone()) {
            return Err(CertifyError::DuplicateEdgeLabel(label.clone()));
        }
        let (u, v) = mg
            .endpoints(label)
            .ok_or_else(|| CertifyError::UnknownEdgeLabel(label.clone()))?;
        for vertex in [u, v] {
            if let Some(other) = &used[vertex] {
                return Ok(CertifyResult::fail(Violation::SharedEndpoint {
                    edge_a: other.clone(),
                    edge_b: label.clone(),
                    vertex,
                }));
            }
        }
        used[u] = Some(label.clone());
        used[v] = Some(label.clone());
    }
    Ok(CertifyResult::ok())
}

pub fn is_hitting_set(
    inst: &HittingSetInstance,
    x: &[usize],
) -> Result<CertifyResult, CertifyError> {
    let mut chosen = vec![false; inst.universe_size];
    for &e in x {
        if e >= inst.universe_size {
            return Err(CertifyError::OutOfUniverse(e));
        }
        if chosen[e] {
            return Err(CertifyError::DuplicateElement(e));
        }
        chosen[e] = true;
    }
    for (set_index, set) in inst.sets.iter().enumerate() {
        if !set.iter().any(|&e| chosen[e]) {
            return Ok(CertifyResult::fail(Violation::UnhitSet { set_index }));
        }
    }
    Ok(CertifyResult::ok())
}

/// Full r-dimensional-matching test: `l` must select exactly `q` tuples
/// that pairwise differ in every coordinate.
pub fn is_r_dimensional_matching(
    inst: &RdmInstance,
    l: &[usize],
) -> Result<CertifyResult, CertifyError> {
    let result = is_coordinate_disjoint(inst, l)?;
    if !result.valid {
        return Ok(result);
    }
    if l.len() != inst.q {
        return Ok(CertifyResult::fail(Violation::WrongCardinality {
            got: l.len(),
            want: inst.q,
        }));
    }
    Ok(CertifyResult::ok())
}

/// Coordinate-disjointness alone, without the |L| = q cardinality demand.
/// This is what the reduction mappers need for partial solutions.
pub fn is_coordinate_disjoint(
    inst: &RdmInstance,
    l: &[usize],
) -> Result<CertifyResult, CertifyError> {
    let mut seen = vec![false; inst.tuples.len()];
    for &i in l {
        if i >= inst.tuples.len() {
            return Err(CertifyError::UnknownTupleIndex(i));
        }
        if seen[i] {
            return Err(CertifyError::DuplicateElement(i));
        }
        seen[i] = true;
    }
    for (pos, &a) in l.iter().enumerate() {
        for &b in &l[pos + 1..] {
            for coordinate in 0..inst.r {
                if inst.tuples[a][coordinate] == inst.tuples[b][coordinate] {
                    return Ok(CertifyResult::fail(Violation::CoordinateClash {
                        a,
                        b,
                        coordinate,
                    }));
                }
            }
        }
    }
    Ok(CertifyResult::ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn c(n: usize) -> Graph {
        generators::gen_cycle(n).unwrap()
    }

    #[test]
    fn open_packing_on_cycles() {
        let c6 = c(6);
        assert!(is_open_packing_fast(&c6, &[0, 3]).unwrap().valid);
        assert!(is_open_packing_naive(&c6, &[0, 3]).unwrap().valid);
        let c4 = c(4);
        let res = is_open_packing_fast(&c4, &[0, 2]).unwrap();
        assert!(!res.valid);
        match res.witness.unwrap() {
            Violation::CommonNeighbor { a, b, via } => {
                assert_eq!((a.min(b), a.max(b)), (0, 2));
                assert!(via == 1 || via == 3);
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn open_packing_edge_cases() {
        let c4 = c(4);
        assert!(is_open_packing_fast(&c4, &[]).unwrap().valid);
        assert!(is_open_packing_fast(&c4, &[2]).unwrap().valid);
        assert!(is_open_packing_fast(&c4, &[0, 0]).is_err());
        assert!(is_open_packing_fast(&c4, &[9]).is_err());
    }

    #[test]
    fn fast_checker_visit_bounds() {
        let c6 = c(6);
        let (_, counters) = is_open_packing_fast_counted(&c6, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(counters.vertex_visits <= 2 * c6.n() + 1);
        assert!(counters.edge_visits <= c6.n() + 1);
    }

    #[test]
    fn subdivided_star_open_packing() {
        // x_i, y_i and the pendant v of the subdivided star form an open packing.
        let g3 = generators::gen_gr(3).unwrap();
        let s = vec![0, 1, 3, 4, 6, 7, 10];
        assert!(is_open_packing_fast(&g3, &s).unwrap().valid);
        assert!(is_open_packing_naive(&g3, &s).unwrap().valid);
    }

    #[test]
    fn total_domination() {
        let c6 = c(6);
        assert!(is_total_dominating(&c6, &[0, 1, 3, 4]).unwrap().valid);
        let res = is_total_dominating(&c6, &[0, 1]).unwrap();
        assert_eq!(res.witness, Some(Violation::Undominated { vertex: 3 }));
        // isolated vertices are never dominated, even by the full vertex set
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(!is_total_dominating(&g, &[0, 1, 2]).unwrap().valid);
    }

    #[test]
    fn independence() {
        let c5 = c(5);
        assert!(is_independent_set(&c5, &[0, 2]).unwrap().valid);
        let k3 = generators::gen_complete(3).unwrap();
        assert_eq!(
            is_independent_set(&k3, &[0, 1]).unwrap().witness,
            Some(Violation::EdgeInSet { a: 0, b: 1 })
        );
        assert!(is_independent_set(&k3, &[]).unwrap().valid);
    }

    #[test]
    fn matchings() {
        let mg = Multigraph::new(
            4,
            vec![
                (0, 1, "a".into()),
                (0, 1, "b".into()),
                (2, 3, "c".into()),
            ],
        )
        .unwrap();
        assert!(is_matching(&mg, &["a".into(), "c".into()]).unwrap().valid);
        let res = is_matching(&mg, &["a".into(), "b".into()]).unwrap();
        assert!(!res.valid);
        assert!(is_matching(&mg, &[]).unwrap().valid);
        assert!(is_matching(&mg, &["zzz".into()]).is_err());
        assert!(is_matching(&mg, &["a".into(), "a".into()]).is_err());
    }

    #[test]
    fn hitting_sets() {
        // the 3-set family from the worked hitting-set example
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
        assert!(is_hitting_set(&inst, &[2, 4]).unwrap().valid);
        let res = is_hitting_set(&inst, &[0]).unwrap();
        assert_eq!(res.witness, Some(Violation::UnhitSet { set_index: 1 }));
        // {0} also misses the last set {1,3,4}
        assert!(!is_hitting_set(&inst, &[0, 2]).unwrap().valid);
        let all: Vec<usize> = (0..6).collect();
        assert!(is_hitting_set(&inst, &all).unwrap().valid);
        assert!(is_hitting_set(&inst, &[17]).is_err());
    }

    #[test]
    fn rdm_certificates() {
        // r=4, q=3 worked example: five 4-tuples over {0,1,2}
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
        assert!(is_r_dimensional_matching(&inst, &[1, 2, 4]).unwrap().valid);
        let res = is_r_dimensional_matching(&inst, &[0, 2, 4]).unwrap();
        assert!(matches!(
            res.witness,
            Some(Violation::CoordinateClash { .. })
        ));
        let res = is_r_dimensional_matching(&inst, &[1, 2]).unwrap();
        assert_eq!(
            res.witness,
            Some(Violation::WrongCardinality { got: 2, want: 3 })
        );
        let single = RdmInstance::new(3, 1, vec![vec![0, 0, 0]]).unwrap();
        assert!(is_r_dimensional_matching(&single, &[0]).unwrap().valid);
    }
}
