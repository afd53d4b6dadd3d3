//! The five hardness constructions as executable transformations, with
//! provenance-labeled outputs and bidirectional certificate mappers.
//!
//! Each construction records a [`Role`] per output vertex so the mappers
//! can translate certificates without re-deriving provenance, and each
//! mapper validates its input certificate before translating and its
//! output certificate after.

use crate::certify;
use crate::graph::{Graph, GraphError, Multigraph, SplitPartition};
use crate::oracle::{HittingSetInstance, RdmInstance};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("certificate is not a valid {expected}: {detail}")]
    InvalidCertificate { expected: &'static str, detail: String },
    #[error("certificate has size {got}, expected {want}")]
    WrongSize { got: usize, want: usize },
    #[error("arity r = {0} below the construction's minimum {1}")]
    ArityTooSmall(usize, usize),
    #[error("independent-set vertex {vertex} has degree {degree}, outside 1..=2")]
    BadIndependentDegree { vertex: usize, degree: usize },
    #[error("split partition does not fit the graph")]
    BadPartition,
    #[error("unknown edge label {0:?}")]
    UnknownEdgeLabel(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Certify(#[from] certify::CertifyError),
}

/// Provenance of an output vertex: which source-instance entity it stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Role {
    /// Vertex u_i of the source graph.
    SourceVertex(usize),
    /// The vertex standing for source edge (u, u'), u < u'.
    SourceEdge(usize, usize),
    /// Pendant-completion vertex v_i for the degree-1 source vertex u_i.
    Pendant(usize),
    /// The auxiliary vertices x, y, z of the split-graph construction.
    AuxX,
    AuxY,
    AuxZ,
    /// Element u of a hitting-set universe.
    Element(usize),
    /// The hub vertices x_1..x_r (0-based index) of the hitting-set construction.
    HubX(usize),
    /// The hub pendant y of the hitting-set construction.
    HubY,
    /// Coordinate vertex z_(value, axis) of the dimensional-matching construction.
    Coordinate { value: usize, axis: usize },
    /// Tuple vertex y_w for tuple index w.
    Tuple(usize),
}

/// Output of constructions 1–4: a graph with per-vertex provenance and,
/// for the split-graph constructions, the intended partition.
#[derive(Debug, Clone)]
pub struct ReductionInstance {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub partition: Option<SplitPartition>,
}

impl ReductionInstance {
    /// Output vertices standing for source vertices, as (output, source) pairs.
    pub fn source_vertices(&self) -> Vec<(usize, usize)> {
        self.roles
            .iter()
            .enumerate()
            .filter_map(|(v, role)| match role {
                Role::SourceVertex(i) => Some((v, *i)),
                _ => None,
            })
            .collect()
    }
}

fn fail(expected: &'static str, witness: &certify::CertifyResult) -> ReductionError {
    ReductionError::InvalidCertificate {
        expected,
        detail: format!("{:?}", witness.witness),
    }
}

/// Reduction from independent set to open packing on K_{1,3}-free graphs.
///
/// Replaces each source edge uu' with a path u–e–u', completes the edge set
/// incident to each source vertex into a clique (the line-graph edges), and
/// attaches a triangle-completing pendant v_i to every degree-1 source
/// vertex. The output layout is: source vertices first (same indices),
/// then one vertex per source edge, then the pendants.
pub fn construct1(g: &Graph) -> ReductionInstance {
    let n = g.n();
    let edges_src = g.edges();
    let m = edges_src.len();
    let edge_vertex: BTreeMap<(usize, usize), usize> = edges_src
        .iter()
        .enumerate()
        .map(|(j, &e)| (e, n + j))
        .collect();
    let mut roles: Vec<Role> = (0..n).map(Role::SourceVertex).collect();
    roles.extend(edges_src.iter().map(|&(u, v)| Role::SourceEdge(u, v)));
    let mut labels: Vec<String> = (0..n).map(|i| format!("u_{}", i + 1)).collect();
    labels.extend((0..m).map(|j| format!("e_{}", j + 1)));

    let mut out_edges: Vec<(usize, usize)> = Vec::new();
    // E1: source vertex to each incident edge vertex
    for (&(u, v), &ev) in &edge_vertex {
        out_edges.push((u, ev));
        out_edges.push((v, ev));
    }
    // E2: line-graph edges — edges sharing a source endpoint
    for u in 0..n {
        let incident: Vec<usize> = g
            .neighbors(u)
            .iter()
            .map(|&v| edge_vertex[&(u.min(v), u.max(v))])
            .collect();
        for (i, &a) in incident.iter().enumerate() {
            for &b in &incident[i + 1..] {
                out_edges.push((a.min(b), a.max(b)));
            }
        }
    }
    // E3 and E4: pendant completion at degree-1 source vertices
    let mut next = n + m;
    for u in 0..n {
        if g.degree(u) == 1 {
            let w = g.neighbors(u)[0];
            let ev = edge_vertex[&(u.min(w), u.max(w))];
            out_edges.push((u, next));
            out_edges.push((ev, next));
            roles.push(Role::Pendant(u));
            labels.push(format!("v_{}", u + 1));
            next += 1;
        }
    }
    let graph = Graph::new(next, &out_edges)
        .expect("constructed edges in range")
        .with_labels(labels);
    ReductionInstance {
        graph,
        roles,
        partition: None,
    }
}

/// Turns an open packing in a construction-1 output into a same-size
/// independent set of the source graph `g`, by the two-phase swap
/// procedure: pendants v_i swap to their source vertex u_i, then edge
/// vertices swap to their lexicographically smaller endpoint. Every
/// intermediate set is re-verified as an open packing.
pub fn normalize_op_c1(
    g: &Graph,
    inst: &ReductionInstance,
    s: &[usize],
) -> Result<Vec<usize>, ReductionError> {
    let check = |set: &[usize]| -> Result<(), ReductionError> {
        let res = certify::is_open_packing_fast(&inst.graph, set)?;
        if !res.valid {
            return Err(fail("open packing", &res));
        }
        Ok(())
    };
    check(s)?;
    let mut current: Vec<usize> = s.to_vec();
    // Phase 1: v_i → u_i
    for pos in 0..current.len() {
        if let Role::Pendant(i) = inst.roles[current[pos]] {
            current[pos] = i;
            check(&current)?;
        }
    }
    // Phase 2: edge vertex → smaller endpoint
    for pos in 0..current.len() {
        if let Role::SourceEdge(u, _) = inst.roles[current[pos]] {
            current[pos] = u;
            check(&current)?;
        }
    }
    debug_assert!(current
        .iter()
        .all(|&v| matches!(inst.roles[v], Role::SourceVertex(_))));
    let mut out = current;
    out.sort_unstable();
    let res = certify::is_independent_set(g, &out)?;
    if !res.valid {
        return Err(fail("independent set", &res));
    }
    Ok(out)
}

/// Reduction from independent set to open packing on K_{1,4}-free split
/// graphs. Subdivides each edge, adds x–y, x–z, and completes the edge
/// vertices plus {y, z} into a clique. Layout: source vertices (same
/// indices), edge vertices, then x, y, z.
pub fn construct2(g: &Graph) -> ReductionInstance {
    let n = g.n();
    let edges_src = g.edges();
    let m = edges_src.len();
    let (x, y, z) = (n + m, n + m + 1, n + m + 2);
    let mut roles: Vec<Role> = (0..n).map(Role::SourceVertex).collect();
    roles.extend(edges_src.iter().map(|&(u, v)| Role::SourceEdge(u, v)));
    roles.extend([Role::AuxX, Role::AuxY, Role::AuxZ]);
    let mut labels: Vec<String> = (0..n).map(|i| format!("u_{}", i + 1)).collect();
    labels.extend((0..m).map(|j| format!("e_{}", j + 1)));
    labels.extend(["x".to_string(), "y".to_string(), "z".to_string()]);

    let mut out_edges = vec![(x, y), (x, z)];
    for (j, &(u, v)) in edges_src.iter().enumerate() {
        out_edges.push((u, n + j));
        out_edges.push((v, n + j));
    }
    // the clique on E(G) ∪ {y, z}
    let mut clique: Vec<usize> = (n..n + m).collect();
    clique.push(y);
    clique.push(z);
    for (i, &a) in clique.iter().enumerate() {
        for &b in &clique[i + 1..] {
            out_edges.push((a, b));
        }
    }
    let mut independent: Vec<usize> = (0..n).collect();
    independent.push(x);
    clique.sort_unstable();
    let graph = Graph::new(n + m + 3, &out_edges)
        .expect("constructed edges in range")
        .with_labels(labels);
    ReductionInstance {
        graph,
        roles,
        partition: Some(SplitPartition {
            clique,
            independent,
        }),
    }
}

/// Strips the clique side and x from an open packing of a construction-2
/// output; the remainder lies in the source vertices and is independent in
/// the source graph, losing at most one element.
pub fn normalize_op_c2(
    g: &Graph,
    inst: &ReductionInstance,
    s: &[usize],
) -> Result<Vec<usize>, ReductionError> {
    let res = certify::is_open_packing_fast(&inst.graph, s)?;
    if !res.valid {
        return Err(fail("open packing", &res));
    }
    let mut out: Vec<usize> = s
        .iter()
        .copied()
        .filter(|&v| matches!(inst.roles[v], Role::SourceVertex(_)))
        .collect();
    debug_assert!(s.len() - out.len() <= 1);
    out.sort_unstable();
    let res = certify::is_independent_set(g, &out)?;
    if !res.valid {
        return Err(fail("independent set", &res));
    }
    Ok(out)
}

/// Reduction from r-Hitting Set to total domination on I_r-split graphs.
/// Layout: elements of U first (same indices), the hub clique vertices
/// x_1..x_r, one z_W per member set, then the hub pendant y.
pub fn construct3(inst: &HittingSetInstance) -> Result<ReductionInstance, ReductionError> {
    if inst.r < 2 {
        return Err(ReductionError::ArityTooSmall(inst.r, 2));
    }
    let u_size = inst.universe_size;
    let r = inst.r;
    let z_base = u_size + r;
    let y = z_base + inst.sets.len();
    let mut roles: Vec<Role> = (0..u_size).map(Role::Element).collect();
    roles.extend((0..r).map(Role::HubX));
    roles.extend((0..inst.sets.len()).map(Role::Tuple));
    roles.push(Role::HubY);
    let mut labels: Vec<String> = (0..u_size).map(|i| format!("u_{}", i + 1)).collect();
    labels.extend((0..r).map(|i| format!("x_{}", i + 1)));
    labels.extend((0..inst.sets.len()).map(|j| format!("z_W{}", j + 1)));
    labels.push("y".to_string());

    let mut edges = Vec::new();
    for a in 0..z_base {
        for b in a + 1..z_base {
            edges.push((a, b));
        }
    }
    for (j, set) in inst.sets.iter().enumerate() {
        for &u in set {
            edges.push((u, z_base + j));
        }
    }
    for i in 0..r {
        edges.push((u_size + i, y));
    }
    let clique: Vec<usize> = (0..z_base).collect();
    let independent: Vec<usize> = (z_base..=y).collect();
    let graph = Graph::new(y + 1, &edges)
        .expect("constructed edges in range")
        .with_labels(labels);
    Ok(ReductionInstance {
        graph,
        roles,
        partition: Some(SplitPartition {
            clique,
            independent,
        }),
    })
}

/// Forward mapper for construction 3: a total dominating set of size k+1
/// restricts to a hitting set of size at most k.
pub fn map_tds_c3(
    hs: &HittingSetInstance,
    inst: &ReductionInstance,
    d: &[usize],
) -> Result<Vec<usize>, ReductionError> {
    let res = certify::is_total_dominating(&inst.graph, d)?;
    if !res.valid {
        return Err(fail("total dominating set", &res));
    }
    let mut out: Vec<usize> = d
        .iter()
        .copied()
        .filter(|&v| matches!(inst.roles[v], Role::Element(_)))
        .collect();
    out.sort_unstable();
    let res = certify::is_hitting_set(hs, &out)?;
    if !res.valid {
        return Err(fail("hitting set", &res));
    }
    Ok(out)
}

/// Backward mapper for construction 3: a hitting set of size k lifts to
/// the total dominating set X ∪ {x_1} of size k+1.
pub fn map_hs_c3(
    hs: &HittingSetInstance,
    inst: &ReductionInstance,
    x: &[usize],
) -> Result<Vec<usize>, ReductionError> {
    let res = certify::is_hitting_set(hs, x)?;
    if !res.valid {
        return Err(fail("hitting set", &res));
    }
    let mut out: Vec<usize> = x.to_vec();
    out.push(hs.universe_size); // x_1
    out.sort_unstable();
    let res = certify::is_total_dominating(&inst.graph, &out)?;
    if !res.valid {
        return Err(fail("total dominating set", &res));
    }
    Ok(out)
}

/// Reduction from r-Dimensional Matching to open packing on I_r-split
/// graphs. Layout: the r·q coordinate vertices z_(x, i) at index i·q + x
/// forming the clique, then one tuple vertex y_w per tuple.
pub fn construct4(inst: &RdmInstance) -> Result<ReductionInstance, ReductionError> {
    if inst.r < 3 {
        return Err(ReductionError::ArityTooSmall(inst.r, 3));
    }
    let (r, q) = (inst.r, inst.q);
    let c_size = r * q;
    let mut roles = Vec::with_capacity(c_size + inst.tuples.len());
    let mut labels = Vec::with_capacity(c_size + inst.tuples.len());
    for axis in 0..r {
        for value in 0..q {
            roles.push(Role::Coordinate { value, axis });
            labels.push(format!("z_({},{})", value, axis + 1));
        }
    }
    roles.extend((0..inst.tuples.len()).map(Role::Tuple));
    labels.extend((0..inst.tuples.len()).map(|w| format!("y_w{}", w + 1)));

    let mut edges = Vec::new();
    for a in 0..c_size {
        for b in a + 1..c_size {
            edges.push((a, b));
        }
    }
    for (w, tuple) in inst.tuples.iter().enumerate() {
        for (axis, &value) in tuple.iter().enumerate() {
            edges.push((axis * q + value, c_size + w));
        }
    }
    let clique: Vec<usize> = (0..c_size).collect();
    let independent: Vec<usize> = (c_size..c_size + inst.tuples.len()).collect();
    let graph = Graph::new(c_size + inst.tuples.len(), &edges)
        .expect("constructed edges in range")
        .with_labels(labels);
    Ok(ReductionInstance {
        graph,
        roles,
        partition: Some(SplitPartition {
            clique,
            independent,
        }),
    })
}

/// Maps a size-q open packing of a construction-4 output to an
/// r-dimensional matching. A packing inside the tuple side translates
/// directly; a packing touching the clique forces q = 1 and the instance's
/// unique tuple is the answer.
pub fn map_op_c4(
    rdm: &RdmInstance,
    inst: &ReductionInstance,
    s: &[usize],
) -> Result<Vec<usize>, ReductionError> {
    let res = certify::is_open_packing_fast(&inst.graph, s)?;
    if !res.valid {
        return Err(fail("open packing", &res));
    }
    if s.len() != rdm.q {
        return Err(ReductionError::WrongSize {
            got: s.len(),
            want: rdm.q,
        });
    }
    let touches_clique = s
        .iter()
        .any(|&v| matches!(inst.roles[v], Role::Coordinate { .. }));
    let l: Vec<usize> = if touches_clique {
        // a multi-vertex packing can never touch the clique; with q = 1
        // the instance has exactly one tuple
        if s.len() != 1 || rdm.tuples.len() != 1 {
            return Err(ReductionError::InvalidCertificate {
                expected: "tuple-side open packing",
                detail: format!("clique vertex in packing of size {}", s.len()),
            });
        }
        vec![0]
    } else {
        s.iter()
            .map(|&v| match inst.roles[v] {
                Role::Tuple(w) => w,
                _ => unreachable!("non-clique vertices are tuple vertices"),
            })
            .collect()
    };
    let res = certify::is_r_dimensional_matching(rdm, &l)?;
    if !res.valid {
        return Err(fail("r-dimensional matching", &res));
    }
    Ok(l)
}

/// Output of construction 5: the matching multigraph, with bookkeeping
/// linking its vertices and edge labels back to the source split graph.
#[derive(Debug, Clone)]
pub struct C5Instance {
    pub multigraph: Multigraph,
    /// Source vertex → multigraph vertex (clique vertices and degree-1
    /// independent vertices only).
    pub vertex_map: BTreeMap<usize, usize>,
    /// Edge label → the independent-side source vertex it stands for.
    pub edge_owner: BTreeMap<String, usize>,
}

/// Reduction from open packings inside the independent side of a split
/// graph with independent degrees 1..=2 to matchings: each degree-2
/// independent vertex becomes an edge between its two clique neighbors
/// (parallel edges kept), each degree-1 vertex becomes a pendant edge.
pub fn construct5(g: &Graph, part: &SplitPartition) -> Result<C5Instance, ReductionError> {
    if !part.is_valid(g) {
        return Err(ReductionError::BadPartition);
    }
    for &v in &part.independent {
        let degree = g.degree(v);
        if !(1..=2).contains(&degree) {
            return Err(ReductionError::BadIndependentDegree { vertex: v, degree });
        }
    }
    let mut vertex_map = BTreeMap::new();
    let mut labels = Vec::new();
    for &c in &part.clique {
        vertex_map.insert(c, labels.len());
        labels.push(format!("c_{c}"));
    }
    for &v in &part.independent {
        if g.degree(v) == 1 {
            vertex_map.insert(v, labels.len());
            labels.push(format!("j_{v}"));
        }
    }
    let mut edges = Vec::new();
    let mut edge_owner = BTreeMap::new();
    for &v in &part.independent {
        let label = format!("e_{v}");
        let endpoints = match g.neighbors(v) {
            [u] => (vertex_map[u], vertex_map[&v]),
            [u, w] => (vertex_map[u], vertex_map[w]),
            _ => unreachable!("independent degrees checked above"),
        };
        edges.push((endpoints.0, endpoints.1, label.clone()));
        edge_owner.insert(label, v);
    }
    let multigraph = Multigraph::new(labels.len(), edges)
        .expect("distinct labels, no loops")
        .with_vertex_labels(labels);
    Ok(C5Instance {
        multigraph,
        vertex_map,
        edge_owner,
    })
}

/// Forward mapper for construction 5: a matching F gives the open packing
/// S_F = {v ∈ I : e_v ∈ F} of the same size.
pub fn map_c5_matching_to_op(
    g: &Graph,
    inst: &C5Instance,
    f: &[String],
) -> Result<Vec<usize>, ReductionError> {
    let res = certify::is_matching(&inst.multigraph, f)?;
    if !res.valid {
        return Err(fail("matching", &res));
    }
    let mut out = Vec::with_capacity(f.len());
    for label in f {
        match inst.edge_owner.get(label) {
            Some(&v) => out.push(v),
            None => return Err(ReductionError::UnknownEdgeLabel(label.clone())),
        }
    }
    out.sort_unstable();
    let res = certify::is_open_packing_fast(g, &out)?;
    if !res.valid {
        return Err(fail("open packing", &res));
    }
    Ok(out)
}

/// Backward mapper for construction 5: an open packing S ⊆ I gives the
/// matching F_S = {e_v : v ∈ S} of the same size.
pub fn map_c5_op_to_matching(
    g: &Graph,
    inst: &C5Instance,
    s: &[usize],
) -> Result<Vec<String>, ReductionError> {
    let res = certify::is_open_packing_fast(g, s)?;
    if !res.valid {
        return Err(fail("open packing", &res));
    }
    let mut f = Vec::with_capacity(s.len());
    for &v in s {
        let label = format!("e_{v}");
        if !inst.edge_owner.contains_key(&label) {
            return Err(ReductionError::InvalidCertificate {
                expected: "independent-side open packing",
                detail: format!("vertex {v} is not an independent-side vertex"),
            });
        }
        f.push(label);
    }
    let res = certify::is_matching(&inst.multigraph, &f)?;
    if !res.valid {
        return Err(fail("matching", &res));
    }
    Ok(f)
}
