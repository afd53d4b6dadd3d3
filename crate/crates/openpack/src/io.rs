//! Text graph format and JSON certificate / instance schemas.
//!
//! Graphs travel as line-oriented text: a header `p <n> <m>`, one `e <u> <v>`
//! line per edge with **1-indexed** endpoints, and `c ...` comment lines.
//! JSON payloads (certificates, hitting-set and dimensional-matching
//! instances, reduction role sidecars) are **0-indexed**; the conversion is
//! owned entirely by this module.

use crate::graph::{Graph, GraphError};
use crate::oracle::{HittingSetInstance, OracleError, RdmInstance};
use crate::reductions::{ReductionInstance, Role};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("missing `p <n> <m>` header")]
    MissingHeader,
    #[error("header announced {expected} edges but {got} were listed")]
    EdgeCountMismatch { expected: usize, got: usize },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Instance(#[from] OracleError),
    #[error("unknown problem tag {0:?} (expected \"op\" or \"tds\")")]
    UnknownProblem(String),
}

/// Parses the line-oriented text format into a graph.
pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let kind = tokens.next().expect("non-empty line has a token");
        let parse_field = |tok: Option<&str>, what: &str| -> Result<usize, IoError> {
            tok.ok_or_else(|| IoError::Parse {
                line,
                message: format!("missing {what}"),
            })?
            .parse::<usize>()
            .map_err(|_| IoError::Parse {
                line,
                message: format!("{what} is not a non-negative integer"),
            })
        };
        match kind {
            "p" => {
                if header.is_some() {
                    return Err(IoError::Parse {
                        line,
                        message: "duplicate header".into(),
                    });
                }
                let n = parse_field(tokens.next(), "vertex count")?;
                let m = parse_field(tokens.next(), "edge count")?;
                header = Some((n, m));
            }
            "e" => {
                if header.is_none() {
                    return Err(IoError::MissingHeader);
                }
                let u = parse_field(tokens.next(), "first endpoint")?;
                let v = parse_field(tokens.next(), "second endpoint")?;
                if u == 0 || v == 0 {
                    return Err(IoError::Parse {
                        line,
                        message: "vertices are 1-indexed; 0 is out of range".into(),
                    });
                }
                edges.push((u - 1, v - 1));
            }
            other => {
                return Err(IoError::Parse {
                    line,
                    message: format!("unknown line kind {other:?}"),
                });
            }
        }
    }
    let (n, m) = header.ok_or(IoError::MissingHeader)?;
    if edges.len() != m {
        return Err(IoError::EdgeCountMismatch {
            expected: m,
            got: edges.len(),
        });
    }
    Ok(Graph::new(n, &edges)?)
}

/// Canonical serialization: header, then edges sorted with the smaller
/// endpoint first, 1-indexed. Parsing then re-serializing is byte-stable.
pub fn serialize_graph(g: &Graph) -> String {
    let mut edges = g.edges();
    edges.sort_unstable();
    let mut out = format!("p {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// A vertex-set certificate: `{"problem": "op"|"tds", "set": [..], "size": k}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificateJson {
    pub problem: String,
    pub set: Vec<usize>,
    pub size: usize,
}

impl CertificateJson {
    pub fn new(problem: &str, set: Vec<usize>) -> Self {
        CertificateJson {
            problem: problem.to_string(),
            size: set.len(),
            set,
        }
    }
}

pub fn parse_certificate(text: &str) -> Result<CertificateJson, IoError> {
    let cert: CertificateJson = serde_json::from_str(text)?;
    match cert.problem.as_str() {
        "op" | "tds" => Ok(cert),
        other => Err(IoError::UnknownProblem(other.to_string())),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct HittingSetJson {
    universe: usize,
    r: usize,
    sets: Vec<Vec<usize>>,
}

pub fn parse_hitting_set(text: &str) -> Result<HittingSetInstance, IoError> {
    let raw: HittingSetJson = serde_json::from_str(text)?;
    Ok(HittingSetInstance::new(raw.universe, raw.r, raw.sets)?)
}

pub fn serialize_hitting_set(inst: &HittingSetInstance) -> String {
    let raw = HittingSetJson {
        universe: inst.universe_size,
        r: inst.r,
        sets: inst.sets.clone(),
    };
    serde_json::to_string_pretty(&raw).expect("plain data serializes")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RdmJson {
    r: usize,
    q: usize,
    tuples: Vec<Vec<usize>>,
}

pub fn parse_rdm(text: &str) -> Result<RdmInstance, IoError> {
    let raw: RdmJson = serde_json::from_str(text)?;
    Ok(RdmInstance::new(raw.r, raw.q, raw.tuples)?)
}

pub fn serialize_rdm(inst: &RdmInstance) -> String {
    let raw = RdmJson {
        r: inst.r,
        q: inst.q,
        tuples: inst.tuples.clone(),
    };
    serde_json::to_string_pretty(&raw).expect("plain data serializes")
}

/// Role sidecar written next to a reduction's output graph: one role tag
/// per vertex, 0-indexed, plus the split partition when one is guaranteed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RolesJson {
    pub roles: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clique: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub independent: Option<Vec<usize>>,
}

fn role_tag(role: &Role) -> String {
    match role {
        Role::SourceVertex(i) => format!("source-vertex:{i}"),
        Role::SourceEdge(u, v) => format!("source-edge:{u}-{v}"),
        Role::Pendant(i) => format!("pendant:{i}"),
        Role::AuxX => "aux-x".to_string(),
        Role::AuxY => "aux-y".to_string(),
        Role::AuxZ => "aux-z".to_string(),
        Role::Element(u) => format!("element:{u}"),
        Role::HubX(i) => format!("hub-x:{i}"),
        Role::HubY => "hub-y".to_string(),
        Role::Coordinate { value, axis } => format!("coordinate:{value}@{axis}"),
        Role::Tuple(w) => format!("tuple:{w}"),
    }
}

pub fn roles_sidecar(inst: &ReductionInstance) -> RolesJson {
    RolesJson {
        roles: inst.roles.iter().map(role_tag).collect(),
        clique: inst.partition.as_ref().map(|p| p.clique.clone()),
        independent: inst.partition.as_ref().map(|p| p.independent.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn graph_round_trip() {
        let text = "c a six-cycle\np 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.m(), 6);
        let canonical = serialize_graph(&g);
        let reparsed = parse_graph(&canonical).unwrap();
        assert_eq!(serialize_graph(&reparsed), canonical);
    }

    #[test]
    fn graph_parse_errors() {
        assert!(matches!(parse_graph("e 1 2\n"), Err(IoError::MissingHeader)));
        assert!(matches!(
            parse_graph("p 3 2\ne 1 2\n"),
            Err(IoError::EdgeCountMismatch { expected: 2, got: 1 })
        ));
        assert!(parse_graph("p 3 1\ne 0 1\n").is_err());
        assert!(parse_graph("p 3 1\ne 1 4\n").is_err());
        assert!(parse_graph("p 3 1\nq 1 2\n").is_err());
        assert!(parse_graph("p 2 1\ne 1 1\n").is_err());
    }

    #[test]
    fn isolated_vertices_survive_round_trip() {
        let g = generators::gen_complete(1).unwrap();
        let text = serialize_graph(&g);
        assert_eq!(text, "p 1 0\n");
        assert_eq!(parse_graph(&text).unwrap().n(), 1);
    }

    #[test]
    fn certificate_json() {
        let cert = parse_certificate(r#"{"problem":"op","set":[0,3],"size":2}"#).unwrap();
        assert_eq!(cert.set, vec![0, 3]);
        assert!(parse_certificate(r#"{"problem":"vc","set":[],"size":0}"#).is_err());
        assert!(parse_certificate("not json").is_err());
    }

    #[test]
    fn instance_json_round_trips() {
        let hs = parse_hitting_set(
            r#"{"universe":6,"r":3,"sets":[[0,1,2],[2,4,5],[1,3,5],[0,3,4]]}"#,
        )
        .unwrap();
        assert_eq!(hs.sets.len(), 4);
        assert_eq!(parse_hitting_set(&serialize_hitting_set(&hs)).unwrap(), hs);
        let rdm =
            parse_rdm(r#"{"r":3,"q":3,"tuples":[[0,0,0],[1,1,1],[2,2,2],[0,1,2]]}"#).unwrap();
        assert_eq!(rdm.tuples.len(), 4);
        assert_eq!(parse_rdm(&serialize_rdm(&rdm)).unwrap(), rdm);
        // arity violation caught by instance validation
        assert!(parse_rdm(r#"{"r":3,"q":2,"tuples":[[0,1]]}"#).is_err());
    }
}
