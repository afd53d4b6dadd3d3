//! Claim-by-claim verification campaigns.
//!
//! Each `check_*` function sweeps one quantitative claim (checker
//! equivalence, duality, the bound table, tightness of the extremal
//! families, construction guarantees, ...) over exhaustive small graphs
//! and seeded random instances, returning a [`ClaimReport`] with a
//! counterexample dump on failure. The CLI's `scan` command and the
//! acceptance suite are both thin wrappers over this module.

use crate::certify;
use crate::generators::{self, SplitMix64};
use crate::graph::{Graph, Multigraph};
use crate::io;
use crate::oracle;
use crate::recognize;
use crate::reductions;
use crate::solvers::{self, ClassTag, Problem};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub pass: bool,
    pub checked: usize,
    pub detail: String,
}

impl ClaimReport {
    fn pass(claim: &str, checked: usize, detail: impl Into<String>) -> Self {
        ClaimReport {
            claim: claim.to_string(),
            pass: true,
            checked,
            detail: detail.into(),
        }
    }

    fn fail(claim: &str, checked: usize, detail: impl Into<String>) -> Self {
        ClaimReport {
            claim: claim.to_string(),
            pass: false,
            checked,
            detail: detail.into(),
        }
    }
}

/// Visits every labeled graph on exactly `n` vertices (one per subset of
/// the n·(n−1)/2 possible edges).
pub fn for_each_graph(n: usize, f: &mut dyn FnMut(&Graph)) {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let slots = pairs.len();
    assert!(slots < 30, "exhaustive sweep limited to small graphs");
    for mask in 0u32..(1u32 << slots) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).expect("edge list is well-formed");
        f(&g);
    }
}

fn subset_from_mask(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// True iff the set induces a disjoint union of K_1 and K_2 in `g`
/// (equivalently: every member has at most one neighbor inside the set) —
/// the shape every maximum open packing must have.
pub fn induces_k1_k2_union(g: &Graph, set: &[usize]) -> bool {
    set.iter().all(|&v| {
        g.neighbors(v)
            .iter()
            .filter(|w| set.binary_search(w).is_ok())
            .count()
            <= 1
    })
}

/// Fast checker ≡ naive checker over all labeled graphs on ≤ `max_n`
/// vertices and all vertex subsets.
pub fn check_fast_checker(max_n: usize) -> ClaimReport {
    let mut checked = 0;
    let mut failure = None;
    for n in 0..=max_n {
        for_each_graph(n, &mut |g| {
            if failure.is_some() {
                return;
            }
            for mask in 0u32..(1u32 << n) {
                let s = subset_from_mask(mask, n);
                let fast = certify::is_open_packing_fast(g, &s).unwrap().valid;
                let naive = certify::is_open_packing_naive(g, &s).unwrap().valid;
                checked += 1;
                if fast != naive {
                    failure = Some(format!(
                        "mismatch on {} with set {s:?}: fast={fast} naive={naive}",
                        io::serialize_graph(g).replace('\n', " ")
                    ));
                    return;
                }
            }
        });
    }
    match failure {
        None => ClaimReport::pass("fast-checker", checked, "fast ≡ naive on every subset"),
        Some(d) => ClaimReport::fail("fast-checker", checked, d),
    }
}

/// ρ° ≤ γ_t on every isolated-vertex-free graph: exhaustive on ≤ `max_n`
/// vertices plus `samples` random graphs per n ∈ 7..=10.
pub fn check_duality(max_n: usize, samples: usize, seed: u64) -> ClaimReport {
    fn test(g: &Graph, checked: &mut usize) -> Option<String> {
        if g.has_isolated_vertex() || g.n() == 0 {
            return None;
        }
        let rho = oracle::max_open_packing_bf(g).unwrap().len();
        let gt = oracle::min_total_dominating_bf(g).unwrap().len();
        *checked += 1;
        (rho > gt).then(|| {
            format!(
                "ρ°={rho} > γ_t={gt} on {}",
                io::serialize_graph(g).replace('\n', " ")
            )
        })
    }
    let mut checked = 0;
    let mut failure: Option<String> = None;
    for n in 1..=max_n {
        for_each_graph(n, &mut |g| {
            if failure.is_none() {
                failure = test(g, &mut checked);
            }
        });
    }
    let mut rng = SplitMix64::new(seed);
    for n in 7..=10 {
        let mut found = 0;
        while found < samples && failure.is_none() {
            let p = 0.15 + 0.7 * rng.next_f64();
            let g = generators::gen_random_graph(n, p, rng.next_u64());
            if g.has_isolated_vertex() {
                continue;
            }
            found += 1;
            failure = test(&g, &mut checked);
        }
    }
    match failure {
        None => ClaimReport::pass("duality", checked, "ρ° ≤ γ_t everywhere"),
        Some(d) => ClaimReport::fail("duality", checked, d),
    }
}

/// Open packings of G are exactly the independent sets of the
/// neighborhood graph, over all labeled graphs on ≤ `max_n` vertices and
/// all subsets.
pub fn check_neighborhood_graph(max_n: usize) -> ClaimReport {
    let mut checked = 0;
    let mut failure = None;
    for n in 0..=max_n {
        for_each_graph(n, &mut |g| {
            if failure.is_some() {
                return;
            }
            let ng = recognize::neighborhood_graph(g);
            for mask in 0u32..(1u32 << n) {
                let s = subset_from_mask(mask, n);
                let packing = certify::is_open_packing_fast(g, &s).unwrap().valid;
                let indep = certify::is_independent_set(&ng, &s).unwrap().valid;
                checked += 1;
                if packing != indep {
                    failure = Some(format!(
                        "set {s:?} on {}: packing={packing} independent={indep}",
                        io::serialize_graph(g).replace('\n', " ")
                    ));
                    return;
                }
            }
        });
    }
    match failure {
        None => ClaimReport::pass(
            "neighborhood-graph",
            checked,
            "packings ≡ independent sets of G^[o]",
        ),
        Some(d) => ClaimReport::fail("neighborhood-graph", checked, d),
    }
}

/// Samples a random connected (P_t ∪ sK_1)-free graph, or gives up after
/// `attempts` rejections.
fn sample_class_member(
    t: usize,
    s: usize,
    rng: &mut SplitMix64,
    attempts: usize,
) -> Option<Graph> {
    for _ in 0..attempts {
        let n = 3 + rng.next_below(6);
        // sparse patterns need dense hosts to be avoided; bias upward
        let p = 0.35 + 0.6 * rng.next_f64();
        let g = generators::gen_random_graph(n, p, rng.next_u64());
        if !g.is_connected() {
            continue;
        }
        if recognize::is_pt_union_sk1_free(&g, t, s).unwrap().0 {
            return Some(g);
        }
    }
    None
}

/// Random connected class members never exceed the closed-form bound.
/// `class` is tested via (P_t ∪ sK_1)-freeness; rK_1-free uses t = 1.
pub fn check_bound(problem: Problem, class: ClassTag, samples: usize, seed: u64) -> ClaimReport {
    let name = format!("bound:{problem}:{class}");
    let entry = match solvers::bound_table(problem, class) {
        Ok(e) => e,
        Err(e) => return ClaimReport::fail(&name, 0, e.to_string()),
    };
    let (t, s) = match class {
        ClassTag::PtRk1 { t, r } => (t, r),
        ClassTag::Rk1Free { r } => (1, r - 1),
    };
    let mut rng = SplitMix64::new(seed);
    let mut checked = 0;
    for _ in 0..samples {
        let Some(g) = sample_class_member(t, s, &mut rng, 20_000) else {
            return ClaimReport::fail(
                &name,
                checked,
                "could not sample enough class members".to_string(),
            );
        };
        let value = match problem {
            Problem::OpenPacking => oracle::max_open_packing_bf(&g).unwrap().len(),
            Problem::TotalDomination => oracle::min_total_dominating_bf(&g).unwrap().len(),
        };
        checked += 1;
        if value > entry.value {
            return ClaimReport::fail(
                &name,
                checked,
                format!(
                    "optimum {value} exceeds bound {} on {}",
                    entry.value,
                    io::serialize_graph(&g).replace('\n', " ")
                ),
            );
        }
    }
    ClaimReport::pass(
        &name,
        checked,
        format!("optimum ≤ {} on every sampled member", entry.value),
    )
}

/// ρ°(G_r) = γ_t(G_r) = 2r+1 for r in the given range.
pub fn check_tightness_gr(r_lo: usize, r_hi: usize) -> ClaimReport {
    let mut checked = 0;
    for r in r_lo..=r_hi {
        let g = generators::gen_gr(r).unwrap();
        let rho = oracle::max_open_packing_bf(&g).unwrap().len();
        let gt = oracle::min_total_dominating_bf(&g).unwrap().len();
        checked += 1;
        if rho != 2 * r + 1 || gt != 2 * r + 1 {
            return ClaimReport::fail(
                "tightness-gr",
                checked,
                format!("G_{r}: ρ°={rho}, γ_t={gt}, expected {}", 2 * r + 1),
            );
        }
    }
    ClaimReport::pass("tightness-gr", checked, "ρ° = γ_t = 2r+1 throughout")
}

/// ρ°(H_r) = 2(r−2) for r in the given range.
pub fn check_tightness_hr(r_lo: usize, r_hi: usize) -> ClaimReport {
    let mut checked = 0;
    for r in r_lo..=r_hi {
        let g = generators::gen_hr(r).unwrap();
        let rho = oracle::max_open_packing_bf(&g).unwrap().len();
        checked += 1;
        if rho != 2 * (r - 2) {
            return ClaimReport::fail(
                "tightness-hr",
                checked,
                format!("H_{r}: ρ°={rho}, expected {}", 2 * (r - 2)),
            );
        }
    }
    ClaimReport::pass("tightness-hr", checked, "ρ° = 2(r−2) throughout")
}

/// γ_t(C_6) = 4, γ_t(C_5) = 3, γ_t(K_n) = 2 for n = 2..=8.
pub fn check_tightness_small() -> ClaimReport {
    let mut checked = 0;
    let mut expect = |g: &Graph, want: usize, label: &str| -> Option<String> {
        let gt = oracle::min_total_dominating_bf(g).unwrap().len();
        checked += 1;
        (gt != want).then(|| format!("γ_t({label}) = {gt}, expected {want}"))
    };
    let cases: Vec<(Graph, usize, String)> = std::iter::once((
        generators::gen_cycle(6).unwrap(),
        4,
        "C_6".to_string(),
    ))
    .chain(std::iter::once((
        generators::gen_cycle(5).unwrap(),
        3,
        "C_5".to_string(),
    )))
    .chain((2..=8).map(|n| (generators::gen_complete(n).unwrap(), 2, format!("K_{n}"))))
    .collect();
    for (g, want, label) in &cases {
        if let Some(d) = expect(g, *want, label) {
            return ClaimReport::fail("tightness-small", checked, d);
        }
    }
    ClaimReport::pass("tightness-small", checked, "all small extremal values exact")
}

fn multigraph_from_pairs(n: usize, pairs: &[(usize, usize)]) -> Multigraph {
    let edges = pairs
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| (u, v, format!("e{i}")))
        .collect();
    Multigraph::new(n, edges).expect("pairs are well-formed")
}

/// Blossom engine ≡ brute force: exhaustive edge subsets of K_6 up to 8
/// edges (with doubled-edge variants for the small ones) plus `samples`
/// random multigraphs on ≤ 12 vertices.
pub fn check_matching_engine(samples: usize, seed: u64) -> ClaimReport {
    let mut pairs = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            pairs.push((u, v));
        }
    }
    let mut checked = 0;
    let compare = |mg: &Multigraph| -> Option<String> {
        let poly = solvers::max_matching_poly(mg).len();
        let bf = oracle::max_matching_bf(mg).unwrap().len();
        (poly != bf).then(|| format!("poly={poly} bf={bf} on edges {:?}", mg.edges()))
    };
    for mask in 0u32..(1u32 << pairs.len()) {
        if mask.count_ones() > 8 {
            continue;
        }
        let support: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let mg = multigraph_from_pairs(6, &support);
        checked += 1;
        if let Some(d) = compare(&mg) {
            return ClaimReport::fail("matching-engine", checked, d);
        }
        if support.len() <= 4 && !support.is_empty() {
            // parallel copies never change the matching size
            let doubled: Vec<(usize, usize)> =
                support.iter().chain(support.iter()).copied().collect();
            let mg = multigraph_from_pairs(6, &doubled);
            checked += 1;
            if let Some(d) = compare(&mg) {
                return ClaimReport::fail("matching-engine", checked, d);
            }
        }
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..samples {
        let n = 2 + rng.next_below(11);
        let m = 1 + rng.next_below(14);
        let edge_pairs: Vec<(usize, usize)> = (0..m)
            .filter_map(|_| {
                let u = rng.next_below(n);
                let v = rng.next_below(n);
                (u != v).then_some((u, v))
            })
            .collect();
        let mg = multigraph_from_pairs(n, &edge_pairs);
        checked += 1;
        if let Some(d) = compare(&mg) {
            return ClaimReport::fail("matching-engine", checked, d);
        }
    }
    ClaimReport::pass("matching-engine", checked, "blossom ≡ brute force")
}

/// Every maximum open packing induces a disjoint union of K_1 and K_2:
/// exhaustive over all labeled graphs on ≤ `max_n` vertices, every
/// optimum enumerated.
pub fn check_packing_shape(max_n: usize) -> ClaimReport {
    let mut checked = 0;
    let mut failure = None;
    for n in 1..=max_n {
        for_each_graph(n, &mut |g| {
            if failure.is_some() {
                return;
            }
            for s in oracle::all_max_open_packings(g).unwrap() {
                checked += 1;
                if !induces_k1_k2_union(g, &s) {
                    failure = Some(format!(
                        "optimum {s:?} on {} is not a K_1/K_2 union",
                        io::serialize_graph(g).replace('\n', " ")
                    ));
                    return;
                }
            }
        });
    }
    match failure {
        None => ClaimReport::pass(
            "packing-shape",
            checked,
            "every optimum induces a K_1/K_2 union",
        ),
        Some(d) => ClaimReport::fail("packing-shape", checked, d),
    }
}

/// Clique blowups of C_6, C_5 and of G_r's hub preserve the extremal
/// values and class membership.
pub fn check_blowup_closure(seed: u64) -> ClaimReport {
    let mut rng = SplitMix64::new(seed);
    let mut checked = 0;
    // C_6 blowups: γ_t stays 4, class stays (P_4 ∪ K_1)-free
    let c6 = generators::gen_cycle(6).unwrap();
    let mut c6_sizes: Vec<Vec<usize>> = vec![vec![1; 6], vec![3; 6]];
    for _ in 0..10 {
        c6_sizes.push((0..6).map(|_| 1 + rng.next_below(3)).collect());
    }
    for sizes in &c6_sizes {
        let b = generators::blowup(&c6, sizes).unwrap();
        let gt = oracle::min_tds_bounded(&b, 4).unwrap().map(|d| d.len());
        let member = recognize::is_pt_union_sk1_free(&b, 4, 1).unwrap().0;
        checked += 1;
        if gt != Some(4) || !member {
            return ClaimReport::fail(
                "blowup-closure",
                checked,
                format!("C_6 blowup {sizes:?}: γ_t={gt:?}, member={member}"),
            );
        }
    }
    // C_5 blowups: γ_t stays 3, class stays (P_3 ∪ K_1)-free
    let c5 = generators::gen_cycle(5).unwrap();
    let mut c5_sizes: Vec<Vec<usize>> = vec![vec![1; 5], vec![3; 5]];
    for _ in 0..10 {
        c5_sizes.push((0..5).map(|_| 1 + rng.next_below(3)).collect());
    }
    for sizes in &c5_sizes {
        let b = generators::blowup(&c5, sizes).unwrap();
        let gt = oracle::min_tds_bounded(&b, 3).unwrap().map(|d| d.len());
        let member = recognize::is_pt_union_sk1_free(&b, 3, 1).unwrap().0;
        checked += 1;
        if gt != Some(3) || !member {
            return ClaimReport::fail(
                "blowup-closure",
                checked,
                format!("C_5 blowup {sizes:?}: γ_t={gt:?}, member={member}"),
            );
        }
    }
    // G_r with its hub u replaced by a clique: ρ° = γ_t = 2r+1 persists
    for r in 1..=3 {
        let g = generators::gen_gr(r).unwrap();
        for hub_size in 2..=3 {
            let mut sizes = vec![1; g.n()];
            sizes[3 * r] = hub_size; // u sits after the r spine triples
            let b = generators::blowup(&g, &sizes).unwrap();
            let rho = oracle::max_open_packing_bf(&b).unwrap().len();
            let gt = oracle::min_tds_bounded(&b, 2 * r + 1).unwrap().map(|d| d.len());
            checked += 1;
            if rho != 2 * r + 1 || gt != Some(2 * r + 1) {
                return ClaimReport::fail(
                    "blowup-closure",
                    checked,
                    format!("G_{r} hub blowup {hub_size}: ρ°={rho}, γ_t={gt:?}"),
                );
            }
        }
    }
    ClaimReport::pass("blowup-closure", checked, "values and membership preserved")
}

/// Polynomial solver ≡ oracle on random members of its class.
pub fn check_poly_solver(which: &str, samples: usize, seed: u64) -> ClaimReport {
    let name = format!("poly-solver:{which}");
    let mut rng = SplitMix64::new(seed);
    let mut checked = 0;
    while checked < samples {
        let c_size = 2 + rng.next_below(5);
        let i_size = 1 + rng.next_below(6);
        let report = match which {
            "k13-split" => {
                let (lo, hi) = (1, c_size.min(3));
                let (g, part) =
                    generators::gen_random_split(c_size, i_size, (lo, hi), rng.next_u64())
                        .unwrap();
                if !g.is_connected() || !recognize::is_k1r_free(&g, 3).unwrap().0 {
                    continue;
                }
                let want = oracle::max_open_packing_bf(&g).unwrap().len();
                (solvers::solve_op_k13free_split(&g, &part).unwrap(), want, g)
            }
            "i1-split" => {
                let (g, part) =
                    generators::gen_random_split(c_size, i_size, (1, 1), rng.next_u64()).unwrap();
                if !g.is_connected() || g.n() < 2 {
                    continue;
                }
                let want = oracle::min_total_dominating_bf(&g).unwrap().len();
                (solvers::solve_tds_i1_split(&g, &part).unwrap(), want, g)
            }
            "deg12-split" => {
                let (g, part) =
                    generators::gen_random_split(c_size, i_size, (1, 2.min(c_size)), rng.next_u64())
                        .unwrap();
                if !g.is_connected() {
                    continue;
                }
                let want = oracle::max_open_packing_bf(&g).unwrap().len();
                (solvers::solve_op_split_deg12(&g, &part).unwrap(), want, g)
            }
            other => return ClaimReport::fail(&name, 0, format!("unknown solver tag {other:?}")),
        };
        let (report, want, g) = report;
        checked += 1;
        if report.optimum != want {
            return ClaimReport::fail(
                &name,
                checked,
                format!(
                    "solver said {} but oracle says {want} on {}",
                    report.optimum,
                    io::serialize_graph(&g).replace('\n', " ")
                ),
            );
        }
        if report.problem == Problem::OpenPacking
            && !induces_k1_k2_union(&g, &report.certificate)
        {
            return ClaimReport::fail(
                &name,
                checked,
                format!("certificate {:?} is not a K_1/K_2 union", report.certificate),
            );
        }
    }
    ClaimReport::pass(&name, checked, "solver ≡ oracle on every sample")
}

/// Exhaustive graphs on ≤ 5 vertices plus `samples` random graphs small
/// enough that reduction outputs stay within the oracle's vertex budget.
pub fn construction_source_suite(samples: usize, seed: u64) -> Vec<Graph> {
    let mut suite = Vec::new();
    for n in 1..=5 {
        for_each_graph(n, &mut |g| suite.push(g.clone()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut found = 0;
    while found < samples {
        let n = 4 + rng.next_below(5);
        let g = generators::gen_random_graph(n, 0.25, rng.next_u64());
        // keep the reduction output inside the oracle's vertex budget
        let pendants = g.vertices().filter(|&v| g.degree(v) == 1).count();
        if g.n() + g.m() + pendants > oracle::MAX_ORACLE_VERTICES {
            continue;
        }
        suite.push(g);
        found += 1;
    }
    suite
}

/// On every source graph in the suite, every oracle-maximum open packing
/// of the construction-1 output normalizes to a source-side independent
/// set of equal size.
pub fn check_normalizer(samples: usize, seed: u64) -> ClaimReport {
    let mut checked = 0;
    for g in construction_source_suite(samples, seed) {
        let inst = reductions::construct1(&g);
        for s in oracle::all_max_open_packings(&inst.graph).unwrap() {
            checked += 1;
            let normalized = reductions::normalize_op_c1(&g, &inst, &s);
            let ok = match normalized {
                Ok(sources) => {
                    sources.len() == s.len()
                        && certify::is_independent_set(&g, &sources).unwrap().valid
                }
                Err(_) => false,
            };
            if !ok {
                return ClaimReport::fail(
                    "normalizer",
                    checked,
                    format!(
                        "optimum {s:?} of {} failed to normalize",
                        io::serialize_graph(&g).replace('\n', " ")
                    ),
                );
            }
        }
    }
    ClaimReport::pass(
        "normalizer",
        checked,
        "every optimum normalizes to an equal-size source independent set",
    )
}

/// Construction 1 guarantee (α(G) = ρ°(G′)) and structure (K_{1,3}-free
/// output).
pub fn check_construction_c1(samples: usize, seed: u64) -> ClaimReport {
    let mut checked = 0;
    for g in construction_source_suite(samples, seed) {
        let inst = reductions::construct1(&g);
        let alpha = oracle::max_independent_set_bf(&g).unwrap().len();
        let rho = oracle::max_open_packing_bf(&inst.graph).unwrap().len();
        checked += 1;
        if g.n() > 0 && rho != alpha {
            return ClaimReport::fail(
                "construction-c1",
                checked,
                format!(
                    "α={alpha} but ρ°(G′)={rho} on {}",
                    io::serialize_graph(&g).replace('\n', " ")
                ),
            );
        }
        if !recognize::is_k1r_free(&inst.graph, 3).unwrap().0 {
            return ClaimReport::fail(
                "construction-c1",
                checked,
                format!("output not claw-free for {}", io::serialize_graph(&g)),
            );
        }
    }
    ClaimReport::pass(
        "construction-c1",
        checked,
        "guarantee and claw-freeness hold",
    )
}

/// Construction 2 guarantee (α(G)+1 = ρ°(G′)) and structure
/// (K_{1,4}-free split output).
pub fn check_construction_c2(samples: usize, seed: u64) -> ClaimReport {
    let mut checked = 0;
    for g in construction_source_suite(samples, seed) {
        if g.n() == 0 {
            continue;
        }
        let inst = reductions::construct2(&g);
        let alpha = oracle::max_independent_set_bf(&g).unwrap().len();
        let rho = oracle::max_open_packing_bf(&inst.graph).unwrap().len();
        checked += 1;
        if rho != alpha + 1 {
            return ClaimReport::fail(
                "construction-c2",
                checked,
                format!(
                    "α+1={} but ρ°(G′)={rho} on {}",
                    alpha + 1,
                    io::serialize_graph(&g).replace('\n', " ")
                ),
            );
        }
        let part = inst.partition.as_ref().expect("split construction");
        if !part.is_valid(&inst.graph) || !recognize::is_k1r_free(&inst.graph, 4).unwrap().0 {
            return ClaimReport::fail(
                "construction-c2",
                checked,
                format!("output structure violated for {}", io::serialize_graph(&g)),
            );
        }
    }
    ClaimReport::pass("construction-c2", checked, "guarantee and structure hold")
}

/// Construction 3 guarantee: minimum hitting set k ⇔ γ_t(G′) = k+1; the
/// output is I_r-split.
pub fn check_construction_c3(samples: usize, seed: u64) -> ClaimReport {
    let mut rng = SplitMix64::new(seed);
    let mut checked = 0;
    while checked < samples {
        let u_size = 3 + rng.next_below(4);
        let r = 2 + rng.next_below(2);
        if r > u_size {
            continue;
        }
        let set_count = 2 + rng.next_below(4);
        let Ok(hs) = generators::gen_random_hitting_set(u_size, set_count, r, rng.next_u64())
        else {
            continue;
        };
        let inst = reductions::construct3(&hs).unwrap();
        let k = oracle::min_hitting_set_bf(&hs).unwrap().len();
        let gt = oracle::min_total_dominating_bf(&inst.graph).unwrap().len();
        checked += 1;
        if gt != k + 1 {
            return ClaimReport::fail(
                "construction-c3",
                checked,
                format!("hitting set {k} but γ_t={gt} on {hs:?}"),
            );
        }
        if recognize::is_ir_split(&inst.graph, r).unwrap().is_none() {
            return ClaimReport::fail(
                "construction-c3",
                checked,
                format!("output not I_{r}-split on {hs:?}"),
            );
        }
    }
    ClaimReport::pass("construction-c3", checked, "γ_t = k+1 and I_r-split hold")
}

/// Construction 4 guarantee: an r-dimensional matching of size q exists
/// iff ρ°(G′) ≥ q; the output is I_r-split.
pub fn check_construction_c4(samples: usize, seed: u64) -> ClaimReport {
    let mut rng = SplitMix64::new(seed);
    let mut checked = 0;
    while checked < samples {
        let q = 2 + rng.next_below(2);
        let r = 3;
        let tuple_count = q + rng.next_below(6);
        let Ok(rdm) = generators::gen_random_rdm(q, r, tuple_count, rng.next_u64()) else {
            continue;
        };
        let inst = reductions::construct4(&rdm).unwrap();
        let yes = oracle::max_rdm_bf(&rdm).unwrap().len() >= q;
        let rho = oracle::max_open_packing_bf(&inst.graph).unwrap().len();
        checked += 1;
        if yes != (rho >= q) {
            return ClaimReport::fail(
                "construction-c4",
                checked,
                format!("yes={yes} but ρ°={rho} (q={q}) on {rdm:?}"),
            );
        }
        if recognize::is_ir_split(&inst.graph, r).unwrap().is_none() {
            return ClaimReport::fail(
                "construction-c4",
                checked,
                format!("output not I_{r}-split on {rdm:?}"),
            );
        }
    }
    ClaimReport::pass("construction-c4", checked, "ρ° ≥ q ⇔ yes and I_r-split hold")
}

/// Construction 5 guarantee: α′(G′) equals the maximum open packing
/// contained in the independent side, whenever that maximum is ≥ 2;
/// checked on random degree-{1,2} split graphs.
pub fn check_construction_c5(samples: usize, seed: u64) -> ClaimReport {
    let mut rng = SplitMix64::new(seed);
    let mut checked = 0;
    while checked < samples {
        let c_size = 2 + rng.next_below(5);
        let i_size = 1 + rng.next_below(6);
        let (g, part) =
            generators::gen_random_split(c_size, i_size, (1, 2.min(c_size)), rng.next_u64())
                .unwrap();
        if !g.is_connected() {
            continue;
        }
        let inst = reductions::construct5(&g, &part).unwrap();
        let alpha_prime = oracle::max_matching_bf(&inst.multigraph).unwrap().len();
        // largest open packing using only independent-side vertices
        let mut best_i = 0usize;
        let i = &part.independent;
        for mask in 0u32..(1u32 << i.len()) {
            let s: Vec<usize> = i
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if certify::is_open_packing_fast(&g, &s).unwrap().valid {
                best_i = best_i.max(s.len());
            }
        }
        checked += 1;
        if best_i >= 2 && alpha_prime != best_i {
            return ClaimReport::fail(
                "construction-c5",
                checked,
                format!(
                    "α′={alpha_prime} but best I-side packing {best_i} on {}",
                    io::serialize_graph(&g).replace('\n', " ")
                ),
            );
        }
    }
    ClaimReport::pass(
        "construction-c5",
        checked,
        "α′ matches the I-side packing maximum",
    )
}

pub const CLAIM_NAMES: &[&str] = &[
    "fast-checker",
    "duality",
    "neighborhood-graph",
    "bound-table",
    "tightness-gr",
    "tightness-hr",
    "tightness-small",
    "matching-engine",
    "packing-shape",
    "blowup-closure",
    "poly-solvers",
    "construction-c1",
    "construction-c2",
    "construction-c3",
    "construction-c4",
    "construction-c5",
    "normalizer",
];

/// Runs one named claim at the given scale. `samples` applies to the
/// randomized campaigns; exhaustive sweeps ignore it.
pub fn run_claim(name: &str, samples: usize, seed: u64) -> Option<Vec<ClaimReport>> {
    let reports = match name {
        "fast-checker" => vec![check_fast_checker(6)],
        "duality" => vec![check_duality(6, samples.min(200), seed)],
        "neighborhood-graph" => vec![check_neighborhood_graph(6)],
        "bound-table" => {
            let mut out = Vec::new();
            for problem in [Problem::OpenPacking, Problem::TotalDomination] {
                for t in 2..=4 {
                    for r in 1..=2 {
                        out.push(check_bound(
                            problem,
                            ClassTag::PtRk1 { t, r },
                            samples,
                            seed ^ (t * 10 + r) as u64,
                        ));
                    }
                }
            }
            out
        }
        "tightness-gr" => vec![check_tightness_gr(1, 5)],
        "tightness-hr" => vec![check_tightness_hr(3, 7)],
        "tightness-small" => vec![check_tightness_small()],
        "matching-engine" => vec![check_matching_engine(samples, seed)],
        "packing-shape" => vec![check_packing_shape(5)],
        "blowup-closure" => vec![check_blowup_closure(seed)],
        "poly-solvers" => vec![
            check_poly_solver("k13-split", samples, seed),
            check_poly_solver("i1-split", samples, seed ^ 1),
            check_poly_solver("deg12-split", samples, seed ^ 2),
        ],
        "construction-c1" => vec![check_construction_c1(samples.min(100), seed)],
        "construction-c2" => vec![check_construction_c2(samples.min(100), seed)],
        "construction-c3" => vec![check_construction_c3(samples.min(100), seed)],
        "construction-c4" => vec![check_construction_c4(samples.min(100), seed)],
        "construction-c5" => vec![check_construction_c5(samples.min(200), seed)],
        "normalizer" => vec![check_normalizer(samples.min(100), seed)],
        _ => return None,
    };
    Some(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_sweep_counts() {
        let mut count = 0;
        for_each_graph(4, &mut |_| count += 1);
        assert_eq!(count, 64);
    }

    #[test]
    fn shape_helper() {
        let p4 = generators::gen_path(4).unwrap();
        assert!(induces_k1_k2_union(&p4, &[0, 1, 3]));
        assert!(!induces_k1_k2_union(&p4, &[0, 1, 2]));
    }

    #[test]
    fn small_claims_pass() {
        assert!(check_fast_checker(4).pass);
        assert!(check_neighborhood_graph(4).pass);
        assert!(check_duality(4, 5, 7).pass);
        assert!(check_packing_shape(4).pass);
        assert!(check_tightness_small().pass);
        assert!(check_tightness_gr(1, 2).pass);
        assert!(check_tightness_hr(3, 4).pass);
    }

    #[test]
    fn randomized_claims_pass_at_small_scale() {
        assert!(check_bound(Problem::OpenPacking, ClassTag::PtRk1 { t: 4, r: 1 }, 20, 11).pass);
        assert!(check_matching_engine(20, 3).pass);
        assert!(check_poly_solver("k13-split", 20, 5).pass);
        assert!(check_poly_solver("i1-split", 20, 6).pass);
        assert!(check_poly_solver("deg12-split", 20, 7).pass);
        assert!(check_construction_c1(5, 9).pass);
        assert!(check_construction_c2(5, 9).pass);
        assert!(check_construction_c3(10, 9).pass);
        assert!(check_construction_c4(10, 9).pass);
        assert!(check_construction_c5(10, 9).pass);
        assert!(check_blowup_closure(13).pass);
    }
}
