//! Theorem registry and verification entry points.
//!
//! Every supported bound or identity about strong-product metric
//! dimension is registered under a short id. `verify` evaluates one
//! parameter point: it checks the hypothesis first (out-of-hypothesis
//! points are reported as skipped, never as verified), computes the
//! claimed value, establishes the measured value — preferring
//! polynomial certificates (twin classes for lower bounds, verified
//! landmark constructions for upper bounds) and falling back to the
//! exact solver — and compares the two. `sweep` runs a parameter grid
//! concurrently with a deterministic report order, and
//! `conjecture_sweep` tabulates evidence for the open question of
//! whether dim(P_n1 ⊠ P_n2) always meets its ceiling bound.

use std::collections::BTreeMap;
use std::sync::mpsc;
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use crate::constructions::{
    path_cycle_diagonal_generator, path_path_corner_generator, path_path_generator,
    path_path_lower_bound, resolved_generator, upper_bound_generator, ConstructionOutput,
};
use crate::families::{complete, cycle, grid, hypercube, path, random_tree, star, Family};
use crate::graph::{all_pairs_distances, Graph};
use crate::graph6::graph6_write;
use crate::products::strong_product;
use crate::report::{Status, StatusCounts, VerificationReport};
use crate::resolving::{is_metric_generator, twin_lower_bound, twin_partition, TwinMode};
use crate::self_resolved::{check_cycle_claim, is_self_k_resolved};
use crate::solver::metric_dimension_exact;
use crate::Error;

pub type Params = BTreeMap<String, String>;

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Node budget per exact solve; `None` means unlimited (orders
    /// above 64 then refuse to run).
    pub budget: Option<u64>,
}

/// One registered claim.
pub struct TheoremEntry {
    pub id: &'static str,
    pub statement: &'static str,
    pub params_help: &'static str,
    run: fn(&Params, &VerifyOptions) -> Result<Outcome, Error>,
}

struct Outcome {
    claimed: Option<i64>,
    measured: Option<i64>,
    status: Status,
    witness: Option<String>,
}

impl Outcome {
    fn skipped(reason: impl Into<String>) -> Self {
        Outcome {
            claimed: None,
            measured: None,
            status: Status::SkippedPrecondition,
            witness: Some(reason.into()),
        }
    }
}

pub fn registry() -> &'static [TheoremEntry] {
    &REGISTRY
}

pub fn find_theorem(id: &str) -> Result<&'static TheoremEntry, Error> {
    REGISTRY
        .iter()
        .find(|e| e.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

/// Verifies one theorem instance and returns its report.
pub fn verify(id: &str, params: &Params, opts: &VerifyOptions) -> Result<VerificationReport, Error> {
    let entry = find_theorem(id)?;
    let start = Instant::now();
    let outcome = (entry.run)(params, opts)?;
    Ok(VerificationReport {
        theorem_id: entry.id.to_string(),
        params: params.clone(),
        claimed: outcome.claimed,
        measured: outcome.measured,
        status: outcome.status,
        witness: outcome.witness,
        runtime_ms: start.elapsed().as_millis(),
    })
}

static REGISTRY: [TheoremEntry; 17] = [
    TheoremEntry {
        id: "T1",
        statement: "dim(G⊠H) <= n1*dim(H) + n2*dim(G) - dim(G)*dim(H)",
        params_help: "g=<family>, h=<family>",
        run: run_t1,
    },
    TheoremEntry {
        id: "T2",
        statement: "dim(G⊠H) <= n2*dim(G) when H is self k-resolved and diam(G) < k",
        params_help: "g=<family>, h=<family>, k=<int>",
        run: run_t2,
    },
    TheoremEntry {
        id: "C1",
        statement: "dim(P_n1 ⊠ C_n2) <= n2 when n2 >= 4 and n1-1 < floor(n2/2)",
        params_help: "n1=<int>, n2=<int>",
        run: run_c1,
    },
    TheoremEntry {
        id: "T3",
        statement: "dim(G⊠H) >= n1*n2 - t1*t2 for nontrivial connected factors",
        params_help: "g=<family>, h=<family>",
        run: run_t3,
    },
    TheoremEntry {
        id: "C2",
        statement: "dim(G⊠H) >= n2*(n1 - t1) for nontrivial connected G",
        params_help: "g=<family>, h=<family>",
        run: run_c2,
    },
    TheoremEntry {
        id: "T4",
        statement: "dim(G⊠H) = n2*(n1 - t1) when H is self k-resolved, diam(G) < k, dim(G) = n1 - t1",
        params_help: "g=<family>, h=<family>, k=<int>",
        run: run_t4,
    },
    TheoremEntry {
        id: "L1",
        statement: "a nontrivial connected graph is self 2-resolved iff it has no true twins (exhaustive over order n)",
        params_help: "n=<int in 2..=7>",
        run: run_l1,
    },
    TheoremEntry {
        id: "C3",
        statement: "dim(K_n1 ⊠ H) = n2*(n1 - 1) when H (order n2 >= 3) has no true twins",
        params_help: "n1=<int>, h=<family>",
        run: run_c3,
    },
    TheoremEntry {
        id: "R2a",
        statement: "dim(K_n1 ⊠ T) = n2*(n1 - 1) for trees of order n2 >= 3 (path, star, seeded sample)",
        params_help: "n1=<int>, n2=<int>",
        run: run_r2a,
    },
    TheoremEntry {
        id: "R2b",
        statement: "dim(K_n1 ⊠ C_n2) = n2*(n1 - 1) for n2 >= 4",
        params_help: "n1=<int>, n2=<int>",
        run: run_r2b,
    },
    TheoremEntry {
        id: "R2c",
        statement: "dim(K_n1 ⊠ Q_r) = 2^r*(n1 - 1) for r >= 2",
        params_help: "n1=<int>, r=<int>",
        run: run_r2c,
    },
    TheoremEntry {
        id: "R2d",
        statement: "dim(K_n1 ⊠ (P_n □ P_m)) = n*m*(n1 - 1) for n, m >= 2",
        params_help: "n1=<int>, n=<int>, m=<int>",
        run: run_r2d,
    },
    TheoremEntry {
        id: "T5",
        statement: "floor((n1+n2-2)/(n1-1)) <= dim(P_n1 ⊠ P_n2) <= ceil((n1+n2-2)/(n1-1)) for 2 <= n1 < n2",
        params_help: "n1=<int>, n2=<int>",
        run: run_t5,
    },
    TheoremEntry {
        id: "T6",
        statement: "dim(P_n ⊠ P_n) = 3 for n >= 2",
        params_help: "n=<int>",
        run: run_t6,
    },
    TheoremEntry {
        id: "T7",
        statement: "dim(P_n1 ⊠ C_n2) <= n1 when (n1-1)/2 >= floor(n2/2) >= 2",
        params_help: "n1=<int>, n2=<int>",
        run: run_t7,
    },
    TheoremEntry {
        id: "CL1",
        statement: "on C_n, vertices equidistant from one endpoint of an edge differ in distance to the other (n >= 3)",
        params_help: "n=<int>",
        run: run_cl1,
    },
    TheoremEntry {
        id: "RM1",
        statement: "d_{G⊠H}((a,b),(c,d)) = max(d_G(a,c), d_H(b,d)) for connected factors",
        params_help: "g=<family>, h=<family>",
        run: run_rm1,
    },
];

// ---------------------------------------------------------------------
// parameter access

fn get_raw<'a>(p: &'a Params, key: &str) -> Result<&'a str, Error> {
    p.get(key)
        .map(String::as_str)
        .ok_or_else(|| Error::InvalidParameter(format!("missing parameter {key:?}")))
}

fn get_usize(p: &Params, key: &str) -> Result<usize, Error> {
    get_raw(p, key)?
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("parameter {key:?} must be an integer")))
}

fn get_family(p: &Params, key: &str) -> Result<Family, Error> {
    get_raw(p, key)?.parse()
}

fn build_connected(p: &Params, key: &str) -> Result<Graph, Error> {
    let g = get_family(p, key)?.build()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g)
}

// ---------------------------------------------------------------------
// claim evaluation

/// What is currently known about a dimension: a proven lower bound and,
/// when available, a proven upper bound (exact iff they meet).
struct Interval {
    lower: usize,
    upper: Option<usize>,
}

impl Interval {
    fn exact(&self) -> Option<usize> {
        self.upper.filter(|&u| u == self.lower)
    }
}

/// Runs the exact solver, keeping a verified construction size as the
/// upper bound if the budget runs out.
fn solve_interval(g: &Graph, opts: &VerifyOptions, verified_upper: Option<usize>) -> Result<Interval, Error> {
    let result = metric_dimension_exact(g, opts.budget)?;
    Ok(match result.dimension() {
        Some(d) => Interval { lower: d, upper: Some(d) },
        None => Interval { lower: result.lower_bound, upper: verified_upper },
    })
}

enum Relation {
    Le,
    Ge,
    Eq,
}

fn decide(rel: Relation, claimed: i64, itv: &Interval) -> (Status, Option<i64>) {
    let lower = itv.lower as i64;
    let upper = itv.upper.map(|u| u as i64);
    if let Some(d) = itv.exact() {
        let d = d as i64;
        let ok = match rel {
            Relation::Le => d <= claimed,
            Relation::Ge => d >= claimed,
            Relation::Eq => d == claimed,
        };
        return (if ok { Status::Holds } else { Status::Violated }, Some(d));
    }
    match rel {
        Relation::Le => {
            if upper.is_some_and(|u| u <= claimed) {
                (Status::Holds, upper)
            } else if lower > claimed {
                (Status::Violated, Some(lower))
            } else {
                (Status::InexactBudget, Some(lower))
            }
        }
        Relation::Ge => {
            if lower >= claimed {
                (Status::Holds, Some(lower))
            } else if upper.is_some_and(|u| u < claimed) {
                (Status::Violated, upper)
            } else {
                (Status::InexactBudget, Some(lower))
            }
        }
        Relation::Eq => {
            if lower > claimed || upper.is_some_and(|u| u < claimed) {
                (Status::Violated, Some(lower))
            } else {
                (Status::InexactBudget, Some(lower))
            }
        }
    }
}

fn outcome_from(rel: Relation, claimed: usize, itv: &Interval) -> Outcome {
    let (status, measured) = decide(rel, claimed as i64, itv);
    Outcome { claimed: Some(claimed as i64), measured, status, witness: None }
}

/// Size of a construction once its landmark set passes an independent
/// generator check on the product; `None` if the check fails.
fn verified_size(out: &ConstructionOutput) -> Result<Option<usize>, Error> {
    let dm = all_pairs_distances(&out.product);
    Ok(is_metric_generator(&dm, &out.landmarks)?.then_some(out.claimed_size))
}

/// Exact dimension of a factor graph, or `None` when the budget dies.
fn factor_dim(g: &Graph, opts: &VerifyOptions) -> Result<Option<crate::resolving::LandmarkSet>, Error> {
    Ok(metric_dimension_exact(g, opts.budget)?.basis)
}

fn factor_budget_outcome(claimed: Option<i64>) -> Outcome {
    Outcome {
        claimed,
        measured: None,
        status: Status::InexactBudget,
        witness: Some("factor dimension unresolved within budget".into()),
    }
}

/// Certifies dim(G ⊠ H) = claimed both ways: the product's twin classes
/// give the lower bound and the verified columns construction S1 × V(H)
/// the upper. Only if the sandwich stays open does the solver arbitrate.
fn check_product_equality(
    g: &Graph,
    h: &Graph,
    k: usize,
    claimed: usize,
    opts: &VerifyOptions,
) -> Result<Outcome, Error> {
    let product = strong_product(g, h)?;
    let lower = twin_lower_bound(&product);
    let upper = match factor_dim(g, opts)? {
        Some(basis) => verified_size(&resolved_generator(g, h, &basis, k)?)?,
        None => return Ok(factor_budget_outcome(Some(claimed as i64))),
    };
    if lower == claimed && upper == Some(claimed) {
        return Ok(Outcome {
            claimed: Some(claimed as i64),
            measured: Some(claimed as i64),
            status: Status::Holds,
            witness: None,
        });
    }
    let itv = solve_interval(&product, opts, upper)?;
    let itv = Interval { lower: itv.lower.max(lower), upper: itv.upper };
    Ok(outcome_from(Relation::Eq, claimed, &itv))
}

// ---------------------------------------------------------------------
// registry entries

fn run_t1(p: &Params, opts: &VerifyOptions) -> Result<Outcome, Error> {
    let g = build_connected(p, "g")?;
    let h = build_connected(p, "h")?;
    if g.order() < 2 {
        return Ok(Outcome::skipped("first factor must have order at least 2"));
    }
    let (Some(s1), Some(s2)) = (factor_dim(&g, opts)?, factor_dim(&h, opts)?) else {
        return Ok(factor_budget_outcome(None));
    };
    let (n1, n2) = (g.order(), h.order());
    let claimed = n1 * s2.len() + n2 * s1.len() - s1.len() * s2.len();
    let upper = verified_size(&upper_bound_generator(&g, &h, &s1, &s2)?)?;
    let itv = solve_interval(&strong_product(&g, &h)?, opts, upper)?;
    Ok(outcome_from(Relation::Le, claimed, &itv))
}

fn run_t2(p: &Params, opts: &VerifyOptions) -> Result<Outcome, Error> {
    let g = build_connected(p, "g")?;
    let h = build_connected(p, "h")?;
    let k = get_usize(p, "k")?;
    if g.order() < 2 {
        return Ok(Outcome::skipped("first factor must have order at least 2"));
    }
    if all_pairs_distances(&g).diameter() as usize >= k {
        return Ok(Outcome::skipped(format!("diam(G) must stay below k = {k}")));
    }
    if !is_self_k_resolved(&h, k)? {
        return Ok(Outcome::skipped(format!("H is not self {k}-resolved")));
    }
    let Some(s1) = factor_dim(&g, opts)? else {
        return Ok(factor_budget_outcome(None));
    };
    let claimed = h.order() * s1.len();
    let upper = verified_size(&resolved_generator(&g, &h, &s1, k)?)?;
    let itv = solve_interval(&strong_product(&g, &h)?, opts, upper)?;
    Ok(outcome_from(Relation::Le, claimed, &itv))
}

fn run_c1(p: &Params, opts: &VerifyOptions) -> Result<Outcome, Error> {
    let n1 = get_usize(p, "n1")?;
    let n2 = get_usize(p, "n2")?;
    if n1 < 2 || n2 < 4 || n1 - 1 >= n2 / 2 {
        return Ok(Outcome::skipped("requires n1 >= 2, n2 >= 4, n1-1 < floor(n2/2)"));
    }
    let g = path(n1)?;
    let h = cycle(n2)?;
    let basis = metric_dimension_exact(&g, None)?.basis.expect("path dimension");
    let upper = verified_size(&resolved_generator(&g, &h, &basis, n2 / 2)?)?;
    let itv = solve_interval(&strong_product(&g, &h)?, opts, upper)?;
    Ok(outcome_from(Relation::Le, n2, &itv))
}

fn true_twin_classes(g: &Graph) -> usize {
    twin_partition(g, TwinMode::True).class_count()
}

fn run_t3(p: &Params, opts: &VerifyOptions) -> Result<Outcome, Error> {
    let g = build_connected(p, "g")?;
    let h = build_connected(p, "h")?;
    if g.order() < 2 || h.order() < 2 {
        return Ok(Outcome::skipped("both factors must be nontrivial"));
    }
    let claimed = g.order() * h.order() - true_twin_classes(&g) * true_twin_classes(&h);
    let itv = solve_interval(&strong_product(&g, &h)?, opts, None)?;
    Ok(outcome_from(Relation::Ge, claimed, &itv))
}

fn run_c2(p: &Params, opts: &VerifyOptions) -> Result<Outcome, Error> {
    let g = build_connected(p, "g")?;
    let h = build_connected(p, "h")?;
    if g.order() < 2 {
        return Ok(Outcome::skipped("first factor must be nontrivial"));
    }
    let claimed = h.order() * (g.order() - true_twin_classes(&g));
    let itv = solve_interval(&strong_product(&g, &h)?, opts, None)?;
    Ok(outcome_from(Relation::Ge, claimed, &itv))
}

fn run_t4(p: &Params, opts: &VerifyOptions) -> Result<Outcome, Error> {
    let g = build_connected(p, "g")?;
    let h = build_connected(p, "h")?;
    let k = get_usize(p, "k")?;
    if g.order() < 2 {
        return Ok(Outcome::skipped("first factor must be nontrivial"));
    }
    if all_pairs_distances(&g).diameter() as usize >= k {
        return Ok(Outcome::skipped(format!("diam(G) must stay below k = {k}")));
    }
    if !is_self_k_resolved(&h, k)? {
        return Ok(Outcome::skipped(format!("H is not self {k}-resolved")));
    }
    let t1 = true_twin_classes(&g);
    let Some(basis) = factor_dim(&g, opts)? else {
        return Ok(factor_budget_outcome(None));
    };
    if basis.len() != g.order() - t1 {
        return Ok(Outcome::skipped(format!(
            "dim(G) = {} differs from n1 - t1 = {}",
            basis.len(),
            g.order() - t1
        )));
    }
    let claimed = h.order() * (g.order() - t1);
    check_product_equality(&g, &h, k, claimed, opts)
}

fn run_l1(p: &Params, _opts: &VerifyOptions) -> Result<Outcome, Error> {
    let n = get_usize(p, "n")?;
    if n < 2 {
        return Ok(Outcome::skipped("lemma concerns nontrivial graphs"));
    }
    let mut checked = 0u64;
    for g in crate::enumerate::enumerate_connected(n)? {
        if !crate::self_resolved::check_lemma_2resolved(&g)? {
            return Ok(Outcome {
                claimed: Some(1),
                measured: Some(0),
                status: Status::Violated,
                witness: Some(format!("counterexample graph6 {}", graph6_write(&g))),
            });
        }
        checked += 1;
    }
    Ok(Outcome {
        claimed: Some(1),
        measured: Some(1),
        status: Status::Holds,
        witness: Some(format!("checked {checked} labeled connected graphs")),
    })
}

fn run_c3(p: &Params, opts: &VerifyOptions) -> Result<Outcome, Error> {
    let n1 = get_usize(p, "n1")?;
    let h = build_connected(p, "h")?;
    if n1 < 2 || h.order() < 3 {
        return Ok(Outcome::skipped("requires n1 >= 2 and order(H) >= 3"));
    }
    if !twin_partition(&h, TwinMode::True).all_singletons() {
        return Ok(Outcome::skipped("H has true twin vertices"));
    }
    let claimed = h.order() * (n1 - 1);
    check_product_equality(&complete(n1)?, &h, 2, claimed, opts)
}

fn run_r2a(p: &Params, opts: &VerifyOptions) -> Result<Outcome, Error> {
    let n1 = get_usize(p, "n1")?;
    let n2 = get_usize(p, "n2")?;
    if n1 < 2 || n2 < 3 {
        return Ok(Outcome::skipped("requires n1 >= 2 and n2 >= 3"));
    }
    let claimed = n2 * (n1 - 1);
    let g = complete(n1)?;
    for (name, tree) in tree_sample(n2)? {
        let outcome = check_product_equality(&g, &tree, 2, claimed, opts)?;
        if outcome.status != Status::Holds {
            return Ok(Outcome {
                witness: Some(match outcome.witness {
                    Some(w) => format!("tree {name}: {w}"),
                    None => format!("tree {name}"),
                }),
                ..outcome
            });
        }
    }
    Ok(Outcome {
        claimed: Some(claimed as i64),
        measured: Some(claimed as i64),
        status: Status::Holds,
        witness: None,
    })
}

/// Reproducible tree sample per order: the path, the star, and three
/// seeded random trees.
fn tree_sample(n: usize) -> Result<Vec<(String, Graph)>, Error> {
    Ok(vec![
        ("path".into(), path(n)?),
        ("star".into(), star(n)?),
        ("random~1".into(), random_tree(n, 1)?),
        ("random~2".into(), random_tree(n, 2)?),
        ("random~3".into(), random_tree(n, 3)?),
    ])
}

fn run_r2b(p: &Params, opts: &VerifyOptions) -> Result<Outcome, Error> {
    let n1 = get_usize(p, "n1")?;
    let n2 = get_usize(p, "n2")?;
    if n1 < 2 || n2 < 4 {
        return Ok(Outcome::skipped("requires n1 >= 2 and n2 >= 4"));
    }
    check_product_equality(&complete(n1)?, &cycle(n2)?, 2, n2 * (n1 - 1), opts)
}

fn run_r2c(p: &Params, opts: &VerifyOptions) -> Result<Outcome, Error> {
    let n1 = get_usize(p, "n1")?;
    let r = get_usize(p, "r")?;
    if n1 < 2 || r < 2 {
        return Ok(Outcome::skipped("requires n1 >= 2 and r >= 2"));
    }
    let h = hypercube(r as u32)?;
    let claimed = (1usize << r) * (n1 - 1);
    check_product_equality(&complete(n1)?, &h, 2, claimed, opts)
}

fn run_r2d(p: &Params, opts: &VerifyOptions) -> Result<Outcome, Error> {
    let n1 = get_usize(p, "n1")?;
    let n = get_usize(p, "n")?;
    let m = get_usize(p, "m")?;
    if n1 < 2 || n < 2 || m < 2 {
        return Ok(Outcome::skipped("requires n1, n, m >= 2"));
    }
    check_product_equality(&complete(n1)?, &grid(n, m)?, 2, n * m * (n1 - 1), opts)
}

fn run_t5(p: &Params, opts: &VerifyOptions) -> Result<Outcome, Error> {
    let n1 = get_usize(p, "n1")?;
    let n2 = get_usize(p, "n2")?;
    if n1 < 2 || n1 >= n2 {
        return Ok(Outcome::skipped("requires 2 <= n1 < n2"));
    }
    let floor = path_path_lower_bound(n1, n2)?;
    let zigzag = path_path_generator(n1, n2)?;
    let ceil = zigzag.claimed_size;
    let upper = verified_size(&zigzag)?;
    let itv = solve_interval(&zigzag.product, opts, upper)?;
    // sandwich: dim must land inside [floor, ceil]
    let (status, measured) = if itv.lower as i64 >= floor as i64
        && itv.upper.is_some_and(|u| u <= ceil)
    {
        (Status::Holds, Some(itv.exact().unwrap_or(itv.upper.unwrap()) as i64))
    } else if itv.upper.is_some_and(|u| u < floor) || itv.lower > ceil {
        (Status::Violated, Some(itv.lower as i64))
    } else {
        (Status::InexactBudget, Some(itv.lower as i64))
    };
    let witness = (status == Status::Violated)
        .then(|| format!("dimension outside [{floor}, {ceil}]"));
    Ok(Outcome { claimed: Some(ceil as i64), measured, status, witness })
}

fn run_t6(p: &Params, opts: &VerifyOptions) -> Result<Outcome, Error> {
    let n = get_usize(p, "n")?;
    if n < 2 {
        return Ok(Outcome::skipped("requires n >= 2"));
    }
    let corner = path_path_corner_generator(n)?;
    let upper = verified_size(&corner)?;
    let itv = solve_interval(&corner.product, opts, upper)?;
    Ok(outcome_from(Relation::Eq, 3, &itv))
}

fn run_t7(p: &Params, opts: &VerifyOptions) -> Result<Outcome, Error> {
    let n1 = get_usize(p, "n1")?;
    let n2 = get_usize(p, "n2")?;
    if n2 / 2 < 2 || n1 < 2 * (n2 / 2) + 1 {
        return Ok(Outcome::skipped("requires (n1-1)/2 >= floor(n2/2) >= 2"));
    }
    let diagonal = path_cycle_diagonal_generator(n1, n2)?;
    let upper = verified_size(&diagonal)?;
    let itv = solve_interval(&diagonal.product, opts, upper)?;
    Ok(outcome_from(Relation::Le, n1, &itv))
}

fn run_cl1(p: &Params, _opts: &VerifyOptions) -> Result<Outcome, Error> {
    let n = get_usize(p, "n")?;
    if n < 3 {
        return Ok(Outcome::skipped("requires n >= 3"));
    }
    let ok = check_cycle_claim(n)?;
    Ok(Outcome {
        claimed: Some(1),
        measured: Some(i64::from(ok)),
        status: if ok { Status::Holds } else { Status::Violated },
        witness: (!ok).then(|| format!("violating quadruple exists on C{n}")),
    })
}

fn run_rm1(p: &Params, _opts: &VerifyOptions) -> Result<Outcome, Error> {
    let g = build_connected(p, "g")?;
    let h = build_connected(p, "h")?;
    let ok = crate::products::verify_distance_law(&g, &h)?;
    Ok(Outcome {
        claimed: Some(1),
        measured: Some(i64::from(ok)),
        status: if ok { Status::Holds } else { Status::Violated },
        witness: (!ok).then(|| "distance law mismatch on some pair".into()),
    })
}

// ---------------------------------------------------------------------
// sweeps

/// One sweep dimension: a parameter name and its values in order.
/// Values may be integers or family specs.
#[derive(Clone, Debug)]
pub struct Axis {
    pub name: String,
    pub values: Vec<String>,
}

impl Axis {
    /// Parses `name=lo..hi` (both ends inclusive; `lo..=hi` also
    /// accepted).
    pub fn from_range(s: &str) -> Result<Axis, Error> {
        let (name, range) = s
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameter(format!("range {s:?} must look like name=lo..hi")))?;
        let (lo, hi) = range
            .split_once("..")
            .ok_or_else(|| Error::InvalidParameter(format!("range {s:?} must look like name=lo..hi")))?;
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let lo: i64 = lo.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad range start in {s:?}")))?;
        let hi: i64 = hi.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad range end in {s:?}")))?;
        Ok(Axis {
            name: name.trim().to_ascii_lowercase(),
            values: (lo..=hi).map(|v| v.to_string()).collect(),
        })
    }

    /// Parses `name=v1,v2,...`.
    pub fn from_values(s: &str) -> Result<Axis, Error> {
        let (name, values) = s
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameter(format!("values {s:?} must look like name=v1,v2,...")))?;
        Ok(Axis {
            name: name.trim().to_ascii_lowercase(),
            values: values.split(',').map(|v| v.trim().to_string()).collect(),
        })
    }
}

/// Parses a `k=v,...` parameter list; keys are lowercased.
pub fn parse_params(s: &str) -> Result<Params, Error> {
    let mut params = Params::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameter(format!("parameter {part:?} must look like key=value")))?;
        params.insert(k.trim().to_ascii_lowercase(), v.trim().to_string());
    }
    Ok(params)
}

pub struct SweepResult {
    pub reports: Vec<VerificationReport>,
    pub counts: StatusCounts,
}

/// Verifies a theorem over the cartesian grid of the axes. Points run
/// concurrently across `workers` threads; the report order is the grid
/// order regardless of scheduling.
pub fn sweep(
    id: &str,
    axes: &[Axis],
    opts: &VerifyOptions,
    workers: usize,
) -> Result<SweepResult, Error> {
    find_theorem(id)?;
    if axes.is_empty() {
        return Err(Error::InvalidParameter("sweep needs at least one axis".into()));
    }
    let mut points: Vec<Params> = vec![Params::new()];
    for axis in axes {
        let mut next = Vec::with_capacity(points.len() * axis.values.len());
        for point in &points {
            for value in &axis.values {
                let mut p = point.clone();
                p.insert(axis.name.clone(), value.clone());
                next.push(p);
            }
        }
        points = next;
    }
    let reports = run_points(points, workers, |p| verify(id, &p, opts))?;
    let counts = StatusCounts::tally(&reports);
    Ok(SweepResult { reports, counts })
}

/// Maps items across a small worker pool, restoring input order.
fn run_points<T, R, F>(items: Vec<T>, workers: usize, f: F) -> Result<Vec<R>, Error>
where
    T: Send,
    R: Send,
    F: Fn(T) -> Result<R, Error> + Sync,
{
    let total = items.len();
    let workers = workers.clamp(1, total.max(1));
    if workers == 1 {
        return items.into_iter().map(f).collect();
    }
    let queue = Mutex::new(items.into_iter().enumerate());
    let (tx, rx) = mpsc::channel::<(usize, Result<R, Error>)>();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            let tx = tx.clone();
            let queue = &queue;
            let f = &f;
            scope.spawn(move || loop {
                let next = queue.lock().expect("queue lock").next();
                match next {
                    Some((idx, item)) => {
                        if tx.send((idx, f(item))).is_err() {
                            return;
                        }
                    }
                    None => return,
                }
            });
        }
        drop(tx);
        let mut slots: Vec<Option<Result<R, Error>>> = (0..total).map(|_| None).collect();
        for (idx, result) in rx {
            slots[idx] = Some(result);
        }
        slots
            .into_iter()
            .map(|s| s.expect("worker produced every slot"))
            .collect()
    })
}

/// Worker count: explicit request, else the METRICDIM_WORKERS variable,
/// else available parallelism.
pub fn resolve_workers(explicit: Option<usize>) -> usize {
    explicit
        .or_else(|| {
            std::env::var("METRICDIM_WORKERS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

// ---------------------------------------------------------------------
// conjecture exploration

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConjectureVerdict {
    /// exact dimension equals the ceiling bound
    MatchesCeil,
    /// exact dimension sits strictly below the ceiling (still within
    /// the proven bounds); such a row refutes the ceiling conjecture
    MatchesFloorOnly,
    /// the budget ran out before the dimension was pinned down
    Inconclusive,
}

impl std::fmt::Display for ConjectureVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ConjectureVerdict::MatchesCeil => "matches-ceil",
            ConjectureVerdict::MatchesFloorOnly => "matches-floor-only",
            ConjectureVerdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureRow {
    pub n1: usize,
    pub n2: usize,
    pub floor: usize,
    pub ceil: usize,
    /// Proven lower bound; equals the dimension when exact.
    pub lower: usize,
    /// Exact dimension, when established within budget.
    pub dimension: Option<usize>,
    pub verdict: ConjectureVerdict,
}

/// Tabulates dim(P_n1 ⊠ P_n2) against its floor/ceiling bounds for all
/// 2 <= n1 < n2 within the given maxima. An exact value strictly below
/// the ceiling would refute the ceiling conjecture; the verdict column
/// records the evidence either way.
pub fn conjecture_sweep(
    max_n1: usize,
    max_n2: usize,
    opts: &VerifyOptions,
    workers: usize,
) -> Result<Vec<ConjectureRow>, Error> {
    let points: Vec<(usize, usize)> = (2..=max_n1)
        .flat_map(|n1| (n1 + 1..=max_n2).map(move |n2| (n1, n2)))
        .collect();
    run_points(points, workers, |(n1, n2)| {
        let floor = path_path_lower_bound(n1, n2)?;
        let zigzag = path_path_generator(n1, n2)?;
        let ceil = zigzag.claimed_size;
        let upper = verified_size(&zigzag)?;
        let itv = solve_interval(&zigzag.product, opts, upper)?;
        let (dimension, verdict) = match itv.exact() {
            Some(d) => {
                assert!(
                    (floor..=ceil).contains(&d),
                    "dimension {d} escaped proven bounds [{floor}, {ceil}] at ({n1}, {n2})"
                );
                let verdict = if d == ceil {
                    ConjectureVerdict::MatchesCeil
                } else {
                    ConjectureVerdict::MatchesFloorOnly
                };
                (Some(d), verdict)
            }
            None => (None, ConjectureVerdict::Inconclusive),
        };
        Ok(ConjectureRow { n1, n2, floor, ceil, lower: itv.lower, dimension, verdict })
    })
}

pub const CONJECTURE_CSV_HEADER: &str = "n1,n2,floor,ceil,dimension,exact,verdict";

pub fn conjecture_csv(rows: &[ConjectureRow]) -> String {
    let mut out = String::from(CONJECTURE_CSV_HEADER);
    out.push('\n');
    for r in rows {
        let dim = match r.dimension {
            Some(d) => d.to_string(),
            None => format!(">={}", r.lower),
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.n1,
            r.n2,
            r.floor,
            r.ceil,
            dim,
            r.dimension.is_some(),
            r.verdict
        ));
    }
    out
}
