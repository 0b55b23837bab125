//! Exact metric-dimension search.
//!
//! Subsets are enumerated in lexicographic order for increasing size k,
//! starting at the larger of the twin and counting lower bounds. Three
//! devices keep the search tractable:
//!
//! * twin feasibility: every mixed-twin class of size c must contribute
//!   at least c-1 landmarks, so a prefix that skips two vertices of one
//!   class is dead;
//! * early completion: once the chosen prefix already distinguishes all
//!   vertices, the lexicographically smallest completion is the prefix
//!   plus the next unused vertices;
//! * partition refinement: the state per search node is the set of
//!   still-unresolved vertex blocks as bitsets, refined landmark by
//!   landmark against precomputed distance spheres.
//!
//! The returned basis is the lexicographically smallest among all
//! minimum generators, so results are reproducible across runs.

use crate::bits::Bits;
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::resolving::{counting_lower_bound, twin_lower_bound, twin_partition, LandmarkSet, TwinMode};
use crate::Error;

/// Orders above this require an explicit node budget; the search is
/// exponential and larger instances should opt in deliberately.
pub const UNBUDGETED_ORDER_LIMIT: usize = 64;

/// Result of an exact search. `basis` is present iff the search
/// completed; otherwise `lower_bound` is the best proven bound and the
/// run is flagged inexact.
#[derive(Clone, Debug)]
pub struct DimResult {
    pub lower_bound: usize,
    pub basis: Option<LandmarkSet>,
    pub nodes_explored: u64,
}

impl DimResult {
    pub fn is_exact(&self) -> bool {
        self.basis.is_some()
    }

    /// The metric dimension, when the search completed.
    pub fn dimension(&self) -> Option<usize> {
        self.basis.as_ref().map(LandmarkSet::len)
    }
}

/// Computes the exact metric dimension and its lexicographically
/// smallest basis. With a budget, the search stops after that many
/// nodes and reports the bounds proven so far as an inexact result.
pub fn metric_dimension_exact(g: &Graph, budget: Option<u64>) -> Result<DimResult, Error> {
    let dm = all_pairs_distances(g);
    metric_dimension_exact_with(g, &dm, budget)
}

/// Same as [`metric_dimension_exact`] but reuses a precomputed distance
/// matrix.
pub fn metric_dimension_exact_with(
    g: &Graph,
    dm: &DistanceMatrix,
    budget: Option<u64>,
) -> Result<DimResult, Error> {
    dm.require_connected()?;
    let n = g.order();
    if n == 1 {
        return Ok(DimResult {
            lower_bound: 0,
            basis: Some(LandmarkSet::new(vec![]).unwrap()),
            nodes_explored: 0,
        });
    }
    if n > UNBUDGETED_ORDER_LIMIT && budget.is_none() {
        return Err(Error::InvalidParameter(format!(
            "order {n} exceeds {UNBUDGETED_ORDER_LIMIT}; supply a node budget"
        )));
    }

    let mut search = Search::new(g, dm, budget);
    let start_k = twin_lower_bound(g).max(counting_lower_bound(n, dm.diameter()));
    for k in start_k..n {
        match search.run_level(k) {
            LevelOutcome::Found(basis) => {
                return Ok(DimResult {
                    lower_bound: k,
                    basis: Some(LandmarkSet::new(basis).unwrap()),
                    nodes_explored: search.nodes,
                })
            }
            LevelOutcome::Exhausted => {}
            LevelOutcome::BudgetSpent => {
                return Ok(DimResult {
                    lower_bound: k,
                    basis: None,
                    nodes_explored: search.nodes,
                })
            }
        }
    }
    // Any n-1 vertices resolve a connected graph, so the loop can only
    // fall through at k = n-1.
    let basis: Vec<usize> = (0..n - 1).collect();
    Ok(DimResult {
        lower_bound: n - 1,
        basis: Some(LandmarkSet::new(basis).unwrap()),
        nodes_explored: search.nodes,
    })
}

enum LevelOutcome {
    Found(Vec<usize>),
    Exhausted,
    BudgetSpent,
}

enum NodeOutcome {
    Found,
    Exhausted,
    BudgetSpent,
}

struct Search {
    n: usize,
    /// spheres[v][d] = vertices at distance d from v
    spheres: Vec<Vec<Bits>>,
    class_of: Vec<usize>,
    class_size: Vec<usize>,
    budget: Option<u64>,
    nodes: u64,
    k: usize,
    chosen: Vec<usize>,
    skipped: Vec<u32>,
}

impl Search {
    fn new(g: &Graph, dm: &DistanceMatrix, budget: Option<u64>) -> Self {
        let n = g.order();
        let diameter = dm.diameter() as usize;
        let spheres = (0..n)
            .map(|v| {
                let mut by_dist = vec![Bits::new(n); diameter + 1];
                for u in 0..n {
                    by_dist[dm.get(v, u) as usize].set(u);
                }
                by_dist
            })
            .collect();
        let twins = twin_partition(g, TwinMode::Mixed);
        let class_size = twins.classes.iter().map(Vec::len).collect();
        let class_of = twins.class_of(n);
        let skipped = vec![0; twins.class_count()];
        Search {
            n,
            spheres,
            class_of,
            class_size,
            budget,
            nodes: 0,
            k: 0,
            chosen: Vec::new(),
            skipped,
        }
    }

    fn run_level(&mut self, k: usize) -> LevelOutcome {
        self.k = k;
        self.chosen.clear();
        self.skipped.iter_mut().for_each(|s| *s = 0);
        let mut whole = Bits::new(self.n);
        for v in 0..self.n {
            whole.set(v);
        }
        match self.descend(0, &[whole]) {
            NodeOutcome::Found => LevelOutcome::Found(self.chosen.clone()),
            NodeOutcome::Exhausted => LevelOutcome::Exhausted,
            NodeOutcome::BudgetSpent => LevelOutcome::BudgetSpent,
        }
    }

    /// Decide vertex `v`: try it as the next landmark, then try skipping
    /// it. `blocks` holds the unresolved classes of the current prefix.
    fn descend(&mut self, v: usize, blocks: &[Bits]) -> NodeOutcome {
        if blocks.is_empty() {
            // prefix resolves everything: pad with the smallest unused
            // vertices if enough remain
            let missing = self.k - self.chosen.len();
            if self.n - v >= missing {
                self.chosen.extend(v..v + missing);
                return NodeOutcome::Found;
            }
            return NodeOutcome::Exhausted;
        }
        if self.chosen.len() == self.k || v == self.n || self.n - v < self.k - self.chosen.len() {
            return NodeOutcome::Exhausted;
        }

        if let Some(budget) = self.budget {
            if self.nodes >= budget {
                return NodeOutcome::BudgetSpent;
            }
        }
        self.nodes += 1;

        // branch 1: take v
        let refined = self.refine(blocks, v);
        self.chosen.push(v);
        match self.descend(v + 1, &refined) {
            NodeOutcome::Exhausted => {}
            done => return done,
        }
        self.chosen.pop();

        // branch 2: skip v; dead if v's twin class just lost a second vertex
        let class = self.class_of[v];
        self.skipped[class] += 1;
        let viable = self.class_size[class] == 1 || self.skipped[class] < 2;
        let outcome = if viable {
            self.descend(v + 1, blocks)
        } else {
            NodeOutcome::Exhausted
        };
        self.skipped[class] -= 1;
        outcome
    }

    /// Splits every unresolved block by distance to the new landmark,
    /// keeping only the pieces that still hold two or more vertices.
    fn refine(&self, blocks: &[Bits], landmark: usize) -> Vec<Bits> {
        let mut out = Vec::with_capacity(blocks.len());
        for block in blocks {
            let members = block.count();
            let mut seen = 0;
            for sphere in &self.spheres[landmark] {
                let piece = block.and(sphere);
                let size = piece.count();
                if size > 1 {
                    out.push(piece);
                }
                seen += size;
                if seen == members {
                    break;
                }
            }
        }
        out
    }

}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{clique_fan, complete, cycle, path, star};
    use crate::products::strong_product;
    use crate::resolving::is_metric_generator;

    fn dim_of(g: &Graph) -> usize {
        metric_dimension_exact(g, None).unwrap().dimension().unwrap()
    }

    #[test]
    fn complete_graphs() {
        for n in 2..=6 {
            assert_eq!(dim_of(&complete(n).unwrap()), n - 1);
        }
    }

    #[test]
    fn paths_have_dimension_one() {
        for n in 2..=9 {
            let r = metric_dimension_exact(&path(n).unwrap(), None).unwrap();
            assert_eq!(r.dimension(), Some(1));
            assert_eq!(r.basis.unwrap().vertices(), &[0]);
        }
    }

    // brute force over all 1- and 2-subsets puts dim(C6) at 2
    #[test]
    fn cycle_six() {
        let r = metric_dimension_exact(&cycle(6).unwrap(), None).unwrap();
        assert_eq!(r.dimension(), Some(2));
        assert_eq!(r.basis.unwrap().vertices(), &[0, 1]);
    }

    #[test]
    fn p3_strong_p3_is_three() {
        let p3 = path(3).unwrap();
        let g = strong_product(&p3, &p3).unwrap();
        assert_eq!(dim_of(&g), 3);
    }

    #[test]
    fn trivial_graph_dimension_zero() {
        let r = metric_dimension_exact(&complete(1).unwrap(), None).unwrap();
        assert_eq!(r.dimension(), Some(0));
    }

    #[test]
    fn clique_fan_matches_twin_bound() {
        let g = clique_fan(&[2, 2]).unwrap();
        assert_eq!(dim_of(&g), 2);
        assert_eq!(dim_of(&star(6).unwrap()), 4);
    }

    #[test]
    fn basis_is_sound_and_minimal() {
        for g in [cycle(7).unwrap(), clique_fan(&[3, 2]).unwrap(), star(5).unwrap()] {
            let dm = all_pairs_distances(&g);
            let r = metric_dimension_exact(&g, None).unwrap();
            let basis = r.basis.unwrap();
            assert!(is_metric_generator(&dm, &basis).unwrap());
            // no subset one smaller resolves (full scan, no pruning)
            let k = basis.len() - 1;
            let mut any = false;
            let mut comb: Vec<usize> = (0..k).collect();
            loop {
                let s = LandmarkSet::new(comb.clone()).unwrap();
                if is_metric_generator(&dm, &s).unwrap() {
                    any = true;
                    break;
                }
                if !next_combination(&mut comb, g.order()) {
                    break;
                }
            }
            assert!(!any, "found smaller generator for {g:?}");
        }
    }

    #[test]
    fn budget_exhaustion_is_inexact_not_error() {
        let g = strong_product(&path(4).unwrap(), &path(5).unwrap()).unwrap();
        let r = metric_dimension_exact(&g, Some(1)).unwrap();
        assert!(!r.is_exact());
        assert!(r.lower_bound >= 1);
        assert!(r.nodes_explored <= 1);
    }

    #[test]
    fn disconnected_is_error_and_large_needs_budget() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(metric_dimension_exact(&g, None).is_err());
        let big = path(70).unwrap();
        assert!(metric_dimension_exact(&big, None).is_err());
        let r = metric_dimension_exact(&big, Some(1_000_000)).unwrap();
        assert_eq!(r.dimension(), Some(1));
    }

    #[test]
    fn determinism_across_runs() {
        let g = strong_product(&path(3).unwrap(), &cycle(4).unwrap()).unwrap();
        let a = metric_dimension_exact(&g, None).unwrap();
        let b = metric_dimension_exact(&g, None).unwrap();
        assert_eq!(a.basis, b.basis);
        assert_eq!(a.nodes_explored, b.nodes_explored);
    }

    fn next_combination(comb: &mut [usize], n: usize) -> bool {
        let k = comb.len();
        if k == 0 {
            return false;
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if comb[i] < n - k + i {
                comb[i] += 1;
                for j in i + 1..k {
                    comb[j] = comb[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }
}
