//! Brute-force ground truth: perfect matchings of a region's dual graph.
//!
//! The search branches on an uncovered triangle with the fewest remaining
//! choices, so forced lozenges are placed without branching. Invariant
//! tilings are enumerated directly by placing whole orbits of lozenges under
//! the symmetry group at once.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Integer, Rational};
use crate::regions::{Cell, LozengePos, Orient, Region, Symmetry, Tiling};

pub const DEFAULT_CELL_BUDGET: usize = 250;
pub const CELL_BUDGET_ENV: &str = "HEXATILE_CELL_BUDGET";

/// Dual graph: one vertex per triangle (sorted), one edge per lozenge position.
#[derive(Debug, Clone)]
pub struct DualGraph {
    pub vertices: Vec<Cell>,
    /// `(up index, down index, weight)`.
    pub edges: Vec<(usize, usize, Rational)>,
}

impl DualGraph {
    pub fn is_bipartite_by_orientation(&self) -> bool {
        self.edges.iter().all(|&(a, b, _)| {
            self.vertices[a].orient == Orient::Up && self.vertices[b].orient == Orient::Down
        })
    }
}

pub fn dual_graph(region: &Region) -> DualGraph {
    let vertices: Vec<Cell> = region.cells().iter().copied().collect();
    let index = |c: &Cell| vertices.binary_search(c).expect("cell of region");
    let edges = region
        .positions()
        .iter()
        .map(|p| (index(&p.up()), index(&p.down()), region.weight(p)))
        .collect();
    DualGraph { vertices, edges }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingCount {
    /// Weighted sum over tilings.
    pub value: Rational,
    /// Number of tilings.
    pub cardinality: Integer,
}

/// Search configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchOracle {
    pub cell_budget: usize,
}

impl Default for MatchOracle {
    fn default() -> Self {
        MatchOracle { cell_budget: DEFAULT_CELL_BUDGET }
    }
}

/// A group orbit of lozenge positions placed as one move.
struct Move {
    cells: Vec<usize>,
    positions: Vec<usize>,
}

struct Search<'a> {
    n_cells: usize,
    moves: Vec<Move>,
    /// Moves touching each cell, in canonical order.
    by_cell: Vec<Vec<usize>>,
    weights: &'a [Rational],
}

impl<'a> Search<'a> {
    fn new(graph: &DualGraph, group_perms: &[Vec<usize>], weights: &'a [Rational]) -> Search<'a> {
        let n_cells = graph.vertices.len();
        let lookup: std::collections::HashMap<(usize, usize), usize> =
            graph.edges.iter().enumerate().map(|(i, &(a, b, _))| ((a, b), i)).collect();
        let mut seen = vec![false; graph.edges.len()];
        let mut moves = Vec::new();
        for (e, &(a, b, _)) in graph.edges.iter().enumerate() {
            if seen[e] {
                continue;
            }
            let mut positions = BTreeSet::new();
            for perm in group_perms {
                let (pa, pb) = (perm[a], perm[b]);
                let key = if graph.vertices[pa].orient == Orient::Up { (pa, pb) } else { (pb, pa) };
                positions.insert(lookup[&key]);
            }
            for &p in &positions {
                seen[p] = true;
            }
            let mut cells: Vec<usize> = positions
                .iter()
                .flat_map(|&p| [graph.edges[p].0, graph.edges[p].1])
                .collect();
            cells.sort_unstable();
            let disjoint = cells.windows(2).all(|w| w[0] != w[1]);
            if disjoint {
                moves.push(Move { cells, positions: positions.into_iter().collect() });
            }
        }
        let mut by_cell = vec![Vec::new(); n_cells];
        for (m, mv) in moves.iter().enumerate() {
            for &c in &mv.cells {
                by_cell[c].push(m);
            }
        }
        Search { n_cells, moves, by_cell, weights }
    }

    fn available(&self, m: usize, covered: &[bool]) -> bool {
        self.moves[m].cells.iter().all(|&c| !covered[c])
    }

    /// Uncovered cell with the fewest available moves, or `None` when all covered.
    fn pick(&self, covered: &[bool]) -> Option<(usize, Vec<usize>)> {
        let mut best: Option<(usize, Vec<usize>)> = None;
        for c in 0..self.n_cells {
            if covered[c] {
                continue;
            }
            let opts: Vec<usize> =
                self.by_cell[c].iter().copied().filter(|&m| self.available(m, covered)).collect();
            let better = best.as_ref().is_none_or(|(_, b)| opts.len() < b.len());
            if better {
                let done = opts.len() <= 1;
                best = Some((c, opts));
                if done {
                    break;
                }
            }
        }
        best
    }

    fn set(&self, m: usize, covered: &mut [bool], value: bool) {
        for &c in &self.moves[m].cells {
            covered[c] = value;
        }
    }

    fn count(&self, covered: &mut Vec<bool>) -> BigInt {
        let Some((_, opts)) = self.pick(covered) else {
            return BigInt::one();
        };
        let mut total = BigInt::zero();
        for m in opts {
            self.set(m, covered, true);
            total += self.count(covered);
            self.set(m, covered, false);
        }
        total
    }

    fn weighted(&self, covered: &mut Vec<bool>) -> Rational {
        let Some((_, opts)) = self.pick(covered) else {
            return Rational::one();
        };
        let mut total = Rational::zero();
        for m in opts {
            self.set(m, covered, true);
            let sub = self.weighted(covered);
            if !sub.is_zero() {
                let w: Rational = self.moves[m].positions.iter().map(|&p| &self.weights[p]).product();
                total += sub * w;
            }
            self.set(m, covered, false);
        }
        total
    }

    fn collect(&self, covered: &mut Vec<bool>, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((_, opts)) = self.pick(covered) else {
            out.push(chosen.iter().flat_map(|&m| self.moves[m].positions.iter().copied()).collect());
            return;
        };
        for m in opts {
            self.set(m, covered, true);
            chosen.push(m);
            self.collect(covered, chosen, out);
            chosen.pop();
            self.set(m, covered, false);
        }
    }
}

impl MatchOracle {
    pub fn new(cell_budget: usize) -> Self {
        MatchOracle { cell_budget }
    }

    /// Default budget, overridden by `HEXATILE_CELL_BUDGET` when it parses.
    pub fn from_env() -> Self {
        let cell_budget = std::env::var(CELL_BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_CELL_BUDGET);
        MatchOracle { cell_budget }
    }

    fn check_budget(&self, region: &Region) -> Result<()> {
        if region.len() > self.cell_budget {
            return Err(Error::resource(format!(
                "region has {} cells, oracle budget is {}",
                region.len(),
                self.cell_budget
            )));
        }
        Ok(())
    }

    fn prepare(&self, region: &Region, syms: &BTreeSet<Symmetry>) -> Result<(DualGraph, Vec<Vec<usize>>)> {
        self.check_budget(region)?;
        let graph = dual_graph(region);
        let group = region.symmetry_group(syms)?;
        let perms = group
            .iter()
            .map(|g| {
                graph
                    .vertices
                    .iter()
                    .map(|c| graph.vertices.binary_search(&g.apply(c)).expect("region is closed"))
                    .collect()
            })
            .collect();
        Ok((graph, perms))
    }

    /// Every tiling exactly once, sorted lexicographically by lozenge positions.
    pub fn enumerate_tilings(&self, region: &Region) -> Result<Vec<Tiling>> {
        self.enumerate_invariant(region, &BTreeSet::new())
    }

    /// Tilings fixed by every symmetry in `syms`, in canonical order.
    pub fn enumerate_invariant(&self, region: &Region, syms: &BTreeSet<Symmetry>) -> Result<Vec<Tiling>> {
        let (graph, perms) = self.prepare(region, syms)?;
        let weights: Vec<Rational> = graph.edges.iter().map(|e| e.2.clone()).collect();
        let search = Search::new(&graph, &perms, &weights);
        let mut raw = Vec::new();
        search.collect(&mut vec![false; graph.vertices.len()], &mut Vec::new(), &mut raw);
        let positions = region.positions();
        let mut tilings: Vec<Tiling> = raw
            .into_iter()
            .map(|edges| Tiling::new(edges.into_iter().map(|e| positions[e]).collect()))
            .collect();
        tilings.sort();
        Ok(tilings)
    }

    /// Weighted sum over tilings together with the plain count.
    pub fn matching_count(&self, region: &Region) -> Result<MatchingCount> {
        let (graph, perms) = self.prepare(region, &BTreeSet::new())?;
        let weights: Vec<Rational> = graph.edges.iter().map(|e| e.2.clone()).collect();
        let search = Search::new(&graph, &perms, &weights);
        let n = graph.vertices.len();
        let cardinality = search.count(&mut vec![false; n]);
        let value = if region.weights().is_empty() {
            Rational::from_integer(cardinality.clone())
        } else {
            search.weighted(&mut vec![false; n])
        };
        Ok(MatchingCount { value, cardinality })
    }

    /// `L(R)`: sum over tilings of the product of position weights.
    pub fn tiling_gen_fn(&self, region: &Region) -> Result<Rational> {
        Ok(self.matching_count(region)?.value)
    }

    /// Number of tilings fixed by every symmetry in `syms` (weights ignored).
    pub fn count_invariant(&self, region: &Region, syms: &BTreeSet<Symmetry>) -> Result<Integer> {
        let (graph, perms) = self.prepare(region, syms)?;
        let weights: Vec<Rational> = graph.edges.iter().map(|e| e.2.clone()).collect();
        let search = Search::new(&graph, &perms, &weights);
        Ok(search.count(&mut vec![false; graph.vertices.len()]))
    }
}

pub fn enumerate_tilings(region: &Region) -> Result<Vec<Tiling>> {
    MatchOracle::default().enumerate_tilings(region)
}

pub fn tiling_gen_fn(region: &Region) -> Result<Rational> {
    MatchOracle::default().tiling_gen_fn(region)
}

pub fn count_invariant(region: &Region, syms: &[Symmetry]) -> Result<Integer> {
    MatchOracle::default().count_invariant(region, &syms.iter().copied().collect())
}

/// Positions used by a tiling, for callers that need lookups.
pub fn position_set(t: &Tiling) -> BTreeSet<LozengePos> {
    t.lozenges().iter().copied().collect()
}
