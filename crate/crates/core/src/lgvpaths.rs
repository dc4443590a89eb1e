//! Non-intersecting lattice paths: path systems with half-weighted first or
//! last steps, their path-count matrices, a brute-force family enumerator,
//! and the path encoding of an arbitrary region.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, frac, Rational};
use crate::matrices::{determinant, RationalMatrix};
use crate::regions::{east_step, north_step, path_point_down, path_point_up, PathPoint, Region};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepRule {
    Plain,
    /// A path whose final step is east weighs 1/2.
    HalfLastHorizontal,
    /// A path whose first step is north weighs 1/2.
    HalfFirstVertical,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSystem {
    pub starts: Vec<PathPoint>,
    pub ends: Vec<PathPoint>,
    pub rule: StepRule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SystemKind {
    /// Pentagon paths, last east step weighted 1/2.
    A { n: i64, x: i64 },
    /// Pentagon paths, first north step weighted 1/2.
    B { n: i64, x: i64 },
    /// Pentagon paths, unweighted.
    C { n: i64, x: i64 },
    /// Paths of the fundamental region for a label set `S ⊆ {0..n-1}`.
    Minor { n: i64, x: i64, set: Vec<i64> },
}

pub fn path_system(kind: &SystemKind) -> Result<PathSystem> {
    let pentagon = |n: i64, x: i64, rule| {
        if n < 1 || x < 0 {
            return Err(Error::domain(format!("pentagon paths need n >= 1, x >= 0, got ({n},{x})")));
        }
        Ok(PathSystem {
            starts: (0..n).map(|i| (i, 2 * n - 2 * i - 1)).collect(),
            ends: (0..n).map(|i| (x + 2 * i, 2 * n - i - 1)).collect(),
            rule,
        })
    };
    match kind {
        SystemKind::A { n, x } => pentagon(*n, *x, StepRule::HalfLastHorizontal),
        SystemKind::B { n, x } => pentagon(*n, *x, StepRule::HalfFirstVertical),
        SystemKind::C { n, x } => pentagon(*n, *x, StepRule::Plain),
        SystemKind::Minor { n, x, set } => {
            if *n < 1 || *x < 0 {
                return Err(Error::domain(format!("minor paths need n >= 1, x >= 0, got ({n},{x})")));
            }
            let valid = set.iter().all(|i| (0..*n).contains(i)) && set.windows(2).all(|w| w[0] < w[1]);
            if !valid {
                return Err(Error::domain(format!("index set {set:?} is not increasing in 0..{n}")));
            }
            Ok(PathSystem {
                starts: set.iter().map(|i| (n - i - 1, 0)).collect(),
                ends: set.iter().map(|i| (n - 1, x + i)).collect(),
                rule: StepRule::Plain,
            })
        }
    }
}

/// Number of north/east paths between two points by dynamic programming
/// over the rectangle.
fn plain_paths(u: PathPoint, v: PathPoint) -> Rational {
    let (w, h) = (v.0 - u.0, v.1 - u.1);
    if w < 0 || h < 0 {
        return Rational::zero();
    }
    let mut row = vec![Rational::one(); (w + 1) as usize];
    for _ in 0..h {
        for i in 1..row.len() {
            let left = row[i - 1].clone();
            row[i] += left;
        }
    }
    row[w as usize].clone()
}

/// Weighted count of north/east paths from `u` to `v` under `rule`.
pub fn path_count(u: PathPoint, v: PathPoint, rule: StepRule) -> Rational {
    if v.0 < u.0 || v.1 < u.1 {
        return Rational::zero();
    }
    if u == v {
        return Rational::one();
    }
    let half = frac(1, 2);
    match rule {
        StepRule::Plain => plain_paths(u, v),
        StepRule::HalfLastHorizontal => {
            half * plain_paths(u, (v.0 - 1, v.1)) + plain_paths(u, (v.0, v.1 - 1))
        }
        StepRule::HalfFirstVertical => {
            half * plain_paths((u.0, u.1 + 1), v) + plain_paths((u.0 + 1, u.1), v)
        }
    }
}

pub fn lgv_matrix(sys: &PathSystem) -> RationalMatrix {
    RationalMatrix::from_fn(sys.starts.len(), sys.ends.len(), |i, j| {
        path_count(sys.starts[i], sys.ends[j], sys.rule)
    })
}

/// Weighted count of non-intersecting families (the start/end configuration
/// is assumed nonpermutable).
pub fn lgv_count(sys: &PathSystem) -> Result<Rational> {
    if sys.starts.len() != sys.ends.len() {
        return Err(Error::domain("path system has unequal numbers of starts and ends"));
    }
    determinant(&lgv_matrix(sys))
}

/// Closed form of the A-system entry, valid for `x >= 1`.
pub fn entry_closed_a(x: i64, i: i64, j: i64) -> Rational {
    let m = x + i + j - 1;
    frac(1, 2) * Rational::from_integer(binomial(m, 2 * i - j))
        + Rational::from_integer(binomial(m, 2 * i - j - 1))
}

/// Closed form of the B-system entry, valid for `x >= 1`.
pub fn entry_closed_b(x: i64, i: i64, j: i64) -> Rational {
    let m = x + i + j - 1;
    frac(1, 2) * Rational::from_integer(binomial(m, 2 * i - j - 1))
        + Rational::from_integer(binomial(m, 2 * i - j))
}

pub const BRUTE_MAX_PATHS: usize = 4;
pub const BRUTE_MAX_COORD: i64 = 12;

struct FamilySearch<'a> {
    sys: &'a PathSystem,
    used: BTreeSet<PathPoint>,
}

impl FamilySearch<'_> {
    /// Sum over paths `k..` continuing from `at` (path `k` in progress).
    fn extend(&mut self, k: usize, at: PathPoint, first: bool, last_east: bool, weight: Rational) -> Rational {
        let end = self.sys.ends[k];
        if at == end {
            let rule_factor = match self.sys.rule {
                StepRule::HalfLastHorizontal if last_east => frac(1, 2),
                _ => Rational::one(),
            };
            return self.start_path(k + 1, weight * rule_factor);
        }
        let mut total = Rational::zero();
        for (step, east) in [((1, 0), true), ((0, 1), false)] {
            let next = (at.0 + step.0, at.1 + step.1);
            if next.0 > end.0 || next.1 > end.1 || self.used.contains(&next) {
                continue;
            }
            let factor = match self.sys.rule {
                StepRule::HalfFirstVertical if first && !east => frac(1, 2),
                _ => Rational::one(),
            };
            self.used.insert(next);
            total += self.extend(k, next, false, east, &weight * factor);
            self.used.remove(&next);
        }
        total
    }

    fn start_path(&mut self, k: usize, weight: Rational) -> Rational {
        if k == self.sys.starts.len() {
            return weight;
        }
        let s = self.sys.starts[k];
        if self.used.contains(&s) {
            return Rational::zero();
        }
        self.used.insert(s);
        let total = self.extend(k, s, true, false, weight);
        self.used.remove(&s);
        total
    }
}

/// Direct enumeration of vertex-disjoint families (path `i` from start `i`
/// to end `i`), summing weight products.
pub fn brute_families(sys: &PathSystem) -> Result<Rational> {
    if sys.starts.len() != sys.ends.len() {
        return Err(Error::domain("path system has unequal numbers of starts and ends"));
    }
    let too_far = sys.starts.iter().chain(&sys.ends).any(|p| p.0.abs() > BRUTE_MAX_COORD || p.1.abs() > BRUTE_MAX_COORD);
    if sys.starts.len() > BRUTE_MAX_PATHS || too_far {
        return Err(Error::resource(format!(
            "path brute force is limited to {BRUTE_MAX_PATHS} paths with coordinates within {BRUTE_MAX_COORD}"
        )));
    }
    let mut search = FamilySearch { sys, used: BTreeSet::new() };
    Ok(search.start_path(0, Rational::one()))
}

/// Tiling generating function of a simply connected region through its path
/// encoding: sources, sinks and the weighted path DAG are read off the
/// region, and the count is the determinant of source-to-sink path sums.
pub fn region_lgv(region: &Region) -> Result<Rational> {
    let mut has_up: BTreeSet<PathPoint> = BTreeSet::new();
    let mut has_down: BTreeSet<PathPoint> = BTreeSet::new();
    for c in region.cells() {
        let (u, v) = (c.u, c.v);
        match c.orient {
            crate::regions::Orient::Up => has_up.insert((u + v, -u)),
            crate::regions::Orient::Down => has_down.insert((u + v + 1, -u)),
        };
    }
    let sources: Vec<PathPoint> = sort_for_lgv(has_up.difference(&has_down).copied().collect());
    let sinks: Vec<PathPoint> = sort_for_lgv(has_down.difference(&has_up).copied().collect());
    if sources.len() != sinks.len() {
        return Ok(Rational::zero());
    }

    // Points covered by a horizontal lozenge contribute its weight unless a
    // path passes through them.
    let mut global = Rational::one();
    let mut visit: HashMap<PathPoint, Rational> = HashMap::new();
    for p in has_up.intersection(&has_down) {
        let h = crate::regions::LozengePos::new(path_point_up(*p), path_point_down(*p))?;
        let w = region.weight(&h);
        if !w.is_one() {
            visit.insert(*p, Rational::one() / &w);
            global *= w;
        }
    }

    let step_weight = |p: PathPoint, east: bool| -> Option<Rational> {
        let pos = if east { east_step(p) } else { north_step(p) };
        let inside = pos.cells().iter().all(|c| region.contains(c));
        inside.then(|| region.weight(&pos))
    };

    // Every step raises X + Y by one, which orders the DAG.
    let mut layers: BTreeMap<i64, Vec<PathPoint>> = BTreeMap::new();
    for p in has_up.union(&has_down) {
        layers.entry(p.0 + p.1).or_default().push(*p);
    }
    let matrix = RationalMatrix::from_fn(sources.len(), sinks.len(), |i, j| {
        let (s, t) = (sources[i], sinks[j]);
        if t.0 + t.1 <= s.0 + s.1 {
            return Rational::zero();
        }
        let mut acc: HashMap<PathPoint, Rational> = HashMap::new();
        acc.insert(s, Rational::one());
        for (_, pts) in layers.range(s.0 + s.1..t.0 + t.1) {
            for p in pts {
                let Some(val) = acc.get(p).cloned() else { continue };
                if val.is_zero() || (*p != s && !has_up.contains(p)) {
                    continue;
                }
                for (east, next) in [(true, (p.0 + 1, p.1)), (false, (p.0, p.1 + 1))] {
                    if let Some(w) = step_weight(*p, east) {
                        let mut add = &val * w;
                        if let Some(f) = visit.get(&next) {
                            if next != t {
                                add *= f;
                            }
                        }
                        *acc.entry(next).or_insert_with(Rational::zero) += add;
                    }
                }
            }
        }
        acc.remove(&t).unwrap_or_else(Rational::zero)
    });
    Ok(determinant(&matrix)? * global)
}

/// Orders endpoints along the anti-diagonal direction so that the identity
/// pairing is the only one admitting disjoint families.
fn sort_for_lgv(mut pts: Vec<PathPoint>) -> Vec<PathPoint> {
    pts.sort_by_key(|p| (p.0 - p.1, p.0));
    pts
}
