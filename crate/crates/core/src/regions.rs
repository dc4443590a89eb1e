//! Regions of the triangular lattice.
//!
//! Lattice points are integer combinations `p*e1 + q*e2` of the unit vectors
//! `e1 = (1, 0)` and `e2 = (1/2, sqrt(3)/2)`. The rhombic cell `(u, v)` spanned
//! by `(u, v)`, `(u+1, v)`, `(u, v+1)`, `(u+1, v+1)` holds one upward triangle
//! `(u,v) (u+1,v) (u,v+1)` and one downward triangle `(u+1,v) (u+1,v+1) (u,v+1)`.
//!
//! Symmetries act on triangle centroids scaled by 3, which are the integer
//! points `(3u+1, 3v+1)` (up) and `(3u+2, 3v+2)` (down), so every rotation and
//! reflection of the lattice is an exact integer affine map.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactnum::{frac, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orient {
    Up,
    Down,
}

/// A unit triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub u: i64,
    pub v: i64,
    pub orient: Orient,
}

pub type LatticePoint = (i64, i64);

impl Cell {
    pub const fn up(u: i64, v: i64) -> Cell {
        Cell { u, v, orient: Orient::Up }
    }

    pub const fn down(u: i64, v: i64) -> Cell {
        Cell { u, v, orient: Orient::Down }
    }

    pub fn vertices(&self) -> [LatticePoint; 3] {
        let (u, v) = (self.u, self.v);
        match self.orient {
            Orient::Up => [(u, v), (u + 1, v), (u, v + 1)],
            Orient::Down => [(u + 1, v), (u + 1, v + 1), (u, v + 1)],
        }
    }

    /// The three edge-adjacent triangles, all of the opposite orientation.
    pub fn neighbors(&self) -> [Cell; 3] {
        let (u, v) = (self.u, self.v);
        match self.orient {
            Orient::Up => [Cell::down(u, v), Cell::down(u, v - 1), Cell::down(u - 1, v)],
            Orient::Down => [Cell::up(u, v), Cell::up(u, v + 1), Cell::up(u + 1, v)],
        }
    }

    /// Centroid scaled by 3.
    pub fn centroid3(&self) -> LatticePoint {
        match self.orient {
            Orient::Up => (3 * self.u + 1, 3 * self.v + 1),
            Orient::Down => (3 * self.u + 2, 3 * self.v + 2),
        }
    }

    pub fn from_centroid3(c: LatticePoint) -> Option<Cell> {
        let (a, b) = c;
        match (a.rem_euclid(3), b.rem_euclid(3)) {
            (1, 1) => Some(Cell::up((a - 1) / 3, (b - 1) / 3)),
            (2, 2) => Some(Cell::down((a - 2) / 3, (b - 2) / 3)),
            _ => None,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = match self.orient {
            Orient::Up => 'U',
            Orient::Down => 'D',
        };
        write!(f, "{o}({},{})", self.u, self.v)
    }
}

/// Direction of the edge shared by the two triangles of a lozenge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LozengeKind {
    /// Shared edge along `e1`.
    Horizontal,
    /// Shared edge along `e2`.
    Rising,
    /// Shared edge along `e2 - e1`.
    Falling,
}

/// Two edge-adjacent triangles, stored as (up, down).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LozengePos {
    up: Cell,
    down: Cell,
}

impl LozengePos {
    pub fn new(a: Cell, b: Cell) -> Result<LozengePos> {
        let (up, down) = match (a.orient, b.orient) {
            (Orient::Up, Orient::Down) => (a, b),
            (Orient::Down, Orient::Up) => (b, a),
            _ => return Err(Error::domain(format!("{a} and {b} have the same orientation"))),
        };
        if !up.neighbors().contains(&down) {
            return Err(Error::domain(format!("{a} and {b} do not share an edge")));
        }
        Ok(LozengePos { up, down })
    }

    pub fn up(&self) -> Cell {
        self.up
    }

    pub fn down(&self) -> Cell {
        self.down
    }

    pub fn cells(&self) -> [Cell; 2] {
        [self.up, self.down]
    }

    pub fn kind(&self) -> LozengeKind {
        let (du, dv) = (self.down.u - self.up.u, self.down.v - self.up.v);
        match (du, dv) {
            (0, 0) => LozengeKind::Falling,
            (0, -1) => LozengeKind::Horizontal,
            _ => LozengeKind::Rising,
        }
    }

    /// Outline as four lattice points in cyclic order.
    pub fn outline(&self) -> [LatticePoint; 4] {
        let up = self.up.vertices();
        let down = self.down.vertices();
        let apex_up = *up.iter().find(|p| !down.contains(p)).expect("lozenge apex");
        let apex_down = *down.iter().find(|p| !up.contains(p)).expect("lozenge apex");
        let shared: Vec<LatticePoint> = up.iter().copied().filter(|p| down.contains(p)).collect();
        [apex_up, shared[0], apex_down, shared[1]]
    }
}

impl fmt::Display for LozengePos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}", self.up, self.down)
    }
}

/// A finite set of unit triangles with lozenge-position weights (default 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    cells: BTreeSet<Cell>,
    weights: BTreeMap<LozengePos, Rational>,
    holes: Vec<[LatticePoint; 3]>,
}

impl Region {
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Region {
        Region { cells: cells.into_iter().collect(), weights: BTreeMap::new(), holes: Vec::new() }
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.contains(c)
    }

    pub fn count_orient(&self, o: Orient) -> usize {
        self.cells.iter().filter(|c| c.orient == o).count()
    }

    /// Non-unit weights only.
    pub fn weights(&self) -> &BTreeMap<LozengePos, Rational> {
        &self.weights
    }

    pub fn weight(&self, pos: &LozengePos) -> Rational {
        self.weights.get(pos).cloned().unwrap_or_else(Rational::one)
    }

    pub fn set_weight(&mut self, pos: LozengePos, w: Rational) -> Result<()> {
        if !w.is_positive() {
            return Err(Error::domain(format!("weight {w} is not positive")));
        }
        if !pos.cells().iter().all(|c| self.cells.contains(c)) {
            return Err(Error::domain(format!("weighted position {pos} leaves the region")));
        }
        if w.is_one() {
            self.weights.remove(&pos);
        } else {
            self.weights.insert(pos, w);
        }
        Ok(())
    }

    /// Triangular holes recorded for drawing.
    pub fn holes(&self) -> &[[LatticePoint; 3]] {
        &self.holes
    }

    /// Every lozenge position with both triangles inside the region, sorted.
    pub fn positions(&self) -> Vec<LozengePos> {
        let mut out = Vec::new();
        for c in self.cells.iter().filter(|c| c.orient == Orient::Up) {
            for d in c.neighbors() {
                if self.cells.contains(&d) {
                    out.push(LozengePos { up: *c, down: d });
                }
            }
        }
        out.sort();
        out
    }

    /// Keeps only the given cells (weights restricted accordingly).
    pub fn restrict(&self, keep: impl Fn(&Cell) -> bool) -> Region {
        let cells: BTreeSet<Cell> = self.cells.iter().copied().filter(|c| keep(c)).collect();
        let weights = self
            .weights
            .iter()
            .filter(|(p, _)| p.cells().iter().all(|c| cells.contains(c)))
            .map(|(p, w)| (*p, w.clone()))
            .collect();
        Region { cells, weights, holes: Vec::new() }
    }
}

/// Triangles inside the lattice hexagon traced from the origin with the given
/// side lengths along `e1, e2, e2-e1, -e1, -e2, e1-e2`.
fn hexagon_cells(s: [i64; 6]) -> BTreeSet<Cell> {
    let p_max = s[0];
    let s_max = s[0] + s[1];
    let q_max = s[1] + s[2];
    let p_min = s[0] - s[2] - s[3];
    let s_min = s[0] + s[1] - s[3] - s[4];
    let inside = |(p, q): LatticePoint| {
        q >= 0 && q <= q_max && p >= p_min && p <= p_max && p + q >= s_min && p + q <= s_max
    };
    let mut cells = BTreeSet::new();
    for u in p_min - 1..=p_max {
        for v in -1..=q_max {
            for c in [Cell::up(u, v), Cell::down(u, v)] {
                if c.vertices().iter().all(|&pt| inside(pt)) {
                    cells.insert(c);
                }
            }
        }
    }
    cells
}

/// `H(a, b, c)`: sides `a, b, c, a, b, c` in cyclic order.
pub fn hexagon(a: i64, b: i64, c: i64) -> Result<Region> {
    if a < 0 || b < 0 || c < 0 {
        return Err(Error::domain(format!("hexagon sides must be nonnegative, got ({a},{b},{c})")));
    }
    if a == 0 && b == 0 && c == 0 {
        return Err(Error::domain("hexagon sides are all zero"));
    }
    Ok(Region::from_cells(hexagon_cells([a, b, c, a, b, c])))
}

/// `H_{n,x}`: the hexagon with sides `n, n+x, n, n+x, n, n+x` with a central
/// downward triangle of side `x` removed (its corners face the sides of length `n`).
pub fn cored_hexagon(n: i64, x: i64) -> Result<Region> {
    if n < 1 || x < 0 {
        return Err(Error::domain(format!("cored hexagon needs n >= 1, x >= 0, got ({n},{x})")));
    }
    let m = n + x;
    let outer = hexagon_cells([n, m, n, m, n, m]);
    // Core corners (0,n), (0,n+x), (-x,n+x): p <= 0, q <= n+x, p+q >= n.
    let in_core = |(p, q): LatticePoint| p <= 0 && q <= n + x && p + q >= n;
    let cells = outer.into_iter().filter(|c| !c.vertices().iter().all(|&pt| in_core(pt)));
    let mut region = Region::from_cells(cells);
    if x > 0 {
        region.holes.push([(0, n), (0, n + x), (-x, n + x)]);
    }
    Ok(region)
}

/// Square-lattice point used by the path encoding of tilings.
pub type PathPoint = (i64, i64);

/// Upward triangle just after path point `(X, Y)`.
pub fn path_point_up(p: PathPoint) -> Cell {
    Cell::up(-p.1, p.0 + p.1)
}

/// Downward triangle just before path point `(X, Y)`.
pub fn path_point_down(p: PathPoint) -> Cell {
    Cell::down(-p.1, p.0 + p.1 - 1)
}

/// Lozenge used by an east step out of `p`.
pub fn east_step(p: PathPoint) -> LozengePos {
    LozengePos { up: path_point_up(p), down: path_point_down((p.0 + 1, p.1)) }
}

/// Lozenge used by a north step out of `p`.
pub fn north_step(p: PathPoint) -> LozengePos {
    LozengePos { up: path_point_up(p), down: path_point_down((p.0, p.1 + 1)) }
}

/// The region whose tilings are exactly the vertex-disjoint families of
/// north/east paths from `starts` to `ends` that stay inside `points`.
///
/// Each path point owns the downward triangle entered through it and the
/// upward triangle left through it; starts own only the latter, ends only
/// the former. Points off every path are covered by horizontal lozenges.
pub fn region_from_path_points(
    points: &BTreeSet<PathPoint>,
    starts: &[PathPoint],
    ends: &[PathPoint],
) -> Region {
    let mut cells = BTreeSet::new();
    for p in points {
        if !starts.contains(p) {
            cells.insert(path_point_down(*p));
        }
        if !ends.contains(p) {
            cells.insert(path_point_up(*p));
        }
    }
    Region::from_cells(cells)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PentagonKind {
    /// Positions entering the north-eastern indentations weighted 1/2.
    A,
    /// Positions leaving the western indentations weighted 1/2.
    B,
    /// All positions weighted 1.
    C,
}

/// The pentagonal regions `A_{n,x}`, `B_{n,x}`, `C_{n,x}`, built from their
/// path encoding: starts `(i, 2n-2i-1)`, ends `(x+2i, 2n-i-1)`.
pub fn weighted_pentagon(kind: PentagonKind, n: i64, x: i64) -> Result<Region> {
    if n < 1 || x < 0 {
        return Err(Error::domain(format!("pentagon needs n >= 1, x >= 0, got ({n},{x})")));
    }
    let starts: Vec<PathPoint> = (0..n).map(|i| (i, 2 * n - 2 * i - 1)).collect();
    let ends: Vec<PathPoint> = (0..n).map(|i| (x + 2 * i, 2 * n - i - 1)).collect();
    let mut points = BTreeSet::new();
    for (s, e) in starts.iter().zip(&ends) {
        for px in s.0..=e.0 {
            for py in s.1..=e.1 {
                points.insert((px, py));
            }
        }
    }
    let mut region = region_from_path_points(&points, &starts, &ends);
    let half = frac(1, 2);
    match kind {
        PentagonKind::A => {
            for e in &ends {
                let before = (e.0 - 1, e.1);
                if points.contains(&before) && !ends.contains(&before) {
                    region.set_weight(east_step(before), half.clone())?;
                }
            }
        }
        PentagonKind::B => {
            for s in &starts {
                let above = (s.0, s.1 + 1);
                if points.contains(&above) && !starts.contains(&above) {
                    region.set_weight(north_step(*s), half.clone())?;
                }
            }
        }
        PentagonKind::C => {}
    }
    Ok(region)
}

/// Symmetry operations on tilings of hexagonal regions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symmetry {
    /// Transposition: reflection in the diagonal through the corners where
    /// the sides along `e1` and `e2` meet.
    T,
    /// Reflection in the axis perpendicular to the sides along `e2 - e1`.
    TPrime,
    /// Rotation by 120 degrees.
    R,
    /// Complementation: rotation by 180 degrees.
    K,
}

impl Symmetry {
    pub fn name(self) -> &'static str {
        match self {
            Symmetry::T => "t",
            Symmetry::TPrime => "t'",
            Symmetry::R => "r",
            Symmetry::K => "k",
        }
    }

    fn linear(self) -> [[i64; 2]; 2] {
        match self {
            Symmetry::T => [[0, -1], [-1, 0]],
            Symmetry::TPrime => [[0, 1], [1, 0]],
            Symmetry::R => [[-1, -1], [1, 0]],
            Symmetry::K => [[-1, 0], [0, -1]],
        }
    }

    pub fn is_reflection(self) -> bool {
        matches!(self, Symmetry::T | Symmetry::TPrime)
    }
}

/// Integer affine map on scaled centroids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellMap {
    m: [[i64; 2]; 2],
    t: LatticePoint,
}

impl CellMap {
    pub fn identity() -> CellMap {
        CellMap { m: [[1, 0], [0, 1]], t: (0, 0) }
    }

    fn apply_point(&self, (a, b): LatticePoint) -> LatticePoint {
        (self.m[0][0] * a + self.m[0][1] * b + self.t.0, self.m[1][0] * a + self.m[1][1] * b + self.t.1)
    }

    pub fn apply(&self, c: &Cell) -> Cell {
        Cell::from_centroid3(self.apply_point(c.centroid3())).expect("lattice maps preserve centroids")
    }

    pub fn apply_lozenge(&self, p: &LozengePos) -> LozengePos {
        LozengePos::new(self.apply(&p.up), self.apply(&p.down)).expect("lattice maps preserve adjacency")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &CellMap) -> CellMap {
        let mut m = [[0; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.m[i][0] * other.m[0][j] + self.m[i][1] * other.m[1][j];
            }
        }
        CellMap { m, t: self.apply_point(other.t) }
    }
}

impl Region {
    /// The map realizing `sym` about the region's center, checked to carry the
    /// region (cells and weights) onto itself.
    pub fn symmetry_map(&self, sym: Symmetry) -> Result<CellMap> {
        let m = sym.linear();
        let n = self.cells.len() as i64;
        if n == 0 {
            return Ok(CellMap { m, t: (0, 0) });
        }
        let (sa, sb) = self
            .cells
            .iter()
            .map(Cell::centroid3)
            .fold((0i64, 0i64), |acc, c| (acc.0 + c.0, acc.1 + c.1));
        // Fixing the center of mass S: t = S - M S.
        let ta = sa - (m[0][0] * sa + m[0][1] * sb);
        let tb = sb - (m[1][0] * sa + m[1][1] * sb);
        let not_closed = || Error::domain(format!("region is not closed under {}", sym.name()));
        if ta % n != 0 || tb % n != 0 {
            return Err(not_closed());
        }
        let map = CellMap { m, t: (ta / n, tb / n) };
        if self.cells.iter().any(|c| !self.cells.contains(&map.apply(c))) {
            return Err(not_closed());
        }
        for (p, w) in &self.weights {
            if self.weight(&map.apply_lozenge(p)) != *w {
                return Err(Error::domain(format!("weights are not invariant under {}", sym.name())));
            }
        }
        Ok(map)
    }

    /// All maps of the group generated by `syms`, identity first.
    pub fn symmetry_group(&self, syms: &BTreeSet<Symmetry>) -> Result<Vec<CellMap>> {
        let gens = syms.iter().map(|s| self.symmetry_map(*s)).collect::<Result<Vec<_>>>()?;
        let mut group = vec![CellMap::identity()];
        let mut i = 0;
        while i < group.len() {
            for g in &gens {
                let h = g.compose(&group[i]);
                if !group.contains(&h) {
                    group.push(h);
                }
            }
            i += 1;
        }
        Ok(group)
    }
}

/// A tiling as the sorted set of its lozenge positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling(Vec<LozengePos>);

impl Tiling {
    pub fn new(mut lozenges: Vec<LozengePos>) -> Tiling {
        lozenges.sort();
        lozenges.dedup();
        Tiling(lozenges)
    }

    pub fn lozenges(&self) -> &[LozengePos] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when every cell of `region` is covered exactly once and nothing else.
    pub fn covers_exactly(&self, region: &Region) -> bool {
        let mut seen = BTreeSet::new();
        for p in &self.0 {
            for c in p.cells() {
                if !region.contains(&c) || !seen.insert(c) {
                    return false;
                }
            }
        }
        seen.len() == region.len()
    }

    pub fn weight(&self, region: &Region) -> Rational {
        self.0.iter().map(|p| region.weight(p)).product()
    }

    pub fn map(&self, map: &CellMap) -> Tiling {
        Tiling::new(self.0.iter().map(|p| map.apply_lozenge(p)).collect())
    }
}

/// Image of `tiling` under `sym`; a tiling is invariant iff the image equals it.
pub fn apply_symmetry(sym: Symmetry, region: &Region, tiling: &Tiling) -> Result<Tiling> {
    let map = region.symmetry_map(sym)?;
    Ok(tiling.map(&map))
}

/// Splits a region along the axis of a reflection. Returns the triangles the
/// axis passes through and the half on one side. Every reflection-invariant
/// tiling restricts to a tiling of the axis triangles among themselves and a
/// tiling of the half, and is determined by that pair.
pub fn reflection_split(region: &Region, sym: Symmetry) -> Result<(Region, Region)> {
    if !sym.is_reflection() {
        return Err(Error::domain(format!("{} is not a reflection", sym.name())));
    }
    let map = region.symmetry_map(sym)?;
    // nu is the (-1)-eigenvector of the linear part; side(c) = nu.c - nu.map(c).
    let nu = match sym {
        Symmetry::TPrime => (1, -1),
        _ => (1, 1),
    };
    let side = |c: &Cell| {
        let (a, b) = c.centroid3();
        let (ma, mb) = map.apply(c).centroid3();
        nu.0 * (a - ma) + nu.1 * (b - mb)
    };
    let axis = region.restrict(|c| side(c) == 0);
    let half = region.restrict(|c| side(c) > 0);
    if region.cells.iter().any(|c| side(c) > 0 && c.neighbors().iter().any(|d| region.contains(d) && side(d) < 0)) {
        return Err(Error::domain("a lozenge position straddles the axis"));
    }
    Ok((axis, half))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_sizes() {
        assert_eq!(hexagon(1, 1, 1).unwrap().len(), 6);
        assert_eq!(hexagon(2, 2, 2).unwrap().len(), 24);
        assert_eq!(hexagon(1, 2, 3).unwrap().len(), 22);
        assert!(hexagon(-1, 1, 1).is_err());
        assert!(hexagon(0, 0, 0).is_err());
    }

    #[test]
    fn hexagon_cell_counts_balance() {
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    if a + b + c == 0 {
                        continue;
                    }
                    let h = hexagon(a, b, c).unwrap();
                    let area = (a * b + b * c + c * a) as usize;
                    assert_eq!(h.count_orient(Orient::Up), area, "({a},{b},{c})");
                    assert_eq!(h.count_orient(Orient::Down), area, "({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn cored_hexagon_sizes() {
        assert_eq!(cored_hexagon(1, 1).unwrap().len(), 12);
        assert_eq!(cored_hexagon(4, 2).unwrap().len(), 144);
        assert_eq!(cored_hexagon(3, 0).unwrap().cells(), hexagon(3, 3, 3).unwrap().cells());
        assert!(cored_hexagon(0, 1).is_err());
        for n in 1..5 {
            for x in 0..5 {
                let h = cored_hexagon(n, x).unwrap();
                assert_eq!(h.len() as i64, 6 * n * (n + x));
                assert_eq!(h.count_orient(Orient::Up), h.count_orient(Orient::Down));
            }
        }
    }

    #[test]
    fn rotation_acts_freely_on_cored_hexagon() {
        for n in 1..4 {
            for x in 1..4 {
                let h = cored_hexagon(n, x).unwrap();
                let r = h.symmetry_map(Symmetry::R).unwrap();
                assert!(h.cells().iter().all(|c| r.apply(c) != *c));
                assert!(h.cells().iter().all(|c| r.apply(&r.apply(&r.apply(c))) == *c));
            }
        }
    }

    #[test]
    fn symmetry_closure() {
        let h = hexagon(2, 2, 3).unwrap();
        assert!(h.symmetry_map(Symmetry::K).is_ok());
        assert!(h.symmetry_map(Symmetry::T).is_ok());
        assert!(h.symmetry_map(Symmetry::TPrime).is_ok());
        assert!(h.symmetry_map(Symmetry::R).is_err());
        let h = hexagon(1, 2, 3).unwrap();
        assert!(h.symmetry_map(Symmetry::T).is_err());
        let g = hexagon(2, 2, 2).unwrap().symmetry_group(&[Symmetry::R, Symmetry::T].into()).unwrap();
        assert_eq!(g.len(), 6);
        let g = cored_hexagon(2, 2).unwrap().symmetry_group(&[Symmetry::R, Symmetry::TPrime].into()).unwrap();
        assert_eq!(g.len(), 6);
    }

    #[test]
    fn pentagon_single_lozenge() {
        let a = weighted_pentagon(PentagonKind::A, 1, 1).unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a.positions().len(), 1);
        assert_eq!(a.weights().values().cloned().collect::<Vec<_>>(), vec![frac(1, 2)]);
        let b = weighted_pentagon(PentagonKind::B, 1, 1).unwrap();
        assert!(b.weights().is_empty());
    }

    #[test]
    fn pentagon_weight_counts() {
        for n in 1..5 {
            for x in 1..4 {
                let a = weighted_pentagon(PentagonKind::A, n, x).unwrap();
                let b = weighted_pentagon(PentagonKind::B, n, x).unwrap();
                let c = weighted_pentagon(PentagonKind::C, n, x).unwrap();
                assert_eq!(a.weights().len() as i64, n);
                assert_eq!(b.weights().len() as i64, n - 1);
                assert!(c.weights().is_empty());
                assert_eq!(a.cells(), c.cells());
                assert_eq!(b.cells(), c.cells());
            }
        }
    }

    #[test]
    fn lozenge_validation() {
        assert!(LozengePos::new(Cell::up(0, 0), Cell::down(0, 0)).is_ok());
        assert!(LozengePos::new(Cell::down(-1, 0), Cell::up(0, 0)).is_ok());
        assert!(LozengePos::new(Cell::up(0, 0), Cell::down(1, 1)).is_err());
        assert!(LozengePos::new(Cell::up(0, 0), Cell::up(0, 1)).is_err());
        let kinds: BTreeSet<_> = Cell::up(0, 0)
            .neighbors()
            .iter()
            .map(|d| LozengePos::new(Cell::up(0, 0), *d).unwrap().kind())
            .collect();
        assert_eq!(kinds.len(), 3);
    }

    #[test]
    fn weights_must_stay_inside() {
        let mut h = hexagon(1, 1, 1).unwrap();
        let outside = LozengePos::new(Cell::up(5, 5), Cell::down(5, 5)).unwrap();
        assert!(h.set_weight(outside, frac(1, 2)).is_err());
        let inside = h.positions()[0];
        assert!(h.set_weight(inside, frac(-1, 2)).is_err());
        assert!(h.set_weight(inside, frac(1, 2)).is_ok());
    }

    #[test]
    fn reflection_split_of_hexagon() {
        let h = hexagon(2, 2, 2).unwrap();
        let (axis, half) = reflection_split(&h, Symmetry::TPrime).unwrap();
        assert_eq!(axis.len() + 2 * half.len(), h.len());
        assert!(reflection_split(&h, Symmetry::R).is_err());
    }
}
