//! Finite regions of the square lattice and the boundary feature counts
//! that control the toric-code entanglement entropy.
//!
//! A region is a finite set of unit cells of the integer lattice; the cell
//! `(x, y)` is the unit square `[x, x+1] × [y, y+1]`. Spins live on lattice
//! edges, and an edge is a *boundary* edge when exactly one of its two
//! incident cells belongs to the region. Feature counting classifies each
//! complement cell by how many of its four edges are boundary edges; the
//! resulting counts satisfy the exact identity
//!
//! ```text
//! adjacent_squares = perimeter - inward_angles - 3 * unit_holes
//! ```
//!
//! which is the per-cell bookkeeping behind the entropy formula: a cell
//! absorbing k boundary edges contributes k to the perimeter but only 1 to
//! the adjacent-square count.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::{HashMap, HashSet};

/// A unit cell `[x, x+1] × [y, y+1]` of the square lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Cell { x, y }
    }

    /// The four edge-adjacent neighbours, in E, N, W, S order.
    pub fn neighbors(&self) -> [Cell; 4] {
        [
            Cell::new(self.x + 1, self.y),
            Cell::new(self.x, self.y + 1),
            Cell::new(self.x - 1, self.y),
            Cell::new(self.x, self.y - 1),
        ]
    }

    /// The four edges of this cell, in the same E, N, W, S order as
    /// [`Cell::neighbors`], so `edges()[i]` separates `self` from
    /// `neighbors()[i]`.
    pub fn edges(&self) -> [Edge; 4] {
        [
            Edge::vertical(self.x + 1, self.y),
            Edge::horizontal(self.x, self.y + 1),
            Edge::vertical(self.x, self.y),
            Edge::horizontal(self.x, self.y),
        ]
    }
}

/// Orientation of a lattice edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// A lattice edge. A horizontal edge at `(x, y)` joins the vertices
/// `(x, y)`–`(x+1, y)` and separates the cells `(x, y-1)` and `(x, y)`;
/// a vertical edge at `(x, y)` joins `(x, y)`–`(x, y+1)` and separates
/// `(x-1, y)` and `(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub orientation: Orientation,
    pub x: i32,
    pub y: i32,
}

impl Edge {
    pub const fn horizontal(x: i32, y: i32) -> Self {
        Edge { orientation: Orientation::Horizontal, x, y }
    }

    pub const fn vertical(x: i32, y: i32) -> Self {
        Edge { orientation: Orientation::Vertical, x, y }
    }

    /// The two cells separated by this edge.
    pub fn cells(&self) -> (Cell, Cell) {
        match self.orientation {
            Orientation::Horizontal => (Cell::new(self.x, self.y - 1), Cell::new(self.x, self.y)),
            Orientation::Vertical => (Cell::new(self.x - 1, self.y), Cell::new(self.x, self.y)),
        }
    }

    /// The two lattice vertices joined by this edge.
    pub fn endpoints(&self) -> ((i32, i32), (i32, i32)) {
        match self.orientation {
            Orientation::Horizontal => ((self.x, self.y), (self.x + 1, self.y)),
            Orientation::Vertical => ((self.x, self.y), (self.x, self.y + 1)),
        }
    }
}

/// A finite set of cells defining the `A` side of a bipartition.
#[derive(Clone, Debug, Default)]
pub struct Region {
    cells: HashSet<Cell>,
    label: Option<String>,
}

impl PartialEq for Region {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for Region {}

impl Region {
    pub fn new() -> Self {
        Region::default()
    }

    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        Region { cells: cells.into_iter().collect(), label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn set_label(&mut self, label: Option<String>) {
        self.label = label;
    }

    pub fn insert(&mut self, cell: Cell) -> bool {
        self.cells.insert(cell)
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.cells.contains(cell)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter()
    }

    /// Cells in sorted order, for deterministic output.
    pub fn sorted_cells(&self) -> Vec<Cell> {
        let mut v: Vec<Cell> = self.cells.iter().copied().collect();
        v.sort();
        v
    }

    /// Inclusive bounding box `(min, max)` over cell coordinates, or `None`
    /// for the empty region.
    pub fn bounding_box(&self) -> Option<(Cell, Cell)> {
        let mut it = self.cells.iter();
        let first = *it.next()?;
        let mut min = first;
        let mut max = first;
        for c in it {
            min.x = min.x.min(c.x);
            min.y = min.y.min(c.y);
            max.x = max.x.max(c.x);
            max.y = max.y.max(c.y);
        }
        Some((min, max))
    }

    pub fn translated(&self, dx: i32, dy: i32) -> Region {
        Region {
            cells: self.cells.iter().map(|c| Cell::new(c.x + dx, c.y + dy)).collect(),
            label: self.label.clone(),
        }
    }

    /// Translate so the bounding-box minimum corner sits at the origin.
    pub fn canonicalized(&self) -> Region {
        match self.bounding_box() {
            Some((min, _)) => self.translated(-min.x, -min.y),
            None => self.clone(),
        }
    }

    /// Replace every cell by a `factor × factor` block of cells. The
    /// perimeter scales exactly by `factor`; for hole-free regions the
    /// inward-angle count is preserved, while a unit hole becomes a
    /// `factor × factor` hole.
    pub fn blow_up(&self, factor: u32) -> Region {
        let f = factor as i32;
        let mut cells = HashSet::with_capacity(self.cells.len() * (factor as usize).pow(2));
        for c in &self.cells {
            for dx in 0..f {
                for dy in 0..f {
                    cells.insert(Cell::new(c.x * f + dx, c.y * f + dy));
                }
            }
        }
        Region { cells, label: self.label.clone() }
    }

    /// Cells of the box `[min, max]` (inclusive) that are not in the region.
    pub fn complement_within(&self, min: Cell, max: Cell) -> Region {
        let mut cells = HashSet::new();
        for x in min.x..=max.x {
            for y in min.y..=max.y {
                let c = Cell::new(x, y);
                if !self.cells.contains(&c) {
                    cells.insert(c);
                }
            }
        }
        Region { cells, label: None }
    }
}

impl FromIterator<Cell> for Region {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        Region::from_cells(iter)
    }
}

/// Boundary feature counts of a region.
///
/// `perimeter` is the number of boundary edges (boundary spins). Every
/// other count classifies the complement-side cells by their number `k`
/// of boundary edges: a cell with `k = 4` is a unit hole, a cell with
/// `k ∈ {2, 3}` contributes `k - 1` inward angles (merges), and every cell
/// with `k ≥ 1` is one adjacent square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FeatureCounts {
    /// Number of boundary edges.
    pub perimeter: u64,
    /// Total merge count over complement cells with 2 or 3 boundary edges.
    pub inward_angles: u64,
    /// Complement cells whose four edges are all boundary edges.
    pub unit_holes: u64,
    /// Complement cells with at least one boundary edge.
    pub adjacent_squares: u64,
    /// Connected closed curves in the boundary edge set (edges are
    /// connected when they share a lattice vertex).
    pub loops: u64,
}

impl FeatureCounts {
    /// The entanglement entropy of the uniform group state, up to a
    /// topological O(1) correction per boundary loop: the number of
    /// adjacent squares.
    pub fn entropy(&self) -> u64 {
        self.adjacent_squares
    }

    /// `adjacent_squares = perimeter - inward_angles - 3 * unit_holes`,
    /// exact by construction.
    pub fn identity_holds(&self) -> bool {
        self.perimeter == self.adjacent_squares + self.inward_angles + 3 * self.unit_holes
    }
}

/// The edges with exactly one incident cell in the region, sorted.
pub fn boundary_edges(region: &Region) -> BTreeSet<Edge> {
    let mut edges = BTreeSet::new();
    for cell in region.iter() {
        for (edge, nbr) in cell.edges().iter().zip(cell.neighbors()) {
            if !region.contains(&nbr) {
                edges.insert(*edge);
            }
        }
    }
    edges
}

/// Number of complement cells with at least one boundary edge.
pub fn count_adjacent_squares(region: &Region) -> u64 {
    count_features(region).adjacent_squares
}

/// Classify all complement cells adjacent to the boundary and count the
/// boundary features of the region.
pub fn count_features(region: &Region) -> FeatureCounts {
    let mut absorbed: HashMap<Cell, u8> = HashMap::new();
    let mut edges: Vec<Edge> = Vec::new();
    for cell in region.iter() {
        for (edge, nbr) in cell.edges().iter().zip(cell.neighbors()) {
            if !region.contains(&nbr) {
                *absorbed.entry(nbr).or_insert(0) += 1;
                edges.push(*edge);
            }
        }
    }
    counts_from_classification(&absorbed, &edges)
}

/// Error from torus-based feature counting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorusCountError {
    /// Two cells of the region coincide once coordinates are reduced mod L.
    CellsCollide,
    /// The period must be at least 2.
    PeriodTooSmall,
}

impl fmt::Display for TorusCountError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorusCountError::CellsCollide => write!(f, "region cells collide modulo the period"),
            TorusCountError::PeriodTooSmall => write!(f, "torus period must be at least 2"),
        }
    }
}

impl core::error::Error for TorusCountError {}

/// Feature counts with periodic boundary conditions of period `l` in both
/// directions. Used for patterns, like the chessboard, that are defined by
/// their translation-invariant tiling rather than by a free-standing patch.
pub fn count_features_torus(region: &Region, l: i32) -> Result<FeatureCounts, TorusCountError> {
    if l < 2 {
        return Err(TorusCountError::PeriodTooSmall);
    }
    let m = |v: i32| v.rem_euclid(l);
    let mut cells: HashSet<Cell> = HashSet::with_capacity(region.len());
    for c in region.iter() {
        if !cells.insert(Cell::new(m(c.x), m(c.y))) {
            return Err(TorusCountError::CellsCollide);
        }
    }
    let mut absorbed: HashMap<Cell, u8> = HashMap::new();
    let mut edges: Vec<Edge> = Vec::new();
    for cell in &cells {
        for (edge, nbr) in cell.edges().iter().zip(cell.neighbors()) {
            let nbr = Cell::new(m(nbr.x), m(nbr.y));
            if !cells.contains(&nbr) {
                *absorbed.entry(nbr).or_insert(0) += 1;
                // Reduce the edge anchor mod L so wrapped edges coincide.
                let e = match edge.orientation {
                    Orientation::Horizontal => Edge::horizontal(m(edge.x), m(edge.y)),
                    Orientation::Vertical => Edge::vertical(m(edge.x), m(edge.y)),
                };
                edges.push(e);
            }
        }
    }
    Ok(counts_from_classification(&absorbed, &edges))
}

fn counts_from_classification(absorbed: &HashMap<Cell, u8>, edges: &[Edge]) -> FeatureCounts {
    let mut perimeter = 0u64;
    let mut inward_angles = 0u64;
    let mut unit_holes = 0u64;
    for &k in absorbed.values() {
        perimeter += k as u64;
        match k {
            2 | 3 => inward_angles += (k - 1) as u64,
            4 => unit_holes += 1,
            _ => {}
        }
    }
    let counts = FeatureCounts {
        perimeter,
        inward_angles,
        unit_holes,
        adjacent_squares: absorbed.len() as u64,
        loops: count_loops(edges),
    };
    debug_assert!(counts.identity_holds());
    counts
}

/// Number of connected components of an edge set, where two edges are
/// connected when they share a lattice vertex.
fn count_loops(edges: &[Edge]) -> u64 {
    if edges.is_empty() {
        return 0;
    }
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        let mut root = i;
        while parent[root] != root {
            root = parent[root];
        }
        let mut i = i;
        while parent[i] != root {
            let next = parent[i];
            parent[i] = root;
            i = next;
        }
        root
    }
    let mut at_vertex: HashMap<(i32, i32), usize> = HashMap::new();
    for (i, e) in edges.iter().enumerate() {
        let (a, b) = e.endpoints();
        for v in [a, b] {
            match at_vertex.get(&v) {
                Some(&j) => {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri] = rj;
                    }
                }
                None => {
                    at_vertex.insert(v, i);
                }
            }
        }
    }
    let mut roots = BTreeSet::new();
    for i in 0..edges.len() {
        roots.insert(find(&mut parent, i));
    }
    roots.len() as u64
}

/// The boundary visits a lattice vertex twice, so loop traversal is
/// ambiguous and the turn-based angle count is unavailable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PinchedBoundary {
    pub vertex: (i32, i32),
}

impl fmt::Display for PinchedBoundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "boundary visits vertex ({}, {}) twice", self.vertex.0, self.vertex.1)
    }
}

impl core::error::Error for PinchedBoundary {}

/// Count reflex corners of the region by walking each boundary loop with
/// the region on the left and counting turns toward it.
///
/// Length-4 loops around a single complement cell are unit holes, counted
/// separately from the angles, and are skipped here. Serves as an
/// independent validator for [`FeatureCounts::inward_angles`] on regions
/// whose boundary loops are simple curves.
pub fn count_inward_angles_by_turns(region: &Region) -> Result<u64, PinchedBoundary> {
    let edges = boundary_edges(region);
    // vertex -> incident boundary edges
    let mut incident: HashMap<(i32, i32), Vec<Edge>> = HashMap::new();
    for e in &edges {
        let (a, b) = e.endpoints();
        for v in [a, b] {
            let entry = incident.entry(v).or_default();
            entry.push(*e);
            if entry.len() > 2 {
                return Err(PinchedBoundary { vertex: v });
            }
        }
    }

    let mut visited: HashSet<Edge> = HashSet::new();
    let mut reflex_total = 0u64;
    for start in &edges {
        if visited.contains(start) {
            continue;
        }
        // Orient the first step so the region lies on the walker's left.
        let (dir, from) = initial_step(region, start);
        let mut loop_len = 0u64;
        let mut right_turns = 0u64;
        let mut all_right = true;
        let mut cur_dir = dir;
        let mut cur_vertex = step(from, dir);
        visited.insert(*start);
        loop_len += 1;
        let start_vertex = from;
        while cur_vertex != start_vertex {
            let next = incident[&cur_vertex]
                .iter()
                .copied()
                .find(|e| !visited.contains(e))
                .expect("degree-2 vertices leave exactly one continuation");
            let next_dir = direction_of(next, cur_vertex);
            match turn(cur_dir, next_dir) {
                Turn::Right => right_turns += 1,
                Turn::Left | Turn::Straight => all_right = false,
            }
            visited.insert(next);
            loop_len += 1;
            cur_vertex = step(cur_vertex, next_dir);
            cur_dir = next_dir;
        }
        // Closing turn back onto the first edge.
        match turn(cur_dir, dir) {
            Turn::Right => right_turns += 1,
            Turn::Left | Turn::Straight => all_right = false,
        }
        let is_unit_hole = loop_len == 4 && all_right;
        if !is_unit_hole {
            reflex_total += right_turns;
        }
    }
    Ok(reflex_total)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Dir {
    E,
    N,
    W,
    S,
}

enum Turn {
    Left,
    Right,
    Straight,
}

fn step(v: (i32, i32), d: Dir) -> (i32, i32) {
    match d {
        Dir::E => (v.0 + 1, v.1),
        Dir::N => (v.0, v.1 + 1),
        Dir::W => (v.0 - 1, v.1),
        Dir::S => (v.0, v.1 - 1),
    }
}

fn turn(from: Dir, to: Dir) -> Turn {
    let idx = |d: Dir| match d {
        Dir::E => 0i8,
        Dir::N => 1,
        Dir::W => 2,
        Dir::S => 3,
    };
    match (idx(to) - idx(from)).rem_euclid(4) {
        0 => Turn::Straight,
        1 => Turn::Left,
        3 => Turn::Right,
        _ => Turn::Straight, // U-turn cannot occur on a degree-2 loop
    }
}

/// Orientation of an edge when walked out of `vertex`.
fn direction_of(e: Edge, vertex: (i32, i32)) -> Dir {
    let (a, b) = e.endpoints();
    let other = if a == vertex { b } else { a };
    match (other.0 - vertex.0, other.1 - vertex.1) {
        (1, 0) => Dir::E,
        (-1, 0) => Dir::W,
        (0, 1) => Dir::N,
        _ => Dir::S,
    }
}

/// Direction and start vertex walking `e` with the region on the left.
fn initial_step(region: &Region, e: &Edge) -> (Dir, (i32, i32)) {
    let (lo, _hi) = e.endpoints();
    let (c_neg, c_pos) = e.cells();
    match e.orientation {
        Orientation::Horizontal => {
            // Walking east puts cell (x, y) (above) on the left.
            if region.contains(&c_pos) {
                (Dir::E, lo)
            } else {
                (Dir::W, (lo.0 + 1, lo.1))
            }
        }
        Orientation::Vertical => {
            // Walking north puts cell (x-1, y) (left side) on the left.
            if region.contains(&c_neg) {
                (Dir::N, lo)
            } else {
                (Dir::S, (lo.0, lo.1 + 1))
            }
        }
    }
}

/// Partition a cell set into 4-connected components, ordered by their
/// lexicographically smallest cell. Cells within a component are sorted.
pub fn connected_components(cells: &HashSet<Cell>) -> Vec<Vec<Cell>> {
    let mut sorted: Vec<Cell> = cells.iter().copied().collect();
    sorted.sort();
    let mut seen: HashSet<Cell> = HashSet::with_capacity(cells.len());
    let mut components = Vec::new();
    for &start in &sorted {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = alloc::vec![start];
        seen.insert(start);
        while let Some(c) = stack.pop() {
            comp.push(c);
            for nbr in c.neighbors() {
                if cells.contains(&nbr) && seen.insert(nbr) {
                    stack.push(nbr);
                }
            }
        }
        comp.sort();
        components.push(comp);
    }
    components
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rect(w: i32, h: i32) -> Region {
        let mut r = Region::new();
        for x in 0..w {
            for y in 0..h {
                r.insert(Cell::new(x, y));
            }
        }
        r
    }

    pub(crate) fn plus_pentomino() -> Region {
        Region::from_cells([
            Cell::new(0, 0),
            Cell::new(1, 0),
            Cell::new(-1, 0),
            Cell::new(0, 1),
            Cell::new(0, -1),
        ])
    }

    fn sierpinski_1() -> Region {
        let mut r = rect(3, 3);
        let mut cells: HashSet<Cell> = r.iter().copied().collect();
        cells.remove(&Cell::new(1, 1));
        r = Region::from_cells(cells);
        r
    }

    #[test]
    fn single_cell_features() {
        let r = Region::from_cells([Cell::new(0, 0)]);
        assert_eq!(boundary_edges(&r).len(), 4);
        let f = count_features(&r);
        assert_eq!(
            f,
            FeatureCounts {
                perimeter: 4,
                inward_angles: 0,
                unit_holes: 0,
                adjacent_squares: 4,
                loops: 1
            }
        );
    }

    #[test]
    fn empty_region_is_degenerate_but_legal() {
        let r = Region::new();
        assert!(boundary_edges(&r).is_empty());
        let f = count_features(&r);
        assert_eq!(f.perimeter, 0);
        assert_eq!(f.adjacent_squares, 0);
        assert_eq!(f.loops, 0);
        assert!(f.identity_holds());
    }

    #[test]
    fn square_2x2_adjacent_squares_equal_perimeter() {
        let f = count_features(&rect(2, 2));
        assert_eq!(f.perimeter, 8);
        assert_eq!(f.adjacent_squares, 8);
        assert_eq!(f.inward_angles, 0);
    }

    #[test]
    fn plus_pentomino_features() {
        let f = count_features(&plus_pentomino());
        assert_eq!(f.perimeter, 12);
        assert_eq!(f.inward_angles, 4);
        assert_eq!(f.unit_holes, 0);
        assert_eq!(f.adjacent_squares, 8);
        assert_eq!(f.loops, 1);
    }

    #[test]
    fn sierpinski_1_features() {
        let f = count_features(&sierpinski_1());
        assert_eq!(f.perimeter, 16);
        assert_eq!(f.inward_angles, 0);
        assert_eq!(f.unit_holes, 1);
        assert_eq!(f.adjacent_squares, 13);
        assert_eq!(f.loops, 2);
    }

    #[test]
    fn diagonal_pair_features() {
        let r = Region::from_cells([Cell::new(0, 0), Cell::new(1, 1)]);
        let f = count_features(&r);
        assert_eq!(f.perimeter, 8);
        assert_eq!(f.inward_angles, 2);
        assert_eq!(f.adjacent_squares, 6);
        // The two unit loops meet at a vertex, so they form one component.
        assert_eq!(f.loops, 1);
    }

    #[test]
    fn vicsek_1_features() {
        let r = Region::from_cells([
            Cell::new(0, 0),
            Cell::new(1, 1),
            Cell::new(-1, 1),
            Cell::new(1, -1),
            Cell::new(-1, -1),
        ]);
        let f = count_features(&r);
        assert_eq!(f.perimeter, 20);
        assert_eq!(f.inward_angles, 8);
        assert_eq!(f.unit_holes, 0);
        assert_eq!(f.adjacent_squares, 12);
    }

    #[test]
    fn translation_invariance() {
        let r = sierpinski_1();
        let t = r.translated(5, 7);
        assert_eq!(count_features(&r), count_features(&t));
        let t = r.translated(-13, 2);
        assert_eq!(count_features(&r), count_features(&t));
    }

    #[test]
    fn turns_rectangle_and_plus() {
        assert_eq!(count_inward_angles_by_turns(&rect(4, 2)).unwrap(), 0);
        assert_eq!(count_inward_angles_by_turns(&plus_pentomino()).unwrap(), 4);
    }

    #[test]
    fn turns_skip_unit_holes() {
        assert_eq!(count_inward_angles_by_turns(&sierpinski_1()).unwrap(), 0);
    }

    #[test]
    fn turns_reject_pinched_boundary() {
        let vicsek = Region::from_cells([
            Cell::new(0, 0),
            Cell::new(1, 1),
            Cell::new(-1, 1),
            Cell::new(1, -1),
            Cell::new(-1, -1),
        ]);
        assert!(count_inward_angles_by_turns(&vicsek).is_err());
    }

    #[test]
    fn components_examples() {
        let two: HashSet<Cell> = [Cell::new(0, 0), Cell::new(1, 1)].into_iter().collect();
        assert_eq!(connected_components(&two).len(), 2);
        let plus: HashSet<Cell> = plus_pentomino().iter().copied().collect();
        assert_eq!(connected_components(&plus).len(), 1);
    }

    #[test]
    fn blow_up_unit_cell() {
        let r = Region::from_cells([Cell::new(0, 0)]).blow_up(2);
        assert_eq!(r.len(), 4);
        assert_eq!(count_features(&r).perimeter, 8);
    }

    #[test]
    fn blow_up_plus_keeps_angles() {
        let r = plus_pentomino().blow_up(2);
        let f = count_features(&r);
        assert_eq!(f.perimeter, 24);
        assert_eq!(f.inward_angles, 4);
        assert_eq!(f.unit_holes, 0);
    }

    #[test]
    fn chessboard_plane_counts_by_hand() {
        // 4x4 board, cells on odd parity.
        let mut r = Region::new();
        for x in 0..4 {
            for y in 0..4 {
                if (x + y) % 2 == 1 {
                    r.insert(Cell::new(x, y));
                }
            }
        }
        let f = count_features(&r);
        assert_eq!(f.perimeter, 32);
        assert_eq!(f.inward_angles, 10);
        assert_eq!(f.unit_holes, 2);
        assert_eq!(f.adjacent_squares, 16);
    }

    #[test]
    fn chessboard_torus_counts() {
        for n in [1i32, 2, 4] {
            let s = 2 * n;
            let mut r = Region::new();
            for x in 0..s {
                for y in 0..s {
                    if (x + y) % 2 == 1 {
                        r.insert(Cell::new(x, y));
                    }
                }
            }
            let f = count_features_torus(&r, s).unwrap();
            assert_eq!(f.perimeter as i64, 8 * (n as i64).pow(2));
            assert_eq!(f.inward_angles, 0);
            assert_eq!(f.unit_holes as i64, 2 * (n as i64).pow(2));
            assert_eq!(f.adjacent_squares as i64, 2 * (n as i64).pow(2));
        }
    }

    #[test]
    fn torus_count_rejects_collisions() {
        let r = Region::from_cells([Cell::new(0, 0), Cell::new(4, 0)]);
        assert_eq!(count_features_torus(&r, 4), Err(TorusCountError::CellsCollide));
    }

    #[test]
    fn complement_within_box_boundary() {
        let r = plus_pentomino();
        let (min, max) = r.bounding_box().unwrap();
        let grown_min = Cell::new(min.x - 1, min.y - 1);
        let grown_max = Cell::new(max.x + 1, max.y + 1);
        let comp = r.complement_within(grown_min, grown_max);
        let box_region = Region::from_cells(
            (grown_min.x..=grown_max.x)
                .flat_map(|x| (grown_min.y..=grown_max.y).map(move |y| Cell::new(x, y))),
        );
        let mut expected = boundary_edges(&r);
        expected.extend(boundary_edges(&box_region));
        assert_eq!(boundary_edges(&comp), expected);
    }
}
