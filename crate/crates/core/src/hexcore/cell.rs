//! Axial cell coordinates on the hexagonal lattice and the lattice points
//! that carry the derived graph.
//!
//! Cells are "pointy-top" hexagons, so horizontal rows of cells share vertical
//! edges. A cell `(q, r)` has its center at the doubled point
//! `(2q + r, 3r)`; one unit of `x` is `sqrt(3)/2` and one unit of `y` is `1/2`
//! of a hexagon side, which keeps every corner on an integer point. The `y`
//! axis points up.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub q: i32,
    pub r: i32,
}

impl Cell {
    pub const fn new(q: i32, r: i32) -> Self {
        Cell { q, r }
    }

    pub fn step(self, dir: Direction) -> Cell {
        let (dq, dr) = dir.offset();
        Cell::new(self.q + dq, self.r + dr)
    }

    pub fn neighbors(self) -> impl Iterator<Item = Cell> {
        Direction::ALL.into_iter().map(move |d| self.step(d))
    }

    pub fn is_adjacent(self, other: Cell) -> bool {
        let offset = (other.q - self.q, other.r - self.r);
        Direction::ALL.iter().any(|d| d.offset() == offset)
    }

    pub fn center(self) -> Point {
        Point::new(2 * self.q + self.r, 3 * self.r)
    }

    /// Corners in clockwise order, starting at the top corner.
    pub fn corners(self) -> [Point; 6] {
        let c = self.center();
        [
            Point::new(c.x, c.y + 2),
            Point::new(c.x + 1, c.y + 1),
            Point::new(c.x + 1, c.y - 1),
            Point::new(c.x, c.y - 2),
            Point::new(c.x - 1, c.y - 1),
            Point::new(c.x - 1, c.y + 1),
        ]
    }

    /// Applies lattice symmetry `index` (0..12) about the origin cell.
    /// Indices 0..6 are rotations by multiples of 60 degrees, 6..12 are the
    /// same rotations preceded by a reflection.
    pub fn transform(self, index: usize) -> Cell {
        debug_assert!(index < 12);
        let mut c = if index >= 6 { Cell::new(self.r, self.q) } else { self };
        for _ in 0..index % 6 {
            c = Cell::new(-c.r, c.q + c.r);
        }
        c
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.q, self.r)
    }
}

/// The six neighbor directions, listed clockwise from north-east. Side `i` of
/// a cell (between corners `i` and `i + 1`) is shared with the neighbor in
/// direction `Direction::ALL[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    NorthEast,
    East,
    SouthEast,
    SouthWest,
    West,
    NorthWest,
}

impl Direction {
    pub const ALL: [Direction; 6] = [
        Direction::NorthEast,
        Direction::East,
        Direction::SouthEast,
        Direction::SouthWest,
        Direction::West,
        Direction::NorthWest,
    ];

    pub const fn offset(self) -> (i32, i32) {
        match self {
            Direction::NorthEast => (0, 1),
            Direction::East => (1, 0),
            Direction::SouthEast => (1, -1),
            Direction::SouthWest => (0, -1),
            Direction::West => (-1, 0),
            Direction::NorthWest => (-1, 1),
        }
    }

    pub fn opposite(self) -> Direction {
        Direction::ALL[(self.side() + 3) % 6]
    }

    pub fn side(self) -> usize {
        Direction::ALL.iter().position(|&d| d == self).unwrap()
    }
}

/// A lattice point in doubled coordinates (see module docs).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: i32,
    pub y: i32,
}

impl Point {
    pub const fn new(x: i32, y: i32) -> Self {
        Point { x, y }
    }

    /// Vertices come in two kinds: those with two lower neighbors and one
    /// upper neighbor (`y % 3 == 2`), and those with two upper neighbors and
    /// one lower one. Peaks of any system are always of the first kind.
    pub fn is_upper_kind(self) -> bool {
        self.y.rem_euclid(3) == 2
    }

    /// Planar coordinates for drawing, with unit hexagon side.
    pub fn to_plane(self) -> (f64, f64) {
        (f64::from(self.x) * 3f64.sqrt() / 2.0, f64::from(self.y) / 2.0)
    }
}

/// Translates `cells` so the smallest cell lands on the origin and returns
/// them sorted.
pub fn normalize(cells: &[Cell]) -> Vec<Cell> {
    let mut out = cells.to_vec();
    out.sort();
    if let Some(&first) = out.first() {
        for c in &mut out {
            *c = Cell::new(c.q - first.q, c.r - first.r);
        }
    }
    out
}

/// Canonical form of a cell set under the 12 lattice symmetries and
/// translation: the lexicographically smallest normalized image.
pub fn canonical_form(cells: &[Cell]) -> Vec<Cell> {
    (0..12)
        .map(|g| {
            let image: Vec<Cell> = cells.iter().map(|c| c.transform(g)).collect();
            normalize(&image)
        })
        .min()
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neighbors_share_two_corners() {
        let c = Cell::new(0, 0);
        for (side, dir) in Direction::ALL.into_iter().enumerate() {
            let n = c.step(dir);
            let mine = c.corners();
            let theirs = n.corners();
            let shared: Vec<_> = mine.iter().filter(|p| theirs.contains(p)).collect();
            assert_eq!(shared.len(), 2, "{dir:?}");
            assert!(shared.contains(&&mine[side]));
            assert!(shared.contains(&&mine[(side + 1) % 6]));
        }
    }

    #[test]
    fn symmetries_preserve_adjacency_and_form_a_group_of_twelve() {
        let probe = [Cell::new(0, 0), Cell::new(1, 0), Cell::new(1, 1), Cell::new(3, -1)];
        let mut images: Vec<Vec<Cell>> = (0..12)
            .map(|g| probe.iter().map(|c| c.transform(g)).collect())
            .collect();
        for img in &images {
            for i in 0..probe.len() {
                for j in 0..probe.len() {
                    assert_eq!(probe[i].is_adjacent(probe[j]), img[i].is_adjacent(img[j]));
                }
            }
        }
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 12);
    }

    #[test]
    fn canonical_form_is_symmetry_invariant() {
        let cells = [Cell::new(0, 0), Cell::new(1, 0), Cell::new(1, 1), Cell::new(0, -1)];
        let base = canonical_form(&cells);
        for g in 0..12 {
            let moved: Vec<Cell> = cells.iter().map(|c| c.transform(g)).map(|c| Cell::new(c.q + 5, c.r - 7)).collect();
            assert_eq!(canonical_form(&moved), base);
        }
    }

    #[test]
    fn upper_kind_vertices_have_a_neighbor_straight_above() {
        let c = Cell::new(2, -1);
        let k = c.corners();
        assert!(k[0].is_upper_kind());
        assert!(!k[1].is_upper_kind());
        assert!(k[2].is_upper_kind());
        assert!(!k[3].is_upper_kind());
    }
}
