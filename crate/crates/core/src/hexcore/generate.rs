use super::cell::{canonical_form, Cell, Direction};
use super::system::HexSystem;
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::str::FromStr;

/// Largest census size accepted unless a caller raises the budget.
pub const DEFAULT_CENSUS_BUDGET: usize = 8;

/// Cells of `H(n_1, ..., n_k)`: `k` horizontal rows growing eastward, each
/// starting south-west of the previous row's start. Seen in a mirror, each row
/// starts below and to the right of the one above. A south-east start would
/// instead make `H(2, 1)` the odd-order phenalene.
pub fn truncated_parallelogram_cells(rows: &[usize]) -> Result<Vec<Cell>> {
    if rows.is_empty() || rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::BadRows(rows.to_vec()));
    }
    let (dq, dr) = ROW_STEP.offset();
    let mut cells = Vec::new();
    for (i, &len) in rows.iter().enumerate() {
        let i = i as i32;
        for j in 0..len as i32 {
            cells.push(Cell::new(i * dq + j, i * dr));
        }
    }
    Ok(cells)
}

const ROW_STEP: Direction = Direction::SouthWest;

pub fn truncated_parallelogram(rows: &[usize]) -> Result<HexSystem> {
    HexSystem::build(&truncated_parallelogram_cells(rows)?)
}

pub fn linear_chain(len: usize) -> Result<HexSystem> {
    if len == 0 {
        return Err(Error::InvalidParameter("a linear chain needs at least one hexagon".into()));
    }
    truncated_parallelogram(&[len])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Named {
    Benzene,
    Naphthalene,
    Anthracene,
    Triphenylene,
    Coronene,
}

impl Named {
    pub const ALL: [Named; 5] = [
        Named::Benzene,
        Named::Naphthalene,
        Named::Anthracene,
        Named::Triphenylene,
        Named::Coronene,
    ];

    pub fn cells(self) -> Vec<Cell> {
        let o = Cell::new(0, 0);
        match self {
            Named::Benzene => vec![o],
            Named::Naphthalene => vec![o, o.step(Direction::East)],
            Named::Anthracene => vec![o, o.step(Direction::East), o.step(Direction::East).step(Direction::East)],
            Named::Triphenylene => triphenylene_cells(o, Chirality::EastArm),
            Named::Coronene => std::iter::once(o).chain(o.neighbors()).collect(),
        }
    }

    pub fn system(self) -> HexSystem {
        HexSystem::build(&self.cells()).expect("named systems are valid")
    }

    pub fn name(self) -> &'static str {
        match self {
            Named::Benzene => "benzene",
            Named::Naphthalene => "naphthalene",
            Named::Anthracene => "anthracene",
            Named::Triphenylene => "triphenylene",
            Named::Coronene => "coronene",
        }
    }
}

impl FromStr for Named {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Named::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown named system `{s}`")))
    }
}

/// The two ways of choosing three pairwise non-adjacent neighbors of a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Chirality {
    /// Arms to the east, north-west and south-west.
    EastArm,
    /// Arms to the west, north-east and south-east.
    WestArm,
}

impl Chirality {
    pub fn arms(self) -> [Direction; 3] {
        match self {
            Chirality::EastArm => [Direction::East, Direction::NorthWest, Direction::SouthWest],
            Chirality::WestArm => [Direction::West, Direction::NorthEast, Direction::SouthEast],
        }
    }
}

pub fn triphenylene_cells(center: Cell, chirality: Chirality) -> Vec<Cell> {
    std::iter::once(center)
        .chain(chirality.arms().map(|d| center.step(d)))
        .collect()
}

/// The counterexample family with `2n + 4` hexagons: a triphenylene whose
/// east and north-west arms each carry a kinked chain of `n` hexagons. Every
/// hexagon attaches to its neighbors through three alternate sides, so one
/// perfect matching makes all hexagons alternating.
pub fn r_family_cells(n: usize) -> Result<Vec<Cell>> {
    if n == 0 {
        return Err(Error::InvalidParameter("R_n needs n >= 1".into()));
    }
    const PATTERN: [Direction; 4] = [Direction::NorthEast, Direction::East, Direction::SouthEast, Direction::East];
    let mut cells = triphenylene_cells(Cell::new(0, 0), Chirality::EastArm);
    let mut tip = Cell::new(0, 0).step(Direction::East);
    let mut chain = Vec::with_capacity(n);
    for i in 0..n {
        tip = tip.step(PATTERN[i % 4]);
        chain.push(tip);
    }
    // 120 degree turn maps the east arm onto the north-west arm.
    cells.extend(chain.iter().copied());
    cells.extend(chain.iter().map(|c| c.transform(2)));
    Ok(cells)
}

pub fn r_family(n: usize) -> Result<HexSystem> {
    HexSystem::build(&r_family_cells(n)?)
}

/// Row lengths if the cells form a truncated parallelogram in some lattice
/// orientation.
pub fn truncated_parallelogram_rows(cells: &[Cell]) -> Option<Vec<usize>> {
    (0..12).find_map(|g| {
        let image: Vec<Cell> = cells.iter().map(|c| c.transform(g)).collect();
        rows_in_standard_position(&image)
    })
}

pub fn is_truncated_parallelogram(system: &HexSystem) -> bool {
    truncated_parallelogram_rows(system.cells()).is_some()
}

fn rows_in_standard_position(cells: &[Cell]) -> Option<Vec<usize>> {
    let top = cells.iter().map(|c| c.r).max()?;
    let bottom = cells.iter().map(|c| c.r).min()?;
    let mut rows = Vec::new();
    let mut first_start = None;
    for (i, r) in (bottom..=top).rev().enumerate() {
        let mut qs: Vec<i32> = cells.iter().filter(|c| c.r == r).map(|c| c.q).collect();
        qs.sort();
        let (&lo, &hi) = (qs.first()?, qs.last()?);
        if (hi - lo + 1) as usize != qs.len() {
            return None;
        }
        let start = *first_start.get_or_insert(lo);
        if lo != start + i as i32 * ROW_STEP.offset().0 {
            return None;
        }
        rows.push(qs.len());
    }
    rows.windows(2).all(|w| w[0] >= w[1]).then_some(rows)
}

/// True when the cells lie on one lattice line and are consecutive.
pub fn is_linear_chain_cells(cells: &[Cell]) -> bool {
    if cells.len() <= 1 {
        return !cells.is_empty();
    }
    type Key = fn(&Cell) -> (i32, i32);
    let keys: [Key; 3] = [|c| (c.r, c.q), |c| (c.q, c.r), |c| (c.q + c.r, c.q)];
    keys.iter().any(|key| {
        let mut pairs: Vec<(i32, i32)> = cells.iter().map(key).collect();
        pairs.sort();
        pairs.windows(2).all(|w| w[0].0 == w[1].0 && w[1].1 == w[0].1 + 1)
    })
}

/// Canonical forms of all polyhexes (holes allowed) with exactly `size`
/// cells, sorted.
pub fn polyhex_forms(size: usize) -> Vec<Vec<Cell>> {
    if size == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<Vec<Cell>> = BTreeSet::from([vec![Cell::new(0, 0)]]);
    for _ in 1..size {
        let mut next = BTreeSet::new();
        for form in &level {
            let present: BTreeSet<Cell> = form.iter().copied().collect();
            let frontier: BTreeSet<Cell> = form
                .iter()
                .flat_map(|c| c.neighbors())
                .filter(|c| !present.contains(c))
                .collect();
            for add in frontier {
                let mut grown = form.clone();
                grown.push(add);
                next.insert(canonical_form(&grown));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// One representative per symmetry class of hexagonal systems with at most
/// `max_hexagons` cells, ordered by size then canonical form.
pub fn enumerate_all_systems(max_hexagons: usize) -> Result<impl Iterator<Item = HexSystem>> {
    enumerate_all_systems_with_budget(max_hexagons, DEFAULT_CENSUS_BUDGET)
}

pub fn enumerate_all_systems_with_budget(
    max_hexagons: usize,
    budget: usize,
) -> Result<impl Iterator<Item = HexSystem>> {
    if max_hexagons > budget {
        return Err(Error::BudgetExceeded {
            requested: max_hexagons,
            budget,
        });
    }
    Ok((1..=max_hexagons)
        .flat_map(polyhex_forms)
        .filter_map(|cells| HexSystem::build(&cells).ok()))
}

/// Stable identifier for a cell set: its canonical form written out.
pub fn instance_id(cells: &[Cell]) -> String {
    let form = canonical_form(cells);
    let body: Vec<String> = form.iter().map(|c| format!("{},{}", c.q, c.r)).collect();
    format!("hex[{}]", body.join(";"))
}
