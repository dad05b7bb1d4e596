//! Hexagonal lattice geometry and hexagonal systems.

mod cell;
mod generate;
mod io;
mod system;

pub use cell::{canonical_form, normalize, Cell, Direction, Point};
pub use generate::{
    enumerate_all_systems, enumerate_all_systems_with_budget, instance_id, is_linear_chain_cells,
    is_truncated_parallelogram, linear_chain, polyhex_forms, r_family, r_family_cells, triphenylene_cells,
    truncated_parallelogram, truncated_parallelogram_cells, truncated_parallelogram_rows, Chirality, Named,
    DEFAULT_CENSUS_BUDGET,
};
pub use io::{parse_system, system_to_json, SystemFile};
pub use system::{Edge, HexSystem, Hexagon, SubGraph};

pub(crate) use system::signed_area2;
