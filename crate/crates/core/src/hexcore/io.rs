//! The system description file: `{"cells": [[q, r], ...]}`.

use super::cell::Cell;
use super::system::HexSystem;
use crate::error::Result;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub cells: Vec<[i32; 2]>,
}

impl SystemFile {
    pub fn from_cells(cells: &[Cell]) -> Self {
        let mut sorted = cells.to_vec();
        sorted.sort();
        SystemFile {
            cells: sorted.into_iter().map(|c| [c.q, c.r]).collect(),
        }
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.cells.iter().map(|&[q, r]| Cell::new(q, r)).collect()
    }

    pub fn build(&self) -> Result<HexSystem> {
        HexSystem::build(&self.cells())
    }
}

pub fn parse_system(json: &str) -> Result<HexSystem> {
    serde_json::from_str::<SystemFile>(json)?.build()
}

pub fn system_to_json(system: &HexSystem) -> String {
    serde_json::to_string(&SystemFile::from_cells(system.cells())).expect("plain data serializes")
}
