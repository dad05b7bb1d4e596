//! Forcing and anti-forcing numbers, their packing duals, and the system-wide
//! Clar, Fries and sextet invariants.

use crate::altcycles::{alternating_hexagons, compatible, enumerate_alt_cycles, vertex_disjoint, AltCycle, CycleRecord};
use crate::error::Result;
use crate::hexcore::{HexSystem, SubGraph};
use crate::matchings::{enumerate_matchings, has_unique_pm, is_nice, Matching};
use crate::solvers::{Graph, HittingSet};
use crate::Exec;
use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// An optimal value with the lexicographically smallest optimal witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub value: usize,
    pub witness: Vec<usize>,
}

impl Certificate {
    fn of(witness: Vec<usize>) -> Self {
        Certificate {
            value: witness.len(),
            witness,
        }
    }
}

/// A matching together with all of its alternating cycles; every per-matching
/// invariant is computed from this.
#[derive(Clone, Debug)]
pub struct MatchingContext<'a> {
    pub system: &'a HexSystem,
    pub matching: Matching,
    pub cycles: Vec<AltCycle>,
}

impl<'a> MatchingContext<'a> {
    pub fn new(system: &'a HexSystem, matching: Matching, cycle_cap: usize) -> Result<Self> {
        let cycles = enumerate_alt_cycles(system, &matching, cycle_cap)?;
        Ok(MatchingContext { system, matching, cycles })
    }

    fn hitting(&self, in_matching: bool) -> Certificate {
        let candidates: Vec<usize> = (0..self.system.edge_count())
            .filter(|&e| self.matching.contains(e) == in_matching)
            .collect();
        let mut local = vec![usize::MAX; self.system.edge_count()];
        for (i, &e) in candidates.iter().enumerate() {
            local[e] = i;
        }
        let sets = self
            .cycles
            .iter()
            .map(|c| {
                let mut s = FixedBitSet::with_capacity(candidates.len());
                for &e in c.edges() {
                    if self.matching.contains(e) == in_matching {
                        s.insert(local[e]);
                    }
                }
                s
            })
            .collect();
        let instance = HittingSet::new(candidates.len(), sets).expect("alternating cycles use both edge kinds");
        Certificate::of(instance.solve().into_iter().map(|i| candidates[i]).collect())
    }

    /// `f(H, M)`: fewest matched edges meeting every alternating cycle.
    pub fn forcing(&self) -> Certificate {
        self.hitting(true)
    }

    /// `af(H, M)`: fewest unmatched edges meeting every alternating cycle.
    /// The certificate is checked to leave `M` as the unique perfect matching.
    pub fn anti_forcing(&self) -> Certificate {
        let cert = self.hitting(false);
        let rest = SubGraph::without_edges(self.system, &cert.witness);
        assert!(
            has_unique_pm(&rest, &self.matching).unwrap_or(false),
            "anti-forcing certificate does not force the matching"
        );
        cert
    }

    fn packing(&self, pool: &[usize], related: impl Fn(&AltCycle, &AltCycle) -> bool) -> Certificate {
        let g = Graph::from_relation(pool.len(), |i, j| related(&self.cycles[pool[i]], &self.cycles[pool[j]]));
        Certificate::of(g.max_clique().into_iter().map(|i| pool[i]).collect())
    }

    fn all_cycles(&self) -> Vec<usize> {
        (0..self.cycles.len()).collect()
    }

    /// `c(H, M)`: most pairwise vertex-disjoint alternating cycles (witness:
    /// indices into `cycles`).
    pub fn max_disjoint_cycles(&self) -> Certificate {
        self.packing(&self.all_cycles(), vertex_disjoint)
    }

    /// `c'(H, M)`: largest pairwise compatible family of alternating cycles.
    pub fn max_compatible_set(&self) -> Certificate {
        self.packing(&self.all_cycles(), compatible)
    }

    /// Indices into `cycles` of the alternating hexagons.
    pub fn hexagon_cycles(&self) -> Vec<usize> {
        (0..self.cycles.len()).filter(|&i| self.cycles[i].as_hexagon().is_some()).collect()
    }

    /// Most pairwise vertex-disjoint alternating hexagons.
    pub fn max_disjoint_hexagons(&self) -> Certificate {
        self.packing(&self.hexagon_cycles(), vertex_disjoint)
    }

    /// `fr(H, M)` with the alternating hexagons as witness.
    pub fn fries(&self) -> Certificate {
        Certificate::of(alternating_hexagons(self.system, &self.matching))
    }
}

pub fn forcing_number(system: &HexSystem, matching: &Matching, cycle_cap: usize) -> Result<Certificate> {
    Ok(MatchingContext::new(system, matching.clone(), cycle_cap)?.forcing())
}

pub fn anti_forcing_number(system: &HexSystem, matching: &Matching, cycle_cap: usize) -> Result<Certificate> {
    Ok(MatchingContext::new(system, matching.clone(), cycle_cap)?.anti_forcing())
}

pub fn max_disjoint_cycles(system: &HexSystem, matching: &Matching, cycle_cap: usize) -> Result<Certificate> {
    Ok(MatchingContext::new(system, matching.clone(), cycle_cap)?.max_disjoint_cycles())
}

pub fn max_compatible_set(system: &HexSystem, matching: &Matching, cycle_cap: usize) -> Result<Certificate> {
    Ok(MatchingContext::new(system, matching.clone(), cycle_cap)?.max_compatible_set())
}

/// Visits every sextet pattern (set of pairwise disjoint hexagons whose
/// removal leaves a perfectly matchable graph), including the empty one, in
/// include-first index order. Sextet patterns are closed under subsets, so
/// only nice sets are extended.
fn for_each_sextet_pattern(system: &HexSystem, visit: &mut dyn FnMut(&[usize])) {
    fn extend(system: &HexSystem, current: &mut Vec<usize>, used: &FixedBitSet, from: usize, visit: &mut dyn FnMut(&[usize])) {
        visit(current);
        for h in from..system.hexagon_count() {
            let verts = system.hexagon_vertex_set(&[h]);
            if !verts.is_disjoint(used) {
                continue;
            }
            let mut next = used.clone();
            next.union_with(&verts);
            if !is_nice(system, &next) {
                continue;
            }
            current.push(h);
            extend(system, current, &next, h + 1, visit);
            current.pop();
        }
    }
    if !is_nice(system, &FixedBitSet::with_capacity(system.vertex_count())) {
        return;
    }
    let used = FixedBitSet::with_capacity(system.vertex_count());
    extend(system, &mut Vec::new(), &used, 0, visit);
}

/// `Cl(H)` with the lexicographically smallest maximum sextet pattern, or
/// `None` without a perfect matching.
pub fn clar_number(system: &HexSystem) -> Option<Certificate> {
    let mut best: Option<Vec<usize>> = None;
    for_each_sextet_pattern(system, &mut |p| {
        if best.as_ref().is_none_or(|b| p.len() > b.len()) {
            best = Some(p.to_vec());
        }
    });
    best.map(Certificate::of)
}

/// `r(H)`: the number of sextet patterns, counting the empty pattern.
pub fn sextet_count(system: &HexSystem) -> BigUint {
    let mut count = BigUint::from(0u8);
    for_each_sextet_pattern(system, &mut |_| count += 1u8);
    count
}

/// `Fr(H)` and the index of the first matching attaining it.
pub fn fries_number(system: &HexSystem, matchings: &[Matching]) -> Option<(usize, usize)> {
    matchings
        .iter()
        .enumerate()
        .map(|(i, m)| (alternating_hexagons(system, m).len(), i))
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
}

/// Every per-matching invariant of one perfect matching.
#[derive(Clone, Debug, Serialize)]
pub struct MatchingRow {
    pub id: usize,
    pub matching: Vec<[usize; 2]>,
    pub f: usize,
    pub c: usize,
    pub af: usize,
    pub c_prime: usize,
    pub fr: usize,
    pub cycles: usize,
    pub forcing_set: Vec<[usize; 2]>,
    pub anti_forcing_set: Vec<[usize; 2]>,
    pub disjoint_cycles: Vec<CycleRecord>,
    pub compatible_cycles: Vec<CycleRecord>,
    pub alternating_hexagons: Vec<[i32; 2]>,
}

impl MatchingRow {
    pub fn from_context(id: usize, ctx: &MatchingContext<'_>) -> Self {
        let system = ctx.system;
        let pairs = |edges: &[usize]| -> Vec<[usize; 2]> {
            edges
                .iter()
                .map(|&e| {
                    let edge = system.edge(e);
                    [edge.u, edge.v]
                })
                .collect()
        };
        let records = |cert: &Certificate| cert.witness.iter().map(|&i| ctx.cycles[i].record()).collect();
        let f = ctx.forcing();
        let af = ctx.anti_forcing();
        let c = ctx.max_disjoint_cycles();
        let cp = ctx.max_compatible_set();
        let fr = ctx.fries();
        MatchingRow {
            id,
            matching: ctx.matching.vertex_pairs(system),
            f: f.value,
            c: c.value,
            af: af.value,
            c_prime: cp.value,
            fr: fr.value,
            cycles: ctx.cycles.len(),
            forcing_set: pairs(&f.witness),
            anti_forcing_set: pairs(&af.witness),
            disjoint_cycles: records(&c),
            compatible_cycles: records(&cp),
            alternating_hexagons: fr
                .witness
                .iter()
                .map(|&h| {
                    let cell = system.hexagon(h).cell;
                    [cell.q, cell.r]
                })
                .collect(),
        }
    }
}

/// `{f(H, M)}`, `{af(H, M)}` over all matchings and their maxima `F`, `Af`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Spectra {
    pub forcing: BTreeSet<usize>,
    pub anti_forcing: BTreeSet<usize>,
}

impl Spectra {
    pub fn max_forcing(&self) -> Option<usize> {
        self.forcing.last().copied()
    }

    pub fn max_anti_forcing(&self) -> Option<usize> {
        self.anti_forcing.last().copied()
    }
}

pub fn spectra(system: &HexSystem, cycle_cap: usize, exec: Exec) -> Result<Spectra> {
    let matchings = enumerate_matchings(system);
    let pairs = exec.map(&matchings, |m| -> Result<(usize, usize)> {
        let ctx = MatchingContext::new(system, m.clone(), cycle_cap)?;
        Ok((ctx.forcing().value, ctx.anti_forcing().value))
    });
    let mut s = Spectra::default();
    for p in pairs {
        let (f, af) = p?;
        s.forcing.insert(f);
        s.anti_forcing.insert(af);
    }
    Ok(s)
}

/// Counts go out as JSON numbers while they fit in `u64`, as decimal strings
/// beyond that.
fn count_json<S: serde::Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match u64::try_from(n) {
        Ok(small) => s.serialize_u64(small),
        Err(_) => s.serialize_str(&n.to_string()),
    }
}

/// Per-system invariant report.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub cells: Vec<[i32; 2]>,
    pub hexagons: usize,
    pub vertices: usize,
    pub edges: usize,
    #[serde(serialize_with = "count_json")]
    pub kekule_count: BigUint,
    #[serde(serialize_with = "count_json")]
    pub sextet_count: BigUint,
    pub max_forcing: Option<usize>,
    pub max_anti_forcing: Option<usize>,
    pub clar: Option<usize>,
    pub clar_hexagons: Vec<[i32; 2]>,
    pub fries: Option<usize>,
    pub spectra: Spectra,
    pub rows: Vec<MatchingRow>,
}

impl InvariantReport {
    pub fn compute(system: &HexSystem, cycle_cap: usize, exec: Exec) -> Result<Self> {
        let matchings = enumerate_matchings(system);
        let indexed: Vec<(usize, &Matching)> = matchings.iter().enumerate().collect();
        let rows = exec
            .map(&indexed, |&(i, m)| -> Result<MatchingRow> {
                let ctx = MatchingContext::new(system, m.clone(), cycle_cap)?;
                Ok(MatchingRow::from_context(i, &ctx))
            })
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        let mut spectra = Spectra::default();
        for r in &rows {
            spectra.forcing.insert(r.f);
            spectra.anti_forcing.insert(r.af);
        }
        let clar = clar_number(system);
        let cell_pair = |h: usize| {
            let c = system.hexagon(h).cell;
            [c.q, c.r]
        };
        Ok(InvariantReport {
            cells: system.cells().iter().map(|c| [c.q, c.r]).collect(),
            hexagons: system.hexagon_count(),
            vertices: system.vertex_count(),
            edges: system.edge_count(),
            kekule_count: BigUint::from(matchings.len()),
            sextet_count: sextet_count(system),
            max_forcing: spectra.max_forcing(),
            max_anti_forcing: spectra.max_anti_forcing(),
            clar: clar.as_ref().map(|c| c.value),
            clar_hexagons: clar.map(|c| c.witness.into_iter().map(cell_pair).collect()).unwrap_or_default(),
            fries: fries_number(system, &matchings).map(|(v, _)| v),
            spectra,
            rows,
        })
    }

    /// Plain-text table, one line per matching, followed by the system-level
    /// values.
    pub fn to_table(&self) -> String {
        let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
        let mut out = String::new();
        writeln!(out, "{:>4} {:>3} {:>3} {:>3} {:>3} {:>3} {:>7}", "id", "f", "c", "af", "c'", "fr", "cycles").unwrap();
        for r in &self.rows {
            writeln!(
                out,
                "{:>4} {:>3} {:>3} {:>3} {:>3} {:>3} {:>7}",
                r.id, r.f, r.c, r.af, r.c_prime, r.fr, r.cycles
            )
            .unwrap();
        }
        writeln!(
            out,
            "h={} n={} m={} k={} r={} F={} Af={} Cl={} Fr={}",
            self.hexagons,
            self.vertices,
            self.edges,
            self.kekule_count,
            self.sextet_count,
            opt(self.max_forcing),
            opt(self.max_anti_forcing),
            opt(self.clar),
            opt(self.fries)
        )
        .unwrap();
        let list = |s: &BTreeSet<usize>| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        writeln!(out, "forcing spectrum {{{}}}", list(&self.spectra.forcing)).unwrap();
        writeln!(out, "anti-forcing spectrum {{{}}}", list(&self.spectra.anti_forcing)).unwrap();
        out
    }
}
