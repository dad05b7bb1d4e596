//! Mechanical verification of the minimax identities and structural
//! characterizations on concrete systems.

use crate::altcycles::{interior_alternating_hexagon, is_linear_chain_interior, non_crossing, compatible};
use crate::error::{Error, Result};
use crate::forcing::{clar_number, sextet_count, Certificate, MatchingContext};
use crate::hexcore::{
    canonical_form, instance_id, is_truncated_parallelogram, r_family_cells, triphenylene_cells, Cell, Chirality,
    Direction, HexSystem, SubGraph,
};
use crate::matchings::{enumerate_matchings, find_perfect_matching, has_unique_pm, is_nice, Matching};
use crate::solvers::Graph;
use crate::Exec;
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::sync::OnceLock;

pub const DEFAULT_STRUCTURE_CAP: usize = 1_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    HypothesisNotMet,
    SkippedBudget,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::HypothesisNotMet => "hypothesis-not-met",
            Status::SkippedBudget => "skipped-budget",
        })
    }
}

/// Identifiers of the individual checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// f(H, M) = c(H, M) for every M.
    ForcingDuality,
    /// af(H, M) = c'(H, M) for every M.
    AntiForcingDuality,
    /// Every certificate is a valid forcing or anti-forcing set.
    Certificates,
    /// Every alternating cycle encloses an alternating hexagon.
    InteriorHexagon,
    /// F(H) = Cl(H).
    ClarForcing,
    /// Af(H) = Fr(H).
    FriesAntiForcing,
    /// Every M with f = F has F disjoint alternating hexagons.
    DisjointHexagons,
    /// af = fr at levels Af and Af - 1.
    Main,
    /// Maximum non-crossing compatible sets at levels Af, Af - 1 have
    /// disjoint, linear interiors.
    Structure,
    /// af(H) = 1 iff H is a truncated parallelogram.
    Af1,
    /// No nice triphenylene iff af = fr for every M.
    Triphenylene,
    /// The ledger of the counterexample family.
    Rn,
    /// r(H) <= k(H), with equality tied to nice coronenes.
    SextetKekule,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::ForcingDuality => "forcing-duality",
            TheoremId::AntiForcingDuality => "anti-forcing-duality",
            TheoremId::Certificates => "certificates",
            TheoremId::InteriorHexagon => "interior-hexagon",
            TheoremId::ClarForcing => "clar-forcing",
            TheoremId::FriesAntiForcing => "fries-anti-forcing",
            TheoremId::DisjointHexagons => "disjoint-hexagons",
            TheoremId::Main => "main",
            TheoremId::Structure => "structure",
            TheoremId::Af1 => "af1",
            TheoremId::Triphenylene => "triphenylene",
            TheoremId::Rn => "rn",
            TheoremId::SextetKekule => "sextet-kekule",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Theorem groups selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Selection {
    Minimax,
    ClarFries,
    Main,
    Structure,
    Af1,
    Triphenylene,
    Rn,
    Sextet,
    All,
}

impl Selection {
    pub fn theorems(self) -> Vec<TheoremId> {
        use TheoremId::*;
        match self {
            Selection::Minimax => vec![ForcingDuality, AntiForcingDuality, Certificates, InteriorHexagon],
            Selection::ClarFries => vec![ClarForcing, FriesAntiForcing, DisjointHexagons],
            Selection::Main => vec![Main],
            Selection::Structure => vec![Structure],
            Selection::Af1 => vec![Af1],
            Selection::Triphenylene => vec![Triphenylene],
            Selection::Rn => vec![Rn],
            Selection::Sextet => vec![SextetKekule],
            Selection::All => vec![
                ForcingDuality,
                AntiForcingDuality,
                Certificates,
                InteriorHexagon,
                ClarForcing,
                FriesAntiForcing,
                DisjointHexagons,
                Main,
                Structure,
                Af1,
                Triphenylene,
                Rn,
                SextetKekule,
            ],
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub theorem: TheoremId,
    pub instance: String,
    pub status: Status,
    pub witness: Value,
}

impl Verdict {
    fn new(theorem: TheoremId, instance: &str, status: Status, witness: Value) -> Self {
        Verdict {
            theorem,
            instance: instance.to_string(),
            status,
            witness,
        }
    }

    fn check(theorem: TheoremId, instance: &str, ok: bool, witness: Value) -> Self {
        let status = if ok { Status::Holds } else { Status::Fails };
        Verdict::new(theorem, instance, status, witness)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("verdicts serialize")
    }
}

/// Which way the sextet/Kekulé equality relates to nice coronenes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SextetPolarity {
    /// r(H) = k(H) iff H has a nice coronene.
    EqualityWithCoronene,
    /// r(H) = k(H) iff H has no nice coronene.
    EqualityWithoutCoronene,
}

/// The direction confirmed by [`resolve_sextet_polarity`]; benzene alone has
/// r = k = 2 without containing any coronene.
pub const SEXTET_POLARITY: SextetPolarity = SextetPolarity::EqualityWithoutCoronene;

/// Decides the polarity from scratch on benzene and coronene. Returns `None`
/// if neither reading is consistent with both.
pub fn resolve_sextet_polarity() -> Option<SextetPolarity> {
    let probes = [crate::hexcore::Named::Benzene.system(), crate::hexcore::Named::Coronene.system()];
    let observations: Vec<(bool, bool)> = probes
        .iter()
        .map(|h| {
            let k = BigUint::from(enumerate_matchings(h).len());
            (sextet_count(h) == k, has_nice_coronene(h).is_some())
        })
        .collect();
    let with = observations.iter().all(|&(eq, cor)| eq == cor);
    let without = observations.iter().all(|&(eq, cor)| eq != cor);
    match (with, without) {
        (true, false) => Some(SextetPolarity::EqualityWithCoronene),
        (false, true) => Some(SextetPolarity::EqualityWithoutCoronene),
        _ => None,
    }
}

/// Knobs shared by every verifier.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub cycle_cap: usize,
    /// Most maximum families examined per matching by the structure check.
    pub structure_cap: usize,
    pub exec: Exec,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            cycle_cap: crate::altcycles::DEFAULT_CYCLE_CAP,
            structure_cap: DEFAULT_STRUCTURE_CAP,
            exec: Exec::default(),
        }
    }
}

/// One perfect matching with its anti-forcing data computed eagerly and its
/// forcing data on demand.
#[derive(Debug)]
pub struct Entry<'a> {
    pub ctx: MatchingContext<'a>,
    pub af: Certificate,
    pub fr: Certificate,
    f: OnceLock<Certificate>,
}

impl Entry<'_> {
    pub fn f(&self) -> &Certificate {
        self.f.get_or_init(|| self.ctx.forcing())
    }
}

/// Everything the verifiers need about one system.
#[derive(Debug)]
pub struct Analysis<'a> {
    pub system: &'a HexSystem,
    pub id: String,
    pub entries: Vec<Entry<'a>>,
}

impl<'a> Analysis<'a> {
    pub fn new(system: &'a HexSystem, config: &VerifyConfig) -> Result<Self> {
        let matchings = enumerate_matchings(system);
        let entries = config
            .exec
            .map(&matchings, |m| -> Result<Entry<'a>> {
                let ctx = MatchingContext::new(system, m.clone(), config.cycle_cap)?;
                let af = ctx.anti_forcing();
                let fr = ctx.fries();
                Ok(Entry {
                    ctx,
                    af,
                    fr,
                    f: OnceLock::new(),
                })
            })
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        Ok(Analysis {
            system,
            id: instance_id(system.cells()),
            entries,
        })
    }

    pub fn has_matching(&self) -> bool {
        !self.entries.is_empty()
    }

    /// Af(H), or `None` without a perfect matching.
    pub fn max_af(&self) -> Option<usize> {
        self.entries.iter().map(|e| e.af.value).max()
    }

    pub fn min_af(&self) -> Option<usize> {
        self.entries.iter().map(|e| e.af.value).min()
    }

    pub fn max_fr(&self) -> Option<usize> {
        self.entries.iter().map(|e| e.fr.value).max()
    }

    pub fn max_f(&self) -> Option<usize> {
        self.entries.iter().map(|e| e.f().value).max()
    }

    fn cells(&self) -> Value {
        cells_json(self.system.cells())
    }

    fn pairs(&self, edges: &[usize]) -> Value {
        json!(edges
            .iter()
            .map(|&e| {
                let edge = self.system.edge(e);
                [edge.u, edge.v]
            })
            .collect::<Vec<_>>())
    }

    /// Reproducible payload for matching `i`.
    pub fn payload(&self, i: usize) -> Value {
        let e = &self.entries[i];
        json!({
            "cells": self.cells(),
            "matching_id": i,
            "matching": e.ctx.matching.vertex_pairs(self.system),
            "af": e.af.value,
            "anti_forcing_set": self.pairs(&e.af.witness),
            "fr": e.fr.value,
        })
    }

    fn no_matching(&self, theorem: TheoremId) -> Verdict {
        Verdict::new(theorem, &self.id, Status::HypothesisNotMet, json!({"reason": "no perfect matching"}))
    }
}

fn cells_json(cells: &[Cell]) -> Value {
    json!(cells.iter().map(|c| [c.q, c.r]).collect::<Vec<_>>())
}

/// Runs `check` on every matching and reports the first failure.
fn every_matching(
    an: &Analysis<'_>,
    theorem: TheoremId,
    check: impl Fn(usize, &Entry<'_>) -> Option<Value>,
) -> Verdict {
    if !an.has_matching() {
        return an.no_matching(theorem);
    }
    for (i, e) in an.entries.iter().enumerate() {
        if let Some(detail) = check(i, e) {
            let mut payload = an.payload(i);
            payload["detail"] = detail;
            return Verdict::new(theorem, &an.id, Status::Fails, payload);
        }
    }
    Verdict::new(theorem, &an.id, Status::Holds, json!({"matchings": an.entries.len()}))
}

/// f = c, af = c', certificate validity and the interior-hexagon fact.
pub fn verify_minimax(an: &Analysis<'_>) -> Vec<Verdict> {
    let forcing = every_matching(an, TheoremId::ForcingDuality, |_, e| {
        let c = e.ctx.max_disjoint_cycles().value;
        (e.f().value != c).then(|| json!({"f": e.f().value, "c": c}))
    });
    let anti = every_matching(an, TheoremId::AntiForcingDuality, |_, e| {
        let cp = e.ctx.max_compatible_set().value;
        (e.af.value != cp || e.af.value < e.fr.value).then(|| json!({"af": e.af.value, "c_prime": cp, "fr": e.fr.value}))
    });
    let certs = every_matching(an, TheoremId::Certificates, |_, e| {
        let f = e.f();
        let forcing_ok = f.witness.iter().all(|&x| e.ctx.matching.contains(x))
            && e.ctx.cycles.iter().all(|c| c.edges().iter().any(|x| f.witness.contains(x)));
        let rest = SubGraph::without_edges(an.system, &e.af.witness);
        let anti_ok = e.af.witness.iter().all(|&x| !e.ctx.matching.contains(x))
            && has_unique_pm(&rest, &e.ctx.matching).unwrap_or(false);
        (!forcing_ok || !anti_ok).then(|| json!({"forcing_ok": forcing_ok, "anti_forcing_ok": anti_ok}))
    });
    let interior = every_matching(an, TheoremId::InteriorHexagon, |_, e| {
        e.ctx
            .cycles
            .iter()
            .find(|c| interior_alternating_hexagon(an.system, &e.ctx.matching, c).is_none())
            .map(|c| json!({"cycle": c.record()}))
    });
    vec![forcing, anti, certs, interior]
}

/// F = Cl, Af = Fr, and the disjoint-hexagon packing at level F.
pub fn verify_clar_fries(an: &Analysis<'_>) -> Vec<Verdict> {
    use TheoremId::*;
    if !an.has_matching() {
        return vec![an.no_matching(ClarForcing), an.no_matching(FriesAntiForcing), an.no_matching(DisjointHexagons)];
    }
    let max_f = an.max_f().expect("has matchings");
    let clar = clar_number(an.system).expect("has matchings");
    let cells = |hexes: &[usize]| -> Value {
        json!(hexes
            .iter()
            .map(|&h| {
                let c = an.system.hexagon(h).cell;
                [c.q, c.r]
            })
            .collect::<Vec<_>>())
    };
    let clar_verdict = Verdict::check(
        ClarForcing,
        &an.id,
        max_f == clar.value,
        json!({"cells": an.cells(), "F": max_f, "Cl": clar.value, "clar_set": cells(&clar.witness)}),
    );
    let (max_af, max_fr) = (an.max_af().unwrap(), an.max_fr().unwrap());
    let fries_verdict = Verdict::check(
        FriesAntiForcing,
        &an.id,
        max_af == max_fr,
        json!({"cells": an.cells(), "Af": max_af, "Fr": max_fr}),
    );
    let packing = every_matching(an, DisjointHexagons, |_, e| {
        if e.f().value != max_f {
            return None;
        }
        let p = e.ctx.max_disjoint_hexagons();
        (p.value < max_f).then(|| json!({"F": max_f, "disjoint_hexagons": p.value}))
    });
    vec![clar_verdict, fries_verdict, packing]
}

/// One verdict per matching: levels Af and Af - 1 must have af = fr; other
/// levels are outside the claim.
pub fn verify_main(an: &Analysis<'_>) -> Vec<Verdict> {
    let Some(max_af) = an.max_af() else {
        return vec![an.no_matching(TheoremId::Main)];
    };
    an.entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let mut w = json!({"matching_id": i, "af": e.af.value, "fr": e.fr.value, "Af": max_af});
            if e.af.value + 1 < max_af {
                return Verdict::new(TheoremId::Main, &an.id, Status::HypothesisNotMet, w);
            }
            let ok = e.af.value == e.fr.value;
            if !ok {
                w = an.payload(i);
                w["Af"] = json!(max_af);
            }
            Verdict::check(TheoremId::Main, &an.id, ok, w)
        })
        .collect()
}

/// Per-set verdicts over every maximum non-crossing compatible family of each
/// matching at levels Af and Af - 1.
pub fn verify_structure(an: &Analysis<'_>, structure_cap: usize) -> Vec<Verdict> {
    let Some(max_af) = an.max_af() else {
        return vec![an.no_matching(TheoremId::Structure)];
    };
    let mut out = Vec::new();
    for (i, e) in an.entries.iter().enumerate() {
        if e.af.value + 1 < max_af {
            out.push(Verdict::new(
                TheoremId::Structure,
                &an.id,
                Status::HypothesisNotMet,
                json!({"matching_id": i, "af": e.af.value, "Af": max_af}),
            ));
            continue;
        }
        let cycles = &e.ctx.cycles;
        let g = Graph::from_relation(cycles.len(), |a, b| {
            compatible(&cycles[a], &cycles[b]) && non_crossing(&cycles[a], &cycles[b])
        });
        let size = g.max_clique().len();
        let (families, truncated) = g.cliques_of_size(size, structure_cap);
        for (j, fam) in families.iter().enumerate() {
            let disjoint = fam.iter().enumerate().all(|(x, &a)| {
                fam[x + 1..]
                    .iter()
                    .all(|&b| cycles[a].interior().is_disjoint(cycles[b].interior()))
            });
            let linear = fam.iter().all(|&a| is_linear_chain_interior(an.system, &cycles[a]));
            let ok = disjoint && linear && size == e.af.value;
            let mut w = json!({
                "matching_id": i,
                "family": j,
                "size": size,
                "af": e.af.value,
                "disjoint_interiors": disjoint,
                "linear_interiors": linear,
            });
            if !ok {
                w["payload"] = an.payload(i);
                w["cycles"] = json!(fam.iter().map(|&a| cycles[a].record()).collect::<Vec<_>>());
            }
            out.push(Verdict::check(TheoremId::Structure, &an.id, ok, w));
        }
        if truncated {
            out.push(Verdict::new(
                TheoremId::Structure,
                &an.id,
                Status::SkippedBudget,
                json!({"matching_id": i, "examined": families.len(), "cap": structure_cap}),
            ));
        }
    }
    out
}

/// An edge whose deletion leaves exactly one perfect matching, i.e. a witness
/// for af(H) = 1.
pub fn anti_forcing_edge(system: &HexSystem) -> Option<usize> {
    (0..system.edge_count()).find(|&e| {
        let rest = SubGraph::without_edges(system, &[e]);
        find_perfect_matching(&rest)
            .and_then(|m| Matching::on(&rest, m).ok())
            .is_some_and(|m| has_unique_pm(&rest, &m).unwrap_or(false))
    })
}

/// af(H) = 1 iff truncated parallelogram, using the full per-matching sweep.
/// The sweep is cross-checked against the anti-forcing edge search.
pub fn verify_af1(an: &Analysis<'_>) -> Verdict {
    let Some(min_af) = an.min_af() else {
        return an.no_matching(TheoremId::Af1);
    };
    let recognized = is_truncated_parallelogram(an.system);
    let edge = anti_forcing_edge(an.system);
    let ok = (min_af == 1) == recognized && (min_af == 1) == edge.is_some();
    Verdict::check(
        TheoremId::Af1,
        &an.id,
        ok,
        json!({"cells": an.cells(), "min_af": min_af, "truncated_parallelogram": recognized, "anti_forcing_edge": edge}),
    )
}

/// af(H) = 1 iff truncated parallelogram, deciding af(H) = 1 by the
/// anti-forcing edge search alone; suited to systems too large to sweep.
pub fn verify_af1_by_edges(system: &HexSystem) -> Verdict {
    let id = instance_id(system.cells());
    if find_perfect_matching(&SubGraph::full(system)).is_none() {
        return Verdict::new(TheoremId::Af1, &id, Status::HypothesisNotMet, json!({"reason": "no perfect matching"}));
    }
    let recognized = is_truncated_parallelogram(system);
    let edge = anti_forcing_edge(system);
    Verdict::check(
        TheoremId::Af1,
        &id,
        edge.is_some() == recognized,
        json!({"cells": cells_json(system.cells()), "truncated_parallelogram": recognized, "anti_forcing_edge": edge}),
    )
}

/// A placement of a small pattern inside a system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Placement {
    pub center: Cell,
    pub cells: Vec<Cell>,
}

fn nice_placement(system: &HexSystem, cells: Vec<Cell>, center: Cell) -> Option<Placement> {
    let ids = cells.iter().map(|&c| system.cell_id(c)).collect::<Option<Vec<_>>>()?;
    is_nice(system, &system.hexagon_vertex_set(&ids)).then_some(Placement { center, cells })
}

/// First placement (by center cell, then chirality) of a triphenylene whose
/// removal leaves a perfectly matchable graph.
pub fn has_nice_triphenylene(system: &HexSystem) -> Option<Placement> {
    system.cells().iter().find_map(|&center| {
        [Chirality::EastArm, Chirality::WestArm]
            .into_iter()
            .find_map(|ch| nice_placement(system, triphenylene_cells(center, ch), center))
    })
}

/// First nice coronene placement, by center cell.
pub fn has_nice_coronene(system: &HexSystem) -> Option<Placement> {
    system.cells().iter().find_map(|&center| {
        let mut cells = vec![center];
        cells.extend(Direction::ALL.iter().map(|&d| center.step(d)));
        nice_placement(system, cells, center)
    })
}

/// No nice triphenylene iff af = fr for every matching.
pub fn verify_triphenylene_theorem(an: &Analysis<'_>) -> Verdict {
    if !an.has_matching() {
        return an.no_matching(TheoremId::Triphenylene);
    }
    let placement = has_nice_triphenylene(an.system);
    let gap = an.entries.iter().position(|e| e.af.value != e.fr.value);
    let ok = placement.is_none() == gap.is_none();
    let mut w = json!({"cells": an.cells(), "nice_triphenylene": placement, "af_gt_fr_matching": gap});
    if let (false, Some(i)) = (ok, gap) {
        w["payload"] = an.payload(i);
    }
    Verdict::check(TheoremId::Triphenylene, &an.id, ok, w)
}

/// The counterexample family ledger for `n`.
pub fn gen_rn_validate(an: &Analysis<'_>, n: usize) -> Verdict {
    let hex = 2 * n + 4;
    let count_ok = an.system.hexagon_count() == hex;
    let witness = an
        .entries
        .iter()
        .position(|e| e.fr.value == 2 * n + 1 && e.af.value == 2 * n + 2);
    let (max_af, max_fr) = (an.max_af(), an.max_fr());
    let extremes_ok = max_af == Some(hex) && max_fr == Some(hex);
    let placement = has_nice_triphenylene(an.system);
    let ok = count_ok && witness.is_some() && extremes_ok && placement.is_some();
    Verdict::check(
        TheoremId::Rn,
        &an.id,
        ok,
        json!({
            "n": n,
            "cells": an.cells(),
            "hexagons": an.system.hexagon_count(),
            "gap_matching": witness.map(|i| an.payload(i)),
            "Af": max_af,
            "Fr": max_fr,
            "nice_triphenylene": placement,
        }),
    )
}

/// Runs the family ledger if `system` is a member, by shape.
pub fn verify_rn(an: &Analysis<'_>) -> Verdict {
    let h = an.system.hexagon_count();
    let n = (h >= 6 && h.is_multiple_of(2)).then(|| (h - 4) / 2);
    let member = n.filter(|&n| {
        r_family_cells(n).is_ok_and(|cells| canonical_form(&cells) == canonical_form(an.system.cells()))
    });
    match member {
        Some(n) => gen_rn_validate(an, n),
        None => Verdict::new(TheoremId::Rn, &an.id, Status::HypothesisNotMet, json!({"reason": "not a family member"})),
    }
}

/// r(H) <= k(H), and equality exactly as [`SEXTET_POLARITY`] prescribes.
pub fn verify_sextet_kekule(system: &HexSystem) -> Verdict {
    let id = instance_id(system.cells());
    let k = BigUint::from(enumerate_matchings(system).len());
    if k == BigUint::from(0u8) {
        return Verdict::new(TheoremId::SextetKekule, &id, Status::HypothesisNotMet, json!({"reason": "no perfect matching"}));
    }
    let r = sextet_count(system);
    let coronene = has_nice_coronene(system);
    let equal_expected = match SEXTET_POLARITY {
        SextetPolarity::EqualityWithCoronene => coronene.is_some(),
        SextetPolarity::EqualityWithoutCoronene => coronene.is_none(),
    };
    Verdict::check(
        TheoremId::SextetKekule,
        &id,
        r <= k && (r == k) == equal_expected,
        json!({"cells": cells_json(system.cells()), "r": r.to_string(), "k": k.to_string(), "nice_coronene": coronene, "polarity": SEXTET_POLARITY}),
    )
}

/// Every selected verdict for one system, in a fixed order. A cycle-cap
/// overrun turns every affected check into `skipped-budget`.
pub fn verify_system(system: &HexSystem, theorems: &[TheoremId], config: &VerifyConfig) -> Vec<Verdict> {
    use TheoremId::*;
    let id = instance_id(system.cells());
    let mut out = Vec::new();
    let needs_analysis = theorems.iter().any(|t| *t != SextetKekule);
    let analysis = if needs_analysis {
        match Analysis::new(system, config) {
            Ok(an) => Some(an),
            Err(Error::CycleCapExceeded { cap }) => {
                for &t in theorems.iter().filter(|t| **t != SextetKekule) {
                    out.push(Verdict::new(t, &id, Status::SkippedBudget, json!({"cycle_cap": cap})));
                }
                None
            }
            Err(e) => panic!("analysis of a validated system failed: {e}"),
        }
    } else {
        None
    };
    let mut minimax_done = false;
    let mut clar_done = false;
    for &t in theorems {
        if t == SextetKekule {
            out.push(verify_sextet_kekule(system));
            continue;
        }
        let Some(an) = analysis.as_ref() else { continue };
        match t {
            ForcingDuality | AntiForcingDuality | Certificates | InteriorHexagon => {
                if !minimax_done {
                    minimax_done = true;
                    out.extend(verify_minimax(an).into_iter().filter(|v| theorems.contains(&v.theorem)));
                }
            }
            ClarForcing | FriesAntiForcing | DisjointHexagons => {
                if !clar_done {
                    clar_done = true;
                    out.extend(verify_clar_fries(an).into_iter().filter(|v| theorems.contains(&v.theorem)));
                }
            }
            Main => out.extend(verify_main(an)),
            Structure => out.extend(verify_structure(an, config.structure_cap)),
            Af1 => out.push(verify_af1(an)),
            Triphenylene => out.push(verify_triphenylene_theorem(an)),
            Rn => out.push(verify_rn(an)),
            SextetKekule => unreachable!(),
        }
    }
    out
}

/// Verdicts for a whole corpus, in corpus order.
pub fn verify_corpus(systems: &[HexSystem], theorems: &[TheoremId], config: &VerifyConfig) -> Vec<Verdict> {
    config
        .exec
        .map(systems, |h| verify_system(h, theorems, config))
        .into_iter()
        .flatten()
        .collect()
}

/// Status counts per theorem.
#[derive(Clone, Debug, Default)]
pub struct Summary {
    counts: BTreeMap<TheoremId, BTreeMap<Status, usize>>,
}

impl Summary {
    pub fn from_verdicts<'v>(verdicts: impl IntoIterator<Item = &'v Verdict>) -> Self {
        let mut s = Summary::default();
        for v in verdicts {
            s.add(v);
        }
        s
    }

    pub fn add(&mut self, v: &Verdict) {
        *self.counts.entry(v.theorem).or_default().entry(v.status).or_default() += 1;
    }

    pub fn count(&self, theorem: TheoremId, status: Status) -> usize {
        self.counts.get(&theorem).and_then(|m| m.get(&status)).copied().unwrap_or(0)
    }

    pub fn total(&self, status: Status) -> usize {
        self.counts.values().filter_map(|m| m.get(&status)).sum()
    }

    /// 0 when everything holds, 1 on any failure, 3 if only budget skips
    /// spoil the run.
    pub fn exit_code(&self) -> i32 {
        if self.total(Status::Fails) > 0 {
            1
        } else if self.total(Status::SkippedBudget) > 0 {
            3
        } else {
            0
        }
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{:<22} {:>7} {:>7} {:>7} {:>7}", "theorem", "holds", "fails", "n/a", "skipped").unwrap();
        for &t in self.counts.keys() {
            writeln!(
                out,
                "{:<22} {:>7} {:>7} {:>7} {:>7}",
                t.as_str(),
                self.count(t, Status::Holds),
                self.count(t, Status::Fails),
                self.count(t, Status::HypothesisNotMet),
                self.count(t, Status::SkippedBudget)
            )
            .unwrap();
        }
        out
    }
}
