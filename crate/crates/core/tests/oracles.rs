mod common;

use benzenoid::altcycles::{
    alternating_hexagons, compatible, enumerate_alt_cycles, non_crossing, AltCycle, DEFAULT_CYCLE_CAP,
};
use benzenoid::forcing::{clar_number, sextet_count, MatchingContext};
use benzenoid::hexcore::{enumerate_all_systems, linear_chain, truncated_parallelogram, HexSystem, Named, SubGraph};
use benzenoid::matchings::{count_matchings, enumerate_matchings, has_unique_pm, is_nice, rotate, Matching};
use common::*;
use num_bigint::BigUint;
use std::collections::BTreeSet;

fn small_systems(max: usize) -> Vec<HexSystem> {
    enumerate_all_systems(max).unwrap().collect()
}

fn sorted_edges(c: &AltCycle) -> Vec<usize> {
    let mut e = c.edges().to_vec();
    e.sort();
    e
}

#[test]
fn matchings_match_subset_scan() {
    for h in small_systems(4) {
        let got: Vec<Vec<usize>> = enumerate_matchings(&h).iter().map(|m| m.edges().to_vec()).collect();
        let want = brute_matchings(&h);
        assert_eq!(got, want, "{:?}", h.cells());
        assert_eq!(count_matchings(&SubGraph::full(&h)), BigUint::from(want.len()));
        assert_eq!(kekule_by_permanent(&h), want.len() as i128);
    }
}

#[test]
fn linear_chains_have_n_plus_one_matchings() {
    for n in 1..=4 {
        assert_eq!(brute_matchings(&linear_chain(n).unwrap()).len(), n + 1);
    }
    for n in 1..=12 {
        assert_eq!(enumerate_matchings(&linear_chain(n).unwrap()).len(), n + 1);
    }
}

#[test]
fn coronene_count_by_permanent() {
    let h = Named::Coronene.system();
    assert_eq!(kekule_by_permanent(&h), 20);
    assert_eq!(enumerate_matchings(&h).len(), 20);
    let center = h.cell_id(benzenoid::hexcore::Cell::new(0, 0)).unwrap();
    let mut removed = vec![false; h.vertex_count()];
    h.hexagon(center).vertices.iter().for_each(|&v| removed[v] = true);
    assert!(brute_has_pm(&h, &removed));
    assert!(is_nice(&h, &h.hexagon_vertex_set(&[center])));
}

#[test]
fn alternating_cycles_match_simple_cycle_scan() {
    for h in small_systems(4) {
        for m in enumerate_matchings(&h) {
            let got: BTreeSet<Vec<usize>> = enumerate_alt_cycles(&h, &m, DEFAULT_CYCLE_CAP)
                .unwrap()
                .iter()
                .map(sorted_edges)
                .collect();
            let want: BTreeSet<Vec<usize>> = brute_alt_cycles(&h, m.edges()).into_iter().map(|c| c.edges).collect();
            assert_eq!(got, want, "{:?} {:?}", h.cells(), m.edges());
        }
    }
}

#[test]
fn packings_and_forcing_numbers_match_definitions() {
    for h in small_systems(4) {
        let all = brute_matchings(&h);
        let edges = edge_list(&h);
        for m in enumerate_matchings(&h) {
            let refs = brute_alt_cycles(&h, m.edges());
            let ctx = MatchingContext::new(&h, m.clone(), DEFAULT_CYCLE_CAP).unwrap();
            assert_eq!(ctx.max_disjoint_cycles().value, max_pairwise(&refs, ref_vertex_disjoint));
            assert_eq!(
                ctx.max_compatible_set().value,
                max_pairwise(&refs, |a, b| ref_compatible(&edges, m.edges(), a, b))
            );
            assert_eq!(ctx.forcing().value, forcing_by_definition(&all, m.edges()));
            assert_eq!(ctx.anti_forcing().value, anti_forcing_by_definition(&all, m.edges(), h.edge_count()));
        }
    }
}

#[test]
fn clar_and_sextets_match_subset_scan() {
    for h in small_systems(5) {
        let patterns = brute_sextet_patterns(&h);
        let clar = clar_number(&h).map(|c| c.value);
        assert_eq!(clar, patterns.iter().map(|p| p.len()).max(), "{:?}", h.cells());
        assert_eq!(sextet_count(&h), BigUint::from(patterns.len()));
    }
}

#[test]
fn fries_of_triphenylene_by_sweep() {
    let h = Named::Triphenylene.system();
    let best = brute_matchings(&h)
        .iter()
        .map(|m| {
            h.hexagons()
                .iter()
                .filter(|hex| (0..6).all(|i| m.contains(&hex.edges[i]) != m.contains(&hex.edges[(i + 1) % 6])))
                .count()
        })
        .max();
    let report = benzenoid::forcing::InvariantReport::compute(&h, DEFAULT_CYCLE_CAP, benzenoid::Exec::Sequential)
        .unwrap();
    assert_eq!(report.fries, best);
    assert_eq!(best, Some(4));
}

#[test]
fn uniqueness_agrees_with_counting() {
    for h in small_systems(4) {
        let all = brute_matchings(&h);
        for m in enumerate_matchings(&h) {
            for e in (0..h.edge_count()).filter(|&e| !m.contains(e)) {
                let rest = SubGraph::without_edges(&h, &[e]);
                let survivors = all.iter().filter(|o| !o.contains(&e)).count();
                assert_eq!(has_unique_pm(&rest, &m).unwrap(), survivors == 1);
            }
            assert_eq!(has_unique_pm(&SubGraph::full(&h), &m).unwrap(), all.len() == 1);
        }
    }
}

#[test]
fn rotation_is_an_involution_on_every_cycle() {
    for h in small_systems(4) {
        for m in enumerate_matchings(&h) {
            for c in enumerate_alt_cycles(&h, &m, DEFAULT_CYCLE_CAP).unwrap() {
                let m2 = rotate(&h, &m, &c).unwrap();
                assert!(Matching::new(&h, m2.edges().to_vec()).is_ok());
                assert!(AltCycle::from_vertices(&h, &m2, c.vertices()).is_ok());
                assert_eq!(rotate(&h, &m2, &c).unwrap(), m);
            }
        }
    }
}

#[test]
fn every_cycle_encloses_an_alternating_hexagon() {
    for h in small_systems(6) {
        for m in enumerate_matchings(&h) {
            let alt: Vec<usize> = alternating_hexagons(&h, &m);
            for c in enumerate_alt_cycles(&h, &m, DEFAULT_CYCLE_CAP).unwrap() {
                assert!(alt.iter().any(|&x| c.interior().contains(x)));
            }
        }
    }
}

#[test]
fn overlapping_ten_cycles_cross() {
    // ten-cycles enclose two adjacent hexagons; in H(2, 2) two of them can
    // share exactly one hexagon, which is neither disjoint nor nested
    let h = truncated_parallelogram(&[2, 2]).unwrap();
    let tens: Vec<AltCycle> = enumerate_matchings(&h)
        .iter()
        .flat_map(|m| enumerate_alt_cycles(&h, m, DEFAULT_CYCLE_CAP).unwrap())
        .filter(|c| c.len() == 10)
        .collect();
    let mut overlapping = 0;
    for (i, a) in tens.iter().enumerate() {
        for b in &tens[i + 1..] {
            match a.interior().intersection_count(b.interior()) {
                1 => {
                    overlapping += 1;
                    assert!(!non_crossing(a, b));
                }
                _ => assert!(non_crossing(a, b)),
            }
        }
    }
    assert!(overlapping > 0);
}

#[test]
fn adjacent_hexagons_compatibility() {
    let h = Named::Naphthalene.system();
    let shared = (0..h.edge_count())
        .find(|&e| h.hexagon(0).edges.contains(&e) && h.hexagon(1).edges.contains(&e))
        .unwrap();
    for m in enumerate_matchings(&h) {
        let (Ok(a), Ok(b)) = (AltCycle::from_hexagon(&h, &m, 0), AltCycle::from_hexagon(&h, &m, 1)) else {
            continue;
        };
        assert_eq!(compatible(&a, &b), m.contains(shared));
    }
}
