mod common;

use gridemb::cover::{make_cover, validate_cover, CoverKind, CoverParams};
use gridemb::emb::{Provider, SearchLimits};
use gridemb::graph::{generate_graph, Family};
use gridemb::lipschitz::{
    extend_lipschitz, is_k_lipschitz, is_r_locally_injective, LatticeMap, PartialMap,
};
use gridemb::pipeline::{
    displacement, extract_cocycle, key_lemma_map, merge_maps, shift_chart, strong_embedding,
    verify_cocycle,
};
use gridemb::{FiniteGraph, GridBox, GridPoint};
use proptest::prelude::*;

fn random_chunk(side: i64, p: f64, seed: u64) -> FiniteGraph {
    let bx = GridBox::cube(2, side).unwrap();
    generate_graph(&Family::RandomInduced { bx, p, seed }).unwrap()
}

fn coords_map(g: &FiniteGraph) -> LatticeMap {
    LatticeMap::new(g.coord_dim().unwrap(), g.coords().unwrap().to_vec()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cover_map_guarantee(seed in any::<u64>(), radius in 1u64..4, kind in 0usize..3) {
        let g = random_chunk(14, 0.75, seed);
        let kind = [CoverKind::Trivial, CoverKind::Brick, CoverKind::Net][kind];
        let cover = make_cover(&g, kind, CoverParams { cell: 3 * radius + 1, radius }).unwrap();
        let rep = key_lemma_map(&g, radius, &cover, &Provider::Ambient).unwrap();
        prop_assert_eq!(rep.output.dim(), 2 * 2 * cover.m);
        prop_assert!(rep.verification.lipschitz.holds);
        prop_assert!(rep.verification.locally_injective.holds);
        // recorded verdicts are the verifiers' verdicts
        prop_assert_eq!(is_k_lipschitz(&g, &rep.output, 1).unwrap(), rep.verification.lipschitz);
        prop_assert_eq!(
            is_r_locally_injective(&g, &rep.output, radius as usize).unwrap(),
            rep.verification.locally_injective
        );
    }

    #[test]
    fn extension_fixes_its_domain(seed in any::<u64>(), keep in 0.05f64..1.0) {
        let g = random_chunk(10, 0.7, seed);
        let coords = coords_map(&g);
        let mut rng = gridemb::rng::XorShift64Star::new(seed ^ 0xA5);
        let mut partial = PartialMap::new(2, Default::default()).unwrap();
        for v in 0..g.n() {
            if rng.chance(keep) {
                partial.insert(v, coords.value(v).clone()).unwrap();
            }
        }
        let ext = extend_lipschitz(&g, &partial).unwrap();
        for (v, p) in partial.iter() {
            prop_assert_eq!(ext.value(v), p);
        }
        prop_assert!(is_k_lipschitz(&g, &ext, 1).unwrap().holds);
    }
}

#[test]
fn brick_cover_on_a_line_has_dimension_four() {
    let g = generate_graph(&Family::Chunk(GridBox::new(vec![(0, 5)]).unwrap())).unwrap();
    let cover = make_cover(&g, CoverKind::Brick, CoverParams { cell: 7, radius: 2 }).unwrap();
    assert_eq!(cover.m, 2);
    let rep = key_lemma_map(&g, 2, &cover, &Provider::Ambient).unwrap();
    assert_eq!(rep.output.dim(), 4);
    assert!(rep.holds());
}

#[test]
fn trivial_cover_on_a_short_line() {
    let g = generate_graph(&Family::Chunk(GridBox::new(vec![(0, 5)]).unwrap())).unwrap();
    let cover = make_cover(&g, CoverKind::Trivial, CoverParams { cell: 7, radius: 2 }).unwrap();
    let rep = key_lemma_map(&g, 2, &cover, &Provider::Ambient).unwrap();
    let got: Vec<Vec<i64>> = rep.output.values().iter().map(|p| p.0.clone()).collect();
    assert_eq!(
        got,
        vec![
            vec![0, 0],
            vec![1, 0],
            vec![2, 0],
            vec![2, 1],
            vec![2, 2],
            vec![1, 2]
        ]
    );
}

#[test]
fn single_vertex_maps_to_zero() {
    let g = FiniteGraph::empty(1);
    let cover = make_cover(&g, CoverKind::Trivial, CoverParams { cell: 4, radius: 1 }).unwrap();
    let provider = Provider::Solver {
        dim: 1,
        limits: SearchLimits::default(),
    };
    let rep = key_lemma_map(&g, 1, &cover, &provider).unwrap();
    assert_eq!(rep.output.values(), &[GridPoint::origin(2)]);
}

#[test]
fn solver_provider_without_coordinates() {
    let g = generate_graph(&Family::Cycle(40)).unwrap();
    let cover = make_cover(&g, CoverKind::Net, CoverParams { cell: 4, radius: 1 }).unwrap();
    let provider = Provider::Solver {
        dim: 1,
        limits: SearchLimits::default(),
    };
    let rep = key_lemma_map(&g, 1, &cover, &provider).unwrap();
    assert!(rep.holds());
    assert_eq!(rep.output.dim(), 2 * cover.m);
}

#[test]
fn supplied_provider_uses_the_given_embedding() {
    let g = generate_graph(&Family::Chunk(GridBox::cube(2, 8).unwrap())).unwrap();
    let cover = make_cover(&g, CoverKind::Brick, CoverParams { cell: 7, radius: 2 }).unwrap();
    let supplied = key_lemma_map(&g, 2, &cover, &Provider::Supplied(coords_map(&g))).unwrap();
    let ambient = key_lemma_map(&g, 2, &cover, &Provider::Ambient).unwrap();
    assert_eq!(supplied.output, ambient.output);
}

#[test]
fn covers_are_bounded_at_their_scale() {
    let g = generate_graph(&Family::Chunk(GridBox::cube(2, 30).unwrap())).unwrap();
    for kind in [CoverKind::Brick, CoverKind::Net] {
        let cover = make_cover(
            &g,
            kind,
            CoverParams {
                cell: 10,
                radius: 3,
            },
        )
        .unwrap();
        let rep = validate_cover(&g, &cover, 9, Some(60)).unwrap();
        assert!(rep.within_bound, "{kind}: {rep:?}");
    }
}

#[test]
fn merged_pipeline_outputs() {
    let g = random_chunk(12, 0.8, 5);
    let cover = make_cover(&g, CoverKind::Brick, CoverParams { cell: 7, radius: 2 }).unwrap();
    let f = strong_embedding(&g, &coords_map(&g)).unwrap();
    let h = key_lemma_map(&g, 2, &cover, &Provider::Ambient)
        .unwrap()
        .output;
    let merged = merge_maps(&f, &h).unwrap();
    assert!(merged.max_identity.holds);
    assert_eq!(merged.map.tags(), f.tags());
    assert!(is_r_locally_injective(&g, &merged.map, 2).unwrap().holds);
    for u in 0..g.n() {
        for v in 0..g.n() {
            let want = displacement(&f, u, v).max(displacement(&h, u, v));
            assert_eq!(displacement(&merged.map, u, v), want);
        }
    }
}

#[test]
fn cocycles_of_coordinate_maps() {
    let g = random_chunk(12, 0.6, 9);
    let c = extract_cocycle(&g, &coords_map(&g)).unwrap();
    assert!(c.kernel_trivial.holds);
    assert!(verify_cocycle(&c, 20_000, 1).holds);
}

#[test]
fn charts_separate_vertices_of_a_chunk() {
    let g = generate_graph(&Family::Chunk(GridBox::new(vec![(0, 4), (0, 3)]).unwrap())).unwrap();
    let d = g.diameter() as i64;
    let window = GridBox::symmetric(2, -d, d).unwrap();
    let charts: Vec<_> = (0..g.n())
        .map(|v| shift_chart(&g, v, &window).unwrap().entries)
        .collect();
    for a in 0..charts.len() {
        for b in a + 1..charts.len() {
            assert_ne!(charts[a], charts[b]);
        }
    }
}
