use super::*;
use crate::coloring::is_exact_coloring;
use crate::graph::generate::*;
use crate::graph::random::{random_cactus, shuffled};
use crate::oracle::{brute_chi, chi1_via_matchings};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn triangle() -> Graph {
    cycle(3).unwrap()
}

/// Triangles `0,1,2` and `3,4,5` joined by the bridge `2–3`.
fn bridged_triangles() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap()
}

/// Triangle `0,1,2`; 4-cycle `2,3,4,5` through vertex 2; triangle `4,6,7`
/// through vertex 4.
fn triangle_square_triangle() -> Graph {
    Graph::new(
        8,
        [
            (0, 1),
            (1, 2),
            (0, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 2),
            (4, 6),
            (6, 7),
            (4, 7),
        ],
    )
    .unwrap()
}

#[test]
fn preprocess_single_triangle() {
    let aux = cactus_preprocess(&triangle()).unwrap();
    assert_eq!(aux.cycles, vec![vec![0, 1, 2]]);
    assert_eq!(aux.has_simplicial, vec![true]);
    assert_eq!(aux.cliques, vec![vec![0]; 3]);
    let g = aux.graph();
    assert_eq!((g.n(), g.m()), (3, 2));
    assert!(g.has_edge(aux.x(), aux.w(0).unwrap()));
    assert!(g.has_edge(aux.v(0), aux.w(0).unwrap()));
}

#[test]
fn preprocess_bowtie() {
    let aux = cactus_preprocess(&bowtie()).unwrap();
    assert_eq!(aux.cycle_count(), 2);
    assert_eq!(aux.has_simplicial, vec![true, true]);
    assert_eq!(aux.cycle_adj, vec![vec![1], vec![0]]);
    assert_eq!(aux.cliques[2], vec![0, 1]);
    assert!(aux.graph().has_edge(aux.v(0), aux.v(1)));
}

#[test]
fn preprocess_rejects_non_cactus() {
    assert_eq!(
        cactus_preprocess(&complete(4).unwrap()),
        Err(Error::NotACactus)
    );
}

#[test]
fn cyclic_order_follows_edges() {
    let aux = cactus_preprocess(&triangle_square_triangle()).unwrap();
    assert_eq!(
        aux.cycles,
        vec![vec![0, 1, 2], vec![2, 3, 4, 5], vec![4, 6, 7]]
    );
    assert_eq!(aux.has_simplicial, vec![true, true, true]);
}

#[test]
fn label_examples() {
    let aux = cactus_preprocess(&triangle()).unwrap();
    let l = cactus_label(&aux, Palette::Two).unwrap();
    assert_eq!(l.cycles, vec![Label::M]);
    assert_eq!(l.x, Label::M);
    assert_eq!(l.w, vec![Some(Label::P)]);

    let aux = cactus_preprocess(&bowtie()).unwrap();
    let r = cactus_label(&aux, Palette::Two).unwrap_err();
    assert_eq!(r.reason, RejectReason::TwoSimplicialCyclesTouch);

    let pendant = Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
    let aux = cactus_preprocess(&pendant).unwrap();
    for palette in [Palette::Two, Palette::Many] {
        let r = cactus_label(&aux, palette).unwrap_err();
        assert_eq!(r.reason, RejectReason::UncoveredVertex);
        assert_eq!(r.vertex, Some(3));
    }
}

/// Three triangles around a central triangle: the centre must be
/// polychromatic, and with two colors that is impossible.
#[test]
fn odd_polychromatic_cycle() {
    let g = Graph::new(
        9,
        [
            (0, 1),
            (1, 2),
            (0, 2),
            (0, 3),
            (3, 4),
            (0, 4),
            (1, 5),
            (5, 6),
            (1, 6),
            (2, 7),
            (7, 8),
            (2, 8),
        ],
    )
    .unwrap();
    let aux = cactus_preprocess(&g).unwrap();
    assert_eq!(
        cactus_label(&aux, Palette::Two).unwrap_err().reason,
        RejectReason::OddPCycle
    );
    let l = cactus_label(&aux, Palette::Many).unwrap();
    let centre = aux.cycles.iter().position(|c| c == &vec![0, 1, 2]).unwrap();
    assert_eq!(l.cycles[centre], Label::P);
    let c = cactus_extract_coloring(&g, &aux, &l, 3).unwrap();
    assert!(is_exact_coloring(&g, &c, 2));
    assert_eq!(cactus_chi2(&g).unwrap().chi(), Some(3));
}

/// A square with a triangle on each corner: the triangles are forced
/// monochromatic, the square polychromatic and alternating.
#[test]
fn square_with_triangles() {
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
    for corner in 0..4 {
        let a = 4 + 2 * corner;
        edges.extend([(corner, a), (a, a + 1), (corner, a + 1)]);
    }
    let g = Graph::new(12, edges).unwrap();
    let aux = cactus_preprocess(&g).unwrap();
    let l = cactus_label(&aux, Palette::Two).unwrap();
    assert_eq!(l.cycles.iter().filter(|&&x| x == Label::P).count(), 1);
    let c = cactus_extract_coloring(&g, &aux, &l, 2).unwrap();
    assert!(is_exact_coloring(&g, &c, 2));
    assert_eq!(c.color(0), 0);
    assert_ne!(c.color(0), c.color(1));
}

#[test]
fn extract_examples() {
    let g = triangle();
    let aux = cactus_preprocess(&g).unwrap();
    let l = cactus_label(&aux, Palette::Two).unwrap();
    assert_eq!(
        cactus_extract_coloring(&g, &aux, &l, 2).unwrap().colors(),
        &[0, 0, 0]
    );

    let g = bridged_triangles();
    let aux = cactus_preprocess(&g).unwrap();
    let l = cactus_label(&aux, Palette::Two).unwrap();
    let c = cactus_extract_coloring(&g, &aux, &l, 2).unwrap();
    assert_eq!(c.colors(), &[0, 0, 0, 1, 1, 1]);
    assert!(is_exact_coloring(&g, &c, 2));
    assert!(crate::oracle::brute_solve(&g, 2, 2, &Budget::default())
        .unwrap()
        .is_some());

    let mut partial = l.clone();
    partial.cycles[1] = Label::Unlabeled;
    assert_eq!(
        cactus_extract_coloring(&g, &aux, &partial, 2),
        Err(Error::IncompleteLabeling(1))
    );
}

#[test]
fn chi2_examples() {
    let b = Budget::default();
    assert_eq!(cactus_chi2(&cycle(7).unwrap()).unwrap().chi(), Some(1));
    assert!(cactus_chi2(&bowtie()).unwrap().is_infeasible());
    assert!(brute_chi(&bowtie(), 2, 5, &b).unwrap().is_infeasible());
    let g = triangle_square_triangle();
    assert_eq!(
        cactus_chi2(&g).unwrap().chi(),
        brute_chi(&g, 2, g.n(), &b).unwrap().chi()
    );
    assert_eq!(
        cactus_chi2(&path(3).unwrap()).unwrap(),
        SolveOutcome::Infeasible
    );
}

#[test]
fn chi1_examples() {
    let solved = |g: &Graph| cactus_chi1(g).unwrap().exact().cloned().unwrap();
    let h = tightness_gadget();
    assert_eq!(solved(&h).chi(), Some(3));
    assert!(is_exact_coloring(&h, solved(&h).witness().unwrap(), 1));
    assert_eq!(solved(&cycle(8).unwrap()).chi(), Some(2));
    assert!(solved(&cycle(5).unwrap()).is_infeasible());
    assert_eq!(solved(&path(2).unwrap()).chi(), Some(1));
    assert_eq!(cactus_chi1(&petersen()), Err(Error::NotACactus));
}

#[test]
fn chi1_reports_interval_when_search_is_cut_short() {
    let h = tightness_gadget();
    match cactus_chi1_with(&h, DEFAULT_MATCHING_LIMIT, &Budget::new(1)).unwrap() {
        Chi1Outcome::Bounded {
            lower,
            upper,
            witness,
        } => {
            assert_eq!((lower, upper), (2, 3));
            assert!(is_exact_coloring(&h, &witness, 1));
        }
        other => panic!("expected an interval, got {other:?}"),
    }
}

#[test]
fn repeat_loop_passes_are_bounded() {
    for seed in 0..200 {
        let g = shuffled(&random_cactus(40, 0.0, 6, seed), seed);
        let aux = cactus_preprocess(&g).unwrap();
        if let Ok(l) = cactus_label(&aux, Palette::Many) {
            assert!(l.passes <= aux.cycle_count().max(1));
        }
    }
}

fn small_cactus() -> impl Strategy<Value = Graph> {
    (1usize..=14, 0.0f64..0.4, 3usize..=7, any::<u64>())
        .prop_map(|(n, p, c, seed)| shuffled(&random_cactus(n, p, c, seed), seed ^ 0x5eed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chi2_matches_oracle(g in small_cactus()) {
        let fast = cactus_chi2(&g).unwrap();
        let slow = brute_chi(&g, 2, g.n().max(1), &Budget::default()).unwrap();
        prop_assert_eq!(fast.chi(), slow.chi());
        if let Some(w) = fast.witness() {
            prop_assert!(is_exact_coloring(&g, w, 2));
        }
    }

    #[test]
    fn labeling_is_order_independent(g in small_cactus(), seed in any::<u64>()) {
        let aux = cactus_preprocess(&g).unwrap();
        for palette in [Palette::Two, Palette::Many] {
            if let Ok(base) = cactus_label(&aux, palette) {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                for _ in 0..5 {
                    let mut order: Vec<usize> = (0..g.n()).collect();
                    order.shuffle(&mut rng);
                    let other = cactus_label_with_order(&aux, palette, &order).unwrap();
                    prop_assert_eq!(&other.cycles, &base.cycles);
                }
            }
        }
    }

    #[test]
    fn chi1_matches_matching_formula(g in small_cactus()) {
        let fast = cactus_chi1(&g).unwrap();
        let slow = chi1_via_matchings(&g, &Budget::default()).unwrap();
        prop_assert_eq!(fast.exact().unwrap().chi(), slow.chi());
        if let Some(c) = slow.chi() {
            prop_assert!(c <= 3);
        }
    }
}
