use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use rookposet::kerov::{check_cover_preservation, check_order_preservation};
use rookposet::moves::{
    cross_moves_orthogonal, moves_general, moves_orthogonal, slide_right_orthogonal,
    slide_up_general, slide_up_orthogonal, split_moves_orthogonal, split_pairs_general,
};
use rookposet::order::inversion_length;
use rookposet::verify::brute_force_placements;
use rookposet::*;

fn p(n: usize, pairs: &[(usize, usize)]) -> RookPlacement {
    RookPlacement::from_pairs(n, pairs).unwrap()
}

/// Random valid placement: random candidate roots kept greedily.
fn placement_strategy(max_n: usize) -> impl Strategy<Value = RookPlacement> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((2..=n, 0..n), 0..n)))
        .prop_map(|(n, candidates)| {
            let mut roots: Vec<Root> = Vec::new();
            for (row, c) in candidates {
                let r = Root::new(row, c % (row - 1) + 1).unwrap();
                if roots
                    .iter()
                    .all(|x| x.row() != r.row() && x.col() != r.col())
                {
                    roots.push(r);
                }
            }
            RookPlacement::new(n, roots).unwrap()
        })
}

fn orthogonal_strategy(max_n: usize) -> impl Strategy<Value = RookPlacement> {
    placement_strategy(max_n).prop_map(|d| {
        let mut used = HashSet::new();
        let kept: Vec<Root> = d
            .roots()
            .iter()
            .copied()
            .filter(|r| {
                if used.contains(&r.row()) || used.contains(&r.col()) {
                    return false;
                }
                used.insert(r.row());
                used.insert(r.col());
                true
            })
            .collect();
        RookPlacement::new(d.n(), kept).unwrap()
    })
}

proptest! {
    #[test]
    fn text_and_json_round_trip(d in placement_strategy(12)) {
        prop_assert_eq!(&RookPlacement::parse(&d.to_string(), d.n()).unwrap(), &d);
        let json = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(&serde_json::from_str::<RookPlacement>(&json).unwrap(), &d);
    }

    #[test]
    fn rank_matrix_support_and_bounds(d in placement_strategy(12)) {
        let m = r_matrix(&d);
        let n = d.n();
        for i in 1..=n {
            for j in 1..=n {
                if i <= j {
                    prop_assert_eq!(m.get(i, j), 0);
                } else {
                    prop_assert!(m.get(i, j) as usize <= j.min(n - i + 1));
                }
            }
        }
    }

    #[test]
    fn involution_parity(d in orthogonal_strategy(14)) {
        let w = involution_of(&d).unwrap();
        prop_assert!(w.is_involution());
        prop_assert_eq!(inversion_length(&w) % 2, d.len() % 2);
    }

    #[test]
    fn kerov_image_shape(d in placement_strategy(12)) {
        let k = KerovImage::of(&d).unwrap();
        prop_assert!(k.image.is_orthogonal());
        prop_assert!(k.has_kerov_shape());
        prop_assert_eq!(k.image.n(), 2 * d.n() - 2);
        prop_assert_eq!(k.image.len(), d.len());
    }

    #[test]
    fn moves_are_sound(d in placement_strategy(10)) {
        for m in moves_general(&d) {
            prop_assert!(m.result != d && leq_placement(&m.result, &d).unwrap(), "{}", m);
            prop_assert_eq!(m.result.len() as isize - d.len() as isize, m.kind.size_delta());
        }
    }

    #[test]
    fn orthogonal_moves_stay_orthogonal(d in orthogonal_strategy(12)) {
        for m in moves_orthogonal(&d).unwrap() {
            prop_assert!(m.result.is_orthogonal(), "{}", m);
            prop_assert!(m.result != d && leq_placement(&m.result, &d).unwrap(), "{}", m);
        }
    }

    #[test]
    fn kerov_maps_predecessors_to_predecessors(d in placement_strategy(8)) {
        prop_assert!(rookposet::verify::kerov_images_of_predecessors(&d).unwrap());
    }
}

#[test]
fn enumeration_matches_subset_oracle() {
    for n in 1..=6 {
        for kind in [Kind::General, Kind::Orthogonal] {
            assert_eq!(
                enumerate_placements(n, kind).unwrap(),
                brute_force_placements(n, kind)
            );
        }
        let general: BTreeSet<_> = enumerate_placements(n, Kind::General)
            .unwrap()
            .into_iter()
            .collect();
        assert!(enumerate_placements(n, Kind::Orthogonal)
            .unwrap()
            .iter()
            .all(|d| general.contains(d)));
    }
}

#[test]
fn order_is_partial_and_matrix_injective() {
    for n in 1..=5 {
        for kind in [Kind::General, Kind::Orthogonal] {
            let poset = build_poset(n, kind).unwrap();
            poset.check_partial_order().unwrap();
            let matrices: HashSet<_> = poset.elements().iter().map(r_matrix).collect();
            assert_eq!(matrices.len(), poset.len());
            // The empty placement is the unique minimum.
            let bottom = poset.index_of(&RookPlacement::empty(n)).unwrap();
            assert!((0..poset.len()).all(|k| poset.leq(bottom, k)));
        }
    }
}

/// All permutations of 1..=n.
fn symmetric_group(n: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Permutation>) {
        if prefix.len() == n {
            out.push(Permutation::from_one_line(prefix.clone()).unwrap());
            return;
        }
        for x in 1..=n {
            if !prefix.contains(&x) {
                prefix.push(x);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

#[test]
fn bruhat_matches_transposition_closure() {
    for n in 1..=4 {
        let group = symmetric_group(n);
        let index = |w: &Permutation| group.iter().position(|x| x == w).unwrap();
        let size = group.len();
        // u < u·t for transpositions t with l(u·t) = l(u) + 1, then close transitively.
        let mut reach = vec![vec![false; size]; size];
        for (a, u) in group.iter().enumerate() {
            reach[a][a] = true;
            for x in 1..=n {
                for y in x + 1..=n {
                    let mut v = u.clone();
                    v.swap_positions(x, y);
                    if inversion_length(&v) == inversion_length(u) + 1 {
                        reach[a][index(&v)] = true;
                    }
                }
            }
        }
        for k in 0..size {
            for a in 0..size {
                if reach[a][k] {
                    for b in 0..size {
                        if reach[k][b] {
                            reach[a][b] = true;
                        }
                    }
                }
            }
        }
        for a in 0..size {
            for b in 0..size {
                assert_eq!(
                    bruhat_leq(&group[a], &group[b]).unwrap(),
                    reach[a][b],
                    "{} vs {}",
                    group[a],
                    group[b]
                );
            }
        }
    }
}

#[test]
fn placement_order_matches_bruhat_on_involutions() {
    for n in 3..=6 {
        let elements = enumerate_placements(n, Kind::Orthogonal).unwrap();
        for a in &elements {
            for b in &elements {
                assert_eq!(
                    leq_placement(a, b).unwrap(),
                    bruhat_leq(&involution_of(a).unwrap(), &involution_of(b).unwrap()).unwrap()
                );
            }
        }
    }
}

#[test]
fn kerov_injective_and_embedding() {
    for n in 2..=6 {
        let elements = enumerate_placements(n, Kind::General).unwrap();
        let images: HashSet<_> = elements.iter().map(|d| kerov_map(d).unwrap()).collect();
        assert_eq!(images.len(), elements.len());
    }
    let r5 = enumerate_placements(5, Kind::General).unwrap();
    for t in &r5 {
        for d in &r5 {
            assert!(check_order_preservation(t, d).unwrap());
        }
    }
    let r4 = enumerate_placements(4, Kind::General).unwrap();
    for t in &r4 {
        for d in &r4 {
            assert!(check_cover_preservation(t, d).unwrap());
        }
    }
}

#[test]
fn hasse_ranks_step_by_one() {
    for n in 2..=6 {
        let poset = build_poset(n, Kind::General).unwrap();
        for &(t, d) in poset.hasse() {
            let (t, d) = (&poset.elements()[t], &poset.elements()[d]);
            assert_eq!(
                rank_general(d).unwrap(),
                rank_general(t).unwrap() + 1,
                "{t} -> {d}"
            );
        }
    }
    for m in 2..=7 {
        let poset = build_poset(m, Kind::Orthogonal).unwrap();
        for &(t, d) in poset.hasse() {
            let (t, d) = (&poset.elements()[t], &poset.elements()[d]);
            assert_eq!(
                rank_orthogonal(d).unwrap(),
                rank_orthogonal(t).unwrap() + 1,
                "{t} -> {d}"
            );
        }
    }
}

#[test]
fn hasse_in_edges_are_generated_predecessors() {
    for n in 2..=6 {
        let poset = build_poset(n, Kind::General).unwrap();
        for (k, d) in poset.elements().iter().enumerate() {
            let mut lower: Vec<_> = poset
                .lower_covers(k)
                .into_iter()
                .map(|t| poset.elements()[t].clone())
                .collect();
            lower.sort();
            assert_eq!(lower, predecessors_general(d));
        }
    }
    for m in 2..=7 {
        let poset = build_poset(m, Kind::Orthogonal).unwrap();
        for (k, d) in poset.elements().iter().enumerate() {
            let mut lower: Vec<_> = poset
                .lower_covers(k)
                .into_iter()
                .map(|t| poset.elements()[t].clone())
                .collect();
            lower.sort();
            assert_eq!(lower, predecessors_orthogonal(d).unwrap());
        }
    }
}

// Examples whose membership the brute-force covers decide.

fn oracle_covers(d: &RookPlacement, kind: Kind) -> Vec<RookPlacement> {
    build_poset(d.n(), kind)
        .unwrap()
        .brute_force_covers(d)
        .unwrap()
}

#[test]
fn oracle_decided_examples_general() {
    // Slide right of (3,1) in R(3) is blocked (row 2 empty), and {(3,2)} is no cover.
    let d = p(3, &[(3, 1)]);
    let covers = oracle_covers(&d, Kind::General);
    assert!(!covers.contains(&p(3, &[(3, 2)])));
    // The split at (2,2) gives {(2,1),(3,2)}, which the oracle confirms.
    assert_eq!(
        split_pairs_general(&d, Root::new(3, 1).unwrap()),
        vec![(2, 2)]
    );
    assert!(covers.contains(&p(3, &[(2, 1), (3, 2)])));
    assert_eq!(predecessors_general(&d), covers);

    // D = {(4,1),(3,2)}: slide-up moves agree with the oracle.
    let d = p(4, &[(4, 1), (3, 2)]);
    let covers = oracle_covers(&d, Kind::General);
    for m in slide_up_general(&d) {
        assert!(covers.contains(&m.result), "{m}");
    }
    assert_eq!(predecessors_general(&d), covers);

    // The cross {(3,2),(4,1)} -> {(3,1),(4,2)} is a cover.
    assert!(
        oracle_covers(&p(4, &[(3, 2), (4, 1)]), Kind::General).contains(&p(4, &[(3, 1), (4, 2)]))
    );

    // The (3,3) split of (6,2) is a cover in R(6).
    let d = p(6, &[(4, 1), (6, 2), (5, 4)]);
    assert!(oracle_covers(&d, Kind::General).contains(&p(6, &[(4, 1), (3, 2), (6, 3), (5, 4)])));
}

#[test]
fn oracle_decided_examples_orthogonal() {
    let d = p(4, &[(4, 1)]);
    let covers = oracle_covers(&d, Kind::Orthogonal);
    for m in slide_right_orthogonal(&d)
        .unwrap()
        .into_iter()
        .chain(slide_up_orthogonal(&d).unwrap())
    {
        assert!(covers.contains(&m.result), "{m}");
    }
    assert_eq!(predecessors_orthogonal(&d).unwrap(), covers);

    for d in [
        p(4, &[(3, 1), (4, 2)]),
        p(5, &[(4, 2), (5, 3)]),
        p(6, &[(6, 1)]),
    ] {
        let covers = oracle_covers(&d, Kind::Orthogonal);
        for m in cross_moves_orthogonal(&d)
            .unwrap()
            .into_iter()
            .chain(split_moves_orthogonal(&d).unwrap())
        {
            assert!(covers.contains(&m.result), "{m}");
        }
        assert_eq!(predecessors_orthogonal(&d).unwrap(), covers, "{d}");
    }
}
