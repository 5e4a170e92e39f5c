//! Cross-module properties: homology transfer along the adjunctions, the
//! sphere property of open nerves on random inputs, duality Betti symmetry,
//! ridge monotonicity, and coordinate-invariance of the feasibility
//! predicates.

use hemispheres::arrangement::{
    braid_arrangement, config_from_arrangement, random_spanning_arrangement,
};
use hemispheres::complex::{alexander_dual, reduced_homology, SimplicialComplex};
use hemispheres::digraph::{dag_complex, decode_vector, disds_complex, encode_dag, root_system};
use hemispheres::exact::{rat, rat_int, zero_in_convex_hull, QMatrix, QVector, Rational};
use hemispheres::posets::{poset_of_orders, poset_of_preorders};
use hemispheres::sphere::{bstel_complex, ridge, stel_complex};
use hemispheres::tda::{persistence, vr_filtration};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Reduced Betti numbers of the order complex of the nontrivial-orders
/// poset match the acyclic-digraph complex itself, for n = 3 and 4.
#[test]
fn homology_transfers_from_orders_to_dag_complexes() {
    for n in [3usize, 4] {
        let (poset, _) = poset_of_orders(n).unwrap();
        let h_poset = reduced_homology(&poset.order_complex().unwrap());
        let h_complex = reduced_homology(&dag_complex(n).unwrap());
        for degree in 0..16 {
            assert_eq!(
                h_poset.betti(degree),
                h_complex.betti(degree),
                "degree {degree} mismatch at n = {n}"
            );
        }
        assert!(h_poset.is_torsion_free());
    }
}

#[test]
fn homology_transfers_from_preorders_to_disds_complex() {
    let (poset, _) = poset_of_preorders(3).unwrap();
    let h_poset = reduced_homology(&poset.order_complex().unwrap());
    let h_complex = reduced_homology(&disds_complex(3).unwrap());
    for degree in 0..16 {
        assert_eq!(h_poset.betti(degree), h_complex.betti(degree));
    }
}

/// Open-hemisphere nerves of ample configurations are homology spheres of
/// the essential dimension, on the braid configurations and three seeded
/// random antipodal ample ones.
#[test]
fn open_nerves_are_spheres() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut configs = vec![
        config_from_arrangement(&braid_arrangement(3)),
        config_from_arrangement(&braid_arrangement(4)),
    ];
    for hyperplanes in [4usize, 5, 6] {
        configs.push(config_from_arrangement(&random_spanning_arrangement(
            &mut rng,
            3,
            hyperplanes,
        )));
    }
    for c in configs {
        let e = c.essentialize();
        let stel = stel_complex(&e).unwrap();
        let h = reduced_homology(&stel);
        assert!(
            h.is_sphere_wedge(e.dim() - 1, 1),
            "expected a homology {}-sphere, got {}",
            e.dim() - 1,
            h.describe()
        );
        // The open nerve embeds in the closed one.
        let bstel = bstel_complex(&e).unwrap();
        for face in stel.faces() {
            assert!(bstel.contains(face));
        }
    }
}

/// Ridges grow with the face: checked over all pairs of comparable faces of
/// the closed nerve of the three-letter braid configuration.
#[test]
fn ridges_are_monotone_over_all_face_pairs() {
    let e = config_from_arrangement(&braid_arrangement(3)).essentialize();
    let bstel = bstel_complex(&e).unwrap();
    let faces: Vec<Vec<u32>> = bstel.faces().cloned().collect();
    let ridges: Vec<_> = faces
        .iter()
        .map(|f| {
            let idx: Vec<usize> = f.iter().map(|&v| v as usize).collect();
            ridge(&e, &idx).unwrap()
        })
        .collect();
    for (i, small) in faces.iter().enumerate() {
        for (j, large) in faces.iter().enumerate() {
            let contained = small.iter().all(|v| large.binary_search(v).is_ok());
            if contained {
                assert!(
                    ridges[j].contains(&ridges[i]),
                    "ridge of {small:?} not inside ridge of {large:?}"
                );
            }
        }
    }
}

/// Betti symmetry of the combinatorial dual: for random complexes on at
/// most six ground vertices, the dual's degree-j Betti number equals the
/// original's in degree m - 3 - j.
#[test]
fn alexander_duality_betti_symmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut tested = 0;
    while tested < 20 {
        let m = rng.gen_range(4..=6);
        let ground: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
        let mut facets = Vec::new();
        for _ in 0..rng.gen_range(1..=4) {
            let size = rng.gen_range(1..=m - 1);
            let mut perm: Vec<usize> = (0..m).collect();
            for i in (1..perm.len()).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            perm.truncate(size);
            facets.push(perm);
        }
        let k = SimplicialComplex::from_facets(ground.clone(), &facets).unwrap();
        let Ok(dual) = alexander_dual(&k, &ground) else {
            continue;
        };
        tested += 1;
        let h_k = reduced_homology(&k);
        let h_dual = reduced_homology(&dual);
        for j in 0..=m {
            let left = h_dual.betti(j);
            let right_degree = (m as i64) - 3 - (j as i64);
            let right = if right_degree < 0 {
                0
            } else {
                h_k.betti(right_degree as usize)
            };
            assert_eq!(left, right, "duality fails at degree {j} (m = {m})");
        }
    }
}

/// The membership test for the origin in a convex hull is invariant under
/// injective linear changes of coordinates.
#[test]
fn convex_hull_test_is_linearly_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut tested = 0;
    while tested < 50 {
        let d = rng.gen_range(2..=3);
        let k = rng.gen_range(2..=5);
        let vectors: Vec<QVector> = (0..k)
            .map(|_| {
                QVector::from_ints(
                    &(0..d).map(|_| rng.gen_range(-4..=4i64)).collect::<Vec<_>>(),
                )
            })
            .collect();
        if vectors.iter().any(QVector::is_zero) {
            continue;
        }
        // Random injective rational matrix into dimension d or d + 1.
        let rows = d + rng.gen_range(0..=1);
        let matrix_rows: Vec<QVector> = (0..rows)
            .map(|_| {
                QVector::from_ints(
                    &(0..d).map(|_| rng.gen_range(-3..=3i64)).collect::<Vec<_>>(),
                )
            })
            .collect();
        let matrix = QMatrix::from_rows(matrix_rows).unwrap();
        if matrix.rank() != d {
            continue; // not injective
        }
        tested += 1;
        let image: Vec<QVector> = vectors
            .iter()
            .map(|v| {
                QVector::new(
                    (0..matrix.nrows())
                        .map(|i| matrix.row(i).dot(v))
                        .collect(),
                )
            })
            .collect();
        assert_eq!(
            zero_in_convex_hull(&vectors),
            zero_in_convex_hull(&image),
            "hull membership changed under an injective linear map"
        );
    }
}

/// The open nerve stays a homology sphere after adding random
/// positive rescalings, which exercises ray invariance end to end.
#[test]
fn scaled_roots_still_identify() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let roots = root_system(3).essentialize();
    let stel = stel_complex(&roots).unwrap();
    let mut scaled = roots.clone();
    for i in 0..scaled.len() {
        let factor = rat(rng.gen_range(1..=7), rng.gen_range(1..=7));
        scaled = scaled.scale_point(i, &factor);
    }
    let stel_scaled = stel_complex(&scaled).unwrap();
    assert!(stel.face_sets_equal(&stel_scaled));
}

/// Two independent homology routes agree on every snapshot of a
/// filtration: bars alive at a value (two-element field, column reduction)
/// versus integral reduced homology of the snapshot complex (Smith normal
/// form). The spaces here are torsion-free, so the counts must match after
/// the reduced/unreduced shift in degree zero.
#[test]
fn persistence_matches_integral_homology_on_snapshots() {
    let cube: Vec<QVector> = (0..8)
        .map(|m| {
            QVector::from_ints(&[
                if m & 1 == 1 { 1 } else { -1 },
                if m & 2 == 2 { 1 } else { -1 },
                if m & 4 == 4 { 1 } else { -1 },
            ])
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let random_cloud: Vec<QVector> = (0..6)
        .map(|_| QVector::from_ints(&[rng.gen_range(0..=5), rng.gen_range(0..=5)]))
        .collect();
    for points in [cube, random_cloud] {
        let max_dim = points.len() - 1;
        let filtration = vr_filtration(&points, max_dim).unwrap();
        let diagram = persistence(&filtration);
        for value in filtration.critical_values() {
            let snapshot = filtration.complex_at(&value);
            let h = reduced_homology(&snapshot);
            assert!(h.is_torsion_free());
            for degree in 0..=max_dim {
                let from_bars = diagram.betti_at(degree, &value);
                let from_snf = h.betti(degree) + usize::from(degree == 0);
                assert_eq!(
                    from_bars, from_snf,
                    "degree {degree} at value {value}"
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Every decoded vector yields an acyclic graph whose encoding is the
    /// n-fold multiple of the vector.
    #[test]
    fn decode_encode_round_trip(raw in prop::collection::vec(-12i64..=12, 2..=5)) {
        let mut coords: Vec<Rational> = raw.iter().map(|&v| rat(v, 3)).collect();
        let tail: Rational = -coords.iter().cloned().sum::<Rational>();
        coords.push(tail);
        let n = coords.len();
        let x = QVector::new(coords);
        prop_assume!(!x.is_zero());
        let decoded = decode_vector(&x).unwrap();
        prop_assert!(decoded.graph().is_acyclic());
        let back = encode_dag(&decoded).unwrap();
        prop_assert_eq!(back, x.scale(&rat_int(n as i64)));
    }

    /// Filtration birth values never decrease from a face to a coface.
    #[test]
    fn vr_filtrations_are_monotone(raw in prop::collection::vec((0i64..=6, 0i64..=6), 3..=6)) {
        let points: Vec<QVector> = raw.iter().map(|&(x, y)| QVector::from_ints(&[x, y])).collect();
        let f = vr_filtration(&points, 3).unwrap();
        let lookup: std::collections::HashMap<&[u32], &Rational> = f
            .simplices()
            .iter()
            .map(|(s, v)| (s.as_slice(), v))
            .collect();
        for (simplex, birth) in f.simplices() {
            for skip in 0..simplex.len() {
                if simplex.len() == 1 {
                    continue;
                }
                let sub: Vec<u32> = simplex
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                prop_assert!(lookup[sub.as_slice()] <= birth);
            }
        }
    }

    /// Random integer matrices: the Smith rank equals the rational rank.
    #[test]
    fn smith_rank_matches_rational_rank(
        entries in prop::collection::vec(-6i64..=6, 9)
    ) {
        use hemispheres::exact::{smith_normal_form, IntMatrix};
        let rows: Vec<&[i64]> = entries.chunks(3).collect();
        let snf = smith_normal_form(&IntMatrix::from_int_rows(&rows));
        let qrows: Vec<QVector> = rows.iter().map(|r| QVector::from_ints(r)).collect();
        let rank = QMatrix::from_rows(qrows).unwrap().rank();
        prop_assert_eq!(snf.rank, rank);
    }
}
