//! Intersection lattices of hyperplane arrangements, Möbius invariants,
//! and the wedge description of the proper dual part.
//!
//! Run with: cargo run --release --example arrangement_mobius

use hemispheres::arrangement::{
    braid_arrangement, config_from_arrangement, intersection_lattice, mobius_invariant,
    proper_dual_poset, Arrangement,
};
use hemispheres::complex::reduced_homology;
use hemispheres::exact::QVector;
use hemispheres::sphere::bstel_complex;

fn main() -> anyhow::Result<()> {
    // Möbius invariants of the essential braid arrangements: factorials.
    for n in 3..=6 {
        let lattice = intersection_lattice(&braid_arrangement(n))?;
        let mu = mobius_invariant(&lattice);
        println!(
            "braid arrangement on {n} letters: {} flats, Moebius invariant {} (signed {})",
            lattice.len(),
            mu.absolute,
            mu.signed
        );
    }

    // The proper dual part of the lattice is a wedge of (d-2)-spheres with
    // Moebius-many summands; check it for three generic lines in the plane.
    let generic = Arrangement::new(
        2,
        vec![
            QVector::from_ints(&[1, 0]),
            QVector::from_ints(&[0, 1]),
            QVector::from_ints(&[1, 1]),
        ],
    )?;
    let lattice = intersection_lattice(&generic)?;
    let mu = mobius_invariant(&lattice).absolute;
    let dual = proper_dual_poset(&lattice);
    let h = reduced_homology(&dual.order_complex()?);
    println!("three generic lines: mu = {mu}, proper dual homology {}", h.describe());

    // End to end: the closed-hemisphere nerve of the induced antipodal
    // configuration is a wedge of (2d-2)-spheres, again Moebius many.
    let braid4 = braid_arrangement(4);
    let lattice = intersection_lattice(&braid4)?;
    let mu = mobius_invariant(&lattice).absolute;
    let config = config_from_arrangement(&braid4).essentialize();
    let h = reduced_homology(&bstel_complex(&config)?);
    println!(
        "braid on 4 letters: closed nerve homology {} (expected b~{}={})",
        h.describe(),
        2 * braid4.dim() - 2,
        mu
    );
    Ok(())
}
