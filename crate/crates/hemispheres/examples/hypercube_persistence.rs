//! Persistence of the hypercube vertex cloud at exact squared-distance
//! scales: high-degree homology appears although the cloud lives in a
//! low-dimensional space.
//!
//! Run with: cargo run --release --example hypercube_persistence

use hemispheres::complex::reduced_homology;
use hemispheres::exact::{format_rational, rat_int, QVector};
use hemispheres::tda::{persistence, vr_filtration};

fn main() -> anyhow::Result<()> {
    // The eight vertices of the cube {-1, 1}^3; squared distances are 4k
    // for vertices differing in k coordinates.
    let cube: Vec<QVector> = (0..8)
        .map(|m| {
            QVector::from_ints(&[
                if m & 1 == 1 { 1 } else { -1 },
                if m & 2 == 2 { 1 } else { -1 },
                if m & 4 == 4 { 1 } else { -1 },
            ])
        })
        .collect();
    let filtration = vr_filtration(&cube, 7)?;
    println!("{} simplices in the full filtration", filtration.len());

    let diagram = persistence(&filtration);
    for bar in diagram.bars() {
        if bar.degree > 0 || bar.death.is_none() {
            println!(
                "degree {} born {} dies {}",
                bar.degree,
                format_rational(&bar.birth),
                bar.death
                    .as_ref()
                    .map(format_rational)
                    .unwrap_or_else(|| "never".to_string())
            );
        }
    }

    // Snapshots double-check the diagram: at squared scale 8 the complex
    // is the boundary of the 4-dimensional cross-polytope, a 3-sphere.
    let snapshot = filtration.complex_at(&rat_int(8));
    println!(
        "snapshot at squared scale 8: {} faces, homology {}",
        snapshot.num_faces(),
        reduced_homology(&snapshot).describe()
    );

    // A flat square: one loop alive between side and diagonal scales.
    let square: Vec<QVector> = vec![
        QVector::from_ints(&[0, 0]),
        QVector::from_ints(&[1, 0]),
        QVector::from_ints(&[1, 1]),
        QVector::from_ints(&[0, 1]),
    ];
    let diagram = persistence(&vr_filtration(&square, 3)?);
    for bar in diagram.bars_of_degree(1) {
        println!(
            "square loop: born {} dies {}",
            format_rational(&bar.birth),
            bar.death.as_ref().map(format_rational).unwrap_or_default()
        );
    }
    Ok(())
}
