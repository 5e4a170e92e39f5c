//! Build a spherical configuration, test its hemisphere predicates and
//! compute both covering nerves with their homology.
//!
//! Run with: cargo run --release --example hemisphere_nerves

use hemispheres::complex::reduced_homology;
use hemispheres::exact::QVector;
use hemispheres::sphere::{
    bstel_complex, in_closed_hemisphere, in_open_hemisphere, is_ample, is_antipodal, ridge,
    stel_complex, Configuration,
};

fn main() -> anyhow::Result<()> {
    // The six difference vectors e_j - e_i on three letters: a regular
    // hexagon after projecting to the sum-zero plane.
    let roots = hemispheres::digraph::root_system(3);
    println!(
        "{} points in ambient dimension {}; ample: {}, antipodal: {}",
        roots.len(),
        roots.dim(),
        is_ample(&roots),
        is_antipodal(&roots)
    );

    // Predicates require a spanning configuration.
    let e = roots.essentialize();
    println!("essential dimension: {}", e.dim());

    // A pair of roots fits in an open hemisphere, a directed triangle
    // does not (its barycentre is the origin), and an antipodal pair
    // still shares the equator.
    println!(
        "{{(1,2),(1,3)}} open hemisphere: {}",
        in_open_hemisphere(&e, &[0, 1])?
    );
    println!(
        "{{(1,2),(2,3),(3,1)}} open hemisphere: {}",
        in_open_hemisphere(&e, &[0, 3, 4])?
    );
    println!(
        "{{(1,2),(2,1)}} closed hemisphere: {}",
        in_closed_hemisphere(&e, &[0, 2])?
    );

    // Ridges measure how far a face is from fitting strictly: the largest
    // linear subspace inside the cone of the selected points.
    for index_set in [vec![0, 1], vec![0, 2], (0..6).collect::<Vec<_>>()] {
        let w = ridge(&e, &index_set)?;
        println!("ridge of {index_set:?} has dimension {}", w.dim());
    }

    let stel = stel_complex(&e)?;
    let bstel = bstel_complex(&e)?;
    println!(
        "open nerve: {} faces, homology {}",
        stel.num_faces(),
        reduced_homology(&stel).describe()
    );
    println!(
        "closed nerve: {} faces, homology {}",
        bstel.num_faces(),
        reduced_homology(&bstel).describe()
    );

    // A custom configuration from scratch: the coordinate cross.
    let cross = Configuration::with_default_labels(vec![
        QVector::from_ints(&[1, 0]),
        QVector::from_ints(&[-1, 0]),
        QVector::from_ints(&[0, 1]),
        QVector::from_ints(&[0, -1]),
    ])?;
    let h = reduced_homology(&bstel_complex(&cross)?);
    println!(
        "closed nerve of the coordinate cross: homology {} (a 2-sphere)",
        h.describe()
    );
    Ok(())
}
