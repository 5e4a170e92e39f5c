//! The comparison map from the closed-hemisphere nerve to the ordered sum
//! of the open nerve and the proper dual lattice: fibers, halfspace nerves
//! and the join consequence for homology.
//!
//! Run with: cargo run --release --example quillen_fibers

use hemispheres::arrangement::{
    braid_arrangement, config_from_arrangement, intersection_lattice, proper_dual_poset,
    quillen_map_check,
};
use hemispheres::complex::reduced_homology;
use hemispheres::sphere::{
    bstel_complex, dual_lattice_flats, halfspace_nerve, quillen_fiber, stel_complex,
};

fn main() -> anyhow::Result<()> {
    let braid = braid_arrangement(3);
    let config = config_from_arrangement(&braid).essentialize();

    // Individual fibers over the proper dual flats, and their independent
    // description as nerves of shifted halfspace families.
    for flat in dual_lattice_flats(&config)? {
        let fiber = quillen_fiber(&config, &flat)?;
        let nerve = halfspace_nerve(&config, &flat)?;
        let h = reduced_homology(&fiber);
        println!(
            "flat of dimension {}: fiber has {} faces, homology {}, matches halfspace nerve: {}",
            flat.dim(),
            fiber.num_faces(),
            h.describe(),
            fiber.face_sets_equal(&nerve)
        );
    }

    // The full diagnostic bundles well-definedness, monotonicity and all
    // fiber checks; here for the four-letter braid configuration.
    let report = quillen_map_check(&config_from_arrangement(&braid_arrangement(4)))?;
    println!(
        "four-letter braid: {} faces checked, all pass: {}",
        report.faces_checked,
        report.all_pass()
    );

    // Why the fibers matter: the closed nerve has the homology of the
    // ordered sum of the open nerve and the proper dual lattice, which
    // computes as a join.
    let stel = stel_complex(&config)?;
    let bstel = bstel_complex(&config)?;
    let lattice = intersection_lattice(&braid)?;
    let sum = stel.face_poset().ordered_sum(&proper_dual_poset(&lattice));
    println!(
        "closed nerve homology {} = ordered-sum homology {}",
        reduced_homology(&bstel).describe(),
        reduced_homology(&sum.order_complex()?).describe()
    );
    Ok(())
}
