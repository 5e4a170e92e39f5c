//! The dual polytope view of the acyclic-digraph space: minimal non-faces
//! are directed cycles, their complements are facets of a dual polytope,
//! and the unions of cycles form its face lattice.
//!
//! Run with: cargo run --release --example gale_duality

use hemispheres::complex::{alexander_dual, reduced_homology};
use hemispheres::digraph::{dag_complex, root_system};
use hemispheres::gale::{
    cycle_lattice, cycle_polytope_facets, gale_duality_check, minimal_nonfaces, nerve_complex,
};

fn main() -> anyhow::Result<()> {
    // Minimal non-faces of the acyclic complex are the directed cycles.
    for n in [3usize, 4] {
        let nonfaces = minimal_nonfaces(&dag_complex(n)?)?;
        println!("n={n}: {} minimal non-faces (= simple directed cycles)", nonfaces.len());
    }

    // Their complements are the facets of a dual polytope; for three
    // letters this is the triangular prism.
    let prism = cycle_polytope_facets(3)?;
    println!(
        "three-letter dual polytope: {} vertices, facet sizes {:?}",
        prism.vertex_count(),
        prism.facet_sizes()
    );
    let nerve = nerve_complex(&prism);
    println!("its nerve complex has homology {}", reduced_homology(&nerve).describe());

    // The Alexander dual of the nerve complex is the acyclic complex again.
    let dual = alexander_dual(&nerve, nerve.labels())?;
    println!(
        "dual of the nerve equals the acyclic complex: {}",
        dual.face_sets_equal(&dag_complex(3)?)
    );

    // The packaged check validates double-ampleness first.
    let report = gale_duality_check(&root_system(4))?;
    println!(
        "four letters: {} minimal non-faces, duality holds: {}",
        report.minimal_nonface_count, report.dual_equals_stel
    );

    // Unions of directed cycles form the face lattice of the dual polytope.
    let j3 = cycle_lattice(3)?;
    let proper = j3.proper_elements();
    let h = reduced_homology(&j3.proper_poset().order_complex()?);
    println!(
        "cycle lattice on three letters: {} proper elements, order-complex homology {}",
        proper.len(),
        h.describe()
    );
    Ok(())
}
