//! The simplicial complexes of acyclic and non-strongly-connected digraphs:
//! face counts, facet structure, pseudomanifold classification, homology,
//! and the identification with the root-system nerves.
//!
//! Run with: cargo run --release --example dag_spaces

use hemispheres::complex::{classify_pseudomanifold, reduced_homology, PseudomanifoldReport};
use hemispheres::digraph::{
    dag_complex, disds_complex, disds_facets, verify_identifications, Digraph,
};

fn main() -> anyhow::Result<()> {
    let g = Digraph::new(4, [(1, 2), (2, 3), (1, 3), (3, 4)])?;
    println!(
        "sample digraph: acyclic {}, strongly connected {}",
        g.is_acyclic(),
        g.is_strongly_connected()
    );

    for n in 3..=5 {
        let k = dag_complex(n)?;
        let h = reduced_homology(&k);
        print!("acyclic complex n={n}: {} faces, homology {}", k.num_faces(), h.describe());
        if let PseudomanifoldReport::Pure {
            dim,
            facet_count,
            pseudomanifold,
            with_boundary,
            ..
        } = classify_pseudomanifold(&k)
        {
            println!(
                ", pure of dimension {dim} with {facet_count} facets{}",
                if pseudomanifold && with_boundary {
                    " (pseudomanifold with boundary)"
                } else {
                    ""
                }
            );
        } else {
            println!(", not pure");
        }
    }

    for n in 3..=4 {
        let k = disds_complex(n)?;
        let h = reduced_homology(&k);
        let sizes: Vec<usize> = disds_facets(n).iter().map(|f| f.len()).collect();
        println!(
            "non-strongly-connected complex n={n}: {} faces, homology {}, {} bipartition facets {:?}",
            k.num_faces(),
            h.describe(),
            sizes.len(),
            sizes
        );
    }

    // Both complexes are nerves of hemisphere coverings of the root system.
    let report = verify_identifications(4)?;
    println!(
        "identification with the root-system nerves at n=4: open {}, closed {}",
        report.stel_equal, report.bstel_equal
    );
    Ok(())
}
