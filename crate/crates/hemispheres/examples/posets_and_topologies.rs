//! Orders, preorders and finite topologies: enumeration, the adjunctions
//! with the digraph complexes, the Alexandrov dictionary, and the homology
//! of the associated order complexes.
//!
//! Run with: cargo run --release --example posets_and_topologies

use hemispheres::complex::reduced_homology;
use hemispheres::posets::{
    dag_order_connection, enumerate_orders, enumerate_preorders, enumerate_topologies,
    galois_check, is_t0, poset_of_orders, poset_of_preorders, poset_of_t0_topologies,
    poset_of_topologies, preorder_from_topology, topology_from_preorder, Relation,
};

fn main() -> anyhow::Result<()> {
    for n in 1..=4 {
        println!(
            "n={n}: {} orders, {} preorders, {} topologies",
            enumerate_orders(n)?.len(),
            enumerate_preorders(n)?.len(),
            enumerate_topologies(n)?.len()
        );
    }

    // Order-complex homology of the four families at n = 3.
    let (orders, _) = poset_of_orders(3)?;
    let (preorders, _) = poset_of_preorders(3)?;
    let (topologies, _) = poset_of_topologies(3)?;
    let (t0, _) = poset_of_t0_topologies(3)?;
    println!(
        "orders minus trivial: {}",
        reduced_homology(&orders.order_complex()?).describe()
    );
    println!(
        "proper preorders: {}",
        reduced_homology(&preorders.order_complex()?).describe()
    );
    println!(
        "proper topologies: {}",
        reduced_homology(&topologies.order_complex()?).describe()
    );
    println!(
        "T0 topologies minus discrete: {}",
        reduced_homology(&t0.order_complex()?).describe()
    );

    // The Alexandrov dictionary: upper ideals one way, least open
    // neighbourhoods the other; mutually inverse, order-reversing.
    let chain = Relation::new(3, [(1, 1), (2, 2), (3, 3), (1, 2), (2, 3), (1, 3)]);
    let topology = topology_from_preorder(&chain)?;
    println!(
        "a 3-chain order yields a topology with {} opens; T0: {}; round-trips: {}",
        topology.num_opens(),
        is_t0(&topology),
        preorder_from_topology(&topology) == chain
    );

    // The adjunction between orders and acyclic digraph faces.
    let conn = dag_order_connection(3)?;
    let check = galois_check(&conn.orders, &conn.faces, &conn.to_face, &conn.to_order);
    println!(
        "orders <-> acyclic faces: adjoint pair {}, closure of strict part is the identity: {}",
        check.holds, conn.closure_of_strict_is_identity
    );
    Ok(())
}
