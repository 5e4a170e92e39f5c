//! Weighted acyclic digraphs as rays: sum the weighted difference vectors
//! of the edges to get a point, read a graph back from coordinate gaps.
//!
//! Run with: cargo run --release --example spherical_dag_encoding

use hemispheres::digraph::{decode_vector, decode_vector_with, encode_dag, WeightedDag};
use hemispheres::exact::{format_rational, rat, rat_int, QVector};

fn main() -> anyhow::Result<()> {
    // Encode a weighted transitive triangle.
    let dag = WeightedDag::new(
        3,
        [
            ((1, 2), rat_int(1)),
            ((2, 3), rat_int(1)),
            ((1, 3), rat_int(1)),
        ],
    )?;
    let x = encode_dag(&dag)?;
    let coords: Vec<String> = x.iter().map(format_rational).collect();
    println!("transitive triangle encodes to ({})", coords.join(", "));

    // Different graphs can share a ray: the encoding is not injective.
    let path = WeightedDag::new(3, [((1, 2), rat_int(1)), ((2, 3), rat_int(1))])?;
    let shortcut = WeightedDag::new(3, [((1, 3), rat_int(1))])?;
    println!(
        "path and shortcut encode to the same point: {}",
        encode_dag(&path)? == encode_dag(&shortcut)?
    );

    // Decoding reads an edge for every increasing coordinate pair. With the
    // identity weighting, encode(decode(x)) = n * x exactly.
    let x = QVector::new(vec![rat(-3, 2), rat_int(0), rat(3, 2)]);
    let decoded = decode_vector(&x)?;
    for ((a, b), w) in decoded.weights() {
        println!("decoded edge ({a},{b}) with weight {}", format_rational(w));
    }
    let back = encode_dag(&decoded)?;
    println!(
        "encode(decode(x)) = {:?} = 3 * x: {}",
        back.iter().map(format_rational).collect::<Vec<_>>(),
        back == x.scale(&rat_int(3))
    );

    // Any monotone zero-at-zero reweighting may be plugged in.
    let squared = decode_vector_with(&x, |gap| gap * gap)?;
    for ((a, b), w) in squared.weights() {
        println!("squared-gap edge ({a},{b}) with weight {}", format_rational(w));
    }
    Ok(())
}
