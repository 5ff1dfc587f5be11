//! Finite categories as explicit tables: construction, exhaustive
//! validation, opposites, products, and Reedy structures.
//!
//! Run with `cargo run --example category_basics`.

use diagcat::fincat::{FinCat, MorClass, MorData, MorId, ObjId, ReedyData};
use diagcat::fixtures;

fn main() {
    // the walking arrow a → b, built by hand
    let arrow = FinCat::new(
        vec!["a".into(), "b".into()],
        vec![
            MorData { dom: ObjId(0), cod: ObjId(0), label: "id_a".into() },
            MorData { dom: ObjId(1), cod: ObjId(1), label: "id_b".into() },
            MorData { dom: ObjId(0), cod: ObjId(1), label: "f".into() },
        ],
        vec![MorId(0), MorId(1)],
        vec![
            (MorId(0), MorId(0), MorId(0)),
            (MorId(1), MorId(1), MorId(1)),
            (MorId(2), MorId(0), MorId(2)),
            (MorId(1), MorId(2), MorId(2)),
        ],
    )
    .expect("structurally well-formed");
    println!("walking arrow validates: {}", arrow.validate().is_valid());

    // a broken composition table is reported instance by instance
    let broken = FinCat::new(
        vec!["x".into()],
        vec![
            MorData { dom: ObjId(0), cod: ObjId(0), label: "id".into() },
            MorData { dom: ObjId(0), cod: ObjId(0), label: "e".into() },
        ],
        vec![MorId(0)],
        vec![
            (MorId(0), MorId(0), MorId(0)),
            (MorId(1), MorId(0), MorId(0)), // e ∘ id should be e
            (MorId(0), MorId(1), MorId(1)),
            (MorId(1), MorId(1), MorId(1)),
        ],
    )
    .unwrap();
    println!("\nbroken unit law report:\n{}", broken.validate());

    // opposites and products
    let op = arrow.opposite();
    println!("opposite has hom(b, a) of size {}", op.hom(ObjId(1), ObjId(0)).len());
    let square = arrow.product(&arrow).unwrap();
    println!(
        "product category: {} objects, {} morphisms",
        square.object_count(),
        square.morphism_count()
    );

    // a Reedy structure: degrees plus direct/inverse classes
    let delta = fixtures::delta_op_le2();
    println!(
        "\ntruncated simplex fixture: {} morphisms, Reedy-valid: {}",
        delta.base.morphism_count(),
        delta.validate().is_valid()
    );
    for m in delta.base.morphisms().take(6) {
        println!(
            "  {} : {} -> {}  class {:?}  factorizations {}",
            delta.base.mor(m).label,
            delta.base.object_label(delta.base.dom(m)),
            delta.base.object_label(delta.base.cod(m)),
            delta.class_of(m),
            delta.factorizations(m).len()
        );
    }

    // classification mistakes are caught exhaustively
    let bad = ReedyData::new(
        fixtures::walking_arrow(),
        vec![0, 1],
        vec![(MorId(2), MorClass::Inverse)],
    )
    .unwrap();
    println!("\nmisclassified arrow report:\n{}", bad.validate());

    let (direct, _) = delta.direct_part().unwrap();
    let (inverse, _) = delta.inverse_part().unwrap();
    println!(
        "direct part: {} morphisms, inverse part: {} morphisms",
        direct.morphism_count(),
        inverse.morphism_count()
    );
}
