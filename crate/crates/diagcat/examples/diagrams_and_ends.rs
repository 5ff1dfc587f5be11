//! Diagrams over a finite index category: representables, the
//! objectwise monoidal structure, ends and coends, mapping objects, and
//! the enumeration oracle that cross-checks them.
//!
//! Run with `cargo run --example diagrams_and_ends`.

use diagcat::base::{self, Backend, BaseMor, BaseObj, SetMor};
use diagcat::diagram::{
    coend, end, mapping_object, nat_trans_enumerate, representable, tensor_diag, tensor_obj,
    Bifunctor, Diagram,
};
use diagcat::fincat::ObjId;
use diagcat::fixtures;

fn main() {
    let shape = fixtures::walking_arrow();

    // the identity-arrow diagram on a 2-element set
    let two = BaseObj::set(2);
    let x = Diagram::new(
        shape.clone(),
        vec![two, two],
        vec![base::identity(&two), base::identity(&two), base::identity(&two)],
    )
    .unwrap();

    // representables: h_a has one point at each level, h_b is empty low
    let ha = representable(&shape, ObjId(0), Backend::FinSet);
    let hb = representable(&shape, ObjId(1), Backend::FinSet);
    println!(
        "h_a sizes ({}, {}), h_b sizes ({}, {})",
        ha.obj(ObjId(0)).magnitude(),
        ha.obj(ObjId(1)).magnitude(),
        hb.obj(ObjId(0)).magnitude(),
        hb.obj(ObjId(1)).magnitude()
    );

    // module action and objectwise product
    let free = tensor_obj(&ha, &BaseObj::set(3)).unwrap();
    println!("h_a ⊗ 3 sizes ({}, {})", free.obj(ObjId(0)).magnitude(), free.obj(ObjId(1)).magnitude());
    let prod = tensor_diag(&x, &x).unwrap();
    println!("X ⊗ X sizes ({}, {})", prod.obj(ObjId(0)).magnitude(), prod.obj(ObjId(1)).magnitude());

    // the end of the exponential bifunctor counts natural families
    let t = Bifunctor::exponential(&x, &x).unwrap();
    let e = end(&t).unwrap();
    println!("end of Y^X over the walking arrow: {} elements", e.obj.magnitude());
    let c = coend(&t).unwrap();
    println!("coend of the same bifunctor: {} elements", c.obj.magnitude());

    // the mapping object agrees with the brute-force enumeration,
    // element by element
    let mapping = mapping_object(&x, &x).unwrap();
    let listed = nat_trans_enumerate(&x, &x).unwrap();
    println!(
        "Map(X, X) has {} elements; enumeration finds {}",
        mapping.magnitude(),
        listed.len()
    );
    for (k, n) in listed.iter().enumerate() {
        assert_eq!(mapping.index_of_nat_trans(n), Some(k));
    }

    // mapping objects stay feasible where the naive product formula
    // would need |K|^100-sized carriers
    let delta = fixtures::delta_op_le2();
    let h1 = representable(&delta.base, ObjId(1), Backend::FinSet);
    let big = tensor_diag(&h1, &h1).unwrap();
    let k = representable(&delta.base, ObjId(0), Backend::FinSet);
    let m = mapping_object(&big, &k).unwrap();
    println!(
        "Map(h₁ ⊗ h₁, h₀) over the truncated simplex shape: {} elements",
        m.magnitude()
    );

    // a non-natural family is rejected at construction
    let swapped = Diagram::new(
        shape.clone(),
        vec![two, two],
        vec![
            base::identity(&two),
            base::identity(&two),
            BaseMor::FinSet(SetMor { dom: 2, cod: 2, table: vec![1, 0] }),
        ],
    )
    .unwrap();
    let bad = diagcat::diagram::NatTrans::new(
        x.clone(),
        swapped,
        vec![base::identity(&two), base::identity(&two)],
    );
    println!("non-natural candidate rejected: {}", bad.is_err());
}
