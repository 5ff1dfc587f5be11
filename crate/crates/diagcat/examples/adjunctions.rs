//! The adjunction layer: free/evaluation, coend reduction, restriction
//! and its right Kan extension, the diagonal adjoint, the internal hom,
//! and the general pointwise right-adjoint formula.
//!
//! Run with `cargo run --example adjunctions`.

use diagcat::base::{self, Backend, BaseObj};
use diagcat::diagram::{representable, Diagram};
use diagcat::fincat::{CatFunctor, ObjId};
use diagcat::fixtures;
use diagcat::kan::{
    audit_module_adjunction, check_free_eval_adjunction, check_restriction_adjunction,
    check_tensor_hom_adjunction, diag_right_adjoint, internal_hom, right_adjoint_general,
    right_kan, yoneda_reduction, representable_evaluation, RestrictionFunctor, TensorWithFunctor,
};
use std::sync::Arc;

fn main() {
    let shape = fixtures::walking_arrow();
    let two = BaseObj::set(2);
    let x = Diagram::new(
        shape.clone(),
        vec![two, two],
        vec![base::identity(&two), base::identity(&two), base::identity(&two)],
    )
    .unwrap();

    // free/evaluation: hom-sets on both sides biject, two-sided
    let witness = check_free_eval_adjunction(&shape, ObjId(0), &two, &x).unwrap();
    println!(
        "free/evaluation adjunction: {} (both sides {})",
        witness.holds(),
        witness.probes[0].left_count
    );

    // evaluation of a representable mapping object
    let (_, _, iso) = representable_evaluation(&x, ObjId(0)).unwrap();
    println!("Map(h_a, X) → X_a is an isomorphism: {iso}");

    // the coend reduction rebuilds X and certifies the evaluation map
    let reduction = yoneda_reduction(&x).unwrap();
    println!("coend reduction is a natural isomorphism: {}", reduction.is_natural_iso());

    // restriction along the direct-part inclusion and its right Kan
    // extension, adjoint exhaustively
    let delta = fixtures::delta_op_le2();
    let (direct, inclusion) = delta.direct_part().unwrap();
    let y = diagcat::diagram::constant_diagram(&direct, &BaseObj::set(2));
    let w = representable(&delta.base, ObjId(0), Backend::FinSet);
    let adj = check_restriction_adjunction(&inclusion, &w, &y).unwrap();
    println!(
        "restriction ⊣ right Kan extension on the simplex fixture: {} ({} maps each side)",
        adj.holds(),
        adj.probes[0].left_count
    );
    let psi = right_kan(&inclusion, &y).unwrap();
    println!(
        "Ψ(Y) sizes over the full shape: {:?}",
        delta
            .base
            .objects()
            .map(|i| psi.diagram.obj(i).magnitude())
            .collect::<Vec<_>>()
    );

    // internal hom and the tensor/hom adjunction
    let hom = internal_hom(&x, &x).unwrap();
    println!(
        "Hom(X, X) sizes ({}, {})",
        hom.diagram.obj(ObjId(0)).magnitude(),
        hom.diagram.obj(ObjId(1)).magnitude()
    );
    let th = check_tensor_hom_adjunction(&x, &x, &x).unwrap();
    println!("tensor ⊣ hom: {}", th.holds());

    // the diagonal adjoint over the product shape
    let square = Arc::new(shape.product(&shape).unwrap());
    let q = diag_right_adjoint(&x, &square).unwrap();
    println!(
        "Q(X) at (a, b): {} elements",
        q.diagram.obj(diagcat::fincat::pair_obj(2, ObjId(0), ObjId(1))).magnitude()
    );

    // the general pointwise formula reproduces the dedicated functors
    // and its audit attributes failures to broken assumptions
    let f = TensorWithFunctor { y0: x.clone() };
    let generic = right_adjoint_general(&f, &x).unwrap();
    let dedicated = internal_hom(&x, &x).unwrap();
    println!(
        "general right adjoint equals the internal hom: {}",
        generic.diagram == dedicated.diagram
    );
    let audit = audit_module_adjunction(&f, &[(x.clone(), x.clone())]).unwrap();
    println!("module-functor audit holds: {}", audit.holds());
    let r = RestrictionFunctor { phi: CatFunctor::identity(shape.clone()) };
    let audit2 = audit_module_adjunction(&r, &[(x.clone(), x.clone())]).unwrap();
    println!("restriction audit holds: {}", audit2.holds());
}
