//! Reedy machinery: latching and matching objects, classification of
//! transformations, the closed latching formula, pushout products, and
//! the closure sweeps.
//!
//! Run with `cargo run --example reedy_model`.

use diagcat::base::{self, Backend, BaseObj, ModelClasses};
use diagcat::diagram::{from_initial_diagram, representable, tensor_diag, NatTrans};
use diagcat::fincat::ObjId;
use diagcat::fixtures;
use diagcat::reedy::{
    action_compat_check, generating_cofibrations, hom_form_check, latching_formula_check,
    latching_object, matching_object, pair_index_set, pushout_product_base,
    pushout_product_sweep, reedy_classify,
};

fn main() {
    let r = fixtures::walking_arrow_reedy();
    let classes = ModelClasses::standard(Backend::FinSet);

    // latching objects: colimits over the category of direct arrows in
    let h = representable(&r.base, ObjId(0), Backend::FinSet);
    let x = tensor_diag(&h, &h).unwrap();
    let lat = latching_object(&r, &x, ObjId(1)).unwrap();
    println!(
        "L_b(h_a ⊗ h_a) has {} element(s); latching map injective: {}",
        lat.obj.magnitude(),
        base::is_injective(&lat.map)
    );

    // the closed formula for the same latching object
    let pairs = pair_index_set(&r.base, ObjId(0), ObjId(0), ObjId(1));
    println!("joint-factorization index set: {pairs:?}");
    let verdict =
        latching_formula_check(&r, ObjId(0), ObjId(0), ObjId(1), Backend::FinSet, &classes)
            .unwrap();
    println!("closed formula agrees with the colimit: {}", verdict.holds());

    // matching objects are the dual limits (FinSet limits multiply, so
    // keep the diagram small)
    let delta = fixtures::delta_op_le2();
    let k = diagcat::diagram::constant_diagram(&delta.base, &BaseObj::set(2));
    let m = matching_object(&delta, &k, ObjId(2)).unwrap();
    println!(
        "M_[2] of a constant 2-element diagram: {} element(s), map injective: {}",
        m.obj.magnitude(),
        base::is_injective(&m.map)
    );

    // classification: initial → h_p ⊗ h_q is a Reedy cofibration
    let from_empty = from_initial_diagram(&x);
    let v = reedy_classify(&r, &from_empty, &classes).unwrap();
    println!(
        "∅ → h_a ⊗ h_a: cofibration {}, weak equivalence {}, fibration {}",
        v.is_reedy_cof, v.is_reedy_we, v.is_reedy_fib
    );

    // pushout products in the base
    let pt = base::unit(Backend::FinSet);
    let f = base::from_initial(&pt);
    let pp = pushout_product_base(&f, &f).unwrap();
    println!("(∅→1) ◇ (∅→1) goes {} → {}", pp.dom(), pp.cod());

    // generating cofibrations and the closure sweep, with the
    // direct-part restriction agreement built in
    let gens = generating_cofibrations(&r, &[f.clone()]).unwrap();
    let sweep = pushout_product_sweep(&r, &classes, &gens, &[f]).unwrap();
    println!(
        "walking-arrow sweep: {} instances, {} failures",
        sweep.instances.len(),
        sweep.failures().len()
    );

    // the fibration side over exact vector spaces
    let vclasses = ModelClasses::standard(Backend::FinVect);
    let one = BaseObj::vect(1);
    let shape = fixtures::walking_arrow();
    let y = diagcat::diagram::constant_diagram(&shape, &one);
    let p = NatTrans::identity(&y);
    let inj = base::from_initial(&one);
    let ac = action_compat_check(&r, &p, &inj, &vclasses).unwrap();
    println!(
        "pullback-corner map for an identity fibration: fibration {}, trivial {}",
        ac.is_reedy_fib, ac.is_trivial_fib
    );
    let hf = hom_form_check(&r, &inj, ObjId(0), &p, &vclasses).unwrap();
    println!("hom-form verdict agrees: {}", hf.holds());
}
