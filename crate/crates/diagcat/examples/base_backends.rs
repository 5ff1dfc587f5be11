//! The two monoidal base backends: finite sets and exact rational
//! vector spaces. Tensor, exponentials, currying, and the finite
//! (co)limit engine.
//!
//! Run with `cargo run --example base_backends`.

use diagcat::base::{
    self, coequalizer, coproduct, equalizer, hom_enumerate, product, pushout, Backend, BaseMor,
    BaseObj, ModelClasses, SetMor,
};
use diagcat::ratmat::RatMat;

fn main() {
    // FinSet: tensor is cartesian product, exponential is the function set
    let two = BaseObj::set(2);
    let three = BaseObj::set(3);
    println!("|2 ⊗ 3| = {}", base::tensor(&two, &three).unwrap().magnitude());
    println!("|3^2|   = {}", base::exponential(&two, &three).unwrap().magnitude());

    // currying is bit-exact under the fixed encodings
    let first = BaseMor::FinSet(SetMor { dom: 4, cod: 2, table: vec![0, 0, 1, 1] });
    let curried = base::curry(&first, &two, &two).unwrap();
    println!("curry(projection) table: {:?}", curried.as_set().table);
    assert_eq!(base::uncurry(&curried, &two, &two).unwrap(), first);

    // FinSet colimits go through union-find quotients
    let f = BaseMor::FinSet(SetMor { dom: 2, cod: 3, table: vec![0, 1] });
    let g = BaseMor::FinSet(SetMor { dom: 2, cod: 3, table: vec![1, 2] });
    let q = coequalizer(&f, &g).unwrap();
    println!("coequalizer of a chain of identifications: {} class(es)", q.obj.magnitude());

    let pt = base::unit(Backend::FinSet);
    let po = pushout(&base::from_initial(&pt), &base::from_initial(&pt)).unwrap();
    println!("pushout of two points over ∅: {} elements", po.obj.magnitude());

    // FinVect: exact rational kernels and cokernels
    let m = BaseMor::FinVect(RatMat::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6]]));
    let e = equalizer(&m, &BaseMor::FinVect(RatMat::zeros(2, 3))).unwrap();
    println!("kernel of a rank-1 matrix on Q³ has dimension {}", e.obj.magnitude());

    let a_to_b = BaseMor::FinVect(RatMat::from_i64_rows(&[&[1], &[0]]));
    let po_v = pushout(&a_to_b, &a_to_b).unwrap();
    println!("pushout of Q ↪ Q² with itself: dimension {}", po_v.obj.magnitude());

    // universal properties come with mediators
    let prod = product(&[two, three], Backend::FinSet).unwrap();
    println!("product carrier: {}", prod.apex);
    let sum = coproduct(&[two, three], Backend::FinSet).unwrap();
    println!("coproduct carrier: {}", sum.apex);

    // hom-set enumeration is the FinSet oracle substrate
    println!("|hom(2, 3)| = {}", hom_enumerate(&two, &three).unwrap().len());

    // declared model classes
    let classes = ModelClasses::standard(Backend::FinVect);
    let wide = BaseMor::FinVect(RatMat::from_i64_rows(&[&[1, 0, 2], &[0, 1, 3]]));
    println!(
        "a full-row-rank 2×3 matrix: cofibration {}, fibration {}",
        classes.is_cof(&wide),
        classes.is_fib(&wide)
    );
}
