//! The check registry from library code: scheduling checks, reading
//! deterministic JSON reports, file-format round trips, and replaying
//! counterexamples.
//!
//! Run with `cargo run --example verification_reports`.

use diagcat::base::{Backend, ClassPredicate, ModelClasses};
use diagcat::checks::{replay_counterexample, run_checks, CheckId, CheckSpec};
use diagcat::fixtures;
use diagcat::io::{parse_entity, serialize_entity, Entity};

fn main() {
    // a small schedule: two checks, fixed seed and budget
    let specs = vec![
        CheckSpec {
            id: CheckId::L1,
            fixture: "walking-arrow".into(),
            backend: Backend::FinSet,
            seed: 7,
            budget: 2,
            classes: None,
        },
        CheckSpec {
            id: CheckId::L5,
            fixture: "commutative-square".into(),
            backend: Backend::FinSet,
            seed: 7,
            budget: 2,
            classes: None,
        },
    ];
    let report = run_checks(&specs, 7, 2);
    println!("{}", report.to_text());

    // reports are byte-identical across runs with the same seed
    let again = run_checks(&specs, 7, 2);
    println!("byte-identical reruns: {}", report.to_json() == again.to_json());

    // the file format round-trips exactly
    let entry = fixtures::by_name("delta-op-le2").unwrap();
    let text = serialize_entity(&Entity::Reedy(entry.reedy.clone().unwrap()));
    let reparsed = parse_entity(&text).unwrap();
    println!(
        "fixture file round-trips byte-for-byte: {}",
        serialize_entity(&reparsed) == text
    );

    // corrupt model classes produce a failing check whose
    // counterexample replays from its own serialized inputs
    let corrupt = CheckSpec {
        id: CheckId::P1,
        fixture: "walking-arrow".into(),
        backend: Backend::FinVect,
        seed: 7,
        budget: 2,
        classes: Some(ModelClasses {
            cof: ClassPredicate::Injective,
            we: ClassPredicate::Injective,
            fib: ClassPredicate::Surjective,
        }),
    };
    let failing = run_checks(&[corrupt], 7, 2);
    println!("corrupt classes make P1 fail: {:?}", failing.overall);
    if let Some(ce) = failing.results[0].failures.first() {
        let replayed = replay_counterexample(ce).unwrap();
        println!("replaying the counterexample reproduces: {replayed:?}");
    }
}
