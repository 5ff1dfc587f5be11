//! The check registry and batch runner.
//!
//! Each check id drives one family of statements through its dedicated
//! operations, exhaustively on FinSet hom-sets and through canonical
//! isomorphisms in FinVect, and reports per-instance verdicts. Every
//! FinSet mapping object computed here is cross-checked element-by-
//! element against the independent enumeration oracle.

use crate::base::{self, BaseMor, BaseObj, Backend, ModelClasses, SetMor};
use crate::diagram::{
    constant_diagram, end, mapping_object, nat_trans_enumerate, pushout_diagrams, representable,
    tensor_diag, tensor_obj, tensor_obj_mor, Bifunctor, Diagram, DiagramError,
    MappingObject, NatTrans,
};
use crate::fincat::{CatFunctor, FinCat, ObjId, ReedyData};
use crate::fixtures::{self, FixtureEntry};
use crate::gen::{self, Budget};
use crate::io;
use crate::kan::{
    self, check_diagonal_adjunction, check_free_eval_adjunction, check_restriction_adjunction,
    check_tensor_hom_adjunction, diag_right_adjoint, identity_position, internal_hom,
    right_adjoint_general, right_kan, yoneda_reduction, IdentityFunctor,
    RestrictionFunctor, TensorWithFunctor,
};
use crate::ratmat::RatMat;
use crate::reedy::{
    self, action_compat_check, generating_cofibrations, hom_form_check, latching_formula_check,
    pushout_product_sweep, reedy_classify,
};
use crate::report::{CheckResult, Counterexample, Report, Status, CHECK_IDS};
use crate::rng::SplitMix64;
use serde_json::json;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckId {
    L1,
    L2,
    L3,
    L4,
    T1,
    C1,
    C2,
    C3,
    Example,
    P1,
    R1,
    L5,
    T2,
}

impl CheckId {
    pub fn all() -> Vec<CheckId> {
        CHECK_IDS.iter().map(|s| s.parse().unwrap()).collect()
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CheckId::L1 => "L1",
            CheckId::L2 => "L2",
            CheckId::L3 => "L3",
            CheckId::L4 => "L4",
            CheckId::T1 => "T1",
            CheckId::C1 => "C1",
            CheckId::C2 => "C2",
            CheckId::C3 => "C3",
            CheckId::Example => "EXAMPLE",
            CheckId::P1 => "P1",
            CheckId::R1 => "R1",
            CheckId::L5 => "L5",
            CheckId::T2 => "T2",
        };
        write!(f, "{s}")
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "L1" => Ok(CheckId::L1),
            "L2" => Ok(CheckId::L2),
            "L3" => Ok(CheckId::L3),
            "L4" => Ok(CheckId::L4),
            "T1" => Ok(CheckId::T1),
            "C1" => Ok(CheckId::C1),
            "C2" => Ok(CheckId::C2),
            "C3" => Ok(CheckId::C3),
            "EXAMPLE" => Ok(CheckId::Example),
            "P1" => Ok(CheckId::P1),
            "R1" => Ok(CheckId::R1),
            "L5" => Ok(CheckId::L5),
            "T2" => Ok(CheckId::T2),
            other => Err(format!("unknown check id {other:?}")),
        }
    }
}

/// One scheduled check: id, fixture, backend, and reproducibility
/// parameters.
#[derive(Debug, Clone)]
pub struct CheckSpec {
    pub id: CheckId,
    pub fixture: String,
    pub backend: Backend,
    pub seed: u64,
    pub budget: usize,
    pub classes: Option<ModelClasses>,
}

/// The default run-all schedule: every check over its default fixtures
/// and backends.
pub fn default_specs(seed: u64, budget: usize) -> Vec<CheckSpec> {
    let mut specs = Vec::new();
    let mut push = |id: CheckId, fixture: &str, backend: Backend| {
        specs.push(CheckSpec {
            id,
            fixture: fixture.to_string(),
            backend,
            seed,
            budget,
            classes: None,
        });
    };
    use Backend::{FinSet, FinVect};
    push(CheckId::L1, "walking-arrow", FinSet);
    push(CheckId::L1, "commutative-square", FinSet);
    push(CheckId::L1, "walking-arrow", FinVect);
    for name in fixtures::FIXTURE_NAMES {
        push(CheckId::L2, name, FinSet);
        push(CheckId::L2, name, FinVect);
    }
    for name in ["walking-arrow", "commutative-square", "pushout-corner", "discrete-3"] {
        push(CheckId::L3, name, FinSet);
    }
    push(CheckId::L3, "walking-arrow", FinVect);
    for name in fixtures::FIXTURE_NAMES {
        push(CheckId::L4, name, FinSet);
    }
    push(CheckId::L4, "walking-arrow", FinVect);
    push(CheckId::L4, "commutative-square", FinVect);
    push(CheckId::T1, "walking-arrow", FinSet);
    push(CheckId::C1, "walking-arrow", FinSet);
    push(CheckId::C1, "delta-op-le2", FinSet);
    push(CheckId::C1, "pushout-corner", FinSet);
    push(CheckId::C2, "walking-arrow", FinSet);
    push(CheckId::C3, "walking-arrow", FinSet);
    push(CheckId::Example, "delta-op-le2", FinSet);
    for name in [
        "walking-arrow",
        "commutative-square",
        "pushout-corner",
        "discrete-3",
        "delta-op-le2",
    ] {
        push(CheckId::L5, name, FinSet);
    }
    push(CheckId::L5, "walking-arrow", FinVect);
    push(CheckId::L5, "commutative-square", FinVect);
    for name in ["walking-arrow", "commutative-square", "delta-op-le2"] {
        push(CheckId::P1, name, FinVect);
    }
    push(CheckId::R1, "walking-arrow", FinVect);
    push(CheckId::R1, "commutative-square", FinVect);
    push(CheckId::T2, "walking-arrow", FinSet);
    push(CheckId::T2, "delta-op-le2", FinSet);
    push(CheckId::T2, "delta-op-le2", FinVect);
    specs
}

/// Run a batch of checks and assemble the deterministic report.
pub fn run_checks(specs: &[CheckSpec], seed: u64, budget: usize) -> Report {
    let results = specs.iter().map(run_one).collect();
    Report::assemble(seed, budget, results)
}

fn run_one(spec: &CheckSpec) -> CheckResult {
    let start = Instant::now();
    let mut result = match fixtures::by_name(&spec.fixture) {
        None => CheckResult {
            id: spec.id.to_string(),
            fixture: spec.fixture.clone(),
            backend: spec.backend.to_string(),
            status: Status::Fail,
            instances: 0,
            oracle_crosschecks: 0,
            warnings: vec![],
            failures: vec![Counterexample {
                check: spec.id.to_string(),
                description: format!("unknown fixture {:?}", spec.fixture),
                inputs: json!({}),
            }],
            wall_ms: 0,
        },
        Some(fixture) => {
            let classes = spec
                .classes
                .unwrap_or_else(|| ModelClasses::standard(spec.backend));
            let mut ctx = Ctx {
                id: spec.id,
                fixture,
                backend: spec.backend,
                budget: Budget::from_scalar(spec.budget),
                rng: SplitMix64::new(spec.seed ^ stable_hash(&spec.fixture) ^ id_salt(spec.id)),
                classes,
                out: Outcome::default(),
            };
            if spec.classes.is_some() {
                ctx.out.warnings.extend(classes.degeneracy_warnings());
            }
            let run = dispatch(&mut ctx);
            let mut out = ctx.out;
            if let Err(e) = run {
                out.fail(
                    spec.id,
                    format!("check aborted: {e}"),
                    json!({ "fixture": spec.fixture }),
                );
            }
            let status = if !out.failures.is_empty() {
                Status::Fail
            } else if out.instances == 0 {
                Status::Inapplicable
            } else {
                Status::Pass
            };
            CheckResult {
                id: spec.id.to_string(),
                fixture: spec.fixture.clone(),
                backend: spec.backend.to_string(),
                status,
                instances: out.instances,
                oracle_crosschecks: out.crosschecks,
                warnings: out.warnings,
                failures: out.failures,
                wall_ms: 0,
            }
        }
    };
    result.wall_ms = start.elapsed().as_millis();
    result
}

fn stable_hash(s: &str) -> u64 {
    // FNV-1a, fixed across platforms
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn id_salt(id: CheckId) -> u64 {
    stable_hash(&id.to_string())
}

#[derive(Default)]
struct Outcome {
    instances: usize,
    crosschecks: usize,
    warnings: Vec<String>,
    failures: Vec<Counterexample>,
}

impl Outcome {
    fn pass_instance(&mut self) {
        self.instances += 1;
    }

    fn fail(&mut self, id: CheckId, description: String, inputs: serde_json::Value) {
        self.failures.push(Counterexample {
            check: id.to_string(),
            description,
            inputs,
        });
    }

    fn check(&mut self, id: CheckId, ok: bool, describe: impl FnOnce() -> (String, serde_json::Value)) {
        if ok {
            self.pass_instance();
        } else {
            let (d, i) = describe();
            self.fail(id, d, i);
        }
    }
}

struct Ctx {
    id: CheckId,
    fixture: FixtureEntry,
    backend: Backend,
    budget: Budget,
    rng: SplitMix64,
    classes: ModelClasses,
    out: Outcome,
}

impl Ctx {
    fn shape(&self) -> Arc<FinCat> {
        self.fixture.cat.clone()
    }

    fn reedy(&self) -> Result<ReedyData, DiagramError> {
        self.fixture.reedy.clone().ok_or_else(|| {
            DiagramError::Typing(format!("fixture {} has no Reedy structure", self.fixture.name))
        })
    }

    fn random_diagram(&mut self) -> Result<Diagram, DiagramError> {
        gen::random_diagram(&self.fixture.cat.clone(), self.backend, &self.budget, &mut self.rng)
    }

    /// Mapping object with the element-level oracle cross-check
    /// (FinSet): the enumeration and the constraint search must agree
    /// as sorted lists, element by element.
    fn map_with_oracle(
        &mut self,
        x: &Diagram,
        y: &Diagram,
    ) -> Result<MappingObject, DiagramError> {
        let m = mapping_object(x, y)?;
        if x.backend() == Backend::FinSet {
            let listed = nat_trans_enumerate(x, y)?;
            let mut ok = listed.len() == m.magnitude();
            if ok {
                for (k, n) in listed.iter().enumerate() {
                    if m.index_of_nat_trans(n) != Some(k) {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.out.crosschecks += 1;
            } else {
                let payload = json!({
                    "x": serde_json::to_value(io::diagram_to_doc(x)).unwrap(),
                    "y": serde_json::to_value(io::diagram_to_doc(y)).unwrap(),
                });
                self.out.fail(
                    self.id,
                    format!(
                        "oracle mismatch: mapping object has {} elements, enumeration {}",
                        m.magnitude(),
                        listed.len()
                    ),
                    json!({ "kind": "oracle", "instance": payload }),
                );
            }
        }
        Ok(m)
    }
}

fn dispatch(ctx: &mut Ctx) -> Result<(), DiagramError> {
    match ctx.id {
        CheckId::L1 => check_l1(ctx),
        CheckId::L2 => check_l2(ctx),
        CheckId::L3 => check_l3(ctx),
        CheckId::L4 => check_l4(ctx),
        CheckId::T1 => check_t1(ctx),
        CheckId::C1 => check_c1(ctx),
        CheckId::C2 => check_c2(ctx),
        CheckId::C3 => check_c3(ctx),
        CheckId::Example => check_example(ctx),
        CheckId::P1 => check_p1(ctx),
        CheckId::R1 => check_r1(ctx),
        CheckId::L5 => check_l5(ctx),
        CheckId::T2 => check_t2(ctx),
    }
}

fn diagram_json(d: &Diagram) -> serde_json::Value {
    serde_json::to_value(io::diagram_to_doc(d)).expect("doc serializes")
}

fn nat_json(n: &NatTrans) -> serde_json::Value {
    serde_json::to_value(io::nat_trans_to_doc(n)).expect("doc serializes")
}

fn mor_json(m: &BaseMor) -> serde_json::Value {
    serde_json::to_value(io::base_mor_to_doc(m)).expect("doc serializes")
}

fn reedy_json(r: &ReedyData) -> serde_json::Value {
    serde_json::to_value(io::reedy_to_doc(r)).expect("doc serializes")
}

// ---------------------------------------------------------------- L1

/// Three-way adjunction of the module structure: the hom-sets of
/// `X ⊗ K → Y`, `X → Y^K`, and `K → Map(X, Y)` are in explicitly
/// constructed two-sided bijection.
fn check_l1(ctx: &mut Ctx) -> Result<(), DiagramError> {
    match ctx.backend {
        Backend::FinSet => check_l1_finset(ctx),
        Backend::FinVect => check_l1_finvect(ctx),
    }
}

fn check_l1_finset(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let per_fixture = (ctx.budget.instances / 2).max(25);
    for _ in 0..per_fixture {
        let x = ctx.random_diagram()?;
        let y = ctx.random_diagram()?;
        let k = BaseObj::set(ctx.rng.range(0, 3));
        let ok = l1_instance_finset(ctx, &x, &y, &k)?;
        ctx.out.check(CheckId::L1, ok, || {
            (
                "three-way adjunction bijection failed".into(),
                json!({ "kind": "l1", "x": diagram_json(&x), "y": diagram_json(&y), "k": k.magnitude() }),
            )
        });
    }
    Ok(())
}

/// One exhaustive FinSet instance; returns whether every bijection leg
/// round-trips.
fn l1_instance_finset(
    ctx: &mut Ctx,
    x: &Diagram,
    y: &Diagram,
    k: &BaseObj,
) -> Result<bool, DiagramError> {
    let shape = x.shape().clone();
    let k_size = k.magnitude();
    let xk = tensor_obj(x, k)?;
    let yk = crate::diagram::power_obj(y, k)?;
    let side_a = nat_trans_enumerate(&xk, y)?;
    let side_b = nat_trans_enumerate(x, &yk)?;
    let mapping = ctx.map_with_oracle(x, y)?;
    let side_c = base::hom_enumerate(k, &mapping.obj)?;

    // A → B: componentwise currying; B → A: uncurrying
    let curry_n = |n: &NatTrans| -> Result<NatTrans, DiagramError> {
        let components = shape
            .objects()
            .map(|i| Ok(base::curry(n.component(i), x.obj(i), k)?))
            .collect::<Result<Vec<_>, DiagramError>>()?;
        NatTrans::new(x.clone(), yk.clone(), components)
    };
    let uncurry_n = |n: &NatTrans| -> Result<NatTrans, DiagramError> {
        let components = shape
            .objects()
            .map(|i| Ok(base::uncurry(n.component(i), k, y.obj(i))?))
            .collect::<Result<Vec<_>, DiagramError>>()?;
        NatTrans::new(xk.clone(), y.clone(), components)
    };
    // A → C: slice at each k-element and look the family up in the end
    let to_c = |n: &NatTrans| -> Result<BaseMor, DiagramError> {
        let table = (0..k_size)
            .map(|c| {
                let fam: Vec<SetMor> = shape
                    .objects()
                    .map(|i| {
                        let x_i = x.obj(i).magnitude();
                        SetMor {
                            dom: x_i,
                            cod: y.obj(i).magnitude(),
                            table: (0..x_i)
                                .map(|e| {
                                    n.component(i).as_set().table[base::pair_index(k_size, e, c)]
                                })
                                .collect(),
                        }
                    })
                    .collect();
                mapping.index_of_components(&fam).ok_or_else(|| {
                    DiagramError::NotNatural("sliced family missing from the end".into())
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BaseMor::FinSet(SetMor {
            dom: k_size,
            cod: mapping.magnitude(),
            table,
        }))
    };
    let from_c = |u: &BaseMor| -> Result<NatTrans, DiagramError> {
        let components = shape
            .objects()
            .map(|i| {
                let x_i = x.obj(i).magnitude();
                let mut table = Vec::with_capacity(x_i * k_size);
                for e in 0..x_i {
                    for c in 0..k_size {
                        let fam = mapping.family(u.as_set().table[c]);
                        table.push(fam[i.0].table[e]);
                    }
                }
                BaseMor::FinSet(SetMor {
                    dom: x_i * k_size,
                    cod: y.obj(i).magnitude(),
                    table,
                })
            })
            .collect();
        NatTrans::new(xk.clone(), y.clone(), components)
    };

    if side_a.len() != side_b.len() || side_a.len() != side_c.len() {
        return Ok(false);
    }
    for n in &side_a {
        if &uncurry_n(&curry_n(n)?)? != n {
            return Ok(false);
        }
        if &from_c(&to_c(n)?)? != n {
            return Ok(false);
        }
    }
    for n in &side_b {
        if &curry_n(&uncurry_n(n)?)? != n {
            return Ok(false);
        }
    }
    for u in &side_c {
        if &to_c(&from_c(u)?)? != u {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Basis permutation `Y^{X⊗K} → (Y^K)^X` under the fixed encodings.
fn curry_object_iso(x_dim: usize, k_dim: usize, y_dim: usize) -> RatMat {
    use num_traits::One;
    let total = x_dim * k_dim * y_dim;
    let mut m = RatMat::zeros(total, total);
    for r in 0..y_dim {
        for a in 0..x_dim {
            for c in 0..k_dim {
                let src = r * (x_dim * k_dim) + base::pair_index(k_dim, a, c);
                let dst = (r * k_dim + c) * x_dim + a;
                m.set(dst, src, num_rational::BigRational::one());
            }
        }
    }
    m
}

fn check_l1_finvect(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let shape = ctx.shape();
    for _ in 0..8 {
        let x = ctx.random_diagram()?;
        let y = ctx.random_diagram()?;
        let k = BaseObj::vect(ctx.rng.range(1, ctx.budget.vect_dim));
        let k_dim = k.magnitude();
        let xk = tensor_obj(&x, &k)?;
        let yk = crate::diagram::power_obj(&y, &k)?;
        let e1 = mapping_object(&xk, &y)?;
        let e2 = mapping_object(&x, &yk)?;
        let e_xy = mapping_object(&x, &y)?;
        // canonical map Map(X⊗K, Y) → Map(X, Y^K) through the curry
        // permutation on each exponential
        let legs = shape
            .objects()
            .map(|i| {
                let perm = BaseMor::FinVect(curry_object_iso(
                    x.obj(i).magnitude(),
                    k_dim,
                    y.obj(i).magnitude(),
                ));
                base::compose(&perm, &e1.proj(i)?).map_err(DiagramError::from)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let map12 = e2.mediate(&e1.obj, &legs)?;
        let iso12 = map12.as_ref().and_then(base::inverse).is_some();
        // canonical map Map(X⊗K, Y) → Map(X, Y)^K via slice evaluations
        let mut slices = Vec::with_capacity(k_dim);
        for c in 0..k_dim {
            let slice_legs = shape
                .objects()
                .map(|i| {
                    let x_i = x.obj(i).magnitude();
                    // insert the k-basis vector c: X_i → X_i ⊗ K
                    let mut ins = RatMat::zeros(x_i * k_dim, x_i);
                    for a in 0..x_i {
                        ins.set(
                            base::pair_index(k_dim, a, c),
                            a,
                            num_traits::One::one(),
                        );
                    }
                    let restr =
                        base::exp_mor(&BaseMor::FinVect(ins), &base::identity(y.obj(i)))?;
                    Ok(base::compose(&restr, &e1.proj(i)?)?)
                })
                .collect::<Result<Vec<_>, DiagramError>>()?;
            let slice = e_xy.mediate(&e1.obj, &slice_legs)?.ok_or_else(|| {
                DiagramError::NotNatural("slice wedge failed to mediate".into())
            })?;
            slices.push(slice);
        }
        let map13 = kan::assemble_into_exponential(&e1.obj, &slices, &k, &e_xy.obj)?;
        let iso13 = base::inverse(&map13).is_some();
        let ok = iso12 && iso13;
        ctx.out.check(CheckId::L1, ok, || {
            (
                "canonical adjunction maps are not isomorphisms".into(),
                json!({ "kind": "l1", "x": diagram_json(&x), "y": diagram_json(&y), "k": k_dim }),
            )
        });
    }
    Ok(())
}

// ---------------------------------------------------------------- L2

/// Representable evaluation: `Map(h_i, X) → X_i` is an isomorphism for
/// every object of the fixture.
fn check_l2(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let shape = ctx.shape();
    let mut diagrams = vec![constant_diagram(&shape, &base::unit(ctx.backend))];
    let randoms = if shape.object_count() > 4 { 1 } else { 2 };
    for _ in 0..randoms {
        diagrams.push(ctx.random_diagram()?);
    }
    let reps: Vec<Diagram> = shape
        .objects()
        .map(|i| representable(&shape, i, ctx.backend))
        .collect();
    for x in &diagrams {
        for i in shape.objects() {
            let mapping = ctx.map_with_oracle(&reps[i.0], x)?;
            let ev = mapping.evaluate_at(i, identity_position(&shape, i))?;
            let ok = base::inverse(&ev).is_some();
            ctx.out.check(CheckId::L2, ok, || {
                (
                    format!("evaluation at object {i} is not an isomorphism"),
                    json!({ "kind": "l2", "x": diagram_json(x), "object": i.0 }),
                )
            });
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- L3

/// Free/evaluation adjunction for every `(p, M, X)` within budget.
fn check_l3(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let shape = ctx.shape();
    let mut xs = Vec::new();
    for _ in 0..2 {
        xs.push(ctx.random_diagram()?);
    }
    let magnitudes: Vec<usize> = match ctx.backend {
        Backend::FinSet => (0..=ctx.budget.set_size.min(3)).collect(),
        Backend::FinVect => (0..=ctx.budget.vect_dim).collect(),
    };
    for p in shape.objects() {
        for &m_size in &magnitudes {
            let m = match ctx.backend {
                Backend::FinSet => BaseObj::set(m_size),
                Backend::FinVect => BaseObj::vect(m_size),
            };
            for x in &xs {
                let witness = check_free_eval_adjunction(&shape, p, &m, x)?;
                if ctx.backend == Backend::FinSet {
                    let free = kan::free_diagram(&shape, p, &m)?;
                    ctx.map_with_oracle(&free, x)?;
                }
                ctx.out.check(CheckId::L3, witness.holds(), || {
                    (
                        format!("free/evaluation adjunction failed at p={p}, |M|={m_size}"),
                        json!({ "kind": "l3", "p": p.0, "m": m_size, "x": diagram_json(x) }),
                    )
                });
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- L4

/// Coend reduction: the canonical map `∫^i h_i ⊗ X_i → X` is a natural
/// isomorphism for representables, constants, and seeded diagrams.
fn check_l4(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let shape = ctx.shape();
    let mut diagrams: Vec<Diagram> = Vec::new();
    let rep_count = if shape.object_count() > 4 { 2 } else { shape.object_count() };
    for i in shape.objects().take(rep_count) {
        diagrams.push(representable(&shape, i, ctx.backend));
    }
    diagrams.push(constant_diagram(&shape, &base::unit(ctx.backend)));
    let randoms = if shape.object_count() > 4 { 2 } else { 3 };
    for _ in 0..randoms {
        diagrams.push(ctx.random_diagram()?);
    }
    for x in &diagrams {
        let reduction = yoneda_reduction(x)?;
        ctx.out.check(CheckId::L4, reduction.is_natural_iso(), || {
            (
                "coend reduction map is not a natural isomorphism".into(),
                json!({ "kind": "l4", "x": diagram_json(x) }),
            )
        });
    }
    Ok(())
}

// ---------------------------------------------------------------- T1

/// The pointwise right-adjoint formula: audited for the identity
/// functor (whose right adjoint must be the evaluation equivalence) and
/// a tensor functor, with exhaustive bijection probes.
fn check_t1(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let shape = ctx.shape();
    let identity = IdentityFunctor { shape: shape.clone() };
    let mut probes = Vec::new();
    for _ in 0..2 {
        probes.push((ctx.random_diagram()?, ctx.random_diagram()?));
    }
    let witness = kan::audit_module_adjunction(&identity, &probes)?;
    ctx.out.check(CheckId::T1, witness.holds(), || {
        (
            "general right adjoint of the identity functor failed its audit".into(),
            json!({ "kind": "t1", "functor": "identity" }),
        )
    });
    // G(Y) ≅ Y through the evaluation maps
    for (_, y) in &probes {
        let g = right_adjoint_general(&identity, y)?;
        let components = shape
            .objects()
            .map(|i| g.maps[i.0].evaluate_at(i, identity_position(&shape, i)))
            .collect::<Result<Vec<_>, _>>()?;
        let nat = NatTrans::new(g.diagram.clone(), y.clone(), components)?;
        ctx.out.check(CheckId::T1, nat.is_natural_iso(), || {
            (
                "pointwise right adjoint of the identity is not the original diagram".into(),
                json!({ "kind": "t1", "functor": "identity", "y": diagram_json(y) }),
            )
        });
    }
    // a tensor functor with its nontrivial coherence permutation
    let y0 = ctx.random_diagram()?;
    let tensor = TensorWithFunctor { y0: y0.clone() };
    let mut tensor_probes = Vec::new();
    for _ in 0..2 {
        tensor_probes.push((ctx.random_diagram()?, ctx.random_diagram()?));
    }
    let witness2 = kan::audit_module_adjunction(&tensor, &tensor_probes)?;
    ctx.out.check(CheckId::T1, witness2.holds(), || {
        (
            "general right adjoint of a tensor functor failed its audit".into(),
            json!({ "kind": "t1", "functor": "tensor", "y0": diagram_json(&y0) }),
        )
    });
    Ok(())
}

// ---------------------------------------------------------------- C1

/// Restriction ⊣ right Kan extension, exhaustively, plus agreement of
/// the dedicated pointwise formula with the general one.
fn check_c1(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let shape = ctx.shape();
    let mut cases: Vec<(CatFunctor, Arc<FinCat>)> = Vec::new();
    // restriction along the identity
    cases.push((CatFunctor::identity(shape.clone()), shape.clone()));
    // the direct-part inclusion when the fixture is a Reedy category
    // with a proper direct part
    if let Some(r) = &ctx.fixture.reedy {
        if let Ok((sub, incl)) = r.direct_part() {
            if sub.morphism_count() < shape.morphism_count() {
                cases.push((incl, sub));
            }
        }
    }
    // a discrete subcategory inclusion (two objects when available)
    if shape.object_count() >= 2 {
        let discrete = fixtures::discrete(2);
        let obj_map = vec![ObjId(0), ObjId(1)];
        let mor_map = vec![shape.identity(ObjId(0)), shape.identity(ObjId(1))];
        if let Ok(phi) = CatFunctor::new(discrete.clone(), shape.clone(), obj_map, mor_map) {
            cases.push((phi, discrete));
        }
    }
    for (phi, j_cat) in cases {
        let x = ctx.random_diagram()?;
        let y = gen::random_diagram(&j_cat, ctx.backend, &ctx.budget, &mut ctx.rng)?;
        let witness = check_restriction_adjunction(&phi, &x, &y)?;
        ctx.out.check(CheckId::C1, witness.holds(), || {
            (
                "restriction adjunction bijection failed".into(),
                json!({ "kind": "c1", "x": diagram_json(&x), "y": diagram_json(&y) }),
            )
        });
        // generic formula reproduces the dedicated one on the nose
        let dedicated = right_kan(&phi, &y)?;
        let functor = RestrictionFunctor { phi: phi.clone() };
        let generic = right_adjoint_general(&functor, &y)?;
        ctx.out.check(CheckId::C1, generic.diagram == dedicated.diagram, || {
            (
                "general right adjoint disagrees with the right Kan extension".into(),
                json!({ "kind": "c1", "y": diagram_json(&y) }),
            )
        });
        // the oracle sees the pointwise mapping objects too
        for i in shape.objects() {
            let restricted_rep = &dedicated.restricted_reps[i.0];
            ctx.map_with_oracle(restricted_rep, &y)?;
        }
        // discrete target: the end degenerates to a product of
        // exponentials; cross-check through the generic end route
        if j_cat.morphism_count() == j_cat.object_count() {
            for i in shape.objects() {
                let hr = &dedicated.restricted_reps[i.0];
                let expected: usize = j_cat
                    .objects()
                    .map(|j| {
                        base::exponential(hr.obj(j), y.obj(j))
                            .map(|o| o.magnitude())
                            .unwrap_or(0)
                    })
                    .product();
                let t = Bifunctor::exponential(hr, &y)?;
                let e = end(&t)?;
                let ok = dedicated.maps[i.0].magnitude() == expected
                    && e.obj.magnitude() == expected;
                ctx.out.check(CheckId::C1, ok, || {
                    (
                        format!("discrete-target end disagrees with the product form at {i}"),
                        json!({ "kind": "c1", "y": diagram_json(&y), "object": i.0 }),
                    )
                });
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- C2

/// Diagonal restriction ⊣ bivariate mapping-object adjoint, the
/// product-representable identity, and generic/dedicated agreement.
fn check_c2(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let shape = ctx.shape();
    let square = Arc::new(shape.product(&shape)?);
    let diagonal = CatFunctor::diagonal(shape.clone(), square.clone())?;
    for i in shape.objects() {
        for j in shape.objects() {
            let (_, iso) = kan::product_representable_comparison(
                &shape, &square, &diagonal, i, j, ctx.backend,
            )?;
            ctx.out.check(CheckId::C2, iso, || {
                (
                    format!("product-representable comparison fails at ({i}, {j})"),
                    json!({ "kind": "c2", "i": i.0, "j": j.0 }),
                )
            });
        }
    }
    for _ in 0..2 {
        let y = ctx.random_diagram()?;
        let w = gen::random_diagram(&square, ctx.backend, &ctx.budget, &mut ctx.rng)?;
        let witness = check_diagonal_adjunction(&w, &y, &square, &diagonal)?;
        ctx.out.check(CheckId::C2, witness.holds(), || {
            (
                "diagonal adjunction bijection failed".into(),
                json!({ "kind": "c2", "w": diagram_json(&w), "y": diagram_json(&y) }),
            )
        });
        // generic vs dedicated, through the comparison isomorphism
        let q = diag_right_adjoint(&y, &square)?;
        let functor = RestrictionFunctor { phi: diagonal.clone() };
        let generic = right_adjoint_general(&functor, &y)?;
        let mut components = Vec::new();
        for i in shape.objects() {
            for j in shape.objects() {
                let pq = crate::fincat::pair_obj(shape.object_count(), i, j);
                let (cmp, _) = kan::product_representable_comparison(
                    &shape, &square, &diagonal, i, j, ctx.backend,
                )?;
                components.push(generic.maps[pq.0].precompose(&cmp, &q.maps[pq.0])?);
            }
        }
        let nat = NatTrans::new(generic.diagram.clone(), q.diagram.clone(), components)?;
        ctx.out.check(CheckId::C2, nat.is_natural_iso(), || {
            (
                "general right adjoint disagrees with the bivariate adjoint".into(),
                json!({ "kind": "c2", "y": diagram_json(&y) }),
            )
        });
        for i in shape.objects() {
            for j in shape.objects() {
                let hi = representable(&shape, i, ctx.backend);
                let hj = representable(&shape, j, ctx.backend);
                ctx.map_with_oracle(&tensor_diag(&hi, &hj)?, &y)?;
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- C3

/// Internal hom: tensor/hom adjunction exhaustively, agreement with the
/// general right adjoint, and pushout preservation of `− ⊗ Y`.
fn check_c3(ctx: &mut Ctx) -> Result<(), DiagramError> {
    for _ in 0..3 {
        let x = ctx.random_diagram()?;
        let y = ctx.random_diagram()?;
        let z = ctx.random_diagram()?;
        let witness = check_tensor_hom_adjunction(&x, &y, &z)?;
        ctx.out.check(CheckId::C3, witness.holds(), || {
            (
                "tensor/hom adjunction bijection failed".into(),
                json!({ "kind": "c3", "x": diagram_json(&x), "y": diagram_json(&y), "z": diagram_json(&z) }),
            )
        });
        let dedicated = internal_hom(&y, &z)?;
        let functor = TensorWithFunctor { y0: y.clone() };
        let generic = right_adjoint_general(&functor, &z)?;
        ctx.out.check(CheckId::C3, generic.diagram == dedicated.diagram, || {
            (
                "general right adjoint disagrees with the internal hom".into(),
                json!({ "kind": "c3", "y": diagram_json(&y), "z": diagram_json(&z) }),
            )
        });
        // cocontinuity consistency: − ⊗ Y preserves pushouts
        let v = ctx.random_diagram()?;
        let u = gen::random_nat_trans(&v, &x, &mut ctx.rng)?;
        let w = gen::random_nat_trans(&v, &z, &mut ctx.rng)?;
        if let (Some(u), Some(w)) = (u, w) {
            let po = pushout_diagrams(&u, &w)?;
            let tensored_po = pushout_diagrams(&tensor_diag_nat_y(&u, &y)?, &tensor_diag_nat_y(&w, &y)?)?;
            let apex_tensored = tensor_diag(&po.apex, &y)?;
            let left = tensor_diag_nat_y(&po.from_left, &y)?;
            let right = tensor_diag_nat_y(&po.from_right, &y)?;
            let mediated = tensored_po.mediate(&left, &right)?;
            let ok = mediated.target() == &apex_tensored && mediated.is_natural_iso();
            ctx.out.check(CheckId::C3, ok, || {
                (
                    "tensoring does not preserve the pushout".into(),
                    json!({ "kind": "c3-pushout", "y": diagram_json(&y) }),
                )
            });
        }
    }
    Ok(())
}

fn tensor_diag_nat_y(f: &NatTrans, y: &Diagram) -> Result<NatTrans, DiagramError> {
    crate::diagram::tensor_diag_nat(f, &NatTrans::identity(y))
}

// ----------------------------------------------------------- EXAMPLE

/// Bivariate presheaf evaluation on the truncated simplex fixture:
/// `Q(K)_{(n,m)} = Map(h_n ⊗ h_m, K)` for seeded presheaves `K`, with
/// the enumeration oracle and adjunction probes.
fn check_example(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let shape = ctx.shape();
    let square = Arc::new(shape.product(&shape)?);
    let diagonal = CatFunctor::diagonal(shape.clone(), square.clone())?;
    let mut small_budget = ctx.budget;
    small_budget.set_size = small_budget.set_size.min(2);
    for instance in 0..5 {
        let k = gen::random_diagram(&shape, Backend::FinSet, &small_budget, &mut ctx.rng)?;
        let q = diag_right_adjoint(&k, &square)?;
        for i in shape.objects() {
            for j in shape.objects() {
                let hi = representable(&shape, i, Backend::FinSet);
                let hj = representable(&shape, j, Backend::FinSet);
                let product = tensor_diag(&hi, &hj)?;
                let direct = ctx.map_with_oracle(&product, &k)?;
                let pq = crate::fincat::pair_obj(shape.object_count(), i, j);
                let ok = direct.magnitude() == q.maps[pq.0].magnitude()
                    && q.diagram.obj(pq).magnitude() == direct.magnitude();
                ctx.out.check(CheckId::Example, ok, || {
                    (
                        format!("bivariate evaluation disagrees at ({i}, {j})"),
                        json!({ "kind": "example", "k": diagram_json(&k), "i": i.0, "j": j.0 }),
                    )
                });
            }
        }
        // adjunction probes on the first two seeds
        if instance < 2 {
            let w = representable(&square, ObjId(0), Backend::FinSet);
            let witness = check_diagonal_adjunction(&w, &k, &square, &diagonal)?;
            ctx.out.check(CheckId::Example, witness.holds(), || {
                (
                    "diagonal adjunction probe failed on the simplex fixture".into(),
                    json!({ "kind": "example-adjunction", "k": diagram_json(&k) }),
                )
            });
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- P1

/// Module-action compatibility, fibration side: for verified Reedy
/// fibrations `p` and base cofibrations `f`, the induced map
/// `X^B → Y^B ×_{Y^A} X^A` is a Reedy fibration, trivial when an input
/// is. Instances failing their claims count as inapplicable.
fn check_p1(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let r = ctx.reedy()?;
    let shape = ctx.shape();
    let fib_count = if shape.object_count() <= 4 { 14 } else { 8 };
    let mut fibs = Vec::new();
    for k in 0..fib_count {
        let trivial = k % 3 == 2;
        fibs.push(gen::random_finvect_fibration(&shape, &ctx.budget, trivial, &mut ctx.rng)?);
    }
    let cofs = standard_base_cofibrations(Backend::FinVect, &ctx.budget);
    let mut inapplicable = 0usize;
    for p in &fibs {
        for f in &cofs {
            let verdict = action_compat_check(&r, p, f, &ctx.classes)?;
            if !verdict.applicable {
                inapplicable += 1;
                continue;
            }
            ctx.out.check(CheckId::P1, verdict.holds(), || {
                (
                    "induced pullback-corner map is not a (trivial) Reedy fibration".into(),
                    json!({
                        "kind": "p1",
                        "reedy": reedy_json(&r),
                        "p": nat_json(p),
                        "f": mor_json(f),
                        "classes": serde_json::to_value(ctx.classes).unwrap(),
                    }),
                )
            });
        }
    }
    if inapplicable > 0 {
        ctx.out
            .warnings
            .push(format!("{inapplicable} generated instances failed their claims and were skipped"));
    }
    Ok(())
}

/// The canonical small generating (trivial) cofibrations of a backend.
pub fn standard_base_cofibrations(backend: Backend, budget: &Budget) -> Vec<BaseMor> {
    match backend {
        Backend::FinSet => {
            let mut out = vec![base::from_initial(&BaseObj::set(1))];
            for n in 1..budget.set_size.min(3) {
                out.push(BaseMor::FinSet(SetMor {
                    dom: n,
                    cod: n + 1,
                    table: (0..n).collect(),
                }));
            }
            // trivial cofibrations: an identity and a transposition
            out.push(base::identity(&BaseObj::set(1)));
            out.push(BaseMor::FinSet(SetMor {
                dom: 2,
                cod: 2,
                table: vec![1, 0],
            }));
            out
        }
        Backend::FinVect => {
            let mut out = vec![base::from_initial(&BaseObj::vect(1))];
            for n in 1..budget.vect_dim.min(2) + 1 {
                let mut m = RatMat::zeros(n + 1, n);
                for i in 0..n {
                    m.set(i, i, num_traits::One::one());
                }
                out.push(BaseMor::FinVect(m));
            }
            out.push(base::identity(&BaseObj::vect(1)));
            out.push(BaseMor::FinVect(RatMat::from_i64_rows(&[&[1, 1], &[0, 1]])));
            out
        }
    }
}

// ---------------------------------------------------------------- R1

/// Agreement of the two axiom forms: the generator-level pushout
/// product (cofibration side) and the hom-form fibration side must
/// reach the same verdict on every linked instance.
fn check_r1(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let r = ctx.reedy()?;
    let shape = ctx.shape();
    let cofs = standard_base_cofibrations(ctx.backend, &ctx.budget);
    let mut fibs = Vec::new();
    for k in 0..2 {
        fibs.push(gen::random_finvect_fibration(&shape, &ctx.budget, k == 1, &mut ctx.rng)?);
    }
    let mut inapplicable = 0usize;
    for f in &cofs {
        for q in shape.objects() {
            // form (b): the generator h_q ⊗ f pushout-multiplied against
            // another generator
            let hq_f = {
                let h = representable(&shape, q, ctx.backend);
                tensor_obj_mor(&h, f)?
            };
            let partner = {
                let h = representable(&shape, ObjId(0), ctx.backend);
                tensor_obj_mor(&h, &cofs[0])?
            };
            let product = reedy::pushout_product_diag(&hq_f, &partner)?;
            let b_verdict = reedy_classify(&r, &product, &ctx.classes)?;
            let f_triv = ctx.classes.is_trivial_cof(f);
            let partner_triv = ctx.classes.is_trivial_cof(&cofs[0]);
            let b_holds = b_verdict.is_reedy_cof
                && (!(f_triv || partner_triv) || b_verdict.is_trivial_cof());
            for g in &fibs {
                // form (c): the hom-side fibration statement
                let c_verdict = hom_form_check(&r, f, q, g, &ctx.classes)?;
                if !c_verdict.applicable {
                    inapplicable += 1;
                    continue;
                }
                let agree = b_holds == c_verdict.holds();
                let ok = agree && b_holds && c_verdict.holds();
                ctx.out.check(CheckId::R1, ok, || {
                    (
                        format!(
                            "axiom forms disagree at q={q}: pushout-product {} vs hom-form {}",
                            b_holds,
                            c_verdict.holds()
                        ),
                        json!({
                            "kind": "r1",
                            "reedy": reedy_json(&r),
                            "f": mor_json(f),
                            "q": q.0,
                            "g": nat_json(g),
                            "classes": serde_json::to_value(ctx.classes).unwrap(),
                        }),
                    )
                });
            }
        }
    }
    if inapplicable > 0 {
        ctx.out
            .warnings
            .push(format!("{inapplicable} hom-form instances failed their claims and were skipped"));
    }
    Ok(())
}

// ---------------------------------------------------------------- L5

/// The closed latching formula for products of representables, plus
/// Reedy cofibrancy of `h_p ⊗ h_q ⊗ f` for base (trivial) cofibrations.
fn check_l5(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let fixture_reedy = ctx.reedy()?;
    // the formula applies over the direct part
    let (r, _) = fixture_reedy.restrict_to_direct().map_err(DiagramError::from)?;
    let cat = r.base.clone();
    for p in cat.objects() {
        for q in cat.objects() {
            for i in cat.objects() {
                let verdict = latching_formula_check(&r, p, q, i, ctx.backend, &ctx.classes)?;
                ctx.out.check(CheckId::L5, verdict.holds(), || {
                    (
                        format!("latching formula fails at ({p}, {q}, {i}): {verdict:?}"),
                        json!({
                            "kind": "l5",
                            "reedy": reedy_json(&r),
                            "p": p.0, "q": q.0, "i": i.0,
                            "backend": ctx.backend.to_string(),
                        }),
                    )
                });
            }
        }
    }
    // h_p ⊗ h_q ⊗ f is a Reedy (trivial) cofibration
    let cofs = standard_base_cofibrations(ctx.backend, &ctx.budget);
    for p in cat.objects() {
        for q in cat.objects() {
            let hp = representable(&cat, p, ctx.backend);
            let hq = representable(&cat, q, ctx.backend);
            let x = tensor_diag(&hp, &hq)?;
            for f in &cofs {
                let map = tensor_obj_mor(&x, f)?;
                let (v_cof, v_we) = reedy::reedy_cof_verdict(&r, &map, &ctx.classes)?;
                let expected_trivial = ctx.classes.is_trivial_cof(f);
                let ok = v_cof && (!expected_trivial || (v_cof && v_we));
                ctx.out.check(CheckId::L5, ok, || {
                    (
                        format!("h_{p} ⊗ h_{q} ⊗ f is not a (trivial) Reedy cofibration"),
                        json!({
                            "kind": "l5-tensor",
                            "reedy": reedy_json(&r),
                            "p": p.0, "q": q.0,
                            "f": mor_json(f),
                            "classes": serde_json::to_value(ctx.classes).unwrap(),
                        }),
                    )
                });
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- T2

/// Full pushout-product closure sweep over Reedy-cofibration pairs,
/// with direct-part restriction agreement.
fn check_t2(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let r = ctx.reedy()?;
    let base_cofs = standard_base_cofibrations(ctx.backend, &ctx.budget);
    let generators = generating_cofibrations(&r, &base_cofs[..1])?;
    let mut cofs = generators;
    // seeded extras: an inclusion into a sum and a trivial cofibration
    let mut small_budget = ctx.budget;
    small_budget.set_size = small_budget.set_size.min(2);
    small_budget.vect_dim = small_budget.vect_dim.min(2);
    let x = gen::random_diagram(&r.base, ctx.backend, &small_budget, &mut ctx.rng)?;
    let inclusion = gen::random_cofibration_into_sum(&x, &small_budget, &mut ctx.rng)?;
    if reedy::reedy_cof_verdict(&r, &inclusion, &ctx.classes)?.0 {
        cofs.push(inclusion);
    }
    let twist = gen::random_iso_twist(&x, &mut ctx.rng)?;
    if reedy::reedy_cof_verdict(&r, &twist, &ctx.classes)?.0 {
        cofs.push(twist);
    }
    let module_cofs: Vec<BaseMor> = base_cofs
        .iter()
        .filter(|u| ctx.classes.is_cof(u))
        .cloned()
        .collect();
    let report = pushout_product_sweep(&r, &ctx.classes, &cofs, &module_cofs)?;
    for instance in &report.instances {
        ctx.out.check(CheckId::T2, instance.holds(), || {
            (
                format!("pushout-product closure fails for {}", instance.description),
                json!({
                    "kind": "t2",
                    "reedy": reedy_json(&r),
                    "classes": serde_json::to_value(ctx.classes).unwrap(),
                    "instance": instance.description,
                }),
            )
        });
    }
    Ok(())
}

// ------------------------------------------------------------ replay

/// Re-evaluate a counterexample payload: parses the serialized inputs
/// back through the document layer and reruns the single instance,
/// returning the reproduced status.
pub fn replay_counterexample(ce: &Counterexample) -> Result<Status, String> {
    let kind = ce.inputs.get("kind").and_then(|v| v.as_str()).unwrap_or("");
    let fail = |b: bool| if b { Status::Pass } else { Status::Fail };
    let get_diagram = |key: &str| -> Result<Diagram, String> {
        let doc: io::DiagramDoc = serde_json::from_value(
            ce.inputs.get(key).cloned().ok_or_else(|| format!("missing {key}"))?,
        )
        .map_err(|e| e.to_string())?;
        io::doc_to_diagram(&doc).map_err(|e| e.to_string())
    };
    let get_nat = |key: &str| -> Result<NatTrans, String> {
        let doc: io::NatTransDoc = serde_json::from_value(
            ce.inputs.get(key).cloned().ok_or_else(|| format!("missing {key}"))?,
        )
        .map_err(|e| e.to_string())?;
        io::doc_to_nat_trans(&doc).map_err(|e| e.to_string())
    };
    let get_mor = |key: &str| -> Result<BaseMor, String> {
        let doc: io::BaseMorDoc = serde_json::from_value(
            ce.inputs.get(key).cloned().ok_or_else(|| format!("missing {key}"))?,
        )
        .map_err(|e| e.to_string())?;
        io::doc_to_base_mor(&doc).map_err(|e| e.to_string())
    };
    let get_reedy = || -> Result<ReedyData, String> {
        let doc: io::ReedyDoc = serde_json::from_value(
            ce.inputs.get("reedy").cloned().ok_or_else(|| "missing reedy".to_string())?,
        )
        .map_err(|e| e.to_string())?;
        io::doc_to_reedy(&doc).map_err(|e| e.to_string())
    };
    let get_classes = || -> Result<ModelClasses, String> {
        serde_json::from_value(
            ce.inputs.get("classes").cloned().ok_or_else(|| "missing classes".to_string())?,
        )
        .map_err(|e| e.to_string())
    };
    let get_usize = |key: &str| -> Result<usize, String> {
        ce.inputs
            .get(key)
            .and_then(|v| v.as_u64())
            .map(|v| v as usize)
            .ok_or_else(|| format!("missing {key}"))
    };
    match kind {
        "oracle" => {
            let instance = ce.inputs.get("instance").cloned().unwrap_or_default();
            let x_doc: io::DiagramDoc =
                serde_json::from_value(instance.get("x").cloned().unwrap_or_default())
                    .map_err(|e| e.to_string())?;
            let y_doc: io::DiagramDoc =
                serde_json::from_value(instance.get("y").cloned().unwrap_or_default())
                    .map_err(|e| e.to_string())?;
            let x = io::doc_to_diagram(&x_doc).map_err(|e| e.to_string())?;
            let y = io::doc_to_diagram(&y_doc).map_err(|e| e.to_string())?;
            let m = mapping_object(&x, &y).map_err(|e| e.to_string())?;
            let listed = nat_trans_enumerate(&x, &y).map_err(|e| e.to_string())?;
            Ok(fail(m.magnitude() == listed.len()))
        }
        "l2" => {
            let x = get_diagram("x")?;
            let i = ObjId(get_usize("object")?);
            let (_, _, iso) = kan::representable_evaluation(&x, i).map_err(|e| e.to_string())?;
            Ok(fail(iso))
        }
        "l4" => {
            let x = get_diagram("x")?;
            let red = yoneda_reduction(&x).map_err(|e| e.to_string())?;
            Ok(fail(red.is_natural_iso()))
        }
        "l3" => {
            let x = get_diagram("x")?;
            let p = ObjId(get_usize("p")?);
            let m_size = get_usize("m")?;
            let m = match x.backend() {
                Backend::FinSet => BaseObj::set(m_size),
                Backend::FinVect => BaseObj::vect(m_size),
            };
            let w = check_free_eval_adjunction(&x.shape().clone(), p, &m, &x)
                .map_err(|e| e.to_string())?;
            Ok(fail(w.holds()))
        }
        "l5" => {
            let r = get_reedy()?;
            let (p, q, i) = (
                ObjId(get_usize("p")?),
                ObjId(get_usize("q")?),
                ObjId(get_usize("i")?),
            );
            let backend = match ce.inputs.get("backend").and_then(|v| v.as_str()) {
                Some("finvect") => Backend::FinVect,
                _ => Backend::FinSet,
            };
            let classes = ModelClasses::standard(backend);
            let verdict = latching_formula_check(&r, p, q, i, backend, &classes)
                .map_err(|e| e.to_string())?;
            Ok(fail(verdict.holds()))
        }
        "l5-tensor" => {
            let r = get_reedy()?;
            let f = get_mor("f")?;
            let classes = get_classes()?;
            let (p, q) = (ObjId(get_usize("p")?), ObjId(get_usize("q")?));
            let hp = representable(&r.base, p, f.backend());
            let hq = representable(&r.base, q, f.backend());
            let x = tensor_diag(&hp, &hq).map_err(|e| e.to_string())?;
            let map = tensor_obj_mor(&x, &f).map_err(|e| e.to_string())?;
            let verdict = reedy_classify(&r, &map, &classes).map_err(|e| e.to_string())?;
            let expected_trivial = classes.is_trivial_cof(&f);
            Ok(fail(
                verdict.is_reedy_cof && (!expected_trivial || verdict.is_trivial_cof()),
            ))
        }
        "p1" => {
            let r = get_reedy()?;
            let p = get_nat("p")?;
            let f = get_mor("f")?;
            let classes = get_classes()?;
            let verdict =
                action_compat_check(&r, &p, &f, &classes).map_err(|e| e.to_string())?;
            if !verdict.applicable {
                return Ok(Status::Inapplicable);
            }
            Ok(fail(verdict.holds()))
        }
        "r1" => {
            let r = get_reedy()?;
            let f = get_mor("f")?;
            let g = get_nat("g")?;
            let q = ObjId(get_usize("q")?);
            let classes = get_classes()?;
            let verdict = hom_form_check(&r, &f, q, &g, &classes).map_err(|e| e.to_string())?;
            if !verdict.applicable {
                return Ok(Status::Inapplicable);
            }
            Ok(fail(verdict.holds()))
        }
        other => Err(format!("counterexample kind {other:?} has no replay handler")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::ClassPredicate;

    fn quick_spec(id: CheckId, fixture: &str, backend: Backend) -> CheckSpec {
        CheckSpec {
            id,
            fixture: fixture.into(),
            backend,
            seed: 42,
            budget: 2,
            classes: None,
        }
    }

    #[test]
    fn l1_walking_arrow_passes() {
        let report = run_checks(&[quick_spec(CheckId::L1, "walking-arrow", Backend::FinSet)], 42, 2);
        assert_eq!(report.overall, Status::Pass, "{}", report.to_text());
        assert!(report.results[0].instances >= 20);
        assert!(report.results[0].oracle_crosschecks > 0);
    }

    #[test]
    fn l2_and_l3_pass_on_small_fixtures() {
        let specs = vec![
            quick_spec(CheckId::L2, "walking-arrow", Backend::FinSet),
            quick_spec(CheckId::L2, "walking-arrow", Backend::FinVect),
            quick_spec(CheckId::L3, "walking-arrow", Backend::FinSet),
        ];
        let report = run_checks(&specs, 42, 2);
        assert_eq!(report.overall, Status::Pass, "{}", report.to_text());
    }

    #[test]
    fn t2_with_degenerate_classes_passes_with_warning() {
        let mut spec = quick_spec(CheckId::T2, "walking-arrow", Backend::FinSet);
        spec.classes = Some(ModelClasses {
            cof: ClassPredicate::All,
            we: ClassPredicate::All,
            fib: ClassPredicate::All,
        });
        let report = run_checks(&[spec], 42, 2);
        assert_eq!(report.overall, Status::Pass, "{}", report.to_text());
        assert!(report.results[0]
            .warnings
            .iter()
            .any(|w| w.contains("vacuous")));
    }

    #[test]
    fn p1_with_corrupted_weak_equivalence_class_fails_and_replays() {
        // declaring injective maps to be weak equivalences makes ∅ → Q a
        // "trivial cofibration" whose induced fibration is not trivial,
        // so the check fails with a replayable counterexample
        let mut spec = quick_spec(CheckId::P1, "walking-arrow", Backend::FinVect);
        spec.classes = Some(ModelClasses {
            cof: ClassPredicate::Injective,
            we: ClassPredicate::Injective,
            fib: ClassPredicate::Surjective,
        });
        let report = run_checks(&[spec], 42, 2);
        assert_eq!(report.overall, Status::Fail);
        let failure = report.results[0]
            .failures
            .first()
            .expect("a counterexample is recorded");
        let replayed = replay_counterexample(failure).expect("replay runs");
        assert_eq!(replayed, Status::Fail, "counterexample must reproduce");
    }

    #[test]
    fn reports_are_byte_identical_across_runs() {
        let specs = vec![
            quick_spec(CheckId::L1, "walking-arrow", Backend::FinSet),
            quick_spec(CheckId::L5, "walking-arrow", Backend::FinSet),
        ];
        let a = run_checks(&specs, 7, 2).to_json();
        let b = run_checks(&specs, 7, 2).to_json();
        assert_eq!(a, b);
    }
}
