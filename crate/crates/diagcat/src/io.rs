//! The self-describing JSON file format (`"schema": 1`) for
//! categories, Reedy data, diagrams, and natural transformations.
//!
//! Rationals are strings `"p/q"` in lowest terms with a positive
//! denominator; FinSet morphisms are index arrays; FinVect morphisms
//! are row-major flat arrays. Serialization is canonical, so identical
//! values produce byte-identical files.

use crate::base::{BaseMor, BaseObj, Backend, SetMor};
use crate::diagram::{Diagram, DiagramError, NatTrans};
use crate::fincat::{FinCat, MorClass, MorData, MorId, ObjId, ReedyData};
use crate::ratmat::{Rat, RatMat};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("validation failed: {0}")]
    Validation(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ObjDoc {
    label: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct MorDoc {
    dom: usize,
    cod: usize,
    label: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CategoryDoc {
    schema: u32,
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    objects: Vec<ObjDoc>,
    morphisms: Vec<MorDoc>,
    identities: Vec<usize>,
    composition: Vec<(usize, usize, usize)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReedyDoc {
    schema: u32,
    kind: String,
    category: CategoryDoc,
    degree: Vec<usize>,
    classification: Vec<(usize, String)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum ObjPayload {
    Set { size: usize },
    Vect { dim: usize },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum MorPayload {
    Set(Vec<usize>),
    Vect(Vec<String>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct DiagramData {
    at_obj: Vec<ObjPayload>,
    at_mor: Vec<MorPayload>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagramDoc {
    schema: u32,
    kind: String,
    backend: String,
    category: CategoryDoc,
    at_obj: Vec<ObjPayload>,
    at_mor: Vec<MorPayload>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NatTransDoc {
    schema: u32,
    kind: String,
    backend: String,
    category: CategoryDoc,
    source: DiagramData,
    target: DiagramData,
    components: Vec<MorPayload>,
}

/// Any parseable entity; `parse_entity` validates categories and Reedy
/// data automatically.
#[derive(Debug, Clone)]
pub enum Entity {
    Category(Arc<FinCat>),
    Reedy(ReedyData),
    Diagram(Diagram),
    NatTrans(NatTrans),
}

impl Entity {
    pub fn kind(&self) -> &'static str {
        match self {
            Entity::Category(_) => "category",
            Entity::Reedy(_) => "reedy",
            Entity::Diagram(_) => "diagram",
            Entity::NatTrans(_) => "nat_trans",
        }
    }
}

fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_rat(s: &str) -> Result<Rat, IoError> {
    let (num, den) = s
        .split_once('/')
        .ok_or_else(|| IoError::Schema(format!("rational {s:?} is not of the form \"p/q\"")))?;
    let n = BigInt::from_str(num)
        .map_err(|e| IoError::Schema(format!("bad numerator in {s:?}: {e}")))?;
    let d = BigInt::from_str(den)
        .map_err(|e| IoError::Schema(format!("bad denominator in {s:?}: {e}")))?;
    if d == BigInt::from(0) {
        return Err(IoError::Schema(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(n, d))
}

pub fn category_to_doc(c: &FinCat) -> CategoryDoc {
    let (labels, mors, identities, composition) = c.parts();
    CategoryDoc {
        schema: SCHEMA_VERSION,
        kind: "category".into(),
        description: c.description.clone(),
        objects: labels
            .iter()
            .map(|l| ObjDoc { label: l.clone() })
            .collect(),
        morphisms: mors
            .iter()
            .map(|m| MorDoc {
                dom: m.dom.0,
                cod: m.cod.0,
                label: m.label.clone(),
            })
            .collect(),
        identities: identities.iter().map(|m| m.0).collect(),
        composition: composition
            .into_iter()
            .map(|(g, f, gf)| (g.0, f.0, gf.0))
            .collect(),
    }
}

pub fn doc_to_category(doc: &CategoryDoc) -> Result<FinCat, IoError> {
    if doc.schema != SCHEMA_VERSION {
        return Err(IoError::Schema(format!(
            "unsupported schema version {}",
            doc.schema
        )));
    }
    let mors = doc
        .morphisms
        .iter()
        .map(|m| MorData {
            dom: ObjId(m.dom),
            cod: ObjId(m.cod),
            label: m.label.clone(),
        })
        .collect();
    let identities = doc.identities.iter().map(|&m| MorId(m)).collect();
    let composition = doc
        .composition
        .iter()
        .map(|&(g, f, gf)| (MorId(g), MorId(f), MorId(gf)))
        .collect();
    let mut cat = FinCat::new(
        doc.objects.iter().map(|o| o.label.clone()).collect(),
        mors,
        identities,
        composition,
    )
    .map_err(|e| IoError::Schema(e.to_string()))?;
    cat.description = doc.description.clone();
    // composable pairs missing from the table are schema violations,
    // named explicitly; other axiom failures are validation errors
    let report = cat.validate();
    for v in &report.violations {
        if let crate::fincat::CatViolation::MissingComposite { g, f } = v {
            return Err(IoError::Schema(format!(
                "composition table omits the composable pair (g={g}, f={f})"
            )));
        }
    }
    if !report.is_valid() {
        return Err(IoError::Validation(format!(
            "category axioms violated:\n{report}"
        )));
    }
    Ok(cat)
}

pub fn reedy_to_doc(r: &ReedyData) -> ReedyDoc {
    ReedyDoc {
        schema: SCHEMA_VERSION,
        kind: "reedy".into(),
        category: category_to_doc(&r.base),
        degree: r.degrees().to_vec(),
        classification: r
            .classification()
            .into_iter()
            .map(|(m, c)| {
                (
                    m.0,
                    match c {
                        MorClass::Direct => "direct".to_string(),
                        MorClass::Inverse => "inverse".to_string(),
                    },
                )
            })
            .collect(),
    }
}

pub fn doc_to_reedy(doc: &ReedyDoc) -> Result<ReedyData, IoError> {
    let cat = Arc::new(doc_to_category(&doc.category)?);
    let classification = doc
        .classification
        .iter()
        .map(|(m, c)| {
            let class = match c.as_str() {
                "direct" => MorClass::Direct,
                "inverse" => MorClass::Inverse,
                other => {
                    return Err(IoError::Schema(format!(
                        "unknown classification {other:?} (expected \"direct\" or \"inverse\")"
                    )))
                }
            };
            Ok((MorId(*m), class))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let reedy = ReedyData::new(cat, doc.degree.clone(), classification)
        .map_err(|e| IoError::Schema(e.to_string()))?;
    let report = reedy.validate();
    if !report.is_valid() {
        return Err(IoError::Validation(format!(
            "Reedy axioms violated:\n{report}"
        )));
    }
    Ok(reedy)
}

fn backend_name(b: Backend) -> String {
    b.to_string()
}

fn parse_backend(s: &str) -> Result<Backend, IoError> {
    match s {
        "finset" => Ok(Backend::FinSet),
        "finvect" => Ok(Backend::FinVect),
        other => Err(IoError::Schema(format!("unknown backend {other:?}"))),
    }
}

fn obj_payload(o: &BaseObj) -> ObjPayload {
    match o {
        BaseObj::FinSet { size } => ObjPayload::Set { size: *size },
        BaseObj::FinVect { dim } => ObjPayload::Vect { dim: *dim },
    }
}

fn payload_obj(p: &ObjPayload, backend: Backend) -> Result<BaseObj, IoError> {
    match (p, backend) {
        (ObjPayload::Set { size }, Backend::FinSet) => Ok(BaseObj::set(*size)),
        (ObjPayload::Vect { dim }, Backend::FinVect) => Ok(BaseObj::vect(*dim)),
        _ => Err(IoError::Schema(
            "object payload does not match the declared backend".into(),
        )),
    }
}

fn mor_payload(m: &BaseMor) -> MorPayload {
    match m {
        BaseMor::FinSet(s) => MorPayload::Set(s.table.clone()),
        BaseMor::FinVect(mat) => MorPayload::Vect(mat.data().iter().map(format_rat).collect()),
    }
}

fn payload_mor(
    p: &MorPayload,
    dom: &BaseObj,
    cod: &BaseObj,
) -> Result<BaseMor, IoError> {
    match (p, dom, cod) {
        (MorPayload::Set(table), BaseObj::FinSet { size: d }, BaseObj::FinSet { size: c }) => {
            let m = SetMor::new(*d, *c, table.clone())
                .map_err(|e| IoError::Schema(e.to_string()))?;
            Ok(BaseMor::FinSet(m))
        }
        // an empty entry list deserializes as the set variant; accept it
        // for zero-size matrices
        (MorPayload::Set(table), BaseObj::FinVect { dim: d }, BaseObj::FinVect { dim: c })
            if table.is_empty() && c * d == 0 =>
        {
            Ok(BaseMor::FinVect(RatMat::zeros(*c, *d)))
        }
        (MorPayload::Vect(entries), BaseObj::FinVect { dim: d }, BaseObj::FinVect { dim: c }) => {
            if entries.len() != c * d {
                return Err(IoError::Schema(format!(
                    "matrix payload has {} entries for a {c}×{d} matrix",
                    entries.len()
                )));
            }
            let mut mat = RatMat::zeros(*c, *d);
            for (k, s) in entries.iter().enumerate() {
                mat.set(k / d, k % d, parse_rat(s)?);
            }
            Ok(BaseMor::FinVect(mat))
        }
        _ => Err(IoError::Schema(
            "morphism payload does not match the declared backend".into(),
        )),
    }
}

fn diagram_data(d: &Diagram) -> DiagramData {
    let shape = d.shape();
    DiagramData {
        at_obj: shape.objects().map(|o| obj_payload(d.obj(o))).collect(),
        at_mor: shape.morphisms().map(|m| mor_payload(d.mor(m))).collect(),
    }
}

fn data_to_diagram(
    data: &DiagramData,
    shape: &Arc<FinCat>,
    backend: Backend,
) -> Result<Diagram, IoError> {
    if data.at_obj.len() != shape.object_count() {
        return Err(IoError::Schema(format!(
            "at_obj has {} entries for {} objects",
            data.at_obj.len(),
            shape.object_count()
        )));
    }
    if data.at_mor.len() != shape.morphism_count() {
        return Err(IoError::Schema(format!(
            "at_mor has {} entries for {} morphisms",
            data.at_mor.len(),
            shape.morphism_count()
        )));
    }
    let at_obj = data
        .at_obj
        .iter()
        .map(|p| payload_obj(p, backend))
        .collect::<Result<Vec<_>, _>>()?;
    let at_mor = data
        .at_mor
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let m = MorId(k);
            payload_mor(p, &at_obj[shape.dom(m).0], &at_obj[shape.cod(m).0])
        })
        .collect::<Result<Vec<_>, _>>()?;
    Diagram::new(shape.clone(), at_obj, at_mor)
        .map_err(|e| IoError::Validation(diagram_error_text(e)))
}

fn diagram_error_text(e: DiagramError) -> String {
    e.to_string()
}

pub fn diagram_to_doc(d: &Diagram) -> DiagramDoc {
    let data = diagram_data(d);
    DiagramDoc {
        schema: SCHEMA_VERSION,
        kind: "diagram".into(),
        backend: backend_name(d.backend()),
        category: category_to_doc(d.shape()),
        at_obj: data.at_obj,
        at_mor: data.at_mor,
    }
}

pub fn doc_to_diagram(doc: &DiagramDoc) -> Result<Diagram, IoError> {
    let shape = Arc::new(doc_to_category(&doc.category)?);
    let backend = parse_backend(&doc.backend)?;
    let data = DiagramData {
        at_obj: doc.at_obj.clone(),
        at_mor: doc.at_mor.clone(),
    };
    data_to_diagram(&data, &shape, backend)
}

pub fn nat_trans_to_doc(n: &NatTrans) -> NatTransDoc {
    let shape = n.source().shape();
    NatTransDoc {
        schema: SCHEMA_VERSION,
        kind: "nat_trans".into(),
        backend: backend_name(n.source().backend()),
        category: category_to_doc(shape),
        source: diagram_data(n.source()),
        target: diagram_data(n.target()),
        components: shape
            .objects()
            .map(|o| mor_payload(n.component(o)))
            .collect(),
    }
}

pub fn doc_to_nat_trans(doc: &NatTransDoc) -> Result<NatTrans, IoError> {
    let shape = Arc::new(doc_to_category(&doc.category)?);
    let backend = parse_backend(&doc.backend)?;
    let source = data_to_diagram(&doc.source, &shape, backend)?;
    let target = data_to_diagram(&doc.target, &shape, backend)?;
    if doc.components.len() != shape.object_count() {
        return Err(IoError::Schema(format!(
            "components has {} entries for {} objects",
            doc.components.len(),
            shape.object_count()
        )));
    }
    let components = doc
        .components
        .iter()
        .enumerate()
        .map(|(k, p)| payload_mor(p, source.obj(ObjId(k)), target.obj(ObjId(k))))
        .collect::<Result<Vec<_>, _>>()?;
    NatTrans::new(source, target, components)
        .map_err(|e| IoError::Validation(diagram_error_text(e)))
}

/// Standalone base-morphism payload, used inside counterexamples.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BaseMorDoc {
    backend: String,
    dom: usize,
    cod: usize,
    payload: MorPayload,
}

pub fn base_mor_to_doc(m: &BaseMor) -> BaseMorDoc {
    BaseMorDoc {
        backend: backend_name(m.backend()),
        dom: m.dom().magnitude(),
        cod: m.cod().magnitude(),
        payload: mor_payload(m),
    }
}

pub fn doc_to_base_mor(d: &BaseMorDoc) -> Result<BaseMor, IoError> {
    let backend = parse_backend(&d.backend)?;
    let (dom, cod) = match backend {
        Backend::FinSet => (BaseObj::set(d.dom), BaseObj::set(d.cod)),
        Backend::FinVect => (BaseObj::vect(d.dom), BaseObj::vect(d.cod)),
    };
    payload_mor(&d.payload, &dom, &cod)
}

/// Parse any supported document, dispatching on its `kind` field, with
/// automatic validation.
pub fn parse_entity(text: &str) -> Result<Entity, IoError> {
    #[derive(Deserialize)]
    struct Probe {
        schema: u32,
        kind: String,
    }
    let probe: Probe = serde_json::from_str(text)?;
    if probe.schema != SCHEMA_VERSION {
        return Err(IoError::Schema(format!(
            "unsupported schema version {}",
            probe.schema
        )));
    }
    match probe.kind.as_str() {
        "category" => {
            let doc: CategoryDoc = serde_json::from_str(text)?;
            Ok(Entity::Category(Arc::new(doc_to_category(&doc)?)))
        }
        "reedy" => {
            let doc: ReedyDoc = serde_json::from_str(text)?;
            Ok(Entity::Reedy(doc_to_reedy(&doc)?))
        }
        "diagram" => {
            let doc: DiagramDoc = serde_json::from_str(text)?;
            Ok(Entity::Diagram(doc_to_diagram(&doc)?))
        }
        "nat_trans" => {
            let doc: NatTransDoc = serde_json::from_str(text)?;
            Ok(Entity::NatTrans(doc_to_nat_trans(&doc)?))
        }
        other => Err(IoError::Schema(format!(
            "unknown kind {other:?} (expected category, reedy, diagram, or nat_trans)"
        ))),
    }
}

pub fn parse_file(path: &Path) -> Result<Entity, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse_entity(&text)
}

/// Canonical serialization: pretty JSON plus a trailing newline.
pub fn serialize_entity(e: &Entity) -> String {
    let text = match e {
        Entity::Category(c) => serde_json::to_string_pretty(&category_to_doc(c)),
        Entity::Reedy(r) => serde_json::to_string_pretty(&reedy_to_doc(r)),
        Entity::Diagram(d) => serde_json::to_string_pretty(&diagram_to_doc(d)),
        Entity::NatTrans(n) => serde_json::to_string_pretty(&nat_trans_to_doc(n)),
    };
    let mut s = text.expect("serialization of plain data cannot fail");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base;
    use crate::fixtures;

    #[test]
    fn category_roundtrip_is_exact() {
        for entry in fixtures::all() {
            let e = Entity::Category(entry.cat.clone());
            let text = serialize_entity(&e);
            let parsed = parse_entity(&text).unwrap();
            match parsed {
                Entity::Category(c) => assert_eq!(*c, *entry.cat, "{}", entry.name),
                _ => panic!("wrong kind"),
            }
            // serialize(parse(x)) is byte-identical
            assert_eq!(serialize_entity(&parse_entity(&text).unwrap()), text);
        }
    }

    #[test]
    fn reedy_roundtrip() {
        let r = fixtures::delta_op_le2();
        let text = serialize_entity(&Entity::Reedy(r.clone()));
        match parse_entity(&text).unwrap() {
            Entity::Reedy(r2) => {
                assert_eq!(*r2.base, *r.base);
                assert_eq!(r2.degrees(), r.degrees());
                assert_eq!(r2.classification(), r.classification());
            }
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn diagram_roundtrip_both_backends() {
        let shape = fixtures::walking_arrow();
        let d = crate::diagram::representable(&shape, ObjId(0), Backend::FinSet);
        let text = serialize_entity(&Entity::Diagram(d.clone()));
        match parse_entity(&text).unwrap() {
            Entity::Diagram(d2) => assert_eq!(d2, d),
            _ => panic!("wrong kind"),
        }
        let v = crate::diagram::representable(&shape, ObjId(0), Backend::FinVect);
        let text2 = serialize_entity(&Entity::Diagram(v.clone()));
        assert!(text2.contains("\"1/1\""));
        match parse_entity(&text2).unwrap() {
            Entity::Diagram(d2) => assert_eq!(d2, v),
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn nat_trans_roundtrip() {
        let shape = fixtures::walking_arrow();
        let d = crate::diagram::representable(&shape, ObjId(0), Backend::FinSet);
        let id = NatTrans::identity(&d);
        let text = serialize_entity(&Entity::NatTrans(id.clone()));
        match parse_entity(&text).unwrap() {
            Entity::NatTrans(n) => assert_eq!(n, id),
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn missing_composite_is_a_schema_violation_naming_the_pair() {
        let c = fixtures::walking_arrow();
        let mut doc = category_to_doc(&c);
        doc.composition.retain(|&(g, f, _)| !(g == 2 && f == 0));
        let text = serde_json::to_string_pretty(&doc).unwrap();
        let err = parse_entity(&text).unwrap_err();
        match err {
            IoError::Schema(msg) => {
                assert!(msg.contains("(g=2, f=0)"), "{msg}");
            }
            other => panic!("expected schema violation, got {other}"),
        }
    }

    #[test]
    fn invalid_rational_strings_are_rejected() {
        assert!(parse_rat("1/2").is_ok());
        assert!(parse_rat("-3/7").is_ok());
        assert!(parse_rat("3").is_err());
        assert!(parse_rat("1/0").is_err());
        assert_eq!(format_rat(&parse_rat("2/4").unwrap()), "1/2");
    }

    #[test]
    fn nonnatural_components_fail_validation() {
        let shape = fixtures::walking_arrow();
        let two = BaseObj::set(2);
        let x = Diagram::new(
            shape.clone(),
            vec![two, two],
            vec![
                base::identity(&two),
                base::identity(&two),
                BaseMor::FinSet(SetMor { dom: 2, cod: 2, table: vec![1, 0] }),
            ],
        )
        .unwrap();
        let y = crate::diagram::constant_diagram(&shape, &two);
        // components that break the square
        let doc = NatTransDoc {
            schema: SCHEMA_VERSION,
            kind: "nat_trans".into(),
            backend: "finset".into(),
            category: category_to_doc(&shape),
            source: diagram_data(&x),
            target: diagram_data(&y),
            components: vec![
                MorPayload::Set(vec![0, 1]),
                MorPayload::Set(vec![0, 1]),
            ],
        };
        let text = serde_json::to_string_pretty(&doc).unwrap();
        match parse_entity(&text) {
            Err(IoError::Validation(msg)) => assert!(msg.contains("square"), "{msg}"),
            other => panic!("expected validation error, got {other:?}"),
        }
    }
}
