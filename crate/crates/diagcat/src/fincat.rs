//! Finite categories as explicit object/morphism/composition tables,
//! functors between them, opposites, products, and Reedy structures.
//!
//! Identifiers are dense nonnegative integers; every canonical ordering
//! (hom-set enumeration, product pairing) is derived from identifier
//! order so that downstream computations are bit-exact reproducible.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Soft limit on objects; all checks are exhaustive, so limits keep
/// runtimes bounded.
pub const MAX_OBJECTS: usize = 64;
/// Soft limit on morphisms.
pub const MAX_MORPHISMS: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error)]
pub enum CatError {
    #[error("too many objects: {0} (soft limit {MAX_OBJECTS})")]
    TooManyObjects(usize),
    #[error("too many morphisms: {0} (soft limit {MAX_MORPHISMS})")]
    TooManyMorphisms(usize),
    #[error("object id {0} out of range")]
    BadObject(usize),
    #[error("morphism id {0} out of range")]
    BadMorphism(usize),
    #[error("identities list has {got} entries for {want} objects")]
    BadIdentities { got: usize, want: usize },
    #[error("duplicate composition entry for pair (g={g}, f={f})")]
    DuplicateComposition { g: MorId, f: MorId },
    #[error("degree list has {got} entries for {want} objects")]
    BadDegrees { got: usize, want: usize },
    #[error("duplicate classification entry for morphism {0}")]
    DuplicateClassification(MorId),
    #[error("functor object map has {got} entries for {want} objects")]
    BadObjectMap { got: usize, want: usize },
    #[error("functor morphism map has {got} entries for {want} morphisms")]
    BadMorphismMap { got: usize, want: usize },
    #[error("functor does not preserve identity of object {0}")]
    IdentityNotPreserved(ObjId),
    #[error("functor does not preserve domain/codomain of morphism {0}")]
    TypingNotPreserved(MorId),
    #[error("functor does not preserve composition of (g={g}, f={f})")]
    CompositionNotPreserved { g: MorId, f: MorId },
    #[error("direct/inverse part is not closed: composite of {g} and {f} falls outside")]
    PartNotClosed { g: MorId, f: MorId },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorData {
    pub dom: ObjId,
    pub cod: ObjId,
    pub label: String,
}

/// A finite category: objects, morphisms, identity assignment, and a
/// complete composition table keyed by composable pairs `(g, f)` with
/// `cod(f) = dom(g)`; the entry is `g ∘ f`.
#[derive(Debug, Clone)]
pub struct FinCat {
    object_labels: Vec<String>,
    mors: Vec<MorData>,
    identities: Vec<MorId>,
    comp: HashMap<(MorId, MorId), MorId>,
    /// Optional free-form note carried through serialization (fixture
    /// files use it to record orientation conventions).
    pub description: Option<String>,
}

impl PartialEq for FinCat {
    fn eq(&self, other: &Self) -> bool {
        self.object_labels == other.object_labels
            && self.mors == other.mors
            && self.identities == other.identities
            && self.comp == other.comp
    }
}

impl Eq for FinCat {}

impl FinCat {
    pub fn new(
        object_labels: Vec<String>,
        mors: Vec<MorData>,
        identities: Vec<MorId>,
        composition: Vec<(MorId, MorId, MorId)>,
    ) -> Result<FinCat, CatError> {
        if object_labels.len() > MAX_OBJECTS {
            return Err(CatError::TooManyObjects(object_labels.len()));
        }
        if mors.len() > MAX_MORPHISMS {
            return Err(CatError::TooManyMorphisms(mors.len()));
        }
        let n_obj = object_labels.len();
        let n_mor = mors.len();
        for m in &mors {
            if m.dom.0 >= n_obj {
                return Err(CatError::BadObject(m.dom.0));
            }
            if m.cod.0 >= n_obj {
                return Err(CatError::BadObject(m.cod.0));
            }
        }
        if identities.len() != n_obj {
            return Err(CatError::BadIdentities {
                got: identities.len(),
                want: n_obj,
            });
        }
        for id in &identities {
            if id.0 >= n_mor {
                return Err(CatError::BadMorphism(id.0));
            }
        }
        let mut comp = HashMap::with_capacity(composition.len());
        for (g, f, gf) in composition {
            for m in [g, f, gf] {
                if m.0 >= n_mor {
                    return Err(CatError::BadMorphism(m.0));
                }
            }
            if comp.insert((g, f), gf).is_some() {
                return Err(CatError::DuplicateComposition { g, f });
            }
        }
        Ok(FinCat {
            object_labels,
            mors,
            identities,
            comp,
            description: None,
        })
    }

    pub fn object_count(&self) -> usize {
        self.object_labels.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.mors.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> {
        (0..self.object_count()).map(ObjId)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> {
        (0..self.morphism_count()).map(MorId)
    }

    pub fn object_label(&self, o: ObjId) -> &str {
        &self.object_labels[o.0]
    }

    pub fn mor(&self, m: MorId) -> &MorData {
        &self.mors[m.0]
    }

    pub fn dom(&self, m: MorId) -> ObjId {
        self.mors[m.0].dom
    }

    pub fn cod(&self, m: MorId) -> ObjId {
        self.mors[m.0].cod
    }

    pub fn identity(&self, o: ObjId) -> MorId {
        self.identities[o.0]
    }

    pub fn is_identity(&self, m: MorId) -> bool {
        self.identities.contains(&m)
    }

    pub fn try_compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.comp.get(&(g, f)).copied()
    }

    /// `g ∘ f`; panics if the pair is not in the table. Valid categories
    /// have total tables on composable pairs.
    pub fn compose(&self, g: MorId, f: MorId) -> MorId {
        *self
            .comp
            .get(&(g, f))
            .unwrap_or_else(|| panic!("missing composite for (g={}, f={})", g.0, f.0))
    }

    /// All morphisms `i → j` in ascending identifier order. This order
    /// is the canonical enumeration of the hom-set everywhere.
    pub fn hom(&self, i: ObjId, j: ObjId) -> Vec<MorId> {
        self.morphisms()
            .filter(|&m| self.dom(m) == i && self.cod(m) == j)
            .collect()
    }

    /// Position of `m` in the canonical enumeration of its hom-set.
    pub fn hom_index(&self, m: MorId) -> usize {
        let (i, j) = (self.dom(m), self.cod(m));
        self.hom(i, j)
            .iter()
            .position(|&x| x == m)
            .expect("morphism missing from its own hom-set")
    }

    /// A generating set of morphisms: every morphism is a composite of
    /// identities and members of the returned list. Built greedily in
    /// identifier order, so it is deterministic; naturality and wedge
    /// constraints indexed by this set imply the constraints for all
    /// morphisms. Enumeration oracles keep the full morphism list.
    pub fn generating_morphisms(&self) -> Vec<MorId> {
        let mut generated = vec![false; self.morphism_count()];
        for o in self.objects() {
            generated[self.identity(o).0] = true;
        }
        let mut gens = Vec::new();
        for m in self.morphisms() {
            if generated[m.0] {
                continue;
            }
            gens.push(m);
            // close under composition with everything generated so far
            let mut queue = vec![m];
            generated[m.0] = true;
            while let Some(new_mor) = queue.pop() {
                for other in self.morphisms() {
                    if !generated[other.0] {
                        continue;
                    }
                    for composite in [
                        self.try_compose(new_mor, other),
                        self.try_compose(other, new_mor),
                    ]
                    .into_iter()
                    .flatten()
                    {
                        if !generated[composite.0] {
                            generated[composite.0] = true;
                            queue.push(composite);
                        }
                    }
                }
            }
        }
        debug_assert!(generated.iter().all(|&g| g));
        gens
    }

    /// Composable pairs `(g, f)` with `cod(f) = dom(g)`, in (g, f) order.
    pub fn composable_pairs(&self) -> Vec<(MorId, MorId)> {
        let mut out = Vec::new();
        for g in self.morphisms() {
            for f in self.morphisms() {
                if self.cod(f) == self.dom(g) {
                    out.push((g, f));
                }
            }
        }
        out
    }

    /// Exhaustive axiom check; every violated instance is reported as
    /// data. The category is valid iff the report is empty.
    pub fn validate(&self) -> ValidationReport {
        let mut v = Vec::new();
        // identity typing
        for o in self.objects() {
            let id = self.identity(o);
            if self.dom(id) != o || self.cod(id) != o {
                v.push(CatViolation::IdentityTyping { object: o, id });
            }
        }
        // composition totality and typing
        for (g, f) in self.composable_pairs() {
            match self.try_compose(g, f) {
                None => v.push(CatViolation::MissingComposite { g, f }),
                Some(gf) => {
                    if self.dom(gf) != self.dom(f) || self.cod(gf) != self.cod(g) {
                        v.push(CatViolation::CompositeTyping { g, f, got: gf });
                    }
                }
            }
        }
        // spurious entries on non-composable pairs
        for (&(g, f), &gf) in self.comp.iter() {
            if self.cod(f) != self.dom(g) {
                v.push(CatViolation::NotComposable { g, f, entry: gf });
            }
        }
        // unit laws
        for f in self.morphisms() {
            let id_dom = self.identity(self.dom(f));
            let id_cod = self.identity(self.cod(f));
            if let Some(x) = self.try_compose(f, id_dom) {
                if x != f {
                    v.push(CatViolation::RightUnit { f, got: x });
                }
            }
            if let Some(x) = self.try_compose(id_cod, f) {
                if x != f {
                    v.push(CatViolation::LeftUnit { f, got: x });
                }
            }
        }
        // associativity on all composable triples
        for h in self.morphisms() {
            for g in self.morphisms() {
                if self.cod(g) != self.dom(h) {
                    continue;
                }
                for f in self.morphisms() {
                    if self.cod(f) != self.dom(g) {
                        continue;
                    }
                    let left = self.try_compose(h, g).and_then(|hg| self.try_compose(hg, f));
                    let right = self.try_compose(g, f).and_then(|gf| self.try_compose(h, gf));
                    if let (Some(l), Some(r)) = (left, right) {
                        if l != r {
                            v.push(CatViolation::Associativity { h, g, f, left: l, right: r });
                        }
                    }
                }
            }
        }
        // sort so reports are deterministic regardless of map iteration
        v.sort();
        ValidationReport { violations: v }
    }

    /// The opposite category on the same identifiers and labels:
    /// domains and codomains swap, and `comp_op(g, f) = comp(f, g)`.
    pub fn opposite(&self) -> FinCat {
        let mors = self
            .mors
            .iter()
            .map(|m| MorData {
                dom: m.cod,
                cod: m.dom,
                label: m.label.clone(),
            })
            .collect();
        let comp = self
            .comp
            .iter()
            .map(|(&(g, f), &gf)| ((f, g), gf))
            .collect();
        FinCat {
            object_labels: self.object_labels.clone(),
            mors,
            identities: self.identities.clone(),
            comp,
            description: self.description.clone(),
        }
    }

    /// Product category; objects and morphisms are pairs ordered
    /// lexicographically in the factor identifier orders, so
    /// `pair_obj`/`pair_mor` below give the index arithmetic.
    pub fn product(&self, other: &FinCat) -> Result<FinCat, CatError> {
        let n_obj = self.object_count() * other.object_count();
        let n_mor = self.morphism_count() * other.morphism_count();
        if n_obj > MAX_OBJECTS {
            return Err(CatError::TooManyObjects(n_obj));
        }
        if n_mor > MAX_MORPHISMS {
            return Err(CatError::TooManyMorphisms(n_mor));
        }
        let mut object_labels = Vec::with_capacity(n_obj);
        for a in self.objects() {
            for b in other.objects() {
                object_labels.push(format!(
                    "({},{})",
                    self.object_label(a),
                    other.object_label(b)
                ));
            }
        }
        let mut mors = Vec::with_capacity(n_mor);
        for f in self.morphisms() {
            for g in other.morphisms() {
                let (fd, gd) = (self.mor(f), other.mor(g));
                mors.push(MorData {
                    dom: pair_obj(other.object_count(), fd.dom, gd.dom),
                    cod: pair_obj(other.object_count(), fd.cod, gd.cod),
                    label: format!("({},{})", fd.label, gd.label),
                });
            }
        }
        let mut identities = Vec::with_capacity(n_obj);
        for a in self.objects() {
            for b in other.objects() {
                identities.push(pair_mor(
                    other.morphism_count(),
                    self.identity(a),
                    other.identity(b),
                ));
            }
        }
        let mut composition = Vec::new();
        for (g1, f1) in self.composable_pairs() {
            let c1 = self.compose(g1, f1);
            for (g2, f2) in other.composable_pairs() {
                let c2 = other.compose(g2, f2);
                composition.push((
                    pair_mor(other.morphism_count(), g1, g2),
                    pair_mor(other.morphism_count(), f1, f2),
                    pair_mor(other.morphism_count(), c1, c2),
                ));
            }
        }
        FinCat::new(object_labels, mors, identities, composition)
    }

    pub(crate) fn parts(&self) -> (&[String], &[MorData], &[MorId], Vec<(MorId, MorId, MorId)>) {
        let mut comp: Vec<(MorId, MorId, MorId)> =
            self.comp.iter().map(|(&(g, f), &gf)| (g, f, gf)).collect();
        comp.sort();
        (&self.object_labels, &self.mors, &self.identities, comp)
    }
}

/// Object index of the pair `(a, b)` in a product whose right factor
/// has `right_objects` objects.
pub fn pair_obj(right_objects: usize, a: ObjId, b: ObjId) -> ObjId {
    ObjId(a.0 * right_objects + b.0)
}

pub fn unpair_obj(right_objects: usize, p: ObjId) -> (ObjId, ObjId) {
    (ObjId(p.0 / right_objects), ObjId(p.0 % right_objects))
}

pub fn pair_mor(right_morphisms: usize, f: MorId, g: MorId) -> MorId {
    MorId(f.0 * right_morphisms + g.0)
}

pub fn unpair_mor(right_morphisms: usize, p: MorId) -> (MorId, MorId) {
    (MorId(p.0 / right_morphisms), MorId(p.0 % right_morphisms))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum CatViolation {
    IdentityTyping { object: ObjId, id: MorId },
    MissingComposite { g: MorId, f: MorId },
    CompositeTyping { g: MorId, f: MorId, got: MorId },
    NotComposable { g: MorId, f: MorId, entry: MorId },
    LeftUnit { f: MorId, got: MorId },
    RightUnit { f: MorId, got: MorId },
    Associativity { h: MorId, g: MorId, f: MorId, left: MorId, right: MorId },
}

impl fmt::Display for CatViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatViolation::IdentityTyping { object, id } => {
                write!(f, "identity {id} of object {object} has wrong endpoints")
            }
            CatViolation::MissingComposite { g, f: ff } => {
                write!(f, "no composite recorded for composable pair (g={g}, f={ff})")
            }
            CatViolation::CompositeTyping { g, f: ff, got } => {
                write!(f, "composite of (g={g}, f={ff}) is {got}, which has wrong endpoints")
            }
            CatViolation::NotComposable { g, f: ff, entry } => {
                write!(f, "table entry {entry} recorded for non-composable pair (g={g}, f={ff})")
            }
            CatViolation::LeftUnit { f: ff, got } => {
                write!(f, "id ∘ {ff} = {got} ≠ {ff}")
            }
            CatViolation::RightUnit { f: ff, got } => {
                write!(f, "{ff} ∘ id = {got} ≠ {ff}")
            }
            CatViolation::Associativity { h, g, f: ff, left, right } => {
                write!(f, "(h={h})∘(g={g})∘(f={ff}): left-assoc {left} ≠ right-assoc {right}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<CatViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            write!(f, "valid")
        } else {
            for v in &self.violations {
                writeln!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// A functor between finite categories. Construction checks identity,
/// typing, and composition preservation exhaustively.
#[derive(Debug, Clone, PartialEq)]
pub struct CatFunctor {
    pub source: Arc<FinCat>,
    pub target: Arc<FinCat>,
    obj_map: Vec<ObjId>,
    mor_map: Vec<MorId>,
}

impl CatFunctor {
    pub fn new(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        obj_map: Vec<ObjId>,
        mor_map: Vec<MorId>,
    ) -> Result<CatFunctor, CatError> {
        if obj_map.len() != source.object_count() {
            return Err(CatError::BadObjectMap {
                got: obj_map.len(),
                want: source.object_count(),
            });
        }
        if mor_map.len() != source.morphism_count() {
            return Err(CatError::BadMorphismMap {
                got: mor_map.len(),
                want: source.morphism_count(),
            });
        }
        for o in &obj_map {
            if o.0 >= target.object_count() {
                return Err(CatError::BadObject(o.0));
            }
        }
        for m in &mor_map {
            if m.0 >= target.morphism_count() {
                return Err(CatError::BadMorphism(m.0));
            }
        }
        let fun = CatFunctor {
            source,
            target,
            obj_map,
            mor_map,
        };
        for o in fun.source.objects() {
            if fun.mor_map[fun.source.identity(o).0] != fun.target.identity(fun.obj_map[o.0]) {
                return Err(CatError::IdentityNotPreserved(o));
            }
        }
        for m in fun.source.morphisms() {
            let img = fun.mor_map[m.0];
            if fun.target.dom(img) != fun.obj_map[fun.source.dom(m).0]
                || fun.target.cod(img) != fun.obj_map[fun.source.cod(m).0]
            {
                return Err(CatError::TypingNotPreserved(m));
            }
        }
        for (g, f) in fun.source.composable_pairs() {
            let want = fun.mor_map[fun.source.compose(g, f).0];
            let got = fun
                .target
                .try_compose(fun.mor_map[g.0], fun.mor_map[f.0]);
            if got != Some(want) {
                return Err(CatError::CompositionNotPreserved { g, f });
            }
        }
        Ok(fun)
    }

    pub fn identity(cat: Arc<FinCat>) -> CatFunctor {
        let obj_map = cat.objects().collect();
        let mor_map = cat.morphisms().collect();
        CatFunctor {
            source: cat.clone(),
            target: cat,
            obj_map,
            mor_map,
        }
    }

    /// The diagonal `I → I × I`, `i ↦ (i, i)`.
    pub fn diagonal(cat: Arc<FinCat>, square: Arc<FinCat>) -> Result<CatFunctor, CatError> {
        let obj_map = cat
            .objects()
            .map(|i| pair_obj(cat.object_count(), i, i))
            .collect();
        let mor_map = cat
            .morphisms()
            .map(|m| pair_mor(cat.morphism_count(), m, m))
            .collect();
        CatFunctor::new(cat, square, obj_map, mor_map)
    }

    pub fn on_obj(&self, o: ObjId) -> ObjId {
        self.obj_map[o.0]
    }

    pub fn on_mor(&self, m: MorId) -> MorId {
        self.mor_map[m.0]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MorClass {
    Direct,
    Inverse,
}

/// A degree function plus a direct/inverse classification on a finite
/// category. The classification is a partial map on non-identity
/// morphisms: morphisms that are neither purely degree-raising nor
/// purely degree-lowering (mixed composites) stay unclassified and are
/// reached only through their unique (inverse, direct) factorization.
/// Identities count as both "direct-or-identity" and
/// "inverse-or-identity" wherever those predicates appear.
#[derive(Debug, Clone, PartialEq)]
pub struct ReedyData {
    pub base: Arc<FinCat>,
    degree: Vec<usize>,
    class: HashMap<MorId, MorClass>,
}

impl ReedyData {
    pub fn new(
        base: Arc<FinCat>,
        degree: Vec<usize>,
        classification: Vec<(MorId, MorClass)>,
    ) -> Result<ReedyData, CatError> {
        if degree.len() != base.object_count() {
            return Err(CatError::BadDegrees {
                got: degree.len(),
                want: base.object_count(),
            });
        }
        let mut class = HashMap::with_capacity(classification.len());
        for (m, c) in classification {
            if m.0 >= base.morphism_count() {
                return Err(CatError::BadMorphism(m.0));
            }
            if class.insert(m, c).is_some() {
                return Err(CatError::DuplicateClassification(m));
            }
        }
        Ok(ReedyData { base, degree, class })
    }

    pub fn degree(&self, o: ObjId) -> usize {
        self.degree[o.0]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    pub fn class_of(&self, m: MorId) -> Option<MorClass> {
        self.class.get(&m).copied()
    }

    pub fn classification(&self) -> Vec<(MorId, MorClass)> {
        let mut v: Vec<(MorId, MorClass)> = self.class.iter().map(|(&m, &c)| (m, c)).collect();
        v.sort();
        v
    }

    pub fn is_direct_or_identity(&self, m: MorId) -> bool {
        self.base.is_identity(m) || self.class_of(m) == Some(MorClass::Direct)
    }

    pub fn is_inverse_or_identity(&self, m: MorId) -> bool {
        self.base.is_identity(m) || self.class_of(m) == Some(MorClass::Inverse)
    }

    /// All factorizations `m = plus ∘ minus` with `minus`
    /// inverse-or-identity and `plus` direct-or-identity, found by
    /// exhaustive search over morphism pairs.
    pub fn factorizations(&self, m: MorId) -> Vec<(MorId, MorId)> {
        let mut out = Vec::new();
        for minus in self.base.morphisms() {
            if !self.is_inverse_or_identity(minus) || self.base.dom(minus) != self.base.dom(m) {
                continue;
            }
            for plus in self.base.morphisms() {
                if !self.is_direct_or_identity(plus) || self.base.cod(plus) != self.base.cod(m) {
                    continue;
                }
                if self.base.try_compose(plus, minus) == Some(m) {
                    out.push((plus, minus));
                }
            }
        }
        out
    }

    /// Exhaustive Reedy-axiom check; empty report iff this is a Reedy
    /// structure on a valid base.
    pub fn validate(&self) -> ReedyReport {
        let mut v = Vec::new();
        for (&m, &c) in self.class.iter() {
            if self.base.is_identity(m) {
                v.push(ReedyViolation::ClassifiedIdentity { m });
                continue;
            }
            let (d, cd) = (self.degree(self.base.dom(m)), self.degree(self.base.cod(m)));
            match c {
                MorClass::Direct if cd <= d => v.push(ReedyViolation::DirectNotRaising { m }),
                MorClass::Inverse if cd >= d => v.push(ReedyViolation::InverseNotLowering { m }),
                _ => {}
            }
        }
        for (g, f) in self.base.composable_pairs() {
            if let Some(gf) = self.base.try_compose(g, f) {
                if self.is_direct_or_identity(g)
                    && self.is_direct_or_identity(f)
                    && !self.is_direct_or_identity(gf)
                {
                    v.push(ReedyViolation::DirectNotClosed { g, f, composite: gf });
                }
                if self.is_inverse_or_identity(g)
                    && self.is_inverse_or_identity(f)
                    && !self.is_inverse_or_identity(gf)
                {
                    v.push(ReedyViolation::InverseNotClosed { g, f, composite: gf });
                }
            }
        }
        for m in self.base.morphisms() {
            let facts = self.factorizations(m);
            match facts.len() {
                1 => {}
                0 => v.push(ReedyViolation::NoFactorization { m }),
                n => v.push(ReedyViolation::AmbiguousFactorization { m, count: n }),
            }
        }
        v.sort();
        ReedyReport { violations: v }
    }

    /// Wide subcategory on direct-or-identity morphisms, with its
    /// inclusion into the base.
    pub fn direct_part(&self) -> Result<(Arc<FinCat>, CatFunctor), CatError> {
        self.wide_part(|m| self.is_direct_or_identity(m))
    }

    /// Wide subcategory on inverse-or-identity morphisms.
    pub fn inverse_part(&self) -> Result<(Arc<FinCat>, CatFunctor), CatError> {
        self.wide_part(|m| self.is_inverse_or_identity(m))
    }

    fn wide_part(
        &self,
        keep: impl Fn(MorId) -> bool,
    ) -> Result<(Arc<FinCat>, CatFunctor), CatError> {
        let base = &self.base;
        let kept: Vec<MorId> = base.morphisms().filter(|&m| keep(m)).collect();
        let old_to_new: HashMap<MorId, MorId> = kept
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, MorId(new)))
            .collect();
        let mors = kept
            .iter()
            .map(|&m| base.mor(m).clone())
            .collect::<Vec<_>>();
        let identities = base
            .objects()
            .map(|o| old_to_new[&base.identity(o)])
            .collect();
        let mut composition = Vec::new();
        for &g in &kept {
            for &f in &kept {
                if base.cod(f) != base.dom(g) {
                    continue;
                }
                let gf = base.compose(g, f);
                match old_to_new.get(&gf) {
                    Some(&new_gf) => {
                        composition.push((old_to_new[&g], old_to_new[&f], new_gf))
                    }
                    None => return Err(CatError::PartNotClosed { g, f }),
                }
            }
        }
        let labels = base.object_labels.clone();
        let sub = Arc::new(FinCat::new(labels, mors, identities, composition)?);
        let inclusion = CatFunctor::new(
            sub.clone(),
            base.clone(),
            base.objects().collect(),
            kept,
        )?;
        Ok((sub, inclusion))
    }

    /// Restriction of the Reedy data to its direct part (all non-identity
    /// morphisms there are direct).
    pub fn restrict_to_direct(&self) -> Result<(ReedyData, CatFunctor), CatError> {
        let (sub, incl) = self.direct_part()?;
        let class = sub
            .morphisms()
            .filter(|&m| !sub.is_identity(m))
            .map(|m| (m, MorClass::Direct))
            .collect();
        let data = ReedyData::new(sub, self.degree.clone(), class)?;
        Ok((data, incl))
    }

    /// True when every non-identity morphism is direct (so the inverse
    /// part is discrete).
    pub fn is_direct_category(&self) -> bool {
        self.base
            .morphisms()
            .all(|m| self.base.is_identity(m) || self.class_of(m) == Some(MorClass::Direct))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ReedyViolation {
    ClassifiedIdentity { m: MorId },
    DirectNotRaising { m: MorId },
    InverseNotLowering { m: MorId },
    DirectNotClosed { g: MorId, f: MorId, composite: MorId },
    InverseNotClosed { g: MorId, f: MorId, composite: MorId },
    NoFactorization { m: MorId },
    AmbiguousFactorization { m: MorId, count: usize },
}

impl fmt::Display for ReedyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReedyViolation::ClassifiedIdentity { m } => {
                write!(f, "identity morphism {m} carries a direct/inverse class")
            }
            ReedyViolation::DirectNotRaising { m } => {
                write!(f, "direct morphism {m} does not strictly raise degree")
            }
            ReedyViolation::InverseNotLowering { m } => {
                write!(f, "inverse morphism {m} does not strictly lower degree")
            }
            ReedyViolation::DirectNotClosed { g, f: ff, composite } => {
                write!(f, "direct composite ({g})∘({ff}) = {composite} is not direct")
            }
            ReedyViolation::InverseNotClosed { g, f: ff, composite } => {
                write!(f, "inverse composite ({g})∘({ff}) = {composite} is not inverse")
            }
            ReedyViolation::NoFactorization { m } => {
                write!(f, "morphism {m} has no (inverse, direct) factorization")
            }
            ReedyViolation::AmbiguousFactorization { m, count } => {
                write!(f, "morphism {m} has {count} (inverse, direct) factorizations")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReedyReport {
    pub violations: Vec<ReedyViolation>,
}

impl ReedyReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ReedyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            write!(f, "valid")
        } else {
            for v in &self.violations {
                writeln!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn walking_arrow_is_valid() {
        let c = fixtures::walking_arrow();
        assert!(c.validate().is_valid());
        assert_eq!(c.object_count(), 2);
        assert_eq!(c.morphism_count(), 3);
    }

    #[test]
    fn broken_unit_law_is_reported() {
        // one object, one extra endomorphism e with e∘id = id (wrong).
        let c = FinCat::new(
            vec!["x".into()],
            vec![
                MorData { dom: ObjId(0), cod: ObjId(0), label: "id".into() },
                MorData { dom: ObjId(0), cod: ObjId(0), label: "e".into() },
            ],
            vec![MorId(0)],
            vec![
                (MorId(0), MorId(0), MorId(0)),
                (MorId(1), MorId(0), MorId(0)), // e ∘ id = id: violates right unit
                (MorId(0), MorId(1), MorId(1)),
                (MorId(1), MorId(1), MorId(1)),
            ],
        )
        .unwrap();
        let report = c.validate();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, CatViolation::RightUnit { f, .. } if *f == MorId(1))));
    }

    #[test]
    fn commutative_square_is_valid() {
        let c = fixtures::commutative_square();
        assert!(c.validate().is_valid());
        assert_eq!(c.object_count(), 4);
        assert_eq!(c.morphism_count(), 9);
    }

    #[test]
    fn opposite_swaps_homs_and_is_involutive() {
        let c = fixtures::walking_arrow();
        let op = c.opposite();
        assert!(op.validate().is_valid());
        assert_eq!(op.hom(ObjId(1), ObjId(0)).len(), 1);
        assert_eq!(op.hom(ObjId(0), ObjId(1)).len(), 0);
        assert_eq!(op.opposite(), *c);

        let sq = fixtures::commutative_square();
        let sq_op = sq.opposite();
        for i in sq.objects() {
            for j in sq.objects() {
                assert_eq!(sq.hom(i, j).len(), sq_op.hom(j, i).len());
            }
        }
        assert_eq!(sq_op.opposite(), *sq);
    }

    #[test]
    fn opposite_of_discrete_is_identity() {
        let d = fixtures::discrete(3);
        assert_eq!(d.opposite(), *d);
    }

    #[test]
    fn product_of_walking_arrows() {
        let c = fixtures::walking_arrow();
        let p = c.product(&c).unwrap();
        assert!(p.validate().is_valid());
        assert_eq!(p.object_count(), 4);
        assert_eq!(p.morphism_count(), 9);
        // hom((a,a),(b,b)) = pairs of arrows a→b: exactly (f,f)
        let aa = pair_obj(2, ObjId(0), ObjId(0));
        let bb = pair_obj(2, ObjId(1), ObjId(1));
        assert_eq!(p.hom(aa, bb).len(), 1);
    }

    #[test]
    fn product_with_terminal_is_isomorphic() {
        let c = fixtures::commutative_square();
        let t = fixtures::terminal_cat();
        let p = c.product(&t).unwrap();
        assert_eq!(p.object_count(), c.object_count());
        assert_eq!(p.morphism_count(), c.morphism_count());
        for m in c.morphisms() {
            assert_eq!(p.dom(m), c.dom(m));
            assert_eq!(p.cod(m), c.cod(m));
        }
        for (g, f) in c.composable_pairs() {
            assert_eq!(p.compose(g, f), c.compose(g, f));
        }
    }

    #[test]
    fn functor_validation_catches_bad_composition() {
        let c = fixtures::walking_arrow();
        // collapse everything onto object a / its identity: fails typing for f
        let bad = CatFunctor::new(
            c.clone(),
            c.clone(),
            vec![ObjId(0), ObjId(0)],
            vec![MorId(0), MorId(0), MorId(2)],
        );
        assert!(bad.is_err());
        // constant functor at a is fine
        let constant = CatFunctor::new(
            c.clone(),
            c.clone(),
            vec![ObjId(0), ObjId(0)],
            vec![MorId(0), MorId(0), MorId(0)],
        );
        assert!(constant.is_ok());
    }

    #[test]
    fn walking_arrow_reedy_valid_and_inverse_variant_invalid() {
        let r = fixtures::walking_arrow_reedy();
        assert!(r.validate().is_valid());
        let c = fixtures::walking_arrow();
        let bad = ReedyData::new(
            c,
            vec![0, 1],
            vec![(MorId(2), MorClass::Inverse)],
        )
        .unwrap();
        let report = bad.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, ReedyViolation::InverseNotLowering { m } if *m == MorId(2))));
    }

    #[test]
    fn delta_op_le2_is_reedy() {
        let r = fixtures::delta_op_le2();
        let report = r.validate();
        assert!(report.is_valid(), "violations: {report}");
        // every morphism has exactly one (inverse, direct) factorization
        for m in r.base.morphisms() {
            assert_eq!(r.factorizations(m).len(), 1, "morphism {m}");
        }
    }

    #[test]
    fn direct_part_of_direct_category_is_whole() {
        let r = fixtures::walking_arrow_reedy();
        let (direct, _) = r.direct_part().unwrap();
        assert_eq!(direct.morphism_count(), r.base.morphism_count());
        let (inverse, _) = r.inverse_part().unwrap();
        assert_eq!(inverse.morphism_count(), r.base.object_count());
    }

    #[test]
    fn delta_op_le2_part_counts() {
        let r = fixtures::delta_op_le2();
        let (direct, _) = r.direct_part().unwrap();
        let (inverse, _) = r.inverse_part().unwrap();
        // mixed morphisms exist, so direct + inverse − identities < total
        let m = r.base.morphism_count();
        let overlap = r.base.object_count();
        assert!(direct.morphism_count() + inverse.morphism_count() - overlap < m);
        assert!(direct.validate().is_valid());
        assert!(inverse.validate().is_valid());
    }

    #[test]
    fn factorization_is_unique_and_degree_monotone() {
        let r = fixtures::delta_op_le2();
        for m in r.base.morphisms() {
            let facts = r.factorizations(m);
            assert_eq!(facts.len(), 1);
            let (plus, minus) = facts[0];
            assert!(r.degree(r.base.dom(plus)) <= r.degree(r.base.cod(plus)));
            assert!(r.degree(r.base.dom(minus)) >= r.degree(r.base.cod(minus)));
            if !r.base.is_identity(plus) {
                assert!(r.degree(r.base.dom(plus)) < r.degree(r.base.cod(plus)));
            }
            if !r.base.is_identity(minus) {
                assert!(r.degree(r.base.dom(minus)) > r.degree(r.base.cod(minus)));
            }
        }
    }
}
