//! Mapping objects `Map(X, Y) = ∫_i Y_i^{X_i}` and the natural
//! transformation enumeration oracle.
//!
//! In FinSet the indexing product of exponentials explodes (sizes like
//! `|Y|^{|X_i|}` with `|X_i|` in the hundreds), so the end is computed
//! as a constraint search over the element-level unknowns `f_i(x)`;
//! this never materializes an exponential carrier. The FinVect end goes
//! through the generic equalizer formula (dimensions add, not
//! multiply). [`nat_trans_enumerate`] is an independently written
//! brute-force route used to cross-check the search everywhere.

use super::{Diagram, DiagramError, NatTrans};
use crate::base::{self, BaseError, BaseMor, BaseObj, Backend, SetMor};
use crate::fincat::ObjId;
use crate::ratmat::{Rat, RatMat, SparseEchelon};
use num_traits::Zero;
use std::collections::HashMap;

/// The end `∫_i Y_i^{X_i}` together with enough structure to evaluate,
/// mediate, and act functorially on it.
#[derive(Debug, Clone)]
pub struct MappingObject {
    source: Diagram,
    target: Diagram,
    pub obj: BaseObj,
    kind: MapKind,
}

#[derive(Debug, Clone)]
enum MapKind {
    FinSet {
        /// Natural families in canonical (encoding-lexicographic) order.
        families: Vec<Vec<SetMor>>,
        index: HashMap<Vec<Vec<usize>>, usize>,
    },
    FinVect {
        /// Mono into `⊕_i Y_i^{X_i}` (flat layout, object order).
        mono: BaseMor,
        /// Projections to each `Y_i^{X_i}`.
        proj: Vec<BaseMor>,
    },
}

pub fn mapping_object(x: &Diagram, y: &Diagram) -> Result<MappingObject, DiagramError> {
    if !x.same_shape(y) {
        return Err(DiagramError::ShapeMismatch(
            "mapping object needs diagrams over one shape".into(),
        ));
    }
    if x.backend() != y.backend() {
        return Err(DiagramError::Base(BaseError::BackendMismatch(
            x.backend(),
            y.backend(),
        )));
    }
    match x.backend() {
        Backend::FinSet => {
            let families = search_families(x, y);
            let index = families
                .iter()
                .enumerate()
                .map(|(k, fam)| (family_key(fam), k))
                .collect();
            Ok(MappingObject {
                source: x.clone(),
                target: y.clone(),
                obj: BaseObj::set(families.len()),
                kind: MapKind::FinSet { families, index },
            })
        }
        Backend::FinVect => {
            let (mono, proj) = finvect_end_of_exponentials(x, y);
            Ok(MappingObject {
                source: x.clone(),
                target: y.clone(),
                obj: mono.dom(),
                kind: MapKind::FinVect { mono, proj },
            })
        }
    }
}

fn family_key(fam: &[SetMor]) -> Vec<Vec<usize>> {
    fam.iter().map(|m| m.table.clone()).collect()
}

/// Sort key realizing "lexicographic in component encodings": the
/// encoding `Σ f(e)·|Y|^e` makes the highest element index the most
/// significant digit, so reverse each table.
fn family_order_key(fam: &[SetMor]) -> Vec<Vec<usize>> {
    fam.iter()
        .map(|m| m.table.iter().rev().copied().collect())
        .collect()
}

impl MappingObject {
    pub fn source(&self) -> &Diagram {
        &self.source
    }

    pub fn target(&self) -> &Diagram {
        &self.target
    }

    /// Element count (FinSet) or dimension (FinVect).
    pub fn magnitude(&self) -> usize {
        self.obj.magnitude()
    }

    pub fn families(&self) -> &[Vec<SetMor>] {
        match &self.kind {
            MapKind::FinSet { families, .. } => families,
            MapKind::FinVect { .. } => panic!("families exist only in FinSet"),
        }
    }

    pub fn family(&self, k: usize) -> &[SetMor] {
        &self.families()[k]
    }

    /// The element of `Map(X, Y)` as an actual transformation `X → Y`.
    pub fn element_nat_trans(&self, k: usize) -> Result<NatTrans, DiagramError> {
        let components = self.family(k).iter().cloned().map(BaseMor::FinSet).collect();
        NatTrans::new(self.source.clone(), self.target.clone(), components)
    }

    pub fn index_of_components(&self, fam: &[SetMor]) -> Option<usize> {
        match &self.kind {
            MapKind::FinSet { index, .. } => index.get(&family_key(fam)).copied(),
            MapKind::FinVect { .. } => None,
        }
    }

    pub fn index_of_nat_trans(&self, n: &NatTrans) -> Option<usize> {
        let fam: Vec<SetMor> = n.components().iter().map(|c| c.as_set().clone()).collect();
        self.index_of_components(&fam)
    }

    /// `Map(X, Y) → Y_i`: evaluate the component at `i` on element (or
    /// basis vector) `e` of `X_i`. Avoids materializing exponentials.
    pub fn evaluate_at(&self, i: ObjId, e: usize) -> Result<BaseMor, DiagramError> {
        match &self.kind {
            MapKind::FinSet { families, .. } => {
                let table: Vec<usize> = families.iter().map(|fam| fam[i.0].table[e]).collect();
                Ok(BaseMor::FinSet(SetMor {
                    dom: families.len(),
                    cod: self.target.obj(i).magnitude(),
                    table,
                }))
            }
            MapKind::FinVect { proj, .. } => {
                let ev = base::eval_at(self.source.obj(i), self.target.obj(i), e)?;
                Ok(base::compose(&ev, &proj[i.0])?)
            }
        }
    }

    /// The projection `Map(X, Y) → Y_i^{X_i}`. In FinSet this
    /// materializes the exponential, so it errors when that is too big.
    pub fn proj(&self, i: ObjId) -> Result<BaseMor, DiagramError> {
        match &self.kind {
            MapKind::FinSet { families, .. } => {
                let n = self.source.obj(i).magnitude();
                let p = self.target.obj(i).magnitude();
                let total = base::checked_pow(p, n)?;
                let table: Vec<usize> = families
                    .iter()
                    .map(|fam| base::encode_function(&fam[i.0].table, p))
                    .collect();
                Ok(BaseMor::FinSet(SetMor {
                    dom: families.len(),
                    cod: total,
                    table,
                }))
            }
            MapKind::FinVect { proj, .. } => Ok(proj[i.0].clone()),
        }
    }

    /// Mediate a wedge `legs[i] : W → Y_i^{X_i}` through the end.
    pub fn mediate(
        &self,
        source: &BaseObj,
        legs: &[BaseMor],
    ) -> Result<Option<BaseMor>, DiagramError> {
        match &self.kind {
            MapKind::FinSet { index, .. } => {
                let mut table = Vec::with_capacity(source.magnitude());
                for w in 0..source.magnitude() {
                    let fam: Vec<SetMor> = self
                        .source
                        .shape()
                        .objects()
                        .map(|i| {
                            let n = self.source.obj(i).magnitude();
                            let p = self.target.obj(i).magnitude();
                            let enc = legs[i.0].as_set().table[w];
                            SetMor {
                                dom: n,
                                cod: p,
                                table: base::decode_function(enc, n, p),
                            }
                        })
                        .collect();
                    match index.get(&family_key(&fam)) {
                        Some(&k) => table.push(k),
                        None => return Ok(None),
                    }
                }
                Ok(Some(BaseMor::FinSet(SetMor {
                    dom: source.magnitude(),
                    cod: self.obj.magnitude(),
                    table,
                })))
            }
            MapKind::FinVect { mono, .. } => {
                let mut stacked = RatMat::zeros(0, source.magnitude());
                for l in legs {
                    stacked = stacked.vstack(l.as_mat());
                }
                Ok(base::factor_through_mono(
                    mono,
                    &BaseMor::FinVect(stacked),
                )?)
            }
        }
    }

    /// Functorial action in the contravariant slot: `u : X' → X` gives
    /// `Map(X, Y) → Map(X', Y)`; `target_map` must be `Map(X', Y)`.
    pub fn precompose(
        &self,
        u: &NatTrans,
        target_map: &MappingObject,
    ) -> Result<BaseMor, DiagramError> {
        match &self.kind {
            MapKind::FinSet { families, .. } => {
                let mut table = Vec::with_capacity(families.len());
                for fam in families {
                    let new_fam: Vec<SetMor> = fam
                        .iter()
                        .zip(u.components())
                        .map(|(f, c)| f.compose_after(c.as_set()))
                        .collect();
                    let k = target_map.index_of_components(&new_fam).ok_or_else(|| {
                        DiagramError::NotNatural(
                            "precomposed family is missing from the target end".into(),
                        )
                    })?;
                    table.push(k);
                }
                Ok(BaseMor::FinSet(SetMor {
                    dom: families.len(),
                    cod: target_map.obj.magnitude(),
                    table,
                }))
            }
            MapKind::FinVect { proj, .. } => {
                let legs = self
                    .source
                    .shape()
                    .objects()
                    .map(|i| {
                        let act =
                            base::exp_mor(u.component(i), &base::identity(self.target.obj(i)))?;
                        base::compose(&act, &proj[i.0])
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                target_map
                    .mediate(&self.obj, &legs)?
                    .ok_or_else(|| DiagramError::NotNatural("precompose failed to mediate".into()))
            }
        }
    }

    /// Functorial action in the covariant slot: `v : Y → Y'` gives
    /// `Map(X, Y) → Map(X, Y')`; `target_map` must be `Map(X, Y')`.
    pub fn postcompose(
        &self,
        v: &NatTrans,
        target_map: &MappingObject,
    ) -> Result<BaseMor, DiagramError> {
        match &self.kind {
            MapKind::FinSet { families, .. } => {
                let mut table = Vec::with_capacity(families.len());
                for fam in families {
                    let new_fam: Vec<SetMor> = fam
                        .iter()
                        .zip(v.components())
                        .map(|(f, c)| c.as_set().compose_after(f))
                        .collect();
                    let k = target_map.index_of_components(&new_fam).ok_or_else(|| {
                        DiagramError::NotNatural(
                            "postcomposed family is missing from the target end".into(),
                        )
                    })?;
                    table.push(k);
                }
                Ok(BaseMor::FinSet(SetMor {
                    dom: families.len(),
                    cod: target_map.obj.magnitude(),
                    table,
                }))
            }
            MapKind::FinVect { proj, .. } => {
                let legs = self
                    .source
                    .shape()
                    .objects()
                    .map(|i| {
                        let act =
                            base::exp_mor(&base::identity(self.source.obj(i)), v.component(i))?;
                        base::compose(&act, &proj[i.0])
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                target_map
                    .mediate(&self.obj, &legs)?
                    .ok_or_else(|| DiagramError::NotNatural("postcompose failed to mediate".into()))
            }
        }
    }
}

/// Flat layout of the element-level unknowns `f_i(x)`.
struct Layout {
    offsets: Vec<usize>,
    obj_of: Vec<ObjId>,
    total: usize,
}

fn layout(x: &Diagram) -> Layout {
    let mut offsets = Vec::with_capacity(x.shape().object_count());
    let mut obj_of = Vec::new();
    let mut total = 0;
    for i in x.shape().objects() {
        offsets.push(total);
        let n = x.obj(i).magnitude();
        for _ in 0..n {
            obj_of.push(i);
        }
        total += n;
    }
    Layout {
        offsets,
        obj_of,
        total,
    }
}

/// The FinVect end of the exponential bifunctor, solved as a sparse
/// linear system over the entries of the component matrices: for every
/// morphism `θ : i → j`, the constraint `f_j · X(θ) = Y(θ) · f_i` adds
/// one row per codomain/domain basis pair. Returns the mono into the
/// flat sum `⊕_i Y_i^{X_i}` and the projections.
fn finvect_end_of_exponentials(x: &Diagram, y: &Diagram) -> (BaseMor, Vec<BaseMor>) {
    let shape = x.shape().clone();
    let mut offsets = Vec::with_capacity(shape.object_count());
    let mut total = 0usize;
    for i in shape.objects() {
        offsets.push(total);
        total += x.obj(i).magnitude() * y.obj(i).magnitude();
    }
    // entry f_i[r, c] lives at offsets[i] + r·x_i + c, matching the
    // row-major exponential basis convention
    let slot = |i: ObjId, r: usize, c: usize, x: &Diagram| -> usize {
        offsets[i.0] + r * x.obj(i).magnitude() + c
    };
    let mut ech = SparseEchelon::new(total);
    // constraints for composites follow from their factors, so a
    // generating set suffices; identical equations still repeat across
    // generators, so rows are deduplicated before reduction
    let mut seen: HashMap<Vec<(usize, Rat)>, ()> = HashMap::new();
    let mut terms: Vec<(usize, Rat)> = Vec::new();
    for m in shape.generating_morphisms() {
        let (i, j) = (shape.dom(m), shape.cod(m));
        let s = x.mor(m).as_mat(); // X(θ) : x_i → x_j
        let t = y.mor(m).as_mat(); // Y(θ) : y_i → y_j
        let (x_i, x_j) = (x.obj(i).magnitude(), x.obj(j).magnitude());
        let (y_i, y_j) = (y.obj(i).magnitude(), y.obj(j).magnitude());
        let _ = (x_j, y_i);
        for rp in 0..y_j {
            for a in 0..x_i {
                terms.clear();
                for b in 0..x.obj(j).magnitude() {
                    let v = s.at(b, a);
                    if !v.is_zero() {
                        terms.push((slot(j, rp, b, x), v.clone()));
                    }
                }
                for r in 0..y.obj(i).magnitude() {
                    let v = t.at(rp, r);
                    if !v.is_zero() {
                        terms.push((slot(i, r, a, x), -v.clone()));
                    }
                }
                terms.sort_by_key(|(c, _)| *c);
                if seen.insert(terms.clone(), ()).is_none() {
                    ech.insert(&terms);
                }
            }
        }
    }
    let kernel = ech.kernel();
    let dim = kernel.cols();
    let proj = shape
        .objects()
        .map(|i| {
            let rows = x.obj(i).magnitude() * y.obj(i).magnitude();
            let mut m = RatMat::zeros(rows, dim);
            for r in 0..rows {
                for c in 0..dim {
                    let v = kernel.at(offsets[i.0] + r, c);
                    if !v.is_zero() {
                        m.set(r, c, v.clone());
                    }
                }
            }
            BaseMor::FinVect(m)
        })
        .collect();
    (BaseMor::FinVect(kernel), proj)
}

/// Depth-first search with forward constraint propagation. Whenever
/// `f_i(a)` receives a value, every morphism `θ : i → j` forces
/// `f_j(X(θ)(a)) = Y(θ)(f_i(a))`; forced values propagate transitively
/// and conflicts backtrack. Every constraint is eventually enforced
/// because each one is triggered by its source unknown.
fn search_families(x: &Diagram, y: &Diagram) -> Vec<Vec<SetMor>> {
    let lay = layout(x);
    let shape = x.shape().clone();
    let unassigned = usize::MAX;
    // constraints grouped by source object
    let mut forward: Vec<Vec<(usize, &[usize], &[usize])>> =
        vec![Vec::new(); shape.object_count()];
    for m in shape.morphisms() {
        if shape.is_identity(m) {
            continue;
        }
        let (i, j) = (shape.dom(m), shape.cod(m));
        forward[i.0].push((
            j.0,
            x.mor(m).as_set().table.as_slice(),
            y.mor(m).as_set().table.as_slice(),
        ));
    }
    let mut assign = vec![unassigned; lay.total];
    let mut trail: Vec<usize> = Vec::new();
    let mut out: Vec<Vec<SetMor>> = Vec::new();

    struct Ctx<'a> {
        lay: &'a Layout,
        forward: &'a [Vec<(usize, &'a [usize], &'a [usize])>],
        y_sizes: Vec<usize>,
    }
    let ctx = Ctx {
        lay: &lay,
        forward: &forward,
        y_sizes: shape.objects().map(|i| y.obj(i).magnitude()).collect(),
    };

    fn propagate(
        ctx: &Ctx,
        assign: &mut [usize],
        trail: &mut Vec<usize>,
        start: usize,
    ) -> bool {
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            let i = ctx.lay.obj_of[u].0;
            let a = u - ctx.lay.offsets[i];
            let v = assign[u];
            for &(j, xt, yt) in &ctx.forward[i] {
                let target = ctx.lay.offsets[j] + xt[a];
                let want = yt[v];
                if assign[target] == usize::MAX {
                    assign[target] = want;
                    trail.push(target);
                    queue.push(target);
                } else if assign[target] != want {
                    return false;
                }
            }
        }
        true
    }

    fn dfs(
        ctx: &Ctx,
        assign: &mut [usize],
        trail: &mut Vec<usize>,
        mut pos: usize,
        out: &mut Vec<Vec<SetMor>>,
        x: &Diagram,
        y: &Diagram,
    ) {
        while pos < ctx.lay.total && assign[pos] != usize::MAX {
            pos += 1;
        }
        if pos == ctx.lay.total {
            out.push(extract_family(ctx.lay, assign, x, y));
            return;
        }
        let i = ctx.lay.obj_of[pos].0;
        for v in 0..ctx.y_sizes[i] {
            let mark = trail.len();
            assign[pos] = v;
            trail.push(pos);
            if propagate(ctx, assign, trail, pos) {
                dfs(ctx, assign, trail, pos + 1, out, x, y);
            }
            while trail.len() > mark {
                let u = trail.pop().unwrap();
                assign[u] = usize::MAX;
            }
        }
    }

    fn extract_family(lay: &Layout, assign: &[usize], x: &Diagram, y: &Diagram) -> Vec<SetMor> {
        x.shape()
            .objects()
            .map(|i| {
                let n = x.obj(i).magnitude();
                let off = lay.offsets[i.0];
                SetMor {
                    dom: n,
                    cod: y.obj(i).magnitude(),
                    table: (0..n).map(|a| assign[off + a]).collect(),
                }
            })
            .collect()
    }

    dfs(&ctx, &mut assign, &mut trail, 0, &mut out, x, y);
    out.sort_by_key(|fam| family_order_key(fam));
    out
}

/// Independent oracle: enumerate all natural transformations `X → Y`
/// by plain backtracking over element values, checking each naturality
/// instance as soon as both of its endpoints are assigned. No
/// propagation; separate code path from [`mapping_object`].
pub fn nat_trans_enumerate(x: &Diagram, y: &Diagram) -> Result<Vec<NatTrans>, DiagramError> {
    if !x.same_shape(y) {
        return Err(DiagramError::ShapeMismatch(
            "enumeration needs diagrams over one shape".into(),
        ));
    }
    if x.backend() != Backend::FinSet || y.backend() != Backend::FinSet {
        return Err(DiagramError::Base(BaseError::OracleUnavailable(
            "natural transformation enumeration requires the FinSet backend".into(),
        )));
    }
    let lay = layout(x);
    let shape = x.shape().clone();
    // all (source unknown, target unknown, y-table) naturality instances
    // one naturality instance: require assign[dst] = y_table[assign[src]]
    struct Instance {
        src: usize,
        dst: usize,
        y_table: Vec<usize>,
    }
    let mut instances: Vec<Instance> = Vec::new();
    for m in shape.morphisms() {
        if shape.is_identity(m) {
            continue;
        }
        let (i, j) = (shape.dom(m), shape.cod(m));
        let xt = &x.mor(m).as_set().table;
        let yt = &y.mor(m).as_set().table;
        for a in 0..x.obj(i).magnitude() {
            instances.push(Instance {
                src: lay.offsets[i.0] + a,
                dst: lay.offsets[j.0] + xt[a],
                y_table: yt.clone(),
            });
        }
    }
    // index instances by the later of their two endpoints in flat order
    let mut by_trigger: Vec<Vec<usize>> = vec![Vec::new(); lay.total.max(1)];
    for (k, inst) in instances.iter().enumerate() {
        let trigger = inst.src.max(inst.dst);
        by_trigger[trigger].push(k);
    }
    let y_sizes: Vec<usize> = shape.objects().map(|i| y.obj(i).magnitude()).collect();
    let mut assign = vec![usize::MAX; lay.total];
    let mut families: Vec<Vec<SetMor>> = Vec::new();

    fn rec(
        pos: usize,
        lay: &Layout,
        y_sizes: &[usize],
        instances: &[Instance],
        by_trigger: &[Vec<usize>],
        assign: &mut [usize],
        x: &Diagram,
        y: &Diagram,
        families: &mut Vec<Vec<SetMor>>,
    ) {
        if pos == lay.total {
            let fam: Vec<SetMor> = x
                .shape()
                .objects()
                .map(|i| {
                    let n = x.obj(i).magnitude();
                    let off = lay.offsets[i.0];
                    SetMor {
                        dom: n,
                        cod: y.obj(i).magnitude(),
                        table: (0..n).map(|a| assign[off + a]).collect(),
                    }
                })
                .collect();
            families.push(fam);
            return;
        }
        let i = lay.obj_of[pos].0;
        'outer: for v in 0..y_sizes[i] {
            assign[pos] = v;
            for &k in &by_trigger[pos] {
                let inst = &instances[k];
                if assign[inst.src] == usize::MAX || assign[inst.dst] == usize::MAX {
                    continue;
                }
                if assign[inst.dst] != inst.y_table[assign[inst.src]] {
                    assign[pos] = usize::MAX;
                    continue 'outer;
                }
            }
            rec(pos + 1, lay, y_sizes, instances, by_trigger, assign, x, y, families);
            assign[pos] = usize::MAX;
        }
    }

    rec(
        0,
        &lay,
        &y_sizes,
        &instances,
        &by_trigger,
        &mut assign,
        x,
        y,
        &mut families,
    );
    families.sort_by_key(|fam| family_order_key(fam));
    families
        .into_iter()
        .map(|fam| {
            NatTrans::new(
                x.clone(),
                y.clone(),
                fam.into_iter().map(BaseMor::FinSet).collect(),
            )
        })
        .collect()
}
