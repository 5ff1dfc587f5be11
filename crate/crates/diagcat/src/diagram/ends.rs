//! Ends, coends, and diagram-level (co)limits.
//!
//! Ends are equalizers of `∏_i t(i,i) ⇉ ∏_θ t(dom θ, cod θ)` and coends
//! the dual coequalizers, indexed by every morphism of the category
//! (composition tables are total, so no generator inference happens).
//! Indexing order is identifier order throughout, which makes all the
//! mediating morphisms canonical.

use super::{Diagram, DiagramError, NatTrans};
use crate::base::{
    self, coequalizer, coproduct, equalizer, factor_through_epi, factor_through_mono, product,
    pullback, pushout, BaseMor, BaseObj, Cocone, Cone, Pullback, Pushout,
};
use crate::fincat::{pair_mor, pair_obj, FinCat, MorId, ObjId};
use std::sync::Arc;

/// A functor `I^op × I → M`, stored as a diagram over the product of
/// the opposite with the category itself.
#[derive(Debug, Clone)]
pub struct Bifunctor {
    base_cat: Arc<FinCat>,
    diagram: Diagram,
}

impl Bifunctor {
    /// Wrap a diagram over `opposite(base) × base`.
    pub fn new(base_cat: Arc<FinCat>, diagram: Diagram) -> Result<Bifunctor, DiagramError> {
        let expected = base_cat.opposite().product(&base_cat)?;
        if **diagram.shape() != expected {
            return Err(DiagramError::ShapeMismatch(
                "bifunctor shape must be opposite(I) × I".into(),
            ));
        }
        Ok(Bifunctor { base_cat, diagram })
    }

    /// Build from value and action callbacks; `act(θ, ψ)` must give the
    /// morphism `t(cod θ, dom ψ) → t(dom θ, cod ψ)` for `θ : i → i'`,
    /// `ψ : j → j'` of the base category.
    pub fn from_fn(
        base_cat: Arc<FinCat>,
        mut value: impl FnMut(ObjId, ObjId) -> Result<BaseObj, DiagramError>,
        mut act: impl FnMut(MorId, MorId) -> Result<BaseMor, DiagramError>,
    ) -> Result<Bifunctor, DiagramError> {
        let shape = Arc::new(base_cat.opposite().product(&base_cat)?);
        let n = base_cat.object_count();
        let mut at_obj = Vec::with_capacity(n * n);
        for i in base_cat.objects() {
            for j in base_cat.objects() {
                at_obj.push(value(i, j)?);
            }
        }
        let m = base_cat.morphism_count();
        let mut at_mor = Vec::with_capacity(m * m);
        for theta in base_cat.morphisms() {
            for psi in base_cat.morphisms() {
                at_mor.push(act(theta, psi)?);
            }
        }
        let diagram = Diagram::new(shape, at_obj, at_mor)?;
        Ok(Bifunctor { base_cat, diagram })
    }

    pub fn base_cat(&self) -> &Arc<FinCat> {
        &self.base_cat
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn at(&self, i: ObjId, j: ObjId) -> &BaseObj {
        self.diagram
            .obj(pair_obj(self.base_cat.object_count(), i, j))
    }

    /// Action on a pair `(θ : i → i', ψ : j → j')`: the morphism
    /// `t(i', j) → t(i, j')` (contravariant in the first slot).
    pub fn act(&self, theta: MorId, psi: MorId) -> &BaseMor {
        self.diagram
            .mor(pair_mor(self.base_cat.morphism_count(), theta, psi))
    }

    /// The exponential bifunctor `(i, j) ↦ Y_j^{X_i}` of two parallel
    /// diagrams.
    pub fn exponential(x: &Diagram, y: &Diagram) -> Result<Bifunctor, DiagramError> {
        if !x.same_shape(y) {
            return Err(DiagramError::ShapeMismatch(
                "exponential bifunctor needs diagrams over one shape".into(),
            ));
        }
        let cat = x.shape().clone();
        Bifunctor::from_fn(
            cat,
            |i, j| Ok(base::exponential(x.obj(i), y.obj(j))?),
            |theta, psi| Ok(base::exp_mor(x.mor(theta), y.mor(psi))?),
        )
    }
}

/// An end with its projections `π_i : obj → t(i, i)` and the mono into
/// the indexing product (for mediating).
#[derive(Debug, Clone)]
pub struct End {
    pub obj: BaseObj,
    pub proj: Vec<BaseMor>,
    mono: BaseMor,
    prod: Cone,
}

impl End {
    /// Mediate a wedge `legs[i] : source → t(i, i)` through the end;
    /// `None` when the wedge fails dinaturality.
    pub fn mediate(&self, source: &BaseObj, legs: &[BaseMor]) -> Result<Option<BaseMor>, DiagramError> {
        let combined = self.prod.mediate(source, legs)?;
        Ok(factor_through_mono(&self.mono, &combined)?)
    }
}

/// End of a bifunctor: the equalizer of the two canonical maps from
/// `∏_i t(i,i)` to `∏_θ t(dom θ, cod θ)`.
pub fn end(t: &Bifunctor) -> Result<End, DiagramError> {
    let cat = t.base_cat();
    let backend = t.diagram().backend();
    let diag_objs: Vec<BaseObj> = cat.objects().map(|i| *t.at(i, i)).collect();
    let prod = product(&diag_objs, backend)?;
    let mor_objs: Vec<BaseObj> = cat
        .morphisms()
        .map(|m| *t.at(cat.dom(m), cat.cod(m)))
        .collect();
    let target = product(&mor_objs, backend)?;
    let mut lhs_legs = Vec::with_capacity(mor_objs.len());
    let mut rhs_legs = Vec::with_capacity(mor_objs.len());
    for m in cat.morphisms() {
        let (i, j) = (cat.dom(m), cat.cod(m));
        // t(id_i, θ) ∘ π_i  and  t(θ, id_j) ∘ π_j
        let post = t.act(cat.identity(i), m);
        let pre = t.act(m, cat.identity(j));
        lhs_legs.push(base::compose(post, &prod.legs[i.0])?);
        rhs_legs.push(base::compose(pre, &prod.legs[j.0])?);
    }
    let lhs = target.mediate(&prod.apex, &lhs_legs)?;
    let rhs = target.mediate(&prod.apex, &rhs_legs)?;
    let eq = equalizer(&lhs, &rhs)?;
    let proj = prod
        .legs
        .iter()
        .map(|p| base::compose(p, &eq.include))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(End {
        obj: eq.obj,
        proj,
        mono: eq.include,
        prod,
    })
}

/// A coend with its injections `ι_i : t(i, i) → obj` and the epi from
/// the indexing coproduct.
#[derive(Debug, Clone)]
pub struct Coend {
    pub obj: BaseObj,
    pub inj: Vec<BaseMor>,
    epi: BaseMor,
    sum: Cocone,
}

impl Coend {
    pub(crate) fn from_parts(obj: BaseObj, inj: Vec<BaseMor>, epi: BaseMor, sum: Cocone) -> Coend {
        Coend { obj, inj, epi, sum }
    }

    /// Mediate a co-wedge `legs[i] : t(i, i) → target` through the
    /// coend; `None` when the co-wedge is incompatible.
    pub fn mediate(
        &self,
        legs: &[BaseMor],
        target: &BaseObj,
    ) -> Result<Option<BaseMor>, DiagramError> {
        let combined = self.sum.mediate(legs, target)?;
        Ok(factor_through_epi(&self.epi, &combined)?)
    }
}

/// Coend of a bifunctor: the coequalizer of
/// `∐_θ t(cod θ, dom θ) ⇉ ∐_i t(i,i)`.
pub fn coend(t: &Bifunctor) -> Result<Coend, DiagramError> {
    let cat = t.base_cat();
    let backend = t.diagram().backend();
    let diag_objs: Vec<BaseObj> = cat.objects().map(|i| *t.at(i, i)).collect();
    let sum = coproduct(&diag_objs, backend)?;
    let mor_objs: Vec<BaseObj> = cat
        .morphisms()
        .map(|m| *t.at(cat.cod(m), cat.dom(m)))
        .collect();
    let source = coproduct(&mor_objs, backend)?;
    let mut lhs_legs = Vec::with_capacity(mor_objs.len());
    let mut rhs_legs = Vec::with_capacity(mor_objs.len());
    for m in cat.morphisms() {
        let (i, j) = (cat.dom(m), cat.cod(m));
        // t(θ, id_i) : t(j, i) → t(i, i)  and  t(id_j, θ) : t(j, i) → t(j, j)
        let to_i = t.act(m, cat.identity(i));
        let to_j = t.act(cat.identity(j), m);
        lhs_legs.push(base::compose(&sum.legs[i.0], to_i)?);
        rhs_legs.push(base::compose(&sum.legs[j.0], to_j)?);
    }
    let lhs = source.mediate(&lhs_legs, &sum.apex)?;
    let rhs = source.mediate(&rhs_legs, &sum.apex)?;
    let coeq = coequalizer(&lhs, &rhs)?;
    let inj = sum
        .legs
        .iter()
        .map(|l| base::compose(&coeq.project, l))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Coend {
        obj: coeq.obj,
        inj,
        epi: coeq.project,
        sum,
    })
}

/// A colimit of a diagram with its injections and mediator.
#[derive(Debug, Clone)]
pub struct DiagColimit {
    pub obj: BaseObj,
    pub inj: Vec<BaseMor>,
    epi: BaseMor,
    sum: Cocone,
}

impl DiagColimit {
    pub fn mediate(
        &self,
        legs: &[BaseMor],
        target: &BaseObj,
    ) -> Result<Option<BaseMor>, DiagramError> {
        let combined = self.sum.mediate(legs, target)?;
        Ok(factor_through_epi(&self.epi, &combined)?)
    }
}

/// Colimit over the whole shape: coequalizer of
/// `∐_θ X_{dom θ} ⇉ ∐_i X_i`.
pub fn colimit(d: &Diagram) -> Result<DiagColimit, DiagramError> {
    let cat = d.shape().clone();
    let backend = d.backend();
    let sum = coproduct(d.objects(), backend)?;
    let mor_objs: Vec<BaseObj> = cat.morphisms().map(|m| *d.obj(cat.dom(m))).collect();
    let source = coproduct(&mor_objs, backend)?;
    let mut lhs_legs = Vec::with_capacity(mor_objs.len());
    let mut rhs_legs = Vec::with_capacity(mor_objs.len());
    for m in cat.morphisms() {
        let (i, j) = (cat.dom(m), cat.cod(m));
        lhs_legs.push(sum.legs[i.0].clone());
        rhs_legs.push(base::compose(&sum.legs[j.0], d.mor(m))?);
    }
    let lhs = source.mediate(&lhs_legs, &sum.apex)?;
    let rhs = source.mediate(&rhs_legs, &sum.apex)?;
    let coeq = coequalizer(&lhs, &rhs)?;
    let inj = sum
        .legs
        .iter()
        .map(|l| base::compose(&coeq.project, l))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DiagColimit {
        obj: coeq.obj,
        inj,
        epi: coeq.project,
        sum,
    })
}

/// A limit with its projections and mediator.
#[derive(Debug, Clone)]
pub struct DiagLimit {
    pub obj: BaseObj,
    pub proj: Vec<BaseMor>,
    mono: BaseMor,
    prod: Cone,
}

impl DiagLimit {
    pub fn mediate(
        &self,
        source: &BaseObj,
        legs: &[BaseMor],
    ) -> Result<Option<BaseMor>, DiagramError> {
        let combined = self.prod.mediate(source, legs)?;
        Ok(factor_through_mono(&self.mono, &combined)?)
    }
}

/// Limit over the whole shape: equalizer of `∏_i X_i ⇉ ∏_θ X_{cod θ}`.
pub fn limit(d: &Diagram) -> Result<DiagLimit, DiagramError> {
    let cat = d.shape().clone();
    let backend = d.backend();
    let prod = product(d.objects(), backend)?;
    let mor_objs: Vec<BaseObj> = cat.morphisms().map(|m| *d.obj(cat.cod(m))).collect();
    let target = product(&mor_objs, backend)?;
    let mut lhs_legs = Vec::with_capacity(mor_objs.len());
    let mut rhs_legs = Vec::with_capacity(mor_objs.len());
    for m in cat.morphisms() {
        let (i, j) = (cat.dom(m), cat.cod(m));
        lhs_legs.push(base::compose(d.mor(m), &prod.legs[i.0])?);
        rhs_legs.push(prod.legs[j.0].clone());
    }
    let lhs = target.mediate(&prod.apex, &lhs_legs)?;
    let rhs = target.mediate(&prod.apex, &rhs_legs)?;
    let eq = equalizer(&lhs, &rhs)?;
    let proj = prod
        .legs
        .iter()
        .map(|p| base::compose(p, &eq.include))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DiagLimit {
        obj: eq.obj,
        proj,
        mono: eq.include,
        prod,
    })
}

/// Objectwise pushout of a span of transformations with a common
/// source, with its cocone legs and a mediator for competing cocones.
#[derive(Debug, Clone)]
pub struct DiagPushout {
    pub apex: Diagram,
    pub from_left: NatTrans,
    pub from_right: NatTrans,
    span_left: NatTrans,
    span_right: NatTrans,
    per_obj: Vec<Pushout>,
}

impl DiagPushout {
    /// The induced transformation to a competing cocone `(left, right)`.
    pub fn mediate(&self, left: &NatTrans, right: &NatTrans) -> Result<NatTrans, DiagramError> {
        let shape = self.apex.shape().clone();
        let components = shape
            .objects()
            .map(|o| {
                self.per_obj[o.0]
                    .mediate(
                        self.span_left.component(o),
                        self.span_right.component(o),
                        left.component(o),
                        right.component(o),
                    )?
                    .ok_or_else(|| {
                        DiagramError::Typing("cocone does not commute with the span".into())
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        NatTrans::new(self.apex.clone(), left.target().clone(), components)
    }
}

pub fn pushout_diagrams(f: &NatTrans, g: &NatTrans) -> Result<DiagPushout, DiagramError> {
    if f.source() != g.source() {
        return Err(DiagramError::Typing("pushout span needs a common source".into()));
    }
    let shape = f.source().shape().clone();
    let mut pushouts = Vec::with_capacity(shape.object_count());
    for o in shape.objects() {
        pushouts.push(pushout(f.component(o), g.component(o))?);
    }
    let at_obj: Vec<BaseObj> = pushouts.iter().map(|p| p.obj).collect();
    let mut at_mor = Vec::with_capacity(shape.morphism_count());
    for m in shape.morphisms() {
        let (i, j) = (shape.dom(m), shape.cod(m));
        let left = base::compose(&pushouts[j.0].from_left, f.target().mor(m))?;
        let right = base::compose(&pushouts[j.0].from_right, g.target().mor(m))?;
        let mediated = pushouts[i.0]
            .mediate(f.component(i), g.component(i), &left, &right)?
            .ok_or_else(|| {
                DiagramError::NotFunctorial("pushout structure map failed to mediate".into())
            })?;
        at_mor.push(mediated);
    }
    let apex = Diagram::new(shape, at_obj, at_mor)?;
    let from_left = NatTrans::new(
        f.target().clone(),
        apex.clone(),
        pushouts.iter().map(|p| p.from_left.clone()).collect(),
    )?;
    let from_right = NatTrans::new(
        g.target().clone(),
        apex.clone(),
        pushouts.iter().map(|p| p.from_right.clone()).collect(),
    )?;
    Ok(DiagPushout {
        apex,
        from_left,
        from_right,
        span_left: f.clone(),
        span_right: g.clone(),
        per_obj: pushouts,
    })
}

/// Objectwise pullback of a cospan with a common target, with its cone
/// legs and a mediator for competing cones.
#[derive(Debug, Clone)]
pub struct DiagPullback {
    pub apex: Diagram,
    pub to_left: NatTrans,
    pub to_right: NatTrans,
    cospan_left: NatTrans,
    cospan_right: NatTrans,
    per_obj: Vec<Pullback>,
}

impl DiagPullback {
    /// The induced transformation from a competing cone `(left, right)`.
    pub fn mediate(&self, left: &NatTrans, right: &NatTrans) -> Result<NatTrans, DiagramError> {
        let shape = self.apex.shape().clone();
        let components = shape
            .objects()
            .map(|o| {
                self.per_obj[o.0]
                    .mediate(
                        self.cospan_left.component(o),
                        self.cospan_right.component(o),
                        left.component(o),
                        right.component(o),
                    )?
                    .ok_or_else(|| {
                        DiagramError::Typing("cone does not commute with the cospan".into())
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        NatTrans::new(left.source().clone(), self.apex.clone(), components)
    }
}

pub fn pullback_diagrams(f: &NatTrans, g: &NatTrans) -> Result<DiagPullback, DiagramError> {
    if f.target() != g.target() {
        return Err(DiagramError::Typing("pullback cospan needs a common target".into()));
    }
    let shape = f.source().shape().clone();
    let mut pullbacks = Vec::with_capacity(shape.object_count());
    for o in shape.objects() {
        pullbacks.push(pullback(f.component(o), g.component(o))?);
    }
    let at_obj: Vec<BaseObj> = pullbacks.iter().map(|p| p.obj).collect();
    let mut at_mor = Vec::with_capacity(shape.morphism_count());
    for m in shape.morphisms() {
        let (i, j) = (shape.dom(m), shape.cod(m));
        let left = base::compose(f.source().mor(m), &pullbacks[i.0].to_left)?;
        let right = base::compose(g.source().mor(m), &pullbacks[i.0].to_right)?;
        let mediated = pullbacks[j.0]
            .mediate(f.component(j), g.component(j), &left, &right)?
            .ok_or_else(|| {
                DiagramError::NotFunctorial("pullback structure map failed to mediate".into())
            })?;
        at_mor.push(mediated);
    }
    let apex = Diagram::new(shape, at_obj, at_mor)?;
    let to_left = NatTrans::new(
        apex.clone(),
        f.source().clone(),
        pullbacks.iter().map(|p| p.to_left.clone()).collect(),
    )?;
    let to_right = NatTrans::new(
        apex.clone(),
        g.source().clone(),
        pullbacks.iter().map(|p| p.to_right.clone()).collect(),
    )?;
    Ok(DiagPullback {
        apex,
        to_left,
        to_right,
        cospan_left: f.clone(),
        cospan_right: g.clone(),
        per_obj: pullbacks,
    })
}

/// Objectwise coproduct of diagrams with its injections.
pub fn coproduct_diagrams(xs: &[Diagram]) -> Result<(Diagram, Vec<NatTrans>), DiagramError> {
    let Some(first) = xs.first() else {
        return Err(DiagramError::Typing("coproduct of no diagrams needs a shape".into()));
    };
    let shape = first.shape().clone();
    let backend = first.backend();
    for x in xs {
        if !x.same_shape(first) {
            return Err(DiagramError::ShapeMismatch("coproduct over mixed shapes".into()));
        }
    }
    let mut cocones = Vec::with_capacity(shape.object_count());
    for o in shape.objects() {
        let objs: Vec<BaseObj> = xs.iter().map(|x| *x.obj(o)).collect();
        cocones.push(coproduct(&objs, backend)?);
    }
    let at_obj: Vec<BaseObj> = cocones.iter().map(|c| c.apex).collect();
    let mut at_mor = Vec::with_capacity(shape.morphism_count());
    for m in shape.morphisms() {
        let (i, j) = (shape.dom(m), shape.cod(m));
        let legs: Vec<BaseMor> = xs
            .iter()
            .enumerate()
            .map(|(k, x)| base::compose(&cocones[j.0].legs[k], x.mor(m)))
            .collect::<Result<Vec<_>, _>>()?;
        at_mor.push(cocones[i.0].mediate(&legs, &cocones[j.0].apex)?);
    }
    let apex = Diagram::new(shape.clone(), at_obj, at_mor)?;
    let injections = xs
        .iter()
        .enumerate()
        .map(|(k, x)| {
            NatTrans::new(
                x.clone(),
                apex.clone(),
                cocones.iter().map(|c| c.legs[k].clone()).collect(),
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((apex, injections))
}

/// Objectwise coequalizer of a parallel pair of transformations.
pub fn coequalize_diagrams(
    u: &NatTrans,
    v: &NatTrans,
) -> Result<(Diagram, NatTrans), DiagramError> {
    if u.source() != v.source() || u.target() != v.target() {
        return Err(DiagramError::Typing("coequalizer needs a parallel pair".into()));
    }
    let shape = u.source().shape().clone();
    let mut coeqs = Vec::with_capacity(shape.object_count());
    for o in shape.objects() {
        coeqs.push(coequalizer(u.component(o), v.component(o))?);
    }
    let at_obj: Vec<BaseObj> = coeqs.iter().map(|c| c.obj).collect();
    let mut at_mor = Vec::with_capacity(shape.morphism_count());
    for m in shape.morphisms() {
        let (i, j) = (shape.dom(m), shape.cod(m));
        let leg = base::compose(&coeqs[j.0].project, u.target().mor(m))?;
        let mediated = factor_through_epi(&coeqs[i.0].project, &leg)?.ok_or_else(|| {
            DiagramError::NotFunctorial("coequalizer structure map failed to mediate".into())
        })?;
        at_mor.push(mediated);
    }
    let apex = Diagram::new(shape, at_obj, at_mor)?;
    let project = NatTrans::new(
        u.target().clone(),
        apex.clone(),
        coeqs.iter().map(|c| c.project.clone()).collect(),
    )?;
    Ok((apex, project))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::Backend;
    use crate::diagram::{constant_diagram, representable};
    use crate::fixtures;
    use crate::fincat::ObjId;

    /// Identity-arrow diagram on a 2-element set over the walking arrow.
    fn two_two_identity() -> Diagram {
        let shape = fixtures::walking_arrow();
        let two = BaseObj::set(2);
        Diagram::new(
            shape,
            vec![two, two],
            vec![base::identity(&two), base::identity(&two), base::identity(&two)],
        )
        .unwrap()
    }

    #[test]
    fn end_of_constant_bifunctor_over_connected_category() {
        let shape = fixtures::walking_arrow();
        let p = BaseObj::set(3);
        let t = Bifunctor::from_fn(shape, |_, _| Ok(p), |_, _| Ok(base::identity(&p))).unwrap();
        let e = end(&t).unwrap();
        assert_eq!(e.obj, BaseObj::set(3));
    }

    #[test]
    fn end_of_exponential_bifunctor_frozen_value() {
        // X = Y = identity diagram on 2 elements over the walking arrow:
        // natural families are pairs (u, v) with v = u, so 4 elements.
        let x = two_two_identity();
        let t = Bifunctor::exponential(&x, &x).unwrap();
        let e = end(&t).unwrap();
        assert_eq!(e.obj, BaseObj::set(4));
    }

    #[test]
    fn end_over_discrete_category_is_product() {
        let shape = fixtures::discrete(3);
        let sizes = [2usize, 3, 1];
        let x = Diagram::new(
            shape.clone(),
            sizes.iter().map(|&s| BaseObj::set(s)).collect(),
            sizes.iter().map(|&s| base::identity(&BaseObj::set(s))).collect(),
        )
        .unwrap();
        let t = Bifunctor::exponential(&x, &x).unwrap();
        let e = end(&t).unwrap();
        // ∏ |X_i|^|X_i| = 4 · 27 · 1
        assert_eq!(e.obj, BaseObj::set(108));
    }

    #[test]
    fn coend_over_discrete_category_is_coproduct() {
        let shape = fixtures::discrete(3);
        let sizes = [2usize, 3, 1];
        let x = Diagram::new(
            shape.clone(),
            sizes.iter().map(|&s| BaseObj::set(s)).collect(),
            sizes.iter().map(|&s| base::identity(&BaseObj::set(s))).collect(),
        )
        .unwrap();
        let t = Bifunctor::exponential(&x, &x).unwrap();
        let c = coend(&t).unwrap();
        assert_eq!(c.obj, BaseObj::set(4 + 27 + 1));
    }

    #[test]
    fn coend_of_constant_unit_over_walking_arrow_is_unit() {
        let shape = fixtures::walking_arrow();
        let u = base::unit(Backend::FinSet);
        let t = Bifunctor::from_fn(shape, |_, _| Ok(u), |_, _| Ok(base::identity(&u))).unwrap();
        let c = coend(&t).unwrap();
        assert_eq!(c.obj, BaseObj::set(1));
    }

    #[test]
    fn end_projections_satisfy_dinaturality() {
        let x = two_two_identity();
        let t = Bifunctor::exponential(&x, &x).unwrap();
        let e = end(&t).unwrap();
        let cat = t.base_cat().clone();
        for m in cat.morphisms() {
            let (i, j) = (cat.dom(m), cat.cod(m));
            let lhs = base::compose(t.act(cat.identity(i), m), &e.proj[i.0]).unwrap();
            let rhs = base::compose(t.act(m, cat.identity(j)), &e.proj[j.0]).unwrap();
            assert_eq!(lhs, rhs, "dinaturality at morphism {m}");
        }
    }

    #[test]
    fn colimit_of_representable_is_unit_sized() {
        // colim h_a over the walking arrow: both levels size 1 glued along f
        let shape = fixtures::walking_arrow();
        let h = representable(&shape, ObjId(0), Backend::FinSet);
        let c = colimit(&h).unwrap();
        assert_eq!(c.obj, BaseObj::set(1));
    }

    #[test]
    fn limit_of_constant_diagram_over_connected_shape() {
        let shape = fixtures::commutative_square();
        let k = constant_diagram(&shape, &BaseObj::set(3));
        let l = limit(&k).unwrap();
        assert_eq!(l.obj, BaseObj::set(3));
        let c = colimit(&k).unwrap();
        assert_eq!(c.obj, BaseObj::set(3));
    }

    #[test]
    fn pushout_of_diagrams_objectwise() {
        // span: constant singleton ← initial → constant singleton over walking arrow
        let shape = fixtures::walking_arrow();
        let pt = constant_diagram(&shape, &BaseObj::set(1));
        let empty = crate::diagram::initial_diagram(&shape, Backend::FinSet);
        let f = crate::diagram::from_initial_diagram(&pt);
        let _ = empty;
        let po = pushout_diagrams(&f, &f).unwrap();
        assert_eq!(po.apex.obj(ObjId(0)), &BaseObj::set(2));
        assert_eq!(po.apex.obj(ObjId(1)), &BaseObj::set(2));
    }

    #[test]
    fn finvect_end_matches_dimension_count() {
        // identity diagram on Q² over the walking arrow: end of Y^X has
        // dimension 4 (pairs (u, v) with v = u)
        let shape = fixtures::walking_arrow();
        let two = BaseObj::vect(2);
        let x = Diagram::new(
            shape,
            vec![two, two],
            vec![base::identity(&two), base::identity(&two), base::identity(&two)],
        )
        .unwrap();
        let t = Bifunctor::exponential(&x, &x).unwrap();
        let e = end(&t).unwrap();
        assert_eq!(e.obj, BaseObj::vect(4));
    }
}
