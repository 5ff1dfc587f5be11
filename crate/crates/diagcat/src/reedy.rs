//! Reedy machinery: latching and matching objects, the Reedy morphism
//! classes via relative latching/matching maps, pushout products, the
//! closed latching formula for products of representables, and the
//! sweep harness for monoidal-compatibility statements.
//!
//! Latching categories are built from the direct part only and matching
//! categories from the inverse part, so the same code serves direct
//! categories and general Reedy structures.

use crate::base::{self, BaseMor, BaseObj, Backend, ModelClasses};
use crate::diagram::{
    colimit, limit, pullback_diagrams, pushout_diagrams, representable, tensor_diag,
    tensor_diag_nat, tensor_nat, tensor_obj_mor, Diagram, DiagramError, NatTrans,
};
use crate::fincat::{CatError, FinCat, MorClass, MorData, MorId, ObjId, ReedyData};
use crate::kan::{internal_hom, internal_hom_contra, internal_hom_cov};
use std::collections::HashMap;
use std::sync::Arc;

/// The latching category of `i`: objects are the non-identity direct
/// morphisms into `i`, morphisms are commuting triangles over
/// direct-or-identity maps.
pub struct LatchingCat {
    pub cat: Arc<FinCat>,
    /// Underlying base-category morphism per latching object.
    pub arrows: Vec<MorId>,
    /// The triangle edge per latching morphism.
    pub triangles: Vec<MorId>,
}

pub fn latching_category(r: &ReedyData, i: ObjId) -> Result<LatchingCat, CatError> {
    let base_cat = &r.base;
    let arrows: Vec<MorId> = base_cat
        .morphisms()
        .filter(|&m| {
            base_cat.cod(m) == i
                && !base_cat.is_identity(m)
                && r.class_of(m) == Some(MorClass::Direct)
        })
        .collect();
    build_triangle_category(
        base_cat,
        &arrows,
        |alpha| base_cat.dom(alpha),
        |gamma, alpha_from, alpha_to| {
            // triangle condition: alpha_to ∘ γ = alpha_from
            r.is_direct_or_identity(gamma)
                && base_cat.try_compose(alpha_to, gamma) == Some(alpha_from)
        },
    )
}

/// The matching category of `i`: objects are the non-identity inverse
/// morphisms out of `i`, morphisms the dual triangles.
pub fn matching_category(r: &ReedyData, i: ObjId) -> Result<LatchingCat, CatError> {
    let base_cat = &r.base;
    let arrows: Vec<MorId> = base_cat
        .morphisms()
        .filter(|&m| {
            base_cat.dom(m) == i
                && !base_cat.is_identity(m)
                && r.class_of(m) == Some(MorClass::Inverse)
        })
        .collect();
    build_triangle_category(
        base_cat,
        &arrows,
        |alpha| base_cat.cod(alpha),
        |gamma, alpha_from, alpha_to| {
            // triangle condition: γ ∘ alpha_from = alpha_to
            r.is_inverse_or_identity(gamma)
                && base_cat.try_compose(gamma, alpha_from) == Some(alpha_to)
        },
    )
}

fn build_triangle_category(
    base_cat: &Arc<FinCat>,
    arrows: &[MorId],
    carrier: impl Fn(MorId) -> ObjId,
    admits: impl Fn(MorId, MorId, MorId) -> bool,
) -> Result<LatchingCat, CatError> {
    let labels: Vec<String> = arrows
        .iter()
        .map(|&a| base_cat.mor(a).label.clone())
        .collect();
    let mut mors: Vec<MorData> = Vec::new();
    let mut triangles: Vec<MorId> = Vec::new();
    let mut index: HashMap<(usize, usize, MorId), usize> = HashMap::new();
    for (u, &alpha_u) in arrows.iter().enumerate() {
        for (v, &alpha_v) in arrows.iter().enumerate() {
            for gamma in base_cat.morphisms() {
                if base_cat.dom(gamma) != carrier(alpha_u)
                    || base_cat.cod(gamma) != carrier(alpha_v)
                {
                    continue;
                }
                if admits(gamma, alpha_u, alpha_v) {
                    index.insert((u, v, gamma), mors.len());
                    mors.push(MorData {
                        dom: ObjId(u),
                        cod: ObjId(v),
                        label: base_cat.mor(gamma).label.clone(),
                    });
                    triangles.push(gamma);
                }
            }
        }
    }
    let identities: Vec<MorId> = arrows
        .iter()
        .enumerate()
        .map(|(u, &alpha)| MorId(index[&(u, u, base_cat.identity(carrier(alpha)))]))
        .collect();
    let mut composition = Vec::new();
    for (gi, gd) in mors.iter().enumerate() {
        for (fi, fd) in mors.iter().enumerate() {
            if fd.cod != gd.dom {
                continue;
            }
            let composite = base_cat.compose(triangles[gi], triangles[fi]);
            let target = index[&(fd.dom.0, gd.cod.0, composite)];
            composition.push((MorId(gi), MorId(fi), MorId(target)));
        }
    }
    let cat = Arc::new(FinCat::new(labels, mors, identities, composition)?);
    debug_assert!(cat.validate().is_valid());
    Ok(LatchingCat {
        cat,
        arrows: arrows.to_vec(),
        triangles,
    })
}

/// A latching object `L_i X` with its canonical map to `X_i`.
pub struct Latching {
    pub obj: BaseObj,
    /// `L_i X → X_i`.
    pub map: BaseMor,
    lat: LatchingCat,
    colim: Option<crate::diagram::DiagColimit>,
}

impl Latching {
    /// Mediate a compatible cocone (one leg per latching-category
    /// object) out of the colimit.
    pub fn mediate(
        &self,
        legs: &[BaseMor],
        target: &BaseObj,
    ) -> Result<Option<BaseMor>, DiagramError> {
        match &self.colim {
            Some(c) => c.mediate(legs, target),
            None => Ok(Some(base::from_initial(target))),
        }
    }

    pub fn arrows(&self) -> &[MorId] {
        &self.lat.arrows
    }

    pub fn injection(&self, u: usize) -> Option<&BaseMor> {
        self.colim.as_ref().map(|c| &c.inj[u])
    }
}

/// `L_i X`: the colimit of `X` over the latching category of `i`, with
/// the map to `X_i` induced by the indexing arrows. An empty latching
/// category yields the initial object.
pub fn latching_object(r: &ReedyData, x: &Diagram, i: ObjId) -> Result<Latching, DiagramError> {
    let lat = latching_category(r, i)?;
    let backend = x.backend();
    if lat.arrows.is_empty() {
        return Ok(Latching {
            obj: base::initial(backend),
            map: base::from_initial(x.obj(i)),
            lat,
            colim: None,
        });
    }
    let base_cat = &r.base;
    let at_obj: Vec<BaseObj> = lat.arrows.iter().map(|&a| *x.obj(base_cat.dom(a))).collect();
    let at_mor: Vec<BaseMor> = lat.triangles.iter().map(|&g| x.mor(g).clone()).collect();
    let diag = Diagram::new(lat.cat.clone(), at_obj, at_mor)?;
    let colim = colimit(&diag)?;
    let legs: Vec<BaseMor> = lat.arrows.iter().map(|&a| x.mor(a).clone()).collect();
    let map = colim
        .mediate(&legs, x.obj(i))?
        .ok_or_else(|| DiagramError::NotFunctorial("latching cocone is incompatible".into()))?;
    Ok(Latching {
        obj: colim.obj,
        map,
        lat,
        colim: Some(colim),
    })
}

/// A matching object `M_i X` with its canonical map from `X_i`.
pub struct Matching {
    pub obj: BaseObj,
    /// `X_i → M_i X`.
    pub map: BaseMor,
    lat: LatchingCat,
    lim: Option<crate::diagram::DiagLimit>,
}

impl Matching {
    pub fn mediate(
        &self,
        source: &BaseObj,
        legs: &[BaseMor],
    ) -> Result<Option<BaseMor>, DiagramError> {
        match &self.lim {
            Some(l) => l.mediate(source, legs),
            None => Ok(Some(base::to_terminal(source))),
        }
    }

    pub fn arrows(&self) -> &[MorId] {
        &self.lat.arrows
    }

    pub fn projection(&self, u: usize) -> Option<&BaseMor> {
        self.lim.as_ref().map(|l| &l.proj[u])
    }
}

/// `M_i X`: the limit of `X` over the matching category of `i`, with
/// the map from `X_i` induced by the indexing arrows. An empty matching
/// category yields the terminal object.
pub fn matching_object(r: &ReedyData, x: &Diagram, i: ObjId) -> Result<Matching, DiagramError> {
    let lat = matching_category(r, i)?;
    let backend = x.backend();
    if lat.arrows.is_empty() {
        return Ok(Matching {
            obj: base::terminal(backend),
            map: base::to_terminal(x.obj(i)),
            lat,
            lim: None,
        });
    }
    let base_cat = &r.base;
    let at_obj: Vec<BaseObj> = lat.arrows.iter().map(|&a| *x.obj(base_cat.cod(a))).collect();
    let at_mor: Vec<BaseMor> = lat.triangles.iter().map(|&g| x.mor(g).clone()).collect();
    let diag = Diagram::new(lat.cat.clone(), at_obj, at_mor)?;
    let lim = limit(&diag)?;
    let legs: Vec<BaseMor> = lat.arrows.iter().map(|&a| x.mor(a).clone()).collect();
    let map = lim
        .mediate(x.obj(i), &legs)?
        .ok_or_else(|| DiagramError::NotFunctorial("matching cone is incompatible".into()))?;
    Ok(Matching {
        obj: lim.obj,
        map,
        lat,
        lim: Some(lim),
    })
}

/// Per-object audit trail of a Reedy classification.
#[derive(Debug, Clone)]
pub struct ObjectAudit {
    pub object: ObjId,
    pub component_is_we: bool,
    pub relative_latching_is_cof: bool,
    pub relative_matching_is_fib: bool,
}

#[derive(Debug, Clone)]
pub struct ReedyClassVerdict {
    pub is_reedy_cof: bool,
    pub is_reedy_we: bool,
    pub is_reedy_fib: bool,
    pub audits: Vec<ObjectAudit>,
}

impl ReedyClassVerdict {
    pub fn is_trivial_cof(&self) -> bool {
        self.is_reedy_cof && self.is_reedy_we
    }

    pub fn is_trivial_fib(&self) -> bool {
        self.is_reedy_fib && self.is_reedy_we
    }
}

/// The relative latching map `X_i ∐_{L_i X} L_i Y → Y_i` of `f` at `i`.
pub fn relative_latching_map(
    r: &ReedyData,
    f: &NatTrans,
    i: ObjId,
) -> Result<BaseMor, DiagramError> {
    let lx = latching_object(r, f.source(), i)?;
    let ly = latching_object(r, f.target(), i)?;
    // induced L_i f : L_i X → L_i Y, one leg per latching object
    let base_cat = &r.base;
    let legs: Vec<BaseMor> = lx
        .arrows()
        .iter()
        .enumerate()
        .map(|(u, &a)| {
            let inj = ly.injection(u).ok_or_else(|| {
                DiagramError::NotFunctorial("latching categories differ between endpoints".into())
            })?;
            Ok(base::compose(inj, f.component(base_cat.dom(a)))?)
        })
        .collect::<Result<Vec<_>, DiagramError>>()?;
    let l_f = if lx.arrows().is_empty() {
        base::from_initial(&ly.obj)
    } else {
        lx.mediate(&legs, &ly.obj)?.ok_or_else(|| {
            DiagramError::NotFunctorial("latching map of f failed to mediate".into())
        })?
    };
    let po = base::pushout(&lx.map, &l_f)?;
    po.mediate(&lx.map, &l_f, f.component(i), &ly.map)?
        .ok_or_else(|| {
            DiagramError::NotFunctorial("relative latching cocone is incompatible".into())
        })
}

/// The relative matching map `X_i → Y_i ×_{M_i Y} M_i X` of `f` at `i`.
pub fn relative_matching_map(
    r: &ReedyData,
    f: &NatTrans,
    i: ObjId,
) -> Result<BaseMor, DiagramError> {
    let mx = matching_object(r, f.source(), i)?;
    let my = matching_object(r, f.target(), i)?;
    // induced M_i f : M_i X → M_i Y
    let base_cat = &r.base;
    let legs: Vec<BaseMor> = mx
        .arrows()
        .iter()
        .enumerate()
        .map(|(u, &a)| {
            let proj = mx.projection(u).ok_or_else(|| {
                DiagramError::NotFunctorial("matching categories differ between endpoints".into())
            })?;
            Ok(base::compose(f.component(base_cat.cod(a)), proj)?)
        })
        .collect::<Result<Vec<_>, DiagramError>>()?;
    let m_f = if mx.arrows().is_empty() {
        base::to_terminal(&mx.obj)
    } else {
        my.mediate(&mx.obj, &legs)?.ok_or_else(|| {
            DiagramError::NotFunctorial("matching map of f failed to mediate".into())
        })?
    };
    let pb = base::pullback(&my.map, &m_f)?;
    pb.mediate(&my.map, &m_f, f.component(i), &mx.map)?
        .ok_or_else(|| {
            DiagramError::NotFunctorial("relative matching cone is incompatible".into())
        })
}

/// The cofibration/weak-equivalence half of the classification; the
/// matching side is skipped, which in FinSet avoids materializing the
/// multiplicative limit carriers that large sweeps would otherwise
/// build for verdicts they never read.
pub fn reedy_cof_verdict(
    r: &ReedyData,
    f: &NatTrans,
    classes: &ModelClasses,
) -> Result<(bool, bool), DiagramError> {
    let mut is_cof = true;
    let mut is_we = true;
    for i in r.base.objects() {
        is_we &= classes.is_we(f.component(i));
        let rel_latch = relative_latching_map(r, f, i)?;
        is_cof &= classes.is_cof(&rel_latch);
        if !is_cof && !is_we {
            break;
        }
    }
    Ok((is_cof, is_we))
}

/// Classify a transformation against the Reedy structure: weak
/// equivalences are objectwise, cofibrations have cofibration relative
/// latching maps, fibrations have fibration relative matching maps.
pub fn reedy_classify(
    r: &ReedyData,
    f: &NatTrans,
    classes: &ModelClasses,
) -> Result<ReedyClassVerdict, DiagramError> {
    let mut audits = Vec::new();
    let mut is_cof = true;
    let mut is_we = true;
    let mut is_fib = true;
    for i in r.base.objects() {
        let component_is_we = classes.is_we(f.component(i));
        let rel_latch = relative_latching_map(r, f, i)?;
        let relative_latching_is_cof = classes.is_cof(&rel_latch);
        let rel_match = relative_matching_map(r, f, i)?;
        let relative_matching_is_fib = classes.is_fib(&rel_match);
        is_cof &= relative_latching_is_cof;
        is_we &= component_is_we;
        is_fib &= relative_matching_is_fib;
        audits.push(ObjectAudit {
            object: i,
            component_is_we,
            relative_latching_is_cof,
            relative_matching_is_fib,
        });
    }
    Ok(ReedyClassVerdict {
        is_reedy_cof: is_cof,
        is_reedy_we: is_we,
        is_reedy_fib: is_fib,
        audits,
    })
}

/// All pairs `(α, β) : (p, q) ⇉ i` that factor jointly through some
/// `j ≠ i`: the index set of the closed latching formula.
pub fn pair_index_set(cat: &FinCat, p: ObjId, q: ObjId, i: ObjId) -> Vec<(MorId, MorId)> {
    let mut out = Vec::new();
    for &alpha in &cat.hom(p, i) {
        for &beta in &cat.hom(q, i) {
            'search: for theta in cat.morphisms() {
                if cat.cod(theta) != i || cat.dom(theta) == i {
                    continue;
                }
                let j = cat.dom(theta);
                for &alpha2 in &cat.hom(p, j) {
                    if cat.compose(theta, alpha2) != alpha {
                        continue;
                    }
                    for &beta2 in &cat.hom(q, j) {
                        if cat.compose(theta, beta2) == beta {
                            out.push((alpha, beta));
                            break 'search;
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct LatchingFormulaVerdict {
    pub pair_count: usize,
    pub generic_magnitude: usize,
    pub comparison_is_iso: bool,
    pub comparison_commutes: bool,
    pub value_formula_ok: bool,
    pub latching_map_is_cof: bool,
}

impl LatchingFormulaVerdict {
    pub fn holds(&self) -> bool {
        self.comparison_is_iso
            && self.comparison_commutes
            && self.value_formula_ok
            && self.latching_map_is_cof
    }
}

/// Check the closed form of the latching object of `h_p ⊗ h_q` at `i`
/// against the generic colimit: build the coproduct of units indexed by
/// [`pair_index_set`], the canonical comparison into the colimit, and
/// certify isomorphism, commutation with the latching map, and
/// cofibrancy of the latching map.
pub fn latching_formula_check(
    r: &ReedyData,
    p: ObjId,
    q: ObjId,
    i: ObjId,
    backend: Backend,
    classes: &ModelClasses,
) -> Result<LatchingFormulaVerdict, DiagramError> {
    if !r.is_direct_category() {
        return Err(DiagramError::Typing(
            "the closed latching formula applies to direct categories".into(),
        ));
    }
    let cat = &r.base;
    let hp = representable(&r.base, p, backend);
    let hq = representable(&r.base, q, backend);
    let x = tensor_diag(&hp, &hq)?;
    let lat = latching_object(r, &x, i)?;
    let pairs = pair_index_set(cat, p, q, i);

    // canonical comparison ∐_pairs unit → L_i(h_p ⊗ h_q): each pair goes
    // through the first factorization found, landing in the colimit copy
    // indexed by its witness θ
    let hom_p_i = cat.hom(p, i);
    let hom_q_i = cat.hom(q, i);
    let mut table: Vec<usize> = Vec::with_capacity(pairs.len());
    let mut commutes = true;
    for &(alpha, beta) in &pairs {
        let mut found = None;
        'witness: for (u, &theta) in lat.arrows().iter().enumerate() {
            let j = cat.dom(theta);
            for (a2, &alpha2) in cat.hom(p, j).iter().enumerate() {
                if cat.compose(theta, alpha2) != alpha {
                    continue;
                }
                for (b2, &beta2) in cat.hom(q, j).iter().enumerate() {
                    if cat.compose(theta, beta2) == beta {
                        found = Some((u, a2, b2, j));
                        break 'witness;
                    }
                }
            }
        }
        let (u, a2, b2, j) = found.ok_or_else(|| {
            DiagramError::NotFunctorial("pair admits no factorization witness".into())
        })?;
        let enc = base::pair_index(cat.hom(q, j).len(), a2, b2);
        let inj = lat.injection(u).ok_or_else(|| {
            DiagramError::NotFunctorial("nonempty pair set over empty latching category".into())
        })?;
        let target = basis_image(inj, enc);
        // the latching map must carry this class to the tensor encoding
        let alpha_pos = hom_p_i.iter().position(|&a| a == alpha).unwrap();
        let beta_pos = hom_q_i.iter().position(|&b| b == beta).unwrap();
        let expected = base::pair_index(hom_q_i.len(), alpha_pos, beta_pos);
        if basis_image(&lat.map, target) != expected {
            commutes = false;
        }
        table.push(target);
    }
    let closed = crate::diagram::function_mor(backend, pairs.len(), lat.obj.magnitude(), &table);
    let comparison_is_iso = base::inverse(&closed).is_some();
    // (h_p ⊗ h_q)(i) is the coproduct of units over hom(p,i) × hom(q,i)
    let value_formula_ok = x.obj(i).magnitude() == hom_p_i.len() * hom_q_i.len();
    let latching_map_is_cof = classes.is_cof(&lat.map);
    Ok(LatchingFormulaVerdict {
        pair_count: pairs.len(),
        generic_magnitude: lat.obj.magnitude(),
        comparison_is_iso,
        comparison_commutes: commutes,
        value_formula_ok,
        latching_map_is_cof,
    })
}

/// Where a basis element (FinSet element, FinVect basis vector of a
/// 0/1-column map) lands.
fn basis_image(m: &BaseMor, e: usize) -> usize {
    match m {
        BaseMor::FinSet(s) => s.table[e],
        BaseMor::FinVect(mat) => (0..mat.rows())
            .find(|&row| !num_traits::Zero::is_zero(mat.at(row, e)))
            .unwrap_or(usize::MAX),
    }
}

/// `f ◇ g` for two base morphisms: the induced map
/// `A⊗D ∐_{A⊗C} B⊗C → B⊗D`.
pub fn pushout_product_base(f: &BaseMor, g: &BaseMor) -> Result<BaseMor, DiagramError> {
    let (a, b) = (f.dom(), f.cod());
    let (c, _d) = (g.dom(), g.cod());
    let id_a = base::identity(&a);
    let id_b = base::identity(&b);
    let id_c = base::identity(&c);
    let id_d = base::identity(&g.cod());
    let left_leg = base::tensor_mor(&id_a, g)?; // A⊗C → A⊗D
    let right_leg = base::tensor_mor(f, &id_c)?; // A⊗C → B⊗C
    let po = base::pushout(&left_leg, &right_leg)?;
    let to_target_left = base::tensor_mor(f, &id_d)?; // A⊗D → B⊗D
    let to_target_right = base::tensor_mor(&id_b, g)?; // B⊗C → B⊗D
    po.mediate(&left_leg, &right_leg, &to_target_left, &to_target_right)?
        .ok_or_else(|| DiagramError::NotFunctorial("pushout-product cocone incompatible".into()))
}

/// `f ◇ g` for `f` in `M^I` and `g` in the base (the module action):
/// `X⊗B ∐_{X⊗A} Y⊗A → Y⊗B`.
pub fn pushout_product_module(f: &NatTrans, g: &BaseMor) -> Result<NatTrans, DiagramError> {
    let left_leg = tensor_obj_mor(f.source(), g)?; // X⊗A → X⊗B
    let right_leg = tensor_nat(f, &g.dom())?; // X⊗A → Y⊗A
    let po = pushout_diagrams(&left_leg, &right_leg)?;
    let to_target_left = tensor_nat(f, &g.cod())?; // X⊗B → Y⊗B
    let to_target_right = tensor_obj_mor(f.target(), g)?; // Y⊗A → Y⊗B
    po.mediate(&to_target_left, &to_target_right)
}

/// `f ◇ g` for two transformations with the objectwise product.
pub fn pushout_product_diag(f: &NatTrans, g: &NatTrans) -> Result<NatTrans, DiagramError> {
    let id_src_f = NatTrans::identity(f.source());
    let id_tgt_f = NatTrans::identity(f.target());
    let id_src_g = NatTrans::identity(g.source());
    let id_tgt_g = NatTrans::identity(g.target());
    let left_leg = tensor_diag_nat(&id_src_f, g)?; // X⊗C → X⊗D
    let right_leg = tensor_diag_nat(f, &id_src_g)?; // X⊗C → Y⊗C
    let po = pushout_diagrams(&left_leg, &right_leg)?;
    let to_target_left = tensor_diag_nat(f, &id_tgt_g)?; // X⊗D → Y⊗D
    let to_target_right = tensor_diag_nat(&id_tgt_f, g)?; // Y⊗C → Y⊗D
    po.mediate(&to_target_left, &to_target_right)
}

#[derive(Debug, Clone)]
pub struct ActionCompatVerdict {
    pub applicable: bool,
    pub inapplicable_reason: Option<String>,
    pub is_reedy_fib: bool,
    pub is_trivial_fib: bool,
    pub p_is_trivial: bool,
    pub f_is_trivial: bool,
}

impl ActionCompatVerdict {
    /// The compatibility statement: the induced map is a Reedy
    /// fibration, trivial when either input is.
    pub fn holds(&self) -> bool {
        self.applicable
            && self.is_reedy_fib
            && (!(self.p_is_trivial || self.f_is_trivial) || self.is_trivial_fib)
    }
}

/// The fibration side of the module-action compatibility: for a Reedy
/// fibration `p : X → Y` and a base cofibration `f : A → B`, the map
/// `X^B → Y^B ×_{Y^A} X^A` is a Reedy fibration, trivial when `f` or
/// `p` is. False claims make the check inapplicable rather than failed.
pub fn action_compat_check(
    r: &ReedyData,
    p: &NatTrans,
    f: &BaseMor,
    classes: &ModelClasses,
) -> Result<ActionCompatVerdict, DiagramError> {
    let p_verdict = reedy_classify(r, p, classes)?;
    let f_is_cof = classes.is_cof(f);
    if !p_verdict.is_reedy_fib || !f_is_cof {
        let mut reasons = Vec::new();
        if !p_verdict.is_reedy_fib {
            reasons.push("p is not a Reedy fibration");
        }
        if !f_is_cof {
            reasons.push("f is not a cofibration");
        }
        return Ok(ActionCompatVerdict {
            applicable: false,
            inapplicable_reason: Some(reasons.join("; ")),
            is_reedy_fib: false,
            is_trivial_fib: false,
            p_is_trivial: false,
            f_is_trivial: false,
        });
    }
    let (a, b) = (f.dom(), f.cod());
    let y_f = crate::diagram::power_obj_mor(p.target(), f)?; // Y^B → Y^A
    let p_a = crate::diagram::power_nat(p, &a)?; // X^A → Y^A
    let pb = pullback_diagrams(&y_f, &p_a)?;
    let p_b = crate::diagram::power_nat(p, &b)?; // X^B → Y^B
    let x_f = crate::diagram::power_obj_mor(p.source(), f)?; // X^B → X^A
    let induced = pb.mediate(&p_b, &x_f)?;
    let verdict = reedy_classify(r, &induced, classes)?;
    Ok(ActionCompatVerdict {
        applicable: true,
        inapplicable_reason: None,
        is_reedy_fib: verdict.is_reedy_fib,
        is_trivial_fib: verdict.is_trivial_fib(),
        p_is_trivial: p_verdict.is_trivial_fib(),
        f_is_trivial: classes.is_trivial_cof(f),
    })
}

/// The generating family `{h_i ⊗ u : i ∈ I, u ∈ us}`.
pub fn generating_cofibrations(
    r: &ReedyData,
    us: &[BaseMor],
) -> Result<Vec<NatTrans>, DiagramError> {
    let mut out = Vec::new();
    for i in r.base.objects() {
        for u in us {
            let h = representable(&r.base, i, u.backend());
            out.push(tensor_obj_mor(&h, u)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct HomFormVerdict {
    pub applicable: bool,
    pub inapplicable_reason: Option<String>,
    pub is_reedy_fib: bool,
    pub is_trivial_fib: bool,
    pub f_is_trivial: bool,
    pub g_is_trivial: bool,
    pub objectwise_fib: bool,
}

impl HomFormVerdict {
    pub fn holds(&self) -> bool {
        self.applicable
            && self.is_reedy_fib
            && self.objectwise_fib
            && (!(self.f_is_trivial || self.g_is_trivial) || self.is_trivial_fib)
    }
}

/// The hom-side axiom form: for a base cofibration `f : A → B`, an
/// object `q`, and a Reedy fibration `g : X → Y`, the induced map
/// `Hom(h_q⊗B, X) → Hom(h_q⊗A, X) ×_{Hom(h_q⊗A, Y)} Hom(h_q⊗B, Y)` is
/// a Reedy fibration, trivial when `f` or `g` is. The objectwise
/// components, which reduce to maps between mapping objects, are
/// audited alongside.
pub fn hom_form_check(
    r: &ReedyData,
    f: &BaseMor,
    q: ObjId,
    g: &NatTrans,
    classes: &ModelClasses,
) -> Result<HomFormVerdict, DiagramError> {
    let g_verdict = reedy_classify(r, g, classes)?;
    let f_is_cof = classes.is_cof(f);
    if !g_verdict.is_reedy_fib || !f_is_cof {
        let mut reasons = Vec::new();
        if !g_verdict.is_reedy_fib {
            reasons.push("g is not a Reedy fibration");
        }
        if !f_is_cof {
            reasons.push("f is not a cofibration");
        }
        return Ok(HomFormVerdict {
            applicable: false,
            inapplicable_reason: Some(reasons.join("; ")),
            is_reedy_fib: false,
            is_trivial_fib: false,
            f_is_trivial: false,
            g_is_trivial: false,
            objectwise_fib: false,
        });
    }
    let h = representable(&r.base, q, f.backend());
    let hq_f = tensor_obj_mor(&h, f)?; // h_q⊗A → h_q⊗B
    let x = g.source();
    let y = g.target();
    let contra_x = internal_hom_contra(&hq_f, x)?; // Hom(h_q⊗B, X) → Hom(h_q⊗A, X)
    let contra_y = internal_hom_contra(&hq_f, y)?; // Hom(h_q⊗B, Y) → Hom(h_q⊗A, Y)
    let cov_a = internal_hom_cov(hq_f.source(), g)?; // Hom(h_q⊗A, X) → Hom(h_q⊗A, Y)
    let cov_b = internal_hom_cov(hq_f.target(), g)?; // Hom(h_q⊗B, X) → Hom(h_q⊗B, Y)
    let pb = pullback_diagrams(&cov_a, &contra_y)?;
    let induced = pb.mediate(&contra_x, &cov_b)?;
    let verdict = reedy_classify(r, &induced, classes)?;
    // objectwise audit: every component is a base fibration, a weak
    // equivalence as well when an input is trivial
    let f_triv = classes.is_trivial_cof(f);
    let g_triv = g_verdict.is_trivial_fib();
    let mut objectwise_fib = true;
    for i in r.base.objects() {
        let comp = induced.component(i);
        if !classes.is_fib(comp) {
            objectwise_fib = false;
        }
        if (f_triv || g_triv) && !classes.is_we(comp) {
            objectwise_fib = false;
        }
    }
    let _ = internal_hom(hq_f.source(), x)?; // parity with the displayed objects
    Ok(HomFormVerdict {
        applicable: true,
        inapplicable_reason: None,
        is_reedy_fib: verdict.is_reedy_fib,
        is_trivial_fib: verdict.is_trivial_fib(),
        f_is_trivial: f_triv,
        g_is_trivial: g_triv,
        objectwise_fib,
    })
}

/// One pushout-product instance in a sweep.
#[derive(Debug, Clone)]
pub struct SweepInstance {
    pub description: String,
    pub is_cof: bool,
    pub expected_trivial: bool,
    pub is_trivial: bool,
    pub restriction_agrees: Option<bool>,
}

impl SweepInstance {
    pub fn holds(&self) -> bool {
        self.is_cof
            && (!self.expected_trivial || self.is_trivial)
            && self.restriction_agrees.unwrap_or(true)
    }
}

#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    pub instances: Vec<SweepInstance>,
}

impl SweepReport {
    pub fn failures(&self) -> Vec<&SweepInstance> {
        self.instances.iter().filter(|i| !i.holds()).collect()
    }
}

/// Pushout-product closure sweep over supplied Reedy-cofibration pairs,
/// plus the mixed module-action cases. Every diagram-pair instance is
/// also restricted to the direct part, where the computation is redone
/// and the verdicts compared (the restriction preserves and reflects
/// cofibrations and weak equivalences).
pub fn pushout_product_sweep(
    r: &ReedyData,
    classes: &ModelClasses,
    cofs: &[NatTrans],
    base_cofs: &[BaseMor],
) -> Result<SweepReport, DiagramError> {
    let (direct_reedy, inclusion) = r.restrict_to_direct()?;
    let mut report = SweepReport::default();
    for (a, f) in cofs.iter().enumerate() {
        let (f_cof, f_we) = reedy_cof_verdict(r, f, classes)?;
        for (b, g) in cofs.iter().enumerate() {
            let (g_cof, g_we) = reedy_cof_verdict(r, g, classes)?;
            let product = pushout_product_diag(f, g)?;
            let (p_cof, p_we) = reedy_cof_verdict(r, &product, classes)?;
            // the same instance over the direct part
            let rf = crate::kan::restrict_nat(&inclusion, f)?;
            let rg = crate::kan::restrict_nat(&inclusion, g)?;
            let r_product = pushout_product_diag(&rf, &rg)?;
            let restricted_product = crate::kan::restrict_nat(&inclusion, &product)?;
            let mut agrees = r_product == restricted_product;
            let (rp_cof, rp_we) = reedy_cof_verdict(&direct_reedy, &r_product, classes)?;
            if rp_cof != p_cof || rp_we != p_we {
                agrees = false;
            }
            report.instances.push(SweepInstance {
                description: format!("diagram-pair ({a}, {b})"),
                is_cof: p_cof,
                expected_trivial: (f_cof && f_we) || (g_cof && g_we),
                is_trivial: p_cof && p_we,
                restriction_agrees: Some(agrees),
            });
        }
        for (b, u) in base_cofs.iter().enumerate() {
            let product = pushout_product_module(f, u)?;
            let (p_cof, p_we) = reedy_cof_verdict(r, &product, classes)?;
            report.instances.push(SweepInstance {
                description: format!("module-pair ({a}, base {b})"),
                is_cof: p_cof,
                expected_trivial: (f_cof && f_we) || classes.is_trivial_cof(u),
                is_trivial: p_cof && p_we,
                restriction_agrees: None,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::SetMor;
    use crate::diagram::from_initial_diagram;
    use crate::fixtures;

    fn finset_classes() -> ModelClasses {
        ModelClasses::standard(Backend::FinSet)
    }

    #[test]
    fn latching_at_minimal_degree_is_initial() {
        let r = fixtures::walking_arrow_reedy();
        let h = representable(&r.base, ObjId(0), Backend::FinSet);
        let l = latching_object(&r, &h, ObjId(0)).unwrap();
        assert_eq!(l.obj, BaseObj::set(0));
    }

    #[test]
    fn latching_on_walking_arrow_is_lower_level() {
        // L_b X = X_a with latching map X(f)
        let r = fixtures::walking_arrow_reedy();
        let x = representable(&r.base, ObjId(0), Backend::FinSet);
        let l = latching_object(&r, &x, ObjId(1)).unwrap();
        assert_eq!(l.obj.magnitude(), x.obj(ObjId(0)).magnitude());
        assert!(base::is_bijective(&l.map));
    }

    #[test]
    fn latching_of_product_of_representables_frozen() {
        // L_b(h_a ⊗ h_a) over the walking arrow is a single point and the
        // latching map is a bijection onto (h_a ⊗ h_a)(b)
        let r = fixtures::walking_arrow_reedy();
        let h = representable(&r.base, ObjId(0), Backend::FinSet);
        let x = tensor_diag(&h, &h).unwrap();
        let l = latching_object(&r, &x, ObjId(1)).unwrap();
        assert_eq!(l.obj, BaseObj::set(1));
        assert!(base::inverse(&l.map).is_some());
    }

    #[test]
    fn matching_at_degree_floor_is_terminal() {
        let r = fixtures::delta_op_le2();
        let x = representable(&r.base, ObjId(0), Backend::FinSet);
        // nothing lowers out of the bottom object
        let m = matching_object(&r, &x, ObjId(0)).unwrap();
        assert_eq!(m.obj, BaseObj::set(1));
    }

    #[test]
    fn matching_on_inverse_walking_arrow() {
        // walking arrow with the inverse orientation: deg(a)=1, deg(b)=0,
        // f : a → b inverse; M_a X = X_b with map X(f)
        let c = fixtures::walking_arrow();
        let r =
            ReedyData::new(c.clone(), vec![1, 0], vec![(MorId(2), MorClass::Inverse)]).unwrap();
        assert!(r.validate().is_valid());
        let x = crate::diagram::constant_diagram(&c, &BaseObj::set(3));
        let m = matching_object(&r, &x, ObjId(0)).unwrap();
        assert_eq!(m.obj.magnitude(), 3);
        assert!(base::inverse(&m.map).is_some());
    }

    #[test]
    fn identity_is_in_all_three_classes() {
        let r = fixtures::walking_arrow_reedy();
        let x = representable(&r.base, ObjId(0), Backend::FinSet);
        let id = NatTrans::identity(&x);
        let v = reedy_classify(&r, &id, &finset_classes()).unwrap();
        assert!(v.is_reedy_cof && v.is_reedy_we && v.is_reedy_fib);
    }

    #[test]
    fn initial_to_product_of_representables_is_reedy_cof() {
        let r = fixtures::walking_arrow_reedy();
        let h = representable(&r.base, ObjId(0), Backend::FinSet);
        let x = tensor_diag(&h, &h).unwrap();
        let from_empty = from_initial_diagram(&x);
        let v = reedy_classify(&r, &from_empty, &finset_classes()).unwrap();
        assert!(v.is_reedy_cof);
    }

    #[test]
    fn pair_index_set_frozen_examples() {
        let c = fixtures::walking_arrow();
        // p = q = a, i = b: only (f, f), factoring through j = a, θ = f
        let pairs = pair_index_set(&c, ObjId(0), ObjId(0), ObjId(1));
        assert_eq!(pairs, vec![(MorId(2), MorId(2))]);
        // discrete category: always empty
        let d = fixtures::discrete(3);
        assert!(pair_index_set(&d, ObjId(0), ObjId(0), ObjId(0)).is_empty());
        // minimal-degree object with no incoming non-identities: empty
        assert!(pair_index_set(&c, ObjId(0), ObjId(0), ObjId(0)).is_empty());
    }

    #[test]
    fn latching_formula_walking_arrow() {
        let r = fixtures::walking_arrow_reedy();
        let v = latching_formula_check(
            &r,
            ObjId(0),
            ObjId(0),
            ObjId(1),
            Backend::FinSet,
            &finset_classes(),
        )
        .unwrap();
        assert!(v.holds(), "{v:?}");
        assert_eq!(v.pair_count, 1);
        assert_eq!(v.generic_magnitude, 1);
    }

    #[test]
    fn latching_formula_discrete() {
        let r = fixtures::discrete_3_reedy();
        let v = latching_formula_check(
            &r,
            ObjId(0),
            ObjId(1),
            ObjId(2),
            Backend::FinSet,
            &finset_classes(),
        )
        .unwrap();
        assert!(v.holds(), "{v:?}");
        assert_eq!(v.pair_count, 0);
        assert_eq!(v.generic_magnitude, 0);
    }

    #[test]
    fn latching_formula_whole_direct_delta_part() {
        let r = fixtures::delta_op_le2();
        let (direct, _) = r.restrict_to_direct().unwrap();
        for p in direct.base.objects() {
            for q in direct.base.objects() {
                for i in direct.base.objects() {
                    let v = latching_formula_check(
                        &direct,
                        p,
                        q,
                        i,
                        Backend::FinSet,
                        &finset_classes(),
                    )
                    .unwrap();
                    assert!(v.holds(), "({p},{q},{i}): {v:?}");
                }
            }
        }
    }

    #[test]
    fn pushout_product_of_point_inclusions() {
        // f = g = ∅ → 1 in FinSet: f ◇ g is ∅ → 1, injective
        let pt = base::unit(Backend::FinSet);
        let f = base::from_initial(&pt);
        let pp = pushout_product_base(&f, &f).unwrap();
        assert_eq!(pp.dom(), BaseObj::set(0));
        assert_eq!(pp.cod(), BaseObj::set(1));
        assert!(base::is_injective(&pp));
    }

    #[test]
    fn pushout_product_with_iso_is_iso() {
        let swap = BaseMor::FinSet(SetMor { dom: 2, cod: 2, table: vec![1, 0] });
        let g = BaseMor::FinSet(SetMor { dom: 1, cod: 3, table: vec![2] });
        let pp = pushout_product_base(&swap, &g).unwrap();
        assert!(base::inverse(&pp).is_some());
    }

    #[test]
    fn finvect_pushout_product_dimension() {
        use crate::ratmat::RatMat;
        // f : Q ↪ Q², g : Q ↪ Q²: domain dim 2·1 + 1·2 − 1·1 = 3
        let f = BaseMor::FinVect(RatMat::from_i64_rows(&[&[1], &[0]]));
        let g = BaseMor::FinVect(RatMat::from_i64_rows(&[&[0], &[1]]));
        let pp = pushout_product_base(&f, &g).unwrap();
        assert_eq!(pp.dom(), BaseObj::vect(3));
        assert_eq!(pp.cod(), BaseObj::vect(4));
        assert!(base::is_injective(&pp));
    }

    #[test]
    fn generating_cofibrations_over_walking_arrow() {
        let r = fixtures::walking_arrow_reedy();
        let u = base::from_initial(&base::unit(Backend::FinSet));
        let gens = generating_cofibrations(&r, &[u]).unwrap();
        assert_eq!(gens.len(), 2);
        for g in &gens {
            let v = reedy_classify(&r, g, &finset_classes()).unwrap();
            assert!(v.is_reedy_cof);
        }
    }

    #[test]
    fn sweep_over_generators_walking_arrow() {
        let r = fixtures::walking_arrow_reedy();
        let u = base::from_initial(&base::unit(Backend::FinSet));
        let gens = generating_cofibrations(&r, &[u.clone()]).unwrap();
        let report = pushout_product_sweep(&r, &finset_classes(), &gens, &[u]).unwrap();
        assert!(report.failures().is_empty(), "{:?}", report.failures());
        assert_eq!(report.instances.len(), 2 * 2 + 2);
    }

    #[test]
    fn action_compat_finvect_projection() {
        use crate::ratmat::RatMat;
        // walking arrow, X = Y ⊕ Z with p the projection; f : Q ↪ Q²
        let shape = fixtures::walking_arrow();
        let r = fixtures::walking_arrow_reedy();
        let classes = ModelClasses::standard(Backend::FinVect);
        let two = BaseObj::vect(2);
        let one = BaseObj::vect(1);
        let y = Diagram::new(
            shape.clone(),
            vec![one, one],
            vec![base::identity(&one), base::identity(&one), base::identity(&one)],
        )
        .unwrap();
        let x = Diagram::new(
            shape.clone(),
            vec![two, two],
            vec![base::identity(&two), base::identity(&two), base::identity(&two)],
        )
        .unwrap();
        let proj = BaseMor::FinVect(RatMat::from_i64_rows(&[&[1, 0]]));
        let p = NatTrans::new(x, y.clone(), vec![proj.clone(), proj]).unwrap();
        let f = BaseMor::FinVect(RatMat::from_i64_rows(&[&[1], &[0]]));
        let v = action_compat_check(&r, &p, &f, &classes).unwrap();
        assert!(v.applicable);
        assert!(v.holds(), "{v:?}");
        // f and p both identities: the induced map is an isomorphism
        let p2 = NatTrans::identity(&y);
        let f_id = base::identity(&one);
        let v2 = action_compat_check(&r, &p2, &f_id, &classes).unwrap();
        assert!(v2.holds() && v2.is_trivial_fib, "{v2:?}");
    }

    #[test]
    fn action_compat_rejects_false_claims() {
        let r = fixtures::walking_arrow_reedy();
        let classes = ModelClasses::standard(Backend::FinVect);
        use crate::ratmat::RatMat;
        let one = BaseObj::vect(1);
        let two = BaseObj::vect(2);
        let shape = fixtures::walking_arrow();
        let small = Diagram::new(
            shape.clone(),
            vec![one, one],
            vec![base::identity(&one), base::identity(&one), base::identity(&one)],
        )
        .unwrap();
        let big = Diagram::new(
            shape.clone(),
            vec![two, two],
            vec![base::identity(&two), base::identity(&two), base::identity(&two)],
        )
        .unwrap();
        // p not surjective: inclusion Q → Q²
        let incl = BaseMor::FinVect(RatMat::from_i64_rows(&[&[1], &[0]]));
        let p = NatTrans::new(small, big, vec![incl.clone(), incl]).unwrap();
        let f = base::identity(&one);
        let v = action_compat_check(&r, &p, &f, &classes).unwrap();
        assert!(!v.applicable);
        assert!(v.inapplicable_reason.is_some());
    }

    #[test]
    fn hom_form_identity_f_gives_trivial_fibration() {
        let r = fixtures::walking_arrow_reedy();
        let classes = finset_classes();
        let shape = fixtures::walking_arrow();
        let x = crate::diagram::constant_diagram(&shape, &BaseObj::set(2));
        let g = NatTrans::identity(&x);
        let f = base::identity(&base::unit(Backend::FinSet));
        let v = hom_form_check(&r, &f, ObjId(0), &g, &classes).unwrap();
        assert!(v.applicable);
        assert!(v.holds(), "{v:?}");
        assert!(v.is_trivial_fib);
    }
}
