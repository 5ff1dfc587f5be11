//! Seed-deterministic generation of diagrams, transformations, and
//! morphism classes for the randomized sweeps.
//!
//! FinSet diagrams are coproducts of free pieces `h_p ⊗ K`, optionally
//! quotiented by a coequalizer of two random maps out of another free
//! piece; both steps are functorial by construction, so generation
//! never rejects on functoriality. FinVect diagrams stay free (their
//! transformations are then generated exactly through the free
//! adjunction).

use crate::base::{self, BaseMor, BaseObj, Backend, SetMor};
use crate::diagram::{
    coequalize_diagrams, coproduct_diagrams, Diagram, DiagramError, NatTrans,
};
use crate::fincat::{FinCat, ObjId};
use crate::kan::free_coproduct;
use crate::ratmat::{rat, rat_int, RatMat};
use crate::rng::SplitMix64;
use std::sync::Arc;

/// Size budgets for generated instances. All sweeps are exhaustive
/// within these bounds.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    /// Largest FinSet carrier in generated diagrams.
    pub set_size: usize,
    /// Largest FinVect dimension in generated diagrams.
    pub vect_dim: usize,
    /// Maximum free pieces per generated diagram.
    pub pieces: usize,
    /// Target instance count for seeded sweeps.
    pub instances: usize,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            set_size: 3,
            vect_dim: 2,
            pieces: 2,
            instances: 60,
        }
    }
}

impl Budget {
    /// Scale the default budget by the CLI `--budget` knob.
    pub fn from_scalar(k: usize) -> Budget {
        let k = k.max(1);
        Budget {
            set_size: k.min(4),
            vect_dim: k.min(3).max(1),
            pieces: 2,
            instances: 20 * k,
        }
    }
}

pub fn random_obj(backend: Backend, budget: &Budget, rng: &mut SplitMix64) -> BaseObj {
    match backend {
        Backend::FinSet => BaseObj::set(rng.range(0, budget.set_size)),
        Backend::FinVect => BaseObj::vect(rng.range(0, budget.vect_dim)),
    }
}

pub fn random_set_mor(dom: usize, cod: usize, rng: &mut SplitMix64) -> Option<BaseMor> {
    if cod == 0 && dom > 0 {
        return None;
    }
    Some(BaseMor::FinSet(SetMor {
        dom,
        cod,
        table: (0..dom).map(|_| rng.below(cod)).collect(),
    }))
}

/// Random matrix with small exact entries (integers, halves).
pub fn random_matrix(rows: usize, cols: usize, rng: &mut SplitMix64) -> RatMat {
    RatMat::from_fn(rows, cols, |_, _| {
        if rng.chance(1, 6) {
            rat(rng.range(1, 3) as i64, 2)
        } else {
            rat_int(rng.range(0, 4) as i64 - 2)
        }
    })
}

/// Random permutation (FinSet) or exactly invertible matrix built from
/// elementary operations (FinVect).
pub fn random_iso(obj: &BaseObj, rng: &mut SplitMix64) -> BaseMor {
    match obj {
        BaseObj::FinSet { size } => {
            let mut table: Vec<usize> = (0..*size).collect();
            for i in (1..*size).rev() {
                table.swap(i, rng.below(i + 1));
            }
            BaseMor::FinSet(SetMor {
                dom: *size,
                cod: *size,
                table,
            })
        }
        BaseObj::FinVect { dim } => {
            let n = *dim;
            let mut m = RatMat::identity(n);
            for _ in 0..2 * n {
                let a = rng.below(n.max(1));
                let b = rng.below(n.max(1));
                if n == 0 || a == b {
                    continue;
                }
                // shear: row_a += c · row_b
                let c = rat_int(rng.range(0, 2) as i64 + 1);
                for col in 0..n {
                    let v = m.at(a, col) + &c * m.at(b, col);
                    m.set(a, col, v);
                }
            }
            BaseMor::FinVect(m)
        }
    }
}

/// Random injection `dom ↪ cod` (requires `dom ≤ cod`).
pub fn random_injection(
    backend: Backend,
    dom: usize,
    cod: usize,
    rng: &mut SplitMix64,
) -> BaseMor {
    debug_assert!(dom <= cod);
    match backend {
        Backend::FinSet => {
            let mut slots: Vec<usize> = (0..cod).collect();
            for i in (1..cod).rev() {
                slots.swap(i, rng.below(i + 1));
            }
            let mut table: Vec<usize> = slots.into_iter().take(dom).collect();
            table.sort();
            BaseMor::FinSet(SetMor { dom, cod, table })
        }
        Backend::FinVect => {
            // [I; R] is always injective; twist by an isomorphism
            let mut m = RatMat::zeros(cod, dom);
            for i in 0..dom {
                m.set(i, i, rat_int(1));
            }
            for r in dom..cod {
                for c in 0..dom {
                    m.set(r, c, rat_int(rng.range(0, 3) as i64 - 1));
                }
            }
            let twist = random_iso(&BaseObj::vect(cod), rng);
            BaseMor::FinVect(twist.as_mat().mul(&m))
        }
    }
}

/// Random free diagram `⊕ h_{p_r} ⊗ K_r` trimmed to the budget's size
/// cap; the pieces are returned for adjunction-based map generation.
/// Sizes come from hom counts, so nothing big is ever constructed.
pub fn random_free_diagram(
    shape: &Arc<FinCat>,
    backend: Backend,
    budget: &Budget,
    rng: &mut SplitMix64,
) -> Result<(Diagram, Vec<(ObjId, BaseObj)>), DiagramError> {
    let cap = match backend {
        Backend::FinSet => budget.set_size,
        Backend::FinVect => budget.vect_dim,
    }
    .max(1);
    let hom_size = |p: ObjId, q: ObjId| shape.hom(p, q).len();
    let fits = |pieces: &[(ObjId, BaseObj)]| {
        shape.objects().all(|q| {
            let total: usize = pieces
                .iter()
                .map(|(p, k)| hom_size(*p, q) * k.magnitude())
                .sum();
            total <= cap
        })
    };
    for _ in 0..32 {
        let count = rng.range(1, budget.pieces);
        let pieces: Vec<(ObjId, BaseObj)> = (0..count)
            .map(|_| {
                let p = ObjId(rng.below(shape.object_count()));
                let k = match backend {
                    Backend::FinSet => BaseObj::set(rng.range(1, 2)),
                    Backend::FinVect => BaseObj::vect(rng.range(1, budget.vect_dim.max(1))),
                };
                (p, k)
            })
            .collect();
        if fits(&pieces) {
            let (d, _) = free_coproduct(shape, &pieces)?;
            return Ok((d, pieces));
        }
    }
    // nothing under the cap: take a unit piece at the object whose
    // representable is smallest
    let best = shape
        .objects()
        .min_by_key(|&p| shape.objects().map(|q| hom_size(p, q)).max().unwrap_or(0))
        .unwrap_or(ObjId(0));
    let pieces = vec![(best, base::unit(backend))];
    let (d, _) = free_coproduct(shape, &pieces)?;
    Ok((d, pieces))
}

/// The transformation `h_p ⊗ K → X` classified by a base map
/// `u : K → X_p` (the free adjunction, FinSet).
pub fn free_piece_map(
    shape: &Arc<FinCat>,
    p: ObjId,
    k: &BaseObj,
    x: &Diagram,
    u: &BaseMor,
) -> Result<NatTrans, DiagramError> {
    let free = crate::kan::free_diagram(shape, p, k)?;
    let k_size = k.magnitude();
    let components = shape
        .objects()
        .map(|q| {
            let hom = shape.hom(p, q);
            let mut table = Vec::with_capacity(hom.len() * k_size);
            for &alpha in &hom {
                for e in 0..k_size {
                    table.push(x.mor(alpha).as_set().table[u.as_set().table[e]]);
                }
            }
            BaseMor::FinSet(SetMor {
                dom: hom.len() * k_size,
                cod: x.obj(q).magnitude(),
                table,
            })
        })
        .collect();
    NatTrans::new(free, x.clone(), components)
}

/// Random FinSet diagram: a free coproduct, optionally quotiented by
/// the coequalizer of two random maps out of another free piece.
pub fn random_diagram(
    shape: &Arc<FinCat>,
    backend: Backend,
    budget: &Budget,
    rng: &mut SplitMix64,
) -> Result<Diagram, DiagramError> {
    let (free, _) = random_free_diagram(shape, backend, budget, rng)?;
    if backend != Backend::FinSet || rng.chance(1, 2) {
        return Ok(free);
    }
    // quotient step: coequalize two maps from a random free piece
    let p = ObjId(rng.below(shape.object_count()));
    let k = base::unit(Backend::FinSet);
    let target_size = free.obj(p).magnitude();
    let Some(u_base) = random_set_mor(1, target_size, rng) else {
        return Ok(free);
    };
    let Some(v_base) = random_set_mor(1, target_size, rng) else {
        return Ok(free);
    };
    let u = free_piece_map(shape, p, &k, &free, &u_base)?;
    let v = free_piece_map(shape, p, &k, &free, &v_base)?;
    let (quotient, _) = coequalize_diagrams(&u, &v)?;
    Ok(quotient)
}

/// Random transformation between FinSet diagrams, drawn uniformly from
/// the full enumeration (budget-scale inputs keep this cheap).
pub fn random_nat_trans(
    x: &Diagram,
    y: &Diagram,
    rng: &mut SplitMix64,
) -> Result<Option<NatTrans>, DiagramError> {
    let all = crate::diagram::nat_trans_enumerate(x, y)?;
    if all.is_empty() {
        return Ok(None);
    }
    let k = rng.below(all.len());
    Ok(Some(all[k].clone()))
}

/// A Reedy cofibration by construction: the inclusion of `x` into its
/// coproduct with a random free diagram.
pub fn random_cofibration_into_sum(
    x: &Diagram,
    budget: &Budget,
    rng: &mut SplitMix64,
) -> Result<NatTrans, DiagramError> {
    let (extra, _) = random_free_diagram(x.shape(), x.backend(), budget, rng)?;
    let (_, injections) = coproduct_diagrams(&[x.clone(), extra])?;
    Ok(injections[0].clone())
}

/// A natural isomorphism out of `x`: the target is `x` conjugated by
/// random isomorphisms, the components are those isomorphisms.
pub fn random_iso_twist(x: &Diagram, rng: &mut SplitMix64) -> Result<NatTrans, DiagramError> {
    let shape = x.shape().clone();
    let isos: Vec<BaseMor> = shape.objects().map(|o| random_iso(x.obj(o), rng)).collect();
    let inverses: Vec<BaseMor> = isos
        .iter()
        .map(|v| base::inverse(v).expect("generated isomorphisms invert"))
        .collect();
    let at_obj: Vec<BaseObj> = x.objects().to_vec();
    let at_mor = shape
        .morphisms()
        .map(|m| {
            let (i, j) = (shape.dom(m), shape.cod(m));
            let mid = base::compose(x.mor(m), &inverses[i.0])?;
            base::compose(&isos[j.0], &mid)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let twisted = Diagram::new(shape, at_obj, at_mor)?;
    NatTrans::new(x.clone(), twisted, isos)
}

/// A FinVect Reedy fibration by construction: the projection
/// `Y ⊕ Z → Y` for random free `Y`, `Z`; when `trivial`, an
/// isomorphism twist instead.
pub fn random_finvect_fibration(
    shape: &Arc<FinCat>,
    budget: &Budget,
    trivial: bool,
    rng: &mut SplitMix64,
) -> Result<NatTrans, DiagramError> {
    let (y, _) = random_free_diagram(shape, Backend::FinVect, budget, rng)?;
    if trivial {
        let twist = random_iso_twist(&y, rng)?;
        // orient it as a map onto y
        return twist
            .iso_witness()
            .ok_or_else(|| DiagramError::Typing("twist must invert".into()));
    }
    let (z, _) = random_free_diagram(shape, Backend::FinVect, budget, rng)?;
    let (sum, _) = coproduct_diagrams(&[y.clone(), z])?;
    let components = shape
        .objects()
        .map(|o| {
            let dy = y.obj(o).magnitude();
            let total = sum.obj(o).magnitude();
            let mut m = RatMat::zeros(dy, total);
            for r in 0..dy {
                m.set(r, r, rat_int(1));
            }
            BaseMor::FinVect(m)
        })
        .collect();
    NatTrans::new(sum, y, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::ModelClasses;
    use crate::fixtures;
    use crate::reedy::reedy_classify;

    #[test]
    fn generation_is_seed_deterministic() {
        let shape = fixtures::walking_arrow();
        let budget = Budget::default();
        let d1 = random_diagram(&shape, Backend::FinSet, &budget, &mut SplitMix64::new(7))
            .unwrap();
        let d2 = random_diagram(&shape, Backend::FinSet, &budget, &mut SplitMix64::new(7))
            .unwrap();
        assert_eq!(d1, d2);
    }

    #[test]
    fn generated_diagrams_fit_budget() {
        let shape = fixtures::commutative_square();
        let budget = Budget::default();
        let mut rng = SplitMix64::new(11);
        for _ in 0..20 {
            let d = random_diagram(&shape, Backend::FinSet, &budget, &mut rng).unwrap();
            for o in shape.objects() {
                assert!(d.obj(o).magnitude() <= budget.set_size + 1);
            }
        }
    }

    #[test]
    fn cofibration_into_sum_is_reedy_cof() {
        let r = fixtures::walking_arrow_reedy();
        let budget = Budget::default();
        let mut rng = SplitMix64::new(3);
        let classes = ModelClasses::standard(Backend::FinSet);
        for _ in 0..5 {
            let x = random_diagram(&r.base, Backend::FinSet, &budget, &mut rng).unwrap();
            let f = random_cofibration_into_sum(&x, &budget, &mut rng).unwrap();
            let v = reedy_classify(&r, &f, &classes).unwrap();
            assert!(v.is_reedy_cof);
        }
    }

    #[test]
    fn iso_twist_is_natural_iso() {
        let shape = fixtures::walking_arrow();
        let budget = Budget::default();
        let mut rng = SplitMix64::new(5);
        let x = random_diagram(&shape, Backend::FinSet, &budget, &mut rng).unwrap();
        let t = random_iso_twist(&x, &mut rng).unwrap();
        assert!(t.is_natural_iso());
    }

    #[test]
    fn finvect_fibration_is_objectwise_surjective() {
        let shape = fixtures::walking_arrow();
        let budget = Budget::default();
        let mut rng = SplitMix64::new(9);
        let p = random_finvect_fibration(&shape, &budget, false, &mut rng).unwrap();
        for o in shape.objects() {
            assert!(base::is_surjective(p.component(o)));
        }
        let triv = random_finvect_fibration(&shape, &budget, true, &mut rng).unwrap();
        assert!(triv.is_natural_iso());
    }
}
