//! Built-in fixture catalog: the small index categories every check
//! runs against, with their Reedy structures where applicable.

use crate::fincat::{FinCat, MorClass, MorData, MorId, ObjId, ReedyData};
use std::collections::HashMap;
use std::path::Path;
use std::sync::{Arc, Mutex};

/// Assemble a category from labels, morphisms, and the non-identity part
/// of the composition table; unit compositions are filled in.
fn build_cat(
    labels: &[&str],
    mors: Vec<(usize, usize, &str)>,
    identities: &[usize],
    comp_nonunit: &[(usize, usize, usize)],
) -> FinCat {
    let mor_data: Vec<MorData> = mors
        .into_iter()
        .map(|(d, c, l)| MorData {
            dom: ObjId(d),
            cod: ObjId(c),
            label: l.to_string(),
        })
        .collect();
    let ids: Vec<MorId> = identities.iter().map(|&i| MorId(i)).collect();
    let mut comp: HashMap<(usize, usize), usize> = HashMap::new();
    for (m, data) in mor_data.iter().enumerate() {
        comp.insert((m, identities[data.dom.0]), m);
        comp.insert((identities[data.cod.0], m), m);
    }
    for &(g, f, gf) in comp_nonunit {
        comp.insert((g, f), gf);
    }
    let mut comp_list: Vec<(MorId, MorId, MorId)> = comp
        .into_iter()
        .map(|((g, f), gf)| (MorId(g), MorId(f), MorId(gf)))
        .collect();
    comp_list.sort();
    FinCat::new(
        labels.iter().map(|s| s.to_string()).collect(),
        mor_data,
        ids,
        comp_list,
    )
    .expect("builtin fixture must construct")
}

/// The walking arrow `a → b`: morphisms `id_a`(0), `id_b`(1), `f`(2).
pub fn walking_arrow() -> Arc<FinCat> {
    Arc::new(build_cat(
        &["a", "b"],
        vec![(0, 0, "id_a"), (1, 1, "id_b"), (0, 1, "f")],
        &[0, 1],
        &[],
    ))
}

pub fn walking_arrow_reedy() -> ReedyData {
    ReedyData::new(walking_arrow(), vec![0, 1], vec![(MorId(2), MorClass::Direct)])
        .expect("fixture reedy data")
}

/// Commutative square `a → b, c → d` with a single diagonal composite.
/// Morphisms: ids 0–3, `f:a→b`(4), `g:a→c`(5), `h:b→d`(6), `k:c→d`(7),
/// `hf = kg`(8).
pub fn commutative_square() -> Arc<FinCat> {
    Arc::new(build_cat(
        &["a", "b", "c", "d"],
        vec![
            (0, 0, "id_a"),
            (1, 1, "id_b"),
            (2, 2, "id_c"),
            (3, 3, "id_d"),
            (0, 1, "f"),
            (0, 2, "g"),
            (1, 3, "h"),
            (2, 3, "k"),
            (0, 3, "hf"),
        ],
        &[0, 1, 2, 3],
        &[(6, 4, 8), (7, 5, 8)],
    ))
}

pub fn commutative_square_reedy() -> ReedyData {
    let class = [4, 5, 6, 7, 8]
        .into_iter()
        .map(|m| (MorId(m), MorClass::Direct))
        .collect();
    ReedyData::new(commutative_square(), vec![0, 1, 1, 2], class).expect("fixture reedy data")
}

/// The pushout corner `b ← a → c`: ids 0–2, `f:a→b`(3), `g:a→c`(4).
pub fn pushout_corner() -> Arc<FinCat> {
    Arc::new(build_cat(
        &["a", "b", "c"],
        vec![(0, 0, "id_a"), (1, 1, "id_b"), (2, 2, "id_c"), (0, 1, "f"), (0, 2, "g")],
        &[0, 1, 2],
        &[],
    ))
}

pub fn pushout_corner_reedy() -> ReedyData {
    let class = vec![(MorId(3), MorClass::Direct), (MorId(4), MorClass::Direct)];
    ReedyData::new(pushout_corner(), vec![0, 1, 1], class).expect("fixture reedy data")
}

pub fn discrete(n: usize) -> Arc<FinCat> {
    let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let mors: Vec<MorData> = (0..n)
        .map(|i| MorData {
            dom: ObjId(i),
            cod: ObjId(i),
            label: format!("id_x{i}"),
        })
        .collect();
    let ids: Vec<MorId> = (0..n).map(MorId).collect();
    let comp = (0..n).map(|i| (MorId(i), MorId(i), MorId(i))).collect();
    Arc::new(
        FinCat::new(labels, mors, ids, comp).expect("discrete fixture must construct"),
    )
}

pub fn discrete_3_reedy() -> ReedyData {
    ReedyData::new(discrete(3), vec![0, 0, 0], vec![]).expect("fixture reedy data")
}

/// One object, one (identity) morphism.
pub fn terminal_cat() -> Arc<FinCat> {
    discrete(1)
}

/// Monotone maps `[m] → [n]` for `m, n ≤ 2`, as `(m, n, values)` in
/// lexicographic order; shared by the category construction and the
/// Reedy classification.
fn delta_maps() -> Vec<(usize, usize, Vec<usize>)> {
    let mut mors = Vec::new();
    for m in 0..=2usize {
        for n in 0..=2usize {
            let mut maps = Vec::new();
            enumerate_monotone(m + 1, n, &mut Vec::new(), &mut maps);
            maps.sort();
            for vals in maps {
                mors.push((m, n, vals));
            }
        }
    }
    mors
}

fn enumerate_monotone(len: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    let lo = cur.last().copied().unwrap_or(0);
    for v in lo..=max {
        cur.push(v);
        enumerate_monotone(len, max, cur, out);
        cur.pop();
    }
}

/// Monotone maps `[m] → [n]` for `m, n ≤ 2`, in lexicographic order of
/// `(m, n, values)`. Labels look like `"01:1->1"` (the value digits,
/// then the endpoints).
pub fn delta_le2() -> Arc<FinCat> {
    let mors = delta_maps();
    let index: HashMap<(usize, usize, Vec<usize>), usize> = mors
        .iter()
        .enumerate()
        .map(|(i, (m, n, v))| ((*m, *n, v.clone()), i))
        .collect();
    let mor_data: Vec<MorData> = mors
        .iter()
        .map(|(m, n, v)| {
            let digits: String = v.iter().map(|d| d.to_string()).collect();
            MorData {
                dom: ObjId(*m),
                cod: ObjId(*n),
                label: format!("{digits}:{m}->{n}"),
            }
        })
        .collect();
    let identities: Vec<MorId> = (0..=2usize)
        .map(|m| MorId(index[&(m, m, (0..=m).collect::<Vec<_>>())]))
        .collect();
    let mut comp = Vec::new();
    for (gi, (gm, gn, gv)) in mors.iter().enumerate() {
        for (fi, (fm, fn_, fv)) in mors.iter().enumerate() {
            if fn_ != gm {
                continue;
            }
            let composed: Vec<usize> = fv.iter().map(|&x| gv[x]).collect();
            let ci = index[&(*fm, *gn, composed)];
            comp.push((MorId(gi), MorId(fi), MorId(ci)));
        }
    }
    Arc::new(
        FinCat::new(
            vec!["[0]".into(), "[1]".into(), "[2]".into()],
            mor_data,
            identities,
            comp,
        )
        .expect("delta fixture must construct"),
    )
}

/// The opposite of `delta_le2` with its standard Reedy structure:
/// degree of `[n]` is `n`; opposites of surjections raise degree
/// (direct), opposites of injections lower it (inverse); mixed maps
/// stay unclassified and factor uniquely.
pub fn delta_op_le2() -> ReedyData {
    let delta = delta_le2();
    let mut op = delta.opposite();
    op.description = Some(
        "truncated simplex category, opposite orientation: objects [0],[1],[2]; \
         hom([n],[m]) here = monotone maps [m]->[n]; opposites of surjections are \
         direct (degree-raising), opposites of injections are inverse"
            .to_string(),
    );
    let op = Arc::new(op);
    let mut class = Vec::new();
    for (i, (_, n, values)) in delta_maps().into_iter().enumerate() {
        let m = MorId(i);
        if delta.is_identity(m) {
            continue;
        }
        let injective = values.windows(2).all(|w| w[0] < w[1]);
        let surjective = (0..=n).all(|v| values.contains(&v));
        if surjective && !injective {
            class.push((m, MorClass::Direct));
        } else if injective && !surjective {
            class.push((m, MorClass::Inverse));
        }
        // neither: mixed, unclassified
    }
    ReedyData::new(op, vec![0, 1, 2], class).expect("fixture reedy data")
}

/// Product of `delta_op_le2`'s category with itself (9 objects), the
/// index shape for bivariate presheaf checks.
pub fn delta_op_le2_square() -> Arc<FinCat> {
    let op = delta_op_le2().base;
    Arc::new(op.product(&op).expect("square fixture must construct"))
}

/// A named fixture: its category, plus Reedy data when the fixture
/// carries a canonical Reedy structure.
#[derive(Clone)]
pub struct FixtureEntry {
    pub name: String,
    pub cat: Arc<FinCat>,
    pub reedy: Option<ReedyData>,
}

/// Fixtures loaded from user files at run time, addressed as
/// `file:<path>`.
static ADHOC: Mutex<Vec<FixtureEntry>> = Mutex::new(Vec::new());

pub fn register_adhoc(path: &Path, cat: Arc<FinCat>, reedy: Option<ReedyData>) -> String {
    let name = format!("file:{}", path.display());
    ADHOC.lock().unwrap().push(FixtureEntry {
        name: name.clone(),
        cat,
        reedy,
    });
    name
}

pub const FIXTURE_NAMES: &[&str] = &[
    "walking-arrow",
    "commutative-square",
    "pushout-corner",
    "discrete-3",
    "delta-op-le2",
    "delta-op-le2-square",
];

pub fn by_name(name: &str) -> Option<FixtureEntry> {
    if name.starts_with("file:") {
        return ADHOC
            .lock()
            .unwrap()
            .iter()
            .find(|e| e.name == name)
            .cloned();
    }
    let entry = match name {
        "walking-arrow" => FixtureEntry {
            name: name.to_string(),
            cat: walking_arrow(),
            reedy: Some(walking_arrow_reedy()),
        },
        "commutative-square" => FixtureEntry {
            name: name.to_string(),
            cat: commutative_square(),
            reedy: Some(commutative_square_reedy()),
        },
        "pushout-corner" => FixtureEntry {
            name: name.to_string(),
            cat: pushout_corner(),
            reedy: Some(pushout_corner_reedy()),
        },
        "discrete-3" => FixtureEntry {
            name: name.to_string(),
            cat: discrete(3),
            reedy: Some(discrete_3_reedy()),
        },
        "delta-op-le2" => {
            let r = delta_op_le2();
            FixtureEntry {
                name: name.to_string(),
                cat: r.base.clone(),
                reedy: Some(r),
            }
        }
        "delta-op-le2-square" => FixtureEntry {
            name: name.to_string(),
            cat: delta_op_le2_square(),
            reedy: None,
        },
        _ => return None,
    };
    Some(entry)
}

pub fn all() -> Vec<FixtureEntry> {
    FIXTURE_NAMES
        .iter()
        .map(|n| by_name(n).expect("builtin name"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixture_categories_are_valid() {
        for entry in all() {
            let report = entry.cat.validate();
            assert!(report.is_valid(), "{}: {report}", entry.name);
            if let Some(r) = &entry.reedy {
                let rep = r.validate();
                assert!(rep.is_valid(), "{}: {rep}", entry.name);
            }
        }
    }

    #[test]
    fn delta_le2_morphism_counts() {
        let d = delta_le2();
        assert_eq!(d.object_count(), 3);
        // hom sizes: monotone maps [m]→[n]
        let expect = [
            [1, 2, 3], // from [0]
            [1, 3, 6], // from [1]
            [1, 4, 10], // from [2]
        ];
        for m in 0..3 {
            for n in 0..3 {
                assert_eq!(
                    d.hom(ObjId(m), ObjId(n)).len(),
                    expect[m][n],
                    "hom([{m}],[{n}])"
                );
            }
        }
        assert_eq!(d.morphism_count(), 31);
        assert!(d.validate().is_valid());
    }

    #[test]
    fn delta_op_hom_counts_swap() {
        let r = delta_op_le2();
        // in the opposite, hom([1],[2]) = monotone maps [2]→[1]: 4 of them
        assert_eq!(r.base.hom(ObjId(1), ObjId(2)).len(), 4);
        assert_eq!(r.base.hom(ObjId(2), ObjId(1)).len(), 6);
    }

    #[test]
    fn square_fixture_object_count() {
        assert_eq!(delta_op_le2_square().object_count(), 9);
    }

    #[test]
    fn walking_arrow_direct_part_is_itself() {
        let r = walking_arrow_reedy();
        let (d, _) = r.direct_part().unwrap();
        assert_eq!(d.morphism_count(), r.base.morphism_count());
    }
}
