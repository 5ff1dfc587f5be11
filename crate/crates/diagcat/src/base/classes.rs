//! Declared cofibration / weak-equivalence / fibration classes.
//!
//! Classes are data (named decidable predicates), not derived from
//! lifting or factorization; the harness tests closure conclusions, not
//! the model axioms of the base.

use super::{is_bijective, is_injective, is_surjective, BaseMor, Backend};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassPredicate {
    All,
    Injective,
    Surjective,
    Bijective,
}

impl ClassPredicate {
    pub fn holds(&self, f: &BaseMor) -> bool {
        match self {
            ClassPredicate::All => true,
            ClassPredicate::Injective => is_injective(f),
            ClassPredicate::Surjective => is_surjective(f),
            ClassPredicate::Bijective => is_bijective(f),
        }
    }
}

impl fmt::Display for ClassPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassPredicate::All => "all",
            ClassPredicate::Injective => "injective",
            ClassPredicate::Surjective => "surjective",
            ClassPredicate::Bijective => "bijective",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for ClassPredicate {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(ClassPredicate::All),
            "injective" => Ok(ClassPredicate::Injective),
            "surjective" => Ok(ClassPredicate::Surjective),
            "bijective" => Ok(ClassPredicate::Bijective),
            other => Err(format!("unknown class predicate: {other}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelClasses {
    pub cof: ClassPredicate,
    pub we: ClassPredicate,
    pub fib: ClassPredicate,
}

impl ModelClasses {
    /// The standard classes. FinSet: cofibrations are injections, weak
    /// equivalences bijections, every map a fibration. FinVect:
    /// injective / bijective / surjective by exact rank.
    pub fn standard(backend: Backend) -> ModelClasses {
        match backend {
            Backend::FinSet => ModelClasses {
                cof: ClassPredicate::Injective,
                we: ClassPredicate::Bijective,
                fib: ClassPredicate::All,
            },
            Backend::FinVect => ModelClasses {
                cof: ClassPredicate::Injective,
                we: ClassPredicate::Bijective,
                fib: ClassPredicate::Surjective,
            },
        }
    }

    pub fn is_cof(&self, f: &BaseMor) -> bool {
        self.cof.holds(f)
    }

    pub fn is_we(&self, f: &BaseMor) -> bool {
        self.we.holds(f)
    }

    pub fn is_fib(&self, f: &BaseMor) -> bool {
        self.fib.holds(f)
    }

    pub fn is_trivial_cof(&self, f: &BaseMor) -> bool {
        self.is_cof(f) && self.is_we(f)
    }

    pub fn is_trivial_fib(&self, f: &BaseMor) -> bool {
        self.is_fib(f) && self.is_we(f)
    }

    /// A class containing every map makes closure statements vacuous;
    /// reports carry this as a warning rather than an error.
    pub fn degeneracy_warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if self.cof == ClassPredicate::All {
            w.push("cofibration class contains all maps; closure checks are vacuous".into());
        }
        if self.we == ClassPredicate::All {
            w.push("weak-equivalence class contains all maps; triviality checks are vacuous".into());
        }
        w
    }
}
