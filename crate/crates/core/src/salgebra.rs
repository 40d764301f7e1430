//! Algebras over a base semiring, the initial object of the equationally
//! cut subcategory, and the coreflection onto it.
//!
//! An algebra over a finite base `S` is a carrier together with a
//! structure homomorphism out of `S`; over the naturals the structure map
//! is forced (n maps to the n-fold sum of 1) and is not stored.

use std::fmt;

use crate::builtins;
use crate::congruence::{congruence_generated, Congruence};
use crate::hom::{Homomorphism, NotAHomomorphism};
use crate::semiring::FiniteSemiring;
use crate::subalgebra::{subalgebra_close, Subset};

/// The base of scalars: the naturals, or an explicit finite semiring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseSemiring {
    Naturals,
    Finite(FiniteSemiring),
}

impl BaseSemiring {
    pub fn is_naturals(&self) -> bool {
        matches!(self, BaseSemiring::Naturals)
    }

    pub fn label(&self) -> String {
        match self {
            BaseSemiring::Naturals => "naturals".into(),
            BaseSemiring::Finite(s) => s.label().to_owned(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SAlgebraError {
    #[error("a finite base requires a structure map; the naturals forbid one")]
    StructureMismatch,
    #[error("structure map endpoints do not match the base and carrier")]
    EndpointMismatch,
    #[error(transparent)]
    NotAHomomorphism(#[from] NotAHomomorphism),
}

/// `n * 1` in `a`, by iterated addition with cycle detection, so arbitrary
/// naturals stay cheap.
pub fn natural_image(a: &FiniteSemiring, n: usize) -> usize {
    let mut seen_at = vec![usize::MAX; a.order()];
    let mut value = 0usize;
    let mut step = 0usize;
    loop {
        if step == n {
            return value;
        }
        if seen_at[value] != usize::MAX {
            let start = seen_at[value];
            let period = step - start;
            let mut v = value;
            for _ in 0..(n - start) % period {
                v = a.add(v, a.one());
            }
            return v;
        }
        seen_at[value] = step;
        value = a.add(value, a.one());
        step += 1;
    }
}

/// Every value of `n * 1` as `n` ranges over the naturals, in first-visit
/// order starting from `0 * 1 = 0`.
pub fn natural_scalar_values(a: &FiniteSemiring) -> Vec<usize> {
    let mut out = Vec::new();
    let mut value = 0usize;
    while !out.contains(&value) {
        out.push(value);
        value = a.add(value, a.one());
    }
    out
}

/// An algebra over a base, validated at construction.
#[derive(Clone, PartialEq, Eq)]
pub struct SAlgebra {
    base: BaseSemiring,
    algebra: FiniteSemiring,
    structure: Option<Homomorphism>,
}

impl SAlgebra {
    /// Wraps a semiring as an algebra over the naturals; always valid.
    pub fn over_naturals(algebra: FiniteSemiring) -> SAlgebra {
        SAlgebra {
            base: BaseSemiring::Naturals,
            algebra,
            structure: None,
        }
    }

    /// Validates a base/carrier/structure triple.
    ///
    /// The structure map must be a homomorphism with the right endpoints,
    /// present exactly when the base is finite. The scalar-action law
    /// `s(ab) = (sa)b` is asserted by table scan.
    pub fn new(
        base: BaseSemiring,
        algebra: FiniteSemiring,
        structure: Option<Homomorphism>,
    ) -> Result<SAlgebra, SAlgebraError> {
        let out = match (&base, structure) {
            (BaseSemiring::Naturals, None) => SAlgebra {
                base,
                algebra,
                structure: None,
            },
            (BaseSemiring::Finite(s), Some(h)) => {
                if !h.source().same_tables(s) || !h.target().same_tables(&algebra) {
                    return Err(SAlgebraError::EndpointMismatch);
                }
                // Revalidate so a hand-built map cannot sneak through.
                let h = Homomorphism::validate(s, &algebra, h.map().to_vec())?;
                SAlgebra {
                    base,
                    algebra,
                    structure: Some(h),
                }
            }
            _ => return Err(SAlgebraError::StructureMismatch),
        };
        for s in out.scalar_values() {
            for a in out.algebra.elements() {
                for b in out.algebra.elements() {
                    let lhs = out.algebra.mul(s, out.algebra.mul(a, b));
                    let rhs = out.algebra.mul(out.algebra.mul(s, a), b);
                    assert_eq!(lhs, rhs, "scalar action must associate");
                }
            }
        }
        Ok(out)
    }

    pub fn base(&self) -> &BaseSemiring {
        &self.base
    }

    pub fn algebra(&self) -> &FiniteSemiring {
        &self.algebra
    }

    pub fn structure(&self) -> Option<&Homomorphism> {
        self.structure.as_ref()
    }

    pub fn label(&self) -> &str {
        self.algebra.label()
    }

    /// The scalar multiple `s . a`.
    ///
    /// For a finite base `s` indexes the base carrier; over the naturals
    /// `s` is the natural number itself.
    pub fn scalar(&self, s: usize, a: usize) -> usize {
        let s_one = match &self.structure {
            Some(h) => h.apply(s),
            None => natural_image(&self.algebra, s),
        };
        self.algebra.mul(s_one, a)
    }

    /// The finitely many values of `s . 1`, covering every scalar.
    pub fn scalar_values(&self) -> Vec<usize> {
        match &self.structure {
            Some(h) => {
                let mut out: Vec<usize> = h.map().to_vec();
                out.sort_unstable();
                out.dedup();
                out
            }
            None => {
                let mut out = natural_scalar_values(&self.algebra);
                out.sort_unstable();
                out
            }
        }
    }
}

impl fmt::Debug for SAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SAlgebra({} over {})", self.label(), self.base.label())
    }
}

/// The initial object of the subcategory cut out by `1 + 2x = 1` and
/// `x*x = x`, over the given base.
pub struct InitialObject {
    pub object: SAlgebra,
    /// For a finite base: the generating congruence and the projection.
    pub presentation: Option<(Congruence, Homomorphism)>,
}

/// Over the naturals this is the fixed three-element quotient `{0, 1, 2}`
/// with `1 + 2 = 1`; over a finite base `S` it is `S` modulo the smallest
/// congruence containing `(1 + 2s, 1)` and `(s*s, s)` for every `s`.
pub fn initial_object(base: &BaseSemiring) -> InitialObject {
    match base {
        BaseSemiring::Naturals => InitialObject {
            object: SAlgebra::over_naturals(builtins::nstar()),
            presentation: None,
        },
        BaseSemiring::Finite(s) => {
            let one = s.one();
            let mut pairs = Vec::new();
            for x in s.elements() {
                pairs.push((s.add(one, s.add(x, x)), one));
                pairs.push((s.mul(x, x), x));
            }
            let cong = congruence_generated(s, &pairs);
            let (q, proj) = cong.quotient();
            let q = q.named(&format!("I({})", s.label()));
            let proj = Homomorphism::validate(s, &q, proj.map().to_vec())
                .expect("projection survives renaming");
            let object = SAlgebra::new(base.clone(), q, Some(proj.clone()))
                .expect("the quotient is an algebra over the base");
            InitialObject {
                object,
                presentation: Some((cong, proj)),
            }
        }
    }
}

/// Whether the initial object maps into `a` (compatibly with the structure
/// map when the base is finite).
///
/// Over the naturals this is the table identity `1 + 1 + 1 = 1`: a map from
/// the initial object is determined on `{0, 1, 2} = {0, 1, 1+1}`, and that
/// identity makes the forced map a homomorphism.
pub fn is_over_initial(a: &SAlgebra) -> bool {
    match a.structure() {
        None => {
            let alg = a.algebra();
            let one = alg.one();
            alg.add(one, alg.add(one, one)) == one
        }
        Some(f) => {
            let initial = initial_object(a.base());
            let (_, proj) = initial
                .presentation
                .as_ref()
                .expect("finite bases carry a presentation");
            // A compatible map out of the quotient is forced: the class of
            // s must land on f(s). It exists iff that assignment is
            // well-defined and a homomorphism.
            let i_alg = initial.object.algebra();
            let unset = usize::MAX;
            let mut candidate = vec![unset; i_alg.order()];
            for s in f.source().elements() {
                let class = proj.apply(s);
                if candidate[class] != unset && candidate[class] != f.apply(s) {
                    return false;
                }
                candidate[class] = f.apply(s);
            }
            Homomorphism::validate(i_alg, a.algebra(), candidate).is_ok()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CoreflectionError {
    #[error("{label} is not an algebra over the initial object")]
    NotOverInitial { label: String },
}

/// The elements satisfying `1 + 2a = 1` and `a*a = a`.
pub fn star_subset(a: &SAlgebra) -> Result<Subset, CoreflectionError> {
    if !is_over_initial(a) {
        return Err(CoreflectionError::NotOverInitial {
            label: a.label().to_owned(),
        });
    }
    let alg = a.algebra();
    let one = alg.one();
    Ok(Subset::new(
        alg,
        alg.elements()
            .filter(|&x| alg.add(one, alg.add(x, x)) == one && alg.mul(x, x) == x),
    ))
}

/// The coreflection of `a` onto the star subvariety.
#[derive(Clone, Debug)]
pub struct Coreflection {
    pub object: SAlgebra,
    /// Inclusion of the coreflection into the ambient algebra.
    pub inclusion: Homomorphism,
    /// The star subset in the ambient indexing.
    pub subset: Subset,
}

/// Carves out the star subset as a subalgebra.
///
/// The subset is already closed under both operations and the scalar
/// action whenever `a` is over the initial object; closure is asserted,
/// not extended.
pub fn coreflect(a: &SAlgebra) -> Result<Coreflection, CoreflectionError> {
    let subset = star_subset(a)?;
    let closure = subalgebra_close(a.algebra(), subset.members());
    assert_eq!(
        closure.subset.members(),
        subset.members(),
        "the star subset must already be closed"
    );
    let name = format!("{}'", a.label());
    let sub_alg = closure.algebra.clone().named(&name);
    let inclusion = Homomorphism::validate(&sub_alg, a.algebra(), closure.inclusion.map().to_vec())
        .expect("inclusion survives renaming");
    let structure = match a.structure() {
        None => None,
        Some(f) => {
            let layout = inclusion.map();
            let map: Vec<usize> = f
                .map()
                .iter()
                .map(|&v| {
                    layout
                        .iter()
                        .position(|&m| m == v)
                        .expect("scalar images land in the star subset")
                })
                .collect();
            Some(
                Homomorphism::validate(f.source(), &sub_alg, map)
                    .expect("restricted structure map is a homomorphism"),
            )
        }
    };
    let object = SAlgebra::new(a.base().clone(), sub_alg, structure)
        .expect("the star subalgebra is an algebra over the base");
    Ok(Coreflection {
        object,
        inclusion,
        subset,
    })
}
