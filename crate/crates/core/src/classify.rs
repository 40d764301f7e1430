//! Membership tests for the handful of named equational classes the
//! toolkit cares about, plus a small flag-set type for reporting them.

use std::fmt;
use std::str::FromStr;

use crate::semiring::FiniteSemiring;
use crate::term::{check_identity, Identity, Term, VarietySpec};

/// The named classes a finite commutative semiring can land in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarietyFlag {
    /// Commutative rings with `1 + 1 = 0`.
    CRings2,
    /// Additively idempotent: `x + x = x`.
    Aicsr,
    /// Boolean rings: `CRings2` plus `x*x = x`.
    BRings,
    /// Bounded distributive lattices: `x + x = x`, `x*x = x`, `1 + x = 1`.
    DLat,
    /// The star subvariety: `1 + 2x = 1` and `x*x = x`.
    CsrStar,
}

impl VarietyFlag {
    pub const ALL: [VarietyFlag; 5] = [
        VarietyFlag::CRings2,
        VarietyFlag::Aicsr,
        VarietyFlag::BRings,
        VarietyFlag::DLat,
        VarietyFlag::CsrStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VarietyFlag::CRings2 => "CRings2",
            VarietyFlag::Aicsr => "AICSR",
            VarietyFlag::BRings => "BRings",
            VarietyFlag::DLat => "DLat",
            VarietyFlag::CsrStar => "CSRstar",
        }
    }
}

impl fmt::Display for VarietyFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown class {0:?}; expected one of CRings2, AICSR, BRings, DLat, CSRstar")]
pub struct UnknownFlag(pub String);

impl FromStr for VarietyFlag {
    type Err = UnknownFlag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VarietyFlag::ALL
            .into_iter()
            .find(|f| s.eq_ignore_ascii_case(f.name()))
            .ok_or_else(|| UnknownFlag(s.to_owned()))
    }
}

/// A set of variety flags, printed in the fixed order of `VarietyFlag::ALL`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
pub struct FlagSet(u8);

impl FlagSet {
    pub fn empty() -> FlagSet {
        FlagSet(0)
    }

    fn bit(flag: VarietyFlag) -> u8 {
        1 << (flag as u8)
    }

    pub fn insert(&mut self, flag: VarietyFlag) {
        self.0 |= FlagSet::bit(flag);
    }

    pub fn contains(self, flag: VarietyFlag) -> bool {
        self.0 & FlagSet::bit(flag) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = VarietyFlag> {
        VarietyFlag::ALL.into_iter().filter(move |&f| self.contains(f))
    }
}

impl FromIterator<VarietyFlag> for FlagSet {
    fn from_iter<I: IntoIterator<Item = VarietyFlag>>(iter: I) -> FlagSet {
        let mut out = FlagSet::empty();
        for f in iter {
            out.insert(f);
        }
        out
    }
}

impl fmt::Display for FlagSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for flag in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            f.write_str(flag.name())?;
            first = false;
        }
        Ok(())
    }
}

fn holds(a: &FiniteSemiring, id: &Identity) -> bool {
    check_identity(a, id).is_ok()
}

/// Computes every flag that applies to `a`.
pub fn classify(a: &FiniteSemiring) -> FlagSet {
    let x = Term::var("x");
    let add_idem = Identity::new("x+x=x", Term::sum(x.clone(), x.clone()), x.clone(), &["x"])
        .expect("closed form");
    let mul_idem = Identity::new("x*x=x", Term::prod(x.clone(), x.clone()), x.clone(), &["x"])
        .expect("closed form");
    let one_absorbs = Identity::new("1+x=1", Term::sum(Term::One, x.clone()), Term::One, &["x"])
        .expect("closed form");

    let two_is_zero = a.add(a.one(), a.one()) == 0;
    let has_inverses = a
        .elements()
        .all(|p| a.elements().any(|q| a.add(p, q) == 0));
    let crings2 = two_is_zero && has_inverses;
    let aicsr = holds(a, &add_idem);
    let square_free = holds(a, &mul_idem);

    let mut flags = FlagSet::empty();
    if crings2 {
        flags.insert(VarietyFlag::CRings2);
    }
    if aicsr {
        flags.insert(VarietyFlag::Aicsr);
    }
    if crings2 && square_free {
        flags.insert(VarietyFlag::BRings);
    }
    if aicsr && square_free && holds(a, &one_absorbs) {
        flags.insert(VarietyFlag::DLat);
    }
    if VarietySpec::star().holds_in(a).is_ok() {
        flags.insert(VarietyFlag::CsrStar);
    }
    flags
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use VarietyFlag::*;

    fn flags_of(a: &FiniteSemiring) -> Vec<VarietyFlag> {
        classify(a).iter().collect()
    }

    #[test]
    fn fixture_classifications() {
        assert_eq!(flags_of(&builtins::triv()), vec![CRings2, Aicsr, BRings, DLat, CsrStar]);
        assert_eq!(flags_of(&builtins::z2()), vec![CRings2, BRings, CsrStar]);
        assert_eq!(flags_of(&builtins::boolean()), vec![Aicsr, DLat, CsrStar]);
        assert_eq!(flags_of(&builtins::nstar()), vec![CsrStar]);
        assert_eq!(flags_of(&builtins::c3()), vec![Aicsr, DLat, CsrStar]);
        assert_eq!(flags_of(&builtins::z4()), vec![]);
        assert_eq!(flags_of(&builtins::d4()), vec![CRings2]);
    }

    #[test]
    fn flag_names_round_trip() {
        for flag in VarietyFlag::ALL {
            assert_eq!(flag.name().parse::<VarietyFlag>(), Ok(flag));
        }
        assert_eq!("csrstar".parse::<VarietyFlag>(), Ok(CsrStar));
        assert_eq!("aicsr".parse::<VarietyFlag>(), Ok(Aicsr));
        assert!("Lattice".parse::<VarietyFlag>().is_err());
    }

    #[test]
    fn flag_set_display_is_ordered_and_dash_when_empty() {
        assert_eq!(FlagSet::empty().to_string(), "-");
        let set: FlagSet = [CsrStar, CRings2].into_iter().collect();
        assert_eq!(set.to_string(), "CRings2 CSRstar");
        assert_eq!(set.len(), 2);
        assert!(set.contains(CRings2) && !set.contains(BRings));
    }

    #[test]
    fn rings_with_two_torsion_need_inverses() {
        // A chain lattice has 1 + 1 = 1, so two_is_zero fails on BOOL and
        // inverses fail on NSTAR even though 1 + 1 + 1 = 1 there.
        assert!(!classify(&builtins::boolean()).contains(CRings2));
        assert!(!classify(&builtins::nstar()).contains(CRings2));
    }
}
