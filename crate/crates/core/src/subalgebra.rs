//! Subsets of a carrier and closure under the semiring operations.

use std::collections::BTreeSet;

use crate::hom::Homomorphism;
use crate::semiring::FiniteSemiring;

/// A subset of a semiring's carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subset {
    algebra: FiniteSemiring,
    members: BTreeSet<usize>,
}

impl Subset {
    pub fn new(algebra: &FiniteSemiring, members: impl IntoIterator<Item = usize>) -> Subset {
        let members: BTreeSet<usize> = members.into_iter().collect();
        assert!(
            members.iter().all(|&x| x < algebra.order()),
            "subset member outside the carrier"
        );
        Subset {
            algebra: algebra.clone(),
            members,
        }
    }

    pub fn algebra(&self) -> &FiniteSemiring {
        &self.algebra
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(&x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.algebra.order()
    }

    /// Closed under both operations (constants not required).
    pub fn is_closed(&self) -> bool {
        self.members.iter().all(|&x| {
            self.members.iter().all(|&y| {
                self.contains(self.algebra.add(x, y)) && self.contains(self.algebra.mul(x, y))
            })
        })
    }
}

/// The subalgebra generated by a seed: the least subset containing the seed
/// and both identities, closed under the operations.
#[derive(Clone, Debug)]
pub struct SubalgebraClosure {
    /// The closed subset, in the ambient indexing.
    pub subset: Subset,
    /// The induced algebra, re-indexed with 0 at 0 and 1 at 1.
    pub algebra: FiniteSemiring,
    /// The inclusion of the induced algebra into the ambient one.
    pub inclusion: Homomorphism,
}

/// Worklist closure of `seed + {0, 1}` under addition and multiplication.
pub fn subalgebra_close(a: &FiniteSemiring, seed: &BTreeSet<usize>) -> SubalgebraClosure {
    let mut members: BTreeSet<usize> = seed.clone();
    assert!(
        members.iter().all(|&x| x < a.order()),
        "seed member outside the carrier"
    );
    members.insert(0);
    members.insert(a.one());
    loop {
        let mut fresh = Vec::new();
        for &x in &members {
            for &y in &members {
                for v in [a.add(x, y), a.mul(x, y)] {
                    if !members.contains(&v) {
                        fresh.push(v);
                    }
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        members.extend(fresh);
    }

    // Ascending order keeps 0 and 1 at the pinned indices.
    let layout: Vec<usize> = members.iter().copied().collect();
    let position = |v: usize| layout.binary_search(&v).expect("closed under operations");
    let name = format!("{}|sub", a.label());
    let algebra = FiniteSemiring::from_fn(
        Some(&name),
        layout.len(),
        |x, y| position(a.add(layout[x], layout[y])),
        |x, y| position(a.mul(layout[x], layout[y])),
    )
    .expect("induced tables satisfy the axioms");
    let inclusion =
        Homomorphism::validate(&algebra, a, layout.clone()).expect("inclusion is a homomorphism");
    SubalgebraClosure {
        subset: Subset {
            algebra: a.clone(),
            members,
        },
        algebra,
        inclusion,
    }
}
