//! Congruences on a finite semiring, their generation from pairs, and
//! quotient algebras.

use std::fmt;

use crate::hom::Homomorphism;
use crate::semiring::FiniteSemiring;

/// Union-find with path compression.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the two classes; `true` if they were distinct.
    pub(crate) fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        // Root at the smaller index so representatives are canonical.
        let (lo, hi) = (rx.min(ry), rx.max(ry));
        self.parent[hi] = lo;
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CongruenceError {
    #[error("classes do not partition the carrier: {0}")]
    NotAPartition(String),
    #[error("not compatible with {op} at witness {witness:?}")]
    NotCompatible { op: char, witness: (usize, usize, usize) },
}

use CongruenceError::NotCompatible;

/// An equivalence relation on the carrier compatible with both operations.
///
/// Stored as a representative map: each element points at the least element
/// of its class.
#[derive(Clone, PartialEq, Eq)]
pub struct Congruence {
    algebra: FiniteSemiring,
    repr: Vec<usize>,
}

impl Congruence {
    /// The diagonal congruence.
    pub fn identity(a: &FiniteSemiring) -> Congruence {
        Congruence {
            algebra: a.clone(),
            repr: a.elements().collect(),
        }
    }

    /// Builds a congruence from explicit classes, validating that they
    /// partition the carrier and are compatible with the tables.
    pub fn from_classes(
        a: &FiniteSemiring,
        classes: &[Vec<usize>],
    ) -> Result<Congruence, CongruenceError> {
        let n = a.order();
        let mut repr = vec![usize::MAX; n];
        for class in classes {
            let least = *class
                .iter()
                .min()
                .ok_or_else(|| CongruenceError::NotAPartition("empty class".into()))?;
            for &x in class {
                if x >= n {
                    return Err(CongruenceError::NotAPartition(format!(
                        "element {x} outside the carrier"
                    )));
                }
                if repr[x] != usize::MAX {
                    return Err(CongruenceError::NotAPartition(format!(
                        "element {x} listed twice"
                    )));
                }
                repr[x] = least;
            }
        }
        if let Some(x) = repr.iter().position(|&r| r == usize::MAX) {
            return Err(CongruenceError::NotAPartition(format!(
                "element {x} missing from every class"
            )));
        }
        let cong = Congruence {
            algebra: a.clone(),
            repr,
        };
        cong.check_compatible()?;
        Ok(cong)
    }

    fn check_compatible(&self) -> Result<(), CongruenceError> {
        let a = &self.algebra;
        for x in a.elements() {
            for y in a.elements() {
                if !self.same(x, y) {
                    continue;
                }
                for c in a.elements() {
                    if !self.same(a.add(x, c), a.add(y, c)) {
                        return Err(NotCompatible {
                            op: '+',
                            witness: (x, y, c),
                        });
                    }
                    if !self.same(a.mul(x, c), a.mul(y, c)) {
                        return Err(NotCompatible {
                            op: '*',
                            witness: (x, y, c),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &FiniteSemiring {
        &self.algebra
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.repr[x] == self.repr[y]
    }

    pub fn representative(&self, x: usize) -> usize {
        self.repr[x]
    }

    /// Classes sorted by least member, members ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in self.algebra.elements() {
            if self.repr[x] == x {
                out.push(vec![x]);
            } else {
                let r = self.repr[x];
                out.iter_mut()
                    .find(|class| class[0] == r)
                    .expect("representative seen before its members")
                    .push(x);
            }
        }
        out
    }

    pub fn class_count(&self) -> usize {
        self.algebra
            .elements()
            .filter(|&x| self.repr[x] == x)
            .count()
    }

    /// The quotient semiring and its projection.
    ///
    /// Classes are re-indexed with the class of 0 at index 0 and the class
    /// of 1 at index 1; remaining classes follow in order of least member.
    /// The quotient tables are re-validated defensively.
    pub fn quotient(&self) -> (FiniteSemiring, Homomorphism) {
        let a = &self.algebra;
        let mut reps: Vec<usize> = a.elements().filter(|&x| self.repr[x] == x).collect();
        // Pull the classes of 0 and 1 to the pinned indices.
        let zero_rep = self.repr[0];
        let one_rep = self.repr[a.one()];
        reps.retain(|&r| r != zero_rep && r != one_rep);
        let mut layout = vec![zero_rep];
        if one_rep != zero_rep {
            layout.push(one_rep);
        }
        layout.extend(reps);

        let class_index = |x: usize| {
            let r = self.repr[x];
            layout.iter().position(|&p| p == r).expect("every class is laid out")
        };
        let k = layout.len();
        let name = format!("{}/E", a.label());
        let quotient = FiniteSemiring::from_fn(
            Some(&name),
            k,
            |x, y| class_index(a.add(layout[x], layout[y])),
            |x, y| class_index(a.mul(layout[x], layout[y])),
        )
        .expect("congruence quotients satisfy the axioms");
        let projection =
            Homomorphism::validate(a, &quotient, a.elements().map(class_index).collect())
                .expect("the projection is a homomorphism");
        (quotient, projection)
    }
}

impl fmt::Debug for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Congruence(on {}, {:?})", self.algebra.label(), self.classes())
    }
}

/// The smallest congruence containing the given pairs.
///
/// Union-find plus a worklist: every merged pair `(x, y)` enqueues
/// `(x + c, y + c)` and `(x * c, y * c)` for all `c`, to a fixpoint.
pub fn congruence_generated(a: &FiniteSemiring, pairs: &[(usize, usize)]) -> Congruence {
    let n = a.order();
    let mut uf = UnionFind::new(n);
    let mut work: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((x, y)) = work.pop() {
        assert!(x < n && y < n, "generator pair outside the carrier");
        if !uf.union(x, y) {
            continue;
        }
        for c in a.elements() {
            work.push((a.add(x, c), a.add(y, c)));
            work.push((a.mul(x, c), a.mul(y, c)));
        }
    }
    let mut repr = vec![0usize; n];
    for x in 0..n {
        repr[x] = uf.find(x);
    }
    // Roots are the least members because unions keep the smaller index.
    Congruence {
        algebra: a.clone(),
        repr,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    #[test]
    fn no_pairs_gives_the_diagonal() {
        let e = congruence_generated(&builtins::d4(), &[]);
        assert_eq!(e, Congruence::identity(&builtins::d4()));
        assert_eq!(e.class_count(), 4);
    }

    #[test]
    fn collapsing_zero_and_one_collapses_everything() {
        let e = congruence_generated(&builtins::z2(), &[(0, 1)]);
        assert_eq!(e.classes(), vec![vec![0, 1]]);
        let (q, _) = e.quotient();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn nstar_identifying_one_and_two() {
        let e = congruence_generated(&builtins::nstar(), &[(1, 2)]);
        assert_eq!(e.classes(), vec![vec![0], vec![1, 2]]);
        let (q, proj) = e.quotient();
        assert_eq!(q.order(), 2);
        // 1 + 1 = 2 ~ 1, so the quotient is the Boolean semiring.
        assert_eq!(q.add(1, 1), 1);
        assert_eq!(proj.map(), &[0, 1, 1]);
    }

    #[test]
    fn z4_identifying_zero_and_two() {
        let e = congruence_generated(&builtins::z4(), &[(0, 2)]);
        assert_eq!(e.classes(), vec![vec![0, 2], vec![1, 3]]);
        let (q, _) = e.quotient();
        assert_eq!(q.order(), 2);
        assert_eq!(q.add(1, 1), 0);
    }

    #[test]
    fn generated_congruence_is_the_least_one_containing_the_pairs() {
        // Oracle: enumerate every partition of the carrier, keep the
        // congruences containing the pairs, and intersect-compare.
        for (a, pairs) in [
            (builtins::nstar(), vec![(1, 2)]),
            (builtins::z4(), vec![(0, 2)]),
            (builtins::z4(), vec![(1, 3)]),
            (builtins::d4(), vec![(2, 0)]),
            (builtins::c3(), vec![(2, 1)]),
        ] {
            let generated = congruence_generated(&a, &pairs);
            let candidates: Vec<Congruence> = all_partitions(a.order())
                .into_iter()
                .filter_map(|classes| Congruence::from_classes(&a, &classes).ok())
                .filter(|e| pairs.iter().all(|&(x, y)| e.same(x, y)))
                .collect();
            assert!(!candidates.is_empty());
            for e in &candidates {
                // generated refines every candidate.
                for x in a.elements() {
                    for y in a.elements() {
                        if generated.same(x, y) {
                            assert!(e.same(x, y), "{:?} vs {:?}", generated, e);
                        }
                    }
                }
            }
            assert!(
                candidates.iter().any(|e| e == &generated),
                "the generated congruence must itself be a candidate"
            );
        }
    }

    #[test]
    fn incompatible_partition_is_rejected() {
        // {0,1},{2,3} is not multiplicative on Z4: 1*2=2 but 0*2=0.
        let err =
            Congruence::from_classes(&builtins::z4(), &[vec![0, 1], vec![2, 3]]).unwrap_err();
        assert!(matches!(err, CongruenceError::NotCompatible { .. }));
    }

    #[test]
    fn quotient_projection_identifies_exactly_the_congruence() {
        let a = builtins::z4();
        let e = congruence_generated(&a, &[(1, 3)]);
        let (_, proj) = e.quotient();
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(proj.apply(x) == proj.apply(y), e.same(x, y));
            }
        }
    }

    /// All set partitions of `{0, .., n-1}` via restricted growth strings.
    pub(crate) fn all_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        loop {
            let blocks = rgs.iter().max().map_or(0, |&m| m + 1);
            let mut classes = vec![Vec::new(); blocks.max(1)];
            for (x, &b) in rgs.iter().enumerate() {
                classes[b].push(x);
            }
            out.push(classes);
            // Next restricted growth string.
            let mut i = n;
            loop {
                if i <= 1 {
                    return out;
                }
                i -= 1;
                let cap = rgs[..i].iter().max().copied().unwrap_or(0) + 1;
                if rgs[i] < cap {
                    rgs[i] += 1;
                    for v in rgs.iter_mut().skip(i + 1) {
                        *v = 0;
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn partition_counts_are_bell_numbers() {
        assert_eq!(all_partitions(1).len(), 1);
        assert_eq!(all_partitions(2).len(), 2);
        assert_eq!(all_partitions(3).len(), 5);
        assert_eq!(all_partitions(4).len(), 15);
    }
}
