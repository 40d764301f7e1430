//! Semiring homomorphisms: validation, composition, and exhaustive
//! enumeration between small carriers.

use std::fmt;

use crate::semiring::FiniteSemiring;

/// Which preservation law a candidate map breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomViolation {
    /// `f(0) != 0`.
    Zero,
    /// `f(1) != 1`.
    One,
    /// `f(x + y) != f(x) + f(y)` at the witness pair.
    Add { witness: (usize, usize) },
    /// `f(x * y) != f(x) * f(y)` at the witness pair.
    Mul { witness: (usize, usize) },
    /// The map is not total on the source carrier or lands outside the
    /// target carrier.
    Malformed { detail: String },
}

impl fmt::Display for HomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomViolation::Zero => write!(f, "does not send 0 to 0"),
            HomViolation::One => write!(f, "does not send 1 to 1"),
            HomViolation::Add { witness: (x, y) } => {
                write!(f, "does not preserve addition at ({x}, {y})")
            }
            HomViolation::Mul { witness: (x, y) } => {
                write!(f, "does not preserve multiplication at ({x}, {y})")
            }
            HomViolation::Malformed { detail } => write!(f, "malformed map: {detail}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("not a homomorphism: {violation}")]
pub struct NotAHomomorphism {
    pub violation: HomViolation,
}

/// A validated semiring homomorphism, owning copies of both endpoints.
#[derive(Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: FiniteSemiring,
    target: FiniteSemiring,
    map: Vec<usize>,
}

impl Homomorphism {
    /// Validates a candidate image vector; the first violated law is
    /// reported, checking 0, 1, addition pairs, then multiplication pairs
    /// in lexicographic order.
    pub fn validate(
        source: &FiniteSemiring,
        target: &FiniteSemiring,
        map: Vec<usize>,
    ) -> Result<Homomorphism, NotAHomomorphism> {
        let fail = |violation| Err(NotAHomomorphism { violation });
        if map.len() != source.order() {
            return fail(HomViolation::Malformed {
                detail: format!("expected {} images, got {}", source.order(), map.len()),
            });
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.order()) {
            return fail(HomViolation::Malformed {
                detail: format!("image {v} outside a carrier of order {}", target.order()),
            });
        }
        if map[0] != 0 {
            return fail(HomViolation::Zero);
        }
        if map[source.one()] != target.one() {
            return fail(HomViolation::One);
        }
        for x in source.elements() {
            for y in source.elements() {
                if map[source.add(x, y)] != target.add(map[x], map[y]) {
                    return fail(HomViolation::Add { witness: (x, y) });
                }
            }
        }
        for x in source.elements() {
            for y in source.elements() {
                if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                    return fail(HomViolation::Mul { witness: (x, y) });
                }
            }
        }
        Ok(Homomorphism {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn identity(a: &FiniteSemiring) -> Homomorphism {
        Homomorphism {
            source: a.clone(),
            target: a.clone(),
            map: a.elements().collect(),
        }
    }

    pub fn source(&self) -> &FiniteSemiring {
        &self.source
    }

    pub fn target(&self) -> &FiniteSemiring {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `other` after `self`: for `self: A -> B` and `other: B -> C` this is
    /// the composite `A -> C`.
    pub fn then(&self, other: &Homomorphism) -> Homomorphism {
        assert!(
            self.target.same_tables(&other.source),
            "composition endpoints do not match"
        );
        Homomorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &v in &self.map {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Homomorphism({} -> {}, {:?})",
            self.source.label(),
            self.target.label(),
            self.map
        )
    }
}

/// Renders the parseable map block: `hom SRC -> DST` then one line per
/// element.
impl fmt::Display for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "hom {} -> {}", self.source.label(), self.target.label())?;
        for (x, &v) in self.map.iter().enumerate() {
            writeln!(f, "{x} -> {v}")?;
        }
        Ok(())
    }
}

/// Enumerates every homomorphism `a -> b`, in lexicographic order of the
/// image vector.
///
/// Backtracks over images of the non-identity elements; a partial image is
/// pruned as soon as some fully-assigned operation instance disagrees.
pub fn hom_enumerate(a: &FiniteSemiring, b: &FiniteSemiring) -> Vec<Homomorphism> {
    let n = a.order();
    let unset = usize::MAX;
    let mut image = vec![unset; n];
    image[0] = 0;
    if n > 1 {
        // For a one-element source 0 = 1, so the pinned images clash unless
        // the target is trivial too; the consistency scan below handles it.
        image[a.one()] = b.one();
    }

    fn consistent(a: &FiniteSemiring, b: &FiniteSemiring, image: &[usize], unset: usize) -> bool {
        for x in a.elements() {
            if image[x] == unset {
                continue;
            }
            for y in a.elements() {
                if image[y] == unset {
                    continue;
                }
                let s = a.add(x, y);
                if image[s] != unset && image[s] != b.add(image[x], image[y]) {
                    return false;
                }
                let p = a.mul(x, y);
                if image[p] != unset && image[p] != b.mul(image[x], image[y]) {
                    return false;
                }
            }
        }
        true
    }

    let free: Vec<usize> = a.elements().filter(|&x| image[x] == unset).collect();
    let mut out = Vec::new();
    let mut stack = vec![0usize];
    if !consistent(a, b, &image, unset) {
        return out;
    }
    if free.is_empty() {
        if let Ok(h) = Homomorphism::validate(a, b, image) {
            out.push(h);
        }
        return out;
    }

    // Depth-first over candidate images for the free elements, values
    // ascending, which yields lexicographic output order.
    let mut depth = 0usize;
    loop {
        let value = stack[depth];
        if value == b.order() {
            image[free[depth]] = unset;
            if depth == 0 {
                break;
            }
            stack.pop();
            depth -= 1;
            stack[depth] += 1;
            continue;
        }
        image[free[depth]] = value;
        if consistent(a, b, &image, unset) {
            if depth + 1 == free.len() {
                if let Ok(h) = Homomorphism::validate(a, b, image.clone()) {
                    out.push(h);
                }
                stack[depth] += 1;
            } else {
                depth += 1;
                stack.push(0);
            }
        } else {
            stack[depth] += 1;
        }
    }
    out
}
