//! Isomorphism of finite semirings via canonical forms.
//!
//! Any isomorphism must fix 0 and 1, so scanning the `(n-2)!` permutations
//! of the remaining indices is exact. The canonical form is the
//! lexicographically least relabelled `add || mul` table concatenation.

use crate::semiring::FiniteSemiring;

/// Default cap on the order accepted by the permutation scan.
pub const DEFAULT_ISO_MAX_ORDER: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum IsoError {
    #[error("order {order} exceeds the canonical-form bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
}

fn permutations_fixing_identities(n: usize) -> Vec<Vec<usize>> {
    // Permutations of the full index set that fix 0 and 1.
    let movable: Vec<usize> = (2..n).collect();
    let mut perms = vec![Vec::new()];
    for _ in &movable {
        let mut next = Vec::new();
        for p in perms {
            for &v in &movable {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        perms = next;
    }
    perms
        .into_iter()
        .map(|tail| {
            let mut full: Vec<usize> = (0..n.min(2)).collect();
            full.extend(tail);
            full
        })
        .collect()
}

fn relabelled_bytes(a: &FiniteSemiring, perm: &[usize]) -> Vec<u8> {
    let n = a.order();
    let mut inverse = vec![0usize; n];
    for (x, &px) in perm.iter().enumerate() {
        inverse[px] = x;
    }
    let mut out = Vec::with_capacity(2 * n * n);
    for table in [0, 1] {
        for x in 0..n {
            for y in 0..n {
                let v = match table {
                    0 => a.add(inverse[x], inverse[y]),
                    _ => a.mul(inverse[x], inverse[y]),
                };
                out.push(perm[v] as u8);
            }
        }
    }
    out
}

/// The canonical byte string, under a caller-chosen order cap.
pub fn canonical_form_bounded(a: &FiniteSemiring, bound: usize) -> Result<Vec<u8>, IsoError> {
    let n = a.order();
    if n > bound || n > 255 {
        return Err(IsoError::OrderTooLarge {
            order: n,
            bound: bound.min(255),
        });
    }
    permutations_fixing_identities(n)
        .iter()
        .map(|perm| relabelled_bytes(a, perm))
        .min()
        .ok_or(IsoError::OrderTooLarge { order: n, bound })
}

/// The canonical byte string under the default cap.
pub fn canonical_form(a: &FiniteSemiring) -> Result<Vec<u8>, IsoError> {
    canonical_form_bounded(a, DEFAULT_ISO_MAX_ORDER)
}

pub fn are_isomorphic_bounded(
    a: &FiniteSemiring,
    b: &FiniteSemiring,
    bound: usize,
) -> Result<bool, IsoError> {
    if a.order() != b.order() {
        return Ok(false);
    }
    Ok(canonical_form_bounded(a, bound)? == canonical_form_bounded(b, bound)?)
}

pub fn are_isomorphic(a: &FiniteSemiring, b: &FiniteSemiring) -> Result<bool, IsoError> {
    are_isomorphic_bounded(a, b, DEFAULT_ISO_MAX_ORDER)
}
