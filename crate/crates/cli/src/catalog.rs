//! Exhaustive catalogs of small commutative semirings, one entry per
//! isomorphism class.

use std::collections::BTreeMap;

use csr_core::builtins;
use csr_core::iso::canonical_form_bounded;
use csr_core::{classify, FiniteSemiring, FlagSet, VarietyFlag};

/// Default cap on the carrier size accepted by the enumerator.
pub const DEFAULT_MAX_ORDER: usize = 4;

/// The active cap: `SEMIRING_MAX_ORDER` when set to a number, else the
/// default.
pub fn enumeration_cap() -> usize {
    std::env::var("SEMIRING_MAX_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_ORDER)
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("order {requested} exceeds the enumeration cap {cap} (override with SEMIRING_MAX_ORDER)")]
pub struct OrderTooLarge {
    pub requested: usize,
    pub cap: usize,
}

/// One isomorphism class: a representative, its classification, and its
/// canonical form.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub algebra: FiniteSemiring,
    pub flags: FlagSet,
    pub canon: Vec<u8>,
}

/// A deduplicated list of semirings in a deterministic order: ascending
/// order, then canonical form.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter()
    }

    pub fn with_flag(&self, flag: VarietyFlag) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.flags.contains(flag))
    }
}

/// All commutative semirings of order exactly `n`, up to isomorphism.
pub fn enumerate_semirings(n: usize) -> Result<Catalog, OrderTooLarge> {
    enumerate_capped(n, enumeration_cap())
}

/// The concatenation of `enumerate_semirings(1)` through
/// `enumerate_semirings(k)`.
pub fn up_to_order(k: usize) -> Result<Catalog, OrderTooLarge> {
    up_to_capped(k, enumeration_cap())
}

pub(crate) fn up_to_capped(k: usize, cap: usize) -> Result<Catalog, OrderTooLarge> {
    let mut entries = Vec::new();
    for n in 1..=k {
        entries.extend(enumerate_capped(n, cap)?.entries);
    }
    Ok(Catalog { entries })
}

pub(crate) fn enumerate_capped(n: usize, cap: usize) -> Result<Catalog, OrderTooLarge> {
    if n > cap {
        return Err(OrderTooLarge { requested: n, cap });
    }
    let mut seen: BTreeMap<Vec<u8>, FiniteSemiring> = BTreeMap::new();
    for add in addition_tables(n) {
        for mul in multiplication_tables(n, &add) {
            let rows = |t: &[usize]| -> Vec<Vec<usize>> {
                (0..n).map(|i| t[i * n..(i + 1) * n].to_vec()).collect()
            };
            let s = FiniteSemiring::from_rows(None, n, rows(&add), rows(&mul))
                .expect("the completed tables satisfy the axioms");
            let canon = canonical_form_bounded(&s, n)
                .expect("the bound covers the order");
            seen.entry(canon).or_insert(s);
        }
    }

    let builtin_names: BTreeMap<Vec<u8>, String> = builtins::all()
        .iter()
        .filter(|b| b.order() == n)
        .map(|b| {
            let canon = canonical_form_bounded(b, n).expect("builtin orders are small");
            (canon, b.label().to_owned())
        })
        .collect();

    let entries = seen
        .into_iter()
        .enumerate()
        .map(|(i, (canon, algebra))| {
            let name = builtin_names
                .get(&canon)
                .cloned()
                .unwrap_or_else(|| format!("S{n}-{}", i + 1));
            let algebra = algebra.named(&name);
            let flags = classify(&algebra);
            CatalogEntry {
                algebra,
                flags,
                canon,
            }
        })
        .collect();
    Ok(Catalog { entries })
}

const UNSET: usize = usize::MAX;

fn associative_so_far(t: &[usize], n: usize) -> bool {
    for x in 0..n {
        for y in 0..n {
            let xy = t[x * n + y];
            if xy == UNSET {
                continue;
            }
            for z in 0..n {
                let yz = t[y * n + z];
                if yz == UNSET {
                    continue;
                }
                let l = t[xy * n + z];
                let r = t[x * n + yz];
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

fn distributive_so_far(mul: &[usize], add: &[usize], n: usize) -> bool {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let l = mul[x * n + add[y * n + z]];
                let xy = mul[x * n + y];
                let xz = mul[x * n + z];
                if l == UNSET || xy == UNSET || xz == UNSET {
                    continue;
                }
                if l != add[xy * n + xz] {
                    return false;
                }
            }
        }
    }
    true
}

/// Backtracks over the free cells of a symmetric table, keeping only
/// assignments that stay consistent under `check`.
fn fill_symmetric(
    grid: &mut Vec<usize>,
    n: usize,
    cells: &[(usize, usize)],
    k: usize,
    check: &dyn Fn(&[usize]) -> bool,
    out: &mut Vec<Vec<usize>>,
) {
    if k == cells.len() {
        out.push(grid.clone());
        return;
    }
    let (i, j) = cells[k];
    for v in 0..n {
        grid[i * n + j] = v;
        grid[j * n + i] = v;
        if check(grid) {
            fill_symmetric(grid, n, cells, k + 1, check, out);
        }
    }
    grid[i * n + j] = UNSET;
    grid[j * n + i] = UNSET;
}

/// Commutative monoid tables on `{0, .., n-1}` with identity 0.
fn addition_tables(n: usize) -> Vec<Vec<usize>> {
    let mut grid = vec![UNSET; n * n];
    for x in 0..n {
        grid[x] = x;
        grid[x * n] = x;
    }
    let cells: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    fill_symmetric(
        &mut grid,
        n,
        &cells,
        0,
        &|t| associative_so_far(t, n),
        &mut out,
    );
    out
}

/// Commutative monoid tables with identity 1 and absorbing 0, distributing
/// over the given addition.
fn multiplication_tables(n: usize, add: &[usize]) -> Vec<Vec<usize>> {
    let mut grid = vec![UNSET; n * n];
    for x in 0..n {
        grid[x * n] = 0;
        grid[x] = 0;
    }
    if n > 1 {
        for x in 0..n {
            grid[x * n + 1] = x;
            grid[n + x] = x;
        }
    }
    let cells: Vec<(usize, usize)> = (2..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    fill_symmetric(
        &mut grid,
        n,
        &cells,
        0,
        &|t| associative_so_far(t, n) && distributive_so_far(t, add, n),
        &mut out,
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use csr_core::are_isomorphic;

    #[test]
    fn order_one_is_the_trivial_semiring_alone() {
        let c = enumerate_capped(1, 4).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.entries[0].algebra.label(), "TRIV");
        assert_eq!(c.entries[0].flags.len(), 5);
    }

    #[test]
    fn order_two_is_exactly_the_two_known_algebras() {
        let c = enumerate_capped(2, 4).unwrap();
        let names: Vec<&str> = c.iter().map(|e| e.algebra.label()).collect();
        assert_eq!(c.len(), 2);
        assert!(names.contains(&"Z2"));
        assert!(names.contains(&"BOOL"));
    }

    #[test]
    fn order_three_contains_the_named_fixtures_without_duplicates() {
        let c = enumerate_capped(3, 4).unwrap();
        let names: Vec<&str> = c.iter().map(|e| e.algebra.label()).collect();
        assert!(names.contains(&"NSTAR"));
        assert!(names.contains(&"C3"));
        for (i, a) in c.iter().enumerate() {
            for b in c.iter().skip(i + 1) {
                assert_eq!(
                    are_isomorphic(&a.algebra, &b.algebra),
                    Ok(false),
                    "{} and {} collide",
                    a.algebra.label(),
                    b.algebra.label()
                );
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let once = enumerate_capped(3, 4).unwrap();
        let twice = enumerate_capped(3, 4).unwrap();
        let key = |c: &Catalog| -> Vec<(String, Vec<u8>)> {
            c.iter()
                .map(|e| (e.algebra.label().to_owned(), e.canon.clone()))
                .collect()
        };
        assert_eq!(key(&once), key(&twice));
    }

    #[test]
    fn the_cap_is_enforced() {
        assert!(matches!(
            enumerate_capped(5, 4),
            Err(OrderTooLarge {
                requested: 5,
                cap: 4
            })
        ));
    }

    #[test]
    fn catalogs_accumulate_by_order() {
        let c = up_to_capped(2, 4).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.entries[0].algebra.order(), 1);
        assert!(c.entries[1..].iter().all(|e| e.algebra.order() == 2));
    }

    #[test]
    fn every_entry_validates_and_matches_its_flags() {
        for e in up_to_capped(3, 4).unwrap().iter() {
            assert!(e.algebra.check().is_ok());
            assert_eq!(classify(&e.algebra), e.flags);
        }
    }
}
