//! The stock fixtures used throughout the tests and suites.

use crate::semiring::FiniteSemiring;

/// The one-element semiring, where 0 = 1.
pub fn triv() -> FiniteSemiring {
    FiniteSemiring::from_rows(Some("TRIV"), 1, vec![vec![0]], vec![vec![0]]).unwrap()
}

/// Integers mod 2.
pub fn z2() -> FiniteSemiring {
    FiniteSemiring::from_rows(
        Some("Z2"),
        2,
        vec![vec![0, 1], vec![1, 0]],
        vec![vec![0, 0], vec![0, 1]],
    )
    .unwrap()
}

/// The Boolean semiring: 1 + 1 = 1.
pub fn boolean() -> FiniteSemiring {
    FiniteSemiring::from_rows(
        Some("BOOL"),
        2,
        vec![vec![0, 1], vec![1, 1]],
        vec![vec![0, 0], vec![0, 1]],
    )
    .unwrap()
}

/// `{0, 1, 2}` with `1 + 2 = 1`: the quotient of the naturals forced by
/// `1 + 2x = 1` and `x*x = x`.
pub fn nstar() -> FiniteSemiring {
    FiniteSemiring::from_rows(
        Some("NSTAR"),
        3,
        vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 1, 2]],
        vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]],
    )
    .unwrap()
}

/// The three-element chain `0 < 2 < 1` with join as addition and meet as
/// multiplication.
pub fn c3() -> FiniteSemiring {
    FiniteSemiring::from_rows(
        Some("C3"),
        3,
        vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 2]],
        vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]],
    )
    .unwrap()
}

/// Integers mod 4.
pub fn z4() -> FiniteSemiring {
    FiniteSemiring::from_fn(Some("Z4"), 4, |x, y| (x + y) % 4, |x, y| (x * y) % 4).unwrap()
}

/// `Z2[t]/(t^2)`: carrier `{0, 1, t, 1+t}` in that index order.
pub fn d4() -> FiniteSemiring {
    FiniteSemiring::from_rows(
        Some("D4"),
        4,
        vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ],
        vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 2, 3],
            vec![0, 2, 0, 2],
            vec![0, 3, 2, 1],
        ],
    )
    .unwrap()
}

/// All seven fixtures in a fixed order.
pub fn all() -> Vec<FiniteSemiring> {
    vec![triv(), z2(), boolean(), nstar(), c3(), z4(), d4()]
}
