//! Catalog-wide verification suites: subalgebra closure and couniversality
//! of the coreflection, colimit closure per class, and the ring and lattice
//! specializations.

use std::collections::BTreeSet;

use csr_core::{
    are_isomorphic, classify, coequalizer, coreflect, hom_enumerate, is_over_initial, pushout,
    star_subset, tensor_coproduct, Coreflection, Homomorphism, SAlgebra, VarietyFlag,
};

use crate::catalog::{Catalog, CatalogEntry};
use crate::report::Report;

fn entry_algebra(entry: &CatalogEntry) -> SAlgebra {
    SAlgebra::over_naturals(entry.algebra.clone())
}

/// Checks, for every catalog entry over the initial algebra, that the star
/// subset is a subalgebra closed under scalars, that coreflection is
/// idempotent, and that post-composing with the inclusion puts the
/// homomorphisms from each small star-variety algebra in bijection with
/// the homomorphisms into the ambient algebra.
pub fn verify_coreflection_suite(catalog: &Catalog) -> Report {
    let mut r = Report::new("coreflection");
    let targets: Vec<&CatalogEntry> = catalog
        .iter()
        .filter(|e| e.algebra.order() <= 3 && e.flags.contains(VarietyFlag::CsrStar))
        .collect();

    for entry in catalog.iter() {
        let name = entry.algebra.label().to_owned();
        let a = entry_algebra(entry);
        if !is_over_initial(&a) {
            r.skip(&name, "not over the initial algebra");
            continue;
        }
        let cor = coreflect(&a).expect("over the initial algebra");
        let star = &cor.subset;
        let alg = a.algebra();

        let bad_sum = star.members().iter().flat_map(|&x| {
            star.members()
                .iter()
                .map(move |&y| (x, y))
                .filter(|&(x, y)| !star.contains(alg.add(x, y)))
        });
        report_first(&mut r, format!("{name} star-add"), bad_sum, |(x, y)| {
            format!("{x} + {y} leaves the subset")
        });

        let scalars = a.scalar_values();
        let bad_scalar = scalars.iter().flat_map(|&v| {
            star.members()
                .iter()
                .map(move |&x| (v, x))
                .filter(|&(v, x)| !star.contains(v) || !star.contains(alg.mul(v, x)))
        });
        report_first(&mut r, format!("{name} star-scalar"), bad_scalar, |(v, x)| {
            format!("scalar value {v} acting on {x} leaves the subset")
        });

        r.check(format!("{name} star-one"), star.contains(alg.one()), || {
            "1 is outside the subset".to_owned()
        });

        let bad_product = star.members().iter().flat_map(|&x| {
            star.members()
                .iter()
                .map(move |&y| (x, y))
                .filter(|&(x, y)| !star.contains(alg.mul(x, y)))
        });
        report_first(&mut r, format!("{name} star-mul"), bad_product, |(x, y)| {
            format!("{x} * {y} leaves the subset")
        });

        let again = coreflect(&cor.object).expect("a coreflection stays over the initial algebra");
        r.check(format!("{name} idempotent"), again.subset.is_full(), || {
            format!(
                "a second pass keeps only {} of {} elements",
                again.subset.len(),
                cor.object.algebra().order()
            )
        });

        for target in &targets {
            couniversality(&mut r, &name, entry, &cor, target);
        }
    }
    r
}

/// One couniversality instance: post-composition with the inclusion must
/// put `Hom(B, A')` in bijection with `Hom(B, A)`.
fn couniversality(
    r: &mut Report,
    name: &str,
    entry: &CatalogEntry,
    cor: &Coreflection,
    target: &CatalogEntry,
) {
    let b = &target.algebra;
    let into_prime = hom_enumerate(b, cor.object.algebra());
    let into_ambient = hom_enumerate(b, &entry.algebra);
    let composed: BTreeSet<Vec<usize>> = into_prime
        .iter()
        .map(|g| g.then(&cor.inclusion).map().to_vec())
        .collect();
    let direct: BTreeSet<Vec<usize>> = into_ambient.iter().map(|h| h.map().to_vec()).collect();
    let ok = composed.len() == into_prime.len() && composed == direct;
    r.check(
        format!("{name} couniversal vs {}", b.label()),
        ok,
        || {
            format!(
                "{} maps into the coreflection, {} into the ambient algebra",
                into_prime.len(),
                into_ambient.len()
            )
        },
    );
}

fn report_first<T>(
    r: &mut Report,
    id: String,
    mut bad: impl Iterator<Item = T>,
    describe: impl Fn(T) -> String,
) {
    match bad.next() {
        None => r.pass(id),
        Some(witness) => r.fail(id, describe(witness)),
    }
}

/// Checks that the class cut out by a flag is closed under coproducts,
/// with coequalizer and pushout spot checks where parallel maps exist.
pub fn verify_closure_suite(catalog: &Catalog, flag: VarietyFlag) -> Report {
    let mut r = Report::new(format!("closure {flag}"));
    let entries: Vec<&CatalogEntry> = catalog.with_flag(flag).collect();
    for x in &entries {
        for y in &entries {
            let pair = format!("{}+{}", x.algebra.label(), y.algebra.label());
            let a = entry_algebra(x);
            let b = entry_algebra(y);
            match tensor_coproduct(&a, &b) {
                Ok(q) => {
                    let got = classify(q.object.algebra());
                    r.check(format!("coproduct {pair}"), got.contains(flag), || {
                        format!(
                            "flags {got} on the order-{} coproduct",
                            q.object.algebra().order()
                        )
                    });
                }
                Err(e) => r.fail(format!("coproduct {pair}"), e.to_string()),
            }

            let homs = hom_enumerate(&x.algebra, &y.algebra);
            if homs.is_empty() {
                r.skip(
                    format!("coequalizer {pair}"),
                    "no homomorphisms between the factors",
                );
                r.skip(
                    format!("pushout {pair}"),
                    "no homomorphisms between the factors",
                );
                continue;
            }
            let f = &homs[0];
            let g = homs.last().expect("non-empty");

            match coequalizer(&b, f, g) {
                Ok(co) => {
                    let got = classify(co.object.algebra());
                    let iso_needed = f == g;
                    let iso_ok = !iso_needed
                        || are_isomorphic(co.object.algebra(), &y.algebra) == Ok(true);
                    r.check(
                        format!("coequalizer {pair}"),
                        got.contains(flag) && iso_ok,
                        || {
                            format!(
                                "flags {got} on the order-{} coequalizer of an identical pair",
                                co.object.algebra().order()
                            )
                        },
                    );
                }
                Err(e) => r.fail(format!("coequalizer {pair}"), e.to_string()),
            }

            match pushout(&a, &b, &Homomorphism::identity(&x.algebra), f) {
                Ok(p) => {
                    let got = classify(p.object.algebra());
                    let iso_ok = are_isomorphic(p.object.algebra(), &y.algebra) == Ok(true);
                    r.check(
                        format!("pushout {pair}"),
                        got.contains(flag) && iso_ok,
                        || {
                            format!(
                                "pushing out along the identity gave flags {got} and order {}, expected a copy of {}",
                                p.object.algebra().order(),
                                y.algebra.label()
                            )
                        },
                    );
                }
                Err(e) => r.fail(format!("pushout {pair}"), e.to_string()),
            }
        }
    }
    r
}

/// Checks the ring and lattice specializations: on doubling-annihilating
/// rings the star subset is `{a | 2a = 0, a*a = a}` and the coreflection
/// is a Boolean ring; on additively idempotent entries it is
/// `{a | 1 + a = 1, a*a = a}` and the coreflection is a lattice.
pub fn verify_specialization_suite(catalog: &Catalog) -> Report {
    let mut r = Report::new("specialization");
    for entry in catalog.iter() {
        let name = entry.algebra.label().to_owned();
        let ring = entry.flags.contains(VarietyFlag::CRings2);
        let lattice = entry.flags.contains(VarietyFlag::Aicsr);
        if !ring && !lattice {
            r.skip(
                &name,
                "neither a ring with 1+1 = 0 nor additively idempotent",
            );
            continue;
        }
        let a = entry_algebra(entry);
        let alg = a.algebra();
        if ring {
            let expected: BTreeSet<usize> = alg
                .elements()
                .filter(|&x| alg.double(x) == 0 && alg.mul(x, x) == x)
                .collect();
            specialization_half(&mut r, &a, &name, "ring", expected, VarietyFlag::BRings);
        }
        if lattice {
            let one = alg.one();
            let expected: BTreeSet<usize> = alg
                .elements()
                .filter(|&x| alg.add(one, x) == one && alg.mul(x, x) == x)
                .collect();
            specialization_half(&mut r, &a, &name, "lattice", expected, VarietyFlag::DLat);
        }
    }
    r
}

fn specialization_half(
    r: &mut Report,
    a: &SAlgebra,
    name: &str,
    kind: &str,
    expected: BTreeSet<usize>,
    flag: VarietyFlag,
) {
    match star_subset(a) {
        Err(e) => {
            r.fail(format!("{name} {kind}-star"), e.to_string());
            r.fail(format!("{name} {kind}-coreflection"), e.to_string());
        }
        Ok(star) => {
            r.check(
                format!("{name} {kind}-star"),
                star.members() == &expected,
                || format!("subset {:?}, expected {:?}", star.members(), expected),
            );
            match coreflect(a) {
                Err(e) => r.fail(format!("{name} {kind}-coreflection"), e.to_string()),
                Ok(cor) => {
                    let got = classify(cor.object.algebra());
                    r.check(
                        format!("{name} {kind}-coreflection"),
                        got.contains(flag),
                        || format!("flags {got} on the coreflection"),
                    );
                }
            }
        }
    }
}
