//! Coequalizers, pushouts, and colimits of finite diagrams, all reduced to
//! coproducts followed by a congruence-generated quotient.

use crate::congruence::congruence_generated;
use crate::hom::Homomorphism;
use crate::salgebra::SAlgebra;
use crate::tensor::{tensor_coproduct, TensorError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ColimitError {
    #[error("a parallel pair must share its source and target")]
    MismatchedParallelPair,
    #[error("a span must share its source and land in the two given algebras")]
    MismatchedSpan,
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("a diagram needs at least one object")]
    EmptyDiagram,
    #[error("arrow {index} points at an object outside the diagram")]
    BadArrow { index: usize },
    #[error("arrow {index} does not run between its declared objects")]
    ArrowMismatch { index: usize },
}

/// A coequalizer: the target modulo the pairs on which the maps disagree.
#[derive(Clone, Debug)]
pub struct Coequalizer {
    pub object: SAlgebra,
    pub projection: Homomorphism,
}

pub fn coequalizer(
    b: &SAlgebra,
    f: &Homomorphism,
    g: &Homomorphism,
) -> Result<Coequalizer, ColimitError> {
    if !f.source().same_tables(g.source())
        || !f.target().same_tables(g.target())
        || !f.target().same_tables(b.algebra())
    {
        return Err(ColimitError::MismatchedParallelPair);
    }
    let pairs: Vec<(usize, usize)> = f
        .source()
        .elements()
        .map(|x| (f.apply(x), g.apply(x)))
        .collect();
    let cong = congruence_generated(b.algebra(), &pairs);
    let (q, proj) = cong.quotient();
    let q = q.named(&format!("{}/~", b.label()));
    let projection = Homomorphism::validate(b.algebra(), &q, proj.map().to_vec())
        .expect("projection survives renaming");
    let structure = b.structure().map(|fb| fb.then(&projection));
    let object = SAlgebra::new(b.base().clone(), q, structure)
        .expect("a quotient stays an algebra over the base");
    Ok(Coequalizer { object, projection })
}

/// A pushout with its two legs from the span's feet.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub object: SAlgebra,
    pub left: Homomorphism,
    pub right: Homomorphism,
}

/// Glues `a` and `b` along a span `f: z -> a`, `g: z -> b`: the coproduct
/// coequalizing the two composites.
pub fn pushout(
    a: &SAlgebra,
    b: &SAlgebra,
    f: &Homomorphism,
    g: &Homomorphism,
) -> Result<Pushout, ColimitError> {
    if !f.source().same_tables(g.source())
        || !f.target().same_tables(a.algebra())
        || !g.target().same_tables(b.algebra())
    {
        return Err(ColimitError::MismatchedSpan);
    }
    let q = tensor_coproduct(a, b)?;
    let fa = f.then(&q.left);
    let gb = g.then(&q.right);
    let co = coequalizer(&q.object, &fa, &gb)?;
    let left = q.left.then(&co.projection);
    let right = q.right.then(&co.projection);
    Ok(Pushout {
        object: co.object,
        left,
        right,
    })
}

/// An arrow of a finite diagram, between objects given by index.
#[derive(Clone, Debug)]
pub struct DiagramArrow {
    pub src: usize,
    pub dst: usize,
    pub map: Homomorphism,
}

/// A non-empty finite diagram of algebras over a common base.
#[derive(Clone, Debug)]
pub struct Diagram {
    objects: Vec<SAlgebra>,
    arrows: Vec<DiagramArrow>,
}

impl Diagram {
    pub fn new(objects: Vec<SAlgebra>, arrows: Vec<DiagramArrow>) -> Result<Diagram, ColimitError> {
        if objects.is_empty() {
            return Err(ColimitError::EmptyDiagram);
        }
        for (index, arrow) in arrows.iter().enumerate() {
            if arrow.src >= objects.len() || arrow.dst >= objects.len() {
                return Err(ColimitError::BadArrow { index });
            }
            if !arrow.map.source().same_tables(objects[arrow.src].algebra())
                || !arrow.map.target().same_tables(objects[arrow.dst].algebra())
            {
                return Err(ColimitError::ArrowMismatch { index });
            }
        }
        Ok(Diagram { objects, arrows })
    }

    pub fn objects(&self) -> &[SAlgebra] {
        &self.objects
    }

    pub fn arrows(&self) -> &[DiagramArrow] {
        &self.arrows
    }
}

/// A colimit cocone: the apex and one leg per diagram object.
#[derive(Clone, Debug)]
pub struct Colimit {
    pub object: SAlgebra,
    pub legs: Vec<Homomorphism>,
}

/// The colimit of a finite diagram: the iterated coproduct of all objects,
/// modulo one congruence identifying each leg with its image under every
/// arrow.
pub fn colimit_diagram(d: &Diagram) -> Result<Colimit, ColimitError> {
    let objects = d.objects();
    let mut acc = objects[0].clone();
    let mut legs = vec![Homomorphism::identity(objects[0].algebra())];
    for obj in &objects[1..] {
        let q = tensor_coproduct(&acc, obj)?;
        for leg in &mut legs {
            *leg = leg.then(&q.left);
        }
        legs.push(q.right.clone());
        acc = q.object;
    }
    let mut pairs = Vec::new();
    for arrow in d.arrows() {
        for x in arrow.map.source().elements() {
            pairs.push((
                legs[arrow.src].apply(x),
                legs[arrow.dst].apply(arrow.map.apply(x)),
            ));
        }
    }
    let cong = congruence_generated(acc.algebra(), &pairs);
    let (q, proj) = cong.quotient();
    let q = q.named("colim");
    let projection = Homomorphism::validate(acc.algebra(), &q, proj.map().to_vec())
        .expect("projection survives renaming");
    let structure = acc.structure().map(|f| f.then(&projection));
    let object = SAlgebra::new(acc.base().clone(), q, structure)
        .expect("a quotient stays an algebra over the base");
    let legs = legs.iter().map(|l| l.then(&projection)).collect();
    Ok(Colimit { object, legs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::iso::are_isomorphic;

    fn nat(s: crate::semiring::FiniteSemiring) -> SAlgebra {
        SAlgebra::over_naturals(s)
    }

    fn c3_collapse() -> Homomorphism {
        Homomorphism::validate(&builtins::c3(), &builtins::c3(), vec![0, 1, 1]).unwrap()
    }

    fn c3_to_bool() -> Homomorphism {
        Homomorphism::validate(&builtins::c3(), &builtins::boolean(), vec![0, 1, 1]).unwrap()
    }

    #[test]
    fn coequalizing_a_map_with_itself_changes_nothing() {
        let f = c3_to_bool();
        let co = coequalizer(&nat(builtins::boolean()), &f, &f).unwrap();
        assert!(co.object.algebra().same_tables(&builtins::boolean()));
        assert_eq!(co.projection.map(), &[0, 1]);
        assert_eq!(co.object.label(), "BOOL/~");
    }

    #[test]
    fn coequalizer_collapses_the_disagreement() {
        let id = Homomorphism::identity(&builtins::c3());
        let co = coequalizer(&nat(builtins::c3()), &id, &c3_collapse()).unwrap();
        assert_eq!(co.object.algebra().order(), 2);
        assert_eq!(co.projection.map(), &[0, 1, 1]);
    }

    #[test]
    fn coequalizer_rejects_mismatched_pairs() {
        let f = c3_to_bool();
        let id = Homomorphism::identity(&builtins::c3());
        assert_eq!(
            coequalizer(&nat(builtins::boolean()), &f, &id).unwrap_err(),
            ColimitError::MismatchedParallelPair
        );
        assert_eq!(
            coequalizer(&nat(builtins::c3()), &f, &f).unwrap_err(),
            ColimitError::MismatchedParallelPair
        );
    }

    #[test]
    fn pushout_along_the_identity_is_the_other_foot() {
        let id = Homomorphism::identity(&builtins::c3());
        let p = pushout(&nat(builtins::c3()), &nat(builtins::boolean()), &id, &c3_to_bool())
            .unwrap();
        assert_eq!(are_isomorphic(p.object.algebra(), &builtins::boolean()), Ok(true));
        assert!(p.right.is_injective() && p.right.is_surjective());
        // The square commutes: both composites agree on the span source.
        assert_eq!(p.left.map(), &[0, 1, 1].map(|i| p.right.apply(i)));
    }

    #[test]
    fn colimit_of_one_object_with_an_endomorphism() {
        let d = Diagram::new(
            vec![nat(builtins::c3())],
            vec![DiagramArrow {
                src: 0,
                dst: 0,
                map: c3_collapse(),
            }],
        )
        .unwrap();
        let c = colimit_diagram(&d).unwrap();
        assert_eq!(c.object.algebra().order(), 2);
        assert_eq!(c.legs[0].map(), &[0, 1, 1]);
        assert_eq!(c.object.label(), "colim");
    }

    #[test]
    fn colimit_of_a_span_agrees_with_the_pushout() {
        let d = Diagram::new(
            vec![nat(builtins::c3()), nat(builtins::c3()), nat(builtins::boolean())],
            vec![
                DiagramArrow {
                    src: 0,
                    dst: 1,
                    map: Homomorphism::identity(&builtins::c3()),
                },
                DiagramArrow {
                    src: 0,
                    dst: 2,
                    map: c3_to_bool(),
                },
            ],
        )
        .unwrap();
        let c = colimit_diagram(&d).unwrap();
        assert_eq!(are_isomorphic(c.object.algebra(), &builtins::boolean()), Ok(true));
        // Cocone commutes with both arrows.
        for x in builtins::c3().elements() {
            assert_eq!(c.legs[0].apply(x), c.legs[1].apply(x));
            assert_eq!(c.legs[0].apply(x), c.legs[2].apply(c3_to_bool().apply(x)));
        }
    }

    #[test]
    fn colimit_without_arrows_is_the_plain_coproduct() {
        let d = Diagram::new(vec![nat(builtins::z2()), nat(builtins::z2())], vec![]).unwrap();
        let c = colimit_diagram(&d).unwrap();
        assert!(c.object.algebra().same_tables(&builtins::z2()));
        assert_eq!(c.legs.len(), 2);
    }

    #[test]
    fn diagram_construction_is_checked() {
        assert_eq!(
            Diagram::new(vec![], vec![]).unwrap_err(),
            ColimitError::EmptyDiagram
        );
        let arrow = DiagramArrow {
            src: 0,
            dst: 5,
            map: Homomorphism::identity(&builtins::z2()),
        };
        assert_eq!(
            Diagram::new(vec![nat(builtins::z2())], vec![arrow]).unwrap_err(),
            ColimitError::BadArrow { index: 0 }
        );
        let arrow = DiagramArrow {
            src: 0,
            dst: 0,
            map: Homomorphism::identity(&builtins::boolean()),
        };
        assert_eq!(
            Diagram::new(vec![nat(builtins::z2())], vec![arrow]).unwrap_err(),
            ColimitError::ArrowMismatch { index: 0 }
        );
    }
}
