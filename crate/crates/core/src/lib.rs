//! A kernel for computing with finite commutative semirings given by
//! operation tables: validation, homomorphisms, congruences and quotients,
//! a star coreflection for algebras over the initial object, and colimits
//! built on tensor-product coproducts.

pub mod builtins;
pub mod classify;
pub mod colimit;
pub mod congruence;
pub mod hom;
pub mod iso;
pub mod salgebra;
pub mod semiring;
pub mod subalgebra;
pub mod tensor;
pub mod term;

pub use classify::{classify, FlagSet, VarietyFlag};
pub use colimit::{
    coequalizer, colimit_diagram, pushout, Coequalizer, Colimit, ColimitError, Diagram,
    DiagramArrow, Pushout,
};
pub use congruence::{congruence_generated, Congruence, CongruenceError};
pub use hom::{hom_enumerate, HomViolation, Homomorphism, NotAHomomorphism};
pub use iso::{are_isomorphic, canonical_form, IsoError, DEFAULT_ISO_MAX_ORDER};
pub use salgebra::{
    coreflect, initial_object, is_over_initial, star_subset, BaseSemiring, Coreflection,
    CoreflectionError, InitialObject, SAlgebra, SAlgebraError,
};
pub use semiring::{
    direct_product, validate_semiring, AxiomViolation, FiniteSemiring, OpKind, ValidationReport,
};
pub use subalgebra::{subalgebra_close, SubalgebraClosure, Subset};
pub use tensor::{
    copair, tensor_coproduct, tensor_coproduct_with, tensor_normalize, CopairError, TensorElement,
    TensorError, TensorGenerator, TensorOptions, TensorQuotient,
};
pub use term::{
    check_identity, eval_term, Assignment, Counterexample, Identity, Term, TermError, VarietySpec,
};
