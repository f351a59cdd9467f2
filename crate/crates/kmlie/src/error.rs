//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors shared by all modules.
///
/// Operations that can only fail through caller mistakes (wrong dimensions,
/// inputs outside a documented precondition) report one of these; internal
/// mathematical identities are asserted instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input matrix is not square.
    NonSquare,
    /// Matrix violates a generalized-Cartan-matrix axiom at `(i, j)`.
    NotGcm(usize, usize, &'static str),
    /// Name not in the diagram catalog.
    UnknownName(String),
    /// Operation requires a finite-type diagram.
    NotFiniteType,
    /// Operation requires an affine-type diagram.
    NotAffineType,
    /// Operation requires a simply-laced diagram.
    NotSimplyLaced,
    /// Operation requires a connected diagram.
    NotConnected,
    /// Vector lengths do not match the diagram size.
    DimensionMismatch,
    /// Root-coefficient vector mixes positive and negative entries.
    MixedSignVector,
    /// Vector is zero where a nonzero root was expected.
    ZeroVector,
    /// Root-string base `alpha` is not a real root.
    AlphaNotReal,
    /// Root-string argument `beta` is not a root.
    BetaNotRoot,
    /// Pair `(alpha, -alpha)` where a non-opposite pair is required.
    OppositePair,
    /// Element refers to a different algebra basis.
    BasisMismatch,
    /// Loop elements over different base algebras.
    BaseMismatch,
    /// Evaluation point must be invertible.
    ZeroEvaluationPoint,
    /// Element is not fixed by the involution.
    NotInFixedSubalgebra,
    /// Coloring length does not match the node count.
    LengthMismatch,
    /// Signature blocks do not partition the generator index set.
    BadSignature,
    /// Free-Lie bracket exceeds the degree cutoff.
    DegreeOverflow,
    /// Graded quotient dimensions are only defined for zero spectrum.
    InhomogeneousSpectrum,
    /// Number of images does not match the presentation.
    CountMismatch,
    /// Scalars of the images do not match the presentation field.
    FieldMismatch,
    /// Surjectivity-certificate mode does not apply to this target.
    ModeNotApplicable,
    /// Scenario input violates a stated hypothesis.
    HypothesisViolated(String),
    /// Scenario name not in the catalog.
    UnknownScenario(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonSquare => write!(f, "matrix is not square"),
            Error::NotGcm(i, j, why) => {
                write!(f, "not a generalized Cartan matrix at ({i}, {j}): {why}")
            }
            Error::UnknownName(n) => write!(f, "unknown diagram name: {n}"),
            Error::NotFiniteType => write!(f, "diagram is not of finite type"),
            Error::NotAffineType => write!(f, "diagram is not of affine type"),
            Error::NotSimplyLaced => write!(f, "diagram is not simply laced"),
            Error::NotConnected => write!(f, "diagram is not connected"),
            Error::DimensionMismatch => write!(f, "vector length does not match diagram size"),
            Error::MixedSignVector => write!(f, "coefficient vector has mixed signs"),
            Error::ZeroVector => write!(f, "zero vector where a nonzero root was expected"),
            Error::AlphaNotReal => write!(f, "alpha is not a real root"),
            Error::BetaNotRoot => write!(f, "beta is not a root"),
            Error::OppositePair => write!(f, "undefined for the pair (alpha, -alpha)"),
            Error::BasisMismatch => write!(f, "element does not fit this algebra basis"),
            Error::BaseMismatch => write!(f, "loop elements over different base algebras"),
            Error::ZeroEvaluationPoint => write!(f, "evaluation point must be nonzero"),
            Error::NotInFixedSubalgebra => write!(f, "element is not fixed by the involution"),
            Error::LengthMismatch => write!(f, "coloring length does not match node count"),
            Error::BadSignature => write!(f, "signature blocks do not partition the generators"),
            Error::DegreeOverflow => write!(f, "bracket exceeds the degree cutoff"),
            Error::InhomogeneousSpectrum => {
                write!(f, "graded quotient requires zero spectrum")
            }
            Error::CountMismatch => write!(f, "image count does not match the presentation"),
            Error::FieldMismatch => write!(f, "scalar field does not match the presentation"),
            Error::ModeNotApplicable => write!(f, "certificate mode not applicable to target"),
            Error::HypothesisViolated(w) => write!(f, "hypothesis violated: {w}"),
            Error::UnknownScenario(n) => write!(f, "unknown scenario: {n}"),
        }
    }
}
