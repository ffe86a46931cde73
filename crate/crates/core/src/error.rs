use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Validation,
    Capacity,
    Unsupported,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    // graph_operad
    #[error("duplicate leg label `{0}`")]
    DuplicateLeg(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("morphism composition mismatch: {0}")]
    CompositionMismatch(String),

    // finite_forms
    #[error("invalid invariant factor {0} (must be >= 1)")]
    InvalidFactor(i64),
    #[error("element {element:?} does not belong to a group with invariant factors {factors:?}")]
    ElementOutOfRange {
        element: Vec<i64>,
        factors: Vec<u64>,
    },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("quadratic form is not well defined: q({shifted:?}) != q({representative:?})")]
    InvalidQForm {
        representative: Vec<i64>,
        shifted: Vec<i64>,
    },
    #[error("group of order {order} exceeds the enumeration limit {limit}")]
    Capacity { order: u64, limit: u64 },
    #[error("gluing over {curves} curves with |G| = {order} exceeds {limit} labelings")]
    TooManyLabelings {
        order: u64,
        curves: usize,
        limit: u64,
    },
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    // lattice_data
    #[error("Gram matrix is not even: diagonal entry {index} is {value}")]
    NotEven { index: usize, value: i64 },
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("Gram matrix is degenerate (determinant 0)")]
    Degenerate,
    #[error("xi is not in the dual lattice: gram * xi has non-integral entry {index}")]
    XiNotDual { index: usize },

    // surfaces
    #[error("negative genus {0}")]
    NegativeGenus(i64),
    #[error("invalid pants decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),
    #[error("surface complexity 2g-2+n = {0} is outside the supported range {1}..={2}")]
    ComplexityOutOfRange(i64, i64, i64),

    // blocks / mcg_torus
    #[error("degenerate modular data: {0}")]
    DegenerateData(String),
    #[error("invalid modular data: {0}")]
    InvalidModularData(String),
    #[error("unknown built-in modular data `{0}`")]
    UnknownBuiltin(String),
    #[error("braiding is degenerate (non-trivial radical)")]
    DegenerateBraiding,
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Capacity { .. }
            | Error::TooManyLabelings { .. }
            | Error::Overflow(_)
            | Error::ComplexityOutOfRange(..) => ErrorKind::Capacity,
            Error::Unsupported(_) | Error::DegenerateBraiding => ErrorKind::Unsupported,
            _ => ErrorKind::Validation,
        }
    }

    /// Stable machine-readable code, qualified by the owning module.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DuplicateLeg(_) => "graph_operad.duplicate_leg",
            Error::InvalidGraph(_) => "graph_operad.invalid_graph",
            Error::CompositionMismatch(_) => "graph_operad.composition_mismatch",
            Error::InvalidFactor(_) => "finite_forms.invalid_factor",
            Error::ElementOutOfRange { .. } => "finite_forms.element_out_of_range",
            Error::Shape(_) => "finite_forms.shape",
            Error::InvalidQForm { .. } => "finite_forms.invalid_qform",
            Error::Capacity { .. } => "finite_forms.capacity",
            Error::Overflow(_) => "finite_forms.overflow",
            Error::NotEven { .. } => "lattice_data.not_even",
            Error::NotSymmetric => "lattice_data.not_symmetric",
            Error::Degenerate => "lattice_data.degenerate",
            Error::XiNotDual { .. } => "lattice_data.xi_not_dual",
            Error::NegativeGenus(_) => "surfaces.negative_genus",
            Error::InvalidDecomposition(_) => "surfaces.invalid_decomposition",
            Error::MoveNotApplicable(_) => "surfaces.move_not_applicable",
            Error::ComplexityOutOfRange(..) => "surfaces.complexity_out_of_range",
            Error::TooManyLabelings { .. } => "blocks.capacity",
            Error::DegenerateData(_) => "blocks.degenerate_data",
            Error::InvalidModularData(_) => "blocks.invalid_modular_data",
            Error::UnknownBuiltin(_) => "blocks.unknown_builtin",
            Error::DegenerateBraiding => "mcg_torus.degenerate",
            Error::Unsupported(_) => "mcg_torus.unsupported",
        }
    }
}
