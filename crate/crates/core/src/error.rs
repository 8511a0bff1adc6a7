use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by construction, validation and computation routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a complex on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("complex on {n} vertices exceeds the representable maximum of 63")]
    TooManyVertices { n: usize },

    #[error("facet {facet:?} lists vertex {vertex} more than once")]
    RepeatedVertex { facet: Vec<usize>, vertex: usize },

    #[error("vertex {vertex} does not appear in any facet")]
    UnusedVertex { vertex: usize },

    #[error("coloring has {got} entries, expected one per vertex ({n})")]
    ColoringLength { got: usize, n: usize },

    #[error("coloring classes must be numbered contiguously from 0; class {class} is empty")]
    EmptyColorClass { class: u32 },

    #[error("face {face:?} meets color class {class} more than once")]
    MonochromaticPair { face: Vec<usize>, class: u32 },

    #[error("{face:?} is not a face of the complex")]
    NotAFace { face: Vec<usize> },

    #[error("{subset:?} is not a facet of the complex")]
    NotAFacet { subset: Vec<usize> },

    #[error("gluing map is not a bijection between the selected facets")]
    BadGluingMap,

    #[error("gluing map does not induce a matching of color classes")]
    ColorMismatch,

    #[error("connected sum requires two pure complexes of the same dimension")]
    DimensionMismatch,

    #[error(
        "complex on {n} vertices exceeds the enumeration cap of {cap}; \
         raise the cap or restrict the computed strands with max_j"
    )]
    EnumerationCapExceeded { n: usize, cap: usize },

    #[error("{0} is not a prime below 2^16")]
    BadPrime(u32),

    #[error("unknown field {0:?}; expected gf2, gf<p> or qq")]
    BadFieldSpec(String),

    #[error("monomial index {b} out of range; this degree has only {max} monomials")]
    MonomialIndexOutOfRange { b: u64, max: u64 },

    #[error("generator set is not closed under the lex order (first gap at {witness})")]
    NotLexClosed { witness: String },

    #[error("expected squarefree monomials, found {0}")]
    NotSquarefree(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("malformed complex document: {0}")]
    Document(#[from] serde_json::Error),
}
