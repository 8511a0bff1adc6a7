//! JSON interchange format for complexes.
//!
//! Documents carry the facet list verbatim with 0-based vertices. The writer
//! is canonical (facets sorted lexicographically, vertices ascending) so that
//! regenerating a file from the same seed is bit-exact.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::Result;

/// Provenance block recorded by the generators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocMetadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<serde_json::Value>,
}

/// On-disk form of a complex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
    pub coloring: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<DocMetadata>,
}

impl ComplexDoc {
    pub fn from_complex(cx: &SimplicialComplex) -> Self {
        let mut facets = cx.facet_lists();
        facets.sort();
        ComplexDoc {
            n: cx.num_vertices(),
            facets,
            coloring: cx.coloring().map(<[u32]>::to_vec),
            metadata: None,
        }
    }

    pub fn with_metadata(mut self, metadata: DocMetadata) -> Self {
        self.metadata = Some(metadata);
        self
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(self.n, &self.facets, self.coloring.clone())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json_string(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("document serialization");
        out.push('\n');
        out
    }
}
