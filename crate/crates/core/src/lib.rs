//! Maps software-engineering practice concepts (such as Scrum's Product
//! Backlog) onto Essence kernel concepts (such as the Requirements alpha).
//!
//! Concepts are compared through their attribute statements. Each pair of
//! statements gets a linguistic similarity level from 0 to 3, pairs at or
//! above a threshold form a bijective matching, and the matching drives the
//! relational operations: related, independent, similarity, equivalent,
//! sub-concept and super-concept.

pub mod algebra;
pub mod concept;
pub mod corpus;
mod error;
pub mod lta;
pub mod mapper;
pub mod matcher;
pub mod render;

pub use algebra::Percentage;
pub use concept::{
    AttrRef, AttributeStatement, Concept, ConceptRef, ObjectInstance, ScopedConcept,
    SemanticContext,
};
pub use corpus::AnnotationTable;
pub use error::{Error, Result};
pub use lta::{Lexicon, LtaLevel, ScoreMode, Scorer, Threshold};
pub use mapper::{map_contexts, map_pair, MappingConfig, MappingReport, MappingResult, Relation};
pub use matcher::{CandidatePair, MatchSet};
