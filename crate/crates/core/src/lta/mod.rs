//! Linguistic typological analysis: split attribute statements into
//! subject / predicate / object parts and score statement pairs on a 0..=3
//! scale by counting the parts they share.

mod lexicon;
pub mod text;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use lexicon::Lexicon;

use crate::concept::AttrRef;
use crate::corpus::AnnotationTable;
use crate::error::{Error, Result};

/// Predicate placeholder for statements without a recognised verb.
pub const NO_PREDICATE: &str = "‹none›";

/// Similarity level of two attribute statements: the number of similar
/// linguistic parts, 0 (none) to 3 (subject, predicate and object).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct LtaLevel(u8);

impl LtaLevel {
    pub const NONE: LtaLevel = LtaLevel(0);
    pub const FULL: LtaLevel = LtaLevel(3);

    pub fn new(value: u32) -> Result<Self> {
        if value <= 3 {
            Ok(LtaLevel(value as u8))
        } else {
            Err(Error::InvalidLevel(value))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl fmt::Display for LtaLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Minimum level for a pair to count as a shared attribute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Threshold(u8);

impl Threshold {
    pub fn new(value: u32) -> Result<Self> {
        if (1..=3).contains(&value) {
            Ok(Threshold(value as u8))
        } else {
            Err(Error::InvalidThreshold(value))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn admits(self, level: LtaLevel) -> bool {
        level.0 >= self.0
    }
}

impl Default for Threshold {
    fn default() -> Self {
        Threshold(2)
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpoTriple {
    pub subject: Vec<String>,
    pub predicate: Vec<String>,
    pub object_part: Vec<String>,
    /// Concept whose name stands in for a missing subject.
    pub owner: String,
    /// No verb was found; the predicate holds [`NO_PREDICATE`].
    pub verbless: bool,
}

impl SpoTriple {
    pub fn parts(&self) -> [&[String]; 3] {
        [&self.subject, &self.predicate, &self.object_part]
    }
}

/// Rule-based subject/predicate/object split.
///
/// The predicate is the first maximal run of verb tokens in the first
/// sentence; tokens before it form the subject (the owner concept's name
/// when there are none) and everything after it, including any further
/// sentences, forms the object part.
pub fn extract_spo(statement: &str, owner: &str, lexicon: &Lexicon) -> SpoTriple {
    let (first, rest) = text::split_first_sentence(statement);
    let tokens = text::tokenize(first);
    let trailing = text::tokenize(rest);

    let start = tokens.iter().position(|t| lexicon.is_verb(t));
    let Some(start) = start else {
        let mut object_part = tokens;
        object_part.extend(trailing);
        return SpoTriple {
            subject: text::name_tokens(owner),
            predicate: vec![NO_PREDICATE.to_string()],
            object_part,
            owner: owner.to_string(),
            verbless: true,
        };
    };
    let end = tokens[start..]
        .iter()
        .position(|t| !lexicon.is_verb(t))
        .map_or(tokens.len(), |n| start + n);

    let mut tokens = tokens;
    let mut object_part = tokens.split_off(end);
    object_part.extend(trailing);
    let predicate = tokens.split_off(start);
    let subject = if tokens.is_empty() {
        text::name_tokens(owner)
    } else {
        tokens
    };
    SpoTriple {
        subject,
        predicate,
        object_part,
        owner: owner.to_string(),
        verbless: false,
    }
}

/// Stopword removal, stemming and synonym replacement.
pub fn canonicalize_part<S: AsRef<str>>(tokens: &[S], lexicon: &Lexicon) -> BTreeSet<String> {
    tokens
        .iter()
        .map(AsRef::as_ref)
        .filter(|t| !lexicon.is_stopword(t))
        .map(|t| lexicon.canonical(t))
        .filter(|c| !lexicon.is_stopword(c))
        .collect()
}

/// Two parts are similar when their canonical token sets intersect.
pub fn part_similar<S: AsRef<str>>(left: &[S], right: &[S], lexicon: &Lexicon) -> bool {
    let left = canonicalize_part(left, lexicon);
    let right = canonicalize_part(right, lexicon);
    !left.is_disjoint(&right)
}

/// A statement reduced to canonical parts, ready for pairwise comparison.
#[derive(Debug, Clone)]
pub struct AnalyzedStatement {
    pub spo: SpoTriple,
    pub canonical: [BTreeSet<String>; 3],
}

impl AnalyzedStatement {
    pub fn new(statement: &str, owner: &str, lexicon: &Lexicon) -> Self {
        let spo = extract_spo(statement, owner, lexicon);
        let canonical = spo.parts().map(|p| canonicalize_part(p, lexicon));
        Self { spo, canonical }
    }

    /// Which of subject, predicate and object are similar to `other`'s.
    pub fn similar_parts(&self, other: &AnalyzedStatement) -> [bool; 3] {
        let mut similar = [0, 1, 2].map(|i| !self.canonical[i].is_disjoint(&other.canonical[i]));
        if self.spo.verbless || other.spo.verbless {
            similar[1] = false;
        }
        similar
    }

    pub fn level(&self, other: &AnalyzedStatement) -> LtaLevel {
        let count = self.similar_parts(other).iter().filter(|&&s| s).count();
        LtaLevel(count as u8)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScoreMode {
    Heuristic,
    Annotated,
    #[default]
    Hybrid,
}

impl ScoreMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ScoreMode::Heuristic => "heuristic",
            ScoreMode::Annotated => "annotated",
            ScoreMode::Hybrid => "hybrid",
        }
    }

    pub fn uses_heuristic(self) -> bool {
        self != ScoreMode::Annotated
    }
}

impl fmt::Display for ScoreMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ScoreMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "heuristic" => Ok(ScoreMode::Heuristic),
            "annotated" => Ok(ScoreMode::Annotated),
            "hybrid" => Ok(ScoreMode::Hybrid),
            other => Err(format!(
                "unknown mode {other:?} (expected heuristic, annotated or hybrid)"
            )),
        }
    }
}

/// An attribute statement as seen by the scorer.
#[derive(Debug, Clone)]
pub struct Statement<'a> {
    pub reference: AttrRef,
    pub text: &'a str,
    pub owner: &'a str,
}

/// Pair scoring under one of the three modes.
#[derive(Debug, Clone, Copy)]
pub struct Scorer<'a> {
    lexicon: &'a Lexicon,
    annotations: Option<&'a AnnotationTable>,
    mode: ScoreMode,
}

impl<'a> Scorer<'a> {
    pub fn new(
        lexicon: &'a Lexicon,
        annotations: Option<&'a AnnotationTable>,
        mode: ScoreMode,
    ) -> Self {
        Self {
            lexicon,
            annotations,
            mode,
        }
    }

    pub fn heuristic(lexicon: &'a Lexicon) -> Self {
        Self::new(lexicon, None, ScoreMode::Heuristic)
    }

    pub fn mode(&self) -> ScoreMode {
        self.mode
    }

    pub fn lexicon(&self) -> &'a Lexicon {
        self.lexicon
    }

    pub fn analyze(&self, statement: &Statement<'_>) -> AnalyzedStatement {
        AnalyzedStatement::new(statement.text, statement.owner, self.lexicon)
    }

    fn annotated(&self, left: &AttrRef, right: &AttrRef) -> Option<LtaLevel> {
        self.annotations.and_then(|t| t.get(left, right))
    }

    fn unannotated(left: &AttrRef, right: &AttrRef) -> Error {
        Error::UnannotatedPair {
            left: left.to_string(),
            right: right.to_string(),
        }
    }

    pub fn score_pair(&self, left: &Statement<'_>, right: &Statement<'_>) -> Result<LtaLevel> {
        self.score_analyzed(left, right, || {
            self.analyze(left).level(&self.analyze(right))
        })
    }

    /// Like [`Scorer::score_pair`], with the heuristic level supplied lazily
    /// so callers can reuse analyzed statements.
    pub fn score_analyzed(
        &self,
        left: &Statement<'_>,
        right: &Statement<'_>,
        heuristic: impl FnOnce() -> LtaLevel,
    ) -> Result<LtaLevel> {
        match self.mode {
            ScoreMode::Heuristic => Ok(heuristic()),
            ScoreMode::Annotated => self
                .annotated(&left.reference, &right.reference)
                .ok_or_else(|| Self::unannotated(&left.reference, &right.reference)),
            ScoreMode::Hybrid => Ok(self
                .annotated(&left.reference, &right.reference)
                .unwrap_or_else(heuristic)),
        }
    }
}
