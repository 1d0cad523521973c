//! The mapping pipeline: for each practice/framework concept pair, match
//! attributes, compute similarity and classify the relation; then collect
//! the results and the best framework match per practice concept.

use std::fmt;

use serde::Serialize;

use crate::algebra::{self, Percentage};
use crate::concept::{ConceptRef, ScopedConcept, SemanticContext};
use crate::error::{Error, Result};
use crate::lta::{ScoreMode, Scorer, Threshold};
use crate::matcher::{match_concepts, MatchSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equivalent,
    SubConcept,
    SuperConcept,
    Related,
    Independent,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Equivalent => "equivalent",
            Relation::SubConcept => "sub-concept",
            Relation::SuperConcept => "super-concept",
            Relation::Related => "related",
            Relation::Independent => "independent",
        }
    }

    /// The label seen from the other concept.
    pub fn mirrored(self) -> Self {
        match self {
            Relation::SubConcept => Relation::SuperConcept,
            Relation::SuperConcept => Relation::SubConcept,
            other => other,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct MappingConfig<'a> {
    pub scorer: Scorer<'a>,
    pub threshold: Threshold,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingResult {
    pub left: ConceptRef,
    pub right: ConceptRef,
    pub match_set: MatchSet,
    pub similarity: Percentage,
    pub relation: Relation,
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestMatch {
    pub practice: ConceptRef,
    pub framework: ConceptRef,
    pub similarity: Percentage,
    pub relation: Relation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingReport {
    pub practice: String,
    pub framework: String,
    pub mode: ScoreMode,
    pub threshold: Threshold,
    /// Sorted by (left name, right name).
    pub results: Vec<MappingResult>,
    /// One entry per practice concept, in practice-name order.
    pub best_matches: Vec<BestMatch>,
}

/// Classification precedence: equivalent, sub-concept, super-concept,
/// related, independent.
pub fn classify(
    left: &ScopedConcept<'_>,
    right: &ScopedConcept<'_>,
    m: &MatchSet,
) -> Result<Relation> {
    let (c1, c2) = (left.concept, right.concept);
    Ok(if algebra::equivalent(c1, c2, m)? {
        Relation::Equivalent
    } else if algebra::sub_concept(c1, c2, m) {
        Relation::SubConcept
    } else if algebra::super_concept(c1, c2, m) {
        Relation::SuperConcept
    } else if algebra::related(c1, c2, m) {
        Relation::Related
    } else {
        Relation::Independent
    })
}

fn verbless_notes(c: &ScopedConcept<'_>, scorer: &Scorer<'_>) -> Vec<String> {
    c.concept
        .attributes()
        .iter()
        .filter(|a| crate::lta::extract_spo(a.text(), c.concept.name(), scorer.lexicon()).verbless)
        .map(|a| format!("{}: no verb found, predicate ignored", c.attr_ref(a)))
        .collect()
}

pub fn map_pair(
    left: &ScopedConcept<'_>,
    right: &ScopedConcept<'_>,
    config: &MappingConfig<'_>,
) -> Result<MappingResult> {
    for c in [left, right] {
        if c.attribute_count() == 0 {
            return Err(Error::ConceptWithoutAttributes(c.reference().to_string()));
        }
    }
    let match_set = match_concepts(left, right, &config.scorer, config.threshold)?;
    let similarity = algebra::similarity(left.concept, right.concept, &match_set)?;
    let relation = classify(left, right, &match_set)?;
    let diagnostics = if config.scorer.mode().uses_heuristic() {
        let mut notes = verbless_notes(left, &config.scorer);
        notes.extend(verbless_notes(right, &config.scorer));
        notes
    } else {
        Vec::new()
    };
    Ok(MappingResult {
        left: left.reference(),
        right: right.reference(),
        match_set,
        similarity,
        relation,
        diagnostics,
    })
}

/// Maps every practice concept against every framework concept.
pub fn map_contexts(
    practice: &SemanticContext,
    framework: &SemanticContext,
    config: &MappingConfig<'_>,
) -> Result<MappingReport> {
    for ctx in [practice, framework] {
        if ctx.concepts().is_empty() {
            return Err(Error::EmptyContext(ctx.id().to_string()));
        }
    }

    let mut results = Vec::new();
    for left in practice.scoped_concepts() {
        for right in framework.scoped_concepts() {
            results.push(map_pair(&left, &right, config)?);
        }
    }
    results.sort_by(|a, b| {
        (&a.left.concept, &a.right.concept).cmp(&(&b.left.concept, &b.right.concept))
    });

    let mut best_matches: Vec<BestMatch> = Vec::new();
    for r in &results {
        let candidate = BestMatch {
            practice: r.left.clone(),
            framework: r.right.clone(),
            similarity: r.similarity,
            relation: r.relation,
        };
        match best_matches.last_mut() {
            // results are ordered by framework name within a practice concept,
            // so a strict improvement is needed to replace the current best
            Some(best) if best.practice == r.left => {
                if r.similarity > best.similarity {
                    *best = candidate;
                }
            }
            _ => best_matches.push(candidate),
        }
    }

    Ok(MappingReport {
        practice: practice.id().to_string(),
        framework: framework.id().to_string(),
        mode: config.scorer.mode(),
        threshold: config.threshold,
        results,
        best_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{bundled, parse_annotations, parse_concepts};
    use crate::lta::Lexicon;

    fn paper_corpora() -> (SemanticContext, SemanticContext) {
        (
            parse_concepts(bundled::SCRUM_CONCEPTS).unwrap(),
            parse_concepts(bundled::ESSENCE_CONCEPTS).unwrap(),
        )
    }

    #[test]
    fn product_backlog_vs_requirements_annotated() {
        let (scrum, ef) = paper_corpora();
        let table = parse_annotations(bundled::TABLE1_ANNOTATIONS, &[&ef, &scrum]).unwrap();
        let lex = Lexicon::new();
        let config = MappingConfig {
            scorer: Scorer::new(&lex, Some(&table), ScoreMode::Annotated),
            threshold: Threshold::default(),
        };
        let report = map_contexts(&scrum, &ef, &config).unwrap();
        assert_eq!(report.results.len(), 1);
        let r = &report.results[0];
        assert_eq!(r.similarity.rounded(), "33.3");
        assert_eq!(r.relation, Relation::Related);
        let pairs: Vec<_> = r
            .match_set
            .pairs()
            .iter()
            .map(|p| (p.left.attr.as_str(), p.right.attr.as_str()))
            .collect();
        assert_eq!(pairs, [("b3", "a3"), ("b4", "a4"), ("b6", "a6")]);
        assert_eq!(report.best_matches.len(), 1);
        assert_eq!(report.best_matches[0].framework.concept, "Requirements");
        assert!(r.diagnostics.is_empty());
    }

    #[test]
    fn context_against_itself_is_equivalent() {
        let src = "context: P\nconcept: Alpha\nattr a1: team owns the backlog\nattr a2: backlog is ordered by value\nobj o1: main backlog\nend\nconcept: Beta\nattr b1: sprint has a fixed length\nend\n";
        let p = parse_concepts(src).unwrap();
        let lex = Lexicon::new();
        let config = MappingConfig {
            scorer: Scorer::heuristic(&lex),
            threshold: Threshold::default(),
        };
        let report = map_contexts(&p, &p, &config).unwrap();
        assert_eq!(report.results.len(), 4);
        for best in &report.best_matches {
            assert_eq!(best.practice, best.framework);
            assert_eq!(best.similarity.rounded(), "100.0");
            assert_eq!(best.relation, Relation::Equivalent);
        }
        // "team owns the backlog" has no known verb
        let alpha = &report.results[0];
        assert_eq!(alpha.diagnostics.len(), 2);
    }

    #[test]
    fn nothing_above_threshold_is_independent() {
        let a = parse_concepts("context: A\nconcept: X\nattr a1: cats are animals\nend\n").unwrap();
        let b = parse_concepts("context: B\nconcept: Y\nattr b1: rockets must fly\nend\n").unwrap();
        let lex = Lexicon::new();
        let config = MappingConfig {
            scorer: Scorer::heuristic(&lex),
            threshold: Threshold::default(),
        };
        let r = map_pair(&a.scoped("X").unwrap(), &b.scoped("Y").unwrap(), &config).unwrap();
        assert_eq!(r.similarity.rounded(), "0.0");
        assert_eq!(r.relation, Relation::Independent);
    }

    #[test]
    fn cross_product_and_errors() {
        let p = parse_concepts(
            "context: P\nconcept: A\nattr a1: x is y\nend\nconcept: B\nattr b1: y is z\nend\n",
        )
        .unwrap();
        let f = parse_concepts("context: F\nconcept: C\nattr c1: x is y\nend\nconcept: D\nattr d1: q is r\nend\nconcept: E\nattr e1: s is t\nend\n").unwrap();
        let lex = Lexicon::new();
        let config = MappingConfig {
            scorer: Scorer::heuristic(&lex),
            threshold: Threshold::default(),
        };
        let report = map_contexts(&p, &f, &config).unwrap();
        assert_eq!(report.results.len(), 6);
        let names: Vec<_> = report
            .results
            .iter()
            .map(|r| format!("{}>{}", r.left.concept, r.right.concept))
            .collect();
        assert_eq!(names, ["A>C", "A>D", "A>E", "B>C", "B>D", "B>E"]);

        let empty = SemanticContext::new("Z").unwrap();
        assert_eq!(
            map_contexts(&empty, &f, &config).unwrap_err(),
            Error::EmptyContext("Z".into())
        );
        let bare = parse_concepts("context: Q\nconcept: Bare\nend\n").unwrap();
        assert!(matches!(
            map_contexts(&bare, &f, &config).unwrap_err(),
            Error::ConceptWithoutAttributes(_)
        ));
    }

    #[test]
    fn best_match_ties_go_to_first_name() {
        let p = parse_concepts("context: P\nconcept: A\nattr a1: x is y\nend\n").unwrap();
        let f = parse_concepts(
            "context: F\nconcept: Zed\nattr z1: x is y\nend\nconcept: Bee\nattr b1: x is y\nend\n",
        )
        .unwrap();
        let lex = Lexicon::new();
        let config = MappingConfig {
            scorer: Scorer::heuristic(&lex),
            threshold: Threshold::default(),
        };
        let report = map_contexts(&p, &f, &config).unwrap();
        assert_eq!(report.best_matches[0].framework.concept, "Bee");
    }
}
