use std::collections::BTreeMap;

use super::{content_lines, split_key};
use crate::concept::{AttrRef, SemanticContext};
use crate::error::{Error, Result};
use crate::lta::LtaLevel;

/// Expert-assigned levels keyed by unordered attribute pair.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnnotationTable {
    entries: BTreeMap<(AttrRef, AttrRef), LtaLevel>,
}

fn unordered(a: &AttrRef, b: &AttrRef) -> (AttrRef, AttrRef) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

impl AnnotationTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds an entry; a pair may be annotated once in either order.
    pub fn insert(&mut self, a: AttrRef, b: AttrRef, level: LtaLevel) -> Result<()> {
        let key = unordered(&a, &b);
        if self.entries.contains_key(&key) {
            return Err(Error::Duplicate {
                kind: "annotated pair",
                id: format!("{} {}", key.0, key.1),
            });
        }
        self.entries.insert(key, level);
        Ok(())
    }

    pub fn get(&self, a: &AttrRef, b: &AttrRef) -> Option<LtaLevel> {
        self.entries.get(&unordered(a, b)).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&AttrRef, &AttrRef, LtaLevel)> + '_ {
        self.entries.iter().map(|((a, b), l)| (a, b, *l))
    }
}

fn resolve(reference: &str, contexts: &[&SemanticContext], line: usize) -> Result<AttrRef> {
    let parsed: AttrRef = reference.parse().map_err(|_| {
        Error::parse(
            line,
            format!("malformed reference {reference:?}; expected <context>/<Concept>.<attrId>"),
        )
    })?;
    let known = contexts
        .iter()
        .find(|c| c.id() == parsed.concept.context)
        .and_then(|c| c.concept(&parsed.concept.concept))
        .and_then(|c| c.attribute(&parsed.attr))
        .is_some();
    if known {
        Ok(parsed)
    } else {
        Err(Error::UnknownReference {
            reference: reference.to_string(),
            line: Some(line),
        })
    }
}

/// Parses `pair: <ctx>/<Concept>.<attr> <ctx>/<Concept>.<attr> = <level>`
/// lines, resolving every reference against `contexts`.
pub fn parse_annotations(input: &str, contexts: &[&SemanticContext]) -> Result<AnnotationTable> {
    let mut table = AnnotationTable::new();
    for (line, text) in content_lines(input) {
        let expected = || {
            Error::parse(
                line,
                "expected `pair: <ctx>/<Concept>.<attr> <ctx>/<Concept>.<attr> = <level>`",
            )
        };
        let (key, value) = split_key(text).ok_or_else(expected)?;
        if key != "pair" {
            return Err(Error::parse(line, format!("unknown key {key:?}")));
        }
        let (refs, level) = value.rsplit_once('=').ok_or_else(expected)?;
        let refs: Vec<&str> = refs.split_whitespace().collect();
        let [left, right] = refs[..] else {
            return Err(expected());
        };
        let level: u32 = level
            .trim()
            .parse()
            .map_err(|_| Error::parse(line, format!("level {:?} is not a number", level.trim())))?;
        let level = LtaLevel::new(level).map_err(|e| e.at_line(line))?;
        let left = resolve(left, contexts, line)?;
        let right = resolve(right, contexts, line)?;
        table
            .insert(left, right, level)
            .map_err(|e| e.at_line(line))?;
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{bundled, parse_concepts};

    fn corpora() -> (SemanticContext, SemanticContext) {
        (
            parse_concepts(bundled::ESSENCE_CONCEPTS).unwrap(),
            parse_concepts(bundled::SCRUM_CONCEPTS).unwrap(),
        )
    }

    fn r(s: &str) -> AttrRef {
        s.parse().unwrap()
    }

    #[test]
    fn single_entries() {
        let (ef, scrum) = corpora();
        let t = parse_annotations(
            "pair: EF/Requirements.a3 Scrum/ProductBacklog.b3 = 2\npair: EF/Requirements.a1 Scrum/ProductBacklog.b1 = 1\n",
            &[&ef, &scrum],
        )
        .unwrap();
        let lvl = |v| LtaLevel::new(v).unwrap();
        assert_eq!(
            t.get(&r("EF/Requirements.a3"), &r("Scrum/ProductBacklog.b3")),
            Some(lvl(2))
        );
        // unordered
        assert_eq!(
            t.get(&r("Scrum/ProductBacklog.b1"), &r("EF/Requirements.a1")),
            Some(lvl(1))
        );
        assert_eq!(
            t.get(&r("Scrum/ProductBacklog.b2"), &r("EF/Requirements.a1")),
            None
        );
    }

    #[test]
    fn unknown_attribute_is_a_reference_error() {
        let (ef, scrum) = corpora();
        let err = parse_annotations(
            "\npair: EF/Requirements.a9 Scrum/ProductBacklog.b1 = 2\n",
            &[&ef, &scrum],
        )
        .unwrap_err();
        assert!(err.is_reference());
        assert_eq!(
            err,
            Error::UnknownReference {
                reference: "EF/Requirements.a9".into(),
                line: Some(2)
            }
        );
        let err = parse_annotations(
            "pair: XX/Requirements.a1 Scrum/ProductBacklog.b1 = 2",
            &[&ef, &scrum],
        )
        .unwrap_err();
        assert!(err.is_reference());
    }

    #[test]
    fn duplicate_and_range_errors() {
        let (ef, scrum) = corpora();
        let dup = "pair: EF/Requirements.a1 Scrum/ProductBacklog.b1 = 1\npair: Scrum/ProductBacklog.b1 EF/Requirements.a1 = 2\n";
        assert!(matches!(
            parse_annotations(dup, &[&ef, &scrum]).unwrap_err(),
            Error::Parse { line: 2, .. }
        ));
        let bad = "pair: EF/Requirements.a1 Scrum/ProductBacklog.b1 = 4\n";
        assert!(matches!(
            parse_annotations(bad, &[&ef, &scrum]).unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        let bad = "pair: EF/Requirements.a1 = 1\n";
        assert!(matches!(
            parse_annotations(bad, &[&ef, &scrum]).unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
    }

    #[test]
    fn bundled_table_covers_the_grid() {
        let (ef, scrum) = corpora();
        let t = parse_annotations(bundled::TABLE1_ANNOTATIONS, &[&ef, &scrum]).unwrap();
        assert_eq!(t.len(), 36);
        let diag: Vec<u8> = (1..=6)
            .map(|i| {
                t.get(
                    &r(&format!("EF/Requirements.a{i}")),
                    &r(&format!("Scrum/ProductBacklog.b{i}")),
                )
                .unwrap()
                .value()
            })
            .collect();
        assert_eq!(diag, [1, 1, 2, 2, 1, 2]);
    }
}
