//! Line-oriented file formats for concept corpora, lexicons and
//! annotation tables, plus the bundled Requirements / Product Backlog data.
//!
//! All three formats share the same conventions: lines are trimmed, blank
//! lines are skipped, and a line whose first non-space character is `#` is
//! a comment. Errors carry the 1-based line number.

mod annotations;
mod concepts;
mod lexicon;

pub use annotations::{parse_annotations, AnnotationTable};
pub use concepts::{parse_concepts, serialize_concepts};
pub use lexicon::parse_lexicon;

/// Corpora shipped with the crate.
pub mod bundled {
    pub const ESSENCE_CONCEPTS: &str = include_str!("../../data/essence.concepts");
    pub const SCRUM_CONCEPTS: &str = include_str!("../../data/scrum.concepts");
    pub const TABLE1_ANNOTATIONS: &str = include_str!("../../data/paper-table1.ann");
    pub const TUNED_LEXICON: &str = include_str!("../../data/paper.lex");
}

/// Content lines: `(line number, trimmed text)` with blanks and comments removed.
fn content_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

/// `key: value` -> `(key, value)` with both sides trimmed.
fn split_key(line: &str) -> Option<(&str, &str)> {
    line.split_once(':').map(|(k, v)| (k.trim(), v.trim()))
}

/// Checks that every `rel-in` / `rel-out` reference pointing into one of
/// `contexts` names a concept that exists there. References to contexts
/// that are not loaded are treated as external and left alone.
pub fn check_relations(contexts: &[&crate::concept::SemanticContext]) -> crate::error::Result<()> {
    for ctx in contexts {
        for concept in ctx.concepts() {
            let refs = concept
                .input_relations()
                .iter()
                .chain(concept.output_relations());
            for r in refs {
                let target = contexts.iter().find(|c| c.id() == r.context);
                if let Some(target) = target {
                    if target.concept(&r.concept).is_none() {
                        return Err(crate::error::Error::unknown(r));
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_targets_are_checked() {
        let a =
            parse_concepts("context: A\nconcept: X\nrel-out: B/Y\nrel-in: Ext/Z\nend\n").unwrap();
        let b = parse_concepts("context: B\nconcept: Y\nend\n").unwrap();
        assert!(check_relations(&[&a, &b]).is_ok());
        let b2 = parse_concepts("context: B\nconcept: W\nend\n").unwrap();
        let err = check_relations(&[&a, &b2]).unwrap_err();
        assert!(err.is_reference());
        assert!(err.to_string().contains("B/Y"));
    }
}
