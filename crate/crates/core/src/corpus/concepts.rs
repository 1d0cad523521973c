use std::fmt::Write;

use super::{content_lines, split_key};
use crate::concept::{AttributeStatement, Concept, ConceptRef, ObjectInstance, SemanticContext};
use crate::error::{Error, Result};

/// Parses the concept file format:
///
/// ```text
/// context: EF
/// concept: Requirements
/// attr a1: are the definition of what needs to be achieved
/// obj o1: the team's release backlog
/// rel-in: Scrum/ProductBacklog
/// rel-out: EF/Stakeholders
/// end
/// ```
pub fn parse_concepts(input: &str) -> Result<SemanticContext> {
    let mut context: Option<SemanticContext> = None;
    let mut open: Option<(usize, Concept)> = None;
    let mut last_line = 0;

    for (line, text) in content_lines(input) {
        last_line = line;
        if text == "end" {
            let (_, concept) = open
                .take()
                .ok_or_else(|| Error::parse(line, "`end` without an open concept"))?;
            context
                .as_mut()
                .expect("concept blocks require a context")
                .add_concept(concept)
                .map_err(|e| e.at_line(line))?;
            continue;
        }

        if let Some(rest) = text.strip_prefix("attr ") {
            let concept = in_block(&mut open, line, "attr")?;
            let (id, body) = split_key(rest)
                .ok_or_else(|| Error::parse(line, "expected `attr <id>: <text>`"))?;
            AttributeStatement::new(id, body)
                .and_then(|a| concept.add_attribute(a))
                .map_err(|e| e.at_line(line))?;
            continue;
        }
        if let Some(rest) = text.strip_prefix("obj ") {
            let concept = in_block(&mut open, line, "obj")?;
            let (id, body) =
                split_key(rest).ok_or_else(|| Error::parse(line, "expected `obj <id>: <text>`"))?;
            ObjectInstance::new(id, body)
                .and_then(|o| concept.add_object(o))
                .map_err(|e| e.at_line(line))?;
            continue;
        }

        let Some((key, value)) = split_key(text) else {
            return Err(Error::parse(
                line,
                format!("unrecognised line {text:?}; expected `context:`, `concept:`, `attr`, `obj`, `rel-in:`, `rel-out:` or `end`"),
            ));
        };
        match key {
            "context" => {
                if context.is_some() {
                    return Err(Error::parse(line, "`context:` may appear only once"));
                }
                context = Some(SemanticContext::new(value).map_err(|e| e.at_line(line))?);
            }
            "concept" => {
                if context.is_none() {
                    return Err(Error::parse(line, "missing context header"));
                }
                if let Some((opened, _)) = &open {
                    return Err(Error::parse(
                        line,
                        format!("concept opened at line {opened} is missing `end`"),
                    ));
                }
                open = Some((line, Concept::new(value).map_err(|e| e.at_line(line))?));
            }
            "rel-in" | "rel-out" => {
                let concept = in_block(&mut open, line, key)?;
                let reference: ConceptRef = value.parse().map_err(|_| {
                    Error::parse(line, format!("expected `{key}: <context>/<ConceptName>`"))
                })?;
                if key == "rel-in" {
                    concept.add_input_relation(reference);
                } else {
                    concept.add_output_relation(reference);
                }
            }
            other => {
                return Err(Error::parse(line, format!("unknown key {other:?}")));
            }
        }
    }

    if let Some((opened, concept)) = open {
        return Err(Error::parse(
            last_line.max(opened),
            format!(
                "concept {} opened at line {opened} is missing `end`",
                concept.name()
            ),
        ));
    }
    context.ok_or_else(|| Error::parse(last_line.max(1), "missing context header"))
}

fn in_block<'c>(
    open: &'c mut Option<(usize, Concept)>,
    line: usize,
    key: &str,
) -> Result<&'c mut Concept> {
    open.as_mut()
        .map(|(_, c)| c)
        .ok_or_else(|| Error::parse(line, format!("`{key}` outside a concept block")))
}

/// Canonical text form; [`parse_concepts`] reads it back unchanged.
pub fn serialize_concepts(ctx: &SemanticContext) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "context: {}", ctx.id());
    for concept in ctx.concepts() {
        out.push('\n');
        let _ = writeln!(out, "concept: {}", concept.name());
        for a in concept.attributes() {
            let _ = writeln!(out, "attr {}: {}", a.id(), a.text());
        }
        for o in concept.objects() {
            let _ = writeln!(out, "obj {}: {}", o.id(), o.text());
        }
        for r in concept.input_relations() {
            let _ = writeln!(out, "rel-in: {r}");
        }
        for r in concept.output_relations() {
            let _ = writeln!(out, "rel-out: {r}");
        }
        out.push_str("end\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::bundled;

    fn line_of(err: Error) -> usize {
        match err {
            Error::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn bundled_essence_corpus() {
        let ctx = parse_concepts(bundled::ESSENCE_CONCEPTS).unwrap();
        assert_eq!(ctx.id(), "EF");
        let req = ctx.concept("Requirements").unwrap();
        let ids: Vec<_> = req.attributes().iter().map(|a| a.id()).collect();
        assert_eq!(ids, ["a1", "a2", "a3", "a4", "a5", "a6"]);
        assert_eq!(
            req.attribute("a1").unwrap().text(),
            "are the definition of what needs to be achieved"
        );
    }

    #[test]
    fn empty_input_needs_context_header() {
        let err = parse_concepts("").unwrap_err();
        assert!(err.to_string().contains("missing context header"));
        assert_eq!(line_of(err), 1);
        assert!(parse_concepts("context: X\n")
            .unwrap()
            .concepts()
            .is_empty());
        let err = parse_concepts("concept: A\nend\n").unwrap_err();
        assert!(err.to_string().contains("missing context header"));
    }

    #[test]
    fn duplicate_attribute_reports_second_line() {
        let src = "context: X\nconcept: A\nattr a1: one\n\nattr a1: two\nend\n";
        let err = parse_concepts(src).unwrap_err();
        assert!(err.to_string().contains("a1"), "{err}");
        assert_eq!(line_of(err), 5);
    }

    #[test]
    fn structural_errors() {
        assert_eq!(line_of(parse_concepts("context: X\nend\n").unwrap_err()), 2);
        assert_eq!(
            line_of(parse_concepts("context: X\nattr a1: t\n").unwrap_err()),
            2
        );
        assert_eq!(
            line_of(parse_concepts("context: X\nconcept: A\nconcept: B\n").unwrap_err()),
            3
        );
        assert_eq!(
            line_of(parse_concepts("context: X\nconcept: A\nattr a1: t\n").unwrap_err()),
            3
        );
        assert_eq!(
            line_of(parse_concepts("context: X\ncontext: Y\n").unwrap_err()),
            2
        );
        assert_eq!(
            line_of(parse_concepts("context: X\nconcept: A\nattr A1: t\nend\n").unwrap_err()),
            3
        );
        assert_eq!(
            line_of(parse_concepts("context: X\nconcept: A\nrel-in: nope\nend\n").unwrap_err()),
            3
        );
        assert_eq!(
            line_of(parse_concepts("context: X\nconcept: A\nfoo: bar\nend\n").unwrap_err()),
            3
        );
        assert_eq!(
            line_of(parse_concepts("context: X\nconcept: A\nend\nconcept: A\nend\n").unwrap_err()),
            5
        );
        assert_eq!(line_of(parse_concepts("context: a b\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_concepts("  \n\ngarbage\n").unwrap_err()), 3);
    }

    #[test]
    fn hash_inside_text_is_kept() {
        let src = "# header comment\ncontext: X\nconcept: A\n  # indented comment\nattr a1: ticket #42 must be closed\nend\n";
        let ctx = parse_concepts(src).unwrap();
        let text = ctx.concept("A").unwrap().attribute("a1").unwrap().text();
        assert_eq!(text, "ticket #42 must be closed");
        assert_eq!(parse_concepts(&serialize_concepts(&ctx)).unwrap(), ctx);
    }

    #[test]
    fn objects_and_relations_round_trip() {
        let src = "context: Scrum\nconcept: Sprint\nattr s1: is a time box: one month or less\nobj o1: Sprint 12\nrel-in: Scrum/ProductBacklog\nrel-out: EF/Work\nend\nconcept: Empty\nend\n";
        let ctx = parse_concepts(src).unwrap();
        let sprint = ctx.concept("Sprint").unwrap();
        assert_eq!(
            sprint.attribute("s1").unwrap().text(),
            "is a time box: one month or less"
        );
        assert_eq!(sprint.objects()[0].text(), "Sprint 12");
        assert_eq!(
            sprint.input_relations()[0].to_string(),
            "Scrum/ProductBacklog"
        );
        assert_eq!(sprint.output_relations()[0].to_string(), "EF/Work");
        let text = serialize_concepts(&ctx);
        assert_eq!(text.matches("obj ").count(), 1);
        assert_eq!(parse_concepts(&text).unwrap(), ctx);
    }
}
