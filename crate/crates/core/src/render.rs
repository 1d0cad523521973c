//! Text renderings of mapping reports: a human-readable table, TSV, JSON
//! Lines, the per-pair detail view and the statement decomposition listing.

use std::fmt::{Display, Write};

use serde::{Serialize, Serializer};

use crate::algebra;
use crate::concept::{ScopedConcept, SemanticContext};
use crate::error::Result;
use crate::lta::{extract_spo, Lexicon};
use crate::mapper::{map_pair, MappingConfig, MappingReport, MappingResult};
use crate::matcher::{candidate_pairs, level_matrix, CandidatePair, MatchSet};

pub(crate) fn serialize_display<T: Display, S: Serializer>(
    value: &T,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Tsv,
    Jsonl,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "tsv" => Ok(OutputFormat::Tsv),
            "jsonl" => Ok(OutputFormat::Jsonl),
            other => Err(format!(
                "unknown format {other:?} (expected table, tsv or jsonl)"
            )),
        }
    }
}

pub fn render_report(report: &MappingReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => render_table(report),
        OutputFormat::Tsv => render_tsv(report),
        OutputFormat::Jsonl => render_jsonl(report),
    }
}

fn short_pairs(m: &MatchSet, sep: &str, level_sep: &str, join: &str) -> String {
    m.pairs()
        .iter()
        .map(|p| format!("{}{sep}{}{level_sep}{}", p.left.attr, p.right.attr, p.level))
        .collect::<Vec<_>>()
        .join(join)
}

pub fn render_table(report: &MappingReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "practice: {}  framework: {}  mode: {}  threshold: {}",
        report.practice, report.framework, report.mode, report.threshold
    );
    out.push('\n');
    for r in &report.results {
        let matches = if r.match_set.is_empty() {
            "none".to_string()
        } else {
            short_pairs(&r.match_set, "-", "(", "), ") + ")"
        };
        let _ = writeln!(
            out,
            "{} -> {}  {}%  {}  matches: {}",
            r.left.concept,
            r.right.concept,
            r.similarity.rounded(),
            r.relation,
            matches
        );
    }
    out.push_str("\nbest matches:\n");
    for b in &report.best_matches {
        let _ = writeln!(
            out,
            "{} => {}  {}%  {}",
            b.practice.concept,
            b.framework.concept,
            b.similarity.rounded(),
            b.relation
        );
    }
    out
}

pub fn render_tsv(report: &MappingReport) -> String {
    let mut out = String::from("left\tright\tsimilarity_pct\trelation\tmatches\n");
    for r in &report.results {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            r.left,
            r.right,
            r.similarity.rounded(),
            r.relation,
            short_pairs(&r.match_set, "-", ":", ",")
        );
    }
    out.push_str("\npractice\tbest_match\tsimilarity_pct\trelation\n");
    for b in &report.best_matches {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}",
            b.practice,
            b.framework,
            b.similarity.rounded(),
            b.relation
        );
    }
    out
}

#[derive(Serialize)]
struct JsonResult<'a> {
    #[serde(serialize_with = "serialize_display")]
    left: &'a crate::concept::ConceptRef,
    #[serde(serialize_with = "serialize_display")]
    right: &'a crate::concept::ConceptRef,
    similarity_pct: f64,
    relation: crate::mapper::Relation,
    matches: &'a [CandidatePair],
}

#[derive(Serialize)]
struct JsonBest<'a> {
    #[serde(serialize_with = "serialize_display")]
    practice: &'a crate::concept::ConceptRef,
    #[serde(serialize_with = "serialize_display")]
    best_match: &'a crate::concept::ConceptRef,
    similarity_pct: f64,
    relation: crate::mapper::Relation,
}

fn json_result(r: &MappingResult) -> JsonResult<'_> {
    JsonResult {
        left: &r.left,
        right: &r.right,
        similarity_pct: r.similarity.rounded_f64(),
        relation: r.relation,
        matches: r.match_set.pairs(),
    }
}

pub fn render_jsonl(report: &MappingReport) -> String {
    let mut out = String::new();
    for r in &report.results {
        out.push_str(&serde_json::to_string(&json_result(r)).expect("serializable"));
        out.push('\n');
    }
    for b in &report.best_matches {
        let best = JsonBest {
            practice: &b.practice,
            best_match: &b.framework,
            similarity_pct: b.similarity.rounded_f64(),
            relation: b.relation,
        };
        out.push_str(&serde_json::to_string(&best).expect("serializable"));
        out.push('\n');
    }
    out
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

/// `EF: 1 concept, 6 attributes`
pub fn context_summary(ctx: &SemanticContext) -> String {
    format!(
        "{}: {}, {}",
        ctx.id(),
        plural(ctx.concepts().len(), "concept"),
        plural(ctx.attribute_count(), "attribute")
    )
}

/// Summary line, then one line per concept and, with `lexicon`, the
/// subject / predicate / object split of every attribute.
pub fn render_parse_listing(ctx: &SemanticContext, lexicon: Option<&Lexicon>) -> String {
    let mut out = context_summary(ctx);
    out.push('\n');
    for c in ctx.concepts() {
        let _ = writeln!(
            out,
            "{}: {}, {}",
            c.name(),
            plural(c.attributes().len(), "attribute"),
            plural(c.objects().len(), "object")
        );
        let Some(lex) = lexicon else { continue };
        for a in c.attributes() {
            let spo = extract_spo(a.text(), c.name(), lex);
            let _ = writeln!(
                out,
                "  {}  subject: {} | predicate: {} | object: {}",
                a.id(),
                spo.subject.join(" "),
                spo.predicate.join(" "),
                spo.object_part.join(" ")
            );
        }
    }
    out
}

fn pair_lines(out: &mut String, pairs: &[CandidatePair]) {
    if pairs.is_empty() {
        out.push_str("  (none)\n");
    }
    for p in pairs {
        let _ = writeln!(out, "{} {} {}", p.left.attr, p.right.attr, p.level);
    }
}

/// Detail view for one concept pair: level matrix, candidates and matching
/// (listed in canonical orientation), the relational predicates and the
/// similarity.
pub fn render_pair_detail(
    left: &ScopedConcept<'_>,
    right: &ScopedConcept<'_>,
    config: &MappingConfig<'_>,
) -> Result<String> {
    let result = map_pair(left, right, config)?;
    let (first, second) = if left.orientation_key() <= right.orientation_key() {
        (left, right)
    } else {
        (right, left)
    };
    let matrix = level_matrix(first, second, &config.scorer)?;
    let candidates = candidate_pairs(first, second, &config.scorer, config.threshold)?;
    let matching = if first.reference() == left.reference() {
        result.match_set.clone()
    } else {
        result.match_set.mirrored()
    };

    let mut out = String::new();
    for (side, c) in [("left", left), ("right", right)] {
        let _ = writeln!(
            out,
            "{side}: {} ({})",
            c.reference(),
            plural(c.attribute_count(), "attribute")
        );
    }
    let _ = writeln!(
        out,
        "mode: {}  threshold: {}",
        config.scorer.mode(),
        config.threshold
    );
    let orientation = format!("{} x {}", first.reference(), second.reference());
    let _ = writeln!(out, "\nlevel matrix ({orientation}):");
    pair_lines(&mut out, &matrix);
    let _ = writeln!(out, "\ncandidates (level >= {}):", config.threshold);
    pair_lines(&mut out, &candidates);
    let _ = writeln!(out, "\nmatching:");
    pair_lines(&mut out, matching.pairs());

    let (c1, c2, m) = (left.concept, right.concept, &result.match_set);
    out.push('\n');
    let predicates = [
        ("related", algebra::related(c1, c2, m)),
        ("independent", algebra::independent(c1, c2, m)),
        ("equivalent", algebra::equivalent(c1, c2, m)?),
        ("sub-concept", algebra::sub_concept(c1, c2, m)),
        ("super-concept", algebra::super_concept(c1, c2, m)),
    ];
    for (name, value) in predicates {
        let _ = writeln!(out, "{name}: {value}");
    }
    let sim = result.similarity;
    let _ = writeln!(
        out,
        "\nsimilarity: {}/{} = {}% {}",
        sim.shared(),
        sim.union(),
        sim.rounded(),
        result.relation
    );
    for d in &result.diagnostics {
        let _ = writeln!(out, "note: {d}");
    }
    Ok(out)
}
