//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Each exported function has a plain Rust counterpart returning
//! `Result<String, String>` so the logic is testable without a browser.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use essencemap::corpus::{
    bundled, check_relations, parse_annotations, parse_concepts, parse_lexicon,
};
use essencemap::lta::{AnalyzedStatement, Statement};
use essencemap::render::{render_report, OutputFormat};
use essencemap::{map_contexts, ConceptRef, Lexicon, MappingConfig, ScoreMode, Scorer, Threshold};

fn lexicon(text: &str) -> Result<Lexicon, String> {
    parse_lexicon(text).map_err(|e| format!("lexicon: {e}"))
}

#[derive(Serialize)]
struct Part<'a> {
    tokens: &'a [String],
    canonical: Vec<&'a str>,
}

#[derive(Serialize)]
struct Decomposition<'a> {
    subject: Part<'a>,
    predicate: Part<'a>,
    object: Part<'a>,
    verbless: bool,
}

fn decomposition(a: &AnalyzedStatement) -> Decomposition<'_> {
    let part = |i: usize| Part {
        tokens: a.spo.parts()[i],
        canonical: a.canonical[i].iter().map(String::as_str).collect(),
    };
    Decomposition {
        subject: part(0),
        predicate: part(1),
        object: part(2),
        verbless: a.spo.verbless,
    }
}

/// Subject/predicate/object split of one statement, as JSON.
pub fn decompose_json(text: &str, owner: &str, lexicon_text: &str) -> Result<String, String> {
    if text.trim().is_empty() {
        return Err("statement is empty".into());
    }
    let lex = lexicon(lexicon_text)?;
    let analyzed = AnalyzedStatement::new(text, owner, &lex);
    serde_json::to_string(&decomposition(&analyzed)).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct PairScore<'a> {
    level: u8,
    similar: [bool; 3],
    left: Decomposition<'a>,
    right: Decomposition<'a>,
}

/// Heuristic level for two statements, with both decompositions, as JSON.
pub fn score_json(
    left: &str,
    left_owner: &str,
    right: &str,
    right_owner: &str,
    lexicon_text: &str,
) -> Result<String, String> {
    if left.trim().is_empty() || right.trim().is_empty() {
        return Err("both statements need text".into());
    }
    let lex = lexicon(lexicon_text)?;
    let scorer = Scorer::heuristic(&lex);
    let reference = ConceptRef::new("demo", "Statement");
    let statement = |text, owner, id| Statement {
        reference: reference.attr(id),
        text,
        owner,
    };
    let l = scorer.analyze(&statement(left, left_owner, "l"));
    let r = scorer.analyze(&statement(right, right_owner, "r"));
    let out = PairScore {
        level: l.level(&r).value(),
        similar: l.similar_parts(&r),
        left: decomposition(&l),
        right: decomposition(&r),
    };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

/// Maps a practice corpus onto a framework corpus and renders the report.
/// An empty `annotations_text` means no annotation table.
pub fn map_text(
    practice_text: &str,
    framework_text: &str,
    lexicon_text: &str,
    annotations_text: &str,
    mode: &str,
    threshold: u32,
    format: &str,
) -> Result<String, String> {
    let mode: ScoreMode = mode.parse()?;
    let format: OutputFormat = format.parse()?;
    let threshold = Threshold::new(threshold).map_err(|e| e.to_string())?;
    let practice = parse_concepts(practice_text).map_err(|e| format!("practice: {e}"))?;
    let framework = parse_concepts(framework_text).map_err(|e| format!("framework: {e}"))?;
    check_relations(&[&practice, &framework]).map_err(|e| e.to_string())?;
    let lex = lexicon(lexicon_text)?;
    let annotations = if annotations_text.trim().is_empty() {
        None
    } else {
        Some(
            parse_annotations(annotations_text, &[&practice, &framework])
                .map_err(|e| format!("annotations: {e}"))?,
        )
    };
    if mode == ScoreMode::Annotated && annotations.is_none() {
        return Err("annotated mode needs an annotation table".into());
    }
    let config = MappingConfig {
        scorer: Scorer::new(&lex, annotations.as_ref(), mode),
        threshold,
    };
    let report = map_contexts(&practice, &framework, &config).map_err(|e| e.to_string())?;
    Ok(render_report(&report, format))
}

#[wasm_bindgen]
pub fn decompose(text: &str, owner: &str, lexicon: &str) -> Result<String, JsValue> {
    decompose_json(text, owner, lexicon).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn score(
    left: &str,
    left_owner: &str,
    right: &str,
    right_owner: &str,
    lexicon: &str,
) -> Result<String, JsValue> {
    score_json(left, left_owner, right, right_owner, lexicon).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn map(
    practice: &str,
    framework: &str,
    lexicon: &str,
    annotations: &str,
    mode: &str,
    threshold: u32,
    format: &str,
) -> Result<String, JsValue> {
    map_text(
        practice,
        framework,
        lexicon,
        annotations,
        mode,
        threshold,
        format,
    )
    .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn bundled_practice() -> String {
    bundled::SCRUM_CONCEPTS.to_string()
}

#[wasm_bindgen]
pub fn bundled_framework() -> String {
    bundled::ESSENCE_CONCEPTS.to_string()
}

#[wasm_bindgen]
pub fn bundled_lexicon() -> String {
    bundled::TUNED_LEXICON.to_string()
}

#[wasm_bindgen]
pub fn bundled_annotations() -> String {
    bundled::TABLE1_ANNOTATIONS.to_string()
}
