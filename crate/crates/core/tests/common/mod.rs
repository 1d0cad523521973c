#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use essencemap::lta::LtaLevel;
use essencemap::{
    AttrRef, AttributeStatement, CandidatePair, Concept, ConceptRef, ObjectInstance,
    SemanticContext,
};

pub const NOUNS: &[&str] = &[
    "backlog",
    "requirement",
    "team",
    "owner",
    "stakeholder",
    "value",
    "product",
    "sprint",
    "goal",
    "increment",
    "item",
    "opportunity",
    "system",
    "work",
    "state",
    "definition",
];
pub const VERBS: &[&str] = &[
    "must", "provide", "address", "satisfy", "meet", "evolve", "create", "need", "continue", "is",
    "are",
];
pub const FILLERS: &[&str] = &["the", "of", "to", "and", "a", "for", "all", "every", "with"];

/// A short statement: optional subject, a verb, an object phrase.
pub fn random_statement<R: Rng>(rng: &mut R) -> String {
    let mut words = Vec::new();
    for _ in 0..rng.gen_range(0..=2) {
        words.push(*NOUNS.choose(rng).unwrap());
    }
    if rng.gen_bool(0.9) {
        words.push(*VERBS.choose(rng).unwrap());
    }
    for _ in 0..rng.gen_range(1..=4) {
        let pool = if rng.gen_bool(0.7) { NOUNS } else { FILLERS };
        words.push(*pool.choose(rng).unwrap());
    }
    words.join(" ")
}

pub fn random_concept<R: Rng>(rng: &mut R, name: &str, max_attrs: usize) -> Concept {
    let mut c = Concept::new(name).unwrap();
    for i in 1..=rng.gen_range(1..=max_attrs) {
        c.add_attribute(AttributeStatement::new(format!("s{i}"), random_statement(rng)).unwrap())
            .unwrap();
    }
    c
}

const TEXT_CHARS: &[char] = &[
    'a', 'b', 'q', 'z', 'E', 'M', '0', '7', ' ', ' ', '#', ':', '/', '.', ',', '(', ')', '-', '=',
    '\'', '’', 'é',
];

/// Non-blank single-line text without surrounding whitespace.
pub fn random_text<R: Rng>(rng: &mut R) -> String {
    loop {
        let len = rng.gen_range(1..24);
        let s: String = (0..len).map(|_| *TEXT_CHARS.choose(rng).unwrap()).collect();
        let t = s.trim();
        if !t.is_empty() {
            return t.to_string();
        }
    }
}

fn random_name<R: Rng>(rng: &mut R, first: &[u8]) -> String {
    const REST: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-";
    let mut s = String::new();
    s.push(*first.choose(rng).unwrap() as char);
    for _ in 0..rng.gen_range(0..8) {
        s.push(*REST.choose(rng).unwrap() as char);
    }
    s
}

pub fn random_context<R: Rng>(rng: &mut R) -> SemanticContext {
    let mut ctx = SemanticContext::new(random_name(rng, b"ABCDEFGHIJKLMNOPQRSTUVWXYZ")).unwrap();
    let mut names = Vec::new();
    for _ in 0..rng.gen_range(0..5) {
        let name = random_name(rng, b"ABCDEFGHIJKLMNOPQRSTUVWXYZabc");
        if names.contains(&name) {
            continue;
        }
        names.push(name.clone());
        let mut c = Concept::new(&name).unwrap();
        for i in 1..=rng.gen_range(0..5) {
            c.add_attribute(AttributeStatement::new(format!("a{i}"), random_text(rng)).unwrap())
                .unwrap();
        }
        for i in 1..=rng.gen_range(0..3) {
            c.add_object(ObjectInstance::new(format!("o{i}x"), random_text(rng)).unwrap())
                .unwrap();
        }
        for _ in 0..rng.gen_range(0..3) {
            let r = ConceptRef::new("Other", random_name(rng, b"XYZ"));
            if rng.gen_bool(0.5) {
                c.add_input_relation(r);
            } else {
                c.add_output_relation(r);
            }
        }
        ctx.add_concept(c).unwrap();
    }
    ctx
}

/// Random candidate list over `nl` x `nr` attributes with levels 1..=3.
pub fn random_candidates<R: Rng>(rng: &mut R, nl: usize, nr: usize) -> Vec<CandidatePair> {
    let left = ConceptRef::new("L", "Left");
    let right = ConceptRef::new("R", "Right");
    let density = rng.gen_range(0.1..0.9);
    let mut out = Vec::new();
    for i in 0..nl {
        for j in 0..nr {
            if rng.gen_bool(density) {
                out.push(CandidatePair::new(
                    left.attr(format!("x{i}")),
                    right.attr(format!("y{j}")),
                    LtaLevel::new(rng.gen_range(1..=3)).unwrap(),
                ));
            }
        }
    }
    out.shuffle(rng);
    out
}

pub fn pair_list(pairs: &[CandidatePair]) -> Vec<(AttrRef, AttrRef)> {
    pairs
        .iter()
        .map(|p| (p.left.clone(), p.right.clone()))
        .collect()
}
