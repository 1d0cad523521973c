//! Tokenizer, stopwords and the suffix stemmer.

/// Articles, prepositions, conjunctions and pronouns, plus "to" and "be".
/// Single letters (list markers such as "(a)") are also treated as stopwords.
const STOPWORDS: &[&str] = &[
    // articles
    "a",
    "an",
    "the",
    // prepositions
    "about",
    "above",
    "across",
    "after",
    "against",
    "along",
    "among",
    "around",
    "as",
    "at",
    "before",
    "behind",
    "below",
    "beneath",
    "beside",
    "between",
    "beyond",
    "by",
    "despite",
    "down",
    "during",
    "except",
    "for",
    "from",
    "in",
    "inside",
    "into",
    "near",
    "of",
    "off",
    "on",
    "onto",
    "out",
    "outside",
    "over",
    "per",
    "since",
    "than",
    "through",
    "throughout",
    "till",
    "to",
    "toward",
    "towards",
    "under",
    "until",
    "up",
    "upon",
    "via",
    "with",
    "within",
    "without",
    // conjunctions
    "and",
    "or",
    "but",
    "nor",
    "so",
    "yet",
    "if",
    "because",
    "while",
    "although",
    "though",
    "whether",
    "unless",
    "whereas",
    "both",
    "either",
    "neither",
    // pronouns
    "i",
    "me",
    "my",
    "mine",
    "we",
    "us",
    "our",
    "ours",
    "you",
    "your",
    "yours",
    "he",
    "him",
    "his",
    "she",
    "her",
    "hers",
    "it",
    "its",
    "they",
    "them",
    "their",
    "theirs",
    "this",
    "that",
    "these",
    "those",
    "what",
    "which",
    "who",
    "whom",
    "whose",
    "itself",
    "themselves",
    // infinitive marker and bare copula
    "be",
];

/// To-be forms, modals and the verbs that occur in the bundled corpora.
/// Inflected forms are recognised through the stemmer (see [`verb_keys`]).
pub(crate) const BUILTIN_VERBS: &[&str] = &[
    "is", "are", "am", "was", "were", "be", "been", "being", "must", "shall", "should", "can",
    "could", "will", "would", "may", "might", "need", "needs", "progress", "continue", "provide",
    "provides", "refer", "refers", "address", "satisfy", "meet", "stay", "evolve", "create", "has",
    "have", "had",
];

pub(crate) fn is_builtin_stopword(token: &str) -> bool {
    let mut chars = token.chars();
    if let (Some(c), None) = (chars.next(), chars.next()) {
        if c.is_alphabetic() {
            return true;
        }
    }
    STOPWORDS.contains(&token)
}

/// Lowercase, drop every non-alphanumeric character, split on whitespace.
pub fn tokenize(text: &str) -> Vec<String> {
    text.split_whitespace()
        .map(|word| {
            word.chars()
                .filter(|c| c.is_alphanumeric())
                .flat_map(char::to_lowercase)
                .collect::<String>()
        })
        .filter(|t| !t.is_empty())
        .collect()
}

/// Split a concept name into lowercase word tokens: `ProductBacklog` ->
/// `[product, backlog]`, `HTTPServer` -> `[http, server]`.
pub fn name_tokens(name: &str) -> Vec<String> {
    let chars: Vec<char> = name.chars().collect();
    let mut words = Vec::new();
    let mut current = String::new();
    for (i, &c) in chars.iter().enumerate() {
        if !c.is_alphanumeric() {
            if !current.is_empty() {
                words.push(std::mem::take(&mut current));
            }
            continue;
        }
        if c.is_uppercase() && !current.is_empty() {
            let prev = chars[i - 1];
            let next_lower = chars.get(i + 1).is_some_and(|n| n.is_lowercase());
            if prev.is_lowercase() || prev.is_numeric() || (prev.is_uppercase() && next_lower) {
                words.push(std::mem::take(&mut current));
            }
        }
        current.extend(c.to_lowercase());
    }
    if !current.is_empty() {
        words.push(current);
    }
    words
}

/// Splits off the first sentence: everything before the first period that is
/// followed by whitespace or ends the text.
pub fn split_first_sentence(text: &str) -> (&str, &str) {
    let bytes = text.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if b == b'.' && bytes.get(i + 1).is_none_or(|n| n.is_ascii_whitespace()) {
            return (&text[..i], &text[i + 1..]);
        }
    }
    (text, "")
}

const SUFFIX_RULES: &[(&str, &str)] =
    &[("ies", "y"), ("ing", ""), ("ed", ""), ("es", ""), ("s", "")];
const MIN_STEMMABLE: usize = 4;
const MIN_STEM: usize = 3;

fn stem_once(token: &str) -> Option<String> {
    let len = token.chars().count();
    if len < MIN_STEMMABLE {
        return None;
    }
    SUFFIX_RULES.iter().find_map(|(suffix, replacement)| {
        let base = token.strip_suffix(suffix)?;
        let stem_len = base.chars().count() + replacement.len();
        (stem_len >= MIN_STEM).then(|| format!("{base}{replacement}"))
    })
}

/// Suffix stripping with the rules -ies→y, -ing, -ed, -es, -s (first rule
/// that leaves at least three characters wins; tokens shorter than four
/// characters are left alone). Rules are re-applied until nothing changes,
/// so `stem(stem(t)) == stem(t)`.
pub fn stem(token: &str) -> String {
    let mut current = token.to_string();
    while let Some(next) = stem_once(&current) {
        current = next;
    }
    current
}

/// Lookup keys a verb entry contributes: the word, its stem, and for words
/// ending in "e" the form without it (so "creating" -> "creat" matches "create").
pub(crate) fn verb_keys(verb: &str) -> Vec<String> {
    let mut keys = vec![verb.to_string(), stem(verb)];
    if let Some(base) = verb.strip_suffix('e') {
        if base.chars().count() >= MIN_STEM {
            keys.push(base.to_string());
        }
    }
    keys
}
