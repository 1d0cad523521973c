use std::collections::{BTreeSet, HashMap, HashSet};

use super::text::{self, stem};
use crate::error::{Error, Result};

/// Synonym groups plus stopword and verb additions on top of the built-in
/// lists. Each synonym group canonicalizes to its first member.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    groups: Vec<Vec<String>>,
    extra_stopwords: BTreeSet<String>,
    extra_verbs: BTreeSet<String>,
    // raw member and stemmed member -> group index
    synonym_keys: HashMap<String, usize>,
    verb_keys: HashSet<String>,
}

fn normalize_token(raw: &str) -> Result<String> {
    let token = raw.trim().to_lowercase();
    if token.is_empty() {
        return Err(Error::InvalidIdentifier {
            kind: "lexicon token",
            value: raw.to_string(),
            reason: "must not be empty",
        });
    }
    if token.chars().any(|c| c.is_whitespace() || c == ',') {
        return Err(Error::InvalidIdentifier {
            kind: "lexicon token",
            value: raw.to_string(),
            reason: "must be a single word",
        });
    }
    Ok(token)
}

impl Lexicon {
    /// Built-in stopwords and verbs only.
    pub fn new() -> Self {
        let mut lex = Self::default();
        for v in text::BUILTIN_VERBS {
            lex.verb_keys.extend(text::verb_keys(v));
        }
        lex
    }

    pub fn synonym_groups(&self) -> &[Vec<String>] {
        &self.groups
    }

    pub fn extra_stopwords(&self) -> &BTreeSet<String> {
        &self.extra_stopwords
    }

    pub fn extra_verbs(&self) -> &BTreeSet<String> {
        &self.extra_verbs
    }

    pub fn add_synonym_group<I, S>(&mut self, tokens: I) -> Result<()>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut group = Vec::new();
        for raw in tokens {
            let token = normalize_token(raw.as_ref())?;
            if group.contains(&token) {
                return Err(Error::Duplicate {
                    kind: "synonym token",
                    id: token,
                });
            }
            if self.is_stopword(&token) {
                return Err(Error::InvalidIdentifier {
                    kind: "synonym token",
                    value: token,
                    reason: "is a stopword",
                });
            }
            group.push(token);
        }
        if group.len() < 2 {
            return Err(Error::InvalidIdentifier {
                kind: "synonym group",
                value: group.join(", "),
                reason: "needs at least two tokens",
            });
        }

        let index = self.groups.len();
        let mut keys = HashMap::new();
        for token in &group {
            for key in [token.clone(), stem(token)] {
                if self.synonym_keys.contains_key(&key) {
                    return Err(Error::InvalidIdentifier {
                        kind: "synonym token",
                        value: token.clone(),
                        reason: "already belongs to another synonym group",
                    });
                }
                keys.insert(key, index);
            }
        }
        self.synonym_keys.extend(keys);
        self.groups.push(group);
        Ok(())
    }

    pub fn add_stopword(&mut self, raw: &str) -> Result<()> {
        let token = normalize_token(raw)?;
        if self.synonym_keys.contains_key(&token) {
            return Err(Error::InvalidIdentifier {
                kind: "stopword",
                value: token,
                reason: "already belongs to a synonym group",
            });
        }
        self.extra_stopwords.insert(token);
        Ok(())
    }

    pub fn add_verb(&mut self, raw: &str) -> Result<()> {
        let token = normalize_token(raw)?;
        self.verb_keys.extend(text::verb_keys(&token));
        self.extra_verbs.insert(token);
        Ok(())
    }

    pub fn is_stopword(&self, token: &str) -> bool {
        text::is_builtin_stopword(token) || self.extra_stopwords.contains(token)
    }

    pub fn is_verb(&self, token: &str) -> bool {
        self.verb_keys.contains(token) || self.verb_keys.contains(&stem(token))
    }

    /// Canonical form of a single token: its synonym group head if the raw
    /// token or its stem belongs to a group, otherwise the stem.
    pub fn canonical(&self, token: &str) -> String {
        if let Some(&g) = self.synonym_keys.get(token) {
            return self.groups[g][0].clone();
        }
        let stemmed = stem(token);
        match self.synonym_keys.get(&stemmed) {
            Some(&g) => self.groups[g][0].clone(),
            None => stemmed,
        }
    }
}
