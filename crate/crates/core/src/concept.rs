//! Concept Algebra data model: semantic contexts holding concepts, each
//! concept carrying attribute statements (its intension), object instances
//! (its extension) and references to related external concepts.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Lowercase letter followed by lowercase letters or digits.
pub(crate) fn is_local_id(id: &str) -> bool {
    let mut chars = id.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
}

fn check_context_id(id: &str) -> Result<()> {
    let reason = if id.is_empty() {
        "must not be empty"
    } else if id.chars().any(char::is_whitespace) {
        "must not contain whitespace"
    } else if id.contains('/') {
        "must not contain '/'"
    } else {
        return Ok(());
    };
    Err(Error::InvalidIdentifier {
        kind: "context id",
        value: id.to_string(),
        reason,
    })
}

// Names also appear inside `ctx/Name.attr` references, so '.' is excluded.
fn check_concept_name(name: &str) -> Result<()> {
    let reason = if name.is_empty() {
        "must not be empty"
    } else if name.chars().any(char::is_whitespace) {
        "must not contain whitespace"
    } else if name.contains('/') || name.contains('.') {
        "must not contain '/' or '.'"
    } else {
        return Ok(());
    };
    Err(Error::InvalidIdentifier {
        kind: "concept name",
        value: name.to_string(),
        reason,
    })
}

fn check_local_id(kind: &'static str, id: &str) -> Result<()> {
    if is_local_id(id) {
        Ok(())
    } else {
        Err(Error::InvalidIdentifier {
            kind,
            value: id.to_string(),
            reason: "expected a lowercase letter followed by lowercase letters or digits",
        })
    }
}

/// One attribute of a concept, stated as a short natural-language sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttributeStatement {
    id: String,
    text: String,
}

impl AttributeStatement {
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> Result<Self> {
        let id = id.into();
        let text = text.into();
        check_local_id("attribute id", &id)?;
        if text.trim().is_empty() {
            return Err(Error::EmptyText {
                kind: "attribute",
                id,
            });
        }
        Ok(Self { id, text })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn text(&self) -> &str {
        &self.text
    }
}

/// An instance denoted by a concept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectInstance {
    id: String,
    text: String,
}

impl ObjectInstance {
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> Result<Self> {
        let id = id.into();
        let text = text.into();
        check_local_id("object id", &id)?;
        if text.trim().is_empty() {
            return Err(Error::EmptyText { kind: "object", id });
        }
        Ok(Self { id, text })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    /// Label used for object-set equality: lowercased, whitespace collapsed.
    pub fn normalized_label(&self) -> String {
        self.text
            .split_whitespace()
            .map(str::to_lowercase)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// `context/ConceptName`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ConceptRef {
    pub context: String,
    pub concept: String,
}

impl ConceptRef {
    pub fn new(context: impl Into<String>, concept: impl Into<String>) -> Self {
        Self {
            context: context.into(),
            concept: concept.into(),
        }
    }

    pub fn attr(&self, id: impl Into<String>) -> AttrRef {
        AttrRef {
            concept: self.clone(),
            attr: id.into(),
        }
    }
}

impl fmt::Display for ConceptRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.context, self.concept)
    }
}

impl FromStr for ConceptRef {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let malformed = || Error::MalformedReference(s.to_string());
        let (context, concept) = s.split_once('/').ok_or_else(malformed)?;
        check_context_id(context).map_err(|_| malformed())?;
        check_concept_name(concept).map_err(|_| malformed())?;
        Ok(Self::new(context, concept))
    }
}

/// `context/ConceptName.attrId`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AttrRef {
    pub concept: ConceptRef,
    pub attr: String,
}

impl fmt::Display for AttrRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.concept, self.attr)
    }
}

impl FromStr for AttrRef {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let malformed = || Error::MalformedReference(s.to_string());
        let (concept, attr) = s.rsplit_once('.').ok_or_else(malformed)?;
        if !is_local_id(attr) {
            return Err(malformed());
        }
        Ok(concept.parse::<ConceptRef>()?.attr(attr))
    }
}

/// A named cognitive unit: attributes (intension), objects (extension)
/// and input/output relations to other concepts.
///
/// The internal relations are the full cross product of objects and
/// attributes, so they are derived on demand rather than stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Concept {
    name: String,
    attributes: Vec<AttributeStatement>,
    objects: Vec<ObjectInstance>,
    input_relations: Vec<ConceptRef>,
    output_relations: Vec<ConceptRef>,
}

impl Concept {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        check_concept_name(&name)?;
        Ok(Self {
            name,
            attributes: Vec::new(),
            objects: Vec::new(),
            input_relations: Vec::new(),
            output_relations: Vec::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn attributes(&self) -> &[AttributeStatement] {
        &self.attributes
    }

    pub fn attribute(&self, id: &str) -> Option<&AttributeStatement> {
        self.attributes.iter().find(|a| a.id == id)
    }

    pub fn objects(&self) -> &[ObjectInstance] {
        &self.objects
    }

    pub fn input_relations(&self) -> &[ConceptRef] {
        &self.input_relations
    }

    pub fn output_relations(&self) -> &[ConceptRef] {
        &self.output_relations
    }

    pub fn add_attribute(&mut self, attr: AttributeStatement) -> Result<()> {
        if self.attribute(&attr.id).is_some() {
            return Err(Error::Duplicate {
                kind: "attribute",
                id: attr.id,
            });
        }
        self.attributes.push(attr);
        Ok(())
    }

    pub fn add_object(&mut self, obj: ObjectInstance) -> Result<()> {
        if self.objects.iter().any(|o| o.id == obj.id) {
            return Err(Error::Duplicate {
                kind: "object",
                id: obj.id,
            });
        }
        self.objects.push(obj);
        Ok(())
    }

    pub fn add_input_relation(&mut self, r: ConceptRef) {
        self.input_relations.push(r);
    }

    pub fn add_output_relation(&mut self, r: ConceptRef) {
        self.output_relations.push(r);
    }

    /// Internal relations: every (object, attribute) pair.
    pub fn internal_relations(
        &self,
    ) -> impl Iterator<Item = (&ObjectInstance, &AttributeStatement)> + '_ {
        self.objects
            .iter()
            .flat_map(move |o| self.attributes.iter().map(move |a| (o, a)))
    }
}

/// A knowledge domain: a named set of concepts, unique by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemanticContext {
    id: String,
    concepts: Vec<Concept>,
}

impl SemanticContext {
    pub fn new(id: impl Into<String>) -> Result<Self> {
        let id = id.into();
        check_context_id(&id)?;
        Ok(Self {
            id,
            concepts: Vec::new(),
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn concepts(&self) -> &[Concept] {
        &self.concepts
    }

    pub fn concept(&self, name: &str) -> Option<&Concept> {
        self.concepts.iter().find(|c| c.name == name)
    }

    pub fn add_concept(&mut self, concept: Concept) -> Result<()> {
        if self.concept(&concept.name).is_some() {
            return Err(Error::Duplicate {
                kind: "concept",
                id: concept.name,
            });
        }
        self.concepts.push(concept);
        Ok(())
    }

    pub fn scoped(&self, name: &str) -> Option<ScopedConcept<'_>> {
        self.concept(name).map(|c| ScopedConcept::new(&self.id, c))
    }

    pub fn scoped_concepts(&self) -> impl Iterator<Item = ScopedConcept<'_>> + '_ {
        self.concepts
            .iter()
            .map(|c| ScopedConcept::new(&self.id, c))
    }

    /// All objects of the context (union over member concepts).
    pub fn objects(&self) -> impl Iterator<Item = &ObjectInstance> + '_ {
        self.concepts.iter().flat_map(|c| c.objects.iter())
    }

    /// All attributes of the context (union over member concepts).
    pub fn attributes(&self) -> impl Iterator<Item = &AttributeStatement> + '_ {
        self.concepts.iter().flat_map(|c| c.attributes.iter())
    }

    pub fn attribute_count(&self) -> usize {
        self.concepts.iter().map(|c| c.attributes.len()).sum()
    }
}

/// A concept together with the id of the context that owns it.
#[derive(Debug, Clone, Copy)]
pub struct ScopedConcept<'a> {
    pub context: &'a str,
    pub concept: &'a Concept,
}

impl<'a> ScopedConcept<'a> {
    pub fn new(context: &'a str, concept: &'a Concept) -> Self {
        Self { context, concept }
    }

    pub fn reference(&self) -> ConceptRef {
        ConceptRef::new(self.context, self.concept.name())
    }

    pub fn attr_ref(&self, attr: &AttributeStatement) -> AttrRef {
        self.reference().attr(attr.id())
    }

    /// Ordering key used to pick a canonical orientation for a concept pair.
    pub(crate) fn orientation_key(&self) -> (&'a str, &'a str) {
        (self.context, self.concept.name())
    }

    pub fn attribute_count(&self) -> usize {
        self.concept.attributes().len()
    }
}
