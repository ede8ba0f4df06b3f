//! Lexicon files: a JSON document declaring a space dimension per base type and
//! a typed meaning per word.
//!
//! ```json
//! {
//!   "spaces": { "n": 2, "s": 1 },
//!   "words": [
//!     { "word": "John", "type": "n", "meaning": { "pure_mixture": [ { "weight": 1.0, "vector": [1, 0] } ] } },
//!     { "word": "kicks", "type": "n.r s n.l", "meaning": { "matrix": [[1, 0, 0, 0], ...] } },
//!     { "word": "who", "type": "n.r n s.l n", "frobenius": "subject" }
//!   ]
//! }
//! ```
//!
//! Words are matched case-insensitively. A word marked `"frobenius": "subject"`
//! is a subject relative pronoun; its meaning defaults to the doubled copying
//! tensor when none is given.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use densem_core::psd::{SymMatrix, Tolerances};
use densem_core::semantics::{
    subject_pronoun, word_meaning, DensityTensor, Meaning, MixtureComponent, SpaceAssignment, WordEntry,
};
use densem_core::{parse_type, Error as CoreError, PregroupType};
use serde::Deserialize;

use crate::error::{CliError, Result};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLexicon {
    spaces: BTreeMap<String, i64>,
    words: Vec<RawWord>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWord {
    word: String,
    #[serde(rename = "type")]
    ty: String,
    #[serde(default)]
    meaning: Option<RawMeaning>,
    #[serde(default)]
    frobenius: Option<FrobeniusRole>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum RawMeaning {
    PureMixture(Vec<RawComponent>),
    Matrix(Vec<Vec<f64>>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent {
    weight: f64,
    vector: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FrobeniusRole {
    Subject,
}

#[derive(Debug, Clone)]
pub struct LexiconWord {
    pub entry: WordEntry,
    pub meaning: DensityTensor,
    pub frobenius: Option<FrobeniusRole>,
}

#[derive(Debug, Clone)]
pub struct Lexicon {
    spaces: SpaceAssignment,
    words: BTreeMap<String, LexiconWord>,
}

pub fn load_lexicon(path: &Path) -> Result<Lexicon> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Lexicon::from_json(&text)
}

/// Splits a sentence into lowercase whitespace-separated tokens.
pub fn tokenize(sentence: &str) -> Vec<String> {
    sentence.split_whitespace().map(str::to_lowercase).collect()
}

/// The shape `b.r b c.l b` of a subject relative pronoun, returning `(b, c)`.
fn pronoun_bases(ty: &PregroupType) -> Option<(&str, &str)> {
    match ty.simples.as_slice() {
        [a, b, c, d] if a.z == 1 && b.z == 0 && c.z == -1 && d.z == 0 && a.base == b.base && b.base == d.base => {
            Some((&b.base, &c.base))
        }
        _ => None,
    }
}

impl Lexicon {
    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let raw: RawLexicon = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            CliError::schema(path, e.into_inner())
        })?;
        Self::from_raw(raw)
    }

    fn from_raw(raw: RawLexicon) -> Result<Self> {
        let mut spaces = SpaceAssignment::new();
        for (base, dim) in &raw.spaces {
            if *dim < 1 {
                return Err(CliError::schema(
                    format!("spaces.{base}"),
                    "dimension must be at least 1",
                ));
            }
            spaces.insert(base.clone(), *dim as usize);
        }
        let tol = Tolerances::default();
        let mut words = BTreeMap::new();
        for (i, w) in raw.words.into_iter().enumerate() {
            let at = |field: &str| format!("words[{i}].{field}");
            let key = w.word.to_lowercase();
            if key.is_empty() || key.chars().any(char::is_whitespace) {
                return Err(CliError::schema(at("word"), "word must be a single nonempty token"));
            }
            if words.contains_key(&key) {
                return Err(CliError::DuplicateWord(w.word));
            }
            let ty = parse_type(&w.ty).map_err(|e| CliError::schema(at("type"), e))?;
            if let Some(missing) = ty.bases().find(|b| spaces.get(b).is_none()) {
                return Err(CliError::schema(
                    at("type"),
                    format!("base '{missing}' has no declared space"),
                ));
            }
            let meaning = match (w.meaning, w.frobenius) {
                (Some(RawMeaning::PureMixture(parts)), _) => Meaning::PureMixture(
                    parts
                        .into_iter()
                        .map(|p| MixtureComponent {
                            weight: p.weight,
                            vector: p.vector,
                        })
                        .collect(),
                ),
                (Some(RawMeaning::Matrix(rows)), _) => Meaning::Explicit(
                    SymMatrix::from_rows(&rows).map_err(|e| CliError::schema(at("meaning.matrix"), e))?,
                ),
                (None, Some(FrobeniusRole::Subject)) => {
                    let (noun, sentence) = pronoun_bases(&ty)
                        .ok_or_else(|| CliError::schema(at("type"), "a subject pronoun must have type b.r b c.l b"))?;
                    let pronoun = subject_pronoun(
                        spaces.get(noun).expect("checked above"),
                        spaces.get(sentence).expect("checked above"),
                    )?;
                    Meaning::Explicit(pronoun.into_matrix())
                }
                (None, None) => return Err(CliError::schema(at("meaning"), "missing field `meaning`")),
            };
            if w.frobenius.is_some() && pronoun_bases(&ty).is_none() {
                return Err(CliError::schema(
                    at("type"),
                    "a subject pronoun must have type b.r b c.l b",
                ));
            }
            let entry = WordEntry {
                word: w.word,
                ty,
                meaning,
            };
            let tensor = word_meaning(&entry, &spaces, &tol).map_err(|e| match e {
                CoreError::UnknownBase(_) => CliError::schema(at("type"), e),
                other => CliError::schema(at("meaning"), other),
            })?;
            words.insert(
                key,
                LexiconWord {
                    entry,
                    meaning: tensor,
                    frobenius: w.frobenius,
                },
            );
        }
        Ok(Self { spaces, words })
    }

    pub fn spaces(&self) -> &SpaceAssignment {
        &self.spaces
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn get(&self, word: &str) -> Option<&LexiconWord> {
        self.words.get(&word.to_lowercase())
    }

    pub fn lookup(&self, word: &str) -> Result<&LexiconWord> {
        self.get(word).ok_or_else(|| CliError::UnknownWord(word.to_string()))
    }

    /// Looks up every token of `sentence`.
    pub fn lookup_sentence(&self, sentence: &str) -> Result<Vec<&LexiconWord>> {
        let tokens = tokenize(sentence);
        if tokens.is_empty() {
            return Err(CliError::Usage("empty sentence".into()));
        }
        tokens.iter().map(|t| self.lookup(t)).collect()
    }

    pub fn words(&self) -> impl Iterator<Item = &LexiconWord> {
        self.words.values()
    }
}
