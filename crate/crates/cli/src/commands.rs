use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use densem_core::entailment::{self, EntailmentResult, NormalizationStrategy};
use densem_core::format::sig9;
use densem_core::psd::{self, SymMatrix, Tolerances};
use densem_core::semantics::{evaluate, relative_clause, DensityTensor, IotaMode};
use densem_core::{parse_type, reduce, PregroupType, ReductionPattern, SimpleType};
use tempfile::NamedTempFile;

use crate::error::{CliError, Result};
use crate::lexicon::{tokenize, FrobeniusRole, Lexicon, LexiconWord};

fn parse_target(target: &str) -> Result<PregroupType> {
    parse_type(target).map_err(|e| CliError::Usage(format!("bad target type '{target}': {e}")))
}

fn ungrammatical(sentence: &str, target: &PregroupType) -> CliError {
    CliError::Ungrammatical {
        sentence: sentence.to_string(),
        target: target.to_string(),
    }
}

#[derive(Debug, Clone)]
pub struct ParseReport {
    pub tokens: Vec<String>,
    pub types: Vec<PregroupType>,
    pub target: PregroupType,
    pub pattern: Option<ReductionPattern>,
}

impl ParseReport {
    pub fn is_grammatical(&self) -> bool {
        self.pattern.is_some()
    }
}

impl fmt::Display for ParseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sentence: {}", self.tokens.join(" "))?;
        let types: Vec<String> = self.types.iter().map(ToString::to_string).collect();
        writeln!(f, "types: {}", types.join(" | "))?;
        writeln!(f, "target: {}", self.target)?;
        match &self.pattern {
            None => writeln!(f, "grammatical: no"),
            Some(p) => {
                writeln!(f, "grammatical: yes")?;
                let pairs: Vec<String> = p.matches.iter().map(|(i, j)| format!("({i},{j})")).collect();
                writeln!(f, "matches: {}", pairs.join(" "))?;
                let survivors: Vec<String> = p.survivors.iter().map(ToString::to_string).collect();
                writeln!(f, "survivors: [{}]", survivors.join(", "))
            }
        }
    }
}

pub fn cmd_parse(lex: &Lexicon, sentence: &str, target: &str) -> Result<ParseReport> {
    let target = parse_target(target)?;
    let words = lex.lookup_sentence(sentence)?;
    let types: Vec<PregroupType> = words.iter().map(|w| w.entry.ty.clone()).collect();
    let pattern = reduce(&types, &target);
    Ok(ParseReport {
        tokens: tokenize(sentence),
        types,
        target,
        pattern,
    })
}

#[derive(Debug, Clone)]
pub struct ComposeOptions {
    pub target: String,
    pub frobenius_pronouns: bool,
    pub normalize: NormalizationStrategy,
}

impl Default for ComposeOptions {
    fn default() -> Self {
        Self {
            target: "s".into(),
            frobenius_pronouns: false,
            normalize: NormalizationStrategy::None,
        }
    }
}

/// Replaces every `subj who verb obj` by the relative-clause meaning of type `subj`.
fn collapse_relative_clauses(words: &[&LexiconWord]) -> Result<(Vec<DensityTensor>, Vec<PregroupType>)> {
    let mut tensors: Vec<DensityTensor> = Vec::new();
    let mut types: Vec<PregroupType> = Vec::new();
    let mut i = 0;
    while i < words.len() {
        let w = words[i];
        if w.frobenius != Some(FrobeniusRole::Subject) {
            tensors.push(w.meaning.clone());
            types.push(w.entry.ty.clone());
            i += 1;
            continue;
        }
        let simples = &w.entry.ty.simples;
        let noun = PregroupType::new(vec![simples[1].clone()]);
        let misplaced = || {
            CliError::Usage(format!(
                "relative pronoun '{}' must appear as '<{noun}> {} <{}.r {} x.l> <x>'",
                w.entry.word, w.entry.word, noun, simples[2].base
            ))
        };
        let (Some(verb), Some(obj)) = (words.get(i + 1), words.get(i + 2)) else {
            return Err(misplaced());
        };
        let fits = match (verb.entry.ty.simples.as_slice(), obj.entry.ty.simples.as_slice()) {
            ([vs, vc, vo], [o]) => {
                *vs == simples[0]
                    && *vc == SimpleType::new(simples[2].base.clone(), 0)
                    && vo.z == -1
                    && o.z == 0
                    && vo.base == o.base
            }
            _ => false,
        };
        if types.last() != Some(&noun) || !fits {
            return Err(misplaced());
        }
        let subj = tensors.pop().expect("type present");
        tensors.push(relative_clause(&subj, &verb.meaning, &obj.meaning, IotaMode::EntrySum)?);
        i += 3;
    }
    Ok((tensors, types))
}

/// Unnormalized meaning of `sentence` together with its words.
pub fn sentence_meaning<'a>(
    lex: &'a Lexicon,
    sentence: &str,
    opts: &ComposeOptions,
) -> Result<(Vec<&'a LexiconWord>, DensityTensor)> {
    let target = parse_target(&opts.target)?;
    let words = lex.lookup_sentence(sentence)?;
    let types: Vec<PregroupType> = words.iter().map(|w| w.entry.ty.clone()).collect();
    let pattern = reduce(&types, &target).ok_or_else(|| ungrammatical(sentence, &target))?;
    let meaning = if opts.frobenius_pronouns && words.iter().any(|w| w.frobenius.is_some()) {
        let (tensors, types) = collapse_relative_clauses(&words)?;
        let pattern = reduce(&types, &target).ok_or_else(|| ungrammatical(sentence, &target))?;
        evaluate(&tensors, &types, &pattern, lex.spaces())?
    } else {
        let tensors: Vec<DensityTensor> = words.iter().map(|w| w.meaning.clone()).collect();
        evaluate(&tensors, &types, &pattern, lex.spaces())?
    };
    Ok((words, meaning))
}

#[derive(Debug, Clone)]
pub struct ComposeReport {
    pub spaces: Vec<usize>,
    pub matrix: SymMatrix,
    pub trace: f64,
    pub max_eigenvalue: f64,
}

fn write_matrix(f: &mut fmt::Formatter<'_>, m: &SymMatrix) -> fmt::Result {
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|v| sig9(*v)).collect();
        writeln!(f, "  {}", cells.join(" "))?;
    }
    Ok(())
}

impl fmt::Display for ComposeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spaces: Vec<String> = self.spaces.iter().map(ToString::to_string).collect();
        writeln!(f, "spaces: [{}]", spaces.join(", "))?;
        writeln!(f, "matrix:")?;
        write_matrix(f, &self.matrix)?;
        writeln!(f, "trace: {}", sig9(self.trace))?;
        writeln!(f, "max_eigenvalue: {}", sig9(self.max_eigenvalue))
    }
}

pub fn cmd_compose(lex: &Lexicon, sentence: &str, opts: &ComposeOptions) -> Result<ComposeReport> {
    let (_, meaning) = sentence_meaning(lex, sentence, opts)?;
    let tol = Tolerances::default();
    let matrix = entailment::normalize(meaning.matrix(), opts.normalize, &tol)?;
    Ok(ComposeReport {
        spaces: meaning.spaces().to_vec(),
        trace: matrix.trace(),
        max_eigenvalue: psd::max_eigenvalue(&matrix)?,
        matrix,
    })
}

/// Product of word-level strengths for two sentences of the same shape.
#[derive(Debug, Clone, PartialEq)]
pub enum LowerBound {
    Product(f64),
    /// The word pair at `position` has no entailment strength.
    NoWordStrength {
        position: usize,
    },
    StructureMismatch(String),
}

#[derive(Debug, Clone)]
pub struct EntailReport {
    pub result: EntailmentResult,
    /// Computed from unnormalized word meanings.
    pub lower_bound: LowerBound,
    /// Whether the unnormalized sentences are hyponyms at the lower bound.
    pub holds_at_lower_bound: Option<bool>,
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "none".to_string(), sig9)
}

impl fmt::Display for EntailReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.result;
        writeln!(f, "supports_contained: {}", r.supports_contained)?;
        writeln!(f, "k_max: {}", opt(r.k_max))?;
        writeln!(f, "raw_k: {}", opt(r.raw_k))?;
        writeln!(f, "witness_eigenvalue: {}", opt(r.witness_eigenvalue))?;
        match &self.lower_bound {
            LowerBound::Product(k) => writeln!(f, "lower_bound: {}", sig9(*k))?,
            LowerBound::NoWordStrength { position } => {
                writeln!(f, "lower_bound: none (word {position} has no entailment strength)")?
            }
            LowerBound::StructureMismatch(why) => writeln!(f, "lower_bound: none (structure mismatch: {why})")?,
        }
        if let Some(h) = self.holds_at_lower_bound {
            writeln!(f, "hyponym_at_lower_bound: {h}")?;
        }
        Ok(())
    }
}

fn word_lower_bound(a: &[&LexiconWord], b: &[&LexiconWord], tol: &Tolerances) -> Result<LowerBound> {
    if a.len() != b.len() {
        return Ok(LowerBound::StructureMismatch(format!(
            "{} words vs {} words",
            a.len(),
            b.len()
        )));
    }
    let mut product = 1.0;
    for (i, (wa, wb)) in a.iter().zip(b).enumerate() {
        if wa.entry.ty != wb.entry.ty {
            return Ok(LowerBound::StructureMismatch(format!(
                "word {i} has type {} vs {}",
                wa.entry.ty, wb.entry.ty
            )));
        }
        match entailment::k_max(wa.meaning.matrix(), wb.meaning.matrix(), tol)?.k_max {
            Some(k) => product *= k,
            None => return Ok(LowerBound::NoWordStrength { position: i }),
        }
    }
    Ok(LowerBound::Product(product))
}

/// Strength with which `sentence_a` entails `sentence_b`.
pub fn cmd_entail(lex: &Lexicon, sentence_a: &str, sentence_b: &str, opts: &ComposeOptions) -> Result<EntailReport> {
    let tol = Tolerances::default();
    let (words_a, a) = sentence_meaning(lex, sentence_a, opts)?;
    let (words_b, b) = sentence_meaning(lex, sentence_b, opts)?;
    if a.spaces() != b.spaces() {
        return Err(CliError::Usage(format!(
            "sentences live on different spaces {:?} and {:?}",
            a.spaces(),
            b.spaces()
        )));
    }
    let na = entailment::normalize(a.matrix(), opts.normalize, &tol)?;
    let nb = entailment::normalize(b.matrix(), opts.normalize, &tol)?;
    let result = entailment::k_max(&na, &nb, &tol)?;
    let lower_bound = word_lower_bound(&words_a, &words_b, &tol)?;
    let holds_at_lower_bound = match lower_bound {
        LowerBound::Product(k) if k > 0.0 => Some(entailment::is_k_hyponym(a.matrix(), b.matrix(), k, &tol)?),
        _ => None,
    };
    Ok(EntailReport {
        result,
        lower_bound,
        holds_at_lower_bound,
    })
}

#[derive(Debug, Clone)]
pub struct DiscOptions {
    pub target_x: f64,
    pub target_z: f64,
    pub resolution: usize,
    pub normalize: NormalizationStrategy,
    pub out: PathBuf,
}

#[derive(Debug, Clone)]
pub struct DiscReport {
    pub rows: usize,
    pub path: PathBuf,
}

impl fmt::Display for DiscReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rows: {}", self.rows)?;
        writeln!(f, "written: {}", self.path.display())
    }
}

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Computes the disc grid and replaces `opts.out` with it in one rename.
pub fn cmd_disc(opts: &DiscOptions) -> Result<DiscReport> {
    let tol = Tolerances::default();
    let target = entailment::from_bloch(opts.target_x, opts.target_z)?;
    let points = entailment::disc_grid(&target, opts.resolution, opts.normalize, &tol)?;
    let dir = match opts.out.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut file = NamedTempFile::new_in(dir).map_err(io_error(dir))?;
    entailment::write_disc_csv(&points, &mut file).map_err(io_error(&opts.out))?;
    file.flush().map_err(io_error(&opts.out))?;
    file.persist(&opts.out).map_err(|e| io_error(&opts.out)(e.error))?;
    Ok(DiscReport {
        rows: points.len(),
        path: opts.out.clone(),
    })
}
