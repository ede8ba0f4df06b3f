//! Pregroup types and type reduction.
//!
//! A simple type is an atomic base with an integer adjoint exponent: `z = 0`
//! is the plain type, `z = +1` its right adjoint, `z = -1` its left adjoint.
//! Two adjacent simples `(b, z) (b, z + 1)` contract to the unit, which covers
//! both `p^l p <= 1` and `p p^r <= 1`. Reduction searches for planar ("cup")
//! contractions only.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleType {
    pub base: String,
    pub z: i32,
}

impl SimpleType {
    pub fn new(base: impl Into<String>, z: i32) -> Self {
        let base = base.into();
        assert!(!base.is_empty(), "simple type base must be nonempty");
        Self { base, z }
    }

    pub fn plain(base: impl Into<String>) -> Self {
        Self::new(base, 0)
    }

    /// Whether `self` followed by `right` reduces to the unit.
    pub fn contracts_with(&self, right: &SimpleType) -> bool {
        self.base == right.base && right.z == self.z + 1
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.base)?;
        let suffix = if self.z > 0 { ".r" } else { ".l" };
        for _ in 0..self.z.unsigned_abs() {
            f.write_str(suffix)?;
        }
        Ok(())
    }
}

/// A product of simple types; the empty product is the unit `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PregroupType {
    pub simples: Vec<SimpleType>,
}

impl PregroupType {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn new(simples: Vec<SimpleType>) -> Self {
        Self { simples }
    }

    pub fn is_unit(&self) -> bool {
        self.simples.is_empty()
    }

    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    pub fn bases(&self) -> impl Iterator<Item = &str> {
        self.simples.iter().map(|s| s.base.as_str())
    }
}

impl fmt::Display for PregroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.simples.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.simples.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for PregroupType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_type(s)
    }
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

/// Parses concrete type syntax such as `"n.r s n.l"`; `"1"` is the unit.
///
/// Each `.r` suffix increments the exponent and each `.l` decrements it,
/// read left to right. Positions in errors are byte offsets into `text`.
pub fn parse_type(text: &str) -> Result<PregroupType> {
    let mut simples = Vec::new();
    let mut saw_token = false;
    let mut offset = 0;
    for token in text.split_whitespace() {
        let start = offset + text[offset..].find(token).expect("token comes from text");
        offset = start + token.len();
        saw_token = true;
        if token == "1" {
            continue;
        }
        let mut parts = token.split('.');
        let base = parts.next().unwrap_or_default();
        if base.is_empty() {
            return Err(syntax(start, "missing base type"));
        }
        if let Some(bad) = base.find(|c: char| !(c.is_alphanumeric() || c == '_')) {
            return Err(syntax(start + bad, format!("invalid character in base '{base}'")));
        }
        let mut z = 0;
        let mut pos = start + base.len();
        for suffix in parts {
            match suffix {
                "r" => z += 1,
                "l" => z -= 1,
                _ => return Err(syntax(pos, format!("expected '.l' or '.r', found '.{suffix}'"))),
            }
            pos += suffix.len() + 1;
        }
        simples.push(SimpleType::new(base, z));
    }
    if !saw_token {
        return Err(syntax(0, "empty type"));
    }
    Ok(PregroupType { simples })
}

/// A planar reduction of a flattened simple-type sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionPattern {
    /// Contracted pairs `(i, j)`, `i < j`, sorted by `i`.
    pub matches: Vec<(usize, usize)>,
    /// Unmatched positions in increasing order; their simples spell the target.
    pub survivors: Vec<usize>,
}

impl ReductionPattern {
    /// The identity reduction of a sequence of `len` simples.
    pub fn identity(len: usize) -> Self {
        Self {
            matches: Vec::new(),
            survivors: (0..len).collect(),
        }
    }

    /// Checks this pattern against a flattened sequence and target.
    pub fn check(&self, flat: &[SimpleType], target: &PregroupType) -> Result<()> {
        self.check_structure(flat)?;
        let spelled: Vec<&SimpleType> = self.survivors.iter().map(|&s| &flat[s]).collect();
        if spelled.len() != target.len() || spelled.iter().zip(&target.simples).any(|(a, b)| *a != b) {
            return Err(Error::PatternMismatch(format!(
                "survivors do not spell the target {target}"
            )));
        }
        Ok(())
    }

    /// Checks everything except which type the survivors spell.
    pub fn check_structure(&self, flat: &[SimpleType]) -> Result<()> {
        let n = flat.len();
        let mut partner: Vec<Option<usize>> = vec![None; n];
        let mut used = vec![false; n];
        let mut mark = |i: usize| -> Result<()> {
            if i >= n {
                return Err(Error::PatternMismatch(format!(
                    "index {i} beyond sequence of length {n}"
                )));
            }
            if std::mem::replace(&mut used[i], true) {
                return Err(Error::PatternMismatch(format!("index {i} used twice")));
            }
            Ok(())
        };
        for &(i, j) in &self.matches {
            if i >= j {
                return Err(Error::PatternMismatch(format!("pair ({i},{j}) not ordered")));
            }
            mark(i)?;
            mark(j)?;
            if !flat[i].contracts_with(&flat[j]) {
                return Err(Error::PatternMismatch(format!(
                    "{} and {} do not contract",
                    flat[i], flat[j]
                )));
            }
            partner[i] = Some(j);
            partner[j] = Some(i);
        }
        for &s in &self.survivors {
            mark(s)?;
        }
        if used.iter().any(|u| !u) {
            return Err(Error::PatternMismatch("some positions are unaccounted for".into()));
        }
        // every position inside a cup must be matched within the cup
        for &(i, j) in &self.matches {
            for (k, p) in partner.iter().enumerate().take(j).skip(i + 1) {
                match p {
                    Some(q) if *q > i && *q < j => {}
                    _ => {
                        return Err(Error::PatternMismatch(format!(
                            "position {k} escapes the cup ({i},{j})"
                        )))
                    }
                }
            }
        }
        if !self.survivors.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::PatternMismatch("survivors out of order".into()));
        }
        Ok(())
    }
}

/// Concatenates word types into one simple-type sequence.
pub fn flatten(sequence: &[PregroupType]) -> Vec<SimpleType> {
    sequence.iter().flat_map(|t| t.simples.iter().cloned()).collect()
}

/// Finds a reduction of `sequence` to `target`, or `None` if there is none.
///
/// Each segment between survivors must contract away completely. Within a
/// segment the leftmost open simple is paired with its nearest viable partner
/// (leftmost-innermost), and survivors are assigned to target simples as early
/// as possible, so the result is deterministic.
pub fn reduce(sequence: &[PregroupType], target: &PregroupType) -> Option<ReductionPattern> {
    let flat = flatten(sequence);
    Reducer::new(&flat).reduce_to(target)
}

pub fn is_grammatical(sequence: &[PregroupType], target: &PregroupType) -> bool {
    reduce(sequence, target).is_some()
}

struct Reducer<'a> {
    flat: &'a [SimpleType],
    empty: HashMap<(usize, usize), Option<usize>>,
}

impl<'a> Reducer<'a> {
    fn new(flat: &'a [SimpleType]) -> Self {
        Self {
            flat,
            empty: HashMap::new(),
        }
    }

    /// If `[i, j)` reduces to the unit, the partner chosen for position `i`
    /// (`Some(None)` for an empty segment); `None` otherwise.
    fn vanishes(&mut self, i: usize, j: usize) -> Option<Option<usize>> {
        if i >= j {
            return Some(None);
        }
        if (j - i) % 2 == 1 {
            return None;
        }
        if let Some(&cached) = self.empty.get(&(i, j)) {
            return cached.map(Some);
        }
        let mut found = None;
        for k in ((i + 1)..j).step_by(2) {
            if self.flat[i].contracts_with(&self.flat[k])
                && self.vanishes(i + 1, k).is_some()
                && self.vanishes(k + 1, j).is_some()
            {
                found = Some(k);
                break;
            }
        }
        self.empty.insert((i, j), found);
        found.map(Some)
    }

    fn collect_matches(&mut self, i: usize, j: usize, out: &mut Vec<(usize, usize)>) {
        if i >= j {
            return;
        }
        let k = self.vanishes(i, j).flatten().expect("segment known to vanish");
        out.push((i, k));
        self.collect_matches(i + 1, k, out);
        self.collect_matches(k + 1, j, out);
    }

    fn reduce_to(&mut self, target: &PregroupType) -> Option<ReductionPattern> {
        let n = self.flat.len();
        let m = target.len();
        // placeable[t][p]: target simples t.. can be placed within [p, n)
        let mut placeable = vec![vec![false; n + 1]; m + 1];
        for (p, slot) in placeable[m].iter_mut().enumerate() {
            *slot = self.vanishes(p, n).is_some();
        }
        for t in (0..m).rev() {
            for p in (0..=n).rev() {
                placeable[t][p] = (p..n).any(|s| {
                    self.flat[s] == target.simples[t] && placeable[t + 1][s + 1] && self.vanishes(p, s).is_some()
                });
            }
        }
        if !placeable[0][0] {
            return None;
        }
        let mut survivors = Vec::with_capacity(m);
        let mut segments = Vec::with_capacity(m + 1);
        let mut p = 0;
        for t in 0..m {
            let s = (p..n)
                .find(|&s| {
                    self.flat[s] == target.simples[t] && placeable[t + 1][s + 1] && self.vanishes(p, s).is_some()
                })
                .expect("placeable");
            segments.push((p, s));
            survivors.push(s);
            p = s + 1;
        }
        segments.push((p, n));
        let mut matches = Vec::new();
        for (a, b) in segments {
            self.collect_matches(a, b, &mut matches);
        }
        matches.sort_unstable();
        Some(ReductionPattern { matches, survivors })
    }
}
