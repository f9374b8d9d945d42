//! The catalog of exceptional rank-2 groups G4..G22: group presentations in
//! two flavors, the translation maps between them, and spanning-set recipes.

mod catalog;
mod format;
mod spanning;
mod word;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use catalog::{catalog_get, Catalog, CATALOG_ENV};
pub use format::{parse_entry, serialize_entry, CatalogEntry};
pub use spanning::{
    expand_spanning_set, subalgebra_exponents, Factor, RecipeStatus, SpanningRecipe, SpanningSet, SpanningWord,
};
pub use word::{word_ops, Word, WordOp};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("unknown group {0:?} (expected G4..G22)")]
    UnknownGroup(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("bad word {input:?} at offset {pos}: {msg}")]
    WordSyntax { input: String, pos: usize, msg: String },
    #[error("{file}:{line}: {msg}")]
    Format { file: String, line: usize, msg: String },
    #[error("{group}: {msg}")]
    Invalid { group: String, msg: String },
    #[error("checksum mismatch for {file}: manifest {expected}, file {actual}")]
    Checksum { file: String, expected: String, actual: String },
    #[error("cannot read catalog: {0}")]
    Io(String),
    #[error("{group}: generator {generator} has no image under {map}")]
    MissingImage { group: String, map: String, generator: String },
    #[error("{group}: spanning set {msg}")]
    Spanning { group: String, msg: String },
}

/// One of the 19 exceptional rank-2 groups, `G4` to `G22`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupId(u8);

impl GroupId {
    pub fn new(n: u8) -> Result<Self, PresentationError> {
        if (4..=22).contains(&n) {
            Ok(GroupId(n))
        } else {
            Err(PresentationError::UnknownGroup(format!("G{n}")))
        }
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = GroupId> {
        (4..=22).map(GroupId)
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{}", self.0)
    }
}

impl FromStr for GroupId {
    type Err = PresentationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let digits = t.strip_prefix('G').or_else(|| t.strip_prefix('g')).unwrap_or(t);
        digits
            .parse::<u8>()
            .ok()
            .and_then(|n| GroupId::new(n).ok())
            .ok_or_else(|| PresentationError::UnknownGroup(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    /// Coxeter-like presentation of the reflection group.
    Bmr,
    /// The abc-style presentation.
    Er,
    /// The BMR presentation with the generator-order relations dropped.
    Braid,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub group: GroupId,
    pub flavor: Flavor,
    pub generators: Vec<String>,
    /// Order relation `g^e = 1` per generator; 0 means none.
    pub orders: Vec<u32>,
    /// Defining relations as equal-word pairs.
    pub relations: Vec<(Word, Word)>,
    pub center_word: Word,
    /// 0 when unknown; the group engine fills it in.
    pub center_order: u64,
    pub group_order: u64,
    /// Partition of generator indices into conjugacy classes (shared Hecke
    /// parameters). Singletons when not applicable.
    pub classes: Vec<Vec<usize>>,
}

impl Presentation {
    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn parse_word(&self, s: &str) -> Result<Word, PresentationError> {
        Word::parse(s, &self.generators)
    }

    pub fn show(&self, w: &Word) -> String {
        w.display(&self.generators)
    }

    /// Relators `lhs * rhs^-1` plus `g^e` for every order relation.
    pub fn relators(&self) -> Vec<Word> {
        let mut out: Vec<Word> =
            self.orders.iter().enumerate().filter(|(_, &e)| e > 0).map(|(g, &e)| Word::letter(g, e as i32)).collect();
        out.extend(self.relations.iter().map(|(l, r)| l.concat(&r.invert())));
        out
    }

    /// Checks letter ranges, orders and divisibility.
    pub fn validate(&self) -> Result<(), PresentationError> {
        let bad = |msg: String| PresentationError::Invalid { group: self.group.to_string(), msg };
        let n = self.ngens();
        if n == 0 {
            return Err(bad("no generators".into()));
        }
        if self.orders.len() != n {
            return Err(bad(format!("{} orders for {n} generators", self.orders.len())));
        }
        let in_range = |w: &Word| w.max_generator().is_none_or(|g| g < n);
        for (l, r) in &self.relations {
            if !in_range(l) || !in_range(r) {
                return Err(bad("relation uses an undeclared generator".into()));
            }
        }
        if !in_range(&self.center_word) {
            return Err(bad("center word uses an undeclared generator".into()));
        }
        if self.center_order != 0 && self.group_order != 0 && !self.group_order.is_multiple_of(self.center_order) {
            return Err(bad(format!(
                "center order {} does not divide group order {}",
                self.center_order, self.group_order
            )));
        }
        let mut seen = vec![false; n];
        for class in &self.classes {
            for &g in class {
                if g >= n || seen[g] {
                    return Err(bad("classes do not partition the generators".into()));
                }
                seen[g] = true;
            }
            if class.iter().any(|&g| self.orders[g] != self.orders[class[0]]) {
                return Err(bad("a class mixes generators of different orders".into()));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(bad("classes do not cover the generators".into()));
        }
        Ok(())
    }
}

/// Substitution of source generators by words over the target generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenMap {
    pub name: String,
    pub source: Flavor,
    pub target: Flavor,
    /// Indexed by source generator; `None` marks a missing image.
    pub images: Vec<Option<Word>>,
}

impl GenMap {
    pub fn image(&self, g: usize) -> Option<&Word> {
        self.images.get(g).and_then(|w| w.as_ref())
    }
}

/// Letter-by-letter substitution followed by free reduction.
pub fn translate(w: &Word, map: &GenMap, source_names: &[String]) -> Result<Word, PresentationError> {
    let mut out = Word::identity();
    for &(g, e) in w.syllables() {
        let img = map.image(g).ok_or_else(|| PresentationError::MissingImage {
            group: String::new(),
            map: map.name.clone(),
            generator: source_names.get(g).cloned().unwrap_or_else(|| format!("#{g}")),
        })?;
        out = out.concat(&img.power(e));
    }
    Ok(out)
}
