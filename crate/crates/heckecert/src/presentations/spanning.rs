//! Expansion of spanning-set recipes into explicit word lists.
//!
//! A recipe is a sum of terms `z^k * f_1 f_2 ... f_m` over a range of `k`,
//! where each factor is either a fixed word or the subalgebra `u_i`
//! generated by one braid generator. `u_i` is spanned by the powers of its
//! generator listed in [`subalgebra_exponents`].

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{GroupId, Presentation, PresentationError, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RecipeStatus {
    /// Taken as written from the source.
    Stated,
    /// Assembled by us; only a successful rank check vouches for it.
    Reconstructed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Factor {
    /// Index into `SpanningRecipe::subalgebras`.
    Sub(usize),
    Fixed(Word),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningRecipe {
    pub status: RecipeStatus,
    /// Inclusive range of center powers.
    pub zpow: (u32, u32),
    /// Generator of each `u_i`.
    pub subalgebras: Vec<usize>,
    pub terms: Vec<Vec<Factor>>,
}

/// `z^zpow * word`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpanningWord {
    pub zpow: u32,
    pub word: Word,
}

impl SpanningWord {
    /// The braid word `z^zpow * word`, freely reduced.
    pub fn full_word(&self, z: &Word) -> Word {
        z.power(self.zpow as i32).concat(&self.word)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningSet {
    pub group: GroupId,
    pub words: Vec<SpanningWord>,
    pub expected_size: u64,
}

impl SpanningSet {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// A copy with the word at `index` removed; the result is no longer a
    /// valid spanning set and exists for negative controls.
    pub fn without(&self, index: usize) -> SpanningSet {
        let mut s = self.clone();
        s.words.remove(index);
        s
    }
}

/// Nonzero exponents spanning `u_g` for a generator of order `e`, together
/// with the implicit exponent 0.
pub fn subalgebra_exponents(e: u32) -> Vec<i32> {
    let mut out = Vec::new();
    for k in 1..e as i32 {
        // 1, -1, 2, -2, ... balanced around zero, leaning positive.
        let x = if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) };
        out.push(x);
    }
    out
}

/// Expands the recipe of `bmr` into the ordered, duplicate-free list of
/// `|W|` words. Ordering: by center power, then term, then exponent choice.
pub fn expand_spanning_set(bmr: &Presentation, recipe: &SpanningRecipe) -> Result<SpanningSet, PresentationError> {
    let group = bmr.group;
    let err = |msg: String| PresentationError::Spanning { group: group.to_string(), msg };
    let mut per_z: Vec<Word> = Vec::new();
    let mut seen = HashSet::new();
    for term in &recipe.terms {
        for w in expand_term(bmr, recipe, term) {
            if seen.insert(w.clone()) {
                per_z.push(w);
            }
        }
    }
    let mut words = Vec::new();
    let mut full = HashSet::new();
    for k in recipe.zpow.0..=recipe.zpow.1 {
        for w in &per_z {
            let sw = SpanningWord { zpow: k, word: w.clone() };
            if !full.insert(sw.full_word(&bmr.center_word)) {
                return Err(err(format!("word {} repeats after reduction", bmr.show(&sw.full_word(&bmr.center_word)))));
            }
            words.push(sw);
        }
    }
    if words.len() as u64 != bmr.group_order {
        return Err(err(format!("expands to {} distinct words, expected |W| = {}", words.len(), bmr.group_order)));
    }
    Ok(SpanningSet { group, words, expected_size: bmr.group_order })
}

/// All words of one term, in a deterministic order.
fn expand_term(bmr: &Presentation, recipe: &SpanningRecipe, term: &[Factor]) -> Vec<Word> {
    let subs: Vec<usize> =
        term.iter().enumerate().filter(|(_, f)| matches!(f, Factor::Sub(_))).map(|(i, _)| i).collect();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    // Each deletion pattern keeps a subset of the subalgebra factors; kept
    // neighbours on the same generator collapse, since u_g u_g = u_g.
    for mask in (0..1u64 << subs.len()).rev() {
        let mut factors: Vec<&Factor> = Vec::new();
        for (i, f) in term.iter().enumerate() {
            if let Some(pos) = subs.iter().position(|&j| j == i) {
                if mask >> (subs.len() - 1 - pos) & 1 == 0 {
                    continue;
                }
                if let (Some(Factor::Sub(prev)), Factor::Sub(cur)) = (factors.last(), f) {
                    if recipe.subalgebras[*prev] == recipe.subalgebras[*cur] {
                        continue;
                    }
                }
            }
            factors.push(f);
        }
        let choices: Vec<Vec<Word>> = factors
            .iter()
            .map(|f| match f {
                Factor::Fixed(w) => vec![w.clone()],
                Factor::Sub(i) => {
                    let g = recipe.subalgebras[*i];
                    subalgebra_exponents(bmr.orders[g]).into_iter().map(|e| Word::letter(g, e)).collect()
                }
            })
            .collect();
        let mut idx = vec![0usize; choices.len()];
        'odometer: loop {
            let w = idx.iter().zip(&choices).fold(Word::identity(), |acc, (&i, c)| acc.concat(&c[i]));
            if seen.insert(w.clone()) {
                out.push(w);
            }
            let mut k = choices.len();
            loop {
                if k == 0 {
                    break 'odometer;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    continue 'odometer;
                }
                idx[k] = 0;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_sets() {
        assert_eq!(subalgebra_exponents(2), vec![1]);
        assert_eq!(subalgebra_exponents(3), vec![1, -1]);
        assert_eq!(subalgebra_exponents(4), vec![1, -1, 2]);
        assert_eq!(subalgebra_exponents(5), vec![1, -1, 2, -2]);
    }
}
