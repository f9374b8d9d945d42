//! Words in a free group, kept freely reduced by merging adjacent powers of
//! the same generator.

use serde::{Deserialize, Serialize};

use super::PresentationError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(Vec<(usize, i32)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: usize, e: i32) -> Self {
        let mut w = Word::identity();
        w.push(g, e);
        w
    }

    pub fn from_syllables(it: impl IntoIterator<Item = (usize, i32)>) -> Self {
        let mut w = Word::identity();
        for (g, e) in it {
            w.push(g, e);
        }
        w
    }

    /// Appends `g^e`, merging with the last syllable when possible.
    pub fn push(&mut self, g: usize, e: i32) {
        if e == 0 {
            return;
        }
        match self.0.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    self.0.pop();
                }
            }
            _ => self.0.push((g, e)),
        }
    }

    pub fn syllables(&self) -> &[(usize, i32)] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of letters, counting `g^e` as `|e|` letters.
    pub fn length(&self) -> usize {
        self.0.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    /// Letters as (generator, inverse?) pairs, leftmost first.
    pub fn letters(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.0.iter().flat_map(|&(g, e)| std::iter::repeat_n((g, e < 0), e.unsigned_abs() as usize))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.0 {
            w.push(g, e);
        }
        w
    }

    pub fn invert(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn power(&self, n: i32) -> Word {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..n.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|&(g, _)| g).max()
    }

    /// Renders with generator names, e.g. `s t^-1 u^2`; the identity is `1`.
    pub fn display(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&(g, e)| if e == 1 { names[g].clone() } else { format!("{}^{}", names[g], e) })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses `s t^-1 u^2 (t s^2 t)^-2`; `1` denotes the identity.
    pub fn parse(s: &str, names: &[String]) -> Result<Word, PresentationError> {
        let mut p = WordParser { src: s, chars: s.chars().collect(), pos: 0, names };
        let w = p.word()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(p.err("unexpected character"));
        }
        Ok(w)
    }
}

/// Operation selector for [`word_ops`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordOp {
    Concat,
    Invert,
    Power(i32),
}

/// `Invert` and `Power` ignore `v`.
pub fn word_ops(w: &Word, v: &Word, op: WordOp) -> Word {
    match op {
        WordOp::Concat => w.concat(v),
        WordOp::Invert => w.invert(),
        WordOp::Power(n) => w.power(n),
    }
}

struct WordParser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
}

impl WordParser<'_> {
    fn err(&self, msg: &str) -> PresentationError {
        PresentationError::WordSyntax { input: self.src.to_string(), pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn word(&mut self) -> Result<Word, PresentationError> {
        let mut w = Word::identity();
        while let Some(c) = self.peek() {
            if c == ')' {
                break;
            }
            let atom = self.atom()?;
            let atom = if self.peek() == Some('^') {
                self.pos += 1;
                let n = self.integer()?;
                atom.power(n)
            } else {
                atom
            };
            w = w.concat(&atom);
        }
        Ok(w)
    }

    fn atom(&mut self) -> Result<Word, PresentationError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                if self.peek() != Some(')') {
                    return Err(self.err("missing ')'"));
                }
                self.pos += 1;
                Ok(w)
            }
            Some('1') => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let g = self
                    .names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| PresentationError::UnknownGenerator(name.clone()))?;
                Ok(Word::letter(g, 1))
            }
            _ => Err(self.err("expected a generator, '1' or '('")),
        }
    }

    fn integer(&mut self) -> Result<i32, PresentationError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.chars.len() && self.chars[self.pos] == '-' {
            self.pos += 1;
        }
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("expected an integer exponent"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        vec!["s".into(), "t".into(), "u".into()]
    }

    fn w(s: &str) -> Word {
        Word::parse(s, &names()).unwrap()
    }

    #[test]
    fn inner_cancellation() {
        assert_eq!(word_ops(&w("s t"), &w("t^-1 s"), WordOp::Concat), w("s^2"));
    }

    #[test]
    fn inversion_reverses() {
        assert_eq!(word_ops(&w("s t u"), &Word::identity(), WordOp::Invert), w("u^-1 t^-1 s^-1"));
    }

    #[test]
    fn powers() {
        assert_eq!(w("s t").power(3), w("s t s t s t"));
        assert_eq!(w("(s t)^3"), w("s t s t s t"));
        assert_eq!(w("(t s^2 t)^-2").display(&names()), "t^-1 s^-2 t^-2 s^-2 t^-1");
        assert_eq!(w("s^0 t"), w("t"));
    }

    #[test]
    fn identity_forms() {
        assert!(w("1").is_identity());
        assert!(w("s s^-1").is_identity());
        assert_eq!(Word::identity().display(&names()), "1");
    }

    #[test]
    fn letters_expand_powers() {
        let l: Vec<_> = w("s^2 t^-1").letters().collect();
        assert_eq!(l, vec![(0, false), (0, false), (1, true)]);
    }

    #[test]
    fn syntax_errors() {
        assert!(Word::parse("s x", &names()).is_err());
        assert!(Word::parse("(s t", &names()).is_err());
        assert!(Word::parse("s^", &names()).is_err());
    }
}
