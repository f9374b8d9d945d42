//! Vector enumeration: builds the left regular module of the Hecke algebra
//! from the cyclic vector `1`, imposing every defining relation at every
//! vector, until the action of each letter is closed.
//!
//! Vectors are numbered in order of definition. A relation that evaluates to
//! a nonzero combination kills one vector (the pivot), replacing it by a
//! combination of the others; images of killed vectors are then pushed
//! through the replacement as consequences. Normalisation of stored
//! combinations is lazy.

use std::collections::VecDeque;

use super::coeff::Coeff;
use super::HeckeError;

pub(crate) type Sv<E> = Vec<(u32, E)>;

/// Pivot index and rescaled relation, or the relation back when no pivot
/// is usable yet.
type Pivoted<E> = Result<(usize, Sv<E>), Sv<E>>;

/// A relation of the algebra, imposed as `R v = 0` at every vector `v`.
#[derive(Clone, Debug)]
pub(crate) enum Relation<E> {
    /// `x̄ (x v) = v`.
    Inverse(usize),
    /// `g^e v = sum_j a_j g^j v`; `coeffs[j] = a_j`.
    Poly { letter: usize, coeffs: Vec<E> },
    /// `lhs v = rhs v`; letters as read left to right.
    Braid { lhs: Vec<usize>, rhs: Vec<usize> },
}

/// Dense scratch accumulator for sparse combinations.
struct Acc<E> {
    vals: Vec<E>,
    used: Vec<bool>,
    touched: Vec<u32>,
}

impl<E: Clone> Acc<E> {
    fn new() -> Self {
        Acc { vals: Vec::new(), used: Vec::new(), touched: Vec::new() }
    }

    fn grow(&mut self, n: usize, zero: &E) {
        if self.vals.len() < n {
            self.vals.resize(n, zero.clone());
            self.used.resize(n, false);
        }
    }

    fn add<R: Coeff<E = E>>(&mut self, r: &R, i: u32, c: E) {
        let k = i as usize;
        if self.used[k] {
            self.vals[k] = r.add(&self.vals[k], &c);
        } else {
            self.used[k] = true;
            self.touched.push(i);
            self.vals[k] = c;
        }
    }

    fn drain<R: Coeff<E = E>>(&mut self, r: &R) -> Sv<E> {
        self.touched.sort_unstable();
        let zero = r.zero();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            let k = i as usize;
            self.used[k] = false;
            let v = std::mem::replace(&mut self.vals[k], zero.clone());
            if !r.is_zero(&v) {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}

struct Consequence<E> {
    letter: usize,
    /// What the killed vector was replaced by.
    repl: Sv<E>,
    /// The killed vector's image under `letter`.
    image: Sv<E>,
}

/// Outcome of a finished enumeration.
pub(crate) struct Enumerated<E> {
    /// Live vectors in increasing order; their count is the module dimension.
    pub live: Vec<u32>,
    /// For each traced word, its vector expressed in live vectors.
    pub traced: Vec<Sv<E>>,
    /// `images[x][k]`: image under letter `x` of `live[k]`, in live vectors.
    pub images: Vec<Vec<Sv<E>>>,
    pub vectors_defined: usize,
}

pub(crate) struct Enumerator<'r, R: Coeff> {
    ring: &'r R,
    nletters: usize,
    img: Vec<Vec<Option<Sv<R::E>>>>,
    /// `Some` for killed vectors.
    repl: Vec<Option<Sv<R::E>>>,
    protected: Vec<bool>,
    relations: Vec<Relation<R::E>>,
    cons: VecDeque<Consequence<R::E>>,
    pending: VecDeque<Sv<R::E>>,
    /// Exact mode: relations with no unit coefficient, retried later.
    deferred: Vec<Sv<R::E>>,
    acc: Acc<R::E>,
    scratch: Acc<R::E>,
    cap: usize,
    live: usize,
    kills: u64,
    /// Kill counter at which `repl[k]` was last known to reference live
    /// vectors only.
    clean_at: Vec<u64>,
}

#[inline]
fn inv_letter(x: usize) -> usize {
    x ^ 1
}

impl<'r, R: Coeff> Enumerator<'r, R> {
    pub fn new(ring: &'r R, ngens: usize, relations: Vec<Relation<R::E>>, cap: usize) -> Self {
        let nletters = 2 * ngens;
        Enumerator {
            ring,
            nletters,
            img: vec![vec![None; nletters]],
            repl: vec![None],
            protected: vec![false],
            relations,
            cons: VecDeque::new(),
            pending: VecDeque::new(),
            deferred: Vec::new(),
            acc: Acc::new(),
            scratch: Acc::new(),
            cap,
            live: 1,
            kills: 0,
            clean_at: vec![0],
        }
    }

    fn nv(&self) -> usize {
        self.repl.len()
    }

    #[inline]
    fn alive(&self, i: u32) -> bool {
        self.repl[i as usize].is_none()
    }

    fn define(&mut self, i: u32, x: usize) -> Result<u32, HeckeError> {
        if self.nv() >= self.cap {
            return Err(HeckeError::EnumerationCap { cap: self.cap });
        }
        let n = self.nv() as u32;
        self.img.push(vec![None; self.nletters]);
        self.repl.push(None);
        self.protected.push(false);
        self.clean_at.push(0);
        self.live += 1;
        self.img[i as usize][x] = Some(vec![(n, self.ring.one())]);
        self.img[n as usize][inv_letter(x)] = Some(vec![(i, self.ring.one())]);
        Ok(n)
    }

    /// Rewrites `repl[k]` (and, first, every killed vector it mentions) in
    /// terms of live vectors.
    fn resolve(&mut self, k: u32) {
        let mut stack = vec![(k, false)];
        while let Some((v, expanded)) = stack.pop() {
            let vi = v as usize;
            if expanded {
                if self.clean_at[vi] == self.kills {
                    continue;
                }
                let r = self.repl[vi].take().expect("killed vector");
                let nvec = self.nv();
                self.scratch.grow(nvec, &self.ring.zero());
                for (j, c) in r {
                    match &self.repl[j as usize] {
                        None => self.scratch.add(self.ring, j, c),
                        Some(rj) => {
                            for (l, d) in rj {
                                self.scratch.add(self.ring, *l, self.ring.mul(&c, d));
                            }
                        }
                    }
                }
                let out = self.scratch.drain(self.ring);
                self.repl[vi] = Some(out);
                self.clean_at[vi] = self.kills;
                continue;
            }
            if self.clean_at[vi] == self.kills {
                continue;
            }
            let r = self.repl[vi].as_ref().expect("killed vector");
            let dirty: Vec<u32> = r.iter().map(|(j, _)| *j).filter(|&j| !self.alive(j)).collect();
            if dirty.is_empty() {
                self.clean_at[vi] = self.kills;
                continue;
            }
            stack.push((v, true));
            for j in dirty {
                stack.push((j, false));
            }
        }
    }

    /// `v` rewritten in live vectors.
    fn normalize(&mut self, v: Sv<R::E>) -> Sv<R::E> {
        if v.iter().all(|(i, _)| self.alive(*i)) {
            return v;
        }
        for (i, _) in &v {
            if !self.alive(*i) {
                self.resolve(*i);
            }
        }
        self.scratch.grow(self.nv(), &self.ring.zero());
        for (i, c) in v {
            match &self.repl[i as usize] {
                None => self.scratch.add(self.ring, i, c),
                Some(r) => {
                    for (j, d) in r {
                        self.scratch.add(self.ring, *j, self.ring.mul(&c, d));
                    }
                }
            }
        }
        self.scratch.drain(self.ring)
    }

    /// Brings the stored image of live vector `i` under `x` into normal form.
    fn normalize_image(&mut self, i: u32, x: usize) {
        let v = self.img[i as usize][x].take().expect("defined image");
        let v = self.normalize(v);
        self.img[i as usize][x] = Some(v);
    }

    /// `x v` for `v` in normal form, defining missing images.
    fn apply(&mut self, x: usize, v: &Sv<R::E>) -> Result<Sv<R::E>, HeckeError> {
        for (i, _) in v {
            if self.img[*i as usize][x].is_none() {
                self.define(*i, x)?;
            }
        }
        for (i, _) in v {
            self.normalize_image(*i, x);
        }
        let mut acc = std::mem::replace(&mut self.acc, Acc::new());
        acc.grow(self.nv(), &self.ring.zero());
        for (i, c) in v {
            for (j, d) in self.img[*i as usize][x].as_ref().expect("defined") {
                acc.add(self.ring, *j, self.ring.mul(c, d));
            }
        }
        let out = acc.drain(self.ring);
        self.acc = acc;
        Ok(out)
    }

    /// Reads `word` (left to right) as an operator on `v`.
    fn apply_word(&mut self, word: &[usize], v: Sv<R::E>) -> Result<Sv<R::E>, HeckeError> {
        let mut v = v;
        for &x in word.iter().rev() {
            v = self.apply(x, &v)?;
        }
        Ok(v)
    }

    fn combine(&mut self, terms: Vec<(R::E, Sv<R::E>)>) -> Sv<R::E> {
        let mut acc = std::mem::replace(&mut self.acc, Acc::new());
        acc.grow(self.nv(), &self.ring.zero());
        for (c, v) in terms {
            let v = self.normalize(v);
            for (i, d) in v {
                acc.add(self.ring, i, self.ring.mul(&c, &d));
            }
        }
        let out = acc.drain(self.ring);
        self.acc = acc;
        out
    }

    fn evaluate(&mut self, rel: usize, a: u32) -> Result<Sv<R::E>, HeckeError> {
        let e = vec![(a, self.ring.one())];
        let one = self.ring.one();
        let minus = self.ring.neg(&one);
        match self.relations[rel].clone() {
            Relation::Inverse(x) => {
                let v = self.apply(x, &e)?;
                let v = self.apply(inv_letter(x), &v)?;
                Ok(self.combine(vec![(one, v), (minus, e)]))
            }
            Relation::Poly { letter, coeffs } => {
                let mut powers = vec![e];
                for _ in 0..coeffs.len() {
                    let next = self.apply(letter, powers.last().expect("nonempty"))?;
                    powers.push(next);
                }
                let top = powers.pop().expect("nonempty");
                let mut terms = vec![(one, top)];
                for (c, p) in coeffs.iter().zip(powers) {
                    terms.push((self.ring.neg(c), p));
                }
                Ok(self.combine(terms))
            }
            Relation::Braid { lhs, rhs } => {
                let l = self.apply_word(&lhs, e.clone())?;
                let r = self.apply_word(&rhs, e)?;
                Ok(self.combine(vec![(one, l), (minus, r)]))
            }
        }
    }

    /// Picks the vector to kill and rescales `v` so its coefficient is one.
    /// Preference: unprotected before protected, newest first, a unit
    /// coefficient before one that merely divides every other coefficient.
    /// Dividing a relation by such a common factor discards torsion, so over
    /// a ring that is not a field the result is the module modulo torsion.
    fn pivot(&self, v: Sv<R::E>) -> Pivoted<R::E> {
        for protected in [false, true] {
            let candidates: Vec<usize> =
                (0..v.len()).rev().filter(|&k| self.protected[v[k].0 as usize] == protected).collect();
            for &k in &candidates {
                if let Some(inv) = self.ring.unit_inverse(&v[k].1) {
                    let scaled = v.iter().map(|(i, c)| (*i, self.ring.mul(&inv, c))).collect();
                    return Ok((k, scaled));
                }
            }
            for &k in &candidates {
                let d = &v[k].1;
                let divided: Option<Sv<R::E>> =
                    v.iter().map(|(i, c)| self.ring.exact_div(c, d).map(|q| (*i, q))).collect();
                if let Some(scaled) = divided {
                    return Ok((k, scaled));
                }
            }
        }
        Err(v)
    }

    fn kill(&mut self, v: Sv<R::E>) -> bool {
        let (k, v) = match self.pivot(v) {
            Ok(x) => x,
            Err(v) => {
                self.deferred.push(v);
                return false;
            }
        };
        let p = v[k].0;
        let repl: Sv<R::E> =
            v.into_iter().enumerate().filter(|(j, _)| *j != k).map(|(_, (i, c))| (i, self.ring.neg(&c))).collect();
        self.repl[p as usize] = Some(repl.clone());
        self.live -= 1;
        self.kills += 1;
        self.clean_at[p as usize] = self.kills;
        for x in 0..self.nletters {
            if let Some(image) = self.img[p as usize][x].take() {
                self.cons.push_back(Consequence { letter: x, repl: repl.clone(), image });
            }
        }
        true
    }

    /// Handles one consequence `x * repl = image`. When exactly one image on
    /// the left is unknown and its coefficient is a unit, it is solved for
    /// directly instead of being defined and immediately killed.
    fn consequence(&mut self, c: Consequence<R::E>) -> Result<(), HeckeError> {
        let x = c.letter;
        let repl = self.normalize(c.repl);
        let missing: Vec<usize> = (0..repl.len()).filter(|&k| self.img[repl[k].0 as usize][x].is_none()).collect();
        if let [k] = missing[..] {
            if let Some(inv) = self.ring.unit_inverse(&repl[k].1) {
                let one = self.ring.one();
                let mut terms = vec![(one, c.image)];
                for (j, (i, coef)) in repl.iter().enumerate() {
                    if j != k {
                        self.normalize_image(*i, x);
                        let im = self.img[*i as usize][x].clone().expect("defined");
                        terms.push((self.ring.neg(coef), im));
                    }
                }
                let rhs = self.combine(terms);
                let solved = rhs.into_iter().map(|(i, d)| (i, self.ring.mul(&inv, &d))).collect();
                self.img[repl[k].0 as usize][x] = Some(solved);
                return Ok(());
            }
        }
        let lhs = self.apply(x, &repl)?;
        let one = self.ring.one();
        let minus = self.ring.neg(&one);
        let rel = self.combine(vec![(one, lhs), (minus, c.image)]);
        self.pending.push_back(rel);
        Ok(())
    }

    /// Imposes `v = 0` and everything that follows from it.
    fn impose(&mut self, v: Sv<R::E>) -> Result<(), HeckeError> {
        self.pending.push_back(v);
        loop {
            if let Some(v) = self.pending.pop_front() {
                let v = self.normalize(v);
                if !v.is_empty() {
                    self.kill(v);
                }
            } else if let Some(c) = self.cons.pop_front() {
                self.consequence(c)?;
            } else {
                return Ok(());
            }
        }
    }

    /// Retries deferred relations until none makes progress.
    fn retry_deferred(&mut self) -> Result<(), HeckeError> {
        loop {
            let before = self.kills;
            for v in std::mem::take(&mut self.deferred) {
                self.impose(v)?;
            }
            if self.kills == before {
                return Ok(());
            }
        }
    }

    /// Traces each word from the cyclic vector and marks its endpoint.
    pub fn trace(&mut self, words: &[Vec<usize>]) -> Result<Vec<u32>, HeckeError> {
        let mut ends = Vec::with_capacity(words.len());
        for w in words {
            let mut c = 0u32;
            for &x in w.iter().rev() {
                // No relation has been imposed yet, so every image is a
                // single freshly defined vector.
                c = match &self.img[c as usize][x] {
                    Some(v) => v[0].0,
                    None => self.define(c, x)?,
                };
            }
            self.protected[c as usize] = true;
            ends.push(c);
        }
        Ok(ends)
    }

    pub fn run(mut self, ends: &[u32]) -> Result<Enumerated<R::E>, HeckeError> {
        let mut a = 0usize;
        loop {
            while a < self.nv() {
                let v = a as u32;
                if self.alive(v) {
                    for rel in 0..self.relations.len() {
                        if !self.alive(v) {
                            break;
                        }
                        let r = self.evaluate(rel, v)?;
                        self.impose(r)?;
                    }
                    for x in 0..self.nletters {
                        if !self.alive(v) {
                            break;
                        }
                        if self.img[a][x].is_none() {
                            self.define(v, x)?;
                        }
                    }
                }
                a += 1;
            }
            if self.deferred.is_empty() {
                break;
            }
            let before = self.nv();
            self.retry_deferred()?;
            if self.nv() == before {
                break;
            }
        }
        for v in std::mem::take(&mut self.deferred) {
            let v = self.normalize(v);
            if !v.is_empty() {
                return Err(HeckeError::NonUnitPivot { support: v.len() });
            }
        }
        let live: Vec<u32> = (0..self.nv() as u32).filter(|&i| self.alive(i)).collect();
        let mut index = vec![u32::MAX; self.nv()];
        for (k, &i) in live.iter().enumerate() {
            index[i as usize] = k as u32;
        }
        let relabel = |v: Sv<R::E>| -> Sv<R::E> { v.into_iter().map(|(i, c)| (index[i as usize], c)).collect() };
        let traced = ends.iter().map(|&e| relabel(self.normalize(vec![(e, self.ring.one())]))).collect();
        let mut images = vec![Vec::with_capacity(live.len()); self.nletters];
        for &i in &live {
            for (x, slot) in images.iter_mut().enumerate() {
                let v = self.img[i as usize][x].take().expect("closed table");
                slot.push(relabel(self.normalize(v)));
            }
        }
        Ok(Enumerated { live, traced, images, vectors_defined: self.nv() })
    }
}
