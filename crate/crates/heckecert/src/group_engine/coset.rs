//! Coset enumeration over the trivial subgroup, relator-table (HLT) style,
//! with a lookahead pass when the table fills up.

use std::collections::VecDeque;

use super::perm::Perm;
use super::GroupError;
use crate::presentations::{Flavor, Presentation, Word};

/// Default ceiling on simultaneously allocated cosets.
pub const DEFAULT_COSET_CAP: usize = 100_000;

const NONE: u32 = u32::MAX;

/// The regular right action of a finite presented group on its elements.
#[derive(Clone, Debug)]
pub struct CosetTable {
    size: usize,
    ngens: usize,
    /// `action[g]` sends coset `i` to `i * g`.
    action: Vec<Perm>,
    inverse: Vec<Perm>,
    /// A shortest word for each coset, from a breadth-first spanning tree.
    words: Vec<Word>,
    pub generators: Vec<String>,
}

impl CosetTable {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn action(&self, g: usize) -> &Perm {
        &self.action[g]
    }

    pub fn inverse_action(&self, g: usize) -> &Perm {
        &self.inverse[g]
    }

    /// Representative word of coset `i`, so that `0 * words[i] = i`.
    pub fn word_of(&self, i: usize) -> &Word {
        &self.words[i]
    }

    /// Coset reached from `start` by reading `w` left to right.
    pub fn trace(&self, start: u32, w: &Word) -> u32 {
        let mut c = start;
        for (g, inv) in w.letters() {
            c = if inv { self.inverse[g].apply(c) } else { self.action[g].apply(c) };
        }
        c
    }

    /// The permutation `i -> i * w`.
    pub fn eval_word(&self, w: &Word) -> Perm {
        let mut p = Perm::identity(self.size);
        for (g, inv) in w.letters() {
            p = p.then(if inv { &self.inverse[g] } else { &self.action[g] });
        }
        p
    }
}

/// Enumerates the cosets of the trivial subgroup with the default cap.
pub fn enumerate(p: &Presentation) -> Result<CosetTable, GroupError> {
    enumerate_with_cap(p, DEFAULT_COSET_CAP)
}

pub fn enumerate_with_cap(p: &Presentation, cap: usize) -> Result<CosetTable, GroupError> {
    if p.flavor == Flavor::Braid {
        return Err(GroupError::InfiniteFlavor(p.group.to_string()));
    }
    let mut e = Enumerator::new(p.ngens(), &p.relators(), cap);
    e.run().map_err(|()| GroupError::CapExceeded { group: p.group.to_string(), cap })?;
    Ok(e.finish(p.generators.clone()))
}

struct Enumerator {
    ncols: usize,
    cap: usize,
    table: Vec<u32>,
    /// Forwarding pointers; `fwd[i] == i` for live cosets.
    fwd: Vec<u32>,
    slack: usize,
    relators: Vec<Vec<usize>>,
    queue: VecDeque<u32>,
    live: usize,
}

#[inline]
fn inv_col(c: usize) -> usize {
    c ^ 1
}

impl Enumerator {
    fn new(ngens: usize, relators: &[Word], cap: usize) -> Self {
        let relators: Vec<Vec<usize>> = relators
            .iter()
            .filter(|w| !w.is_identity())
            .map(|w| w.letters().map(|(g, inv)| 2 * g + inv as usize).collect())
            .collect();
        let ncols = 2 * ngens;
        let slack = ncols + relators.iter().map(|r: &Vec<usize>| r.len()).sum::<usize>() * 4;
        Enumerator {
            ncols,
            cap,
            slack,
            table: vec![NONE; ncols],
            fwd: vec![0],
            relators,
            queue: VecDeque::new(),
            live: 1,
        }
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ncols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.ncols + x] = v;
    }

    fn alive(&self, c: u32) -> bool {
        self.fwd[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<(), ()> {
        // Lookahead only runs between cosets, so a single coset's scans may
        // overshoot the cap by a bounded amount.
        if self.fwd.len() >= self.cap + self.slack {
            return Err(());
        }
        let n = self.fwd.len() as u32;
        self.fwd.push(n);
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.live += 1;
        self.set(c, x, n);
        self.set(n, inv_col(x), c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.fwd[r as usize] != r {
            r = self.fwd[r as usize];
        }
        let mut k = c;
        while self.fwd[k as usize] != r {
            let next = self.fwd[k as usize];
            self.fwd[k as usize] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.fwd[hi as usize] = lo;
            self.live -= 1;
            self.queue.push_back(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(g) = self.queue.pop_front() {
            for x in 0..self.ncols {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                self.set(d, inv_col(x), NONE);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mx = self.get(mu, x);
                if mx != NONE {
                    self.merge(nu, mx);
                } else {
                    let nx = self.get(nu, inv_col(x));
                    if nx != NONE {
                        self.merge(mu, nx);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, inv_col(x), mu);
                    }
                }
            }
        }
    }

    /// Traces relator `r` at coset `a`, defining new cosets when `fill`.
    fn scan(&mut self, a: u32, r: usize, fill: bool) -> Result<(), ()> {
        let len = self.relators[r].len();
        let mut f = a;
        let mut i = 0usize;
        let mut b = a;
        let mut j = len;
        loop {
            while i < j {
                let x = self.relators[r][i];
                let n = self.get(f, x);
                if n == NONE {
                    break;
                }
                f = n;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let x = self.relators[r][j - 1];
                let n = self.get(b, inv_col(x));
                if n == NONE {
                    break;
                }
                b = n;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                let x = self.relators[r][i];
                self.set(f, x, b);
                self.set(b, inv_col(x), f);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            let x = self.relators[r][i];
            self.define(f, x)?;
        }
    }

    /// Scans every relator at every coset without defining, then compacts.
    fn lookahead(&mut self) -> Vec<u32> {
        for c in 0..self.fwd.len() as u32 {
            for r in 0..self.relators.len() {
                if !self.alive(c) {
                    break;
                }
                let _ = self.scan(c, r, false);
            }
        }
        self.compact()
    }

    /// Renumbers live cosets to `0..live`, preserving their order.
    fn compact(&mut self) -> Vec<u32> {
        let n = self.fwd.len();
        let mut new_index = vec![NONE; n];
        let mut next = 0u32;
        for c in 0..n as u32 {
            if self.alive(c) {
                new_index[c as usize] = next;
                next += 1;
            }
        }
        let mut table = vec![NONE; next as usize * self.ncols];
        for c in 0..n as u32 {
            let nc = new_index[c as usize];
            if nc == NONE {
                continue;
            }
            for x in 0..self.ncols {
                let d = self.get(c, x);
                if d != NONE {
                    table[nc as usize * self.ncols + x] = new_index[d as usize];
                }
            }
        }
        self.table = table;
        self.fwd = (0..next).collect();
        self.live = next as usize;
        new_index
    }

    fn run(&mut self) -> Result<(), ()> {
        let mut a = 0u32;
        while (a as usize) < self.fwd.len() {
            if self.fwd.len() >= self.cap {
                let map = self.lookahead();
                if self.fwd.len() >= self.cap {
                    return Err(());
                }
                // Resume at the first survivor at or after `a`.
                a = map[a as usize..].iter().copied().find(|&m| m != NONE).unwrap_or(self.fwd.len() as u32);
                continue;
            }
            if self.alive(a) {
                for r in 0..self.relators.len() {
                    if !self.alive(a) {
                        break;
                    }
                    self.scan(a, r, true)?;
                }
                for x in 0..self.ncols {
                    if !self.alive(a) {
                        break;
                    }
                    if self.get(a, x) == NONE {
                        self.define(a, x)?;
                    }
                }
            }
            a += 1;
        }
        Ok(())
    }

    /// Compacts, renumbers breadth-first from coset 0 and extracts the
    /// permutations together with spanning-tree words.
    fn finish(mut self, generators: Vec<String>) -> CosetTable {
        self.compact();
        let n = self.fwd.len();
        let ngens = self.ncols / 2;
        let mut order = vec![NONE; n];
        let mut bfs = vec![0u32];
        let mut words = vec![Word::identity()];
        order[0] = 0;
        let mut k = 0;
        while k < bfs.len() {
            let c = bfs[k];
            for x in 0..self.ncols {
                let d = self.get(c, x);
                if order[d as usize] == NONE {
                    order[d as usize] = bfs.len() as u32;
                    bfs.push(d);
                    let e = if x % 2 == 0 { 1 } else { -1 };
                    words.push(words[k].concat(&Word::letter(x / 2, e)));
                }
            }
            k += 1;
        }
        let mut action = Vec::with_capacity(ngens);
        let mut inverse = Vec::with_capacity(ngens);
        for g in 0..ngens {
            let mut fwd_img = vec![0u32; n];
            let mut inv_img = vec![0u32; n];
            for c in 0..n as u32 {
                fwd_img[order[c as usize] as usize] = order[self.get(c, 2 * g) as usize];
                inv_img[order[c as usize] as usize] = order[self.get(c, 2 * g + 1) as usize];
            }
            action.push(Perm::from_images(fwd_img).expect("complete coset table"));
            inverse.push(Perm::from_images(inv_img).expect("complete coset table"));
        }
        CosetTable { size: n, ngens, action, inverse, words, generators }
    }
}
