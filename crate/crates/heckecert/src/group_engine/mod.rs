//! Finite groups from presentations: coset enumeration, evaluation of words
//! as permutations, centers, and the BMR/ER isomorphism checks.

mod coset;
mod iso;
mod perm;

use serde::{Deserialize, Serialize};

pub use coset::{enumerate, enumerate_with_cap, CosetTable, DEFAULT_COSET_CAP};
pub use iso::{verify_iso, verify_iso_with, IsoCheck, IsoReport};
pub use perm::Perm;

use crate::presentations::{Presentation, PresentationError, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("{group}: coset enumeration exceeded the cap of {cap} cosets")]
    CapExceeded { group: String, cap: usize },
    #[error("{0}: the braid flavor presents an infinite group and is never enumerated")]
    InfiniteFlavor(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// Evaluates `w` in the group realized by `t`.
pub fn eval_word(t: &CosetTable, w: &Word) -> Perm {
    t.eval_word(w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterReport {
    /// The center word commutes with every generator.
    pub central: bool,
    /// Multiplicative order of the center word.
    pub order: u64,
}

pub fn center_check(t: &CosetTable, p: &Presentation) -> CenterReport {
    let z = t.eval_word(&p.center_word);
    let central = (0..t.ngens()).all(|g| {
        let a = t.action(g);
        z.then(a) == a.then(&z)
    });
    CenterReport { central, order: z.order() }
}

/// Indices of the cosets whose elements commute with every generator.
pub fn center_elements(t: &CosetTable) -> Vec<usize> {
    (0..t.size())
        .filter(|&i| {
            let w = t.word_of(i);
            // x commutes with g iff x g and g x land on the same coset.
            (0..t.ngens()).all(|g| t.action(g).apply(i as u32) == t.trace(t.action(g).apply(0), w))
        })
        .collect()
}

/// Partition of the generators into W-conjugacy classes.
pub fn generator_classes(t: &CosetTable) -> Vec<Vec<usize>> {
    let n = t.ngens();
    let gen_coset: Vec<u32> = (0..n).map(|g| t.action(g).apply(0)).collect();
    let mut class_of: Vec<usize> = (0..n).collect();
    for i in 0..t.size() {
        let w = t.word_of(i);
        let winv = w.invert();
        for g in 0..n {
            // coset of w^-1 g w
            let c = t.trace(t.trace(t.trace(0, &winv), &Word::letter(g, 1)), w);
            for h in 0..n {
                if gen_coset[h] == c && class_of[h] != class_of[g] {
                    let (keep, drop) = (class_of[g].min(class_of[h]), class_of[g].max(class_of[h]));
                    for k in class_of.iter_mut() {
                        if *k == drop {
                            *k = keep;
                        }
                    }
                }
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for g in 0..n {
        match classes.iter_mut().find(|c| class_of[c[0]] == class_of[g]) {
            Some(c) => c.push(g),
            None => classes.push(vec![g]),
        }
    }
    classes
}

/// Order and center data for one presentation, as reported by `group-info`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub order: u64,
    pub center_word_central: bool,
    pub center_word_order: u64,
    pub center_size: u64,
    pub generator_orders: Vec<u64>,
    pub classes: Vec<Vec<String>>,
}

pub fn group_info(p: &Presentation) -> Result<GroupInfo, GroupError> {
    let t = enumerate(p)?;
    let c = center_check(&t, p);
    Ok(GroupInfo {
        order: t.size() as u64,
        center_word_central: c.central,
        center_word_order: c.order,
        center_size: center_elements(&t).len() as u64,
        generator_orders: (0..t.ngens()).map(|g| t.action(g).order()).collect(),
        classes: generator_classes(&t)
            .into_iter()
            .map(|c| c.into_iter().map(|g| p.generators[g].clone()).collect())
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{Flavor, GroupId};

    fn cyclic(n: u32) -> Presentation {
        Presentation {
            group: GroupId::new(4).unwrap(),
            flavor: Flavor::Bmr,
            generators: vec!["s".into()],
            orders: vec![n],
            relations: vec![],
            center_word: Word::letter(0, 1),
            center_order: n as u64,
            group_order: n as u64,
            classes: vec![vec![0]],
        }
    }

    #[test]
    fn cyclic_group_of_order_five() {
        let t = enumerate(&cyclic(5)).unwrap();
        assert_eq!(t.size(), 5);
        assert_eq!(t.action(0).order(), 5);
        assert!(eval_word(&t, &Word::identity()).is_identity());
    }

    #[test]
    fn braid_flavor_is_refused() {
        let mut p = cyclic(3);
        p.flavor = Flavor::Braid;
        assert!(matches!(enumerate(&p), Err(GroupError::InfiniteFlavor(_))));
    }

    #[test]
    fn infinite_group_hits_the_cap() {
        let mut p = cyclic(0);
        p.orders = vec![0];
        assert!(matches!(enumerate_with_cap(&p, 500), Err(GroupError::CapExceeded { .. })));
    }

    #[test]
    fn symmetric_group_s3() {
        let p = Presentation {
            generators: vec!["s".into(), "t".into()],
            orders: vec![2, 2],
            relations: vec![(
                Word::from_syllables([(0, 1), (1, 1), (0, 1)]),
                Word::from_syllables([(1, 1), (0, 1), (1, 1)]),
            )],
            classes: vec![vec![0, 1]],
            group_order: 6,
            center_order: 1,
            center_word: Word::identity(),
            ..cyclic(2)
        };
        let t = enumerate(&p).unwrap();
        assert_eq!(t.size(), 6);
        assert_eq!(center_elements(&t), vec![0]);
        assert_eq!(generator_classes(&t), vec![vec![0, 1]]);
        for i in 0..6 {
            assert_eq!(t.trace(0, t.word_of(i)), i as u32);
        }
    }

    #[test]
    fn catalog_classes_match_conjugacy() {
        let cat = crate::presentations::Catalog::builtin().unwrap();
        for g in cat.groups() {
            let p = cat.entry(g).unwrap().presentation(Flavor::Bmr);
            let t = enumerate(&p).unwrap();
            assert_eq!(generator_classes(&t), p.classes, "{g}");
        }
    }
}
