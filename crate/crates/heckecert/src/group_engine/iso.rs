//! Checks that the translation maps are mutually inverse isomorphisms
//! between the BMR and ER presentations of one group.

use serde::{Deserialize, Serialize};

use super::coset::{enumerate, CosetTable};
use super::GroupError;
use crate::presentations::{translate, CatalogEntry, GenMap, GroupId, Presentation, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoCheck {
    pub what: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub group: GroupId,
    pub bmr_order: u64,
    pub er_order: u64,
    /// One entry per relation of either presentation, pushed through the map.
    pub relators: Vec<IsoCheck>,
    /// One entry per generator: image of its image is itself.
    pub round_trips: Vec<IsoCheck>,
    pub pass: bool,
}

impl IsoReport {
    pub fn failures(&self) -> impl Iterator<Item = &IsoCheck> {
        self.relators.iter().chain(&self.round_trips).filter(|c| !c.pass)
    }
}

pub fn verify_iso(entry: &CatalogEntry) -> Result<IsoReport, GroupError> {
    verify_iso_with(entry, &entry.phi1, &entry.phi2)
}

/// Like [`verify_iso`] with caller-supplied maps (used for negative controls).
pub fn verify_iso_with(entry: &CatalogEntry, phi1: &GenMap, phi2: &GenMap) -> Result<IsoReport, GroupError> {
    let bmr = &entry.bmr;
    let er = &entry.er;
    let tb = enumerate(bmr)?;
    let te = enumerate(er)?;
    let mut relators = Vec::new();
    relators.extend(relation_checks(bmr, er, phi1, &te, "phi1")?);
    relators.extend(relation_checks(er, bmr, phi2, &tb, "phi2")?);

    let mut round_trips = Vec::new();
    for (src, dst, there, back, t, label) in
        [(bmr, er, phi1, phi2, &tb, "phi2(phi1"), (er, bmr, phi2, phi1, &te, "phi1(phi2")]
    {
        for g in 0..src.ngens() {
            let gw = Word::letter(g, 1);
            let pass = match translate(&gw, there, &src.generators) {
                Ok(img) => match translate(&img, back, &dst.generators) {
                    Ok(rt) => same_element(t, &rt, &gw),
                    Err(_) => false,
                },
                Err(_) => false,
            };
            round_trips
                .push(IsoCheck { what: format!("{label}({})) = {}", src.generators[g], src.generators[g]), pass });
        }
    }
    let pass = tb.size() == te.size() && relators.iter().all(|c| c.pass) && round_trips.iter().all(|c| c.pass);
    Ok(IsoReport {
        group: entry.group,
        bmr_order: tb.size() as u64,
        er_order: te.size() as u64,
        relators,
        round_trips,
        pass,
    })
}

fn same_element(t: &CosetTable, a: &Word, b: &Word) -> bool {
    // The action is regular, so words agree iff they agree on coset 0.
    t.trace(0, a) == t.trace(0, b)
}

fn relation_checks(
    src: &Presentation,
    dst: &Presentation,
    map: &GenMap,
    t: &CosetTable,
    label: &str,
) -> Result<Vec<IsoCheck>, GroupError> {
    let mut pairs: Vec<(Word, Word)> = src
        .orders
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(g, &e)| (Word::letter(g, e as i32), Word::identity()))
        .collect();
    pairs.extend(src.relations.iter().cloned());
    let mut out = Vec::new();
    for (l, r) in pairs {
        let what = format!("{label}: {} = {}", src.show(&l), src.show(&r));
        let pass = match (translate(&l, map, &src.generators), translate(&r, map, &src.generators)) {
            (Ok(a), Ok(b)) => same_element(t, &a, &b),
            _ => false,
        };
        let _ = dst;
        out.push(IsoCheck { what, pass });
    }
    Ok(out)
}
