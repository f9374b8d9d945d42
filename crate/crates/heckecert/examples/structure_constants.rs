//! Multiplies basis elements of the G4 Hecke algebra over the exact
//! Laurent ring and prints the nonzero coordinates of a few products.

use heckecert::hecke::{certify_freeness, structure_constants, Exact, HeckeSpec};
use heckecert::presentations::{expand_spanning_set, Catalog, GroupId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g: GroupId = std::env::args().nth(1).unwrap_or_else(|| "G4".into()).parse()?;
    let cat = Catalog::load_default()?;
    let entry = cat.entry(g)?;
    let spec = HeckeSpec::from_entry(entry)?;
    let basis = expand_spanning_set(&entry.bmr, entry.spanning.as_ref().ok_or("no spanning recipe")?)?;
    let ring = Exact { vars: spec.vars() };
    let cert = certify_freeness(&spec, &ring, &basis)?;
    let p = &spec.presentation;
    let show = |i: usize| {
        let w = &cert.basis_words[i];
        if w.is_identity() {
            "1".to_string()
        } else {
            p.show(w)
        }
    };
    // The shortest nontrivial basis words give the most readable products.
    let mut order: Vec<usize> = (0..cert.n()).filter(|&i| !cert.basis_words[i].is_identity()).collect();
    order.sort_by_key(|&i| cert.basis_words[i].length());
    for &(i, j) in &[(order[0], order[0]), (order[0], order[1]), (order[1], order[0])] {
        let c = structure_constants(&cert, &ring, i, j);
        println!("{} * {} =", show(i), show(j));
        for (k, x) in c.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            println!("    ({x}) {}", show(k));
        }
    }
    Ok(())
}
