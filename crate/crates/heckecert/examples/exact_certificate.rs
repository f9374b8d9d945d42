//! Certifies freeness over the exact Laurent parameter ring (default G4 and
//! G6) and prints a few matrix entries.

use std::time::Instant;

use heckecert::hecke::{certify_freeness, Exact, HeckeSpec};
use heckecert::presentations::{expand_spanning_set, Catalog, GroupId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let groups: Vec<GroupId> = if args.is_empty() {
        vec![GroupId::new(4)?, GroupId::new(6)?]
    } else {
        args.iter().map(|a| a.parse()).collect::<Result<_, _>>()?
    };
    let cat = Catalog::load_default()?;
    for g in groups {
        let entry = cat.entry(g)?;
        let spec = HeckeSpec::from_entry(entry)?;
        let basis = expand_spanning_set(&entry.bmr, entry.spanning.as_ref().ok_or("no spanning recipe")?)?;
        let ring = Exact { vars: spec.vars() };
        let t = Instant::now();
        match certify_freeness(&spec, &ring, &basis) {
            Ok(c) => {
                println!("{g}: exact certificate, rank {} ({:.2?})", c.rank, t.elapsed());
                let m = &c.matrices[0];
                let longest = m.data.iter().max_by_key(|p| p.num_terms()).expect("nonempty");
                let shown = longest.to_string();
                if shown.len() <= 120 {
                    println!("  longest entry of L_{}: {shown}", c.generators[0]);
                } else {
                    println!("  longest entry of L_{} has {} terms", c.generators[0], longest.num_terms());
                }
            }
            Err(e) => println!("{g}: {e} ({:.2?})", t.elapsed()),
        }
    }
    Ok(())
}
