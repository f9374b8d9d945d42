//! Certifies freeness at one random point of F_p for the groups named on
//! the command line (default: G4 to G9 and G12 to G14).
//!
//! cargo run --release --example freeness -- G4 G10

use std::time::Instant;

use heckecert::hecke::{certify_freeness, HeckeSpec, ModP};
use heckecert::presentations::{expand_spanning_set, Catalog, GroupId};
use heckecert::ring::{PrimeField, DEFAULT_PRIME};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let groups: Vec<GroupId> = if args.is_empty() {
        [4, 5, 6, 7, 8, 9, 12, 13, 14].iter().map(|&n| GroupId::new(n)).collect::<Result<_, _>>()?
    } else {
        args.iter().map(|a| a.parse()).collect::<Result<_, _>>()?
    };
    let cat = Catalog::load_default()?;
    let field = PrimeField::new(DEFAULT_PRIME)?;
    for g in groups {
        let entry = cat.entry(g)?;
        let spec = HeckeSpec::from_entry(entry)?;
        let recipe = entry.spanning.as_ref().ok_or("no spanning recipe")?;
        let basis = expand_spanning_set(&entry.bmr, recipe)?;
        let ring = ModP::new(spec.random_point(field, 1));
        let t = Instant::now();
        match certify_freeness(&spec, &ring, &basis) {
            Ok(c) => println!(
                "{g}: rank {} with {} checks passing ({} vectors defined, {:.2?})",
                c.rank,
                c.checks.len(),
                c.vectors_defined,
                t.elapsed()
            ),
            Err(e) => println!("{g}: {e} ({:.2?})", t.elapsed()),
        }
    }
    Ok(())
}
