//! Specializes the certificate to roots of unity and compares it with the
//! regular representation of the finite group. A random point is shown as
//! a control: there the generators no longer have finite order.
//!
//! cargo run --release --example group_algebra -- G5 G12

use heckecert::group_engine::enumerate;
use heckecert::hecke::{group_algebra_check, group_algebra_check_at, HeckeSpec};
use heckecert::presentations::{expand_spanning_set, Catalog, Flavor, GroupId};
use heckecert::ring::{prime_congruent_one, PrimeField, DEFAULT_PRIME};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let groups: Vec<GroupId> = if args.is_empty() {
        [5, 6, 12].iter().map(|&n| GroupId::new(n)).collect::<Result<_, _>>()?
    } else {
        args.iter().map(|a| a.parse()).collect::<Result<_, _>>()?
    };
    let cat = Catalog::load_default()?;
    for g in groups {
        let entry = cat.entry(g)?;
        let spec = HeckeSpec::from_entry(entry)?;
        let basis = expand_spanning_set(&entry.bmr, entry.spanning.as_ref().ok_or("no spanning recipe")?)?;
        let table = enumerate(&entry.presentation(Flavor::Bmr))?;
        // F_p must contain the e-th roots of unity for every class order e.
        let m = spec.classes.iter().map(|c| c.order as u64).product::<u64>();
        let field = PrimeField::new(prime_congruent_one(m, DEFAULT_PRIME).ok_or("no such prime")?)?;
        let at_roots = group_algebra_check(&spec, &basis, &table, field)?;
        let control = group_algebra_check_at(&spec, &basis, &table, spec.random_point(field, 7))?;
        println!(
            "{g}: over F_{} at roots of unity {} (orbit span {}); at a random point {}",
            field.modulus(),
            if at_roots.pass { "matches the regular representation" } else { "MISMATCH" },
            at_roots.algebra_dimension,
            if control.pass { "unexpectedly matches" } else { "does not match, as expected" },
        );
    }
    Ok(())
}
