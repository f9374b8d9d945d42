//! Checks that the translation maps between the two presentations of each
//! group are mutually inverse isomorphisms.

use heckecert::group_engine::verify_iso;
use heckecert::presentations::Catalog;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cat = Catalog::load_default()?;
    for g in cat.groups() {
        let t = std::time::Instant::now();
        let r = verify_iso(cat.entry(g)?)?;
        println!(
            "{g}: {} (orders {} / {}, {} relator checks, {} round trips, {:.2?})",
            if r.pass { "pass" } else { "FAIL" },
            r.bmr_order,
            r.er_order,
            r.relators.len(),
            r.round_trips.len(),
            t.elapsed()
        );
        for f in r.failures() {
            println!("    failed: {}", f.what);
        }
    }
    Ok(())
}
