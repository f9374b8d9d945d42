//! Enumerates both presentations of every finite group in the catalog and
//! prints its order and center data.

use heckecert::group_engine::group_info;
use heckecert::presentations::{Catalog, Flavor};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cat = Catalog::load_default()?;
    for g in cat.groups() {
        let e = cat.entry(g)?;
        for flavor in [Flavor::Bmr, Flavor::Er] {
            let p = e.presentation(flavor);
            let t = std::time::Instant::now();
            match group_info(&p) {
                Ok(i) => println!(
                    "{g} {flavor:?}: order {} (expected {}), z central {} order {} (expected {}), |Z| {}, gen orders {:?}, classes {:?} ({:.2?})",
                    i.order, p.group_order, i.center_word_central, i.center_word_order, p.center_order,
                    i.center_size, i.generator_orders, i.classes, t.elapsed()
                ),
                Err(err) => println!("{g} {flavor:?}: {err}"),
            }
        }
    }
    Ok(())
}
