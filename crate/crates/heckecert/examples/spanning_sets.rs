//! Expands the spanning-set recipe of each group and checks that its words
//! land on distinct elements of the finite group, covering all of it.

use heckecert::group_engine::enumerate;
use heckecert::presentations::{expand_spanning_set, Catalog};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cat = Catalog::load_default()?;
    for g in cat.groups() {
        let e = cat.entry(g)?;
        let Some(recipe) = &e.spanning else {
            println!("{g}: no spanning recipe");
            continue;
        };
        match expand_spanning_set(&e.bmr, recipe) {
            Ok(set) => {
                let t = enumerate(&e.bmr)?;
                let mut hit = vec![false; t.size()];
                for w in &set.words {
                    hit[t.trace(0, &w.full_word(&e.bmr.center_word)) as usize] = true;
                }
                let covered = hit.iter().filter(|&&h| h).count();
                println!("{g}: {} words ({:?}), {covered} of {} group elements", set.len(), recipe.status, t.size());
            }
            Err(err) => println!("{g}: {err}"),
        }
    }
    Ok(())
}
