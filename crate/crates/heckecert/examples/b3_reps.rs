//! Braid group representations of dimension 2 to 5. Checks the braid
//! relation symbolically, then compares the irreducibility condition with
//! a brute-force test over a small field.
//!
//! cargo run --release --example b3_reps -- 97

use heckecert::b3::{self, build_rep, ordered_triangular_conjugate, symbolic_spec, verify_rep};
use heckecert::ring::PrimeField;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: u64 = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(61);
    for k in 2..=4 {
        let (r, spec) = symbolic_spec(k)?;
        let pair = build_rep(&r, &spec)?;
        let ok = verify_rep(&r, &spec, &pair).iter().all(|c| c.pass);
        println!("k={k}: symbolic checks {}", if ok { "hold" } else { "FAIL" });
    }
    let (r, spec) = symbolic_spec(3)?;
    let form = ordered_triangular_conjugate(&r, &spec, &build_rep(&r, &spec)?)?;
    println!("k=3: triangular conjugation {}", if form.pass() { "holds" } else { "FAILS" });

    // Small fields hit the reducible locus often enough to be interesting.
    let field = PrimeField::new(p)?;
    for (k, branch) in [(2, 0), (3, 0), (4, 0), (4, 1), (5, 0)] {
        let (mut agree, mut reducible, mut total) = (0, 0, 0);
        for seed in 0..300 {
            let Ok(rec) = b3::evaluate(field, k, seed, branch) else { continue };
            total += 1;
            if rec.oracle == Some(rec.condition) {
                agree += 1;
            }
            if !rec.condition {
                reducible += 1;
            }
        }
        let oracle = if k == 5 { "no oracle".to_string() } else { format!("{agree} agree with brute force") };
        println!("F_{p}, k={k} branch {branch}: {total} points, {reducible} on the locus, {oracle}");
    }
    Ok(())
}
