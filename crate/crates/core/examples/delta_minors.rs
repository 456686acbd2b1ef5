//! Builds the product Δ of minors whose diagonals cover a generic matrix and
//! checks its lex leading term and order.

use ftl::minors::{delta_check, delta_minors, delta_polynomial};

fn main() -> ftl::Result<()> {
    let minors = delta_minors(2, 3)?;
    let names: Vec<String> = minors.iter().map(|m| m.to_string()).collect();
    println!("2x3 minors: {}", names.join(" "));
    println!("Δ(2,2) = {}", delta_polynomial(2, 2)?.render_matrix(2));
    for (m, n) in [(1, 1), (2, 2), (2, 3), (3, 3)] {
        let check = delta_check(m, n)?;
        println!(
            "{m}x{n}: cover {} squarefree leading term {:?} order counterexample {:?}",
            check.cover_ok, check.leading_squarefree, check.ord_counterexample
        );
    }
    Ok(())
}
