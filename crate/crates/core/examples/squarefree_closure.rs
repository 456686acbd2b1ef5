//! Closes {0, 1, (x1..xn)} under sum, intersection and colon, and compares
//! with the full count of squarefree monomial ideals.

use ftl::monomial::{cu_closure, enumerate_squarefree_ideals};

fn main() -> ftl::Result<()> {
    for n in 1..=3 {
        let reached = cu_closure(n)?.len();
        let all = enumerate_squarefree_ideals(n)?.len();
        println!("n={n}: closure has {reached} ideals, {all} squarefree ideals exist");
    }
    Ok(())
}
