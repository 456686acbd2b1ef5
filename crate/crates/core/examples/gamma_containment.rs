//! Decides containments between intersections of symbolic powers of minors
//! of a generic matrix by searching product shapes.

use ftl::minors::{gamma, gamma_containment, Containment, MinorShape};

fn main() {
    let shape = MinorShape::new(vec![2, 2, 1]);
    println!("shape {:?} gives γ = {:?}", shape.sizes(), shape.gammas(3));
    println!("γ_2 of a single 3-minor: {}", gamma(&MinorShape::new(vec![3]), 2));

    // on 3 rows: I2^(2) ⊆ I1, but I1^(2) is not inside I2
    for (w, target) in [([0, 2, 0], [1, 0, 0]), ([2, 0, 0], [0, 1, 0])] {
        match gamma_containment(&w, &target, 3, None) {
            Containment::Contained => println!("{w:?} ⊆ {target:?}"),
            Containment::NotContained(s) => println!("{w:?} ⊄ {target:?}, witness {:?}", s.sizes()),
            Containment::Unknown => println!("{w:?} vs {target:?}: undecided"),
        }
    }
}
