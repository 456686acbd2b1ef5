//! F-jumping numbers of a sum of symbolic powers, with the test ideal on
//! each interval of constancy.

use ftl::family::{jumping_numbers_sum, Level, SigmaSet};
use ftl::geometry::int;
use ftl::monomial::monomial_family;

fn main() -> ftl::Result<()> {
    let family = monomial_family(2)?;
    let sigmas = SigmaSet::new(vec![vec![2, 0], vec![0, 3]])?;
    for (lambda, tau) in jumping_numbers_sum(&family, &sigmas, &int(3), Level::Representation)? {
        println!("{lambda:>5}  {tau}");
    }
    Ok(())
}
