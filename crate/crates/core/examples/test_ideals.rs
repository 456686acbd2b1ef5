//! Test ideals and F-pure thresholds of symbolic powers and their sums.

use ftl::family::{fpt_power, fpt_sum, tau_power, tau_sum, SigmaSet};
use ftl::geometry::rat;
use ftl::minors::preset_generic;

fn main() -> ftl::Result<()> {
    let family = preset_generic(2, 3)?;
    let minors = [0, 1];
    println!("family {} with heights {:?}", family.name(), family.heights());
    println!("fpt(I2) = {}", fpt_power(&family, &minors)?);
    for lambda in [rat(1, 2), rat(2, 1), rat(5, 2), rat(7, 2)] {
        println!("tau(I2^{}) = {}", lambda, tau_power(&family, &minors, &lambda)?);
    }

    // I1^(3) + I2^(2)
    let sigmas = SigmaSet::new(vec![vec![3, 0], vec![0, 2]])?;
    println!("fpt(I1^(3) + I2^(2)) = {}", fpt_sum(&family, &sigmas)?);
    println!("tau at 3/2: {}", tau_sum(&family, &sigmas, &rat(3, 2))?);
    Ok(())
}
