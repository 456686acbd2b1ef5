//! Built-in prime families and their JSON form.

use ftl::family::PrimeFamily;
use ftl::minors::{preset_generic, preset_pfaffian, preset_symmetric};

fn main() -> ftl::Result<()> {
    for family in [preset_generic(3, 4)?, preset_symmetric(3)?, preset_pfaffian(2)?] {
        println!("{}: heights {:?}", family.name(), family.heights());
        for warning in family.flag_warnings() {
            println!("  {warning}");
        }
    }
    let text = preset_generic(2, 2)?.to_json();
    let back = PrimeFamily::from_json(&text)?;
    println!("{text}");
    println!("round trip keeps {}", back.name());
    Ok(())
}
