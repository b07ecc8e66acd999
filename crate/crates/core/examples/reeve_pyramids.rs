use ehrhart::diagnostics::reeve_pyramid_scan;
use ehrhart::ehrhart::reeve_threshold;

fn main() -> ehrhart::Result<()> {
    for d in 3..=8 {
        println!("H({d}) = {}", reeve_threshold(d)?);
    }
    for rep in reeve_pyramid_scan(6, 4)? {
        println!("{:<16} positive = {}  linear = {}", rep.label, rep.positive, rep.linear_coefficient());
    }
    Ok(())
}
