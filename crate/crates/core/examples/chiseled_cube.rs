use ehrhart::ehrhart::chiseled_cube_hstar;
use ehrhart::exactmath::{hstar_to_ehrhart, is_real_rooted, is_unimodal};

fn main() -> ehrhart::Result<()> {
    for d in 3..=9 {
        let h = chiseled_cube_hstar(d)?;
        let lin = hstar_to_ehrhart(&h).coeff(1);
        println!(
            "d = {d}  h* = {h}\n       unimodal = {}  real-rooted = {}  linear coeff = {lin}",
            is_unimodal(h.entries()),
            is_real_rooted(&h.as_polynomial())?
        );
    }
    Ok(())
}
