//! Simplices whose h* is not unimodal while the Ehrhart polynomial stays positive.
use ehrhart::diagnostics::verify_payne_family;
use ehrhart::ehrhart::payne_hstar_closed_form;
use ehrhart::polytopes::DEFAULT_BUDGET;

fn main() -> ehrhart::Result<()> {
    for (r, s, k) in [(0, 3, 2), (0, 3, 3), (1, 3, 3)] {
        let h = payne_hstar_closed_form(r, s, k)?;
        let rep = verify_payne_family(r, s, k, DEFAULT_BUDGET, 1e-8)?;
        println!("(r,s,k) = ({r},{s},{k})  h* = {h}");
        for note in &rep.notes {
            println!("    {note}");
        }
    }
    Ok(())
}
