//! Reeve tetrahedra: the linear coefficient turns negative once h > 12.
use ehrhart::diagnostics::classify;
use ehrhart::polytopes::reeve;

fn main() -> ehrhart::Result<()> {
    for h in [1, 6, 12, 13, 20] {
        let rep = classify(&reeve(h)?)?;
        println!(
            "h = {h:>2}  i(t) = {}  h* = {}  positive = {}",
            rep.ehrhart(),
            rep.hstar,
            rep.positive
        );
    }
    Ok(())
}
