use ehrhart::ehrhart::compute;
use ehrhart::exactmath::{all_roots_on_critical_line, roots_numeric};
use ehrhart::polytopes::cross_polytope;

fn main() -> ehrhart::Result<()> {
    for d in 1..=5 {
        let r = compute(&cross_polytope(d)?)?;
        println!("d = {d}  h* = {}  i(t) = {}", r.hstar, r.ehrhart);
        // roots sit on Re z = -1/2
        println!("   on line: {}", all_roots_on_critical_line(&r.ehrhart, 1e-8)?);
    }
    let r = compute(&cross_polytope(3)?)?;
    for z in roots_numeric(&r.ehrhart, 1e-10)? {
        println!("   root {:.6} {:+.6}i", z.re, z.im);
    }
    Ok(())
}
