use ehrhart::diagnostics::conjecture_scans;
use ehrhart::polytopes::DEFAULT_BUDGET;

fn main() {
    let rep = conjecture_scans(DEFAULT_BUDGET);
    for e in &rep.entries {
        println!("{:<28} {:<22} expected {:?} holds {}", e.conjecture, e.report.label, e.expected, e.holds);
    }
    println!("counterexamples: {:?}", rep.counterexamples);
}
