//! One witness per (positive, unimodal) quadrant. Pass a max dimension (default 5).
use ehrhart::diagnostics::{grid_report, Quadrant};

fn main() -> ehrhart::Result<()> {
    let dmax = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let reports = grid_report(3, dmax)?;
    for (i, rep) in reports.iter().enumerate() {
        println!("d = {}  {}  {}", rep.dim, Quadrant::ALL[i % 4].symbol(), rep.label);
    }
    Ok(())
}
