use ehrhart::diagnostics::{check_triangle, polygon_property_suite};

fn main() -> ehrhart::Result<()> {
    let t = check_triangle([[0, 0], [3, 1], [1, 2]])?;
    println!("{:?}: 2A = {}  B = {}  h* = {}", t.vertices, t.double_area, t.boundary, t.hstar);

    let suite = polygon_property_suite(500, 12, 42)?;
    let nonuni = suite.triangles.iter().filter(|t| !t.unimodal).count();
    println!("{} random triangles, all positive: {}, non-unimodal: {nonuni}",
        suite.triangles.len(),
        suite.triangles.iter().all(|t| t.positive));
    Ok(())
}
