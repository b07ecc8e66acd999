use ehrhart::ehrhart::{compute, zonotope_ehrhart};
use ehrhart::exactmath::is_real_rooted;
use ehrhart::lattice::IntVector;
use ehrhart::polytopes::{permutahedron, Polytope};

fn main() -> ehrhart::Result<()> {
    for d in 1..=4 {
        let p = permutahedron(d)?;
        let r = compute(&p)?;
        println!(
            "permutahedron {d}: i(t) = {}  h* = {}  real-rooted = {}",
            r.ehrhart,
            r.hstar,
            is_real_rooted(&r.hstar.as_polynomial())?
        );
    }
    let gens = vec![
        IntVector::from_i64s(&[1, 0]),
        IntVector::from_i64s(&[1, 2]),
        IntVector::from_i64s(&[-1, 3]),
    ];
    println!("\nformula: {}", zonotope_ehrhart(&gens)?);
    let z = Polytope::zonotope("hexagon", gens)?;
    println!("points in 2Z: {}", z.count_points(2, u64::MAX)?);
    Ok(())
}
