use ehrhart::lattice::{smith_normal_form, IntMatrix};

fn main() -> ehrhart::Result<()> {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])?;
    let snf = smith_normal_form(&a)?;
    println!("A =\n{a}\nD =\n{}", snf.d);
    println!("invariant factors {:?}, rank {}", snf.invariant_factors(), snf.rank());
    // U A V = D
    assert_eq!(&(&snf.u * &a) * &snf.v, snf.d);
    Ok(())
}
