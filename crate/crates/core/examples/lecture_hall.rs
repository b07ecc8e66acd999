use ehrhart::diagnostics::{scan_thin_lecture_hall, thin_lecture_hall_witness};
use ehrhart::ehrhart::{lecture_hall_3d_ehrhart, lecture_hall_hstar};
use ehrhart::polytopes::DEFAULT_BUDGET;

fn main() -> ehrhart::Result<()> {
    // s = (1,2,3,4) gives an Eulerian polynomial
    println!("h*(1,2,3,4) = {}", lecture_hall_hstar(&[1, 2, 3, 4], DEFAULT_BUDGET)?);
    println!("i_(7,1,7)(t) = {}", lecture_hall_3d_ehrhart(7, 7)?);

    let rows = scan_thin_lecture_hall(3, 15, 15)?;
    println!("\nsign of the linear coefficient, d = 3 (a down, b across)");
    for a in 1..=15 {
        let line: String = rows
            .iter()
            .filter(|r| r.a == a)
            .map(|r| match r.report.linear_coefficient().numer().sign() {
                num_bigint::Sign::Minus => '-',
                num_bigint::Sign::NoSign => '0',
                num_bigint::Sign::Plus => '+',
            })
            .collect();
        println!("{a:>3} {line}");
    }
    for d in 3..=6 {
        let (a, b) = thin_lecture_hall_witness(d)?;
        println!("smallest negative witness in dimension {d}: a = {a}, b = {b}");
    }
    Ok(())
}
