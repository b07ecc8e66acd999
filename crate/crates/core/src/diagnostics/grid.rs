//! One witness per quadrant of the positivity × unimodality grid.

use serde::Serialize;

use super::{classify, QuadrantReport};
use crate::ehrhart::reeve_threshold;
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::polytopes::{chiseled_pm_cube, cross_polytope, lecture_hall, payne, pyramid, reeve, Polytope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Quadrant {
    /// positive and unimodal
    PosUni,
    /// positive, not unimodal
    PosNonUni,
    /// unimodal, not positive
    NonPosUni,
    /// neither
    NonPosNonUni,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::PosUni, Quadrant::PosNonUni, Quadrant::NonPosUni, Quadrant::NonPosNonUni];

    pub fn flags(self) -> (bool, bool) {
        match self {
            Quadrant::PosUni => (true, true),
            Quadrant::PosNonUni => (true, false),
            Quadrant::NonPosUni => (false, true),
            Quadrant::NonPosNonUni => (false, false),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Quadrant::PosUni => "(+,+)",
            Quadrant::PosNonUni => "(+,-)",
            Quadrant::NonPosUni => "(-,+)",
            Quadrant::NonPosNonUni => "(-,-)",
        }
    }
}

/// Thin lecture hall `(a, 1^(d-2), b)` with a strictly negative linear
/// coefficient, least in `(a + b, ab, a)`.
pub fn thin_lecture_hall_witness(d: usize) -> Result<(u64, u64)> {
    let zero = Rational::from_integer(0.into());
    let mut bound = 16;
    loop {
        let rows = super::scan_thin_lecture_hall(d, bound, bound)?;
        let best = rows
            .iter()
            .filter(|r| r.report.linear_coefficient() < zero && r.a + r.b <= bound)
            .map(|r| (r.a + r.b, r.a * r.b, r.a, r.b))
            .min();
        if let Some((_, _, a, b)) = best {
            return Ok((a, b));
        }
        if bound > 1 << 12 {
            return Err(Error::Verification(format!("no thin lecture hall witness found for d = {d}")));
        }
        bound *= 2;
    }
}

/// The polytopes used for dimension `d`, in quadrant order.
pub fn grid_witnesses(d: usize) -> Result<Vec<(Quadrant, Polytope)>> {
    if !(3..=7).contains(&d) {
        return Err(Error::Domain(format!("grid dimensions run over 3..=7, got {d}")));
    }
    let pos_non_uni = match d {
        3 => reeve(6)?,
        4 | 5 => pyramid(&reeve(6)?, d - 3)?,
        6 => payne(0, 3, 2)?,
        _ => pyramid(&payne(0, 3, 2)?, d - 6)?,
    };
    let non_pos_uni = if d >= 7 {
        chiseled_pm_cube(d)?
    } else {
        let (a, b) = thin_lecture_hall_witness(d)?;
        let mut s = vec![a];
        s.extend(std::iter::repeat(1).take(d - 2));
        s.push(b);
        lecture_hall(&s)?
    };
    let r = reeve(reeve_threshold(d)?)?;
    let neither = if d == 3 { r } else { pyramid(&r, d - 3)? };
    Ok(vec![
        (Quadrant::PosUni, cross_polytope(d)?),
        (Quadrant::PosNonUni, pos_non_uni),
        (Quadrant::NonPosUni, non_pos_uni),
        (Quadrant::NonPosNonUni, neither),
    ])
}

/// Classifies the four witnesses for each `d` in range and fails if any
/// lands outside its intended quadrant.
pub fn grid_report(d_min: usize, d_max: usize) -> Result<Vec<QuadrantReport>> {
    if d_min < 3 || d_max > 7 || d_min > d_max {
        return Err(Error::Domain(format!("need 3 <= dmin <= dmax <= 7, got {d_min}..{d_max}")));
    }
    let mut out = Vec::new();
    for d in d_min..=d_max {
        for (q, p) in grid_witnesses(d)? {
            let rep = classify(&p)?;
            if rep.quadrant() != q.flags() || rep.dim != d {
                return Err(Error::Verification(format!(
                    "{} intended for {} in dimension {d} classified as positive={} unimodal={} (dim {})",
                    p.label(),
                    q.symbol(),
                    rep.positive,
                    rep.unimodal,
                    rep.dim
                )));
            }
            out.push(rep);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses_per_dimension() {
        assert_eq!(thin_lecture_hall_witness(3).unwrap(), (7, 7));
        assert_eq!(thin_lecture_hall_witness(4).unwrap(), (9, 11));
        let labels: Vec<String> = grid_witnesses(3).unwrap().iter().map(|(_, p)| p.label().to_string()).collect();
        assert_eq!(labels, ["cross-polytope:d=3", "reeve:h=6", "lecture-hall:7,1,7", "reeve:h=12"]);
        assert_eq!(grid_witnesses(6).unwrap()[1].1.label(), "payne:r=0,s=3,k=2");
        assert_eq!(grid_witnesses(7).unwrap()[2].1.label(), "chiseled-cube:d=7");
        assert!(grid_witnesses(8).is_err());
    }

    #[test]
    fn low_dimensional_grid() {
        let rows = grid_report(3, 5).unwrap();
        assert_eq!(rows.len(), 12);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.quadrant(), Quadrant::ALL[i % 4].flags());
            assert!(r.flags_consistent());
        }
    }
}
