//! The polytope families.

use num_bigint::BigInt;

use super::{FamilySpec, HRep, Polytope};
use crate::error::{Error, Result};
use crate::lattice::{IntBox, IntVector};

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg()))
    }
}

fn vertices(points: &[Vec<i64>]) -> Vec<IntVector> {
    points.iter().map(|p| IntVector::from_i64s(p)).collect()
}

fn sign_vectors(d: usize) -> impl Iterator<Item = Vec<i64>> {
    (0..1u64 << d).map(move |mask| (0..d).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect())
}

/// `conv(0, e_1, ..., e_d)`.
pub fn standard_simplex(d: usize) -> Result<Polytope> {
    require(d >= 1, || format!("standard simplex needs d >= 1, got {d}"))?;
    let mut pts = vec![vec![0; d]];
    for i in 0..d {
        let mut e = vec![0; d];
        e[i] = 1;
        pts.push(e);
    }
    Ok(Polytope::from_vertices("", vertices(&pts))?.with_family(FamilySpec::StandardSimplex { d }))
}

/// `conv(±e_1, ..., ±e_d)`.
pub fn cross_polytope(d: usize) -> Result<Polytope> {
    require(d >= 1, || format!("cross-polytope needs d >= 1, got {d}"))?;
    require(d <= 20, || format!("cross-polytope with d = {d} has too many facets"))?;
    let mut pts = Vec::with_capacity(2 * d);
    for i in 0..d {
        for s in [1, -1] {
            let mut e = vec![0; d];
            e[i] = s;
            pts.push(e);
        }
    }
    let rows: Vec<Vec<i64>> = sign_vectors(d).collect();
    let rhs = vec![1; rows.len()];
    let hrep = HRep::new(rows, rhs, IntBox::new(vec![-1; d], vec![1; d])?)?;
    // |x_1| + ... + |x_k| <= 1 for each proper prefix, so partial assignments
    // are cut as soon as they leave the projected cross-polytope
    let mut cut_rows = Vec::new();
    for k in 1..d {
        for sigma in sign_vectors(k) {
            let mut row = sigma;
            row.resize(d, 0);
            cut_rows.push(row);
        }
    }
    let cut_rhs = vec![1; cut_rows.len()];
    let hrep = hrep.with_cuts(cut_rows, cut_rhs)?;
    Ok(Polytope::from_vertices("", vertices(&pts))?
        .with_hrep(hrep)?
        .with_family(FamilySpec::CrossPolytope { d }))
}

fn cube(d: usize, lo: i64, family: FamilySpec) -> Result<Polytope> {
    require(d >= 1, || format!("cube needs d >= 1, got {d}"))?;
    require(d <= 20, || format!("cube with d = {d} has too many vertices"))?;
    let mut rows = Vec::with_capacity(2 * d);
    let mut rhs = Vec::with_capacity(2 * d);
    for i in 0..d {
        let mut e = vec![0; d];
        e[i] = 1;
        rows.push(e.clone());
        rhs.push(1);
        e[i] = -1;
        rows.push(e);
        rhs.push(-lo);
    }
    let hrep = HRep::new(rows, rhs, IntBox::new(vec![lo; d], vec![1; d])?)?;
    let pts: Vec<Vec<i64>> = (0..1u64 << d)
        .map(|mask| (0..d).map(|i| if mask >> i & 1 == 1 { 1 } else { lo }).collect())
        .collect();
    Ok(Polytope::from_vertices("", vertices(&pts))?.with_hrep(hrep)?.with_family(family))
}

/// `[0,1]^d`.
pub fn unit_cube(d: usize) -> Result<Polytope> {
    cube(d, 0, FamilySpec::UnitCube { d })
}

/// `[-1,1]^d`.
pub fn pm_cube(d: usize) -> Result<Polytope> {
    cube(d, -1, FamilySpec::PmCube { d })
}

/// Reeve tetrahedron `conv(0, e_1, e_2, (1,1,h))`.
pub fn reeve(h: u64) -> Result<Polytope> {
    require(h >= 1, || "Reeve tetrahedron needs h >= 1".into())?;
    let h = i64::try_from(h).map_err(|_| Error::Domain(format!("h = {h} too large")))?;
    let pts = vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, h]];
    Ok(Polytope::from_vertices("", vertices(&pts))?.with_family(FamilySpec::Reeve { h: h as u64 }))
}

/// `conv(e_1, ..., e_d, -q)` for weakly increasing positive `q`.
pub fn delta_1q(q: &[u64]) -> Result<Polytope> {
    simplex_1q(q, FamilySpec::Delta1q { q: q.to_vec() })
}

fn simplex_1q(q: &[u64], family: FamilySpec) -> Result<Polytope> {
    let d = q.len();
    require(d >= 1, || "q must be nonempty".into())?;
    require(q.iter().all(|&x| x >= 1), || format!("q must be positive, got {q:?}"))?;
    require(q.windows(2).all(|w| w[0] <= w[1]), || {
        format!("q must be weakly increasing, got {q:?}")
    })?;
    let mut vs = Vec::with_capacity(d + 1);
    for i in 0..d {
        let mut e = vec![BigInt::from(0); d];
        e[i] = BigInt::from(1);
        vs.push(IntVector::new(e));
    }
    vs.push(IntVector::new(q.iter().map(|&x| -BigInt::from(x)).collect()));
    Ok(Polytope::from_vertices("", vs)?.with_family(family))
}

/// The simplex with `q = (1^(sk-1), s^(r+1))`, of dimension `sk + r`.
pub fn payne(r: u64, s: u64, k: u64) -> Result<Polytope> {
    require(s >= 3, || format!("payne needs s >= 3, got {s}"))?;
    require(k >= r + 2, || format!("payne needs k >= r + 2, got r = {r}, k = {k}"))?;
    let ones = s
        .checked_mul(k)
        .filter(|&n| n + r <= 4096)
        .ok_or_else(|| Error::Domain("payne dimension too large".into()))?
        - 1;
    let mut q = vec![1u64; ones as usize];
    q.extend(std::iter::repeat(s).take(r as usize + 1));
    simplex_1q(&q, FamilySpec::Payne { r, s, k })
}

/// The base-`r` simplex, `q_k = (r-1) r^(k-1)`.
pub fn base_r_simplex(r: u64, d: usize) -> Result<Polytope> {
    require(r >= 2, || format!("base-r simplex needs r >= 2, got {r}"))?;
    require(d >= 1, || format!("base-r simplex needs d >= 1, got {d}"))?;
    let mut q = Vec::with_capacity(d);
    let mut p = r - 1;
    for _ in 0..d {
        q.push(p);
        p = p
            .checked_mul(r)
            .filter(|&v| v <= i64::MAX as u64)
            .ok_or_else(|| Error::Domain("base-r entries overflow".into()))?;
    }
    simplex_1q(&q, FamilySpec::BaseR { r, d })
}

/// `{0 <= x_1/s_1 <= ... <= x_d/s_d <= 1}`.
pub fn lecture_hall(s: &[u64]) -> Result<Polytope> {
    let d = s.len();
    require(d >= 1, || "s must be nonempty".into())?;
    require(s.iter().all(|&x| x >= 1), || format!("s must be positive, got {s:?}"))?;
    require(s.iter().all(|&x| x <= 1 << 30), || "s entries too large".into())?;
    let si: Vec<i64> = s.iter().map(|&x| x as i64).collect();
    let mut rows = Vec::with_capacity(d + 1);
    let mut rhs = Vec::with_capacity(d + 1);
    let mut first = vec![0; d];
    first[0] = -1;
    rows.push(first);
    rhs.push(0);
    for i in 0..d - 1 {
        let mut row = vec![0; d];
        row[i] = si[i + 1];
        row[i + 1] = -si[i];
        rows.push(row);
        rhs.push(0);
    }
    let mut last = vec![0; d];
    last[d - 1] = 1;
    rows.push(last);
    rhs.push(si[d - 1]);
    let hrep = HRep::new(rows, rhs, IntBox::new(vec![0; d], si.clone())?)?;
    let mut pts = vec![vec![0; d]];
    for j in 0..d {
        pts.push((0..d).map(|i| if i < j { 0 } else { si[i] }).collect());
    }
    Ok(Polytope::from_vertices("", vertices(&pts))?
        .with_hrep(hrep)?
        .with_family(FamilySpec::LectureHall { s: s.to_vec() }))
}

/// `[-1,1]^d` with every vertex cut off at lattice distance 1 along its edges.
pub fn chiseled_pm_cube(d: usize) -> Result<Polytope> {
    require(d >= 2, || format!("chiseled cube needs d >= 2, got {d}"))?;
    require(d <= 16, || format!("chiseled cube with d = {d} has too many facets"))?;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..d {
        for s in [1, -1] {
            let mut e = vec![0; d];
            e[i] = s;
            rows.push(e);
            rhs.push(1);
        }
    }
    for sigma in sign_vectors(d) {
        rows.push(sigma);
        rhs.push(d as i64 - 1);
    }
    let hrep = HRep::new(rows, rhs, IntBox::new(vec![-1; d], vec![1; d])?)?;
    // the new vertices are the edge midpoints of the cube: one coordinate 0,
    // the others ±1 (each is shared by the two cube vertices of its edge)
    let mut pts = Vec::new();
    for i in 0..d {
        for sigma in sign_vectors(d - 1) {
            let mut p = sigma;
            p.insert(i, 0);
            pts.push(p);
        }
    }
    Ok(Polytope::from_vertices("", vertices(&pts))?
        .with_hrep(hrep)?
        .with_family(FamilySpec::ChiseledPmCube { d }))
}

/// `conv{x in {0,1}^d : Σx = k}`, of dimension `d - 1`.
pub fn hypersimplex(d: usize, k: usize) -> Result<Polytope> {
    require(d >= 2 && k >= 1 && k < d, || format!("hypersimplex needs 1 <= k <= d-1, got d = {d}, k = {k}"))?;
    require(d <= 20, || format!("hypersimplex with d = {d} has too many vertices"))?;
    let pts: Vec<Vec<i64>> = (0..1u64 << d)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..d).map(|i| (m >> i & 1) as i64).collect())
        .collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..d {
        let mut e = vec![0; d];
        e[i] = 1;
        rows.push(e.clone());
        rhs.push(1);
        e[i] = -1;
        rows.push(e);
        rhs.push(0);
    }
    rows.push(vec![1; d]);
    rhs.push(k as i64);
    rows.push(vec![-1; d]);
    rhs.push(-(k as i64));
    let hrep = HRep::new(rows, rhs, IntBox::new(vec![0; d], vec![1; d])?)?;
    Ok(Polytope::from_vertices("", vertices(&pts))?
        .with_hrep(hrep)?
        .with_family(FamilySpec::Hypersimplex { d, k }))
}

/// The zonotope with generators `e_i - e_j`, `1 <= i < j <= d+1`.
pub fn permutahedron(d: usize) -> Result<Polytope> {
    require(d >= 1, || format!("permutahedron needs d >= 1, got {d}"))?;
    let n = d + 1;
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut g = vec![0; n];
            g[i] = 1;
            g[j] = -1;
            gens.push(IntVector::from_i64s(&g));
        }
    }
    Ok(Polytope::zonotope("", gens)?.with_family(FamilySpec::Permutahedron { d }))
}

/// `k`-fold lattice pyramid `conv(P × {0}, e_{n+1})`, iterated.
pub fn pyramid(p: &Polytope, k: usize) -> Result<Polytope> {
    require(k >= 1, || "pyramid count must be at least 1".into())?;
    let mut cur = p.clone();
    for _ in 0..k {
        cur = pyramid_once(&cur)?;
    }
    let family = p.family().cloned().map(|f| f.pyramid(k));
    let label = match &family {
        Some(f) => f.to_string(),
        None if k == 1 => format!("pyr:{}", p.label()),
        None => format!("pyr^{k}:{}", p.label()),
    };
    cur.label = label;
    cur.family = family;
    Ok(cur)
}

fn pyramid_once(p: &Polytope) -> Result<Polytope> {
    let vs = p.vertices().ok_or_else(|| {
        Error::Unsupported(format!(
            "{}: pyramid needs a vertex description; supply the vertices",
            p.label()
        ))
    })?;
    let n = p.ambient_dim();
    let mut out: Vec<IntVector> = vs.iter().map(|v| v.extended(BigInt::from(0))).collect();
    out.push(IntVector::unit(n + 1, n));
    let mut q = Polytope::from_vertices(p.label(), out)?;
    if let Some(h) = p.hrep() {
        // x in (1 - y) P and 0 <= y <= 1
        let lift = |rows: &[Vec<i64>], rhs: &[i64]| -> (Vec<Vec<i64>>, Vec<i64>) {
            let rows = rows
                .iter()
                .zip(rhs)
                .map(|(r, &b)| {
                    let mut r = r.clone();
                    r.push(b);
                    r
                })
                .collect();
            (rows, rhs.to_vec())
        };
        let (mut rows, mut rhs) = lift(h.rows(), h.rhs());
        let mut neg_y = vec![0; n + 1];
        neg_y[n] = -1;
        rows.push(neg_y);
        rhs.push(0);
        let bx = h.bounding_box();
        let mut lo: Vec<i64> = bx.lo.iter().map(|&l| l.min(0)).collect();
        let mut hi: Vec<i64> = bx.hi.iter().map(|&u| u.max(0)).collect();
        lo.push(0);
        hi.push(1);
        let (cut_rows, cut_rhs) = lift(&h.cut_rows, &h.cut_rhs);
        let lifted = HRep::new(rows, rhs, IntBox::new(lo, hi)?)?.with_cuts(cut_rows, cut_rhs)?;
        q = q.with_hrep(lifted)?;
    }
    Ok(q)
}

impl FamilySpec {
    /// Constructs the polytope this spec names.
    pub fn build(&self) -> Result<Polytope> {
        match self {
            FamilySpec::StandardSimplex { d } => standard_simplex(*d),
            FamilySpec::CrossPolytope { d } => cross_polytope(*d),
            FamilySpec::UnitCube { d } => unit_cube(*d),
            FamilySpec::PmCube { d } => pm_cube(*d),
            FamilySpec::Reeve { h } => reeve(*h),
            FamilySpec::Delta1q { q } => delta_1q(q),
            FamilySpec::Payne { r, s, k } => payne(*r, *s, *k),
            FamilySpec::BaseR { r, d } => base_r_simplex(*r, *d),
            FamilySpec::LectureHall { s } => lecture_hall(s),
            FamilySpec::ChiseledPmCube { d } => chiseled_pm_cube(*d),
            FamilySpec::Hypersimplex { d, k } => hypersimplex(*d, *k),
            FamilySpec::Permutahedron { d } => permutahedron(*d),
            FamilySpec::Pyramid { k, base } => pyramid(&base.build()?, *k),
        }
    }
}
