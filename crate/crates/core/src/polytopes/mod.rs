//! Lattice polytopes in vertex, inequality and zonotope form.

mod constructors;
pub mod family;
mod zonotope;

pub use constructors::{
    base_r_simplex, chiseled_pm_cube, cross_polytope, delta_1q, hypersimplex, lecture_hall, payne,
    permutahedron, pm_cube, pyramid, reeve, standard_simplex, unit_cube,
};
pub use family::FamilySpec;
pub use zonotope::zonotope_hrep;

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lattice::{
    coordinates_in_span, count_in_system_within, simplex_inequalities, vertex_box, IntBox, IntMatrix,
    IntVector, LinearSystem,
};

/// Default cap on enumeration work (search nodes or sequences).
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Bounded polyhedron `{x : A x <= b}` with a box containing it.
///
/// The `t`-th dilate is `{A x <= t b}` inside `t` times the box. Extra rows in
/// `cuts` are redundant valid inequalities kept only to prune enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    rows: Vec<Vec<i64>>,
    rhs: Vec<i64>,
    bbox: IntBox,
    cut_rows: Vec<Vec<i64>>,
    cut_rhs: Vec<i64>,
}

impl HRep {
    pub fn new(rows: Vec<Vec<i64>>, rhs: Vec<i64>, bbox: IntBox) -> Result<Self> {
        let n = bbox.dim();
        LinearSystem::new(n, rows.clone(), rhs.iter().map(|&b| b as i128).collect())?;
        if n == 0 {
            return Err(Error::Domain("inequality description in dimension 0".into()));
        }
        Ok(HRep {
            rows,
            rhs,
            bbox,
            cut_rows: Vec::new(),
            cut_rhs: Vec::new(),
        })
    }

    /// Adds redundant inequalities used only for pruning.
    pub fn with_cuts(mut self, rows: Vec<Vec<i64>>, rhs: Vec<i64>) -> Result<Self> {
        LinearSystem::new(self.dim(), rows.clone(), rhs.iter().map(|&b| b as i128).collect())?;
        self.cut_rows.extend(rows);
        self.cut_rhs.extend(rhs);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.bbox.dim()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn rhs(&self) -> &[i64] {
        &self.rhs
    }

    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.rows).expect("validated shape")
    }

    pub fn rhs_vector(&self) -> IntVector {
        IntVector::from_i64s(&self.rhs)
    }

    pub fn bounding_box(&self) -> &IntBox {
        &self.bbox
    }

    pub fn contains(&self, point: &[i64], t: u64) -> bool {
        let t = t as i128;
        point.len() == self.dim()
            && self.rows.iter().zip(&self.rhs).all(|(row, &b)| {
                row.iter().zip(point).map(|(&a, &x)| a as i128 * x as i128).sum::<i128>() <= b as i128 * t
            })
    }

    /// All rows, cuts included, with right-hand sides for the `t`-th dilate.
    pub fn system(&self, t: u64) -> Result<LinearSystem> {
        let rows: Vec<Vec<i64>> = self.rows.iter().chain(&self.cut_rows).cloned().collect();
        let rhs = self
            .rhs
            .iter()
            .chain(&self.cut_rhs)
            .map(|&b| b as i128 * t as i128)
            .collect();
        LinearSystem::new(self.dim(), rows, rhs)
    }

    /// `|tP ∩ Z^n|`, visiting at most `budget` search nodes.
    pub fn count(&self, t: u64, budget: u64) -> Result<BigInt> {
        let t_i = i64::try_from(t).map_err(|_| Error::Domain(format!("dilation {t} too large")))?;
        count_in_system_within(&self.system(t)?, &self.bbox.scaled(t_i), budget)
    }
}

/// A lattice polytope with whichever representations are available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    label: String,
    family: Option<FamilySpec>,
    dim: usize,
    ambient: usize,
    vertices: Option<Vec<IntVector>>,
    hrep: Option<HRep>,
    generators: Option<Vec<IntVector>>,
}

fn affine_rank(vertices: &[IntVector]) -> Result<usize> {
    let first = vertices
        .first()
        .ok_or_else(|| Error::Domain("empty vertex list".into()))?;
    let n = first.dim();
    if let Some(v) = vertices.iter().find(|v| v.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.dim(),
        });
    }
    if vertices.len() == 1 {
        return Ok(0);
    }
    let diffs: Vec<IntVector> = vertices[1..].iter().map(|v| v.sub(first)).collect();
    Ok(IntMatrix::from_row_vectors(&diffs)?.rank())
}

impl Polytope {
    /// Convex hull of the given lattice points.
    pub fn from_vertices(label: impl Into<String>, vertices: Vec<IntVector>) -> Result<Self> {
        let dim = affine_rank(&vertices)?;
        Ok(Polytope {
            label: label.into(),
            family: None,
            dim,
            ambient: vertices[0].dim(),
            vertices: Some(vertices),
            hrep: None,
            generators: None,
        })
    }

    /// Polytope given by inequalities only; `dim` is taken on trust.
    pub fn from_hrep(label: impl Into<String>, dim: usize, hrep: HRep) -> Result<Self> {
        if dim > hrep.dim() {
            return Err(Error::DimensionMismatch {
                expected: hrep.dim(),
                found: dim,
            });
        }
        Ok(Polytope {
            label: label.into(),
            family: None,
            dim,
            ambient: hrep.dim(),
            vertices: None,
            hrep: Some(hrep),
            generators: None,
        })
    }

    /// Zonotope `{Σ λ_k g_k : 0 <= λ_k <= 1}`.
    pub fn zonotope(label: impl Into<String>, generators: Vec<IntVector>) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::Domain("zonotope needs at least one generator".into()))?;
        let n = first.dim();
        if let Some(g) = generators.iter().find(|g| g.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.dim(),
            });
        }
        if generators.iter().any(IntVector::is_zero) {
            return Err(Error::Domain("zero generator".into()));
        }
        let dim = IntMatrix::from_row_vectors(&generators)?.rank();
        Ok(Polytope {
            label: label.into(),
            family: None,
            dim,
            ambient: n,
            vertices: None,
            hrep: None,
            generators: Some(generators),
        })
    }

    /// Attaches a matching inequality description.
    pub fn with_hrep(mut self, hrep: HRep) -> Result<Self> {
        if hrep.dim() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: hrep.dim(),
            });
        }
        self.hrep = Some(hrep);
        Ok(self)
    }

    pub(crate) fn with_family(mut self, family: FamilySpec) -> Self {
        self.label = family.to_string();
        self.family = Some(family);
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn family(&self) -> Option<&FamilySpec> {
        self.family.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> Option<&[IntVector]> {
        self.vertices.as_deref()
    }

    pub fn hrep(&self) -> Option<&HRep> {
        self.hrep.as_ref()
    }

    pub fn generators(&self) -> Option<&[IntVector]> {
        self.generators.as_deref()
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.as_ref().is_some_and(|v| v.len() == self.dim + 1)
    }

    /// Inequality description suitable for counting, in coordinates where the
    /// polytope is full-dimensional when it had to be derived.
    pub fn counting_hrep(&self) -> Result<HRep> {
        if let Some(h) = &self.hrep {
            return Ok(h.clone());
        }
        if self.is_simplex() {
            let vs = full_rank_simplex(self.vertices.as_ref().unwrap())?;
            let (a, b) = simplex_inequalities(&vs)?;
            let rows = a
                .to_i64_rows()
                .ok_or_else(|| Error::Unsupported("facet normal exceeds 64 bits".into()))?;
            let rhs = b
                .to_i64s()
                .ok_or_else(|| Error::Unsupported("facet offset exceeds 64 bits".into()))?;
            return HRep::new(rows, rhs, vertex_box(&vs)?);
        }
        if let Some(g) = &self.generators {
            return zonotope_hrep(g);
        }
        Err(Error::Unsupported(format!(
            "{}: counting needs inequalities, a simplex or zonotope generators",
            self.label
        )))
    }

    /// `|tP ∩ Z^n|`.
    pub fn count_points(&self, t: u64, budget: u64) -> Result<BigInt> {
        self.counting_hrep()?.count(t, budget)
    }
}

impl fmt::Display for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {}", self.label, self.dim)?;
        if self.ambient != self.dim {
            write!(f, " in R^{}", self.ambient)?;
        }
        write!(f, ")")
    }
}

/// Re-expresses a simplex that is not full-dimensional in its ambient space as
/// a full-dimensional simplex with the same Ehrhart data, first vertex at the
/// origin.
pub fn full_rank_simplex(vertices: &[IntVector]) -> Result<Vec<IntVector>> {
    let dim = affine_rank(vertices)?;
    if dim + 1 != vertices.len() {
        return Err(Error::AffinelyDependent);
    }
    let n = vertices[0].dim();
    if n == dim {
        return Ok(vertices.to_vec());
    }
    let diffs: Vec<IntVector> = vertices[1..].iter().map(|v| v.sub(&vertices[0])).collect();
    let (images, rank) = coordinates_in_span(&diffs)?;
    debug_assert_eq!(rank, dim);
    let mut out = vec![IntVector::zeros(rank)];
    out.extend(images);
    Ok(out)
}

pub(crate) fn to_i64(v: &BigInt, what: &str) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::Unsupported(format!("{what} exceeds 64 bits")))
}
