//! Biderivation spaces.
//!
//! A bilinear map `phi: g x g -> M` is a biderivation when both partial maps
//! are cocycle-like in each slot:
//!
//! ```text
//! phi(x, [y,z]) = psi(y) phi(x,z) - psi(z) phi(x,y)
//! phi([y,z], x) = psi(y) phi(z,x) - psi(z) phi(y,x)
//! ```
//!
//! Solving for all such maps is one large exact linear system over the tensor
//! entries. The optimized solver parameterizes symmetric maps over pairs
//! `i <= j` to halve the unknown count; [`space_dimension_oracle`] is a
//! deliberately naive second implementation (all triples, dense rows, explicit
//! symmetry equations) kept as a cross-check.

use crate::algebra::{LieAlgebra, Representation};
use crate::error::{CoreError, Result};
use crate::linalg::{self, Eliminator, Rational, Subspace};
use num_traits::Zero;

/// Bilinear map `g x g -> M` stored as the dense coefficient tensor
/// `values[i][j][k]` = coefficient of module basis `k` in `phi(e_i, e_j)`.
#[derive(Clone, PartialEq)]
pub struct BilinearMap {
    left_dim: usize,
    right_dim: usize,
    module_dim: usize,
    values: Vec<Vec<Vec<Rational>>>,
}

impl BilinearMap {
    pub fn zero(left_dim: usize, right_dim: usize, module_dim: usize) -> Self {
        BilinearMap {
            left_dim,
            right_dim,
            module_dim,
            values: vec![vec![vec![Rational::zero(); module_dim]; right_dim]; left_dim],
        }
    }

    pub fn from_values(values: Vec<Vec<Vec<Rational>>>, module_dim: usize) -> Result<Self> {
        let left_dim = values.len();
        let right_dim = values.first().map_or(0, Vec::len);
        for row in &values {
            if row.len() != right_dim || row.iter().any(|v| v.len() != module_dim) {
                return Err(CoreError::ShapeMismatch(
                    "ragged bilinear map tensor".into(),
                ));
            }
        }
        Ok(BilinearMap { left_dim, right_dim, module_dim, values })
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    /// Coordinates of `phi(e_i, e_j)`.
    pub fn value(&self, i: usize, j: usize) -> &[Rational] {
        &self.values[i][j]
    }

    pub fn set_value(&mut self, i: usize, j: usize, v: Vec<Rational>) {
        assert_eq!(v.len(), self.module_dim);
        self.values[i][j] = v;
    }

    /// Bilinear evaluation on coordinate vectors.
    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.left_dim);
        assert_eq!(y.len(), self.right_dim);
        let mut out = vec![Rational::zero(); self.module_dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                for (o, v) in out.iter_mut().zip(&self.values[i][j]) {
                    if !v.is_zero() {
                        *o += &s * v;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values
            .iter()
            .all(|r| r.iter().all(|v| v.iter().all(Zero::is_zero)))
    }

    pub fn is_symmetric(&self) -> bool {
        if self.left_dim != self.right_dim {
            return false;
        }
        for i in 0..self.left_dim {
            for j in i + 1..self.right_dim {
                if self.values[i][j] != self.values[j][i] {
                    return false;
                }
            }
        }
        true
    }

    /// Row-major flattening: index `(i * right_dim + j) * module_dim + k`.
    pub fn flatten(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.left_dim * self.right_dim * self.module_dim);
        for row in &self.values {
            for v in row {
                out.extend_from_slice(v);
            }
        }
        out
    }

    pub fn from_flat(
        left_dim: usize,
        right_dim: usize,
        module_dim: usize,
        flat: &[Rational],
    ) -> Self {
        assert_eq!(flat.len(), left_dim * right_dim * module_dim, "flat length mismatch");
        let mut map = BilinearMap::zero(left_dim, right_dim, module_dim);
        for i in 0..left_dim {
            for j in 0..right_dim {
                let base = (i * right_dim + j) * module_dim;
                map.values[i][j] = flat[base..base + module_dim].to_vec();
            }
        }
        map
    }
}

impl std::fmt::Debug for BilinearMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "BilinearMap({} x {} -> {})",
            self.left_dim, self.right_dim, self.module_dim
        )
    }
}

/// Shape and provenance data attached to a solved space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceMetadata {
    pub algebra: String,
    pub module: String,
    pub symmetric: bool,
    /// Nominal assembled system shape (rows emitted before any early stop).
    pub constraint_rows: usize,
    pub constraint_cols: usize,
}

/// A solved biderivation space: canonical basis plus assembly metadata.
#[derive(Clone, Debug)]
pub struct SpaceReport {
    pub dimension: usize,
    pub basis: Vec<BilinearMap>,
    pub metadata: SpaceMetadata,
}

/// Triangular pair index for the symmetric parameterization: pairs `(i, j)`
/// with `i <= j` enumerated row by row.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * n - i * (i + 1) / 2 + j
}

/// Computes the space of biderivations of `g` with values in the module of
/// `rep`, optionally restricted to symmetric maps.
///
/// Symmetric maps are parameterized over pairs `i <= j`, so the unknown count
/// is `n(n+1)/2 * m` instead of `n^2 * m`; both slot identities are emitted
/// for every basis element and bracket pair either way, in a fixed order
/// (slot, then acting index, then pair, then module coordinate).
pub fn biderivation_space(
    g: &LieAlgebra,
    rep: &Representation,
    symmetric: bool,
) -> Result<SpaceReport> {
    if rep.algebra_dim() != g.dim() {
        return Err(CoreError::ShapeMismatch(format!(
            "representation is over a dimension-{} algebra, got dimension {}",
            rep.algebra_dim(),
            g.dim()
        )));
    }
    let n = g.dim();
    let m = rep.module_dim();
    let unknowns = if symmetric {
        n * (n + 1) / 2 * m
    } else {
        n * n * m
    };
    let uidx = |i: usize, j: usize, k: usize| {
        if symmetric {
            pair_index(n, i, j) * m + k
        } else {
            (i * n + j) * m + k
        }
    };

    let mut elim = Eliminator::new(unknowns);
    let nominal_rows = 2 * n * (n * n.saturating_sub(1) / 2) * m;
    'assembly: for slot in 0..2u8 {
        for x in 0..n {
            for y in 0..n {
                for z in y + 1..n {
                    let lie = g.bracket_basis(y, z);
                    for t in 0..m {
                        if elim.saturated() {
                            break 'assembly;
                        }
                        let mut row: Vec<(usize, Rational)> = Vec::new();
                        // phi(x, [y,z]) resp. phi([y,z], x).
                        for (l, c) in lie.iter().enumerate() {
                            if !c.is_zero() {
                                let idx = if slot == 0 { uidx(x, l, t) } else { uidx(l, x, t) };
                                row.push((idx, c.clone()));
                            }
                        }
                        // -psi(y) phi(x,z) + psi(z) phi(x,y), slot-mirrored.
                        for a in 0..m {
                            let py = rep.matrix(y).at(t, a);
                            if !py.is_zero() {
                                let idx = if slot == 0 { uidx(x, z, a) } else { uidx(z, x, a) };
                                row.push((idx, -py));
                            }
                            let pz = rep.matrix(z).at(t, a);
                            if !pz.is_zero() {
                                let idx = if slot == 0 { uidx(x, y, a) } else { uidx(y, x, a) };
                                row.push((idx, pz.clone()));
                            }
                        }
                        elim.insert_sparse(row);
                    }
                }
            }
        }
    }

    let space = linalg::kernel_of(elim);
    let basis = space
        .basis_rows()
        .map(|flat| {
            if symmetric {
                let mut map = BilinearMap::zero(n, n, m);
                for i in 0..n {
                    for j in i..n {
                        let base = pair_index(n, i, j) * m;
                        let v = flat[base..base + m].to_vec();
                        if i != j {
                            map.values[j][i] = v.clone();
                        }
                        map.values[i][j] = v;
                    }
                }
                map
            } else {
                BilinearMap::from_flat(n, n, m, flat)
            }
        })
        .collect::<Vec<_>>();
    Ok(SpaceReport {
        dimension: space.dim(),
        basis,
        metadata: SpaceMetadata {
            algebra: g.name().to_string(),
            module: format!("module({m})"),
            symmetric,
            constraint_rows: nominal_rows,
            constraint_cols: unknowns,
        },
    })
}

/// Space of symmetric biderivations with values in the algebra itself under
/// the adjoint action — the commutative compatible products on `g`.
pub fn abd_space(g: &LieAlgebra) -> Result<SpaceReport> {
    let mut report = biderivation_space(g, &g.adjoint(), true)?;
    report.metadata.module = "adjoint".into();
    Ok(report)
}

/// One failed constraint instance, with the exact residual vector.
#[derive(Clone, Debug, PartialEq)]
pub enum BiderViolation {
    /// Slot 0: the second-argument identity at `(x, y, z)`; slot 1: the
    /// first-argument identity.
    Identity { slot: u8, x: usize, y: usize, z: usize, residual: Vec<Rational> },
    /// `phi(x, y) != phi(y, x)`.
    Symmetry { x: usize, y: usize, residual: Vec<Rational> },
}

/// Outcome of a pointwise biderivation check.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub violations: Vec<BiderViolation>,
}

impl CheckReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Converts the first violation, if any, into an error.
    pub fn into_result(self) -> Result<()> {
        match self.violations.into_iter().next() {
            None => Ok(()),
            Some(BiderViolation::Identity { slot, x, y, z, .. }) => {
                Err(CoreError::NotABiderivation { slot: usize::from(slot), x, y, z })
            }
            Some(BiderViolation::Symmetry { x, y, .. }) => Err(CoreError::InvalidStructure(
                format!("map is not symmetric: values differ at basis pair ({x}, {y})"),
            )),
        }
    }
}

/// Evaluates every constraint instance of the biderivation identities (and
/// symmetry, when requested) on `phi`, collecting all violations.
pub fn check_biderivation(
    g: &LieAlgebra,
    rep: &Representation,
    phi: &BilinearMap,
    symmetric: bool,
) -> Result<CheckReport> {
    let n = g.dim();
    let m = rep.module_dim();
    if rep.algebra_dim() != n {
        return Err(CoreError::ShapeMismatch(
            "representation/algebra dimension mismatch".into(),
        ));
    }
    if phi.left_dim() != n || phi.right_dim() != n || phi.module_dim() != m {
        return Err(CoreError::ShapeMismatch(format!(
            "bilinear map is {}x{}->{}, expected {n}x{n}->{m}",
            phi.left_dim(),
            phi.right_dim(),
            phi.module_dim()
        )));
    }
    let mut report = CheckReport::default();
    for slot in 0..2u8 {
        for x in 0..n {
            for y in 0..n {
                for z in y + 1..n {
                    let lie = g.bracket_basis(y, z);
                    let (v_bracket, v_xz, v_xy) = if slot == 0 {
                        let mut acc = vec![Rational::zero(); m];
                        for (l, c) in lie.iter().enumerate() {
                            if !c.is_zero() {
                                for (a, pv) in acc.iter_mut().zip(phi.value(x, l)) {
                                    *a += c * pv;
                                }
                            }
                        }
                        (acc, phi.value(x, z), phi.value(x, y))
                    } else {
                        let mut acc = vec![Rational::zero(); m];
                        for (l, c) in lie.iter().enumerate() {
                            if !c.is_zero() {
                                for (a, pv) in acc.iter_mut().zip(phi.value(l, x)) {
                                    *a += c * pv;
                                }
                            }
                        }
                        (acc, phi.value(z, x), phi.value(y, x))
                    };
                    let ty = rep.matrix(y).mul_vec(v_xz);
                    let tz = rep.matrix(z).mul_vec(v_xy);
                    let residual: Vec<Rational> = v_bracket
                        .iter()
                        .zip(ty.iter().zip(&tz))
                        .map(|(b, (p, q))| b - p + q)
                        .collect();
                    if residual.iter().any(|r| !r.is_zero()) {
                        report.violations.push(BiderViolation::Identity {
                            slot,
                            x,
                            y,
                            z,
                            residual,
                        });
                    }
                }
            }
        }
    }
    if symmetric {
        for x in 0..n {
            for y in x + 1..n {
                let residual: Vec<Rational> = phi
                    .value(x, y)
                    .iter()
                    .zip(phi.value(y, x))
                    .map(|(a, b)| a - b)
                    .collect();
                if residual.iter().any(|r| !r.is_zero()) {
                    report.violations.push(BiderViolation::Symmetry { x, y, residual });
                }
            }
        }
    }
    Ok(report)
}

/// One failed instance of the compatibility identity
/// `[x,y] o z = x o (y o z) - y o (x o z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CpaViolation {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub residual: Vec<Rational>,
}

/// Outcome of the commutative-product compatibility check: the linear
/// biderivation/symmetry conditions plus the quadratic identity above.
#[derive(Clone, Debug)]
pub struct CpaReport {
    pub abd: CheckReport,
    pub cpa_violations: Vec<CpaViolation>,
}

impl CpaReport {
    pub fn is_clean(&self) -> bool {
        self.abd.is_clean() && self.cpa_violations.is_empty()
    }
}

/// Checks whether an algebra-valued product `o` is a commutative compatible
/// product in the strong sense: symmetric biderivation for the adjoint action
/// plus `[x,y] o z = x o (y o z) - y o (x o z)` on all basis triples. The
/// latter is quadratic in `o`, so this is a checker, not a space solver.
pub fn check_cpa(g: &LieAlgebra, product: &BilinearMap) -> Result<CpaReport> {
    let n = g.dim();
    if product.left_dim() != n || product.right_dim() != n || product.module_dim() != n {
        return Err(CoreError::ShapeMismatch(
            "product must be algebra-valued (n x n -> n)".into(),
        ));
    }
    let abd = check_biderivation(g, &g.adjoint(), product, true)?;
    let mut cpa_violations = Vec::new();
    let unit = |i: usize| {
        let mut v = vec![Rational::zero(); n];
        v[i] = linalg::rat(1);
        v
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = product.eval(&g.bracket_basis(x, y), &unit(z));
                let t1 = product.eval(&unit(x), &product.eval(&unit(y), &unit(z)));
                let t2 = product.eval(&unit(y), &product.eval(&unit(x), &unit(z)));
                let residual: Vec<Rational> = lhs
                    .iter()
                    .zip(t1.iter().zip(&t2))
                    .map(|(l, (a, b))| l - a + b)
                    .collect();
                if residual.iter().any(|r| !r.is_zero()) {
                    cpa_violations.push(CpaViolation { x, y, z, residual });
                }
            }
        }
    }
    Ok(CpaReport { abd, cpa_violations })
}

/// Independent dimension oracle.
///
/// Assembles the full constraint system with no shortcuts: unknowns are all
/// `n^2 m` tensor entries, every ordered basis triple contributes both slot
/// identities as dense rows, and the symmetric case adds explicit equations
/// `phi(i,j) = phi(j,i)` instead of merging unknowns. Kept deliberately
/// separate from [`biderivation_space`] so the two implementations can only
/// agree by being right.
pub fn space_dimension_oracle(g: &LieAlgebra, rep: &Representation, symmetric: bool) -> usize {
    let n = g.dim();
    let m = rep.module_dim();
    let uidx = |i: usize, j: usize, k: usize| (i * n + j) * m + k;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lie = g.bracket_basis(y, z);
                for t in 0..m {
                    // phi(x, [y,z]) - psi(y)phi(x,z) + psi(z)phi(x,y) = 0
                    let mut row = vec![Rational::zero(); n * n * m];
                    for (l, c) in lie.iter().enumerate() {
                        row[uidx(x, l, t)] += c;
                    }
                    for a in 0..m {
                        row[uidx(x, z, a)] -= rep.matrix(y).at(t, a);
                        row[uidx(x, y, a)] += rep.matrix(z).at(t, a);
                    }
                    rows.push(row);
                    // phi([y,z], x) - psi(y)phi(z,x) + psi(z)phi(y,x) = 0
                    let mut row = vec![Rational::zero(); n * n * m];
                    for (l, c) in lie.iter().enumerate() {
                        row[uidx(l, x, t)] += c;
                    }
                    for a in 0..m {
                        row[uidx(z, x, a)] -= rep.matrix(y).at(t, a);
                        row[uidx(y, x, a)] += rep.matrix(z).at(t, a);
                    }
                    rows.push(row);
                }
            }
        }
    }
    if symmetric {
        for i in 0..n {
            for j in 0..n {
                for k in 0..m {
                    let mut row = vec![Rational::zero(); n * n * m];
                    row[uidx(i, j, k)] += linalg::rat(1);
                    row[uidx(j, i, k)] -= linalg::rat(1);
                    rows.push(row);
                }
            }
        }
    }
    let mut elim = Eliminator::new(n * n * m);
    for row in &rows {
        elim.insert_dense(row);
    }
    n * n * m - elim.rank()
}

/// Flattened full-coordinate span of a report's basis, for containment tests
/// against spaces solved in other parameterizations.
pub fn flattened_span(report: &SpaceReport) -> Subspace {
    let ambient = report
        .basis
        .first()
        .map_or(0, |b| b.left_dim() * b.right_dim() * b.module_dim());
    Subspace::span(ambient, report.basis.iter().map(BilinearMap::flatten))
}
