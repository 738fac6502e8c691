//! The even-subalgebra modules `L_n^(0)` and `L_n^(1)`, given by the
//! matrices of `E^2`, `F^2`, `H` and the Casimir `Lambda` on the `v` basis,
//! and their match with the dual Hahn pair.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::leonard::is_dual_almost_bipartite;
use crate::matrix::RationalMatrix;
use crate::params::build_params;
use crate::rational::Rational;
use crate::repr::{matrix_l_u_basis, matrix_lstar_u_basis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "u8")]
pub enum ModuleKind {
    Zero,
    One,
}

impl From<ModuleKind> for u8 {
    fn from(kind: ModuleKind) -> u8 {
        kind.index()
    }
}

impl ModuleKind {
    pub fn from_index(kind: u8) -> Result<Self> {
        match kind {
            0 => Ok(ModuleKind::Zero),
            1 => Ok(ModuleKind::One),
            _ => Err(Error::InvalidArgument(format!(
                "module kind must be 0 or 1, got {kind}"
            ))),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            ModuleKind::Zero => 0,
            ModuleKind::One => 1,
        }
    }

    /// `(r, s)` of the dual Hahn pair matched by the module's example pair.
    pub fn dual_hahn_rs(self) -> (Rational, Rational) {
        match self {
            ModuleKind::Zero => (Rational::new(-1, 2), Rational::new(1, 2)),
            ModuleKind::One => (Rational::new(1, 2), Rational::new(-1, 2)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EvenModule {
    pub kind: ModuleKind,
    pub n: usize,
    pub dim: usize,
    pub esq: RationalMatrix,
    pub fsq: RationalMatrix,
    pub h: RationalMatrix,
    pub lambda: RationalMatrix,
}

/// `n(n+2)/2`.
pub fn casimir_scalar(n: usize) -> Rational {
    Rational::from(n * (n + 2)) / Rational::from(2usize)
}

pub fn build_even_module(kind: ModuleKind, n: usize) -> Result<EvenModule> {
    if kind == ModuleKind::One && n == 0 {
        return Err(Error::InvalidArgument("L_n^(1) needs n >= 1".into()));
    }
    // Kind 1 shifts every formula by one step of the v-index.
    let o = kind.index() as i64;
    let dim = match kind {
        ModuleKind::Zero => n / 2 + 1,
        ModuleKind::One => n.div_ceil(2),
    };
    let ni = n as i64;
    let mut esq = RationalMatrix::zeros(dim, dim);
    let mut fsq = RationalMatrix::zeros(dim, dim);
    let mut h = RationalMatrix::zeros(dim, dim);
    for i in 0..dim {
        let ii = i as i64;
        // E^2 v_i lands on v_{i-1}, F^2 v_i on v_{i+1}.
        if i > 0 {
            esq[(i - 1, i)] = Rational::from(2 * ii * (2 * ii - 1 + 2 * o));
        }
        if i + 1 < dim {
            fsq[(i + 1, i)] = Rational::from((ni - 2 * ii - o) * (ni - 2 * ii - o - 1));
        }
        h[(i, i)] = Rational::from(ni - 4 * ii - 2 * o);
    }
    let lambda = RationalMatrix::identity(dim).scale(&casimir_scalar(n));
    Ok(EvenModule {
        kind,
        n,
        dim,
        esq,
        fsq,
        h,
        lambda,
    })
}

fn commutator(x: &RationalMatrix, y: &RationalMatrix) -> RationalMatrix {
    &(x * y) - &(y * x)
}

impl EvenModule {
    /// `[H, E^2] = 4 E^2` and `[H, F^2] = -4 F^2`.
    pub fn check_weight_relations(&self) -> bool {
        commutator(&self.h, &self.esq) == self.esq.scale(&Rational::from(4usize))
            && commutator(&self.h, &self.fsq) == self.fsq.scale(&Rational::from(-4i64))
    }

    /// `Lambda` is `n(n+2)/2` times the identity and commutes with the other
    /// generators.
    pub fn check_casimir(&self) -> bool {
        let zero = RationalMatrix::zeros(self.dim, self.dim);
        self.lambda == RationalMatrix::identity(self.dim).scale(&casimir_scalar(self.n))
            && [&self.esq, &self.fsq, &self.h]
                .iter()
                .all(|g| commutator(&self.lambda, g) == zero)
    }

    pub fn check_shape(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (j == i + 1 || self.esq[(i, j)].is_zero())
                    && (i == j + 1 || self.fsq[(i, j)].is_zero())
                    && (i == j || self.h[(i, j)].is_zero())
            })
        })
    }

    /// `(E^2 + F^2 + Lambda - 1)/4 - H^2/8`.
    pub fn tridiagonal_element(&self) -> RationalMatrix {
        let sum = &(&self.esq + &self.fsq) + &self.lambda;
        let h2 = &self.h * &self.h;
        &sum.shift(&Rational::from(-1i64))
            .scale(&Rational::new(1, 4))
            - &h2.scale(&Rational::new(1, 8))
    }

    /// `(n - H)/4`, less `1/2` for kind 1.
    pub fn diagonal_element(&self) -> RationalMatrix {
        let base = self
            .h
            .scale(&Rational::from(-1i64))
            .shift(&Rational::from(self.n))
            .scale(&Rational::new(1, 4));
        match self.kind {
            ModuleKind::Zero => base,
            ModuleKind::One => base.shift(&Rational::new(-1, 2)),
        }
    }

    /// Action of the adjacency matrix: `(E^2 + F^2 + Lambda - D)/2 - H^2/4`.
    pub fn adjacency_action(&self, big_d: usize) -> RationalMatrix {
        let sum = &(&self.esq + &self.fsq) + &self.lambda;
        let h2 = &self.h * &self.h;
        &sum.shift(&-Rational::from(big_d))
            .scale(&Rational::new(1, 2))
            - &h2.scale(&Rational::new(1, 4))
    }

    /// Action of the dual adjacency matrix: `H`.
    pub fn dual_adjacency_action(&self) -> RationalMatrix {
        self.h.clone()
    }
}

fn require_odd(n: usize) -> Result<()> {
    if n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("n must be odd, got {n}")));
    }
    Ok(())
}

/// The two example elements evaluated on `L_n^(kind)` for odd `n`.
pub fn example_pair(kind: ModuleKind, n: usize) -> Result<(RationalMatrix, RationalMatrix)> {
    require_odd(n)?;
    let m = build_even_module(kind, n)?;
    Ok((m.tridiagonal_element(), m.diagonal_element()))
}

/// The example pair equals `([L]_u, [L*]_u)` at `d = (n-1)/2` and
/// `(r, s) = (-1/2, 1/2)` for kind 0, `(1/2, -1/2)` for kind 1.
pub fn verify_example_match(kind: ModuleKind, n: usize) -> Result<bool> {
    let (tri, diag) = example_pair(kind, n)?;
    let (r, s) = kind.dual_hahn_rs();
    let p = build_params((n - 1) / 2, r, s)?;
    Ok(tri == matrix_l_u_basis(&p) && diag == matrix_lstar_u_basis(&p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CatalogEntry {
    pub k: usize,
    pub kind: ModuleKind,
    pub n: usize,
    pub adjacency: RationalMatrix,
    pub dual_adjacency: RationalMatrix,
}

/// Irreducible Terwilliger modules of the halved `D`-cube up to
/// isomorphism: `L_{D-2k}^(0)` for even `k <= floor(D/2)` and
/// `L_{D-2k}^(1)` for odd `k <= floor((D-1)/2)`, ordered by `k`.
pub fn terwilliger_catalog(big_d: usize) -> Result<Vec<CatalogEntry>> {
    if big_d == 0 {
        return Err(Error::InvalidArgument("D must be at least 1".into()));
    }
    let mut out = Vec::new();
    for k in 0..=big_d / 2 {
        let kind = if k % 2 == 0 {
            ModuleKind::Zero
        } else if k <= (big_d - 1) / 2 {
            ModuleKind::One
        } else {
            continue;
        };
        let n = big_d - 2 * k;
        let m = build_even_module(kind, n)?;
        out.push(CatalogEntry {
            k,
            kind,
            n,
            adjacency: m.adjacency_action(big_d),
            dual_adjacency: m.dual_adjacency_action(),
        })
    }
    Ok(out)
}

/// For odd `D`: the entry's adjacency and dual adjacency actions are affine
/// images of the dual Hahn pair at `d = (n-1)/2`,
/// `A = 2 [L]_u + (1 - D)/2` and `A* = n - 4 [L*]_u` (kind 0) or
/// `n - 2 - 4 [L*]_u` (kind 1), and that dual Hahn pair is dual almost
/// bipartite after the `(r - d)/2` shift.
pub fn catalog_entry_matches_dual_hahn(entry: &CatalogEntry, big_d: usize) -> Result<bool> {
    require_odd(big_d)?;
    require_odd(entry.n)?;
    let (r, s) = entry.kind.dual_hahn_rs();
    let p = build_params((entry.n - 1) / 2, r, s)?;
    let offset = (Rational::one() - Rational::from(big_d)) / Rational::from(2usize);
    let a_expected = matrix_l_u_basis(&p)
        .scale(&Rational::from(2usize))
        .shift(&offset);
    let top = match entry.kind {
        ModuleKind::Zero => Rational::from(entry.n),
        ModuleKind::One => Rational::from(entry.n) - Rational::from(2usize),
    };
    let astar_expected = matrix_lstar_u_basis(&p)
        .scale(&Rational::from(-4i64))
        .shift(&top);
    Ok(entry.adjacency == a_expected
        && entry.dual_adjacency == astar_expected
        && is_dual_almost_bipartite(&p, &p.canonical_lambda()))
}
