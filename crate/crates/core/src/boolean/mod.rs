//! Boolean hypercubes `B^n` and their differential calculus over GF(2).
//!
//! A point of `B^m` is stored as an `m`-bit index; coordinate 1 (variable
//! `p`) is the most significant bit, so `(1,0,1)` is index 5. A linear map
//! `B^m -> B^n` is a [`GF2Matrix`] whose columns are the images of the
//! standard basis vectors, each stored as an `n`-bit index.
//!
//! The continuous linear maps are exactly the matrices whose columns have
//! Hamming weight at most one, and they are the continuous homomorphisms of
//! the corresponding Cayley graphs, so every result here can be checked
//! against the generic machinery in [`crate::cayley`] and
//! [`crate::differential`].

pub mod poly;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cayley::CayleyGraph;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupKind};
use crate::limits::Limits;
use crate::space::{FiniteMap, ReflexiveDigraph};

pub use poly::{parse_polynomials, variable_name, Poly, VARIABLES};

/// Largest supported hypercube dimension.
pub const MAX_DIM: usize = 20;

fn check_dim(dim: usize) -> Result<()> {
    Limits::check("hypercube dimension", dim as u128, MAX_DIM as u128)
}

fn mask(dim: usize) -> u32 {
    if dim == 32 {
        u32::MAX
    } else {
        (1u32 << dim) - 1
    }
}

/// A point of `B^dim`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BoolPoint {
    dim: usize,
    bits: u32,
}

impl BoolPoint {
    pub fn new(dim: usize, bits: u32) -> Result<Self> {
        check_dim(dim)?;
        if bits & !mask(dim) != 0 {
            return Err(Error::OutOfRange(bits as usize, 1usize << dim));
        }
        Ok(BoolPoint { dim, bits })
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(dim, 0)
    }

    pub fn from_coords(coords: &[bool]) -> Result<Self> {
        let bits = coords.iter().fold(0u32, |acc, &c| acc << 1 | c as u32);
        Self::new(coords.len(), bits)
    }

    /// Parses `(1,0,1)` or `101`. Whitespace is ignored.
    pub fn parse(src: &str) -> Result<Self> {
        let cleaned: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        let body = match cleaned.strip_prefix('(') {
            Some(rest) => rest.strip_suffix(')').ok_or(Error::Parse {
                pos: cleaned.len(),
                msg: "expected ')'".into(),
            })?,
            None => cleaned.as_str(),
        };
        let digits: Vec<&str> = if body.contains(',') {
            body.split(',').collect()
        } else {
            body.split("").filter(|s| !s.is_empty()).collect()
        };
        let coords = digits
            .iter()
            .enumerate()
            .map(|(i, d)| match *d {
                "0" => Ok(false),
                "1" => Ok(true),
                _ => Err(Error::Parse {
                    pos: i,
                    msg: format!("expected 0 or 1, found {d:?}"),
                }),
            })
            .collect::<Result<Vec<bool>>>()?;
        if coords.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "empty point".into(),
            });
        }
        Self::from_coords(&coords)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn index(&self) -> usize {
        self.bits as usize
    }

    /// Coordinate `j`, counted from zero (so `coord(0)` is `p`).
    pub fn coord(&self, j: usize) -> bool {
        self.bits >> (self.dim - 1 - j) & 1 == 1
    }

    pub fn coords(&self) -> Vec<bool> {
        (0..self.dim).map(|j| self.coord(j)).collect()
    }
}

impl fmt::Display for BoolPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.coords().iter().map(|&c| if c { "1" } else { "0" }).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for BoolPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// The unit vector `e_j` of `B^dim` as an index.
pub fn unit(dim: usize, j: usize) -> u32 {
    1 << (dim - 1 - j)
}

/// Hamming ball of radius one around `b`, sorted.
pub fn hamming_nbhd(dim: usize, b: u32) -> Vec<u32> {
    let mut out: Vec<u32> = std::iter::once(b).chain((0..dim).map(|j| b ^ unit(dim, j))).collect();
    out.sort_unstable();
    out
}

/// An `n x m` matrix over GF(2), i.e. a linear map `B^m -> B^n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GF2Matrix {
    rows: usize,
    cols: usize,
    /// `columns[j]` is the image of `e_j` as an `rows`-bit index.
    columns: Vec<u32>,
}

impl GF2Matrix {
    pub fn from_columns(rows: usize, columns: Vec<u32>) -> Result<Self> {
        check_dim(rows)?;
        check_dim(columns.len())?;
        if let Some(&bad) = columns.iter().find(|&&c| c & !mask(rows) != 0) {
            return Err(Error::OutOfRange(bad as usize, 1usize << rows));
        }
        Ok(GF2Matrix {
            rows,
            cols: columns.len(),
            columns,
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        GF2Matrix {
            rows,
            cols,
            columns: vec![0; cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        GF2Matrix {
            rows: dim,
            cols: dim,
            columns: (0..dim).map(|j| unit(dim, j)).collect(),
        }
    }

    /// Builds a matrix from rows of 0/1 entries.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        let mut columns = vec![0u32; m];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(Error::DimMismatch {
                    expected: m,
                    got: row.len(),
                });
            }
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 => columns[j] |= unit(n, i),
                    other => return Err(Error::Invalid(format!("matrix entry {other} is not a bit"))),
                }
            }
        }
        Self::from_columns(n, columns)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.columns[j] >> (self.rows - 1 - i) & 1 == 1
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.entry(i, j) as u8).collect())
            .collect()
    }

    /// `M x` on raw indices.
    pub fn apply_bits(&self, x: u32) -> u32 {
        (0..self.cols)
            .filter(|&j| x & unit(self.cols, j) != 0)
            .fold(0, |acc, j| acc ^ self.columns[j])
    }

    pub fn apply(&self, x: BoolPoint) -> Result<BoolPoint> {
        if x.dim() != self.cols {
            return Err(Error::DimMismatch {
                expected: self.cols,
                got: x.dim(),
            });
        }
        Ok(BoolPoint {
            dim: self.rows,
            bits: self.apply_bits(x.bits()),
        })
    }

    /// Every column has Hamming weight at most one.
    pub fn is_continuous_linear(&self) -> bool {
        self.columns.iter().all(|c| c.count_ones() <= 1)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|&c| c == 0)
    }

    /// The distinct nonzero columns, sorted.
    pub fn nonzero_columns(&self) -> Vec<u32> {
        let mut cs: Vec<u32> = self.columns.iter().copied().filter(|&c| c != 0).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &GF2Matrix) -> Result<GF2Matrix> {
        if inner.rows != self.cols {
            return Err(Error::DimMismatch {
                expected: self.cols,
                got: inner.rows,
            });
        }
        Ok(GF2Matrix {
            rows: self.rows,
            cols: inner.cols,
            columns: inner.columns.iter().map(|&c| self.apply_bits(c)).collect(),
        })
    }

    pub fn to_finite_map(&self) -> FiniteMap {
        let values = (0..1u32 << self.cols).map(|x| self.apply_bits(x) as usize).collect();
        FiniteMap::new(1 << self.cols, 1 << self.rows, values).expect("values lie in B^n")
    }

    /// The matrix of `f: B^m -> B^n` if `f` is linear.
    pub fn from_finite_map(m: usize, n: usize, f: &FiniteMap) -> Option<Self> {
        if f.dom_size() != 1 << m || f.cod_size() != 1 << n {
            return None;
        }
        let columns: Vec<u32> = (0..m).map(|j| f.apply(unit(m, j) as usize) as u32).collect();
        let matrix = GF2Matrix::from_columns(n, columns).ok()?;
        (0..1u32 << m)
            .all(|x| matrix.apply_bits(x) as usize == f.apply(x as usize))
            .then_some(matrix)
    }

    /// The map written with the variables `p, q, r, ...`, e.g. `(p,q) -> (p,0,q)`.
    pub fn formula(&self) -> String {
        let inputs: Vec<String> = (0..self.cols).map(|j| variable_name(j).to_string()).collect();
        let outputs: Vec<String> = (0..self.rows)
            .map(|i| {
                let terms: Vec<String> = (0..self.cols)
                    .filter(|&j| self.entry(i, j))
                    .map(|j| variable_name(j).to_string())
                    .collect();
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join("+")
                }
            })
            .collect();
        format!("({}) -> ({})", inputs.join(","), outputs.join(","))
    }
}

impl fmt::Display for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(u8::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// A function `B^m -> B^n` stored as a dense table of `2^m` indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoolFunction {
    m: usize,
    n: usize,
    table: Vec<u32>,
}

impl BoolFunction {
    pub fn new(m: usize, n: usize, table: Vec<u32>) -> Result<Self> {
        check_dim(m)?;
        check_dim(n)?;
        if table.len() != 1 << m {
            return Err(Error::DimMismatch {
                expected: 1 << m,
                got: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&y| y & !mask(n) != 0) {
            return Err(Error::OutOfRange(bad as usize, 1usize << n));
        }
        Ok(BoolFunction { m, n, table })
    }

    /// Tabulates a polynomial or tuple of polynomials in `m` variables.
    pub fn from_poly(src: &str, m: usize) -> Result<Self> {
        check_dim(m)?;
        let polys = parse_polynomials(src)?;
        check_dim(polys.len())?;
        if let Some(v) = polys.iter().filter_map(Poly::max_var).max() {
            if v >= m {
                return Err(Error::Invalid(format!(
                    "variable {} needs at least {} inputs, got {m}",
                    variable_name(v),
                    v + 1
                )));
            }
        }
        let n = polys.len();
        let table = (0..1u32 << m)
            .map(|x| {
                let point = BoolPoint { dim: m, bits: x }.coords();
                polys.iter().fold(0u32, |acc, p| acc << 1 | p.eval(&point) as u32)
            })
            .collect();
        Ok(BoolFunction { m, n, table })
    }

    pub fn from_finite_map(m: usize, n: usize, f: &FiniteMap) -> Result<Self> {
        if f.dom_size() != 1 << m {
            return Err(Error::DimMismatch {
                expected: 1 << m,
                got: f.dom_size(),
            });
        }
        if f.cod_size() != 1 << n {
            return Err(Error::DimMismatch {
                expected: 1 << n,
                got: f.cod_size(),
            });
        }
        Self::new(m, n, f.values().iter().map(|&y| y as u32).collect())
    }

    pub fn linear(matrix: &GF2Matrix) -> Self {
        BoolFunction {
            m: matrix.cols,
            n: matrix.rows,
            table: (0..1u32 << matrix.cols).map(|x| matrix.apply_bits(x)).collect(),
        }
    }

    pub fn input_dim(&self) -> usize {
        self.m
    }

    pub fn output_dim(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn apply_bits(&self, x: u32) -> u32 {
        self.table[x as usize]
    }

    pub fn apply(&self, x: BoolPoint) -> Result<BoolPoint> {
        if x.dim() != self.m {
            return Err(Error::DimMismatch {
                expected: self.m,
                got: x.dim(),
            });
        }
        Ok(BoolPoint {
            dim: self.n,
            bits: self.apply_bits(x.bits()),
        })
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &BoolFunction) -> Result<BoolFunction> {
        if inner.n != self.m {
            return Err(Error::DimMismatch {
                expected: self.m,
                got: inner.n,
            });
        }
        Ok(BoolFunction {
            m: inner.m,
            n: self.n,
            table: inner.table.iter().map(|&y| self.apply_bits(y)).collect(),
        })
    }

    /// Pointwise product (bitwise AND) of two functions with the same shape.
    pub fn product(&self, other: &BoolFunction) -> Result<BoolFunction> {
        if (self.m, self.n) != (other.m, other.n) {
            return Err(Error::DimMismatch {
                expected: self.m,
                got: other.m,
            });
        }
        Ok(BoolFunction {
            m: self.m,
            n: self.n,
            table: self.table.iter().zip(&other.table).map(|(a, b)| a & b).collect(),
        })
    }

    pub fn to_finite_map(&self) -> FiniteMap {
        FiniteMap::new(
            1 << self.m,
            1 << self.n,
            self.table.iter().map(|&y| y as usize).collect(),
        )
        .expect("table values lie in B^n")
    }

    fn check_point(&self, b: BoolPoint) -> Result<()> {
        if b.dim() != self.m {
            return Err(Error::DimMismatch {
                expected: self.m,
                got: b.dim(),
            });
        }
        Ok(())
    }
}

/// `B^n` as the Cayley graph of `Z2^n` with the unit vectors as generators.
/// The group table is materialised, so this is bounded by the group-order
/// guard; [`hypercube_digraph`] goes up to [`MAX_DIM`].
pub fn hypercube(n: usize) -> Result<CayleyGraph> {
    hypercube_with_limits(n, &Limits::default())
}

pub fn hypercube_with_limits(n: usize, limits: &Limits) -> Result<CayleyGraph> {
    Limits::check("hypercube dimension", n as u128, limits.cube_dim.min(MAX_DIM) as u128)?;
    let kind = GroupKind::Z2Power(n);
    let group: FiniteGroup = kind.build(limits)?;
    CayleyGraph::from_generators(group, &kind.default_generators())
}

/// The Hamming-ball digraph of `B^n` without a group table.
pub fn hypercube_digraph(n: usize) -> Result<ReflexiveDigraph> {
    if n == 0 {
        return Err(Error::Invalid("hypercube of dimension 0".into()));
    }
    check_dim(n)?;
    let nbhd = (0..1u32 << n)
        .map(|b| hamming_nbhd(n, b).into_iter().map(|x| x as usize).collect())
        .collect();
    ReflexiveDigraph::new(nbhd)
}

fn check_candidates(m: usize, n: usize, limits: &Limits) -> Result<()> {
    let count = (n as u128 + 1) << m;
    Limits::check("boolean differential candidates", count, limits.oracle_work)
}

/// `K ∈ N(M)` for continuous linear maps: equal, or every nonzero column of
/// either matrix is one and the same vector.
pub fn linear_neighbor(k: &GF2Matrix, l: &GF2Matrix) -> bool {
    if k == l {
        return true;
    }
    let mut cols = k.nonzero_columns();
    cols.extend(l.nonzero_columns());
    cols.sort_unstable();
    cols.dedup();
    cols.len() <= 1
}

/// The neighborhood of a continuous linear map in `D(B^m, B^n)`, sorted.
pub fn linear_neighbors(matrix: &GF2Matrix) -> Result<Vec<GF2Matrix>> {
    linear_neighbors_with_limits(matrix, &Limits::default())
}

pub fn linear_neighbors_with_limits(matrix: &GF2Matrix, limits: &Limits) -> Result<Vec<GF2Matrix>> {
    if let Some(j) = matrix.columns.iter().position(|c| c.count_ones() > 1) {
        return Err(Error::NotContinuous(j));
    }
    let (m, n) = (matrix.cols, matrix.rows);
    let nonzero = matrix.nonzero_columns();
    let betas: Vec<u32> = match nonzero.len() {
        0 => (0..n).map(|i| unit(n, i)).collect(),
        1 => nonzero,
        _ => return Ok(vec![matrix.clone()]),
    };
    check_candidates(m, n, limits)?;
    let mut out: Vec<GF2Matrix> = betas
        .iter()
        .flat_map(|&beta| {
            (0..1u32 << m).map(move |sel| GF2Matrix {
                rows: n,
                cols: m,
                columns: (0..m).map(|j| if sel & unit(m, j) != 0 { beta } else { 0 }).collect(),
            })
        })
        .collect();
    out.push(matrix.clone());
    out.sort();
    out.dedup();
    Ok(out)
}

/// Every continuous linear map `B^m -> B^n`, sorted.
pub fn continuous_linear_maps(m: usize, n: usize) -> Result<Vec<GF2Matrix>> {
    check_dim(m)?;
    check_dim(n)?;
    let per_column = n as u128 + 1;
    let count = (0..m).fold(1u128, |acc, _| acc.saturating_mul(per_column));
    Limits::check("continuous linear maps", count, Limits::default().oracle_work)?;
    let choices: Vec<u32> = std::iter::once(0).chain((0..n).map(|i| unit(n, i))).collect();
    let mut out = vec![Vec::with_capacity(m)];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                choices.iter().map(move |&c| {
                    let mut next = prefix.clone();
                    next.push(c);
                    next
                })
            })
            .collect();
    }
    let mut maps: Vec<GF2Matrix> = out
        .into_iter()
        .map(|columns| GF2Matrix {
            rows: n,
            cols: m,
            columns,
        })
        .collect();
    maps.sort();
    Ok(maps)
}

/// Whether a continuous linear map has no neighbor besides itself.
pub fn is_isolated_linear(matrix: &GF2Matrix) -> bool {
    matrix.nonzero_columns().len() >= 2
}

/// Differentials of `f` at `b` in the space of continuous linear maps,
/// computed by the three-case classification:
///
/// 1. an isolated `L` agreeing with `f` on `N(b)`; such an `L` is determined
///    by its columns `f(b) + f(b + e_j)`;
/// 2. the zero map, when `f(N(b)) ⊆ N(0_n)`;
/// 3. each non-isolated, nonzero `L` with image `{0_n, β}`, when
///    `f(N(b)) ⊆ {0_n, β}`;
///
/// where cases 2 and 3 also need `f(0_m) = 0_n` if `0_m ∈ N(b)`. Sorted.
pub fn boolean_differentials_at(f: &BoolFunction, b: BoolPoint) -> Result<Vec<GF2Matrix>> {
    boolean_differentials_at_with_limits(f, b, &Limits::default())
}

pub fn boolean_differentials_at_with_limits(f: &BoolFunction, b: BoolPoint, limits: &Limits) -> Result<Vec<GF2Matrix>> {
    f.check_point(b)?;
    let (m, n) = (f.m, f.n);
    check_candidates(m, n, limits)?;
    let nb = hamming_nbhd(m, b.bits);
    let images: Vec<u32> = nb.iter().map(|&x| f.apply_bits(x)).collect();
    let near_origin = b.bits.count_ones() <= 1;
    let origin_ok = !near_origin || f.apply_bits(0) == 0;
    let mut out = Vec::new();

    let fb = f.apply_bits(b.bits);
    let candidate = GF2Matrix {
        rows: n,
        cols: m,
        columns: (0..m).map(|j| fb ^ f.apply_bits(b.bits ^ unit(m, j))).collect(),
    };
    if candidate.is_continuous_linear() && is_isolated_linear(&candidate) && candidate.apply_bits(b.bits) == fb {
        out.push(candidate);
    }

    if origin_ok {
        if images.iter().all(|y| y.count_ones() <= 1) {
            out.push(GF2Matrix::zero(n, m));
        }
        for beta in (0..n).map(|i| unit(n, i)) {
            if images.iter().all(|&y| y == 0 || y == beta) {
                for sel in 1..1u32 << m {
                    out.push(GF2Matrix {
                        rows: n,
                        cols: m,
                        columns: (0..m).map(|j| if sel & unit(m, j) != 0 { beta } else { 0 }).collect(),
                    });
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Solves `L [x_1 ... x_k] = [f(x_1) ... f(x_k)]` over GF(2) where the
/// `x_i` run over `N(b)`, and keeps the continuous solutions. Sorted; empty
/// when the system is inconsistent.
pub fn solve_matrix_equation(f: &BoolFunction, b: BoolPoint) -> Result<Vec<GF2Matrix>> {
    f.check_point(b)?;
    let (m, n) = (f.m, f.n);
    // each equation: (coefficient mask over the m inputs, right-hand side as an n-bit row)
    let mut eqs: Vec<(u32, u32)> = hamming_nbhd(m, b.bits)
        .into_iter()
        .map(|x| (x, f.apply_bits(x)))
        .collect();
    let mut pivots: Vec<(usize, u32)> = Vec::new();
    let mut row = 0;
    for j in 0..m {
        let bit = unit(m, j);
        let Some(p) = (row..eqs.len()).find(|&r| eqs[r].0 & bit != 0) else {
            continue;
        };
        eqs.swap(row, p);
        let (pc, pr) = eqs[row];
        for (r, eq) in eqs.iter_mut().enumerate() {
            if r != row && eq.0 & bit != 0 {
                eq.0 ^= pc;
                eq.1 ^= pr;
            }
        }
        pivots.push((j, bit));
        row += 1;
    }
    if eqs[row..].iter().any(|&(_, rhs)| rhs != 0) {
        return Ok(Vec::new());
    }
    let free: Vec<usize> = (0..m).filter(|&j| pivots.iter().all(|&(pj, _)| pj != j)).collect();
    let count = 1u128.checked_shl((free.len() * n) as u32).unwrap_or(u128::MAX);
    Limits::check("matrix equation solutions", count, Limits::default().oracle_work)?;

    // L^T has one unknown row per input coordinate: row_j = L e_j, the j-th column.
    let mut out = Vec::new();
    for assignment in 0..count as u64 {
        let mut columns = vec![0u32; m];
        for (t, &j) in free.iter().enumerate() {
            columns[j] = (assignment >> (t * n)) as u32 & mask(n);
        }
        for (r, &(j, _)) in pivots.iter().enumerate() {
            let (coeffs, rhs) = eqs[r];
            let others = (0..m)
                .filter(|&k| k != j && coeffs & unit(m, k) != 0)
                .fold(0u32, |acc, k| acc ^ columns[k]);
            columns[j] = rhs ^ others;
        }
        let matrix = GF2Matrix {
            rows: n,
            cols: m,
            columns,
        };
        if matrix.is_continuous_linear() {
            out.push(matrix);
        }
    }
    out.sort();
    Ok(out)
}

/// Per-point differentiability of a scalar function `B^m -> B`, compared
/// with the prediction: differentiable off `N(0_m)`, and on `N(0_m)` exactly
/// when `f(0_m) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub m: usize,
    pub differentiable: Vec<bool>,
    pub predicted: Vec<bool>,
    pub mismatches: Vec<u32>,
    pub matches: bool,
}

pub fn scalar_differentiability_census(f: &BoolFunction) -> Result<CensusReport> {
    if f.n != 1 {
        return Err(Error::DimMismatch { expected: 1, got: f.n });
    }
    let m = f.m;
    let f0 = f.apply_bits(0);
    let mut differentiable = Vec::with_capacity(1 << m);
    let mut predicted = Vec::with_capacity(1 << m);
    let mut mismatches = Vec::new();
    for x in 0..1u32 << m {
        let point = BoolPoint { dim: m, bits: x };
        let d = !boolean_differentials_at(f, point)?.is_empty();
        let p = x.count_ones() > 1 || f0 == 0;
        if d != p {
            mismatches.push(x);
        }
        differentiable.push(d);
        predicted.push(p);
    }
    Ok(CensusReport {
        m,
        differentiable,
        predicted,
        matches: mismatches.is_empty(),
        mismatches,
    })
}

/// Outcome of [`leibniz_probe`]. For every pair `(L_f, L_g)` of differentials
/// at `b` the probe forms `g(b) L_f + f(b) L_g` and records whether it is a
/// differential of the pointwise product `fg` at `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeibnizReport {
    pub f_differentials: usize,
    pub g_differentials: usize,
    pub product_differentials: usize,
    pub pairs: usize,
    pub satisfied: usize,
    /// The pairs whose combination is not a differential of `fg`.
    pub failures: Vec<(GF2Matrix, GF2Matrix)>,
}

pub fn leibniz_probe(f: &BoolFunction, g: &BoolFunction, b: BoolPoint) -> Result<LeibnizReport> {
    for h in [f, g] {
        if h.n != 1 {
            return Err(Error::DimMismatch { expected: 1, got: h.n });
        }
    }
    let fg = f.product(g)?;
    let lfs = boolean_differentials_at(f, b)?;
    if lfs.is_empty() {
        return Err(Error::NotDifferentiable(format!("f at {b}")));
    }
    let lgs = boolean_differentials_at(g, b)?;
    if lgs.is_empty() {
        return Err(Error::NotDifferentiable(format!("g at {b}")));
    }
    let product_diffs = boolean_differentials_at(&fg, b)?;
    let (fb, gb) = (f.apply_bits(b.bits), g.apply_bits(b.bits));
    let mut report = LeibnizReport {
        f_differentials: lfs.len(),
        g_differentials: lgs.len(),
        product_differentials: product_diffs.len(),
        pairs: 0,
        satisfied: 0,
        failures: Vec::new(),
    };
    for lf in &lfs {
        for lg in &lgs {
            let columns = lf
                .columns
                .iter()
                .zip(&lg.columns)
                .map(|(&a, &c)| (a & gb) ^ (c & fb))
                .collect();
            let combined = GF2Matrix {
                rows: 1,
                cols: f.m,
                columns,
            };
            report.pairs += 1;
            if product_diffs.binary_search(&combined).is_ok() {
                report.satisfied += 1;
            } else {
                report.failures.push((lf.clone(), lg.clone()));
            }
        }
    }
    Ok(report)
}
