//! Codes presented either as point-multiplicity vectors or as raw generator
//! matrices: LCD testing, weights, dual-distance predicates, and the
//! constructive steps used to move between lengths (zero padding, simplex
//! juxtaposition, Gram normalization, single-column extension).

use crate::error::{Error, Result};
use crate::gf::{det, rref, FieldOrder, GFMatrix};
use crate::simplex::{self, SimplexFrame};
use std::sync::Arc;

/// A code over GF(q) described by how many times each projective point of the
/// k-dimensional frame occurs as a generator column. Any code with no zero
/// coordinate (dual distance at least 2) and dimension at most k arises this
/// way, uniquely up to the induced point group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicityVector {
    q: u8,
    k: usize,
    m: Vec<u32>,
}

impl MultiplicityVector {
    /// Validates field, dimension and vector length ([k]_q entries).
    pub fn new(q: u8, k: usize, m: Vec<u32>) -> Result<Self> {
        let frame = simplex::frame(q, k)?;
        if m.len() != frame.len() {
            return Err(Error::ShapeMismatch(format!(
                "multiplicity vector needs {} entries for q={q} k={k}, got {}",
                frame.len(),
                m.len()
            )));
        }
        Ok(MultiplicityVector { q, k, m })
    }

    #[inline]
    pub fn q(&self) -> u8 {
        self.q
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn entries(&self) -> &[u32] {
        &self.m
    }

    pub fn frame(&self) -> Arc<SimplexFrame> {
        simplex::frame(self.q, self.k).expect("validated at construction")
    }

    /// Code length: total number of columns.
    pub fn n(&self) -> u64 {
        self.m.iter().map(|&x| x as u64).sum()
    }

    /// The k-by-n generator matrix listing point i as a column m_i times, in
    /// point order. Requires at least one column.
    pub fn generator_matrix(&self) -> Result<GFMatrix> {
        let n = self.n();
        if n == 0 {
            return Err(Error::InvalidParameter(
                "multiplicity vector has no columns".into(),
            ));
        }
        let frame = self.frame();
        let mut rows = vec![Vec::with_capacity(n as usize); self.k];
        for (i, &mult) in self.m.iter().enumerate() {
            let p = &frame.points()[i];
            for _ in 0..mult {
                for (r, row) in rows.iter_mut().enumerate() {
                    row.push(p[r]);
                }
            }
        }
        GFMatrix::from_rows(frame.field(), &rows)
    }

    /// The Gram matrix G G^T computed directly from multiplicities, without
    /// materializing G: sum of m_i h_i h_i^T over the points.
    pub fn gram(&self) -> GFMatrix {
        let frame = self.frame();
        let field = frame.field();
        let mut acc = vec![0u64; self.k * self.k];
        for (i, &mult) in self.m.iter().enumerate() {
            if mult == 0 {
                continue;
            }
            let p = &frame.points()[i];
            for a in 0..self.k {
                for b in a..self.k {
                    acc[a * self.k + b] += (p[a] * p[b]) as u64 * (mult as u64 % self.q as u64);
                }
            }
        }
        let mut g = GFMatrix::zeros(field, self.k, self.k).expect("k >= 1");
        for a in 0..self.k {
            for b in a..self.k {
                let v = field.reduce(acc[a * self.k + b]);
                g.set(a, b, v);
                g.set(b, a, v);
            }
        }
        g
    }

    /// True exactly when det(G G^T) is nonzero.
    pub fn is_lcd(&self) -> bool {
        det(&self.gram()).expect("gram is square") != 0
    }

    /// Rank of the set of points with nonzero multiplicity.
    pub fn support_rank(&self) -> usize {
        let frame = self.frame();
        let support: Vec<usize> =
            (0..self.m.len()).filter(|&i| self.m[i] > 0).collect();
        if support.is_empty() {
            return 0;
        }
        let rows: Vec<Vec<u8>> = (0..self.k)
            .map(|r| support.iter().map(|&i| frame.points()[i][r]).collect())
            .collect();
        let g = GFMatrix::from_rows(frame.field(), &rows).expect("validated entries");
        crate::gf::rank(&g)
    }

    /// Weight of each projective codeword class, indexed like the points: the
    /// incidence-table product A m^T. Entry j is the common weight of every
    /// codeword with message in class j.
    pub fn weight_vector(&self) -> Vec<u64> {
        let incidence =
            simplex::design_incidence(self.q, self.k).expect("validated at construction");
        (0..incidence.v())
            .map(|j| {
                incidence
                    .row(j)
                    .iter()
                    .zip(&self.m)
                    .map(|(&a, &mi)| a as u64 * mi as u64)
                    .sum()
            })
            .collect()
    }

    /// Minimum nonzero codeword weight. Errors if the support does not span,
    /// i.e. the code has dimension below k.
    pub fn min_weight(&self) -> Result<u64> {
        if self.support_rank() < self.k {
            return Err(Error::RankDeficient);
        }
        Ok(self.weight_vector().into_iter().min().expect("at least one class"))
    }
}

/// One classified code: parameters plus its multiplicity vector (canonical
/// when produced by the classifier). `dual_ge2` holds for every multiplicity
/// code since no generator column is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeRecord {
    pub q: u8,
    pub k: usize,
    pub n: u64,
    pub d: u64,
    pub dual_ge2: bool,
    pub m: MultiplicityVector,
}

impl CodeRecord {
    /// Builds a record from a multiplicity vector, computing length and
    /// minimum weight. Errors if the vector does not span dimension k.
    pub fn from_multiplicity(m: MultiplicityVector) -> Result<Self> {
        let d = m.min_weight()?;
        Ok(CodeRecord { q: m.q(), k: m.k(), n: m.n(), d, dual_ge2: true, m })
    }
}

/// LCD test on a raw generator matrix: det(G G^T) != 0. Rank-deficient input
/// yields a singular Gram matrix and therefore false.
pub fn is_lcd(g: &GFMatrix) -> bool {
    det(&g.gram()).expect("gram is square") != 0
}

/// Weight of the codeword encoded by `msg` (length = rows of `g`).
pub fn codeword_weight(g: &GFMatrix, msg: &[u8]) -> u64 {
    let q = g.field();
    let mut w = 0u64;
    for j in 0..g.cols() {
        let mut acc = 0u64;
        for (i, &x) in msg.iter().enumerate() {
            acc += (x * g.get(i, j)) as u64;
        }
        if q.reduce(acc) != 0 {
            w += 1;
        }
    }
    w
}

/// Brute-force minimum weight: all q^k - 1 nonzero messages. Errors with
/// `RankDeficient` if some nonzero message encodes to the zero codeword.
pub fn min_weight_bruteforce(g: &GFMatrix) -> Result<u64> {
    let q = g.field().q();
    let k = g.rows();
    let total = (q as u64).pow(k as u32);
    let mut best = u64::MAX;
    let mut msg = vec![0u8; k];
    for code in 1..total {
        let mut c = code;
        for e in msg.iter_mut() {
            *e = (c % q as u64) as u8;
            c /= q as u64;
        }
        let w = codeword_weight(g, &msg);
        if w == 0 {
            return Err(Error::RankDeficient);
        }
        best = best.min(w);
    }
    Ok(best)
}

/// Column-structure test for dual distance: weight-1 dual words correspond to
/// zero columns, weight-2 dual words to projectively dependent column pairs.
/// Supports thresholds 1, 2 and 3 only.
pub fn dual_distance_at_least(g: &GFMatrix, w: u32) -> Result<bool> {
    match w {
        0 | 1 => Ok(true),
        2 | 3 => {
            let n = g.cols();
            let k = g.rows();
            let zero_col = |j: usize| (0..k).all(|i| g.get(i, j) == 0);
            if (0..n).any(zero_col) {
                return Ok(false);
            }
            if w == 2 {
                return Ok(true);
            }
            let q = g.field();
            for j1 in 0..n {
                for j2 in j1 + 1..n {
                    for c in 1..q.q() {
                        if (0..k).all(|i| g.get(i, j1) == q.mul(c, g.get(i, j2))) {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
        other => Err(Error::UnsupportedDualWeight(other)),
    }
}

/// Brute-force minimum weight of the dual code, by enumerating the whole null
/// space of `g`. Refuses when q^(n - rank) exceeds a few million vectors, and
/// when the dual code is trivial (full-length row space).
pub fn dual_min_weight_bruteforce(g: &GFMatrix) -> Result<u64> {
    let q = g.field();
    let n = g.cols();
    let (r, pivots) = rref(g);
    let dual_dim = n - pivots.len();
    if dual_dim == 0 {
        return Err(Error::InvalidParameter("dual code is trivial".into()));
    }
    let count = (q.q() as u64).checked_pow(dual_dim as u32);
    match count {
        Some(c) if c <= 4_000_000 => {}
        _ => {
            return Err(Error::OracleLimit(format!(
                "dual dimension {dual_dim} too large for exhaustive enumeration"
            )))
        }
    }
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let mut basis = Vec::with_capacity(dual_dim);
    for &f in &free {
        let mut y = vec![0u8; n];
        y[f] = 1;
        for (i, &p) in pivots.iter().enumerate() {
            y[p] = q.neg(r.get(i, f));
        }
        basis.push(y);
    }
    let total = (q.q() as u64).pow(dual_dim as u32);
    let mut best = u64::MAX;
    let mut coeff = vec![0u8; dual_dim];
    for code in 1..total {
        let mut c = code;
        for e in coeff.iter_mut() {
            *e = (c % q.q() as u64) as u8;
            c /= q.q() as u64;
        }
        let mut w = 0u64;
        for j in 0..n {
            let mut acc = 0u64;
            for (t, &ct) in coeff.iter().enumerate() {
                acc += (ct * basis[t][j]) as u64;
            }
            if q.reduce(acc) != 0 {
                w += 1;
            }
        }
        best = best.min(w);
    }
    Ok(best)
}

/// Appends one all-zero column: same dimension and minimum weight, still LCD,
/// but the dual distance drops to 1.
pub fn pad_zero(g: &GFMatrix) -> GFMatrix {
    g.append_column(&vec![0u8; g.rows()]).expect("shapes match")
}

pub(crate) fn simplex_floor(q: u8) -> usize {
    // Smallest dimension from which the simplex matrix is self-orthogonal.
    if q == 2 {
        3
    } else {
        2
    }
}

/// Adds `s` full copies of the simplex columns: length grows by [k]_q * s and
/// every codeword class weight by exactly q^(k-1) * s, so the minimum weight
/// shifts additively and LCD is preserved (the simplex part is
/// self-orthogonal for these dimensions). Requires k at or above the
/// self-orthogonality floor and an LCD input.
pub fn juxtapose_with_simplex(mv: &MultiplicityVector, s: u32) -> Result<MultiplicityVector> {
    if mv.k() < simplex_floor(mv.q()) {
        return Err(Error::UnsupportedDimension { q: mv.q(), k: mv.k() });
    }
    if s == 0 {
        return Err(Error::InvalidParameter("need at least one simplex copy".into()));
    }
    if !mv.is_lcd() {
        return Err(Error::NotLcd);
    }
    let m = mv.entries().iter().map(|&x| x + s).collect();
    MultiplicityVector::new(mv.q(), mv.k(), m)
}

fn dot(q: FieldOrder, a: &[u8], b: &[u8]) -> u8 {
    GFMatrix::dot(q, a, b)
}

fn add_scaled(q: FieldOrder, dst: &mut [u8], src: &[u8], c: u8) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = q.add(*d, q.mul(c, s));
    }
}

fn normalize_binary(q: FieldOrder, mut basis: Vec<Vec<u8>>) -> Vec<Vec<u8>> {
    // Phase 1: split off self-product-1 vectors, orthogonalizing the rest.
    // x -> x.x is linear in characteristic 2, so when no basis vector has odd
    // self-product the remaining span is alternating.
    let mut diag: Vec<Vec<u8>> = Vec::new();
    while let Some(i) = basis.iter().position(|v| dot(q, v, v) == 1) {
        let v = basis.remove(i);
        for u in basis.iter_mut() {
            if dot(q, u, &v) == 1 {
                add_scaled(q, u, &v, 1);
            }
        }
        diag.push(v);
    }
    // Phase 2: the alternating part is nondegenerate (the code is LCD), so it
    // pairs up into hyperbolic planes.
    let mut pairs: Vec<(Vec<u8>, Vec<u8>)> = Vec::new();
    while !basis.is_empty() {
        let u = basis.remove(0);
        let j = basis
            .iter()
            .position(|w| dot(q, w, &u) == 1)
            .expect("nondegenerate alternating part pairs up");
        let w = basis.remove(j);
        for x in basis.iter_mut() {
            if dot(q, x, &w) == 1 {
                add_scaled(q, x, &u, 1);
            }
            if dot(q, x, &u) == 1 {
                add_scaled(q, x, &w, 1);
            }
        }
        pairs.push((u, w));
    }
    // Phase 3: one odd vector converts a hyperbolic pair into three
    // orthonormal vectors ({x+u+w, x+u, x+w}), so the final Gram form is
    // either the identity or pure 2x2 swap blocks.
    while !pairs.is_empty() && !diag.is_empty() {
        let x = diag.pop().expect("nonempty");
        let (u, w) = pairs.pop().expect("nonempty");
        let mut a = x.clone();
        add_scaled(q, &mut a, &u, 1);
        add_scaled(q, &mut a, &w, 1);
        let mut b = x.clone();
        add_scaled(q, &mut b, &u, 1);
        let mut c = x;
        add_scaled(q, &mut c, &w, 1);
        diag.push(a);
        diag.push(b);
        diag.push(c);
    }
    let mut out = diag;
    for (u, w) in pairs {
        out.push(u);
        out.push(w);
    }
    out
}

fn normalize_ternary(q: FieldOrder, mut basis: Vec<Vec<u8>>) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = Vec::new();
    while !basis.is_empty() {
        let i = match basis.iter().position(|v| dot(q, v, v) != 0) {
            Some(i) => i,
            None => {
                // All isotropic; nondegeneracy yields a non-orthogonal pair,
                // and (v_a + v_b).(v_a + v_b) = 2 v_a.v_b != 0 in char 3.
                let mut found = None;
                'outer: for a in 0..basis.len() {
                    for b in a + 1..basis.len() {
                        if dot(q, &basis[a], &basis[b]) != 0 {
                            found = Some((a, b));
                            break 'outer;
                        }
                    }
                }
                let (a, b) = found.expect("nondegenerate form has a non-orthogonal pair");
                let vb = basis[b].clone();
                add_scaled(q, &mut basis[a], &vb, 1);
                a
            }
        };
        let v = basis.remove(i);
        let c = dot(q, &v, &v);
        let cinv = q.inv(c).expect("nonzero self-product");
        for u in basis.iter_mut() {
            let f = q.mul(dot(q, u, &v), cinv);
            if f != 0 {
                let neg = q.neg(f);
                add_scaled(q, u, &v, neg);
            }
        }
        out.push(v);
    }
    out
}

/// Replaces the basis of an LCD code by one whose Gram matrix has normal
/// form: over GF(2) the identity (when the code has an odd-weight codeword)
/// or a direct sum of 2x2 swap blocks (all-even case, even k); over GF(3) a
/// diagonal matrix with nonzero diagonal. The row space is unchanged.
pub fn gram_normalize(g: &GFMatrix) -> Result<GFMatrix> {
    if !is_lcd(g) {
        return Err(Error::NotLcd);
    }
    let q = g.field();
    let basis: Vec<Vec<u8>> = (0..g.rows()).map(|i| g.row(i).to_vec()).collect();
    let out = if q.q() == 2 {
        normalize_binary(q, basis)
    } else {
        normalize_ternary(q, basis)
    };
    GFMatrix::from_rows(q, &out)
}

/// Extends an LCD code with all-nonzero columns by one coordinate, keeping it
/// LCD with dual distance still at least 2 and minimum weight d or d + 1: the
/// basis is Gram-normalized, then one column is appended whose shape is read
/// off the normal form (binary: 1 1 0 ...; ternary: a unit vector at a
/// diagonal 1, else 1 1 0 ... when the diagonal is all 2s).
pub fn extend_by_one(g: &GFMatrix) -> Result<GFMatrix> {
    let q = g.field();
    let k = g.rows();
    if k < 2 {
        return Err(Error::UnsupportedDimension { q: q.q(), k });
    }
    if !dual_distance_at_least(g, 2)? {
        return Err(Error::ZeroColumn);
    }
    let g0 = gram_normalize(g)?;
    let gram = g0.gram();
    let mut h = vec![0u8; k];
    if q.q() == 2 {
        h[0] = 1;
        h[1] = 1;
    } else if let Some(i) = (0..k).find(|&i| gram.get(i, i) == 1) {
        h[i] = 1;
    } else {
        h[0] = 1;
        h[1] = 1;
    }
    let out = g0.append_column(&h)?;
    debug_assert!(is_lcd(&out), "appended column must keep the Gram nonsingular");
    Ok(out)
}
