//! Projective point frames for GF(2) and GF(3), the column layout of simplex
//! generator matrices, the point permutation group induced by invertible row
//! transformations, and the incidence table between message classes and
//! points.
//!
//! The column order is normative for everything downstream: multiplicity
//! vectors, canonical forms and the fixture files all index points by their
//! position in this frame.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use crate::error::{Error, Result};
use crate::gf::{FieldOrder, GFMatrix};

/// Number of projective points of PG(k-1, q), i.e. (q^k - 1) / (q - 1).
pub fn point_count(q: u8, k: usize) -> usize {
    let q = q as usize;
    (q.pow(k as u32) - 1) / (q - 1)
}

/// The simplex generator matrix of dimension `k` over GF(q) together with its
/// ordered list of projective point representatives.
///
/// The order is inductive. For `k = 1` the single column is (1). For larger
/// `k` the columns are: every column of the (k-1)-frame with 0 appended, then
/// the new unit vector, then for each scalar c = 1, .., q-1 every column of
/// the (k-1)-frame with c appended. Each representative has 1 as its first
/// nonzero coordinate.
#[derive(Debug, Clone)]
pub struct SimplexFrame {
    q: FieldOrder,
    k: usize,
    points: Vec<Vec<u8>>,
    matrix: GFMatrix,
    // Direct-addressed lookup: encoded coordinate vector -> point index.
    lookup: Vec<Option<u16>>,
}

fn check_domain(q: u8, k: usize) -> Result<FieldOrder> {
    let field = FieldOrder::new(q)?;
    if !(1..=4).contains(&k) {
        return Err(Error::UnsupportedDimension { q, k });
    }
    Ok(field)
}

fn build_points(q: u8, k: usize) -> Vec<Vec<u8>> {
    if k == 1 {
        return vec![vec![1]];
    }
    let prev = build_points(q, k - 1);
    let mut out = Vec::with_capacity(point_count(q, k));
    for p in &prev {
        let mut v = p.clone();
        v.push(0);
        out.push(v);
    }
    let mut unit = vec![0u8; k];
    unit[k - 1] = 1;
    out.push(unit);
    for c in 1..q {
        for p in &prev {
            let mut v = p.clone();
            v.push(c);
            out.push(v);
        }
    }
    out
}

fn encode(q: u8, v: &[u8]) -> usize {
    let mut code = 0usize;
    for &x in v.iter().rev() {
        code = code * q as usize + x as usize;
    }
    code
}

/// Builds the simplex frame for `q` in {2, 3} and `1 <= k <= 4`.
pub fn simplex_matrix(q: u8, k: usize) -> Result<SimplexFrame> {
    let field = check_domain(q, k)?;
    let points = build_points(q, k);
    debug_assert_eq!(points.len(), point_count(q, k));
    let rows: Vec<Vec<u8>> = (0..k)
        .map(|r| points.iter().map(|p| p[r]).collect())
        .collect();
    let matrix = GFMatrix::from_rows(field, &rows)?;
    let mut lookup = vec![None; (q as usize).pow(k as u32)];
    for (idx, p) in points.iter().enumerate() {
        // Every nonzero vector maps to the index of its scalar normalization.
        for c in 1..q {
            let scaled: Vec<u8> = p.iter().map(|&x| field.mul(x, c)).collect();
            lookup[encode(q, &scaled)] = Some(idx as u16);
        }
        lookup[encode(q, p)] = Some(idx as u16);
    }
    Ok(SimplexFrame { q: field, k, points, matrix, lookup })
}

impl SimplexFrame {
    #[inline]
    pub fn q(&self) -> u8 {
        self.q.q()
    }

    #[inline]
    pub fn field(&self) -> FieldOrder {
        self.q
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of points, i.e. the simplex length.
    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The k-by-len simplex generator matrix.
    pub fn matrix(&self) -> &GFMatrix {
        &self.matrix
    }

    /// Ordered projective representatives; `points()[i]` is column `i`.
    pub fn points(&self) -> &[Vec<u8>] {
        &self.points
    }

    /// Index of the point a nonzero vector represents, normalizing away the
    /// scalar. Errors on the zero vector, wrong length, or entries >= q.
    pub fn point_index(&self, v: &[u8]) -> Result<usize> {
        if v.len() != self.k {
            return Err(Error::ShapeMismatch(format!(
                "vector length {} does not match dimension {}",
                v.len(),
                self.k
            )));
        }
        for &x in v {
            if x >= self.q.q() {
                return Err(Error::InvalidEntry { value: x, q: self.q.q() });
            }
        }
        match self.lookup[encode(self.q.q(), v)] {
            Some(i) => Ok(i as usize),
            None => Err(Error::InvalidParameter(
                "zero vector does not represent a projective point".into(),
            )),
        }
    }

    /// Positions of the unit vectors e_1, .., e_k in the point order. These
    /// are the pivot columns used by the classifier.
    pub fn unit_point_indices(&self) -> Vec<usize> {
        (0..self.k)
            .map(|r| {
                let mut e = vec![0u8; self.k];
                e[r] = 1;
                self.point_index(&e).expect("unit vector is a point")
            })
            .collect()
    }
}

/// The permutation group induced on the point frame by invertible k-by-k row
/// transformations (the projective general linear group in its action on
/// points). Permutations are stored explicitly, sorted, as arrays with
/// `perm[i]` = image of point `i`.
#[derive(Debug)]
pub struct InducedPointGroup {
    q: u8,
    k: usize,
    v: usize,
    perms: Vec<Vec<u8>>,
}

impl InducedPointGroup {
    #[inline]
    pub fn q(&self) -> u8 {
        self.q
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of points acted on.
    #[inline]
    pub fn degree(&self) -> usize {
        self.v
    }

    /// Group order.
    #[inline]
    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Vec<u8>] {
        &self.perms
    }
}

static FRAME_CACHE: LazyLock<Mutex<HashMap<(u8, usize), Arc<SimplexFrame>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Cached shared frame, for callers that look frames up repeatedly.
pub fn frame(q: u8, k: usize) -> Result<Arc<SimplexFrame>> {
    if let Some(f) = FRAME_CACHE.lock().unwrap().get(&(q, k)) {
        return Ok(f.clone());
    }
    let f = Arc::new(simplex_matrix(q, k)?);
    FRAME_CACHE.lock().unwrap().insert((q, k), f.clone());
    Ok(f)
}

fn group_key(q: u8, k: usize) -> (u8, usize) {
    (q, k)
}

static GROUP_CACHE: LazyLock<Mutex<HashMap<(u8, usize), Arc<InducedPointGroup>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Builds (and caches) the induced point group for `q` in {2, 3} with
/// `1 <= k <= 4` for GF(2) and `1 <= k <= 3` for GF(3). The (3, 4) action on
/// 40 points is out of scope: its twelve million permutations serve no
/// classification here.
pub fn induced_point_group(q: u8, k: usize) -> Result<Arc<InducedPointGroup>> {
    check_domain(q, k)?;
    if q == 3 && k == 4 {
        return Err(Error::UnsupportedDimension { q, k });
    }
    if let Some(g) = GROUP_CACHE.lock().unwrap().get(&group_key(q, k)) {
        return Ok(g.clone());
    }
    let frame = simplex_matrix(q, k)?;
    let v = frame.len();
    let field = frame.field();
    let cells = k * k;
    let total = (q as u64).pow(cells as u32);
    let mut seen: HashMap<Vec<u8>, ()> = HashMap::new();
    let mut perms: Vec<Vec<u8>> = Vec::new();
    let mut entries = vec![0u8; cells];
    for code in 0..total {
        let mut c = code;
        for e in entries.iter_mut() {
            *e = (c % q as u64) as u8;
            c /= q as u64;
        }
        let rows: Vec<Vec<u8>> = (0..k).map(|r| entries[r * k..(r + 1) * k].to_vec()).collect();
        let u = GFMatrix::from_rows(field, &rows)?;
        if crate::gf::det(&u)? == 0 {
            continue;
        }
        let mut perm = vec![0u8; v];
        for (i, p) in frame.points().iter().enumerate() {
            let mut img = vec![0u8; k];
            for (r, val) in img.iter_mut().enumerate() {
                let mut acc = 0u64;
                for c in 0..k {
                    acc += (u.get(r, c) * p[c]) as u64;
                }
                *val = field.reduce(acc);
            }
            perm[i] = frame.point_index(&img)? as u8;
        }
        if seen.insert(perm.clone(), ()).is_none() {
            perms.push(perm);
        }
    }
    perms.sort_unstable();
    let group = Arc::new(InducedPointGroup { q, k, v, perms });
    GROUP_CACHE.lock().unwrap().insert(group_key(q, k), group.clone());
    Ok(group)
}

/// The incidence table between message classes and points: row `j` (indexed
/// by the point order, message class represented by point j) has a 1 in
/// column `i` exactly when the representative vectors satisfy h_j . h_i != 0.
///
/// For k >= 2 this is the complement-of-hyperplane incidence of a symmetric
/// 2-design: every row has q^(k-1) ones and two distinct rows share
/// (q-1) * q^(k-2) ones. The weight of the codeword class j of the code with
/// multiplicity vector m is the j-th entry of A * m^T.
#[derive(Debug, Clone)]
pub struct DesignIncidence {
    q: u8,
    k: usize,
    v: usize,
    rows: Vec<Vec<u8>>,
    point_rows: Vec<Vec<u8>>,
}

impl DesignIncidence {
    #[inline]
    pub fn q(&self) -> u8 {
        self.q
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn v(&self) -> usize {
        self.v
    }

    /// 0/1 incidence row for message class `j`.
    pub fn row(&self, j: usize) -> &[u8] {
        &self.rows[j]
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Indices of the rows whose support contains point `i`.
    pub fn rows_through_point(&self, i: usize) -> &[u8] {
        &self.point_rows[i]
    }

    /// Row weight q^(k-1).
    pub fn row_weight(&self) -> usize {
        (self.q as usize).pow(self.k as u32 - 1)
    }
}

static INCIDENCE_CACHE: LazyLock<Mutex<HashMap<(u8, usize), Arc<DesignIncidence>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Builds (and caches) the incidence table for `q` in {2, 3}, `1 <= k <= 4`.
pub fn design_incidence(q: u8, k: usize) -> Result<Arc<DesignIncidence>> {
    check_domain(q, k)?;
    if let Some(d) = INCIDENCE_CACHE.lock().unwrap().get(&(q, k)) {
        return Ok(d.clone());
    }
    let frame = simplex_matrix(q, k)?;
    let field = frame.field();
    let v = frame.len();
    let mut rows = vec![vec![0u8; v]; v];
    for (j, x) in frame.points().iter().enumerate() {
        for (i, h) in frame.points().iter().enumerate() {
            if GFMatrix::dot(field, x, h) != 0 {
                rows[j][i] = 1;
            }
        }
    }
    let mut point_rows = vec![Vec::new(); v];
    for (j, row) in rows.iter().enumerate() {
        for (i, &b) in row.iter().enumerate() {
            if b == 1 {
                point_rows[i].push(j as u8);
            }
        }
    }
    let d = Arc::new(DesignIncidence { q, k, v, rows, point_rows });
    INCIDENCE_CACHE.lock().unwrap().insert((q, k), d.clone());
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{mat_mul, rank};

    #[test]
    fn binary_dimension_3_column_order() {
        let frame = simplex_matrix(2, 3).unwrap();
        let expected: Vec<Vec<u8>> = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![1, 1, 0],
            vec![0, 0, 1],
            vec![1, 0, 1],
            vec![0, 1, 1],
            vec![1, 1, 1],
        ];
        assert_eq!(frame.points(), expected.as_slice());
        // Column i reads as the binary digits of i+1, first coordinate least
        // significant.
        for (i, p) in frame.points().iter().enumerate() {
            let val: usize = p.iter().enumerate().map(|(b, &x)| (x as usize) << b).sum();
            assert_eq!(val, i + 1);
        }
    }

    #[test]
    fn ternary_dimension_2_column_order() {
        let frame = simplex_matrix(3, 2).unwrap();
        let expected: Vec<Vec<u8>> = vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]];
        assert_eq!(frame.points(), expected.as_slice());
        assert_eq!(
            frame.matrix(),
            &GFMatrix::from_rows(FieldOrder::new(3).unwrap(), &[vec![1, 0, 1, 1], vec![0, 1, 1, 2]])
                .unwrap()
        );
    }

    #[test]
    fn dimension_1_frame_is_single_one() {
        for q in [2, 3] {
            let frame = simplex_matrix(q, 1).unwrap();
            assert_eq!(frame.points(), &[vec![1]]);
        }
    }

    #[test]
    fn frame_sizes_and_rank() {
        for (q, k, v) in [(2, 2, 3), (2, 3, 7), (2, 4, 15), (3, 2, 4), (3, 3, 13), (3, 4, 40)] {
            let frame = simplex_matrix(q, k).unwrap();
            assert_eq!(frame.len(), v);
            assert_eq!(rank(frame.matrix()), k);
            // Distinct points and normalized representatives.
            for (i, p) in frame.points().iter().enumerate() {
                let first = p.iter().find(|&&x| x != 0).copied();
                assert_eq!(first, Some(1));
                assert_eq!(frame.point_index(p).unwrap(), i);
            }
        }
    }

    #[test]
    fn point_index_normalizes_scalars() {
        let frame = simplex_matrix(3, 2).unwrap();
        assert_eq!(frame.point_index(&[2, 0]).unwrap(), 0);
        assert_eq!(frame.point_index(&[2, 1]).unwrap(), 3);
        assert_eq!(frame.point_index(&[2, 2]).unwrap(), 2);
        assert!(frame.point_index(&[0, 0]).is_err());
        assert!(frame.point_index(&[0]).is_err());
    }

    #[test]
    fn unit_point_positions() {
        assert_eq!(simplex_matrix(2, 3).unwrap().unit_point_indices(), vec![0, 1, 3]);
        assert_eq!(simplex_matrix(2, 4).unwrap().unit_point_indices(), vec![0, 1, 3, 7]);
        assert_eq!(simplex_matrix(3, 2).unwrap().unit_point_indices(), vec![0, 1]);
        assert_eq!(simplex_matrix(3, 3).unwrap().unit_point_indices(), vec![0, 1, 4]);
    }

    #[test]
    fn simplex_self_orthogonal_from_dimension_floor() {
        // S * S^T = 0 holds from k = 3 over GF(2) and k = 2 over GF(3).
        for (q, k) in [(2usize, 3usize), (2, 4), (3, 2), (3, 3)] {
            let frame = simplex_matrix(q as u8, k).unwrap();
            let s = frame.matrix();
            let st = s.transpose();
            let gram = mat_mul(s, &st).unwrap();
            let zero = GFMatrix::zeros(frame.field(), k, k).unwrap();
            assert_eq!(gram, zero, "q={q} k={k}");
        }
        // And fails below the floor.
        let frame = simplex_matrix(2, 2).unwrap();
        let gram = frame.matrix().gram();
        assert_ne!(gram, GFMatrix::zeros(frame.field(), 2, 2).unwrap());
    }

    #[test]
    fn group_orders() {
        assert_eq!(induced_point_group(2, 3).unwrap().order(), 168);
        assert_eq!(induced_point_group(2, 4).unwrap().order(), 20160);
        assert_eq!(induced_point_group(3, 2).unwrap().order(), 24);
        assert_eq!(induced_point_group(3, 3).unwrap().order(), 5616);
        assert!(induced_point_group(3, 4).is_err());
    }

    #[test]
    fn group_contains_identity_and_is_closed() {
        for (q, k) in [(2, 3), (3, 2), (3, 3)] {
            let g = induced_point_group(q, k).unwrap();
            let v = g.degree();
            let id: Vec<u8> = (0..v as u8).collect();
            assert!(g.perms().binary_search(&id).is_ok());
            // Exhaustive closure for the small group, sampled for the rest.
            let pairs: Vec<(usize, usize)> = if g.order() <= 24 {
                (0..g.order()).flat_map(|a| (0..g.order()).map(move |b| (a, b))).collect()
            } else {
                (0..200).map(|i| ((i * 37) % g.order(), (i * 101 + 5) % g.order())).collect()
            };
            for (a, b) in pairs {
                let pa = &g.perms()[a];
                let pb = &g.perms()[b];
                let composed: Vec<u8> = (0..v).map(|i| pb[pa[i] as usize]).collect();
                assert!(g.perms().binary_search(&composed).is_ok());
            }
        }
    }

    #[test]
    fn ternary_dimension_2_group_is_full_symmetric_group() {
        let g = induced_point_group(3, 2).unwrap();
        let mut all: Vec<Vec<u8>> = Vec::new();
        let mut idx = [0usize, 1, 2, 3];
        // Heap's algorithm, small enough to just collect all 24.
        fn heap(n: usize, arr: &mut [usize; 4], out: &mut Vec<Vec<u8>>) {
            if n == 1 {
                out.push(arr.iter().map(|&x| x as u8).collect());
                return;
            }
            for i in 0..n {
                heap(n - 1, arr, out);
                if n % 2 == 0 {
                    arr.swap(i, n - 1);
                } else {
                    arr.swap(0, n - 1);
                }
            }
        }
        heap(4, &mut idx, &mut all);
        all.sort_unstable();
        all.dedup();
        assert_eq!(g.perms(), all.as_slice());
    }

    #[test]
    fn incidence_is_a_symmetric_design() {
        for (q, k) in [(2usize, 3usize), (2, 4), (3, 2), (3, 3)] {
            let d = design_incidence(q as u8, k).unwrap();
            let v = d.v();
            let row_weight = q.pow(k as u32 - 1);
            let pair_weight = (q - 1) * q.pow(k as u32 - 2);
            for j in 0..v {
                let w: usize = d.row(j).iter().map(|&b| b as usize).sum();
                assert_eq!(w, row_weight);
                for j2 in j + 1..v {
                    let inter: usize =
                        d.row(j).iter().zip(d.row(j2)).map(|(&a, &b)| (a & b) as usize).sum();
                    assert_eq!(inter, pair_weight);
                }
            }
            // Symmetry of the table itself: h_j . h_i = h_i . h_j.
            for j in 0..v {
                for i in 0..v {
                    assert_eq!(d.row(j)[i], d.row(i)[j]);
                }
            }
        }
    }
}
