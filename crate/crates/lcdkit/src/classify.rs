//! Exhaustive classification of LCD codes with all-nonzero columns for given
//! (q, k, n, d): bounded multiplicity enumeration with weight-constraint
//! pruning, a Gram-determinant leaf filter, and deduplication up to the
//! induced point group via full-orbit expansion.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::code::MultiplicityVector;
use crate::error::{Error, Result};
use crate::gf::{det, GFMatrix};
use crate::simplex::{self, InducedPointGroup};

const MAX_POINTS: usize = 15;
const MAX_TRI: usize = 10;

/// Common per-coordinate search window plus the positions forced nonzero.
///
/// Both bounds follow from requiring every codeword class weight to reach d:
/// summing the class weights through and around a point gives
/// `lo = max(0, qd - (q-1)n)` and `hi = n - (q^(k-1)-1) / ((q-1) q^(k-2)) * d`
/// (floored). The pivots are the unit-vector positions; every full-rank code
/// has an equivalent copy with all pivots present, so forcing them loses no
/// equivalence class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    pub lo: u32,
    pub hi: u32,
    pub pivot_indices: Vec<usize>,
}

/// Whether classification filters codes at exactly d or at least d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    ExactD,
    AtLeastD,
}

/// The deduplicated outcome of one search: canonical representatives in
/// ascending lexicographic order.
#[derive(Debug, Clone)]
pub struct ClassificationResult {
    pub q: u8,
    pub k: usize,
    pub n: u64,
    pub d: u64,
    pub mode: Mode,
    pub representatives: Vec<MultiplicityVector>,
    pub count: usize,
}

/// Tuning knobs for [`classify_with`].
#[derive(Debug, Clone)]
pub struct ClassifyOptions {
    /// Worker threads for search sharding; 1 runs in-place, 0 uses all cores.
    pub workers: usize,
    /// Force unit-vector coordinates to multiplicity >= 1. Disabling explores
    /// the raw bounded space (for cross-checks); results are identical.
    pub enforce_pivots: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { workers: 1, enforce_pivots: true }
    }
}

fn classifier_floor(q: u8) -> usize {
    if q == 2 {
        3
    } else {
        2
    }
}

fn check_classifier_domain(q: u8, k: usize) -> Result<()> {
    let supported = matches!((q, k), (2, 3) | (2, 4) | (3, 2) | (3, 3));
    if !supported {
        return Err(Error::UnsupportedDimension { q, k });
    }
    Ok(())
}

/// Computes the per-coordinate multiplicity window for codes of length n and
/// minimum weight at least d, plus the forced pivot positions. Errors with
/// `EmptySearchSpace` when the window is empty (no such code can exist).
pub fn multiplicity_bounds(q: u8, k: usize, n: u64, d: u64) -> Result<SearchBounds> {
    if !(2..=3).contains(&q) || k < classifier_floor(q) || k > 4 {
        return Err(Error::UnsupportedDimension { q, k });
    }
    let qi = q as i128;
    let ni = n as i128;
    let di = d as i128;
    let lo = (qi * di - (qi - 1) * ni).max(0);
    // hi = floor(n - (q^(k-1) - 1) / ((q-1) q^(k-2)) * d), exactly.
    let den = (qi - 1) * qi.pow(k as u32 - 2);
    let num = ni * den - (qi.pow(k as u32 - 1) - 1) * di;
    let hi = num.div_euclid(den);
    if hi < lo {
        return Err(Error::EmptySearchSpace);
    }
    if hi > 255 {
        return Err(Error::InvalidParameter(format!(
            "multiplicity window up to {hi} is beyond direct search; reduce the length first"
        )));
    }
    let frame = simplex::frame(q, k)?;
    Ok(SearchBounds {
        lo: lo as u32,
        hi: hi as u32,
        pivot_indices: frame.unit_point_indices(),
    })
}

/// Lexicographically least vector in the orbit of `mv` under the induced
/// point group; constant on orbits and idempotent.
pub fn canonical_form(mv: &MultiplicityVector) -> Result<MultiplicityVector> {
    let group = simplex::induced_point_group(mv.q(), mv.k())?;
    let m = mv.entries();
    let v = m.len();
    let mut best: Vec<u32> = m.to_vec();
    let mut cand = vec![0u32; v];
    for perm in group.perms() {
        for j in 0..v {
            cand[j] = m[perm[j] as usize];
        }
        if cand < best {
            best.copy_from_slice(&cand);
        }
    }
    MultiplicityVector::new(mv.q(), mv.k(), best)
}

/// Monomial equivalence test for multiplicity codes: orbits under the induced
/// point group coincide with code equivalence once no column is zero.
pub fn are_equivalent(a: &MultiplicityVector, b: &MultiplicityVector) -> Result<bool> {
    if a.q() != b.q() || a.k() != b.k() {
        return Err(Error::ShapeMismatch(format!(
            "cannot compare (q={}, k={}) against (q={}, k={})",
            a.q(),
            a.k(),
            b.q(),
            b.k()
        )));
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Independent oracle: decides monomial equivalence of two generator matrices
/// by enumerating every monomial transformation (all column permutations and
/// all nonzero column scalings). Only for tiny lengths: n <= 8 over GF(2),
/// n <= 6 over GF(3).
pub fn bruteforce_equiv_oracle(g1: &GFMatrix, g2: &GFMatrix) -> Result<bool> {
    if g1.field() != g2.field() {
        return Err(Error::FieldMismatch);
    }
    if g1.cols() != g2.cols() {
        return Err(Error::ShapeMismatch(format!(
            "lengths differ: {} vs {}",
            g1.cols(),
            g2.cols()
        )));
    }
    let q = g1.field();
    let n = g1.cols();
    let limit = if q.q() == 2 { 8 } else { 6 };
    if n > limit {
        return Err(Error::OracleLimit(format!(
            "length {n} exceeds the exhaustive monomial search limit {limit} for q={}",
            q.q()
        )));
    }
    let codewords = |g: &GFMatrix| -> HashSet<Vec<u8>> {
        let k = g.rows();
        let total = (q.q() as u64).pow(k as u32);
        let mut out = HashSet::with_capacity(total as usize);
        let mut msg = vec![0u8; k];
        for code in 0..total {
            let mut c = code;
            for e in msg.iter_mut() {
                *e = (c % q.q() as u64) as u8;
                c /= q.q() as u64;
            }
            let word: Vec<u8> = (0..n)
                .map(|j| {
                    let mut acc = 0u64;
                    for (i, &x) in msg.iter().enumerate() {
                        acc += (x * g.get(i, j)) as u64;
                    }
                    q.reduce(acc)
                })
                .collect();
            out.insert(word);
        }
        out
    };
    let set1 = codewords(g1);
    let set2 = codewords(g2);
    if set1.len() != set2.len() {
        return Ok(false);
    }
    let mut wd1: Vec<usize> = set1.iter().map(|w| w.iter().filter(|&&x| x != 0).count()).collect();
    let mut wd2: Vec<usize> = set2.iter().map(|w| w.iter().filter(|&&x| x != 0).count()).collect();
    wd1.sort_unstable();
    wd2.sort_unstable();
    if wd1 != wd2 {
        return Ok(false);
    }
    let words1: Vec<Vec<u8>> = set1.into_iter().collect();
    let scale_patterns: u64 = if q.q() == 2 { 1 } else { 1u64 << n };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut stack = vec![0usize; n];
    let mut mapped = vec![0u8; n];
    // Heap's algorithm over the permutations, scales enumerated per
    // permutation; early exit on the first codeword that fails to map.
    let mut try_perm = |perm: &[usize]| -> bool {
        'scales: for s in 0..scale_patterns {
            for w in &words1 {
                for j in 0..n {
                    let lambda = if q.q() == 3 && (s >> j) & 1 == 1 { 2 } else { 1 };
                    mapped[j] = q.mul(lambda, w[perm[j]]);
                }
                if !set2.contains(mapped.as_slice()) {
                    continue 'scales;
                }
            }
            return true;
        }
        false
    };
    if try_perm(&perm) {
        return Ok(true);
    }
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            if try_perm(&perm) {
                return Ok(true);
            }
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    Ok(false)
}

// --- search engine ---

struct Engine {
    q: u8,
    v: usize,
    n: u64,
    d: u64,
    mode: Mode,
    hi: u32,
    // Total slack: the class weights sum to q^(k-1) n, so the surplus over d
    // across all classes is exactly q^(k-1) n - [k]_q d at every leaf.
    slack: u64,
    // Weight added to the class total per unit of multiplicity: q^(k-1).
    unit_weight: u64,
    // Per assignment position (the engine fixes coordinates in a fitted
    // order, not point order):
    point_at: Vec<usize>,
    lo_at: Vec<u32>,
    supports_at: Vec<Vec<u8>>,
    supp_mask_at: Vec<u16>,
    tri_at: Vec<[u8; MAX_TRI]>,
    suffix_lo: Vec<u64>,
    suffix_hi: Vec<u64>,
    suffix_class_hi: Vec<[u64; MAX_POINTS]>,
    tri_len: usize,
    det_ok: Vec<bool>,
}

#[derive(Clone)]
struct Node {
    pos: usize,
    rem: u64,
    w: [u64; MAX_POINTS],
    tri: [u8; MAX_TRI],
    m: [u8; MAX_POINTS],
}

enum Sink<'a> {
    Leaves(&'a mut dyn FnMut(&[u8; MAX_POINTS])),
    Frontier(usize, &'a mut Vec<Node>),
}

impl Engine {
    fn new(q: u8, k: usize, n: u64, d: u64, mode: Mode, enforce_pivots: bool) -> Result<Engine> {
        check_classifier_domain(q, k)?;
        let bounds = multiplicity_bounds(q, k, n, d)?;
        let frame = simplex::frame(q, k)?;
        let incidence = simplex::design_incidence(q, k)?;
        let v = frame.len();
        let field = frame.field();
        let unit_weight = (q as u64).pow(k as u32 - 1);
        let weight_total = unit_weight as i128 * n as i128;
        let slack = weight_total - v as i128 * d as i128;
        if slack < 0 {
            return Err(Error::EmptySearchSpace);
        }
        let slack = slack as u64;

        let mut lo = vec![bounds.lo; v];
        if enforce_pivots {
            for &p in &bounds.pivot_indices {
                lo[p] = lo[p].max(1);
            }
        }

        // Assignment order: repeatedly pick the point closing the most
        // codeword-class constraints (classes whose support has the fewest
        // unassigned points left), so weight pruning bites early.
        let mut rem_support: Vec<usize> = vec![incidence.row_weight(); v];
        let mut unassigned = vec![true; v];
        let mut point_at = Vec::with_capacity(v);
        for _ in 0..v {
            let mut best: Option<(Vec<usize>, usize)> = None;
            for i in 0..v {
                if !unassigned[i] {
                    continue;
                }
                // score[r] = number of classes through i with r unassigned
                // support points (including i); smaller r first.
                let mut score = vec![0usize; incidence.row_weight() + 1];
                for &j in incidence.rows_through_point(i) {
                    score[rem_support[j as usize]] += 1;
                }
                let better = match &best {
                    None => true,
                    Some((s, _)) => score > *s,
                };
                if better {
                    best = Some((score, i));
                }
            }
            let (_, i) = best.expect("some point unassigned");
            unassigned[i] = false;
            for &j in incidence.rows_through_point(i) {
                rem_support[j as usize] -= 1;
            }
            point_at.push(i);
        }

        let lo_at: Vec<u32> = point_at.iter().map(|&i| lo[i]).collect();
        let supports_at: Vec<Vec<u8>> = point_at
            .iter()
            .map(|&i| incidence.rows_through_point(i).to_vec())
            .collect();
        let supp_mask_at: Vec<u16> = supports_at
            .iter()
            .map(|s| s.iter().fold(0u16, |m, &j| m | (1 << j)))
            .collect();

        // Gram triangle pattern of each point: upper triangle of h h^T.
        let tri_len = k * (k + 1) / 2;
        let tri_at: Vec<[u8; MAX_TRI]> = point_at
            .iter()
            .map(|&i| {
                let p = &frame.points()[i];
                let mut t = [0u8; MAX_TRI];
                let mut idx = 0;
                for a in 0..k {
                    for b in a..k {
                        t[idx] = field.mul(p[a], p[b]);
                        idx += 1;
                    }
                }
                t
            })
            .collect();

        let mut suffix_lo = vec![0u64; v + 1];
        let mut suffix_hi = vec![0u64; v + 1];
        let mut suffix_class_hi = vec![[0u64; MAX_POINTS]; v + 1];
        for pos in (0..v).rev() {
            suffix_lo[pos] = suffix_lo[pos + 1] + lo_at[pos] as u64;
            suffix_hi[pos] = suffix_hi[pos + 1] + bounds.hi as u64;
            suffix_class_hi[pos] = suffix_class_hi[pos + 1];
            for &j in &supports_at[pos] {
                suffix_class_hi[pos][j as usize] += bounds.hi as u64;
            }
        }

        // Determinant lookup over all symmetric k x k matrices, indexed by
        // the base-q packing of the upper triangle.
        let lut_size = (q as usize).pow(tri_len as u32);
        let mut det_ok = vec![false; lut_size];
        for (code, slot) in det_ok.iter_mut().enumerate() {
            let mut tri = [0u8; MAX_TRI];
            let mut c = code;
            for t in tri.iter_mut().take(tri_len) {
                *t = (c % q as usize) as u8;
                c /= q as usize;
            }
            let mut g = GFMatrix::zeros(field, k, k)?;
            let mut idx = 0;
            for a in 0..k {
                for b in a..k {
                    g.set(a, b, tri[idx]);
                    g.set(b, a, tri[idx]);
                    idx += 1;
                }
            }
            *slot = det(&g)? != 0;
        }

        Ok(Engine {
            q,
            v,
            n,
            d,
            mode,
            hi: bounds.hi,
            slack,
            unit_weight,
            point_at,
            lo_at,
            supports_at,
            supp_mask_at,
            tri_at,
            suffix_lo,
            suffix_hi,
            suffix_class_hi,
            tri_len,
            det_ok,
        })
    }

    #[inline]
    fn tri_index(&self, tri: &[u8; MAX_TRI]) -> usize {
        let mut idx = 0usize;
        for p in (0..self.tri_len).rev() {
            idx = idx * self.q as usize + tri[p] as usize;
        }
        idx
    }

    fn root(&self) -> Node {
        Node {
            pos: 0,
            rem: self.n,
            w: [0; MAX_POINTS],
            tri: [0; MAX_TRI],
            m: [0; MAX_POINTS],
        }
    }

    fn dfs(&self, node: &mut Node, sink: &mut Sink) {
        if node.pos == self.v {
            debug_assert_eq!(node.rem, 0);
            if matches!(self.mode, Mode::ExactD)
                && node.w[..self.v].iter().copied().min() != Some(self.d)
            {
                return;
            }
            if !self.det_ok[self.tri_index(&node.tri)] {
                return;
            }
            if let Sink::Leaves(f) = sink {
                f(&node.m);
            }
            return;
        }
        if let Sink::Frontier(depth, out) = sink {
            if node.pos == *depth {
                out.push(node.clone());
                return;
            }
        }
        let pos = node.pos;
        let pt = self.point_at[pos];
        let w_base = node.w;
        let tri_base = node.tri;
        let rem = node.rem;
        let sl = self.suffix_lo[pos + 1];
        if rem < sl {
            return; // pivot floors alone exceed the remaining budget
        }
        let mut c_min = (self.lo_at[pos] as u64).max(rem.saturating_sub(self.suffix_hi[pos + 1]));
        let mut c_max = (self.hi as u64).min(rem - sl);
        // Per-class reach: each class must still be able to climb to d. For a
        // class through pt the candidate c counts toward it, which turns the
        // cap shortfall into a lower bound on c and makes the budget test
        // c-independent; for a class missing pt both tests are resolvable
        // now, the budget one as an upper bound on c.
        let caps = &self.suffix_class_hi[pos + 1];
        let mask = self.supp_mask_at[pos];
        for j in 0..self.v {
            let wj = w_base[j];
            if wj >= self.d {
                continue;
            }
            let need = self.d - wj;
            if need > rem {
                return;
            }
            if mask & (1 << j) != 0 {
                if caps[j] < need {
                    c_min = c_min.max(need - caps[j]);
                }
            } else {
                if caps[j] < need {
                    return;
                }
                c_max = c_max.min(rem - need);
            }
        }
        if c_min > c_max {
            node.w = w_base;
            node.tri = tri_base;
            return;
        }
        if c_min > 0 {
            for &j in &self.supports_at[pos] {
                node.w[j as usize] += c_min;
            }
            let cq = (c_min % self.q as u64) as u8;
            if cq > 0 {
                for p in 0..self.tri_len {
                    node.tri[p] = (node.tri[p] + cq * self.tri_at[pos][p]) % self.q;
                }
            }
        }
        // Global weight accounting: surpluses above d can never shrink and
        // their total is fixed at `slack`; deficits below d must be covered
        // by the q^(k-1)-per-unit weight still to be assigned. Both
        // violations are monotone in c (more multiplicity only raises the
        // surplus, and each unit shrinks the deficit by at most what it
        // shrinks the budget), so either one ends the loop.
        let mut surplus = 0u64;
        let mut deficit = 0u64;
        for j in 0..self.v {
            let wj = node.w[j];
            if wj >= self.d {
                surplus += wj - self.d;
            } else {
                deficit += self.d - wj;
            }
        }
        let mut c = c_min;
        loop {
            let rem2 = rem - c;
            if surplus > self.slack || deficit > self.unit_weight * rem2 {
                break;
            }
            node.m[pt] = c as u8;
            node.rem = rem2;
            node.pos = pos + 1;
            self.dfs(node, sink);
            node.m[pt] = 0;
            c += 1;
            if c > c_max {
                break;
            }
            for &j in &self.supports_at[pos] {
                let j = j as usize;
                let wj = node.w[j];
                node.w[j] = wj + 1;
                if wj >= self.d {
                    surplus += 1;
                } else {
                    deficit -= 1;
                }
            }
            for p in 0..self.tri_len {
                let t = node.tri[p] + self.tri_at[pos][p];
                node.tri[p] = if t >= self.q { t - self.q } else { t };
            }
        }
        node.w = w_base;
        node.tri = tri_base;
        node.rem = rem;
        node.pos = pos;
    }
}

#[inline]
fn pack(m: &[u8; MAX_POINTS], v: usize) -> u128 {
    let mut x = 0u128;
    for &e in m.iter().take(v) {
        x = (x << 8) | e as u128;
    }
    x
}

fn unpack(code: u128, v: usize) -> Vec<u32> {
    (0..v)
        .map(|i| ((code >> (8 * (v - 1 - i))) & 0xff) as u32)
        .collect()
}

/// Deduplicates a stream of surviving vectors: each new orbit is expanded in
/// full through the group, remembered, and represented by its least element.
struct Dedup<'g> {
    group: &'g InducedPointGroup,
    v: usize,
    seen: HashSet<u128>,
    reps: Vec<u128>,
}

impl<'g> Dedup<'g> {
    fn new(group: &'g InducedPointGroup, v: usize) -> Self {
        Dedup { group, v, seen: HashSet::new(), reps: Vec::new() }
    }

    fn offer(&mut self, m: &[u8; MAX_POINTS]) {
        let code = pack(m, self.v);
        if self.seen.contains(&code) {
            return;
        }
        let mut best = u128::MAX;
        let mut img = [0u8; MAX_POINTS];
        for perm in self.group.perms() {
            for j in 0..self.v {
                img[j] = m[perm[j] as usize];
            }
            let pc = pack(&img, self.v);
            best = best.min(pc);
            self.seen.insert(pc);
        }
        self.reps.push(best);
    }
}

/// Runs the bounded search and returns every surviving multiplicity vector
/// before deduplication, in search order. Intended for small parameter sets;
/// the undeduplicated stream grows with the group order.
pub fn enumerate_candidates(
    q: u8,
    k: usize,
    n: u64,
    d: u64,
    mode: Mode,
) -> Result<Vec<MultiplicityVector>> {
    check_classifier_domain(q, k)?;
    let engine = match Engine::new(q, k, n, d, mode, true) {
        Ok(e) => e,
        Err(Error::EmptySearchSpace) => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    let mut out = Vec::new();
    let v = engine.v;
    let mut cb = |m: &[u8; MAX_POINTS]| {
        let entries: Vec<u32> = m[..v].iter().map(|&x| x as u32).collect();
        out.push(MultiplicityVector::new(q, k, entries).expect("engine emits valid vectors"));
    };
    engine.dfs(&mut engine.root(), &mut Sink::Leaves(&mut cb));
    Ok(out)
}

fn result_from_reps(
    q: u8,
    k: usize,
    n: u64,
    d: u64,
    mode: Mode,
    mut reps: Vec<u128>,
    v: usize,
) -> ClassificationResult {
    reps.sort_unstable();
    reps.dedup();
    let representatives: Vec<MultiplicityVector> = reps
        .into_iter()
        .map(|code| {
            MultiplicityVector::new(q, k, unpack(code, v)).expect("engine emits valid vectors")
        })
        .collect();
    let count = representatives.len();
    ClassificationResult { q, k, n, d, mode, representatives, count }
}

/// Classifies LCD [n, k, d] codes with no zero column over GF(q), up to
/// equivalence, with explicit options.
pub fn classify_with(
    q: u8,
    k: usize,
    n: u64,
    d: u64,
    mode: Mode,
    opts: &ClassifyOptions,
) -> Result<ClassificationResult> {
    check_classifier_domain(q, k)?;
    let group = simplex::induced_point_group(q, k)?;
    let engine = match Engine::new(q, k, n, d, mode, opts.enforce_pivots) {
        Ok(e) => e,
        Err(Error::EmptySearchSpace) => {
            return Ok(ClassificationResult {
                q,
                k,
                n,
                d,
                mode,
                representatives: Vec::new(),
                count: 0,
            })
        }
        Err(e) => return Err(e),
    };
    let v = engine.v;
    let workers = if opts.workers == 0 {
        std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
    } else {
        opts.workers
    };

    if workers <= 1 {
        let mut dedup = Dedup::new(&group, v);
        let mut cb = |m: &[u8; MAX_POINTS]| dedup.offer(m);
        engine.dfs(&mut engine.root(), &mut Sink::Leaves(&mut cb));
        return Ok(result_from_reps(q, k, n, d, mode, dedup.reps, v));
    }

    // Sharded run: expand a frontier wide enough to balance, process each
    // subtree independently, then merge representative sets. A class found in
    // two shards yields the same canonical code, so the union is exact.
    let target = workers * 64;
    let mut depth = 1;
    let mut frontier = Vec::new();
    loop {
        frontier.clear();
        engine.dfs(&mut engine.root(), &mut Sink::Frontier(depth, &mut frontier));
        if frontier.len() >= target || depth + 1 >= v {
            break;
        }
        depth += 1;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?;
    let shard_reps: Vec<Vec<u128>> = pool.install(|| {
        frontier
            .par_iter()
            .map(|node| {
                let mut dedup = Dedup::new(&group, v);
                let mut local = node.clone();
                let mut cb = |m: &[u8; MAX_POINTS]| dedup.offer(m);
                engine.dfs(&mut local, &mut Sink::Leaves(&mut cb));
                dedup.reps
            })
            .collect()
    });
    let mut all: Vec<u128> = shard_reps.into_iter().flatten().collect();
    all.sort_unstable();
    all.dedup();
    Ok(result_from_reps(q, k, n, d, mode, all, v))
}

/// Classifies LCD [n, k, d] codes with no zero column over GF(q), up to
/// equivalence: every representative is canonical, LCD, spans dimension k,
/// and meets the weight mode; the count is the number of equivalence classes.
pub fn classify(q: u8, k: usize, n: u64, d: u64, mode: Mode) -> Result<ClassificationResult> {
    classify_with(q, k, n, d, mode, &ClassifyOptions::default())
}
