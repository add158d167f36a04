//! Closed-form parameter machinery: the point-count coefficient, the
//! Griesmer bound, the residual/threshold bookkeeping behind length
//! reduction, the piecewise largest-LCD-weight formulas for the four
//! supported (q, k) families, and lifting of base classifications to
//! arbitrary lengths by simplex juxtaposition.

use crate::classify::ClassificationResult;
use crate::code::{self, juxtapose_with_simplex};
use crate::error::{Error, Result};
use crate::gf::GFMatrix;
use crate::store;

/// Per-residue offsets of the largest LCD minimum weight: for n = vs + t the
/// optimal d is q^(k-1) s + OFFSET[t], where v is the projective point count.
const OFFSETS_2_3: [i64; 7] = [-1, -1, 0, 1, 1, 2, 2];
const OFFSETS_2_4: [i64; 15] = [-2, -1, 0, 0, 1, 2, 2, 2, 3, 4, 4, 4, 5, 6, 6];
const OFFSETS_3_2: [i64; 4] = [-1, 0, 1, 1];
const OFFSETS_3_3: [i64; 13] = [-1, -1, 0, 1, 2, 2, 3, 4, 4, 5, 6, 6, 7];

fn formula_rows(q: u8, k: usize) -> Result<(&'static [i64], u64)> {
    match (q, k) {
        (2, 3) => Ok((&OFFSETS_2_3, 3)),
        (2, 4) => Ok((&OFFSETS_2_4, 4)),
        (3, 2) => Ok((&OFFSETS_3_2, 2)),
        (3, 3) => Ok((&OFFSETS_3_3, 3)),
        _ => Err(Error::UnsupportedDimension { q, k }),
    }
}

/// Number of projective points of PG(k-1, q): (q^k - 1)/(q - 1).
pub fn gaussian_count(q: u8, k: usize) -> u64 {
    let mut v = 0u64;
    let mut p = 1u64;
    for _ in 0..k {
        v += p;
        p = p.saturating_mul(q as u64);
    }
    v
}

/// Largest d >= 0 with n >= sum of ceil(d / q^i) for i = 0..k-1.
pub fn griesmer_bound(q: u8, n: u64, k: usize) -> u64 {
    let cost = |d: u64| -> u64 {
        let mut sum = 0u64;
        let mut p = 1u64;
        for _ in 0..k {
            sum += d.div_ceil(p);
            p = p.saturating_mul(q as u64);
        }
        sum
    };
    let mut lo = 0u64;
    let mut hi = n;
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if cost(mid) <= n {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// The residual q^(k-1) n - v d; negative values are legal and signal that d
/// exceeds the weight the length can carry.
pub fn residual_r(q: u8, n: u64, k: usize, d: u64) -> i64 {
    let qi = q as i128;
    let r = qi.pow(k as u32 - 1) * n as i128 - gaussian_count(q, k) as i128 * d as i128;
    r as i64
}

/// Threshold s' of the residue family (t, alpha_t): the least s from which
/// the length-reduction correspondence applies, computed as (q r - t)/v + 1
/// with r the family residual. The division is exact whenever the family is
/// described consistently; a remainder means the caller's (t, alpha_t) pair
/// is not a residue-form row, which is a bookkeeping bug, not a valid state.
pub fn threshold_s_prime(q: u8, k: usize, t: u64, alpha_t: i64) -> Result<u64> {
    let v = gaussian_count(q, k) as i64;
    let qi = q as i64;
    let r = qi.pow(k as u32 - 1) * t as i64 - v * alpha_t;
    let num = qi * r - t as i64;
    if num.rem_euclid(v) != 0 {
        return Err(Error::AssumptionViolated(format!(
            "threshold for residue {t} with offset {alpha_t} is not an integer"
        )));
    }
    let s = num.div_euclid(v) + 1;
    if s < 1 {
        return Err(Error::AssumptionViolated(format!(
            "threshold for residue {t} with offset {alpha_t} is not positive"
        )));
    }
    Ok(s as u64)
}

/// The residue row a length falls in: n = vs + t plus the rendered branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseRow {
    pub s: u64,
    pub residue: u64,
    pub branch: String,
}

/// The value d_q(n, k) together with the formula branch that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalWeightAnswer {
    pub q: u8,
    pub k: usize,
    pub n: u64,
    pub d: u64,
    pub case_row: CaseRow,
}

fn linear_term(coef: u64, shift: i64) -> String {
    match shift {
        0 => format!("{coef}s"),
        s if s > 0 => format!("{coef}s+{s}"),
        s => format!("{coef}s{s}"),
    }
}

/// Largest minimum weight among LCD [n, k] codes over GF(q), by the
/// piecewise residue formulas. Supported: (2,3) for n >= 3, (2,4) for
/// n >= 4, (3,2) for n >= 2, (3,3) for n >= 3.
pub fn largest_lcd_weight(q: u8, k: usize, n: u64) -> Result<OptimalWeightAnswer> {
    let (offsets, floor) = formula_rows(q, k)?;
    if n < floor {
        return Err(Error::InvalidParameter(format!(
            "largest LCD weight for q={q}, k={k} is defined from n={floor}; got n={n}"
        )));
    }
    let v = gaussian_count(q, k);
    let s = n / v;
    let t = n % v;
    let slope = (q as u64).pow(k as u32 - 1);
    let d = (slope * s) as i64 + offsets[t as usize];
    debug_assert!(d >= 1);
    let d = d as u64;
    debug_assert!(d <= griesmer_bound(q, n, k));
    let branch = format!(
        "{} -> {}",
        linear_term(v, t as i64),
        linear_term(slope, offsets[t as usize])
    );
    Ok(OptimalWeightAnswer { q, k, n, d, case_row: CaseRow { s, residue: t, branch } })
}

/// Smallest length congruent to t modulo the point count for which the
/// optimal-weight formula of (q, k) applies; the base store keeps one
/// classification at each such length.
pub fn smallest_supported_length(q: u8, k: usize, t: u64) -> Result<u64> {
    let (_, floor) = formula_rows(q, k)?;
    let v = gaussian_count(q, k);
    let t = t % v;
    Ok(if t >= floor { t } else { t + v })
}

/// How a classification problem at (n, d) maps down to its base length.
///
/// `applicable` records whether the one-to-one correspondence between the
/// classes at (n, d) and the classes at (base_n, base_d) is guaranteed,
/// which requires qd - (q-1)n >= 1 and q r >= k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionPlan {
    pub q: u8,
    pub k: usize,
    pub n: u64,
    pub d: u64,
    pub s: u64,
    pub t: u64,
    pub r: i64,
    pub s_prime: Option<u64>,
    pub base_n: u64,
    pub base_d: u64,
    pub applicable: bool,
}

/// Builds the reduction plan for (q, k, n, d). Inapplicability is reported
/// in the plan, not as an error.
pub fn reduce_to_base(q: u8, k: usize, n: u64, d: u64) -> Result<ReductionPlan> {
    if !(2..=3).contains(&q) || k < code::simplex_floor(q) || k > 16 {
        return Err(Error::UnsupportedDimension { q, k });
    }
    let v = gaussian_count(q, k);
    let s = n / v;
    let t = n % v;
    let r = residual_r(q, n, k, d);
    let applicable = (q as i128 * d as i128 - (q as i128 - 1) * n as i128) >= 1
        && q as i64 * r >= k as i64;
    let (base_n, base_d) = if r >= 0 {
        (q as u64 * r as u64, (q as u64 - 1) * r as u64)
    } else {
        (0, 0)
    };
    let alpha = d as i64 - ((q as u64).pow(k as u32 - 1) * s) as i64;
    let s_prime = threshold_s_prime(q, k, t, alpha).ok();
    Ok(ReductionPlan { q, k, n, d, s, t, r, s_prime, base_n, base_d, applicable })
}

/// Lifts a base classification to length vs + t by juxtaposing s - (s' - 1)
/// simplex copies onto every representative. The base must sit exactly at
/// its family's base length v(s' - 1) + t with the family's optimal weight,
/// and s must reach the threshold; the class count is preserved.
pub fn lift_classification(base: &ClassificationResult, s: u64) -> Result<ClassificationResult> {
    let q = base.q;
    let k = base.k;
    let (offsets, _) = formula_rows(q, k)?;
    let v = gaussian_count(q, k);
    let t = base.n % v;
    let s_base = base.n / v;
    let slope = (q as u64).pow(k as u32 - 1);
    let alpha = offsets[t as usize];
    let s_prime = threshold_s_prime(q, k, t, alpha)?;
    if s_base + 1 != s_prime {
        return Err(Error::InvalidParameter(format!(
            "classification at n={} is not at the base length n={} of its residue family",
            base.n,
            v * (s_prime - 1) + t
        )));
    }
    if base.d as i64 != (slope * s_base) as i64 + alpha {
        return Err(Error::InvalidParameter(format!(
            "classification at n={}, d={} does not carry the family's optimal weight",
            base.n, base.d
        )));
    }
    if s < s_prime {
        return Err(Error::InvalidParameter(format!(
            "lift target s={s} is below the family threshold s'={s_prime}"
        )));
    }
    let shift = (s - s_base) as u32;
    let mut representatives = Vec::with_capacity(base.representatives.len());
    for rep in &base.representatives {
        representatives.push(juxtapose_with_simplex(rep, shift)?);
    }
    Ok(ClassificationResult {
        q,
        k,
        n: base.n + v * shift as u64,
        d: base.d + slope * shift as u64,
        mode: base.mode,
        count: representatives.len(),
        representatives,
    })
}

/// A generator matrix of an LCD [n, k, d_q(n, k)] code, built from a stored
/// base representative juxtaposed with simplex copies. The result is
/// re-verified (LCD, exact minimum weight) before being returned.
pub fn optimal_generator(q: u8, k: usize, n: u64) -> Result<GFMatrix> {
    let answer = largest_lcd_weight(q, k, n)?;
    let v = gaussian_count(q, k);
    let t = n % v;
    let base = store::base_classification(q, k, t)?;
    if n < base.n {
        return Err(Error::DataUnavailable(format!(
            "no stored base at or below n={n} for residue {t}; the store starts at n={}",
            base.n
        )));
    }
    let shift = ((n - base.n) / v) as u32;
    let rep = base
        .representatives
        .first()
        .ok_or_else(|| Error::DataUnavailable(format!("stored base for residue {t} is empty")))?;
    let lifted = if shift == 0 { rep.clone() } else { juxtapose_with_simplex(rep, shift)? };
    let g = lifted.generator_matrix()?;
    if !code::is_lcd(&g) || lifted.min_weight()? != answer.d {
        return Err(Error::AssumptionViolated(format!(
            "lifted generator for [{n},{k}] over GF({q}) failed revalidation"
        )));
    }
    Ok(g)
}
