//! Fréchet distance between closed curves via a free-space decision procedure.
//!
//! The start of `a` is pinned at `a[0]`; every maximal interval of `b` within
//! `eps` of `a[0]` is a candidate start. The diagram is unrolled along `b` so
//! a closed matching becomes a monotone path from `(0, s)` to `(n, s + m)`.

use super::DistanceResult;
use crate::error::{Error, Result};
use crate::geom::{Point, Rect};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug)]
struct Iv<T> {
    lo: T,
    hi: T,
}

/// Parameters `t ∈ [0,1]` with `|a + t(b-a) - p| <= eps`.
fn free_interval<T: Scalar>(p: Point<T>, a: Point<T>, b: Point<T>, eps: T) -> Option<Iv<T>> {
    let d = b - a;
    let f = a - p;
    let dd = d.norm_sq();
    let e2 = eps * eps;
    if dd <= T::lit(1e-300) {
        return (f.norm_sq() <= e2).then_some(Iv {
            lo: T::zero(),
            hi: T::one(),
        });
    }
    let bq = f.dot(d);
    let c = f.norm_sq() - e2;
    let disc = bq * bq - dd * c;
    if disc < T::zero() {
        return None;
    }
    let sq = disc.sqrt();
    let lo = ((-bq - sq) / dd).max(T::zero());
    let hi = ((-bq + sq) / dd).min(T::one());
    (lo <= hi).then_some(Iv { lo, hi })
}

fn clip_from<T: Scalar>(iv: Option<Iv<T>>, from: T) -> Option<Iv<T>> {
    iv.and_then(|v| {
        let lo = v.lo.max(from);
        (lo <= v.hi).then_some(Iv { lo, hi: v.hi })
    })
}

/// Maximal intervals of the cyclic parameter of `b` (in `[0, m)` for the start,
/// possibly extending past `m`) within `eps` of `p`.
fn start_intervals<T: Scalar>(p: Point<T>, b: &[Point<T>], eps: T) -> Vec<Iv<T>> {
    let m = b.len();
    let pieces: Vec<Option<Iv<T>>> = (0..m)
        .map(|j| free_interval(p, b[j], b[(j + 1) % m], eps))
        .collect();
    let one = T::one();
    if pieces
        .iter()
        .all(|v| matches!(v, Some(iv) if iv.lo <= T::zero() && iv.hi >= one))
    {
        return vec![Iv {
            lo: T::zero(),
            hi: T::lit(m as f64),
        }];
    }
    // find a segment whose free part does not continue from its predecessor
    let starts_fresh = |j: usize| -> bool {
        match pieces[j] {
            None => false,
            Some(iv) => {
                let prev = pieces[(j + m - 1) % m];
                !(iv.lo <= T::zero() && matches!(prev, Some(pv) if pv.hi >= one))
            }
        }
    };
    let mut out = Vec::new();
    for j in 0..m {
        if !starts_fresh(j) {
            continue;
        }
        let iv = pieces[j].unwrap();
        let lo = T::lit(j as f64) + iv.lo;
        let mut hi = T::lit(j as f64) + iv.hi;
        let mut k = j;
        let mut steps = 0;
        while steps < m {
            let cur = pieces[k % m].unwrap();
            if cur.hi < one {
                break;
            }
            match pieces[(k + 1) % m] {
                Some(nx) if nx.lo <= T::zero() => {
                    k += 1;
                    hi = T::lit(k as f64) + nx.hi;
                }
                _ => break,
            }
            steps += 1;
        }
        out.push(Iv { lo, hi });
    }
    out
}

/// Earliest point of the top boundary inside `[iv.lo + m, iv.hi + m]` reachable
/// from starts in `[s, iv.hi]`, if any.
fn earliest_top<T: Scalar>(a: &[Point<T>], b: &[Point<T>], eps: T, iv: Iv<T>, s: T) -> Option<T> {
    let n = a.len();
    let m = b.len();
    let mf = T::lit(m as f64);
    let j0 = s.floor().to_i64().unwrap_or(0);
    let j1 = (iv.hi + mf).ceil().to_i64().unwrap_or(0).max(j0 + 1);
    let cols = (j1 - j0) as usize;
    let bpt = |k: i64| b[k.rem_euclid(m as i64) as usize];
    let apt = |i: usize| a[i % n];
    // bottom reachable intervals, in local [0,1] coordinates per column
    let mut bottom: Vec<Option<Iv<T>>> = (0..cols)
        .map(|k| {
            let j = j0 + k as i64;
            let jf = T::lit(j as f64);
            let free = free_interval(apt(0), bpt(j), bpt(j + 1), eps)?;
            let lo = free.lo.max(s - jf);
            let hi = free.hi.min(iv.hi - jf);
            (lo <= hi).then_some(Iv { lo, hi })
        })
        .collect();
    for i in 0..n {
        let mut left: Option<Iv<T>> = None;
        let mut next = Vec::with_capacity(cols);
        for (k, bot) in bottom.iter().enumerate() {
            let j = j0 + k as i64;
            let top_free = free_interval(apt(i + 1), bpt(j), bpt(j + 1), eps);
            let top = if left.is_some() {
                top_free
            } else if let Some(bv) = bot {
                clip_from(top_free, bv.lo)
            } else {
                None
            };
            let right_free = free_interval(bpt(j + 1), apt(i), apt(i + 1), eps);
            let right = if bot.is_some() {
                right_free
            } else if let Some(lv) = left {
                clip_from(right_free, lv.lo)
            } else {
                None
            };
            next.push(top);
            left = right;
        }
        bottom = next;
    }
    let target_lo = iv.lo + mf;
    let target_hi = iv.hi + mf;
    let mut best: Option<T> = None;
    for (k, v) in bottom.iter().enumerate() {
        if let Some(v) = v {
            let jf = T::lit((j0 + k as i64) as f64);
            let lo = (jf + v.lo).max(target_lo);
            let hi = (jf + v.hi).min(target_hi);
            if lo <= hi {
                best = Some(best.map_or(lo, |b: T| b.min(lo)));
            }
        }
    }
    best
}

/// Decides whether the closed-curve Fréchet distance is at most `eps`.
pub fn frechet_decide<T: Scalar>(a: &[Point<T>], b: &[Point<T>], eps: T) -> bool {
    if a.is_empty() || b.is_empty() {
        return false;
    }
    let mf = T::lit(b.len() as f64);
    let slack = T::lit(1e-12);
    for iv in start_intervals(a[0], b, eps) {
        let mut s = iv.lo;
        for _ in 0..200 {
            match earliest_top(a, b, eps, iv, s) {
                None => break,
                Some(t) => {
                    if t <= s + mf + slack {
                        return true;
                    }
                    s = t - mf;
                    if s > iv.hi {
                        break;
                    }
                }
            }
        }
    }
    false
}

/// Fréchet distance between two closed polylines, certified within `tol`.
pub fn frechet_closed<T: Scalar>(a: &[Point<T>], b: &[Point<T>], tol: T) -> Result<DistanceResult<T>> {
    if tol <= T::zero() {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidArgument("empty curve".into()));
    }
    let all: Vec<Point<T>> = a.iter().chain(b.iter()).copied().collect();
    let bb = Rect::bounding(&all).ok_or(Error::NonFinite)?;
    let mut hi = bb.min.dist(bb.max);
    // endpoints of a closed matching must both be matched somewhere
    let mut lo = T::zero();
    if frechet_decide(a, b, lo) {
        return Ok(DistanceResult::new(T::zero(), T::zero()));
    }
    while hi - lo > tol {
        let mid = (lo + hi) * T::half();
        if frechet_decide(a, b, mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(DistanceResult::new(hi, hi - lo))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point<f64> {
        Point::new(x, y)
    }

    fn square(x: f64, y: f64, s: f64) -> Vec<Point<f64>> {
        vec![p(x, y), p(x + s, y), p(x + s, y + s), p(x, y + s)]
    }

    #[test]
    fn self_distance_is_zero() {
        let a = square(0.0, 0.0, 2.0);
        let r = frechet_closed(&a, &a, 1e-6).unwrap();
        assert!(r.value <= 1e-6);
        // different starting vertex and extra collinear vertex
        let b = vec![p(2.0, 0.0), p(2.0, 1.0), p(2.0, 2.0), p(0.0, 2.0), p(0.0, 0.0)];
        let r = frechet_closed(&a, &b, 1e-6).unwrap();
        assert!(r.value <= 1e-5, "{}", r.value);
    }

    #[test]
    fn parallel_segments() {
        let a = vec![p(0.0, 0.0), p(1.0, 0.0)];
        let b = vec![p(0.0, 0.5), p(1.0, 0.5)];
        let r = frechet_closed(&a, &b, 1e-6).unwrap();
        assert!((r.value - 0.5).abs() <= 1e-6, "{}", r.value);
    }

    #[test]
    fn translated_and_scaled_squares() {
        let a = square(0.0, 0.0, 1.0);
        let b = square(3.0, 0.0, 1.0);
        let r = frechet_closed(&a, &b, 1e-6).unwrap();
        assert!((r.value - 3.0).abs() <= 1e-5);
        let big = square(-1.0, -1.0, 3.0);
        let r = frechet_closed(&a, &big, 1e-6).unwrap();
        assert!((r.value - 2f64.sqrt()).abs() <= 1e-5, "{}", r.value);
    }

    #[test]
    fn orientation_matters() {
        let a = vec![p(0.0, 0.0), p(4.0, 0.0), p(4.0, 1.0), p(0.0, 1.0)];
        let rev: Vec<_> = a.iter().rev().copied().collect();
        let r = frechet_closed(&a, &rev, 1e-6).unwrap();
        assert!(r.value > 0.4);
        assert!(frechet_closed(&a, &a, 0.0).is_err());
    }
}
